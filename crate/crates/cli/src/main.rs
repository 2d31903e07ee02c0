mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cognate_core::models::Arch;
use cognate_core::Language;

/// Build cognate datasets for Hindi and ten Indian languages, train FFN and
/// RNN classifiers, and run stratified evaluations.
#[derive(Debug, Parser)]
#[command(name = "cognate", version)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand. Values given here win over the
/// `--config` file, which wins over built-in defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Source language code (only hi is supported).
    #[arg(long, global = true)]
    pub src_lang: Option<Language>,
    /// Target language code: mr, bn, pa, gu, sa, ml, ta, te, ne or ur.
    #[arg(long, global = true)]
    pub tgt_lang: Option<Language>,
    /// Cognacy threshold on the averaged similarity [default: 0.5].
    #[arg(long, global = true)]
    pub threshold: Option<f64>,
    /// Seed for every random choice [default: 0].
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads; results do not depend on it [default: 1].
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output directory [default: .].
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
    /// TOML file with defaults for any of these flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Jaro-Winkler prefix scale [default: 0.1].
    #[arg(long, global = true)]
    pub jw_prefix_scale: Option<f64>,
    /// Jaro-Winkler maximum prefix length [default: 4].
    #[arg(long, global = true)]
    pub jw_max_prefix: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ScriptArgs {
    /// Replacement exception table for a language's script, as LANG=FILE.
    #[arg(long, value_name = "LANG=FILE")]
    pub exceptions: Vec<String>,
    /// Replacement Urdu rule table.
    #[arg(long, value_name = "FILE")]
    pub urdu_rules: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct TrainArgs {
    /// Embedding width [default: 64].
    #[arg(long)]
    pub embed_dim: Option<usize>,
    /// Hidden (FFN) or recurrent (RNN) width [default: 128].
    #[arg(long)]
    pub hidden: Option<usize>,
    /// RNN dense layer width [default: 64].
    #[arg(long)]
    pub dense: Option<usize>,
    /// SGD step size [default: 0.1].
    #[arg(long)]
    pub learning_rate: Option<f64>,
    /// Training epochs [default: 10].
    #[arg(long)]
    pub epochs: Option<usize>,
    /// Mini-batch size [default: 64].
    #[arg(long)]
    pub batch_size: Option<usize>,
    /// Characters kept per word by the RNN [default: 32].
    #[arg(long)]
    pub max_word_len: Option<usize>,
    /// FFN words seen fewer times map to UNK [default: 2].
    #[arg(long)]
    pub min_word_count: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize a file and transliterate it into Devanagari, line by line.
    Transliterate {
        /// Text file to convert.
        #[arg(long)]
        input: PathBuf,
        /// Language of the input text.
        #[arg(long)]
        lang: Language,
        /// Output file [default: stdout].
        #[arg(long)]
        output: Option<PathBuf>,
        /// Drop unmappable characters (and count them) instead of failing.
        #[arg(long)]
        lossy: bool,
        #[command(flatten)]
        script: ScriptArgs,
    },
    /// Pair words of linked synsets and write the labeled CSV.
    BuildWn {
        /// Hindi wordnet TSV (`id<TAB>word,word,...`).
        #[arg(long)]
        src_wordnet: PathBuf,
        /// Target-language wordnet TSV.
        #[arg(long)]
        tgt_wordnet: PathBuf,
        #[command(flatten)]
        script: ScriptArgs,
    },
    /// Pair words of aligned sentences and write the labeled CSV.
    BuildPc {
        /// Hindi sentences, one per line.
        #[arg(long)]
        src_corpus: PathBuf,
        /// Target sentences, line-aligned with the source.
        #[arg(long)]
        tgt_corpus: PathBuf,
        /// Tokens longer than this are skipped [default: 48].
        #[arg(long)]
        max_token_len: Option<usize>,
        /// Drop unmappable characters (and count them) instead of failing.
        #[arg(long)]
        lossy: bool,
        #[command(flatten)]
        script: ScriptArgs,
    },
    /// Align lines of comparable articles by shared tokens.
    Align {
        /// Hindi article, one sentence per line.
        #[arg(long)]
        src_corpus: PathBuf,
        /// Comparable target article, one sentence per line.
        #[arg(long)]
        tgt_corpus: PathBuf,
        /// Minimum number of shared distinct tokens [default: 2].
        #[arg(long)]
        min_matches: Option<usize>,
        /// Drop unmappable characters (and count them) instead of failing.
        #[arg(long)]
        lossy: bool,
        #[command(flatten)]
        script: ScriptArgs,
    },
    /// Train a classifier on a labeled CSV and write a checkpoint.
    Train {
        /// Model architecture: ffn or rnn.
        #[arg(long)]
        arch: Arch,
        /// Labeled CSV.
        #[arg(long)]
        dataset: PathBuf,
        #[command(flatten)]
        hp: TrainArgs,
    },
    /// Stratified k-fold evaluation of a labeled CSV.
    Eval {
        /// Model architecture: ffn or rnn.
        #[arg(long)]
        arch: Arch,
        /// Labeled CSV.
        #[arg(long)]
        dataset: PathBuf,
        /// Number of folds [default: 5].
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        hp: TrainArgs,
    },
    /// Evaluate a corpus dataset augmented with growing wordnet chunks.
    Chunks {
        /// Model architecture: ffn or rnn.
        #[arg(long)]
        arch: Arch,
        /// Corpus-derived labeled CSV.
        #[arg(long)]
        pc: PathBuf,
        /// Wordnet-derived labeled CSV.
        #[arg(long)]
        wn: PathBuf,
        /// Number of folds [default: 5].
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated chunk fractions [default: 0.2,0.4,0.6,0.8,1.0].
        #[arg(long, value_delimiter = ',')]
        fractions: Option<Vec<f64>>,
        #[command(flatten)]
        hp: TrainArgs,
    },
    /// Print the number of (source, target) pairs two CSVs share.
    Matches { a: PathBuf, b: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
