use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};

use cognate_core::dataset::{
    align_comparable, build_pc_pairs, build_wn_pairs, count_exact_matches, parse_wordnet, read_pair_list,
    score_and_label, tokenize_line, CorpusOptions, LabeledDataset, LanguagePair, Origin, PairBuild,
};
use cognate_core::eval::{chunk_experiment, cross_validate, render_table, write_report_csv};
use cognate_core::models::{train, Arch};
use cognate_core::script::{RuleTable, ScriptError};
use cognate_core::{Language, Transliterator};

use crate::config::{FileConfig, RunConfig, Settings};
use crate::{Cli, Command, ScriptArgs};

pub fn run(cli: Cli) -> Result<()> {
    let file = match &cli.common.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let mut settings = Settings::resolve(&cli.common, file)?;
    init_pool(settings.jobs)?;
    match cli.command {
        Command::Transliterate { input, lang, output, lossy, script } => {
            transliterate(&input, lang, output.as_deref(), lossy, &script)
        }
        Command::BuildWn { src_wordnet, tgt_wordnet, script } => build_wn(&settings, &src_wordnet, &tgt_wordnet, &script),
        Command::BuildPc { src_corpus, tgt_corpus, max_token_len, lossy, script } => {
            if let Some(n) = max_token_len {
                settings.max_token_len = n;
            }
            build_pc(&settings, &src_corpus, &tgt_corpus, lossy, &script)
        }
        Command::Align { src_corpus, tgt_corpus, min_matches, lossy, script } => {
            if let Some(n) = min_matches {
                settings.min_matches = n;
            }
            align(&settings, &src_corpus, &tgt_corpus, lossy, &script)
        }
        Command::Train { arch, dataset, hp } => {
            settings.apply_train_args(&hp);
            cmd_train(&settings, arch, &dataset)
        }
        Command::Eval { arch, dataset, k, hp } => {
            settings.apply_train_args(&hp);
            if let Some(k) = k {
                settings.k = k;
            }
            cmd_eval(&settings, arch, &dataset)
        }
        Command::Chunks { arch, pc, wn, k, fractions, hp } => {
            settings.apply_train_args(&hp);
            if let Some(k) = k {
                settings.k = k;
            }
            if let Some(f) = fractions {
                settings.fractions = f;
            }
            cmd_chunks(&settings, arch, &pc, &wn)
        }
        Command::Matches { a, b } => matches(&a, &b),
    }
}

#[cfg(feature = "parallel")]
fn init_pool(jobs: usize) -> Result<()> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().context("starting worker pool")
}

#[cfg(not(feature = "parallel"))]
fn init_pool(jobs: usize) -> Result<()> {
    if jobs > 1 {
        eprintln!("warning: built without parallel support; --jobs {jobs} runs on one thread");
    }
    Ok(())
}

fn transliterator(args: &ScriptArgs) -> Result<Transliterator> {
    let mut t = Transliterator::bundled();
    for arg in &args.exceptions {
        let (lang, path) = arg.split_once('=').ok_or_else(|| anyhow!("--exceptions expects LANG=FILE, got {arg:?}"))?;
        let lang: Language = lang.parse()?;
        let table = RuleTable::load(Path::new(path)).with_context(|| format!("loading {path}"))?;
        t = t.with_exceptions(lang.script(), table)?;
    }
    if let Some(path) = &args.urdu_rules {
        let table = RuleTable::load(path).with_context(|| format!("loading {}", path.display()))?;
        t = t.with_urdu_rules(table);
    }
    Ok(t)
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text.lines().map(str::to_string).collect())
}

fn prepare_out_dir(s: &Settings) -> Result<&Path> {
    fs::create_dir_all(&s.out_dir).with_context(|| format!("creating {}", s.out_dir.display()))?;
    Ok(&s.out_dir)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?))
}

fn read_dataset(path: &Path, lp: LanguagePair, s: &Settings, origin: Origin) -> Result<LabeledDataset> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    LabeledDataset::read_csv(file, lp, s.threshold, origin).with_context(|| format!("reading {}", path.display()))
}

fn transliterate(input: &Path, lang: Language, output: Option<&Path>, lossy: bool, args: &ScriptArgs) -> Result<()> {
    let t = transliterator(args)?;
    let lines = read_lines(input)?;
    let mut out = String::new();
    let mut dropped = 0;
    for (i, line) in lines.iter().enumerate() {
        let std = t.standardize(line, lang, lossy).map_err(|e| match e {
            ScriptError::UnmappableCharacter { .. } => anyhow!("{}:{}: {e}", input.display(), i + 1),
            other => anyhow!(other),
        })?;
        dropped += std.dropped.len();
        out.push_str(&std.text);
        out.push('\n');
    }
    if lossy {
        eprintln!("{} lines, {dropped} characters dropped", lines.len());
    }
    match output {
        Some(path) => fs::write(path, out).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(out.as_bytes())?,
    }
    Ok(())
}

fn write_pairs(s: &Settings, lp: LanguagePair, build: PairBuild, name: &str) -> Result<()> {
    let data = score_and_label(&build.pairs, lp, s.threshold, s.jw);
    let path = s.out_dir.join(name);
    data.write_csv(create(&path)?)?;
    let (neg, pos) = data.label_counts();
    eprintln!(
        "{lp}: {} pairs before dedup, {} after; {pos} cognate, {neg} non-cognate -> {}",
        build.stats.raw_pairs,
        data.len(),
        path.display()
    );
    Ok(())
}

fn build_wn(s: &Settings, src: &Path, tgt: &Path, args: &ScriptArgs) -> Result<()> {
    let lp = s.language_pair()?;
    let t = transliterator(args)?;
    let out = prepare_out_dir(s)?;
    let mut synsets = Vec::new();
    for (path, lang) in [(src, lp.source()), (tgt, lp.target())] {
        let parsed = parse_wordnet(path, lang, &t).with_context(|| format!("reading {}", path.display()))?;
        for m in &parsed.malformed {
            eprintln!("{}:{}: skipped: {}", path.display(), m.line, m.reason);
        }
        for r in &parsed.rejected_words {
            eprintln!("{}:{}: rejected {:?}: {}", path.display(), r.line, r.word, r.reason);
        }
        synsets.push(parsed.synsets);
    }
    RunConfig::new("build-wn", s, &[src, tgt]).write(out)?;
    write_pairs(s, lp, build_wn_pairs(&synsets[0], &synsets[1]), "wn_pairs.csv")
}

fn build_pc(s: &Settings, src: &Path, tgt: &Path, lossy: bool, args: &ScriptArgs) -> Result<()> {
    let lp = s.language_pair()?;
    let t = transliterator(args)?;
    let out = prepare_out_dir(s)?;
    let opts = CorpusOptions { max_token_len: s.max_token_len, lossy };
    let build = build_pc_pairs(&read_lines(src)?, &read_lines(tgt)?, lp, &t, opts)?;
    if build.stats.long_tokens_dropped + build.stats.chars_dropped > 0 {
        eprintln!(
            "{} over-long tokens and {} characters dropped",
            build.stats.long_tokens_dropped, build.stats.chars_dropped
        );
    }
    RunConfig::new("build-pc", s, &[src, tgt]).write(out)?;
    write_pairs(s, lp, build, "pc_pairs.csv")
}

fn align(s: &Settings, src: &Path, tgt: &Path, lossy: bool, args: &ScriptArgs) -> Result<()> {
    let lp = s.language_pair()?;
    let t = transliterator(args)?;
    let out = prepare_out_dir(s)?;
    let opts = CorpusOptions { max_token_len: s.max_token_len, lossy };
    let tokens = |lines: &[String], lang: Language, path: &Path| -> Result<Vec<Vec<String>>> {
        lines
            .iter()
            .enumerate()
            .map(|(i, line)| {
                let tl = tokenize_line(line, lang, &t, opts).with_context(|| format!("{}:{}", path.display(), i + 1))?;
                Ok(tl.tokens.into_iter().map(|w| w.into_string()).collect())
            })
            .collect()
    };
    let src_lines = read_lines(src)?;
    let tgt_lines = read_lines(tgt)?;
    let aligned = align_comparable(
        &tokens(&src_lines, lp.source(), src)?,
        &tokens(&tgt_lines, lp.target(), tgt)?,
        s.min_matches,
    );
    let mut table = create(&out.join("alignment.tsv"))?;
    let mut src_out = create(&out.join("aligned.src.txt"))?;
    let mut tgt_out = create(&out.join("aligned.tgt.txt"))?;
    writeln!(table, "src_line\ttgt_line")?;
    for &(i, j) in &aligned {
        writeln!(table, "{}\t{}", i + 1, j + 1)?;
        writeln!(src_out, "{}", src_lines[i])?;
        writeln!(tgt_out, "{}", tgt_lines[j])?;
    }
    for w in [&mut table, &mut src_out, &mut tgt_out] {
        w.flush()?;
    }
    RunConfig::new("align", s, &[src, tgt]).write(out)?;
    eprintln!("{} of {} source lines aligned", aligned.len(), src_lines.len());
    Ok(())
}

fn cmd_train(s: &Settings, arch: Arch, dataset: &Path) -> Result<()> {
    let lp = s.language_pair()?;
    let data = read_dataset(dataset, lp, s, Origin::WnData)?;
    let out = prepare_out_dir(s)?;
    let outcome = train(arch, &data, &s.hp)?;
    let model_path: PathBuf = out.join("model.json");
    outcome.model.save(&model_path)?;
    let mut loss = create(&out.join("loss.csv"))?;
    writeln!(loss, "epoch,loss")?;
    for (e, l) in outcome.loss_trace.iter().enumerate() {
        writeln!(loss, "{e},{l}")?;
    }
    loss.flush()?;
    RunConfig::new("train", s, &[dataset]).write(out)?;
    eprintln!(
        "trained {arch} on {} pairs; final loss {:.6} -> {}",
        data.len(),
        outcome.loss_trace.last().copied().unwrap_or(f64::NAN),
        model_path.display()
    );
    Ok(())
}

fn write_reports(out: &Path, stem: &str, reports: &[cognate_core::eval::ExperimentReport]) -> Result<()> {
    write_report_csv(reports, create(&out.join(format!("{stem}.csv")))?)?;
    let table = render_table(reports);
    fs::write(out.join(format!("{stem}.txt")), &table)?;
    io::stdout().lock().write_all(table.as_bytes())?;
    Ok(())
}

fn cmd_eval(s: &Settings, arch: Arch, dataset: &Path) -> Result<()> {
    let lp = s.language_pair()?;
    let data = read_dataset(dataset, lp, s, Origin::WnData)?;
    let out = prepare_out_dir(s)?;
    let report = cross_validate(arch, &data, s.k, &s.hp)?;
    RunConfig::new("eval", s, &[dataset]).write(out)?;
    write_reports(out, "report", &[report])
}

fn cmd_chunks(s: &Settings, arch: Arch, pc: &Path, wn: &Path) -> Result<()> {
    let lp = s.language_pair()?;
    let pc_data = read_dataset(pc, lp, s, Origin::PcData)?;
    let wn_data = read_dataset(wn, lp, s, Origin::WnData)?;
    if s.fractions.is_empty() {
        bail!("no chunk fractions given");
    }
    let out = prepare_out_dir(s)?;
    let reports = chunk_experiment(&pc_data, &wn_data, arch, s.k, &s.hp, &s.fractions)?;
    RunConfig::new("chunks", s, &[pc, wn]).write(out)?;
    write_reports(out, "chunks", &reports)
}

fn matches(a: &Path, b: &Path) -> Result<()> {
    let read = |p: &Path| -> Result<Vec<(String, String)>> {
        let f = File::open(p).with_context(|| format!("opening {}", p.display()))?;
        read_pair_list(f).with_context(|| format!("reading {}", p.display()))
    };
    println!("{}", count_exact_matches(&read(a)?, &read(b)?));
    Ok(())
}
