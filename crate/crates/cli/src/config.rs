use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use cognate_core::dataset::{LanguagePair, DEFAULT_MAX_TOKEN_LEN, DEFAULT_MIN_MATCHES};
use cognate_core::eval::{CHUNK_FRACTIONS, DEFAULT_K};
use cognate_core::models::HyperParams;
use cognate_core::{JaroWinklerConfig, Language, Threshold};

use crate::{CommonArgs, TrainArgs};

/// Keys accepted in a `--config` TOML file. Everything is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub src_lang: Option<String>,
    pub tgt_lang: Option<String>,
    pub threshold: Option<f64>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub out_dir: Option<PathBuf>,
    pub jw_prefix_scale: Option<f64>,
    pub jw_max_prefix: Option<usize>,
    pub k: Option<usize>,
    pub fractions: Option<Vec<f64>>,
    pub max_token_len: Option<usize>,
    pub min_matches: Option<usize>,
    pub hyperparams: Option<HyperParams>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone)]
pub struct Settings {
    pub src_lang: Language,
    pub tgt_lang: Option<Language>,
    pub threshold: Threshold,
    pub seed: u64,
    pub jobs: usize,
    pub out_dir: PathBuf,
    pub jw: JaroWinklerConfig,
    pub k: usize,
    pub fractions: Vec<f64>,
    pub max_token_len: usize,
    pub min_matches: usize,
    pub hp: HyperParams,
}

fn parse_lang(code: &str) -> Result<Language> {
    code.parse::<Language>().map_err(anyhow::Error::from)
}

impl Settings {
    pub fn resolve(common: &CommonArgs, file: FileConfig) -> Result<Self> {
        let src_lang = match (common.src_lang, file.src_lang.as_deref()) {
            (Some(l), _) => l,
            (None, Some(code)) => parse_lang(code)?,
            (None, None) => Language::Hi,
        };
        let tgt_lang = match (common.tgt_lang, file.tgt_lang.as_deref()) {
            (Some(l), _) => Some(l),
            (None, Some(code)) => Some(parse_lang(code)?),
            (None, None) => None,
        };
        let threshold = Threshold::new(common.threshold.or(file.threshold).unwrap_or(0.5))?;
        let seed = common.seed.or(file.seed).unwrap_or(0);
        let jobs = common.jobs.or(file.jobs).unwrap_or(1);
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        let jw_default = JaroWinklerConfig::default();
        let jw = JaroWinklerConfig::new(
            common.jw_prefix_scale.or(file.jw_prefix_scale).unwrap_or(jw_default.prefix_scale()),
            common.jw_max_prefix.or(file.jw_max_prefix).unwrap_or(jw_default.max_prefix_len()),
        )?;
        let mut hp = file.hyperparams.unwrap_or_default();
        hp.seed = seed;
        Ok(Self {
            src_lang,
            tgt_lang,
            threshold,
            seed,
            jobs,
            out_dir: common.out_dir.clone().or(file.out_dir).unwrap_or_else(|| PathBuf::from(".")),
            jw,
            k: file.k.unwrap_or(DEFAULT_K),
            fractions: file.fractions.unwrap_or_else(|| CHUNK_FRACTIONS.to_vec()),
            max_token_len: file.max_token_len.unwrap_or(DEFAULT_MAX_TOKEN_LEN),
            min_matches: file.min_matches.unwrap_or(DEFAULT_MIN_MATCHES),
            hp,
        })
    }

    pub fn apply_train_args(&mut self, a: &TrainArgs) {
        let hp = &mut self.hp;
        macro_rules! set {
            ($($f:ident),*) => { $( if let Some(v) = a.$f { hp.$f = v; } )* };
        }
        set!(embed_dim, hidden, dense, learning_rate, epochs, batch_size, max_word_len, min_word_count);
    }

    pub fn language_pair(&self) -> Result<LanguagePair> {
        let Some(tgt) = self.tgt_lang else { bail!("--tgt-lang is required for this command") };
        Ok(LanguagePair::new(self.src_lang, tgt)?)
    }
}

/// What gets echoed to `run_config.toml`. Output-directory paths are left
/// out so reruns into different directories stay byte-identical.
#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub src_lang: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tgt_lang: Option<String>,
    pub threshold: f64,
    pub seed: u64,
    pub jobs: usize,
    pub jw_prefix_scale: f64,
    pub jw_max_prefix: usize,
    pub k: usize,
    pub fractions: Vec<f64>,
    pub max_token_len: usize,
    pub min_matches: usize,
    pub inputs: Vec<String>,
    pub hyperparams: HyperParams,
}

impl RunConfig {
    pub fn new(command: &str, s: &Settings, inputs: &[&Path]) -> Self {
        Self {
            command: command.to_string(),
            src_lang: s.src_lang.code().to_lowercase(),
            tgt_lang: s.tgt_lang.map(|l| l.code().to_lowercase()),
            threshold: s.threshold.value(),
            seed: s.seed,
            jobs: s.jobs,
            jw_prefix_scale: s.jw.prefix_scale(),
            jw_max_prefix: s.jw.max_prefix_len(),
            k: s.k,
            fractions: s.fractions.clone(),
            max_token_len: s.max_token_len,
            min_matches: s.min_matches,
            inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
            hyperparams: s.hp,
        }
    }

    pub fn write(&self, out_dir: &Path) -> Result<()> {
        let text = toml::to_string(self).context("serializing run config")?;
        std::fs::write(out_dir.join("run_config.toml"), text).context("writing run_config.toml")
    }
}
