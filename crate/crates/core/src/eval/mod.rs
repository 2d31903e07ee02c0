//! Stratified k-fold evaluation, the chunked augmentation experiment and
//! report output.

use std::fmt::Write as _;
use std::io::Write;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dataset::{merge_chunks, DatasetError, Label, LabeledDataset, LanguagePair};
use crate::models::{train, Arch, HyperParams, Model, ModelError};
use crate::par;

pub const DEFAULT_K: usize = 5;
pub const CHUNK_FRACTIONS: [f64; 5] = [0.2, 0.4, 0.6, 0.8, 1.0];
pub const REPORT_HEADER: [&str; 5] = ["language_pair", "arch", "fraction", "fold", "accuracy"];

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("{label:?} class has {count} examples, fewer than k = {k}")]
    TooFewExamples { label: Label, count: usize, k: usize },
    #[error("invalid chunk fractions: {0}")]
    InvalidFractions(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Fold index of every example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldAssignment {
    folds: Vec<usize>,
    k: usize,
    seed: u64,
}

impl FoldAssignment {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn folds(&self) -> &[usize] {
        &self.folds
    }

    pub fn fold_of(&self, example: usize) -> usize {
        self.folds[example]
    }

    /// (training indices, test indices) for `fold`, both ascending.
    pub fn split(&self, fold: usize) -> (Vec<usize>, Vec<usize>) {
        (0..self.folds.len()).partition(|&i| self.folds[i] != fold)
    }
}

/// Shuffles each class with the seed and deals it round-robin into `k`
/// folds. The deal continues across classes, so fold sizes also differ by
/// at most one.
pub fn stratified_split(data: &LabeledDataset, k: usize, seed: u64) -> Result<FoldAssignment, EvalError> {
    if k < 2 {
        return Err(EvalError::InvalidK(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds = vec![0; data.len()];
    let mut next = 0;
    for label in [Label::NonCognate, Label::Cognate] {
        let mut members: Vec<usize> = (0..data.len()).filter(|&i| data.pairs()[i].label == label).collect();
        if members.len() < k {
            return Err(EvalError::TooFewExamples { label, count: members.len(), k });
        }
        members.shuffle(&mut rng);
        for i in members {
            folds[i] = next;
            next = (next + 1) % k;
        }
    }
    Ok(FoldAssignment { folds, k, seed })
}

/// Fraction of pairs whose predicted label at cutoff 0.5 matches.
pub fn accuracy(model: &Model, data: &LabeledDataset) -> f64 {
    if data.is_empty() {
        return 0.0;
    }
    let hits = par::map(data.pairs(), |p| model.predict(&p.pair, 0.5).0 == p.label);
    hits.iter().filter(|&&h| h).count() as f64 / data.len() as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub language_pair: LanguagePair,
    pub arch: Arch,
    /// Per-fold accuracy in `[0, 1]`, ordered by fold index.
    pub fold_accuracies: Vec<f64>,
    pub mean_accuracy: f64,
    pub dataset_size: usize,
    pub train_sizes: Vec<usize>,
    pub fraction: Option<f64>,
    pub seed: u64,
    pub hyperparams: HyperParams,
}

/// Trains on `k - 1` folds and scores the held-out one, for every fold.
/// Fold `i` trains from seed `hp.seed + i`.
pub fn cross_validate(arch: Arch, data: &LabeledDataset, k: usize, hp: &HyperParams) -> Result<ExperimentReport, EvalError> {
    let assignment = stratified_split(data, k, hp.seed)?;
    let runs = par::try_map_range(k, |fold| -> Result<(f64, usize), EvalError> {
        let (train_idx, test_idx) = assignment.split(fold);
        debug_assert!(train_idx.iter().all(|&i| assignment.fold_of(i) != fold));
        let fold_hp = HyperParams { seed: hp.seed.wrapping_add(fold as u64), ..*hp };
        let model = train(arch, &data.subset(&train_idx), &fold_hp)?.model;
        Ok((accuracy(&model, &data.subset(&test_idx)), train_idx.len()))
    })?;
    let fold_accuracies: Vec<f64> = runs.iter().map(|r| r.0).collect();
    Ok(ExperimentReport {
        language_pair: data.language_pair(),
        arch,
        mean_accuracy: fold_accuracies.iter().sum::<f64>() / k as f64,
        fold_accuracies,
        dataset_size: data.len(),
        train_sizes: runs.iter().map(|r| r.1).collect(),
        fraction: None,
        seed: hp.seed,
        hyperparams: *hp,
    })
}

/// Cross-validates `pc` plus each cumulative `wn` chunk. One report per
/// fraction, in order.
pub fn chunk_experiment(
    pc: &LabeledDataset,
    wn: &LabeledDataset,
    arch: Arch,
    k: usize,
    hp: &HyperParams,
    fractions: &[f64],
) -> Result<Vec<ExperimentReport>, EvalError> {
    if fractions.is_empty() {
        return Err(EvalError::InvalidFractions("no fractions given".into()));
    }
    if let Some(f) = fractions.iter().find(|f| !CHUNK_FRACTIONS.contains(f)) {
        return Err(EvalError::InvalidFractions(format!("{f} is not one of {CHUNK_FRACTIONS:?}")));
    }
    if fractions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(EvalError::InvalidFractions("fractions must be strictly ascending".into()));
    }
    par::try_map_range(fractions.len(), |i| {
        let merged = merge_chunks(pc, wn, fractions[i], hp.seed)?;
        let mut report = cross_validate(arch, &merged, k, hp)?;
        report.fraction = Some(fractions[i]);
        Ok(report)
    })
}

fn fraction_cell(fraction: Option<f64>) -> String {
    fraction.map(|f| format!("{f:.1}")).unwrap_or_default()
}

/// Writes one row per fold and a `mean` row per report. Accuracy is a
/// percentage with four decimals.
pub fn write_report_csv<W: Write>(reports: &[ExperimentReport], writer: W) -> Result<(), EvalError> {
    let mut w = csv::Writer::from_writer(writer);
    let csv_err = |e: csv::Error| EvalError::Io(std::io::Error::other(e));
    w.write_record(REPORT_HEADER).map_err(csv_err)?;
    for r in reports {
        let lp = r.language_pair.to_string();
        let frac = fraction_cell(r.fraction);
        for (fold, acc) in r.fold_accuracies.iter().enumerate() {
            w.write_record([lp.as_str(), r.arch.name(), &frac, &fold.to_string(), &format!("{:.4}", acc * 100.0)])
                .map_err(csv_err)?;
        }
        w.write_record([lp.as_str(), r.arch.name(), &frac, "mean", &format!("{:.4}", r.mean_accuracy * 100.0)])
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Aligned plain-text table: one line per report with fold and mean
/// accuracies in percent.
pub fn render_table(reports: &[ExperimentReport]) -> String {
    let k = reports.iter().map(|r| r.fold_accuracies.len()).max().unwrap_or(0);
    let mut header = vec!["pair".to_string(), "arch".into(), "data".into(), "size".into()];
    header.extend((1..=k).map(|i| format!("fold{i}")));
    header.push("mean".into());
    let mut rows = vec![header];
    for r in reports {
        let data = match r.fraction {
            None => "all".to_string(),
            Some(f) => format!("Corp+WN{}", (f * 100.0).round() as u32),
        };
        let mut row = vec![r.language_pair.to_string(), r.arch.name().to_uppercase(), data, r.dataset_size.to_string()];
        row.extend(r.fold_accuracies.iter().map(|a| format!("{:.2}", a * 100.0)));
        row.resize(4 + k, String::new());
        row.push(format!("{:.2}", r.mean_accuracy * 100.0));
        rows.push(row);
    }
    let widths: Vec<usize> =
        (0..rows[0].len()).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (cell, &w))| if c < 3 { format!("{cell:<w$}") } else { format!("{cell:>w$}") })
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}
