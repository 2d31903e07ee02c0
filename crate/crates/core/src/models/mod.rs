//! FFN (word-level) and RNN (character-level) cognate classifiers with a
//! mini-batch SGD training loop and JSON checkpoints.

mod ffn;
mod matrix;
mod network;
mod rnn;
mod vocab;

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dataset::{Label, LabeledDataset, WordPair};
use crate::par;

pub use ffn::{FfnGrads, FfnInput, FfnParams};
pub use matrix::Matrix;
pub use network::{Network, SparseRows};
pub use rnn::{RnnGrads, RnnInput, RnnParams};
pub use vocab::{
    build_char_vocabs, build_vocabs, build_word_vocabs, CharVocab, VocabKind, VocabPair, Vocabs, WordVocab, CHAR_PAD,
    CHAR_UNK, WORD_UNK,
};

/// Half-width of the uniform initialization interval.
pub const INIT_SCALE: f64 = 0.1;

/// Checkpoint layout version.
pub const FORMAT_VERSION: u32 = 1;

/// Examples per gradient task. Fixed so the reduction tree, and therefore
/// the floating-point result, does not depend on the thread count.
const GRAD_CHUNK: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("training data has only {0:?} labels")]
    SingleClassDataset(Label),
    #[error("loss became non-finite in epoch {epoch}")]
    NonFiniteLoss { epoch: usize },
    #[error("invalid hyperparameters: {0}")]
    InvalidHyperParams(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arch {
    Ffn,
    Rnn,
}

impl Arch {
    pub const ALL: [Arch; 2] = [Arch::Ffn, Arch::Rnn];

    pub fn name(self) -> &'static str {
        match self {
            Arch::Ffn => "ffn",
            Arch::Rnn => "rnn",
        }
    }
}

impl fmt::Display for Arch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Arch {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ffn" => Ok(Arch::Ffn),
            "rnn" => Ok(Arch::Rnn),
            _ => Err(format!("unknown architecture {s:?} (expected ffn or rnn)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HyperParams {
    pub embed_dim: usize,
    pub hidden: usize,
    /// RNN dense layer width.
    pub dense: usize,
    pub learning_rate: f64,
    pub epochs: usize,
    pub batch_size: usize,
    pub seed: u64,
    pub max_word_len: usize,
    /// Words seen fewer times than this in training map to UNK (FFN only),
    /// which gives the UNK row a training signal.
    pub min_word_count: usize,
    /// Reshuffle the training order every epoch.
    pub shuffle: bool,
}

impl Default for HyperParams {
    fn default() -> Self {
        Self {
            embed_dim: 64,
            hidden: 128,
            dense: 64,
            learning_rate: 0.1,
            epochs: 10,
            batch_size: 64,
            seed: 0,
            max_word_len: 32,
            min_word_count: 2,
            shuffle: true,
        }
    }
}

impl HyperParams {
    pub fn validate(&self) -> Result<(), ModelError> {
        let counts = [
            ("embed_dim", self.embed_dim),
            ("hidden", self.hidden),
            ("dense", self.dense),
            ("epochs", self.epochs),
            ("batch_size", self.batch_size),
            ("max_word_len", self.max_word_len),
            ("min_word_count", self.min_word_count),
        ];
        if let Some((name, _)) = counts.iter().find(|(_, v)| *v == 0) {
            return Err(ModelError::InvalidHyperParams(format!("{name} must be positive")));
        }
        if !(self.learning_rate > 0.0 && self.learning_rate < 1.0) {
            return Err(ModelError::InvalidHyperParams(format!(
                "learning_rate must be in (0, 1), got {}",
                self.learning_rate
            )));
        }
        Ok(())
    }
}

/// A trained network together with the vocabularies it was built on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "arch", rename_all = "lowercase")]
pub enum Net {
    Ffn { vocabs: VocabPair<WordVocab>, params: FfnParams },
    Rnn { vocabs: VocabPair<CharVocab>, params: RnnParams },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub hyperparams: HyperParams,
    pub net: Net,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    format_version: u32,
    hyperparams: HyperParams,
    network: Net,
}

/// `[P(non-cognate), P(cognate)]` for a word pair.
pub fn ffn_forward(params: &FfnParams, pair: &WordPair, vocabs: &VocabPair<WordVocab>) -> [f64; 2] {
    params.probabilities(&FfnInput::encode(pair.source.as_str(), pair.target.as_str(), vocabs))
}

pub fn rnn_forward(params: &RnnParams, pair: &WordPair, vocabs: &VocabPair<CharVocab>, max_word_len: usize) -> [f64; 2] {
    params.probabilities(&RnnInput::encode(pair.source.as_str(), pair.target.as_str(), vocabs, max_word_len))
}

impl Model {
    pub fn arch(&self) -> Arch {
        match self.net {
            Net::Ffn { .. } => Arch::Ffn,
            Net::Rnn { .. } => Arch::Rnn,
        }
    }

    /// Probability that the pair is cognate.
    pub fn probability(&self, pair: &WordPair) -> f64 {
        match &self.net {
            Net::Ffn { vocabs, params } => ffn_forward(params, pair, vocabs)[1],
            Net::Rnn { vocabs, params } => rnn_forward(params, pair, vocabs, self.hyperparams.max_word_len)[1],
        }
    }

    /// Cognate iff the probability reaches `cutoff`.
    pub fn predict(&self, pair: &WordPair, cutoff: f64) -> (Label, f64) {
        let p = self.probability(pair);
        (label_at(p, cutoff), p)
    }

    pub fn to_json(&self) -> Result<String, ModelError> {
        let ck = Checkpoint { format_version: FORMAT_VERSION, hyperparams: self.hyperparams, network: self.net.clone() };
        serde_json::to_string(&ck).map_err(|e| ModelError::Checkpoint(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let ck: Checkpoint = serde_json::from_str(text).map_err(|e| ModelError::Checkpoint(e.to_string()))?;
        if ck.format_version != FORMAT_VERSION {
            return Err(ModelError::Checkpoint(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                ck.format_version
            )));
        }
        Ok(Self { hyperparams: ck.hyperparams, net: ck.network })
    }

    pub fn save(&self, path: &Path) -> Result<(), ModelError> {
        fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, ModelError> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}

pub fn label_at(probability: f64, cutoff: f64) -> Label {
    if probability >= cutoff {
        Label::Cognate
    } else {
        Label::NonCognate
    }
}

#[derive(Debug, Clone)]
pub struct TrainOutcome {
    pub model: Model,
    /// Mean training loss of each epoch.
    pub loss_trace: Vec<f64>,
}

pub fn train(arch: Arch, data: &LabeledDataset, hp: &HyperParams) -> Result<TrainOutcome, ModelError> {
    hp.validate()?;
    if data.is_empty() {
        return Err(ModelError::EmptyDataset);
    }
    match data.label_counts() {
        (0, _) => return Err(ModelError::SingleClassDataset(Label::Cognate)),
        (_, 0) => return Err(ModelError::SingleClassDataset(Label::NonCognate)),
        _ => {}
    }
    let classes: Vec<usize> = data.pairs().iter().map(|p| p.label.index()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(hp.seed);
    match arch {
        Arch::Ffn => {
            let vocabs = build_word_vocabs(data, hp.min_word_count)?;
            let inputs: Vec<FfnInput> = data
                .pairs()
                .iter()
                .map(|p| FfnInput::encode(p.pair.source.as_str(), p.pair.target.as_str(), &vocabs))
                .collect();
            let mut params = FfnParams::init(&vocabs, hp.embed_dim, hp.hidden, &mut rng);
            let loss_trace = sgd(&mut params, &inputs, &classes, hp, &mut rng)?;
            Ok(TrainOutcome { model: Model { hyperparams: *hp, net: Net::Ffn { vocabs, params } }, loss_trace })
        }
        Arch::Rnn => {
            let vocabs = build_char_vocabs(data)?;
            let inputs: Vec<RnnInput> = data
                .pairs()
                .iter()
                .map(|p| RnnInput::encode(p.pair.source.as_str(), p.pair.target.as_str(), &vocabs, hp.max_word_len))
                .collect();
            let mut params = RnnParams::init(&vocabs, hp.embed_dim, hp.hidden, hp.dense, &mut rng);
            let loss_trace = sgd(&mut params, &inputs, &classes, hp, &mut rng)?;
            Ok(TrainOutcome { model: Model { hyperparams: *hp, net: Net::Rnn { vocabs, params } }, loss_trace })
        }
    }
}

/// Mean cross-entropy of a network over examples.
pub fn mean_loss<N: Network>(net: &N, inputs: &[N::Input], classes: &[usize]) -> f64 {
    let losses = par::map_range(inputs.len(), |i| net.loss(&inputs[i], classes[i]));
    losses.iter().sum::<f64>() / inputs.len().max(1) as f64
}

/// Summed loss and gradient over a batch, reduced in example order.
pub fn batch_gradient<N: Network>(net: &N, inputs: &[N::Input], classes: &[usize], batch: &[usize]) -> (f64, N::Grads) {
    let chunks: Vec<&[usize]> = batch.chunks(GRAD_CHUNK).collect();
    let partials = par::map(&chunks, |chunk| {
        let mut acc = net.zero_grads();
        let mut loss = 0.0;
        for &i in *chunk {
            let (l, g) = net.loss_and_grad(&inputs[i], classes[i]);
            loss += l;
            N::accumulate(&mut acc, &g);
        }
        (loss, acc)
    });
    let mut total = net.zero_grads();
    let mut loss = 0.0;
    for (l, g) in &partials {
        loss += l;
        N::accumulate(&mut total, g);
    }
    (loss, total)
}

fn sgd<N: Network>(
    net: &mut N,
    inputs: &[N::Input],
    classes: &[usize],
    hp: &HyperParams,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<f64>, ModelError> {
    let mut order: Vec<usize> = (0..inputs.len()).collect();
    let mut trace = Vec::with_capacity(hp.epochs);
    for epoch in 0..hp.epochs {
        if hp.shuffle {
            order.shuffle(rng);
        }
        let mut epoch_loss = 0.0;
        for batch in order.chunks(hp.batch_size) {
            let (loss, grads) = batch_gradient(net, inputs, classes, batch);
            epoch_loss += loss;
            net.apply(&grads, hp.learning_rate / batch.len() as f64);
        }
        let mean = epoch_loss / inputs.len() as f64;
        if !mean.is_finite() || !net.is_finite() {
            return Err(ModelError::NonFiniteLoss { epoch });
        }
        trace.push(mean);
    }
    Ok(trace)
}
