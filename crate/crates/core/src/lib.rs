//! Orthographic cognate detection between Hindi and ten other Indian
//! languages.
//!
//! The pipeline: standardize every word into Devanagari ([`script`]), pair
//! words from linked wordnet synsets or aligned sentences ([`dataset`]),
//! score each pair with three orthographic similarities and label it by the
//! averaged score ([`similarity`]), then train word-level FFN and
//! character-level RNN classifiers ([`models`]) under stratified k-fold
//! evaluation ([`eval`]).

pub mod dataset;
pub mod eval;
pub mod models;
pub mod par;
pub mod script;
pub mod similarity;

pub use dataset::{LabeledDataset, LabeledPair, Threshold, WordPair};
pub use script::{Language, NormalizedWord, Transliterator};
pub use similarity::{JaroWinklerConfig, SimilarityScores};
