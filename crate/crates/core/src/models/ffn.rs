//! Word-level feed-forward classifier: separate source and target word
//! embeddings, concatenated, one ReLU layer, softmax over two classes.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::matrix::{add_into, sgd_step, softmax2, Matrix};
use super::network::{embedding_init, sorted_draw_order, uniform_vec, Network, SparseRows};
use super::vocab::{VocabPair, WordVocab};
use super::INIT_SCALE;

/// Word ids of one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FfnInput {
    pub src: usize,
    pub tgt: usize,
}

impl FfnInput {
    pub fn encode(source: &str, target: &str, vocabs: &VocabPair<WordVocab>) -> Self {
        Self { src: vocabs.source.id(source), tgt: vocabs.target.id(target) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FfnParams {
    pub src_embed: Matrix,
    pub tgt_embed: Matrix,
    /// `2d x h`
    pub dense_w: Matrix,
    pub dense_b: Vec<f64>,
    /// `h x 2`
    pub out_w: Matrix,
    pub out_b: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FfnGrads {
    pub src_embed: SparseRows,
    pub tgt_embed: SparseRows,
    pub dense_w: Matrix,
    pub dense_b: Vec<f64>,
    pub out_w: Matrix,
    pub out_b: Vec<f64>,
}

impl FfnParams {
    pub fn zeros(n_src: usize, n_tgt: usize, embed_dim: usize, hidden: usize) -> Self {
        Self {
            src_embed: Matrix::zeros(n_src, embed_dim),
            tgt_embed: Matrix::zeros(n_tgt, embed_dim),
            dense_w: Matrix::zeros(2 * embed_dim, hidden),
            dense_b: vec![0.0; hidden],
            out_w: Matrix::zeros(hidden, 2),
            out_b: vec![0.0; 2],
        }
    }

    /// Uniform `[-0.1, 0.1]` initialization; embedding rows are drawn in
    /// token sort order.
    pub fn init<R: Rng>(vocabs: &VocabPair<WordVocab>, embed_dim: usize, hidden: usize, rng: &mut R) -> Self {
        let src_order = sorted_draw_order(1, vocabs.source.tokens());
        let tgt_order = sorted_draw_order(1, vocabs.target.tokens());
        Self {
            src_embed: embedding_init(&src_order, embed_dim, INIT_SCALE, rng),
            tgt_embed: embedding_init(&tgt_order, embed_dim, INIT_SCALE, rng),
            dense_w: Matrix::uniform(2 * embed_dim, hidden, INIT_SCALE, rng),
            dense_b: uniform_vec(hidden, INIT_SCALE, rng),
            out_w: Matrix::uniform(hidden, 2, INIT_SCALE, rng),
            out_b: uniform_vec(2, INIT_SCALE, rng),
        }
    }

    pub fn embed_dim(&self) -> usize {
        self.src_embed.cols()
    }

    fn concat(&self, x: &FfnInput) -> Vec<f64> {
        let mut v = Vec::with_capacity(2 * self.embed_dim());
        v.extend_from_slice(self.src_embed.row(x.src));
        v.extend_from_slice(self.tgt_embed.row(x.tgt));
        v
    }

    /// Returns (concatenated input, pre-activation, ReLU output, logits).
    fn forward_trace(&self, x: &FfnInput) -> (Vec<f64>, Vec<f64>, Vec<f64>, [f64; 2]) {
        let input = self.concat(x);
        let mut pre = self.dense_b.clone();
        self.dense_w.accumulate_vecmul(&input, &mut pre);
        let act: Vec<f64> = pre.iter().map(|v| v.max(0.0)).collect();
        let mut z = self.out_b.clone();
        self.out_w.accumulate_vecmul(&act, &mut z);
        (input, pre, act, [z[0], z[1]])
    }
}

impl Network for FfnParams {
    type Input = FfnInput;
    type Grads = FfnGrads;

    fn logits(&self, x: &FfnInput) -> [f64; 2] {
        self.forward_trace(x).3
    }

    fn loss_and_grad(&self, x: &FfnInput, class: usize) -> (f64, FfnGrads) {
        let (input, pre, act, z) = self.forward_trace(x);
        let p = softmax2(z);
        let loss = super::matrix::cross_entropy2(z, class);
        let mut dz = p.to_vec();
        dz[class] -= 1.0;

        let mut g = self.zero_grads();
        g.out_w.add_outer(&act, &dz);
        g.out_b.copy_from_slice(&dz);
        let d_act = self.out_w.mul_vec(&dz);
        let d_pre: Vec<f64> = d_act.iter().zip(&pre).map(|(d, z)| if *z > 0.0 { *d } else { 0.0 }).collect();
        g.dense_w.add_outer(&input, &d_pre);
        g.dense_b.copy_from_slice(&d_pre);
        let d_input = self.dense_w.mul_vec(&d_pre);
        let d = self.embed_dim();
        g.src_embed.add(x.src, &d_input[..d]);
        g.tgt_embed.add(x.tgt, &d_input[d..]);
        (loss, g)
    }

    fn zero_grads(&self) -> FfnGrads {
        let d = self.embed_dim();
        FfnGrads {
            src_embed: SparseRows::new(d),
            tgt_embed: SparseRows::new(d),
            dense_w: Matrix::zeros(self.dense_w.rows(), self.dense_w.cols()),
            dense_b: vec![0.0; self.dense_b.len()],
            out_w: Matrix::zeros(self.out_w.rows(), self.out_w.cols()),
            out_b: vec![0.0; 2],
        }
    }

    fn accumulate(acc: &mut FfnGrads, g: &FfnGrads) {
        acc.src_embed.merge(&g.src_embed);
        acc.tgt_embed.merge(&g.tgt_embed);
        acc.dense_w.add_assign(&g.dense_w);
        add_into(&mut acc.dense_b, &g.dense_b);
        acc.out_w.add_assign(&g.out_w);
        add_into(&mut acc.out_b, &g.out_b);
    }

    fn apply(&mut self, g: &FfnGrads, step: f64) {
        g.src_embed.apply(&mut self.src_embed, step);
        g.tgt_embed.apply(&mut self.tgt_embed, step);
        sgd_step(self.dense_w.as_mut_slice(), g.dense_w.as_slice(), step);
        sgd_step(&mut self.dense_b, &g.dense_b, step);
        sgd_step(self.out_w.as_mut_slice(), g.out_w.as_slice(), step);
        sgd_step(&mut self.out_b, &g.out_b, step);
    }

    fn tensors_mut(&mut self) -> Vec<&mut [f64]> {
        vec![
            self.src_embed.as_mut_slice(),
            self.tgt_embed.as_mut_slice(),
            self.dense_w.as_mut_slice(),
            &mut self.dense_b,
            self.out_w.as_mut_slice(),
            &mut self.out_b,
        ]
    }

    fn dense_grads(&self, g: &FfnGrads) -> Vec<Vec<f64>> {
        vec![
            g.src_embed.to_dense(self.src_embed.rows()),
            g.tgt_embed.to_dense(self.tgt_embed.rows()),
            g.dense_w.as_slice().to_vec(),
            g.dense_b.clone(),
            g.out_w.as_slice().to_vec(),
            g.out_b.clone(),
        ]
    }
}
