//! Character-level recurrent classifier.
//!
//! The two words are read in lockstep: at step `t` the embeddings of the
//! `t`-th source and target characters are concatenated and fed to a tanh
//! cell `h_t = tanh(x_t W_x + h_{t-1} W_h + b)`. The shorter word is padded
//! with PAD and both are truncated to `max_word_len`. The final hidden state
//! goes through a ReLU layer and a two-class softmax.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::matrix::{add_into, cross_entropy2, sgd_step, softmax2, Matrix};
use super::network::{embedding_init, sorted_draw_order, uniform_vec, Network, SparseRows};
use super::vocab::{CharVocab, VocabPair, CHAR_PAD};
use super::INIT_SCALE;

/// Character ids of one pair, padded to a common length of at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RnnInput {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
}

impl RnnInput {
    pub fn encode(source: &str, target: &str, vocabs: &VocabPair<CharVocab>, max_word_len: usize) -> Self {
        let ids = |w: &str, v: &CharVocab| w.chars().take(max_word_len).map(|c| v.id(c)).collect::<Vec<_>>();
        let mut src = ids(source, &vocabs.source);
        let mut tgt = ids(target, &vocabs.target);
        let steps = src.len().max(tgt.len()).max(1);
        src.resize(steps, CHAR_PAD);
        tgt.resize(steps, CHAR_PAD);
        Self { src, tgt }
    }

    pub fn steps(&self) -> usize {
        self.src.len()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RnnParams {
    pub src_char_embed: Matrix,
    pub tgt_char_embed: Matrix,
    /// `2d x h`
    pub rec_in: Matrix,
    /// `h x h`
    pub rec_hidden: Matrix,
    pub rec_b: Vec<f64>,
    /// `h x h'`
    pub dense_w: Matrix,
    pub dense_b: Vec<f64>,
    /// `h' x 2`
    pub out_w: Matrix,
    pub out_b: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RnnGrads {
    pub src_char_embed: SparseRows,
    pub tgt_char_embed: SparseRows,
    pub rec_in: Matrix,
    pub rec_hidden: Matrix,
    pub rec_b: Vec<f64>,
    pub dense_w: Matrix,
    pub dense_b: Vec<f64>,
    pub out_w: Matrix,
    pub out_b: Vec<f64>,
}

struct Trace {
    inputs: Vec<Vec<f64>>,
    /// `hidden[0]` is the zero initial state; `hidden[t + 1]` follows step `t`.
    hidden: Vec<Vec<f64>>,
    dense_pre: Vec<f64>,
    dense_act: Vec<f64>,
    logits: [f64; 2],
}

impl RnnParams {
    pub fn zeros(n_src: usize, n_tgt: usize, embed_dim: usize, hidden: usize, dense: usize) -> Self {
        Self {
            src_char_embed: Matrix::zeros(n_src, embed_dim),
            tgt_char_embed: Matrix::zeros(n_tgt, embed_dim),
            rec_in: Matrix::zeros(2 * embed_dim, hidden),
            rec_hidden: Matrix::zeros(hidden, hidden),
            rec_b: vec![0.0; hidden],
            dense_w: Matrix::zeros(hidden, dense),
            dense_b: vec![0.0; dense],
            out_w: Matrix::zeros(dense, 2),
            out_b: vec![0.0; 2],
        }
    }

    pub fn init<R: Rng>(vocabs: &VocabPair<CharVocab>, embed_dim: usize, hidden: usize, dense: usize, rng: &mut R) -> Self {
        let src_order = sorted_draw_order(2, vocabs.source.chars());
        let tgt_order = sorted_draw_order(2, vocabs.target.chars());
        Self {
            src_char_embed: embedding_init(&src_order, embed_dim, INIT_SCALE, rng),
            tgt_char_embed: embedding_init(&tgt_order, embed_dim, INIT_SCALE, rng),
            rec_in: Matrix::uniform(2 * embed_dim, hidden, INIT_SCALE, rng),
            rec_hidden: Matrix::uniform(hidden, hidden, INIT_SCALE, rng),
            rec_b: uniform_vec(hidden, INIT_SCALE, rng),
            dense_w: Matrix::uniform(hidden, dense, INIT_SCALE, rng),
            dense_b: uniform_vec(dense, INIT_SCALE, rng),
            out_w: Matrix::uniform(dense, 2, INIT_SCALE, rng),
            out_b: uniform_vec(2, INIT_SCALE, rng),
        }
    }

    pub fn embed_dim(&self) -> usize {
        self.src_char_embed.cols()
    }

    fn trace(&self, x: &RnnInput) -> Trace {
        let h_dim = self.rec_b.len();
        let mut inputs = Vec::with_capacity(x.steps());
        let mut hidden = Vec::with_capacity(x.steps() + 1);
        hidden.push(vec![0.0; h_dim]);
        for (&s, &t) in x.src.iter().zip(&x.tgt) {
            let mut input = Vec::with_capacity(2 * self.embed_dim());
            input.extend_from_slice(self.src_char_embed.row(s));
            input.extend_from_slice(self.tgt_char_embed.row(t));
            let mut a = self.rec_b.clone();
            self.rec_in.accumulate_vecmul(&input, &mut a);
            self.rec_hidden.accumulate_vecmul(hidden.last().unwrap(), &mut a);
            hidden.push(a.into_iter().map(f64::tanh).collect());
            inputs.push(input);
        }
        let mut dense_pre = self.dense_b.clone();
        self.dense_w.accumulate_vecmul(hidden.last().unwrap(), &mut dense_pre);
        let dense_act: Vec<f64> = dense_pre.iter().map(|v| v.max(0.0)).collect();
        let mut z = self.out_b.clone();
        self.out_w.accumulate_vecmul(&dense_act, &mut z);
        Trace { inputs, hidden, dense_pre, dense_act, logits: [z[0], z[1]] }
    }
}

impl Network for RnnParams {
    type Input = RnnInput;
    type Grads = RnnGrads;

    fn logits(&self, x: &RnnInput) -> [f64; 2] {
        self.trace(x).logits
    }

    fn loss_and_grad(&self, x: &RnnInput, class: usize) -> (f64, RnnGrads) {
        let tr = self.trace(x);
        let loss = cross_entropy2(tr.logits, class);
        let mut dz = softmax2(tr.logits).to_vec();
        dz[class] -= 1.0;

        let mut g = self.zero_grads();
        g.out_w.add_outer(&tr.dense_act, &dz);
        g.out_b.copy_from_slice(&dz);
        let d_act = self.out_w.mul_vec(&dz);
        let d_pre: Vec<f64> = d_act.iter().zip(&tr.dense_pre).map(|(d, z)| if *z > 0.0 { *d } else { 0.0 }).collect();
        let steps = x.steps();
        g.dense_w.add_outer(&tr.hidden[steps], &d_pre);
        g.dense_b.copy_from_slice(&d_pre);

        let d = self.embed_dim();
        let mut dh = self.dense_w.mul_vec(&d_pre);
        for t in (0..steps).rev() {
            let h = &tr.hidden[t + 1];
            let da: Vec<f64> = dh.iter().zip(h).map(|(g, h)| g * (1.0 - h * h)).collect();
            g.rec_in.add_outer(&tr.inputs[t], &da);
            g.rec_hidden.add_outer(&tr.hidden[t], &da);
            add_into(&mut g.rec_b, &da);
            let dx = self.rec_in.mul_vec(&da);
            g.src_char_embed.add(x.src[t], &dx[..d]);
            g.tgt_char_embed.add(x.tgt[t], &dx[d..]);
            dh = self.rec_hidden.mul_vec(&da);
        }
        (loss, g)
    }

    fn zero_grads(&self) -> RnnGrads {
        let d = self.embed_dim();
        let zeros_like = |m: &Matrix| Matrix::zeros(m.rows(), m.cols());
        RnnGrads {
            src_char_embed: SparseRows::new(d),
            tgt_char_embed: SparseRows::new(d),
            rec_in: zeros_like(&self.rec_in),
            rec_hidden: zeros_like(&self.rec_hidden),
            rec_b: vec![0.0; self.rec_b.len()],
            dense_w: zeros_like(&self.dense_w),
            dense_b: vec![0.0; self.dense_b.len()],
            out_w: zeros_like(&self.out_w),
            out_b: vec![0.0; 2],
        }
    }

    fn accumulate(acc: &mut RnnGrads, g: &RnnGrads) {
        acc.src_char_embed.merge(&g.src_char_embed);
        acc.tgt_char_embed.merge(&g.tgt_char_embed);
        acc.rec_in.add_assign(&g.rec_in);
        acc.rec_hidden.add_assign(&g.rec_hidden);
        add_into(&mut acc.rec_b, &g.rec_b);
        acc.dense_w.add_assign(&g.dense_w);
        add_into(&mut acc.dense_b, &g.dense_b);
        acc.out_w.add_assign(&g.out_w);
        add_into(&mut acc.out_b, &g.out_b);
    }

    fn apply(&mut self, g: &RnnGrads, step: f64) {
        g.src_char_embed.apply(&mut self.src_char_embed, step);
        g.tgt_char_embed.apply(&mut self.tgt_char_embed, step);
        sgd_step(self.rec_in.as_mut_slice(), g.rec_in.as_slice(), step);
        sgd_step(self.rec_hidden.as_mut_slice(), g.rec_hidden.as_slice(), step);
        sgd_step(&mut self.rec_b, &g.rec_b, step);
        sgd_step(self.dense_w.as_mut_slice(), g.dense_w.as_slice(), step);
        sgd_step(&mut self.dense_b, &g.dense_b, step);
        sgd_step(self.out_w.as_mut_slice(), g.out_w.as_slice(), step);
        sgd_step(&mut self.out_b, &g.out_b, step);
    }

    fn tensors_mut(&mut self) -> Vec<&mut [f64]> {
        vec![
            self.src_char_embed.as_mut_slice(),
            self.tgt_char_embed.as_mut_slice(),
            self.rec_in.as_mut_slice(),
            self.rec_hidden.as_mut_slice(),
            &mut self.rec_b,
            self.dense_w.as_mut_slice(),
            &mut self.dense_b,
            self.out_w.as_mut_slice(),
            &mut self.out_b,
        ]
    }

    fn dense_grads(&self, g: &RnnGrads) -> Vec<Vec<f64>> {
        vec![
            g.src_char_embed.to_dense(self.src_char_embed.rows()),
            g.tgt_char_embed.to_dense(self.tgt_char_embed.rows()),
            g.rec_in.as_slice().to_vec(),
            g.rec_hidden.as_slice().to_vec(),
            g.rec_b.clone(),
            g.dense_w.as_slice().to_vec(),
            g.dense_b.clone(),
            g.out_w.as_slice().to_vec(),
            g.out_b.clone(),
        ]
    }
}
