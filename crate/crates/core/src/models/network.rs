use std::collections::BTreeMap;

use rand::Rng;

use super::matrix::{cross_entropy2, sgd_step, softmax2, Matrix};

/// A two-class classifier with hand-written backpropagation.
///
/// Gradients are of the per-example cross-entropy. Tensor order in
/// [`Network::tensors_mut`] and [`Network::dense_grads`] is the same, which
/// is what finite-difference checks rely on.
pub trait Network: Clone + Send + Sync {
    type Input: Clone + Send + Sync;
    type Grads: Send;

    fn logits(&self, x: &Self::Input) -> [f64; 2];

    fn loss_and_grad(&self, x: &Self::Input, class: usize) -> (f64, Self::Grads);

    fn zero_grads(&self) -> Self::Grads;

    fn accumulate(acc: &mut Self::Grads, g: &Self::Grads);

    /// `params -= step * grads`.
    fn apply(&mut self, grads: &Self::Grads, step: f64);

    fn tensors_mut(&mut self) -> Vec<&mut [f64]>;

    /// Gradients expanded to the shapes of [`Network::tensors_mut`].
    fn dense_grads(&self, grads: &Self::Grads) -> Vec<Vec<f64>>;

    fn is_finite(&mut self) -> bool {
        self.tensors_mut().iter().all(|t| t.iter().all(|v| v.is_finite()))
    }

    fn probabilities(&self, x: &Self::Input) -> [f64; 2] {
        softmax2(self.logits(x))
    }

    fn loss(&self, x: &Self::Input, class: usize) -> f64 {
        cross_entropy2(self.logits(x), class)
    }
}

/// Gradient rows for an embedding table, keyed by row id.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SparseRows {
    dim: usize,
    rows: BTreeMap<usize, Vec<f64>>,
}

impl SparseRows {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: BTreeMap::new() }
    }

    pub fn add(&mut self, row: usize, g: &[f64]) {
        let dst = self.rows.entry(row).or_insert_with(|| vec![0.0; self.dim]);
        for (d, s) in dst.iter_mut().zip(g) {
            *d += s;
        }
    }

    pub fn merge(&mut self, other: &SparseRows) {
        for (&r, g) in &other.rows {
            self.add(r, g);
        }
    }

    pub fn apply(&self, table: &mut Matrix, step: f64) {
        for (&r, g) in &self.rows {
            sgd_step(table.row_mut(r), g, step);
        }
    }

    pub fn to_dense(&self, n_rows: usize) -> Vec<f64> {
        let mut out = vec![0.0; n_rows * self.dim];
        for (&r, g) in &self.rows {
            out[r * self.dim..(r + 1) * self.dim].copy_from_slice(g);
        }
        out
    }
}

/// Uniform `[-scale, scale]` embedding table whose rows are drawn in the
/// order given by `draw_order` (a permutation of row ids), so a row's
/// initial value does not depend on where its token first appeared.
pub(crate) fn embedding_init<R: Rng>(draw_order: &[usize], dim: usize, scale: f64, rng: &mut R) -> Matrix {
    let mut m = Matrix::zeros(draw_order.len(), dim);
    for &r in draw_order {
        for v in m.row_mut(r) {
            *v = rng.random_range(-scale..=scale);
        }
    }
    m
}

/// Row ids ordered by reserved ids first, then token sort order.
pub(crate) fn sorted_draw_order<K: Ord>(reserved: usize, keys: &[K]) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..keys.len()).collect();
    ids.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    (0..reserved).chain(ids.into_iter().map(|i| i + reserved)).collect()
}

pub(crate) fn uniform_vec<R: Rng>(n: usize, scale: f64, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-scale..=scale)).collect()
}
