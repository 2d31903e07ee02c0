use rand::Rng;
use serde::{Deserialize, Serialize};

/// Dense row-major `f64` matrix. Layers compute `y = x W + b` with `W`
/// shaped `in x out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    /// Entries drawn uniformly from `[-scale, scale]`.
    pub fn uniform<R: Rng>(rows: usize, cols: usize, scale: f64, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| rng.random_range(-scale..=scale)).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `out += x W`, with `x.len() == rows` and `out.len() == cols`.
    pub fn accumulate_vecmul(&self, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), self.rows);
        debug_assert_eq!(out.len(), self.cols);
        for (xi, row) in x.iter().zip(self.data.chunks_exact(self.cols)) {
            if *xi == 0.0 {
                continue;
            }
            for (o, w) in out.iter_mut().zip(row) {
                *o += xi * w;
            }
        }
    }

    /// `W g`, the gradient of `x W` with respect to `x`.
    pub fn mul_vec(&self, g: &[f64]) -> Vec<f64> {
        debug_assert_eq!(g.len(), self.cols);
        self.data.chunks_exact(self.cols).map(|row| row.iter().zip(g).map(|(w, gi)| w * gi).sum()).collect()
    }

    /// `W += x g^T`.
    pub fn add_outer(&mut self, x: &[f64], g: &[f64]) {
        debug_assert_eq!(x.len(), self.rows);
        debug_assert_eq!(g.len(), self.cols);
        for (xi, row) in x.iter().zip(self.data.chunks_exact_mut(self.cols)) {
            if *xi == 0.0 {
                continue;
            }
            for (w, gi) in row.iter_mut().zip(g) {
                *w += xi * gi;
            }
        }
    }

    pub fn add_assign(&mut self, other: &Matrix) {
        add_into(&mut self.data, &other.data);
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

pub(crate) fn add_into(dst: &mut [f64], src: &[f64]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

/// `dst -= step * src`.
pub(crate) fn sgd_step(dst: &mut [f64], src: &[f64], step: f64) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= step * s;
    }
}

/// Two-class softmax, shifted by the max logit.
pub(crate) fn softmax2(z: [f64; 2]) -> [f64; 2] {
    let m = z[0].max(z[1]);
    let e = [(z[0] - m).exp(), (z[1] - m).exp()];
    let s = e[0] + e[1];
    [e[0] / s, e[1] / s]
}

/// `-ln softmax(z)[class]`, computed as `logsumexp(z) - z[class]`.
pub(crate) fn cross_entropy2(z: [f64; 2], class: usize) -> f64 {
    let m = z[0].max(z[1]);
    let lse = m + ((z[0] - m).exp() + (z[1] - m).exp()).ln();
    lse - z[class]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vecmul_and_transpose() {
        // W = [[1, 2, 3], [4, 5, 6]]
        let w = Matrix::from_vec(2, 3, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let mut out = vec![0.0; 3];
        w.accumulate_vecmul(&[1.0, -1.0], &mut out);
        assert_eq!(out, [-3.0, -3.0, -3.0]);
        assert_eq!(w.mul_vec(&[1.0, 0.0, 1.0]), [4.0, 10.0]);
        let mut g = Matrix::zeros(2, 3);
        g.add_outer(&[1.0, 2.0], &[1.0, 0.0, -1.0]);
        assert_eq!(g.as_slice(), &[1.0, 0.0, -1.0, 2.0, 0.0, -2.0]);
    }

    #[test]
    fn softmax_and_loss() {
        assert_eq!(softmax2([0.0, 0.0]), [0.5, 0.5]);
        let p = softmax2([1000.0, 0.0]);
        assert!(p[0] > 0.999 && p[1] >= 0.0);
        assert!((cross_entropy2([0.0, 0.0], 1) - std::f64::consts::LN_2).abs() < 1e-15);
        let z = [0.3, -1.2];
        assert!((cross_entropy2(z, 0) + softmax2(z)[0].ln()).abs() < 1e-12);
    }
}
