//! Packed lower-triangular storage and Cholesky routines.
//!
//! The GP code keeps `L` with `L L^T = K + sigma_n^2 I` in row-major packed
//! form so that appending one observation is an `O(n^2)` row extension
//! instead of a full refactorization. Row `i` occupies `i + 1` contiguous
//! entries starting at `i (i + 1) / 2`.

/// Lower-triangular matrix in packed row-major storage.
#[derive(Debug, Clone, Default)]
pub(crate) struct PackedLower {
    n: usize,
    data: Vec<f64>,
}

impl PackedLower {
    pub fn new() -> Self {
        Self { n: 0, data: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        let off = i * (i + 1) / 2;
        &self.data[off..off + i + 1]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(j <= i);
        self.data[i * (i + 1) / 2 + j]
    }

    /// Cholesky factorization of a symmetric matrix given as packed lower
    /// triangle (diagonal included). Returns `None` when a pivot is not
    /// strictly positive.
    pub fn cholesky(a: &[f64], n: usize) -> Option<Self> {
        debug_assert_eq!(a.len(), n * (n + 1) / 2);
        let mut l = vec![0.0f64; a.len()];
        for i in 0..n {
            let irow = i * (i + 1) / 2;
            for j in 0..=i {
                let jrow = j * (j + 1) / 2;
                let mut s = a[irow + j];
                // dot of the two already-computed row prefixes
                for k in 0..j {
                    s -= l[irow + k] * l[jrow + k];
                }
                if i == j {
                    if s <= 0.0 || !s.is_finite() {
                        return None;
                    }
                    l[irow + j] = s.sqrt();
                } else {
                    l[irow + j] = s / l[jrow + j];
                }
            }
        }
        Some(Self { n, data: l })
    }

    /// Solves `L y = b` in place.
    pub fn forward_solve(&self, b: &mut [f64]) {
        debug_assert_eq!(b.len(), self.n);
        for i in 0..self.n {
            let row = self.row(i);
            let mut s = b[i];
            for k in 0..i {
                s -= row[k] * b[k];
            }
            b[i] = s / row[i];
        }
    }

    /// Appends one row given the cross-covariances `cross` against the
    /// existing points and the new diagonal entry. `cross` is overwritten
    /// with the solved row. Returns `false` (leaving the factor untouched)
    /// when the Schur complement is not strictly positive.
    pub fn extend_row(&mut self, cross: &mut [f64], diag: f64) -> bool {
        debug_assert_eq!(cross.len(), self.n);
        self.forward_solve_into(cross);
        let d2 = diag - cross.iter().map(|c| c * c).sum::<f64>();
        if d2 <= 0.0 || !d2.is_finite() {
            return false;
        }
        self.data.extend_from_slice(cross);
        self.data.push(d2.sqrt());
        self.n += 1;
        true
    }

    // forward_solve on a buffer shorter than n is only used by extend_row,
    // where the buffer length equals the current dimension.
    fn forward_solve_into(&self, b: &mut [f64]) {
        for i in 0..b.len() {
            let row = self.row(i);
            let mut s = b[i];
            for k in 0..i {
                s -= row[k] * b[k];
            }
            b[i] = s / row[i];
        }
    }

    /// `L z` for a dense vector, used to draw correlated Gaussian noise.
    pub fn mul_vec(&self, z: &[f64]) -> Vec<f64> {
        debug_assert_eq!(z.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(z).map(|(l, zi)| l * zi).sum())
            .collect()
    }
}

/// Packed-lower index for a symmetric matrix: entry `(i, j)` with `j <= i`.
#[inline]
pub(crate) fn packed_index(i: usize, j: usize) -> usize {
    debug_assert!(j <= i);
    i * (i + 1) / 2 + j
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spd_example() -> (Vec<f64>, usize) {
        // A = B B^T + I for a fixed 4x4 B, packed lower triangle.
        let b = [
            [1.0, 0.0, 0.0, 0.0],
            [0.4, 1.2, 0.0, 0.0],
            [-0.3, 0.7, 0.9, 0.0],
            [0.1, -0.5, 0.2, 1.1],
        ];
        let n = 4;
        let mut a = vec![0.0; n * (n + 1) / 2];
        for i in 0..n {
            for j in 0..=i {
                let mut s = if i == j { 1.0 } else { 0.0 };
                for k in 0..n {
                    s += b[i][k] * b[j][k];
                }
                a[packed_index(i, j)] = s;
            }
        }
        (a, n)
    }

    #[test]
    fn cholesky_reconstructs_matrix() {
        let (a, n) = spd_example();
        let l = PackedLower::cholesky(&a, n).unwrap();
        for i in 0..n {
            for j in 0..=i {
                let mut s = 0.0;
                for k in 0..=j {
                    s += l.get(i, k) * l.get(j, k);
                }
                assert!((s - a[packed_index(i, j)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn extend_matches_full_factorization() {
        let (a, n) = spd_example();
        let full = PackedLower::cholesky(&a, n).unwrap();
        // factor the leading 3x3 block, then extend by the last row
        let head = PackedLower::cholesky(&a[..6], 3).unwrap();
        let mut ext = head;
        let mut cross = vec![
            a[packed_index(3, 0)],
            a[packed_index(3, 1)],
            a[packed_index(3, 2)],
        ];
        assert!(ext.extend_row(&mut cross, a[packed_index(3, 3)]));
        for i in 0..n {
            for j in 0..=i {
                assert!((ext.get(i, j) - full.get(i, j)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn forward_solve_inverts_mul() {
        let (a, n) = spd_example();
        let l = PackedLower::cholesky(&a, n).unwrap();
        let z = vec![0.3, -1.0, 2.0, 0.7];
        let mut y = l.mul_vec(&z);
        l.forward_solve(&mut y);
        for (yi, zi) in y.iter().zip(&z) {
            assert!((yi - zi).abs() < 1e-12);
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        // [[1, 2], [2, 1]] has a negative eigenvalue
        let a = vec![1.0, 2.0, 1.0];
        assert!(PackedLower::cholesky(&a, 2).is_none());
    }
}
