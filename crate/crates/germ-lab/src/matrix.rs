//! Exact integer determinants and definiteness tests for small dense
//! matrices.
//!
//! This is the route *independent* of the continuant recurrence: the
//! verification suites build the tridiagonal and intersection matrices
//! explicitly and run fraction-free elimination on them.

use crate::error::{Error, Result};

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub n: usize,
    pub entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::invalid(format!(
                "matrix of size {n} needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        IntMatrix { n, entries: vec![0; n * n] }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }

    /// Tridiagonal matrix with `diag` on the diagonal and `off` on both
    /// off-diagonals.
    pub fn tridiagonal(diag: &[i64], off: i64) -> Self {
        let n = diag.len();
        let mut m = IntMatrix::zero(n);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
            if i + 1 < n {
                m.set(i, i + 1, off);
                m.set(i + 1, i, off);
            }
        }
        m
    }

    /// Leading principal submatrix of size `k`.
    pub fn leading(&self, k: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    /// Exact determinant by Bareiss fraction-free elimination (i128
    /// intermediates, overflow-checked on the way back down).
    pub fn determinant(&self) -> Result<i64> {
        let n = self.n;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let at = |a: &[i128], i: usize, j: usize| a[i * n + j];
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if at(&a, k, k) == 0 {
                // pivot search below row k
                let swap = (k + 1..n).find(|&r| at(&a, r, k) != 0);
                match swap {
                    None => return Ok(0),
                    Some(r) => {
                        for j in 0..n {
                            a.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&a, i, j)
                        .checked_mul(at(&a, k, k))
                        .and_then(|x| {
                            at(&a, i, k).checked_mul(at(&a, k, j)).and_then(|y| x.checked_sub(y))
                        })
                        .ok_or(Error::Overflow("bareiss elimination"))?;
                    a[i * n + j] = num / prev; // exact division
                }
            }
            prev = at(&a, k, k);
        }
        let det = sign * at(&a, n - 1, n - 1);
        i64::try_from(det).map_err(|_| Error::Overflow("determinant"))
    }

    /// Negative definite iff the leading minors alternate in sign
    /// starting negative.
    pub fn is_negative_definite(&self) -> Result<bool> {
        for k in 1..=self.n {
            let d = self.leading(k).determinant()?;
            let expected_sign = if k % 2 == 1 { -1 } else { 1 };
            if d.signum() != expected_sign {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
