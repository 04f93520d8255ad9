//! Exact dense linear algebra over a [`Scalar`] field: ranks, kernels, and
//! fraction-free (Bareiss) elimination for rational matrices, so verdicts
//! never depend on pivoting luck or rounding.

use crate::scalar::{as_rational, rational_mod_p, FieldSpec, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense matrix over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: FieldSpec, nrows: usize, ncols: usize) -> Self {
        Mat {
            field,
            nrows,
            ncols,
            data: vec![field.zero(); nrows * ncols],
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            for s in r {
                assert_eq!(s.spec(), field, "mixed-field matrix entry");
                data.push(s);
            }
        }
        Mat {
            field,
            nrows,
            ncols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.spec(), self.field);
        self.data[r * self.ncols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    /// Exact rank. Rational matrices go through fraction-free Bareiss
    /// elimination on a denominator-cleared integer copy; other fields use
    /// straight Gaussian elimination, which is exact over any field here.
    pub fn rank(&self) -> usize {
        if self.field == FieldSpec::Q {
            self.rank_bareiss()
        } else {
            self.clone().rank_gauss()
        }
    }

    fn rank_bareiss(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.nrows)
            .map(|r| clear_denominators(self.row(r)))
            .collect();
        let (nrows, ncols) = (self.nrows, self.ncols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..ncols {
            let Some(piv) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, piv);
            for r in row + 1..nrows {
                for c in col + 1..ncols {
                    let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                    m[r][c] = &num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            rank += 1;
            row += 1;
            if row == nrows {
                break;
            }
        }
        rank
    }

    fn rank_gauss(mut self) -> usize {
        let (nrows, ncols) = (self.nrows, self.ncols);
        let mut rank = 0;
        let mut row = 0;
        for col in 0..ncols {
            let Some(piv) = (row..nrows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, piv);
            let inv = self.at(row, col).inv().expect("nonzero pivot");
            for c in col..ncols {
                let v = self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..nrows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..ncols {
                        let v = self.at(r, c) - &(self.at(row, c) * &factor);
                        self.set(r, c, v);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == nrows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.ncols {
            self.data.swap(a * self.ncols + c, b * self.ncols + c);
        }
    }

    /// Basis of the right kernel `{v : M v = 0}` via reduced row echelon
    /// form. Works over every supported field.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let (nrows, ncols) = (m.nrows, m.ncols);
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            let Some(piv) = (row..nrows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, piv);
            let inv = m.at(row, col).inv().expect("nonzero pivot");
            for c in col..ncols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..nrows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..ncols {
                        let v = m.at(r, c) - &(m.at(row, c) * &factor);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == nrows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..ncols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); ncols];
            v[free] = self.field.one();
            for &(r, c) in &pivots {
                v[c] = -m.at(r, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Reduces a rational matrix mod `p`; `None` if any denominator
    /// vanishes mod `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Option<Mat> {
        assert_eq!(self.field, FieldSpec::Q);
        let mut data = Vec::with_capacity(self.data.len());
        for s in &self.data {
            data.push(rational_mod_p(s, p)?);
        }
        Some(Mat {
            field: FieldSpec::Fp(p),
            nrows: self.nrows,
            ncols: self.ncols,
            data,
        })
    }
}

fn clear_denominators(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for s in row {
        let r = as_rational(s).expect("rational matrix required for Bareiss");
        lcm = num_integer::lcm(lcm, r.denom().clone());
    }
    row.iter()
        .map(|s| {
            let r = as_rational(s).unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect()
}

/// True when two coordinate vectors are projectively equal: every 2x2 minor
/// of the stacked 2xN matrix vanishes and neither vector is zero.
pub fn projectively_equal(u: &[Scalar], v: &[Scalar]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.iter().all(|s| s.is_zero()) || v.iter().all(|s| s.is_zero()) {
        return false;
    }
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if !(&(&u[i] * &v[j]) - &(&u[j] * &v[i])).is_zero() {
                return false;
            }
        }
    }
    true
}
