//! Schur polynomials, characters of exterior powers of symmetric powers,
//! decomposition identities, and hook-length degrees of Schubert varieties.
//!
//! Everything is an exact polynomial computation: Schur polynomials come from
//! the bialternant ratio, wedge characters from the elementary symmetric
//! polynomial on the weight monomials of `Sym^d C^k`, and decompositions are
//! certified by greedy leading-monomial peeling.

use crate::poly::{det, MPoly};
use crate::scalar::{as_rational, FieldSpec, Scalar};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("partition {0:?} is not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("partition has {0} parts but only {1} variables")]
    TooManyParts(usize, usize),
    #[error("polynomial is not symmetric (transposing variables {0} and {1} changes it)")]
    NotSymmetric(usize, usize),
    #[error("peeling failed: {0}")]
    PeelFailure(String),
}

/// An integer partition: weakly decreasing positive parts, trailing zeros
/// stripped at construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Partition, RepError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(RepError::NotWeaklyDecreasing(parts.to_vec()));
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        let parts: Vec<u32> = (0..cols)
            .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Hook length of the cell in row `i`, column `j` (0-indexed).
    fn hook(&self, conj: &Partition, i: usize, j: usize) -> u32 {
        (self.0[i] - 1 - j as u32) + (conj.0[j] - 1 - i as u32) + 1
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A symmetric polynomial in `k` variables; symmetry is certified at
/// construction by checking every adjacent transposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncExpr {
    poly: MPoly,
    k: usize,
}

impl SymFuncExpr {
    pub fn new(poly: MPoly, k: usize) -> Result<SymFuncExpr, RepError> {
        assert_eq!(poly.arity(), k);
        for i in 0..k.saturating_sub(1) {
            if swap_vars(&poly, i, i + 1) != poly {
                return Err(RepError::NotSymmetric(i, i + 1));
            }
        }
        Ok(SymFuncExpr { poly, k })
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn vars(&self) -> usize {
        self.k
    }

    /// Value at `(1, 1, ..., 1)` — the dimension of the module whose
    /// character this is.
    pub fn dim_at_ones(&self) -> Scalar {
        let ones = vec![FieldSpec::Q.one(); self.k];
        self.poly.eval(&ones)
    }
}

fn swap_vars(p: &MPoly, i: usize, j: usize) -> MPoly {
    let subs: Vec<MPoly> = (0..p.arity())
        .map(|v| {
            let target = if v == i { j } else if v == j { i } else { v };
            MPoly::var(p.arity(), p.field(), target)
        })
        .collect();
    p.substitute(&subs)
}

/// The Schur polynomial `s_lambda` in `k` variables, by the bialternant
/// formula: `det(x_i^(lambda_j + k - j)) / det(x_i^(k - j))`.
pub fn schur_polynomial(lambda: &Partition, k: usize) -> Result<SymFuncExpr, RepError> {
    if lambda.len() > k {
        return Err(RepError::TooManyParts(lambda.len(), k));
    }
    let field = FieldSpec::Q;
    let exp = |i: usize, e: u32| -> MPoly {
        let mut exps = vec![0u32; k];
        exps[i] = e;
        MPoly::monomial(k, exps, field.one())
    };
    let part = |j: usize| lambda.parts().get(j).copied().unwrap_or(0);
    let numer_rows: Vec<Vec<MPoly>> = (0..k)
        .map(|i| (0..k).map(|j| exp(i, part(j) + (k - 1 - j) as u32)).collect())
        .collect();
    let denom_rows: Vec<Vec<MPoly>> = (0..k)
        .map(|i| (0..k).map(|j| exp(i, (k - 1 - j) as u32)).collect())
        .collect();
    let numer = det(&numer_rows);
    let denom = det(&denom_rows);
    let quot = numer
        .div_exact(&denom)
        .expect("the bialternant numerator is divisible by the Vandermonde");
    SymFuncExpr::new(quot, k)
}

/// The character of `Lambda^j(Sym^d C^k)`: the elementary symmetric
/// polynomial `e_j` evaluated on the weight monomials of `Sym^d C^k`.
pub fn wedge_character(d: u32, k: usize, j: usize) -> SymFuncExpr {
    let weights = degree_monomials(d, k);
    let mut out = MPoly::zero(k, FieldSpec::Q);
    for subset in weights.iter().combinations(j) {
        let mut exps = vec![0u32; k];
        for w in subset {
            for (e, we) in exps.iter_mut().zip(w) {
                *e += we;
            }
        }
        out = &out + &MPoly::monomial(k, exps, FieldSpec::Q.one());
    }
    SymFuncExpr::new(out, k).expect("e_j of a full weight list is symmetric")
}

/// All exponent vectors of total degree `d` in `k` variables, in
/// lexicographic order.
pub fn degree_monomials(d: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(d: u32, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 1 {
            let mut full = prefix.clone();
            full.push(d);
            out.push(full);
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(d - e, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, k, &mut Vec::new(), &mut out);
    out
}

/// The degree of the Schubert variety indexed by `lambda`, by the hook-length
/// formula: `|lambda|! / prod(hooks)`, the number of standard Young tableaux.
pub fn hook_length_degree(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    for m in 1..=n {
        num *= BigInt::from(m);
    }
    let mut den = BigInt::one();
    for i in 0..lambda.len() {
        for j in 0..lambda.parts()[i] as usize {
            den *= BigInt::from(lambda.hook(&conj, i, j));
        }
    }
    let q = &num / &den;
    assert!((&q * &den) == num, "hook product must divide |lambda|!");
    q.to_u64().expect("tableau count fits in u64 at these sizes")
}

/// Counts standard Young tableaux directly, by recursion over removable
/// corners. Independent oracle for [`hook_length_degree`].
pub fn count_standard_tableaux(lambda: &Partition) -> u64 {
    fn rec(shape: &mut Vec<u32>) -> u64 {
        if shape.iter().all(|&p| p == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let removable =
                shape[i] > 0 && (i + 1 == shape.len() || shape[i] > shape[i + 1]);
            if removable {
                shape[i] -= 1;
                total += rec(shape);
                shape[i] += 1;
            }
        }
        total
    }
    rec(&mut lambda.parts().to_vec())
}

/// One constituent of a Schur decomposition.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Constituent {
    pub partition: Vec<u32>,
    pub multiplicity: u32,
    /// Value of the Schur polynomial at `(1,...,1)` — the dimension of the
    /// irreducible module in the given number of variables.
    pub dimension: u64,
}

/// Decomposes a symmetric polynomial into Schur polynomials by greedy
/// leading-monomial peeling: repeatedly read off the lexicographically
/// largest monomial, whose exponent vector is the next partition, and
/// subtract that many copies of its Schur polynomial. Succeeds exactly when
/// the input is a nonnegative integer combination of Schur polynomials.
pub fn schur_decompose(expr: &SymFuncExpr) -> Result<Vec<Constituent>, RepError> {
    let k = expr.vars();
    let mut rest = expr.poly().clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (exps, coeff) = rest
            .terms()
            .last()
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero polynomial has a leading term");
        let lambda = Partition::new(&exps).map_err(|_| {
            RepError::PeelFailure(format!("leading exponents {exps:?} are not a partition"))
        })?;
        let mult = as_rational(&coeff)
            .filter(|r| r.is_integer() && r.numer() > &BigInt::from(0))
            .and_then(|r| r.numer().to_u32())
            .ok_or_else(|| {
                RepError::PeelFailure(format!(
                    "leading coefficient {coeff} of {lambda} is not a positive integer"
                ))
            })?;
        let s = schur_polynomial(&lambda, k)?;
        rest = &rest - &s.poly().scalar_mul(&Scalar::int(mult as i64));
        let dim = as_rational(&s.dim_at_ones())
            .and_then(|r| r.to_integer().to_u64())
            .expect("dimension is a positive integer");
        out.push(Constituent {
            partition: lambda.parts().to_vec(),
            multiplicity: mult,
            dimension: dim,
        });
    }
    Ok(out)
}

/// Record of the full decomposition of `Lambda^3(Sym^3 C^3)`, together with
/// the dimension list as printed in the source table, which disagrees with
/// the recomputed dimensions and is therefore flagged rather than asserted.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Lambda3Report {
    pub constituents: Vec<Constituent>,
    pub recomputed_dims: Vec<u64>,
    pub printed_dims: [u64; 4],
    pub recomputed_sum: u64,
    pub printed_sum: u64,
    /// Dimension of the full space, `C(10, 3)`.
    pub expected_total: u64,
    /// Multiplicity of the skew constituent `(3,3,3)`.
    pub skew_multiplicity: u32,
}

/// The dimension list for the constituents of `Lambda^3(Sym^3 C^3)` as
/// printed in the source table. The recomputed values are `(28, 64, 27, 1)`;
/// the printed list does not sum to `C(10,3) = 120` and is flagged.
pub const LAMBDA3_PRINTED_DIMS: [u64; 4] = [15, 21, 15, 1];

/// Fully decomposes `Lambda^3(Sym^3 C^3)` and reports the recomputed
/// constituent dimensions next to the printed list.
pub fn lambda3_sym3_report() -> Lambda3Report {
    let expr = wedge_character(3, 3, 3);
    let constituents = schur_decompose(&expr).expect("character decomposes");
    let recomputed_dims: Vec<u64> = constituents
        .iter()
        .map(|c| c.dimension * c.multiplicity as u64)
        .collect();
    let skew_multiplicity = constituents
        .iter()
        .find(|c| c.partition == vec![3, 3, 3])
        .map(|c| c.multiplicity)
        .unwrap_or(0);
    Lambda3Report {
        recomputed_sum: recomputed_dims.iter().sum(),
        printed_sum: LAMBDA3_PRINTED_DIMS.iter().sum(),
        expected_total: 120,
        skew_multiplicity,
        constituents,
        recomputed_dims,
        printed_dims: LAMBDA3_PRINTED_DIMS,
    }
}
