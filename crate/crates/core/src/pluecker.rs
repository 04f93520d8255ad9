//! Lines in projective space as rank-2 spans, Plücker coordinates, and the
//! three-term Grassmannian quadrics for G(1,4) and G(1,9).
//!
//! Convention: `p_ij` with `i < j`, equal to `a_i b_j - a_j b_i` for
//! generators `a` (first) and `b` (second); pairs are ordered
//! lexicographically.

use crate::linalg::Mat;
use crate::poly::MPoly;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlueckerError {
    #[error("pencil generators are linearly dependent")]
    DependentGenerators,
    #[error("unsupported ambient dimension {0} (expected 4 or 9)")]
    UnsupportedDimension(usize),
    #[error("vector is not decomposable (not the Plücker vector of a line)")]
    NotDecomposable,
    #[error("coordinate vector has wrong length {got} (expected {want})")]
    LengthMismatch { got: usize, want: usize },
}

/// A line of forms, spanned by two independent coefficient vectors in the
/// ambient projective space ℙⁿ (n = 4 for quartics, 9 for cubics).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pencil {
    pub dim: usize,
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
}

/// Plücker coordinates `p_ij` (i < j, lexicographic) of a line in ℙⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerVector {
    pub dim: usize,
    pub coords: Vec<Scalar>,
}

/// Lexicographic list of index pairs `(i, j)` with `i < j < m`.
pub fn pair_list(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            out.push((i, j));
        }
    }
    out
}

/// Position of the pair `(i, j)` in [`pair_list`].
pub fn pair_pos(m: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < m);
    // pairs starting below i, plus offset within row i
    i * m - i * (i + 1) / 2 + (j - i - 1)
}

impl Pencil {
    pub fn new(dim: usize, a: Vec<Scalar>, b: Vec<Scalar>) -> Result<Self, PlueckerError> {
        let m = dim + 1;
        if a.len() != m {
            return Err(PlueckerError::LengthMismatch { got: a.len(), want: m });
        }
        if b.len() != m {
            return Err(PlueckerError::LengthMismatch { got: b.len(), want: m });
        }
        let field = a[0].spec();
        let mat = Mat::from_rows(field, vec![a.clone(), b.clone()]);
        if mat.rank() != 2 {
            return Err(PlueckerError::DependentGenerators);
        }
        Ok(Pencil { dim, a, b })
    }

    pub fn from_cubics(
        f: &crate::forms::TernaryCubic,
        g: &crate::forms::TernaryCubic,
    ) -> Result<Self, PlueckerError> {
        Pencil::new(9, f.coeffs.to_vec(), g.coeffs.to_vec())
    }

    pub fn from_quartics(
        f: &crate::forms::BinaryQuartic,
        g: &crate::forms::BinaryQuartic,
    ) -> Result<Self, PlueckerError> {
        Pencil::new(4, f.coeffs.to_vec(), g.coeffs.to_vec())
    }

    pub fn field(&self) -> FieldSpec {
        self.a[0].spec()
    }
}

/// Plücker coordinates of a pencil: `p_ij = a_i b_j - a_j b_i`.
pub fn pluecker_of(pencil: &Pencil) -> PluckerVector {
    let m = pencil.dim + 1;
    let coords = pair_list(m)
        .into_iter()
        .map(|(i, j)| {
            &(&pencil.a[i] * &pencil.b[j]) - &(&pencil.a[j] * &pencil.b[i])
        })
        .collect();
    PluckerVector {
        dim: pencil.dim,
        coords,
    }
}

/// Plücker coordinates of a symbolic pencil: entries of `a` and `b` are
/// polynomials (all of one arity/field), and the output minors are
/// polynomials too.
pub fn pluecker_polys(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    assert_eq!(a.len(), b.len());
    pair_list(a.len())
        .into_iter()
        .map(|(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]))
        .collect()
}

impl PluckerVector {
    pub fn field(&self) -> FieldSpec {
        self.coords[0].spec()
    }

    /// Signed accessor: `at(i, j) = -at(j, i)`, `at(i, i) = 0`.
    pub fn at(&self, i: usize, j: usize) -> Scalar {
        let m = self.dim + 1;
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coords[pair_pos(m, i, j)].clone(),
            std::cmp::Ordering::Equal => self.field().zero(),
            std::cmp::Ordering::Greater => -&self.coords[pair_pos(m, j, i)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Coordinates with their conventional names `p_i_j`.
    pub fn named_coords(&self) -> Vec<(String, Scalar)> {
        pair_list(self.dim + 1)
            .into_iter()
            .zip(self.coords.iter())
            .map(|((i, j), c)| (format!("p_{i}_{j}"), c.clone()))
            .collect()
    }
}

/// The `C(n+1, 4)` three-term Plücker quadrics cutting out G(1,n):
/// `p_ij p_kl - p_ik p_jl + p_il p_jk` for `i<j<k<l`, as rational
/// polynomials in the `C(n+1, 2)` Plücker variables (pair order as in
/// [`pair_list`]).
pub fn pluecker_relations(n: usize) -> Result<Vec<MPoly>, PlueckerError> {
    if n != 4 && n != 9 {
        return Err(PlueckerError::UnsupportedDimension(n));
    }
    let m = n + 1;
    let arity = m * (m - 1) / 2;
    let field = FieldSpec::Q;
    let var = |i: usize, j: usize| MPoly::var(arity, field, pair_pos(m, i, j));
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                for l in k + 1..m {
                    let q = &(&(&var(i, j) * &var(k, l)) - &(&var(i, k) * &var(j, l)))
                        + &(&var(i, l) * &var(j, k));
                    out.push(q);
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates every Plücker quadric at a coordinate vector.
pub fn relations_at(v: &PluckerVector) -> Result<Vec<Scalar>, PlueckerError> {
    let rels = pluecker_relations(v.dim)?;
    let field = v.field();
    Ok(rels.iter().map(|r| r.eval_in(&v.coords, field)).collect())
}

/// Recovers a generating pair of a line from its Plücker vector, or reports
/// non-decomposability. Rows of the antisymmetric matrix `(p_ij)` span the
/// line when the vector is decomposable.
pub fn recover_generators(v: &PluckerVector) -> Result<(Vec<Scalar>, Vec<Scalar>), PlueckerError> {
    let m = v.dim + 1;
    let field = v.field();
    let rows: Vec<Vec<Scalar>> = (0..m)
        .map(|i| (0..m).map(|j| v.at(i, j)).collect())
        .collect();
    let mat = Mat::from_rows(field, rows.clone());
    if mat.rank() != 2 {
        return Err(PlueckerError::NotDecomposable);
    }
    // also insist the quadrics vanish: rank 2 of the antisymmetric matrix
    // already implies decomposability, this is a cheap belt-and-braces check
    if relations_at(v)?.iter().any(|s| !s.is_zero()) {
        return Err(PlueckerError::NotDecomposable);
    }
    let first = rows
        .iter()
        .position(|r| r.iter().any(|s| !s.is_zero()))
        .expect("rank 2 matrix has a nonzero row");
    let a = rows[first].clone();
    let b = rows
        .iter()
        .skip(first + 1)
        .find(|r| {
            let m2 = Mat::from_rows(field, vec![a.clone(), (*r).clone()]);
            m2.rank() == 2
        })
        .cloned()
        .ok_or(PlueckerError::NotDecomposable)?;
    Ok((a, b))
}

/// True when the coefficient vector `f` lies on the line with Plücker
/// vector `v`.
pub fn line_membership(v: &PluckerVector, f: &[Scalar]) -> Result<bool, PlueckerError> {
    let m = v.dim + 1;
    if f.len() != m {
        return Err(PlueckerError::LengthMismatch { got: f.len(), want: m });
    }
    let (a, b) = recover_generators(v)?;
    let mat = Mat::from_rows(v.field(), vec![a, b, f.to_vec()]);
    Ok(mat.rank() <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::TernaryCubic;
    use crate::sampling::{random_scalar_vec, rng_from_seed};

    fn unit(dim: usize, idx: usize) -> Vec<Scalar> {
        let mut v = vec![FieldSpec::Q.zero(); dim + 1];
        v[idx] = Scalar::int(1);
        v
    }

    #[test]
    fn pair_positions_are_lexicographic() {
        for m in [5, 10] {
            let pairs = pair_list(m);
            assert_eq!(pairs.len(), m * (m - 1) / 2);
            for (pos, &(i, j)) in pairs.iter().enumerate() {
                assert_eq!(pair_pos(m, i, j), pos);
            }
        }
    }

    #[test]
    fn basis_pencil_single_coordinate() {
        let p = Pencil::new(9, unit(9, 0), unit(9, 6)).unwrap();
        let v = pluecker_of(&p);
        for ((i, j), c) in pair_list(10).into_iter().zip(&v.coords) {
            if (i, j) == (0, 6) {
                assert_eq!(*c, Scalar::int(1));
            } else {
                assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn fermat_xyz_pencil_coordinates() {
        let f = TernaryCubic::parse("x^3+y^3+z^3", FieldSpec::Q).unwrap();
        let g = TernaryCubic::parse("xyz", FieldSpec::Q).unwrap();
        let p = Pencil::from_cubics(&f, &g).unwrap();
        let v = pluecker_of(&p);
        for ((i, j), c) in pair_list(10).into_iter().zip(&v.coords) {
            match (i, j) {
                (0, 4) => assert_eq!(*c, Scalar::rat(1, 6)),
                (4, 6) | (4, 9) => assert_eq!(*c, Scalar::rat(-1, 6)),
                _ => assert!(c.is_zero(), "unexpected nonzero p_{i}_{j}"),
            }
        }
    }

    #[test]
    fn generator_swap_negates() {
        let mut rng = rng_from_seed(41);
        let a = random_scalar_vec(&mut rng, 10);
        let b = random_scalar_vec(&mut rng, 10);
        let p = Pencil::new(9, a.clone(), b.clone()).unwrap();
        let q = Pencil::new(9, b, a).unwrap();
        let (vp, vq) = (pluecker_of(&p), pluecker_of(&q));
        for (x, y) in vp.coords.iter().zip(&vq.coords) {
            assert_eq!(*x, -y);
        }
    }

    #[test]
    fn relation_counts_and_unsupported() {
        assert_eq!(pluecker_relations(4).unwrap().len(), 5);
        assert_eq!(pluecker_relations(9).unwrap().len(), 210);
        assert_eq!(
            pluecker_relations(3),
            Err(PlueckerError::UnsupportedDimension(3))
        );
    }

    #[test]
    fn relations_vanish_on_random_pencils() {
        let mut rng = rng_from_seed(42);
        for dim in [4usize, 9] {
            for _ in 0..10 {
                let a = random_scalar_vec(&mut rng, dim + 1);
                let b = random_scalar_vec(&mut rng, dim + 1);
                let Ok(p) = Pencil::new(dim, a, b) else { continue };
                let v = pluecker_of(&p);
                assert!(relations_at(&v).unwrap().iter().all(|s| s.is_zero()));
            }
        }
    }

    #[test]
    fn relations_vanish_symbolically() {
        // generic generators: a_i at 0..10, b_i at 10..20
        let arity = 20;
        let q = FieldSpec::Q;
        let a: Vec<MPoly> = (0..10).map(|i| MPoly::var(arity, q, i)).collect();
        let b: Vec<MPoly> = (0..10).map(|i| MPoly::var(arity, q, 10 + i)).collect();
        let coords = pluecker_polys(&a, &b);
        for rel in pluecker_relations(9).unwrap() {
            assert!(rel.substitute(&coords).is_zero());
        }
    }

    #[test]
    fn unimodular_generator_change_rescales() {
        let mut rng = rng_from_seed(43);
        let a = random_scalar_vec(&mut rng, 10);
        let b = random_scalar_vec(&mut rng, 10);
        let p = Pencil::new(9, a.clone(), b.clone()).unwrap();
        // new generators (2a+3b, a+2b): determinant 1
        let a2: Vec<Scalar> = (0..10)
            .map(|i| &(&Scalar::int(2) * &a[i]) + &(&Scalar::int(3) * &b[i]))
            .collect();
        let b2: Vec<Scalar> = (0..10)
            .map(|i| &a[i] + &(&Scalar::int(2) * &b[i]))
            .collect();
        let q = Pencil::new(9, a2, b2).unwrap();
        assert_eq!(pluecker_of(&p), pluecker_of(&q));
    }

    #[test]
    fn dependent_generators_rejected() {
        let a = unit(9, 0);
        let b: Vec<Scalar> = a.iter().map(|s| &Scalar::int(3) * s).collect();
        assert_eq!(Pencil::new(9, a, b), Err(PlueckerError::DependentGenerators));
    }

    #[test]
    fn membership_examples() {
        let f = TernaryCubic::parse("x^3+y^3+z^3", FieldSpec::Q).unwrap();
        let g = TernaryCubic::parse("xyz", FieldSpec::Q).unwrap();
        let v = pluecker_of(&Pencil::from_cubics(&f, &g).unwrap());
        assert!(line_membership(&v, &f.coeffs).unwrap());
        let sum: Vec<Scalar> = (0..10).map(|i| &f.coeffs[i] + &g.coeffs[i]).collect();
        assert!(line_membership(&v, &sum).unwrap());
        let x3 = TernaryCubic::parse("x^3", FieldSpec::Q).unwrap();
        assert!(!line_membership(&v, &x3.coeffs).unwrap());
    }

    #[test]
    fn non_decomposable_rejected() {
        // p_01 = p_23 = 1, the classic non-decomposable bivector
        let m = 10;
        let mut coords = vec![FieldSpec::Q.zero(); m * (m - 1) / 2];
        coords[pair_pos(m, 0, 1)] = Scalar::int(1);
        coords[pair_pos(m, 2, 3)] = Scalar::int(1);
        let v = PluckerVector { dim: 9, coords };
        assert_eq!(
            line_membership(&v, &vec![Scalar::int(1); 10]),
            Err(PlueckerError::NotDecomposable)
        );
    }
}
