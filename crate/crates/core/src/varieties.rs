//! Equation systems for the two Hesse pencil varieties: `H3` inside
//! `G(1,4)` (pencils of binary quartics) and `N` inside `G(1,9)` (pencils of
//! plane cubics). Membership tests, symbolic membership certificates,
//! Jacobian assembly with exact rank, and the through-a-point linear system
//! `M(f): g -> n(p(f, g))`.

use crate::forms::{
    cubic_hessian_generic, quartic_hessian_generic,
    BinaryQuartic, TernaryCubic,
};
use crate::invariant_r::{nvector, Certificate};
use crate::linalg::Mat;
use crate::pluecker::{pair_list, pair_pos, pluecker_of, pluecker_polys, pluecker_relations, Pencil};
use crate::scalar::{FieldSpec, Scalar};
use crate::MPoly;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VarietyError {
    #[error("pencil lives in G(1,{got}) but the system is on G(1,{want})")]
    WrongAmbient { got: usize, want: usize },
    #[error("point is not on the variety: {0}")]
    NotOnVariety(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum VarietyKind {
    H3,
    N,
}

/// Generators of a Hesse pencil variety: linear forms in the Plücker
/// variables plus the Plücker quadrics of the ambient Grassmannian.
#[derive(Debug)]
pub struct VarietySystem {
    kind: VarietyKind,
    /// Projective dimension of the space of forms (4 or 9).
    form_dim: usize,
    linear: Vec<MPoly>,
    quadrics: Vec<MPoly>,
}

/// The three linear forms cutting `H3` out of `G(1,4)`:
/// `3p_23 - p_14`, `2p_13 - p_04`, `3p_12 - p_03`.
pub fn h3_linear_forms() -> &'static [MPoly; 3] {
    static CELL: OnceLock<[MPoly; 3]> = OnceLock::new();
    CELL.get_or_init(|| {
        let q = FieldSpec::Q;
        let var = |i: usize, j: usize| MPoly::var(10, q, pair_pos(5, i, j));
        let form = |c1: i64, (i1, j1), (i2, j2)| {
            &var(i1, j1).scalar_mul(&q.from_int(c1)) - &var(i2, j2)
        };
        [
            form(3, (2, 3), (1, 4)),
            form(2, (1, 3), (0, 4)),
            form(3, (1, 2), (0, 3)),
        ]
    })
}

impl VarietySystem {
    /// The system for `H3` in `G(1,4)`: 3 linear forms + 5 Plücker quadrics.
    pub fn h3() -> &'static VarietySystem {
        static CELL: OnceLock<VarietySystem> = OnceLock::new();
        CELL.get_or_init(|| VarietySystem {
            kind: VarietyKind::H3,
            form_dim: 4,
            linear: h3_linear_forms().to_vec(),
            quadrics: pluecker_relations(4).expect("G(1,4) supported"),
        })
    }

    /// The system for `N` in `G(1,9)`: the 10 n-forms + 210 Plücker quadrics.
    pub fn n() -> &'static VarietySystem {
        static CELL: OnceLock<VarietySystem> = OnceLock::new();
        CELL.get_or_init(|| VarietySystem {
            kind: VarietyKind::N,
            form_dim: 9,
            linear: nvector().to_vec(),
            quadrics: pluecker_relations(9).expect("G(1,9) supported"),
        })
    }

    pub fn kind(&self) -> VarietyKind {
        self.kind
    }

    /// Number of Plücker variables (10 or 45).
    pub fn ambient_vars(&self) -> usize {
        (self.form_dim + 1) * self.form_dim / 2
    }

    pub fn linear_forms(&self) -> &[MPoly] {
        &self.linear
    }

    pub fn quadrics(&self) -> &[MPoly] {
        &self.quadrics
    }

    /// Expected Jacobian rank at a smooth point: the codimension of the
    /// variety in the Plücker projective space.
    pub fn smooth_rank(&self) -> usize {
        match self.kind {
            VarietyKind::H3 => 6,  // dim 3 in P^9
            VarietyKind::N => 36,  // dim 8 in P^44
        }
    }
}

/// True iff every linear and quadratic generator vanishes at the Plücker
/// point of the pencil. The quadrics vanish automatically for genuine
/// pencils, so this is a membership test for the linear span condition.
pub fn membership(sys: &VarietySystem, pencil: &Pencil) -> Result<bool, VarietyError> {
    if pencil.dim != sys.form_dim {
        return Err(VarietyError::WrongAmbient {
            got: pencil.dim,
            want: sys.form_dim,
        });
    }
    let point = pluecker_of(pencil).coords;
    let field = pencil.field();
    let all = sys.linear.iter().chain(sys.quadrics.iter());
    Ok(all.map(|g| g.eval_in(&point, field)).all(|v| v.is_zero()))
}

/// Certifies, as polynomial identities in the generic coefficients
/// `a_0..a_d`, that every linear form of the system vanishes on the Plücker
/// vector of the generic pencil `<f, H(f)>`. A control form (`p_01`) is
/// also checked and must NOT vanish.
pub fn symbolic_membership_certificate(sys: &VarietySystem) -> Certificate {
    let m = sys.form_dim + 1;
    let a: Vec<MPoly> = (0..m).map(|i| MPoly::var(m, FieldSpec::Q, i)).collect();
    let h: Vec<MPoly> = match sys.kind {
        VarietyKind::H3 => quartic_hessian_generic().to_vec(),
        VarietyKind::N => cubic_hessian_generic().to_vec(),
    };
    let p = pluecker_polys(&a, &h);
    let mut residuals = Vec::new();
    for (idx, form) in sys.linear.iter().enumerate() {
        let pulled = form.substitute(&p);
        if !pulled.is_zero() {
            residuals.push(format!("linear form {idx}: {pulled}"));
        }
    }
    // control: the raw coordinate p_01 is not an equation of the variety
    if p[pair_pos(m, 0, 1)].is_zero() {
        residuals.push("control form p_01 vanished identically".into());
    }
    let name = match sys.kind {
        VarietyKind::H3 => "h3-linear-forms-vanish-on-hessian-pencils",
        VarietyKind::N => "n-forms-vanish-on-hessian-pencils",
    };
    Certificate::from_residuals(name, residuals)
}

/// Exact rank report for the Jacobian of all generators at a point of the
/// variety.
#[derive(Debug, Clone, serde::Serialize)]
pub struct JacobianReport {
    pub kind: VarietyKind,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub expected_smooth_rank: usize,
    pub smooth: bool,
    /// Primes at which the modular rank matched the characteristic-zero
    /// rank (empty when the pencil is not rational).
    pub cross_check_primes: Vec<u64>,
}

/// First partial derivatives of every generator, cached per system.
fn jacobian_polys(sys: &VarietySystem) -> Vec<Vec<MPoly>> {
    let nvars = sys.ambient_vars();
    sys.linear
        .iter()
        .chain(sys.quadrics.iter())
        .map(|g| (0..nvars).map(|v| g.derivative(v)).collect())
        .collect()
}

fn jacobian_matrix_at(sys: &VarietySystem, point: &[Scalar], field: FieldSpec) -> Mat {
    let rows = jacobian_polys(sys)
        .iter()
        .map(|grads| grads.iter().map(|d| d.eval_in(point, field)).collect())
        .collect();
    Mat::from_rows(field, rows)
}

/// Assembles the Jacobian of all linear and quadratic generators at the
/// Plücker point of `pencil` and computes its exact rank by fraction-free
/// elimination, double-checked modulo two primes for rational pencils.
pub fn jacobian_rank(sys: &VarietySystem, pencil: &Pencil) -> Result<JacobianReport, VarietyError> {
    if !membership(sys, pencil)? {
        return Err(VarietyError::NotOnVariety(format!(
            "pencil in G(1,{}) does not satisfy the linear forms",
            pencil.dim
        )));
    }
    let point = pluecker_of(pencil).coords;
    let field = pencil.field();
    let jac = jacobian_matrix_at(sys, &point, field);
    let rank = jac.rank();
    let mut cross_check_primes = Vec::new();
    if field == FieldSpec::Q {
        for p in [10007u64, 32003] {
            match jac.reduce_mod_p(p) {
                Some(m) if m.rank() == rank => cross_check_primes.push(p),
                // a bad prime (denominator or rank drop) is skipped, not fatal
                _ => {}
            }
        }
        assert!(
            !cross_check_primes.is_empty(),
            "no prime confirmed the characteristic-zero rank"
        );
    }
    Ok(JacobianReport {
        kind: sys.kind,
        rows: jac.nrows(),
        cols: jac.ncols(),
        rank,
        expected_smooth_rank: sys.smooth_rank(),
        smooth: rank == sys.smooth_rank(),
        cross_check_primes,
    })
}

/// Plücker coordinates of the (possibly degenerate) span of two raw
/// coefficient vectors, without the rank-2 validation of [`Pencil`].
pub fn pluecker_raw(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    pair_list(a.len())
        .into_iter()
        .map(|(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]))
        .collect()
}

/// The linear system cutting out the pencils through a fixed form: the
/// matrix of `g -> (linear forms)(p(f, g))` in the standard basis, with its
/// kernel. The kernel always contains `f`; for a generic smooth form it is
/// exactly `span{f, H(f)}`.
#[derive(Debug, Clone)]
pub struct ThroughPointSystem {
    pub matrix: Mat,
    pub kernel: Vec<Vec<Scalar>>,
}

impl ThroughPointSystem {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }

    /// Dimension of the projective family of pencils through the point,
    /// `kernel_dim - 2` (the span of `f` and one kernel mate is a single
    /// pencil).
    pub fn family_dim(&self) -> usize {
        self.kernel_dim().saturating_sub(2)
    }
}

fn through_point(linear: &[MPoly], f: &[Scalar]) -> ThroughPointSystem {
    let m = f.len();
    let field = f[0].spec();
    let mut rows = vec![Vec::with_capacity(m); linear.len()];
    for j in 0..m {
        let mut e = vec![field.zero(); m];
        e[j] = field.one();
        let p = pluecker_raw(f, &e);
        for (i, form) in linear.iter().enumerate() {
            rows[i].push(form.eval_in(&p, field));
        }
    }
    let matrix = Mat::from_rows(field, rows);
    let kernel = matrix.kernel_basis();
    ThroughPointSystem { matrix, kernel }
}

/// The 10x10 system `g -> n(p(f, g))` for a plane cubic `f`.
pub fn through_point_system(f: &TernaryCubic) -> ThroughPointSystem {
    assert!(!f.is_zero(), "the through-point system needs a nonzero cubic");
    through_point(nvector(), &f.coeffs)
}

/// The 3x5 quartic analog: `g -> (H3 linear forms)(p(f, g))`.
pub fn through_point_system_quartic(f: &BinaryQuartic) -> ThroughPointSystem {
    assert!(!f.is_zero(), "the through-point system needs a nonzero quartic");
    through_point(h3_linear_forms(), &f.coeffs)
}

/// One row of the through-point catalog: an orbit representative and the
/// expected kernel dimension of its through-point system (projective family
/// dimension + 2).
pub struct ThroughPointRow {
    pub cubic: &'static str,
    pub kernel_dim: usize,
}

/// The catalog of orbit representatives with the dimension of the family of
/// pencils through each that lie in `N`.
pub fn through_point_rows() -> Vec<ThroughPointRow> {
    let row = |cubic, kernel_dim| ThroughPointRow { cubic, kernel_dim };
    vec![
        row("x^3", 6),
        row("xy(x+y)", 4),
        row("x^2y", 4),
        row("x(x^2+yz)", 2),
        row("x(y^2+xz)", 2),
        row("y^2z-x^3-x^2z", 2),
        row("y^2z-x^3", 2),
        row("x^3+y^3+z^3-6xyz", 2),
        row("xyz", 4),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{hessian_cubic, hessian_quartic, TernaryCubic};
    use crate::sampling::{random_scalar_vec, rng_from_seed};

    fn cubic(s: &str) -> TernaryCubic {
        TernaryCubic::parse(s, FieldSpec::Q).unwrap()
    }

    fn quartic(s: &str) -> BinaryQuartic {
        BinaryQuartic::parse(s, FieldSpec::Q).unwrap()
    }

    fn random_smooth_cubic(rng: &mut rand_chacha::ChaCha8Rng) -> TernaryCubic {
        loop {
            let c = TernaryCubic::new(random_scalar_vec(rng, 10).try_into().unwrap());
            let h = hessian_cubic(&c);
            // smooth enough for our purposes: Hessian defined and
            // independent from the cubic
            if !h.is_zero() && Pencil::from_cubics(&c, &h).is_ok() {
                return c;
            }
        }
    }

    #[test]
    fn generator_counts() {
        let h3 = VarietySystem::h3();
        assert_eq!((h3.linear_forms().len(), h3.quadrics().len()), (3, 5));
        assert_eq!(h3.ambient_vars(), 10);
        let n = VarietySystem::n();
        assert_eq!((n.linear_forms().len(), n.quadrics().len()), (10, 210));
        assert_eq!(n.ambient_vars(), 45);
    }

    #[test]
    fn symbolic_certificates_pass() {
        let c = symbolic_membership_certificate(VarietySystem::h3());
        assert!(c.passed, "H3 residuals: {:?}", c.residuals);
        let c = symbolic_membership_certificate(VarietySystem::n());
        assert!(c.passed, "N residuals: {:?}", c.residuals);
    }

    #[test]
    fn fermat_pencil_is_in_n() {
        let f = cubic("x^3+y^3+z^3");
        let g = cubic("xyz");
        let pencil = Pencil::from_cubics(&f, &g).unwrap();
        assert!(membership(VarietySystem::n(), &pencil).unwrap());
    }

    #[test]
    fn quartic_model_pencil_is_in_h3() {
        let f = quartic("x^4+y^4");
        let g = quartic("x^2y^2");
        let pencil = Pencil::from_quartics(&f, &g).unwrap();
        assert!(membership(VarietySystem::h3(), &pencil).unwrap());
    }

    #[test]
    fn cube_pencil_is_not_in_n() {
        let pencil = Pencil::from_cubics(&cubic("x^3"), &cubic("y^3")).unwrap();
        assert!(!membership(VarietySystem::n(), &pencil).unwrap());
    }

    #[test]
    fn hessian_pencils_are_members_for_random_forms() {
        let mut rng = rng_from_seed(42);
        for _ in 0..5 {
            let f = random_smooth_cubic(&mut rng);
            let pencil = Pencil::from_cubics(&f, &hessian_cubic(&f)).unwrap();
            assert!(membership(VarietySystem::n(), &pencil).unwrap());
        }
    }

    #[test]
    fn wrong_ambient_is_an_error() {
        let pencil = Pencil::from_quartics(&quartic("x^4"), &quartic("y^4")).unwrap();
        assert_eq!(
            membership(VarietySystem::n(), &pencil),
            Err(VarietyError::WrongAmbient { got: 4, want: 9 })
        );
    }

    #[test]
    fn jacobian_rank_at_the_fermat_pencil_is_36() {
        let pencil = Pencil::from_cubics(&cubic("x^3+y^3+z^3"), &cubic("xyz")).unwrap();
        let report = jacobian_rank(VarietySystem::n(), &pencil).unwrap();
        assert_eq!(report.rank, 36);
        assert!(report.smooth);
        assert!(!report.cross_check_primes.is_empty());
    }

    #[test]
    fn jacobian_rank_at_the_singular_orbits_is_35() {
        for (f, g) in [("x^2y", "x^2z"), ("x^3", "x^2y")] {
            let pencil = Pencil::from_cubics(&cubic(f), &cubic(g)).unwrap();
            let report = jacobian_rank(VarietySystem::n(), &pencil).unwrap();
            assert_eq!(report.rank, 35, "rank at <{f},{g}>");
            assert!(!report.smooth);
        }
    }

    #[test]
    fn jacobian_rank_on_h3_is_6() {
        let pencil =
            Pencil::from_quartics(&quartic("x^4+y^4"), &quartic("x^2y^2")).unwrap();
        let report = jacobian_rank(VarietySystem::h3(), &pencil).unwrap();
        assert_eq!(report.rank, 6);
        assert!(report.smooth);
    }

    #[test]
    fn jacobian_rank_off_the_variety_is_an_error() {
        let pencil = Pencil::from_cubics(&cubic("x^3"), &cubic("y^3")).unwrap();
        assert!(matches!(
            jacobian_rank(VarietySystem::n(), &pencil),
            Err(VarietyError::NotOnVariety(_))
        ));
    }

    #[test]
    fn through_point_kernel_of_a_generic_smooth_cubic_is_the_hessian_pencil() {
        let f = cubic("x^3+y^3+z^3+xyz");
        let sys = through_point_system(&f);
        assert_eq!(sys.kernel_dim(), 2);
        assert_eq!(sys.family_dim(), 0);
        // both f and H(f) are annihilated by the system
        let h = hessian_cubic(&f);
        for v in [&f.coeffs[..], &h.coeffs[..]] {
            for i in 0..10 {
                let dot = (0..10).fold(FieldSpec::Q.zero(), |acc, j| {
                    &acc + &(sys.matrix.at(i, j) * &v[j])
                });
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn through_point_catalog_dimensions() {
        for row in through_point_rows() {
            let sys = through_point_system(&cubic(row.cubic));
            assert_eq!(
                sys.kernel_dim(),
                row.kernel_dim,
                "kernel dimension at {}",
                row.cubic
            );
        }
    }

    #[test]
    fn through_point_kernel_dim_is_2_for_random_smooth_cubics() {
        let mut rng = rng_from_seed(7);
        for _ in 0..25 {
            let f = random_smooth_cubic(&mut rng);
            assert_eq!(through_point_system(&f).kernel_dim(), 2);
        }
    }

    #[test]
    fn quartic_through_point_analog() {
        let sys = through_point_system_quartic(&quartic("x^4+y^4"));
        assert_eq!(sys.kernel_dim(), 2);
        // the kernel is spanned by f and its Hessian
        let f = quartic("x^4+y^4");
        let h = hessian_quartic(&f);
        let mut rows = sys.kernel.clone();
        rows.push(f.coeffs.to_vec());
        rows.push(h.coeffs.to_vec());
        assert_eq!(Mat::from_rows(FieldSpec::Q, rows).rank(), 2);
    }

    #[test]
    fn jacobian_rank_is_invariant_under_redundant_generators() {
        // rank at a point of the variety depends only on the ideal: replace
        // the 210 quadrics by 200 random combinations (mod p for speed) and
        // compare at 10 sample pencils
        use crate::sampling::vec_mod_p;
        use rand::Rng;
        let p = 10007u64;
        let fp = FieldSpec::Fp(p);
        let sys = VarietySystem::n();
        let grads = jacobian_polys(sys);
        let mut rng = rng_from_seed(11);
        for _ in 0..10 {
            let f = random_smooth_cubic(&mut rng);
            let pencil = Pencil::from_cubics(&f, &hessian_cubic(&f)).unwrap();
            let point = vec_mod_p(&pluecker_of(&pencil).coords, p).unwrap();
            let full: Vec<Vec<Scalar>> = grads
                .iter()
                .map(|g| g.iter().map(|d| d.eval_in(&point, fp)).collect())
                .collect();
            let full_rank = Mat::from_rows(fp, full.clone()).rank();
            // keep the 10 linear rows, rebuild the quadric rows as random
            // combinations of the originals
            let mut combos: Vec<Vec<Scalar>> = full[..10].to_vec();
            for _ in 0..200 {
                let weights: Vec<Scalar> =
                    (0..210).map(|_| fp.from_int(rng.gen_range(0..p as i64))).collect();
                let mut row = vec![fp.zero(); 45];
                for (w, src) in weights.iter().zip(&full[10..]) {
                    for (acc, v) in row.iter_mut().zip(src) {
                        *acc = &*acc + &(w * v);
                    }
                }
                combos.push(row);
            }
            assert_eq!(Mat::from_rows(fp, combos).rank(), full_rank);
        }
    }
}
