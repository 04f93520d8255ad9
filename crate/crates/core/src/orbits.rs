//! Infinitesimal `sl(3)`/`sl(2)` actions, exact orbit dimensions at pencils,
//! the orbit-representative catalogs for both Hesse pencil varieties, and
//! explicit degeneration families with exact `eps -> 0` Plücker limits.

use crate::forms::{BinaryQuartic, TernaryCubic};
use crate::linalg::{projectively_equal, Mat};
use crate::pluecker::{pluecker_of, recover_generators, Pencil, PluckerVector};
use crate::poly::parse;
use crate::scalar::{FieldSpec, Scalar};
use crate::varieties::{jacobian_rank, membership, VarietySystem};
use crate::MPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("matrix has nonzero trace {0}")]
    NonzeroTrace(String),
    #[error("orbit dimension is only defined on G(1,4) and G(1,9), not G(1,{0})")]
    UnsupportedAmbient(usize),
    #[error("degeneration limit failed: {0}")]
    BadLimit(String),
}

/// The fixed basis of `sl(3)`: the six off-diagonal units `E_ij` followed by
/// `diag(1,-1,0)` and `diag(0,1,-1)`.
pub fn sl3_basis() -> Vec<[[i64; 3]; 3]> {
    let mut out = Vec::with_capacity(8);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m = [[0i64; 3]; 3];
                m[i][j] = 1;
                out.push(m);
            }
        }
    }
    out.push([[1, 0, 0], [0, -1, 0], [0, 0, 0]]);
    out.push([[0, 0, 0], [0, 1, 0], [0, 0, -1]]);
    out
}

/// The fixed basis of `sl(2)`: `E_12`, `E_21`, `diag(1,-1)`.
pub fn sl2_basis() -> Vec<[[i64; 2]; 2]> {
    vec![[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, -1]]]
}

/// Derivation action of a traceless matrix on a form in `n` variables:
/// the coefficient vector of `-grad(f) . X . vars`.
fn action_poly(x: &[Vec<Scalar>], f: &MPoly) -> MPoly {
    let n = x.len();
    assert_eq!(f.arity(), n);
    let field = f.field();
    let mut acc = MPoly::zero(n, field);
    for i in 0..n {
        let mut xv = MPoly::zero(n, field);
        for j in 0..n {
            if !x[i][j].is_zero() {
                xv = &xv + &MPoly::var(n, field, j).scalar_mul(&x[i][j]);
            }
        }
        acc = &acc + &(&f.derivative(i) * &xv);
    }
    acc.neg()
}

fn check_traceless(x: &[Vec<Scalar>]) -> Result<(), OrbitError> {
    let mut tr = x[0][0].spec().zero();
    for (i, row) in x.iter().enumerate() {
        tr = &tr + &row[i];
    }
    if tr.is_zero() {
        Ok(())
    } else {
        Err(OrbitError::NonzeroTrace(tr.to_string()))
    }
}

/// Infinitesimal `sl(3)` action on a plane cubic.
pub fn infinitesimal_action_cubic(
    x: &[Vec<Scalar>],
    f: &TernaryCubic,
) -> Result<TernaryCubic, OrbitError> {
    check_traceless(x)?;
    let g = action_poly(x, &f.to_poly());
    Ok(TernaryCubic::from_poly(&g).expect("action preserves cubics"))
}

/// Infinitesimal `sl(2)` action on a binary quartic.
pub fn infinitesimal_action_quartic(
    x: &[Vec<Scalar>],
    f: &BinaryQuartic,
) -> Result<BinaryQuartic, OrbitError> {
    check_traceless(x)?;
    let g = action_poly(x, &f.to_poly());
    Ok(BinaryQuartic::from_poly(&g).expect("action preserves quartics"))
}

fn int_matrix(field: FieldSpec, m: &[&[i64]]) -> Vec<Vec<Scalar>> {
    m.iter()
        .map(|row| row.iter().map(|&v| field.from_int(v)).collect())
        .collect()
}

/// Dimension of the `SL`-orbit of a pencil: the rank of the tangent map
/// `X -> (X.f mod L, X.g mod L)` into `(V/L)^2`, computed basis-free as
/// `rank([rows (X.f, X.g)] + [rows spanning (L, 0) and (0, L)]) - 4`.
pub fn orbit_dimension(pencil: &Pencil) -> Result<usize, OrbitError> {
    let field = pencil.field();
    let ncoef = pencil.dim + 1;
    let act = |x: &[Vec<Scalar>], v: &[Scalar]| -> Vec<Scalar> {
        match pencil.dim {
            9 => infinitesimal_action_cubic(x, &TernaryCubic::new(v.to_vec().try_into().unwrap()))
                .unwrap()
                .coeffs
                .to_vec(),
            4 => infinitesimal_action_quartic(
                x,
                &BinaryQuartic::new(v.to_vec().try_into().unwrap()),
            )
            .unwrap()
            .coeffs
            .to_vec(),
            _ => unreachable!(),
        }
    };
    let basis: Vec<Vec<Vec<Scalar>>> = match pencil.dim {
        9 => sl3_basis()
            .iter()
            .map(|m| int_matrix(field, &m.iter().map(|r| &r[..]).collect::<Vec<_>>()))
            .collect(),
        4 => sl2_basis()
            .iter()
            .map(|m| int_matrix(field, &m.iter().map(|r| &r[..]).collect::<Vec<_>>()))
            .collect(),
        d => return Err(OrbitError::UnsupportedAmbient(d)),
    };
    let zero = vec![field.zero(); ncoef];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for x in &basis {
        let mut row = act(x, &pencil.a);
        row.extend(act(x, &pencil.b));
        rows.push(row);
    }
    for (u, v) in [
        (&pencil.a, &zero),
        (&pencil.b, &zero),
        (&zero, &pencil.a),
        (&zero, &pencil.b),
    ] {
        let mut row = u.clone();
        row.extend(v.iter().cloned());
        rows.push(row);
    }
    Ok(Mat::from_rows(field, rows).rank() - 4)
}

/// A named orbit representative with its expected orbit dimension and
/// Jacobian rank.
#[derive(Debug, Clone, serde::Serialize)]
pub struct OrbitRep {
    pub name: &'static str,
    pub f: &'static str,
    pub g: &'static str,
    pub dim: usize,
    pub rank: usize,
}

/// The nine orbits of pencils of plane cubics contained in `N`, with their
/// dimensions and Jacobian ranks. The two rank-35 rows are exactly the
/// singular locus.
pub fn cubic_orbit_reps() -> Vec<OrbitRep> {
    let rep = |name, f, g, dim, rank| OrbitRep { name, f, g, dim, rank };
    vec![
        rep("fermat", "x^3+y^3+z^3", "xyz", 8, 36),
        rep("nodal", "y^2z-x^3-x^2z", "3xy^2-x^2z+y^2z", 7, 36),
        rep("cuspidal", "y^2z-x^3", "xy^2", 6, 36),
        rep("cube-xyz", "x^3", "xyz", 6, 36),
        rep("conic-tangent", "x(y^2+xz)", "x^3", 5, 36),
        rep("x2y-fermat2", "x^2y", "x^3+y^3", 5, 36),
        rep("cube-xy2", "x^3", "xy^2", 4, 36),
        rep("x2y-x2z", "x^2y", "x^2z", 4, 35),
        rep("cube-x2y", "x^3", "x^2y", 3, 35),
    ]
}

/// The three orbits of pencils of binary quartics filling `H3`; all smooth.
pub fn quartic_orbit_reps() -> Vec<OrbitRep> {
    let rep = |name, f, g, dim, rank| OrbitRep { name, f, g, dim, rank };
    vec![
        rep("generic", "x^4+y^4", "x^2y^2", 3, 6),
        rep("double-root", "x^4", "x^2y^2", 2, 6),
        rep("quadruple-root", "x^4", "x^3y", 1, 6),
    ]
}

impl OrbitRep {
    pub fn pencil(&self) -> Pencil {
        let q = FieldSpec::Q;
        if self.rank > 6 {
            let f = TernaryCubic::parse(self.f, q).unwrap();
            let g = TernaryCubic::parse(self.g, q).unwrap();
            Pencil::from_cubics(&f, &g).unwrap()
        } else {
            let f = BinaryQuartic::parse(self.f, q).unwrap();
            let g = BinaryQuartic::parse(self.g, q).unwrap();
            Pencil::from_quartics(&f, &g).unwrap()
        }
    }
}

/// A pencil of cubics with generators in `Q[eps]` degenerating, as
/// `eps -> 0`, onto a named smaller orbit.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DegenerationFamily {
    pub target: &'static str,
    pub f: &'static str,
    pub g: &'static str,
}

/// The eight degeneration families carrying the generic Hesse-pencil orbit
/// onto each smaller orbit of `N`.
pub fn degeneration_families() -> Vec<DegenerationFamily> {
    let fam = |target, f, g| DegenerationFamily { target, f, g };
    vec![
        fam(
            "nodal",
            "y^2z-x^3-x^2z+eps*z^3",
            "3xy^2-x^2z+y^2z+eps*(-9*x*z^2-3*z^3)",
        ),
        fam("cuspidal", "y^2z-x^3-eps*z^3", "xy^2+3*eps*x*z^2"),
        fam(
            "cube-xyz",
            "x(x^2+yz)+eps*(y^3+z^3)",
            "-6x^3+2xyz+eps*(216*x*y*z*eps-6*y^3-6*z^3)",
        ),
        fam(
            "conic-tangent",
            "x(y^2+xz)+eps*z^3",
            "x^3-eps*(-3*y^2*z+3*x*z^2)",
        ),
        fam("x2y-fermat2", "x^3+2y^3+(x+eps*z)^3", "xy(x+eps*z)"),
        fam("cube-xy2", "x^3+y^3+(eps*z-y)^3", "xy(eps*z-y)"),
        fam(
            "x2y-x2z",
            "xy(x+eps*y)",
            "z(x^2+eps*x*y+eps^2*y^2)",
        ),
        fam("cube-x2y", "x^3", "xy(x+eps*z)"),
    ]
}

const FAMILY_VARS: [&str; 4] = ["x", "y", "z", "eps"];

/// Coefficient vectors of the two generators as univariate polynomials in
/// `eps` (the cubic convention slots, with weights divided out).
fn family_coeff_polys(family: &DegenerationFamily) -> ([MPoly; 10], [MPoly; 10]) {
    let f = parse(family.f, &FAMILY_VARS, FieldSpec::Q).expect("family generator parses");
    let g = parse(family.g, &FAMILY_VARS, FieldSpec::Q).expect("family generator parses");
    let project = |p: &MPoly| -> [MPoly; 10] {
        crate::forms::cubic_coeff_polys(p, [0, 1, 2]).map(|c| {
            // clear the x, y, z slots, keeping a univariate polynomial in eps
            c.project_out(&[0, 1, 2])
        })
    };
    (project(&f), project(&g))
}

/// The 45 Plücker coordinates of a degeneration family as polynomials in
/// `eps`.
pub fn family_pluecker_polys(family: &DegenerationFamily) -> Vec<MPoly> {
    let (a, b) = family_coeff_polys(family);
    crate::pluecker::pluecker_polys(&a, &b)
}

/// Certifies that the ten linear forms of `N` vanish on the family
/// identically in `eps` (as polynomials, not just at sampled values).
pub fn family_in_n_identically(family: &DegenerationFamily) -> bool {
    let p = family_pluecker_polys(family);
    crate::invariant_r::nvector()
        .iter()
        .all(|form| form.substitute(&p).is_zero())
}

/// Exact `eps -> 0` limit of a degeneration family in `G(1,9)`.
#[derive(Debug, Clone)]
pub struct EpsilonLimit {
    pub pencil: Pencil,
    /// Power of `eps` cleared from the Plücker vector before specializing.
    pub cleared_power: u32,
    pub matches_target: bool,
}

/// Computes the Plücker coordinates of the family as polynomials in `eps`,
/// divides out the minimal `eps`-valuation, sets `eps = 0`, and recovers a
/// rank-2 pencil from the (necessarily decomposable) limit vector. The
/// limit is compared projectively with the named target representative, so
/// any overall rescaling of the generators is immaterial.
pub fn epsilon_limit(family: &DegenerationFamily) -> Result<EpsilonLimit, OrbitError> {
    let coords = family_pluecker_polys(family);
    let val = coords
        .iter()
        .filter(|p| !p.is_zero())
        .flat_map(|p| p.terms().map(|(e, _)| e[0]))
        .min()
        .ok_or_else(|| OrbitError::BadLimit("Plücker vector is identically zero".into()))?;
    let limit: Vec<Scalar> = coords
        .iter()
        .map(|p| {
            let mut at_zero = FieldSpec::Q.zero();
            for (e, c) in p.terms() {
                if e[0] == val {
                    at_zero = &at_zero + c;
                }
            }
            at_zero
        })
        .collect();
    let v = PluckerVector { dim: 9, coords: limit };
    if v.is_zero() {
        return Err(OrbitError::BadLimit(
            "limit vanished after clearing the eps power".into(),
        ));
    }
    let (a, b) = recover_generators(&v)
        .map_err(|e| OrbitError::BadLimit(format!("limit is not decomposable: {e}")))?;
    let pencil = Pencil::new(9, a, b)
        .map_err(|e| OrbitError::BadLimit(format!("recovered generators degenerate: {e}")))?;
    let target = cubic_orbit_reps()
        .into_iter()
        .find(|r| r.name == family.target)
        .unwrap_or_else(|| panic!("unknown target orbit `{}`", family.target))
        .pencil();
    let matches_target =
        projectively_equal(&v.coords, &pluecker_of(&target).coords);
    Ok(EpsilonLimit {
        pencil,
        cleared_power: val,
        matches_target,
    })
}

/// One row of the catalog verification.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CatalogRow {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Verifies the full orbit catalog: membership, orbit dimension and
/// Jacobian rank for all twelve representatives, the identification of the
/// two rank-35 rows as the singular locus, and all eight degeneration
/// families (identical-in-`eps` membership plus the stated limit).
pub fn catalog_check() -> Vec<CatalogRow> {
    let mut out = Vec::new();
    let mut push = |name: String, passed: bool, details: String| {
        out.push(CatalogRow { name, passed, details });
    };
    let mut rank35 = Vec::new();
    for rep in cubic_orbit_reps() {
        let pencil = rep.pencil();
        let member = membership(VarietySystem::n(), &pencil) == Ok(true);
        let dim = orbit_dimension(&pencil).unwrap();
        let rank = jacobian_rank(VarietySystem::n(), &pencil)
            .map(|r| r.rank)
            .unwrap_or(0);
        if rank == 35 {
            rank35.push(rep.name);
        }
        push(
            format!("orbit/{}", rep.name),
            member && dim == rep.dim && rank == rep.rank,
            format!(
                "member={member} dim={dim} (expected {}) rank={rank} (expected {})",
                rep.dim, rep.rank
            ),
        );
    }
    push(
        "orbit/singular-locus".into(),
        rank35 == ["x2y-x2z", "cube-x2y"],
        format!("rank-35 representatives: {rank35:?}"),
    );
    for rep in quartic_orbit_reps() {
        let pencil = rep.pencil();
        let member = membership(VarietySystem::h3(), &pencil) == Ok(true);
        let dim = orbit_dimension(&pencil).unwrap();
        let rank = jacobian_rank(VarietySystem::h3(), &pencil)
            .map(|r| r.rank)
            .unwrap_or(0);
        push(
            format!("quartic-orbit/{}", rep.name),
            member && dim == rep.dim && rank == rep.rank,
            format!(
                "member={member} dim={dim} (expected {}) rank={rank} (expected {})",
                rep.dim, rep.rank
            ),
        );
    }
    for fam in degeneration_families() {
        let in_n = family_in_n_identically(&fam);
        let limit = epsilon_limit(&fam);
        let (passed, details) = match limit {
            Ok(l) => (
                in_n && l.matches_target,
                format!(
                    "in-N-identically={in_n} cleared eps^{} limit-matches-target={}",
                    l.cleared_power, l.matches_target
                ),
            ),
            Err(e) => (false, format!("in-N-identically={in_n} limit error: {e}")),
        };
        push(format!("degeneration/{}", fam.target), passed, details);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{act_on_cubic, hessian_cubic};
    use crate::sampling::{random_scalar_vec, random_unimodular, rng_from_seed};

    fn cubic(s: &str) -> TernaryCubic {
        TernaryCubic::parse(s, FieldSpec::Q).unwrap()
    }

    fn qmat(m: &[[i64; 3]; 3]) -> Vec<Vec<Scalar>> {
        m.iter()
            .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
            .collect()
    }

    #[test]
    fn sl_bases_are_traceless_and_complete() {
        assert_eq!(sl3_basis().len(), 8);
        assert_eq!(sl2_basis().len(), 3);
        for m in sl3_basis() {
            assert_eq!(m[0][0] + m[1][1] + m[2][2], 0);
        }
        for m in sl2_basis() {
            assert_eq!(m[0][0] + m[1][1], 0);
        }
    }

    #[test]
    fn e12_moves_a_cube_onto_the_a1_slot() {
        let mut e12 = [[0i64; 3]; 3];
        e12[0][1] = 1;
        let g = infinitesimal_action_cubic(&qmat(&e12), &cubic("x^3")).unwrap();
        // -grad(x^3) . E12 . (x,y,z) = -3x^2 y, which is the a1 slot
        assert_eq!(g.to_poly(), cubic("-3x^2y").to_poly());
        assert!(!g.coeffs[1].is_zero());
        assert!(g.coeffs.iter().enumerate().all(|(i, c)| i == 1 || c.is_zero()));
    }

    #[test]
    fn torus_fixes_xyz() {
        let d = [[1, 0, 0], [0, -1, 0], [0, 0, 0]];
        let g = infinitesimal_action_cubic(&qmat(&d), &cubic("xyz")).unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn action_is_linear_and_rejects_nonzero_trace() {
        let bad = [[1, 0, 0], [0, 1, 0], [0, 0, 0]];
        assert!(matches!(
            infinitesimal_action_cubic(&qmat(&bad), &cubic("x^3")),
            Err(OrbitError::NonzeroTrace(_))
        ));
        let x = [[0, 2, 0], [1, 0, 0], [3, 0, 0]];
        let f = cubic("x^3+2xyz");
        let g = cubic("y^2z-x^3");
        let lhs = infinitesimal_action_cubic(&qmat(&x), &cubic("0")).unwrap();
        assert!(lhs.is_zero());
        let sum = TernaryCubic::from_poly(&(&f.to_poly() + &g.to_poly())).unwrap();
        let act_sum = infinitesimal_action_cubic(&qmat(&x), &sum).unwrap();
        let sum_act = &infinitesimal_action_cubic(&qmat(&x), &f).unwrap().to_poly()
            + &infinitesimal_action_cubic(&qmat(&x), &g).unwrap().to_poly();
        assert_eq!(act_sum.to_poly(), sum_act);
    }

    #[test]
    fn orbit_dimensions_match_the_table() {
        for rep in cubic_orbit_reps() {
            let dim = orbit_dimension(&rep.pencil()).unwrap();
            assert_eq!(dim, rep.dim, "orbit dimension of {}", rep.name);
        }
    }

    #[test]
    fn quartic_orbit_dimensions_match_the_table() {
        for rep in quartic_orbit_reps() {
            let dim = orbit_dimension(&rep.pencil()).unwrap();
            assert_eq!(dim, rep.dim, "orbit dimension of {}", rep.name);
        }
    }

    #[test]
    fn orbit_dimension_is_invariant_under_generator_change_and_conjugation() {
        let rep = cubic_orbit_reps().into_iter().next().unwrap();
        let pencil = rep.pencil();
        // generator change: replace (f, g) by (f + 2g, 3f - g)
        let mix = |u: &[Scalar], v: &[Scalar], c1: i64, c2: i64| -> Vec<Scalar> {
            u.iter()
                .zip(v)
                .map(|(a, b)| &(a * &Scalar::int(c1)) + &(b * &Scalar::int(c2)))
                .collect()
        };
        let changed = Pencil::new(
            9,
            mix(&pencil.a, &pencil.b, 1, 2),
            mix(&pencil.a, &pencil.b, 3, -1),
        )
        .unwrap();
        assert_eq!(orbit_dimension(&changed).unwrap(), rep.dim);
        // conjugation by 10 random unimodular matrices
        let mut rng = rng_from_seed(5);
        let f = cubic(rep.f);
        let g = cubic(rep.g);
        for _ in 0..10 {
            let c = random_unimodular(&mut rng, 3);
            let moved = Pencil::from_cubics(&act_on_cubic(&c, &f), &act_on_cubic(&c, &g)).unwrap();
            assert_eq!(orbit_dimension(&moved).unwrap(), rep.dim);
        }
    }

    #[test]
    fn generic_hessian_pencils_have_orbit_dimension_8() {
        let mut rng = rng_from_seed(23);
        let mut done = 0;
        while done < 5 {
            let f = TernaryCubic::new(random_scalar_vec(&mut rng, 10).try_into().unwrap());
            let h = hessian_cubic(&f);
            if h.is_zero() {
                continue;
            }
            if let Ok(p) = Pencil::from_cubics(&f, &h) {
                assert_eq!(orbit_dimension(&p).unwrap(), 8);
                done += 1;
            }
        }
    }

    #[test]
    fn degeneration_families_lie_in_n_identically() {
        for fam in degeneration_families() {
            assert!(
                family_in_n_identically(&fam),
                "family for {} leaves N at some eps",
                fam.target
            );
        }
    }

    #[test]
    fn epsilon_limits_match_their_targets() {
        for fam in degeneration_families() {
            let limit = epsilon_limit(&fam).unwrap_or_else(|e| {
                panic!("limit of family for {} failed: {e}", fam.target)
            });
            assert!(
                limit.matches_target,
                "limit of family for {} does not match its target",
                fam.target
            );
        }
    }

    #[test]
    fn named_limit_examples() {
        let fams = degeneration_families();
        let by_target = |t: &str| fams.iter().find(|f| f.target == t).unwrap();
        // <x^3, xy(x+eps z)> -> <x^3, x^2y>, already at eps-valuation 0
        let l = epsilon_limit(by_target("cube-x2y")).unwrap();
        assert_eq!(l.cleared_power, 0);
        let target = Pencil::from_cubics(&cubic("x^3"), &cubic("x^2y")).unwrap();
        assert!(projectively_equal(
            &pluecker_of(&l.pencil).coords,
            &pluecker_of(&target).coords
        ));
        // <xy(x+eps y), z(x^2+eps xy+eps^2 y^2)> -> <x^2y, x^2z>
        let l = epsilon_limit(by_target("x2y-x2z")).unwrap();
        let target = Pencil::from_cubics(&cubic("x^2y"), &cubic("x^2z")).unwrap();
        assert!(projectively_equal(
            &pluecker_of(&l.pencil).coords,
            &pluecker_of(&target).coords
        ));
    }

    #[test]
    fn full_catalog_check_passes() {
        let rows = catalog_check();
        // 9 cubic orbits + singular-locus row + 3 quartic orbits + 8 families
        assert_eq!(rows.len(), 21);
        for row in &rows {
            assert!(row.passed, "catalog row {} failed: {}", row.name, row.details);
        }
    }
}
