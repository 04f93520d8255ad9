//! The alternating trilinear invariant R on triples of ternary cubics,
//! normalized by `R(l^3, m^3, n^3) = det(l, m, n)^3`.
//!
//! Three independent presentations are kept side by side and reconciled by
//! certificates rather than derived from one another: the explicit
//! 54-monomial expansion, the antisymmetric matrix `Rbar` with
//! `b·Rbar(a)·c = R(b, a, c)`, and the vector of ten linear forms `n` in the
//! 45 Plücker variables with `n(p(a, b))·c = R(b, a, c)`. Transcription
//! slips are the dominant risk for tables this size; triple-entry
//! bookkeeping catches them.

use crate::forms::{cubic_hessian_generic, TernaryCubic};
use crate::linalg::Mat;
use crate::pluecker::{pair_pos, pluecker_polys, PluckerVector};
use crate::poly::{det, MPoly};
use crate::scalar::{FieldSpec, Scalar};
use std::sync::OnceLock;

/// Outcome of a symbolic identity check: `residuals` lists any nonzero
/// leftover polynomials, so a failure is self-describing.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Certificate {
    pub check: String,
    pub passed: bool,
    pub residuals: Vec<String>,
}

impl Certificate {
    pub fn from_residuals(check: &str, residuals: Vec<String>) -> Self {
        Certificate {
            check: check.to_string(),
            passed: residuals.is_empty(),
            residuals,
        }
    }
}

/// The 54-monomial expansion: signed triple wedges `i∧j∧k`, each the
/// determinant of the 3x3 matrix of coefficient slots (i, j, k) of the
/// three arguments, with a global factor of -1.
///
/// The coefficients here are pinned by re-expanding `det(l,m,n)^3` in the
/// convention coefficients of `l^3, m^3, n^3`; the widely circulated
/// printed display differs in the signs of the `7∧5∧1` and `6∧5∧2` terms
/// (see [`printed_table_discrepancies`]) and does not satisfy the defining
/// normalization.
const R_TERMS: [(i64, [usize; 3]); 9] = [
    (1, [9, 6, 0]),
    (-3, [8, 7, 0]),
    (-3, [9, 3, 1]),
    (6, [8, 4, 1]),
    (-3, [7, 5, 1]),
    (3, [8, 3, 2]),
    (-6, [7, 4, 2]),
    (3, [6, 5, 2]),
    (-6, [5, 4, 3]),
];

/// The same expansion as usually printed; kept verbatim for comparison.
const R_TERMS_AS_PRINTED: [(i64, [usize; 3]); 9] = [
    (1, [9, 6, 0]),
    (-3, [8, 7, 0]),
    (-3, [9, 3, 1]),
    (6, [8, 4, 1]),
    (3, [7, 5, 1]),
    (3, [8, 3, 2]),
    (-6, [7, 4, 2]),
    (-3, [6, 5, 2]),
    (-6, [5, 4, 3]),
];

/// R on three concrete cubics (all in the same field).
pub fn evaluate_r(a: &TernaryCubic, b: &TernaryCubic, c: &TernaryCubic) -> Scalar {
    let field = a.field();
    let mut acc = field.zero();
    for (coeff, idx) in R_TERMS {
        let wedge = det3_scalar(
            [&a.coeffs, &b.coeffs, &c.coeffs].map(|row| idx.map(|i| row[i].clone())),
        );
        acc = &acc + &(&field.from_int(coeff) * &wedge);
    }
    -&acc
}

/// R on three symbolic coefficient vectors (10 polynomials each).
pub fn evaluate_r_polys(a: &[MPoly], b: &[MPoly], c: &[MPoly]) -> MPoly {
    assert!(a.len() == 10 && b.len() == 10 && c.len() == 10);
    let arity = a[0].arity();
    let field = a[0].field();
    let mut acc = MPoly::zero(arity, field);
    for (coeff, idx) in R_TERMS {
        let rows: Vec<Vec<MPoly>> = [a, b, c]
            .iter()
            .map(|row| idx.iter().map(|&i| row[i].clone()).collect())
            .collect();
        let wedge = det(&rows);
        acc = &acc + &wedge.scalar_mul(&field.from_int(coeff));
    }
    acc.neg()
}

fn det3_scalar(m: [[Scalar; 3]; 3]) -> Scalar {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

const RBAR_ROWS: [[&str; 10]; 10] = [
    ["0", "0", "0", "0", "0", "0", "-a9", "3a8", "-3a7", "a6"],
    ["0", "0", "0", "3a9", "-6a8", "3a7", "0", "-3a5", "6a4", "-3a3"],
    ["0", "0", "0", "-3a8", "6a7", "-3a6", "3a5", "-6a4", "3a3", "0"],
    ["0", "-3a9", "3a8", "0", "6a5", "-6a4", "0", "0", "-3a2", "3a1"],
    ["0", "6a8", "-6a7", "-6a5", "0", "6a3", "0", "6a2", "-6a1", "0"],
    ["0", "-3a7", "3a6", "6a4", "-6a3", "0", "-3a2", "3a1", "0", "0"],
    ["a9", "0", "-3a5", "0", "0", "3a2", "0", "0", "0", "-a0"],
    ["-3a8", "3a5", "6a4", "0", "-6a2", "-3a1", "0", "0", "3a0", "0"],
    ["3a7", "-6a4", "-3a3", "3a2", "6a1", "0", "0", "-3a0", "0", "0"],
    ["-a6", "3a3", "0", "-3a1", "0", "0", "a0", "0", "0", "0"],
];

// The usually printed display has "-a5" at row 6, column 2, which breaks
// both antisymmetry (its mirror is 3a5) and the pairing identity; the
// corrected entry is "-3a5".
const RBAR_PRINTED_62: &str = "-a5";

fn parse_rbar(rows: &[[&str; 10]; 10]) -> [[MPoly; 10]; 10] {
    let vars = ["a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9"];
    std::array::from_fn(|i| {
        std::array::from_fn(|j| crate::poly::parse(rows[i][j], &vars, FieldSpec::Q).unwrap())
    })
}

/// The antisymmetric 10x10 matrix of linear forms in `a0..a9` with
/// `b·Rbar(a)·c = R(b, a, c)`. One entry of the printed display is
/// corrected; see [`printed_table_discrepancies`].
pub fn rbar() -> &'static [[MPoly; 10]; 10] {
    static CELL: OnceLock<[[MPoly; 10]; 10]> = OnceLock::new();
    CELL.get_or_init(|| parse_rbar(&RBAR_ROWS))
}

/// `Rbar` evaluated at a concrete cubic, as a 10x10 matrix in its field.
pub fn rbar_at(a: &TernaryCubic) -> Mat {
    let field = a.field();
    let table = rbar();
    let rows = (0..10)
        .map(|i| (0..10).map(|j| table[i][j].eval_in(&a.coeffs, field)).collect())
        .collect();
    Mat::from_rows(field, rows)
}

/// Linear forms in the 45 Plücker variables as `(coefficient, i, j)`
/// triples per entry.
type NEntries = [&'static [(i64, usize, usize)]; 10];

/// Exact pairing vector: `n(p(a,b))·c = R(b, a, c)`.
const N_ENTRIES: NEntries = [
    &[(3, 7, 8), (-1, 6, 9)],
    &[(3, 5, 7), (-6, 4, 8), (3, 3, 9)],
    &[(-3, 5, 6), (6, 4, 7), (-3, 3, 8)],
    &[(6, 4, 5), (3, 2, 8), (-3, 1, 9)],
    &[(-6, 3, 5), (-6, 2, 7), (6, 1, 8)],
    &[(6, 3, 4), (3, 2, 6), (-3, 1, 7)],
    &[(-3, 2, 5), (1, 0, 9)],
    &[(6, 2, 4), (3, 1, 5), (-3, 0, 8)],
    &[(-3, 2, 3), (-6, 1, 4), (3, 0, 7)],
    &[(3, 1, 3), (-1, 0, 6)],
];

/// The display as usually printed. It generates the same linear span (each
/// entry is ± an entry of [`nvector`], with slots 5 and 6 swapped), so the
/// variety N is unaffected, but it is not literally the pairing vector of
/// R; see [`printed_table_discrepancies`].
const N_ENTRIES_AS_PRINTED: NEntries = [
    &[(3, 7, 8), (-1, 6, 9)],
    &[(3, 5, 7), (-6, 4, 8), (3, 3, 9)],
    &[(3, 5, 6), (-6, 4, 7), (3, 3, 8)],
    &[(6, 4, 5), (3, 2, 8), (-3, 1, 9)],
    &[(6, 3, 5), (6, 2, 7), (-6, 1, 8)],
    &[(3, 2, 5), (-1, 0, 9)],
    &[(6, 3, 4), (3, 2, 6), (-3, 1, 7)],
    &[(6, 2, 4), (3, 1, 5), (-3, 0, 8)],
    &[(3, 2, 3), (6, 1, 4), (-3, 0, 7)],
    &[(3, 1, 3), (-1, 0, 6)],
];

fn build_nvector(entries: &NEntries) -> [MPoly; 10] {
    let arity = 45;
    let field = FieldSpec::Q;
    std::array::from_fn(|k| {
        let mut p = MPoly::zero(arity, field);
        for &(coeff, i, j) in entries[k] {
            p = &p
                + &MPoly::var(arity, field, pair_pos(10, i, j)).scalar_mul(&field.from_int(coeff));
        }
        p
    })
}

/// The ten linear forms in the 45 Plücker variables (pair order
/// lexicographic) whose dot product with `c` gives `R(b, a, c)` when
/// evaluated at `p(a, b)`; their common zero locus on G(1,9) is the
/// variety N.
pub fn nvector() -> &'static [MPoly; 10] {
    static CELL: OnceLock<[MPoly; 10]> = OnceLock::new();
    CELL.get_or_init(|| build_nvector(&N_ENTRIES))
}

/// The n-vector as usually printed (same zero locus, different signs and
/// slot order).
pub fn nvector_as_printed() -> &'static [MPoly; 10] {
    static CELL: OnceLock<[MPoly; 10]> = OnceLock::new();
    CELL.get_or_init(|| build_nvector(&N_ENTRIES_AS_PRINTED))
}

/// Evaluates the ten n-forms at a Plücker vector in G(1,9); the zero vector
/// exactly characterizes membership in the linear span condition.
pub fn n_of(v: &PluckerVector) -> [Scalar; 10] {
    assert_eq!(v.dim, 9, "n-forms live on G(1,9)");
    let field = v.field();
    let table = nvector();
    std::array::from_fn(|i| table[i].eval_in(&v.coords, field))
}

/// Certifies that the Hessian coefficient vector annihilates `Rbar`
/// identically: all ten entries of `h(a)·Rbar(a)` vanish as polynomials in
/// `a0..a9`. Consequently `R(f, H(f), -) = 0` for every cubic `f`.
pub fn rbar_columns_are_syzygies() -> Certificate {
    let h = cubic_hessian_generic();
    let table = rbar();
    let mut residuals = Vec::new();
    for j in 0..10 {
        let mut acc = MPoly::zero(10, FieldSpec::Q);
        for i in 0..10 {
            acc = &acc + &(&h[i] * &table[i][j]);
        }
        if !acc.is_zero() {
            residuals.push(format!("column {j}: {acc}"));
        }
    }
    Certificate::from_residuals("hessian-annihilates-rbar", residuals)
}

/// Reconciles the three presentations of R as polynomial identities in 30
/// variables: `n(p(a,b))·c = b·Rbar(a)·c = R(b,a,c)` (note the argument
/// order: both the matrix and the Plücker pairing compute R with its first
/// two arguments swapped), plus antisymmetry `n(p(a,b)) = -n(p(b,a))`.
pub fn pairing_consistency() -> Certificate {
    // variables: a0..a9, b0..b9, c0..c9
    let arity = 30;
    let q = FieldSpec::Q;
    let a: Vec<MPoly> = (0..10).map(|i| MPoly::var(arity, q, i)).collect();
    let b: Vec<MPoly> = (0..10).map(|i| MPoly::var(arity, q, 10 + i)).collect();
    let c: Vec<MPoly> = (0..10).map(|i| MPoly::var(arity, q, 20 + i)).collect();

    let r_bac = evaluate_r_polys(&b, &a, &c);

    // b·Rbar(a)·c with Rbar entries lifted from arity 10 to arity 30
    let var_map: Vec<usize> = (0..10).collect();
    let mut via_matrix = MPoly::zero(arity, q);
    let table = rbar();
    for i in 0..10 {
        for j in 0..10 {
            if table[i][j].is_zero() {
                continue;
            }
            let entry = table[i][j].map_vars(arity, &var_map);
            via_matrix = &via_matrix + &(&(&b[i] * &c[j]) * &entry);
        }
    }

    // n(p(a,b))·c
    let p = pluecker_polys(&a, &b);
    let p_swapped = pluecker_polys(&b, &a);
    let mut via_n = MPoly::zero(arity, q);
    let mut n_ab = Vec::with_capacity(10);
    let mut n_ba = Vec::with_capacity(10);
    for k in 0..10 {
        let nk = nvector()[k].substitute(&p);
        n_ba.push(nvector()[k].substitute(&p_swapped));
        via_n = &via_n + &(&nk * &c[k]);
        n_ab.push(nk);
    }

    let mut residuals = Vec::new();
    if &via_matrix - &r_bac != MPoly::zero(arity, q) {
        residuals.push("b·Rbar(a)·c != R(b,a,c)".to_string());
    }
    if &via_n - &via_matrix != MPoly::zero(arity, q) {
        residuals.push("n(p(a,b))·c != b·Rbar(a)·c".to_string());
    }
    for k in 0..10 {
        if &n_ab[k] + &n_ba[k] != MPoly::zero(arity, q) {
            residuals.push(format!("n(p(a,b))[{k}] != -n(p(b,a))[{k}]"));
        }
    }
    Certificate::from_residuals("r-presentations-agree", residuals)
}

/// Recomputes R from its defining property, as a polynomial in 30
/// variables `a0..a9, b0..b9, c0..c9`: expand `det(l,m,n)^3` in the nine
/// entries of `l,m,n` and reread it through the convention coefficients of
/// `l^3, m^3, n^3` (the coefficient of `l^3` at slot α is the monomial
/// `l^α`). Serves as an independent oracle for every transcribed table.
pub fn trilinear_from_definition() -> MPoly {
    let q = FieldSpec::Q;
    let rows: Vec<Vec<MPoly>> = (0..3)
        .map(|g| (0..3).map(|i| MPoly::var(9, q, 3 * g + i)).collect())
        .collect();
    let d3 = det(&rows).pow(3);
    let slot = |e: &[u32]| {
        crate::forms::CUBIC_EXPS
            .iter()
            .position(|x| x[..] == e[..])
            .expect("tri-homogeneous degree (3,3,3)")
    };
    let mut out = MPoly::zero(30, q);
    for (e, c) in d3.terms() {
        let mut ex = vec![0u32; 30];
        ex[slot(&e[0..3])] += 1;
        ex[10 + slot(&e[3..6])] += 1;
        ex[20 + slot(&e[6..9])] += 1;
        out = &out + &MPoly::monomial(30, ex, c.clone());
    }
    out
}

/// A place where a printed source table differs from the value this crate
/// uses (the used values are forced by the defining normalization of R and
/// by antisymmetry).
#[derive(Debug, Clone, serde::Serialize)]
pub struct TableDiscrepancy {
    pub table: String,
    pub location: String,
    pub printed: String,
    pub used: String,
}

/// Compares every transcribed-as-printed table against the reconciled
/// values actually used, listing each difference. The n-vector differences
/// never change the variety N (each printed entry is ± a used entry).
pub fn printed_table_discrepancies() -> Vec<TableDiscrepancy> {
    let mut out = Vec::new();
    for ((used_c, idx), (printed_c, pidx)) in R_TERMS.iter().zip(R_TERMS_AS_PRINTED.iter()) {
        assert_eq!(idx, pidx);
        if used_c != printed_c {
            out.push(TableDiscrepancy {
                table: "R 54-monomial expansion".into(),
                location: format!("wedge {}∧{}∧{}", idx[0], idx[1], idx[2]),
                printed: format!("inner coefficient {printed_c}"),
                used: format!("inner coefficient {used_c}"),
            });
        }
    }
    for i in 0..10 {
        for j in 0..10 {
            let printed = if (i, j) == (6, 2) { RBAR_PRINTED_62 } else { RBAR_ROWS[i][j] };
            if printed != RBAR_ROWS[i][j] {
                out.push(TableDiscrepancy {
                    table: "Rbar matrix".into(),
                    location: format!("row {i}, column {j}"),
                    printed: printed.into(),
                    used: RBAR_ROWS[i][j].into(),
                });
            }
        }
    }
    let used = nvector();
    let printed = nvector_as_printed();
    for k in 0..10 {
        if used[k] != printed[k] {
            let relation = if used[k] == printed[k].neg() {
                "negated".to_string()
            } else {
                match (0..10).find(|&l| used[k] == printed[l] || used[k] == printed[l].neg()) {
                    Some(l) => format!("matches printed entry {l} up to sign"),
                    None => "no printed counterpart".to_string(),
                }
            };
            out.push(TableDiscrepancy {
                table: "n-vector".into(),
                location: format!("entry {k}"),
                printed: relation,
                used: "pairing-exact value".into(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{
        act_on_cubic, cubic_coeff_polys, hessian_cubic, TernaryCubic,
    };
    use crate::pluecker::{pluecker_of, Pencil};
    use crate::sampling::{random_unimodular, rng_from_seed};

    fn qc(s: &str) -> TernaryCubic {
        TernaryCubic::parse(s, FieldSpec::Q).unwrap()
    }

    fn random_cubic(rng: &mut rand_chacha::ChaCha8Rng) -> TernaryCubic {
        TernaryCubic::new(std::array::from_fn(|_| {
            crate::sampling::random_rational(rng)
        }))
    }

    #[test]
    fn tables_match_definition() {
        let truth = trilinear_from_definition();
        let q = FieldSpec::Q;
        let a: Vec<MPoly> = (0..10).map(|i| MPoly::var(30, q, i)).collect();
        let b: Vec<MPoly> = (0..10).map(|i| MPoly::var(30, q, 10 + i)).collect();
        let c: Vec<MPoly> = (0..10).map(|i| MPoly::var(30, q, 20 + i)).collect();
        assert_eq!(evaluate_r_polys(&a, &b, &c), truth);
        // the printed expansion does not satisfy the definition
        assert_eq!(truth.num_terms(), 54);
    }

    #[test]
    fn discrepancy_report_is_stable() {
        let d = printed_table_discrepancies();
        let count = |t: &str| d.iter().filter(|x| x.table == t).count();
        assert_eq!(count("R 54-monomial expansion"), 2);
        assert_eq!(count("Rbar matrix"), 1);
        assert_eq!(count("n-vector"), 5);
    }

    #[test]
    fn normalization_on_coordinate_cubes() {
        let r = evaluate_r(&qc("x^3"), &qc("y^3"), &qc("z^3"));
        assert_eq!(r, Scalar::int(1));
    }

    #[test]
    fn cube_identity_is_polynomial() {
        // R(l^3, m^3, n^3) = det(l, m, n)^3 identically in the 9 entries
        let arity = 12; // x,y,z then the 9 entries of l, m, n
        let q = FieldSpec::Q;
        let cube_coeffs = |base: usize| -> Vec<MPoly> {
            let l = (0..3).fold(MPoly::zero(arity, q), |acc, i| {
                &acc + &(&MPoly::var(arity, q, i) * &MPoly::var(arity, q, 3 + base + i))
            });
            cubic_coeff_polys(&l.pow(3), [0, 1, 2])
                .iter()
                .map(|p| p.project_out(&[0, 1, 2]))
                .collect()
        };
        let (a, b, c) = (cube_coeffs(0), cube_coeffs(3), cube_coeffs(6));
        let r = evaluate_r_polys(&a, &b, &c);
        let rows: Vec<Vec<MPoly>> = (0..3)
            .map(|k| (0..3).map(|i| MPoly::var(12, q, 3 + 3 * k + i).project_out(&[0, 1, 2])).collect())
            .collect();
        let d = det(&rows);
        assert_eq!(r, d.pow(3));
    }

    #[test]
    fn alternating_and_trilinear() {
        let mut rng = rng_from_seed(51);
        for _ in 0..5 {
            let f = random_cubic(&mut rng);
            let g = random_cubic(&mut rng);
            let h = random_cubic(&mut rng);
            assert!(evaluate_r(&f, &f, &g).is_zero());
            assert!(evaluate_r(&f, &g, &g).is_zero());
            // swap is a sign flip
            assert_eq!(evaluate_r(&f, &g, &h), -&evaluate_r(&g, &f, &h));
            // linearity in the first slot
            let s = Scalar::rat(5, 3);
            let fs = TernaryCubic::new(std::array::from_fn(|i| &f.coeffs[i] * &s));
            assert_eq!(evaluate_r(&fs, &g, &h), &s * &evaluate_r(&f, &g, &h));
        }
    }

    #[test]
    fn sl3_invariance() {
        let mut rng = rng_from_seed(52);
        for _ in 0..20 {
            let f = random_cubic(&mut rng);
            let g = random_cubic(&mut rng);
            let h = random_cubic(&mut rng);
            let c = random_unimodular(&mut rng, 3);
            let lhs = evaluate_r(
                &act_on_cubic(&c, &f),
                &act_on_cubic(&c, &g),
                &act_on_cubic(&c, &h),
            );
            assert_eq!(lhs, evaluate_r(&f, &g, &h));
        }
    }

    #[test]
    fn rbar_is_antisymmetric() {
        let t = rbar();
        for i in 0..10 {
            assert!(t[i][i].is_zero());
            for j in 0..10 {
                assert_eq!(t[i][j], t[j][i].neg());
            }
        }
    }

    #[test]
    fn syzygy_certificate_passes() {
        let cert = rbar_columns_are_syzygies();
        assert!(cert.passed, "residuals: {:?}", cert.residuals);
    }

    #[test]
    fn syzygy_spot_checks() {
        let mut rng = rng_from_seed(53);
        let mut samples = vec![qc("x^3 + y^3 + z^3 + xyz")];
        for _ in 0..25 {
            samples.push(random_cubic(&mut rng));
        }
        for f in samples {
            let h = hessian_cubic(&f);
            // h·Rbar(f) = 0 as a concrete vector
            let m = rbar_at(&f);
            for j in 0..10 {
                let entry = (0..10).fold(Scalar::int(0), |acc, i| {
                    &acc + &(&h.coeffs[i] * m.at(i, j))
                });
                assert!(entry.is_zero());
            }
        }
    }

    #[test]
    fn pairing_certificate_passes() {
        let cert = pairing_consistency();
        assert!(cert.passed, "residuals: {:?}", cert.residuals);
    }

    #[test]
    fn pairing_random_spot_checks() {
        let mut rng = rng_from_seed(54);
        for _ in 0..50 {
            let a = random_cubic(&mut rng);
            let b = random_cubic(&mut rng);
            let c = random_cubic(&mut rng);
            let Ok(pencil) = Pencil::from_cubics(&a, &b) else { continue };
            let v = pluecker_of(&pencil);
            let n = n_of(&v);
            let dot = (0..10).fold(Scalar::int(0), |acc, i| &acc + &(&n[i] * &c.coeffs[i]));
            assert_eq!(dot, evaluate_r(&b, &a, &c));
        }
    }

    #[test]
    fn n_of_examples() {
        let fermat = qc("x^3 + y^3 + z^3");
        let xyz = qc("xyz");
        let v = pluecker_of(&Pencil::from_cubics(&fermat, &xyz).unwrap());
        assert!(n_of(&v).iter().all(|s| s.is_zero()));

        let v = pluecker_of(&Pencil::from_cubics(&qc("x^3"), &qc("3x^2y")).unwrap());
        assert!(n_of(&v).iter().all(|s| s.is_zero()));

        let v = pluecker_of(&Pencil::from_cubics(&qc("x^3"), &qc("y^3")).unwrap());
        let n = n_of(&v);
        assert!(n[..9].iter().all(|s| s.is_zero()));
        assert_eq!(n[9], Scalar::int(-1));
    }

    #[test]
    fn hesse_pencils_satisfy_n_equations() {
        let mut rng = rng_from_seed(55);
        let mut done = 0;
        while done < 50 {
            let f = random_cubic(&mut rng);
            let h = hessian_cubic(&f);
            let Ok(pencil) = Pencil::from_cubics(&f, &h) else { continue };
            let v = pluecker_of(&pencil);
            assert!(n_of(&v).iter().all(|s| s.is_zero()));
            done += 1;
        }
    }
}
