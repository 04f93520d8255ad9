//! Binary quartics and ternary cubics in fixed coefficient conventions,
//! their Hessian covariants, the cone and square loci, and the canonical
//! one-parameter families.
//!
//! Conventions: a binary quartic is `a0*x^4 + 4a1*x^3y + 6a2*x^2y^2 +
//! 4a3*xy^3 + a4*y^4`; a ternary cubic is `a0*x^3 + 3a1*x^2y + 3a2*x^2z +
//! 3a3*xy^2 + 6a4*xyz + 3a5*xz^2 + a6*y^3 + 3a7*y^2z + 3a8*yz^2 + a9*z^3`.
//! The quartic Hessian uses a fixed quadratic coefficient row; the cubic
//! Hessian is `det(second partials)/216` re-extracted in the same
//! convention. Both choices make the canonical-family parameter maps
//! `(1-3t^2)/(6t)` and `(4-t^3)/(3t^2)` come out on the nose.

use crate::linalg::{projectively_equal, Mat};
use crate::poly::{det3, MPoly};
use crate::scalar::{FieldSpec, Scalar};
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("the zero form is not allowed here")]
    ZeroForm,
    #[error("not a form of the expected shape: {0}")]
    WrongShape(String),
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
}

/// Multinomial weights of the quartic convention, slot by slot.
pub const QUARTIC_WEIGHTS: [i64; 5] = [1, 4, 6, 4, 1];
/// Exponents (x, y) of the quartic monomials, slot by slot.
pub const QUARTIC_EXPS: [[u32; 2]; 5] = [[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]];

/// Multinomial weights of the cubic convention, slot by slot.
pub const CUBIC_WEIGHTS: [i64; 10] = [1, 3, 3, 3, 6, 3, 1, 3, 3, 1];
/// Exponents (x, y, z) of the cubic monomials, slot by slot.
pub const CUBIC_EXPS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

/// Binary quartic in the weighted convention (see module docs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryQuartic {
    pub coeffs: [Scalar; 5],
}

/// Ternary cubic in the weighted convention (see module docs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryCubic {
    pub coeffs: [Scalar; 10],
}

impl BinaryQuartic {
    pub fn new(coeffs: [Scalar; 5]) -> Self {
        let f = coeffs[0].spec();
        assert!(coeffs.iter().all(|c| c.spec() == f), "mixed-field coefficients");
        BinaryQuartic { coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.coeffs[0].spec()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn zero(field: FieldSpec) -> Self {
        BinaryQuartic::new(std::array::from_fn(|_| field.zero()))
    }

    pub fn to_poly(&self) -> MPoly {
        let field = self.field();
        let mut p = MPoly::zero(2, field);
        for (i, c) in self.coeffs.iter().enumerate() {
            let w = field.from_int(QUARTIC_WEIGHTS[i]);
            p = &p + &MPoly::monomial(2, QUARTIC_EXPS[i].to_vec(), &w * c);
        }
        p
    }

    /// Reads a degree-4 binary form back into convention coefficients.
    pub fn from_poly(p: &MPoly) -> Result<Self, FormError> {
        if p.arity() != 2 {
            return Err(FormError::WrongShape("expected 2 variables".into()));
        }
        if !p.is_zero() && !(p.is_homogeneous() && p.total_degree() == 4) {
            return Err(FormError::WrongShape("expected homogeneous degree 4".into()));
        }
        let field = p.field();
        let coeffs = std::array::from_fn(|i| {
            let w = field.from_int(QUARTIC_WEIGHTS[i]);
            p.coeff(&QUARTIC_EXPS[i]).checked_div(&w).expect("invertible weight")
        });
        Ok(BinaryQuartic::new(coeffs))
    }

    pub fn parse(src: &str, field: FieldSpec) -> Result<Self, FormError> {
        let p = crate::poly::parse(src, &["x", "y"], field)
            .map_err(|e| FormError::WrongShape(e.to_string()))?;
        BinaryQuartic::from_poly(&p)
    }
}

impl TernaryCubic {
    pub fn new(coeffs: [Scalar; 10]) -> Self {
        let f = coeffs[0].spec();
        assert!(coeffs.iter().all(|c| c.spec() == f), "mixed-field coefficients");
        TernaryCubic { coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.coeffs[0].spec()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn zero(field: FieldSpec) -> Self {
        TernaryCubic::new(std::array::from_fn(|_| field.zero()))
    }

    pub fn to_poly(&self) -> MPoly {
        let field = self.field();
        let mut p = MPoly::zero(3, field);
        for (i, c) in self.coeffs.iter().enumerate() {
            let w = field.from_int(CUBIC_WEIGHTS[i]);
            p = &p + &MPoly::monomial(3, CUBIC_EXPS[i].to_vec(), &w * c);
        }
        p
    }

    /// Reads a degree-3 ternary form back into convention coefficients.
    pub fn from_poly(p: &MPoly) -> Result<Self, FormError> {
        if p.arity() != 3 {
            return Err(FormError::WrongShape("expected 3 variables".into()));
        }
        if !p.is_zero() && !(p.is_homogeneous() && p.total_degree() == 3) {
            return Err(FormError::WrongShape("expected homogeneous degree 3".into()));
        }
        let field = p.field();
        let coeffs = std::array::from_fn(|i| {
            let w = field.from_int(CUBIC_WEIGHTS[i]);
            p.coeff(&CUBIC_EXPS[i]).checked_div(&w).expect("invertible weight")
        });
        Ok(TernaryCubic::new(coeffs))
    }

    pub fn parse(src: &str, field: FieldSpec) -> Result<Self, FormError> {
        let p = crate::poly::parse(src, &["x", "y", "z"], field)
            .map_err(|e| FormError::WrongShape(e.to_string()))?;
        TernaryCubic::from_poly(&p)
    }
}

// ---------------------------------------------------------------------------
// Hessians
// ---------------------------------------------------------------------------

/// Hessian coefficient row for a generic binary quartic, as degree-2
/// polynomials in the convention coefficients `a0..a4`.
pub fn quartic_hessian_generic() -> &'static [MPoly; 5] {
    static CELL: OnceLock<[MPoly; 5]> = OnceLock::new();
    CELL.get_or_init(|| {
        let vars = ["a0", "a1", "a2", "a3", "a4"];
        let row = [
            "-6a1^2 + 6a0a2",
            "-3a1a2 + 3a0a3",
            "-3a2^2 + 2a1a3 + a0a4",
            "-3a2a3 + 3a1a4",
            "-6a3^2 + 6a2a4",
        ];
        std::array::from_fn(|i| crate::poly::parse(row[i], &vars, FieldSpec::Q).unwrap())
    })
}

/// Hessian coefficients of a generic ternary cubic, as degree-3 polynomials
/// in the convention coefficients `a0..a9`: extraction of
/// `det(second partials)/216`.
pub fn cubic_hessian_generic() -> &'static [MPoly; 10] {
    static CELL: OnceLock<[MPoly; 10]> = OnceLock::new();
    CELL.get_or_init(|| {
        // variables: x,y,z at 0..3, then a0..a9 at 3..13
        let arity = 13;
        let field = FieldSpec::Q;
        let mut f = MPoly::zero(arity, field);
        for i in 0..10 {
            let w = field.from_int(CUBIC_WEIGHTS[i]);
            let mut exps = vec![0u32; arity];
            exps[..3].copy_from_slice(&CUBIC_EXPS[i]);
            exps[3 + i] = 1;
            f = &f + &MPoly::monomial(arity, exps, w);
        }
        let h = hessian_cubic_poly(&f, [0, 1, 2]);
        let coeffs = cubic_coeff_polys(&h, [0, 1, 2]);
        std::array::from_fn(|i| coeffs[i].project_out(&[0, 1, 2]))
    })
}

/// `det(second partials)/216` of a polynomial of degree 3 in the position
/// variables `xyz`; other variables ride along as parameters.
pub fn hessian_cubic_poly(f: &MPoly, xyz: [usize; 3]) -> MPoly {
    let second = |i: usize, j: usize| f.derivative(xyz[i]).derivative(xyz[j]);
    let m = [
        [second(0, 0), second(0, 1), second(0, 2)],
        [second(1, 0), second(1, 1), second(1, 2)],
        [second(2, 0), second(2, 1), second(2, 2)],
    ];
    let inv216 = f
        .field()
        .from_int(216)
        .inv()
        .expect("216 must be invertible in the field");
    det3(&m).scalar_mul(&inv216)
}

/// Splits a ternary cubic (in the position variables `xyz`, with arbitrary
/// parameter variables elsewhere) into its 10 convention coefficients. Each
/// returned polynomial keeps the full arity but is free of `xyz`.
pub fn cubic_coeff_polys(f: &MPoly, xyz: [usize; 3]) -> [MPoly; 10] {
    let field = f.field();
    let map = f.coefficient_map(&xyz);
    for key in map.keys() {
        assert!(
            CUBIC_EXPS.iter().any(|e| e[..] == key[..]),
            "not a cubic in the position variables"
        );
    }
    std::array::from_fn(|i| {
        let w = field.from_int(CUBIC_WEIGHTS[i]);
        match map.get(&CUBIC_EXPS[i].to_vec()) {
            Some(p) => p.scalar_mul(&w.inv().expect("invertible weight")),
            None => MPoly::zero(f.arity(), field),
        }
    })
}

/// Quartic analog of [`cubic_coeff_polys`] for the position variables `xy`.
pub fn quartic_coeff_polys(f: &MPoly, xy: [usize; 2]) -> [MPoly; 5] {
    let field = f.field();
    let map = f.coefficient_map(&xy);
    for key in map.keys() {
        assert!(
            QUARTIC_EXPS.iter().any(|e| e[..] == key[..]),
            "not a quartic in the position variables"
        );
    }
    std::array::from_fn(|i| {
        let w = field.from_int(QUARTIC_WEIGHTS[i]);
        match map.get(&QUARTIC_EXPS[i].to_vec()) {
            Some(p) => p.scalar_mul(&w.inv().expect("invertible weight")),
            None => MPoly::zero(f.arity(), field),
        }
    })
}

pub fn hessian_quartic(f: &BinaryQuartic) -> BinaryQuartic {
    let generic = quartic_hessian_generic();
    let field = f.field();
    BinaryQuartic::new(std::array::from_fn(|i| generic[i].eval_in(&f.coeffs, field)))
}

pub fn hessian_cubic(f: &TernaryCubic) -> TernaryCubic {
    let generic = cubic_hessian_generic();
    let field = f.field();
    TernaryCubic::new(std::array::from_fn(|i| generic[i].eval_in(&f.coeffs, field)))
}

// ---------------------------------------------------------------------------
// Special loci
// ---------------------------------------------------------------------------

/// A ternary cubic is a cone exactly when its Hessian vanishes identically.
pub fn is_cone_cubic(f: &TernaryCubic) -> Result<bool, FormError> {
    if f.is_zero() {
        return Err(FormError::ZeroForm);
    }
    Ok(hessian_cubic(f).is_zero())
}

/// A binary quartic is a "cone" (fourth power of a linear form) exactly when
/// the 2x2 minors of the catalecticant rows `(a0 a1 a2 a3 / a1 a2 a3 a4)`
/// all vanish.
pub fn is_cone_quartic(f: &BinaryQuartic) -> Result<bool, FormError> {
    if f.is_zero() {
        return Err(FormError::ZeroForm);
    }
    let a = &f.coeffs;
    for i in 0..4 {
        for j in i + 1..4 {
            let minor = &(&a[i] * &a[j + 1]) - &(&a[j] * &a[i + 1]);
            if !minor.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The seven cubic equations (in `a0..a4`) cutting out the locus where a
/// binary quartic is proportional to its own Hessian: the coefficients, in
/// descending powers of x, of `det(f_x, f_y; H_x, H_y)`. Squares of
/// quadratics satisfy all seven.
pub fn sq_equations() -> &'static [MPoly; 7] {
    static CELL: OnceLock<[MPoly; 7]> = OnceLock::new();
    CELL.get_or_init(|| {
        // variables: x,y at 0,1, then a0..a4 at 2..7
        let arity = 7;
        let field = FieldSpec::Q;
        let mut f = MPoly::zero(arity, field);
        let mut h = MPoly::zero(arity, field);
        let generic = quartic_hessian_generic();
        for i in 0..5 {
            let w = field.from_int(QUARTIC_WEIGHTS[i]);
            let mut exps = vec![0u32; arity];
            exps[..2].copy_from_slice(&QUARTIC_EXPS[i]);
            let m = MPoly::monomial(arity, exps, w);
            let mut a_exps = vec![0u32; arity];
            a_exps[2 + i] = 1;
            f = &f + &(&m * &MPoly::monomial(arity, a_exps, field.one()));
            let hi = generic[i].map_vars(arity, &[2, 3, 4, 5, 6]);
            h = &h + &(&m * &hi);
        }
        let jac = &(&f.derivative(0) * &h.derivative(1)) - &(&f.derivative(1) * &h.derivative(0));
        std::array::from_fn(|k| {
            let mut key = vec![0u32; arity];
            key[0] = (6 - k) as u32;
            key[1] = k as u32;
            let mut coeff = MPoly::zero(arity, field);
            for (e, c) in jac.terms() {
                if e[0] == key[0] && e[1] == key[1] {
                    let mut rest = e.clone();
                    rest[0] = 0;
                    rest[1] = 0;
                    coeff = &coeff + &MPoly::monomial(arity, rest, c.clone());
                }
            }
            coeff.project_out(&[0, 1])
        })
    })
}

/// Evaluates the seven square-locus equations at a concrete quartic.
pub fn sq_equations_at(f: &BinaryQuartic) -> [Scalar; 7] {
    let eqs = sq_equations();
    let field = f.field();
    std::array::from_fn(|i| eqs[i].eval_in(&f.coeffs, field))
}

// ---------------------------------------------------------------------------
// Canonical families
// ---------------------------------------------------------------------------

/// Parameter of a canonical pencil member; `Infinity` is the distinguished
/// second generator (`x^2y^2` or `xyz`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PencilParam {
    Finite(Scalar),
    Infinity,
}

/// `x^4 + 6t*x^2y^2 + y^4`, or `x^2y^2` at infinity.
pub fn quartic_family_member(param: &PencilParam, field: FieldSpec) -> BinaryQuartic {
    match param {
        PencilParam::Finite(t) => BinaryQuartic::new([
            field.one(),
            field.zero(),
            t.clone(),
            field.zero(),
            field.one(),
        ]),
        PencilParam::Infinity => {
            let mut c = BinaryQuartic::zero(field).coeffs;
            c[2] = field.from_ratio(1, 6);
            BinaryQuartic::new(c)
        }
    }
}

/// `x^3 + y^3 + z^3 - 3t*xyz`, or `xyz` at infinity.
pub fn cubic_family_member(param: &PencilParam, field: FieldSpec) -> TernaryCubic {
    let mut c = TernaryCubic::zero(field).coeffs;
    match param {
        PencilParam::Finite(t) => {
            c[0] = field.one();
            c[6] = field.one();
            c[9] = field.one();
            c[4] = -&t.checked_div(&field.from_int(2)).expect("2 invertible");
        }
        PencilParam::Infinity => c[4] = field.from_ratio(1, 6),
    }
    TernaryCubic::new(c)
}

/// The parameter of the Hessian of the canonical quartic member:
/// `t -> (1-3t^2)/(6t)`. Errors at `t = 0`, whose Hessian is the infinity
/// member.
pub fn quartic_pencil_parameter_map(t: &Scalar) -> Result<Scalar, FormError> {
    if t.is_zero() {
        return Err(FormError::ExcludedParameter(
            "t = 0: Hessian is the infinity member x^2y^2".into(),
        ));
    }
    let field = t.spec();
    let num = &field.one() - &(&field.from_int(3) * &(t * t));
    let den = &field.from_int(6) * t;
    Ok(num.checked_div(&den).unwrap())
}

/// The parameter of the Hessian of the canonical cubic member:
/// `t -> (4-t^3)/(3t^2)`. Errors at `t = 0`, whose Hessian is `xyz`.
pub fn cubic_pencil_parameter_map(t: &Scalar) -> Result<Scalar, FormError> {
    if t.is_zero() {
        return Err(FormError::ExcludedParameter(
            "t = 0: Hessian is the infinity member xyz".into(),
        ));
    }
    let field = t.spec();
    let num = &field.from_int(4) - &t.pow(3);
    let den = &field.from_int(3) * &(t * t);
    Ok(num.checked_div(&den).unwrap())
}

/// Smoothness of `x^4 + 6t*x^2y^2 + y^4`: excluded at `t = ±1/3` (perfect
/// squares of quadratics with double roots).
pub fn quartic_family_is_smooth(t: &Scalar) -> bool {
    let field = t.spec();
    let third = field.from_ratio(1, 3);
    *t != third && *t != -&third
}

/// Smoothness of `x^3 + y^3 + z^3 - 3t*xyz`: excluded exactly at `t^3 = 1`.
pub fn cubic_family_is_smooth(t: &Scalar) -> bool {
    !(&t.pow(3) - &t.spec().one()).is_zero()
}

// ---------------------------------------------------------------------------
// Group action and closure properties
// ---------------------------------------------------------------------------

/// Pullback `f(C·x)` of a cubic along a linear substitution.
pub fn act_on_cubic(c: &[Vec<Scalar>], f: &TernaryCubic) -> TernaryCubic {
    let field = f.field();
    let subs: Vec<MPoly> = (0..3)
        .map(|i| {
            let mut l = MPoly::zero(3, field);
            for j in 0..3 {
                l = &l + &MPoly::var(3, field, j).scalar_mul(&c[i][j]);
            }
            l
        })
        .collect();
    TernaryCubic::from_poly(&f.to_poly().substitute(&subs)).expect("degree preserved")
}

/// Pullback `f(C·x)` of a quartic along a linear substitution.
pub fn act_on_quartic(c: &[Vec<Scalar>], f: &BinaryQuartic) -> BinaryQuartic {
    let field = f.field();
    let subs: Vec<MPoly> = (0..2)
        .map(|i| {
            let mut l = MPoly::zero(2, field);
            for j in 0..2 {
                l = &l + &MPoly::var(2, field, j).scalar_mul(&c[i][j]);
            }
            l
        })
        .collect();
    BinaryQuartic::from_poly(&f.to_poly().substitute(&subs)).expect("degree preserved")
}

/// True when two polynomial vectors are projectively proportional as
/// polynomial families: every 2x2 minor is identically zero and neither
/// vector is identically zero.
pub fn polys_projectively_proportional(u: &[MPoly], v: &[MPoly]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.iter().all(|p| p.is_zero()) || v.iter().all(|p| p.is_zero()) {
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

/// Closure property of the cubic Hesse pencil: the Hessian of every member
/// of `<f, H(f)>` stays in the pencil. Certified by checking that every 3x3
/// minor of the matrix with rows `f`, `H(f)`, `H(u*f + v*H(f))` vanishes
/// identically in `(u, v)`.
pub fn hesse_closure_cubic(f: &TernaryCubic) -> bool {
    let field = f.field();
    let hf = hessian_cubic(f);
    // variables: x,y,z at 0..3, pencil parameters u,v at 3,4
    let arity = 5;
    let u = MPoly::var(arity, field, 3);
    let v = MPoly::var(arity, field, 4);
    let fe = f.to_poly().map_vars(arity, &[0, 1, 2]);
    let he = hf.to_poly().map_vars(arity, &[0, 1, 2]);
    let member = &(&u * &fe) + &(&v * &he);
    let hm = cubic_coeff_polys(&hessian_cubic_poly(&member, [0, 1, 2]), [0, 1, 2]);
    let row_f: Vec<MPoly> = f.coeffs.iter().map(|c| MPoly::constant(arity, c.clone())).collect();
    let row_h: Vec<MPoly> = hf.coeffs.iter().map(|c| MPoly::constant(arity, c.clone())).collect();
    all_3x3_minors_vanish(&row_f, &row_h, &hm)
}

/// Quartic analog of [`hesse_closure_cubic`].
pub fn hesse_closure_quartic(f: &BinaryQuartic) -> bool {
    let field = f.field();
    let hf = hessian_quartic(f);
    // variables: x,y at 0..2, pencil parameters u,v at 2,3
    let arity = 4;
    let u = MPoly::var(arity, field, 2);
    let v = MPoly::var(arity, field, 3);
    let fe = f.to_poly().map_vars(arity, &[0, 1]);
    let he = hf.to_poly().map_vars(arity, &[0, 1]);
    let member = &(&u * &fe) + &(&v * &he);
    let generic = quartic_hessian_generic();
    let member_coeffs = quartic_coeff_polys(&member, [0, 1]);
    // Hessian of the member via the generic row, substituting coefficient
    // polynomials for a0..a4.
    let subs: Vec<MPoly> = member_coeffs.to_vec();
    let hm: Vec<MPoly> = generic.iter().map(|g| g.substitute(&subs)).collect();
    let row_f: Vec<MPoly> = f.coeffs.iter().map(|c| MPoly::constant(arity, c.clone())).collect();
    let row_h: Vec<MPoly> = hf.coeffs.iter().map(|c| MPoly::constant(arity, c.clone())).collect();
    all_3x3_minors_vanish(&row_f, &row_h, &hm)
}

fn all_3x3_minors_vanish(r0: &[MPoly], r1: &[MPoly], r2: &[MPoly]) -> bool {
    let n = r0.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = [
                    [r0[i].clone(), r0[j].clone(), r0[k].clone()],
                    [r1[i].clone(), r1[j].clone(), r1[k].clone()],
                    [r2[i].clone(), r2[j].clone(), r2[k].clone()],
                ];
                if !det3(&m).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Hessian preimage catalog
// ---------------------------------------------------------------------------

/// One row of the Hessian preimage catalog: which cubics (up to the group
/// action) have the given target as their Hessian.
#[derive(Debug, Clone)]
pub struct Table1Row {
    pub target: &'static str,
    pub family: Option<&'static str>,
    pub constraint: Option<&'static str>,
}

pub fn table1_rows() -> Vec<Table1Row> {
    vec![
        Table1Row {
            target: "x^3",
            family: Some("a0x^3 + 3a1x^2y + 3a2x^2z + 3s^2xy^2 + 6stxyz + 3t^2xz^2"),
            constraint: Some("a4^2 = a3a5 (parametrized by a3 = s^2, a4 = st, a5 = t^2)"),
        },
        Table1Row {
            target: "xy(x+y)",
            family: None,
            constraint: None,
        },
        Table1Row {
            target: "x^2y",
            family: Some("a0x^3 + 3a1x^2y + 3a2x^2z + a6y^3"),
            constraint: Some("a2a6 != 0"),
        },
        Table1Row {
            target: "x(x^2+yz)",
            family: Some("x^3 - 3xyz"),
            constraint: None,
        },
        Table1Row {
            target: "y(x^2+yz)",
            family: None,
            constraint: None,
        },
        Table1Row {
            target: "y^2z - x^3 - x^2z",
            family: Some("-2x^3 - 3x^2z + 3xy^2 + 3y^2z"),
            constraint: None,
        },
        Table1Row {
            target: "y^2z - x^3",
            family: None,
            constraint: None,
        },
        Table1Row {
            target: "x^3 + y^3 + z^3 - 3txyz",
            family: Some("x^3 + y^3 + z^3 - 3sxyz with 4 - s^3 = 3s^2t"),
            constraint: Some("t^3 != 1"),
        },
        Table1Row {
            target: "xyz",
            family: Some("a0x^3 + a6y^3 + a9z^3, and xyz itself"),
            constraint: Some("a0a6a9 != 0"),
        },
    ]
}

/// Symbolically certifies every non-empty catalog row: the stated family's
/// Hessian is projectively the target, identically in the family parameters.
pub fn verify_table1() -> Vec<(&'static str, bool)> {
    let q = FieldSpec::Q;
    let mut out = Vec::new();

    // x^3: rank-one quadratic tail parametrized by (s, t).
    // variables: x,y,z,p0,p1,p2,s,t
    {
        let vars = ["x", "y", "z", "p0", "p1", "p2", "s", "t"];
        let g = crate::poly::parse(
            "p0x^3 + 3p1x^2y + 3p2x^2z + 3s^2xy^2 + 6s t xyz + 3t^2xz^2",
            &vars,
            q,
        )
        .unwrap();
        let h = cubic_coeff_polys(&hessian_cubic_poly(&g, [0, 1, 2]), [0, 1, 2]);
        let ok = !h[0].is_zero() && h[1..].iter().all(|p| p.is_zero());
        out.push(("x^3", ok));
    }

    // x^2y
    {
        let vars = ["x", "y", "z", "p0", "p1", "p2", "p6"];
        let g = crate::poly::parse("p0x^3 + 3p1x^2y + 3p2x^2z + p6y^3", &vars, q).unwrap();
        let h = cubic_coeff_polys(&hessian_cubic_poly(&g, [0, 1, 2]), [0, 1, 2]);
        let ok = !h[1].is_zero()
            && h.iter().enumerate().all(|(i, p)| i == 1 || p.is_zero());
        out.push(("x^2y", ok));
    }

    // x(x^2+yz): single concrete preimage x^3 - 3xyz
    {
        let g = TernaryCubic::parse("x^3 - 3xyz", q).unwrap();
        let target = TernaryCubic::parse("x^3 + xyz", q).unwrap();
        let ok = projectively_equal(&hessian_cubic(&g).coeffs, &target.coeffs);
        out.push(("x(x^2+yz)", ok));
    }

    // y^2z - x^3 - x^2z
    {
        let g = TernaryCubic::parse("-2x^3 - 3x^2z + 3xy^2 + 3y^2z", q).unwrap();
        let target = TernaryCubic::parse("y^2z - x^3 - x^2z", q).unwrap();
        let ok = projectively_equal(&hessian_cubic(&g).coeffs, &target.coeffs);
        out.push(("y^2z - x^3 - x^2z", ok));
    }

    // x^3+y^3+z^3-3txyz: Hessian of the s-member is the member at
    // t = (4-s^3)/(3s^2); checked with denominators cleared.
    {
        let vars = ["x", "y", "z", "s"];
        let g = crate::poly::parse("x^3 + y^3 + z^3 - 3s xyz", &vars, q).unwrap();
        let h = cubic_coeff_polys(&hessian_cubic_poly(&g, [0, 1, 2]), [0, 1, 2]);
        // target cleared: 3s^2(x^3+y^3+z^3) - 3(4-s^3)xyz
        let tpoly = crate::poly::parse("3s^2(x^3 + y^3 + z^3) - 3(4 - s^3)xyz", &vars, q).unwrap();
        let t = cubic_coeff_polys(&tpoly, [0, 1, 2]);
        let ok = polys_projectively_proportional(&h, &t);
        out.push(("x^3 + y^3 + z^3 - 3txyz", ok));
    }

    // xyz: triples of independent coordinate cubes, plus xyz itself.
    {
        let vars = ["x", "y", "z", "p0", "p6", "p9"];
        let g = crate::poly::parse("p0x^3 + p6y^3 + p9z^3", &vars, q).unwrap();
        let h = cubic_coeff_polys(&hessian_cubic_poly(&g, [0, 1, 2]), [0, 1, 2]);
        let family_ok = !h[4].is_zero()
            && h.iter().enumerate().all(|(i, p)| i == 4 || p.is_zero());
        let xyz = TernaryCubic::parse("xyz", q).unwrap();
        let self_ok = projectively_equal(&hessian_cubic(&xyz).coeffs, &xyz.coeffs);
        out.push(("xyz", family_ok && self_ok));
    }

    out
}

// ---------------------------------------------------------------------------
// Misc helpers
// ---------------------------------------------------------------------------

/// Catalecticant (Hankel) matrix of a binary quartic.
pub fn catalecticant(f: &BinaryQuartic) -> Mat {
    let a = &f.coeffs;
    Mat::from_rows(
        f.field(),
        vec![
            vec![a[0].clone(), a[1].clone(), a[2].clone()],
            vec![a[1].clone(), a[2].clone(), a[3].clone()],
            vec![a[2].clone(), a[3].clone(), a[4].clone()],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_scalar_vec, random_unimodular, rng_from_seed};

    fn qc(s: &str) -> TernaryCubic {
        TernaryCubic::parse(s, FieldSpec::Q).unwrap()
    }

    fn qq(s: &str) -> BinaryQuartic {
        BinaryQuartic::parse(s, FieldSpec::Q).unwrap()
    }

    #[test]
    fn conversion_round_trip() {
        let f = qc("x^3 + y^3 + z^3 - 3xyz");
        assert_eq!(TernaryCubic::from_poly(&f.to_poly()).unwrap(), f);
        let g = qq("x^4 + 6x^2y^2 + y^4");
        assert_eq!(BinaryQuartic::from_poly(&g.to_poly()).unwrap(), g);
        // weights land in the right slots
        assert_eq!(qc("6xyz").coeffs[4], Scalar::int(1));
        assert_eq!(qq("4x^3y").coeffs[1], Scalar::int(1));
    }

    #[test]
    fn quartic_hessian_row_matches_determinant() {
        // det of second partials of the generic quartic, re-extracted in the
        // convention, is exactly 24 times the fixed row.
        let arity = 7; // x,y,a0..a4
        let q = FieldSpec::Q;
        let mut f = MPoly::zero(arity, q);
        for i in 0..5 {
            let w = q.from_int(QUARTIC_WEIGHTS[i]);
            let mut exps = vec![0u32; arity];
            exps[..2].copy_from_slice(&QUARTIC_EXPS[i]);
            exps[2 + i] = 1;
            f = &f + &MPoly::monomial(arity, exps, w);
        }
        let jac = &(&f.derivative(0).derivative(0) * &f.derivative(1).derivative(1))
            - &(&f.derivative(0).derivative(1) * &f.derivative(0).derivative(1));
        let extracted = quartic_coeff_polys(&jac, [0, 1]);
        let generic = quartic_hessian_generic();
        for i in 0..5 {
            let expect = generic[i]
                .map_vars(arity, &[2, 3, 4, 5, 6])
                .scalar_mul(&Scalar::int(24));
            assert_eq!(extracted[i].project_out(&[0, 1]).map_vars(arity, &[2, 3, 4, 5, 6]), expect);
        }
    }

    #[test]
    fn cubic_hessian_of_fermat_is_xyz() {
        let f = qc("x^3 + y^3 + z^3");
        let h = hessian_cubic(&f);
        assert_eq!(h.to_poly(), crate::poly::parse("xyz", &["x", "y", "z"], FieldSpec::Q).unwrap());
    }

    #[test]
    fn cubic_hessian_fixed_and_zero_cases() {
        let xyz = qc("xyz");
        assert!(projectively_equal(&hessian_cubic(&xyz).coeffs, &xyz.coeffs));
        assert!(hessian_cubic(&qc("x^3")).is_zero());
        // binary-in-disguise cubics are cones too
        assert!(hessian_cubic(&qc("x^2y")).is_zero());
        assert!(!hessian_cubic(&qc("x^3 - 3xyz")).is_zero());
    }

    #[test]
    fn quartic_hessian_fixed_cases() {
        assert!(hessian_quartic(&qq("x^4")).is_zero());
        let sq = qq("x^2y^2");
        assert!(projectively_equal(&hessian_quartic(&sq).coeffs, &sq.coeffs));
    }

    #[test]
    fn quartic_hessian_table_discrepancy() {
        // H(x^4 + x^2y^2) is projectively 2x^4 - x^2y^2; the value
        // 6x^4 - x^2y^2 sometimes quoted for this family member does not
        // match the determinant in this convention.
        let h = hessian_quartic(&qq("x^4 + x^2y^2"));
        let derived = qq("2x^4 - x^2y^2");
        let quoted = qq("6x^4 - x^2y^2");
        assert!(projectively_equal(&h.coeffs, &derived.coeffs));
        assert!(!projectively_equal(&h.coeffs, &quoted.coeffs));
    }

    #[test]
    fn hessian_equivariance_cubic() {
        let mut rng = rng_from_seed(31);
        for _ in 0..20 {
            let f = TernaryCubic::new(std::array::from_fn(|_| {
                crate::sampling::random_rational(&mut rng)
            }));
            if f.is_zero() {
                continue;
            }
            let c = random_unimodular(&mut rng, 3);
            let lhs = hessian_cubic(&act_on_cubic(&c, &f));
            let rhs = act_on_cubic(&c, &hessian_cubic(&f));
            if rhs.is_zero() {
                assert!(lhs.is_zero());
            } else {
                assert!(projectively_equal(&lhs.coeffs, &rhs.coeffs));
            }
        }
    }

    #[test]
    fn hessian_equivariance_quartic() {
        let mut rng = rng_from_seed(32);
        for _ in 0..20 {
            let f = BinaryQuartic::new(std::array::from_fn(|_| {
                crate::sampling::random_rational(&mut rng)
            }));
            if f.is_zero() {
                continue;
            }
            let c = random_unimodular(&mut rng, 2);
            let lhs = hessian_quartic(&act_on_quartic(&c, &f));
            let rhs = act_on_quartic(&c, &hessian_quartic(&f));
            if rhs.is_zero() {
                assert!(lhs.is_zero());
            } else {
                assert!(projectively_equal(&lhs.coeffs, &rhs.coeffs));
            }
        }
    }

    #[test]
    fn hessian_over_finite_field_matches_reduction() {
        let p = 10007;
        let f = qc("x^3 + 2x^2y - 5xyz + 7y^2z + z^3");
        let hq = hessian_cubic(&f);
        let fp = TernaryCubic::new(std::array::from_fn(|i| {
            crate::scalar::rational_mod_p(&f.coeffs[i], p).unwrap()
        }));
        let hp = hessian_cubic(&fp);
        for i in 0..10 {
            assert_eq!(crate::scalar::rational_mod_p(&hq.coeffs[i], p).unwrap(), hp.coeffs[i]);
        }
    }

    #[test]
    fn cone_predicates() {
        assert!(is_cone_cubic(&qc("x^3")).unwrap());
        assert!(is_cone_cubic(&qc("x^2y")).unwrap());
        assert!(!is_cone_cubic(&qc("x^3 - 3xyz")).unwrap());
        assert!(!is_cone_cubic(&qc("x^3 + y^3 + z^3")).unwrap());
        assert!(is_cone_quartic(&qq("x^4")).unwrap());
        assert!(is_cone_quartic(&qq("(x+y)^4")).unwrap());
        assert!(!is_cone_quartic(&qq("x^4 + y^4")).unwrap());
        assert_eq!(
            is_cone_cubic(&TernaryCubic::zero(FieldSpec::Q)),
            Err(FormError::ZeroForm)
        );
    }

    #[test]
    fn sq_equations_examples() {
        assert!(sq_equations_at(&qq("(x^2+y^2)^2")).iter().all(|s| s.is_zero()));
        assert!(sq_equations_at(&qq("x^4")).iter().all(|s| s.is_zero()));
        assert!(!sq_equations_at(&qq("x^4 + y^4")).iter().all(|s| s.is_zero()));
    }

    #[test]
    fn sq_equations_on_random_squares() {
        let mut rng = rng_from_seed(33);
        for _ in 0..10 {
            let c = random_scalar_vec(&mut rng, 3);
            // (c0 x^2 + c1 xy + c2 y^2)^2
            let q2 = MPoly::var(2, FieldSpec::Q, 0).pow(2).scalar_mul(&c[0])
                + MPoly::monomial(2, vec![1, 1], c[1].clone())
                + MPoly::var(2, FieldSpec::Q, 1).pow(2).scalar_mul(&c[2]);
            let f = BinaryQuartic::from_poly(&q2.pow(2)).unwrap();
            assert!(sq_equations_at(&f).iter().all(|s| s.is_zero()));
        }
    }

    #[test]
    fn quartic_parameter_map() {
        assert_eq!(
            quartic_pencil_parameter_map(&Scalar::int(1)).unwrap(),
            Scalar::rat(-1, 3)
        );
        // fixed points t = ±1/3
        for t in [Scalar::rat(1, 3), Scalar::rat(-1, 3)] {
            assert_eq!(quartic_pencil_parameter_map(&t).unwrap(), t);
        }
        assert!(quartic_pencil_parameter_map(&Scalar::int(0)).is_err());
        // the map is 2:1: for generic c, 3t^2 + 6ct - 1 is squarefree of
        // degree 2
        let vars = ["t"];
        for c in [1i64, 2, 5, -3] {
            let src = format!("3t^2 + {}t - 1", 6 * c);
            let p = crate::poly::parse(&src, &vars, FieldSpec::Q).unwrap();
            assert_eq!(crate::poly::squarefree_root_count(&p, 0).unwrap(), (2, true));
        }
    }

    #[test]
    fn parameter_maps_match_hessians() {
        let mut rng = rng_from_seed(34);
        for _ in 0..10 {
            let t = crate::sampling::random_nonzero_rational(&mut rng);
            // quartic
            let f = quartic_family_member(&PencilParam::Finite(t.clone()), FieldSpec::Q);
            let h = hessian_quartic(&f);
            let expect = quartic_family_member(
                &PencilParam::Finite(quartic_pencil_parameter_map(&t).unwrap()),
                FieldSpec::Q,
            );
            assert!(projectively_equal(&h.coeffs, &expect.coeffs));
            // cubic
            let f = cubic_family_member(&PencilParam::Finite(t.clone()), FieldSpec::Q);
            let h = hessian_cubic(&f);
            let expect = cubic_family_member(
                &PencilParam::Finite(cubic_pencil_parameter_map(&t).unwrap()),
                FieldSpec::Q,
            );
            assert!(projectively_equal(&h.coeffs, &expect.coeffs));
        }
        // t = 0 members map to the infinity member
        let h = hessian_quartic(&quartic_family_member(
            &PencilParam::Finite(Scalar::int(0)),
            FieldSpec::Q,
        ));
        let inf = quartic_family_member(&PencilParam::Infinity, FieldSpec::Q);
        assert!(projectively_equal(&h.coeffs, &inf.coeffs));
    }

    #[test]
    fn family_smoothness_flags() {
        assert!(quartic_family_is_smooth(&Scalar::int(0)));
        assert!(!quartic_family_is_smooth(&Scalar::rat(1, 3)));
        assert!(!quartic_family_is_smooth(&Scalar::rat(-1, 3)));
        assert!(cubic_family_is_smooth(&Scalar::int(0)));
        assert!(!cubic_family_is_smooth(&Scalar::int(1)));
        // over Q(w) the other cube roots of unity are excluded too
        let w = FieldSpec::QOmega.omega().unwrap();
        assert!(!cubic_family_is_smooth(&w));
    }

    #[test]
    fn table1_verification() {
        let rows = table1_rows();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows.iter().filter(|r| r.family.is_none()).count(), 3);
        for (name, ok) in verify_table1() {
            assert!(ok, "catalog row failed: {name}");
        }
    }

    #[test]
    fn hesse_closure_fixed_and_random() {
        assert!(hesse_closure_cubic(&qc("x^3 + y^3 + z^3")));
        assert!(hesse_closure_quartic(&qq("x^4 + y^4")));
        let mut rng = rng_from_seed(35);
        for _ in 0..3 {
            let f = TernaryCubic::new(std::array::from_fn(|_| {
                crate::sampling::random_rational(&mut rng)
            }));
            if f.is_zero() || hessian_cubic(&f).is_zero() {
                continue;
            }
            assert!(hesse_closure_cubic(&f));
            let g = BinaryQuartic::new(std::array::from_fn(|_| {
                crate::sampling::random_rational(&mut rng)
            }));
            if g.is_zero() || hessian_quartic(&g).is_zero() {
                continue;
            }
            assert!(hesse_closure_quartic(&g));
        }
    }

    #[test]
    fn catalecticant_rank() {
        assert_eq!(catalecticant(&qq("x^4")).rank(), 1);
        assert_eq!(catalecticant(&qq("x^4 + y^4")).rank(), 2);
        assert_eq!(catalecticant(&qq("x^4 + x^3y + y^4")).rank(), 3);
    }
}
