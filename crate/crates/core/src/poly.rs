//! Sparse multivariate polynomials over any [`Scalar`] field.
//!
//! Exponent tuples map to nonzero coefficients; zero coefficients are never
//! stored, so structural equality is polynomial equality. Everything here is
//! exact: addition, multiplication, formal derivatives, substitution,
//! univariate gcd, and Sylvester resultants.

use crate::scalar::{FieldSpec, Scalar};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not univariate in variable {0}")]
    NotUnivariate(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Sparse multivariate polynomial with a fixed variable arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    arity: usize,
    field: FieldSpec,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MPoly {
    pub fn zero(arity: usize, field: FieldSpec) -> Self {
        MPoly {
            arity,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Scalar) -> Self {
        let field = c.spec();
        let mut p = MPoly::zero(arity, field);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    pub fn one(arity: usize, field: FieldSpec) -> Self {
        MPoly::constant(arity, field.one())
    }

    pub fn var(arity: usize, field: FieldSpec, idx: usize) -> Self {
        assert!(idx < arity, "variable index {idx} out of range for arity {arity}");
        let mut exps = vec![0; arity];
        exps[idx] = 1;
        MPoly::monomial(arity, exps, field.one())
    }

    pub fn monomial(arity: usize, exps: Vec<u32>, coeff: Scalar) -> Self {
        assert_eq!(exps.len(), arity);
        let mut p = MPoly::zero(arity, coeff.spec());
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Coefficient of the exact monomial `exps` (zero scalar if absent).
    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn check_compat(&self, rhs: &MPoly) -> Result<(), PolyError> {
        if self.arity != rhs.arity {
            return Err(PolyError::ArityMismatch(self.arity, rhs.arity));
        }
        if self.field != rhs.field {
            return Err(PolyError::FieldMismatch(self.field, rhs.field));
        }
        Ok(())
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        self.check_compat(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &MPoly) -> Result<MPoly, PolyError> {
        self.check_compat(rhs)?;
        let mut out = MPoly::zero(self.arity, self.field);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scalar_mul(&self, s: &Scalar) -> MPoly {
        let mut out = MPoly::zero(self.arity, self.field);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), c * s);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.arity, self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.arity, self.field);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[var] -= 1;
            let factor = self.field.from_int(e[var] as i64);
            out.insert_term(exps, c * &factor);
        }
        out
    }

    /// Evaluates at a full point. The point must have one scalar per
    /// variable, all from this polynomial's field.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.arity, "evaluation point arity mismatch");
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    term = &term * &x.pow(k);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluates a rational-coefficient polynomial at a point in any field,
    /// embedding each coefficient first. Panics when a coefficient cannot
    /// be embedded (denominator divisible by the characteristic).
    pub fn eval_in(&self, point: &[Scalar], target: FieldSpec) -> Scalar {
        assert_eq!(self.field, FieldSpec::Q, "eval_in embeds from Q");
        assert_eq!(point.len(), self.arity);
        let mut acc = target.zero();
        for (e, c) in &self.terms {
            let mut term = crate::scalar::embed_rational(c, target)
                .expect("coefficient embeddable in target field");
            for (x, &k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    term = &term * &x.pow(k);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Substitutes scalars for a subset of the variables, keeping the arity.
    pub fn eval_partial(&self, bindings: &[(usize, Scalar)]) -> MPoly {
        let mut out = MPoly::zero(self.arity, self.field);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            let mut exps = e.clone();
            for (var, val) in bindings {
                if exps[*var] > 0 {
                    term = &term * &val.pow(exps[*var]);
                    exps[*var] = 0;
                }
            }
            out.insert_term(exps, term);
        }
        out
    }

    /// Substitutes a polynomial for every variable. All substituted
    /// polynomials must share an arity, which becomes the result arity.
    pub fn substitute(&self, subs: &[MPoly]) -> MPoly {
        assert_eq!(subs.len(), self.arity, "one substitution per variable required");
        let arity = subs.first().map(|p| p.arity).unwrap_or(0);
        let mut out = MPoly::zero(arity, self.field);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(arity, c.clone());
            for (sub, &k) in subs.iter().zip(e.iter()) {
                if k > 0 {
                    term = &term * &sub.pow(k);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Groups terms by their exponents on `vars`: the key keeps only those
    /// exponents, the value is the cofactor polynomial with `vars` cleared.
    pub fn coefficient_map(&self, vars: &[usize]) -> BTreeMap<Vec<u32>, MPoly> {
        let mut map: BTreeMap<Vec<u32>, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&v| e[v]).collect();
            let mut rest = e.clone();
            for &v in vars {
                rest[v] = 0;
            }
            map.entry(key)
                .or_insert_with(|| MPoly::zero(self.arity, self.field))
                .insert_term(rest, c.clone());
        }
        map.retain(|_, p| !p.is_zero());
        map
    }

    /// Coefficients of `var^0, var^1, ...` as polynomials with `var` cleared.
    pub fn coeffs_in_var(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(self.arity, self.field); d + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[var] as usize;
            rest[var] = 0;
            out[k].insert_term(rest, c.clone());
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        self.check_compat(divisor).ok()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.arity, self.field);
        let (dlead_e, dlead_c) = divisor.terms.iter().next_back()?;
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = rem.terms.iter().next_back().unwrap();
            let mut qe = Vec::with_capacity(self.arity);
            for (a, b) in rlead_e.iter().zip(dlead_e.iter()) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = rlead_c.checked_div(dlead_c).ok()?;
            let qterm = MPoly::monomial(self.arity, qe, qc);
            rem = &rem - &(&qterm * divisor);
            quot = &quot + &qterm;
        }
        Some(quot)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Reinterprets the polynomial in a new variable set: old variable `i`
    /// becomes variable `var_map[i]`. The map must be injective.
    pub fn map_vars(&self, new_arity: usize, var_map: &[usize]) -> MPoly {
        assert_eq!(var_map.len(), self.arity);
        assert!(var_map.iter().all(|&v| v < new_arity));
        let mut out = MPoly::zero(new_arity, self.field);
        for (e, c) in &self.terms {
            let mut exps = vec![0; new_arity];
            for (i, &k) in e.iter().enumerate() {
                assert!(k == 0 || exps[var_map[i]] == 0, "non-injective variable map");
                exps[var_map[i]] += k;
            }
            out.insert_term(exps, c.clone());
        }
        out
    }

    /// Drops variables the polynomial does not use, keeping the rest in
    /// order. Panics if a dropped variable actually occurs.
    pub fn project_out(&self, drop: &[usize]) -> MPoly {
        for &v in drop {
            assert!(!self.uses_var(v), "cannot project out a used variable");
        }
        let keep: Vec<usize> = (0..self.arity).filter(|v| !drop.contains(v)).collect();
        let mut out = MPoly::zero(keep.len(), self.field);
        for (e, c) in &self.terms {
            let exps: Vec<u32> = keep.iter().map(|&v| e[v]).collect();
            out.insert_term(exps, c.clone());
        }
        out
    }

    /// Promotes every coefficient into a larger field (`Q -> Q(w)` etc.).
    pub fn promote(&self, target: FieldSpec) -> MPoly {
        let mut out = MPoly::zero(self.arity, target);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), c.promote(target).expect("promotable field"));
        }
        out
    }

    /// Renders with the given variable names.
    pub fn to_string_with(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.arity);
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut piece = String::new();
            piece.push_str(&c.to_string());
            for (name, &k) in vars.iter().zip(e.iter()) {
                match k {
                    0 => {}
                    1 => piece.push_str(&format!("*{name}")),
                    _ => piece.push_str(&format!("*{name}^{k}")),
                }
            }
            parts.push(piece);
        }
        parts.join(" + ")
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $impl:expr) => {
        impl std::ops::$trait for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                let f: fn(&MPoly, &MPoly) -> Result<MPoly, PolyError> = $impl;
                f(self, rhs).unwrap_or_else(|e| panic!("poly {}: {e}", stringify!($method)))
            }
        }
        impl std::ops::$trait for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| a.checked_add(b));
poly_binop!(Sub, sub, |a, b| a.checked_add(&b.neg()));
poly_binop!(Mul, mul, |a, b| a.checked_mul(b));

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.arity).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.to_string_with(&refs))
    }
}

/// Determinant of a square matrix of polynomials, by Laplace expansion with
/// memoization on column subsets. Fine for the sizes used here (at most 6).
pub fn det(mat: &[Vec<MPoly>]) -> MPoly {
    let n = mat.len();
    assert!(n > 0 && mat.iter().all(|r| r.len() == n), "square matrix required");
    let arity = mat[0][0].arity();
    let field = mat[0][0].field();
    let mut memo: BTreeMap<u32, MPoly> = BTreeMap::new();

    fn expand(
        mat: &[Vec<MPoly>],
        row: usize,
        cols: u32,
        arity: usize,
        field: FieldSpec,
        memo: &mut BTreeMap<u32, MPoly>,
    ) -> MPoly {
        let n = mat.len();
        if row == n {
            return MPoly::one(arity, field);
        }
        if let Some(hit) = memo.get(&cols) {
            return hit.clone();
        }
        let mut acc = MPoly::zero(arity, field);
        let mut sign = false;
        for col in 0..n {
            if cols & (1 << col) != 0 {
                continue;
            }
            let entry = &mat[row][col];
            if !entry.is_zero() {
                let minor = expand(mat, row + 1, cols | (1 << col), arity, field, memo);
                let term = entry * &minor;
                acc = if sign { &acc - &term } else { &acc + &term };
            }
            sign = !sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    expand(mat, 0, 0, arity, field, &mut memo)
}

/// Determinant of a 3x3 polynomial matrix (cofactor expansion).
pub fn det3(mat: &[[MPoly; 3]; 3]) -> MPoly {
    let rows: Vec<Vec<MPoly>> = mat.iter().map(|r| r.to_vec()).collect();
    det(&rows)
}

/// Sylvester resultant of `f` and `g` with respect to `var`.
///
/// The sign convention is the raw Sylvester determinant, with the first
/// `deg g` rows holding the coefficients of `f` in descending powers; it is
/// never normalized.
pub fn resultant_univariate(f: &MPoly, g: &MPoly, var: usize) -> Result<MPoly, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    if m == 0 || n == 0 {
        return Err(PolyError::NotUnivariate(var));
    }
    let fc = f.coeffs_in_var(var);
    let gc = g.coeffs_in_var(var);
    let size = m + n;
    let zero = MPoly::zero(f.arity(), f.field());
    let mut mat = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for (k, c) in fc.iter().enumerate() {
            // descending powers: column `row + (m - k)` holds coeff of var^k
            mat[row][row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in gc.iter().enumerate() {
            mat[n + row][row + n - k] = c.clone();
        }
    }
    Ok(det(&mat))
}

/// Monic gcd of two polynomials that are univariate in `var` with constant
/// coefficients elsewhere.
pub fn gcd_univariate(f: &MPoly, g: &MPoly, var: usize) -> Result<MPoly, PolyError> {
    let to_dense = |p: &MPoly| -> Result<Vec<Scalar>, PolyError> {
        for (e, _) in p.terms() {
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return Err(PolyError::NotUnivariate(var));
            }
        }
        let d = p.degree_in(var) as usize;
        let mut out = vec![p.field().zero(); d + 1];
        for (e, c) in p.terms() {
            out[e[var] as usize] = c.clone();
        }
        Ok(out)
    };
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut a = to_dense(f)?;
    let mut b = to_dense(g)?;
    let trim = |v: &mut Vec<Scalar>| {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0].is_zero()) {
        // a mod b
        let lead = b.last().unwrap().clone();
        while a.len() >= b.len() && !(a.len() == 1 && a[0].is_zero()) {
            let shift = a.len() - b.len();
            let q = a.last().unwrap().checked_div(&lead).expect("nonzero lead");
            for (i, bc) in b.iter().enumerate() {
                let t = &a[shift + i] - &(&q * bc);
                a[shift + i] = t;
            }
            trim(&mut a);
            if a.iter().all(|c| c.is_zero()) {
                a = vec![f.field().zero()];
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    trim(&mut a);
    // monic normalization
    let lead = a.last().unwrap().clone();
    let mut out = MPoly::zero(f.arity(), f.field());
    for (k, c) in a.iter().enumerate() {
        if !c.is_zero() {
            let mut e = vec![0; f.arity()];
            e[var] = k as u32;
            out.insert_term(e, c.checked_div(&lead).unwrap());
        }
    }
    Ok(out)
}

/// Degree and squarefreeness of a nonzero polynomial univariate in `var`.
/// Over an algebraically closed extension, squarefree of degree `d` means
/// exactly `d` distinct roots.
pub fn squarefree_root_count(f: &MPoly, var: usize) -> Result<(u32, bool), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let d = f.degree_in(var);
    if d == 0 {
        return Ok((0, true));
    }
    let g = gcd_univariate(f, &f.derivative(var), var)?;
    Ok((d, g.total_degree() == 0))
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parses the CLI-wide polynomial grammar: integer or rational coefficients,
/// named variables, `^` powers, optional `*`, parentheses, e.g.
/// `x^3+y^3+z^3-3*t*x*y*z`.
pub fn parse(input: &str, vars: &[&str], field: FieldSpec) -> Result<MPoly, PolyError> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
        vars,
        field,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.skip_ws();
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.skip_ws();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                // implicit multiplication by juxtaposition
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MPoly, PolyError> {
        let base = self.factor()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn factor(&mut self) -> Result<MPoly, PolyError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.skip_ws();
                Ok(self.factor()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    // only treat as rational when a digit follows
                    let save = self.pos;
                    self.pos += 1;
                    self.skip_ws();
                    if matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                        let d = self.integer()?;
                        if d == 0 {
                            return Err(self.err("zero denominator"));
                        }
                        return Ok(MPoly::constant(
                            self.vars.len(),
                            self.field.from_ratio(n, d),
                        ));
                    }
                    self.pos = save;
                }
                Ok(MPoly::constant(self.vars.len(), self.field.from_int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(ch) if ch.is_ascii_alphanumeric() || ch == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                // longest alphanumeric run may concatenate single-letter
                // variables ("xy" for x*y); try whole-name first, then split
                if let Some(idx) = self.vars.iter().position(|v| *v == name) {
                    return Ok(MPoly::var(self.vars.len(), self.field, idx));
                }
                let mut acc = MPoly::one(self.vars.len(), self.field);
                let mut last: Option<MPoly> = None;
                let mut chars = name.chars().peekable();
                while let Some(ch) = chars.next() {
                    let mut single = ch.to_string();
                    // allow a digit suffix to bind to the letter (a0, b12)
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        single.push(*d);
                        chars.next();
                    }
                    match self.vars.iter().position(|v| *v == single) {
                        Some(idx) => {
                            if let Some(prev) = last.replace(MPoly::var(
                                self.vars.len(),
                                self.field,
                                idx,
                            )) {
                                acc = &acc * &prev;
                            }
                        }
                        None => {
                            return Err(PolyError::Parse {
                                pos: start,
                                msg: format!("unknown variable `{single}` in `{name}`"),
                            })
                        }
                    }
                }
                let mut last = last.expect("run contains at least one variable");
                // an exponent after a letter run binds to the last variable
                // only, so `xy^2` is x*y^2
                self.skip_ws();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.integer()?;
                    let e: u32 =
                        e.try_into().map_err(|_| self.err("exponent out of range"))?;
                    last = last.pow(e);
                }
                Ok(&acc * &last)
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn integer(&mut self) -> Result<i64, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }
}
