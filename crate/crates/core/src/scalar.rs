//! Exact field arithmetic over `Q`, `F_p`, and their cube-root-of-unity
//! extensions `Q(w)` and `F_p(w)`, where `w^2 + w + 1 = 0`.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! crate. Rationals are arbitrary-precision and stored in lowest terms,
//! prime-field residues are kept reduced, and omega-extension elements are
//! pairs `u + v*w` over the base field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Errors raised by scalar arithmetic and field construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed-field operands: {0} vs {1}")]
    MixedFields(FieldSpec, FieldSpec),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field {0} has no primitive cube root of unity: {1}")]
    NoPrimitiveCubeRoot(FieldSpec, String),
    #[error("cannot promote a scalar from {0} into {1}")]
    BadPromotion(FieldSpec, FieldSpec),
    #[error("invalid field spec `{0}` (expected q, fp:<p>, qw, or fpw:<p>)")]
    BadFieldSpec(String),
}

/// Descriptor for one of the four supported exact fields.
///
/// The CLI flag grammar is `q`, `fp:<p>`, `qw`, `fpw:<p>` and round-trips
/// through `Display`/`FromStr`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The prime field `F_p`.
    Fp(u64),
    /// `Q(w)` with `w^2 + w + 1 = 0`.
    QOmega,
    /// `F_p(w)`. A formal quadratic extension for any prime `p != 3`;
    /// when `p = 1 mod 3` the polynomial `t^2+t+1` splits instead, but the
    /// pair representation stays a valid commutative ring and we restrict
    /// construction to primes where it is a field or to explicit requests.
    FpOmega(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "q"),
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
            FieldSpec::QOmega => write!(f, "qw"),
            FieldSpec::FpOmega(p) => write!(f, "fpw:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let bad = || ScalarError::BadFieldSpec(s.to_string());
        match s {
            "q" => Ok(FieldSpec::Q),
            "qw" => Ok(FieldSpec::QOmega),
            _ => {
                let (tag, p) = s.split_once(':').ok_or_else(bad)?;
                let p: u64 = p.parse().map_err(|_| bad())?;
                if !is_prime(p) {
                    return Err(ScalarError::NotPrime(p));
                }
                match tag {
                    "fp" => Ok(FieldSpec::Fp(p)),
                    "fpw" => Ok(FieldSpec::FpOmega(p)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Fp(p) => Scalar::Fp {
                val: reduce_mod(n, *p),
                p: *p,
            },
            FieldSpec::QOmega => Scalar::QOmega {
                re: BigRational::from_integer(BigInt::from(n)),
                im: BigRational::zero(),
            },
            FieldSpec::FpOmega(p) => Scalar::FpOmega {
                re: reduce_mod(n, *p),
                im: 0,
                p: *p,
            },
        }
    }

    /// Exact `n/d`. Panics if `d` is zero or not invertible mod `p`.
    pub fn from_ratio(&self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        let num = self.from_int(n);
        let den = self.from_int(d);
        num.checked_div(&den).expect("denominator not invertible")
    }

    pub fn has_omega(&self) -> bool {
        matches!(self, FieldSpec::QOmega | FieldSpec::FpOmega(_))
    }

    /// The structural generator `w` of an omega extension.
    pub fn omega(&self) -> Result<Scalar, ScalarError> {
        match self {
            FieldSpec::QOmega => Ok(Scalar::QOmega {
                re: BigRational::zero(),
                im: BigRational::one(),
            }),
            FieldSpec::FpOmega(p) => Ok(Scalar::FpOmega { re: 0, im: 1, p: *p }),
            _ => Err(ScalarError::NoPrimitiveCubeRoot(
                *self,
                "field has no adjoined omega".into(),
            )),
        }
    }

    /// A primitive cube root of unity: `z^3 = 1`, `z != 1`.
    ///
    /// Omega extensions return `w` itself; a prime field admits one exactly
    /// when `p = 1 mod 3`.
    pub fn primitive_cube_root(&self) -> Result<Scalar, ScalarError> {
        match self {
            FieldSpec::QOmega | FieldSpec::FpOmega(_) => self.omega(),
            FieldSpec::Q => Err(ScalarError::NoPrimitiveCubeRoot(
                *self,
                "x^3 - 1 has only the root 1 over the rationals".into(),
            )),
            FieldSpec::Fp(p) => {
                let p = *p;
                if p % 3 != 1 {
                    return Err(ScalarError::NoPrimitiveCubeRoot(
                        *self,
                        format!("{p} is not 1 mod 3, so the cube map is a bijection"),
                    ));
                }
                let e = (p - 1) / 3;
                for g in 2..p {
                    let z = pow_mod(g, e, p);
                    if z != 1 {
                        return Ok(Scalar::Fp { val: z, p });
                    }
                }
                unreachable!("a prime p = 1 mod 3 always has a non-cube")
            }
        }
    }
}

fn reduce_mod(n: i64, p: u64) -> u64 {
    let r = n.rem_euclid(p as i64);
    r as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn fp_add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn fp_sub(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_inv(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// An exact field element. Immutable value; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
    QOmega { re: BigRational, im: BigRational },
    FpOmega { re: u64, im: u64, p: u64 },
}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
            Scalar::QOmega { .. } => FieldSpec::QOmega,
            Scalar::FpOmega { p, .. } => FieldSpec::FpOmega(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
            Scalar::QOmega { re, im } => re.is_zero() && im.is_zero(),
            Scalar::FpOmega { re, im, .. } => *re == 0 && *im == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.spec().one()
    }

    fn same_field(&self, rhs: &Scalar) -> Result<(), ScalarError> {
        if self.spec() == rhs.spec() {
            Ok(())
        } else {
            Err(ScalarError::MixedFields(self.spec(), rhs.spec()))
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: fp_add(*a, *b, *p),
                p: *p,
            },
            (Scalar::QOmega { re: a, im: b }, Scalar::QOmega { re: c, im: d }) => {
                Scalar::QOmega { re: a + c, im: b + d }
            }
            (
                Scalar::FpOmega { re: a, im: b, p },
                Scalar::FpOmega { re: c, im: d, .. },
            ) => Scalar::FpOmega {
                re: fp_add(*a, *c, *p),
                im: fp_add(*b, *d, *p),
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
            Scalar::QOmega { re, im } => Scalar::QOmega { re: -re, im: -im },
            Scalar::FpOmega { re, im, p } => Scalar::FpOmega {
                re: fp_sub(0, *re, *p),
                im: fp_sub(0, *im, *p),
                p: *p,
            },
        }
    }

    /// Products in an omega extension use `w^2 = -1 - w`:
    /// `(a+bw)(c+dw) = (ac - bd) + (ad + bc - bd) w`.
    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: fp_mul(*a, *b, *p),
                p: *p,
            },
            (Scalar::QOmega { re: a, im: b }, Scalar::QOmega { re: c, im: d }) => {
                let bd = b * d;
                Scalar::QOmega {
                    re: a * c - &bd,
                    im: a * d + b * c - bd,
                }
            }
            (
                Scalar::FpOmega { re: a, im: b, p },
                Scalar::FpOmega { re: c, im: d, .. },
            ) => {
                let bd = fp_mul(*b, *d, *p);
                Scalar::FpOmega {
                    re: fp_sub(fp_mul(*a, *c, *p), bd, *p),
                    im: fp_sub(fp_add(fp_mul(*a, *d, *p), fp_mul(*b, *c, *p), *p), bd, *p),
                    p: *p,
                }
            }
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse. In an omega extension,
    /// `(a+bw)^(-1) = ((a-b) - bw) / (a^2 - ab + b^2)`.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            Scalar::Rat(a) => Ok(Scalar::Rat(a.recip())),
            Scalar::Fp { val, p } => fp_inv(*val, *p)
                .map(|v| Scalar::Fp { val: v, p: *p })
                .ok_or(ScalarError::DivisionByZero),
            Scalar::QOmega { re: a, im: b } => {
                let norm = a * a - a * b + b * b;
                if norm.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar::QOmega {
                    re: (a - b) / &norm,
                    im: -b / &norm,
                })
            }
            Scalar::FpOmega { re: a, im: b, p } => {
                let norm = fp_sub(
                    fp_add(fp_mul(*a, *a, *p), fp_mul(*b, *b, *p), *p),
                    fp_mul(*a, *b, *p),
                    *p,
                );
                let ninv = fp_inv(norm, *p).ok_or(ScalarError::DivisionByZero)?;
                Ok(Scalar::FpOmega {
                    re: fp_mul(fp_sub(*a, *b, *p), ninv, *p),
                    im: fp_mul(fp_sub(0, *b, *p), ninv, *p),
                    p: *p,
                })
            }
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = self.spec().one();
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same field");
        }
        acc
    }

    /// Embeds a scalar into a larger field over the same base: `Q -> Q(w)`
    /// and `F_p -> F_p(w)`. Identity on matching fields.
    pub fn promote(&self, target: FieldSpec) -> Result<Scalar, ScalarError> {
        if self.spec() == target {
            return Ok(self.clone());
        }
        match (self, target) {
            (Scalar::Rat(a), FieldSpec::QOmega) => Ok(Scalar::QOmega {
                re: a.clone(),
                im: BigRational::zero(),
            }),
            (Scalar::Fp { val, p }, FieldSpec::FpOmega(q)) if *p == q => Ok(Scalar::FpOmega {
                re: *val,
                im: 0,
                p: *p,
            }),
            _ => Err(ScalarError::BadPromotion(self.spec(), target)),
        }
    }

    /// Rational scalar from an integer pair, for test and table literals.
    pub fn rat(n: i64, d: i64) -> Scalar {
        FieldSpec::Q.from_ratio(n, d)
    }

    pub fn int(n: i64) -> Scalar {
        FieldSpec::Q.from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn omega_part(
            f: &mut fmt::Formatter<'_>,
            re: &dyn fmt::Display,
            im: &dyn fmt::Display,
        ) -> fmt::Result {
            write!(f, "({re}+{im}w)")
        }
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
            Scalar::QOmega { re, im } => {
                if im.is_zero() {
                    write!(f, "{}", Scalar::Rat(re.clone()))
                } else {
                    omega_part(f, re, im)
                }
            }
            Scalar::FpOmega { re, im, .. } => {
                if *im == 0 {
                    write!(f, "{re}")
                } else {
                    omega_part(f, re, im)
                }
            }
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($method)))
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);
scalar_binop!(Div, div, checked_div);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

/// Exact rational stored inside a `Scalar`, used when lowering to integers
/// for fraction-free elimination.
pub fn as_rational(s: &Scalar) -> Option<&BigRational> {
    match s {
        Scalar::Rat(r) => Some(r),
        _ => None,
    }
}

/// Embeds a rational scalar into any supported field: identity on `Q`,
/// reduction mod `p` into `F_p` (or its omega extension), promotion into
/// `Q(w)`. `None` when a denominator vanishes mod `p`.
pub fn embed_rational(s: &Scalar, target: FieldSpec) -> Option<Scalar> {
    match target {
        FieldSpec::Q => as_rational(s).map(|_| s.clone()),
        FieldSpec::QOmega => s.promote(FieldSpec::QOmega).ok(),
        FieldSpec::Fp(p) => rational_mod_p(s, p),
        FieldSpec::FpOmega(p) => rational_mod_p(s, p)?.promote(target).ok(),
    }
}

/// Reduction of a rational scalar mod `p`; `None` when the denominator
/// vanishes mod `p`.
pub fn rational_mod_p(s: &Scalar, p: u64) -> Option<Scalar> {
    let r = as_rational(s)?;
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor_big(&pb);
    let den = r.denom().mod_floor_big(&pb);
    let d_inv = fp_inv(den, p)?;
    Some(Scalar::Fp {
        val: fp_mul(num, d_inv, p),
        p,
    })
}

trait ModFloorBig {
    fn mod_floor_big(&self, p: &BigInt) -> u64;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, p: &BigInt) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(p);
        let (_, digits) = m.to_u64_digits();
        if digits.is_empty() {
            0
        } else {
            debug_assert!(m.is_positive() || m.is_zero());
            digits[0]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum_in_lowest_terms() {
        let a = Scalar::rat(1, 3);
        let b = Scalar::rat(1, 6);
        assert_eq!(&a + &b, Scalar::rat(1, 2));
    }

    #[test]
    fn f7_product_wraps() {
        let f = FieldSpec::Fp(7);
        assert_eq!(f.from_int(3) * f.from_int(5), f.from_int(1));
    }

    #[test]
    fn omega_square_is_minus_one_minus_omega() {
        let f = FieldSpec::QOmega;
        let w = f.omega().unwrap();
        let expect = f.from_int(-1) + f.from_int(-1) * w.clone();
        assert_eq!(&w * &w, expect);
    }

    #[test]
    fn omega_relation_holds_in_every_omega_field() {
        for spec in [FieldSpec::QOmega, FieldSpec::FpOmega(7), FieldSpec::FpOmega(13)] {
            let w = spec.omega().unwrap();
            let sum = spec.one() + w.clone() + w.pow(2);
            assert!(sum.is_zero(), "1 + w + w^2 != 0 in {spec}");
        }
    }

    #[test]
    fn cube_root_in_f7() {
        let z = FieldSpec::Fp(7).primitive_cube_root().unwrap();
        // exhaustive oracle: the cube roots of 1 in F_7 besides 1 are 2 and 4
        let cubes: Vec<u64> = (2..7).filter(|z| pow_mod(*z, 3, 7) == 1).collect();
        assert_eq!(cubes, vec![2, 4]);
        assert!(matches!(z, Scalar::Fp { val, .. } if val == 2 || val == 4));
        assert!(z.pow(3).is_one());
    }

    #[test]
    fn cube_root_in_f5_fails() {
        // exhaustive oracle: no z in F_5 \ {1} with z^3 = 1
        assert!((2..5).all(|z| pow_mod(z, 3, 5) != 1));
        let err = FieldSpec::Fp(5).primitive_cube_root().unwrap_err();
        assert!(matches!(err, ScalarError::NoPrimitiveCubeRoot(..)));
    }

    #[test]
    fn qomega_cube_root_is_omega() {
        let z = FieldSpec::QOmega.primitive_cube_root().unwrap();
        assert_eq!(z, FieldSpec::QOmega.omega().unwrap());
        assert!(z.pow(3).is_one());
        assert!(!z.is_one());
    }

    #[test]
    fn mixed_fields_error() {
        let a = Scalar::rat(1, 2);
        let b = FieldSpec::Fp(7).from_int(1);
        assert!(matches!(
            a.checked_add(&b),
            Err(ScalarError::MixedFields(FieldSpec::Q, FieldSpec::Fp(7)))
        ));
    }

    #[test]
    fn division_by_zero_error() {
        let a = Scalar::int(1);
        assert_eq!(a.checked_div(&Scalar::int(0)), Err(ScalarError::DivisionByZero));
        assert_eq!(FieldSpec::QOmega.zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn field_spec_round_trip() {
        for s in ["q", "fp:7", "qw", "fpw:13"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("fp:6".parse::<FieldSpec>().is_err());
        assert!("zz".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn rational_mod_p_reduces() {
        let half = Scalar::rat(1, 2);
        let r = rational_mod_p(&half, 7).unwrap();
        assert_eq!(r, FieldSpec::Fp(7).from_int(4)); // 2*4 = 8 = 1 mod 7
    }
}
