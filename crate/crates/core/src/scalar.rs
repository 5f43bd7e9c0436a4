//! Exact-or-approximate scalars.
//!
//! A [`Scalar`] is either an arbitrary-precision rational or a complex number
//! held as two `f64`. Arithmetic between two exact values stays exact; any
//! operation touching an approximate value produces an approximate result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default tolerance for comparisons involving approximate scalars.
pub const APPROX_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Approx(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(BigRational::one())
    }

    pub fn int(v: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn real(v: f64) -> Self {
        Scalar::Approx(Complex64::new(v, 0.0))
    }

    pub fn complex(re: f64, im: f64) -> Self {
        Scalar::Approx(Complex64::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Approx(_) => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(r) => Complex64::new(rational_to_f64(r), 0.0),
            Scalar::Approx(c) => *c,
        }
    }

    /// Forces the approximate representation.
    pub fn to_approx(&self) -> Scalar {
        Scalar::Approx(self.to_complex())
    }

    pub fn re(&self) -> f64 {
        self.to_complex().re
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.clone()),
            Scalar::Approx(c) => Scalar::Approx(c.conj()),
        }
    }

    /// Real part, keeping exactness.
    pub fn real_part(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.clone()),
            Scalar::Approx(c) => Scalar::real(c.re),
        }
    }

    /// Imaginary part, keeping exactness (exact scalars are real).
    pub fn imag_part(&self) -> Scalar {
        match self {
            Scalar::Exact(_) => Scalar::zero(),
            Scalar::Approx(c) => Scalar::real(c.im),
        }
    }

    /// Exact zero test for exact values, `|z| <= tol` otherwise.
    pub fn is_zero_tol(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Approx(c) => c.norm() <= tol,
        }
    }

    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        (self.clone() - other.clone()).is_zero_tol(tol)
    }

    /// Sign of the real part; for approximate values anything within `tol` of
    /// zero counts as zero.
    pub fn sign_tol(&self, tol: f64) -> Ordering {
        match self {
            Scalar::Exact(r) => r.cmp(&BigRational::zero()),
            Scalar::Approx(c) => {
                if c.re > tol {
                    Ordering::Greater
                } else if c.re < -tol {
                    Ordering::Less
                } else {
                    Ordering::Equal
                }
            }
        }
    }

    /// True when the imaginary part is (within `tol`) zero.
    pub fn is_real_tol(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(_) => true,
            Scalar::Approx(c) => c.im.abs() <= tol,
        }
    }

    pub fn abs_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational_to_f64(&r.abs()),
            Scalar::Approx(c) => c.norm(),
        }
    }

    /// Canonical text: `p/q` (or `p`) for exact values, a decimal or
    /// `re+imi` pair for approximate ones.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
        items
            .into_iter()
            .fold(Scalar::zero(), |acc, s| acc + s.clone())
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator overflow f64 individually
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parses `p`, `-p`, `p/q` with decimal integers. No decimal points,
/// exponents, or locale-specific separators.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::invalid(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) || den.starts_with('-') {
        return Err(bad());
    }
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Scalar::Exact)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Approx(c) if c.im == 0.0 => write!(f, "{}", c.re),
            Scalar::Approx(c) => write!(f, "{}{:+}i", c.re, c.im),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Exact(r)
    }
}

impl From<Complex64> for Scalar {
    fn from(c: Complex64) -> Self {
        Scalar::Approx(c)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (a, b) => Scalar::Approx(a.to_complex() $op b.to_complex()),
                }
            }
        }

        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (a, b) => Scalar::Approx(a.to_complex() $op b.to_complex()),
                }
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Approx(c) => Scalar::Approx(-c),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_stays_exact() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::ratio(2, 3);
        assert_eq!(a.clone() + b, Scalar::one());
        assert_eq!(&a * &Scalar::int(3), Scalar::one());
    }

    #[test]
    fn mixing_promotes_to_approx() {
        let s = Scalar::ratio(1, 2) + Scalar::real(0.25);
        assert!(!s.is_exact());
        assert!((s.re() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        for bad in ["", "1/0", "1.5", "1e3", "3/-4", "1,000", "+-1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips_exact() {
        let s = Scalar::ratio(-22, 7);
        assert_eq!(s.to_text(), "-22/7");
        assert_eq!(s.to_text().parse::<Scalar>().unwrap(), s);
    }
}
