//! Exact complex scalars with rational real and imaginary parts.
//!
//! All algebraic identities in this crate (reduction rules, conditional
//! expectations, adjoints, the constant-correction term of the Toeplitz
//! rewrite) are checked with *equality*, not with a floating-point
//! tolerance.  That only works if coefficient arithmetic is exact, so the
//! algebra layer computes over `CRat`: a complex number whose real and
//! imaginary parts are arbitrary-precision rationals.  Conversion to
//! `Complex64` happens once, at the boundary to the sparse-matrix layer.
//!
//! Rationals are kept in lowest terms by `num_rational::BigRational`
//! itself; `CRat` adds the complex structure, conjugation, and the string
//! round-trip used by the JSON element format (`"3/4"`, `"-2"`, ...).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// An exact complex scalar `re + im·i` with rational components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CRat {
    /// Real part, in lowest terms.
    pub re: BigRational,
    /// Imaginary part, in lowest terms.
    pub im: BigRational,
}

impl CRat {
    /// Builds a scalar from already-constructed rational parts.
    pub fn new(re: BigRational, im: BigRational) -> Self {
        CRat { re, im }
    }

    /// The additive unit `0`.
    pub fn zero() -> Self {
        CRat::new(BigRational::zero(), BigRational::zero())
    }

    /// The multiplicative unit `1`.
    pub fn one() -> Self {
        CRat::int(1)
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        CRat::new(
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(1)),
        )
    }

    /// The real integer `n`.
    pub fn int(n: i64) -> Self {
        CRat::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    /// The real rational `p/q`.  `q` must be nonzero.
    pub fn rat(p: i64, q: i64) -> Self {
        assert!(q != 0, "rational with zero denominator");
        CRat::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// The complex rational `p/q + r/s·i`.  Denominators must be nonzero.
    pub fn rat2(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "rational with zero denominator");
        CRat::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::new(BigInt::from(r), BigInt::from(s)),
        )
    }

    /// True iff both components are zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate `re − im·i`.
    pub fn conj(&self) -> Self {
        CRat::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re² + im²` as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Nearest-double approximation, used at the matrix boundary.
    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// Parses a scalar from the string pair used in the JSON element
    /// format: each component is a rational literal such as `"5"`,
    /// `"-3/4"`, or `"0"`.
    pub fn from_parts_str(re: &str, im: &str) -> Result<Self> {
        Ok(CRat::new(parse_rational(re)?, parse_rational(im)?))
    }

    /// Formats the two components back into rational literals.
    pub fn to_parts_string(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }
}

/// Parses a rational literal: an optional sign, an integer, and an
/// optional `/denominator` suffix.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    BigRational::from_str(trimmed)
        .map_err(|e| Error::Parse(format!("bad rational `{trimmed}`: {e}")))
}

/// Parses a complex rational literal in the same shape [`CRat`]'s
/// `Display` produces: `3`, `-1/2`, `5i`, `3/4+1/2i`, `2-3i`, `i`, `-i`.
/// A trailing `i` marks the imaginary part.
pub fn parse_complex(s: &str) -> Result<CRat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return CRat::from_parts_str(s, "0");
    };
    // the split between the parts is the last sign that is not leading
    let split = body
        .bytes()
        .enumerate()
        .skip(1)
        .rev()
        .find(|&(_, b)| b == b'+' || b == b'-')
        .map(|(p, _)| p);
    match split {
        Some(p) => CRat::from_parts_str(&body[..p], &body[p..]),
        None => {
            let im = match body {
                "" => "1",
                "-" => "-1",
                other => other,
            };
            CRat::from_parts_str("0", im)
        }
    }
}

/// Converts a rational to the nearest `f64`.
///
/// `BigRational::to_f64` returns `None` only for magnitudes outside the
/// double range, which the desk-scale inputs in this crate never reach;
/// we saturate to infinity in that case rather than panic.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

impl Default for CRat {
    fn default() -> Self {
        CRat::zero()
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for CRat {
    type Output = CRat;
    fn add(self, rhs: CRat) -> CRat {
        CRat::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a CRat> for &CRat {
    type Output = CRat;
    fn add(self, rhs: &'a CRat) -> CRat {
        CRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign for CRat {
    fn add_assign(&mut self, rhs: CRat) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for CRat {
    type Output = CRat;
    fn sub(self, rhs: CRat) -> CRat {
        CRat::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Sub<&'a CRat> for &CRat {
    type Output = CRat;
    fn sub(self, rhs: &'a CRat) -> CRat {
        CRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl SubAssign for CRat {
    fn sub_assign(&mut self, rhs: CRat) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Mul for CRat {
    type Output = CRat;
    fn mul(self, rhs: CRat) -> CRat {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a CRat> for &CRat {
    type Output = CRat;
    fn mul(self, rhs: &'a CRat) -> CRat {
        // (a + bi)(c + di) = (ac − bd) + (ad + bc)i
        CRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign for CRat {
    fn mul_assign(&mut self, rhs: CRat) {
        *self = (&*self).mul(&rhs);
    }
}

impl Neg for CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat::new(-self.re, -self.im)
    }
}
