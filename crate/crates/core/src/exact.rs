//! Exact side-of-line predicate over doubles and over rationals.
//!
//! Only used to adjudicate intentionally degenerate fixtures; the solvers
//! themselves run on the tolerance predicates of [`crate::geom`].

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::{Point, Sign};

/// `value = mant * 2^exp` with an integer mantissa.
fn decompose(v: f64) -> (BigInt, i32) {
    if v == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = v.to_bits();
    let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, exp) = if exp_bits == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp_bits - 1075)
    };
    (BigInt::from(sign) * BigInt::from(mant), exp)
}

fn to_common(vals: &[f64]) -> Vec<BigInt> {
    let parts: Vec<(BigInt, i32)> = vals.iter().map(|&v| decompose(v)).collect();
    let e0 = parts
        .iter()
        .filter(|(m, _)| !m.is_zero())
        .map(|(_, e)| *e)
        .min()
        .unwrap_or(0);
    parts
        .into_iter()
        .map(|(m, e)| m << ((e - e0) as usize))
        .collect()
}

fn sign_of(v: &BigInt) -> Sign {
    match v.sign() {
        BigSign::Minus => Sign::Negative,
        BigSign::NoSign => Sign::Zero,
        BigSign::Plus => Sign::Positive,
    }
}

/// Exact sign of `orient(a, b, p)`: positive when `p` is left of the
/// directed line `a -> b`. Inputs must be finite.
pub fn side_of_exact(a: Point, b: Point, p: Point) -> Sign {
    let v = to_common(&[a.x, a.y, b.x, b.y, p.x, p.y]);
    let (ax, ay, bx, by, px, py) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]);
    let det = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    sign_of(&det)
}

/// A rational number `num / den` with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational {
    pub num: BigInt,
    pub den: BigInt,
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter("zero denominator"));
        }
        if den.sign() == BigSign::Minus {
            Ok(Rational {
                num: -num,
                den: -den,
            })
        } else {
            Ok(Rational { num, den })
        }
    }

    pub fn from_int(v: i64) -> Self {
        Rational {
            num: BigInt::from(v),
            den: BigInt::one(),
        }
    }

    /// Nearest double, accurate to one rounding of the leading 61 bits.
    pub fn to_f64(&self) -> f64 {
        let n = self.num.bits() as i64;
        let d = self.den.bits() as i64;
        let shift = 60 - (n - d);
        let scaled: BigInt = if shift >= 0 {
            (&self.num << shift as usize) / &self.den
        } else {
            &self.num / (&self.den << (-shift) as usize)
        };
        let (_, digits) = scaled.to_u64_digits();
        let mag = digits.first().copied().unwrap_or(0) as f64
            + digits.get(1).copied().unwrap_or(0) as f64 * 18446744073709551616.0;
        let v = libm::scalbn(mag, -(shift as i32));
        if scaled.sign() == BigSign::Minus {
            -v
        } else {
            v
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `p/q` and decimal `a.b` forms.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = Error::InvalidParameter("malformed rational");
        if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad.clone())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad)?;
            return Rational::new(n, d);
        }
        if let Some((ip, fp)) = s.split_once('.') {
            let neg = ip.trim_start().starts_with('-');
            let mut digits = String::from(ip.trim_start_matches(['-', '+']));
            digits.push_str(fp);
            let n =
                BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad)?;
            let den = num_traits::pow(BigInt::from(10), fp.len());
            return Rational::new(if neg { -n } else { n }, den);
        }
        let n = BigInt::from_str(s).map_err(|_| bad)?;
        Rational::new(n, BigInt::one())
    }
}

/// A point with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn to_point(&self) -> Point {
        Point::new(self.x.to_f64(), self.y.to_f64())
    }
}

/// Exact orientation over rational points.
pub fn side_of_rational(a: &RationalPoint, b: &RationalPoint, p: &RationalPoint) -> Sign {
    // Bring every coordinate over the product of all denominators.
    let dens = [&a.x.den, &a.y.den, &b.x.den, &b.y.den, &p.x.den, &p.y.den];
    let mut l = BigInt::one();
    for d in dens {
        l *= d;
    }
    let scale = |r: &Rational| &r.num * (&l / &r.den);
    let (ax, ay, bx, by, px, py) = (
        scale(&a.x),
        scale(&a.y),
        scale(&b.x),
        scale(&b.y),
        scale(&p.x),
        scale(&p.y),
    );
    let det = (&bx - &ax) * (&py - &ay) - (&by - &ay) * (&px - &ax);
    sign_of(&det)
}
