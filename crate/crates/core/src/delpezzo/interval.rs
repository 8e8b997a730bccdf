//! Fixed-point interval enclosures of [`RadicalNumber`] values.
//!
//! A value is enclosed in `[lo, hi] / 2^bits` with big-integer endpoints.
//! Used only to cross-check the exact sign routine.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RadicalNumber;

/// Closed interval `[lo, hi] * 2^-bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u32,
}

impl Interval {
    /// `Some(sign)` when the interval excludes zero or is the point zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    fn add(&self, o: &Self) -> Self {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, bits: self.bits }
    }
}

fn scale(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Enclosure of the rational `r`.
pub fn rational(r: &BigRational, bits: u32) -> Interval {
    let x = r.numer() * scale(bits);
    let (lo, hi) = (x.div_floor(r.denom()), x.div_ceil(r.denom()));
    Interval { lo, hi, bits }
}

/// Enclosure of `b * sqrt(q)`.
pub fn scaled_sqrt(b: &BigRational, q: &BigRational, bits: u32) -> Interval {
    // sqrt(q) * 2^bits lies in [isqrt(floor(q 4^bits)), isqrt(ceil(q 4^bits)) + 1]
    let s2 = scale(2 * bits);
    let x = q.numer() * &s2;
    let lo_sq = x.div_floor(q.denom()).sqrt();
    let mut hi_sq = x.div_ceil(q.denom()).sqrt();
    if &hi_sq * &hi_sq != x.div_ceil(q.denom()) {
        hi_sq += 1;
    }
    let (lo_b, hi_b) = if b.is_negative() { (&hi_sq, &lo_sq) } else { (&lo_sq, &hi_sq) };
    let lo = (b.numer() * lo_b).div_floor(b.denom());
    let hi = (b.numer() * hi_b).div_ceil(b.denom());
    Interval { lo, hi, bits }
}

/// Enclosure of `a + b sqrt(q) + c sqrt(q')`.
pub fn enclose(x: &RadicalNumber, bits: u32) -> Interval {
    rational(x.a(), bits).add(&scaled_sqrt(x.b(), x.q(), bits)).add(&scaled_sqrt(x.c(), x.q_prime(), bits))
}

/// Whether the enclosure is consistent with the exact sign.
pub fn agrees(x: &RadicalNumber, bits: u32) -> bool {
    let exact = x.signum();
    let iv = enclose(x, bits);
    match iv.sign() {
        Some(s) => s == exact,
        None => exact == Ordering::Equal || iv.contains_zero(),
    }
}
