use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use super::field::Rational;

/// Outcome of a certified sign decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn product(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Negative => write!(f, "negative"),
            Sign::Zero => write!(f, "zero"),
            Sign::Positive => write!(f, "positive"),
        }
    }
}

pub fn rational_sign(x: &Rational) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Rational interval `[lo, hi]` enclosing a real value. Endpoints are exact;
/// only square roots introduce slack, controlled by the bit budget.
#[derive(Debug, Clone)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(x: Rational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p < &lo {
                lo = p.clone();
            }
            if p > &hi {
                hi = p.clone();
            }
        }
        Interval { lo, hi }
    }

    /// Sign if the interval excludes zero, `None` otherwise.
    pub fn definite_sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

/// Encloses `sqrt(x)` for `x >= 0` in a rational interval of width `<= 2^-bits`
/// times the denominator scale: with `x = p/q`, the enclosure is
/// `[n, n+1] / (q * 2^bits)` where `n = isqrt(p * q * 4^bits)`.
pub fn sqrt_interval(x: &Rational, bits: u32) -> Interval {
    assert!(!x.is_negative(), "sqrt_interval of a negative rational");
    if x.is_zero() {
        return Interval::point(Rational::zero());
    }
    let p = x.numer();
    let q = x.denom();
    let shifted: BigInt = p * q << (2 * bits as usize);
    let n = shifted.sqrt();
    let denom: BigInt = q << (bits as usize);
    Interval {
        lo: Rational::new(n.clone(), denom.clone()),
        hi: Rational::new(n + BigInt::one(), denom),
    }
}

/// Encloses `sqrt` over an interval around a nonnegative value; a slightly
/// negative lower endpoint (interval slack) is clamped to zero.
pub fn sqrt_of_interval(x: &Interval, bits: u32) -> Interval {
    let lo = if x.lo.is_negative() {
        Rational::zero()
    } else {
        sqrt_interval(&x.lo, bits).lo
    };
    let hi = sqrt_interval(&x.hi, bits).hi;
    Interval { lo, hi }
}

/// Precision schedule for interval refinement: 64 -> 256 -> 1024 bits, then
/// keep quadrupling. Nonzero algebraic numbers always separate eventually.
pub fn precision_schedule() -> impl Iterator<Item = u32> {
    std::iter::successors(Some(64u32), |b| Some(b.saturating_mul(4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn sqrt_interval_encloses() {
        let two = Rational::from_i64(2).unwrap();
        let iv = sqrt_interval(&two, 64);
        let sqrt2 = 1.4142135623730951_f64;
        assert!(iv.lo.to_f64() <= sqrt2 && sqrt2 <= iv.hi.to_f64());
        let width = &iv.hi - &iv.lo;
        assert!(width < Rational::from_f64(1e-18).unwrap());
    }

    trait ToF64 {
        fn to_f64(&self) -> f64;
    }
    impl ToF64 for Rational {
        fn to_f64(&self) -> f64 {
            use num_traits::ToPrimitive;
            self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
        }
    }
}
