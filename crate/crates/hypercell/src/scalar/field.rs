use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sign::{precision_schedule, rational_sign, sqrt_interval, Interval, Sign};
use super::{Scalar, SignedScalar};
use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p/q`, or just `p` for integers.
pub fn rational_to_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` with optional sign.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

/// Element `c1 + c2*sqrt2 + c5*sqrt5 + c10*sqrt10` of `F = Q(sqrt2, sqrt5)`.
///
/// The basis `{1, sqrt2, sqrt5, sqrt10}` is Q-linearly independent, so an
/// element is zero exactly when all four coefficients are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub c1: Rational,
    pub c2: Rational,
    pub c5: Rational,
    pub c10: Rational,
}

impl FieldElem {
    pub fn new(c1: Rational, c2: Rational, c5: Rational, c10: Rational) -> FieldElem {
        FieldElem { c1, c2, c5, c10 }
    }

    pub fn zero() -> FieldElem {
        FieldElem::from_rational(Rational::zero())
    }

    pub fn one() -> FieldElem {
        FieldElem::from_int(1)
    }

    pub fn from_int(n: i64) -> FieldElem {
        FieldElem::from_rational(rat_i64(n))
    }

    /// `n/d` as a field element.
    pub fn from_ratio(n: i64, d: i64) -> FieldElem {
        FieldElem::from_rational(rat(n, d))
    }

    pub fn from_rational(c1: Rational) -> FieldElem {
        FieldElem { c1, c2: Rational::zero(), c5: Rational::zero(), c10: Rational::zero() }
    }

    pub fn sqrt2() -> FieldElem {
        FieldElem {
            c1: Rational::zero(),
            c2: Rational::one(),
            c5: Rational::zero(),
            c10: Rational::zero(),
        }
    }

    pub fn sqrt5() -> FieldElem {
        FieldElem {
            c1: Rational::zero(),
            c2: Rational::zero(),
            c5: Rational::one(),
            c10: Rational::zero(),
        }
    }

    pub fn sqrt10() -> FieldElem {
        FieldElem {
            c1: Rational::zero(),
            c2: Rational::zero(),
            c5: Rational::zero(),
            c10: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero() && self.c5.is_zero() && self.c10.is_zero()
    }

    /// The rational part if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c2.is_zero() && self.c5.is_zero() && self.c10.is_zero() {
            Some(&self.c1)
        } else {
            None
        }
    }

    /// True when the element is a rational integer.
    pub fn is_integer(&self) -> bool {
        matches!(self.as_rational(), Some(r) if r.denom().is_one())
    }

    pub fn add(&self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            c1: &self.c1 + &rhs.c1,
            c2: &self.c2 + &rhs.c2,
            c5: &self.c5 + &rhs.c5,
            c10: &self.c10 + &rhs.c10,
        }
    }

    pub fn sub(&self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            c1: &self.c1 - &rhs.c1,
            c2: &self.c2 - &rhs.c2,
            c5: &self.c5 - &rhs.c5,
            c10: &self.c10 - &rhs.c10,
        }
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem { c1: -&self.c1, c2: -&self.c2, c5: -&self.c5, c10: -&self.c10 }
    }

    /// Multiplication via the closure rules
    /// `sqrt2*sqrt5 = sqrt10`, `sqrt2*sqrt10 = 2*sqrt5`, `sqrt5*sqrt10 = 5*sqrt2`.
    pub fn mul(&self, rhs: &FieldElem) -> FieldElem {
        let a = self;
        let b = rhs;
        let two = rat_i64(2);
        let five = rat_i64(5);
        let ten = rat_i64(10);
        FieldElem {
            c1: &a.c1 * &b.c1
                + &two * (&a.c2 * &b.c2)
                + &five * (&a.c5 * &b.c5)
                + &ten * (&a.c10 * &b.c10),
            c2: &a.c1 * &b.c2
                + &a.c2 * &b.c1
                + &five * (&a.c5 * &b.c10 + &a.c10 * &b.c5),
            c5: &a.c1 * &b.c5
                + &a.c5 * &b.c1
                + &two * (&a.c2 * &b.c10 + &a.c10 * &b.c2),
            c10: &a.c1 * &b.c10 + &a.c10 * &b.c1 + &a.c2 * &b.c5 + &a.c5 * &b.c2,
        }
    }

    pub fn scale(&self, c: &Rational) -> FieldElem {
        FieldElem { c1: &self.c1 * c, c2: &self.c2 * c, c5: &self.c5 * c, c10: &self.c10 * c }
    }

    /// Galois conjugate flipping the sign of sqrt2 (hence of sqrt10).
    pub fn conj2(&self) -> FieldElem {
        FieldElem { c1: self.c1.clone(), c2: -&self.c2, c5: self.c5.clone(), c10: -&self.c10 }
    }

    /// Galois conjugate flipping the sign of sqrt5 (hence of sqrt10).
    pub fn conj5(&self) -> FieldElem {
        FieldElem { c1: self.c1.clone(), c2: self.c2.clone(), c5: -&self.c5, c10: -&self.c10 }
    }

    /// Norm-form inverse: multiply by the three nontrivial Galois conjugates,
    /// which brings the denominator down to Q.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let product_of_conjugates = self.conj2().mul(&self.conj5()).mul(&self.conj2().conj5());
        let norm = self.mul(&product_of_conjugates);
        let norm_rat = norm
            .as_rational()
            .ok_or_else(|| Error::Internal("field norm not rational".into()))?;
        Ok(product_of_conjugates.scale(&norm_rat.recip()))
    }

    pub fn div(&self, rhs: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn square(&self) -> FieldElem {
        self.mul(self)
    }

    pub fn to_f64(&self) -> f64 {
        let r = |x: &Rational| x.numer().to_f64().unwrap() / x.denom().to_f64().unwrap();
        r(&self.c1)
            + r(&self.c2) * std::f64::consts::SQRT_2
            + r(&self.c5) * 5.0_f64.sqrt()
            + r(&self.c10) * 10.0_f64.sqrt()
    }

    /// Rational interval enclosing the real value, with the square roots of
    /// 2, 5, 10 enclosed to `bits` binary digits.
    pub fn interval(&self, bits: u32) -> Interval {
        let mut acc = Interval::point(self.c1.clone());
        for (c, base) in [(&self.c2, 2), (&self.c5, 5), (&self.c10, 10)] {
            if !c.is_zero() {
                acc = acc.add(&sqrt_interval(&rat_i64(base), bits).scale(c));
            }
        }
        acc
    }

    /// Certified sign: exact zero test on the coefficients, then interval
    /// refinement over the precision schedule. Terminates because a nonzero
    /// element of F has nonzero real value.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if let Some(r) = self.as_rational() {
            return rational_sign(r);
        }
        for bits in precision_schedule() {
            if let Some(s) = self.interval(bits).definite_sign() {
                return s;
            }
        }
        unreachable!("precision schedule is unbounded")
    }

    pub fn is_positive(&self) -> bool {
        self.sign().is_positive()
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            [&self.c1, &self.c2, &self.c5, &self.c10]
                .iter()
                .map(|c| serde_json::Value::String(rational_to_string(c)))
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<FieldElem> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::Parse("field element must be a 4-array".into()))?;
        let mut coords = Vec::with_capacity(4);
        for item in arr {
            let s = item
                .as_str()
                .ok_or_else(|| Error::Parse("field coefficient must be a string".into()))?;
            coords.push(rational_from_str(s)?);
        }
        let mut it = coords.into_iter();
        Ok(FieldElem::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }
}

impl std::fmt::Display for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, sym) in [
            (&self.c1, ""),
            (&self.c2, "sqrt2"),
            (&self.c5, "sqrt5"),
            (&self.c10, "sqrt10"),
        ] {
            if c.is_zero() {
                continue;
            }
            let mag = rational_to_string(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if sym.is_empty() {
                write!(f, "{mag}")?;
            } else if c.abs().is_one() {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{mag}*{sym}")?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

impl Scalar for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn from_field(x: &FieldElem) -> Self {
        x.clone()
    }
    fn add(&self, rhs: &Self) -> Self {
        FieldElem::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        FieldElem::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        FieldElem::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        FieldElem::neg(self)
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

impl SignedScalar for FieldElem {
    fn sign(&self) -> Sign {
        FieldElem::sign(self)
    }
    fn inv(&self) -> Result<Self> {
        FieldElem::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_multiplication_rule() {
        // sqrt2 * sqrt5 = sqrt10
        assert_eq!(FieldElem::sqrt2().mul(&FieldElem::sqrt5()), FieldElem::sqrt10());
        // sqrt2 * sqrt10 = 2*sqrt5
        assert_eq!(
            FieldElem::sqrt2().mul(&FieldElem::sqrt10()),
            FieldElem::sqrt5().scale(&rat_i64(2))
        );
        // sqrt5 * sqrt10 = 5*sqrt2
        assert_eq!(
            FieldElem::sqrt5().mul(&FieldElem::sqrt10()),
            FieldElem::sqrt2().scale(&rat_i64(5))
        );
    }

    #[test]
    fn conjugate_product() {
        // (1 + sqrt2)(1 - sqrt2) = -1
        let a = FieldElem::one().add(&FieldElem::sqrt2());
        let b = FieldElem::one().sub(&FieldElem::sqrt2());
        assert_eq!(a.mul(&b), FieldElem::from_int(-1));
    }

    #[test]
    fn cos_sq_pi_over_5() {
        // (3 + sqrt5)/8 agrees numerically with cos^2(pi/5)
        let v = FieldElem::from_int(3)
            .add(&FieldElem::sqrt5())
            .scale(&rat(1, 8));
        let expected = (std::f64::consts::PI / 5.0).cos().powi(2);
        assert!((v.to_f64() - expected).abs() < 1e-12);
    }

    #[test]
    fn division_round_trips() {
        let x = FieldElem::new(rat(3, 7), rat(-1, 2), rat_i64(4), rat(5, 3));
        let y = FieldElem::new(rat_i64(1), rat_i64(1), rat(-2, 5), rat_i64(0));
        let q = x.div(&y).unwrap();
        assert_eq!(q.mul(&y), x);
        assert!(FieldElem::zero().inv().is_err());
    }

    #[test]
    fn certified_signs() {
        assert_eq!(FieldElem::zero().sign(), Sign::Zero);
        // 3 - 2*sqrt2 > 0, decided at the 64-bit rung
        let x = FieldElem::from_int(3).sub(&FieldElem::sqrt2().scale(&rat_i64(2)));
        assert_eq!(x.sign(), Sign::Positive);
        assert!(x.interval(64).definite_sign().is_some());
        // 1 - sqrt2 < 0
        let y = FieldElem::one().sub(&FieldElem::sqrt2());
        assert_eq!(y.sign(), Sign::Negative);
    }

    #[test]
    fn display_and_json_round_trip() {
        let x = FieldElem::new(rat(-3, 8), rat_i64(1), rat(1, 8), rat_i64(0));
        assert_eq!(x.to_string(), "-3/8+sqrt2+1/8*sqrt5");
        let back = FieldElem::from_json(&x.json()).unwrap();
        assert_eq!(back, x);
    }
}
