use super::field::FieldElem;
use super::sign::{precision_schedule, sqrt_of_interval, Sign};
use super::sqrt::sqrt_in_field;
use super::{Scalar, SignedScalar};
use crate::error::{Error, Result};

/// Element `even + odd*t` of `F[t]/(t^2 - r)` with `r > 0` and `t` standing
/// for the positive root `sqrt(r)`.
///
/// Construction normalizes: when `r` is a perfect square in F the extension
/// collapses and `t` is substituted by `sqrt(r)` exactly, so the stored `odd`
/// part is zero and all arithmetic stays inside F. This keeps the type a
/// field for every admissible `r` (for non-square `r` the polynomial
/// `t^2 - r` is irreducible). Elements with zero `odd` part carry no `r` and
/// mix freely; mixing two distinct parameters is a programming error.
#[derive(Clone, Debug)]
pub struct ParamScalar {
    even: FieldElem,
    odd: FieldElem,
    r: FieldElem,
}

impl ParamScalar {
    pub fn new(even: FieldElem, odd: FieldElem, r: FieldElem) -> ParamScalar {
        if odd.is_zero() {
            return ParamScalar { even, odd, r: FieldElem::zero() };
        }
        match sqrt_in_field(&r) {
            Some(root) => ParamScalar {
                even: even.add(&odd.mul(&root)),
                odd: FieldElem::zero(),
                r: FieldElem::zero(),
            },
            None => ParamScalar { even, odd, r },
        }
    }

    pub fn from_field(x: FieldElem) -> ParamScalar {
        ParamScalar { even: x, odd: FieldElem::zero(), r: FieldElem::zero() }
    }

    pub fn from_int(n: i64) -> ParamScalar {
        ParamScalar::from_field(FieldElem::from_int(n))
    }

    /// The parameter `t` itself, `t^2 = r`.
    pub fn t(r: &FieldElem) -> ParamScalar {
        ParamScalar::new(FieldElem::zero(), FieldElem::one(), r.clone())
    }

    pub fn even(&self) -> &FieldElem {
        &self.even
    }

    pub fn odd(&self) -> &FieldElem {
        &self.odd
    }

    /// The modulus, meaningful only while the odd part is nonzero.
    pub fn modulus(&self) -> &FieldElem {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// The field part, if the element lies in F.
    pub fn as_field(&self) -> Option<&FieldElem> {
        if self.odd.is_zero() {
            Some(&self.even)
        } else {
            None
        }
    }

    fn unify_modulus(&self, rhs: &ParamScalar) -> FieldElem {
        if self.odd.is_zero() {
            return rhs.r.clone();
        }
        if rhs.odd.is_zero() {
            return self.r.clone();
        }
        debug_assert_eq!(self.r, rhs.r, "mixed parameter moduli");
        self.r.clone()
    }

    pub fn add(&self, rhs: &ParamScalar) -> ParamScalar {
        let r = self.unify_modulus(rhs);
        ParamScalar::new(self.even.add(&rhs.even), self.odd.add(&rhs.odd), r)
    }

    pub fn sub(&self, rhs: &ParamScalar) -> ParamScalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> ParamScalar {
        ParamScalar { even: self.even.neg(), odd: self.odd.neg(), r: self.r.clone() }
    }

    pub fn mul(&self, rhs: &ParamScalar) -> ParamScalar {
        let r = self.unify_modulus(rhs);
        let even = self.even.mul(&rhs.even).add(&self.odd.mul(&rhs.odd).mul(&r));
        let odd = self.even.mul(&rhs.odd).add(&self.odd.mul(&rhs.even));
        ParamScalar::new(even, odd, r)
    }

    /// Conjugation inverse: `(even + odd t)^-1 = (even - odd t) / (even^2 - odd^2 r)`.
    /// The denominator is nonzero whenever the element is, because stored
    /// moduli are never squares in F.
    pub fn inv(&self) -> Result<ParamScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.odd.is_zero() {
            return Ok(ParamScalar::from_field(self.even.inv()?));
        }
        let denom = self.even.square().sub(&self.odd.square().mul(&self.r));
        let denom_inv = denom.inv().map_err(|_| Error::DivisionByZero)?;
        Ok(ParamScalar {
            even: self.even.mul(&denom_inv),
            odd: self.odd.neg().mul(&denom_inv),
            r: self.r.clone(),
        })
    }

    pub fn div(&self, rhs: &ParamScalar) -> Result<ParamScalar> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn square(&self) -> ParamScalar {
        self.mul(self)
    }

    pub fn to_f64(&self) -> f64 {
        if self.odd.is_zero() {
            self.even.to_f64()
        } else {
            self.even.to_f64() + self.odd.to_f64() * self.r.to_f64().sqrt()
        }
    }

    /// Certified sign at `t = +sqrt(r)`.
    pub fn sign(&self) -> Sign {
        if self.odd.is_zero() {
            return self.even.sign();
        }
        // Exact zero test: even + odd*sqrt(r) = 0 iff even^2 = odd^2 r with
        // even and odd of opposite sign. With non-square stored moduli this
        // cannot happen for nonzero elements, but the test keeps the oracle
        // honest independently of the normalization invariant.
        if self.even.square() == self.odd.square().mul(&self.r)
            && self.even.sign() != self.odd.sign()
        {
            return Sign::Zero;
        }
        for bits in precision_schedule() {
            let sqrt_r = sqrt_of_interval(&self.r.interval(bits), bits);
            let value = self.even.interval(bits).add(&self.odd.interval(bits).mul(&sqrt_r));
            if let Some(s) = value.definite_sign() {
                return s;
            }
        }
        unreachable!("precision schedule is unbounded")
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "even": self.even.json(),
            "odd": self.odd.json(),
            "r": self.r.json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ParamScalar> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("param scalar must be an object".into()))?;
        let get = |k: &str| {
            obj.get(k)
                .ok_or_else(|| Error::Parse(format!("param scalar missing field {k}")))
        };
        Ok(ParamScalar::new(
            FieldElem::from_json(get("even")?)?,
            FieldElem::from_json(get("odd")?)?,
            FieldElem::from_json(get("r")?)?,
        ))
    }
}

impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        self.even == other.even && self.odd == other.odd
    }
}

impl std::fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.odd.is_zero() {
            write!(f, "{}", self.even)
        } else if self.even.is_zero() {
            write!(f, "({})*t", self.odd)
        } else {
            write!(f, "{}+({})*t", self.even, self.odd)
        }
    }
}

impl Scalar for ParamScalar {
    fn zero() -> Self {
        ParamScalar::from_field(FieldElem::zero())
    }
    fn one() -> Self {
        ParamScalar::from_field(FieldElem::one())
    }
    fn from_field(x: &FieldElem) -> Self {
        ParamScalar::from_field(x.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        ParamScalar::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        ParamScalar::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ParamScalar::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        ParamScalar::neg(self)
    }
    fn is_zero(&self) -> bool {
        ParamScalar::is_zero(self)
    }
}

impl SignedScalar for ParamScalar {
    fn sign(&self) -> Sign {
        ParamScalar::sign(self)
    }
    fn inv(&self) -> Result<Self> {
        ParamScalar::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::rat;
    use super::*;

    fn fe(n: i64, d: i64) -> FieldElem {
        FieldElem::from_rational(rat(n, d))
    }

    #[test]
    fn square_modulus_collapses() {
        // r = 16/25: t normalizes to the field element 4/5
        let t = ParamScalar::t(&fe(16, 25));
        assert_eq!(t.as_field(), Some(&fe(4, 5)));
        // r = 1: (1 - t)(1 + t) = 0 with both factors normalized before use
        let t = ParamScalar::t(&fe(1, 1));
        let a = ParamScalar::from_int(1).sub(&t);
        assert!(a.is_zero());
    }

    #[test]
    fn non_square_modulus_arithmetic() {
        let r = fe(3, 5);
        let t = ParamScalar::t(&r);
        assert_eq!(t.square().as_field(), Some(&r));
        // (1/t) * t = 1
        let inv = t.inv().unwrap();
        assert_eq!(inv.mul(&t), ParamScalar::from_int(1));
        // 1/t = t / r
        assert_eq!(inv, t.div(&ParamScalar::from_field(r.clone())).unwrap());
        assert_eq!(t.sign(), Sign::Positive);
        assert_eq!(t.neg().sign(), Sign::Negative);
        assert!((t.to_f64() - (3.0f64 / 5.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sign_of_mixed_element() {
        // 1 - t at r = 3/5 is positive (t ~ 0.7746)
        let r = fe(3, 5);
        let x = ParamScalar::from_int(1).sub(&ParamScalar::t(&r));
        assert_eq!(x.sign(), Sign::Positive);
        // 3t - 4 at r = 3/5 is negative
        let y = ParamScalar::t(&r)
            .mul(&ParamScalar::from_int(3))
            .sub(&ParamScalar::from_int(4));
        assert_eq!(y.sign(), Sign::Negative);
    }
}
