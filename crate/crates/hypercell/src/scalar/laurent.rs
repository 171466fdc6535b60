use std::collections::BTreeMap;

use super::field::FieldElem;
use super::param::ParamScalar;
use super::sign::Sign;
use super::Scalar;

/// Formal Laurent polynomial in the deformation parameter `t`, with
/// coefficients in F. Zero coefficients are never stored.
///
/// This is the scalar for identity-in-t checks: a pairing that must vanish
/// for every `t > 0` vanishes as a Laurent polynomial.
#[derive(Clone, PartialEq, Default)]
pub struct LaurentParam {
    terms: BTreeMap<i32, FieldElem>,
}

impl LaurentParam {
    pub fn zero() -> LaurentParam {
        LaurentParam::default()
    }

    pub fn constant(c: FieldElem) -> LaurentParam {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentParam { terms }
    }

    /// The monomial `c * t^exp`.
    pub fn monomial(exp: i32, c: FieldElem) -> LaurentParam {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentParam { terms }
    }

    pub fn t() -> LaurentParam {
        LaurentParam::monomial(1, FieldElem::one())
    }

    pub fn t_inv() -> LaurentParam {
        LaurentParam::monomial(-1, FieldElem::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &FieldElem)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Constant term together with a check that nothing else is present.
    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(FieldElem::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// The single term `(exp, coeff)` if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(i32, &FieldElem)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    fn insert(terms: &mut BTreeMap<i32, FieldElem>, exp: i32, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &LaurentParam) -> LaurentParam {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert(&mut terms, *e, c.clone());
        }
        LaurentParam { terms }
    }

    pub fn sub(&self, rhs: &LaurentParam) -> LaurentParam {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LaurentParam {
        LaurentParam {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &LaurentParam) -> LaurentParam {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                Self::insert(&mut terms, e1 + e2, c1.mul(c2));
            }
        }
        LaurentParam { terms }
    }

    pub fn scale(&self, c: &FieldElem) -> LaurentParam {
        self.mul(&LaurentParam::constant(c.clone()))
    }

    /// Substitutes `t -> 1/t` by negating every exponent.
    pub fn invert_t(&self) -> LaurentParam {
        LaurentParam {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluates at `t^2 = r`: even exponents contribute `r^k` to the even
    /// part, odd exponents `r^k` to the odd part.
    pub fn eval(&self, r: &FieldElem) -> ParamScalar {
        let r_inv = if self.terms.keys().any(|e| *e < 0) {
            r.inv().expect("parameter r must be nonzero")
        } else {
            FieldElem::zero()
        };
        let r_pow = |k: i32| -> FieldElem {
            let base = if k >= 0 { r } else { &r_inv };
            let mut acc = FieldElem::one();
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(base);
            }
            acc
        };
        let mut even = FieldElem::zero();
        let mut odd = FieldElem::zero();
        for (e, c) in &self.terms {
            let k = e.div_euclid(2);
            let contribution = c.mul(&r_pow(k));
            if e.rem_euclid(2) == 0 {
                even = even.add(&contribution);
            } else {
                odd = odd.add(&contribution);
            }
        }
        ParamScalar::new(even, odd, r.clone())
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64() * t.powi(*e))
            .sum()
    }

    /// Sign of the polynomial as a function on all of `t > 0`, when a
    /// one-sided coefficient test or monomial form decides it. `None` means
    /// the test is inconclusive (mixed signs, non-monomial).
    pub fn sign_for_all_positive_t(&self) -> Option<Sign> {
        if self.is_zero() {
            return Some(Sign::Zero);
        }
        if let Some((_, c)) = self.as_monomial() {
            return Some(c.sign());
        }
        let signs: Vec<Sign> = self.terms.values().map(|c| c.sign()).collect();
        if signs.iter().all(|s| s.is_positive()) {
            Some(Sign::Positive)
        } else if signs.iter().all(|s| s.is_negative()) {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| serde_json::json!([e, c.json()]))
                .collect(),
        )
    }
}

impl std::fmt::Display for LaurentParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for LaurentParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

impl Scalar for LaurentParam {
    fn zero() -> Self {
        LaurentParam::zero()
    }
    fn one() -> Self {
        LaurentParam::constant(FieldElem::one())
    }
    fn from_field(x: &FieldElem) -> Self {
        LaurentParam::constant(x.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        LaurentParam::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        LaurentParam::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LaurentParam::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        LaurentParam::neg(self)
    }
    fn is_zero(&self) -> bool {
        LaurentParam::is_zero(self)
    }
}

/// Laurent polynomial in two formal variables `r` and `t` over F. Only what
/// the boundary-family identity needs: ring operations and substitution.
#[derive(Clone, PartialEq, Default, Debug)]
pub struct LaurentBivar {
    terms: BTreeMap<(i32, i32), FieldElem>,
}

impl LaurentBivar {
    pub fn zero() -> LaurentBivar {
        LaurentBivar::default()
    }

    pub fn constant(c: FieldElem) -> LaurentBivar {
        LaurentBivar::monomial(0, 0, c)
    }

    /// `c * r^i * t^j`.
    pub fn monomial(r_exp: i32, t_exp: i32, c: FieldElem) -> LaurentBivar {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((r_exp, t_exp), c);
        }
        LaurentBivar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(terms: &mut BTreeMap<(i32, i32), FieldElem>, key: (i32, i32), c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &LaurentBivar) -> LaurentBivar {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            Self::insert(&mut terms, *k, c.clone());
        }
        LaurentBivar { terms }
    }

    pub fn neg(&self) -> LaurentBivar {
        LaurentBivar {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &LaurentBivar) -> LaurentBivar {
        let mut terms = BTreeMap::new();
        for ((r1, t1), c1) in &self.terms {
            for ((r2, t2), c2) in &rhs.terms {
                Self::insert(&mut terms, (r1 + r2, t1 + t2), c1.mul(c2));
            }
        }
        LaurentBivar { terms }
    }

    /// Substitutes an exact value for `r`, leaving a Laurent polynomial in `t`.
    pub fn substitute_r(&self, value: &FieldElem) -> LaurentParam {
        let value_inv = if self.terms.keys().any(|(r, _)| *r < 0) {
            value.inv().expect("substituted r must be nonzero")
        } else {
            FieldElem::zero()
        };
        let mut acc = LaurentParam::zero();
        for ((r_exp, t_exp), c) in &self.terms {
            let base = if *r_exp >= 0 { value } else { &value_inv };
            let mut coeff = c.clone();
            for _ in 0..r_exp.unsigned_abs() {
                coeff = coeff.mul(base);
            }
            acc = acc.add(&LaurentParam::monomial(*t_exp, coeff));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{rat, FieldElem};
    use super::*;

    #[test]
    fn eval_splits_even_and_odd_exponents() {
        // p = t + 1/t at r = 1: collapses to 2
        let p = LaurentParam::t().add(&LaurentParam::t_inv());
        let v = p.eval(&FieldElem::one());
        assert_eq!(v, ParamScalar::from_int(2));
        // p = t^2 at r = 1/3 gives 1/3
        let p = LaurentParam::monomial(2, FieldElem::one());
        assert_eq!(
            p.eval(&FieldElem::from_rational(rat(1, 3))),
            ParamScalar::from_field(FieldElem::from_rational(rat(1, 3)))
        );
        // (1/t) * (-t) = -1 independent of r
        let p = LaurentParam::t_inv().mul(&LaurentParam::t().neg());
        assert_eq!(p, LaurentParam::constant(FieldElem::from_int(-1)));
    }

    #[test]
    fn invert_t_is_an_involution() {
        let p = LaurentParam::monomial(2, FieldElem::sqrt2())
            .add(&LaurentParam::monomial(-1, FieldElem::from_int(3)));
        assert_eq!(p.invert_t().invert_t(), p);
        assert!(p.invert_t().terms().any(|(e, _)| e == -2));
    }

    #[test]
    fn bivariate_substitution() {
        // (r + 1) * t^-1, at r = 2: 3/t
        let p = LaurentBivar::monomial(1, -1, FieldElem::one())
            .add(&LaurentBivar::monomial(0, -1, FieldElem::one()));
        let q = p.substitute_r(&FieldElem::from_int(2));
        assert_eq!(q, LaurentParam::monomial(-1, FieldElem::from_int(3)));
    }
}
