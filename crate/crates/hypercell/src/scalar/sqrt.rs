//! Exact square roots inside `F = Q(sqrt2, sqrt5)`.
//!
//! Needed to detect when the parameter extension `F[t]/(t^2 - r)` collapses,
//! i.e. when `r` already has a square root in F (such as `r = 1` or `16/25`).
//! Writing `F = Q(sqrt5) + sqrt2*Q(sqrt5)`, a square root of
//! `r = alpha + sqrt2*beta` reduces to square roots in `Q(sqrt5)` and then to
//! perfect-square tests on rationals.

use num_integer::Roots;
use num_traits::{Signed, Zero};

use super::field::{FieldElem, Rational};

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let pn = x.numer().sqrt();
    let pd = x.denom().sqrt();
    if &(&pn * &pn) == x.numer() && &(&pd * &pd) == x.denom() {
        Some(Rational::new(pn, pd))
    } else {
        None
    }
}

/// Element `p + q*sqrt5` of the subfield `Q(sqrt5)`.
#[derive(Clone, PartialEq)]
struct Q5 {
    p: Rational,
    q: Rational,
}

impl Q5 {
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn to_field(&self) -> FieldElem {
        FieldElem::new(self.p.clone(), Rational::zero(), self.q.clone(), Rational::zero())
    }

    fn square(&self) -> Q5 {
        let five = Rational::from_integer(5.into());
        Q5 {
            p: &self.p * &self.p + &five * (&self.q * &self.q),
            q: Rational::from_integer(2.into()) * &self.p * &self.q,
        }
    }

    /// Square root inside Q(sqrt5), if one exists.
    fn sqrt(&self) -> Option<Q5> {
        let five = Rational::from_integer(5.into());
        if self.q.is_zero() {
            // x = a with a^2 = p, or x = b*sqrt5 with 5 b^2 = p.
            if let Some(a) = rational_sqrt(&self.p) {
                return Some(Q5 { p: a, q: Rational::zero() });
            }
            if let Some(b) = rational_sqrt(&(&self.p / &five)) {
                return Some(Q5 { p: Rational::zero(), q: b });
            }
            return None;
        }
        // (a + b*sqrt5)^2 = p + q*sqrt5 with q != 0 forces a, b != 0:
        // a^2 + 5 b^2 = p, 2ab = q, so a^2 solves z^2 - p z + 5 q^2/4 = 0.
        let disc = &self.p * &self.p - &five * (&self.q * &self.q);
        let s = rational_sqrt(&disc)?;
        let half = Rational::new(1.into(), 2.into());
        for root in [&(&self.p + &s) * &half, &(&self.p - &s) * &half] {
            if let Some(a) = rational_sqrt(&root) {
                if !a.is_zero() {
                    let b = &self.q * &half / &a;
                    let candidate = Q5 { p: a, q: b };
                    if candidate.square() == *self {
                        return Some(candidate);
                    }
                }
            }
        }
        None
    }
}

fn split_q5(x: &FieldElem) -> (Q5, Q5) {
    // x = alpha + sqrt2 * beta with alpha, beta in Q(sqrt5).
    (
        Q5 { p: x.c1.clone(), q: x.c5.clone() },
        Q5 { p: x.c2.clone(), q: x.c10.clone() },
    )
}

/// Exact square root of `x` in F, when one exists. The returned root is the
/// nonnegative one.
pub fn sqrt_in_field(x: &FieldElem) -> Option<FieldElem> {
    if x.is_zero() {
        return Some(FieldElem::zero());
    }
    if x.sign().is_negative() {
        return None;
    }
    let (alpha, beta) = split_q5(x);
    let sqrt2 = FieldElem::sqrt2();
    let half = Rational::new(1.into(), 2.into());
    let two = FieldElem::from_int(2);

    let candidate = if beta.is_zero() {
        // Either x = e^2 with e in Q(sqrt5), or x = 2 g^2 with root sqrt2*g.
        if let Some(e) = alpha.sqrt() {
            Some(e.to_field())
        } else {
            let half_alpha = Q5 { p: &alpha.p * &half, q: &alpha.q * &half };
            half_alpha.sqrt().map(|g| sqrt2.mul(&g.to_field()))
        }
    } else {
        // x = (e + sqrt2 g)^2 with e, g in Q(sqrt5), both nonzero:
        // e^2 + 2 g^2 = alpha and 2 e g = beta, so e^2 solves
        // z^2 - alpha z + beta^2 / 2 = 0 over Q(sqrt5).
        let alpha_sq = alpha.square();
        let beta_sq = beta.square();
        let disc = Q5 {
            p: &alpha_sq.p - Rational::from_integer(2.into()) * &beta_sq.p,
            q: &alpha_sq.q - Rational::from_integer(2.into()) * &beta_sq.q,
        };
        disc.sqrt().and_then(|s| {
            for root in [
                Q5 { p: (&alpha.p + &s.p) * &half, q: (&alpha.q + &s.q) * &half },
                Q5 { p: (&alpha.p - &s.p) * &half, q: (&alpha.q - &s.q) * &half },
            ] {
                if let Some(e) = root.sqrt() {
                    if !e.is_zero() {
                        // g = beta / (2e) inside Q(sqrt5); use field division.
                        let e_f = e.to_field();
                        let g_f = beta.to_field().div(&two.mul(&e_f)).ok()?;
                        return Some(e_f.add(&sqrt2.mul(&g_f)));
                    }
                }
            }
            None
        })
    };

    let root = candidate?;
    // Verification also guards against the few lossy branch choices above.
    if root.square() != *x {
        return None;
    }
    Some(if root.sign().is_negative() { root.neg() } else { root })
}

#[cfg(test)]
mod tests {
    use super::super::field::{rat, rat_i64};
    use super::*;

    #[test]
    fn rational_squares() {
        assert_eq!(rational_sqrt(&rat(16, 25)), Some(rat(4, 5)));
        assert_eq!(rational_sqrt(&rat(1, 3)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
    }

    #[test]
    fn field_squares() {
        // (1 + sqrt2)^2 = 3 + 2 sqrt2
        let x = FieldElem::new(rat_i64(3), rat_i64(2), rat_i64(0), rat_i64(0));
        assert_eq!(
            sqrt_in_field(&x),
            Some(FieldElem::one().add(&FieldElem::sqrt2()))
        );
        // (1 + sqrt5)^2 / 16 = (3 + sqrt5)/8 = cos^2(pi/5)
        let c = FieldElem::from_int(3).add(&FieldElem::sqrt5()).scale(&rat(1, 8));
        let root = sqrt_in_field(&c).unwrap();
        assert_eq!(root.square(), c);
        // (sqrt2 + sqrt5)^2 = 7 + 2 sqrt10
        let y = FieldElem::new(rat_i64(7), rat_i64(0), rat_i64(0), rat_i64(2));
        let root = sqrt_in_field(&y).unwrap();
        assert_eq!(root, FieldElem::sqrt2().add(&FieldElem::sqrt5()));
    }

    #[test]
    fn non_squares() {
        for x in [
            FieldElem::from_ratio(1, 3),
            FieldElem::from_ratio(3, 5),
            FieldElem::from_ratio(1, 7),
            // t5^2 = (11 + 4 sqrt5)/41
            FieldElem::from_int(11)
                .add(&FieldElem::sqrt5().scale(&rat_i64(4)))
                .scale(&rat(1, 41)),
            // t8^2 = (7 + 4 sqrt2)/17
            FieldElem::from_int(7)
                .add(&FieldElem::sqrt2().scale(&rat_i64(4)))
                .scale(&rat(1, 17)),
            FieldElem::sqrt2(),
        ] {
            assert!(sqrt_in_field(&x).is_none(), "{x} is not a square in F");
        }
    }
}
