//! Exact arithmetic tower used throughout the crate.
//!
//! The base field is `F = Q(sqrt2, sqrt5)` with Q-basis `{1, sqrt2, sqrt5, sqrt10}`
//! ([`FieldElem`]). On top of it sit the quadratic parameter extension
//! `F[t]/(t^2 - r)` ([`ParamScalar`]) and formal Laurent polynomials in `t`
//! ([`LaurentParam`]), plus a certified sign oracle based on interval
//! refinement with an exact zero test. A plain `f64` backend implements the
//! same traits for diagnostics and figure rendering.

mod field;
mod laurent;
mod param;
pub mod parse;
mod sign;
mod sqrt;

pub use field::{FieldElem, Rational};
pub use laurent::{LaurentBivar, LaurentParam};
pub use param::ParamScalar;
pub use sign::{rational_sign, sqrt_interval, Sign};
pub use sqrt::{rational_sqrt, sqrt_in_field};

use crate::error::{Error, Result};

/// Absolute tolerance used by the `f64` backend when it has to make a sign
/// decision. Exact backends never consult it.
pub const FLOAT_SIGN_TOL: f64 = 1e-9;

/// Outcome of matching a squared cosine against the exact dihedral angles
/// the built-in arrangements can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleRecognition {
    /// Angle `pi/k` for `k` in `2..=6`.
    PiOver(u32),
    /// A transverse intersection at an angle that is not `pi/k` for
    /// `k <= 6` (including obtuse angles, whose cosine is negative).
    GenericAngle,
    /// `cos^2 >= 1`: not an intersection angle at all.
    NotAnAngle,
}

/// Exact values of `cos^2(pi/k)` for `k = 2..=6`, all inside F.
pub fn cos_sq_pi_over(k: u32) -> FieldElem {
    match k {
        2 => FieldElem::zero(),
        3 => FieldElem::from_ratio(1, 4),
        4 => FieldElem::from_ratio(1, 2),
        // cos^2(pi/5) = (3 + sqrt5)/8
        5 => FieldElem::from_int(3)
            .add(&FieldElem::sqrt5())
            .scale(&num_rational::BigRational::new(1.into(), 8.into())),
        6 => FieldElem::from_ratio(3, 4),
        _ => panic!("cos_sq_pi_over only defined for k in 2..=6"),
    }
}

/// Matches `cos_sq` (the squared normalized pairing, known to satisfy
/// `0 <= cos_sq`) and the sign of the cosine against the angles `pi/k`,
/// `k <= 6`. The sign must be consistent with an angle in `(0, pi/2]`:
/// `k = 2` needs a zero cosine, `k >= 3` a positive one.
pub fn recognize_angle<S: SignedScalar>(cos_sq: &S, sign: Sign) -> AngleRecognition {
    let one = S::one();
    if cos_sq.sub(&one).sign() != Sign::Negative {
        return AngleRecognition::NotAnAngle;
    }
    for k in 2..=6u32 {
        if cos_sq.sub(&S::from_field(&cos_sq_pi_over(k))).is_zero() {
            let consistent = if k == 2 { sign.is_zero() } else { sign.is_positive() };
            return if consistent {
                AngleRecognition::PiOver(k)
            } else {
                AngleRecognition::GenericAngle
            };
        }
    }
    AngleRecognition::GenericAngle
}

/// Commutative-ring interface shared by all scalar backends.
///
/// Methods take references because the exact backends hold heap data.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_field(x: &FieldElem) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Scalars that support division and a certified sign, i.e. everything needed
/// for Gaussian elimination and pair classification.
pub trait SignedScalar: Scalar {
    fn sign(&self) -> Sign;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

/// Sign of a scalar viewed as a function of the deformation parameter over
/// all `t > 0`. Exact and float backends are constant in `t`; Laurent
/// scalars use a one-sided coefficient test, which may be inconclusive
/// (`None`).
pub trait ParamSignScalar: Scalar {
    fn sign_for_positive_t(&self) -> Option<Sign>;
}

impl ParamSignScalar for FieldElem {
    fn sign_for_positive_t(&self) -> Option<Sign> {
        Some(self.sign())
    }
}

impl ParamSignScalar for ParamScalar {
    fn sign_for_positive_t(&self) -> Option<Sign> {
        Some(self.sign())
    }
}

impl ParamSignScalar for LaurentParam {
    fn sign_for_positive_t(&self) -> Option<Sign> {
        self.sign_for_all_positive_t()
    }
}

impl ParamSignScalar for f64 {
    fn sign_for_positive_t(&self) -> Option<Sign> {
        Some(SignedScalar::sign(self))
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_field(x: &FieldElem) -> Self {
        x.to_f64()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.abs() < FLOAT_SIGN_TOL
    }
}

impl SignedScalar for f64 {
    fn sign(&self) -> Sign {
        if self.abs() < FLOAT_SIGN_TOL {
            Sign::Zero
        } else if *self > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
    fn inv(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(1.0 / self)
    }
}
