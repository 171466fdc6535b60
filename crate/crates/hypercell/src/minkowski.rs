//! Minkowski space `R^{1,n}`: the bilinear form
//! `(v, w) = -v0 w0 + v1 w1 + ... + vn wn`, vector classification,
//! reflections, pairwise hyperplane geometry, and exact kernels.
//!
//! Everything is generic over the scalar backend. Classification needs a
//! certified sign ([`SignedScalar`]); plain ring operations suffice for dot
//! products and reflections, which therefore also work on formal Laurent
//! scalars.

use crate::error::{Error, Result};
use crate::scalar::{recognize_angle, AngleRecognition, Scalar, Sign, SignedScalar};

/// Vector in `R^{1,n}`; coordinate 0 is the time-like one.
#[derive(Clone, PartialEq, Debug)]
pub struct MinkVector<S> {
    pub coords: Vec<S>,
}

/// Causal character of a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorClass {
    SpaceLike,
    LightLike,
    TimeLike,
}

/// Relation between two walls, determined by the normalized pairing
/// `c = -(q1,q2)/sqrt((q1,q1)(q2,q2))`, handled exactly as the pair
/// `(c^2, sign of -(q1,q2))` so no square roots are ever extracted:
/// `c` in `(-1,1)` means the walls intersect (orthogonally iff `c = 0`),
/// `c = 1` tangency at infinity, `c > 1` ultraparallel at distance
/// `arccosh(c)`, and `c <= -1` is labeled `Diverging` (half-space
/// orientation anomaly; absent from the built-ins).
#[derive(Clone, PartialEq, Debug)]
pub enum PairRelation<S> {
    Orthogonal,
    /// Intersection at `pi/k`, `k` in `3..=6`.
    AnglePiOver(u32),
    /// Transverse intersection at an unrecognized angle; carries `cos^2` and
    /// the sign of the cosine.
    GenericAngle { cos_sq: S, cos_sign: Sign },
    TangentAtInfinity,
    /// Disjoint walls at distance `l > 0`; carries `cosh^2(l)`.
    Ultraparallel { cosh_sq: S },
    Diverging,
}

impl<S> PairRelation<S> {
    /// Stable one-character code used in CSV output.
    pub fn code(&self) -> &'static str {
        match self {
            PairRelation::Orthogonal => "O",
            PairRelation::AnglePiOver(3) => "A3",
            PairRelation::AnglePiOver(4) => "A4",
            PairRelation::AnglePiOver(5) => "A5",
            PairRelation::AnglePiOver(6) => "A6",
            PairRelation::AnglePiOver(_) => "A?",
            PairRelation::GenericAngle { .. } => "G",
            PairRelation::TangentAtInfinity => "T",
            PairRelation::Ultraparallel { .. } => "U",
            PairRelation::Diverging => "D",
        }
    }

    pub fn is_intersecting(&self) -> bool {
        matches!(
            self,
            PairRelation::Orthogonal
                | PairRelation::AnglePiOver(_)
                | PairRelation::GenericAngle { .. }
        )
    }
}

impl<S: Scalar> MinkVector<S> {
    pub fn new(coords: Vec<S>) -> MinkVector<S> {
        MinkVector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn zero(len: usize) -> MinkVector<S> {
        MinkVector { coords: vec![S::zero(); len] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &MinkVector<S>) -> MinkVector<S> {
        MinkVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &MinkVector<S>) -> MinkVector<S> {
        MinkVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> MinkVector<S> {
        MinkVector { coords: self.coords.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn neg(&self) -> MinkVector<S> {
        MinkVector { coords: self.coords.iter().map(|x| x.neg()).collect() }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MinkVector<T> {
        MinkVector { coords: self.coords.iter().map(f).collect() }
    }

    /// True if `other = lambda * self` for some nonzero scalar, tested by
    /// cross-multiplication so it also works over rings without division.
    pub fn is_proportional_to(&self, other: &MinkVector<S>) -> bool {
        if self.dim() != other.dim() || self.is_zero() || other.is_zero() {
            return false;
        }
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                let cross = self.coords[i]
                    .mul(&other.coords[j])
                    .sub(&self.coords[j].mul(&other.coords[i]));
                if !cross.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// The Minkowski pairing `-u0 v0 + u1 v1 + ... + un vn`.
pub fn mink_dot<S: Scalar>(u: &MinkVector<S>, v: &MinkVector<S>) -> Result<S> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    if u.dim() == 0 {
        return Err(Error::Precondition("empty vectors".into()));
    }
    let mut acc = u.coords[0].mul(&v.coords[0]).neg();
    for i in 1..u.dim() {
        acc = acc.add(&u.coords[i].mul(&v.coords[i]));
    }
    Ok(acc)
}

/// Squared Minkowski norm.
pub fn mink_norm_sq<S: Scalar>(v: &MinkVector<S>) -> Result<S> {
    mink_dot(v, v)
}

/// Space-like / light-like / time-like by the certified sign of `(v, v)`.
pub fn classify_vector<S: SignedScalar>(v: &MinkVector<S>) -> Result<VectorClass> {
    Ok(match mink_norm_sq(v)?.sign() {
        Sign::Positive => VectorClass::SpaceLike,
        Sign::Zero => VectorClass::LightLike,
        Sign::Negative => VectorClass::TimeLike,
    })
}

/// Reflection of `x` in the hyperplane orthogonal to the space-like vector
/// `q`: `x - 2 (x,q)/(q,q) * q`. An involution that fixes the hyperplane and
/// preserves the form.
pub fn reflect<S: SignedScalar>(q: &MinkVector<S>, x: &MinkVector<S>) -> Result<MinkVector<S>> {
    let qq = mink_norm_sq(q)?;
    if qq.is_zero() {
        return Err(Error::Precondition("reflection mirror must not be light-like".into()));
    }
    let xq = mink_dot(x, q)?;
    let coeff = xq.add(&xq).div(&qq)?;
    Ok(x.sub(&q.scale(&coeff)))
}

/// Classifies the relative position of the hyperplanes orthogonal to two
/// space-like, non-proportional vectors.
pub fn pair_relation<S: SignedScalar>(
    q1: &MinkVector<S>,
    q2: &MinkVector<S>,
) -> Result<PairRelation<S>> {
    let n1 = mink_norm_sq(q1)?;
    let n2 = mink_norm_sq(q2)?;
    if !n1.sign().is_positive() || !n2.sign().is_positive() {
        return Err(Error::Precondition("pair_relation requires space-like vectors".into()));
    }
    if q1.is_proportional_to(q2) {
        return Err(Error::ProportionalWalls(format!("{:?}", q1.coords), format!("{:?}", q2.coords)));
    }
    let dot = mink_dot(q1, q2)?;
    if dot.is_zero() {
        return Ok(PairRelation::Orthogonal);
    }
    // c^2 = (q1,q2)^2 / ((q1,q1)(q2,q2)) and the sign of c = -(q1,q2)/sqrt(..)
    let c_sq = dot.mul(&dot).div(&n1.mul(&n2))?;
    let c_sign = dot.neg().sign();
    let c_sq_minus_one = c_sq.sub(&S::one());
    match c_sq_minus_one.sign() {
        Sign::Negative => {
            // |c| < 1: transverse intersection.
            match recognize_angle(&c_sq, c_sign) {
                AngleRecognition::PiOver(2) => Ok(PairRelation::Orthogonal),
                AngleRecognition::PiOver(k) => Ok(PairRelation::AnglePiOver(k)),
                _ => Ok(PairRelation::GenericAngle { cos_sq: c_sq, cos_sign: c_sign }),
            }
        }
        Sign::Zero => {
            if c_sign.is_positive() {
                Ok(PairRelation::TangentAtInfinity)
            } else {
                Ok(PairRelation::Diverging)
            }
        }
        Sign::Positive => {
            if c_sign.is_positive() {
                Ok(PairRelation::Ultraparallel { cosh_sq: c_sq })
            } else {
                Ok(PairRelation::Diverging)
            }
        }
    }
}

/// Exact basis of `{x : (x, v) = 0 for all v in vs}` by Gaussian elimination
/// over the scalar field. An empty basis is a valid outcome.
pub fn common_orthogonal<S: SignedScalar>(vs: &[MinkVector<S>]) -> Result<Vec<MinkVector<S>>> {
    if vs.is_empty() {
        return Err(Error::Precondition("common_orthogonal of an empty family".into()));
    }
    let dim = vs[0].dim();
    // Row i is the linear functional x -> (x, v_i): coefficients
    // (-v0, v1, ..., vn).
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(vs.len());
    for v in vs {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch(dim, v.dim()));
        }
        let mut row: Vec<S> = v.coords.clone();
        row[0] = row[0].neg();
        rows.push(row);
    }
    let basis = kernel_basis(rows, dim)?;
    Ok(basis.into_iter().map(MinkVector::new).collect())
}

/// Kernel basis of a matrix given as rows, by fraction-free-ish Gaussian
/// elimination with exact division. Returns one basis vector per free column.
pub fn kernel_basis<S: SignedScalar>(mut rows: Vec<Vec<S>>, cols: usize) -> Result<Vec<Vec<S>>> {
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut row_of_pivot_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        // Find a pivot in this column among unprocessed rows.
        let pivot_row = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        rows.swap(rank, pr);
        let inv = rows[rank][col].inv()?;
        for c in 0..cols {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..cols {
                    let delta = factor.mul(&rows[rank][c]);
                    rows[r][c] = rows[r][c].sub(&delta);
                }
            }
        }
        row_of_pivot_col[col] = Some(rank);
        pivot_col_of_row.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free_col in 0..cols {
        if row_of_pivot_col[free_col].is_some() {
            continue;
        }
        let mut vec = vec![S::zero(); cols];
        vec[free_col] = S::one();
        for (row, &pcol) in pivot_col_of_row.iter().enumerate() {
            vec[pcol] = rows[row][free_col].neg();
        }
        basis.push(vec);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{FieldElem, ParamScalar};

    fn fe(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }

    fn vec_f(coords: Vec<FieldElem>) -> MinkVector<FieldElem> {
        MinkVector::new(coords)
    }

    #[test]
    fn dot_and_classification() {
        // sqrt2 e0 + e1 + e2 is light-like
        let v = vec_f(vec![FieldElem::sqrt2(), fe(1), fe(1), fe(0), fe(0)]);
        assert_eq!(classify_vector(&v).unwrap(), VectorClass::LightLike);
        // e0 is time-like
        let e0 = vec_f(vec![fe(1), fe(0), fe(0), fe(0), fe(0)]);
        assert_eq!(classify_vector(&e0).unwrap(), VectorClass::TimeLike);
        // q_A = (1, sqrt2, 0, 0, 0) is a unit space-like vector
        let a = vec_f(vec![fe(1), FieldElem::sqrt2(), fe(0), fe(0), fe(0)]);
        assert_eq!(mink_norm_sq(&a).unwrap(), fe(1));
        assert_eq!(classify_vector(&a).unwrap(), VectorClass::SpaceLike);
    }

    #[test]
    fn reflection_is_an_involution_preserving_the_form() {
        let q = vec_f(vec![fe(1), FieldElem::sqrt2(), fe(0), fe(0), fe(0)]);
        let e0 = vec_f(vec![fe(1), fe(0), fe(0), fe(0), fe(0)]);
        let e4 = vec_f(vec![fe(0), fe(0), fe(0), fe(0), fe(1)]);
        // reflect(e4, e0) = e0 since e0 is orthogonal to e4
        assert_eq!(reflect(&e4, &e0).unwrap(), e0);
        // reflect(q, q) = -q
        assert_eq!(reflect(&q, &q).unwrap(), q.neg());
        // involution and form preservation on a generic vector
        let x = vec_f(vec![fe(3), fe(-1), fe(2), fe(5), fe(7)]);
        let rx = reflect(&q, &x).unwrap();
        assert_eq!(reflect(&q, &rx).unwrap(), x);
        assert_eq!(mink_norm_sq(&rx).unwrap(), mink_norm_sq(&x).unwrap());
    }

    #[test]
    fn kernel_of_orthogonality_constraints() {
        // x orthogonal to e1, e2, e3, e4 must be a multiple of e0.
        let basis_vecs: Vec<MinkVector<FieldElem>> = (1..5)
            .map(|i| {
                let mut coords = vec![fe(0); 5];
                coords[i] = fe(1);
                MinkVector::new(coords)
            })
            .collect();
        let kernel = common_orthogonal(&basis_vecs).unwrap();
        assert_eq!(kernel.len(), 1);
        assert!(kernel[0].is_proportional_to(&vec_f(vec![fe(1), fe(0), fe(0), fe(0), fe(0)])));
    }

    #[test]
    fn pair_relation_rejects_proportional_walls() {
        let a = vec_f(vec![fe(1), FieldElem::sqrt2(), fe(0), fe(0), fe(0)]);
        let b = a.scale(&fe(3));
        assert!(matches!(pair_relation(&a, &b), Err(Error::ProportionalWalls(_, _))));
    }

    #[test]
    fn pair_relation_scale_invariance_and_symmetry() {
        let r = FieldElem::from_ratio(3, 5);
        let t = ParamScalar::t(&r);
        let q1: MinkVector<ParamScalar> = MinkVector::new(vec![
            ParamScalar::from_field(FieldElem::sqrt2()),
            ParamScalar::from_int(1),
            ParamScalar::from_int(-1),
            ParamScalar::from_int(1),
            t.inv().unwrap().neg(),
        ]);
        let q2: MinkVector<ParamScalar> = MinkVector::new(vec![
            ParamScalar::from_field(FieldElem::sqrt2()),
            ParamScalar::from_int(1),
            ParamScalar::from_int(1),
            ParamScalar::from_int(-1),
            t.inv().unwrap().neg(),
        ]);
        let rel = pair_relation(&q1, &q2).unwrap();
        assert_eq!(rel, pair_relation(&q2, &q1).unwrap());
        let scaled = q1.scale(&ParamScalar::from_field(FieldElem::from_ratio(7, 3)));
        assert_eq!(rel, pair_relation(&scaled, &q2).unwrap());
    }
}
