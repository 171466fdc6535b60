//! Labeled wall systems: the built-in arrangements (the 24-cell, the
//! deformation family and its extended generating set, the bonus lattice,
//! the cuboctahedron limit), relation matrices, Coxeter diagrams, ideal
//! vertices, convexity witnesses, and symmetry verification.

mod labels;
mod symmetry;
mod tables;

pub use labels::{Octet, WallLabel};
pub use symmetry::{
    symmetry_group_report, symmetry_l, symmetry_m, symmetry_n, symmetry_roll, verify_symmetry,
    verify_symmetry_with_t_inversion, SymmetryGroupReport,
};
pub use tables::{vertex_candidates_dim3, vertex_candidates_dim4};

use crate::error::{Error, Result};
use crate::minkowski::{classify_vector, mink_dot, MinkVector, PairRelation, VectorClass};
use crate::scalar::{
    cos_sq_pi_over, FieldElem, LaurentParam, ParamScalar, ParamSignScalar, Scalar, Sign,
    SignedScalar,
};

/// The built-in wall systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// All 24 walls of the right-angled ideal hyperbolic 24-cell (`t = 1`).
    P24,
    /// The 22 walls left after removing `G` and `H`, at `t = 1`.
    Gamma22,
    /// The same 22 walls along the deformation parameter.
    Family22,
    /// The 8-element generating set of the extended group.
    ExtendedGenerators,
    /// The 10 walls of the bonus lattice; requires `t^2 = 3/5`.
    L6,
    /// The 14-wall limit arrangement in the hyperplane orthogonal to `e4`.
    Cuboctahedron,
}

impl Builtin {
    pub fn parse(s: &str) -> Result<Builtin> {
        match s.to_ascii_lowercase().as_str() {
            "p24" => Ok(Builtin::P24),
            "gamma22" => Ok(Builtin::Gamma22),
            "family22" => Ok(Builtin::Family22),
            "extended" | "extendedgenerators" => Ok(Builtin::ExtendedGenerators),
            "l6" => Ok(Builtin::L6),
            "cuboctahedron" => Ok(Builtin::Cuboctahedron),
            _ => Err(Error::Precondition(format!("unknown arrangement {s:?}"))),
        }
    }
}

/// How the deformation parameter is fixed in an arrangement.
#[derive(Debug, Clone, PartialEq)]
pub enum ParameterDesc {
    /// Formal `t`: coordinates are Laurent polynomials.
    FormalT,
    /// Exact value of `t^2` in F.
    ExactTSquared(FieldElem),
    /// Floating value of `t`.
    Float(f64),
    /// Parameter-free arrangement (the cuboctahedron limit).
    NotApplicable,
}

impl std::fmt::Display for ParameterDesc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParameterDesc::FormalT => write!(f, "formal t"),
            ParameterDesc::ExactTSquared(r) => write!(f, "t^2 = {r}"),
            ParameterDesc::Float(t) => write!(f, "t = {t:?}"),
            ParameterDesc::NotApplicable => write!(f, "none"),
        }
    }
}

/// An ordered list of labeled space-like wall vectors with a parameter
/// description. `dimension` is the dimension of the hyperbolic space, one
/// less than the coordinate count.
#[derive(Debug, Clone)]
pub struct Arrangement<S> {
    pub dimension: usize,
    pub parameter: ParameterDesc,
    pub walls: Vec<(WallLabel, MinkVector<S>)>,
}

impl<S: Scalar> Arrangement<S> {
    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn labels(&self) -> Vec<WallLabel> {
        self.walls.iter().map(|(l, _)| *l).collect()
    }

    pub fn index_of(&self, label: WallLabel) -> Result<usize> {
        self.walls
            .iter()
            .position(|(l, _)| *l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn wall(&self, label: WallLabel) -> Result<&MinkVector<S>> {
        Ok(&self.walls[self.index_of(label)?].1)
    }

    pub fn vectors_for(&self, labels: &[WallLabel]) -> Result<Vec<MinkVector<S>>> {
        labels.iter().map(|l| self.wall(*l).cloned()).collect()
    }
}

fn formal_table(name: Builtin) -> Result<Vec<(WallLabel, MinkVector<LaurentParam>)>> {
    Ok(match name {
        Builtin::P24 | Builtin::Gamma22 => tables::p24(),
        Builtin::Family22 => tables::family22(),
        Builtin::ExtendedGenerators => tables::extended_generators(),
        Builtin::L6 => tables::l6(),
        Builtin::Cuboctahedron => {
            return Err(Error::Precondition(
                "the cuboctahedron limit is parameter-free; use builtin_exact".into(),
            ))
        }
    })
}

fn check_builtin_parameter(name: Builtin, t_squared: &FieldElem) -> Result<()> {
    let one = FieldElem::one();
    let three_fifths = FieldElem::from_ratio(3, 5);
    match name {
        Builtin::P24 | Builtin::Gamma22 if *t_squared != one => Err(Error::Precondition(
            format!("{name:?} exists only at t = 1, got t^2 = {t_squared}"),
        )),
        Builtin::L6 if *t_squared != three_fifths => Err(Error::Precondition(format!(
            "L6 requires t^2 = 3/5, got t^2 = {t_squared}"
        ))),
        _ => Ok(()),
    }
}

/// Formal-`t` arrangement. `Family22` and `ExtendedGenerators` are the
/// meaningful choices; the fixed-parameter built-ins are rejected.
pub fn builtin_formal(name: Builtin) -> Result<Arrangement<LaurentParam>> {
    match name {
        Builtin::Family22 | Builtin::ExtendedGenerators => Ok(Arrangement {
            dimension: 4,
            parameter: ParameterDesc::FormalT,
            walls: formal_table(name)?,
        }),
        _ => Err(Error::Precondition(format!(
            "{name:?} is not available in formal-t mode"
        ))),
    }
}

/// Exact arrangement at `t^2 = t_squared`. Checks the parameter constraints
/// of the fixed built-ins and that every wall is space-like there.
pub fn builtin_exact(name: Builtin, t_squared: &FieldElem) -> Result<Arrangement<ParamScalar>> {
    if name == Builtin::Cuboctahedron {
        return cuboctahedron_limit();
    }
    if !t_squared.sign().is_positive() {
        return Err(Error::Precondition(format!(
            "t^2 must be positive, got {t_squared}"
        )));
    }
    check_builtin_parameter(name, t_squared)?;
    let walls: Vec<(WallLabel, MinkVector<ParamScalar>)> = formal_table(name)?
        .into_iter()
        .map(|(l, v)| (l, v.map(|p| p.eval(t_squared))))
        .collect();
    for (label, vector) in &walls {
        if classify_vector(vector)? != VectorClass::SpaceLike {
            return Err(Error::Precondition(format!(
                "wall {label} is not space-like at t^2 = {t_squared}"
            )));
        }
    }
    Ok(Arrangement {
        dimension: 4,
        parameter: ParameterDesc::ExactTSquared(t_squared.clone()),
        walls,
    })
}

/// Float arrangement at the given `t > 0`.
pub fn builtin_float(name: Builtin, t: f64) -> Result<Arrangement<f64>> {
    if name == Builtin::Cuboctahedron {
        let exact = cuboctahedron_limit()?;
        return Ok(Arrangement {
            dimension: exact.dimension,
            parameter: ParameterDesc::NotApplicable,
            walls: exact
                .walls
                .into_iter()
                .map(|(l, v)| (l, v.map(|x| x.to_f64())))
                .collect(),
        });
    }
    if !(t > 0.0) {
        return Err(Error::Precondition(format!("t must be positive, got {t}")));
    }
    if matches!(name, Builtin::P24 | Builtin::Gamma22) && (t - 1.0).abs() > 1e-12 {
        return Err(Error::Precondition(format!("{name:?} exists only at t = 1")));
    }
    if name == Builtin::L6 && (t * t - 0.6).abs() > 1e-12 {
        return Err(Error::Precondition("L6 requires t = sqrt(3/5)".into()));
    }
    Ok(Arrangement {
        dimension: 4,
        parameter: ParameterDesc::Float(t),
        walls: formal_table(name)?
            .into_iter()
            .map(|(l, v)| (l, v.map(|p| p.eval_f64(t))))
            .collect(),
    })
}

/// Shorthand for the 24-cell at `t = 1`.
pub fn p24() -> Arrangement<ParamScalar> {
    builtin_exact(Builtin::P24, &FieldElem::one()).expect("24-cell table is space-like at t = 1")
}

/// Shorthand for the 22-wall group at `t = 1`.
pub fn gamma22() -> Arrangement<ParamScalar> {
    builtin_exact(Builtin::Gamma22, &FieldElem::one()).expect("22-wall table is space-like at t = 1")
}

/// The algebraic cuboctahedron limit of the family as `t -> 0`: positive
/// walls rescaled by `t` collapse onto `+-e4` and are discarded with the
/// collapsed direction, leaving the 6 letter and 8 negative walls inside the
/// Minkowski space orthogonal to `e4`. Every surviving wall is checked to be
/// orthogonal to `e4` before the coordinate is dropped.
pub fn cuboctahedron_limit() -> Result<Arrangement<ParamScalar>> {
    let zero = FieldElem::zero();
    let mut walls = Vec::with_capacity(14);
    for (label, vector) in tables::family22() {
        // Evaluate coordinates at t = 0 after rescaling: positive walls carry
        // a 1/t pole, so multiply by t; everything else is evaluated directly.
        let rescaled: Vec<FieldElem> = vector
            .coords
            .iter()
            .map(|p| {
                let p = if matches!(label, WallLabel::Positive(_)) {
                    p.mul(&LaurentParam::t())
                } else {
                    p.clone()
                };
                // constant term = value at t = 0 for polynomials without poles
                p.terms()
                    .filter(|(e, _)| *e == 0)
                    .map(|(_, c)| c.clone())
                    .next()
                    .unwrap_or_else(FieldElem::zero)
            })
            .collect();
        if matches!(label, WallLabel::Positive(_)) {
            // The rescaled positive walls limit to +-e4; they all describe
            // the collapsed hyperplane and drop out of the arrangement.
            debug_assert!(rescaled[..4].iter().all(|c| c.is_zero()));
            continue;
        }
        if rescaled[4] != zero {
            return Err(Error::Internal(format!(
                "limit wall {label} is not orthogonal to e4"
            )));
        }
        let reduced: Vec<ParamScalar> = rescaled[..4]
            .iter()
            .map(|c| ParamScalar::from_field(c.clone()))
            .collect();
        walls.push((label, MinkVector::new(reduced)));
    }
    Ok(Arrangement {
        dimension: 3,
        parameter: ParameterDesc::NotApplicable,
        walls,
    })
}

/// Exact `t^2` for the discrete family member with `nu(t) = n`:
/// `t^2 = cos^2(pi/n) / (2 - cos^2(pi/n))`. Exact for the `n` whose
/// `cos^2(pi/n)` lies in F, i.e. `n` in `{3, 4, 5, 6, 8}`; use
/// [`t_for_n_float`] otherwise.
pub fn t_for_n(n: u32) -> Result<FieldElem> {
    let cos_sq = match n {
        3..=6 => cos_sq_pi_over(n),
        // cos^2(pi/8) = (2 + sqrt2)/4
        8 => FieldElem::from_int(2)
            .add(&FieldElem::sqrt2())
            .scale(&num_rational::BigRational::new(1.into(), 4.into())),
        _ => {
            return Err(Error::Precondition(format!(
                "t_for_n is exact only for n in {{3,4,5,6,8}}, got {n}; use the float mode"
            )))
        }
    };
    cos_sq.div(&FieldElem::from_int(2).sub(&cos_sq))
}

/// Float `t` with `nu(t) = n`, any `n >= 3`.
pub fn t_for_n_float(n: u32) -> Result<f64> {
    if n < 3 {
        return Err(Error::Precondition("n must be at least 3".into()));
    }
    let c = (std::f64::consts::PI / n as f64).cos().powi(2);
    Ok((c / (2.0 - c)).sqrt())
}

/// All unordered pair relations of an arrangement.
#[derive(Debug, Clone)]
pub struct RelationMatrix<S> {
    pub labels: Vec<WallLabel>,
    /// Upper-triangular entries, `i < j`, in row-major order.
    pub entries: Vec<((usize, usize), PairRelation<S>)>,
}

impl<S: Clone> RelationMatrix<S> {
    pub fn get(&self, i: usize, j: usize) -> Option<&PairRelation<S>> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.entries
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, rel)| rel)
    }

    pub fn counts(&self) -> std::collections::BTreeMap<&'static str, usize> {
        let mut out = std::collections::BTreeMap::new();
        for (_, rel) in &self.entries {
            *out.entry(rel.code()).or_insert(0) += 1;
        }
        out
    }

    pub fn count_of(&self, code: &str) -> usize {
        self.entries.iter().filter(|(_, rel)| rel.code() == code).count()
    }
}

/// Classifies every unordered pair of walls.
pub fn relation_matrix<S: SignedScalar>(arr: &Arrangement<S>) -> Result<RelationMatrix<S>> {
    let mut entries = Vec::with_capacity(arr.len() * (arr.len().saturating_sub(1)) / 2);
    for i in 0..arr.len() {
        for j in (i + 1)..arr.len() {
            let rel = crate::minkowski::pair_relation(&arr.walls[i].1, &arr.walls[j].1)?;
            entries.push(((i, j), rel));
        }
    }
    Ok(RelationMatrix { labels: arr.labels(), entries })
}

/// Edge decoration of a Coxeter diagram. Orthogonal pairs carry no edge.
#[derive(Debug, Clone, PartialEq)]
pub enum EdgeKind<S> {
    AnglePiOver(u32),
    GenericAngle { cos_sq: S, cos_sign: Sign },
    Tangent,
    Ultraparallel { cosh_sq: S },
}

/// Labeled graph over the walls; exactly one relation per unordered pair,
/// consistent with the relation matrix.
#[derive(Debug, Clone)]
pub struct CoxeterDiagram<S> {
    pub vertices: Vec<WallLabel>,
    pub edges: Vec<(usize, usize, EdgeKind<S>)>,
}

impl<S> CoxeterDiagram<S> {
    /// True when every edge is `pi/m`, tangency, or ultraparallel, i.e. the
    /// arrangement generates a reflection group with these walls.
    pub fn is_reflective(&self) -> bool {
        !self
            .edges
            .iter()
            .any(|(_, _, kind)| matches!(kind, EdgeKind::GenericAngle { .. }))
    }
}

/// Builds the Coxeter diagram from the pair relations.
pub fn coxeter_diagram<S: SignedScalar>(arr: &Arrangement<S>) -> Result<CoxeterDiagram<S>> {
    let matrix = relation_matrix(arr)?;
    let mut edges = Vec::new();
    for ((i, j), rel) in matrix.entries {
        let kind = match rel {
            PairRelation::Orthogonal => continue,
            PairRelation::AnglePiOver(k) => EdgeKind::AnglePiOver(k),
            PairRelation::GenericAngle { cos_sq, cos_sign } => {
                EdgeKind::GenericAngle { cos_sq, cos_sign }
            }
            PairRelation::TangentAtInfinity => EdgeKind::Tangent,
            PairRelation::Ultraparallel { cosh_sq } => EdgeKind::Ultraparallel { cosh_sq },
            PairRelation::Diverging => {
                return Err(Error::Precondition(format!(
                    "walls {} and {} have a negative normalized pairing beyond -1; \
                     flip one of the half-space orientations",
                    matrix.labels[i], matrix.labels[j]
                )))
            }
        };
        edges.push((i, j, kind));
    }
    Ok(CoxeterDiagram { vertices: matrix.labels, edges })
}

/// Ideal vertex of an arrangement: a light-like direction, the walls through
/// it, and the rank of its parabolic stabilizer part.
#[derive(Debug, Clone)]
pub struct IdealVertexRecord {
    pub vertex: MinkVector<ParamScalar>,
    pub incident: Vec<WallLabel>,
    pub cusp_rank: usize,
}

/// Ideal-vertex census against the built-in candidate list (the 24 light-like
/// vectors for the 4-dimensional systems, 12 for the cuboctahedron). A
/// candidate produces a record when the walls through it contain a parabolic
/// part, i.e. when its cusp rank is at least 1.
pub fn ideal_vertices(arr: &Arrangement<ParamScalar>) -> Result<Vec<IdealVertexRecord>> {
    let candidates = match arr.dimension {
        4 => vertex_candidates_dim4(),
        3 => vertex_candidates_dim3(),
        d => {
            return Err(Error::Precondition(format!(
                "no built-in vertex candidates in dimension {d}; supply candidates explicitly"
            )))
        }
    };
    let param_candidates: Vec<MinkVector<ParamScalar>> = candidates
        .into_iter()
        .map(|v| v.map(|c| ParamScalar::from_field(c.clone())))
        .collect();
    ideal_vertices_with_candidates(arr, &param_candidates)
}

/// Ideal-vertex census for a caller-supplied candidate list.
pub fn ideal_vertices_with_candidates(
    arr: &Arrangement<ParamScalar>,
    candidates: &[MinkVector<ParamScalar>],
) -> Result<Vec<IdealVertexRecord>> {
    let mut records = Vec::new();
    for candidate in candidates {
        if classify_vector(candidate)? != VectorClass::LightLike {
            return Err(Error::Precondition(
                "vertex candidates must be light-like".into(),
            ));
        }
        let mut incident = Vec::new();
        for (label, wall) in &arr.walls {
            if mink_dot(candidate, wall)?.is_zero() {
                incident.push(*label);
            }
        }
        if incident.is_empty() {
            continue;
        }
        let vectors = arr.vectors_for(&incident)?;
        let cusp_rank = crate::vinberg::parabolic_rank_of_components(&vectors)?;
        if cusp_rank == 0 {
            continue;
        }
        records.push(IdealVertexRecord { vertex: candidate.clone(), incident, cusp_rank });
    }
    Ok(records)
}

/// Decides whether `(v, q) < 0` for every wall `q`, certifying convexity of
/// the half-space intersection around `v`. In formal mode the sign analysis
/// must hold identically for all `t > 0`; an inconclusive coefficient test is
/// reported as an error rather than guessed.
pub fn convexity_witness<S>(arr: &Arrangement<S>, v: &MinkVector<S>) -> Result<bool>
where
    S: ParamSignScalar,
{
    let norm = crate::minkowski::mink_norm_sq(v)?;
    let norm_sign = norm
        .sign_for_positive_t()
        .ok_or_else(|| Error::Precondition("indeterminate sign for the witness norm".into()))?;
    let time_sign = v.coords[0]
        .sign_for_positive_t()
        .ok_or_else(|| Error::Precondition("indeterminate sign for the witness direction".into()))?;
    if norm_sign != Sign::Negative || time_sign != Sign::Positive {
        return Err(Error::Precondition(
            "convexity witness must be time-like with positive time coordinate".into(),
        ));
    }
    for (label, wall) in &arr.walls {
        let pairing = mink_dot(v, wall)?;
        match pairing.sign_for_positive_t() {
            Some(Sign::Negative) => {}
            Some(_) => return Ok(false),
            None => {
                return Err(Error::Precondition(format!(
                    "sign of (v, {label}) is not uniform in t; refine the witness"
                )))
            }
        }
    }
    Ok(true)
}
