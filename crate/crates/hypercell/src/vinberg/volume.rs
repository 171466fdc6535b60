//! Vinberg's finite-volume criterion.
//!
//! In `H^n` an edge of the Coxeter polytope corresponds to an elliptic
//! subdiagram on `n-1` walls, a finite vertex to an elliptic subdiagram on
//! `n` walls, and a cusp to a pure parabolic subdiagram of rank `n-1`. The
//! polytope has finite volume exactly when every edge terminates on both
//! ends, each end being a finite vertex or a cusp containing the edge.

use std::collections::{BTreeSet, HashMap};

use crate::arrangement::{relation_matrix, Arrangement, WallLabel};
use crate::error::{Error, Result};
use crate::minkowski::{MinkVector, PairRelation};
use crate::scalar::SignedScalar;

use super::gram::{
    all_components_singular, gram_matrix, is_positive_definite, is_positive_semidefinite,
    parabolic_component_rank,
};

/// Verdict of the finite-volume audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumeStatus {
    FiniteVolume,
    InfiniteVolume,
}

impl std::fmt::Display for VolumeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VolumeStatus::FiniteVolume => write!(f, "FiniteVolume"),
            VolumeStatus::InfiniteVolume => write!(f, "InfiniteVolume"),
        }
    }
}

/// Result of the edge/vertex/cusp audit.
#[derive(Debug, Clone)]
pub struct VolumeVerdict {
    pub status: VolumeStatus,
    /// Distinct elliptic `n`-subsets arising as edge ends.
    pub finite_vertices: Vec<BTreeSet<WallLabel>>,
    /// Distinct maximal pure parabolic rank-`(n-1)` subdiagrams arising as
    /// edge ends.
    pub cusp_vertices: Vec<BTreeSet<WallLabel>>,
    /// Edges (elliptic `(n-1)`-subsets) whose end count is not two.
    pub bad_edges: Vec<BTreeSet<WallLabel>>,
    /// Number of edges audited.
    pub edge_count: usize,
    /// Total number of finite edge-ends (vertex valences sum to this).
    pub finite_edge_end_count: usize,
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Cached Gram-classification answers for subsets of one arrangement.
struct SubsetOracle<'a, S> {
    vectors: Vec<&'a MinkVector<S>>,
    pd: HashMap<Vec<usize>, bool>,
    cusp: HashMap<Vec<usize>, Option<usize>>,
}

impl<'a, S: SignedScalar> SubsetOracle<'a, S> {
    fn new(arr: &'a Arrangement<S>) -> Self {
        SubsetOracle {
            vectors: arr.walls.iter().map(|(_, v)| v).collect(),
            pd: HashMap::new(),
            cusp: HashMap::new(),
        }
    }

    fn gram(&self, idx: &[usize]) -> Result<Vec<Vec<S>>> {
        let picked: Vec<MinkVector<S>> = idx.iter().map(|&i| self.vectors[i].clone()).collect();
        gram_matrix(&picked)
    }

    fn is_elliptic(&mut self, idx: &[usize]) -> Result<bool> {
        if let Some(&hit) = self.pd.get(idx) {
            return Ok(hit);
        }
        let answer = is_positive_definite(&self.gram(idx)?)?;
        self.pd.insert(idx.to_vec(), answer);
        Ok(answer)
    }

    /// `Some(rank)` when the subset is a pure parabolic diagram (PSD, not PD,
    /// every component singular); the rank is the component-rank sum.
    fn pure_parabolic_rank(&mut self, idx: &[usize]) -> Result<Option<usize>> {
        if let Some(hit) = self.cusp.get(idx) {
            return Ok(*hit);
        }
        let g = self.gram(idx)?;
        let answer = if is_positive_definite(&g)? || !is_positive_semidefinite(&g)? {
            None
        } else if all_components_singular(&g)? {
            Some(parabolic_component_rank(&g)?)
        } else {
            None
        };
        self.cusp.insert(idx.to_vec(), answer);
        Ok(answer)
    }
}

/// Runs the audit, rejecting arrangements with unrecognized intersection
/// angles (the verdict would not describe a reflection group).
pub fn finite_volume_check<S: SignedScalar>(arr: &Arrangement<S>) -> Result<VolumeVerdict> {
    finite_volume_check_impl(arr, true)
}

/// The same combinatorial audit without the reflectivity precondition.
/// The definiteness bookkeeping only uses squared pairings, so the audit is
/// meaningful for any parameter; the verdict then describes the polytope cut
/// out by the walls rather than a reflection-group fundamental domain.
pub fn finite_volume_check_relaxed<S: SignedScalar>(arr: &Arrangement<S>) -> Result<VolumeVerdict> {
    finite_volume_check_impl(arr, false)
}

fn finite_volume_check_impl<S: SignedScalar>(
    arr: &Arrangement<S>,
    require_reflective: bool,
) -> Result<VolumeVerdict> {
    let n = arr.dimension;
    if arr.len() < n {
        return Err(Error::Precondition(
            "arrangement has fewer walls than the dimension".into(),
        ));
    }
    let matrix = relation_matrix(arr)?;
    if require_reflective {
        for ((i, j), rel) in &matrix.entries {
            if matches!(rel, PairRelation::GenericAngle { .. }) {
                return Err(Error::NotReflective(
                    matrix.labels[*i].to_string(),
                    matrix.labels[*j].to_string(),
                ));
            }
        }
    }

    // A wall can join a PSD subdiagram only if it is not ultraparallel or
    // diverging to any member (such a pair alone is already indefinite).
    let compatible_pair = |i: usize, j: usize| -> bool {
        i == j
            || !matches!(
                matrix.get(i, j),
                Some(PairRelation::Ultraparallel { .. }) | Some(PairRelation::Diverging) | None
            )
    };

    let mut oracle = SubsetOracle::new(arr);
    let labels = |idx: &BTreeSet<usize>| -> BTreeSet<WallLabel> {
        idx.iter().map(|&i| arr.walls[i].0).collect()
    };

    // Edges: elliptic subsets of size n-1.
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for idx in subsets_of_size(arr.len(), n - 1) {
        if oracle.is_elliptic(&idx)? {
            edges.push(idx);
        }
    }

    let mut finite_vertices: BTreeSet<BTreeSet<WallLabel>> = BTreeSet::new();
    let mut cusp_vertices: BTreeSet<BTreeSet<WallLabel>> = BTreeSet::new();
    let mut bad_edges = Vec::new();
    let mut finite_edge_end_count = 0usize;

    for edge in &edges {
        // Finite ends: elliptic n-subsets containing the edge.
        let mut finite_ends = 0usize;
        for w in 0..arr.len() {
            if edge.contains(&w) {
                continue;
            }
            let mut idx = edge.clone();
            idx.push(w);
            idx.sort_unstable();
            if oracle.is_elliptic(&idx)? {
                finite_ends += 1;
                finite_vertices.insert(labels(&idx.iter().copied().collect()));
            }
        }

        // Cusp ends: pure parabolic rank-(n-1) subdiagrams containing the
        // edge. Candidate extensions form cliques of the pairwise
        // compatibility relation over the walls compatible with the edge.
        let compatible: Vec<usize> = (0..arr.len())
            .filter(|&w| !edge.contains(&w) && edge.iter().all(|&e| compatible_pair(e, w)))
            .collect();
        let mut found: Vec<BTreeSet<usize>> = Vec::new();
        let mut extension: Vec<usize> = Vec::new();
        collect_parabolic_supersets(
            &mut oracle,
            edge,
            &compatible,
            0,
            &mut extension,
            &compatible_pair,
            n - 1,
            &mut found,
        )?;
        let maximal: Vec<&BTreeSet<usize>> = found
            .iter()
            .filter(|s| !found.iter().any(|t| *s != t && s.is_subset(t)))
            .collect();
        let mut cusp_ends = 0usize;
        for s in maximal {
            cusp_ends += 1;
            cusp_vertices.insert(labels(s));
        }

        finite_edge_end_count += finite_ends;
        if finite_ends + cusp_ends != 2 {
            bad_edges.push(labels(&edge.iter().copied().collect()));
        }
    }

    let status = if bad_edges.is_empty() {
        VolumeStatus::FiniteVolume
    } else {
        VolumeStatus::InfiniteVolume
    };
    Ok(VolumeVerdict {
        status,
        finite_vertices: finite_vertices.into_iter().collect(),
        cusp_vertices: cusp_vertices.into_iter().collect(),
        bad_edges,
        edge_count: edges.len(),
        finite_edge_end_count,
    })
}

#[allow(clippy::too_many_arguments)]
fn collect_parabolic_supersets<S: SignedScalar>(
    oracle: &mut SubsetOracle<S>,
    edge: &[usize],
    compatible: &[usize],
    start: usize,
    extension: &mut Vec<usize>,
    compatible_pair: &impl Fn(usize, usize) -> bool,
    target_rank: usize,
    found: &mut Vec<BTreeSet<usize>>,
) -> Result<()> {
    if !extension.is_empty() {
        let mut idx: Vec<usize> = edge.iter().chain(extension.iter()).copied().collect();
        idx.sort_unstable();
        if oracle.pure_parabolic_rank(&idx)? == Some(target_rank) {
            found.push(idx.into_iter().collect());
        }
    }
    for pos in start..compatible.len() {
        let w = compatible[pos];
        if extension.iter().all(|&e| compatible_pair(e, w)) {
            extension.push(w);
            collect_parabolic_supersets(
                oracle,
                edge,
                compatible,
                pos + 1,
                extension,
                compatible_pair,
                target_rank,
                found,
            )?;
            extension.pop();
        }
    }
    Ok(())
}
