//! The arithmeticity cycle criterion for noncompact finite-volume reflection
//! groups.
//!
//! Each diagram edge is labeled with `-2` times the normalized Minkowski
//! pairing of the unit wall vectors: `2 cos(pi/m)` for an angle edge, `2` for
//! tangency, `2 cosh(d)` for an ultraparallel pair. The group is arithmetic
//! exactly when every closed cycle without repeated vertices (going back and
//! forth along one edge counts) has an integer label product.
//!
//! Labels can be irrational, so products are handled through their squares:
//! the squared label `4 c^2` of every edge of the built-ins lies in F. A
//! back-and-forth 2-cycle product equals the squared label itself and must be
//! a rational integer; a longer cycle product is a nonnegative real whose
//! square lies in F, and it is a rational integer exactly when that square is
//! a perfect-square rational integer.

use std::collections::BTreeMap;

use crate::arrangement::{Arrangement, WallLabel};
use crate::error::{Error, Result};
use crate::minkowski::{mink_dot, mink_norm_sq, PairRelation};
use crate::scalar::{rational_sqrt, FieldElem, ParamScalar};

use super::volume::{finite_volume_check, VolumeStatus};

/// Arithmetic or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithmeticityVerdict {
    Arithmetic,
    NonArithmetic,
}

impl std::fmt::Display for ArithmeticityVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArithmeticityVerdict::Arithmetic => write!(f, "Arithmetic"),
            ArithmeticityVerdict::NonArithmetic => write!(f, "NonArithmetic"),
        }
    }
}

/// One labeled edge of the cycle graph.
#[derive(Debug, Clone)]
pub struct EdgeLabel {
    pub walls: (WallLabel, WallLabel),
    pub relation: PairRelation<ParamScalar>,
    /// Exact squared label `4 (q_i, q_j)^2 / ((q_i,q_i)(q_j,q_j))`.
    pub label_squared: FieldElem,
}

/// A cycle whose label product is not a rational integer.
#[derive(Debug, Clone)]
pub struct FailingCycle {
    /// Vertices in cycle order; the closing edge back to the first is implied.
    /// A 2-element cycle means back-and-forth along a single edge.
    pub walls: Vec<WallLabel>,
    /// Exact square of the label product.
    pub product_squared: FieldElem,
}

/// Outcome of the cycle criterion.
#[derive(Debug, Clone)]
pub struct ArithmeticityReport {
    pub verdict: ArithmeticityVerdict,
    pub edge_labels: Vec<EdgeLabel>,
    pub failing_cycles: Vec<FailingCycle>,
    pub cycle_count: usize,
}

fn is_rational_integer(x: &FieldElem) -> bool {
    x.is_integer()
}

fn is_perfect_square_integer(x: &FieldElem) -> bool {
    match x.as_rational() {
        Some(r) if r.denom() == &num_bigint::BigInt::from(1) => match rational_sqrt(r) {
            Some(root) => root.denom() == &num_bigint::BigInt::from(1),
            None => false,
        },
        _ => false,
    }
}

/// Undirected simple cycles (length >= 3) of a small graph, each reported
/// once with its smallest vertex first and a fixed orientation.
fn simple_cycles(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adjacency.len();
    let mut cycles = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn dfs(
        root: usize,
        v: usize,
        adjacency: &[Vec<usize>],
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        for &w in &adjacency[v] {
            if w == root && path.len() >= 3 {
                // Each cycle appears in two orientations; keep one.
                if path[1] < path[path.len() - 1] {
                    cycles.push(path.clone());
                }
            } else if w > root && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                dfs(root, w, adjacency, path, on_path, cycles);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    for root in 0..n {
        path.clear();
        path.push(root);
        on_path.fill(false);
        on_path[root] = true;
        dfs(root, root, adjacency, &mut path, &mut on_path, &mut cycles);
        on_path[root] = false;
    }
    cycles
}

/// Applies the cycle criterion. Precondition: the arrangement passes the
/// finite-volume audit (the criterion is stated for noncompact finite-volume
/// Coxeter polytopes, whose adjoint trace field is Q).
pub fn arithmeticity_check(arr: &Arrangement<ParamScalar>) -> Result<ArithmeticityReport> {
    if arr.len() > 16 {
        return Err(Error::Precondition(
            "cycle enumeration is only run for diagrams with at most 16 walls".into(),
        ));
    }
    let verdict = finite_volume_check(arr)?;
    if verdict.status != VolumeStatus::FiniteVolume {
        return Err(Error::Precondition(
            "arithmeticity criterion requires a finite-volume arrangement".into(),
        ));
    }

    let n = arr.len();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edge_labels = Vec::new();
    let mut label_squared: BTreeMap<(usize, usize), FieldElem> = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let qi = &arr.walls[i].1;
            let qj = &arr.walls[j].1;
            let relation = crate::minkowski::pair_relation(qi, qj)?;
            if matches!(relation, PairRelation::Orthogonal) {
                continue;
            }
            let dot = mink_dot(qi, qj)?;
            let c_sq = dot
                .mul(&dot)
                .div(&mink_norm_sq(qi)?.mul(&mink_norm_sq(qj)?))?;
            let four_c_sq = c_sq.mul(&ParamScalar::from_int(4));
            let value = four_c_sq.as_field().cloned().ok_or_else(|| {
                Error::Precondition(format!(
                    "squared edge label of {{{}, {}}} does not lie in the base field",
                    arr.walls[i].0, arr.walls[j].0
                ))
            })?;
            adjacency[i].push(j);
            adjacency[j].push(i);
            label_squared.insert((i, j), value.clone());
            edge_labels.push(EdgeLabel {
                walls: (arr.walls[i].0, arr.walls[j].0),
                relation,
                label_squared: value,
            });
        }
    }

    let squared_of = |a: usize, b: usize| -> &FieldElem {
        let key = if a < b { (a, b) } else { (b, a) };
        &label_squared[&key]
    };

    let mut failing = Vec::new();
    let mut cycle_count = 0usize;

    // 2-cycles: back and forth along one edge; product = squared label.
    for (&(i, j), value) in &label_squared {
        cycle_count += 1;
        if !is_rational_integer(value) {
            failing.push(FailingCycle {
                walls: vec![arr.walls[i].0, arr.walls[j].0],
                product_squared: value.square(),
            });
        }
    }

    // Longer simple cycles: the squared product must be a perfect-square
    // rational integer for the (positive) product to be an integer.
    for cycle in simple_cycles(&adjacency) {
        cycle_count += 1;
        let mut product_squared = FieldElem::one();
        for k in 0..cycle.len() {
            let a = cycle[k];
            let b = cycle[(k + 1) % cycle.len()];
            product_squared = product_squared.mul(squared_of(a, b));
        }
        if !is_perfect_square_integer(&product_squared) {
            failing.push(FailingCycle {
                walls: cycle.iter().map(|&v| arr.walls[v].0).collect(),
                product_squared,
            });
        }
    }

    let verdict = if failing.is_empty() {
        ArithmeticityVerdict::Arithmetic
    } else {
        ArithmeticityVerdict::NonArithmetic
    };
    Ok(ArithmeticityReport { verdict, edge_labels, failing_cycles: failing, cycle_count })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square_integer_test() {
        assert!(is_perfect_square_integer(&FieldElem::from_int(49)));
        assert!(!is_perfect_square_integer(&FieldElem::from_int(48)));
        assert!(!is_perfect_square_integer(&FieldElem::from_ratio(1, 4)));
        assert!(!is_perfect_square_integer(&FieldElem::sqrt2()));
    }

    #[test]
    fn cycle_enumeration_counts_triangle_with_chord() {
        // K4 minus one edge: vertices 0-1-2-3, edges 01,02,03,12,13.
        let adjacency = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1], vec![0, 1]];
        let cycles = simple_cycles(&adjacency);
        // Triangles 012, 013 and the quadrilateral 0-2-1-3.
        assert_eq!(cycles.len(), 3);
    }
}
