//! Exact definiteness tests on raw Gram matrices.
//!
//! Definiteness of the normalized Gram matrix (unit diagonal) is equivalent
//! to definiteness of the raw matrix `G_ij = (q_i, q_j)`, which is `D G' D`
//! for `D = diag(|q_i|)`; so everything is decided on the raw pairings and
//! no square roots of norms are ever taken. Positive definiteness uses the
//! leading-principal-minor test; semidefiniteness checks every principal
//! minor, since the leading-minor test is invalid for it.

use crate::error::Result;
use crate::minkowski::{mink_dot, MinkVector};
use crate::scalar::{Sign, SignedScalar};

/// Classification of a wall subset by the definiteness of its Gram matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdiagramClass {
    /// Positive definite: the walls bound a spherical (finite) isotropy cone.
    Elliptic,
    /// Positive semidefinite but not definite; the payload is the total rank
    /// `sum (size - 1)` over the singular (parabolic) connected components.
    Parabolic(usize),
    /// Neither: the subset is hyperbolic or worse.
    Indefinite,
}

/// Raw Gram matrix of a wall family.
pub fn gram_matrix<S: SignedScalar>(walls: &[MinkVector<S>]) -> Result<Vec<Vec<S>>> {
    let n = walls.len();
    let mut g = vec![vec![S::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let d = mink_dot(&walls[i], &walls[j])?;
            g[i][j] = d.clone();
            g[j][i] = d;
        }
    }
    Ok(g)
}

/// Exact determinant by Gaussian elimination with division.
pub fn determinant<S: SignedScalar>(matrix: &[Vec<S>]) -> Result<S> {
    let n = matrix.len();
    let mut m: Vec<Vec<S>> = matrix.to_vec();
    let mut det = S::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(S::zero());
        };
        if pivot != col {
            m.swap(col, pivot);
            det = det.neg();
        }
        det = det.mul(&m[col][col]);
        let inv = m[col][col].inv()?;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].mul(&inv);
            for c in col..n {
                let delta = factor.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
    }
    Ok(det)
}

fn principal_submatrix<S: Clone>(g: &[Vec<S>], idx: &[usize]) -> Vec<Vec<S>> {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| g[i][j].clone()).collect())
        .collect()
}

/// Sylvester test: all leading principal minors positive.
pub fn is_positive_definite<S: SignedScalar>(g: &[Vec<S>]) -> Result<bool> {
    for k in 1..=g.len() {
        let idx: Vec<usize> = (0..k).collect();
        let minor = determinant(&principal_submatrix(g, &idx))?;
        if minor.sign() != Sign::Positive {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact positive-semidefiniteness: every principal minor is nonnegative.
pub fn is_positive_semidefinite<S: SignedScalar>(g: &[Vec<S>]) -> Result<bool> {
    let n = g.len();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let minor = determinant(&principal_submatrix(g, &idx))?;
        if minor.sign() == Sign::Negative {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Connected components of the diagram underlying a Gram matrix; two walls
/// are adjacent when their pairing is nonzero.
pub fn components<S: SignedScalar>(g: &[Vec<S>]) -> Vec<Vec<usize>> {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut component = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            component.push(v);
            for w in 0..n {
                if !seen[w] && !g[v][w].is_zero() {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        component.sort_unstable();
        out.push(component);
    }
    out
}

/// Total parabolic rank: `sum (size - 1)` over the singular connected
/// components of a positive-semidefinite Gram matrix. Nonsingular (elliptic)
/// components contribute nothing.
pub fn parabolic_component_rank<S: SignedScalar>(g: &[Vec<S>]) -> Result<usize> {
    let mut rank = 0usize;
    for component in components(g) {
        let sub = principal_submatrix(g, &component);
        if determinant(&sub)?.is_zero() {
            rank += component.len() - 1;
        }
    }
    Ok(rank)
}

/// Full classification of a wall family by Gram definiteness. A
/// semidefinite, non-definite family is reported as `Parabolic` with the
/// summed rank of its singular components; an elliptic component alongside
/// (a cone direction) is allowed and contributes no rank.
pub fn classify_vectors<S: SignedScalar>(walls: &[MinkVector<S>]) -> Result<SubdiagramClass> {
    let g = gram_matrix(walls)?;
    if is_positive_definite(&g)? {
        return Ok(SubdiagramClass::Elliptic);
    }
    if !is_positive_semidefinite(&g)? {
        return Ok(SubdiagramClass::Indefinite);
    }
    Ok(SubdiagramClass::Parabolic(parabolic_component_rank(&g)?))
}

/// True when every connected component is singular, i.e. the family is a
/// pure parabolic diagram (assuming it is already known to be PSD and not
/// PD). Cusp detection in the volume criterion requires purity.
pub fn all_components_singular<S: SignedScalar>(g: &[Vec<S>]) -> Result<bool> {
    for component in components(g) {
        let sub = principal_submatrix(g, &component);
        if !determinant(&sub)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldElem;

    fn fe(n: i64, d: i64) -> FieldElem {
        FieldElem::from_ratio(n, d)
    }

    #[test]
    fn determinant_matches_hand_computation() {
        let m = vec![
            vec![fe(1, 1), fe(2, 1), fe(3, 1)],
            vec![fe(4, 1), fe(5, 1), fe(6, 1)],
            vec![fe(7, 1), fe(8, 1), fe(10, 1)],
        ];
        assert_eq!(determinant(&m).unwrap(), fe(-3, 1));
        let singular = vec![
            vec![fe(1, 1), fe(2, 1)],
            vec![fe(2, 1), fe(4, 1)],
        ];
        assert!(determinant(&singular).unwrap().is_zero());
    }

    #[test]
    fn psd_needs_all_principal_minors() {
        // diag(0, -1) has leading minors 0, 0 but is not PSD.
        let m = vec![
            vec![fe(0, 1), fe(0, 1)],
            vec![fe(0, 1), fe(-1, 1)],
        ];
        assert!(!is_positive_semidefinite(&m).unwrap());
        assert!(!is_positive_definite(&m).unwrap());
        // The Euclidean-triangle Gram [[1,-1/2,-1/2],[-1/2,1,-1/2],[-1/2,-1/2,1]]
        // is PSD, singular, connected: parabolic of rank 2.
        let h = fe(-1, 2);
        let tri = vec![
            vec![fe(1, 1), h.clone(), h.clone()],
            vec![h.clone(), fe(1, 1), h.clone()],
            vec![h.clone(), h.clone(), fe(1, 1)],
        ];
        assert!(is_positive_semidefinite(&tri).unwrap());
        assert!(!is_positive_definite(&tri).unwrap());
        assert_eq!(parabolic_component_rank(&tri).unwrap(), 2);
    }
}
