//! Symmetries of the built-in arrangements.
//!
//! `verify_symmetry` checks a candidate Minkowski isometry exactly against an
//! arrangement (walls are rays, so images must be positive multiples of
//! walls). `symmetry_group_report` enumerates the full symmetry group of the
//! 24-cell by brute force over orthonormal frames with entries in (1/2)Z.

use crate::error::{Error, Result};
use crate::minkowski::MinkVector;
use crate::scalar::{FieldElem, LaurentParam, ParamSignScalar, Scalar, Sign};

use super::labels::{Octet, WallLabel};
use super::Arrangement;

/// 5x5 matrix with entries in F, acting on `R^{1,4}`.
pub type IsometryMatrix = Vec<Vec<FieldElem>>;

fn identity_like(diag: [i64; 5]) -> IsometryMatrix {
    (0..5)
        .map(|i| {
            (0..5)
                .map(|j| if i == j { FieldElem::from_int(diag[i]) } else { FieldElem::zero() })
                .collect()
        })
        .collect()
}

fn coordinate_swap(a: usize, b: usize, signs: [i64; 2]) -> IsometryMatrix {
    let mut m = identity_like([1; 5]);
    m[a][a] = FieldElem::zero();
    m[b][b] = FieldElem::zero();
    m[a][b] = FieldElem::from_int(signs[0]);
    m[b][a] = FieldElem::from_int(signs[1]);
    m
}

/// `L`: swap spatial coordinates 1 and 2.
pub fn symmetry_l() -> IsometryMatrix {
    coordinate_swap(1, 2, [1, 1])
}

/// `M`: swap spatial coordinates 2 and 3.
pub fn symmetry_m() -> IsometryMatrix {
    coordinate_swap(2, 3, [1, 1])
}

/// `N`: swap spatial coordinates 2 and 3 while reversing their signs.
pub fn symmetry_n() -> IsometryMatrix {
    coordinate_swap(2, 3, [-1, -1])
}

/// The roll `R`: negate the last two coordinates.
pub fn symmetry_roll() -> IsometryMatrix {
    identity_like([1, 1, 1, -1, -1])
}

fn check_preserves_form(g: &IsometryMatrix, dim: usize) -> Result<()> {
    let n = dim + 1;
    if g.len() != n || g.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch(g.len(), n));
    }
    // (g^T J g)_{jk} = sum_i J_ii g_ij g_ik must equal J_jk.
    for j in 0..n {
        for k in 0..n {
            let mut acc = FieldElem::zero();
            for (i, row) in g.iter().enumerate() {
                let term = row[j].mul(&row[k]);
                acc = if i == 0 { acc.sub(&term) } else { acc.add(&term) };
            }
            let expected = if j != k {
                FieldElem::zero()
            } else if j == 0 {
                FieldElem::from_int(-1)
            } else {
                FieldElem::one()
            };
            if acc != expected {
                return Err(Error::Precondition(
                    "matrix does not preserve the Minkowski form".into(),
                ));
            }
        }
    }
    Ok(())
}

fn apply_matrix<S: Scalar>(g: &IsometryMatrix, v: &MinkVector<S>) -> MinkVector<S> {
    let coords = g
        .iter()
        .map(|row| {
            let mut acc = S::zero();
            for (j, entry) in row.iter().enumerate() {
                if !entry.is_zero() {
                    acc = acc.add(&S::from_field(entry).mul(&v.coords[j]));
                }
            }
            acc
        })
        .collect();
    MinkVector::new(coords)
}

fn match_wall<S: ParamSignScalar>(
    arr: &Arrangement<S>,
    image: &MinkVector<S>,
    source: WallLabel,
) -> Result<usize> {
    for (idx, (label, wall)) in arr.walls.iter().enumerate() {
        if !image.is_proportional_to(wall) {
            continue;
        }
        // Positive-scale test without division: the ratio lambda on any
        // nonzero coordinate has the sign of image_i * wall_i.
        let i = wall
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal("zero wall vector".into()))?;
        let product = image.coords[i].mul(&wall.coords[i]);
        match product.sign_for_positive_t() {
            Some(Sign::Positive) => return Ok(idx),
            Some(_) => {
                return Err(Error::Precondition(format!(
                    "image of wall {source} is a negative multiple of wall {label}; \
                     the map flips a half-space orientation"
                )))
            }
            None => {
                return Err(Error::Precondition(format!(
                    "scale sign between image of {source} and wall {label} is not uniform in t"
                )))
            }
        }
    }
    Err(Error::Precondition(format!(
        "image of wall {source} is not a wall of the arrangement"
    )))
}

/// Verifies that `g` (which must preserve the Minkowski form exactly) maps
/// every wall to a positive multiple of some wall, returning the induced
/// permutation as indices into the wall list. Works in formal-`t` mode, where
/// the match is an identity in `t`.
pub fn verify_symmetry<S: ParamSignScalar>(
    arr: &Arrangement<S>,
    g: &IsometryMatrix,
) -> Result<Vec<usize>> {
    verify_with_transform(arr, g, |v| v)
}

/// Same as [`verify_symmetry`], composing the matrix action with the
/// substitution `t -> 1/t`; this is how the roll symmetry acts on the family.
pub fn verify_symmetry_with_t_inversion(
    arr: &Arrangement<LaurentParam>,
    g: &IsometryMatrix,
) -> Result<Vec<usize>> {
    verify_with_transform(arr, g, |v| v.map(|p| p.invert_t()))
}

fn verify_with_transform<S: ParamSignScalar>(
    arr: &Arrangement<S>,
    g: &IsometryMatrix,
    transform: impl Fn(MinkVector<S>) -> MinkVector<S>,
) -> Result<Vec<usize>> {
    check_preserves_form(g, arr.dimension)?;
    let mut permutation = Vec::with_capacity(arr.len());
    for (label, wall) in &arr.walls {
        let image = transform(apply_matrix(g, wall));
        permutation.push(match_wall(arr, &image, *label)?);
    }
    Ok(permutation)
}

/// Orders computed by the brute-force enumeration of the 24-cell symmetries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryGroupReport {
    /// Order of the full symmetry group.
    pub order: usize,
    /// Order of the subgroup with integer matrix entries.
    pub integer_subgroup_order: usize,
    /// Order of the subgroup preserving each octet setwise and fixing or
    /// swapping the `G`, `H` walls.
    pub gh_stabilizer_order: usize,
}

/// Integer model of a symmetry candidate: the 4x4 spatial block scaled by 2,
/// so all entries are integers (either one `+-2` per column or four `+-1`).
type ScaledColumn = [i64; 4];

fn candidate_columns() -> Vec<ScaledColumn> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for s in [2i64, -2] {
            let mut c = [0i64; 4];
            c[i] = s;
            out.push(c);
        }
    }
    for s0 in [1i64, -1] {
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                for s3 in [1i64, -1] {
                    out.push([s0, s1, s2, s3]);
                }
            }
        }
    }
    out
}

fn dot(a: &ScaledColumn, b: &ScaledColumn) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Where a wall goes under the scaled matrix. Walls are identified by octet
/// type and integer data: numbered walls by their spatial sign vector,
/// letter walls by a signed axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SpatialWall {
    Numbered([i64; 4]),
    LetterAxis(usize, i64),
}

/// Image of a numbered wall with spatial signs `w` under `G2/2`;
/// `G2 w` has entries all `+-2` (numbered image) or a single `+-4` (letter
/// image), because the map permutes the wall rays of the 24-cell.
fn map_numbered(g2: &[ScaledColumn; 4], w: [i64; 4]) -> Option<SpatialWall> {
    let mut image = [0i64; 4];
    for (j, col) in g2.iter().enumerate() {
        for i in 0..4 {
            image[i] += col[i] * w[j];
        }
    }
    if image.iter().all(|x| x.abs() == 2) {
        Some(SpatialWall::Numbered([image[0] / 2, image[1] / 2, image[2] / 2, image[3] / 2]))
    } else {
        let nonzero: Vec<usize> = (0..4).filter(|&i| image[i] != 0).collect();
        if nonzero.len() == 1 && image[nonzero[0]].abs() == 4 {
            Some(SpatialWall::LetterAxis(nonzero[0], image[nonzero[0]].signum()))
        } else {
            None
        }
    }
}

/// Image of the letter wall on signed axis `(i, s)`: the column `s * c_i`,
/// which is `+-2 e_j` (letter image) or a `+-1` vector (numbered image).
fn map_letter(g2: &[ScaledColumn; 4], axis: usize, sign: i64) -> Option<SpatialWall> {
    let col = g2[axis];
    let image = [sign * col[0], sign * col[1], sign * col[2], sign * col[3]];
    if image.iter().all(|x| x.abs() == 1) {
        Some(SpatialWall::Numbered(image))
    } else {
        let nonzero: Vec<usize> = (0..4).filter(|&i| image[i] != 0).collect();
        if nonzero.len() == 1 && image[nonzero[0]].abs() == 2 {
            Some(SpatialWall::LetterAxis(nonzero[0], image[nonzero[0]].signum()))
        } else {
            None
        }
    }
}

fn numbered_octet(w: [i64; 4]) -> Octet {
    if w.iter().filter(|&&x| x < 0).count() % 2 == 0 {
        Octet::Positive
    } else {
        Octet::Negative
    }
}

/// Brute-force enumeration of the symmetry group of the hyperbolic 24-cell:
/// all orthogonal maps fixing `e0` and permuting the 24 ideal vertices.
/// Candidate columns are the 24 unit vectors with entries in (1/2)Z; frames
/// are assembled with orthogonality pruning and each resulting map is checked
/// to permute the vertex set `{+-e_i +- e_j}`.
pub fn symmetry_group_report() -> SymmetryGroupReport {
    let columns = candidate_columns();
    let vertices: Vec<ScaledColumn> = {
        let mut out = Vec::with_capacity(24);
        for i in 0..4 {
            for j in (i + 1)..4 {
                for si in [1i64, -1] {
                    for sj in [1i64, -1] {
                        let mut v = [0i64; 4];
                        v[i] = si;
                        v[j] = sj;
                        out.push(v);
                    }
                }
            }
        }
        out
    };
    let is_vertex = |v: &ScaledColumn| -> bool {
        let mut nonzero = 0;
        for x in v {
            match x.abs() {
                0 => {}
                2 => nonzero += 1,
                _ => return false,
            }
        }
        nonzero == 2
    };

    let mut order = 0usize;
    let mut integer_subgroup_order = 0usize;
    let mut gh_stabilizer_order = 0usize;

    let mut frame: Vec<ScaledColumn> = Vec::with_capacity(4);
    // Depth-first assembly of orthonormal frames.
    fn assemble(
        columns: &[ScaledColumn],
        frame: &mut Vec<ScaledColumn>,
        visit: &mut impl FnMut(&[ScaledColumn; 4]),
    ) {
        if frame.len() == 4 {
            let g2 = [frame[0], frame[1], frame[2], frame[3]];
            visit(&g2);
            return;
        }
        for c in columns {
            if frame.iter().all(|f| dot(f, c) == 0) {
                frame.push(*c);
                assemble(columns, frame, visit);
                frame.pop();
            }
        }
    }

    assemble(&columns, &mut frame, &mut |g2| {
        // The map must permute the vertex set.
        for v in &vertices {
            let mut image = [0i64; 4];
            for (j, col) in g2.iter().enumerate() {
                for i in 0..4 {
                    image[i] += col[i] * v[j];
                }
            }
            if !is_vertex(&image) {
                return;
            }
        }
        order += 1;
        let integral = g2.iter().all(|c| c.iter().all(|x| x % 2 == 0));
        if integral {
            integer_subgroup_order += 1;
        }

        // Octet action: the map must fix all three octets setwise to lie in
        // the kernel of the octet permutation action.
        let mut preserves_octets = true;
        for k in 0..8u8 {
            let s = super::tables::spatial_signs(k);
            let w = [s[0], s[1], s[2], 1];
            match map_numbered(g2, w) {
                Some(SpatialWall::Numbered(im)) => {
                    if numbered_octet(im) != numbered_octet(w) {
                        preserves_octets = false;
                        break;
                    }
                }
                Some(SpatialWall::LetterAxis(_, _)) => {
                    preserves_octets = false;
                    break;
                }
                None => unreachable!("vertex-preserving map must permute walls"),
            }
        }
        if preserves_octets {
            for axis in 0..4 {
                match map_letter(g2, axis, 1) {
                    Some(SpatialWall::LetterAxis(_, _)) => {}
                    _ => {
                        preserves_octets = false;
                        break;
                    }
                }
            }
        }
        // G, H are the letter walls on the e4 axis.
        let fixes_gh_pair = matches!(map_letter(g2, 3, 1), Some(SpatialWall::LetterAxis(3, _)));
        if preserves_octets && fixes_gh_pair {
            gh_stabilizer_order += 1;
        }
    });

    SymmetryGroupReport { order, integer_subgroup_order, gh_stabilizer_order }
}

#[cfg(test)]
mod tests {
    use super::super::{builtin_formal, Builtin};
    use super::*;

    #[test]
    fn generators_preserve_the_form() {
        for g in [symmetry_l(), symmetry_m(), symmetry_n(), symmetry_roll()] {
            check_preserves_form(&g, 4).unwrap();
        }
        let mut bad = symmetry_l();
        bad[0][0] = FieldElem::from_int(2);
        assert!(check_preserves_form(&bad, 4).is_err());
    }

    #[test]
    fn l_m_n_are_formal_symmetries_of_order_two() {
        let family = builtin_formal(Builtin::Family22).unwrap();
        for g in [symmetry_l(), symmetry_m(), symmetry_n()] {
            let p = verify_symmetry(&family, &g).unwrap();
            // order 2 and octet-preserving
            for (i, &pi) in p.iter().enumerate() {
                assert_eq!(p[pi], i);
                assert_eq!(family.walls[i].0.octet(), family.walls[pi].0.octet());
            }
        }
    }

    #[test]
    fn l_swaps_coordinate_12_walls_and_m_fixes_a() {
        let family = builtin_formal(Builtin::Family22).unwrap();
        let a = family.index_of(WallLabel::Letter('A')).unwrap();
        let b = family.index_of(WallLabel::Letter('B')).unwrap();
        // L swaps x1 and x2, hence the walls A and B (and E and F).
        let p = verify_symmetry(&family, &symmetry_l()).unwrap();
        assert_eq!(p[a], b);
        assert_eq!(p[b], a);
        // M and N act on x2, x3 and therefore fix wall A.
        for g in [symmetry_m(), symmetry_n()] {
            let p = verify_symmetry(&family, &g).unwrap();
            assert_eq!(p[a], a);
        }
    }

    #[test]
    fn identity_gives_identity_permutation() {
        let family = builtin_formal(Builtin::Family22).unwrap();
        let id = identity_like([1; 5]);
        let p = verify_symmetry(&family, &id).unwrap();
        assert!(p.iter().enumerate().all(|(i, &pi)| i == pi));
    }

    #[test]
    fn roll_with_t_inversion_swaps_octets() {
        let family = builtin_formal(Builtin::Family22).unwrap();
        let p = verify_symmetry_with_t_inversion(&family, &symmetry_roll()).unwrap();
        for (i, &pi) in p.iter().enumerate() {
            match family.walls[i].0.octet() {
                Octet::Positive => assert_eq!(family.walls[pi].0.octet(), Octet::Negative),
                Octet::Negative => assert_eq!(family.walls[pi].0.octet(), Octet::Positive),
                _ => assert_eq!(family.walls[pi].0.octet(), family.walls[i].0.octet()),
            }
        }
        // Without the t-inversion the roll is not a symmetry of the family.
        assert!(verify_symmetry(&family, &symmetry_roll()).is_err());
    }
}
