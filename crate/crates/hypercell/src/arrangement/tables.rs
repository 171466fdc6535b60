//! The wall tables, written once as vectors of Laurent polynomials in the
//! deformation parameter `t` and evaluated into exact or float backends on
//! demand.
//!
//! Numbered walls: `(sqrt2, s1, s2, s3, last)` where the spatial signs
//! `(s1,s2,s3)` follow the source table and the last coordinate is
//! `+-1/t` for the positive octet and `-+t` for the negative octet (sign
//! `+` for even indices, `-` for odd, flipped for the negatives). At `t = 1`
//! this is exactly the 24-cell table.

use crate::minkowski::MinkVector;
use crate::scalar::{FieldElem, LaurentParam};

use super::labels::WallLabel;

fn fe(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

fn lp_int(n: i64) -> LaurentParam {
    LaurentParam::constant(fe(n))
}

fn lp_sqrt2() -> LaurentParam {
    LaurentParam::constant(FieldElem::sqrt2())
}

/// Spatial sign pattern `(s1, s2, s3)` of numbered wall `k`.
pub fn spatial_signs(k: u8) -> [i64; 3] {
    match k {
        0 => [1, 1, 1],
        1 => [1, -1, 1],
        2 => [1, -1, -1],
        3 => [1, 1, -1],
        4 => [-1, 1, -1],
        5 => [-1, 1, 1],
        6 => [-1, -1, 1],
        7 => [-1, -1, -1],
        _ => panic!("numbered wall index out of range"),
    }
}

/// Sign of the last coordinate of positive wall `+k` (its `1/t` coefficient).
pub fn last_sign(k: u8) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn positive_wall(k: u8) -> MinkVector<LaurentParam> {
    let s = spatial_signs(k);
    MinkVector::new(vec![
        lp_sqrt2(),
        lp_int(s[0]),
        lp_int(s[1]),
        lp_int(s[2]),
        LaurentParam::monomial(-1, fe(last_sign(k))),
    ])
}

pub fn negative_wall(k: u8) -> MinkVector<LaurentParam> {
    let s = spatial_signs(k);
    MinkVector::new(vec![
        lp_sqrt2(),
        lp_int(s[0]),
        lp_int(s[1]),
        lp_int(s[2]),
        LaurentParam::monomial(1, fe(-last_sign(k))),
    ])
}

/// Letter walls `A..F` (constant in `t`).
pub fn letter_wall(c: char) -> MinkVector<LaurentParam> {
    let sqrt2 = FieldElem::sqrt2();
    let spatial: [FieldElem; 4] = match c {
        'A' => [sqrt2, fe(0), fe(0), fe(0)],
        'B' => [fe(0), sqrt2, fe(0), fe(0)],
        'C' => [fe(0), fe(0), sqrt2, fe(0)],
        'D' => [fe(0), fe(0), sqrt2.neg(), fe(0)],
        'E' => [fe(0), sqrt2.neg(), fe(0), fe(0)],
        'F' => [sqrt2.neg(), fe(0), fe(0), fe(0)],
        'G' => [fe(0), fe(0), fe(0), sqrt2.neg()],
        'H' => [fe(0), fe(0), fe(0), sqrt2],
        _ => panic!("letter wall out of range"),
    };
    let mut coords = vec![lp_int(1)];
    coords.extend(spatial.into_iter().map(LaurentParam::constant));
    MinkVector::new(coords)
}

/// Symmetry walls: `L` swaps spatial coordinates 1 and 2, `M` swaps 2 and 3,
/// `N` swaps 2 and 3 with a sign flip; each is the reflection in the
/// hyperplane orthogonal to the returned vector.
pub fn symmetry_wall(c: char) -> MinkVector<LaurentParam> {
    let spatial: [i64; 4] = match c {
        'L' => [-1, 1, 0, 0],
        'M' => [0, -1, 1, 0],
        'N' => [0, -1, -1, 0],
        _ => panic!("symmetry wall out of range"),
    };
    let mut coords = vec![lp_int(0)];
    coords.extend(spatial.into_iter().map(lp_int));
    MinkVector::new(coords)
}

/// Redefined bounding walls for the bonus lattice: `(1, 0, 0, 0, +-sqrt2 t)`,
/// which at `t^2 = 3/5` is the pair `(1,0,0,0,+-sqrt(6/5))`.
pub fn l6_extra_wall(c: char) -> MinkVector<LaurentParam> {
    let sign = match c {
        'G' => 1,
        'H' => -1,
        _ => panic!("L6 extra wall out of range"),
    };
    MinkVector::new(vec![
        lp_int(1),
        lp_int(0),
        lp_int(0),
        lp_int(0),
        LaurentParam::monomial(1, FieldElem::sqrt2().scale(&num_rational::BigRational::from_integer(sign.into()))),
    ])
}

/// The 22 walls of the deformation family, in table order.
pub fn family22() -> Vec<(WallLabel, MinkVector<LaurentParam>)> {
    let mut walls = Vec::with_capacity(22);
    for k in 0..8 {
        walls.push((WallLabel::Positive(k), positive_wall(k)));
        walls.push((WallLabel::Negative(k), negative_wall(k)));
    }
    for c in ['A', 'B', 'C', 'D', 'E', 'F'] {
        walls.push((WallLabel::Letter(c), letter_wall(c)));
    }
    walls
}

/// The full 24-cell: the family at `t = 1` plus the two removed walls.
pub fn p24() -> Vec<(WallLabel, MinkVector<LaurentParam>)> {
    let mut walls = family22();
    walls.push((WallLabel::Letter('G'), letter_wall('G')));
    walls.push((WallLabel::Letter('H'), letter_wall('H')));
    walls
}

/// The 8-element generating set of the extended group.
pub fn extended_generators() -> Vec<(WallLabel, MinkVector<LaurentParam>)> {
    let mut walls = Vec::with_capacity(8);
    for k in [0u8, 3] {
        walls.push((WallLabel::Positive(k), positive_wall(k)));
        walls.push((WallLabel::Negative(k), negative_wall(k)));
    }
    walls.push((WallLabel::Letter('A'), letter_wall('A')));
    for c in ['L', 'M', 'N'] {
        walls.push((WallLabel::Letter(c), symmetry_wall(c)));
    }
    walls
}

/// The 10 walls of the bonus lattice: the extended generators plus the
/// redefined `G`, `H`. Only meaningful at `t^2 = 3/5`.
pub fn l6() -> Vec<(WallLabel, MinkVector<LaurentParam>)> {
    let mut walls = extended_generators();
    walls.push((WallLabel::Letter('G'), l6_extra_wall('G')));
    walls.push((WallLabel::Letter('H'), l6_extra_wall('H')));
    walls
}

/// The 24 ideal vertices of the 24-cell: light-like vectors
/// `sqrt2 e0 +- e_i +- e_j`, `1 <= i < j <= 4`. They are the cusp candidates
/// for every 4-dimensional built-in.
pub fn vertex_candidates_dim4() -> Vec<MinkVector<FieldElem>> {
    let mut out = Vec::with_capacity(24);
    for i in 1..=4usize {
        for j in (i + 1)..=4 {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut coords = vec![fe(0); 5];
                    coords[0] = FieldElem::sqrt2();
                    coords[i] = fe(si);
                    coords[j] = fe(sj);
                    out.push(MinkVector::new(coords));
                }
            }
        }
    }
    out
}

/// The 12 ideal vertices of the cuboctahedron limit, in the 4-coordinate
/// Minkowski space orthogonal to the collapsed direction.
pub fn vertex_candidates_dim3() -> Vec<MinkVector<FieldElem>> {
    let mut out = Vec::with_capacity(12);
    for i in 1..=3usize {
        for j in (i + 1)..=3 {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut coords = vec![fe(0); 4];
                    coords[0] = FieldElem::sqrt2();
                    coords[i] = fe(si);
                    coords[j] = fe(sj);
                    out.push(MinkVector::new(coords));
                }
            }
        }
    }
    out
}
