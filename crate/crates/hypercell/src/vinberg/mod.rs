//! Subdiagram classification by Gram definiteness, Vinberg's finite-volume
//! criterion, cusp ranks, the arithmeticity cycle criterion, and the
//! transitional-combinatorics scan.

mod arithmetic;
mod gram;
mod scan;
mod volume;

pub use arithmetic::{
    arithmeticity_check, ArithmeticityReport, ArithmeticityVerdict, EdgeLabel, FailingCycle,
};
pub use gram::{classify_vectors, determinant, gram_matrix, SubdiagramClass};
pub use scan::{transition_scan, ScanRow, ScanTable, Transition};
pub use volume::{
    finite_volume_check, finite_volume_check_relaxed, VolumeStatus, VolumeVerdict,
};

use crate::arrangement::{Arrangement, WallLabel};
use crate::error::Result;
use crate::minkowski::MinkVector;
use crate::scalar::SignedScalar;

/// Classifies the subdiagram spanned by a wall subset of an arrangement.
pub fn classify_subdiagram<S: SignedScalar>(
    arr: &Arrangement<S>,
    subset: &[WallLabel],
) -> Result<SubdiagramClass> {
    if subset.is_empty() {
        return Err(crate::error::Error::Precondition("empty wall subset".into()));
    }
    let vectors = arr.vectors_for(subset)?;
    classify_vectors(&vectors)
}

/// Cusp rank of an ideal vertex: the summed rank of the parabolic connected
/// components of the diagram spanned by the incident walls. The caller
/// guarantees that the walls actually pass through a common ideal point.
pub fn cusp_rank<S: SignedScalar>(arr: &Arrangement<S>, incident: &[WallLabel]) -> Result<usize> {
    let vectors = arr.vectors_for(incident)?;
    parabolic_rank_of_components(&vectors)
}

/// Rank helper shared with the ideal-vertex census: `sum (size - 1)` over
/// singular connected components of the Gram matrix.
pub fn parabolic_rank_of_components<S: SignedScalar>(walls: &[MinkVector<S>]) -> Result<usize> {
    if walls.is_empty() {
        return Ok(0);
    }
    let g = gram::gram_matrix(walls)?;
    gram::parabolic_component_rank(&g)
}
