//! Transitional combinatorics: classify watched wall subsets across a grid
//! of exact parameter values and flag the classification changes.

use crate::arrangement::{Arrangement, WallLabel};
use crate::error::{Error, Result};
use crate::scalar::{FieldElem, LaurentParam};

use super::gram::{classify_vectors, SubdiagramClass};

/// One cell of the scan table.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub t_squared: FieldElem,
    pub subset: Vec<WallLabel>,
    pub class: SubdiagramClass,
}

/// A flagged change of class between consecutive grid points.
#[derive(Debug, Clone)]
pub struct Transition {
    pub subset: Vec<WallLabel>,
    pub before: (FieldElem, SubdiagramClass),
    pub after: (FieldElem, SubdiagramClass),
}

#[derive(Debug, Clone)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
    pub transitions: Vec<Transition>,
}

/// Classifies each watched subset at each grid point of the formal family
/// and flags the parameter values where the class changes.
pub fn transition_scan(
    family: &Arrangement<LaurentParam>,
    watch: &[Vec<WallLabel>],
    t_squared_grid: &[FieldElem],
) -> Result<ScanTable> {
    if t_squared_grid.is_empty() {
        return Err(Error::Precondition("empty parameter grid".into()));
    }
    for subset in watch {
        if subset.len() > family.dimension {
            return Err(Error::Precondition(format!(
                "watched subset {:?} exceeds the dimension",
                subset.iter().map(|l| l.to_string()).collect::<Vec<_>>()
            )));
        }
    }
    let mut rows = Vec::new();
    let mut transitions = Vec::new();
    for subset in watch {
        let indices: Vec<usize> = subset
            .iter()
            .map(|l| family.index_of(*l))
            .collect::<Result<_>>()?;
        let mut previous: Option<(FieldElem, SubdiagramClass)> = None;
        for r in t_squared_grid {
            if !r.sign().is_positive() {
                return Err(Error::Precondition(format!("grid point t^2 = {r} is not positive")));
            }
            let vectors: Vec<_> = indices
                .iter()
                .map(|&i| family.walls[i].1.map(|p| p.eval(r)))
                .collect();
            let class = classify_vectors(&vectors)?;
            if let Some((prev_r, prev_class)) = previous.take() {
                if prev_class != class {
                    transitions.push(Transition {
                        subset: subset.clone(),
                        before: (prev_r, prev_class),
                        after: (r.clone(), class),
                    });
                }
            }
            previous = Some((r.clone(), class));
            rows.push(ScanRow { t_squared: r.clone(), subset: subset.clone(), class });
        }
    }
    Ok(ScanTable { rows, transitions })
}
