//! Tor groups computed from a free resolution of the left factor: apply
//! `V (x)_A -` to the resolution (each free term collapses to a power of
//! `V`) and take homology.

use qhc_algebra::{Algebra, Representation};
use qhc_linalg::Matrix;

use crate::ext::{homology_at, HomologyGroup};
use crate::resolution::FreeResolution;
use crate::{HomologyError, Result};

fn check_right_module(algebra: &Algebra, right_module: &Representation) -> Result<()> {
    if right_module.domain() != algebra.domain() {
        return Err(HomologyError::Unsupported(
            "coefficient module domain differs from the algebra".into(),
        ));
    }
    Ok(())
}

/// `Tor_degree(V, M)` where the resolution resolves the left module `M` and
/// `V` is a right module (a representation of the opposite algebra).
pub fn tor_group(
    algebra: &Algebra,
    resolution: &mut FreeResolution,
    right_module: &Representation,
    degree: usize,
) -> Result<HomologyGroup> {
    check_right_module(algebra, right_module)?;
    resolution.extend_to(algebra, degree + 1)?;
    let dv = right_module.dim();
    let dim = resolution.rank(degree) * dv;
    // The tensor complex runs downward: v_k maps V^{t_k} -> V^{t_{k-1}}.
    let map_out: Option<Matrix> = match degree {
        0 => None,
        k => resolution.differential(k).map(|d| d.tensor_map(right_module)),
    };
    let map_in = resolution.differential(degree + 1).map(|d| d.tensor_map(right_module));
    homology_at(algebra.domain(), degree, dim, map_out.as_ref(), map_in.as_ref())
}

/// `Tor_0..Tor_max_degree` in one pass.
pub fn tor_groups(
    algebra: &Algebra,
    resolution: &mut FreeResolution,
    right_module: &Representation,
    max_degree: usize,
) -> Result<Vec<HomologyGroup>> {
    (0..=max_degree)
        .map(|i| tor_group(algebra, resolution, right_module, i))
        .collect()
}

/// Count consecutive vanishing `Tor_1, Tor_2, ...`: the number of leading
/// zero groups (at most `cap`) plus the first nonzero group if found.
pub fn tor_vanishing_prefix(
    algebra: &Algebra,
    resolution: &mut FreeResolution,
    right_module: &Representation,
    cap: usize,
) -> Result<(usize, Option<HomologyGroup>)> {
    for i in 1..=cap {
        let g = tor_group(algebra, resolution, right_module, i)?;
        if !g.is_zero() {
            return Ok((i - 1, Some(g)));
        }
    }
    Ok((cap, None))
}
