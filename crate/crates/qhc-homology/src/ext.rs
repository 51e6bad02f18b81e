//! Ext groups computed from a free resolution: apply `Hom_A(-, N)` to the
//! resolution (each term collapses to a power of `N`) and take cohomology.
//! Over a field only ranks of consecutive maps are needed; over Z_(p) the
//! groups are finitely generated modules and carry torsion.

use qhc_algebra::{Algebra, Representation};
use qhc_linalg::{cokernel_invariants, rref, smith_normal_form, Domain, Matrix, Scalar};

use crate::resolution::FreeResolution;
use crate::{HomologyError, Result};

/// One Ext or Tor group: free rank plus invariant-factor torsion (torsion
/// is always empty over a field).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub rank: usize,
    pub torsion: Vec<Scalar>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    fn zero(degree: usize) -> HomologyGroup {
        HomologyGroup { degree, rank: 0, torsion: Vec::new() }
    }
}

/// Homology of a three-term stretch `... -> (in) -> C -> (out) -> ...` at
/// the middle spot of dimension `dim`. `None` maps are zero maps.
pub(crate) fn homology_at(
    domain: Domain,
    degree: usize,
    dim: usize,
    map_out: Option<&Matrix>,
    map_in: Option<&Matrix>,
) -> Result<HomologyGroup> {
    if dim == 0 {
        return Ok(HomologyGroup::zero(degree));
    }
    if domain.is_field() {
        let r_out = match map_out {
            Some(m) => rref(m)?.rank,
            None => 0,
        };
        let r_in = match map_in {
            Some(m) => rref(m)?.rank,
            None => 0,
        };
        assert!(dim >= r_out + r_in, "image escapes the kernel");
        return Ok(HomologyGroup { degree, rank: dim - r_out - r_in, torsion: Vec::new() });
    }
    // Lattice homology over Z_(p): kernel lattice of the outgoing map, then
    // the cokernel of the incoming image expressed in kernel coordinates.
    let kernel = match map_out {
        Some(m) => smith_normal_form(m).kernel(),
        None => Matrix::identity(domain, dim),
    };
    let Some(map_in) = map_in else {
        return Ok(HomologyGroup { degree, rank: kernel.cols(), torsion: Vec::new() });
    };
    if kernel.cols() == 0 {
        return Ok(HomologyGroup::zero(degree));
    }
    let coords = smith_normal_form(&kernel).solve(map_in).ok_or_else(|| {
        HomologyError::Internal("boundary image lies outside the cycle lattice".into())
    })?;
    let inv = cokernel_invariants(&coords);
    Ok(HomologyGroup { degree, rank: inv.free_rank, torsion: inv.torsion })
}

fn check_target(algebra: &Algebra, target: &Representation) -> Result<()> {
    if target.domain() != algebra.domain() {
        return Err(HomologyError::Unsupported(
            "coefficient module domain differs from the algebra".into(),
        ));
    }
    Ok(())
}

/// `Ext^degree(M, N)` where the resolution resolves `M`.
pub fn ext_group(
    algebra: &Algebra,
    resolution: &mut FreeResolution,
    target: &Representation,
    degree: usize,
) -> Result<HomologyGroup> {
    check_target(algebra, target)?;
    resolution.extend_to(algebra, degree + 1)?;
    let dn = target.dim();
    let dim = resolution.rank(degree) * dn;
    // The Hom complex runs upward: u_k maps N^{t_{k-1}} -> N^{t_k}.
    let map_in = match degree {
        0 => None,
        k => resolution.differential(k).map(|d| d.hom_map(target)),
    };
    let map_out = resolution.differential(degree + 1).map(|d| d.hom_map(target));
    homology_at(algebra.domain(), degree, dim, map_out.as_ref(), map_in.as_ref())
}

/// `Ext^0..Ext^max_degree` in one pass, computing each map's rank once.
pub fn ext_groups(
    algebra: &Algebra,
    resolution: &mut FreeResolution,
    target: &Representation,
    max_degree: usize,
) -> Result<Vec<HomologyGroup>> {
    check_target(algebra, target)?;
    resolution.extend_to(algebra, max_degree + 1)?;
    let d = algebra.domain();
    let dn = target.dim();
    if d.is_field() {
        // rank(u_k) for k = 1..=max_degree+1 (0 where the complex has ended)
        let mut ranks = vec![0usize; max_degree + 2];
        for (k, rank) in ranks.iter_mut().enumerate().skip(1) {
            if let Some(diff) = resolution.differential(k) {
                *rank = rref(&diff.hom_map(target))?.rank;
            }
        }
        return (0..=max_degree)
            .map(|i| {
                let dim = resolution.rank(i) * dn;
                let (r_in, r_out) = (if i == 0 { 0 } else { ranks[i] }, ranks[i + 1]);
                assert!(dim >= r_in + r_out, "image escapes the kernel");
                Ok(HomologyGroup { degree: i, rank: dim - r_in - r_out, torsion: Vec::new() })
            })
            .collect();
    }
    (0..=max_degree)
        .map(|i| ext_group(algebra, resolution, target, i))
        .collect()
}

/// Count consecutive vanishing `Ext^1, Ext^2, ...`. Returns the number of
/// leading zero groups (at most `cap`) and the first nonzero group if one
/// was found within the cap. Extends the resolution only as far as needed.
pub fn ext_vanishing_prefix(
    algebra: &Algebra,
    resolution: &mut FreeResolution,
    target: &Representation,
    cap: usize,
) -> Result<(usize, Option<HomologyGroup>)> {
    for i in 1..=cap {
        let g = ext_group(algebra, resolution, target, i)?;
        if !g.is_zero() {
            return Ok((i - 1, Some(g)));
        }
    }
    Ok((cap, None))
}
