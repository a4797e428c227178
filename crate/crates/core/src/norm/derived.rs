//! Norms and semi-norms built from a 2-norm.

use super::{dependent, TwoNormSpace, Vector};
use crate::error::{Error, Result};

/// `||x|| = ||x, y0|| + ||x, z0||` for an independent anchor pair.
pub fn eval_sum_norm(space: &TwoNormSpace, y0: &Vector, z0: &Vector, x: &Vector) -> Result<f64> {
    let anchor = space.norm_of(y0.as_slice(), z0.as_slice())?;
    if dependent(y0.as_slice(), z0.as_slice()) || anchor == 0.0 {
        return Err(Error::InvalidAnchor(anchor));
    }
    Ok(space.norm_of(x.as_slice(), y0.as_slice())? + space.norm_of(x.as_slice(), z0.as_slice())?)
}

/// `||x||_inf = max_i ||x, e_i||` over the space's basis.
pub fn eval_max_basis_norm(space: &TwoNormSpace, x: &Vector) -> Result<f64> {
    Ok(space.max_over_basis(x.as_slice())?.0)
}

/// The semi-norm `p_z(x) = ||x, z||`.
pub fn eval_seminorm(space: &TwoNormSpace, z: &Vector, x: &Vector) -> Result<f64> {
    space.norm_of(x.as_slice(), z.as_slice())
}

/// Membership of `x` in `center + (U_{z1,eps1} ∩ ... ∩ U_{zk,epsk})`, where
/// `U_{z,eps} = { v : p_z(v) < eps }`. The inequality is strict.
pub fn in_neighborhood(
    space: &TwoNormSpace,
    x: &Vector,
    center: &Vector,
    constraints: &[(Vector, f64)],
) -> Result<bool> {
    if constraints.is_empty() {
        return Err(Error::EmptyConstraints);
    }
    if let Some((_, eps)) = constraints.iter().find(|(_, eps)| !(*eps > 0.0)) {
        return Err(Error::InvalidTolerance(*eps));
    }
    let offset = x.sub(center);
    for (z, eps) in constraints {
        if eval_seminorm(space, z, &offset)? >= *eps {
            return Ok(false);
        }
    }
    Ok(true)
}
