use crate::error::{Error, Result};
use crate::euclid::{divides, EuclideanDomain};
use crate::linsolve::generating_solution;
use crate::matrix::{DivisorChainPhi, MatrixRm};

use super::profile::{block_profile, BlockProfile};

/// An accepted member of `G_Phi` with its cofactor table and witness.
///
/// `cofactors` holds `h_ij`: on constrained positions below the diagonal
/// `H_ij = lambda_ij * h_ij`, elsewhere `h_ij = H_ij`. Equality compares `H`
/// only, since `h_ij` is fixed only up to the annihilator of its multiplier.
#[derive(Debug, Clone)]
pub struct StructuredMember<D: EuclideanDomain> {
    pub h: MatrixRm<D>,
    pub profile: BlockProfile,
    pub cofactors: MatrixRm<D>,
    pub witness: MatrixRm<D>,
}

impl<D: EuclideanDomain> PartialEq for StructuredMember<D> {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h
    }
}

impl<D: EuclideanDomain> Eq for StructuredMember<D> {}

fn check_shape<D: EuclideanDomain>(h: &MatrixRm<D>, phi: &DivisorChainPhi<D>) -> Result<()> {
    if h.n() != phi.n() {
        return Err(Error::DimensionMismatch(format!("H is {0}x{0}, Phi is {1}x{1}", h.n(), phi.n())));
    }
    if h.modulus() != phi.modulus() {
        return Err(Error::ModulusMismatch);
    }
    Ok(())
}

/// Membership by the entrywise criterion: `H` is invertible and
/// `d_i * s = d_j * h_ij` is solvable for every `(i, j)`, where `d` is the
/// diagonal of `Phi`.
pub fn is_member<D: EuclideanDomain>(h: &MatrixRm<D>, phi: &DivisorChainPhi<D>) -> Result<bool> {
    check_shape(h, phi)?;
    if !h.is_invertible() {
        return Ok(false);
    }
    // d_i * s = b is solvable iff (d_i, m) divides the representative of b
    let d = phi.diagonal();
    for i in 0..h.n() {
        for (j, dj) in d.iter().enumerate() {
            if !divides(phi.diag_mu(i), (dj * h.get(i, j)).rep()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the block shape of `H` and extracts its cofactors.
///
/// Every entry below the diagonal must be divisible by its multiplier
/// `lambda_ij` (see [`DivisorChainPhi::lower_multiplier`]); where the
/// multiplier is `0` the entry must vanish. The cofactor of a nonzero entry
/// is the pinned generating solution of `lambda_ij * x = H_ij`, that of a
/// zero entry is `0`.
pub fn check_structure<D: EuclideanDomain>(
    h: &MatrixRm<D>,
    phi: &DivisorChainPhi<D>,
) -> Result<StructuredMember<D>> {
    check_shape(h, phi)?;
    let det = h.det();
    if !det.is_unit() {
        return Err(Error::NotInvertible(det.to_string()));
    }
    let profile = block_profile(phi);
    let n = h.n();
    let mut cofactors = h.clone();
    for i in 1..n {
        for j in 0..i {
            let lambda = phi.lower_multiplier(i, j);
            if lambda.is_one() {
                continue;
            }
            let entry = h.get(i, j);
            let violation = |reason: String| Error::StructureViolation {
                block: profile.block_name(i, j),
                row: i,
                col: j,
                reason,
            };
            let cofactor = if entry.is_zero() {
                phi.modulus().zero()
            } else if lambda.is_zero() {
                return Err(violation(format!("entry {entry} must be 0")));
            } else {
                generating_solution(lambda, entry)
                    .map_err(|_| violation(format!("entry {entry} is not a multiple of {lambda}")))?
            };
            cofactors.set(i, j, cofactor)?;
        }
    }
    let witness = witness_from_cofactors(&cofactors, phi);
    Ok(StructuredMember { h: h.clone(), profile, cofactors, witness })
}

/// The witness `S` with `H * Phi = Phi * S` for an accepted member.
pub fn construct_witness<D: EuclideanDomain>(sm: &StructuredMember<D>, phi: &DivisorChainPhi<D>) -> MatrixRm<D> {
    witness_from_cofactors(&sm.cofactors, phi)
}

/// `S_ij = h_ij` on and below the diagonal and `S_ij = lambda_ji * h_ij`
/// above it. The multipliers of `S` are those of `H` reflected, so
/// `det S = det H`.
pub fn witness_from_cofactors<D: EuclideanDomain>(cofactors: &MatrixRm<D>, phi: &DivisorChainPhi<D>) -> MatrixRm<D> {
    MatrixRm::from_fn(cofactors.n(), phi.modulus(), |i, j| {
        if i < j {
            phi.lower_multiplier(j, i) * cofactors.get(i, j)
        } else {
            cofactors.get(i, j).clone()
        }
    })
}

/// Rebuilds `H` from a cofactor table: `H_ij = lambda_ij * h_ij` below the
/// diagonal and `h_ij` elsewhere.
pub fn assemble<D: EuclideanDomain>(cofactors: &MatrixRm<D>, phi: &DivisorChainPhi<D>) -> MatrixRm<D> {
    MatrixRm::from_fn(cofactors.n(), phi.modulus(), |i, j| {
        if i > j {
            phi.lower_multiplier(i, j) * cofactors.get(i, j)
        } else {
            cofactors.get(i, j).clone()
        }
    })
}
