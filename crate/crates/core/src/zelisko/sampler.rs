use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::euclid::EuclideanDomain;
use crate::matrix::{DivisorChainPhi, MatrixRm};

use super::membership::{assemble, check_structure, StructuredMember};

/// Draws a random member of `G_Phi`.
///
/// Cofactors are uniform over `R_m` and `H` is assembled from them; draws
/// with a non-unit determinant are rejected. Deterministic in `seed`.
pub fn sample_member<D: EuclideanDomain>(
    phi: &DivisorChainPhi<D>,
    seed: u64,
    max_tries: usize,
) -> Result<StructuredMember<D>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(phi, &mut rng, max_tries)
}

/// `count` independent samples; sample `i` uses stream `i` of the seed, so
/// the result does not depend on how the work is split.
pub fn sample_members<D: EuclideanDomain>(
    phi: &DivisorChainPhi<D>,
    seed: u64,
    count: usize,
    max_tries: usize,
) -> Result<Vec<StructuredMember<D>>> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            sample_with(phi, &mut rng, max_tries)
        })
        .collect()
}

fn sample_with<D: EuclideanDomain>(
    phi: &DivisorChainPhi<D>,
    rng: &mut ChaCha8Rng,
    max_tries: usize,
) -> Result<StructuredMember<D>> {
    let n = phi.n();
    let modulus = phi.modulus();
    for _ in 0..max_tries {
        let cofactors = MatrixRm::from_fn(n, modulus, |_, _| modulus.random(rng));
        let h = assemble(&cofactors, phi);
        if h.is_invertible() {
            return check_structure(&h, phi);
        }
    }
    Err(Error::SamplingExhausted(max_tries))
}
