//! The Zelisko group `G_Phi = { H in GL_n(R_m) : H * Phi = Phi * S for some S in GL_n(R_m) }`.
//!
//! [`is_member`] decides membership entrywise, [`check_structure`] checks
//! the block shape of `H` and extracts the cofactors `h_ij` together with a
//! witness `S`, and the [`oracle`] module searches for `S` by brute force.

mod membership;
pub mod oracle;
mod profile;
mod sampler;

pub use membership::{
    assemble, check_structure, construct_witness, is_member, witness_from_cofactors, StructuredMember,
};
pub use oracle::{enumerate_members, for_each_member, oracle_is_member, FiniteRing, MembershipOracle};
pub use profile::{block_profile, BlockProfile, Case};
pub use sampler::{sample_member, sample_members};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::euclid::{Integer, Poly};
    use crate::matrix::{DivisorChainPhi, MatrixRm};
    use crate::residue::Modulus;

    fn zm(m: i64) -> Modulus<Integer> {
        Modulus::new(Integer::from(m)).unwrap()
    }

    fn phi(m: &Modulus<Integer>, diag: &[i64]) -> DivisorChainPhi<Integer> {
        let d: Vec<_> = diag.iter().map(|&x| m.from_i64(x)).collect();
        DivisorChainPhi::build(diag.len(), &d).unwrap()
    }

    fn mat(m: &Modulus<Integer>, rows: &[&[i64]]) -> MatrixRm<Integer> {
        MatrixRm::from_i64_rows(m, rows).unwrap()
    }

    #[test]
    fn chain_example_member() {
        let m = zm(8);
        let p = phi(&m, &[2, 4]);
        let h = mat(&m, &[&[1, 0], &[2, 1]]);
        assert!(is_member(&h, &p).unwrap());
        assert!(oracle_is_member(&h, &p).unwrap());
        let sm = check_structure(&h, &p).unwrap();
        assert_eq!(sm.cofactors.get(1, 0).to_string(), "1");
        assert_eq!(sm.witness, mat(&m, &[&[1, 0], &[1, 1]]));
        let lhs = h.mat_mul(&p.to_matrix()).unwrap();
        assert_eq!(lhs, mat(&m, &[&[2, 0], &[4, 4]]));
        assert_eq!(lhs, p.to_matrix().mat_mul(&sm.witness).unwrap());
        assert_eq!(sm.witness.det(), h.det());
        assert_eq!(construct_witness(&sm, &p), sm.witness);
    }

    #[test]
    fn chain_example_non_member() {
        let m = zm(8);
        let p = phi(&m, &[2, 4]);
        let h = mat(&m, &[&[1, 0], &[1, 1]]);
        assert!(!is_member(&h, &p).unwrap());
        assert!(!oracle_is_member(&h, &p).unwrap());
        assert!(matches!(
            check_structure(&h, &p),
            Err(Error::StructureViolation { block: "H_22", row: 1, col: 0, .. })
        ));
    }

    #[test]
    fn identity_is_always_a_member() {
        let m = zm(8);
        for diag in [&[1, 2, 4][..], &[2, 0], &[1, 0], &[2, 2], &[0, 0], &[1, 1]] {
            let p = phi(&m, diag);
            let id = MatrixRm::identity(diag.len(), &m);
            assert!(is_member(&id, &p).unwrap());
            assert!(oracle_is_member(&id, &p).unwrap());
            let sm = check_structure(&id, &p).unwrap();
            assert_eq!(sm.witness, id);
            assert_eq!(sm.cofactors, id);
        }
    }

    #[test]
    fn case_v_needs_zero_lower_left_block() {
        let m = zm(8);
        let p = phi(&m, &[1, 0]);
        let h = mat(&m, &[&[1, 0], &[1, 1]]);
        assert!(matches!(
            check_structure(&h, &p),
            Err(Error::StructureViolation { block: "H_31", row: 1, col: 0, .. })
        ));
        assert!(!is_member(&h, &p).unwrap());
        assert!(!oracle_is_member(&h, &p).unwrap());
        assert!(is_member(&mat(&m, &[&[3, 5], &[0, 7]]), &p).unwrap());
    }

    #[test]
    fn non_invertible_is_rejected() {
        let m = zm(8);
        let p = phi(&m, &[2, 4]);
        let h = mat(&m, &[&[2, 0], &[0, 1]]);
        assert!(!is_member(&h, &p).unwrap());
        assert!(matches!(check_structure(&h, &p), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn shape_errors() {
        let m = zm(8);
        let p = phi(&m, &[2, 4]);
        let h = MatrixRm::identity(3, &m);
        assert!(matches!(is_member(&h, &p), Err(Error::DimensionMismatch(_))));
        let h = MatrixRm::identity(2, &zm(4));
        assert!(matches!(is_member(&h, &p), Err(Error::ModulusMismatch)));
    }

    #[test]
    fn small_ring_sets_agree() {
        let m = zm(4);
        let p = phi(&m, &[2, 2]);
        let oracle = MembershipOracle::new(&p).unwrap();
        let mut structural = Vec::new();
        oracle.for_each_matrix(|a| {
            let h = oracle.matrix_of(a);
            let member = is_member(&h, &p).unwrap();
            assert_eq!(member, check_structure(&h, &p).is_ok());
            if member {
                structural.push(h);
            }
        });
        let members = enumerate_members(&p).unwrap();
        assert_eq!(members, structural);
        assert!(!members.is_empty());
    }

    #[test]
    fn enumeration_refuses_large_inputs() {
        let m = zm(16);
        assert!(matches!(enumerate_members(&phi(&m, &[2, 4])), Err(Error::RingTooLarge { .. })));
        let m = zm(4);
        assert!(matches!(enumerate_members(&phi(&m, &[1, 2, 2, 0])), Err(Error::RingTooLarge { .. })));
    }

    #[test]
    fn sampler_contract() {
        let m = zm(8);
        let p = phi(&m, &[2, 4]);
        for seed in 0..50 {
            let sm = sample_member(&p, seed, 100).unwrap();
            assert_eq!(sm.h.get(1, 0).rep().to_i64().unwrap() % 2, 0);
            assert!(is_member(&sm.h, &p).unwrap());
            assert!(oracle_is_member(&sm.h, &p).unwrap());
        }
        assert_eq!(sample_member(&p, 7, 100).unwrap().h, sample_member(&p, 7, 100).unwrap().h);
        let batch = sample_members(&p, 3, 5, 100).unwrap();
        assert_eq!(batch, sample_members(&p, 3, 5, 100).unwrap());
        assert_ne!(batch[0], batch[1]);

        let gl = phi(&m, &[1, 1, 1]);
        let sm = sample_member(&gl, 1, 100).unwrap();
        assert!(sm.h.is_invertible());
        assert_eq!(sm.cofactors, sm.h);
    }

    #[test]
    fn sampler_exhaustion() {
        // over Z_2 with Phi = diag(1, 0) a draw is invertible with probability 1/4
        let m = zm(2);
        let p = phi(&m, &[1, 0]);
        let seed = (0..200).find(|&s| sample_member(&p, s, 1).is_err()).unwrap();
        assert!(matches!(sample_member(&p, seed, 1), Err(Error::SamplingExhausted(1))));
    }

    #[test]
    fn polynomial_ring_members() {
        let m = Modulus::new(Poly::new(2, &[0, 1, 0, 0, 1])).unwrap();
        let x = m.reduce(&Poly::new(2, &[0, 1]));
        let x2 = &x * &x;
        let p = DivisorChainPhi::build(3, &[m.one(), x.clone(), x2]).unwrap();
        for seed in 0..20 {
            let sm = sample_member(&p, seed, 1000).unwrap();
            assert!(is_member(&sm.h, &p).unwrap());
            assert_eq!(sm.h.mat_mul(&p.to_matrix()).unwrap(), p.to_matrix().mat_mul(&sm.witness).unwrap());
            assert_eq!(sm.witness.det(), sm.h.det());
        }
    }
}
