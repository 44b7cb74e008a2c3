use std::fmt;
use std::ops::Range;

use crate::euclid::EuclideanDomain;
use crate::matrix::DivisorChainPhi;

/// Which of the five shapes of `Phi` a profile describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// Leading ones, a chain and trailing zeros.
    I,
    /// No leading ones, trailing zeros.
    II,
    /// The whole diagonal is the chain.
    III,
    /// Leading ones, no zeros.
    IV,
    /// No chain: `diag(1, ..., 1, 0, ..., 0)`.
    V,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::I => "i",
            Case::II => "ii",
            Case::III => "iii",
            Case::IV => "iv",
            Case::V => "v",
        };
        f.write_str(s)
    }
}

/// The block decomposition of an `n x n` matrix induced by `Phi`.
///
/// Block 1 holds the rows/columns of the leading ones, block 2 the chain and
/// block 3 the zeros. Ranges are 0-based and half-open; `t` and `k` are the
/// usual 1-based chain bounds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    pub case: Case,
    pub n: usize,
    pub ones: usize,
    pub chain_len: usize,
}

impl BlockProfile {
    pub fn t(&self) -> usize {
        self.ones + 1
    }

    pub fn k(&self) -> usize {
        self.ones + self.chain_len
    }

    /// For case (v): the size `s` of the leading identity block.
    pub fn split(&self) -> Option<usize> {
        (self.case == Case::V).then_some(self.ones)
    }

    /// Index range of block `b` in `1..=3`.
    pub fn range(&self, b: usize) -> Range<usize> {
        match b {
            1 => 0..self.ones,
            2 => self.ones..self.k(),
            3 => self.k()..self.n,
            _ => panic!("block index must be 1, 2 or 3"),
        }
    }

    /// Block containing row or column `i`.
    pub fn block_of(&self, i: usize) -> usize {
        if i < self.ones {
            1
        } else if i < self.k() {
            2
        } else {
            3
        }
    }

    /// Name of the block `H_ab` containing entry `(i, j)`.
    pub fn block_name(&self, i: usize, j: usize) -> &'static str {
        const NAMES: [[&str; 3]; 3] = [["H_11", "H_12", "H_13"], ["H_21", "H_22", "H_23"], ["H_31", "H_32", "H_33"]];
        NAMES[self.block_of(i) - 1][self.block_of(j) - 1]
    }
}

pub fn block_profile<D: EuclideanDomain>(phi: &DivisorChainPhi<D>) -> BlockProfile {
    let (ones, chain_len, zeros) = (phi.ones(), phi.chain().len(), phi.zeros());
    let case = match (chain_len == 0, ones > 0, zeros > 0) {
        (true, _, _) => Case::V,
        (false, true, true) => Case::I,
        (false, false, true) => Case::II,
        (false, false, false) => Case::III,
        (false, true, false) => Case::IV,
    };
    BlockProfile { case, n: phi.n(), ones, chain_len }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::Integer;
    use crate::residue::Modulus;

    fn profile(m: i64, diag: &[i64]) -> BlockProfile {
        let modulus = Modulus::new(Integer::from(m)).unwrap();
        let d: Vec<_> = diag.iter().map(|&x| modulus.from_i64(x)).collect();
        block_profile(&DivisorChainPhi::build(diag.len(), &d).unwrap())
    }

    #[test]
    fn cases() {
        let p = profile(8, &[1, 2, 4, 0]);
        assert_eq!((p.case, p.t(), p.k()), (Case::I, 2, 3));
        assert_eq!(p.block_name(3, 0), "H_31");
        assert_eq!(p.block_name(2, 1), "H_22");
        assert_eq!(profile(8, &[2, 0]).case, Case::II);
        assert_eq!(profile(8, &[2, 4]).case, Case::III);
        assert_eq!(profile(8, &[1, 2, 4]).case, Case::IV);
        let p = profile(8, &[1, 0]);
        assert_eq!((p.case, p.split()), (Case::V, Some(1)));
        assert_eq!(profile(8, &[1, 1]).split(), Some(2));
        assert_eq!(profile(8, &[0, 0]).split(), Some(0));
    }

    #[test]
    fn ranges_partition() {
        for p in [profile(144, &[1, 1, 2, 12, 0]), profile(8, &[1, 0, 0]), profile(36, &[3, 6])] {
            let all: Vec<usize> = (1..=3).flat_map(|b| p.range(b)).collect();
            assert_eq!(all, (0..p.n).collect::<Vec<_>>());
            for i in 0..p.n {
                assert!(p.range(p.block_of(i)).contains(&i));
            }
        }
    }
}
