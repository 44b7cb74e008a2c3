//! Brute-force membership in `G_Phi` straight from the definition: `H` is a
//! member iff some invertible `S` satisfies `H * Phi = Phi * S`.
//!
//! Everything here works on element indices and precomputed operation
//! tables, independent of the divisibility and cofactor machinery used by
//! the structural test.

use crate::error::{Error, Result};
use crate::euclid::EuclideanDomain;
use crate::matrix::{DivisorChainPhi, MatrixRm};
use crate::residue::{Modulus, Residue};

/// Largest number of `S` candidates the oracle will search for one `H`.
pub const ORACLE_CANDIDATE_BOUND: u64 = 1_000_000;
/// Largest ring for which operation tables are built.
pub const TABLE_RING_BOUND: u64 = 1 << 12;
/// [`enumerate_members`] handles `n <= 3` ...
pub const ENUMERATION_MAX_N: usize = 3;
/// ... over rings with at most this many elements.
pub const ENUMERATION_MAX_RING: u64 = 12;

/// A finite ring given by its addition and multiplication tables.
#[derive(Debug, Clone)]
pub struct FiniteRing<D: EuclideanDomain> {
    elements: Vec<Residue<D>>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    unit: Vec<bool>,
    one: u16,
}

impl<D: EuclideanDomain> FiniteRing<D> {
    pub fn new(modulus: &Modulus<D>) -> Result<Self> {
        let size = modulus.check_size(TABLE_RING_BOUND)? as usize;
        let elements: Vec<_> = (0..size as u64).map(|i| modulus.element(i)).collect();
        let index = |r: Residue<D>| r.index().expect("finite ring") as u16;
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in &elements {
            for b in &elements {
                add.push(index(a + b));
                mul.push(index(a * b));
            }
        }
        let neg: Vec<u16> = elements.iter().map(|a| index(-a)).collect();
        let one = index(modulus.one());
        let unit = (0..size).map(|a| (0..size).any(|b| mul[a * size + b] == one)).collect();
        Ok(FiniteRing { elements, add, mul, neg, unit, one })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: u16) -> &Residue<D> {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, r: &Residue<D>) -> u16 {
        r.index().expect("finite ring") as u16
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.size() + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.size() + b as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    pub fn is_unit(&self, a: u16) -> bool {
        self.unit[a as usize]
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), odd));
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // inversions contributed by v against the values still unused
            let smaller_unused = (0..v).filter(|&u| !used[u]).count();
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, odd ^ (smaller_unused % 2 == 1), out);
            prefix.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], false, &mut out);
    out
}

/// Decides membership in `G_Phi` by searching for a witness `S`.
#[derive(Debug, Clone)]
pub struct MembershipOracle<D: EuclideanDomain> {
    ring: FiniteRing<D>,
    n: usize,
    diag: Vec<u16>,
    // solutions[i][b]: all s with d_i * s = b
    solutions: Vec<Vec<Vec<u16>>>,
    perms: Vec<(Vec<usize>, bool)>,
}

impl<D: EuclideanDomain> MembershipOracle<D> {
    pub fn new(phi: &DivisorChainPhi<D>) -> Result<Self> {
        let ring = FiniteRing::new(phi.modulus())?;
        let size = ring.size() as u16;
        let diag: Vec<u16> = phi.diagonal().iter().map(|d| ring.index_of(d)).collect();
        let solutions = diag
            .iter()
            .map(|&d| {
                let mut table = vec![Vec::new(); size as usize];
                for s in 0..size {
                    table[ring.mul(d, s) as usize].push(s);
                }
                table
            })
            .collect();
        Ok(MembershipOracle { ring, n: phi.n(), diag, solutions, perms: permutations(phi.n()) })
    }

    pub fn ring(&self) -> &FiniteRing<D> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Determinant by full permutation expansion.
    pub fn det(&self, a: &[u16]) -> u16 {
        let r = &self.ring;
        let mut acc = 0u16;
        for (perm, odd) in &self.perms {
            let mut term = r.one();
            for (i, &j) in perm.iter().enumerate() {
                term = r.mul(term, a[i * self.n + j]);
            }
            acc = r.add(acc, if *odd { r.neg(term) } else { term });
        }
        acc
    }

    pub fn indices_of(&self, h: &MatrixRm<D>) -> Vec<u16> {
        h.entries().iter().map(|e| self.ring.index_of(e)).collect()
    }

    pub fn matrix_of(&self, a: &[u16]) -> MatrixRm<D> {
        let modulus = self.ring.elements[0].modulus();
        MatrixRm::from_fn(self.n, modulus, |i, j| self.ring.element(a[i * self.n + j]).clone())
    }

    pub fn is_member(&self, h: &MatrixRm<D>) -> Result<bool> {
        if h.n() != self.n {
            return Err(Error::DimensionMismatch(format!("H is {0}x{0}, Phi is {1}x{1}", h.n(), self.n)));
        }
        if h.modulus() != self.ring.elements[0].modulus() {
            return Err(Error::ModulusMismatch);
        }
        self.is_member_indices(&self.indices_of(h))
    }

    /// Membership for `H` given by row-major element indices.
    pub fn is_member_indices(&self, h: &[u16]) -> Result<bool> {
        let n = self.n;
        if !self.ring.is_unit(self.det(h)) {
            return Ok(false);
        }
        let mut choices: Vec<&[u16]> = Vec::with_capacity(n * n);
        let mut count: u64 = 1;
        for i in 0..n {
            for j in 0..n {
                let rhs = self.ring.mul(self.diag[j], h[i * n + j]);
                let list = &self.solutions[i][rhs as usize];
                if list.is_empty() {
                    return Ok(false);
                }
                count = count.saturating_mul(list.len() as u64);
                choices.push(list);
            }
        }
        if count > ORACLE_CANDIDATE_BOUND {
            return Err(Error::RingTooLarge { size: count.to_string(), bound: ORACLE_CANDIDATE_BOUND });
        }
        let mut s = vec![0u16; n * n];
        Ok(self.search(&choices, &mut s, 0))
    }

    fn search(&self, choices: &[&[u16]], s: &mut [u16], pos: usize) -> bool {
        if pos == s.len() {
            return self.ring.is_unit(self.det(s));
        }
        for &c in choices[pos] {
            s[pos] = c;
            if self.search(choices, s, pos + 1) {
                return true;
            }
        }
        false
    }

    /// Calls `f` on every `n x n` index matrix, in lexicographic order.
    pub fn for_each_matrix(&self, mut f: impl FnMut(&[u16])) {
        let size = self.ring.size() as u16;
        let mut a = vec![0u16; self.n * self.n];
        loop {
            f(&a);
            let mut pos = a.len();
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                a[pos] += 1;
                if a[pos] < size {
                    break;
                }
                a[pos] = 0;
            }
        }
    }
}

pub fn oracle_is_member<D: EuclideanDomain>(h: &MatrixRm<D>, phi: &DivisorChainPhi<D>) -> Result<bool> {
    MembershipOracle::new(phi)?.is_member(h)
}

fn check_enumeration_bounds<D: EuclideanDomain>(phi: &DivisorChainPhi<D>) -> Result<()> {
    let size = phi.modulus().check_size(ENUMERATION_MAX_RING)?;
    if phi.n() > ENUMERATION_MAX_N {
        return Err(Error::RingTooLarge {
            size: format!("{size}^{}", phi.n() * phi.n()),
            bound: ENUMERATION_MAX_RING.pow((ENUMERATION_MAX_N * ENUMERATION_MAX_N) as u32),
        });
    }
    Ok(())
}

/// Calls `f` on every member of `G_Phi` found by the oracle, in
/// lexicographic order of entry indices.
pub fn for_each_member<D: EuclideanDomain>(
    phi: &DivisorChainPhi<D>,
    mut f: impl FnMut(MatrixRm<D>),
) -> Result<()> {
    check_enumeration_bounds(phi)?;
    let oracle = MembershipOracle::new(phi)?;
    let mut failure = None;
    oracle.for_each_matrix(|a| {
        if failure.is_some() {
            return;
        }
        match oracle.is_member_indices(a) {
            Ok(true) => f(oracle.matrix_of(a)),
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    });
    failure.map_or(Ok(()), Err)
}

/// All members of `G_Phi`; refuses when `n > 3` or `|R_m| > 12`.
pub fn enumerate_members<D: EuclideanDomain>(phi: &DivisorChainPhi<D>) -> Result<Vec<MatrixRm<D>>> {
    let mut out = Vec::new();
    for_each_member(phi, |h| out.push(h))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::Integer;

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        let odd: Vec<_> = perms.iter().filter(|p| p.1).map(|p| p.0.clone()).collect();
        assert_eq!(odd, vec![vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]);
    }

    #[test]
    fn tables() {
        let modulus = Modulus::new(Integer::from(12)).unwrap();
        let ring = FiniteRing::new(&modulus).unwrap();
        assert_eq!(ring.mul(5, 7), 11);
        assert_eq!(ring.add(7, 8), 3);
        let units: Vec<u16> = (0..12).filter(|&a| ring.is_unit(a)).collect();
        assert_eq!(units, vec![1, 5, 7, 11]);
    }
}
