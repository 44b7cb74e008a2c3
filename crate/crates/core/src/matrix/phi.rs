use crate::error::{Error, Result};
use crate::euclid::{canonical_gcd, EuclideanDomain};
use crate::linsolve::generating_solution;
use crate::matrix::MatrixRm;
use crate::residue::{Modulus, Residue};

/// Where a diagonal position of `Phi` sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Leading unit entry, normalised to `1`.
    One,
    /// Position within the non-unit chain `phi_t | ... | phi_k`.
    Chain(usize),
    /// Trailing zero entry.
    Zero,
}

/// `Phi = diag(1, ..., 1, phi_t, ..., phi_k, 0, ..., 0)` over `R_m` together
/// with its fixed quotient and annihilator tables.
///
/// The adjacent quotients `q_i = [phi_{i+1} / phi_i]` are the pinned
/// generating solutions, and longer quotients are *defined* as their
/// products. `alpha_i` is the unit-twisted annihilator generator of `phi_i`.
#[derive(Debug, Clone)]
pub struct DivisorChainPhi<D: EuclideanDomain> {
    modulus: Modulus<D>,
    ones: usize,
    chain: Vec<Residue<D>>,
    zeros: usize,
    adj_quot: Vec<Residue<D>>,
    alpha: Vec<Residue<D>>,
    normalized: Vec<usize>,
    diag: Vec<Residue<D>>,
    mus: Vec<D>,
    // lambda[i * n + j] for i > j; 1 elsewhere
    lambda: Vec<Residue<D>>,
}

impl<D: EuclideanDomain> DivisorChainPhi<D> {
    /// Validates the pattern (units, non-unit chain, zeros) and builds the
    /// quotient and annihilator tables. Leading units are replaced by `1`;
    /// their positions are reported by [`normalized_positions`](Self::normalized_positions).
    pub fn build(n: usize, diagonal: &[Residue<D>]) -> Result<Self> {
        if diagonal.len() != n || n == 0 {
            return Err(Error::MalformedChain(format!(
                "diagonal has {} entries, expected {n}",
                diagonal.len()
            )));
        }
        let modulus = diagonal[0].modulus().clone();
        if diagonal.iter().any(|d| *d.modulus() != modulus) {
            return Err(Error::ModulusMismatch);
        }

        let mut ones = 0;
        let mut normalized = Vec::new();
        while ones < n && diagonal[ones].is_unit() {
            if !diagonal[ones].is_one() {
                normalized.push(ones);
            }
            ones += 1;
        }
        let mut chain: Vec<Residue<D>> = Vec::new();
        let mut pos = ones;
        while pos < n && !diagonal[pos].is_zero() {
            let d = &diagonal[pos];
            if d.is_unit() {
                return Err(Error::MalformedChain(format!("unit {d} inside the chain at position {pos}")));
            }
            if let Some(prev) = chain.last() {
                if !prev.divides(d)? {
                    return Err(Error::MalformedChain(format!("{prev} does not divide {d} (position {pos})")));
                }
            }
            chain.push(d.clone());
            pos += 1;
        }
        let zeros = n - pos;
        if let Some(bad) = (pos..n).find(|&i| !diagonal[i].is_zero()) {
            return Err(Error::MalformedChain(format!(
                "nonzero entry {} after a zero at position {bad}",
                diagonal[bad]
            )));
        }

        let adj_quot = chain
            .windows(2)
            .map(|w| generating_solution(&w[0], &w[1]))
            .collect::<Result<Vec<_>>>()?;
        let alpha = chain.iter().map(Residue::alpha_element).collect();

        let mut diag = vec![modulus.one(); ones];
        diag.extend(chain.iter().cloned());
        diag.extend(std::iter::repeat(modulus.zero()).take(zeros));
        let mus = diag.iter().map(|d| canonical_gcd(d.rep(), modulus.value())).collect();

        let mut phi = DivisorChainPhi {
            modulus,
            ones,
            chain,
            zeros,
            adj_quot,
            alpha,
            normalized,
            diag,
            mus,
            lambda: Vec::new(),
        };
        phi.lambda = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                if i > j {
                    phi.compute_multiplier(i, j)
                } else {
                    phi.modulus.one()
                }
            })
            .collect();
        Ok(phi)
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn modulus(&self) -> &Modulus<D> {
        &self.modulus
    }

    /// Number of leading ones (`t - 1`).
    pub fn ones(&self) -> usize {
        self.ones
    }

    pub fn chain(&self) -> &[Residue<D>] {
        &self.chain
    }

    /// Number of trailing zeros (`n - k`).
    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn adjacent_quotients(&self) -> &[Residue<D>] {
        &self.adj_quot
    }

    pub fn alphas(&self) -> &[Residue<D>] {
        &self.alpha
    }

    /// Positions whose supplied unit was replaced by `1`.
    pub fn normalized_positions(&self) -> &[usize] {
        &self.normalized
    }

    pub fn diagonal(&self) -> &[Residue<D>] {
        &self.diag
    }

    /// `(d_i, m)` for the full diagonal entry `d_i`.
    pub fn diag_mu(&self, i: usize) -> &D {
        &self.mus[i]
    }

    pub fn region(&self, i: usize) -> Region {
        if i < self.ones {
            Region::One
        } else if i < self.ones + self.chain.len() {
            Region::Chain(i - self.ones)
        } else {
            Region::Zero
        }
    }

    pub fn to_matrix(&self) -> MatrixRm<D> {
        let n = self.n();
        MatrixRm::from_fn(n, &self.modulus, |i, j| {
            if i == j {
                self.diag[i].clone()
            } else {
                self.modulus.zero()
            }
        })
    }

    /// `[phi_p / phi_q]` for diagonal positions `q < p` inside the chain: the
    /// product of the adjacent quotients between them.
    pub fn chain_quotient(&self, p: usize, q: usize) -> Result<Residue<D>> {
        match (self.region(p), self.region(q)) {
            (Region::Chain(cp), Region::Chain(cq)) if cq < cp => Ok(self.quotient_by_chain_index(cp, cq)),
            _ => Err(Error::IndexOutOfRange(format!(
                "need chain positions q < p in {}..{}, got p = {p}, q = {q}",
                self.ones,
                self.ones + self.chain.len()
            ))),
        }
    }

    fn quotient_by_chain_index(&self, cp: usize, cq: usize) -> Residue<D> {
        self.adj_quot[cq..cp]
            .iter()
            .fold(self.modulus.one(), |acc, q| &acc * q)
    }

    fn compute_multiplier(&self, i: usize, j: usize) -> Residue<D> {
        match (self.region(i), self.region(j)) {
            (Region::One, Region::One) | (Region::Zero, Region::Zero) => self.modulus.one(),
            (Region::Chain(ci), Region::One) => self.chain[ci].clone(),
            (Region::Chain(ci), Region::Chain(cj)) => self.quotient_by_chain_index(ci, cj),
            (Region::Zero, Region::One) => self.modulus.zero(),
            (Region::Zero, Region::Chain(cj)) => self.alpha[cj].clone(),
            _ => unreachable!("regions are ordered along the diagonal"),
        }
    }

    /// The multiplier `lambda_ij` (for `i > j`) that every member `H` of the
    /// Zelisko group carries at position `(i, j)`: `phi_i` below the ones,
    /// `[phi_i / phi_j]` inside the chain block, `alpha_j` below the chain,
    /// `0` in the bottom-left block and `1` in the free diagonal blocks.
    ///
    /// These equal products of the adjacent multipliers `lambda_{r, r-1}`.
    pub fn lower_multiplier(&self, i: usize, j: usize) -> &Residue<D> {
        assert!(i > j, "multipliers are defined strictly below the diagonal");
        &self.lambda[i * self.n() + j]
    }

    /// `lambda_{i, i-1}`.
    pub fn adjacent_multiplier(&self, i: usize) -> &Residue<D> {
        self.lower_multiplier(i, i - 1)
    }
}
