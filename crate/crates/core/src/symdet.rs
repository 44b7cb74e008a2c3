//! Exact permutation expansion of determinants whose entries are monomials
//! in the subdiagonal variables `a_{i,i-1}` and the cofactor variables
//! `h_ij`.
//!
//! Two identities are checked term by term. For the matrix `A` with ones on
//! and above the diagonal, `a_{i,i-1}` on the subdiagonal and the products
//! `b_ij = a_{j+1,j} ... a_{i,i-1}` below it, every permutation `sigma` has
//! the same term as `sigma^{-1}` and as `sigma` applied to the transpose.
//! For the pair `A_ij = lambda_ij h_ij`, `B_ij = lambda_ji h_ij` (with
//! `lambda` the multiplier of the first matrix, `1` on and above the
//! diagonal) corresponding terms, hence determinants, coincide.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::euclid::Integer;
use crate::matrix::DomainMatrix;

pub const MIN_N: usize = 2;
pub const MAX_N: usize = 7;

/// A variable; indices are 1-based as in `a_21`, `h_12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `a_{i,i-1}`, keyed by its row `i`.
    A(usize),
    H(usize, usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A(i) => write!(f, "a{}{}", i, i - 1),
            Var::H(i, j) => write!(f, "h{i}{j}"),
        }
    }
}

/// `coeff * prod v^e`, exponents sorted by variable and all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    coeff: i64,
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn constant(c: i64) -> Self {
        Monomial { coeff: c, exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { coeff: 1, exps: vec![(v, 1)] }
    }

    pub fn coeff(&self) -> i64 {
        self.coeff
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let coeff = self.coeff * other.coeff;
        if coeff == 0 {
            return Monomial::constant(0);
        }
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { coeff, exps }
    }

    pub fn negate(&self) -> Monomial {
        Monomial { coeff: -self.coeff, exps: self.exps.clone() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "{}", self.coeff);
        }
        match self.coeff {
            1 => {}
            -1 => write!(f, "-")?,
            c => write!(f, "{c}*")?,
        }
        let factors: Vec<String> = self
            .exps
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", factors.join("*"))
    }
}

/// A sum of monomials with distinct exponent tables, kept in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymPolynomial {
    terms: BTreeMap<Vec<(Var, u32)>, i64>,
}

impl SymPolynomial {
    pub fn add_monomial(&mut self, m: &Monomial) {
        if m.is_zero() {
            return;
        }
        let c = self.terms.entry(m.exps.clone()).or_insert(0);
        *c += m.coeff;
        if *c == 0 {
            self.terms.remove(&m.exps);
        }
    }

    pub fn sub(&self, other: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        for (exps, c) in &other.terms {
            out.add_monomial(&Monomial { coeff: -c, exps: exps.clone() });
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, &c)| Monomial { coeff: c, exps: e.clone() })
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monomials().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A square matrix of monomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<Monomial>,
}

impl SymMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Monomial) -> Self {
        SymMatrix { n, entries: (0..n * n).map(|k| f(k / n, k % n)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Monomial {
        &self.entries[i * self.n + j]
    }

    pub fn transpose(&self) -> Self {
        SymMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn determinant(&self) -> SymPolynomial {
        let mut det = SymPolynomial::default();
        for sigma in permutations(self.n) {
            det.add_monomial(&perm_term(&sigma, self));
        }
        det
    }
}

fn check_n(n: usize) -> Result<()> {
    if (MIN_N..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange(n))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

pub fn is_odd(sigma: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

pub fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

/// `sign(sigma) * prod_i M[i, sigma(i)]` (0-based `sigma`).
pub fn perm_term(sigma: &[usize], m: &SymMatrix) -> Monomial {
    let mut term = Monomial::constant(if is_odd(sigma) { -1 } else { 1 });
    for (i, &j) in sigma.iter().enumerate() {
        term = term.mul(m.get(i, j));
        if term.is_zero() {
            break;
        }
    }
    term
}

/// `lambda_{p,q}` for 0-based `p`, `q`: `a_{p,p-1}` when `p = q + 1`, the
/// product `b_pq` when `p > q + 1`, and `1` otherwise.
pub fn multiplier(p: usize, q: usize) -> Monomial {
    if p <= q {
        return Monomial::constant(1);
    }
    // rows q+2 ..= p+1 in 1-based numbering
    (q + 1..=p).fold(Monomial::constant(1), |acc, r| acc.mul(&Monomial::var(Var::A(r + 1))))
}

fn h(i: usize, j: usize) -> Monomial {
    Monomial::var(Var::H(i + 1, j + 1))
}

pub fn build_lemma3_matrix(n: usize) -> Result<SymMatrix> {
    check_n(n)?;
    Ok(SymMatrix::from_fn(n, multiplier))
}

/// The pair `(A, B)` with `A_ij = lambda_ij h_ij` and `B_ij = lambda_ji h_ij`.
pub fn build_lemma4_matrices(n: usize) -> Result<(SymMatrix, SymMatrix)> {
    check_n(n)?;
    let a = SymMatrix::from_fn(n, |i, j| multiplier(i, j).mul(&h(i, j)));
    let b = SymMatrix::from_fn(n, |i, j| multiplier(j, i).mul(&h(i, j)));
    Ok((a, b))
}

/// Outcome of one symbolic check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymdetReport {
    pub n: usize,
    /// Permutation terms compared (`n!`).
    pub terms: usize,
    /// Distinct monomials in the determinant.
    pub det_terms: usize,
    pub holds: bool,
}

pub fn lemma3_report(n: usize) -> Result<SymdetReport> {
    let a = build_lemma3_matrix(n)?;
    let at = a.transpose();
    let perms = permutations(n);
    let holds = perms.iter().all(|sigma| {
        let term = perm_term(sigma, &a);
        term == perm_term(&inverse(sigma), &a) && term == perm_term(sigma, &at)
    });
    Ok(SymdetReport { n, terms: perms.len(), det_terms: a.determinant().len(), holds })
}

pub fn lemma4_report(n: usize) -> Result<SymdetReport> {
    let (a, b) = build_lemma4_matrices(n)?;
    let perms = permutations(n);
    let mut det_a = SymPolynomial::default();
    let mut det_b = SymPolynomial::default();
    let mut termwise = true;
    for sigma in &perms {
        let (ta, tb) = (perm_term(sigma, &a), perm_term(sigma, &b));
        termwise &= ta == tb;
        det_a.add_monomial(&ta);
        det_b.add_monomial(&tb);
    }
    let holds = termwise && det_a.sub(&det_b).is_zero();
    Ok(SymdetReport { n, terms: perms.len(), det_terms: det_a.len(), holds })
}

pub fn check_lemma3(n: usize) -> Result<bool> {
    Ok(lemma3_report(n)?.holds)
}

pub fn check_lemma4(n: usize) -> Result<bool> {
    Ok(lemma4_report(n)?.holds)
}

/// Substitutes random integers in `[-9, 9]` for every `a` and `h` and
/// compares the integer determinants of `A` and `B`. The matrices are built
/// directly from the substituted values, not from the monomial entries.
pub fn numeric_cross_check(n: usize, substitutions: usize, seed: u64) -> Result<bool> {
    check_n(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..substitutions {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
        let hv: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-9..=9)).collect();
        // lam(p, q) = a_{q+1} * ... * a_p for p > q (0-based rows)
        let lam = |p: usize, q: usize| -> i64 { (q + 1..=p).map(|r| a[r]).product() };
        let build = |f: &dyn Fn(usize, usize) -> i64| {
            let rows = (0..n).map(|i| (0..n).map(|j| Integer::from(f(i, j))).collect()).collect();
            DomainMatrix::from_rows(rows).expect("square")
        };
        let ma = build(&|i, j| lam(i, j) * hv[i * n + j]);
        let mb = build(&|i, j| lam(j, i) * hv[i * n + j]);
        if ma.det() != mb.det() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> Monomial {
        Monomial::var(Var::A(i))
    }

    #[test]
    fn term_matrices() {
        let m = build_lemma3_matrix(2).unwrap();
        assert_eq!(m.get(1, 0), &a(2));
        assert_eq!(m.get(0, 1), &Monomial::constant(1));
        let m = build_lemma3_matrix(3).unwrap();
        assert_eq!(m.get(2, 0), &a(2).mul(&a(3)));
        assert_eq!(m.get(2, 1), &a(3));
        assert_eq!(m.get(2, 0).to_string(), "a21*a32");
        let m = build_lemma3_matrix(4).unwrap();
        assert_eq!(m.get(3, 0).to_string(), "a21*a32*a43");
        assert!(matches!(build_lemma3_matrix(1), Err(Error::SizeOutOfRange(1))));
        assert!(matches!(build_lemma3_matrix(8), Err(Error::SizeOutOfRange(8))));
    }

    #[test]
    fn permutation_terms() {
        let m = build_lemma3_matrix(3).unwrap();
        assert_eq!(perm_term(&[0, 1, 2], &m), Monomial::constant(1));
        let sigma = [1, 2, 0];
        assert_eq!(perm_term(&sigma, &m).to_string(), "a21*a32");
        assert_eq!(inverse(&sigma), vec![2, 0, 1]);
        assert_eq!(perm_term(&[2, 0, 1], &m).to_string(), "a21*a32");
        assert_eq!(perm_term(&[1, 0, 2], &m).to_string(), "-a21");
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(5).len(), 120);
        let odd = permutations(4).iter().filter(|s| is_odd(s)).count();
        assert_eq!(odd, 12);
    }

    #[test]
    fn pairing_two_by_two() {
        let (ma, mb) = build_lemma4_matrices(2).unwrap();
        assert_eq!(ma.get(1, 0).to_string(), "a21*h21");
        assert_eq!(mb.get(0, 1).to_string(), "a21*h12");
        assert_eq!(ma.determinant().to_string(), "-a21*h12*h21 + h11*h22");
        assert_eq!(ma.determinant(), mb.determinant());
    }

    #[test]
    fn three_by_three_against_hand_expansion() {
        // det of [[1,1,1],[x,1,1],[xy,y,1]] = (1-x)(1-y)
        let det = build_lemma3_matrix(3).unwrap().determinant();
        assert_eq!(det.to_string(), "1 + -a21 + a21*a32 + -a32");
    }

    #[test]
    fn identities_hold_for_small_n() {
        for n in 2..=5 {
            assert!(check_lemma3(n).unwrap());
            let r = lemma4_report(n).unwrap();
            assert!(r.holds);
            assert_eq!(r.terms, (1..=n).product::<usize>());
            assert!(numeric_cross_check(n, 20, n as u64).unwrap());
        }
    }

    #[test]
    fn broken_pairing_is_detected() {
        // a matrix whose multipliers do not factor through the subdiagonal
        let n = 3;
        let lam = |p: usize, q: usize| if p == 2 && q == 0 { a(3) } else { multiplier(p, q) };
        let ma = SymMatrix::from_fn(n, |i, j| lam(i, j).mul(&h(i, j)));
        let mb = SymMatrix::from_fn(n, |i, j| lam(j, i).mul(&h(i, j)));
        assert!(!ma.determinant().sub(&mb.determinant()).is_zero());
    }
}
