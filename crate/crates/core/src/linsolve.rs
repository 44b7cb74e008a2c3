//! Linear congruences `a * x = b` in `R_m`.
//!
//! A solution that divides every other solution is a *generating* solution;
//! any two are associates. [`generating_solution`] computes the one pinned
//! by the deterministic unit decompositions of `a` and `b`:
//!
//! ```text
//! x0 = (mu_b / mu_a) * e_b * e_a^{-1}
//! ```
//!
//! and the full solution set is the coset `x0 + Ann(a)`.

use crate::error::{Error, Result};
use crate::euclid::{exact_div, EuclideanDomain};
use crate::residue::Residue;

/// Ring-size bound used for exhaustive enumeration by default.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000;

/// The solution set `x0 + annGen * R_m` of a solvable equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionCoset<D: EuclideanDomain> {
    pub x0: Residue<D>,
    pub ann_gen: Residue<D>,
}

impl<D: EuclideanDomain> SolutionCoset<D> {
    /// Distinct elements of the coset in enumeration order.
    ///
    /// Refuses with [`Error::RingTooLarge`] when `|R_m|` exceeds `bound`.
    pub fn enumerate(&self, bound: u64) -> Result<Vec<Residue<D>>> {
        self.x0.modulus().check_size(bound)?;
        let mut out: Vec<_> = self
            .ann_gen
            .ideal_elements(bound)?
            .iter()
            .map(|t| &self.x0 + t)
            .collect();
        out.sort_by_key(|r| r.index());
        Ok(out)
    }

    pub fn contains(&self, x: &Residue<D>) -> Result<bool> {
        self.ann_gen.divides(&x.try_sub(&self.x0)?)
    }
}

pub fn is_solvable<D: EuclideanDomain>(a: &Residue<D>, b: &Residue<D>) -> Result<bool> {
    a.divides(b)
}

/// The pinned generating solution of `a * x = b`.
///
/// For `a = b = 0` every element solves the equation and `1` is returned.
pub fn generating_solution<D: EuclideanDomain>(a: &Residue<D>, b: &Residue<D>) -> Result<Residue<D>> {
    if !is_solvable(a, b)? {
        return Err(Error::Unsolvable { a: a.to_string(), b: b.to_string() });
    }
    let da = a.unit_decompose();
    let db = b.unit_decompose();
    let quotient = exact_div(&db.mu, &da.mu).expect("solvability implies mu_a | mu_b");
    let ea_inv = da.unit.inverse().expect("decomposition unit is invertible");
    Ok(&(&db.unit * &ea_inv) * &a.modulus().reduce(&quotient))
}

pub fn solution_coset<D: EuclideanDomain>(a: &Residue<D>, b: &Residue<D>) -> Result<SolutionCoset<D>> {
    Ok(SolutionCoset {
        x0: generating_solution(a, b)?,
        ann_gen: a.ann_generator(),
    })
}

/// Whether `x` is a generating solution of `a * x = b`: it solves the
/// equation and is an associate of the pinned generating solution.
pub fn is_generating<D: EuclideanDomain>(a: &Residue<D>, b: &Residue<D>, x: &Residue<D>) -> bool {
    let Ok(g) = generating_solution(a, b) else {
        return false;
    };
    match a.try_mul(x) {
        Ok(ax) if ax == *b => x.associates(&g).unwrap_or(false),
        _ => false,
    }
}

/// Product of generating solutions along a divisor chain: if `g21` is
/// generating for `c1 * x = c2` and `g32` for `c2 * x = c3`, the product is
/// generating for `c1 * x = c3`.
pub fn compose_generating<D: EuclideanDomain>(g21: &Residue<D>, g32: &Residue<D>) -> Result<Residue<D>> {
    g21.try_mul(g32)
}

/// [`compose_generating`] with its preconditions checked against the chain.
pub fn compose_generating_checked<D: EuclideanDomain>(
    chain: [&Residue<D>; 3],
    g21: &Residue<D>,
    g32: &Residue<D>,
) -> Result<Residue<D>> {
    let [c1, c2, c3] = chain;
    if !is_generating(c1, c2, g21) || !is_generating(c2, c3, g32) {
        return Err(Error::PreconditionViolated(
            "factors are not generating solutions along the chain".into(),
        ));
    }
    compose_generating(g21, g32)
}

/// Checks the annihilator transfer identity for `c1 | c2`, both nonzero.
///
/// With `g = generating_solution(c1, c2)` and `alpha_i = alpha_element(c_i)`
/// this returns whether `g * alpha_2 = alpha_1` and `g` is a generating
/// solution of `alpha_2 * x = alpha_1`.
pub fn alpha_transfer_check<D: EuclideanDomain>(c1: &Residue<D>, c2: &Residue<D>) -> Result<bool> {
    if c1.is_zero() || c2.is_zero() {
        return Err(Error::PreconditionViolated("elements must be nonzero".into()));
    }
    if !c1.divides(c2)? {
        return Err(Error::PreconditionViolated(format!("{c1} does not divide {c2}")));
    }
    let g = generating_solution(c1, c2)?;
    let a1 = c1.alpha_element();
    let a2 = c2.alpha_element();
    Ok(transfer_holds(&g, &a1, &a2))
}

/// `g * alpha_2 = alpha_1` and `g` generating for `alpha_2 * x = alpha_1`,
/// for caller-chosen annihilator generators.
pub fn transfer_holds<D: EuclideanDomain>(g: &Residue<D>, alpha1: &Residue<D>, alpha2: &Residue<D>) -> bool {
    g.try_mul(alpha2).is_ok_and(|p| p == *alpha1) && is_generating(alpha2, alpha1, g)
}
