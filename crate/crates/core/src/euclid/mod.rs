//! Euclidean domains.
//!
//! Everything above this module is generic over [`EuclideanDomain`]. Two
//! instantiations are provided: arbitrary precision integers ([`Integer`])
//! and univariate polynomials over a prime field ([`Poly`]).
//!
//! Elements carry whatever context they need (the characteristic of a
//! polynomial, for instance), so constructors that produce "a zero of the
//! same kind" take `&self` as a witness.

mod integer;
mod poly;

pub use integer::Integer;
pub use poly::{is_prime, Poly, MAX_CHARACTERISTIC};

use std::fmt::{Debug, Display};
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};

/// A Euclidean domain with canonical associates.
pub trait EuclideanDomain: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;

    /// Euclidean division `self = q * rhs + r` where `r` is the canonical
    /// remainder: `0 <= r < |rhs|` for integers, `deg r < deg rhs` for
    /// polynomials. Panics if `rhs` is zero.
    fn div_rem_ref(&self, rhs: &Self) -> (Self, Self);

    fn is_unit(&self) -> bool;

    /// Returns `(c, u)` with `self = u * c`, `c` canonical and `u` a unit.
    /// Zero maps to `(0, 1)`.
    fn canonical_associate(&self) -> (Self, Self);

    /// Inverse in the domain, for units only.
    fn unit_inverse(&self) -> Option<Self>;

    /// `|R / self R|`, when `self` is nonzero and the count fits in a `u64`.
    fn residue_count(&self) -> Option<u64>;

    /// The canonical residue with the given position in enumeration order.
    /// `self` only serves as a witness for context such as the characteristic.
    fn residue_from_index(&self, index: u64) -> Self;

    /// Position of a canonical residue in enumeration order.
    fn residue_index(&self) -> Option<u64>;

    /// Uniformly random canonical residue modulo `self` (nonzero).
    fn random_residue<G: Rng + ?Sized>(&self, rng: &mut G) -> Self;

    /// Same element embedding of a small integer (`n * 1`).
    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, n: i64) -> Self;
}

/// Greatest common divisor, normalised to its canonical associate.
/// `canonical_gcd(0, 0) = 0`.
pub fn canonical_gcd<D: EuclideanDomain>(a: &D, b: &D) -> D {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem_ref(&y).1;
        x = y;
        y = r;
    }
    x.canonical_associate().0
}

/// Returns `(g, u, v)` with `u*a + v*b = g = canonical_gcd(a, b)`.
pub fn extended_gcd<D: EuclideanDomain>(a: &D, b: &D) -> (D, D, D) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (a.one_like(), a.zero_like());
    let (mut t0, mut t1) = (a.zero_like(), a.one_like());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem_ref(&r1);
        let s = s0.sub_ref(&q.mul_ref(&s1));
        let t = t0.sub_ref(&q.mul_ref(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let (g, unit) = r0.canonical_associate();
    if unit.is_one() {
        return (g, s0, t0);
    }
    let inv = unit.unit_inverse().expect("canonical_associate returned a non-unit");
    (g, s0.mul_ref(&inv), t0.mul_ref(&inv))
}

/// Exact quotient `a / b`.
pub fn exact_div<D: EuclideanDomain>(a: &D, b: &D) -> Result<D> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.div_rem_ref(b);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            dividend: a.to_string(),
            divisor: b.to_string(),
        });
    }
    Ok(q)
}

/// `a | b` in the domain.
pub fn divides<D: EuclideanDomain>(a: &D, b: &D) -> bool {
    if a.is_zero() {
        return b.is_zero();
    }
    b.div_rem_ref(a).1.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(canonical_gcd(&z(33), &z(36)), z(3));
        assert_eq!(canonical_gcd(&z(0), &z(-36)), z(36));
        assert_eq!(canonical_gcd(&z(0), &z(0)), z(0));
        // x^2 + x and x^2 over F_2
        let a = Poly::new(2, &[0, 1, 1]);
        let b = Poly::new(2, &[0, 0, 1]);
        assert_eq!(canonical_gcd(&a, &b), Poly::new(2, &[0, 1]));
    }

    #[test]
    fn extended_gcd_examples() {
        assert_eq!(extended_gcd(&z(0), &z(5)), (z(5), z(0), z(1)));
        assert_eq!(extended_gcd(&z(6), &z(4)), (z(2), z(1), z(-1)));
        let (g, u, _) = extended_gcd(&z(11), &z(36));
        assert_eq!(g, z(1));
        assert_eq!((u * z(11)).div_rem_ref(&z(36)).1, z(1));
        assert_eq!(z(11 * 23).div_rem_ref(&z(36)).1, z(1));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(exact_div(&z(6), &z(3)), Ok(z(2)));
        assert_eq!(exact_div(&z(-17), &z(1)), Ok(z(-17)));
        assert!(matches!(exact_div(&z(30), &z(4)), Err(Error::NotDivisible { .. })));
        assert_eq!(exact_div(&z(30), &z(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn units_and_associates() {
        assert!(z(-1).is_unit());
        assert!(!z(2).is_unit());
        assert_eq!(z(-6).canonical_associate(), (z(6), z(-1)));
        let f = Poly::new(3, &[2, 2]);
        assert_eq!(f.canonical_associate(), (Poly::new(3, &[1, 1]), Poly::new(3, &[2])));
        assert!(Poly::new(3, &[2]).is_unit());
        assert!(!Poly::new(3, &[0]).is_unit());
    }
}
