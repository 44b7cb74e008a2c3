//! Arithmetic in the residue ring `R_m = R / mR`.
//!
//! A [`Residue`] is a canonical representative together with a shared
//! [`Modulus`]. Beyond ring arithmetic this module provides the unit
//! decomposition `c = mu_c * e` (with `mu_c = (c, m)` and `e` a unit), the
//! divisibility test in `R_m`, and generators of annihilator ideals.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::euclid::{canonical_gcd, divides, exact_div, extended_gcd, EuclideanDomain};

#[derive(Debug)]
struct ModulusInner<D> {
    m: D,
    size: Option<u64>,
}

/// The modulus `m` of a residue ring, stored as its canonical associate.
///
/// Cloning is cheap; all residues of one ring share the same allocation.
#[derive(Debug, Clone)]
pub struct Modulus<D>(Arc<ModulusInner<D>>);

impl<D: EuclideanDomain> Modulus<D> {
    /// Rejects zero and units.
    pub fn new(m: D) -> Result<Self> {
        if m.is_zero() || m.is_unit() {
            return Err(Error::InvalidModulus(m.to_string()));
        }
        let m = m.canonical_associate().0;
        let size = m.residue_count();
        Ok(Modulus(Arc::new(ModulusInner { m, size })))
    }

    pub fn value(&self) -> &D {
        &self.0.m
    }

    /// `|R_m|`, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        self.0.size
    }

    /// Fails with [`Error::RingTooLarge`] unless `|R_m| <= bound`.
    pub fn check_size(&self, bound: u64) -> Result<u64> {
        match self.size() {
            Some(s) if s <= bound => Ok(s),
            Some(s) => Err(Error::RingTooLarge { size: s.to_string(), bound }),
            None => Err(Error::RingTooLarge { size: format!("|R/{}|", self.value()), bound }),
        }
    }

    pub fn reduce(&self, c: &D) -> Residue<D> {
        Residue {
            rep: c.div_rem_ref(&self.0.m).1,
            modulus: self.clone(),
        }
    }

    pub fn from_i64(&self, n: i64) -> Residue<D> {
        self.reduce(&self.0.m.from_i64_like(n))
    }

    pub fn zero(&self) -> Residue<D> {
        Residue { rep: self.0.m.zero_like(), modulus: self.clone() }
    }

    pub fn one(&self) -> Residue<D> {
        Residue { rep: self.0.m.one_like(), modulus: self.clone() }
    }

    /// The residue at position `index` of the canonical enumeration.
    pub fn element(&self, index: u64) -> Residue<D> {
        self.reduce(&self.0.m.residue_from_index(index))
    }

    /// All elements in enumeration order, provided `|R_m| <= bound`.
    pub fn elements(&self, bound: u64) -> Result<impl Iterator<Item = Residue<D>> + '_> {
        let size = self.check_size(bound)?;
        Ok((0..size).map(move |i| self.element(i)))
    }

    pub fn random<G: Rng + ?Sized>(&self, rng: &mut G) -> Residue<D> {
        Residue { rep: self.0.m.random_residue(rng), modulus: self.clone() }
    }

    fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.m == other.0.m
    }
}

impl<D: EuclideanDomain> PartialEq for Modulus<D> {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl<D: EuclideanDomain> Eq for Modulus<D> {}

impl<D: EuclideanDomain> Hash for Modulus<D> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value().hash(state);
    }
}

impl<D: EuclideanDomain> fmt::Display for Modulus<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.m)
    }
}

/// An element of `R_m`.
#[derive(Debug, Clone)]
pub struct Residue<D> {
    rep: D,
    modulus: Modulus<D>,
}

/// `c = mu * e` with `mu = (c, m)` canonical and `e` a unit of `R_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitDecomposition<D: EuclideanDomain> {
    pub mu: D,
    pub unit: Residue<D>,
}

impl<D: EuclideanDomain> Residue<D> {
    pub fn rep(&self) -> &D {
        &self.rep
    }

    pub fn modulus(&self) -> &Modulus<D> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    /// Position in the canonical enumeration of `R_m`.
    pub fn index(&self) -> Option<u64> {
        self.rep.residue_index()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus.same(&other.modulus) {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    fn wrap(&self, value: D) -> Self {
        self.modulus.reduce(&value)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.wrap(self.rep.add_ref(&rhs.rep)))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.wrap(self.rep.sub_ref(&rhs.rep)))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.wrap(self.rep.mul_ref(&rhs.rep)))
    }

    /// Multiplies by an element of the ambient domain.
    pub fn scale(&self, c: &D) -> Self {
        self.wrap(self.rep.mul_ref(c))
    }

    /// `mu_c = (rep, m)`, the canonical gcd with the modulus. `mu_0 = m`.
    pub fn mu(&self) -> D {
        canonical_gcd(&self.rep, self.modulus.value())
    }

    pub fn is_unit(&self) -> bool {
        self.mu().is_one()
    }

    /// Inverse via Bezout coefficients.
    pub fn inverse(&self) -> Result<Self> {
        let (g, u, _) = extended_gcd(&self.rep, self.modulus.value());
        if !g.is_one() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(self.wrap(u))
    }

    /// The unit decomposition `c = mu_c * e`.
    ///
    /// Writing `c = mu * c'`, the unit is the first `c' + t * (m / mu)`, with
    /// `t` running through the canonical enumeration, that is coprime to `m`.
    /// Such a `t` exists because `(c', m / mu) = 1`. The choice is
    /// deterministic, which pins every generating solution derived from it.
    pub fn unit_decompose(&self) -> UnitDecomposition<D> {
        let m = self.modulus.value();
        let mu = self.mu();
        let cofactor = exact_div(&self.rep, &mu).expect("gcd divides its argument");
        let step = exact_div(m, &mu).expect("gcd divides the modulus");
        let mut t: u64 = 0;
        loop {
            let candidate = cofactor.add_ref(&m.residue_from_index(t).mul_ref(&step));
            let candidate = candidate.div_rem_ref(m).1;
            if canonical_gcd(&candidate, m).is_one() {
                return UnitDecomposition {
                    mu,
                    unit: Residue { rep: candidate, modulus: self.modulus.clone() },
                };
            }
            t += 1;
            debug_assert!(self.modulus.size().map_or(true, |s| t < s));
        }
    }

    /// `self | other` in `R_m`, which holds iff `(self, m) | (other, m)`,
    /// equivalently iff `(self, m)` divides the representative of `other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(divides(&self.mu(), &other.rep))
    }

    /// Associates in `R_m`: equal gcds with the modulus.
    pub fn associates(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.mu() == other.mu())
    }

    /// The plain annihilator generator `m / mu_c`.
    pub fn ann_generator(&self) -> Self {
        let m = self.modulus.value();
        self.wrap(exact_div(m, &self.mu()).expect("gcd divides the modulus"))
    }

    /// The unit-twisted annihilator generator `(m / mu_c) * e^{-1}`.
    ///
    /// Twisting by the inverse of the pinned unit makes the transfer identity
    /// `[c2 / c1] * alpha(c2) = alpha(c1)` hold exactly for the pinned
    /// generating solution `[c2 / c1] = (mu_2 / mu_1) * e_2 * e_1^{-1}`.
    pub fn alpha_element(&self) -> Self {
        let dec = self.unit_decompose();
        let inv = dec.unit.inverse().expect("decomposition unit is invertible");
        let m = self.modulus.value();
        let plain = exact_div(m, &dec.mu).expect("gcd divides the modulus");
        self.wrap(plain.mul_ref(&inv.rep))
    }

    /// Elements of the principal ideal `self * R_m`, in enumeration order.
    ///
    /// The ideal generated by `c` equals the one generated by `mu_c`, whose
    /// elements are `mu_c * r` for `r` running over residues modulo `m / mu_c`.
    pub fn ideal_elements(&self, bound: u64) -> Result<Vec<Self>> {
        let m = self.modulus.value();
        let mu = self.mu();
        let quotient = exact_div(m, &mu).expect("gcd divides the modulus");
        let count = quotient.residue_count().unwrap_or(1);
        if quotient.is_unit() {
            return Ok(vec![self.modulus.zero()]);
        }
        if count > bound {
            return Err(Error::RingTooLarge { size: count.to_string(), bound });
        }
        let mut out: Vec<Self> = (0..count)
            .map(|i| self.wrap(mu.mul_ref(&quotient.residue_from_index(i))))
            .collect();
        out.sort_by_key(|r| r.index());
        Ok(out)
    }

    /// `Ann(self) = { x : self * x = 0 }`, in enumeration order.
    pub fn annihilator(&self, bound: u64) -> Result<Vec<Self>> {
        self.ann_generator().ideal_elements(bound)
    }
}

impl<D: EuclideanDomain> PartialEq for Residue<D> {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.modulus.same(&other.modulus)
    }
}

impl<D: EuclideanDomain> Eq for Residue<D> {}

impl<D: EuclideanDomain> Hash for Residue<D> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
        self.modulus.value().hash(state);
    }
}

impl<D: EuclideanDomain> fmt::Display for Residue<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

// Operator sugar; these panic on a modulus mismatch. Use `try_*` to get an
// error instead.
macro_rules! residue_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<D: EuclideanDomain> $trait<&Residue<D>> for &Residue<D> {
            type Output = Residue<D>;
            fn $method(self, rhs: &Residue<D>) -> Residue<D> {
                self.$checked(rhs).expect("residues from different rings")
            }
        }

        impl<D: EuclideanDomain> $trait for Residue<D> {
            type Output = Residue<D>;
            fn $method(self, rhs: Residue<D>) -> Residue<D> {
                (&self).$checked(&rhs).expect("residues from different rings")
            }
        }
    };
}

residue_op!(Add, add, try_add);
residue_op!(Sub, sub, try_sub);
residue_op!(Mul, mul, try_mul);

impl<D: EuclideanDomain> Neg for &Residue<D> {
    type Output = Residue<D>;
    fn neg(self) -> Residue<D> {
        self.wrap(self.rep.negate())
    }
}

impl<D: EuclideanDomain> Neg for Residue<D> {
    type Output = Residue<D>;
    fn neg(self) -> Residue<D> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::{Integer, Poly};

    fn zm(m: i64) -> Modulus<Integer> {
        Modulus::new(Integer::from(m)).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(Modulus::new(Integer::from(0)).is_err());
        assert!(Modulus::new(Integer::from(-1)).is_err());
        assert_eq!(zm(-36).value(), &Integer::from(36));
        assert!(Modulus::new(Poly::new(3, &[2])).is_err());
    }

    #[test]
    fn reduction_and_arithmetic() {
        let m = zm(36);
        assert_eq!(m.from_i64(230).rep(), &Integer::from(14));
        assert_eq!(m.from_i64(-1).rep(), &Integer::from(35));
        assert!(m.from_i64(0).is_zero());
        assert_eq!((&m.from_i64(26) * &m.from_i64(7)).rep(), &Integer::from(2));
        let other = zm(8).from_i64(3);
        assert_eq!(m.from_i64(1).try_add(&other), Err(Error::ModulusMismatch));
    }

    #[test]
    fn units_and_inverses() {
        let m = zm(36);
        assert_eq!(m.from_i64(11).inverse().unwrap(), m.from_i64(23));
        assert_eq!(m.one().inverse().unwrap(), m.one());
        assert!(!m.from_i64(30).is_unit());
        assert!(matches!(m.from_i64(30).inverse(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn unit_decomposition_vectors() {
        let m = zm(36);
        let d = m.from_i64(33).unit_decompose();
        assert_eq!((d.mu, d.unit), (Integer::from(3), m.from_i64(11)));
        let d = m.from_i64(30).unit_decompose();
        assert_eq!((d.mu, d.unit), (Integer::from(6), m.from_i64(5)));
        let d = m.from_i64(25).unit_decompose();
        assert_eq!((d.mu, d.unit), (Integer::from(1), m.from_i64(25)));
        let d = m.zero().unit_decompose();
        assert_eq!((d.mu, d.unit), (Integer::from(36), m.one()));
    }

    #[test]
    fn unit_decomposition_needs_offset() {
        // 8 = 4 * 2 in Z_12 but 2 is not a unit there; 2 + 3 = 5 is.
        let m = zm(12);
        let d = m.from_i64(8).unit_decompose();
        assert_eq!(d.mu, Integer::from(4));
        assert_eq!(d.unit, m.from_i64(5));
        assert_eq!(m.reduce(&d.mu) * d.unit, m.from_i64(8));
    }

    #[test]
    fn divisibility_and_associates() {
        let m = zm(36);
        assert!(m.from_i64(33).divides(&m.from_i64(30)).unwrap());
        assert!(m.from_i64(7).divides(&m.zero()).unwrap());
        assert!(m.from_i64(14).associates(&m.from_i64(2)).unwrap());
        assert!(!zm(8).from_i64(4).divides(&zm(8).from_i64(2)).unwrap());
    }

    #[test]
    fn annihilator_vectors() {
        let m = zm(36);
        let c = m.from_i64(33);
        assert_eq!(c.ann_generator(), m.from_i64(12));
        let ann: Vec<_> = c.annihilator(1000).unwrap().iter().map(|r| r.to_string()).collect();
        assert_eq!(ann, ["0", "12", "24"]);
        assert_eq!(c.alpha_element(), m.from_i64(24));

        let m = zm(144);
        let c = m.from_i64(8);
        assert_eq!(c.ann_generator(), m.from_i64(18));
        assert_eq!(c.annihilator(1000).unwrap().len(), 8);
        let ann4: Vec<_> = m.from_i64(4).annihilator(1000).unwrap().iter().map(|r| r.to_string()).collect();
        assert_eq!(ann4, ["0", "36", "72", "108"]);

        assert_eq!(m.zero().ann_generator(), m.one());
        assert_eq!(m.one().annihilator(10).unwrap(), vec![m.zero()]);
    }

    #[test]
    fn polynomial_residues() {
        let m = Modulus::new(Poly::new(2, &[0, 1, 0, 0, 1])).unwrap(); // x^4 + x
        assert_eq!(m.size(), Some(16));
        let x = m.reduce(&Poly::new(2, &[0, 1]));
        assert_eq!(x.mu(), Poly::new(2, &[0, 1]));
        assert!(!x.is_unit());
        let d = x.unit_decompose();
        assert_eq!(m.reduce(&d.mu) * d.unit.clone(), x);
        assert!(d.unit.is_unit());
        // Ann(x) is generated by x^3 + 1
        assert_eq!(x.ann_generator(), m.reduce(&Poly::new(2, &[1, 0, 0, 1])));
    }
}
