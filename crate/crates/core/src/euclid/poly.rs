use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::EuclideanDomain;
use crate::error::Error;

/// Largest supported characteristic for polynomial coefficients.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A univariate polynomial over the prime field `F_p`.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has no coefficients. The prime is not re-validated on
/// every construction; see [`is_prime`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u32,
    coeffs: Vec<u32>,
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

impl Poly {
    /// Builds a polynomial from integer coefficients (reduced mod `p`).
    pub fn new(p: u32, coeffs: &[i64]) -> Self {
        assert!(p >= 2, "characteristic must be a prime");
        let coeffs = coeffs
            .iter()
            .map(|c| c.rem_euclid(p as i64) as u32)
            .collect();
        Self::from_raw(p, coeffs)
    }

    fn from_raw(p: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn scale(&self, c: u32) -> Self {
        Self::from_raw(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different prime fields");
    }

    /// Parses `"[c0,c1,...]"`.
    pub fn parse(p: u32, s: &str) -> Result<Self, Error> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::MalformedInput(format!("expected [c0,c1,...], got {s:?}")))?;
        let mut coeffs = Vec::new();
        for part in body.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let c: i64 = part
                .parse()
                .map_err(|_| Error::MalformedInput(format!("bad coefficient {part:?}")))?;
            coeffs.push(c);
        }
        Ok(Poly::new(p, &coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "[0]");
        }
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Parsing without a characteristic is not possible; this impl exists for
/// the common `F_2` case only.
impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Poly::parse(2, s)
    }
}

impl EuclideanDomain for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.p)
    }

    fn one_like(&self) -> Self {
        Poly { p: self.p, coeffs: vec![1] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.check_same_field(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                add_mod(a, b, self.p)
            })
            .collect();
        Self::from_raw(self.p, coeffs)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.negate())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check_same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.zero_like();
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, self.p), self.p);
            }
        }
        Self::from_raw(self.p, out)
    }

    fn negate(&self) -> Self {
        Self::from_raw(
            self.p,
            self.coeffs.iter().map(|&c| sub_mod(0, c, self.p)).collect(),
        )
    }

    fn div_rem_ref(&self, rhs: &Self) -> (Self, Self) {
        self.check_same_field(rhs);
        let d = rhs.degree().expect("polynomial division by zero");
        let p = self.p;
        let lead_inv = inv_mod(rhs.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (self.zero_like(), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + d], lead_inv, p);
            quot[k] = c;
            if c != 0 {
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] = sub_mod(rem[k + j], mul_mod(c, b, p), p);
                }
            }
        }
        rem.truncate(d);
        (Self::from_raw(p, quot), Self::from_raw(p, rem))
    }

    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    fn canonical_associate(&self) -> (Self, Self) {
        match self.coeffs.last() {
            None => (self.clone(), self.one_like()),
            Some(&lead) => {
                let inv = inv_mod(lead, self.p);
                (self.scale(inv), Poly { p: self.p, coeffs: vec![lead] })
            }
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| Poly {
            p: self.p,
            coeffs: vec![inv_mod(self.coeffs[0], self.p)],
        })
    }

    fn residue_count(&self) -> Option<u64> {
        let d = self.degree()?;
        (self.p as u64).checked_pow(u32::try_from(d).ok()?)
    }

    fn residue_from_index(&self, mut index: u64) -> Self {
        let p = self.p as u64;
        let mut coeffs = Vec::new();
        while index > 0 {
            coeffs.push((index % p) as u32);
            index /= p;
        }
        Self::from_raw(self.p, coeffs)
    }

    fn residue_index(&self) -> Option<u64> {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(self.p as u64)?.checked_add(c as u64)?;
        }
        Some(acc)
    }

    fn random_residue<G: Rng + ?Sized>(&self, rng: &mut G) -> Self {
        let d = self.degree().expect("random residue modulo zero");
        let coeffs = (0..d).map(|_| rng.gen_range(0..self.p)).collect();
        Self::from_raw(self.p, coeffs)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Poly::new(self.p, &[n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primes() {
        assert!(is_prime(2));
        assert!(is_prime(2147483647));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }

    #[test]
    fn division_examples() {
        // (x^2 + 1) / (x + 1) over F_2 = x + 1 remainder 0
        let a = Poly::new(2, &[1, 0, 1]);
        let b = Poly::new(2, &[1, 1]);
        assert_eq!(a.div_rem_ref(&b), (Poly::new(2, &[1, 1]), Poly::zero(2)));
        // x^3 over F_5 divided by 2x + 1
        let a = Poly::new(5, &[0, 0, 0, 1]);
        let b = Poly::new(5, &[1, 2]);
        let (q, r) = a.div_rem_ref(&b);
        assert_eq!(q.mul_ref(&b).add_ref(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn index_roundtrip() {
        let m = Poly::new(3, &[1, 0, 0, 1]);
        assert_eq!(m.residue_count(), Some(27));
        for i in 0..27 {
            let r = m.residue_from_index(i);
            assert!(r.degree().map_or(true, |d| d < 3));
            assert_eq!(r.residue_index(), Some(i));
        }
    }

    #[test]
    fn display_and_parse() {
        let f = Poly::new(7, &[3, 0, 6]);
        assert_eq!(f.to_string(), "[3,0,6]");
        assert_eq!(Poly::parse(7, "[3, 0, 6, 0]").unwrap(), f);
        assert_eq!(Poly::parse(7, "[0]").unwrap(), Poly::zero(7));
        assert!(Poly::parse(7, "3,0").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(0i64..5, 0..6).prop_map(|c| Poly::new(5, &c))
    }

    proptest! {
        #[test]
        fn div_rem_recombines(a in arb_poly(), b in arb_poly().prop_filter("nonzero", |b| !b.is_zero())) {
            let (q, r) = a.div_rem_ref(&b);
            prop_assert_eq!(q.mul_ref(&b).add_ref(&r), a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
            prop_assert!(a.sub_ref(&a).is_zero());
        }
    }
}
