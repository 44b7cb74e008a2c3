use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, RandBigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::EuclideanDomain;
use crate::error::Error;

/// An integer of unbounded magnitude.
///
/// Values that fit in an `i64` are stored inline; everything else spills to
/// a [`BigInt`]. The representation is normalised, so `Big` never holds a
/// value that would fit in `Small`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(s) => Integer::Small(s),
            Err(_) => Integer::Big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl FromStr for Integer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        s.parse::<BigInt>()
            .map(Integer::from_big)
            .map_err(|_| Error::MalformedInput(format!("not an integer: {s:?}")))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

macro_rules! checked_binop {
    ($a:expr, $b:expr, $checked:ident, $op:tt) => {
        match ($a, $b) {
            (Integer::Small(x), Integer::Small(y)) => match x.$checked(*y) {
                Some(v) => Integer::Small(v),
                None => Integer::Big(BigInt::from(*x) $op BigInt::from(*y)),
            },
            (x, y) => Integer::from_big(x.to_bigint() $op y.to_bigint()),
        }
    };
}

impl EuclideanDomain for Integer {
    fn zero_like(&self) -> Self {
        Integer::Small(0)
    }

    fn one_like(&self) -> Self {
        Integer::Small(1)
    }

    fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        checked_binop!(self, rhs, checked_add, +)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        checked_binop!(self, rhs, checked_sub, -)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        checked_binop!(self, rhs, checked_mul, *)
    }

    fn negate(&self) -> Self {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }

    fn div_rem_ref(&self, rhs: &Self) -> (Self, Self) {
        assert!(!EuclideanDomain::is_zero(rhs), "Euclidean division by zero");
        if let (Integer::Small(a), Integer::Small(d)) = (self, rhs) {
            if let Some(q) = a.checked_div_euclid(*d) {
                return (Integer::Small(q), Integer::Small(a.rem_euclid(*d)));
            }
        }
        let (a, d) = (self.to_bigint(), rhs.to_bigint());
        let (mut q, mut r) = a.div_rem(&d);
        if r.is_negative() {
            if d.is_positive() {
                q -= 1;
                r += &d;
            } else {
                q += 1;
                r -= &d;
            }
        }
        (Integer::from_big(q), Integer::from_big(r))
    }

    fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1) | Integer::Small(-1))
    }

    fn canonical_associate(&self) -> (Self, Self) {
        if self.is_negative() {
            (self.negate(), Integer::Small(-1))
        } else {
            (self.clone(), Integer::Small(1))
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }

    fn residue_count(&self) -> Option<u64> {
        match self {
            Integer::Small(v) if *v != 0 => Some(v.unsigned_abs()),
            Integer::Small(_) => None,
            Integer::Big(b) => b.abs().to_u64(),
        }
    }

    fn residue_from_index(&self, index: u64) -> Self {
        Integer::from(index)
    }

    fn residue_index(&self) -> Option<u64> {
        match self {
            Integer::Small(v) => u64::try_from(*v).ok(),
            Integer::Big(b) => b.to_u64(),
        }
    }

    fn random_residue<G: Rng + ?Sized>(&self, rng: &mut G) -> Self {
        match self.abs() {
            Integer::Small(m) => Integer::Small(rng.gen_range(0..m)),
            Integer::Big(m) => {
                Integer::from_big(rng.gen_bigint_range(&BigInt::zero(), &m))
            }
        }
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Integer::Small(n)
    }
}

impl Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        self.add_ref(&rhs)
    }
}

impl Sub for Integer {
    type Output = Integer;
    fn sub(self, rhs: Integer) -> Integer {
        self.sub_ref(&rhs)
    }
}

impl Mul for Integer {
    type Output = Integer;
    fn mul(self, rhs: Integer) -> Integer {
        self.mul_ref(&rhs)
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        self.negate()
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::Small(1)
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::Small(0)
    }

    fn is_zero(&self) -> bool {
        EuclideanDomain::is_zero(self)
    }
}

impl From<Integer> for BigInt {
    fn from(v: Integer) -> BigInt {
        match v {
            Integer::Small(s) => BigInt::from(s),
            Integer::Big(b) => b,
        }
    }
}

impl Integer {
    pub fn sign(&self) -> Sign {
        match self {
            Integer::Small(0) => Sign::NoSign,
            Integer::Small(v) if *v < 0 => Sign::Minus,
            Integer::Small(_) => Sign::Plus,
            Integer::Big(b) => b.sign(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(s: &str) -> Integer {
        s.parse().unwrap()
    }

    #[test]
    fn overflow_spills_and_normalises() {
        let m = Integer::from(i64::MAX);
        let s = m.add_ref(&Integer::from(1));
        assert!(matches!(s, Integer::Big(_)));
        assert_eq!(s.to_string(), "9223372036854775808");
        assert_eq!(s.sub_ref(&Integer::from(1)), Integer::Small(i64::MAX));
        let min = Integer::from(i64::MIN);
        assert_eq!(min.negate().to_string(), "9223372036854775808");
        let (q, r) = min.div_rem_ref(&Integer::from(-1));
        assert_eq!(q.to_string(), "9223372036854775808");
        assert!(EuclideanDomain::is_zero(&r));
    }

    #[test]
    fn euclidean_remainder_is_nonnegative() {
        let (q, r) = Integer::from(-7).div_rem_ref(&Integer::from(3));
        assert_eq!((q, r), (Integer::from(-3), Integer::from(2)));
        let (q, r) = Integer::from(-7).div_rem_ref(&Integer::from(-3));
        assert_eq!((q, r), (Integer::from(3), Integer::from(2)));
        let a = big("-100000000000000000000000007");
        let d = big("-1000000000000");
        let (q, r) = a.div_rem_ref(&d);
        assert!(!r.is_negative());
        assert_eq!(q.mul_ref(&d).add_ref(&r), a);
    }

    proptest! {
        #[test]
        fn div_rem_recombines(a in any::<i64>(), d in any::<i64>().prop_filter("nonzero", |d| *d != 0)) {
            let (a, d) = (Integer::from(a), Integer::from(d));
            let (q, r) = a.div_rem_ref(&d);
            prop_assert!(!r.is_negative());
            prop_assert!(r < d.abs());
            prop_assert_eq!(q.mul_ref(&d).add_ref(&r), a);
        }

        #[test]
        fn arithmetic_matches_bigint(a in any::<i64>(), b in any::<i64>()) {
            let (x, y) = (Integer::from(a), Integer::from(b));
            let (bx, by) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!(x.mul_ref(&y).to_bigint(), &bx * &by);
            prop_assert_eq!(x.add_ref(&y).to_bigint(), &bx + &by);
            prop_assert_eq!(x.sub_ref(&y).to_bigint(), &bx - &by);
        }
    }
}
