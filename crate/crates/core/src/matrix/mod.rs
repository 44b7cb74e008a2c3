//! Dense square matrices over `R_m`, the divisor-chain diagonal `Phi`, and
//! Smith normal form over the ambient domain.

mod phi;
mod snf;

pub use phi::{DivisorChainPhi, Region};
pub use snf::{smith_normal_form, DomainMatrix, SmithForm};

use std::borrow::Borrow;
use std::fmt;

use crate::error::{Error, Result};
use crate::euclid::{exact_div, EuclideanDomain};
use crate::residue::{Modulus, Residue};

/// An `n x n` matrix over `R_m`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixRm<D: EuclideanDomain> {
    n: usize,
    modulus: Modulus<D>,
    entries: Vec<Residue<D>>,
}

impl<D: EuclideanDomain> MatrixRm<D> {
    /// Reduces every entry modulo `m`.
    pub fn from_rows(modulus: &Modulus<D>, rows: &[Vec<D>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {n}x{n} matrix",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|c| modulus.reduce(c)));
        }
        Ok(MatrixRm { n, modulus: modulus.clone(), entries })
    }

    /// Shorthand for small integer entries.
    pub fn from_i64_rows(modulus: &Modulus<D>, rows: &[&[i64]]) -> Result<Self> {
        let w = modulus.value();
        let rows: Vec<Vec<D>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| w.from_i64_like(c)).collect())
            .collect();
        Self::from_rows(modulus, &rows)
    }

    /// Builds a matrix from residues, which must share one modulus.
    pub fn from_entries(n: usize, entries: Vec<Residue<D>>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        let modulus = entries[0].modulus().clone();
        if entries.iter().any(|e| *e.modulus() != modulus) {
            return Err(Error::ModulusMismatch);
        }
        Ok(MatrixRm { n, modulus, entries })
    }

    pub fn identity(n: usize, modulus: &Modulus<D>) -> Self {
        Self::from_fn(n, modulus, |i, j| if i == j { modulus.one() } else { modulus.zero() })
    }

    pub fn from_fn(n: usize, modulus: &Modulus<D>, mut f: impl FnMut(usize, usize) -> Residue<D>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        MatrixRm { n, modulus: modulus.clone(), entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &Modulus<D> {
        &self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> &Residue<D> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Residue<D>) -> Result<()> {
        if *value.modulus() != self.modulus {
            return Err(Error::ModulusMismatch);
        }
        self.entries[i * self.n + j] = value;
        Ok(())
    }

    pub fn entries(&self) -> &[Residue<D>] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Residue<D>]> {
        self.entries.chunks(self.n)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, &self.modulus, |i, j| self.get(j, i).clone())
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{}x{0} vs {}x{1}", self.n, other.n)));
        }
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch);
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let m = self.modulus.value();
        Ok(Self::from_fn(n, &self.modulus, |i, j| {
            let mut acc = m.zero_like();
            for k in 0..n {
                acc = acc.add_ref(&self.get(i, k).rep().mul_ref(other.get(k, j).rep()));
            }
            self.modulus.reduce(&acc)
        }))
    }

    fn lifted(&self) -> Vec<D> {
        self.entries.iter().map(|e| e.rep().clone()).collect()
    }

    /// Determinant: cofactor expansion up to `n = 4`, fraction-free Bareiss
    /// elimination on lifted representatives beyond that.
    pub fn det(&self) -> Residue<D> {
        let d = if self.n <= 4 {
            let last = self.entries.len() - 1;
            let refs: [&D; 16] = std::array::from_fn(|k| self.entries[k.min(last)].rep());
            cofactor_det::<D, &D>(&refs, self.n)
        } else {
            bareiss_det(self.lifted(), self.n)
        };
        self.modulus.reduce(&d)
    }

    /// Invertible over a commutative ring iff the determinant is a unit.
    pub fn is_invertible(&self) -> bool {
        self.det().is_unit()
    }

    /// Inverse as `adj(M) * det(M)^{-1}`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let det_inv = det.inverse().map_err(|_| Error::NotInvertible(det.to_string()))?;
        let n = self.n;
        if n == 1 {
            return Ok(Self::from_fn(1, &self.modulus, |_, _| det_inv.clone()));
        }
        let lifted = self.lifted();
        Ok(Self::from_fn(n, &self.modulus, |i, j| {
            // adj(M)[i][j] = (-1)^{i+j} minor(j, i)
            let minor: Vec<D> = (0..n)
                .filter(|&r| r != j)
                .flat_map(|r| (0..n).filter(move |&c| c != i).map(move |c| (r, c)))
                .map(|(r, c)| lifted[r * n + c].clone())
                .collect();
            let mut cof = if n - 1 <= 4 {
                cofactor_det::<D, D>(&minor, n - 1)
            } else {
                bareiss_det(minor, n - 1)
            };
            if (i + j) % 2 == 1 {
                cof = cof.negate();
            }
            &self.modulus.reduce(&cof) * &det_inv
        }))
    }
}

impl<D: EuclideanDomain> fmt::Display for MatrixRm<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "] mod {}", self.modulus)
    }
}

fn det2<D: EuclideanDomain>(a: &D, b: &D, c: &D, d: &D) -> D {
    a.mul_ref(d).sub_ref(&b.mul_ref(c))
}

pub(crate) fn cofactor_det<D: EuclideanDomain, T: Borrow<D>>(a: &[T], n: usize) -> D {
    let e = |k: usize| a[k].borrow();
    match n {
        0 => panic!("determinant of an empty matrix"),
        1 => e(0).clone(),
        2 => det2(e(0), e(1), e(2), e(3)),
        3 => {
            let t0 = e(0).mul_ref(&det2(e(4), e(5), e(7), e(8)));
            let t1 = e(1).mul_ref(&det2(e(3), e(5), e(6), e(8)));
            let t2 = e(2).mul_ref(&det2(e(3), e(4), e(6), e(7)));
            t0.sub_ref(&t1).add_ref(&t2)
        }
        _ => {
            // expansion along the first row
            let mut acc = e(0).zero_like();
            for col in 0..n {
                if e(col).is_zero() {
                    continue;
                }
                let minor: Vec<&D> = (1..n)
                    .flat_map(|r| (0..n).filter(move |&c| c != col).map(move |c| (r, c)))
                    .map(|(r, c)| e(r * n + c))
                    .collect();
                let term = e(col).mul_ref(&cofactor_det::<D, &D>(&minor, n - 1));
                acc = if col % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
            acc
        }
    }
}

/// Fraction-free elimination over the domain; every division is exact.
pub(crate) fn bareiss_det<D: EuclideanDomain>(mut a: Vec<D>, n: usize) -> D {
    let one = a[0].one_like();
    let mut sign_flip = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return one.zero_like();
            };
            for c in 0..n {
                a.swap(k * n + c, swap * n + c);
            }
            sign_flip = !sign_flip;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot
                    .mul_ref(&a[i * n + j])
                    .sub_ref(&a[i * n + k].mul_ref(&a[k * n + j]));
                a[i * n + j] = exact_div(&num, &prev).expect("Bareiss division is exact");
            }
            a[i * n + k] = one.zero_like();
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if sign_flip {
        d.negate()
    } else {
        d
    }
}
