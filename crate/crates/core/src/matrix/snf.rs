use std::fmt;

use crate::error::{Error, Result};
use crate::euclid::{divides, exact_div, extended_gcd, EuclideanDomain};

use super::{bareiss_det, cofactor_det};

/// A square matrix over the ambient domain `R` (not reduced).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainMatrix<D: EuclideanDomain> {
    n: usize,
    entries: Vec<D>,
}

impl<D: EuclideanDomain> DomainMatrix<D> {
    pub fn from_rows(rows: Vec<Vec<D>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("expected a nonempty square matrix".into()));
        }
        Ok(DomainMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize, witness: &D) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { witness.one_like() } else { witness.zero_like() })
            .collect();
        DomainMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &D {
        &self.entries[i * self.n + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut D {
        &mut self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[D]> {
        self.entries.chunks(self.n)
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.n, other.n)));
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.get(0, 0).zero_like();
                for k in 0..n {
                    acc = acc.add_ref(&self.get(i, k).mul_ref(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(DomainMatrix { n, entries })
    }

    pub fn det(&self) -> D {
        if self.n <= 4 {
            cofactor_det::<D, D>(&self.entries, self.n)
        } else {
            bareiss_det(self.entries.clone(), self.n)
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<D> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    // rows r, s <- [[a, b], [c, d]] * [row r; row s]
    fn combine_rows(&mut self, r: usize, s: usize, t: &[D; 4]) {
        for col in 0..self.n {
            let (x, y) = (self.get(r, col).clone(), self.get(s, col).clone());
            *self.at(r, col) = t[0].mul_ref(&x).add_ref(&t[1].mul_ref(&y));
            *self.at(s, col) = t[2].mul_ref(&x).add_ref(&t[3].mul_ref(&y));
        }
    }

    // cols r, s <- [col r, col s] * [[a, c], [b, d]]
    fn combine_cols(&mut self, r: usize, s: usize, t: &[D; 4]) {
        for row in 0..self.n {
            let (x, y) = (self.get(row, r).clone(), self.get(row, s).clone());
            *self.at(row, r) = t[0].mul_ref(&x).add_ref(&t[1].mul_ref(&y));
            *self.at(row, s) = t[2].mul_ref(&x).add_ref(&t[3].mul_ref(&y));
        }
    }

    fn swap_rows(&mut self, r: usize, s: usize) {
        for col in 0..self.n {
            self.entries.swap(r * self.n + col, s * self.n + col);
        }
    }

    fn swap_cols(&mut self, r: usize, s: usize) {
        for row in 0..self.n {
            self.entries.swap(row * self.n + r, row * self.n + s);
        }
    }

    fn scale_row(&mut self, r: usize, c: &D) {
        for col in 0..self.n {
            *self.at(r, col) = self.get(r, col).mul_ref(c);
        }
    }
}

impl<D: EuclideanDomain> fmt::Display for DomainMatrix<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// `U * A * V = D` with `U`, `V` invertible over `R` and `D` diagonal with
/// `d_1 | d_2 | ... | d_n`, each `d_i` a canonical associate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<D: EuclideanDomain> {
    pub u: DomainMatrix<D>,
    pub d: DomainMatrix<D>,
    pub v: DomainMatrix<D>,
}

// Unimodular 2x2 transform sending (a, b) to (g, 0).
fn bezout_transform<D: EuclideanDomain>(a: &D, b: &D) -> [D; 4] {
    let (g, s, t) = extended_gcd(a, b);
    let a_g = exact_div(a, &g).expect("gcd divides");
    let b_g = exact_div(b, &g).expect("gcd divides");
    [s, t, b_g.negate(), a_g]
}

pub fn smith_normal_form<D: EuclideanDomain>(a: &DomainMatrix<D>) -> SmithForm<D> {
    let n = a.n;
    let w = a.get(0, 0);
    let mut d = a.clone();
    let mut u = DomainMatrix::identity(n, w);
    let mut v = DomainMatrix::identity(n, w);

    for t in 0..n {
        let Some((pr, pc)) = (t..n)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .find(|&(i, j)| !d.get(i, j).is_zero())
        else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            // clear column t below the pivot
            for i in t + 1..n {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let tr = if divides(d.get(t, t), d.get(i, t)) {
                    let q = exact_div(d.get(i, t), d.get(t, t)).unwrap();
                    [w.one_like(), w.zero_like(), q.negate(), w.one_like()]
                } else {
                    bezout_transform(d.get(t, t), d.get(i, t))
                };
                d.combine_rows(t, i, &tr);
                u.combine_rows(t, i, &tr);
            }
            // clear row t right of the pivot
            let mut touched_column = false;
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let tr = if divides(d.get(t, t), d.get(t, j)) {
                    let q = exact_div(d.get(t, j), d.get(t, t)).unwrap();
                    [w.one_like(), w.zero_like(), q.negate(), w.one_like()]
                } else {
                    touched_column = true;
                    bezout_transform(d.get(t, t), d.get(t, j))
                };
                d.combine_cols(t, j, &tr);
                v.combine_cols(t, j, &tr);
            }
            if touched_column && (t + 1..n).any(|i| !d.get(i, t).is_zero()) {
                continue;
            }
            // the pivot must divide the remaining block
            let offender = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !divides(d.get(t, t), d.get(i, j)));
            match offender {
                Some((i, _)) => {
                    let one = [w.one_like(), w.one_like(), w.zero_like(), w.one_like()];
                    d.combine_rows(t, i, &one);
                    u.combine_rows(t, i, &one);
                }
                None => break,
            }
        }

        let (_, unit) = d.get(t, t).canonical_associate();
        if !unit.is_one() {
            let inv = unit.unit_inverse().expect("associate unit");
            d.scale_row(t, &inv);
            u.scale_row(t, &inv);
        }
    }
    SmithForm { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::{Integer, Poly};
    use proptest::prelude::*;

    fn zmat(rows: &[&[i64]]) -> DomainMatrix<Integer> {
        DomainMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Integer::from(x)).collect()).collect())
            .unwrap()
    }

    fn check(a: &DomainMatrix<Integer>) -> SmithForm<Integer> {
        let snf = smith_normal_form(a);
        let uav = snf.u.mat_mul(a).unwrap().mat_mul(&snf.v).unwrap();
        assert_eq!(uav, snf.d);
        assert!(snf.d.is_diagonal());
        assert!(snf.u.det().is_unit() && snf.v.det().is_unit());
        let diag = snf.d.diagonal();
        for w in diag.windows(2) {
            assert!(divides(&w[0], &w[1]), "{} does not divide {}", w[0], w[1]);
        }
        assert!(diag.iter().all(|x| !x.is_negative()));
        snf
    }

    #[test]
    fn examples() {
        assert_eq!(check(&zmat(&[&[1, 0], &[0, 1]])).d, zmat(&[&[1, 0], &[0, 1]]));
        assert_eq!(check(&zmat(&[&[2, 0], &[0, 3]])).d, zmat(&[&[1, 0], &[0, 6]]));
        assert_eq!(check(&zmat(&[&[4, 2], &[2, 4]])).d, zmat(&[&[2, 0], &[0, 6]]));
        assert_eq!(check(&zmat(&[&[0, 0], &[0, 0]])).d, zmat(&[&[0, 0], &[0, 0]]));
        assert_eq!(check(&zmat(&[&[0, -5], &[0, 0]])).d, zmat(&[&[5, 0], &[0, 0]]));
    }

    #[test]
    fn polynomial_snf() {
        let p = |c: &[i64]| Poly::new(3, c);
        let a = DomainMatrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[1])],
            vec![p(&[0, 0, 2]), p(&[0, 1])],
        ])
        .unwrap();
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mat_mul(&a).unwrap().mat_mul(&snf.v).unwrap(), snf.d);
        assert!(snf.d.is_diagonal());
        // det = x^2 - 2x^2 = -x^2, so D = diag(1, x^2)
        assert_eq!(snf.d.diagonal(), vec![p(&[1]), p(&[0, 0, 1])]);
    }

    proptest! {
        #[test]
        fn random_integer_matrices(n in 1usize..=4, v in proptest::collection::vec(-50i64..=50, 16)) {
            let rows: Vec<&[i64]> = v[..n * n].chunks(n).collect();
            check(&zmat(&rows));
        }
    }
}
