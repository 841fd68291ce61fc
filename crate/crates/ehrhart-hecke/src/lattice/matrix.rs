//! Exact integer matrices with Hermite/Smith normal forms.
//!
//! Convention used throughout the crate: a matrix represents a lattice via
//! its ROWS. The Hermite normal form is upper triangular with positive
//! diagonal and entries above each diagonal entry reduced modulo it
//! (`0 <= h[j][i] < h[i][i]` for `j < i`).

use super::LatticeError;
use crate::exact::{BigInt, BigRational};
use num::{BigInt as NumBigInt, Integer, One, Signed, Zero};
use std::fmt;

/// A square integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    e: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), n * n, "square matrix required");
        IntMatrix { n, e: entries }
    }

    pub fn from_i64(n: usize, entries: &[i64]) -> Self {
        Self::new(n, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut e = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n);
            e.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { n, e }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = vec![BigInt::zero(); n * n];
        for i in 0..n {
            e[i * n + i] = BigInt::one();
        }
        IntMatrix { n, e }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.e[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.e
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut e = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                e[j * n + i] = self.e[i * n + j].clone();
            }
        }
        IntMatrix { n, e }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut e = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.e[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * &rhs.e[k * n + j];
                    e[i * n + j] += prod;
                }
            }
        }
        IntMatrix { n, e }
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut a: Vec<BigRational> = self.e.iter().map(|x| BigRational::from(x.clone())).collect();
        let mut det = BigRational::one();
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[r * n + c].is_zero());
            let Some(piv) = piv else { return BigInt::zero() };
            if piv != c {
                for j in 0..n {
                    a.swap(c * n + j, piv * n + j);
                }
                det = -det;
            }
            let pv = a[c * n + c].clone();
            det *= pv.clone();
            for r in c + 1..n {
                let f = &a[r * n + c] / &pv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let sub = &f * &a[c * n + j];
                    a[r * n + j] -= sub;
                }
            }
        }
        assert!(det.is_integer());
        det.to_integer()
    }

    /// Exact rational inverse.
    pub fn inverse_rational(&self) -> Result<Vec<Vec<BigRational>>, LatticeError> {
        let n = self.n;
        let mut a: Vec<BigRational> = Vec::with_capacity(n * 2 * n);
        for i in 0..n {
            for j in 0..n {
                a.push(BigRational::from(self.e[i * n + j].clone()));
            }
            for j in 0..n {
                a.push(if i == j { BigRational::one() } else { BigRational::zero() });
            }
        }
        let w = 2 * n;
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[r * w + c].is_zero()).ok_or(LatticeError::SingularMatrix)?;
            if piv != c {
                for j in 0..w {
                    a.swap(c * w + j, piv * w + j);
                }
            }
            let pv = a[c * w + c].clone();
            for j in 0..w {
                a[c * w + j] /= pv.clone();
            }
            for r in 0..n {
                if r == c || a[r * w + c].is_zero() {
                    continue;
                }
                let f = a[r * w + c].clone();
                for j in 0..w {
                    let sub = &f * &a[c * w + j];
                    a[r * w + j] -= sub;
                }
            }
        }
        Ok((0..n)
            .map(|i| (0..n).map(|j| a[i * w + n + j].clone()).collect())
            .collect())
    }

    /// Row-style Hermite normal form (the rows span the same lattice).
    pub fn hnf(&self) -> Result<IntMatrix, LatticeError> {
        let n = self.n;
        let mut a = self.e.clone();
        for c in 0..n {
            // gcd-eliminate below-diagonal entries in column c
            loop {
                let mut rows: Vec<usize> =
                    (c..n).filter(|&r| !a[r * n + c].is_zero()).collect();
                if rows.is_empty() {
                    return Err(LatticeError::SingularMatrix);
                }
                rows.sort_by_key(|&r| a[r * n + c].abs());
                let rmin = rows[0];
                if rmin != c {
                    for j in 0..n {
                        a.swap(c * n + j, rmin * n + j);
                    }
                }
                if rows.len() == 1 && rows[0] >= c {
                    // only the pivot row remains nonzero in this column
                    let only = (c + 1..n).all(|r| a[r * n + c].is_zero());
                    if only {
                        break;
                    }
                }
                let pv = a[c * n + c].clone();
                let mut changed = false;
                for r in c + 1..n {
                    if a[r * n + c].is_zero() {
                        continue;
                    }
                    let f = a[r * n + c].div_floor(&pv);
                    if !f.is_zero() {
                        for j in 0..n {
                            let sub = &f * &a[c * n + j];
                            a[r * n + j] -= sub;
                        }
                    }
                    if !a[r * n + c].is_zero() {
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            if a[c * n + c].is_negative() {
                for j in 0..n {
                    a[c * n + j] = -a[c * n + j].clone();
                }
            }
            // reduce above-pivot entries
            let pv = a[c * n + c].clone();
            for r in 0..c {
                let f = a[r * n + c].div_floor(&pv);
                if !f.is_zero() {
                    for j in 0..n {
                        let sub = &f * &a[c * n + j];
                        a[r * n + j] -= sub;
                    }
                }
            }
        }
        Ok(IntMatrix { n, e: a })
    }

    /// Diagonal of the Smith normal form (nonnegative, each dividing the next).
    pub fn smith_diagonal(&self) -> Result<Vec<BigInt>, LatticeError> {
        let n = self.n;
        if self.det().is_zero() {
            return Err(LatticeError::SingularMatrix);
        }
        let mut a = self.e.clone();
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            'outer: loop {
                // smallest nonzero entry of the trailing block to (k, k)
                let mut best: Option<(usize, usize)> = None;
                for i in k..n {
                    for j in k..n {
                        if !a[i * n + j].is_zero()
                            && best
                                .map(|(bi, bj)| a[i * n + j].abs() < a[bi * n + bj].abs())
                                .unwrap_or(true)
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let (bi, bj) = best.expect("nonsingular");
                if bi != k {
                    for j in 0..n {
                        a.swap(k * n + j, bi * n + j);
                    }
                }
                if bj != k {
                    for i in 0..n {
                        a.swap(i * n + k, i * n + bj);
                    }
                }
                let pv = a[k * n + k].clone();
                let mut clean = true;
                for i in k + 1..n {
                    if a[i * n + k].is_zero() {
                        continue;
                    }
                    let f = a[i * n + k].div_floor(&pv);
                    for j in k..n {
                        let sub = &f * &a[k * n + j];
                        a[i * n + j] -= sub;
                    }
                    if !a[i * n + k].is_zero() {
                        clean = false;
                    }
                }
                for j in k + 1..n {
                    if a[k * n + j].is_zero() {
                        continue;
                    }
                    let f = a[k * n + j].div_floor(&pv);
                    for i in k..n {
                        let sub = &f * &a[i * n + k];
                        a[i * n + j] -= sub;
                    }
                    if !a[k * n + j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // pivot must divide the rest of the block
                for i in k + 1..n {
                    for j in k + 1..n {
                        if !(&a[i * n + j] % &pv).is_zero() {
                            for jj in k..n {
                                let add = a[i * n + jj].clone();
                                a[k * n + jj] += add;
                            }
                            continue 'outer;
                        }
                    }
                }
                break;
            }
            diag.push(a[k * n + k].abs());
        }
        Ok(diag)
    }

    /// `p`-adic valuations of the Smith diagonal, sorted decreasingly.
    pub fn smith_type(&self, p: u64) -> Result<crate::qcombinat::Partition, LatticeError> {
        let diag = self.smith_diagonal()?;
        let p = NumBigInt::from(p);
        let mut vals: Vec<u32> = diag
            .into_iter()
            .map(|mut d| {
                let mut v = 0;
                while !d.is_zero() && (&d % &p).is_zero() {
                    d /= &p;
                    v += 1;
                }
                v
            })
            .collect();
        vals.sort_unstable_by(|a, b| b.cmp(a));
        Ok(crate::qcombinat::Partition::new(vals))
    }

    /// True when upper triangular with positive diagonal and reduced
    /// above-diagonal entries.
    pub fn is_hnf(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            if !self.e[i * n + i].is_positive() {
                return false;
            }
            for j in 0..i {
                if !self.e[i * n + j].is_zero() {
                    return false;
                }
                // entry above pivot i in column i: rows j < i
                let v = &self.e[j * n + i];
                if v.is_negative() || v >= &self.e[i * n + i] {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcombinat::Partition;

    #[test]
    fn hnf_examples() {
        let id = IntMatrix::identity(3);
        assert_eq!(id.hnf().unwrap(), id);
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![0, 1]]);
        assert_eq!(m.hnf().unwrap(), m);
        let m = IntMatrix::from_rows(&[vec![0, 2], vec![1, 0]]);
        assert_eq!(m.hnf().unwrap(), IntMatrix::from_rows(&[vec![1, 0], vec![0, 2]]));
        let sing = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(matches!(sing.hnf(), Err(LatticeError::SingularMatrix)));
    }

    #[test]
    fn hnf_is_canonical_under_row_ops() {
        let m = IntMatrix::from_rows(&[vec![4, 7, 2], vec![-3, 5, 1], vec![6, 0, 9]]);
        let u = IntMatrix::from_rows(&[vec![1, 2, 0], vec![0, 1, 0], vec![3, 1, 1]]); // det 1
        let h1 = m.hnf().unwrap();
        let h2 = u.mul(&m).hnf().unwrap();
        assert_eq!(h1, h2);
        assert!(h1.is_hnf());
        assert_eq!(h1.det(), m.det().abs());
    }

    #[test]
    fn smith_types() {
        let m = IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 4, 0], vec![0, 0, 2]]);
        assert_eq!(m.smith_type(2).unwrap(), Partition::new(vec![2, 1]));
        let m = IntMatrix::from_rows(&[vec![6, 0], vec![0, 2]]);
        assert_eq!(m.smith_type(2).unwrap(), Partition::new(vec![1, 1]));
        assert_eq!(m.smith_type(3).unwrap(), Partition::new(vec![1]));
        assert_eq!(IntMatrix::identity(4).smith_type(5).unwrap(), Partition::empty());
    }

    #[test]
    fn smith_divisibility() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let d = m.smith_diagonal().unwrap();
        for w in d.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        let det: BigInt = d.iter().product();
        assert_eq!(det, m.det().abs());
    }

    #[test]
    fn inverse_rational_roundtrip() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![0, 1]]);
        let inv = m.inverse_rational().unwrap();
        // m * inv = id
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = BigRational::zero();
                for k in 0..2 {
                    acc += BigRational::from(m.at(i, k).clone()) * &inv[k][j];
                }
                assert_eq!(acc, if i == j { BigRational::one() } else { BigRational::zero() });
            }
        }
    }
}
