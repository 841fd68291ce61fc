//! Symplectic coset enumeration.
//!
//! A symplectic superlattice of similitude `p^m` is a lattice `L` with
//! `Z^{2n} <= L <= p^{-m} Z^{2n}` of index `p^{nm}` whose rescaled Gram
//! matrix `p^m B J B^t` is integral (it is then automatically unimodular and
//! alternating, so a symplectic basis exists). These lattices correspond
//! bijectively to the right cosets of integral symplectic similitudes with
//! multiplier `p^m`; the coset representative recovered from a lattice basis
//! `B` is `A = B^{-T}`, which satisfies `A^t J A = p^m J` exactly once `B` is
//! put into symplectic form.

use super::enumerate::visit_sublattices_capped;
use super::{IntMatrix, LatticeError};
use crate::exact::{BigInt, BigRational};
use crate::qcombinat::Partition;
use num::{One, Signed, Zero};

/// Which Hecke generator class a coset belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeckeClass {
    /// The class of `D_{n,k}`: `diag(1^{n}, p^{n})` for `k = 0`, and
    /// `diag(1^{n-k}, p^{k}, (p^2)^{n-k}, p^{k})` for `k >= 1`.
    Generator(u32),
    /// A similitude-`p^m` coset outside the generator classes (products of
    /// lower ones), or any coset with `m > 2`.
    Composite,
}

/// One right coset of the integral symplectic similitudes of multiplier
/// `p^m`, i.e. one symplectic superlattice.
#[derive(Clone, Debug)]
pub struct SymplecticCoset {
    /// Integral representative `A` with `A^t J A = p^m J`, `det A = p^{nm}`.
    pub rep: IntMatrix,
    /// HNF basis (rows) of the dual sublattice `p^m L`; membership tests and
    /// the superlattice basis `H^{-T}` both come from here.
    pub dual_hnf: IntMatrix,
    /// The prime.
    pub p: u64,
    /// Similitude exponent `m` (the multiplier is `p^m`).
    pub similitude_exp: u32,
    /// Generator-class tag.
    pub hecke_class: HeckeClass,
}

fn mat_mul_i64(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i * n + k];
            if v == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = out[i * n + j]
                    .checked_add(v.checked_mul(b[k * n + j]).expect("overflow"))
                    .expect("overflow");
            }
        }
    }
    out
}

fn transpose_i64(n: usize, a: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

fn jmat_i64(half: usize) -> Vec<i64> {
    let n = 2 * half;
    let mut j = vec![0i64; n * n];
    for i in 0..half {
        j[i * n + half + i] = 1;
        j[(half + i) * n + i] = -1;
    }
    j
}

/// Adjugate of a small integer matrix via cofactor expansion.
fn adjugate_i64(n: usize, a: &[i64]) -> Vec<i64> {
    fn det_rec(n: usize, a: &[i64], rows: &mut Vec<usize>, cols: &mut Vec<usize>) -> i64 {
        let k = rows.len();
        if k == 1 {
            return a[rows[0] * n + cols[0]];
        }
        let r0 = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        let mut acc: i64 = 0;
        for (ci, &c) in cols.clone().iter().enumerate() {
            let v = a[r0 * n + c];
            if v == 0 {
                continue;
            }
            let mut sub_cols: Vec<usize> = cols.clone();
            sub_cols.remove(ci);
            let mut sub_rows = rest.clone();
            let minor = det_rec(n, a, &mut sub_rows, &mut sub_cols);
            let term = v.checked_mul(minor).expect("overflow");
            if ci % 2 == 0 {
                acc = acc.checked_add(term).expect("overflow");
            } else {
                acc = acc.checked_sub(term).expect("overflow");
            }
        }
        acc
    }
    let mut adj = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let mut cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = det_rec(n, a, &mut rows, &mut cols);
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i * n + j] = sign * minor;
        }
    }
    adj
}

/// Rescaled Gram matrix `p^m H^{-T} J H^{-1}` of the superlattice basis
/// `H^{-T}`, provided it is integral; `None` otherwise.
/// With `adj = adjugate(H)` and `det H = p^{nm}`, integrality means
/// `det^2 / p^m` divides every entry of `adj^t J adj`.
fn rescaled_gram(half: usize, h: &[i64], p: u64, m: u32) -> Option<Vec<i64>> {
    let n = 2 * half;
    let adj = adjugate_i64(n, h);
    let j = jmat_i64(half);
    let aj = mat_mul_i64(n, &transpose_i64(n, &adj), &j);
    let s = mat_mul_i64(n, &aj, &adj);
    let det: i64 = (0..n).map(|i| h[i * n + i]).product();
    debug_assert_eq!(det, (p as i64).pow(half as u32 * m));
    let scale = (det as i128) * (det as i128) / (p as i128).pow(m);
    let mut out = vec![0i64; n * n];
    for (k, &v) in s.iter().enumerate() {
        let v = v as i128;
        if v % scale != 0 {
            return None;
        }
        out[k] = i64::try_from(v / scale).expect("small");
    }
    Some(out)
}

/// Given an integral alternating unimodular `S`, find unimodular `U` with
/// `U S U^t = J` (standard symplectic Gram reduction over the integers).
fn symplectize(half: usize, s: &[i64]) -> Vec<i64> {
    let n = 2 * half;
    let mut s = s.to_vec();
    let mut u: Vec<i64> = vec![0; n * n];
    for i in 0..n {
        u[i * n + i] = 1;
    }
    // basis order produced: e_1, f_1, e_2, f_2, ...; permuted to J layout at the end
    let row_op = |s: &mut [i64], u: &mut [i64], dst: usize, src: usize, f: i64| {
        // rows and the congruent column op
        for j in 0..n {
            s[dst * n + j] += f * s[src * n + j];
        }
        for i in 0..n {
            s[i * n + dst] += f * s[i * n + src];
        }
        for j in 0..n {
            u[dst * n + j] += f * u[src * n + j];
        }
    };
    let row_swap = |s: &mut [i64], u: &mut [i64], a: usize, b: usize| {
        for j in 0..n {
            s.swap(a * n + j, b * n + j);
        }
        for i in 0..n {
            s.swap(i * n + a, i * n + b);
        }
        for j in 0..n {
            u.swap(a * n + j, b * n + j);
        }
    };
    for blk in 0..half {
        let base = 2 * blk;
        // find the minimal positive pairing among remaining rows
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in base..n {
                for j in i + 1..n {
                    if s[i * n + j] != 0
                        && best
                            .map(|(bi, bj)| s[i * n + j].abs() < s[bi * n + bj].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let (bi, bj) = best.expect("form is nondegenerate");
            row_swap(&mut s, &mut u, base, bi);
            row_swap(&mut s, &mut u, base + 1, bj);
            if s[base * n + base + 1] < 0 {
                row_swap(&mut s, &mut u, base, base + 1);
            }
            let pv = s[base * n + base + 1];
            // reduce the pairing column below the pivot pair
            let mut clean = true;
            for i in base + 2..n {
                let v = s[i * n + base + 1];
                if v != 0 {
                    let f = v.div_euclid(pv);
                    if f != 0 {
                        row_op(&mut s, &mut u, i, base, -f);
                    }
                    if s[i * n + base + 1] != 0 {
                        clean = false;
                    }
                }
                let w = s[i * n + base];
                if w != 0 {
                    let f = w.div_euclid(pv);
                    if f != 0 {
                        row_op(&mut s, &mut u, i, base + 1, f);
                    }
                    if s[i * n + base] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                // unimodularity forces the pivot pairing to be 1
                assert_eq!(s[base * n + base + 1], 1, "form is unimodular");
                break;
            }
        }
    }
    // permute rows from (e1, f1, e2, f2, ...) to (e1, e2, ..., f1, f2, ...)
    let mut perm = vec![0usize; n];
    for blk in 0..half {
        perm[blk] = 2 * blk;
        perm[half + blk] = 2 * blk + 1;
    }
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = u[perm[i] * n + j];
        }
    }
    out
}

/// Integer inverse of a unimodular matrix.
fn unimodular_inverse_i64(n: usize, a: &[i64]) -> Vec<i64> {
    let adj = adjugate_i64(n, a);
    let det: i64 = {
        // det = a[0][:] dot adj[:][0]
        (0..n).map(|k| a[k] * adj[k * n]).sum()
    };
    assert!(det == 1 || det == -1, "unimodular matrix required");
    if det == 1 {
        adj
    } else {
        adj.iter().map(|&x| -x).collect()
    }
}

/// Expected Smith type of the generator class `D_{n,k}` at similitude
/// exponent `m` in `{1, 2}`.
fn generator_smith_type(n: usize, k: u32, m: u32) -> Partition {
    match m {
        1 => {
            debug_assert_eq!(k, 0);
            Partition::new(vec![1; n])
        }
        2 => {
            let k = k as usize;
            let mut parts = vec![2u32; n - k];
            parts.extend(vec![1u32; 2 * k]);
            Partition::new(parts)
        }
        _ => unreachable!("only m <= 2 classes are labeled"),
    }
}

/// Enumerate all right cosets of similitude `p^m` for `GSp_{2n}`, i.e. all
/// symplectic superlattices of co-index `p^{nm}`.
pub fn enumerate_symplectic_cosets(
    n: usize,
    p: u64,
    m: u32,
) -> Result<Vec<SymplecticCoset>, LatticeError> {
    let half = n;
    let dim = 2 * n;
    let j = jmat_i64(half);
    let mut out = Vec::new();
    visit_sublattices_capped(dim, p, (n as u32) * m, m, &mut |h, _comp| {
        let Some(s) = rescaled_gram(half, h, p, m) else {
            return;
        };
        let u = symplectize(half, &s);
        // A = U^{-T} H is the coset representative
        let uinv = unimodular_inverse_i64(dim, &u);
        let a = mat_mul_i64(dim, &transpose_i64(dim, &uinv), h);
        // exactness: A^t J A = p^m J
        let lhs = mat_mul_i64(dim, &mat_mul_i64(dim, &transpose_i64(dim, &a), &j), &a);
        let scale = (p as i64).pow(m);
        assert!(
            lhs.iter().zip(j.iter()).all(|(&x, &y)| x == scale * y),
            "representative is not a similitude"
        );
        let basis = IntMatrix::from_i64(dim, h);
        let smith = basis.smith_type(p).expect("nonsingular");
        let hecke_class = match m {
            1 => HeckeClass::Generator(0),
            2 => (1..=n as u32)
                .find(|&k| smith == generator_smith_type(n, k, 2))
                .map(HeckeClass::Generator)
                .unwrap_or(HeckeClass::Composite),
            _ => HeckeClass::Composite,
        };
        out.push(SymplecticCoset {
            rep: IntMatrix::from_i64(dim, &a),
            dual_hnf: basis,
            p,
            similitude_exp: m,
            hecke_class,
        });
    })?;
    Ok(out)
}

/// The cosets in the class of the Hecke generator `T_{n,k,p}`.
pub fn generator_cosets(n: usize, p: u64, k: u32) -> Result<Vec<SymplecticCoset>, LatticeError> {
    let m = if k == 0 { 1 } else { 2 };
    let all = enumerate_symplectic_cosets(n, p, m)?;
    Ok(all
        .into_iter()
        .filter(|c| c.hecke_class == HeckeClass::Generator(k))
        .collect())
}

impl SymplecticCoset {
    /// Does the superlattice contain the rational vector `x`? Membership in
    /// `L = rowspan(H^{-T})` means `x H^t` is integral.
    pub fn lattice_contains(&self, x: &[BigRational]) -> bool {
        let n = self.dual_hnf.dim();
        assert_eq!(x.len(), n);
        for j in 0..n {
            let mut acc = BigRational::zero();
            for i in 0..n {
                // (x H^t)_j = sum_i x_i H[j][i]
                acc += &x[i] * BigRational::from(self.dual_hnf.at(j, i).clone());
            }
            if !acc.is_integer() {
                return false;
            }
        }
        true
    }

    /// Columns of `B = H^{-1}` form a basis of the superlattice in the
    /// column-vector convention used by the polytope code.
    pub fn superlattice_basis(&self) -> Vec<Vec<BigRational>> {
        self.dual_hnf.inverse_rational().expect("HNF is nonsingular")
    }
}

/// Count cosets in the `D_{n,k}` class whose superlattice contains `x`.
pub fn xi_count(n: usize, k: u32, p: u64, x: &[BigRational]) -> Result<u64, LatticeError> {
    let cosets = generator_cosets(n, p, k)?;
    Ok(cosets.iter().filter(|c| c.lattice_contains(x)).count() as u64)
}

/// Brute-force count of Lagrangian subspaces of `F_p^{2n}`, optionally only
/// those containing a fixed line.
pub fn lagrangian_count_oracle(n: usize, p: u64, through_line: bool) -> Result<u64, LatticeError> {
    let dim = 2 * n;
    let size = (p as u64).pow(dim as u32);
    if size > 1_000_000 {
        return Err(LatticeError::SizeLimit(format!("F_p^{{{dim}}} has {size} vectors")));
    }
    let j = jmat_i64(n);
    let pairing = |x: &[i64], y: &[i64]| -> i64 {
        let mut acc = 0i64;
        for a in 0..dim {
            for b in 0..dim {
                acc += x[a] * j[a * dim + b] * y[b];
            }
        }
        acc.rem_euclid(p as i64)
    };
    // enumerate n-dimensional subspaces via reduced row-echelon bases
    let mut count = 0u64;
    let fixed_line: Vec<i64> = {
        let mut v = vec![0i64; dim];
        v[0] = 1;
        v
    };
    // choose pivot columns, then free entries
    let pivots_sets = choose(dim, n);
    for pivots in &pivots_sets {
        // free positions: row i, non-pivot columns beyond pivot i
        let mut free_pos: Vec<(usize, usize)> = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..dim {
                if !pivots.contains(&c) {
                    free_pos.push((i, c));
                }
            }
        }
        let total = (p as u64).pow(free_pos.len() as u32);
        for code in 0..total {
            let mut basis = vec![vec![0i64; dim]; n];
            for (i, &pc) in pivots.iter().enumerate() {
                basis[i][pc] = 1;
            }
            let mut c = code;
            for &(i, col) in &free_pos {
                basis[i][col] = (c % p as u64) as i64;
                c /= p as u64;
            }
            let isotropic = (0..n).all(|a| (a + 1..n).all(|b| pairing(&basis[a], &basis[b]) == 0));
            if !isotropic {
                continue;
            }
            if through_line {
                // membership of e_1 in the row space over F_p: reduce e_1
                let mut v = fixed_line.clone();
                for (i, &pc) in pivots.iter().enumerate() {
                    let f = v[pc].rem_euclid(p as i64);
                    if f != 0 {
                        for cc in 0..dim {
                            v[cc] = (v[cc] - f * basis[i][cc]).rem_euclid(p as i64);
                        }
                    }
                }
                if v.iter().any(|&x| x.rem_euclid(p as i64) != 0) {
                    continue;
                }
            }
            count += 1;
        }
    }
    Ok(count)
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            acc.push(i);
            rec(i + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn coset_counts_m1() {
        assert_eq!(enumerate_symplectic_cosets(1, 2, 1).unwrap().len(), 3);
        assert_eq!(enumerate_symplectic_cosets(1, 3, 1).unwrap().len(), 4);
        assert_eq!(enumerate_symplectic_cosets(2, 2, 1).unwrap().len(), 15);
    }

    #[test]
    fn coset_classes_m2() {
        let all = enumerate_symplectic_cosets(2, 2, 2).unwrap();
        assert_eq!(all.len(), 151);
        let k1 = all.iter().filter(|c| c.hecke_class == HeckeClass::Generator(1)).count();
        let k2 = all.iter().filter(|c| c.hecke_class == HeckeClass::Generator(2)).count();
        let comp = all.iter().filter(|c| c.hecke_class == HeckeClass::Composite).count();
        assert_eq!((k1, k2), (30, 1));
        assert_eq!(k1 + k2 + comp, all.len());
    }

    #[test]
    fn representatives_are_similitudes() {
        for c in enumerate_symplectic_cosets(2, 2, 1).unwrap() {
            let a = &c.rep;
            let det = a.det();
            assert_eq!(det, BigInt::from(4));
        }
    }

    #[test]
    fn lagrangian_counts() {
        assert_eq!(lagrangian_count_oracle(1, 2, false).unwrap(), 3);
        assert_eq!(lagrangian_count_oracle(2, 2, false).unwrap(), 15);
        assert_eq!(lagrangian_count_oracle(2, 2, true).unwrap(), 3);
        assert_eq!(lagrangian_count_oracle(2, 3, false).unwrap(), 40);
        assert_eq!(lagrangian_count_oracle(2, 3, true).unwrap(), 4);
    }

    #[test]
    fn xi_counts_for_n2_p2() {
        let x1 = vec![rat(1, 2), rat_int(0), rat_int(0), rat_int(0)];
        assert_eq!(xi_count(2, 1, 2, &x1).unwrap(), 14);
        let x2 = vec![rat(1, 4), rat_int(0), rat_int(0), rat_int(0)];
        assert_eq!(xi_count(2, 1, 2, &x2).unwrap(), 1);
    }
}
