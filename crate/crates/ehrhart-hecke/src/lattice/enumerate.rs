//! Enumeration of finite-index sublattices of `Z^n` in Hermite normal form,
//! together with Smith types and Hermite compositions.

use super::{IntMatrix, LatticeError};
use crate::qcombinat::Partition;

/// Guard on the total number of HNF matrices an enumeration may visit.
pub const ENUMERATION_CAP: u64 = 20_000_000;

/// A finite-index sublattice of `Z^n`, held as the rows of its HNF basis.
#[derive(Clone, Debug)]
pub struct SublatticeRecord {
    /// HNF basis; the rows generate the lattice.
    pub basis: IntMatrix,
    /// `p`-adic Smith (elementary divisor) type.
    pub smith: Partition,
    /// Hermite composition: `p`-adic valuations of the HNF diagonal.
    pub hermite: Vec<u32>,
    /// Index in `Z^n` (the determinant).
    pub index: u64,
}

/// All compositions of `total` into `parts` nonnegative entries, each at most
/// `cap`.
fn compositions(total: u32, parts: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, cap: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if total <= cap {
                acc.push(total);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for first in 0..=total.min(cap) {
            acc.push(first);
            rec(total - first, parts - 1, cap, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, cap, &mut Vec::new(), &mut out);
    out
}

/// Visit every HNF matrix with diagonal `p^{a_i}` for the given valuation
/// composition. The free entries sit above the diagonal of each column,
/// ranging over `[0, p^{a_i})`.
pub(crate) fn visit_hnf_for_diagonal(n: usize, p: u64, comp: &[u32], f: &mut impl FnMut(&[i64])) {
    let diag: Vec<i64> = comp.iter().map(|&a| (p as i64).pow(a)).collect();
    let free_slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|col| (0..col).map(move |row| (row, col)))
        .collect();
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = diag[i];
    }
    fn rec(
        m: &mut Vec<i64>,
        n: usize,
        diag: &[i64],
        slots: &[(usize, usize)],
        k: usize,
        f: &mut impl FnMut(&[i64]),
    ) {
        if k == slots.len() {
            f(m);
            return;
        }
        let (row, col) = slots[k];
        for v in 0..diag[col] {
            m[row * n + col] = v;
            rec(m, n, diag, slots, k + 1, f);
        }
        m[row * n + col] = 0;
    }
    rec(&mut m, n, &diag, &free_slots, 0, f);
}

/// Number of HNF matrices produced for a diagonal composition.
fn hnf_count_for(p: u64, comp: &[u32]) -> u64 {
    comp.iter()
        .enumerate()
        .map(|(col, &a)| (p as u64).pow(a * col as u32))
        .product()
}

/// Visit all sublattices of `Z^n` of index `p^m`, with the per-diagonal
/// valuation capped at `cap` (use `m` for no extra restriction).
pub(crate) fn visit_sublattices_capped(
    n: usize,
    p: u64,
    m: u32,
    cap: u32,
    f: &mut impl FnMut(&[i64], &[u32]),
) -> Result<(), LatticeError> {
    let comps = compositions(m, n, cap);
    let total: u64 = comps.iter().map(|c| hnf_count_for(p, c)).sum();
    if total > ENUMERATION_CAP {
        return Err(LatticeError::SizeLimit(format!(
            "{total} HNF matrices exceed the enumeration cap"
        )));
    }
    for comp in &comps {
        visit_hnf_for_diagonal(n, p, comp, &mut |m_flat| f(m_flat, comp));
    }
    Ok(())
}

/// All sublattices of `Z^n` of index `p^m` as HNF records.
pub fn enumerate_sublattices(n: usize, p: u64, m: u32) -> Result<Vec<SublatticeRecord>, LatticeError> {
    let mut out = Vec::new();
    visit_sublattices_capped(n, p, m, m, &mut |flat, comp| {
        let basis = IntMatrix::from_i64(n, flat);
        let smith = basis.smith_type(p).expect("HNF is nonsingular");
        out.push(SublatticeRecord {
            basis,
            smith,
            hermite: comp.to_vec(),
            index: (p as u64).pow(m),
        });
    })?;
    Ok(out)
}

/// All sublattices of `Z^n` with Smith type exactly `lambda` (at `p`).
pub fn sublattices_of_type(n: usize, p: u64, lambda: &Partition) -> Result<Vec<SublatticeRecord>, LatticeError> {
    if lambda.len() > n {
        return Ok(Vec::new());
    }
    let m = lambda.size();
    let cap = lambda.part(0);
    let mut out = Vec::new();
    visit_sublattices_capped(n, p, m, cap, &mut |flat, comp| {
        let basis = IntMatrix::from_i64(n, flat);
        let smith = basis.smith_type(p).expect("HNF is nonsingular");
        if &smith == lambda {
            out.push(SublatticeRecord {
                basis,
                smith,
                hermite: comp.to_vec(),
                index: (p as u64).pow(m),
            });
        }
    })?;
    Ok(out)
}

/// All sublattices of `Z^n` of arbitrary index `m >= 1` (not only p-powers):
/// the HNF diagonals run over ordered factorizations of `m`.
pub fn enumerate_index_sublattices(n: usize, m: u64) -> Result<Vec<IntMatrix>, LatticeError> {
    fn divisor_tuples(m: u64, parts: usize) -> Vec<Vec<u64>> {
        if parts == 1 {
            return vec![vec![m]];
        }
        let mut out = Vec::new();
        for d in 1..=m {
            if m % d == 0 {
                for mut rest in divisor_tuples(m / d, parts - 1) {
                    rest.insert(0, d);
                    out.push(rest);
                }
            }
        }
        out
    }
    let tuples = divisor_tuples(m, n);
    let total: u64 = tuples
        .iter()
        .map(|t| t.iter().enumerate().map(|(col, &d)| d.pow(col as u32)).product::<u64>())
        .sum();
    if total > ENUMERATION_CAP {
        return Err(LatticeError::SizeLimit(format!("{total} HNF matrices")));
    }
    let mut out = Vec::new();
    for diag in &tuples {
        let free_slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|col| (0..col).map(move |row| (row, col)))
            .collect();
        let mut mflat = vec![0i64; n * n];
        for i in 0..n {
            mflat[i * n + i] = diag[i] as i64;
        }
        fn rec(
            m: &mut Vec<i64>,
            n: usize,
            diag: &[u64],
            slots: &[(usize, usize)],
            k: usize,
            out: &mut Vec<IntMatrix>,
        ) {
            if k == slots.len() {
                out.push(IntMatrix::from_i64(n, m));
                return;
            }
            let (row, col) = slots[k];
            for v in 0..diag[col] as i64 {
                m[row * n + col] = v;
                rec(m, n, diag, slots, k + 1, out);
            }
            m[row * n + col] = 0;
        }
        rec(&mut mflat, n, diag, &free_slots, 0, &mut out);
    }
    Ok(out)
}

/// Smith type of the projection to the first `n-1` coordinates (drop the last
/// row and column of the HNF basis).
pub fn projected_type(basis: &IntMatrix, p: u64) -> Partition {
    let n = basis.dim();
    assert!(n >= 2);
    let mut rows = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let mut r = Vec::with_capacity(n - 1);
        for j in 0..n - 1 {
            let v: i64 = {
                let b = basis.at(i, j);
                // entries of desk-scale HNF bases fit comfortably
                i64::try_from(b).expect("desk-scale entry")
            };
            r.push(v);
        }
        rows.push(r);
    }
    IntMatrix::from_rows(&rows).smith_type(p).expect("projection of HNF is nonsingular")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sublattice_counts() {
        assert_eq!(enumerate_sublattices(2, 2, 1).unwrap().len(), 3);
        assert_eq!(enumerate_sublattices(1, 5, 3).unwrap().len(), 1);
        let l22 = enumerate_sublattices(2, 2, 2).unwrap();
        assert_eq!(l22.len(), 7);
        let types: Vec<_> = l22.iter().map(|r| r.smith.clone()).collect();
        assert_eq!(types.iter().filter(|t| **t == Partition::new(vec![2])).count(), 6);
        assert_eq!(types.iter().filter(|t| **t == Partition::new(vec![1, 1])).count(), 1);
    }

    #[test]
    fn hermite_composition_matches_diagonal() {
        for rec in enumerate_sublattices(3, 2, 3).unwrap() {
            assert_eq!(rec.smith.size(), rec.hermite.iter().sum::<u32>());
            assert!(rec.basis.is_hnf());
            for (i, &d) in rec.hermite.iter().enumerate() {
                assert_eq!(rec.basis.at(i, i), &crate::exact::BigInt::from(2i64.pow(d)));
            }
        }
    }

    #[test]
    fn index_sublattices_sigma_count() {
        // number of index-m sublattices of Z^2 is sigma_1(m)
        for (m, sigma) in [(1u64, 1usize), (2, 3), (3, 4), (4, 7), (6, 12)] {
            assert_eq!(enumerate_index_sublattices(2, m).unwrap().len(), sigma);
        }
    }

    #[test]
    fn typed_enumeration_matches_filter() {
        let lam = Partition::new(vec![2, 1]);
        let direct = sublattices_of_type(3, 2, &lam).unwrap().len();
        let filtered = enumerate_sublattices(3, 2, 3)
            .unwrap()
            .into_iter()
            .filter(|r| r.smith == lam)
            .count();
        assert_eq!(direct, filtered);
    }
}
