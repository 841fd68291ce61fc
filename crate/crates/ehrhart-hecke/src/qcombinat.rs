//! Partitions, q-binomial coefficients, the cover-poset polynomials
//! `Psi`/`Theta`, permutation statistics, Igusa functions, and counts of
//! symmetric matrices of given rank over finite fields.

use crate::exact::{rat_int, rat_pow, BigRational, BivariatePoly, LaurentPoly};
use num::{One, Zero};
use std::fmt;

/// Errors raised by the combinatorial layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CombinatError {
    RangeError(String),
    SizeLimit(String),
}

impl fmt::Display for CombinatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombinatError::RangeError(s) => write!(f, "range error: {s}"),
            CombinatError::SizeLimit(s) => write!(f, "size limit: {s}"),
        }
    }
}

impl std::error::Error for CombinatError {}

/// A partition: weakly decreasing positive parts (trailing zeros trimmed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (1-indexed is conventional; this is 0-indexed), zero
    /// beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Conjugate partition (Young-diagram transpose).
    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        let parts = (1..=m)
            .map(|a| self.parts.iter().filter(|&&p| p >= a).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Componentwise containment `other <= self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Differences of consecutive parts, padded to `n` entries:
    /// `(p1-p2, ..., p_{n-1}-p_n, p_n)`.
    pub fn increments(&self, n: usize) -> Vec<u32> {
        (0..n)
            .map(|i| {
                if i + 1 < n {
                    self.part(i) - self.part(i + 1)
                } else {
                    self.part(i)
                }
            })
            .collect()
    }

    /// Horizontal-strip condition for `self - mu`: `lam_i >= mu_i >= lam_{i+1}`.
    pub fn horizontal_strip_over(&self, mu: &Partition) -> bool {
        let rows = self.len().max(mu.len()) + 1;
        (0..rows).all(|i| self.part(i) >= mu.part(i) && mu.part(i) >= self.part(i + 1))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Binomial coefficient as i64 (small arguments).
pub fn binom_i64(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `binom(x+1, 2) = x(x+1)/2`, the recurring exponent.
pub fn tri(x: i64) -> i64 {
    x * (x + 1) / 2
}

/// Gaussian binomial coefficient `binom(a, b)_Y`.
pub fn qbinom(a: u32, b: u32) -> Result<LaurentPoly, CombinatError> {
    if b > a {
        return Err(CombinatError::RangeError(format!("qbinom({a}, {b})")));
    }
    let mut num = LaurentPoly::one();
    for i in 1..=b {
        num = &num * &LaurentPoly::from_int_terms(&[(0, 1), ((a - i + 1) as i64, -1)]);
    }
    let mut out = num;
    for i in 1..=b {
        let d = LaurentPoly::from_int_terms(&[(0, 1), (i as i64, -1)]);
        out = out.div_exact(&d).expect("Gaussian binomial is a polynomial");
    }
    Ok(out)
}

/// `Y`-multinomial coefficient `binom(n, S)_Y` for `S` a subset of `[n]`.
/// Zeros in `S` are dropped (they contribute a factor `binom(s, 0) = 1`).
pub fn qmultinom(n: u32, s: &[u32]) -> Result<LaurentPoly, CombinatError> {
    let mut set: Vec<u32> = s.iter().copied().filter(|&x| x > 0).collect();
    set.sort_unstable();
    set.dedup();
    if set.iter().any(|&x| x > n) {
        return Err(CombinatError::RangeError(format!("qmultinom({n}, {set:?})")));
    }
    let mut out = LaurentPoly::one();
    let mut hi = n;
    for &lo in set.iter().rev() {
        out = &out * &qbinom(hi, lo)?;
        hi = lo;
    }
    Ok(out)
}

/// Cover pairs of the poset `P = (I x {0}) u (Jm1 x {1})` under the (total)
/// lexicographic order: pairs `(i, j)` with `(j, 1)` covering `(i, 0)`.
fn cover_pairs(i_set: &[u32], jm1_set: &[u32]) -> Vec<(u32, u32)> {
    let mut elems: Vec<(u32, u8)> = i_set
        .iter()
        .map(|&i| (i, 0u8))
        .chain(jm1_set.iter().map(|&j| (j, 1u8)))
        .collect();
    elems.sort_unstable();
    elems
        .windows(2)
        .filter(|w| w[0].1 == 0 && w[1].1 == 1)
        .map(|w| (w[0].0, w[1].0))
        .collect()
}

/// The polynomial `Psi_{n, I, J}(Y)`: a `Y`-multinomial coefficient times
/// cover factors `(1 - Y^{j-i+1})` over covers in the poset `P_{I, J-1}`.
pub fn psi_poly(n: u32, i_set: &[u32], j_set: &[u32]) -> LaurentPoly {
    assert!(i_set.iter().all(|&x| 1 <= x && x <= n));
    assert!(j_set.iter().all(|&x| 1 <= x && x <= n));
    let jm1: Vec<u32> = j_set.iter().map(|&j| j - 1).collect();
    let mut union: Vec<u32> = i_set.iter().map(|&i| i - 1).chain(jm1.iter().copied()).collect();
    union.sort_unstable();
    union.dedup();
    let mut out = qmultinom(n.saturating_sub(1), &union).expect("subset of [n-1]");
    for (i, j) in cover_pairs(i_set, &jm1) {
        out = &out * &LaurentPoly::from_int_terms(&[(0, 1), ((j as i64) - (i as i64) + 1, -1)]);
    }
    out
}

/// `Theta_{n, I, J}(Y)`: inclusion-exclusion of `Psi` over subset pairs.
pub fn theta_poly(n: u32, i_set: &[u32], j_set: &[u32]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for a_mask in 0u32..(1 << i_set.len()) {
        let a: Vec<u32> = i_set
            .iter()
            .enumerate()
            .filter(|(k, _)| a_mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        for b_mask in 0u32..(1 << j_set.len()) {
            let b: Vec<u32> = j_set
                .iter()
                .enumerate()
                .filter(|(k, _)| b_mask >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let sign = (i_set.len() - a.len() + j_set.len() - b.len()) % 2;
            let psi = psi_poly(n, &a, &b);
            if sign == 0 {
                out += psi;
            } else {
                out -= psi;
            }
        }
    }
    out
}

/// `beta(I) = sum_{i in I} binom(i+1, 2) + i(n - i)`, for `I` inside `[n]`.
pub fn beta(n: u32, i_set: &[u32]) -> i64 {
    i_set
        .iter()
        .map(|&i| tri(i as i64) + (i as i64) * (n as i64 - i as i64))
        .sum()
}

/// Permutation with its descent, inversion, major-index, and `binv`
/// statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStat {
    pub perm: Vec<u32>,
    pub des: u32,
    pub inv: u32,
    pub maj: u32,
    pub binv: u32,
}

pub(crate) fn stats_of(perm: &[u32]) -> PermStat {
    let n = perm.len();
    let mut des = 0;
    let mut maj = 0;
    let mut binv = 0i64;
    for i in 0..n.saturating_sub(1) {
        if perm[i] > perm[i + 1] {
            des += 1;
            maj += (i + 1) as u32;
            binv += tri((i + 1) as i64);
        }
    }
    let mut inv = 0;
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    PermStat {
        perm: perm.to_vec(),
        des,
        inv,
        maj,
        binv: inv + binv as u32,
    }
}

/// Maximum degree for full permutation enumeration.
pub const PERM_ENUM_LIMIT: usize = 10;

/// Every permutation of `[n]` in lexicographic order, with statistics.
pub fn perm_stats(n: usize) -> Result<Vec<PermStat>, CombinatError> {
    perm_stats_bounded(n, PERM_ENUM_LIMIT)
}

/// As [`perm_stats`] with an explicit bound (hard cap 13).
pub fn perm_stats_bounded(n: usize, bound: usize) -> Result<Vec<PermStat>, CombinatError> {
    if n < 1 {
        return Err(CombinatError::RangeError("n must be positive".into()));
    }
    if n > bound.min(13) {
        return Err(CombinatError::SizeLimit(format!("permutation degree {n} exceeds bound")));
    }
    let mut out = Vec::new();
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(stats_of(&perm));
        // next lexicographic permutation
        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    Ok(out)
}

/// Streaming fold over all permutations of `[n]` without materializing them.
pub(crate) fn fold_permutations<T>(n: usize, mut acc: T, mut f: impl FnMut(&mut T, &[u32])) -> T {
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    loop {
        f(&mut acc, &perm);
        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return acc;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// The Igusa function `Ig_n(q^{-1}; X_1, ..., X_n)` for monomial
/// specializations `X_i = q^{a_i} t^{b_i}`. Returns the numerator
/// `sum_w q^{-inv(w)} prod_{i in Des(w)} X_i` and the denominator factor
/// list, each factor `(a, b)` standing for `1 - q^a t^b`.
pub fn igusa_parts(n: usize, xs: &[(i64, i64)]) -> Result<(BivariatePoly, Vec<(i64, i64)>), CombinatError> {
    if xs.len() != n {
        return Err(CombinatError::RangeError("need one monomial per index".into()));
    }
    if n > 13 {
        return Err(CombinatError::SizeLimit(format!("Igusa degree {n}")));
    }
    if n == 0 {
        return Ok((BivariatePoly::one(), Vec::new()));
    }
    let num = fold_permutations(n, BivariatePoly::zero(), |acc, perm| {
        let st = stats_of(perm);
        let mut qe = -(st.inv as i64);
        let mut te = 0i64;
        for i in 0..n - 1 {
            if perm[i] > perm[i + 1] {
                qe += xs[i].0;
                te += xs[i].1;
            }
        }
        acc.add_term(qe, te, BigRational::one());
    });
    Ok((num, xs.to_vec()))
}

/// `#Sym_{a, r}(F_q)`: symmetric `a x a` matrices of rank `r` over the field
/// with `q` elements, by the closed product formula.
pub fn sym_rank_count(a: u32, r: u32, q: &BigRational) -> Result<BigRational, CombinatError> {
    if r > a {
        return Err(CombinatError::RangeError(format!("rank {r} exceeds size {a}")));
    }
    let k = a - r;
    let qinv = q.recip();
    let mut out = rat_pow(q, tri(a as i64) - tri(k as i64));
    out *= qbinom(a, k)?.evaluate(&qinv);
    for d in 1..=r.div_ceil(2) {
        out *= BigRational::one() - rat_pow(q, -(2 * d as i64) + 1);
    }
    Ok(out)
}

/// Symbolic verification of the finite product identity
/// `prod_{i=1}^m (1 + X^i Y) = sum_j Y^j X^{binom(j+1,2)} binom(m, j)_X`.
pub fn qidentity_check(m: u32) -> bool {
    // X lives in the q slot, Y in the t slot of a bivariate polynomial
    let mut lhs = BivariatePoly::one();
    for i in 1..=m {
        let mut f = BivariatePoly::one();
        f.add_term(i as i64, 1, BigRational::one());
        lhs = &lhs * &f;
    }
    let mut rhs = BivariatePoly::zero();
    for j in 0..=m {
        let b = qbinom(m, j).expect("in range");
        for (e, c) in b.terms() {
            rhs.add_term(e + tri(j as i64), j as i64, c.clone());
        }
    }
    lhs == rhs
}

/// Evaluate a `Y`-polynomial at `Y = 1/q` for rational `q`.
pub fn eval_at_q_inverse(p: &LaurentPoly, q: &BigRational) -> BigRational {
    p.evaluate(&q.recip())
}

/// Evaluate at integer argument.
pub fn eval_at_int(p: &LaurentPoly, y: i64) -> BigRational {
    p.evaluate(&rat_int(y))
}
