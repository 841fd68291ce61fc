//! Bivariate polynomials in `(q, t)`: Laurent in `q`, honest in `t`.

use super::{LaurentPoly, BigRational};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial with terms `c * q^a t^b`, `b >= 0`, `a` any integer.
/// Keys are `(q_exp, t_exp)`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigRational::one())
    }

    pub fn monomial(q_exp: i64, t_exp: i64, coeff: BigRational) -> Self {
        assert!(t_exp >= 0, "negative t-exponent");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q_exp, t_exp), coeff);
        }
        BivariatePoly { terms }
    }

    /// `1 - c q^a t^b`, the ubiquitous denominator factor shape.
    pub fn one_minus(q_exp: i64, t_exp: i64) -> Self {
        let mut p = Self::one();
        p.add_term(q_exp, t_exp, -BigRational::one());
        p
    }

    pub fn from_int_terms(terms: &[(i64, i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(qe, te, c) in terms {
            p.add_term(qe, te, super::rat_int(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add_term(&mut self, q_exp: i64, t_exp: i64, coeff: BigRational) {
        assert!(t_exp >= 0, "negative t-exponent");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((q_exp, t_exp)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, q_exp: i64, t_exp: i64) -> BigRational {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigRational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(a, _)| a).min()
    }

    pub fn max_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn min_t_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, b)| b).min()
    }

    pub fn max_t_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// First key in `(q, t)` lexicographic order, with its coefficient.
    pub fn lex_least(&self) -> Option<((i64, i64), &BigRational)> {
        self.terms.iter().next().map(|(&k, c)| (k, c))
    }

    pub fn mul_monomial(&self, q_exp: i64, t_exp: i64, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .map(|(&(a, b), k)| {
                assert!(b + t_exp >= 0, "negative t-exponent");
                ((a + q_exp, b + t_exp), k * c)
            })
            .collect();
        BivariatePoly { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.mul_monomial(0, 0, c)
    }

    /// Embed a Laurent polynomial in `q` at a fixed `t` power.
    pub fn from_q_poly(p: &LaurentPoly, t_exp: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e, t_exp, c.clone());
        }
        out
    }

    /// The coefficient of `t^k` as a Laurent polynomial in `q`.
    pub fn t_coefficient(&self, t_exp: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, b), _)| b == t_exp)
                .map(|(&(a, _), c)| (a, c.clone())),
        )
    }

    /// Split into a map `t_exp -> Laurent coefficient`.
    pub fn t_slices(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            out.entry(b).or_default().add_term(a, c.clone());
        }
        out
    }

    /// Apply `q -> q^{-1}` to every term.
    pub fn substitute_q_inverse(&self) -> Self {
        BivariatePoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((-a, b), c.clone())).collect(),
        }
    }

    /// Apply `q -> q^{-1}`, `t -> t^{-1}`, then multiply by `q^A t^B` to clear
    /// negative exponents, with `A` the maximal `q`-exponent and `B` the
    /// maximal `t`-exponent. Returns the cleared polynomial and `(A, B)`.
    pub fn invert_both_cleared(&self) -> (Self, (i64, i64)) {
        if self.is_zero() {
            return (Self::zero(), (0, 0));
        }
        let a_max = self.max_q_exp().unwrap();
        let b_max = self.max_t_exp().unwrap();
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| ((a_max - a, b_max - b), c.clone()))
            .collect();
        (BivariatePoly { terms }, (a_max, b_max))
    }

    /// Substitute `t^n -> q^shift * t^n` on a polynomial whose `t`-exponents
    /// are all multiples of `n`: each term gains `shift * (t_exp / n)` in `q`.
    /// Returns `None` when some `t`-exponent is not a multiple of `n`.
    pub fn shift_q_by_t_level(&self, n: i64, shift: i64) -> Option<Self> {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if b % n != 0 {
                return None;
            }
            out.add_term(a + shift * (b / n), b, c.clone());
        }
        Some(out)
    }

    /// Exact evaluation at `(q0, t0)`; `q0` must be nonzero if `q`-exponents
    /// are negative.
    pub fn evaluate(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * super::rat_pow(q0, a) * super::rat_pow(t0, b);
        }
        acc
    }

    /// Render with explicit variable names, highest `t` power last.
    pub fn to_string_vars(&self, qv: &str, tv: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (b, a));
        let mut out = String::new();
        for (i, &(a, b)) in keys.iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (a == 0 && b == 0) {
                parts.push(abs.to_string());
            }
            if a != 0 {
                parts.push(if a == 1 { qv.to_string() } else { format!("{qv}^{a}") });
            }
            if b != 0 {
                parts.push(if b == 1 { tv.to_string() } else { format!("{tv}^{b}") });
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_vars("q", "t"))
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms() {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms() {
            out.add_term(a, b, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in rhs.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_minus_product() {
        // (1 - qt)(1 + qt) = 1 - q^2 t^2
        let a = BivariatePoly::one_minus(1, 1);
        let mut b = BivariatePoly::one();
        b.add_term(1, 1, BigRational::one());
        assert_eq!(&a * &b, BivariatePoly::from_int_terms(&[(0, 0, 1), (2, 2, -1)]));
    }

    #[test]
    fn invert_both() {
        // 1 - qt -> cleared: q t - 1 ... times q^1 t^1: terms (1,1):1,(0,0):-1
        let a = BivariatePoly::one_minus(1, 1);
        let (p, (aa, bb)) = a.invert_both_cleared();
        assert_eq!((aa, bb), (1, 1));
        assert_eq!(p, BivariatePoly::from_int_terms(&[(1, 1, 1), (0, 0, -1)]));
    }

    #[test]
    fn t_slices_roundtrip() {
        let p = BivariatePoly::from_int_terms(&[(0, 0, 1), (1, 1, 2), (-1, 1, 3), (2, 2, 1)]);
        let slices = p.t_slices();
        assert_eq!(slices.len(), 3);
        assert_eq!(slices[&1], LaurentPoly::from_int_terms(&[(1, 2), (-1, 3)]));
    }
}
