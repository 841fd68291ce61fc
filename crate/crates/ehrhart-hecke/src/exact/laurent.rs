//! Laurent polynomials in one variable with exact rational coefficients.

use super::{rat_pow, BigRational};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// A Laurent polynomial: a finite map from integer exponents to nonzero
/// rational coefficients. The variable is anonymous; `Display` uses `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `Y^exp` with coefficient one.
    pub fn power(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience for integer-coefficient polynomials given as (exp, coeff).
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, super::rat_int(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest exponent; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
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

    /// Multiply by `c * Y^exp`.
    pub fn mul_monomial(&self, exp: i64, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, k)| (e + exp, k * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.mul_monomial(0, c)
    }

    /// Substitute `Y -> Y^{-1}`.
    pub fn substitute_inverse(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation. Negative exponents require a nonzero point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += c * rat_pow(x, e);
        }
        acc
    }

    /// Exact division; `None` if `self` is not a multiple of `rhs`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let (rhs_top, rhs_top_c) = {
            let e = rhs.max_exp().unwrap();
            (e, rhs.coeff(e))
        };
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap();
            let c = rem.coeff(e);
            // Laurent division always "fits"; termination needs the span to shrink.
            if rem.max_exp().unwrap() - rem.min_exp().unwrap()
                < rhs.max_exp().unwrap() - rhs.min_exp().unwrap()
            {
                return None;
            }
            let qe = e - rhs_top;
            let qc = c / &rhs_top_c;
            quot.add_term(qe, qc.clone());
            rem -= rhs.mul_monomial(qe, &qc);
        }
        Some(quot)
    }

    /// Monic gcd in `Q[Y]` after clearing the Laurent shift. The gcd of two
    /// Laurent polynomials is only defined up to a monomial; this returns the
    /// monic polynomial representative with nonzero constant term.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.normalized_poly();
        }
        if rhs.is_zero() {
            return self.normalized_poly();
        }
        let mut a = self.normalized_poly();
        let mut b = rhs.normalized_poly();
        while !b.is_zero() {
            let r = a.poly_rem(&b);
            a = b;
            b = r.normalized_poly_or_zero();
        }
        a.make_monic();
        a
    }

    /// Shift to have valuation 0 and keep it a genuine polynomial.
    fn normalized_poly(&self) -> Self {
        let v = self.min_exp().expect("nonzero");
        self.mul_monomial(-v, &BigRational::one())
    }

    fn normalized_poly_or_zero(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            self.normalized_poly()
        }
    }

    fn make_monic(&mut self) {
        if let Some(top) = self.max_exp() {
            let c = self.coeff(top);
            if !c.is_one() {
                *self = self.scale(&c.recip());
            }
        }
    }

    /// Remainder of polynomial division (both sides must have valuation >= 0).
    fn poly_rem(&self, rhs: &Self) -> Self {
        let mut rem = self.clone();
        let dtop = rhs.max_exp().unwrap();
        let dc = rhs.coeff(dtop);
        while let Some(e) = rem.max_exp() {
            if e < dtop {
                break;
            }
            let qc = rem.coeff(e) / &dc;
            rem -= rhs.mul_monomial(e - dtop, &qc);
        }
        rem
    }

    /// True when coefficients read the same forwards and backwards.
    pub fn is_palindromic(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        self.terms().all(|(e, c)| self.coeff(lo + hi - e) == *c)
    }

    /// All coefficients nonnegative.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when every exponent is >= 0.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map(|e| e >= 0).unwrap_or(true)
    }

    /// Render with an explicit variable name.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        // highest exponent first, matching how the tables are printed
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_part = if abs.is_one() && e != 0 { None } else { Some(abs.to_string()) };
            let var_part = match e {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{e}")),
            };
            match (coeff_part, var_part) {
                (Some(c), Some(v)) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&v);
                }
                (Some(c), None) => out.push_str(&c),
                (None, Some(v)) => out.push_str(&v),
                (None, None) => out.push('1'),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("Y"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = LaurentPoly::from_int_terms(&[(1, 1), (0, 1)]);
        let b = LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]);
        assert_eq!(&a * &b, LaurentPoly::from_int_terms(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn addition_collects() {
        let a = LaurentPoly::from_int_terms(&[(1, 2)]);
        let b = LaurentPoly::from_int_terms(&[(1, 1)]);
        assert_eq!(&a + &b, LaurentPoly::from_int_terms(&[(1, 3)]));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let a = LaurentPoly::from_int_terms(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_int_terms(&[(2, 1), (0, -1)]);
        let b = LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]);
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, LaurentPoly::from_int_terms(&[(1, 1), (0, 1)]));
        assert!(a.div_exact(&LaurentPoly::from_int_terms(&[(1, 1), (0, 1), (2, 3)])).is_none());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // gcd(Y^2-1, Y^3-1) = Y-1 (monic)
        let a = LaurentPoly::from_int_terms(&[(2, 1), (0, -1)]);
        let b = LaurentPoly::from_int_terms(&[(3, 1), (0, -1)]);
        assert_eq!(a.gcd(&b), LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn eval_laurent() {
        // Y^{-1} + Y at 2 -> 5/2
        let a = LaurentPoly::from_int_terms(&[(-1, 1), (1, 1)]);
        assert_eq!(a.evaluate(&rat_int(2)), rat(5, 2));
    }

    #[test]
    fn palindromic() {
        assert!(LaurentPoly::from_int_terms(&[(0, 1), (1, 2), (2, 1)]).is_palindromic());
        assert!(!LaurentPoly::from_int_terms(&[(0, 1), (2, 2), (3, 1)]).is_palindromic());
    }
}
