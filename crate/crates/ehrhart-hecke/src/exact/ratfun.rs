//! Rational functions in `(q, t)` with canonical coprime representation.

use super::{BivariatePoly, ExactError, LaurentPoly, BigRational, TruncatedSeries};
use num::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A reduced fraction of Laurent polynomials in `q`, used as the coefficient
/// field when treating `t` as the main variable.
#[derive(Clone, Debug, PartialEq)]
struct QFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QFrac {
    fn zero() -> Self {
        QFrac { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    fn from_poly(p: LaurentPoly) -> Self {
        QFrac { num: p, den: LaurentPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        // pull out the Laurent monomial parts so gcd sees honest polynomials
        let g = num.gcd(&den);
        let num2 = num.div_exact(&g).expect("gcd divides");
        let den2 = den.div_exact(&g).expect("gcd divides");
        // normalize monomial freedom: make den have valuation 0 and leading coeff 1
        let shift = den2.min_exp().unwrap();
        let den3 = den2.mul_monomial(-shift, &BigRational::one());
        let num3 = num2.mul_monomial(-shift, &BigRational::one());
        let lead = den3.coeff(den3.max_exp().unwrap());
        QFrac {
            num: num3.scale(&lead.recip()),
            den: den3.scale(&lead.recip()),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::reduce(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero());
        Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

/// Dense polynomial in `t` over `QFrac`, used only inside gcd and division.
#[derive(Clone, Debug)]
struct TPoly {
    coeffs: Vec<QFrac>, // index = t-degree
}

impl TPoly {
    fn from_bivariate(p: &BivariatePoly) -> Self {
        let deg = p.max_t_exp().unwrap_or(0);
        let mut coeffs = vec![QFrac::zero(); (deg + 1) as usize];
        for (te, slice) in p.t_slices() {
            coeffs[te as usize] = QFrac::from_poly(slice);
        }
        TPoly { coeffs }
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> &QFrac {
        self.coeffs.last().expect("nonzero")
    }

    /// Remainder of `self` divided by `rhs` (field coefficients).
    fn rem(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r.trim();
        let d = rhs.degree();
        let lead = rhs.lead();
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let f = r.lead().div(lead);
            for i in 0..=d {
                let sub = rhs.coeffs[i].mul(&f);
                r.coeffs[i + k] = r.coeffs[i + k].sub(&sub);
            }
            r.trim();
        }
        r
    }

    /// Quotient of exact division; panics if the division is not exact.
    fn div_exact(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r.trim();
        let d = rhs.degree();
        let lead = rhs.lead();
        let mut q = vec![QFrac::zero(); r.coeffs.len().saturating_sub(d)];
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let f = r.lead().div(lead);
            q[k] = f.clone();
            for i in 0..=d {
                let sub = rhs.coeffs[i].mul(&f);
                r.coeffs[i + k] = r.coeffs[i + k].sub(&sub);
            }
            r.trim();
        }
        assert!(r.is_zero(), "inexact bivariate division");
        TPoly { coeffs: q }
    }

    /// Clear coefficient denominators and divide out the q-content; the
    /// result is a primitive polynomial in `(q, t)`.
    fn primitive_bivariate(&self) -> BivariatePoly {
        let mut lcm = LaurentPoly::one();
        for c in &self.coeffs {
            if !c.is_zero() {
                let g = lcm.gcd(&c.den);
                lcm = &lcm * &c.den.div_exact(&g).unwrap();
            }
        }
        let cleared: Vec<LaurentPoly> = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_zero() {
                    LaurentPoly::zero()
                } else {
                    &c.num * &lcm.div_exact(&c.den).unwrap()
                }
            })
            .collect();
        let mut content = LaurentPoly::zero();
        for c in &cleared {
            if !c.is_zero() {
                content = if content.is_zero() { c.gcd(&LaurentPoly::zero()) } else { content.gcd(c) };
            }
        }
        let mut out = BivariatePoly::zero();
        for (te, c) in cleared.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let red = c.div_exact(&content).expect("content divides");
            for (qe, coeff) in red.terms() {
                out.add_term(qe, te as i64, coeff.clone());
            }
        }
        out
    }
}

/// gcd of two nonzero bivariate polynomials, up to a unit. Contains no
/// monomial factors: its `q`- and `t`-valuations are both zero.
fn gcd_bivariate(a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
    assert!(!a.is_zero() && !b.is_zero());
    // strip monomial parts
    let a0 = a.mul_monomial(-a.min_q_exp().unwrap(), -a.min_t_exp().unwrap(), &BigRational::one());
    let b0 = b.mul_monomial(-b.min_q_exp().unwrap(), -b.min_t_exp().unwrap(), &BigRational::one());
    // q-contents
    let content = |p: &BivariatePoly| -> LaurentPoly {
        let mut c = LaurentPoly::zero();
        for (_, slice) in p.t_slices() {
            c = if c.is_zero() { slice } else { c.gcd(&slice) };
        }
        c
    };
    let ca = content(&a0);
    let cb = content(&b0);
    let cg = ca.gcd(&cb);
    let div_content = |p: &BivariatePoly, c: &LaurentPoly| -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (te, slice) in p.t_slices() {
            let red = slice.div_exact(c).expect("content divides");
            for (qe, k) in red.terms() {
                out.add_term(qe, te, k.clone());
            }
        }
        out
    };
    let pa = div_content(&a0, &ca);
    let pb = div_content(&b0, &cb);
    // Euclid in t over Q(q)
    let mut x = TPoly::from_bivariate(&pa);
    let mut y = TPoly::from_bivariate(&pb);
    x.trim();
    y.trim();
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = x.rem(&y);
        x = y;
        y = r;
    }
    let prim = x.primitive_bivariate();
    let cg_biv = BivariatePoly::from_q_poly(&cg, 0);
    &prim * &cg_biv
}

/// Exact division of bivariate polynomials; panics when not exact.
pub(crate) fn div_exact_bivariate(a: &BivariatePoly, g: &BivariatePoly) -> BivariatePoly {
    if a.is_zero() {
        return BivariatePoly::zero();
    }
    // handle monomial parts so TPoly sees honest polynomials
    let (aq, at) = (a.min_q_exp().unwrap(), a.min_t_exp().unwrap());
    let (gq, gt) = (g.min_q_exp().unwrap(), g.min_t_exp().unwrap());
    assert!(at >= gt, "inexact monomial division");
    let a0 = a.mul_monomial(-aq, -at, &BigRational::one());
    let g0 = g.mul_monomial(-gq, -gt, &BigRational::one());
    let q = TPoly::from_bivariate(&a0).div_exact(&TPoly::from_bivariate(&g0));
    let mut out = BivariatePoly::zero();
    for (te, c) in q.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // coefficients must be honest Laurent polynomials for an exact
        // polynomial quotient
        let red = c.num.div_exact(&c.den).expect("quotient coefficient not polynomial");
        for (qe, k) in red.terms() {
            out.add_term(qe, te as i64, k.clone());
        }
    }
    out.mul_monomial(aq - gq, at - gt, &BigRational::one())
}

/// An exact rational function in `(q, t)`. Canonical form: numerator and
/// denominator are coprime, their joint minimal `q`- and `t`-exponents are
/// zero, and the lexicographically least denominator term has coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionQT {
    num: BivariatePoly,
    den: BivariatePoly,
}

impl RationalFunctionQT {
    /// Build and canonicalize `num / den`.
    pub fn new(num: BivariatePoly, den: BivariatePoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunctionQT { num, den: BivariatePoly::one() });
        }
        let g = gcd_bivariate(&num, &den);
        let mut n = div_exact_bivariate(&num, &g);
        let mut d = div_exact_bivariate(&den, &g);
        // joint monomial normalization
        let qmin = n.min_q_exp().unwrap().min(d.min_q_exp().unwrap());
        let tmin = n.min_t_exp().unwrap().min(d.min_t_exp().unwrap());
        n = n.mul_monomial(-qmin, -tmin, &BigRational::one());
        d = d.mul_monomial(-qmin, -tmin, &BigRational::one());
        // scale: lex-least denominator coefficient is 1
        let (_, c) = d.lex_least().unwrap();
        let inv = c.clone().recip();
        n = n.scale(&inv);
        d = d.scale(&inv);
        Ok(RationalFunctionQT { num: n, den: d })
    }

    pub fn from_poly(p: BivariatePoly) -> Self {
        RationalFunctionQT { num: p, den: BivariatePoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(BivariatePoly::monomial(0, 0, c))
    }

    pub fn one() -> Self {
        Self::from_poly(BivariatePoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(BivariatePoly::zero())
    }

    pub fn num(&self) -> &BivariatePoly {
        &self.num
    }

    pub fn den(&self) -> &BivariatePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Apply `q -> q^{-1}` to every term, re-normalizing so that exponents
    /// are cleared by common `q`-powers of numerator and denominator.
    pub fn substitute_q_inverse(&self) -> Self {
        Self::new(self.num.substitute_q_inverse(), self.den.substitute_q_inverse())
            .expect("denominator stays nonzero")
    }

    /// Apply `q -> q^{-1}` and `t -> t^{-1}` simultaneously (substitution at
    /// fixed `s` when `t = q^{-s}`), returning the cleared rational function.
    pub fn substitute_qs_inverse(&self) -> Self {
        let (n, (an, bn)) = self.num.invert_both_cleared();
        let (d, (ad, bd)) = self.den.invert_both_cleared();
        // f(q^{-1}, t^{-1}) = q^{ad-an} t^{bd-bn} * n / d
        let (tq, tt) = (ad - an, bd - bn);
        let (num, den) = if tt >= 0 {
            (n.mul_monomial(tq.max(0), tt, &BigRational::one()),
             d.mul_monomial((-tq).max(0), 0, &BigRational::one()))
        } else {
            (n.mul_monomial(tq.max(0), 0, &BigRational::one()),
             d.mul_monomial((-tq).max(0), -tt, &BigRational::one()))
        };
        Self::new(num, den).expect("denominator stays nonzero")
    }

    /// Exact value at `(q0, t0)`.
    pub fn evaluate(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational, ExactError> {
        let d = self.den.evaluate(q0, t0);
        if d.is_zero() {
            return Err(ExactError::PoleAtPoint);
        }
        Ok(self.num.evaluate(q0, t0) / d)
    }

    /// Geometric-series expansion in `t`, exact to `t^order`.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries, ExactError> {
        TruncatedSeries::expand(&self.num, &self.den, order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Value-level equality via cross-multiplication (no normalization).
    pub fn eq_as_function(num1: &BivariatePoly, den1: &BivariatePoly, num2: &BivariatePoly, den2: &BivariatePoly) -> bool {
        num1 * den2 == num2 * den1
    }

    /// LaTeX rendering of the reduced fraction.
    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            latex_poly(&self.num)
        } else {
            format!("\\frac{{{}}}{{{}}}", latex_poly(&self.num), latex_poly(&self.den))
        }
    }
}

pub(crate) fn latex_poly(p: &BivariatePoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    use num::Signed;
    let mut keys: Vec<_> = p.terms().map(|(k, _)| k).collect();
    keys.sort_by_key(|&(a, b)| (b, a));
    let mut out = String::new();
    for (i, &(a, b)) in keys.iter().enumerate() {
        let c = p.coeff(a, b);
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
            parts.push(if a == 1 { "q".into() } else { format!("q^{{{a}}}") });
        }
        if b != 0 {
            parts.push(if b == 1 { "t".into() } else { format!("t^{{{b}}}") });
        }
        out.push_str(&parts.join(" "));
    }
    out
}

fn serialize_poly_terms<S: Serializer>(p: &BivariatePoly, ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(p.num_terms()))?;
    for ((a, b), c) in p.terms() {
        seq.serialize_element(&(c.to_string(), a, b))?;
    }
    seq.end()
}

impl Serialize for RationalFunctionQT {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Terms<'a>(&'a BivariatePoly);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                serialize_poly_terms(self.0, ser)
            }
        }
        let mut st = ser.serialize_struct("RationalFunctionQT", 2)?;
        st.serialize_field("num", &Terms(&self.num))?;
        st.serialize_field("den", &Terms(&self.den))?;
        st.end()
    }
}

impl std::fmt::Display for RationalFunctionQT {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn one_minus(qe: i64, te: i64) -> BivariatePoly {
        BivariatePoly::one_minus(qe, te)
    }

    #[test]
    fn full_cancellation() {
        // (1 - q^2 t^2) / ((1-qt)(1+qt)) = 1
        let num = BivariatePoly::from_int_terms(&[(0, 0, 1), (2, 2, -1)]);
        let mut plus = BivariatePoly::one();
        plus.add_term(1, 1, BigRational::one());
        let den = &one_minus(1, 1) * &plus;
        let f = RationalFunctionQT::new(num, den).unwrap();
        assert_eq!(f, RationalFunctionQT::one());
    }

    #[test]
    fn monomial_convention() {
        // (q t) / (q^2 t^2) -> 1 / (q t)
        let num = BivariatePoly::monomial(1, 1, rat_int(1));
        let den = BivariatePoly::monomial(2, 2, rat_int(1));
        let f = RationalFunctionQT::new(num, den).unwrap();
        assert_eq!(f.num(), &BivariatePoly::one());
        assert_eq!(f.den(), &BivariatePoly::monomial(1, 1, rat_int(1)));
    }

    #[test]
    fn zero_denominator_rejected() {
        let r = RationalFunctionQT::new(BivariatePoly::one(), BivariatePoly::zero());
        assert_eq!(r.unwrap_err(), ExactError::ZeroDenominator);
    }

    #[test]
    fn substitute_q_inverse_simple() {
        // 1/((1-qt)(1-t)) -> q/((q-t)(1-t))
        let den = &one_minus(1, 1) * &one_minus(0, 1);
        let f = RationalFunctionQT::new(BivariatePoly::one(), den).unwrap();
        let g = f.substitute_q_inverse();
        let expect_num = BivariatePoly::monomial(1, 0, rat_int(1));
        // (q - t)(1 - t) = q - t - qt + t^2
        let expect_den = BivariatePoly::from_int_terms(&[(1, 0, 1), (0, 1, -1), (1, 1, -1), (0, 2, 1)]);
        assert!(RationalFunctionQT::eq_as_function(g.num(), g.den(), &expect_num, &expect_den));
        // constant is fixed
        let c = RationalFunctionQT::constant(rat_int(5));
        assert_eq!(c.substitute_q_inverse(), c);
    }

    #[test]
    fn normalize_idempotent_and_value_preserving() {
        let num = BivariatePoly::from_int_terms(&[(2, 1, 6), (0, 0, 2)]);
        let den = BivariatePoly::from_int_terms(&[(1, 1, 4), (0, 0, 2)]);
        let f = RationalFunctionQT::new(num.clone(), den.clone()).unwrap();
        let g = RationalFunctionQT::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, g);
        let q0 = rat(3, 2);
        let t0 = rat(1, 5);
        let direct = num.evaluate(&q0, &t0) / den.evaluate(&q0, &t0);
        assert_eq!(f.evaluate(&q0, &t0).unwrap(), direct);
    }

    #[test]
    fn evaluate_cases() {
        // 1/((1-qt)(1-t)) at (2,0) -> 1
        let den = &one_minus(1, 1) * &one_minus(0, 1);
        let f = RationalFunctionQT::new(BivariatePoly::one(), den).unwrap();
        assert_eq!(f.evaluate(&rat_int(2), &rat_int(0)).unwrap(), rat_int(1));
        // (1-q^2t^2)/(1-qt) at (3, 1/3) -> 2
        let num = BivariatePoly::from_int_terms(&[(0, 0, 1), (2, 2, -1)]);
        let g = RationalFunctionQT::new(num, one_minus(1, 1)).unwrap();
        assert_eq!(g.evaluate(&rat_int(3), &rat(1, 3)).unwrap(), rat_int(2));
        assert_eq!(g.evaluate(&rat_int(1), &rat_int(1)), Err(ExactError::PoleAtPoint));
    }

    #[test]
    fn json_shape() {
        let den = one_minus(1, 1);
        let f = RationalFunctionQT::new(BivariatePoly::one(), den).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":[["1",0,0]],"den":[["1",0,0],["-1",1,1]]}"#);
    }
}
