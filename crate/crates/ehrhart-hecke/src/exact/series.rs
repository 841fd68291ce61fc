//! Truncated power series in `t` with Laurent-polynomial coefficients in `q`.

use super::{BivariatePoly, ExactError, LaurentPoly};

/// The expansion of a rational function to order `N` in `t`: coefficient `k`
/// is the exact `t^k` coefficient, a Laurent polynomial in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^k` (zero beyond the stored order is not implied;
    /// panics past the truncation order).
    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        TruncatedSeries { order: coeffs.len() - 1, coeffs }
    }

    /// Expand `num / den` to `t^order`. The denominator's `t`-constant term
    /// must divide exactly in the Laurent ring (in practice it is `1` or a
    /// monomial); otherwise the expansion has no Laurent coefficients.
    pub fn expand(num: &BivariatePoly, den: &BivariatePoly, order: usize) -> Result<Self, ExactError> {
        let den_slices = den.t_slices();
        let d0 = den.t_coefficient(0);
        if d0.is_zero() {
            return Err(ExactError::NotExpandable("denominator vanishes at t = 0".into()));
        }
        let num_slices = num.t_slices();
        let mut coeffs: Vec<LaurentPoly> = Vec::with_capacity(order + 1);
        for k in 0..=order as i64 {
            let mut acc = num_slices.get(&k).cloned().unwrap_or_else(LaurentPoly::zero);
            for (&j, dj) in den_slices.range(1..=k) {
                acc -= dj * &coeffs[(k - j) as usize];
            }
            match acc.div_exact(&d0) {
                Some(c) => coeffs.push(c),
                None => {
                    return Err(ExactError::NotExpandable(
                        "t-constant denominator term is not invertible in the Laurent ring".into(),
                    ))
                }
            }
        }
        Ok(TruncatedSeries { order, coeffs })
    }

    /// Apply `q -> q^{-1}` coefficient-wise.
    pub fn substitute_q_inverse(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.substitute_inverse()).collect(),
        }
    }
}
