use super::poly::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// Power series in an auxiliary variable `z` with Laurent-polynomial
/// coefficients, truncated after `z^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    n: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn one(n: usize, degree: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(n); degree + 1];
        coeffs[0] = LaurentPoly::one(n);
        TruncatedSeries { n, coeffs }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<LaurentPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("series needs at least one coefficient".into()));
        }
        for c in &coeffs {
            if c.n() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: c.n(),
                });
            }
        }
        Ok(TruncatedSeries { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^d`; zero beyond the truncation order.
    pub fn coeff(&self, d: usize) -> LaurentPoly {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.n))
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    /// Multiplies by `(1 + u z)` in place.
    pub fn mul_one_plus(&mut self, u: &Monomial) {
        for d in (1..self.coeffs.len()).rev() {
            let shifted = self.coeffs[d - 1].mul_monomial(u);
            self.coeffs[d].add_assign_ref(&shifted);
        }
    }

    /// Multiplies by `(1 - v z)` in place.
    pub fn mul_one_minus(&mut self, v: &Monomial) {
        for d in (1..self.coeffs.len()).rev() {
            let shifted = self.coeffs[d - 1].mul_monomial(v);
            self.coeffs[d] = &self.coeffs[d] - &shifted;
        }
    }

    /// Multiplies by `1 / (1 - v z) = 1 + v z + v^2 z^2 + ...` in place.
    pub fn div_one_minus(&mut self, v: &Monomial) {
        for d in 1..self.coeffs.len() {
            let shifted = self.coeffs[d - 1].mul_monomial(v);
            self.coeffs[d].add_assign_ref(&shifted);
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let degree = self.degree().min(other.degree());
        let mut out = vec![LaurentPoly::zero(self.n); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(degree + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(degree + 1 - i) {
                out[i + j].add_assign_ref(&(a * b));
            }
        }
        Ok(TruncatedSeries {
            n: self.n,
            coeffs: out,
        })
    }
}

/// Expands `prod(1 + u z) / prod(1 - v z)` up to `z^degree`.
pub fn series_from_linear_factors(
    n: usize,
    numerators: &[Monomial],
    denominators: &[Monomial],
    degree: usize,
) -> Result<TruncatedSeries> {
    for m in numerators.iter().chain(denominators) {
        if m.n() != n {
            return Err(Error::VariableCountMismatch {
                left: n,
                right: m.n(),
            });
        }
    }
    let mut s = TruncatedSeries::one(n, degree);
    for u in numerators {
        s.mul_one_plus(u);
    }
    for v in denominators {
        s.div_one_minus(v);
    }
    Ok(s)
}
