//! Dense univariate polynomials over certified scalars.

use crate::arith::{CertifiedComplex, CertifiedReal, Dyadic};

/// Polynomial with certified real coefficients, index k ↔ coefficient of x^k.
///
/// Trailing coefficients are stripped only when they are exact zeros
/// (radius 0); a leading coefficient whose enclosure merely contains zero
/// is kept, since stripping it would not be certified.
#[derive(Clone, Debug)]
pub struct RealPolynomial {
    coeffs: Vec<CertifiedReal>,
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<CertifiedReal>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_exact_zero()) {
            coeffs.pop();
        }
        RealPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RealPolynomial { coeffs: Vec::new() }
    }

    pub fn from_i64_coeffs(cs: &[i64], prec: u32) -> Self {
        RealPolynomial::new(cs.iter().map(|&c| CertifiedReal::from_i64(c, prec)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the stored coefficient vector (0 for constants and for
    /// the zero polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[CertifiedReal] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CertifiedReal {
        self.coeffs.get(k).cloned().unwrap_or_else(|| CertifiedReal::zero(self.precision()))
    }

    pub fn leading(&self) -> Option<&CertifiedReal> {
        self.coeffs.last()
    }

    pub fn precision(&self) -> u32 {
        self.coeffs.iter().map(|c| c.precision()).max().unwrap_or(crate::DEFAULT_PRECISION)
    }

    /// True iff every coefficient has radius zero.
    pub fn all_exact(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_exact())
    }

    pub fn neg(&self) -> Self {
        RealPolynomial { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let prec = self.precision().max(other.precision());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = other.coeffs.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => CertifiedReal::zero(prec),
            });
        }
        RealPolynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RealPolynomial::zero();
        }
        let prec = self.precision().max(other.precision());
        let mut out = vec![CertifiedReal::zero(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_exact_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_exact_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        RealPolynomial::new(out)
    }

    pub fn scale(&self, k: &CertifiedReal) -> Self {
        RealPolynomial::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    /// Exact scaling by `2^e`; keeps exact zeros exact.
    pub fn scale_pow2(&self, e: i64) -> Self {
        RealPolynomial { coeffs: self.coeffs.iter().map(|c| c.mul_pow2(e)).collect() }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RealPolynomial::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_i64(k as i64))
            .collect();
        RealPolynomial::new(out)
    }

    /// Removes the factor x^m, where m counts low-order exact-zero
    /// coefficients. Returns the quotient and m.
    pub fn strip_low_order_zeros(&self) -> (Self, usize) {
        let m = self.coeffs.iter().take_while(|c| c.is_exact_zero()).count();
        if m == 0 || m == self.coeffs.len() {
            if m == self.coeffs.len() && m > 0 {
                return (RealPolynomial::zero(), m);
            }
            return (self.clone(), 0);
        }
        (RealPolynomial::new(self.coeffs[m..].to_vec()), m)
    }

    /// Horner evaluation at a real ball.
    pub fn eval_real(&self, x: &CertifiedReal) -> CertifiedReal {
        let prec = self.precision().max(x.precision());
        let mut acc = CertifiedReal::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_dyadic(&self, x: &Dyadic) -> CertifiedReal {
        self.eval_real(&CertifiedReal::from_dyadic(x.clone(), self.precision()))
    }

    /// Horner evaluation at a complex ball.
    pub fn eval_complex(&self, z: &CertifiedComplex) -> CertifiedComplex {
        let prec = self.precision();
        let mut acc = CertifiedComplex::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z);
            acc.re = acc.re.add(c);
        }
        acc
    }

    /// True iff the coefficient enclosures of both polynomials pairwise
    /// intersect (shorter vectors padded with exact zeros).
    pub fn overlaps(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| self.coeff(k).overlaps(&other.coeff(k)))
    }
}

/// Polynomial with certified complex coefficients.
#[derive(Clone, Debug)]
pub struct ComplexPolynomial {
    coeffs: Vec<CertifiedComplex>,
}

impl ComplexPolynomial {
    pub fn new(coeffs: Vec<CertifiedComplex>) -> Self {
        ComplexPolynomial { coeffs }
    }

    pub fn zero(prec: u32) -> Self {
        ComplexPolynomial { coeffs: vec![CertifiedComplex::zero(prec)] }
    }

    pub fn coeffs(&self) -> &[CertifiedComplex] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let prec = self
            .coeffs
            .iter()
            .chain(&other.coeffs)
            .map(|c| c.re.precision())
            .max()
            .unwrap_or(crate::DEFAULT_PRECISION);
        let zero = CertifiedComplex::zero(prec);
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = other.coeffs.get(k).unwrap_or(&zero);
            out.push(a.add(b));
        }
        ComplexPolynomial { coeffs: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self
            .coeffs
            .iter()
            .chain(&other.coeffs)
            .map(|c| c.re.precision())
            .max()
            .unwrap_or(crate::DEFAULT_PRECISION);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return ComplexPolynomial { coeffs: Vec::new() };
        }
        let mut out = vec![CertifiedComplex::zero(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        ComplexPolynomial { coeffs: out }
    }

    pub fn scale_real(&self, k: &CertifiedReal) -> Self {
        ComplexPolynomial { coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect() }
    }

    /// Splits p(x) = A(x²) + x·B(x²) into (A, B).
    pub fn parity_split(&self) -> (ComplexPolynomial, ComplexPolynomial) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (ComplexPolynomial { coeffs: even }, ComplexPolynomial { coeffs: odd })
    }

    /// Componentwise real parts; sound as a real enclosure only when the
    /// true coefficients are known real.
    pub fn real_parts(&self) -> Vec<CertifiedReal> {
        self.coeffs.iter().map(|c| c.re.clone()).collect()
    }
}
