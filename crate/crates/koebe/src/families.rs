//! Coefficient generators for the polynomial families under study and
//! the two nonnegative trigonometric kernels behind them.
//!
//! All generators are pure functions of (family, degree, precision) and
//! produce members normalized to a unit first coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::consts::{cos_pi_rational, sin_pi_rational};
use crate::arith::{CertifiedComplex, CertifiedReal};
use crate::poly::RealPolynomial;
use crate::{Error, Result};

/// Which family a polynomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Fejer,
    Alexander,
    Suffridge { j: u32 },
    EgervarySzasz,
    /// The sine-weighted Egerváry–Szász family (the conjectured-extremal one).
    PNew,
}

/// A family member: which family and which degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub degree: u32,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        if self.degree < 1 {
            return Err(Error::InvalidParameter("degree must be >= 1".into()));
        }
        if let Family::Suffridge { j } = self.family {
            if j < 1 || j > self.degree {
                return Err(Error::InvalidParameter(format!(
                    "suffridge index j={} out of range 1..={}",
                    j, self.degree
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.family {
            Family::Fejer => write!(f, "fejer(N={})", self.degree),
            Family::Alexander => write!(f, "alexander(N={})", self.degree),
            Family::Suffridge { j } => write!(f, "suffridge(N={}, j={})", self.degree, j),
            Family::EgervarySzasz => write!(f, "egervary-szasz(N={})", self.degree),
            Family::PNew => write!(f, "pnew(N={})", self.degree),
        }
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    Ok(())
}

fn ratio(num: i64, den: i64, prec: u32) -> CertifiedReal {
    CertifiedReal::from_ratio(num, den, prec)
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Partial sums of -log(1-z): coefficient of z^k is 1/k.
pub fn alexander_coeffs(n: u32, prec: u32) -> Result<RealPolynomial> {
    check_degree(n)?;
    let mut cs = vec![CertifiedReal::zero(prec)];
    for k in 1..=n as i64 {
        cs.push(ratio(1, k, prec));
    }
    Ok(RealPolynomial::new(cs))
}

/// Fejér polynomials: coefficient of z^k is 1 - (k-1)/N.
pub fn fejer_coeffs(n: u32, prec: u32) -> Result<RealPolynomial> {
    check_degree(n)?;
    let mut cs = vec![CertifiedReal::zero(prec)];
    for k in 1..=n as i64 {
        cs.push(ratio(n as i64 - k + 1, n as i64, prec));
    }
    Ok(RealPolynomial::new(cs))
}

/// Suffridge polynomials S_{N,j}: Fejér coefficients modulated by
/// sin(πkj/(N+1)) / sin(πj/(N+1)).
pub fn suffridge_coeffs(n: u32, j: u32, prec: u32) -> Result<RealPolynomial> {
    check_degree(n)?;
    if j < 1 || j > n {
        return Err(Error::InvalidParameter(format!("suffridge index j={j} out of range 1..={n}")));
    }
    let wp = prec + 16;
    let denom = sin_pi_rational(&rational(j as i64, n as i64 + 1), wp);
    let mut cs = vec![CertifiedReal::zero(prec), CertifiedReal::one(prec)];
    for k in 2..=n as i64 {
        let s = sin_pi_rational(&rational(k * j as i64, n as i64 + 1), wp);
        let f = ratio(n as i64 - k + 1, n as i64, wp);
        cs.push(f.mul(&s.div(&denom)?).with_precision(prec));
    }
    Ok(RealPolynomial::new(cs))
}

/// Cosine coefficient b_k of the Egerváry–Szász kernel E_N; b_0 = 1.
pub fn egervary_szasz_coeff(n: u32, k: u32, prec: u32) -> Result<CertifiedReal> {
    check_degree(n)?;
    if k > n {
        return Err(Error::InvalidParameter(format!("index k={k} out of range 0..={n}")));
    }
    if k == 0 {
        return Ok(CertifiedReal::one(prec));
    }
    let wp = prec + 16;
    let m = n as i64 + 2;
    let k = k as i64;
    let hi = sin_pi_rational(&rational(k + 1, m), wp).mul_i64(n as i64 - k + 3);
    let lo = sin_pi_rational(&rational(k - 1, m), wp).mul_i64(n as i64 - k + 1);
    let den = sin_pi_rational(&rational(1, m), wp).mul_i64(m);
    Ok(hi.sub(&lo).div(&den)?.with_precision(prec))
}

/// The sine-weighted Egerváry–Szász polynomials, normalized so the
/// coefficient of z is exactly 1: a_k = b_k sin(kπ/(N+2)) / sin(2π/(N+2)).
pub fn pnew_coeffs(n: u32, prec: u32) -> Result<RealPolynomial> {
    check_degree(n)?;
    let wp = prec + 16;
    let m = n as i64 + 2;
    let norm = sin_pi_rational(&rational(2, m), wp);
    let mut cs = vec![CertifiedReal::zero(prec), CertifiedReal::one(prec)];
    for k in 2..=n as i64 {
        let b = egervary_szasz_coeff(n, k as u32, wp)?;
        let s = sin_pi_rational(&rational(k, m), wp);
        cs.push(b.mul(&s).div(&norm)?.with_precision(prec));
    }
    Ok(RealPolynomial::new(cs))
}

/// Generates the coefficient vector for a validated family spec.
pub fn generate(spec: &FamilySpec, prec: u32) -> Result<RealPolynomial> {
    spec.validate()?;
    match spec.family {
        Family::Fejer => fejer_coeffs(spec.degree, prec),
        Family::Alexander => alexander_coeffs(spec.degree, prec),
        Family::Suffridge { j } => suffridge_coeffs(spec.degree, j, prec),
        Family::EgervarySzasz => egervary_szasz_as_poly(spec.degree, prec),
        Family::PNew => pnew_coeffs(spec.degree, prec),
    }
}

/// The E_N cosine coefficients b_1..b_N read as a power-series member
/// z + b_2/b_1 z^2 ... is not part of the study; for coefficient export
/// we return the raw b_k vector with b_0 as the constant term.
fn egervary_szasz_as_poly(n: u32, prec: u32) -> Result<RealPolynomial> {
    let mut cs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        cs.push(egervary_szasz_coeff(n, k, prec)?);
    }
    Ok(RealPolynomial::new(cs))
}

/// Sum of e^{ikt} for k = 0..=n at a ball argument.
fn geometric_unit_sum(n: u32, t: &CertifiedReal) -> CertifiedComplex {
    let prec = t.precision();
    let z = CertifiedComplex::new(crate::arith::consts::cos_ball(t), crate::arith::consts::sin_ball(t));
    let mut power = CertifiedComplex::new(CertifiedReal::one(prec), CertifiedReal::zero(prec));
    let mut acc = power.clone();
    for _ in 1..=n {
        power = power.mul(&z);
        acc = acc.add(&power);
    }
    acc
}

/// Fejér–Riesz kernel Φ_N(t) = |Σ_{k≤N} e^{ikt}|² / (N+1), certified
/// nonnegative.
pub fn fejer_kernel(n: u32, t: &CertifiedReal) -> CertifiedReal {
    let s = geometric_unit_sum(n, t);
    s.abs_sq().div_i64(n as i64 + 1).clamp_nonneg()
}

/// Egerváry–Szász kernel by its squared-modulus representation:
/// E_N(t) = (2/(N+2)) |Σ_{k≤N} sin((k+1)π/(N+2)) e^{ikt}|².
pub fn egervary_szasz_eval(n: u32, t: &CertifiedReal) -> CertifiedReal {
    let prec = t.precision();
    let wp = prec + 16;
    let m = n as i64 + 2;
    let tw = t.with_precision(wp);
    let z = CertifiedComplex::new(
        crate::arith::consts::cos_ball(&tw),
        crate::arith::consts::sin_ball(&tw),
    );
    let mut power = CertifiedComplex::new(CertifiedReal::one(wp), CertifiedReal::zero(wp));
    let mut acc = CertifiedComplex::zero(wp);
    for k in 0..=n as i64 {
        let w = sin_pi_rational(&rational(k + 1, m), wp);
        acc = acc.add(&power.scale(&w));
        if k < n as i64 {
            power = power.mul(&z);
        }
    }
    acc.abs_sq().mul_pow2(1).div_i64(m).clamp_nonneg().with_precision(prec)
}

/// Cosine-sum representation of E_N from the b_k coefficients; used to
/// cross-check the squared-modulus form.
pub fn egervary_szasz_cosine_sum(n: u32, t: &CertifiedReal) -> Result<CertifiedReal> {
    let prec = t.precision();
    let wp = prec + 16;
    let tw = t.with_precision(wp);
    let mut acc = CertifiedReal::one(wp);
    for k in 1..=n {
        let b = egervary_szasz_coeff(n, k, wp)?;
        let kc = crate::arith::consts::cos_ball(&tw.mul_i64(k as i64));
        acc = acc.add(&b.mul(&kc));
    }
    Ok(acc.with_precision(prec))
}

/// First cosine coefficient of the extremal kernel, 2cos(π/(N+2)).
pub fn egervary_szasz_b1_closed_form(n: u32, prec: u32) -> CertifiedReal {
    cos_pi_rational(&rational(1, n as i64 + 2), prec).mul_i64(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Dyadic;

    const P: u32 = 128;

    #[test]
    fn alexander_small_cases() {
        let a1 = alexander_coeffs(1, P).unwrap();
        assert_eq!(a1.degree(), 1);
        assert_eq!(a1.coeff(1).to_f64(), 1.0);
        let a3 = alexander_coeffs(3, P).unwrap();
        assert!(a3.coeff(2).contains_dyadic(&Dyadic::from_f64(0.5)));
        assert!((a3.coeff(3).to_f64() - 1.0 / 3.0).abs() < 1e-30);
        assert!(alexander_coeffs(0, P).is_err());
    }

    #[test]
    fn alexander_value_at_minus_one() {
        // |A_20(-1)| = |Σ (-1)^k/k| stays above 1/2 - 1/21
        let a = alexander_coeffs(20, P).unwrap();
        let v = a.eval_dyadic(&Dyadic::from_i64(-1)).abs_enclosure();
        let expect: f64 = (1..=20).map(|k| (-1f64).powi(k + 1) / k as f64).sum::<f64>();
        assert!((v.to_f64() - expect.abs()).abs() < 1e-30);
        assert!(v.to_f64() > 0.5 - 1.0 / 21.0);
    }

    #[test]
    fn fejer_small_cases() {
        let f1 = fejer_coeffs(1, P).unwrap();
        assert_eq!(f1.degree(), 1);
        let f2 = fejer_coeffs(2, P).unwrap();
        assert!(f2.coeff(2).contains_dyadic(&Dyadic::from_f64(0.5)));
        let f4 = fejer_coeffs(4, P).unwrap();
        assert!(f4.coeff(3).contains_dyadic(&Dyadic::from_f64(0.5)));
        assert!(fejer_coeffs(0, P).is_err());
    }

    #[test]
    fn suffridge_leading_coefficient_is_one_over_n() {
        for n in [1u32, 3, 7, 20] {
            for j in [1u32, 2, n.min(3)] {
                if j < 1 || j > n {
                    continue;
                }
                let s = suffridge_coeffs(n, j, P).unwrap();
                let lead = s.coeff(n as usize).abs_enclosure();
                let inv_n = CertifiedReal::from_ratio(1, n as i64, P);
                assert!(lead.overlaps(&inv_n), "leading of S({n},{j})");
            }
        }
        assert!(suffridge_coeffs(3, 0, P).is_err());
        assert!(suffridge_coeffs(3, 4, P).is_err());
    }

    #[test]
    fn suffridge_s3_at_minus_one() {
        let s3 = suffridge_coeffs(3, 1, P).unwrap();
        let v = s3.eval_dyadic(&Dyadic::from_i64(-1)).abs_enclosure();
        assert!((v.to_f64() - 0.3905242917512699).abs() < 1e-13);
    }

    #[test]
    fn egervary_szasz_b0_and_b1() {
        let b0 = egervary_szasz_coeff(5, 0, P).unwrap();
        assert!(b0.is_exact());
        assert_eq!(b0.to_f64(), 1.0);
        for n in [2u32, 4, 9, 33] {
            let b1 = egervary_szasz_coeff(n, 1, P).unwrap();
            let closed = egervary_szasz_b1_closed_form(n, P);
            assert!(b1.overlaps(&closed), "b1 = 2cos(π/(N+2)) at N={n}");
        }
        assert!(egervary_szasz_coeff(3, 4, P).is_err());
    }

    #[test]
    fn pnew_golden_small_cases() {
        // N=2: z + z²/2
        let p2 = pnew_coeffs(2, P).unwrap();
        assert!(p2.coeff(2).contains_dyadic(&Dyadic::from_f64(0.5)));
        assert!(p2.coeff(2).width().to_f64() < 1e-30);

        // N=3: a2 = 2/√5, a3 = (1 - 1/√5)/2, via an independent sqrt route
        let p3 = pnew_coeffs(3, P).unwrap();
        let sqrt5 = CertifiedReal::from_i64(5, P).sqrt().unwrap();
        let a2 = CertifiedReal::from_i64(2, P).div(&sqrt5).unwrap();
        let a3 = CertifiedReal::one(P)
            .sub(&CertifiedReal::one(P).div(&sqrt5).unwrap())
            .mul_pow2(-1);
        assert!(p3.coeff(2).overlaps(&a2));
        assert!(p3.coeff(3).overlaps(&a3));

        // N=4: z + 7/6 z² + 2/3 z³ + 1/6 z⁴
        let p4 = pnew_coeffs(4, P).unwrap();
        for (k, (num, den)) in [(2usize, (7i64, 6i64)), (3, (2, 3)), (4, (1, 6))] {
            let expect = CertifiedReal::from_ratio(num, den, P);
            assert!(p4.coeff(k).overlaps(&expect), "P4 coefficient {k}");
            assert!(p4.coeff(k).width().to_f64() < 1e-30);
        }

        // N=6: a6 = 1/(4√2 + 8)
        let p6 = pnew_coeffs(6, P).unwrap();
        let sqrt2 = CertifiedReal::from_i64(2, P).sqrt().unwrap();
        let a6 = CertifiedReal::one(P)
            .div(&sqrt2.mul_i64(4).add(&CertifiedReal::from_i64(8, P)))
            .unwrap();
        assert!(p6.coeff(6).overlaps(&a6));
    }

    #[test]
    fn pnew_first_coefficient_exactly_one() {
        for n in [1u32, 2, 5, 17, 51] {
            let p = pnew_coeffs(n, P).unwrap();
            assert!(p.coeff(1).is_exact());
            assert_eq!(p.coeff(1).to_f64(), 1.0);
        }
    }

    #[test]
    fn pnew_leading_coefficient_bound() {
        // positive and ≤ 1/N (equality at N=2)
        for n in 1..=51u32 {
            let p = pnew_coeffs(n, P).unwrap();
            let lead = p.coeff(n as usize);
            assert_eq!(lead.sign(), crate::Sign::Positive, "N={n}");
            let bound = CertifiedReal::from_ratio(1, n as i64, P);
            assert!(!bound.certified_lt(&lead), "leading ≤ 1/N at N={n}");
        }
    }

    #[test]
    fn fejer_kernel_values() {
        let t0 = CertifiedReal::zero(P);
        let k1 = fejer_kernel(1, &t0);
        assert!(k1.contains_dyadic(&Dyadic::from_i64(2)));
        for n in [1u32, 3, 8] {
            let k = fejer_kernel(n, &t0);
            assert!(k.contains_dyadic(&Dyadic::from_i64(n as i64 + 1)), "Φ_N(0) = N+1");
        }
        let pi_ball = crate::arith::consts::pi(P);
        let k3 = fejer_kernel(3, &pi_ball);
        assert!(k3.abs_enclosure().to_f64() < 1e-30);
        assert!(!k3.lower().is_negative());
    }

    #[test]
    fn egervary_szasz_dual_representations_agree() {
        let t = CertifiedReal::from_dyadic(Dyadic::from_f64(0.83), P);
        for n in [1u32, 2, 5, 11] {
            let a = egervary_szasz_eval(n, &t);
            let b = egervary_szasz_cosine_sum(n, &t).unwrap();
            assert!(a.overlaps(&b), "dual representations at N={n}");
            assert!(!a.lower().is_negative());
        }
        // E_1(0) = 1 + b_1 = 2
        let e1 = egervary_szasz_eval(1, &CertifiedReal::zero(P));
        assert!(e1.contains_dyadic(&Dyadic::from_i64(2)));
    }
}
