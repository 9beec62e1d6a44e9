//! Boundary evaluation of the sine-weighted family: direct power sums,
//! the closed-form representation on the unit circle, the modulus-squared
//! identity, and the nonnegative imaginary part.
//!
//! The closed forms have removable singularities at t = 0 and
//! t = 2π/(N+2); inside a guard band around those points the evaluation
//! falls back to direct summation, which keeps every operation total on
//! (0, π).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::consts::{cos_ball, cos_pi_rational, pi, sin_ball};
use crate::arith::{CertifiedComplex, CertifiedReal, Dyadic, Sign};
use crate::families::pnew_coeffs;
use crate::poly::RealPolynomial;
use crate::Result;

/// A sampled boundary point of the image curve.
#[derive(Clone, Debug)]
pub struct BoundaryPoint {
    pub t: CertifiedReal,
    pub value: CertifiedComplex,
    pub modulus_sq: CertifiedReal,
}

impl BoundaryPoint {
    pub fn new(p: &RealPolynomial, t: &CertifiedReal) -> Self {
        let value = eval_direct(p, t);
        let modulus_sq = value.abs_sq();
        BoundaryPoint { t: t.clone(), value, modulus_sq }
    }
}

/// e^{it} as a complex ball.
pub fn unit_point(t: &CertifiedReal) -> CertifiedComplex {
    CertifiedComplex::new(cos_ball(t), sin_ball(t))
}

/// Direct Horner evaluation of p(e^{it}).
///
/// Conjugate symmetry is exact: evaluating at -t negates the imaginary
/// midpoint bit-for-bit.
pub fn eval_direct(p: &RealPolynomial, t: &CertifiedReal) -> CertifiedComplex {
    p.eval_complex(&unit_point(t))
}

struct ClosedFormParts {
    /// sin t
    s: CertifiedReal,
    /// cos t - cos(2π/(N+2))
    d: CertifiedReal,
    /// 1 - cos t
    one_minus_c: CertifiedReal,
    /// (N+2) t / 2
    phi: CertifiedReal,
    /// 1 - cos(2π/(N+2))
    one_minus_c0: CertifiedReal,
}

fn closed_form_parts(n: u32, t: &CertifiedReal, wp: u32) -> ClosedFormParts {
    let tw = t.with_precision(wp);
    let c = cos_ball(&tw);
    let s = sin_ball(&tw);
    let c0 = cos_pi_rational(&BigRational::new(BigInt::from(2), BigInt::from(n as i64 + 2)), wp);
    let one = CertifiedReal::one(wp);
    let d = c.sub(&c0);
    let one_minus_c = one.sub(&c);
    let one_minus_c0 = one.sub(&c0);
    let phi = tw.mul_i64(n as i64 + 2).mul_pow2(-1);
    ClosedFormParts { s, d, one_minus_c, phi, one_minus_c0 }
}

fn certified_abs_above(x: &CertifiedReal, threshold: &Dyadic) -> bool {
    x.abs_enclosure().lower().cmp_value(threshold) == std::cmp::Ordering::Greater
}

/// Guard-band half-width 2^(-p/4) at working precision p.
fn guard_threshold(prec: u32) -> Dyadic {
    Dyadic::new(BigInt::from(1), -((prec / 4) as i64))
}

/// Maps the midpoint of t into [0, π]; returns the mapped argument and
/// whether the result must be conjugated.
fn fold_to_upper_half(t: &CertifiedReal) -> (CertifiedReal, bool) {
    let wp = t.precision() + 32;
    let two_pi = pi(wp).mul_pow2(1);
    let tf = t.to_f64();
    let tau = std::f64::consts::TAU;
    let mut shifted = t.with_precision(wp);
    let k = (tf / tau).floor();
    if k != 0.0 && k.abs() < 1e15 {
        shifted = shifted.sub(&two_pi.mul_i64(k as i64));
    }
    if shifted.to_f64() > std::f64::consts::PI {
        (two_pi.sub(&shifted), true)
    } else {
        (shifted, false)
    }
}

/// Closed-form evaluation of P_N(e^{it}).
///
/// Valid for all t; arguments outside [0, π] are folded by conjugate
/// symmetry, and the guard band around the removable singularities falls
/// back to direct summation.
pub fn eval_theorem1(n: u32, t: &CertifiedReal) -> Result<CertifiedComplex> {
    if n < 1 {
        return Err(crate::Error::InvalidParameter("degree must be >= 1".into()));
    }
    let prec = t.precision();
    let wp = prec + 32;
    let (tt, conjugate) = fold_to_upper_half(t);
    let parts = closed_form_parts(n, &tt, wp);
    let tau = guard_threshold(prec);

    let value = if certified_abs_above(&parts.d, &tau) && certified_abs_above(&parts.one_minus_c, &tau)
    {
        // 1/(2d)  +  (1-c0)/((N+2)(1-c)) · s·sin(φ)/d² · e^{iφ}
        let head = parts.d.mul_pow2(1).recip()?;
        let sphi = sin_ball(&parts.phi);
        let cphi = cos_ball(&parts.phi);
        let k = parts
            .one_minus_c0
            .div(&parts.one_minus_c.mul_i64(n as i64 + 2))?
            .mul(&parts.s)
            .mul(&sphi)
            .div(&parts.d.sqr())?;
        CertifiedComplex::new(head.add(&k.mul(&cphi)), k.mul(&sphi))
    } else {
        let p = pnew_coeffs(n, wp)?;
        eval_direct(&p, &tt)
    };
    let value = if conjugate { value.conj() } else { value };
    Ok(CertifiedComplex::new(value.re.with_precision(prec), value.im.with_precision(prec)))
}

/// |P_N(e^{it})|² by the modulus-squared identity
/// (one quarter of the sum of the two displayed squares), with direct
/// fallback inside the guard band.
pub fn modulus_sq_theorem2(n: u32, t: &CertifiedReal) -> Result<CertifiedReal> {
    if n < 1 {
        return Err(crate::Error::InvalidParameter("degree must be >= 1".into()));
    }
    let prec = t.precision();
    let wp = prec + 32;
    let (tt, _) = fold_to_upper_half(t);
    let parts = closed_form_parts(n, &tt, wp);
    let tau = guard_threshold(prec);

    let v = if certified_abs_above(&parts.d, &tau) && certified_abs_above(&parts.one_minus_c, &tau) {
        let sphi = sin_ball(&parts.phi);
        let cphi = cos_ball(&parts.phi);
        let two_k = parts
            .one_minus_c0
            .div(&parts.one_minus_c.mul_i64(n as i64 + 2))?
            .mul(&parts.s)
            .mul(&sphi)
            .div(&parts.d.sqr())?
            .mul_pow2(1);
        let first = cphi.div(&parts.d)?.add(&two_k);
        let second = sphi.div(&parts.d)?;
        first.sqr().add(&second.sqr()).mul_pow2(-2).clamp_nonneg()
    } else {
        let p = pnew_coeffs(n, wp)?;
        eval_direct(&p, &tt).abs_sq()
    };
    Ok(v.with_precision(prec))
}

/// Im P_N(e^{it}) by the closed form
/// (1-c0)/((N+2)(1-cos t)) · sin t · sin²φ / (cos t - c0)².
///
/// On the main path every factor is certified positive or a square, so
/// the result is certified nonnegative; inside the guard band (or when a
/// factor's sign cannot be certified) the direct imaginary part is
/// returned instead.
pub fn imag_part(n: u32, t: &CertifiedReal) -> Result<CertifiedReal> {
    if n < 1 {
        return Err(crate::Error::InvalidParameter("degree must be >= 1".into()));
    }
    let prec = t.precision();
    let wp = prec + 32;
    let parts = closed_form_parts(n, t, wp);
    let tau = guard_threshold(prec);

    let main_path = certified_abs_above(&parts.d, &tau)
        && certified_abs_above(&parts.one_minus_c, &tau)
        && parts.one_minus_c.sign() == Sign::Positive
        && parts.s.sign() == Sign::Positive
        && parts.one_minus_c0.sign() == Sign::Positive;

    let v = if main_path {
        let sphi2 = sin_ball(&parts.phi).sqr();
        let d2 = parts.d.sqr();
        let num = parts.one_minus_c0.mul(&parts.s).mul(&sphi2);
        let den = parts.one_minus_c.mul_i64(n as i64 + 2).mul(&d2);
        // Certified-positive numerator factors and denominator: the
        // quotient's true value is >= 0, so clamping is certified.
        num.div(&den)?.clamp_nonneg()
    } else {
        let p = pnew_coeffs(n, wp)?;
        eval_direct(&p, t).im
    };
    Ok(v.with_precision(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::consts::pi;

    const P: u32 = 128;

    fn tb(v: f64) -> CertifiedReal {
        CertifiedReal::from_dyadic(Dyadic::from_f64(v), P)
    }

    #[test]
    fn direct_values_at_minus_one() {
        // P_1(-1) = -1, P_2(-1) = -1/2, P_4(-1) = -1/3
        let p1 = pnew_coeffs(1, P).unwrap();
        let v1 = p1.eval_dyadic(&Dyadic::from_i64(-1));
        assert!(v1.contains_dyadic(&Dyadic::from_i64(-1)));
        let p2 = pnew_coeffs(2, P).unwrap();
        let v2 = p2.eval_dyadic(&Dyadic::from_i64(-1));
        assert!(v2.contains_dyadic(&Dyadic::from_f64(-0.5)));
        let p4 = pnew_coeffs(4, P).unwrap();
        let v4 = p4.eval_dyadic(&Dyadic::from_i64(-1));
        let third = CertifiedReal::from_ratio(-1, 3, P);
        assert!(v4.overlaps(&third));
    }

    #[test]
    fn conjugate_symmetry_is_exact() {
        let p = pnew_coeffs(5, P).unwrap();
        let t = tb(1.234567);
        let a = eval_direct(&p, &t);
        let b = eval_direct(&p, &t.neg());
        assert_eq!(a.re.midpoint(), b.re.midpoint());
        assert_eq!(a.im.midpoint(), b.im.neg().midpoint());
    }

    #[test]
    fn theorem1_matches_direct() {
        let p4 = pnew_coeffs(4, P).unwrap();
        let t = tb(1.0);
        let closed = eval_theorem1(4, &t).unwrap();
        let direct = eval_direct(&p4, &t);
        assert!(closed.overlaps(&direct));
        assert!(closed.re.width().to_f64() < 1e-25);
    }

    #[test]
    fn theorem1_near_the_removable_singularity() {
        // t = 2π/7 is the singular point for N=5; the fallback must agree
        // with direct evaluation.
        let t = pi(P).mul_i64(2).div_i64(7);
        let closed = eval_theorem1(5, &t).unwrap();
        let direct = eval_direct(&pnew_coeffs(5, P).unwrap(), &t);
        assert!(closed.overlaps(&direct));
        // and just outside the band too
        let t2 = t.add(&tb(1e-3));
        let closed2 = eval_theorem1(5, &t2).unwrap();
        let direct2 = eval_direct(&pnew_coeffs(5, P).unwrap(), &t2);
        assert!(closed2.overlaps(&direct2));
    }

    #[test]
    fn theorem1_outside_the_principal_interval() {
        // folding by conjugate symmetry: t in (π, 2π)
        let p3 = pnew_coeffs(3, P).unwrap();
        let t = tb(4.4);
        let closed = eval_theorem1(3, &t).unwrap();
        let direct = eval_direct(&p3, &t);
        assert!(closed.overlaps(&direct));
    }

    #[test]
    fn theorem2_values() {
        // N=2, t=π/2: |i - 1/2|² = 5/4
        let t = pi(P).mul_pow2(-1);
        let m = modulus_sq_theorem2(2, &t).unwrap();
        assert!(m.contains_dyadic(&Dyadic::from_f64(1.25)));
        // N=1: |e^{it}|² = 1
        let m1 = modulus_sq_theorem2(1, &tb(0.77)).unwrap();
        assert!(m1.contains_dyadic(&Dyadic::one()));
    }

    #[test]
    fn theorem2_matches_direct_modulus() {
        let p4 = pnew_coeffs(4, P).unwrap();
        for &t in &[0.3, 0.9, 1.7, 2.9] {
            let t = tb(t);
            let a = modulus_sq_theorem2(4, &t).unwrap();
            let b = eval_direct(&p4, &t).abs_sq();
            assert!(a.overlaps(&b));
        }
    }

    #[test]
    fn imag_part_nonnegative_and_matches_direct() {
        let p3 = pnew_coeffs(3, P).unwrap();
        let t = pi(P).mul_pow2(-1); // π/2
        let im = imag_part(3, &t).unwrap();
        let direct = eval_direct(&p3, &t).im;
        assert!(im.overlaps(&direct));
        assert!(!im.lower().is_negative());
        // sin((N+2)t/2) vanishes at t=π for even N
        let im_pi = imag_part(4, &pi(P)).unwrap();
        assert!(im_pi.abs_enclosure().to_f64() < 1e-30);
    }

    #[test]
    fn endpoint_matches_quarter_secant_squared() {
        for n in [2u32, 3, 7, 20, 51] {
            let p = pnew_coeffs(n, P).unwrap();
            let v = p.eval_dyadic(&Dyadic::from_i64(-1));
            let c = cos_pi_rational(&BigRational::new(BigInt::from(1), BigInt::from(n as i64 + 2)), P);
            let expect = c.mul_pow2(1).recip().unwrap().sqr().neg();
            assert!(v.overlaps(&expect), "P_N(-1) at N={n}");
        }
    }
}
