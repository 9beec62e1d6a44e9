//! Koebe-radius quantities: the conjectured upper bound, the Suffridge
//! comparison values, and the Rogosinski–Szegő lower bound with its
//! even-degree transcendental root solve.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::consts::{cos_ball, cos_pi_rational, pi, sin_pi_rational};
use crate::arith::{CertifiedReal, Sign};
use crate::boundary::{default_refine_tol, min_distance};
use crate::families::{pnew_coeffs, suffridge_coeffs};
use crate::pullback::certify_univalence;
use crate::{Error, Result, DEFAULT_PRECISION_CAP};

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// (1/4)·sec²(π/(N+2)), the conjectured Koebe radius for degree N.
pub fn upper_bound_pn(n: u32, prec: u32) -> CertifiedReal {
    assert!(n >= 1, "degree must be >= 1");
    let wp = prec + 16;
    let c = cos_pi_rational(&rational(1, n as i64 + 2), wp);
    c.mul_pow2(1).recip().expect("cos(π/(N+2)) > 0").sqr().with_precision(prec)
}

/// |S_N(-1)| = (1/4)·((N+1)/N)·sec²(π/(2(N+1))).
pub fn suffridge_value(n: u32, prec: u32) -> CertifiedReal {
    assert!(n >= 1, "degree must be >= 1");
    let wp = prec + 16;
    let c = cos_pi_rational(&rational(1, 2 * (n as i64 + 1)), wp);
    let sec_sq_quarter = c.mul_pow2(1).recip().expect("cos > 0").sqr();
    sec_sq_quarter
        .mul(&CertifiedReal::from_ratio(n as i64 + 1, n as i64, wp))
        .with_precision(prec)
}

/// The Rogosinski–Szegő angle ψ_N: π/(N+3) for odd N; for even N the
/// smallest positive root of (N+4)sin((N+2)ψ) + (N+2)sin((N+4)ψ) = 0,
/// located inside the bracket (π/(N+3), π/(N+2)).
pub fn psi_n(n: u32, prec: u32) -> Result<CertifiedReal> {
    if n < 1 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    let wp = prec + 16;
    if n % 2 == 1 {
        let f = CertifiedReal::from_ratio(1, n as i64 + 3, wp);
        return Ok(pi(wp).mul(&f).with_precision(prec));
    }

    // f(cπ) for rational c, evaluated with exact argument reduction
    let m2 = n as i64 + 2;
    let m4 = n as i64 + 4;
    let f = |c: &BigRational, wp: u32| -> CertifiedReal {
        let a = sin_pi_rational(&(c * BigRational::from_integer(BigInt::from(m2))), wp).mul_i64(m4);
        let b = sin_pi_rational(&(c * BigRational::from_integer(BigInt::from(m4))), wp).mul_i64(m2);
        a.add(&b)
    };
    let certified = |c: &BigRational| -> Sign {
        let mut w = wp;
        loop {
            let s = f(c, w).sign();
            if s != Sign::Undecided || w >= 8 * wp {
                return s;
            }
            w *= 2;
        }
    };

    let mut lo = rational(1, n as i64 + 3);
    let mut hi = rational(1, n as i64 + 2);
    if certified(&lo) != Sign::Positive || certified(&hi) != Sign::Negative {
        return Err(Error::BracketSignsNotOpposite);
    }

    // bisect c (in units of π) until the ψ enclosure is narrower than
    // 2^(-prec/2)
    let target = crate::arith::Dyadic::new(BigInt::one(), -((prec / 2) as i64));
    let pi_ball = pi(wp);
    loop {
        let width = &hi - &lo;
        let width_ball = CertifiedReal::from_big_ratio(width.numer(), width.denom(), wp).mul(&pi_ball);
        if width_ball.upper().cmp_value(&target) != std::cmp::Ordering::Greater {
            break;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        match certified(&mid) {
            Sign::Positive => lo = mid,
            Sign::Negative => hi = mid,
            Sign::Zero => {
                // exact root at a rational multiple of π cannot happen for
                // this transcendental equation; treat as a stall
                return Err(Error::BisectionStalled);
            }
            Sign::Undecided => return Err(Error::BisectionStalled),
        }
    }
    let lo_ball = CertifiedReal::from_big_ratio(lo.numer(), lo.denom(), wp).mul(&pi_ball);
    let hi_ball = CertifiedReal::from_big_ratio(hi.numer(), hi.denom(), wp).mul(&pi_ball);
    Ok(CertifiedReal::from_interval(&lo_ball.lower(), &hi_ball.upper(), prec))
}

/// (1/4)·sec²(ψ_N), the lower Koebe-radius bound.
pub fn lower_bound_rs(n: u32, prec: u32) -> Result<CertifiedReal> {
    let wp = prec + 16;
    let c = if n % 2 == 1 {
        cos_pi_rational(&rational(1, n as i64 + 3), wp)
    } else {
        cos_ball(&psi_n(n, wp)?)
    };
    Ok(c.mul_pow2(1).recip().expect("cos(ψ_N) > 0").sqr().with_precision(prec))
}

/// One row of the radius table.
#[derive(Clone, Debug, Serialize)]
pub struct RadiusReport {
    pub n: u32,
    pub upper_pn: CertifiedReal,
    pub suffridge_at_minus1: CertifiedReal,
    pub suffridge_boundary_min: CertifiedReal,
    pub psi_n: CertifiedReal,
    pub lower_rs: CertifiedReal,
    pub pn_boundary_min: CertifiedReal,
    pub certified: bool,
}

/// Per-degree reports for N = 1..=n_max, rows computed in parallel.
pub fn radius_table(n_max: u32, prec: u32, grid: usize) -> Result<Vec<RadiusReport>> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be >= 1".into()));
    }
    (1..=n_max)
        .into_par_iter()
        .map(|n| radius_report(n, prec, grid))
        .collect()
}

fn radius_report(n: u32, prec: u32, grid: usize) -> Result<RadiusReport> {
    let tol = default_refine_tol(prec);
    let pn = pnew_coeffs(n, prec)?;
    let sn = suffridge_coeffs(n, 1, prec)?;
    let pn_min = min_distance(&pn, grid, &tol)?;
    let sn_min = min_distance(&sn, grid, &tol)?;
    let cert = certify_univalence(n, DEFAULT_PRECISION_CAP)?;
    Ok(RadiusReport {
        n,
        upper_pn: upper_bound_pn(n, prec),
        suffridge_at_minus1: suffridge_value(n, prec),
        suffridge_boundary_min: sn_min.distance,
        psi_n: psi_n(n, prec)?,
        lower_rs: lower_bound_rs(n, prec)?,
        pn_boundary_min: pn_min.distance,
        certified: cert.is_certified(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Dyadic;

    const P: u32 = 128;

    #[test]
    fn upper_bound_small_cases() {
        // N=1 → 1, N=2 → 1/2
        assert!(upper_bound_pn(1, P).contains_dyadic(&Dyadic::from_i64(1)));
        assert!(upper_bound_pn(2, P).contains_dyadic(&Dyadic::from_f64(0.5)));
        // N=3 → (3-√5)/2
        let sqrt5 = CertifiedReal::from_i64(5, P).sqrt().unwrap();
        let expect = CertifiedReal::from_i64(3, P).sub(&sqrt5).mul_pow2(-1);
        assert!(upper_bound_pn(3, P).overlaps(&expect));
        // N=6 → 0.2929…
        assert!((upper_bound_pn(6, P).to_f64() - 0.29289321881345247).abs() < 1e-12);
    }

    #[test]
    fn upper_bound_is_strictly_decreasing() {
        let mut prev = upper_bound_pn(1, 96);
        for n in 2..=200 {
            let cur = upper_bound_pn(n, 96);
            assert!(cur.certified_lt(&prev), "monotone at N={n}");
            prev = cur;
        }
    }

    #[test]
    fn upper_bound_asymptote() {
        let v = upper_bound_pn(1000, P);
        assert!(v.lower().to_f64() > 0.25);
        assert!(v.upper().to_f64() < 0.2505);
    }

    #[test]
    fn suffridge_value_cases() {
        // N=1: (1/4)·2·sec²(π/4) = 1
        assert!(suffridge_value(1, P).contains_dyadic(&Dyadic::from_i64(1)));
        // N=3: 0.3905…
        assert!((suffridge_value(3, P).to_f64() - 0.39052429175126994).abs() < 1e-13);
        // asymptotically 1/4
        let v = suffridge_value(1000, P);
        assert!(v.lower().to_f64() > 0.25 && v.upper().to_f64() < 0.2505);
    }

    #[test]
    fn suffridge_value_matches_direct_evaluation() {
        for n in [1u32, 2, 3, 10, 51] {
            let s = suffridge_coeffs(n, 1, P).unwrap();
            let direct = s.eval_dyadic(&Dyadic::from_i64(-1)).abs_enclosure();
            assert!(direct.overlaps(&suffridge_value(n, P)), "N={n}");
        }
    }

    #[test]
    fn psi_odd_is_exactly_pi_over_n_plus_3() {
        let p3 = psi_n(3, P).unwrap();
        let expect = pi(P).div_i64(6);
        assert!(p3.overlaps(&expect));
        assert!(p3.width().to_f64() < 1e-30);
    }

    #[test]
    fn psi_even_brackets() {
        for n in [2u32, 4, 10, 50] {
            let psi = psi_n(n, P).unwrap();
            let lo = pi(P).div_i64(n as i64 + 3);
            let hi = pi(P).div_i64(n as i64 + 2);
            assert!(lo.certified_lt(&psi), "ψ_{n} > π/(N+3)");
            assert!(psi.certified_lt(&hi), "ψ_{n} < π/(N+2)");
            assert!(psi.width().to_f64() < 2f64.powi(-(P as i32) / 2 + 1));
        }
    }

    #[test]
    fn psi_2_value() {
        // root of 6 sin 4ψ + 4 sin 6ψ near 0.659058
        let psi = psi_n(2, P).unwrap();
        assert!((psi.to_f64() - 0.6590580358264089).abs() < 1e-12);
    }

    #[test]
    fn lower_bound_cases() {
        // ψ_1 = π/4 → 1/2; ψ_3 = π/6 → 1/3
        assert!(lower_bound_rs(1, P).unwrap().contains_dyadic(&Dyadic::from_f64(0.5)));
        let third = CertifiedReal::from_ratio(1, 3, P);
        assert!(lower_bound_rs(3, P).unwrap().overlaps(&third));
    }

    #[test]
    fn lower_bound_below_upper_bound() {
        for n in 1..=50u32 {
            let lo = lower_bound_rs(n, 96).unwrap();
            let hi = upper_bound_pn(n, 96);
            assert!(!hi.certified_lt(&lo), "lower ≤ upper at N={n}");
            let quarter = CertifiedReal::from_ratio(1, 4, 96);
            assert!(!lo.certified_lt(&quarter), "1/4 ≤ lower at N={n}");
            assert!(!CertifiedReal::one(96).certified_lt(&hi), "upper ≤ 1 at N={n}");
        }
    }
}
