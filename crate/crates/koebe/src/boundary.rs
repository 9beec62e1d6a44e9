//! Boundary-curve sampling and the numeric minimum distance from the
//! image of the unit circle to the origin.
//!
//! The minimum search scans |p(e^{it})|² on a grid over [0, π]
//! (conjugate symmetry makes the other half redundant) and refines an
//! interior bracket by sectioned search on exact dyadic abscissas. The
//! result is a certified enclosure of the value at the located point —
//! a numeric minimum, not a certified global one.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::consts::pi;
use crate::arith::{CertifiedReal, Dyadic, Sign};
use crate::closed_form::eval_direct;
use crate::families::FamilySpec;
use crate::poly::RealPolynomial;
use crate::{Error, Result};

/// One sampled point of the boundary curve.
#[derive(Clone, Debug, Serialize)]
pub struct CurveSample {
    pub t: CertifiedReal,
    pub re: CertifiedReal,
    pub im: CertifiedReal,
    pub abs: CertifiedReal,
}

/// Sampled image of the unit circle.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryCurve {
    pub samples: Vec<CurveSample>,
    pub family: Option<FamilySpec>,
}

/// Uniform sampling of p(e^{it}) over t ∈ [0, 2π).
///
/// Points with t > π are mirrored from the conjugate-symmetric half, so
/// the curve satisfies the symmetry exactly.
pub fn sample_curve(p: &RealPolynomial, count: usize) -> Result<BoundaryCurve> {
    if count < 8 {
        return Err(Error::InvalidParameter("sample count must be >= 8".into()));
    }
    let prec = p.precision();
    let pi_ball = pi(prec);
    let half = count / 2;
    let lower: Vec<CurveSample> = (0..=half)
        .into_par_iter()
        .map(|j| {
            let t = pi_ball.mul(&CertifiedReal::from_ratio(2 * j as i64, count as i64, prec));
            let value = eval_direct(p, &t);
            let abs = value.abs_sq().sqrt().expect("clamped nonnegative");
            CurveSample { t, re: value.re, im: value.im, abs }
        })
        .collect();
    let mut samples = lower.clone();
    samples.truncate(half + 1);
    for j in half + 1..count {
        let src = &lower[count - j];
        let t = pi_ball.mul(&CertifiedReal::from_ratio(2 * j as i64, count as i64, prec));
        samples.push(CurveSample {
            t,
            re: src.re.clone(),
            im: src.im.neg(),
            abs: src.abs.clone(),
        });
    }
    Ok(BoundaryCurve { samples, family: None })
}

/// Result of the minimum-distance search.
#[derive(Clone, Debug, Serialize)]
pub struct MinDistanceResult {
    pub t_star: CertifiedReal,
    pub distance: CertifiedReal,
    pub attained_at_minus1: bool,
}

/// Default relative refinement tolerance 2⁻⁴⁸.
pub fn default_refine_tol(prec: u32) -> CertifiedReal {
    CertifiedReal::from_dyadic(Dyadic::new(BigInt::from(1), -48), prec)
}

fn modulus_sq_at(p: &RealPolynomial, t: &Dyadic, prec: u32) -> CertifiedReal {
    let tb = CertifiedReal::from_dyadic(t.clone(), prec);
    eval_direct(p, &tb).abs_sq()
}

/// Coarse grid scan of |p(e^{it})|² over [0, π] followed by sectioned
/// refinement of an interior bracket.
pub fn min_distance(p: &RealPolynomial, grid: usize, refine_tol: &CertifiedReal) -> Result<MinDistanceResult> {
    if grid < 64 {
        return Err(Error::InvalidParameter("grid must be >= 64".into()));
    }
    let tol = refine_tol.midpoint().clone();
    if !tol.is_positive() {
        return Err(Error::InvalidParameter("refine tolerance must be positive".into()));
    }
    let prec = p.precision();
    let pi_mid = pi(prec).midpoint().clone();

    // grid abscissas are exact dyadics; comparisons use ball midpoints
    let values: Vec<Dyadic> = (0..=grid)
        .into_par_iter()
        .map(|j| {
            let t = pi_mid.mul_bigint(&BigInt::from(j as i64));
            let (t, _) = t.div(&Dyadic::from_i64(grid as i64), prec);
            modulus_sq_at(p, &t, prec).midpoint().clone()
        })
        .collect();
    let argmin = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp_value(b.1))
        .map(|(i, _)| i)
        .expect("nonempty grid");

    let grid_point = |j: usize| -> Dyadic {
        let t = pi_mid.mul_bigint(&BigInt::from(j as i64));
        t.div(&Dyadic::from_i64(grid as i64), prec).0
    };

    if argmin == grid {
        // boundary minimum at t = π: evaluate at z = -1 exactly
        let value = p.eval_dyadic(&Dyadic::from_i64(-1)).abs_enclosure();
        return Ok(MinDistanceResult { t_star: pi(prec), distance: value, attained_at_minus1: true });
    }
    if argmin == 0 {
        let value = p.eval_dyadic(&Dyadic::from_i64(1)).abs_enclosure();
        return Ok(MinDistanceResult {
            t_star: CertifiedReal::zero(prec),
            distance: value,
            attained_at_minus1: false,
        });
    }

    // sectioned search on the bracketing triple
    let mut a = grid_point(argmin - 1);
    let mut b = grid_point(argmin + 1);
    // section ratio ≈ 0.381966 as an exact dyadic
    let ratio = Dyadic::from_f64(0.3819660112501052);
    let mut converged = false;
    for _ in 0..240 {
        let w = b.sub(&a);
        let scale = if b.abs().cmp_value(&Dyadic::one()) == std::cmp::Ordering::Greater {
            b.abs()
        } else {
            Dyadic::one()
        };
        if w.cmp_value(&scale.mul(&tol)) != std::cmp::Ordering::Greater {
            converged = true;
            break;
        }
        let x1 = a.add(&w.mul(&ratio));
        let x2 = b.sub(&w.mul(&ratio));
        let f1 = modulus_sq_at(p, &x1, prec);
        let f2 = modulus_sq_at(p, &x2, prec);
        if f1.midpoint().cmp_value(f2.midpoint()) == std::cmp::Ordering::Less {
            b = x2;
        } else {
            a = x1;
        }
    }
    if !converged {
        return Err(Error::ToleranceNotReached(format!(
            "bracket width {:.3e} after sectioned search",
            b.sub(&a).to_f64()
        )));
    }

    let t_star = CertifiedReal::from_interval(&a, &b, prec);
    let distance = eval_direct(p, &t_star).abs_sq().sqrt().expect("clamped nonnegative");
    let attained = matches!(t_star.sub(&pi(prec)).sign(), Sign::Undecided | Sign::Zero);
    Ok(MinDistanceResult { t_star, distance, attained_at_minus1: attained })
}

/// Outcome of the sampled typically-real check.
#[derive(Clone, Debug, Serialize)]
pub struct TypicallyRealCheck {
    pub holds: bool,
    pub witness: Option<CertifiedReal>,
}

/// Samples Im p(e^{it}) on interior points of (0, π); a certified-negative
/// sample refutes with a witness. `holds = true` means no violation was
/// found at this grid (a sampling check, not a proof).
pub fn typically_real_check(p: &RealPolynomial, grid: usize) -> TypicallyRealCheck {
    let prec = p.precision();
    let pi_ball = pi(prec);
    for j in 1..=grid {
        let t = pi_ball.mul(&CertifiedReal::from_ratio(j as i64, grid as i64 + 1, prec));
        let im = eval_direct(p, &t).im;
        if im.sign() == Sign::Negative {
            return TypicallyRealCheck { holds: false, witness: Some(t) };
        }
    }
    TypicallyRealCheck { holds: true, witness: None }
}
