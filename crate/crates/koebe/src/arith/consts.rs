//! Certified transcendental constants: π, sine/cosine at rational
//! multiples of π (with exact argument reduction), and sine/cosine/arctan
//! of arbitrary enclosures.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use super::{CertifiedReal, Dyadic, Mag};

/// Which trigonometric constant to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigKind {
    Sin,
    Cos,
}

static PI_CACHE: Lazy<RwLock<HashMap<u32, CertifiedReal>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Enclosure of π at the requested precision. Computed once per
/// precision bucket and cached; safe for concurrent use.
pub fn pi(prec: u32) -> CertifiedReal {
    let bucket = prec.max(64).next_power_of_two();
    if let Some(v) = PI_CACHE.read().unwrap().get(&bucket) {
        return v.with_precision(prec);
    }
    let v = compute_pi(bucket);
    PI_CACHE.write().unwrap().entry(bucket).or_insert_with(|| v.clone());
    v.with_precision(prec)
}

/// Machin's formula with scaled-integer arctangents:
/// π = 16 atan(1/5) - 4 atan(1/239).
fn compute_pi(prec: u32) -> CertifiedReal {
    let q = prec as u64 + 32;
    let (a, terms_a) = atan_inv_scaled(5, q);
    let (b, terms_b) = atan_inv_scaled(239, q);
    let mid = Dyadic::new(a * 16 - b * 4, -(q as i64));
    // Each floored term errs by < 1, plus < 1 for each alternating tail.
    let err_units = 16 * (terms_a + 1) + 4 * (terms_b + 1);
    let rad = Mag::from_u64_upper(err_units).mul_pow2(-(q as i64));
    let (mid, round_err) = mid.round_to(prec + 2);
    let rad = match round_err {
        Some(e) => rad.add(&Mag::pow2(e)),
        None => rad,
    };
    CertifiedReal::from_parts(mid, rad, prec)
}

/// Alternating sum of floor(2^q / ((2k+1) x^(2k+1))); stops at the first
/// zero term. Returns the sum and the number of terms.
fn atan_inv_scaled(x: u64, q: u64) -> (BigInt, u64) {
    let one_q = BigInt::one() << q;
    let x2 = BigInt::from(x * x);
    let mut power = BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = &one_q / (&power * (2 * k + 1));
        if term.is_zero() {
            return (acc, k);
        }
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        power *= &x2;
        k += 1;
    }
}

/// sin(r·π) for exact rational `r`, with exact range reduction.
pub fn sin_pi_rational(r: &BigRational, prec: u32) -> CertifiedReal {
    let wp = prec + 32;
    let (kind, negate, arg) = reduce_sin_pi(r);
    let theta = rational_times_pi(&arg, wp);
    let v = match kind {
        TrigKind::Sin => sin_kernel(&theta, wp),
        TrigKind::Cos => cos_kernel(&theta, wp),
    };
    let v = if negate { v.neg() } else { v };
    v.with_precision(prec)
}

/// cos(r·π) via the phase shift cos(x) = sin(x + π/2).
pub fn cos_pi_rational(r: &BigRational, prec: u32) -> CertifiedReal {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    sin_pi_rational(&(r + half), prec)
}

/// Enclosure of sin(k·π/n) or cos(k·π/n).
///
/// Total for `denominator >= 1` and `precision >= 32`; the radius is far
/// below `2^(4-precision)`.
pub fn trig_constant(kind: TrigKind, numerator: i64, denominator: i64, precision: u32) -> CertifiedReal {
    assert!(denominator >= 1, "trig_constant: denominator must be >= 1");
    assert!(precision >= 32, "trig_constant: precision must be >= 32");
    let r = BigRational::new(BigInt::from(numerator), BigInt::from(denominator));
    match kind {
        TrigKind::Sin => sin_pi_rational(&r, precision),
        TrigKind::Cos => cos_pi_rational(&r, precision),
    }
}

/// Reduces sin(r·π) to ±sin(a·π) or ±cos(a·π) with `a ∈ [0, 1/4]`,
/// exactly, using the period and reflection symmetries.
fn reduce_sin_pi(r: &BigRational) -> (TrigKind, bool, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let one = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));

    let mut x = r - (r / &two).floor() * &two; // x ∈ [0, 2)
    let mut negate = false;
    if x >= one {
        x -= &one;
        negate = true;
    }
    if x > half {
        x = &one - &x;
    }
    if x > quarter {
        (TrigKind::Cos, negate, &half - &x)
    } else {
        (TrigKind::Sin, negate, x)
    }
}

fn rational_times_pi(r: &BigRational, wp: u32) -> CertifiedReal {
    if r.is_zero() {
        return CertifiedReal::zero(wp);
    }
    let factor = CertifiedReal::from_big_ratio(r.numer(), r.denom(), wp);
    pi(wp).mul(&factor)
}

/// Taylor sine on |θ| ≤ 0.9, with the alternating-tail remainder folded
/// into the radius.
fn sin_kernel(theta: &CertifiedReal, wp: u32) -> CertifiedReal {
    debug_assert!(theta.abs_upper().to_f64() <= 0.95);
    if theta.is_exact_zero() {
        return CertifiedReal::zero(wp);
    }
    let tol = Mag::pow2(-(wp as i64) - 8);
    let t2 = theta.sqr();
    let mut term = theta.clone();
    let mut sum = theta.clone();
    let mut j: i64 = 0;
    loop {
        j += 1;
        term = term.mul(&t2).div_i64(2 * j * (2 * j + 1));
        let bound = term.abs_upper();
        if bound.cmp_value(&tol) != std::cmp::Ordering::Greater {
            // |tail| <= first omitted term
            return CertifiedReal::from_parts(
                sum.midpoint().clone(),
                sum.radius().add(&bound),
                wp,
            );
        }
        sum = if j % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
    }
}

/// Taylor cosine on |θ| ≤ 0.9.
fn cos_kernel(theta: &CertifiedReal, wp: u32) -> CertifiedReal {
    debug_assert!(theta.abs_upper().to_f64() <= 0.95);
    if theta.is_exact_zero() {
        return CertifiedReal::one(wp);
    }
    let tol = Mag::pow2(-(wp as i64) - 8);
    let t2 = theta.sqr();
    let mut term = CertifiedReal::one(wp);
    let mut sum = CertifiedReal::one(wp);
    let mut j: i64 = 0;
    loop {
        j += 1;
        term = term.mul(&t2).div_i64((2 * j - 1) * (2 * j));
        let bound = term.abs_upper();
        if bound.cmp_value(&tol) != std::cmp::Ordering::Greater {
            return CertifiedReal::from_parts(
                sum.midpoint().clone(),
                sum.radius().add(&bound),
                wp,
            );
        }
        sum = if j % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
    }
}

/// Enclosure of sin(t) for an arbitrary real ball.
pub fn sin_ball(t: &CertifiedReal) -> CertifiedReal {
    eval_circular(t, 0)
}

/// Enclosure of cos(t) for an arbitrary real ball.
pub fn cos_ball(t: &CertifiedReal) -> CertifiedReal {
    eval_circular(t, 1)
}

/// sin(t + shift·π/2) via quadrant reduction around the midpoint.
fn eval_circular(t: &CertifiedReal, shift: i64) -> CertifiedReal {
    let prec = t.precision();
    let wp = prec + 32;
    let mid_f = t.to_f64();
    if !mid_f.is_finite() || mid_f.abs() > 1e15 {
        return trivial_unit(prec);
    }
    let half_pi = pi(wp).mul_pow2(-1);
    let k = (mid_f / std::f64::consts::FRAC_PI_2).round() as i64;
    let y = t.with_precision(wp).sub(&half_pi.mul_i64(k));
    if y.abs_upper().to_f64() > 0.9 {
        return trivial_unit(prec);
    }
    let v = match (((k + shift) % 4) + 4) % 4 {
        0 => sin_kernel(&y, wp),
        1 => cos_kernel(&y, wp),
        2 => sin_kernel(&y, wp).neg(),
        _ => cos_kernel(&y, wp).neg(),
    };
    v.with_precision(prec)
}

fn trivial_unit(prec: u32) -> CertifiedReal {
    CertifiedReal::from_interval(&Dyadic::from_i64(-1), &Dyadic::from_i64(1), prec)
}

/// Enclosure of atan(x).
pub fn atan_ball(x: &CertifiedReal) -> CertifiedReal {
    let prec = x.precision();
    let wp = prec + 32;
    let mid_f = x.to_f64();
    if !mid_f.is_finite() {
        return atan_trivial(prec);
    }
    if mid_f.abs() > 1.5 {
        // atan(x) = sign(x)·π/2 - atan(1/x); the sign is certified because
        // the midpoint dominates any sane radius here, else fallback.
        let inv = match CertifiedReal::one(wp).div(&x.with_precision(wp)) {
            Ok(v) => v,
            Err(_) => return atan_trivial(prec),
        };
        if inv.abs_upper().to_f64() > 0.95 {
            return atan_trivial(prec);
        }
        let half_pi = pi(wp).mul_pow2(-1);
        let signed = if mid_f < 0.0 { half_pi.neg() } else { half_pi };
        return signed.sub(&atan_small(&inv, wp)).with_precision(prec);
    }
    if x.abs_upper().to_f64() > 2.5 {
        return atan_trivial(prec);
    }
    // Halve the argument twice: atan(x) = 2 atan(x / (1 + sqrt(1 + x^2))).
    let xw = x.with_precision(wp);
    let x1 = halve_atan_arg(&xw, wp);
    let x2 = halve_atan_arg(&x1, wp);
    atan_small(&x2, wp).mul_i64(4).with_precision(prec)
}

fn atan_trivial(prec: u32) -> CertifiedReal {
    let b = pi(prec).mul_pow2(-1).upper();
    CertifiedReal::from_interval(&b.neg(), &b, prec)
}

fn halve_atan_arg(x: &CertifiedReal, wp: u32) -> CertifiedReal {
    let one = CertifiedReal::one(wp);
    let s = one.add(&x.sqr()).sqrt().expect("1 + x^2 >= 1");
    x.div(&one.add(&s)).expect("denominator >= 2")
}

/// Taylor arctangent on |x| ≤ 0.45 or so.
fn atan_small(x: &CertifiedReal, wp: u32) -> CertifiedReal {
    if x.is_exact_zero() {
        return CertifiedReal::zero(wp);
    }
    let tol = Mag::pow2(-(wp as i64) - 8);
    let x2 = x.sqr();
    let mut power = x.clone();
    let mut sum = x.clone();
    let mut j: i64 = 0;
    loop {
        j += 1;
        power = power.mul(&x2);
        let term = power.div_i64(2 * j + 1);
        let bound = term.abs_upper();
        if bound.cmp_value(&tol) != std::cmp::Ordering::Greater {
            return CertifiedReal::from_parts(sum.midpoint().clone(), sum.radius().add(&bound), wp);
        }
        sum = if j % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_value() {
        let p = pi(128);
        let lo = p.lower().to_f64();
        let hi = p.upper().to_f64();
        assert!(lo <= std::f64::consts::PI && std::f64::consts::PI <= hi);
        assert!(p.width().to_f64() < 1e-37);
    }

    #[test]
    fn exact_trig_points() {
        // sin(π/2) = 1 exactly through the reduction
        let s = trig_constant(TrigKind::Sin, 1, 2, 64);
        assert!(s.is_exact());
        assert_eq!(s.to_f64(), 1.0);
        // sin(π) = 0, cos(π) = -1
        assert!(trig_constant(TrigKind::Sin, 1, 1, 64).is_exact_zero());
        let c = trig_constant(TrigKind::Cos, 1, 1, 64);
        assert!(c.is_exact());
        assert_eq!(c.to_f64(), -1.0);
    }

    #[test]
    fn cos_pi_over_three_is_half() {
        let c = trig_constant(TrigKind::Cos, 1, 3, 64);
        assert!(c.contains_dyadic(&Dyadic::from_f64(0.5)));
        assert!(c.width().to_f64() <= 2f64.powi(-60));
    }

    #[test]
    fn large_rational_arguments_reduce() {
        // sin(1000003·π/7) = sin((1000003 mod 14)·π/7 ...) — just check enclosure
        let s = trig_constant(TrigKind::Sin, 1_000_003, 7, 96);
        let expect = ((1_000_003.0_f64 % 14.0) * std::f64::consts::PI / 7.0).sin();
        assert!((s.to_f64() - expect).abs() < 1e-12);
    }

    #[test]
    fn sin_cos_ball_agree_with_f64() {
        for &t in &[0.1, 0.9, 1.6, 2.2, 3.0, 3.1415, 4.7, 6.2, -1.3] {
            let tb = CertifiedReal::from_dyadic(Dyadic::from_f64(t), 96);
            let s = sin_ball(&tb);
            let c = cos_ball(&tb);
            assert!((s.to_f64() - t.sin()).abs() < 1e-14, "sin({t})");
            assert!((c.to_f64() - t.cos()).abs() < 1e-14, "cos({t})");
            // Pythagorean identity within enclosure width
            let one = s.sqr().add(&c.sqr());
            assert!(one.contains_dyadic(&Dyadic::one()));
        }
    }

    #[test]
    fn atan_matches_f64() {
        for &x in &[0.0, 0.3, 1.0, 1.4, 2.0, 10.0, -0.7, -5.0] {
            let xb = CertifiedReal::from_dyadic(Dyadic::from_f64(x), 96);
            let a = atan_ball(&xb);
            assert!((a.to_f64() - x.atan()).abs() < 1e-14, "atan({x})");
            assert!(a.width().to_f64() < 1e-20);
        }
    }

    #[test]
    fn pythagorean_pairs_for_rationals() {
        for (k, n) in [(1i64, 7i64), (3, 11), (5, 12), (2, 9), (7, 13)] {
            let s = trig_constant(TrigKind::Sin, k, n, 128);
            let c = trig_constant(TrigKind::Cos, k, n, 128);
            let sum = s.sqr().add(&c.sqr());
            assert!(sum.contains_dyadic(&Dyadic::one()), "sin^2+cos^2 at {k}π/{n}");
            assert!(sum.width().to_f64() <= 2f64.powi(-(128 - 8)));
        }
    }
}
