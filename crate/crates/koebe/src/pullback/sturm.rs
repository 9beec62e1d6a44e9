//! Sturm-sequence root counting over certified coefficients.
//!
//! Two internal routes share one contract:
//! - polynomials whose coefficients are all exact (radius zero) are
//!   counted with an exact rational chain, including squarefree
//!   reduction by gcd;
//! - everything else runs a ball-arithmetic chain where every required
//!   sign determination must be certified, and any undecidable sign
//!   yields `None` so the caller can recompute at higher precision.
//!
//! Chain elements are rescaled by powers of two (exact) to keep mantissa
//! magnitudes bounded; positive rescaling preserves the Sturm property.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{CertifiedReal, Dyadic, Sign};
use crate::poly::RealPolynomial;

/// Interval for root counting.
#[derive(Clone, Debug)]
pub enum SturmInterval {
    /// The open positive axis (0, ∞).
    PositiveAxis,
    /// An open interval (a, b) with exact dyadic endpoints.
    Open(Dyadic, Dyadic),
}

/// Number of distinct real roots of `p` in the interval, or `None` when
/// a required sign determination is not certified at the polynomial's
/// working precision.
pub fn sturm_count(p: &RealPolynomial, interval: &SturmInterval) -> Option<usize> {
    if p.is_zero() {
        return None;
    }
    if p.degree() == 0 {
        return match p.leading().map(|c| c.sign()) {
            Some(Sign::Positive) | Some(Sign::Negative) => Some(0),
            _ => None,
        };
    }
    // Even polynomials on the positive axis: count in y = x² instead,
    // which halves the chain degree. The map y = x² is a bijection of
    // (0, ∞), so the count is unchanged.
    if matches!(interval, SturmInterval::PositiveAxis) && p.degree() >= 4 && is_even_poly(p) {
        let even: Vec<CertifiedReal> = p.coeffs().iter().step_by(2).cloned().collect();
        return sturm_count(&RealPolynomial::new(even), interval);
    }
    if p.all_exact() {
        exact::count(p, interval)
    } else {
        ball::count(p, interval)
    }
}

fn is_even_poly(p: &RealPolynomial) -> bool {
    p.coeffs().iter().skip(1).step_by(2).all(|c| c.is_exact_zero())
}

fn variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

mod exact {
    use super::*;

    type QPoly = Vec<BigRational>;

    fn normalize(mut p: QPoly) -> QPoly {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    fn to_rational(p: &RealPolynomial) -> QPoly {
        normalize(
            p.coeffs()
                .iter()
                .map(|c| {
                    let d = c.midpoint();
                    let num = d.mantissa().clone();
                    let e = d.exponent();
                    if e >= 0 {
                        BigRational::from_integer(num << e as u64)
                    } else {
                        BigRational::new(num, BigInt::one() << (-e) as u64)
                    }
                })
                .collect(),
        )
    }

    fn derivative(p: &QPoly) -> QPoly {
        normalize(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn rem(a: &QPoly, b: &QPoly) -> QPoly {
        let mut r = a.clone();
        let db = b.len() - 1;
        let lead = &b[db];
        while r.len() >= b.len() {
            let dr = r.len() - 1;
            let q = &r[dr] / lead;
            for i in 0..db {
                let t = &q * &b[i];
                r[dr - db + i] -= t;
            }
            r.pop();
            r = normalize(r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_empty() && y.len() > 1 {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        if y.is_empty() {
            x
        } else {
            y // nonzero constant: gcd is 1
        }
    }

    fn div_exact(a: &QPoly, b: &QPoly) -> QPoly {
        let mut r = a.clone();
        let db = b.len() - 1;
        let lead = &b[db];
        let mut q = vec![BigRational::zero(); a.len() - db];
        while r.len() >= b.len() {
            let dr = r.len() - 1;
            let c = &r[dr] / lead;
            q[dr - db] = c.clone();
            for i in 0..=db {
                let t = &c * &b[i];
                r[dr - db + i] -= t;
            }
            r = normalize(r);
        }
        debug_assert!(r.is_empty(), "non-exact polynomial division");
        normalize(q)
    }

    fn sign_at(p: &QPoly, x: &BigRational) -> i8 {
        let mut acc = BigRational::zero();
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        rational_sign(&acc)
    }

    fn rational_sign(v: &BigRational) -> i8 {
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Sign of p(x) as x → 0⁺: the lowest-order nonzero coefficient.
    fn sign_at_zero_plus(p: &QPoly) -> i8 {
        p.iter().find(|c| !c.is_zero()).map(rational_sign).unwrap_or(0)
    }

    fn sign_at_infinity(p: &QPoly) -> i8 {
        p.last().map(rational_sign).unwrap_or(0)
    }

    pub(super) fn count(p: &RealPolynomial, interval: &SturmInterval) -> Option<usize> {
        let p0 = to_rational(p);
        if p0.len() <= 1 {
            return Some(0);
        }
        // squarefree reduction: distinct roots only
        let d = derivative(&p0);
        let g = gcd(&p0, &d);
        let p0 = if g.len() > 1 { div_exact(&p0, &g) } else { p0 };
        let d = derivative(&p0);

        let mut chain = vec![p0.clone(), d];
        loop {
            let last = chain.last().unwrap();
            if last.len() <= 1 {
                break;
            }
            let r = rem(&chain[chain.len() - 2], last);
            if r.is_empty() {
                break;
            }
            chain.push(r.iter().map(|c| -c).collect());
        }

        match interval {
            SturmInterval::PositiveAxis => {
                let va = variations(&chain.iter().map(|q| sign_at_zero_plus(q)).collect::<Vec<_>>());
                let vb = variations(&chain.iter().map(|q| sign_at_infinity(q)).collect::<Vec<_>>());
                va.checked_sub(vb)
            }
            SturmInterval::Open(a, b) => {
                let ar = dyadic_to_rational(a);
                let br = dyadic_to_rational(b);
                let va = variations(&chain.iter().map(|q| sign_at(q, &ar)).collect::<Vec<_>>());
                let vb = variations(&chain.iter().map(|q| sign_at(q, &br)).collect::<Vec<_>>());
                let closed = va.checked_sub(vb)?;
                // V(a) - V(b) counts roots in (a, b]; drop b if it is one.
                let b_is_root = sign_at(&p0, &br) == 0;
                closed.checked_sub(usize::from(b_is_root))
            }
        }
    }

    fn dyadic_to_rational(d: &Dyadic) -> BigRational {
        let e = d.exponent();
        if e >= 0 {
            BigRational::from_integer(d.mantissa().clone() << e as u64)
        } else {
            BigRational::new(d.mantissa().clone(), BigInt::one() << (-e) as u64)
        }
    }
}

mod ball {
    use super::*;

    /// Rescale by the power of two that brings the leading midpoint into
    /// [1, 2); exact, sign-preserving.
    fn rescale(p: RealPolynomial) -> RealPolynomial {
        match p.leading() {
            Some(lead) if !lead.midpoint().is_zero() => {
                let e = lead.midpoint().msb_exponent();
                p.scale_pow2(-e)
            }
            _ => p,
        }
    }

    /// Ball remainder of a by b. The leading coefficient of b must be
    /// certified nonzero (caller's responsibility). Structurally
    /// cancelled top coefficients are dropped, not zero-tested.
    fn rem(a: &RealPolynomial, b: &RealPolynomial) -> Option<RealPolynomial> {
        let db = b.degree();
        let lead = b.leading()?;
        let mut r: Vec<CertifiedReal> = a.coeffs().to_vec();
        while r.len() > db {
            let top = r.last().unwrap().clone();
            if top.is_exact_zero() {
                r.pop();
                continue;
            }
            let dr = r.len() - 1;
            if dr < db {
                break;
            }
            let q = top.div(lead).ok()?;
            for i in 0..db {
                let t = q.mul(&b.coeff(i));
                r[dr - db + i] = r[dr - db + i].sub(&t);
            }
            r.pop(); // the top index cancels exactly for the true values
        }
        Some(RealPolynomial::new(r))
    }

    fn certified_sign_i8(s: Sign) -> Option<i8> {
        match s {
            Sign::Negative => Some(-1),
            Sign::Positive => Some(1),
            Sign::Zero => Some(0),
            Sign::Undecided => None,
        }
    }

    /// Sign as x → 0⁺: the lowest-order coefficient whose sign is
    /// certified; exact zeros are skipped, undecidable balls abort.
    fn sign_at_zero_plus(p: &RealPolynomial) -> Option<i8> {
        for c in p.coeffs() {
            match c.sign() {
                Sign::Zero => continue,
                Sign::Positive => return Some(1),
                Sign::Negative => return Some(-1),
                Sign::Undecided => return None,
            }
        }
        Some(0)
    }

    fn sign_at_infinity(p: &RealPolynomial) -> Option<i8> {
        certified_sign_i8(p.leading().map(|c| c.sign()).unwrap_or(Sign::Zero))
    }

    fn sign_at(p: &RealPolynomial, x: &Dyadic) -> Option<i8> {
        certified_sign_i8(p.eval_dyadic(x).sign())
    }

    pub(super) fn count(p: &RealPolynomial, interval: &SturmInterval) -> Option<usize> {
        // the chain needs a certified-nonzero leading coefficient
        match p.leading()?.sign() {
            Sign::Positive | Sign::Negative => {}
            _ => return None,
        }
        let mut chain = vec![rescale(p.clone()), rescale(p.derivative())];
        loop {
            let last = chain.last().unwrap();
            if last.degree() == 0 || last.is_zero() {
                break;
            }
            match last.leading()?.sign() {
                Sign::Positive | Sign::Negative => {}
                _ => return None, // possibly a structural degree drop; escalate
            }
            let r = rem(&chain[chain.len() - 2], last)?;
            if r.is_zero() {
                // exact zero remainder: p was not squarefree after all;
                // divide by the gcd (the last chain element) and recount.
                let g = chain.last().unwrap().clone();
                let q = div_enclosure(p, &g)?;
                return super::sturm_count(&q, interval);
            }
            chain.push(rescale(r.neg()));
        }

        let signs_at = |f: &dyn Fn(&RealPolynomial) -> Option<i8>| -> Option<Vec<i8>> {
            chain.iter().map(|q| f(q)).collect()
        };

        match interval {
            SturmInterval::PositiveAxis => {
                let va = variations(&signs_at(&sign_at_zero_plus)?);
                let vb = variations(&signs_at(&sign_at_infinity)?);
                va.checked_sub(vb)
            }
            SturmInterval::Open(a, b) => {
                let va = variations(&signs_at(&|q| sign_at(q, a))?);
                let vb = variations(&signs_at(&|q| sign_at(q, b))?);
                let closed = va.checked_sub(vb)?;
                let b_root = match p.eval_dyadic(b).sign() {
                    Sign::Zero => true,
                    Sign::Positive | Sign::Negative => false,
                    Sign::Undecided => return None,
                };
                closed.checked_sub(usize::from(b_root))
            }
        }
    }

    /// Quotient enclosure of an exact division (remainder structurally
    /// zero); used only on the non-squarefree path.
    fn div_enclosure(a: &RealPolynomial, b: &RealPolynomial) -> Option<RealPolynomial> {
        let db = b.degree();
        let lead = b.leading()?;
        let mut r: Vec<CertifiedReal> = a.coeffs().to_vec();
        let mut q = vec![CertifiedReal::zero(a.precision()); a.coeffs().len().saturating_sub(db)];
        while r.len() > db {
            let top = r.last().unwrap().clone();
            if top.is_exact_zero() {
                r.pop();
                continue;
            }
            let dr = r.len() - 1;
            let c = top.div(lead).ok()?;
            q[dr - db] = c.clone();
            for i in 0..db {
                let t = c.mul(&b.coeff(i));
                r[dr - db + i] = r[dr - db + i].sub(&t);
            }
            r.pop();
        }
        Some(RealPolynomial::new(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> RealPolynomial {
        RealPolynomial::from_i64_coeffs(cs, 128)
    }

    #[test]
    fn simple_counts_on_positive_axis() {
        // x² + 1: no real roots
        assert_eq!(sturm_count(&poly(&[1, 0, 1]), &SturmInterval::PositiveAxis), Some(0));
        // x² - 1: one positive root
        assert_eq!(sturm_count(&poly(&[-1, 0, 1]), &SturmInterval::PositiveAxis), Some(1));
        // (x-1)(x-2)(x+3) = x³ - 7x + 6: two positive roots
        assert_eq!(sturm_count(&poly(&[6, -7, 0, 1]), &SturmInterval::PositiveAxis), Some(2));
    }

    #[test]
    fn open_interval_counts() {
        let p = poly(&[-1, 0, 1]); // roots ±1
        let i = SturmInterval::Open(Dyadic::from_i64(-2), Dyadic::from_i64(2));
        assert_eq!(sturm_count(&p, &i), Some(2));
        let i2 = SturmInterval::Open(Dyadic::from_i64(0), Dyadic::from_i64(1));
        // root exactly at the right endpoint: open interval excludes it
        assert_eq!(sturm_count(&p, &i2), Some(0));
        let i3 = SturmInterval::Open(Dyadic::from_i64(0), Dyadic::from_f64(1.5));
        assert_eq!(sturm_count(&p, &i3), Some(1));
    }

    #[test]
    fn non_squarefree_input() {
        // (x-1)² (x+2) = x³ - 3x + 2: distinct roots {1, -2}, one positive
        let p = poly(&[2, -3, 0, 1]);
        assert_eq!(sturm_count(&p, &SturmInterval::PositiveAxis), Some(1));
        // x²: only the root 0, none on the open axis
        assert_eq!(sturm_count(&poly(&[0, 0, 1]), &SturmInterval::PositiveAxis), Some(0));
    }

    #[test]
    fn even_polynomial_reduction() {
        // x⁴ - 5x² + 4 = (x²-1)(x²-4): roots ±1, ±2 → two positive
        let p = poly(&[4, 0, -5, 0, 1]);
        assert_eq!(sturm_count(&p, &SturmInterval::PositiveAxis), Some(2));
    }

    #[test]
    fn inexact_coefficients_use_the_ball_chain() {
        // √2-perturbed polynomial: (x² - √2) has one positive root
        let sqrt2 = CertifiedReal::from_i64(2, 128).sqrt().unwrap();
        let p = RealPolynomial::new(vec![
            sqrt2.neg(),
            CertifiedReal::zero(128),
            CertifiedReal::one(128),
        ]);
        assert!(!p.all_exact());
        assert_eq!(sturm_count(&p, &SturmInterval::PositiveAxis), Some(1));
    }

    #[test]
    fn high_multiplicity_exact_cases() {
        // x⁴ with nothing on the open axis
        assert_eq!(sturm_count(&poly(&[0, 0, 0, 0, 1]), &SturmInterval::PositiveAxis), Some(0));
        // (x-2)³: one distinct positive root
        assert_eq!(
            sturm_count(&poly(&[-8, 12, -6, 1]), &SturmInterval::PositiveAxis),
            Some(1)
        );
    }
}
