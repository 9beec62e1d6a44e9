//! Certified scalar arithmetic: midpoint–radius balls over exact dyadics.
//!
//! Every operation returns an enclosure of the exact result: for any
//! members of the operand intervals, the true result lies inside the
//! result interval. Sign decisions are made only when the enclosure
//! excludes zero; otherwise they are `Undecided` and callers escalate
//! the working precision.

mod complex;
pub mod consts;
mod dyadic;
mod mag;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

pub use complex::CertifiedComplex;
pub use dyadic::Dyadic;
pub use mag::Mag;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 128;
/// Default cap for precision escalation.
pub const DEFAULT_PRECISION_CAP: u32 = 8192;

/// Outcome of a certified sign query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    Undecided,
}

/// A real number known to lie in `[mid - rad, mid + rad]`.
#[derive(Clone)]
pub struct CertifiedReal {
    mid: Dyadic,
    rad: Mag,
    prec: u32,
}

impl CertifiedReal {
    pub fn zero(prec: u32) -> Self {
        CertifiedReal { mid: Dyadic::zero(), rad: Mag::ZERO, prec }
    }

    pub fn one(prec: u32) -> Self {
        CertifiedReal { mid: Dyadic::one(), rad: Mag::ZERO, prec }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        CertifiedReal { mid: Dyadic::from_i64(v), rad: Mag::ZERO, prec }
    }

    /// Exact dyadic value (radius zero).
    pub fn from_dyadic(mid: Dyadic, prec: u32) -> Self {
        CertifiedReal { mid, rad: Mag::ZERO, prec }
    }

    pub fn from_parts(mid: Dyadic, rad: Mag, prec: u32) -> Self {
        CertifiedReal { mid, rad, prec }
    }

    /// Enclosure of `num / den`; exact when `den` is a power of two.
    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        Self::from_big_ratio(&BigInt::from(num), &BigInt::from(den), prec)
    }

    pub fn from_big_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(!num_traits::Zero::is_zero(den), "ratio with zero denominator");
        let n = Dyadic::new(num.clone(), 0);
        let d = Dyadic::new(den.clone(), 0);
        let (q, err) = n.div(&d, prec + 2);
        CertifiedReal { mid: q, rad: err_mag(err), prec }
    }

    /// Ball from exact interval endpoints `[lo, hi]`.
    pub fn from_interval(lo: &Dyadic, hi: &Dyadic, prec: u32) -> Self {
        debug_assert!(lo.cmp_value(hi) != Ordering::Greater);
        let two = Dyadic::from_i64(2);
        let (mid, merr) = lo.add(hi).div(&two, prec + 2);
        let half_width = hi.sub(lo).mul_pow2(-1);
        let rad = Mag::from_dyadic_upper(&half_width).add(&err_mag(merr));
        CertifiedReal { mid, rad, prec }
    }

    /// Ball enclosing `[0, hi]` whose lower endpoint is exactly zero:
    /// midpoint and radius are the same dyadic bound.
    pub fn from_nonneg_upper(hi: &Dyadic, prec: u32) -> Self {
        debug_assert!(!hi.is_negative());
        if hi.is_zero() {
            return CertifiedReal::zero(prec);
        }
        let r = Mag::from_dyadic_upper(&hi.mul_pow2(-1));
        CertifiedReal { mid: r.to_dyadic(), rad: r, prec }
    }

    pub fn midpoint(&self) -> &Dyadic {
        &self.mid
    }

    pub fn radius(&self) -> Mag {
        self.rad
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        let (mid, err) = self.mid.round_to(prec + 2);
        CertifiedReal { mid, rad: self.rad.add(&err_mag(err)), prec }
    }

    /// Exact lower endpoint `mid - rad`.
    pub fn lower(&self) -> Dyadic {
        self.mid.sub(&self.rad.to_dyadic())
    }

    /// Exact upper endpoint `mid + rad`.
    pub fn upper(&self) -> Dyadic {
        self.mid.add(&self.rad.to_dyadic())
    }

    /// Upper bound of `|value|` over the enclosure.
    pub fn abs_upper(&self) -> Mag {
        Mag::from_dyadic_upper(&self.mid).add(&self.rad)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.rad.is_zero() && self.mid.is_zero()
    }

    pub fn contains_zero(&self) -> bool {
        self.sign() == Sign::Zero || self.sign() == Sign::Undecided
    }

    pub fn contains_dyadic(&self, v: &Dyadic) -> bool {
        let d = self.mid.sub(v).abs();
        d.cmp_value(&self.rad.to_dyadic()) != Ordering::Greater
    }

    /// Certified sign of the enclosed value.
    ///
    /// `Zero` is returned only for the exact zero (radius 0); an enclosure
    /// that merely straddles zero is `Undecided`.
    pub fn sign(&self) -> Sign {
        if self.rad.is_zero() {
            return match () {
                _ if self.mid.is_zero() => Sign::Zero,
                _ if self.mid.is_negative() => Sign::Negative,
                _ => Sign::Positive,
            };
        }
        if self.mid.is_zero() {
            return Sign::Undecided;
        }
        let r = self.rad.to_dyadic();
        if self.mid.abs().cmp_value(&r) == Ordering::Greater {
            if self.mid.is_negative() {
                Sign::Negative
            } else {
                Sign::Positive
            }
        } else {
            Sign::Undecided
        }
    }

    pub fn neg(&self) -> Self {
        CertifiedReal { mid: self.mid.neg(), rad: self.rad, prec: self.prec }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        let (mid, err) = self.mid.add(&other.mid).round_to(prec + 2);
        let rad = self.rad.add(&other.rad).add(&err_mag(err));
        CertifiedReal { mid, rad, prec }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        let (mid, err) = self.mid.mul(&other.mid).round_to(prec + 2);
        let cross = Mag::from_dyadic_upper(&self.mid)
            .mul(&other.rad)
            .add(&Mag::from_dyadic_upper(&other.mid).mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        CertifiedReal { mid, rad: cross.add(&err_mag(err)), prec }
    }

    /// Tight square via interval endpoints; the lower endpoint is clamped
    /// at zero, so the result is certified nonnegative.
    pub fn sqr(&self) -> Self {
        let lo = self.lower();
        let hi = self.upper();
        if lo.is_negative() && !hi.is_negative() {
            // straddles zero: [0, max(lo^2, hi^2)] with an exactly-zero
            // lower endpoint
            let l2 = lo.mul(&lo);
            let h2 = hi.mul(&hi);
            let m = if l2.cmp_value(&h2) == Ordering::Greater { l2 } else { h2 };
            return CertifiedReal::from_nonneg_upper(&m, self.prec);
        }
        let l2 = lo.mul(&lo);
        let h2 = hi.mul(&hi);
        let (a, b) = if l2.cmp_value(&h2) == Ordering::Greater { (h2, l2) } else { (l2, h2) };
        let ball = CertifiedReal::from_interval(&a, &b, self.prec);
        if ball.lower().is_negative() {
            // midpoint-radius slack crossed zero: widen to [0, b] instead
            CertifiedReal::from_nonneg_upper(&b, self.prec)
        } else {
            ball
        }
    }

    /// Enclosure of division by a nonzero machine integer.
    pub fn div_i64(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero integer");
        self.div(&CertifiedReal::from_i64(k, self.prec)).expect("nonzero integer divisor")
    }

    /// Exact scaling by a small integer.
    pub fn mul_i64(&self, k: i64) -> Self {
        let kb = BigInt::from(k);
        let (mid, err) = self.mid.mul_bigint(&kb).round_to(self.prec + 2);
        let rad = self.rad.mul(&Mag::from_u64_upper(k.unsigned_abs())).add(&err_mag(err));
        CertifiedReal { mid, rad, prec: self.prec }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        CertifiedReal { mid: self.mid.mul_pow2(k), rad: self.rad.mul_pow2(k), prec: self.prec }
    }

    /// Enclosure of `self / other`.
    ///
    /// Fails when the divisor's enclosure does not exclude zero.
    pub fn div(&self, other: &Self) -> Result<Self, crate::Error> {
        let prec = self.prec.max(other.prec);
        let den_lo = other.mid.abs().sub(&other.rad.to_dyadic());
        if !den_lo.is_positive() {
            return Err(crate::Error::DivisionByZeroEnclosure);
        }
        let (q, err) = self.mid.div(&other.mid, prec + 2);
        let qer = err_mag(err);
        // |x/y - q| <= (ra + |a/b| rb)/L + ulp, |a/b| <= |q| + ulp
        let ab = Mag::from_dyadic_upper(&q).add(&qer);
        let rad = self.rad.add(&ab.mul(&other.rad)).div_lower(&den_lo).add(&qer);
        Ok(CertifiedReal { mid: q, rad, prec })
    }

    pub fn recip(&self) -> Result<Self, crate::Error> {
        CertifiedReal::one(self.prec).div(self)
    }

    /// Enclosure of the square root.
    ///
    /// Fails when the enclosure contains negative values.
    pub fn sqrt(&self) -> Result<Self, crate::Error> {
        let lo = self.lower();
        if lo.is_negative() {
            return Err(crate::Error::SqrtOfNegativeEnclosure);
        }
        let hi = self.upper();
        let (slo, _) = lo.sqrt_floor(self.prec + 2);
        let (shi, e) = hi.sqrt_floor(self.prec + 2);
        let shi = shi.add(&Dyadic::new(BigInt::from(1), e));
        Ok(CertifiedReal::from_interval(&slo, &shi, self.prec))
    }

    /// Intersects the enclosure with `[0, ∞)`.
    ///
    /// Sound only when the enclosed value is known nonnegative for
    /// structural reasons (sums of squares, moduli).
    pub fn clamp_nonneg(&self) -> Self {
        let lo = self.lower();
        if !lo.is_negative() {
            return self.clone();
        }
        let hi = self.upper();
        if hi.is_negative() {
            // Empty after intersection; keep a zero point enclosure.
            return CertifiedReal::zero(self.prec);
        }
        CertifiedReal::from_nonneg_upper(&hi, self.prec)
    }

    /// Enclosure of `|value|`.
    pub fn abs_enclosure(&self) -> Self {
        match self.sign() {
            Sign::Negative => self.neg(),
            Sign::Positive | Sign::Zero => self.clone(),
            Sign::Undecided => {
                let lo = self.lower().abs();
                let hi = self.upper().abs();
                let m = if lo.cmp_value(&hi) == Ordering::Greater { lo } else { hi };
                CertifiedReal::from_nonneg_upper(&m, self.prec)
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CertifiedReal::one(self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// True iff the two enclosures intersect.
    pub fn overlaps(&self, other: &Self) -> bool {
        let d = self.mid.sub(&other.mid).abs();
        let r = self.rad.add(&other.rad).to_dyadic();
        d.cmp_value(&r) != Ordering::Greater
    }

    /// Certified strict comparison: true iff every member of `self` is
    /// less than every member of `other`.
    pub fn certified_lt(&self, other: &Self) -> bool {
        other.sub(self).sign() == Sign::Positive
    }

    /// Total width `2 * rad` as an exact dyadic.
    pub fn width(&self) -> Dyadic {
        self.rad.to_dyadic().mul_pow2(1)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// Midpoint rendered with `sig` significant decimal digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        self.mid.to_decimal(sig)
    }

    /// Radius rendered with 3 significant decimal digits.
    pub fn radius_decimal(&self) -> String {
        self.rad.to_dyadic().to_decimal(3)
    }
}

fn err_mag(err: Option<i64>) -> Mag {
    match err {
        Some(e) => Mag::pow2(e),
        None => Mag::ZERO,
    }
}

/// Certified sign with precision escalation.
///
/// Recomputes the value through `refine` at doubled precision until the
/// sign is decided or `max_precision` is reached. Returns the sign and
/// the precision at which the decision was made.
pub fn certified_sign_with<F>(x: &CertifiedReal, max_precision: u32, mut refine: F) -> (Sign, u32)
where
    F: FnMut(u32) -> CertifiedReal,
{
    let mut current = x.clone();
    let mut prec = x.precision().max(1);
    loop {
        let s = current.sign();
        if s != Sign::Undecided {
            return (s, prec);
        }
        if prec >= max_precision {
            return (Sign::Undecided, prec);
        }
        prec = (prec * 2).min(max_precision);
        current = refine(prec);
    }
}

impl Serialize for CertifiedReal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("CertifiedReal", 2)?;
        s.serialize_field("mid", &self.to_decimal(17))?;
        s.serialize_field("radius", &self.radius_decimal())?;
        s.end()
    }
}

impl fmt::Debug for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:.2e}", self.to_decimal(20), self.rad.to_f64())
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(17))
    }
}
