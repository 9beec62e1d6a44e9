//! Exact dyadic rationals `mantissa * 2^exponent` backed by `BigInt`.
//!
//! Addition, subtraction and multiplication are exact; rounding happens
//! only when a value is explicitly truncated to a working precision, and
//! the truncation error is reported to the caller.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact dyadic rational.
///
/// The value is `man * 2^exp`. Zero is canonically `(0, 0)`; nonzero
/// mantissas have their trailing zero bits folded into the exponent.
#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { man: BigInt::from(1), exp: 0 }
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    /// Builds `man * 2^exp`, normalizing trailing zero bits.
    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            return Dyadic::zero();
        }
        let tz = man.trailing_zeros().unwrap_or(0) as i64;
        if tz > 0 {
            Dyadic { man: man >> tz, exp: exp + tz }
        } else {
            Dyadic { man, exp }
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    /// Number of significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.man.magnitude().bits()
    }

    /// Position of the most significant bit: value is in `[2^(b-1), 2^b)`
    /// for `b = msb_exponent()`. Panics on zero.
    pub fn msb_exponent(&self) -> i64 {
        debug_assert!(!self.is_zero());
        self.bits() as i64 + self.exp
    }

    pub fn neg(&self) -> Self {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    pub fn add(&self, other: &Dyadic) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let exp = self.exp.min(other.exp);
        let a = &self.man << (self.exp - exp) as u64;
        let b = &other.man << (other.exp - exp) as u64;
        Dyadic::new(a + b, exp)
    }

    pub fn sub(&self, other: &Dyadic) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Self {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.man * &other.man, self.exp + other.exp)
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        if self.is_zero() || k.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.man * k, self.exp)
    }

    pub fn cmp_value(&self, other: &Dyadic) -> Ordering {
        let ls = sign_i8(&self.man);
        let rs = sign_i8(&other.man);
        if ls != rs {
            return ls.cmp(&rs);
        }
        if ls == 0 {
            return Ordering::Equal;
        }
        // Same nonzero sign: fast path on magnitude exponents, exact fallback.
        let lm = self.msb_exponent();
        let rm = other.msb_exponent();
        if lm != rm {
            let mag = lm.cmp(&rm);
            return if ls > 0 { mag } else { mag.reverse() };
        }
        let exp = self.exp.min(other.exp);
        let a = &self.man << (self.exp - exp) as u64;
        let b = &other.man << (other.exp - exp) as u64;
        a.cmp(&b)
    }

    /// Truncates the mantissa to at most `prec` bits (toward zero).
    ///
    /// Returns the rounded value and, when rounding occurred, the exponent
    /// `e` such that the discarded error is `< 2^e` in magnitude.
    pub fn round_to(&self, prec: u32) -> (Dyadic, Option<i64>) {
        let bits = self.bits();
        if bits <= prec as u64 {
            return (self.clone(), None);
        }
        let shift = bits - prec as u64;
        let man = trunc_shr(&self.man, shift);
        let exp = self.exp + shift as i64;
        (Dyadic::new(man, exp), Some(exp))
    }

    /// Truncated quotient `self / den` with `prec` significant bits.
    ///
    /// Returns `(q, e)` with `|self/den - q| < 2^e`; exact quotients report
    /// no error. Panics if `den` is zero.
    pub fn div(&self, den: &Dyadic, prec: u32) -> (Dyadic, Option<i64>) {
        assert!(!den.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return (Dyadic::zero(), None);
        }
        let shift = prec as u64 + 2 + den.bits();
        let num = &self.man << shift;
        let (q, r) = num.div_rem(&den.man);
        let exp = self.exp - den.exp - shift as i64;
        let q = Dyadic::new(q, exp);
        if r.is_zero() {
            (q, None)
        } else {
            (q, Some(exp))
        }
    }

    /// Floor square root to roughly `prec` significant bits.
    ///
    /// Returns `(s, e)` with `s <= sqrt(self) < s + 2^e`. Panics on
    /// negative input.
    pub fn sqrt_floor(&self, prec: u32) -> (Dyadic, i64) {
        assert!(!self.is_negative(), "dyadic sqrt of a negative value");
        if self.is_zero() {
            return (Dyadic::zero(), i64::MIN / 2);
        }
        // Scale so the shifted mantissa has ~2*prec bits and even exponent.
        let bits = self.bits() as i64;
        let mut extra = (2 * prec as i64 - bits).max(0);
        if (self.exp - extra) % 2 != 0 {
            extra += 1;
        }
        let scaled = &self.man << extra as u64;
        let root = scaled.sqrt();
        let half_exp = (self.exp - extra) / 2;
        (Dyadic::new(root, half_exp), half_exp)
    }

    /// Nearest-ish `f64` approximation; saturates on exponent overflow.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (man, exp) = if bits > 53 {
            let shift = bits - 53;
            (trunc_shr(&self.man, shift), self.exp + shift as i64)
        } else {
            (self.man.clone(), self.exp)
        };
        let m = man.to_f64().unwrap_or(f64::NAN);
        if exp > i32::MAX as i64 {
            return if m >= 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if exp < i32::MIN as i64 {
            return 0.0;
        }
        m * 2f64.powi(exp as i32)
    }

    /// Exact conversion from a finite `f64`.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "dyadic from non-finite f64");
        if v == 0.0 {
            return Dyadic::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (man, exp) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Dyadic::new(BigInt::from(sign) * BigInt::from(man), exp)
    }

    /// Decimal string with exactly `sig` significant digits, normalized
    /// scientific notation `d.dd...e±E`. Deterministic.
    pub fn to_decimal(&self, sig: usize) -> String {
        debug_assert!(sig >= 1);
        if self.is_zero() {
            let frac = "0".repeat(sig.saturating_sub(1));
            return if frac.is_empty() { "0e0".into() } else { format!("0.{frac}e0") };
        }
        // First estimate of the decimal exponent from the binary magnitude.
        let mut dec_exp = ((self.msb_exponent() as f64 - 0.5) * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            // digits = round(|v| * 10^(sig-1-dec_exp)), computed exactly.
            let k = sig as i64 - 1 - dec_exp;
            let digits = scale_decimal_round(BigInt::from(self.man.magnitude().clone()), self.exp, k);
            let s = digits.to_string();
            let got = s.len() as i64;
            if got == sig as i64 {
                let (head, tail) = s.split_at(1);
                let sign = if self.is_negative() { "-" } else { "" };
                return if tail.is_empty() {
                    format!("{sign}{head}e{dec_exp}")
                } else {
                    format!("{sign}{head}.{tail}e{dec_exp}")
                };
            }
            dec_exp += got - sig as i64;
        }
    }
}

/// `|man| * 2^exp * 10^k` rounded to the nearest integer (ties away).
fn scale_decimal_round(man: BigInt, exp: i64, k: i64) -> BigInt {
    let mut num = man;
    let mut den = BigInt::from(1);
    if k >= 0 {
        num *= BigInt::from(10).pow(k as u32);
    } else {
        den *= BigInt::from(10).pow((-k) as u32);
    }
    if exp >= 0 {
        num <<= exp as u64;
    } else {
        den <<= (-exp) as u64;
    }
    let (q, r) = num.div_rem(&den);
    if &r * 2 >= den {
        q + 1
    } else {
        q
    }
}

/// Shift right truncating toward zero (BigInt's `>>` floors).
fn trunc_shr(v: &BigInt, shift: u64) -> BigInt {
    match v.sign() {
        BigSign::Minus => -((-v) >> shift),
        _ => v >> shift,
    }
}

fn sign_i8(v: &BigInt) -> i8 {
    match v.sign() {
        BigSign::Minus => -1,
        BigSign::NoSign => 0,
        BigSign::Plus => 1,
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} * 2^{} ≈ {})", self.man, self.exp, self.to_f64())
    }
}
