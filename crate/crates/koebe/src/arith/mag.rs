//! Nonnegative magnitude bounds with a 32-bit mantissa, rounding up.
//!
//! `Mag` is the radius type of the ball arithmetic: every operation
//! returns an upper bound of the exact result, so radii can only
//! overestimate. Modeled after the low-precision error bounds used by
//! ball-arithmetic libraries.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::dyadic::Dyadic;

const MAN_BITS: u32 = 32;

/// Upper bound `man * 2^exp` with `man < 2^32`; `man == 0` means zero.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Mag {
    man: u64,
    exp: i64,
}

impl Mag {
    pub const ZERO: Mag = Mag { man: 0, exp: 0 };

    pub fn is_zero(&self) -> bool {
        self.man == 0
    }

    /// `2^exp`.
    pub fn pow2(exp: i64) -> Mag {
        Mag { man: 1, exp }
    }

    fn normalize(man: u64, exp: i64) -> Mag {
        if man == 0 {
            return Mag::ZERO;
        }
        let bits = 64 - man.leading_zeros();
        if bits < MAN_BITS {
            // fill the mantissa so later alignments stay tight
            let shift = MAN_BITS - bits;
            return Mag { man: man << shift, exp: exp - shift as i64 };
        }
        if bits == MAN_BITS {
            return Mag { man, exp };
        }
        let shift = bits - MAN_BITS;
        let lost = man & ((1u64 << shift) - 1) != 0;
        let mut m = man >> shift;
        if lost {
            m += 1;
        }
        if m == 1u64 << MAN_BITS {
            m >>= 1;
            return Mag { man: m, exp: exp + shift as i64 + 1 };
        }
        Mag { man: m, exp: exp + shift as i64 }
    }

    pub fn from_u64_upper(v: u64) -> Mag {
        Mag::normalize(v, 0)
    }

    /// Upper bound of `|d|`.
    pub fn from_dyadic_upper(d: &Dyadic) -> Mag {
        if d.is_zero() {
            return Mag::ZERO;
        }
        let bits = d.bits();
        if bits <= MAN_BITS as u64 {
            let m = d.mantissa().magnitude().to_u64().expect("fits by bit count");
            return Mag::normalize(m, d.exponent());
        }
        let shift = bits - MAN_BITS as u64;
        let top: BigInt = d.mantissa().abs() >> shift;
        // Truncation dropped low bits: +1 keeps this an upper bound.
        let m = top.to_u64().expect("fits by bit count") + 1;
        Mag::normalize(m, d.exponent() + shift as i64)
    }

    /// Exact dyadic value of the bound.
    pub fn to_dyadic(&self) -> Dyadic {
        Dyadic::new(BigInt::from(self.man), self.exp)
    }

    pub fn add(&self, other: &Mag) -> Mag {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.exp >= other.exp { (self, other) } else { (other, self) };
        let d = (hi.exp - lo.exp) as u64;
        if d >= 63 {
            // The small term is below one ulp of the large one.
            return Mag::normalize(hi.man + 1, hi.exp);
        }
        let shifted = (lo.man >> d) + u64::from(lo.man & ((1u64 << d) - 1) != 0);
        Mag::normalize(hi.man + shifted, hi.exp)
    }

    pub fn mul(&self, other: &Mag) -> Mag {
        if self.is_zero() || other.is_zero() {
            return Mag::ZERO;
        }
        // Both mantissas <= 2^32, product fits in u64 up to 2^64 - edge;
        // go through u128 to be safe.
        let p = self.man as u128 * other.man as u128;
        let exp = self.exp + other.exp;
        if p <= u64::MAX as u128 {
            Mag::normalize(p as u64, exp)
        } else {
            let lost = p & 1 != 0;
            Mag::normalize((p >> 1) as u64 + u64::from(lost), exp + 1)
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Mag {
        if self.is_zero() {
            return Mag::ZERO;
        }
        Mag { man: self.man, exp: self.exp + k }
    }

    pub fn max(&self, other: &Mag) -> Mag {
        if self.cmp_value(other) == Ordering::Less {
            *other
        } else {
            *self
        }
    }

    pub fn cmp_value(&self, other: &Mag) -> Ordering {
        if self.is_zero() || other.is_zero() {
            return (!self.is_zero() as u8).cmp(&(!other.is_zero() as u8));
        }
        let lm = 64 - self.man.leading_zeros() as i64 + self.exp;
        let rm = 64 - other.man.leading_zeros() as i64 + other.exp;
        if lm != rm {
            return lm.cmp(&rm);
        }
        // Same msb position, so the exponent gap is at most the mantissa width.
        let d = self.exp - other.exp;
        let a = if d >= 0 { (self.man as u128) << d as u32 } else { self.man as u128 };
        let b = if d <= 0 { (other.man as u128) << (-d) as u32 } else { other.man as u128 };
        a.cmp(&b)
    }

    /// Upper bound of `self / den_lower` where `den_lower` is a positive
    /// lower bound of the divisor's magnitude.
    pub fn div_lower(&self, den_lower: &Dyadic) -> Mag {
        assert!(den_lower.is_positive(), "divisor lower bound must be positive");
        if self.is_zero() {
            return Mag::ZERO;
        }
        // Lower-bound the divisor by its top 32 bits (truncation shrinks it).
        let bits = den_lower.bits();
        let (dm, de) = if bits <= MAN_BITS as u64 {
            (den_lower.mantissa().to_u64().expect("fits"), den_lower.exponent())
        } else {
            let shift = bits - MAN_BITS as u64;
            let top: BigInt = den_lower.mantissa() >> shift;
            (top.to_u64().expect("fits"), den_lower.exponent() + shift as i64)
        };
        debug_assert!(dm > 0);
        // ceil((man << 32) / dm) * 2^(exp - 32 - de)
        let num = (self.man as u128) << 32;
        let q = num.div_ceil(dm as u128);
        let exp = self.exp - 32 - de;
        if q <= u64::MAX as u128 {
            Mag::normalize(q as u64, exp)
        } else {
            Mag::normalize((q >> 32) as u64 + 1, exp + 32)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_dyadic().to_f64()
    }
}

impl fmt::Debug for Mag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mag(≈{:.3e})", self.to_f64())
    }
}
