//! Complex balls with componentwise enclosure semantics.

use std::fmt;

use super::CertifiedReal;

/// A complex number enclosed componentwise by two real balls.
#[derive(Clone)]
pub struct CertifiedComplex {
    pub re: CertifiedReal,
    pub im: CertifiedReal,
}

impl CertifiedComplex {
    pub fn new(re: CertifiedReal, im: CertifiedReal) -> Self {
        CertifiedComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        CertifiedComplex { re: CertifiedReal::zero(prec), im: CertifiedReal::zero(prec) }
    }

    pub fn from_real(re: CertifiedReal) -> Self {
        let prec = re.precision();
        CertifiedComplex { re, im: CertifiedReal::zero(prec) }
    }

    pub fn conj(&self) -> Self {
        CertifiedComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> Self {
        CertifiedComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn add(&self, other: &Self) -> Self {
        CertifiedComplex { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CertifiedComplex { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        CertifiedComplex { re, im }
    }

    pub fn scale(&self, k: &CertifiedReal) -> Self {
        CertifiedComplex { re: self.re.mul(k), im: self.im.mul(k) }
    }

    /// Enclosure of `re^2 + im^2`, certified nonnegative.
    pub fn abs_sq(&self) -> CertifiedReal {
        self.re.sqr().add(&self.im.sqr()).clamp_nonneg()
    }

    /// True iff both component enclosures intersect.
    pub fn overlaps(&self, other: &Self) -> bool {
        self.re.overlaps(&other.re) && self.im.overlaps(&other.im)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for CertifiedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})i", self.re, self.im)
    }
}
