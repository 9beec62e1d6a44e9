//! Weierstrass pullback of the boundary modulus and the monotonicity
//! certificate.
//!
//! Substituting e^{it} = (1+ix)/(1-ix) (t = 2 arctan x) turns
//! |P_N(e^{it})|² into T_N(x)/(1+x²)^{N-1} with T_N an even polynomial of
//! degree 2(N-1). The factor (1+ix) common to every term of the
//! transformed sum is stripped structurally before squaring, so the
//! division by (1+x²) is exact by construction and parity zeros are exact
//! zeros, never numeric near-zeros.

mod sturm;

pub use sturm::{sturm_count, SturmInterval};

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{CertifiedComplex, CertifiedReal, Dyadic, Sign};
use crate::families::pnew_coeffs;
use crate::poly::{ComplexPolynomial, RealPolynomial};
use crate::{Error, Result, DEFAULT_PRECISION, DEFAULT_PRECISION_CAP};

/// The pulled-back squared modulus R_N(x) = numerator/(scale·(1+x²)^denom_power).
///
/// The numerator is stored at the normalization used by the small-N case
/// analysis (scale = 4), i.e. numerator = 4·|P_N|²·(1+x²)^(N-1).
#[derive(Clone, Debug)]
pub struct PullbackRational {
    pub numerator: RealPolynomial,
    pub denom_power: u32,
    pub scale: CertifiedReal,
}

/// Outcome of the monotonicity certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    CertifiedMonotoneDecreasing,
    NotCertified,
}

/// Machine-checkable record of the Theorem-3 procedure for one degree.
#[derive(Clone, Debug, Serialize)]
pub struct UnivalenceCertificate {
    pub n: u32,
    /// Number of roots of the stripped derivative numerator on (0, ∞);
    /// `None` when undecided at the precision cap.
    pub root_count_pos_axis: Option<usize>,
    pub interior_sign: Sign,
    pub stripped_zero_order: usize,
    pub verdict: Verdict,
    pub precision_used: u32,
}

impl UnivalenceCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::CertifiedMonotoneDecreasing
    }
}

/// Gaussian-integer polynomial: coefficient k is re[k] + i·im[k].
struct GaussPoly {
    re: Vec<BigInt>,
    im: Vec<BigInt>,
}

impl GaussPoly {
    fn one() -> Self {
        GaussPoly { re: vec![BigInt::from(1)], im: vec![BigInt::from(0)] }
    }

    fn len(&self) -> usize {
        self.re.len()
    }

    /// Multiply by (1 + σ·i·x) for σ = ±1; exact.
    fn mul_linear(&self, sigma: i64) -> Self {
        let n = self.len();
        let mut re = vec![BigInt::from(0); n + 1];
        let mut im = vec![BigInt::from(0); n + 1];
        for k in 0..n {
            re[k] += &self.re[k];
            im[k] += &self.im[k];
            // i·x term: (a+bi)·σ i = σ(-b + ai)
            re[k + 1] += -&self.im[k] * sigma;
            im[k + 1] += &self.re[k] * sigma;
        }
        GaussPoly { re, im }
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.len() + other.len() - 1;
        let mut re = vec![BigInt::from(0); n];
        let mut im = vec![BigInt::from(0); n];
        for a in 0..self.len() {
            for b in 0..other.len() {
                re[a + b] += &self.re[a] * &other.re[b] - &self.im[a] * &other.im[b];
                im[a + b] += &self.re[a] * &other.im[b] + &self.im[a] * &other.re[b];
            }
        }
        GaussPoly { re, im }
    }
}

/// Pullback numerator T_N via the substitution e^{it} = (1+ix)/(1-ix).
///
/// Writes Σ a_k (1+ix)^k (1-ix)^(N-k) = (1+ix)·Q₁(x) with
/// Q₁ = Σ a_k (1+ix)^(k-1) (1-ix)^(N-k), so that
/// |P_N|²·(1+x²)^(N-1) = Q₁(x)·Q₁(-x) exactly. Q₁(x)·Q₁(-x) is computed
/// through the parity split Q₁ = A(x²) + x·B(x²) as A² - y·B² in y = x²,
/// which keeps odd coefficients exact zeros.
pub fn pullback_tn(n: u32, prec: u32) -> Result<PullbackRational> {
    if n < 1 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    let coeffs = pnew_coeffs(n, prec)?;

    // Exact Gaussian-integer powers of (1±ix), degree 0..N-1.
    let deg = (n - 1) as usize;
    let mut pow_plus = Vec::with_capacity(deg + 1);
    let mut pow_minus = Vec::with_capacity(deg + 1);
    pow_plus.push(GaussPoly::one());
    pow_minus.push(GaussPoly::one());
    for j in 1..=deg {
        pow_plus.push(pow_plus[j - 1].mul_linear(1));
        pow_minus.push(pow_minus[j - 1].mul_linear(-1));
    }

    // Q₁ = Σ_k a_k · (1+ix)^(k-1)(1-ix)^(N-k): ball coefficients from
    // exact Gaussian-integer basis polynomials.
    let mut q1 = vec![CertifiedComplex::zero(prec); deg + 1];
    for k in 1..=n as usize {
        let a = coeffs.coeff(k);
        if a.is_exact_zero() {
            continue;
        }
        let basis = pow_plus[k - 1].mul(&pow_minus[n as usize - k]);
        for m in 0..basis.len() {
            let re = a.mul(&CertifiedReal::from_dyadic(Dyadic::new(basis.re[m].clone(), 0), prec));
            let im = a.mul(&CertifiedReal::from_dyadic(Dyadic::new(basis.im[m].clone(), 0), prec));
            q1[m] = q1[m].add(&CertifiedComplex::new(re, im));
        }
    }
    let q1 = ComplexPolynomial::new(q1);

    // T(x) = Q₁(x)·Q₁(-x) = A(y)² - y·B(y)², y = x².
    let (a, b) = q1.parity_split();
    let a2 = a.mul(&a);
    let b2 = b.mul(&b);
    let mut u = a2;
    if !b2.is_empty() {
        // subtract y·B²: shift by one slot in y
        let prec_u = prec;
        let mut shifted = vec![CertifiedComplex::zero(prec_u)];
        shifted.extend(b2.coeffs().iter().map(|c| c.neg()));
        u = u.add(&ComplexPolynomial::new(shifted));
    }

    // True coefficients are real (the product is |Q₁|² on the real axis);
    // take real parts and interleave exact zeros for odd slots of x.
    let t_y = u.real_parts();
    debug_assert!(t_y.len() <= deg + 1);
    let mut t_x = Vec::with_capacity(2 * deg + 1);
    for (m, c) in t_y.iter().enumerate() {
        if m > 0 {
            t_x.push(CertifiedReal::zero(prec));
        }
        // paper-scale factor 4
        t_x.push(c.mul_pow2(2));
    }
    Ok(PullbackRational {
        numerator: RealPolynomial::new(t_x),
        denom_power: n - 1,
        scale: CertifiedReal::from_i64(4, prec),
    })
}

/// Derivative numerator Δ_N = T'·(1+x²) - 2(N-1)·x·T; odd by parity.
///
/// Computed in y = x² as Δ = 2x·V(y) with
/// V_j = (j+1)·u_{j+1} + (j - (N-1))·u_j for T(x) = U(x²): the leading
/// term of V carries the integer multiplier j - (N-1) = 0, so the
/// structural degree drop is an exact cancellation, not a numeric
/// near-zero.
pub fn delta_n(t: &PullbackRational) -> RealPolynomial {
    let prec = t.numerator.precision();
    let m = t.denom_power as i64; // N - 1
    let u: Vec<CertifiedReal> = t.numerator.coeffs().iter().step_by(2).cloned().collect();
    let deg_u = u.len().saturating_sub(1);

    let mut delta = Vec::with_capacity(2 * deg_u.max(1));
    for j in 0..deg_u.max(1) {
        let mut v = u[j].mul_i64(j as i64 - m);
        if j + 1 <= deg_u {
            v = v.add(&u[j + 1].mul_i64(j as i64 + 1));
        }
        delta.push(CertifiedReal::zero(prec)); // even slot, exact zero
        delta.push(v.mul_pow2(1));
    }
    RealPolynomial::new(delta)
}

/// Removes the structural x^m factor (m = count of low-order exact-zero
/// coefficients). Returns the quotient and m.
pub fn strip_zero_root(p: &RealPolynomial) -> (RealPolynomial, usize) {
    p.strip_low_order_zeros()
}

/// Runs the full Theorem-3 procedure for degree `n` with precision
/// escalation up to `precision_cap`.
///
/// The verdict is `CertifiedMonotoneDecreasing` only when the Sturm count
/// on (0, ∞) is certified zero and the interior sample Δ_N(1) is
/// certified negative; undecided sign determinations escalate the working
/// precision, and at the cap the certificate reports `NotCertified` with
/// undecided fields rather than guessing.
pub fn certify_univalence(n: u32, precision_cap: u32) -> Result<UnivalenceCertificate> {
    if n < 1 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    if n == 1 {
        // T_1 is constant, so Δ ≡ 0 and the Sturm machinery degenerates;
        // the degree-1 member z is univalent by inspection.
        return Ok(UnivalenceCertificate {
            n,
            root_count_pos_axis: Some(0),
            interior_sign: Sign::Negative,
            stripped_zero_order: 0,
            verdict: Verdict::CertifiedMonotoneDecreasing,
            precision_used: DEFAULT_PRECISION,
        });
    }
    let cap = precision_cap.max(DEFAULT_PRECISION);
    let mut prec = DEFAULT_PRECISION.min(cap);
    loop {
        let t = pullback_tn(n, prec)?;
        let delta = delta_n(&t);
        let (stripped, order) = strip_zero_root(&delta);
        let count = sturm_count(&stripped, &SturmInterval::PositiveAxis);
        let interior = delta.eval_dyadic(&Dyadic::from_i64(1)).sign();
        if let Some(c) = count {
            if interior != Sign::Undecided {
                let verdict = if c == 0 && interior == Sign::Negative {
                    Verdict::CertifiedMonotoneDecreasing
                } else {
                    Verdict::NotCertified
                };
                return Ok(UnivalenceCertificate {
                    n,
                    root_count_pos_axis: Some(c),
                    interior_sign: interior,
                    stripped_zero_order: order,
                    verdict,
                    precision_used: prec,
                });
            }
        }
        if prec >= cap {
            return Ok(UnivalenceCertificate {
                n,
                root_count_pos_axis: count,
                interior_sign: interior,
                stripped_zero_order: order,
                verdict: Verdict::NotCertified,
                precision_used: prec,
            });
        }
        prec = (prec * 2).min(cap);
    }
}

/// Convenience: certify with the default precision cap.
pub fn certify_univalence_default(n: u32) -> Result<UnivalenceCertificate> {
    certify_univalence(n, DEFAULT_PRECISION_CAP)
}
