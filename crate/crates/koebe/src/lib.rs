//! Certified computation of Koebe radii for extremal univalent polynomial
//! families.
//!
//! The crate builds the classical Fejér, Alexander, Suffridge and
//! Egerváry–Szász families together with a sine-weighted Egerváry–Szász
//! family, evaluates them on the unit circle through closed-form
//! identities, certifies monotonicity of the boundary modulus through a
//! Weierstrass pullback and Sturm-sequence root counting, and computes
//! two-sided bounds for the Koebe radius. All numerics run in ball
//! arithmetic: results are enclosures, and sign decisions are made only
//! when certified.

pub mod arith;
pub mod boundary;
pub mod closed_form;
pub mod families;
pub mod poly;
pub mod pullback;
pub mod radius;

use thiserror::Error;

pub use arith::{
    certified_sign_with, CertifiedComplex, CertifiedReal, Dyadic, Mag, Sign, DEFAULT_PRECISION,
    DEFAULT_PRECISION_CAP,
};
pub use boundary::{min_distance, sample_curve, typically_real_check, BoundaryCurve, MinDistanceResult};
pub use closed_form::{eval_direct, eval_theorem1, imag_part, modulus_sq_theorem2, BoundaryPoint};
pub use families::{
    alexander_coeffs, egervary_szasz_coeff, egervary_szasz_eval, fejer_coeffs, fejer_kernel,
    generate, pnew_coeffs, suffridge_coeffs, Family, FamilySpec,
};
pub use poly::RealPolynomial;
pub use pullback::{
    certify_univalence, delta_n, pullback_tn, strip_zero_root, sturm_count, PullbackRational,
    SturmInterval, UnivalenceCertificate, Verdict,
};
pub use radius::{lower_bound_rs, psi_n, radius_table, suffridge_value, upper_bound_pn, RadiusReport};

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("division by an enclosure containing zero")]
    DivisionByZeroEnclosure,
    #[error("square root of an enclosure containing negative values")]
    SqrtOfNegativeEnclosure,
    #[error("bracket endpoints do not have certified opposite signs")]
    BracketSignsNotOpposite,
    #[error("bisection could not certify a sign inside the bracket")]
    BisectionStalled,
    #[error("polynomial division remainder is not certified zero")]
    InexactDivision,
    #[error("refinement failed to reach the requested tolerance: {0}")]
    ToleranceNotReached(String),
}

pub type Result<T> = std::result::Result<T, Error>;
