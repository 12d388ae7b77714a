//! Scalar abstraction shared by the index, the bound formulas and the lemma
//! functions. Everything numeric is generic over [`Scalar`]; the crate root
//! fixes `f64` aliases for the verifier.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};
use thiserror::Error;

pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossless for the small counts used here.
    #[inline]
    fn of(k: usize) -> Self {
        Self::from_usize(k).expect("count representable as a float")
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum GammaError {
    #[error("gamma must be nonzero (the index is defined for nonzero exponents)")]
    Zero,
    #[error("gamma must be finite")]
    NotFinite,
}

/// Nonzero finite exponent of the zeroth-order general Randić index.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GammaExponent<F>(F);

impl<F: Scalar> GammaExponent<F> {
    pub fn new(value: F) -> Result<Self, GammaError> {
        if !value.is_finite() {
            Err(GammaError::NotFinite)
        } else if value.is_zero() {
            Err(GammaError::Zero)
        } else {
            Ok(Self(value))
        }
    }

    #[inline]
    pub fn value(self) -> F {
        self.0
    }

    pub fn inverse_degree() -> Self {
        Self(-F::one())
    }

    pub fn is_negative(self) -> bool {
        self.0 < F::zero()
    }
}

impl<F: Scalar> TryFrom<f64> for GammaExponent<F> {
    type Error = GammaError;

    fn try_from(v: f64) -> Result<Self, GammaError> {
        Self::new(F::from_f64(v).ok_or(GammaError::NotFinite)?)
    }
}

/// `x^gamma` as `exp(gamma ln x)`, with `x = 1` giving exactly one.
#[inline]
pub fn power<F: Scalar>(x: F, gamma: F) -> F {
    if x == F::one() {
        F::one()
    } else {
        (gamma * x.ln()).exp()
    }
}

/// `d^gamma` for a vertex degree.
#[inline]
pub fn degree_power<F: Scalar>(d: usize, gamma: F) -> F {
    power(F::of(d), gamma)
}

/// Relative comparison with scale `max(1, |a|, |b|)`.
pub fn approx_eq<F: Scalar>(a: F, b: F, tolerance: F) -> bool {
    let scale = F::one().max(a.abs()).max(b.abs());
    (a - b).abs() <= tolerance * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_rejects_zero_and_nan() {
        assert_eq!(GammaExponent::new(0.0f64), Err(GammaError::Zero));
        assert_eq!(GammaExponent::new(-0.0f64), Err(GammaError::Zero));
        assert_eq!(GammaExponent::new(f64::NAN), Err(GammaError::NotFinite));
        assert_eq!(GammaExponent::<f32>::try_from(-0.5).unwrap().value(), -0.5f32);
    }

    #[test]
    fn power_short_circuits_one() {
        assert_eq!(degree_power(1, -0.37f64), 1.0);
        assert!((degree_power(4, -0.5f64) - 0.5).abs() < 1e-15);
        assert!((degree_power(3, -1.0f32) - 1.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn relative_tolerance() {
        assert!(approx_eq(1e12, 1e12 + 1.0, 1e-9));
        assert!(!approx_eq(1.0, 1.0 + 1e-8, 1e-9));
        assert!(approx_eq(0.0, 1e-10, 1e-9));
    }
}
