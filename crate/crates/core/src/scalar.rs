//! Floating point scalar abstraction shared by the numerical modules.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumCast};

/// Real scalar used by the eigensolvers and the simulator: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumCast + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossless-enough conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    fn from_usize_lossy(x: usize) -> Self {
        Self::from_usize(x).expect("usize is representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// Serde helpers rendering reals with 15 significant digits.
pub mod sig15 {
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    use super::{round_sig, Scalar};

    pub fn serialize<S: Scalar, Ser: Serializer>(x: &S, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_f64(round_sig(x.to_f64_lossy(), 15))
    }

    pub fn vec<S: Scalar, Ser: Serializer>(xs: &[S], s: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&round_sig(x.to_f64_lossy(), 15))?;
        }
        seq.end()
    }

    pub fn option<S: Scalar, Ser: Serializer>(x: &Option<S>, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        match x {
            Some(x) => s.serialize_some(&round_sig(x.to_f64_lossy(), 15)),
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_fifteen_digits() {
        assert_eq!(round_sig(43f64.sqrt(), 15), 6.55743852430200);
        assert_eq!(round_sig(5.0, 15), 5.0);
        assert_eq!(round_sig(0.0, 15), 0.0);
        assert_eq!(round_sig(1.0 / 3.0, 3), 0.333);
    }
}
