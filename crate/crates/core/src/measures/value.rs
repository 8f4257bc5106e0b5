use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, ToPrimitive, Zero};

/// A measure result as surfaced to callers and reports. Integer-valued and
/// normalized measures are exact; the two Kharal distances involve square
/// roots and are carried as floats.
#[derive(Clone, Debug, PartialEq)]
pub enum MeasureValue {
    Exact(BigRational),
    Real(f64),
}

impl MeasureValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            MeasureValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            MeasureValue::Real(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            MeasureValue::Exact(r) => Some(r),
            MeasureValue::Real(_) => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, MeasureValue::Exact(r) if r.is_integer())
    }

    /// `"7/75"`, `"6"`; `None` for real-valued results.
    pub fn exact_string(&self) -> Option<String> {
        self.as_exact().map(rational_string)
    }

    /// Fixed three-decimal rendering, rounding half away from zero.
    pub fn decimal(&self) -> String {
        match self {
            MeasureValue::Exact(r) => round_decimal(r, 3),
            MeasureValue::Real(x) => {
                let s = format!("{:.3}", x);
                if s == "-0.000" {
                    "0.000".into()
                } else {
                    s
                }
            }
        }
    }
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            f.write_str(&self.exact_string().unwrap())
        } else {
            f.write_str(&self.decimal())
        }
    }
}

impl From<u64> for MeasureValue {
    fn from(v: u64) -> Self {
        MeasureValue::Exact(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<Rational64> for MeasureValue {
    fn from(v: Rational64) -> Self {
        MeasureValue::Exact(BigRational::new(BigInt::from(*v.numer()), BigInt::from(*v.denom())))
    }
}

impl From<BigRational> for MeasureValue {
    fn from(v: BigRational) -> Self {
        MeasureValue::Exact(v)
    }
}

impl From<f64> for MeasureValue {
    fn from(v: f64) -> Self {
        MeasureValue::Real(v)
    }
}

pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn round_decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let (n, d) = (r.numer().abs() * &scale, r.denom().clone());
    let rounded = (n * 2u32 + &d).div_floor(&(d * 2u32));
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = places as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> MeasureValue {
        Rational64::new(n, d).into()
    }

    #[test]
    fn rounding() {
        assert_eq!(r(7, 75).decimal(), "0.093");
        assert_eq!(r(1, 6).decimal(), "0.167");
        assert_eq!(r(75, 82).decimal(), "0.915");
        assert_eq!(r(1, 2000).decimal(), "0.001");
        assert_eq!(r(-1, 2000).decimal(), "-0.001");
        assert_eq!(r(-1, 3000).decimal(), "0.000");
        assert_eq!(r(6, 1).decimal(), "6.000");
        assert_eq!(MeasureValue::Real(3f64.sqrt()).decimal(), "1.732");
    }

    #[test]
    fn display() {
        assert_eq!(MeasureValue::from(6u64).to_string(), "6");
        assert_eq!(r(6, 75).to_string(), "0.080");
        assert_eq!(r(6, 75).exact_string().unwrap(), "2/25");
        assert_eq!(MeasureValue::Real(2.0).exact_string(), None);
    }
}
