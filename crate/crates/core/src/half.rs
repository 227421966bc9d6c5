use std::fmt;

use crate::error::{Error, Result};

/// A strictly positive half-integer `1/2, 1, 3/2, ...`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const ONE_HALF: HalfInt = HalfInt(1);

    /// Builds from twice the value; `twice` must be at least 1.
    pub fn from_twice(twice: u32) -> Result<Self> {
        if twice == 0 {
            return Err(Error::InvalidParameter(
                "half-integer must be positive".into(),
            ));
        }
        Ok(HalfInt(twice))
    }

    /// Parses a float that must be a positive multiple of 1/2.
    pub fn from_f64(value: f64) -> Result<Self> {
        let doubled = 2.0 * value;
        let rounded = doubled.round();
        if !value.is_finite() || (doubled - rounded).abs() > 1e-9 || rounded < 1.0 {
            return Err(Error::InvalidParameter(format!(
                "{value} is not a positive half-integer"
            )));
        }
        Ok(HalfInt(rounded as u32))
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
