use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Degree of a univariate differential form: 0-forms are functions, 1-forms carry `dx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "usize", try_from = "usize")]
pub enum FormDegree {
    Zero,
    One,
}

impl FormDegree {
    pub fn value(self) -> usize {
        match self {
            FormDegree::Zero => 0,
            FormDegree::One => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Self {
        if bit == 0 { FormDegree::Zero } else { FormDegree::One }
    }
}

impl TryFrom<usize> for FormDegree {
    type Error = Error;
    fn try_from(k: usize) -> Result<Self> {
        match k {
            0 => Ok(FormDegree::Zero),
            1 => Ok(FormDegree::One),
            other => Err(Error::InvalidFormDegree(other)),
        }
    }
}

impl From<FormDegree> for usize {
    fn from(k: FormDegree) -> usize {
        k.value()
    }
}

impl fmt::Display for FormDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}
