//! Roots of unity `ζ_N^e`, kept as an exponent modulo the conductor `N`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("conductor {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    conductor: u32,
    exp: u32,
}

impl Root {
    pub fn new(conductor: u32, exp: i64) -> Root {
        assert!(conductor >= 1, "conductor must be positive");
        Root { conductor, exp: exp.rem_euclid(conductor as i64) as u32 }
    }

    pub fn one(conductor: u32) -> Root {
        Root::new(conductor, 0)
    }

    pub fn conductor(self) -> u32 {
        self.conductor
    }

    pub fn exp(self) -> u32 {
        self.exp
    }

    pub fn is_one(self) -> bool {
        self.exp == 0
    }

    pub fn try_mul(self, other: Root) -> Result<Root, ScalarError> {
        if self.conductor != other.conductor {
            return Err(ScalarError::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(Root::new(self.conductor, self.exp as i64 + other.exp as i64))
    }

    pub fn inv(self) -> Root {
        Root::new(self.conductor, -(self.exp as i64))
    }

    pub fn pow(self, k: i64) -> Root {
        let n = self.conductor as i64;
        Root::new(self.conductor, (self.exp as i64 * k.rem_euclid(n)) % n)
    }

    /// Multiplicative order of the value.
    pub fn order(self) -> u32 {
        self.conductor / self.exp.gcd(&self.conductor)
    }

    /// Same complex number written over a multiple `m` of the conductor.
    pub fn rescale(self, m: u32) -> Result<Root, ScalarError> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(ScalarError::NotDivisible { from: self.conductor, to: m });
        }
        Ok(Root::new(m, self.exp as i64 * (m / self.conductor) as i64))
    }
}

impl std::ops::Mul for Root {
    type Output = Root;
    fn mul(self, rhs: Root) -> Root {
        self.try_mul(rhs).expect("roots of unity with different conductors")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ{}^{}", self.conductor, self.exp)
    }
}

/// Exponent arithmetic modulo a fixed conductor, used by the sweep kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zn(pub u32);

impl Zn {
    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    /// Sum of signed exponents, each given as `(exp, sign)`.
    #[inline]
    pub fn combine(self, terms: &[(u32, i8)]) -> u32 {
        let mut acc: i64 = 0;
        for &(e, s) in terms {
            acc += e as i64 * s as i64;
        }
        self.reduce(acc)
    }
}
