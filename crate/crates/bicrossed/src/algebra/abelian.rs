//! Finite abelian groups in invariant-factor form and their characters.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::group::Group;
use super::root::Root;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("invariant factor {0} is smaller than 2")]
    FactorTooSmall(u64),
    #[error("invariant factors {0} and {1} break the divisibility chain")]
    NotAChain(u64, u64),
    #[error("invariant factor {factor} does not divide conductor {conductor}")]
    ConductorTooSmall { factor: u64, conductor: u32 },
    #[error("vector of length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
}

/// `Z/d_1 + .. + Z/d_r` with `d_i | d_{i+1}`; elements are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<AbelianGroup, AbelianError> {
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(AbelianError::FactorTooSmall(d));
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(AbelianError::NotAChain(w[0], w[1]));
            }
        }
        Ok(AbelianGroup { factors })
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Largest invariant factor (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn reduce(&self, v: &[i64]) -> Vec<u64> {
        v.iter()
            .zip(&self.factors)
            .map(|(&a, &d)| a.rem_euclid(d as i64) as u64)
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), d)| (x + y) % d).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(x, d)| (d - x) % d).collect()
    }

    pub fn scale(&self, a: &[u64], k: i64) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as u64)
            .collect()
    }

    pub fn element_order(&self, a: &[u64]) -> u64 {
        use num_integer::Integer;
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / x.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Mixed-radix index, first coordinate most significant.
    pub fn index(&self, a: &[u64]) -> usize {
        a.iter().zip(&self.factors).fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    pub fn element(&self, mut i: usize) -> Vec<u64> {
        let mut v = vec![0; self.factors.len()];
        for (k, &d) in self.factors.iter().enumerate().rev() {
            v[k] = (i % d as usize) as u64;
            i /= d as usize;
        }
        v
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order() as usize).map(|i| self.element(i))
    }

    /// The same group as a multiplication table, indexed by [`Self::index`].
    pub fn to_group(&self) -> Group {
        let n = self.order() as usize;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let a = self.element(i);
                (0..n).map(|j| self.index(&self.add(&a, &self.element(j)))).collect()
            })
            .collect();
        Group::from_table(&table).expect("abelian group table")
    }
}

/// A character `v ↦ ζ_N^{Σ (N/d_i) c_i v_i}` of an [`AbelianGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character {
    conductor: u32,
    coeffs: Vec<u64>,
}

impl Character {
    pub fn new(group: &AbelianGroup, conductor: u32, coeffs: Vec<u64>) -> Result<Character, AbelianError> {
        if coeffs.len() != group.rank() {
            return Err(AbelianError::WrongLength { got: coeffs.len(), expected: group.rank() });
        }
        if let Some(&factor) = group.factors().iter().find(|&&d| !(conductor as u64).is_multiple_of(d)) {
            return Err(AbelianError::ConductorTooSmall { factor, conductor });
        }
        let coeffs = coeffs.iter().zip(group.factors()).map(|(c, d)| c % d).collect();
        Ok(Character { conductor, coeffs })
    }

    pub fn trivial(group: &AbelianGroup, conductor: u32) -> Character {
        Character { conductor, coeffs: group.zero() }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn pair(&self, group: &AbelianGroup, v: &[u64]) -> Root {
        let n = self.conductor as u64;
        let e = self
            .coeffs
            .iter()
            .zip(v)
            .zip(group.factors())
            .fold(0u64, |acc, ((&c, &x), &d)| (acc + (n / d) * ((c * x) % d)) % n);
        Root::new(self.conductor, e as i64)
    }

    pub fn mul(&self, group: &AbelianGroup, o: &Character) -> Character {
        Character { conductor: self.conductor, coeffs: group.add(&self.coeffs, &o.coeffs) }
    }

    pub fn inv(&self, group: &AbelianGroup) -> Character {
        Character { conductor: self.conductor, coeffs: group.neg(&self.coeffs) }
    }
}
