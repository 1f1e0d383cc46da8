//! The field with `p²` elements as `F_p(a)` with `a² = c`, `c` the least
//! quadratic nonresidue mod `p`. Element `j + l a` has index `j p + l`, which
//! matches `Group::direct_product(cyclic(p), cyclic(p))`.

use crate::algebra::modp::{is_prime, pow_mod};
use crate::algebra::Group;

use super::ExampleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    c: u64,
}

impl GaloisField {
    pub fn new(p: u64) -> Result<GaloisField, ExampleError> {
        if p == 2 || !is_prime(p) {
            return Err(ExampleError::BadParameters(format!("p = {p} is not an odd prime")));
        }
        let c = (2..p).find(|&c| pow_mod(c, (p - 1) / 2, p) == p - 1).expect("odd primes have nonresidues");
        Ok(GaloisField { p, c })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The nonresidue `a²`.
    pub fn modulus(&self) -> u64 {
        self.c
    }

    pub fn order(&self) -> usize {
        (self.p * self.p) as usize
    }

    pub fn additive_group(&self) -> Group {
        Group::direct_product(&Group::cyclic(self.p as usize), &Group::cyclic(self.p as usize))
    }

    /// `(j, l)` for `j + l a`.
    pub fn coords(&self, g: usize) -> (u64, u64) {
        (g as u64 / self.p, g as u64 % self.p)
    }

    pub fn element(&self, j: u64, l: u64) -> usize {
        ((j % self.p) * self.p + l % self.p) as usize
    }

    /// The prime-field element `k`.
    pub fn scalar(&self, k: i64) -> usize {
        self.element(k.rem_euclid(self.p as i64) as u64, 0)
    }

    pub fn add(&self, g: usize, h: usize) -> usize {
        let ((j, l), (j2, l2)) = (self.coords(g), self.coords(h));
        self.element(j + j2, l + l2)
    }

    pub fn neg(&self, g: usize) -> usize {
        let (j, l) = self.coords(g);
        self.element(self.p - j, self.p - l)
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        let p = self.p;
        let ((j, l), (j2, l2)) = (self.coords(g), self.coords(h));
        self.element((j * j2 + self.c * (l * l2 % p)) % p, (j * l2 + l * j2) % p)
    }

    pub fn pow(&self, g: usize, e: u64) -> usize {
        (0..e).fold(self.scalar(1), |acc, _| self.mul(acc, g))
    }

    /// Multiplicative inverse through the norm `j² - c l²`.
    pub fn inv(&self, g: usize) -> Option<usize> {
        let p = self.p;
        let (j, l) = self.coords(g);
        let norm = (j * j % p + p - self.c * (l * l % p) % p) % p;
        if norm == 0 {
            return None;
        }
        let ni = pow_mod(norm, p - 2, p);
        Some(self.element(j * ni % p, (p - l) * ni % p))
    }

    /// `tr(j + l a) = 2 j`
    pub fn trace(&self, g: usize) -> u64 {
        2 * self.coords(g).0 % self.p
    }

    /// `det_a(j + l a, j' + l' a) = j l' - l j'`
    pub fn det(&self, g: usize, h: usize) -> u64 {
        let p = self.p;
        let ((j, l), (j2, l2)) = (self.coords(g), self.coords(h));
        (j * l2 % p + p - l * j2 % p) % p
    }

    /// The Frobenius `g ↦ g^p`.
    pub fn frobenius(&self, g: usize) -> usize {
        self.pow(g, self.p)
    }
}

/// `[x]_ν = 1 + ν + .. + ν^{x-1}` in `F_p`, with `[0]_ν = 0`.
pub fn q_number(nu: u64, x: u64, p: u64) -> u64 {
    let mut s = 0;
    let mut t = 1 % p;
    for _ in 0..x {
        s = (s + t) % p;
        t = t * nu % p;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for p in [3, 5, 7] {
            let k = GaloisField::new(p).unwrap();
            let n = k.order();
            let one = k.scalar(1);
            for a in 0..n {
                assert_eq!(k.mul(a, one), a);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), one);
                } else {
                    assert!(k.inv(a).is_none());
                }
                assert_eq!(k.add(a, k.neg(a)), 0);
                for b in 0..n {
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for c in 0..n {
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn nonresidue_and_frobenius() {
        assert_eq!(GaloisField::new(3).unwrap().modulus(), 2);
        assert_eq!(GaloisField::new(7).unwrap().modulus(), 3);
        assert!(GaloisField::new(9).is_err());
        assert!(GaloisField::new(2).is_err());
        for p in [3, 5, 7, 11] {
            let k = GaloisField::new(p).unwrap();
            let a = k.element(0, 1);
            assert_eq!(k.frobenius(a), k.neg(a));
            for g in 0..k.order() {
                assert_eq!(k.scalar(k.trace(g) as i64), k.add(g, k.frobenius(g)));
                assert_eq!(k.det(g, g), 0);
            }
        }
    }

    #[test]
    fn trace_is_linear_and_onto() {
        let k = GaloisField::new(5).unwrap();
        let n = k.order();
        for g in 0..n {
            for h in 0..n {
                assert_eq!(k.trace(k.add(g, h)), (k.trace(g) + k.trace(h)) % 5);
                assert_eq!(k.det(g, h), (5 - k.det(h, g)) % 5);
            }
        }
        let image: std::collections::BTreeSet<u64> = (0..n).map(|g| k.trace(g)).collect();
        assert_eq!(image.len(), 5);
    }

    #[test]
    fn q_number_addition_law() {
        for (p, q) in [(3u64, 2u64), (7, 3), (5, 2), (11, 5)] {
            let nu = (2..p).find(|&v| pow_mod(v, q, p) == 1).unwrap();
            for x in 0..q {
                for y in 0..q {
                    let lhs = q_number(nu, (x + y) % q, p);
                    let rhs = (q_number(nu, x, p) + pow_mod(nu, x, p) * q_number(nu, y, p)) % p;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
