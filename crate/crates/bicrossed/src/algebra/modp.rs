//! Reduction of cyclotomic integers to a prime field `F_l` with `l ≡ 1 (mod N)`.
//!
//! Ranks computed here are lower bounds for ranks over the cyclotomic field,
//! which is how dimension statements are certified without field arithmetic.

use super::cyclotomic::CycInt;
use super::root::Root;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// A prime field together with a primitive `N`-th root of unity in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    pub prime: u64,
    pub conductor: u32,
    pub root: u64,
}

impl Reduction {
    /// Smallest prime `l > 1000` with `l ≡ 1 (mod N)`.
    pub fn new(conductor: u32) -> Reduction {
        let n = conductor as u64;
        let mut l = (1000 / n + 1) * n + 1;
        while !is_prime(l) {
            l += n;
        }
        let root = (2..l)
            .map(|g| pow_mod(g, (l - 1) / n, l))
            .find(|&w| is_primitive(w, n, l))
            .expect("F_l^x is cyclic");
        Reduction { prime: l, conductor, root }
    }

    pub fn root(&self, r: Root) -> u64 {
        debug_assert_eq!(r.conductor(), self.conductor);
        pow_mod(self.root, r.exp() as u64, self.prime)
    }

    pub fn cyc(&self, z: &CycInt) -> u64 {
        let l = self.prime as i128;
        let mut acc: i128 = 0;
        let mut w: i128 = 1;
        for &c in z.coeffs() {
            acc = (acc + (c as i128).rem_euclid(l) * w) % l;
            w = w * self.root as i128 % l;
        }
        acc as u64
    }
}

fn is_primitive(w: u64, n: u64, l: u64) -> bool {
    (1..n).all(|k| !n.is_multiple_of(k) || pow_mod(w, k, l) != 1) && pow_mod(w, n, l) == 1
}

/// Incremental row echelon basis over `F_l`.
#[derive(Debug, Clone)]
pub struct Echelon {
    prime: u64,
    width: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(prime: u64, width: usize) -> Echelon {
        Echelon { prime, width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a sparse vector; returns whether the rank grew.
    pub fn insert(&mut self, entries: &[(usize, u64)]) -> bool {
        let l = self.prime;
        let mut v = vec![0u64; self.width];
        for &(i, a) in entries {
            v[i] = (v[i] + a) % l;
        }
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    if *b != 0 {
                        *a = (*a + l - c * b % l) % l;
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|&a| a != 0) else { return false };
        let inv = pow_mod(v[p], l - 2, l);
        for a in v.iter_mut() {
            *a = *a * inv % l;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (a, b) in row.iter_mut().zip(&v) {
                    if *b != 0 {
                        *a = (*a + l - c * b % l) % l;
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_a_ring_map_on_roots() {
        for n in [3u32, 4, 8, 12] {
            let red = Reduction::new(n);
            assert_eq!(red.prime % n as u64, 1);
            let mut sum = CycInt::zero(n);
            for e in 0..n {
                sum.add_root(Root::new(n, e as i64), 1);
                let z = CycInt::from_root(Root::new(n, e as i64));
                assert_eq!(red.cyc(&z), red.root(Root::new(n, e as i64)));
            }
            assert_eq!(red.cyc(&sum), 0);
        }
        assert_eq!(Reduction::new(1).root, 1);
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new(7, 3);
        assert!(e.insert(&[(0, 1), (1, 2)]));
        assert!(!e.insert(&[(0, 3), (1, 6)]));
        assert!(e.insert(&[(2, 5)]));
        assert!(!e.insert(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(e.rank(), 2);
    }
}
