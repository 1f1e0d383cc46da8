//! Exact arithmetic in `Z[ζ_N]`, elements reduced modulo the cyclotomic polynomial.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::root::{Root, ScalarError};

/// Coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// Exact division by a monic polynomial.
fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    q
}

/// Precomputed reduction data for one conductor.
#[derive(Debug)]
pub struct CycRing {
    n: u32,
    phi: usize,
    /// `x^k mod Φ_n` for `k < 2n`
    powers: Vec<Vec<i64>>,
}

impl CycRing {
    fn build(n: u32) -> CycRing {
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut powers = Vec::with_capacity(2 * n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..(2 * n as usize).max(2 * phi) {
            powers.push(cur.clone());
            // multiply by x and reduce with x^phi = -(poly[0..phi])
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        CycRing { n, phi, powers }
    }

    /// Shared ring data for conductor `n`.
    pub fn get(n: u32) -> Arc<CycRing> {
        thread_local! {
            static LOCAL: std::cell::RefCell<HashMap<u32, Arc<CycRing>>> = Default::default();
        }
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycRing>>>> = OnceLock::new();
        LOCAL.with(|local| {
            if let Some(r) = local.borrow().get(&n) {
                return r.clone();
            }
            let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
            let ring = cache
                .lock()
                .unwrap()
                .entry(n)
                .or_insert_with(|| Arc::new(CycRing::build(n)))
                .clone();
            local.borrow_mut().insert(n, ring.clone());
            ring
        })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }
}

/// An element of `Z[ζ_N]` in the power basis `1, ζ, .., ζ^{φ(N)-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    n: u32,
    c: Vec<i64>,
}

impl CycInt {
    pub fn zero(n: u32) -> CycInt {
        CycInt { n, c: vec![0; CycRing::get(n).phi] }
    }

    pub fn one(n: u32) -> CycInt {
        CycInt::from_root(Root::one(n))
    }

    pub fn from_int(n: u32, k: i64) -> CycInt {
        let mut z = CycInt::zero(n);
        z.c[0] = k;
        z
    }

    pub fn from_root(r: Root) -> CycInt {
        let ring = CycRing::get(r.conductor());
        CycInt { n: r.conductor(), c: ring.powers[r.exp() as usize].clone() }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    /// `self += k * ζ^e`, the hot path of every linear-combination check.
    pub fn add_root(&mut self, r: Root, k: i64) {
        debug_assert_eq!(r.conductor(), self.n);
        let ring = CycRing::get(self.n);
        for (a, b) in self.c.iter_mut().zip(&ring.powers[r.exp() as usize]) {
            *a += k * b;
        }
    }

    pub fn try_add(&self, o: &CycInt) -> Result<CycInt, ScalarError> {
        self.check(o)?;
        Ok(CycInt { n: self.n, c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() })
    }

    pub fn try_sub(&self, o: &CycInt) -> Result<CycInt, ScalarError> {
        self.check(o)?;
        Ok(CycInt { n: self.n, c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> CycInt {
        CycInt { n: self.n, c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn try_mul(&self, o: &CycInt) -> Result<CycInt, ScalarError> {
        self.check(o)?;
        let ring = CycRing::get(self.n);
        let mut out = vec![0i64; ring.phi];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for (k, &p) in ring.powers[i + j].iter().enumerate() {
                    out[k] += a * b * p;
                }
            }
        }
        Ok(CycInt { n: self.n, c: out })
    }

    /// Multiply by a root of unity.
    pub fn scale(&self, r: Root) -> CycInt {
        self.try_mul(&CycInt::from_root(r)).expect("conductor mismatch")
    }

    fn check(&self, o: &CycInt) -> Result<(), ScalarError> {
        if self.n != o.n {
            Err(ScalarError::ConductorMismatch(self.n, o.n))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8).len() - 1, 4);
    }

    #[test]
    fn vanishing_sum_of_cube_roots() {
        let mut s = CycInt::zero(3);
        for e in 0..3 {
            s = s.try_add(&CycInt::from_root(Root::new(3, e))).unwrap();
        }
        assert!(s.is_zero());
    }

    #[test]
    fn i_squared() {
        let i = CycInt::from_root(Root::new(4, 1));
        let sq = i.try_mul(&i).unwrap();
        assert_eq!(sq, CycInt::from_root(Root::new(4, 2)));
        assert_eq!(sq, CycInt::from_int(4, -1));
    }

    #[test]
    fn mismatch() {
        let a = CycInt::one(3);
        let b = CycInt::one(4);
        assert_eq!(a.try_add(&b), Err(ScalarError::ConductorMismatch(3, 4)));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn all_roots_vanish_up_to_24() {
        for n in 2..=24u32 {
            let mut s = CycInt::zero(n);
            for e in 0..n {
                s.add_root(Root::new(n, e as i64), 1);
            }
            assert!(s.is_zero(), "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn embedding_is_multiplicative(n in 1u32..30, a in 0i64..100, b in 0i64..100) {
            let ra = Root::new(n, a);
            let rb = Root::new(n, b);
            let lhs = CycInt::from_root(ra * rb);
            let rhs = CycInt::from_root(ra).try_mul(&CycInt::from_root(rb)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn equality_matches_exponents(n in 1u32..30, a in 0i64..60, b in 0i64..60) {
            let same = CycInt::from_root(Root::new(n, a)) == CycInt::from_root(Root::new(n, b));
            prop_assert_eq!(same, Root::new(n, a) == Root::new(n, b));
        }

        #[test]
        fn ring_axioms(n in 1u32..20, xs in proptest::collection::vec(-3i64..4, 3..9)) {
            let mk = |k: usize| {
                let mut z = CycInt::zero(n);
                for (e, &c) in xs.iter().enumerate().skip(k) {
                    z.add_root(Root::new(n, e as i64), c);
                }
                z
            };
            let (a, b, c) = (mk(0), mk(1), mk(2));
            let ab_c = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
            let a_bc = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let dist_l = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
            let dist_r = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(dist_l, dist_r);
            prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
            prop_assert!(a.try_sub(&a).unwrap().is_zero());
        }
    }
}
