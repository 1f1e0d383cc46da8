//! Monomial structure constants for finite-dimensional (braided) Hopf
//! algebras whose products, coproduct terms and antipode send basis vectors
//! to root-of-unity multiples of basis vectors, together with exhaustive
//! axiom sweeps over them.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::modp::{Echelon, Reduction};
use crate::algebra::{CycInt, Group, Root};
use crate::report::{sweep, Check, Mode, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("operands belong to different algebras")]
    ParentMismatch,
    #[error("convolution system is not triangular at basis element {0}")]
    NotTriangular(usize),
    #[error("convolution system is inconsistent at basis element {0}")]
    Inconsistent(usize),
}

/// Finite linear combination with exact cyclotomic coefficients.
#[derive(Debug, Clone)]
pub struct Lin<K: Ord> {
    conductor: u32,
    terms: BTreeMap<K, CycInt>,
}

impl<K: Ord + Clone> Lin<K> {
    pub fn new(conductor: u32) -> Lin<K> {
        Lin { conductor, terms: BTreeMap::new() }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `self += k ζ^e [key]`
    pub fn add_root(&mut self, key: K, e: u32, k: i64) {
        let n = self.conductor;
        self.terms.entry(key).or_insert_with(|| CycInt::zero(n)).add_root(Root::new(n, e as i64), k);
    }

    pub fn add_scaled(&mut self, key: K, c: &CycInt, e: u32) {
        let z = c.scale(Root::new(self.conductor, e as i64));
        let n = self.conductor;
        let slot = self.terms.entry(key).or_insert_with(|| CycInt::zero(n));
        *slot = slot.try_add(&z).expect("conductor");
    }

    pub fn coeff(&self, key: &K) -> CycInt {
        self.terms.get(key).cloned().unwrap_or_else(|| CycInt::zero(self.conductor))
    }

    /// Nonzero terms only.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &CycInt)> {
        self.terms.iter().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(CycInt::is_zero)
    }

    pub fn sub(&self, o: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        for (k, c) in o.iter() {
            out.add_scaled(k.clone(), &c.neg(), 0);
        }
        out
    }
}

impl<K: Ord + Clone> PartialEq for Lin<K> {
    fn eq(&self, o: &Lin<K>) -> bool {
        self.conductor == o.conductor && self.sub(o).is_zero()
    }
}

pub type Element = Lin<usize>;
pub type Tensor = Lin<(usize, usize)>;

/// Monomial image `ζ^e b`.
pub type Mono = (u32, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tables {
    pub dim: usize,
    pub conductor: u32,
    /// `a b` at `a * dim + b`
    pub mult: Vec<Option<Mono>>,
    /// `Δ(a) = Σ ζ^e l ⊗ r`
    pub comult: Vec<Vec<(u32, usize, usize)>>,
    pub antipode: Vec<Mono>,
    pub counit: Vec<bool>,
    /// The unit is the sum of these basis vectors.
    pub unit: Vec<usize>,
    /// `c(a ⊗ b) = ζ^{braid[a][b]} b ⊗ a`
    pub braid: Vec<u32>,
}

impl Tables {
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> Option<Mono> {
        self.mult[a * self.dim + b]
    }

    #[inline]
    pub fn braid(&self, a: usize, b: usize) -> u32 {
        self.braid[a * self.dim + b]
    }

    fn n(&self) -> i64 {
        self.conductor as i64
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.conductor as u64) as u32
    }

    pub fn basis(&self, b: usize) -> Element {
        let mut e = Element::new(self.conductor);
        e.add_root(b, 0, 1);
        e
    }

    pub fn one(&self) -> Element {
        let mut e = Element::new(self.conductor);
        for &u in &self.unit {
            e.add_root(u, 0, 1);
        }
        e
    }

    fn owns(&self, u: &Element) -> bool {
        u.conductor() == self.conductor && u.iter().all(|(&k, _)| k < self.dim)
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element, HopfError> {
        if !self.owns(u) || !self.owns(v) {
            return Err(HopfError::ParentMismatch);
        }
        let mut out = Element::new(self.conductor);
        for (&a, ca) in u.iter() {
            for (&b, cb) in v.iter() {
                if let Some((e, c)) = self.mul(a, b) {
                    out.add_scaled(c, &ca.try_mul(cb).expect("conductor"), e);
                }
            }
        }
        Ok(out)
    }

    pub fn comultiply(&self, u: &Element) -> Result<Tensor, HopfError> {
        if !self.owns(u) {
            return Err(HopfError::ParentMismatch);
        }
        let mut out = Tensor::new(self.conductor);
        for (&a, ca) in u.iter() {
            for &(e, l, r) in &self.comult[a] {
                out.add_scaled((l, r), ca, e);
            }
        }
        Ok(out)
    }

    pub fn antipode_of(&self, u: &Element) -> Result<Element, HopfError> {
        if !self.owns(u) {
            return Err(HopfError::ParentMismatch);
        }
        let mut out = Element::new(self.conductor);
        for (&a, ca) in u.iter() {
            let (e, b) = self.antipode[a];
            out.add_scaled(b, ca, e);
        }
        Ok(out)
    }

    pub fn counit_of(&self, u: &Element) -> CycInt {
        let mut out = CycInt::zero(self.conductor);
        for (&a, c) in u.iter() {
            if self.counit[a] {
                out = out.try_add(c).expect("conductor");
            }
        }
        out
    }

    // ---- axiom sweeps ----

    pub fn check_associative(&self) -> Check {
        let d = self.dim;
        sweep("associativity", &[d, d, d], Mode::Count, |t| {
            let left = self.mul(t[0], t[1]).and_then(|(e1, ab)| self.mul(ab, t[2]).map(|(e2, r)| (self.add(e1, e2), r)));
            let right = self.mul(t[1], t[2]).and_then(|(e1, bc)| self.mul(t[0], bc).map(|(e2, r)| (self.add(e1, e2), r)));
            left == right
        })
    }

    pub fn check_unit(&self) -> Check {
        let one = self.one();
        sweep("unit", &[self.dim], Mode::Count, |t| {
            let b = self.basis(t[0]);
            self.multiply(&one, &b).unwrap() == b && self.multiply(&b, &one).unwrap() == b
        })
    }

    pub fn check_coassociative(&self) -> Check {
        sweep("coassociativity", &[self.dim], Mode::Count, |t| {
            let mut left: Lin<(usize, usize, usize)> = Lin::new(self.conductor);
            let mut right: Lin<(usize, usize, usize)> = Lin::new(self.conductor);
            for &(e, l, r) in &self.comult[t[0]] {
                for &(e2, ll, lr) in &self.comult[l] {
                    left.add_root((ll, lr, r), self.add(e, e2), 1);
                }
                for &(e2, rl, rr) in &self.comult[r] {
                    right.add_root((l, rl, rr), self.add(e, e2), 1);
                }
            }
            left == right
        })
    }

    pub fn check_counit(&self) -> Check {
        sweep("counit", &[self.dim], Mode::Count, |t| {
            let mut left = Element::new(self.conductor);
            let mut right = Element::new(self.conductor);
            for &(e, l, r) in &self.comult[t[0]] {
                if self.counit[l] {
                    left.add_root(r, e, 1);
                }
                if self.counit[r] {
                    right.add_root(l, e, 1);
                }
            }
            let b = self.basis(t[0]);
            left == b && right == b
        })
    }

    pub fn check_counit_multiplicative(&self) -> Check {
        let d = self.dim;
        sweep("counit multiplicative", &[d, d], Mode::Count, |t| {
            let lhs = match self.mul(t[0], t[1]) {
                Some((e, c)) if self.counit[c] => Some(e),
                _ => None,
            };
            let rhs = (self.counit[t[0]] && self.counit[t[1]]).then_some(0);
            lhs == rhs
        })
    }

    pub fn check_comult_unit(&self) -> Check {
        let one = self.one();
        let lhs = self.comultiply(&one).unwrap();
        let mut rhs = Tensor::new(self.conductor);
        for &u in &self.unit {
            for &v in &self.unit {
                rhs.add_root((u, v), 0, 1);
            }
        }
        Check::single("comultiplication unital", lhs == rhs)
    }

    /// `Δ(ab) = Δ(a) • Δ(b)` with the product on `R ⊗ R` twisted by the braiding.
    pub fn check_comult_multiplicative(&self, name: &str) -> Check {
        let d = self.dim;
        sweep(name, &[d, d], Mode::Count, |t| {
            let (a, b) = (t[0], t[1]);
            let mut lhs = Tensor::new(self.conductor);
            if let Some((e, c)) = self.mul(a, b) {
                for &(e2, l, r) in &self.comult[c] {
                    lhs.add_root((l, r), self.add(e, e2), 1);
                }
            }
            let mut rhs = Tensor::new(self.conductor);
            for &(ea, a1, a2) in &self.comult[a] {
                for &(eb, b1, b2) in &self.comult[b] {
                    let (Some((m1, l)), Some((m2, r))) = (self.mul(a1, b1), self.mul(a2, b2)) else { continue };
                    let e = (ea as i64 + eb as i64 + self.braid(a2, b1) as i64 + m1 as i64 + m2 as i64) % self.n();
                    rhs.add_root((l, r), e as u32, 1);
                }
            }
            lhs == rhs
        })
    }

    /// `S(a₁) a₂ = a₁ S(a₂) = ε(a) 1`
    pub fn check_antipode(&self) -> Check {
        let one = self.one();
        let zero = Element::new(self.conductor);
        sweep("antipode", &[self.dim], Mode::Count, |t| {
            let mut left = Element::new(self.conductor);
            let mut right = Element::new(self.conductor);
            for &(e, l, r) in &self.comult[t[0]] {
                let (es, sl) = self.antipode[l];
                if let Some((m, c)) = self.mul(sl, r) {
                    left.add_root(c, ((e as u64 + es as u64 + m as u64) % self.conductor as u64) as u32, 1);
                }
                let (es, sr) = self.antipode[r];
                if let Some((m, c)) = self.mul(l, sr) {
                    right.add_root(c, ((e as u64 + es as u64 + m as u64) % self.conductor as u64) as u32, 1);
                }
            }
            let expect = if self.counit[t[0]] { &one } else { &zero };
            left == *expect && right == *expect
        })
    }

    /// Everything except compatibility with the braiding.
    pub fn check_hopf(&self, comult_name: &str) -> Report {
        let mut r = Report::new();
        r.push(self.check_associative());
        r.push(self.check_unit());
        r.push(self.check_coassociative());
        r.push(self.check_counit());
        r.push(self.check_counit_multiplicative());
        r.push(self.check_comult_unit());
        r.push(self.check_comult_multiplicative(comult_name));
        r.push(self.check_antipode());
        r
    }

    // ---- the braiding ----

    /// `c (m ⊗ id) = (id ⊗ m) c₁₂ c₂₃`-type naturality, in diagonal form.
    pub fn check_braid_mult(&self) -> Check {
        let d = self.dim;
        sweep("multiplication commutes with the braiding", &[d, d, d], Mode::Count, |t| {
            let (a, b, w) = (t[0], t[1], t[2]);
            match self.mul(a, b) {
                None => true,
                Some((_, c)) => {
                    self.braid(c, w) == self.add(self.braid(a, w), self.braid(b, w))
                        && self.braid(w, c) == self.add(self.braid(w, a), self.braid(w, b))
                }
            }
        })
    }

    pub fn check_braid_comult(&self) -> Check {
        let d = self.dim;
        sweep("comultiplication commutes with the braiding", &[d, d], Mode::Count, |t| {
            let (a, b) = (t[0], t[1]);
            // (id ⊗ Δ) c (a ⊗ b) against (c ⊗ id)(id ⊗ c)(Δ a ⊗ b), and the mirror
            let mut l1: Lin<(usize, usize, usize)> = Lin::new(self.conductor);
            let mut r1: Lin<(usize, usize, usize)> = Lin::new(self.conductor);
            for &(e, a1, a2) in &self.comult[a] {
                l1.add_root((b, a1, a2), self.add(e, self.braid(a, b)), 1);
                r1.add_root((b, a1, a2), self.add(e, self.add(self.braid(a1, b), self.braid(a2, b))), 1);
            }
            let mut l2: Lin<(usize, usize, usize)> = Lin::new(self.conductor);
            let mut r2: Lin<(usize, usize, usize)> = Lin::new(self.conductor);
            for &(e, b1, b2) in &self.comult[b] {
                l2.add_root((b1, b2, a), self.add(e, self.braid(a, b)), 1);
                r2.add_root((b1, b2, a), self.add(e, self.add(self.braid(a, b1), self.braid(a, b2))), 1);
            }
            l1 == r1 && l2 == r2
        })
    }

    pub fn check_braid_antipode(&self) -> Check {
        let d = self.dim;
        sweep("antipode commutes with the braiding", &[d, d], Mode::Count, |t| {
            let (a, b) = (t[0], t[1]);
            self.braid(self.antipode[a].1, b) == self.braid(a, b) && self.braid(a, self.antipode[b].1) == self.braid(a, b)
        })
    }

    /// `c₁₂ c₂₃ c₁₂ = c₂₃ c₁₂ c₂₃` evaluated by composing the maps on basis triples.
    pub fn check_braid_equation(&self) -> Check {
        let d = self.dim;
        type T3 = (u32, [usize; 3]);
        let c12 = |(e, [a, b, w]): T3| -> T3 { (self.add(e, self.braid(a, b)), [b, a, w]) };
        let c23 = |(e, [a, b, w]): T3| -> T3 { (self.add(e, self.braid(b, w)), [a, w, b]) };
        sweep("braid equation", &[d, d, d], Mode::Count, |t| {
            let v = (0, [t[0], t[1], t[2]]);
            c12(c23(c12(v))) == c23(c12(c23(v)))
        })
    }

    pub fn check_braiding(&self) -> Report {
        let mut r = Report::new();
        r.push(self.check_braid_mult());
        r.push(self.check_braid_comult());
        r.push(self.check_braid_antipode());
        r.push(self.check_braid_equation());
        r
    }

    // ---- oracle ----

    /// Solves `id ∗ T = η ε` for `T` one coefficient at a time, then confirms
    /// `T ∗ id = η ε`. Returns `T` on each basis vector.
    pub fn convolution_inverse(&self) -> Result<Vec<Element>, HopfError> {
        let d = self.dim;
        let n = self.conductor;
        // unknown T[b][c]: equations indexed by (a, output basis o), each a
        // list of (root exponent, b, c) terms
        type Terms = Vec<(u32, usize, usize)>;
        let mut eqs: BTreeMap<(usize, usize), Terms> = BTreeMap::new();
        for a in 0..d {
            for &(e, a1, a2) in &self.comult[a] {
                for c in 0..d {
                    if let Some((m, o)) = self.mul(a1, c) {
                        eqs.entry((a, o)).or_default().push((self.add(e, m), a2, c));
                    }
                }
            }
        }
        let unit: Vec<bool> = (0..d).map(|b| self.unit.contains(&b)).collect();
        let mut sol: BTreeMap<(usize, usize), CycInt> = BTreeMap::new();
        for (&(a, o), terms) in &eqs {
            // each equation must carry exactly one unknown with a root coefficient
            let [(e, b, c)] = terms[..] else { return Err(HopfError::NotTriangular(a)) };
            let key = (b, c);
            let rhs = if self.counit[a] && unit[o] { CycInt::one(n) } else { CycInt::zero(n) };
            let value = rhs.scale(Root::new(n, e as i64).inv());
            if let Some(prev) = sol.get(&key) {
                if *prev != value {
                    return Err(HopfError::Inconsistent(a));
                }
            } else {
                sol.insert(key, value);
            }
        }
        let mut t: Vec<Element> = (0..d).map(|_| Element::new(n)).collect();
        for ((b, c), v) in sol {
            t[b].add_scaled(c, &v, 0);
        }
        // T ∗ id
        for a in 0..d {
            let mut acc = Element::new(n);
            for &(e, a1, a2) in &self.comult[a] {
                let prod = self.multiply(&t[a1], &self.basis(a2)).unwrap();
                for (&k, c) in prod.iter() {
                    acc.add_scaled(k, c, e);
                }
            }
            let expect = if self.counit[a] { self.one() } else { Element::new(n) };
            if acc != expect {
                return Err(HopfError::Inconsistent(a));
            }
        }
        Ok(t)
    }
}

impl Tables {
    /// The group algebra `kG`, with trivial braiding.
    pub fn group_algebra(g: &Group, conductor: u32) -> Tables {
        let n = g.order();
        Tables {
            dim: n,
            conductor,
            mult: (0..n * n).map(|i| Some((0, g.mul(i / n, i % n)))).collect(),
            comult: (0..n).map(|a| vec![(0, a, a)]).collect(),
            antipode: (0..n).map(|a| (0, g.inv(a))).collect(),
            counit: vec![true; n],
            unit: vec![0],
            braid: vec![0; n * n],
        }
    }

    /// Functions `k^G` on the basis of point masses, with trivial braiding.
    pub fn function_algebra(g: &Group, conductor: u32) -> Tables {
        let n = g.order();
        Tables {
            dim: n,
            conductor,
            mult: (0..n * n).map(|i| (i / n == i % n).then_some((0, i / n))).collect(),
            comult: (0..n).map(|a| (0..n).map(|t| (0, t, g.mul(g.inv(t), a))).collect()).collect(),
            antipode: (0..n).map(|a| (0, g.inv(a))).collect(),
            counit: (0..n).map(|a| a == 0).collect(),
            unit: (0..n).collect(),
            braid: vec![0; n * n],
        }
    }

    /// `A ⊗ B` with the plain flip, basis `(a, b)` at `a * dim(B) + b`.
    /// Both factors must carry trivial braidings.
    pub fn tensor(&self, o: &Tables) -> Tables {
        let (da, db) = (self.dim, o.dim);
        let dim = da * db;
        let n = self.conductor;
        let sum = |x: u32, y: u32| ((x as u64 + y as u64) % n as u64) as u32;
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                mult.push(match (self.mul(i / db, j / db), o.mul(i % db, j % db)) {
                    (Some((e1, a)), Some((e2, b))) => Some((sum(e1, e2), a * db + b)),
                    _ => None,
                });
            }
        }
        let comult = (0..dim)
            .map(|i| {
                let mut terms = Vec::new();
                for &(e1, l1, r1) in &self.comult[i / db] {
                    for &(e2, l2, r2) in &o.comult[i % db] {
                        terms.push((sum(e1, e2), l1 * db + l2, r1 * db + r2));
                    }
                }
                terms
            })
            .collect();
        let antipode = (0..dim)
            .map(|i| {
                let ((e1, a), (e2, b)) = (self.antipode[i / db], o.antipode[i % db]);
                (sum(e1, e2), a * db + b)
            })
            .collect();
        let counit = (0..dim).map(|i| self.counit[i / db] && o.counit[i % db]).collect();
        let unit = self.unit.iter().flat_map(|&a| o.unit.iter().map(move |&b| a * db + b)).collect();
        Tables { dim, conductor: n, mult, comult, antipode, counit, unit, braid: vec![0; dim * dim] }
    }
}

/// A linear map sending each basis vector to a monomial or to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    pub image: Vec<Option<Mono>>,
}

impl MonomialMap {
    fn apply(&self, n: u32, u: &Element) -> Element {
        let mut out = Element::new(n);
        for (&a, c) in u.iter() {
            if let Some((e, b)) = self.image[a] {
                out.add_scaled(b, c, e);
            }
        }
        out
    }

    /// Algebra, coalgebra and antipode compatibility between `src` and `dst`.
    pub fn check_hopf_map(&self, name: &str, src: &Tables, dst: &Tables) -> Report {
        let n = src.conductor;
        let mut r = Report::new();
        let d = src.dim;
        let img = |u: &Element| self.apply(n, u);
        r.push(sweep(&format!("{name} multiplicative"), &[d, d], Mode::Count, |t| {
            let lhs = img(&src.multiply(&src.basis(t[0]), &src.basis(t[1])).unwrap());
            let rhs = dst.multiply(&img(&src.basis(t[0])), &img(&src.basis(t[1]))).unwrap();
            lhs == rhs
        }));
        r.push(Check::single(&format!("{name} unital"), img(&src.one()) == dst.one()));
        r.push(sweep(&format!("{name} comultiplicative"), &[d], Mode::Count, |t| {
            let mut lhs = Tensor::new(n);
            for &(e, l, rr) in &src.comult[t[0]] {
                if let (Some((e1, l2)), Some((e2, r2))) = (self.image[l], self.image[rr]) {
                    lhs.add_root((l2, r2), (e + e1 + e2) % n, 1);
                }
            }
            let rhs = dst.comultiply(&img(&src.basis(t[0]))).unwrap();
            lhs == rhs
        }));
        r.push(sweep(&format!("{name} counital"), &[d], Mode::Count, |t| {
            dst.counit_of(&img(&src.basis(t[0]))) == src.counit_of(&src.basis(t[0]))
        }));
        r.push(sweep(&format!("{name} commutes with antipodes"), &[d], Mode::Count, |t| {
            let b = src.basis(t[0]);
            img(&src.antipode_of(&b).unwrap()) == dst.antipode_of(&img(&b)).unwrap()
        }));
        r
    }
}

/// Rank of a family of vectors after reduction modulo a prime `ℓ ≡ 1 (mod N)`.
/// Ranks over `F_ℓ` never exceed ranks over the cyclotomic field.
fn rank_mod(red: &Reduction, width: usize, vecs: impl Iterator<Item = Vec<(usize, u64)>>, stop: usize) -> usize {
    let mut ech = Echelon::new(red.prime, width);
    for v in vecs {
        ech.insert(&v);
        if ech.rank() >= stop {
            break;
        }
    }
    ech.rank()
}

fn reduce_lin<K: Ord + Clone>(red: &Reduction, u: &Lin<K>, index: impl Fn(&K) -> usize) -> Vec<(usize, u64)> {
    u.iter().map(|(k, c)| (index(k), red.cyc(c))).filter(|&(_, v)| v != 0).collect()
}

/// Checks that `A →ι H →π B` is an exact sequence of Hopf algebras:
/// `ι` injective, `π` surjective, `πι = ηε`, `H^{co π} = ι(A)` and `ker π = H ι(A⁺)`.
pub fn check_exact(name: &str, a: &Tables, h: &Tables, b: &Tables, iota: &MonomialMap, pi: &MonomialMap) -> Report {
    let n = h.conductor;
    let red = Reduction::new(n);
    let mut r = Report::new();
    let img_i = |u: &Element| iota.apply(n, u);
    let img_p = |u: &Element| pi.apply(n, u);

    let ri = rank_mod(&red, h.dim, (0..a.dim).map(|i| reduce_lin(&red, &img_i(&a.basis(i)), |&k| k)), a.dim);
    r.push(Check::single(&format!("{name}: inclusion injective"), ri == a.dim));
    let rp = rank_mod(&red, b.dim, (0..h.dim).map(|i| reduce_lin(&red, &img_p(&h.basis(i)), |&k| k)), b.dim);
    r.push(Check::single(&format!("{name}: projection surjective"), rp == b.dim));
    r.push(sweep(&format!("{name}: projection kills the inclusion"), &[a.dim], Mode::Count, |t| {
        let u = a.basis(t[0]);
        let lhs = img_p(&img_i(&u));
        let eps = a.counit_of(&u);
        let mut rhs = Element::new(n);
        for (&k, c) in b.one().iter() {
            rhs.add_scaled(k, &c.try_mul(&eps).unwrap(), 0);
        }
        lhs == rhs
    }));

    // coinvariants: kernel of h ↦ (id ⊗ π)Δh − h ⊗ 1
    let coinv = |u: &Element| -> Tensor {
        let mut out = Tensor::new(n);
        for (&k, c) in u.iter() {
            for &(e, l, rr) in &h.comult[k] {
                if let Some((e2, p)) = pi.image[rr] {
                    out.add_scaled((l, p), c, (e + e2) % n);
                }
            }
            for &one in &b.unit {
                out.add_scaled((k, one), &c.neg(), 0);
            }
        }
        out
    };
    let inside = (0..a.dim).all(|i| coinv(&img_i(&a.basis(i))).is_zero());
    let rank_coinv = rank_mod(
        &red,
        h.dim * b.dim,
        (0..h.dim).map(|i| reduce_lin(&red, &coinv(&h.basis(i)), |&(l, p)| l * b.dim + p)),
        h.dim,
    );
    r.push(Check::single(&format!("{name}: coinvariants equal the image of the inclusion"), inside && h.dim - rank_coinv == a.dim));

    // ker π = H ι(A⁺)
    let mut aplus: Vec<Element> = Vec::new();
    let base = (0..a.dim).find(|&i| a.counit[i]);
    for i in 0..a.dim {
        if !a.counit[i] {
            aplus.push(a.basis(i));
        } else if Some(i) != base {
            aplus.push(a.basis(i).sub(&a.basis(base.unwrap())));
        }
    }
    let products: Vec<Element> = (0..h.dim)
        .flat_map(|k| aplus.iter().map(move |p| (k, p)))
        .map(|(k, p)| h.multiply(&h.basis(k), &img_i(p)).unwrap())
        .collect();
    let killed = products.iter().all(|u| img_p(u).is_zero());
    let ker_dim = h.dim - rp;
    let rk = rank_mod(&red, h.dim, products.iter().map(|u| reduce_lin(&red, u, |&k| k)), ker_dim);
    r.push(Check::single(&format!("{name}: kernel of the projection is generated by the augmentation ideal"), killed && rk == ker_dim));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group_algebra(n: usize) -> Tables {
        Tables::group_algebra(&Group::cyclic(n), 1)
    }

    fn function_algebra(n: usize) -> Tables {
        Tables::function_algebra(&Group::cyclic(n), 1)
    }

    #[test]
    fn group_and_function_algebras_are_hopf() {
        for n in 1..6 {
            assert!(group_algebra(n).check_hopf("comult").passed());
            assert!(function_algebra(n).check_hopf("comult").passed());
            assert!(group_algebra(n).check_braiding().passed());
        }
    }

    #[test]
    fn oracle_recovers_group_antipode() {
        for t in [group_algebra(5), function_algebra(4)] {
            let inv = t.convolution_inverse().unwrap();
            for (a, s) in inv.iter().enumerate() {
                let (e, b) = t.antipode[a];
                let mut expect = Element::new(t.conductor);
                expect.add_root(b, e, 1);
                assert_eq!(*s, expect);
            }
        }
    }

    #[test]
    fn broken_antipode_is_caught() {
        let mut t = group_algebra(4);
        t.antipode[1] = (0, 1);
        assert!(!t.check_antipode().passed());
    }

    #[test]
    fn lin_cancellation() {
        let mut a: Element = Lin::new(4);
        a.add_root(0, 0, 1);
        a.add_root(0, 2, 1);
        assert!(a.is_zero());
        assert_eq!(a, Lin::new(4));
    }

    #[test]
    fn parent_mismatch() {
        let t = group_algebra(3);
        let mut u: Element = Lin::new(1);
        u.add_root(7, 0, 1);
        assert_eq!(t.multiply(&u, &t.basis(0)), Err(HopfError::ParentMismatch));
    }

    #[test]
    fn group_algebra_sequence_is_exact() {
        // Z/2 → Z/6 → Z/3 via 1 ↦ 3 and 1 ↦ 1
        let (a, h, b) = (group_algebra(2), group_algebra(6), group_algebra(3));
        let iota = MonomialMap { image: vec![Some((0, 0)), Some((0, 3))] };
        let pi = MonomialMap { image: (0..6).map(|i| Some((0, i % 3))).collect() };
        assert!(iota.check_hopf_map("inclusion", &a, &h).passed());
        assert!(pi.check_hopf_map("projection", &h, &b).passed());
        let r = check_exact("seq", &a, &h, &b, &iota, &pi);
        assert!(r.passed(), "{r}");
        // a non-exact one: Z/2 → Z/6 → Z/1 misses the kernel
        let triv = group_algebra(1);
        let pi0 = MonomialMap { image: vec![Some((0, 0)); 6] };
        assert!(!check_exact("seq", &a, &h, &triv, &iota, &pi0).passed());
    }
}
