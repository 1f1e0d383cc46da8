//! Normalized cochains `f(g_q, .., g_1; x_1, .., x_p)` of the double complex
//! attached to a matched pair, with values in `μ_N` stored as exponents.
//!
//! `delta_h` raises `p` and `delta_v` raises `q`; both are the plain
//! alternating products. The total differential signs them as
//! `D_h = delta_h^{(-1)^{q+1}}` and `D_v = delta_v^{-1}`, which squares to
//! zero because the two unsigned differentials commute. With these signs a
//! gauge `ν` acts by `(τ, σ) ↦ (τ, σ) · Dν` exactly as an isomorphism of
//! extensions does, and the middle component of `D(τ, σ)` reproduces `Q`.

use thiserror::Error;

use crate::algebra::solve_mod;
use crate::braiding::{compute_q, QTable};
use crate::cocycles::{modn, Datum, Gauge};
use crate::matched_pair::MatchedPair;
use crate::report::{sweep, Check, Mode, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("bidegree ({q}, {p}) is not supported")]
    BidegreeUnsupported { q: usize, p: usize },
    #[error("cochains live on different bidegrees or conductors")]
    Mismatch,
}

/// Largest total degree `q + p` that is materialized.
pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    q: usize,
    p: usize,
    ng: usize,
    nf: usize,
    conductor: u32,
    table: Vec<u32>,
}

fn supported(q: usize, p: usize) -> Result<(), CohomologyError> {
    if q >= 1 && p >= 1 && q + p <= MAX_DEGREE {
        Ok(())
    } else {
        Err(CohomologyError::BidegreeUnsupported { q, p })
    }
}

impl Cochain {
    /// `f` receives `(g_q, .., g_1)` and `(x_1, .., x_p)`; values at
    /// arguments containing an identity are forced to `1`.
    pub fn from_fn(
        mp: &MatchedPair,
        q: usize,
        p: usize,
        conductor: u32,
        mut f: impl FnMut(&[usize], &[usize]) -> i64,
    ) -> Result<Cochain, CohomologyError> {
        supported(q, p)?;
        let (ng, nf) = (mp.ng(), mp.nf());
        let size = ng.pow(q as u32) * nf.pow(p as u32);
        let mut table = Vec::with_capacity(size);
        let mut gs = vec![0; q];
        let mut xs = vec![0; p];
        for i in 0..size {
            decode(i, ng, nf, &mut gs, &mut xs);
            let trivial = gs.contains(&0) || xs.contains(&0);
            table.push(if trivial { 0 } else { modn(f(&gs, &xs), conductor) });
        }
        Ok(Cochain { q, p, ng, nf, conductor, table })
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.q, self.p)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn exp(&self, gs: &[usize], xs: &[usize]) -> u32 {
        self.table[encode(gs, xs, self.ng, self.nf)]
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|&e| e == 0)
    }

    /// `f^k`
    pub fn pow(&self, k: i64) -> Cochain {
        let n = self.conductor;
        Cochain { table: self.table.iter().map(|&e| modn(e as i64 * k, n)).collect(), ..self.clone() }
    }

    pub fn mul(&self, o: &Cochain) -> Result<Cochain, CohomologyError> {
        if (self.q, self.p, self.conductor, self.ng, self.nf) != (o.q, o.p, o.conductor, o.ng, o.nf) {
            return Err(CohomologyError::Mismatch);
        }
        let n = self.conductor;
        let table = self.table.iter().zip(&o.table).map(|(&a, &b)| modn(a as i64 + b as i64, n)).collect();
        Ok(Cochain { table, ..self.clone() })
    }

    pub fn tau(d: &Datum) -> Cochain {
        Cochain::from_fn(&d.mp, 2, 1, d.conductor(), |g, x| d.tau.exp(x[0], g[0], g[1]) as i64).unwrap()
    }

    pub fn sigma(d: &Datum) -> Cochain {
        Cochain::from_fn(&d.mp, 1, 2, d.conductor(), |g, x| d.sigma.exp(g[0], x[0], x[1]) as i64).unwrap()
    }

    pub fn gauge(mp: &MatchedPair, nu: &Gauge) -> Cochain {
        Cochain::from_fn(mp, 1, 1, nu.conductor(), |g, x| nu.exp(g[0], x[0]) as i64).unwrap()
    }
}

/// Mixed radix, `g_q` most significant and `x_p` least.
fn encode(gs: &[usize], xs: &[usize], ng: usize, nf: usize) -> usize {
    let i = gs.iter().fold(0, |acc, &g| acc * ng + g);
    xs.iter().fold(i, |acc, &x| acc * nf + x)
}

fn decode(mut i: usize, ng: usize, nf: usize, gs: &mut [usize], xs: &mut [usize]) {
    for x in xs.iter_mut().rev() {
        *x = i % nf;
        i /= nf;
    }
    for g in gs.iter_mut().rev() {
        *g = i % ng;
        i /= ng;
    }
}

/// The horizontal differential, raising the number of `F` arguments.
pub fn delta_h(mp: &MatchedPair, f: &Cochain) -> Result<Cochain, CohomologyError> {
    let (q, p) = (f.q, f.p);
    supported(q, p + 1)?;
    let (fg, gg) = (mp.f(), mp.g());
    Cochain::from_fn(mp, q, p + 1, f.conductor, |gs, xs| {
        // gs = (g_q, .., g_1); twisted arguments g_i ◁ ((g_{i-1} .. g_1) ▷ x_1)
        let mut twisted = vec![0; q];
        let mut below = 0;
        for k in (0..q).rev() {
            twisted[k] = mp.act_g(gs[k], mp.act_f(below, xs[0]));
            below = gg.mul(gs[k], below);
        }
        let mut e = f.exp(&twisted, &xs[1..]) as i64;
        let mut merged = Vec::with_capacity(p);
        for i in 1..=p {
            merged.clear();
            merged.extend_from_slice(&xs[..i - 1]);
            merged.push(fg.mul(xs[i - 1], xs[i]));
            merged.extend_from_slice(&xs[i + 1..]);
            e += sign(i) * f.exp(gs, &merged) as i64;
        }
        e + sign(p + 1) * f.exp(gs, &xs[..p]) as i64
    })
}

/// The vertical differential, raising the number of `G` arguments.
pub fn delta_v(mp: &MatchedPair, f: &Cochain) -> Result<Cochain, CohomologyError> {
    let (q, p) = (f.q, f.p);
    supported(q + 1, p)?;
    let (fg, gg) = (mp.f(), mp.g());
    Cochain::from_fn(mp, q + 1, p, f.conductor, |gs, xs| {
        // gs = (g_{q+1}, .., g_1); moved arguments (g_1 ◁ x_1 .. x_{j-1}) ▷ x_j
        let g1 = gs[q];
        let mut moved = Vec::with_capacity(p);
        let mut prefix = 0;
        for &x in xs {
            moved.push(mp.act_f(mp.act_g(g1, prefix), x));
            prefix = fg.mul(prefix, x);
        }
        let mut e = f.exp(&gs[..q], &moved) as i64;
        let mut merged = Vec::with_capacity(q);
        for i in 1..=q {
            // merge g_{i+1} g_i, which sit at positions q - i and q - i + 1
            let k = q - i;
            merged.clear();
            merged.extend_from_slice(&gs[..k]);
            merged.push(gg.mul(gs[k], gs[k + 1]));
            merged.extend_from_slice(&gs[k + 2..]);
            e += sign(i) * f.exp(&merged, xs) as i64;
        }
        e + sign(q + 1) * f.exp(&gs[1..], xs) as i64
    })
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed horizontal part of the total differential.
pub fn total_h(mp: &MatchedPair, f: &Cochain) -> Result<Cochain, CohomologyError> {
    Ok(delta_h(mp, f)?.pow(sign(f.q + 1)))
}

/// Signed vertical part of the total differential.
pub fn total_v(mp: &MatchedPair, f: &Cochain) -> Result<Cochain, CohomologyError> {
    Ok(delta_v(mp, f)?.pow(-1))
}

/// `Dν = (D_v ν, D_h ν)`, components on `G² × F` and `G × F²`.
pub fn total_on_gauge(mp: &MatchedPair, nu: &Cochain) -> Result<(Cochain, Cochain), CohomologyError> {
    Ok((total_v(mp, nu)?, total_h(mp, nu)?))
}

/// The three components of `D(τ, σ)`, on `G³ × F`, `G² × F²` and `G × F³`.
pub fn total_on_pair(mp: &MatchedPair, tau: &Cochain, sigma: &Cochain) -> Result<[Cochain; 3], CohomologyError> {
    let p1 = total_v(mp, tau)?;
    let p2 = total_h(mp, tau)?.mul(&total_v(mp, sigma)?)?;
    let p3 = total_h(mp, sigma)?;
    Ok([p1, p2, p3])
}

/// Outer components of `D(τ, σ)` vanish, and `Q^{x,y}_{g,h}` equals the
/// middle component at `(h ◁ (g ▷ x)⁻¹, g; x, (g ◁ x)⁻¹ ▷ y)`.
pub fn verify_corollary_q(d: &Datum) -> Report {
    let mp = &d.mp;
    let (f, g) = (mp.f(), mp.g());
    let q: QTable = compute_q(d);
    let [p1, p2, p3] = total_on_pair(mp, &Cochain::tau(d), &Cochain::sigma(d)).expect("supported bidegrees");
    let mut r = Report::new();
    r.push(Check::single("first component of the total differential vanishes", p1.is_trivial()));
    r.push(Check::single("last component of the total differential vanishes", p3.is_trivial()));
    let (ng, nf) = (mp.ng(), mp.nf());
    r.push(sweep("Q is the middle component of the total differential", &[ng, ng, nf, nf], Mode::Count, |t| {
        let (a, h, x, y) = (t[0], t[1], t[2], t[3]);
        let g2 = mp.act_g(h, f.inv(mp.act_f(a, x)));
        let y2 = mp.act_f(g.inv(mp.act_g(a, x)), y);
        q.exp(a, h, x, y) == p2.exp(&[g2, a], &[x, y2])
    }));
    r
}

/// The cocycle laws agree with the vanishing of the outer components.
pub fn check_outer_components(d: &Datum) -> Report {
    let [p1, _, p3] = total_on_pair(&d.mp, &Cochain::tau(d), &Cochain::sigma(d)).expect("supported bidegrees");
    let sig = d.sigma.check(&d.mp);
    let tau = d.tau.check(&d.mp);
    let mut r = Report::new();
    let cocycle = |rep: &Report, name: &str| rep.get(name).is_some_and(Check::passed);
    r.push(Check::single("tau cocycle iff first component vanishes", cocycle(&tau, "tau cocycle") == p1.is_trivial()));
    r.push(Check::single("sigma cocycle iff last component vanishes", cocycle(&sig, "sigma cocycle") == p3.is_trivial()));
    r
}

/// `(τ, σ) = (τ', σ') · Dν`
pub fn differs_by_total(left: &Datum, right: &Datum, nu: &Gauge) -> Check {
    let mp = &left.mp;
    let (dt, ds) = total_on_gauge(mp, &Cochain::gauge(mp, nu)).expect("supported bidegrees");
    let ok = Cochain::tau(right).mul(&dt).ok() == Some(Cochain::tau(left))
        && Cochain::sigma(right).mul(&ds).ok() == Some(Cochain::sigma(left));
    Check::single("pairs differ by the total differential of the gauge", ok)
}

/// Finds `ν` with `(τ, σ) = (τ', σ') · Dν` over `Z/N`, if one exists. Data
/// with different braidings are rejected before solving.
pub fn solve_equivalence(left: &Datum, right: &Datum) -> Option<Gauge> {
    if left.mp != right.mp || left.conductor() != right.conductor() {
        return None;
    }
    if compute_q(left) != compute_q(right) {
        return None;
    }
    let mp = &left.mp;
    let (f, g) = (mp.f(), mp.g());
    let (ng, nf) = (mp.ng(), mp.nf());
    let n = left.conductor();
    if ng == 1 || nf == 1 {
        let nu = Gauge::trivial(mp, n);
        return differs_by_total(left, right, &nu).passed().then_some(nu);
    }
    let width = (ng - 1) * (nf - 1);
    let var = |a: usize, x: usize| (a != 0 && x != 0).then(|| (a - 1) * (nf - 1) + (x - 1));
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut push = |terms: &[(Option<usize>, i64)], b: i64| {
        let mut row = vec![0i64; width];
        for &(v, c) in terms {
            if let Some(i) = v {
                row[i] += c;
            }
        }
        rows.push(row);
        rhs.push(b);
    };
    for a in 0..ng {
        for x in 0..nf {
            for y in 0..nf {
                let b = left.sigma.exp(a, x, y) as i64 - right.sigma.exp(a, x, y) as i64;
                push(&[(var(a, x), 1), (var(mp.act_g(a, x), y), 1), (var(a, f.mul(x, y)), -1)], b);
            }
        }
    }
    for x in 0..nf {
        for a in 0..ng {
            for b in 0..ng {
                let e = left.tau.exp(x, a, b) as i64 - right.tau.exp(x, a, b) as i64;
                push(&[(var(g.mul(a, b), x), 1), (var(a, mp.act_f(b, x)), -1), (var(b, x), -1)], e);
            }
        }
    }
    let sol = solve_mod(&rows, &rhs, n as u64)?;
    let nu = Gauge::from_fn(mp, n, |a, x| var(a, x).map_or(0, |i| sol[i]));
    differs_by_total(left, right, &nu).passed().then_some(nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;
    use proptest::prelude::*;

    fn s3() -> MatchedPair {
        let (s3, perms) = Group::symmetric(3);
        let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let r = idx(&[1, 2, 0]);
        MatchedPair::from_factorization(&s3, &[0, idx(&[1, 0, 2])], &[0, r, s3.mul(r, r)]).unwrap()
    }

    /// The opposite factorization, where `▷` is the nontrivial action.
    fn s3_transposed() -> MatchedPair {
        s3().transposed()
    }

    fn random(mp: &MatchedPair, q: usize, p: usize, n: u32, seed: u64) -> Cochain {
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        Cochain::from_fn(mp, q, p, n, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        })
        .unwrap()
    }

    #[test]
    fn unsupported_bidegrees() {
        let mp = s3();
        let f = random(&mp, 2, 2, 3, 1);
        assert_eq!(delta_h(&mp, &f), Err(CohomologyError::BidegreeUnsupported { q: 2, p: 3 }));
        assert!(Cochain::from_fn(&mp, 0, 1, 3, |_, _| 0).is_err());
    }

    #[test]
    fn trivial_cochain_has_trivial_differentials() {
        let mp = s3();
        let one = Cochain::from_fn(&mp, 1, 1, 4, |_, _| 0).unwrap();
        assert!(delta_h(&mp, &one).unwrap().is_trivial());
        assert!(delta_v(&mp, &one).unwrap().is_trivial());
    }

    #[test]
    fn encoding_round_trip() {
        let (mut gs, mut xs) = (vec![0; 2], vec![0; 2]);
        for i in 0..(3 * 3 * 2 * 2) {
            decode(i, 3, 2, &mut gs, &mut xs);
            assert_eq!(encode(&gs, &xs, 3, 2), i);
        }
    }

    #[test]
    fn trivial_pair_corollary() {
        let d = Datum::trivial(s3(), 3);
        assert!(verify_corollary_q(&d).passed());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]
        #[test]
        fn differentials_square_to_zero_and_commute(seed in any::<u64>(), n in 2u32..=8, flip in any::<bool>()) {
            let mp = if flip { s3_transposed() } else { s3() };
            let f = random(&mp, 1, 1, n, seed);
            let hh = delta_h(&mp, &delta_h(&mp, &f).unwrap()).unwrap();
            let vv = delta_v(&mp, &delta_v(&mp, &f).unwrap()).unwrap();
            let hv = delta_h(&mp, &delta_v(&mp, &f).unwrap()).unwrap();
            let vh = delta_v(&mp, &delta_h(&mp, &f).unwrap()).unwrap();
            prop_assert!(hh.is_trivial());
            prop_assert!(vv.is_trivial());
            prop_assert_eq!(hv, vh);
            // hence the signed total differential squares to zero
            let (dt, ds) = total_on_gauge(&mp, &f).unwrap();
            let [p1, p2, p3] = total_on_pair(&mp, &dt, &ds).unwrap();
            prop_assert!(p1.is_trivial() && p2.is_trivial() && p3.is_trivial());
        }

        #[test]
        fn gauge_transforms_are_equivalences(seed in any::<u64>(), flip in any::<bool>()) {
            let mp = if flip { s3_transposed() } else { s3() };
            let base = Datum::trivial(mp.clone(), 6);
            let nu = random(&mp, 1, 1, 6, seed);
            let gauge = Gauge::from_fn(&mp, 6, |a, x| nu.exp(&[a], &[x]) as i64);
            let (dt, ds) = total_on_gauge(&mp, &nu).unwrap();
            let sigma = crate::cocycles::Sigma::from_fn(&mp, 6, |a, x, y| ds.exp(&[a], &[x, y]) as i64);
            let tau = crate::cocycles::Tau::from_fn(&mp, 6, |x, a, b| dt.exp(&[a, b], &[x]) as i64);
            let twisted = Datum::new(mp.clone(), sigma, tau).unwrap();
            prop_assert!(crate::bicrossed::theta_equivalence(&twisted, &base, &gauge).passed());
            let found = solve_equivalence(&twisted, &base).expect("equivalent");
            prop_assert!(crate::bicrossed::theta_equivalence(&twisted, &base, &found).passed());
        }
    }
}
