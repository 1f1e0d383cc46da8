//! Parameterized families of braided bicrossed products.

pub mod galois;
pub mod search;

use thiserror::Error;

use crate::algebra::{AbelianError, AbelianGroup, Character, Group};
use crate::braiding::{compute_q, QTable};
use crate::cocycles::{CocycleError, Datum, Sigma, Tau};
use crate::matched_pair::{MatchedPair, MatchedPairError};
use crate::realization::{Realization, RealizationError};
use crate::report::{sweep, Check, Mode, Report};

pub use crate::algebra::modp::{is_prime, pow_mod};
pub use galois::{q_number, GaloisField};
pub use search::{count_cocycle_pairs, search};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExampleError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no unit of order {q} modulo {p}")]
    NoOrderQUnit { p: u64, q: u64 },
    #[error("gamma or eta fails the cyclic conditions at g = {g}")]
    GammaConditionFails { g: usize },
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    MatchedPair(#[from] MatchedPairError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
}

/// A dataset together with what is known about it in closed form.
#[derive(Debug, Clone)]
pub struct Example {
    pub name: String,
    pub datum: Datum,
    pub closed_form: Option<QTable>,
    pub realization: Option<Realization>,
}

impl Example {
    /// Agreement of `compute_q` with the closed form, where one is given.
    pub fn check_closed_form(&self) -> Check {
        let q = compute_q(&self.datum);
        match &self.closed_form {
            None => Check::single("Q matches its closed form", true),
            Some(c) => {
                let (ng, nf) = q.dims();
                sweep("Q matches its closed form", &[ng, ng, nf, nf], Mode::Count, |t| {
                    q.exp(t[0], t[1], t[2], t[3]) == c.exp(t[0], t[1], t[2], t[3])
                })
            }
        }
    }
}

fn zp2(p: u64) -> Group {
    Group::direct_product(&Group::cyclic(p as usize), &Group::cyclic(p as usize))
}

/// `G = F = F_p²` with trivial actions,
/// `τ_{(x,y)}((α,β),(α',β')) = ζ_p^{(x+y)(αβ' - α'β)}` and
/// `σ_{(α,β)}((x,y),(x',y')) = ζ_p^{(aα² + bβ²)(xy' - x'y)}`.
pub fn trivial_actions(p: u64, a: i64, b: i64) -> Result<Example, ExampleError> {
    if p == 2 || !is_prime(p) {
        return Err(ExampleError::BadParameters(format!("p = {p} is not an odd prime")));
    }
    if (a * b).rem_euclid(p as i64) == 0 {
        return Err(ExampleError::BadParameters(format!("a b = {a} {b} vanishes mod {p}")));
    }
    let pu = p as usize;
    let mp = MatchedPair::trivial(zp2(p), zp2(p));
    let split = |i: usize| ((i / pu) as i64, (i % pu) as i64);
    let n = p as u32;
    let det = |u: usize, v: usize| {
        let ((u1, u2), (v1, v2)) = (split(u), split(v));
        u1 * v2 - v1 * u2
    };
    let tau = Tau::from_fn(&mp, n, |x, g, h| {
        let (x1, x2) = split(x);
        (x1 + x2) * det(g, h)
    });
    let sigma = Sigma::from_fn(&mp, n, |g, x, y| {
        let (al, be) = split(g);
        (a * al * al + b * be * be) * det(x, y)
    });
    let closed = QTable::from_fn(&mp, n, |g, h, x, y| {
        let ((al, be), (al2, be2)) = (split(g), split(h));
        2 * (a * al * al2 + b * be * be2) * det(x, y)
    });
    let datum = Datum::new(mp, sigma, tau)?;
    Ok(Example { name: format!("trivial-actions p={p} a={a} b={b}"), datum, closed_form: Some(closed), realization: None })
}

/// With both actions trivial, `Q` splits as the coboundary of `σ` in `G`
/// times the coboundary of `τ` in `F`, each `f(hg) f(h)⁻¹ f(g)⁻¹`; for the
/// family above the `τ` part vanishes.
pub fn trivial_actions_split(d: &Datum) -> Report {
    let mp = &d.mp;
    let (f, g) = (mp.f(), mp.g());
    let (ng, nf) = (mp.ng(), mp.nf());
    let n = d.conductor() as i64;
    let s = |a: usize, x: usize, y: usize| d.sigma.exp(a, x, y) as i64;
    let t = |x: usize, a: usize, b: usize| d.tau.exp(x, a, b) as i64;
    let q = compute_q(d);
    let mut r = Report::new();
    r.push(Check::single("both actions trivial", mp.is_act_f_trivial() && mp.is_act_g_trivial()));
    r.push(sweep("Q is the product of the two coboundaries", &[ng, ng, nf, nf], Mode::Count, |u| {
        let (a, h, x, y) = (u[0], u[1], u[2], u[3]);
        let ds = s(g.mul(h, a), x, y) - s(h, x, y) - s(a, x, y);
        let dt = t(f.mul(x, y), h, a) - t(x, h, a) - t(y, h, a);
        (q.exp(a, h, x, y) as i64 - ds - dt) % n == 0
    }));
    r.push(sweep("coboundary of tau is trivial", &[ng, ng, nf, nf], Mode::Count, |u| {
        let (a, h, x, y) = (u[0], u[1], u[2], u[3]);
        (t(f.mul(x, y), h, a) - t(x, h, a) - t(y, h, a)) % n == 0
    }));
    r
}

/// The least unit of multiplicative order `q` modulo `p`.
pub fn unit_of_order(p: u64, q: u64) -> Result<u64, ExampleError> {
    if !is_prime(q) || p % q != 1 {
        return Err(ExampleError::NoOrderQUnit { p, q });
    }
    (2..p).find(|&v| pow_mod(v, q, p) == 1).ok_or(ExampleError::NoOrderQUnit { p, q })
}

/// `G = (F_p², +)` and `F = Z/q` with `g ◁ x = ν^x g` and `▷` trivial.
pub fn finite_field_pair(p: u64, q: u64) -> Result<(MatchedPair, GaloisField, u64), ExampleError> {
    let k = GaloisField::new(p)?;
    let nu = unit_of_order(p, q)?;
    let powers: Vec<usize> = (0..q).map(|x| k.scalar(pow_mod(nu, x, p) as i64)).collect();
    let mp = MatchedPair::semidirect(Group::cyclic(q as usize), k.additive_group(), move |g, x| k.mul(powers[x], g))?;
    Ok((mp, k, nu))
}

/// The finite-field family over `C = (F_p², +)`:
/// `z(g, x) = g [x]_ν`, `⟨χ(g, x), h⟩ = ζ_p^{2 tr(hg) [x]_ν}`,
/// `σ_g(x, y) = ζ_p^{tr(g²) ν^x [x]_ν [y]_ν}` and
/// `τ_x(g, h) = ζ_p^{r [x]_{ν²} det(g, h)}`.
///
/// Only the cocycle laws are enforced here; whether the result is braided
/// over `C` depends on `τ` being a one-cocycle in `x`, see
/// [`crate::realization::check_semidirect_split`].
pub fn finite_field_example(p: u64, q: u64, r: u64) -> Result<Example, ExampleError> {
    let (mp, k, nu) = finite_field_pair(p, q)?;
    let n = p as u32;
    let qn = |x: usize| q_number(nu, x as u64, p) as i64;
    let qn2 = |x: usize| q_number(nu * nu % p, x as u64, p) as i64;
    let sigma = Sigma::from_fn(&mp, n, |g, x, y| {
        k.trace(k.mul(g, g)) as i64 * pow_mod(nu, x as u64, p) as i64 * qn(x) * qn(y)
    });
    let tau = Tau::from_fn(&mp, n, |x, g, h| r as i64 * qn2(x) * k.det(g, h) as i64);
    let closed = QTable::from_fn(&mp, n, |g, h, x, y| 2 * k.trace(k.mul(h, g)) as i64 * qn(x) * qn(y));
    let c = AbelianGroup::new(vec![p, p])?;
    let cm = k.modulus() as i64;
    let real = Realization::new(
        &mp,
        c,
        n,
        |g, x| {
            let (j, l) = k.coords(k.mul(g, k.scalar(qn(x))));
            vec![j, l]
        },
        |g, x| {
            // on 1 and on a: 2 tr(g) [x] and 2 tr(a g) [x]
            let (j, l) = k.coords(g);
            let (j, l) = (j as i64, l as i64);
            vec![(4 * j * qn(x)).rem_euclid(p as i64) as u64, (4 * cm * l * qn(x)).rem_euclid(p as i64) as u64]
        },
    )?;
    let datum = Datum::new(mp, sigma, tau)?;
    Ok(Example {
        name: format!("finite-field p={p} q={q} r={r}"),
        datum,
        closed_form: Some(closed),
        realization: Some(real),
    })
}

/// All `α: Z/q → F_p²` with `α(0) = 0` and `α(x + y) = α(x) + ν^x α(y)`,
/// by brute force over maps, as tables of field elements.
pub fn enumerate_alpha(p: u64, q: u64) -> Result<Vec<Vec<usize>>, ExampleError> {
    let (_, k, nu) = finite_field_pair(p, q)?;
    let qu = q as usize;
    let size = k.order();
    let total = (size as u64).checked_pow(q as u32 - 1).filter(|&t| t <= 1 << 24);
    let Some(total) = total else {
        return Err(ExampleError::BadParameters(format!("{size}^{} maps is too many to enumerate", q - 1)));
    };
    let mut out = Vec::new();
    for code in 0..total {
        let mut alpha = vec![0usize; qu];
        let mut c = code;
        for v in alpha.iter_mut().skip(1) {
            *v = (c % size as u64) as usize;
            c /= size as u64;
        }
        let ok = (0..qu).all(|x| {
            (0..qu).all(|y| {
                let twisted = k.mul(k.scalar(pow_mod(nu, x as u64, p) as i64), alpha[y]);
                alpha[(x + y) % qu] == k.add(alpha[x], twisted)
            })
        });
        if ok {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// `{ r [·]_ν : r ∈ F_p² }`, in the order of `r`.
pub fn alpha_family(p: u64, q: u64) -> Result<Vec<Vec<usize>>, ExampleError> {
    let (_, k, nu) = finite_field_pair(p, q)?;
    Ok((0..k.order())
        .map(|r| (0..q).map(|x| k.mul(r, k.scalar(q_number(nu, x, p) as i64))).collect())
        .collect())
}

/// `F = Z/N`, `G = Z/M`, both actions trivial, conductor `MN`;
/// `σ_{b^s}(a^j, a^h) = ω^{N s [j + h ≥ N]}` and
/// `τ_{a^m}(b^s, b^t) = ζ^{st m(m-1)/2} μ^{M m [s + t ≥ M]}` with `ζ` of
/// order `gcd(M, N)`. `ω` and `μ` are exponents of `ζ_{MN}`.
pub fn cyclic_direct_product(n: u64, m: u64, omega: i64, mu: i64) -> Result<Example, ExampleError> {
    if n == 0 || m == 0 {
        return Err(ExampleError::BadParameters("orders must be positive".into()));
    }
    let d = gcd(m, n);
    if !(n * (n - 1) / 2).is_multiple_of(d) {
        return Err(ExampleError::BadParameters(format!("gcd({m}, {n}) = {d} does not divide {}", n * (n - 1) / 2)));
    }
    let cond = (m * n) as u32;
    let zeta = (m * n / d) as i64;
    let (nu, mu_) = (n as usize, m as usize);
    let mp = MatchedPair::trivial(Group::cyclic(nu), Group::cyclic(mu_));
    let sigma = Sigma::from_fn(&mp, cond, |s, j, h| omega * (n as i64) * s as i64 * i64::from(j + h >= nu));
    let tau = Tau::from_fn(&mp, cond, |x, s, t| {
        let x = x as i64;
        zeta * (s * t) as i64 * (x * (x - 1) / 2) + mu * m as i64 * x * i64::from(s + t >= mu_)
    });
    let datum = Datum::new(mp, sigma, tau)?;
    Ok(Example { name: format!("cyclic N={n} M={m} omega={omega} mu={mu}"), datum, closed_form: None, realization: None })
}

/// The realization over `C = Z/gcd(M, N)`: `z(b^h, a^j) = u^{hj}` and
/// `χ(b^h, a^j) = ζ^{hj}` on the generator `u`.
pub fn cyclic_realization(ex: &Example) -> Result<Realization, ExampleError> {
    let mp = &ex.datum.mp;
    let (n, m) = (mp.nf() as u64, mp.ng() as u64);
    let d = gcd(m, n);
    let c = if d == 1 { AbelianGroup::trivial() } else { AbelianGroup::new(vec![d])? };
    let cond = ex.datum.conductor();
    let one = |v: u64| if d == 1 { Vec::new() } else { vec![v % d] };
    Ok(Realization::new(mp, c, cond, |h, j| one((h * j) as u64), |h, j| one((h * j) as u64))?)
}

/// The two parameter sets for `M = 2`, `N = 2^n`: `ω = 1` and `ω = ζ_{2N}`.
pub fn kashina(n: u32, minus: bool) -> Result<Example, ExampleError> {
    if n == 0 {
        return Err(ExampleError::BadParameters("n must be positive".into()));
    }
    let big_n = 1u64 << n;
    let mut ex = cyclic_direct_product(big_n, 2, i64::from(minus), 0)?;
    ex.name = format!("kashina N={big_n} {}", if minus { "minus" } else { "plus" });
    Ok(ex)
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// For cyclic `F = ⟨a⟩` (generator index 1): builds
/// `χ(g, aⁱ) = γ(g) γ(g ◁ a) ⋯ γ(g ◁ a^{i-1})` and `z` likewise from `η`.
/// Fails with the first `g` at which the orbit product is nontrivial or the
/// result is not a one-cocycle in `g`.
pub fn cyclic_gamma_realization(
    mp: &MatchedPair,
    c: &AbelianGroup,
    conductor: u32,
    gamma: &[Character],
    eta: &[Vec<u64>],
) -> Result<Realization, ExampleError> {
    let (ng, nf) = (mp.ng(), mp.nf());
    let cyclic = nf == 1 || mp.f().element_order(1) == nf;
    if !cyclic || gamma.len() != ng || eta.len() != ng {
        return Err(ExampleError::BadParameters("F must be cyclic with generator 1, one entry per g".into()));
    }
    let mut chi = vec![vec![Character::trivial(c, conductor); nf]; ng];
    let mut z = vec![vec![c.zero(); nf]; ng];
    for g in 0..ng {
        let mut h = g;
        let mut x = 0;
        for _ in 0..nf {
            let nx = mp.f().mul(x, 1);
            chi[g][nx] = chi[g][x].mul(c, &gamma[h]);
            z[g][nx] = c.add(&z[g][x], &eta[h]);
            h = mp.act_g(h, 1);
            x = nx;
        }
        // a full orbit brings x back to the identity
        if !chi[g][0].is_trivial() || z[g][0].iter().any(|&e| e != 0) {
            return Err(ExampleError::GammaConditionFails { g });
        }
    }
    let real = Realization::new(mp, c.clone(), conductor, |g, x| z[g][x].clone(), |g, x| chi[g][x].coeffs().to_vec())?;
    let rep = real.check(mp);
    if let Some(bad) = rep.failed().next() {
        let g = bad.witness.as_ref().and_then(|w| w.first().copied()).unwrap_or(0);
        return Err(ExampleError::GammaConditionFails { g });
    }
    Ok(real)
}

/// `(γ, η)` recovered from a realization by restriction to `x = a`.
pub fn restrict_to_generator(mp: &MatchedPair, real: &Realization) -> (Vec<Character>, Vec<Vec<u64>>) {
    let x = usize::from(mp.nf() > 1);
    (0..mp.ng()).map(|g| (real.chi(g, x).clone(), real.z(g, x).to_vec())).unzip()
}

/// `S3 = ⟨(12)⟩ · ⟨(123)⟩` with trivial cocycles.
pub fn s3(conductor: u32) -> Example {
    let (s3, perms) = Group::symmetric(3);
    let idx = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation present");
    let r = idx(&[1, 2, 0]);
    let mp = MatchedPair::from_factorization(&s3, &[0, idx(&[1, 0, 2])], &[0, r, s3.mul(r, r)])
        .expect("S3 factors exactly");
    Example { name: "s3".into(), datum: Datum::trivial(mp, conductor), closed_form: None, realization: None }
}
