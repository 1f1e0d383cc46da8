//! The two cocycles twisting a bicrossed product, stored as exponent tables
//! over a common conductor `N` (value `ζ_N^e`).
//!
//! `σ_g(x, y)` lives at `[g][x][y]` and `τ_x(g, h)` at `[x][g][h]`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{solve_mod, Root};
use crate::matched_pair::{MatchedPair, MatchedPairError, MatchedPairJson};
use crate::report::{sweep, Mode, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("{what} table has {got} entries, expected {expected}")]
    Shape { what: &'static str, got: usize, expected: usize },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductors differ: {0} and {1}")]
    ConductorMismatch(u32, u32),
    #[error("{conductor} is not a multiple of {from}")]
    NotDivisible { from: u32, conductor: u32 },
    #[error("{check} fails at {tuple:?}")]
    CocycleFails { check: String, tuple: Vec<usize> },
    #[error("{check} fails at {tuple:?}")]
    NormalizationFails { check: String, tuple: Vec<usize> },
    #[error(transparent)]
    MatchedPair(#[from] MatchedPairError),
}

#[inline]
pub(crate) fn modn(v: i64, n: u32) -> u32 {
    v.rem_euclid(n as i64) as u32
}

fn rescaled(table: &[u32], from: u32, to: u32) -> Result<Vec<u32>, CocycleError> {
    if from == 0 || !to.is_multiple_of(from) {
        return Err(CocycleError::NotDivisible { from, conductor: to });
    }
    let k = to / from;
    Ok(table.iter().map(|&e| e * k).collect())
}

/// `σ_g(x, y)` exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sigma {
    nf: usize,
    conductor: u32,
    table: Vec<u32>,
}

/// `τ_x(g, h)` exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tau {
    ng: usize,
    conductor: u32,
    table: Vec<u32>,
}

/// `ν(g, x)` exponents; the diagonal map `δ_g x ↦ ν(g, x) δ_g x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gauge {
    nf: usize,
    conductor: u32,
    table: Vec<u32>,
}

impl Sigma {
    pub fn from_fn(mp: &MatchedPair, conductor: u32, f: impl Fn(usize, usize, usize) -> i64) -> Sigma {
        let (ng, nf) = (mp.ng(), mp.nf());
        let mut table = Vec::with_capacity(ng * nf * nf);
        for g in 0..ng {
            for x in 0..nf {
                for y in 0..nf {
                    table.push(modn(f(g, x, y), conductor));
                }
            }
        }
        Sigma { nf, conductor, table }
    }

    pub fn trivial(mp: &MatchedPair, conductor: u32) -> Sigma {
        Sigma::from_fn(mp, conductor, |_, _, _| 0)
    }

    pub fn from_nested(mp: &MatchedPair, conductor: u32, t: &[Vec<Vec<u32>>]) -> Result<Sigma, CocycleError> {
        let flat: Vec<u32> = t.iter().flatten().flatten().copied().collect();
        let expected = mp.ng() * mp.nf() * mp.nf();
        let shaped = t.len() == mp.ng() && t.iter().all(|r| r.len() == mp.nf() && r.iter().all(|c| c.len() == mp.nf()));
        if !shaped {
            return Err(CocycleError::Shape { what: "sigma", got: flat.len(), expected });
        }
        if conductor == 0 {
            return Err(CocycleError::ZeroConductor);
        }
        Ok(Sigma { nf: mp.nf(), conductor, table: flat.iter().map(|&e| e % conductor).collect() })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        self.table.chunks(self.nf * self.nf).map(|b| b.chunks(self.nf).map(<[u32]>::to_vec).collect()).collect()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    #[inline]
    pub fn exp(&self, g: usize, x: usize, y: usize) -> u32 {
        self.table[(g * self.nf + x) * self.nf + y]
    }

    pub fn value(&self, g: usize, x: usize, y: usize) -> Root {
        Root::new(self.conductor, self.exp(g, x, y) as i64)
    }

    /// Copy with one entry replaced; used to build corrupted data.
    pub fn with_entry(&self, g: usize, x: usize, y: usize, e: i64) -> Sigma {
        let mut s = self.clone();
        s.table[(g * self.nf + x) * self.nf + y] = modn(e, self.conductor);
        s
    }

    pub fn rescale(&self, conductor: u32) -> Result<Sigma, CocycleError> {
        Ok(Sigma { nf: self.nf, conductor, table: rescaled(&self.table, self.conductor, conductor)? })
    }

    /// `(∂f)_g(x, y) = f(g, x) f(g ◁ x, y) / f(g, xy)`
    pub fn coboundary(mp: &MatchedPair, f: &Gauge) -> Sigma {
        Sigma::from_fn(mp, f.conductor, |g, x, y| {
            f.exp(g, x) as i64 + f.exp(mp.act_g(g, x), y) as i64 - f.exp(g, mp.f().mul(x, y)) as i64
        })
    }

    fn shape_ok(&self, mp: &MatchedPair) -> bool {
        self.nf == mp.nf() && self.table.len() == mp.ng() * mp.nf() * mp.nf()
    }

    /// Cocycle law, both normalizations and the two derived inverse identities.
    pub fn check(&self, mp: &MatchedPair) -> Report {
        let (f, g) = (mp.f(), mp.g());
        let (ng, nf) = (mp.ng(), mp.nf());
        let n = self.conductor as i64;
        let mut r = Report::new();
        r.push(sweep("sigma cocycle", &[ng, nf, nf, nf], Mode::Count, |t| {
            let (a, x, y, z) = (t[0], t[1], t[2], t[3]);
            let lhs = self.exp(mp.act_g(a, x), y, z) as i64 + self.exp(a, x, f.mul(y, z)) as i64;
            let rhs = self.exp(a, f.mul(x, y), z) as i64 + self.exp(a, x, y) as i64;
            (lhs - rhs) % n == 0
        }));
        r.push(sweep("sigma normalized", &[ng, nf], Mode::Count, |t| {
            self.exp(t[0], t[1], 0) == 0 && self.exp(t[0], 0, t[1]) == 0
        }));
        r.push(sweep("sigma trivial over the identity of G", &[nf, nf], Mode::Count, |t| self.exp(0, t[0], t[1]) == 0));
        r.push(sweep("sigma inverse identity", &[ng, nf], Mode::Count, |t| {
            let (a, x) = (t[0], t[1]);
            self.exp(mp.act_g(a, x), f.inv(x), x) == self.exp(a, x, f.inv(x))
        }));
        r.push(sweep("sigma antipode identity", &[ng, nf], Mode::Count, |t| {
            let (a, x) = (t[0], t[1]);
            let v = mp.act_f(a, x);
            self.exp(g.inv(mp.act_g(a, x)), f.inv(v), v) == self.exp(g.inv(a), v, f.inv(v))
        }));
        r
    }

    /// First failure of [`Sigma::check`] as an error.
    pub fn validate(&self, mp: &MatchedPair) -> Result<(), CocycleError> {
        if !self.shape_ok(mp) {
            return Err(CocycleError::Shape { what: "sigma", got: self.table.len(), expected: mp.ng() * mp.nf() * mp.nf() });
        }
        first_failure(self.check(mp))
    }

    /// A gauge `f` with `σ = ∂f`, solved over `Z/N`; `f(1, x)` is left free
    /// (it may be nonzero), `f(g, 1) = 1`.
    pub fn coboundary_witness(&self, mp: &MatchedPair) -> Option<Gauge> {
        let (ng, nf) = (mp.ng(), mp.nf());
        let var = |g: usize, x: usize| g * (nf - 1) + (x - 1);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for g in 0..ng {
            for x in 1..nf {
                for y in 1..nf {
                    let mut row = vec![0i64; ng * (nf - 1)];
                    row[var(g, x)] += 1;
                    row[var(mp.act_g(g, x), y)] += 1;
                    let xy = mp.f().mul(x, y);
                    if xy != 0 {
                        row[var(g, xy)] -= 1;
                    }
                    rows.push(row);
                    rhs.push(self.exp(g, x, y) as i64);
                }
            }
        }
        if nf == 1 {
            return Some(Gauge::trivial(mp, self.conductor));
        }
        let sol = solve_mod(&rows, &rhs, self.conductor as u64)?;
        Some(Gauge::from_fn(mp, self.conductor, |g, x| if x == 0 { 0 } else { sol[var(g, x)] }))
    }
}

impl Tau {
    pub fn from_fn(mp: &MatchedPair, conductor: u32, f: impl Fn(usize, usize, usize) -> i64) -> Tau {
        let (ng, nf) = (mp.ng(), mp.nf());
        let mut table = Vec::with_capacity(nf * ng * ng);
        for x in 0..nf {
            for g in 0..ng {
                for h in 0..ng {
                    table.push(modn(f(x, g, h), conductor));
                }
            }
        }
        Tau { ng, conductor, table }
    }

    pub fn trivial(mp: &MatchedPair, conductor: u32) -> Tau {
        Tau::from_fn(mp, conductor, |_, _, _| 0)
    }

    pub fn from_nested(mp: &MatchedPair, conductor: u32, t: &[Vec<Vec<u32>>]) -> Result<Tau, CocycleError> {
        let flat: Vec<u32> = t.iter().flatten().flatten().copied().collect();
        let expected = mp.nf() * mp.ng() * mp.ng();
        let shaped = t.len() == mp.nf() && t.iter().all(|r| r.len() == mp.ng() && r.iter().all(|c| c.len() == mp.ng()));
        if !shaped {
            return Err(CocycleError::Shape { what: "tau", got: flat.len(), expected });
        }
        if conductor == 0 {
            return Err(CocycleError::ZeroConductor);
        }
        Ok(Tau { ng: mp.ng(), conductor, table: flat.iter().map(|&e| e % conductor).collect() })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        self.table.chunks(self.ng * self.ng).map(|b| b.chunks(self.ng).map(<[u32]>::to_vec).collect()).collect()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    #[inline]
    pub fn exp(&self, x: usize, g: usize, h: usize) -> u32 {
        self.table[(x * self.ng + g) * self.ng + h]
    }

    pub fn value(&self, x: usize, g: usize, h: usize) -> Root {
        Root::new(self.conductor, self.exp(x, g, h) as i64)
    }

    pub fn with_entry(&self, x: usize, g: usize, h: usize, e: i64) -> Tau {
        let mut t = self.clone();
        t.table[(x * self.ng + g) * self.ng + h] = modn(e, self.conductor);
        t
    }

    pub fn rescale(&self, conductor: u32) -> Result<Tau, CocycleError> {
        Ok(Tau { ng: self.ng, conductor, table: rescaled(&self.table, self.conductor, conductor)? })
    }

    fn shape_ok(&self, mp: &MatchedPair) -> bool {
        self.ng == mp.ng() && self.table.len() == mp.nf() * mp.ng() * mp.ng()
    }

    pub fn check(&self, mp: &MatchedPair) -> Report {
        let g = mp.g();
        let (ng, nf) = (mp.ng(), mp.nf());
        let n = self.conductor as i64;
        let mut r = Report::new();
        r.push(sweep("tau cocycle", &[nf, ng, ng, ng], Mode::Count, |t| {
            let (x, a, b, c) = (t[0], t[1], t[2], t[3]);
            let lhs = self.exp(x, g.mul(a, b), c) as i64 + self.exp(mp.act_f(c, x), a, b) as i64;
            let rhs = self.exp(x, b, c) as i64 + self.exp(x, a, g.mul(b, c)) as i64;
            (lhs - rhs) % n == 0
        }));
        r.push(sweep("tau normalized", &[nf, ng], Mode::Count, |t| {
            self.exp(t[0], t[1], 0) == 0 && self.exp(t[0], 0, t[1]) == 0
        }));
        r.push(sweep("tau trivial over the identity of F", &[ng, ng], Mode::Count, |t| self.exp(0, t[0], t[1]) == 0));
        r
    }

    pub fn validate(&self, mp: &MatchedPair) -> Result<(), CocycleError> {
        if !self.shape_ok(mp) {
            return Err(CocycleError::Shape { what: "tau", got: self.table.len(), expected: mp.nf() * mp.ng() * mp.ng() });
        }
        first_failure(self.check(mp))
    }
}

impl Gauge {
    pub fn from_fn(mp: &MatchedPair, conductor: u32, f: impl Fn(usize, usize) -> i64) -> Gauge {
        let nf = mp.nf();
        let table = (0..mp.ng()).flat_map(|g| (0..nf).map(move |x| (g, x))).map(|(g, x)| modn(f(g, x), conductor)).collect();
        Gauge { nf, conductor, table }
    }

    pub fn trivial(mp: &MatchedPair, conductor: u32) -> Gauge {
        Gauge::from_fn(mp, conductor, |_, _| 0)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    #[inline]
    pub fn exp(&self, g: usize, x: usize) -> u32 {
        self.table[g * self.nf + x]
    }

    pub fn value(&self, g: usize, x: usize) -> Root {
        Root::new(self.conductor, self.exp(g, x) as i64)
    }

    pub fn is_normalized(&self, mp: &MatchedPair) -> bool {
        (0..mp.ng()).all(|g| self.exp(g, 0) == 0) && (0..mp.nf()).all(|x| self.exp(0, x) == 0)
    }

    pub fn to_nested(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.nf).map(<[u32]>::to_vec).collect()
    }
}

fn first_failure(r: Report) -> Result<(), CocycleError> {
    match r.failed().next() {
        None => Ok(()),
        Some(c) => {
            let tuple = c.witness.clone().unwrap_or_default();
            let check = c.name.clone();
            if c.name.contains("normalized") || c.name.contains("over the identity") {
                Err(CocycleError::NormalizationFails { check, tuple })
            } else {
                Err(CocycleError::CocycleFails { check, tuple })
            }
        }
    }
}

/// A matched pair with a validated pair of cocycles over one conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Datum {
    pub mp: MatchedPair,
    pub sigma: Sigma,
    pub tau: Tau,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumJson {
    #[serde(flatten)]
    pub mp: MatchedPairJson,
    pub conductor: u32,
    pub sigma: Vec<Vec<Vec<u32>>>,
    pub tau: Vec<Vec<Vec<u32>>>,
}

impl Datum {
    pub fn new(mp: MatchedPair, sigma: Sigma, tau: Tau) -> Result<Datum, CocycleError> {
        if sigma.conductor != tau.conductor {
            return Err(CocycleError::ConductorMismatch(sigma.conductor, tau.conductor));
        }
        sigma.validate(&mp)?;
        tau.validate(&mp)?;
        Ok(Datum { mp, sigma, tau })
    }

    pub fn trivial(mp: MatchedPair, conductor: u32) -> Datum {
        let sigma = Sigma::trivial(&mp, conductor);
        let tau = Tau::trivial(&mp, conductor);
        Datum { mp, sigma, tau }
    }

    pub fn conductor(&self) -> u32 {
        self.sigma.conductor
    }

    pub fn dim(&self) -> usize {
        self.mp.ng() * self.mp.nf()
    }

    pub fn rescale(&self, conductor: u32) -> Result<Datum, CocycleError> {
        Ok(Datum { mp: self.mp.clone(), sigma: self.sigma.rescale(conductor)?, tau: self.tau.rescale(conductor)? })
    }

    pub fn check(&self) -> Report {
        let mut r = self.sigma.check(&self.mp);
        r.extend(self.tau.check(&self.mp));
        r
    }

    pub fn to_json(&self) -> DatumJson {
        DatumJson {
            mp: self.mp.to_json(),
            conductor: self.conductor(),
            sigma: self.sigma.to_nested(),
            tau: self.tau.to_nested(),
        }
    }

    pub fn from_json(j: &DatumJson) -> Result<Datum, CocycleError> {
        let mp = MatchedPair::from_json(&j.mp)?;
        let sigma = Sigma::from_nested(&mp, j.conductor, &j.sigma)?;
        let tau = Tau::from_nested(&mp, j.conductor, &j.tau)?;
        Datum::new(mp, sigma, tau)
    }
}
