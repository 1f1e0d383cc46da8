//! Diagonal realizations `(z, χ)` of a bicrossed product over an abelian
//! group `C`: `δ_g x` is acted on by the character `χ(g, x)` and coacted on
//! by the group element `z(g, x)`, so that
//! `c(δ_g x ⊗ δ_h y) = ⟨χ(h, y), z(g, x)⟩ δ_h y ⊗ δ_g x`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::snf::{from_i64, quotient};
use crate::algebra::{AbelianError, AbelianGroup, Character, Group};
use crate::bicrossed::Bicrossed;
use crate::braiding::{compute_q, QTable};
use crate::cocycles::{modn, Datum};
use crate::hopf::{check_exact, MonomialMap, Tables};
use crate::matched_pair::{MatchedPair, MatchedPairError};
use crate::report::{sweep, Check, Mode, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("realization tables do not match the matched pair")]
    Shape,
    #[error("character conductor {0} differs from the cocycle conductor {1}")]
    ConductorMismatch(u32, u32),
    #[error("{check} fails at {tuple:?}")]
    ConditionFails { check: String, tuple: Vec<usize> },
    #[error("the character attached to (g={g}, x={x}) does not vanish on the relations")]
    CharacterIllDefined { g: usize, x: usize },
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    MatchedPair(#[from] MatchedPairError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    group: AbelianGroup,
    conductor: u32,
    nf: usize,
    z: Vec<Vec<u64>>,
    chi: Vec<Character>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RealizationJson {
    pub conductor: u32,
    pub invariant_factors: Vec<u64>,
    /// `z[g][x]` as an exponent vector against the invariant factors.
    pub z: Vec<Vec<Vec<u64>>>,
    /// `chi[g][x]` as its values on the cyclic generators, in `μ_N` exponents.
    pub chi: Vec<Vec<Vec<u32>>>,
}

impl Realization {
    pub fn new(
        mp: &MatchedPair,
        group: AbelianGroup,
        conductor: u32,
        z: impl Fn(usize, usize) -> Vec<u64>,
        chi: impl Fn(usize, usize) -> Vec<u64>,
    ) -> Result<Realization, RealizationError> {
        let (ng, nf) = (mp.ng(), mp.nf());
        let mut zs = Vec::with_capacity(ng * nf);
        let mut chis = Vec::with_capacity(ng * nf);
        for g in 0..ng {
            for x in 0..nf {
                let v = z(g, x);
                if v.len() != group.rank() {
                    return Err(RealizationError::Shape);
                }
                zs.push(group.reduce(&v.iter().map(|&e| e as i64).collect::<Vec<_>>()));
                chis.push(Character::new(&group, conductor, chi(g, x))?);
            }
        }
        Ok(Realization { group, conductor, nf, z: zs, chi: chis })
    }

    pub fn trivial(mp: &MatchedPair, conductor: u32) -> Realization {
        Realization::new(mp, AbelianGroup::trivial(), conductor, |_, _| Vec::new(), |_, _| Vec::new())
            .expect("trivial realization")
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn z(&self, g: usize, x: usize) -> &[u64] {
        &self.z[g * self.nf + x]
    }

    pub fn chi(&self, g: usize, x: usize) -> &Character {
        &self.chi[g * self.nf + x]
    }

    /// `⟨χ(h, y), z(g, x)⟩` as an exponent: the braiding scalar on `δ_g x ⊗ δ_h y`.
    pub fn pairing(&self, g: usize, x: usize, h: usize, y: usize) -> u32 {
        self.chi(h, y).pair(&self.group, self.z(g, x)).exp()
    }

    /// The braiding this realization induces.
    pub fn braiding(&self, mp: &MatchedPair) -> QTable {
        QTable::from_fn(mp, self.conductor, |g, h, x, y| self.pairing(g, x, h, y) as i64)
    }

    /// A copy with one character replaced, for mutation tests.
    pub fn with_chi(&self, g: usize, x: usize, coeffs: Vec<u64>) -> Result<Realization, RealizationError> {
        let mut out = self.clone();
        out.chi[g * self.nf + x] = Character::new(&self.group, self.conductor, coeffs)?;
        Ok(out)
    }

    /// The four one-cocycle conditions on `z` and `χ` and their normalizations.
    pub fn check(&self, mp: &MatchedPair) -> Report {
        let (f, g) = (mp.f(), mp.g());
        let (ng, nf) = (mp.ng(), mp.nf());
        let c = &self.group;
        let chi_mul = |a: &Character, b: &Character| a.mul(c, b);
        let mut r = Report::new();
        r.push(sweep("chi multiplicative along the right action", &[ng, nf, nf], Mode::Count, |t| {
            let (a, x, y) = (t[0], t[1], t[2]);
            *self.chi(a, f.mul(x, y)) == chi_mul(self.chi(a, x), self.chi(mp.act_g(a, x), y))
        }));
        r.push(sweep("chi multiplicative along the left action", &[ng, ng, nf], Mode::Count, |t| {
            let (a, b, x) = (t[0], t[1], t[2]);
            *self.chi(g.mul(a, b), x) == chi_mul(self.chi(a, mp.act_f(b, x)), self.chi(b, x))
        }));
        r.push(sweep("z multiplicative along the right action", &[ng, nf, nf], Mode::Count, |t| {
            let (a, x, y) = (t[0], t[1], t[2]);
            self.z(a, f.mul(x, y)) == c.add(self.z(a, x), self.z(mp.act_g(a, x), y))
        }));
        r.push(sweep("z multiplicative along the left action", &[ng, ng, nf], Mode::Count, |t| {
            let (a, b, x) = (t[0], t[1], t[2]);
            self.z(g.mul(a, b), x) == c.add(self.z(a, mp.act_f(b, x)), self.z(b, x))
        }));
        r.push(sweep("z and chi normalized", &[ng, nf], Mode::Count, |t| {
            let (a, x) = (t[0], t[1]);
            let edge = a == 0 || x == 0;
            !edge || (self.z(a, x).iter().all(|&e| e == 0) && self.chi(a, x).is_trivial())
        }));
        r
    }

    pub fn validate(&self, mp: &MatchedPair) -> Result<(), RealizationError> {
        if self.z.len() != mp.ng() * mp.nf() || self.nf != mp.nf() {
            return Err(RealizationError::Shape);
        }
        match self.check(mp).failed().next() {
            None => Ok(()),
            Some(c) => Err(RealizationError::ConditionFails {
                check: c.name.clone(),
                tuple: c.witness.clone().unwrap_or_default(),
            }),
        }
    }

    /// Inverse of [`Realization::to_json`]. A generator value must be a
    /// multiple of `N/d_i`, since it is the image of an element of order `d_i`.
    pub fn from_json(mp: &MatchedPair, j: &RealizationJson) -> Result<Realization, RealizationError> {
        let group = AbelianGroup::new(j.invariant_factors.clone())?;
        let (ng, nf) = (mp.ng(), mp.nf());
        let rows_ok = j.z.iter().all(|r| r.len() == nf) && j.chi.iter().all(|r| r.len() == nf);
        if j.z.len() != ng || j.chi.len() != ng || !rows_ok {
            return Err(RealizationError::Shape);
        }
        let n = j.conductor as u64;
        let mut coeffs = vec![Vec::new(); ng * nf];
        for g in 0..ng {
            for x in 0..nf {
                let vals = &j.chi[g][x];
                if vals.len() != group.rank() {
                    return Err(RealizationError::Shape);
                }
                for (&v, &d) in vals.iter().zip(group.factors()) {
                    if !n.is_multiple_of(d) {
                        return Err(AbelianError::ConductorTooSmall { factor: d, conductor: j.conductor }.into());
                    }
                    let step = n / d;
                    if !(v as u64).is_multiple_of(step) {
                        return Err(RealizationError::BadInput(format!(
                            "chi[{g}][{x}] sends a generator of order {d} to exponent {v}, not a multiple of {step}"
                        )));
                    }
                    coeffs[g * nf + x].push(v as u64 / step);
                }
            }
        }
        Realization::new(mp, group, j.conductor, |g, x| j.z[g][x].clone(), |g, x| coeffs[g * nf + x].clone())
    }

    pub fn to_json(&self, mp: &MatchedPair) -> RealizationJson {
        let (ng, nf) = (mp.ng(), mp.nf());
        let gens: Vec<Vec<u64>> = (0..self.group.rank())
            .map(|i| (0..self.group.rank()).map(|j| u64::from(i == j)).collect())
            .collect();
        RealizationJson {
            conductor: self.conductor,
            invariant_factors: self.group.factors().to_vec(),
            z: (0..ng).map(|g| (0..nf).map(|x| self.z(g, x).to_vec()).collect()).collect(),
            chi: (0..ng)
                .map(|g| {
                    (0..nf)
                        .map(|x| gens.iter().map(|v| self.chi(g, x).pair(&self.group, v).exp()).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

/// Exponents of the pairing term, the σ part and the τ part of the
/// realization condition at `(s, t, x, y)`.
fn condition_parts(d: &Datum, real: &Realization, u: &[usize]) -> (i64, i64, i64) {
    let mp = &d.mp;
    let (f, g) = (mp.f(), mp.g());
    let s = |a: usize, x: usize, y: usize| d.sigma.exp(a, x, y) as i64;
    let t = |x: usize, a: usize, b: usize| d.tau.exp(x, a, b) as i64;
    let (ss, tt, x, y) = (u[0], u[1], u[2], u[3]);
    let v = mp.act_f(ss, x);
    let w = mp.act_g(ss, x);
    let tv = mp.act_g(tt, v);
    let wy = mp.act_f(w, y);
    let pair = real.pairing(ss, x, tv, wy) as i64;
    let sig = s(g.mul(tt, ss), x, y) - s(tt, v, wy) - s(ss, x, y);
    let tau = t(f.mul(x, y), tt, ss) - t(x, tt, ss) - t(y, tv, w);
    (pair, sig, tau)
}

/// The two ways of splitting the realization condition into a σ part and a
/// τ part, with the pairing on either side. These are sufficient, not
/// necessary, so a failing split is information rather than an error.
pub fn split_conditions(d: &Datum, real: &Realization) -> Report {
    let (ng, nf) = (d.mp.ng(), d.mp.nf());
    let n = d.conductor() as i64;
    let dims = [ng, ng, nf, nf];
    let parts = |u: &[usize]| condition_parts(d, real, u);
    let mut rep = Report::new();
    rep.push(sweep("sigma split with the pairing", &dims, Mode::Count, |u| {
        let (pair, sig, _) = parts(u);
        (sig - pair) % n == 0
    }));
    rep.push(sweep("tau split without the pairing", &dims, Mode::Count, |u| parts(u).2 % n == 0));
    rep.push(sweep("sigma split without the pairing", &dims, Mode::Count, |u| parts(u).1 % n == 0));
    rep.push(sweep("tau split with the pairing", &dims, Mode::Count, |u| {
        let (pair, _, tau) = parts(u);
        (tau - pair) % n == 0
    }));
    rep
}

/// The realization condition on `(σ, τ, z, χ)`, agreement of the induced
/// braiding with `Q`, and the implications between the condition and the
/// splits of [`split_conditions`].
pub fn check_braid_c_chi(d: &Datum, real: &Realization) -> Report {
    let mp = &d.mp;
    let (ng, nf) = (mp.ng(), mp.nf());
    let n = d.conductor() as i64;
    let mut rep = Report::new();
    let same = real.conductor() == d.conductor() && real.z.len() == ng * nf && real.nf == nf;
    rep.push(Check::single("realization matches the datum", same));
    if !same {
        return rep;
    }
    rep.extend(real.check(mp));
    let dims = [ng, ng, nf, nf];
    let full = sweep("realization condition", &dims, Mode::Count, |u| {
        let (pair, sig, tau) = condition_parts(d, real, u);
        (sig + tau - pair) % n == 0
    });
    let q = compute_q(d);
    let agree = sweep("pairing reproduces Q", &dims, Mode::Count, |u| {
        let (gg, h, x, y) = (u[0], u[1], u[2], u[3]);
        real.pairing(gg, x, h, y) == q.exp(gg, h, x, y)
    });
    let splits = split_conditions(d, real);
    let ok = |name: &str| splits.get(name).is_some_and(Check::passed);
    let a = full.passed();
    let (b, c) = (ok("sigma split with the pairing"), ok("tau split without the pairing"));
    let (b2, c2) = (ok("sigma split without the pairing"), ok("tau split with the pairing"));
    let two_of_three = |a: bool, b: bool, c: bool| (a || !(b && c)) && (b || !(a && c)) && (c || !(a && b));
    rep.push(Check::single("any two of the first splitting imply the third", two_of_three(a, b, c)));
    rep.push(Check::single("any two of the second splitting imply the third", two_of_three(a, b2, c2)));
    rep.push(Check::single("realization condition holds iff the pairing reproduces Q", a == agree.passed()));
    rep.push(full);
    rep.push(agree);
    rep
}

/// The semidirect specialization (`▷` trivial): the σ condition with the
/// pairing `⟨χ(s ◁ x, y), z(t, x)⟩` as stated for that case, and `τ` as a
/// one-cocycle `x ↦ τ_x` for the action `(x.f)(t, s) = f(t ◁ x, s ◁ x)`.
/// When the σ condition holds, braidedness must coincide with the second;
/// any dataset where it does not is reported by the last check.
pub fn check_semidirect_split(d: &Datum, real: &Realization) -> Report {
    let mp = &d.mp;
    let (f, g) = (mp.f(), mp.g());
    let (ng, nf) = (mp.ng(), mp.nf());
    let n = d.conductor() as i64;
    let s = |a: usize, x: usize, y: usize| d.sigma.exp(a, x, y) as i64;
    let t = |x: usize, a: usize, b: usize| d.tau.exp(x, a, b) as i64;
    let mut rep = Report::new();
    rep.push(Check::single("left action on F trivial", mp.is_act_f_trivial()));
    let dims = [ng, ng, nf, nf];
    let sig = sweep("sigma condition for the semidirect case", &dims, Mode::Count, |u| {
        let (tt, ss, x, y) = (u[0], u[1], u[2], u[3]);
        let pair = real.pairing(tt, x, mp.act_g(ss, x), y) as i64;
        (s(g.mul(tt, ss), x, y) - pair - s(ss, x, y) - s(tt, x, y)) % n == 0
    });
    let tau = sweep("tau is a one-cocycle on F", &dims, Mode::Count, |u| {
        let (tt, ss, x, y) = (u[0], u[1], u[2], u[3]);
        (t(f.mul(x, y), tt, ss) - t(x, tt, ss) - t(y, mp.act_g(tt, x), mp.act_g(ss, x))) % n == 0
    });
    let general = check_braid_c_chi(d, real);
    let full = general.get("realization condition").is_some_and(Check::passed);
    let agree = !sig.passed() || tau.passed() == full;
    rep.push(sig);
    rep.push(tau);
    rep.push(Check::single("semidirect criterion agrees with the realization condition", agree));
    rep
}

/// Which side of the pairing carries the first pair of arguments of `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// `⟨χ(g, x), z(h, y)⟩ = Q^{x,y}_{g,h}`, as the defining formula is written.
    Literal,
    /// `⟨χ(h, y), z(g, x)⟩ = Q^{x,y}_{g,h}`, which is what the braiding needs.
    #[default]
    Braiding,
}

/// Builds `C = (Z/N)^{G×F} / relations` with `z(g, x)` the class of the
/// generator `e(g, x)` and characters read off `Q`, where `N` is the exponent
/// of `Q`. Relations are the one-cocycle laws of `z`.
pub fn universal_realization(d: &Datum, orientation: Orientation) -> Result<Realization, RealizationError> {
    realization_from_q(&d.mp, &compute_q(d), orientation)
}

/// [`universal_realization`] for an arbitrary table `Q`; the characters are
/// well defined exactly when `Q` obeys the multiplicativity laws matching
/// the orientation.
pub fn realization_from_q(mp: &MatchedPair, q: &QTable, orientation: Orientation) -> Result<Realization, RealizationError> {
    let (f, g) = (mp.f(), mp.g());
    let (ng, nf) = (mp.ng(), mp.nf());
    if q.dims() != (ng, nf) {
        return Err(RealizationError::Shape);
    }
    let big_n = q.exponent().max(1) as i64;
    let k = ng * nf;
    let e = |a: usize, x: usize| a * nf + x;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut push = |terms: [(usize, i64); 3]| {
        let mut row = vec![0i64; k];
        for (i, c) in terms {
            row[i] += c;
        }
        if row.iter().any(|&v| v != 0) {
            rows.push(row);
        }
    };
    for a in 0..ng {
        for x in 0..nf {
            for y in 0..nf {
                push([(e(a, f.mul(x, y)), 1), (e(a, x), -1), (e(mp.act_g(a, x), y), -1)]);
            }
            for b in 0..ng {
                push([(e(g.mul(a, b), x), 1), (e(a, mp.act_f(b, x)), -1), (e(b, x), -1)]);
            }
        }
    }
    for i in 0..k {
        let mut row = vec![0i64; k];
        row[i] = big_n;
        rows.push(row);
    }
    rows.sort();
    rows.dedup();

    // value of the character attached to (a, x) on the generator e(b, y)
    let value = |a: usize, x: usize, b: usize, y: usize| -> i64 {
        match orientation {
            Orientation::Literal => q.exp(a, b, x, y) as i64,
            Orientation::Braiding => q.exp(b, a, y, x) as i64,
        }
    };
    let cond = q.conductor() as i64;
    for a in 0..ng {
        for x in 0..nf {
            let killed = rows.iter().all(|row| {
                let s: i64 = (0..k).filter(|&i| row[i] != 0).map(|i| row[i] * value(a, x, i / nf, i % nf)).sum();
                s.rem_euclid(cond) == 0
            });
            if !killed {
                return Err(RealizationError::CharacterIllDefined { g: a, x });
            }
        }
    }

    let pres = quotient(&from_i64(&rows), k);
    let factors: Vec<u64> = pres.factors.iter().map(|d| d.to_u64().expect("finite quotient")).collect();
    let group = AbelianGroup::new(factors.clone())?;
    let to_u = |v: &BigInt| v.to_u64().expect("reduced coordinate");
    let coords: Vec<Vec<u64>> = pres.coords.iter().map(|c| c.iter().map(to_u).collect()).collect();
    let lift_value = |a: usize, x: usize, gen: &[BigInt]| -> i64 {
        gen.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let c = (c % BigInt::from(cond)).to_i64().unwrap();
                c * value(a, x, i / nf, i % nf)
            })
            .sum::<i64>()
            .rem_euclid(cond)
    };
    let chi_coeffs = |a: usize, x: usize| -> Vec<u64> {
        pres.lift
            .iter()
            .zip(&factors)
            .map(|(gen, &dd)| {
                // ζ_N^{v} = ζ_N^{(N/d) c} on the generator of order d
                let v = lift_value(a, x, gen) as u64;
                let step = cond as u64 / dd;
                v / step
            })
            .collect()
    };
    for (&dd, _) in factors.iter().zip(&pres.lift) {
        if !(cond as u64).is_multiple_of(dd) {
            return Err(RealizationError::ConductorMismatch(dd as u32, q.conductor()));
        }
    }
    Realization::new(mp, group, q.conductor(), |a, x| coords[e(a, x)].clone(), chi_coeffs)
}

/// The Radford biproduct `R # kC`, an ordinary Hopf algebra with basis
/// `δ_g x # u` at index `(g |F| + x) |C| + u`.
#[derive(Debug, Clone)]
pub struct Biproduct {
    ng: usize,
    nf: usize,
    nc: usize,
    c: Group,
    tables: Tables,
}

impl Biproduct {
    pub fn new(r: &Bicrossed, real: &Realization) -> Result<Biproduct, RealizationError> {
        let d = r.datum();
        let mp = &d.mp;
        if real.conductor() != d.conductor() {
            return Err(RealizationError::ConductorMismatch(real.conductor(), d.conductor()));
        }
        let (ng, nf) = (mp.ng(), mp.nf());
        let cg = real.group();
        let c = cg.to_group();
        let nc = c.order();
        let elems: Vec<Vec<u64>> = cg.elements().collect();
        let zi: Vec<usize> = (0..ng * nf).map(|b| cg.index(real.z(b / nf, b % nf))).collect();
        let n = d.conductor();
        let t = r.tables();
        let dim = ng * nf * nc;
        let idx = |b: usize, u: usize| b * nc + u;
        let sum = |es: &[i64]| modn(es.iter().sum(), n);

        let mut mult = vec![None; dim * dim];
        for b1 in 0..ng * nf {
            for b2 in 0..ng * nf {
                let Some((e, b3)) = t.mul(b1, b2) else { continue };
                let ch = real.chi(b2 / nf, b2 % nf);
                for u in 0..nc {
                    let pe = ch.pair(cg, &elems[u]).exp();
                    for v in 0..nc {
                        mult[idx(b1, u) * dim + idx(b2, v)] = Some((sum(&[e as i64, pe as i64]), idx(b3, c.mul(u, v))));
                    }
                }
            }
        }
        let mut comult = Vec::with_capacity(dim);
        let mut antipode = Vec::with_capacity(dim);
        for b in 0..ng * nf {
            for u in 0..nc {
                comult.push(
                    t.comult[b]
                        .iter()
                        .map(|&(e, l, rr)| (e, idx(l, c.mul(zi[rr], u)), idx(rr, u)))
                        .collect::<Vec<_>>(),
                );
                // S(r # u) = (1 # (z u)⁻¹)(S(r) # 1)
                let (e, sb) = t.antipode[b];
                let w = c.inv(c.mul(zi[b], u));
                let pe = real.chi(sb / nf, sb % nf).pair(cg, &elems[w]).exp();
                antipode.push((sum(&[e as i64, pe as i64]), idx(sb, w)));
            }
        }
        let counit = (0..dim).map(|i| t.counit[i / nc]).collect();
        let unit = t.unit.iter().map(|&b| idx(b, 0)).collect();
        let tables = Tables { dim, conductor: n, mult, comult, antipode, counit, unit, braid: vec![0; dim * dim] };
        Ok(Biproduct { ng, nf, nc, c, tables })
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn dim(&self) -> usize {
        self.tables.dim
    }

    pub fn index(&self, g: usize, x: usize, u: usize) -> usize {
        (g * self.nf + x) * self.nc + u
    }

    /// All Hopf axioms with the plain flip.
    pub fn verify(&self) -> Report {
        self.tables.check_hopf("coproduct multiplicative")
    }

    /// `k^G → R # kC → kF ⊗ kC` and `k^G ⊗ kC → R # kC → kF`, with every map
    /// checked to be a Hopf map and each sequence checked to be exact.
    pub fn exact_sequences(&self, mp: &MatchedPair) -> Report {
        let n = self.tables.conductor;
        let (ng, nf, nc) = (self.ng, self.nf, self.nc);
        let fun_g = Tables::function_algebra(mp.g(), n);
        let alg_f = Tables::group_algebra(mp.f(), n);
        let alg_c = Tables::group_algebra(&self.c, n);
        let fc = alg_f.tensor(&alg_c);
        let gc = fun_g.tensor(&alg_c);

        let iota1 = MonomialMap { image: (0..ng).map(|a| Some((0, self.index(a, 0, 0)))).collect() };
        let pi1 = MonomialMap {
            image: (0..self.dim())
                .map(|i| {
                    let (b, u) = (i / nc, i % nc);
                    (b / nf == 0).then_some((0, (b % nf) * nc + u))
                })
                .collect(),
        };
        let iota2 = MonomialMap { image: (0..ng * nc).map(|i| Some((0, self.index(i / nc, 0, i % nc)))).collect() };
        let pi2 = MonomialMap {
            image: (0..self.dim()).map(|i| (i / nc / nf == 0).then_some((0, (i / nc) % nf))).collect(),
        };
        let mut r = Report::new();
        r.extend(iota1.check_hopf_map("first inclusion", &fun_g, &self.tables));
        r.extend(pi1.check_hopf_map("first projection", &self.tables, &fc));
        r.extend(check_exact("first sequence", &fun_g, &self.tables, &fc, &iota1, &pi1));
        r.extend(iota2.check_hopf_map("second inclusion", &gc, &self.tables));
        r.extend(pi2.check_hopf_map("second projection", &self.tables, &alg_f));
        r.extend(check_exact("second sequence", &gc, &self.tables, &alg_f, &iota2, &pi2));
        r
    }
}

/// All `z: G × F → A` satisfying the one-cocycle laws when `▷` is trivial,
/// found as one-cocycles `F → Hom(G, A)`. Each map is a table `[g][x]` of
/// exponent vectors.
pub fn enumerate_semidirect_z(mp: &MatchedPair, a: &AbelianGroup) -> Result<Vec<Vec<Vec<Vec<u64>>>>, RealizationError> {
    if !mp.is_act_f_trivial() {
        return Err(MatchedPairError::NotSemidirect.into());
    }
    let (f, g) = (mp.f(), mp.g());
    let (ng, nf) = (mp.ng(), mp.nf());
    let homs = homomorphisms(g, a);
    let fgens = f.generators();
    let mut out = Vec::new();
    let mut choice = vec![0usize; fgens.len()];
    loop {
        // φ_x = z(·, x); extend along φ_{x s}(h) = φ_x(h) + φ_s(h ◁ x)
        let mut phi: Vec<Option<Vec<Vec<u64>>>> = vec![None; nf];
        phi[0] = Some(vec![a.zero(); ng]);
        let mut queue = vec![0usize];
        let mut consistent = true;
        while let Some(x) = queue.pop() {
            for (k, &s) in fgens.iter().enumerate() {
                let hs = &homs[choice[k]];
                let px = phi[x].as_ref().unwrap();
                let next: Vec<Vec<u64>> = (0..ng).map(|h| a.add(&px[h], &hs[mp.act_g(h, x)])).collect();
                let xs = f.mul(x, s);
                match &phi[xs] {
                    None => {
                        phi[xs] = Some(next);
                        queue.push(xs);
                    }
                    Some(old) => consistent &= *old == next,
                }
            }
        }
        if consistent {
            let z: Vec<Vec<Vec<u64>>> =
                (0..ng).map(|h| (0..nf).map(|x| phi[x].as_ref().unwrap()[h].clone()).collect()).collect();
            let ok = (0..ng).all(|h| {
                (0..nf).all(|x| {
                    (0..nf).all(|y| z[h][f.mul(x, y)] == a.add(&z[h][x], &z[mp.act_g(h, x)][y]))
                        && (0..ng).all(|k| z[g.mul(h, k)][x] == a.add(&z[h][x], &z[k][x]))
                })
            });
            if ok {
                out.push(z);
            }
        }
        // odometer over generator images
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < homs.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `Hom(G, A)` as tables indexed by the elements of `G`.
pub fn homomorphisms(g: &Group, a: &AbelianGroup) -> Vec<Vec<Vec<u64>>> {
    let gens = g.generators();
    let elems: Vec<Vec<u64>> = a.elements().collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let mut img: Vec<Option<Vec<u64>>> = vec![None; g.order()];
        img[0] = Some(a.zero());
        let mut queue = vec![0usize];
        let mut ok = true;
        while let Some(x) = queue.pop() {
            for (k, &s) in gens.iter().enumerate() {
                let v = a.add(img[x].as_ref().unwrap(), &elems[choice[k]]);
                let xs = g.mul(x, s);
                match &img[xs] {
                    None => {
                        img[xs] = Some(v);
                        queue.push(xs);
                    }
                    Some(old) => ok &= *old == v,
                }
            }
        }
        if ok {
            let table: Vec<Vec<u64>> = img.into_iter().map(Option::unwrap).collect();
            let hom = (0..g.order()).all(|x| (0..g.order()).all(|y| table[g.mul(x, y)] == a.add(&table[x], &table[y])));
            if hom {
                out.push(table);
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < elems.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `z_ψ(g, x) = ψ(g ▷ x) - ψ(x)` for a map `ψ: F → A`; a homomorphism `ψ`
/// makes it a one-cocycle in both variables.
pub fn coboundary_z(mp: &MatchedPair, a: &AbelianGroup, psi: &[Vec<u64>]) -> Vec<Vec<Vec<u64>>> {
    (0..mp.ng())
        .map(|g| (0..mp.nf()).map(|x| a.add(&psi[mp.act_f(g, x)], &a.neg(&psi[x]))).collect())
        .collect()
}
