//! The bicrossed product `R = k^G ⊗ kF` with basis `δ_g x` at index `g |F| + x`.
//!
//! * `(δ_g x)(δ_h y) = [g ◁ x = h] σ_g(x, y) δ_g(xy)`
//! * `Δ(δ_g x) = Σ_t τ_x(t, t⁻¹g) δ_t(t⁻¹g ▷ x) ⊗ δ_{t⁻¹g} x`
//! * `ε(δ_g x) = [g = 1]`, `1 = Σ_g δ_g`

use serde::Serialize;
use thiserror::Error;

use crate::braiding::{compute_q, QTable};
use crate::cocycles::{modn, Datum, Gauge};
use crate::hopf::{Element, HopfError, Mono, Tables, Tensor};
use crate::matched_pair::{Inverse, Square};
use crate::report::{sweep, Check, Mode, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BicrossedError {
    #[error("braiding table has shape {got:?}, expected {expected:?}")]
    BraidingShape { got: (usize, usize), expected: (usize, usize) },
    #[error("braiding conductor {0} differs from the cocycle conductor {1}")]
    ConductorMismatch(u32, u32),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Debug, Clone)]
pub struct Bicrossed {
    datum: Datum,
    q: QTable,
    tables: Tables,
}

impl Bicrossed {
    /// Builds `R` with its canonical braiding.
    pub fn new(datum: Datum) -> Bicrossed {
        let q = compute_q(&datum);
        Bicrossed::with_braiding(datum, q).expect("canonical braiding has the right shape")
    }

    /// Builds `R` with an arbitrary diagonal braiding, e.g. to exhibit failures.
    pub fn with_braiding(datum: Datum, q: QTable) -> Result<Bicrossed, BicrossedError> {
        let mp = &datum.mp;
        let (ng, nf) = (mp.ng(), mp.nf());
        if q.dims() != (ng, nf) {
            return Err(BicrossedError::BraidingShape { got: q.dims(), expected: (ng, nf) });
        }
        if q.conductor() != datum.conductor() {
            return Err(BicrossedError::ConductorMismatch(q.conductor(), datum.conductor()));
        }
        let (f, g) = (mp.f(), mp.g());
        let dim = ng * nf;
        let idx = |a: usize, x: usize| a * nf + x;
        let mut mult = vec![None; dim * dim];
        for a in 0..ng {
            for x in 0..nf {
                let h = mp.act_g(a, x);
                for y in 0..nf {
                    mult[idx(a, x) * dim + idx(h, y)] = Some((datum.sigma.exp(a, x, y), idx(a, f.mul(x, y))));
                }
            }
        }
        let comult = (0..dim)
            .map(|b| {
                let (a, x) = (b / nf, b % nf);
                (0..ng)
                    .map(|t| {
                        let s = g.mul(g.inv(t), a);
                        (datum.tau.exp(x, t, s), idx(t, mp.act_f(s, x)), idx(s, x))
                    })
                    .collect()
            })
            .collect();
        let antipode = (0..dim).map(|b| antipode_formula(&datum, b / nf, b % nf)).collect();
        let counit = (0..dim).map(|b| b / nf == 0).collect();
        let unit = (0..ng).map(|a| idx(a, 0)).collect();
        let mut braid = vec![0; dim * dim];
        for a in 0..ng {
            for x in 0..nf {
                for h in 0..ng {
                    for y in 0..nf {
                        braid[idx(a, x) * dim + idx(h, y)] = q.exp(a, h, x, y);
                    }
                }
            }
        }
        let tables = Tables { dim, conductor: datum.conductor(), mult, comult, antipode, counit, unit, braid };
        Ok(Bicrossed { datum, q, tables })
    }

    pub fn datum(&self) -> &Datum {
        &self.datum
    }

    pub fn q(&self) -> &QTable {
        &self.q
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn dim(&self) -> usize {
        self.tables.dim
    }

    pub fn index(&self, g: usize, x: usize) -> usize {
        g * self.datum.mp.nf() + x
    }

    /// `(g, x)` for a basis index.
    pub fn label(&self, b: usize) -> (usize, usize) {
        (b / self.datum.mp.nf(), b % self.datum.mp.nf())
    }

    pub fn basis(&self, g: usize, x: usize) -> Element {
        self.tables.basis(self.index(g, x))
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element, BicrossedError> {
        Ok(self.tables.multiply(u, v)?)
    }

    pub fn comultiply(&self, u: &Element) -> Result<Tensor, BicrossedError> {
        Ok(self.tables.comultiply(u)?)
    }

    pub fn antipode(&self, u: &Element) -> Result<Element, BicrossedError> {
        Ok(self.tables.antipode_of(u)?)
    }

    /// Associativity, coassociativity, (co)unit laws, the antipode, and the
    /// coproduct multiplicative for the product twisted by this braiding.
    pub fn verify_bialgebra(&self) -> Report {
        let mut r = self.tables.check_hopf("coproduct multiplicative for the twisted product");
        let nf = self.datum.mp.nf();
        r.push(sweep("coproduct has one term per left leg", &[self.dim()], Mode::Count, |t| {
            let mut legs: Vec<usize> = self.tables.comult[t[0]].iter().map(|&(_, l, _)| l / nf).collect();
            legs.sort_unstable();
            legs.dedup();
            legs.len() == self.datum.mp.ng()
        }));
        r
    }

    /// The antipode read off the square calculus, for every basis vector.
    pub fn antipode_squares(&self) -> Vec<Mono> {
        let mp = &self.datum.mp;
        mp.squares()
            .iter()
            .map(|a| {
                let inv = mp.invert(a, Inverse::Full);
                let h = mp.invert(a, Inverse::Horizontal);
                let e = -square_sigma(&self.datum, &inv, &h) - square_tau(&self.datum, &h, a);
                (modn(e, self.datum.conductor()), self.index(inv.g, inv.x))
            })
            .collect()
    }

    /// The closed antipode formula against the convolution inverse found by
    /// a linear solve and against the square calculus, basis vector by basis vector.
    pub fn check_antipode_formulas(&self) -> Report {
        let mut r = Report::new();
        let squares = self.antipode_squares();
        let closed: Vec<Mono> = (0..self.dim())
            .map(|b| {
                let (g, x) = self.label(b);
                antipode_formula(&self.datum, g, x)
            })
            .collect();
        match self.tables.convolution_inverse() {
            Ok(oracle) => r.push(sweep("antipode formula equals the convolution inverse", &[self.dim()], Mode::Count, |t| {
                let (e, c) = closed[t[0]];
                let mut v = Element::new(self.tables.conductor);
                v.add_root(c, e, 1);
                oracle[t[0]] == v
            })),
            Err(_) => r.push(Check::single("antipode formula equals the convolution inverse", false)),
        }
        r.push(sweep("antipode formula equals the square calculus", &[self.dim()], Mode::Count, |t| {
            closed[t[0]] == squares[t[0]]
        }));
        r
    }

    /// `ad_c(a)(b) = Σ a₁ · b · S(a₂)` weighted by `Q(a₂, b)`.
    pub fn braided_adjoint(&self, a: usize, b: usize) -> Element {
        let t = &self.tables;
        let mut out = Element::new(t.conductor);
        for &(e, a1, a2) in &t.comult[a] {
            let (es, sa2) = t.antipode[a2];
            let Some((m1, p)) = t.mul(a1, b) else { continue };
            let Some((m2, c)) = t.mul(p, sa2) else { continue };
            out.add_root(c, modn(e as i64 + t.braid(a2, b) as i64 + es as i64 + m1 as i64 + m2 as i64, t.conductor), 1);
        }
        out
    }

    /// The expected value of `ad_c(δ_g x)(δ_h)`: `[g = 1] δ_{(h⁻¹ ◁ x⁻¹)⁻¹}`.
    pub fn check_adjoint_on_functions(&self) -> Check {
        let mp = &self.datum.mp;
        let (f, g) = (mp.f(), mp.g());
        let (ng, nf) = (mp.ng(), mp.nf());
        sweep("braided adjoint action on the functions", &[ng, nf, ng], Mode::Count, |t| {
            let (a, x, h) = (t[0], t[1], t[2]);
            let got = self.braided_adjoint(self.index(a, x), self.index(h, 0));
            let mut expect = Element::new(self.tables.conductor);
            if a == 0 {
                expect.add_root(self.index(g.inv(mp.act_g(g.inv(h), f.inv(x))), 0), 0, 1);
            }
            got == expect
        })
    }

    pub fn export(&self) -> StructureJson {
        let nf = self.datum.mp.nf();
        let label = |b: usize| format!("({}, {})", b / nf, b % nf);
        StructureJson {
            basis: (0..self.dim()).map(label).collect(),
            tables: self.tables.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureJson {
    pub basis: Vec<String>,
    #[serde(flatten)]
    pub tables: Tables,
}

/// `S(δ_g x) = σ_{(g◁x)⁻¹}((g▷x)⁻¹, g▷x)⁻¹ τ_x(g⁻¹, g)⁻¹ δ_{(g◁x)⁻¹}(g▷x)⁻¹`
pub fn antipode_formula(d: &Datum, g: usize, x: usize) -> Mono {
    let mp = &d.mp;
    let (fg, gg) = (mp.f(), mp.g());
    let v = mp.act_f(g, x);
    let w = gg.inv(mp.act_g(g, x));
    let e = -(d.sigma.exp(w, fg.inv(v), v) as i64) - d.tau.exp(x, gg.inv(g), g) as i64;
    (modn(e, d.conductor()), w * mp.nf() + fg.inv(v))
}

/// `σ` on a vertically composable pair: `σ_{top of a}(right of a, right of b)`.
fn square_sigma(d: &Datum, a: &Square, b: &Square) -> i64 {
    debug_assert_eq!(a.t, b.g);
    d.sigma.exp(a.g, a.x, b.x) as i64
}

/// `τ` on a horizontally composable pair: `τ_{right of b}(top of a, top of b)`.
fn square_tau(d: &Datum, a: &Square, b: &Square) -> i64 {
    debug_assert_eq!(a.x, b.v);
    d.tau.exp(b.x, a.g, b.g) as i64
}

/// Checks that `δ_g x ↦ ν(g, x) δ_g x` is an isomorphism `R → R'` of
/// extensions, once through the algebra and coalgebra conditions and once
/// through the total differential; the verdicts must agree.
pub fn theta_equivalence(r: &Datum, r2: &Datum, nu: &Gauge) -> Report {
    let mp = &r.mp;
    let (f, g) = (mp.f(), mp.g());
    let (ng, nf) = (mp.ng(), mp.nf());
    let n = r.conductor() as i64;
    let s1 = |a, x, y| r.sigma.exp(a, x, y) as i64;
    let s2 = |a, x, y| r2.sigma.exp(a, x, y) as i64;
    let t1 = |x, a, b| r.tau.exp(x, a, b) as i64;
    let t2 = |x, a, b| r2.tau.exp(x, a, b) as i64;
    let v = |a, x| nu.exp(a, x) as i64;
    let mut rep = Report::new();
    let same = r.mp == r2.mp && r.conductor() == r2.conductor() && nu.conductor() == r.conductor();
    rep.push(Check::single("same matched pair and conductor", same));
    if !same {
        return rep;
    }
    rep.push(Check::single("gauge normalized", nu.is_normalized(mp)));
    let alg = sweep("gauge is an algebra map", &[ng, nf, nf], Mode::Count, |t| {
        let (a, x, y) = (t[0], t[1], t[2]);
        (s1(a, x, y) + v(a, f.mul(x, y)) - s2(a, x, y) - v(a, x) - v(mp.act_g(a, x), y)) % n == 0
    });
    let coalg = sweep("gauge is a coalgebra map", &[nf, ng, ng], Mode::Count, |t| {
        let (x, a, b) = (t[0], t[1], t[2]);
        (t2(x, a, b) + v(g.mul(a, b), x) - t1(x, a, b) - v(a, mp.act_f(b, x)) - v(b, x)) % n == 0
    });
    let total = crate::cohomology::differs_by_total(r, r2, nu);
    let agree = (alg.passed() && coalg.passed()) == total.passed();
    rep.push(alg);
    rep.push(coalg);
    rep.push(total);
    rep.push(Check::single("direct and cohomological criteria agree", agree));
    rep
}

/// Basis-level Θ, for composing with structure maps.
pub fn theta_image(r: &Bicrossed, nu: &Gauge, u: &Element) -> Element {
    let mut out = Element::new(r.tables.conductor);
    for (&b, c) in u.iter() {
        let (g, x) = r.label(b);
        out.add_scaled(b, c, nu.exp(g, x));
    }
    out
}

