//! Matched pairs of finite groups and the calculus of squares.
//!
//! `F` acts on the set `G` from the right (`g ◁ x`, here [`MatchedPair::act_g`])
//! and `G` acts on the set `F` from the left (`g ▷ x`, here [`MatchedPair::act_f`]),
//! so that `g x = (g ▷ x)(g ◁ x)` in the ambient group.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Group, GroupError, GroupJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchedPairError {
    #[error("action table has shape {rows}x{cols}, expected {exp_rows}x{exp_cols}")]
    Shape { rows: usize, cols: usize, exp_rows: usize, exp_cols: usize },
    #[error("action table entry out of range at (g={g}, x={x})")]
    OutOfRange { g: usize, x: usize },
    #[error("F does not act on G from the right at (g={g}, x={x}, y={y})")]
    NotRightAction { g: usize, x: usize, y: usize },
    #[error("G does not act on F from the left at (g={g}, h={h}, x={x})")]
    NotLeftAction { g: usize, h: usize, x: usize },
    #[error("s ▷ xy != (s ▷ x)((s ◁ x) ▷ y) at (s={s}, x={x}, y={y})")]
    Comp1Fails { s: usize, x: usize, y: usize },
    #[error("st ◁ x != (s ◁ (t ▷ x))(t ◁ x) at (s={s}, t={t}, x={x})")]
    Comp2Fails { s: usize, t: usize, x: usize },
    #[error("inverse identities fail at (t={t}, y={y})")]
    InverseIdentityFails { t: usize, y: usize },
    #[error("the {0} elements do not form a subgroup")]
    NotSubgroup(&'static str),
    #[error("element {element} of the ambient group has {count} factorizations")]
    NotExactFactorization { element: usize, count: usize },
    #[error("the action ▷ is not trivial")]
    NotSemidirect,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPair {
    f: Group,
    g: Group,
    /// `g ◁ x` at `g * |F| + x`
    on_g: Vec<u32>,
    /// `g ▷ x` at `g * |F| + x`
    on_f: Vec<u32>,
}

/// Wire format; both tables are indexed `[g][x]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatchedPairJson {
    #[serde(rename = "F")]
    pub f: GroupJson,
    #[serde(rename = "G")]
    pub g: GroupJson,
    pub act_l: Vec<Vec<usize>>,
    pub act_r: Vec<Vec<usize>>,
}

/// An element of the square set: `g` on top, `v` on the left, `x` on the
/// right and `t` at the bottom, with `v = g ▷ x` and `t = g ◁ x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Square {
    pub g: usize,
    pub v: usize,
    pub x: usize,
    pub t: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inverse {
    Horizontal,
    Vertical,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("squares {0:?} and {1:?} are not composable")]
pub struct NotComposable(pub Square, pub Square);

impl MatchedPair {
    /// Builds and validates a matched pair from tables indexed `[g][x]`.
    pub fn new(
        f: Group,
        g: Group,
        act_g: &[Vec<usize>],
        act_f: &[Vec<usize>],
    ) -> Result<MatchedPair, MatchedPairError> {
        let (nf, ng) = (f.order(), g.order());
        for (table, bound) in [(act_g, ng), (act_f, nf)] {
            let cols = table.first().map_or(0, Vec::len);
            if table.len() != ng || table.iter().any(|r| r.len() != nf) {
                return Err(MatchedPairError::Shape { rows: table.len(), cols, exp_rows: ng, exp_cols: nf });
            }
            for (gi, row) in table.iter().enumerate() {
                if let Some(x) = row.iter().position(|&v| v >= bound) {
                    return Err(MatchedPairError::OutOfRange { g: gi, x });
                }
            }
        }
        let mp = MatchedPair {
            f,
            g,
            on_g: act_g.iter().flatten().map(|&v| v as u32).collect(),
            on_f: act_f.iter().flatten().map(|&v| v as u32).collect(),
        };
        mp.validate()?;
        Ok(mp)
    }

    pub fn from_fn(
        f: Group,
        g: Group,
        act_g: impl Fn(usize, usize) -> usize,
        act_f: impl Fn(usize, usize) -> usize,
    ) -> Result<MatchedPair, MatchedPairError> {
        let (nf, ng) = (f.order(), g.order());
        let tg: Vec<Vec<usize>> = (0..ng).map(|a| (0..nf).map(|x| act_g(a, x)).collect()).collect();
        let tf: Vec<Vec<usize>> = (0..ng).map(|a| (0..nf).map(|x| act_f(a, x)).collect()).collect();
        MatchedPair::new(f, g, &tg, &tf)
    }

    /// Both actions trivial (the direct product).
    pub fn trivial(f: Group, g: Group) -> MatchedPair {
        MatchedPair::from_fn(f, g, |a, _| a, |_, x| x).expect("trivial actions")
    }

    /// `▷` trivial and `◁` given by a right action of `F` on `G` by automorphisms.
    pub fn semidirect(
        f: Group,
        g: Group,
        act_g: impl Fn(usize, usize) -> usize,
    ) -> Result<MatchedPair, MatchedPairError> {
        MatchedPair::from_fn(f, g, act_g, |_, x| x)
    }

    /// Reads off both actions from an exact factorization `Σ = F G`.
    pub fn from_factorization(
        sigma: &Group,
        f_elems: &[usize],
        g_elems: &[usize],
    ) -> Result<MatchedPair, MatchedPairError> {
        if !sigma.is_subgroup(f_elems) {
            return Err(MatchedPairError::NotSubgroup("F"));
        }
        if !sigma.is_subgroup(g_elems) {
            return Err(MatchedPairError::NotSubgroup("G"));
        }
        let n = sigma.order();
        let mut fac: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, &a) in f_elems.iter().enumerate() {
            for (j, &b) in g_elems.iter().enumerate() {
                fac[sigma.mul(a, b)].push((i, j));
            }
        }
        if let Some((element, list)) = fac.iter().enumerate().find(|(_, l)| l.len() != 1) {
            return Err(MatchedPairError::NotExactFactorization { element, count: list.len() });
        }
        let f = sigma.restrict(&reorder(f_elems));
        let g = sigma.restrict(&reorder(g_elems));
        let fpos = reorder(f_elems);
        let gpos = reorder(g_elems);
        let (nf, ng) = (fpos.len(), gpos.len());
        let mut act_g = vec![vec![0; nf]; ng];
        let mut act_f = vec![vec![0; nf]; ng];
        for (gi, &ga) in gpos.iter().enumerate() {
            for (xi, &xa) in fpos.iter().enumerate() {
                let (fi, gj) = fac[sigma.mul(ga, xa)][0];
                let fi_new = fpos.iter().position(|&e| e == f_elems[fi]).unwrap();
                let gj_new = gpos.iter().position(|&e| e == g_elems[gj]).unwrap();
                act_f[gi][xi] = fi_new;
                act_g[gi][xi] = gj_new;
            }
        }
        MatchedPair::new(f, g, &act_g, &act_f)
    }

    /// The pair attached to the opposite factorization `Σ = G F`, with the
    /// roles of the two groups exchanged.
    pub fn transposed(&self) -> MatchedPair {
        let (f, g) = (&self.f, &self.g);
        // x g = ((g^-1 ◁ x^-1)^-1) ((g^-1 ▷ x^-1)^-1)
        MatchedPair::from_fn(
            g.clone(),
            f.clone(),
            |x, gg| f.inv(self.act_f(g.inv(gg), f.inv(x))),
            |x, gg| g.inv(self.act_g(g.inv(gg), f.inv(x))),
        )
        .expect("transposed matched pair")
    }

    pub fn f(&self) -> &Group {
        &self.f
    }

    pub fn g(&self) -> &Group {
        &self.g
    }

    pub fn nf(&self) -> usize {
        self.f.order()
    }

    pub fn ng(&self) -> usize {
        self.g.order()
    }

    /// `g ◁ x`
    #[inline]
    pub fn act_g(&self, g: usize, x: usize) -> usize {
        self.on_g[g * self.f.order() + x] as usize
    }

    /// `g ▷ x`
    #[inline]
    pub fn act_f(&self, g: usize, x: usize) -> usize {
        self.on_f[g * self.f.order() + x] as usize
    }

    pub fn is_act_g_trivial(&self) -> bool {
        (0..self.ng()).all(|g| (0..self.nf()).all(|x| self.act_g(g, x) == g))
    }

    pub fn is_act_f_trivial(&self) -> bool {
        (0..self.ng()).all(|g| (0..self.nf()).all(|x| self.act_f(g, x) == x))
    }

    /// Action axioms, both compatibilities, and then the inverse identities
    /// `(t ◁ y)^-1 = t^-1 ◁ (t ▷ y)` and `(t ▷ y)^-1 = (t ◁ y) ▷ y^-1`.
    pub fn validate(&self) -> Result<(), MatchedPairError> {
        let (f, g) = (&self.f, &self.g);
        let (nf, ng) = (f.order(), g.order());
        for a in 0..ng {
            if self.act_g(a, 0) != a {
                return Err(MatchedPairError::NotRightAction { g: a, x: 0, y: 0 });
            }
            for x in 0..nf {
                for y in 0..nf {
                    if self.act_g(self.act_g(a, x), y) != self.act_g(a, f.mul(x, y)) {
                        return Err(MatchedPairError::NotRightAction { g: a, x, y });
                    }
                }
            }
        }
        for x in 0..nf {
            if self.act_f(0, x) != x {
                return Err(MatchedPairError::NotLeftAction { g: 0, h: 0, x });
            }
            for a in 0..ng {
                for b in 0..ng {
                    if self.act_f(g.mul(a, b), x) != self.act_f(a, self.act_f(b, x)) {
                        return Err(MatchedPairError::NotLeftAction { g: a, h: b, x });
                    }
                }
            }
        }
        for s in 0..ng {
            for x in 0..nf {
                for y in 0..nf {
                    let lhs = self.act_f(s, f.mul(x, y));
                    let rhs = f.mul(self.act_f(s, x), self.act_f(self.act_g(s, x), y));
                    if lhs != rhs {
                        return Err(MatchedPairError::Comp1Fails { s, x, y });
                    }
                }
            }
        }
        for s in 0..ng {
            for t in 0..ng {
                for x in 0..nf {
                    let lhs = self.act_g(g.mul(s, t), x);
                    let rhs = g.mul(self.act_g(s, self.act_f(t, x)), self.act_g(t, x));
                    if lhs != rhs {
                        return Err(MatchedPairError::Comp2Fails { s, t, x });
                    }
                }
            }
        }
        for t in 0..ng {
            for y in 0..nf {
                let a = g.inv(self.act_g(t, y)) == self.act_g(g.inv(t), self.act_f(t, y));
                let b = f.inv(self.act_f(t, y)) == self.act_f(self.act_g(t, y), f.inv(y));
                if !(a && b) {
                    return Err(MatchedPairError::InverseIdentityFails { t, y });
                }
            }
        }
        Ok(())
    }

    /// The ambient group on pairs `(x, g)` meaning `x g`, indexed `x * |G| + g`,
    /// with `(x g)(y h) = x (g ▷ y)(g ◁ y) h`.
    pub fn ambient(&self) -> Group {
        let (f, g) = (&self.f, &self.g);
        let (nf, ng) = (f.order(), g.order());
        let n = nf * ng;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let (x, a) = (i / ng, i % ng);
                (0..n)
                    .map(|j| {
                        let (y, b) = (j / ng, j % ng);
                        let xf = f.mul(x, self.act_f(a, y));
                        let gg = g.mul(self.act_g(a, y), b);
                        xf * ng + gg
                    })
                    .collect()
            })
            .collect();
        Group::from_table(&table).expect("ambient group of a matched pair")
    }

    pub fn to_json(&self) -> MatchedPairJson {
        let rows = |v: &Vec<u32>| -> Vec<Vec<usize>> {
            v.chunks(self.nf()).map(|r| r.iter().map(|&e| e as usize).collect()).collect()
        };
        MatchedPairJson { f: self.f.to_json(), g: self.g.to_json(), act_l: rows(&self.on_g), act_r: rows(&self.on_f) }
    }

    pub fn from_json(j: &MatchedPairJson) -> Result<MatchedPair, MatchedPairError> {
        MatchedPair::new(Group::from_json(&j.f)?, Group::from_json(&j.g)?, &j.act_l, &j.act_r)
    }

    // ---- squares ----

    pub fn square(&self, g: usize, x: usize) -> Square {
        Square { g, v: self.act_f(g, x), x, t: self.act_g(g, x) }
    }

    pub fn is_square(&self, s: &Square) -> bool {
        s.g < self.ng() && s.x < self.nf() && *s == self.square(s.g, s.x)
    }

    pub fn squares(&self) -> Vec<Square> {
        (0..self.ng()).flat_map(|g| (0..self.nf()).map(move |x| (g, x))).map(|(g, x)| self.square(g, x)).collect()
    }

    /// Horizontal product needs `a.x == b.v`; vertical product needs `a.t == b.g`.
    pub fn compose(&self, a: &Square, b: &Square, dir: Direction) -> Result<Square, NotComposable> {
        match dir {
            Direction::Horizontal if a.x == b.v => Ok(Square {
                g: self.g.mul(a.g, b.g),
                v: a.v,
                x: b.x,
                t: self.g.mul(a.t, b.t),
            }),
            Direction::Vertical if a.t == b.g => Ok(Square {
                g: a.g,
                v: self.f.mul(a.v, b.v),
                x: self.f.mul(a.x, b.x),
                t: b.t,
            }),
            _ => Err(NotComposable(*a, *b)),
        }
    }

    pub fn invert(&self, a: &Square, kind: Inverse) -> Square {
        let (f, g) = (&self.f, &self.g);
        match kind {
            Inverse::Horizontal => Square { g: g.inv(a.g), v: a.x, x: a.v, t: g.inv(a.t) },
            Inverse::Vertical => Square { g: a.t, v: f.inv(a.v), x: f.inv(a.x), t: a.g },
            Inverse::Full => Square { g: g.inv(a.t), v: f.inv(a.x), x: f.inv(a.v), t: g.inv(a.g) },
        }
    }

    /// Given the top-right `b` and bottom-left `c`, the unique top-left `a`
    /// and bottom-right `d` with `a|b`, `c|d`, `a` over `c` and `b` over `d`.
    pub fn complete(&self, b: &Square, c: &Square) -> (Square, Square) {
        // a: right edge b.v, bottom c.g; from g x = v t, g = t ◁ x^-1
        let a = self.square(self.act_g(c.g, self.f.inv(b.v)), b.v);
        // d: top b.t, left edge c.x; x = g^-1 ▷ v
        let d = self.square(b.t, self.act_f(self.g.inv(b.t), c.x));
        (a, d)
    }
}

/// Identity first, remaining order preserved.
fn reorder(elems: &[usize]) -> Vec<usize> {
    let mut out = vec![0];
    out.extend(elems.iter().copied().filter(|&e| e != 0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// S3 as permutations, `F = <(0 1)>`, `G = <(0 1 2)>`.
    fn s3_pair() -> (Group, Vec<Vec<usize>>, MatchedPair) {
        let (s3, perms) = Group::symmetric(3);
        let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let f = vec![0, idx(&[1, 0, 2])];
        let r = idx(&[1, 2, 0]);
        let g = vec![0, r, s3.mul(r, r)];
        let mp = MatchedPair::from_factorization(&s3, &f, &g).unwrap();
        (s3, perms, mp)
    }

    #[test]
    fn s3_factorization_gives_conjugation() {
        let (_, _, mp) = s3_pair();
        assert!(mp.is_act_f_trivial());
        let (f, g) = (mp.f(), mp.g());
        for a in 0..3 {
            for x in 0..2 {
                // g ◁ x = x^-1 g x, computed inside G with x acting by inversion
                let expect = if x == 0 { a } else { g.inv(a) };
                assert_eq!(mp.act_g(a, x), expect);
                assert_eq!(f.order(), 2);
            }
        }
    }

    #[test]
    fn factorization_recovers_products() {
        let (s3, perms, _) = s3_pair();
        let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let f = vec![0, idx(&[1, 0, 2])];
        let r = idx(&[1, 2, 0]);
        let g = vec![0, r, s3.mul(r, r)];
        let mp = MatchedPair::from_factorization(&s3, &f, &g).unwrap();
        for (gi, &ga) in g.iter().enumerate() {
            for (xi, &xa) in f.iter().enumerate() {
                let v = f[mp.act_f(gi, xi)];
                let t = g[mp.act_g(gi, xi)];
                assert_eq!(s3.mul(ga, xa), s3.mul(v, t));
            }
        }
    }

    #[test]
    fn non_exact_factorizations() {
        let (s3, perms, _) = s3_pair();
        let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let r = idx(&[1, 2, 0]);
        let g = vec![0, r, s3.mul(r, r)];
        assert!(matches!(
            MatchedPair::from_factorization(&s3, &g, &g),
            Err(MatchedPairError::NotExactFactorization { .. })
        ));
        assert_eq!(
            MatchedPair::from_factorization(&s3, &[0, r], &g),
            Err(MatchedPairError::NotSubgroup("F"))
        );
    }

    #[test]
    fn direct_product_has_trivial_actions() {
        let a = Group::cyclic(2);
        let b = Group::cyclic(3);
        let sigma = Group::direct_product(&a, &b);
        let f: Vec<usize> = (0..2).map(|i| i * 3).collect();
        let g: Vec<usize> = (0..3).collect();
        let mp = MatchedPair::from_factorization(&sigma, &f, &g).unwrap();
        assert!(mp.is_act_f_trivial() && mp.is_act_g_trivial());
    }

    #[test]
    fn semidirect_inversion_is_valid_and_corruption_is_caught() {
        let f = Group::cyclic(2);
        let g = Group::cyclic(3);
        let gg = g.clone();
        let mp = MatchedPair::semidirect(f.clone(), g.clone(), move |a, x| if x == 0 { a } else { gg.inv(a) });
        assert!(mp.is_ok());
        let mut bad = vec![vec![0, 0], vec![1, 1], vec![2, 1]];
        bad[0][1] = 0;
        let ident = vec![vec![0, 1]; 3];
        assert!(matches!(
            MatchedPair::new(f, g, &bad, &ident),
            Err(MatchedPairError::NotRightAction { .. })
        ));
    }

    #[test]
    fn ambient_and_transpose() {
        let (_, _, mp) = s3_pair();
        let amb = mp.ambient();
        assert_eq!(amb.order(), 6);
        assert!(!amb.is_abelian());
        let tr = mp.transposed();
        assert_eq!(tr.nf(), 3);
        assert_eq!(tr.transposed(), mp);
    }

    #[test]
    fn square_calculus_on_s3() {
        let (_, _, mp) = s3_pair();
        let all = mp.squares();
        assert_eq!(all.len(), 6);
        for a in &all {
            let h = mp.invert(a, Inverse::Horizontal);
            let v = mp.invert(a, Inverse::Vertical);
            assert!(mp.is_square(&h) && mp.is_square(&v));
            assert_eq!(mp.invert(&h, Inverse::Horizontal), *a);
            assert_eq!(mp.invert(&v, Inverse::Vertical), *a);
            assert_eq!(mp.invert(&h, Inverse::Vertical), mp.invert(&v, Inverse::Horizontal));
            assert_eq!(mp.invert(&h, Inverse::Vertical), mp.invert(a, Inverse::Full));
            // identities
            let hid = mp.square(0, a.v);
            let vid = mp.square(a.t, 0);
            assert_eq!(mp.compose(&hid, a, Direction::Horizontal).unwrap(), *a);
            assert_eq!(mp.compose(a, &vid, Direction::Vertical).unwrap(), *a);
            // A^-1 | A^v over A^h | A
            let inv = mp.invert(a, Inverse::Full);
            assert!(mp.compose(&inv, &v, Direction::Horizontal).is_ok());
            assert!(mp.compose(&h, a, Direction::Horizontal).is_ok());
            assert!(mp.compose(&inv, &h, Direction::Vertical).is_ok());
            assert!(mp.compose(&v, a, Direction::Vertical).is_ok());
        }
        for a in &all {
            for b in &all {
                for dir in [Direction::Horizontal, Direction::Vertical] {
                    if let Ok(c) = mp.compose(a, b, dir) {
                        assert!(mp.is_square(&c));
                    }
                }
            }
        }
    }

    #[test]
    fn completion_is_unique() {
        let (_, _, mp) = s3_pair();
        let all = mp.squares();
        for b in &all {
            for c in &all {
                let mut found = Vec::new();
                for a in &all {
                    for d in &all {
                        let ok = a.x == b.v && c.x == d.v && a.t == c.g && b.t == d.g;
                        if ok {
                            found.push((*a, *d));
                        }
                    }
                }
                assert_eq!(found, vec![mp.complete(b, c)]);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let (_, _, mp) = s3_pair();
        let j = serde_json::to_string(&mp.to_json()).unwrap();
        let back: MatchedPairJson = serde_json::from_str(&j).unwrap();
        assert_eq!(MatchedPair::from_json(&back).unwrap(), mp);
    }
}
