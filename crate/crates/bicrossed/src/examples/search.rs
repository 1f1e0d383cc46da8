//! Exhaustive search for braided data on a small matched pair.
//!
//! The cocycle laws and normalizations are linear over `Z/N` in the exponent
//! tables, so the candidates are the points of a finite module computed from
//! a Smith normal form. Each candidate is then run through the braided check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::snf::{from_i64, smith_normal_form};
use crate::bicrossed::Bicrossed;
use crate::braiding::check_braided;
use crate::cocycles::{Datum, Sigma, Tau};
use crate::matched_pair::MatchedPair;

use super::ExampleError;

/// Largest `|G|·|F|` accepted.
pub const MAX_ORDER_PRODUCT: usize = 12;
/// Largest number of cocycle pairs visited.
pub const MAX_CANDIDATES: u128 = 1 << 22;

/// Generators of `{v : A v ≡ 0 mod N}` with their additive orders.
fn kernel_mod(rows: &[Vec<i64>], width: usize, n: u32) -> Vec<(Vec<u32>, u32)> {
    if width == 0 {
        return Vec::new();
    }
    let a = if rows.is_empty() { vec![vec![0; width]] } else { rows.to_vec() };
    let s = smith_normal_form(&from_i64(&a));
    let nb = BigInt::from(n);
    let mut gens = Vec::new();
    for i in 0..width {
        let d = if i < s.d.len() { s.d[i][i].clone() } else { BigInt::zero() };
        let g = if d.is_zero() { nb.clone() } else { d.gcd(&nb) };
        let order = g.to_u32().expect("divides the conductor");
        if order == 1 {
            continue;
        }
        let step = &nb / &g;
        let col = (0..width).map(|r| (&s.v[r][i] * &step).mod_floor(&nb).to_u32().expect("reduced")).collect();
        gens.push((col, order));
    }
    gens
}

/// Every point `Σ c_i gen_i` of the module, in lexicographic order of `c`.
fn points(gens: &[(Vec<u32>, u32)], width: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; width]];
    for (col, order) in gens {
        let mut next = Vec::with_capacity(out.len() * *order as usize);
        for p in &out {
            for c in 0..*order {
                next.push(p.iter().zip(col).map(|(a, b)| ((*a as u64 + c as u64 * *b as u64) % n as u64) as u32).collect());
            }
        }
        out = next;
    }
    out
}

fn unit(width: usize, i: usize) -> Vec<i64> {
    let mut r = vec![0; width];
    r[i] = 1;
    r
}

fn sigma_rows(mp: &MatchedPair) -> Vec<Vec<i64>> {
    let (ng, nf) = (mp.ng(), mp.nf());
    let f = mp.f();
    let w = ng * nf * nf;
    let at = |a: usize, x: usize, y: usize| (a * nf + x) * nf + y;
    let mut rows = Vec::new();
    for a in 0..ng {
        for x in 0..nf {
            for y in 0..nf {
                for z in 0..nf {
                    let mut r = vec![0; w];
                    r[at(mp.act_g(a, x), y, z)] += 1;
                    r[at(a, x, f.mul(y, z))] += 1;
                    r[at(a, f.mul(x, y), z)] -= 1;
                    r[at(a, x, y)] -= 1;
                    if r.iter().any(|&c| c != 0) {
                        rows.push(r);
                    }
                }
            }
            rows.push(unit(w, at(a, x, 0)));
            rows.push(unit(w, at(a, 0, x)));
        }
    }
    for x in 0..nf {
        for y in 0..nf {
            rows.push(unit(w, at(0, x, y)));
        }
    }
    rows
}

fn tau_rows(mp: &MatchedPair) -> Vec<Vec<i64>> {
    let (ng, nf) = (mp.ng(), mp.nf());
    let g = mp.g();
    let w = nf * ng * ng;
    let at = |x: usize, a: usize, b: usize| (x * ng + a) * ng + b;
    let mut rows = Vec::new();
    for x in 0..nf {
        for a in 0..ng {
            for b in 0..ng {
                for c in 0..ng {
                    let mut r = vec![0; w];
                    r[at(x, g.mul(a, b), c)] += 1;
                    r[at(mp.act_f(c, x), a, b)] += 1;
                    r[at(x, b, c)] -= 1;
                    r[at(x, a, g.mul(b, c))] -= 1;
                    if r.iter().any(|&c| c != 0) {
                        rows.push(r);
                    }
                }
            }
            rows.push(unit(w, at(x, a, 0)));
            rows.push(unit(w, at(x, 0, a)));
        }
    }
    for a in 0..ng {
        for b in 0..ng {
            rows.push(unit(w, at(0, a, b)));
        }
    }
    rows
}

/// Number of normalized cocycle pairs `(σ, τ)` over `Z/N`.
pub fn count_cocycle_pairs(mp: &MatchedPair, conductor: u32) -> u128 {
    let (ng, nf) = (mp.ng(), mp.nf());
    let ks = kernel_mod(&sigma_rows(mp), ng * nf * nf, conductor);
    let kt = kernel_mod(&tau_rows(mp), nf * ng * ng, conductor);
    ks.iter().chain(&kt).map(|(_, o)| *o as u128).product()
}

/// Up to `max_results` data on `mp` whose bicrossed product passes
/// [`check_braided`], in a fixed enumeration order.
pub fn search(mp: &MatchedPair, conductor: u32, max_results: usize) -> Result<Vec<Datum>, ExampleError> {
    let (ng, nf) = (mp.ng(), mp.nf());
    if ng * nf > MAX_ORDER_PRODUCT {
        return Err(ExampleError::BadParameters(format!("|G|·|F| = {} exceeds {MAX_ORDER_PRODUCT}", ng * nf)));
    }
    if conductor == 0 {
        return Err(ExampleError::BadParameters("conductor 0".into()));
    }
    mp.validate()?;
    let total = count_cocycle_pairs(mp, conductor);
    if total > MAX_CANDIDATES {
        return Err(ExampleError::BadParameters(format!("{total} cocycle pairs exceed the limit {MAX_CANDIDATES}")));
    }
    let sigmas = points(&kernel_mod(&sigma_rows(mp), ng * nf * nf, conductor), ng * nf * nf, conductor);
    let taus = points(&kernel_mod(&tau_rows(mp), nf * ng * ng, conductor), nf * ng * ng, conductor);
    let mut found = Vec::new();
    for s in &sigmas {
        let sigma = Sigma::from_fn(mp, conductor, |a, x, y| s[(a * nf + x) * nf + y] as i64);
        for t in &taus {
            if found.len() >= max_results {
                return Ok(found);
            }
            let tau = Tau::from_fn(mp, conductor, |x, a, b| t[(x * ng + a) * ng + b] as i64);
            let Ok(d) = Datum::new(mp.clone(), sigma.clone(), tau) else { continue };
            if check_braided(&Bicrossed::new(d.clone())).passed() {
                found.push(d);
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;

    #[test]
    fn kernel_of_a_single_congruence() {
        // 2a + 4b ≡ 0 mod 6 means a ≡ -2b mod 3: two values of a for each b.
        let gens = kernel_mod(&[vec![2, 4]], 2, 6);
        let pts = points(&gens, 2, 6);
        assert_eq!(pts.len(), 12);
        assert!(pts.iter().all(|p| (2 * p[0] + 4 * p[1]) % 6 == 0));
        let distinct: std::collections::BTreeSet<_> = pts.iter().collect();
        assert_eq!(distinct.len(), 12);
    }

    #[test]
    fn cocycle_pairs_on_z2_squared() {
        // Trivial actions on Z/2 × Z/2: the normalized 2-cocycles on Z/2 with
        // values in μ_2 form Z/2, once for σ_1 and once for τ_1.
        let mp = MatchedPair::trivial(Group::cyclic(2), Group::cyclic(2));
        assert_eq!(count_cocycle_pairs(&mp, 2), 4);
        let all = search(&mp, 2, 100).unwrap();
        assert!(!all.is_empty() && all.len() <= 4);
        assert!(all.contains(&Datum::trivial(mp.clone(), 2)));
        assert!(all.iter().all(|d| d.check().passed()));
    }

    #[test]
    fn limits_are_enforced() {
        let mp = MatchedPair::trivial(Group::cyclic(4), Group::cyclic(4));
        assert!(matches!(search(&mp, 2, 1), Err(ExampleError::BadParameters(_))));
        let mp = MatchedPair::trivial(Group::cyclic(2), Group::cyclic(3));
        assert_eq!(search(&mp, 6, 1).unwrap().len(), 1);
    }
}
