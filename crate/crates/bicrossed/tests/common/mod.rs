#![allow(dead_code)]

use bicrossed::cocycles::{Datum, Gauge, Sigma, Tau};
use bicrossed::examples::{cyclic_direct_product, finite_field_example, s3, trivial_actions};

/// `(σ, τ)` moved along the diagonal isomorphism `δ_g x ↦ ν(g, x) δ_g x`.
pub fn twist(d: &Datum, nu: &Gauge) -> Datum {
    let mp = &d.mp;
    let (f, g) = (mp.f(), mp.g());
    let n = d.conductor();
    let v = |a: usize, x: usize| nu.exp(a, x) as i64;
    let sigma = Sigma::from_fn(mp, n, |a, x, y| {
        d.sigma.exp(a, x, y) as i64 + v(a, f.mul(x, y)) - v(a, x) - v(mp.act_g(a, x), y)
    });
    let tau = Tau::from_fn(mp, n, |x, a, b| {
        d.tau.exp(x, a, b) as i64 - v(g.mul(a, b), x) + v(a, mp.act_f(b, x)) + v(b, x)
    });
    Datum::new(mp.clone(), sigma, tau).expect("twisted cocycles")
}

/// A small zoo covering trivial actions, a semidirect pair, both cyclic
/// cases and the nonabelian factorization.
pub fn zoo() -> Vec<(String, Datum)> {
    let mut out = vec![
        ("trivial-actions".to_string(), trivial_actions(3, 1, 1).unwrap().datum),
        ("finite-field r=0".to_string(), finite_field_example(3, 2, 0).unwrap().datum),
        ("finite-field r=1".to_string(), finite_field_example(3, 2, 1).unwrap().datum),
        ("cyclic".to_string(), cyclic_direct_product(4, 2, 1, 3).unwrap().datum),
        ("s3".to_string(), s3(6).datum),
    ];
    let s3t = Datum::trivial(s3(6).datum.mp.transposed(), 6);
    out.push(("s3 transposed".to_string(), s3t));
    out
}
