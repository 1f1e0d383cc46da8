use bicrossed::algebra::Group;
use bicrossed::bicrossed::Bicrossed;
use bicrossed::braiding::check_braided;
use bicrossed::cocycles::{Sigma, Tau};
use bicrossed::examples::{count_cocycle_pairs, s3, search};
use bicrossed::matched_pair::MatchedPair;

/// Normalized tables: the listed free cells range over `Z/N`, every other
/// cell is 0. Counts those passing `ok`.
fn brute_count(width: usize, free: &[usize], n: u32, ok: impl Fn(&[u32]) -> bool) -> u128 {
    let mut digits = vec![0u32; free.len()];
    let mut hits = 0;
    for _ in 0..(n as u128).pow(free.len() as u32) {
        let mut v = vec![0u32; width];
        for (&i, &d) in free.iter().zip(&digits) {
            v[i] = d;
        }
        if ok(&v) {
            hits += 1;
        }
        for e in digits.iter_mut() {
            *e += 1;
            if *e < n {
                break;
            }
            *e = 0;
        }
    }
    hits
}

fn brute_pairs(mp: &MatchedPair, n: u32) -> u128 {
    let (ng, nf) = (mp.ng(), mp.nf());
    let interior = |outer: usize, inner: usize| -> Vec<usize> {
        (0..outer * inner * inner)
            .filter(|i| i / (inner * inner) != 0 && !(i / inner).is_multiple_of(inner) && i % inner != 0)
            .collect()
    };
    let sig = brute_count(ng * nf * nf, &interior(ng, nf), n, |v| {
        Sigma::from_fn(mp, n, |a, x, y| v[(a * nf + x) * nf + y] as i64).check(mp).passed()
    });
    let tau = brute_count(nf * ng * ng, &interior(nf, ng), n, |v| {
        Tau::from_fn(mp, n, |x, a, b| v[(x * ng + a) * ng + b] as i64).check(mp).passed()
    });
    sig * tau
}

#[test]
fn linear_count_matches_brute_force() {
    let cases = [
        (MatchedPair::trivial(Group::cyclic(2), Group::cyclic(2)), 2),
        (MatchedPair::trivial(Group::cyclic(3), Group::cyclic(2)), 3),
        (MatchedPair::trivial(Group::cyclic(2), Group::cyclic(3)), 2),
        (s3(1).datum.mp, 2),
        (s3(1).datum.mp, 6),
        (s3(1).datum.mp.transposed(), 2),
        (s3(1).datum.mp.transposed(), 3),
    ];
    for (mp, n) in cases {
        assert_eq!(count_cocycle_pairs(&mp, n), brute_pairs(&mp, n), "{}x{} at N = {n}", mp.ng(), mp.nf());
    }
}

#[test]
fn search_results_are_distinct_and_braided() {
    let mp = s3(1).datum.mp;
    let found = search(&mp, 6, 50).unwrap();
    assert!(!found.is_empty());
    for (i, d) in found.iter().enumerate() {
        assert!(check_braided(&Bicrossed::new(d.clone())).passed());
        assert!(found[..i].iter().all(|e| e != d));
    }
    assert_eq!(search(&mp, 6, 2).unwrap(), found[..2.min(found.len())].to_vec());
}
