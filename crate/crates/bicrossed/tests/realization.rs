mod common;

use bicrossed::bicrossed::Bicrossed;
use bicrossed::braiding::{check_q_multiplicativity, check_theorem_conditions, compute_q, Reading};
use bicrossed::examples::{cyclic_realization, finite_field_example, kashina, trivial_actions};
use bicrossed::realization::{
    check_braid_c_chi, realization_from_q, split_conditions, universal_realization, Biproduct, Orientation,
    RealizationError,
};

#[test]
fn universal_realization_reproduces_q_in_both_orientations() {
    let d = trivial_actions(3, 1, 1).unwrap().datum;
    let q = compute_q(&d);
    let (ng, nf) = (d.mp.ng(), d.mp.nf());
    for o in [Orientation::Literal, Orientation::Braiding] {
        let real = universal_realization(&d, o).unwrap();
        assert!(real.validate(&d.mp).is_ok());
        assert_eq!(3u64 % real.group().exponent(), 0);
        for g in 0..ng {
            for h in 0..ng {
                for x in 0..nf {
                    for y in 0..nf {
                        let want = q.exp(g, h, x, y);
                        let got = match o {
                            Orientation::Literal => real.pairing(h, y, g, x),
                            Orientation::Braiding => real.pairing(g, x, h, y),
                        };
                        assert_eq!(got, want);
                    }
                }
            }
        }
    }
    // Q is antisymmetric here, so only one orientation braids R
    let lit = universal_realization(&d, Orientation::Literal).unwrap();
    assert!(!check_braid_c_chi(&d, &lit).passed());
    let br = universal_realization(&d, Orientation::Braiding).unwrap();
    assert!(check_braid_c_chi(&d, &br).passed());
}

#[test]
fn universal_realization_exists_whenever_the_conditions_hold() {
    for (name, d) in common::zoo() {
        assert!(check_theorem_conditions(&d, Reading::Amended).passed(), "{name}");
        let real = universal_realization(&d, Orientation::Braiding).unwrap();
        assert!(check_braid_c_chi(&d, &real).passed(), "{name}");
        // z generates C: the order of C is at most the size of the span
        let span: std::collections::BTreeSet<Vec<u64>> =
            (0..d.mp.ng()).flat_map(|g| (0..d.mp.nf()).map(move |x| (g, x))).map(|(g, x)| real.z(g, x).to_vec()).collect();
        assert!(span.len() as u64 <= real.group().order());
    }
}

#[test]
fn ill_defined_characters_iff_laws_fail() {
    let d = trivial_actions(3, 1, 1).unwrap().datum;
    let q = compute_q(&d).with_entry(3, 3, 3, 1, 0);
    assert!(!check_q_multiplicativity(&d.mp, &q).passed());
    assert!(matches!(
        realization_from_q(&d.mp, &q, Orientation::Braiding),
        Err(RealizationError::CharacterIllDefined { .. })
    ));
    assert!(realization_from_q(&d.mp, &compute_q(&d), Orientation::Braiding).is_ok());
}

#[test]
fn split_conditions_imply_the_full_condition() {
    let mut seen_split = false;
    for ex in [finite_field_example(3, 2, 0).unwrap(), kashina(2, false).unwrap(), kashina(2, true).unwrap()] {
        let real = match &ex.realization {
            Some(r) => r.clone(),
            None => cyclic_realization(&ex).unwrap(),
        };
        let splits = split_conditions(&ex.datum, &real);
        let ok = |n: &str| splits.get(n).unwrap().passed();
        let full = check_braid_c_chi(&ex.datum, &real);
        if ok("sigma split with the pairing") && ok("tau split without the pairing") {
            seen_split = true;
            assert!(full.get("realization condition").unwrap().passed(), "{}", ex.name);
        }
        assert!(full.passed(), "{}", ex.name);
    }
    assert!(seen_split);
}

#[test]
fn biproduct_of_the_finite_field_example() {
    let ex = finite_field_example(3, 2, 0).unwrap();
    let real = ex.realization.clone().unwrap();
    let r = Bicrossed::new(ex.datum.clone());
    let bp = Biproduct::new(&r, &real).unwrap();
    assert_eq!(bp.dim(), 162);
    let rep = bp.verify();
    assert!(rep.passed(), "{:?}", rep.failed().collect::<Vec<_>>());
    let seq = bp.exact_sequences(&ex.datum.mp);
    assert!(seq.passed(), "{:?}", seq.failed().collect::<Vec<_>>());

    // one wrong character breaks multiplicativity of Δ
    let bad = real.with_chi(3, 1, vec![1, 1]).unwrap();
    let bp = Biproduct::new(&r, &bad).unwrap();
    assert!(!bp.tables().check_comult_multiplicative("coproduct multiplicative").passed());
}

#[test]
fn biproduct_over_the_universal_group_when_the_stated_realization_fails() {
    let ex = finite_field_example(3, 2, 1).unwrap();
    let r = Bicrossed::new(ex.datum.clone());
    let stated = ex.realization.clone().unwrap();
    let bp = Biproduct::new(&r, &stated).unwrap();
    assert!(!bp.tables().check_comult_multiplicative("coproduct multiplicative").passed());
    let real = universal_realization(&ex.datum, Orientation::Braiding).unwrap();
    let bp = Biproduct::new(&r, &real).unwrap();
    assert_eq!(bp.dim(), 162);
    assert!(bp.verify().passed());
    assert!(bp.exact_sequences(&ex.datum.mp).passed());
}
