//! One line per acceptance criterion. Runs without the libtest harness so
//! every line is printed; exits nonzero if the failing set is not the known one.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bicrossed::algebra::snf::{from_i64, matmul};
use bicrossed::algebra::{smith_normal_form, CycInt, Group, Root};
use bicrossed::bicrossed::{antipode_formula, theta_equivalence, Bicrossed};
use bicrossed::braiding::{check_braided, check_theorem_conditions, compute_q, plain_flags, Flags, Reading};
use bicrossed::cocycles::{Datum, Gauge};
use bicrossed::cohomology::{delta_h, delta_v, solve_equivalence, verify_corollary_q, Cochain};
use bicrossed::examples::{
    alpha_family, cyclic_direct_product, enumerate_alpha, finite_field_example, finite_field_pair, s3, trivial_actions,
    Example,
};
use bicrossed::hopf::Element;
use bicrossed::matched_pair::MatchedPair;
use bicrossed::realization::{check_braid_c_chi, enumerate_semidirect_z, universal_realization, Biproduct, Orientation};
use bicrossed::report::Report;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(what: &str, r: &Report) -> Result<(), String> {
    match r.failed().next() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: `{}` fails {} of {} tuples, first at {:?}", c.name, c.failures, c.tuples, c.witness.clone().unwrap_or_default())),
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    ensure(t.elapsed() < limit, || format!("took {:.2?}, limit {limit:?}", t.elapsed()))
}

fn s3_parts() -> (Group, Vec<usize>, Vec<usize>) {
    let (s3, perms) = Group::symmetric(3);
    let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let r = idx(&[1, 2, 0]);
    let f = vec![0, idx(&[1, 0, 2])];
    let g = vec![0, r, s3.mul(r, r)];
    (s3, f, g)
}

fn matched_pair_from_s3() -> Outcome {
    let t = Instant::now();
    let (s3, f, g) = s3_parts();
    let mp = MatchedPair::from_factorization(&s3, &f, &g).map_err(|e| e.to_string())?;
    ensure(mp.is_act_f_trivial(), || "left action not trivial".into())?;
    for (gi, &ge) in g.iter().enumerate() {
        for (xi, &xe) in f.iter().enumerate() {
            let conj = s3.mul(s3.mul(s3.inv(xe), ge), xe);
            ensure(g[mp.act_g(gi, xi)] == conj, || format!("right action at ({gi}, {xi}) is not conjugation"))?;
        }
    }
    mp.validate().map_err(|e| e.to_string())?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("{:.2?}", t.elapsed()))
}

fn trivial_actions_family() -> Outcome {
    let t = Instant::now();
    let ex = trivial_actions(3, 1, 1).map_err(|e| e.to_string())?;
    let d = &ex.datum;
    ensure(d.dim() == 81, || format!("dim {}", d.dim()))?;
    d.sigma.validate(&d.mp).map_err(|e| e.to_string())?;
    d.tau.validate(&d.mp).map_err(|e| e.to_string())?;
    report_ok("displayed conditions", &check_theorem_conditions(d, Reading::Verbatim))?;
    report_ok("displayed conditions", &check_theorem_conditions(d, Reading::Amended))?;
    let r = Bicrossed::new(d.clone());
    report_ok("bialgebra", &r.verify_bialgebra())?;
    report_ok("braided", &check_braided(&r))?;
    let closed = ex.check_closed_form();
    ensure(closed.passed() && closed.tuples == 6561, || format!("{closed:?}"))?;
    let flags = plain_flags(&r);
    ensure(flags == Flags { commutative: false, cocommutative: false }, || format!("{flags:?}"))?;
    // x = (1,0), y = (0,1), g = h = (1,0)
    let v = compute_q(d).value(3, 3, 3, 1);
    ensure(v == Root::new(3, 2), || format!("Q value {v:?}"))?;
    within(t, Duration::from_secs(30))?;
    Ok(format!("6561 Q entries match, {:.2?}", t.elapsed()))
}

fn finite_field_family() -> Outcome {
    let t = Instant::now();
    let ex = finite_field_example(3, 2, 1).map_err(|e| e.to_string())?;
    let d = &ex.datum;
    ensure(d.dim() == 18, || format!("dim {}", d.dim()))?;
    let r = Bicrossed::new(d.clone());
    let flags = plain_flags(&r);
    let stated = ex.realization.as_ref().unwrap();
    let rep = check_braid_c_chi(d, stated);
    let closed = ex.check_closed_form();
    let mut problems = Vec::new();
    if let Err(e) = report_ok("stated realization", &rep) {
        problems.push(e);
    }
    if !closed.passed() {
        problems.push(format!(
            "compute_q differs from the closed form on {} of {} tuples, first at (g,h,x,y) = {:?}",
            closed.failures, closed.tuples, closed.witness.clone().unwrap_or_default()
        ));
    }
    if flags != (Flags { commutative: false, cocommutative: false }) {
        problems.push(format!("flags {flags:?}"));
    }
    within(t, Duration::from_secs(5))?;
    if problems.is_empty() {
        Ok(format!("{:.2?}", t.elapsed()))
    } else {
        Err(format!(
            "{}; for q = 2 the twist ν² is 1, so x ↦ τ_x is a one-cocycle only for r = 0, \
             and r = 0 makes the coalgebra cocommutative",
            problems.join("; ")
        ))
    }
}

fn antipode_agreement(ex: &Example) -> Result<(), String> {
    let r = Bicrossed::new(ex.datum.clone());
    let oracle = r.tables().convolution_inverse().map_err(|e| e.to_string())?;
    let squares = r.antipode_squares();
    for b in 0..r.dim() {
        let (g, x) = r.label(b);
        let (e, c) = antipode_formula(r.datum(), g, x);
        let mut closed = Element::new(r.tables().conductor);
        closed.add_root(c, e, 1);
        ensure(oracle[b] == closed, || format!("{}: oracle differs at basis {b}", ex.name))?;
        ensure(squares[b] == (e, c), || format!("{}: square calculus differs at basis {b}", ex.name))?;
    }
    Ok(())
}

fn both_families() -> Result<Vec<Example>, String> {
    let mut out = vec![trivial_actions(3, 1, 1).map_err(|e| e.to_string())?];
    for r in [0, 1] {
        out.push(finite_field_example(3, 2, r).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn antipodes() -> Outcome {
    let exs = both_families()?;
    for ex in &exs {
        antipode_agreement(ex)?;
    }
    Ok(format!("{} datasets, every basis vector", exs.len()))
}

fn cohomology_corollary() -> Outcome {
    let exs = both_families()?;
    for ex in &exs {
        report_ok(&ex.name, &verify_corollary_q(&ex.datum))?;
    }
    Ok(format!("{} datasets", exs.len()))
}

fn universal_group() -> Outcome {
    let t = Instant::now();
    let d = trivial_actions(3, 1, 1).map_err(|e| e.to_string())?.datum;
    let real = universal_realization(&d, Orientation::Literal).map_err(|e| e.to_string())?;
    real.validate(&d.mp).map_err(|e| e.to_string())?;
    let q = compute_q(&d);
    let (ng, nf) = (d.mp.ng(), d.mp.nf());
    for g in 0..ng {
        for h in 0..ng {
            for x in 0..nf {
                for y in 0..nf {
                    // ⟨χ(g, x), z(h, y)⟩
                    let v = real.pairing(h, y, g, x);
                    ensure(v == q.exp(g, h, x, y), || format!("pairing differs at {:?}", (g, h, x, y)))?;
                }
            }
        }
    }
    let mut others: Vec<Datum> = both_families()?.into_iter().map(|e| e.datum).collect();
    others.push(s3(6).datum);
    others.push(cyclic_direct_product(4, 2, 1, 0).map_err(|e| e.to_string())?.datum);
    for o in &others {
        if check_theorem_conditions(o, Reading::Amended).passed() {
            for orient in [Orientation::Literal, Orientation::Braiding] {
                universal_realization(o, orient).map_err(|e| e.to_string())?;
            }
        }
    }
    within(t, Duration::from_secs(10))?;
    Ok(format!("C has invariant factors {:?}, {:.2?}", real.group().factors(), t.elapsed()))
}

fn biproduct() -> Outcome {
    let t = Instant::now();
    let ex = finite_field_example(3, 2, 1).map_err(|e| e.to_string())?;
    let r = Bicrossed::new(ex.datum.clone());
    let real = universal_realization(&ex.datum, Orientation::Braiding).map_err(|e| e.to_string())?;
    report_ok("realization", &check_braid_c_chi(&ex.datum, &real))?;
    ensure(real.group().order() == 9, || format!("|C| = {}", real.group().order()))?;
    let bp = Biproduct::new(&r, &real).map_err(|e| e.to_string())?;
    ensure(bp.dim() == 162, || format!("dim {}", bp.dim()))?;
    report_ok("Hopf axioms", &bp.verify())?;
    report_ok("exact sequences", &bp.exact_sequences(&ex.datum.mp))?;
    within(t, Duration::from_secs(60))?;
    Ok(format!("over C with invariant factors {:?}, {:.2?}", real.group().factors(), t.elapsed()))
}

fn equivalence() -> Outcome {
    let omega = 1;
    let left = cyclic_direct_product(4, 2, omega, 0).map_err(|e| e.to_string())?.datum;
    let right = cyclic_direct_product(4, 2, 0, omega).map_err(|e| e.to_string())?.datum;
    let expected = Gauge::from_fn(&left.mp, 8, |s, j| omega * (s * j) as i64);
    let found = solve_equivalence(&left, &right).ok_or("no gauge found")?;
    report_ok("found gauge", &theta_equivalence(&left, &right, &found))?;
    report_ok("stated gauge", &theta_equivalence(&left, &right, &expected))?;
    ensure(found == expected, || format!("found {:?}, expected {:?}", found.to_nested(), expected.to_nested()))?;
    Ok("ν(b^s, a^j) = ω^{sj}".into())
}

fn cocycle_enumeration() -> Outcome {
    let got = enumerate_alpha(3, 2).map_err(|e| e.to_string())?;
    ensure(got.len() == 9, || format!("{} cocycles", got.len()))?;
    let mut a = got.clone();
    let mut b = alpha_family(3, 2).map_err(|e| e.to_string())?;
    a.sort();
    b.sort();
    ensure(a == b, || "cocycles differ from the multiples of the q-number".into())?;
    let (mp, _, _) = finite_field_pair(3, 2).map_err(|e| e.to_string())?;
    let z2 = bicrossed::algebra::AbelianGroup::new(vec![2]).map_err(|e| e.to_string())?;
    let zs = enumerate_semidirect_z(&mp, &z2).map_err(|e| e.to_string())?;
    ensure(zs.len() == 1 && zs[0].iter().flatten().all(|v| v[0] == 0), || format!("{} maps", zs.len()))?;
    Ok("9 cocycles; one map into Z/2".into())
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (s3g, f, g) = s3_parts();
    let pairs = [
        MatchedPair::from_factorization(&s3g, &f, &g).unwrap(),
        MatchedPair::from_factorization(&s3g, &g, &f).unwrap(),
        finite_field_pair(3, 2).unwrap().0,
    ];
    let mut cochains = 0;
    for i in 0..120 {
        let mp = &pairs[i % pairs.len()];
        let n = rng.gen_range(2..=8u32);
        let c = Cochain::from_fn(mp, 1, 1, n, |_, _| rng.gen_range(0..n as i64)).unwrap();
        let hh = delta_h(mp, &delta_h(mp, &c).unwrap()).unwrap();
        let vv = delta_v(mp, &delta_v(mp, &c).unwrap()).unwrap();
        ensure(hh.is_trivial() && vv.is_trivial(), || format!("differential squares nontrivially on instance {i}"))?;
        cochains += 1;
    }
    for i in 0..120 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        let m = from_i64(&m);
        let s = smith_normal_form(&m);
        ensure(matmul(&matmul(&s.u, &m), &s.v) == s.d, || format!("U M V differs from D on matrix {i}"))?;
        let diag = s.diagonal();
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            ensure(divides, || format!("divisibility chain broken on matrix {i}"))?;
        }
    }
    for n in 1..=24u32 {
        let mut s = CycInt::zero(n);
        for k in 0..n {
            s.add_root(Root::new(n, k as i64), 1);
        }
        ensure(s.is_zero() == (n > 1), || format!("sum of the {n}-th roots"))?;
    }
    let r = Bicrossed::new(s3(2).datum);
    let adj = r.check_adjoint_on_functions();
    ensure(adj.passed(), || format!("{adj:?}"))?;
    let t = r.tables();
    for a in 0..r.dim() {
        for b in 0..r.dim() {
            // Σ Q(a₂, b) a₁ b S(a₂) through the generic element operations
            let mut expect = Element::new(t.conductor);
            for (&(l, rr), c) in t.comultiply(&t.basis(a)).unwrap().iter() {
                let lb = t.multiply(&t.basis(l), &t.basis(b)).unwrap();
                let term = t.multiply(&lb, &t.antipode_of(&t.basis(rr)).unwrap()).unwrap();
                for (&k, v) in term.iter() {
                    expect.add_scaled(k, &c.try_mul(v).unwrap(), t.braid(rr, b));
                }
            }
            ensure(r.braided_adjoint(a, b) == expect, || format!("adjoint differs at ({a}, {b})"))?;
        }
    }
    Ok(format!("{cochains} cochains, 120 matrices, N ≤ 24, {} basis pairs for the adjoint", r.dim() * r.dim()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("matched pair from the S3 factorization", matched_pair_from_s3),
        ("trivial actions, p = 3, a = b = 1", trivial_actions_family),
        ("finite-field family, p = 3, q = 2", finite_field_family),
        ("antipode: closed formula, oracle and squares", antipodes),
        ("Q from the total differential", cohomology_corollary),
        ("universal realization", universal_group),
        ("biproduct of the finite-field family", biproduct),
        ("equivalence in the cyclic family", equivalence),
        ("cocycle enumeration", cocycle_enumeration),
        ("property suites", property_suites),
    ];
    // Criterion 3 cannot hold as stated: for q = 2 the stated realization
    // breaks the realization condition and Q differs from its closed form.
    // It is reported as FAIL with its witness; the run only errors if the
    // set of failing criteria differs from this one, in either direction.
    let expected_failures = [3];
    let mut failing = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failing.push(i + 1);
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failing.len(), criteria.len());
    if failing == expected_failures {
        println!("the failing set {failing:?} is the known one");
        ExitCode::SUCCESS
    } else {
        println!("failing set {failing:?} differs from the known set {expected_failures:?}");
        ExitCode::FAILURE
    }
}
