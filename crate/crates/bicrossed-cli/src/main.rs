//! `bicrossed`: build, verify and export braided bicrossed products.
//!
//! Exit status is 0 when every requested check passes, 1 when some check
//! fails, and 2 on usage, I/O or schema errors.

mod checks;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use bicrossed::bicrossed::{theta_equivalence, Bicrossed};
use bicrossed::braiding::{commutativity_flags, compute_q, plain_flags};
use bicrossed::cocycles::DatumJson;
use bicrossed::cohomology::solve_equivalence;
use bicrossed::examples::{
    cyclic_direct_product, finite_field_example, kashina, s3, search, trivial_actions, trivial_actions_split, Example,
};
use bicrossed::matched_pair::{MatchedPair, MatchedPairJson};
use bicrossed::realization::{check_braid_c_chi, universal_realization, Biproduct, Orientation, Realization, RealizationJson};
use bicrossed::report::Report;

use checks::{parse_list, Group, Tally};

#[derive(Parser, Debug)]
#[command(name = "bicrossed", version, about = "Braided bicrossed products of matched pairs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one of the example families and verify it.
    Example {
        #[command(subcommand)]
        family: Family,
    },
    /// Run check groups on a datum file.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated groups: cocycles, bialgebra, antipode, theorem,
        /// braided, cohomology, or all.
        #[arg(long, default_value = "all")]
        check: String,
        /// Stop after the first group with a failing check.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Write the braiding table of a datum.
    Qtable {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a diagonal realization, either read from a file or the universal one.
    Realize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, conflicts_with = "realization", required_unless_present = "realization")]
        universal: bool,
        #[arg(long)]
        realization: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Side::Braiding)]
        orientation: Side,
        /// Also build the biproduct and check its Hopf axioms and exact sequences.
        #[arg(long)]
        biproduct: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for a diagonal gauge carrying one datum to another.
    Equiv {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate braided data on a small matched pair.
    Search {
        #[arg(long)]
        mp: PathBuf,
        #[arg(long)]
        conductor: u32,
        #[arg(long, default_value_t = 10)]
        max_results: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// G = F = F_p ⊕ F_p with trivial actions.
    TrivialActions {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        b: i64,
        #[command(flatten)]
        opts: ExampleOpts,
    },
    /// G = F_{p²}, F = Z/q acting by a unit of order q.
    P4q {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Index of the one-cocycle family member used for tau.
        #[arg(long, default_value_t = 1)]
        r: u64,
        #[command(flatten)]
        opts: ExampleOpts,
    },
    /// F = Z/N, G = Z/M with trivial actions; omega and mu are exponents of ζ_{MN}.
    Cyclic {
        #[arg(long, default_value_t = 4)]
        n: u64,
        #[arg(long, default_value_t = 2)]
        m: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        omega: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        mu: i64,
        #[command(flatten)]
        opts: ExampleOpts,
    },
    /// The cyclic family with M = 2 and N = 2^n.
    Kashina {
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Use ω with ω^N = -1 instead of ω = 1.
        #[arg(long)]
        minus: bool,
        #[command(flatten)]
        opts: ExampleOpts,
    },
    /// S3 factored as ⟨(12)⟩·⟨(123)⟩ with trivial cocycles.
    S3 {
        #[arg(long, default_value_t = 6)]
        conductor: u32,
        #[command(flatten)]
        opts: ExampleOpts,
    },
}

#[derive(Args, Debug)]
struct ExampleOpts {
    #[arg(long, value_enum, default_value_t = Level::All)]
    verify: Level,
    /// Write the datum as JSON.
    #[arg(long)]
    export: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Level {
    All,
    Basic,
    Theorem,
    Cohomology,
}

impl Level {
    fn groups(self) -> Vec<Group> {
        match self {
            Level::All => Group::ALL.to_vec(),
            Level::Basic => vec![Group::Cocycles, Group::Bialgebra, Group::Antipode],
            Level::Theorem => vec![Group::Theorem, Group::Braided],
            Level::Cohomology => vec![Group::Cohomology],
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    /// ⟨χ(h,y), z(g,x)⟩ = Q^{x,y}_{g,h}
    Braiding,
    /// ⟨χ(g,x), z(h,y)⟩ = Q^{x,y}_{g,h}
    Literal,
}

impl From<Side> for Orientation {
    fn from(s: Side) -> Orientation {
        match s {
            Side::Braiding => Orientation::Braiding,
            Side::Literal => Orientation::Literal,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Example { family } => example(family),
        Command::Verify { input, check, fail_fast } => {
            let groups = parse_list(&check)?;
            let d = io::load_datum_unchecked(&input)?;
            let mut tally = Tally::default();
            for g in groups {
                if !tally.section(g.name(), &g.run(&d)) && fail_fast {
                    break;
                }
            }
            tally.summary();
            Ok(tally.ok())
        }
        Command::Qtable { input, out } => {
            let d = io::load_datum(&input)?;
            let q = compute_q(&d);
            io::write_json(&out, &q.to_json())?;
            println!("wrote Q over μ_{} to {}", q.conductor(), out.display());
            Ok(true)
        }
        Command::Realize { input, universal, realization, orientation, biproduct, out } => {
            let d = io::load_datum(&input)?;
            let real = match (universal, realization) {
                (true, _) => universal_realization(&d, orientation.into())?,
                (false, Some(path)) => {
                    let j: RealizationJson = io::read_json(&path)?;
                    Realization::from_json(&d.mp, &j).with_context(|| format!("{} is not a valid realization", path.display()))?
                }
                (false, None) => bail!("pass --universal or --realization FILE"),
            };
            println!("C invariant factors {:?}, order {}", real.group().factors(), real.group().order());
            let mut tally = Tally::default();
            tally.section("realization", &check_braid_c_chi(&d, &real));
            if biproduct {
                let b = Biproduct::new(&Bicrossed::new(d.clone()), &real)?;
                println!("biproduct of dimension {}", b.dim());
                tally.section("biproduct", &b.verify());
                tally.section("exact sequences", &b.exact_sequences(&d.mp));
            }
            if let Some(path) = out {
                io::write_json(&path, &real.to_json(&d.mp))?;
            }
            tally.summary();
            Ok(tally.ok())
        }
        Command::Equiv { left, right, out } => {
            let (l, r) = (io::load_datum(&left)?, io::load_datum(&right)?);
            let Some(nu) = solve_equivalence(&l, &r) else {
                println!("no diagonal gauge relates the two data");
                return Ok(false);
            };
            println!("gauge {}", serde_json::to_string(&nu.to_nested())?);
            let rep = theta_equivalence(&l, &r, &nu);
            let mut tally = Tally::default();
            tally.section("equivalence", &rep);
            if let Some(path) = out {
                io::write_json(&path, &serde_json::json!({ "conductor": nu.conductor(), "gauge": nu.to_nested() }))?;
            }
            tally.summary();
            Ok(tally.ok())
        }
        Command::Search { mp, conductor, max_results, out } => {
            let j: MatchedPairJson = io::read_json(&mp)?;
            let pair = MatchedPair::from_json(&j).with_context(|| format!("{} is not a matched pair", mp.display()))?;
            let found = search(&pair, conductor, max_results)?;
            let data: Vec<DatumJson> = found.iter().map(|d| d.to_json()).collect();
            match out {
                Some(path) => {
                    io::write_json(&path, &data)?;
                    println!("found {} braided data", data.len());
                }
                None => println!("{}", serde_json::to_string_pretty(&data)?),
            }
            Ok(true)
        }
    }
}

fn example(family: Family) -> Result<bool> {
    let tau_exact = matches!(family, Family::TrivialActions { .. });
    let (ex, opts) = match family {
        Family::TrivialActions { p, a, b, opts } => (trivial_actions(p, a, b)?, opts),
        Family::P4q { p, q, r, opts } => (finite_field_example(p, q, r)?, opts),
        Family::Cyclic { n, m, omega, mu, opts } => (cyclic_direct_product(n, m, omega, mu)?, opts),
        Family::Kashina { n, minus, opts } => (kashina(n, minus)?, opts),
        Family::S3 { conductor, opts } => (s3(conductor), opts),
    };
    let d = &ex.datum;
    println!("{}: |G| = {}, |F| = {}, dim {}, conductor {}", ex.name, d.mp.ng(), d.mp.nf(), d.dim(), d.conductor());
    let mut tally = Tally::default();
    for g in opts.verify.groups() {
        tally.section(g.name(), &g.run(d));
    }
    if opts.verify == Level::All {
        tally.section("family", &family_checks(&ex, tau_exact));
        let r = Bicrossed::new(d.clone());
        let plain = plain_flags(&r);
        println!("commutative {}, cocommutative {}", plain.commutative, plain.cocommutative);
        if let Some(br) = commutativity_flags(&r) {
            println!("braided commutative {}, braided cocommutative {}", br.commutative, br.cocommutative);
        }
    }
    if let Some(path) = opts.export {
        io::write_json(&path, &d.to_json())?;
    }
    tally.summary();
    Ok(tally.ok())
}

/// What the family asserts beyond the generic groups. With trivial actions
/// `Q` splits into two coboundaries; `tau_exact` also asks the `τ` part to vanish.
fn family_checks(ex: &Example, tau_exact: bool) -> Report {
    let d = &ex.datum;
    let mut r = Report::new();
    r.push(ex.check_closed_form());
    if let Some(real) = &ex.realization {
        r.extend(check_braid_c_chi(d, real));
    }
    if d.mp.is_act_f_trivial() && d.mp.is_act_g_trivial() {
        let mut split = trivial_actions_split(d);
        if !tau_exact {
            split.checks.retain(|c| c.name != "coboundary of tau is trivial");
        }
        r.extend(split);
    }
    r
}
