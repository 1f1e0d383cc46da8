use std::str::FromStr;

use anyhow::{bail, Error};

use bicrossed::bicrossed::Bicrossed;
use bicrossed::braiding::{auxiliary_checks, check_braided, check_q_multiplicativity, check_theorem_conditions, compute_q, Reading};
use bicrossed::cocycles::Datum;
use bicrossed::cohomology::{check_outer_components, verify_corollary_q};
use bicrossed::report::{Check, Report};

/// A named bundle of checks on one datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Cocycles,
    Bialgebra,
    Antipode,
    Theorem,
    Braided,
    Cohomology,
}

impl Group {
    pub const ALL: [Group; 6] =
        [Group::Cocycles, Group::Bialgebra, Group::Antipode, Group::Theorem, Group::Braided, Group::Cohomology];

    pub fn name(self) -> &'static str {
        match self {
            Group::Cocycles => "cocycles",
            Group::Bialgebra => "bialgebra",
            Group::Antipode => "antipode",
            Group::Theorem => "theorem",
            Group::Braided => "braided",
            Group::Cohomology => "cohomology",
        }
    }

    pub fn run(self, d: &Datum) -> Report {
        match self {
            Group::Cocycles => {
                let mut r = Report::new();
                r.push(Check::single("matched pair axioms", d.mp.validate().is_ok()));
                r.extend(d.check());
                r
            }
            Group::Bialgebra => Bicrossed::new(d.clone()).verify_bialgebra(),
            Group::Antipode => Bicrossed::new(d.clone()).check_antipode_formulas(),
            Group::Theorem => {
                let mut r = check_theorem_conditions(d, Reading::Amended);
                r.extend(check_q_multiplicativity(&d.mp, &compute_q(d)));
                r
            }
            Group::Braided => {
                let mut r = check_braided(&Bicrossed::new(d.clone()));
                r.extend(auxiliary_checks(&d.mp, &compute_q(d)).0);
                r
            }
            Group::Cohomology => {
                let mut r = verify_corollary_q(d);
                r.extend(check_outer_components(d));
                r
            }
        }
    }
}

/// A comma-separated list of group names, `all` standing for every group.
pub fn parse_list(s: &str) -> Result<Vec<Group>, Error> {
    let mut out: Vec<Group> = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let groups = if part == "all" { Group::ALL.to_vec() } else { vec![part.parse()?] };
        for g in groups {
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    if out.is_empty() {
        bail!("empty check list");
    }
    Ok(out)
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Group, Error> {
        match Group::ALL.into_iter().find(|g| g.name() == s) {
            Some(g) => Ok(g),
            None => {
                let names: Vec<&str> = Group::ALL.iter().map(|g| g.name()).collect();
                bail!("unknown check group `{s}` (expected all or one of {})", names.join(", "))
            }
        }
    }
}

/// Prints reports as they arrive and remembers whether all passed.
#[derive(Debug, Default)]
pub struct Tally {
    pub checks: usize,
    pub failed: usize,
}

impl Tally {
    pub fn section(&mut self, title: &str, r: &Report) -> bool {
        println!("== {title}");
        print!("{r}");
        self.checks += r.checks.len();
        self.failed += r.failed().count();
        r.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn summary(&self) {
        if self.ok() {
            println!("all {} checks pass", self.checks);
        } else {
            println!("{} of {} checks fail", self.failed, self.checks);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_parse() {
        assert_eq!(parse_list("theorem").unwrap(), vec![Group::Theorem]);
        assert_eq!(parse_list("all").unwrap().len(), 6);
        assert_eq!(parse_list("cocycles, cohomology").unwrap(), vec![Group::Cocycles, Group::Cohomology]);
        assert!(parse_list("nonsense").is_err());
        assert!(parse_list(",").is_err());
    }
}
