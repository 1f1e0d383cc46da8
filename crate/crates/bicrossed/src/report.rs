//! Pass/fail reports and the exhaustive sweep driver shared by all checks.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

/// Outcome of one exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub tuples: u64,
    pub failures: u64,
    /// First failing tuple found (smallest in lexicographic order in count mode).
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn single(name: &str, ok: bool) -> Check {
        Check {
            name: name.to_string(),
            tuples: 1,
            failures: u64::from(!ok),
            witness: if ok { None } else { Some(Vec::new()) },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} tuples)", self.name, self.tuples)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} tuples fail; witness {:?})",
                self.name,
                self.failures,
                self.tuples,
                self.witness.as_deref().unwrap_or(&[])
            )
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Stop at the first witness.
    FailFast,
    /// Visit every tuple and count failures.
    #[default]
    Count,
}

/// Runs `ok` on every tuple of `dims[0] x .. x dims[k-1]`, in parallel over
/// the first coordinate.
pub fn sweep<P>(name: &str, dims: &[usize], mode: Mode, ok: P) -> Check
where
    P: Fn(&[usize]) -> bool + Sync,
{
    let tuples: u64 = dims.iter().map(|&d| d as u64).product();
    let failures = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let witness: Mutex<Option<Vec<usize>>> = Mutex::new(None);
    if tuples > 0 {
        let rest = &dims[1..];
        (0..dims[0]).into_par_iter().for_each(|first| {
            let mut idx = vec![0usize; dims.len()];
            idx[0] = first;
            loop {
                if mode == Mode::FailFast && stop.load(Ordering::Relaxed) {
                    return;
                }
                if !ok(&idx) {
                    failures.fetch_add(1, Ordering::Relaxed);
                    stop.store(true, Ordering::Relaxed);
                    let mut w = witness.lock().unwrap();
                    if w.as_ref().is_none_or(|cur| idx < *cur) {
                        *w = Some(idx.clone());
                    }
                }
                // odometer over the remaining coordinates
                let mut k = rest.len();
                loop {
                    if k == 0 {
                        return;
                    }
                    idx[k] += 1;
                    if idx[k] < rest[k - 1] {
                        break;
                    }
                    idx[k] = 0;
                    k -= 1;
                }
            }
        });
    }
    Check {
        name: name.to_string(),
        tuples,
        failures: failures.into_inner(),
        witness: witness.into_inner().unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_failures() {
        let c = sweep("odd sum", &[3, 4], Mode::Count, |t| (t[0] + t[1]) % 2 == 0);
        assert_eq!(c.tuples, 12);
        assert_eq!(c.failures, 6);
        assert_eq!(c.witness, Some(vec![0, 1]));
        let ok = sweep("always", &[2, 2, 2], Mode::Count, |_| true);
        assert!(ok.passed());
        assert_eq!(ok.tuples, 8);
    }

    #[test]
    fn fail_fast_finds_a_witness() {
        let c = sweep("t", &[5, 5], Mode::FailFast, |t| t != [2, 3]);
        assert!(!c.passed());
        assert_eq!(c.witness, Some(vec![2, 3]));
    }

    #[test]
    fn single_coordinate() {
        let c = sweep("one", &[4], Mode::Count, |t| t[0] != 3);
        assert_eq!(c.failures, 1);
        assert_eq!(c.witness, Some(vec![3]));
    }
}
