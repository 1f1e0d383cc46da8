use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

use bicrossed::cocycles::{Datum, DatumJson, Sigma, Tau};
use bicrossed::matched_pair::MatchedPair;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} does not match the expected schema", path.display()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string(value)?;
    fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))
}

/// A datum whose cocycles have passed validation.
pub fn load_datum(path: &Path) -> Result<Datum> {
    let j: DatumJson = read_json(path)?;
    Datum::from_json(&j).with_context(|| format!("{} is not a valid datum", path.display()))
}

/// Shapes and the matched pair are validated; the cocycle laws are left for
/// the checks to report with witnesses.
pub fn load_datum_unchecked(path: &Path) -> Result<Datum> {
    let j: DatumJson = read_json(path)?;
    let ctx = || format!("{} is not a valid datum", path.display());
    let mp = MatchedPair::from_json(&j.mp).with_context(ctx)?;
    let sigma = Sigma::from_nested(&mp, j.conductor, &j.sigma).with_context(ctx)?;
    let tau = Tau::from_nested(&mp, j.conductor, &j.tau).with_context(ctx)?;
    Ok(Datum { mp, sigma, tau })
}
