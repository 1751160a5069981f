//! The clustered family: words made of equal-letter runs sorted by strictly
//! decreasing symbol, every run of length at least two. Terminated members
//! have `r = sigma + 1` BWT runs and a smallest suffixient set of size
//! `2 * sigma`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::bwt::bwt;
use crate::error::{Error, Result};
use crate::strings::SymbolString;
use crate::suffixient::chi;
use crate::Ratio;

/// Parameters of one clustered word: alphabet size and the run exponents
/// listed from the largest symbol down, i.e. `exponents[0]` is the run
/// length of the greatest symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusteredSpec {
    pub sigma: usize,
    pub exponents: Vec<usize>,
}

impl ClusteredSpec {
    pub fn new(sigma: usize, exponents: Vec<usize>) -> Result<Self> {
        if sigma < 2 {
            return Err(Error::NotClustered(format!("sigma = {sigma} < 2")));
        }
        if exponents.len() != sigma {
            return Err(Error::NotClustered(format!(
                "expected {sigma} exponents, got {}",
                exponents.len()
            )));
        }
        if let Some(bad) = exponents.iter().find(|&&k| k < 2) {
            return Err(Error::NotClustered(format!("exponent {bad} < 2")));
        }
        Ok(Self { sigma, exponents })
    }

    /// Seeded random exponents in `[2..=9]`, for sweeps.
    pub fn random(sigma: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let exponents = (0..sigma).map(|_| rng.gen_range(2..=9)).collect();
        Self::new(sigma, exponents)
    }
}

/// Build the word `s_{sigma-1}^{k_{sigma-1}} ... s_0^{k_0}` over the ranked
/// digit alphabet (`0`, `1`, ...).
pub fn make_clustered(spec: &ClusteredSpec) -> Result<SymbolString> {
    make_clustered_with(spec, &Alphabet::ranked(spec.sigma)?)
}

/// Same word displayed over a caller-chosen alphabet of matching size.
pub fn make_clustered_with(spec: &ClusteredSpec, alphabet: &Alphabet) -> Result<SymbolString> {
    // re-validate: specs can be built directly
    let spec = ClusteredSpec::new(spec.sigma, spec.exponents.clone())?;
    if alphabet.sigma() != spec.sigma {
        return Err(Error::NotClustered(format!(
            "alphabet size {} does not match sigma = {}",
            alphabet.sigma(),
            spec.sigma
        )));
    }
    let mut ranks = Vec::with_capacity(spec.exponents.iter().sum());
    for (i, &count) in spec.exponents.iter().enumerate() {
        let rank = (spec.sigma - 1 - i) as u16;
        ranks.extend(std::iter::repeat_n(rank, count));
    }
    SymbolString::from_ranks(ranks, alphabet.clone())
}

/// Recover the spec from a raw word, rejecting anything outside the family:
/// run symbols must be strictly decreasing, cover the whole alphabet, and
/// every run must have length at least two.
pub fn validate_clustered(w: &SymbolString) -> Result<ClusteredSpec> {
    if !w.is_sentinel_free() {
        return Err(Error::NotClustered("word contains a sentinel".into()));
    }
    let ranks = w.ranks()?;
    if ranks.is_empty() {
        return Err(Error::NotClustered("empty word".into()));
    }
    let mut runs: Vec<(u16, usize)> = Vec::new();
    for &r in &ranks {
        match runs.last_mut() {
            Some((sym, count)) if *sym == r => *count += 1,
            _ => runs.push((r, 1)),
        }
    }
    if !runs.windows(2).all(|p| p[0].0 > p[1].0) {
        return Err(Error::NotClustered("run symbols are not strictly decreasing".into()));
    }
    if let Some(&(sym, len)) = runs.iter().find(|&&(_, len)| len < 2) {
        return Err(Error::NotClustered(format!(
            "run of symbol rank {sym} has length {len} < 2"
        )));
    }
    let sigma = w.sigma();
    if runs.len() != sigma {
        return Err(Error::NotClustered(format!(
            "{} runs do not cover the alphabet of size {sigma}",
            runs.len()
        )));
    }
    ClusteredSpec::new(sigma, runs.iter().map(|&(_, len)| len).collect())
}

/// Measured values and closed-form checks for one clustered word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusteredReport {
    pub sigma: usize,
    pub n: usize,
    pub r: usize,
    pub chi: usize,
    pub ratio: Ratio,
    /// `r == sigma + 1`.
    pub run_count_ok: bool,
    /// `chi == 2 * sigma`.
    pub suffixient_size_ok: bool,
}

impl ClusteredReport {
    pub fn pass(&self) -> bool {
        self.run_count_ok && self.suffixient_size_ok
    }
}

/// Measure a clustered word and compare against the closed forms.
pub fn verify_clustered(w: &SymbolString) -> Result<ClusteredReport> {
    let spec = validate_clustered(w)?;
    let terminated = w.terminate()?;
    let r = bwt(&terminated)?.runs();
    let chi = chi(&terminated);
    Ok(ClusteredReport {
        sigma: spec.sigma,
        n: w.len(),
        r,
        chi,
        ratio: Ratio::new(chi as u64, r as u64),
        run_count_ok: r == spec.sigma + 1,
        suffixient_size_ok: chi == 2 * spec.sigma,
    })
}

/// The closed-form ratio `2 sigma / (sigma + 1)`.
pub fn clustered_ratio(sigma: usize) -> Ratio {
    Ratio::new(2 * sigma as u64, sigma as u64 + 1)
}
