//! The five subcommands, each producing a row report plus any extra stdout.

use anyhow::{anyhow, bail, Context};
use serde_json::{json, Value};

use chiruns::bwt::{bwt, invert_bwt, r_measures, Inversion};
use chiruns::clustered::{make_clustered, verify_clustered, ClusteredSpec};
use chiruns::conjecture::{conjecture_report, ENUMERATION_CAP};
use chiruns::debruijn::{lex_least_debruijn, verify_sigma_bounds, DeBruijnCycle};
use chiruns::f2poly::F2Poly;
use chiruns::lfsr::cycle_join;
use chiruns::oracle;
use chiruns::runmin::{family_degrees, make_runmin, verify_linearized};
use chiruns::suffixient::{brute_force_chi, chi, sre, BRUTE_FORCE_CAP};
use chiruns::{Alphabet, Ratio, SymbolString};

use crate::report::{Report, Row};

/// Orders above this need `--big`.
pub const BIG_ORDER_THRESHOLD: u32 = 15;

pub enum AlphabetChoice {
    Auto,
    Binary,
    Digits,
    Bytes,
}

impl AlphabetChoice {
    fn resolve(&self, bytes: &[u8]) -> anyhow::Result<Alphabet> {
        let alphabet = match self {
            AlphabetChoice::Auto => Alphabet::infer(bytes)?,
            AlphabetChoice::Binary => Alphabet::binary(),
            AlphabetChoice::Digits => Alphabet::ranked(10)?,
            AlphabetChoice::Bytes => {
                Alphabet::from_labels((0u8..=255).filter(|&b| b != b'$').collect::<Vec<_>>())?
            }
        };
        Ok(alphabet)
    }
}

pub fn run_measure(
    bytes: &[u8],
    alphabet: &AlphabetChoice,
    oracle_mode: bool,
) -> anyhow::Result<Report> {
    if bytes.is_empty() {
        bail!("empty input");
    }
    let alphabet = alphabet.resolve(bytes)?;
    let word = SymbolString::decode_with(bytes, &alphabet).context("alphabet decode failed")?;
    let measures = r_measures(&word)?;
    let terminated = word.terminate()?;
    let chi_v = chi(&terminated);
    let sre_v = sre(&word);

    let mut notes = Vec::new();
    if oracle_mode {
        let brute = brute_force_chi(&terminated).map_err(|e| {
            anyhow!("--oracle refused: {e} (cap {BRUTE_FORCE_CAP})")
        })?;
        if brute != chi_v {
            bail!("oracle mismatch: chi = {chi_v} but brute force found {brute}");
        }
        let fast = bwt(&terminated)?;
        let naive = oracle::rotation_matrix_bwt(&terminated)?;
        if fast != naive {
            bail!("oracle mismatch: suffix-array BWT differs from rotation-matrix BWT");
        }
        match invert_bwt(fast.last_column())? {
            Inversion::Recovered(back) if back == terminated => {}
            other => bail!("oracle mismatch: BWT did not invert to the input ({other:?})"),
        }
        notes.push("oracle cross-checks passed".to_string());
    }

    let mut row = Row::new("measure").ratio(Ratio::new(chi_v as u64, measures.r as u64));
    row.sigma = Some(word.sigma() as u64);
    row.n = Some(word.len() as u64);
    row.chi = Some(chi_v as u64);
    row.r = Some(measures.r as u64);
    row.r_bar = Some(measures.r_bar as u64);
    row.r_c = Some(measures.r_c as u64);
    row.sre = Some(sre_v as u64);

    let params = json!({
        "n": word.len(),
        "sigma": word.sigma(),
        "oracle": oracle_mode,
    });
    let mut report = Report::new("measure", params, vec![row]);
    if !notes.is_empty() {
        report = report.with_detail(json!({ "notes": notes }));
    }
    Ok(report)
}

pub enum GenKind {
    Clustered,
    Runmin,
    Debruijn,
}

pub struct GenParams {
    pub kind: GenKind,
    pub sigma: Option<usize>,
    pub k: Option<u32>,
    pub exponents: Option<Vec<usize>>,
    pub poly: Option<String>,
    pub big: bool,
}

/// Returns the emitted word and the provenance line.
pub fn run_gen(params: &GenParams) -> anyhow::Result<(String, Value)> {
    match params.kind {
        GenKind::Clustered => {
            let sigma = params.sigma.ok_or_else(|| anyhow!("gen clustered needs --sigma"))?;
            let exponents = params
                .exponents
                .clone()
                .ok_or_else(|| anyhow!("gen clustered needs --exponents"))?;
            let spec = ClusteredSpec::new(sigma, exponents.clone())?;
            let word = make_clustered(&spec)?;
            let provenance = json!({
                "command": "gen",
                "family": "clustered",
                "params": { "sigma": sigma, "exponents": exponents },
                "n": word.len(),
                "expected": { "r": sigma + 1, "chi": 2 * sigma },
            });
            Ok((word.to_string(), provenance))
        }
        GenKind::Runmin => {
            let k = params.k.ok_or_else(|| anyhow!("gen runmin needs --k"))?;
            require_big(k, params.big)?;
            let cycle = make_runmin(k)?;
            let word = cycle.canonical_rotation();
            let provenance = json!({
                "command": "gen",
                "family": "runmin",
                "params": { "k": k },
                "n": word.len(),
                "expected": {
                    "r_c": (1u64 << (k - 1)) + 2,
                    "r": (1u64 << (k - 1)) + 4,
                    "chi": (1u64 << k) + 1,
                },
            });
            Ok((word.to_string(), provenance))
        }
        GenKind::Debruijn => {
            let k = params.k.ok_or_else(|| anyhow!("gen debruijn needs --k"))?;
            let (cycle, method): (DeBruijnCycle, &str) = match &params.poly {
                Some(text) => {
                    let poly = F2Poly::parse(text)?;
                    require_big(poly.degree(), params.big)?;
                    let joined = cycle_join(poly)?;
                    if joined.order() != k {
                        bail!("polynomial degree {} does not match --k {k}", joined.order());
                    }
                    let word = joined.de_bruijn_cycle()?;
                    (DeBruijnCycle::verify(word, k)?, "lfsr-cycle-join")
                }
                None => {
                    let sigma =
                        params.sigma.ok_or_else(|| anyhow!("gen debruijn needs --sigma or --poly"))?;
                    require_big(k, params.big)?;
                    (lex_least_debruijn(sigma, k)?, "lex-least")
                }
            };
            let sigma = cycle.sigma() as u64;
            let power = sigma.pow(k);
            let word = cycle.canonical_rotation();
            let provenance = json!({
                "command": "gen",
                "family": "debruijn",
                "params": { "sigma": cycle.sigma(), "k": k, "method": method },
                "n": word.len(),
                "expected": {
                    "sre_linearized": power,
                    "chi_linearized_terminated": power + 1,
                    "r_lower_bound": sigma.pow(k - 1) * (sigma - 1) + 1,
                },
            });
            Ok((word.to_string(), provenance))
        }
    }
}

fn require_big(k: u32, big: bool) -> anyhow::Result<()> {
    if k > BIG_ORDER_THRESHOLD && !big {
        bail!("k = {k} exceeds the default budget of {BIG_ORDER_THRESHOLD}; pass --big");
    }
    Ok(())
}

pub enum VerifyScope {
    Clustered,
    Runmin,
    SigmaBounds,
    All,
}

pub struct VerifyParams {
    pub scope: VerifyScope,
    pub max_sigma: usize,
    pub max_k: u32,
    pub count: usize,
    pub seed: u64,
    pub big: bool,
}

pub fn run_verify(params: &VerifyParams) -> anyhow::Result<Report> {
    let mut rows = Vec::new();
    let mut incomplete = false;
    match params.scope {
        VerifyScope::Clustered => clustered_rows(params, &mut rows)?,
        VerifyScope::Runmin => incomplete = runmin_rows(params, &mut rows)?,
        VerifyScope::SigmaBounds => sigma_bounds_rows(params, &mut rows)?,
        VerifyScope::All => {
            clustered_rows(params, &mut rows)?;
            incomplete = runmin_rows(params, &mut rows)?;
            sigma_bounds_rows(params, &mut rows)?;
        }
    }
    let scope = match params.scope {
        VerifyScope::Clustered => "clustered",
        VerifyScope::Runmin => "runmin",
        VerifyScope::SigmaBounds => "sigma-bounds",
        VerifyScope::All => "all",
    };
    let params_json = json!({
        "scope": scope,
        "max_sigma": params.max_sigma,
        "max_k": params.max_k,
        "count": params.count,
        "seed": params.seed,
        "big": params.big,
        "incomplete": incomplete,
    });
    Ok(Report::new("verify", params_json, rows))
}

fn clustered_rows(params: &VerifyParams, rows: &mut Vec<Row>) -> anyhow::Result<()> {
    for sigma in 2..=params.max_sigma {
        for trial in 0..params.count as u64 {
            let seed = params.seed ^ ((sigma as u64) << 32) ^ trial;
            let spec = ClusteredSpec::random(sigma, seed)?;
            let word = make_clustered(&spec)?;
            let rep = verify_clustered(&word)?;
            let measures = r_measures(&word)?;
            let mut row = Row::new("clustered").ratio(rep.ratio);
            row.k = Some(trial);
            row.sigma = Some(sigma as u64);
            row.n = Some(rep.n as u64);
            row.chi = Some(rep.chi as u64);
            row.r = Some(rep.r as u64);
            row.r_bar = Some(measures.r_bar as u64);
            row.r_c = Some(measures.r_c as u64);
            row.sre = Some(sre(&word) as u64);
            row.pass = rep.pass();
            rows.push(row);
        }
    }
    Ok(())
}

fn runmin_rows(params: &VerifyParams, rows: &mut Vec<Row>) -> anyhow::Result<bool> {
    let ceiling = if params.big { params.max_k.max(BIG_ORDER_THRESHOLD) } else { BIG_ORDER_THRESHOLD };
    let effective = params.max_k.min(ceiling);
    let incomplete = params.max_k > effective;
    if incomplete {
        eprintln!(
            "note: runmin verification truncated at k = {effective} (requested {}); pass --big for larger orders",
            params.max_k
        );
    }
    for k in family_degrees(effective)? {
        let rep = verify_linearized(k)?;
        let mut row = Row::new("runmin").ratio(rep.ratio);
        row.k = Some(k as u64);
        row.sigma = Some(2);
        row.n = Some(rep.n as u64);
        row.chi = Some(rep.chi as u64);
        row.r = Some(rep.r as u64);
        row.r_c = Some(rep.r_c as u64);
        row.sre = Some((rep.chi - 1) as u64);
        row.pass = rep.pass();
        rows.push(row);
        if !rep.pass() {
            if let Some(m) = &rep.bwt_mismatch {
                eprintln!(
                    "runmin k={k}: BWT mismatch at {}: expected ...{}... got ...{}...",
                    m.index, m.expected, m.actual
                );
            }
            if let Some(m) = &rep.cbwt_mismatch {
                eprintln!(
                    "runmin k={k}: cBWT mismatch at {}: expected ...{}... got ...{}...",
                    m.index, m.expected, m.actual
                );
            }
        }
    }
    Ok(incomplete)
}

fn sigma_bounds_rows(params: &VerifyParams, rows: &mut Vec<Row>) -> anyhow::Result<()> {
    for sigma in 2..=params.max_sigma.min(5) {
        for k in 2..=params.max_k.min(4) {
            if (sigma as u64).pow(k) > 1024 {
                continue;
            }
            let cycle = lex_least_debruijn(sigma, k)?;
            let rep = verify_sigma_bounds(&cycle)?;
            let mut row = Row::new("debruijn").ratio(rep.ratio);
            row.k = Some(k as u64);
            row.sigma = Some(sigma as u64);
            row.n = Some(rep.n as u64);
            row.chi = Some(rep.chi as u64);
            row.r = Some(rep.r as u64);
            row.sre = Some(rep.sre as u64);
            row.pass = rep.pass();
            rows.push(row);
        }
    }
    Ok(())
}

pub struct SweepParams {
    pub max_sigma: usize,
    pub count: usize,
    pub seed: u64,
}

/// The parameterizable randomized clustered sweep; `verify --scope
/// clustered` is this sweep at the acceptance configuration.
pub fn run_sweep(params: &SweepParams) -> anyhow::Result<Report> {
    let verify = VerifyParams {
        scope: VerifyScope::Clustered,
        max_sigma: params.max_sigma,
        max_k: 0,
        count: params.count,
        seed: params.seed,
        big: false,
    };
    let mut rows = Vec::new();
    clustered_rows(&verify, &mut rows)?;
    let params_json = json!({
        "max_sigma": params.max_sigma,
        "count": params.count,
        "seed": params.seed,
    });
    Ok(Report::new("sweep", params_json, rows))
}

pub fn run_conjecture(k: u32, big: bool) -> anyhow::Result<Report> {
    require_big(k, big)?;
    if k > ENUMERATION_CAP {
        eprintln!(
            "note: k = {k} exceeds the enumeration cap of {ENUMERATION_CAP}; dollar-scan-only mode"
        );
    }
    let rep = conjecture_report(k)?;
    let mut row = Row::new("conjecture");
    row.k = Some(k as u64);
    row.sigma = Some(2);
    row.n = Some(rep.pattern.len() as u64);
    row.pass = rep.census.as_ref().is_none_or(|c| c.consistency_ok);
    let scan_json = json!({
        "pattern": rep.pattern.to_string(),
        "valid_positions": rep.scan.valid_positions,
        "recovered": rep.scan.recovered.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "family_has_this_order": rep.family_order,
        "scan_matches_expectation": rep.scan_matches_expectation,
    });
    let census_json = rep.census.as_ref().map(|c| {
        json!({
            "total_cycles": c.total_cycles,
            "achiever_count": c.achievers.len(),
            "achievers": c
                .achievers
                .iter()
                .map(|a| a.canonical_rotation().to_string())
                .collect::<Vec<_>>(),
            "family_member_index": c.family_member_index,
            "insertion_positions": c.insertion_positions,
            "consistency_ok": c.consistency_ok,
        })
    });
    let detail = match census_json {
        Some(census) => json!({ "scan": scan_json, "census": census }),
        None => json!({ "scan": scan_json }),
    };
    let report = Report::new("conjecture", json!({ "k": k }), vec![row]).with_detail(detail);
    Ok(report)
}

/// Literal word decoding that keeps the CLI error text uniform.
pub fn literal_or_file(
    literal: Option<&str>,
    input: Option<&std::path::Path>,
) -> anyhow::Result<Vec<u8>> {
    match (literal, input) {
        (Some(text), None) => Ok(text.as_bytes().to_vec()),
        (None, Some(path)) => {
            std::fs::read(path).with_context(|| format!("reading {}", path.display()))
        }
        (Some(_), Some(_)) => bail!("pass either a literal word or --input, not both"),
        (None, None) => bail!("pass a literal word or --input PATH"),
    }
}
