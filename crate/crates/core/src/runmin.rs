//! The run-minimal family: binary de Bruijn cycles whose circular BWT is
//! the pattern `1 (0011)^(2^(k-2)-1) 010`, generated by cycle-joined LFSRs
//! of the trinomials `x^k + x + 1` (reversed and complemented), for the
//! degrees where the trinomial is primitive.

use crate::alphabet::{Alphabet, Symbol};
use crate::bwt::{bwt, cbwt, BwtOutput};
use crate::debruijn::DeBruijnCycle;
use crate::error::{Error, Result};
use crate::f2poly::F2Poly;
use crate::lfsr::joined_transformed_sequence;
use crate::strings::SymbolString;
use crate::suffixient::chi;
use crate::Ratio;

/// The run-minimal circular BWT pattern `1 (0011)^(2^(k-2)-1) 010`, of
/// length `2^k`.
pub fn runmin_pattern(k: u32) -> Result<SymbolString> {
    if k < 2 {
        return Err(Error::InvalidOrder { op: "runmin_pattern", k: k as usize, len: 0 });
    }
    let reps = (1usize << (k - 2)) - 1;
    let mut ranks: Vec<u16> = Vec::with_capacity(1 << k);
    ranks.push(1);
    for _ in 0..reps {
        ranks.extend_from_slice(&[0, 0, 1, 1]);
    }
    ranks.extend_from_slice(&[0, 1, 0]);
    debug_assert_eq!(ranks.len(), 1 << k);
    SymbolString::from_ranks(ranks, Alphabet::binary())
}

/// The expected BWT of the linearized-and-terminated canonical rotation:
/// `0^(k-1) 1 $ (0011)^(2^(k-2)-1) 010`.
pub fn expected_linearized_bwt(k: u32) -> Result<SymbolString> {
    if k < 2 {
        return Err(Error::InvalidOrder { op: "expected_linearized_bwt", k: k as usize, len: 0 });
    }
    let reps = (1usize << (k - 2)) - 1;
    let mut syms: Vec<Symbol> = Vec::with_capacity((1 << k) + k as usize + 1);
    syms.extend(std::iter::repeat_n(Symbol::Sym(0), k as usize - 1));
    syms.push(Symbol::Sym(1));
    syms.push(Symbol::Sentinel);
    for _ in 0..reps {
        for r in [0, 0, 1, 1] {
            syms.push(Symbol::Sym(r));
        }
    }
    for r in [0, 1, 0] {
        syms.push(Symbol::Sym(r));
    }
    SymbolString::from_symbols(syms, Alphabet::binary())
}

fn build(k: u32) -> Result<(DeBruijnCycle, BwtOutput)> {
    let cycle = joined_transformed_sequence(k)?;
    let cycle = DeBruijnCycle::verify(cycle, k)?;
    let circular = cbwt(cycle.word())?;
    Ok((cycle, circular))
}

/// Generate the family member of order `k`.
///
/// Fails with a primitivity error when `x^k + x + 1` is not primitive (the
/// family has no member then), and verifies both the de Bruijn property and
/// the circular BWT pattern of the result.
pub fn make_runmin(k: u32) -> Result<DeBruijnCycle> {
    let (cycle, circular) = build(k)?;
    let pattern = runmin_pattern(k)?;
    if circular.last_column() != &pattern {
        return Err(Error::CrossCheckFailed {
            k,
            detail: "circular BWT does not match the run-minimal pattern".into(),
        });
    }
    Ok(cycle)
}

/// Where two strings first disagree, with a window of context around it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub expected: String,
    pub actual: String,
}

fn first_mismatch(expected: &SymbolString, actual: &SymbolString) -> Option<Mismatch> {
    let index = (0..expected.len().min(actual.len()))
        .find(|&i| expected.get(i) != actual.get(i))
        .or_else(|| (expected.len() != actual.len()).then(|| expected.len().min(actual.len())))?;
    let window = |w: &SymbolString| {
        let lo = index.saturating_sub(8);
        let hi = (index + 8).min(w.len());
        (lo..hi).map(|i| w.get(i).label(w.alphabet()) as char).collect()
    };
    Some(Mismatch { index, expected: window(expected), actual: window(actual) })
}

/// Full verification record for one order `k`.
#[derive(Debug, Clone)]
pub struct RunMinReport {
    pub k: u32,
    pub cycle: DeBruijnCycle,
    /// Canonical rotation `U` (starts `0^k`).
    pub canonical: SymbolString,
    pub r_c: usize,
    /// Circular BWT equals `1 (0011)^(2^(k-2)-1) 010`.
    pub cbwt_pattern_ok: bool,
    pub cbwt_mismatch: Option<Mismatch>,
    /// BWT last column of `U_lin $`.
    pub last_column: SymbolString,
    /// Last column equals `0^(k-1) 1 $ (0011)^(2^(k-2)-1) 010`.
    pub bwt_form_ok: bool,
    pub bwt_mismatch: Option<Mismatch>,
    pub r: usize,
    /// `r == 2^(k-1) + 4`.
    pub run_count_ok: bool,
    pub chi: usize,
    /// `chi == 2^k + 1`.
    pub chi_ok: bool,
    pub ratio: Ratio,
    /// `ratio == (2^k + 1) / (2^(k-1) + 4)`.
    pub ratio_ok: bool,
    /// Length of `U_lin $`.
    pub n: usize,
}

impl RunMinReport {
    pub fn pass(&self) -> bool {
        self.cbwt_pattern_ok
            && self.bwt_form_ok
            && self.run_count_ok
            && self.chi_ok
            && self.ratio_ok
            && self.r_c == (1 << (self.k - 1)) + 2
    }
}

/// The closed-form ratio `(2^k + 1) / (2^(k-1) + 4)`.
pub fn runmin_ratio(k: u32) -> Ratio {
    Ratio::new((1u64 << k) + 1, (1u64 << (k - 1)) + 4)
}

/// Build the order-`k` member, linearize and terminate its canonical
/// rotation, and check every closed form: the circular BWT pattern, the
/// literal BWT column, and the run, suffixient-size and ratio identities.
pub fn verify_linearized(k: u32) -> Result<RunMinReport> {
    let (cycle, circular) = build(k)?;
    let pattern = runmin_pattern(k)?;
    let cbwt_mismatch = first_mismatch(&pattern, circular.last_column());

    let canonical = cycle.canonical_rotation();
    let linearized = cycle.linearized_canonical()?.terminate()?;
    let out = bwt(&linearized)?;
    let expected = expected_linearized_bwt(k)?;
    let bwt_mismatch = first_mismatch(&expected, out.last_column());

    let chi_v = chi(&linearized);
    let ratio = Ratio::new(chi_v as u64, out.runs() as u64);
    Ok(RunMinReport {
        k,
        r_c: circular.runs(),
        cbwt_pattern_ok: cbwt_mismatch.is_none(),
        cbwt_mismatch,
        canonical,
        r: out.runs(),
        run_count_ok: out.runs() as u64 == (1u64 << (k - 1)) + 4,
        chi: chi_v,
        chi_ok: chi_v as u64 == (1u64 << k) + 1,
        ratio,
        ratio_ok: ratio == runmin_ratio(k),
        n: linearized.len(),
        last_column: out.last_column().clone(),
        bwt_form_ok: bwt_mismatch.is_none(),
        bwt_mismatch,
        cycle,
    })
}

/// Degrees with a family member up to `k_max`.
pub fn family_degrees(k_max: u32) -> Result<Vec<u32>> {
    crate::f2poly::primitive_trinomial_degrees(k_max)
}

/// Does the family have a member of order `k`?
pub fn family_has_order(k: u32) -> Result<bool> {
    crate::f2poly::is_primitive(F2Poly::trinomial(k)?)
}
