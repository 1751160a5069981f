//! Sentinel-insertion experiments and exhaustive censuses of small binary
//! de Bruijn cycles.
//!
//! Inserting the sentinel into a candidate BWT column at every position and
//! attempting inversion finds all terminated strings whose BWT matches the
//! candidate. Exhaustive enumeration of the order-`k` cycles then shows
//! which of them achieve the run-minimal circular BWT pattern, probing
//! whether the LFSR construction is the only source of achievers.

use crate::bwt::{bwt, cbwt, invert_bwt, Inversion};
use crate::debruijn::DeBruijnCycle;
use crate::error::{Error, Result};
use crate::runmin::{family_has_order, make_runmin, runmin_pattern};
use crate::strings::{CyclicWord, SymbolString};

/// Orders above this have too many cycles to enumerate (`2^(2^(k-1)-k)`).
pub const ENUMERATION_CAP: u32 = 5;

/// Result of trying every sentinel position in a base column.
#[derive(Debug, Clone)]
pub struct DollarScan {
    pub base: SymbolString,
    /// Insertion indices whose column inverts to a terminated string.
    pub valid_positions: Vec<usize>,
    /// The inverted string for each valid position, in the same order.
    pub recovered: Vec<SymbolString>,
}

/// Insert the sentinel at every position of `base` (which must be
/// sentinel-free) and keep the positions whose column is a real BWT.
pub fn dollar_positions(base: &SymbolString) -> Result<DollarScan> {
    if !base.is_sentinel_free() {
        return Err(Error::SentinelNotAllowed { op: "dollar_positions" });
    }
    let mut valid_positions = Vec::new();
    let mut recovered = Vec::new();
    for at in 0..=base.len() {
        let column = base.insert_sentinel(at)?;
        if let Inversion::Recovered(w) = invert_bwt(&column)? {
            debug_assert_eq!(bwt(&w)?.last_column(), &column);
            valid_positions.push(at);
            recovered.push(w);
        }
    }
    Ok(DollarScan { base: base.clone(), valid_positions, recovered })
}

/// All binary de Bruijn cycles of order `k`, one canonical representative
/// (the rotation starting `0^k`) per rotation class, in lexicographic
/// order. Backtracking over the window graph; `k` is capped at
/// [`ENUMERATION_CAP`].
pub fn enumerate_debruijn(k: u32) -> Result<Vec<DeBruijnCycle>> {
    if k == 0 {
        return Err(Error::InvalidOrder { op: "enumerate_debruijn", k: 0, len: 0 });
    }
    if k > ENUMERATION_CAP {
        return Err(Error::BudgetExceeded {
            what: "de Bruijn enumeration",
            needed: k as u64,
            budget: ENUMERATION_CAP as u64,
        });
    }
    let k = k as usize;
    let n = 1usize << k;
    let mut out = Vec::new();
    if k == 1 {
        let word = CyclicWord::new(vec![0, 1], crate::alphabet::Alphabet::binary())?;
        out.push(DeBruijnCycle::verify(word, 1)?);
        return Ok(out);
    }

    // Fix the unique all-zero window at the front; the symbol after it must
    // be 1. Extend bit by bit, refusing any repeated window, and accept
    // when the k-1 wrapping windows are exactly the missing ones.
    let mut bits = vec![0u16; n];
    bits[k] = 1;
    let mut seen = vec![false; n];
    let window_mask = n - 1;
    let mut code = 0usize; // window ending just before position k+1 is 0^(k-1) 1
    for &b in bits.iter().take(k + 1) {
        code = ((code << 1) & window_mask) | b as usize;
    }
    seen[0] = true; // 0^k
    seen[code] = true; // 0^(k-1) 1

    fn extend(
        bits: &mut Vec<u16>,
        seen: &mut Vec<bool>,
        pos: usize,
        code: usize,
        k: usize,
        out: &mut Vec<DeBruijnCycle>,
    ) {
        let n = bits.len();
        let window_mask = n - 1;
        if pos == n {
            // wrap-around windows at positions n-k+1 .. n-1
            let mut wrap = code;
            let mut marked = Vec::with_capacity(k - 1);
            let mut ok = true;
            for &b in bits.iter().take(k - 1) {
                wrap = ((wrap << 1) & window_mask) | b as usize;
                if seen[wrap] {
                    ok = false;
                    break;
                }
                seen[wrap] = true;
                marked.push(wrap);
            }
            if ok {
                let word = CyclicWord::new(bits.clone(), crate::alphabet::Alphabet::binary())
                    .expect("binary ranks");
                out.push(DeBruijnCycle::verify(word, k as u32).expect("windows checked"));
            }
            for w in marked {
                seen[w] = false;
            }
            return;
        }
        for b in 0..2u16 {
            let next = ((code << 1) & window_mask) | b as usize;
            if !seen[next] {
                bits[pos] = b;
                seen[next] = true;
                extend(bits, seen, pos + 1, next, k, out);
                seen[next] = false;
            }
        }
    }

    extend(&mut bits, &mut seen, k + 1, code, k, &mut out);
    Ok(out)
}

/// The expected number of binary de Bruijn cycles of order `k` up to
/// rotation: `2^(2^(k-1) - k)`.
pub fn debruijn_cycle_count(k: u32) -> u64 {
    1u64 << ((1u64 << (k - 1)) - k as u64)
}

/// The enumerated cycles whose circular BWT equals the run-minimal pattern.
pub fn runmin_achievers(k: u32) -> Result<Vec<DeBruijnCycle>> {
    let pattern = runmin_pattern(k)?;
    let mut out = Vec::new();
    for cycle in enumerate_debruijn(k)? {
        if cbwt(cycle.word())?.last_column() == &pattern {
            out.push(cycle);
        }
    }
    Ok(out)
}

/// Census of the achievers of order `k` and how they relate to the
/// sentinel scan of the pattern.
#[derive(Debug, Clone)]
pub struct AchieverCensus {
    pub total_cycles: usize,
    pub achievers: Vec<DeBruijnCycle>,
    /// Index of the LFSR-generated member among the achievers, when the
    /// family has one at this order.
    pub family_member_index: Option<usize>,
    /// For each achiever: the sentinel position at which the BWT of its
    /// terminated canonical rotation is an insertion into the pattern, if
    /// it is one.
    pub insertion_positions: Vec<Option<usize>>,
    /// Every achiever whose terminated BWT is a pattern insertion must
    /// appear in the scan at that position with the matching recovered
    /// string.
    pub consistency_ok: bool,
}

/// Full experiment for one order: scan the pattern for valid sentinel
/// positions, and (within the enumeration cap) census the achievers.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub k: u32,
    pub pattern: SymbolString,
    pub scan: DollarScan,
    /// Whether the family has a member at this order (primitive trinomial).
    pub family_order: bool,
    /// Non-empty scan for family orders, empty otherwise: does the observed
    /// scan match that expectation?
    pub scan_matches_expectation: bool,
    /// Present when `k` is within the enumeration cap.
    pub census: Option<AchieverCensus>,
}

pub fn conjecture_report(k: u32) -> Result<ConjectureReport> {
    let pattern = runmin_pattern(k)?;
    let scan = dollar_positions(&pattern)?;
    let family_order = family_has_order(k)?;
    let scan_matches_expectation = family_order != scan.valid_positions.is_empty();

    let census = if k <= ENUMERATION_CAP {
        let all = enumerate_debruijn(k)?;
        let total_cycles = all.len();
        let achievers = runmin_achievers(k)?;
        let family_member_index = if family_order {
            let member = make_runmin(k)?.canonical_rotation();
            achievers.iter().position(|c| c.canonical_rotation() == member)
        } else {
            None
        };
        let mut insertion_positions = Vec::with_capacity(achievers.len());
        let mut consistency_ok = true;
        for cycle in &achievers {
            let terminated = cycle.canonical_rotation().terminate()?;
            let column = bwt(&terminated)?.last_column().clone();
            let position = (column.strip_sentinels() == pattern).then(|| {
                column
                    .symbols()
                    .iter()
                    .position(|s| s.is_sentinel())
                    .expect("terminated BWT contains the sentinel")
            });
            if let Some(at) = position {
                let found = scan
                    .valid_positions
                    .iter()
                    .position(|&v| v == at)
                    .map(|i| &scan.recovered[i]);
                if found != Some(&terminated) {
                    consistency_ok = false;
                }
            }
            insertion_positions.push(position);
        }
        Some(AchieverCensus {
            total_cycles,
            achievers,
            family_member_index,
            insertion_positions,
            consistency_ok,
        })
    } else {
        None
    };

    Ok(ConjectureReport { k, pattern, scan, family_order, scan_matches_expectation, census })
}
