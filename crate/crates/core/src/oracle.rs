//! Definition-level reference implementations used to cross-check the fast
//! paths. Everything here sorts or scans materialized objects directly and
//! shares no code with the implementations it checks.

use crate::bwt::BwtOutput;
use crate::error::{Error, Result};
use crate::strings::{CyclicWord, SymbolString};

/// Inputs longer than this are refused; the oracles are quadratic or worse.
pub const ORACLE_CAP: usize = 2048;

fn check_cap(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::OracleCapExceeded { len, cap });
    }
    Ok(())
}

/// Suffix array by sorting the suffixes with direct slice comparison.
pub fn naive_suffix_array(w: &SymbolString) -> Vec<u32> {
    let syms = w.symbols();
    let mut sa: Vec<u32> = (0..w.len() as u32).collect();
    sa.sort_by(|&a, &b| syms[a as usize..].cmp(&syms[b as usize..]));
    sa
}

/// LCP array by pairwise comparison of adjacent suffixes.
pub fn naive_lcp_array(w: &SymbolString, sa: &[u32]) -> Vec<u32> {
    let syms = w.symbols();
    let mut lcp = vec![0u32; sa.len()];
    for i in 1..sa.len() {
        let a = &syms[sa[i - 1] as usize..];
        let b = &syms[sa[i] as usize..];
        lcp[i] = a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count() as u32;
    }
    lcp
}

/// BWT of a terminated word by materializing and sorting the full rotation
/// matrix.
pub fn rotation_matrix_bwt(w: &SymbolString) -> Result<BwtOutput> {
    if !w.is_terminated() {
        return Err(Error::NotTerminated { op: "rotation_matrix_bwt" });
    }
    check_cap(w.len(), ORACLE_CAP)?;
    let n = w.len();
    let syms = w.symbols();
    let mut rows: Vec<(Vec<crate::alphabet::Symbol>, u32)> = (0..n)
        .map(|c| {
            let mut row = Vec::with_capacity(n);
            row.extend_from_slice(&syms[c..]);
            row.extend_from_slice(&syms[..c]);
            (row, c as u32)
        })
        .collect();
    rows.sort();
    let last = rows.iter().map(|(row, _)| row[n - 1]).collect();
    let perm = rows.iter().map(|&(_, c)| c).collect();
    BwtOutput::from_parts(
        SymbolString::from_symbols(last, w.alphabet().clone())?,
        perm,
    )
}

/// Circular BWT by materializing and sorting all rotations; equal rotations
/// keep ascending cut order.
pub fn naive_cbwt(c: &CyclicWord) -> Result<BwtOutput> {
    check_cap(c.len(), ORACLE_CAP)?;
    let n = c.len();
    let mut rows: Vec<(Vec<u16>, u32)> = (0..n)
        .map(|cut| {
            let mut row = Vec::with_capacity(n);
            row.extend_from_slice(&c.ranks()[cut..]);
            row.extend_from_slice(&c.ranks()[..cut]);
            (row, cut as u32)
        })
        .collect();
    rows.sort();
    let last: Vec<u16> = rows.iter().map(|(row, _)| row[n - 1]).collect();
    let perm = rows.iter().map(|&(_, cut)| cut).collect();
    BwtOutput::from_parts(SymbolString::from_ranks(last, c.alphabet().clone())?, perm)
}
