//! Suffix arrays by prefix doubling and LCP arrays by Kasai's algorithm.

use crate::error::{Error, Result};
use crate::strings::SymbolString;

/// Suffix array of `w`: start positions of the suffixes in increasing
/// lexicographic order.
///
/// Suffixes of a single word are pairwise distinct (a proper prefix sorts
/// first), so the result is well defined whether or not `w` is terminated.
/// For a terminated word, `sa[0]` is the sentinel position `n - 1`.
///
/// Prefix doubling with an ordinary sort: O(n log^2 n) comparisons, which
/// covers the desk scale here (strings up to a few million symbols).
pub fn suffix_array(w: &SymbolString) -> Vec<u32> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    // rank 0 is reserved for "past the end", so every in-bounds symbol
    // shifts up by one.
    let mut rank: Vec<u32> = w.symbols().iter().map(|s| s.key() + 1).collect();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut tmp = vec![0u32; n];
    let mut h = 1usize;
    loop {
        let key = |i: u32| -> u64 {
            let i = i as usize;
            let second = if i + h < n { rank[i + h] } else { 0 };
            ((rank[i] as u64) << 32) | second as u64
        };
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0] as usize] = 1;
        let mut distinct = 1u32;
        for j in 1..n {
            if key(sa[j]) != key(sa[j - 1]) {
                distinct += 1;
            }
            tmp[sa[j] as usize] = distinct;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if distinct as usize == n {
            break;
        }
        h *= 2;
    }
    sa
}

/// Inverse permutation of a suffix array.
pub fn inverse_permutation(sa: &[u32]) -> Vec<u32> {
    let mut isa = vec![0u32; sa.len()];
    for (i, &p) in sa.iter().enumerate() {
        isa[p as usize] = i as u32;
    }
    isa
}

/// LCP array: `lcp[i]` is the length of the longest common prefix of the
/// suffixes at `sa[i - 1]` and `sa[i]`; `lcp[0] = 0`. Kasai's linear scan.
pub fn lcp_array(w: &SymbolString, sa: &[u32]) -> Result<Vec<u32>> {
    let n = w.len();
    if sa.len() != n || !is_permutation(sa) {
        return Err(Error::MismatchedInputs("lcp_array needs the suffix array of w"));
    }
    let isa = inverse_permutation(sa);
    let syms = w.symbols();
    let mut lcp = vec![0u32; n];
    let mut k = 0usize;
    for i in 0..n {
        let x = isa[i] as usize;
        if x == 0 {
            k = 0;
            continue;
        }
        let j = sa[x - 1] as usize;
        while i + k < n && j + k < n && syms[i + k] == syms[j + k] {
            k += 1;
        }
        lcp[x] = k as u32;
        k = k.saturating_sub(1);
    }
    Ok(lcp)
}

fn is_permutation(sa: &[u32]) -> bool {
    let n = sa.len();
    let mut seen = vec![false; n];
    for &p in sa {
        let p = p as usize;
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}
