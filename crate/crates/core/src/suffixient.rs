//! Right-extensions, super-maximal extensions, `sre`, and smallest
//! suffixient sets.
//!
//! A substring `x` is right-maximal when at least two distinct symbols
//! follow occurrences of `x`; the right-extension set `E_r` collects every
//! occurring `xa` for right-maximal `x`, and `S_r` keeps the elements that
//! are not proper suffixes of other elements. The size `sre = |S_r|` equals
//! the size `chi` of a smallest suffixient set, witnessed by one end
//! position per element.
//!
//! The fast path enumerates the branching substrings as LCP intervals of the
//! suffix array. An element `xa` fails super-maximality exactly when `bxa`
//! is a right-extension for some symbol `b`, i.e. when some branching node
//! `bx` has the child `a`; those pairs are marked by following each
//! branching node to the locus of its one-symbol-shorter suffix. A
//! definition-level brute force over all substrings guards the whole path.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::sa::{inverse_permutation, lcp_array, suffix_array};
use crate::strings::SymbolString;

/// Length cap for [`brute_force_chi`].
pub const BRUTE_FORCE_CAP: usize = 512;

/// The extension sets of a word together with a smallest suffixient set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    /// `E_r`, rendered with display labels (`$` = sentinel).
    pub right_extensions: BTreeSet<String>,
    /// `S_r`.
    pub super_maximal: BTreeSet<String>,
    /// `|S_r|`.
    pub sre: usize,
    /// End positions realizing the bijection with `S_r`, sorted.
    pub suffixient_positions: Vec<usize>,
    /// Size of the smallest suffixient set; always equals `sre`.
    pub chi: usize,
}

/// An LCP interval: the locus of a substring of length `depth` whose
/// occurrences are the suffixes `sa[l..=r]`.
#[derive(Debug, Clone, Copy)]
struct Node {
    depth: u32,
    l: u32,
    r: u32,
}

/// All LCP intervals (internal suffix-tree nodes), bottom-up stack scan.
fn lcp_intervals(lcp: &[u32]) -> Vec<Node> {
    let n = lcp.len();
    let mut nodes = Vec::new();
    if n == 0 {
        return nodes;
    }
    let mut stack: Vec<(u32, u32)> = vec![(0, 0)];
    for i in 1..n as u32 {
        let h = lcp[i as usize];
        let mut lb = i - 1;
        while stack.last().unwrap().0 > h {
            let (depth, l) = stack.pop().unwrap();
            nodes.push(Node { depth, l, r: i - 1 });
            lb = l;
        }
        if stack.last().unwrap().0 < h {
            stack.push((h, lb));
        }
    }
    while let Some((depth, l)) = stack.pop() {
        nodes.push(Node { depth, l, r: n as u32 - 1 });
    }
    nodes
}

struct Engine<'a> {
    w: &'a SymbolString,
    sa: Vec<u32>,
    lcp: Vec<u32>,
    isa: Vec<u32>,
    nodes: Vec<Node>,
    /// depth -> (l, r, node index), sorted by l; loci of a given depth are
    /// pairwise disjoint.
    by_depth: HashMap<u32, Vec<(u32, u32, u32)>>,
}

impl<'a> Engine<'a> {
    fn new(w: &'a SymbolString) -> Self {
        let sa = suffix_array(w);
        let lcp = lcp_array(w, &sa).expect("sa freshly built");
        let isa = inverse_permutation(&sa);
        let nodes = lcp_intervals(&lcp);
        let mut by_depth: HashMap<u32, Vec<(u32, u32, u32)>> = HashMap::new();
        for (idx, nd) in nodes.iter().enumerate() {
            by_depth.entry(nd.depth).or_default().push((nd.l, nd.r, idx as u32));
        }
        for v in by_depth.values_mut() {
            v.sort_unstable();
        }
        Self { w, sa, lcp, isa, nodes, by_depth }
    }

    /// Children of a node: segments of its interval split at positions where
    /// the lcp drops back to the node depth. `None` is the end-child (the
    /// suffix equal to the node string, which has no following symbol).
    fn for_each_child(&self, nd: Node, mut f: impl FnMut(Option<u32>, u32, u32)) {
        let n = self.w.len();
        let d = nd.depth as usize;
        let mut emit = |s: u32, e: u32| {
            let start = self.sa[s as usize] as usize;
            let child = if start + d == n {
                None
            } else {
                Some(self.w.get(start + d).key())
            };
            f(child, s, e);
        };
        let mut seg = nd.l;
        for i in nd.l + 1..=nd.r {
            if self.lcp[i as usize] == nd.depth {
                emit(seg, i - 1);
                seg = i;
            }
        }
        emit(seg, nd.r);
    }

    fn count_real_children(&self, nd: Node) -> usize {
        let mut real = 0;
        self.for_each_child(nd, |c, _, _| {
            if c.is_some() {
                real += 1;
            }
        });
        real
    }

    /// Locus index of the node's string minus its first symbol.
    fn suffix_link(&self, nd: Node) -> u32 {
        let (depth, pos) = if nd.depth == 1 {
            (0, 0)
        } else {
            let p = self.sa[nd.l as usize] as usize;
            (nd.depth - 1, self.isa[p + 1])
        };
        let v = &self.by_depth[&depth];
        let j = v.partition_point(|&(l, _, _)| l <= pos) - 1;
        debug_assert!(v[j].0 <= pos && pos <= v[j].1, "missing locus");
        v[j].2
    }

    fn node_word(&self, nd: Node, child: u32) -> String {
        let start = self.sa[nd.l as usize] as usize;
        let mut out = String::with_capacity(nd.depth as usize + 1);
        for i in 0..nd.depth as usize {
            out.push(self.w.get(start + i).label(self.w.alphabet()) as char);
        }
        let sym = if child == 0 { Symbol::Sentinel } else { Symbol::Sym((child - 1) as u16) };
        out.push(sym.label(self.w.alphabet()) as char);
        out
    }
}

/// Pack (node index, child key) into one mark. Keys need 9 bits: ranks are
/// at most 255, plus the sentinel.
#[inline]
fn mark(node: u32, key: u32) -> u64 {
    ((node as u64) << 10) | key as u64
}

struct Analysis {
    sre: usize,
    positions: Vec<usize>,
    er_words: Option<BTreeSet<String>>,
    sr_words: Option<BTreeSet<String>>,
}

fn analyze(w: &SymbolString, materialize: bool) -> Analysis {
    let empty = || Analysis {
        sre: 0,
        positions: Vec::new(),
        er_words: materialize.then(BTreeSet::new),
        sr_words: materialize.then(BTreeSet::new),
    };
    if w.len() < 2 {
        return empty();
    }
    let eng = Engine::new(w);

    let mut branching = vec![false; eng.nodes.len()];
    for (idx, &nd) in eng.nodes.iter().enumerate() {
        branching[idx] = eng.count_real_children(nd) >= 2;
    }

    // An extension za of a branching node z is covered (not super-maximal)
    // iff some branching node y = bz also has the child a. Walk every y to
    // the locus of z and mark (z, a) for each real child a of y.
    let mut covered: Vec<u64> = Vec::new();
    for (idx, &nd) in eng.nodes.iter().enumerate() {
        if !branching[idx] || nd.depth == 0 {
            continue;
        }
        let target = eng.suffix_link(nd);
        eng.for_each_child(nd, |child, _, _| {
            if let Some(key) = child {
                covered.push(mark(target, key));
            }
        });
    }
    covered.sort_unstable();
    covered.dedup();

    let mut out = empty();
    for (idx, &nd) in eng.nodes.iter().enumerate() {
        if !branching[idx] {
            continue;
        }
        eng.for_each_child(nd, |child, s, e| {
            let Some(key) = child else { return };
            if materialize {
                out.er_words.as_mut().unwrap().insert(eng.node_word(nd, key));
            }
            if covered.binary_search(&mark(idx as u32, key)).is_err() {
                out.sre += 1;
                let first = (s..=e).map(|i| eng.sa[i as usize]).min().unwrap() as usize;
                out.positions.push(first + nd.depth as usize);
                if materialize {
                    out.sr_words.as_mut().unwrap().insert(eng.node_word(nd, key));
                }
            }
        });
    }
    out.positions.sort_unstable();
    out
}

/// The set `E_r` of one-symbol right-extensions of right-maximal substrings.
pub fn right_extensions(w: &SymbolString) -> BTreeSet<String> {
    analyze(w, true).er_words.unwrap()
}

/// The set `S_r`: right-extensions that are not proper suffixes of other
/// right-extensions.
pub fn super_maximal_extensions(w: &SymbolString) -> BTreeSet<String> {
    analyze(w, true).sr_words.unwrap()
}

/// `sre(w) = |S_r(w)|`, on the word exactly as given (terminated or not).
pub fn sre(w: &SymbolString) -> usize {
    analyze(w, false).sre
}

/// `chi` and the witness positions, without materializing the word sets.
///
/// Each position is the end of the first occurrence of one element of
/// `S_r`, so the returned set is a smallest suffixient set.
pub fn chi_with_positions(w: &SymbolString) -> (usize, Vec<usize>) {
    let a = analyze(w, false);
    (a.sre, a.positions)
}

/// Size of a smallest suffixient set.
pub fn chi(w: &SymbolString) -> usize {
    analyze(w, false).sre
}

/// Full extension report with materialized word sets.
pub fn smallest_suffixient_set(w: &SymbolString) -> ExtensionReport {
    let a = analyze(w, true);
    ExtensionReport {
        right_extensions: a.er_words.unwrap(),
        super_maximal: a.sr_words.unwrap(),
        sre: a.sre,
        chi: a.positions.len(),
        suffixient_positions: a.positions,
    }
}

/// `chi` straight from the definitions: enumerate every substring and its
/// followers, build `E_r`, filter super-maximal elements by pairwise
/// proper-suffix tests, count. Refuses inputs longer than
/// [`BRUTE_FORCE_CAP`]. Independent of the suffix-array path.
pub fn brute_force_chi(w: &SymbolString) -> Result<usize> {
    Ok(brute_force_super_maximal(w)?.len())
}

/// The brute-force `S_r` as symbol sequences.
pub(crate) fn brute_force_super_maximal(w: &SymbolString) -> Result<Vec<Vec<Symbol>>> {
    let n = w.len();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::OracleCapExceeded { len: n, cap: BRUTE_FORCE_CAP });
    }
    let syms = w.symbols();
    let mut followers: HashMap<&[Symbol], BTreeSet<Symbol>> = HashMap::new();
    for i in 0..n {
        for j in i..n {
            // substring syms[i..j] followed by syms[j]
            followers.entry(&syms[i..j]).or_default().insert(syms[j]);
        }
    }
    let mut er: Vec<Vec<Symbol>> = Vec::new();
    for (x, fol) in &followers {
        if fol.len() >= 2 {
            for &a in fol {
                let mut e = x.to_vec();
                e.push(a);
                er.push(e);
            }
        }
    }
    let sr: Vec<Vec<Symbol>> = er
        .iter()
        .filter(|e| {
            !er.iter().any(|y| y.len() > e.len() && y.ends_with(e))
        })
        .cloned()
        .collect();
    Ok(sr)
}
