//! Words over a ranked alphabet, cyclic words, and the basic operations on
//! them: rotation, reversal, complement, linearization and termination.

use std::fmt;

use crate::alphabet::{Alphabet, Symbol, SENTINEL_LABEL};
use crate::error::{Error, Result};

/// A finite word, possibly containing the virtual sentinel.
///
/// Plain text is sentinel-free; `terminate` appends the single sentinel.
/// BWT columns and dollar-insertion experiments place the sentinel at
/// arbitrary positions, so the type allows that and exposes
/// [`SymbolString::is_terminated`] for the canonical `w$` form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolString {
    syms: Vec<Symbol>,
    sentinels: usize,
    alphabet: Alphabet,
}

impl SymbolString {
    pub fn from_symbols(syms: Vec<Symbol>, alphabet: Alphabet) -> Result<Self> {
        let mut sentinels = 0;
        for &s in &syms {
            match s {
                Symbol::Sentinel => sentinels += 1,
                Symbol::Sym(r) => {
                    if (r as usize) >= alphabet.sigma() {
                        return Err(Error::RankOutOfRange { rank: r, sigma: alphabet.sigma() });
                    }
                }
            }
        }
        Ok(Self { syms, sentinels, alphabet })
    }

    pub fn from_ranks(ranks: Vec<u16>, alphabet: Alphabet) -> Result<Self> {
        Self::from_symbols(ranks.into_iter().map(Symbol::Sym).collect(), alphabet)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self { syms: Vec::new(), sentinels: 0, alphabet }
    }

    /// Decode raw bytes, inferring the alphabet from the distinct bytes.
    pub fn decode(bytes: &[u8]) -> Result<Self> {
        Self::decode_with(bytes, &Alphabet::infer(bytes)?)
    }

    /// Decode raw bytes against a declared alphabet.
    pub fn decode_with(bytes: &[u8], alphabet: &Alphabet) -> Result<Self> {
        let ranks = bytes
            .iter()
            .map(|&b| alphabet.rank_of(b).ok_or(Error::SymbolNotInAlphabet { byte: b }))
            .collect::<Result<Vec<_>>>()?;
        Self::from_ranks(ranks, alphabet.clone())
    }

    /// Parse display text where `$` stands for the sentinel.
    pub fn parse_display(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let syms = text
            .bytes()
            .map(|b| {
                if b == SENTINEL_LABEL {
                    Ok(Symbol::Sentinel)
                } else {
                    alphabet
                        .rank_of(b)
                        .map(Symbol::Sym)
                        .ok_or(Error::SymbolNotInAlphabet { byte: b })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_symbols(syms, alphabet.clone())
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.syms
    }

    #[inline]
    pub fn get(&self, i: usize) -> Symbol {
        self.syms[i]
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.sigma()
    }

    pub fn sentinel_count(&self) -> usize {
        self.sentinels
    }

    pub fn is_sentinel_free(&self) -> bool {
        self.sentinels == 0
    }

    /// Canonical `w$` form: exactly one sentinel, in the final position.
    pub fn is_terminated(&self) -> bool {
        self.sentinels == 1 && self.syms.last() == Some(&Symbol::Sentinel)
    }

    /// Append the sentinel. The input must be sentinel-free.
    pub fn terminate(&self) -> Result<Self> {
        if self.sentinels > 0 {
            return Err(Error::AlreadyTerminated);
        }
        let mut syms = self.syms.clone();
        syms.push(Symbol::Sentinel);
        Ok(Self { syms, sentinels: 1, alphabet: self.alphabet.clone() })
    }

    /// `w^rev[i] = w[|w|-i-1]`. The sentinel never participates in reversal.
    pub fn reverse(&self) -> Result<Self> {
        if self.sentinels > 0 {
            return Err(Error::SentinelNotAllowed { op: "reverse" });
        }
        let mut syms = self.syms.clone();
        syms.reverse();
        Ok(Self { syms, sentinels: 0, alphabet: self.alphabet.clone() })
    }

    /// Flip every rank 0 <-> 1. Binary alphabets only.
    pub fn complement(&self) -> Result<Self> {
        if self.sigma() != 2 {
            return Err(Error::BinaryOnly { op: "complement", sigma: self.sigma() });
        }
        if self.sentinels > 0 {
            return Err(Error::SentinelNotAllowed { op: "complement" });
        }
        let syms = self
            .syms
            .iter()
            .map(|s| match s {
                Symbol::Sym(r) => Symbol::Sym(1 - r),
                Symbol::Sentinel => unreachable!(),
            })
            .collect();
        Ok(Self { syms, sentinels: 0, alphabet: self.alphabet.clone() })
    }

    /// Insert the sentinel at position `at` (0 ..= len). Input must be
    /// sentinel-free.
    pub fn insert_sentinel(&self, at: usize) -> Result<Self> {
        if self.sentinels > 0 {
            return Err(Error::SentinelNotAllowed { op: "insert_sentinel" });
        }
        if at > self.len() {
            return Err(Error::CutOutOfRange { cut: at, len: self.len() + 1 });
        }
        let mut syms = self.syms.clone();
        syms.insert(at, Symbol::Sentinel);
        Ok(Self { syms, sentinels: 1, alphabet: self.alphabet.clone() })
    }

    /// Remove all sentinels, keeping the symbols in order.
    pub fn strip_sentinels(&self) -> Self {
        let syms: Vec<Symbol> = self.syms.iter().copied().filter(|s| !s.is_sentinel()).collect();
        Self { syms, sentinels: 0, alphabet: self.alphabet.clone() }
    }

    /// Ranks of a sentinel-free string.
    pub fn ranks(&self) -> Result<Vec<u16>> {
        self.syms
            .iter()
            .map(|s| match s {
                Symbol::Sym(r) => Ok(*r),
                Symbol::Sentinel => Err(Error::SentinelNotAllowed { op: "ranks" }),
            })
            .collect()
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.syms {
            write!(f, "{}", s.label(&self.alphabet) as char)?;
        }
        Ok(())
    }
}

/// A cyclic word: indexing is taken modulo the length. Sentinel-free by
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicWord {
    ranks: Vec<u16>,
    alphabet: Alphabet,
}

impl CyclicWord {
    pub fn new(ranks: Vec<u16>, alphabet: Alphabet) -> Result<Self> {
        for &r in &ranks {
            if (r as usize) >= alphabet.sigma() {
                return Err(Error::RankOutOfRange { rank: r, sigma: alphabet.sigma() });
            }
        }
        Ok(Self { ranks, alphabet })
    }

    pub fn from_string(w: &SymbolString) -> Result<Self> {
        Ok(Self { ranks: w.ranks()?, alphabet: w.alphabet().clone() })
    }

    pub fn decode_with(bytes: &[u8], alphabet: &Alphabet) -> Result<Self> {
        Self::from_string(&SymbolString::decode_with(bytes, alphabet)?)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[u16] {
        &self.ranks
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.sigma()
    }

    #[inline]
    pub fn rank_at(&self, i: usize) -> u16 {
        self.ranks[i % self.ranks.len()]
    }

    /// The rotation by `cut` as a linear word: `out[i] = c[(i + cut) mod n]`.
    pub fn rotate(&self, cut: usize) -> Result<SymbolString> {
        Ok(self.rotation(cut)?.into_string())
    }

    /// The rotation by `cut` as a cyclic word.
    pub fn rotation(&self, cut: usize) -> Result<CyclicWord> {
        let n = self.ranks.len();
        if cut >= n {
            return Err(Error::CutOutOfRange { cut, len: n });
        }
        let mut ranks = Vec::with_capacity(n);
        ranks.extend_from_slice(&self.ranks[cut..]);
        ranks.extend_from_slice(&self.ranks[..cut]);
        Ok(Self { ranks, alphabet: self.alphabet.clone() })
    }

    /// Append the first `k - 1` symbols, so every cyclic k-window occurs as a
    /// non-wrapping substring of the output.
    pub fn linearize(&self, k: usize) -> Result<SymbolString> {
        let n = self.ranks.len();
        if k < 2 || n < k {
            return Err(Error::InvalidOrder { op: "linearize", k, len: n });
        }
        let mut ranks = self.ranks.clone();
        ranks.extend_from_slice(&self.ranks[..k - 1]);
        SymbolString::from_ranks(ranks, self.alphabet.clone())
    }

    pub fn into_string(self) -> SymbolString {
        SymbolString::from_ranks(self.ranks, self.alphabet).expect("ranks already validated")
    }

    pub fn to_linear_string(&self) -> SymbolString {
        self.clone().into_string()
    }

    /// True if `other` is some rotation of `self`. Quadratic; intended for
    /// small words and tests.
    pub fn equals_up_to_rotation(&self, other: &CyclicWord) -> bool {
        if self.ranks.len() != other.ranks.len() {
            return false;
        }
        if self.ranks.is_empty() {
            return true;
        }
        let mut doubled = self.ranks.clone();
        doubled.extend_from_slice(&self.ranks);
        doubled.windows(other.ranks.len()).any(|w| w == other.ranks.as_slice())
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.ranks {
            write!(f, "{}", self.alphabet.label(r) as char)?;
        }
        Ok(())
    }
}
