//! Ordered alphabets and the virtual sentinel.
//!
//! Symbols are stored as integer ranks; an [`Alphabet`] maps ranks back to
//! single-byte labels for display and decoding. The sentinel is never a
//! member of the alphabet: it is a virtual symbol that compares below every
//! rank and is written as `$`.

use crate::error::{Error, Result};

/// Display byte of the virtual sentinel.
pub const SENTINEL_LABEL: u8 = b'$';

/// A finite ordered alphabet of single-byte labels.
///
/// Labels must be strictly increasing, so rank order coincides with the
/// declared symbol order. The sentinel label `$` is reserved.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    labels: Vec<u8>,
}

impl Alphabet {
    pub fn from_labels(labels: impl Into<Vec<u8>>) -> Result<Self> {
        let labels = labels.into();
        if labels.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        if !labels.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidAlphabet(
                "labels must be strictly increasing".into(),
            ));
        }
        if labels.contains(&SENTINEL_LABEL) {
            return Err(Error::InvalidAlphabet(
                "'$' is reserved for the sentinel".into(),
            ));
        }
        Ok(Self { labels })
    }

    /// `{0, 1}`.
    pub fn binary() -> Self {
        Self { labels: vec![b'0', b'1'] }
    }

    /// First `sigma` labels of the ramp `0-9 a-z A-Z`, rank 0 = `'0'`.
    pub fn ranked(sigma: usize) -> Result<Self> {
        Self::ramp(sigma, 0)
    }

    /// First `sigma` labels of the same ramp starting at `'1'` (so the
    /// smallest symbol displays as `1`, as clustered-family examples do).
    pub fn one_based(sigma: usize) -> Result<Self> {
        Self::ramp(sigma, 1)
    }

    fn ramp(sigma: usize, skip: usize) -> Result<Self> {
        const RAMP: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
        if sigma == 0 || skip + sigma > RAMP.len() {
            return Err(Error::InvalidAlphabet(format!(
                "no label ramp for sigma = {sigma}"
            )));
        }
        Ok(Self { labels: RAMP[skip..skip + sigma].to_vec() })
    }

    /// Alphabet of the distinct bytes of `bytes`, in byte order.
    pub fn infer(bytes: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        for &b in bytes {
            seen[b as usize] = true;
        }
        let labels: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        Self::from_labels(labels)
    }

    pub fn sigma(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, rank: u16) -> u8 {
        self.labels[rank as usize]
    }

    pub fn rank_of(&self, byte: u8) -> Option<u16> {
        self.labels.binary_search(&byte).ok().map(|r| r as u16)
    }
}

/// One position of a string: the virtual sentinel or a ranked symbol.
///
/// The derived order puts `Sentinel` below every `Sym`, matching the
/// convention that `$` sorts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Sentinel,
    Sym(u16),
}

impl Symbol {
    /// Dense sort key: sentinel = 0, rank r = r + 1.
    #[inline]
    pub fn key(self) -> u32 {
        match self {
            Symbol::Sentinel => 0,
            Symbol::Sym(r) => r as u32 + 1,
        }
    }

    #[inline]
    pub fn is_sentinel(self) -> bool {
        matches!(self, Symbol::Sentinel)
    }

    pub fn label(self, alphabet: &Alphabet) -> u8 {
        match self {
            Symbol::Sentinel => SENTINEL_LABEL,
            Symbol::Sym(r) => alphabet.label(r),
        }
    }
}
