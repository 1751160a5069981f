//! Sigma-ary de Bruijn cycles: validation, the lexicographically least
//! generator, and the measure bounds for linearized-and-terminated
//! rotations.

use crate::bwt::bwt;
use crate::error::{Error, Result};
use crate::strings::{CyclicWord, SymbolString};
use crate::suffixient::{chi, sre};
use crate::Ratio;

/// Largest `sigma^k` the generators will materialize.
pub const SIZE_BUDGET: u64 = 1 << 26;

/// A cyclic word verified to contain every length-`k` word over its
/// alphabet exactly once as a cyclic window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeBruijnCycle {
    word: CyclicWord,
    sigma: usize,
    k: u32,
}

impl DeBruijnCycle {
    /// Validate the de Bruijn property and wrap the cycle.
    pub fn verify(word: CyclicWord, k: u32) -> Result<Self> {
        let sigma = word.sigma();
        if !is_debruijn(&word, sigma, k) {
            return Err(Error::NotDeBruijn(format!(
                "length {} word is not de Bruijn of order {k} over sigma = {sigma}",
                word.len()
            )));
        }
        Ok(Self { word, sigma, k })
    }

    pub fn word(&self) -> &CyclicWord {
        &self.word
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The unique rotation starting with `0^k`, as a linear word.
    pub fn canonical_rotation(&self) -> SymbolString {
        self.canonical_cycle().into_string()
    }

    /// The unique rotation starting with `0^k`, still cyclic.
    pub fn canonical_cycle(&self) -> CyclicWord {
        let k = self.k as usize;
        let cut = (0..self.word.len())
            .find(|&t| (0..k).all(|i| self.word.rank_at(t + i) == 0))
            .expect("a verified de Bruijn cycle contains the all-zero window");
        self.word.rotation(cut).expect("cut in range")
    }

    /// Linearization of the canonical rotation: append the first `k - 1`
    /// symbols so every window occurs without wrapping.
    pub fn linearized_canonical(&self) -> Result<SymbolString> {
        self.canonical_cycle().linearize(self.k as usize)
    }
}

/// True iff `c` has length `sigma^k` and all cyclic `k`-windows distinct.
pub fn is_debruijn(c: &CyclicWord, sigma: usize, k: u32) -> bool {
    if sigma < 2 || k == 0 {
        return false;
    }
    let Some(expect) = (sigma as u64).checked_pow(k) else {
        return false;
    };
    if expect > SIZE_BUDGET || c.len() as u64 != expect {
        return false;
    }
    if c.ranks().iter().any(|&r| r as usize >= sigma) {
        return false;
    }
    let n = c.len();
    let mut seen = vec![false; n];
    let modulus = expect / sigma as u64;
    // rolling window code, most significant symbol first
    let mut code: u64 = 0;
    for i in 0..k as usize {
        code = code * sigma as u64 + c.rank_at(i) as u64;
    }
    for t in 0..n {
        if seen[code as usize] {
            return false;
        }
        seen[code as usize] = true;
        code = (code % modulus) * sigma as u64 + c.rank_at(t + k as usize) as u64;
    }
    true
}

/// The lexicographically least de Bruijn cycle of order `k` over the ranked
/// alphabet of size `sigma`: concatenation of the Lyndon words over
/// `0..sigma` whose length divides `k`, in lexicographic order.
pub fn lex_least_debruijn(sigma: usize, k: u32) -> Result<DeBruijnCycle> {
    if sigma < 2 {
        return Err(Error::NotDeBruijn(format!("sigma = {sigma} < 2")));
    }
    if k == 0 {
        return Err(Error::InvalidOrder { op: "lex_least_debruijn", k: 0, len: 0 });
    }
    let needed = (sigma as u64).checked_pow(k).unwrap_or(u64::MAX);
    if needed > SIZE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "de Bruijn generation",
            needed,
            budget: SIZE_BUDGET,
        });
    }
    let k = k as usize;
    let mut seq: Vec<u16> = Vec::with_capacity(needed as usize);
    let mut w: Vec<u16> = vec![0];
    loop {
        if k.is_multiple_of(w.len()) {
            seq.extend_from_slice(&w);
        }
        // next Lyndon word: extend periodically to length k, strip maximal
        // symbols, increment
        let len = w.len();
        for i in len..k {
            w.push(w[i % len]);
        }
        while w.last() == Some(&(sigma as u16 - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    debug_assert_eq!(seq.len() as u64, needed);
    let word = CyclicWord::new(seq, crate::alphabet::Alphabet::ranked(sigma)?)?;
    DeBruijnCycle::verify(word, k as u32)
}

/// Measures of the linearized-and-terminated canonical rotation, compared
/// against the order-`k` bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaBoundsReport {
    pub sigma: usize,
    pub k: u32,
    pub n: usize,
    pub sre: usize,
    pub chi: usize,
    pub r: usize,
    pub ratio: Ratio,
    /// `sre(w_lin) == sigma^k`.
    pub sre_ok: bool,
    /// `chi(w_lin$) == sigma^k + 1`.
    pub chi_ok: bool,
    /// `r >= sigma^(k-1) (sigma - 1) + 1`.
    pub r_lb_ok: bool,
    /// `chi / r < sigma / (sigma - 1)`.
    pub ratio_ok: bool,
}

impl SigmaBoundsReport {
    pub fn pass(&self) -> bool {
        self.sre_ok && self.chi_ok && self.r_lb_ok && self.ratio_ok
    }
}

/// Linearize and terminate the canonical rotation of `c`, measure `sre`,
/// `chi` and `r`, and check the exact bounds.
pub fn verify_sigma_bounds(c: &DeBruijnCycle) -> Result<SigmaBoundsReport> {
    let sigma = c.sigma() as u64;
    let k = c.order();
    let w_lin = c.linearized_canonical()?;
    let sre_v = sre(&w_lin);
    let terminated = w_lin.terminate()?;
    let chi_v = chi(&terminated);
    let r = bwt(&terminated)?.runs();
    let power = sigma.pow(k);
    let r_lower = sigma.pow(k - 1) * (sigma - 1) + 1;
    let ratio = Ratio::new(chi_v as u64, r as u64);
    Ok(SigmaBoundsReport {
        sigma: c.sigma(),
        k,
        n: terminated.len(),
        sre: sre_v,
        chi: chi_v,
        r,
        ratio,
        sre_ok: sre_v as u64 == power,
        chi_ok: chi_v as u64 == power + 1,
        r_lb_ok: r as u64 >= r_lower,
        ratio_ok: ratio < Ratio::new(sigma, sigma - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn cycle(s: &str, sigma: usize) -> CyclicWord {
        CyclicWord::decode_with(s.as_bytes(), &Alphabet::ranked(sigma).unwrap()).unwrap()
    }

    #[test]
    fn window_check_examples() {
        assert!(is_debruijn(&cycle("00010111", 2), 2, 3));
        assert!(!is_debruijn(&cycle("00011111", 2), 2, 3));
        assert!(is_debruijn(&cycle("001021122", 3), 3, 2));
        assert!(!is_debruijn(&cycle("00010111", 2), 2, 2));
    }

    #[test]
    fn lex_least_examples() {
        assert_eq!(lex_least_debruijn(2, 3).unwrap().word().to_string(), "00010111");
        assert_eq!(lex_least_debruijn(2, 2).unwrap().word().to_string(), "0011");
        assert_eq!(lex_least_debruijn(3, 2).unwrap().word().to_string(), "001021122");
        assert!(lex_least_debruijn(1, 2).is_err());
        assert!(matches!(
            lex_least_debruijn(2, 60),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn canonical_rotation_examples() {
        let c = DeBruijnCycle::verify(cycle("11100010", 2), 3).unwrap();
        assert_eq!(c.canonical_rotation().to_string(), "00010111");
        let c = DeBruijnCycle::verify(cycle("0011", 2), 2).unwrap();
        assert_eq!(c.canonical_rotation().to_string(), "0011");
    }

    #[test]
    fn window_set_is_rotation_invariant() {
        let base = cycle("00010111", 2);
        for cut in 0..base.len() {
            assert!(is_debruijn(&base.rotation(cut).unwrap(), 2, 3));
        }
    }

    #[test]
    fn reverse_and_complement_preserve_the_property() {
        for k in 2..=6u32 {
            let c = lex_least_debruijn(2, k).unwrap();
            let linear = c.word().to_linear_string();
            let rev = CyclicWord::from_string(&linear.reverse().unwrap()).unwrap();
            assert!(is_debruijn(&rev, 2, k));
            let comp = CyclicWord::from_string(&linear.complement().unwrap()).unwrap();
            assert!(is_debruijn(&comp, 2, k));
        }
    }

    #[test]
    fn sigma_bounds_examples() {
        let rep = verify_sigma_bounds(&lex_least_debruijn(2, 3).unwrap()).unwrap();
        assert_eq!((rep.sre, rep.chi), (8, 9));
        assert!(rep.r >= 5);
        assert!(rep.pass());

        let rep = verify_sigma_bounds(&lex_least_debruijn(3, 2).unwrap()).unwrap();
        assert_eq!((rep.sre, rep.chi), (9, 10));
        assert!(rep.r >= 7);
        assert!(rep.pass());

        let rep = verify_sigma_bounds(&lex_least_debruijn(4, 2).unwrap()).unwrap();
        assert_eq!((rep.sre, rep.chi), (16, 17));
        assert!(rep.r >= 13);
        assert!(rep.pass());
    }

    #[test]
    fn sre_is_rotation_independent_for_small_binary_orders() {
        for k in 2..=4u32 {
            let c = lex_least_debruijn(2, k).unwrap();
            for cut in 0..c.len() {
                let rot = c.word().rotation(cut).unwrap();
                let lin = rot.linearize(k as usize).unwrap();
                assert_eq!(sre(&lin), 1 << k, "k={k} cut={cut}");
            }
        }
    }
}
