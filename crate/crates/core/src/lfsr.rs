//! Fibonacci-form LFSRs, m-sequences, and cycle joining.
//!
//! A characteristic polynomial `C(x)` of degree `k` induces the recurrence
//! `s_{t+k} = XOR of the tapped bits`; the state at time `t` is the window
//! `(s_t, ..., s_{t+k-1})`. A primitive `C` yields exactly two state
//! cycles: the m-sequence through every non-zero state and the all-zero
//! self-loop. Swapping the successors of a conjugate pair (two states
//! differing only in their first bit) joins two cycles; joining the zero
//! cycle into the main cycle at `(0^k, 1 0^{k-1})` produces a de Bruijn
//! sequence of order `k`.
//!
//! The run-minimal family applies reversal and complement on top. Both are
//! realized here: once as an amended recurrence (reciprocal taps, constant
//! 1, and the indicator swap at the conjugate pair of the transformed
//! direction), and once by literally reversing and complementing the joined
//! cycle. The two routes are cross-checked against each other on every
//! construction.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::f2poly::{is_primitive, F2Poly};
use crate::strings::CyclicWord;

/// A k-bit register state `(s_t, ..., s_{t+k-1})`; bit `i` of `bits` is
/// `s_{t+i}`, so the displayed string reads oldest bit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LfsrState {
    bits: u64,
    width: u32,
}

impl LfsrState {
    pub fn new(bits: u64, width: u32) -> Self {
        assert!((1..=63).contains(&width), "state width out of range");
        Self { bits: bits & ((1 << width) - 1), width }
    }

    pub fn zero(width: u32) -> Self {
        Self::new(0, width)
    }

    /// Parse a bit string such as `001`, first character = `s_t`.
    pub fn parse(text: &str) -> Result<Self> {
        let width = text.len() as u32;
        if width == 0 || width > 63 {
            return Err(Error::StateWidthMismatch { got: width, want: 1 });
        }
        let mut bits = 0u64;
        for (i, ch) in text.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => bits |= 1 << i,
                _ => return Err(Error::SymbolNotInAlphabet { byte: ch }),
            }
        }
        Ok(Self { bits, width })
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn width(self) -> u32 {
        self.width
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// The emitted bit `s_t`.
    pub fn first_bit(self) -> u16 {
        (self.bits & 1) as u16
    }
}

impl fmt::Display for LfsrState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        Ok(())
    }
}

/// Plain successor map `F`: left shift and append the tap parity.
pub fn successor(c: F2Poly, state: LfsrState) -> Result<LfsrState> {
    let k = c.degree();
    if state.width != k {
        return Err(Error::StateWidthMismatch { got: state.width, want: k });
    }
    let fb = (state.bits & c.taps()).count_ones() as u64 & 1;
    Ok(LfsrState::new((state.bits >> 1) | (fb << (k - 1)), k))
}

/// The m-sequence of a primitive polynomial from a non-zero seed: one full
/// period of `2^k - 1` emitted bits, visiting every non-zero state once.
pub fn m_sequence(c: F2Poly, seed: LfsrState) -> Result<CyclicWord> {
    if !is_primitive(c)? {
        return Err(Error::NotPrimitive { poly: c.to_string() });
    }
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    let k = c.degree();
    if seed.width != k {
        return Err(Error::StateWidthMismatch { got: seed.width, want: k });
    }
    let period = (1u64 << k) - 1;
    let mut out = Vec::with_capacity(period as usize);
    let mut state = seed;
    for _ in 0..period {
        out.push(state.first_bit());
        state = successor(c, state)?;
    }
    assert_eq!(state, seed, "primitive recurrence must have period 2^k - 1");
    CyclicWord::new(out, Alphabet::binary())
}

/// Which construction a joined register runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinMode {
    /// The polynomial's own recurrence, zero cycle joined at
    /// `(0^k, 1 0^{k-1})`.
    Raw,
    /// Reciprocal taps plus constant 1 (the reversed-and-complemented
    /// stream), joined at `(1^k, 0 1^{k-1})`.
    ReversedComplemented,
}

/// A joined successor map `F'`: `F` with the images of one conjugate pair
/// interchanged, realized as an indicator term inside the feedback.
#[derive(Debug, Clone)]
pub struct JoinedLfsr {
    poly: F2Poly,
    k: u32,
    taps: u64,
    constant: u64,
    mode: JoinMode,
    pair: (LfsrState, LfsrState),
}

impl JoinedLfsr {
    pub fn poly(&self) -> F2Poly {
        self.poly
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn mode(&self) -> JoinMode {
        self.mode
    }

    /// The conjugate pair whose successors are interchanged.
    pub fn pair(&self) -> (LfsrState, LfsrState) {
        self.pair
    }

    /// The amended successor map.
    pub fn successor(&self, state: LfsrState) -> Result<LfsrState> {
        if state.width != self.k {
            return Err(Error::StateWidthMismatch { got: state.width, want: self.k });
        }
        Ok(LfsrState::new(self.next_bits(state.bits), self.k))
    }

    #[inline]
    fn next_bits(&self, bits: u64) -> u64 {
        let omega = (bits == self.pair.0.bits || bits == self.pair.1.bits) as u64;
        let fb = ((bits & self.taps).count_ones() as u64 + self.constant + omega) & 1;
        (bits >> 1) | (fb << (self.k - 1))
    }

    /// Run one full period from the all-zero window and interpret it as a
    /// cyclic word. The joined map must be a single cycle through all `2^k`
    /// states.
    pub fn de_bruijn_cycle(&self) -> Result<CyclicWord> {
        let n = 1u64 << self.k;
        let start = 0u64;
        let mut out = Vec::with_capacity(n as usize);
        let mut bits = start;
        for _ in 0..n {
            out.push((bits & 1) as u16);
            bits = self.next_bits(bits);
        }
        if bits != start {
            return Err(Error::CrossCheckFailed {
                k: self.k,
                detail: "joined recurrence did not close after 2^k states".into(),
            });
        }
        // a premature return to start would have shown as a shorter period;
        // distinctness of all 2^k windows is re-checked by the de Bruijn
        // validation downstream
        CyclicWord::new(out, Alphabet::binary())
    }
}

/// Join the zero cycle of a primitive polynomial into its m-sequence cycle.
pub fn cycle_join(c: F2Poly) -> Result<JoinedLfsr> {
    if !is_primitive(c)? {
        return Err(Error::NotPrimitive { poly: c.to_string() });
    }
    let k = c.degree();
    Ok(JoinedLfsr {
        poly: c,
        k,
        taps: c.taps(),
        constant: 0,
        mode: JoinMode::Raw,
        // 0^k and 1 0^{k-1}: first bit differs, suffix 0^{k-1} shared
        pair: (LfsrState::zero(k), LfsrState::new(1, k)),
    })
}

/// The joined register of the reversed-and-complemented recurrence of
/// `x^k + x + 1`.
///
/// Reversal mirrors the taps (the reciprocal polynomial); complementing a
/// recurrence with an even number of taps adds the constant 1. In the
/// transformed direction the joined states are `1^k` and `0 1^{k-1}`: these
/// are the two predecessors of the pair's images, and they form the
/// conjugate pair of the transformed recurrence itself.
pub fn transformed_join(k: u32) -> Result<JoinedLfsr> {
    let t_k = F2Poly::trinomial(k)?;
    if !is_primitive(t_k)? {
        return Err(Error::NotPrimitive { poly: t_k.to_string() });
    }
    let reciprocal = t_k.reciprocal()?;
    let all_ones = (1u64 << k) - 1;
    Ok(JoinedLfsr {
        poly: reciprocal,
        k,
        taps: reciprocal.taps(),
        constant: 1,
        mode: JoinMode::ReversedComplemented,
        pair: (LfsrState::new(all_ones, k), LfsrState::new(all_ones & !1, k)),
    })
}

/// The length-`2^k` cycle of the transformed, joined recurrence.
///
/// Computed twice: by iterating the amended recurrence, and by reversing
/// and complementing the raw joined cycle. The two must agree up to
/// rotation; a disagreement is an error, never a silent choice.
pub fn joined_transformed_sequence(k: u32) -> Result<CyclicWord> {
    let by_recurrence = transformed_join(k)?.de_bruijn_cycle()?;
    let raw = cycle_join(F2Poly::trinomial(k)?)?.de_bruijn_cycle()?;
    let by_transform = raw.to_linear_string().reverse()?.complement()?;
    let by_transform = CyclicWord::from_string(&by_transform)?;
    if !cycles_match_up_to_rotation(&by_recurrence, &by_transform, k) {
        return Err(Error::CrossCheckFailed {
            k,
            detail: format!(
                "recurrence route {} vs transform route {}",
                by_recurrence, by_transform
            ),
        });
    }
    Ok(by_recurrence)
}

/// Rotation equality for two de Bruijn candidates, aligned on the unique
/// all-zero window. Falls back to the quadratic check if either has no
/// such window.
fn cycles_match_up_to_rotation(a: &CyclicWord, b: &CyclicWord, k: u32) -> bool {
    match (zero_window_position(a, k), zero_window_position(b, k)) {
        (Some(i), Some(j)) => {
            let ra = a.rotation(i).expect("in range");
            let rb = b.rotation(j).expect("in range");
            ra.ranks() == rb.ranks()
        }
        _ => a.equals_up_to_rotation(b),
    }
}

fn zero_window_position(c: &CyclicWord, k: u32) -> Option<usize> {
    let n = c.len();
    (0..n).find(|&t| (0..k as usize).all(|i| c.rank_at(t + i) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(k: u32) -> F2Poly {
        F2Poly::trinomial(k).unwrap()
    }

    #[test]
    fn successor_examples() {
        let s = LfsrState::parse("001").unwrap();
        assert_eq!(successor(tri(3), s).unwrap().to_string(), "010");
        let zero = LfsrState::zero(3);
        assert_eq!(successor(tri(3), zero).unwrap(), zero);
        let ones = LfsrState::parse("111").unwrap();
        assert_eq!(successor(tri(3), ones).unwrap().to_string(), "110");
        assert!(successor(tri(3), LfsrState::zero(4)).is_err());
    }

    #[test]
    fn m_sequence_examples() {
        let seq = m_sequence(tri(3), LfsrState::parse("001").unwrap()).unwrap();
        assert_eq!(seq.to_string(), "0010111");

        let seq = m_sequence(tri(2), LfsrState::parse("01").unwrap()).unwrap();
        assert_eq!(seq.to_string(), "011");

        let other = m_sequence(tri(3), LfsrState::parse("111").unwrap()).unwrap();
        assert!(other.equals_up_to_rotation(
            &CyclicWord::decode_with(b"0010111", &Alphabet::binary()).unwrap()
        ));

        assert!(m_sequence(tri(3), LfsrState::zero(3)).is_err());
        assert!(matches!(
            m_sequence(F2Poly::parse("x^5+x+1").unwrap(), LfsrState::new(1, 5)),
            Err(Error::NotPrimitive { .. })
        ));
    }

    #[test]
    fn all_seeds_share_one_cycle() {
        for k in [2u32, 3, 4, 6, 7] {
            let base = m_sequence(tri(k), LfsrState::new(1, k)).unwrap();
            for seed in 1..(1u64 << k) {
                let seq = m_sequence(tri(k), LfsrState::new(seed, k)).unwrap();
                assert!(seq.equals_up_to_rotation(&base), "k={k} seed={seed}");
            }
        }
    }

    #[test]
    fn state_tour_visits_every_nonzero_state() {
        // first primitive polynomial of each degree up to 10
        for k in 2..=10u32 {
            let c = ((1u64 << k)..(1 << (k + 1)))
                .map(F2Poly)
                .find(|&c| is_primitive(c).unwrap())
                .expect("a primitive polynomial of every degree exists");
            for seed in 1..(1u64 << k) {
                let mut state = LfsrState::new(seed, k);
                let mut seen = vec![false; 1 << k];
                for _ in 0..(1u64 << k) - 1 {
                    assert!(!seen[state.bits() as usize], "{c} revisits {state}");
                    seen[state.bits() as usize] = true;
                    state = successor(c, state).unwrap();
                }
                assert_eq!(state.bits(), seed);
            }
        }
    }

    #[test]
    fn joined_map_example() {
        let j = cycle_join(tri(3)).unwrap();
        assert_eq!(j.pair().0.to_string(), "000");
        assert_eq!(j.pair().1.to_string(), "100");
        // F'(000) = 001 (displayed 0 0 1 reading s_t first)
        assert_eq!(j.successor(LfsrState::zero(3)).unwrap().to_string(), "001");
        assert_eq!(
            j.successor(LfsrState::parse("100").unwrap()).unwrap(),
            LfsrState::zero(3)
        );
        assert_eq!(j.de_bruijn_cycle().unwrap().to_string(), "00010111");
    }

    #[test]
    fn joined_map_differs_from_plain_map_on_exactly_the_pair() {
        for k in [2u32, 3, 4, 6, 7] {
            let j = cycle_join(tri(k)).unwrap();
            let (u, v) = j.pair();
            for bits in 0..(1u64 << k) {
                let s = LfsrState::new(bits, k);
                let plain = successor(tri(k), s).unwrap();
                let joined = j.successor(s).unwrap();
                if s == u {
                    assert_eq!(joined, successor(tri(k), v).unwrap());
                } else if s == v {
                    assert_eq!(joined, successor(tri(k), u).unwrap());
                } else {
                    assert_eq!(joined, plain, "k={k} state={s}");
                }
            }
        }
    }

    #[test]
    fn small_joined_cycles() {
        assert_eq!(cycle_join(tri(2)).unwrap().de_bruijn_cycle().unwrap().to_string(), "0011");
        let c16 = cycle_join(tri(4)).unwrap().de_bruijn_cycle().unwrap();
        assert_eq!(c16.len(), 16);
        assert!(crate::debruijn::is_debruijn(&c16, 2, 4));
    }

    #[test]
    fn every_generated_cycle_has_distinct_windows() {
        for k in [2u32, 3, 4, 6, 7] {
            let joined = cycle_join(tri(k)).unwrap().de_bruijn_cycle().unwrap();
            assert!(crate::debruijn::is_debruijn(&joined, 2, k), "raw k={k}");
            let transformed = joined_transformed_sequence(k).unwrap();
            assert!(crate::debruijn::is_debruijn(&transformed, 2, k), "transformed k={k}");
        }
    }

    #[test]
    fn transformed_sequence_examples() {
        let m3 = joined_transformed_sequence(3).unwrap();
        assert!(m3.equals_up_to_rotation(
            &CyclicWord::decode_with(b"00010111", &Alphabet::binary()).unwrap()
        ));
        let m2 = joined_transformed_sequence(2).unwrap();
        assert_eq!(m2.len(), 4);
        let m4 = joined_transformed_sequence(4).unwrap();
        assert_eq!(m4.len(), 16);
        assert!(matches!(
            joined_transformed_sequence(5),
            Err(Error::NotPrimitive { .. })
        ));
    }

    #[test]
    fn transformed_pair_is_a_conjugate_pair() {
        let j = transformed_join(3).unwrap();
        let (u, v) = j.pair();
        assert_eq!(u.to_string(), "111");
        assert_eq!(v.to_string(), "011");
        // shared suffix of length k-1, distinct first bit
        assert_eq!(u.bits() >> 1, v.bits() >> 1);
        assert_ne!(u.bits() & 1, v.bits() & 1);
    }

    #[test]
    fn complement_flips_recurrence_by_tap_parity() {
        // T_k has two taps (even): the complemented stream obeys the same
        // taps XOR 1.
        for k in [2u32, 3, 4, 6, 7] {
            let c = tri(k);
            let mut s: Vec<u64> = Vec::new();
            let mut state = LfsrState::new(1, k);
            for _ in 0..(3 << k) {
                s.push(state.bits() & 1);
                state = successor(c, state).unwrap();
            }
            let p: Vec<u64> = s.iter().map(|&b| b ^ 1).collect();
            for t in 0..p.len() - k as usize {
                let tapped = p[t] ^ p[t + 1];
                assert_eq!(p[t + k as usize], tapped ^ 1, "k={k} t={t}");
            }
        }
    }
}
