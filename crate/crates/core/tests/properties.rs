//! Property tests for the structural invariants: multiset preservation,
//! involutions, permutation-ness, round trips, and oracle agreement.

use std::collections::HashMap;

use proptest::prelude::*;

use chiruns::bwt::{bwt, cbwt, invert_bwt, Inversion};
use chiruns::oracle;
use chiruns::sa::{lcp_array, suffix_array};
use chiruns::suffixient::{brute_force_chi, smallest_suffixient_set};
use chiruns::{Alphabet, CyclicWord, SymbolString};

fn word_strategy(max_sigma: u8, max_len: usize) -> impl Strategy<Value = SymbolString> {
    (2..=max_sigma, 1..=max_len).prop_flat_map(|(sigma, len)| {
        proptest::collection::vec(0..sigma, len).prop_map(move |bytes| {
            let labels: Vec<u8> = (0..sigma).map(|r| b'a' + r).collect();
            let alphabet = Alphabet::from_labels(labels).unwrap();
            let bytes: Vec<u8> = bytes.iter().map(|&r| b'a' + r).collect();
            SymbolString::decode_with(&bytes, &alphabet).unwrap()
        })
    })
}

fn symbol_counts(w: &SymbolString) -> HashMap<chiruns::Symbol, usize> {
    let mut counts = HashMap::new();
    for &s in w.symbols() {
        *counts.entry(s).or_insert(0) += 1;
    }
    counts
}

proptest! {
    #[test]
    fn rotation_preserves_symbol_multiset(w in word_strategy(4, 64), cut in 0usize..64) {
        let c = CyclicWord::from_string(&w).unwrap();
        let cut = cut % c.len();
        let rotated = c.rotate(cut).unwrap();
        prop_assert_eq!(symbol_counts(&w), symbol_counts(&rotated));
    }

    #[test]
    fn reverse_is_an_involution(w in word_strategy(4, 64)) {
        prop_assert_eq!(&w.reverse().unwrap().reverse().unwrap(), &w);
    }

    #[test]
    fn complement_is_an_involution(w in word_strategy(2, 64)) {
        prop_assert_eq!(&w.complement().unwrap().complement().unwrap(), &w);
    }

    #[test]
    fn suffix_array_is_a_sorted_permutation(w in word_strategy(4, 128)) {
        let t = w.terminate().unwrap();
        let sa = suffix_array(&t);
        let mut seen = vec![false; t.len()];
        for &p in &sa {
            prop_assert!(!seen[p as usize]);
            seen[p as usize] = true;
        }
        let syms = t.symbols();
        for pair in sa.windows(2) {
            prop_assert!(syms[pair[0] as usize..] < syms[pair[1] as usize..]);
        }
    }

    #[test]
    fn lcp_matches_pairwise_oracle(w in word_strategy(4, 128)) {
        let t = w.terminate().unwrap();
        let sa = suffix_array(&t);
        prop_assert_eq!(lcp_array(&t, &sa).unwrap(), oracle::naive_lcp_array(&t, &sa));
    }

    #[test]
    fn linearization_keeps_every_cyclic_window(w in word_strategy(3, 48), k in 2usize..6) {
        prop_assume!(w.len() >= k);
        let c = CyclicWord::from_string(&w).unwrap();
        let lin = c.linearize(k).unwrap();
        prop_assert_eq!(lin.len(), c.len() + k - 1);
        let mut cyclic: Vec<Vec<u16>> = (0..c.len())
            .map(|t| (0..k).map(|i| c.rank_at(t + i)).collect())
            .collect();
        let mut windows: Vec<Vec<u16>> = lin
            .ranks()
            .unwrap()
            .windows(k)
            .map(|win| win.to_vec())
            .collect();
        cyclic.sort();
        windows.sort();
        prop_assert_eq!(cyclic, windows);
    }

    #[test]
    fn bwt_round_trips(w in word_strategy(4, 96)) {
        let t = w.terminate().unwrap();
        let out = bwt(&t).unwrap();
        prop_assert_eq!(symbol_counts(&t), symbol_counts(out.last_column()));
        match invert_bwt(out.last_column()).unwrap() {
            Inversion::Recovered(back) => prop_assert_eq!(back, t),
            Inversion::NotInvertible { cycles } => {
                return Err(TestCaseError::fail(format!("real BWT split into {cycles} cycles")))
            }
        }
    }

    #[test]
    fn bwt_agrees_with_rotation_matrix_sort(w in word_strategy(4, 96)) {
        let t = w.terminate().unwrap();
        prop_assert_eq!(bwt(&t).unwrap(), oracle::rotation_matrix_bwt(&t).unwrap());
    }

    #[test]
    fn cbwt_preserves_multiset_and_matches_oracle(w in word_strategy(3, 64)) {
        let c = CyclicWord::from_string(&w).unwrap();
        let out = cbwt(&c).unwrap();
        prop_assert_eq!(symbol_counts(&w), symbol_counts(out.last_column()));
        prop_assert_eq!(&out, &oracle::naive_cbwt(&c).unwrap());
    }

    #[test]
    fn chi_matches_brute_force(w in word_strategy(3, 48)) {
        let t = w.terminate().unwrap();
        let rep = smallest_suffixient_set(&t);
        prop_assert_eq!(rep.chi, brute_force_chi(&t).unwrap());
        // witness property, literally
        let rendered = t.to_string();
        for x in &rep.super_maximal {
            prop_assert!(rep
                .suffixient_positions
                .iter()
                .any(|&j| rendered[..=j].ends_with(x.as_str())));
        }
    }
}
