//! Exhaustive comparisons against brute-force enumeration at small lengths.

use std::collections::HashMap;

use braid3::automaton::{build_geodesic_dfa, build_sl_dfa};
use braid3::fingerprint::{bfs_ball, fingerprint, Fingerprint};
use braid3::geodesic::is_geodesic;
use braid3::normal_forms::{is_cf, is_rg, is_sl, is_tf, shortlex};
use braid3::verify::for_each_reduced_word;
use braid3::{Letter, Word};

/// All words of length exactly `n` in lexicographic order under `a < A < b < B`.
fn words_of_length(n: usize) -> Vec<Word> {
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .into_iter()
            .flat_map(|p: Vec<Letter>| {
                Letter::ALL.into_iter().map(move |l| {
                    let mut q = p.clone();
                    q.push(l);
                    q
                })
            })
            .collect();
    }
    layer.into_iter().map(Word::from_letters).collect()
}

#[test]
fn shortlex_matches_the_least_representative() {
    const RADIUS: usize = 9;
    let mut least: HashMap<Fingerprint, Word> = HashMap::new();
    for n in 0..=RADIUS {
        for w in words_of_length(n) {
            if w.is_freely_reduced() {
                least.entry(fingerprint(&w)).or_insert(w);
            }
        }
    }
    let mut per_length = vec![0u64; RADIUS + 1];
    for (f, w) in &least {
        let s = shortlex(w);
        assert_eq!(s.word(), w, "element {f:?}");
        assert!(is_sl(w).is_some(), "`{w}` is least but not recognized");
        per_length[w.len()] += 1;
    }
    assert_eq!(per_length, bfs_ball(RADIUS).unwrap().counts());
    // the recognizer accepts nothing else
    let recognized = (0..=RADIUS)
        .flat_map(words_of_length)
        .filter(|w| is_sl(w).is_some())
        .count();
    assert_eq!(recognized, least.len());
}

#[test]
fn automata_agree_with_predicates_on_all_reduced_words() {
    let geo = build_geodesic_dfa();
    let sl = build_sl_dfa();
    let mut checked = 0usize;
    for_each_reduced_word(11, |letters, _| {
        let w = Word::from_letters(letters.to_vec());
        assert_eq!(geo.accepts(&w), is_geodesic(&w), "`{w}`");
        assert_eq!(sl.accepts(&w), is_sl(&w).is_some(), "`{w}`");
        checked += 1;
    });
    assert_eq!(
        checked,
        (0..=11)
            .map(|n| if n == 0 { 1 } else { 4 * 3usize.pow(n - 1) })
            .sum::<usize>()
    );
    for w in (0..=6).flat_map(words_of_length) {
        assert_eq!(geo.accepts(&w), is_geodesic(&w), "`{w}`");
        assert_eq!(sl.accepts(&w), is_sl(&w).is_some(), "`{w}`");
    }
}

#[test]
fn literal_form_recognizers() {
    for n in 0..=7 {
        for w in words_of_length(n) {
            if let Some(c) = is_cf(&w) {
                assert_eq!(c.to_word(), w);
            }
            if let Some(r) = is_rg(&w) {
                assert_eq!(r.to_word(), w);
                assert!(r.syllables().iter().all(|s| s.is_positive()));
            }
            if let Some(t) = is_tf(&w) {
                assert_eq!(t.to_word(), w);
            }
        }
    }
}
