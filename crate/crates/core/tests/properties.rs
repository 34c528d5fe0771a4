use braid3::automaton::{build_geodesic_dfa, Dfa};
use braid3::cayley::{walk, CfState};
use braid3::fingerprint::{equal_elements, fingerprint};
use braid3::geodesic::{is_geodesic, translation_length};
use braid3::growth::gf_from_dfa;
use braid3::normal_forms::{is_sl, phi1, phi2, psi1, psi2, shortlex, to_cf, to_rg};
use braid3::{Letter, Word};
use proptest::prelude::*;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..4, 0..=max_len)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|i| Letter::ALL[i]).collect()))
}

/// A random walk through the geodesic automaton, so every generated word is geodesic.
fn geodesic_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..4, 0..=max_len).prop_map(|choices| {
        let dfa = build_geodesic_dfa();
        let mut state = dfa.start();
        let mut letters = Vec::new();
        for c in choices {
            let options: Vec<Letter> = Letter::ALL
                .into_iter()
                .filter(|&l| dfa.is_accepting(dfa.next(state, l)))
                .collect();
            let l = options[c % options.len()];
            state = dfa.next(state, l);
            letters.push(l);
        }
        Word::from_letters(letters)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn free_reduction_is_idempotent_and_sound(w in word(30)) {
        let r = w.free_reduce();
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(equal_elements(&r, &w));
    }

    #[test]
    fn display_round_trips(w in word(30)) {
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w.clone());
        if !w.is_empty() {
            prop_assert_eq!(Word::parse(&w.compressed()).unwrap(), w);
        }
    }

    #[test]
    fn half_twist_conjugates_by_swap(w in word(20)) {
        let delta = Word::parse("aba").unwrap();
        prop_assert!(equal_elements(&delta.concat(&w), &w.swap().concat(&delta)));
    }

    #[test]
    fn shortlex_is_a_geodesic_normal_form(w in word(24)) {
        let s = shortlex(&w);
        prop_assert!(equal_elements(s.word(), &w));
        prop_assert!(is_geodesic(s.word()));
        prop_assert!(is_sl(s.word()).is_some());
        prop_assert!(s.len() <= w.free_reduce().len());
        prop_assert_eq!(shortlex(s.word()).into_word(), s.word().clone());
    }

    #[test]
    fn shortlex_ignores_inserted_relators(u in word(10), v in word(10), i in 0usize..4) {
        let relator = ["abaBAB", "babABA", "aA", "Bb"][i];
        let inserted = u.concat(&Word::parse(relator).unwrap()).concat(&v);
        prop_assert_eq!(shortlex(&inserted).into_word(), shortlex(&u.concat(&v)).into_word());
        prop_assert_eq!(to_cf(&inserted), to_cf(&u.concat(&v)));
    }

    #[test]
    fn psi_length_law_on_geodesics(w in geodesic_word(20)) {
        let out = psi1(&w).unwrap();
        prop_assert_eq!(out.tf.len(), w.len() + 2 * out.mixed_pair_count);
        prop_assert!(equal_elements(&out.tf.to_word(), &w));
        let s = psi2(&out.tf).unwrap();
        prop_assert_eq!(s.len(), w.len());
    }

    #[test]
    fn cartesian_and_right_greedy_forms_agree(w in word(20)) {
        let c = to_cf(&w);
        prop_assert!(equal_elements(&c.to_word(), &w));
        prop_assert_eq!(walk(&CfState::identity(), &w), c.clone());
        let r = to_rg(&w).unwrap();
        prop_assert!(equal_elements(&r.to_word(), &w));
        prop_assert_eq!(phi1(&c).unwrap(), r.clone());
        prop_assert_eq!(phi2(&r).unwrap(), c);
    }

    #[test]
    fn cartesian_walks_compose(u in word(12), v in word(12)) {
        let s = walk(&CfState::identity(), &u);
        prop_assert_eq!(walk(&s, &v), to_cf(&u.concat(&v)));
        prop_assert_eq!(fingerprint(&walk(&s, &v).to_word()), fingerprint(&u.concat(&v)));
    }

    #[test]
    fn translation_length_is_a_conjugacy_invariant(w in word(8), u in word(4)) {
        let tau = translation_length(&w);
        prop_assert_eq!(translation_length(&u.concat(&w).concat(&u.invert())), tau);
        prop_assert!(tau <= shortlex(&w).len());
        prop_assert_eq!(translation_length(&w.invert()), tau);
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn generating_function_ignores_state_labels(seed in any::<u64>()) {
        let dfa = build_geodesic_dfa();
        let n = dfa.len();
        // a permutation of 1..n derived from the seed; state 0 stays the start
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (2..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, 1 + (x as usize) % i);
        }
        let mut transitions = vec![[0; 4]; n];
        let mut accepting = vec![false; n];
        for s in 0..n {
            for l in Letter::ALL {
                transitions[perm[s]][l.index()] = perm[dfa.next(s, l)];
            }
            accepting[perm[s]] = dfa.is_accepting(s);
        }
        let relabelled = Dfa::new(transitions, accepting, perm[dfa.start()]);
        prop_assert_eq!(relabelled.minimize(), dfa.clone());
        prop_assert_eq!(gf_from_dfa(&relabelled).unwrap(), gf_from_dfa(&dfa).unwrap());
    }
}
