//! End-to-end consistency checks between the algorithms and brute-force
//! oracles. Each check is parameterized by its search bounds so that the same
//! code backs the full acceptance run and the quick `selftest` command.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automaton::{build_geodesic_dfa, build_sl_dfa, GeodesicScan};
use crate::cayley::{self, walk, CfState};
use crate::error::Result;
use crate::fingerprint::{bfs_ball, fingerprint, Fingerprint};
use crate::geodesic::{is_geodesic, translation_length, translation_length_witness};
use crate::growth::{
    bruteforce_geodesic_counts, geodesic_gf_closed_form, gf_from_dfa, spherical_gf_closed_form,
    to_u64s,
};
use crate::normal_forms::{phi1, phi2, shortlex, CfWord, RgForm};
use crate::word::{Base, Letter, Syllable, Word};

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}. {}: {}", self.id, self.name, self.detail)
    }
}

/// Search bounds for the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub growth_terms: usize,
    pub roundtrip_len: usize,
    pub roundtrip_twist: i64,
    pub length_law_len: usize,
    pub predicate_len: usize,
    pub tau_samples: usize,
    pub tau_word_len: usize,
    pub tau_conjugator_len: usize,
    pub tau_radius: usize,
    pub cayley_samples: usize,
    pub cayley_word_len: usize,
    pub cayley_radius: usize,
    pub seed: u64,
}

impl Bounds {
    pub fn full() -> Bounds {
        Bounds {
            growth_terms: 12,
            roundtrip_len: 10,
            roundtrip_twist: 3,
            length_law_len: 12,
            predicate_len: 10,
            tau_samples: 1000,
            tau_word_len: 8,
            tau_conjugator_len: 4,
            tau_radius: 12,
            cayley_samples: 100_000,
            cayley_word_len: 24,
            cayley_radius: 10,
            seed: 0x0b3_5eed,
        }
    }

    /// Every length-like bound capped at `max_len`, sample counts reduced.
    pub fn capped(max_len: usize) -> Bounds {
        let full = Bounds::full();
        Bounds {
            growth_terms: full.growth_terms.min(max_len),
            roundtrip_len: full.roundtrip_len.min(max_len),
            length_law_len: full.length_law_len.min(max_len),
            predicate_len: full.predicate_len.min(max_len),
            tau_samples: 200,
            tau_word_len: full.tau_word_len.min(max_len),
            tau_radius: full.tau_radius.min(max_len),
            cayley_samples: 5_000,
            cayley_radius: full.cayley_radius.min(max_len),
            ..full
        }
    }
}

/// Calls `visit` on every freely reduced word of length at most `max_len`,
/// together with its fingerprint.
pub fn for_each_reduced_word(max_len: usize, mut visit: impl FnMut(&[Letter], &Fingerprint)) {
    fn go(
        prefix: &mut Vec<Letter>,
        f: &Fingerprint,
        max_len: usize,
        visit: &mut dyn FnMut(&[Letter], &Fingerprint),
    ) {
        visit(prefix, f);
        if prefix.len() == max_len {
            return;
        }
        for l in Letter::ALL {
            if prefix.last() == Some(&l.inverse()) {
                continue;
            }
            prefix.push(l);
            go(prefix, &f.then(l), max_len, visit);
            prefix.pop();
        }
    }
    go(
        &mut Vec::new(),
        &Fingerprint::identity(),
        max_len,
        &mut visit,
    );
}

pub fn random_word(rng: &mut impl Rng, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect())
}

fn outcome(id: u8, name: &'static str, failures: Vec<String>, ok_detail: String) -> CheckOutcome {
    match failures.first() {
        None => CheckOutcome {
            id,
            name,
            passed: true,
            detail: ok_detail,
        },
        Some(first) => CheckOutcome {
            id,
            name,
            passed: false,
            detail: format!("{} failure(s), first: {first}", failures.len()),
        },
    }
}

fn errored(id: u8, name: &'static str, e: crate::Error) -> CheckOutcome {
    CheckOutcome {
        id,
        name,
        passed: false,
        detail: format!("error: {e}"),
    }
}

/// Brute-force geodesic counts, DFA word counts and the closed-form series agree.
pub fn check_geodesic_growth(b: &Bounds) -> CheckOutcome {
    const NAME: &str = "geodesic growth coefficients";
    let n = b.growth_terms;
    let run = || -> Result<(Vec<u64>, Vec<u64>, Vec<u64>)> {
        Ok((
            bruteforce_geodesic_counts(n)?,
            to_u64s(&build_geodesic_dfa().count_words(n)),
            to_u64s(&geodesic_gf_closed_form().series_coefficients(n)?),
        ))
    };
    match run() {
        Ok((brute, dfa, series)) if brute == dfa && dfa == series => CheckOutcome {
            id: 1,
            name: NAME,
            passed: true,
            detail: format!("n <= {n}: {brute:?}"),
        },
        Ok((brute, dfa, series)) => CheckOutcome {
            id: 1,
            name: NAME,
            passed: false,
            detail: format!("brute force {brute:?}, dfa {dfa:?}, series {series:?}"),
        },
        Err(e) => errored(1, NAME, e),
    }
}

/// The generating function of the geodesic automaton equals the closed form.
pub fn check_geodesic_gf() -> CheckOutcome {
    const NAME: &str = "geodesic generating function";
    match gf_from_dfa(&build_geodesic_dfa()) {
        Ok(gf) => CheckOutcome {
            id: 2,
            name: NAME,
            passed: gf.equals(&geodesic_gf_closed_form()),
            detail: format!("{gf}"),
        },
        Err(e) => errored(2, NAME, e),
    }
}

/// Sphere sizes from breadth-first search, the closed-form series and the
/// short-lex automaton agree, and the automaton's generating function equals
/// the closed form.
pub fn check_spherical(b: &Bounds) -> CheckOutcome {
    const NAME: &str = "spherical growth series";
    let n = b.growth_terms;
    let run = || -> Result<CheckOutcome> {
        let bfs = bfs_ball(n)?.counts().to_vec();
        let series = to_u64s(&spherical_gf_closed_form().series_coefficients(n)?);
        let sl = build_sl_dfa();
        let dfa = to_u64s(&sl.count_words(n));
        let gf = gf_from_dfa(&sl)?;
        let gf_ok = gf.equals(&spherical_gf_closed_form());
        let passed = bfs == series && series == dfa && gf_ok;
        let detail = if passed {
            format!("n <= {n}: {bfs:?}; gf {gf}")
        } else {
            format!("bfs {bfs:?}, series {series:?}, dfa {dfa:?}, gf {gf} (equal: {gf_ok})")
        };
        Ok(CheckOutcome {
            id: 3,
            name: NAME,
            passed,
            detail,
        })
    };
    run().unwrap_or_else(|e| errored(3, NAME, e))
}

/// Per-state description of the minimized geodesic automaton: a shortest
/// word reaching the state and the scan flags after reading it.
pub fn geodesic_state_report() -> Vec<String> {
    build_geodesic_dfa()
        .representatives()
        .into_iter()
        .enumerate()
        .map(|(s, rep)| {
            let Some(rep) = rep else {
                return format!("{s}: unreachable");
            };
            let scan = rep
                .letters()
                .iter()
                .try_fold(GeodesicScan::default(), |st, &l| st.step(l));
            match scan {
                Some(scan) => format!(
                    "{s}: via `{}` last two `{}{}` pairs(+{},-{}) letters(+{},-{}) triples(+{},-{})",
                    rep,
                    scan.before_previous.map_or(String::new(), |l| l.to_string()),
                    scan.previous.map_or(String::new(), |l| l.to_string()),
                    scan.positive_pair,
                    scan.negative_pair,
                    scan.positive_letter,
                    scan.negative_letter,
                    scan.positive_triple,
                    scan.negative_triple
                ),
                None => format!("{s}: sink via `{rep}`"),
            }
        })
        .collect()
}

pub fn check_automaton_size() -> CheckOutcome {
    const NAME: &str = "geodesic automaton size";
    let dfa = build_geodesic_dfa();
    let accepting = dfa.accepting_count();
    let sink = dfa.sink().is_some();
    let passed = accepting == 27 && sink && dfa.len() == 28;
    let mut detail = format!("{} states, {accepting} accepting, sink: {sink}", dfa.len());
    if !passed {
        detail.push('\n');
        detail.push_str(&geodesic_state_report().join("\n"));
    }
    CheckOutcome {
        id: 4,
        name: NAME,
        passed,
        detail,
    }
}

/// Almost even freely reduced words of length at most `max_len`.
fn almost_even_words(max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for_each_reduced_word(max_len, |letters, _| {
        let w = Word::from_letters(letters.to_vec());
        if w.is_almost_even().unwrap_or(false) {
            out.push(w);
        }
    });
    out
}

/// Every right-greedy form of total length (counting `3|j|`) at most `max_len`.
pub fn all_rg_forms(max_len: usize) -> Vec<RgForm> {
    fn prefixes(budget: usize, acc: &mut Vec<Syllable>, out: &mut Vec<Vec<Syllable>>) {
        out.push(acc.clone());
        let base = acc.last().map(|s| s.base.other());
        for b in base.map_or(vec![Base::A, Base::B], |b| vec![b]) {
            for e in 1..=budget {
                acc.push(Syllable::new(b, e as i64));
                prefixes(budget - e, acc, out);
                acc.pop();
            }
        }
    }
    let mut candidates = Vec::new();
    prefixes(max_len, &mut Vec::new(), &mut candidates);
    let mut out = Vec::new();
    for syl in candidates {
        let used: usize = syl.iter().map(Syllable::len).sum();
        let max_j = ((max_len - used) / 3) as i64;
        for j in -max_j..=max_j {
            if let Ok(r) = RgForm::new(syl.clone(), j) {
                out.push(r);
            }
        }
    }
    out
}

/// `phi2 ∘ phi1` fixes Cartesian forms and `phi1 ∘ phi2` fixes right-greedy forms.
pub fn check_roundtrips(b: &Bounds) -> CheckOutcome {
    const NAME: &str = "normal-form round trips";
    let mut failures = Vec::new();
    let prefixes = almost_even_words(b.roundtrip_len);
    let mut cf_count = 0usize;
    for prefix in &prefixes {
        for k in -b.roundtrip_twist..=b.roundtrip_twist {
            let c = CfWord::new(prefix.clone(), k).expect("enumerated prefixes are almost even");
            cf_count += 1;
            match phi1(&c).and_then(|r| phi2(&r)) {
                Ok(back) if back == c => {}
                Ok(back) => failures.push(format!("{c} -> {back}")),
                Err(e) => failures.push(format!("{c}: {e}")),
            }
        }
    }
    let forms = all_rg_forms(b.roundtrip_len);
    for r in &forms {
        match phi2(r).and_then(|c| phi1(&c)) {
            Ok(back) if &back == r => {}
            Ok(back) => failures.push(format!("{r} -> {back}")),
            Err(e) => failures.push(format!("{r}: {e}")),
        }
    }
    let detail = format!(
        "{cf_count} Cartesian forms, {} right-greedy forms",
        forms.len()
    );
    outcome(5, NAME, failures, detail)
}

/// `|shortlex(w)| = |w|` exactly for geodesic `w`, and `shortlex(w) = w` in the group.
pub fn check_length_law(b: &Bounds) -> CheckOutcome {
    const NAME: &str = "short-lex length law";
    let mut failures = Vec::new();
    let mut count = 0usize;
    for_each_reduced_word(b.length_law_len, |letters, f| {
        count += 1;
        let w = Word::from_letters(letters.to_vec());
        let s = shortlex(&w);
        let same_length = s.len() == w.len();
        if same_length != is_geodesic(&w) {
            failures.push(format!(
                "`{w}` has short-lex form `{s}` but is_geodesic = {}",
                is_geodesic(&w)
            ));
        }
        if &fingerprint(s.word()) != f {
            failures.push(format!("`{w}` and its short-lex form `{s}` differ"));
        }
    });
    outcome(
        6,
        NAME,
        failures,
        format!("{count} freely reduced words, |w| <= {}", b.length_law_len),
    )
}

/// The subword predicate agrees with breadth-first distances.
pub fn check_geodesic_predicate(b: &Bounds) -> CheckOutcome {
    const NAME: &str = "geodesic predicate";
    let ball = match bfs_ball(b.predicate_len) {
        Ok(ball) => ball,
        Err(e) => return errored(7, NAME, e),
    };
    let mut failures = Vec::new();
    let mut count = 0usize;
    for_each_reduced_word(b.predicate_len, |letters, f| {
        count += 1;
        let w = Word::from_letters(letters.to_vec());
        let by_distance = ball.get(f) == Some(letters.len());
        if is_geodesic(&w) != by_distance {
            failures.push(format!(
                "`{w}`: predicate {}, distance {:?}",
                is_geodesic(&w),
                ball.get(f)
            ));
        }
    });
    outcome(
        7,
        NAME,
        failures,
        format!("{count} freely reduced words, |w| <= {}", b.predicate_len),
    )
}

pub fn check_translation_lengths(b: &Bounds) -> CheckOutcome {
    const NAME: &str = "translation lengths";
    let mut failures = Vec::new();
    for (text, expected) in [("a", 1), ("ab", 2), ("(aba)^2", 6)] {
        let got = translation_length(&Word::parse(text).expect("literal"));
        if got != expected {
            failures.push(format!("tau({text}) = {got}, expected {expected}"));
        }
    }
    let ball = match bfs_ball(b.tau_radius) {
        Ok(ball) => ball,
        Err(e) => return errored(8, NAME, e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    let mut power_checks = 0usize;
    for _ in 0..b.tau_samples {
        let len = rng.gen_range(0..=b.tau_word_len);
        let w = random_word(&mut rng, len);
        let (tau, x) = translation_length_witness(&w);
        let (fw, fx) = (fingerprint(&w), fingerprint(&x));
        // The witness must be conjugate to w: same trace and exponent sum.
        if &fw.m[0] + &fw.m[3] != &fx.m[0] + &fx.m[3] || fw.exponent_sum != fx.exponent_sum {
            failures.push(format!("witness `{x}` is not conjugate to `{w}`"));
        }
        if (tau as i64 - w.exponent_sum()).rem_euclid(2) != 0 {
            failures.push(format!("tau(`{w}`) = {tau} has the wrong parity"));
        }
        if x.cyclic_permutations().iter().any(|p| !is_geodesic(p)) || x.cyclic_reduce() != x {
            failures.push(format!(
                "witness `{x}` for `{w}` is not cyclically geodesic"
            ));
        }
        let clen = rng.gen_range(0..=b.tau_conjugator_len);
        let u = random_word(&mut rng, clen);
        let conj = u.concat(&w).concat(&u.invert());
        if translation_length(&conj) != tau {
            failures.push(format!("tau(`{conj}`) != tau(`{w}`) = {tau}"));
        }
        if tau == 0 {
            continue;
        }
        for n in 1..=(b.tau_radius / tau) {
            power_checks += 1;
            match ball.distance(&x.power(n as i64)) {
                Ok(d) if d == n * tau => {}
                Ok(d) => failures.push(format!("|(`{x}`)^{n}| = {d}, expected {}", n * tau)),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    let detail = format!(
        "{} random words, {power_checks} power distances",
        b.tau_samples
    );
    outcome(8, NAME, failures, detail)
}

pub fn check_cayley(b: &Bounds) -> CheckOutcome {
    const NAME: &str = "Cayley graph consistency";
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 0x9e37_79b9);
    let relators =
        ["abaBAB", "aA", "Aa", "bB", "Bb", "babABA"].map(|t| Word::parse(t).expect("literal"));
    for i in 0..b.cayley_samples {
        let len = rng.gen_range(0..=b.cayley_word_len);
        let w = random_word(&mut rng, len);
        let state = walk(&CfState::identity(), &w);
        if fingerprint(&state.to_word()) != fingerprint(&w) {
            failures.push(format!("`{w}` folds to {state}"));
        }
        let r = &relators[i % relators.len()];
        let back = walk(&state, r);
        if back != state {
            failures.push(format!("relator `{r}` from {state} ends at {back}"));
        }
    }
    match (cayley::ball(b.cayley_radius), bfs_ball(b.cayley_radius)) {
        (Ok(graph), Ok(table)) => {
            if graph.layer_counts() != table.counts() {
                failures.push(format!(
                    "layers {:?} vs breadth-first {:?}",
                    graph.layer_counts(),
                    table.counts()
                ));
            }
        }
        (Err(e), _) | (_, Err(e)) => failures.push(e.to_string()),
    }
    let detail = format!(
        "{} random words, ball radius {}",
        b.cayley_samples, b.cayley_radius
    );
    outcome(9, NAME, failures, detail)
}

pub fn run_all(b: &Bounds) -> Vec<CheckOutcome> {
    vec![
        check_geodesic_growth(b),
        check_geodesic_gf(),
        check_spherical(b),
        check_automaton_size(),
        check_roundtrips(b),
        check_length_law(b),
        check_geodesic_predicate(b),
        check_translation_lengths(b),
        check_cayley(b),
    ]
}
