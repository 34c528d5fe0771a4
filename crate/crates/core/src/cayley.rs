//! The Cayley graph of B₃ in Cartesian coordinates.
//!
//! A vertex is a [`CfState`] `(u, k)` denoting the element `u·(aba)^k`, where
//! `u` is almost even. Within one level `k` the vertices form the tree spanned
//! by `⟨a², b²⟩` in the free group; edges that would leave the tree change
//! the level by ±1.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fingerprint::equal_elements;
use crate::normal_forms::CfWord;
use crate::word::{Letter, Syllable, Word};

pub type CfState = CfWord;

/// `(u·(aba)^k)·g`.
///
/// `g` is first moved left through `(aba)^k`, becoming `λᵏ(g)`. If `u·λᵏ(g)`
/// stays almost even the level is unchanged. Otherwise `u` ends in an odd
/// syllable `s^e` on the other base and one of
///
/// ```text
///   ab = B(aba)     aB = a²b(ABA)
///   Ab = A²B(aba)   AB = b(ABA)
/// ```
///
/// (with their swapped images) moves the vertex to level `k ± 1`.
pub fn step(s: &CfState, g: Letter) -> CfState {
    check_identities();
    let u = s.prefix();
    let h = if s.k() % 2 == 0 { g } else { g.swapped() };
    let mut letters = u.letters().to_vec();
    letters.push(h);
    let v = Word::from_letters(letters).free_reduce();
    if v.is_almost_even().expect("reduced") {
        return CfState::new_unchecked(v, s.k());
    }

    let syl = u.runs();
    let last = *syl.last().expect("crossing requires a nonempty prefix");
    let head = Word::from_syllables(&syl[..syl.len() - 1]);
    let e = last.exponent;
    // The odd syllable grows or shrinks by one and `h⁻¹` is appended.
    let (new_e, dk) = match (e > 0, h.is_positive()) {
        (true, true) => (e - 1, 1),
        (true, false) => (e + 1, -1),
        (false, true) => (e - 1, 1),
        (false, false) => (e + 1, -1),
    };
    let mut letters = head.into_letters();
    letters.extend(Word::from_syllables(&[Syllable::new(last.base, new_e)]).into_letters());
    letters.push(h.inverse());
    CfState::new_unchecked(Word::from_letters(letters).free_reduce(), s.k() + dk)
}

fn check_identities() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        let pairs = [
            ("ab", "Baba"),
            ("ba", "Aaba"),
            ("aB", "aabABA"),
            ("bA", "bbaABA"),
            ("Ab", "AABaba"),
            ("AB", "bABA"),
        ];
        for (lhs, rhs) in pairs {
            let (l, r) = (Word::parse(lhs).unwrap(), Word::parse(rhs).unwrap());
            assert!(
                equal_elements(&l, &r),
                "level-crossing identity {lhs} = {rhs} fails"
            );
            assert!(
                equal_elements(&l.swap(), &r.swap()),
                "swapped identity {lhs} = {rhs} fails"
            );
        }
    });
}

/// Folds a word through [`step`] starting at `start`.
pub fn walk(start: &CfState, w: &Word) -> CfState {
    w.letters().iter().fold(start.clone(), |s, &l| step(&s, l))
}

/// A finite ball of the Cayley graph around the identity.
#[derive(Debug, Clone)]
pub struct BallGraph {
    radius: usize,
    vertices: Vec<(CfState, usize)>,
    index: HashMap<CfState, usize>,
    /// Positive edges `(from, label, to)` with both ends in the ball.
    edges: Vec<(usize, Letter, usize)>,
}

impl BallGraph {
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Vertices with their distance from the identity, in discovery order.
    pub fn vertices(&self) -> &[(CfState, usize)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, Letter, usize)] {
        &self.edges
    }

    pub fn index_of(&self, s: &CfState) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn layer_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.radius + 1];
        for (_, d) in &self.vertices {
            counts[*d] += 1;
        }
        counts
    }
}

pub const DEFAULT_VERTEX_LIMIT: usize = 5_000_000;

pub fn ball(radius: usize) -> Result<BallGraph> {
    ball_with_limit(radius, DEFAULT_VERTEX_LIMIT)
}

/// Breadth-first search over [`step`], deduplicating on the Cartesian state.
pub fn ball_with_limit(radius: usize, limit: usize) -> Result<BallGraph> {
    let origin = CfState::identity();
    let mut vertices = vec![(origin.clone(), 0usize)];
    let mut index = HashMap::from([(origin, 0usize)]);
    let mut frontier = vec![0usize];
    for d in 1..=radius {
        let mut next = Vec::new();
        for &v in &frontier {
            for l in Letter::ALL {
                let t = step(&vertices[v].0, l);
                if !index.contains_key(&t) {
                    index.insert(t.clone(), vertices.len());
                    next.push(vertices.len());
                    vertices.push((t, d));
                    if vertices.len() > limit {
                        return Err(Error::ResourceLimit { limit });
                    }
                }
            }
        }
        frontier = next;
    }
    let mut edges = Vec::new();
    for (i, (s, _)) in vertices.iter().enumerate() {
        for l in [Letter::A, Letter::B] {
            if let Some(&j) = index.get(&step(s, l)) {
                edges.push((i, l, j));
            }
        }
    }
    Ok(BallGraph {
        radius,
        vertices,
        index,
        edges,
    })
}

fn node_name(s: &CfState) -> String {
    format!("{}|{}", s.prefix().compressed(), s.k())
}

/// Graphviz rendering: nodes named `u|k`, positive edges labelled `a`/`b`.
pub fn export_dot(g: &BallGraph) -> String {
    let mut out = String::from("digraph cayley {\n");
    for (s, d) in &g.vertices {
        let _ = writeln!(out, "  \"{}\" [dist={}];", node_name(s), d);
    }
    for &(i, l, j) in &g.edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            node_name(&g.vertices[i].0),
            node_name(&g.vertices[j].0),
            l
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_forms::to_cf;
    use crate::word::w;

    fn state(text: &str, k: i64) -> CfState {
        CfState::new(w(text), k).unwrap()
    }

    #[test]
    fn step_examples() {
        assert_eq!(step(&CfState::identity(), Letter::A), state("a", 0));
        assert_eq!(walk(&CfState::identity(), &w("ab")), state("B", 1));
        assert_eq!(walk(&CfState::identity(), &w("aB")), state("a^2b", -1));
        assert_eq!(walk(&CfState::identity(), &w("aba")), state("", 1));
    }

    #[test]
    fn step_all_crossing_cases() {
        for (u, k) in [
            ("a", 0),
            ("A", 0),
            ("b^2a^3", 1),
            ("A^2b^3", -1),
            ("a^2B", 2),
        ] {
            let s = state(u, k);
            for l in Letter::ALL {
                let t = step(&s, l);
                let expected = s.to_word().concat(&Word::from_letters(vec![l]));
                assert!(equal_elements(&t.to_word(), &expected), "{s} · {l}");
            }
        }
    }

    #[test]
    fn levels() {
        for n in -3..=3 {
            assert_eq!(to_cf(&w("aba").power(n)), state("", n));
        }
    }

    #[test]
    fn balls() {
        assert_eq!(ball(0).unwrap().vertices().len(), 1);
        assert_eq!(ball(1).unwrap().vertices().len(), 5);
        assert_eq!(ball(3).unwrap().vertices().len(), 47);
        assert_eq!(ball(3).unwrap().layer_counts(), vec![1, 4, 12, 30]);
        assert!(matches!(
            ball_with_limit(5, 10),
            Err(Error::ResourceLimit { limit: 10 })
        ));
    }

    #[test]
    fn interior_vertices_have_two_positive_out_edges() {
        let g = ball(4).unwrap();
        for (i, (_, d)) in g.vertices().iter().enumerate() {
            let out = g.edges().iter().filter(|e| e.0 == i).count();
            if *d < g.radius() {
                assert_eq!(out, 2);
            }
        }
    }

    #[test]
    fn dot_export() {
        let dot = export_dot(&ball(0).unwrap());
        assert_eq!(dot, "digraph cayley {\n  \"ε|0\" [dist=0];\n}\n");
        let g = ball(1).unwrap();
        let dot = export_dot(&g);
        assert_eq!(dot.matches("[dist=").count(), 5);
        assert_eq!(dot.matches("\"ε|0\" ->").count(), 2);
        assert_eq!(export_dot(&ball(3).unwrap()).matches("[dist=").count(), 47);
        assert_eq!(export_dot(&g), dot);
    }
}
