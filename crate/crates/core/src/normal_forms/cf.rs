use std::fmt;

use crate::cayley;
use crate::error::{Error, Result};
use crate::word::Word;

use super::{twist_notation, twist_splits, with_twist};

/// Cartesian form `prefix·(aba)^k` with an almost even, freely reduced prefix.
/// Each element of B₃ has exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CfWord {
    prefix: Word,
    k: i64,
}

impl CfWord {
    pub fn new(prefix: Word, k: i64) -> Result<CfWord> {
        if !prefix.is_freely_reduced() {
            return Err(Error::invalid(
                "CF",
                format!("prefix `{prefix}` is not freely reduced"),
            ));
        }
        if !prefix.is_almost_even()? {
            return Err(Error::invalid(
                "CF",
                format!("prefix `{prefix}` is not almost even"),
            ));
        }
        Ok(CfWord { prefix, k })
    }

    pub(crate) fn new_unchecked(prefix: Word, k: i64) -> CfWord {
        debug_assert!(prefix.is_freely_reduced() && prefix.is_almost_even().unwrap_or(false));
        CfWord { prefix, k }
    }

    pub fn identity() -> CfWord {
        CfWord {
            prefix: Word::empty(),
            k: 0,
        }
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn to_word(&self) -> Word {
        with_twist(&self.prefix, self.k)
    }
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&twist_notation(&self.prefix, self.k))
    }
}

/// Reads a literal word as `prefix·(aba)^k` in Cartesian form.
pub fn is_cf(w: &Word) -> Option<CfWord> {
    twist_splits(w)
        .into_iter()
        .find_map(|(prefix, k)| CfWord::new(prefix, k).ok())
}

/// The Cartesian form of the element of `w`, found by walking the Cayley graph.
pub fn to_cf(w: &Word) -> CfWord {
    w.letters()
        .iter()
        .fold(CfWord::identity(), |s, &l| cayley::step(&s, l))
}
