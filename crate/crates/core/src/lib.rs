//! Geodesics, normal forms and growth in the braid group B₃ = ⟨a, b | aba = bab⟩.

pub mod automaton;
pub mod cayley;
pub mod error;
pub mod fingerprint;
pub mod geodesic;
pub mod growth;
pub mod normal_forms;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use normal_forms::{shortlex, to_cf, to_rg, CfWord, RgForm, SlWord, TfWord};
pub use word::{Base, Letter, Syllable, Word};
