//! Braid group algorithms.
//!
//! - [`word`]: Artin-generator words, the exponent sum and permutation image.
//! - [`garside`]: left-canonical normal form and the word problem.
//! - [`gwp`]: membership in a cyclic subgroup with nonzero exponent sum.
//! - [`conjugacy`]: super summit sets and generator-power conjugacy searches.
//! - [`amalgam`]: word and conjugacy problems in `B_{n1} *_C B_{n2}` with
//!   `σ_k^p = τ_j^r`.
//! - [`crypto`]: seeded runs of the commutator and commuting-subgroup key
//!   agreements.

pub mod amalgam;
pub mod conjugacy;
pub mod crypto;
pub mod error;
pub mod garside;
pub mod gwp;
pub mod perm;
pub mod word;

pub use amalgam::{AmalgamPresentation, AmalgamWord, Factor, Syllable};
pub use conjugacy::{Limits, PowerSearchResult, SummitSet};
pub use crypto::{AagParams, KlchkpParams, ProtocolTranscript};
pub use error::{Error, Result};
pub use garside::{compare, delta, inf_sup, normal_form, NormalForm};
pub use gwp::{gwp, GwpResult};
pub use perm::Permutation;
pub use word::{band_to_artin, BandGenerator, BraidWord};
