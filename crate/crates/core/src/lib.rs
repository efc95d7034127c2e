//! Uniform cubefree binary morphisms of every width.
//!
//! The crate builds, for any `k >= 0`, a `k`-uniform binary morphism that maps
//! cubefree words to cubefree words, and checks it with a bounded test plus a
//! brute-force oracle. Around that construction it provides:
//!
//! * [`words`]: finite words with square, cube and overlap detection,
//! * [`thue_morse`]: the Thue–Morse morphism and prefixes of its fixed point,
//! * [`witnesses`]: boundary-constrained word pairs feeding the construction,
//! * [`morphisms`]: uniform morphisms, the odd-width construction and the
//!   width dispatcher [`corollary_build`],
//! * [`verification`]: bounded criteria and exhaustive oracles,
//! * [`search`]: exhaustive searches for overlap-free, cubefree and squarefree
//!   ternary uniform morphisms,
//! * [`cli`]: the `cubefree` command-line front end.

pub mod cli;
pub mod error;
pub mod morphisms;
pub mod report;
pub mod search;
pub mod thue_morse;
pub mod verification;
pub mod witnesses;
pub mod words;

pub use error::{Error, Result, TheoremViolation};
pub use morphisms::{corollary_build, theorem_phi, Morphism, MorphismFile};
pub use search::{
    census_cubefree_uniform, search_overlapfree_uniform, search_squarefree_ternary_uniform,
    SearchKind, SearchOptions, SearchReport,
};
pub use thue_morse::{theta, theta_power, tm_contains, tm_prefix};
pub use verification::{
    brute_check_cubefree, brute_check_overlapfree, brute_check_squarefree, bs_overlap_check,
    enumerate_avoidant, keranen_check, squarefree_uniform_check, Counterexample, Verdict,
};
pub use witnesses::{lemma1_witnesses, lemma2_witnesses, lemma3_witnesses, Form, WitnessPair};
pub use words::{CubeOccurrence, Occurrence, RepetitionKind, Word};
