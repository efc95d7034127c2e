//! Bounded checks that a uniform morphism preserves cube-, square- or
//! overlap-freeness, plus enumeration of repetition-free words.
//!
//! Every check returns a [`Verdict`]. A failing verdict carries the input
//! word, its image and the repetition found in the image, and the constructor
//! re-checks that repetition before the verdict is handed out.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphisms::Morphism;
use crate::words::{find_repetition, has_repetition_suffix, Occurrence, RepetitionKind, Word};

/// Input word whose image contains a forbidden repetition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: Word,
    pub image: Word,
    pub occurrence: Occurrence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            passed: true,
            counterexample: None,
        }
    }

    /// A failing verdict. Panics if `occurrence` does not hold in `image`.
    pub fn fail(input: Word, image: Word, occurrence: Occurrence) -> Self {
        assert!(
            occurrence.holds_in(image.symbols()),
            "counterexample {occurrence:?} does not verify in {image}"
        );
        Verdict {
            passed: false,
            counterexample: Some(Counterexample {
                input,
                image,
                occurrence,
            }),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => f.write_str("pass"),
            Some(c) => write!(
                f,
                "fail: h({}) = {} contains {} at {}",
                c.input, c.image, c.occurrence.kind, c.occurrence
            ),
        }
    }
}

/// All length-`n` words over the alphabet avoiding `kind`, in lexicographic order.
///
/// Built depth-first; each extension only re-checks repetitions that end at the new letter.
pub fn enumerate_avoidant(alphabet_size: u8, n: usize, kind: RepetitionKind) -> Vec<Word> {
    fn extend(
        current: &mut Vec<u8>,
        alphabet_size: u8,
        n: usize,
        kind: RepetitionKind,
        out: &mut Vec<Word>,
    ) {
        if current.len() == n {
            out.push(Word::from_raw(current.clone(), alphabet_size));
            return;
        }
        for letter in 0..alphabet_size {
            current.push(letter);
            if !has_repetition_suffix(current, kind) {
                extend(current, alphabet_size, n, kind, out);
            }
            current.pop();
        }
    }

    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), alphabet_size, n, kind, &mut out);
    out
}

/// Checks `h(w)` for every `kind`-free word `w` of length `1..=max_len`, shortest first.
fn check_images(h: &Morphism, alphabet_size: u8, max_len: usize, kind: RepetitionKind) -> Verdict {
    for len in 1..=max_len {
        for input in enumerate_avoidant(alphabet_size, len, kind) {
            let image = h.apply_symbols(input.symbols());
            if let Some(occ) = find_repetition(&image, kind) {
                let image = Word::from_raw(image, h.target_alphabet());
                return Verdict::fail(input, image, occ);
            }
        }
    }
    Verdict::pass()
}

fn require_binary(h: &Morphism) -> Result<()> {
    if h.is_binary() {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            expected: 2,
            found: h.source_alphabet().max(h.target_alphabet()),
        })
    }
}

fn require_ternary(h: &Morphism) -> Result<()> {
    if h.is_ternary() {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            expected: 3,
            found: h.source_alphabet().min(h.target_alphabet()),
        })
    }
}

/// Bounded cubefreeness test for uniform binary morphisms: the images of all
/// cubefree words of length at most 4 must be cubefree.
pub fn keranen_check(h: &Morphism) -> Result<Verdict> {
    require_binary(h)?;
    Ok(check_images(h, 2, 4, RepetitionKind::Cube))
}

/// Exhaustive check over all cubefree binary words of length `1..=max_len`.
pub fn brute_check_cubefree(h: &Morphism, max_len: usize) -> Result<Verdict> {
    require_binary(h)?;
    Ok(check_images(h, 2, max_len, RepetitionKind::Cube))
}

/// Overlap-freeness test for binary morphisms: `h(01101001)` must be overlap-free.
pub fn bs_overlap_check(h: &Morphism) -> Result<Verdict> {
    require_binary(h)?;
    let input = Word::binary("01101001")?;
    let image = h.apply(&input)?;
    Ok(match image.find_repetition(RepetitionKind::Overlap) {
        Some(occ) => Verdict::fail(input, image, occ),
        None => Verdict::pass(),
    })
}

/// Exhaustive check over all overlap-free binary words of length `1..=max_len`.
pub fn brute_check_overlapfree(h: &Morphism, max_len: usize) -> Result<Verdict> {
    require_binary(h)?;
    Ok(check_images(h, 2, max_len, RepetitionKind::Overlap))
}

/// Squarefreeness test for uniform ternary morphisms: images of all squarefree
/// words of length at most 3 must be squarefree.
pub fn squarefree_uniform_check(h: &Morphism) -> Result<Verdict> {
    require_ternary(h)?;
    Ok(check_images(h, 3, 3, RepetitionKind::Square))
}

/// Exhaustive check over all squarefree ternary words of length `1..=max_len`.
pub fn brute_check_squarefree(h: &Morphism, max_len: usize) -> Result<Verdict> {
    require_ternary(h)?;
    Ok(check_images(h, 3, max_len, RepetitionKind::Square))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::corollary_build;

    fn naive_filter(alphabet_size: u8, n: usize, kind: RepetitionKind) -> Vec<Word> {
        Word::all_of_length(alphabet_size, n)
            .filter(|w| w.find_repetition(kind).is_none())
            .collect()
    }

    #[test]
    fn enumeration_examples() {
        let words = enumerate_avoidant(2, 3, RepetitionKind::Cube);
        assert_eq!(words.len(), 6);
        assert!(!words.contains(&Word::binary("000").unwrap()));
        assert_eq!(
            enumerate_avoidant(2, 4, RepetitionKind::Cube),
            naive_filter(2, 4, RepetitionKind::Cube)
        );
        assert_eq!(naive_filter(2, 4, RepetitionKind::Cube).len(), 10);
        assert_eq!(naive_filter(3, 3, RepetitionKind::Square).len(), 12);
        assert_eq!(enumerate_avoidant(3, 3, RepetitionKind::Square).len(), 12);
        assert_eq!(
            enumerate_avoidant(2, 0, RepetitionKind::Cube),
            vec![Word::empty(2)]
        );
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        for n in 0..=12 {
            assert_eq!(
                enumerate_avoidant(2, n, RepetitionKind::Cube),
                naive_filter(2, n, RepetitionKind::Cube),
                "n = {n}"
            );
        }
        for n in 0..=8 {
            assert_eq!(
                enumerate_avoidant(3, n, RepetitionKind::Square),
                naive_filter(3, n, RepetitionKind::Square),
                "n = {n}"
            );
        }
    }

    #[test]
    fn keranen_examples() {
        let phi3 = Morphism::binary("001", "011").unwrap();
        assert!(keranen_check(&phi3).unwrap().passed);
        assert!(keranen_check(&Morphism::theta()).unwrap().passed);

        let bad = Morphism::binary("01", "01").unwrap();
        let verdict = keranen_check(&bad).unwrap();
        let c = verdict.counterexample.unwrap();
        // 0 and 1 pass; 00 gives 0101, a square but not a cube; first cube at length 3.
        assert_eq!(c.input.len(), 3);
        assert!(c.occurrence.holds_in(c.image.symbols()));
        let v = brute_check_cubefree(&bad, 3).unwrap();
        assert!(!v.passed);

        let ternary = Morphism::identity(3).unwrap();
        assert!(keranen_check(&ternary).is_err());
    }

    #[test]
    fn fail_on_010_for_constant_images() {
        // h(010) = 010101 = (01)^3
        let bad = Morphism::binary("01", "01").unwrap();
        let image = bad.apply(&Word::binary("010").unwrap()).unwrap();
        assert_eq!(image.to_string(), "010101");
        assert!(!image.is_cubefree());
    }

    #[test]
    fn brute_check_examples() {
        let phi3 = Morphism::binary("001", "011").unwrap();
        assert!(brute_check_cubefree(&phi3, 7).unwrap().passed);
        // length 1 only tests the two images themselves
        let h = Morphism::binary("000", "011").unwrap();
        let v = brute_check_cubefree(&h, 1).unwrap();
        assert_eq!(v.counterexample.unwrap().input.to_string(), "0");
        let h = Morphism::binary("0010", "1101").unwrap();
        assert!(brute_check_cubefree(&h, 1).unwrap().passed);
    }

    #[test]
    fn overlap_checks() {
        for a in 0..=4 {
            let h = Morphism::theta().power(a).unwrap();
            assert!(bs_overlap_check(&h).unwrap().passed, "theta^{a}");
        }
        assert!(
            bs_overlap_check(&Morphism::identity(2).unwrap())
                .unwrap()
                .passed
        );
        assert!(
            brute_check_overlapfree(&Morphism::theta().power(3).unwrap(), 8)
                .unwrap()
                .passed
        );
        for k in [3, 5, 7, 11, 13] {
            assert!(
                !brute_check_overlapfree(&corollary_build(k).unwrap(), 8)
                    .unwrap()
                    .passed
            );
            let v = bs_overlap_check(&corollary_build(k).unwrap()).unwrap();
            assert!(!v.passed, "phi_{k}");
            let c = v.counterexample.unwrap();
            assert!(!c.image.is_overlapfree());
        }
    }

    #[test]
    fn squarefree_uniform_examples() {
        assert!(
            squarefree_uniform_check(&Morphism::identity(3).unwrap())
                .unwrap()
                .passed
        );
        let bad = Morphism::from_texts(&["01", "02", "01"], 3).unwrap();
        let v = squarefree_uniform_check(&bad).unwrap();
        assert!(!v.passed);
        let c = v.counterexample.unwrap();
        assert!(c.input.is_squarefree());
        assert!(!c.image.is_squarefree());
        assert!(!bad
            .apply(&Word::ternary("02").unwrap())
            .unwrap()
            .is_squarefree());
        assert!(squarefree_uniform_check(&Morphism::theta()).is_err());
    }

    #[test]
    #[should_panic(expected = "does not verify")]
    fn bogus_counterexample_is_rejected() {
        let w = Word::binary("0110").unwrap();
        let occ = Occurrence {
            kind: RepetitionKind::Cube,
            start: 0,
            period: 1,
        };
        Verdict::fail(w.clone(), w, occ);
    }
}
