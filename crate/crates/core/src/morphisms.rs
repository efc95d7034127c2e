//! Uniform morphisms: every letter maps to a word of the same length.
//!
//! Besides the basic algebra (application, composition, powers, fixed-point
//! prefixes) this module holds the odd-width construction [`theorem_phi`],
//! which turns two distinct cubefree words of the form `00x11` into a cubefree
//! morphism, and [`corollary_build`], which returns a cubefree binary morphism
//! of any requested width.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, TheoremViolation};
use crate::verification::keranen_check;
use crate::witnesses::lemma3_witnesses;
use crate::words::Word;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source_alphabet: u8,
    target_alphabet: u8,
    width: usize,
    images: Vec<Word>,
}

impl Morphism {
    /// Builds a morphism whose letter `a` maps to `images[a]`.
    ///
    /// All images must share one length and live over `target_alphabet`.
    pub fn new(images: Vec<Word>, target_alphabet: u8) -> Result<Self> {
        let source_alphabet = images.len();
        if source_alphabet == 0 || source_alphabet > crate::words::MAX_ALPHABET as usize {
            return Err(Error::UnsupportedAlphabet(source_alphabet.min(255) as u8));
        }
        let width = images[0].len();
        let mut widened = Vec::with_capacity(source_alphabet);
        for image in images {
            if image.len() != width {
                return Err(Error::NotUniform(width, image.len()));
            }
            if image.alphabet_size() > target_alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: target_alphabet,
                    found: image.alphabet_size(),
                });
            }
            widened.push(image.widen(target_alphabet)?);
        }
        Ok(Morphism {
            source_alphabet: source_alphabet as u8,
            target_alphabet,
            width,
            images: widened,
        })
    }

    /// Parses textual images, e.g. `["001", "011"]`.
    pub fn from_texts(images: &[&str], target_alphabet: u8) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| Word::parse(s, target_alphabet))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images, target_alphabet)
    }

    pub fn binary(image0: &str, image1: &str) -> Result<Self> {
        Morphism::from_texts(&[image0, image1], 2)
    }

    /// The Thue–Morse morphism 0 → 01, 1 → 10.
    pub fn theta() -> Self {
        Morphism::binary("01", "10").expect("valid constant")
    }

    pub fn identity(alphabet: u8) -> Result<Self> {
        let images = (0..alphabet)
            .map(|a| Word::letter(a, alphabet))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images, alphabet)
    }

    /// The morphism sending every letter to the empty word.
    pub fn erasing(source_alphabet: u8, target_alphabet: u8) -> Result<Self> {
        Morphism::new(
            vec![Word::empty(target_alphabet); source_alphabet as usize],
            target_alphabet,
        )
    }

    /// The letter exchange 0 ↔ 1.
    pub fn complement() -> Self {
        Morphism::binary("1", "0").expect("valid constant")
    }

    /// The letter-to-letter morphism `a -> perm[a]`.
    pub fn permutation(perm: &[u8]) -> Result<Self> {
        let n = perm.len() as u8;
        let images = perm
            .iter()
            .map(|&b| Word::letter(b, n))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = perm.to_vec();
        seen.sort_unstable();
        if seen != (0..n).collect::<Vec<_>>() {
            return Err(Error::MorphismFile(format!(
                "{perm:?} is not a permutation"
            )));
        }
        Morphism::new(images, n)
    }

    pub fn source_alphabet(&self) -> u8 {
        self.source_alphabet
    }

    pub fn target_alphabet(&self) -> u8 {
        self.target_alphabet
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, letter: u8) -> &Word {
        &self.images[letter as usize]
    }

    pub fn is_binary(&self) -> bool {
        self.source_alphabet == 2 && self.target_alphabet == 2
    }

    pub fn is_ternary(&self) -> bool {
        self.source_alphabet == 3 && self.target_alphabet == 3
    }

    /// Image of a raw symbol slice. Symbols must be below the source alphabet size.
    pub(crate) fn apply_symbols(&self, symbols: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(symbols.len() * self.width);
        for &s in symbols {
            out.extend_from_slice(self.images[s as usize].symbols());
        }
        out
    }

    /// The concatenation of the images of the letters of `w`.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet_size() > self.source_alphabet {
            if let Some((index, &symbol)) = w
                .symbols()
                .iter()
                .enumerate()
                .find(|(_, &s)| s >= self.source_alphabet)
            {
                return Err(Error::SymbolOutOfRange {
                    symbol,
                    index,
                    alphabet_size: self.source_alphabet,
                });
            }
        }
        Ok(Word::from_raw(
            self.apply_symbols(w.symbols()),
            self.target_alphabet,
        ))
    }

    /// `self ∘ inner`: first apply `inner`, then `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.target_alphabet != self.source_alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.source_alphabet,
                found: inner.target_alphabet,
            });
        }
        let images = inner
            .images
            .iter()
            .map(|image| self.apply(image))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images, self.target_alphabet)
    }

    /// `self` composed with itself `exponent` times; the zeroth power is the identity.
    pub fn power(&self, exponent: u32) -> Result<Morphism> {
        if self.source_alphabet != self.target_alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.source_alphabet,
                found: self.target_alphabet,
            });
        }
        let mut result = Morphism::identity(self.source_alphabet)?;
        for _ in 0..exponent {
            result = self.compose(&result)?;
        }
        Ok(result)
    }

    /// Renames letters on both sides: `a -> perm(h(perm^{-1}(a)))`.
    pub fn conjugate(&self, perm: &[u8]) -> Result<Morphism> {
        let p = Morphism::permutation(perm)?;
        let mut inverse = vec![0u8; perm.len()];
        for (a, &b) in perm.iter().enumerate() {
            inverse[b as usize] = a as u8;
        }
        let p_inv = Morphism::permutation(&inverse)?;
        p.compose(self)?.compose(&p_inv)
    }

    /// Length-`n` prefix of the fixed point obtained by iterating on `seed`.
    pub fn iterate_prefix(&self, seed: u8, n: usize) -> Result<Word> {
        if seed >= self.source_alphabet || self.source_alphabet != self.target_alphabet {
            return Err(Error::SymbolOutOfRange {
                symbol: seed,
                index: 0,
                alphabet_size: self.source_alphabet,
            });
        }
        if n == 0 {
            return Ok(Word::empty(self.target_alphabet));
        }
        let image = self.image(seed);
        if self.width < 2 || image.symbols()[0] != seed {
            return Err(Error::NotProlongable {
                seed,
                image: image.to_string(),
            });
        }
        let mut current = vec![seed];
        while current.len() < n {
            current = self.apply_symbols(&current);
        }
        current.truncate(n);
        Ok(Word::from_raw(current, self.target_alphabet))
    }

    /// Serializes to the JSON morphism file format.
    pub fn to_file_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&MorphismFile::from(self))
            .expect("morphism file serialization cannot fail");
        text.push('\n');
        text
    }

    /// Parses the JSON morphism file format.
    pub fn from_file_json(text: &str) -> Result<Morphism> {
        let file: MorphismFile =
            serde_json::from_str(text).map_err(|e| Error::MorphismFile(e.to_string()))?;
        file.try_into()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (letter, image) in self.images.iter().enumerate() {
            if letter > 0 {
                writeln!(f)?;
            }
            write!(f, "{letter} -> {image}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.images.iter().map(|w| w.to_string()).collect();
        write!(f, "Morphism[{}]", images.join(", "))
    }
}

impl Serialize for Morphism {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        MorphismFile::from(self).serialize(serializer)
    }
}

/// On-disk representation of a morphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source_alphabet: u8,
    pub target_alphabet: u8,
    pub width: usize,
    pub images: BTreeMap<String, String>,
}

impl From<&Morphism> for MorphismFile {
    fn from(h: &Morphism) -> Self {
        MorphismFile {
            source_alphabet: h.source_alphabet,
            target_alphabet: h.target_alphabet,
            width: h.width,
            images: h
                .images
                .iter()
                .enumerate()
                .map(|(a, w)| (a.to_string(), w.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<MorphismFile> for Morphism {
    type Error = Error;

    fn try_from(file: MorphismFile) -> Result<Morphism> {
        let n = file.source_alphabet as usize;
        if file.images.len() != n {
            return Err(Error::ImageCount {
                expected: n,
                found: file.images.len(),
            });
        }
        let images = (0..n)
            .map(|a| {
                let text = file
                    .images
                    .get(&a.to_string())
                    .ok_or_else(|| Error::MorphismFile(format!("missing image for letter {a}")))?;
                Word::parse(text, file.target_alphabet)
            })
            .collect::<Result<Vec<_>>>()?;
        let h = Morphism::new(images, file.target_alphabet)?;
        if h.width != file.width {
            return Err(Error::MorphismFile(format!(
                "declared width {} but images have length {}",
                file.width, h.width
            )));
        }
        Ok(h)
    }
}

fn check_theorem_word(w: &Word) -> Result<(), TheoremViolation> {
    let text = w.to_string();
    if !w.is_binary() || !text.starts_with("00") || !text.ends_with("11") {
        return Err(TheoremViolation::WrongForm(text));
    }
    if w.len() < 9 {
        return Err(TheoremViolation::TooShort(text));
    }
    if !w.is_cubefree() {
        return Err(TheoremViolation::NotCubefree(text));
    }
    Ok(())
}

/// The odd-width cubefree morphism `i -> theta(w_i) (010)^{-1}`.
///
/// `w0` and `w1` must be distinct cubefree binary words of one length `>= 9`,
/// each beginning with `00` and ending with `11`. The result has width
/// `2|w0| - 3`, every image starts with `01011` and ends with `11`, and the
/// morphism passes the bounded cubefreeness check before it is returned.
pub fn theorem_phi(w0: &Word, w1: &Word) -> Result<Morphism> {
    if w0 == w1 {
        return Err(TheoremViolation::NotDistinct.into());
    }
    check_theorem_word(w0)?;
    check_theorem_word(w1)?;
    if w0.len() != w1.len() {
        return Err(TheoremViolation::LengthMismatch(w0.len(), w1.len()).into());
    }
    let marker = Word::binary("010")?;
    let images = [w0, w1]
        .into_iter()
        .map(|w| crate::thue_morse::theta(w)?.strip_suffix(&marker))
        .collect::<Result<Vec<_>>>()?;
    let phi = Morphism::new(images, 2)?;
    debug_assert_eq!(phi.width, 2 * w0.len() - 3);
    let head = Word::binary("01011")?;
    let tail = Word::binary("11")?;
    for image in phi.images() {
        if !image.starts_with(&head) || !image.ends_with(&tail) {
            return Err(Error::Unverified(format!(
                "image {image} lacks prefix 01011 or suffix 11"
            )));
        }
    }
    let verdict = keranen_check(&phi)?;
    if !verdict.passed {
        return Err(Error::Unverified(format!("{phi:?}: {verdict}")));
    }
    Ok(phi)
}

/// Fixed cubefree morphisms for the small odd widths not reached by [`theorem_phi`].
pub const SMALL_ODD_TABLE: [(usize, &str, &str); 5] = [
    (3, "001", "011"),
    (5, "01001", "10110"),
    (7, "0010011", "0011011"),
    (11, "00101001011", "00101001101"),
    (13, "0010010110011", "0010011001011"),
];

fn small_odd(k: usize) -> Option<Morphism> {
    SMALL_ODD_TABLE
        .iter()
        .find(|(width, _, _)| *width == k)
        .map(|(_, a, b)| Morphism::binary(a, b).expect("valid table entry"))
}

fn build_unchecked(k: usize) -> Result<Morphism> {
    if k == 0 {
        return Morphism::erasing(2, 2);
    }
    if k == 1 {
        return Morphism::identity(2);
    }
    if k % 2 == 1 {
        if let Some(h) = small_odd(k) {
            return Ok(h);
        }
        if k == 9 {
            let phi3 = small_odd(3).expect("width 3 is tabulated");
            return phi3.compose(&phi3);
        }
        // width 2m + 5 from witnesses of length m + 4
        let pair = lemma3_witnesses((k + 3) / 2)?;
        return theorem_phi(&pair.first, &pair.second);
    }
    let a = k.trailing_zeros();
    let odd = k >> a;
    let theta_a = Morphism::theta().power(a)?;
    if odd == 1 {
        Ok(theta_a)
    } else {
        theta_a.compose(&build_unchecked(odd)?)
    }
}

/// A `k`-uniform cubefree binary morphism, for any `k >= 0`.
pub fn corollary_build(k: usize) -> Result<Morphism> {
    let h = build_unchecked(k)?;
    if h.width != k || !h.is_binary() {
        return Err(Error::Unverified(format!("built {h:?} for width {k}")));
    }
    let verdict = keranen_check(&h)?;
    if !verdict.passed {
        return Err(Error::Unverified(format!("width {k}: {verdict}")));
    }
    Ok(h)
}
