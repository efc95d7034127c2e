//! Finite words over the alphabets {0,1} and {0,1,2}, with repetition detection.
//!
//! A word is stored as a vector of symbol ids together with the size of the
//! alphabet it lives in. The textual form writes one ASCII digit per symbol.
//!
//! Repetitions are located by a per-period scan: for a period `p` the word has
//! a square, cube or overlap starting at `s` exactly when `w[i] == w[i + p]`
//! holds on a run of `p`, `2p` or `p + 1` consecutive indices beginning at `s`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest alphabet the crate handles.
pub const MAX_ALPHABET: u8 = 3;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: u8,
}

/// The three repetition shapes: `xx`, `xxx` and `axaxa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepetitionKind {
    Square,
    Cube,
    Overlap,
}

impl RepetitionKind {
    /// Length of a repetition of this kind with the given period.
    pub fn length(self, period: usize) -> usize {
        match self {
            RepetitionKind::Square => 2 * period,
            RepetitionKind::Cube => 3 * period,
            RepetitionKind::Overlap => 2 * period + 1,
        }
    }

    /// Number of consecutive matches `w[i] == w[i + period]` that make up the repetition.
    fn run_needed(self, period: usize) -> usize {
        self.length(period) - period
    }

    pub fn name(self) -> &'static str {
        match self {
            RepetitionKind::Square => "square",
            RepetitionKind::Cube => "cube",
            RepetitionKind::Overlap => "overlap",
        }
    }
}

impl fmt::Display for RepetitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A located repetition: `kind` of period `period` starting at index `start`.
///
/// For an overlap `axaxa` the period is `|ax|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub kind: RepetitionKind,
    pub start: usize,
    pub period: usize,
}

/// A cube `xxx` inside a word, `period = |x|`.
pub type CubeOccurrence = Occurrence;

impl Occurrence {
    pub fn len(&self) -> usize {
        self.kind.length(self.period)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn end(&self) -> usize {
        self.start + self.len()
    }

    /// Checks by direct block comparison that `symbols` really contains this repetition.
    pub fn holds_in(&self, symbols: &[u8]) -> bool {
        if self.period == 0 || self.end() > symbols.len() {
            return false;
        }
        let p = self.period;
        let s = self.start;
        match self.kind {
            RepetitionKind::Square => symbols[s..s + p] == symbols[s + p..s + 2 * p],
            RepetitionKind::Cube => {
                symbols[s..s + p] == symbols[s + p..s + 2 * p]
                    && symbols[s + p..s + 2 * p] == symbols[s + 2 * p..s + 3 * p]
            }
            RepetitionKind::Overlap => {
                symbols[s..s + p] == symbols[s + p..s + 2 * p] && symbols[s] == symbols[s + 2 * p]
            }
        }
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.start, self.period)
    }
}

/// Finds the repetition of `kind` with the smallest start, ties broken by the smallest period.
pub fn find_repetition(symbols: &[u8], kind: RepetitionKind) -> Option<Occurrence> {
    let n = symbols.len();
    let mut best: Option<(usize, usize)> = None;
    let mut period = 1;
    while kind.length(period) <= n {
        let need = kind.run_needed(period);
        // A later period only wins with a strictly smaller start.
        let limit = match best {
            Some((start, _)) => (start + need).min(n - period),
            None => n - period,
        };
        let mut run = 0;
        for i in 0..limit {
            if symbols[i] == symbols[i + period] {
                run += 1;
                if run == need {
                    let start = i + 1 - need;
                    if best.is_none_or(|(s, _)| start < s) {
                        best = Some((start, period));
                    }
                    break;
                }
            } else {
                run = 0;
            }
        }
        period += 1;
    }
    let found = best.map(|(start, period)| Occurrence {
        kind,
        start,
        period,
    });
    if let Some(occ) = found {
        assert!(
            occ.holds_in(symbols),
            "repetition scan returned {occ:?} which does not verify"
        );
    }
    found
}

/// True if some repetition of `kind` is a suffix of `symbols`.
///
/// Used for depth-first word generation, where every proper prefix is already known to be free.
pub fn has_repetition_suffix(symbols: &[u8], kind: RepetitionKind) -> bool {
    let n = symbols.len();
    let mut period = 1;
    while kind.length(period) <= n {
        let occ = Occurrence {
            kind,
            start: n - kind.length(period),
            period,
        };
        if occ.holds_in(symbols) {
            return true;
        }
        period += 1;
    }
    false
}

pub fn find_cube(symbols: &[u8]) -> Option<CubeOccurrence> {
    find_repetition(symbols, RepetitionKind::Cube)
}

pub fn is_cubefree(symbols: &[u8]) -> bool {
    find_cube(symbols).is_none()
}

pub fn is_squarefree(symbols: &[u8]) -> bool {
    find_repetition(symbols, RepetitionKind::Square).is_none()
}

pub fn is_overlapfree(symbols: &[u8]) -> bool {
    find_repetition(symbols, RepetitionKind::Overlap).is_none()
}

/// Start indices of every (possibly overlapping) occurrence of `pattern` in `symbols`.
pub fn occurrences(symbols: &[u8], pattern: &[u8]) -> Vec<usize> {
    if pattern.is_empty() || pattern.len() > symbols.len() {
        return Vec::new();
    }
    symbols
        .windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect()
}

fn check_alphabet(alphabet_size: u8) -> Result<()> {
    if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
        return Err(Error::UnsupportedAlphabet(alphabet_size));
    }
    Ok(())
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet_size: u8) -> Result<Self> {
        check_alphabet(alphabet_size)?;
        if let Some((index, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s >= alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                symbol,
                index,
                alphabet_size,
            });
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Builds a word without validation. Callers guarantee every symbol is in range.
    pub(crate) fn from_raw(symbols: Vec<u8>, alphabet_size: u8) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet_size));
        Word {
            symbols,
            alphabet_size,
        }
    }

    pub fn empty(alphabet_size: u8) -> Self {
        Word::from_raw(Vec::new(), alphabet_size)
    }

    pub fn letter(letter: u8, alphabet_size: u8) -> Result<Self> {
        Word::new(vec![letter], alphabet_size)
    }

    /// Parses `text` as a word over an alphabet of the given size.
    pub fn parse(text: &str, alphabet_size: u8) -> Result<Self> {
        check_alphabet(alphabet_size)?;
        let symbols = text
            .chars()
            .map(|c| match c {
                '0'..='2' => Ok(c as u8 - b'0'),
                other => Err(Error::InvalidChar(other)),
            })
            .collect::<Result<Vec<u8>>>()?;
        Word::new(symbols, alphabet_size)
    }

    pub fn binary(text: &str) -> Result<Self> {
        Word::parse(text, 2)
    }

    pub fn ternary(text: &str) -> Result<Self> {
        Word::parse(text, 3)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet_size == 2
    }

    /// Reinterprets the word over a larger (or equal) alphabet.
    pub fn widen(&self, alphabet_size: u8) -> Result<Self> {
        Word::new(self.symbols.clone(), alphabet_size)
    }

    /// Concatenation. Both words must share an alphabet.
    pub fn concat(&self, other: &Word) -> Result<Self> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet_size,
                found: other.alphabet_size,
            });
        }
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Ok(Word::from_raw(symbols, self.alphabet_size))
    }

    /// The factor occupying `range`.
    pub fn factor(&self, range: std::ops::Range<usize>) -> Self {
        Word::from_raw(self.symbols[range].to_vec(), self.alphabet_size)
    }

    pub fn prefix(&self, n: usize) -> Self {
        self.factor(0..n.min(self.len()))
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.symbols.starts_with(&prefix.symbols)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.symbols.ends_with(&suffix.symbols)
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        factor.is_empty()
            || self
                .symbols
                .windows(factor.len())
                .any(|w| w == factor.symbols())
    }

    /// Exchanges 0 and 1. Only defined on binary words.
    pub fn complement(&self) -> Result<Self> {
        if !self.is_binary() {
            return Err(Error::NotBinary(self.alphabet_size));
        }
        Ok(Word::from_raw(
            self.symbols.iter().map(|&s| 1 - s).collect(),
            2,
        ))
    }

    /// `w s^{-1}`: removes the suffix `suffix`, failing if it is not one.
    pub fn strip_suffix(&self, suffix: &Word) -> Result<Self> {
        match self.symbols.strip_suffix(suffix.symbols()) {
            Some(rest) => Ok(Word::from_raw(rest.to_vec(), self.alphabet_size)),
            None => Err(Error::NotASuffix {
                word: self.to_string(),
                suffix: suffix.to_string(),
            }),
        }
    }

    /// `p^{-1} w`: removes the prefix `prefix`, failing if it is not one.
    pub fn strip_prefix(&self, prefix: &Word) -> Result<Self> {
        match self.symbols.strip_prefix(prefix.symbols()) {
            Some(rest) => Ok(Word::from_raw(rest.to_vec(), self.alphabet_size)),
            None => Err(Error::NotAPrefix {
                word: self.to_string(),
                prefix: prefix.to_string(),
            }),
        }
    }

    pub fn find_repetition(&self, kind: RepetitionKind) -> Option<Occurrence> {
        find_repetition(&self.symbols, kind)
    }

    pub fn find_cube(&self) -> Option<CubeOccurrence> {
        find_cube(&self.symbols)
    }

    pub fn is_cubefree(&self) -> bool {
        is_cubefree(&self.symbols)
    }

    pub fn is_squarefree(&self) -> bool {
        is_squarefree(&self.symbols)
    }

    pub fn is_overlapfree(&self) -> bool {
        is_overlapfree(&self.symbols)
    }

    /// Distinct length-`len` factors that begin with `prefix` and end with `suffix`.
    ///
    /// Each window is tested literally, so the prefix and suffix may overlap inside it.
    pub fn factors_of_form(&self, len: usize, prefix: &Word, suffix: &Word) -> BTreeSet<Word> {
        if len > self.len() {
            return BTreeSet::new();
        }
        self.symbols
            .windows(len)
            .filter(|w| w.starts_with(prefix.symbols()) && w.ends_with(suffix.symbols()))
            .map(|w| Word::from_raw(w.to_vec(), self.alphabet_size))
            .collect()
    }

    /// All words of length `n` over an alphabet, in lexicographic order.
    pub fn all_of_length(alphabet_size: u8, n: usize) -> impl Iterator<Item = Word> {
        let total = (alphabet_size as usize).pow(n as u32);
        (0..total).map(move |mut index| {
            let mut symbols = vec![0u8; n];
            for slot in symbols.iter_mut().rev() {
                *slot = (index % alphabet_size as usize) as u8;
                index /= alphabet_size as usize;
            }
            Word::from_raw(symbols, alphabet_size)
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.symbols.iter().map(|&s| (b'0' + s) as char).collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?}/{})", self.to_string(), self.alphabet_size)
    }
}

/// Infers the alphabet: binary unless the text contains a `2`.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alphabet_size = if s.contains('2') { 3 } else { 2 };
        Word::parse(s, alphabet_size)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Independent triple loop: does any (start, period) give three equal blocks?
    fn naive_has_cube(s: &[u8]) -> bool {
        let n = s.len();
        for start in 0..n {
            for p in 1..=(n - start) / 3 {
                let a = &s[start..start + p];
                let b = &s[start + p..start + 2 * p];
                let c = &s[start + 2 * p..start + 3 * p];
                if a == b && b == c {
                    return true;
                }
            }
        }
        false
    }

    fn naive_has_square(s: &[u8]) -> bool {
        let n = s.len();
        (0..n).any(|i| (1..=(n - i) / 2).any(|p| s[i..i + p] == s[i + p..i + 2 * p]))
    }

    fn naive_has_overlap(s: &[u8]) -> bool {
        let n = s.len();
        (0..n).any(|i| {
            (1..)
                .take_while(|p| i + 2 * p < n)
                .any(|p| s[i..i + p] == s[i + p..i + 2 * p] && s[i] == s[i + 2 * p])
        })
    }

    fn binary_words_up_to(n: usize) -> impl Iterator<Item = Word> {
        (0..=n).flat_map(|len| Word::all_of_length(2, len))
    }

    #[test]
    fn find_cube_examples() {
        let occ = w("000").find_cube().unwrap();
        assert_eq!((occ.start, occ.period), (0, 1));
        let occ = w("010101").find_cube().unwrap();
        assert_eq!((occ.start, occ.period), (0, 2));
        assert!(w("001001011").find_cube().is_none());
        assert!(Word::empty(2).is_cubefree());
    }

    #[test]
    fn find_cube_prefers_earliest_start_then_smallest_period() {
        // (01)^3 starts at 1, 000 starts at 7.
        let occ = w("1010101000").find_cube().unwrap();
        assert_eq!((occ.start, occ.period), (0, 2));
        let occ = w("110110110").find_cube().unwrap();
        assert_eq!((occ.start, occ.period), (0, 3));
        let occ = w("0111").find_cube().unwrap();
        assert_eq!((occ.start, occ.period), (1, 1));
    }

    #[test]
    fn square_and_overlap_examples() {
        assert!(w("010").is_squarefree());
        assert!(!w("0101").is_squarefree());
        assert!(w("0102010").is_squarefree());
        assert!(!naive_has_square(w("0102010").symbols()));

        assert!(w("0110100110010110").is_overlapfree());
        assert!(!w("01010").is_overlapfree());
        assert!(w("011010011001011").is_overlapfree());
        assert!(!naive_has_overlap(w("011010011001011").symbols()));
        let occ = w("01010").find_repetition(RepetitionKind::Overlap).unwrap();
        assert_eq!((occ.start, occ.period), (0, 2));
    }

    #[test]
    fn empty_word_is_free_of_everything() {
        let e = Word::empty(3);
        assert!(e.is_cubefree() && e.is_squarefree() && e.is_overlapfree());
    }

    #[test]
    fn cube_detection_agrees_with_naive_scan_up_to_14() {
        for word in binary_words_up_to(14) {
            let found = word.find_cube();
            assert_eq!(found.is_some(), naive_has_cube(word.symbols()), "{word}");
            if let Some(occ) = found {
                assert!(occ.holds_in(word.symbols()));
            }
        }
    }

    #[test]
    fn square_and_overlap_detection_agree_with_naive_scan() {
        for word in (0..=9).flat_map(|n| Word::all_of_length(3, n)) {
            assert_eq!(
                word.is_squarefree(),
                !naive_has_square(word.symbols()),
                "{word}"
            );
            assert_eq!(
                word.is_overlapfree(),
                !naive_has_overlap(word.symbols()),
                "{word}"
            );
        }
    }

    #[test]
    fn complement_is_an_involution_preserving_freeness() {
        for word in binary_words_up_to(12) {
            let c = word.complement().unwrap();
            assert_eq!(c.complement().unwrap(), word);
            assert_eq!(c.is_cubefree(), word.is_cubefree());
            assert_eq!(c.is_squarefree(), word.is_squarefree());
            assert_eq!(c.is_overlapfree(), word.is_overlapfree());
        }
    }

    #[test]
    fn repetition_implications() {
        for word in binary_words_up_to(12) {
            if !word.is_cubefree() {
                assert!(!word.is_squarefree(), "{word}");
            }
            if word.is_overlapfree() {
                assert!(word.is_cubefree(), "{word}");
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Word::empty(2).complement().unwrap(), Word::empty(2));
        assert_eq!(w("0110").complement().unwrap(), w("1001"));
        assert_eq!(w("012").complement(), Err(Error::NotBinary(3)));
    }

    #[test]
    fn strip_suffix_examples() {
        let image = w("010110010110011010");
        assert_eq!(image.strip_suffix(&w("010")).unwrap(), w("010110010110011"));
        assert_eq!(image.strip_suffix(&Word::empty(2)).unwrap(), image);
        assert!(matches!(
            w("0011").strip_suffix(&w("10")),
            Err(Error::NotASuffix { .. })
        ));
        assert_eq!(w("0110").strip_prefix(&w("01")).unwrap(), w("10"));
        assert!(w("0110").strip_prefix(&w("1")).is_err());
    }

    #[test]
    fn factors_of_form_windows() {
        let text = w("0010110");
        let found = text.factors_of_form(3, &w("0"), &w("1"));
        let expected: BTreeSet<Word> = [w("001"), w("011")].into_iter().collect();
        assert_eq!(found, expected);
        assert!(text.factors_of_form(8, &w("0"), &w("0")).is_empty());
        // prefix and suffix overlapping inside a length-2 window
        let found = text.factors_of_form(2, &w("01"), &w("1"));
        assert_eq!(found.into_iter().collect::<Vec<_>>(), vec![w("01")]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(Word::parse("0a1", 2), Err(Error::InvalidChar('a')));
        assert!(matches!(
            Word::parse("012", 2),
            Err(Error::SymbolOutOfRange {
                symbol: 2,
                index: 2,
                ..
            })
        ));
        assert_eq!(Word::parse("", 4), Err(Error::UnsupportedAlphabet(4)));
        assert_eq!(w("0120").alphabet_size(), 3);
    }

    #[test]
    fn occurrences_of_pattern() {
        assert_eq!(
            occurrences(w("10101").symbols(), w("101").symbols()),
            vec![0, 2]
        );
        assert!(occurrences(w("10").symbols(), w("101").symbols()).is_empty());
    }

    proptest::proptest! {
        #[test]
        fn strip_suffix_undoes_concat(a in "[01]{0,20}", b in "[01]{0,20}") {
            let a = Word::binary(&a).unwrap();
            let b = Word::binary(&b).unwrap();
            let joined = a.concat(&b).unwrap();
            proptest::prop_assert_eq!(joined.strip_suffix(&b).unwrap(), a.clone());
            proptest::prop_assert_eq!(joined.strip_prefix(&a).unwrap(), b);
        }

        #[test]
        fn text_round_trip(text in "[012]{0,30}") {
            let word: Word = text.parse().unwrap();
            proptest::prop_assert_eq!(word.to_string(), text);
        }
    }
}
