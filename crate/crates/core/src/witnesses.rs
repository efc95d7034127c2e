//! Pairs of distinct boundary-constrained words: factors of the Thue–Morse
//! word of the forms `0y0`, `0z1`, `01x01`, `01x10`, and cubefree words of the
//! form `00x11`.
//!
//! Small lengths come from fixed tables. Longer lengths are built recursively
//! from shorter pairs through the Thue–Morse morphism. Every pair returned is
//! re-validated before it leaves this module.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::thue_morse::{search_window, theta, theta_power, tm_contains, tm_prefix};
use crate::words::Word;

/// Literal prefix/suffix pattern a witness must match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Form {
    /// `0y0`
    ZeroYZero,
    /// `0z1`
    ZeroZOne,
    /// `01x01`
    ZeroOneXZeroOne,
    /// `01x10`
    ZeroOneXOneZero,
    /// `00x11`
    ZeroZeroXOneOne,
}

impl Form {
    pub fn prefix(self) -> &'static str {
        match self {
            Form::ZeroYZero | Form::ZeroZOne => "0",
            Form::ZeroOneXZeroOne | Form::ZeroOneXOneZero => "01",
            Form::ZeroZeroXOneOne => "00",
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Form::ZeroYZero => "0",
            Form::ZeroZOne => "1",
            Form::ZeroOneXZeroOne => "01",
            Form::ZeroOneXOneZero => "10",
            Form::ZeroZeroXOneOne => "11",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Form::ZeroYZero => "0y0",
            Form::ZeroZOne => "0z1",
            Form::ZeroOneXZeroOne => "01x01",
            Form::ZeroOneXOneZero => "01x10",
            Form::ZeroZeroXOneOne => "00x11",
        }
    }

    pub fn matches(self, w: &Word) -> bool {
        let text = w.to_string();
        w.is_binary() && text.starts_with(self.prefix()) && text.ends_with(self.suffix())
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Two distinct words of a common length, both of the declared form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub first: Word,
    pub second: Word,
    pub form: Form,
    pub length: usize,
}

impl WitnessPair {
    /// Builds a pair after checking distinctness, lengths and form.
    pub fn new(first: Word, second: Word, form: Form) -> Result<Self> {
        let length = first.len();
        if first == second {
            return Err(Error::Witness(format!(
                "{form} pair is not distinct: {first}"
            )));
        }
        if second.len() != length {
            return Err(Error::Witness(format!(
                "{form} pair has unequal lengths: {first}, {second}"
            )));
        }
        for w in [&first, &second] {
            if !form.matches(w) {
                return Err(Error::Witness(format!("{w} is not of the form {form}")));
            }
        }
        Ok(WitnessPair {
            first,
            second,
            form,
            length,
        })
    }

    fn from_text(first: &str, second: &str, form: Form) -> Self {
        let parse = |s: &str| Word::binary(s).expect("table entries are binary");
        WitnessPair::new(parse(first), parse(second), form).expect("table entries are valid")
    }

    pub fn words(&self) -> [&Word; 2] {
        [&self.first, &self.second]
    }

    /// Applies `f` to both words and re-checks the result against `form`.
    fn map(&self, form: Form, f: impl Fn(&Word) -> Result<Word>) -> Result<Self> {
        WitnessPair::new(f(&self.first)?, f(&self.second)?, form)
    }

    fn require_in_thue_morse(self) -> Result<Self> {
        for w in self.words() {
            if !tm_contains(w)? {
                return Err(Error::Witness(format!(
                    "{w} is not a factor of the Thue–Morse word"
                )));
            }
        }
        Ok(self)
    }

    fn require_cubefree(self) -> Result<Self> {
        for w in self.words() {
            if let Some(occ) = w.find_cube() {
                return Err(Error::Witness(format!("{w} contains a cube at {occ}")));
            }
        }
        Ok(self)
    }
}

const MAX_DEPTH: usize = 64;

fn drop_last(w: &Word) -> Result<Word> {
    Ok(w.prefix(w.len() - 1))
}

/// Two `0y0` factors and two `0z1` factors of the Thue–Morse word, each of length `k >= 4`.
pub fn lemma1_witnesses(k: usize) -> Result<(WitnessPair, WitnessPair)> {
    if k < 4 {
        return Err(Error::LengthTooSmall {
            lemma: "lemma1",
            min: 4,
            k,
        });
    }
    let (y, z) = lemma1_rec(k, 0)?;
    Ok((y.require_in_thue_morse()?, z.require_in_thue_morse()?))
}

fn lemma1_rec(k: usize, depth: usize) -> Result<(WitnessPair, WitnessPair)> {
    if depth > MAX_DEPTH {
        return Err(Error::Witness(format!(
            "recursion depth exceeded at k = {k}"
        )));
    }
    use Form::{ZeroYZero as Y, ZeroZOne as Z};
    match k {
        4 => Ok((
            WitnessPair::from_text("0010", "0100", Y),
            WitnessPair::from_text("0101", "0011", Z),
        )),
        5 => Ok((
            WitnessPair::from_text("00110", "01100", Y),
            WitnessPair::from_text("01101", "01001", Z),
        )),
        6 => Ok((
            WitnessPair::from_text("001100", "011010", Y),
            WitnessPair::from_text("001011", "010011", Z),
        )),
        _ if k.is_multiple_of(2) => {
            // theta(0y0) = 01 theta(y) 01 has form 0z1; theta(0z1) = 01 theta(z) 10 has form 0y0.
            let (y, z) = lemma1_rec(k / 2, depth + 1)?;
            Ok((z.map(Y, theta)?, y.map(Z, theta)?))
        }
        _ => {
            // 01 theta(y) 0 and 01 theta(z) 1.
            let (y, z) = lemma1_rec(k.div_ceil(2), depth + 1)?;
            let cut = |w: &Word| drop_last(&theta(w)?);
            Ok((y.map(Y, cut)?, z.map(Z, cut)?))
        }
    }
}

const LEMMA2_TABLE: [(usize, &str, &str); 8] = [
    (7, "0100101", "0101101"),
    (9, "010011001", "011001101"),
    (11, "01001100101", "01100101101"),
    (13, "0100101101001", "0110100101101"),
    (15, "011001011001101", "010011001011001"),
    (17, "01001011001101001", "01101001011001101"),
    (19, "0100101100110100101", "0101101001100101101"),
    (21, "011010011001011001101", "011001101001100101101"),
];

/// The two lexicographically smallest distinct factors of the given form found in a Thue–Morse prefix.
pub fn search_thue_morse_pair(k: usize, form: Form) -> Result<WitnessPair> {
    let text = tm_prefix(search_window(k));
    let found = text.factors_of_form(
        k,
        &Word::binary(form.prefix())?,
        &Word::binary(form.suffix())?,
    );
    let mut it = found.into_iter();
    match (it.next(), it.next()) {
        (Some(a), Some(b)) => WitnessPair::new(a, b, form),
        _ => Err(Error::Witness(format!(
            "fewer than two {form} factors of length {k} in the Thue–Morse prefix"
        ))),
    }
}

/// Window of `theta^3(w)`, `|w| = r`, from the `01` at index 3 up to the pair
/// of letters starting at offset `tail` inside the final block `theta^3(last letter)`.
fn cube_image_window(w: &Word, tail: usize) -> Result<Word> {
    let image = theta_power(3, w)?;
    let end = image.len() - 8 + tail + 2;
    Ok(image.factor(3..end))
}

/// Odd `k >= 23`: windows cut out of `theta^3` images of length-`r` lemma-1 witnesses.
fn lemma2_odd_large(k: usize) -> Result<(WitnessPair, WitnessPair)> {
    // k + c is divisible by 8 for exactly one c in {9, 7, 5, 3}.
    let c = [9, 7, 5, 3]
        .into_iter()
        .find(|c| (k + c).is_multiple_of(8))
        .expect("k is odd");
    let r = (k + c) / 8;
    let (y, z) = lemma1_witnesses(r)?;
    // theta^3(0) = 01101001 has 01 at offsets 0, 3, 6 and 10 at offsets 2, 4;
    // theta^3(1) = 10010110 has 01 at offsets 2, 4 and 10 at offsets 0, 6.
    // A window ending at offset j of the last block has length 8r - 9 + j, so j = 9 - c.
    let tail = 9 - c;
    let (x01_source, x10_source) = match c {
        9 | 3 => (&y, &z),
        _ => (&z, &y),
    };
    let x01 = x01_source.map(Form::ZeroOneXZeroOne, |w| cube_image_window(w, tail))?;
    let x10 = x10_source.map(Form::ZeroOneXOneZero, |w| cube_image_window(w, tail))?;
    Ok((x01, x10))
}

/// Two `01x01` and two `01x10` factors of the Thue–Morse word, each of length `k >= 7`.
pub fn lemma2_witnesses(k: usize) -> Result<(WitnessPair, WitnessPair)> {
    if k < 7 {
        return Err(Error::LengthTooSmall {
            lemma: "lemma2",
            min: 7,
            k,
        });
    }
    let (x01, x10) = if k.is_multiple_of(2) {
        let (y, z) = lemma1_witnesses(k / 2)?;
        (
            y.map(Form::ZeroOneXZeroOne, theta)?,
            z.map(Form::ZeroOneXOneZero, theta)?,
        )
    } else if k <= 21 {
        let (_, first, second) = LEMMA2_TABLE
            .iter()
            .find(|(len, _, _)| *len == k)
            .expect("table covers odd 7..=21");
        (
            WitnessPair::from_text(first, second, Form::ZeroOneXZeroOne),
            search_thue_morse_pair(k, Form::ZeroOneXOneZero)?,
        )
    } else {
        lemma2_odd_large(k)?
    };
    if x01.length != k || x10.length != k {
        return Err(Error::Witness(format!(
            "lemma2 produced wrong length for k = {k}"
        )));
    }
    Ok((x01.require_in_thue_morse()?, x10.require_in_thue_morse()?))
}

const LEMMA3_TABLE: [(usize, &str, &str); 6] = [
    (9, "001001011", "001010011"),
    (10, "0010011011", "0010110011"),
    (11, "00100110011", "00101001011"),
    (12, "001001010011", "001001011011"),
    (13, "0010010110011", "0010011001011"),
    (14, "00100101001011", "00100101101011"),
];

/// Two distinct cubefree words of the form `00x11` of length `k >= 9`.
pub fn lemma3_witnesses(k: usize) -> Result<WitnessPair> {
    if k < 9 {
        return Err(Error::LengthTooSmall {
            lemma: "lemma3",
            min: 9,
            k,
        });
    }
    let pair = if k <= 14 {
        let (_, first, second) = LEMMA3_TABLE
            .iter()
            .find(|(len, _, _)| *len == k)
            .expect("table covers 9..=14");
        WitnessPair::from_text(first, second, Form::ZeroZeroXOneOne)
    } else {
        let zero = Word::binary("0")?;
        let one = Word::binary("1")?;
        if k.is_multiple_of(2) {
            // complement of 0^{-1} theta(01x10) 1^{-1} = 110 theta(x) 100
            let (_, x10) = lemma2_witnesses((k + 2) / 2)?;
            x10.map(Form::ZeroZeroXOneOne, |w| {
                theta(w)?
                    .strip_prefix(&zero)?
                    .strip_suffix(&one)?
                    .complement()
            })?
        } else {
            // complement of 11 theta(01x10) 1^{-1} = 110110 theta(x) 100
            let (_, x10) = lemma2_witnesses((k - 1) / 2)?;
            let eleven = Word::binary("11")?;
            x10.map(Form::ZeroZeroXOneOne, |w| {
                eleven.concat(&theta(w)?.strip_suffix(&one)?)?.complement()
            })?
        }
    };
    if pair.length != k {
        return Err(Error::Witness(format!(
            "lemma3 produced wrong length for k = {k}"
        )));
    }
    pair.require_cubefree()
}
