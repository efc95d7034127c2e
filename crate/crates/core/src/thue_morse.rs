//! The Thue–Morse morphism 0 → 01, 1 → 10 and prefixes of its fixed point.

use crate::error::{Error, Result};
use crate::words::Word;

fn require_binary(w: &Word) -> Result<()> {
    if w.is_binary() {
        Ok(())
    } else {
        Err(Error::NotBinary(w.alphabet_size()))
    }
}

fn theta_symbols(symbols: &[u8]) -> Vec<u8> {
    symbols.iter().flat_map(|&s| [s, 1 - s]).collect()
}

/// Letter-wise substitution 0 → 01, 1 → 10.
pub fn theta(w: &Word) -> Result<Word> {
    require_binary(w)?;
    Ok(Word::from_raw(theta_symbols(w.symbols()), 2))
}

/// `a` applications of [`theta`]; `theta_power(0, w) == w`.
pub fn theta_power(a: u32, w: &Word) -> Result<Word> {
    require_binary(w)?;
    let mut symbols = w.symbols().to_vec();
    for _ in 0..a {
        symbols = theta_symbols(&symbols);
    }
    Ok(Word::from_raw(symbols, 2))
}

/// Prefix of length `n` obtained by iterating the morphism on `0`.
pub fn tm_prefix_by_iteration(n: usize) -> Word {
    let mut symbols = vec![0u8];
    while symbols.len() < n {
        symbols = theta_symbols(&symbols);
    }
    symbols.truncate(n);
    Word::from_raw(symbols, 2)
}

/// Prefix of length `n` from the rule `t[i] = popcount(i) mod 2`.
pub fn tm_prefix_by_parity(n: usize) -> Word {
    let symbols = (0..n).map(|i| (i.count_ones() & 1) as u8).collect();
    Word::from_raw(symbols, 2)
}

/// The length-`n` prefix of the Thue–Morse word.
///
/// Both constructions are computed and must agree.
pub fn tm_prefix(n: usize) -> Word {
    let iterated = tm_prefix_by_iteration(n);
    let parity = tm_prefix_by_parity(n);
    assert_eq!(
        iterated, parity,
        "Thue–Morse constructions disagree at length {n}"
    );
    iterated
}

/// Length of the prefix searched by [`tm_contains`] for a factor of length `len`.
pub fn search_window(len: usize) -> usize {
    10 * len + 64
}

/// Whether `f` is a factor of the Thue–Morse word.
///
/// Searches the prefix of length `10|f| + 64`; every factor of that length
/// recurs within this window.
pub fn tm_contains(f: &Word) -> Result<bool> {
    require_binary(f)?;
    Ok(tm_prefix(search_window(f.len())).contains_factor(f))
}
