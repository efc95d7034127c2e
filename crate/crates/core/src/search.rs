//! Exhaustive searches over uniform morphisms of a fixed width.
//!
//! * overlap-free binary morphisms (found only at power-of-two widths),
//! * cubefree binary morphisms (found at every width),
//! * squarefree ternary morphisms.
//!
//! Each search enumerates image tuples in lexicographic order. Single-image
//! and pairwise filters run before the full test; every filter is implied by
//! the full test, so pruning never discards a morphism the full test would
//! accept. The space is split into blocks by the image of letter 0; blocks run
//! in parallel and are merged in block order, so results match a sequential run.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphisms::Morphism;
use crate::verification::{
    bs_overlap_check, enumerate_avoidant, keranen_check, squarefree_uniform_check,
};
use crate::words::{find_repetition, RepetitionKind, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchKind {
    Overlapfree,
    Squarefree3,
    CubefreeCensus,
}

impl SearchKind {
    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Overlapfree => "overlapfree",
            SearchKind::Squarefree3 => "squarefree3",
            SearchKind::CubefreeCensus => "cubefree-census",
        }
    }

    /// Default width budget `(min, max)`.
    pub fn budget(self) -> (usize, usize) {
        match self {
            SearchKind::Overlapfree => (1, 10),
            SearchKind::Squarefree3 => (2, 12),
            SearchKind::CubefreeCensus => (1, 7),
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "overlapfree" => Ok(SearchKind::Overlapfree),
            "squarefree3" => Ok(SearchKind::Squarefree3),
            "cubefree-census" => Ok(SearchKind::CubefreeCensus),
            other => Err(format!("unknown search kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop after the first (lexicographically smallest) find.
    pub stop_at_first: bool,
    /// Lift the maximum-width guard.
    pub allow_over_budget: bool,
}

/// Number of full tuples removed by one filter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterCount {
    pub filter: &'static str,
    pub pruned: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub kind: SearchKind,
    pub width: usize,
    /// All image tuples over the alphabet, `a^(a * width)`.
    pub candidate_space: u128,
    /// Tuples enumerated from the candidate image set, before symmetry reduction.
    pub candidates_examined: u64,
    /// Tuples left after keeping one representative per symmetry orbit.
    pub canonical_examined: u64,
    /// Morphisms passing the full test (canonical representatives for the ternary search).
    pub found: Vec<Morphism>,
    /// Number of morphisms represented by `found`, counting whole orbits.
    pub found_with_orbits: u64,
    pub pruned_by: Vec<FilterCount>,
    pub stopped_early: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl PartialEq for SearchReport {
    /// Equality ignores wall time.
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.width == other.width
            && self.candidate_space == other.candidate_space
            && self.candidates_examined == other.candidates_examined
            && self.canonical_examined == other.canonical_examined
            && self.found == other.found
            && self.found_with_orbits == other.found_with_orbits
            && self.pruned_by == other.pruned_by
            && self.stopped_early == other.stopped_early
    }
}

fn check_budget(kind: SearchKind, width: usize, options: SearchOptions) -> Result<()> {
    let (min, max) = kind.budget();
    if width < min || (width > max && !options.allow_over_budget) {
        return Err(Error::OverBudget { width, min, max });
    }
    Ok(())
}

fn is_free(symbols: &[u8], kind: RepetitionKind) -> bool {
    find_repetition(symbols, kind).is_none()
}

fn joined(a: &Word, b: &Word) -> Vec<u8> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a.symbols());
    v.extend_from_slice(b.symbols());
    v
}

/// Per-block tallies, merged in block order.
#[derive(Default)]
struct BlockResult {
    examined: u64,
    pruned: Vec<u64>,
    found: Vec<Morphism>,
}

/// Shared driver for the two binary searches.
///
/// Images must satisfy `h(a)` and `h(a)h(a)` free of `kind`; pairs must have
/// `h(0)h(1)` and `h(1)h(0)` free; survivors go through `full`.
fn binary_search(
    search: SearchKind,
    width: usize,
    kind: RepetitionKind,
    options: SearchOptions,
    full: impl Fn(&Morphism) -> bool + Sync,
) -> Result<SearchReport> {
    check_budget(search, width, options)?;
    let started = Instant::now();
    let all: Vec<Word> = Word::all_of_length(2, width).collect();
    let images: Vec<Word> = all
        .iter()
        .filter(|w| is_free(w.symbols(), kind) && is_free(&joined(w, w), kind))
        .cloned()
        .collect();
    let raw = (all.len() as u64).pow(2);
    let surviving = (images.len() as u64).pow(2);

    let blocks: Vec<BlockResult> = images
        .par_iter()
        .map(|h0| {
            let mut block = BlockResult {
                pruned: vec![0, 0],
                ..Default::default()
            };
            for h1 in &images {
                block.examined += 1;
                if !is_free(&joined(h0, h1), kind) || !is_free(&joined(h1, h0), kind) {
                    block.pruned[0] += 1;
                    continue;
                }
                let h = Morphism::new(vec![h0.clone(), h1.clone()], 2).expect("uniform images");
                if full(&h) {
                    block.found.push(h);
                    if options.stop_at_first {
                        break;
                    }
                } else {
                    block.pruned[1] += 1;
                }
            }
            block
        })
        .collect();

    let (blocks, stopped_early) = truncate_at_first_find(blocks, options.stop_at_first);
    let mut pruned = [raw - surviving, 0, 0];
    let mut found = Vec::new();
    for block in blocks {
        pruned[1] += block.pruned[0];
        pruned[2] += block.pruned[1];
        found.extend(block.found);
    }
    let found_with_orbits = found.len() as u64;
    Ok(SearchReport {
        kind: search,
        width,
        candidate_space: 1u128 << (2 * width),
        candidates_examined: raw,
        canonical_examined: raw,
        found,
        found_with_orbits,
        pruned_by: vec![
            FilterCount {
                filter: "image",
                pruned: pruned[0],
            },
            FilterCount {
                filter: "pairwise",
                pruned: pruned[1],
            },
            FilterCount {
                filter: "full",
                pruned: pruned[2],
            },
        ],
        stopped_early,
        wall_time: started.elapsed(),
    })
}

/// Keeps blocks up to and including the first one with a find.
fn truncate_at_first_find(mut blocks: Vec<BlockResult>, stop: bool) -> (Vec<BlockResult>, bool) {
    if !stop {
        return (blocks, false);
    }
    match blocks.iter().position(|b| !b.found.is_empty()) {
        Some(i) => {
            blocks.truncate(i + 1);
            (blocks, true)
        }
        None => (blocks, false),
    }
}

/// All binary morphisms of `width` whose image of `01101001` is overlap-free.
pub fn search_overlapfree_uniform(width: usize) -> Result<SearchReport> {
    search_overlapfree_uniform_with(width, SearchOptions::default())
}

pub fn search_overlapfree_uniform_with(
    width: usize,
    options: SearchOptions,
) -> Result<SearchReport> {
    binary_search(
        SearchKind::Overlapfree,
        width,
        RepetitionKind::Overlap,
        options,
        |h| bs_overlap_check(h).map(|v| v.passed).unwrap_or(false),
    )
}

/// All binary morphisms of `width` passing the bounded cubefreeness check.
pub fn census_cubefree_uniform(width: usize) -> Result<SearchReport> {
    census_cubefree_uniform_with(width, SearchOptions::default())
}

pub fn census_cubefree_uniform_with(width: usize, options: SearchOptions) -> Result<SearchReport> {
    binary_search(
        SearchKind::CubefreeCensus,
        width,
        RepetitionKind::Cube,
        options,
        |h| keranen_check(h).map(|v| v.passed).unwrap_or(false),
    )
}

const PERMUTATIONS_3: [[u8; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Number of distinct morphisms `pi ∘ h` over the six letter renamings `pi`.
pub fn renaming_orbit_size(h: &Morphism) -> u64 {
    let mut orbit: Vec<Vec<Vec<u8>>> = PERMUTATIONS_3
        .iter()
        .map(|pi| {
            h.images()
                .iter()
                .map(|w| w.symbols().iter().map(|&s| pi[s as usize]).collect())
                .collect()
        })
        .collect();
    orbit.sort();
    orbit.dedup();
    orbit.len() as u64
}

/// Squarefree ternary morphisms of `width`, one per renaming orbit.
///
/// Images range over squarefree ternary words. Since renaming the letters of
/// all images preserves squarefreeness, only tuples whose `h(0)` starts with
/// `01` (the lexicographically least member of each orbit) are tested.
pub fn search_squarefree_ternary_uniform(
    width: usize,
    stop_at_first: bool,
) -> Result<SearchReport> {
    search_squarefree_ternary_uniform_with(
        width,
        SearchOptions {
            stop_at_first,
            allow_over_budget: false,
        },
    )
}

pub fn search_squarefree_ternary_uniform_with(
    width: usize,
    options: SearchOptions,
) -> Result<SearchReport> {
    check_budget(SearchKind::Squarefree3, width, options)?;
    let started = Instant::now();
    let images = enumerate_avoidant(3, width, RepetitionKind::Square);
    let canonical_first: Vec<&Word> = images
        .iter()
        .filter(|w| w.symbols().starts_with(&[0, 1]))
        .collect();
    let n = images.len() as u64;
    let square = RepetitionKind::Square;

    let blocks: Vec<BlockResult> = canonical_first
        .par_iter()
        .map(|h0| {
            let mut block = BlockResult {
                pruned: vec![0, 0],
                ..Default::default()
            };
            'outer: for h1 in &images {
                if !is_free(&joined(h0, h1), square) || !is_free(&joined(h1, h0), square) {
                    block.examined += n;
                    block.pruned[0] += n;
                    continue;
                }
                for h2 in &images {
                    block.examined += 1;
                    let pairs_ok = [(*h0, h2), (h2, *h0), (h1, h2), (h2, h1)]
                        .iter()
                        .all(|(a, b)| is_free(&joined(a, b), square));
                    if !pairs_ok {
                        block.pruned[0] += 1;
                        continue;
                    }
                    let h = Morphism::new(vec![(*h0).clone(), h1.clone(), h2.clone()], 3)
                        .expect("uniform images");
                    if squarefree_uniform_check(&h)
                        .map(|v| v.passed)
                        .unwrap_or(false)
                    {
                        block.found.push(h);
                        if options.stop_at_first {
                            break 'outer;
                        }
                    } else {
                        block.pruned[1] += 1;
                    }
                }
            }
            block
        })
        .collect();

    let (blocks, stopped_early) = truncate_at_first_find(blocks, options.stop_at_first);
    let mut pruned = [0u64, 0];
    let mut canonical_examined = 0;
    let mut found = Vec::new();
    for block in blocks {
        canonical_examined += block.examined;
        pruned[0] += block.pruned[0];
        pruned[1] += block.pruned[1];
        found.extend(block.found);
    }
    let found_with_orbits = found.iter().map(renaming_orbit_size).sum();
    Ok(SearchReport {
        kind: SearchKind::Squarefree3,
        width,
        candidate_space: 3u128.pow(3 * width as u32),
        candidates_examined: n.pow(3),
        canonical_examined,
        found,
        found_with_orbits,
        pruned_by: vec![
            FilterCount {
                filter: "pairwise",
                pruned: pruned[0],
            },
            FilterCount {
                filter: "length3",
                pruned: pruned[1],
            },
        ],
        stopped_early,
        wall_time: started.elapsed(),
    })
}

/// Dispatches on `kind`.
pub fn run_search(kind: SearchKind, width: usize, options: SearchOptions) -> Result<SearchReport> {
    match kind {
        SearchKind::Overlapfree => search_overlapfree_uniform_with(width, options),
        SearchKind::Squarefree3 => search_squarefree_ternary_uniform_with(width, options),
        SearchKind::CubefreeCensus => census_cubefree_uniform_with(width, options),
    }
}
