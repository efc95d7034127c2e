//! Plain-text and JSON renderings of library results, shared by the CLI.

use std::fmt::Write as _;

use serde::Serialize;

use crate::morphisms::Morphism;
use crate::search::SearchReport;
use crate::verification::Verdict;
use crate::witnesses::WitnessPair;
use crate::words::{Occurrence, RepetitionKind, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Plain => "plain",
            Format::Json => "json",
        }
    }
}

/// Anything the CLI can print.
pub trait Render: Serialize {
    fn plain(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Json => {
                let mut text = serde_json::to_string_pretty(self).expect("report serializes");
                text.push('\n');
                text
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BuildReport {
    pub width: usize,
    pub morphism: Morphism,
    pub keranen: Verdict,
}

impl Render for BuildReport {
    fn plain(&self) -> String {
        format!("{}\nverified: keranen {}\n", self.morphism, self.keranen)
    }

    /// The JSON form is the morphism file itself, so it can be fed back to `verify`.
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Json => self.morphism.to_file_json(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BruteResult {
    pub max_len: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub width: usize,
    pub keranen: Verdict,
    pub brute: Option<BruteResult>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn new(width: usize, keranen: Verdict, brute: Option<BruteResult>) -> Self {
        let passed = keranen.passed && brute.as_ref().is_none_or(|b| b.verdict.passed);
        VerifyReport {
            width,
            keranen,
            brute,
            passed,
        }
    }
}

impl Render for VerifyReport {
    fn plain(&self) -> String {
        let mut out = format!("width: {}\nkeranen: {}\n", self.width, self.keranen);
        if let Some(b) = &self.brute {
            let _ = writeln!(out, "brute({}): {}", b.max_len, b.verdict);
        }
        let _ = writeln!(out, "verified: {}", if self.passed { "yes" } else { "no" });
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub lemma: String,
    pub k: usize,
    pub pairs: Vec<WitnessPair>,
}

impl Render for WitnessReport {
    fn plain(&self) -> String {
        self.pairs
            .iter()
            .map(|p| format!("{}: {} {}\n", p.form, p.first, p.second))
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrefixReport {
    pub n: usize,
    pub prefix: Word,
}

impl Render for PrefixReport {
    fn plain(&self) -> String {
        format!("{}\n", self.prefix)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub word: Word,
    pub kind: RepetitionKind,
    pub occurrence: Option<Occurrence>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.occurrence.is_none()
    }
}

impl Render for CheckReport {
    fn plain(&self) -> String {
        match &self.occurrence {
            None => format!("{}free\n", self.kind),
            Some(occ) => format!("{} at {}\n", self.kind, occ),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpandReport {
    pub input: String,
    pub output: Word,
}

impl Render for ExpandReport {
    fn plain(&self) -> String {
        format!("{}\n", self.output)
    }
}

fn morphism_line(h: &Morphism) -> String {
    h.images()
        .iter()
        .enumerate()
        .map(|(a, w)| format!("{a} -> {w}"))
        .collect::<Vec<_>>()
        .join(", ")
}

impl Render for SearchReport {
    fn plain(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "search: {}", self.kind);
        let _ = writeln!(out, "width: {}", self.width);
        let _ = writeln!(out, "candidate space: {}", self.candidate_space);
        let _ = writeln!(out, "examined: {}", self.candidates_examined);
        let _ = writeln!(out, "canonical examined: {}", self.canonical_examined);
        let pruned: Vec<String> = self
            .pruned_by
            .iter()
            .map(|f| format!("{}={}", f.filter, f.pruned))
            .collect();
        let _ = writeln!(out, "pruned: {}", pruned.join(" "));
        let _ = writeln!(
            out,
            "found: {} (with orbits: {}){}",
            self.found.len(),
            self.found_with_orbits,
            if self.stopped_early {
                " [stopped at first]"
            } else {
                ""
            }
        );
        for h in &self.found {
            let _ = writeln!(out, "  {}", morphism_line(h));
        }
        out
    }
}

/// Header of the census CSV file.
pub const CSV_HEADER: &str = "width,examined,found,seconds";

/// One census CSV row.
pub fn csv_row(report: &SearchReport) -> String {
    format!(
        "{},{},{},{:.6}",
        report.width,
        report.candidates_examined,
        report.found.len(),
        report.wall_time.as_secs_f64()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_plain_output() {
        let report = CheckReport {
            word: Word::binary("000").unwrap(),
            kind: RepetitionKind::Cube,
            occurrence: Word::binary("000").unwrap().find_cube(),
        };
        assert_eq!(report.plain(), "cube at (0, 1)\n");
        assert!(!report.passed());
        let json: serde_json::Value = serde_json::from_str(&report.render(Format::Json)).unwrap();
        assert_eq!(json["occurrence"]["start"], 0);
        assert_eq!(json["occurrence"]["period"], 1);
        assert_eq!(json["word"], "000");
    }

    #[test]
    fn verify_report_pass_flag() {
        let fail = Verdict::fail(
            Word::binary("0").unwrap(),
            Word::binary("000").unwrap(),
            Word::binary("000").unwrap().find_cube().unwrap(),
        );
        assert!(VerifyReport::new(3, Verdict::pass(), None).passed);
        let r = VerifyReport::new(
            3,
            Verdict::pass(),
            Some(BruteResult {
                max_len: 5,
                verdict: fail,
            }),
        );
        assert!(!r.passed);
        assert!(r
            .plain()
            .contains("brute(5): fail: h(0) = 000 contains cube at (0, 1)"));
    }
}
