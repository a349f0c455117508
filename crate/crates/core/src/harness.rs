//! Verification reports behind the command-line tool.
//!
//! Work is spread over the rayon pool keyed by `n` (or by query tuple), and
//! results are collected in key order, so the printed reports never depend on
//! scheduling.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bijection::{trace, try_phi, try_phi_inverse, Trace};
use crate::enumerate::{
    count_schmidt, count_two_color, enumerate_schmidt, enumerate_schmidt_refined_literal,
    enumerate_two_color, enumerate_two_color_refined, RefinedQuery,
};
use crate::error::BijectionError;
use crate::partition::{Partition, TwoColorPartition};
use crate::series::two_color_coefficients;

/// Round trips are run for every n up to this value unless told otherwise.
pub const DEFAULT_ROUNDTRIP_CUTOFF: u64 = 12;

fn decimal<T: std::fmt::Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// Report output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One row of the count comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub n: u64,
    #[serde(serialize_with = "decimal")]
    pub s_count: BigUint,
    #[serde(serialize_with = "decimal")]
    pub t_count: BigUint,
    #[serde(serialize_with = "decimal")]
    pub series_count: BigInt,
    /// Objects pushed through a round trip (both directions); 0 above the cutoff.
    pub round_trip_checked: u64,
    pub pass: bool,
    /// First object that broke a round trip.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub records: Vec<VerifyRecord>,
    pub pass: bool,
}

/// Checks λ → φ(λ) → φ⁻¹(φ(λ)) for every λ of weight n and γ → φ⁻¹(γ) → φ(φ⁻¹(γ))
/// for every γ of alternating sum n. Returns the number of objects checked or
/// the first failure.
pub fn round_trips(n: u64) -> Result<u64, String> {
    let mut checked = 0;
    for lambda in enumerate_two_color(n) {
        let describe = |e: BijectionError| format!("phi on {lambda}: {e}");
        let gamma = try_phi(&lambda).map_err(describe)?;
        if gamma.alternating_sum() != n {
            return Err(format!(
                "phi({lambda}) = {gamma} has alternating sum {}",
                gamma.alternating_sum()
            ));
        }
        let back = try_phi_inverse(&gamma).map_err(|e| format!("phi_inverse on {gamma}: {e}"))?;
        if back != lambda {
            return Err(format!("phi_inverse(phi({lambda})) = {back}"));
        }
        checked += 1;
    }
    for gamma in enumerate_schmidt(n) {
        let lambda = try_phi_inverse(&gamma).map_err(|e| format!("phi_inverse on {gamma}: {e}"))?;
        if lambda.weight() != n {
            return Err(format!(
                "phi_inverse({gamma}) = {lambda} has weight {}",
                lambda.weight()
            ));
        }
        let back = try_phi(&lambda).map_err(|e| format!("phi on {lambda}: {e}"))?;
        if back != gamma {
            return Err(format!("phi(phi_inverse({gamma})) = {back}"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Compares s(n), t(n) and the series coefficient for 1 ≤ n ≤ `max_n`, with
/// exhaustive round trips for n ≤ `roundtrip_cutoff`.
pub fn verify(max_n: u64, roundtrip_cutoff: u64) -> VerifyReport {
    let series = two_color_coefficients(max_n as usize);
    let records: Vec<VerifyRecord> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let s_count = count_schmidt(n);
            let t_count = count_two_color(n);
            let series_count = series[n as usize].clone();
            let (round_trip_checked, witness) = if n <= roundtrip_cutoff {
                match round_trips(n) {
                    Ok(c) => (c, None),
                    Err(w) => (0, Some(w)),
                }
            } else {
                (0, None)
            };
            let counts_agree = s_count == t_count && BigInt::from(t_count.clone()) == series_count;
            let witness = witness.or_else(|| {
                (!counts_agree)
                    .then(|| format!("n={n}: s={s_count}, t={t_count}, series={series_count}"))
            });
            VerifyRecord {
                n,
                s_count,
                t_count,
                series_count,
                round_trip_checked,
                pass: witness.is_none(),
                witness,
            }
        })
        .collect();
    let pass = records.iter().all(|r| r.pass);
    VerifyReport { records, pass }
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&VerifyRecord> {
        self.records.iter().find(|r| !r.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => to_json(self),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:>4} {:>12} {:>12} {:>12} {:>11}  pass",
            "n", "s(n)", "t(n)", "series", "roundtrips"
        )
        .unwrap();
        for r in &self.records {
            writeln!(
                out,
                "{:>4} {:>12} {:>12} {:>12} {:>11}  {}",
                r.n,
                r.s_count,
                r.t_count,
                r.series_count,
                r.round_trip_checked,
                if r.pass { "ok" } else { "FAIL" }
            )
            .unwrap();
        }
        match self.first_failure() {
            None => writeln!(out, "PASS").unwrap(),
            Some(r) => writeln!(out, "FAIL: {}", r.witness.as_deref().unwrap_or("")).unwrap(),
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,s,t,series,pass\n");
        for r in &self.records {
            writeln!(
                out,
                "{},{},{},{},{}",
                r.n, r.s_count, r.t_count, r.series_count, r.pass
            )
            .unwrap();
        }
        out
    }
}

/// One cell of the refinement grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinedRecord {
    pub n: u64,
    pub r: usize,
    pub l: usize,
    pub p: u64,
    pub q: u64,
    /// Two-color partitions with these statistics.
    pub t_refined: u64,
    /// Fixed-length bounded vectors, reading the statement literally.
    pub s_literal: u64,
    /// Partitions γ of alternating sum n whose preimage φ⁻¹(γ) has these statistics.
    pub transported_count: u64,
    pub literal_match: bool,
    pub transported_match: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinedReport {
    pub records: Vec<RefinedRecord>,
    /// All transported counts agree.
    pub pass: bool,
}

/// Upper corners of the refinement grid; every coordinate starts at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefinedGrid {
    pub max_n: u64,
    pub max_r: usize,
    pub max_l: usize,
    pub max_p: u64,
    pub max_q: u64,
}

impl RefinedGrid {
    pub fn queries(&self) -> Vec<RefinedQuery> {
        let mut out = Vec::new();
        for n in 1..=self.max_n {
            for r in 1..=self.max_r {
                for l in 1..=self.max_l {
                    for p in 1..=self.max_p {
                        for q in 1..=self.max_q {
                            out.push(RefinedQuery { n, r, l, p, q });
                        }
                    }
                }
            }
        }
        out
    }
}

/// Evaluates one query given the φ-preimages of every γ with alternating sum n.
pub fn refined_record(rq: &RefinedQuery, preimages: &[TwoColorPartition]) -> RefinedRecord {
    let t_refined = enumerate_two_color_refined(rq).len() as u64;
    let s_literal = enumerate_schmidt_refined_literal(rq).len() as u64;
    let transported_count = preimages.iter().filter(|l| rq.matches(l)).count() as u64;
    RefinedRecord {
        n: rq.n,
        r: rq.r,
        l: rq.l,
        p: rq.p,
        q: rq.q,
        t_refined,
        s_literal,
        transported_count,
        literal_match: s_literal == t_refined,
        transported_match: transported_count == t_refined,
    }
}

/// φ⁻¹ of every partition with alternating sum n.
pub fn schmidt_preimages(n: u64) -> Vec<TwoColorPartition> {
    enumerate_schmidt(n)
        .iter()
        .map(|g| try_phi_inverse(g).unwrap_or_else(|e| panic!("phi_inverse failed on {g}: {e}")))
        .collect()
}

pub fn refined(grid: &RefinedGrid) -> RefinedReport {
    let preimages: Vec<Vec<TwoColorPartition>> = (0..=grid.max_n)
        .into_par_iter()
        .map(schmidt_preimages)
        .collect();
    let records: Vec<RefinedRecord> = grid
        .queries()
        .par_iter()
        .map(|rq| refined_record(rq, &preimages[rq.n as usize]))
        .collect();
    let pass = records.iter().all(|r| r.transported_match);
    RefinedReport { records, pass }
}

impl RefinedReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => to_json(self),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:>3} {:>2} {:>2} {:>2} {:>2} {:>9} {:>9} {:>11}  literal  transported",
            "n", "r", "l", "p", "q", "t_refined", "s_literal", "transported"
        )
        .unwrap();
        for r in &self.records {
            writeln!(
                out,
                "{:>3} {:>2} {:>2} {:>2} {:>2} {:>9} {:>9} {:>11}  {:<7}  {}",
                r.n,
                r.r,
                r.l,
                r.p,
                r.q,
                r.t_refined,
                r.s_literal,
                r.transported_count,
                if r.literal_match { "match" } else { "differ" },
                if r.transported_match { "ok" } else { "FAIL" }
            )
            .unwrap();
        }
        let literal = self.records.iter().filter(|r| r.literal_match).count();
        writeln!(
            out,
            "literal reading agrees on {literal} of {} queries",
            self.records.len()
        )
        .unwrap();
        writeln!(out, "{}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,r,l,p,q,t_refined,s_literal,transported,literal_match\n");
        for r in &self.records {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.n,
                r.r,
                r.l,
                r.p,
                r.q,
                r.t_refined,
                r.s_literal,
                r.transported_count,
                r.literal_match
            )
            .unwrap();
        }
        out
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Every (λ, φ(λ)) with |λ| = n in listing order.
pub fn table(n: u64) -> Vec<(TwoColorPartition, Partition)> {
    if n == 0 {
        return Vec::new();
    }
    enumerate_two_color(n)
        .into_iter()
        .map(|lambda| {
            let gamma = try_phi(&lambda).unwrap_or_else(|e| panic!("phi failed on {lambda}: {e}"));
            (lambda, gamma)
        })
        .collect()
}

/// One `λ <-> γ` line per pair.
pub fn format_table(rows: &[(TwoColorPartition, Partition)]) -> String {
    rows.iter()
        .map(|(lambda, gamma)| format!("{lambda} <-> {gamma}\n"))
        .collect()
}

/// Human-readable dump of every intermediate of φ.
pub fn format_trace(t: &Trace) -> String {
    let mut out = String::new();
    let tuple = crate::partition::tuple;
    writeln!(out, "lambda     = {}", t.input).unwrap();
    writeln!(out, "red        = {}", t.input.red.tuple()).unwrap();
    writeln!(out, "green      = {}", t.input.green.tuple()).unwrap();
    writeln!(out, "m          = {}", t.padded.m()).unwrap();
    writeln!(out, "a (padded) = {}", tuple(t.padded.a())).unwrap();
    writeln!(out, "b (padded) = {}", tuple(t.padded.b())).unwrap();
    writeln!(out, "alpha_bar  = {}", tuple(t.distinct.alpha_bar())).unwrap();
    writeln!(out, "beta_bar   = {}", tuple(t.distinct.beta_bar())).unwrap();
    writeln!(out, "shape      = {}", t.shape.rows().tuple()).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "Young diagram (o = diagonal):").unwrap();
    out.push_str(&t.shape.render_diagram());
    writeln!(out).unwrap();
    writeln!(out, "2-modular diagram:").unwrap();
    out.push_str(&t.shape.render_two_modular());
    writeln!(out).unwrap();
    writeln!(out, "mu         = {}", t.mu).unwrap();
    writeln!(out, "gamma      = {}", t.gamma).unwrap();
    out
}

/// Renders the full pipeline; the empty input has no intermediates.
pub fn render(lambda: &TwoColorPartition) -> String {
    if lambda.is_empty() {
        return "lambda     = 0\ngamma      = 0\n".to_string();
    }
    let t = trace(lambda).unwrap_or_else(|e| panic!("phi failed on {lambda}: {e}"));
    format_trace(&t)
}
