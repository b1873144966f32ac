//! Sweeps over finite families of diagrams that check bounds and identities
//! for `chi_D(1, ..., 1)` instance by instance.
//!
//! A sweep splits its family into shards by instance index modulo the worker
//! count, runs the shards independently and merges the partial reports.
//! Merging sorts violations by instance index, so the merged report does not
//! depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, Diagram, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, ParseError, Result};
use crate::pattern::PatternGrid;
use crate::perm::{Composition, Permutation};
use crate::poly::SparsePolynomial;
use crate::schubert::{key, macdonald_specialization, schubert};
use crate::weyl::{character_support, dual_character_with, CharacterOptions};

/// A finite, deterministically ordered family of diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramFamily {
    /// Every diagram in `[n] x [n]` with at most `max_boxes` boxes.
    AllDiagrams {
        n: usize,
        max_boxes: usize,
    },
    /// Rothe diagrams of all of `S_n`.
    AllRothe {
        n: usize,
    },
    /// Skyline diagrams of all compositions with `max_len` parts, each at most `max_part`.
    AllSkyline {
        max_part: usize,
        max_len: usize,
    },
    ExplicitList(Vec<Diagram>),
}

/// Where an instance came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Diagram,
    Permutation(Permutation),
    Composition(Composition),
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub index: usize,
    pub diagram: Diagram,
    pub source: Source,
}

impl Instance {
    fn label(&self) -> String {
        match &self.source {
            Source::Diagram => format!("#{}", self.index),
            Source::Permutation(w) => format!("w={w}"),
            Source::Composition(a) => format!("alpha=({a})"),
        }
    }
}

impl DiagramFamily {
    pub fn instances(&self) -> Vec<Instance> {
        match self {
            DiagramFamily::AllDiagrams { n, max_boxes } => all_diagrams(*n, *max_boxes)
                .into_iter()
                .enumerate()
                .map(|(index, diagram)| Instance { index, diagram, source: Source::Diagram })
                .collect(),
            DiagramFamily::AllRothe { n } => Permutation::all(*n)
                .into_iter()
                .enumerate()
                .map(|(index, w)| Instance { index, diagram: w.rothe(), source: Source::Permutation(w) })
                .collect(),
            DiagramFamily::AllSkyline { max_part, max_len } => Composition::all(*max_part, *max_len)
                .into_iter()
                .enumerate()
                .map(|(index, a)| Instance { index, diagram: a.skyline(), source: Source::Composition(a) })
                .collect(),
            DiagramFamily::ExplicitList(list) => list
                .iter()
                .cloned()
                .enumerate()
                .map(|(index, diagram)| Instance { index, diagram, source: Source::Diagram })
                .collect(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            DiagramFamily::AllDiagrams { n, max_boxes } => {
                format!("all-diagrams(n={n},max_boxes={max_boxes})")
            }
            DiagramFamily::AllRothe { n } => format!("rothe(n={n})"),
            DiagramFamily::AllSkyline { max_part, max_len } => {
                format!("skyline(max_part={max_part},max_len={max_len})")
            }
            DiagramFamily::ExplicitList(list) => format!("explicit({} diagrams)", list.len()),
        }
    }
}

impl FromStr for DiagramFamily {
    type Err = Error;

    /// `all:N:B`, `rothe:N`, `skyline:P:L`, or `@path` for a file of
    /// diagrams (a JSON array, or one inline diagram per line).
    fn from_str(text: &str) -> Result<Self> {
        if let Some(path) = text.strip_prefix('@') {
            let body = std::fs::read_to_string(path)
                .map_err(|source| Error::Io { path: path.to_string(), source })?;
            return parse_diagram_list(&body).map(DiagramFamily::ExplicitList);
        }
        let mut parts = text.split(':');
        let kind = parts.next().unwrap_or_default();
        let nums: Vec<usize> = parts
            .map(|t| t.parse().map_err(|_| ParseError::new(t, "expected a non-negative integer")))
            .collect::<Result<_, _>>()?;
        match (kind, nums.as_slice()) {
            ("all", &[n, max_boxes]) => Ok(DiagramFamily::AllDiagrams { n, max_boxes }),
            ("rothe", &[n]) => Ok(DiagramFamily::AllRothe { n }),
            ("skyline", &[max_part, max_len]) => Ok(DiagramFamily::AllSkyline { max_part, max_len }),
            _ => Err(ParseError::new(text, "expected all:N:B, rothe:N, skyline:P:L or @file").into()),
        }
    }
}

/// A JSON array of diagrams, or one inline diagram per line (`//` starts a
/// comment line).
pub fn parse_diagram_list(text: &str) -> Result<Vec<Diagram>> {
    if text.trim_start().starts_with('[') {
        return Ok(serde_json::from_str(text)?);
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with("//"))
        .map(Diagram::parse_inline)
        .collect()
}

/// Subsets of the `n x n` grid of size `0..=max_boxes`, by size and then
/// lexicographically in column-major cell order.
fn all_diagrams(n: usize, max_boxes: usize) -> Vec<Diagram> {
    let cells: Vec<Cell> = (1..=n).flat_map(|j| (1..=n).map(move |i| Cell::new(i, j))).collect();
    let mut out = Vec::new();
    for k in 0..=max_boxes.min(cells.len()) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(Diagram::from_cells(n, idx.iter().map(|&t| cells[t])).expect("grid cells fit"));
            // next k-combination of 0..cells.len()
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < cells.len() - k + p) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    /// A proven statement failed: the computation is wrong somewhere.
    Violation,
    /// A conjectured statement failed on this instance.
    CandidateCounterexample,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub instance: String,
    pub property: String,
    pub severity: Severity,
    pub diagram: Diagram,
    pub grid: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub family: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub truncated: bool,
    pub elapsed_s: f64,
    /// Named counters, e.g. how many instances attained equality.
    #[serde(default)]
    pub tallies: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn new(check: &str, family: &str) -> Self {
        VerificationReport {
            check: check.to_string(),
            family: family.to_string(),
            checked: 0,
            violations: Vec::new(),
            truncated: false,
            elapsed_s: 0.0,
            tallies: BTreeMap::new(),
        }
    }

    /// Combines two partial reports of the same sweep.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.checked += other.checked;
        self.truncated |= other.truncated;
        self.elapsed_s += other.elapsed_s;
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| (a.index, &a.property).cmp(&(b.index, &b.property)));
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        self
    }

    /// Violations of proven statements, excluding conjecture findings.
    pub fn hard_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.severity == Severity::Violation)
    }

    pub fn candidates(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.severity == Severity::CandidateCounterexample)
    }

    pub fn passed(&self) -> bool {
        self.hard_violations().next().is_none() && !self.truncated
    }

    pub fn tally(&self, key: &str) -> u64 {
        self.tallies.get(key).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// JSON with the timing zeroed, for comparing runs.
    pub fn to_canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_s = 0.0;
        copy.to_json()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hard = self.hard_violations().count();
        let cand = self.candidates().count();
        write!(
            f,
            "{} on {}: {} checked, {} violations, {} candidate counterexamples{} ({:.2}s)",
            self.check,
            self.family,
            self.checked,
            hard,
            cand,
            if self.truncated { ", TRUNCATED" } else { "" },
            self.elapsed_s
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    /// Per-instance cap on `#{C <= D}` for checks that enumerate the ideal.
    pub cap: u64,
    pub workers: usize,
    /// Largest `n` for which Schubert sweeps also compare against the full `chi`.
    pub full_character_max_n: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { cap: DEFAULT_ENUMERATION_CAP, workers: 1, full_character_max_n: 5 }
    }
}

impl SweepConfig {
    fn character_options(&self) -> CharacterOptions {
        CharacterOptions { cap: self.cap, parallel: false }
    }
}

/// What checking one instance produced.
#[derive(Default)]
pub struct Outcome {
    violations: Vec<Violation>,
    tallies: Vec<&'static str>,
}

impl Outcome {
    fn fail(
        &mut self,
        inst: &Instance,
        property: &str,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> &mut Violation {
        self.push(inst, property, Severity::Violation, lhs, rhs)
    }

    fn candidate(
        &mut self,
        inst: &Instance,
        property: &str,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> &mut Violation {
        self.push(inst, property, Severity::CandidateCounterexample, lhs, rhs)
    }

    fn push(
        &mut self,
        inst: &Instance,
        property: &str,
        severity: Severity,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> &mut Violation {
        self.violations.push(Violation {
            index: inst.index,
            instance: inst.label(),
            property: property.to_string(),
            severity,
            diagram: inst.diagram.clone(),
            grid: inst.diagram.to_grid(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness: None,
        });
        self.violations.last_mut().unwrap()
    }

    fn count(&mut self, key: &'static str) {
        self.tallies.push(key);
    }
}

type CheckFn<'a> = dyn Fn(&Instance, &mut Outcome) -> Result<()> + Sync + 'a;

fn run_shard(check: &str, family: &str, shard: &[&Instance], f: &CheckFn) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(check, family);
    for inst in shard {
        let mut out = Outcome::default();
        match f(inst, &mut out) {
            Ok(()) => {
                report.checked += 1;
                report.violations.extend(out.violations);
                for t in out.tallies {
                    *report.tallies.entry(t.to_string()).or_default() += 1;
                }
            }
            Err(Error::CapExceeded { .. }) => {
                report.truncated = true;
                *report.tallies.entry("skipped_over_cap".to_string()).or_default() += 1;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Runs `f` over `instances`, split into `workers` strided shards.
fn run_instances(
    check: &str,
    family: &str,
    instances: &[Instance],
    workers: usize,
    f: &CheckFn,
) -> Result<VerificationReport> {
    let workers = workers.max(1);
    let shards: Vec<Vec<&Instance>> =
        (0..workers).map(|s| instances.iter().filter(|i| i.index % workers == s).collect()).collect();
    let partials: Vec<Result<VerificationReport>> = if workers == 1 {
        shards.iter().map(|s| run_shard(check, family, s, f)).collect()
    } else {
        let pool =
            rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool construction");
        pool.install(|| shards.par_iter().map(|s| run_shard(check, family, s, f)).collect())
    };
    let mut merged = VerificationReport::new(check, family);
    for p in partials {
        merged = merged.merge(p?);
    }
    merged.elapsed_s = 0.0;
    Ok(merged)
}

fn sweep(check: &str, family: &DiagramFamily, cfg: &SweepConfig, f: &CheckFn) -> Result<VerificationReport> {
    let start = Instant::now();
    let instances = family.instances();
    let mut report = run_instances(check, &family.describe(), &instances, cfg.workers, f)?;
    report.elapsed_s = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Resume point of an interrupted sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub family: String,
    pub shard_cursor: usize,
    pub check: String,
    pub partial: VerificationReport,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Option<Checkpoint>> {
        match std::fs::read_to_string(path) {
            Ok(text) => Ok(Some(serde_json::from_str(&text)?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(source) => Err(Error::Io { path: path.display().to_string(), source }),
        }
    }

    /// Writes to a sibling temporary file and renames it over `path`.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let io = |source| Error::Io { path: path.display().to_string(), source };
        std::fs::write(&tmp, serde_json::to_string(self)?).map_err(io)?;
        std::fs::rename(&tmp, path).map_err(io)
    }
}

/// Runs a sweep in chunks of `chunk` instances, saving a checkpoint after
/// each chunk and resuming from an existing checkpoint for the same check
/// and family.
pub fn sweep_with_checkpoint(
    check: &SweepCheck,
    family: &DiagramFamily,
    cfg: &SweepConfig,
    path: &Path,
    chunk: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let name = check.name();
    let desc = family.describe();
    let instances = family.instances();
    let (mut cursor, mut report) = match Checkpoint::load(path)? {
        Some(cp) if cp.family == desc && cp.check == name => (cp.shard_cursor, cp.partial),
        _ => (0, VerificationReport::new(name, &desc)),
    };
    let f = check.function(cfg)?;
    while cursor < instances.len() {
        let end = (cursor + chunk.max(1)).min(instances.len());
        let part = run_instances(name, &desc, &instances[cursor..end], cfg.workers, &*f)?;
        report = report.merge(part);
        cursor = end;
        Checkpoint {
            family: desc.clone(),
            shard_cursor: cursor,
            check: name.to_string(),
            partial: report.clone(),
        }
        .save(path)?;
    }
    report.elapsed_s = start.elapsed().as_secs_f64();
    Ok(report)
}

/// The named sweeps, so that callers (and checkpoints) can select them by name.
#[derive(Clone, Debug)]
pub enum SweepCheck {
    LowerBound,
    LowerBoundSupport,
    EqualityIffUnstable,
    ZeroOneImplication,
    ZeroOneCharacterization(Vec<PatternGrid>),
    UpperBound { northwest: Option<PatternGrid>, general: Option<PatternGrid> },
    SchubertIdentities,
    Macdonald,
    KeyIdentities,
}

impl SweepCheck {
    pub fn name(&self) -> &'static str {
        match self {
            SweepCheck::LowerBound => "lower-bound",
            SweepCheck::LowerBoundSupport => "lower-bound-support",
            SweepCheck::EqualityIffUnstable => "equality-iff-unstable",
            SweepCheck::ZeroOneImplication => "zero-one-implication",
            SweepCheck::ZeroOneCharacterization(_) => "zero-one-characterization",
            SweepCheck::UpperBound { .. } => "upper-bound",
            SweepCheck::SchubertIdentities => "schubert-identities",
            SweepCheck::Macdonald => "macdonald",
            SweepCheck::KeyIdentities => "key-identities",
        }
    }

    pub fn run(&self, family: &DiagramFamily, cfg: &SweepConfig) -> Result<VerificationReport> {
        let f = self.function(cfg)?;
        sweep(self.name(), family, cfg, &*f)
    }

    fn function<'a>(&'a self, cfg: &SweepConfig) -> Result<Box<CheckFn<'a>>> {
        let cfg = *cfg;
        let opts = cfg.character_options();
        Ok(match self {
            SweepCheck::LowerBound => Box::new(move |inst, out| lower_bound(inst, out, opts)),
            SweepCheck::LowerBoundSupport => Box::new(lower_bound_support),
            SweepCheck::EqualityIffUnstable => {
                Box::new(move |inst, out| equality_iff_unstable(inst, out, opts))
            }
            SweepCheck::ZeroOneImplication => {
                Box::new(move |inst, out| zero_one_implication(inst, out, opts))
            }
            SweepCheck::ZeroOneCharacterization(patterns) => {
                if patterns.is_empty() {
                    return Err(Error::NoPatterns);
                }
                Box::new(move |inst, out| zero_one_characterization(inst, out, opts, patterns))
            }
            SweepCheck::UpperBound { northwest, general } => {
                Box::new(move |inst, out| upper_bound(inst, out, opts, northwest.as_ref(), general.as_ref()))
            }
            SweepCheck::SchubertIdentities => Box::new(move |inst, out| schubert_identities(inst, out, &cfg)),
            SweepCheck::Macdonald => Box::new(macdonald_consistency),
            SweepCheck::KeyIdentities => Box::new(move |inst, out| key_identities(inst, out, opts)),
        })
    }
}

fn principal_and_rank(chi: &SparsePolynomial, d: &Diagram) -> (BigInt, BigInt) {
    (chi.principal_specialization(), BigInt::from(d.rank() + 1))
}

fn lower_bound(inst: &Instance, out: &mut Outcome, opts: CharacterOptions) -> Result<()> {
    let d = &inst.diagram;
    let chi = dual_character_with(d, opts)?;
    let (principal, bound) = principal_and_rank(&chi, d);
    if principal < bound {
        out.fail(inst, "chi(1) >= rank + 1", &principal, &bound);
    } else if principal == bound {
        out.count("equality");
    }
    let support = character_support(d);
    if BigInt::from(support.len()) < bound {
        out.fail(inst, "#{x^C : C <= D} >= rank + 1", support.len(), &bound);
    }
    if !chi.support().eq(support.iter()) {
        out.fail(inst, "support of chi = {x^C : C <= D}", chi.len(), support.len());
    }
    Ok(())
}

fn lower_bound_support(inst: &Instance, out: &mut Outcome) -> Result<()> {
    let d = &inst.diagram;
    let support = character_support(d).len();
    let bound = d.rank() + 1;
    if support < bound {
        out.fail(inst, "#{x^C : C <= D} >= rank + 1", support, bound);
    } else if support == bound {
        out.count("equality");
    }
    Ok(())
}

fn equality_iff_unstable(inst: &Instance, out: &mut Outcome, opts: CharacterOptions) -> Result<()> {
    let d = &inst.diagram;
    let chi = dual_character_with(d, opts)?;
    let (principal, bound) = principal_and_rank(&chi, d);
    let pair = d.has_unstable_pair();
    let equal = principal == bound;
    if equal == pair.is_some() {
        let v = out.fail(inst, "chi(1) = rank + 1 <=> no unstable pair", &principal, &bound);
        v.witness = Some(match pair {
            Some(p) => format!("unstable pair {} {}", p.first, p.second),
            None => "no unstable pair".to_string(),
        });
    }
    if equal {
        out.count("equality");
    }
    Ok(())
}

fn zero_one_implication(inst: &Instance, out: &mut Outcome, opts: CharacterOptions) -> Result<()> {
    let d = &inst.diagram;
    let chi = dual_character_with(d, opts)?;
    let (principal, bound) = principal_and_rank(&chi, d);
    if principal == bound {
        out.count("equality");
        if !chi.is_zero_one() {
            let v = out.fail(inst, "chi(1) = rank + 1 => zero-one", &principal, &bound);
            v.witness =
                Some(format!("max coefficient {}", chi.max_coefficient().cloned().unwrap_or_default()));
        }
    }
    Ok(())
}

fn zero_one_characterization(
    inst: &Instance,
    out: &mut Outcome,
    opts: CharacterOptions,
    patterns: &[PatternGrid],
) -> Result<()> {
    let d = &inst.diagram;
    let chi = dual_character_with(d, opts)?;
    let zero_one = chi.is_zero_one();
    let max = chi.max_coefficient().cloned().unwrap_or_default();
    let hit = patterns.iter().enumerate().find_map(|(k, p)| p.find_in(d).map(|m| (k, m)));
    if zero_one {
        out.count("zero_one");
    }
    match (&hit, zero_one) {
        (Some((k, m)), true) => {
            let v = out.fail(inst, "contains configuration => not zero-one", &max, "> 1");
            v.witness = Some(format!("pattern {k} at rows {:?} columns {:?}", m.rows, m.cols));
        }
        (None, false) => {
            out.candidate(inst, "not zero-one => contains configuration", &max, "no configuration");
        }
        _ => {}
    }
    Ok(())
}

fn upper_bound(
    inst: &Instance,
    out: &mut Outcome,
    opts: CharacterOptions,
    northwest: Option<&PatternGrid>,
    general: Option<&PatternGrid>,
) -> Result<()> {
    let d = &inst.diagram;
    let chi = dual_character_with(d, opts)?;
    let principal = chi.principal_specialization();
    let count = BigInt::from(d.count_below());
    if principal > count {
        out.fail(inst, "chi(1) <= #{C <= D}", &principal, &count);
    }
    let equal = principal == count;
    if equal {
        out.count("equality");
    }
    if let Some(p) = northwest.filter(|_| d.is_northwest()) {
        out.count("northwest");
        let hit = p.find_in(d);
        if equal == hit.is_some() {
            let v = out.fail(inst, "northwest: chi(1) = #{C <= D} <=> no configuration", &principal, &count);
            v.witness = hit.map(|m| format!("rows {:?} columns {:?}", m.rows, m.cols));
        }
    }
    if let Some(p) = general {
        let hit = p.find_in(d);
        if equal == hit.is_some() {
            let v = out.candidate(inst, "chi(1) = #{C <= D} <=> no configuration", &principal, &count);
            v.witness = hit.map(|m| format!("rows {:?} columns {:?}", m.rows, m.cols));
        }
    }
    Ok(())
}

fn permutation_of(inst: &Instance) -> Result<&Permutation> {
    match &inst.source {
        Source::Permutation(w) => Ok(w),
        _ => Err(Error::Family(format!("instance {} is not a Rothe diagram", inst.label()))),
    }
}

fn schubert_identities(inst: &Instance, out: &mut Outcome, cfg: &SweepConfig) -> Result<()> {
    let w = permutation_of(inst)?;
    let d = &inst.diagram;
    let p132 = w.count_132();
    let principal = macdonald_specialization(w);
    if principal < BigUint::from(1 + p132) {
        out.fail(inst, "S_w(1) >= 1 + p132(w)", &principal, 1 + p132);
    }
    if p132 != d.rank() {
        out.fail(inst, "p132(w) = rank(D(w))", p132, d.rank());
    }
    if w.n() <= cfg.full_character_max_n {
        let chi = dual_character_with(d, cfg.character_options())?;
        let s = schubert(w);
        if s != chi {
            out.fail(inst, "S_w = chi_D(w)", &s, &chi);
        }
    }
    Ok(())
}

fn macdonald_consistency(inst: &Instance, out: &mut Outcome) -> Result<()> {
    let w = permutation_of(inst)?;
    let reduced = BigInt::from(macdonald_specialization(w));
    let direct = schubert(w).principal_specialization();
    if reduced != direct {
        out.fail(inst, "reduced-word formula = S_w(1)", &reduced, &direct);
    }
    Ok(())
}

fn key_identities(inst: &Instance, out: &mut Outcome, opts: CharacterOptions) -> Result<()> {
    let Source::Composition(alpha) = &inst.source else {
        return Err(Error::Family(format!("instance {} is not a skyline diagram", inst.label())));
    };
    let d = &inst.diagram;
    let kappa = key(alpha);
    let chi = dual_character_with(d, opts)?;
    if kappa != chi {
        out.fail(inst, "kappa_alpha = chi_D(alpha)", &kappa, &chi);
    }
    let weight = alpha.rinv_weight();
    let principal = kappa.principal_specialization();
    if principal < BigInt::from(1 + weight) {
        out.fail(inst, "kappa(1) >= 1 + rinv weight", &principal, 1 + weight);
    } else if principal == BigInt::from(1 + weight) {
        out.count("equality");
    }
    if weight != d.rank() {
        out.fail(inst, "rinv weight = rank(D(alpha))", weight, d.rank());
    }
    Ok(())
}

pub fn verify_lower_bound(family: &DiagramFamily, cfg: &SweepConfig) -> Result<VerificationReport> {
    SweepCheck::LowerBound.run(family, cfg)
}

/// The support-only form of the lower bound; no linear algebra.
pub fn verify_lower_bound_support(family: &DiagramFamily, cfg: &SweepConfig) -> Result<VerificationReport> {
    SweepCheck::LowerBoundSupport.run(family, cfg)
}

pub fn verify_equality_iff_unstable(family: &DiagramFamily, cfg: &SweepConfig) -> Result<VerificationReport> {
    SweepCheck::EqualityIffUnstable.run(family, cfg)
}

pub fn verify_zero_one_implication(family: &DiagramFamily, cfg: &SweepConfig) -> Result<VerificationReport> {
    SweepCheck::ZeroOneImplication.run(family, cfg)
}

/// Checks "contains a configuration => not zero-one" as a hard property and
/// reports the converse as candidate counterexamples.
pub fn verify_zero_one_characterization(
    family: &DiagramFamily,
    patterns: &[PatternGrid],
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    SweepCheck::ZeroOneCharacterization(patterns.to_vec()).run(family, cfg)
}

pub fn verify_upper_bound(
    family: &DiagramFamily,
    northwest: Option<&PatternGrid>,
    general: Option<&PatternGrid>,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    SweepCheck::UpperBound { northwest: northwest.cloned(), general: general.cloned() }.run(family, cfg)
}

pub fn verify_schubert_identities(n: usize, cfg: &SweepConfig) -> Result<VerificationReport> {
    SweepCheck::SchubertIdentities.run(&DiagramFamily::AllRothe { n }, cfg)
}

pub fn verify_macdonald(n: usize, cfg: &SweepConfig) -> Result<VerificationReport> {
    SweepCheck::Macdonald.run(&DiagramFamily::AllRothe { n }, cfg)
}

pub fn verify_key_identities(
    max_part: usize,
    max_len: usize,
    cfg: &SweepConfig,
) -> Result<VerificationReport> {
    SweepCheck::KeyIdentities.run(&DiagramFamily::AllSkyline { max_part, max_len }, cfg)
}
