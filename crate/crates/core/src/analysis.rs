//! The end-to-end pipeline: load a semiring, enumerate `L(M)`, derive the
//! closed and splitting members, scan for projections and evaluate the order
//! theoretic verdicts and theorem checks.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{ModuleError, PosetError, SemiringError};
use crate::golden;
use crate::poset::FinitePoset;
use crate::report::CheckReport;
use crate::semimodule::FreeSemimodule;
use crate::semiring::{
    boolean_semiring, chain_lattice, modular_ring, Classification, FiniteSemiring, SemiringTables,
    DEFAULT_MAX_ELEMENTS,
};
use crate::splitting::{check_splitting_laws, coordinate_vanishing, enumerate_projections, ProjectionScan};
use crate::sublattice::{SubLattice, DEFAULT_MAX_SUBSEMIMODULES};

pub const SCHEMA_VERSION: u32 = 1;

/// Above this many subsemimodules the `O(n²)` poset of `L(M)` and the
/// pairwise checks on it are skipped.
pub const DEFAULT_MAX_PAIRWISE: usize = 2000;
/// Above this many subsemimodules the three-member family checks are skipped.
pub const DEFAULT_MAX_FAMILIES: usize = 600;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Semiring(#[from] SemiringError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl AnalysisError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            AnalysisError::Io { .. } | AnalysisError::Parse(_) => 3,
            AnalysisError::Semiring(SemiringError::AxiomViolation(_)) => 2,
            AnalysisError::Semiring(SemiringError::Shape(_)) => 3,
            AnalysisError::Semiring(SemiringError::TooLarge { .. }) => 4,
            AnalysisError::Module(
                ModuleError::SizeCapExceeded { .. }
                | ModuleError::EnumerationCapExceeded { .. }
                | ModuleError::SearchCapExceeded { .. },
            ) => 4,
            AnalysisError::Config(_) => 64,
            _ => 1,
        }
    }
}

/// On-disk semiring format: tables are written with element labels.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiringFile {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: String,
    pub one: String,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
}

impl SemiringFile {
    pub fn from_tables(t: &SemiringTables) -> Self {
        let table = |tab: &Vec<Vec<usize>>| -> Vec<Vec<String>> {
            tab.iter().map(|r| r.iter().map(|&e| t.labels[e].clone()).collect()).collect()
        };
        SemiringFile {
            name: t.name.clone(),
            elements: t.labels.clone(),
            zero: t.labels[t.zero].clone(),
            one: t.labels[t.one].clone(),
            add: table(&t.add),
            mul: table(&t.mul),
        }
    }

    pub fn into_tables(self) -> Result<SemiringTables, AnalysisError> {
        let mut seen = BTreeSet::new();
        for e in &self.elements {
            if !seen.insert(e) {
                return Err(AnalysisError::Parse(format!("duplicate element label {e:?}")));
            }
        }
        let lookup = |label: &str| {
            self.elements
                .iter()
                .position(|e| e == label)
                .ok_or_else(|| AnalysisError::Parse(format!("unknown element {label:?}")))
        };
        let table = |tab: &Vec<Vec<String>>| -> Result<Vec<Vec<usize>>, AnalysisError> {
            tab.iter().map(|r| r.iter().map(|l| lookup(l)).collect()).collect()
        };
        Ok(SemiringTables {
            add: table(&self.add)?,
            mul: table(&self.mul)?,
            zero: lookup(&self.zero)?,
            one: lookup(&self.one)?,
            name: self.name,
            labels: self.elements,
        })
    }
}

/// Raw tables from `builtin:NAME` or a JSON file path.
pub fn load_tables(source: &str) -> Result<SemiringTables, AnalysisError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return Ok(builtin(name)?.tables());
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| AnalysisError::Io { path: source.to_string(), message: e.to_string() })?;
    parse_semiring_json(&text)
}

pub fn parse_semiring_json(text: &str) -> Result<SemiringTables, AnalysisError> {
    let file: SemiringFile = serde_json::from_str(text).map_err(|e| AnalysisError::Parse(e.to_string()))?;
    file.into_tables()
}

/// `bool`, `zN` (N ≥ 1) or `chainN` (N ≥ 2).
pub fn builtin(name: &str) -> Result<FiniteSemiring, AnalysisError> {
    let unknown = || AnalysisError::Parse(format!("unknown builtin semiring {name:?}"));
    let number = |digits: &str| digits.parse::<usize>().map_err(|_| unknown());
    if name == "bool" {
        Ok(boolean_semiring())
    } else if let Some(n) = name.strip_prefix("chain") {
        Ok(chain_lattice(number(n)?)?)
    } else if let Some(n) = name.strip_prefix('z') {
        Ok(modular_ring(number(n)?)?)
    } else {
        Err(unknown())
    }
}

pub fn load_semiring(source: &str) -> Result<FiniteSemiring, AnalysisError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name);
    }
    Ok(FiniteSemiring::new(load_tables(source)?, DEFAULT_MAX_ELEMENTS)?)
}

/// Optional theorem checks that can be selected individually.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Closure-operator laws of `⊥` and `⊥⊥`.
    Closure,
    /// `⊥` on families of up to three subsemimodules.
    Families,
    /// Whether `⊥⊥` is a lattice homomorphism onto `L_c(M)`.
    Homomorphism,
    Nondegenerate,
    /// Inclusions between `L(M)`, `L_c(M)`, `L_s(M)` and the verdicts the
    /// theory predicts for them.
    Structure,
    /// Unique decomposition along splitting submodules (rings only).
    Decomposition,
    Projections,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Closure,
        Check::Families,
        Check::Homomorphism,
        Check::Nondegenerate,
        Check::Structure,
        Check::Decomposition,
        Check::Projections,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Closure => "closure",
            Check::Families => "families",
            Check::Homomorphism => "homomorphism",
            Check::Nondegenerate => "nondegenerate",
            Check::Structure => "structure",
            Check::Decomposition => "decomposition",
            Check::Projections => "projections",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Parses a comma-separated list; `all` and `none` are accepted.
pub fn parse_checks(list: &str) -> Result<BTreeSet<Check>, String> {
    let mut out = BTreeSet::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "all" => out.extend(Check::ALL),
            "none" => {}
            other => {
                out.insert(other.parse()?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub source: String,
    pub rank: usize,
    pub cap_subs: usize,
    pub cap_proj: u128,
    pub max_pairwise: usize,
    pub max_families: usize,
    pub out_dir: Option<PathBuf>,
    pub dot: bool,
    pub checks: BTreeSet<Check>,
    pub timing: bool,
}

impl AnalysisConfig {
    pub fn new(source: impl Into<String>, rank: usize) -> Self {
        AnalysisConfig {
            source: source.into(),
            rank,
            cap_subs: DEFAULT_MAX_SUBSEMIMODULES,
            cap_proj: crate::splitting::DEFAULT_MAX_CANDIDATES,
            max_pairwise: DEFAULT_MAX_PAIRWISE,
            max_families: DEFAULT_MAX_FAMILIES,
            out_dir: None,
            dot: false,
            checks: Check::ALL.into_iter().collect(),
            timing: false,
        }
    }

    pub fn validate(&self) -> Result<(), AnalysisError> {
        if self.rank == 0 {
            return Err(AnalysisError::Config("rank must be at least 1".into()));
        }
        if self.cap_subs == 0 || self.cap_proj == 0 {
            return Err(AnalysisError::Config("caps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SemiringSummary {
    pub name: String,
    pub elements: Vec<String>,
    pub classification: Classification,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub subsemimodules: usize,
    pub closed: usize,
    pub splitting: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projections: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsemimoduleEntry {
    pub label: String,
    pub members: Vec<Vec<String>>,
    pub perp: String,
    pub closed: bool,
    pub splitting: bool,
}

/// Order-theoretic verdicts for one of the three posets, each ordered by
/// inclusion and carrying `⊥`.
#[derive(Clone, Debug, Serialize)]
pub struct PosetVerdicts {
    pub members: Vec<String>,
    pub lattice: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular: Option<bool>,
    /// `[zero, low, high, side, one]` of a pentagon sublattice.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n5_witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distributive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boolean_algebra: Option<bool>,
    pub atomic: bool,
    pub antitone_involution: bool,
    pub orthoposet: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthomodular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthomodular_witness: Option<String>,
    pub mo2: bool,
    /// Antiisomorphic to the subsets of `{1..k}`, `k` the rank.
    pub powerset_antiisomorphic: bool,
    pub covers: Vec<[String; 2]>,
}

impl PosetVerdicts {
    pub fn of(p: &FinitePoset, rank: usize) -> Result<Self, PosetError> {
        let lattice = p.is_lattice();
        let (modular, n5_witness, distributive, boolean_algebra) = if lattice {
            let n5 = p.n5_witness()?;
            let distributive = n5.is_none() && p.m3_witness()?.is_none();
            (
                Some(n5.is_none()),
                n5.map(|w| w.members().iter().map(|&i| p.label(i).to_string()).collect()),
                Some(distributive),
                Some(distributive && p.is_complemented()?),
            )
        } else {
            (None, None, None, None)
        };
        let orthoposet = p.is_orthoposet()?;
        let violation = if orthoposet { Some(p.orthomodular_violation()?) } else { None };
        Ok(PosetVerdicts {
            members: p.labels().to_vec(),
            lattice,
            modular,
            n5_witness,
            distributive,
            boolean_algebra,
            atomic: p.is_atomic(),
            antitone_involution: p.is_antitone_involution()?,
            orthoposet,
            orthomodular: violation.as_ref().map(Option::is_none),
            orthomodular_witness: violation.flatten().map(|v| {
                format!("x={}, y={}: {}", p.label(v.x), p.label(v.y), v.reason)
            }),
            mo2: p.is_iso_mo2(),
            powerset_antiisomorphic: p.antiisomorphic_to_powerset(rank),
            covers: p
                .hasse_edges()
                .into_iter()
                .map(|(a, b)| [p.label(a).to_string(), p.label(b).to_string()])
                .collect(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionEntry {
    pub matrix: Vec<Vec<String>>,
    pub image: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionSummary {
    pub count: usize,
    pub projections: Vec<ProjectionEntry>,
    /// Whether `U ↦ P_U` is an order isomorphism `L_s(M) → Pro(M)`; only
    /// decided over rings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bijection: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub total_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub semiring: SemiringSummary,
    pub rank: usize,
    pub module_size: usize,
    pub counts: Counts,
    pub subsemimodules: Vec<SubsemimoduleEntry>,
    /// Omitted when `L(M)` is too large for pairwise evaluation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<PosetVerdicts>,
    pub closed: PosetVerdicts,
    pub splitting: PosetVerdicts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projections: Option<ProjectionSummary>,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl AnalysisReport {
    /// True iff no executed check clause failed.
    pub fn checks_passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A finished analysis: the report and the DOT files, by file name.
pub struct Analysis {
    pub report: AnalysisReport,
    pub lattice: SubLattice,
    pub dot_files: Vec<(String, String)>,
}

impl Analysis {
    /// Writes `report.json` and, if requested, the DOT files into `dir`.
    pub fn write(&self, dir: &Path, dot: bool) -> Result<Vec<PathBuf>, AnalysisError> {
        let io = |p: &Path, e: std::io::Error| AnalysisError::Io { path: p.display().to_string(), message: e.to_string() };
        std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
        let mut written = Vec::new();
        let path = dir.join("report.json");
        std::fs::write(&path, self.report.to_json()).map_err(|e| io(&path, e))?;
        written.push(path);
        if dot {
            for (name, text) in &self.dot_files {
                let path = dir.join(name);
                std::fs::write(&path, text).map_err(|e| io(&path, e))?;
                written.push(path);
            }
        }
        Ok(written)
    }
}

/// Runs the full pipeline for a configuration.
pub fn analyze(config: &AnalysisConfig) -> Result<Analysis, AnalysisError> {
    config.validate()?;
    let semiring = load_semiring(&config.source)?;
    analyze_semiring(semiring, config)
}

/// Runs the pipeline on an already loaded semiring; `config.source` is
/// ignored.
pub fn analyze_semiring(semiring: FiniteSemiring, config: &AnalysisConfig) -> Result<Analysis, AnalysisError> {
    config.validate()?;
    let start = Instant::now();
    let summary = SemiringSummary {
        name: semiring.name().to_string(),
        elements: semiring.labels().to_vec(),
        classification: semiring.classification(),
    };
    let m = FreeSemimodule::new(semiring, config.rank, crate::semimodule::DEFAULT_MAX_VECTORS)?;
    let mut lattice = SubLattice::new(&m, config.cap_subs)?;
    if let Some(labels) = golden::EXAMPLES
        .into_iter()
        .find(|g| g.rank == config.rank && g.semiring() == *m.semiring())
        .and_then(|g| g.overlay(&lattice))
    {
        lattice.set_labels(labels);
    }

    let closed = lattice.closed_indices();
    let splitting = lattice.splitting_indices();
    let entries = (0..lattice.len())
        .map(|i| SubsemimoduleEntry {
            label: lattice.label(i).to_string(),
            members: lattice.subs()[i].vectors(),
            perp: lattice.label(lattice.perp_index(i)).to_string(),
            closed: closed.binary_search(&i).is_ok(),
            splitting: splitting.binary_search(&i).is_ok(),
        })
        .collect();

    let whole = (lattice.len() <= config.max_pairwise).then(|| lattice.poset());
    let closed_poset = lattice.poset_of(&closed)?;
    let splitting_poset = lattice.poset_of(&splitting)?;
    let lattice_verdicts = whole.as_ref().map(|p| PosetVerdicts::of(p, config.rank)).transpose()?;
    let closed_verdicts = PosetVerdicts::of(&closed_poset, config.rank)?;
    let splitting_verdicts = PosetVerdicts::of(&splitting_poset, config.rank)?;

    let ring = m.semiring().is_ring();
    let ls: Vec<_> = splitting.iter().map(|&i| lattice.subs()[i].clone()).collect();
    let mut checks = Vec::new();
    let projections = if config.checks.contains(&Check::Projections) {
        let pro = enumerate_projections(&m, ProjectionScan::Symmetric, config.cap_proj)?;
        let label_of = |u: &crate::sublattice::Subsemimodule| {
            lattice.index_of(u).map_or_else(|| u.format(), |i| lattice.label(i).to_string())
        };
        let entries = pro
            .projections()
            .iter()
            .zip(pro.images())
            .map(|(p, img)| ProjectionEntry { matrix: p.label_rows(), image: label_of(img) })
            .collect();
        checks.push(pro.check_projection_order());
        checks.push(pro.check_order_homomorphism());
        let bijection = if ring {
            let correspondence = pro.check_splitting_correspondence(&ls)?;
            let ok = correspondence.passed();
            checks.push(correspondence);
            checks.push(pro.check_module_laws()?);
            Some(ok)
        } else {
            None
        };
        Some(ProjectionSummary { count: pro.len(), projections: entries, bijection })
    } else {
        None
    };

    let mut reports = Vec::new();
    for check in &config.checks {
        match check {
            Check::Closure if whole.is_none() => reports.push(too_large("closure", lattice.len())),
            Check::Closure => reports.push(lattice.check_closure_operator()),
            Check::Families if lattice.len() > config.max_families => {
                reports.push(too_large("families", lattice.len()))
            }
            Check::Families => reports.push(lattice.check_family_complements()),
            Check::Homomorphism if whole.is_none() => reports.push(too_large("double-perp-homomorphism", lattice.len())),
            Check::Homomorphism => reports.push(lattice.check_double_perp_homomorphism().1),
            Check::Nondegenerate => {
                let mut r = CheckReport::new("nondegenerate");
                let mut c = r.clause("x ↦ (x·b_i)_i is injective");
                c.check(m.check_nondegenerate(), String::new);
                c.finish();
                reports.push(r);
            }
            Check::Structure => reports.push(structure_report(
                &lattice,
                whole.as_ref(),
                &closed,
                &splitting,
                &splitting_poset,
                config.rank,
            )),
            Check::Decomposition => {
                if ring {
                    reports.push(check_splitting_laws(&m, &ls)?);
                } else {
                    let mut r = CheckReport::new("splitting-decomposition");
                    r.skip("unique decomposition a = b + c, b ∈ U, c ∈ U^⊥", "semiring is not a ring");
                    reports.push(r);
                }
            }
            Check::Projections => {}
        }
    }
    reports.extend(checks);

    let mut dot_files = Vec::new();
    if let Some(p) = &whole {
        dot_files.push(("lattice.dot".to_string(), p.to_dot()));
    }
    dot_files.push(("closed.dot".to_string(), closed_poset.to_dot()));
    dot_files.push(("splitting.dot".to_string(), splitting_poset.to_dot()));
    let report = AnalysisReport {
        schema: SCHEMA_VERSION,
        semiring: summary,
        rank: config.rank,
        module_size: m.len(),
        counts: Counts {
            subsemimodules: lattice.len(),
            closed: closed.len(),
            splitting: splitting.len(),
            projections: projections.as_ref().map(|p| p.count),
        },
        subsemimodules: entries,
        lattice: lattice_verdicts,
        closed: closed_verdicts,
        splitting: splitting_verdicts,
        projections,
        checks: reports,
        timing: config.timing.then(|| Timing { total_ms: start.elapsed().as_millis() }),
    };
    Ok(Analysis { report, lattice, dot_files })
}

fn too_large(check: &str, n: usize) -> CheckReport {
    let mut r = CheckReport::new(check);
    r.skip("all clauses", format!("{n} subsemimodules exceeds the evaluation limit"));
    r
}

/// Relations between the three posets that hold for every instance, plus
/// the extra structure predicted over rings and over chain-like lattices.
fn structure_report(
    lattice: &SubLattice,
    whole: Option<&FinitePoset>,
    closed: &[usize],
    splitting: &[usize],
    ls: &FinitePoset,
    rank: usize,
) -> CheckReport {
    let m = lattice.ambient();
    let s = m.semiring();
    let mut r = CheckReport::new("structure");

    let mut c = r.clause("splitting ⇒ closed");
    for &i in splitting {
        c.check(closed.contains(&i), || lattice.label(i).to_string());
    }
    c.finish();

    let mut c = r.clause("|L_s| ≤ |L_c| ≤ |L|");
    c.check(splitting.len() <= closed.len() && closed.len() <= lattice.len(), String::new);
    c.finish();

    let mut c = r.clause("(L_s, ⊆, ⊥) is an orthoposet");
    c.check(ls.is_orthoposet().unwrap_or(false), String::new);
    c.finish();

    if s.is_ring() {
        let mut c = r.clause("ring: (L_s, ⊆, ⊥) is orthomodular");
        let v = ls.orthomodular_violation();
        c.check(matches!(v, Ok(None)), || match &v {
            Ok(Some(w)) => format!("x={}, y={}: {}", ls.label(w.x), ls.label(w.y), w.reason),
            Ok(None) => String::new(),
            Err(e) => e.to_string(),
        });
        c.finish();
        match whole {
            Some(p) => {
                let mut c = r.clause("ring: L(M) is modular");
                c.check(p.is_modular().unwrap_or(false), String::new);
                c.finish();
            }
            None => r.skip("ring: L(M) is modular", format!("{} subsemimodules", lattice.len())),
        }
    } else {
        r.skip("ring: (L_s, ⊆, ⊥) is orthomodular", "semiring is not a ring");
    }

    let chain_like = s.len() > 1
        && s.is_bounded_distributive_lattice()
        && s.is_zero_meet_irreducible().unwrap_or(false);
    if !chain_like {
        r.skip(
            "lattice semiring: L_s = L_c ≅ (2^k)^op via J ↦ U_J",
            "semiring is not a nontrivial bounded distributive lattice with meet-irreducible 0",
        );
        return r;
    }
    let mut c = r.clause("lattice semiring: L_s = L_c");
    c.check(closed == splitting, String::new);
    c.finish();
    let mut c = r.clause("lattice semiring: L_s is an atomic Boolean algebra");
    c.check(ls.is_boolean_algebra().unwrap_or(false) && ls.is_atomic(), String::new);
    c.finish();

    let mut c = r.clause("lattice semiring: J ↦ U_J is an antiisomorphism 2^k → L_s");
    let images: Vec<Option<usize>> = (0..1usize << rank)
        .map(|mask| {
            let coords: Vec<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
            lattice.index_of(&coordinate_vanishing(m, &coords)).filter(|i| splitting.contains(i))
        })
        .collect();
    let distinct: BTreeSet<_> = images.iter().flatten().collect();
    c.check(images.iter().all(Option::is_some) && distinct.len() == splitting.len() && distinct.len() == images.len(), || {
        "J ↦ U_J is not a bijection onto L_s".into()
    });
    for a in 0..images.len() {
        for b in 0..images.len() {
            if let (Some(x), Some(y)) = (images[a], images[b]) {
                let subset = a & b == a;
                c.check(subset == lattice.leq(y, x), || format!("J={a:b}, K={b:b}"));
            }
        }
    }
    c.finish();
    r
}
