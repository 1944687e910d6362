//! One function per subcommand. Each returns the report plus any Graphviz
//! files to write; usage problems come back as errors, mathematical
//! failures as a report with status `fail`.

use std::path::{Path, PathBuf};

use quasiord::poset::{
    build_poset, check_tree, compare_qos, convexity_check, cross_support_pairs, forest_partition,
    no_global_maximum_demo, positivity_transfer_check, qcomp_equivalence, Forest, PosetError,
};
use quasiord::qo::{catalog, CatalogEntry, FactRelation, Kind, QuasiOrder};
use quasiord::ring::{Element, Ideal, Ring};
use quasiord::structure::{
    dependency_classes, interplay_check, kaplansky_check, node_verdicts, subtree_check, Property, Verdict,
};
use quasiord::verify::{Battery, Mutant, MutantKind, Outcome as AxiomOutcome};
use serde::Serialize;

use crate::config::RunConfig;
use crate::dot::{forest_dot, poset_dot};
use crate::report::Report;
use crate::CliError;

pub struct Outcome {
    pub report: Report,
    pub dot: Vec<(PathBuf, String)>,
}

impl Outcome {
    fn plain(report: Report) -> Outcome {
        Outcome { report, dot: Vec::new() }
    }
}

fn lookup(id: &str, cfg: &RunConfig) -> Result<CatalogEntry, CliError> {
    CatalogEntry::lookup(id, cfg.prime_bound).map_err(|e| CliError::Usage(e.to_string()))
}

/// The given ids, or the whole catalog of `--ring` when none are given.
fn select(ids: &[String], cfg: &RunConfig) -> Result<Vec<CatalogEntry>, CliError> {
    if ids.is_empty() {
        return Ok(catalog(cfg.require_ring()?, cfg.prime_bound));
    }
    ids.iter().map(|id| lookup(id, cfg)).collect()
}

/// Ring mismatches and malformed inputs are usage errors; everything else
/// is a failed check.
fn classify_poset_error(e: PosetError) -> Result<String, CliError> {
    match e {
        PosetError::Ring(_)
        | PosetError::NoDeclaredSupport(_)
        | PosetError::MixedSupport { .. }
        | PosetError::NotPrime(_)
        | PosetError::NoTrivialNode { .. } => Err(CliError::Usage(e.to_string())),
        other => Ok(other.to_string()),
    }
}

#[derive(Serialize)]
struct ErrorResult {
    error: String,
}

fn failed(command: &str, cfg: &RunConfig, e: PosetError) -> Result<Outcome, CliError> {
    let error = classify_poset_error(e)?;
    eprintln!("FAIL {command}: {error}");
    Ok(Outcome::plain(Report::new(command, cfg, false, ErrorResult { error })?))
}

#[derive(Serialize)]
struct FactView {
    other: String,
    relation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<(Element, Element)>,
    citation: String,
}

#[derive(Serialize)]
struct ObstructionView {
    ideal: Ideal,
    kind: quasiord::qo::ObstructionKind,
    explanation: String,
}

#[derive(Serialize)]
struct EntryView {
    id: String,
    kind: Kind,
    support: Ideal,
    rule: String,
    provenance: String,
    facts: Vec<FactView>,
    obstructions: Vec<ObstructionView>,
}

pub fn cmd_catalog(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ring = cfg.require_ring()?;
    let entries: Vec<EntryView> = catalog(ring, cfg.prime_bound)
        .iter()
        .map(|e| EntryView {
            id: e.id().to_string(),
            kind: e.declared_kind(),
            support: e.support().clone(),
            rule: e.description().to_string(),
            provenance: e.provenance().to_string(),
            facts: e
                .facts()
                .iter()
                .map(|f| {
                    let (relation, witness) = match &f.relation {
                        FactRelation::Finer => ("finer", None),
                        FactRelation::NotFiner { witness } => ("not-finer", Some(witness.clone())),
                    };
                    FactView {
                        other: f.other.clone(),
                        relation,
                        witness,
                        citation: f.citation.clone(),
                    }
                })
                .collect(),
            obstructions: e
                .obstructions()
                .iter()
                .map(|o| ObstructionView {
                    ideal: o.ideal.clone(),
                    kind: o.kind,
                    explanation: o.explanation.clone(),
                })
                .collect(),
        })
        .collect();
    for e in &entries {
        eprintln!("{:<16} {:<10} support {}", e.id, e.kind, e.support);
    }
    Ok(Outcome::plain(Report::new("catalog", cfg, true, entries)?))
}

fn print_failures(b: &Battery) {
    let reports = [Some(&b.qr), Some(&b.lemmas), b.ordering.as_ref(), b.valuation_map.as_ref()];
    for r in reports.into_iter().flatten() {
        for f in r.failures() {
            if let AxiomOutcome::Fail { witness } = &f.outcome {
                let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
                eprintln!("FAIL {} {}: witness ({})", b.qo, f.axiom, w.join(", "));
            }
        }
    }
    if let Some(Err(e)) = &b.value_table {
        eprintln!("FAIL {} value table: {e}", b.qo);
    }
    if !b.kind_agrees() {
        eprintln!("FAIL {}: declared {} but classified {}", b.qo, b.declared_kind, b.classified);
    }
}

pub fn cmd_check(ids: &[String], mutant: Option<&str>, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let entries = select(ids, cfg)?;
    let kind = match mutant {
        Some(m) => Some(MutantKind::from_id(m).ok_or_else(|| {
            CliError::Usage(format!("unknown mutant `{m}` (swap, minus-one, transitivity)"))
        })?),
        None => None,
    };
    let mut batteries = Vec::new();
    for e in &entries {
        let u = cfg.universe(e.ring())?;
        let b = match kind {
            Some(k) => {
                let m = Mutant::new(k, e, &u).ok_or_else(|| {
                    CliError::Usage(format!("mutant `{}` does not apply to {}", k.id(), e.id()))
                })?;
                Battery::run(&m, &u)
            }
            None => Battery::run(e, &u),
        }
        .map_err(|err| CliError::Internal(err.to_string()))?;
        print_failures(&b);
        batteries.push(b);
    }
    let passed = batteries.iter().all(|b| b.all_pass());
    Ok(Outcome::plain(Report::new("check", cfg, passed, batteries)?))
}

#[derive(Serialize)]
struct CompareResult {
    lower: String,
    upper: String,
    decision: quasiord::poset::Decision,
    #[serde(skip_serializing_if = "Option::is_none")]
    positivity: Option<quasiord::verify::AxiomReport>,
}

pub fn cmd_compare(a: &str, b: &str, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (qa, qb) = (lookup(a, cfg)?, lookup(b, cfg)?);
    if qa.ring() != qb.ring() {
        return Err(CliError::Usage(format!(
            "{a} and {b} live on different rings ({} and {})",
            qa.ring(),
            qb.ring()
        )));
    }
    let u = cfg.universe(qa.ring())?;
    let decision = match compare_qos(&qa, &qb, &u) {
        Ok(d) => d,
        Err(e) => return failed("compare", cfg, e),
    };
    let positivity = if decision.holds() {
        match positivity_transfer_check(&qa, &qb, &u) {
            Ok(r) => Some(r),
            Err(e) => return failed("compare", cfg, e),
        }
    } else {
        None
    };
    match decision.witness() {
        Some((x, y)) => eprintln!("{a} ≤ {b}: refuted by ({x}, {y})"),
        None => eprintln!("{a} ≤ {b}: {}", decision.status()),
    }
    let passed = positivity.as_ref().is_none_or(|r| r.all_pass());
    let result = CompareResult {
        lower: a.to_string(),
        upper: b.to_string(),
        decision,
        positivity,
    };
    Ok(Outcome::plain(Report::new("compare", cfg, passed, result)?))
}

#[derive(Serialize)]
struct TreeResult {
    certificate: quasiord::poset::TreeCertificate,
    kaplansky: quasiord::structure::KaplanskyReport,
    dependency: quasiord::structure::DependencyPartition,
    verdicts: Vec<quasiord::structure::NodeVerdicts>,
    interplay: quasiord::structure::InterplayReport,
    special_subtree: quasiord::structure::SubtreeReport,
    manis_subtree: quasiord::structure::SubtreeReport,
}

fn parse_ideal(ring: Ring, s: &str) -> Result<Ideal, CliError> {
    Ideal::parse(ring, s).map_err(|e| CliError::Usage(format!("bad ideal `{s}`: {e}")))
}

pub fn cmd_tree(support: &str, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ring = cfg.require_ring()?;
    let q = parse_ideal(ring, support)?;
    let entries: Vec<CatalogEntry> = catalog(ring, cfg.prime_bound)
        .into_iter()
        .filter(|e| e.support() == &q)
        .collect();
    if entries.is_empty() {
        return Err(CliError::Usage(format!("no catalog entry on {ring} has support {q}")));
    }
    let u = cfg.universe(ring)?;
    let cert = match build_poset(&entries, &u).and_then(|p| check_tree(p, &q)) {
        Ok(c) => c,
        Err(e) => return failed("tree", cfg, e),
    };
    let verdicts = node_verdicts(&entries, &u);
    let interplay = interplay_check(&cert.poset, &verdicts);
    let forest = Forest {
        trees: vec![cert.clone()],
        cross_pairs: None,
    };
    let subtree = |p| subtree_check(&forest, &entries, &verdicts, p, &u);
    let (special_subtree, manis_subtree) = match (subtree(Property::Special), subtree(Property::Manis)) {
        (Ok(s), Ok(m)) => (s, m),
        (Err(e), _) | (_, Err(e)) => return failed("tree", cfg, e),
    };
    let mut notes = Vec::new();
    let holds = |a: &str, b: &str| cert.poset.get(a, b).is_some_and(|d| d.holds());
    if holds("QX:Pa", "QX:w") {
        notes.push(
            "QX:Pa is computed below QX:w (not refuted on this universe): the lowest-coefficient cone \
             makes X positive infinitesimal. Drawings that attach QX:Pa directly to QX:triv:0 \
             disagree with the cone as defined."
                .to_string(),
        );
    }
    let kaplansky = kaplansky_check(&cert);
    let dependency = dependency_classes(&cert);
    for b in &cert.branches {
        eprintln!("branch: {}", b.nodes.join(" < "));
    }
    let passed = kaplansky.k1
        && kaplansky.k2
        && dependency.is_equivalence()
        && interplay.passed()
        && special_subtree.passed()
        && manis_subtree.passed();
    let dot = cfg
        .dot
        .iter()
        .map(|p| (p.clone(), poset_dot(&format!("{ring} support {q}"), &cert.poset)))
        .collect();
    let mut report = Report::new(
        "tree",
        cfg,
        passed,
        TreeResult {
            certificate: cert,
            kaplansky,
            dependency,
            verdicts,
            interplay,
            special_subtree,
            manis_subtree,
        },
    )?;
    report.notes = notes;
    Ok(Outcome { report, dot })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ForestRelation {
    /// `≤` restricted to equal supports.
    LePrime,
    /// Also report non-refuted `≤` between different supports.
    Le,
}

#[derive(Serialize)]
struct ForestResult {
    relation: &'static str,
    forest: Forest,
    #[serde(skip_serializing_if = "Option::is_none")]
    no_global_maximum: Option<Vec<quasiord::poset::MaximumDemo>>,
}

fn sibling(path: &Path, label: &str) -> PathBuf {
    let stem = path.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    let ext = path.extension().map_or_else(|| "dot".to_string(), |s| s.to_string_lossy().into_owned());
    let safe: String = label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    path.with_file_name(format!("{stem}.{safe}.{ext}"))
}

pub fn cmd_forest(relation: ForestRelation, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ring = cfg.require_ring()?;
    let entries = catalog(ring, cfg.prime_bound);
    let u = cfg.universe(ring)?;
    let mut forest = match forest_partition(&entries, &u) {
        Ok(f) => f,
        Err(e) => return failed("forest", cfg, e),
    };
    if relation == ForestRelation::Le {
        match cross_support_pairs(&entries, &u) {
            Ok(c) => forest.cross_pairs = Some(c),
            Err(e) => return failed("forest", cfg, e),
        }
    }
    let no_global_maximum = match no_global_maximum_demo(&entries, &u) {
        Ok(d) => Some(d),
        Err(PosetError::NoComparablePrimes) => None,
        Err(e) => return failed("forest", cfg, e),
    };
    for t in &forest.trees {
        let s = t.support.as_ref().map_or_else(String::new, |s| s.to_string());
        eprintln!("tree {s}: {} node(s), maximum {}", t.poset.len(), t.maximum);
    }
    let passed = forest
        .cross_pairs
        .iter()
        .flatten()
        .all(|c| c.support_violation.is_none())
        && no_global_maximum.iter().flatten().all(|d| d.passed());

    let mut dot = Vec::new();
    if let Some(path) = &cfg.dot {
        let labelled: Vec<(String, &quasiord::poset::Poset)> = forest
            .trees
            .iter()
            .map(|t| (t.support.as_ref().map_or_else(String::new, |s| s.label()), &t.poset))
            .collect();
        dot.push((path.clone(), forest_dot(&format!("{ring} forest"), &labelled)));
        for (label, poset) in &labelled {
            dot.push((sibling(path, label), poset_dot(&format!("{ring} support ({label})"), poset)));
        }
    }
    let result = ForestResult {
        relation: match relation {
            ForestRelation::LePrime => "le-prime",
            ForestRelation::Le => "le",
        },
        forest,
        no_global_maximum,
    };
    Ok(Outcome {
        report: Report::new("forest", cfg, passed, result)?,
        dot,
    })
}

#[derive(Serialize)]
struct ConvexResult {
    qo: String,
    convexity: quasiord::poset::Decision,
    #[serde(skip_serializing_if = "Option::is_none")]
    qcomp: Option<quasiord::poset::QcompReport>,
}

pub fn cmd_convex(ideal: &str, ids: &[String], cfg: &RunConfig) -> Result<Outcome, CliError> {
    let entries = select(ids, cfg)?;
    let ring = cfg.ring.or_else(|| entries.first().map(|e| e.ring())).ok_or_else(|| {
        CliError::Usage("--ring or at least one id is required".into())
    })?;
    let q = parse_ideal(ring, ideal)?;
    let u = cfg.universe(ring)?;
    let mut results = Vec::new();
    for e in &entries {
        if e.ring() != ring {
            return Err(CliError::Usage(format!("{} is not on {ring}", e.id())));
        }
        let convexity = match convexity_check(&q, e, &u) {
            Ok(d) => d,
            Err(err) => return failed("convex", cfg, err),
        };
        let qcomp = if q.is_prime() {
            match qcomp_equivalence(e, &q, &u) {
                Ok(r) => Some(r),
                Err(err) => return failed("convex", cfg, err),
            }
        } else {
            None
        };
        eprintln!("{} {q}-convex: {}", e.id(), if convexity.is_refuted() { "refuted" } else { "not refuted" });
        results.push(ConvexResult {
            qo: e.id().to_string(),
            convexity,
            qcomp,
        });
    }
    let passed = results.iter().all(|r| r.qcomp.as_ref().is_none_or(|c| c.agree));
    Ok(Outcome::plain(Report::new("convex", cfg, passed, results)?))
}

#[derive(Serialize)]
struct PropertyResult {
    qo: String,
    kind: Kind,
    #[serde(flatten)]
    verdict: Verdict,
}

pub fn cmd_property(property: Property, ids: &[String], cfg: &RunConfig) -> Result<Outcome, CliError> {
    let entries = select(ids, cfg)?;
    let mut results = Vec::new();
    let mut passed = true;
    for e in &entries {
        let u = cfg.universe(e.ring())?;
        let nv = node_verdicts(std::slice::from_ref(e), &u).remove(0);
        passed &= nv.recheck(e) && nv.manis_implies_special();
        let verdict = nv.get(property).clone();
        let shown = match verdict.holds() {
            Some(true) => "holds",
            Some(false) => "fails",
            None => "unknown",
        };
        eprintln!("{} {}: {shown}", e.id(), command_name(property));
        results.push(PropertyResult {
            qo: e.id().to_string(),
            kind: nv.kind,
            verdict,
        });
    }
    Ok(Outcome::plain(Report::new(command_name(property), cfg, passed, results)?))
}

fn command_name(p: Property) -> &'static str {
    match p {
        Property::Special => "special",
        Property::Manis => "manis",
    }
}
