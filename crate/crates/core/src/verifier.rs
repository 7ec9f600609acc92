//! Verification of the generator-image pattern of the composite
//! homomorphisms built from exchange loops and detection projections.
//!
//! For binary W-partitions λ and μ, the composite sends the generator at
//! v ∈ W to the family of words obtained by running the exchange loop of
//! λ(v) and projecting the trajectory of the pair μ(w) at each w ∈ W. The
//! verifier computes that |W|×|W| word matrix and checks it against the
//! expected case pattern: nontrivial exactly on diagonal entries whose pairs
//! agree, trivial everywhere else. All checked properties are invariant
//! under conjugation, so basepoint-change conjugators are never
//! materialized.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moves::{build_phi_lambda, q_project, PhiLambda};
use crate::partitions::BinaryWPartition;
use crate::words::ThetaWord;
use indexmap::IndexMap;
use serde::Serialize;

/// How one matrix entry is classified, which fixes the expected verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EntryCase {
    /// Generator and detection vertices differ: the loop never enters the
    /// detection star, so the word must be empty.
    #[serde(rename = "v≠w")]
    DifferentVertices,
    /// Same vertex, λ(v) = μ(v): the exchange is fully tracked and must give
    /// the nontrivial detection word.
    #[serde(rename = "λ=μ")]
    EqualPairs,
    /// Same vertex, one shared index: the single tracked visitor sweeps all
    /// three arms once, a trivial word.
    #[serde(rename = "overlap1")]
    OverlapOne,
    /// Same vertex, disjoint pairs: neither tracked particle moves.
    #[serde(rename = "disjoint")]
    DisjointPairs,
}

impl EntryCase {
    pub fn label(self) -> &'static str {
        match self {
            EntryCase::DifferentVertices => "v≠w",
            EntryCase::EqualPairs => "λ=μ",
            EntryCase::OverlapOne => "overlap1",
            EntryCase::DisjointPairs => "disjoint",
        }
    }

    /// Whether the word in this case must be trivial.
    pub fn expect_trivial(self) -> bool {
        !matches!(self, EntryCase::EqualPairs)
    }

    fn classify(v: &str, w: &str, overlap: usize) -> EntryCase {
        if v != w {
            EntryCase::DifferentVertices
        } else {
            match overlap {
                2 => EntryCase::EqualPairs,
                1 => EntryCase::OverlapOne,
                _ => EntryCase::DisjointPairs,
            }
        }
    }
}

/// One entry of the component-word matrix.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixEntry {
    /// Vertex whose exchange loop was run (the generator index).
    pub v: String,
    /// Vertex where the tracked pair was projected.
    pub w: String,
    pub case: EntryCase,
    /// Word text form; `"1"` is the empty word.
    pub word: String,
    pub trivial: bool,
    pub expected_trivial: bool,
    pub matches: bool,
}

/// Per-claim outcomes. The two proposition verdicts are only meaningful for
/// the partition relation they describe, and are `None` otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct Verdicts {
    /// λ = μ only: every diagonal word nontrivial and every off-diagonal
    /// word trivial, certifying an injection of the free-abelian group on W.
    pub prop1_injective: Option<bool>,
    /// Disjoint λ, μ only: every word trivial, certifying the composite
    /// kills all generators.
    pub prop2_trivial: Option<bool>,
    /// Every entry matched its case expectation.
    pub lemma_cases: bool,
}

/// The full outcome of verifying one (λ, μ) pair.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    #[serde(rename = "W")]
    pub w_set: Vec<String>,
    pub lambda: String,
    pub mu: String,
    pub entries: Vec<MatrixEntry>,
    pub verdicts: Verdicts,
    pub certificate: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn entry(&self, v: &str, w: &str) -> Option<&MatrixEntry> {
        self.entries.iter().find(|e| e.v == v && e.w == w)
    }

    pub fn all_match(&self) -> bool {
        self.verdicts.lemma_cases
    }
}

fn graph_label(g: &Graph) -> String {
    format!("{} vertices, {} edges", g.vertex_count(), g.edge_count())
}

/// The word detected at `w` when the exchange loop of λ(v) runs and the
/// pair μ(w) is tracked.
pub fn component_word(
    g: &Graph,
    lam: &BinaryWPartition,
    mu: &BinaryWPartition,
    v: &str,
    w: &str,
) -> Result<ThetaWord> {
    let phi = build_phi_lambda(g, lam)?;
    component_word_with(g, &phi, mu, v, w)
}

fn component_word_with(
    g: &Graph,
    phi: &PhiLambda,
    mu: &BinaryWPartition,
    v: &str,
    w: &str,
) -> Result<ThetaWord> {
    let spec = phi.loop_at(v)?;
    q_project(g, spec, mu.pair(w)?, w)
}

/// Computes the full component-word matrix for (λ, μ) and grades it against
/// the expected case pattern.
pub fn verify_proposition(
    g: &Graph,
    lam: &BinaryWPartition,
    mu: &BinaryWPartition,
) -> Result<VerificationReport> {
    let w_set: Vec<String> = lam.vertices().map(str::to_string).collect();
    let mu_set: Vec<String> = mu.vertices().map(str::to_string).collect();
    if w_set != mu_set {
        return Err(Error::InvalidPartition(
            "λ and μ must be over the same ordered vertex set".into(),
        ));
    }

    let phi = build_phi_lambda(g, lam)?;
    let mut entries = Vec::with_capacity(w_set.len() * w_set.len());
    for v in &w_set {
        for w in &w_set {
            let word = component_word_with(g, &phi, mu, v, w)?;
            let case = EntryCase::classify(v, w, lam.overlap(v, mu, w)?);
            let trivial = word.is_trivial();
            let expected_trivial = case.expect_trivial();
            entries.push(MatrixEntry {
                v: v.clone(),
                w: w.clone(),
                case,
                word: word.to_string(),
                trivial,
                expected_trivial,
                matches: trivial == expected_trivial,
            });
        }
    }

    let lemma_cases = entries.iter().all(|e| e.matches);
    let lam_eq_mu = w_set
        .iter()
        .all(|v| lam.pair(v).unwrap() == mu.pair(v).unwrap());
    let diag_nontrivial_off_trivial = entries
        .iter()
        .all(|e| if e.v == e.w { !e.trivial } else { e.trivial });
    let prop1_injective = lam_eq_mu.then_some(diag_nontrivial_off_trivial);
    let prop2_trivial = lam
        .disjoint(mu)?
        .then(|| entries.iter().all(|e| e.trivial));

    let mut certificate = vec![
        "Certified through generator images only: each checked property (triviality, \
         nontriviality hence infinite order) is conjugation-invariant, so basepoint-change \
         conjugators are omitted."
            .to_string(),
    ];
    if let Some(ok) = prop1_injective {
        certificate.push(if ok {
            "λ = μ: every diagonal word is a nontrivial element of a free group and therefore \
             has infinite order (free groups are torsion-free); off-diagonal words are trivial, \
             so the generators map to independent infinite-order elements, one per free factor — \
             an injection of the free-abelian group on W."
                .to_string()
        } else {
            "λ = μ but the matrix does not show the injectivity pattern.".to_string()
        });
    }
    if let Some(ok) = prop2_trivial {
        certificate.push(if ok {
            "λ ∩ μ = ∅: every component word is trivial, so the composite homomorphism kills \
             every generator."
                .to_string()
        } else {
            "λ ∩ μ = ∅ but some component word is nontrivial.".to_string()
        });
    }
    for e in entries.iter().filter(|e| !e.matches) {
        certificate.push(format!(
            "violation at ({}, {}): case {} expected {} word, got `{}`",
            e.v,
            e.w,
            e.case.label(),
            if e.expected_trivial { "a trivial" } else { "a nontrivial" },
            e.word
        ));
    }

    Ok(VerificationReport {
        graph: graph_label(g),
        w_set,
        lambda: lam.to_string(),
        mu: mu.to_string(),
        entries,
        verdicts: Verdicts {
            prop1_injective,
            prop2_trivial,
            lemma_cases,
        },
        certificate,
    })
}

/// Aggregate outcome of verifying every ordered partition pair over W.
#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub graph: String,
    #[serde(rename = "W")]
    pub w_set: Vec<String>,
    pub k: usize,
    pub partition_count: usize,
    pub ordered_pairs: usize,
    /// Ordered pairs by partition relation.
    pub pairs_equal: usize,
    pub pairs_disjoint: usize,
    pub pairs_mixed: usize,
    /// Entry counts by case label across all reports.
    pub case_counts: IndexMap<String, usize>,
    pub violations: Vec<VerificationReport>,
    pub all_match: bool,
}

impl VerifySummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// Default cap on |W| for exhaustive runs; the pair count grows as
/// ((2d)!/2^d)².
pub const DEFAULT_VERIFY_ALL_LIMIT: usize = 4;

/// Runs [`verify_proposition`] over all ordered pairs of binary
/// W-partitions and tallies the outcomes. Reports that fail their expected
/// pattern are returned in full.
pub fn verify_all(g: &Graph, w_set: &[String], limit: usize) -> Result<VerifySummary> {
    if w_set.len() > limit {
        return Err(Error::ResourceGuard {
            what: "exhaustive verification vertex set".into(),
            size: w_set.len(),
            cap: limit,
        });
    }
    let k = 2 * w_set.len();
    let all = BinaryWPartition::enumerate(k, w_set)?;
    let mut case_counts: IndexMap<String, usize> = IndexMap::new();
    let (mut pairs_equal, mut pairs_disjoint, mut pairs_mixed) = (0, 0, 0);
    let mut violations = Vec::new();

    for lam in &all {
        for mu in &all {
            let report = verify_proposition(g, lam, mu)?;
            for e in &report.entries {
                *case_counts.entry(e.case.label().to_string()).or_insert(0) += 1;
            }
            if report.verdicts.prop1_injective.is_some() {
                pairs_equal += 1;
            } else if report.verdicts.prop2_trivial.is_some() {
                pairs_disjoint += 1;
            } else {
                pairs_mixed += 1;
            }
            if !report.all_match() {
                violations.push(report);
            }
        }
    }

    Ok(VerifySummary {
        graph: graph_label(g),
        w_set: w_set.to_vec(),
        k,
        partition_count: all.len(),
        ordered_pairs: all.len() * all.len(),
        pairs_equal,
        pairs_disjoint,
        pairs_mixed,
        case_counts,
        all_match: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    const DETECTION_WORD: &str = "g23 g12 g31 g23 g12 g31";

    fn subdivided_h() -> Graph {
        library::h_graph().paper_subdivide().unwrap()
    }

    fn part(text: &str) -> BinaryWPartition {
        BinaryWPartition::parse(text).unwrap()
    }

    #[test]
    fn component_word_cases() {
        let g = subdivided_h();
        let lam = part("u:{1,2} w:{3,4}");

        // Fully shared pair at the same vertex: the detection word.
        let word = component_word(&g, &lam, &lam, "u", "u").unwrap();
        assert_eq!(word.to_string(), DETECTION_WORD);
        assert!(!word.is_trivial());

        // Different vertices: literally empty.
        let word = component_word(&g, &lam, &lam, "u", "w").unwrap();
        assert!(word.letters().is_empty());

        // One shared index: trivial.
        let mu = part("u:{1,3} w:{2,4}");
        let word = component_word(&g, &lam, &mu, "u", "u").unwrap();
        assert!(word.is_trivial());
        assert!(!word.letters().is_empty());
    }

    #[test]
    fn equal_partitions_certify_injectivity() {
        let g = subdivided_h();
        let lam = part("u:{1,2} w:{3,4}");
        let report = verify_proposition(&g, &lam, &lam).unwrap();
        assert_eq!(report.verdicts.prop1_injective, Some(true));
        assert_eq!(report.verdicts.prop2_trivial, None);
        assert!(report.verdicts.lemma_cases);
        assert_eq!(report.entry("u", "u").unwrap().case, EntryCase::EqualPairs);
        assert_eq!(
            report.entry("u", "w").unwrap().case,
            EntryCase::DifferentVertices
        );
        assert!(report
            .certificate
            .iter()
            .any(|line| line.contains("torsion-free")));
    }

    #[test]
    fn disjoint_partitions_certify_triviality() {
        let g = subdivided_h();
        let lam = part("u:{1,2} w:{3,4}");
        let mu = part("u:{2,3} w:{1,4}");
        assert!(lam.disjoint(&mu).unwrap());
        let report = verify_proposition(&g, &lam, &mu).unwrap();
        assert_eq!(report.verdicts.prop1_injective, None);
        assert_eq!(report.verdicts.prop2_trivial, Some(true));
        assert!(report.verdicts.lemma_cases);
        for e in &report.entries {
            assert!(e.trivial);
        }
    }

    #[test]
    fn pointwise_overlap_still_disjoint_as_partitions() {
        // Different matchings share no pair, so prop2 applies even though
        // the diagonal entries each share one index.
        let g = subdivided_h();
        let lam = part("u:{1,2} w:{3,4}");
        let mu = part("u:{1,3} w:{2,4}");
        let report = verify_proposition(&g, &lam, &mu).unwrap();
        assert_eq!(report.verdicts.prop1_injective, None);
        assert_eq!(report.verdicts.prop2_trivial, Some(true));
        assert!(report.verdicts.lemma_cases);
        assert_eq!(report.entry("u", "u").unwrap().case, EntryCase::OverlapOne);
        assert_eq!(report.entry("w", "w").unwrap().case, EntryCase::OverlapOne);
        assert!(report.entry("u", "u").unwrap().trivial);
    }

    #[test]
    fn swapped_assignment_is_neither_equal_nor_disjoint() {
        let g = subdivided_h();
        let lam = part("u:{1,2} w:{3,4}");
        let mu = part("u:{3,4} w:{1,2}");
        let report = verify_proposition(&g, &lam, &mu).unwrap();
        assert_eq!(report.verdicts.prop1_injective, None);
        assert_eq!(report.verdicts.prop2_trivial, None);
        assert!(report.verdicts.lemma_cases);
        assert_eq!(
            report.entry("u", "u").unwrap().case,
            EntryCase::DisjointPairs
        );
        assert!(report.entry("u", "u").unwrap().word == "1");
    }

    #[test]
    fn diagonal_word_is_graph_independent() {
        let lam2 = part("u:{1,2} w:{3,4}");
        for g in [
            subdivided_h(),
            library::theta_graph(3).paper_subdivide().unwrap(),
        ] {
            for v in ["u", "w"] {
                let word = component_word(&g, &lam2, &lam2, v, v).unwrap();
                assert_eq!(word.to_string(), DETECTION_WORD, "at {v}");
            }
        }
        let k4 = library::complete(4).paper_subdivide().unwrap();
        let lam = BinaryWPartition::new(vec![("v1", (1, 2)), ("v2", (3, 4))]).unwrap();
        let word = component_word(&k4, &lam, &lam, "v1", "v1").unwrap();
        assert_eq!(word.to_string(), DETECTION_WORD);
    }

    #[test]
    fn relabeling_particles_preserves_verdicts() {
        let g = subdivided_h();
        let lam = part("u:{1,2} w:{3,4}");
        let mu = part("u:{2,3} w:{1,4}");
        let base = verify_proposition(&g, &lam, &mu).unwrap();

        // Apply the cycle 1→2→3→4→1 to both partitions.
        let relabel = |p: &BinaryWPartition| {
            let mapped: Vec<(String, (usize, usize))> = p
                .pairs()
                .map(|(v, (a, b))| (v.to_string(), (a % 4 + 1, b % 4 + 1)))
                .collect();
            BinaryWPartition::new(mapped).unwrap()
        };
        let report = verify_proposition(&g, &relabel(&lam), &relabel(&mu)).unwrap();
        for (a, b) in base.entries.iter().zip(&report.entries) {
            assert_eq!(a.case, b.case);
            assert_eq!(a.trivial, b.trivial);
        }
    }

    #[test]
    fn verify_all_on_the_h_graph() {
        let g = subdivided_h();
        let w_set = vec!["u".to_string(), "w".to_string()];
        let summary = verify_all(&g, &w_set, DEFAULT_VERIFY_ALL_LIMIT).unwrap();
        assert_eq!(summary.partition_count, 6);
        assert_eq!(summary.ordered_pairs, 36);
        assert_eq!(summary.pairs_equal, 6);
        assert_eq!(summary.pairs_disjoint, 24);
        assert_eq!(summary.pairs_mixed, 6);
        assert!(summary.all_match);
        assert!(summary.violations.is_empty());
        let total: usize = summary.case_counts.values().sum();
        assert_eq!(total, 36 * 4);
    }

    #[test]
    fn verify_all_guards_large_vertex_sets() {
        let g = subdivided_h();
        let w_set: Vec<String> = ["a", "b", "c", "d", "e"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert!(matches!(
            verify_all(&g, &w_set, DEFAULT_VERIFY_ALL_LIMIT),
            Err(Error::ResourceGuard { .. })
        ));
    }

    #[test]
    fn report_serializes_with_case_labels() {
        let g = subdivided_h();
        let lam = part("u:{1,2} w:{3,4}");
        let report = verify_proposition(&g, &lam, &lam).unwrap();
        let json = report.to_json();
        assert!(json.contains("\"case\":\"λ=μ\""));
        assert!(json.contains("\"case\":\"v≠w\""));
        assert!(json.contains("\"prop1_injective\":true"));
        assert!(json.contains("\"W\":[\"u\",\"w\"]"));

        let mu = part("u:{1,3} w:{2,4}");
        let json = verify_proposition(&g, &lam, &mu).unwrap().to_json();
        assert!(json.contains("\"case\":\"overlap1\""));
        let mu = part("u:{3,4} w:{1,2}");
        let json = verify_proposition(&g, &lam, &mu).unwrap().to_json();
        assert!(json.contains("\"case\":\"disjoint\""));
    }
}
