//! Machine-readable output documents for the CLI: a versioned JSON schema
//! plus a plain-text rendering. For a fixed (command, inputs, version) the
//! JSON payload is byte-deterministic; timing goes to stderr, never into
//! the document.

use serde::Serialize;

use crate::coeff::SparsePoly;
use crate::rootsys::{LieType, RootSystem};
use crate::schubop::ClassVector;
use crate::verify::{CoeffRecord, CsmReport, IdentityReport};
use crate::weyl::{permutation_string, WeylElement};

pub const SCHEMA_VERSION: u32 = 1;

const CONVENTIONS_NOTE: &str = "Bourbaki numbering; roots in simple-root coordinates, \
weights in fundamental-weight coordinates; polynomial variables a1..ar are the simple roots; \
terms sorted by length then canonical reduced word";

#[derive(Debug, Serialize)]
pub struct Metadata {
    pub command: String,
    pub lie_type: String,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parabolic: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_length: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivariant: Option<bool>,
    pub version: String,
    pub conventions: String,
}

impl Metadata {
    pub fn new(command: &str, rs: &RootSystem) -> Metadata {
        Metadata {
            command: command.to_string(),
            lie_type: rs.lie_type().to_string(),
            rank: rs.rank(),
            element: None,
            parabolic: None,
            max_length: None,
            equivariant: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            conventions: CONVENTIONS_NOTE.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MonomialRecord {
    pub exponents: Vec<u16>,
    pub coeff: String,
}

#[derive(Debug, Serialize)]
pub struct PolyRecord {
    pub text: String,
    pub monomials: Vec<MonomialRecord>,
}

#[derive(Debug, Serialize)]
pub struct TermRecord {
    pub word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perm: Option<String>,
    pub length: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<PolyRecord>,
}

#[derive(Debug, Serialize)]
pub struct CounterexampleRecord {
    pub w: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_perm: Option<String>,
    pub u: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_perm: Option<String>,
    pub coeff: String,
}

#[derive(Debug, Serialize)]
pub struct PositivitySection {
    pub scope: String,
    pub equivariant: bool,
    pub cells: u64,
    pub coefficients: u64,
    pub verdict: String,
    pub counterexamples: Vec<CounterexampleRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub records: Vec<CounterexampleRecord>,
}

#[derive(Debug, Serialize)]
pub struct IdentityRecord {
    pub name: String,
    pub samples: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct IdentitiesSection {
    pub seed: u64,
    pub samples: u64,
    pub verdict: String,
    pub checks: Vec<IdentityRecord>,
}

/// The complete CLI output document.
#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub schema_version: u32,
    pub metadata: Metadata,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<TermRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positivity: Option<PositivitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentitiesSection>,
}

fn perm_of(rs: &RootSystem, w: &WeylElement) -> Option<String> {
    if rs.lie_type() == LieType::A && rs.rank() <= 8 {
        w.to_permutation(rs).ok().map(|p| permutation_string(&p))
    } else {
        None
    }
}

pub fn terms_from_int(rs: &RootSystem, class: &ClassVector<i64>) -> Vec<TermRecord> {
    class
        .sorted_terms()
        .into_iter()
        .map(|(w, c)| TermRecord {
            word: w.reduced_word(rs).to_string(),
            perm: perm_of(rs, &w),
            length: w.length(),
            coeff: Some(c.to_string()),
            poly: None,
        })
        .collect()
}

pub fn terms_from_poly(rs: &RootSystem, class: &ClassVector<SparsePoly>) -> Vec<TermRecord> {
    class
        .sorted_terms()
        .into_iter()
        .map(|(w, c)| {
            let monomials = c
                .terms()
                .map(|(m, coeff)| MonomialRecord {
                    exponents: m.padded(rs.rank()),
                    coeff: coeff.to_string(),
                })
                .collect();
            TermRecord {
                word: w.reduced_word(rs).to_string(),
                perm: perm_of(rs, &w),
                length: w.length(),
                coeff: None,
                poly: Some(PolyRecord {
                    text: c.text(),
                    monomials,
                }),
            }
        })
        .collect()
}

fn counterexample_record(rs: &RootSystem, rec: &CoeffRecord) -> CounterexampleRecord {
    CounterexampleRecord {
        w: rec.w.reduced_word(rs).to_string(),
        w_perm: perm_of(rs, &rec.w),
        u: rec.u.reduced_word(rs).to_string(),
        u_perm: perm_of(rs, &rec.u),
        coeff: rec.coeff.clone(),
    }
}

pub fn positivity_section(rs: &RootSystem, report: &CsmReport) -> PositivitySection {
    PositivitySection {
        scope: report.scope.clone(),
        equivariant: report.equivariant,
        cells: report.cells,
        coefficients: report.coefficients,
        verdict: if report.all_positive() {
            "all-positive".to_string()
        } else {
            "counterexamples-found".to_string()
        },
        counterexamples: report
            .counterexamples
            .iter()
            .map(|r| counterexample_record(rs, r))
            .collect(),
        records: report
            .records
            .iter()
            .map(|r| counterexample_record(rs, r))
            .collect(),
    }
}

pub fn identities_section(report: &IdentityReport) -> IdentitiesSection {
    IdentitiesSection {
        seed: report.seed,
        samples: report.checks.first().map_or(0, |c| c.samples),
        verdict: if report.all_hold() {
            "all-identities-hold".to_string()
        } else {
            "violations-found".to_string()
        },
        checks: report
            .checks
            .iter()
            .map(|c| IdentityRecord {
                name: c.name.to_string(),
                samples: c.samples,
                failures: c.failures,
                witnesses: c.witnesses.clone(),
            })
            .collect(),
    }
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Plain-text rendering: one line per term (tab-separated word, perm,
    /// length, coefficient), or a verification summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(terms) = &self.terms {
            for t in terms {
                let coeff = match (&t.coeff, &t.poly) {
                    (Some(c), _) => c.clone(),
                    (None, Some(p)) => p.text.clone(),
                    _ => String::new(),
                };
                match &t.perm {
                    Some(p) => {
                        out.push_str(&format!("{}\t{}\t{}\t{}\n", t.word, p, t.length, coeff))
                    }
                    None => out.push_str(&format!("{}\t{}\t{}\n", t.word, t.length, coeff)),
                }
            }
        }
        if let Some(pos) = &self.positivity {
            out.push_str(&format!(
                "positivity {} {}{} scope={} cells={} coefficients={} verdict={}\n",
                self.metadata.command,
                self.metadata.lie_type,
                self.metadata.rank,
                pos.scope,
                pos.cells,
                pos.coefficients,
                pos.verdict
            ));
            for c in &pos.counterexamples {
                out.push_str(&format!(
                    "counterexample w={} u={} coeff={}\n",
                    c.w, c.u, c.coeff
                ));
            }
        }
        if let Some(idn) = &self.identities {
            for c in &idn.checks {
                let status = if c.failures == 0 { "ok" } else { "FAILED" };
                out.push_str(&format!(
                    "identity {}: {} ({} samples, {} failures)\n",
                    c.name, status, c.samples, c.failures
                ));
                for w in &c.witnesses {
                    out.push_str(&format!("  witness: {w}\n"));
                }
            }
            out.push_str(&format!("verdict: {}\n", idn.verdict));
        }
        out
    }
}
