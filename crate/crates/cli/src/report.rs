use serde::Serialize;
use sha2::{Digest, Sha256};

use leibniz_core::classify::{check_remark_products, verify_theorem, CertificateRecord, StageFailure, TheoremOutcome};
use leibniz_core::exactmath::Subspace;
use leibniz_core::format::format_row;
use leibniz_core::leibcore::{LeibnizAlgebra, NilpotencyMethod, SeriesKind, SeriesReport};
use leibniz_core::oracle::{self, Census, EnumerationBudget, MinimalityOutcome};
use leibniz_core::Result;

pub const REPORT_SCHEMA: &str = "leibniz-report/1";

#[derive(Debug, Serialize)]
pub struct Flags {
    pub lie: bool,
    pub nilpotent: bool,
    pub solvable: bool,
}

#[derive(Debug, Serialize)]
pub struct SeriesSummary {
    pub dims: Vec<usize>,
    pub stabilized_at: usize,
    pub terminates_at_zero: bool,
    pub last: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Series {
    pub lower_central: SeriesSummary,
    pub derived: SeriesSummary,
}

#[derive(Debug, Serialize)]
pub struct OracleSection {
    pub budget: String,
    pub minimality: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<Census>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_failure: Option<String>,
    pub nilradical: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub input_sha256: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub seed: u64,
    pub validation: &'static str,
    pub flags: Flags,
    pub leib_kernel: Vec<String>,
    pub series: Series,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_failure: Option<StageFailure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remark_products: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn subspace_rows(s: &Subspace) -> Vec<String> {
    s.basis_vectors().iter().map(|r| format_row(r)).collect()
}

fn summarize(s: &SeriesReport) -> SeriesSummary {
    SeriesSummary {
        dims: s.dims(),
        stabilized_at: s.stabilized_at,
        terminates_at_zero: s.terminates_at_zero,
        last: subspace_rows(s.last()),
    }
}

pub fn oracle_section(a: &LeibnizAlgebra, budget: EnumerationBudget) -> Result<OracleSection> {
    let outcome = oracle::minimality_check(a, budget)?;
    let nilradical = subspace_rows(&oracle::bruteforce_nilradical(a, budget)?);
    let mut section = OracleSection {
        budget: budget.max_subspaces.to_string(),
        minimality: String::new(),
        census: None,
        witness: None,
        hypothesis_failure: None,
        nilradical,
    };
    match outcome {
        MinimalityOutcome::Pass { census } => {
            section.minimality = "pass".into();
            section.census = Some(census);
        }
        MinimalityOutcome::Fail { witness, census } => {
            section.minimality = "fail".into();
            section.census = Some(census);
            section.witness = Some(subspace_rows(&witness));
        }
        MinimalityOutcome::HypothesisFail { reason } => {
            section.minimality = "hypothesis_fail".into();
            section.hypothesis_failure = Some(reason);
        }
    }
    Ok(section)
}

/// Full analysis of a validated algebra. Deterministic in its inputs.
pub fn analyze(a: &LeibnizAlgebra, input: &[u8], seed: u64, oracle_budget: Option<EnumerationBudget>) -> Result<Report> {
    let lower = a.series(SeriesKind::LowerCentral, None)?;
    let derived = a.series(SeriesKind::Derived, None)?;
    let flags = Flags {
        lie: a.is_lie(),
        nilpotent: a.is_nilpotent(None, NilpotencyMethod::Series)?,
        solvable: derived.terminates_at_zero,
    };
    let outcome = verify_theorem(a, seed)?;
    let (certificate, certificate_failure, remark_products) = match &outcome {
        TheoremOutcome::Certified(c) => (Some(c.to_record()), None, Some(check_remark_products(a, c)?)),
        TheoremOutcome::Failed(f) => (None, Some(f.clone()), None),
    };
    let oracle = match oracle_budget {
        Some(budget) if a.field().is_finite() => Some(oracle_section(a, budget)?),
        _ => None,
    };
    Ok(Report {
        schema: REPORT_SCHEMA,
        input_sha256: sha256_hex(input),
        field: a.field().to_string(),
        dim: a.dim(),
        basis: a.labels().to_vec(),
        seed,
        validation: "pass",
        flags,
        leib_kernel: subspace_rows(&a.leibniz_kernel()),
        series: Series {
            lower_central: summarize(&lower),
            derived: summarize(&derived),
        },
        certificate,
        certificate_failure,
        remark_products,
        oracle,
        timing_ms: None,
    })
}

fn rows_text(rows: &[String]) -> String {
    if rows.is_empty() {
        "0".to_string()
    } else {
        format!("span{{{}}}", rows.iter().map(|r| format!("({r})")).collect::<Vec<_>>().join(", "))
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("Algebra: dim {} over {} [{}]", self.dim, self.field, self.basis.join(", ")));
        out.push(format!("Input sha256: {}", self.input_sha256));
        out.push("Leibniz identity: PASS".to_string());
        out.push(format!(
            "Lie: {}  Nilpotent: {}  Solvable: {}",
            self.flags.lie, self.flags.nilpotent, self.flags.solvable
        ));
        out.push(format!("Leib(L): {}", rows_text(&self.leib_kernel)));
        let s = &self.series;
        out.push(format!("Lower central series dims: {:?}", s.lower_central.dims));
        out.push(format!("Derived series dims: {:?}", s.derived.dims));
        if let Some(c) = &self.certificate {
            out.push("Structure certificate: CERTIFIED".to_string());
            out.push(format!("  x = ({})", c.x.join(",")));
            out.push(format!("  N = {}", rows_text(&join_rows(&c.n))));
            out.push(format!("  L1 = {}", rows_text(&join_rows(&c.l1))));
            out.push(format!("  F = {}", rows_text(&join_rows(&c.f))));
            out.push(format!("  A = {}", rows_text(&join_rows(&c.a))));
            out.push(format!("  companion basis = {}", rows_text(&join_rows(&c.companion_basis))));
            out.push(format!("  c = ({})   p coefficients (constant first) = ({})", c.c.join(","), c.p.join(",")));
            out.push(format!("  p irreducible: {}", c.p_irreducible));
            if let Some(reason) = &c.p_inconclusive_reason {
                out.push(format!("    open clause: {reason}"));
            }
            out.push(format!("  fitting mode: {:?}", c.fitting_mode));
            let generator = c.cyclic_generator.as_ref().map(|g| format!(" generator ({})", g.join(","))).unwrap_or_default();
            out.push(format!("  dichotomy: {}{generator}", c.dichotomy));
            out.push(format!("  M = N + F self-normalizing: {}", c.m_self_normalizing));
            if let Some(r) = self.remark_products {
                out.push(format!("  remark products hold: {r}"));
            }
        }
        if let Some(f) = &self.certificate_failure {
            out.push(format!("Structure certificate: FAILED at {} ({})", f.stage.name(), f.evidence));
        }
        if let Some(o) = &self.oracle {
            out.push(format!("Oracle minimality: {}", o.minimality.to_uppercase()));
            if let Some(c) = &o.census {
                out.push(format!(
                    "  subspaces {}  subalgebras {}  proper {}  nilpotent proper {}",
                    c.subspaces, c.subalgebras, c.proper_subalgebras, c.nilpotent_proper_subalgebras
                ));
            }
            if let Some(w) = &o.witness {
                out.push(format!("  witness: {}", rows_text(w)));
            }
            out.push(format!("Oracle nilradical: {}", rows_text(&o.nilradical)));
        }
        if let Some(ms) = self.timing_ms {
            out.push(format!("Elapsed: {ms} ms"));
        }
        out.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

fn join_rows(rows: &[Vec<String>]) -> Vec<String> {
    rows.iter().map(|r| r.join(",")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::format::parse_algebra_json;

    const EX1: &str = r#"{"field": "Q", "dim": 2, "products": [
        {"left": 0, "right": 0, "result": {"1": "1"}}, {"left": 0, "right": 1, "result": {"1": "1"}}]}"#;

    #[test]
    fn digest_matches_known_value() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn analysis_is_deterministic() {
        let a = parse_algebra_json(EX1).unwrap();
        let one = analyze(&a, EX1.as_bytes(), 0, None).unwrap();
        let two = analyze(&a, EX1.as_bytes(), 0, None).unwrap();
        assert_eq!(one.to_json(), two.to_json());
        assert_eq!(one.to_text(), two.to_text());
        assert!(one.certificate.is_some());
        assert!(!one.flags.nilpotent && one.flags.solvable);
    }
}
