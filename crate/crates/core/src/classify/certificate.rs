//! The structure certificate and its flat JSON record.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{FieldDescriptor, Irreducibility, Polynomial, Scalar, Subspace, Vector};

pub const CERTIFICATE_SCHEMA: &str = "minnon-cert/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Hypothesis,
    NonnilpotentElement,
    FittingDecomposition,
    XSquaredInN,
    NL1Annihilate,
    ACubedInLeib,
    Nilradical,
    CompanionBasis,
    C0Nonzero,
    NFormula,
    Irreducibility,
    Dichotomy,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Hypothesis => "hypothesis",
            Stage::NonnilpotentElement => "nonnilpotent_element",
            Stage::FittingDecomposition => "fitting_decomposition",
            Stage::XSquaredInN => "x_squared_in_n",
            Stage::NL1Annihilate => "n_l1_annihilate",
            Stage::ACubedInLeib => "a_cubed_in_leib",
            Stage::Nilradical => "nilradical",
            Stage::CompanionBasis => "companion_basis",
            Stage::C0Nonzero => "c0_nonzero",
            Stage::NFormula => "n_formula",
            Stage::Irreducibility => "irreducibility",
            Stage::Dichotomy => "dichotomy",
        }
    }
}

/// How `L₁` was obtained from the Fitting decomposition of `ℓ_x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FittingMode {
    /// The one-component of `ℓ_x` on `L` already meets `N` trivially.
    Direct,
    /// The one-component of `ℓ_x̄` on `L/N`, lifted through the complement section.
    ModuloN,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dichotomy {
    Cyclic { generator: Vector },
    LeibInN,
    Violated,
}

impl Dichotomy {
    pub fn label(&self) -> &'static str {
        match self {
            Dichotomy::Cyclic { .. } => "cyclic",
            Dichotomy::LeibInN => "leib_in_n",
            Dichotomy::Violated => "violated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinNonCertificate {
    pub field: FieldDescriptor,
    pub x: Vector,
    pub x_squared_in_n: bool,
    pub n: Subspace,
    pub l1: Subspace,
    pub f: Subspace,
    pub a: Subspace,
    pub leib: Subspace,
    pub companion_basis: Vec<Vector>,
    /// `c₀, …, c_k` with `x·a_k = Σ c_i a_i`.
    pub c: Vec<Scalar>,
    pub p: Polynomial,
    pub c0_nonzero: bool,
    pub p_irreducible: Irreducibility,
    pub n_formula_holds: bool,
    pub a_is_nilradical: bool,
    pub a_cubed_in_leib: bool,
    pub dichotomy: Dichotomy,
    pub decomposition_ok: bool,
    pub fitting_mode: FittingMode,
    /// Whether the companion products hold exactly in `L` (not only modulo `N`).
    pub products_exact: bool,
    pub n_l1_product_zero: bool,
    pub m_self_normalizing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageFailure {
    pub stage: Stage,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremOutcome {
    Certified(Box<MinNonCertificate>),
    Failed(StageFailure),
}

impl TheoremOutcome {
    pub fn certificate(&self) -> Option<&MinNonCertificate> {
        match self {
            TheoremOutcome::Certified(c) => Some(c),
            TheoremOutcome::Failed(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&StageFailure> {
        match self {
            TheoremOutcome::Certified(_) => None,
            TheoremOutcome::Failed(f) => Some(f),
        }
    }
}

/// Flat JSON form: vectors and subspace bases are lists of scalar strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateRecord {
    pub schema: String,
    pub field: String,
    pub x: Vec<String>,
    pub x_squared_in_n: bool,
    pub n: Vec<Vec<String>>,
    pub l1: Vec<Vec<String>>,
    pub f: Vec<Vec<String>>,
    pub a: Vec<Vec<String>>,
    pub leib: Vec<Vec<String>>,
    pub companion_basis: Vec<Vec<String>>,
    pub c: Vec<String>,
    pub p: Vec<String>,
    pub c0_nonzero: bool,
    pub p_irreducible: String,
    pub p_factor: Option<Vec<String>>,
    pub p_inconclusive_reason: Option<String>,
    pub n_formula_holds: bool,
    pub a_is_nilradical: bool,
    pub a_cubed_in_leib: bool,
    pub dichotomy: String,
    pub cyclic_generator: Option<Vec<String>>,
    pub decomposition_ok: bool,
    pub fitting_mode: FittingMode,
    pub products_exact: bool,
    pub n_l1_product_zero: bool,
    pub m_self_normalizing: bool,
}

fn row_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn subspace_rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors().iter().map(|r| row_strings(r)).collect()
}

fn parse_row(field: FieldDescriptor, row: &[String]) -> Result<Vector> {
    row.iter().map(|t| Scalar::parse(field, t)).collect()
}

fn parse_subspace(field: FieldDescriptor, dim: usize, rows: &[Vec<String>]) -> Result<Subspace> {
    let rows: Vec<Vector> = rows.iter().map(|r| parse_row(field, r)).collect::<Result<_>>()?;
    let s = Subspace::span(field, dim, &rows)?;
    if s.dim() != rows.len() {
        return Err(Error::Parse("subspace rows are not independent".into()));
    }
    Ok(s)
}

impl MinNonCertificate {
    pub fn to_record(&self) -> CertificateRecord {
        let (p_factor, reason) = match &self.p_irreducible {
            Irreducibility::Reducible { factor } => (Some(row_strings(factor.coefficients())), None),
            Irreducibility::Inconclusive { reason } => (None, Some(reason.clone())),
            Irreducibility::Irreducible => (None, None),
        };
        CertificateRecord {
            schema: CERTIFICATE_SCHEMA.to_string(),
            field: self.field.to_string(),
            x: row_strings(&self.x),
            x_squared_in_n: self.x_squared_in_n,
            n: subspace_rows(&self.n),
            l1: subspace_rows(&self.l1),
            f: subspace_rows(&self.f),
            a: subspace_rows(&self.a),
            leib: subspace_rows(&self.leib),
            companion_basis: self.companion_basis.iter().map(|v| row_strings(v)).collect(),
            c: row_strings(&self.c),
            p: row_strings(self.p.coefficients()),
            c0_nonzero: self.c0_nonzero,
            p_irreducible: self.p_irreducible.label().to_string(),
            p_factor,
            p_inconclusive_reason: reason,
            n_formula_holds: self.n_formula_holds,
            a_is_nilradical: self.a_is_nilradical,
            a_cubed_in_leib: self.a_cubed_in_leib,
            dichotomy: self.dichotomy.label().to_string(),
            cyclic_generator: match &self.dichotomy {
                Dichotomy::Cyclic { generator } => Some(row_strings(generator)),
                _ => None,
            },
            decomposition_ok: self.decomposition_ok,
            fitting_mode: self.fitting_mode,
            products_exact: self.products_exact,
            n_l1_product_zero: self.n_l1_product_zero,
            m_self_normalizing: self.m_self_normalizing,
        }
    }

    pub fn from_record(r: &CertificateRecord) -> Result<MinNonCertificate> {
        if r.schema != CERTIFICATE_SCHEMA {
            return Err(Error::Parse(format!("unknown certificate schema {:?}", r.schema)));
        }
        let field = FieldDescriptor::parse(&r.field)?;
        let x = parse_row(field, &r.x)?;
        let dim = x.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let poly = |coeffs: &[String]| -> Result<Polynomial> {
            let p = Polynomial::new(field, parse_row(field, coeffs)?)?;
            if p.coefficients().len() != coeffs.len() {
                return Err(Error::Parse("polynomial has trailing zero coefficients".into()));
            }
            Ok(p)
        };
        let p_irreducible = match (r.p_irreducible.as_str(), &r.p_factor, &r.p_inconclusive_reason) {
            ("irreducible", None, None) => Irreducibility::Irreducible,
            ("reducible", Some(factor), None) => Irreducibility::Reducible { factor: poly(factor)? },
            ("inconclusive", None, Some(reason)) => Irreducibility::Inconclusive { reason: reason.clone() },
            (other, _, _) => return Err(Error::Parse(format!("inconsistent irreducibility entry {other:?}"))),
        };
        let dichotomy = match (r.dichotomy.as_str(), &r.cyclic_generator) {
            ("cyclic", Some(g)) => Dichotomy::Cyclic {
                generator: parse_row(field, g)?,
            },
            ("leib_in_n", None) => Dichotomy::LeibInN,
            ("violated", None) => Dichotomy::Violated,
            (other, _) => return Err(Error::Parse(format!("inconsistent dichotomy entry {other:?}"))),
        };
        let companion_basis: Vec<Vector> = r.companion_basis.iter().map(|v| parse_row(field, v)).collect::<Result<_>>()?;
        let vectors = companion_basis.iter().chain(std::iter::once(&x));
        if vectors.clone().any(|v| v.len() != dim) {
            return Err(Error::Parse("vector length differs from the dimension".into()));
        }
        if let Dichotomy::Cyclic { generator } = &dichotomy {
            if generator.len() != dim {
                return Err(Error::Parse("generator length differs from the dimension".into()));
            }
        }
        Ok(MinNonCertificate {
            field,
            x,
            x_squared_in_n: r.x_squared_in_n,
            n: parse_subspace(field, dim, &r.n)?,
            l1: parse_subspace(field, dim, &r.l1)?,
            f: parse_subspace(field, dim, &r.f)?,
            a: parse_subspace(field, dim, &r.a)?,
            leib: parse_subspace(field, dim, &r.leib)?,
            companion_basis,
            c: parse_row(field, &r.c)?,
            p: poly(&r.p)?,
            c0_nonzero: r.c0_nonzero,
            p_irreducible,
            n_formula_holds: r.n_formula_holds,
            a_is_nilradical: r.a_is_nilradical,
            a_cubed_in_leib: r.a_cubed_in_leib,
            dichotomy,
            decomposition_ok: r.decomposition_ok,
            fitting_mode: r.fitting_mode,
            products_exact: r.products_exact,
            n_l1_product_zero: r.n_l1_product_zero,
            m_self_normalizing: r.m_self_normalizing,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("record serializes")
    }

    pub fn from_json(text: &str) -> Result<MinNonCertificate> {
        let record: CertificateRecord = serde_json::from_str(text)?;
        Self::from_record(&record)
    }
}
