//! The standard, chain and cyclic families, and the structure verifier.

mod certificate;
mod construct;
mod verify;

pub use certificate::{
    CertificateRecord, Dichotomy, FittingMode, MinNonCertificate, Stage, StageFailure, TheoremOutcome,
    CERTIFICATE_SCHEMA,
};
pub use construct::{construct_chain, construct_cyclic, construct_standard, StandardAlgebra};
pub use verify::{check_remark_products, verify_theorem};
