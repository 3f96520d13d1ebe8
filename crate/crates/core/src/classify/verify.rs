//! Checks the structure forced on a minimal nonnilpotent solvable algebra,
//! stage by stage, and assembles a certificate.

use super::certificate::{Dichotomy, FittingMode, MinNonCertificate, Stage, StageFailure, TheoremOutcome};
use crate::error::{Error, Result};
use crate::exactmath::matrix::{axpy, zero_vector};
use crate::exactmath::{
    char_poly, companion_basis, fitting_split, is_nilpotent_operator, poly_irreducible, recurrence_polynomial,
    Irreducibility, Matrix, Subspace, Vector,
};
use crate::leibcore::{LeibnizAlgebra, NilpotencyMethod, Quotient};
use crate::structure::{find_nonnilpotent_element, fitting_wrt, is_cyclic, is_nilradical_codim1, CyclicSearch};

fn failed(stage: Stage, evidence: impl Into<String>) -> Result<TheoremOutcome> {
    Ok(TheoremOutcome::Failed(StageFailure {
        stage,
        evidence: evidence.into(),
    }))
}

fn rows(s: &Subspace) -> String {
    format!("{s:?}")
}

/// Data of the `ModuloN` route: the quotient, `ℓ_x̄`, and the one-component there.
struct QuotientRoute {
    quotient: Quotient,
    lx_bar: Matrix,
    one_bar: Subspace,
}

/// Runs the pipeline; the first stage that does not hold is reported.
pub fn verify_theorem(a: &LeibnizAlgebra, seed: u64) -> Result<TheoremOutcome> {
    let field = a.field();
    let dim = a.dim();

    if let Err(w) = a.validate_leibniz() {
        return failed(
            Stage::Hypothesis,
            format!("Leibniz identity fails on basis triple ({}, {}, {})", w.i, w.j, w.k),
        );
    }
    if !a.is_solvable(None)? {
        return failed(Stage::Hypothesis, "algebra is not solvable");
    }
    if a.is_nilpotent(None, NilpotencyMethod::Series)? {
        return failed(Stage::Hypothesis, "algebra is nilpotent");
    }

    let Some(u) = find_nonnilpotent_element(a, seed) else {
        return failed(Stage::NonnilpotentElement, "no candidate has a non-nilpotent left multiplication");
    };
    // Prefer an x inside the Fitting null component of ℓ_u, a Cartan candidate.
    let mut x = u.clone();
    for r in fitting_wrt(a, &u)?.null.basis_vectors() {
        if !is_nilpotent_operator(&a.left_mult_matrix(&r)?)? {
            x = r;
            break;
        }
    }

    let lx = a.left_mult_matrix(&x)?;
    let (_, l1_fitting) = fitting_split(&lx)?;
    let gen_x = a.subalgebra_closure(std::slice::from_ref(&x))?;
    let x_square = a.product_space(&gen_x, &gen_x)?;
    let gen_l1 = a.subalgebra_closure(&l1_fitting.basis_vectors())?;
    let n = a.product_space(&gen_l1, &gen_l1)?.sum(&x_square)?;
    if !a.is_ideal(&n)? {
        return failed(Stage::FittingDecomposition, format!("N = <L1>^2 + <x>^2 = {} is not an ideal", rows(&n)));
    }
    let big_a = n.sum(&l1_fitting)?;
    if big_a.codim() != 1 {
        return failed(
            Stage::FittingDecomposition,
            format!("A = N + L1 has codimension {}, not 1", big_a.codim()),
        );
    }
    if big_a.contains(&x) {
        return failed(Stage::FittingDecomposition, "x lies in A");
    }
    let f = Subspace::span(field, dim, std::slice::from_ref(&x))?;
    let (mode, l1, route) = if l1_fitting.intersection(&n)?.is_zero() {
        (FittingMode::Direct, l1_fitting.clone(), None)
    } else {
        let quotient = a.quotient(&n)?;
        let x_bar = quotient.projection.apply(&x);
        let lx_bar = quotient.algebra.left_mult_matrix(&x_bar)?;
        let (_, one_bar) = fitting_split(&lx_bar)?;
        let lifted = one_bar.image(&quotient.section)?;
        (
            FittingMode::ModuloN,
            lifted,
            Some(QuotientRoute {
                quotient,
                lx_bar,
                one_bar,
            }),
        )
    };
    let decomposition_ok =
        n.dim() + l1.dim() + 1 == dim && n.sum(&l1)?.sum(&f)?.is_full() && n.sum(&l1)? == big_a;
    if !decomposition_ok {
        return failed(
            Stage::FittingDecomposition,
            format!("L is not N + L1 + F with N = {}, L1 = {}", rows(&n), rows(&l1)),
        );
    }

    let x_squared_in_n = n.contains(&a.bracket(&x, &x)?);
    if !x_squared_in_n {
        return failed(Stage::XSquaredInN, "x^2 is not in N");
    }

    let n_l1 = a.product_space(&n, &l1)?;
    if !n_l1.is_zero() {
        return failed(Stage::NL1Annihilate, format!("[N, L1] = {}", rows(&n_l1)));
    }

    let leib = a.leibniz_kernel();
    let a2 = a.product_space(&big_a, &big_a)?;
    let a3 = a.product_space(&big_a, &a2)?;
    let a_cubed_in_leib = a3.is_subspace_of(&leib);
    if !a_cubed_in_leib {
        return failed(Stage::ACubedInLeib, format!("A^3 = {} is not inside Leib(L) = {}", rows(&a3), rows(&leib)));
    }

    let nilradical = is_nilradical_codim1(a, &big_a)?;
    if !nilradical.certified {
        return failed(Stage::Nilradical, nilradical.justification);
    }

    let (basis, c, restricted_poly, products_exact) = match &route {
        None => {
            let seed_vector = l1.basis_vectors().remove(0);
            let kb = companion_basis(&lx, &seed_vector)?;
            if !kb.is_cyclic_for(&l1) {
                return failed(
                    Stage::CompanionBasis,
                    format!("Krylov space of the seed has dimension {} < dim L1 = {}", kb.vectors.len(), l1.dim()),
                );
            }
            let restricted = char_poly(&l1.restrict_operator(&lx)?)?;
            (kb.vectors, kb.coefficients, restricted, true)
        }
        Some(r) => {
            let seed_vector = r.one_bar.basis_vectors().remove(0);
            let kb = companion_basis(&r.lx_bar, &seed_vector)?;
            if !kb.is_cyclic_for(&r.one_bar) {
                return failed(
                    Stage::CompanionBasis,
                    format!(
                        "Krylov space of the seed in L/N has dimension {} < {}",
                        kb.vectors.len(),
                        r.one_bar.dim()
                    ),
                );
            }
            let restricted = char_poly(&r.one_bar.restrict_operator(&r.lx_bar)?)?;
            let basis: Vec<Vector> = kb.vectors.iter().map(|v| r.quotient.section.apply(v)).collect();
            let mut exact = true;
            for (i, b) in basis.iter().enumerate() {
                let image = a.bracket(&x, b)?;
                let expected = match basis.get(i + 1) {
                    Some(next) => next.clone(),
                    None => {
                        let mut acc = zero_vector(field, dim);
                        for (ci, bi) in kb.coefficients.iter().zip(&basis) {
                            axpy(&mut acc, ci, bi);
                        }
                        acc
                    }
                };
                exact &= image == expected;
            }
            (basis, kb.coefficients, restricted, exact)
        }
    };

    let c0_nonzero = !c[0].is_zero();
    if !c0_nonzero {
        return failed(Stage::C0Nonzero, "c0 = 0");
    }
    let p = recurrence_polynomial(field, &c);
    if p != restricted_poly {
        return Err(Error::Consistency(format!(
            "companion polynomial {p:?} differs from the characteristic polynomial {restricted_poly:?}"
        )));
    }

    let gen_a = a.subalgebra_closure(&basis)?;
    let statement_n = x_square.sum(&a.product_space(&gen_a, &gen_a)?)?;
    let n_formula_holds = statement_n == n;
    if !n_formula_holds {
        return failed(
            Stage::NFormula,
            format!("<x>^2 + <a0..ak>^2 = {} differs from N = {}", rows(&statement_n), rows(&n)),
        );
    }

    let p_irreducible = poly_irreducible(&p)?;
    if let Irreducibility::Reducible { factor } = &p_irreducible {
        return failed(
            Stage::Irreducibility,
            format!("p = {} has the factor {}", p.pretty("λ"), factor.pretty("λ")),
        );
    }

    let m = n.sum(&f)?;
    let m_self_normalizing = a.is_subalgebra(&m)? && a.normalizer(&m)? == m;

    let dichotomy = if leib.is_subspace_of(&n) {
        Dichotomy::LeibInN
    } else {
        match is_cyclic(a, seed) {
            CyclicSearch::Generator(generator) => Dichotomy::Cyclic { generator },
            CyclicSearch::NotCyclic => {
                return failed(Stage::Dichotomy, "Leib(L) is not inside N and no element generates L");
            }
            CyclicSearch::NotFound => {
                return failed(
                    Stage::Dichotomy,
                    "Leib(L) is not inside N and the bounded search found no generator",
                );
            }
        }
    };

    Ok(TheoremOutcome::Certified(Box::new(MinNonCertificate {
        field,
        x,
        x_squared_in_n,
        n,
        l1,
        f,
        a: big_a,
        leib,
        companion_basis: basis,
        c,
        p,
        c0_nonzero,
        p_irreducible,
        n_formula_holds,
        a_is_nilradical: nilradical.certified,
        a_cubed_in_leib,
        dichotomy,
        decomposition_ok,
        fitting_mode: mode,
        products_exact,
        n_l1_product_zero: n_l1.is_zero(),
        m_self_normalizing,
    })))
}

/// `[a_i, x] + [x, a_i] ∈ Leib(L)` and `[a_i, a_j] ∈ N` for the companion basis.
pub fn check_remark_products(a: &LeibnizAlgebra, cert: &MinNonCertificate) -> Result<bool> {
    let leib = a.leibniz_kernel();
    for ai in &cert.companion_basis {
        let sym = crate::exactmath::matrix::add_vectors(&a.bracket(ai, &cert.x)?, &a.bracket(&cert.x, ai)?);
        if !leib.contains(&sym) {
            return Ok(false);
        }
        for aj in &cert.companion_basis {
            if !cert.n.contains(&a.bracket(ai, aj)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
