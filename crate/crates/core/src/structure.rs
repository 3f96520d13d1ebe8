//! Cores, Fitting decompositions, Cartan search, codimension-one nilradicals,
//! cyclicity and irreducible actions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::matrix::add_vectors;
use crate::exactmath::{
    char_poly, fitting_split, is_nilpotent_operator, poly_irreducible, FieldDescriptor, Irreducibility, Matrix,
    Scalar, Subspace, Vector,
};
use crate::leibcore::{Element, LeibnizAlgebra, NilpotencyMethod};

/// Number of pseudo-random candidates after the basis vectors and pairwise sums.
pub const RANDOM_CANDIDATES: usize = 200;
/// Finite-field cyclicity searches become exhaustive below this many vectors.
pub const EXHAUSTIVE_CYCLIC_LIMIT: u64 = 50_000;

/// Largest ideal of `a` contained in the subalgebra `m`.
pub fn core_of(a: &LeibnizAlgebra, m: &Subspace) -> Result<Subspace> {
    if !a.is_subalgebra(m)? {
        return Err(Error::NotSubalgebra);
    }
    let n = a.dim();
    let mut current = m.clone();
    loop {
        if current.is_zero() {
            return Ok(current);
        }
        // Coefficients t with Σ t_r b_r satisfying [e_i, ·], [·, e_i] ∈ current.
        let columns: Vec<Vector> = current
            .basis_vectors()
            .iter()
            .map(|b| {
                let mut col = Vec::with_capacity(2 * n * n);
                for i in 0..n {
                    let e = a.basis_vector(i);
                    col.extend(current.reduce(&a.bracket(&e, b).expect("same algebra")));
                    col.extend(current.reduce(&a.bracket(b, &e).expect("same algebra")));
                }
                col
            })
            .collect();
        let system = Matrix::from_columns(a.field(), 2 * n * n, &columns)?;
        let kept: Vec<Vector> = system.kernel().iter().map(|t| current.combine(t)).collect();
        let next = Subspace::span(a.field(), n, &kept)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Deterministic candidate elements: basis vectors, then `e_i + e_j` for
/// `i < j`, then seeded rows with entries in {0, ±1, ±2}.
pub fn candidate_stream(a: &LeibnizAlgebra, seed: u64) -> impl Iterator<Item = Element> + '_ {
    let n = a.dim();
    let field = a.field();
    let basis = (0..n).map(move |i| a.basis_vector(i));
    let pairs = (0..n).flat_map(move |i| (i + 1..n).map(move |j| add_vectors(&a.basis_vector(i), &a.basis_vector(j))));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = (0..RANDOM_CANDIDATES).map(move |_| {
        (0..n)
            .map(|_| Scalar::from_int(field, rng.gen_range(-2i64..=2)))
            .collect::<Vector>()
    });
    basis.chain(pairs).chain(random)
}

/// First candidate whose left multiplication is not nilpotent.
pub fn find_nonnilpotent_element(a: &LeibnizAlgebra, seed: u64) -> Option<Element> {
    candidate_stream(a, seed).find(|u| {
        !is_nilpotent_operator(&a.left_mult_matrix(u).expect("candidate of the right shape")).expect("square")
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingPair {
    pub x: Element,
    pub null: Subspace,
    pub one: Subspace,
}

/// Fitting decomposition of the space under `ℓ_x`.
pub fn fitting_wrt(a: &LeibnizAlgebra, x: &[Scalar]) -> Result<FittingPair> {
    let lx = a.left_mult_matrix(x)?;
    let (null, one) = fitting_split(&lx)?;
    Ok(FittingPair {
        x: x.to_vec(),
        null,
        one,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanOutcome {
    Found { x: Element, cartan: Subspace },
    NoNonnilpotentElement,
    NotSubalgebra { candidate: Subspace },
    NotNilpotent { candidate: Subspace },
    NotSelfNormalizing { candidate: Subspace, normalizer: Subspace },
}

impl CartanOutcome {
    pub fn cartan(&self) -> Option<&Subspace> {
        match self {
            CartanOutcome::Found { cartan, .. } => Some(cartan),
            _ => None,
        }
    }
}

/// Guess-and-verify: the Fitting null component of a non-nilpotent `ℓ_x`.
pub fn find_cartan(a: &LeibnizAlgebra, seed: u64) -> Result<CartanOutcome> {
    let Some(x) = find_nonnilpotent_element(a, seed) else {
        return Ok(CartanOutcome::NoNonnilpotentElement);
    };
    let candidate = fitting_wrt(a, &x)?.null;
    if !a.is_subalgebra(&candidate)? {
        return Ok(CartanOutcome::NotSubalgebra { candidate });
    }
    if !a.is_nilpotent(Some(&candidate), NilpotencyMethod::Series)? {
        return Ok(CartanOutcome::NotNilpotent { candidate });
    }
    let normalizer = a.normalizer(&candidate)?;
    if normalizer != candidate {
        return Ok(CartanOutcome::NotSelfNormalizing { candidate, normalizer });
    }
    Ok(CartanOutcome::Found { x, cartan: candidate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilradicalCertificate {
    pub certified: bool,
    pub is_ideal: bool,
    pub ideal_nilpotent: bool,
    pub algebra_nonnilpotent: bool,
    pub justification: String,
}

/// Certifies a codimension-one ideal as the nilradical: it is a nilpotent
/// ideal, and the only larger ideal is `L` itself, which is not nilpotent.
pub fn is_nilradical_codim1(a: &LeibnizAlgebra, i: &Subspace) -> Result<NilradicalCertificate> {
    if i.codim() != 1 {
        return Err(Error::CodimensionNotOne(i.codim()));
    }
    let is_ideal = a.is_ideal(i)?;
    let ideal_nilpotent = is_ideal && a.is_nilpotent(Some(i), NilpotencyMethod::Series)?;
    let algebra_nonnilpotent = !a.is_nilpotent(None, NilpotencyMethod::Series)?;
    let certified = is_ideal && ideal_nilpotent && algebra_nonnilpotent;
    let justification = if certified {
        "nilpotent ideal of codimension 1 in a nonnilpotent algebra: it lies in the nilradical, and the only ideal strictly containing it is L".to_string()
    } else if !is_ideal {
        "not an ideal".to_string()
    } else if !ideal_nilpotent {
        "ideal is not nilpotent".to_string()
    } else {
        "the whole algebra is nilpotent, so the nilradical is L".to_string()
    };
    Ok(NilradicalCertificate {
        certified,
        is_ideal,
        ideal_nilpotent,
        algebra_nonnilpotent,
        justification,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicSearch {
    Generator(Element),
    /// Every element was tried (finite field, small enough space).
    NotCyclic,
    /// The bounded candidate search found nothing; not a proof.
    NotFound,
}

impl CyclicSearch {
    pub fn generator(&self) -> Option<&Element> {
        match self {
            CyclicSearch::Generator(z) => Some(z),
            _ => None,
        }
    }
}

fn generates(a: &LeibnizAlgebra, z: &[Scalar]) -> bool {
    a.subalgebra_closure(&[z.to_vec()]).expect("element of the right shape").is_full()
}

/// All vectors of `field^n` in lexicographic residue order.
fn all_vectors(field: FieldDescriptor, n: usize) -> impl Iterator<Item = Vector> {
    let q = field.characteristic();
    let total = q.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![Scalar::zero(field); n];
        for slot in v.iter_mut().rev() {
            *slot = Scalar::from_int(field, (code % q) as i64);
            code /= q;
        }
        v
    })
}

/// Searches for a single generator of the whole algebra.
pub fn is_cyclic(a: &LeibnizAlgebra, seed: u64) -> CyclicSearch {
    if let Some(z) = candidate_stream(a, seed).find(|z| generates(a, z)) {
        return CyclicSearch::Generator(z);
    }
    let field = a.field();
    let n = a.dim();
    if field == FieldDescriptor::GaussianRationals {
        let i_unit = Scalar::imaginary_unit();
        for p in 0..n {
            for q in p + 1..n {
                for (s, t) in [(Scalar::one(field), i_unit.clone()), (i_unit.clone(), Scalar::one(field))] {
                    let mut z = a.zero_element();
                    z[p] = s.clone();
                    z[q] = t;
                    if generates(a, &z) {
                        return CyclicSearch::Generator(z);
                    }
                }
            }
        }
    }
    if field.is_finite() {
        let small = field
            .characteristic()
            .checked_pow(n as u32)
            .is_some_and(|count| count <= EXHAUSTIVE_CYCLIC_LIMIT);
        if small {
            return match all_vectors(field, n).find(|z| generates(a, z)) {
                Some(z) => CyclicSearch::Generator(z),
                None => CyclicSearch::NotCyclic,
            };
        }
    }
    CyclicSearch::NotFound
}

/// Irreducibility of the characteristic polynomial of `ℓ_x` on the invariant `w`.
pub fn action_irreducible(a: &LeibnizAlgebra, x: &[Scalar], w: &Subspace) -> Result<Irreducibility> {
    let lx = a.left_mult_matrix(x)?;
    let restricted = w.restrict_operator(&lx)?;
    poly_irreducible(&char_poly(&restricted)?)
}
