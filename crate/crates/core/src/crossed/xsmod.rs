use crate::action::{MonoidAction, SetAction, Side};
use crate::monoid::{validate_hom, FiniteMonoid, Monoid, MonoidHom};
use crate::witness::Witness;

use super::{CrossedError, CrossedSemiBimodule};

/// A monoid homomorphism `∂: K → A` with a right action of `A` on `K` such that
/// `a·∂(xᵃ) = ∂(x)·a` and `y·x^∂(y) = x·y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedSemiModule {
    a: FiniteMonoid,
    k: FiniteMonoid,
    partial: MonoidHom,
    rho: MonoidAction,
}

pub fn validate_xsmod(
    a: FiniteMonoid,
    k: FiniteMonoid,
    partial: &[usize],
    rho: MonoidAction,
) -> Result<CrossedSemiModule, CrossedError> {
    let partial = validate_hom(partial, &k, &a).map_err(CrossedError::hom("partial"))?;
    if rho.side() != Side::Right {
        return Err(CrossedError::Shape("rho must be a right action".into()));
    }
    rho.law_witness(&a, &k).map_err(CrossedError::action("rho"))?;
    if let Some((axiom, witness)) = xsmod_axiom_witness(&a, &k, partial.map(), &rho) {
        return Err(CrossedError::AxiomFails { axiom, witness });
    }
    Ok(CrossedSemiModule { a, k, partial, rho })
}

/// Checks axiom i) over `(a, x)` and then ii) over `(x, y)` on raw tables.
pub(crate) fn xsmod_axiom_witness(
    a: &FiniteMonoid,
    k: &FiniteMonoid,
    d: &[usize],
    rho: &MonoidAction,
) -> Option<(&'static str, Witness)> {
    for ia in a.elements() {
        for x in k.elements() {
            if a.mul(ia, d[rho.act(ia, x)]) != a.mul(d[x], ia) {
                return Some(("i", Witness::of(&[ia, x])));
            }
        }
    }
    for x in k.elements() {
        for y in k.elements() {
            if k.mul(y, rho.act(d[y], x)) != k.mul(x, y) {
                return Some(("ii", Witness::of(&[x, y])));
            }
        }
    }
    None
}

impl CrossedSemiModule {
    pub fn a(&self) -> &FiniteMonoid {
        &self.a
    }

    pub fn k(&self) -> &FiniteMonoid {
        &self.k
    }

    pub fn partial(&self) -> &MonoidHom {
        &self.partial
    }

    pub fn rho(&self) -> &MonoidAction {
        &self.rho
    }
}

/// `ᵃx = x`, `a ∘ x = a·∂(x)`, `ρ` unchanged.
pub fn phi(s: &CrossedSemiModule) -> CrossedSemiBimodule {
    let (na, nk) = (s.a.size(), s.k.size());
    let circ = (0..na).flat_map(|ia| (0..nk).map(move |x| (ia, x))).map(|(ia, x)| s.a.mul(ia, s.partial.apply(x)));
    let circ = SetAction::from_raw(nk, na, circ.collect());
    CrossedSemiBimodule::new(s.a.clone(), s.k.clone(), circ, MonoidAction::trivial(Side::Left, na, nk), s.rho.clone())
        .expect("image of a crossed semi-module is a crossed semi-bimodule")
}

/// Inverse of [`phi`] on structures with trivial `λ`, using `∂(x) = 1 ∘ x`.
pub fn recover_xsmod(x: &CrossedSemiBimodule) -> Result<CrossedSemiModule, CrossedError> {
    if let Some((a, k)) = x.lambda().nontrivial_witness() {
        return Err(CrossedError::LambdaNotTrivial(a, k));
    }
    let d = x.boundary()?;
    if let Err(e) = validate_hom(&d, x.k(), x.a()) {
        let w = match e {
            crate::monoid::HomError::ProductNotPreserved(p, q) => vec![p, q],
            _ => vec![],
        };
        return Err(CrossedError::Internal { claim: "boundary is a homomorphism", witness: Witness(w) });
    }
    for ia in x.a().elements() {
        for k in x.k().elements() {
            if x.act(ia, k) != x.a().mul(ia, d[k]) {
                return Err(CrossedError::internal("a ∘ x = a∂(x)", &[ia, k]));
            }
        }
    }
    validate_xsmod(x.a().clone(), x.k().clone(), &d, x.rho().clone()).map_err(|e| match e {
        CrossedError::AxiomFails { witness, .. } => CrossedError::Internal { claim: "crossed semi-module axioms", witness },
        other => other,
    })
}
