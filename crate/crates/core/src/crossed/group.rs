//! The case where both `A` and `K` are groups.

use crate::action::{MonoidAction, SetAction, Side};
use crate::monoid::{validate_hom, FiniteMonoid, Monoid};
use crate::witness::Witness;

use super::{
    phi, validate_weak_morphism, validate_xmod, validate_xsmod, CrossedError, CrossedModule, CrossedSemiBimodule,
    WeakMorphism,
};

fn inverses(m: &FiniteMonoid, which: &'static str) -> Result<Vec<usize>, CrossedError> {
    m.inverses().ok_or(CrossedError::NotAGroup(which))
}

/// Crossed module ⇒ crossed semi-module on the same data ⇒ [`phi`].
pub fn xmod_to_xbsmod(m: &CrossedModule) -> CrossedSemiBimodule {
    let s = validate_xsmod(m.a().clone(), m.k().clone(), m.partial().map(), m.rho().clone())
        .expect("a crossed module is a crossed semi-module");
    phi(&s)
}

/// `(K^tw, A, ∂)` with the action `x^*a = ^(a⁻¹)(xᵃ)`.
///
/// Along the way this re-checks that `K^tw` is a group with inverse
/// `x♭ = ^(∂(x)⁻¹)(x⁻¹)`, that `∂` is a homomorphism on it, and that
/// `∂(x^*a) = a⁻¹∂(x)a`.
pub fn group_to_xmod(x: &CrossedSemiBimodule) -> Result<CrossedModule, CrossedError> {
    let inv_k = inverses(x.k(), "K")?;
    let inv_a = inverses(x.a(), "A")?;
    let (a, k) = (x.a(), x.k());
    let d = x.boundary()?;
    let tw = x.twist_monoid()?;
    for y in k.elements() {
        let flat = x.left(inv_a[d[y]], inv_k[y]);
        if tw.mul(y, flat) != tw.identity() {
            return Err(CrossedError::internal("x ⋄ x♭ = 1", &[y]));
        }
    }
    if !tw.is_group() {
        return Err(CrossedError::internal("twist monoid is a group", &[]));
    }
    if let Err(e) = validate_hom(&d, &tw, a) {
        let w = match e {
            crate::monoid::HomError::ProductNotPreserved(p, q) => vec![p, q],
            _ => vec![],
        };
        return Err(CrossedError::Internal { claim: "boundary is a homomorphism on the twist monoid", witness: Witness(w) });
    }
    let (na, nk) = (a.size(), k.size());
    let mut star = Vec::with_capacity(na * nk);
    for g in a.elements() {
        for y in k.elements() {
            star.push(x.left(inv_a[g], x.right(y, g)));
        }
    }
    let star = MonoidAction::from_raw(Side::Right, na, nk, star);
    for g in a.elements() {
        for y in k.elements() {
            if d[star.act(g, y)] != a.mul(a.mul(inv_a[g], d[y]), g) {
                return Err(CrossedError::internal("∂(x^*a) = a⁻¹∂(x)a", &[g, y]));
            }
        }
    }
    validate_xmod(a.clone(), tw, &d, star).map_err(|e| match e {
        CrossedError::AxiomFails { witness, .. } => CrossedError::Internal { claim: "crossed module axioms", witness },
        other => other,
    })
}

/// Builds the crossed semi-bimodule with `a ∘ x = a·∂(^(a⁻¹)x)` from compatible
/// actions and a map `∂` satisfying
///
/// * i) `∂(xy) = ∂(x)·∂(^(∂(x)⁻¹)y)`
/// * ii) `∂(^(b⁻¹)z^b) = b⁻¹∂(z)b`
/// * iii) `y·x^∂(y) = x·^∂(x)y`
pub fn reconstruct_group_xbsmod(
    a: FiniteMonoid,
    k: FiniteMonoid,
    lambda: MonoidAction,
    rho: MonoidAction,
    partial: &[usize],
) -> Result<CrossedSemiBimodule, CrossedError> {
    inverses(&k, "K")?;
    let inv_a = inverses(&a, "A")?;
    if partial.len() != k.size() || partial.iter().any(|&v| v >= a.size()) {
        return Err(CrossedError::Shape("partial must map K into A".into()));
    }
    if lambda.side() != Side::Left || rho.side() != Side::Right {
        return Err(CrossedError::Shape("lambda must be a left action and rho a right action".into()));
    }
    lambda.law_witness(&a, &k).map_err(CrossedError::action("lambda"))?;
    rho.law_witness(&a, &k).map_err(CrossedError::action("rho"))?;
    for ia in a.elements() {
        for ib in a.elements() {
            for x in k.elements() {
                if rho.act(ib, lambda.act(ia, x)) != lambda.act(ia, rho.act(ib, x)) {
                    return Err(CrossedError::CompatibilityFails(ia, ib, x));
                }
            }
        }
    }
    let d = partial;
    let hyp = |hypothesis, w: &[usize]| CrossedError::HypothesisFails { hypothesis, witness: Witness::of(w) };
    for x in k.elements() {
        for y in k.elements() {
            if d[k.mul(x, y)] != a.mul(d[x], d[lambda.act(inv_a[d[x]], y)]) {
                return Err(hyp("i", &[x, y]));
            }
        }
    }
    for b in a.elements() {
        for z in k.elements() {
            if d[lambda.act(inv_a[b], rho.act(b, z))] != a.mul(a.mul(inv_a[b], d[z]), b) {
                return Err(hyp("ii", &[b, z]));
            }
        }
    }
    for x in k.elements() {
        for y in k.elements() {
            if k.mul(y, rho.act(d[y], x)) != k.mul(x, lambda.act(d[x], y)) {
                return Err(hyp("iii", &[x, y]));
            }
        }
    }
    let (na, nk) = (a.size(), k.size());
    let mut circ = Vec::with_capacity(na * nk);
    for g in a.elements() {
        for x in k.elements() {
            circ.push(a.mul(g, d[lambda.act(inv_a[g], x)]));
        }
    }
    let circ = SetAction::from_raw(nk, na, circ);
    let result = CrossedSemiBimodule::new(a, k, circ, lambda, rho).map_err(|e| match e {
        CrossedError::AxiomFails { witness, .. } => CrossedError::Internal { claim: "reconstructed axioms", witness },
        CrossedError::Action { source, .. } => CrossedError::Internal { claim: "reconstructed ∘ is an action", witness: Witness(action_witness(source)) },
        other => other,
    })?;
    if result.boundary_map() != partial {
        return Err(CrossedError::internal("1 ∘ x = ∂(x)", &[]));
    }
    Ok(result)
}

fn action_witness(e: crate::action::ActionError) -> Vec<usize> {
    match e {
        crate::action::ActionError::CompositionFails(w) => w,
        crate::action::ActionError::UnitActFails(a) => vec![a],
        _ => vec![],
    }
}

/// The weak isomorphism between a group-case structure `X` and the structure
/// built back from its crossed module.
#[derive(Clone, Debug)]
pub struct WeakIso {
    /// `xmod_to_xbsmod(group_to_xmod(X))`
    pub rebuilt: CrossedSemiBimodule,
    /// `(id, γ(a, x) = ᵃx)` from `rebuilt` to `X`
    pub forward: WeakMorphism,
    /// `(id, γ(a, x) = ^(a⁻¹)x)` from `X` to `rebuilt`
    pub backward: WeakMorphism,
}

pub fn canonical_weak_iso(x: &CrossedSemiBimodule) -> Result<WeakIso, CrossedError> {
    let inv_a = inverses(x.a(), "A")?;
    inverses(x.k(), "K")?;
    let rebuilt = xmod_to_xbsmod(&group_to_xmod(x)?);
    let id: Vec<usize> = x.a().elements().collect();
    let forward: Vec<Vec<usize>> = x.a().elements().map(|a| x.k().elements().map(|y| x.left(a, y)).collect()).collect();
    let backward: Vec<Vec<usize>> =
        x.a().elements().map(|a| x.k().elements().map(|y| x.left(inv_a[a], y)).collect()).collect();
    let forward = validate_weak_morphism(&id, &forward, &rebuilt, x)?;
    let backward = validate_weak_morphism(&id, &backward, x, &rebuilt)?;
    Ok(WeakIso { rebuilt, forward, backward })
}
