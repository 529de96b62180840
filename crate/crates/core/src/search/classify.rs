use std::collections::HashSet;
use std::fmt;

use crate::crossed::{
    canonical_weak_iso, compose_weak, group_to_xmod, phi, recover_xsmod, semibimodule_embed, xmod_to_xbsmod,
    CrossedSemiBimodule, WeakMorphism,
};
use crate::monoid::{validate_hom, FiniteMonoid, HomError, Monoid};
use crate::witness::Witness;

use super::{enumerate_action_pairs, enumerate_xbsmod, enumerate_xmod, enumerate_xsmod, SearchError};

/// Partition of the crossed semi-bimodules on a fixed `(A, K)`, with the
/// cross-checks against independently enumerated structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub sizes: (usize, usize),
    pub structures: Vec<CrossedSemiBimodule>,
    /// Indices with `ᵃx = x`.
    pub lambda_trivial: Vec<usize>,
    /// Indices with `a ∘ x = a`.
    pub circ_constant: Vec<usize>,
    pub xsmod_count: usize,
    /// Compatible action pairs, counted only when `K` is commutative.
    pub action_pair_count: Option<usize>,
    /// Crossed modules, counted only when both monoids are groups.
    pub xmod_count: Option<usize>,
    /// Indices where `∂ = 1∘−` is not a homomorphism, with the failing pair
    /// (or `()` when `∂(1) ≠ 1`).
    pub boundary_not_hom: Vec<(usize, Witness)>,
}

fn mismatch(claim: &'static str, x: &CrossedSemiBimodule) -> SearchError {
    SearchError::MismatchWitness {
        claim,
        structure: format!("circ={:?} lambda={:?} rho={:?}", x.circ().rows(), x.lambda().rows(), x.rho().rows()),
    }
}

/// Sets `left` and `right` must coincide.
fn same_set(claim: &'static str, left: &[CrossedSemiBimodule], right: &[CrossedSemiBimodule]) -> Result<(), SearchError> {
    let (l, r): (HashSet<_>, HashSet<_>) = (left.iter().collect(), right.iter().collect());
    if let Some(x) = left.iter().find(|x| !r.contains(x)).or_else(|| right.iter().find(|x| !l.contains(x))) {
        return Err(mismatch(claim, x));
    }
    if l.len() != left.len() || r.len() != right.len() {
        return Err(SearchError::MismatchWitness { claim, structure: "duplicate entries".into() });
    }
    Ok(())
}

pub fn classify(a: &FiniteMonoid, k: &FiniteMonoid, cap: usize) -> Result<Classification, SearchError> {
    let structures = enumerate_xbsmod(a, k, cap)?;
    let idx = |p: &dyn Fn(&CrossedSemiBimodule) -> bool| -> Vec<usize> {
        structures.iter().enumerate().filter(|(_, x)| p(x)).map(|(i, _)| i).collect()
    };
    let lambda_trivial = idx(&|x| x.lambda().is_trivial());
    let circ_constant = idx(&|x| x.circ().nonconstant_witness().is_none());

    let xsmods = enumerate_xsmod(a, k, cap)?;
    let images: Vec<_> = xsmods.iter().map(phi).collect();
    let trivial_side: Vec<_> = lambda_trivial.iter().map(|&i| structures[i].clone()).collect();
    same_set("lambda-trivial structures = phi(crossed semi-modules)", &trivial_side, &images)?;
    for (s, x) in xsmods.iter().zip(&images) {
        if recover_xsmod(x).as_ref() != Ok(s) {
            return Err(mismatch("recover_xsmod . phi = id", x));
        }
    }

    let action_pair_count = if k.is_commutative() {
        let pairs = enumerate_action_pairs(a, k, cap)?;
        let embedded = pairs
            .iter()
            .map(|(l, r)| semibimodule_embed(a.clone(), k.clone(), l.clone(), r.clone()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(SearchError::Unsound)?;
        let constant_side: Vec<_> = circ_constant.iter().map(|&i| structures[i].clone()).collect();
        same_set("circ-constant structures = embedded semi-bimodules", &constant_side, &embedded)?;
        Some(pairs.len())
    } else {
        None
    };

    let xmod_count = if a.is_group() && k.is_group() {
        let xmods = enumerate_xmod(a, k, cap)?;
        for m in &xmods {
            if group_to_xmod(&xmod_to_xbsmod(m)).as_ref() != Ok(m) {
                return Err(mismatch("group_to_xmod . xmod_to_xbsmod = id", &xmod_to_xbsmod(m)));
            }
        }
        for x in &structures {
            group_roundtrip(x)?;
        }
        Some(xmods.len())
    } else {
        None
    };

    let boundary_not_hom = structures
        .iter()
        .enumerate()
        .filter_map(|(i, x)| match validate_hom(&x.boundary_map(), x.k(), x.a()) {
            Ok(_) => None,
            Err(HomError::ProductNotPreserved(p, q)) => Some((i, Witness::of(&[p, q]))),
            Err(_) => Some((i, Witness::of(&[]))),
        })
        .collect();

    Ok(Classification {
        sizes: (a.size(), k.size()),
        structures,
        lambda_trivial,
        circ_constant,
        xsmod_count: xsmods.len(),
        action_pair_count,
        xmod_count,
        boundary_not_hom,
    })
}

/// `group_to_xmod` succeeds and both weak-iso composites are identities.
pub(crate) fn group_roundtrip(x: &CrossedSemiBimodule) -> Result<(), SearchError> {
    group_to_xmod(x).map_err(SearchError::Unsound)?;
    let iso = canonical_weak_iso(x).map_err(SearchError::Unsound)?;
    let back = compose_weak(&iso.backward, &iso.forward).map_err(SearchError::Unsound)?;
    let forth = compose_weak(&iso.forward, &iso.backward).map_err(SearchError::Unsound)?;
    if back != WeakMorphism::identity(&iso.rebuilt) || forth != WeakMorphism::identity(x) {
        return Err(mismatch("canonical weak iso composites are identities", x));
    }
    Ok(())
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (na, nk) = self.sizes;
        writeln!(f, "|A|={na} |K|={nk} structures={}", self.structures.len())?;
        writeln!(f, "lambda-trivial={} xsmod={}", self.lambda_trivial.len(), self.xsmod_count)?;
        match self.action_pair_count {
            Some(n) => writeln!(f, "circ-constant={} action-pairs={n}", self.circ_constant.len())?,
            None => writeln!(f, "circ-constant={} action-pairs=n/a", self.circ_constant.len())?,
        }
        match self.xmod_count {
            Some(n) => writeln!(f, "groups xmod={n}")?,
            None => writeln!(f, "groups n/a")?,
        }
        writeln!(f, "boundary-not-hom={}", self.boundary_not_hom.len())?;
        for (i, w) in &self.boundary_not_hom {
            writeln!(f, "  structure {i} at {w}")?;
        }
        Ok(())
    }
}
