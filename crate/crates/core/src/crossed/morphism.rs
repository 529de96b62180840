//! Strict and weak morphisms of crossed semi-bimodules.
//!
//! A weak morphism `(κ, γ)` is exactly the data of an internal functor
//! `(a, x) ↦ (κ(a), γ(a, x))` between the associated internal categories. Its
//! conditions are the ones that make that assignment a monoid homomorphism
//! compatible with units, source, target and composition:
//!
//! 1. `γ(a, 1) = 1` and `γ(a, xy) = γ(a, x)·γ(a∘x, y)`
//! 2. `κ(a) ∘ γ(a, x) = κ(a ∘ x)`
//! 3. `^κ(a)γ(b, y)·γ(a, x)^(κ(b)∘γ(b, y)) = γ(ab, ᵃy·x^(b∘y))`

use crate::monoid::{validate_hom, Monoid, MonoidHom};
use crate::witness::Witness;

use super::{CrossedError, CrossedSemiBimodule};

/// Homomorphisms `κ: K → K'` and `α: A → A'` commuting with `∘`, `λ` and `ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XbsMorphism {
    kappa: MonoidHom,
    alpha: MonoidHom,
}

impl XbsMorphism {
    pub fn identity(x: &CrossedSemiBimodule) -> Self {
        XbsMorphism { kappa: MonoidHom::identity(x.k().size()), alpha: MonoidHom::identity(x.a().size()) }
    }

    pub fn kappa(&self) -> &MonoidHom {
        &self.kappa
    }

    pub fn alpha(&self) -> &MonoidHom {
        &self.alpha
    }

    /// The weak morphism `(α, γ(a, x) = κ(x))`.
    pub fn strictify(&self) -> WeakMorphism {
        let (na, nk) = (self.alpha.source_size(), self.kappa.source_size());
        let gamma = (0..na).flat_map(|_| (0..nk).map(|x| self.kappa.apply(x))).collect();
        WeakMorphism { kappa: self.alpha.clone(), gamma, k_size: nk, target_k_size: self.kappa.target_size() }
    }
}

fn fail(condition: u8, w: &[usize]) -> CrossedError {
    CrossedError::ConditionFails { condition, witness: Witness::of(w) }
}

pub fn validate_morphism(
    kappa: &[usize],
    alpha: &[usize],
    source: &CrossedSemiBimodule,
    target: &CrossedSemiBimodule,
) -> Result<XbsMorphism, CrossedError> {
    let kappa = validate_hom(kappa, source.k(), target.k()).map_err(CrossedError::hom("kappa"))?;
    let alpha = validate_hom(alpha, source.a(), target.a()).map_err(CrossedError::hom("alpha"))?;
    let conditions: [&dyn Fn(usize, usize) -> bool; 3] = [
        &|a, x| alpha.apply(source.act(a, x)) == target.act(alpha.apply(a), kappa.apply(x)),
        &|a, x| kappa.apply(source.left(a, x)) == target.left(alpha.apply(a), kappa.apply(x)),
        &|a, x| kappa.apply(source.right(x, a)) == target.right(kappa.apply(x), alpha.apply(a)),
    ];
    for (cond, check) in (1..).zip(conditions) {
        for a in source.a().elements() {
            for x in source.k().elements() {
                if !check(a, x) {
                    return Err(fail(cond, &[a, x]));
                }
            }
        }
    }
    Ok(XbsMorphism { kappa, alpha })
}

/// A homomorphism `κ: A → A'` and a map `γ: A × K → K'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakMorphism {
    kappa: MonoidHom,
    gamma: Vec<usize>,
    k_size: usize,
    target_k_size: usize,
}

impl WeakMorphism {
    /// `(id, γ(a, x) = x)`.
    pub fn identity(x: &CrossedSemiBimodule) -> Self {
        let (na, nk) = (x.a().size(), x.k().size());
        WeakMorphism {
            kappa: MonoidHom::identity(na),
            gamma: (0..na).flat_map(|_| 0..nk).collect(),
            k_size: nk,
            target_k_size: nk,
        }
    }

    pub fn kappa(&self) -> &MonoidHom {
        &self.kappa
    }

    #[inline]
    pub fn gamma(&self, a: usize, x: usize) -> usize {
        self.gamma[a * self.k_size + x]
    }

    pub fn gamma_rows(&self) -> Vec<Vec<usize>> {
        self.gamma.chunks(self.k_size.max(1)).map(<[usize]>::to_vec).collect()
    }

    pub fn source_sizes(&self) -> (usize, usize) {
        (self.kappa.source_size(), self.k_size)
    }

    pub fn target_sizes(&self) -> (usize, usize) {
        (self.kappa.target_size(), self.target_k_size)
    }
}

/// Validates `(κ, γ)`; `gamma` has one row per element of `A`, one column per element of `K`.
pub fn validate_weak_morphism(
    kappa: &[usize],
    gamma: &[Vec<usize>],
    source: &CrossedSemiBimodule,
    target: &CrossedSemiBimodule,
) -> Result<WeakMorphism, CrossedError> {
    let kappa = validate_hom(kappa, source.a(), target.a()).map_err(CrossedError::hom("kappa"))?;
    let (na, nk) = (source.a().size(), source.k().size());
    if gamma.len() != na || gamma.iter().any(|r| r.len() != nk) {
        return Err(CrossedError::Shape(format!("gamma must be {na}x{nk}")));
    }
    let nk2 = target.k().size();
    if let Some((a, x)) = (0..na).flat_map(|a| (0..nk).map(move |x| (a, x))).find(|&(a, x)| gamma[a][x] >= nk2) {
        return Err(CrossedError::Shape(format!("gamma({a},{x}) is out of range")));
    }
    let w = WeakMorphism { kappa, gamma: gamma.concat(), k_size: nk, target_k_size: nk2 };
    weak_condition_witness(&w, source, target)?;
    Ok(w)
}

fn weak_condition_witness(w: &WeakMorphism, s: &CrossedSemiBimodule, t: &CrossedSemiBimodule) -> Result<(), CrossedError> {
    let (sa, sk, tk) = (s.a(), s.k(), t.k());
    let kap = |a| w.kappa.apply(a);
    for a in sa.elements() {
        if w.gamma(a, sk.identity()) != tk.identity() {
            return Err(fail(1, &[a]));
        }
        for x in sk.elements() {
            for y in sk.elements() {
                if w.gamma(a, sk.mul(x, y)) != tk.mul(w.gamma(a, x), w.gamma(s.act(a, x), y)) {
                    return Err(fail(1, &[a, x, y]));
                }
            }
        }
    }
    for a in sa.elements() {
        for x in sk.elements() {
            if t.act(kap(a), w.gamma(a, x)) != kap(s.act(a, x)) {
                return Err(fail(2, &[a, x]));
            }
        }
    }
    for a in sa.elements() {
        for b in sa.elements() {
            let ab = sa.mul(a, b);
            for x in sk.elements() {
                for y in sk.elements() {
                    let gby = w.gamma(b, y);
                    let lhs = tk.mul(t.left(kap(a), gby), t.right(w.gamma(a, x), t.act(kap(b), gby)));
                    let rhs = w.gamma(ab, sk.mul(s.left(a, y), s.right(x, s.act(b, y))));
                    if lhs != rhs {
                        return Err(fail(3, &[a, b, x, y]));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `second ∘ first`: `κ'' = κ'∘κ`, `γ''(a, x) = γ'(κ(a), γ(a, x))`.
pub fn compose_weak(second: &WeakMorphism, first: &WeakMorphism) -> Result<WeakMorphism, CrossedError> {
    if first.target_sizes() != second.source_sizes() {
        return Err(CrossedError::NotComposable(format!(
            "first lands in |A|,|K| = {:?}, second starts from {:?}",
            first.target_sizes(),
            second.source_sizes()
        )));
    }
    let (na, nk) = first.source_sizes();
    let gamma = (0..na)
        .flat_map(|a| (0..nk).map(move |x| (a, x)))
        .map(|(a, x)| second.gamma(first.kappa.apply(a), first.gamma(a, x)))
        .collect();
    Ok(WeakMorphism { kappa: first.kappa.then(&second.kappa), gamma, k_size: nk, target_k_size: second.target_k_size })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{MonoidAction, Side};
    use crate::crossed::{phi, validate_xsmod};
    use crate::monoid::FiniteMonoid;

    fn z2_sum() -> CrossedSemiBimodule {
        let z2 = FiniteMonoid::cyclic(2);
        phi(&validate_xsmod(z2.clone(), z2, &[0, 1], MonoidAction::trivial(Side::Right, 2, 2)).unwrap())
    }

    /// (Z/4 → Z/2 reduction) ↦ (Z/2 → Z/2 identity) by κ = α = reduction.
    fn reduction() -> (CrossedSemiBimodule, CrossedSemiBimodule) {
        let (z2, z4) = (FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(4));
        let s = validate_xsmod(z2.clone(), z4, &[0, 1, 0, 1], MonoidAction::trivial(Side::Right, 2, 4)).unwrap();
        (phi(&s), z2_sum())
    }

    #[test]
    fn identity_morphisms() {
        let x = z2_sum();
        let id = XbsMorphism::identity(&x);
        assert!(validate_morphism(id.kappa().map(), id.alpha().map(), &x, &x).is_ok());
        let wid = WeakMorphism::identity(&x);
        assert_eq!(id.strictify(), wid);
        assert!(validate_weak_morphism(wid.kappa().map(), &wid.gamma_rows(), &x, &x).is_ok());
    }

    #[test]
    fn morphism_through_phi() {
        let (src, tgt) = reduction();
        let m = validate_morphism(&[0, 1, 0, 1], &[0, 1], &src, &tgt).unwrap();
        let w = m.strictify();
        assert!(validate_weak_morphism(w.kappa().map(), &w.gamma_rows(), &src, &tgt).is_ok());
        // α = 0 is a homomorphism but breaks α(a∘x) = α(a)∘κ(x)
        assert_eq!(
            validate_morphism(&[0, 1, 0, 1], &[0, 0], &src, &tgt),
            Err(CrossedError::ConditionFails { condition: 1, witness: Witness::of(&[0, 1]) })
        );
    }

    #[test]
    fn perturbed_gamma_rejected() {
        let x = z2_sum();
        let mut rows = WeakMorphism::identity(&x).gamma_rows();
        rows[1][1] = 0;
        let err = validate_weak_morphism(&[0, 1], &rows, &x, &x).unwrap_err();
        assert!(matches!(err, CrossedError::ConditionFails { .. }), "{err:?}");
    }

    #[test]
    fn composition_units_and_mismatch() {
        let (src, tgt) = reduction();
        let w = validate_morphism(&[0, 1, 0, 1], &[0, 1], &src, &tgt).unwrap().strictify();
        assert_eq!(compose_weak(&w, &WeakMorphism::identity(&src)).unwrap(), w);
        assert_eq!(compose_weak(&WeakMorphism::identity(&tgt), &w).unwrap(), w);
        assert!(matches!(compose_weak(&w, &w), Err(CrossedError::NotComposable(_))));
    }
}
