use crate::action::{MonoidAction, SetAction, Side};
use crate::monoid::{FiniteMonoid, Monoid};
use crate::witness::Witness;

use super::CrossedError;

/// Monoids `A`, `K` with a right `K`-set structure `∘` on `A` and left/right
/// monoid actions `λ`, `ρ` of `A` on `K`, subject to the four compatibility
/// axioms:
///
/// 1. `(ᵃx)ᵇ = ᵃ(xᵇ)`
/// 2. `(ab)∘(ᵃx) = a(b∘x)`
/// 3. `(ab)∘(xᵇ) = (a∘x)b`
/// 4. `(ᵃy)·x^(b∘y) = xᵇ·(^(a∘x)y)`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedSemiBimodule {
    a: FiniteMonoid,
    k: FiniteMonoid,
    circ: SetAction,
    lambda: MonoidAction,
    rho: MonoidAction,
}

/// Axiom labels paired with the first failing tuple, lexicographic in `(a, b, x[, y])`.
pub fn xbs_axiom_failures(
    a: &FiniteMonoid,
    k: &FiniteMonoid,
    circ: &SetAction,
    lambda: &MonoidAction,
    rho: &MonoidAction,
) -> Vec<(&'static str, Witness)> {
    let (na, nk) = (a.size(), k.size());
    let mut found: [Option<Witness>; 4] = Default::default();
    for ia in 0..na {
        for ib in 0..na {
            let ab = a.mul(ia, ib);
            for x in 0..nk {
                if found[0].is_none() && rho.act(ib, lambda.act(ia, x)) != lambda.act(ia, rho.act(ib, x)) {
                    found[0] = Some(Witness::of(&[ia, ib, x]));
                }
                if found[1].is_none() && circ.act(ab, lambda.act(ia, x)) != a.mul(ia, circ.act(ib, x)) {
                    found[1] = Some(Witness::of(&[ia, ib, x]));
                }
                if found[2].is_none() && circ.act(ab, rho.act(ib, x)) != a.mul(circ.act(ia, x), ib) {
                    found[2] = Some(Witness::of(&[ia, ib, x]));
                }
                if found[3].is_none() {
                    let xb = rho.act(ib, x);
                    let ax = circ.act(ia, x);
                    for y in 0..nk {
                        let lhs = k.mul(lambda.act(ia, y), rho.act(circ.act(ib, y), x));
                        let rhs = k.mul(xb, lambda.act(ax, y));
                        if lhs != rhs {
                            found[3] = Some(Witness::of(&[ia, ib, x, y]));
                            break;
                        }
                    }
                }
            }
        }
    }
    ["1", "2", "3", "4"].into_iter().zip(found).filter_map(|(n, w)| w.map(|w| (n, w))).collect()
}

/// The lowest-numbered failing axiom, ignoring whether the components are valid.
pub fn xbs_axiom_witness(
    a: &FiniteMonoid,
    k: &FiniteMonoid,
    circ: &SetAction,
    lambda: &MonoidAction,
    rho: &MonoidAction,
) -> Option<(&'static str, Witness)> {
    xbs_axiom_failures(a, k, circ, lambda, rho).into_iter().next()
}

impl CrossedSemiBimodule {
    /// Validates components and all four axioms exhaustively.
    pub fn new(
        a: FiniteMonoid,
        k: FiniteMonoid,
        circ: SetAction,
        lambda: MonoidAction,
        rho: MonoidAction,
    ) -> Result<Self, CrossedError> {
        if lambda.side() != Side::Left || rho.side() != Side::Right {
            return Err(CrossedError::Shape("lambda must be a left action and rho a right action".into()));
        }
        if circ.carrier_size() != a.size() {
            return Err(CrossedError::Shape(format!("circ acts on {} elements, |A| = {}", circ.carrier_size(), a.size())));
        }
        circ.law_witness(&k).map_err(CrossedError::action("circ"))?;
        lambda.law_witness(&a, &k).map_err(CrossedError::action("lambda"))?;
        rho.law_witness(&a, &k).map_err(CrossedError::action("rho"))?;
        if let Some((axiom, witness)) = xbs_axiom_witness(&a, &k, &circ, &lambda, &rho) {
            return Err(CrossedError::AxiomFails { axiom, witness });
        }
        Ok(CrossedSemiBimodule { a, k, circ, lambda, rho })
    }

    pub fn a(&self) -> &FiniteMonoid {
        &self.a
    }

    pub fn k(&self) -> &FiniteMonoid {
        &self.k
    }

    pub fn circ(&self) -> &SetAction {
        &self.circ
    }

    pub fn lambda(&self) -> &MonoidAction {
        &self.lambda
    }

    pub fn rho(&self) -> &MonoidAction {
        &self.rho
    }

    /// `a ∘ x`
    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.circ.act(a, x)
    }

    /// `ᵃx`
    #[inline]
    pub fn left(&self, a: usize, x: usize) -> usize {
        self.lambda.act(a, x)
    }

    /// `xᵃ`
    #[inline]
    pub fn right(&self, x: usize, a: usize) -> usize {
        self.rho.act(a, x)
    }

    pub fn is_group_case(&self) -> bool {
        self.a.is_group() && self.k.is_group()
    }

    /// The trivial structure on `(A, K)`: trivial actions and `a ∘ x = a`.
    /// Valid exactly when `K` is commutative.
    pub fn trivial_on(a: FiniteMonoid, k: FiniteMonoid) -> Result<Self, CrossedError> {
        let (na, nk) = (a.size(), k.size());
        Self::new(
            a,
            k,
            SetAction::constant(nk, na),
            MonoidAction::trivial(Side::Left, na, nk),
            MonoidAction::trivial(Side::Right, na, nk),
        )
    }

    /// `∂(y) = 1 ∘ y`, after checking the exchange law `y·x^∂(y) = x·(^∂(x)y)`.
    ///
    /// `∂` is a plain map: it is a homomorphism only in special cases.
    pub fn boundary(&self) -> Result<Vec<usize>, CrossedError> {
        let d = self.boundary_map();
        let k = &self.k;
        for x in k.elements() {
            for y in k.elements() {
                if k.mul(y, self.right(x, d[y])) != k.mul(x, self.left(d[x], y)) {
                    return Err(CrossedError::ExchangeLawFails(x, y));
                }
            }
        }
        Ok(d)
    }

    pub(crate) fn boundary_map(&self) -> Vec<usize> {
        let one = self.a.identity();
        self.k.elements().map(|y| self.act(one, y)).collect()
    }

    /// `K` with the product `x ⋄ y = y·x^∂(y)`.
    pub fn twist_monoid(&self) -> Result<FiniteMonoid, CrossedError> {
        let d = self.boundary_map();
        let k = &self.k;
        let n = k.size();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(k.mul(y, self.right(x, d[y])));
            }
        }
        FiniteMonoid::from_flat(n, table, k.identity()).map_err(|e| match e {
            crate::monoid::MonoidError::NotAssociative(i, j, l) => CrossedError::internal("twist associativity", &[i, j, l]),
            other => CrossedError::Monoid(other),
        })
    }
}

/// A commutative `K` with compatible left and right `A`-actions, viewed as a
/// crossed semi-bimodule with `a ∘ x = a`.
pub fn semibimodule_embed(
    a: FiniteMonoid,
    k: FiniteMonoid,
    lambda: MonoidAction,
    rho: MonoidAction,
) -> Result<CrossedSemiBimodule, CrossedError> {
    if let Some((x, y)) = k.commutativity_witness() {
        return Err(CrossedError::NotCommutative(x, y));
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
    let circ = SetAction::constant(k.size(), a.size());
    CrossedSemiBimodule::new(a, k, circ, lambda, rho)
}
