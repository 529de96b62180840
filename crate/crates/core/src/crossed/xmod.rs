use crate::action::{MonoidAction, Side};
use crate::monoid::{validate_hom, FiniteMonoid, Monoid, MonoidHom};
use crate::witness::Witness;

use super::CrossedError;

/// A group homomorphism `∂: K → A` with a right action of `A` on `K` by
/// automorphisms such that `∂(xᵃ) = a⁻¹∂(x)a` and `y^∂(x) = x⁻¹yx`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedModule {
    a: FiniteMonoid,
    k: FiniteMonoid,
    partial: MonoidHom,
    rho: MonoidAction,
}

pub fn validate_xmod(a: FiniteMonoid, k: FiniteMonoid, partial: &[usize], rho: MonoidAction) -> Result<CrossedModule, CrossedError> {
    let inv_k = k.inverses().ok_or(CrossedError::NotAGroup("K"))?;
    let inv_a = a.inverses().ok_or(CrossedError::NotAGroup("A"))?;
    let partial = validate_hom(partial, &k, &a).map_err(CrossedError::hom("partial"))?;
    if rho.side() != Side::Right {
        return Err(CrossedError::Shape("rho must be a right action".into()));
    }
    rho.law_witness(&a, &k).map_err(CrossedError::action("rho"))?;
    let d = partial.map();
    for ia in a.elements() {
        for x in k.elements() {
            if d[rho.act(ia, x)] != a.mul(a.mul(inv_a[ia], d[x]), ia) {
                return Err(CrossedError::AxiomFails { axiom: "1", witness: Witness::of(&[ia, x]) });
            }
        }
    }
    for x in k.elements() {
        for y in k.elements() {
            if rho.act(d[x], y) != k.mul(k.mul(inv_k[x], y), x) {
                return Err(CrossedError::AxiomFails { axiom: "2", witness: Witness::of(&[x, y]) });
            }
        }
    }
    Ok(CrossedModule { a, k, partial, rho })
}

impl CrossedModule {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_z2() {
        let z2 = FiniteMonoid::cyclic(2);
        assert!(validate_xmod(z2.clone(), z2, &[0, 1], MonoidAction::trivial(Side::Right, 2, 2)).is_ok());
    }

    #[test]
    fn reduction_z4_to_z2() {
        let (z2, z4) = (FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(4));
        let m = validate_xmod(z2.clone(), z4.clone(), &[0, 1, 0, 1], MonoidAction::trivial(Side::Right, 2, 4)).unwrap();
        assert_eq!(m.partial().map(), &[0, 1, 0, 1]);
        // negation is an automorphism but y^∂(1) = -y ≠ y
        let neg = MonoidAction::from_raw(Side::Right, 2, 4, vec![0, 1, 2, 3, 0, 3, 2, 1]);
        assert_eq!(
            validate_xmod(z2, z4, &[0, 1, 0, 1], neg),
            Err(CrossedError::AxiomFails { axiom: "2", witness: Witness::of(&[1, 1]) })
        );
    }

    #[test]
    fn monoids_rejected() {
        let u2 = crate::catalog::lookup("u2").unwrap();
        let err = validate_xmod(FiniteMonoid::trivial(), u2, &[0, 0], MonoidAction::trivial(Side::Right, 1, 2));
        assert_eq!(err, Err(CrossedError::NotAGroup("K")));
    }
}
