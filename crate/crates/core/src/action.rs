//! Monoid actions: an actor monoid acting on a carrier monoid by endomorphisms
//! (left or right), and a monoid acting on a bare set from the right.
//!
//! Every action table is stored with one row per element of the monoid playing
//! the role of `A` and one column per element of `K`: for `λ` and `ρ` the row is
//! the actor, for `∘` the row is the carrier.

use std::fmt;

use thiserror::Error;

use crate::monoid::{FiniteMonoid, Monoid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `(a, x) ↦ ᵃx`
    Left,
    /// `(x, a) ↦ xᵃ`
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("action table is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    DimensionMismatch { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("entry ({0},{1}) is out of range")]
    IndexOutOfRange(usize, usize),
    #[error("unit does not act trivially at {0}")]
    UnitActFails(usize),
    #[error("composition law fails at {0:?}")]
    CompositionFails(Vec<usize>),
    #[error("element {0} does not act by an endomorphism at ({1},{2})")]
    NotEndomorphism(usize, usize, usize),
    #[error("element {0} does not fix the identity")]
    IdentityNotFixed(usize),
}

fn check_dims(table: &[Vec<usize>], rows: usize, cols: usize, bound: usize) -> Result<Vec<u32>, ActionError> {
    let bad = table.len() != rows || table.iter().any(|r| r.len() != cols);
    if bad {
        return Err(ActionError::DimensionMismatch {
            rows: table.len(),
            cols: table.first().map_or(0, Vec::len),
            expected_rows: rows,
            expected_cols: cols,
        });
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for (i, r) in table.iter().enumerate() {
        for (j, &v) in r.iter().enumerate() {
            if v >= bound {
                return Err(ActionError::IndexOutOfRange(i, j));
            }
            flat.push(v as u32);
        }
    }
    Ok(flat)
}

/// `A` acting on the monoid `K` by monoid endomorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidAction {
    side: Side,
    actor_size: usize,
    carrier_size: usize,
    table: Vec<u32>,
}

impl MonoidAction {
    /// Wraps a row-major table without checking any law.
    ///
    /// Used to feed deliberately broken data to the axiom checkers.
    pub fn from_raw(side: Side, actor_size: usize, carrier_size: usize, table: Vec<usize>) -> Self {
        assert_eq!(table.len(), actor_size * carrier_size);
        MonoidAction { side, actor_size, carrier_size, table: table.into_iter().map(|v| v as u32).collect() }
    }

    pub fn trivial(side: Side, actor_size: usize, carrier_size: usize) -> Self {
        let table = (0..actor_size).flat_map(|_| 0..carrier_size).collect();
        Self::from_raw(side, actor_size, carrier_size, table)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn actor_size(&self) -> usize {
        self.actor_size
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    /// `ᵃx` for a left action, `xᵃ` for a right one.
    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.table[a * self.carrier_size + x] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.carrier_size.max(1)).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// First `(a, x)` with `a` moving `x`.
    pub fn nontrivial_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.actor_size {
            for x in 0..self.carrier_size {
                if self.act(a, x) != x {
                    return Some((a, x));
                }
            }
        }
        None
    }

    pub fn is_trivial(&self) -> bool {
        self.nontrivial_witness().is_none()
    }

    /// Re-checks the four action laws against the given monoids.
    pub fn law_witness(&self, actor: &FiniteMonoid, carrier: &FiniteMonoid) -> Result<(), ActionError> {
        let (na, nk) = (actor.size(), carrier.size());
        if self.actor_size != na || self.carrier_size != nk {
            return Err(ActionError::DimensionMismatch {
                rows: self.actor_size,
                cols: self.carrier_size,
                expected_rows: na,
                expected_cols: nk,
            });
        }
        let one = actor.identity();
        if let Some(x) = (0..nk).find(|&x| self.act(one, x) != x) {
            return Err(ActionError::UnitActFails(x));
        }
        for a in 0..na {
            for x in 0..nk {
                for y in 0..nk {
                    if self.act(a, carrier.mul(x, y)) != carrier.mul(self.act(a, x), self.act(a, y)) {
                        return Err(ActionError::NotEndomorphism(a, x, y));
                    }
                }
            }
        }
        if let Some(a) = (0..na).find(|&a| self.act(a, carrier.identity()) != carrier.identity()) {
            return Err(ActionError::IdentityNotFixed(a));
        }
        for x in 0..nk {
            for a in 0..na {
                for b in 0..na {
                    let (lhs, rhs) = match self.side {
                        Side::Left => (self.act(a, self.act(b, x)), self.act(actor.mul(a, b), x)),
                        Side::Right => (self.act(b, self.act(a, x)), self.act(actor.mul(a, b), x)),
                    };
                    if lhs != rhs {
                        return Err(ActionError::CompositionFails(vec![x, a, b]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Validates a left or right action of `actor` on `carrier` (row `a`, column `x`).
pub fn validate_monoid_action(
    side: Side,
    actor: &FiniteMonoid,
    carrier: &FiniteMonoid,
    table: &[Vec<usize>],
) -> Result<MonoidAction, ActionError> {
    let flat = check_dims(table, actor.size(), carrier.size(), carrier.size())?;
    let action = MonoidAction { side, actor_size: actor.size(), carrier_size: carrier.size(), table: flat };
    action.law_witness(actor, carrier)?;
    Ok(action)
}

/// A right action `a ∘ x` of the monoid `K` on the set underlying `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetAction {
    actor_size: usize,
    carrier_size: usize,
    table: Vec<u32>,
}

impl SetAction {
    /// Wraps a row-major `|A| × |K|` table without checking any law.
    pub fn from_raw(actor_size: usize, carrier_size: usize, table: Vec<usize>) -> Self {
        assert_eq!(table.len(), actor_size * carrier_size);
        SetAction { actor_size, carrier_size, table: table.into_iter().map(|v| v as u32).collect() }
    }

    /// `a ∘ x = a`.
    pub fn constant(actor_size: usize, carrier_size: usize) -> Self {
        let table = (0..carrier_size).flat_map(|a| std::iter::repeat(a).take(actor_size)).collect();
        Self::from_raw(actor_size, carrier_size, table)
    }

    pub fn actor_size(&self) -> usize {
        self.actor_size
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    /// `a ∘ x`.
    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.table[a * self.actor_size + x] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.actor_size.max(1)).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// First `(a, x)` with `a ∘ x != a`.
    pub fn nonconstant_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.carrier_size {
            for x in 0..self.actor_size {
                if self.act(a, x) != a {
                    return Some((a, x));
                }
            }
        }
        None
    }

    pub fn law_witness(&self, actor: &FiniteMonoid) -> Result<(), ActionError> {
        if self.actor_size != actor.size() {
            return Err(ActionError::DimensionMismatch {
                rows: self.carrier_size,
                cols: self.actor_size,
                expected_rows: self.carrier_size,
                expected_cols: actor.size(),
            });
        }
        let one = actor.identity();
        if let Some(a) = (0..self.carrier_size).find(|&a| self.act(a, one) != a) {
            return Err(ActionError::UnitActFails(a));
        }
        for a in 0..self.carrier_size {
            for x in 0..self.actor_size {
                for y in 0..self.actor_size {
                    if self.act(a, actor.mul(x, y)) != self.act(self.act(a, x), y) {
                        return Err(ActionError::CompositionFails(vec![a, x, y]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Validates a right `K`-set structure on `0..carrier_size`.
pub fn validate_set_action(actor: &FiniteMonoid, carrier_size: usize, table: &[Vec<usize>]) -> Result<SetAction, ActionError> {
    let flat = check_dims(table, carrier_size, actor.size(), carrier_size)?;
    let action = SetAction { actor_size: actor.size(), carrier_size, table: flat };
    action.law_witness(actor)?;
    Ok(action)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn negation_z2_on_z3() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2], vec![0, 2, 1]]
    }

    #[test]
    fn trivial_actions_accepted() {
        let a = FiniteMonoid::cyclic(2);
        let k = FiniteMonoid::cyclic(3);
        for side in [Side::Left, Side::Right] {
            let t = MonoidAction::trivial(side, 2, 3).rows();
            assert!(validate_monoid_action(side, &a, &k, &t).unwrap().is_trivial());
        }
    }

    #[test]
    fn negation_accepted_on_both_sides() {
        let a = FiniteMonoid::cyclic(2);
        let k = FiniteMonoid::cyclic(3);
        for side in [Side::Left, Side::Right] {
            let act = validate_monoid_action(side, &a, &k, &negation_z2_on_z3()).unwrap();
            assert_eq!(act.nontrivial_witness(), Some((1, 1)));
        }
    }

    #[test]
    fn constant_non_identity_rejected_as_non_endomorphism() {
        let a = FiniteMonoid::cyclic(2);
        let k = FiniteMonoid::cyclic(3);
        let t = vec![vec![0, 1, 2], vec![1, 1, 1]];
        let err = validate_monoid_action(Side::Left, &a, &k, &t).unwrap_err();
        // ¹(0+0) = 1 but ¹0 + ¹0 = 2
        assert_eq!(err, ActionError::NotEndomorphism(1, 0, 0));
    }

    #[test]
    fn composition_and_unit_failures() {
        let a = FiniteMonoid::cyclic(2);
        let k = FiniteMonoid::cyclic(2);
        // the zero endomorphism by the generator: (x^1)^1 = 0 but x^0 = x
        let t = vec![vec![0, 1], vec![0, 0]];
        assert_eq!(
            validate_monoid_action(Side::Right, &a, &k, &t),
            Err(ActionError::CompositionFails(vec![1, 1, 1]))
        );
        let t = vec![vec![0, 0], vec![0, 1]];
        assert_eq!(validate_monoid_action(Side::Right, &a, &k, &t), Err(ActionError::UnitActFails(1)));
        let t = vec![vec![0, 1]];
        assert!(matches!(validate_monoid_action(Side::Left, &a, &k, &t), Err(ActionError::DimensionMismatch { .. })));
    }

    #[test]
    fn set_actions() {
        let k = FiniteMonoid::cyclic(3);
        let constant = SetAction::constant(3, 4);
        assert_eq!(validate_set_action(&k, 4, &constant.rows()).unwrap(), constant);
        let trivial = FiniteMonoid::trivial();
        assert!(validate_set_action(&trivial, 2, &[vec![0], vec![1]]).is_ok());
        // a ∘ x = a + x on Z/3 is an action; perturb one entry
        let mut t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|x| (a + x) % 3).collect()).collect();
        assert!(validate_set_action(&k, 3, &t).is_ok());
        t[0][1] = 0;
        let err = validate_set_action(&k, 3, &t).unwrap_err();
        let ActionError::CompositionFails(w) = err else { panic!("{err:?}") };
        let act = SetAction::from_raw(3, 3, t.concat());
        assert_ne!(act.act(w[0], k.mul(w[1], w[2])), act.act(act.act(w[0], w[1]), w[2]));
    }
}
