use crate::monoid::Monoid;
use crate::witness::Witness;

use super::verify::{pullback_table, Report};
use super::{InternalCategory, InternalError};

/// The underlying small category: objects are elements of `C0`, arrows are
/// elements of `C1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallCategory {
    pub objects: usize,
    /// `d11`
    pub source: Vec<usize>,
    /// `d10`
    pub target: Vec<usize>,
    /// `s00`
    pub identity: Vec<usize>,
    /// `compose[f·n + g]` is `f∘g` when `source(f) = target(g)`.
    compose: Vec<Option<usize>>,
}

impl SmallCategory {
    pub fn arrows(&self) -> usize {
        self.source.len()
    }

    /// `f∘g`: first `g`, then `f`. Defined when `source(f) = target(g)`.
    pub fn compose(&self, f: usize, g: usize) -> Result<usize, InternalError> {
        self.compose[f * self.arrows() + g].ok_or(InternalError::NotComposable(f, g))
    }

    /// Unit, associativity and endpoint bookkeeping over all arrows.
    pub fn law_report(&self) -> Report {
        let n = self.arrows();
        let mut report = Report::default();
        let unit = (0..n).find(|&f| {
            self.compose(f, self.identity[self.source[f]]).ok() != Some(f)
                || self.compose(self.identity[self.target[f]], f).ok() != Some(f)
        });
        report.push("category unit", unit.map(|f| Witness::of(&[f])));
        let identities = (0..self.objects).find(|&o| {
            let i = self.identity[o];
            self.source[i] != o || self.target[i] != o
        });
        report.push("category identity endpoints", identities.map(|o| Witness::of(&[o])));

        let mut endpoints = None;
        let mut assoc = None;
        'outer: for f in 0..n {
            for g in 0..n {
                let Ok(fg) = self.compose(f, g) else { continue };
                if endpoints.is_none() && (self.source[fg] != self.source[g] || self.target[fg] != self.target[f]) {
                    endpoints = Some(Witness::of(&[f, g]));
                }
                if assoc.is_some() {
                    continue;
                }
                for h in 0..n {
                    let Ok(gh) = self.compose(g, h) else { continue };
                    if self.compose(fg, h).ok() != self.compose(f, gh).ok() {
                        assoc = Some(Witness::of(&[f, g, h]));
                        if endpoints.is_some() {
                            break 'outer;
                        }
                        break;
                    }
                }
            }
        }
        report.push("category endpoints", endpoints);
        report.push("category assoc", assoc);
        let defined = (0..n)
            .flat_map(|f| (0..n).map(move |g| (f, g)))
            .find(|&(f, g)| self.compose(f, g).is_ok() != (self.source[f] == self.target[g]));
        report.push("category domain", defined.map(|(f, g)| Witness::of(&[f, g])));
        report.finish()
    }
}

/// Composition through the unique pullback element: `f∘g = d21(h)` where
/// `d20(h) = f` and `d22(h) = g`.
pub fn materialize_category(c: &InternalCategory) -> Result<SmallCategory, InternalError> {
    let table = pullback_table(c).ok_or_else(|| {
        let mut r = Report::default();
        r.push("pullback", Some(Witness::of(&[])));
        InternalError::Unverified(r)
    })?;
    let compose = table.into_iter().map(|h| h.map(|h| c.d21[h])).collect();
    Ok(SmallCategory {
        objects: c.c0.size(),
        source: c.d11.clone(),
        target: c.d10.clone(),
        identity: c.s00.clone(),
        compose,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::{phi, validate_xsmod};
    use crate::monoid::FiniteMonoid;
    use crate::{MonoidAction, Side};

    #[test]
    fn z2_sum_category() {
        let z2 = FiniteMonoid::cyclic(2);
        let x = phi(&validate_xsmod(z2.clone(), z2, &[0, 1], MonoidAction::trivial(Side::Right, 2, 2)).unwrap());
        let c = InternalCategory::from_xbsmod(&x);
        let cat = materialize_category(&c).unwrap();
        assert!(cat.law_report().all_pass());
        // (a, x) goes from a+x to a
        assert_eq!((cat.source[1], cat.target[1]), (1, 0));
        // ((0,1), (1,1)) ↦ (0, 1+1) = (0,0)
        assert_eq!(cat.compose(1, 3).unwrap(), 0);
        assert_eq!(cat.compose(1, 1), Err(InternalError::NotComposable(1, 1)));
    }
}
