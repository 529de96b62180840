//! The internal category in monoids attached to a crossed semi-bimodule
//! `(A, K, ∘)`:
//!
//! ```text
//!   C2 = A⋈K⋈K  ⇉  C1 = A⋈K  ⇉  C0 = A
//! ```
//!
//! with faces `d10(a,x) = a`, `d11(a,x) = a∘x`, `d20(a,x,y) = (a,x)`,
//! `d21(a,x,y) = (a,xy)`, `d22(a,x,y) = (a∘x,y)` and degeneracies
//! `s00(a) = (a,1)`, `s10(a,x) = (a,x,1)`, `s11(a,x) = (a,1,x)`.
//!
//! An arrow `(a, x)` has target `d10 = a` and source `d11 = a∘x`.

mod category;
mod functor;
mod tables;
mod verify;

use thiserror::Error;

use crate::crossed::CrossedSemiBimodule;
use crate::monoid::{FiniteMonoid, Monoid};

pub use category::{materialize_category, SmallCategory};
pub use functor::{internal_functor, strict_internal_functor, verify_functor, weak_functor_maps, InternalFunctor};
pub use tables::{Bowtie, DoubleBowtie};
pub use verify::{verify_internal_category, CheckResult, Report};

use tables::Tables;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InternalError {
    #[error("arrows {0} and {1} are not composable")]
    NotComposable(usize, usize),
    #[error("verification failed:\n{0}")]
    Unverified(Report),
    #[error("{0}")]
    Shape(String),
}

/// The monoid of composable pairs, tabulated when small and evaluated
/// on demand otherwise.
#[derive(Clone, Debug)]
pub enum Level2 {
    Table(FiniteMonoid),
    Lazy(DoubleBowtie),
}

impl Monoid for Level2 {
    fn size(&self) -> usize {
        match self {
            Level2::Table(m) => m.size(),
            Level2::Lazy(m) => m.size(),
        }
    }
    fn identity(&self) -> usize {
        match self {
            Level2::Table(m) => m.identity(),
            Level2::Lazy(m) => m.identity(),
        }
    }
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Level2::Table(m) => m.mul(a, b),
            Level2::Lazy(m) => m.mul(a, b),
        }
    }
    fn mul_row(&self, a: usize, out: &mut [usize]) {
        match self {
            Level2::Table(m) => m.mul_row(a, out),
            Level2::Lazy(m) => m.mul_row(a, out),
        }
    }
}

impl Level2 {
    pub fn to_table(&self) -> FiniteMonoid {
        match self {
            Level2::Table(m) => m.clone(),
            Level2::Lazy(m) => FiniteMonoid::tabulate_unchecked(m),
        }
    }
}

/// Truncated simplicial monoid. The maps are plain index vectors so that a
/// verifier can be pointed at arbitrary (possibly broken) data.
#[derive(Clone, Debug)]
pub struct InternalCategory {
    pub c0: FiniteMonoid,
    pub c1: FiniteMonoid,
    pub c2: Level2,
    pub d10: Vec<usize>,
    pub d11: Vec<usize>,
    pub s00: Vec<usize>,
    pub d20: Vec<usize>,
    pub d21: Vec<usize>,
    pub d22: Vec<usize>,
    pub s10: Vec<usize>,
    pub s11: Vec<usize>,
}

/// How much of the verification may be sampled instead of exhausted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckPolicy {
    /// Associativity of `C2` is checked on all triples up to this size.
    pub max_exhaustive_c2: usize,
    /// Likewise for `C1`; `None` keeps it exhaustive.
    pub max_exhaustive_c1: Option<usize>,
    /// Triples drawn when it is not.
    pub samples: u64,
    pub seed: u64,
    /// Homomorphism checks out of `C2` sample this many pairs when `|C2|²`
    /// exceeds it; `None` keeps them exhaustive.
    pub max_exhaustive_pairs: Option<u64>,
}

impl Default for CheckPolicy {
    fn default() -> Self {
        CheckPolicy { max_exhaustive_c2: 4096, max_exhaustive_c1: None, samples: 1_000_000, seed: 0, max_exhaustive_pairs: None }
    }
}

/// `A⋈K` as a validated table.
pub fn bowtie(x: &CrossedSemiBimodule) -> FiniteMonoid {
    let b = Bowtie { t: std::sync::Arc::new(Tables::new(x)) };
    FiniteMonoid::tabulate(&b).expect("A⋈K is a monoid")
}

/// `A⋈K⋈K`, evaluated on demand.
pub fn double_bowtie(x: &CrossedSemiBimodule) -> DoubleBowtie {
    DoubleBowtie::new(x)
}

/// Tables of `C2` are kept when they have at most this many entries.
const TABULATE_C2_ENTRIES: usize = 1 << 22;

impl InternalCategory {
    /// Builds all levels and maps without checking anything.
    pub fn from_xbsmod(x: &CrossedSemiBimodule) -> Self {
        let c2 = DoubleBowtie::new(x);
        let t = c2.t.clone();
        let c1 = FiniteMonoid::tabulate_unchecked(&Bowtie { t: t.clone() });
        let (na, nk) = (t.na, t.nk);
        let pairs = || (0..na).flat_map(move |a| (0..nk).map(move |x| (a, x)));
        let triples = || pairs().flat_map(move |(a, x)| (0..nk).map(move |y| (a, x, y)));
        let c2_entries = c2.size() * c2.size();
        InternalCategory {
            c0: x.a().clone(),
            d10: pairs().map(|(a, _)| a).collect(),
            d11: pairs().map(|(a, x)| t.circ(a, x)).collect(),
            s00: (0..na).map(|a| t.pair(a, t.one_k)).collect(),
            d20: triples().map(|(a, x, _)| t.pair(a, x)).collect(),
            d21: triples().map(|(a, x, y)| t.pair(a, t.mul_k(x, y))).collect(),
            d22: triples().map(|(a, x, y)| t.pair(t.circ(a, x), y)).collect(),
            s10: pairs().map(|(a, x)| t.triple(a, x, t.one_k)).collect(),
            s11: pairs().map(|(a, x)| t.triple(a, t.one_k, x)).collect(),
            c1,
            c2: if c2_entries <= TABULATE_C2_ENTRIES {
                Level2::Table(FiniteMonoid::tabulate_unchecked(&c2))
            } else {
                Level2::Lazy(c2)
            },
        }
    }

    /// `(|C0|, |C1|, |C2|)`
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.c0.size(), self.c1.size(), self.c2.size())
    }
}

/// Builds the internal category and verifies every structural property.
pub fn build_internal_category(x: &CrossedSemiBimodule, policy: &CheckPolicy) -> Result<(InternalCategory, Report), InternalError> {
    let c = InternalCategory::from_xbsmod(x);
    let report = verify_internal_category(&c, policy);
    if report.all_pass() {
        Ok((c, report))
    } else {
        Err(InternalError::Unverified(report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{MonoidAction, Side};
    use crate::crossed::{phi, validate_xsmod};

    fn z2_sum() -> CrossedSemiBimodule {
        let z2 = FiniteMonoid::cyclic(2);
        phi(&validate_xsmod(z2.clone(), z2, &[0, 1], MonoidAction::trivial(Side::Right, 2, 2)).unwrap())
    }

    #[test]
    fn trivial_category() {
        let t = FiniteMonoid::trivial();
        let x = CrossedSemiBimodule::trivial_on(t.clone(), t).unwrap();
        let (c, report) = build_internal_category(&x, &CheckPolicy::default()).unwrap();
        assert_eq!(c.sizes(), (1, 1, 1));
        for map in [&c.d10, &c.d11, &c.s00, &c.d20, &c.d21, &c.d22, &c.s10, &c.s11] {
            assert_eq!(map, &vec![0]);
        }
        assert!(report.all_pass());
    }

    #[test]
    fn bowtie_units_and_twist() {
        let x = z2_sum();
        let b = bowtie(&x);
        assert_eq!(b.size(), 4);
        assert_eq!(b.identity(), 0);
        let tw = x.twist_monoid().unwrap();
        for p in 0..2 {
            for q in 0..2 {
                assert_eq!(b.mul(p, q), tw.mul(p, q));
            }
        }
    }

    #[test]
    fn faces_match_formulas() {
        let x = z2_sum();
        let c = InternalCategory::from_xbsmod(&x);
        for a in 0..2 {
            for k in 0..2 {
                assert_eq!(c.d11[a * 2 + k], x.act(a, k));
                assert_eq!(c.d10[a * 2 + k], a);
            }
        }
    }

    #[test]
    fn trivial_k_gives_a_at_every_level() {
        let z3 = FiniteMonoid::cyclic(3);
        let x = CrossedSemiBimodule::trivial_on(z3.clone(), FiniteMonoid::trivial()).unwrap();
        let c = InternalCategory::from_xbsmod(&x);
        assert_eq!(c.c1, z3);
        assert_eq!(c.c2.to_table(), z3);
    }

    #[test]
    fn swapped_face_is_caught() {
        let x = z2_sum();
        let mut c = InternalCategory::from_xbsmod(&x);
        c.d21 = c.d20.clone();
        let report = verify_internal_category(&c, &CheckPolicy::default());
        let failed: Vec<&str> = report.failures().map(|r| r.name.as_str()).collect();
        assert!(failed.contains(&"simplicial d21.s11=id"), "{report}");
        assert!(failed.contains(&"simplicial d11.d21=d11.d22"), "{report}");
        assert!(!failed.iter().any(|n| n.starts_with("hom")), "{report}");
    }
}
