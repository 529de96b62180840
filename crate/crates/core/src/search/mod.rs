//! Exhaustive enumeration of crossed structures on fixed small monoids.
//!
//! Action and boundary tables are filled cell by cell with constraint
//! propagation: `λ` first, then `ρ`, then `∘` (or `∂` then `ρ` for the
//! boundary kinds). Every law and axiom is posted as ground equations and
//! checked as soon as the cells it reads are bound. Results are listed in lexicographic
//! order of the concatenated decision tables and each is re-validated.

mod classify;
mod engine;

use std::fmt;

use thiserror::Error;

use crate::action::{MonoidAction, SetAction, Side};
use crate::crossed::{validate_xmod, validate_xsmod, CrossedError, CrossedModule, CrossedSemiBimodule, CrossedSemiModule};
use crate::monoid::{FiniteMonoid, Monoid};

pub use classify::{classify, Classification};
pub(crate) use classify::group_roundtrip;

use engine::{Csp, SolveError, TableId, TermId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Xbsmod,
    Xsmod,
    Xmod,
    /// Left and right actions satisfying `(ᵃx)ᵇ = ᵃ(xᵇ)`.
    ActionPair,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Xbsmod => "xbsmod",
            Kind::Xsmod => "xsmod",
            Kind::Xmod => "xmod",
            Kind::ActionPair => "actionpair",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "xbsmod" => Ok(Kind::Xbsmod),
            "xsmod" => Ok(Kind::Xsmod),
            "xmod" => Ok(Kind::Xmod),
            "actionpair" => Ok(Kind::ActionPair),
            _ => Err(format!("unknown kind `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search exceeded its budget after {0} nodes")]
    BudgetExceeded(u64),
    #[error("|A| = {a}, |K| = {k} exceeds the cap {cap}")]
    CapExceeded { a: usize, k: usize, cap: usize },
    #[error("kind {0} needs both monoids to be groups")]
    NotGroups(Kind),
    #[error("enumerated structure fails validation: {0}")]
    Unsound(CrossedError),
    #[error("{claim}: {structure}")]
    MismatchWitness { claim: &'static str, structure: String },
}

#[derive(Clone, Debug)]
pub struct EnumerationTask {
    pub a: FiniteMonoid,
    pub k: FiniteMonoid,
    pub kind: Kind,
    /// Largest allowed `|A|` and `|K|`.
    pub cap: usize,
    pub node_budget: Option<u64>,
}

impl EnumerationTask {
    pub fn new(a: FiniteMonoid, k: FiniteMonoid, kind: Kind) -> Self {
        EnumerationTask { a, k, kind, cap: 4, node_budget: None }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

/// One enumerated structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Xbsmod(CrossedSemiBimodule),
    Xsmod(CrossedSemiModule),
    Xmod(CrossedModule),
    ActionPair { lambda: MonoidAction, rho: MonoidAction },
}

struct Builder {
    csp: Csp,
    na: usize,
    nk: usize,
    mul_a: TableId,
    mul_k: TableId,
    one_a: usize,
    one_k: usize,
}

impl Builder {
    fn new(a: &FiniteMonoid, k: &FiniteMonoid) -> Self {
        let mut csp = Csp::default();
        let (na, nk) = (a.size(), k.size());
        let mul_a = csp.fixed(na, na, na, a.rows().into_iter().flatten());
        let mul_k = csp.fixed(nk, nk, nk, k.rows().into_iter().flatten());
        Builder { csp, na, nk, mul_a, mul_k, one_a: a.identity(), one_k: k.identity() }
    }

    fn c(&mut self, v: usize) -> TermId {
        self.csp.c(v)
    }

    fn at(&mut self, t: TableId, r: TermId, c: TermId) -> TermId {
        self.csp.at(t, r, c)
    }

    fn ma(&mut self, x: TermId, y: TermId) -> TermId {
        self.csp.at(self.mul_a, x, y)
    }

    fn mk(&mut self, x: TermId, y: TermId) -> TermId {
        self.csp.at(self.mul_k, x, y)
    }

    fn pairs(&self, n: usize, m: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect()
    }

    /// Unit, endomorphism, unit-fixing and composition laws for an action of
    /// `A` on `K` stored with row `a`, column `x`.
    fn monoid_action_laws(&mut self, t: TableId, side: Side) {
        let (na, nk) = (self.na, self.nk);
        let (one_a, one_k) = (self.c(self.one_a), self.c(self.one_k));
        for x in 0..nk {
            let cx = self.c(x);
            let l = self.at(t, one_a, cx);
            self.csp.eq(l, cx);
        }
        for a in 0..na {
            let ca = self.c(a);
            let l = self.at(t, ca, one_k);
            self.csp.eq(l, one_k);
            for (x, y) in self.pairs(nk, nk) {
                let (cx, cy) = (self.c(x), self.c(y));
                let xy = self.mk(cx, cy);
                let lhs = self.at(t, ca, xy);
                let (ax, ay) = (self.at(t, ca, cx), self.at(t, ca, cy));
                let rhs = self.mk(ax, ay);
                self.csp.eq(lhs, rhs);
            }
        }
        for (a, b) in self.pairs(na, na) {
            let (ca, cb) = (self.c(a), self.c(b));
            let ab = self.ma(ca, cb);
            for x in 0..nk {
                let cx = self.c(x);
                let lhs = self.at(t, ab, cx);
                let rhs = match side {
                    Side::Left => {
                        let bx = self.at(t, cb, cx);
                        self.at(t, ca, bx)
                    }
                    Side::Right => {
                        let xa = self.at(t, ca, cx);
                        self.at(t, cb, xa)
                    }
                };
                self.csp.eq(lhs, rhs);
            }
        }
    }

    fn set_action_laws(&mut self, circ: TableId) {
        let one_k = self.c(self.one_k);
        for a in 0..self.na {
            let ca = self.c(a);
            let l = self.at(circ, ca, one_k);
            self.csp.eq(l, ca);
            for (x, y) in self.pairs(self.nk, self.nk) {
                let (cx, cy) = (self.c(x), self.c(y));
                let xy = self.mk(cx, cy);
                let lhs = self.at(circ, ca, xy);
                let ax = self.at(circ, ca, cx);
                let rhs = self.at(circ, ax, cy);
                self.csp.eq(lhs, rhs);
            }
        }
    }

    /// `(ᵃx)ᵇ = ᵃ(xᵇ)`
    fn compatibility(&mut self, lam: TableId, rho: TableId) {
        for (a, b) in self.pairs(self.na, self.na) {
            let (ca, cb) = (self.c(a), self.c(b));
            for x in 0..self.nk {
                let cx = self.c(x);
                let ax = self.at(lam, ca, cx);
                let lhs = self.at(rho, cb, ax);
                let xb = self.at(rho, cb, cx);
                let rhs = self.at(lam, ca, xb);
                self.csp.eq(lhs, rhs);
            }
        }
    }

    fn xbs_axioms(&mut self, lam: TableId, rho: TableId, circ: TableId) {
        self.compatibility(lam, rho);
        for (a, b) in self.pairs(self.na, self.na) {
            let (ca, cb) = (self.c(a), self.c(b));
            let ab = self.ma(ca, cb);
            for x in 0..self.nk {
                let cx = self.c(x);
                // (ab)∘(ᵃx) = a(b∘x)
                let ax = self.at(lam, ca, cx);
                let lhs = self.at(circ, ab, ax);
                let bx = self.at(circ, cb, cx);
                let rhs = self.ma(ca, bx);
                self.csp.eq(lhs, rhs);
                // (ab)∘(xᵇ) = (a∘x)b
                let xb = self.at(rho, cb, cx);
                let lhs = self.at(circ, ab, xb);
                let a_x = self.at(circ, ca, cx);
                let rhs = self.ma(a_x, cb);
                self.csp.eq(lhs, rhs);
                // ᵃy·x^(b∘y) = xᵇ·^(a∘x)y
                for y in 0..self.nk {
                    let cy = self.c(y);
                    let ay = self.at(lam, ca, cy);
                    let by = self.at(circ, cb, cy);
                    let x_by = self.at(rho, by, cx);
                    let lhs = self.mk(ay, x_by);
                    let axy = self.at(lam, a_x, cy);
                    let rhs = self.mk(xb, axy);
                    self.csp.eq(lhs, rhs);
                }
            }
        }
    }

    /// `∂(1) = 1`, `∂(xy) = ∂(x)∂(y)`.
    fn boundary_hom(&mut self, d: TableId) {
        let zero = self.c(0);
        let (one_a, one_k) = (self.c(self.one_a), self.c(self.one_k));
        let l = self.at(d, zero, one_k);
        self.csp.eq(l, one_a);
        for (x, y) in self.pairs(self.nk, self.nk) {
            let (cx, cy) = (self.c(x), self.c(y));
            let xy = self.mk(cx, cy);
            let lhs = self.at(d, zero, xy);
            let (dx, dy) = (self.at(d, zero, cx), self.at(d, zero, cy));
            let rhs = self.ma(dx, dy);
            self.csp.eq(lhs, rhs);
        }
    }

    /// `a∂(xᵃ) = ∂(x)a` and `yx^∂(y) = xy`.
    fn xsmod_axioms(&mut self, d: TableId, rho: TableId) {
        let zero = self.c(0);
        for (a, x) in self.pairs(self.na, self.nk) {
            let (ca, cx) = (self.c(a), self.c(x));
            let xa = self.at(rho, ca, cx);
            let dxa = self.at(d, zero, xa);
            let lhs = self.ma(ca, dxa);
            let dx = self.at(d, zero, cx);
            let rhs = self.ma(dx, ca);
            self.csp.eq(lhs, rhs);
        }
        for (x, y) in self.pairs(self.nk, self.nk) {
            let (cx, cy) = (self.c(x), self.c(y));
            let dy = self.at(d, zero, cy);
            let x_dy = self.at(rho, dy, cx);
            let lhs = self.mk(cy, x_dy);
            let rhs = self.mk(cx, cy);
            self.csp.eq(lhs, rhs);
        }
    }

    /// `∂(xᵃ) = a⁻¹∂(x)a` and `y^∂(x) = x⁻¹yx`.
    fn xmod_axioms(&mut self, d: TableId, rho: TableId, inv_a: TableId, inv_k: TableId) {
        let zero = self.c(0);
        for (a, x) in self.pairs(self.na, self.nk) {
            let (ca, cx) = (self.c(a), self.c(x));
            let xa = self.at(rho, ca, cx);
            let lhs = self.at(d, zero, xa);
            let ia = self.at(inv_a, zero, ca);
            let dx = self.at(d, zero, cx);
            let t = self.ma(ia, dx);
            let rhs = self.ma(t, ca);
            self.csp.eq(lhs, rhs);
        }
        for (x, y) in self.pairs(self.nk, self.nk) {
            let (cx, cy) = (self.c(x), self.c(y));
            let dx = self.at(d, zero, cx);
            let lhs = self.at(rho, dx, cy);
            let ix = self.at(inv_k, zero, cx);
            let t = self.mk(ix, cy);
            let rhs = self.mk(t, cx);
            self.csp.eq(lhs, rhs);
        }
    }
}

fn rows_to_action(side: Side, na: usize, nk: usize, v: Vec<usize>) -> MonoidAction {
    MonoidAction::from_raw(side, na, nk, v)
}

/// All structures of the requested kind on `(A, K)`, validated and sorted by
/// their row-major tables in declaration order: `λ`, `ρ`, `∘` for
/// crossed semi-bimodules, `∂` then `ρ` for the boundary kinds.
pub fn enumerate(task: &EnumerationTask) -> Result<Vec<Structure>, SearchError> {
    let (a, k) = (&task.a, &task.k);
    let (na, nk) = (a.size(), k.size());
    if na > task.cap || nk > task.cap {
        return Err(SearchError::CapExceeded { a: na, k: nk, cap: task.cap });
    }
    let mut b = Builder::new(a, k);
    let tables: Vec<TableId> = match task.kind {
        Kind::Xbsmod => {
            let lam = b.csp.decision(na, nk, nk);
            let rho = b.csp.decision(na, nk, nk);
            let circ = b.csp.decision(na, nk, na);
            b.monoid_action_laws(lam, Side::Left);
            b.monoid_action_laws(rho, Side::Right);
            b.set_action_laws(circ);
            b.xbs_axioms(lam, rho, circ);
            vec![lam, rho, circ]
        }
        Kind::ActionPair => {
            let lam = b.csp.decision(na, nk, nk);
            let rho = b.csp.decision(na, nk, nk);
            b.monoid_action_laws(lam, Side::Left);
            b.monoid_action_laws(rho, Side::Right);
            b.compatibility(lam, rho);
            vec![lam, rho]
        }
        Kind::Xsmod => {
            let d = b.csp.decision(1, nk, na);
            let rho = b.csp.decision(na, nk, nk);
            b.boundary_hom(d);
            b.monoid_action_laws(rho, Side::Right);
            b.xsmod_axioms(d, rho);
            vec![d, rho]
        }
        Kind::Xmod => {
            let (Some(ia), Some(ik)) = (a.inverses(), k.inverses()) else {
                return Err(SearchError::NotGroups(Kind::Xmod));
            };
            let inv_a = b.csp.fixed(1, na, na, ia);
            let inv_k = b.csp.fixed(1, nk, nk, ik);
            let d = b.csp.decision(1, nk, na);
            let rho = b.csp.decision(na, nk, nk);
            b.boundary_hom(d);
            b.monoid_action_laws(rho, Side::Right);
            b.xmod_axioms(d, rho, inv_a, inv_k);
            vec![d, rho]
        }
    };
    let mut raw: Vec<Vec<Vec<usize>>> = Vec::new();
    b.csp
        .solve(task.node_budget, &mut |s| raw.push(tables.iter().map(|&t| s.values(t).expect("complete")).collect()))
        .map_err(|SolveError::Budget(n)| SearchError::BudgetExceeded(n))?;
    raw.sort();
    raw.into_iter().map(|t| assemble(task.kind, a, k, t)).collect()
}

fn assemble(kind: Kind, a: &FiniteMonoid, k: &FiniteMonoid, mut t: Vec<Vec<usize>>) -> Result<Structure, SearchError> {
    let (na, nk) = (a.size(), k.size());
    let unsound = SearchError::Unsound;
    match kind {
        Kind::Xbsmod => {
            let circ = SetAction::from_raw(nk, na, t.pop().expect("circ"));
            let rho = rows_to_action(Side::Right, na, nk, t.pop().expect("rho"));
            let lam = rows_to_action(Side::Left, na, nk, t.pop().expect("lambda"));
            CrossedSemiBimodule::new(a.clone(), k.clone(), circ, lam, rho).map(Structure::Xbsmod).map_err(unsound)
        }
        Kind::ActionPair => {
            let rho = rows_to_action(Side::Right, na, nk, t.pop().expect("rho"));
            let lambda = rows_to_action(Side::Left, na, nk, t.pop().expect("lambda"));
            lambda.law_witness(a, k).map_err(|e| unsound(CrossedError::Action { which: "lambda", source: e }))?;
            rho.law_witness(a, k).map_err(|e| unsound(CrossedError::Action { which: "rho", source: e }))?;
            Ok(Structure::ActionPair { lambda, rho })
        }
        Kind::Xsmod => {
            let rho = rows_to_action(Side::Right, na, nk, t.pop().expect("rho"));
            let d = t.pop().expect("partial");
            validate_xsmod(a.clone(), k.clone(), &d, rho).map(Structure::Xsmod).map_err(unsound)
        }
        Kind::Xmod => {
            let rho = rows_to_action(Side::Right, na, nk, t.pop().expect("rho"));
            let d = t.pop().expect("partial");
            validate_xmod(a.clone(), k.clone(), &d, rho).map(Structure::Xmod).map_err(unsound)
        }
    }
}

macro_rules! typed {
    ($name:ident, $kind:expr, $variant:ident, $ty:ty) => {
        pub fn $name(a: &FiniteMonoid, k: &FiniteMonoid, cap: usize) -> Result<Vec<$ty>, SearchError> {
            let task = EnumerationTask::new(a.clone(), k.clone(), $kind).with_cap(cap);
            Ok(enumerate(&task)?
                .into_iter()
                .map(|s| match s {
                    Structure::$variant(x) => x,
                    _ => unreachable!(),
                })
                .collect())
        }
    };
}

typed!(enumerate_xbsmod, Kind::Xbsmod, Xbsmod, CrossedSemiBimodule);
typed!(enumerate_xsmod, Kind::Xsmod, Xsmod, CrossedSemiModule);
typed!(enumerate_xmod, Kind::Xmod, Xmod, CrossedModule);

pub fn enumerate_action_pairs(a: &FiniteMonoid, k: &FiniteMonoid, cap: usize) -> Result<Vec<(MonoidAction, MonoidAction)>, SearchError> {
    let task = EnumerationTask::new(a.clone(), k.clone(), Kind::ActionPair).with_cap(cap);
    Ok(enumerate(&task)?
        .into_iter()
        .map(|s| match s {
            Structure::ActionPair { lambda, rho } => (lambda, rho),
            _ => unreachable!(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    fn m(name: &str) -> FiniteMonoid {
        lookup(name).unwrap()
    }

    #[test]
    fn forced_cases() {
        for (a, k) in [("trivial", "trivial"), ("trivial", "z2"), ("z2", "trivial")] {
            assert_eq!(enumerate_xbsmod(&m(a), &m(k), 4).unwrap().len(), 1, "{a} {k}");
        }
    }

    #[test]
    fn z2_z2_xmods() {
        // ∂ ∈ {0, id}, trivial action only
        let found = enumerate_xmod(&m("z2"), &m("z2"), 4).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(enumerate(&EnumerationTask::new(m("u2"), m("z2"), Kind::Xmod)), Err(SearchError::NotGroups(Kind::Xmod)));
    }

    #[test]
    fn caps_and_budget() {
        let task = EnumerationTask::new(m("z5"), m("z2"), Kind::Xbsmod);
        assert!(matches!(enumerate(&task), Err(SearchError::CapExceeded { .. })));
        let mut task = EnumerationTask::new(m("z3"), m("z3"), Kind::Xbsmod);
        task.node_budget = Some(1);
        assert!(matches!(enumerate(&task), Err(SearchError::BudgetExceeded(_))));
    }

    #[test]
    fn deterministic() {
        let a = enumerate_xbsmod(&m("u2"), &m("z3"), 4).unwrap();
        assert_eq!(a, enumerate_xbsmod(&m("u2"), &m("z3"), 4).unwrap());
    }
}
