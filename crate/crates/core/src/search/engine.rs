//! A small finite-domain solver over partially filled tables.
//!
//! Constraints are ground equations between terms built from constants and
//! table lookups whose indices are themselves terms. An equation is blocked
//! on the first unbound cell met while evaluating each side and is watched
//! there. When one side is known and the other is missing only its outermost
//! cell, that cell is forced.

use std::collections::HashMap;

const UNBOUND: u8 = u8::MAX;

pub(crate) type TermId = u32;
pub(crate) type TableId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Term {
    Const(u8),
    At { table: TableId, row: TermId, col: TermId },
}

#[derive(Clone, Copy, Debug)]
struct Table {
    offset: usize,
    cols: usize,
    len: usize,
}

enum Ev {
    Known(u8),
    /// Blocked on `cell`; `outer` when it is the side's own lookup.
    Blocked { cell: usize, outer: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SolveError {
    Budget(u64),
}

#[derive(Default)]
pub(crate) struct Csp {
    tables: Vec<Table>,
    vals: Vec<u8>,
    domain: Vec<u8>,
    terms: Vec<Term>,
    interned: HashMap<Term, TermId>,
    eqs: Vec<(TermId, TermId)>,
    decisions: Vec<usize>,
    watch: Vec<Vec<u32>>,
    trail: Vec<usize>,
    watch_trail: Vec<usize>,
    queue: Vec<usize>,
    nodes: u64,
}

impl Csp {
    fn add_table(&mut self, rows: usize, cols: usize, domain: usize) -> TableId {
        assert!(domain < UNBOUND as usize, "domain too large");
        let offset = self.vals.len();
        self.tables.push(Table { offset, cols, len: rows * cols });
        self.vals.resize(offset + rows * cols, UNBOUND);
        self.domain.resize(offset + rows * cols, domain as u8);
        self.watch.resize(offset + rows * cols, Vec::new());
        self.tables.len() - 1
    }

    /// A table to be filled by search; its cells are decided row-major, after
    /// those of previously declared decision tables.
    pub fn decision(&mut self, rows: usize, cols: usize, domain: usize) -> TableId {
        let t = self.add_table(rows, cols, domain);
        let Table { offset, len, .. } = self.tables[t];
        self.decisions.extend(offset..offset + len);
        t
    }

    /// A fully known table, given row-major.
    pub fn fixed(&mut self, rows: usize, cols: usize, domain: usize, values: impl IntoIterator<Item = usize>) -> TableId {
        let t = self.add_table(rows, cols, domain);
        let offset = self.tables[t].offset;
        let mut n = 0;
        for (i, v) in values.into_iter().enumerate() {
            self.vals[offset + i] = v as u8;
            n += 1;
        }
        assert_eq!(n, rows * cols, "fixed table size");
        t
    }

    fn intern(&mut self, t: Term) -> TermId {
        if let Some(&id) = self.interned.get(&t) {
            return id;
        }
        let id = self.terms.len() as TermId;
        self.terms.push(t);
        self.interned.insert(t, id);
        id
    }

    pub fn c(&mut self, v: usize) -> TermId {
        self.intern(Term::Const(v as u8))
    }

    pub fn at(&mut self, table: TableId, row: TermId, col: TermId) -> TermId {
        self.intern(Term::At { table, row, col })
    }

    pub fn eq(&mut self, lhs: TermId, rhs: TermId) {
        if lhs != rhs {
            self.eqs.push((lhs, rhs));
        }
    }

    /// Current values of a table, `None` if any cell is unbound.
    pub fn values(&self, table: TableId) -> Option<Vec<usize>> {
        let Table { offset, len, .. } = self.tables[table];
        self.vals[offset..offset + len].iter().map(|&v| (v != UNBOUND).then_some(v as usize)).collect()
    }

    fn eval(&self, t: TermId) -> Ev {
        match self.terms[t as usize] {
            Term::Const(v) => Ev::Known(v),
            Term::At { table, row, col } => {
                let r = match self.eval(row) {
                    Ev::Known(v) => v as usize,
                    Ev::Blocked { cell, .. } => return Ev::Blocked { cell, outer: false },
                };
                let c = match self.eval(col) {
                    Ev::Known(v) => v as usize,
                    Ev::Blocked { cell, .. } => return Ev::Blocked { cell, outer: false },
                };
                let tb = self.tables[table];
                let cell = tb.offset + r * tb.cols + c;
                debug_assert!(r * tb.cols + c < tb.len);
                match self.vals[cell] {
                    UNBOUND => Ev::Blocked { cell, outer: true },
                    v => Ev::Known(v),
                }
            }
        }
    }

    fn add_watch(&mut self, cell: usize, eq: usize) {
        self.watch[cell].push(eq as u32);
        self.watch_trail.push(cell);
    }

    fn bind(&mut self, cell: usize, v: u8) {
        self.vals[cell] = v;
        self.trail.push(cell);
        self.queue.push(cell);
    }

    /// Evaluates one equation; false on conflict.
    fn examine(&mut self, eq: usize) -> bool {
        let (l, r) = self.eqs[eq];
        match (self.eval(l), self.eval(r)) {
            (Ev::Known(a), Ev::Known(b)) => a == b,
            (Ev::Known(v), Ev::Blocked { cell, outer: true }) | (Ev::Blocked { cell, outer: true }, Ev::Known(v)) => {
                if v >= self.domain[cell] {
                    return false;
                }
                self.bind(cell, v);
                true
            }
            (Ev::Known(_), Ev::Blocked { cell, .. }) | (Ev::Blocked { cell, .. }, Ev::Known(_)) => {
                self.add_watch(cell, eq);
                true
            }
            (Ev::Blocked { cell: c1, .. }, Ev::Blocked { cell: c2, .. }) => {
                self.add_watch(c1, eq);
                if c2 != c1 {
                    self.add_watch(c2, eq);
                }
                true
            }
        }
    }

    fn propagate(&mut self) -> bool {
        let mut head = 0;
        while head < self.queue.len() {
            let cell = self.queue[head];
            head += 1;
            let n = self.watch[cell].len();
            for i in 0..n {
                let eq = self.watch[cell][i] as usize;
                if !self.examine(eq) {
                    self.queue.clear();
                    return false;
                }
            }
        }
        self.queue.clear();
        true
    }

    fn undo(&mut self, trail: usize, watches: usize) {
        for cell in self.trail.drain(trail..) {
            self.vals[cell] = UNBOUND;
        }
        for cell in self.watch_trail.drain(watches..) {
            self.watch[cell].pop();
        }
    }

    /// Calls `found` on every complete assignment; stops with an error when
    /// more than `budget` decisions are tried.
    pub fn solve(&mut self, budget: Option<u64>, found: &mut dyn FnMut(&Csp)) -> Result<u64, SolveError> {
        self.nodes = 0;
        for eq in 0..self.eqs.len() {
            if !self.examine(eq) {
                return Ok(0);
            }
        }
        if self.propagate() {
            self.descend(0, budget, found)?;
        }
        Ok(self.nodes)
    }

    fn descend(&mut self, from: usize, budget: Option<u64>, found: &mut dyn FnMut(&Csp)) -> Result<(), SolveError> {
        let Some(pos) = (from..self.decisions.len()).find(|&i| self.vals[self.decisions[i]] == UNBOUND) else {
            found(self);
            return Ok(());
        };
        let cell = self.decisions[pos];
        for v in 0..self.domain[cell] {
            self.nodes += 1;
            if budget.is_some_and(|b| self.nodes > b) {
                return Err(SolveError::Budget(self.nodes));
            }
            let (t, w) = (self.trail.len(), self.watch_trail.len());
            self.bind(cell, v);
            if self.propagate() {
                self.descend(pos + 1, budget, found)?;
            }
            self.undo(t, w);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Endomorphisms of Z/n: f(x+y) = f(x)+f(y).
    fn endomorphisms(n: usize) -> Vec<Vec<usize>> {
        let mut csp = Csp::default();
        let add = csp.fixed(n, n, n, (0..n * n).map(|i| (i / n + i % n) % n));
        let f = csp.decision(1, n, n);
        let zero = csp.c(0);
        for x in 0..n {
            for y in 0..n {
                let (cx, cy) = (csp.c(x), csp.c(y));
                let xy = csp.c((x + y) % n);
                let lhs = csp.at(f, zero, xy);
                let (fx, fy) = (csp.at(f, zero, cx), csp.at(f, zero, cy));
                let rhs = csp.at(add, fx, fy);
                csp.eq(lhs, rhs);
            }
        }
        let mut out = Vec::new();
        csp.solve(None, &mut |s| out.push(s.values(f).unwrap())).unwrap();
        out
    }

    #[test]
    fn cyclic_endomorphisms() {
        for n in 1..7 {
            let ends = endomorphisms(n);
            assert_eq!(ends.len(), n);
            for (k, e) in ends.iter().enumerate() {
                assert_eq!(e, &(0..n).map(|x| k * x % n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let mut csp = Csp::default();
        csp.decision(1, 4, 3);
        assert_eq!(csp.solve(Some(5), &mut |_| {}), Err(SolveError::Budget(6)));
    }
}
