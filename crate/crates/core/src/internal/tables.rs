//! Compact copies of a crossed semi-bimodule's tables and the two composite
//! monoids `A⋈K` and `A⋈K⋈K` built from them.

use std::sync::Arc;

use crate::crossed::CrossedSemiBimodule;
use crate::monoid::Monoid;

/// Flat `u32` tables; all lookups are a single index.
#[derive(Debug)]
pub(crate) struct Tables {
    pub na: usize,
    pub nk: usize,
    pub one_a: usize,
    pub one_k: usize,
    mul_a: Vec<u32>,
    mul_k: Vec<u32>,
    circ: Vec<u32>,
    lam: Vec<u32>,
    rho: Vec<u32>,
}

impl Tables {
    pub fn new(x: &CrossedSemiBimodule) -> Self {
        let (na, nk) = (x.a().size(), x.k().size());
        let grid = |n: usize, m: usize, f: &dyn Fn(usize, usize) -> usize| -> Vec<u32> {
            (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| f(i, j) as u32).collect()
        };
        Tables {
            na,
            nk,
            one_a: x.a().identity(),
            one_k: x.k().identity(),
            mul_a: grid(na, na, &|i, j| x.a().mul(i, j)),
            mul_k: grid(nk, nk, &|i, j| x.k().mul(i, j)),
            circ: grid(na, nk, &|a, k| x.act(a, k)),
            lam: grid(na, nk, &|a, k| x.left(a, k)),
            rho: grid(na, nk, &|a, k| x.right(k, a)),
        }
    }

    #[inline(always)]
    pub fn mul_a(&self, a: usize, b: usize) -> usize {
        self.mul_a[a * self.na + b] as usize
    }
    #[inline(always)]
    pub fn mul_k(&self, x: usize, y: usize) -> usize {
        self.mul_k[x * self.nk + y] as usize
    }
    /// `a ∘ x`
    #[inline(always)]
    pub fn circ(&self, a: usize, x: usize) -> usize {
        self.circ[a * self.nk + x] as usize
    }
    /// `ᵃx`
    #[inline(always)]
    pub fn lam(&self, a: usize, x: usize) -> usize {
        self.lam[a * self.nk + x] as usize
    }
    /// `xᵃ`
    #[inline(always)]
    pub fn rho(&self, x: usize, a: usize) -> usize {
        self.rho[a * self.nk + x] as usize
    }

    #[inline(always)]
    pub fn pair(&self, a: usize, x: usize) -> usize {
        a * self.nk + x
    }
    #[inline(always)]
    pub fn unpair(&self, p: usize) -> (usize, usize) {
        (p / self.nk, p % self.nk)
    }
    #[inline(always)]
    pub fn triple(&self, a: usize, x: usize, y: usize) -> usize {
        (a * self.nk + x) * self.nk + y
    }
    #[inline(always)]
    pub fn untriple(&self, t: usize) -> (usize, usize, usize) {
        let (p, y) = (t / self.nk, t % self.nk);
        (p / self.nk, p % self.nk, y)
    }

    /// `(a, x)∙(b, y) = (ab, ᵃy·x^(b∘y))` on coordinates.
    #[inline(always)]
    pub fn pair_mul(&self, a: usize, x: usize, b: usize, y: usize) -> (usize, usize) {
        (self.mul_a(a, b), self.mul_k(self.lam(a, y), self.rho(x, self.circ(b, y))))
    }

    /// `(a, x, y)∙(b, u, v) = (ab, ᵃu·x^(b∘u), ^(a∘x)v·y^((b∘u)∘v))`, the
    /// product of `((a,x), (a∘x,y))` and `((b,u), (b∘u,v))` in `C1 × C1`.
    #[inline(always)]
    pub fn triple_mul(&self, (a, x, y): (usize, usize, usize), (b, u, v): (usize, usize, usize)) -> (usize, usize, usize) {
        let bu = self.circ(b, u);
        let second = self.mul_k(self.lam(a, u), self.rho(x, bu));
        let third = self.mul_k(self.lam(self.circ(a, x), v), self.rho(y, self.circ(bu, v)));
        (self.mul_a(a, b), second, third)
    }
}

/// `A⋈K` evaluated from the component tables, numbered `a·|K| + x`.
#[derive(Clone, Debug)]
pub struct Bowtie {
    pub(crate) t: Arc<Tables>,
}

impl Monoid for Bowtie {
    fn size(&self) -> usize {
        self.t.na * self.t.nk
    }
    fn identity(&self) -> usize {
        self.t.pair(self.t.one_a, self.t.one_k)
    }
    #[inline]
    fn mul(&self, p: usize, q: usize) -> usize {
        let ((a, x), (b, y)) = (self.t.unpair(p), self.t.unpair(q));
        let (c, z) = self.t.pair_mul(a, x, b, y);
        self.t.pair(c, z)
    }
    fn mul_row(&self, p: usize, out: &mut [usize]) {
        let t = &*self.t;
        let (a, x) = t.unpair(p);
        let mut slots = out.iter_mut();
        for b in 0..t.na {
            let base = t.mul_a(a, b) * t.nk;
            for y in 0..t.nk {
                *slots.next().expect("row length") = base + t.mul_k(t.lam(a, y), t.rho(x, t.circ(b, y)));
            }
        }
    }
}

/// `A⋈K⋈K` evaluated from the component tables, numbered `(a·|K| + x)·|K| + y`.
#[derive(Clone, Debug)]
pub struct DoubleBowtie {
    pub(crate) t: Arc<Tables>,
}

impl DoubleBowtie {
    pub fn new(x: &CrossedSemiBimodule) -> Self {
        DoubleBowtie { t: Arc::new(Tables::new(x)) }
    }
}

impl Monoid for DoubleBowtie {
    fn size(&self) -> usize {
        self.t.na * self.t.nk * self.t.nk
    }
    fn identity(&self) -> usize {
        self.t.triple(self.t.one_a, self.t.one_k, self.t.one_k)
    }
    #[inline]
    fn mul(&self, p: usize, q: usize) -> usize {
        let (a, x, y) = self.t.triple_mul(self.t.untriple(p), self.t.untriple(q));
        self.t.triple(a, x, y)
    }
    fn mul_row(&self, p: usize, out: &mut [usize]) {
        let t = &*self.t;
        let (a, x, y) = t.untriple(p);
        let ax = t.circ(a, x);
        let mut slots = out.iter_mut();
        for b in 0..t.na {
            let ab = t.mul_a(a, b);
            for u in 0..t.nk {
                let bu = t.circ(b, u);
                let base = (ab * t.nk + t.mul_k(t.lam(a, u), t.rho(x, bu))) * t.nk;
                for v in 0..t.nk {
                    *slots.next().expect("row length") = base + t.mul_k(t.lam(ax, v), t.rho(y, t.circ(bu, v)));
                }
            }
        }
    }
}
