//! Independent oracles over raw tables, sharing no code with the library's
//! validators.

#![allow(dead_code)]

use crossed_monoids::crossed::CrossedSemiBimodule;
use crossed_monoids::{FiniteMonoid, Monoid};

pub type Table = Vec<Vec<usize>>;

/// A crossed semi-bimodule candidate as plain tables. `lam[a][x] = ᵃx`,
/// `rho[a][x] = xᵃ`, `circ[a][x] = a∘x`. Ordered by `λ`, then `ρ`, then `∘`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Raw {
    pub lam: Table,
    pub rho: Table,
    pub circ: Table,
}

#[derive(Clone, Debug)]
pub struct Pair {
    pub a: Table,
    pub ea: usize,
    pub k: Table,
    pub ek: usize,
}

impl Pair {
    pub fn of(a: &FiniteMonoid, k: &FiniteMonoid) -> Self {
        Pair { a: a.rows(), ea: a.identity(), k: k.rows(), ek: k.identity() }
    }

    pub fn na(&self) -> usize {
        self.a.len()
    }

    pub fn nk(&self) -> usize {
        self.k.len()
    }
}

pub fn raw(x: &CrossedSemiBimodule) -> Raw {
    Raw { circ: x.circ().rows(), lam: x.lambda().rows(), rho: x.rho().rows() }
}

fn all<F: Fn(usize) -> bool>(n: usize, f: F) -> bool {
    (0..n).all(f)
}

/// Right set action of `K` on `A`, left and right actions of `A` on `K` by
/// monoid endomorphisms, and the four compatibility identities.
pub fn is_xbsmod(p: &Pair, r: &Raw) -> bool {
    let (na, nk) = (p.na(), p.nk());
    let (ma, mk) = (&p.a, &p.k);
    let (c, l, rh) = (&r.circ, &r.lam, &r.rho);
    let circ_ok = all(na, |a| c[a][p.ek] == a && all(nk, |x| all(nk, |y| c[c[a][x]][y] == c[a][mk[x][y]])));
    let lam_ok = all(nk, |x| l[p.ea][x] == x)
        && all(na, |a| {
            l[a][p.ek] == p.ek
                && all(nk, |x| all(nk, |y| l[a][mk[x][y]] == mk[l[a][x]][l[a][y]]))
                && all(na, |b| all(nk, |x| l[a][l[b][x]] == l[ma[a][b]][x]))
        });
    let rho_ok = all(nk, |x| rh[p.ea][x] == x)
        && all(na, |a| {
            rh[a][p.ek] == p.ek
                && all(nk, |x| all(nk, |y| rh[a][mk[x][y]] == mk[rh[a][x]][rh[a][y]]))
                && all(na, |b| all(nk, |x| rh[b][rh[a][x]] == rh[ma[a][b]][x]))
        });
    if !(circ_ok && lam_ok && rho_ok) {
        return false;
    }
    all(na, |a| {
        all(na, |b| {
            all(nk, |x| {
                rh[b][l[a][x]] == l[a][rh[b][x]]
                    && c[ma[a][b]][l[a][x]] == ma[a][c[b][x]]
                    && c[ma[a][b]][rh[b][x]] == ma[c[a][x]][b]
                    && all(nk, |y| mk[l[a][y]][rh[c[b][y]][x]] == mk[rh[b][x]][l[c[a][x]][y]])
            })
        })
    })
}

/// Every table over `0..base` with `rows × cols` cells, in lexicographic order.
fn tables(rows: usize, cols: usize, base: usize) -> Vec<Table> {
    let cells = rows * cols;
    let mut out = Vec::new();
    let mut digits = vec![0usize; cells];
    loop {
        out.push(digits.chunks(cols).map(<[usize]>::to_vec).collect());
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// All crossed semi-bimodules on `p`, by filtering the full cross-product of
/// candidate tables.
pub fn naive_xbsmods(p: &Pair) -> Vec<Raw> {
    let (na, nk) = (p.na(), p.nk());
    let circs = tables(na, nk, na);
    let acts = tables(na, nk, nk);
    let mut out = Vec::new();
    for circ in &circs {
        for lam in &acts {
            for rho in &acts {
                let r = Raw { circ: circ.clone(), lam: lam.clone(), rho: rho.clone() };
                if is_xbsmod(p, &r) {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

/// `∂(y) = 1∘y` read off the tables.
pub fn boundary(p: &Pair, r: &Raw) -> Vec<usize> {
    (0..p.nk()).map(|y| r.circ[p.ea][y]).collect()
}

/// `y·x^{∂y} = x·^{∂x}y` for all `x, y`.
pub fn exchange_law(p: &Pair, r: &Raw) -> Option<(usize, usize)> {
    let d = boundary(p, r);
    let mk = &p.k;
    (0..p.nk())
        .flat_map(|x| (0..p.nk()).map(move |y| (x, y)))
        .find(|&(x, y)| mk[y][r.rho[d[y]][x]] != mk[x][r.lam[d[x]][y]])
}

/// Associativity and two-sided unit of `x⋄y = y·x^{∂y}`.
pub fn twist_is_monoid(p: &Pair, r: &Raw) -> Option<(usize, usize, usize)> {
    let d = boundary(p, r);
    let n = p.nk();
    let dia = |x: usize, y: usize| p.k[y][r.rho[d[y]][x]];
    if let Some(x) = (0..n).find(|&x| dia(p.ek, x) != x || dia(x, p.ek) != x) {
        return Some((x, x, x));
    }
    (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
        .find(|&(x, y, z)| dia(dia(x, y), z) != dia(x, dia(y, z)))
}

/// `∂(x·z^{∂x}) = ∂(z)·∂(x)`.
pub fn boundary_twist(p: &Pair, r: &Raw) -> Option<(usize, usize)> {
    let d = boundary(p, r);
    (0..p.nk())
        .flat_map(|x| (0..p.nk()).map(move |z| (x, z)))
        .find(|&(x, z)| d[p.k[x][r.rho[d[x]][z]]] != p.a[d[z]][d[x]])
}

/// `(b∘y)(c∘z) = (bc)∘(ᵇz·y^{c∘z})`.
pub fn circ_product_identity(p: &Pair, r: &Raw) -> Option<(usize, usize, usize, usize)> {
    let (na, nk) = (p.na(), p.nk());
    for b in 0..na {
        for y in 0..nk {
            for c in 0..na {
                for z in 0..nk {
                    let rhs = r.circ[p.a[b][c]][p.k[r.lam[b][z]][r.rho[r.circ[c][z]][y]]];
                    if p.a[r.circ[b][y]][r.circ[c][z]] != rhs {
                        return Some((b, y, c, z));
                    }
                }
            }
        }
    }
    None
}
