//! Finite monoids given by multiplication tables, and homomorphisms between them.
//!
//! Elements are dense indices `0..size`. The entry at `(i, j)` is the product
//! `i·j`, read "i then j". The identity is stored explicitly and need not be 0.

use rand::Rng;
use thiserror::Error;

/// Anything with an associative product and a unit on `0..size`.
///
/// Implemented by [`FiniteMonoid`] and by the lazily evaluated composite
/// monoids built from crossed semi-bimodules, which may be too large to tabulate.
pub trait Monoid {
    fn size(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;

    /// Writes `a·b` for every `b` into `out`.
    fn mul_row(&self, a: usize, out: &mut [usize]) {
        for (b, slot) in out.iter_mut().enumerate() {
            *slot = self.mul(a, b);
        }
    }
}

impl<M: Monoid + ?Sized> Monoid for &M {
    fn size(&self) -> usize {
        (**self).size()
    }
    fn identity(&self) -> usize {
        (**self).identity()
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        (**self).mul(a, b)
    }
    fn mul_row(&self, a: usize, out: &mut [usize]) {
        (**self).mul_row(a, out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("monoid table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("identity index {0} out of range")]
    IdentityOutOfRange(usize),
    #[error("entry ({0},{1}) is out of range")]
    IndexOutOfRange(usize, usize),
    #[error("not associative at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("identity fails at element {0}")]
    BadIdentity(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has length {len}, source has {size} elements")]
    LengthMismatch { len: usize, size: usize },
    #[error("image of {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("identity is not preserved")]
    IdentityNotPreserved,
    #[error("product not preserved at ({0},{1})")]
    ProductNotPreserved(usize, usize),
}

/// A monoid stored as a full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<u32>,
    identity: usize,
}

impl Monoid for FiniteMonoid {
    #[inline]
    fn size(&self) -> usize {
        self.size
    }
    #[inline]
    fn identity(&self) -> usize {
        self.identity
    }
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }
    fn mul_row(&self, a: usize, out: &mut [usize]) {
        for (slot, &v) in out.iter_mut().zip(&self.table[a * self.size..(a + 1) * self.size]) {
            *slot = v as usize;
        }
    }
}

/// Validates a multiplication table given as rows.
pub fn validate_monoid(rows: &[Vec<usize>], identity: usize) -> Result<FiniteMonoid, MonoidError> {
    let size = rows.len();
    if size == 0 {
        return Err(MonoidError::Empty);
    }
    for (row, r) in rows.iter().enumerate() {
        if r.len() != size {
            return Err(MonoidError::NotSquare { row, len: r.len(), size });
        }
    }
    FiniteMonoid::from_flat(size, rows.iter().flatten().copied().collect(), identity)
}

impl FiniteMonoid {
    /// Validates a row-major table of `size * size` entries.
    pub fn from_flat(size: usize, table: Vec<usize>, identity: usize) -> Result<Self, MonoidError> {
        if size == 0 {
            return Err(MonoidError::Empty);
        }
        if table.len() != size * size {
            return Err(MonoidError::NotSquare { row: table.len() / size, len: table.len() % size, size });
        }
        if identity >= size {
            return Err(MonoidError::IdentityOutOfRange(identity));
        }
        if let Some(pos) = table.iter().position(|&v| v >= size) {
            return Err(MonoidError::IndexOutOfRange(pos / size, pos % size));
        }
        let m = FiniteMonoid { size, table: table.into_iter().map(|v| v as u32).collect(), identity };
        if let Some((i, j, k)) = associativity_witness(&m) {
            return Err(MonoidError::NotAssociative(i, j, k));
        }
        if let Some(i) = identity_witness(&m) {
            return Err(MonoidError::BadIdentity(i));
        }
        Ok(m)
    }

    /// Tabulates any [`Monoid`] and re-validates the result exhaustively.
    pub fn tabulate<M: Monoid>(m: &M) -> Result<Self, MonoidError> {
        let n = m.size();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(m.mul(i, j));
            }
        }
        Self::from_flat(n, table, m.identity())
    }

    /// Tabulates without re-checking associativity; the caller verifies later.
    pub(crate) fn tabulate_unchecked<M: Monoid>(m: &M) -> Self {
        let n = m.size();
        let mut row = vec![0; n];
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            m.mul_row(i, &mut row);
            table.extend(row.iter().map(|&v| v as u32));
        }
        FiniteMonoid { size: n, table, identity: m.identity() }
    }

    pub fn trivial() -> Self {
        FiniteMonoid { size: 1, table: vec![0], identity: 0 }
    }

    /// The additive group ℤ/n with identity 0.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
        FiniteMonoid { size: n, table, identity: 0 }
    }

    /// Direct product with pairs numbered `i * other.size + j`.
    pub fn direct_product(&self, other: &FiniteMonoid) -> Self {
        let (n, m) = (self.size, other.size);
        let mut table = Vec::with_capacity(n * m * n * m);
        for i in 0..n * m {
            for j in 0..n * m {
                let a = self.mul(i / m, j / m);
                let b = other.mul(i % m, j % m);
                table.push((a * m + b) as u32);
            }
        }
        FiniteMonoid { size: n * m, table, identity: self.identity * m + other.identity }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// The two-sided inverse of `x`, if any.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        (0..self.size).find(|&y| self.mul(x, y) == self.identity && self.mul(y, x) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.size).all(|x| self.inverse(x).is_some())
    }

    /// Inverse table; `None` unless this is a group.
    pub fn inverses(&self) -> Option<Vec<usize>> {
        (0..self.size).map(|x| self.inverse(x)).collect()
    }

    /// First `(x, y)` with `xy != yx`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        for x in 0..self.size {
            for y in 0..self.size {
                if self.mul(x, y) != self.mul(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }
}

/// First `(i, j, k)` in lexicographic order with `(ij)k != i(jk)`.
pub fn associativity_witness<M: Monoid>(m: &M) -> Option<(usize, usize, usize)> {
    let n = m.size();
    for i in 0..n {
        for j in 0..n {
            let ij = m.mul(i, j);
            for k in 0..n {
                if m.mul(ij, k) != m.mul(i, m.mul(j, k)) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Checks associativity on `samples` uniformly drawn triples.
pub fn sampled_associativity_witness<M: Monoid, R: Rng>(
    m: &M,
    samples: u64,
    rng: &mut R,
) -> Option<(usize, usize, usize)> {
    let n = m.size();
    for _ in 0..samples {
        let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        if m.mul(m.mul(i, j), k) != m.mul(i, m.mul(j, k)) {
            return Some((i, j, k));
        }
    }
    None
}

/// First element at which the stored identity is not two-sided.
pub fn identity_witness<M: Monoid>(m: &M) -> Option<usize> {
    let e = m.identity();
    (0..m.size()).find(|&i| m.mul(e, i) != i || m.mul(i, e) != i)
}

/// A map between finite monoids that preserves the unit and products.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidHom {
    map: Vec<usize>,
    target_size: usize,
}

impl MonoidHom {
    pub fn identity(size: usize) -> Self {
        MonoidHom { map: (0..size).collect(), target_size: size }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source_size(&self) -> usize {
        self.map.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &MonoidHom) -> MonoidHom {
        MonoidHom { map: self.map.iter().map(|&x| other.apply(x)).collect(), target_size: other.target_size }
    }

    pub fn is_bijective(&self) -> bool {
        self.map.len() == self.target_size && map_is_bijective(&self.map, self.target_size)
    }
}

pub(crate) fn map_is_bijective(map: &[usize], target: usize) -> bool {
    if map.len() != target {
        return false;
    }
    let mut seen = vec![false; target];
    map.iter().all(|&y| y < target && !std::mem::replace(&mut seen[y], true))
}

/// Validates `map` as a homomorphism `source → target`.
pub fn validate_hom<S: Monoid, T: Monoid>(map: &[usize], source: &S, target: &T) -> Result<MonoidHom, HomError> {
    if map.len() != source.size() {
        return Err(HomError::LengthMismatch { len: map.len(), size: source.size() });
    }
    if let Some(x) = map.iter().position(|&y| y >= target.size()) {
        return Err(HomError::IndexOutOfRange(x));
    }
    if let Some((x, y)) = hom_witness(map, source, target)? {
        return Err(HomError::ProductNotPreserved(x, y));
    }
    Ok(MonoidHom { map: map.to_vec(), target_size: target.size() })
}

/// Returns `Err(IdentityNotPreserved)` or the first pair whose product is not preserved.
pub(crate) fn hom_witness<S: Monoid, T: Monoid>(
    map: &[usize],
    source: &S,
    target: &T,
) -> Result<Option<(usize, usize)>, HomError> {
    if map[source.identity()] != target.identity() {
        return Err(HomError::IdentityNotPreserved);
    }
    let n = source.size();
    for x in 0..n {
        for y in 0..n {
            if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
