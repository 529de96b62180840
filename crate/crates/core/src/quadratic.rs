//! The crossed semi-bimodule `Qu(ℤ/n)` built from upper-triangular matrices
//! and a bracket monoid on pairs, for parameters with `pq + 2 ≡ 0 (mod n)`.
//!
//! * `K`: matrices `[[1, r], [0, s]]` under multiplication, numbered `r·n + s`.
//! * `A`: pairs `[a, b]` with `[a,b][c,d] = [ac, a²d + bc² + p²bd]`, numbered `a·n + b`.
//! * `[a,b] ∘ (r,s) = [as − pr, s²b − qrsa − r²]`.
//! * both actions send `(r, s)` to `(ra, s)`.

use thiserror::Error;

use crate::action::{MonoidAction, SetAction, Side};
use crate::crossed::{CrossedError, CrossedSemiBimodule};
use crate::monoid::{FiniteMonoid, MonoidError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("pq + 2 ≡ {0} (mod n), expected 0")]
    ConstraintViolated(u64),
    #[error("component monoid for {params}: {source}")]
    Monoid { params: QuParams, source: MonoidError },
    #[error("structure for {params}: {source}")]
    Structure { params: QuParams, source: CrossedError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuParams {
    n: u64,
    p: u64,
    q: u64,
}

impl std::fmt::Display for QuParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, p={}, q={})", self.n, self.p, self.q)
    }
}

/// Accepts `(n, p, q)` iff `pq + 2 ≡ 0 (mod n)`; `p` and `q` are reduced mod `n`.
pub fn make_params(n: u64, p: u64, q: u64) -> Result<QuParams, QuError> {
    if n == 0 {
        return Err(QuError::ZeroModulus);
    }
    let (p, q) = (p % n, q % n);
    let r = (p * q + 2) % n;
    if r != 0 {
        return Err(QuError::ConstraintViolated(r));
    }
    Ok(QuParams { n, p, q })
}

/// Every accepted parameter triple with modulus `n`, in order of `(p, q)`.
pub fn valid_params(n: u64) -> Vec<QuParams> {
    (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).filter_map(|(p, q)| make_params(n, p, q).ok()).collect()
}

impl QuParams {
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn q(&self) -> u64 {
        self.q
    }

    fn size(&self) -> usize {
        (self.n * self.n) as usize
    }
}

/// The matrix `[[1, r], [0, s]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KMatrix {
    pub r: u64,
    pub s: u64,
}

/// The element `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct APair {
    pub a: u64,
    pub b: u64,
}

impl KMatrix {
    pub const IDENTITY: KMatrix = KMatrix { r: 0, s: 1 };

    pub fn index(self, n: u64) -> usize {
        (self.r % n * n + self.s % n) as usize
    }

    pub fn from_index(i: usize, n: u64) -> Self {
        KMatrix { r: i as u64 / n, s: i as u64 % n }
    }

    pub fn mul(self, o: KMatrix, n: u64) -> KMatrix {
        KMatrix { r: (o.r + self.r * o.s) % n, s: self.s * o.s % n }
    }

    /// `ᵐk = kᵐ`
    pub fn scaled(self, m: APair, n: u64) -> KMatrix {
        KMatrix { r: self.r * m.a % n, s: self.s }
    }
}

impl APair {
    pub const UNIT: APair = APair { a: 1, b: 0 };

    pub fn index(self, n: u64) -> usize {
        (self.a % n * n + self.b % n) as usize
    }

    pub fn from_index(i: usize, n: u64) -> Self {
        APair { a: i as u64 / n, b: i as u64 % n }
    }

    pub fn mul(self, o: APair, params: &QuParams) -> APair {
        let (n, p) = (params.n, params.p);
        let APair { a, b } = self;
        let APair { a: c, b: d } = o;
        APair { a: a * c % n, b: (a * a % n * d + b * c % n * c + p * p % n * b % n * d) % n }
    }

    /// `m ∘ k`
    pub fn act(self, k: KMatrix, params: &QuParams) -> APair {
        let (n, p, q) = (params.n, params.p, params.q);
        let APair { a, b } = self;
        let KMatrix { r, s } = k;
        let neg = |v: u64| (n - v % n) % n;
        APair {
            a: (a * s % n + neg(p * r)) % n,
            b: (s * s % n * b % n + neg(q * r % n * s % n * a) + neg(r * r)) % n,
        }
    }
}

/// `(K(ℤ/n), A(ℤ/n))`, both validated.
pub fn build_components(params: &QuParams) -> Result<(FiniteMonoid, FiniteMonoid), QuError> {
    let n = params.n;
    let size = params.size();
    let err = |source| QuError::Monoid { params: *params, source };
    let k_table = (0..size)
        .flat_map(|i| (0..size).map(move |j| (i, j)))
        .map(|(i, j)| KMatrix::from_index(i, n).mul(KMatrix::from_index(j, n), n).index(n))
        .collect();
    let k = FiniteMonoid::from_flat(size, k_table, KMatrix::IDENTITY.index(n)).map_err(err)?;
    let a_table = (0..size)
        .flat_map(|i| (0..size).map(move |j| (i, j)))
        .map(|(i, j)| APair::from_index(i, n).mul(APair::from_index(j, n), params).index(n))
        .collect();
    let a = FiniteMonoid::from_flat(size, a_table, APair::UNIT.index(n)).map_err(err)?;
    Ok((k, a))
}

/// `Qu(ℤ/n)` with every crossed semi-bimodule axiom checked.
pub fn build_qu(params: &QuParams) -> Result<CrossedSemiBimodule, QuError> {
    let (k, a) = build_components(params)?;
    let n = params.n;
    let size = params.size();
    let grid = || (0..size).flat_map(move |m| (0..size).map(move |x| (APair::from_index(m, n), KMatrix::from_index(x, n))));
    let circ = SetAction::from_raw(size, size, grid().map(|(m, x)| m.act(x, params).index(n)).collect());
    let scaled: Vec<usize> = grid().map(|(m, x)| x.scaled(m, n).index(n)).collect();
    let lambda = MonoidAction::from_raw(Side::Left, size, size, scaled.clone());
    let rho = MonoidAction::from_raw(Side::Right, size, size, scaled);
    CrossedSemiBimodule::new(a, k, circ, lambda, rho).map_err(|source| QuError::Structure { params: *params, source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::group_to_xmod;
    use crate::monoid::Monoid;

    #[test]
    fn parameter_constraint() {
        assert!(make_params(2, 0, 0).is_ok());
        assert!(make_params(6, 1, 4).is_ok());
        assert_eq!(make_params(5, 1, 1), Err(QuError::ConstraintViolated(3)));
        assert_eq!(make_params(0, 0, 0), Err(QuError::ZeroModulus));
        assert_eq!(valid_params(1).len(), 1);
    }

    #[test]
    fn bracket_product() {
        let params = make_params(6, 2, 2).unwrap();
        assert_eq!(APair { a: 2, b: 1 }.mul(APair { a: 3, b: 2 }, &params), APair { a: 0, b: 1 });
        let (k, a) = build_components(&params).unwrap();
        assert_eq!(a.identity(), APair::UNIT.index(6));
        assert_eq!(k.identity(), KMatrix::IDENTITY.index(6));
        assert!(a.is_commutative());
    }

    #[test]
    fn circ_values() {
        let params = make_params(2, 0, 0).unwrap();
        let m = APair { a: 1, b: 1 };
        assert_eq!(m.act(KMatrix { r: 1, s: 1 }, &params), APair { a: 1, b: 0 });
        assert_eq!(APair::UNIT.act(KMatrix { r: 1, s: 1 }, &params), APair { a: 1, b: 1 });
        for i in 0..4 {
            let m = APair::from_index(i, 2);
            assert_eq!(m.act(KMatrix::IDENTITY, &params), m);
        }
    }

    #[test]
    fn qu_small_cases() {
        for n in [1, 2, 3, 4] {
            for params in valid_params(n) {
                let x = build_qu(&params).unwrap();
                assert_eq!(x.lambda().rows(), x.rho().rows());
                assert_eq!(x.a().size(), (n * n) as usize);
            }
        }
    }

    #[test]
    fn boundary_of_qu() {
        let x = build_qu(&make_params(2, 0, 0).unwrap()).unwrap();
        let d = x.boundary().unwrap();
        assert_eq!(d[KMatrix { r: 1, s: 1 }.index(2)], APair { a: 1, b: 1 }.index(2));
        assert_eq!(group_to_xmod(&x), Err(CrossedError::NotAGroup("K")));
    }
}
