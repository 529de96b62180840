mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::{raw, Pair};
use crossed_monoids::catalog::{catalog, up_to_order};
use crossed_monoids::crossed::{canonical_weak_iso, compose_weak, CrossedSemiBimodule, WeakMorphism};
use crossed_monoids::format::{emit_monoid, emit_xbsmod, Library};
use crossed_monoids::internal::bowtie;
use crossed_monoids::quadratic::{build_qu, valid_params, APair, KMatrix, QuParams};
use crossed_monoids::search::enumerate_xbsmod;
use crossed_monoids::{validate_hom, validate_monoid, FiniteMonoid, Monoid};

/// Every structure on catalog monoids of order at most 4.
fn corpus() -> &'static [CrossedSemiBimodule] {
    static CORPUS: OnceLock<Vec<CrossedSemiBimodule>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let small = up_to_order(4);
        small.iter().flat_map(|(_, a)| small.iter().flat_map(move |(_, k)| enumerate_xbsmod(a, k, 4).unwrap())).collect()
    })
}

fn structure() -> impl Strategy<Value = &'static CrossedSemiBimodule> {
    (0..corpus().len()).prop_map(|i| &corpus()[i])
}

fn catalog_monoid() -> impl Strategy<Value = FiniteMonoid> {
    let all: Vec<FiniteMonoid> = catalog().into_iter().map(|(_, m)| m).collect();
    proptest::sample::select(all)
}

fn relabeled() -> impl Strategy<Value = (FiniteMonoid, Vec<usize>)> {
    catalog_monoid().prop_flat_map(|m| {
        let perm = Just((0..m.size()).collect::<Vec<_>>()).prop_shuffle();
        (Just(m), perm)
    })
}

fn qu_params() -> impl Strategy<Value = QuParams> {
    let all: Vec<QuParams> = (1..=8).flat_map(valid_params).collect();
    proptest::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_monoid_laws((m, perm) in relabeled()) {
        let n = m.size();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let rows: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| perm[m.mul(inv[i], inv[j])]).collect()).collect();
        let image = validate_monoid(&rows, perm[m.identity()]).unwrap();
        let h = validate_hom(&perm, &m, &image).unwrap();
        prop_assert!(h.is_bijective());
        prop_assert_eq!(image.is_group(), m.is_group());
    }

    #[test]
    fn monoid_text_round_trips((m, perm) in relabeled()) {
        let text = emit_monoid("m", &m);
        let lib = Library::from_str(&text, "m.txt").unwrap();
        prop_assert_eq!(&lib.monoids["m"], &m);
        prop_assert_eq!(perm.len(), m.size());
    }

    #[test]
    fn products_project_onto_factors(a in catalog_monoid(), b in catalog_monoid()) {
        let p = a.direct_product(&b);
        prop_assert_eq!(p.size(), a.size() * b.size());
        let left: Vec<usize> = (0..p.size()).map(|i| i / b.size()).collect();
        let right: Vec<usize> = (0..p.size()).map(|i| i % b.size()).collect();
        prop_assert!(validate_hom(&left, &p, &a).is_ok());
        prop_assert!(validate_hom(&right, &p, &b).is_ok());
    }

    #[test]
    fn boundary_products_recombine(x in structure()) {
        let p = Pair::of(x.a(), x.k());
        prop_assert_eq!(common::circ_product_identity(&p, &raw(x)), None);
    }

    #[test]
    fn twist_product_embeds_in_bowtie(x in structure()) {
        let b = bowtie(x);
        let nk = x.k().size();
        let one = x.a().identity();
        let twist = x.twist_monoid().unwrap();
        for p in 0..nk {
            for y in 0..nk {
                prop_assert_eq!(b.mul(one * nk + p, one * nk + y), one * nk + twist.mul(p, y));
                prop_assert_eq!(twist.mul(p, y), x.k().mul(y, x.right(p, x.act(one, y))));
            }
        }
    }

    #[test]
    fn structure_text_round_trips(x in structure()) {
        let lib = Library::from_str(&emit_xbsmod("x", x), "x.txt").unwrap();
        prop_assert!(lib.invalid.is_empty());
        prop_assert_eq!(&lib.xbsmods["x"], x);
    }

    #[test]
    fn every_corpus_member_satisfies_the_oracle(x in structure()) {
        prop_assert!(common::is_xbsmod(&Pair::of(x.a(), x.k()), &raw(x)));
    }

    #[test]
    fn identity_is_neutral_for_weak_composition(x in structure()) {
        prop_assume!(x.a().is_group() && x.k().is_group());
        let iso = canonical_weak_iso(x).unwrap();
        let id = WeakMorphism::identity(x);
        prop_assert_eq!(compose_weak(&id, &iso.forward).unwrap(), iso.forward.clone());
        prop_assert_eq!(compose_weak(&iso.backward, &id).unwrap(), iso.backward.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn qu_identities(params in qu_params(), m in 0usize..64, n2 in 0usize..64, k in 0usize..64, k1 in 0usize..64) {
        let n = params.n();
        let size = (n * n) as usize;
        let (m, n2, k, k1) = (APair::from_index(m % size, n), APair::from_index(n2 % size, n), KMatrix::from_index(k % size, n), KMatrix::from_index(k1 % size, n));
        prop_assert_eq!(m.act(k, &params).act(k1, &params), m.act(k.mul(k1, n), &params));
        prop_assert_eq!(m.mul(n2, &params).act(k.scaled(m, n), &params), m.mul(n2.act(k, &params), &params));
        prop_assert_eq!(k.scaled(m, n).scaled(n2, n), k.scaled(n2, n).scaled(m, n));
        prop_assert_eq!(m.act(KMatrix::IDENTITY, &params), m);
    }
}

#[test]
fn qu_up_to_eight_validates() {
    for n in 1..=8 {
        for params in valid_params(n) {
            let x = build_qu(&params).unwrap_or_else(|e| panic!("{e}"));
            assert_eq!(x.lambda().rows(), x.rho().rows());
        }
    }
}
