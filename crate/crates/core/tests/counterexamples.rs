//! Alternative readings of two formulas, each refuted by a concrete
//! structure, next to the formulas the library uses.

use crossed_monoids::catalog::{catalog, lookup};
use crossed_monoids::crossed::{canonical_weak_iso, validate_weak_morphism, CrossedSemiBimodule, WeakMorphism};
use crossed_monoids::internal::{double_bowtie, verify_internal_category, CheckPolicy, InternalCategory};
use crossed_monoids::quadratic::{build_qu, make_params};
use crossed_monoids::search::enumerate_xbsmod;
use crossed_monoids::Monoid;

type Triple = (usize, usize, usize);

/// Level-two product with the third coordinate twisted by `a∘u` instead of `a∘x`.
fn misread_product(x: &CrossedSemiBimodule, (a, p, y): Triple, (b, u, v): Triple) -> Triple {
    let k = x.k();
    let second = k.mul(x.left(a, u), x.right(p, x.act(b, u)));
    let third = k.mul(x.left(x.act(a, u), v), x.right(y, x.act(x.act(b, u), v)));
    (x.a().mul(a, b), second, third)
}

fn triples(x: &CrossedSemiBimodule) -> Vec<Triple> {
    let (na, nk) = (x.a().size(), x.k().size());
    (0..na).flat_map(|a| (0..nk).flat_map(move |p| (0..nk).map(move |y| (a, p, y)))).collect()
}

#[test]
fn misread_level_two_product_has_no_left_unit() {
    for (n, p, q) in [(2, 0, 0), (6, 5, 2)] {
        let x = build_qu(&make_params(n, p, q).unwrap()).unwrap();
        let unit = (x.a().identity(), x.k().identity(), x.k().identity());
        let bad = triples(&x).into_iter().find(|&t| misread_product(&x, unit, t) != t);
        assert!(bad.is_some(), "n={n}: the misread product happens to be unital");
        let c2 = double_bowtie(&x);
        assert!((0..c2.size()).all(|t| c2.mul(c2.identity(), t) == t && c2.mul(t, c2.identity()) == t));
    }
}

#[test]
fn misread_level_two_product_breaks_d21() {
    let x = build_qu(&make_params(2, 0, 0).unwrap()).unwrap();
    let pair_mul = |(a, p): (usize, usize), (b, y): (usize, usize)| (x.a().mul(a, b), x.k().mul(x.left(a, y), x.right(p, x.act(b, y))));
    let d21 = |(a, p, y): Triple| (a, x.k().mul(p, y));
    let all = triples(&x);
    let broken = all.iter().flat_map(|&s| all.iter().map(move |&t| (s, t))).find(|&(s, t)| d21(misread_product(&x, s, t)) != pair_mul(d21(s), d21(t)));
    assert!(broken.is_some(), "d21 is a homomorphism for the misread product");
    let report = verify_internal_category(&InternalCategory::from_xbsmod(&x), &CheckPolicy::default());
    assert!(report.all_pass(), "{report}");
}

/// A structure where `x^{a∘y}` depends on `a`.
fn sensitive_structure() -> CrossedSemiBimodule {
    let (z2, klein) = (lookup("z2").unwrap(), lookup("klein").unwrap());
    enumerate_xbsmod(&z2, &klein, 4)
        .unwrap()
        .into_iter()
        .find(|x| {
            (0..2).any(|a| (0..2).any(|b| (0..4).any(|y| (0..4).any(|p| x.right(p, x.act(a, y)) != x.right(p, x.act(b, y))))))
        })
        .expect("some structure on (Z/2, Z/2×Z/2) twists by a∘y")
}

#[test]
fn identity_violates_the_misread_third_condition() {
    let x = sensitive_structure();
    let id = WeakMorphism::identity(&x);
    let (na, nk) = (x.a().size(), x.k().size());
    let k = x.k();
    // ^{κa}γ(b,y)·γ(a,p)^{κ(a)∘γ(b,y)} = γ(ab, ᵃy·p^{b∘y}) with κ = id, γ(a,p) = p.
    let misread_holds = (0..na).all(|a| {
        (0..na).all(|b| {
            (0..nk).all(|y| (0..nk).all(|p| k.mul(x.left(a, y), x.right(p, x.act(a, y))) == k.mul(x.left(a, y), x.right(p, x.act(b, y)))))
        })
    });
    assert!(!misread_holds);
    let kappa: Vec<usize> = (0..na).collect();
    assert!(validate_weak_morphism(&kappa, &id.gamma_rows(), &x, &x).is_ok());
}

/// `d22·F2 = F1·d22` for `F2(a, p, y) = (κa, γ(a,p), γ(s(a,p), y))`: returns
/// whether it holds for every triple of `w`'s source.
fn commutes_with_d22(w: &WeakMorphism, src: &CrossedSemiBimodule, tgt: &CrossedSemiBimodule, s: impl Fn(usize, usize) -> usize) -> bool {
    // d22(a, p, y) = (a∘p, y) and F1(a, p) = (κa, γ(a,p)).
    triples(src).into_iter().all(|(a, p, y)| {
        let lhs = (tgt.act(w.kappa().apply(a), w.gamma(a, p)), w.gamma(s(a, p), y));
        let b = src.act(a, p);
        lhs == (w.kappa().apply(b), w.gamma(b, y))
    })
}

#[test]
fn misread_level_two_functor_breaks_d22() {
    let groups: Vec<_> = catalog().into_iter().filter(|(_, m)| m.is_group()).collect();
    let mut refuted = 0;
    for (_, a) in &groups {
        for (_, k) in &groups {
            for x in enumerate_xbsmod(a, k, 6).unwrap() {
                let iso = canonical_weak_iso(&x).unwrap();
                let src = &iso.rebuilt;
                assert!(commutes_with_d22(&iso.forward, src, &x, |a, p| src.act(a, p)));
                if !commutes_with_d22(&iso.forward, src, &x, |a, _| a) {
                    refuted += 1;
                }
            }
        }
    }
    assert!(refuted > 0, "the misread functor commutes with d22 on every group-case structure");
}
