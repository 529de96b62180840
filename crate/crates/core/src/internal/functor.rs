use crate::crossed::{CrossedSemiBimodule, WeakMorphism, XbsMorphism};
use crate::monoid::{map_is_bijective, Monoid};
use crate::witness::Witness;

use super::verify::{hom_witnesses, Pairs, Report};
use super::{InternalCategory, InternalError};

/// Maps `C0 → C0'`, `C1 → C1'`, `C2 → C2'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalFunctor {
    pub f0: Vec<usize>,
    pub f1: Vec<usize>,
    pub f2: Vec<usize>,
}

impl InternalFunctor {
    pub fn is_bijective(&self, target: &InternalCategory) -> bool {
        let (n0, n1, n2) = target.sizes();
        map_is_bijective(&self.f0, n0) && map_is_bijective(&self.f1, n1) && map_is_bijective(&self.f2, n2)
    }
}

fn from_parts(
    x: &CrossedSemiBimodule,
    target: &CrossedSemiBimodule,
    f0: impl Fn(usize) -> usize,
    f1: impl Fn(usize, usize) -> usize,
    f2: impl Fn(usize, usize, usize) -> (usize, usize),
) -> InternalFunctor {
    let (na, nk) = (x.a().size(), x.k().size());
    let mk = target.k().size();
    let pairs = || (0..na).flat_map(move |a| (0..nk).map(move |k| (a, k)));
    InternalFunctor {
        f0: (0..na).map(&f0).collect(),
        f1: pairs().map(|(a, k)| f0(a) * mk + f1(a, k)).collect(),
        f2: pairs()
            .flat_map(|(a, k)| (0..nk).map(move |l| (a, k, l)))
            .map(|(a, k, l)| {
                let (u, v) = f2(a, k, l);
                (f0(a) * mk + u) * mk + v
            })
            .collect(),
    }
}

/// `a ↦ κ(a)`, `(a,x) ↦ (κ(a), γ(a,x))`, `(a,x,y) ↦ (κ(a), γ(a,x), γ(a∘x, y))`.
pub fn weak_functor_maps(w: &WeakMorphism, x: &CrossedSemiBimodule, target: &CrossedSemiBimodule) -> InternalFunctor {
    let k = w.kappa();
    from_parts(x, target, |a| k.apply(a), |a, y| w.gamma(a, y), |a, y, z| (w.gamma(a, y), w.gamma(x.act(a, y), z)))
}

/// `a ↦ α(a)`, `(a,x) ↦ (α(a), κ(x))`, `(a,x,y) ↦ (α(a), κ(x), κ(y))`.
pub fn strict_internal_functor(m: &XbsMorphism, x: &CrossedSemiBimodule, target: &CrossedSemiBimodule) -> InternalFunctor {
    let (al, ka) = (m.alpha(), m.kappa());
    from_parts(x, target, |a| al.apply(a), |_, y| ka.apply(y), |_, y, z| (ka.apply(y), ka.apply(z)))
}

/// Homomorphism and commutation checks for `f: C → D`.
pub fn verify_functor(f: &InternalFunctor, c: &InternalCategory, d: &InternalCategory) -> Report {
    let mut report = Report::default();
    let (c0, c1, c2) = c.sizes();
    let (d0, d1, d2) = d.sizes();
    let shapes = [(&f.f0, c0, d0), (&f.f1, c1, d1), (&f.f2, c2, d2)];
    if let Some(level) = shapes.iter().position(|(m, len, range)| m.len() != *len || m.iter().any(|&v| v >= *range)) {
        report.push(format!("functor shape F{level}"), Some(Witness::of(&[level])));
        return report.finish();
    }
    let homs = [
        hom_witnesses(&c.c0, &d.c0, &[&f.f0], Pairs::All),
        hom_witnesses(&c.c1, &d.c1, &[&f.f1], Pairs::All),
        hom_witnesses(&c.c2, &d.c2, &[&f.f2], Pairs::All),
    ];
    for (level, mut w) in homs.into_iter().enumerate() {
        report.push(format!("functor hom F{level}"), w.pop().flatten());
    }
    let diff = |n: usize, lhs: &dyn Fn(usize) -> usize, rhs: &dyn Fn(usize) -> usize| {
        (0..n).find(|&i| lhs(i) != rhs(i)).map(|i| Witness::of(&[i]))
    };
    let commutes: [(&str, Option<Witness>); 8] = [
        ("d10", diff(c1, &|p| d.d10[f.f1[p]], &|p| f.f0[c.d10[p]])),
        ("d11", diff(c1, &|p| d.d11[f.f1[p]], &|p| f.f0[c.d11[p]])),
        ("s00", diff(c0, &|a| d.s00[f.f0[a]], &|a| f.f1[c.s00[a]])),
        ("d20", diff(c2, &|h| d.d20[f.f2[h]], &|h| f.f1[c.d20[h]])),
        ("d21", diff(c2, &|h| d.d21[f.f2[h]], &|h| f.f1[c.d21[h]])),
        ("d22", diff(c2, &|h| d.d22[f.f2[h]], &|h| f.f1[c.d22[h]])),
        ("s10", diff(c1, &|p| d.s10[f.f1[p]], &|p| f.f2[c.s10[p]])),
        ("s11", diff(c1, &|p| d.s11[f.f1[p]], &|p| f.f2[c.s11[p]])),
    ];
    for (name, w) in commutes {
        report.push(format!("functor commutes {name}"), w);
    }
    report.finish()
}

/// The internal functor of a validated weak morphism, with all its properties verified.
pub fn internal_functor(
    w: &WeakMorphism,
    x: &CrossedSemiBimodule,
    target: &CrossedSemiBimodule,
) -> Result<(InternalFunctor, Report), InternalError> {
    if w.source_sizes() != (x.a().size(), x.k().size()) || w.target_sizes() != (target.a().size(), target.k().size()) {
        return Err(InternalError::Shape("weak morphism does not fit the given structures".into()));
    }
    let f = weak_functor_maps(w, x, target);
    let report = verify_functor(&f, &InternalCategory::from_xbsmod(x), &InternalCategory::from_xbsmod(target));
    if report.all_pass() {
        Ok((f, report))
    } else {
        Err(InternalError::Unverified(report))
    }
}
