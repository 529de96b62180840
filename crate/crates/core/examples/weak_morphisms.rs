// Weak morphisms: the canonical weak isomorphism of a group-case structure,
// composition, and the induced internal functor.

use crossed_monoids::catalog::lookup;
use crossed_monoids::crossed::{canonical_weak_iso, compose_weak, WeakMorphism};
use crossed_monoids::internal::{internal_functor, InternalCategory};
use crossed_monoids::search::enumerate_xbsmod;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = lookup("z2").ok_or("z2")?;
    let klein = lookup("klein").ok_or("klein")?;
    let x = enumerate_xbsmod(&z2, &klein, 4)?
        .into_iter()
        .find(|x| !x.lambda().is_trivial())
        .ok_or("no structure with a nontrivial left action")?;
    println!("lambda = {:?}", x.lambda().rows());

    let iso = canonical_weak_iso(&x)?;
    println!("rebuilt lambda = {:?}", iso.rebuilt.lambda().rows());
    println!("forward gamma = {:?}", iso.forward.gamma_rows());
    let there_and_back = compose_weak(&iso.backward, &iso.forward)?;
    assert_eq!(there_and_back, WeakMorphism::identity(&iso.rebuilt));

    let (f, report) = internal_functor(&iso.forward, &iso.rebuilt, &x)?;
    print!("{report}");
    println!("functor is an isomorphism: {}", f.is_bijective(&InternalCategory::from_xbsmod(&x)));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
