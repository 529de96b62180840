// Crossed semi-modules, crossed modules and crossed semi-bimodules on small
// groups, and the passages between them.

use crossed_monoids::crossed::{
    group_to_xmod, phi, recover_xsmod, validate_xmod, validate_xsmod, xmod_to_xbsmod, CrossedSemiBimodule,
};
use crossed_monoids::{FiniteMonoid, MonoidAction, Side};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = FiniteMonoid::cyclic(2);
    let z4 = FiniteMonoid::cyclic(4);

    // Z/2 acts on Z/4 by negation. K is abelian, so the image of ∂ must act
    // trivially and ∂ is forced to be zero.
    let neg = MonoidAction::from_raw(Side::Right, 2, 4, vec![0, 1, 2, 3, 0, 3, 2, 1]);
    let m = validate_xmod(z2.clone(), z4.clone(), &[0, 0, 0, 0], neg)?;
    let x = xmod_to_xbsmod(&m);
    println!("circ = {:?}", x.circ().rows());
    println!("lambda = {:?}", x.lambda().rows());
    assert_eq!(group_to_xmod(&x)?, m);

    let twist = x.twist_monoid()?;
    println!("twist monoid is a group: {}", twist.is_group());

    let s = validate_xsmod(z2.clone(), z2.clone(), &[0, 1], MonoidAction::trivial(Side::Right, 2, 2))?;
    let y = phi(&s);
    assert!(y.lambda().is_trivial());
    assert_eq!(recover_xsmod(&y)?, s);
    println!("boundary of phi(S): {:?}", y.boundary()?);

    let t = CrossedSemiBimodule::trivial_on(z2, z4)?;
    println!("trivial structure circ constant: {}", t.circ().nonconstant_witness().is_none());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
