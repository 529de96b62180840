// The internal category of a crossed semi-bimodule: level sizes, the
// verification report, and composition of arrows in the underlying category.

use crossed_monoids::crossed::{phi, validate_xsmod};
use crossed_monoids::internal::{build_internal_category, materialize_category, CheckPolicy};
use crossed_monoids::{FiniteMonoid, MonoidAction, Side};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z3 = FiniteMonoid::cyclic(3);
    let s = validate_xsmod(z3.clone(), z3, &[0, 1, 2], MonoidAction::trivial(Side::Right, 3, 3))?;
    let x = phi(&s);

    let (c, report) = build_internal_category(&x, &CheckPolicy::default())?;
    println!("|C0|, |C1|, |C2| = {:?}", c.sizes());
    print!("{report}");

    let cat = materialize_category(&c)?;
    // Arrow (a, x) has index a·|K| + x and runs from a∘x to a.
    let f = 3 + 1;
    let g = cat.identity[cat.source[f]];
    println!("arrow {f}: {} -> {}", cat.source[f], cat.target[f]);
    assert_eq!(cat.compose(f, g)?, f);
    println!("category laws:\n{}", cat.law_report());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
