// Validating monoid tables and homomorphisms, and reading the witnesses
// produced when a law fails.

use crossed_monoids::catalog;
use crossed_monoids::monoid::{MonoidError, HomError};
use crossed_monoids::{validate_hom, validate_monoid, FiniteMonoid, Monoid};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z3 = validate_monoid(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], 0)?;
    assert!(z3.is_group() && z3.is_commutative());
    println!("Z/3 inverses: {:?}", z3.inverses());

    // 1·1 = 0 but 1·0 = 1: (1·0)·1 = 0 while 1·(0·1) = 1.
    let broken = validate_monoid(&[vec![0, 1], vec![1, 0]], 1);
    println!("wrong identity: {broken:?}");
    let skew = validate_monoid(&[vec![0, 1, 2], vec![1, 0, 0], vec![2, 1, 2]], 0);
    assert!(matches!(skew, Err(MonoidError::NotAssociative(..))));
    println!("non-associative table: {}", skew.unwrap_err());

    let z4 = FiniteMonoid::cyclic(4);
    let z2 = FiniteMonoid::cyclic(2);
    let reduce = validate_hom(&[0, 1, 0, 1], &z4, &z2)?;
    println!("Z/4 -> Z/2 reduction: {:?}", reduce.map());
    assert_eq!(validate_hom(&[0, 1, 1, 1], &z4, &z2), Err(HomError::ProductNotPreserved(1, 1)));

    for (name, m) in catalog::catalog() {
        println!("{name:>12}: order {}, group {}, commutative {}", m.size(), m.is_group(), m.is_commutative());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
