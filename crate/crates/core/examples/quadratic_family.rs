// The family Qu(Z/n): every admissible parameter triple for small n, and
// the internal category for n = 2.

use crossed_monoids::internal::{build_internal_category, CheckPolicy};
use crossed_monoids::quadratic::{build_qu, make_params, valid_params, APair, KMatrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        for params in valid_params(n) {
            let x = build_qu(&params)?;
            println!("Qu{params}: |A| = |K| = {}, boundary hom: {}", n * n, x.boundary().is_ok());
        }
    }

    let params = make_params(2, 0, 0)?;
    let m = APair { a: 1, b: 1 };
    println!("[1,1] ∘ (1,1) = {:?}", m.act(KMatrix { r: 1, s: 1 }, &params));

    let x = build_qu(&params)?;
    let (c, report) = build_internal_category(&x, &CheckPolicy::default())?;
    println!("sizes {:?}, all checks pass: {}", c.sizes(), report.all_pass());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
