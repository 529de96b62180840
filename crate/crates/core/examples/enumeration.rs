// Enumerating every structure of a kind on two catalog monoids, and the
// classification cross-checks.

use crossed_monoids::catalog::lookup;
use crossed_monoids::search::{classify, enumerate, EnumerationTask, Kind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = lookup("z2").ok_or("z2")?;
    let klein = lookup("klein").ok_or("klein")?;

    for kind in [Kind::Xbsmod, Kind::Xsmod, Kind::Xmod, Kind::ActionPair] {
        let found = enumerate(&EnumerationTask::new(z2.clone(), klein.clone(), kind))?;
        println!("(2, 4, {kind}) -> {}", found.len());
    }

    let c = classify(&z2, &klein, 4)?;
    print!("{c}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
