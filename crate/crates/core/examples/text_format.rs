// Reading structures from text, writing them back, and driving the command
// line front end in-process.

use crossed_monoids::cli;
use crossed_monoids::format::{emit_xbsmod, Library};

const SUM: &str = "\
monoid Z2 2 0
0 1
1 0
action set Z2 Z2 circ
0 1
1 0
action left Z2 Z2 lam
0 1
0 1
action right Z2 Z2 rho
0 1
0 1
xbsmod sum A=Z2 K=Z2 circ=circ lambda=lam rho=rho
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lib = Library::from_str(SUM, "sum.txt")?;
    let x = &lib.xbsmods["sum"];
    let text = emit_xbsmod("copy", x);
    print!("{text}");
    assert_eq!(&Library::from_str(&text, "copy.txt")?.xbsmods["copy"], x);

    let dir = std::env::temp_dir().join(format!("crossed-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let file = dir.join("sum.txt");
    std::fs::write(&file, SUM)?;
    let mut out = Vec::new();
    let status = cli::run(["crossed", "check", file.to_str().ok_or("path")?], &mut out);
    print!("{}", String::from_utf8(out)?);
    std::fs::remove_dir_all(&dir)?;
    assert_eq!(status, 0);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
