//! Command-line front end. Every verb prints a line-per-check report and
//! returns 0 when everything passes, 1 on any `FAIL` and 2 on bad input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog;
use crate::crossed::{compose_weak, group_to_xmod, validate_weak_morphism, xmod_to_xbsmod, CrossedSemiBimodule};
use crate::format::{self, BlockKind, FormatError, Library};
use crate::internal::{verify_internal_category, CheckPolicy, InternalCategory, Level2};
use crate::monoid::{FiniteMonoid, Monoid};
use crate::quadratic::{build_qu, make_params};
use crate::search::{classify, enumerate, group_roundtrip, EnumerationTask, Kind, Structure};

#[derive(Parser, Debug)]
#[command(name = "crossed", about = "Check, build and enumerate crossed semi-bimodules on finite monoids")]
struct Cli {
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest |C2| whose associativity is checked on all triples.
    #[arg(long = "max-c2", global = true, default_value_t = 4096)]
    max_c2: usize,
    /// Directory to write emitted structures into.
    #[arg(long, global = true)]
    emit: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate every definition in a file.
    Check { file: PathBuf },
    /// Build and verify the internal category of each structure in a file.
    BuildCat { file: PathBuf },
    /// List all structures of a kind on two catalog monoids.
    Enumerate {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "K")]
        k: String,
        #[arg(long, default_value = "xbsmod")]
        kind: Kind,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Partition the structures on two catalog monoids and cross-check the classes.
    Classify {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "K")]
        k: String,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Build Qu(Z/n) for parameters with pq + 2 = 0 mod n.
    Qu {
        n: u64,
        p: u64,
        q: u64,
        #[arg(long = "build-cat")]
        build_cat: bool,
    },
    /// Round-trip group-case structures and crossed modules through each other.
    RoundtripGroup { file: PathBuf },
    /// Compose the weak morphism of `f1` followed by that of `f2`.
    WeakCompose { f1: PathBuf, f2: PathBuf },
}

/// Input problems, reported with exit status 2.
struct InputError(String);

impl From<FormatError> for InputError {
    fn from(e: FormatError) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Default)]
struct Out {
    text: String,
    failed: bool,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn check(&mut self, name: &str, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => self.line(format!("PASS {name}")),
            Err(why) => {
                self.failed = true;
                self.line(format!("FAIL {name} ({why})"));
            }
        }
    }
}

/// Runs one command line (program name first) and writes the report to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut report = Out::default();
    let status = match dispatch(&cli, &mut report) {
        Ok(()) => i32::from(report.failed),
        Err(InputError(msg)) => {
            report.line(format!("error: {msg}"));
            2
        }
    };
    let _ = out.write_all(report.text.as_bytes());
    status
}

fn dispatch(cli: &Cli, out: &mut Out) -> Result<(), InputError> {
    let policy = CheckPolicy { max_exhaustive_c2: cli.max_c2, seed: cli.seed, ..CheckPolicy::default() };
    let emit = cli.emit.as_deref();
    match &cli.command {
        Command::Check { file } => check(file, out),
        Command::BuildCat { file } => {
            let (lib, file) = load(file)?;
            for e in lib.entries_in(&file).filter(|e| e.kind == BlockKind::Xbsmod) {
                match lib.xbsmods.get(&e.name) {
                    Some(x) => build_cat(&e.name, x, &policy, emit, out)?,
                    None => out.check(&format!("xbsmod {}", e.name), Err(lib.invalid[&e.name].clone())),
                }
            }
            Ok(())
        }
        Command::Enumerate { a, k, kind, cap } => {
            let task = EnumerationTask::new(monoid(a)?, monoid(k)?, *kind).with_cap(*cap);
            let found = enumerate(&task).map_err(|e| InputError(e.to_string()))?;
            out.line(format!("({}, {}, {kind}) -> {}", task.a.size(), task.k.size(), found.len()));
            for (i, s) in found.iter().enumerate() {
                let name = format!("{kind}_{i}");
                out.line(format!("{name} {}", summary(s)));
                if let Some(dir) = emit {
                    write_file(dir, &format!("{name}.txt"), &emit_structure(&name, s, &task.a, &task.k))?;
                }
            }
            Ok(())
        }
        Command::Classify { a, k, cap } => {
            match classify(&monoid(a)?, &monoid(k)?, *cap) {
                Ok(c) => {
                    out.text.push_str(&c.to_string());
                    out.check("classification cross-checks", Ok(()));
                }
                Err(e @ crate::search::SearchError::MismatchWitness { .. }) => out.check("classification cross-checks", Err(e.to_string())),
                Err(e) => return Err(InputError(e.to_string())),
            }
            Ok(())
        }
        Command::Qu { n, p, q, build_cat: cat } => {
            let params = make_params(*n, *p, *q).map_err(|e| InputError(e.to_string()))?;
            let name = format!("qu_{n}_{}_{}", params.p(), params.q());
            match build_qu(&params) {
                Ok(x) => {
                    out.check(&format!("xbsmod {name}"), Ok(()));
                    if let Some(dir) = emit {
                        emit_qu(dir, &name, &x)?;
                    }
                    if *cat {
                        build_cat(&name, &x, &policy, emit, out)?;
                    }
                }
                Err(e) => out.check(&format!("xbsmod {name}"), Err(e.to_string())),
            }
            Ok(())
        }
        Command::RoundtripGroup { file } => {
            let (lib, file) = load(file)?;
            for e in lib.entries_in(&file) {
                let label = format!("roundtrip {} {}", e.kind.keyword(), e.name);
                if let Some(why) = lib.invalid.get(&e.name) {
                    if matches!(e.kind, BlockKind::Xbsmod | BlockKind::Xmod) {
                        out.check(&label, Err(why.clone()));
                    }
                    continue;
                }
                match e.kind {
                    BlockKind::Xbsmod => {
                        let x = &lib.xbsmods[&e.name];
                        out.check(&label, group_roundtrip(x).map_err(|e| e.to_string()));
                        if let (Some(dir), Ok(m)) = (emit, group_to_xmod(x)) {
                            write_file(dir, &format!("{}_xmod.txt", e.name), &format::emit_xmod(&format!("{}_xmod", e.name), &m))?;
                        }
                    }
                    BlockKind::Xmod => {
                        let m = &lib.xmods[&e.name];
                        let outcome = match group_to_xmod(&xmod_to_xbsmod(m)) {
                            Ok(back) if &back == m => group_roundtrip(&xmod_to_xbsmod(m)).map_err(|e| e.to_string()),
                            Ok(_) => Err("group_to_xmod(xmod_to_xbsmod(M)) differs from M".into()),
                            Err(e) => Err(e.to_string()),
                        };
                        out.check(&label, outcome);
                    }
                    _ => {}
                }
            }
            Ok(())
        }
        Command::WeakCompose { f1, f2 } => weak_compose(f1, f2, emit, out),
    }
}

fn monoid(name: &str) -> Result<FiniteMonoid, InputError> {
    catalog::lookup(name).ok_or_else(|| {
        let names: Vec<_> = catalog::catalog().into_iter().map(|(n, _)| n).collect();
        InputError(format!("unknown catalog monoid `{name}`; known: {}", names.join(", ")))
    })
}

/// Loads every file in the directory of `file`; returns the library and the
/// key under which `file`'s entries are recorded.
fn load(file: &Path) -> Result<(Library, String), InputError> {
    if !file.is_file() {
        return Err(InputError(format!("{}: not a file", file.display())));
    }
    let dir = match file.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let lib = Library::from_dir(&dir)?;
    let key = dir.join(file.file_name().expect("is a file")).display().to_string();
    Ok((lib, key))
}

fn check(file: &Path, out: &mut Out) -> Result<(), InputError> {
    let (lib, file) = load(file)?;
    for e in lib.entries_in(&file) {
        let outcome = match lib.invalid.get(&e.name) {
            Some(why) => Err(why.clone()),
            None => Ok(()),
        };
        out.check(&format!("{} {}", e.kind.keyword(), e.name), outcome);
    }
    Ok(())
}

fn build_cat(name: &str, x: &CrossedSemiBimodule, policy: &CheckPolicy, emit: Option<&Path>, out: &mut Out) -> Result<(), InputError> {
    let c = InternalCategory::from_xbsmod(x);
    let (c0, c1, c2) = c.sizes();
    out.line(format!("category {name} |C0|={c0} |C1|={c1} |C2|={c2}"));
    let report = verify_internal_category(&c, policy);
    for r in &report.checks {
        out.failed |= r.witness.is_some();
        out.line(r.to_string());
    }
    if let Some(dir) = emit {
        write_file(dir, &format!("{name}_C0.txt"), &format::emit_monoid(&format!("{name}.C0"), &c.c0))?;
        write_file(dir, &format!("{name}_C1.txt"), &format::emit_monoid(&format!("{name}.C1"), &c.c1))?;
        if let Level2::Table(m) = &c.c2 {
            write_file(dir, &format!("{name}_C2.txt"), &format::emit_monoid(&format!("{name}.C2"), m))?;
        }
    }
    Ok(())
}

/// K, A and the three actions as separate files, plus the structure header.
fn emit_qu(dir: &Path, name: &str, x: &CrossedSemiBimodule) -> Result<(), InputError> {
    let (an, kn) = (format!("{name}.A"), format!("{name}.K"));
    write_file(dir, &format!("{name}_K.txt"), &format::emit_monoid(&kn, x.k()))?;
    write_file(dir, &format!("{name}_A.txt"), &format::emit_monoid(&an, x.a()))?;
    let actions = format::emit_action(&format!("{name}.circ"), "set", &kn, &an, &x.circ().rows())
        + &format::emit_action(&format!("{name}.lambda"), "left", &an, &kn, &x.lambda().rows())
        + &format::emit_action(&format!("{name}.rho"), "right", &an, &kn, &x.rho().rows());
    write_file(dir, &format!("{name}_actions.txt"), &actions)?;
    let header = format!("xbsmod {name} A={an} K={kn} circ={name}.circ lambda={name}.lambda rho={name}.rho\n");
    write_file(dir, &format!("{name}.txt"), &header)
}

fn weak_compose(f1: &Path, f2: &Path, emit: Option<&Path>, out: &mut Out) -> Result<(), InputError> {
    let (lib1, key1) = load(f1)?;
    let (lib2, key2) = load(f2)?;
    let pick = |lib: &Library, key: &str| -> Result<String, InputError> {
        let names: Vec<_> = lib.entries_in(key).filter(|e| e.kind == BlockKind::WeakMorphism).map(|e| e.name.clone()).collect();
        match names.as_slice() {
            [one] => Ok(one.clone()),
            _ => Err(InputError(format!("{key}: expected exactly one weakmorphism, found {}", names.len()))),
        }
    };
    let (n1, n2) = (pick(&lib1, &key1)?, pick(&lib2, &key2)?);
    let (Some(first), Some(second)) = (lib1.weak_morphisms.get(&n1), lib2.weak_morphisms.get(&n2)) else {
        for (lib, n) in [(&lib1, &n1), (&lib2, &n2)] {
            if let Some(why) = lib.invalid.get(n) {
                out.check(&format!("weakmorphism {n}"), Err(why.clone()));
            }
        }
        return Ok(());
    };
    let source = &lib1.xbsmods[&first.source];
    let middle = (&lib1.xbsmods[&first.target], &lib2.xbsmods[&second.source]);
    let target = &lib2.xbsmods[&second.target];
    let name = format!("{n2}.{n1}");
    if middle.0 != middle.1 {
        out.check(&format!("composable {n1} {n2}"), Err(format!("target `{}` differs from source `{}`", first.target, second.source)));
        return Ok(());
    }
    out.check(&format!("composable {n1} {n2}"), Ok(()));
    let composite = match compose_weak(&second.value, &first.value) {
        Ok(c) => c,
        Err(e) => {
            out.check(&format!("weakmorphism {name}"), Err(e.to_string()));
            return Ok(());
        }
    };
    let valid = validate_weak_morphism(composite.kappa().map(), &composite.gamma_rows(), source, target);
    out.check(&format!("weakmorphism {name}"), valid.map(|_| ()).map_err(|e| e.to_string()));
    let text = format::emit_weak_morphism(&name, &first.source, &second.target, &composite);
    out.text.push_str(&text);
    if let Some(dir) = emit {
        write_file(dir, &format!("{name}.txt"), &text)?;
    }
    Ok(())
}

fn summary(s: &Structure) -> String {
    match s {
        Structure::Xbsmod(x) => format!("circ={:?} lambda={:?} rho={:?}", x.circ().rows(), x.lambda().rows(), x.rho().rows()),
        Structure::Xsmod(m) => format!("partial={:?} rho={:?}", m.partial().map(), m.rho().rows()),
        Structure::Xmod(m) => format!("partial={:?} rho={:?}", m.partial().map(), m.rho().rows()),
        Structure::ActionPair { lambda, rho } => format!("lambda={:?} rho={:?}", lambda.rows(), rho.rows()),
    }
}

fn emit_structure(name: &str, s: &Structure, a: &FiniteMonoid, k: &FiniteMonoid) -> String {
    match s {
        Structure::Xbsmod(x) => format::emit_xbsmod(name, x),
        Structure::Xsmod(m) => format::emit_xsmod(name, m),
        Structure::Xmod(m) => format::emit_xmod(name, m),
        Structure::ActionPair { lambda, rho } => {
            let (an, kn) = (format!("{name}.A"), format!("{name}.K"));
            format::emit_monoid(&an, a)
                + &format::emit_monoid(&kn, k)
                + &format::emit_action(&format!("{name}.lambda"), "left", &an, &kn, &lambda.rows())
                + &format::emit_action(&format!("{name}.rho"), "right", &an, &kn, &rho.rows())
        }
    }
}

fn write_file(dir: &Path, file: &str, text: &str) -> Result<(), InputError> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join(file), text)?;
    Ok(())
}
