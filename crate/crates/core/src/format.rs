//! Line-oriented text format for monoids, actions, crossed structures and
//! morphisms. `#` starts a comment; blank lines are ignored. Every block is
//! a header line followed by its data lines:
//!
//! ```text
//! monoid <name> <size> <identity>        size rows of size indices
//! action <left|right|set> <actor> <carrier> [<name>]
//!                                        |A| rows of |K| indices
//! xbsmod <name> A=<m> K=<m> circ=<act> lambda=<act> rho=<act>
//! xsmod <name> A=<m> K=<m> rho=<act>     one row: ∂ (|K| indices)
//! xmod <name> A=<m> K=<m> rho=<act>      one row: ∂
//! morphism <name> source=<x> target=<x>  rows: κ (|K|), α (|A|)
//! weakmorphism <name> source=<x> target=<x>
//!                                        rows: κ (|A|), then |A| rows of γ
//! ```
//!
//! Names are global across all files of a directory. Monoid names not
//! defined in any file fall back to the built-in catalog.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::action::{validate_monoid_action, validate_set_action, MonoidAction, SetAction, Side};
use crate::catalog;
use crate::crossed::{
    validate_morphism, validate_weak_morphism, validate_xmod, validate_xsmod, CrossedModule, CrossedSemiBimodule,
    CrossedSemiModule, WeakMorphism, XbsMorphism,
};
use crate::monoid::{validate_monoid, FiniteMonoid, Monoid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{file}:{line}: {message}")]
    Parse { file: String, line: usize, message: String },
    #[error("{file}: {message}")]
    Io { file: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    Monoid,
    Action,
    Xbsmod,
    Xsmod,
    Xmod,
    Morphism,
    WeakMorphism,
}

impl BlockKind {
    fn parse(word: &str) -> Option<Self> {
        Some(match word {
            "monoid" => BlockKind::Monoid,
            "action" => BlockKind::Action,
            "xbsmod" => BlockKind::Xbsmod,
            "xsmod" => BlockKind::Xsmod,
            "xmod" => BlockKind::Xmod,
            "morphism" => BlockKind::Morphism,
            "weakmorphism" => BlockKind::WeakMorphism,
            _ => return None,
        })
    }

    pub fn keyword(self) -> &'static str {
        match self {
            BlockKind::Monoid => "monoid",
            BlockKind::Action => "action",
            BlockKind::Xbsmod => "xbsmod",
            BlockKind::Xsmod => "xsmod",
            BlockKind::Xmod => "xmod",
            BlockKind::Morphism => "morphism",
            BlockKind::WeakMorphism => "weakmorphism",
        }
    }
}

/// A header with its data rows, before any resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub name: String,
    /// Positional header words after the keyword, excluding `key=value` pairs.
    pub words: Vec<String>,
    pub fields: BTreeMap<String, String>,
    pub rows: Vec<Vec<usize>>,
    pub file: String,
    pub line: usize,
}

impl Block {
    fn field(&self, key: &str) -> Result<&str, FormatError> {
        self.fields.get(key).map(String::as_str).ok_or_else(|| self.error(format!("missing `{key}=`")))
    }

    fn error(&self, message: String) -> FormatError {
        FormatError::Parse { file: self.file.clone(), line: self.line, message }
    }
}

/// Splits `text` into blocks.
pub fn parse_blocks(text: &str, file: &str) -> Result<Vec<Block>, FormatError> {
    let mut blocks: Vec<Block> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| FormatError::Parse { file: file.to_string(), line, message };
        let mut words = content.split_whitespace();
        let first = words.next().expect("non-empty");
        if let Some(kind) = BlockKind::parse(first) {
            let mut positional = Vec::new();
            let mut fields = BTreeMap::new();
            for w in words {
                match w.split_once('=') {
                    Some((k, v)) => {
                        if fields.insert(k.to_string(), v.to_string()).is_some() {
                            return Err(err(format!("repeated field `{k}`")));
                        }
                    }
                    None => positional.push(w.to_string()),
                }
            }
            let name = match kind {
                BlockKind::Action => {
                    if positional.len() < 3 || positional.len() > 4 {
                        return Err(err("expected `action <side> <actor> <carrier> [<name>]`".into()));
                    }
                    positional.get(3).cloned().unwrap_or_else(|| positional[..3].join(":"))
                }
                _ => positional.first().cloned().ok_or_else(|| err(format!("{first} needs a name")))?,
            };
            blocks.push(Block { kind, name, words: positional, fields, rows: Vec::new(), file: file.to_string(), line });
        } else {
            let row = content
                .split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|_| err(format!("expected an index, found `{w}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            match blocks.last_mut() {
                Some(b) => b.rows.push(row),
                None => return Err(err(format!("data before any header: `{content}`"))),
            }
        }
    }
    Ok(blocks)
}

/// A parsed action table together with the names it refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionValue {
    Monoid(MonoidAction),
    Set(SetAction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionEntry {
    pub side: String,
    pub actor: String,
    pub carrier: String,
    pub value: ActionValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow<T> {
    pub source: String,
    pub target: String,
    pub value: T,
}

/// One named definition, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub kind: BlockKind,
    pub name: String,
    pub file: String,
    pub line: usize,
}

/// Everything defined in a set of files, resolved and validated. Definitions
/// that fail validation are kept in `invalid` with the reason.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Library {
    pub monoids: BTreeMap<String, FiniteMonoid>,
    pub actions: BTreeMap<String, ActionEntry>,
    pub xbsmods: BTreeMap<String, CrossedSemiBimodule>,
    pub xsmods: BTreeMap<String, CrossedSemiModule>,
    pub xmods: BTreeMap<String, CrossedModule>,
    pub morphisms: BTreeMap<String, Arrow<XbsMorphism>>,
    pub weak_morphisms: BTreeMap<String, Arrow<WeakMorphism>>,
    pub invalid: BTreeMap<String, String>,
    pub entries: Vec<Entry>,
}

impl Library {
    pub fn from_str(text: &str, file: &str) -> Result<Self, FormatError> {
        Self::from_blocks(parse_blocks(text, file)?)
    }

    /// All regular files in `dir`, in name order.
    pub fn from_dir(dir: &Path) -> Result<Self, FormatError> {
        let io = |e: std::io::Error| FormatError::Io { file: dir.display().to_string(), message: e.to_string() };
        let mut paths: Vec<PathBuf> =
            std::fs::read_dir(dir).map_err(io)?.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.is_file()).collect();
        paths.sort();
        Self::from_files(&paths)
    }

    pub fn from_files(paths: &[PathBuf]) -> Result<Self, FormatError> {
        let mut blocks = Vec::new();
        for p in paths {
            let file = p.display().to_string();
            let text = std::fs::read_to_string(p).map_err(|e| FormatError::Io { file: file.clone(), message: e.to_string() })?;
            blocks.extend(parse_blocks(&text, &file)?);
        }
        Self::from_blocks(blocks)
    }

    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self, FormatError> {
        let mut lib = Library::default();
        let mut seen = BTreeMap::new();
        for b in &blocks {
            if let Some(prev) = seen.insert(b.name.clone(), (b.file.clone(), b.line)) {
                return Err(b.error(format!("`{}` already defined at {}:{}", b.name, prev.0, prev.1)));
            }
            lib.entries.push(Entry { kind: b.kind, name: b.name.clone(), file: b.file.clone(), line: b.line });
        }
        let mut ordered: Vec<&Block> = blocks.iter().collect();
        ordered.sort_by_key(|b| b.kind);
        for b in ordered {
            lib.resolve(b)?;
        }
        Ok(lib)
    }

    /// Entries defined in `file`.
    pub fn entries_in<'a>(&'a self, file: &'a str) -> impl Iterator<Item = &'a Entry> + 'a {
        self.entries.iter().filter(move |e| e.file == file)
    }

    fn monoid(&self, b: &Block, name: &str) -> Result<Result<FiniteMonoid, String>, FormatError> {
        if let Some(m) = self.monoids.get(name) {
            return Ok(Ok(m.clone()));
        }
        if let Some(r) = self.invalid.get(name) {
            return Ok(Err(format!("depends on invalid `{name}`: {r}")));
        }
        if self.entries.iter().any(|e| e.name == name) {
            return Err(b.error(format!("`{name}` is not a monoid")));
        }
        catalog::lookup(name).map(Ok).ok_or_else(|| b.error(format!("unknown monoid `{name}`")))
    }

    fn dependency<'a, T>(&self, b: &Block, map: &'a BTreeMap<String, T>, name: &str, what: &str) -> Result<Result<&'a T, String>, FormatError> {
        if let Some(v) = map.get(name) {
            return Ok(Ok(v));
        }
        if let Some(r) = self.invalid.get(name) {
            return Ok(Err(format!("depends on invalid `{name}`: {r}")));
        }
        Err(b.error(format!("unknown {what} `{name}`")))
    }

    fn resolve(&mut self, b: &Block) -> Result<(), FormatError> {
        let outcome = match b.kind {
            BlockKind::Monoid => self.resolve_monoid(b)?,
            BlockKind::Action => self.resolve_action(b)?,
            BlockKind::Xbsmod => self.resolve_xbsmod(b)?,
            BlockKind::Xsmod | BlockKind::Xmod => self.resolve_boundary(b)?,
            BlockKind::Morphism | BlockKind::WeakMorphism => self.resolve_morphism(b)?,
        };
        if let Err(reason) = outcome {
            self.invalid.insert(b.name.clone(), reason);
        }
        Ok(())
    }

    fn resolve_monoid(&mut self, b: &Block) -> Result<Result<(), String>, FormatError> {
        let [_, size, id] = b.words.as_slice() else {
            return Err(b.error("expected `monoid <name> <size> <identity>`".into()));
        };
        let size: usize = size.parse().map_err(|_| b.error(format!("bad size `{size}`")))?;
        let id: usize = id.parse().map_err(|_| b.error(format!("bad identity `{id}`")))?;
        if b.rows.len() != size {
            return Err(b.error(format!("expected {size} rows, found {}", b.rows.len())));
        }
        Ok(validate_monoid(&b.rows, id).map(|m| {
            self.monoids.insert(b.name.clone(), m);
        })
        .map_err(|e| e.to_string()))
    }

    fn resolve_action(&mut self, b: &Block) -> Result<Result<(), String>, FormatError> {
        let (side, actor, carrier) = (&b.words[0], &b.words[1], &b.words[2]);
        let (actor_m, carrier_m) = match side.as_str() {
            "left" | "right" => (self.monoid(b, actor)?, self.monoid(b, carrier)?),
            "set" => (self.monoid(b, actor)?, Ok(FiniteMonoid::trivial())),
            other => return Err(b.error(format!("unknown side `{other}`"))),
        };
        let (actor_m, carrier_m) = match (actor_m, carrier_m) {
            (Ok(a), Ok(c)) => (a, c),
            (Err(e), _) | (_, Err(e)) => return Ok(Err(e)),
        };
        let value = if side == "set" {
            let carrier_size = match self.monoid(b, carrier)? {
                Ok(m) => m.size(),
                Err(e) => return Ok(Err(e)),
            };
            validate_set_action(&actor_m, carrier_size, &b.rows).map(ActionValue::Set).map_err(|e| e.to_string())
        } else {
            let s = if side == "left" { Side::Left } else { Side::Right };
            validate_monoid_action(s, &actor_m, &carrier_m, &b.rows).map(ActionValue::Monoid).map_err(|e| e.to_string())
        };
        Ok(value.map(|value| {
            let entry = ActionEntry { side: side.clone(), actor: actor.clone(), carrier: carrier.clone(), value };
            self.actions.insert(b.name.clone(), entry);
        }))
    }

    /// Looks up an action and checks it has the expected side and endpoints.
    fn typed_action(&self, b: &Block, key: &str, side: &str, actor: &str, carrier: &str) -> Result<Result<ActionValue, String>, FormatError> {
        let name = b.field(key)?;
        let entry = match self.dependency(b, &self.actions, name, "action")? {
            Ok(e) => e,
            Err(e) => return Ok(Err(e)),
        };
        if entry.side != side || entry.actor != actor || entry.carrier != carrier {
            return Ok(Err(format!(
                "`{key}={name}` must be a {side} action of {actor} on {carrier}, found {} of {} on {}",
                entry.side, entry.actor, entry.carrier
            )));
        }
        Ok(Ok(entry.value.clone()))
    }

    fn components(&self, b: &Block) -> Result<Result<(String, String, FiniteMonoid, FiniteMonoid), String>, FormatError> {
        let (an, kn) = (b.field("A")?.to_string(), b.field("K")?.to_string());
        match (self.monoid(b, &an)?, self.monoid(b, &kn)?) {
            (Ok(a), Ok(k)) => Ok(Ok((an, kn, a, k))),
            (Err(e), _) | (_, Err(e)) => Ok(Err(e)),
        }
    }

    fn resolve_xbsmod(&mut self, b: &Block) -> Result<Result<(), String>, FormatError> {
        let (an, kn, a, k) = match self.components(b)? {
            Ok(c) => c,
            Err(e) => return Ok(Err(e)),
        };
        let circ = self.typed_action(b, "circ", "set", &kn, &an)?;
        let lambda = self.typed_action(b, "lambda", "left", &an, &kn)?;
        let rho = self.typed_action(b, "rho", "right", &an, &kn)?;
        let (circ, lambda, rho) = match (circ, lambda, rho) {
            (Ok(ActionValue::Set(c)), Ok(ActionValue::Monoid(l)), Ok(ActionValue::Monoid(r))) => (c, l, r),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return Ok(Err(e)),
            _ => unreachable!("sides checked"),
        };
        Ok(CrossedSemiBimodule::new(a, k, circ, lambda, rho)
            .map(|x| {
                self.xbsmods.insert(b.name.clone(), x);
            })
            .map_err(|e| e.to_string()))
    }

    fn resolve_boundary(&mut self, b: &Block) -> Result<Result<(), String>, FormatError> {
        let (an, kn, a, k) = match self.components(b)? {
            Ok(c) => c,
            Err(e) => return Ok(Err(e)),
        };
        let rho = match self.typed_action(b, "rho", "right", &an, &kn)? {
            Ok(ActionValue::Monoid(r)) => r,
            Ok(ActionValue::Set(_)) => unreachable!("side checked"),
            Err(e) => return Ok(Err(e)),
        };
        let [d] = b.rows.as_slice() else {
            return Err(b.error("expected one row with the boundary map".into()));
        };
        let name = b.name.clone();
        Ok(if b.kind == BlockKind::Xsmod {
            validate_xsmod(a, k, d, rho).map(|s| {
                self.xsmods.insert(name, s);
            })
        } else {
            validate_xmod(a, k, d, rho).map(|m| {
                self.xmods.insert(name, m);
            })
        }
        .map_err(|e| e.to_string()))
    }

    fn resolve_morphism(&mut self, b: &Block) -> Result<Result<(), String>, FormatError> {
        let (sn, tn) = (b.field("source")?.to_string(), b.field("target")?.to_string());
        let (src, tgt) = match (
            self.dependency(b, &self.xbsmods, &sn, "crossed semi-bimodule")?,
            self.dependency(b, &self.xbsmods, &tn, "crossed semi-bimodule")?,
        ) {
            (Ok(s), Ok(t)) => (s.clone(), t.clone()),
            (Err(e), _) | (_, Err(e)) => return Ok(Err(e)),
        };
        let name = b.name.clone();
        if b.kind == BlockKind::Morphism {
            let [kappa, alpha] = b.rows.as_slice() else {
                return Err(b.error("expected two rows: kappa, alpha".into()));
            };
            Ok(validate_morphism(kappa, alpha, &src, &tgt)
                .map(|value| {
                    self.morphisms.insert(name, Arrow { source: sn, target: tn, value });
                })
                .map_err(|e| e.to_string()))
        } else {
            let Some((kappa, gamma)) = b.rows.split_first() else {
                return Err(b.error("expected a kappa row followed by gamma rows".into()));
            };
            Ok(validate_weak_morphism(kappa, gamma, &src, &tgt)
                .map(|value| {
                    self.weak_morphisms.insert(name, Arrow { source: sn, target: tn, value });
                })
                .map_err(|e| e.to_string()))
        }
    }
}

fn push_rows(out: &mut String, rows: &[Vec<usize>]) {
    for r in rows {
        let line: Vec<String> = r.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

pub fn emit_monoid(name: &str, m: &FiniteMonoid) -> String {
    let mut out = format!("monoid {name} {} {}\n", m.size(), m.identity());
    push_rows(&mut out, &m.rows());
    out
}

pub fn emit_action(name: &str, side: &str, actor: &str, carrier: &str, rows: &[Vec<usize>]) -> String {
    let mut out = format!("action {side} {actor} {carrier} {name}\n");
    push_rows(&mut out, rows);
    out
}

/// A self-contained file defining `x` and its components under `name`.
pub fn emit_xbsmod(name: &str, x: &CrossedSemiBimodule) -> String {
    let (an, kn) = (format!("{name}.A"), format!("{name}.K"));
    let mut out = emit_monoid(&an, x.a());
    out += &emit_monoid(&kn, x.k());
    out += &emit_action(&format!("{name}.circ"), "set", &kn, &an, &x.circ().rows());
    out += &emit_action(&format!("{name}.lambda"), "left", &an, &kn, &x.lambda().rows());
    out += &emit_action(&format!("{name}.rho"), "right", &an, &kn, &x.rho().rows());
    let _ = writeln!(out, "xbsmod {name} A={an} K={kn} circ={name}.circ lambda={name}.lambda rho={name}.rho");
    out
}

fn emit_boundary(keyword: &str, name: &str, a: &FiniteMonoid, k: &FiniteMonoid, d: &[usize], rho: &MonoidAction) -> String {
    let (an, kn) = (format!("{name}.A"), format!("{name}.K"));
    let mut out = emit_monoid(&an, a);
    out += &emit_monoid(&kn, k);
    out += &emit_action(&format!("{name}.rho"), "right", &an, &kn, &rho.rows());
    let _ = writeln!(out, "{keyword} {name} A={an} K={kn} rho={name}.rho");
    push_rows(&mut out, &[d.to_vec()]);
    out
}

pub fn emit_xsmod(name: &str, s: &CrossedSemiModule) -> String {
    emit_boundary("xsmod", name, s.a(), s.k(), s.partial().map(), s.rho())
}

pub fn emit_xmod(name: &str, m: &CrossedModule) -> String {
    emit_boundary("xmod", name, m.a(), m.k(), m.partial().map(), m.rho())
}

/// A weak morphism block referring to already defined structures.
pub fn emit_weak_morphism(name: &str, source: &str, target: &str, w: &WeakMorphism) -> String {
    let mut out = format!("weakmorphism {name} source={source} target={target}\n");
    push_rows(&mut out, &[w.kappa().map().to_vec()]);
    push_rows(&mut out, &w.gamma_rows());
    out
}

pub fn emit_morphism(name: &str, source: &str, target: &str, m: &XbsMorphism) -> String {
    let mut out = format!("morphism {name} source={source} target={target}\n");
    push_rows(&mut out, &[m.kappa().map().to_vec(), m.alpha().map().to_vec()]);
    out
}
