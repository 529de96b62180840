use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monoid::{associativity_witness, identity_witness, sampled_associativity_witness, Monoid};
use crate::witness::Witness;

use super::{CheckPolicy, InternalCategory};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    /// Set when the check was sampled rather than exhaustive.
    pub sampled: Option<u64>,
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.passed() { "PASS " } else { "FAIL " })?;
        f.write_str(&self.name)?;
        if let Some(n) = self.sampled {
            write!(f, " sampled:{n}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Checks sorted by name, then witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub(crate) fn push(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        self.checks.push(CheckResult { name: name.into(), sampled: None, witness });
    }

    pub(crate) fn push_sampled(&mut self, name: impl Into<String>, sampled: Option<u64>, witness: Option<Witness>) {
        self.checks.push(CheckResult { name: name.into(), sampled, witness });
    }

    pub(crate) fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.witness.cmp(&b.witness)));
        self
    }

    pub fn merge(mut self, other: Report) -> Self {
        self.checks.extend(other.checks);
        self.finish()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Which pairs a homomorphism check visits.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Pairs {
    All,
    Sampled { count: u64, seed: u64 },
}

impl Pairs {
    fn for_size(n: usize, policy: &CheckPolicy) -> Self {
        match policy.max_exhaustive_pairs {
            Some(cap) if (n as u64).saturating_mul(n as u64) > cap => {
                Pairs::Sampled { count: policy.samples, seed: policy.seed }
            }
            _ => Pairs::All,
        }
    }

    fn sampled(self) -> Option<u64> {
        match self {
            Pairs::All => None,
            Pairs::Sampled { count, .. } => Some(count),
        }
    }
}

/// First failure of each map as a homomorphism `source → target`, visiting
/// each source product once for all maps.
pub(crate) fn hom_witnesses<S: Monoid, T: Monoid>(source: &S, target: &T, maps: &[&[usize]], pairs: Pairs) -> Vec<Option<Witness>> {
    let (e, f) = (source.identity(), target.identity());
    let mut found: Vec<Option<Witness>> =
        maps.iter().map(|m| (m[e] != f).then(|| Witness::of(&[e]))).collect();
    let n = source.size();
    match pairs {
        Pairs::All => {
            let mut row = vec![0; n];
            for x in 0..n {
                if found.iter().all(Option::is_some) {
                    break;
                }
                source.mul_row(x, &mut row);
                for (map, slot) in maps.iter().zip(found.iter_mut()) {
                    if slot.is_some() {
                        continue;
                    }
                    let mx = map[x];
                    if let Some(y) = (0..n).find(|&y| map[row[y]] != target.mul(mx, map[y])) {
                        *slot = Some(Witness::of(&[x, y]));
                    }
                }
            }
        }
        Pairs::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let p = source.mul(x, y);
                for (map, slot) in maps.iter().zip(found.iter_mut()) {
                    if slot.is_none() && map[p] != target.mul(map[x], map[y]) {
                        *slot = Some(Witness::of(&[x, y]));
                    }
                }
            }
        }
    }
    found
}

fn first_difference(domain: usize, lhs: impl Fn(usize) -> usize, rhs: impl Fn(usize) -> usize) -> Option<Witness> {
    (0..domain).find(|&i| lhs(i) != rhs(i)).map(|i| Witness::of(&[i]))
}

pub(crate) fn monoid_checks<M: Monoid>(report: &mut Report, level: &str, m: &M, sampled: Option<(u64, u64)>) {
    report.push(format!("unit {level}"), identity_witness(m).map(|i| Witness::of(&[i])));
    let (mode, w) = match sampled {
        None => (None, associativity_witness(m)),
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (Some(count), sampled_associativity_witness(m, count, &mut rng))
        }
    };
    report.push_sampled(format!("assoc {level}"), mode, w.map(|(i, j, k)| Witness::of(&[i, j, k])));
}

fn shape_witnesses(c: &InternalCategory) -> Vec<(&'static str, Witness)> {
    let (n0, n1, n2) = c.sizes();
    let specs: [(&str, &[usize], usize, usize); 8] = [
        ("d10", &c.d10, n1, n0),
        ("d11", &c.d11, n1, n0),
        ("s00", &c.s00, n0, n1),
        ("d20", &c.d20, n2, n1),
        ("d21", &c.d21, n2, n1),
        ("d22", &c.d22, n2, n1),
        ("s10", &c.s10, n1, n2),
        ("s11", &c.s11, n1, n2),
    ];
    specs
        .into_iter()
        .filter_map(|(name, map, len, range)| {
            if map.len() != len {
                Some((name, Witness::of(&[map.len()])))
            } else {
                map.iter().position(|&v| v >= range).map(|i| (name, Witness::of(&[i])))
            }
        })
        .collect()
}

/// Runs every structural check on `c` and returns one line per check.
pub fn verify_internal_category(c: &InternalCategory, policy: &CheckPolicy) -> Report {
    let mut report = Report::default();
    let bad_shape = shape_witnesses(c);
    if !bad_shape.is_empty() {
        for (name, w) in bad_shape {
            report.push(format!("shape {name}"), Some(w));
        }
        return report.finish();
    }
    let (n0, n1, n2) = c.sizes();

    monoid_checks(&mut report, "C0", &c.c0, None);
    let c1_mode = policy.max_exhaustive_c1.is_some_and(|m| n1 > m).then_some((policy.samples, policy.seed));
    monoid_checks(&mut report, "C1", &c.c1, c1_mode);
    let c2_mode = (n2 > policy.max_exhaustive_c2).then_some((policy.samples, policy.seed));
    monoid_checks(&mut report, "C2", &c.c2, c2_mode);

    let from_c1 = hom_witnesses(&c.c1, &c.c0, &[&c.d10, &c.d11], Pairs::All);
    for (name, w) in ["d10", "d11"].into_iter().zip(from_c1) {
        report.push(format!("hom {name}"), w);
    }
    let w = hom_witnesses(&c.c0, &c.c1, &[&c.s00], Pairs::All).pop().flatten();
    report.push("hom s00", w);
    let c2_pairs = Pairs::for_size(n2, policy);
    let from_c2 = hom_witnesses(&c.c2, &c.c1, &[&c.d20, &c.d21, &c.d22], c2_pairs);
    for (name, w) in ["d20", "d21", "d22"].into_iter().zip(from_c2) {
        report.push_sampled(format!("hom {name}"), c2_pairs.sampled(), w);
    }
    let into_c2 = hom_witnesses(&c.c1, &c.c2, &[&c.s10, &c.s11], Pairs::All);
    for (name, w) in ["s10", "s11"].into_iter().zip(into_c2) {
        report.push(format!("hom {name}"), w);
    }

    let id = |i: usize| i;
    let simplicial: [(&str, Option<Witness>); 11] = [
        ("d10.s00=id", first_difference(n0, |a| c.d10[c.s00[a]], id)),
        ("d11.s00=id", first_difference(n0, |a| c.d11[c.s00[a]], id)),
        ("d20.s10=id", first_difference(n1, |f| c.d20[c.s10[f]], id)),
        ("d21.s10=id", first_difference(n1, |f| c.d21[c.s10[f]], id)),
        ("d21.s11=id", first_difference(n1, |f| c.d21[c.s11[f]], id)),
        ("d22.s11=id", first_difference(n1, |f| c.d22[c.s11[f]], id)),
        ("d20.s11=s00.d10", first_difference(n1, |f| c.d20[c.s11[f]], |f| c.s00[c.d10[f]])),
        ("d22.s10=s00.d11", first_difference(n1, |f| c.d22[c.s10[f]], |f| c.s00[c.d11[f]])),
        ("d10.d20=d10.d21", first_difference(n2, |h| c.d10[c.d20[h]], |h| c.d10[c.d21[h]])),
        ("d11.d20=d10.d22", first_difference(n2, |h| c.d11[c.d20[h]], |h| c.d10[c.d22[h]])),
        ("d11.d21=d11.d22", first_difference(n2, |h| c.d11[c.d21[h]], |h| c.d11[c.d22[h]])),
    ];
    for (name, w) in simplicial {
        report.push(format!("simplicial {name}"), w);
    }

    report.push("pullback", pullback_witness(c));
    report.finish()
}

/// Counts `h` over `C2` for each `(d20(h), d22(h))`; returns the first pair
/// whose count is not 1 when composable and 0 otherwise.
fn pullback_witness(c: &InternalCategory) -> Option<Witness> {
    let n1 = c.c1.size();
    let mut count = vec![0u32; n1 * n1];
    for (&f, &g) in c.d20.iter().zip(&c.d22) {
        count[f * n1 + g] += 1;
    }
    for f in 0..n1 {
        for g in 0..n1 {
            let expected = u32::from(c.d11[f] == c.d10[g]);
            let got = count[f * n1 + g];
            if got != expected {
                return Some(Witness::of(&[f, g, got as usize]));
            }
        }
    }
    None
}

/// The unique `h` with `d20(h) = f` and `d22(h) = g` for every pair, if the
/// pullback condition holds.
pub(crate) fn pullback_table(c: &InternalCategory) -> Option<Vec<Option<usize>>> {
    let n1 = c.c1.size();
    let mut table = vec![None; n1 * n1];
    for (h, (&f, &g)) in c.d20.iter().zip(&c.d22).enumerate() {
        if c.d11[f] != c.d10[g] || table[f * n1 + g].replace(h).is_some() {
            return None;
        }
    }
    for f in 0..n1 {
        for g in 0..n1 {
            if c.d11[f] == c.d10[g] && table[f * n1 + g].is_none() {
                return None;
            }
        }
    }
    Some(table)
}
