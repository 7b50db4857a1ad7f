//! Sampled verification of the strict distance/similarity axioms and the
//! entropy axioms.
//!
//! A `pass` verdict means no violation was found among the sampled inputs;
//! it is evidence, not proof. Every sample is derived from
//! `(seed, stream, index)` alone, so reports do not depend on evaluation
//! order, and the first witness reported for an axiom is the one with the
//! smallest sample index in the fixed source order.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fmt17;
use crate::fuzzy::Ifv;
use crate::jsd::entropy_ifv;
use crate::measure::{MeasureDescriptor, MeasureKind};

#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub grid_step: f64,
    pub random_pairs: u64,
    pub random_triples: u64,
    pub chain_samples: u64,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            grid_step: 0.01,
            random_pairs: 100_000,
            random_triples: 100_000,
            chain_samples: 10_000,
            seed: 0x1F5_2022,
            tolerance: 1e-12,
        }
    }
}

impl AuditConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.grid_step > 0.0 && self.grid_step <= 0.5) {
            return Err(Error::InvalidConfig(format!(
                "grid_step {} is outside (0, 0.5]",
                self.grid_step
            )));
        }
        if self.random_pairs == 0 || self.random_triples == 0 || self.chain_samples == 0 {
            return Err(Error::InvalidConfig("sample counts must be >= 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "tolerance {} must be > 0",
                self.tolerance
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Sampling

mod stream {
    pub const SIMPLEX: u64 = 1;
    pub const PAIR_LEFT: u64 = 2;
    pub const PAIR_RIGHT: u64 = 3;
    pub const TRIPLE: u64 = 4;
    pub const CHAIN: u64 = 5;
    pub const NESTED: u64 = 6;
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn sample_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let key = splitmix64(splitmix64(seed ^ stream.wrapping_mul(0xA24B_AED4_963E_E407)) ^ index);
    ChaCha8Rng::seed_from_u64(key)
}

/// Uniform point of the simplex `mu + nu <= 1` by folding the unit square.
fn uniform_ifv<R: Rng>(rng: &mut R) -> Ifv {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    let (mu, nu) = if u + v > 1.0 {
        (1.0 - u, 1.0 - v)
    } else {
        (u, v)
    };
    Ifv::new(mu, nu).expect("folded square lies in the simplex")
}

fn random_ifv(seed: u64, stream: u64, index: u64) -> Ifv {
    uniform_ifv(&mut sample_rng(seed, stream, index))
}

/// All grid points `(i h, j h)` with `i h + j h <= 1`, `mu`-major.
///
/// When `1/h` is an integer `N` the coordinates are computed as `i / N`,
/// so that e.g. `0.07` is the nearest double rather than `7 * 0.01`.
pub fn simplex_grid(step: f64) -> Vec<Ifv> {
    let n = (1.0 / step).round();
    let mut out = Vec::new();
    if n >= 1.0 && (n * step - 1.0).abs() < 1e-9 {
        let n = n as u64;
        for i in 0..=n {
            for j in 0..=(n - i) {
                let mu = i as f64 / n as f64;
                let nu = j as f64 / n as f64;
                out.push(Ifv::new(mu, nu).expect("grid point in simplex"));
            }
        }
    } else {
        let count = (1.0 / step + 1e-9).floor() as u64;
        for i in 0..=count {
            for j in 0..=count {
                let mu = i as f64 * step;
                let nu = j as f64 * step;
                if mu + nu <= 1.0 + 1e-12 {
                    if let Ok(a) = Ifv::new(mu, nu) {
                        out.push(a);
                    }
                }
            }
        }
    }
    out
}

/// The grid, followed by `random_pairs` uniform random values.
pub fn sample_simplex(config: &AuditConfig) -> impl Iterator<Item = Ifv> {
    let seed = config.seed;
    simplex_grid(config.grid_step)
        .into_iter()
        .chain((0..config.random_pairs).map(move |i| random_ifv(seed, stream::SIMPLEX, i)))
}

/// Chains taken from the worked counterexamples; emitted before the random
/// chains.
pub fn pinned_chains() -> Vec<[Ifv; 3]> {
    let v = |mu, nu| Ifv::new(mu, nu).expect("pinned value");
    vec![
        [v(0.33, 0.36), v(1.0 / 3.0, 1.0 / 3.0), v(0.334, 0.333333)],
        [v(0.5, 0.5), v(0.6, 0.3), v(0.7, 0.3)],
    ]
}

const MIN_STEP: f64 = 1e-6;

/// One strict step up Atanassov's order from `x`, or `None` if `x` has no
/// room to move by at least [`MIN_STEP`].
fn strict_step<R: Rng>(rng: &mut R, x: &Ifv) -> Option<Ifv> {
    let frac = |rng: &mut R| rng.random_range(0.01..0.99);
    let pi = x.indeterminacy();
    let mut modes = Vec::with_capacity(3);
    if pi * 0.01 >= MIN_STEP {
        modes.push(0);
    }
    if x.nu() * 0.01 >= MIN_STEP {
        modes.push(1);
        modes.push(2);
    }
    if modes.is_empty() {
        return None;
    }
    let mode = modes[rng.random_range(0..modes.len())];
    let (du, dv) = match mode {
        0 => (pi * frac(rng), 0.0),
        1 => (0.0, x.nu() * frac(rng)),
        _ => {
            let dv = x.nu() * frac(rng);
            (((pi + dv) * frac(rng)).max(MIN_STEP), dv)
        }
    };
    let mu = (x.mu() + du).min(1.0);
    let nu = (x.nu() - dv).max(0.0);
    let next = Ifv::new(mu, nu).ok()?;
    x.is_strict_subset_of(&next).then_some(next)
}

fn random_chain(seed: u64, index: u64) -> [Ifv; 3] {
    let mut rng = sample_rng(seed, stream::CHAIN, index);
    loop {
        let a = uniform_ifv(&mut rng);
        let Some(b) = strict_step(&mut rng, &a) else {
            continue;
        };
        let Some(c) = strict_step(&mut rng, &b) else {
            continue;
        };
        return [a, b, c];
    }
}

/// Strict chains `a ⊊ b ⊊ c`: the pinned chains, then `chain_samples`
/// random ones.
pub fn sample_strict_chain(config: &AuditConfig) -> impl Iterator<Item = [Ifv; 3]> {
    let seed = config.seed;
    pinned_chains()
        .into_iter()
        .chain((0..config.chain_samples).map(move |i| random_chain(seed, i)))
}

/// A pair satisfying `mu_a <= mu_b <= nu_b <= nu_a` or the mirrored
/// condition.
fn random_nested_pair(seed: u64, index: u64) -> (Ifv, Ifv) {
    let mut rng = sample_rng(seed, stream::NESTED, index);
    let b = uniform_ifv(&mut rng);
    let (lo, hi) = if b.mu() <= b.nu() {
        (b.mu(), b.nu())
    } else {
        (b.nu(), b.mu())
    };
    // outer pair (s, t) with s <= lo, t >= hi, s + t <= 1
    let s = lo * rng.random::<f64>();
    let t = hi + (1.0 - s - hi).max(0.0) * rng.random::<f64>();
    let a = if b.mu() <= b.nu() {
        Ifv::new(s, t)
    } else {
        Ifv::new(t, s)
    };
    (a.expect("nested pair in simplex"), b)
}

fn nested_premise(a: &Ifv, b: &Ifv) -> bool {
    (a.mu() <= b.mu() && b.mu() <= b.nu() && b.nu() <= a.nu())
        || (a.mu() >= b.mu() && b.mu() >= b.nu() && b.nu() >= a.nu())
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// Range `[0, 1]`.
    S1,
    /// `d(a, a) = 0` and `d(a, b) > 0` for `a != b`.
    S2,
    /// Symmetry.
    S3,
    /// Weak chain monotonicity.
    S4,
    /// Strict chain monotonicity.
    S4Strict,
    /// Distance 1 only on the endpoint pairs.
    S5,
    Triangle,
    E1,
    E2,
    E3,
    E4,
}

impl Axiom {
    pub const DISTANCE: [Axiom; 7] = [
        Axiom::S1,
        Axiom::S2,
        Axiom::S3,
        Axiom::S4,
        Axiom::S4Strict,
        Axiom::S5,
        Axiom::Triangle,
    ];
    pub const ENTROPY: [Axiom; 4] = [Axiom::E1, Axiom::E2, Axiom::E3, Axiom::E4];

    pub fn id(&self) -> &'static str {
        match self {
            Axiom::S1 => "S1",
            Axiom::S2 => "S2",
            Axiom::S3 => "S3",
            Axiom::S4 => "S4",
            Axiom::S4Strict => "S4'",
            Axiom::S5 => "S5",
            Axiom::Triangle => "D-triangle",
            Axiom::E1 => "E1",
            Axiom::E2 => "E2",
            Axiom::E3 => "E3",
            Axiom::E4 => "E4",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No violation among the samples.
    Pass,
    Fail,
    /// Only violations smaller than the tolerance were seen.
    Indeterminate,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass (sampled)",
            Verdict::Fail => "FAIL",
            Verdict::Indeterminate => "indeterminate at tolerance",
            Verdict::NotApplicable => "not applicable",
        })
    }
}

/// Inputs and measured values of one violating sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub source: &'static str,
    pub index: u64,
    pub inputs: Vec<Ifv>,
    pub values: Vec<(String, f64)>,
    /// How far the sample is from satisfying the axiom (positive).
    pub excess: f64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} #{}:", self.source, self.index)?;
        for a in &self.inputs {
            write!(f, " {a}")?;
        }
        for (k, v) in &self.values {
            write!(f, " {k}={}", fmt17(*v))?;
        }
        write!(f, " excess={}", fmt17(self.excess))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomEntry {
    pub axiom: Axiom,
    pub verdict: Verdict,
    pub checked: u64,
    pub violations: u64,
    pub indeterminate: u64,
    /// First violation, or first sub-tolerance violation when there is none.
    pub witness: Option<Witness>,
    /// A summary statistic, e.g. for S5 the largest distance over
    /// non-endpoint grid pairs.
    pub statistic: Option<(&'static str, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SampleCounts {
    pub grid_points: u64,
    pub grid_pairs: u64,
    pub random_pairs: u64,
    pub random_triples: u64,
    pub chains: u64,
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub measure: String,
    pub entries: Vec<AxiomEntry>,
    pub samples: SampleCounts,
    pub elapsed: Duration,
}

impl AxiomReport {
    pub fn entry(&self, axiom: Axiom) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn verdict(&self, axiom: Axiom) -> Option<Verdict> {
        self.entry(axiom).map(|e| e.verdict)
    }

    /// No axiom failed.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    /// Same verdicts, counts and witnesses (timing ignored).
    pub fn same_outcome(&self, other: &AxiomReport) -> bool {
        self.measure == other.measure
            && self.entries == other.entries
            && self.samples == other.samples
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let s = &self.samples;
        let _ = writeln!(out, "measure: {}", self.measure);
        let _ = writeln!(
            out,
            "samples: grid_points={} grid_pairs={} random_pairs={} random_triples={} chains={}",
            s.grid_points, s.grid_pairs, s.random_pairs, s.random_triples, s.chains
        );
        for e in &self.entries {
            let _ = write!(
                out,
                "{:<10} {:<26} checked={} violations={} indeterminate={}",
                e.axiom.id(),
                e.verdict.to_string(),
                e.checked,
                e.violations,
                e.indeterminate
            );
            if let Some((name, v)) = e.statistic {
                let _ = write!(out, " {name}={}", fmt17(v));
            }
            out.push('\n');
            if let Some(w) = &e.witness {
                let _ = writeln!(out, "           witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "overall: {}",
            if self.passed() { "pass" } else { "FAIL" }
        );
        out
    }
}

/// Accumulates the outcome of one axiom.
struct Tally {
    axiom: Axiom,
    tolerance: f64,
    checked: u64,
    violations: u64,
    indeterminate: u64,
    fail: Option<Witness>,
    weak: Option<Witness>,
    statistic: Option<(&'static str, f64)>,
}

impl Tally {
    fn new(axiom: Axiom, tolerance: f64) -> Self {
        Tally {
            axiom,
            tolerance,
            checked: 0,
            violations: 0,
            indeterminate: 0,
            fail: None,
            weak: None,
            statistic: None,
        }
    }

    /// Records one check; `excess > 0` means the axiom is violated by that
    /// much. Violations up to the tolerance count as indeterminate.
    fn record<F>(&mut self, excess: f64, witness: F)
    where
        F: FnOnce(f64) -> Witness,
    {
        self.checked += 1;
        if excess.is_nan() || excess > self.tolerance {
            self.violations += 1;
            if self.fail.is_none() {
                self.fail = Some(witness(excess));
            }
        } else if excess > 0.0 {
            self.indeterminate += 1;
            if self.weak.is_none() {
                self.weak = Some(witness(excess));
            }
        }
    }

    /// Records one check that has no tolerance band.
    fn record_exact<F>(&mut self, violated: bool, witness: F)
    where
        F: FnOnce() -> Witness,
    {
        self.checked += 1;
        if violated {
            self.violations += 1;
            if self.fail.is_none() {
                self.fail = Some(witness());
            }
        }
    }

    fn finish(self) -> AxiomEntry {
        let verdict = if self.violations > 0 {
            Verdict::Fail
        } else if self.indeterminate > 0 {
            Verdict::Indeterminate
        } else {
            Verdict::Pass
        };
        AxiomEntry {
            axiom: self.axiom,
            verdict,
            checked: self.checked,
            violations: self.violations,
            indeterminate: self.indeterminate,
            witness: self.fail.or(self.weak),
            statistic: self.statistic,
        }
    }
}

fn witness(
    source: &'static str,
    index: u64,
    inputs: &[Ifv],
    values: &[(&str, f64)],
    excess: f64,
) -> Witness {
    Witness {
        source,
        index,
        inputs: inputs.to_vec(),
        values: values.iter().map(|(k, v)| ((*k).to_owned(), *v)).collect(),
        excess,
    }
}

fn is_endpoint_pair(a: &Ifv, b: &Ifv) -> bool {
    (*a == Ifv::FULL && *b == Ifv::EMPTY) || (*a == Ifv::EMPTY && *b == Ifv::FULL)
}

/// Family members `<l,0>`, `<0,l>`, `<l,1-l>` on a 0.001 grid, paired with
/// both endpoints.
fn pinned_family_pairs() -> Vec<(Ifv, Ifv)> {
    let mut out = Vec::new();
    for i in 0..=1000u32 {
        let l = f64::from(i) / 1000.0;
        let members = [Ifv::new(l, 0.0), Ifv::new(0.0, l), Ifv::new(l, 1.0 - l)];
        for m in members.into_iter().flatten() {
            out.push((Ifv::FULL, m));
            out.push((Ifv::EMPTY, m));
        }
    }
    out
}

/// Checks S1-S5 and the triangle inequality for a distance measure at the
/// value level.
pub fn audit_distance(m: &MeasureDescriptor, config: &AuditConfig) -> Result<AxiomReport> {
    if m.kind() != MeasureKind::Distance {
        return Err(Error::MeasureKind {
            name: m.name().to_owned(),
            expected: MeasureKind::Distance.as_str(),
            actual: m.kind().as_str(),
        });
    }
    config.validate()?;
    let start = Instant::now();
    let eval = m.evaluator();
    let d = |a: &Ifv, b: &Ifv| eval.ifv_distance(a, b);
    let tol = config.tolerance;

    let mut s1 = Tally::new(Axiom::S1, tol);
    let mut s2 = Tally::new(Axiom::S2, tol);
    let mut s3 = Tally::new(Axiom::S3, tol);
    let mut s4 = Tally::new(Axiom::S4, tol);
    let mut s4s = Tally::new(Axiom::S4Strict, tol);
    let mut s5 = Tally::new(Axiom::S5, tol);
    let mut tri = Tally::new(Axiom::Triangle, tol);
    let mut sup_off_endpoints = f64::NEG_INFINITY;
    let mut counts = SampleCounts::default();

    // shared pair checks: range, identity, symmetry, endpoint maximality
    let mut check_pair = |source: &'static str,
                          index: u64,
                          a: &Ifv,
                          b: &Ifv,
                          dab: f64,
                          dba: f64,
                          s1: &mut Tally,
                          s2: &mut Tally,
                          s3: &mut Tally,
                          s5: &mut Tally| {
        let vals = [("d(a,b)", dab), ("d(b,a)", dba)];
        for dv in [dab, dba] {
            let out = if dv < 0.0 { -dv } else { dv - 1.0 };
            s1.record(out, |e| witness(source, index, &[*a, *b], &vals, e));
        }
        if a == b {
            s2.record(dab.abs(), |e| witness(source, index, &[*a, *b], &vals, e));
        } else {
            s2.record_exact(dab <= 0.0 || dba <= 0.0, || {
                witness(source, index, &[*a, *b], &vals, 0.0)
            });
        }
        s3.record((dab - dba).abs(), |e| {
            witness(source, index, &[*a, *b], &vals, e)
        });
        if is_endpoint_pair(a, b) {
            s5.record(1.0 - dab.min(dba), |e| {
                witness(source, index, &[*a, *b], &vals, e)
            });
        } else if a != b {
            let top = dab.max(dba);
            if source == "grid pair" {
                sup_off_endpoints = sup_off_endpoints.max(top);
            }
            s5.record_exact(top >= 1.0 - tol, || {
                witness(source, index, &[*a, *b], &vals, top - (1.0 - tol))
            });
        }
    };

    let grid = simplex_grid(config.grid_step);
    counts.grid_points = grid.len() as u64;
    let mut idx = 0u64;
    for (i, a) in grid.iter().enumerate() {
        for b in &grid[i..] {
            let dab = d(a, b)?;
            let dba = d(b, a)?;
            check_pair(
                "grid pair",
                idx,
                a,
                b,
                dab,
                dba,
                &mut s1,
                &mut s2,
                &mut s3,
                &mut s5,
            );
            idx += 1;
        }
    }
    counts.grid_pairs = idx;

    for (k, (a, b)) in pinned_family_pairs().iter().enumerate() {
        let dab = d(a, b)?;
        let dba = d(b, a)?;
        check_pair(
            "endpoint family",
            k as u64,
            a,
            b,
            dab,
            dba,
            &mut s1,
            &mut s2,
            &mut s3,
            &mut s5,
        );
    }

    for i in 0..config.random_pairs {
        let a = random_ifv(config.seed, stream::PAIR_LEFT, i);
        let b = random_ifv(config.seed, stream::PAIR_RIGHT, i);
        let dab = d(&a, &b)?;
        let dba = d(&b, &a)?;
        check_pair(
            "random pair",
            i,
            &a,
            &b,
            dab,
            dba,
            &mut s1,
            &mut s2,
            &mut s3,
            &mut s5,
        );
        let daa = d(&a, &a)?;
        s2.record(daa.abs(), |e| {
            witness("random pair", i, &[a, a], &[("d(a,a)", daa)], e)
        });
    }
    counts.random_pairs = config.random_pairs;
    s5.statistic = Some(("grid_sup_off_endpoints", sup_off_endpoints));

    for i in 0..config.random_triples {
        let a = random_ifv(config.seed, stream::TRIPLE, 3 * i);
        let b = random_ifv(config.seed, stream::TRIPLE, 3 * i + 1);
        let c = random_ifv(config.seed, stream::TRIPLE, 3 * i + 2);
        let (dab, dbc, dac) = (d(&a, &b)?, d(&b, &c)?, d(&a, &c)?);
        let slack = dac - dab - dbc;
        // the triangle inequality is accepted with slack `tolerance`
        tri.record_exact(slack > tol || slack.is_nan(), || {
            witness(
                "random triple",
                i,
                &[a, b, c],
                &[("d(a,b)", dab), ("d(b,c)", dbc), ("d(a,c)", dac)],
                slack,
            )
        });
    }
    counts.random_triples = config.random_triples;

    let pinned = pinned_chains().len() as u64;
    for (i, [a, b, c]) in sample_strict_chain(config).enumerate() {
        let i = i as u64;
        let (source, index) = if i < pinned {
            ("pinned chain", i)
        } else {
            ("random chain", i - pinned)
        };
        let (dab, dbc, dac) = (d(&a, &b)?, d(&b, &c)?, d(&a, &c)?);
        let vals = [("d(a,b)", dab), ("d(b,c)", dbc), ("d(a,c)", dac)];
        let weak_excess = (dab - dac).max(dbc - dac);
        s4.record(weak_excess, |e| {
            witness(source, index, &[a, b, c], &vals, e)
        });
        // strict: both gaps positive; a gap <= 0 is a violation of size -gap,
        // equality lands in the indeterminate band
        let gap = (dac - dab).min(dac - dbc);
        let excess = if gap > 0.0 {
            0.0
        } else {
            (-gap).max(f64::MIN_POSITIVE)
        };
        s4s.record(excess, |e| witness(source, index, &[a, b, c], &vals, e));
    }
    counts.chains = pinned + config.chain_samples;

    Ok(AxiomReport {
        measure: m.to_string(),
        entries: vec![
            s1.finish(),
            s2.finish(),
            s3.finish(),
            s4.finish(),
            s4s.finish(),
            s5.finish(),
            tri.finish(),
        ],
        samples: counts,
        elapsed: start.elapsed(),
    })
}

/// Checks E1-E4 for [`entropy_ifv`].
pub fn audit_entropy(config: &AuditConfig) -> Result<AxiomReport> {
    config.validate()?;
    let start = Instant::now();
    let tol = config.tolerance;
    let mut e1 = Tally::new(Axiom::E1, tol);
    let mut e2 = Tally::new(Axiom::E2, tol);
    let mut e3 = Tally::new(Axiom::E3, tol);
    let mut e4 = Tally::new(Axiom::E4, tol);
    let mut counts = SampleCounts::default();

    let grid = simplex_grid(config.grid_step);
    counts.grid_points = grid.len() as u64;
    let grid_e: Vec<f64> = grid.iter().map(entropy_ifv).collect();

    let mut point = |source: &'static str, index: u64, a: &Ifv, e: f64| {
        let vals = [("E(a)", e)];
        if a.is_crisp() {
            e1.record(e.abs(), |x| witness(source, index, &[*a], &vals, x));
        } else {
            e1.record_exact(e <= 0.0, || witness(source, index, &[*a], &vals, -e));
        }
        if a.mu() == a.nu() {
            e2.record((1.0 - e).abs(), |x| witness(source, index, &[*a], &vals, x));
        } else {
            e2.record_exact(e >= 1.0, || witness(source, index, &[*a], &vals, e - 1.0));
        }
        let ec = entropy_ifv(&a.complement());
        e3.record((e - ec).abs(), |x| {
            witness(source, index, &[*a], &[("E(a)", e), ("E(a^c)", ec)], x)
        });
    };
    for (i, (a, e)) in grid.iter().zip(&grid_e).enumerate() {
        point("grid point", i as u64, a, *e);
    }
    for (i, a) in sample_simplex(config).skip(grid.len()).enumerate() {
        point("random point", i as u64, &a, entropy_ifv(&a));
    }

    let mut pair = |source: &'static str, index: u64, a: &Ifv, b: &Ifv, ea: f64, eb: f64| {
        e4.record(ea - eb, |x| {
            witness(source, index, &[*a, *b], &[("E(a)", ea), ("E(b)", eb)], x)
        });
    };
    let pinned_a = Ifv::new(0.1, 0.8).expect("pinned");
    let pinned_b = Ifv::new(0.3, 0.5).expect("pinned");
    pair(
        "pinned pair",
        0,
        &pinned_a,
        &pinned_b,
        entropy_ifv(&pinned_a),
        entropy_ifv(&pinned_b),
    );
    let mut idx = 0u64;
    for (a, ea) in grid.iter().zip(&grid_e) {
        for (b, eb) in grid.iter().zip(&grid_e) {
            if a != b && nested_premise(a, b) {
                pair("grid pair", idx, a, b, *ea, *eb);
                idx += 1;
            }
        }
    }
    counts.grid_pairs = idx;
    for i in 0..config.random_pairs {
        let (a, b) = random_nested_pair(config.seed, i);
        debug_assert!(nested_premise(&a, &b));
        pair(
            "random nested pair",
            i,
            &a,
            &b,
            entropy_ifv(&a),
            entropy_ifv(&b),
        );
    }
    counts.random_pairs = config.random_pairs;

    Ok(AxiomReport {
        measure: "entropy".to_owned(),
        entries: vec![e1.finish(), e2.finish(), e3.finish(), e4.finish()],
        samples: counts,
        elapsed: start.elapsed(),
    })
}
