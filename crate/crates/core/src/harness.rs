//! Verification suites tying the closed forms to the series oracle.
//!
//! Every suite is a deterministic function of `(seed, samples)`. Module
//! errors are recorded as failing cases (with `got = NaN`, serialized as
//! `null`) and never abort a run.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{BohrError, Result};
use crate::multidim::{
    frechet_lower, hilbert_extremal, hilbert_radius, hpn_exact, hpn_lower_combine,
    pbohr_scalar_lower, pbohr_vector_lower, polydisk_lower, PlConvexityConstant,
};
use crate::oracle::{
    bohr_quantity, bombieri_bound, h_quantity, p_bohr_quantity, polydisk_bohr_quantity, radius_of,
    sample_caratheodory, sample_schur_batch, split_seed, FunctionFamily, Functional,
};
use crate::params::BohrParams;
use crate::radius::{
    eval_a, eval_s, hat_root, inf_a, inf_s, radius_scalar, radius_scalar_via, CaseTag, RadiusValue,
};

/// Maximum degree of sampled Blaschke products.
pub const SCHUR_MAX_DEGREE: usize = 6;
/// Bohr-quantity slack for random Schur samples.
pub const SCHUR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Golden,
    OracleEquiv,
    Extremal,
    Identities,
    Bombieri,
    SchurRandom,
    Hilbert,
    Monotone,
    DispatchBoundary,
    Caratheodory,
    All,
}

impl Suite {
    pub const MEMBERS: [Suite; 10] = [
        Suite::Golden,
        Suite::OracleEquiv,
        Suite::Extremal,
        Suite::Identities,
        Suite::Bombieri,
        Suite::SchurRandom,
        Suite::Hilbert,
        Suite::Monotone,
        Suite::DispatchBoundary,
        Suite::Caratheodory,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::OracleEquiv => "oracle_equiv",
            Suite::Extremal => "extremal",
            Suite::Identities => "identities",
            Suite::Bombieri => "bombieri",
            Suite::SchurRandom => "schur_random",
            Suite::Hilbert => "hilbert",
            Suite::Monotone => "monotone",
            Suite::DispatchBoundary => "dispatch_boundary",
            Suite::Caratheodory => "caratheodory",
            Suite::All => "all",
        }
    }

    pub fn is_randomized(self) -> bool {
        matches!(
            self,
            Suite::Bombieri | Suite::SchurRandom | Suite::Caratheodory | Suite::All
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = BohrError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::MEMBERS
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|m| m.name() == s)
            .copied()
            .ok_or_else(|| BohrError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub id: String,
    #[serde(deserialize_with = "null_as_nan")]
    pub expected: f64,
    #[serde(deserialize_with = "null_as_nan")]
    pub got: f64,
    #[serde(deserialize_with = "null_as_nan")]
    pub tol: f64,
}

fn null_as_nan<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

/// Outcome of one suite; `failures` is empty iff the suite passed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Relation {
    Close,
    AtMost,
    AtLeast,
    StrictlyBelow,
}

/// One verified inequality or equality.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub expected: f64,
    pub got: f64,
    pub tol: f64,
    relation: Relation,
}

impl Check {
    fn new(id: impl Into<String>, expected: f64, got: f64, tol: f64, relation: Relation) -> Self {
        Self {
            id: id.into(),
            expected,
            got,
            tol,
            relation,
        }
    }

    /// `|got - expected| <= tol`
    pub fn close(id: impl Into<String>, expected: f64, got: f64, tol: f64) -> Self {
        Self::new(id, expected, got, tol, Relation::Close)
    }

    /// `got <= expected + tol`
    pub fn at_most(id: impl Into<String>, bound: f64, got: f64, tol: f64) -> Self {
        Self::new(id, bound, got, tol, Relation::AtMost)
    }

    /// `got >= expected - tol`
    pub fn at_least(id: impl Into<String>, bound: f64, got: f64, tol: f64) -> Self {
        Self::new(id, bound, got, tol, Relation::AtLeast)
    }

    /// `got < expected`
    pub fn strictly_below(id: impl Into<String>, bound: f64, got: f64) -> Self {
        Self::new(id, bound, got, 0.0, Relation::StrictlyBelow)
    }

    fn error(id: impl Into<String>, err: &BohrError) -> Self {
        Self::new(
            format!("{} error: {err}", id.into()),
            f64::NAN,
            f64::NAN,
            0.0,
            Relation::Close,
        )
    }

    pub fn passed(&self) -> bool {
        match self.relation {
            Relation::Close => (self.got - self.expected).abs() <= self.tol,
            Relation::AtMost => self.got <= self.expected + self.tol,
            Relation::AtLeast => self.got >= self.expected - self.tol,
            Relation::StrictlyBelow => self.got < self.expected,
        }
    }

    fn failure(&self) -> Failure {
        Failure {
            id: self.id.clone(),
            expected: self.expected,
            got: self.got,
            tol: self.tol,
        }
    }
}

/// Runs `f`, turning an error into a failing case.
fn guarded(id: &str, f: impl FnOnce() -> Result<Vec<Check>>) -> Vec<Check> {
    f().unwrap_or_else(|e| vec![Check::error(id, &e)])
}

fn bp(p: f64, q: f64) -> BohrParams {
    BohrParams::new(p, q).expect("grid exponents are valid")
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Assembles a report from checks; cases are sorted by id.
pub fn report(suite: &str, mut checks: Vec<Check>, seconds: f64) -> SuiteReport {
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport {
        suite: suite.to_string(),
        cases: checks.len(),
        failures: checks
            .iter()
            .filter(|c| !c.passed())
            .map(Check::failure)
            .collect(),
        seconds,
    }
}

pub fn run_suite(suite: Suite, seed: u64, samples: usize) -> Result<SuiteReport> {
    if suite.is_randomized() && samples == 0 {
        return Err(BohrError::Precondition(format!(
            "suite {suite} needs samples >= 1"
        )));
    }
    let start = Instant::now();
    let checks = suite_checks(suite, seed, samples);
    Ok(report(suite.name(), checks, start.elapsed().as_secs_f64()))
}

/// The raw checks of a suite (the union of all members for [`Suite::All`]).
pub fn suite_checks(suite: Suite, seed: u64, samples: usize) -> Vec<Check> {
    match suite {
        Suite::Golden => golden(),
        Suite::OracleEquiv => oracle_equiv(),
        Suite::Extremal => extremal(),
        Suite::Identities => identities(),
        Suite::Bombieri => bombieri(seed, samples),
        Suite::SchurRandom => schur_random(seed, samples),
        Suite::Hilbert => hilbert(),
        Suite::Monotone => monotone(),
        Suite::DispatchBoundary => dispatch_boundary(),
        Suite::Caratheodory => caratheodory(seed, samples),
        Suite::All => Suite::MEMBERS
            .par_iter()
            .flat_map(|m| suite_checks(*m, seed, samples))
            .collect(),
    }
}

/// A reference value with known closed form.
#[derive(Debug, Clone)]
pub struct GoldenEntry {
    pub id: String,
    pub formula: &'static str,
    pub expected: f64,
    pub computed: Result<f64>,
}

pub const GOLDEN_TOL: f64 = 1e-9;

pub fn golden_table() -> Vec<GoldenEntry> {
    let scalar = |p: f64, q: f64| -> Result<f64> {
        let r = radius_scalar(BohrParams::new(p, q)?);
        r.exact_value()
            .ok_or_else(|| BohrError::Precondition(format!("R({p},{q}) is not exact")))
    };
    let mut out = vec![GoldenEntry {
        id: "R[p=1,q=1]".into(),
        formula: "R_{1,1}(C) = 1/3",
        expected: 1.0 / 3.0,
        computed: scalar(1.0, 1.0),
    }];
    for p in [1.0, 1.25, 1.5, 1.75, 2.0] {
        out.push(GoldenEntry {
            id: format!("R[p={p},q=1]"),
            formula: "R_{p,1}(C) = p/(2+p)",
            expected: p / (2.0 + p),
            computed: scalar(p, 1.0),
        });
    }
    for (p, q) in [(2.0, 2.0), (3.0, 2.0), (2.0, 5.0), (4.0, 4.0)] {
        out.push(GoldenEntry {
            id: format!("R[p={p},q={q}]"),
            formula: "R_{p,q}(C) = 1/sqrt(2)",
            expected: FRAC_1_SQRT_2,
            computed: scalar(p, q),
        });
    }
    out.push(GoldenEntry {
        id: "H[p=2]".into(),
        formula: "H_2^n = sqrt(3/7)",
        expected: (3.0f64 / 7.0).sqrt(),
        computed: hpn_exact(2.0),
    });
    out
}

fn golden() -> Vec<Check> {
    golden_table()
        .into_iter()
        .map(|e| {
            let id = format!("golden/{}", e.id);
            match e.computed {
                Ok(v) => Check::close(id, e.expected, v, GOLDEN_TOL),
                Err(err) => Check::error(id, &err),
            }
        })
        .collect()
}

fn oracle_equiv() -> Vec<Check> {
    let ps = [1.0, 1.25, 1.5, 1.75, 2.0];
    let qs = [1.0, 1.25, 1.5, 1.75, 2.0];
    let as_ = [0.1, 0.4, 0.7, 0.95];
    let mut grid = Vec::new();
    for p in ps {
        for q in qs {
            grid.extend(as_.iter().map(|&a| (p, q, a)));
        }
    }
    grid.par_iter()
        .flat_map(|&(p, q, a)| {
            let id = format!("oracle_equiv/mobius[a={a}]/p={p},q={q}");
            guarded(&id.clone(), || {
                let params = bp(p, q);
                let r = radius_of(&FunctionFamily::Mobius(a), Functional::Rpq(params))?;
                Ok(vec![Check::close(id, eval_a(params, a)?, r, 1e-7)])
            })
        })
        .collect()
}

fn extremal() -> Vec<Check> {
    let grid = linspace(1.0, 4.0, 7);
    let pairs: Vec<(f64, f64)> = grid
        .iter()
        .flat_map(|&p| grid.iter().map(move |&q| (p, q)))
        .collect();
    let mut checks: Vec<Check> = pairs
        .par_iter()
        .flat_map(|&(p, q)| {
            let id = format!("extremal/zmobius/p={p},q={q}");
            guarded(&id.clone(), || {
                let r = radius_of(
                    &FunctionFamily::ZMobius(FRAC_1_SQRT_2),
                    Functional::Rpq(bp(p, q)),
                )?;
                Ok(vec![Check::close(id, FRAC_1_SQRT_2, r, 1e-8)])
            })
        })
        .collect();
    for p in [2.0, 3.0, 4.0] {
        let id = format!("extremal/halfplane/H[p={p}]");
        checks.extend(guarded(&id.clone(), || {
            let r = radius_of(&FunctionFamily::HalfPlane, Functional::Hp(p))?;
            Ok(vec![Check::close(id, hpn_exact(p)?, r, 1e-8)])
        }));
    }
    checks
}

fn identities() -> Vec<Check> {
    let grid = linspace(1.0, 4.5, 8);
    let mut checks = Vec::new();
    for &p in &grid {
        for &q in &grid {
            let params = bp(p, q);
            let root = hat_root(params);
            let tag = format!("p={p},q={q}");
            checks.push(Check::at_most(
                format!("identities/root_residual/{tag}"),
                1e-12,
                root.residual,
                0.0,
            ));
            checks.extend(guarded(&format!("identities/collapse/{tag}"), || {
                Ok(vec![
                    Check::close(
                        format!("identities/collapse_A/{tag}"),
                        root.a_hat,
                        eval_a(params, root.a_hat)?,
                        1e-10,
                    ),
                    Check::close(
                        format!("identities/collapse_S/{tag}"),
                        root.a_hat,
                        eval_s(params, root.a_hat)?,
                        1e-10,
                    ),
                ])
            }));
        }
    }

    // bound-chain closed forms against an exp/ln evaluation
    for &p in &[1.1, 1.3, 1.5, 1.7, 1.9] {
        for &x in &[0.05f64, 1.0 / 3.0, 0.8] {
            checks.extend(guarded(&format!("identities/pbohr/p={p},r1={x}"), || {
                let want = ((2.0 - p) / p * x.ln()).exp();
                Ok(vec![Check::close(
                    format!("identities/pbohr/p={p},r1={x}"),
                    want,
                    pbohr_scalar_lower(p, x)?,
                    1e-12,
                )])
            }));
            let h2 = (3.0f64 / 7.0).sqrt();
            checks.extend(guarded(
                &format!("identities/hcombine/p={p},h1={x}"),
                || {
                    let want = ((2.0 - p) / p * x.ln() + (2.0 * p - 2.0) / p * h2.ln()).exp();
                    Ok(vec![Check::close(
                        format!("identities/hcombine/p={p},h1={x}"),
                        want,
                        hpn_lower_combine(p, x, h2)?,
                        1e-12,
                    )])
                },
            ));
        }
    }
    for &r in &[0.1, 1.0 / 3.0, FRAC_1_SQRT_2, 1.0] {
        checks.extend(guarded(&format!("identities/lower_bounds/R={r}"), || {
            Ok(vec![
                Check::close(
                    format!("identities/frechet/R={r}"),
                    r / (2.0 * std::f64::consts::E),
                    frechet_lower(r)?,
                    1e-15,
                ),
                Check::close(
                    format!("identities/polydisk_lower/R={r},n=3"),
                    r * (1.0 - 0.5f64.powf(1.0 / 3.0)),
                    polydisk_lower(r, 3)?,
                    1e-15,
                ),
            ])
        }));
    }
    checks
}

/// Partial sums of sampled Schur functions never exceed Bombieri's bound.
fn bombieri(seed: u64, samples: usize) -> Vec<Check> {
    let families = match sample_schur_batch(seed, samples, SCHUR_MAX_DEGREE) {
        Ok(f) => f,
        Err(e) => return vec![Check::error("bombieri/sampling", &e)],
    };
    let rs: Vec<f64> = (1..=16).map(|j| j as f64 / 17.0).collect();
    families
        .par_iter()
        .enumerate()
        .flat_map(|(i, family)| {
            rs.iter()
                .flat_map(|&r| {
                    let id = format!("bombieri/seed={seed}/sample={i:04}/r={r:.6}");
                    guarded(&id.clone(), || {
                        let series = family.series_at(r)?;
                        let q = p_bohr_quantity(&series, 1.0, r)?;
                        let partial = q.value - q.tail_error - series.head();
                        Ok(vec![Check::at_most(
                            id,
                            bombieri_bound(series.head().min(1.0), r)?,
                            partial,
                            SCHUR_TOL,
                        )])
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// The `(p, q)` grid of the random Schur suite; interval cases are skipped.
pub fn schur_grid() -> Vec<(f64, f64)> {
    let axis = [1.0, 2.0, 3.0];
    axis.iter()
        .flat_map(|&p| axis.iter().map(move |&q| (p, q)))
        .collect()
}

fn schur_random(seed: u64, samples: usize) -> Vec<Check> {
    let families = match sample_schur_batch(seed, samples, SCHUR_MAX_DEGREE) {
        Ok(f) => f,
        Err(e) => return vec![Check::error("schur_random/sampling", &e)],
    };
    let radii: Vec<(BohrParams, f64)> = schur_grid()
        .into_iter()
        .filter_map(|(p, q)| {
            let params = bp(p, q);
            radius_scalar(params).exact_value().map(|r| (params, r))
        })
        .collect();
    families
        .par_iter()
        .enumerate()
        .flat_map(|(i, family)| {
            let prefix = format!("schur_random/seed={seed}/sample={i:04}");
            let mut checks = Vec::new();
            for &(params, radius) in &radii {
                let id = format!("{prefix}/bohr/p={},q={}", params.p(), params.q());
                checks.extend(guarded(&id.clone(), || {
                    let q = bohr_quantity(&family.series_at(radius)?, params, radius)?;
                    Ok(vec![Check::at_most(id, 1.0, q.value, SCHUR_TOL)])
                }));
            }
            checks.extend(guarded(&format!("{prefix}/coefficients"), || {
                let s = family.series_at(0.99)?;
                let max = s.moduli().iter().copied().fold(0.0, f64::max);
                Ok(vec![
                    Check::at_most(format!("{prefix}/coefficients"), 1.0, max, SCHUR_TOL),
                    Check::at_most(
                        format!("{prefix}/parseval"),
                        1.0,
                        p_bohr_quantity(&s, 2.0, 0.99)?.value,
                        SCHUR_TOL,
                    ),
                ])
            }));
            checks.extend(guarded(&format!("{prefix}/tail"), || {
                let r = 0.9;
                let params = bp(1.0, 1.0);
                let k = family.terms_for(r)?;
                let short = bohr_quantity(&family.coefficients(k)?, params, r)?;
                let long = bohr_quantity(&family.coefficients(2 * k)?, params, r)?;
                Ok(vec![Check::at_most(
                    format!("{prefix}/tail"),
                    short.tail_error,
                    (long.value - short.value).abs(),
                    1e-12,
                )])
            }));
            checks
        })
        .collect()
}

fn hilbert() -> Vec<Check> {
    let pairs = [
        (1.0, 2.0),
        (1.5, 2.5),
        (2.0, 2.0),
        (1.0, 3.0),
        (3.0, 4.0),
        (1.2, 6.0),
    ];
    let mut checks = Vec::new();
    for &(p, q) in &pairs {
        let params = bp(p, q);
        let tag = format!("p={p},q={q}");
        checks.extend(guarded(&format!("hilbert/{tag}"), || {
            let mut out = Vec::new();
            let values: Vec<f64> = (1..=64)
                .map(|n| hilbert_radius(params, n).map(|h| h.value))
                .collect::<Result<_>>()?;
            out.push(Check::close(
                format!("hilbert/n1_vs_inf_s/{tag}"),
                inf_s(params).value,
                values[0],
                1e-8,
            ));
            for n in 1..64 {
                out.push(Check::strictly_below(
                    format!("hilbert/decreasing/{tag}/n={:02}", n + 1),
                    values[n - 1],
                    values[n],
                ));
            }
            for (n, v) in (1..=64).zip(&values) {
                let cap = (1.0 - 0.5f64.powf(1.0 / n as f64)).sqrt();
                out.push(Check::at_most(
                    format!("hilbert/upper/{tag}/n={n:02}"),
                    cap,
                    *v,
                    1e-10,
                ));
            }
            for n in [1usize, 2, 4, 16, 64] {
                let e = hilbert_extremal(params, n)?;
                out.push(Check::close(
                    format!("hilbert/extremal_boundary/{tag}/n={n:02}"),
                    1.0,
                    e.boundary_identity(),
                    1e-10,
                ));
                out.push(Check::close(
                    format!("hilbert/extremal_bohr/{tag}/n={n:02}"),
                    1.0,
                    e.bohr_identity(params),
                    1e-10,
                ));
                let chi = FunctionFamily::HilbertChi(e);
                let sums = chi.homogeneous_sums(chi.terms_for(e.r3)?)?;
                out.push(Check::close(
                    format!("hilbert/extremal_series/{tag}/n={n:02}"),
                    1.0,
                    polydisk_bohr_quantity(&sums, params, e.r3)?.value,
                    1e-10,
                ));
            }
            let (h512, h1024) = (
                hilbert_radius(params, 512)?.value,
                hilbert_radius(params, 1024)?.value,
            );
            let ratio = (1024f64.sqrt() * h1024) / (512f64.sqrt() * h512);
            out.push(Check::close(
                format!("hilbert/stabilization/{tag}"),
                1.0,
                ratio,
                0.01,
            ));
            Ok(out)
        }));
    }
    checks
}

fn monotone() -> Vec<Check> {
    let axis = linspace(1.0, 4.0, 13);
    let results: Vec<Vec<_>> = axis
        .par_iter()
        .map(|&p| axis.iter().map(|&q| radius_scalar(bp(p, q))).collect())
        .collect();
    let mut checks = Vec::new();
    for (i, row) in results.iter().enumerate() {
        for (j, r) in row.iter().enumerate() {
            let tag = format!("p={},q={}", axis[i], axis[j]);
            match r.value {
                RadiusValue::Exact(v) => {
                    checks.push(Check::at_most(
                        format!("monotone/exact_cap/{tag}"),
                        FRAC_1_SQRT_2,
                        v,
                        1e-10,
                    ));
                    if let Some(next) = results.get(i + 1).and_then(|r| r[j].exact_value()) {
                        checks.push(Check::at_least(
                            format!("monotone/in_p/{tag}"),
                            v,
                            next,
                            1e-10,
                        ));
                    }
                    if let Some(next) = row.get(j + 1).and_then(|r| r.exact_value()) {
                        checks.push(Check::at_least(
                            format!("monotone/in_q/{tag}"),
                            v,
                            next,
                            1e-10,
                        ));
                    }
                }
                RadiusValue::Interval { lo, hi } => {
                    checks.push(Check::at_least(
                        format!("monotone/interval_lo/{tag}"),
                        0.0,
                        lo,
                        0.0,
                    ));
                    checks.push(Check::at_most(
                        format!("monotone/interval_order/{tag}"),
                        hi,
                        lo,
                        0.0,
                    ));
                    checks.push(Check::close(
                        format!("monotone/interval_hi/{tag}"),
                        FRAC_1_SQRT_2,
                        hi,
                        1e-12,
                    ));
                }
            }
        }
    }

    let ps = linspace(2.0, 40.0, 77);
    for w in ps.windows(2) {
        checks.extend(guarded(&format!("monotone/hpn/p={}", w[1]), || {
            let (a, b) = (hpn_exact(w[0])?, hpn_exact(w[1])?);
            Ok(vec![
                Check::strictly_below(format!("monotone/hpn_increasing/p={:05.1}", w[1]), b, a),
                Check::at_most(format!("monotone/hpn_cap/p={:05.1}", w[1]), 1.0, b, 0.0),
            ])
        }));
    }
    for p in [2.0, 3.0, 5.0] {
        let ips = [0.1, 0.5, 1.0, 2.0, 4.0, 16.0];
        for w in ips.windows(2) {
            checks.extend(guarded(&format!("monotone/pbohr_vector/p={p}"), || {
                let a = pbohr_vector_lower(PlConvexityConstant::new(p, w[0])?);
                let b = pbohr_vector_lower(PlConvexityConstant::new(p, w[1])?);
                Ok(vec![Check::strictly_below(
                    format!("monotone/pbohr_vector/p={p},ip={}", w[1]),
                    b,
                    a,
                )])
            }));
        }
    }
    for p in [1.1, 1.5, 1.9] {
        for (h1, h2) in [(0.2, 0.65), (0.9, 0.3), (0.5, 0.5)] {
            let id = format!("monotone/hcombine_between/p={p},h1={h1},h2={h2}");
            checks.extend(guarded(&id.clone(), || {
                let v = hpn_lower_combine(p, h1, h2)?;
                Ok(vec![
                    Check::at_least(format!("{id}/lo"), f64::min(h1, h2), v, 1e-15),
                    Check::at_most(format!("{id}/hi"), f64::max(h1, h2), v, 1e-15),
                ])
            }));
        }
    }

    // functional monotonicity in r on a 16-point grid
    let families = [
        (FunctionFamily::Mobius(0.6), Functional::Rpq(bp(1.5, 2.5))),
        (FunctionFamily::ZMobius(0.3), Functional::Rp(1.5)),
        (FunctionFamily::HalfPlane, Functional::Hp(3.0)),
    ];
    for (family, functional) in &families {
        let rs = linspace(0.0, 0.9, 16);
        let id = format!("monotone/in_r/{}", family.name());
        checks.extend(guarded(&id.clone(), || {
            let values: Vec<f64> = rs
                .iter()
                .map(|&r| Ok(functional.evaluate(&family.series_at(r)?, r)?.value))
                .collect::<Result<_>>()?;
            Ok(values
                .windows(2)
                .enumerate()
                .map(|(k, w)| Check::at_least(format!("{id}/step={k:02}"), w[0], w[1], 1e-12))
                .collect())
        }));
    }
    checks
}

fn dispatch_boundary() -> Vec<Check> {
    let mut checks = Vec::new();
    for p in [2.0, 3.0, 4.0] {
        let params = bp(p, 2.0);
        let applicable: Vec<CaseTag> = CaseTag::ALL
            .into_iter()
            .filter(|c| c.applies_to(params))
            .collect();
        checks.push(Check::at_least(
            format!("dispatch_boundary/p={p}/branches"),
            2.0,
            applicable.len() as f64,
            0.0,
        ));
        for case in applicable {
            let id = format!("dispatch_boundary/p={p}/{case}");
            checks.extend(guarded(&id.clone(), || {
                let r = radius_scalar_via(params, case)?;
                let v = r.exact_value().unwrap_or(f64::NAN);
                Ok(vec![Check::close(id, FRAC_1_SQRT_2, v, 1e-9)])
            }));
        }
        if p > 2.0 {
            checks.push(Check::at_least(
                format!("dispatch_boundary/p={p}/inf_a"),
                FRAC_1_SQRT_2,
                inf_a(params).value,
                1e-9,
            ));
        }
        checks.push(Check::close(
            format!("dispatch_boundary/p={p}/dispatched"),
            FRAC_1_SQRT_2,
            radius_scalar(params).exact_value().unwrap_or(f64::NAN),
            1e-9,
        ));
    }
    checks
}

fn caratheodory(seed: u64, samples: usize) -> Vec<Check> {
    let ps = [2.0, 3.0, 4.0];
    let radii: Vec<(f64, f64)> = ps
        .iter()
        .map(|&p| (p, hpn_exact(p).expect("p >= 2")))
        .collect();
    let r_max = radii.iter().map(|r| r.1).fold(0.0, f64::max);
    let order = match FunctionFamily::HalfPlane.terms_for(r_max) {
        Ok(k) => k,
        Err(e) => return vec![Check::error("caratheodory/order", &e)],
    };
    (0..samples)
        .into_par_iter()
        .flat_map(|i| {
            let prefix = format!("caratheodory/seed={seed}/sample={i:04}");
            guarded(&prefix.clone(), || {
                let s = sample_caratheodory(split_seed(seed, i as u64), SCHUR_MAX_DEGREE, order)?;
                let max = s.moduli().iter().copied().fold(0.0, f64::max);
                let mut out = vec![Check::at_most(
                    format!("{prefix}/coefficients"),
                    2.0,
                    max,
                    1e-9,
                )];
                for &(p, r) in &radii {
                    out.push(Check::at_most(
                        format!("{prefix}/h/p={p}"),
                        1.0,
                        h_quantity(&s, p, r)?.value,
                        1e-9,
                    ));
                }
                Ok(out)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::MEMBERS.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn errors_become_failures() {
        let checks = guarded("x", || Err(BohrError::Precondition("boom".into())));
        let r = report("t", checks, 0.0);
        assert_eq!(r.cases, 1);
        assert!(!r.passed());
        assert!(r.failures[0].id.contains("boom"));
        let json = r.to_json();
        assert!(json.contains("\"got\":null"));
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert!(back.failures[0].got.is_nan());
    }

    #[test]
    fn fast_suites_pass() {
        for s in [Suite::Golden, Suite::DispatchBoundary, Suite::Identities] {
            let r = run_suite(s, 0, 1).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn randomized_suites_need_samples() {
        assert!(run_suite(Suite::SchurRandom, 1, 0).is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_suite(Suite::SchurRandom, 3, 10).unwrap();
        let b = run_suite(Suite::SchurRandom, 3, 10).unwrap();
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.failures, b.failures);
    }
}
