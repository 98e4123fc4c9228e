//! Sweeps that check the factorization identities and the formulas behind
//! them over a grid of region specs, one record per instance.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::closed_forms::verify_box_factorization;
use crate::error::{Error, Result};
use crate::linalg::{
    determinant, pfaffian_by_matchings, pfaffian_elimination, sign_binom2, ExactMatrix, Label,
};
use crate::paths::{
    build_matrix_m, build_matrix_n, count_f_via_pfaffian, count_hminus_via_det, diagonal_gf_dp,
    l_region_matrix, okada_stembridge_q_for, reflectable_gf,
};
use crate::reduction::{
    as_plus_indexed, extract_b, subtraction_transform, verify_reduction, StructuredSkew,
};
use crate::region::{build_region, left_half_free, lower_half_weighted, upper_half, RegionSpec};
use crate::tiler::{
    count_free, count_hsym, count_plain, count_vsym, count_weighted2, merged_hole_region,
    split_by_axis,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    Theorem21,
    Eq26,
    Eq25,
    Eq22,
    Eq23,
    Lemma41,
    Prop32,
    Prop34,
    Theorem51,
    Eq11,
    Eq52,
    Contiguity,
}

impl Target {
    pub const ALL: [Target; 12] = [
        Target::Theorem21,
        Target::Eq26,
        Target::Eq25,
        Target::Eq22,
        Target::Eq23,
        Target::Lemma41,
        Target::Prop32,
        Target::Prop34,
        Target::Theorem51,
        Target::Eq11,
        Target::Eq52,
        Target::Contiguity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Theorem21 => "theorem21",
            Target::Eq26 => "eq26",
            Target::Eq25 => "eq25",
            Target::Eq22 => "eq22",
            Target::Eq23 => "eq23",
            Target::Lemma41 => "lemma41",
            Target::Prop32 => "prop32",
            Target::Prop34 => "prop34",
            Target::Theorem51 => "theorem51",
            Target::Eq11 => "eq11",
            Target::Eq52 => "eq52",
            Target::Contiguity => "contiguity",
        }
    }

    /// Grid used when none is given.
    pub fn default_grid(self) -> Grid {
        match self {
            Target::Theorem51 => Grid {
                n: vec![2, 4],
                m: vec![1, 2],
                l: vec![0, 1],
                x: vec![1, 2, 3],
            },
            Target::Eq52 => Grid {
                n: vec![2, 4],
                m: vec![1, 2],
                l: vec![0],
                x: vec![1, 2],
            },
            Target::Eq11 => Grid {
                n: vec![1, 2, 3],
                m: vec![1, 2, 3],
                l: vec![0],
                x: vec![0],
            },
            _ => Grid::default(),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown target `{s}`")))
    }
}

/// Allowed values of each spec parameter. `l` is the number of holes;
/// every hole list of that length is included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub n: Vec<u32>,
    pub m: Vec<u32>,
    pub l: Vec<u32>,
    pub x: Vec<u32>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n: (2..=6).collect(),
            m: vec![1, 2],
            l: vec![0, 1, 2],
            x: vec![0],
        }
    }
}

impl Grid {
    /// Applies constraints such as `n<=4`, `m=2`, `l<=1`, `x in {1,3}`,
    /// `n in 2 4` or `x in 1..3` on top of `base`. `a` and `b` are accepted
    /// for `m` and `n`.
    pub fn parse(base: Grid, text: &str) -> Result<Grid> {
        let cleaned: String = text
            .chars()
            .map(|c| if matches!(c, '{' | '}' | ',') { ' ' } else { c })
            .collect();
        let mut tokens: Vec<String> = Vec::new();
        for word in cleaned.split_whitespace() {
            split_operator(word, &mut tokens);
        }
        let mut grid = base;
        let mut i = 0;
        let bad = |msg: String| Error::Invalid(format!("grid: {msg}"));
        while i < tokens.len() {
            let key = tokens[i].as_str();
            let op = tokens
                .get(i + 1)
                .ok_or_else(|| bad(format!("`{key}` needs a constraint")))?
                .clone();
            i += 2;
            let mut values: Vec<u32> = Vec::new();
            if op == "in" {
                while i < tokens.len() {
                    let tok = &tokens[i];
                    if let Some((lo, hi)) = tok.split_once("..") {
                        let lo: u32 = lo.parse().map_err(|_| bad(format!("bad range `{tok}`")))?;
                        let hi: u32 = hi
                            .trim_start_matches('=')
                            .parse()
                            .map_err(|_| bad(format!("bad range `{tok}`")))?;
                        values.extend(lo..=hi);
                    } else if let Ok(v) = tok.parse() {
                        values.push(v);
                    } else {
                        break;
                    }
                    i += 1;
                }
                if values.is_empty() {
                    return Err(bad(format!("`{key} in` needs values")));
                }
            } else {
                let v: u32 = tokens
                    .get(i)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(format!("`{key} {op}` needs a number")))?;
                i += 1;
                let current = match key {
                    "n" | "b" => &grid.n,
                    "m" | "a" => &grid.m,
                    "l" => &grid.l,
                    "x" => &grid.x,
                    _ => return Err(bad(format!("unknown parameter `{key}`"))),
                };
                let floor = if key == "l" || key == "x" { 0 } else { 1 };
                let top = current.iter().copied().max().unwrap_or(v);
                values = match op.as_str() {
                    "<=" => (floor..=v).collect(),
                    "<" => (floor..v).collect(),
                    ">=" => (v..=top.max(v)).collect(),
                    ">" => (v + 1..=top.max(v + 1)).collect(),
                    "=" | "==" => vec![v],
                    _ => return Err(bad(format!("unknown operator `{op}`"))),
                };
                if values.is_empty() {
                    return Err(bad(format!("`{key} {op} {v}` is empty")));
                }
            }
            match key {
                "n" | "b" => grid.n = values,
                "m" | "a" => grid.m = values,
                "l" => grid.l = values,
                "x" => grid.x = values,
                _ => return Err(bad(format!("unknown parameter `{key}`"))),
            }
        }
        Ok(grid)
    }

    /// Valid specs in lexicographic order of `(n, m, l, k, x)`; odd `n`
    /// is skipped when `x > 0`.
    pub fn specs(&self) -> Vec<RegionSpec> {
        let mut out = Vec::new();
        for &n in &self.n {
            for &m in &self.m {
                for &l in &self.l {
                    for k in RegionSpec::hole_lists(n, l as usize) {
                        for &x in &self.x {
                            if let Ok(spec) = RegionSpec::new(n, m, &k, x) {
                                out.push(spec);
                            }
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            (a.n, a.m, a.l(), &a.holes, a.central_x).cmp(&(b.n, b.m, b.l(), &b.holes, b.central_x))
        });
        out.dedup();
        out
    }
}

fn split_operator(word: &str, out: &mut Vec<String>) {
    for op in ["<=", ">=", "==", "<", ">", "="] {
        if let Some(at) = word.find(op) {
            let (head, tail) = (&word[..at], &word[at + op.len()..]);
            if !head.is_empty() {
                out.push(head.to_string());
            }
            out.push(op.to_string());
            if !tail.is_empty() {
                out.push(tail.to_string());
            }
            return;
        }
    }
    out.push(word.to_string());
}

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub spec: String,
    pub lhs: String,
    pub rhs: String,
    pub method_lhs: String,
    pub method_rhs: String,
    pub pass: bool,
}

impl InstanceRecord {
    fn new(
        spec: impl ToString,
        lhs: &BigInt,
        rhs: &BigInt,
        methods: (&str, &str),
        extra_ok: bool,
    ) -> Self {
        InstanceRecord {
            spec: spec.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            method_lhs: methods.0.to_string(),
            method_rhs: methods.1.to_string(),
            pass: extra_ok && lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub grid: Option<Grid>,
    pub trials: usize,
    pub seed: u64,
    pub caps: Caps,
    pub parallel: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            grid: None,
            trials: 200,
            seed: 7,
            caps: Caps::default(),
            parallel: true,
        }
    }
}

fn map_specs<F>(specs: Vec<RegionSpec>, parallel: bool, f: F) -> Result<Vec<InstanceRecord>>
where
    F: Fn(&RegionSpec) -> Result<InstanceRecord> + Sync + Send,
{
    if parallel {
        specs.par_iter().map(&f).collect()
    } else {
        specs.iter().map(&f).collect()
    }
}

/// Runs `target` over its grid (or the configured one) and returns the
/// records in grid order.
pub fn run(target: Target, config: &VerifyConfig) -> Result<Vec<InstanceRecord>> {
    let grid = config.grid.clone().unwrap_or_else(|| target.default_grid());
    let caps = config.caps;
    let specs = grid.specs();
    let holey: Vec<RegionSpec> = specs.iter().filter(|s| s.central_x == 0).cloned().collect();
    match target {
        Target::Theorem21 | Target::Theorem51 => {
            let chosen = if target == Target::Theorem21 {
                holey
            } else {
                specs
            };
            map_specs(chosen, config.parallel, |s| {
                let h = build_region(s)?;
                let lhs = count_plain(&h, &caps)?;
                let rhs = count_hsym(&h, &caps)? * count_vsym(&h, &caps)?;
                Ok(InstanceRecord::new(
                    s,
                    &lhs,
                    &rhs,
                    ("profile-dp", "row-transfer"),
                    true,
                ))
            })
        }
        Target::Eq22 => map_specs(specs, config.parallel, |s| {
            let h = build_region(s)?;
            let lhs = count_hsym(&h, &caps)?;
            let rhs = count_plain(&upper_half(&h)?, &caps)?;
            Ok(InstanceRecord::new(
                s,
                &lhs,
                &rhs,
                ("row-transfer", "profile-dp"),
                true,
            ))
        }),
        Target::Eq23 => map_specs(specs, config.parallel, |s| {
            let h = build_region(s)?;
            let lhs = count_vsym(&h, &caps)?;
            let rhs = count_free(&left_half_free(&h)?, &caps)?;
            Ok(InstanceRecord::new(
                s,
                &lhs,
                &rhs,
                ("row-transfer", "profile-dp"),
                true,
            ))
        }),
        Target::Eq25 => map_specs(specs, config.parallel, |s| {
            let h = build_region(s)?;
            let lhs = count_plain(&h, &caps)?;
            let rhs = count_plain(&upper_half(&h)?, &caps)?
                * count_weighted2(&lower_half_weighted(&h)?, &caps)?;
            Ok(InstanceRecord::new(
                s,
                &lhs,
                &rhs,
                ("profile-dp", "profile-dp"),
                true,
            ))
        }),
        Target::Eq26 => map_specs(holey, config.parallel, |s| {
            let h = build_region(s)?;
            let lhs = count_f_via_pfaffian(s)?;
            let rhs = count_hminus_via_det(s)?;
            let tiler_ok = lhs == count_free(&left_half_free(&h)?, &caps)?
                && rhs == count_weighted2(&lower_half_weighted(&h)?, &caps)?;
            Ok(InstanceRecord::new(
                s,
                &lhs,
                &rhs,
                ("pfaffian", "determinant"),
                tiler_ok,
            ))
        }),
        Target::Prop32 => map_specs(holey, config.parallel, |s| {
            let lhs = count_f_via_pfaffian(s)?;
            let rhs = count_free(&left_half_free(&build_region(s)?)?, &caps)?;
            let q_ok = okada_stembridge_q_for(s, 0)? == build_matrix_m(s)?;
            Ok(InstanceRecord::new(
                s,
                &lhs,
                &rhs,
                ("pfaffian", "profile-dp"),
                q_ok,
            ))
        }),
        Target::Prop34 => map_specs(holey, config.parallel, |s| {
            let lhs = count_hminus_via_det(s)?;
            let rhs = count_weighted2(&lower_half_weighted(&build_region(s)?)?, &caps)?;
            Ok(InstanceRecord::new(
                s,
                &lhs,
                &rhs,
                ("determinant", "profile-dp"),
                true,
            ))
        }),
        Target::Lemma41 => reduction_records(&holey, config),
        Target::Eq11 => {
            let pairs: Vec<(u32, u32)> = grid
                .m
                .iter()
                .flat_map(|&a| grid.n.iter().map(move |&b| (a, b)))
                .collect();
            let f = |&(a, b): &(u32, u32)| -> Result<InstanceRecord> {
                let r = verify_box_factorization(a, b, true, &caps)?;
                Ok(InstanceRecord::new(
                    format!("a={a} b={b}"),
                    &r.n1,
                    &(&r.n6 * &r.n2),
                    ("product-formula", "product-formula"),
                    r.pass,
                ))
            };
            if config.parallel {
                pairs.par_iter().map(f).collect()
            } else {
                pairs.iter().map(f).collect()
            }
        }
        Target::Eq52 => {
            let chosen: Vec<RegionSpec> = specs.into_iter().filter(|s| s.n % 2 == 0).collect();
            map_specs(chosen, config.parallel, |s| axis_split_record(s, &caps))
        }
        Target::Contiguity => {
            let chosen: Vec<RegionSpec> = specs
                .into_iter()
                .filter(|s| s.holes.windows(2).any(|w| w[1] == w[0] + 1))
                .collect();
            map_specs(chosen, config.parallel, |s| {
                let t = s
                    .holes
                    .windows(2)
                    .position(|w| w[1] == w[0] + 1)
                    .expect("filtered");
                let lhs = count_plain(&build_region(s)?, &caps)?;
                let rhs = count_plain(&merged_hole_region(s, t)?, &caps)?;
                Ok(InstanceRecord::new(
                    format!("{s} merge={t}"),
                    &lhs,
                    &rhs,
                    ("profile-dp", "profile-dp"),
                    true,
                ))
            })
        }
    }
}

fn reduction_records(holey: &[RegionSpec], config: &VerifyConfig) -> Result<Vec<InstanceRecord>> {
    let mut rng = StdRng::seed_from_u64(config.seed);
    let mut samples = Vec::with_capacity(config.trials);
    for trial in 0..config.trials {
        let m = 1 + trial % 4;
        let l = (trial / 4) % 3;
        samples.push((trial, m, l, StructuredSkew::random(m, l, 9, &mut rng)));
    }
    let random =
        |(trial, m, l, s): &(usize, usize, usize, StructuredSkew)| -> Result<InstanceRecord> {
            let cert = verify_reduction(&s.to_matrix(), *m, *l)?;
            let rhs = &cert.det_b * cert.sign;
            Ok(InstanceRecord::new(
                format!("random m={m} l={l} trial={trial} seed={}", config.seed),
                &cert.pf_a,
                &rhs,
                ("pfaffian", "determinant"),
                cert.pass,
            ))
        };
    let mut out: Vec<InstanceRecord> = if config.parallel {
        samples.par_iter().map(random).collect::<Result<_>>()?
    } else {
        samples.iter().map(random).collect::<Result<_>>()?
    };
    out.extend(map_specs(holey.to_vec(), config.parallel, |s| {
        let a = build_matrix_m(s)?;
        let (m, l) = (s.m as usize, s.l());
        let cert = verify_reduction(&a, m, l)?;
        let reduced = as_plus_indexed(&subtraction_transform(&extract_b(&a, m, l)?));
        let n_ok = reduced == build_matrix_n(s)?;
        let rhs = &cert.det_b * cert.sign;
        Ok(InstanceRecord::new(
            s,
            &cert.pf_a,
            &rhs,
            ("pfaffian", "determinant"),
            cert.pass && n_ok,
        ))
    })?);
    Ok(out)
}

/// `M = sum_S M(L(S))^2` with `M_| = sum_S M(L(S))`, and each `M(L(S))`
/// matched by its path determinant when there are no side-two holes.
fn axis_split_record(s: &RegionSpec, caps: &Caps) -> Result<InstanceRecord> {
    let h = build_region(s)?;
    let split = split_by_axis(s, caps)?;
    let lhs = count_plain(&h, caps)?;
    let rhs = split.sum_of_squares();
    let mut ok = split.sum() == count_vsym(&h, caps)?;
    if s.l() == 0 {
        for entry in &split.entries {
            let js: Vec<i64> = split
                .slots
                .iter()
                .filter(|c| !entry.crossing.contains(c))
                .map(|&c| i64::from(c) + 1)
                .collect();
            ok &= determinant(&l_region_matrix(s, &js)?)? == entry.count;
        }
    }
    Ok(InstanceRecord::new(
        s,
        &lhs,
        &rhs,
        ("profile-dp", "axis-split"),
        ok,
    ))
}

/// Which count a polynomiality check samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    Plain,
    Hsym,
    Vsym,
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" | "plain" => Ok(Quantity::Plain),
            "hsym" => Ok(Quantity::Hsym),
            "vsym" => Ok(Quantity::Vsym),
            _ => Err(Error::Invalid(format!("unknown quantity `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub spec: String,
    pub quantity: Quantity,
    pub values: Vec<String>,
    /// Rows of forward differences, starting with the values themselves.
    pub differences: Vec<Vec<String>>,
    /// Smallest `d` whose `(d+1)`-st differences vanish, if any does.
    pub degree: Option<usize>,
    pub pass: bool,
}

/// Forward difference rows of `values`, the values first.
pub fn forward_differences(values: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut rows = vec![values.to_vec()];
    while rows.last().map_or(0, Vec::len) > 1 {
        let last = rows.last().expect("non-empty");
        rows.push(last.windows(2).map(|w| &w[1] - &w[0]).collect());
    }
    rows
}

/// Degree of the lowest-order difference row that vanishes identically,
/// requiring that row to hold at least two entries so the vanishing is
/// witnessed rather than implied by the window size.
pub fn empirical_degree(values: &[BigInt]) -> Option<usize> {
    let rows = forward_differences(values);
    rows.iter()
        .enumerate()
        .skip(1)
        .find(|(_, row)| row.len() >= 2 && row.iter().all(Zero::is_zero))
        .map(|(d, _)| d - 1)
}

/// Counts of `spec` with its rhombus side replaced by `0..=x_max`.
pub fn polycheck(
    spec: &RegionSpec,
    quantity: Quantity,
    x_max: u32,
    caps: &Caps,
) -> Result<PolyReport> {
    let mut values = Vec::new();
    for x in 0..=x_max {
        let s = RegionSpec::new(spec.n, spec.m, &spec.holes, x)?;
        let h = build_region(&s)?;
        values.push(match quantity {
            Quantity::Plain => count_plain(&h, caps)?,
            Quantity::Hsym => count_hsym(&h, caps)?,
            Quantity::Vsym => count_vsym(&h, caps)?,
        });
    }
    let degree = empirical_degree(&values);
    let differences = forward_differences(&values)
        .into_iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    Ok(PolyReport {
        spec: RegionSpec {
            central_x: 0,
            ..spec.clone()
        }
        .to_string(),
        quantity,
        values: values.iter().map(ToString::to_string).collect(),
        differences,
        degree,
        pass: degree.is_some(),
    })
}

/// Outcome of one self-test suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    pub millis: u128,
    pub pass: bool,
}

fn suite<F: FnOnce() -> Result<(usize, usize)>>(name: &str, f: F) -> SuiteResult {
    let start = Instant::now();
    let (instances, failures, pass) = match f() {
        Ok((n, bad)) => (n, bad, bad == 0),
        Err(_) => (0, 1, false),
    };
    SuiteResult {
        name: name.to_string(),
        instances,
        failures,
        millis: start.elapsed().as_millis(),
        pass,
    }
}

fn tally(records: Result<Vec<InstanceRecord>>) -> Result<(usize, usize)> {
    let records = records?;
    Ok((records.len(), records.iter().filter(|r| !r.pass).count()))
}

/// Every verification target at its default grid, plus the oracle
/// coherence checks (Pfaffian algorithms, `Pf^2 = det`) on seeded random
/// skew matrices.
pub fn selftest(seed: u64, caps: &Caps) -> Vec<SuiteResult> {
    let config = VerifyConfig {
        seed,
        caps: *caps,
        ..VerifyConfig::default()
    };
    let mut out: Vec<SuiteResult> = Target::ALL
        .iter()
        .map(|&t| suite(t.name(), || tally(run(t, &config))))
        .collect();
    out.push(suite("polycheck", || {
        let mut bad = 0;
        let mut n = 0;
        for (nn, m) in [(2, 1), (2, 2), (4, 1)] {
            for q in [Quantity::Plain, Quantity::Hsym, Quantity::Vsym] {
                let r = polycheck(&RegionSpec::holey(nn, m, &[])?, q, POLY_WINDOW, caps)?;
                n += 1;
                bad += usize::from(!r.pass);
            }
        }
        Ok((n, bad))
    }));
    out.push(suite("reflected-paths", || {
        let mut n = 0;
        let mut bad = 0;
        for (a, b, c, d) in endpoint_quads(6) {
            n += 1;
            bad += usize::from(reflectable_gf(a, b, c, d)? != diagonal_gf_dp(a, b, c, d));
        }
        Ok((n, bad))
    }));
    out.push(suite("pfaffian-oracles", || {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut bad = 0;
        let trials = 100;
        for t in 0..trials {
            let a = random_skew(2 * (1 + t % 4), 9, &mut rng);
            let by_matching = pfaffian_by_matchings(&a)?;
            let by_elimination = pfaffian_elimination(&a)?;
            let det = determinant(&a)?;
            if by_matching != by_elimination || &by_matching * &by_matching != det {
                bad += 1;
            }
        }
        Ok((trials, bad))
    }));
    out
}

/// Largest rhombus side sampled by the self-test: wide enough to witness
/// two vanishing differences for degree eight.
pub const POLY_WINDOW: u32 = 10;

/// Endpoint pairs `(a, b) -> (c, d)` with coordinates in `0..=bound`, both
/// strictly below the diagonal.
pub fn endpoint_quads(bound: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..a {
            for c in 0..=bound {
                for d in 0..c {
                    out.push((a, b, c, d));
                }
            }
        }
    }
    out
}

/// Random skew matrix of the given order with entries in `-bound..=bound`.
pub fn random_skew<R: rand::Rng>(order: usize, bound: i64, rng: &mut R) -> ExactMatrix {
    ExactMatrix::skew_from_upper(Label::int_range(1, order as i64), |_, _| {
        BigInt::from(rng.gen_range(-bound..=bound))
    })
}

/// `(-1)^C(l,2)` as an exact integer.
pub fn sign_of(l: usize) -> BigInt {
    if sign_binom2(l) == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
