//! Non-intersecting lattice paths on `Z^2` with unit right and up steps:
//! path counts, the free-endpoint Pfaffian matrix and the reflected-path
//! determinant matrix attached to a holey hexagon, and brute-force family
//! enumeration used to check them.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{
    binomial, determinant, pfaffian_elimination, sign_binom2, signed_range_sum, ExactMatrix, Label,
};
use crate::region::RegionSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

/// Where the paths of a family end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    /// Path `i` ends at point `i`.
    Points(Vec<Point>),
    /// Every path ends somewhere on the line `x + y = c`.
    Line(i64),
    /// Every path ends at some point of the set, listed in its order.
    Set(Vec<Point>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagonalRule {
    None,
    /// Paths stay on or below `x = y`; each step up onto the diagonal has weight 2.
    WeakBelowTouchTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathProblem {
    pub starts: Vec<Point>,
    pub target: Target,
    pub diagonal: DiagonalRule,
}

impl PathProblem {
    pub fn new(starts: Vec<Point>, target: Target, diagonal: DiagonalRule) -> Result<Self> {
        let distinct: HashSet<&Point> = starts.iter().collect();
        if distinct.len() != starts.len() {
            return Err(Error::Invalid("start points must be distinct".into()));
        }
        match &target {
            Target::Points(ends) | Target::Set(ends) => {
                let distinct: HashSet<&Point> = ends.iter().collect();
                if distinct.len() != ends.len() {
                    return Err(Error::Invalid("end points must be distinct".into()));
                }
                if matches!(target, Target::Points(_)) && ends.len() != starts.len() {
                    return Err(Error::Invalid(format!(
                        "{} starts but {} end points",
                        starts.len(),
                        ends.len()
                    )));
                }
            }
            Target::Line(_) => {}
        }
        Ok(PathProblem {
            starts,
            target,
            diagonal,
        })
    }
}

/// Number of monotone paths from `a` to `b`.
pub fn free_path_count(a: Point, b: Point) -> BigInt {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    if dx < 0 || dy < 0 {
        return BigInt::zero();
    }
    binomial((dx + dy) as u64, dx)
}

fn c(n: i64, k: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial(n as u64, k)
    }
}

/// Weighted count of paths from `(a, b)` to `(c, d)` that stay on or below
/// the diagonal, each touch of the diagonal weighing 2. Requires `a > b`
/// and `c > d`.
pub fn reflectable_gf(a: i64, b: i64, cx: i64, d: i64) -> Result<BigInt> {
    if a <= b || cx <= d {
        return Err(Error::Invalid(format!(
            "reflected paths need both ends strictly below the diagonal, got ({a},{b})->({cx},{d})"
        )));
    }
    let len = cx + d - a - b;
    Ok(c(len, cx - a) + c(len, d - a))
}

/// The same weighted count by dynamic programming over the lattice.
pub fn diagonal_gf_dp(a: i64, b: i64, cx: i64, d: i64) -> BigInt {
    if cx < a || d < b || a < b || cx < d {
        return BigInt::zero();
    }
    let w = (cx - a + 1) as usize;
    let h = (d - b + 1) as usize;
    let mut gf = vec![vec![BigInt::zero(); h]; w];
    gf[0][0] = BigInt::one();
    for i in 0..w {
        for j in 0..h {
            let (x, y) = (a + i as i64, b + j as i64);
            if (i, j) == (0, 0) || y > x {
                continue;
            }
            let mut v = BigInt::zero();
            if i > 0 {
                v += &gf[i - 1][j];
            }
            if j > 0 {
                let below = &gf[i][j - 1];
                v += if x == y { below * 2 } else { below.clone() };
            }
            gf[i][j] = v;
        }
    }
    gf[w - 1][h - 1].clone()
}

fn path_gf(a: Point, b: Point, rule: DiagonalRule) -> BigInt {
    match rule {
        DiagonalRule::None => free_path_count(a, b),
        DiagonalRule::WeakBelowTouchTwo => diagonal_gf_dp(a.x, a.y, b.x, b.y),
    }
}

fn k_of(spec: &RegionSpec, t: usize) -> i64 {
    i64::from(spec.holes[t - 1])
}

/// Index set `-m+1..m, 1-..l-, 1+..l+`.
pub fn labels_m(m: i64, l: usize) -> Vec<Label> {
    let mut labels = Label::int_range(-m + 1, m);
    labels.extend(Label::minus_range(l));
    labels.extend(Label::plus_range(l));
    labels
}

/// Index set `1..m, 1+..l+`.
pub fn labels_n(m: i64, l: usize) -> Vec<Label> {
    let mut labels = Label::int_range(1, m);
    labels.extend(Label::plus_range(l));
    labels
}

fn require_no_rhombus(spec: &RegionSpec) -> Result<()> {
    spec.validate()?;
    if spec.central_x != 0 {
        return Err(Error::InvalidSpec(format!(
            "{spec}: the path matrices need x = 0"
        )));
    }
    Ok(())
}

/// Entry `(i, j)` of the skew matrix for the free-endpoint count, for `i`
/// listed before `j` in the order `-m+1..m, 1-..l-, 1+..l+`.
fn m_entry(spec: &RegionSpec, i: Label, j: Label) -> BigInt {
    let n = i64::from(spec.n);
    match (i, j) {
        (Label::Int(i), Label::Int(j)) => signed_range_sum(|r| c(2 * n, n + r), i - j + 1, j - i),
        (Label::Int(i), Label::Minus(t)) => {
            let k = k_of(spec, t);
            signed_range_sum(|r| c(2 * n - 2 * k, n - k + r), i + 1, -i)
        }
        (Label::Int(i), Label::Plus(t)) => {
            let k = k_of(spec, t);
            signed_range_sum(|r| c(2 * n - 2 * k, n - k + r), i, -i + 1)
        }
        (Label::Minus(t), Label::Plus(u)) => {
            let s = k_of(spec, t) + k_of(spec, u);
            c(2 * n - 2 * s, n - s) + c(2 * n - 2 * s, n - s + 1)
        }
        _ => BigInt::zero(),
    }
}

/// Skew matrix of order `2m + 2l` whose signed Pfaffian counts the tilings
/// of the free-boundary half region.
pub fn build_matrix_m(spec: &RegionSpec) -> Result<ExactMatrix> {
    require_no_rhombus(spec)?;
    let labels = labels_m(i64::from(spec.m), spec.l());
    Ok(ExactMatrix::skew_from_upper(labels, |i, j| {
        m_entry(spec, i, j)
    }))
}

/// `(-1)^C(l,2) Pf(M)`.
pub fn count_f_via_pfaffian(spec: &RegionSpec) -> Result<BigInt> {
    let m = build_matrix_m(spec)?;
    Ok(pfaffian_elimination(&m)? * sign_binom2(spec.l()))
}

/// Matrix of order `m + l` whose determinant is the weighted count of the
/// lower half region.
pub fn build_matrix_n(spec: &RegionSpec) -> Result<ExactMatrix> {
    require_no_rhombus(spec)?;
    let n = i64::from(spec.n);
    let labels = labels_n(i64::from(spec.m), spec.l());
    Ok(ExactMatrix::from_fn(
        labels.clone(),
        labels,
        |i, j| match (i, j) {
            (Label::Int(i), Label::Int(j)) => c(2 * n, n + j - i) + c(2 * n, n - i - j + 1),
            (Label::Int(i), Label::Plus(t)) | (Label::Plus(t), Label::Int(i)) => {
                let k = k_of(spec, t);
                c(2 * n - 2 * k, n - k - i + 1) + c(2 * n - 2 * k, n - k - i)
            }
            (Label::Plus(t), Label::Plus(u)) => {
                let s = k_of(spec, t) + k_of(spec, u);
                c(2 * n - 2 * s, n - s) + c(2 * n - 2 * s, n - s - 1)
            }
            _ => unreachable!("labels are integers or plus-tagged"),
        },
    ))
}

pub fn count_hminus_via_det(spec: &RegionSpec) -> Result<BigInt> {
    determinant(&build_matrix_n(spec)?)
}

/// Starts `A_{-m+1}..A_m`, `B_{1-}..B_{l-}`, `B_{1+}..B_{l+}` and the end
/// line `x + y = n + 1` of the free-endpoint families.
pub fn free_family_problem(spec: &RegionSpec) -> Result<PathProblem> {
    require_no_rhombus(spec)?;
    let m = i64::from(spec.m);
    let mut starts: Vec<Point> = (-m + 1..=m).map(|s| Point::new(s, 1 - s)).collect();
    starts.extend(
        spec.holes
            .iter()
            .map(|&k| Point::new(i64::from(k), i64::from(k) + 1)),
    );
    starts.extend(
        spec.holes
            .iter()
            .map(|&k| Point::new(i64::from(k) + 1, i64::from(k))),
    );
    PathProblem::new(
        starts,
        Target::Line(i64::from(spec.n) + 1),
        DiagonalRule::None,
    )
}

/// Starts `A_1..A_m`, `B_{1+}..B_{l+}` with their fixed ends, paths kept
/// weakly below the diagonal.
pub fn reflected_family_problem(spec: &RegionSpec) -> Result<PathProblem> {
    require_no_rhombus(spec)?;
    let (n, m) = (i64::from(spec.n), i64::from(spec.m));
    let mut starts: Vec<Point> = (1..=m).map(|s| Point::new(s, 1 - s)).collect();
    let mut ends: Vec<Point> = (1..=m).map(|s| Point::new(n + s, n - s + 1)).collect();
    for &k in &spec.holes {
        let k = i64::from(k);
        starts.push(Point::new(k + 1, k));
        ends.push(Point::new(n - k + 1, n - k));
    }
    PathProblem::new(
        starts,
        Target::Points(ends),
        DiagonalRule::WeakBelowTouchTwo,
    )
}

/// Points `I_j = (j, c - j)` on the line `x + y = c` for `j = lo..=hi`.
pub fn line_points(c: i64, lo: i64, hi: i64) -> Vec<Point> {
    (lo..=hi).map(|j| Point::new(j, c - j)).collect()
}

/// Okada-Stembridge matrix: `Q_ij = sum_{u<v} P(s_i->I_u) P(s_j->I_v) - P(s_j->I_u) P(s_i->I_v)`.
pub fn okada_stembridge_q(starts: &[Point], ends: &[Point]) -> ExactMatrix {
    let counts: Vec<Vec<BigInt>> = starts
        .iter()
        .map(|&s| ends.iter().map(|&e| free_path_count(s, e)).collect())
        .collect();
    let labels = Label::int_range(1, starts.len() as i64);
    ExactMatrix::skew_from_upper(labels, |a, b| {
        let (Label::Int(a), Label::Int(b)) = (a, b) else {
            unreachable!()
        };
        let (pi, pj) = (&counts[a as usize - 1], &counts[b as usize - 1]);
        // sum_{u<v} pi[u] pj[v] - pj[u] pi[v], via suffix sums
        let mut total = BigInt::zero();
        let (mut tail_i, mut tail_j) = (BigInt::zero(), BigInt::zero());
        for u in (0..ends.len()).rev() {
            total += &pi[u] * &tail_j - &pj[u] * &tail_i;
            tail_i += &pi[u];
            tail_j += &pj[u];
        }
        total
    })
}

/// `Q` for a spec, with the end line truncated to `I_{-m+1-widen}..I_{n+m+widen}`
/// and rows labelled like [`build_matrix_m`].
pub fn okada_stembridge_q_for(spec: &RegionSpec, widen: i64) -> Result<ExactMatrix> {
    let problem = free_family_problem(spec)?;
    let (n, m) = (i64::from(spec.n), i64::from(spec.m));
    let ends = line_points(n + 1, -m + 1 - widen, n + m + widen);
    let q = okada_stembridge_q(&problem.starts, &ends);
    let labels = labels_m(m, spec.l());
    Ok(q.relabel(labels.clone(), labels))
}

/// LGV matrix with entry `(i, j)` the weighted count of paths from start `j`
/// to end `i`.
pub fn lgv_matrix(starts: &[Point], ends: &[Point], rule: DiagonalRule) -> Result<ExactMatrix> {
    if starts.len() != ends.len() {
        return Err(Error::NotSquare {
            rows: ends.len(),
            cols: starts.len(),
        });
    }
    let labels = Label::int_range(1, starts.len() as i64);
    Ok(ExactMatrix::from_fn(labels.clone(), labels, |i, j| {
        let (Label::Int(i), Label::Int(j)) = (i, j) else {
            unreachable!()
        };
        path_gf(starts[j as usize - 1], ends[i as usize - 1], rule)
    }))
}

/// Tally of a brute-force family enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCensus {
    /// Non-intersecting families.
    pub families: u64,
    /// Sum of `2^touches` over the families.
    #[serde(with = "crate::linalg::decimal")]
    pub weighted: BigInt,
    /// Sum of the sign of the permutation sorting starts by end position.
    #[serde(with = "crate::linalg::decimal")]
    pub signed: BigInt,
    /// Signs that occurred.
    pub signs: BTreeSet<i32>,
}

struct Search<'a> {
    problem: &'a PathProblem,
    ends: Vec<Point>,
    end_rank: HashMap<Point, usize>,
    used: HashSet<Point>,
    chosen: Vec<usize>,
    touches: u32,
    cap: u64,
    census: FamilyCensus,
}

impl Search<'_> {
    fn allowed(&self, p: Point) -> bool {
        match self.problem.diagonal {
            DiagonalRule::None => true,
            DiagonalRule::WeakBelowTouchTwo => p.x >= p.y,
        }
    }

    fn family(&mut self, idx: usize) -> Result<()> {
        if idx == self.problem.starts.len() {
            self.census.families += 1;
            if self.census.families > self.cap {
                return Err(Error::CapExceeded(format!(
                    "more than {} path families",
                    self.cap
                )));
            }
            self.census.weighted += BigInt::one() << self.touches;
            let sign = permutation_sign(&self.chosen);
            self.census.signed += sign;
            self.census.signs.insert(sign);
            return Ok(());
        }
        let start = self.problem.starts[idx];
        if self.used.contains(&start) || !self.allowed(start) {
            return Ok(());
        }
        self.used.insert(start);
        let mut trail = vec![start];
        let result = self.walk(idx, start, &mut trail);
        self.used.remove(&start);
        result
    }

    fn walk(&mut self, idx: usize, at: Point, trail: &mut Vec<Point>) -> Result<()> {
        if let Some(&rank) = self.end_rank.get(&at) {
            let fixed = matches!(self.problem.target, Target::Points(_));
            if !fixed || rank == idx {
                self.chosen.push(rank);
                let r = self.family(idx + 1);
                self.chosen.pop();
                r?;
            }
        }
        if let Target::Line(c) = self.problem.target {
            if at.x + at.y >= c {
                return Ok(());
            }
        }
        let limit = self.ends.iter().fold((i64::MIN, i64::MIN), |acc, e| {
            (acc.0.max(e.x), acc.1.max(e.y))
        });
        for (next, up) in [
            (Point::new(at.x + 1, at.y), false),
            (Point::new(at.x, at.y + 1), true),
        ] {
            if next.x > limit.0
                || next.y > limit.1
                || self.used.contains(&next)
                || !self.allowed(next)
            {
                continue;
            }
            let touch =
                up && self.problem.diagonal == DiagonalRule::WeakBelowTouchTwo && next.x == next.y;
            self.used.insert(next);
            trail.push(next);
            self.touches += u32::from(touch);
            let r = self.walk(idx, next, trail);
            self.touches -= u32::from(touch);
            trail.pop();
            self.used.remove(&next);
            r?;
        }
        Ok(())
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Enumerates every family of pairwise vertex-disjoint paths of `problem`.
/// A path may end at any admissible end point it reaches (for fixed ends,
/// only its own), and may pass through end points it does not stop at.
pub fn brute_force_families(problem: &PathProblem, caps: &Caps) -> Result<FamilyCensus> {
    let ends: Vec<Point> = match &problem.target {
        Target::Points(e) | Target::Set(e) => e.clone(),
        Target::Line(c) => {
            let lo = problem.starts.iter().map(|p| p.x).min().unwrap_or(0);
            let hi = problem.starts.iter().map(|p| c - p.y).max().unwrap_or(0);
            line_points(*c, lo, hi)
        }
    };
    let end_rank = ends.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut search = Search {
        problem,
        ends,
        end_rank,
        used: HashSet::new(),
        chosen: Vec::new(),
        touches: 0,
        cap: caps.max_families,
        census: FamilyCensus::default(),
    };
    search.family(0)?;
    Ok(search.census)
}

/// End points of the left-half paths in the region with a central rhombus:
/// `(2m+n+x-j, j-1)` for `j` outside the `x` slots blocked by the rhombus.
pub fn l_region_end_slots(spec: &RegionSpec) -> Result<Vec<(i64, Point)>> {
    spec.validate()?;
    if spec.l() != 0 {
        return Err(Error::InvalidSpec(format!(
            "{spec}: split matrices are built without side-two holes"
        )));
    }
    let (n, m, x) = (
        i64::from(spec.n),
        i64::from(spec.m),
        i64::from(spec.central_x),
    );
    let half = m + n / 2;
    Ok((1..=2 * m + n + x)
        .filter(|&j| j <= half || j > half + x)
        .map(|j| (j, Point::new(2 * m + n + x - j, j - 1)))
        .collect())
}

/// LGV matrix for the left half once the paths end at the slots `js`
/// (`2m` indices from [`l_region_end_slots`]).
pub fn l_region_matrix(spec: &RegionSpec, js: &[i64]) -> Result<ExactMatrix> {
    let slots = l_region_end_slots(spec)?;
    let m = i64::from(spec.m);
    if js.len() != 2 * m as usize {
        return Err(Error::Invalid(format!(
            "need {} end slots, got {}",
            2 * m,
            js.len()
        )));
    }
    let mut sorted = js.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != js.len() {
        return Err(Error::Invalid("end slots must be distinct".into()));
    }
    let ends: Vec<Point> = sorted
        .iter()
        .map(|j| {
            slots
                .iter()
                .find(|(s, _)| s == j)
                .map(|&(_, p)| p)
                .ok_or_else(|| Error::Invalid(format!("slot {j} is blocked or out of range")))
        })
        .collect::<Result<_>>()?;
    let starts: Vec<Point> = (1..=2 * m).map(|i| Point::new(2 * m - i, i - 1)).collect();
    lgv_matrix(&starts, &ends, DiagonalRule::None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant_by_expansion, pfaffian_by_matchings};
    use proptest::prelude::*;

    fn spec(n: u32, m: u32, k: &[u32]) -> RegionSpec {
        RegionSpec::holey(n, m, k).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn free_counts() {
        assert_eq!(free_path_count(Point::new(0, 0), Point::new(2, 1)), int(3));
        assert_eq!(free_path_count(Point::new(1, 0), Point::new(1, 0)), int(1));
        assert_eq!(free_path_count(Point::new(2, 3), Point::new(1, 1)), int(0));
    }

    #[test]
    fn reflectable_examples() {
        assert_eq!(reflectable_gf(1, 0, 2, 1).unwrap(), int(3));
        assert_eq!(reflectable_gf(1, 0, 3, 0).unwrap(), int(1));
        assert_eq!(reflectable_gf(4, 2, 4, 2).unwrap(), int(1));
        assert!(reflectable_gf(1, 1, 3, 0).is_err());
    }

    #[test]
    fn reflectable_matches_dp() {
        for d in 0..=6 {
            for cx in d + 1..=6 {
                for a in 1..=cx {
                    for b in 0..a {
                        assert_eq!(
                            reflectable_gf(a, b, cx, d).unwrap(),
                            diagonal_gf_dp(a, b, cx, d),
                            "({a},{b})->({cx},{d})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn seed_matrix_m() {
        let m = build_matrix_m(&spec(2, 1, &[1])).unwrap();
        let at = |i, j| m.at(i, j).unwrap().clone();
        use Label::*;
        assert_eq!(at(Int(0), Int(1)), int(10));
        assert_eq!(at(Int(0), Minus(1)), int(0));
        assert_eq!(at(Int(0), Plus(1)), int(3));
        assert_eq!(at(Int(1), Minus(1)), int(-3));
        assert_eq!(at(Int(1), Plus(1)), int(0));
        assert_eq!(at(Minus(1), Plus(1)), int(1));
        assert!(m.is_skew_symmetric());
        assert_eq!(pfaffian_by_matchings(&m).unwrap(), int(1));
        assert_eq!(count_f_via_pfaffian(&spec(2, 1, &[1])).unwrap(), int(1));
    }

    #[test]
    fn seed_matrix_n() {
        let n = build_matrix_n(&spec(2, 1, &[1])).unwrap();
        assert_eq!(
            n.to_rows(),
            vec![vec![int(10), int(3)], vec![int(3), int(1)]]
        );
        assert_eq!(determinant_by_expansion(&n).unwrap(), int(1));
        assert_eq!(count_hminus_via_det(&spec(2, 1, &[1])).unwrap(), int(1));
    }

    #[test]
    fn minus_minus_block_is_zero() {
        let m = build_matrix_m(&spec(6, 2, &[1, 3])).unwrap();
        assert_eq!(m.at(Label::Minus(1), Label::Minus(2)).unwrap(), &int(0));
        assert_eq!(m.at(Label::Plus(1), Label::Plus(2)).unwrap(), &int(0));
    }

    #[test]
    fn n_entries_are_reflected_path_counts() {
        for s in [spec(2, 1, &[1]), spec(5, 2, &[1, 2]), spec(6, 2, &[3])] {
            let problem = reflected_family_problem(&s).unwrap();
            let Target::Points(ends) = &problem.target else {
                unreachable!()
            };
            let lgv = lgv_matrix(&problem.starts, ends, problem.diagonal).unwrap();
            let n = build_matrix_n(&s).unwrap();
            assert_eq!(lgv.to_rows(), n.to_rows(), "{s}");
        }
    }

    #[test]
    fn q_matches_m() {
        for s in [
            spec(2, 1, &[1]),
            spec(4, 2, &[1, 2]),
            spec(5, 1, &[2]),
            spec(3, 2, &[]),
        ] {
            let q = okada_stembridge_q_for(&s, 0).unwrap();
            assert_eq!(q, build_matrix_m(&s).unwrap(), "{s}");
            let wide = okada_stembridge_q_for(&s, 3).unwrap();
            assert_eq!(
                pfaffian_elimination(&wide).unwrap(),
                pfaffian_elimination(&q).unwrap(),
                "{s}"
            );
        }
    }

    #[test]
    fn free_families_match_pfaffian() {
        let caps = Caps::default();
        for s in [
            spec(2, 1, &[1]),
            spec(3, 1, &[1]),
            spec(4, 1, &[1, 2]),
            spec(2, 1, &[]),
            spec(4, 2, &[2]),
        ] {
            let census = brute_force_families(&free_family_problem(&s).unwrap(), &caps).unwrap();
            let sign = sign_binom2(s.l());
            assert_eq!(census.signs, BTreeSet::from([sign]), "{s}");
            assert_eq!(
                BigInt::from(census.families),
                count_f_via_pfaffian(&s).unwrap(),
                "{s}"
            );
            let q = okada_stembridge_q_for(&s, 0).unwrap();
            assert_eq!(census.signed, pfaffian_elimination(&q).unwrap(), "{s}");
        }
    }

    #[test]
    fn reflected_families_match_determinant() {
        let caps = Caps::default();
        for s in [
            spec(2, 1, &[1]),
            spec(3, 1, &[1]),
            spec(4, 2, &[1]),
            spec(3, 2, &[]),
        ] {
            let census =
                brute_force_families(&reflected_family_problem(&s).unwrap(), &caps).unwrap();
            assert_eq!(census.weighted, count_hminus_via_det(&s).unwrap(), "{s}");
        }
    }

    #[test]
    fn single_path_problems() {
        let caps = Caps::default();
        let a = Point::new(0, 0);
        let b = Point::new(3, 2);
        let p = PathProblem::new(vec![a], Target::Points(vec![b]), DiagonalRule::None).unwrap();
        assert_eq!(
            BigInt::from(brute_force_families(&p, &caps).unwrap().families),
            free_path_count(a, b)
        );
        let q = okada_stembridge_q(&[a, Point::new(1, -1)], &line_points(2, -1, 4));
        let pair = PathProblem::new(
            vec![a, Point::new(1, -1)],
            Target::Line(2),
            DiagonalRule::None,
        )
        .unwrap();
        assert_eq!(
            pfaffian_elimination(&q).unwrap(),
            brute_force_families(&pair, &caps).unwrap().signed
        );
    }

    #[test]
    fn two_path_lgv() {
        let caps = Caps::default();
        let starts = [Point::new(0, 1), Point::new(1, 0)];
        let ends = [Point::new(2, 4), Point::new(4, 2)];
        let p = PathProblem::new(
            starts.to_vec(),
            Target::Points(ends.to_vec()),
            DiagonalRule::None,
        )
        .unwrap();
        let census = brute_force_families(&p, &caps).unwrap();
        let lgv = lgv_matrix(&starts, &ends, DiagonalRule::None).unwrap();
        assert_eq!(determinant(&lgv).unwrap(), BigInt::from(census.families));
        // swapped ends force a crossing
        let crossed = PathProblem::new(
            starts.to_vec(),
            Target::Points(vec![Point::new(4, 2), Point::new(2, 4)]),
            DiagonalRule::None,
        )
        .unwrap();
        assert_eq!(brute_force_families(&crossed, &caps).unwrap().families, 0);
    }

    #[test]
    fn family_cap() {
        let tight = Caps {
            max_families: 3,
            ..Caps::default()
        };
        let p = free_family_problem(&spec(4, 2, &[])).unwrap();
        assert!(matches!(
            brute_force_families(&p, &tight),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn figure_layout() {
        let p = free_family_problem(&spec(8, 4, &[2])).unwrap();
        assert_eq!(p.starts[0], Point::new(-3, 4));
        assert_eq!(p.starts[7], Point::new(4, -3));
        assert_eq!(p.starts[8], Point::new(2, 3));
        assert_eq!(p.starts[9], Point::new(3, 2));
        assert_eq!(p.target, Target::Line(9));
    }

    #[test]
    fn l_region_slots() {
        let s = RegionSpec::new(2, 1, &[], 2).unwrap();
        let js: Vec<i64> = l_region_end_slots(&s)
            .unwrap()
            .into_iter()
            .map(|(j, _)| j)
            .collect();
        assert_eq!(js, vec![1, 2, 5, 6]);
        assert!(l_region_matrix(&s, &[3, 5]).is_err());
        assert_eq!(l_region_matrix(&s, &[1, 6]).unwrap().rows(), 2);
    }

    #[test]
    fn rejects_rhombus_specs() {
        let s = RegionSpec::new(2, 1, &[], 1).unwrap();
        assert!(build_matrix_m(&s).is_err());
        assert!(build_matrix_n(&s).is_err());
    }

    proptest! {
        #[test]
        fn permutation_sign_of_transposition(n in 2usize..7, a in 0usize..7, b in 0usize..7) {
            prop_assume!(a < n && b < n && a != b);
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(a, b);
            prop_assert_eq!(permutation_sign(&p), -1);
        }
    }
}
