//! Reduction of a structured skew Pfaffian of order `2m + 2l` to a
//! determinant of order `m + l`.
//!
//! The input has blocks `X` (Toeplitz skew, entries `x_{j-i}` on the
//! integer labels `-m+1..m`), `Y` (integer rows against `1-..l-, 1+..l+`)
//! and `Z` (skew, zero on the `-`/`-` block), with the antisymmetries
//! `y_{i,t-} = -y_{-i,t-}` and `y_{i,t+} = -y_{2-i,t+}`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{determinant, pfaffian_elimination, sign_binom2, ExactMatrix, Label};
use crate::paths::labels_m;

/// The free data of a matrix satisfying the reduction hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredSkew {
    pub m: usize,
    pub l: usize,
    /// `x_1..x_{2m-1}`; `x_0 = 0` and `x_{-r} = -x_r`.
    pub x: Vec<BigInt>,
    /// `y[i + m - 1][c]` for `i = -m+1..m`; columns `1-..l-` then `1+..l+`.
    pub y: Vec<Vec<BigInt>>,
    /// Skew `2l x 2l` block in the same column order.
    pub z: Vec<Vec<BigInt>>,
}

impl StructuredSkew {
    pub fn labels(&self) -> Vec<Label> {
        labels_m(self.m as i64, self.l)
    }

    /// `x_r` for any `|r| < 2m`.
    pub fn x_at(&self, r: i64) -> BigInt {
        match r {
            0 => BigInt::zero(),
            r if r > 0 => self.x[r as usize - 1].clone(),
            r => -&self.x[(-r) as usize - 1],
        }
    }

    /// `y_{i,j}` for integer row `i` and tagged column `j`.
    pub fn y_at(&self, i: i64, j: Label) -> BigInt {
        self.y[(i + self.m as i64 - 1) as usize][self.tag_index(j)].clone()
    }

    pub fn z_at(&self, a: Label, b: Label) -> BigInt {
        self.z[self.tag_index(a)][self.tag_index(b)].clone()
    }

    fn tag_index(&self, j: Label) -> usize {
        match j {
            Label::Minus(t) => t - 1,
            Label::Plus(t) => self.l + t - 1,
            Label::Int(_) => panic!("integer label in a tagged block"),
        }
    }

    /// A random instance with entries in `-bound..=bound`.
    pub fn random<R: Rng>(m: usize, l: usize, bound: i64, rng: &mut R) -> Self {
        let mut draw = || BigInt::from(rng.gen_range(-bound..=bound));
        let mi = m as i64;
        let x = (1..2 * m).map(|_| draw()).collect();
        let mut y = vec![vec![BigInt::zero(); 2 * l]; 2 * m];
        let row = |i: i64| (i + mi - 1) as usize;
        for t in 0..l {
            // minus columns: odd about 0, so y_0 = 0 and y_m is free
            for i in 1..=mi {
                let v = draw();
                if i < mi {
                    y[row(-i)][t] = -&v;
                }
                y[row(i)][t] = v;
            }
            // plus columns: odd about 1, so y_1 = 0 and y_{-m+1} is free
            for i in 2..=mi {
                let v = draw();
                y[row(2 - i)][l + t] = -&v;
                y[row(i)][l + t] = v;
            }
            y[row(-mi + 1)][l + t] = draw();
            y[row(1)][l + t] = BigInt::zero();
        }
        let mut z = vec![vec![BigInt::zero(); 2 * l]; 2 * l];
        for a in 0..2 * l {
            for b in a + 1..2 * l {
                if a < l && b < l {
                    continue;
                }
                let v = draw();
                z[b][a] = -&v;
                z[a][b] = v;
            }
        }
        StructuredSkew { m, l, x, y, z }
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::skew_from_upper(self.labels(), |a, b| match (a, b) {
            (Label::Int(i), Label::Int(j)) => self.x_at(j - i),
            (Label::Int(i), t) => self.y_at(i, t),
            (s, t) => self.z_at(s, t),
        })
    }
}

/// Checks the reduction hypotheses on a matrix of order `2m + 2l` (read by
/// position in the order `-m+1..m, 1-..l-, 1+..l+`) and returns its free
/// data. Every violated rule is reported.
pub fn check_hypotheses(a: &ExactMatrix, m: usize, l: usize) -> Result<StructuredSkew> {
    let order = 2 * m + 2 * l;
    if a.rows() != order || a.cols() != order {
        return Err(Error::Hypotheses(vec![format!(
            "order {}x{} is not 2m+2l = {order}",
            a.rows(),
            a.cols()
        )]));
    }
    let a = a.relabel(labels_m(m as i64, l), labels_m(m as i64, l));
    let mut problems = Vec::new();
    if let Some((i, j)) = a.skew_violation() {
        problems.push(format!(
            "skew-symmetry fails at ({}, {})",
            a.row_labels()[i],
            a.col_labels()[j]
        ));
    }
    let mi = m as i64;
    let at = |r: Label, c: Label| a.at(r, c).expect("declared label").clone();
    let x: Vec<BigInt> = (1..2 * mi)
        .map(|r| at(Label::Int(-mi + 1), Label::Int(-mi + 1 + r)))
        .collect();
    'toeplitz: for i in -mi + 1..=mi {
        for j in -mi + 1..=mi {
            let want = match j - i {
                0 => BigInt::zero(),
                d if d > 0 => x[d as usize - 1].clone(),
                d => -&x[(-d) as usize - 1],
            };
            if at(Label::Int(i), Label::Int(j)) != want {
                problems.push(format!(
                    "X is not a skew Toeplitz block x_(j-i) at ({i}, {j})"
                ));
                break 'toeplitz;
            }
        }
    }
    for t in 1..=l {
        for i in -mi + 1..=mi {
            let minus = Label::Minus(t);
            if -i > -mi && -i <= mi && at(Label::Int(i), minus) != -at(Label::Int(-i), minus) {
                problems.push(format!("y_(i,t-) = -y_(-i,t-) fails at i={i}, t={t}"));
                break;
            }
        }
        for i in -mi + 1..=mi {
            let plus = Label::Plus(t);
            let k = 2 - i;
            if k > -mi && k <= mi && at(Label::Int(i), plus) != -at(Label::Int(k), plus) {
                problems.push(format!("y_(i,t+) = -y_(2-i,t+) fails at i={i}, t={t}"));
                break;
            }
        }
        for u in 1..=l {
            if u != t && !at(Label::Minus(t), Label::Minus(u)).is_zero() {
                problems.push(format!("z_(t-,u-) = 0 fails at t={t}, u={u}"));
            }
        }
    }
    if !problems.is_empty() {
        return Err(Error::Hypotheses(problems));
    }
    let tags: Vec<Label> = Label::minus_range(l)
        .into_iter()
        .chain(Label::plus_range(l))
        .collect();
    let y = (-mi + 1..=mi)
        .map(|i| tags.iter().map(|&t| at(Label::Int(i), t)).collect())
        .collect();
    let z = tags
        .iter()
        .map(|&s| tags.iter().map(|&t| at(s, t)).collect())
        .collect();
    Ok(StructuredSkew { m, l, x, y, z })
}

/// Replaces row `i` (for `i = 0, -1, .., -m+1`) by the sum of the original
/// rows `i, i+2, .., -i`, then does the same with the columns. This is a
/// congruence by a unimodular matrix, so the Pfaffian is unchanged.
pub fn hat_transform(a: &ExactMatrix, m: usize) -> ExactMatrix {
    let mi = m as i64;
    let pos = |i: i64| (i + mi - 1) as usize;
    let n = a.rows();
    let mut rows = a.to_rows();
    let original = rows.clone();
    for i in -mi + 1..=0 {
        for c in 0..n {
            rows[pos(i)][c] = (0..=-i).map(|r| &original[pos(i + 2 * r)][c]).sum();
        }
    }
    let original = rows.clone();
    for i in -mi + 1..=0 {
        for row in rows.iter_mut().zip(&original) {
            row.0[pos(i)] = (0..=-i).map(|r| &row.1[pos(i + 2 * r)]).sum();
        }
    }
    let mut out = ExactMatrix::zeros(a.row_labels().to_vec(), a.col_labels().to_vec());
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    out
}

/// Nonzero entries of `a_hat` where the transform must produce zeros: rows
/// `-m+1..0` against columns `-m+1..0` and `1-..l-`.
pub fn hat_zero_block_violations(a_hat: &ExactMatrix, m: usize, l: usize) -> Vec<(Label, Label)> {
    let mi = m as i64;
    let cols: Vec<Label> = Label::int_range(-mi + 1, 0)
        .into_iter()
        .chain(Label::minus_range(l))
        .collect();
    let mut out = Vec::new();
    for i in Label::int_range(-mi + 1, 0) {
        for &j in &cols {
            if !a_hat.at(i, j).is_ok_and(Zero::is_zero) {
                out.push((i, j));
            }
        }
    }
    out
}

fn b_labels(m: usize, l: usize) -> (Vec<Label>, Vec<Label>) {
    let rows = Label::int_range(1, m as i64)
        .into_iter()
        .chain(Label::minus_range(l))
        .collect();
    let cols = Label::int_range(1, m as i64)
        .into_iter()
        .chain(Label::plus_range(l))
        .collect();
    (rows, cols)
}

/// `B` from the free data: `x̄_ij = x_{|j-i|+1} + x_{|j-i|+3} + .. + x_{i+j-1}`,
/// `y_{1-i,t+}`, `-y_{j,t-}` and `z_{t-,u+}`.
pub fn extract_b_direct(s: &StructuredSkew) -> ExactMatrix {
    let (rows, cols) = b_labels(s.m, s.l);
    ExactMatrix::from_fn(rows, cols, |r, c| match (r, c) {
        (Label::Int(i), Label::Int(j)) => {
            let lo = (j - i).abs() + 1;
            (lo..=i + j - 1).step_by(2).map(|r| s.x_at(r)).sum()
        }
        (Label::Int(i), t) => s.y_at(1 - i, t),
        (Label::Minus(t), Label::Int(j)) => -s.y_at(j, Label::Minus(t)),
        (a, b) => s.z_at(a, b),
    })
}

/// `B` read off `a_hat`: rows `0, -1, .., -m+1` (renamed `1..m`) and
/// `1-..l-`, against columns `1..m, 1+..l+`.
pub fn extract_b_from_hat(a_hat: &ExactMatrix, m: usize, l: usize) -> Result<ExactMatrix> {
    let (rows, cols) = b_labels(m, l);
    let source_rows: Vec<Label> = rows
        .iter()
        .map(|&r| match r {
            Label::Int(i) => Label::Int(1 - i),
            other => other,
        })
        .collect();
    Ok(a_hat.select(&source_rows, &cols)?.relabel(rows, cols))
}

/// Both constructions of `B`, which must agree.
pub fn extract_b(a: &ExactMatrix, m: usize, l: usize) -> Result<ExactMatrix> {
    let s = check_hypotheses(a, m, l)?;
    let direct = extract_b_direct(&s);
    let hat = hat_transform(&s.to_matrix(), m);
    let from_hat = extract_b_from_hat(&hat, m, l)?;
    if direct != from_hat {
        return Err(Error::Invalid(format!(
            "B disagrees between constructions:\n{direct}\nvs\n{from_hat}"
        )));
    }
    Ok(direct)
}

/// Both sides of `Pf(A) = (-1)^C(l,2) det(B)`, with the intermediate checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub m: usize,
    pub l: usize,
    #[serde(with = "crate::linalg::decimal")]
    pub pf_a: BigInt,
    #[serde(with = "crate::linalg::decimal")]
    pub pf_a_hat: BigInt,
    #[serde(with = "crate::linalg::decimal")]
    pub det_b: BigInt,
    pub sign: i32,
    pub zero_blocks_ok: bool,
    pub b_constructions_agree: bool,
    pub pass: bool,
}

pub fn verify_reduction(a: &ExactMatrix, m: usize, l: usize) -> Result<ReductionCertificate> {
    let s = check_hypotheses(a, m, l)?;
    let a = s.to_matrix();
    let hat = hat_transform(&a, m);
    let zero_blocks_ok = hat_zero_block_violations(&hat, m, l).is_empty();
    let direct = extract_b_direct(&s);
    let b_constructions_agree = direct == extract_b_from_hat(&hat, m, l)?;
    let pf_a = pfaffian_elimination(&a)?;
    let pf_a_hat = pfaffian_elimination(&hat)?;
    let det_b = determinant(&direct)?;
    let sign = sign_binom2(l);
    let pass = zero_blocks_ok && b_constructions_agree && pf_a == pf_a_hat && pf_a == &det_b * sign;
    Ok(ReductionCertificate {
        m,
        l,
        pf_a,
        pf_a_hat,
        det_b,
        sign,
        zero_blocks_ok,
        b_constructions_agree,
        pass,
    })
}

/// Subtracts row `i-1` from row `i` for `i = m, m-1, .., 2` among the
/// integer-labelled rows, then the same with the integer-labelled columns.
pub fn subtraction_transform(b: &ExactMatrix) -> ExactMatrix {
    let mut out = b.clone();
    let int_rows: Vec<usize> = (0..b.rows())
        .filter(|&i| matches!(b.row_labels()[i], Label::Int(_)))
        .collect();
    for w in int_rows.windows(2).rev() {
        for c in 0..out.cols() {
            let v = out.get(w[1], c) - out.get(w[0], c);
            out.set(w[1], c, v);
        }
    }
    let int_cols: Vec<usize> = (0..b.cols())
        .filter(|&j| matches!(b.col_labels()[j], Label::Int(_)))
        .collect();
    for w in int_cols.windows(2).rev() {
        for r in 0..out.rows() {
            let v = out.get(r, w[1]) - out.get(r, w[0]);
            out.set(r, w[1], v);
        }
    }
    out
}

/// The rows `1-..l-` of a transformed `B` renamed `1+..l+`, so it can be
/// compared with the determinant matrix entry by entry.
pub fn as_plus_indexed(b: &ExactMatrix) -> ExactMatrix {
    let rows = b
        .row_labels()
        .iter()
        .map(|&r| match r {
            Label::Minus(t) => Label::Plus(t),
            other => other,
        })
        .collect();
    b.relabel(rows, b.col_labels().to_vec())
}
