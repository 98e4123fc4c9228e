use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Row or column index of a labelled matrix: a plain integer, or a hole
/// index tagged `t-` / `t+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Int(i64),
    Minus(usize),
    Plus(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Minus(t) => write!(f, "{t}-"),
            Label::Plus(t) => write!(f, "{t}+"),
        }
    }
}

impl Label {
    pub fn int_range(lo: i64, hi: i64) -> Vec<Label> {
        (lo..=hi).map(Label::Int).collect()
    }

    pub fn minus_range(l: usize) -> Vec<Label> {
        (1..=l).map(Label::Minus).collect()
    }

    pub fn plus_range(l: usize) -> Vec<Label> {
        (1..=l).map(Label::Plus).collect()
    }
}

/// Dense matrix of big integers with symbolic row/column labels.
#[derive(Clone, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    row_index: HashMap<Label, usize>,
    col_index: HashMap<Label, usize>,
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.row_labels == other.row_labels
            && self.col_labels == other.col_labels
            && self.data == other.data
    }
}

impl Eq for ExactMatrix {}

fn index_of(labels: &[Label]) -> HashMap<Label, usize> {
    labels.iter().enumerate().map(|(i, &l)| (l, i)).collect()
}

impl ExactMatrix {
    /// Zero matrix with the given labels. Labels must be distinct.
    pub fn zeros(row_labels: Vec<Label>, col_labels: Vec<Label>) -> Self {
        let rows = row_labels.len();
        let cols = col_labels.len();
        let row_index = index_of(&row_labels);
        let col_index = index_of(&col_labels);
        assert_eq!(row_index.len(), rows, "duplicate row label");
        assert_eq!(col_index.len(), cols, "duplicate column label");
        ExactMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
            row_labels,
            col_labels,
            row_index,
            col_index,
        }
    }

    /// Square zero matrix sharing one label list for rows and columns.
    pub fn square_zeros(labels: Vec<Label>) -> Self {
        Self::zeros(labels.clone(), labels)
    }

    /// Matrix from integer rows, labelled `1..=rows` and `1..=cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut out = Self::zeros(Label::int_range(1, r as i64), Label::int_range(1, c as i64));
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                out.set(i, j, v.clone().into());
            }
        }
        out
    }

    /// Builds a matrix by evaluating `f` at every label pair.
    pub fn from_fn<F>(row_labels: Vec<Label>, col_labels: Vec<Label>, mut f: F) -> Self
    where
        F: FnMut(Label, Label) -> BigInt,
    {
        let mut out = Self::zeros(row_labels, col_labels);
        for i in 0..out.rows {
            for j in 0..out.cols {
                let v = f(out.row_labels[i], out.col_labels[j]);
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_position(&self, label: Label) -> Option<usize> {
        self.row_index.get(&label).copied()
    }

    pub fn col_position(&self, label: Label) -> Option<usize> {
        self.col_index.get(&label).copied()
    }

    /// Entry addressed by labels.
    pub fn at(&self, row: Label, col: Label) -> Result<&BigInt> {
        let i = self
            .row_position(row)
            .ok_or_else(|| Error::UnknownLabel(row.to_string()))?;
        let j = self
            .col_position(col)
            .ok_or_else(|| Error::UnknownLabel(col.to_string()))?;
        Ok(self.get(i, j))
    }

    pub fn set_at(&mut self, row: Label, col: Label, v: BigInt) -> Result<()> {
        let i = self
            .row_position(row)
            .ok_or_else(|| Error::UnknownLabel(row.to_string()))?;
        let j = self
            .col_position(col)
            .ok_or_else(|| Error::UnknownLabel(col.to_string()))?;
        self.set(i, j, v);
        Ok(())
    }

    /// Entries as nested rows.
    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.col_labels.clone(), self.row_labels.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// First position `(i, j)` where skew-symmetry fails, if any.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return Some((i, i));
            }
            for j in i + 1..self.cols {
                if *self.get(i, j) != -self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.skew_violation().is_none()
    }

    /// Skew matrix from its strict upper triangle; `upper(a, b)` is called for
    /// label pairs with `a` listed before `b`.
    pub fn skew_from_upper<F>(labels: Vec<Label>, mut upper: F) -> Self
    where
        F: FnMut(Label, Label) -> BigInt,
    {
        let mut out = Self::square_zeros(labels);
        for i in 0..out.rows {
            for j in i + 1..out.cols {
                let v = upper(out.row_labels[i], out.col_labels[j]);
                out.set(j, i, -&v);
                out.set(i, j, v);
            }
        }
        out
    }

    /// Submatrix picking rows and columns by label, in the given order.
    pub fn select(&self, rows: &[Label], cols: &[Label]) -> Result<Self> {
        let mut out = Self::zeros(rows.to_vec(), cols.to_vec());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.at(r, c)?.clone());
            }
        }
        Ok(out)
    }

    /// Same entries under new labels.
    pub fn relabel(&self, row_labels: Vec<Label>, col_labels: Vec<Label>) -> Self {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        let mut out = Self::zeros(row_labels, col_labels);
        out.data = self.data.clone();
        out
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        write!(f, "{:>5} ", "")?;
        for c in &self.col_labels {
            write!(f, " {:>width$}", c.to_string())?;
        }
        writeln!(f)?;
        for (label, row) in self.row_labels.iter().zip(&cells) {
            write!(f, "{:>5} ", label.to_string())?;
            for v in row {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
