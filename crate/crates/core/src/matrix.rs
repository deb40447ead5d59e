use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial};
use crate::rational::RationalFunction;
use crate::space::ParamSpace;

/// Dense matrix over `F(z)(s)` with labelled columns (`a1, a2, ...` by
/// default).
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    space: ParamSpace,
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
    labels: Vec<String>,
}

pub fn default_labels(cols: usize) -> Vec<String> {
    (1..=cols).map(|j| format!("a{j}")).collect()
}

impl SymMatrix {
    pub fn new(space: &ParamSpace, rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.space() != space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(SymMatrix {
            space: space.clone(),
            rows,
            cols,
            entries,
            labels: default_labels(cols),
        })
    }

    pub fn from_rows(space: &ParamSpace, rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
            return Err(Error::Dimension(format!(
                "row {} has {} entries, expected {ncols}",
                i + 1,
                r.len()
            )));
        }
        Self::new(space, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds from integer entries; convenient for fixtures.
    pub fn from_ints(space: &ParamSpace, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            space,
            rows.iter()
                .map(|r| r.iter().map(|&v| RationalFunction::from_int(space, v)).collect())
                .collect(),
        )
    }

    pub fn zeros(space: &ParamSpace, rows: usize, cols: usize) -> Self {
        SymMatrix {
            space: space.clone(),
            rows,
            cols,
            entries: vec![RationalFunction::zero(space); rows * cols],
            labels: default_labels(cols),
        }
    }

    pub fn identity(space: &ParamSpace, n: usize) -> Self {
        let mut m = Self::zeros(space, n, n);
        for i in 0..n {
            m.entries[i * n + i] = RationalFunction::one(space);
        }
        m
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{} labels for {} columns",
                labels.len(),
                self.cols
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Dimension(format!("duplicate column label `{l}`")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn space(&self) -> &ParamSpace {
        &self.space
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[RationalFunction] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> SymMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        SymMatrix {
            space: self.space.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
            labels: default_labels(self.rows),
        }
    }

    /// Submatrix on the given rows and columns; column labels follow along.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SymMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        SymMatrix {
            space: self.space.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
            labels: cols.iter().map(|&c| self.labels[c].clone()).collect(),
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> SymMatrix {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &cols)
    }

    pub fn select_columns(&self, cols: &[usize]) -> SymMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn hstack(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.space.check(&other.space)?;
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot place {} rows beside {} rows",
                other.rows, self.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        Ok(SymMatrix {
            space: self.space.clone(),
            rows: self.rows,
            cols,
            entries,
            labels: default_labels(cols),
        })
    }

    pub fn vstack(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.space.check(&other.space)?;
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} columns under {} columns",
                other.cols, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(SymMatrix {
            space: self.space.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
            labels: self.labels.clone(),
        })
    }

    pub fn block_diag(blocks: &[&SymMatrix]) -> Result<SymMatrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::Dimension("no blocks to place on the diagonal".into()))?;
        let space = first.space.clone();
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = SymMatrix::zeros(&space, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            space.check(&b.space)?;
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.entries[(r0 + r) * cols + c0 + c] = b.get(r, c).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.space.check(&other.space)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = RationalFunction::zero(&self.space);
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    let b = other.get(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        SymMatrix::new(&self.space, self.rows, other.cols, entries)
    }

    pub fn map<F>(&self, f: F) -> SymMatrix
    where
        F: Fn(&RationalFunction) -> RationalFunction,
    {
        SymMatrix {
            space: self.space.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Multiplies row `r` by `factor`.
    pub fn scale_row(&self, r: usize, factor: &RationalFunction) -> SymMatrix {
        let mut out = self.clone();
        for c in 0..self.cols {
            out.entries[r * self.cols + c] = self.get(r, c) * factor;
        }
        out
    }

    /// First entry (row-major) in which `s` occurs.
    pub fn find_s(&self) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| {
                let e = self.get(r, c);
                !(e.numerator().is_s_free() && e.denominator().is_s_free())
            })
    }

    /// Entry-wise exact evaluation.
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Vec<Vec<Coeff>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.evaluate(point)).collect())
            .collect()
    }

    /// Entry-wise partial substitution.
    pub fn substitute(&self, values: &[(usize, Coeff)]) -> Result<SymMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.substitute(values))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymMatrix {
            entries,
            ..self.clone()
        })
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix {}x{} [{}]", self.rows, self.cols, self.labels.join(" "))?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `[sI − A | B]` with columns labelled `a1..a(n+m)`.
pub fn build_pencil(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    a.space.check(&b.space)?;
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "state matrix must be square, got {}x{}",
            a.rows, a.cols
        )));
    }
    if b.rows != a.rows {
        return Err(Error::Dimension(format!(
            "input matrix has {} rows, state matrix has {}",
            b.rows, a.rows
        )));
    }
    check_s_free(a, "A")?;
    check_s_free(b, "B")?;
    let space = &a.space;
    let s = RationalFunction::from(Polynomial::s(space));
    let n = a.rows;
    let shifted = SymMatrix::identity(space, n).map(|e| if e.is_zero() { e.clone() } else { s.clone() });
    let diff = SymMatrix {
        entries: shifted
            .entries
            .iter()
            .zip(&a.entries)
            .map(|(x, y)| x - y)
            .collect(),
        ..shifted
    };
    diff.hstack(b)
}

pub(crate) fn check_s_free(m: &SymMatrix, which: &'static str) -> Result<()> {
    match m.find_s() {
        Some((row, col)) => Err(Error::IndeterminateInCoefficients {
            var: m.space.s_name().to_string(),
            matrix: which,
            row: row + 1,
            col: col + 1,
        }),
        None => Ok(()),
    }
}
