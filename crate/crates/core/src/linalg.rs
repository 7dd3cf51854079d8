//! Dense matrices over a finite field.
//!
//! Elimination is deterministic: columns are scanned left to right (or in a
//! caller-supplied order) and the first nonzero row at or below the current
//! pivot row becomes the pivot, so reduced forms are reproducible.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};

#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && *self.field == *other.field
    }
}

/// Output of a row reduction.
#[derive(Debug, Clone)]
pub struct Rref {
    /// Reduced matrix, same shape as the input (zero rows at the bottom).
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

impl Matrix {
    /// Builds a matrix from row-major data. A matrix may have zero rows
    /// (an empty basis) but must have at least one column.
    pub fn new(field: &FieldRef, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if cols == 0 {
            return Err(Error::ShapeMismatch("matrix needs at least one column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v as u32 >= field.order()) {
            return Err(Error::ShapeMismatch(format!("{bad} is not an element of {field}")));
        }
        Ok(Matrix { field: Arc::clone(field), rows, cols, data })
    }

    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Matrix {
        Matrix { field: Arc::clone(field), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Matrix {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &FieldRef, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `self · otherᵀ`, the matrix of pairwise row dot products.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("column counts differ".into()));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, dot(&self.field, self.row(i), other.row(j)));
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a != 0 {
                axpy(f, &mut out, a, self.row(r));
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<Matrix> {
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::PositionOutOfRange(c));
        }
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        Matrix::new(&self.field, self.rows, cols.len(), data)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: Arc::clone(&self.field), rows: rows.len(), cols: self.cols, data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: Arc::clone(&self.field), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form with leftmost-column pivoting.
    pub fn rref(&self) -> Rref {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_by_columns(&order)
    }

    /// Row reduction scanning columns in `order`; each pivot row ends up with
    /// a 1 in its pivot column and zeros in every other pivot column. Rows
    /// are sorted by the position of their pivot within `order`.
    pub fn rref_by_columns(&self, order: &[usize]) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for &c in order {
            if prow == m.rows {
                break;
            }
            let Some(sel) = (prow..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(prow, sel);
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            m.scale_row(prow, inv);
            let pivot_row = m.row(prow).to_vec();
            for r in 0..m.rows {
                if r != prow {
                    let a = m.get(r, c);
                    if a != 0 {
                        let cols = m.cols;
                        axpy(f, &mut m.data[r * cols..(r + 1) * cols], f.neg(a), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Rref { rank: pivots.len(), matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: Elem) {
        let f = Arc::clone(&self.field);
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = f.mul(*v, s);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the reduced form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let red = self.rref();
        red.matrix.select_rows(&(0..red.rank).collect::<Vec<_>>())
    }

    /// Basis (as rows) of `{x : self · xᵀ = 0}`; `cols − rank` rows.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let red = self.rref();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &red.pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (j, &pc) in red.pivots.iter().enumerate() {
                out.set(i, pc, f.neg(red.matrix.get(j, fc)));
            }
        }
        out
    }

    /// Whether both matrices span the same row space.
    pub fn row_space_equal(&self, other: &Matrix) -> Result<bool> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("column counts differ".into()));
        }
        Ok(self.row_space_basis().data == other.row_space_basis().data)
    }

    /// Text form: header `rows cols q`, then one row of integers per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, self.field.order());
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Parses [`Matrix::to_text`] output. The field is rebuilt from `q` with
    /// its default modulus unless `field` is supplied (and matches `q`).
    pub fn from_text(text: &str, field: Option<&FieldRef>) -> Result<Matrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let nums: Vec<usize> = parse_ints(header, hl + 1)?;
        if nums.len() != 3 {
            return Err(Error::Parse { line: hl + 1, msg: "header must be `rows cols q`".into() });
        }
        let (rows, cols, q) = (nums[0], nums[1], nums[2] as u32);
        let field = match field {
            Some(f) if f.order() == q => Arc::clone(f),
            Some(_) => return Err(Error::FieldMismatch),
            None => Field::of_order(q)?,
        };
        let mut data = Vec::with_capacity(rows * cols);
        for (ln, line) in lines {
            let row = parse_ints(line, ln + 1)?;
            if row.len() != cols {
                return Err(Error::Parse { line: ln + 1, msg: format!("expected {cols} entries") });
            }
            data.extend(row.into_iter().map(|v| v as Elem));
        }
        if data.len() != rows * cols {
            return Err(Error::Parse { line: 0, msg: format!("expected {rows} rows") });
        }
        Matrix::new(&field, rows, cols, data)
    }
}

fn parse_ints(line: &str, ln: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse { line: ln, msg: format!("{t}: {e}") }))
        .collect()
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `y += a·x`
pub fn axpy(f: &Field, y: &mut [Elem], a: Elem, x: &[Elem]) {
    if a == 0 {
        return;
    }
    if a == 1 {
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi = f.add(*yi, xi);
        }
    } else {
        for (yi, &xi) in y.iter_mut().zip(x) {
            if xi != 0 {
                *yi = f.add(*yi, f.mul(a, xi));
            }
        }
    }
}
