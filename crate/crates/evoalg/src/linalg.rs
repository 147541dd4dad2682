//! Small exact matrices over a [`Field`]: elimination, kernels, inverses and
//! the Hadamard (entrywise) square used by evolution-algebra base changes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Dense row-major matrix with entries in one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<Elem>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        assert!(entries.iter().all(|e| e.field() == field), "entries must share the field");
        Matrix { field: field.clone(), rows, cols, entries }
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix::new(field, rows, cols, entries)
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(field, rows, cols, |_, _| field.zero())
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        Matrix::from_fn(field, n, n, |r, c| if r == c { field.one() } else { field.zero() })
    }

    /// 2x2 matrix from integer entries, row major.
    pub fn from_i64_2x2(field: &Field, e: [[i64; 2]; 2]) -> Matrix {
        Matrix::from_fn(field, 2, 2, |r, c| field.int(e[r][c]))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        assert!(v.field() == &self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Elem> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| self.get(r, c).add(rhs.get(r, c)))
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| self.get(r, c).sub(rhs.get(r, c)))
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        Matrix::from_fn(&self.field, self.rows, rhs.cols, |r, c| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(r, k).mul(rhs.get(k, c)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(r, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, s: &Elem) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| self.get(r, c).mul(s))
    }

    /// Entrywise square: `(q_ij) -> (q_ij^2)`.
    pub fn hadamard_square(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| {
            let e = self.get(r, c);
            e.mul(e)
        })
    }

    /// Reduced row echelon form together with the pivot column of each
    /// pivot row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(pr, c).clone();
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Elem {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        if self.rows == 2 {
            return self.get(0, 0).mul(self.get(1, 1)).sub(&self.get(0, 1).mul(self.get(1, 0)));
        }
        // fraction-free enough for our sizes: plain elimination with pivoting
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..m.cols {
            let Some(pr) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return self.field.zero();
            };
            if pr != col {
                det = det.neg();
                for c in 0..m.cols {
                    let a = m.get(col, c).clone();
                    let b = m.get(pr, c).clone();
                    m.set(col, c, b);
                    m.set(pr, c, a);
                }
            }
            let piv = m.get(col, col).clone();
            det = det.mul(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for r in col + 1..m.rows {
                if !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).mul(&inv);
                    for c in col..m.cols {
                        let v = m.get(r, c).sub(&factor.mul(m.get(col, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::from_fn(&self.field, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        aug = red;
        Ok(Matrix::from_fn(&self.field, n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// Basis of the right null space `{v : Av = 0}`, deterministic: one
    /// vector per free column (ascending), each scaled so its first nonzero
    /// coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Elem>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::new();
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = red.get(prow, fc).neg();
            }
            out.push(normalize_leading_one(v));
        }
        out
    }

    /// Parses the row-text form `a,b;c,d` over the given field.
    pub fn parse(field: &Field, text: &str) -> Result<Matrix> {
        let rows: Vec<&str> = text.trim().split(';').collect();
        let mut entries = Vec::new();
        let mut width = None;
        for row in &rows {
            let cells: Vec<&str> = row.split(',').collect();
            match width {
                None => width = Some(cells.len()),
                Some(w) if w != cells.len() => {
                    return Err(Error::Parse(format!("ragged matrix rows in `{text}`")))
                }
                _ => {}
            }
            for cell in cells {
                entries.push(field.parse_elem(cell)?);
            }
        }
        let w = width.ok_or_else(|| Error::Parse("empty matrix".into()))?;
        Ok(Matrix::new(field, rows.len(), w, entries))
    }

    /// Row-text form `a,b;c,d` mirroring [`Matrix::parse`].
    pub fn to_row_text(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| format!("{}", self.get(r, c)))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        rows.join(";")
    }
}

/// Scales a vector so its first nonzero coordinate becomes 1.
pub fn normalize_leading_one(mut v: Vec<Elem>) -> Vec<Elem> {
    if let Some(first) = v.iter().find(|e| !e.is_zero()).cloned() {
        let inv = first.inv().expect("nonzero");
        for e in v.iter_mut() {
            *e = e.mul(&inv);
        }
    }
    v
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn kernel_of_identity_is_empty_and_of_zero_is_standard() {
        let id = Matrix::identity(&q(), 2);
        assert!(id.kernel_basis().is_empty());
        let z = Matrix::zero(&q(), 2, 2);
        let k = z.kernel_basis();
        assert_eq!(k, vec![vec![q().one(), q().zero()], vec![q().zero(), q().one()]]);
    }

    #[test]
    fn kernel_of_rank_one_row() {
        let f = q();
        let m = Matrix::new(&f, 1, 3, vec![f.one(), f.one(), f.one()]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![f.one(), f.int(-1), f.zero()]);
        assert_eq!(k[1], vec![f.one(), f.zero(), f.int(-1)]);
    }

    #[test]
    fn hadamard_square_examples() {
        let f = q();
        let m = Matrix::from_i64_2x2(&f, [[1, 2], [3, 4]]);
        assert_eq!(m.hadamard_square(), Matrix::from_i64_2x2(&f, [[1, 4], [9, 16]]));
        let id = Matrix::identity(&f, 2);
        assert_eq!(id.hadamard_square(), id);
        let n = Matrix::from_i64_2x2(&f, [[0, -1], [-1, 0]]);
        assert_eq!(n.hadamard_square(), Matrix::from_i64_2x2(&f, [[0, 1], [1, 0]]));
    }

    #[test]
    fn inverse_round_trip() {
        let f = q();
        let m = Matrix::from_i64_2x2(&f, [[1, 2], [3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 2));
        let s = Matrix::from_i64_2x2(&f, [[1, 2], [2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn parse_and_print_round_trip() {
        let f = q();
        let m = Matrix::parse(&f, "1,-2;3/2,0").unwrap();
        assert_eq!(m.get(1, 0), &f.ratio(3, 2));
        assert_eq!(Matrix::parse(&f, &m.to_row_text()).unwrap(), m);
    }
}
