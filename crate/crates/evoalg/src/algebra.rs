//! The two-dimensional evolution algebra itself: structure matrices,
//! products, change of natural basis, power subspaces, annihilator,
//! perfectness, simplicity and one-dimensional ideals.
//!
//! The structure matrix `omega` stores the squares of the natural basis in
//! its *columns*: `e_j^2 = omega[0][j] e1 + omega[1][j] e2`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{normalize_leading_one, Matrix};

/// A two-dimensional evolution algebra, given by its structure matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMatrix {
    omega: Matrix,
}

impl StructureMatrix {
    pub fn new(omega: Matrix) -> StructureMatrix {
        assert_eq!((omega.rows(), omega.cols()), (2, 2), "two-dimensional algebras only");
        StructureMatrix { omega }
    }

    pub fn from_i64(field: &Field, e: [[i64; 2]; 2]) -> StructureMatrix {
        StructureMatrix::new(Matrix::from_i64_2x2(field, e))
    }

    /// Parses the row form `a,b;c,d`.
    pub fn parse(field: &Field, text: &str) -> Result<StructureMatrix> {
        let m = Matrix::parse(field, text)?;
        if (m.rows(), m.cols()) != (2, 2) {
            return Err(Error::Parse(format!("expected a 2x2 structure matrix, got {}x{}", m.rows(), m.cols())));
        }
        Ok(StructureMatrix::new(m))
    }

    pub fn field(&self) -> &Field {
        self.omega.field()
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn entry(&self, i: usize, j: usize) -> &Elem {
        self.omega.get(i, j)
    }

    /// Square of the j-th basis vector, as a coordinate vector.
    pub fn basis_square(&self, j: usize) -> Vec<Elem> {
        self.omega.col(j)
    }

    /// Product of two coordinate vectors: `u1 v1 e1^2 + u2 v2 e2^2`.
    pub fn multiply(&self, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        assert_eq!(u.len(), 2);
        assert_eq!(v.len(), 2);
        let c1 = u[0].mul(&v[0]);
        let c2 = u[1].mul(&v[1]);
        vec![
            c1.mul(self.entry(0, 0)).add(&c2.mul(self.entry(0, 1))),
            c1.mul(self.entry(1, 0)).add(&c2.mul(self.entry(1, 1))),
        ]
    }

    /// `A` is perfect iff `A^2 = A`, i.e. the structure matrix is regular.
    pub fn is_perfect(&self) -> bool {
        !self.omega.det().is_zero()
    }

    /// Nondegenerate: both natural basis vectors have nonzero square.
    pub fn is_nondegenerate(&self) -> bool {
        (0..2).all(|j| self.basis_square(j).iter().any(|e| !e.is_zero()))
    }

    /// Change of natural basis.  `p`'s columns are the new basis vectors in
    /// the old coordinates; the result is `P^-1 * omega * P^(2)`.
    ///
    /// Errors with [`Error::Singular`] when `p` is not invertible and with
    /// [`Error::NotNatural`] when the new basis vectors do not multiply to
    /// zero (checked directly on the product).
    pub fn change_basis(&self, p: &Matrix) -> Result<StructureMatrix> {
        let f1 = p.col(0);
        let f2 = p.col(1);
        let p_inv = p.inverse()?;
        if self.multiply(&f1, &f2).iter().any(|e| !e.is_zero()) {
            return Err(Error::NotNatural);
        }
        Ok(StructureMatrix::new(p_inv.mul(&self.omega).mul(&p.hadamard_square())))
    }

    /// True iff `p` is invertible and its columns form a natural basis.
    pub fn is_natural_basis(&self, p: &Matrix) -> bool {
        !p.det().is_zero() && self.multiply(&p.col(0), &p.col(1)).iter().all(|e| e.is_zero())
    }

    /// Simplicity: perfect with both horizontal edges present
    /// (`det != 0`, `omega_12 != 0`, `omega_21 != 0`).
    pub fn is_simple(&self) -> bool {
        self.is_perfect() && !self.entry(0, 1).is_zero() && !self.entry(1, 0).is_zero()
    }

    /// Power subspaces, the annihilator, and the stabilized left chain
    /// `((A^2)A)A...`.
    pub fn power_report(&self) -> PowerReport {
        let field = self.field();
        let a2 = Subspace2::span(field, &[self.basis_square(0), self.basis_square(1)]);
        let a3 = self.module_product_full(&a2);
        let a2sq = {
            let mut gens = Vec::new();
            for u in a2.basis() {
                for v in a2.basis() {
                    gens.push(self.multiply(u, v));
                }
            }
            Subspace2::span(field, &gens)
        };
        let ann = self.annihilator();
        let mut chain = a2.clone();
        for _ in 0..4 {
            let next = self.module_product_full(&chain);
            if next == chain {
                break;
            }
            chain = next;
        }
        PowerReport { a2, a3, a2sq, ann, left_chain_limit: chain }
    }

    /// Span of `{ e_i * u : u in s }`, i.e. `s * A` (= `A * s` by
    /// commutativity).
    fn module_product_full(&self, s: &Subspace2) -> Subspace2 {
        let e1 = vec![self.field().one(), self.field().zero()];
        let e2 = vec![self.field().zero(), self.field().one()];
        let mut gens = Vec::new();
        for u in s.basis() {
            gens.push(self.multiply(&e1, u));
            gens.push(self.multiply(&e2, u));
        }
        Subspace2::span(self.field(), &gens)
    }

    /// `Ann(A) = {v : vA = 0}`.
    pub fn annihilator(&self) -> Subspace2 {
        // v*e1 = v1 e1^2, v*e2 = v2 e2^2: four linear conditions on (v1, v2)
        let field = self.field();
        let rows = vec![
            self.entry(0, 0).clone(),
            field.zero(),
            self.entry(1, 0).clone(),
            field.zero(),
            field.zero(),
            self.entry(0, 1).clone(),
            field.zero(),
            self.entry(1, 1).clone(),
        ];
        let m = Matrix::new(field, 4, 2, rows);
        Subspace2::from_basis(field, m.kernel_basis())
    }

    /// All one-dimensional ideals.  For the zero algebra every line is an
    /// ideal, reported symbolically.
    pub fn one_dim_ideals(&self) -> OneDimIdeals {
        let field = self.field();
        if (0..2).all(|j| self.basis_square(j).iter().all(|e| e.is_zero())) {
            return OneDimIdeals::AllLines;
        }
        let mut lines: Vec<Subspace2> = Vec::new();
        let mut push = |v: Vec<Elem>| {
            let s = Subspace2::span(field, &[v]);
            if s.dim() == 1 && !lines.contains(&s) {
                lines.push(s);
            }
        };
        // <e1> is an ideal iff omega_21 = 0; <e2> iff omega_12 = 0
        if self.entry(1, 0).is_zero() {
            push(vec![field.one(), field.zero()]);
        }
        if self.entry(0, 1).is_zero() {
            push(vec![field.zero(), field.one()]);
        }
        // lines <(1, t)> with t != 0: need w11 t = w21 and t(w12 t - w22) = 0
        let (w11, w12, w21, w22) = (
            self.entry(0, 0),
            self.entry(0, 1),
            self.entry(1, 0),
            self.entry(1, 1),
        );
        let mut candidates: Vec<Elem> = Vec::new();
        if !w11.is_zero() {
            candidates.push(w21.checked_div(w11).expect("nonzero divisor"));
        } else if w21.is_zero() && !w12.is_zero() {
            candidates.push(w22.checked_div(w12).expect("nonzero divisor"));
        }
        for t in candidates {
            if t.is_zero() {
                continue;
            }
            let v = vec![field.one(), t.clone()];
            // verify the ideal property directly
            let e1 = vec![field.one(), field.zero()];
            let e2 = vec![field.zero(), field.one()];
            let s = Subspace2::span(field, &[v.clone()]);
            let p1 = self.multiply(&e1, &v);
            let p2 = self.multiply(&e2, &v);
            if s.contains(&p1) && s.contains(&p2) {
                push(v);
            }
        }
        OneDimIdeals::Lines(lines)
    }
}

impl fmt::Display for StructureMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.omega.to_row_text())
    }
}

/// Result of [`StructureMatrix::power_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerReport {
    pub a2: Subspace2,
    pub a3: Subspace2,
    pub a2sq: Subspace2,
    pub ann: Subspace2,
    pub left_chain_limit: Subspace2,
}

/// One-dimensional evolution ideals of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneDimIdeals {
    /// Zero algebra: every line is an ideal.
    AllLines,
    Lines(Vec<Subspace2>),
}

/// A subspace of the 2-dimensional coordinate space, held in reduced echelon
/// form so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace2 {
    field: Field,
    basis: Vec<Vec<Elem>>,
}

impl Subspace2 {
    pub fn zero(field: &Field) -> Subspace2 {
        Subspace2 { field: field.clone(), basis: Vec::new() }
    }

    /// Canonicalizes a spanning set into a reduced echelon basis.
    pub fn span(field: &Field, gens: &[Vec<Elem>]) -> Subspace2 {
        let rows: Vec<Vec<Elem>> = gens.iter().filter(|v| v.iter().any(|e| !e.is_zero())).cloned().collect();
        if rows.is_empty() {
            return Subspace2::zero(field);
        }
        let n = rows[0].len();
        let flat: Vec<Elem> = rows.iter().flatten().cloned().collect();
        let m = Matrix::new(field, rows.len(), n, flat);
        let (red, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|r| red.row(r)).collect();
        Subspace2 { field: field.clone(), basis }
    }

    fn from_basis(field: &Field, basis: Vec<Vec<Elem>>) -> Subspace2 {
        Subspace2::span(field, &basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        // reduce v against the echelon basis
        let mut v = v.to_vec();
        for b in &self.basis {
            let pivot = b.iter().position(|e| !e.is_zero()).expect("echelon basis rows are nonzero");
            if !v[pivot].is_zero() {
                let factor = v[pivot].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        v.iter().all(|e| e.is_zero())
    }

    /// A canonical spanning vector for one-dimensional subspaces.
    pub fn line_vector(&self) -> Option<&Vec<Elem>> {
        if self.dim() == 1 {
            self.basis.first()
        } else {
            None
        }
    }

    /// Renders a line as `<a e1 + b e2>`-style text.
    pub fn render_line(&self) -> alloc::string::String {
        match self.dim() {
            0 => "0".into(),
            2 => "A".into(),
            _ => {
                let v = &self.basis[0];
                let v = normalize_leading_one(v.clone());
                let mut parts: Vec<alloc::string::String> = Vec::new();
                for (i, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let name = if i == 0 { "e1" } else { "e2" };
                    if c.is_one() {
                        parts.push(format!("{name}"));
                    } else if c.neg().is_one() {
                        parts.push(format!("-{name}"));
                    } else {
                        parts.push(format!("{c}*{name}"));
                    }
                }
                format!("<{}>", parts.join(" + ").replace("+ -", "- "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::rationals()
    }

    fn e1(f: &Field) -> Vec<Elem> {
        vec![f.one(), f.zero()]
    }

    fn e2(f: &Field) -> Vec<Elem> {
        vec![f.zero(), f.one()]
    }

    #[test]
    fn natural_basis_kills_cross_products() {
        let f = q();
        let m = StructureMatrix::from_i64(&f, [[3, -1], [7, 5]]);
        assert!(m.multiply(&e1(&f), &e2(&f)).iter().all(|e| e.is_zero()));
        // e1*e1 is the first column
        assert_eq!(m.multiply(&e1(&f), &e1(&f)), vec![f.int(3), f.int(7)]);
    }

    #[test]
    fn idempotent_in_a1() {
        let f = q();
        let a1 = StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]);
        assert_eq!(a1.multiply(&e1(&f), &e1(&f)), e1(&f));
    }

    #[test]
    fn a5_square_of_sum_vanishes() {
        let f = q();
        let a5 = StructureMatrix::from_i64(&f, [[1, -1], [-1, 1]]);
        let s = vec![f.one(), f.one()];
        assert!(a5.multiply(&s, &s).iter().all(|e| e.is_zero()));
    }

    #[test]
    fn change_basis_identity_and_swap() {
        let f = q();
        let m = StructureMatrix::from_i64(&f, [[1, 2], [3, 4]]);
        let id = Matrix::identity(&f, 2);
        assert_eq!(m.change_basis(&id).unwrap(), m);
        let swap = Matrix::from_i64_2x2(&f, [[0, 1], [1, 0]]);
        let r = m.change_basis(&swap).unwrap();
        // rotation: w'11=w22, w'12=w21, w'21=w12, w'22=w11
        assert_eq!(r, StructureMatrix::from_i64(&f, [[4, 3], [2, 1]]));
    }

    #[test]
    fn change_basis_rescales_diagonal_to_identity() {
        let f = q();
        let m = StructureMatrix::from_i64(&f, [[2, 0], [0, 3]]);
        let p = Matrix::new(&f, 2, 2, vec![f.ratio(1, 2), f.zero(), f.zero(), f.ratio(1, 3)]);
        assert_eq!(m.change_basis(&p).unwrap(), StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]));
    }

    #[test]
    fn change_basis_round_trip() {
        let f = q();
        let m = StructureMatrix::from_i64(&f, [[1, 2], [3, 4]]);
        let p = Matrix::new(&f, 2, 2, vec![f.int(2), f.zero(), f.zero(), f.int(5)]);
        let m2 = m.change_basis(&p).unwrap();
        let back = m2.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn change_basis_rejects_bad_inputs() {
        let f = q();
        let m = StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]);
        let sing = Matrix::from_i64_2x2(&f, [[1, 1], [1, 1]]);
        assert!(matches!(m.change_basis(&sing), Err(Error::Singular)));
        // columns (e1, e1+e2) multiply to e1^2 != 0
        let not_nat = Matrix::from_i64_2x2(&f, [[1, 1], [0, 1]]);
        assert!(matches!(m.change_basis(&not_nat), Err(Error::NotNatural)));
    }

    #[test]
    fn power_report_examples() {
        let f = q();
        // A6: A^2 = <e1>, A^3 = 0
        let a6 = StructureMatrix::from_i64(&f, [[0, 1], [0, 0]]);
        let r = a6.power_report();
        assert_eq!(r.a2.dim(), 1);
        assert!(r.a2.contains(&e1(&f)));
        assert_eq!(r.a3.dim(), 0);
        assert_eq!(r.ann.dim(), 1);

        // A5: A^3 != 0, (A^2)^2 = 0, chain limit <e1 - e2>
        let a5 = StructureMatrix::from_i64(&f, [[1, -1], [-1, 1]]);
        let r = a5.power_report();
        assert!(r.a3.dim() > 0);
        assert_eq!(r.a2sq.dim(), 0);
        assert_eq!(r.left_chain_limit.dim(), 1);
        assert!(r.left_chain_limit.contains(&[f.one(), f.int(-1)]));

        // A1: everything is the full space, no annihilator
        let a1 = StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]);
        let r = a1.power_report();
        assert_eq!((r.a2.dim(), r.a3.dim(), r.a2sq.dim(), r.ann.dim()), (2, 2, 2, 0));
    }

    #[test]
    fn simplicity_examples() {
        let f = q();
        assert!(StructureMatrix::from_i64(&f, [[1, 2], [3, 1]]).is_simple());
        assert!(!StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]).is_simple());
        assert!(!StructureMatrix::from_i64(&f, [[0, 0], [0, 0]]).is_simple());
    }

    #[test]
    fn one_dim_ideals_examples() {
        let f = q();
        let a1 = StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]);
        match a1.one_dim_ideals() {
            OneDimIdeals::Lines(ls) => {
                assert_eq!(ls.len(), 2);
                assert!(ls.iter().any(|s| s.contains(&e1(&f))));
                assert!(ls.iter().any(|s| s.contains(&e2(&f))));
            }
            _ => panic!("A1 has lines"),
        }
        let a5 = StructureMatrix::from_i64(&f, [[1, -1], [-1, 1]]);
        match a5.one_dim_ideals() {
            OneDimIdeals::Lines(ls) => {
                assert_eq!(ls.len(), 1);
                assert!(ls[0].contains(&[f.one(), f.int(-1)]));
            }
            _ => panic!("A5 has one line"),
        }
        let a3 = StructureMatrix::from_i64(&f, [[1, 5], [0, 1]]);
        match a3.one_dim_ideals() {
            OneDimIdeals::Lines(ls) => {
                assert_eq!(ls.len(), 1);
                assert!(ls[0].contains(&e1(&f)));
            }
            _ => panic!("A3 has one line"),
        }
        let a0 = StructureMatrix::from_i64(&f, [[0, 0], [0, 0]]);
        assert_eq!(a0.one_dim_ideals(), OneDimIdeals::AllLines);
    }
}
