//! Multilinear identities of degree 3 and 4 for two-dimensional commutative
//! algebras, via exact linear systems over the basis tuples.
//!
//! Degree-3 candidates are spanned by `(xy)z, (yz)x, (zx)y`; degree-4
//! candidates by the fifteen bracketings listed in [`DEGREE4`], indexed by
//! `lambda_1..lambda_15` in that order.  An identity holds iff its
//! coefficient vector annihilates every evaluation at basis tuples, which
//! multilinearity extends to all arguments.

use alloc::vec::Vec;

use crate::algebra::StructureMatrix;
use crate::field::{Elem, Field};
use crate::linalg::Matrix;

/// A two-dimensional commutative (not necessarily evolution) algebra given
/// by the three products of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra2 {
    field: Field,
    e11: Vec<Elem>,
    e12: Vec<Elem>,
    e22: Vec<Elem>,
}

impl CommAlgebra2 {
    pub fn new(field: &Field, e11: Vec<Elem>, e12: Vec<Elem>, e22: Vec<Elem>) -> CommAlgebra2 {
        assert!(e11.len() == 2 && e12.len() == 2 && e22.len() == 2);
        CommAlgebra2 { field: field.clone(), e11, e12, e22 }
    }

    /// Evolution algebras have `e1 e2 = 0`.
    pub fn from_structure(m: &StructureMatrix) -> CommAlgebra2 {
        let f = m.field();
        CommAlgebra2 {
            field: f.clone(),
            e11: m.basis_square(0),
            e12: vec![f.zero(), f.zero()],
            e22: m.basis_square(1),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn mul(&self, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        let c11 = u[0].mul(&v[0]);
        let c12 = u[0].mul(&v[1]).add(&u[1].mul(&v[0]));
        let c22 = u[1].mul(&v[1]);
        (0..2)
            .map(|i| {
                c11.mul(&self.e11[i])
                    .add(&c12.mul(&self.e12[i]))
                    .add(&c22.mul(&self.e22[i]))
            })
            .collect()
    }
}

/// Multilinear monomial: a bracketing of distinct variables.
#[derive(Clone, Copy, Debug)]
pub enum Term {
    Var(u8),
    Mul(&'static Term, &'static Term),
}

impl Term {
    pub fn eval(&self, alg: &CommAlgebra2, args: &[Vec<Elem>]) -> Vec<Elem> {
        match self {
            Term::Var(i) => args[*i as usize].clone(),
            Term::Mul(a, b) => alg.mul(&a.eval(alg, args), &b.eval(alg, args)),
        }
    }
}

const X: Term = Term::Var(0);
const Y: Term = Term::Var(1);
const Z: Term = Term::Var(2);
const T: Term = Term::Var(3);

macro_rules! mul {
    ($a:expr, $b:expr) => {
        Term::Mul(&$a, &$b)
    };
}

const XY: Term = mul!(X, Y);
const YZ: Term = mul!(Y, Z);
const ZX: Term = mul!(Z, X);
const XZ: Term = mul!(X, Z);
const YT: Term = mul!(Y, T);
const XT: Term = mul!(X, T);
const ZT: Term = mul!(Z, T);
const YX: Term = mul!(Y, X);
const TY: Term = mul!(T, Y);
const TZ: Term = mul!(T, Z);
const TX: Term = mul!(T, X);

/// `(xy)z, (yz)x, (zx)y`.
pub const DEGREE3: [Term; 3] = [mul!(XY, Z), mul!(YZ, X), mul!(ZX, Y)];

/// The fifteen degree-4 bracketings, in the order fixed for
/// `lambda_1..lambda_15`.
pub const DEGREE4: [Term; 15] = [
    mul!(XY, ZT),
    mul!(XZ, YT),
    mul!(XT, YZ),
    mul!(mul!(X, YZ), T),
    mul!(mul!(Y, XZ), T),
    mul!(mul!(Z, YX), T),
    mul!(mul!(T, XY), Z),
    mul!(mul!(X, TY), Z),
    mul!(mul!(Y, XT), Z),
    mul!(mul!(Y, TZ), X),
    mul!(mul!(T, YZ), X),
    mul!(mul!(Z, TY), X),
    mul!(mul!(X, TZ), Y),
    mul!(mul!(Z, TX), Y),
    mul!(mul!(T, XZ), Y),
];

fn monomials(degree: usize) -> &'static [Term] {
    match degree {
        3 => &DEGREE3,
        4 => &DEGREE4,
        _ => panic!("only degrees 3 and 4 are supported"),
    }
}

/// The evaluation matrix: one pair of rows (two coordinates) per basis
/// tuple, one column per monomial.
fn evaluation_matrix(alg: &CommAlgebra2, degree: usize) -> Matrix {
    let field = alg.field().clone();
    let basis = [vec![field.one(), field.zero()], vec![field.zero(), field.one()]];
    let monos = monomials(degree);
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    let tuples = 1usize << degree;
    for mask in 0..tuples {
        let args: Vec<Vec<Elem>> = (0..degree).map(|k| basis[(mask >> k) & 1].clone()).collect();
        let evals: Vec<Vec<Elem>> = monos.iter().map(|t| t.eval(alg, &args)).collect();
        for coord in 0..2 {
            rows.push(evals.iter().map(|v| v[coord].clone()).collect());
        }
    }
    let flat: Vec<Elem> = rows.iter().flatten().cloned().collect();
    Matrix::new(&field, 2 * tuples, monos.len(), flat)
}

/// Kernel of the evaluation matrix: a deterministic echelon basis of the
/// coefficient vectors of the identities the algebra satisfies.
pub fn identity_space(alg: &CommAlgebra2, degree: usize) -> Vec<Vec<Elem>> {
    evaluation_matrix(alg, degree).kernel_basis()
}

/// Convenience wrapper for evolution algebras.
pub fn identity_space_of(m: &StructureMatrix, degree: usize) -> Vec<Vec<Elem>> {
    identity_space(&CommAlgebra2::from_structure(m), degree)
}

/// The associator `(u, v, w) = (uv)w - u(vw)` in an evolution algebra.
pub fn associator(m: &StructureMatrix, u: &[Elem], v: &[Elem], w: &[Elem]) -> Vec<Elem> {
    let lhs = m.multiply(&m.multiply(u, v), w);
    let rhs = m.multiply(u, &m.multiply(v, w));
    vec![lhs[0].sub(&rhs[0]), lhs[1].sub(&rhs[1])]
}

/// The named identities of degrees 3 and 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedIdentity {
    /// `(xy)z = x(yz)` (degree 3, written in the commutative monomials).
    Assoc3,
    /// `(xy)(zt) = (xt)(yz)`.
    Anis1,
    /// `(y(xz))t = (y(tz))x`.
    Anis2,
    /// `(xz)(yt) + (y,z,x)t + (x,t,y)z = (xt)(yz)`.
    Delmono1,
    /// `(xy)(zt) + (y,z,t)x + (x,z,y)t + (t,y,x)z = (xz)(yt)`.
    Delmono2,
    /// `(xy)(zt) = 0` (all three product-of-products variants).
    Castan1,
    /// The five degree-4 identities of the `A5` family, numbered 1..=5.
    Castan2(u8),
    /// The two degree-4 identities of the `A8` family, numbered 1..=2.
    Castan3(u8),
}

impl NamedIdentity {
    pub fn degree(&self) -> usize {
        match self {
            NamedIdentity::Assoc3 => 3,
            _ => 4,
        }
    }

    pub fn name(&self) -> alloc::string::String {
        match self {
            NamedIdentity::Assoc3 => "ASSOC3".into(),
            NamedIdentity::Anis1 => "ANIS1".into(),
            NamedIdentity::Anis2 => "ANIS2".into(),
            NamedIdentity::Delmono1 => "DELMONO1".into(),
            NamedIdentity::Delmono2 => "DELMONO2".into(),
            NamedIdentity::Castan1 => "CASTAN1".into(),
            NamedIdentity::Castan2(k) => format!("CASTAN2.{k}"),
            NamedIdentity::Castan3(k) => format!("CASTAN3.{k}"),
        }
    }

    pub fn all() -> Vec<NamedIdentity> {
        let mut v = vec![
            NamedIdentity::Assoc3,
            NamedIdentity::Anis1,
            NamedIdentity::Anis2,
            NamedIdentity::Delmono1,
            NamedIdentity::Delmono2,
            NamedIdentity::Castan1,
        ];
        for k in 1..=5 {
            v.push(NamedIdentity::Castan2(k));
        }
        for k in 1..=2 {
            v.push(NamedIdentity::Castan3(k));
        }
        v
    }

    /// Coefficient vectors (an identity `L = R` is stored as `L - R`); an
    /// identity may carry several vectors, all of which must vanish.
    pub fn lambda_vectors(&self, field: &Field) -> Vec<Vec<Elem>> {
        let dim = if self.degree() == 3 { 3 } else { 15 };
        let vec_of = |entries: &[(usize, i64)]| -> Vec<Elem> {
            let mut v = vec![field.zero(); dim];
            for &(idx, c) in entries {
                v[idx - 1] = field.int(c);
            }
            v
        };
        match self {
            NamedIdentity::Assoc3 => vec![vec_of(&[(1, 1), (2, -1)])],
            NamedIdentity::Anis1 => vec![vec_of(&[(1, 1), (3, -1)])],
            NamedIdentity::Anis2 => vec![vec_of(&[(5, 1), (10, -1)])],
            NamedIdentity::Delmono1 => {
                vec![vec_of(&[(2, 1), (3, -1), (4, 1), (5, -1), (8, -1), (9, 1)])]
            }
            NamedIdentity::Delmono2 => vec![vec_of(&[
                (1, 1),
                (2, -1),
                (4, -1),
                (5, 1),
                (7, -1),
                (8, 1),
                (10, -1),
                (11, 1),
            ])],
            NamedIdentity::Castan1 => {
                vec![vec_of(&[(1, 1)]), vec_of(&[(2, 1)]), vec_of(&[(3, 1)])]
            }
            NamedIdentity::Castan2(k) => vec![match k {
                1 => vec_of(&[(7, 1), (6, -1)]),
                2 => vec_of(&[(4, 1), (14, 1), (15, -1), (12, -1)]),
                3 => vec_of(&[(13, 1), (6, 1), (15, -1), (12, -1)]),
                4 => vec_of(&[(7, 1), (13, 1), (15, -1), (12, -1)]),
                5 => vec_of(&[(11, 1), (14, 1), (15, -1), (12, -1)]),
                other => panic!("CASTAN2 index {other} out of range"),
            }],
            NamedIdentity::Castan3(k) => vec![match k {
                1 => vec_of(&[(4, 1), (11, -1)]),
                2 => vec_of(&[(11, 1), (1, 1), (14, 1), (7, -1), (3, -1), (13, -1)]),
                other => panic!("CASTAN3 index {other} out of range"),
            }],
        }
    }
}

/// Evaluates a coefficient vector on all basis tuples.
fn vanishes(alg: &CommAlgebra2, degree: usize, lambda: &[Elem]) -> bool {
    let matrix = evaluation_matrix(alg, degree);
    (0..matrix.rows()).all(|r| {
        let mut acc = alg.field().zero();
        for c in 0..matrix.cols() {
            acc = acc.add(&matrix.get(r, c).mul(&lambda[c]));
        }
        acc.is_zero()
    })
}

/// True iff every coefficient vector of the identity vanishes on the
/// algebra.
pub fn check_identity(alg: &CommAlgebra2, id: NamedIdentity) -> bool {
    id.lambda_vectors(alg.field())
        .iter()
        .all(|l| vanishes(alg, id.degree(), l))
}

/// Convenience wrapper for evolution algebras.
pub fn check_identity_of(m: &StructureMatrix, id: NamedIdentity) -> bool {
    check_identity(&CommAlgebra2::from_structure(m), id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{canonical_matrix, Label};

    fn q() -> Field {
        Field::rationals()
    }

    fn dims(label: Label, params: &[i64]) -> (usize, usize) {
        let f = q();
        let ps: Vec<Elem> = params.iter().map(|&c| f.int(c)).collect();
        let m = canonical_matrix(&f, label, &ps);
        (identity_space_of(&m, 3).len(), identity_space_of(&m, 4).len())
    }

    #[test]
    fn kernel_dimensions_per_label() {
        assert_eq!(dims(Label::A0, &[]), (3, 15));
        assert_eq!(dims(Label::A1, &[]), (2, 14));
        assert_eq!(dims(Label::A2, &[5]), (0, 10));
        assert_eq!(dims(Label::A3, &[2]), (0, 5));
        assert_eq!(dims(Label::A4, &[2]), (0, 5));
        assert_eq!(dims(Label::A5ab, &[2, 3]), (0, 5));
        assert_eq!(dims(Label::A5, &[]), (0, 11));
        assert_eq!(dims(Label::A6, &[]), (3, 15));
        assert_eq!(dims(Label::A7, &[]), (2, 14));
        assert_eq!(dims(Label::A8, &[2]), (0, 8));
    }

    #[test]
    fn a1_degree3_kernel_is_the_associative_line() {
        let f = q();
        let m = canonical_matrix(&f, Label::A1, &[]);
        let k = identity_space_of(&m, 3);
        assert_eq!(k.len(), 2);
        // lambda_1 + lambda_2 + lambda_3 = 0 for every kernel vector
        for v in &k {
            assert!(v[0].add(&v[1]).add(&v[2]).is_zero());
        }
    }

    #[test]
    fn named_identities_hold_on_their_labels() {
        let f = q();
        let a1 = canonical_matrix(&f, Label::A1, &[]);
        let a2 = canonical_matrix(&f, Label::A2, &[f.int(7)]);
        let a5 = canonical_matrix(&f, Label::A5, &[]);
        let a8 = canonical_matrix(&f, Label::A8, &[f.int(3)]);
        assert!(check_identity_of(&a1, NamedIdentity::Assoc3));
        assert!(!check_identity_of(&a2, NamedIdentity::Assoc3));
        assert!(check_identity_of(&a2, NamedIdentity::Anis1));
        assert!(check_identity_of(&a2, NamedIdentity::Anis2));
        assert!(check_identity_of(&a5, NamedIdentity::Castan1));
        for k in 1..=5 {
            assert!(check_identity_of(&a5, NamedIdentity::Castan2(k)));
        }
        for k in 1..=2 {
            assert!(check_identity_of(&a8, NamedIdentity::Castan3(k)));
        }
        // (delmono) holds everywhere
        for (label, params) in crate::classify::canonical_examples(&f) {
            let m = canonical_matrix(&f, label, &params);
            assert!(check_identity_of(&m, NamedIdentity::Delmono1), "{label}");
            assert!(check_identity_of(&m, NamedIdentity::Delmono2), "{label}");
        }
    }

    #[test]
    fn assoc3_only_in_a1_among_perfect() {
        let f = q();
        for (label, params) in crate::classify::canonical_examples(&f) {
            if !label.is_perfect() {
                continue;
            }
            let m = canonical_matrix(&f, label, &params);
            let holds = check_identity_of(&m, NamedIdentity::Assoc3);
            assert_eq!(holds, label == Label::A1, "{label}");
        }
    }

    #[test]
    fn associator_examples() {
        let f = q();
        let a1 = canonical_matrix(&f, Label::A1, &[]);
        let e1 = vec![f.one(), f.zero()];
        let e2 = vec![f.zero(), f.one()];
        assert!(associator(&a1, &e1, &e1, &e2).iter().all(|e| e.is_zero()));
        let a6 = canonical_matrix(&f, Label::A6, &[]);
        assert!(associator(&a6, &e2, &e2, &e2).iter().all(|e| e.is_zero()));
        let a5ab = canonical_matrix(&f, Label::A5ab, &[f.int(2), f.int(3)]);
        assert!(associator(&a5ab, &e1, &e1, &e2).iter().any(|e| !e.is_zero()));
    }

    #[test]
    fn delmono_on_general_commutative_algebras() {
        // a non-evolution commutative algebra still satisfies (delmono)
        let f = q();
        let alg = CommAlgebra2::new(
            &f,
            vec![f.int(1), f.int(2)],
            vec![f.int(-1), f.int(3)],
            vec![f.int(4), f.int(0)],
        );
        assert!(check_identity(&alg, NamedIdentity::Delmono1));
        assert!(check_identity(&alg, NamedIdentity::Delmono2));
    }
}
