//! Classification of two-dimensional evolution algebras to canonical form,
//! parameter normalization in G_2 and G_3/~, and isomorphism testing with
//! explicit change-of-basis witnesses.
//!
//! Perfect algebras are rescaled along their edge pattern (classes D1..D5);
//! rank-one algebras split on `A^3` and `(A^2)^2`.  The witness accumulated
//! along the way always satisfies `change_basis(input, witness) ==
//! canonical_matrix()` exactly.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::StructureMatrix;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::radical::{factor_rational, has_nth_root};
use crate::square::{d_class, DClass, PseudoSquare};

/// Isomorphism class labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A0,
    A1,
    A2,
    A3,
    A4,
    A5ab,
    A5,
    A6,
    A7,
    A8,
}

impl Label {
    pub fn text(&self) -> &'static str {
        match self {
            Label::A0 => "A0",
            Label::A1 => "A1",
            Label::A2 => "A2",
            Label::A3 => "A3",
            Label::A4 => "A4",
            Label::A5ab => "A5ab",
            Label::A5 => "A5",
            Label::A6 => "A6",
            Label::A7 => "A7",
            Label::A8 => "A8",
        }
    }

    pub fn param_count(&self) -> usize {
        match self {
            Label::A2 | Label::A3 | Label::A4 | Label::A8 => 1,
            Label::A5ab => 2,
            _ => 0,
        }
    }

    /// True for the labels with `det(omega) != 0`.
    pub fn is_perfect(&self) -> bool {
        matches!(self, Label::A1 | Label::A2 | Label::A3 | Label::A4 | Label::A5ab)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// Canonical form of an algebra: label, normalized parameters and a
/// change-of-basis witness onto the canonical structure matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub label: Label,
    pub params: Vec<Elem>,
    pub witness: Matrix,
}

impl CanonicalForm {
    /// The canonical structure matrix of this label and parameters.
    pub fn canonical_matrix(&self) -> StructureMatrix {
        canonical_matrix(self.witness.field(), self.label, &self.params)
    }

    /// Short display like `A2(12)`.
    pub fn describe(&self) -> String {
        if self.params.is_empty() {
            self.label.text().to_string()
        } else {
            let ps: Vec<String> = self.params.iter().map(|p| format!("{p}")).collect();
            format!("{}({})", self.label.text(), ps.join(","))
        }
    }
}

/// The canonical structure matrix for a label.
pub fn canonical_matrix(field: &Field, label: Label, params: &[Elem]) -> StructureMatrix {
    assert_eq!(params.len(), label.param_count(), "parameter count for {label}");
    let o = field.one();
    let z = field.zero();
    let m = |e: [[Elem; 2]; 2]| {
        StructureMatrix::new(Matrix::new(
            field,
            2,
            2,
            vec![e[0][0].clone(), e[0][1].clone(), e[1][0].clone(), e[1][1].clone()],
        ))
    };
    match label {
        Label::A0 => m([[z.clone(), z.clone()], [z.clone(), z]]),
        Label::A1 => m([[o.clone(), z.clone()], [z, o]]),
        Label::A2 => m([[z.clone(), params[0].clone()], [o, z]]),
        Label::A3 => m([[o.clone(), params[0].clone()], [z, o]]),
        Label::A4 => m([[z, o.clone()], [params[0].clone(), o]]),
        Label::A5ab => m([[o.clone(), params[0].clone()], [params[1].clone(), o]]),
        Label::A5 => {
            let n = field.int(-1);
            m([[o.clone(), n.clone()], [n, o]])
        }
        Label::A6 => m([[z.clone(), o], [z.clone(), z]]),
        Label::A7 => m([[o, z.clone()], [z.clone(), z]]),
        Label::A8 => m([[o, params[0].clone()], [z.clone(), z]]),
    }
}

/// Result of an isomorphism test; the witness `P` (when present) satisfies
/// `change_basis(m1, P) == m2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub witness: Option<Matrix>,
}

/// Cube-free positive representative of the G_3 class of a nonzero
/// rational (the sign is absorbed: -1 is a cube).
fn cube_free_rational(field: &Field, x: &Elem) -> Result<Elem> {
    let r = x.as_rat().expect("rational value");
    let (_sign, factors) = factor_rational(r)?;
    let mut acc = BigInt::one();
    for (p, e) in factors {
        let m = e.rem_euclid(3);
        for _ in 0..m {
            acc = acc * &p;
        }
    }
    Ok(field.int_big(&acc))
}

/// Square-free representative of the G_2 class of a nonzero rational; the
/// sign survives because -1 is not a rational square.
fn square_free_rational(field: &Field, x: &Elem) -> Result<Elem> {
    let r = x.as_rat().expect("rational value");
    let (sign, factors) = factor_rational(r)?;
    let mut acc = BigInt::from(sign);
    for (p, e) in factors {
        if e.rem_euclid(2) == 1 {
            acc = acc * &p;
        }
    }
    Ok(field.int_big(&acc))
}

/// Representative of a G_n class over F_p: the smallest residue in
/// `{x * c^n}`.
fn gn_min_residue(x: &Elem, n: u32) -> Elem {
    let field = x.field();
    let p = field.finite_order().expect("prime field");
    let xv = x.as_mod().expect("residue");
    let mut best = xv;
    for c in 1..p {
        let mut cn = 1u64;
        for _ in 0..n {
            cn = (cn as u128 * c as u128 % p as u128) as u64;
        }
        let cand = (xv as u128 * cn as u128 % p as u128) as u64;
        best = best.min(cand);
    }
    field.int(best as i64)
}

/// G_n class representative of a constant-times-monomial function-field
/// element: exponents reduced mod n, base constant normalized.
fn gn_monomial_rep(x: &Elem, n: u32) -> Result<Elem> {
    let field = x.field();
    let fun = x.as_fun().expect("function-field value");
    if !(fun.num.is_single_term() && fun.den.is_single_term()) {
        return Err(Error::UndecidableRoot(format!(
            "G_{n} representative needs a constant-times-monomial value, got {}",
            x.serial()
        )));
    }
    let (en, cn) = fun.num.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
    let (ed, cd) = fun.den.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
    let mut expo = Vec::with_capacity(en.len());
    for i in 0..en.len() {
        let d = (en[i] as i64 - ed[i] as i64).rem_euclid(n as i64);
        expo.push(d as u16);
    }
    let c = cn.div(&cd);
    let c_rep = match &c {
        crate::mpoly::BaseVal::Rat(r) => {
            let q = Field::rationals();
            let qc = q.ratio_big(r.clone());
            let rep = if n == 3 { cube_free_rational(&q, &qc)? } else { square_free_rational(&q, &qc)? };
            field.from_base(crate::mpoly::BaseVal::Rat(rep.as_rat().unwrap().clone()))
        }
        crate::mpoly::BaseVal::Mod { v, p } => {
            let pf = Field::prime(*p).expect("characteristic is prime");
            let rep = gn_min_residue(&pf.int(*v as i64), n);
            field.int(rep.as_mod().unwrap() as i64)
        }
    };
    let zero_expo = vec![0u16; expo.len()];
    let mono = field.monomial_elem(field.base_one(), &expo, &zero_expo);
    Ok(c_rep.mul(&mono))
}

/// G_3 class representative (before folding with the square class).
fn g3_rep(x: &Elem) -> Result<Elem> {
    let field = x.field();
    if x.as_rat().is_some() {
        cube_free_rational(field, x)
    } else if x.as_mod().is_some() {
        Ok(gn_min_residue(x, 3))
    } else {
        gn_monomial_rep(x, 3)
    }
}

/// Canonical representative of the class of `alpha` in G_3/~ (`a ~ a^2`).
pub fn normalize_a2(alpha: &Elem) -> Result<Elem> {
    assert!(!alpha.is_zero());
    let r1 = g3_rep(alpha)?;
    let r2 = g3_rep(&alpha.mul(alpha))?;
    Ok(if r2.order_cmp(&r1).is_lt() { r2 } else { r1 })
}

/// Canonical representative of the class of `alpha` in G_2.
pub fn normalize_a8(alpha: &Elem) -> Result<Elem> {
    assert!(!alpha.is_zero());
    let field = alpha.field();
    if alpha.as_rat().is_some() {
        square_free_rational(field, alpha)
    } else if alpha.as_mod().is_some() {
        Ok(gn_min_residue(alpha, 2))
    } else {
        gn_monomial_rep(alpha, 2)
    }
}

/// Public parameter normalization per label (A2, A8, and pair ordering for
/// A5ab); other labels pass through.
pub fn normalize_param(label: Label, params: &[Elem]) -> Result<Vec<Elem>> {
    assert_eq!(params.len(), label.param_count());
    match label {
        Label::A2 => Ok(vec![normalize_a2(&params[0])?]),
        Label::A8 => Ok(vec![normalize_a8(&params[0])?]),
        Label::A5ab => {
            let (a, b) = (params[0].clone(), params[1].clone());
            if b.order_cmp(&a).is_lt() {
                Ok(vec![b, a])
            } else {
                Ok(vec![a, b])
            }
        }
        _ => Ok(params.to_vec()),
    }
}

/// A change of basis carrying `A2(from)` onto `A2(to)`; the two parameters
/// must be ~-equivalent in G_3.
fn a2_connection(field: &Field, from: &Elem, to: &Elem) -> Result<Matrix> {
    let t = to.checked_div(from)?;
    if let Some(w) = has_nth_root(&t, 3)? {
        return Ok(Matrix::new(
            field,
            2,
            2,
            vec![w.clone(), field.zero(), field.zero(), w.mul(&w)],
        ));
    }
    let t2 = to.checked_div(&from.mul(from))?;
    if let Some(k) = has_nth_root(&t2, 3)? {
        return Ok(Matrix::new(
            field,
            2,
            2,
            vec![field.zero(), k.mul(&k).mul(from), k, field.zero()],
        ));
    }
    Err(Error::UndecidableRoot(format!(
        "no cube scaling connects A2 parameters {from} and {to}"
    )))
}

/// A change of basis carrying `A8(from)` onto `A8(to)`.
fn a8_connection(field: &Field, from: &Elem, to: &Elem) -> Result<Matrix> {
    let t = to.checked_div(from)?;
    let tau = has_nth_root(&t, 2)?.ok_or_else(|| {
        Error::UndecidableRoot(format!("no square scaling connects A8 parameters {from} and {to}"))
    })?;
    Ok(Matrix::new(field, 2, 2, vec![field.one(), field.zero(), field.zero(), tau]))
}

fn diag(field: &Field, a: &Elem, d: &Elem) -> Matrix {
    Matrix::new(field, 2, 2, vec![a.clone(), field.zero(), field.zero(), d.clone()])
}

fn swap_matrix(field: &Field) -> Matrix {
    Matrix::new(field, 2, 2, vec![field.zero(), field.one(), field.one(), field.zero()])
}

/// Scalar `c` with `v = c * u` for parallel vectors (`u` nonzero).
fn ratio_on_line(u: &[Elem], v: &[Elem]) -> Elem {
    let i = u.iter().position(|e| !e.is_zero()).expect("nonzero vector");
    v[i].checked_div(&u[i]).expect("nonzero pivot")
}

/// Classifies the algebra: label, normalized parameters, and a witness with
/// `change_basis(m, witness) == canonical_matrix`.
pub fn classify(m: &StructureMatrix) -> Result<CanonicalForm> {
    let field = m.field();
    let rank = m.omega().rank();
    if rank == 0 {
        return Ok(CanonicalForm { label: Label::A0, params: vec![], witness: Matrix::identity(field, 2) });
    }
    let form = if rank == 2 { classify_perfect(m)? } else { classify_rank_one(m)? };
    debug_assert_eq!(m.change_basis(&form.witness).expect("witness is natural"), form.canonical_matrix());
    Ok(form)
}

fn classify_perfect(m: &StructureMatrix) -> Result<CanonicalForm> {
    let field = m.field();
    let ps = PseudoSquare::of(m);
    let class = d_class(ps);
    let mut witness = Matrix::identity(field, 2);
    let mut cur = m.clone();
    if ps != class.representative() {
        let sw = swap_matrix(field);
        cur = cur.change_basis(&sw)?;
        witness = witness.mul(&sw);
    }
    let w = |i: usize, j: usize| cur.entry(i, j).clone();
    let inv = |e: Elem| e.inv().expect("edge entries are nonzero");
    let (label, raw_params, step) = match class {
        DClass::D1 => (Label::A1, vec![], diag(field, &inv(w(0, 0)), &inv(w(1, 1)))),
        DClass::D2 => {
            let alpha = w(0, 1).mul(&w(1, 0)).mul(&w(1, 0));
            (Label::A2, vec![alpha], diag(field, &field.one(), &w(1, 0)))
        }
        DClass::D3 => {
            let alpha = w(0, 0).mul(&w(0, 1)).mul(&inv(w(1, 1)).pow(2).unwrap());
            (Label::A3, vec![alpha], diag(field, &inv(w(0, 0)), &inv(w(1, 1))))
        }
        DClass::D4 => {
            let alpha = w(1, 0).mul(&w(0, 1).pow(2).unwrap()).mul(&inv(w(1, 1)).pow(3).unwrap());
            let p11 = w(0, 1).mul(&inv(w(1, 1)).pow(2).unwrap());
            (Label::A4, vec![alpha], diag(field, &p11, &inv(w(1, 1))))
        }
        DClass::D5 => {
            let alpha = w(0, 1).mul(&w(0, 0)).mul(&inv(w(1, 1)).pow(2).unwrap());
            let beta = w(1, 0).mul(&w(1, 1)).mul(&inv(w(0, 0)).pow(2).unwrap());
            (Label::A5ab, vec![alpha, beta], diag(field, &inv(w(0, 0)), &inv(w(1, 1))))
        }
        other => unreachable!("perfect patterns lie in D1..D5, got {other:?}"),
    };
    witness = witness.mul(&step);

    // parameter normalization, with its change of basis folded into the
    // witness
    match label {
        Label::A2 => {
            let raw = raw_params[0].clone();
            let canon = normalize_a2(&raw)?;
            if canon != raw {
                witness = witness.mul(&a2_connection(field, &raw, &canon)?);
            }
            Ok(CanonicalForm { label, params: vec![canon], witness })
        }
        Label::A5ab => {
            let sorted = normalize_param(Label::A5ab, &raw_params)?;
            if sorted != raw_params {
                witness = witness.mul(&swap_matrix(field));
            }
            Ok(CanonicalForm { label, params: sorted, witness })
        }
        _ => Ok(CanonicalForm { label, params: raw_params, witness }),
    }
}

fn classify_rank_one(m: &StructureMatrix) -> Result<CanonicalForm> {
    let field = m.field();
    let report = m.power_report();
    let u = report.a2.line_vector().expect("rank one").clone();
    let e1 = vec![field.one(), field.zero()];
    let e2 = vec![field.zero(), field.one()];

    // f(x) u = x u on the line A^2; f(e_i) determines f
    let fe = |x: &[Elem]| -> Elem {
        let prod = m.multiply(x, &u);
        if prod.iter().all(|e| e.is_zero()) {
            field.zero()
        } else {
            ratio_on_line(&u, &prod)
        }
    };
    let f1 = fe(&e1);
    let f2 = fe(&e2);

    if f1.is_zero() && f2.is_zero() {
        // A u = 0: the A6 case; take v independent of u, scale u to v^2
        let v = if u[0].is_zero() { e1 } else { e2 };
        let v2 = m.multiply(&v, &v);
        let alpha = ratio_on_line(&u, &v2);
        assert!(!alpha.is_zero(), "A^2 is spanned by v^2 here");
        let u1 = vec![alpha.mul(&u[0]), alpha.mul(&u[1])];
        let witness = Matrix::new(field, 2, 2, vec![u1[0].clone(), v[0].clone(), u1[1].clone(), v[1].clone()]);
        return Ok(CanonicalForm { label: Label::A6, params: vec![], witness });
    }

    let u_sq = m.multiply(&u, &u);
    let kappa = if u_sq.iter().all(|e| e.is_zero()) { field.zero() } else { ratio_on_line(&u, &u_sq) };

    if kappa.is_zero() {
        // u^2 = 0, Au != 0: the A5 case
        let mut v = if !f1.is_zero() {
            vec![f1.inv().unwrap(), field.zero()]
        } else {
            vec![field.zero(), f2.inv().unwrap()]
        };
        let k_of = |v: &[Elem]| -> Elem {
            let v2 = m.multiply(v, v);
            if v2.iter().all(|e| e.is_zero()) {
                field.zero()
            } else {
                ratio_on_line(&u, &v2)
            }
        };
        let mut k = k_of(&v);
        if k.is_zero() {
            // shift along ker f; the square along that line is nonconstant
            let w = vec![f2.clone(), f1.neg()];
            v = vec![v[0].add(&w[0]), v[1].add(&w[1])];
            k = k_of(&v);
        }
        assert!(!k.is_zero(), "some v with uv = u has nonzero square");
        // e = v, f = v - k u
        let fv = vec![v[0].sub(&k.mul(&u[0])), v[1].sub(&k.mul(&u[1]))];
        let witness = Matrix::new(field, 2, 2, vec![v[0].clone(), fv[0].clone(), v[1].clone(), fv[1].clone()]);
        return Ok(CanonicalForm { label: Label::A5, params: vec![], witness });
    }

    // u^2 != 0 and Au != 0: idempotent u' = u / kappa, v spans ker f
    let ki = kappa.inv().unwrap();
    let u1 = vec![ki.mul(&u[0]), ki.mul(&u[1])];
    let v = crate::linalg::normalize_leading_one(vec![f2.clone(), f1.neg()]);
    let v2 = m.multiply(&v, &v);
    let beta = if v2.iter().all(|e| e.is_zero()) { field.zero() } else { ratio_on_line(&u1, &v2) };
    let witness = Matrix::new(field, 2, 2, vec![u1[0].clone(), v[0].clone(), u1[1].clone(), v[1].clone()]);
    if beta.is_zero() {
        return Ok(CanonicalForm { label: Label::A7, params: vec![], witness });
    }
    let canon = normalize_a8(&beta)?;
    let witness = if canon != beta {
        witness.mul(&a8_connection(field, &beta, &canon)?)
    } else {
        witness
    };
    Ok(CanonicalForm { label: Label::A8, params: vec![canon], witness })
}

/// Isomorphism decision with witness: classify both sides and compare the
/// normalized canonical forms; the witness composes the two classification
/// witnesses.
pub fn isomorphic(m1: &StructureMatrix, m2: &StructureMatrix) -> Result<IsoResult> {
    assert!(m1.field() == m2.field(), "isomorphism testing needs a common field");
    let c1 = classify(m1)?;
    let c2 = classify(m2)?;
    if c1.label != c2.label || c1.params != c2.params {
        return Ok(IsoResult { isomorphic: false, witness: None });
    }
    let witness = c1.witness.mul(&c2.witness.inverse()?);
    debug_assert_eq!(m1.change_basis(&witness)?, *m2);
    Ok(IsoResult { isomorphic: true, witness: Some(witness) })
}

/// The ten canonical labels with small default parameters, used by census
/// enumerations and test suites.
pub fn canonical_examples(field: &Field) -> Vec<(Label, Vec<Elem>)> {
    let two = field.int(2);
    let three = field.int(3);
    vec![
        (Label::A0, vec![]),
        (Label::A1, vec![]),
        (Label::A2, vec![two.clone()]),
        (Label::A3, vec![two.clone()]),
        (Label::A4, vec![two.clone()]),
        (Label::A5ab, vec![two.clone(), three]),
        (Label::A5, vec![]),
        (Label::A6, vec![]),
        (Label::A7, vec![]),
        (Label::A8, vec![two]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn check(m: &StructureMatrix, label: Label, params: &[Elem]) -> CanonicalForm {
        let c = classify(m).unwrap();
        assert_eq!(c.label, label, "label of {m}");
        assert_eq!(c.params, params.to_vec(), "params of {m}");
        assert_eq!(m.change_basis(&c.witness).unwrap(), c.canonical_matrix());
        c
    }

    #[test]
    fn identity_classifies_to_a1_with_identity_witness() {
        let f = q();
        let c = check(&StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]), Label::A1, &[]);
        assert_eq!(c.witness, Matrix::identity(&f, 2));
    }

    #[test]
    fn d2_pattern_normalizes_parameter() {
        let f = q();
        // [[0,3],[2,0]]: raw alpha = 3*4 = 12, already the canonical rep
        let m = StructureMatrix::from_i64(&f, [[0, 3], [2, 0]]);
        check(&m, Label::A2, &[f.int(12)]);
        // [[0,8],[1,0]]: 8 is a cube, so the class is trivial
        let m = StructureMatrix::from_i64(&f, [[0, 8], [1, 0]]);
        check(&m, Label::A2, &[f.one()]);
    }

    #[test]
    fn nonperfect_canonical_forms() {
        let f = q();
        check(&StructureMatrix::from_i64(&f, [[1, -1], [-1, 1]]), Label::A5, &[]);
        check(&StructureMatrix::from_i64(&f, [[0, 1], [0, 0]]), Label::A6, &[]);
        check(&StructureMatrix::from_i64(&f, [[1, 0], [0, 0]]), Label::A7, &[]);
        check(&StructureMatrix::from_i64(&f, [[1, 2], [0, 0]]), Label::A8, &[f.int(2)]);
        check(&StructureMatrix::from_i64(&f, [[0, 0], [0, 0]]), Label::A0, &[]);
        // A8 with a square-divisible parameter normalizes: 8 ~ 2 in G_2
        check(&StructureMatrix::from_i64(&f, [[1, 8], [0, 0]]), Label::A8, &[f.int(2)]);
    }

    #[test]
    fn rotated_patterns_pre_swap() {
        let f = q();
        // {L,B,R} is the rotated member of D3
        let m = StructureMatrix::from_i64(&f, [[1, 0], [5, 1]]);
        let c = check(&m, Label::A3, &[f.int(5)]);
        assert_eq!(m.change_basis(&c.witness).unwrap(), c.canonical_matrix());
        // {L,T,B} is the rotated member of D4
        let m = StructureMatrix::from_i64(&f, [[1, 1], [7, 0]]);
        assert_eq!(classify(&m).unwrap().label, Label::A4);
    }

    #[test]
    fn a5ab_pairs_sort() {
        let f = q();
        let m = StructureMatrix::from_i64(&f, [[1, 3], [2, 1]]);
        check(&m, Label::A5ab, &[f.int(2), f.int(3)]);
        let m2 = StructureMatrix::from_i64(&f, [[1, 2], [3, 1]]);
        check(&m2, Label::A5ab, &[f.int(2), f.int(3)]);
        let iso = isomorphic(&m, &m2).unwrap();
        assert!(iso.isomorphic);
    }

    #[test]
    fn normalize_param_examples() {
        let f = q();
        assert_eq!(normalize_a2(&f.int(8)).unwrap(), f.one());
        assert_eq!(normalize_a2(&f.int(12)).unwrap(), f.int(12));
        assert_eq!(normalize_a2(&f.int(18)).unwrap(), f.int(12));
        assert_eq!(normalize_a8(&f.int(8)).unwrap(), f.int(2));
        assert_eq!(normalize_a8(&f.int(-4)).unwrap(), f.int(-1));
        let pair = normalize_param(Label::A5ab, &[f.int(3), f.int(2)]).unwrap();
        assert_eq!(pair, vec![f.int(2), f.int(3)]);
    }

    #[test]
    fn iso_a2_cube_classes() {
        let f = q();
        let m1 = canonical_matrix(&f, Label::A2, &[f.int(1)]);
        let m8 = canonical_matrix(&f, Label::A2, &[f.int(8)]);
        let iso = isomorphic(&m1, &m8).unwrap();
        assert!(iso.isomorphic);
        let w = iso.witness.unwrap();
        assert_eq!(m1.change_basis(&w).unwrap(), m8);
    }

    #[test]
    fn iso_a8_square_classes() {
        let f = q();
        let m1 = canonical_matrix(&f, Label::A8, &[f.int(1)]);
        let m2 = canonical_matrix(&f, Label::A8, &[f.int(2)]);
        assert!(!isomorphic(&m1, &m2).unwrap().isomorphic);
        let m4 = canonical_matrix(&f, Label::A8, &[f.int(4)]);
        assert!(isomorphic(&m1, &m4).unwrap().isomorphic);
    }

    #[test]
    fn daniel_example_function_field() {
        let f = Field::parse("Q(x,y)").unwrap();
        let x = f.param("x").unwrap();
        let y = f.param("y").unwrap();
        let mx = canonical_matrix(&f, Label::A2, &[x]);
        let my = canonical_matrix(&f, Label::A2, &[y]);
        let iso = isomorphic(&mx, &my).unwrap();
        assert!(!iso.isomorphic);
    }

    #[test]
    fn classify_over_f5() {
        let f5 = Field::prime(5).unwrap();
        // cube map is a bijection on F5 (gcd(3,4)=1): all A2 classes collapse
        let m = canonical_matrix(&f5, Label::A2, &[f5.int(3)]);
        let c = classify(&m).unwrap();
        assert_eq!(c.label, Label::A2);
        assert_eq!(c.params, vec![f5.int(1)]);
        // squares in F5 are {1,4}: G_2 reps are 1 and 2
        assert_eq!(normalize_a8(&f5.int(4)).unwrap(), f5.int(1));
        assert_eq!(normalize_a8(&f5.int(3)).unwrap(), f5.int(2));
    }
}
