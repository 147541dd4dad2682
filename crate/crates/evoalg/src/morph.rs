//! Automorphism groups (as structured descriptions with element lists or
//! parametric families) and derivation spaces of two-dimensional evolution
//! algebras, plus exhaustive oracles over small prime fields.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::StructureMatrix;
use crate::classify::{classify, Label};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::radical::roots_of_binomial;

/// Group shape tags.  `Gl2` covers the zero algebra, whose automorphisms
/// are all invertible matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupTag {
    Trivial,
    Z2,
    Z3,
    S3,
    KPlus,
    KTimes,
    Aff1,
    Gl2,
    FiniteList,
}

impl GroupTag {
    pub fn text(&self) -> &'static str {
        match self {
            GroupTag::Trivial => "trivial",
            GroupTag::Z2 => "Z2",
            GroupTag::Z3 => "Z3",
            GroupTag::S3 => "S3",
            GroupTag::KPlus => "K+",
            GroupTag::KTimes => "Kx",
            GroupTag::Aff1 => "Aff1",
            GroupTag::Gl2 => "GL2",
            GroupTag::FiniteList => "finite",
        }
    }
}

/// Parametric family shapes for the infinite groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `[[a, 1-a], [1-a, a]]`, `2a != 1` unless char 2 (the A5 family).
    ExchangeLine,
    /// `[[a^2, b], [0, a]]`, `a != 0` (the A6 family).
    AffineSquares,
    /// `diag(1, a)`, `a != 0` (the A7 family).
    DiagTorus,
    /// Any invertible matrix (the zero algebra).
    AllInvertible,
}

/// A parametric automorphism family, conjugated back to the input basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutFamily {
    pub kind: FamilyKind,
    conjugator: Matrix,
}

impl AutFamily {
    pub fn param_count(&self) -> usize {
        match self.kind {
            FamilyKind::ExchangeLine | FamilyKind::DiagTorus => 1,
            FamilyKind::AffineSquares => 2,
            FamilyKind::AllInvertible => 4,
        }
    }

    /// Evaluates the family at parameter values and conjugates into the
    /// input basis.
    pub fn sample(&self, params: &[Elem]) -> Result<Matrix> {
        let field = self.conjugator.field();
        if params.len() != self.param_count() {
            return Err(Error::Parse(format!(
                "family takes {} parameter(s), got {}",
                self.param_count(),
                params.len()
            )));
        }
        let raw = match self.kind {
            FamilyKind::ExchangeLine => {
                let a = &params[0];
                let b = field.one().sub(a);
                Matrix::new(field, 2, 2, vec![a.clone(), b.clone(), b, a.clone()])
            }
            FamilyKind::AffineSquares => {
                let (a, b) = (&params[0], &params[1]);
                Matrix::new(field, 2, 2, vec![a.mul(a), b.clone(), field.zero(), a.clone()])
            }
            FamilyKind::DiagTorus => {
                let a = &params[0];
                Matrix::new(field, 2, 2, vec![field.one(), field.zero(), field.zero(), a.clone()])
            }
            FamilyKind::AllInvertible => Matrix::new(field, 2, 2, params.to_vec()),
        };
        if raw.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(self.conjugator.mul(&raw).mul(&self.conjugator.inverse()?))
    }

    /// Textual description of the family in the canonical basis.
    pub fn describe(&self) -> String {
        let base = match self.kind {
            FamilyKind::ExchangeLine => "[[a,1-a],[1-a,a]] with 2a != 1 (all a in char 2)",
            FamilyKind::AffineSquares => "[[a^2,b],[0,a]] with a != 0",
            FamilyKind::DiagTorus => "[[1,0],[0,a]] with a != 0",
            FamilyKind::AllInvertible => "all invertible 2x2 matrices",
        };
        if self.conjugator == Matrix::identity(self.conjugator.field(), 2) {
            base.to_string()
        } else {
            format!("W * {base} * W^-1 for W = {}", self.conjugator.to_row_text())
        }
    }
}

/// Structured description of an automorphism group.
#[derive(Clone, Debug)]
pub struct GroupDescription {
    pub tag: GroupTag,
    /// Full element list; present for finite groups and over finite fields.
    pub elements: Option<Vec<Matrix>>,
    /// Parametric family; present when the group is generically infinite.
    pub family: Option<AutFamily>,
}

impl GroupDescription {
    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(|e| e.len())
    }
}

/// Direct check that `p` is an algebra automorphism: the images must keep
/// zero cross products and map squares to squares.
pub fn is_automorphism(m: &StructureMatrix, p: &Matrix) -> Result<bool> {
    if p.det().is_zero() {
        return Err(Error::Singular);
    }
    let c1 = p.col(0);
    let c2 = p.col(1);
    if m.multiply(&c1, &c2).iter().any(|e| !e.is_zero()) {
        return Ok(false);
    }
    for j in 0..2 {
        let img = p.col(j);
        let img_sq = m.multiply(&img, &img);
        // phi(e_j^2) = w1j phi(e1) + w2j phi(e2)
        let want: Vec<Elem> = (0..2)
            .map(|i| m.entry(0, j).mul(p.get(i, 0)).add(&m.entry(1, j).mul(p.get(i, 1))))
            .collect();
        if img_sq != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive automorphism enumeration over F_p, p <= 7.
pub fn brute_force_automorphisms(m: &StructureMatrix) -> Result<Vec<Matrix>> {
    let p = m
        .field()
        .finite_order()
        .ok_or_else(|| Error::UnsupportedField("enumeration needs a finite field".to_string()))?;
    if p > 7 {
        return Err(Error::FieldTooLarge { p, limit: 7 });
    }
    let field = m.field();
    let elems = field.elements()?;
    let mut out = Vec::new();
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    let cand = Matrix::new(field, 2, 2, vec![a.clone(), b.clone(), c.clone(), d.clone()]);
                    if cand.det().is_zero() {
                        continue;
                    }
                    if is_automorphism(m, &cand)? {
                        out.push(cand);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn matrix_cmp(a: &Matrix, b: &Matrix) -> Ordering {
    for i in 0..2 {
        for j in 0..2 {
            match a.get(i, j).order_cmp(b.get(i, j)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    Ordering::Equal
}

/// Sorts and deduplicates an element list into canonical order.
pub fn sort_elements(mut v: Vec<Matrix>) -> Vec<Matrix> {
    v.sort_by(matrix_cmp);
    v.dedup();
    v
}

fn conjugate_all(w: &Matrix, elems: Vec<Matrix>) -> Vec<Matrix> {
    let w_inv = w.inverse().expect("classification witnesses are invertible");
    sort_elements(elems.into_iter().map(|q| w.mul(&q).mul(&w_inv)).collect())
}

/// Enumerates a parametric family over a finite field.
fn enumerate_family(field: &Field, kind: FamilyKind, conjugator: &Matrix) -> Result<Vec<Matrix>> {
    let fam = AutFamily { kind, conjugator: conjugator.clone() };
    let elems = field.elements()?;
    let mut out = Vec::new();
    let params: Vec<Vec<Elem>> = match kind {
        FamilyKind::ExchangeLine | FamilyKind::DiagTorus => elems.iter().map(|a| vec![a.clone()]).collect(),
        FamilyKind::AffineSquares => {
            let mut v = Vec::new();
            for a in &elems {
                for b in &elems {
                    v.push(vec![a.clone(), b.clone()]);
                }
            }
            v
        }
        FamilyKind::AllInvertible => {
            let mut v = Vec::new();
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        for d in &elems {
                            v.push(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
                        }
                    }
                }
            }
            v
        }
    };
    for p in params {
        match fam.sample(&p) {
            Ok(q) => out.push(q),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(sort_elements(out))
}

/// The automorphism group, computed per classification label and carried
/// back to the input basis by the classification witness.
pub fn automorphism_group(m: &StructureMatrix) -> Result<GroupDescription> {
    let field = m.field();
    let cf = classify(m)?;
    let w = cf.witness.clone();
    let identity = Matrix::identity(field, 2);
    let swap = Matrix::new(field, 2, 2, vec![field.zero(), field.one(), field.one(), field.zero()]);
    let finite = field.finite_order().is_some();

    let finite_group = |tag: GroupTag, elems: Vec<Matrix>| -> GroupDescription {
        GroupDescription { tag, elements: Some(conjugate_all(&w, elems)), family: None }
    };
    let family_group = |tag: GroupTag, kind: FamilyKind| -> Result<GroupDescription> {
        let family = AutFamily { kind, conjugator: w.clone() };
        let elements = if finite { Some(enumerate_family(field, kind, &w)?) } else { None };
        Ok(GroupDescription { tag, elements, family: Some(family) })
    };

    match cf.label {
        Label::A0 => family_group(GroupTag::Gl2, FamilyKind::AllInvertible),
        Label::A1 => Ok(finite_group(GroupTag::Z2, vec![identity, swap])),
        Label::A2 => {
            let alpha = cf.params[0].clone();
            let s1 = roots_of_binomial(&field.one(), 3)?;
            let s_alpha = roots_of_binomial(&alpha, 3)?;
            let mut elems = Vec::new();
            for omega in &s1 {
                elems.push(Matrix::new(
                    field,
                    2,
                    2,
                    vec![omega.clone(), field.zero(), field.zero(), omega.mul(omega)],
                ));
            }
            for sigma in &s_alpha {
                elems.push(Matrix::new(
                    field,
                    2,
                    2,
                    vec![field.zero(), sigma.clone(), sigma.inv()?, field.zero()],
                ));
            }
            let tag = match (s1.len(), s_alpha.len()) {
                (1, 0) => GroupTag::Trivial,
                (1, 1) => GroupTag::Z2,
                (3, 0) => GroupTag::Z3,
                (3, 3) => GroupTag::S3,
                other => unreachable!("root counts {other:?} cannot occur"),
            };
            Ok(finite_group(tag, elems))
        }
        Label::A3 | Label::A4 => Ok(finite_group(GroupTag::Trivial, vec![identity])),
        Label::A5ab => {
            if cf.params[0] == cf.params[1] {
                Ok(finite_group(GroupTag::Z2, vec![identity, swap]))
            } else {
                Ok(finite_group(GroupTag::Trivial, vec![identity]))
            }
        }
        Label::A5 => {
            let tag = if field.characteristic() == 2 { GroupTag::KPlus } else { GroupTag::KTimes };
            family_group(tag, FamilyKind::ExchangeLine)
        }
        Label::A6 => family_group(GroupTag::Aff1, FamilyKind::AffineSquares),
        Label::A7 => family_group(GroupTag::KTimes, FamilyKind::DiagTorus),
        Label::A8 => {
            if field.characteristic() == 2 {
                Ok(finite_group(GroupTag::Trivial, vec![identity]))
            } else {
                let refl = Matrix::new(field, 2, 2, vec![field.one(), field.zero(), field.zero(), field.int(-1)]);
                Ok(finite_group(GroupTag::Z2, vec![identity, refl]))
            }
        }
    }
}

/// Space of derivations, spanned by matrices `[[a, x], [b, y]]` acting by
/// `d(e1) = a e1 + b e2`, `d(e2) = x e1 + y e2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub basis: Vec<Matrix>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solves the six Leibniz equations on the natural basis, for arbitrary
/// (perfect or not) structure matrices.
pub fn derivation_space(m: &StructureMatrix) -> DerivationSpace {
    let field = m.field();
    let w = |i: usize, j: usize| m.entry(i, j).clone();
    let z = || field.zero();
    let two = field.int(2);
    // unknowns ordered (a, b, x, y)
    let rows: Vec<Vec<Elem>> = vec![
        // e1-component of d(e1^2) = 2 d(e1) e1
        vec![w(0, 0).neg(), z(), w(1, 0), z()],
        // e2-component
        vec![two.mul(&w(1, 0)).neg(), w(0, 0), z(), w(1, 0)],
        // e1-component of d(e2^2) = 2 d(e2) e2
        vec![w(0, 1), z(), w(1, 1), two.mul(&w(0, 1)).neg()],
        // e2-component
        vec![z(), w(0, 1), z(), w(1, 1).neg()],
        // d(e1 e2) = 0
        vec![z(), w(0, 1), w(0, 0), z()],
        vec![z(), w(1, 1), w(1, 0), z()],
    ];
    let flat: Vec<Elem> = rows.into_iter().flatten().collect();
    let system = Matrix::new(field, 6, 4, flat);
    let basis = system
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let v = integral_scale(field, v);
            Matrix::new(field, 2, 2, vec![v[0].clone(), v[2].clone(), v[1].clone(), v[3].clone()])
        })
        .collect();
    DerivationSpace { basis }
}

/// Over Q, rescales a vector to coprime integer entries with positive
/// leading coordinate; other fields keep the leading-one form.
fn integral_scale(field: &Field, v: Vec<Elem>) -> Vec<Elem> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};
    let rats: Option<Vec<_>> = v.iter().map(|e| e.as_rat().cloned()).collect();
    let Some(rats) = rats else { return v };
    let mut den_lcm = BigInt::from(1);
    for r in &rats {
        den_lcm = den_lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &den_lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return v;
    }
    let sign = ints.iter().find(|n| !n.is_zero()).map(|n| n.is_negative()).unwrap_or(false);
    let scale = if sign { -g } else { g };
    ints.iter().map(|n| field.int_big(&(n / &scale))).collect()
}

/// Applies a derivation matrix to a coordinate vector.
pub fn apply_derivation(d: &Matrix, v: &[Elem]) -> Vec<Elem> {
    d.mul_vec(v)
}

/// Leibniz check `d(uv) = d(u)v + u d(v)` for a candidate derivation.
pub fn satisfies_leibniz(m: &StructureMatrix, d: &Matrix, u: &[Elem], v: &[Elem]) -> bool {
    let lhs = apply_derivation(d, &m.multiply(u, v));
    let rhs1 = m.multiply(&apply_derivation(d, u), v);
    let rhs2 = m.multiply(u, &apply_derivation(d, v));
    lhs.iter()
        .zip(rhs1.iter().zip(&rhs2))
        .all(|(l, (r1, r2))| *l == r1.add(r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical_matrix;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn automorphism_check_examples() {
        let f = q();
        let a1 = StructureMatrix::from_i64(&f, [[1, 0], [0, 1]]);
        let swap = Matrix::from_i64_2x2(&f, [[0, 1], [1, 0]]);
        assert!(is_automorphism(&a1, &swap).unwrap());
        let a3 = StructureMatrix::from_i64(&f, [[1, 2], [0, 1]]);
        assert!(!is_automorphism(&a3, &swap).unwrap());
        let a7 = StructureMatrix::from_i64(&f, [[1, 0], [0, 0]]);
        let d = Matrix::from_i64_2x2(&f, [[1, 0], [0, 5]]);
        assert!(is_automorphism(&a7, &d).unwrap());
        let sing = Matrix::from_i64_2x2(&f, [[1, 1], [1, 1]]);
        assert!(matches!(is_automorphism(&a1, &sing), Err(Error::Singular)));
    }

    #[test]
    fn a1_group_is_z2() {
        let f = q();
        let g = automorphism_group(&StructureMatrix::from_i64(&f, [[1, 0], [0, 1]])).unwrap();
        assert_eq!(g.tag, GroupTag::Z2);
        assert_eq!(g.order(), Some(2));
    }

    #[test]
    fn a2_group_over_f7_is_s3() {
        let f7 = Field::prime(7).unwrap();
        let m = canonical_matrix(&f7, Label::A2, &[f7.one()]);
        let g = automorphism_group(&m).unwrap();
        assert_eq!(g.tag, GroupTag::S3);
        let elems = g.elements.unwrap();
        assert_eq!(elems.len(), 6);
        let brute = sort_elements(brute_force_automorphisms(&m).unwrap());
        assert_eq!(elems, brute);
        // nonabelian: some pair fails to commute
        let noncomm = elems
            .iter()
            .any(|a| elems.iter().any(|b| a.mul(b) != b.mul(a)));
        assert!(noncomm);
    }

    #[test]
    fn a5_group_over_f5_is_ktimes_of_order_4() {
        let f5 = Field::prime(5).unwrap();
        let m = canonical_matrix(&f5, Label::A5, &[]);
        let g = automorphism_group(&m).unwrap();
        assert_eq!(g.tag, GroupTag::KTimes);
        let elems = g.elements.unwrap();
        assert_eq!(elems.len(), 4);
        assert_eq!(elems, sort_elements(brute_force_automorphisms(&m).unwrap()));
    }

    #[test]
    fn a8_group_is_z2_with_reflection() {
        let f = q();
        let m = canonical_matrix(&f, Label::A8, &[f.int(2)]);
        let g = automorphism_group(&m).unwrap();
        assert_eq!(g.tag, GroupTag::Z2);
        let elems = g.elements.unwrap();
        assert!(elems.contains(&Matrix::from_i64_2x2(&f, [[1, 0], [0, -1]])));
        for e in &elems {
            assert!(is_automorphism(&m, e).unwrap());
        }
    }

    #[test]
    fn families_sample_and_verify() {
        let f = q();
        let a6 = canonical_matrix(&f, Label::A6, &[]);
        let g = automorphism_group(&a6).unwrap();
        assert_eq!(g.tag, GroupTag::Aff1);
        let fam = g.family.unwrap();
        let s = fam.sample(&[f.int(3), f.int(7)]).unwrap();
        assert!(is_automorphism(&a6, &s).unwrap());
        assert!(fam.sample(&[f.int(0), f.int(1)]).is_err());

        let a5 = canonical_matrix(&f, Label::A5, &[]);
        let g5 = automorphism_group(&a5).unwrap();
        let fam5 = g5.family.unwrap();
        let s5 = fam5.sample(&[f.int(4)]).unwrap();
        assert!(is_automorphism(&a5, &s5).unwrap());
        assert!(fam5.sample(&[f.ratio(1, 2)]).is_err());
    }

    #[test]
    fn conjugated_groups_still_pass_checks() {
        let f = q();
        // a non-canonical A1: diag(2, 3)
        let m = StructureMatrix::from_i64(&f, [[2, 0], [0, 3]]);
        let g = automorphism_group(&m).unwrap();
        assert_eq!(g.tag, GroupTag::Z2);
        for e in g.elements.as_ref().unwrap() {
            assert!(is_automorphism(&m, e).unwrap());
        }
    }

    #[test]
    fn derivation_space_examples() {
        let f = q();
        // A3 over Q: no derivations
        let a3 = canonical_matrix(&f, Label::A3, &[f.int(5)]);
        assert_eq!(derivation_space(&a3).dim(), 0);
        // A6: two-dimensional
        let a6 = canonical_matrix(&f, Label::A6, &[]);
        let d6 = derivation_space(&a6);
        assert_eq!(d6.dim(), 2);
        let expect1 = Matrix::from_i64_2x2(&f, [[0, 1], [0, 0]]);
        let expect2 = Matrix::from_i64_2x2(&f, [[2, 0], [0, 1]]);
        assert!(d6.basis.contains(&expect1));
        assert!(d6.basis.contains(&expect2));
        // A5: one-dimensional, [[1,-1],[-1,1]]
        let a5 = canonical_matrix(&f, Label::A5, &[]);
        let d5 = derivation_space(&a5);
        assert_eq!(d5.dim(), 1);
        assert_eq!(d5.basis[0], Matrix::from_i64_2x2(&f, [[1, -1], [-1, 1]]));
        // A7: dimension 1
        let a7 = canonical_matrix(&f, Label::A7, &[]);
        assert_eq!(derivation_space(&a7).dim(), 1);
        // A8: trivial
        let a8 = canonical_matrix(&f, Label::A8, &[f.int(2)]);
        assert_eq!(derivation_space(&a8).dim(), 0);
    }

    #[test]
    fn a2_derivations_in_characteristic_3() {
        let f3 = Field::prime(3).unwrap();
        let m = canonical_matrix(&f3, Label::A2, &[f3.int(1)]);
        let d = derivation_space(&m);
        assert_eq!(d.dim(), 1);
        assert_eq!(d.basis[0], Matrix::from_i64_2x2(&f3, [[1, 0], [0, -1]]));
    }

    #[test]
    fn derivations_satisfy_leibniz() {
        let f = q();
        for (label, params) in crate::classify::canonical_examples(&f) {
            let m = canonical_matrix(&f, label, &params);
            let ds = derivation_space(&m);
            for d in &ds.basis {
                for u in [[1i64, 0], [0, 1], [2, -3]] {
                    for v in [[1i64, 1], [5, 2]] {
                        let uv: Vec<Elem> = u.iter().map(|&c| f.int(c)).collect();
                        let vv: Vec<Elem> = v.iter().map(|&c| f.int(c)).collect();
                        assert!(satisfies_leibniz(&m, d, &uv, &vv));
                    }
                }
            }
        }
    }
}
