//! Commutative multivariate polynomials over a [`Field`], with involution
//! (a variable permutation of order at most two), Buchberger Gröbner bases,
//! normal forms, block-order elimination and ideal triviality.
//!
//! Coefficients may live in a rational-function field, which is how the
//! parametric ideals (coefficients in Q(a, l1..l4)) are computed exactly.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::limits::Limits;
use crate::mpoly::cmp_grevlex;
use crate::parse::{parse_expr, Ast};

/// A polynomial ring: a coefficient field and named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: Field,
    vars: Vec<String>,
}

impl Ring {
    pub fn new(field: &Field, vars: &[&str]) -> Ring {
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        for (i, v) in names.iter().enumerate() {
            assert!(!names[i + 1..].contains(v), "duplicate ring variable {v}");
        }
        Ring { field: field.clone(), vars: names }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> CommPoly {
        CommPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(&self, c: Elem) -> CommPoly {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; self.nvars()], c);
        }
        p
    }

    pub fn one(&self) -> CommPoly {
        self.constant(self.field.one())
    }

    pub fn var(&self, idx: usize) -> CommPoly {
        assert!(idx < self.nvars());
        let mut e = vec![0u16; self.nvars()];
        e[idx] = 1;
        let mut p = self.zero();
        p.terms.insert(e, self.field.one());
        p
    }

    pub fn var_named(&self, name: &str) -> Result<CommPoly> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))
    }

    /// Parses a polynomial; identifiers resolve to ring variables first and
    /// to coefficient-field parameters otherwise.
    pub fn parse(&self, text: &str) -> Result<CommPoly> {
        self.eval_ast(&parse_expr(text)?)
    }

    fn eval_ast(&self, ast: &Ast) -> Result<CommPoly> {
        Ok(match ast {
            Ast::Int(n) => self.constant(self.field.int_big(n)),
            Ast::Ident(name) => match self.var_index(name) {
                Some(i) => self.var(i),
                None => self.constant(self.field.param(name)?),
            },
            Ast::Neg(a) => self.eval_ast(a)?.neg(),
            Ast::Add(a, b) => self.eval_ast(a)?.add(&self.eval_ast(b)?),
            Ast::Sub(a, b) => self.eval_ast(a)?.sub(&self.eval_ast(b)?),
            Ast::Mul(a, b) => self.eval_ast(a)?.mul(&self.eval_ast(b)?),
            Ast::Div(a, b) => {
                let num = self.eval_ast(a)?;
                let den = self.eval_ast(b)?;
                let c = den
                    .constant_value()
                    .ok_or_else(|| Error::Parse("division by a non-constant polynomial".to_string()))?;
                num.scale(&c.inv()?)
            }
            Ast::Pow(a, e) => {
                let base = self.eval_ast(a)?;
                let mut acc = self.one();
                for _ in 0..*e {
                    acc = acc.mul(&base);
                }
                acc
            }
        })
    }
}

/// Monomial orders: graded reverse lexicographic, lexicographic, and a
/// block elimination order that makes a set of variables largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Eliminates the given variable indices: compares their grevlex block
    /// first, then the remaining block.
    Elim(BTreeSet<usize>),
}

impl MonomialOrder {
    pub fn elim(front: &[usize]) -> MonomialOrder {
        MonomialOrder::Elim(front.iter().copied().collect())
    }

    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => cmp_grevlex(a, b),
            MonomialOrder::Lex => {
                for i in 0..a.len() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elim(front) => {
                let pick = |e: &[u16], keep_front: bool| -> Vec<u16> {
                    e.iter()
                        .enumerate()
                        .filter(|(i, _)| front.contains(i) == keep_front)
                        .map(|(_, &x)| x)
                        .collect()
                };
                match cmp_grevlex(&pick(a, true), &pick(b, true)) {
                    Ordering::Equal => cmp_grevlex(&pick(a, false), &pick(b, false)),
                    other => other,
                }
            }
        }
    }
}

/// Sparse commutative polynomial with coefficients in the ring's field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommPoly {
    ring: Ring,
    terms: BTreeMap<Vec<u16>, Elem>,
}

impl CommPoly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max().unwrap_or(0)
    }

    pub fn constant_value(&self) -> Option<Elem> {
        if self.is_zero() {
            return Some(self.ring.field.zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn uses_var(&self, idx: usize) -> bool {
        self.terms.keys().any(|e| e[idx] > 0)
    }

    fn insert(&mut self, e: Vec<u16>, c: Elem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &CommPoly) -> CommPoly {
        assert_eq!(self.ring, rhs.ring);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &CommPoly) -> CommPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> CommPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, rhs: &CommPoly) -> CommPoly {
        assert_eq!(self.ring, rhs.ring);
        let mut out = self.ring.zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Elem) -> CommPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul_term(&self, e: &[u16], c: &Elem) -> CommPoly {
        let mut out = self.ring.zero();
        for (ea, ca) in &self.terms {
            let expo: Vec<u16> = ea.iter().zip(e).map(|(x, y)| x + y).collect();
            out.insert(expo, ca.mul(c));
        }
        out
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(Vec<u16>, Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    pub fn make_monic(&self, order: &MonomialOrder) -> CommPoly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Applies a variable permutation (the involution action).
    pub fn permute_vars(&self, perm: &[usize]) -> CommPoly {
        let mut out = self.ring.zero();
        for (e, c) in &self.terms {
            let mut e2 = vec![0u16; e.len()];
            for (i, &x) in e.iter().enumerate() {
                e2[perm[i]] = x;
            }
            out.insert(e2, c.clone());
        }
        out
    }

    /// Substitutes polynomials for the variables.
    pub fn substitute(&self, images: &[CommPoly]) -> CommPoly {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut out = target.zero();
        for (e, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &pow) in e.iter().enumerate() {
                for _ in 0..pow {
                    term = term.mul(&images[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Renders with terms in descending grevlex order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_grevlex(b, a));
        let mut s = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let txt = format!("{c}");
            let (neg, mag) = match txt.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, txt),
            };
            let needs_parens = mag.contains(['+', '-', ' ']);
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| {
                    if x == 1 {
                        self.ring.vars[v].clone()
                    } else {
                        format!("{}^{}", self.ring.vars[v], x)
                    }
                })
                .collect();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff_part = if mono.is_empty() {
                if needs_parens {
                    format!("({mag})")
                } else {
                    mag.clone()
                }
            } else if mag == "1" {
                String::new()
            } else if needs_parens {
                format!("({mag})*")
            } else {
                format!("{mag}*")
            };
            s.push_str(&coeff_part);
            s.push_str(&mono.join("*"));
        }
        s
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn mono_divides(d: &[u16], m: &[u16]) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

fn mono_div(m: &[u16], d: &[u16]) -> Vec<u16> {
    m.iter().zip(d).map(|(a, b)| a - b).collect()
}

fn mono_lcm(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full normal form of `f` modulo `basis` under `order`.
pub fn normal_form(f: &CommPoly, basis: &[CommPoly], order: &MonomialOrder) -> CommPoly {
    let ring = f.ring().clone();
    let leads: Vec<(Vec<u16>, Elem)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading(order).unwrap())
        .collect();
    let mut rest = f.clone();
    let mut out = ring.zero();
    'outer: while !rest.is_zero() {
        let (lm, lc) = rest.leading(order).unwrap();
        for (i, (glm, glc)) in leads.iter().enumerate() {
            if mono_divides(glm, &lm) {
                let q = mono_div(&lm, glm);
                let c = lc.checked_div(glc).expect("leading coefficients are nonzero");
                rest = rest.sub(&basis_nonzero(basis)[i].mul_term(&q, &c));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the output
        let mut t = ring.zero();
        t.insert(lm.clone(), lc.clone());
        out = out.add(&t);
        rest = rest.sub(&t);
    }
    out
}

fn basis_nonzero(basis: &[CommPoly]) -> Vec<&CommPoly> {
    basis.iter().filter(|g| !g.is_zero()).collect()
}

/// S-polynomial of two monic-normalizable polynomials.
pub fn s_poly(f: &CommPoly, g: &CommPoly, order: &MonomialOrder) -> CommPoly {
    let (fm, fc) = f.leading(order).unwrap();
    let (gm, gc) = g.leading(order).unwrap();
    let l = mono_lcm(&fm, &gm);
    let one = f.ring().field().one();
    let a = f.mul_term(&mono_div(&l, &fm), &one.checked_div(&fc).unwrap());
    let b = g.mul_term(&mono_div(&l, &gm), &one.checked_div(&gc).unwrap());
    a.sub(&b)
}

/// Buchberger completion to the unique reduced Gröbner basis (monic,
/// auto-reduced, sorted by descending leading monomial).
pub fn buchberger(gens: &[CommPoly], order: &MonomialOrder, limits: &Limits) -> Result<Vec<CommPoly>> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(Vec::new()),
    };
    let mut basis: Vec<CommPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.make_monic(order));
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal selection: smallest lcm degree first, then indices
        let key = |&(i, j): &(usize, usize)| {
            let (mi, _) = basis[i].leading(order).unwrap();
            let (mj, _) = basis[j].leading(order).unwrap();
            let l = mono_lcm(&mi, &mj);
            (l.iter().map(|&x| x as u32).sum::<u32>(), i, j)
        };
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| key(p))
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit(format!("more than {} critical pairs", limits.max_pairs)));
        }
        let (mi, _) = basis[i].leading(order).unwrap();
        let (mj, _) = basis[j].leading(order).unwrap();
        // product criterion: coprime leading monomials reduce to zero
        if mono_lcm(&mi, &mj).iter().zip(mi.iter().zip(&mj)).all(|(l, (a, b))| *l == a + b) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() > limits.max_degree {
            return Err(Error::ResourceLimit(format!(
                "intermediate degree {} exceeds {}",
                r.total_degree(),
                limits.max_degree
            )));
        }
        let r = r.make_monic(order);
        basis.push(r);
        let newest = basis.len() - 1;
        if basis.len() > limits.max_basis {
            return Err(Error::ResourceLimit(format!("basis larger than {}", limits.max_basis)));
        }
        for k in 0..newest {
            pairs.push((k, newest));
        }
    }
    // minimalize: drop elements whose leading monomial is divisible by
    // another leading monomial
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = basis[i].leading(order).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = basis[j].leading(order).unwrap();
            if mono_divides(&mj, &mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<CommPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce each element against the others
    let mut reduced: Vec<CommPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<CommPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = normal_form(&minimal[i], &others, order).make_monic(order);
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    reduced.sort_by(|a, b| {
        let (ma, _) = a.leading(order).unwrap();
        let (mb, _) = b.leading(order).unwrap();
        order.cmp(&mb, &ma)
    });
    let _ = ring;
    Ok(reduced)
}

/// An ideal closed under an involutive variable permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarIdeal {
    ring: Ring,
    gens: Vec<CommPoly>,
    involution: Vec<usize>,
}

impl StarIdeal {
    /// Builds the ideal and closes the generator list under the involution.
    pub fn new(ring: &Ring, gens: Vec<CommPoly>, involution: Vec<usize>) -> StarIdeal {
        assert_eq!(involution.len(), ring.nvars());
        for (i, &j) in involution.iter().enumerate() {
            assert_eq!(involution[j], i, "involution must have order <= 2");
        }
        let mut closed: Vec<CommPoly> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let star = g.permute_vars(&involution);
            if !closed.contains(&g) {
                closed.push(g);
            }
            if !closed.contains(&star) {
                closed.push(star);
            }
        }
        StarIdeal { ring: ring.clone(), gens: closed, involution }
    }

    /// The identity involution (a plain ideal).
    pub fn plain(ring: &Ring, gens: Vec<CommPoly>) -> StarIdeal {
        let id: Vec<usize> = (0..ring.nvars()).collect();
        StarIdeal::new(ring, gens, id)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[CommPoly] {
        &self.gens
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn star(&self, f: &CommPoly) -> CommPoly {
        f.permute_vars(&self.involution)
    }

    /// Reduced Gröbner basis under the order.
    pub fn groebner(&self, order: &MonomialOrder, limits: &Limits) -> Result<Vec<CommPoly>> {
        buchberger(&self.gens, order, limits)
    }

    /// Generators of the intersection with the subring omitting `drop`.
    pub fn eliminate(&self, drop: &[usize], limits: &Limits) -> Result<StarIdeal> {
        let order = MonomialOrder::elim(drop);
        let gb = self.groebner(&order, limits)?;
        let kept: Vec<CommPoly> = gb
            .into_iter()
            .filter(|g| drop.iter().all(|&v| !g.uses_var(v)))
            .collect();
        // restrict the involution when the dropped set is stable under it
        let stable = drop.iter().all(|&v| drop.contains(&self.involution[v]));
        let inv = if stable { self.involution.clone() } else { (0..self.ring.nvars()).collect() };
        Ok(StarIdeal::new(&self.ring, kept, inv))
    }

    /// True iff `1` lies in the ideal (the reduced basis is `{1}`).
    pub fn is_whole_ring(&self, limits: &Limits) -> Result<bool> {
        let gb = self.groebner(&MonomialOrder::DegRevLex, limits)?;
        Ok(gb.iter().any(|g| g.constant_value().map(|c| !c.is_zero()).unwrap_or(false)))
    }
}

/// Exact check that the product of `factors` equals `f`.
pub fn verify_factorization(f: &CommPoly, factors: &[CommPoly]) -> bool {
    let mut acc = f.ring().one();
    for g in factors {
        acc = acc.mul(g);
    }
    acc == *f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::new(&Field::rationals(), &["x", "y"])
    }

    #[test]
    fn parse_and_render_round_trip() {
        let r = ring2();
        let p = r.parse("x^2 - 2*x*y + y^2 - 1/2").unwrap();
        let q = r.parse(&p.render()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring2();
        let p = r.parse("x - 1").unwrap();
        let gb = buchberger(&[p.clone()], &MonomialOrder::DegRevLex, &Limits::default()).unwrap();
        assert_eq!(gb, vec![p]);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring2();
        let x = r.parse("x").unwrap();
        let x2 = r.parse("x^2").unwrap();
        let nf = normal_form(&x2, &[x], &MonomialOrder::DegRevLex);
        assert!(nf.is_zero());
    }

    #[test]
    fn whole_ring_detection() {
        let r = ring2();
        let lim = Limits::default();
        let i1 = StarIdeal::plain(&r, vec![r.parse("x").unwrap(), r.parse("x-1").unwrap()]);
        assert!(i1.is_whole_ring(&lim).unwrap());
        let i2 = StarIdeal::plain(&r, vec![r.parse("x").unwrap()]);
        assert!(!i2.is_whole_ring(&lim).unwrap());
    }

    #[test]
    fn buchberger_criterion_holds_on_output() {
        let r = ring2();
        let gens = vec![r.parse("x^2 + y").unwrap(), r.parse("x*y - 1").unwrap()];
        let order = MonomialOrder::DegRevLex;
        let gb = buchberger(&gens, &order, &Limits::default()).unwrap();
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = s_poly(&gb[i], &gb[j], &order);
                assert!(normal_form(&s, &gb, &order).is_zero());
            }
        }
        // inputs reduce to zero against the basis
        for g in &gens {
            assert!(normal_form(g, &gb, &order).is_zero());
        }
    }

    #[test]
    fn elimination_drops_variables() {
        let r = ring2();
        // x - y: eliminating x leaves nothing (the intersection is trivial)
        let i = StarIdeal::plain(&r, vec![r.parse("x - y").unwrap()]);
        let e = i.eliminate(&[0], &Limits::default()).unwrap();
        assert!(e.gens().is_empty());
        // x - y and x + y: eliminating x leaves a multiple of y
        let i2 = StarIdeal::plain(
            &r,
            vec![r.parse("x - y").unwrap(), r.parse("x + y").unwrap()],
        );
        let e2 = i2.eliminate(&[0], &Limits::default()).unwrap();
        assert_eq!(e2.gens().len(), 1);
        assert_eq!(e2.gens()[0], r.parse("y").unwrap());
    }

    #[test]
    fn star_closure_adds_images() {
        let r = Ring::new(&Field::rationals(), &["x", "y", "xs", "ys"]);
        // involution swaps x<->xs, y<->ys
        let inv = vec![2, 3, 0, 1];
        let i = StarIdeal::new(&r, vec![r.parse("x^2 - y").unwrap()], inv);
        assert_eq!(i.gens().len(), 2);
        assert_eq!(i.gens()[1], r.parse("xs^2 - ys").unwrap());
        let lim = Limits::default();
        let gb = i.groebner(&MonomialOrder::DegRevLex, &lim).unwrap();
        for g in i.gens() {
            assert!(normal_form(&i.star(g), &gb, &MonomialOrder::DegRevLex).is_zero());
        }
    }

    #[test]
    fn factorization_check() {
        let r = ring2();
        let f = r.parse("x^2 - 1").unwrap();
        let a = r.parse("x - 1").unwrap();
        let b = r.parse("x + 1").unwrap();
        assert!(verify_factorization(&f, &[a.clone(), b.clone()]));
        let g = r.parse("x^2 + 1").unwrap();
        assert!(!verify_factorization(&g, &[a, b]));
    }

    #[test]
    fn resource_limit_fires() {
        let r = ring2();
        let gens = vec![r.parse("x^2 + y").unwrap(), r.parse("x*y - 1").unwrap()];
        let tight = Limits::strict(1, 1, 64);
        assert!(matches!(
            buchberger(&gens, &MonomialOrder::DegRevLex, &tight),
            Err(Error::ResourceLimit(_))
        ));
    }
}
