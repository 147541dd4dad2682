//! The free associative algebra K<x, y, x*, y*> with involution, truncated
//! two-sided Gröbner bases by overlap completion, and normal-form
//! membership certificates.
//!
//! Words are sequences over the four letters `x < y < xs < ys` (deg-lex
//! order); the involution reverses a word and swaps `x <-> xs`, `y <-> ys`.
//! Completion is truncated at a degree bound: a normal form of zero is a
//! sound membership certificate regardless of truncation, and the basis is
//! certified complete below [`TruncatedGB::complete_below`].

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::limits::Limits;

/// Display names of the four letters.
pub const LETTERS: [&str; 4] = ["x", "y", "xs", "ys"];

/// A word over the four letters, most significant first.
pub type Word = Vec<u8>;

/// Involution on letters: `x <-> xs`, `y <-> ys`.
fn star_letter(l: u8) -> u8 {
    match l {
        0 => 2,
        1 => 3,
        2 => 0,
        3 => 1,
        _ => unreachable!("letters are 0..4"),
    }
}

/// Degree-lexicographic word order with `x < y < xs < ys`.
pub fn word_cmp(a: &Word, b: &Word) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Noncommutative polynomial over the four letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePoly {
    field: Field,
    terms: BTreeMap<Word, Elem>,
}

impl FreePoly {
    pub fn zero(field: &Field) -> FreePoly {
        FreePoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, c: Elem) -> FreePoly {
        let mut p = FreePoly::zero(field);
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn letter(field: &Field, l: u8) -> FreePoly {
        assert!(l < 4);
        let mut p = FreePoly::zero(field);
        p.terms.insert(vec![l], field.one());
        p
    }

    pub fn word(field: &Field, w: &[u8]) -> FreePoly {
        let mut p = FreePoly::zero(field);
        p.terms.insert(w.to_vec(), field.one());
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Elem)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|w| w.len() as u32).max().unwrap_or(0)
    }

    fn insert(&mut self, w: Word, c: Elem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FreePoly) -> FreePoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> FreePoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, c: &Elem) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero(&self.field);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul(&self, rhs: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero(&self.field);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.insert(w, ca.mul(cb));
            }
        }
        out
    }

    /// `l * self * r` for words `l`, `r`.
    fn sandwich(&self, l: &[u8], r: &[u8], c: &Elem) -> FreePoly {
        let mut out = FreePoly::zero(&self.field);
        for (w, cw) in &self.terms {
            let mut word = l.to_vec();
            word.extend_from_slice(w);
            word.extend_from_slice(r);
            out.insert(word, cw.mul(c));
        }
        out
    }

    /// The involution: reverses each word and swaps starred letters.
    pub fn star(&self) -> FreePoly {
        let mut out = FreePoly::zero(&self.field);
        for (w, c) in &self.terms {
            let sw: Word = w.iter().rev().map(|&l| star_letter(l)).collect();
            out.insert(sw, c.clone());
        }
        out
    }

    pub fn leading(&self) -> Option<(&Word, &Elem)> {
        self.terms.iter().max_by(|a, b| word_cmp(a.0, b.0))
    }

    pub fn make_monic(&self) -> FreePoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Coefficient-wise specialization of function-field parameters.
    pub fn specialize(&self, target: &Field, vals: &[(String, Elem)]) -> Result<FreePoly> {
        let mut out = FreePoly::zero(target);
        for (w, c) in &self.terms {
            out.insert(w.clone(), c.specialize(target, vals)?);
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Word> = self.terms.keys().collect();
        keys.sort_by(|a, b| word_cmp(b, a));
        let mut s = String::new();
        for (i, w) in keys.iter().enumerate() {
            let c = &self.terms[*w];
            let txt = format!("{c}");
            let (neg, mag) = match txt.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, txt),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let word_txt = if w.is_empty() {
                String::new()
            } else {
                w.iter().map(|&l| LETTERS[l as usize]).collect::<Vec<_>>().join("*")
            };
            let needs_parens = mag.contains(['+', '-', ' ']);
            if word_txt.is_empty() {
                s.push_str(&if needs_parens { format!("({mag})") } else { mag });
            } else if mag == "1" {
                s.push_str(&word_txt);
            } else if needs_parens {
                s.push_str(&format!("({mag})*{word_txt}"));
            } else {
                s.push_str(&format!("{mag}*{word_txt}"));
            }
        }
        s
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Finds the leftmost occurrence of `pat` inside `w`.
fn find_subword(w: &[u8], pat: &[u8]) -> Option<usize> {
    if pat.len() > w.len() {
        return None;
    }
    (0..=w.len() - pat.len()).find(|&i| &w[i..i + pat.len()] == pat)
}

/// A degree-truncated two-sided Gröbner basis.
#[derive(Clone, Debug)]
pub struct TruncatedGB {
    pub elements: Vec<FreePoly>,
    pub degree_bound: u32,
    /// All overlap obstructions of degree up to this value reduce to zero.
    pub complete_below: u32,
}

/// Exhaustive rewriting by the basis; a result of zero is a sound proof of
/// two-sided ideal membership regardless of truncation.
pub fn nc_normal_form(f: &FreePoly, basis: &TruncatedGB) -> FreePoly {
    nc_reduce(f, &basis.elements)
}

/// Unique normal form (as with a monic basis): the scaled remainder divided
/// by the accumulated leading-coefficient factor.
fn nc_reduce(f: &FreePoly, basis: &[FreePoly]) -> FreePoly {
    let (r, scale) = nc_reduce_scaled(f, basis);
    if scale.is_one() || r.is_zero() {
        r
    } else {
        r.scale(&scale.inv().expect("scale is a product of nonzero leads"))
    }
}

/// Fraction-free reduction: returns `(scale * nf(f), scale)`.  Each step
/// multiplies the remainder only by the reduced denominator of `c / lc(g)`
/// (usually 1 once a leading coefficient has been absorbed), and the
/// remainder content is stripped periodically; both keep the polynomial
/// coefficients small enough for parametric runs.
fn nc_reduce_scaled(f: &FreePoly, basis: &[FreePoly]) -> (FreePoly, Elem) {
    use alloc::collections::BTreeSet;
    let field = f.field().clone();
    let mut rest = f.clone();
    let mut scale = field.one();
    let mut frozen: BTreeSet<Word> = BTreeSet::new();
    let mut steps = 0usize;
    'outer: loop {
        // largest non-frozen word
        let target = rest
            .terms
            .iter()
            .filter(|(w, _)| !frozen.contains(*w))
            .max_by(|a, b| word_cmp(a.0, b.0))
            .map(|(w, c)| (w.clone(), c.clone()));
        let Some((w, c)) = target else { break };
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gw, gc) = {
                let (gw, gc) = g.leading().unwrap();
                (gw.clone(), gc.clone())
            };
            if let Some(pos) = find_subword(&w, &gw) {
                let left = &w[..pos];
                let right = &w[pos + gw.len()..];
                let q = c.checked_div(&gc).expect("nonzero leading coefficient");
                match q.fun_split() {
                    None => {
                        rest = rest.sub(&g.sandwich(left, right, &q));
                    }
                    Some((qn, qd)) => {
                        if qd.is_one() {
                            rest = rest.sub(&g.sandwich(left, right, &qn));
                        } else {
                            rest = rest.scale(&qd).sub(&g.sandwich(left, right, &qn));
                            scale = scale.mul(&qd);
                        }
                    }
                }
                steps += 1;
                #[cfg(feature = "diag")]
                if steps % 200 == 0 {
                    let maxc = rest.terms.values().map(|c| c.serial().len()).max().unwrap_or(0);
                    std::println!("    reduce step {steps}: {} words, maxcoeff {maxc}", rest.terms.len());
                }
                if steps % 16 == 0 && !rest.is_zero() {
                    let mut coeffs: Vec<Elem> = rest.terms.values().cloned().collect();
                    let content = Elem::strip_content(&mut coeffs);
                    if !content.is_one() {
                        let words: Vec<Word> = rest.terms.keys().cloned().collect();
                        let mut slim = FreePoly::zero(&field);
                        for (w2, c2) in words.into_iter().zip(coeffs) {
                            slim.insert(w2, c2);
                        }
                        rest = slim;
                        scale = scale.checked_div(&content).expect("content is nonzero");
                    }
                }
                continue 'outer;
            }
        }
        frozen.insert(w);
    }
    (rest, scale)
}

/// Content normalization: polynomial coefficients, common content removed,
/// leading coefficient monic as a polynomial (or 1 over plain fields).
fn content_normalize(p: &FreePoly) -> FreePoly {
    if p.is_zero() {
        return p.clone();
    }
    let entries: Vec<(Word, Elem)> = p.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    let lead_word = p.leading().unwrap().0.clone();
    let lead_idx = entries.iter().position(|(w, _)| *w == lead_word).unwrap();
    let mut coeffs: Vec<Elem> = entries.iter().map(|(_, c)| c.clone()).collect();
    Elem::primitive_coeffs(&mut coeffs, lead_idx);
    let mut out = FreePoly::zero(p.field());
    for ((w, _), c) in entries.into_iter().zip(coeffs) {
        out.insert(w, c);
    }
    out
}

/// One obstruction between two leading words: `l1 . u . r1 == l2 . v . r2`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Obstruction {
    i: usize,
    j: usize,
    li: Word,
    ri: Word,
    lj: Word,
    rj: Word,
    degree: u32,
}

/// All overlap/inclusion obstructions between leading words `u` (of index
/// `i`) and `v` (of index `j`).
fn obstructions(i: usize, u: &Word, j: usize, v: &Word) -> Vec<Obstruction> {
    let mut out = Vec::new();
    // proper overlaps: a suffix of u equals a prefix of v
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] {
            // overlap word: u . v[k..]
            out.push(Obstruction {
                i,
                j,
                li: Vec::new(),
                ri: v[k..].to_vec(),
                lj: u[..u.len() - k].to_vec(),
                rj: Vec::new(),
                degree: (u.len() + v.len() - k) as u32,
            });
        }
    }
    // inclusions: v occurs inside u (witnessed at every position)
    if v.len() < u.len() || (v.len() == u.len() && i != j) {
        let mut start = 0;
        while start + v.len() <= u.len() {
            if &u[start..start + v.len()] == v.as_slice() {
                out.push(Obstruction {
                    i,
                    j,
                    li: Vec::new(),
                    ri: Vec::new(),
                    lj: u[..start].to_vec(),
                    rj: u[start + v.len()..].to_vec(),
                    degree: u.len() as u32,
                });
            }
            start += 1;
        }
    }
    out
}

/// Two-sided Buchberger/overlap completion, truncated at `degree_bound`.
pub fn nc_groebner(gens: &[FreePoly], degree_bound: u32, limits: &Limits) -> Result<TruncatedGB> {
    nc_groebner_until(gens, degree_bound, limits, &[])
}

/// Completion that stops early once every target polynomial reduces to
/// zero.  Membership certificates obtained this way are sound (the basis is
/// a subset of the ideal); a basis returned early reports
/// `complete_below = 0`.
pub fn nc_groebner_until(
    gens: &[FreePoly],
    degree_bound: u32,
    limits: &Limits,
    targets: &[FreePoly],
) -> Result<TruncatedGB> {
    let field = match gens.first() {
        Some(g) => g.field().clone(),
        None => {
            return Ok(TruncatedGB { elements: Vec::new(), degree_bound, complete_below: degree_bound })
        }
    };
    let mut basis: Vec<FreePoly> = Vec::new();
    let mut complete_below = degree_bound;
    let mut queue: Vec<FreePoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    queue.sort_by(|a, b| word_cmp(a.leading().unwrap().0, b.leading().unwrap().0));
    let mut pending: Vec<Obstruction> = Vec::new();
    let mut processed = 0usize;

    // adds a reduced, monic element and schedules its obstructions
    fn add_element(
        basis: &mut Vec<FreePoly>,
        pending: &mut Vec<Obstruction>,
        g: FreePoly,
    ) {
        let idx = basis.len();
        let gw = g.leading().unwrap().0.clone();
        for (k, h) in basis.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            let hw = h.leading().unwrap().0.clone();
            pending.extend(obstructions(idx, &gw, k, &hw));
            pending.extend(obstructions(k, &hw, idx, &gw));
        }
        pending.extend(obstructions(idx, &gw, idx, &gw));
        basis.push(g);
    }

    for g in queue {
        let (r, _) = nc_reduce_scaled(&g, &basis);
        if r.is_zero() {
            continue;
        }
        assert!(
            r.total_degree() <= degree_bound,
            "generator degree exceeds the truncation bound"
        );
        add_element(&mut basis, &mut pending, content_normalize(&r));
    }

    let targets_met = |basis: &[FreePoly]| -> bool {
        !targets.is_empty()
            && targets.iter().all(|t| nc_reduce_scaled(t, basis).0.is_zero())
    };
    if targets_met(&basis) {
        let live: Vec<FreePoly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
        return Ok(TruncatedGB { elements: live, degree_bound, complete_below: 0 });
    }
    while !pending.is_empty() {
        processed += 1;
        #[cfg(feature = "diag")]
        if processed % 5 == 0 {
            let live = basis.iter().filter(|g| !g.is_zero()).count();
            let maxc = basis
                .iter()
                .flat_map(|g| g.terms.values())
                .map(|c| c.serial().len())
                .max()
                .unwrap_or(0);
            std::println!("  pairs {processed} pending {} basis {live} maxcoeff {maxc}", pending.len());
        }
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit(format!("more than {} nc obstructions", limits.max_pairs)));
        }
        // smallest overlap degree first, then a stable tiebreak
        let best = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, o)| (o.degree, o.i, o.j, o.lj.len()))
            .map(|(idx, _)| idx)
            .unwrap();
        let ob = pending.swap_remove(best);
        if ob.degree > degree_bound {
            complete_below = complete_below.min(ob.degree.saturating_sub(1));
            continue;
        }
        let gi = &basis[ob.i];
        let gj = &basis[ob.j];
        if gi.is_zero() || gj.is_zero() {
            continue;
        }
        let lci = gi.leading().unwrap().1.clone();
        let lcj = gj.leading().unwrap().1.clone();
        let s = gi.sandwich(&ob.li, &ob.ri, &lcj).sub(&gj.sandwich(&ob.lj, &ob.rj, &lci));
        let (r, _) = nc_reduce_scaled(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() > degree_bound {
            complete_below = complete_below.min(ob.degree.saturating_sub(1));
            continue;
        }
        let r = content_normalize(&r);
        // retire basis elements whose leading word contains the new one
        let rw = r.leading().unwrap().0.clone();
        let mut displaced: Vec<FreePoly> = Vec::new();
        for h in basis.iter_mut() {
            if h.is_zero() {
                continue;
            }
            let hw = h.leading().unwrap().0.clone();
            if hw != rw && find_subword(&hw, &rw).is_some() {
                displaced.push(core::mem::replace(h, FreePoly::zero(&field)));
            }
        }
        add_element(&mut basis, &mut pending, r);
        for d in displaced {
            let (rd, _) = nc_reduce_scaled(&d, &basis);
            if !rd.is_zero() && rd.total_degree() <= degree_bound {
                add_element(&mut basis, &mut pending, content_normalize(&rd));
            }
        }
        if basis.iter().filter(|g| !g.is_zero()).count() > limits.max_basis {
            return Err(Error::ResourceLimit(format!("nc basis larger than {}", limits.max_basis)));
        }
        let coeff_terms: usize = basis
            .iter()
            .flat_map(|g| g.terms.values())
            .map(|c| c.complexity())
            .max()
            .unwrap_or(0);
        if coeff_terms > limits.max_coeff_terms {
            return Err(Error::ResourceLimit(format!(
                "nc coefficient size {} exceeds {}",
                coeff_terms, limits.max_coeff_terms
            )));
        }
        if targets_met(&basis) {
            let live: Vec<FreePoly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
            return Ok(TruncatedGB { elements: live, degree_bound, complete_below: 0 });
        }
    }

    // tail-reduce and sort
    let live: Vec<FreePoly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    let mut reduced: Vec<FreePoly> = Vec::new();
    for i in 0..live.len() {
        let others: Vec<FreePoly> = live
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let (r, _) = nc_reduce_scaled(&live[i], &others);
        if !r.is_zero() {
            reduced.push(content_normalize(&r));
        }
    }
    reduced.sort_by(|a, b| word_cmp(a.leading().unwrap().0, b.leading().unwrap().0));
    reduced.dedup();
    Ok(TruncatedGB { elements: reduced, degree_bound, complete_below })
}

/// Number of words of the given degree irreducible by the basis: a lower
/// bound witness for the growth of the quotient.
pub fn nc_dimension_probe(basis: &TruncatedGB, degree: u32) -> usize {
    assert!(degree <= basis.degree_bound, "probe degree exceeds the bound");
    let leads: Vec<Word> = basis
        .elements
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading().unwrap().0.clone())
        .collect();
    let mut count = 0usize;
    let total = 4usize.pow(degree);
    for code in 0..total {
        let mut w = Vec::with_capacity(degree as usize);
        let mut c = code;
        for _ in 0..degree {
            w.push((c % 4) as u8);
            c /= 4;
        }
        if leads.iter().all(|l| find_subword(&w, l).is_none()) {
            count += 1;
        }
    }
    count
}

/// The built-in parametric systems from the associative-representation
/// study: the three labels whose universal algebras collapse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AppendixSystem {
    /// `A3(a)` with the two commutator relations `x xs - xs x`, `y ys - ys y`.
    A3,
    /// `A4(a)`.
    A4,
    /// `A5(a, b)` with `a != b` generic.
    A5ab,
}

impl AppendixSystem {
    pub fn parse(name: &str) -> Result<AppendixSystem> {
        match name {
            "appendix-A3" | "A3" => Ok(AppendixSystem::A3),
            "appendix-A4" | "A4" => Ok(AppendixSystem::A4),
            "appendix-A5ab" | "A5ab" => Ok(AppendixSystem::A5ab),
            other => Err(Error::Parse(format!("unknown appendix system `{other}`"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AppendixSystem::A3 => "appendix-A3",
            AppendixSystem::A4 => "appendix-A4",
            AppendixSystem::A5ab => "appendix-A5ab",
        }
    }
}

/// The symmetric four-parameter bilinear product evaluated on two letters:
/// `p(u, v) = l1(uv + vu) + l2(u v* + v u*) + l3(v* u + u* v) + l4(u* v* + v* u*)`.
fn p_letters(field: &Field, lam: &[Elem; 4], u: u8, v: u8) -> FreePoly {
    let us = star_letter(u);
    let vs = star_letter(v);
    let w = |a: u8, b: u8| FreePoly::word(field, &[a, b]);
    let mut acc = FreePoly::zero(field);
    acc = acc.add(&w(u, v).add(&w(v, u)).scale(&lam[0]));
    acc = acc.add(&w(u, vs).add(&w(v, us)).scale(&lam[1]));
    acc = acc.add(&w(vs, u).add(&w(us, v)).scale(&lam[2]));
    acc = acc.add(&w(us, vs).add(&w(vs, us)).scale(&lam[3]));
    acc
}

/// Builds an appendix system over its parametric coefficient field
/// (Q(a, l1..l4) or Q(a, b, l1..l4)); returns the field and the ∗-closed
/// generator list.
pub fn appendix_system(sys: AppendixSystem) -> Result<(Field, Vec<FreePoly>)> {
    let q = Field::rationals();
    let field = match sys {
        AppendixSystem::A5ab => Field::function(&q, &["a", "b", "l1", "l2", "l3", "l4"])?,
        _ => Field::function(&q, &["a", "l1", "l2", "l3", "l4"])?,
    };
    let a = field.param("a")?;
    let lam = [
        field.param("l1")?,
        field.param("l2")?,
        field.param("l3")?,
        field.param("l4")?,
    ];
    let x = FreePoly::letter(&field, 0);
    let y = FreePoly::letter(&field, 1);
    // squares of the natural basis per label
    let (e1sq, e2sq) = match sys {
        AppendixSystem::A3 => (x.clone(), x.scale(&a).add(&y)),
        AppendixSystem::A4 => (y.scale(&a), x.add(&y)),
        AppendixSystem::A5ab => {
            let b = field.param("b")?;
            (x.add(&y.scale(&b)), x.scale(&a).add(&y))
        }
    };
    let g1 = p_letters(&field, &lam, 0, 0).sub(&e1sq);
    let g2 = p_letters(&field, &lam, 1, 1).sub(&e2sq);
    let g3 = p_letters(&field, &lam, 0, 1);
    let mut gens = vec![g1.clone(), g1.star(), g2.clone(), g2.star(), g3.clone(), g3.star()];
    if sys == AppendixSystem::A3 {
        // adjoin x xs - xs x and y ys - ys y
        let comm = |a: u8, b: u8| FreePoly::word(&field, &[a, b]).sub(&FreePoly::word(&field, &[b, a]));
        gens.push(comm(0, 2));
        gens.push(comm(1, 3));
    }
    gens.dedup();
    Ok((field, gens))
}

/// Specializes an appendix system at concrete rational parameter values
/// (given in the order of the field's parameters).
pub fn specialize_system(field: &Field, gens: &[FreePoly], values: &[i64]) -> Result<(Field, Vec<FreePoly>)> {
    let q = Field::rationals();
    let names = field.params();
    if names.len() != values.len() {
        return Err(Error::Parse(format!(
            "expected {} specialization values, got {}",
            names.len(),
            values.len()
        )));
    }
    let bind: Vec<(String, Elem)> = names
        .iter()
        .zip(values)
        .map(|(n, &v)| (n.clone(), q.int(v)))
        .collect();
    let mut out = Vec::new();
    for g in gens {
        out.push(g.specialize(&q, &bind)?);
    }
    Ok((q, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn words_multiply_by_concatenation() {
        let f = q();
        let x = FreePoly::letter(&f, 0);
        let y = FreePoly::letter(&f, 1);
        let xy = x.mul(&y);
        let yx = y.mul(&x);
        assert_ne!(xy, yx);
        assert_eq!(xy.leading().unwrap().0, &vec![0u8, 1]);
    }

    #[test]
    fn involution_reverses_and_stars() {
        let f = q();
        let xy = FreePoly::word(&f, &[0, 1]);
        // (x y)* = y* x*
        assert_eq!(xy.star(), FreePoly::word(&f, &[3, 2]));
        let p = xy.add(&FreePoly::letter(&f, 2).scale(&f.int(5)));
        assert_eq!(p.star().star(), p);
    }

    #[test]
    fn single_letter_ideal() {
        let f = q();
        let x = FreePoly::letter(&f, 0);
        let gb = nc_groebner(&[x.clone()], 6, &Limits::default()).unwrap();
        assert_eq!(gb.elements, vec![x]);
        let y = FreePoly::letter(&f, 1);
        assert_eq!(nc_normal_form(&y, &gb), y);
        let xyx = FreePoly::word(&f, &[0, 1, 0]);
        assert!(nc_normal_form(&xyx, &gb).is_zero());
    }

    #[test]
    fn dimension_probe_cases() {
        let f = q();
        let empty = nc_groebner(&[], 4, &Limits::default()).unwrap();
        assert_eq!(nc_dimension_probe(&empty, 1), 4);
        let all_letters: Vec<FreePoly> = (0..4).map(|l| FreePoly::letter(&f, l)).collect();
        let gb = nc_groebner(&all_letters, 4, &Limits::default()).unwrap();
        assert_eq!(nc_dimension_probe(&gb, 1), 0);
        assert_eq!(nc_dimension_probe(&gb, 3), 0);
    }

    #[test]
    fn a1_universal_presentation_quotient_grows() {
        // p = xy: relations x^2 - x, y^2 - y, xy, yx and their stars
        let f = q();
        let gens = vec![
            FreePoly::word(&f, &[0, 0]).sub(&FreePoly::letter(&f, 0)),
            FreePoly::word(&f, &[1, 1]).sub(&FreePoly::letter(&f, 1)),
            FreePoly::word(&f, &[0, 1]),
            FreePoly::word(&f, &[1, 0]),
        ];
        let closed: Vec<FreePoly> = gens.iter().cloned().chain(gens.iter().map(|g| g.star())).collect();
        let gb = nc_groebner(&closed, 6, &Limits::default()).unwrap();
        // the eight monomial relations above are already a basis
        assert_eq!(gb.elements.len(), 8);
        let d2 = nc_dimension_probe(&gb, 2);
        assert!(d2 >= 4, "expected at least 4 surviving degree-2 words, got {d2}");
        // x xs survives
        let xxs = FreePoly::word(&f, &[0, 2]);
        assert_eq!(nc_normal_form(&xxs, &gb), xxs);
    }

    #[test]
    fn overlap_completion_knuth_bendix_style() {
        // x^2 - y with bound high enough closes under overlaps
        let f = q();
        let g = FreePoly::word(&f, &[0, 0]).sub(&FreePoly::letter(&f, 1));
        let gb = nc_groebner(&[g], 6, &Limits::default()).unwrap();
        for gi in &gb.elements {
            for gj in &gb.elements {
                let (wi, _) = gi.leading().unwrap();
                let (wj, _) = gj.leading().unwrap();
                for ob in obstructions(0, wi, 1, wj) {
                    let s = gi
                        .sandwich(&ob.li, &ob.ri, &f.one())
                        .sub(&gj.sandwich(&ob.lj, &ob.rj, &f.one()));
                    if s.total_degree() <= gb.complete_below {
                        assert!(nc_normal_form(&s, &gb).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn appendix_a4_collapses_to_letters() {
        let (_field, gens) = appendix_system(AppendixSystem::A4).unwrap();
        let gb = nc_groebner(&gens, 6, &Limits::default()).unwrap();
        let leads: Vec<&Word> = gb.elements.iter().map(|g| g.leading().unwrap().0).collect();
        // all four letters lie in the ideal
        for l in 0..4u8 {
            let letter = FreePoly::letter(gb.elements[0].field(), l);
            assert!(nc_normal_form(&letter, &gb).is_zero(), "letter {l} not in ideal (leads {leads:?})");
        }
    }

    #[test]
    fn specialization_of_appendix_system() {
        let (field, gens) = appendix_system(AppendixSystem::A4).unwrap();
        let (_q, spec) = specialize_system(&field, &gens, &[2, 1, 2, 3, 5]).unwrap();
        let gb = nc_groebner(&spec, 6, &Limits::default()).unwrap();
        for l in 0..4u8 {
            let letter = FreePoly::letter(&Field::rationals(), l);
            assert!(nc_normal_form(&letter, &gb).is_zero());
        }
    }
}
