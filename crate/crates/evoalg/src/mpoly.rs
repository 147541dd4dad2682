//! Internal sparse multivariate polynomials over the base scalars (Q or F_p).
//!
//! These polynomials only ever appear inside rational-function-field
//! elements, so the module is crate private.  The gcd is the workhorse: over
//! Q it runs the heuristic evaluation/reconstruction algorithm (big integer
//! evaluation, balanced base-xi digits, division verification) with a
//! primitive pseudo-remainder fallback; over F_p it uses the pseudo-remainder
//! sequence directly.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Scalar of the base field: an exact rational or a residue mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum BaseVal {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

impl BaseVal {
    pub fn rat_int(n: i64) -> Self {
        BaseVal::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn modular(n: i64, p: u64) -> Self {
        let r = n.rem_euclid(p as i64) as u64;
        BaseVal::Mod { v: r, p }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BaseVal::Rat(r) => r.is_zero(),
            BaseVal::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            BaseVal::Rat(r) => r.is_one(),
            BaseVal::Mod { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (BaseVal::Rat(a), BaseVal::Rat(b)) => BaseVal::Rat(a + b),
            (BaseVal::Mod { v: a, p }, BaseVal::Mod { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                BaseVal::Mod { v: (a + b) % p, p: *p }
            }
            _ => unreachable!("mixed base scalars"),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            BaseVal::Rat(a) => BaseVal::Rat(-a),
            BaseVal::Mod { v, p } => BaseVal::Mod { v: (p - v) % p, p: *p },
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (BaseVal::Rat(a), BaseVal::Rat(b)) => BaseVal::Rat(a * b),
            (BaseVal::Mod { v: a, p }, BaseVal::Mod { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                BaseVal::Mod { v: mulmod(*a, *b, *p), p: *p }
            }
            _ => unreachable!("mixed base scalars"),
        }
    }

    /// Multiplicative inverse; the caller guarantees the value is nonzero.
    pub fn inv(&self) -> Self {
        match self {
            BaseVal::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                BaseVal::Rat(a.recip())
            }
            BaseVal::Mod { v, p } => {
                assert!(*v != 0, "inverse of zero");
                BaseVal::Mod { v: powmod(*v, p - 2, *p), p: *p }
            }
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
}

/// Graded reverse lexicographic comparison of exponent vectors.
pub(crate) fn cmp_grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the last differing slot wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

/// Sparse multivariate polynomial; terms map exponent vectors to nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u16>, BaseVal>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BaseVal) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, idx: usize, one: BaseVal) -> Self {
        let mut e = vec![0u16; nvars];
        e[idx] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(e, one);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms_mut(&mut self) -> &mut BTreeMap<Vec<u16>, BaseVal> {
        &mut self.terms
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<&BaseVal> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c);
            }
        }
        None
    }

    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max().unwrap_or(0)
    }

    pub fn deg_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    fn insert_term(&mut self, expo: Vec<u16>, c: BaseVal) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
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

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &BaseVal) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    /// Leading term under grevlex.
    pub fn leading(&self) -> Option<(&Vec<u16>, &BaseVal)> {
        self.terms.iter().max_by(|a, b| cmp_grevlex(a.0, b.0))
    }

    /// Divides by the grevlex leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv();
                self.scale(&inv)
            }
        }
    }

    /// Exact division; `None` when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inv()));
        }
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        let mut r = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while !r.is_zero() {
            let (rm, rc) = {
                let (m, c) = r.leading().unwrap();
                (m.clone(), c.clone())
            };
            let mut e = vec![0u16; self.nvars];
            for i in 0..self.nvars {
                if rm[i] < dm[i] {
                    return None;
                }
                e[i] = rm[i] - dm[i];
            }
            let c = rc.div(&dc);
            q.insert_term(e.clone(), c.clone());
            let mut t = MPoly::zero(self.nvars);
            t.insert_term(e, c);
            r = r.sub(&t.mul(d));
        }
        Some(q)
    }

    /// View as univariate in `var`: coefficient polynomials by v-degree.
    fn coeffs_in(&self, var: usize) -> BTreeMap<u16, MPoly> {
        let mut out: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            out.entry(d).or_insert_with(|| MPoly::zero(self.nvars)).insert_term(e2, c.clone());
        }
        out
    }

    fn content_in(&self, var: usize) -> MPoly {
        let coeffs = self.coeffs_in(var);
        let mut g = MPoly::zero(self.nvars);
        for p in coeffs.values() {
            g = mpoly_gcd(&g, p);
            if g.is_constant() && !g.is_zero() {
                return g;
            }
        }
        g
    }

    fn primitive_in(&self, var: usize) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(var);
        self.exact_div(&c).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `d` as univariate polynomials in `var`.
    fn pseudo_rem(&self, d: &Self, var: usize) -> MPoly {
        let dd = d.deg_in(var) as i64;
        let mut r = self.clone();
        let d_coeffs = d.coeffs_in(var);
        let lc_d = d_coeffs.values().last().unwrap().clone();
        while !r.is_zero() && r.deg_in(var) as i64 >= dd {
            let r_coeffs = r.coeffs_in(var);
            let (&dr, lc_r) = r_coeffs.iter().last().unwrap();
            let shift = dr as i64 - dd;
            // r <- lc_d * r - lc_r * x^shift * d
            let mut shifted = MPoly::zero(self.nvars);
            for (e, c) in &d.terms {
                let mut e2 = e.clone();
                e2[var] += shift as u16;
                shifted.insert_term(e2, c.clone());
            }
            r = r.mul(&lc_d).sub(&shifted.mul(lc_r));
        }
        r
    }

    /// Substitutes constants for the variables where `vals[i]` is `Some`.
    pub fn substitute(&self, vals: &[Option<BaseVal>]) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e2 = e.clone();
            for (i, v) in vals.iter().enumerate() {
                if let Some(x) = v {
                    for _ in 0..e[i] {
                        coeff = coeff.mul(x);
                    }
                    e2[i] = 0;
                }
            }
            out.insert_term(e2, coeff);
        }
        out
    }

    /// The componentwise minimum exponent over all terms (the largest
    /// monomial dividing every term).
    fn common_monomial(&self) -> Vec<u16> {
        let mut m = vec![u16::MAX; self.nvars];
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            m.fill(0);
        }
        m
    }

    fn divide_monomial(&self, m: &[u16]) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let e2: Vec<u16> = e.iter().zip(m).map(|(a, b)| a - b).collect();
            out.insert_term(e2, c.clone());
        }
        out
    }

    fn mul_monomial(&self, m: &[u16]) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let e2: Vec<u16> = e.iter().zip(m).map(|(a, b)| a + b).collect();
            out.insert_term(e2, c.clone());
        }
        out
    }

    /// Renders with the given variable names; terms in descending grevlex.
    pub fn render(&self, names: &[String]) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| cmp_grevlex(b, a));
        let mut s = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let (sign, mag) = match c {
                BaseVal::Rat(r) => {
                    if r.is_negative() {
                        ("-", format!("{}", -r))
                    } else {
                        ("+", format!("{r}"))
                    }
                }
                BaseVal::Mod { v, .. } => ("+", format!("{v}")),
            };
            if i == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { names[v].clone() } else { format!("{}^{}", names[v], x) })
                .collect();
            if mono.is_empty() {
                let _ = write!(s, "{mag}");
            } else if mag == "1" {
                let _ = write!(s, "{}", mono.join("*"));
            } else {
                let _ = write!(s, "{}*{}", mag, mono.join("*"));
            }
        }
        s
    }
}

// ---------------------------------------------------------------------------
// gcd machinery
// ---------------------------------------------------------------------------

/// Multivariate gcd, normalized so the grevlex leading coefficient is one.
pub(crate) fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    let one_val = {
        let c = a.terms.values().next().unwrap();
        c.inv().mul(c)
    };
    let one = MPoly::constant(a.nvars, one_val);
    // split off the largest common monomial factor
    let ma = a.common_monomial();
    let mb = b.common_monomial();
    let shared: Vec<u16> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    let a1 = a.divide_monomial(&ma);
    let b1 = b.divide_monomial(&mb);
    let core = if a1.is_constant() || b1.is_constant() {
        one
    } else if a1.make_monic() == b1.make_monic() {
        a1.make_monic()
    } else if quick_divides(&b1, &a1).is_some() {
        b1.make_monic()
    } else if quick_divides(&a1, &b1).is_some() {
        a1.make_monic()
    } else {
        let rational = matches!(a1.terms.values().next(), Some(BaseVal::Rat(_)));
        if rational {
            gcd_heuristic_driver(&a1, &b1)
        } else {
            gcd_prs(&a1, &b1)
        }
    };
    core.mul_monomial(&shared).make_monic()
}

/// `d | f` test that fails fast on size mismatch.
fn quick_divides(d: &MPoly, f: &MPoly) -> Option<MPoly> {
    if d.total_degree() > f.total_degree() {
        return None;
    }
    f.exact_div(d)
}

/// Primitive pseudo-remainder gcd (used over F_p bases and as the fallback
/// when the heuristic declines).
fn gcd_prs(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    if a.is_constant() || b.is_constant() {
        let c = a.terms.values().next().unwrap();
        return MPoly::constant(a.nvars, c.inv().mul(c));
    }
    let var = (0..a.nvars)
        .rev()
        .find(|&v| a.deg_in(v) > 0 || b.deg_in(v) > 0)
        .expect("nonconstant polynomial has a variable");
    if a.deg_in(var) == 0 {
        return gcd_prs(&b.content_in(var), a).make_monic();
    }
    if b.deg_in(var) == 0 {
        return gcd_prs(&a.content_in(var), b).make_monic();
    }
    let ca = a.content_in(var);
    let cb = b.content_in(var);
    let mut f = a.exact_div(&ca).expect("content divides");
    let mut g = b.exact_div(&cb).expect("content divides");
    if f.deg_in(var) < g.deg_in(var) {
        core::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = f.pseudo_rem(&g, var);
        f = g;
        g = if r.is_zero() { r } else { r.primitive_in(var) };
    }
    let cont = mpoly_gcd(&ca, &cb);
    f.primitive_in(var).mul(&cont).make_monic()
}

fn as_rat(v: &BaseVal) -> &BigRational {
    match v {
        BaseVal::Rat(r) => r,
        BaseVal::Mod { .. } => unreachable!("rational path"),
    }
}

/// Clears denominators and the integer content: primitive integer
/// coefficients.
fn integer_primitive(a: &MPoly) -> MPoly {
    let mut den_lcm = BigInt::one();
    for c in a.terms.values() {
        den_lcm = den_lcm.lcm(as_rat(c).denom());
    }
    let mut ints: Vec<(Vec<u16>, BigInt)> = a
        .terms
        .iter()
        .map(|(e, c)| (e.clone(), (as_rat(c) * &den_lcm).to_integer()))
        .collect();
    let mut g = BigInt::zero();
    for (_, n) in &ints {
        g = g.gcd(n);
    }
    if !g.is_one() && !g.is_zero() {
        for (_, n) in ints.iter_mut() {
            *n = &*n / &g;
        }
    }
    let mut out = MPoly::zero(a.nvars);
    for (e, n) in ints {
        out.insert_term(e, BaseVal::Rat(BigRational::from_integer(n)));
    }
    out
}

/// Max absolute value of the (integer) coefficients.
fn height(a: &MPoly) -> BigInt {
    let mut h = BigInt::zero();
    for c in a.terms.values() {
        let v = as_rat(c).numer().abs();
        if v > h {
            h = v;
        }
    }
    h
}

/// Evaluates `var := xi` over integer coefficients.
fn eval_var_int(a: &MPoly, var: usize, xi: &BigInt) -> MPoly {
    let deg = a.deg_in(var) as usize;
    let mut powers: Vec<BigInt> = Vec::with_capacity(deg + 1);
    powers.push(BigInt::one());
    for i in 1..=deg {
        let next = &powers[i - 1] * xi;
        powers.push(next);
    }
    let mut out = MPoly::zero(a.nvars);
    for (e, c) in &a.terms {
        let mut e2 = e.clone();
        let d = e2[var] as usize;
        e2[var] = 0;
        let v = as_rat(c) * &powers[d];
        out.insert_term(e2, BaseVal::Rat(v));
    }
    out
}

/// Balanced representative of `c mod xi` in `(-xi/2, xi/2]`.
fn balanced_mod(c: &BigInt, xi: &BigInt) -> BigInt {
    let mut r = c.mod_floor(xi);
    if &r * 2 > *xi {
        r -= xi;
    }
    r
}

/// Reconstructs a polynomial in `var` from the base-xi digits of `gamma`.
fn reconstruct(gamma: &MPoly, var: usize, xi: &BigInt) -> Option<MPoly> {
    let mut g = MPoly::zero(gamma.nvars);
    let mut rest = gamma.clone();
    let mut power: u16 = 0;
    while !rest.is_zero() {
        let mut digit = MPoly::zero(gamma.nvars);
        let mut next = MPoly::zero(gamma.nvars);
        for (e, c) in &rest.terms {
            let ci = as_rat(c).to_integer();
            let d = balanced_mod(&ci, xi);
            if !d.is_zero() {
                let mut e2 = e.clone();
                e2[var] = power;
                digit.insert_term(e2, BaseVal::Rat(BigRational::from_integer(d.clone())));
            }
            let q = (&ci - &d) / xi;
            if !q.is_zero() {
                next.insert_term(e.clone(), BaseVal::Rat(BigRational::from_integer(q)));
            }
        }
        g = g.add(&digit);
        rest = next;
        power = power.checked_add(1)?;
    }
    Some(g)
}

/// Heuristic gcd on primitive integer polynomials; falls back to the
/// pseudo-remainder sequence when the evaluation points fail.
fn gcd_heuristic_driver(a: &MPoly, b: &MPoly) -> MPoly {
    let pa = integer_primitive(a);
    let pb = integer_primitive(b);
    match gcd_heuristic(&pa, &pb, 0) {
        Some(g) => g.make_monic(),
        None => gcd_prs(a, b),
    }
}

fn gcd_heuristic(a: &MPoly, b: &MPoly, depth: usize) -> Option<MPoly> {
    if depth > 8 {
        return None;
    }
    if a.is_zero() {
        return Some(b.clone());
    }
    if b.is_zero() {
        return Some(a.clone());
    }
    // integer gcd at zero effective variables
    if a.is_constant() && b.is_constant() {
        let ga = as_rat(a.constant_value().unwrap()).to_integer();
        let gb = as_rat(b.constant_value().unwrap()).to_integer();
        return Some(MPoly::constant(
            a.nvars,
            BaseVal::Rat(BigRational::from_integer(ga.gcd(&gb))),
        ));
    }
    if a.is_constant() || b.is_constant() {
        // gcd of a constant with the integer content of the other
        let (c, p) = if a.is_constant() { (a, b) } else { (b, a) };
        let mut g = as_rat(c.constant_value().unwrap()).to_integer();
        for coeff in p.terms.values() {
            g = g.gcd(&as_rat(coeff).to_integer());
            if g.is_one() {
                break;
            }
        }
        return Some(MPoly::constant(a.nvars, BaseVal::Rat(BigRational::from_integer(g))));
    }
    let var = (0..a.nvars).rev().find(|&v| a.deg_in(v) > 0 && b.deg_in(v) > 0);
    let Some(var) = var else {
        // no common variable: only the integer contents can divide both
        let mut g = BigInt::zero();
        for c in a.terms.values().chain(b.terms.values()) {
            g = g.gcd(&as_rat(c).to_integer());
        }
        return Some(MPoly::constant(a.nvars, BaseVal::Rat(BigRational::from_integer(g))));
    };

    let ha = height(a);
    let hb = height(b);
    let mut xi: BigInt = (if ha < hb { ha } else { hb }) * 2 + 29;
    if xi < BigInt::from(101) {
        xi = BigInt::from(101);
    }
    for _ in 0..6 {
        // guard against gigantic evaluated integers
        let bits = xi.bits() * (a.deg_in(var).max(b.deg_in(var)) as u64 + 1);
        if bits > 500_000 {
            return None;
        }
        let ea = eval_var_int(a, var, &xi);
        let eb = eval_var_int(b, var, &xi);
        if let Some(gamma) = gcd_heuristic(&ea, &eb, depth + 1) {
            if let Some(g) = reconstruct(&gamma, var, &xi) {
                let g = integer_primitive(&g);
                if !g.is_zero() && quick_divides(&g, a).is_some() && quick_divides(&g, b).is_some() {
                    return Some(g);
                }
            }
        }
        xi = (&xi * 73794usize) / 27011usize + 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BaseVal {
        BaseVal::rat_int(n)
    }

    fn xy_poly(terms: &[(i64, u16, u16)]) -> MPoly {
        // terms of c * x^i * y^j in two variables
        let mut p = MPoly::zero(2);
        for &(c, i, j) in terms {
            p.insert_term(vec![i, j], q(c));
        }
        p
    }

    #[test]
    fn gcd_univariate() {
        // (x+1)(x+2) and (x+1)(x-3)
        let a = xy_poly(&[(1, 2, 0), (3, 1, 0), (2, 0, 0)]);
        let b = xy_poly(&[(1, 2, 0), (-2, 1, 0), (-3, 0, 0)]);
        let g = mpoly_gcd(&a, &b);
        let expect = xy_poly(&[(1, 1, 0), (1, 0, 0)]);
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_bivariate() {
        // (x+y) * x  and (x+y) * y
        let a = xy_poly(&[(1, 2, 0), (1, 1, 1)]);
        let b = xy_poly(&[(1, 1, 1), (1, 0, 2)]);
        let g = mpoly_gcd(&a, &b);
        let expect = xy_poly(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = xy_poly(&[(1, 1, 0), (1, 0, 0)]);
        let b = xy_poly(&[(1, 0, 1), (2, 0, 0)]);
        let g = mpoly_gcd(&a, &b);
        assert!(g.is_constant() && g.constant_value().unwrap().is_one());
    }

    #[test]
    fn gcd_with_nontrivial_cofactors() {
        // g = x^2*y + 3, a = g*(x + y), b = g*(y^2 - 2)
        let g0 = xy_poly(&[(1, 2, 1), (3, 0, 0)]);
        let a = g0.mul(&xy_poly(&[(1, 1, 0), (1, 0, 1)]));
        let b = g0.mul(&xy_poly(&[(1, 0, 2), (-2, 0, 0)]));
        let g = mpoly_gcd(&a, &b);
        assert_eq!(g, g0.make_monic());
    }

    #[test]
    fn gcd_five_variables_fast() {
        let mut shared = MPoly::zero(5);
        shared.insert_term(vec![1, 1, 0, 0, 0], q(1));
        shared.insert_term(vec![0, 0, 2, 0, 0], q(1));
        shared.insert_term(vec![0, 0, 0, 1, 1], q(-3));
        let mut f1 = MPoly::zero(5);
        f1.insert_term(vec![1, 0, 0, 0, 2], q(2));
        f1.insert_term(vec![0, 1, 0, 1, 0], q(5));
        let mut f2 = MPoly::zero(5);
        f2.insert_term(vec![0, 0, 1, 0, 1], q(7));
        f2.insert_term(vec![2, 0, 0, 0, 0], q(-1));
        let a = shared.mul(&f1);
        let b = shared.mul(&f2);
        assert_eq!(mpoly_gcd(&a, &b), shared.make_monic());
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = xy_poly(&[(1, 2, 0), (1, 0, 0)]);
        let b = xy_poly(&[(1, 1, 0)]);
        assert!(a.exact_div(&b).is_none());
        let c = a.mul(&b);
        assert_eq!(c.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn grevlex_orders_by_degree_then_reverse_lex() {
        assert_eq!(cmp_grevlex(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&[1, 1], &[0, 2]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&[0, 3], &[2, 0]), Ordering::Greater);
    }
}
