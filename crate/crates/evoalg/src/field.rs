//! Exact scalars: the rationals, prime fields F_p and rational-function
//! fields Q(t1,...,tk) or F_p(t1,...,tk).
//!
//! Every element carries a handle to its owning field and is kept in a
//! canonical reduced form, so equality is structural: reduced fractions for
//! Q, residues in `[0, p)` for F_p, and gcd-reduced fractions of multivariate
//! polynomials with monic denominator for function fields.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mpoly::{BaseVal, MPoly};
use crate::parse;

/// The base of a (possibly function) field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Base {
    Rationals,
    Prime(u64),
}

#[derive(Debug, PartialEq, Eq)]
struct FieldRepr {
    base: Base,
    params: Vec<String>,
}

/// A field descriptor; cheap to clone, equality is structural.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for Field {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The field of rational numbers.
    pub fn rationals() -> Field {
        Field(Arc::new(FieldRepr { base: Base::Rationals, params: Vec::new() }))
    }

    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        Field::with_base(Base::Prime(p), Vec::new())
    }

    fn with_base(base: Base, params: Vec<String>) -> Result<Field> {
        for (i, a) in params.iter().enumerate() {
            if params[i + 1..].contains(a) {
                return Err(Error::DuplicateParam(a.clone()));
            }
        }
        Ok(Field(Arc::new(FieldRepr { base, params })))
    }

    /// A rational-function field over `base` (which must itself carry no
    /// parameters) in the given parameter names.
    pub fn function(base: &Field, params: &[&str]) -> Result<Field> {
        if !base.0.params.is_empty() {
            return Err(Error::UnsupportedField("nested function fields".to_string()));
        }
        Field::with_base(base.0.base, params.iter().map(|s| s.to_string()).collect())
    }

    /// Parses a field spec: `Q`, `F<p>`, `Q(a,b)`, `F<p>(a,b)`.
    pub fn parse(spec: &str) -> Result<Field> {
        let spec = spec.trim();
        let (head, params) = match spec.find('(') {
            None => (spec, Vec::new()),
            Some(i) => {
                if !spec.ends_with(')') {
                    return Err(Error::Parse(format!("malformed field spec `{spec}`")));
                }
                let inner = &spec[i + 1..spec.len() - 1];
                let names: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
                if names.iter().any(|n| n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') || !n.starts_with(|c: char| c.is_ascii_alphabetic()))
                {
                    return Err(Error::Parse(format!("bad parameter list in `{spec}`")));
                }
                (&spec[..i], names)
            }
        };
        let base = match head {
            "Q" => Base::Rationals,
            h if h.starts_with('F') => {
                let p: u64 = h[1..].parse().map_err(|_| Error::Parse(format!("bad prime in `{spec}`")))?;
                if !is_prime(p) {
                    return Err(Error::NonPrime(p));
                }
                Base::Prime(p)
            }
            _ => return Err(Error::Parse(format!("unknown field spec `{spec}`"))),
        };
        Field::with_base(base, params)
    }

    /// Canonical spec string (`Q`, `F5`, `Q(a,b)`, ...).
    pub fn spec(&self) -> String {
        let head = match self.0.base {
            Base::Rationals => "Q".to_string(),
            Base::Prime(p) => format!("F{p}"),
        };
        if self.0.params.is_empty() {
            head
        } else {
            format!("{head}({})", self.0.params.join(","))
        }
    }

    /// 0 for Q-based fields, p for F_p-based fields.
    pub fn characteristic(&self) -> u64 {
        match self.0.base {
            Base::Rationals => 0,
            Base::Prime(p) => p,
        }
    }

    /// Parameter names of a function field (empty otherwise).
    pub fn params(&self) -> &[String] {
        &self.0.params
    }

    /// `Some(p)` when the field is a plain finite field F_p.
    pub fn finite_order(&self) -> Option<u64> {
        match (self.0.base, self.0.params.is_empty()) {
            (Base::Prime(p), true) => Some(p),
            _ => None,
        }
    }

    /// All elements of a plain finite field, in residue order.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        let p = self
            .finite_order()
            .ok_or_else(|| Error::UnsupportedField("element enumeration needs a finite field".to_string()))?;
        Ok((0..p).map(|v| Elem { field: self.clone(), value: Value::Mod(v) }).collect())
    }

    pub(crate) fn base_zero(&self) -> BaseVal {
        match self.0.base {
            Base::Rationals => BaseVal::Rat(BigRational::zero()),
            Base::Prime(p) => BaseVal::Mod { v: 0, p },
        }
    }

    pub(crate) fn base_one(&self) -> BaseVal {
        match self.0.base {
            Base::Rationals => BaseVal::Rat(BigRational::one()),
            Base::Prime(p) => BaseVal::Mod { v: 1, p },
        }
    }

    pub fn zero(&self) -> Elem {
        self.int(0)
    }

    pub fn one(&self) -> Elem {
        self.int(1)
    }

    /// Embeds a (signed) integer.
    pub fn int(&self, n: i64) -> Elem {
        let base = match self.0.base {
            Base::Rationals => BaseVal::rat_int(n),
            Base::Prime(p) => BaseVal::modular(n, p),
        };
        self.from_base(base)
    }

    /// Embeds an arbitrary-precision integer.
    pub(crate) fn int_big(&self, n: &BigInt) -> Elem {
        let base = match self.0.base {
            Base::Rationals => BaseVal::Rat(BigRational::from_integer(n.clone())),
            Base::Prime(p) => {
                let r = ((n % p) + p) % p;
                let (_, digits) = r.to_u64_digits();
                BaseVal::Mod { v: digits.first().copied().unwrap_or(0), p }
            }
        };
        self.from_base(base)
    }

    /// Embeds a rational number n/d.
    pub fn ratio(&self, n: i64, d: i64) -> Elem {
        assert!(d != 0, "zero denominator");
        let num = self.int(n);
        let den = self.int(d);
        num.checked_div(&den).expect("nonzero denominator maps to nonzero element")
    }

    pub(crate) fn from_base(&self, v: BaseVal) -> Elem {
        if self.0.params.is_empty() {
            Elem {
                field: self.clone(),
                value: match v {
                    BaseVal::Rat(r) => Value::Rat(r),
                    BaseVal::Mod { v, .. } => Value::Mod(v),
                },
            }
        } else {
            let n = self.0.params.len();
            Elem {
                field: self.clone(),
                value: Value::Fun(RatFun::new(MPoly::constant(n, v), MPoly::constant(n, self.base_one()))),
            }
        }
    }

    pub(crate) fn ratio_big(&self, r: BigRational) -> Elem {
        debug_assert!(matches!(self.0.base, Base::Rationals));
        self.from_base(BaseVal::Rat(r))
    }

    /// Builds `c * prod(params^num) / prod(params^den)` in a function field.
    pub(crate) fn monomial_elem(&self, c: BaseVal, num_expo: &[u16], den_expo: &[u16]) -> Elem {
        let n = self.0.params.len();
        debug_assert_eq!(num_expo.len(), n);
        let mut num = MPoly::zero(n);
        let mut den = MPoly::zero(n);
        num.terms_mut().insert(num_expo.to_vec(), c);
        den.terms_mut().insert(den_expo.to_vec(), self.base_one());
        Elem { field: self.clone(), value: Value::Fun(RatFun::new(num, den)) }
    }

    /// The parameter with the given name, as a field element.
    pub fn param(&self, name: &str) -> Result<Elem> {
        let idx = self
            .0
            .params
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::Parse(format!("unknown parameter `{name}` in {}", self.spec())))?;
        let n = self.0.params.len();
        Ok(Elem {
            field: self.clone(),
            value: Value::Fun(RatFun::new(
                MPoly::var(n, idx, self.base_one()),
                MPoly::constant(n, self.base_one()),
            )),
        })
    }

    /// Parses an element: `p/q` or `k mod p` for plain fields, polynomial
    /// fraction expressions for function fields.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        parse::parse_field_elem(self, text)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

/// Reduced fraction of multivariate polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RatFun {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatFun {
    /// General constructor: full gcd reduction.  The arithmetic below keeps
    /// fractions reduced with much smaller gcd calls, so this mainly serves
    /// element construction and parsing.
    pub fn new(num: MPoly, den: MPoly) -> RatFun {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            let one = den.exact_div(&den).unwrap();
            return RatFun { num, den: one };
        }
        let g = crate::mpoly::mpoly_gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        RatFun::monic_den(num, den)
    }

    fn monic_den(mut num: MPoly, mut den: MPoly) -> RatFun {
        if let Some((_, lc)) = den.leading() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    fn one_poly(&self) -> MPoly {
        self.den.exact_div(&self.den).unwrap()
    }

    /// Sum of reduced fractions, reduced: `t = gcd(b, d)`, then only
    /// `gcd(n0, t)` is needed (Henrici's algorithm).
    pub fn rf_add(&self, rhs: &RatFun) -> RatFun {
        use crate::mpoly::mpoly_gcd;
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.num, &self.den);
        let (c, d) = (&rhs.num, &rhs.den);
        let t = mpoly_gcd(b, d);
        if t.is_constant() {
            let num = a.mul(d).add(&c.mul(b));
            if num.is_zero() {
                return RatFun { num, den: self.one_poly() };
            }
            return RatFun::monic_den(num, b.mul(d));
        }
        let b1 = b.exact_div(&t).expect("gcd divides");
        let d1 = d.exact_div(&t).expect("gcd divides");
        let n0 = a.mul(&d1).add(&c.mul(&b1));
        if n0.is_zero() {
            return RatFun { num: n0, den: self.one_poly() };
        }
        let g = mpoly_gcd(&n0, &t);
        let num = n0.exact_div(&g).expect("gcd divides");
        let den = b.mul(&d1).exact_div(&g).expect("gcd divides");
        RatFun::monic_den(num, den)
    }

    /// Product of reduced fractions, reduced via the cross gcds
    /// `gcd(a, d)` and `gcd(c, b)`.
    pub fn rf_mul(&self, rhs: &RatFun) -> RatFun {
        use crate::mpoly::mpoly_gcd;
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFun { num: MPoly::zero(self.num.nvars), den: self.one_poly() };
        }
        let (a, b) = (&self.num, &self.den);
        let (c, d) = (&rhs.num, &rhs.den);
        let g1 = mpoly_gcd(a, d);
        let g2 = mpoly_gcd(c, b);
        let num = a.exact_div(&g1).unwrap().mul(&c.exact_div(&g2).unwrap());
        let den = b.exact_div(&g2).unwrap().mul(&d.exact_div(&g1).unwrap());
        RatFun::monic_den(num, den)
    }

    /// Reciprocal of a reduced nonzero fraction.
    pub fn rf_inv(&self) -> RatFun {
        assert!(!self.num.is_zero(), "inverse of zero");
        RatFun::monic_den(self.den.clone(), self.num.clone())
    }

    pub fn rf_neg(&self) -> RatFun {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Value {
    Rat(BigRational),
    Mod(u64),
    Fun(RatFun),
}

/// An element of a [`Field`], in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    field: Field,
    value: Value,
}

impl Elem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub(crate) fn value(&self) -> &Value {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_zero(),
            Value::Mod(v) => *v == 0,
            Value::Fun(f) => f.num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_one(),
            Value::Mod(v) => *v == 1,
            Value::Fun(f) => f.num.is_constant() && f.den.is_constant() && f.num == f.den,
        }
    }

    fn assert_same_field(&self, other: &Elem) {
        assert!(self.field == other.field, "operands belong to different fields");
    }

    pub fn add(&self, rhs: &Elem) -> Elem {
        self.assert_same_field(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => Value::Mod((a + b) % self.field.characteristic()),
            (Value::Fun(a), Value::Fun(b)) => Value::Fun(a.rf_add(b)),
            _ => unreachable!("same field, same representation"),
        };
        Elem { field: self.field.clone(), value }
    }

    pub fn sub(&self, rhs: &Elem) -> Elem {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Elem {
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a) => {
                let p = self.field.characteristic();
                Value::Mod((p - a) % p)
            }
            Value::Fun(a) => Value::Fun(a.rf_neg()),
        };
        Elem { field: self.field.clone(), value }
    }

    pub fn mul(&self, rhs: &Elem) -> Elem {
        self.assert_same_field(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.field.characteristic();
                Value::Mod(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            (Value::Fun(a), Value::Fun(b)) => Value::Fun(a.rf_mul(b)),
            _ => unreachable!("same field, same representation"),
        };
        Elem { field: self.field.clone(), value }
    }

    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    pub fn inv(&self) -> Result<Elem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(a.recip()),
            Value::Mod(a) => {
                let p = self.field.characteristic();
                let mut inv = 1u64;
                let mut b = *a % p;
                let mut e = p - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        inv = ((inv as u128 * b as u128) % p as u128) as u64;
                    }
                    b = ((b as u128 * b as u128) % p as u128) as u64;
                    e >>= 1;
                }
                Value::Mod(inv)
            }
            Value::Fun(a) => Value::Fun(a.rf_inv()),
        };
        Ok(Elem { field: self.field.clone(), value })
    }

    pub fn checked_div(&self, rhs: &Elem) -> Result<Elem> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Integer power; negative exponents invert (zero base then errors).
    pub fn pow(&self, e: i64) -> Result<Elem> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field.one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub(crate) fn as_rat(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub(crate) fn as_mod(&self) -> Option<u64> {
        match &self.value {
            Value::Mod(v) => Some(*v),
            _ => None,
        }
    }

    pub(crate) fn as_fun(&self) -> Option<&RatFun> {
        match &self.value {
            Value::Fun(f) => Some(f),
            _ => None,
        }
    }

    /// Size measure used by resource guards: total stored terms.
    pub fn complexity(&self) -> usize {
        match &self.value {
            Value::Rat(_) | Value::Mod(_) => 1,
            Value::Fun(f) => f.num.terms.len() + f.den.terms.len(),
        }
    }

    /// Splits a function-field value into numerator and denominator parts
    /// (both with denominator one); `None` over plain fields.
    pub(crate) fn fun_split(&self) -> Option<(Elem, Elem)> {
        let fun = self.as_fun()?;
        let one = fun.den.exact_div(&fun.den).unwrap();
        let num = Elem {
            field: self.field.clone(),
            value: Value::Fun(RatFun { num: fun.num.clone(), den: one.clone() }),
        };
        let den = Elem {
            field: self.field.clone(),
            value: Value::Fun(RatFun { num: fun.den.clone(), den: one }),
        };
        Some((num, den))
    }

    /// Divides the common polynomial content out of a coefficient vector of
    /// denominator-one function-field values; returns the content.  Plain
    /// fields return 1 untouched.
    pub(crate) fn strip_content(coeffs: &mut [Elem]) -> Elem {
        use crate::mpoly::mpoly_gcd;
        assert!(!coeffs.is_empty());
        let field = coeffs[0].field().clone();
        if field.params().is_empty() {
            return field.one();
        }
        let mut content = MPoly::zero(field.params().len());
        for c in coeffs.iter() {
            content = mpoly_gcd(&content, &c.as_fun().expect("function-field value").num);
            if content.is_constant() && !content.is_zero() {
                return field.one();
            }
        }
        if content.is_zero() || content.is_constant() {
            return field.one();
        }
        let one = MPoly::constant(content.nvars, field.base_one());
        for c in coeffs.iter_mut() {
            let num = c.as_fun().unwrap().num.exact_div(&content).expect("content divides");
            *c = Elem { field: field.clone(), value: Value::Fun(RatFun { num, den: one.clone() }) };
        }
        Elem { field: field.clone(), value: Value::Fun(RatFun { num: content, den: one }) }
    }

    /// Scale-normalizes a nonzero coefficient vector in place: over function
    /// fields, brings all fractions to denominator one, divides out the
    /// common polynomial content and scales the `lead` coefficient to a
    /// monic polynomial; over plain fields, divides by the `lead`
    /// coefficient.  Used by the fraction-free Gröbner engines.
    pub(crate) fn primitive_coeffs(coeffs: &mut [Elem], lead: usize) {
        use crate::mpoly::mpoly_gcd;
        assert!(!coeffs.is_empty());
        let field = coeffs[0].field().clone();
        if field.params().is_empty() {
            let inv = coeffs[lead].inv().expect("nonzero leading coefficient");
            for c in coeffs.iter_mut() {
                *c = c.mul(&inv);
            }
            return;
        }
        // common denominator
        let dens: Vec<MPoly> = coeffs
            .iter()
            .map(|c| c.as_fun().expect("function-field coefficient").den.clone())
            .collect();
        let mut lcm = dens[0].clone();
        for d in &dens[1..] {
            if d.is_constant() {
                continue;
            }
            let g = mpoly_gcd(&lcm, d);
            lcm = lcm.mul(&d.exact_div(&g).expect("gcd divides"));
        }
        let mut nums: Vec<MPoly> = coeffs
            .iter()
            .zip(&dens)
            .map(|(c, d)| {
                let f = c.as_fun().unwrap();
                f.num.mul(&lcm.exact_div(d).expect("lcm is divisible"))
            })
            .collect();
        // common polynomial content
        let mut content = MPoly::zero(nums[0].nvars);
        for n in &nums {
            content = mpoly_gcd(&content, n);
            if content.is_constant() && !content.is_zero() {
                break;
            }
        }
        if !content.is_constant() {
            for n in nums.iter_mut() {
                *n = n.exact_div(&content).expect("content divides");
            }
        }
        // make the designated leading coefficient monic
        let scale = nums[lead].leading().expect("nonzero lead").1.inv();
        let one = MPoly::constant(lcm.nvars, field.base_one());
        for (c, n) in coeffs.iter_mut().zip(nums) {
            *c = Elem {
                field: field.clone(),
                value: Value::Fun(RatFun { num: n.scale(&scale), den: one.clone() }),
            };
        }
    }

    /// Specializes function-field parameters to base-field values; identity
    /// on plain fields.  `vals` pairs parameter names with substitutes in the
    /// base field.  Errors when a denominator vanishes at the point.
    pub fn specialize(&self, target: &Field, vals: &[(String, Elem)]) -> Result<Elem> {
        let fun = match &self.value {
            Value::Fun(f) => f,
            Value::Rat(r) => {
                return Ok(Elem { field: target.clone(), value: Value::Rat(r.clone()) })
            }
            Value::Mod(v) => return Ok(Elem { field: target.clone(), value: Value::Mod(*v) }),
        };
        let params = self.field.params();
        let mut subst: Vec<Option<BaseVal>> = vec![None; params.len()];
        for (name, v) in vals {
            if let Some(i) = params.iter().position(|p| p == name) {
                subst[i] = Some(match v.value() {
                    Value::Rat(r) => BaseVal::Rat(r.clone()),
                    Value::Mod(m) => BaseVal::Mod { v: *m, p: v.field().characteristic() },
                    Value::Fun(_) => {
                        return Err(Error::UnsupportedField("specialization target must be a plain field".to_string()))
                    }
                });
            }
        }
        if subst.iter().any(|s| s.is_none()) {
            return Err(Error::UnsupportedField("specialization must bind every parameter".to_string()));
        }
        let num = fun.num.substitute(&subst);
        let den = fun.den.substitute(&subst);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let den_c = den
            .constant_value()
            .cloned()
            .ok_or_else(|| Error::UnsupportedField("incomplete specialization".to_string()))?;
        let num_c = if num.is_zero() {
            target.base_zero()
        } else {
            num.constant_value()
                .cloned()
                .ok_or_else(|| Error::UnsupportedField("incomplete specialization".to_string()))?
        };
        Ok(target.from_base(num_c.div(&den_c)))
    }

    /// Canonical serialization: `n/d`, `k mod p`, or `num/den`.
    pub fn serial(&self) -> String {
        match &self.value {
            Value::Rat(r) => format!("{}/{}", r.numer(), r.denom()),
            Value::Mod(v) => format!("{} mod {}", v, self.field.characteristic()),
            Value::Fun(f) => format!(
                "({})/({})",
                f.num.render(self.field.params()),
                f.den.render(self.field.params())
            ),
        }
    }

    /// Deterministic total order used for canonical parameter pairs:
    /// numeric for Q and F_p, graded-lexicographic on the serialized
    /// fraction for function fields.
    pub fn order_cmp(&self, other: &Elem) -> Ordering {
        self.assert_same_field(other);
        match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => a.cmp(b),
            (Value::Mod(a), Value::Mod(b)) => a.cmp(b),
            (Value::Fun(a), Value::Fun(b)) => {
                let ka = (a.num.total_degree() + a.den.total_degree(), self.serial());
                let kb = (b.num.total_degree() + b.den.total_degree(), other.serial());
                ka.cmp(&kb)
            }
            _ => unreachable!("same field, same representation"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Mod(v) => write!(f, "{v}"),
            Value::Fun(fun) => {
                let names = self.field.params();
                if fun.den.is_constant() && fun.den.constant_value().map(|c| c.is_one()).unwrap_or(false) {
                    write!(f, "{}", fun.num.render(names))
                } else {
                    write!(f, "({})/({})", fun.num.render(names), fun.den.render(names))
                }
            }
        }
    }
}

impl core::ops::Add for &Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        Elem::add(self, rhs)
    }
}
impl core::ops::Sub for &Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        Elem::sub(self, rhs)
    }
}
impl core::ops::Mul for &Elem {
    type Output = Elem;
    fn mul(self, rhs: &Elem) -> Elem {
        Elem::mul(self, rhs)
    }
}
impl core::ops::Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        Elem::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_field_specs() {
        assert_eq!(Field::parse("Q").unwrap().characteristic(), 0);
        assert_eq!(Field::parse("F3").unwrap().characteristic(), 3);
        let qab = Field::parse("Q(a,b)").unwrap();
        assert_eq!(qab.characteristic(), 0);
        assert_eq!(qab.params(), &["a".to_string(), "b".to_string()]);
        assert!(matches!(Field::parse("F4"), Err(Error::NonPrime(4))));
        assert!(matches!(Field::parse("Q(a,a)"), Err(Error::DuplicateParam(_))));
        assert!(Field::parse("R").is_err());
    }

    #[test]
    fn rational_arithmetic_is_canonical() {
        let q = Field::rationals();
        let x = q.ratio(4, 6);
        assert_eq!(x.serial(), "2/3");
        let y = x.checked_div(&q.int(2)).unwrap();
        assert_eq!(y.serial(), "1/3");
        assert_eq!(y.mul(&q.int(3)), q.one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = Field::prime(7).unwrap();
        let a = f7.int(5);
        let b = f7.int(4);
        assert_eq!(a.mul(&b), f7.int(6));
        assert_eq!(a.inv().unwrap(), f7.int(3));
        assert_eq!(f7.int(-1), f7.int(6));
    }

    #[test]
    fn function_field_fractions_reduce() {
        let f = Field::parse("Q(x,y)").unwrap();
        let x = f.param("x").unwrap();
        let y = f.param("y").unwrap();
        // (x^2 - y^2)/(x - y) == x + y
        let num = x.mul(&x).sub(&y.mul(&y));
        let den = x.sub(&y);
        let q = num.checked_div(&den).unwrap();
        assert_eq!(q, x.add(&y));
        assert_eq!(q.serial(), "(x + y)/(1)");
    }

    #[test]
    fn division_round_trip_exact() {
        let f = Field::parse("Q(t)").unwrap();
        let t = f.param("t").unwrap();
        let a = t.mul(&t).add(&f.int(3));
        let b = t.add(&f.int(1));
        let q = a.checked_div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn specialization_rejects_pole() {
        let f = Field::parse("Q(t)").unwrap();
        let q = Field::rationals();
        let t = f.param("t").unwrap();
        let e = f.one().checked_div(&t).unwrap();
        let at1 = e.specialize(&q, &[("t".to_string(), q.int(1))]).unwrap();
        assert_eq!(at1, q.one());
        assert!(e.specialize(&q, &[("t".to_string(), q.int(0))]).is_err());
    }
}
