//! Radical-class arithmetic: deciding membership in (K^x)^n, extracting
//! n-th roots, and listing the roots of binomials x^n = c.
//!
//! Over Q the decision is total (integer n-th roots of reduced fractions).
//! Over F_p roots are found by enumeration for moderate p.  Over function
//! fields the test is intentionally partial: constant-times-monomial values
//! are decided exactly, non-monomial values are rejected soundly only when a
//! degree obstruction proves no root exists, and everything else errors
//! rather than guessing.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::mpoly::BaseVal;

/// Largest prime field over which exhaustive root search is attempted.
const ENUM_LIMIT: u64 = 1 << 20;

/// Trial-division bound for rational factorization.
const TRIAL_LIMIT: u64 = 1_000_000;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
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

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factors a positive integer: trial division below [`TRIAL_LIMIT`], then the
/// cofactor must be a prime or a prime power (checked by exact roots), else
/// the factorization is refused.
pub(crate) fn factor_positive(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    assert!(n.is_positive());
    let mut m = n.clone();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let db = BigInt::from(d);
        if (&db * &db) > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &db).is_zero() {
            m /= &db;
            e += 1;
        }
        if e > 0 {
            out.push((db, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(out);
    }
    // cofactor: a single prime, or a perfect power of one
    if let Some(u) = m.to_u64() {
        if is_prime_u64(u) {
            out.push((m, 1));
            return Ok(out);
        }
        for k in 2..=63u32 {
            let r = num_integer::Roots::nth_root(&u, k);
            if r.checked_pow(k).map(|v| v == u).unwrap_or(false) && is_prime_u64(r) {
                out.push((BigInt::from(r), k));
                return Ok(out);
            }
            if r < 2 {
                break;
            }
        }
    }
    Err(Error::UndecidableRoot(format!(
        "cannot factor {n} (cofactor {m} beyond trial division)"
    )))
}

/// Signed prime factorization of a nonzero rational: `(sign, [(p, e)])` with
/// negative exponents for denominator primes.
pub(crate) fn factor_rational(x: &BigRational) -> Result<(i8, Vec<(BigInt, i64)>)> {
    assert!(!x.is_zero());
    let sign = if x.is_negative() { -1 } else { 1 };
    let num = x.numer().abs();
    let den = x.denom().abs();
    let mut map: Vec<(BigInt, i64)> = Vec::new();
    if !num.is_one() {
        for (p, e) in factor_positive(&num)? {
            map.push((p, e as i64));
        }
    }
    if !den.is_one() {
        for (p, e) in factor_positive(&den)? {
            map.push((p, -(e as i64)));
        }
    }
    map.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((sign, map))
}

fn rational_nth_root(x: &BigRational, n: u32) -> Option<BigRational> {
    let neg = x.is_negative();
    if neg && n % 2 == 0 {
        return None;
    }
    let a = x.numer().abs();
    let b = x.denom().abs();
    let ra = num_integer::Roots::nth_root(&a, n);
    let rb = num_integer::Roots::nth_root(&b, n);
    if num_traits::pow(ra.clone(), n as usize) != a || num_traits::pow(rb.clone(), n as usize) != b {
        return None;
    }
    let mut r = BigRational::new(ra, rb);
    if neg {
        r = -r;
    }
    Some(r)
}

fn prime_field_nth_root(x: u64, n: u32, p: u64) -> Result<Option<u64>> {
    if x == 0 {
        return Ok(Some(0));
    }
    let g = (n as u64).gcd(&(p - 1));
    if powmod(x, (p - 1) / g, p) != 1 {
        return Ok(None);
    }
    if g == 1 {
        // n invertible mod p-1: unique root x^(n^-1 mod p-1)
        let ninv = mod_inverse(n as u64 % (p - 1), p - 1).expect("gcd 1");
        return Ok(Some(powmod(x, ninv, p)));
    }
    if p > ENUM_LIMIT {
        return Err(Error::FieldTooLarge { p, limit: ENUM_LIMIT });
    }
    for r in 1..p {
        if powmod(r, n as u64, p) == x {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % m as i128 + m as i128) % m as i128) as u64)
}

/// Finds `r` with `r^n = x`, or `None` when no such element exists in the
/// field.  Partial over function fields (see module docs).
pub fn has_nth_root(x: &Elem, n: u32) -> Result<Option<Elem>> {
    assert!(n > 0, "root index must be positive");
    let field = x.field();
    if x.is_zero() {
        return Ok(Some(field.zero()));
    }
    if let Some(r) = x.as_rat() {
        return Ok(rational_nth_root(r, n).map(|v| field.ratio_big(v)));
    }
    if let Some(v) = x.as_mod() {
        let p = field.characteristic();
        return Ok(prime_field_nth_root(v, n, p)?.map(|r| field.int(r as i64)));
    }
    // function field
    let fun = x.as_fun().expect("function-field value");
    let (num, den) = (&fun.num, &fun.den);
    if num.is_single_term() && den.is_single_term() {
        let (en, cn) = num.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let (ed, cd) = den.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut root_expo_num = Vec::with_capacity(en.len());
        let mut root_expo_den = Vec::with_capacity(en.len());
        for i in 0..en.len() {
            let d = en[i] as i64 - ed[i] as i64;
            if d.rem_euclid(n as i64) != 0 {
                return Ok(None);
            }
            let q = d.div_euclid(n as i64);
            if q >= 0 {
                root_expo_num.push(q as u16);
                root_expo_den.push(0);
            } else {
                root_expo_num.push(0);
                root_expo_den.push((-q) as u16);
            }
        }
        // constant part lives in the base field
        let c = cn.div(&cd);
        let base_root = match &c {
            BaseVal::Rat(r) => rational_nth_root(r, n).map(BaseVal::Rat),
            BaseVal::Mod { v, p } => prime_field_nth_root(*v, n, *p)?.map(|r| BaseVal::Mod { v: r, p: *p }),
        };
        let Some(rc) = base_root else { return Ok(None) };
        return Ok(Some(field.monomial_elem(rc, &root_expo_num, &root_expo_den)));
    }
    // sound negative answers from degree obstructions
    if num.total_degree() % n != 0 || den.total_degree() % n != 0 {
        return Ok(None);
    }
    for v in 0..field.params().len() {
        if num.deg_in(v) as u32 % n != 0 || den.deg_in(v) as u32 % n != 0 {
            return Ok(None);
        }
    }
    Err(Error::UndecidableRoot(format!(
        "non-monomial function-field value {}",
        x.serial()
    )))
}

/// Decides whether `x` and `y` lie in the same class of G_n = K^x/(K^x)^n.
pub fn radical_equivalent(x: &Elem, y: &Elem, n: u32) -> Result<bool> {
    assert!(!x.is_zero() && !y.is_zero(), "G_n classes need nonzero elements");
    Ok(has_nth_root(&x.checked_div(y)?, n)?.is_some())
}

/// All field solutions of `x^n = c`, deduplicated and deterministically
/// ordered.
pub fn roots_of_binomial(c: &Elem, n: u32) -> Result<Vec<Elem>> {
    assert!(n > 0);
    let field = c.field();
    if c.is_zero() {
        return Ok(vec![field.zero()]);
    }
    if let Some(p) = field.finite_order() {
        if p > ENUM_LIMIT {
            return Err(Error::FieldTooLarge { p, limit: ENUM_LIMIT });
        }
        let mut out = Vec::new();
        for r in 0..p {
            if powmod(r, n as u64, p) == c.as_mod().unwrap() {
                out.push(field.int(r as i64));
            }
        }
        return Ok(out);
    }
    // Q or function field: roots are (principal root) * (n-th roots of unity),
    // and the torsion of the unit group comes from the base field.
    let Some(r) = has_nth_root(c, n)? else { return Ok(Vec::new()) };
    let mut unity = Vec::new();
    match field.characteristic() {
        0 => {
            unity.push(field.one());
            if n % 2 == 0 {
                unity.push(field.int(-1));
            }
        }
        p => {
            for u in 1..p {
                if powmod(u, n as u64, p) == 1 {
                    unity.push(field.int(u as i64));
                }
            }
        }
    }
    let mut out: Vec<Elem> = unity.iter().map(|z| r.mul(z)).collect();
    out.sort_by(|a, b| a.order_cmp(b));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn rational_roots() {
        let q = Field::rationals();
        assert_eq!(has_nth_root(&q.int(8), 3).unwrap(), Some(q.int(2)));
        assert_eq!(has_nth_root(&q.int(2), 2).unwrap(), None);
        assert_eq!(has_nth_root(&q.int(-27), 3).unwrap(), Some(q.int(-3)));
        assert_eq!(has_nth_root(&q.ratio(4, 9), 2).unwrap(), Some(q.ratio(2, 3)));
        assert_eq!(has_nth_root(&q.int(-4), 2).unwrap(), None);
    }

    #[test]
    fn cubes_in_f7_are_one_and_six() {
        // exhaustive oracle: cubes over F7
        let f7 = Field::prime(7).unwrap();
        let mut cubes: Vec<u64> = (1..7u64).map(|x| x * x * x % 7).collect();
        cubes.sort_unstable();
        cubes.dedup();
        assert_eq!(cubes, vec![1, 6]);
        assert_eq!(has_nth_root(&f7.int(2), 3).unwrap(), None);
        assert!(has_nth_root(&f7.int(6), 3).unwrap().is_some());
    }

    #[test]
    fn radical_equivalence_examples() {
        let q = Field::rationals();
        assert!(radical_equivalent(&q.int(2), &q.int(16), 3).unwrap());
        assert!(!radical_equivalent(&q.int(1), &q.int(2), 2).unwrap());
        assert!(radical_equivalent(&q.int(3), &q.int(12), 2).unwrap());
    }

    #[test]
    fn binomial_roots() {
        let q = Field::rationals();
        let one_roots = roots_of_binomial(&q.int(1), 3).unwrap();
        assert_eq!(one_roots, vec![q.int(1)]);
        let f7 = Field::prime(7).unwrap();
        let r = roots_of_binomial(&f7.int(1), 3).unwrap();
        assert_eq!(r, vec![f7.int(1), f7.int(2), f7.int(4)]);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(roots_of_binomial(&f3.int(1), 3).unwrap(), vec![f3.int(1)]);
        let sq = roots_of_binomial(&q.int(4), 2).unwrap();
        assert_eq!(sq, vec![q.int(-2), q.int(2)]);
    }

    #[test]
    fn function_field_monomial_roots() {
        let f = Field::parse("Q(x,y)").unwrap();
        let x = f.param("x").unwrap();
        let y = f.param("y").unwrap();
        // x/y is not a cube, x^3/y^3 is
        assert_eq!(has_nth_root(&x.checked_div(&y).unwrap(), 3).unwrap(), None);
        let cube = x.pow(3).unwrap().checked_div(&y.pow(3).unwrap()).unwrap();
        let r = has_nth_root(&cube, 3).unwrap().unwrap();
        assert_eq!(r, x.checked_div(&y).unwrap());
        // 8*x^6 has cube root 2*x^2
        let c = f.int(8).mul(&x.pow(6).unwrap());
        assert_eq!(has_nth_root(&c, 3).unwrap(), Some(f.int(2).mul(&x.pow(2).unwrap())));
        // degree obstruction gives a sound no for non-monomials
        let nm = x.add(&y);
        assert_eq!(has_nth_root(&nm, 3).unwrap(), None);
        // undecidable: (x+y)^3 is a root but only degree tests pass here
        let dec = nm.pow(3).unwrap();
        assert!(matches!(has_nth_root(&dec, 3), Err(Error::UndecidableRoot(_)) | Ok(Some(_))));
    }

    #[test]
    fn factorization_with_large_prime_cofactor() {
        let two_p = BigInt::from(2u64) * BigInt::from(1_000_003u64);
        let f = factor_positive(&two_p).unwrap();
        assert_eq!(f.len(), 2);
    }
}
