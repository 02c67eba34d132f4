//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! An element of GF(p^m) is stored as the integer whose base-p digits are its
//! coordinates in the power basis `1, x, x^2, ...` of `GF(p)[x] / (modulus)`.
//! For the built-in characteristic-2 fields this means the root `x` is the
//! element `2`, and e.g. in GF(8) with `x^3 + x + 1` the element `x^3` is `3`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted by [`Field::new`].
pub const MAX_ORDER: u64 = 1 << 24;

/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u32 = 1 << 16;

/// A field element, encoded as described in the module docs.
///
/// The owning [`Field`] is carried by context; arithmetic goes through the
/// field's methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
    order: u32,
    generator: u32,
    // exp[i] = g^i for i in 0..order-1, log[exp[i]] = i; empty above TABLE_LIMIT
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Handle to a finite field GF(p^m). Cheap to clone, immutable.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl Field {
    /// Builds GF(p^m) from an ascending, monic, irreducible modulus of length
    /// `m + 1`.
    pub fn new(p: u32, m: u32, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadParams("extension degree must be at least 1".into()));
        }
        if modulus.len() != m as usize + 1 {
            return Err(Error::BadLength {
                expected: m as usize + 1,
                got: modulus.len(),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::ElementOutOfRange {
                value: c as u64,
                order: p,
            });
        }
        if modulus[m as usize] != 1 {
            return Err(Error::NotMonic);
        }
        let order = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER).ok_or_else(|| {
            Error::BadParams(format!("GF({p}^{m}) exceeds the supported order {MAX_ORDER}"))
        })? as u32;
        if m > 1 && !is_irreducible(p, modulus) {
            return Err(Error::ReducibleModulus { p });
        }

        let mut inner = Inner {
            p,
            m,
            modulus: modulus.to_vec(),
            order,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        inner.generator = find_generator(&inner);
        if order <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity(order as usize - 1);
            let mut log = vec![0u32; order as usize];
            let mut x = 1u32;
            for i in 0..order - 1 {
                exp.push(x);
                log[x as usize] = i;
                x = schoolbook_mul(&inner, x, inner.generator);
            }
            inner.exp = exp;
            inner.log = log;
        }
        Ok(Field(Arc::new(inner)))
    }

    /// The prime field GF(p), with modulus `X`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, &[0, 1])
    }

    /// GF(4) with `a^2 + a + 1 = 0`.
    pub fn gf4() -> Field {
        Field::new(2, 2, &[1, 1, 1]).expect("built-in modulus")
    }

    /// GF(8) with `b^3 + b + 1 = 0`.
    pub fn gf8() -> Field {
        Field::new(2, 3, &[1, 1, 0, 1]).expect("built-in modulus")
    }

    /// GF(16) with `c^4 + c + 1 = 0`.
    pub fn gf16() -> Field {
        Field::new(2, 4, &[1, 1, 0, 0, 1]).expect("built-in modulus")
    }

    /// GF(32) with `e^5 + e^2 + 1 = 0`.
    pub fn gf32() -> Field {
        Field::new(2, 5, &[1, 0, 1, 0, 0, 1]).expect("built-in modulus")
    }

    /// GF(64) with `w^6 + w + 1 = 0`.
    pub fn gf64() -> Field {
        Field::new(2, 6, &[1, 1, 0, 0, 0, 0, 1]).expect("built-in modulus")
    }

    /// Built-in field of the given order: the characteristic-2 table above or
    /// a prime field.
    pub fn builtin(order: u32) -> Option<Field> {
        match order {
            4 => Some(Field::gf4()),
            8 => Some(Field::gf8()),
            16 => Some(Field::gf16()),
            32 => Some(Field::gf32()),
            64 => Some(Field::gf64()),
            q => Field::prime(q).ok(),
        }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// Number of elements, `p^m`.
    #[inline]
    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Validates an integer encoding.
    pub fn elem(&self, value: u64) -> Result<Elem> {
        if value < self.0.order as u64 {
            Ok(Elem(value as u32))
        } else {
            Err(Error::ElementOutOfRange {
                value,
                order: self.0.order,
            })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.order
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.order).map(Elem)
    }

    /// Nonzero elements in ascending encoding order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.0.order).map(Elem)
    }

    /// Coordinates in the power basis, lowest power first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        to_digits(&self.0, a.0)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem> {
        if digits.len() > self.0.m as usize {
            return Err(Error::BadLength {
                expected: self.0.m as usize,
                got: digits.len(),
            });
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= self.0.p) {
            return Err(Error::ElementOutOfRange {
                value: d as u64,
                order: self.0.p,
            });
        }
        Ok(Elem(from_digits(&self.0, digits)))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if f.p == 2 {
            Elem(a.0 ^ b.0)
        } else if f.m == 1 {
            Elem(((a.0 as u64 + b.0 as u64) % f.p as u64) as u32)
        } else {
            let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
            for _ in 0..f.m {
                out += ((x % f.p + y % f.p) % f.p) * place;
                x /= f.p;
                y /= f.p;
                place *= f.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let f = &*self.0;
        if f.p == 2 {
            a
        } else if f.m == 1 {
            Elem((f.p - a.0) % f.p)
        } else {
            let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
            for _ in 0..f.m {
                out += ((f.p - x % f.p) % f.p) * place;
                x /= f.p;
                place *= f.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.0.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let f = &*self.0;
        if f.exp.is_empty() {
            return Elem(schoolbook_mul(f, a.0, b.0));
        }
        let n = f.order - 1;
        let s = f.log[a.0 as usize] + f.log[b.0 as usize];
        Elem(f.exp[(if s >= n { s - n } else { s }) as usize])
    }

    /// Product computed by polynomial multiplication and reduction, without
    /// lookup tables.
    pub fn mul_schoolbook(&self, a: Elem, b: Elem) -> Elem {
        Elem(schoolbook_mul(&self.0, a.0, b.0))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &*self.0;
        if f.exp.is_empty() {
            return self.pow(a, f.order as i64 - 2);
        }
        let n = f.order - 1;
        let l = f.log[a.0 as usize];
        Ok(Elem(f.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents need `a != 0`. `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if a.is_zero() {
            return match e {
                0 => Ok(Elem::ONE),
                e if e > 0 => Ok(Elem::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.0.order - 1) as i64;
        let mut e = e.rem_euclid(n) as u64;
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The multiplicative generator with the smallest encoding.
    pub fn generator(&self) -> Elem {
        Elem(self.0.generator)
    }

    /// `generator()^e`, the usual way of naming elements by exponent.
    pub fn exp(&self, e: i64) -> Elem {
        self.pow(self.generator(), e).expect("generator is nonzero")
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.0.order - 1;
        let mut best = n;
        for d in divisors(n) {
            if d < best && self.pow(a, d as i64)? == Elem::ONE {
                best = d;
            }
        }
        Ok(best)
    }

    pub fn same_as(&self, other: &Field) -> bool {
        self == other
    }

    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "GF({}^{}; {})", self.0.p, self.0.m, coeffs.join(","))
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `GF(p^m; c0,...,cm)`, `GF(p^m)` and `GF(q)` for a built-in order.
    fn from_str(s: &str) -> Result<Field> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: format!("{msg}: {s:?}"),
        };
        let body = s
            .trim()
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected GF(...)"))?;
        let (head, tail) = match body.split_once(';') {
            Some((h, t)) => (h.trim(), Some(t)),
            None => (body.trim(), None),
        };
        let (p, m) = match head.split_once('^') {
            Some((p, m)) => (
                p.trim().parse::<u32>().map_err(|_| bad("bad characteristic"))?,
                m.trim().parse::<u32>().map_err(|_| bad("bad degree"))?,
            ),
            None => (head.parse::<u32>().map_err(|_| bad("bad characteristic"))?, 1),
        };
        match tail {
            Some(t) => {
                let modulus = t
                    .split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("bad modulus coefficient"))?;
                Field::new(p, m, &modulus)
            }
            None if m == 1 => Field::builtin(p).ok_or(Error::NotPrime(p)),
            None => Field::builtin(
                (p as u64)
                    .checked_pow(m)
                    .filter(|&q| q <= u32::MAX as u64)
                    .ok_or_else(|| bad("order too large"))? as u32,
            )
            .ok_or_else(|| bad("no built-in modulus for this order")),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, m))` when `q = p^m` for a prime `p`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn to_digits(f: &Inner, mut v: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(f.m as usize);
    for _ in 0..f.m {
        out.push(v % f.p);
        v /= f.p;
    }
    out
}

fn from_digits(f: &Inner, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * f.p + d)
}

fn schoolbook_mul(f: &Inner, a: u32, b: u32) -> u32 {
    let p = f.p as u64;
    let m = f.m as usize;
    let x = to_digits(f, a);
    let y = to_digits(f, b);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
        }
    }
    // reduce with the monic modulus: X^m = -(c0 + ... + c_{m-1} X^{m-1})
    for d in (m..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &mi) in f.modulus[..m].iter().enumerate() {
            let idx = d - m + i;
            prod[idx] = (prod[idx] + (p - c) * mi as u64) % p;
        }
    }
    let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
    from_digits(f, &digits)
}

fn find_generator(f: &Inner) -> u32 {
    let n = f.order - 1;
    if n == 1 {
        return 1;
    }
    let prime_factors: Vec<u32> = divisors(n).into_iter().filter(|&d| is_prime(d)).collect();
    let pow = |mut base: u32, mut e: u32| {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = schoolbook_mul(f, acc, base);
            }
            base = schoolbook_mul(f, base, base);
            e >>= 1;
        }
        acc
    };
    (2..f.order)
        .find(|&g| prime_factors.iter().all(|&r| pow(g, n / r) != 1))
        .expect("the multiplicative group of a finite field is cyclic")
}

/// Trial division by every monic polynomial of degree `1..=m/2` over GF(p).
fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut r = idx;
            for _ in 0..d {
                divisor.push((r % p as u64) as u32);
                r /= p as u64;
            }
            divisor.push(1);
            if remainder_is_zero(p, modulus, &divisor) {
                return false;
            }
        }
    }
    true
}

fn remainder_is_zero(p: u32, num: &[u32], den: &[u32]) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let d = den.len() - 1;
    for top in (d..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (i, &di) in den.iter().enumerate() {
            let idx = top - d + i;
            r[idx] = (r[idx] + (p - c) * di as u64 % p) % p;
        }
    }
    r[..d].iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<Field> {
        vec![
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::prime(7).unwrap(),
            Field::prime(11).unwrap(),
            Field::gf4(),
            Field::gf8(),
            Field::gf16(),
            Field::gf32(),
            Field::gf64(),
            Field::new(3, 2, &[2, 2, 1]).unwrap(),
            Field::new(5, 2, &[2, 0, 1]).unwrap(),
        ]
    }

    #[test]
    fn gf8_root_satisfies_defining_relation() {
        let f = Field::gf8();
        let beta = Elem(2);
        assert_eq!(f.pow(beta, 3).unwrap(), Elem(3));
        assert_eq!(f.mul(beta, Elem(4)), Elem(3));
        assert_eq!(f.add(beta, beta), Elem::ZERO);
        assert_eq!(f.pow(beta, 7).unwrap(), Elem::ONE);
        assert_eq!(f.inv(beta).unwrap(), f.pow(beta, 6).unwrap());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.mul(Elem(3), Elem(5)), Elem(1));
        assert_eq!(f.sub(Elem(2), Elem(5)), Elem(4));
        assert_eq!(f.neg(Elem(0)), Elem(0));
    }

    #[test]
    fn reducible_and_malformed_moduli_are_rejected() {
        assert_eq!(
            Field::new(2, 3, &[1, 0, 0, 1]).unwrap_err(),
            Error::ReducibleModulus { p: 2 }
        );
        assert_eq!(Field::new(4, 1, &[0, 1]).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Field::new(2, 3, &[1, 1, 1]), Err(Error::BadLength { .. })));
        assert_eq!(Field::new(2, 2, &[1, 1, 0]).unwrap_err(), Error::NotMonic);
        // x^2 + 1 = (x+1)^2 over GF(2), x^2 + 1 irreducible over GF(3)
        assert!(Field::new(2, 2, &[1, 0, 1]).is_err());
        assert!(Field::new(3, 2, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn generators() {
        assert_eq!(Field::gf16().generator(), Elem(2));
        assert_eq!(Field::gf4().generator(), Elem(2));
        assert_eq!(Field::prime(7).unwrap().generator(), Elem(3));
        assert_eq!(Field::prime(2).unwrap().generator(), Elem(1));
        let f = Field::gf4();
        let a = Elem(2);
        assert_eq!(f.pow(a, 3).unwrap(), Elem::ONE);
        assert_ne!(a, Elem::ONE);
        for f in small_fields() {
            assert_eq!(f.mult_order(f.generator()).unwrap(), f.order() - 1);
        }
    }

    #[test]
    fn inverses_and_powers() {
        let f = Field::gf16();
        let g = f.generator();
        assert_eq!(f.inv(f.exp(5)).unwrap(), f.exp(10));
        assert_eq!(f.inv(Elem::ONE).unwrap(), Elem::ONE);
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.pow(Elem::ZERO, -1), Err(Error::DivisionByZero));
        assert_eq!(f.pow(g, -1).unwrap(), f.inv(g).unwrap());
        // c^4 = c + 1 in GF(16)
        assert_eq!(f.exp(4), Elem(3));
    }

    #[test]
    fn table_and_schoolbook_products_agree() {
        for f in small_fields() {
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b), "{f} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields().into_iter().filter(|f| f.order() <= 16) {
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for f in small_fields().into_iter().filter(|f| f.order() <= 64) {
            let p = f.characteristic() as i64;
            for a in f.elements() {
                for b in f.elements() {
                    let lhs = f.pow(f.add(a, b), p).unwrap();
                    let rhs = f.add(f.pow(a, p).unwrap(), f.pow(b, p).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn digits_round_trip() {
        for f in small_fields() {
            for a in f.elements() {
                assert_eq!(f.from_digits(&f.digits(a)).unwrap(), a);
            }
        }
    }

    #[test]
    fn text_form() {
        let f = Field::gf8();
        assert_eq!(f.to_string(), "GF(2^3; 1,1,0,1)");
        assert_eq!("GF(2^3; 1,1,0,1)".parse::<Field>().unwrap(), f);
        assert_eq!("GF(2^3;1,1,0,1)".parse::<Field>().unwrap(), f);
        assert_eq!("GF(7)".parse::<Field>().unwrap(), Field::prime(7).unwrap());
        assert_eq!("GF(2^1;0,1)".parse::<Field>().unwrap().order(), 2);
        assert_eq!("GF(2^4)".parse::<Field>().unwrap(), Field::gf16());
        assert_eq!("GF(8)".parse::<Field>().unwrap(), Field::gf8());
        assert_eq!("GF(9)".parse::<Field>().unwrap_err(), Error::NotPrime(9));
        assert!("GF(2^3; 1,0,0,1)".parse::<Field>().is_err());
        assert!("nonsense".parse::<Field>().is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
