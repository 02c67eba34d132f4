//! Polynomials in the delay operator `D` and truncated power series.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};

/// A polynomial with coefficients in ascending powers of `D`.
///
/// Always normalized: the last stored coefficient is nonzero, so the zero
/// polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_values(values: &[u32]) -> Poly {
        Poly::new(values.iter().map(|&v| Elem(v)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Elem::ONE)
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(vec![c])
    }

    /// `c * D^d`
    pub fn monomial(c: Elem, d: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `D^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Multiplication by `D^s`.
    pub fn shift(&self, s: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Elem::ZERO; s];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Keeps the coefficients of `D^0 .. D^(len-1)`.
    pub fn truncate(&self, len: usize) -> Poly {
        Poly::new(self.coeffs.iter().take(len).copied().collect())
    }

    pub fn eval(&self, x: Elem, f: &Field) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Elem::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            q[top - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = f.sub(r[idx], f.mul(c, d));
            }
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self, f: &Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(f.inv(l).expect("leading coefficient is nonzero"), f),
        }
    }

    pub fn divides(&self, other: &Poly, f: &Field) -> Result<bool> {
        Ok(other.div_rem(self, f)?.1.is_zero())
    }

    /// Parses the comma-separated coefficient form; an empty string or `0`
    /// is the zero polynomial.
    pub fn parse(s: &str, f: &Field) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Poly::zero());
        }
        let mut coeffs = Vec::new();
        for tok in s.split(',') {
            let v: u64 = tok.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad coefficient {tok:?}"),
            })?;
            coeffs.push(f.elem(v)?);
        }
        Ok(Poly::new(coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd(a: &Poly, b: &Poly, f: &Field) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y, f)?.1;
        x = y;
        y = r;
    }
    Ok(x.monic(f))
}

/// Monic gcd of a nonempty list that is not entirely zero.
pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Poly>, f: &Field) -> Result<Poly> {
    let mut acc = Poly::zero();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { p.monic(f) } else { gcd(&acc, p, f)? };
        if acc.degree() == Some(0) {
            break;
        }
    }
    if acc.is_zero() {
        Err(Error::BothZero)
    } else {
        Ok(acc)
    }
}

/// The first `len` coefficients of a power series in `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub coeffs: Vec<Elem>,
}

impl SeriesPrefix {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }
}

/// Expands `num / den` as a power series to `terms` coefficients.
pub fn series_div(num: &Poly, den: &Poly, terms: usize, f: &Field) -> Result<SeriesPrefix> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::DenominatorNotUnit);
    }
    let d0_inv = f.inv(d0)?;
    let mut out: Vec<Elem> = Vec::with_capacity(terms);
    for i in 0..terms {
        // num_i = sum_{s<=i} den_s out_{i-s}
        let mut acc = num.coeff(i);
        for s in 1..=i.min(den.coeffs.len().saturating_sub(1)) {
            acc = f.sub(acc, f.mul(den.coeff(s), out[i - s]));
        }
        out.push(f.mul(acc, d0_inv));
    }
    Ok(SeriesPrefix { coeffs: out })
}
