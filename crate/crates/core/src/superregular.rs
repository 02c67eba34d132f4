//! Lower-triangular Toeplitz matrices, proper minors and superregularity.
//!
//! A lower-triangular `l x l` Toeplitz matrix is stored by its first column
//! `t_1, ..., t_l`; entry `(i, j)` (0-based) is `t_{i-j+1}` for `i >= j`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::code::combinations;
use crate::error::{Error, Result};
use crate::galois::{is_prime, Elem, Field};
use crate::linalg::{bareiss_det, Matrix};
use crate::poly::{series_div, Poly};

/// A row/column selection, 0-based, both strictly increasing and of equal
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl IndexPair {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<IndexPair> {
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if rows.len() != cols.len() || rows.is_empty() || !increasing(&rows) || !increasing(&cols) {
            return Err(Error::BadParams(format!("invalid index pair {rows:?} / {cols:?}")));
        }
        Ok(IndexPair { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `cols[v] <= rows[v]` for every position.
    pub fn is_proper(&self) -> bool {
        self.rows.iter().zip(&self.cols).all(|(r, c)| c <= r)
    }
}

impl fmt::Display for IndexPair {
    /// 1-based, e.g. `(1,2|1,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.rows), join(&self.cols))
    }
}

/// All proper pairs of size `r` in an `l x l` lower-triangular matrix, in
/// lexicographic order (rows first, then columns).
pub fn proper_pairs(l: usize, r: usize) -> Result<Vec<IndexPair>> {
    if r == 0 || r > l {
        return Err(Error::BadParams(format!("need 1 <= r <= l, got r={r} l={l}")));
    }
    let mut out = Vec::new();
    let subsets = combinations(l, r);
    for rows in &subsets {
        for cols in &subsets {
            if rows.iter().zip(cols).all(|(i, j)| j <= i) {
                out.push(IndexPair {
                    rows: rows.clone(),
                    cols: cols.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Lower-triangular Toeplitz matrix over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Toeplitz {
    field: Field,
    col: Vec<Elem>,
}

impl Toeplitz {
    pub fn new(field: Field, col: Vec<Elem>) -> Result<Toeplitz> {
        if col.is_empty() {
            return Err(Error::BadParams("empty Toeplitz column".into()));
        }
        if let Some(e) = col.iter().find(|e| !field.contains(**e)) {
            return Err(Error::ElementOutOfRange {
                value: e.value() as u64,
                order: field.order(),
            });
        }
        Ok(Toeplitz { field, col })
    }

    pub fn from_values(field: Field, col: &[u32]) -> Result<Toeplitz> {
        Toeplitz::new(field, col.iter().map(|&v| Elem(v)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.col.len()
    }

    /// `t_1, ..., t_l`.
    pub fn first_column(&self) -> &[Elem] {
        &self.col
    }

    pub fn entry(&self, i: usize, j: usize) -> Elem {
        if i >= j {
            self.col[i - j]
        } else {
            Elem::ZERO
        }
    }

    /// Column `j` (0-based) as a vector.
    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.size()).map(|i| self.entry(i, j)).collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        let l = self.size();
        let mut m = Matrix::zeros(l, l);
        for i in 0..l {
            for j in 0..=i {
                m.set(i, j, self.col[i - j]);
            }
        }
        m
    }

    /// The leading `r x r` block, itself Toeplitz. By the Toeplitz structure
    /// it equals every trailing `r x r` block as well.
    pub fn leading(&self, r: usize) -> Toeplitz {
        Toeplitz {
            field: self.field.clone(),
            col: self.col[..r].to_vec(),
        }
    }

    pub fn minor(&self, pair: &IndexPair) -> Elem {
        let l = self.size();
        let mut m = Matrix::zeros(pair.size(), pair.size());
        for (a, &i) in pair.rows.iter().enumerate() {
            for (b, &j) in pair.cols.iter().enumerate() {
                debug_assert!(i < l && j < l);
                m.set(a, b, self.entry(i, j));
            }
        }
        m.det(&self.field).expect("square")
    }

    /// First vanishing proper minor, by ascending size then lexicographic
    /// order.
    pub fn first_zero_proper_minor(&self) -> Option<IndexPair> {
        let l = self.size();
        (1..=l).find_map(|r| {
            proper_pairs(l, r)
                .expect("1 <= r <= l")
                .into_iter()
                .find(|p| self.minor(p).is_zero())
        })
    }

    /// Every proper minor is nonzero.
    pub fn is_superregular(&self) -> bool {
        self.first_zero_proper_minor().is_none()
    }

    /// Proper minors that use the last row are all nonzero. Together with
    /// superregularity of the leading `(l-1) x (l-1)` block this is
    /// equivalent to superregularity.
    fn last_row_minors_nonzero(&self) -> bool {
        let l = self.size();
        (1..=l).all(|r| {
            combinations(l - 1, r - 1).into_iter().all(|mut rows| {
                rows.push(l - 1);
                combinations(l, r).into_iter().all(|cols| {
                    let pair = IndexPair {
                        rows: rows.clone(),
                        cols,
                    };
                    !pair.is_proper() || !self.minor(&pair).is_zero()
                })
            })
        })
    }

    /// Inverse, again lower-triangular Toeplitz: its first column is the
    /// power series `1 / t(D)` with `t(D) = t_1 + t_2 D + ...`.
    pub fn inverse(&self) -> Result<Toeplitz> {
        if self.col[0].is_zero() {
            return Err(Error::Singular);
        }
        let t = Poly::new(self.col.clone());
        let s = series_div(&Poly::one(), &t, self.size(), &self.field)?;
        Toeplitz::new(self.field.clone(), s.coeffs)
    }

    /// `GF(...) ; t1,t2,...,tl`
    pub fn to_text(&self) -> String {
        let vals: Vec<String> = self.col.iter().map(|e| e.to_string()).collect();
        format!("{} ; {}", self.field, vals.join(","))
    }

    /// Parses the `GF(...) ; t1,...,tl` form.
    pub fn parse(s: &str) -> Result<Toeplitz> {
        let close = s.find(')').ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("expected `GF(...) ; t1,...`: {s:?}"),
        })?;
        let field: Field = s[..=close].parse()?;
        let rest = s[close + 1..].trim().trim_start_matches(';');
        let vals = rest
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u64>().map_err(|_| Error::Parse {
                    line: 0,
                    msg: format!("bad entry {tok:?}"),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        let col = vals.into_iter().map(|v| field.elem(v)).collect::<Result<Vec<_>>>()?;
        Toeplitz::new(field, col)
    }
}

/// The seven characterizations of superregularity for a lower-triangular
/// Toeplitz `T` with `H = [I_l, T]`, each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// All proper minors nonzero.
    pub a: bool,
    /// Proper minors whose first column index is the first column nonzero.
    pub b: bool,
    /// `wt(T_1 + sum b_j T_{m_j}) >= l - s` for all choices, including
    /// `s = 0`.
    pub c: bool,
    /// `T_1` outside every span of `s` other columns of `T` and `t` unit
    /// vectors with `s + t <= l - 1`.
    pub d: bool,
    /// Kernel vectors of `H` with a nonzero entry at position `l + 1` have
    /// weight at least `l + 1`.
    pub e: bool,
    /// `e_1` outside every span of `s` columns of `T` and `t` unit vectors
    /// `e_2..e_l` with `s + t <= l - 1`.
    pub f: bool,
    /// Kernel vectors of `H` with a nonzero first entry have weight at least
    /// `l + 1`.
    pub g: bool,
    /// `t_1 = 0`. Then no column of `H` other than `e_1` touches the first
    /// coordinate, so (f) and (g) hold vacuously while (a) fails.
    pub degenerate: bool,
}

impl EquivalenceReport {
    /// All characterizations agree; in the degenerate case only (a)-(e)
    /// are compared.
    pub fn all_agree(&self) -> bool {
        let head = [self.a, self.b, self.c, self.d, self.e];
        let same = head.iter().all(|&x| x == self.a);
        if self.degenerate {
            same
        } else {
            same && self.f == self.a && self.g == self.a
        }
    }
}

/// Evaluates every characterization independently by exhaustive search.
pub fn check_equivalences(t: &Toeplitz, budget: u64) -> Result<EquivalenceReport> {
    let f = t.field();
    let l = t.size();
    let q = f.order() as u64;
    let cost = (q + 1).checked_pow(l as u32 - 1).unwrap_or(u64::MAX);
    if cost > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let a = t.is_superregular();
    let b = (1..=l).all(|r| {
        proper_pairs(l, r)
            .expect("valid r")
            .iter()
            .filter(|p| p.cols[0] == 0)
            .all(|p| !t.minor(p).is_zero())
    });
    let c = weight_condition(t);
    let cols: Vec<Vec<Elem>> = (0..l).map(|j| t.column(j)).collect();
    let unit = |i: usize| {
        let mut e = vec![Elem::ZERO; l];
        e[i] = Elem::ONE;
        e
    };
    let d = {
        let mut pool: Vec<Vec<Elem>> = cols[1..].to_vec();
        pool.extend((0..l).map(unit));
        outside_all_spans(&cols[0], &pool, l - 1, f)
    };
    let fcond = {
        let mut pool: Vec<Vec<Elem>> = cols.clone();
        pool.extend((1..l).map(unit));
        outside_all_spans(&unit(0), &pool, l - 1, f)
    };
    // kernel of H = [I | T] is {(-T y, y)}
    let kernel_min = |first_block: bool| -> Option<usize> {
        let mut best: Option<usize> = None;
        for idx in 0..q.pow(l as u32) {
            let y = digits(idx, q, l);
            let ty = t.to_matrix().mul_vec(&y, f);
            let selected = if first_block { ty[0] } else { y[0] };
            if selected.is_zero() {
                continue;
            }
            let w = weight(&ty) + weight(&y);
            best = Some(best.map_or(w, |b: usize| b.min(w)));
        }
        best
    };
    let e = kernel_min(false).is_none_or(|w| w > l);
    let g = kernel_min(true).is_none_or(|w| w > l);
    Ok(EquivalenceReport {
        a,
        b,
        c,
        d,
        e,
        f: fcond,
        g,
        degenerate: t.first_column()[0].is_zero(),
    })
}

fn digits(mut idx: u64, q: u64, len: usize) -> Vec<Elem> {
    (0..len)
        .map(|_| {
            let d = Elem((idx % q) as u32);
            idx /= q;
            d
        })
        .collect()
}

fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// Characterization (c): enumerate every subset of columns `2..l` and every
/// coefficient vector for it. The empty subset is included: without it the
/// 2x2 identity would pass while having a zero proper entry.
fn weight_condition(t: &Toeplitz) -> bool {
    let f = t.field();
    let l = t.size();
    let q = f.order() as u64;
    let cols: Vec<Vec<Elem>> = (0..l).map(|j| t.column(j)).collect();
    for s in 0..l {
        for subset in combinations(l - 1, s) {
            for idx in 0..q.pow(s as u32) {
                let beta = digits(idx, q, s);
                let mut v = cols[0].clone();
                for (b, &m) in beta.iter().zip(&subset) {
                    for (x, &y) in v.iter_mut().zip(&cols[m + 1]) {
                        *x = f.add(*x, f.mul(*b, y));
                    }
                }
                if weight(&v) < l - s {
                    return false;
                }
            }
        }
    }
    true
}

/// `target` lies outside the span of every `size`-subset of `pool`. Spans of
/// smaller subsets are contained in these, so they need no separate check.
fn outside_all_spans(target: &[Elem], pool: &[Vec<Elem>], size: usize, f: &Field) -> bool {
    let size = size.min(pool.len());
    combinations(pool.len(), size).into_iter().all(|subset| {
        let vecs: Vec<Vec<Elem>> = subset.iter().map(|&i| pool[i].clone()).collect();
        let base = if vecs.is_empty() { 0 } else { Matrix::from_rows(vecs.clone()).rank(f) };
        let mut with = vecs;
        with.push(target.to_vec());
        Matrix::from_rows(with).rank(f) > base
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Scan first columns in ascending order, `t_2` most significant.
    Exhaustive,
    /// Sample columns from a seeded Xoshiro256++ generator.
    Seeded(u64),
}

/// Looks for a superregular `l x l` Toeplitz matrix with `t_1 = 1`.
///
/// Zero entries are skipped (a zero entry is a vanishing 1x1 proper minor),
/// so both modes draw every `t_i` from the nonzero elements. The exhaustive
/// scan extends prefixes and abandons one as soon as its leading block stops
/// being superregular, which keeps the ascending order. `max_tries` bounds
/// the number of candidates visited (prefixes in exhaustive mode, full
/// columns in seeded mode).
pub fn search_toeplitz(l: usize, field: &Field, mode: SearchMode, max_tries: u64) -> Result<Option<Toeplitz>> {
    if l == 0 {
        return Err(Error::BadParams("size must be positive".into()));
    }
    match mode {
        SearchMode::Exhaustive => {
            let q = field.order() as u64;
            let candidates = (q - 1).checked_pow(l as u32 - 1).unwrap_or(u64::MAX);
            if candidates > max_tries {
                return Err(Error::BudgetExceeded { budget: max_tries });
            }
            let mut col = vec![Elem::ONE];
            Ok(extend_prefix(field, &mut col, l).then(|| Toeplitz {
                field: field.clone(),
                col,
            }))
        }
        SearchMode::Seeded(seed) => {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
            let q = field.order();
            for _ in 0..max_tries {
                let mut col = vec![Elem::ONE];
                col.extend((1..l).map(|_| Elem(rng.gen_range(1..q))));
                let t = Toeplitz {
                    field: field.clone(),
                    col,
                };
                if t.is_superregular() {
                    return Ok(Some(t));
                }
            }
            Ok(None)
        }
    }
}

fn extend_prefix(field: &Field, col: &mut Vec<Elem>, l: usize) -> bool {
    if col.len() == l {
        return true;
    }
    for v in field.nonzero_elements() {
        col.push(v);
        let t = Toeplitz {
            field: field.clone(),
            col: col.clone(),
        };
        if t.last_row_minors_nonzero() && extend_prefix(field, col, l) {
            return true;
        }
        col.pop();
    }
    false
}

/// Lower-triangular Toeplitz matrix over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntToeplitz {
    col: Vec<BigInt>,
}

impl IntToeplitz {
    pub fn new(col: Vec<BigInt>) -> IntToeplitz {
        IntToeplitz { col }
    }

    pub fn first_column(&self) -> &[BigInt] {
        &self.col
    }

    pub fn size(&self) -> usize {
        self.col.len()
    }

    pub fn to_matrix(&self) -> Vec<Vec<BigInt>> {
        let l = self.size();
        (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| if i >= j { self.col[i - j].clone() } else { BigInt::zero() })
                    .collect()
            })
            .collect()
    }

    pub fn minor(&self, pair: &IndexPair) -> BigInt {
        let sub: Vec<Vec<BigInt>> = pair
            .rows
            .iter()
            .map(|&i| {
                pair.cols
                    .iter()
                    .map(|&j| if i >= j { self.col[i - j].clone() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        bareiss_det(&sub)
    }

    /// Entries reduced into the prime field GF(p).
    pub fn reduce_mod(&self, p: u32) -> Result<Toeplitz> {
        let field = Field::prime(p)?;
        let modulus = BigInt::from(p);
        let col = self
            .col
            .iter()
            .map(|x| {
                let r = ((x % &modulus) + &modulus) % &modulus;
                Elem(u32::try_from(r).expect("residue below p"))
            })
            .collect();
        Toeplitz::new(field, col)
    }
}

/// `T_n`, first column `binom(n-1, 0), ..., binom(n-1, n-1)`.
pub fn binomial_toeplitz(n: usize) -> IntToeplitz {
    let mut col = vec![BigInt::one()];
    for i in 1..n {
        let prev = col[i - 1].clone();
        col.push(prev * BigInt::from(n - i) / BigInt::from(i));
    }
    IntToeplitz::new(col)
}

/// The `n x n` lower bidiagonal matrix of ones, raised to the power `k`.
pub fn bidiagonal_power(n: usize, k: usize) -> Vec<Vec<BigInt>> {
    let x: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if j == i || j + 1 == i { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut acc: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for _ in 0..k {
        acc = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|l| &acc[i][l] * &x[l][j]).sum())
                    .collect()
            })
            .collect();
    }
    acc
}

/// Evaluates the minor of `X^k` selected by `pair` (any pair, proper or
/// not) and returns whether it is positive. Fails with
/// [`Error::BandCriterionMismatch`] if the minor is negative or its sign
/// disagrees with the band test `i_v - k <= j_v <= i_v` for all `v`.
pub fn theorem_a_check(n: usize, k: usize, pair: &IndexPair) -> Result<bool> {
    if k == 0 || k >= n {
        return Err(Error::BadParams(format!("need 1 <= k <= n-1, got k={k} n={n}")));
    }
    if pair.rows.iter().chain(&pair.cols).any(|&x| x >= n) {
        return Err(Error::BadParams(format!("index pair {pair} exceeds size {n}")));
    }
    let xk = bidiagonal_power(n, k);
    let sub: Vec<Vec<BigInt>> = pair
        .rows
        .iter()
        .map(|&i| pair.cols.iter().map(|&j| xk[i][j].clone()).collect())
        .collect();
    let det = bareiss_det(&sub);
    let in_band = pair.rows.iter().zip(&pair.cols).all(|(&i, &j)| j <= i && j + k >= i);
    if det.is_negative() || det.is_positive() != in_band {
        return Err(Error::BandCriterionMismatch);
    }
    Ok(det.is_positive())
}

/// Smallest prime `p` such that `T_n` reduced mod `p` is superregular.
pub fn smallest_prime_superregular(n: usize, budget: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::BadParams("n must be at least 2".into()));
    }
    let t = binomial_toeplitz(n);
    let mut tried = 0u64;
    for p in (2u32..).filter(|&p| is_prime(p)) {
        tried += 1;
        if tried > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        if t.reduce_mod(p)?.is_superregular() {
            return Ok(p);
        }
    }
    unreachable!("the prime sequence is infinite")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn proper_pair_enumeration() {
        let p = proper_pairs(2, 1).unwrap();
        let shown: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["(1|1)", "(2|1)", "(2|2)"]);
        let p = proper_pairs(2, 2).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].to_string(), "(1,2|1,2)");
        // brute-force oracle: every pair of 2-subsets, filtered
        let mut count = 0;
        for a in 0..3 {
            for b in a + 1..3 {
                for c in 0..3 {
                    for d in c + 1..3 {
                        if c <= a && d <= b {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(proper_pairs(3, 2).unwrap().len(), count);
        assert_eq!(count, 6);
        assert!(proper_pairs(3, 0).is_err());
        assert!(proper_pairs(3, 4).is_err());
    }

    #[test]
    fn small_superregular_matrices() {
        assert!(Toeplitz::from_values(gf(2), &[1, 1]).unwrap().is_superregular());
        assert!(Toeplitz::from_values(gf(7), &[1, 2, 1, 6, 4]).unwrap().is_superregular());
        assert!(!Toeplitz::from_values(gf(7), &[0, 2, 1]).unwrap().is_superregular());
        let id = Toeplitz::from_values(gf(5), &[1, 0]).unwrap();
        let zero = id.first_zero_proper_minor().unwrap();
        assert_eq!(zero.to_string(), "(2|1)");
    }

    #[test]
    fn inverses() {
        let t = Toeplitz::from_values(gf(2), &[1, 1]).unwrap();
        assert_eq!(t.inverse().unwrap(), t);
        let f8 = Field::gf8();
        let t = Toeplitz::from_values(f8.clone(), &[1, 2, 3, 2, 1]).unwrap();
        let prod = t.to_matrix().mul(&t.inverse().unwrap().to_matrix(), &f8).unwrap();
        assert_eq!(prod, Matrix::identity(5));
        let t = Toeplitz::from_values(gf(7), &[1, 2, 1, 6, 4]).unwrap();
        assert!(t.inverse().unwrap().is_superregular());
        let s = Toeplitz::from_values(gf(7), &[0, 1]).unwrap();
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn equivalence_battery_small_cases() {
        let f4 = Field::gf4();
        let t = Toeplitz::from_values(f4, &[1, 2, 1]).unwrap();
        let r = check_equivalences(&t, 1 << 20).unwrap();
        assert!(r.a && r.all_agree(), "{r:?}");
        let id = Toeplitz::from_values(gf(3), &[1, 0]).unwrap();
        let r = check_equivalences(&id, 1 << 20).unwrap();
        assert!(!r.a && r.all_agree(), "{r:?}");
        let deg = Toeplitz::from_values(gf(3), &[0, 1, 2]).unwrap();
        let r = check_equivalences(&deg, 1 << 20).unwrap();
        assert!(r.degenerate && !r.a && r.f && r.g && r.all_agree());
    }

    #[test]
    fn equivalences_agree_on_every_small_matrix() {
        for f in [gf(2), gf(3), Field::gf4()] {
            for l in 1..=3usize {
                let q = f.order() as u64;
                for idx in 0..q.pow(l as u32) {
                    let col = digits(idx, q, l);
                    let t = Toeplitz::new(f.clone(), col).unwrap();
                    let r = check_equivalences(&t, 1 << 20).unwrap();
                    assert!(r.all_agree(), "{} {r:?}", t.to_text());
                }
            }
        }
    }

    #[test]
    fn binomial_matrices() {
        let t = binomial_toeplitz(3);
        assert_eq!(t.first_column(), &[BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
        let pair = IndexPair::new(vec![1, 2], vec![0, 1]).unwrap();
        assert_eq!(t.minor(&pair), BigInt::from(3));
        assert_eq!(bidiagonal_power(3, 2), t.to_matrix());
    }

    #[test]
    fn band_criterion() {
        let full = IndexPair::new((0..5).collect(), (0..5).collect()).unwrap();
        assert!(theorem_a_check(5, 2, &full).unwrap());
        // j_2 = 0 < i_2 - k = 3 - 1
        let out = IndexPair::new(vec![0, 3], vec![0, 1]).unwrap();
        assert!(!theorem_a_check(5, 1, &out).unwrap());
        assert!(theorem_a_check(5, 0, &full).is_err());
    }

    #[test]
    fn text_form() {
        let t = Toeplitz::parse("GF(2^1;0,1);1,1").unwrap();
        assert_eq!(t.first_column(), &[Elem(1), Elem(1)]);
        assert_eq!(t.to_text(), "GF(2^1; 0,1) ; 1,1");
        let t = Toeplitz::parse("GF(7) ; 1,0,0").unwrap();
        assert_eq!(t.size(), 3);
        assert!(Toeplitz::parse("GF(7) ; 1,9").is_err());
    }

    #[test]
    fn searches() {
        let f2 = gf(2);
        let t = search_toeplitz(2, &f2, SearchMode::Exhaustive, 1 << 20).unwrap().unwrap();
        assert_eq!(t.first_column(), &[Elem(1), Elem(1)]);
        let f4 = Field::gf4();
        assert!(search_toeplitz(4, &f4, SearchMode::Exhaustive, 1 << 20).unwrap().is_none());
        assert!(search_toeplitz(3, &f4, SearchMode::Exhaustive, 1 << 20).unwrap().is_some());
        let a = search_toeplitz(4, &gf(7), SearchMode::Seeded(9), 10_000).unwrap();
        let b = search_toeplitz(4, &gf(7), SearchMode::Seeded(9), 10_000).unwrap();
        assert_eq!(a, b);
        assert!(a.unwrap().is_superregular());
        assert!(matches!(
            search_toeplitz(6, &Field::gf64(), SearchMode::Exhaustive, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn exhaustive_search_returns_the_first_hit_in_order() {
        // oracle: plain scan over all columns in ascending order
        let f = gf(5);
        let mut expected = None;
        'outer: for a in 1..5 {
            for b in 1..5 {
                for c in 1..5 {
                    let t = Toeplitz::from_values(f.clone(), &[1, a, b, c]).unwrap();
                    if t.is_superregular() {
                        expected = Some(t);
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(search_toeplitz(4, &f, SearchMode::Exhaustive, 1 << 20).unwrap(), expected);
    }

    #[test]
    fn small_primes() {
        assert_eq!(smallest_prime_superregular(2, 1000).unwrap(), 2);
        assert_eq!(smallest_prime_superregular(3, 1000).unwrap(), 5);
        assert_eq!(smallest_prime_superregular(4, 1000).unwrap(), 7);
    }
}
