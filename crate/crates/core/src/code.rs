//! Convolutional codes given by polynomial generator and parity-check
//! matrices, and the scalar sliding matrices derived from them.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg::Matrix;
use crate::poly::{gcd_all, series_div, Poly};

/// A matrix of polynomials over a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    /// Row-major entries; every coefficient must belong to `field`.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Poly>) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for c in entries.iter().flat_map(|p| p.coeffs()) {
            if !field.contains(*c) {
                return Err(Error::ElementOutOfRange {
                    value: c.value() as u64,
                    order: field.order(),
                });
            }
        }
        Ok(PolyMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor: each entry given as ascending coefficient values.
    pub fn from_values(field: Field, rows: usize, cols: usize, entries: &[&[u32]]) -> Result<PolyMatrix> {
        PolyMatrix::new(field, rows, cols, entries.iter().map(|e| Poly::from_values(e)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    /// Largest entry degree; 0 for the zero matrix.
    pub fn max_degree(&self) -> usize {
        self.entries.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    /// The scalar matrix of `D^d` coefficients.
    pub fn coefficient(&self, d: usize) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).coeff(d));
            }
        }
        m
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.field.ensure_same(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero();
                for l in 0..self.cols {
                    acc = acc.add(&self.get(i, l).mul(other.get(l, j), f), f);
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(f.clone(), self.rows, other.cols, entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Row vector of polynomials times this matrix.
    pub fn left_mul(&self, u: &[Poly]) -> Result<Vec<Poly>> {
        if u.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} times {}x{} matrix",
                u.len(),
                self.rows,
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.cols)
            .map(|j| {
                u.iter()
                    .enumerate()
                    .fold(Poly::zero(), |acc, (i, ui)| acc.add(&ui.mul(self.get(i, j), f), f))
            })
            .collect())
    }

    /// All full-size minors, as (column subset, determinant) in lexicographic
    /// order of the subsets. Requires `rows <= cols`.
    pub fn full_size_minors(&self) -> Result<Vec<(Vec<usize>, Poly)>> {
        if self.rows > self.cols || self.rows == 0 {
            return Err(Error::ShapeMismatch(format!(
                "full-size minors of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut out = Vec::new();
        for cols in combinations(self.cols, self.rows) {
            let grid: Vec<Vec<Poly>> = (0..self.rows)
                .map(|i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
                .collect();
            out.push((cols, poly_det(&grid, &self.field)));
        }
        Ok(out)
    }

    /// Full row rank over the rational functions: some full-size minor is
    /// nonzero.
    pub fn has_full_row_rank(&self) -> bool {
        self.full_size_minors()
            .map(|ms| ms.iter().any(|(_, m)| !m.is_zero()))
            .unwrap_or(false)
    }

    /// Builds the block-Toeplitz sliding matrix with `j + 1` block rows.
    /// `upper` gives the generator layout (block `(a, b)` is `M_{b-a}`),
    /// otherwise the parity layout (block `(a, b)` is `M_{a-b}`).
    fn sliding(&self, j: usize, upper: bool) -> Matrix {
        let (r, c) = (self.rows, self.cols);
        let coeffs: Vec<Matrix> = (0..=j).map(|d| self.coefficient(d)).collect();
        let mut m = Matrix::zeros((j + 1) * r, (j + 1) * c);
        for a in 0..=j {
            for b in 0..=j {
                let d = if upper { b.checked_sub(a) } else { a.checked_sub(b) };
                let Some(d) = d else { continue };
                for x in 0..r {
                    for y in 0..c {
                        m.set(a * r + x, b * c + y, coeffs[d].get(x, y));
                    }
                }
            }
        }
        m
    }
}

/// Determinant of a square polynomial matrix by Laplace expansion with
/// memoized column subsets.
pub fn poly_det(grid: &[Vec<Poly>], f: &Field) -> Poly {
    fn rec(
        grid: &[Vec<Poly>],
        f: &Field,
        row: usize,
        used: u64,
        memo: &mut HashMap<u64, Poly>,
    ) -> Poly {
        let n = grid.len();
        if row == n {
            return Poly::one();
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = Poly::zero();
        let mut sign_odd = false;
        for c in 0..n {
            if used & (1 << c) != 0 {
                continue;
            }
            if !grid[row][c].is_zero() {
                let sub = rec(grid, f, row + 1, used | (1 << c), memo);
                let term = grid[row][c].mul(&sub, f);
                acc = if sign_odd { acc.sub(&term, f) } else { acc.add(&term, f) };
            }
            sign_odd = !sign_odd;
        }
        memo.insert(used, acc.clone());
        acc
    }
    assert!(grid.len() < 64, "matrix too large for Laplace expansion");
    rec(grid, f, 0, 0, &mut HashMap::new())
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - r + i) else {
            return out;
        };
        cur[i] += 1;
        for l in i + 1..r {
            cur[l] = cur[l - 1] + 1;
        }
    }
}

/// True iff the full-size minors are coprime.
pub fn is_basic(mx: &PolyMatrix) -> Result<bool> {
    if mx.rows() > mx.cols() {
        return Err(Error::RankDeficient);
    }
    let minors = mx.full_size_minors()?;
    if minors.iter().all(|(_, m)| m.is_zero()) {
        return Err(Error::RankDeficient);
    }
    let g = gcd_all(minors.iter().map(|(_, m)| m), mx.field())?;
    Ok(g.degree() == Some(0))
}

/// Degree of the code generated by a basic matrix: the largest degree of its
/// full-size minors.
pub fn code_degree(mx: &PolyMatrix) -> Result<usize> {
    if !is_basic(mx)? {
        return Err(Error::NotBasic);
    }
    Ok(mx
        .full_size_minors()?
        .iter()
        .filter_map(|(_, m)| m.degree())
        .max()
        .unwrap_or(0))
}

/// Right kernel of an `(n-1) x n` matrix of full rank, as one row of signed
/// maximal minors with common factors removed.
pub fn cofactor_kernel(mx: &PolyMatrix) -> Result<PolyMatrix> {
    let f = mx.field().clone();
    let n = mx.cols();
    if mx.rows() + 1 != n {
        return Err(Error::ShapeMismatch(format!(
            "cofactor kernel of a {}x{n} matrix",
            mx.rows()
        )));
    }
    let minors = mx.full_size_minors()?;
    // combinations are lexicographic, so the subset omitting column j is
    // minors[n - 1 - j]
    let row: Vec<Poly> = (0..n)
        .map(|j| {
            let m = &minors[n - 1 - j].1;
            if j % 2 == 1 {
                m.neg(&f)
            } else {
                m.clone()
            }
        })
        .collect();
    if row.iter().all(Poly::is_zero) {
        return Err(Error::RankDeficient);
    }
    let g = gcd_all(&row, &f)?;
    let row = row.iter().map(|p| p.div_rem(&g, &f).map(|(q, _)| q)).collect::<Result<_>>()?;
    PolyMatrix::new(f, 1, n, row)
}

/// Right kernel of a nonzero `1 x n` row, as `n - 1` rows forming a basic
/// matrix.
///
/// The row is column-reduced by a unimodular `U` until a single nonzero
/// entry remains; the remaining columns of `U` span the kernel.
pub fn row_kernel(mx: &PolyMatrix) -> Result<PolyMatrix> {
    let f = mx.field().clone();
    let n = mx.cols();
    if mx.rows() != 1 {
        return Err(Error::ShapeMismatch(format!("row kernel of a {}x{n} matrix", mx.rows())));
    }
    let mut r: Vec<Poly> = mx.row(0).to_vec();
    if r.iter().all(Poly::is_zero) {
        return Err(Error::RankDeficient);
    }
    // u[j] is column j of U
    let mut u: Vec<Vec<Poly>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { Poly::one() } else { Poly::zero() }).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| !r[j].is_zero()).collect();
        if nonzero.len() == 1 {
            let p = nonzero[0];
            r.swap(0, p);
            u.swap(0, p);
            break;
        }
        let p = *nonzero
            .iter()
            .min_by_key(|&&j| (r[j].degree(), j))
            .expect("at least two nonzero entries");
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let (q, rem) = r[j].div_rem(&r[p], &f)?;
            r[j] = rem;
            let col_p = u[p].clone();
            for (x, y) in u[j].iter_mut().zip(&col_p) {
                *x = x.sub(&q.mul(y, &f), &f);
            }
        }
    }
    let entries = u[1..].iter().flat_map(|col| col.iter().cloned()).collect();
    PolyMatrix::new(f, n - 1, n, entries)
}

/// Right kernel for the shapes this crate supports: one row or `n - 1` rows.
fn derive_kernel(mx: &PolyMatrix, what: &'static str) -> Result<PolyMatrix> {
    if mx.rows() + 1 == mx.cols() {
        cofactor_kernel(mx)
    } else if mx.rows() == 1 {
        row_kernel(mx)
    } else {
        Err(Error::MissingMatrix(what))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlidingKind {
    Generator,
    Parity,
    Systematic,
}

/// A scalar sliding matrix together with its block structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidingMatrix {
    pub kind: SlidingKind,
    /// Index of the last time block.
    pub j: usize,
    /// Rows per block row (k, n - k, or 1 for the systematic form).
    pub block_rows: usize,
    /// Code length n.
    pub n: usize,
    pub matrix: Matrix,
    /// For the systematic form: the coordinate whose parity entry was
    /// normalized, and for each column the index of the matching column of
    /// the parity sliding matrix.
    pub pivot: usize,
    pub column_map: Vec<usize>,
}

/// An `(n, k, delta)` convolutional code.
///
/// Construction validates shapes, ranks, orthogonality, basicness and the
/// declared degree. A missing generator or parity-check matrix is derived as
/// a kernel when one of them has a single row or `n - 1` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    field: Field,
    n: usize,
    k: usize,
    delta: usize,
    gen: Option<PolyMatrix>,
    par: Option<PolyMatrix>,
    gen_derived: bool,
    par_derived: bool,
}

impl CodeSpec {
    pub fn new(
        field: Field,
        n: usize,
        k: usize,
        delta: usize,
        gen: Option<PolyMatrix>,
        par: Option<PolyMatrix>,
    ) -> Result<CodeSpec> {
        if k == 0 || k >= n {
            return Err(Error::BadParams(format!("need 0 < k < n, got n={n} k={k}")));
        }
        if gen.is_none() && par.is_none() {
            return Err(Error::MissingMatrix("generator or parity-check"));
        }
        for (m, rows, name) in [(&gen, k, "generator"), (&par, n - k, "parity-check")] {
            let Some(m) = m else { continue };
            field.ensure_same(m.field())?;
            if m.rows() != rows || m.cols() != n {
                return Err(Error::ShapeMismatch(format!(
                    "{name} matrix is {}x{}, expected {rows}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.has_full_row_rank() {
                return Err(Error::RankDeficient);
            }
            let computed = code_degree(m)?;
            if computed != delta {
                return Err(Error::DegreeMismatch {
                    declared: delta,
                    computed,
                });
            }
        }
        if let (Some(g), Some(h)) = (&gen, &par) {
            if !g.mul(&h.transpose())?.is_zero() {
                return Err(Error::NotOrthogonal);
            }
        }
        let mut spec = CodeSpec {
            field,
            n,
            k,
            delta,
            gen_derived: gen.is_none(),
            par_derived: par.is_none(),
            gen,
            par,
        };
        if spec.gen.is_none() {
            spec.gen = derive_kernel(spec.par.as_ref().expect("checked above"), "generator").ok();
        }
        if spec.par.is_none() {
            spec.par = derive_kernel(spec.gen.as_ref().expect("checked above"), "parity-check").ok();
        }
        Ok(spec)
    }

    pub fn from_generator(field: Field, n: usize, k: usize, delta: usize, g: PolyMatrix) -> Result<CodeSpec> {
        CodeSpec::new(field, n, k, delta, Some(g), None)
    }

    pub fn from_parity(field: Field, n: usize, k: usize, delta: usize, h: PolyMatrix) -> Result<CodeSpec> {
        CodeSpec::new(field, n, k, delta, None, Some(h))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Generator matrix, given or derived.
    pub fn gen(&self) -> Result<&PolyMatrix> {
        self.gen.as_ref().ok_or(Error::MissingMatrix("generator"))
    }

    /// Parity-check matrix, given or derived.
    pub fn par(&self) -> Result<&PolyMatrix> {
        self.par.as_ref().ok_or(Error::MissingMatrix("parity-check"))
    }

    pub fn has_gen(&self) -> bool {
        self.gen.is_some()
    }

    pub fn has_par(&self) -> bool {
        self.par.is_some()
    }

    /// Whether the generator was supplied (as opposed to derived).
    pub fn gen_given(&self) -> bool {
        self.gen.is_some() && !self.gen_derived
    }

    pub fn par_given(&self) -> bool {
        self.par.is_some() && !self.par_derived
    }

    /// Largest entry degree of the generator.
    pub fn memory(&self) -> Result<usize> {
        Ok(self.gen()?.max_degree())
    }

    /// `(j+1)k x (j+1)n` truncated sliding generator matrix.
    pub fn sliding_generator(&self, j: usize) -> Result<SlidingMatrix> {
        let g = self.gen()?;
        Ok(SlidingMatrix {
            kind: SlidingKind::Generator,
            j,
            block_rows: self.k,
            n: self.n,
            matrix: g.sliding(j, true),
            pivot: 0,
            column_map: Vec::new(),
        })
    }

    /// `(j+1)(n-k) x (j+1)n` truncated sliding parity-check matrix.
    pub fn sliding_parity(&self, j: usize) -> Result<SlidingMatrix> {
        let h = self.par()?;
        Ok(SlidingMatrix {
            kind: SlidingKind::Parity,
            j,
            block_rows: self.n - self.k,
            n: self.n,
            matrix: h.sliding(j, false),
            pivot: 0,
            column_map: Vec::new(),
        })
    }

    /// The systematic sliding parity-check matrix of an `(n, n-1)` code with
    /// `H = [a_1, ..., a_n]`, normalized on `a_1`.
    pub fn systematic_sliding_parity(&self, m: usize) -> Result<SlidingMatrix> {
        self.systematic_sliding_parity_at(m, 0)
    }

    /// As [`CodeSpec::systematic_sliding_parity`], normalized on coordinate
    /// `pivot` instead of the first one. The first `m + 1` columns then
    /// belong to coordinate `pivot` at times `0..=m`, followed by the other
    /// coordinates in their natural order, time by time.
    pub fn systematic_sliding_parity_at(&self, m: usize, pivot: usize) -> Result<SlidingMatrix> {
        if self.k + 1 != self.n {
            return Err(Error::NotRateNMinus1 { n: self.n, k: self.k });
        }
        if pivot >= self.n {
            return Err(Error::BadParams(format!("pivot {pivot} out of range")));
        }
        let f = &self.field;
        let h = self.par()?;
        let a_p = h.get(0, pivot);
        if a_p.coeff(0).is_zero() {
            return Err(Error::A1NotUnit);
        }
        let others: Vec<usize> = (0..self.n).filter(|&i| i != pivot).collect();
        let series: Vec<Vec<Elem>> = others
            .iter()
            .map(|&i| series_div(h.get(0, i), a_p, m + 1, f).map(|s| s.coeffs))
            .collect::<Result<_>>()?;
        let w = self.n - 1;
        let mut mat = Matrix::zeros(m + 1, (m + 1) * self.n);
        for r in 0..=m {
            mat.set(r, r, Elem::ONE);
            for s in 0..=r {
                for (x, col) in series.iter().enumerate() {
                    mat.set(r, m + 1 + s * w + x, col[r - s]);
                }
            }
        }
        Ok(SlidingMatrix {
            kind: SlidingKind::Systematic,
            j: m,
            block_rows: 1,
            n: self.n,
            matrix: mat,
            pivot,
            column_map: systematic_column_map(self.n, m, pivot),
        })
    }

    /// The dual code: generator and parity-check matrices swap roles.
    pub fn dual(&self) -> Result<CodeSpec> {
        let (Some(g), Some(h)) = (&self.gen, &self.par) else {
            return Err(Error::MissingMatrix(if self.gen.is_none() {
                "generator"
            } else {
                "parity-check"
            }));
        };
        Ok(CodeSpec {
            field: self.field.clone(),
            n: self.n,
            k: self.n - self.k,
            delta: self.delta,
            gen: Some(h.clone()),
            par: Some(g.clone()),
            gen_derived: self.par_derived,
            par_derived: self.gen_derived,
        })
    }

    /// Codeword `u G` for a message of `k` polynomials.
    pub fn encode(&self, u: &[Poly]) -> Result<Vec<Poly>> {
        self.gen()?.left_mul(u)
    }

    /// Syndrome `v H^T`, one polynomial per parity row.
    pub fn syndrome(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        self.par()?.transpose().left_mul(v)
    }

    /// Parses the line-oriented code description format.
    pub fn parse(text: &str) -> Result<CodeSpec> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let (ln, first) = lines.next().ok_or_else(|| err(0, "empty code description"))?;
        let field: Field = first
            .strip_prefix("field")
            .ok_or_else(|| err(ln, "expected `field GF(...)`"))?
            .trim()
            .parse()
            .map_err(|e: Error| match e {
                Error::Parse { msg, .. } => err(ln, &msg),
                other => other,
            })?;
        let (ln, second) = lines.next().ok_or_else(|| err(ln, "missing `code` line"))?;
        let rest = second
            .strip_prefix("code")
            .ok_or_else(|| err(ln, "expected `code n=.. k=.. delta=..`"))?;
        let (mut n, mut k, mut delta) = (None, None, None);
        for tok in rest.split_whitespace() {
            let (key, val) = tok.split_once('=').ok_or_else(|| err(ln, "expected key=value"))?;
            let val: usize = val.parse().map_err(|_| err(ln, "bad integer"))?;
            match key {
                "n" => n = Some(val),
                "k" => k = Some(val),
                "delta" => delta = Some(val),
                _ => return Err(err(ln, &format!("unknown key {key:?}"))),
            }
        }
        let n = n.ok_or_else(|| err(ln, "missing n"))?;
        let k = k.ok_or_else(|| err(ln, "missing k"))?;
        let delta = delta.ok_or_else(|| err(ln, "missing delta"))?;

        let (mut gen, mut par) = (None, None);
        while let Some((ln, header)) = lines.next() {
            let parts: Vec<&str> = header.split_whitespace().collect();
            let [label, r, c] = parts[..] else {
                return Err(err(ln, "expected `G rows cols` or `H rows cols`"));
            };
            let r: usize = r.parse().map_err(|_| err(ln, "bad row count"))?;
            let c: usize = c.parse().map_err(|_| err(ln, "bad column count"))?;
            let mut entries = Vec::with_capacity(r * c);
            for _ in 0..r * c {
                let (eln, entry) = lines.next().ok_or_else(|| err(ln, "matrix block ends early"))?;
                entries.push(Poly::parse(entry, &field).map_err(|e| match e {
                    Error::Parse { msg, .. } => err(eln, &msg),
                    other => other,
                })?);
            }
            let m = PolyMatrix::new(field.clone(), r, c, entries)?;
            let slot = match label {
                "G" => &mut gen,
                "H" => &mut par,
                _ => return Err(err(ln, &format!("unknown block {label:?}"))),
            };
            if slot.replace(m).is_some() {
                return Err(err(ln, &format!("duplicate {label} block")));
            }
        }
        CodeSpec::new(field, n, k, delta, gen, par)
    }

    /// Serializes the supplied matrices (derived ones are recomputed on load).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "field {}", self.field).unwrap();
        writeln!(out, "code n={} k={} delta={}", self.n, self.k, self.delta).unwrap();
        for (label, m, given) in [
            ("G", &self.gen, self.gen_given()),
            ("H", &self.par, self.par_given()),
        ] {
            let Some(m) = m.as_ref().filter(|_| given) else { continue };
            writeln!(out, "{label} {} {}", m.rows(), m.cols()).unwrap();
            for p in m.entries() {
                writeln!(out, "{p}").unwrap();
            }
        }
        out
    }
}

/// For each column of a systematic sliding matrix, the index of the matching
/// column in the parity sliding matrix `H^c_m`.
pub fn systematic_column_map(n: usize, m: usize, pivot: usize) -> Vec<usize> {
    let mut map: Vec<usize> = (0..=m).map(|t| t * n + pivot).collect();
    for t in 0..=m {
        map.extend((0..n).filter(|&i| i != pivot).map(|i| t * n + i));
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8_code() -> CodeSpec {
        let f = Field::gf8();
        let h = PolyMatrix::from_values(f.clone(), 1, 2, &[&[1, 4, 7], &[1, 6, 7]]).unwrap();
        CodeSpec::from_parity(f, 2, 1, 2, h).unwrap()
    }

    fn gf16_431() -> CodeSpec {
        let f = Field::gf16();
        let h = PolyMatrix::from_values(f.clone(), 1, 4, &[&[1], &[6, 1], &[2, 2], &[1, 6]]).unwrap();
        CodeSpec::from_parity(f, 4, 3, 1, h).unwrap()
    }

    #[test]
    fn sliding_parity_example() {
        let c = gf8_code();
        assert_eq!(c.sliding_parity(0).unwrap().matrix, Matrix::from_values(&[&[1, 1]]));
        let h1 = c.sliding_parity(1).unwrap();
        assert_eq!(h1.matrix, Matrix::from_values(&[&[1, 1, 0, 0], &[4, 6, 1, 1]]));
    }

    #[test]
    fn sliding_generator_base_case_and_orthogonality() {
        let c = gf8_code();
        let g = c.gen().unwrap();
        assert_eq!(c.sliding_generator(0).unwrap().matrix, g.coefficient(0));
        let f = c.field();
        for j in 0..6 {
            let gs = c.sliding_generator(j).unwrap().matrix;
            let hs = c.sliding_parity(j).unwrap().matrix;
            assert_eq!(gs.rows(), j + 1);
            assert!(gs.mul(&hs.transpose(), f).unwrap().is_zero());
        }
    }

    #[test]
    fn systematic_form_gf8() {
        let c = gf8_code();
        let f = c.field();
        let s = c.systematic_sliding_parity(4).unwrap();
        let h: Vec<Elem> = (0..5).map(|r| s.matrix.get(r, 5)).collect();
        let expect: Vec<Elem> = [0, 1, 3, 1, 0].iter().map(|&e| f.exp(e)).collect();
        assert_eq!(h, expect);
        for r in 0..5 {
            for c in 0..5 {
                let want = if r == c { Elem::ONE } else { Elem::ZERO };
                assert_eq!(s.matrix.get(r, c), want);
            }
        }
    }

    #[test]
    fn systematic_form_gf16_example() {
        let c = gf16_431();
        let s = c.systematic_sliding_parity(1).unwrap();
        let g = |e| c.field().exp(e).value();
        let expect = Matrix::from_values(&[
            &[1, 0, g(5), g(1), 1, 0, 0, 0],
            &[0, 1, 1, g(1), g(5), g(5), g(1), 1],
        ]);
        assert_eq!(s.matrix, expect);
    }

    #[test]
    fn systematic_equals_row_reduced_parity() {
        for c in [gf8_code(), gf16_431()] {
            let f = c.field();
            for m in 0..5 {
                for pivot in 0..c.n() {
                    let Ok(s) = c.systematic_sliding_parity_at(m, pivot) else { continue };
                    let hc = c.sliding_parity(m).unwrap().matrix;
                    let permuted = hc.select_columns(&s.column_map);
                    let rows: Vec<usize> = (0..=m).collect();
                    let left = permuted.submatrix(&rows, &rows);
                    let reduced = left.inverse(f).unwrap().mul(&permuted, f).unwrap();
                    assert_eq!(reduced, s.matrix, "m={m} pivot={pivot}");
                }
            }
        }
    }

    #[test]
    fn constant_quotient() {
        let f = Field::gf8();
        let h = PolyMatrix::from_values(f.clone(), 1, 2, &[&[1], &[5]]).unwrap();
        let c = CodeSpec::from_parity(f, 2, 1, 0, h).unwrap();
        let s = c.systematic_sliding_parity(2).unwrap();
        assert_eq!(
            s.matrix,
            Matrix::from_values(&[&[1, 0, 0, 5, 0, 0], &[0, 1, 0, 0, 5, 0], &[0, 0, 1, 0, 0, 5]])
        );
    }

    #[test]
    fn systematic_errors() {
        let f = Field::gf8();
        let h = PolyMatrix::from_values(f.clone(), 1, 2, &[&[0, 1], &[1, 1]]).unwrap();
        let c = CodeSpec::from_parity(f, 2, 1, 1, h).unwrap();
        assert_eq!(c.systematic_sliding_parity(2), Err(Error::A1NotUnit));
        assert!(c.systematic_sliding_parity_at(2, 1).is_ok());
        let c = CodeSpec::parse(include_str!("../../../fixtures/e4_1.code")).unwrap();
        assert!(matches!(
            c.systematic_sliding_parity(1),
            Err(Error::NotRateNMinus1 { .. })
        ));
    }

    #[test]
    fn dual_of_gf16_example() {
        let c = gf16_431();
        let d = c.dual().unwrap();
        assert_eq!((d.n(), d.k(), d.delta()), (4, 1, 1));
        assert_eq!(d.gen().unwrap(), c.par().unwrap());
        let dd = d.dual().unwrap();
        assert_eq!(dd, c);
    }

    #[test]
    fn basic_and_degree() {
        let f2 = Field::prime(2).unwrap();
        let m = PolyMatrix::from_values(f2.clone(), 1, 2, &[&[1, 1], &[0, 1]]).unwrap();
        assert!(is_basic(&m).unwrap());
        let m = PolyMatrix::from_values(f2.clone(), 1, 2, &[&[1, 1], &[1, 1]]).unwrap();
        assert!(!is_basic(&m).unwrap());
        assert_eq!(code_degree(&m), Err(Error::NotBasic));
        let z = PolyMatrix::from_values(f2.clone(), 1, 2, &[&[], &[]]).unwrap();
        assert_eq!(is_basic(&z), Err(Error::RankDeficient));
        let k = PolyMatrix::from_values(f2, 2, 3, &[&[1], &[0], &[1], &[0], &[1], &[1]]).unwrap();
        assert_eq!(code_degree(&k).unwrap(), 0);
        assert_eq!(code_degree(gf8_code().par().unwrap()).unwrap(), 2);
    }

    #[test]
    fn kernels_are_orthogonal_and_basic() {
        let f = Field::gf16();
        let row = PolyMatrix::from_values(f.clone(), 1, 3, &[&[2, 2, 1], &[12, 2, 7], &[14, 2, 6]]).unwrap();
        let k = row_kernel(&row).unwrap();
        assert!(row.mul(&k.transpose()).unwrap().is_zero());
        assert!(is_basic(&k).unwrap());
        assert_eq!(code_degree(&k).unwrap(), 2);
        let back = cofactor_kernel(&k).unwrap();
        assert!(k.mul(&back.transpose()).unwrap().is_zero());
        // the cofactor row spans the same rank-1 module as the original row
        let ratio = back.get(0, 0).div_rem(row.get(0, 0), &f).unwrap();
        assert!(ratio.1.is_zero() && ratio.0.degree() == Some(0));
    }

    #[test]
    fn validation_errors() {
        let f = Field::gf8();
        let h = PolyMatrix::from_values(f.clone(), 1, 2, &[&[1, 4, 7], &[1, 6, 7]]).unwrap();
        assert!(matches!(
            CodeSpec::from_parity(f.clone(), 2, 1, 3, h.clone()),
            Err(Error::DegreeMismatch { declared: 3, computed: 2 })
        ));
        assert_eq!(
            CodeSpec::new(f.clone(), 2, 1, 2, Some(h.clone()), Some(h.clone())),
            Err(Error::NotOrthogonal)
        );
        let h16 = PolyMatrix::from_values(Field::gf16(), 1, 2, &[&[1, 4, 7], &[1, 6, 7]]).unwrap();
        assert_eq!(
            CodeSpec::from_parity(f.clone(), 2, 1, 2, h16),
            Err(Error::FieldMismatch)
        );
        assert!(matches!(
            CodeSpec::from_parity(f, 2, 2, 2, h),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn missing_matrix_for_middle_rates() {
        let c = CodeSpec::parse(include_str!("../../../fixtures/e4_6.code")).unwrap();
        assert!(c.has_gen() && !c.has_par());
        assert_eq!(c.sliding_parity(0), Err(Error::MissingMatrix("parity-check")));
        assert!(matches!(c.dual(), Err(Error::MissingMatrix(_))));
    }

    #[test]
    fn text_round_trip() {
        let text = include_str!("../../../fixtures/mdsdual_gf16.code");
        let c = CodeSpec::parse(text).unwrap();
        let again = CodeSpec::parse(&c.to_text()).unwrap();
        assert_eq!(again, c);
        assert!(CodeSpec::parse("field GF(2^3; 1,1,0,1)\ncode n=2 k=1 delta=2\nH 1 2\n1,4,7\n").is_err());
        let bad = CodeSpec::parse("field GF(2^3; 1,1,0,1)\ncode n=2 k=1 delta=2\nH 1 2\n1,4,7\n1,6,9\n");
        assert!(matches!(bad, Err(Error::ElementOutOfRange { .. })));
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
