//! Strongly MDS `(n, n-1, delta)` codes from superregular Toeplitz matrices,
//! and their `(n, 1, delta)` duals.
//!
//! The pipeline has three steps: cut a systematic sliding parity-check
//! matrix `Ĥ` out of a `tau x tau` superregular Toeplitz matrix, find a
//! parity-check row `[a, b]` whose expansion `b / a` starts with the data of
//! `Ĥ`, and divide out common factors.

use crate::code::{combinations, systematic_column_map, CodeSpec, PolyMatrix, SlidingKind, SlidingMatrix};
use crate::distances::{is_strongly_mds, lm_params};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg::Matrix;
use crate::poly::{gcd_all, series_div, Poly};
use crate::superregular::{search_toeplitz, SearchMode, Toeplitz};

/// Seed used when no superregular matrix is supplied and the field is too
/// large for an exhaustive scan.
pub const DEFAULT_SEED: u64 = 0x5eed_2003;
const EXHAUSTIVE_LIMIT: u64 = 1 << 24;
const SEEDED_TRIES: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Certificates {
    /// No time-0 non-pivot column of `Ĥ` lies in the span of `M` others.
    pub column_property: bool,
    pub basic: bool,
    /// `max(deg a, deg b_i) = delta`.
    pub degree: bool,
    pub strongly_mds: bool,
    /// `b_i / a` agrees with the data of `Ĥ` to `M + 1` terms.
    pub series: bool,
    /// The constructed code's systematic sliding matrix equals `Ĥ`.
    pub round_trip: bool,
}

impl Certificates {
    pub fn all(&self) -> bool {
        self.column_property && self.basic && self.degree && self.strongly_mds && self.series && self.round_trip
    }
}

#[derive(Debug, Clone)]
pub struct ConstructionTrace {
    pub tau: usize,
    pub toeplitz: Toeplitz,
    pub hhat: SlidingMatrix,
    /// `a` and `b` before the common factor was removed.
    pub a: Poly,
    pub b: Vec<Poly>,
    pub code: CodeSpec,
    pub certificates: Certificates,
}

/// `M = floor(delta / (n-1)) + delta` and `tau = (M+1)(n-1)`.
pub fn horizon(n: usize, delta: usize) -> Result<(usize, usize)> {
    if n < 2 {
        return Err(Error::BadParams(format!("need n >= 2, got {n}")));
    }
    let (_, m) = lm_params(n, n - 1, delta)?;
    Ok((m, (m + 1) * (n - 1)))
}

/// Row `(r+1)(n-1)` of `T`, restricted to columns `1..=(r+1)(n-1)`, becomes
/// row `r` of the right-hand part of `Ĥ`. The Toeplitz structure makes this
/// block lower triangular with blocks `h_0, ..., h_M`, where
/// `h_l = (t_{(l+1)(n-1)}, ..., t_{l(n-1)+1})`.
pub fn build_hhat(t: &Toeplitz, n: usize, m: usize) -> Result<SlidingMatrix> {
    if n < 2 {
        return Err(Error::BadParams(format!("need n >= 2, got {n}")));
    }
    let w = n - 1;
    let tau = (m + 1) * w;
    if t.size() != tau {
        return Err(Error::ShapeMismatch(format!(
            "Toeplitz matrix is {0}x{0}, expected {tau}x{tau}",
            t.size()
        )));
    }
    if !t.is_superregular() {
        return Err(Error::NotSuperregular);
    }
    let hhat = hhat_from_blocks(&h_blocks(t, n, m), n, m);
    if !column_property(&hhat, t.field()) {
        return Err(Error::ColumnPropertyFailed);
    }
    Ok(hhat)
}

/// `h_0, ..., h_M`, each of length `n - 1`.
fn h_blocks(t: &Toeplitz, n: usize, m: usize) -> Vec<Vec<Elem>> {
    let w = n - 1;
    let col = t.first_column();
    (0..=m)
        .map(|l| (0..w).map(|i| col[(l + 1) * w - 1 - i]).collect())
        .collect()
}

fn hhat_from_blocks(h: &[Vec<Elem>], n: usize, m: usize) -> SlidingMatrix {
    let w = n - 1;
    let mut mat = Matrix::zeros(m + 1, (m + 1) * n);
    for r in 0..=m {
        mat.set(r, r, Elem::ONE);
        for s in 0..=r {
            for x in 0..w {
                mat.set(r, m + 1 + s * w + x, h[r - s][x]);
            }
        }
    }
    SlidingMatrix {
        kind: SlidingKind::Systematic,
        j: m,
        block_rows: 1,
        n,
        matrix: mat,
        pivot: 0,
        column_map: systematic_column_map(n, m, 0),
    }
}

/// Each time-0 non-pivot column is outside the span of every set of `M`
/// other columns.
pub fn column_property(hhat: &SlidingMatrix, f: &Field) -> bool {
    let m = hhat.j;
    let mat = &hhat.matrix;
    let total = mat.cols();
    (m + 1..m + hhat.n).all(|target| {
        let others: Vec<usize> = (0..total).filter(|&c| c != target).collect();
        combinations(others.len(), m).into_iter().all(|subset| {
            let mut cols: Vec<usize> = subset.iter().map(|&i| others[i]).collect();
            let base = if cols.is_empty() { 0 } else { mat.select_columns(&cols).rank(f) };
            cols.push(target);
            mat.select_columns(&cols).rank(f) > base
        })
    })
}

/// Reads `h_0, ..., h_M` back out of a systematic sliding matrix.
fn blocks_of(hhat: &SlidingMatrix) -> Vec<Vec<Elem>> {
    let m = hhat.j;
    let w = hhat.n - 1;
    (0..=m)
        .map(|l| (0..w).map(|x| hhat.matrix.get(l, m + 1 + x)).collect())
        .collect()
}

/// Finds `a = 1 + a_1 D + ... + a_delta D^delta` and `b` (n-1 polynomials
/// of degree at most delta) with `b / a = h_0 + h_1 D + ... + h_M D^M + ...`.
///
/// When the linear system for `a` has several solutions, the one with the
/// smallest degree is taken, and among those the lexicographically smallest
/// `(a_1, a_2, ...)`.
pub fn solve_ab(hhat: &SlidingMatrix, n: usize, delta: usize, f: &Field) -> Result<(Poly, Vec<Poly>)> {
    let (m, _) = horizon(n, delta)?;
    if hhat.kind != SlidingKind::Systematic || hhat.n != n || hhat.j != m {
        return Err(Error::ShapeMismatch(format!(
            "expected a systematic sliding matrix with n={n}, M={m}"
        )));
    }
    let h = blocks_of(hhat);
    let w = n - 1;
    let a_coeffs = if m == delta {
        Vec::new()
    } else {
        // rows: (l, x) for l = delta+1..=M; unknown i multiplies h_{l-i}
        let rows = (m - delta) * w;
        let mut sys = Matrix::zeros(rows, delta);
        let mut rhs = Vec::with_capacity(rows);
        for l in delta + 1..=m {
            for x in 0..w {
                let r = (l - delta - 1) * w + x;
                for i in 1..=delta {
                    sys.set(r, i - 1, h[l - i][x]);
                }
                rhs.push(h[l][x]);
            }
        }
        let rhs: Vec<Elem> = rhs.into_iter().map(|v| f.neg(v)).collect();
        smallest_solution(&sys, &rhs, f).ok_or(Error::SystemInconsistent)?
    };
    let mut a = vec![Elem::ONE];
    a.extend(a_coeffs);
    let a = Poly::new(a);
    let b = (0..w)
        .map(|x| {
            let hx = Poly::new(h.iter().map(|blk| blk[x]).collect());
            hx.mul(&a, f).truncate(delta + 1)
        })
        .collect();
    Ok((a, b))
}

/// Minimal-degree, then lexicographically smallest solution of `A x = c`.
fn smallest_solution(sys: &Matrix, rhs: &[Elem], f: &Field) -> Option<Vec<Elem>> {
    let unknowns = sys.cols();
    let restricted = |d: usize, fixed: &[Elem]| -> Option<Vec<Elem>> {
        // unknowns 0..fixed.len() pinned, fixed.len()..d free, d.. zero
        let free: Vec<usize> = (fixed.len()..d).collect();
        let mut c = rhs.to_vec();
        for (i, v) in fixed.iter().enumerate() {
            for (r, cr) in c.iter_mut().enumerate() {
                *cr = f.sub(*cr, f.mul(sys.get(r, i), *v));
            }
        }
        if free.is_empty() {
            return c.iter().all(|v| v.is_zero()).then(Vec::new);
        }
        sys.select_columns(&free).solve(&c, f)
    };
    let d = (0..=unknowns).find(|&d| restricted(d, &[]).is_some())?;
    let mut fixed = Vec::with_capacity(d);
    for _ in 0..d {
        let v = f.elements().find(|&v| {
            let mut trial = fixed.clone();
            trial.push(v);
            restricted(d, &trial).is_some()
        })?;
        fixed.push(v);
    }
    fixed.resize(unknowns, Elem::ZERO);
    Some(fixed)
}

/// Runs the full pipeline. Without `t`, a superregular matrix of size
/// `tau` is searched for over `field`: exhaustively when `q^(tau-1) <= 2^24`,
/// otherwise from [`DEFAULT_SEED`].
pub fn construct_strongly_mds(
    n: usize,
    delta: usize,
    field: &Field,
    t: Option<Toeplitz>,
    budget: u64,
) -> Result<ConstructionTrace> {
    let (m, tau) = horizon(n, delta)?;
    let t = match t {
        Some(t) => {
            field.ensure_same(t.field())?;
            t
        }
        None => find_toeplitz(tau, field)?.ok_or(Error::NoSuperregularFound(tau))?,
    };
    let hhat = build_hhat(&t, n, m)?;
    let (a, b) = solve_ab(&hhat, n, delta, field)?;

    let series = b.iter().enumerate().all(|(x, bx)| {
        series_div(bx, &a, m + 1, field)
            .map(|s| s.coeffs.iter().enumerate().all(|(l, &v)| v == hhat.matrix.get(l, m + 1 + x)))
            .unwrap_or(false)
    });
    if !series {
        return Err(Error::CertificateFailed("b / a does not reproduce the data of Ĥ".into()));
    }

    let mut entries = vec![a.clone()];
    entries.extend(b.iter().cloned());
    let g = gcd_all(entries.iter(), field)?;
    let scale = field.inv(g.coeff(0))?;
    let entries: Vec<Poly> = entries
        .iter()
        .map(|p| Ok(p.div_rem(&g, field)?.0.scale(scale, field)))
        .collect::<Result<_>>()?;
    let h = PolyMatrix::new(field.clone(), 1, n, entries)?;
    let basic = crate::code::is_basic(&h)?;
    let computed = crate::code::code_degree(&h)?;
    if !basic || computed != delta {
        return Err(Error::CertificateFailed(format!(
            "parity-check row is basic={basic} with degree {computed}, expected delta={delta}"
        )));
    }
    let code = CodeSpec::from_parity(field.clone(), n, n - 1, delta, h)?;
    let round_trip = code.systematic_sliding_parity(m)?.matrix == hhat.matrix;
    if !round_trip {
        return Err(Error::CertificateFailed("systematic sliding matrix differs from Ĥ".into()));
    }
    if !is_strongly_mds(&code, budget)? {
        return Err(Error::CertificateFailed("constructed code is not strongly MDS".into()));
    }
    Ok(ConstructionTrace {
        tau,
        toeplitz: t,
        hhat,
        a,
        b,
        code,
        certificates: Certificates {
            column_property: true,
            basic,
            degree: true,
            strongly_mds: true,
            series,
            round_trip,
        },
    })
}

fn find_toeplitz(tau: usize, field: &Field) -> Result<Option<Toeplitz>> {
    let q = field.order() as u64;
    let exhaustive = q.checked_pow(tau as u32 - 1).is_some_and(|c| c <= EXHAUSTIVE_LIMIT);
    if exhaustive {
        search_toeplitz(tau, field, SearchMode::Exhaustive, EXHAUSTIVE_LIMIT)
    } else {
        search_toeplitz(tau, field, SearchMode::Seeded(DEFAULT_SEED), SEEDED_TRIES)
    }
}

/// A strongly MDS `(n, 1, delta)` code, obtained as the dual of the
/// `(n, n-1, delta)` construction. Requires `(n-1) | delta`.
pub fn construct_dual_mds(
    n: usize,
    delta: usize,
    field: &Field,
    t: Option<Toeplitz>,
    budget: u64,
) -> Result<CodeSpec> {
    if n < 2 {
        return Err(Error::BadParams(format!("need n >= 2, got {n}")));
    }
    if delta % (n - 1) != 0 {
        return Err(Error::DivisibilityViolated {
            n_minus_1: n - 1,
            delta,
        });
    }
    let trace = construct_strongly_mds(n, delta, field, t, budget)?;
    let dual = trace.code.dual()?;
    if !is_strongly_mds(&dual, budget)? {
        return Err(Error::NotStronglyMds);
    }
    Ok(dual)
}
