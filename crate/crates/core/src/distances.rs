//! Column distances, free-distance certificates, and the MDS / strongly MDS /
//! maximum-distance-profile classifications.
//!
//! Column distances are computed exactly by depth-first search over the
//! message (or codeword) blocks, time step by time step. A branch is cut as
//! soon as the weight of the blocks fixed so far reaches the best complete
//! weight found, and the whole search stops once a word of a known lower
//! bound is found. The `budget` caps the number of visited candidates.

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg::Matrix;

pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// Generalized Singleton bound `(n-k)(floor(delta/k)+1) + delta + 1`.
pub fn singleton_bound(n: usize, k: usize, delta: usize) -> Result<usize> {
    check_rate(n, k)?;
    Ok((n - k) * (delta / k + 1) + delta + 1)
}

/// `(L, M)` with `L = floor(delta/k) + floor(delta/(n-k))` and
/// `M = floor(delta/k) + ceil(delta/(n-k))`.
pub fn lm_params(n: usize, k: usize, delta: usize) -> Result<(usize, usize)> {
    check_rate(n, k)?;
    let l = delta / k + delta / (n - k);
    let m = delta / k + delta.div_ceil(n - k);
    Ok((l, m))
}

/// Upper bound `(n-k)(j+1) + 1` on the `j`-th column distance.
pub fn column_bound(n: usize, k: usize, j: usize) -> usize {
    (n - k) * (j + 1) + 1
}

fn check_rate(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::BadParams(format!("need 0 < k < n, got n={n} k={k}")));
    }
    Ok(())
}

/// Exact `j`-th column distance from the generator, with the default budget.
pub fn column_distance(c: &CodeSpec, j: usize) -> Result<usize> {
    column_distance_with(c, j, DEFAULT_BUDGET, 1)
}

/// Exact `j`-th column distance from the generator.
///
/// `floor` is a known lower bound (for instance `d^c_{j-1}`); the search
/// stops as soon as it finds a word of that weight.
pub fn column_distance_with(c: &CodeSpec, j: usize, budget: u64, floor: usize) -> Result<usize> {
    let g = c.gen()?;
    let f = c.field();
    let (k, n) = (c.k(), c.n());
    let coeffs: Vec<Matrix> = (0..=j).map(|d| g.coefficient(d)).collect();
    let msgs = VectorSpace::new(f, k)?;
    // products[s][u] = u * G_s
    let products: Vec<Vec<Vec<Elem>>> = coeffs
        .iter()
        .map(|gs| (0..msgs.size).map(|u| gs.left_mul_vec(&msgs.vector(u), f)).collect())
        .collect();
    let leaf_table = if j >= 1 {
        CosetWeights::build(f, n, &products[0])
    } else {
        None
    };
    let mut search = GenSearch {
        f,
        n,
        j,
        products: &products,
        leaf_table: leaf_table.as_ref(),
        acc: vec![Elem::ZERO; (j + 1) * n],
        best: usize::MAX,
        floor: floor.max(1),
        visited: 0,
        budget,
    };
    for u0 in msgs.normalized_nonzero() {
        search.visit(0, u0, 0)?;
        if search.best <= search.floor {
            break;
        }
    }
    Ok(search.best)
}

/// `d^c_0, ..., d^c_horizon` from the generator, each search seeded with the
/// previous value as lower bound.
pub fn column_distances(c: &CodeSpec, horizon: usize, budget: u64) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(horizon + 1);
    let mut floor = 1;
    for j in 0..=horizon {
        let d = column_distance_with(c, j, budget, floor)?;
        out.push(d);
        floor = d;
    }
    Ok(out)
}

struct GenSearch<'a> {
    f: &'a Field,
    n: usize,
    j: usize,
    products: &'a [Vec<Vec<Elem>>],
    leaf_table: Option<&'a CosetWeights>,
    acc: Vec<Elem>,
    best: usize,
    floor: usize,
    visited: u64,
    budget: u64,
}

impl GenSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    /// Fixes message block `t` to `u`; `partial` is the weight of codeword
    /// blocks `0..t`.
    fn visit(&mut self, t: usize, u: usize, partial: usize) -> Result<()> {
        self.tick()?;
        let (n, j) = (self.n, self.j);
        for s in 0..=j - t {
            let p = &self.products[s][u];
            for (a, &x) in self.acc[(t + s) * n..(t + s + 1) * n].iter_mut().zip(p) {
                *a = self.f.add(*a, x);
            }
        }
        let w = partial + weight(&self.acc[t * n..(t + 1) * n]);
        if t == j {
            self.best = self.best.min(w);
        } else if w < self.best {
            if t + 1 == j && self.leaf_table.is_some() {
                self.tick()?;
                let table = self.leaf_table.expect("checked");
                let total = w + table.get(&self.acc[j * n..(j + 1) * n]);
                self.best = self.best.min(total);
            } else {
                for next in 0..self.products[0].len() {
                    self.visit(t + 1, next, w)?;
                    if self.best <= self.floor || w >= self.best {
                        break;
                    }
                }
            }
        }
        for s in 0..=j - t {
            let p = &self.products[s][u];
            for (a, &x) in self.acc[(t + s) * n..(t + s + 1) * n].iter_mut().zip(p) {
                *a = self.f.sub(*a, x);
            }
        }
        Ok(())
    }
}

/// Exact `j`-th column distance through the parity-check description: the
/// least weight of a window `v_0, ..., v_j` with `v_0 != 0` annihilated by
/// the sliding parity-check matrix.
pub fn column_distance_parity(c: &CodeSpec, j: usize, budget: u64) -> Result<usize> {
    let h = c.par()?;
    let f = c.field();
    let n = c.n();
    let r = h.rows();
    let hs: Vec<Matrix> = (0..=j).map(|d| h.coefficient(d)).collect();
    let h0 = &hs[0];
    // particular solutions of H_0 x = e_i, and a kernel basis of H_0
    let particular: Vec<Option<Vec<Elem>>> = (0..r)
        .map(|i| {
            let mut e = vec![Elem::ZERO; r];
            e[i] = Elem::ONE;
            h0.solve(&e, f)
        })
        .collect();
    let kernel = h0.kernel(f);
    let free = VectorSpace::new(f, kernel.len())?;
    let mut search = ParSearch {
        f,
        n,
        r,
        j,
        hs: &hs,
        particular: &particular,
        kernel: &kernel,
        free: &free,
        acc: vec![Elem::ZERO; (j + 1) * r],
        best: usize::MAX,
        visited: 0,
        budget,
    };
    search.level(0, 0)?;
    Ok(search.best)
}

struct ParSearch<'a> {
    f: &'a Field,
    n: usize,
    r: usize,
    j: usize,
    hs: &'a [Matrix],
    particular: &'a [Option<Vec<Elem>>],
    kernel: &'a [Vec<Elem>],
    free: &'a VectorSpace,
    /// acc block t holds sum over fixed blocks s of v_s H_{t-s}^T
    acc: Vec<Elem>,
    best: usize,
    visited: u64,
    budget: u64,
}

impl ParSearch<'_> {
    fn level(&mut self, t: usize, partial: usize) -> Result<()> {
        let (f, n, r) = (self.f, self.n, self.r);
        // need H_0 v_t^T = -acc_t
        let target: Vec<Elem> = self.acc[t * r..(t + 1) * r].iter().map(|&x| f.neg(x)).collect();
        let mut base = vec![Elem::ZERO; n];
        for (i, &b) in target.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let Some(p) = &self.particular[i] else { return Ok(()) };
            for (x, &y) in base.iter_mut().zip(p) {
                *x = f.add(*x, f.mul(b, y));
            }
        }
        if self.hs[0].mul_vec(&base, f) != target {
            return Ok(());
        }
        let choices: Vec<usize> = if t == 0 {
            self.free.normalized_nonzero().collect()
        } else {
            (0..self.free.size).collect()
        };
        for y in choices {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let mut v = base.clone();
            for (coef, kv) in self.free.vector(y).iter().zip(self.kernel) {
                if coef.is_zero() {
                    continue;
                }
                for (x, &kx) in v.iter_mut().zip(kv) {
                    *x = f.add(*x, f.mul(*coef, kx));
                }
            }
            let w = partial + weight(&v);
            if w >= self.best {
                continue;
            }
            if t == self.j {
                self.best = w;
                continue;
            }
            let contrib: Vec<Vec<Elem>> =
                (1..=self.j - t).map(|s| self.hs[s].mul_vec(&v, f)).collect();
            for (s, cv) in contrib.iter().enumerate() {
                let blk = t + 1 + s;
                for (a, &x) in self.acc[blk * r..(blk + 1) * r].iter_mut().zip(cv) {
                    *a = f.add(*a, x);
                }
            }
            self.level(t + 1, w)?;
            for (s, cv) in contrib.iter().enumerate() {
                let blk = t + 1 + s;
                for (a, &x) in self.acc[blk * r..(blk + 1) * r].iter_mut().zip(cv) {
                    *a = f.sub(*a, x);
                }
            }
        }
        Ok(())
    }
}

fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// `F^dim` with vectors indexed by their base-q digits (coordinate 0 least
/// significant).
struct VectorSpace {
    q: usize,
    dim: usize,
    size: usize,
}

impl VectorSpace {
    fn new(f: &Field, dim: usize) -> Result<VectorSpace> {
        let q = f.order() as usize;
        let size = (q as u64)
            .checked_pow(dim as u32)
            .filter(|&s| s <= 1 << 24)
            .ok_or(Error::BudgetExceeded { budget: 1 << 24 })? as usize;
        Ok(VectorSpace { q, dim, size })
    }

    fn vector(&self, mut idx: usize) -> Vec<Elem> {
        let mut v = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            v.push(Elem((idx % self.q) as u32));
            idx /= self.q;
        }
        v
    }

    /// Nonzero vectors whose first nonzero coordinate is 1.
    fn normalized_nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.size).filter(move |&idx| {
            let mut x = idx;
            while x % self.q == 0 {
                x /= self.q;
            }
            x % self.q == 1
        })
    }
}

/// For every `a` in `F^n`, the least weight of `a + c` over the row space of
/// the block code spanned by `G_0`.
struct CosetWeights {
    q: usize,
    table: Vec<u8>,
}

impl CosetWeights {
    const MAX_ENTRIES: usize = 1 << 18;

    fn build(f: &Field, n: usize, codewords: &[Vec<Elem>]) -> Option<CosetWeights> {
        let q = f.order() as usize;
        let size = q.checked_pow(n as u32).filter(|&s| s <= Self::MAX_ENTRIES)?;
        let index = |v: &[Elem]| v.iter().rev().fold(0usize, |acc, e| acc * q + e.value() as usize);
        let mut table = vec![u8::MAX; size];
        let mut queue = std::collections::VecDeque::new();
        for c in codewords {
            let i = index(c);
            if table[i] != 0 {
                table[i] = 0;
                queue.push_back(i);
            }
        }
        // breadth-first over single-coordinate changes
        while let Some(i) = queue.pop_front() {
            let d = table[i] + 1;
            let mut place = 1usize;
            for _ in 0..n {
                let digit = (i / place) % q;
                for v in 0..q {
                    if v == digit {
                        continue;
                    }
                    let nb = i - digit * place + v * place;
                    if table[nb] > d {
                        table[nb] = d;
                        queue.push_back(nb);
                    }
                }
                place *= q;
            }
        }
        Some(CosetWeights { q, table })
    }

    fn get(&self, v: &[Elem]) -> usize {
        let i = v.iter().rev().fold(0usize, |acc, e| acc * self.q + e.value() as usize);
        self.table[i] as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    LowerBound,
}

/// Free distance from the column distances up to `horizon`. Exact only when
/// some column distance reaches the generalized Singleton bound; otherwise
/// the largest computed value is reported as a lower bound.
pub fn free_distance(c: &CodeSpec, horizon: usize, budget: u64) -> Result<(usize, Exactness)> {
    let (_, m) = lm_params(c.n(), c.k(), c.delta())?;
    if horizon < m {
        return Err(Error::BadParams(format!("horizon {horizon} is below M = {m}")));
    }
    let bound = singleton_bound(c.n(), c.k(), c.delta())?;
    let profile = column_distances(c, horizon, budget)?;
    let last = *profile.last().expect("nonempty");
    Ok(if last >= bound {
        (bound, Exactness::Exact)
    } else {
        (last, Exactness::LowerBound)
    })
}

/// Column distance profile with the classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub values: Vec<usize>,
    pub horizon: usize,
    pub singleton: usize,
    pub l: usize,
    pub m: usize,
    /// Some computed column distance reaches the Singleton bound, so the
    /// free distance is certified equal to it.
    pub is_mds_confirmed: bool,
    pub is_strongly_mds: bool,
    pub has_mdp: bool,
}

impl DistanceProfile {
    pub fn bounds(&self, n: usize, k: usize) -> Vec<usize> {
        (0..=self.horizon).map(|j| column_bound(n, k, j)).collect()
    }
}

/// Profile `d^c_0 .. d^c_horizon` (horizon raised to at least `M`).
pub fn profile(c: &CodeSpec, horizon: usize, budget: u64) -> Result<DistanceProfile> {
    let (n, k, delta) = (c.n(), c.k(), c.delta());
    let (l, m) = lm_params(n, k, delta)?;
    let singleton = singleton_bound(n, k, delta)?;
    let horizon = horizon.max(m);
    let values = column_distances(c, horizon, budget)?;
    Ok(DistanceProfile {
        is_mds_confirmed: values.iter().any(|&d| d >= singleton),
        is_strongly_mds: values[m] == singleton,
        has_mdp: values[l] == column_bound(n, k, l),
        values,
        horizon,
        singleton,
        l,
        m,
    })
}

/// `d^c_M` equals the generalized Singleton bound.
pub fn is_strongly_mds(c: &CodeSpec, budget: u64) -> Result<bool> {
    let (_, m) = lm_params(c.n(), c.k(), c.delta())?;
    let bound = singleton_bound(c.n(), c.k(), c.delta())?;
    let floor = if m > 0 { column_distance_with(c, m - 1, budget, 1)? } else { 1 };
    Ok(column_distance_with(c, m, budget, floor)? == bound)
}

/// Maximum distance profile by computing `d^c_L`.
pub fn has_mdp_bruteforce(c: &CodeSpec, budget: u64) -> Result<bool> {
    let (l, _) = lm_params(c.n(), c.k(), c.delta())?;
    let target = column_bound(c.n(), c.k(), l);
    Ok(column_distance_with(c, l, budget, 1)? == target)
}

/// Maximum distance profile by the minor criterion on the generator if one
/// was supplied, else on the parity-check matrix.
pub fn has_mdp_minors(c: &CodeSpec, budget: u64) -> Result<bool> {
    if c.gen_given() || !c.has_par() {
        Ok(mdp_minors_generator(c, budget)?.holds)
    } else {
        Ok(mdp_minors_parity(c, budget)?.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorCheck {
    pub holds: bool,
    /// Number of minors evaluated (stops at the first zero one).
    pub checked: u64,
    /// The first vanishing column selection, if any (0-based).
    pub witness: Option<Vec<usize>>,
}

/// Every full-size minor of `G^c_L` on columns `j_1 < ... < j_{(L+1)k}`
/// (1-based) with `j_{sk+1} > sn` for `s = 1..L` is nonzero.
pub fn mdp_minors_generator(c: &CodeSpec, budget: u64) -> Result<MinorCheck> {
    let (n, k) = (c.n(), c.k());
    let (l, _) = lm_params(n, k, c.delta())?;
    let gs = c.sliding_generator(l)?.matrix;
    // 0-based position s*k must hold a column index >= s*n
    let lower = |pos: usize| if pos % k == 0 { (pos / k) * n } else { 0 };
    check_minors(&gs, (l + 1) * k, lower, |_| usize::MAX, c.field(), budget)
}

/// Every full-size minor of `H^c_L` on columns `i_1 < ... < i_{(L+1)(n-k)}`
/// (1-based) with `i_{s(n-k)} <= sn` for `s = 1..L` is nonzero.
pub fn mdp_minors_parity(c: &CodeSpec, budget: u64) -> Result<MinorCheck> {
    let (n, k) = (c.n(), c.k());
    let r = n - k;
    let (l, _) = lm_params(n, k, c.delta())?;
    let hs = c.sliding_parity(l)?.matrix;
    // 0-based position s*r - 1 must hold a column index < s*n
    let upper = |pos: usize| {
        let s = (pos + 1) / r;
        if (pos + 1) % r == 0 && s <= l {
            s * n
        } else {
            usize::MAX
        }
    };
    check_minors(&hs, (l + 1) * r, |_| 0, upper, c.field(), budget)
}

/// Walks all column selections of size `size` in lexicographic order, where
/// position `p` must satisfy `lower(p) <= col < upper(p)`, and tests each
/// minor for being nonzero.
fn check_minors(
    m: &Matrix,
    size: usize,
    lower: impl Fn(usize) -> usize,
    upper: impl Fn(usize) -> usize,
    f: &Field,
    budget: u64,
) -> Result<MinorCheck> {
    let mut walk = MinorWalk {
        m,
        rows: (0..m.rows()).collect(),
        size,
        lower: &lower,
        upper: &upper,
        f,
        budget,
        cols: Vec::with_capacity(size),
        checked: 0,
    };
    let witness = walk.descend(0, 0)?;
    Ok(MinorCheck {
        holds: witness.is_none(),
        checked: walk.checked,
        witness,
    })
}

struct MinorWalk<'a> {
    m: &'a Matrix,
    rows: Vec<usize>,
    size: usize,
    lower: &'a dyn Fn(usize) -> usize,
    upper: &'a dyn Fn(usize) -> usize,
    f: &'a Field,
    budget: u64,
    cols: Vec<usize>,
    checked: u64,
}

impl MinorWalk<'_> {
    fn descend(&mut self, pos: usize, start: usize) -> Result<Option<Vec<usize>>> {
        if pos == self.size {
            self.checked += 1;
            if self.checked > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let det = self.m.submatrix(&self.rows, &self.cols).det(self.f)?;
            return Ok(det.is_zero().then(|| self.cols.clone()));
        }
        let lo = start.max((self.lower)(pos));
        let hi = (self.upper)(pos).min(self.m.cols() + 1 + pos - self.size);
        for col in lo..hi {
            self.cols.push(col);
            let found = self.descend(pos + 1, col + 1)?;
            self.cols.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// For a column selection `cols` of `G^c_j`, whether the minor of `G^c_j` on
/// those columns vanishes and whether the minor of `H^c_j` on the
/// complementary columns vanishes. The two agree for any pair of full-rank
/// matrices with `G H^T = 0`.
pub fn complementary_minors(c: &CodeSpec, j: usize, cols: &[usize]) -> Result<(bool, bool)> {
    let f = c.field();
    let gs = c.sliding_generator(j)?.matrix;
    let hs = c.sliding_parity(j)?.matrix;
    if cols.len() != gs.rows() {
        return Err(Error::ShapeMismatch(format!(
            "{} columns selected, need {}",
            cols.len(),
            gs.rows()
        )));
    }
    let rest: Vec<usize> = (0..gs.cols()).filter(|c| !cols.contains(c)).collect();
    let g_rows: Vec<usize> = (0..gs.rows()).collect();
    let h_rows: Vec<usize> = (0..hs.rows()).collect();
    let g_zero = gs.submatrix(&g_rows, cols).det(f)?.is_zero();
    let h_zero = hs.submatrix(&h_rows, &rest).det(f)?.is_zero();
    Ok((g_zero, h_zero))
}

/// Checks `sum_{l=0}^{k(m+i)-delta-1} ceil(d / q^l) <= n(m+i)` for
/// `i = 0..=i_max`. An empty sum (upper limit below zero) is 0.
pub fn griesmer_feasible(
    n: usize,
    k: usize,
    delta: usize,
    memory: usize,
    d: usize,
    q: u64,
    i_max: usize,
) -> Result<bool> {
    if n == 0 || k == 0 || d == 0 || q < 2 {
        return Err(Error::BadParams("Griesmer parameters must be positive, q >= 2".into()));
    }
    for i in 0..=i_max {
        let top = (k * (memory + i)) as i64 - delta as i64 - 1;
        let mut sum = 0u128;
        let mut power = 1u128;
        for _ in 0..=top.max(-1) {
            sum += (d as u128).div_ceil(power);
            power = power.saturating_mul(q as u128);
        }
        if sum > (n * (memory + i)) as u128 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest distance allowed by [`griesmer_feasible`].
pub fn griesmer_max_distance(
    n: usize,
    k: usize,
    delta: usize,
    memory: usize,
    q: u64,
    i_max: usize,
) -> Result<usize> {
    let mut d = 1;
    while griesmer_feasible(n, k, delta, memory, d + 1, q, i_max)? {
        d += 1;
        if d > n * (memory + i_max + 1) {
            break;
        }
    }
    Ok(d)
}

/// Least prime power `q` for which distance `d` passes [`griesmer_feasible`].
pub fn griesmer_min_field(
    n: usize,
    k: usize,
    delta: usize,
    memory: usize,
    d: usize,
    i_max: usize,
) -> Result<u64> {
    (2u64..)
        .filter(|&q| crate::galois::prime_power(q as u32).is_some())
        .map(|q| griesmer_feasible(n, k, delta, memory, d, q, i_max).map(|ok| (q, ok)))
        .find(|r| !matches!(r, Ok((_, false))))
        .expect("infinite iterator")
        .map(|(q, _)| q)
}
