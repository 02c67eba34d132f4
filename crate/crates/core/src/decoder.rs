//! Feedback decoding of strongly MDS `(n, n-1, delta)` codes and a seeded
//! sliding-window error channel.
//!
//! Each cycle `j` looks at the `M + 1` syndromes `S_j, ..., S_{j+M}`, finds
//! the error `eta_0` at time `j` from them and subtracts it before moving on.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::code::{combinations, CodeSpec};
use crate::distances::lm_params;
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg::Matrix;
use crate::poly::{series_div, Poly};

/// A finite received sequence `v_0, ..., v_T`, each of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceivedWord {
    pub symbols: Vec<Vec<Elem>>,
}

impl ReceivedWord {
    pub fn zeros(n: usize, horizon: usize) -> ReceivedWord {
        ReceivedWord {
            symbols: vec![vec![Elem::ZERO; n]; horizon + 1],
        }
    }

    /// Coefficients `0..=horizon` of the polynomial vector `v`.
    pub fn from_polys(v: &[Poly], horizon: usize) -> ReceivedWord {
        ReceivedWord {
            symbols: (0..=horizon).map(|t| v.iter().map(|p| p.coeff(t)).collect()).collect(),
        }
    }

    pub fn to_polys(&self) -> Vec<Poly> {
        let n = self.n();
        (0..n)
            .map(|i| Poly::new(self.symbols.iter().map(|s| s[i]).collect()))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.symbols.first().map_or(0, Vec::len)
    }

    /// Index of the last time step.
    pub fn horizon(&self) -> usize {
        self.symbols.len().saturating_sub(1)
    }

    pub fn add(&self, other: &ReceivedWord, f: &Field) -> ReceivedWord {
        ReceivedWord {
            symbols: self
                .symbols
                .iter()
                .zip(&other.symbols)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f.add(*x, *y)).collect())
                .collect(),
        }
    }

    /// One line per time step with `n` comma-separated values. Lines may
    /// carry `#` comments; an optional first line `word n=<n>` is checked.
    pub fn parse(text: &str, field: &Field, n: usize) -> Result<ReceivedWord> {
        let mut symbols = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            if let Some(rest) = line.strip_prefix("word") {
                let declared = rest
                    .trim()
                    .strip_prefix("n=")
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .ok_or_else(|| err("expected `word n=<n>`".into()))?;
                if declared != n || !symbols.is_empty() {
                    return Err(err(format!("header declares n={declared}, code has n={n}")));
                }
                continue;
            }
            let vals = line
                .split(',')
                .map(|tok| {
                    let v: u64 = tok.trim().parse().map_err(|_| err(format!("bad value {tok:?}")))?;
                    field.elem(v)
                })
                .collect::<Result<Vec<Elem>>>()?;
            if vals.len() != n {
                return Err(err(format!("expected {n} values, got {}", vals.len())));
            }
            symbols.push(vals);
        }
        if symbols.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "received word is empty".into(),
            });
        }
        Ok(ReceivedWord { symbols })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("word n={}\n", self.n());
        for s in &self.symbols {
            let vals: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            out.push_str(&vals.join(","));
            out.push('\n');
        }
        out
    }
}

/// An error sequence with the sliding-window cap it was drawn for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorPattern {
    pub word: ReceivedWord,
    /// Windows cover times `j..=j+m`.
    pub m: usize,
    pub t: usize,
    /// Every window has weight at most `t`.
    pub compliant: bool,
}

impl ErrorPattern {
    /// Weight of each window `[j, j+m]`, for `j = 0..=T`.
    pub fn window_weights(&self) -> Vec<usize> {
        window_weights(&self.word, self.m)
    }
}

fn symbol_weight(s: &[Elem]) -> usize {
    s.iter().filter(|e| !e.is_zero()).count()
}

pub fn window_weights(w: &ReceivedWord, m: usize) -> Vec<usize> {
    let per: Vec<usize> = w.symbols.iter().map(|s| symbol_weight(s)).collect();
    (0..per.len())
        .map(|j| per[j..per.len().min(j + m + 1)].iter().sum())
        .collect()
}

/// Draws an error sequence of `length` time steps. In compliant mode each
/// coordinate receives a random nonzero value with probability 1/2 unless
/// that would push some window over `t`. Adversarial mode then adds errors
/// to one random window until its weight is `t + 1`.
pub fn make_error_pattern(
    field: &Field,
    length: usize,
    n: usize,
    m: usize,
    t: usize,
    seed: u64,
    adversarial: bool,
) -> Result<ErrorPattern> {
    if length == 0 || n == 0 {
        return Err(Error::BadParams("pattern needs positive length and n".into()));
    }
    if !adversarial && t > (m + 1) / 2 {
        return Err(Error::Infeasible(format!(
            "cap t={t} exceeds floor((M+1)/2) = {}",
            (m + 1) / 2
        )));
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let q = field.order();
    let mut word = ReceivedWord::zeros(n, length - 1);
    let mut per = vec![0usize; length];
    for time in 0..length {
        for i in 0..n {
            if !rng.gen_bool(0.5) {
                continue;
            }
            // windows containing `time` start in time-m..=time
            let lo = time.saturating_sub(m);
            let fits = (lo..=time).all(|j| per[j..length.min(j + m + 1)].iter().sum::<usize>() < t);
            if fits {
                word.symbols[time][i] = Elem(rng.gen_range(1..q));
                per[time] += 1;
            }
        }
    }
    if adversarial {
        let span = length.min(m + 1);
        if span * n < t + 1 {
            return Err(Error::Infeasible(format!(
                "a window holds {} symbols, cannot place {} errors",
                span * n,
                t + 1
            )));
        }
        let start = rng.gen_range(0..=length - span);
        let mut free: Vec<(usize, usize)> = (start..start + span)
            .flat_map(|time| (0..n).map(move |i| (time, i)))
            .filter(|&(time, i)| word.symbols[time][i].is_zero())
            .collect();
        while per[start..start + span].iter().sum::<usize>() <= t {
            let (time, i) = free.swap_remove(rng.gen_range(0..free.len()));
            word.symbols[time][i] = Elem(rng.gen_range(1..q));
            per[time] += 1;
        }
    }
    let compliant = window_weights(&word, m).iter().all(|&w| w <= t);
    Ok(ErrorPattern { word, m, t, compliant })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleStatus {
    Ok,
    Ambiguous,
    NoSolution,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    pub decoded: ReceivedWord,
    pub eta0: Vec<Vec<Elem>>,
    /// Weight of the window syndrome at the start of each cycle.
    pub syndrome_weights: Vec<usize>,
    pub status: Vec<CycleStatus>,
    /// Cycles at or after this index used zero padding beyond the horizon.
    pub tail_start: usize,
    /// Cycles where a systematic shortcut decided `eta_0`.
    pub shortcut_hits: usize,
    /// Cycles where a shortcut answer differed from the exhaustive solver.
    pub shortcut_mismatches: usize,
}

impl DecodeReport {
    pub fn failed(&self) -> bool {
        self.status.iter().any(|s| *s != CycleStatus::Ok)
    }
}

/// Decoder state for one code: the sliding parity-check matrix `H^c_M`
/// and the data for the systematic shortcut.
#[derive(Debug, Clone)]
pub struct FeedbackDecoder {
    code: CodeSpec,
    m: usize,
    t: usize,
    hcm: Matrix,
    h: Vec<Poly>,
    /// Coordinates `p` with `a_p(0) != 0`, usable as shortcut pivots.
    pivots: Vec<usize>,
    /// Cross-check every shortcut answer against the exhaustive solver.
    pub verify_shortcut: bool,
    pub use_shortcut: bool,
}

impl FeedbackDecoder {
    pub fn new(code: &CodeSpec) -> Result<FeedbackDecoder> {
        let (n, k) = (code.n(), code.k());
        if k + 1 != n {
            return Err(Error::NotRateNMinus1 { n, k });
        }
        let (_, m) = lm_params(n, k, code.delta())?;
        let h = code.par()?.row(0).to_vec();
        let pivots = (0..n).filter(|&p| !h[p].coeff(0).is_zero()).collect();
        Ok(FeedbackDecoder {
            code: code.clone(),
            m,
            t: (m + 1) / 2,
            hcm: code.sliding_parity(m)?.matrix,
            h,
            pivots,
            verify_shortcut: true,
            use_shortcut: true,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Per-window error cap `floor((M+1)/2)`.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn code(&self) -> &CodeSpec {
        &self.code
    }

    /// Coefficients `j..=j+M` of `v H^T`; the received word must reach `j+M`.
    pub fn window_syndrome(&self, v: &ReceivedWord, j: usize) -> Result<Vec<Elem>> {
        if j + self.m > v.horizon() {
            return Err(Error::HorizonExceeded {
                start: j,
                end: j + self.m,
                horizon: v.horizon(),
            });
        }
        Ok(self.syndrome_padded(v, j))
    }

    /// As [`FeedbackDecoder::window_syndrome`], with zeros beyond the horizon.
    fn syndrome_padded(&self, v: &ReceivedWord, j: usize) -> Vec<Elem> {
        let f = self.code.field();
        (j..=j + self.m)
            .map(|l| {
                let mut acc = Elem::ZERO;
                for (i, hi) in self.h.iter().enumerate() {
                    for (d, &c) in hi.coeffs().iter().enumerate() {
                        if d <= l && l - d < v.symbols.len() {
                            acc = f.add(acc, f.mul(c, v.symbols[l - d][i]));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// The error at the first time of the window: the first block shared by
    /// all minimum-weight `eta` with `eta (H^c_M)^T = S` and weight at most
    /// `t`. Supports are scanned by ascending size, lexicographically.
    pub fn solve_eta0(&self, s: &[Elem]) -> Result<Vec<Elem>> {
        let f = self.code.field();
        let n = self.code.n();
        let cols = self.hcm.cols();
        for size in 0..=self.t {
            let mut found: Vec<Vec<Elem>> = Vec::new();
            for support in combinations(cols, size) {
                let x = if size == 0 {
                    s.iter().all(|e| e.is_zero()).then(Vec::new)
                } else {
                    self.hcm.select_columns(&support).solve(s, f)
                };
                let Some(x) = x else { continue };
                if x.iter().any(|e| e.is_zero()) {
                    continue;
                }
                let mut eta = vec![Elem::ZERO; cols];
                for (&c, &v) in support.iter().zip(&x) {
                    eta[c] = v;
                }
                found.push(eta);
            }
            let Some(first) = found.first() else { continue };
            let shared = if self.m % 2 == 0 { 2 * n } else { n };
            let shared = shared.min(cols);
            if found.iter().any(|e| e[..shared] != first[..shared]) {
                return Err(Error::Ambiguous);
            }
            return Ok(first[..n].to_vec());
        }
        Err(Error::NoSolution { t: self.t })
    }

    /// Tries each systematic ordering; the first one whose transformed
    /// syndrome is light enough decides `eta_0`.
    pub fn shortcut_eta0(&self, s: &[Elem]) -> Option<Vec<Elem>> {
        let f = self.code.field();
        let n = self.code.n();
        let sp = Poly::new(s.to_vec());
        for &p in &self.pivots {
            let shat = series_div(&sp, &self.h[p], self.m + 1, f).ok()?;
            if let Some(e0) = systematic_shortcut(&shat.coeffs, self.m) {
                let mut eta = vec![Elem::ZERO; n];
                eta[p] = e0;
                return Some(eta);
            }
        }
        None
    }

    pub fn decode(&self, received: &ReceivedWord) -> Result<DecodeReport> {
        let n = self.code.n();
        if received.n() != n {
            return Err(Error::ShapeMismatch(format!(
                "received word has {} coordinates, code has n={n}",
                received.n()
            )));
        }
        let f = self.code.field();
        let horizon = received.horizon();
        let mut v = received.clone();
        let mut report = DecodeReport {
            decoded: received.clone(),
            eta0: Vec::with_capacity(horizon + 1),
            syndrome_weights: Vec::with_capacity(horizon + 1),
            status: Vec::with_capacity(horizon + 1),
            tail_start: (horizon + 1).saturating_sub(self.m),
            shortcut_hits: 0,
            shortcut_mismatches: 0,
        };
        for j in 0..=horizon {
            let s = self.syndrome_padded(&v, j);
            report.syndrome_weights.push(symbol_weight(&s));
            let short = if self.use_shortcut { self.shortcut_eta0(&s) } else { None };
            let (eta, status) = match short {
                Some(eta) => {
                    report.shortcut_hits += 1;
                    if self.verify_shortcut && self.solve_eta0(&s).ok().as_ref() != Some(&eta) {
                        report.shortcut_mismatches += 1;
                    }
                    (eta, CycleStatus::Ok)
                }
                None => match self.solve_eta0(&s) {
                    Ok(eta) => (eta, CycleStatus::Ok),
                    Err(Error::Ambiguous) => (vec![Elem::ZERO; n], CycleStatus::Ambiguous),
                    Err(Error::NoSolution { .. }) => (vec![Elem::ZERO; n], CycleStatus::NoSolution),
                    Err(e) => return Err(e),
                },
            };
            for (x, e) in v.symbols[j].iter_mut().zip(&eta) {
                *x = f.sub(*x, *e);
            }
            report.eta0.push(eta);
            report.status.push(status);
        }
        report.decoded = v;
        Ok(report)
    }
}

/// With `Ŝ` the syndrome against a systematic sliding matrix: if
/// `wt(Ŝ) <= ceil((M+1)/2)` the error at time 0 is `Ŝ_0` on the pivot
/// coordinate and zero elsewhere; returns `Ŝ_0` in that case.
pub fn systematic_shortcut(shat: &[Elem], m: usize) -> Option<Elem> {
    (symbol_weight(shat) <= (m + 2) / 2).then(|| shat[0])
}

/// `(errors tolerated per window, window length in symbols)` for the
/// feedback decoder of an `(n, n-1, delta)` code.
pub fn window_capacity(n: usize, delta: usize) -> Result<(usize, usize)> {
    if n < 2 {
        return Err(Error::BadParams(format!("need n >= 2, got {n}")));
    }
    let (_, m) = lm_params(n, n - 1, delta)?;
    Ok(((m + 1) / 2, (m + 1) * n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationReport {
    pub sent: ReceivedWord,
    pub error: ErrorPattern,
    pub decode: DecodeReport,
    /// Decoded word equals the sent codeword at every time step.
    pub success: bool,
}

/// Encodes `message`, adds `error`, decodes and compares.
pub fn simulate(decoder: &FeedbackDecoder, message: &[Poly], error: &ErrorPattern) -> Result<SimulationReport> {
    let c = decoder.code();
    let f = c.field();
    let horizon = error.word.horizon();
    let memory = c.gen()?.max_degree();
    let deg = message.iter().filter_map(Poly::degree).max().unwrap_or(0);
    if deg + memory + decoder.m() > horizon {
        return Err(Error::HorizonExceeded {
            start: 0,
            end: deg + memory + decoder.m(),
            horizon,
        });
    }
    let sent = ReceivedWord::from_polys(&c.encode(message)?, horizon);
    let received = sent.add(&error.word, f);
    let decode = decoder.decode(&received)?;
    let success = decode.decoded == sent;
    Ok(SimulationReport {
        sent,
        error: error.clone(),
        decode,
        success,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TrialSummary {
    pub trials: usize,
    pub successes: usize,
    /// Trials whose error pattern broke the window cap.
    pub violating: usize,
    /// Trials the decoder reported as failed (ambiguous or no solution).
    pub flagged: usize,
    pub shortcut_hits: usize,
    pub shortcut_mismatches: usize,
}

/// Runs `trials` random messages through the channel. The horizon is
/// `4(M+1) + memory`, messages fill every position the horizon allows.
pub fn run_trials(decoder: &FeedbackDecoder, trials: usize, seed: u64, adversarial: bool) -> Result<TrialSummary> {
    let c = decoder.code();
    let f = c.field();
    let memory = c.gen()?.max_degree();
    let horizon = 4 * (decoder.m() + 1) + memory;
    let msg_len = horizon - memory - decoder.m() + 1;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut out = TrialSummary::default();
    for _ in 0..trials {
        let message: Vec<Poly> = (0..c.k())
            .map(|_| Poly::new((0..msg_len).map(|_| Elem(rng.gen_range(0..f.order()))).collect()))
            .collect();
        let err = make_error_pattern(f, horizon + 1, c.n(), decoder.m(), decoder.t(), rng.gen(), adversarial)?;
        let rep = simulate(decoder, &message, &err)?;
        out.trials += 1;
        out.successes += usize::from(rep.success);
        out.violating += usize::from(!err.compliant);
        out.flagged += usize::from(rep.decode.failed());
        out.shortcut_hits += rep.decode.shortcut_hits;
        out.shortcut_mismatches += rep.decode.shortcut_mismatches;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::PolyMatrix;

    fn gf8_code() -> CodeSpec {
        let f = Field::gf8();
        let h = PolyMatrix::from_values(f.clone(), 1, 2, &[&[1, 4, 7], &[1, 6, 7]]).unwrap();
        CodeSpec::from_parity(f, 2, 1, 2, h).unwrap()
    }

    fn b(f: &Field, e: i64) -> u32 {
        f.exp(e).value()
    }

    /// `v̂ = (bD + b^5 D^4, b^3 D^2 + b^2 D^3)` padded to horizon 9.
    fn corrupted_word(f: &Field) -> ReceivedWord {
        let v0 = Poly::from_values(&[0, b(f, 1), 0, 0, b(f, 5)]);
        let v1 = Poly::from_values(&[0, 0, b(f, 3), b(f, 2)]);
        ReceivedWord::from_polys(&[v0, v1], 9)
    }

    #[test]
    fn codewords_have_zero_window_syndromes() {
        let c = gf8_code();
        let d = FeedbackDecoder::new(&c).unwrap();
        let f = c.field();
        let v = c.encode(&[Poly::from_values(&[3, 1, 5])]).unwrap();
        let w = ReceivedWord::from_polys(&v, 10);
        for j in 0..=6 {
            assert!(d.window_syndrome(&w, j).unwrap().iter().all(|e| e.is_zero()));
        }
        assert!(matches!(d.window_syndrome(&w, 7), Err(Error::HorizonExceeded { .. })));
        // single error: syndrome is e times the matching column of H^c_M
        let mut e = ReceivedWord::zeros(2, 10);
        e.symbols[0][1] = Elem(5);
        let s = d.window_syndrome(&w.add(&e, f), 0).unwrap();
        let expect: Vec<Elem> = (0..5).map(|r| f.mul(Elem(5), d.hcm.get(r, 1))).collect();
        assert_eq!(s, expect);
        assert_eq!(d.solve_eta0(&s).unwrap(), vec![Elem::ZERO, Elem(5)]);
        assert_eq!(d.solve_eta0(&[Elem::ZERO; 5]).unwrap(), vec![Elem::ZERO; 2]);
    }

    #[test]
    fn solver_agrees_with_brute_force() {
        // oracle: every eta of weight <= 2 in F_8^10, grouped by syndrome
        let c = gf8_code();
        let d = FeedbackDecoder::new(&c).unwrap();
        let f = c.field();
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(4);
        for _ in 0..40 {
            let mut eta = vec![Elem::ZERO; 10];
            for _ in 0..rng.gen_range(0..=2) {
                eta[rng.gen_range(0..10)] = Elem(rng.gen_range(1..8));
            }
            let s = d.hcm.mul_vec(&eta, f);
            let mut firsts = Vec::new();
            for i in 0..10 {
                for j in i..10 {
                    for a in 0..8 {
                        for bb in 0..8 {
                            let mut x = vec![Elem::ZERO; 10];
                            x[i] = Elem(a);
                            x[j] = f.add(x[j], Elem(bb));
                            if i == j && bb != 0 {
                                continue;
                            }
                            if d.hcm.mul_vec(&x, f) == s {
                                firsts.push(x[..2].to_vec());
                            }
                        }
                    }
                }
            }
            assert!(firsts.iter().all(|e| *e == firsts[0]));
            assert_eq!(d.solve_eta0(&s).unwrap(), eta[..2].to_vec());
        }
    }

    #[test]
    fn shortcut_threshold_is_inclusive() {
        let z = Elem::ZERO;
        assert_eq!(systematic_shortcut(&[z; 5], 4), Some(z));
        let x = Elem(3);
        assert_eq!(systematic_shortcut(&[x, x, x, z, z], 4), Some(x));
        assert_eq!(systematic_shortcut(&[x, x, x, x, z], 4), None);
        assert_eq!(systematic_shortcut(&[x, z, x, z], 3), Some(x));
        assert_eq!(systematic_shortcut(&[x, x, x, z], 3), None);
    }

    #[test]
    fn corrupted_word_decodes_to_the_nonzero_codeword() {
        let c = gf8_code();
        let f = c.field().clone();
        let d = FeedbackDecoder::new(&c).unwrap();
        let vhat = corrupted_word(&f);
        assert!(d.window_syndrome(&vhat, 0).unwrap().iter().any(|e| !e.is_zero()));
        let rep = d.decode(&vhat).unwrap();
        assert!(!rep.failed());
        assert_eq!(rep.eta0[0], vec![Elem::ONE, Elem::ONE]);
        let v1 = [
            Poly::from_values(&[1, b(&f, 1), 0, 0, b(&f, 5), b(&f, 2)]),
            Poly::from_values(&[1, 0, b(&f, 3), b(&f, 2), 0, b(&f, 2)]),
        ];
        assert_eq!(rep.decoded, ReceivedWord::from_polys(&v1, 9));
        assert!(c.syndrome(&v1).unwrap().iter().all(Poly::is_zero));
        assert!(rep.syndrome_weights[6..].iter().all(|&w| w == 0));
        assert_eq!(rep.shortcut_mismatches, 0);
    }

    #[test]
    fn error_patterns() {
        let f = Field::gf8();
        let p = make_error_pattern(&f, 20, 2, 4, 0, 1, false).unwrap();
        assert!(p.word.symbols.iter().all(|s| s.iter().all(|e| e.is_zero())));
        for seed in 0..20 {
            let p = make_error_pattern(&f, 20, 2, 4, 2, seed, false).unwrap();
            assert!(p.compliant && p.window_weights().iter().all(|&w| w <= 2));
            assert_eq!(p, make_error_pattern(&f, 20, 2, 4, 2, seed, false).unwrap());
            let a = make_error_pattern(&f, 20, 2, 4, 2, seed, true).unwrap();
            assert!(!a.compliant && a.window_weights().iter().any(|&w| w > 2));
        }
        // errors at times 0 and 5 on both coordinates
        let mut w = ReceivedWord::zeros(2, 9);
        w.symbols[0] = vec![Elem::ONE; 2];
        w.symbols[5] = vec![Elem(4); 2];
        assert!(window_weights(&w, 4).iter().all(|&x| x <= 2));
        assert!(matches!(make_error_pattern(&f, 20, 2, 4, 3, 0, false), Err(Error::Infeasible(_))));
        assert!(matches!(make_error_pattern(&f, 1, 1, 4, 2, 0, true), Err(Error::Infeasible(_))));
    }

    #[test]
    fn seeded_trials_recover_everything() {
        let d = FeedbackDecoder::new(&gf8_code()).unwrap();
        let s = run_trials(&d, 30, 11, false).unwrap();
        assert_eq!(s.successes, 30);
        assert_eq!(s.shortcut_mismatches, 0);
        assert_eq!(s.violating, 0);
    }

    #[test]
    fn rate_half_window_arithmetic() {
        for delta in 1..6 {
            assert_eq!(window_capacity(2, delta).unwrap(), (delta, 4 * delta + 2));
        }
    }

    #[test]
    fn text_round_trip() {
        let f = Field::gf8();
        let w = corrupted_word(&f);
        assert_eq!(ReceivedWord::parse(&w.to_text(), &f, 2).unwrap(), w);
        assert!(ReceivedWord::parse("1,2,3\n", &f, 2).is_err());
        assert!(ReceivedWord::parse("word n=3\n1,2\n", &f, 2).is_err());
        assert!(ReceivedWord::parse("1,9\n", &f, 2).is_err());
    }
}
