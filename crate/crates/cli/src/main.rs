use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use strongmds::code::CodeSpec;
use strongmds::construct::{construct_dual_mds, construct_strongly_mds};
use strongmds::decoder::{run_trials, CycleStatus, FeedbackDecoder, ReceivedWord};
use strongmds::distances::{
    column_bound, column_distance_parity, column_distances, free_distance, has_mdp_minors, lm_params, profile,
    Exactness, DEFAULT_BUDGET,
};
use strongmds::error::Error;
use strongmds::galois::{Elem, Field};
use strongmds::superregular::{check_equivalences, search_toeplitz, smallest_prime_superregular, SearchMode, Toeplitz};

mod selftest;
mod table;

use table::{Format, Table};

#[derive(Parser)]
#[command(name = "strongmds", version, about = "Strongly MDS convolutional codes: distances, constructions, decoding")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on the number of candidates a search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a strongly MDS (n, n-1, delta) code, or its (n, 1, delta) dual.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        /// e.g. "GF(2^3;1,1,0,1)" or "GF(7)".
        #[arg(long)]
        field: String,
        /// First column of the superregular Toeplitz matrix, comma-separated.
        #[arg(long)]
        toeplitz: Option<String>,
        #[arg(long)]
        dual: bool,
        /// Write the code description here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Column distances d^c_0 .. d^c_horizon.
    Distances {
        #[arg(long)]
        code: PathBuf,
        /// Defaults to M.
        #[arg(long)]
        horizon: Option<usize>,
        /// Use the parity-check formulation.
        #[arg(long)]
        parity: bool,
    },
    /// Distance profile with MDS, strongly MDS and MDP flags.
    Classify {
        #[arg(long)]
        code: PathBuf,
        /// Defaults to max(L, M).
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Superregularity checks and searches for lower-triangular Toeplitz matrices.
    #[command(group(ArgGroup::new("action").required(true).args(["check", "equivalences", "search", "prime_for"])))]
    Superregular {
        /// "GF(...);t1,...,tl"
        #[arg(long)]
        check: Option<String>,
        /// Evaluate the seven characterizations separately.
        #[arg(long)]
        equivalences: Option<String>,
        /// Search a superregular matrix of this size (needs --field).
        #[arg(long, requires = "field")]
        search: Option<usize>,
        #[arg(long)]
        field: Option<String>,
        /// Sample with --seed instead of scanning exhaustively.
        #[arg(long)]
        seeded: bool,
        /// Smallest prime making the binomial Toeplitz matrix of this size superregular.
        #[arg(long)]
        prime_for: Option<usize>,
    },
    /// Feedback-decode a received word.
    Decode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        received: PathBuf,
        /// Write the decoded word here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded encode / corrupt / decode trials.
    Simulate {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Put one window over the error cap in every trial.
        #[arg(long)]
        adversarial: bool,
    },
    /// Print the dual code.
    Dual {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in golden checks.
    Selftest,
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_code(path: &Path) -> Outcome<CodeSpec> {
    Ok(CodeSpec::parse(&read(path)?)?)
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error[Io]: {msg}");
            ExitCode::from(1)
        }
    }
}

/// `Ok(false)` means the command ran but reported a failure.
fn run(cli: &Cli) -> Outcome<bool> {
    let fmt = cli.format;
    match &cli.command {
        Command::Construct {
            n,
            delta,
            field,
            toeplitz,
            dual,
            out,
        } => {
            let field: Field = field.parse()?;
            let t = toeplitz
                .as_deref()
                .map(|s| -> Outcome<Toeplitz> {
                    let col = s
                        .split(',')
                        .map(|v| {
                            let v: u64 = v.trim().parse().map_err(|_| Error::Parse {
                                line: 0,
                                msg: format!("bad Toeplitz entry {v:?}"),
                            })?;
                            field.elem(v)
                        })
                        .collect::<Result<Vec<Elem>, Error>>()?;
                    Ok(Toeplitz::new(field.clone(), col)?)
                })
                .transpose()?;
            let mut report = Table::new(&["property", "value"]);
            let code = if *dual {
                let code = construct_dual_mds(*n, *delta, &field, t, cli.budget)?;
                report.push(["strongly-MDS", "true"]);
                code
            } else {
                let tr = construct_strongly_mds(*n, *delta, &field, t, cli.budget)?;
                let c = &tr.certificates;
                report.push(["tau".to_string(), tr.tau.to_string()]);
                report.push(["toeplitz".to_string(), join(tr.toeplitz.first_column(), ",")]);
                report.push(["a".to_string(), tr.a.to_string()]);
                report.push(["b".to_string(), join(&tr.b, " ; ")]);
                for (name, ok) in [
                    ("column-property", c.column_property),
                    ("basic", c.basic),
                    ("degree", c.degree),
                    ("series", c.series),
                    ("round-trip", c.round_trip),
                    ("strongly-MDS", c.strongly_mds),
                ] {
                    report.push([name.to_string(), ok.to_string()]);
                }
                tr.code
            };
            report.push(["n,k,delta".to_string(), format!("{},{},{}", code.n(), code.k(), code.delta())]);
            write_or_print(out.as_deref(), &code.to_text())?;
            if out.is_none() {
                println!();
            }
            print!("{}", report.render(fmt));
            Ok(true)
        }
        Command::Distances { code, horizon, parity } => {
            let c = load_code(code)?;
            let (_, m) = lm_params(c.n(), c.k(), c.delta())?;
            let horizon = horizon.unwrap_or(m);
            let values = if *parity {
                (0..=horizon)
                    .map(|j| column_distance_parity(&c, j, cli.budget))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                column_distances(&c, horizon, cli.budget)?
            };
            let mut t = Table::new(&["j", "d_c", "bound"]);
            for (j, d) in values.iter().enumerate() {
                t.push([j, *d, column_bound(c.n(), c.k(), j)]);
            }
            print!("{}", t.render(fmt));
            Ok(true)
        }
        Command::Classify { code, horizon } => {
            let c = load_code(code)?;
            let (l, m) = lm_params(c.n(), c.k(), c.delta())?;
            let p = profile(&c, horizon.unwrap_or(l.max(m)), cli.budget)?;
            let (dfree, exact) = free_distance(&c, p.horizon, cli.budget)?;
            let mut t = Table::new(&["property", "value"]);
            t.push(["n,k,delta".to_string(), format!("{},{},{}", c.n(), c.k(), c.delta())]);
            t.push(["profile".to_string(), join(&p.values, ",")]);
            t.push(["L,M".to_string(), format!("{l},{m}")]);
            t.push(["singleton".to_string(), p.singleton.to_string()]);
            let qualifier = if exact == Exactness::Exact { "exact" } else { "lower-bound" };
            t.push(["free-distance".to_string(), format!("{dfree} ({qualifier})")]);
            t.push(["MDS".to_string(), p.is_mds_confirmed.to_string()]);
            t.push(["strongly-MDS".to_string(), p.is_strongly_mds.to_string()]);
            t.push(["MDP".to_string(), p.has_mdp.to_string()]);
            t.push(["MDP-minors".to_string(), has_mdp_minors(&c, cli.budget)?.to_string()]);
            print!("{}", t.render(fmt));
            Ok(true)
        }
        Command::Superregular {
            check,
            equivalences,
            search,
            field,
            seeded,
            prime_for,
        } => {
            if let Some(spec) = check {
                let t = Toeplitz::parse(spec)?;
                let zero = t.first_zero_proper_minor();
                let mut tab = Table::new(&["superregular", "first_zero_minor"]);
                tab.push([
                    zero.is_none().to_string(),
                    zero.map_or("-".to_string(), |p| p.to_string()),
                ]);
                print!("{}", tab.render(fmt));
            } else if let Some(spec) = equivalences {
                let t = Toeplitz::parse(spec)?;
                let r = check_equivalences(&t, cli.budget)?;
                let mut tab = Table::new(&["characterization", "holds"]);
                for (name, v) in [("a", r.a), ("b", r.b), ("c", r.c), ("d", r.d), ("e", r.e), ("f", r.f), ("g", r.g)] {
                    tab.push([name.to_string(), v.to_string()]);
                }
                tab.push(["degenerate".to_string(), r.degenerate.to_string()]);
                tab.push(["agree".to_string(), r.all_agree().to_string()]);
                print!("{}", tab.render(fmt));
            } else if let Some(l) = search {
                let f: Field = field.as_deref().expect("clap enforces --field").parse()?;
                let mode = if *seeded {
                    SearchMode::Seeded(cli.seed)
                } else {
                    SearchMode::Exhaustive
                };
                match search_toeplitz(*l, &f, mode, cli.budget)? {
                    Some(t) => println!("{}", t.to_text()),
                    None => return Err(Error::NoSuperregularFound(*l).into()),
                }
            } else if let Some(n) = prime_for {
                println!("{}", smallest_prime_superregular(*n, cli.budget)?);
            }
            Ok(true)
        }
        Command::Decode { code, received, out } => {
            let c = load_code(code)?;
            let v = ReceivedWord::parse(&read(received)?, c.field(), c.n())?;
            let d = FeedbackDecoder::new(&c)?;
            let rep = d.decode(&v)?;
            write_or_print(out.as_deref(), &rep.decoded.to_text())?;
            if out.is_none() {
                println!();
            }
            let mut t = Table::new(&["j", "syndrome_weight", "eta0", "status", "tail"]);
            for j in 0..rep.eta0.len() {
                let status = match rep.status[j] {
                    CycleStatus::Ok => "ok",
                    CycleStatus::Ambiguous => "ambiguous",
                    CycleStatus::NoSolution => "no_solution",
                };
                t.push([
                    j.to_string(),
                    rep.syndrome_weights[j].to_string(),
                    join(&rep.eta0[j], " "),
                    status.to_string(),
                    (j >= rep.tail_start).to_string(),
                ]);
            }
            print!("{}", t.render(fmt));
            Ok(!rep.failed())
        }
        Command::Simulate {
            code,
            trials,
            adversarial,
        } => {
            let c = load_code(code)?;
            let d = FeedbackDecoder::new(&c)?;
            let s = run_trials(&d, *trials, cli.seed, *adversarial)?;
            let mut t = Table::new(&["property", "value"]);
            for (k, v) in [
                ("M", d.m()),
                ("window_cap", d.t()),
                ("trials", s.trials),
                ("successes", s.successes),
                ("cap_violations", s.violating),
                ("flagged", s.flagged),
                ("shortcut_hits", s.shortcut_hits),
                ("shortcut_mismatches", s.shortcut_mismatches),
            ] {
                t.push([k.to_string(), v.to_string()]);
            }
            print!("{}", t.render(fmt));
            Ok(*adversarial || s.successes == s.trials)
        }
        Command::Dual { code, out } => {
            let c = load_code(code)?;
            write_or_print(out.as_deref(), &c.dual()?.to_text())?;
            Ok(true)
        }
        Command::Selftest => {
            let results = selftest::run(cli.budget);
            let mut t = Table::new(&["check", "result", "detail"]);
            let mut all = true;
            for r in &results {
                all &= r.pass;
                t.push([r.name.clone(), if r.pass { "PASS" } else { "FAIL" }.to_string(), r.detail.clone()]);
            }
            print!("{}", t.render(fmt));
            Ok(all)
        }
    }
}
