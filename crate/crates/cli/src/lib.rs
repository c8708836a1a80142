//! The `intervals` command line.
//!
//! [`run`] parses arguments and returns the exit code with the text that
//! would go to stdout and stderr, so the binary and the tests share one path.
//! Exit codes: 0 success or equal, 1 computed inequality, 2 usage or input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use interval_core::algebra::{
    coxeter_report, derived_invariant_report, gamma_zero_category, incidence_category, ThinCategory,
};
use interval_core::enumerate::{all_ideal_maps, posets_up_to, random_instance};
use interval_core::format::{poset_to_dot, read_ideal_map, read_poset, write_poset};
use interval_core::gamma::{build_gamma, IdealMap};
use interval_core::orientations::orientations_int_search;
use interval_core::paths::{conjecture_report, dyck_paths_poset, lattice_paths_poset};
use interval_core::poset::Poset;
use interval_core::rep::verify_tilting;
use interval_core::{Error, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn flagged(equal: bool, stdout: String) -> Self {
        Outcome { code: if equal { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "intervals", version, about = "Derived invariants of interval and generalized-interval posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a poset file, or export its Hasse diagram as DOT.
    Poset {
        #[command(subcommand)]
        action: PosetAction,
    },
    /// Print the interval poset Int(P) in the poset file format.
    Intervals { file: PathBuf },
    /// Coxeter polynomial (ascending coefficients) of a poset or of Γ.
    Coxeter(CoxeterArgs),
    /// Compare derived invariants of two posets.
    ///
    /// A spec is a poset file, `int:<file>`, `prod:<f1>:<f2>`, `dyck:<a>:<b>`,
    /// `lattice:<a>:<b>` or `chain:<n>`.
    Compare { left: String, right: String },
    /// Check the tilting module and Coxeter polynomials over a family of (X, Y, F).
    VerifyTheorem(VerifyArgs),
    /// Compare A_{a+b} x Dyck_{a,b} with L_{a,b} (evidence only).
    Conjecture { a: usize, b: usize },
    /// Coxeter polynomials of Int(P) over all orientations P of the n-element line.
    OrientationsInt { n: usize },
}

#[derive(Subcommand, Debug)]
enum PosetAction {
    Show { file: PathBuf },
    Dot { file: PathBuf },
}

#[derive(Args, Debug)]
struct CoxeterArgs {
    /// Poset file.
    #[arg(required_unless_present = "gamma", conflicts_with = "gamma")]
    file: Option<PathBuf>,
    /// Ideal map file; uses the poset Γ it defines.
    #[arg(long, value_name = "IDEALMAP")]
    gamma: Option<PathBuf>,
    /// With --gamma, use the zero-relation category on Γ instead.
    #[arg(long)]
    zero: bool,
    /// Also print the Cartan and Coxeter matrices.
    #[arg(long)]
    matrices: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VerifyMode {
    /// All (X, Y, F) with |X| ≤ NX and |Y| ≤ NY, up to isomorphism of X and Y.
    #[arg(long, num_args = 2, value_names = ["NX", "NY"])]
    exhaustive: Option<Vec<usize>>,
    /// N seeded random instances.
    #[arg(long, value_name = "N", requires = "seed")]
    random: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    mode: VerifyMode,
    /// RNG seed, required with --random.
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
    /// Largest |X| and |Y| of random instances.
    #[arg(long, num_args = 2, value_names = ["MX", "MY"], default_values_t = [4, 4])]
    max: Vec<usize>,
    /// Print one line per instance.
    #[arg(long)]
    verbose: bool,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Poset { action: PosetAction::Show { file } } => read_poset(&file).map(|p| Outcome::ok(show_poset(&p))),
        Command::Poset { action: PosetAction::Dot { file } } => read_poset(&file).map(|p| Outcome::ok(poset_to_dot(&p))),
        Command::Intervals { file } => read_poset(&file).map(|p| Outcome::ok(intervals_text(&p))),
        Command::Coxeter(args) => coxeter(&args),
        Command::Compare { left, right } => compare(&left, &right),
        Command::VerifyTheorem(args) => verify_theorem(&args),
        Command::Conjecture { a, b } => {
            conjecture_report(a, b).map(|r| Outcome::flagged(r.equal(), format!("{r}\n")))
        }
        Command::OrientationsInt { n } => Ok(Outcome::ok(format!("{}\n", orientations_int_search(n)))),
    };
    result.unwrap_or_else(Outcome::input_error)
}

fn show_poset(p: &Poset) -> String {
    let mut s = format!("{} elements, {} covers\n", p.size(), p.covers().len());
    for (i, height) in p.heights().into_iter().enumerate() {
        writeln!(s, "  {i} ({}): height {height}, lower covers {:?}", p.label(i), p.lower_covers(i)).unwrap();
    }
    s
}

fn intervals_text(p: &Poset) -> String {
    let (int, intervals) = p.interval_poset();
    let mut s = String::new();
    for (i, (a, b)) in intervals.iter().enumerate() {
        writeln!(s, "# {i} = [{a},{b}]").unwrap();
    }
    s.push_str(&write_poset(&int));
    s
}

fn coxeter(args: &CoxeterArgs) -> Result<Outcome, Error> {
    if args.zero && args.gamma.is_none() {
        return Ok(Outcome::input_error("--zero needs --gamma <IDEALMAP>"));
    }
    let category = match (&args.file, &args.gamma) {
        (Some(file), _) => incidence_category(&read_poset(file)?),
        (None, Some(map)) => {
            let g = build_gamma(&read_ideal_map(map)?);
            if args.zero {
                gamma_zero_category(&g)?
            } else {
                incidence_category(g.poset())
            }
        }
        (None, None) => unreachable!("clap requires a file or --gamma"),
    };
    let report = coxeter_report(&category)?;
    let mut s = format!("{}\n", report.polynomial);
    if args.matrices {
        writeln!(s, "cartan (object order {:?}):", report.order).unwrap();
        s.push_str(&matrix_text(&report.cartan));
        s.push_str("coxeter:\n");
        s.push_str(&matrix_text(&report.coxeter));
    }
    Ok(Outcome::ok(s))
}

fn matrix_text(m: &interval_core::IntMatrix) -> String {
    (0..m.rows())
        .map(|r| format!("  {}\n", m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
        .collect()
}

fn parse_count(spec: &str, word: &str) -> Result<usize, Error> {
    word.parse().map_err(|_| Error::Parse { line: 0, msg: format!("bad number {word:?} in spec {spec:?}") })
}

/// Resolves a comparison spec to a poset.
pub fn spec_poset(spec: &str) -> Result<Poset, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let file = |p: &str| read_poset(Path::new(p));
    match parts.as_slice() {
        ["int", f] => Ok(file(f)?.interval_poset().0),
        ["prod", f, g] => Ok(file(f)?.product(&file(g)?)),
        ["dyck", a, b] => Ok(dyck_paths_poset(parse_count(spec, a)?, parse_count(spec, b)?)?.0),
        ["lattice", a, b] => Ok(lattice_paths_poset(parse_count(spec, a)?, parse_count(spec, b)?)?.0),
        ["chain", n] => Ok(Poset::chain(parse_count(spec, n)?)),
        [_] => file(spec),
        _ => Err(Error::Parse { line: 0, msg: format!("unknown spec {spec:?}") }),
    }
}

fn compare(left: &str, right: &str) -> Result<Outcome, Error> {
    let (a, b) = (spec_poset(left)?, spec_poset(right)?);
    let report = derived_invariant_report(&incidence_category(&a), &incidence_category(&b))?;
    let mut s = format!("left: {left}\nright: {right}\n");
    s.push_str(&report.human_text());
    for line in report.machine_lines() {
        writeln!(s, "{line}").unwrap();
    }
    Ok(Outcome::flagged(report.all_equal(), s))
}

/// All `(X, Y, F)` with `|X| ≤ nx`, `|Y| ≤ ny`, one `X` and `Y` per isomorphism class.
pub fn exhaustive_instances(nx: usize, ny: usize) -> Vec<IdealMap> {
    let (xs, ys) = (posets_up_to(nx), posets_up_to(ny));
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            out.extend(all_ideal_maps(x, y));
        }
    }
    out
}

pub fn random_instances(count: usize, seed: u64, max_x: usize, max_y: usize) -> Vec<IdealMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_instance(&mut rng, max_x, max_y)).collect()
}

/// Outcome of the checks on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceCheck {
    pub gamma_size: usize,
    pub tilting: bool,
    pub coxeter: bool,
    pub detail: String,
}

impl InstanceCheck {
    pub fn passes(&self) -> bool {
        self.tilting && self.coxeter
    }
}

/// The tilting check and the Coxeter comparison of incidence(Γ) with kΓ₀.
pub fn check_instance(map: &IdealMap) -> Result<InstanceCheck, Error> {
    let g = build_gamma(map);
    let tilting = verify_tilting::<Rational>(&g)?;
    let zero: ThinCategory = gamma_zero_category(&g)?;
    let invariants = derived_invariant_report(&incidence_category(g.poset()), &zero)?;
    Ok(InstanceCheck {
        gamma_size: g.len(),
        tilting: tilting.passes(),
        coxeter: invariants.polynomials_equal(),
        detail: format!("{tilting}\n{}", invariants.human_text()),
    })
}

fn describe(map: &IdealMap) -> String {
    let fibers: Vec<String> = (0..map.y().size()).map(|y| format!("{:?}", map.fiber(y))).collect();
    format!("|X|={} X covers {:?}, |Y|={} Y covers {:?}, F = {}", map.x().size(), map.x().covers(), map.y().size(), map.y().covers(), fibers.join(" "))
}

fn verify_theorem(args: &VerifyArgs) -> Result<Outcome, Error> {
    let mut s = String::new();
    let instances = match (&args.mode.exhaustive, args.mode.random) {
        (Some(n), _) => {
            writeln!(s, "exhaustive sweep: |X| <= {}, |Y| <= {}", n[0], n[1]).unwrap();
            exhaustive_instances(n[0], n[1])
        }
        (None, Some(count)) => {
            let seed = args.seed.expect("clap requires --seed");
            writeln!(s, "random sweep: {count} instances, seed {seed}, |X| <= {}, |Y| <= {}", args.max[0], args.max[1]).unwrap();
            random_instances(count, seed, args.max[0], args.max[1])
        }
        (None, None) => unreachable!("clap requires a mode"),
    };
    let results: Vec<Result<InstanceCheck, Error>> = instances.par_iter().map(check_instance).collect();
    let mut failures = 0;
    for (i, (map, result)) in instances.iter().zip(results).enumerate() {
        let check = result?;
        if args.verbose {
            writeln!(s, "instance {i}: |Γ|={} tilting {} coxeter {}", check.gamma_size, mark(check.tilting), mark(check.coxeter)).unwrap();
        }
        if !check.passes() {
            failures += 1;
            writeln!(s, "FAILED instance {i}: {}\n{}", describe(map), check.detail).unwrap();
        }
    }
    writeln!(s, "checked {} instances: Ext-vanishing, End(T)^op vs zero-relation category, summand count, Coxeter polynomials", instances.len()).unwrap();
    writeln!(s, "not checked: that add(T) generates the perfect complexes").unwrap();
    if failures == 0 {
        s.push_str("all instances pass\n");
    } else {
        writeln!(s, "{failures} instances fail").unwrap();
    }
    Ok(Outcome::flagged(failures == 0, s))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}
