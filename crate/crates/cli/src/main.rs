use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qsym_core::compute::{compute, ComputeRequest, FamilyKind, Method};
use qsym_core::qfun::q_row;
use qsym_core::ring::series_from_linear_factors;
use qsym_core::symfun::Alphabet;
use qsym_core::tableaux::VariableSpec;
use qsym_core::verify::{run_suite, Budget, CheckResult, Suite};
use qsym_core::Error;

const EXIT_DISAGREE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "qsym", version, about = "Exact intermediate symplectic Q-polynomials, cross-checked by several routes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "schur")]
    Schur,
    #[value(name = "symp-schur")]
    SympSchur,
    #[value(name = "inter-schur")]
    InterSchur,
    #[value(name = "qA")]
    QA,
    #[value(name = "qC")]
    QC,
    #[value(name = "qI")]
    QI,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Schur => FamilyKind::Schur,
            FamilyArg::SympSchur => FamilyKind::SympSchur,
            FamilyArg::InterSchur => FamilyKind::InterSchur,
            FamilyArg::QA => FamilyKind::QA,
            FamilyArg::QC => FamilyKind::QC,
            FamilyArg::QI => FamilyKind::QI,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Definition,
    Tableau,
    Pfaffian,
    Branch,
    Lgv,
    All,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Definition => Method::Definition,
            MethodArg::Tableau => Method::Tableau,
            MethodArg::Pfaffian => Method::Pfaffian,
            MethodArg::Branch => Method::Branch,
            MethodArg::Lgv => Method::Lgv,
            MethodArg::All => Method::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ring,
    Tableaux,
    Schur,
    Qfun,
    Lgv,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Ring => Suite::Ring,
            SuiteArg::Tableaux => Suite::Tableaux,
            SuiteArg::Schur => Suite::Schur,
            SuiteArg::Qfun => Suite::Qfun,
            SuiteArg::Lgv => Suite::Lgv,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial. `qI` defaults to running every route.
    Compute {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Comma-separated parts, e.g. 3,1
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long)]
        json: bool,
    },
    /// Print the one-row values for l = 0..=degree, checked against the product.
    Series {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Run the cross-verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
        #[arg(long, default_value_t = 3)]
        max_vars: usize,
    },
}

fn error_exit(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    })
}

fn max_terms() -> Result<Option<usize>, Error> {
    match std::env::var("QSYM_MAX_TERMS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("QSYM_MAX_TERMS={v:?} is not a count"))),
        Err(_) => Ok(None),
    }
}

fn cmd_compute(req: ComputeRequest, json: bool) -> ExitCode {
    let report = match compute(&req) {
        Ok(r) => r,
        Err(e) => return error_exit(&e),
    };
    let show = |p: &qsym_core::ring::LaurentPoly| if json { p.to_json() } else { p.to_string() };
    if report.routes.len() > 1 {
        for (m, p) in &report.routes {
            eprintln!("{m}: {p}");
        }
    }
    match report.agreed() {
        Some(p) => {
            println!("{}", show(p));
            ExitCode::SUCCESS
        }
        None => {
            eprintln!("error: routes disagree");
            ExitCode::from(EXIT_DISAGREE)
        }
    }
}

fn cmd_series(k: usize, m: usize, degree: usize) -> ExitCode {
    let spec = VariableSpec::new(k, m);
    let alpha = Alphabet::intermediate(spec);
    let prod = match series_from_linear_factors(spec.n(), alpha.monomials(), alpha.monomials(), degree) {
        Ok(s) => s,
        Err(e) => return error_exit(&e),
    };
    let mut ok = true;
    for l in 0..=degree {
        let q = q_row(l as i64, spec);
        if q != prod.coeff(l) {
            eprintln!("mismatch at l={l}: {q} vs {}", prod.coeff(l));
            ok = false;
        }
        println!("{q}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREE)
    }
}

fn cmd_verify(suite: Suite, budget: Budget) -> ExitCode {
    let mut results: Vec<CheckResult> = if suite == Suite::All {
        let suites = [Suite::Ring, Suite::Tableaux, Suite::Schur, Suite::Qfun, Suite::Lgv];
        std::thread::scope(|s| {
            let handles: Vec<_> = suites.iter().map(|&x| s.spawn(move || run_suite(x, budget))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("suite panicked")).collect()
        })
    } else {
        run_suite(suite, budget)
    };
    results.sort_by(|a, b| (a.suite, a.name).cmp(&(b.suite, b.name)));
    let failed = results.iter().filter(|r| !r.passed()).count();
    for r in &results {
        println!("{r}");
    }
    println!("{} properties, {} failed", results.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Compute {
            family,
            lambda,
            mu,
            k,
            m,
            method,
            json,
        } => {
            let max_terms = match max_terms() {
                Ok(v) => v,
                Err(e) => return error_exit(&e),
            };
            let req = ComputeRequest {
                family: family.into(),
                lambda,
                mu,
                k,
                m,
                method: method.map(Into::into),
                max_terms,
            };
            cmd_compute(req, json)
        }
        Command::Series { k, m, degree } => cmd_series(k, m, degree),
        Command::Verify {
            suite,
            max_weight,
            max_vars,
        } => cmd_verify(suite.into(), Budget { max_weight, max_vars }),
    }
}
