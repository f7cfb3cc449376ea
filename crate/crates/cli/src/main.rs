//! Command-line front end for the exact Reynolds operator engine.
//!
//! Exit codes: 0 success, 2 polynomial parse error, 3 unsupported action
//! or shape, 4 integration outside the Weingarten regime.

use clap::{Args, Parser, Subcommand, ValueEnum};

use reynolds_core::actions::{ActionError, ActionSpec, Group, RationalMatrix};
use reynolds_core::haar::{self, HaarError};
use reynolds_core::identities;
use reynolds_core::invariants::{self, ExpressOutcome, InvarianceVerdict};
use reynolds_core::numutil::Rat;
use reynolds_core::polyring::{parse_polynomial, MonomialDisplay, VarKind};
use reynolds_core::reynolds::{ReynoldsError, ReynoldsRequest, Strategy};
use reynolds_core::splitcrit::{self, SplitCase, SplitQuery};
use reynolds_core::suite;

const EXIT_PARSE: i32 = 2;
const EXIT_UNSUPPORTED: i32 = 3;
const EXIT_SINGULAR: i32 = 4;

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<reynolds_core::polyring::ParseError> for Failure {
    fn from(e: reynolds_core::polyring::ParseError) -> Self {
        Failure::new(EXIT_PARSE, e.to_string())
    }
}

impl From<ActionError> for Failure {
    fn from(e: ActionError) -> Self {
        Failure::new(EXIT_UNSUPPORTED, e.to_string())
    }
}

impl From<HaarError> for Failure {
    fn from(e: HaarError) -> Self {
        let code = match e {
            HaarError::SingularGram { .. } => EXIT_SINGULAR,
            _ => EXIT_UNSUPPORTED,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ReynoldsError> for Failure {
    fn from(e: ReynoldsError) -> Self {
        match e {
            ReynoldsError::Haar(h) => h.into(),
            ReynoldsError::Action(a) => a.into(),
            ReynoldsError::Unsupported(msg) => Failure::new(EXIT_UNSUPPORTED, msg),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "reynolds",
    about = "Exact Reynolds operators for the classical group actions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Gl,
    Sl,
    O,
    Sp,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::Gl => Group::Gl,
            GroupArg::Sl => Group::Sl,
            GroupArg::O => Group::O,
            GroupArg::Sp => Group::Sp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    General,
    Closed,
    Auto,
}

#[derive(Args)]
struct SpecArgs {
    /// Group of the action
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Matrix size t
    #[arg(long)]
    t: u16,
    /// Copies of the standard representation
    #[arg(long, default_value_t = 1)]
    n: u16,
    /// Copies of the dual representation (0 = pure standard action)
    #[arg(long, default_value_t = 0)]
    m: u16,
}

impl SpecArgs {
    fn to_spec(&self) -> Result<ActionSpec, Failure> {
        Ok(ActionSpec::new(self.group.into(), self.t, self.n, self.m)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply the Reynolds operator to a polynomial
    Apply {
        #[command(flatten)]
        spec: SpecArgs,
        /// Evaluation strategy (default: auto for SL, general for GL)
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        /// Emit {"terms": [[monomial, coefficient], ..]} instead of text
        #[arg(long)]
        json: bool,
        #[arg(help = "Polynomial text, e.g. \"a1^3*b2^3\" or \"x[1][1]*y[1][1]\"")]
        polynomial: String,
    },
    /// Integrate a monomial in the u variables over SU(2) or U(t)
    Integrate {
        /// Compact group to integrate over
        #[arg(long, value_enum)]
        group: IntegrateGroup,
        /// Dimension t for the unitary group (ignored for su2)
        #[arg(long, default_value_t = 2)]
        t: u64,
        #[arg(help = "Monomial over u/ubar, e.g. \"u[1][1]*ubar[1][1]\"")]
        monomial: String,
    },
    /// Print the generating invariants of an action
    Generators {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Test a polynomial for invariance with random group elements
    Check {
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of random elements to try
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// RNG seed
        #[arg(long, default_value_t = 20100712)]
        seed: u64,
        /// Test one specific group element given as a row-major rational
        /// list, e.g. "2,0,0,1/2", instead of random trials
        #[arg(long)]
        element: Option<String>,
        polynomial: String,
    },
    /// Express a polynomial exactly in the generating invariants
    Express {
        #[command(flatten)]
        spec: SpecArgs,
        /// Cap on the degree of candidate generator products
        #[arg(long, default_value_t = 16)]
        degree_bound: u64,
        polynomial: String,
    },
    /// Decide R-linear splitting in characteristic p
    SplitCheck {
        /// Which inclusion to classify
        #[arg(long, value_enum)]
        case: SplitCaseArg,
        /// The characteristic (a prime)
        #[arg(long)]
        p: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        n: u64,
    },
    /// Run the factorial/integration identity checks
    IdentitySuite {
        /// Parameter bound for each identity family
        #[arg(long, default_value_t = 8)]
        bound: u64,
    },
    /// Re-run a block of reference checks and report PASS/FAIL per item
    Reproduce {
        /// Block to run
        #[arg(value_enum)]
        selector: ReproduceArg,
        /// Tuple budget for the conjecture sweep
        #[arg(long, default_value_t = 4)]
        budget: u64,
        /// Parameter bound for the identity suite
        #[arg(long, default_value_t = 8)]
        bound: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IntegrateGroup {
    Su2,
    Unitary,
}

#[derive(Clone, Copy, ValueEnum)]
enum SplitCaseArg {
    GlXy,
    SlMinors,
    OGram,
    SpPfaff,
}

impl From<SplitCaseArg> for SplitCase {
    fn from(c: SplitCaseArg) -> SplitCase {
        match c {
            SplitCaseArg::GlXy => SplitCase::GlXy,
            SplitCaseArg::SlMinors => SplitCase::SlMinors,
            SplitCaseArg::OGram => SplitCase::OGram,
            SplitCaseArg::SpPfaff => SplitCase::SpPfaff,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproduceArg {
    Sl2ClosedForms,
    Sl2Kernel,
    WorkedExamples,
    Conjectures,
    OperatorLaws,
    HaarConsistency,
    GeneratorMembership,
    Identities,
    SplitGrid,
    DenominatorPrimes,
    All,
}

use reynolds_core::numutil::format_rat as rat_string;

fn cmd_apply(
    spec: &SpecArgs,
    strategy: Option<StrategyArg>,
    json: bool,
    text: &str,
) -> Result<(), Failure> {
    let spec = spec.to_spec()?;
    let f = parse_polynomial(text)?;
    let strategy = match strategy {
        Some(StrategyArg::General) => Strategy::General,
        Some(StrategyArg::Closed) => Strategy::ClosedForm,
        Some(StrategyArg::Auto) => Strategy::Auto,
        None => {
            if spec.group == Group::Sl {
                Strategy::Auto
            } else {
                Strategy::General
            }
        }
    };
    let req = ReynoldsRequest { spec, strategy };
    let image = reynolds_core::reynolds::apply(&req, &f)?;
    if json {
        let alias = image.is_y_polynomial(2);
        let terms: Vec<serde_json::Value> = image
            .terms()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(m, c)| {
                serde_json::json!([
                    MonomialDisplay { monomial: m, alias }.to_string(),
                    rat_string(c)
                ])
            })
            .collect();
        println!("{}", serde_json::json!({ "terms": terms }));
    } else {
        println!("{image}");
    }
    Ok(())
}

fn cmd_integrate(group: IntegrateGroup, t: u64, text: &str) -> Result<(), Failure> {
    let p = parse_polynomial(text)?;
    let Some(monomial) = p.as_monomial() else {
        return Err(Failure::new(
            EXIT_PARSE,
            "expected a single monomial with coefficient 1",
        ));
    };
    let value = match group {
        IntegrateGroup::Su2 => {
            for v in monomial.variables() {
                if v.kind != VarKind::U || v.row > 2 || v.col > 2 {
                    return Err(Failure::new(
                        EXIT_UNSUPPORTED,
                        format!("SU(2) integrand must use u[1..2][1..2] only, found {v}"),
                    ));
                }
            }
            use reynolds_core::polyring::Variable;
            haar::su2_monomial_integral(
                monomial.exponent(Variable::u(1, 1)) as u64,
                monomial.exponent(Variable::u(1, 2)) as u64,
                monomial.exponent(Variable::u(2, 1)) as u64,
                monomial.exponent(Variable::u(2, 2)) as u64,
            )
        }
        IntegrateGroup::Unitary => {
            let i = monomial.filter_kind(VarKind::U);
            let j = monomial.filter_kind(VarKind::UBar);
            if i.mul(&j) != *monomial {
                return Err(Failure::new(
                    EXIT_UNSUPPORTED,
                    "unitary integrand must use u/ubar variables only",
                ));
            }
            haar::unitary_monomial_integral(t, &i, &j)?
        }
    };
    println!("{}", rat_string(&value));
    Ok(())
}

fn cmd_generators(spec: &SpecArgs) -> Result<(), Failure> {
    let spec = spec.to_spec()?;
    let set = invariants::generators(&spec)?;
    if set.generators.is_empty() {
        println!("(no generators: the invariant ring is the scalars)");
    }
    for g in &set.generators {
        println!("{} = {}", g.name, g.value);
    }
    Ok(())
}

fn parse_matrix(text: &str, t: u16) -> Result<RationalMatrix, Failure> {
    let entries: Vec<Rat> = text
        .split(',')
        .map(|s| {
            let s = s.trim();
            let p = parse_polynomial(s)?;
            if p.is_zero() {
                return Ok(reynolds_core::numutil::rat_int(0));
            }
            let constant = match p.terms().next() {
                Some((m, c)) if m.is_one() && p.num_terms() == 1 => Some(c.clone()),
                _ => None,
            };
            constant
                .ok_or_else(|| Failure::new(EXIT_PARSE, format!("'{s}' is not a rational number")))
        })
        .collect::<Result<_, Failure>>()?;
    let n = t as usize;
    if entries.len() != n * n {
        return Err(Failure::new(
            EXIT_PARSE,
            format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            ),
        ));
    }
    let rows: Vec<Vec<Rat>> = entries.chunks(n).map(|c| c.to_vec()).collect();
    Ok(RationalMatrix::from_rows(rows))
}

fn cmd_check(
    spec: &SpecArgs,
    trials: usize,
    seed: u64,
    element: Option<&str>,
    text: &str,
) -> Result<(), Failure> {
    let spec = spec.to_spec()?;
    let p = parse_polynomial(text)?;
    if let Some(element) = element {
        let m = parse_matrix(element, spec.t)?;
        let moved = reynolds_core::actions::act(&m, &p, &spec)?;
        if moved == p {
            println!("FIXED by the given element");
        } else {
            println!("MOVED by the given element:");
            print!("{m}");
        }
        return Ok(());
    }
    match invariants::is_invariant(&p, &spec, trials, seed)? {
        InvarianceVerdict::InvariantLikely => {
            println!("INVARIANT_LIKELY ({trials} trials, seed {seed})");
        }
        InvarianceVerdict::NotInvariant(witness) => {
            println!("NOT_INVARIANT, witness:");
            print!("{witness}");
        }
    }
    Ok(())
}

fn cmd_express(spec: &SpecArgs, degree_bound: u64, text: &str) -> Result<(), Failure> {
    let spec = spec.to_spec()?;
    let p = parse_polynomial(text)?;
    let set = invariants::generators(&spec)?;
    match invariants::express_in_generators(&p, &set, degree_bound) {
        Ok(ExpressOutcome::InSpan(expr)) => {
            println!("{expr}");
            Ok(())
        }
        Ok(ExpressOutcome::NotInSpan) => {
            println!("NOT_IN_SPAN");
            Ok(())
        }
        Err(e) => Err(Failure::new(EXIT_UNSUPPORTED, e.to_string())),
    }
}

fn cmd_split_check(case: SplitCaseArg, p: u64, t: u64, m: u64, n: u64) -> Result<(), Failure> {
    let query = SplitQuery {
        case: case.into(),
        p,
        m,
        n,
        t,
    };
    let verdict = splitcrit::splits_r_linearly(&query)
        .map_err(|e| Failure::new(EXIT_UNSUPPORTED, e.to_string()))?;
    if verdict.splits {
        println!("SPLITS ({})", verdict.clause);
    } else {
        println!("DOES_NOT_SPLIT ({})", verdict.clause);
    }
    Ok(())
}

fn cmd_identity_suite(bound: u64) -> Result<(), Failure> {
    let checks: Vec<(&str, bool)> = vec![
        (
            "beta values (symmetry and spot checks)",
            (0..=bound).all(|a| {
                (0..=bound).all(|b| identities::beta_value(a, b) == identities::beta_value(b, a))
            }),
        ),
        (
            "multinomial resummation of (x+y)^n/(n+1)",
            (0..=bound).all(identities::check_b2),
        ),
        (
            "alternating binomial sum equals beta",
            (0..=bound).all(|m| (0..=bound).all(|n| identities::check_b3(m, n))),
        ),
        (
            "trigonometric reduction endpoint",
            (0..=bound).all(|a| (0..=bound).all(|b| identities::check_b4_reduction(a, b))),
        ),
        (
            "SU(2) integral consistency",
            identities::check_b5_consistency(bound),
        ),
    ];
    let mut all = true;
    for (label, ok) in checks {
        println!("{} {label}", if ok { "PASS" } else { "FAIL" });
        all &= ok;
    }
    if all {
        Ok(())
    } else {
        Err(Failure::new(1, "identity suite failed"))
    }
}

fn cmd_reproduce(selector: ReproduceArg, budget: u64, bound: u64) -> Result<(), Failure> {
    let reports = match selector {
        ReproduceArg::Sl2ClosedForms => vec![suite::criterion_sl2_closed_forms()],
        ReproduceArg::Sl2Kernel => vec![suite::criterion_sl2_kernel()],
        ReproduceArg::WorkedExamples => vec![suite::criterion_worked_examples()],
        ReproduceArg::Conjectures => vec![suite::criterion_conjectures(budget)],
        ReproduceArg::OperatorLaws => vec![suite::criterion_operator_laws()],
        ReproduceArg::HaarConsistency => vec![suite::criterion_haar_consistency()],
        ReproduceArg::GeneratorMembership => vec![suite::criterion_generator_membership()],
        ReproduceArg::Identities => vec![suite::criterion_identities(bound)],
        ReproduceArg::SplitGrid => vec![suite::criterion_split_grid()],
        ReproduceArg::DenominatorPrimes => vec![suite::criterion_denominator_primes()],
        ReproduceArg::All => (1..=10).map(|i| suite::run_criterion(i).unwrap()).collect(),
    };
    let mut all = true;
    for report in &reports {
        for item in &report.items {
            println!(
                "{} {}",
                if item.passed { "PASS" } else { "FAIL" },
                item.label
            );
        }
        println!("{}", report.summary());
        all &= report.passed();
    }
    if all {
        Ok(())
    } else {
        Err(Failure::new(1, "reproduction failed"))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Apply {
            spec,
            strategy,
            json,
            polynomial,
        } => cmd_apply(&spec, strategy, json, &polynomial),
        Command::Integrate { group, t, monomial } => cmd_integrate(group, t, &monomial),
        Command::Generators { spec } => cmd_generators(&spec),
        Command::Check {
            spec,
            trials,
            seed,
            element,
            polynomial,
        } => cmd_check(&spec, trials, seed, element.as_deref(), &polynomial),
        Command::Express {
            spec,
            degree_bound,
            polynomial,
        } => cmd_express(&spec, degree_bound, &polynomial),
        Command::SplitCheck { case, p, t, m, n } => cmd_split_check(case, p, t, m, n),
        Command::IdentitySuite { bound } => cmd_identity_suite(bound),
        Command::Reproduce {
            selector,
            budget,
            bound,
        } => cmd_reproduce(selector, budget, bound),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(failure) = run(cli) {
        if !failure.message.is_empty() {
            eprintln!("error: {}", failure.message);
        }
        std::process::exit(failure.code);
    }
}
