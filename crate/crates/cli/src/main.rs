//! Command-line front end: trace evaluation, network and tableau
//! enumeration, chromatic expansions, and the verification suites.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hecke_traces::chromatic::{
    self, chromatic_coeff, chromatic_coeff_tableaux, expansion, SymBasis,
};
use hecke_traces::network::{enumerate_networks, is_descending_star, network_of};
use hecke_traces::partition::IntPartition;
use hecke_traces::perm::Permutation;
use hecke_traces::poset::Poset;
use hecke_traces::tableau::{self, PathTableau, TabProperty};
use hecke_traces::traces::{classical_oracle, evaluate, EvalReport, PsiMethod};
use hecke_traces::transition::TraceFamily;
use hecke_traces::verify::{run_suite, Suite, SuiteReport};
use hecke_traces::Error;

#[derive(Parser)]
#[command(
    name = "hecke-traces",
    about = "Exact Hecke algebra trace evaluations at Kazhdan-Lusztig basis elements"
)]
struct Cli {
    /// Largest permutation/network order any command will accept.
    #[arg(long, global = true, default_value_t = 9, env = "HECKE_TRACES_MAX_ORDER")]
    max_order: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Worker threads for fanned verification runs (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    parallelism: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one trace at one modified Kazhdan-Lusztig basis element.
    Eval(EvalArgs),
    /// Evaluate all five families at every partition of n for one w.
    Table(TableArgs),
    /// List the zig-zag networks of one order.
    Networks(NetworksArgs),
    /// Enumerate path tableaux of one class.
    Tableaux(TableauxArgs),
    /// Chromatic quasisymmetric function coefficients and expansions.
    Chromatic(ChromaticArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Trace family: eta, epsilon, chi, psi, phi.
    #[arg(long)]
    trace: String,
    /// Permutation in one-line notation (digits for n <= 9, commas beyond,
    /// or e(n) for the identity).
    #[arg(long)]
    w: String,
    /// Partition of n, comma-separated.
    #[arg(long)]
    lambda: String,
    /// psi formula: record-free, right-anchored, O-formula, cylindrical,
    /// left-anchored-cylindrical.
    #[arg(long)]
    method: Option<String>,
    /// Include per-power tableau counts when the formula is a direct sum.
    #[arg(long)]
    witnesses: bool,
    /// Append the classical q=1 oracle comparison.
    #[arg(long)]
    q1_check: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    w: String,
}

#[derive(Args)]
struct NetworksArgs {
    #[arg(long)]
    n: usize,
    /// Keep only descending star networks (312-avoiding permutations).
    #[arg(long)]
    descending_only: bool,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long)]
    w: String,
    /// Shape, comma-separated parts.
    #[arg(long)]
    shape: String,
    /// Comma-separated property names (see README for the catalog).
    #[arg(long, default_value = "")]
    props: String,
    /// Restrict to the type-e family.
    #[arg(long)]
    type_e: bool,
}

#[derive(Args)]
struct ChromaticArgs {
    /// Poset literal {"n":4,"relations":[[1,4]]}.
    #[arg(long, conflicts_with = "from_w")]
    poset: Option<String>,
    /// Use the path poset of F_w.
    #[arg(long)]
    from_w: Option<String>,
    /// Single coefficient at this partition (both computation routes).
    #[arg(long)]
    lambda: Option<String>,
    /// Expansion basis: m, e, s, p, f.
    #[arg(long)]
    basis: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long)]
    suite: String,
    /// Order bound.
    #[arg(long, default_value_t = 5)]
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct PosetSpec {
    n: usize,
    relations: Vec<(usize, usize)>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) | Error::InexactDivision => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Eval(args) => cmd_eval(cli, args),
        Command::Table(args) => cmd_table(cli, args),
        Command::Networks(args) => cmd_networks(cli, args),
        Command::Tableaux(args) => cmd_tableaux(cli, args),
        Command::Chromatic(args) => cmd_chromatic(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
    }
}

fn parse_w(cli: &Cli, s: &str) -> Result<Permutation, Error> {
    let w = Permutation::parse(s)?;
    if w.n() > cli.max_order {
        return Err(Error::OrderBound {
            n: w.n(),
            max: cli.max_order,
        });
    }
    Ok(w)
}

fn cmd_eval(cli: &Cli, args: &EvalArgs) -> Result<ExitCode, Error> {
    let family = TraceFamily::parse(&args.trace)?;
    let w = parse_w(cli, &args.w)?;
    let lambda = IntPartition::parse(&args.lambda)?;
    let method = args.method.as_deref().map(PsiMethod::parse).transpose()?;
    let mut report = evaluate(&w, family, &lambda, method)?;
    if !args.witnesses {
        report.witnesses = None;
    }
    let q1 = if args.q1_check {
        let oracle = classical_oracle(&w, family, &lambda)?;
        let value: i64 = report.coeffs.iter().sum();
        Some((value, oracle))
    } else {
        None
    };
    match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                report: &'a EvalReport,
                #[serde(skip_serializing_if = "Option::is_none")]
                q1_check: Option<Q1Check>,
            }
            #[derive(Serialize)]
            struct Q1Check {
                value_at_one: i64,
                classical_oracle: i64,
                agree: bool,
            }
            let out = Out {
                report: &report,
                q1_check: q1.map(|(v, o)| Q1Check {
                    value_at_one: v,
                    classical_oracle: o,
                    agree: v == o,
                }),
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Tsv => {
            println!(
                "family\tlambda\tw\tmethod\tcoeffs\tdisplay\tsymmetric\tunimodal\tnonnegative"
            );
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                report.family.name(),
                join(&report.lambda),
                report.w,
                report.method,
                join(&report.coeffs),
                report.display,
                report.symmetric,
                report.unimodal,
                report.nonnegative
            );
            if let Some((v, o)) = q1 {
                println!("q1-check\t{v}\t{o}\t{}", v == o);
            }
        }
        Format::Pretty => {
            println!(
                "{}_q^({}) at q^(l/2) C'_{}(q) [{}]",
                report.family.name(),
                join(&report.lambda),
                report.w,
                report.method
            );
            println!("  coeffs    [{}]", join(&report.coeffs));
            println!("  value     {}", report.display);
            println!(
                "  symmetric {}   unimodal {}   nonnegative {}",
                report.symmetric, report.unimodal, report.nonnegative
            );
            if let Some(wit) = &report.witnesses {
                println!("  witnesses [{}]", join(wit));
            }
            if let Some((v, o)) = q1 {
                println!(
                    "  q=1 check: value {v}, classical oracle {o} -> {}",
                    if v == o { "agree" } else { "MISMATCH" }
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(cli: &Cli, args: &TableArgs) -> Result<ExitCode, Error> {
    let w = parse_w(cli, &args.w)?;
    let mut reports: Vec<EvalReport> = Vec::new();
    for family in TraceFamily::ALL {
        for la in IntPartition::all(w.n()) {
            reports.push(evaluate(&w, family, &la, None)?);
        }
    }
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).unwrap()),
        Format::Tsv | Format::Pretty => {
            println!("family\tlambda\tcoeffs\tvalue\tsymmetric\tunimodal");
            for r in &reports {
                println!(
                    "{}\t({})\t[{}]\t{}\t{}\t{}",
                    r.family.name(),
                    join(&r.lambda),
                    join(&r.coeffs),
                    r.display,
                    r.symmetric,
                    r.unimodal
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_networks(cli: &Cli, args: &NetworksArgs) -> Result<ExitCode, Error> {
    let nets = enumerate_networks(args.n, args.descending_only, cli.max_order)?;
    #[derive(Serialize)]
    struct Row {
        w: String,
        concatenation: String,
        descending: bool,
        components: Vec<usize>,
        o_polynomial: Vec<i64>,
    }
    let rows: Vec<Row> = nets
        .iter()
        .map(|(w, net)| Row {
            w: w.to_string(),
            concatenation: net.concat().to_literal(),
            descending: is_descending_star(net),
            components: net.component_sizes().parts().to_vec(),
            o_polynomial: net.o_polynomial().coeffs().to_vec(),
        })
        .collect();
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
        Format::Tsv | Format::Pretty => {
            println!("w\tconcatenation\tdescending\tcomponents\to_polynomial");
            for r in &rows {
                println!(
                    "{}\t{}\t{}\t({})\t[{}]",
                    r.w,
                    r.concatenation,
                    r.descending,
                    join(&r.components),
                    join(&r.o_polynomial)
                );
            }
            println!("# {} networks", rows.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn render_rows(t: &PathTableau) -> String {
    t.rows
        .iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .map(|c| format!("({},{})", c.src, c.snk))
                .collect();
            format!("[{}]", cells.join(""))
        })
        .collect::<Vec<_>>()
        .join("")
}

fn cmd_tableaux(cli: &Cli, args: &TableauxArgs) -> Result<ExitCode, Error> {
    let w = parse_w(cli, &args.w)?;
    let shape = IntPartition::parse(&args.shape)?;
    let props: Vec<TabProperty> = args
        .props
        .split(',')
        .filter(|s| !s.is_empty())
        .map(TabProperty::parse)
        .collect::<Result<_, _>>()?;
    let net = network_of(&w)?;
    let type_constraint = args.type_e.then(|| Permutation::identity(w.n()));
    let tabs = tableau::enumerate(&net, &shape, &props, type_constraint.as_ref())?;
    #[derive(Serialize)]
    struct Row<'a> {
        #[serde(flatten)]
        tableau: &'a PathTableau,
        inv: usize,
        rinv: usize,
        inv_row_concat: usize,
        rinv_row_concat: usize,
    }
    let rows: Vec<Row> = tabs
        .iter()
        .map(|t| Row {
            tableau: t,
            inv: tableau::inv_tableau(&net, t),
            rinv: tableau::rinv_tableau(&net, t),
            inv_row_concat: tableau::inv_word(&net, &t.concat_rows()),
            rinv_row_concat: tableau::rinv_word(&net, &t.concat_rows()),
        })
        .collect();
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
        Format::Tsv | Format::Pretty => {
            println!("cells\tinv\trinv\tinv_row_concat\trinv_row_concat");
            for (t, r) in tabs.iter().zip(rows.iter()) {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    render_rows(t),
                    r.inv,
                    r.rinv,
                    r.inv_row_concat,
                    r.rinv_row_concat
                );
            }
            println!("# {} tableaux", tabs.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_chromatic(cli: &Cli, args: &ChromaticArgs) -> Result<ExitCode, Error> {
    let poset: Poset = if let Some(js) = &args.poset {
        let spec: PosetSpec =
            serde_json::from_str(js).map_err(|e| Error::Parse(format!("bad poset JSON: {e}")))?;
        Poset::from_relations(spec.n, &spec.relations)?
    } else if let Some(ws) = &args.from_w {
        let w = parse_w(cli, ws)?;
        network_of(&w)?.path_poset()
    } else {
        return Err(Error::Parse("need --poset or --from-w".into()));
    };
    if poset.n() > cli.max_order {
        return Err(Error::OrderBound {
            n: poset.n(),
            max: cli.max_order,
        });
    }

    if let Some(ls) = &args.lambda {
        let la = IntPartition::parse(ls)?;
        let coloring = chromatic_coeff(&poset, &la)?;
        let tabs = chromatic_coeff_tableaux(&poset, &la)?;
        let stanley = chromatic::stanley_chain_count(&poset, &la);
        match cli.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Out {
                    lambda: Vec<usize>,
                    coeffs: Vec<i64>,
                    display: String,
                    tableau_route_agrees: bool,
                    stanley_q1: i64,
                }
                let out = Out {
                    lambda: la.parts().to_vec(),
                    coeffs: coloring.coeffs().to_vec(),
                    display: coloring.display_string(),
                    tableau_route_agrees: coloring == tabs,
                    stanley_q1: stanley,
                };
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
            Format::Tsv | Format::Pretty => {
                println!("lambda\tcoeffs\tvalue\ttableau_route_agrees\tstanley_q1");
                println!(
                    "({})\t[{}]\t{}\t{}\t{}",
                    join(la.parts()),
                    join(coloring.coeffs()),
                    coloring.display_string(),
                    coloring == tabs,
                    stanley
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let basis = match &args.basis {
        Some(b) => SymBasis::parse(b)?,
        None => SymBasis::M,
    };
    let exp = expansion(&poset, basis)?;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&exp).unwrap()),
        Format::Tsv | Format::Pretty => {
            println!("basis\tlambda\tcoeffs\tvalue");
            for (parts, poly) in &exp.coeffs {
                println!(
                    "{}\t({})\t[{}]\t{}",
                    exp.basis.name(),
                    join(parts),
                    join(poly.coeffs()),
                    poly.display_string()
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode, Error> {
    if args.n > cli.max_order {
        return Err(Error::OrderBound {
            n: args.n,
            max: cli.max_order,
        });
    }
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(&args.suite)?]
    };
    let reports: Vec<SuiteReport> = if suites.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.parallelism)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        use rayon::prelude::*;
        pool.install(|| {
            suites
                .par_iter()
                .map(|&s| run_suite(s, args.n))
                .collect::<Result<Vec<_>, _>>()
        })?
    } else {
        vec![run_suite(suites[0], args.n)?]
    };

    let mut all_passed = true;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).unwrap()),
        Format::Tsv | Format::Pretty => {
            for r in &reports {
                let status = if r.passed() { "pass" } else { "FAIL" };
                println!(
                    "{}\tn<={}\t{} checks\t{}",
                    r.suite, r.max_order, r.checks, status
                );
                for f in &r.failures {
                    println!("  counterexample: {f}");
                }
                for note in &r.notes {
                    println!("  note: {note}");
                }
            }
        }
    }
    for r in &reports {
        all_passed &= r.passed();
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
