mod output;
mod sweep;

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use g31_core::bounds::{asymptotic_targets, bound_for_regime};
use g31_core::constructions::{
    build_c1, build_c2, build_c2_for, build_c3, default_c2_parameter, ConstructionParams,
    DEFAULT_MAX_MATERIALIZE,
};
use g31_core::graph::setfile::{read_set, write_set};
use g31_core::independence::{
    alpha_reference, decompose_independent, format_alpha_table, is_independent,
    max_independent_set, parse_alpha_table, ALPHA_FIXTURE,
};
use g31_core::oracle::{
    enumerate_independent_sets, exact_min_edges_on, format_min_edges_table, SearchSide,
};
use g31_core::{
    make_params, AlphaMode, BuildOptions, ConstructionReport, Error, Result, VertexSet,
};

use output::{float, print_json};
use sweep::{LExpr, SweepPoint};

#[derive(Parser, Debug)]
#[command(
    name = "g31",
    version,
    about = "Edge counts in induced subgraphs of G(n,3,1)"
)]
struct Cli {
    /// Worker threads for parallel counting.
    #[arg(long, global = true, env = "G31_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size parameters of G(n,3,1).
    Params {
        #[arg(long)]
        n: u32,
    },
    /// Build an explicit sparse set and compare closed-form and direct counts.
    Construct(ConstructArgs),
    /// Lower bound and asymptotic target for r(l).
    Bounds(BoundsArgs),
    /// Exact searches for small n.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// CSV of constructions and bounds over a range of n.
    Sweep(SweepArgs),
    /// Split an independent set into type-1/2/3 blocks.
    Decompose {
        #[arg(long)]
        set: PathBuf,
        /// Ground set size; defaults to the largest label in the file.
        #[arg(long)]
        n: Option<u32>,
    },
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    regime: u8,
    #[arg(long)]
    n: u32,
    /// Target cardinality (required for regimes 1 and 3).
    #[arg(long)]
    l: Option<u64>,
    /// Regime 2 parameter in (0, 4); overrides --l.
    #[arg(long)]
    c: Option<f64>,
    /// Write the built set to this file.
    #[arg(long)]
    emit_set: Option<PathBuf>,
    /// Recount edges pairwise and require agreement with the closed form.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_MATERIALIZE)]
    max_materialize: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlphaArg {
    Exact,
    Asymptotic,
}

impl From<AlphaArg> for AlphaMode {
    fn from(a: AlphaArg) -> Self {
        match a {
            AlphaArg::Exact => AlphaMode::Exact,
            AlphaArg::Asymptotic => AlphaMode::Asymptotic,
        }
    }
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    l: u64,
    /// Defaults to exact when α_n is cached, asymptotic (α = n) otherwise.
    #[arg(long, value_enum)]
    alpha_mode: Option<AlphaArg>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    regime: u8,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Auto,
    Direct,
    Complement,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Exact r(l) with its colex-smallest witness.
    MinEdges {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u64,
        #[arg(long, default_value_t = 300.0)]
        budget_secs: f64,
        #[arg(long, value_enum, default_value = "auto")]
        side: SideArg,
    },
    /// Exact α_n for 3 ≤ n ≤ n-max, optionally written as a fixture.
    Alpha {
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        /// Write the table here as `n<TAB>alpha` rows.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value_t = 60.0)]
        budget_secs: f64,
    },
    /// r(l) for every l, written as `n<TAB>l<TAB>min_edges` rows.
    Table {
        #[arg(long = "n", required = true, num_args = 1.., value_delimiter = ',')]
        ns: Vec<u32>,
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value_t = 300.0)]
        budget_secs: f64,
    },
    /// All maximal independent sets of at least min-size vertices.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        min_size: usize,
    },
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    regime: u8,
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "n_geom",
        required_unless_present = "n_geom"
    )]
    n_list: Vec<u32>,
    /// Geometric schedule START:STOP:FACTOR.
    #[arg(long)]
    n_geom: Option<String>,
    /// l as a function of n: "n^1.5", "c*n^2" or "c*n^3".
    #[arg(long)]
    l_expr: Option<LExpr>,
    /// Regime 2 parameter; used instead of --l-expr.
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, value_enum, default_value = "asymptotic")]
    alpha_mode: AlphaArg,
    #[arg(long, default_value_t = DEFAULT_MAX_MATERIALIZE)]
    max_materialize: u64,
    /// Closed forms only; never build sets.
    #[arg(long)]
    formula_only: bool,
}

fn budget(secs: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(secs)
        .map_err(|_| Error::InvalidParameter(format!("bad budget {secs}")))
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn run_params(n: u32) -> Result<()> {
    let p = make_params(n)?;
    print_json(json!({
        "n": p.n,
        "vertices": p.vertex_count,
        "degree": p.degree,
        "edges": p.total_edges,
    }))?;
    Ok(())
}

fn construct(a: &ConstructArgs, opts: BuildOptions) -> Result<ConstructionReport> {
    let need_l = || {
        a.l.ok_or_else(|| usage(format!("regime {} needs --l", a.regime)))
    };
    match a.regime {
        1 => build_c1(a.n, need_l()?, opts),
        2 => match (a.c, a.l) {
            (Some(c), _) => build_c2(a.n, c, opts),
            (None, Some(l)) => build_c2_for(a.n, l, opts),
            (None, None) => build_c2(a.n, default_c2_parameter(a.n), opts),
        },
        _ => build_c3(a.n, need_l()?, opts),
    }
}

fn run_construct(a: &ConstructArgs) -> Result<()> {
    let opts = BuildOptions {
        materialize: true,
        max_materialize: a.max_materialize,
    };
    let report = construct(a, opts)?;
    if (a.verify || a.emit_set.is_some()) && !report.is_materialized() {
        return Err(usage(format!(
            "set of {} vertices is above --max-materialize {}; cannot verify or emit",
            report.size_predicted, a.max_materialize
        )));
    }
    if a.verify {
        report.verify_pairwise()?;
    }
    if let (Some(path), Some(set)) = (&a.emit_set, &report.set) {
        write_set(BufWriter::new(File::create(path)?), set)?;
    }
    let mut out = json!({
        "regime": report.regime,
        "n": report.n,
        "l": report.l,
        "params": serde_json::to_value(&report.params).expect("params serialize"),
        "size_predicted": report.size_predicted,
        "size_actual": report.size_actual,
        "edges_formula": report.edges_predicted,
        "edges_actual": report.edges_actual,
        "target": float(report.target),
        "target_ratio": report.target_ratio.map(float),
    });
    if let ConstructionParams::C3(_) = report.params {
        out["pieces_predicted"] = serde_json::to_value(report.pieces_predicted).expect("tally");
        out["pieces_actual"] = serde_json::to_value(report.pieces_actual).expect("tally");
    }
    if a.verify {
        out["verified"] = json!(true);
    }
    print_json(out)?;
    Ok(())
}

fn run_bounds(a: &BoundsArgs) -> Result<()> {
    let params = make_params(a.n)?;
    let mode = match a.alpha_mode {
        Some(m) => m.into(),
        None if g31_core::independence::exact_alpha(a.n).is_some() => AlphaMode::Exact,
        None => AlphaMode::Asymptotic,
    };
    let alpha = alpha_reference(a.n, mode)?;
    let report = bound_for_regime(&params, a.l, a.regime, alpha)?;
    let targets = asymptotic_targets(a.n, a.l)?;
    let mut out = json!({"regime": a.regime});
    let fields = serde_json::to_value(&report).expect("report serializes");
    for (k, v) in fields.as_object().expect("struct").iter() {
        out[k] = v.clone();
    }
    out["targets"] = serde_json::to_value(targets).expect("targets serialize");
    print_json(out)?;
    Ok(())
}

fn witness(set: &VertexSet) -> Value {
    json!(set.iter().map(|v| v.elems()).collect::<Vec<_>>())
}

fn status(exact: bool) -> &'static str {
    if exact {
        "exact"
    } else {
        "budget-exceeded"
    }
}

fn run_oracle(cmd: &OracleCommand) -> Result<()> {
    match cmd {
        OracleCommand::MinEdges {
            n,
            l,
            budget_secs,
            side,
        } => {
            let params = make_params(*n)?;
            let side = match side {
                SideArg::Auto => SearchSide::Auto,
                SideArg::Direct => SearchSide::Direct,
                SideArg::Complement => SearchSide::Complement,
            };
            let r = exact_min_edges_on(&params, *l, budget(*budget_secs)?, side)?;
            print_json(json!({
                "n": n,
                "l": l,
                "value": r.value,
                "status": status(r.is_exact()),
                "nodes_explored": r.nodes_explored,
                "witness": witness(&r.witness),
            }))?;
        }
        OracleCommand::Alpha {
            n_max,
            fixture,
            budget_secs,
        } => {
            let bundled = parse_alpha_table(ALPHA_FIXTURE)?;
            let mut table = std::collections::BTreeMap::new();
            let mut rows = Vec::new();
            let mut all_match = true;
            for n in 3..=*n_max {
                let r = max_independent_set(&make_params(n)?, budget(*budget_secs)?)?;
                if r.is_exact() {
                    table.insert(n, r.value);
                }
                let cached = bundled.get(&n).copied();
                all_match &= cached.is_none_or(|c| r.is_exact() && c == r.value);
                rows.push(json!({
                    "n": n,
                    "alpha": r.value,
                    "status": status(r.is_exact()),
                    "cached": cached,
                    "witness": witness(&r.witness),
                }));
            }
            if let Some(path) = fixture {
                std::fs::write(path, format_alpha_table(&table))?;
            }
            print_json(json!({"rows": rows, "matches_cached": all_match}))?;
        }
        OracleCommand::Table {
            ns,
            fixture,
            budget_secs,
        } => {
            let mut table = std::collections::BTreeMap::new();
            for &n in ns {
                let params = make_params(n)?;
                for l in 0..=params.vertex_count as u64 {
                    let r =
                        exact_min_edges_on(&params, l, budget(*budget_secs)?, SearchSide::Auto)?;
                    if !r.is_exact() {
                        return Err(usage(format!("budget exceeded at n = {n}, l = {l}")));
                    }
                    table.insert((n, l), r.value);
                }
            }
            let text = format_min_edges_table(&table);
            match fixture {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
        OracleCommand::Enumerate { n, min_size } => {
            let params = make_params(*n)?;
            let sets = enumerate_independent_sets(&params, *min_size)?;
            print_json(json!({
                "n": n,
                "min_size": min_size,
                "count": sets.len(),
                "sets": sets.iter().map(witness).collect::<Vec<_>>(),
            }))?;
        }
    }
    Ok(())
}

fn run_sweep(a: &SweepArgs) -> Result<()> {
    let ns = match &a.n_geom {
        Some(schedule) => sweep::geometric(schedule).map_err(usage)?,
        None => a.n_list.clone(),
    };
    if a.regime != 2 && a.l_expr.is_none() {
        return Err(usage(format!("regime {} sweep needs --l-expr", a.regime)));
    }
    let opts = BuildOptions {
        materialize: !a.formula_only,
        max_materialize: a.max_materialize,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{}", sweep::HEADER)?;
    for n in ns {
        let l = match &a.l_expr {
            Some(e) if a.c.is_none() => Some(e.eval(n)?),
            _ => None,
        };
        let alpha = alpha_reference(n, a.alpha_mode.into())?;
        let point = SweepPoint {
            regime: a.regime,
            n,
            l,
            c: a.c,
        };
        let row = sweep::row(&point, alpha, opts, &mut |w| eprintln!("warning: {w}"))?;
        writeln!(out, "{}", row.to_csv())?;
    }
    out.flush()?;
    Ok(())
}

fn run_decompose(path: &PathBuf, n: Option<u32>) -> Result<()> {
    let set = read_set(BufReader::new(File::open(path)?), n)?;
    if !is_independent(&set) {
        return Err(Error::NotIndependent);
    }
    let d = decompose_independent(&set)?;
    d.verify(&set)?;
    let mut out = serde_json::to_value(&d).expect("decomposition serializes");
    out["verified"] = json!(true);
    print_json(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| usage(format!("thread pool: {e}")))?;
    }
    match &cli.command {
        Command::Params { n } => run_params(*n),
        Command::Construct(a) => run_construct(a),
        Command::Bounds(a) => run_bounds(a),
        Command::Oracle(cmd) => run_oracle(cmd),
        Command::Sweep(a) => run_sweep(a),
        Command::Decompose { set, n } => run_decompose(set, *n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvariantViolation(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
