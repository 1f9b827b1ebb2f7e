use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use oidom::families::{self, Family, FamilySpec, Fixture};
use oidom::graph::{parse_edge_list, read_graphs, to_edge_list, to_graph6, MAX_VERTICES};
use oidom::reductions::{reduce, verify_reduction, ReductionKind, VerificationStatus};
use oidom::solvers::{find_violation, solve, ParamKind, ParamResult, SetViolation};
use oidom::verifier::{sweep, EnumerationMode, Source, SweepOptions, TheoremId, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
use oidom::{Graph, VertexSet};

/// Largest input the exact solvers accept unless `OIDOM_MAX_N` says otherwise.
const DEFAULT_SOLVER_GUARD: usize = 48;

#[derive(Parser)]
#[command(
    name = "oidom",
    version,
    about = "Outer-independent domination parameters of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a parameter with an optimal certificate.
    Compute {
        #[arg(long, value_parser = parse_param)]
        param: ParamKind,
        #[command(flatten)]
        input: Input,
        /// Print a JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Check whether a vertex set is feasible for a parameter.
    ValidateSet {
        #[arg(long, value_parser = parse_param)]
        param: ParamKind,
        /// Comma-separated 0-indexed vertices, e.g. "0,3,5".
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[command(flatten)]
        input: Input,
    },
    /// Build a family member or a named graph.
    Generate(GenerateArgs),
    /// Test membership in an extremal family.
    Recognize {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        input: Input,
    },
    /// Build the hardness gadget of a graph.
    Reduce {
        #[arg(long)]
        kind: ReductionKind,
        #[command(flatten)]
        input: Input,
        /// Solve both sides and check the size identity.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        out_format: Format,
    },
    /// Check every registered bound on all small graphs.
    Sweep(SweepArgs),
    /// List or write the built-in example graphs.
    Fixtures {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<Fixture>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file; graph6 or edge list.
    #[arg(long)]
    input: PathBuf,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edgelist,
}

#[derive(Args)]
struct GenerateArgs {
    /// lambda, phi, psi, omega, gcal, theta, h, grid or classic:NAME.
    #[arg(long)]
    family: String,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Extra leaf counts for Ω, comma-separated.
    #[arg(long, value_delimiter = ',')]
    leaves: Vec<usize>,
    /// Clique vertex of a Θ member not joined to `u`.
    #[arg(long)]
    missing: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// `all` or a comma-separated list of theorem ids.
    #[arg(long, default_value = "all")]
    theorems: String,
    #[arg(long, default_value = "labeled", value_parser = parse_mode)]
    mode: EnumerationMode,
    /// graph6 file for `--mode file`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Allow order 8 in labeled and canonical mode.
    #[arg(long)]
    allow_n8: bool,
    /// Record wall time in the report. Makes the report nondeterministic.
    #[arg(long)]
    timing: bool,
}

fn parse_param(s: &str) -> Result<ParamKind, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<EnumerationMode, String> {
    s.parse()
}

/// Failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<ExitCode, UsageError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Compute { param, input, json } => compute(param, &input, json),
        Command::ValidateSet { param, set, input } => validate_set(param, &set, &input),
        Command::Generate(args) => generate(&args),
        Command::Recognize { family, input } => {
            let g = read_graph(&input)?;
            let member = families::recognize(&g, family)?;
            println!("{}", if member { "member" } else { "not a member" });
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce {
            kind,
            input,
            verify,
            out,
            out_format,
        } => reduce_cmd(kind, &input, verify, out, out_format),
        Command::Sweep(args) => sweep_cmd(&args),
        Command::Fixtures {
            list,
            emit,
            out,
            format,
        } => match (list, emit) {
            (_, Some(f)) => write_graph(&f.graph(), format, out.as_deref()),
            (true, None) => {
                for f in Fixture::ALL {
                    let g = f.graph();
                    println!("{}\tn={}\tm={}\t{}", f.name(), g.order(), g.size(), to_graph6(&g));
                }
                Ok(ExitCode::SUCCESS)
            }
            (false, None) => Err(UsageError("fixtures needs --list or --emit NAME".into())),
        },
    }
}

fn solver_guard() -> Result<usize, UsageError> {
    match std::env::var("OIDOM_MAX_N") {
        Ok(v) => v
            .parse::<usize>()
            .map(|n| n.min(MAX_VERTICES))
            .map_err(|_| UsageError(format!("OIDOM_MAX_N must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_SOLVER_GUARD),
    }
}

fn check_guard(g: &Graph) -> Result<(), UsageError> {
    let guard = solver_guard()?;
    if g.order() > guard {
        return Err(UsageError(format!(
            "graph has {} vertices; the exact solvers are limited to {guard} (raise with OIDOM_MAX_N at your own risk)",
            g.order()
        )));
    }
    Ok(())
}

fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
        Format::Edgelist
    } else {
        Format::G6
    }
}

fn read_graph(input: &Input) -> Result<Graph, UsageError> {
    let text = fs::read_to_string(&input.input).map_err(|e| UsageError(format!("{}: {e}", input.input.display())))?;
    let at = |e: String| UsageError(format!("{}: {e}", input.input.display()));
    match input.format.unwrap_or_else(|| detect_format(&text)) {
        Format::Edgelist => parse_edge_list(&text).map_err(|e| at(e.to_string())),
        Format::G6 => {
            let mut graphs = read_graphs(&text).map_err(|(line, e)| at(format!("line {line}: {e}")))?;
            match graphs.len() {
                1 => Ok(graphs.remove(0)),
                0 => Err(at("no graph found".into())),
                k => Err(at(format!("expected one graph, found {k}"))),
            }
        }
    }
}

fn write_graph(g: &Graph, format: Format, out: Option<&Path>) -> Outcome {
    let text = match format {
        Format::G6 => format!("{}\n", to_graph6(g)),
        Format::Edgelist => to_edge_list(g),
    };
    match out {
        Some(path) => fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn join(set: VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn undefined_reason(kind: ParamKind) -> &'static str {
    debug_assert!(kind.requires_no_isolated());
    "the graph has an isolated vertex"
}

fn compute(param: ParamKind, input: &Input, as_json: bool) -> Outcome {
    let g = read_graph(input)?;
    check_guard(&g)?;
    let result = solve(&g, param);
    if as_json {
        let body = match result {
            ParamResult::Defined { value, certificate } => json!({
                "param": param.cli_name(),
                "symbol": param.symbol(),
                "n": g.order(),
                "m": g.size(),
                "defined": true,
                "value": value,
                "certificate": certificate.to_vec(),
            }),
            ParamResult::Undefined => json!({
                "param": param.cli_name(),
                "symbol": param.symbol(),
                "n": g.order(),
                "m": g.size(),
                "defined": false,
                "reason": undefined_reason(param),
            }),
        };
        println!("{}", serde_json::to_string_pretty(&body)?);
    } else {
        match result {
            ParamResult::Defined { value, certificate } => {
                println!("{} = {value}", param.symbol());
                println!("certificate: {}", join(certificate));
            }
            ParamResult::Undefined => println!("{} undefined: {}", param.symbol(), undefined_reason(param)),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_set(text: &str, n: usize) -> Result<Result<VertexSet, SetViolation>, UsageError> {
    let mut set = VertexSet::EMPTY;
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| UsageError(format!("`{tok}` is not a vertex index")))?;
        if v >= n {
            return Ok(Err(SetViolation::VertexOutOfRange(v)));
        }
        set.insert(v);
    }
    Ok(Ok(set))
}

fn validate_set(param: ParamKind, set: &str, input: &Input) -> Outcome {
    let g = read_graph(input)?;
    let violation = match parse_set(set, g.order())? {
        Ok(s) => find_violation(&g, s, param),
        Err(v) => Some(v),
    };
    match violation {
        None => {
            println!("valid");
            Ok(ExitCode::SUCCESS)
        }
        Some(v) => {
            println!("invalid: {v}");
            Ok(ExitCode::from(1))
        }
    }
}

fn generate(args: &GenerateArgs) -> Outcome {
    let need =
        |v: Option<usize>, flag: &str| v.ok_or_else(|| UsageError(format!("--family {} needs --{flag}", args.family)));
    let seed = args.seed;
    let spec = match args.family.as_str() {
        "lambda" => FamilySpec::Lambda {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            c: need(args.c, "c")?,
        },
        "phi" => FamilySpec::Phi {
            n: need(args.n, "n")?,
            p: need(args.p, "p")?,
            seed,
            cross_edges: None,
        },
        "psi" => FamilySpec::Psi {
            n: need(args.n, "n")?,
            seed,
            cross_edges: None,
        },
        "omega" => FamilySpec::Omega {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            r: need(args.r, "r")?,
            p: need(args.p, "p")?,
            leaves: args.leaves.clone(),
            seed,
            attachments: None,
        },
        "gcal" => FamilySpec::Gcal {
            p: need(args.p, "p")?,
            q: need(args.q, "q")?,
            seed,
            pairs: None,
        },
        "theta" => FamilySpec::Theta {
            q: need(args.q, "q")?,
            missing: args.missing,
        },
        "h" => FamilySpec::H {
            k: need(args.k, "k")?,
            p: need(args.p, "p")?,
        },
        "grid" => FamilySpec::Grid { k: need(args.k, "k")? },
        other => match other.strip_prefix("classic:") {
            Some(name) => FamilySpec::Classic { name: name.to_string() },
            None => return Err(UsageError(format!("unknown family `{other}`"))),
        },
    };
    let g = families::generate(&spec)?;
    write_graph(&g, args.format, args.out.as_deref())
}

fn reduce_cmd(kind: ReductionKind, input: &Input, verify: bool, out: Option<PathBuf>, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let gadget = reduce(&g, kind)?;
    match out.as_deref() {
        Some(path) => {
            write_graph(&gadget, format, Some(path))?;
            println!("gadget: n = {}, m = {}", gadget.order(), gadget.size());
        }
        None if !verify => return write_graph(&gadget, format, None),
        None => {}
    }
    if !verify {
        return Ok(ExitCode::SUCCESS);
    }
    check_guard(&gadget)?;
    let report = verify_reduction(&g, kind)?;
    let symbol = kind.param().symbol();
    let shown = report
        .param_on_gadget
        .map_or_else(|| "?".to_string(), |v| v.to_string());
    println!(
        "{symbol}(G') = {shown}, 3n - alpha(G) = 3*{} - {} = {}: {}",
        report.n,
        report.alpha,
        report.expected,
        match report.status {
            VerificationStatus::Verified => "verified",
            VerificationStatus::Mismatch => "MISMATCH",
            VerificationStatus::Unverified => "unverified (search budget exhausted)",
        }
    );
    Ok(match report.status {
        VerificationStatus::Mismatch => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn env_order_cap() -> Result<Option<usize>, UsageError> {
    match std::env::var("OIDOM_MAX_N") {
        Ok(v) => v
            .parse::<usize>()
            .map(Some)
            .map_err(|_| UsageError(format!("OIDOM_MAX_N must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn sweep_cmd(args: &SweepArgs) -> Outcome {
    if args.n_min > args.n_max {
        return Err(UsageError(format!(
            "--n-min {} exceeds --n-max {}",
            args.n_min, args.n_max
        )));
    }
    let theorems: Vec<TheoremId> = if args.theorems.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        args.theorems
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()?
    };
    let mut max_order = DEFAULT_MAX_ORDER;
    if args.allow_n8 || env_order_cap()?.is_some_and(|n| n >= HARD_MAX_ORDER) {
        max_order = HARD_MAX_ORDER;
    }
    let source = Source {
        mode: args.mode,
        path: args.input.clone(),
        max_order,
    };
    if args.mode == EnumerationMode::File && source.path.is_none() {
        return Err(UsageError("--mode file needs --input FILE".into()));
    }
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let opts = SweepOptions {
        orders: args.n_min..=args.n_max,
        theorems,
        source,
        jobs,
        timing: args.timing,
    };
    let report = sweep(&opts)?;

    for t in &report.theorems {
        let status = if t.passed() { "ok" } else { "VIOLATED" };
        println!(
            "{:<24} {status:<8} checked {:>8}  applicable {:>8}  equality {:>6}  violations {}",
            t.id.name(),
            t.checked,
            t.applicable,
            t.equality_total,
            t.violations_total
        );
        for g6 in t.violations.iter().take(5) {
            println!("    {g6}");
        }
    }
    if let Some(path) = &args.report {
        fs::write(path, report.to_json() + "\n").map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
