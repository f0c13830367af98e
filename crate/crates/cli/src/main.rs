//! `alexpara`: catalog browsing, window export, law checks and exhaustive
//! enumeration from the command line.
//!
//! Exit codes: 0 when every outcome matches the catalog expectation, 1 on an
//! unexpected law failure, 2 on usage errors and unexpected inapplicable
//! results.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use alexpara::catalog::{catalog_build, catalog_list, CatalogEntry};
use alexpara::check::Status;
use alexpara::enumeration::{verify_discreteness_theorem, verify_topgroup_triviality, MAX_ORDER};
use alexpara::laws::{run_laws, LawConfig, LawId, LawOutcome};
use alexpara::oracle::{radius, SharedOracle, Window};
use alexpara::poset::FinitePoset;
use clap::{Parser, Subcommand, ValueEnum};

/// `print!`/`println!` that exit quietly once the reader has gone away.
macro_rules! out {
    (@write $w:ident, $($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = $w!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
    (line) => { out!(@write writeln,) };
    (line, $($arg:tt)*) => { out!(@write writeln, $($arg)*) };
    ($($arg:tt)*) => { out!(@write write, $($arg)*) };
}
use serde_json::json;

#[derive(Parser)]
#[command(name = "alexpara", version, about = "Alexandroff paratopological groups: windows, laws, enumeration")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = alexpara::sampling::DEFAULT_SEED)]
    seed: u64,
    /// Window depth; defaults to the example's own.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Ball depth for witness searches.
    #[arg(long, global = true, env = "ALEXPARA_BUDGET")]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List examples or show one.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Hasse diagram of a window as Graphviz DOT.
    Hasse {
        example: String,
        /// Parameters as key=value, e.g. k=2.
        #[arg(value_parser = parse_param)]
        params: Vec<(String, i64)>,
        #[arg(long, value_enum, default_value_t = Shape::Ball)]
        shape: Shape,
        /// DOT output (the default; accepted for clarity).
        #[arg(long)]
        dot: bool,
    },
    /// A window as a poset document with an oracle header.
    Window {
        example: String,
        #[arg(value_parser = parse_param)]
        params: Vec<(String, i64)>,
        #[arg(long, value_enum, default_value_t = Shape::Default)]
        shape: Shape,
    },
    /// Run laws against catalog examples.
    Check {
        /// `all` or a comma-separated list of law ids.
        #[arg(long, default_value = "all", value_parser = parse_laws)]
        law: LawSelection,
        /// Example name; every catalog example when omitted.
        #[arg(long)]
        example: Option<String>,
        #[arg(value_parser = parse_param)]
        params: Vec<(String, i64)>,
    },
    /// Exhaustive search for monotone orders on groups of order <= 6.
    Enumerate {
        #[arg(long, default_value_t = MAX_ORDER)]
        max_order: usize,
        /// Also require inversion to be monotone.
        #[arg(long)]
        topological: bool,
    },
    /// Order-theoretic and homotopy invariants of a window or a poset file.
    Invariants {
        example: Option<String>,
        #[arg(value_parser = parse_param)]
        params: Vec<(String, i64)>,
        /// Poset document (JSON) to analyse instead of an example window.
        #[arg(long, conflicts_with = "example")]
        poset: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Shape::Default)]
        shape: Shape,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(value_parser = parse_param)]
        params: Vec<(String, i64)>,
    },
}

/// Window shape: the generator ball, or the oracle's default (a box for
/// lattice-like examples).
#[derive(Clone, Copy, Debug, ValueEnum)]
enum Shape {
    Ball,
    Default,
}

#[derive(Clone, Debug)]
struct LawSelection(Vec<LawId>);

fn parse_laws(s: &str) -> Result<LawSelection, String> {
    if s == "all" {
        return Ok(LawSelection(LawId::ALL.to_vec()));
    }
    s.split(',').map(|id| id.trim().parse()).collect::<Result<_, _>>().map(LawSelection)
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    let v = v.parse().map_err(|e| format!("`{v}` is not an integer: {e}"))?;
    Ok((k.to_string(), v))
}

/// A failure that maps to an exit code.
struct Failure {
    code: u8,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Catalog { action: CatalogAction::List } => catalog_list_cmd(cli),
        Command::Catalog { action: CatalogAction::Show { name, params } } => catalog_show(cli, &build(name, params)?),
        Command::Hasse { example, params, shape, .. } => hasse(cli, &build(example, params)?, *shape),
        Command::Window { example, params, shape } => window_cmd(cli, &build(example, params)?, *shape),
        Command::Check { law, example, params } => check(cli, &law.0, example.as_deref(), params),
        Command::Enumerate { max_order, topological } => enumerate(cli, *max_order, *topological),
        Command::Invariants { example, params, poset, shape } => match (example, poset) {
            (_, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                invariants(cli, &FinitePoset::from_json(&text)?, None)
            }
            (Some(name), None) => {
                let entry = build(name, params)?;
                let w = window(cli, &entry, *shape)?;
                invariants(cli, w.poset(), Some(&entry))
            }
            (None, None) => Err(Failure { code: 2, message: "give an example name or --poset FILE".into() }),
        },
    }
}

fn build(name: &str, params: &[(String, i64)]) -> Result<CatalogEntry, Failure> {
    let params: BTreeMap<String, i64> = params.iter().cloned().collect();
    Ok(catalog_build(name, &params)?)
}

fn window<'e>(cli: &Cli, entry: &'e CatalogEntry, shape: Shape) -> Result<Window<'e, SharedOracle>, Failure> {
    let depth = cli.depth.unwrap_or(entry.default_depth);
    let cap = alexpara::oracle::DEFAULT_BALL_CAP;
    Ok(match shape {
        Shape::Ball => Window::ball(&entry.oracle, depth, cap)?,
        Shape::Default => Window::of_depth(&entry.oracle, depth, cap)?,
    })
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    out!(line, "{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn catalog_list_cmd(cli: &Cli) -> Outcome {
    let entries = catalog_list();
    if cli.json {
        print_json(&entries.iter().map(CatalogEntry::info).collect::<Vec<_>>())?;
        return Ok(0);
    }
    out!(line, "{:<22} {:<8} {:<12} {:<9} {:<10}", "example", "params", "radius", "width", "connected");
    for e in &entries {
        let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let x = &e.expected;
        out!(line, "{:<22} {:<8} {:<12} {:<9} {:<10}", e.name, params.join(","), x.radius.to_string(), x.width.to_string(), x.connected);
    }
    Ok(0)
}

fn catalog_show(cli: &Cli, entry: &CatalogEntry) -> Outcome {
    let info = entry.info();
    if cli.json {
        print_json(&info)?;
        return Ok(0);
    }
    let x = &info.expected;
    out!(line, "{}", info.oracle);
    out!(line, "  identity        {}", info.identity);
    out!(line, "  generators      {}", info.generators.join(", "));
    out!(line, "  positive        {}", info.positive);
    out!(line, "  bounded subset  {}", info.bounded_subset);
    out!(line, "  default depth   {}", info.default_depth);
    out!(line, "expected");
    out!(line, "  radius          {}", x.radius);
    out!(line, "  width           {}", x.width);
    out!(line, "  connected       {}", x.connected);
    out!(line, "  hyperconnected  {}", x.hyperconnected);
    out!(line, "  beat points     {}", x.has_beat_points);
    out!(line, "  abelian         {}", x.abelian);
    out!(line, "  cardinality     {:?}", x.cardinality);
    for id in LawId::ALL {
        let s = x.law(id.as_str());
        if s != Status::Pass {
            out!(line, "  law {:<28} {s}", id.as_str());
        }
    }
    Ok(0)
}

fn hasse(cli: &Cli, entry: &CatalogEntry, shape: Shape) -> Outcome {
    let w = window(cli, entry, shape)?;
    if cli.json {
        print_json(&w.document(Some(cli.depth.unwrap_or(entry.default_depth))))?;
    } else {
        out!("{}", w.poset().to_dot(&entry.oracle.name(), w.identity_node()));
    }
    Ok(0)
}

fn window_cmd(cli: &Cli, entry: &CatalogEntry, shape: Shape) -> Outcome {
    let w = window(cli, entry, shape)?;
    // the window document is JSON in either mode
    print_json(&w.document(Some(cli.depth.unwrap_or(entry.default_depth))))?;
    Ok(0)
}

fn check(cli: &Cli, ids: &[LawId], example: Option<&str>, params: &[(String, i64)]) -> Outcome {
    let entries = match example {
        Some(name) => vec![build(name, params)?],
        None if params.is_empty() => catalog_list(),
        None => return Err(Failure { code: 2, message: "parameters need --example".into() }),
    };
    let defaults = LawConfig::default();
    let cfg = LawConfig { depth: cli.depth, seed: cli.seed, budget: cli.budget.unwrap_or(defaults.budget), ..defaults };
    let mut outcomes: Vec<LawOutcome> = Vec::new();
    for entry in &entries {
        outcomes.extend(run_laws(entry, ids, &cfg)?);
    }
    if cli.json {
        print_json(&json!({ "seed": cfg.seed, "config": cfg, "outcomes": outcomes }))?;
    } else {
        for o in &outcomes {
            let mark = if o.matched { "ok " } else { "!! " };
            let r = &o.result;
            out!("{mark}{:<26} {:<28} {:<12}", o.example, r.law_id, r.status.to_string());
            if !o.matched {
                out!(" expected {}", o.expected);
            }
            if !r.note.is_empty() {
                out!("  {}", r.note);
            }
            out!(line);
            if r.status == Status::Fail {
                for f in r.witness.iter().flatten() {
                    out!(line, "     {f}");
                }
            }
        }
        let bad = outcomes.iter().filter(|o| !o.matched).count();
        out!(line, "{} laws checked, {bad} unexpected, seed {}", outcomes.len(), cfg.seed);
    }
    let unexpected = |s| outcomes.iter().any(|o| !o.matched && o.result.status == s);
    Ok(if unexpected(Status::Fail) {
        1
    } else if unexpected(Status::Inapplicable) {
        2
    } else {
        0
    })
}

fn enumerate(cli: &Cli, max_order: usize, topological: bool) -> Outcome {
    let reports =
        if topological { verify_topgroup_triviality(max_order)? } else { verify_discreteness_theorem(max_order)? };
    let confirmed = reports.iter().all(|r| r.confirmed());
    if cli.json {
        print_json(&reports)?;
    } else {
        out!(line, "{:<5} {:>5} {:>8} {:>9} {:>12} {:>10} {:>8}", "group", "order", "posets", "monotone", "non-discrete", "connected", "ms");
        for r in &reports {
            out!(line, 
                "{:<5} {:>5} {:>8} {:>9} {:>12} {:>10} {:>8}",
                r.group,
                r.order,
                r.posets_examined,
                r.monotone_orders,
                r.non_discrete_survivors.len(),
                r.connected_survivors.len(),
                r.runtime_ms
            );
        }
        let claim = if topological {
            "only the one-point group carries a connected monotone order with monotone inversion"
        } else {
            "every order with monotone translations is discrete"
        };
        out!(line, "{}: {claim}", if confirmed { "confirmed" } else { "REFUTED" });
    }
    Ok(if confirmed { 0 } else { 1 })
}

fn invariants(cli: &Cli, p: &FinitePoset, entry: Option<&CatalogEntry>) -> Outcome {
    let beat: Vec<_> = p.beat_points().iter().map(|b| json!({ "element": p.label(b.element), "kind": b.kind })).collect();
    let value = json!({
        "example": entry.map(|e| e.oracle.name()),
        "radius": entry.map(|e| radius(&e.oracle)),
        "size": p.len(),
        "covers": p.covers().edges.len(),
        "width": p.width(),
        "height": p.height(),
        "connected": p.is_connected(),
        "hyperconnected": p.is_hyperconnected(),
        "ultraconnected": p.is_ultraconnected(),
        "directed": p.is_directed(),
        "beat_points": beat,
        "core_size": p.core().len(),
        "euler_characteristic": p.euler_characteristic(),
        "iterated_antichain_join": p.is_iterated_antichain_join(),
    });
    if cli.json {
        print_json(&value)?;
    } else if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            out!(line, "{k:<24} {v}");
        }
    }
    Ok(0)
}
