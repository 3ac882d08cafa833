//! The `ordtype` command line: argument parsing, cached computations, reports
//! and exit codes.
//!
//! Exit codes: `0` success, `1` error, `2` for a negative verdict from a
//! comparator (`order-type`, `two-orders`, `burnside-check`, `verify-t8`).

pub mod builtins;
pub mod cache;
pub mod group_file;
mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::burnside::{burnside_obstruction, table_of_marks_with_cap, Verdict};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::spectrum::{compare_order_type, compare_two_orders, order_equation, OrderEquation};
use crate::subgroups::{
    cyclic_count_identity, cyclic_subgroup_classes, find_subgroup_of_order, IdentityReport, SearchCertificate,
    SearchStrategy, SubgroupLattice, DEFAULT_LATTICE_CAP,
};

pub use builtins::resolve_builtin;
pub use cache::ResultCache;
pub use group_file::{format_group_file, parse_group_file, read_group_file, write_group_file};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

pub const VERSION_TAG: &str = concat!("ordtype ", env!("CARGO_PKG_VERSION"));

/// File name of the derived A7 generators inside a cache directory.
pub const A7_CACHE_FILE: &str = "a7_gl42.txt";

#[derive(Parser, Debug)]
#[command(name = "ordtype", version, about = "Order equations, subgroup classes and Burnside-ring checks for permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Directory for cached results.
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    /// Maximum number of elements to enumerate per group.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
}

#[derive(Args, Debug)]
struct Inputs {
    /// Builtin group, e.g. `A5`, `D8`, `2_4_A7`, `A5xA5xA5`.
    #[arg(long = "builtin", value_name = "NAME")]
    builtin: Vec<String>,
    /// Group file (`degree <N>` header, one generator per line).
    #[arg(long = "file", value_name = "PATH")]
    file: Vec<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Element-order spectrum.
    Spectrum(Inputs),
    /// Number of elements of each order.
    OrderEq(Inputs),
    /// Compare |G(d)| for all d.
    OrderType(Inputs),
    /// Compare group orders and spectra.
    TwoOrders(Inputs),
    /// Conjugacy classes of cyclic subgroups.
    CyclicClasses(Inputs),
    /// Check that cyclic class sizes weighted by Euler's phi give the order equation.
    VerifyT8(Inputs),
    /// Find a subgroup of the given order or prove there is none.
    FindSubgroup {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        order: u64,
    },
    /// All subgroup classes of a small group.
    Lattice(Inputs),
    /// Table of marks of a small group.
    Marks(Inputs),
    /// Necessary conditions for isomorphic Burnside rings.
    BurnsideCheck {
        #[command(flatten)]
        inputs: Inputs,
        /// Order m whose solvable subgroups are compared.
        #[arg(long = "probe", value_name = "M")]
        probe: Vec<u64>,
    },
    /// Write a builtin group to a group file.
    Construct {
        builtin: String,
        #[arg(short = 'o', long = "output", value_name = "PATH")]
        output: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::OrderEq(_) => "order-eq",
            Command::OrderType(_) => "order-type",
            Command::TwoOrders(_) => "two-orders",
            Command::CyclicClasses(_) => "cyclic-classes",
            Command::VerifyT8(_) => "verify-t8",
            Command::FindSubgroup { .. } => "find-subgroup",
            Command::Lattice(_) => "lattice",
            Command::Marks(_) => "marks",
            Command::BurnsideCheck { .. } => "burnside-check",
            Command::Construct { .. } => "construct",
        }
    }
}

/// Machine-readable outcome of one command. Serialized with sorted keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub results: Value,
    pub version: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Report, human-readable text and exit code of one invocation.
#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub report: Report,
    pub text: String,
    pub exit_code: i32,
}

/// Runs one command and prints its text to standard output (errors to standard error).
pub fn run_command<I, T>(argv: I) -> (Report, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = execute(argv);
    if out.exit_code == EXIT_ERROR {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    (out.report, out.exit_code)
}

/// Runs one command without printing. `argv[0]` is the program name.
pub fn execute<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let report = if code == EXIT_OK {
                report("help", Vec::new(), json!({ "text": text }))
            } else {
                error_report("ordtype", Vec::new(), &Error::UsageError(text.trim_end().to_string()))
            };
            return CommandOutput { report, text, exit_code: code };
        }
    };
    let cli = Cli::from_arg_matches(&matches).expect("validated by clap");
    let sub = matches.subcommand().expect("subcommand is required").1;
    let ctx = Context { cache: cli.cache_dir.as_deref().map(ResultCache::new), cap: cli.cap };
    let name = cli.command.name();
    let mut labels = Vec::new();
    let mut out = match run(&ctx, &cli.command, sub, &mut labels) {
        Ok((results, text, exit_code)) => CommandOutput { report: report(name, labels.clone(), results), text, exit_code },
        Err(e) => CommandOutput {
            report: error_report(name, labels.clone(), &e),
            text: format!("error: {} ({})\n", e, e.name()),
            exit_code: EXIT_ERROR,
        },
    };
    if let Some(path) = &cli.json {
        if let Err(e) = cache::write_atomic(path, out.report.to_json().as_bytes()) {
            out = CommandOutput {
                report: error_report(name, labels, &e),
                text: format!("error: {} ({})\n", e, e.name()),
                exit_code: EXIT_ERROR,
            };
        }
    }
    out
}

fn report(command: &str, inputs: Vec<String>, results: Value) -> Report {
    Report { command: command.to_string(), inputs, results, version: VERSION_TAG.to_string() }
}

fn error_report(command: &str, inputs: Vec<String>, e: &Error) -> Report {
    report(command, inputs, json!({ "error": { "kind": e.name(), "message": e.to_string() } }))
}

struct Context {
    cache: Option<ResultCache>,
    cap: Option<usize>,
}

impl Context {
    fn a7_cache(&self) -> Option<PathBuf> {
        self.cache.as_ref().map(|c| c.dir().join(A7_CACHE_FILE))
    }

    fn cached<T, F>(&self, kind: &str, key: &str, compute: F) -> Result<T>
    where
        T: Serialize + for<'de> Deserialize<'de>,
        F: FnOnce() -> Result<T>,
    {
        match &self.cache {
            Some(c) => c.get_or_compute(kind, key, compute),
            None => compute(),
        }
    }

    fn order_equation(&self, g: &Group) -> Result<OrderEquation> {
        self.cached("order-eq", &g.canonical_key(), || order_equation(g))
    }

    fn cyclic_classes(&self, g: &Group) -> Result<Vec<CyclicRowOut>> {
        self.cached("cyclic-classes", &g.canonical_key(), || {
            Ok(cyclic_subgroup_classes(g)?
                .rows
                .into_iter()
                .map(|r| CyclicRowOut {
                    n: r.n,
                    representative: r.representative.to_string(),
                    class_size: r.class_size,
                    normalizer_order: r.normalizer_order,
                })
                .collect())
        })
    }

    fn find_subgroup(&self, g: &Group, m: u64) -> Result<FindOut> {
        self.cached("find-subgroup", &format!("{}\norder {m}", g.canonical_key()), || {
            let outcome = find_subgroup_of_order(g, m)?;
            Ok(FindOut {
                order: m,
                strategy: outcome.strategy,
                found: outcome.found.is_some(),
                is_solvable: outcome.found.as_ref().map(|f| f.is_solvable),
                generators: outcome.found.map(|f| f.group.generators().iter().map(|p| p.to_string()).collect()),
                certificate: outcome.certificate,
            })
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CyclicRowOut {
    n: u64,
    representative: String,
    class_size: u64,
    normalizer_order: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FindOut {
    order: u64,
    strategy: SearchStrategy,
    found: bool,
    is_solvable: Option<bool>,
    generators: Option<Vec<String>>,
    certificate: Option<SearchCertificate>,
}

/// Groups named on the command line, in the order given.
fn load_inputs(ctx: &Context, inputs: &Inputs, sub: &ArgMatches, labels: &mut Vec<String>) -> Result<Vec<Group>> {
    let mut tagged: Vec<(usize, String, Group)> = Vec::new();
    let a7_cache = ctx.a7_cache();
    let builtin_idx: Vec<usize> = sub.indices_of("builtin").map(|i| i.collect()).unwrap_or_default();
    for (name, idx) in inputs.builtin.iter().zip(builtin_idx) {
        tagged.push((idx, format!("builtin:{name}"), resolve_builtin(name, a7_cache.as_deref())?));
    }
    let file_idx: Vec<usize> = sub.indices_of("file").map(|i| i.collect()).unwrap_or_default();
    for (path, idx) in inputs.file.iter().zip(file_idx) {
        tagged.push((idx, format!("file:{}", path.display()), read_group_file(path)?));
    }
    tagged.sort_by_key(|t| t.0);
    labels.extend(tagged.iter().map(|t| t.1.clone()));
    Ok(tagged
        .into_iter()
        .map(|(_, _, g)| match ctx.cap {
            Some(cap) => g.with_enumeration_cap(cap),
            None => g,
        })
        .collect())
}

fn exactly<const N: usize>(groups: Vec<Group>, command: &str) -> Result<[Group; N]> {
    let got = groups.len();
    groups
        .try_into()
        .map_err(|_| Error::UsageError(format!("`{command}` takes exactly {N} group(s), got {got}")))
}

fn short_label(label: &str) -> &str {
    label.split_once(':').map_or(label, |(_, rest)| rest)
}

type Run = (Value, String, i32);

fn run(ctx: &Context, command: &Command, sub: &ArgMatches, labels: &mut Vec<String>) -> Result<Run> {
    let name = command.name();
    match command {
        Command::Spectrum(inputs) => {
            let [g] = exactly::<1>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let eq = ctx.order_equation(&g)?;
            let spectrum = eq.spectrum().to_vec();
            let text = render::spectrum(short_label(&labels[0]), eq.total, &spectrum);
            Ok((json!({ "order": eq.total, "spectrum": spectrum }), text, EXIT_OK))
        }
        Command::OrderEq(inputs) => {
            let [g] = exactly::<1>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let eq = ctx.order_equation(&g)?;
            let text = render::order_equation(short_label(&labels[0]), &eq);
            Ok((json!({ "counts": eq.counts, "total": eq.total, "equation": eq.equation_string() }), text, EXIT_OK))
        }
        Command::OrderType(inputs) | Command::TwoOrders(inputs) => {
            let [a, b] = exactly::<2>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let (ea, eb) = (ctx.order_equation(&a)?, ctx.order_equation(&b)?);
            let verdict = match command {
                Command::OrderType(_) => compare_order_type(&ea, &eb),
                _ => compare_two_orders(&ea, &eb),
            };
            let text = render::verdict(&verdict);
            let code = if verdict.equal { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((serde_json::to_value(&verdict).unwrap(), text, code))
        }
        Command::CyclicClasses(inputs) => {
            let [g] = exactly::<1>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let rows = ctx.cyclic_classes(&g)?;
            let text = render::cyclic_rows(&rows);
            Ok((json!({ "rows": rows }), text, EXIT_OK))
        }
        Command::VerifyT8(inputs) => {
            let [g] = exactly::<1>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let report = verify_from_cached(ctx, &g)?;
            let text = render::identity(&report);
            let code = if report.ok { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((serde_json::to_value(&report).unwrap(), text, code))
        }
        Command::FindSubgroup { inputs, order } => {
            let [g] = exactly::<1>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let found = ctx.find_subgroup(&g, *order)?;
            let text = render::find(&found);
            Ok((serde_json::to_value(&found).unwrap(), text, EXIT_OK))
        }
        Command::Lattice(inputs) => {
            let [g] = exactly::<1>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let lattice = SubgroupLattice::compute_with_cap(&g, DEFAULT_LATTICE_CAP)?;
            let text = render::lattice(lattice.rows(), lattice.subgroup_count());
            Ok((
                json!({ "classes": lattice.rows(), "class_count": lattice.rows().len(), "subgroup_count": lattice.subgroup_count() }),
                text,
                EXIT_OK,
            ))
        }
        Command::Marks(inputs) => {
            let [g] = exactly::<1>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let table = table_of_marks_with_cap(&g, DEFAULT_LATTICE_CAP)?;
            let text = render::marks(&table);
            Ok((serde_json::to_value(&table).unwrap(), text, EXIT_OK))
        }
        Command::BurnsideCheck { inputs, probe } => {
            let [a, b] = exactly::<2>(load_inputs(ctx, inputs, sub, labels)?, name)?;
            let report = burnside_obstruction(&a, &b, probe)?;
            let text = render::obstruction(&report);
            let code = if report.verdict == Verdict::Compatible { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((serde_json::to_value(&report).unwrap(), text, code))
        }
        Command::Construct { builtin, output } => {
            labels.push(format!("builtin:{builtin}"));
            let g = resolve_builtin(builtin, ctx.a7_cache().as_deref())?;
            write_group_file(output, &g)?;
            let order = g.try_order()?;
            let text = format!("wrote {} (degree {}, order {order})\n", output.display(), g.degree());
            Ok((json!({ "path": output.display().to_string(), "degree": g.degree(), "order": order.to_string() }), text, EXIT_OK))
        }
    }
}

/// The cyclic-count identity, assembled from the (possibly cached) class table and order equation.
fn verify_from_cached(ctx: &Context, g: &Group) -> Result<IdentityReport> {
    let rows = ctx.cyclic_classes(g)?;
    let eq = ctx.order_equation(g)?;
    Ok(cyclic_count_identity(rows.iter().map(|r| (r.n, r.class_size)), &eq))
}
