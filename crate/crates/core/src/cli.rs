//! Command-line front end. [`run`] takes its streams as arguments so the
//! whole interface can be driven in-process.
//!
//! Exit codes: 0 on success, 1 on a domain or usage error, 2 when a coloring
//! fails verification or an experiment has a failing instance.

use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{bounds_report, conjecture_value, WitnessSource};
use crate::constructions::{color_tree, Method};
use crate::error::Error;
use crate::exact::{exact_chi_l, ExactOptions, DEFAULT_VERTEX_LIMIT};
use crate::experiments::{self, Outcome};
use crate::io::{
    parse_documents, parse_tree_input, to_dot, write_coloring, write_palm_spec, write_tree,
    Document,
};
use crate::locating::{verify, Coloring};
use crate::tree::{PalmSpec, Tree};

#[derive(Parser, Debug)]
#[command(
    name = "locchroma",
    version,
    about = "Locating colorings of trees, palms and olive trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a palm, olive tree or regular palm.
    Gen(GenArgs),
    /// Color a tree with one of the constructions.
    Color(ColorArgs),
    /// Check that a coloring is proper and locating.
    Verify(VerifyArgs),
    /// Compute the locating chromatic number by exhaustive search.
    Exact(ExactArgs),
    /// Report the lower and upper bounds for a tree.
    Bounds(BoundsArgs),
    /// Render a tree, optionally colored, as Graphviz DOT.
    ExportDot(DotArgs),
    /// Re-run a batch check and print PASS/FAIL per instance.
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    shape: Shape,
    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Emit the compact `palm a,b,...` form instead of an edge list.
    #[arg(long, global = true)]
    as_spec: bool,
}

#[derive(Subcommand, Debug)]
enum Shape {
    /// Palm with the given comma-separated arm lengths.
    Palm {
        #[arg(value_delimiter = ',', required = true)]
        arms: Vec<usize>,
    },
    /// Olive tree `S_n(1, 2, ..., n)`.
    Olive { n: usize },
    /// Regular palm `S_n(k)`.
    Regular { n: usize, k: usize },
}

#[derive(Args, Debug)]
struct ColorArgs {
    /// Tree or palm file; read from stdin when omitted.
    tree: Option<PathBuf>,
    #[arg(
        long,
        default_value = "auto",
        value_parser = PossibleValuesParser::new(Method::ALL.map(Method::name))
            .map(|s| s.parse::<Method>().expect("listed method names parse"))
    )]
    method: Method,
    /// Write the coloring to this file.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Tree or palm file; with no files, stdin holds the tree and then the coloring.
    tree: Option<PathBuf>,
    /// Coloring file; read from stdin when omitted.
    coloring: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExactArgs {
    /// Tree or palm file; read from stdin when omitted.
    tree: Option<PathBuf>,
    /// Stop after this many colors.
    #[arg(long)]
    max_colors: Option<usize>,
    /// Refuse trees with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    limit: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Start at 3 colors instead of the maximum-degree lower bound.
    #[arg(long)]
    no_degree_bound: bool,
    /// Print only `<vertices> <chi_l>`.
    #[arg(long)]
    machine: bool,
    /// Write the witness coloring to this file.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WitnessArg {
    Constructions,
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Tree or palm file; read from stdin when omitted.
    tree: Option<PathBuf>,
    /// How end-palm values are obtained.
    #[arg(long, value_enum, default_value = "constructions")]
    witness: WitnessArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also print the conjectured value for regular palms with arms of length at least 4.
    #[arg(long)]
    conjecture: bool,
}

#[derive(Args, Debug)]
struct DotArgs {
    /// Tree or palm file; with no files, stdin holds the tree and an optional coloring.
    tree: Option<PathBuf>,
    coloring: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Experiment {
    /// Algorithm 2 on olive trees against the closed form and degree bound.
    Olive {
        #[arg(long, default_value_t = 60)]
        max_n: usize,
    },
    /// `S_n(2)` construction against `ceil(sqrt(n)) + 1`.
    Sn2 {
        #[arg(long, default_value_t = 100)]
        max_n: usize,
    },
    /// `S_n(3)` construction against the threshold formula.
    Sn3 {
        #[arg(long, default_value_t = 60)]
        max_n: usize,
    },
    /// Maximum degree against the exact value on random trees.
    DegreeBound {
        #[arg(long, default_value_t = 300)]
        trials: usize,
        /// Overridden by the LOCCHROMA_SEED environment variable.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
    },
    /// Exact values under arm extension on all small palms.
    Monotone {
        #[arg(long, default_value_t = 11)]
        max_vertices: usize,
    },
    /// The `Delta = 36` palm colored with 5 colors.
    Counterexample,
    /// Best constructions on `S_n(k)` next to the conjectured value.
    Conjecture {
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
}

enum Failure {
    Domain(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotLocating(_) => Failure::Verification(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the command; returns the
/// process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    1
                }
            };
        }
    };
    let mut streams = Streams {
        stdin,
        stdout,
        stderr,
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a, &mut streams),
        Command::Color(a) => color(a, &mut streams),
        Command::Verify(a) => verify_cmd(a, &mut streams),
        Command::Exact(a) => exact(a, &mut streams),
        Command::Bounds(a) => bounds(a, &mut streams),
        Command::ExportDot(a) => export_dot(a, &mut streams),
        Command::Experiment(e) => experiment(e, &mut streams),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(streams.stderr, "error: {msg}");
            1
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(streams.stderr, "verification failed: {msg}");
            2
        }
    }
}

fn labeled(label: &dyn fmt::Display, e: Error) -> Failure {
    Failure::Domain(format!("{label}: {e}"))
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn read_stdin(s: &mut Streams<'_>) -> CliResult<String> {
    let mut text = String::new();
    s.stdin.read_to_string(&mut text)?;
    Ok(text)
}

fn write_out(path: &Path, text: &str) -> CliResult {
    std::fs::write(path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

/// A tree as read, keeping the palm form so it can be passed on unchanged.
enum TreeDoc {
    Tree(Tree),
    Palm(PalmSpec, Tree),
}

impl TreeDoc {
    fn tree(&self) -> &Tree {
        match self {
            TreeDoc::Tree(t) | TreeDoc::Palm(_, t) => t,
        }
    }

    fn into_tree(self) -> Tree {
        match self {
            TreeDoc::Tree(t) | TreeDoc::Palm(_, t) => t,
        }
    }

    fn render(&self) -> String {
        match self {
            TreeDoc::Tree(t) => write_tree(t),
            TreeDoc::Palm(p, _) => write_palm_spec(p),
        }
    }
}

/// Tree followed by up to `max_colorings` colorings, from stdin.
fn stdin_documents(
    s: &mut Streams<'_>,
    max_colorings: usize,
) -> CliResult<(TreeDoc, Vec<Coloring>)> {
    let text = read_stdin(s)?;
    let docs = parse_documents(&text).map_err(|e| labeled(&"<stdin>", e))?;
    let mut docs = docs.into_iter();
    let tree = match docs.next() {
        Some(Document::Tree(t)) => TreeDoc::Tree(t),
        Some(Document::Palm(p)) => {
            let t = p.build();
            TreeDoc::Palm(p, t)
        }
        Some(Document::Coloring(_)) => {
            return Err(Failure::Domain(
                "<stdin>: expected a tree or palm before the coloring".into(),
            ))
        }
        None => return Err(Failure::Domain("<stdin>: no tree given".into())),
    };
    let mut colorings = Vec::new();
    for doc in docs {
        match doc {
            Document::Coloring(c) if colorings.len() < max_colorings => colorings.push(c),
            _ => {
                return Err(Failure::Domain(format!(
                    "<stdin>: expected at most {max_colorings} coloring(s) after the tree"
                )))
            }
        }
    }
    Ok((tree, colorings))
}

fn tree_from_file(path: &Path) -> CliResult<Tree> {
    parse_tree_input(&read_file(path)?).map_err(|e| labeled(&path.display(), e))
}

fn coloring_from_text(label: &dyn fmt::Display, text: &str) -> CliResult<Coloring> {
    crate::io::parse_coloring(text).map_err(|e| labeled(label, e))
}

/// The tree from `path` or, when absent, from stdin.
fn load_tree(path: Option<&Path>, s: &mut Streams<'_>) -> CliResult<Tree> {
    match path {
        Some(p) => tree_from_file(p),
        None => Ok(stdin_documents(s, 0)?.0.into_tree()),
    }
}

fn gen(a: GenArgs, s: &mut Streams<'_>) -> CliResult {
    let spec = match a.shape {
        Shape::Palm { arms } => PalmSpec::new(arms)?,
        Shape::Olive { n } => PalmSpec::olive(n)?,
        Shape::Regular { n, k } => PalmSpec::regular(n, k)?,
    };
    let text = if a.as_spec {
        write_palm_spec(&spec)
    } else {
        write_tree(&spec.build())
    };
    match a.output {
        Some(path) => write_out(&path, &text),
        None => Ok(s.stdout.write_all(text.as_bytes())?),
    }
}

fn color(a: ColorArgs, s: &mut Streams<'_>) -> CliResult {
    let (doc, from_stdin) = match &a.tree {
        Some(p) => (TreeDoc::Tree(tree_from_file(p)?), false),
        None => (stdin_documents(s, 0)?.0, true),
    };
    let (used, coloring) = color_tree(doc.tree(), a.method)?;
    writeln!(s.stderr, "method {used}: {} colors", coloring.k())?;
    let text = write_coloring(&coloring);
    match a.output {
        Some(path) => write_out(&path, &text),
        None => {
            if from_stdin {
                s.stdout.write_all(doc.render().as_bytes())?;
            }
            Ok(s.stdout.write_all(text.as_bytes())?)
        }
    }
}

fn verify_cmd(a: VerifyArgs, s: &mut Streams<'_>) -> CliResult {
    let (tree, coloring) = match (&a.tree, &a.coloring) {
        (Some(t), Some(c)) => (
            tree_from_file(t)?,
            coloring_from_text(&c.display(), &read_file(c)?)?,
        ),
        (Some(t), None) => {
            let tree = tree_from_file(t)?;
            let text = read_stdin(s)?;
            (tree, coloring_from_text(&"<stdin>", &text)?)
        }
        (None, _) => {
            let (doc, mut colorings) = stdin_documents(s, 1)?;
            let c = colorings
                .pop()
                .ok_or_else(|| Failure::Domain("<stdin>: no coloring after the tree".into()))?;
            (doc.into_tree(), c)
        }
    };
    let report = verify(&tree, &coloring)?;
    let out = &mut *s.stdout;
    writeln!(out, "vertices={}", tree.len())?;
    writeln!(out, "colors={}", report.colors)?;
    writeln!(out, "proper={}", report.is_proper)?;
    writeln!(out, "locating={}", report.is_locating)?;
    writeln!(out, "improper_edges={}", report.improper_edges.len())?;
    writeln!(out, "duplicate_pairs={}", report.duplicate_count)?;
    for (u, v) in &report.improper_edges {
        writeln!(out, "improper {u} {v}")?;
    }
    for p in &report.duplicate_pairs {
        let code: Vec<String> = p.code.iter().map(u32::to_string).collect();
        writeln!(out, "duplicate {} {} code=({})", p.u, p.v, code.join(","))?;
    }
    if report.is_locating {
        Ok(())
    } else {
        Err(Failure::Verification(crate::locating::describe_failure(
            &report,
        )))
    }
}

fn exact(a: ExactArgs, s: &mut Streams<'_>) -> CliResult {
    let tree = load_tree(a.tree.as_deref(), s)?;
    let options = ExactOptions {
        max_colors: a.max_colors,
        vertex_limit: a.limit,
        threads: a.threads.max(1),
        use_degree_bound: !a.no_degree_bound,
    };
    let result = exact_chi_l(&tree, &options)?;
    if a.machine {
        writeln!(s.stdout, "{} {}", tree.len(), result.chi_l)?;
    } else {
        writeln!(s.stdout, "chi_l={}", result.chi_l)?;
        writeln!(s.stdout, "nodes_explored={}", result.nodes_explored)?;
        writeln!(s.stdout, "elapsed_ms={}", result.elapsed.as_millis())?;
    }
    if let Some(path) = a.output {
        write_out(&path, &write_coloring(&result.witness))?;
    }
    Ok(())
}

fn bounds(a: BoundsArgs, s: &mut Streams<'_>) -> CliResult {
    let tree = load_tree(a.tree.as_deref(), s)?;
    let source = match a.witness {
        WitnessArg::Constructions => WitnessSource::Constructions,
        WitnessArg::Exact => WitnessSource::Exact,
    };
    let report = bounds_report(&tree, source)?;
    match a.format {
        Format::Text => write!(s.stdout, "{report}")?,
        Format::Kv => s.stdout.write_all(report.to_key_values().as_bytes())?,
    }
    if a.conjecture {
        let regular = PalmSpec::recognize(&tree)
            .and_then(|e| e.spec.regular_length().map(|k| (e.spec.n(), k)))
            .filter(|&(_, k)| k >= 4);
        match regular {
            Some((n, k)) => writeln!(s.stdout, "conjecture={:.3}", conjecture_value(n, k))?,
            None => writeln!(s.stdout, "conjecture=absent")?,
        }
    }
    Ok(())
}

fn export_dot(a: DotArgs, s: &mut Streams<'_>) -> CliResult {
    let (tree, coloring) = match (&a.tree, &a.coloring) {
        (Some(t), c) => {
            let tree = tree_from_file(t)?;
            let coloring = match c {
                Some(c) => Some(coloring_from_text(&c.display(), &read_file(c)?)?),
                None => None,
            };
            (tree, coloring)
        }
        (None, _) => {
            let (doc, mut colorings) = stdin_documents(s, 1)?;
            (doc.into_tree(), colorings.pop())
        }
    };
    if let Some(c) = &coloring {
        if c.len() != tree.len() {
            return Err(Failure::Domain(format!(
                "coloring has {} vertices but the tree has {}",
                c.len(),
                tree.len()
            )));
        }
    }
    let dot = to_dot(&tree, coloring.as_ref());
    match a.output {
        Some(path) => write_out(&path, &dot),
        None => Ok(s.stdout.write_all(dot.as_bytes())?),
    }
}

fn experiment(e: Experiment, s: &mut Streams<'_>) -> CliResult {
    let outcomes: Vec<Outcome> = match e {
        Experiment::Olive { max_n } => experiments::olive(max_n)?,
        Experiment::Sn2 { max_n } => experiments::sn2(max_n)?,
        Experiment::Sn3 { max_n } => experiments::sn3(max_n)?,
        Experiment::DegreeBound {
            trials,
            seed,
            max_vertices,
        } => experiments::degree_bound(trials, experiments::resolve_seed(seed), max_vertices)?,
        Experiment::Monotone { max_vertices } => experiments::monotone(max_vertices)?,
        Experiment::Counterexample => experiments::counterexample()?,
        Experiment::Conjecture { k, max_n } => experiments::conjecture(k, max_n)?,
    };
    for o in &outcomes {
        writeln!(s.stdout, "{o}")?;
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    writeln!(s.stdout, "{passed}/{} passed", outcomes.len())?;
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{} instance(s) failed",
            outcomes.len() - passed
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("locchroma").chain(args.iter().copied()),
            &mut input,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn gen_forms() {
        let (code, out, _) = run_str(&["gen", "palm", "1,2"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "tree 4\n0 1\n0 2\n2 3\n");
        let (_, out, _) = run_str(&["gen", "olive", "3", "--as-spec"], "");
        assert_eq!(out, "palm 1,2,3\n");
        let (code, _, err) = run_str(&["gen", "regular", "1", "2"], "");
        assert_eq!(code, 1);
        assert!(err.contains("at least two arms"), "{err}");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_str(&["frobnicate"], "").0, 1);
        assert_eq!(run_str(&["color", "--method", "magic"], "").0, 1);
        assert_eq!(run_str(&["--help"], "").0, 0);
    }

    #[test]
    fn color_pipes_tree_and_coloring() {
        let (code, out, err) = run_str(&["color", "--method", "algo2"], "palm 1,2,3\n");
        assert_eq!(code, 0, "{err}");
        assert!(out.starts_with("palm 1,2,3\ncoloring 7 3\n"), "{out}");
        let (code, out, _) = run_str(&["verify"], &out);
        assert_eq!(code, 0);
        assert!(out.contains("locating=true"));
    }

    #[test]
    fn verify_failure_exits_two() {
        let input = "tree 3\n0 1\n1 2\ncoloring 3 2\n0 1\n1 2\n2 1\n";
        let (code, out, _) = run_str(&["verify"], input);
        assert_eq!(code, 2);
        assert!(out.contains("locating=false"));
        assert!(out.contains("duplicate 0 2 code=(0,1)"), "{out}");
    }

    #[test]
    fn wrong_method_is_a_domain_error() {
        let (code, _, err) = run_str(&["color", "--method", "sn2"], "palm 1,2,3\n");
        assert_eq!(code, 1);
        assert!(err.contains("sn2 needs S_n(2)"), "{err}");
    }

    #[test]
    fn parse_errors_name_stdin_and_line() {
        let (code, _, err) = run_str(&["exact"], "tree 3\n0 1\n1 q\n");
        assert_eq!(code, 1);
        assert!(err.contains("<stdin>: line 3"), "{err}");
    }
}
