//! The `magmatic` command-line tool: parsing, enumeration, class
//! exploration, equivalence queries, morphism evaluation, witness
//! searches, and DOT export of replacement graphs.
//!
//! Exit codes: 0 success or affirmative answer, 1 certified negative,
//! 2 usage or parse error, 3 unknown within the configured caps.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

use crate::algebra::{eval_universal, FiniteMagma, GeneratorMap};
use crate::product::parse_component_spec;
use crate::quotient::{
    magmatic_product, AlgebraicProperty, ClassHandle, EquivalenceVerdict, ExplorationCaps,
    ProductContext, WitnessOutcome,
};
use crate::term::{catalan, enumerate_shapes, graft, parse, MagmaTerm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Fixed default seed so that every run is reproducible unless the
/// caller opts out.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(
    name = "magmatic",
    about = "Free-magma terms, replacement rewriting, and magmatic products",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Component magmas, e.g. "Z2,Z3,const0:2,table:path.tbl".
    #[arg(long, global = true)]
    components: Option<String>,

    /// Largest term (in leaves) an exploration may visit.
    #[arg(long, global = true, default_value_t = 6)]
    size_cap: usize,

    /// Most distinct terms an exploration may visit.
    #[arg(long, global = true, default_value_t = 10_000)]
    node_cap: usize,

    /// Output format for graph-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Seed for randomized subcommands; fixed by default.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Commutativity,
    Associativity,
}

impl From<PropertyArg> for AlgebraicProperty {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Commutativity => AlgebraicProperty::Commutativity,
            PropertyArg::Associativity => AlgebraicProperty::Associativity,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a term and report its canonical form, leaf count, and shape.
    Parse { expr: String },
    /// List every bracket skeleton with the given number of leaves.
    Shapes { n: usize },
    /// Print the n-th Catalan number.
    Catalan { n: usize },
    /// Explore the equivalence class of a term.
    Explore { expr: String },
    /// Decide whether two terms are equivalent within the caps.
    Equiv { left: String, right: String },
    /// Quotient operation: explore the class of the grafted representatives.
    Delta { left: String, right: String },
    /// Evaluate a term in a finite magma through a generator map.
    Morph {
        /// Cayley-table file for the target magma.
        #[arg(long)]
        magma: PathBuf,
        /// Generator-map file ("atom element-name" lines).
        #[arg(long)]
        map: PathBuf,
        expr: String,
    },
    /// Search for a certified counterexample to a law of the quotient
    /// operation (or of the free magma itself with --free).
    Witness {
        property: PropertyArg,
        /// Compare bracketings of the free magma instead of quotient classes.
        #[arg(long)]
        free: bool,
    },
}

/// Run configuration shared by all subcommands, assembled from the
/// global flags.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub components: Option<String>,
    pub caps: ExplorationCaps,
    pub format_dot: bool,
    pub seed: u64,
}

impl RunConfig {
    fn context(&self) -> Result<ProductContext, String> {
        let spec = self
            .components
            .as_deref()
            .ok_or("--components is required for this command")?;
        let space = parse_component_spec(spec).map_err(|e| e.to_string())?;
        Ok(magmatic_product(space).with_default_caps(self.caps))
    }
}

/// Parses the process arguments and runs one command, returning the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    if cli.size_cap == 0 || cli.node_cap == 0 {
        eprintln!("error: caps must be positive");
        return EXIT_USAGE;
    }
    let config = RunConfig {
        components: cli.components.clone(),
        caps: ExplorationCaps::new(cli.size_cap, cli.node_cap),
        format_dot: cli.format == OutputFormat::Dot,
        seed: cli.seed,
    };
    let result = match cli.command {
        Command::Parse { expr } => cmd_parse(&expr),
        Command::Shapes { n } => cmd_shapes(n),
        Command::Catalan { n } => cmd_catalan(n),
        Command::Explore { expr } => cmd_explore(&expr, &config),
        Command::Equiv { left, right } => cmd_equiv(&left, &right, &config),
        Command::Delta { left, right } => cmd_delta(&left, &right, &config),
        Command::Morph { magma, map, expr } => cmd_morph(&magma, &map, &expr),
        Command::Witness { property, free } => cmd_witness(property.into(), free, &config),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn parse_term(expr: &str) -> Result<MagmaTerm, String> {
    parse(expr).map_err(|e| e.to_string())
}

fn cmd_parse(expr: &str) -> Result<i32, String> {
    let term = parse_term(expr)?;
    println!("canonical = {term}");
    println!("leaves = {}", term.leaf_count());
    println!("shape = {}", term.shape());
    Ok(EXIT_OK)
}

fn cmd_shapes(n: usize) -> Result<i32, String> {
    let shapes = enumerate_shapes(n).map_err(|e| e.to_string())?;
    for shape in &shapes {
        println!("{shape}");
    }
    println!("count = C_{} = {}", n - 1, catalan(n - 1));
    Ok(EXIT_OK)
}

fn cmd_catalan(n: usize) -> Result<i32, String> {
    println!("C_{n} = {}", catalan(n));
    Ok(EXIT_OK)
}

fn describe_class(handle: &ClassHandle) -> String {
    format!(
        "members={} exhausted={} rep={}",
        handle.len(),
        handle.exhausted(),
        handle.representative()
    )
}

fn cmd_explore(expr: &str, config: &RunConfig) -> Result<i32, String> {
    let term = parse_term(expr)?;
    let ctx = config.context()?;
    let handle = ctx.class_of(&term, config.caps).map_err(|e| e.to_string())?;
    if config.format_dot {
        let edges = ctx.class_edges(&handle).map_err(|e| e.to_string())?;
        print!("{}", render_dot(&handle, &edges));
    } else {
        println!("{}", describe_class(&handle));
    }
    Ok(EXIT_OK)
}

fn render_dot(
    handle: &ClassHandle,
    edges: &[(MagmaTerm, crate::rewrite::ReplacementStep, MagmaTerm)],
) -> String {
    let mut out = String::from("digraph replacement {\n");
    for member in handle.members() {
        out.push_str(&format!("  \"{member}\";\n"));
    }
    for (from, step, to) in edges {
        out.push_str(&format!("  \"{from}\" -> \"{to}\" [label=\"{step}\"];\n"));
    }
    out.push_str("}\n");
    out
}

fn cmd_equiv(left: &str, right: &str, config: &RunConfig) -> Result<i32, String> {
    let a = parse_term(left)?;
    let b = parse_term(right)?;
    let ctx = config.context()?;
    let verdict = ctx
        .equivalent(&a, &b, config.caps)
        .map_err(|e| e.to_string())?;
    match verdict {
        EquivalenceVerdict::Equivalent(path) => {
            println!("EQUIVALENT");
            print!("{}", path.render());
            Ok(EXIT_OK)
        }
        EquivalenceVerdict::NotEquivalentCertified => {
            println!("NOT-EQUIVALENT (certified)");
            Ok(EXIT_NEGATIVE)
        }
        EquivalenceVerdict::Unknown(reason) => {
            println!("UNKNOWN ({reason})");
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn cmd_delta(left: &str, right: &str, config: &RunConfig) -> Result<i32, String> {
    let a = parse_term(left)?;
    let b = parse_term(right)?;
    let ctx = config.context()?;
    let class_a = ctx.class_of(&a, config.caps).map_err(|e| e.to_string())?;
    let class_b = ctx.class_of(&b, config.caps).map_err(|e| e.to_string())?;
    let product = ctx
        .delta(&class_a, &class_b, config.caps)
        .map_err(|e| e.to_string())?;
    println!("{}", describe_class(&product));
    Ok(EXIT_OK)
}

fn cmd_morph(magma_path: &PathBuf, map_path: &PathBuf, expr: &str) -> Result<i32, String> {
    let term = parse_term(expr)?;
    let table_text = std::fs::read_to_string(magma_path)
        .map_err(|e| format!("cannot read {}: {e}", magma_path.display()))?;
    let magma = FiniteMagma::from_table_text(magma_path.display().to_string(), &table_text)
        .map_err(|e| e.to_string())?;
    let map_text = std::fs::read_to_string(map_path)
        .map_err(|e| format!("cannot read {}: {e}", map_path.display()))?;
    let map = GeneratorMap::from_text(&map_text, &magma).map_err(|e| e.to_string())?;
    let value = eval_universal(&map, &magma, &term).map_err(|e| e.to_string())?;
    println!("{}", magma.element_name(value));
    Ok(EXIT_OK)
}

fn cmd_witness(
    property: AlgebraicProperty,
    free: bool,
    config: &RunConfig,
) -> Result<i32, String> {
    if free {
        // at the free-magma level distinct bracketings (and orders) are
        // distinct terms, so a witness always exists
        let x = parse_term("x")?;
        let y = parse_term("y")?;
        let z = parse_term("z")?;
        let (lhs, rhs) = match property {
            AlgebraicProperty::Commutativity => (graft(x, y), graft(parse_term("y")?, parse_term("x")?)),
            AlgebraicProperty::Associativity => (
                graft(x.clone(), graft(y.clone(), z.clone())),
                graft(graft(x, y), z),
            ),
        };
        println!("WITNESS property={property} (free)");
        println!("lhs = {lhs}");
        println!("rhs = {rhs}");
        return Ok(EXIT_OK);
    }
    let ctx = config.context()?;
    let outcome = ctx
        .witness_search(property, config.caps)
        .map_err(|e| e.to_string())?;
    match outcome {
        WitnessOutcome::Witness(details) => {
            println!("WITNESS property={property}");
            let atoms: Vec<String> = details.atoms.iter().map(|a| a.to_string()).collect();
            println!("atoms = {}", atoms.join(" "));
            println!("lhs = {}", details.lhs);
            println!("rhs = {}", details.rhs);
            println!(
                "candidates={} equivalent={} unknown={}",
                details.stats.candidates, details.stats.equivalent, details.stats.unknown
            );
            Ok(EXIT_OK)
        }
        WitnessOutcome::Unknown(stats) => {
            println!("UNKNOWN property={property}");
            println!(
                "candidates={} equivalent={} unknown={}",
                stats.candidates, stats.equivalent, stats.unknown
            );
            Ok(EXIT_UNKNOWN)
        }
    }
}
