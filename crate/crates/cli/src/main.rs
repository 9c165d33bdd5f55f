//! `shellob`: shellability, obstructions, homology and interval orders from
//! the command line.
//!
//! Exit status is 0 for a definite answer, 2 when a search budget ran out,
//! and 1 for usage, parse and I/O errors.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use shellob::families::{self, Seed};
use shellob::format::{
    parse_complex, parse_order, parse_poset, write_bounded_poset, write_certificate,
    write_complex, write_order,
};
use shellob::interval_shell::{
    atom_precedence, betti_interval_order, falling_chains, prop10_shelling,
    verify_recursive_atom_ordering,
};
use shellob::obstructions::{
    enumerate_obstructions, enumerate_purity_obstructions, is_obstruction, is_purity_obstruction,
    nonshellable_witness, write_report_dir, EnumerationMode, EnumerationReport, EnumerationTask,
    ObstructionReport, Witness,
};
use shellob::poset::{random_interval_order, FinitePoset};
use shellob::{
    find_shelling, is_shelling, reduced_homology, BoundedPoset, Face, SearchBudget, SearchOutcome,
    ShellingCheck, ShellingOrder, SimplicialComplex,
};

#[derive(Parser, Debug)]
#[command(name = "shellob", version, about = "Nonpure shellability, obstructions and interval orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest facet count handed to the exact shelling search.
    #[arg(long, global = true, default_value_t = 24)]
    budget_facets: usize,

    /// Wall-clock limit in seconds for searches and enumerations.
    #[arg(long, global = true)]
    budget_time: Option<f64>,

    /// Seed for random families and sampled enumeration.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Emit `key=value` lines instead of prose.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named complex or poset in the text format.
    Gen(GenArgs),
    /// Check or search for shelling orders.
    #[command(subcommand)]
    Shell(ShellCmd),
    /// Reduced integral homology.
    Homology(Input),
    /// Obstructions to shellability.
    #[command(subcommand)]
    Obstruction(ObstructionCmd),
    /// Obstructions to purity.
    #[command(subcommand)]
    Purity(PurityCmd),
    /// Interval orders and their order complexes.
    #[command(subcommand)]
    Poset(PosetCmd),
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; standard input when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    MCycle,
    Prop1Obstruction,
    Prop1J,
    PurityObstruction,
    DisjointEdges,
    FiveVertex,
    BoundarySimplex,
    Rp2,
    Random,
    IntervalOrder,
    Antichain,
    Chain,
    Diamond,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    /// Family parameters: a size or dimension; `random` takes `N D`.
    params: Vec<usize>,
    /// Facet probability for `random`.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderChoice {
    Lex,
}

#[derive(Subcommand, Debug)]
enum ShellCmd {
    /// Check a facet order against the shelling condition.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "order_file")]
        order: Option<OrderChoice>,
        /// File listing the facets in the order to check.
        #[arg(long)]
        order_file: Option<PathBuf>,
    },
    /// Search for a shelling order.
    Find {
        #[command(flatten)]
        input: Input,
        /// Only consider orders of weakly decreasing facet dimension.
        #[arg(long)]
        decreasing_dim: bool,
    },
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    vertices: usize,
    /// Scan this many seeded random complexes instead of all classes.
    #[arg(long)]
    samples: Option<usize>,
    /// Facet probability for sampled scans.
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    /// Write one file per class plus an index into this directory.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ObstructionCmd {
    /// Decide whether the complex is an obstruction to shellability.
    Test(Input),
    /// Smallest vertex set inducing a nonshellable subcomplex.
    Witness(Input),
    /// List obstruction classes of a dimension on a vertex count.
    Enumerate(EnumerateArgs),
}

#[derive(Subcommand, Debug)]
enum PurityCmd {
    /// Decide whether the complex is an obstruction to purity.
    Test(Input),
    /// List purity obstruction classes of a dimension on a vertex count.
    Enumerate(EnumerateArgs),
}

#[derive(Subcommand, Debug)]
enum PosetCmd {
    /// Report whether the poset is an interval order.
    CheckInterval(Input),
    /// Betti numbers of the proper part from the atom recursion.
    Betti(Input),
    /// Falling maximal chains.
    FallingChains(Input),
    /// Shelling of the order complex of the proper part.
    Shelling(Input),
    /// Check an atom ordering for the recursive atom ordering property.
    CheckRao {
        #[command(flatten)]
        input: Input,
        /// Comma-separated atoms; the canonical ordering when omitted.
        #[arg(long, value_delimiter = ',')]
        order: Vec<String>,
    },
}

/// Collected output: prose for people, pairs for `--machine`.
#[derive(Default)]
struct Out {
    text: String,
    pairs: Vec<(String, String)>,
    undecided: bool,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn kv(&mut self, k: impl Into<String>, v: impl ToString) {
        self.pairs.push((k.into(), v.to_string()));
    }

    fn render(&self, machine: bool) -> String {
        if !machine {
            return self.text.clone();
        }
        self.pairs.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

fn read_input(input: &Input) -> anyhow::Result<String> {
    match &input.file {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn read_complex(input: &Input) -> anyhow::Result<SimplicialComplex> {
    Ok(parse_complex(&read_input(input)?)?)
}

fn read_bounded(input: &Input) -> anyhow::Result<BoundedPoset> {
    Ok(parse_poset(&read_input(input)?)?.into_bounded())
}

fn faces_inline(faces: &[Face]) -> String {
    faces.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn order_inline(order: &ShellingOrder) -> String {
    order
        .facets()
        .iter()
        .map(|f| f.vertices().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn vertex_list(u: &[u32]) -> String {
    u.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn param(params: &[usize], i: usize, what: &str) -> anyhow::Result<usize> {
    params.get(i).copied().ok_or_else(|| anyhow!("missing parameter: {what}"))
}

fn gen(args: &GenArgs, seed: u64) -> anyhow::Result<String> {
    let p = &args.params;
    let complex = |k: SimplicialComplex| Ok(write_complex(&k));
    let bounded = |q: FinitePoset| Ok(write_bounded_poset(&q.bounded_extension()));
    match args.family {
        Family::MCycle => complex(families::m_cycle(param(p, 0, "n")?)?),
        Family::Prop1Obstruction => complex(families::prop1_obstruction(param(p, 0, "d")?)?),
        Family::Prop1J => complex(families::prop1_j(param(p, 0, "d")?)?),
        Family::PurityObstruction => complex(families::purity_obstruction(param(p, 0, "d")?)?),
        Family::DisjointEdges => complex(families::disjoint_edges()),
        Family::FiveVertex => complex(families::five_vertex_counterexample()),
        Family::BoundarySimplex => complex(families::boundary_of_simplex(param(p, 0, "n")?)?),
        Family::Rp2 => complex(families::projective_plane()),
        Family::Random => complex(families::random_complex(
            param(p, 0, "n")?,
            param(p, 1, "d")?,
            args.density,
            Seed(seed),
        )?),
        Family::IntervalOrder => bounded(random_interval_order(param(p, 0, "k")?, Seed(seed))?),
        Family::Antichain => {
            let names: Vec<String> = (1..=param(p, 0, "k")?).map(|i| format!("a{i}")).collect();
            bounded(FinitePoset::from_covers::<String>(&names, &[])?)
        }
        Family::Chain => {
            let names: Vec<String> = (1..=param(p, 0, "k")?).map(|i| format!("c{i}")).collect();
            let pairs: Vec<(String, String)> =
                names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
            bounded(FinitePoset::from_covers(&names, &pairs)?)
        }
        Family::Diamond => bounded(FinitePoset::from_covers::<&str>(&["a", "b"], &[])?),
    }
}

fn shell_check(input: &Input, order: Option<OrderChoice>, order_file: &Option<PathBuf>) -> anyhow::Result<Out> {
    let k = read_complex(input)?;
    let order = match (order, order_file) {
        (_, Some(path)) => parse_order(
            &std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?,
        )?,
        (Some(OrderChoice::Lex), None) | (None, None) => ShellingOrder::lex(&k),
    };
    let mut out = Out::default();
    match is_shelling(&k, &order)? {
        ShellingCheck::Valid => {
            out.line("shelling: valid");
            out.kv("result", "shelling");
        }
        ShellingCheck::Fails { step, intersection } => {
            let facet = &order.facets()[step - 1];
            out.line(format!(
                "not a shelling: step {step} adds {facet}, intersection {intersection} is not pure of dimension {}",
                facet.dim() - 1
            ));
            out.kv("result", "not-a-shelling");
            out.kv("step", step);
            out.kv("facet", facet);
            out.kv("intersection", faces_inline(intersection.facets()));
        }
    }
    Ok(out)
}

fn shell_find(input: &Input, budget: &SearchBudget, decreasing_dim: bool) -> anyhow::Result<Out> {
    let k = read_complex(input)?;
    let mut out = Out::default();
    match find_shelling(&k, budget, decreasing_dim)? {
        SearchOutcome::Certificate(cert) => {
            out.line("# shellable");
            out.text.push_str(&write_certificate(&cert));
            out.kv("result", "shellable");
            out.kv("order", order_inline(&cert.order));
        }
        SearchOutcome::NoShelling => {
            out.line("not shellable");
            out.kv("result", "not-shellable");
        }
        SearchOutcome::Undecided(why) => {
            out.line(format!("undecided: {why}"));
            out.kv("result", "undecided");
            out.kv("reason", why);
            out.undecided = true;
        }
    }
    Ok(out)
}

fn homology(input: &Input) -> anyhow::Result<Out> {
    let k = read_complex(input)?;
    let h = reduced_homology(&k)?;
    let mut out = Out::default();
    out.text.push_str(&h.to_string());
    for d in -1..=h.top_dim() {
        out.kv(format!("beta[{d}]"), h.betti(d));
        let t = h.torsion(d);
        if !t.is_empty() {
            out.kv(format!("torsion[{d}]"), t.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        }
    }
    out.kv("euler", h.reduced_euler_characteristic());
    Ok(out)
}

fn obstruction_report(r: &ObstructionReport, what: &str) -> Out {
    let mut out = Out::default();
    if !r.is_decided() {
        let why = r.reason.clone().unwrap_or_default();
        out.line(format!("{what}: undecided ({why})"));
        out.kv("verdict", "undecided");
        out.kv("reason", why);
        out.undecided = true;
        return out;
    }
    out.kv("verdict", r.verdict);
    match &r.witness {
        None => out.line(format!("{what}: true")),
        Some(Witness::Shelling(cert)) => {
            out.line(format!("{what}: false (the complex is shellable)"));
            out.text.push_str(&write_order(&cert.order));
            out.kv("witness", "shelling");
            out.kv("order", order_inline(&cert.order));
        }
        Some(Witness::Pure) => {
            out.line(format!("{what}: false (the complex is pure)"));
            out.kv("witness", "pure");
        }
        Some(Witness::Subset(u)) => {
            out.line(format!("{what}: false (induced subcomplex on {{{}}} fails)", u.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")));
            out.kv("witness", "subset");
            out.kv("subset", vertex_list(u));
        }
    }
    out
}

fn enumeration(args: &EnumerateArgs, budget: &SearchBudget, seed: u64, purity: bool) -> anyhow::Result<Out> {
    let mode = match args.samples {
        Some(samples) => EnumerationMode::Sampled { samples, seed: Seed(seed), density: args.density },
        None => EnumerationMode::Exhaustive,
    };
    let task = EnumerationTask { dimension: args.dim, vertex_count: args.vertices, budget: budget.clone(), mode };
    let report = if purity { enumerate_purity_obstructions(&task)? } else { enumerate_obstructions(&task)? };
    if let Some(dir) = &args.out_dir {
        write_report_dir(&report, dir)?;
    }
    Ok(enumeration_out(&report))
}

fn enumeration_out(r: &EnumerationReport) -> Out {
    let mut out = Out::default();
    out.line(format!(
        "dimension {}, {} vertices, {}{}: {} classes",
        r.dimension,
        r.vertex_count,
        r.provenance.as_str(),
        if r.complete { "" } else { " (incomplete)" },
        r.classes.len()
    ));
    out.kv("dimension", r.dimension);
    out.kv("vertices", r.vertex_count);
    out.kv("provenance", r.provenance.as_str());
    out.kv("complete", r.complete);
    out.kv("classes", r.classes.len());
    out.kv("examined", r.stats.examined);
    if !r.stats.hereditary_classes.is_empty() {
        let h = r.stats.hereditary_classes.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        out.line(format!("candidates examined: {}; hereditary classes by vertex count: {h}", r.stats.examined));
        out.kv("hereditary", h);
    } else {
        out.line(format!(
            "samples: {}; distinct classes: {}; on all vertices: {}; undecided: {}",
            r.stats.examined, r.stats.distinct_samples, r.stats.full_support_samples, r.stats.undecided
        ));
        out.kv("distinct", r.stats.distinct_samples);
        out.kv("full_support", r.stats.full_support_samples);
    }
    out.kv("undecided", r.stats.undecided);
    for (key, k) in &r.classes {
        out.line(format!("{} {}", key.digest(), k));
        out.kv("class", format!("{} {}", key.digest(), faces_inline(k.facets())));
    }
    out.undecided = !r.complete;
    out
}

fn poset_out(cmd: &PosetCmd) -> anyhow::Result<Out> {
    let mut out = Out::default();
    match cmd {
        PosetCmd::CheckInterval(input) => {
            let p = read_bounded(input)?;
            let po = p.poset();
            let proper: Vec<&str> = p.proper_part().iter().map(|&i| po.label(i)).collect();
            let inner = po.induced_subposet(&proper)?;
            match inner.contains_2plus2() {
                None => {
                    out.line("interval order: true");
                    out.kv("interval_order", true);
                }
                Some(w) => {
                    let [a, b, c, d] = w.elements().map(|i| inner.label(i).to_string());
                    out.line(format!("interval order: false ({a} < {b} and {c} < {d} form a 2+2)"));
                    out.kv("interval_order", false);
                    out.kv("two_plus_two", format!("{a}<{b} {c}<{d}"));
                }
            }
        }
        PosetCmd::Betti(input) => {
            let p = read_bounded(input)?;
            let betti = betti_interval_order(&p)?;
            let top = p.length().saturating_sub(2) as isize;
            for d in 0..=top {
                let b = betti.get(&d).copied().unwrap_or(0);
                out.line(format!("beta[{d}] = {b}"));
                out.kv(format!("beta[{d}]"), b);
            }
        }
        PosetCmd::FallingChains(input) => {
            let p = read_bounded(input)?;
            let set = falling_chains(&p)?;
            for c in &set.chains {
                out.line(c.join(" < "));
                out.kv("chain", c.join(" "));
            }
            for (len, n) in set.counts_by_length() {
                out.line(format!("length {len}: {n}"));
                out.kv(format!("count[{len}]"), n);
            }
        }
        PosetCmd::Shelling(input) => {
            let p = read_bounded(input)?;
            let order = prop10_shelling(&p)?;
            let po = p.poset();
            let named: Vec<String> = order
                .facets()
                .iter()
                .map(|f| f.vertices().iter().map(|&v| po.label(v as usize)).collect::<Vec<_>>().join(" "))
                .collect();
            for line in &named {
                out.line(line);
            }
            out.kv("order", named.join(";"));
        }
        PosetCmd::CheckRao { input, order } => {
            let p = read_bounded(input)?;
            let order = if order.is_empty() { atom_precedence(&p)?.linear_extension } else { order.clone() };
            let ok = verify_recursive_atom_ordering(&p, &order)?;
            out.line(format!("recursive atom ordering ({}): {ok}", order.join(",")));
            out.kv("order", order.join(","));
            out.kv("recursive_atom_ordering", ok);
        }
    }
    Ok(out)
}

fn budget(cli: &Cli) -> anyhow::Result<SearchBudget> {
    let time_limit = match cli.budget_time {
        None => None,
        Some(t) if t.is_finite() && t > 0.0 => Some(Duration::from_secs_f64(t)),
        Some(t) => bail!("--budget-time must be a positive number of seconds, got {t}"),
    };
    Ok(SearchBudget { max_facet_count_for_exact: cli.budget_facets, time_limit, ..SearchBudget::default() })
}

fn run(cli: &Cli) -> anyhow::Result<Out> {
    let budget = budget(cli)?;
    match &cli.command {
        Command::Gen(args) => {
            Ok(Out { text: gen(args, cli.seed)?, pairs: Vec::new(), undecided: false })
        }
        Command::Shell(ShellCmd::Check { input, order, order_file }) => shell_check(input, *order, order_file),
        Command::Shell(ShellCmd::Find { input, decreasing_dim }) => shell_find(input, &budget, *decreasing_dim),
        Command::Homology(input) => homology(input),
        Command::Obstruction(ObstructionCmd::Test(input)) => {
            Ok(obstruction_report(&is_obstruction(&read_complex(input)?, &budget)?, "obstruction"))
        }
        Command::Obstruction(ObstructionCmd::Witness(input)) => {
            let u = nonshellable_witness(&read_complex(input)?, &budget)?;
            let mut out = Out::default();
            out.line(format!("witness: {{{}}} ({} vertices)", u.iter().map(ToString::to_string).collect::<Vec<_>>().join(","), u.len()));
            out.kv("witness", vertex_list(&u));
            out.kv("size", u.len());
            Ok(out)
        }
        Command::Obstruction(ObstructionCmd::Enumerate(args)) => enumeration(args, &budget, cli.seed, false),
        Command::Purity(PurityCmd::Test(input)) => {
            Ok(obstruction_report(&is_purity_obstruction(&read_complex(input)?)?, "purity obstruction"))
        }
        Command::Purity(PurityCmd::Enumerate(args)) => enumeration(args, &budget, cli.seed, true),
        Command::Poset(cmd) => poset_out(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = if matches!(cli.command, Command::Gen(_)) { out.text.clone() } else { out.render(cli.machine) };
            if io::stdout().write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if out.undecided { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
