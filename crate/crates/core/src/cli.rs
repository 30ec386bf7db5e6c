use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use pultr::adjoints::{
    arc_graph, arc_graph_left, interleaved_adjoint, omega_odd_path, omega_oriented_path_labelled,
    power_functor, root_functor, BaseCondition,
};
use pultr::chromatic::{
    chromatic_number, circular_chromatic_number_bounded, circular_gallai_roy_check,
    gallai_roy_orientation, optimal_colouring, ColouringCertificate,
};
use pultr::duality::{
    minimal_path_sproink_specs, shift_graph, symmetric_shift_graph, verify_duality_with,
    DualityFailure, ObstructionFamily,
};
use pultr::graph::{
    oriented_path, parse_graph, serialize_graph, standard_family, symmetrization, to_dot, Digraph,
    Graph,
};
use pultr::hom::HomWitness;
use pultr::limits::{DEFAULT_BUDGET, DEFAULT_MAX_SIZE};
use pultr::pultr::{
    builtin_template, gamma_functor, lambda_functor, parse_template, PultrTemplate,
};
use pultr::suites::{run_suite, Suite};
use pultr::{Error, Limits, Result};

#[derive(Debug, Parser)]
#[command(
    name = "pultr",
    version,
    about = "Pultr functors, right adjoints and homomorphism checks on small graphs"
)]
pub struct Cli {
    /// Node budget for each homomorphism search.
    #[arg(long, global = true, env = "PULTR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Size guard on vertices+arcs of constructed graphs. Raising it above the
    /// default needs --unsafe-size.
    #[arg(long, global = true)]
    max_size: Option<u128>,
    /// Lift the size guard.
    #[arg(long, global = true)]
    unsafe_size: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file, or `-` for stdin.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Named family such as `cycle:5`, `complete:4`, `circular:7/3`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Debug, Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Emit DOT instead of an edge list.
    #[arg(long)]
    dot: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Functor {
    Lambda,
    Gamma,
    Omega,
    Delta,
    DeltaLeft,
    Iota,
    Power,
    Root,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Condition {
    LastToBase,
    BaseToLast,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a functor to a graph.
    Apply {
        #[arg(long, value_enum)]
        functor: Functor,
        /// Builtin template name (`t3`, `lex-k2`, `arc`, `iota:2`, `opath:↑↓`, ...).
        #[arg(long, conflicts_with = "template_file")]
        template: Option<String>,
        /// Template file.
        #[arg(long)]
        template_file: Option<PathBuf>,
        /// `m` for `iota`.
        #[arg(long)]
        m: Option<usize>,
        /// `s` for `power` and `root`.
        #[arg(long)]
        s: Option<usize>,
        /// `r` for `power` and `root`.
        #[arg(long)]
        r: Option<usize>,
        /// Base rule for oriented-path `omega`.
        #[arg(long, value_enum, default_value = "last-to-base")]
        condition: Condition,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Chromatic number with an optimal colouring.
    Chi {
        #[command(flatten)]
        input: Input,
        /// Write the colouring here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Circular chromatic number with a witness map into `K_{n/m}`.
    ChiC {
        #[command(flatten)]
        input: Input,
        /// Largest denominator to try (default: the order).
        #[arg(long)]
        max_den: Option<u32>,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Orientation with no directed path on `k + 1` vertices.
    GallaiRoy {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Orientation avoiding the reversal paths of `K_{n/m}`.
    CircularGr {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named theorem suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        nmax: Option<usize>,
        /// Write the counterexample here on failure.
        #[arg(long)]
        artifact: Option<PathBuf>,
    },
    /// Shift graph `R(n, k)`, or `R′(n, k)` with --undirected.
    Shift {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        undirected: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Minimal sproinks of the directed path with `k` arcs.
    Sproinks {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_len: usize,
        /// Print each sproink as an edge list.
        #[arg(long)]
        edge_lists: bool,
    },
    /// Check a homomorphism duality on every digraph up to `nmax` vertices.
    VerifyDuality {
        /// Target digraph.
        #[command(flatten)]
        input: Input,
        /// Obstruction edge-list files.
        #[arg(long = "obstruction")]
        obstructions: Vec<PathBuf>,
        /// Use the minimal sproinks of the directed path with this many arcs.
        #[arg(long, conflicts_with = "obstructions")]
        sproinks: Option<usize>,
        /// Truncation length for --sproinks.
        #[arg(long, default_value_t = 12)]
        length: usize,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Check one digraph per isomorphism class.
        #[arg(long)]
        iso_reject: bool,
        #[arg(long)]
        artifact: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Refuted,
    Guard,
    Error,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Refuted => 1,
            Status::Guard => 2,
            Status::Error => 3,
        }
    }

    fn word(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Refuted => "refuted",
            Status::Guard => "guard",
            Status::Error => "error",
        }
    }
}

/// What a subcommand produced: the verdict, its fields, the stdout body and
/// a report for stderr.
pub struct Outcome {
    pub status: Status,
    pub subcommand: &'static str,
    pub fields: Vec<(String, String)>,
    pub body: String,
    pub report: String,
}

impl Outcome {
    fn new(subcommand: &'static str) -> Self {
        Outcome {
            status: Status::Ok,
            subcommand,
            fields: Vec::new(),
            body: String::new(),
            report: String::new(),
        }
    }

    fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((
            key.to_string(),
            value.to_string().replace(char::is_whitespace, "_"),
        ));
        self
    }

    pub fn verdict_line(&self) -> String {
        let mut line = format!("# verdict: {} {}", self.status.word(), self.subcommand);
        for (k, v) in &self.fields {
            let _ = write!(line, " {k}={v}");
        }
        line
    }
}

impl Cli {
    pub fn workers(&self) -> Option<usize> {
        self.workers
    }

    fn limits(&self) -> Result<Limits> {
        let mut limits = Limits::default().with_budget(self.budget);
        if self.unsafe_size {
            limits = limits.unbounded_size();
        }
        if let Some(max) = self.max_size {
            if max > DEFAULT_MAX_SIZE && !self.unsafe_size {
                return Err(Error::Parameter(format!(
                    "--max-size above {DEFAULT_MAX_SIZE} needs --unsafe-size"
                )));
            }
            limits = limits.with_max_size(max);
        }
        Ok(limits)
    }

    fn subcommand(&self) -> &'static str {
        match self.command {
            Command::Apply { .. } => "apply",
            Command::Chi { .. } => "chi",
            Command::ChiC { .. } => "chi-c",
            Command::GallaiRoy { .. } => "gallai-roy",
            Command::CircularGr { .. } => "circular-gr",
            Command::Verify { .. } => "verify",
            Command::Shift { .. } => "shift",
            Command::Sproinks { .. } => "sproinks",
            Command::VerifyDuality { .. } => "verify-duality",
        }
    }
}

/// Runs the command; errors become `guard` or `error` verdicts.
pub fn run(cli: &Cli) -> Outcome {
    let name = cli.subcommand();
    match cli.limits().and_then(|l| dispatch(cli, &l)) {
        Ok(outcome) => outcome,
        Err(e) => {
            let status = if e.is_resource_limit() {
                Status::Guard
            } else {
                Status::Error
            };
            let kind = match &e {
                Error::Parameter(_) => "parameter",
                Error::SizeGuard { .. } => "size-guard",
                Error::Budget { .. } => "budget",
                Error::Parse { .. } => "parse",
                Error::Template(_) => "template",
                Error::Precondition(_) => "precondition",
                Error::Cap(_) => "cap",
            };
            let mut o = Outcome::new(name).field("reason", kind);
            o.status = status;
            o.report = format!("error: {e}");
            o
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parameter(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))
}

impl Input {
    fn load(&self) -> Result<Digraph> {
        match (&self.input, &self.family) {
            (Some(path), _) => parse_graph(&read_text(path)?),
            (None, Some(spec)) => standard_family(spec),
            (None, None) => Err(Error::Parameter("give --input or --family".into())),
        }
    }

    fn load_graph(&self) -> Result<Graph> {
        Graph::try_from(self.load()?)
            .map_err(|_| Error::Precondition("input must be an undirected graph".into()))
    }

    fn label(&self) -> String {
        match (&self.input, &self.family) {
            (Some(p), _) => p.display().to_string(),
            (None, Some(s)) => s.clone(),
            _ => String::new(),
        }
    }
}

impl Output {
    /// Puts the graph in the outcome body, or in a file.
    fn emit(&self, outcome: &mut Outcome, d: &Digraph) -> Result<()> {
        let text = if self.dot {
            to_dot(d)
        } else {
            serialize_graph(d)
        };
        match &self.output {
            Some(path) => write_text(path, &text),
            None => {
                outcome.body.push_str(&text);
                Ok(())
            }
        }
    }
}

fn map_lines(w: &HomWitness) -> String {
    w.map()
        .iter()
        .enumerate()
        .map(|(u, c)| format!("{u} {c}\n"))
        .collect()
}

fn template(name: &Option<String>, file: &Option<PathBuf>) -> Result<PultrTemplate> {
    match (name, file) {
        (Some(n), _) => builtin_template(n),
        (None, Some(p)) => parse_template(&read_text(p)?),
        (None, None) => Err(Error::Parameter(
            "this functor needs --template or --template-file".into(),
        )),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parameter(format!("missing --{flag}")))
}

fn dispatch(cli: &Cli, limits: &Limits) -> Result<Outcome> {
    match &cli.command {
        Command::Apply {
            functor,
            template: name,
            template_file,
            m,
            s,
            r,
            condition,
            input,
            output,
        } => {
            let g = input.load()?;
            let mut o =
                Outcome::new("apply").field("functor", format!("{functor:?}").to_lowercase());
            let result = match functor {
                Functor::Lambda | Functor::Gamma => {
                    let t = template(name, template_file)?;
                    o = o.field("template", t.name());
                    if matches!(functor, Functor::Lambda) {
                        lambda_functor(&t, &g, limits)?
                    } else {
                        gamma_functor(&t, &g, limits)?
                    }
                }
                Functor::Omega => {
                    let n = need(name.as_deref(), "template")?;
                    o = o.field("template", n);
                    omega(n, &g, *condition, limits)?
                }
                Functor::Delta => arc_graph(&g, limits)?,
                Functor::DeltaLeft => arc_graph_left(&g),
                Functor::Iota => {
                    let m = need(*m, "m")?;
                    o = o.field("m", m);
                    interleaved_adjoint(m, &g, limits)?
                }
                Functor::Power | Functor::Root => {
                    let (s, r) = (need(*s, "s")?, need(*r, "r")?);
                    o = o.field("s", s).field("r", r);
                    let g = undirected(g)?;
                    if matches!(functor, Functor::Power) {
                        power_functor(s, r, &g, limits)?.into_digraph()
                    } else {
                        root_functor(r, s, &g, limits)?.into_digraph()
                    }
                }
            };
            o = o
                .field("order", result.order())
                .field("arcs", result.arc_count());
            output.emit(&mut o, &result)?;
            Ok(o)
        }
        Command::Chi { input, witness } => {
            let g = input.load()?;
            let (k, w) = optimal_colouring(&symmetrization(&g), limits)?;
            let mut o = Outcome::new("chi")
                .field("input", input.label())
                .field("value", k);
            let lines = map_lines(&w);
            match witness {
                Some(p) => write_text(p, &lines)?,
                None => o.body = lines,
            }
            Ok(o)
        }
        Command::ChiC {
            input,
            max_den,
            witness,
        } => {
            let g = input.load_graph()?;
            let den = max_den.unwrap_or(g.order().max(1) as u32);
            let (value, w) = circular_chromatic_number_bounded(&g, den, limits)?;
            let mut o = Outcome::new("chi-c")
                .field("input", input.label())
                .field("value", value);
            let lines = map_lines(&w);
            match witness {
                Some(p) => write_text(p, &lines)?,
                None => o.body = lines,
            }
            o.report = format!("{value}");
            Ok(o)
        }
        Command::GallaiRoy { input, k, output } => {
            let g = input.load_graph()?;
            let mut o = Outcome::new("gallai-roy")
                .field("input", input.label())
                .field("k", k);
            match gallai_roy_orientation(&g, *k, limits)? {
                Some(cert) => emit_certificate(&mut o, &cert, output)?,
                None => {
                    o.status = Status::Refuted;
                    o.report =
                        format!("no orientation avoids a directed path with {k} arcs; χ > {k}");
                    let chi = chromatic_number(&g, limits)?;
                    o = o.field("chi", chi);
                }
            }
            Ok(o)
        }
        Command::CircularGr {
            input,
            n,
            m,
            output,
        } => {
            let g = input.load_graph()?;
            let mut o = Outcome::new("circular-gr")
                .field("input", input.label())
                .field("ratio", format!("{n}/{m}"));
            match circular_gallai_roy_check(&g, *n, *m, limits)? {
                Some(cert) => {
                    if !cert.verify(&g, limits)? {
                        return Err(Error::Precondition(
                            "certificate failed verification".into(),
                        ));
                    }
                    emit_certificate(&mut o, &cert, output)?;
                }
                None => {
                    o.status = Status::Refuted;
                    o.report = format!("G has no homomorphism to K_{n}/{m} and no orientation avoids the reversal paths");
                }
            }
            Ok(o)
        }
        Command::Verify {
            suite,
            nmax,
            artifact,
        } => {
            let s: Suite = suite.parse()?;
            let r = run_suite(s, *nmax, limits)?;
            let mut o = Outcome::new("verify").field("suite", s.name());
            for (k, v) in &r.params {
                o = o.field(k, v);
            }
            o = o.field("cases", r.cases);
            if let Some(f) = &r.failure {
                o.status = Status::Refuted;
                o.report = format!("counterexample:\n{f}");
                match artifact {
                    Some(p) => write_text(p, f)?,
                    None => o.body = f.clone(),
                }
            }
            Ok(o)
        }
        Command::Shift {
            n,
            k,
            undirected,
            output,
        } => {
            let d = if *undirected {
                symmetric_shift_graph(*n, *k, limits)?.into_digraph()
            } else {
                shift_graph(*n, *k, limits)?
            };
            let mut o = Outcome::new("shift")
                .field("n", n)
                .field("k", k)
                .field("undirected", undirected)
                .field("order", d.order());
            output.emit(&mut o, &d)?;
            Ok(o)
        }
        Command::Sproinks {
            k,
            max_len,
            edge_lists,
        } => {
            let specs = minimal_path_sproink_specs(*k, *max_len)?;
            let mut o = Outcome::new("sproinks")
                .field("k", k)
                .field("max_len", max_len)
                .field("count", specs.len());
            for s in &specs {
                if *edge_lists {
                    let _ = writeln!(o.body, "# {s}");
                    o.body.push_str(&serialize_graph(&oriented_path(s)));
                    o.body.push('\n');
                } else {
                    let _ = writeln!(o.body, "{s}");
                }
            }
            Ok(o)
        }
        Command::VerifyDuality {
            input,
            obstructions,
            sproinks,
            length,
            nmax,
            iso_reject,
            artifact,
        } => {
            let h = input.load()?;
            let family = match sproinks {
                Some(k) => ObstructionFamily::path_sproinks(*k, *length),
                None => {
                    if obstructions.is_empty() {
                        return Err(Error::Parameter(
                            "give --obstruction files or --sproinks".into(),
                        ));
                    }
                    ObstructionFamily::Finite(
                        obstructions
                            .iter()
                            .map(|p| parse_graph(&read_text(p)?))
                            .collect::<Result<_>>()?,
                    )
                }
            };
            let r = verify_duality_with(&family, &h, *nmax, *iso_reject, limits)?;
            let mut o = Outcome::new("verify-duality")
                .field("nmax", nmax)
                .field("members", r.members)
                .field("checked", r.checked);
            if let Some(l) = r.length {
                o = o.field("length", l).field("escalated", r.escalated);
            }
            if let Some(c) = &r.counterexample {
                o.status = Status::Refuted;
                let why = match &c.failure {
                    DualityFailure::Uncovered => {
                        "G does not map to H and no obstruction maps to G".to_string()
                    }
                    DualityFailure::Both { obstruction, .. } => {
                        format!("obstruction {obstruction} maps to G and G maps to H")
                    }
                };
                o.report = format!("counterexample: {why}");
                let text = serialize_graph(&c.graph);
                match artifact {
                    Some(p) => write_text(p, &text)?,
                    None => o.body = text,
                }
            }
            Ok(o)
        }
    }
}

fn undirected(d: Digraph) -> Result<Graph> {
    Graph::try_from(d).map_err(|_| Error::Precondition("input must be an undirected graph".into()))
}

fn omega(name: &str, g: &Digraph, condition: Condition, limits: &Limits) -> Result<Digraph> {
    if let Some(dirs) = name.strip_prefix("opath:") {
        let cond = match condition {
            Condition::LastToBase => BaseCondition::LastToBase,
            Condition::BaseToLast => BaseCondition::BaseToLast,
        };
        return omega_oriented_path_labelled(&dirs.parse()?, g, cond, limits).map(|(d, _)| d);
    }
    let m = name
        .strip_prefix('t')
        .and_then(|m| m.parse::<usize>().ok())
        .ok_or_else(|| {
            Error::Parameter(format!(
                "omega needs --template t<m> or opath:<dirs>, got {name:?}"
            ))
        })?;
    Ok(omega_odd_path(m, &undirected(g.clone())?, limits)?.into_digraph())
}

fn emit_certificate(o: &mut Outcome, cert: &ColouringCertificate, output: &Output) -> Result<()> {
    match cert {
        ColouringCertificate::Orientation { spec, oriented, .. } => {
            o.fields.push(("orientation".into(), spec.to_string()));
            output.emit(o, oriented)
        }
        ColouringCertificate::Colouring { target, witness } => {
            o.fields.push(("colouring".into(), target.to_string()));
            o.body = map_lines(witness);
            Ok(())
        }
    }
}
