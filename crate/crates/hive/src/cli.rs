//! The `hive` command line.
//!
//! Exit codes: 0 on success, 1 on domain errors (invalid partitions, empty
//! polytopes, malformed input files), 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use hive_core::bijection::{
    bottom_differences, contratableau_to_hive, hive_to_chain, hive_to_contratableau,
};
use hive_core::enumeration::{enumerate_integral_hives, lr_coefficient, LRQuery};
use hive_core::hive::{check_labeling, is_hive, is_integral, is_regular_border, Labeling};
use hive_core::polytope::{
    build_hive_graph, find_increasable_subset, flatspaces, is_acyclic, is_corner, maximize_generic,
    peel_integer_coefficients,
};
use hive_core::tableau::{enumerate_lr_skew, SkewShape};
use hive_core::{HiveError, Partition};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::json::{
    count_value, flatspace_value, forms_value, graph_value, labeling_from_value, labeling_value,
    partition_value, report_value, skew_tableau_value, ContraTableauJson,
};
use crate::suites::{self, Suite, SuiteConfig};

/// Seed recorded by randomized subcommands when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(
    name = "hive",
    version,
    about = "Littlewood-Richardson coefficients and hive polytopes, computed exactly"
)]
pub struct Cli {
    /// Emit JSON on stdout; with PATH, write the JSON there instead and keep
    /// the human summary on stdout. `-` means stdout.
    #[arg(
        long,
        global = true,
        num_args = 0..=1,
        default_missing_value = "-",
        value_name = "PATH"
    )]
    pub json: Option<PathBuf>,
    /// Seed for randomized subcommands (default 42; always reported).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Side size of the hive triangle.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count integral hives with the border of (lambda, mu, nu).
    Lr {
        #[command(flatten)]
        triple: TripleArgs,
        /// Stream every hive as one JSON labeling per line.
        #[arg(long)]
        list: bool,
    },
    /// Count LR skew tableaux of shape OUTER/INNER with the given content.
    Oracle {
        /// Skew shape such as 3,2,1/2,1.
        #[arg(long)]
        shape: String,
        /// Content partition such as 2,1.
        #[arg(long)]
        content: String,
        /// Print every tableau as JSON rows, null in inner cells.
        #[arg(long)]
        list: bool,
    },
    /// Convert between integral hives and contratableaux.
    #[command(group(ArgGroup::new("input").required(true).args(["from_hive", "from_tableau"])))]
    Bijection {
        /// Labeling JSON file.
        #[arg(long, value_name = "FILE")]
        from_hive: Option<PathBuf>,
        /// Contratableau JSON file; needs mu and n from flags or the file.
        #[arg(long, value_name = "FILE")]
        from_tableau: Option<PathBuf>,
        /// The bottom partition, such as 4,4,3,2.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Inspect a labeling: rhombus check plus the requested sections.
    Analyze {
        /// Labeling JSON file.
        file: PathBuf,
        /// Flatspaces with their shapes and sides.
        #[arg(long)]
        flatspaces: bool,
        /// The hive graph, its acyclicity and the peeled linear forms.
        #[arg(long)]
        graph: bool,
        /// Whether the labeling is a corner of its hive polytope.
        #[arg(long)]
        corner: bool,
        /// An increasable subset, if one exists.
        #[arg(long)]
        increasable: bool,
    },
    /// Maximize a random generic positive functional over the hive polytope.
    Maximize {
        #[command(flatten)]
        triple: TripleArgs,
        /// Functionals to try before giving up on genericity.
        #[arg(long, default_value_t = 16)]
        attempts: usize,
    },
    /// Run a verification suite and report failures.
    Verify {
        /// One of saturation, semigroup, corners, fulton, maximizer.
        #[arg(long)]
        suite: Suite,
        /// Largest |nu| in exhaustive ranges.
        #[arg(long, default_value_t = 8)]
        max_size: u64,
        /// Largest scaling factor N.
        #[arg(long, default_value_t = 4)]
        scale: u64,
        /// Random draws for sampled suites.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Ceiling on N * |nu| for the fulton suite.
        #[arg(long, default_value_t = hive_core::saturation::FULTON_BUDGET)]
        budget: u64,
        /// Write a witness labeling, if any, to this file.
        #[arg(long, value_name = "FILE")]
        witness: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    /// Comma-separated weakly decreasing parts, such as 2,1.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Second partition, read right to left along the bottom edge.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// Partition of |lambda| + |mu| along the left edge.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
}

/// A domain error: reported on stderr with exit code 1.
#[derive(Debug)]
pub struct Failure(pub String);

impl From<HiveError> for Failure {
    fn from(e: HiveError) -> Self {
        Failure(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `3,2,1`; an empty string or `0` is the empty partition.
pub fn parse_partition(name: &str, s: &str) -> Result<Partition, Failure> {
    let s = s.trim();
    let parts = if s.is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Failure(format!("{name}: {p:?} is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
        return Err(Failure(format!(
            "{name}: parts must be weakly decreasing, but {} is followed by {}",
            w[0], w[1]
        )));
    }
    Partition::new(parts).map_err(|e| Failure(format!("{name}: {e}")))
}

fn parse_triple(t: &TripleArgs, n: Option<usize>) -> Result<LRQuery, Failure> {
    Ok(LRQuery::new(
        parse_partition("lambda", &t.lambda)?,
        parse_partition("mu", &t.mu)?,
        parse_partition("nu", &t.nu)?,
        n,
    ))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_labeling(path: &Path) -> Result<Labeling, Failure> {
    labeling_from_value(&read_json(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

pub fn labeling_table(h: &Labeling) -> String {
    h.rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let labels: Vec<String> = row.iter().map(ToString::to_string).collect();
            format!("row {}: {}", i + 1, labels.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

struct Output<'a> {
    json: Option<&'a Path>,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit(&mut self, value: Value, human: &str) -> Result<(), Failure> {
        match self.json {
            None => writeln!(self.out, "{human}")?,
            Some(path) if path == Path::new("-") => writeln!(self.out, "{value}")?,
            Some(path) => {
                let text = serde_json::to_string_pretty(&value).expect("plain data");
                fs::write(path, text + "\n")
                    .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
                writeln!(self.out, "{human}")?;
            }
        }
        Ok(())
    }

    fn line(&mut self, value: &Value) -> Result<(), Failure> {
        writeln!(self.out, "{value}")?;
        Ok(())
    }
}

const SUBCOMMANDS: [&str; 7] = [
    "lr",
    "oracle",
    "bijection",
    "analyze",
    "maximize",
    "verify",
    "help",
];

/// `--json` directly before a subcommand name means stdout, not a file
/// called `lr`.
fn bare_json_flags<I, T>(args: I) -> Vec<OsString>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    for j in 0..args.len() {
        let next_is_command = args
            .get(j + 1)
            .and_then(|a| a.to_str())
            .is_some_and(|a| SUBCOMMANDS.contains(&a));
        if args[j] == "--json" && next_is_command {
            args[j] = "--json=-".into();
        }
    }
    args
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(bare_json_flags(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut o = Output {
        json: cli.json.as_deref(),
        out,
    };
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::Lr { triple, list } => {
            let q = parse_triple(triple, cli.n)?;
            let c = lr_coefficient(&q)?;
            if *list {
                if q.sizes_match() {
                    for h in enumerate_integral_hives(&q.border()?) {
                        o.line(&labeling_value(&h))?;
                    }
                }
                return Ok(0);
            }
            let value = json!({
                "lambda": partition_value(&q.lambda),
                "mu": partition_value(&q.mu),
                "nu": partition_value(&q.nu),
                "n": q.n,
                "coefficient": count_value(&c),
            });
            o.emit(value, &c.to_string())?;
        }
        Command::Oracle {
            shape,
            content,
            list,
        } => {
            let (outer, inner) = shape.split_once('/').unwrap_or((shape, ""));
            let outer = parse_partition("shape", outer)?;
            let inner = parse_partition("shape", inner)?;
            let content = parse_partition("content", content)?;
            let skew = SkewShape::new(outer.clone(), inner.clone())?;
            let tableaux = if skew.size() == content.size() {
                enumerate_lr_skew(&skew, &content)?
            } else {
                Vec::new()
            };
            if *list {
                for t in &tableaux {
                    o.line(&skew_tableau_value(t))?;
                }
                return Ok(0);
            }
            let value = json!({
                "outer": partition_value(&outer),
                "inner": partition_value(&inner),
                "content": partition_value(&content),
                "count": tableaux.len(),
            });
            o.emit(value, &tableaux.len().to_string())?;
        }
        Command::Bijection {
            from_hive,
            from_tableau,
            mu,
        } => {
            if let Some(path) = from_hive {
                let h = read_labeling(path)?;
                if !is_integral(&h) {
                    return Err(HiveError::NotIntegral.into());
                }
                let chain = hive_to_chain(&h)?;
                let t = hive_to_contratableau(&h)?;
                let mu = bottom_differences(&h)
                    .into_iter()
                    .map(|d| {
                        d.to_u64()
                            .ok_or_else(|| Failure(format!("negative bottom difference {d}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let mu = Partition::new(mu).map_err(|e| Failure(format!("mu: {e}")))?;
                let value =
                    serde_json::to_value(ContraTableauJson::new(&t, &mu, h.n(), Some(&chain)))
                        .expect("plain data");
                let human = format!(
                    "T = {:?} (rows from the bottom)\nword = {}\nmu = {}",
                    t.rows(),
                    t.word()
                        .0
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                    mu
                );
                o.emit(value, &human)?;
            } else if let Some(path) = from_tableau {
                let file: ContraTableauJson =
                    serde_json::from_value(read_json(path)?).map_err(|e| {
                        Failure(format!("{}: not a contratableau: {e}", path.display()))
                    })?;
                let t = file.to_contratableau()?;
                let mu = match (mu, &file.mu) {
                    (Some(s), _) => parse_partition("mu", s)?,
                    (None, Some(parts)) => {
                        Partition::new(parts.clone()).map_err(|e| Failure(format!("mu: {e}")))?
                    }
                    (None, None) => {
                        return Err(Failure("mu is required (--mu or the file)".into()))
                    }
                };
                let n = cli
                    .n
                    .or(file.n)
                    .ok_or_else(|| Failure("n is required (--n or the file)".into()))?;
                let h = contratableau_to_hive(&t, &mu, n)?;
                o.emit(labeling_value(&h), &labeling_table(&h))?;
            }
        }
        Command::Analyze {
            file,
            flatspaces: want_flat,
            graph,
            corner,
            increasable,
        } => {
            let h = read_labeling(file)?;
            return analyze(&h, *want_flat, *graph, *corner, *increasable, &mut o);
        }
        Command::Maximize { triple, attempts } => {
            let q = parse_triple(triple, cli.n)?;
            if !q.sizes_match() {
                return Err(HiveError::EmptyPolytope.into());
            }
            let b = q.border()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (h, omega) = maximize_generic(&b, &mut rng, *attempts)?;
            let mut value = labeling_value(&h);
            value["seed"] = json!(seed);
            value["functional"] = Value::Object(
                omega
                    .coefficients()
                    .iter()
                    .map(|(c, w)| (c.to_string(), json!(w.to_string())))
                    .collect(),
            );
            o.emit(value, &format!("{}\nseed: {seed}", labeling_table(&h)))?;
        }
        Command::Verify {
            suite,
            max_size,
            scale,
            samples,
            budget,
            witness,
        } => {
            let cfg = SuiteConfig {
                n: cli.n.unwrap_or(3),
                max_size: *max_size,
                seed,
                scale: *scale,
                samples: *samples,
                budget: *budget,
            };
            let outcome = suites::run(*suite, &cfg);
            if let (Some(path), Some(w)) = (witness, &outcome.witness) {
                let text = serde_json::to_string_pretty(&labeling_value(w)).expect("plain data");
                fs::write(path, text + "\n")
                    .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
            }
            let r = &outcome.report;
            let mut human = format!(
                "{suite}: {} ({} samples, {} failures, {} findings, seed {seed})",
                if r.passed() { "passed" } else { "FAILED" },
                r.samples,
                r.failures.len(),
                r.findings.len(),
            );
            for f in &r.failures {
                human.push_str(&format!("\n  failure: {}", f.detail));
            }
            if let Some(w) = &outcome.witness {
                human.push_str(&format!("\nwitness:\n{}", labeling_table(w)));
            }
            o.emit(report_value(r, outcome.witness.as_ref()), &human)?;
            return Ok(if r.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn analyze(
    h: &Labeling,
    want_flat: bool,
    want_graph: bool,
    want_corner: bool,
    want_increasable: bool,
    o: &mut Output<'_>,
) -> Result<i32, Failure> {
    let violations = check_labeling(h);
    let hive = violations.is_empty();
    let mut value = json!({
        "n": h.n(),
        "hive": hive,
        "integral": is_integral(h),
        "regular_border": is_regular_border(&h.border()),
        "violations": violations
            .iter()
            .map(|v| json!({"rhombus": v.rhombus.to_string(), "deficit": v.deficit.to_string()}))
            .collect::<Vec<_>>(),
    });
    let mut human = vec![format!(
        "hive: {hive} ({} violations), integral: {}, regular border: {}",
        violations.len(),
        is_integral(h),
        is_regular_border(&h.border())
    )];
    for v in &violations {
        human.push(format!("  {} short by {}", v.rhombus, v.deficit));
    }
    let needs_hive = want_flat || want_graph || want_corner || want_increasable;
    if needs_hive && !is_hive(h) {
        o.emit(value, &human.join("\n"))?;
        return Err(Failure(
            "the requested analysis needs a hive; the labeling violates rhombus inequalities"
                .into(),
        ));
    }
    if want_flat {
        let fs = flatspaces(h);
        value["flatspaces"] = json!(fs.iter().map(flatspace_value).collect::<Vec<_>>());
        human.push(format!("flatspaces: {}", fs.len()));
        for f in &fs {
            human.push(format!(
                "  {} with sides {:?}: {}",
                f.shape,
                f.side_lengths(),
                f.triangles
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
        }
    }
    if want_graph {
        match build_hive_graph(h) {
            Ok(g) => {
                let acyclic = is_acyclic(&g);
                let mut section = graph_value(&g);
                section["acyclic"] = json!(acyclic);
                human.push(format!(
                    "graph: {} blue, {} red, {} edges, acyclic: {acyclic}",
                    g.blues.len(),
                    g.reds.len(),
                    g.edges.len()
                ));
                if acyclic {
                    match peel_integer_coefficients(&g, h) {
                        Ok(forms) => {
                            for (c, f) in &forms {
                                human.push(format!("  {c} = {f}"));
                            }
                            section["forms"] = forms_value(&forms);
                        }
                        Err(e) => {
                            section["peel_error"] = json!(e.to_string());
                            human.push(format!("  peeling failed: {e}"));
                        }
                    }
                }
                value["graph"] = section;
            }
            Err(e) => {
                value["graph"] = json!({"error": e.to_string()});
                human.push(format!("graph: {e}"));
            }
        }
    }
    if want_corner {
        let c = is_corner(h);
        value["corner"] = json!(c);
        human.push(format!("corner: {c}"));
    }
    if want_increasable {
        let s = find_increasable_subset(h);
        value["increasable"] = match &s {
            Some(vs) => json!(vs.iter().map(ToString::to_string).collect::<Vec<_>>()),
            None => Value::Null,
        };
        human.push(match &s {
            Some(vs) => format!(
                "increasable subset: {}",
                vs.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            None => "increasable subset: none".into(),
        });
    }
    o.emit(value, &human.join("\n"))?;
    Ok(0)
}
