use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use iasi_core::audit::{self, AuditRow, Identity, Verdict};
use iasi_core::closed_forms::FormulaId;
use iasi_core::export::to_dot;
use iasi_core::graph::{intersection, join, ring_sum, subtract, union};
use iasi_core::solver::{construct_weak_iasi, DEFAULT_EXHAUSTIVE_CAP};
use iasi_core::{
    sparing, verify, AlgorithmChoice, Error, FamilySpec, Graph, Labeling, SparingOptions, Support,
    VertexId,
};

#[derive(Parser)]
#[command(
    name = "iasi",
    version,
    about = "Set-indexers, sparing numbers and closed-form audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family as JSON
    Gen(GenArgs),
    /// Combine two graphs
    Op(OpArgs),
    /// Compute the sparing number with a witness support
    Sparing(SparingArgs),
    /// Build a weak set-indexer from an independent support
    Label(LabelArgs),
    /// Check a labeling; exits 2 if it is not a set-indexer
    Verify(VerifyArgs),
    /// Compare closed forms against the exact solver
    #[command(subcommand)]
    Audit(AuditCommand),
    /// Write Graphviz DOT
    ExportDot(ExportDotArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Trivial,
    Wheel,
    Fan,
    Cone,
    Tent,
    Friendship,
    PathFriendship,
    ClosedFriendship,
    Windmill,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    len: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Union,
    Intersect,
    Join,
    Ringsum,
    Subtract,
}

#[derive(Args)]
struct OpArgs {
    kind: OpKind,
    /// First graph (`-` for stdin)
    a: String,
    /// Second graph (`-` for stdin)
    b: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Exhaustive,
    Bb,
}

#[derive(Args)]
struct SparingArgs {
    /// Graph JSON (`-` for stdin)
    graph: String,
    /// Defaults to exhaustive up to 16 vertices, branch and bound above
    #[arg(long, value_enum)]
    algorithm: Option<AlgorithmArg>,
    /// Include a weak set-indexer realising the witness
    #[arg(long)]
    with_labeling: bool,
    /// Report the lexicographically smallest optimal support
    #[arg(long)]
    canonical_witness: bool,
    /// Vertex limit for the exhaustive solver
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    exhaustive_cap: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct LabelArgs {
    graph: String,
    /// Comma-separated support vertices (may be empty)
    #[arg(long, default_value = "")]
    support: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    graph: String,
    labeling: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportDotArgs {
    graph: String,
    labeling: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Write CSV here instead of stdout
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Also write a Markdown report
    #[arg(long)]
    md: Option<PathBuf>,
    /// Record wall-clock runtimes instead of zeros
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum AuditCommand {
    /// Every family formula on instances up to a vertex budget
    Families {
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        /// Restrict to these families (repeatable)
        #[arg(long = "family")]
        families: Vec<String>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Union, ring-sum and complement identities on fixed and random pairs
    Identities {
        #[arg(long, default_value_t = 30)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Archive mismatching instances as JSON in this directory
        #[arg(long)]
        counterexamples: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Ring sums of two cycles sharing a path
    RingsumCycles {
        #[arg(long, default_value_t = 8)]
        max_cycle: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = match error.downcast_ref::<Error>() {
            Some(Error::NotSubgraph | Error::NotIndependent(..)) => 2,
            Some(Error::TooLarge { .. }) => 3,
            _ => 1,
        };
        Failure { code, error }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn read_source(src: &str) -> anyhow::Result<String> {
    if src == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(src).with_context(|| format!("reading {src}"))
    }
}

fn read_graph(src: &str) -> anyhow::Result<Graph> {
    let text = read_source(src)?;
    Graph::from_json_str(&text).with_context(|| format!("parsing graph {src}"))
}

fn read_labeling(src: &str) -> anyhow::Result<Labeling> {
    let text = read_source(src)?;
    Labeling::from_json_str(&text).with_context(|| format!("parsing labeling {src}"))
}

fn same_file(a: &Path, b: &Path) -> bool {
    let norm = |p: &Path| {
        fs::canonicalize(p).unwrap_or_else(|_| std::path::absolute(p).unwrap_or(p.to_path_buf()))
    };
    norm(a) == norm(b)
}

/// Rejects outputs that would overwrite an input or each other.
fn check_collisions(inputs: &[&str], outputs: &[Option<&PathBuf>]) -> anyhow::Result<()> {
    let outs: Vec<&PathBuf> = outputs.iter().flatten().copied().collect();
    for (i, out) in outs.iter().enumerate() {
        if let Some(src) = inputs
            .iter()
            .find(|s| **s != "-" && same_file(Path::new(s), out))
        {
            bail!("output path {} would overwrite input {src}", out.display());
        }
        if outs[..i].iter().any(|o| same_file(o, out)) {
            bail!("output path {} given twice", out.display());
        }
    }
    Ok(())
}

fn emit(output: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .context("writing stdout")
        }
    }
}

fn need(v: Option<usize>, flag: &str, family: &str) -> anyhow::Result<usize> {
    v.with_context(|| format!("{family} needs --{flag}"))
}

fn family_spec(a: &GenArgs) -> anyhow::Result<FamilySpec> {
    let name = a.family.to_possible_value().unwrap().get_name().to_string();
    let m = || need(a.m, "m", &name);
    let n = || need(a.n, "n", &name);
    Ok(match a.family {
        Family::Path => FamilySpec::Path {
            len: need(a.len, "len", &name)?,
        },
        Family::Cycle => FamilySpec::Cycle { n: n()? },
        Family::Complete => FamilySpec::Complete { n: n()? },
        Family::Trivial => FamilySpec::Trivial { m: m()? },
        Family::Wheel => FamilySpec::Wheel { n: n()? },
        Family::Fan => FamilySpec::Fan { m: m()?, n: n()? },
        Family::Cone => FamilySpec::Cone { m: m()?, n: n()? },
        Family::Tent => FamilySpec::Tent { m: m()?, n: n()? },
        Family::Friendship => FamilySpec::Friendship { m: m()? },
        Family::PathFriendship => FamilySpec::PathFriendship { m: m()?, n: n()? },
        Family::ClosedFriendship => FamilySpec::ClosedFriendship { m: m()?, n: n()? },
        Family::Windmill => FamilySpec::Windmill { m: m()?, n: n()? },
    })
}

fn gen(a: GenArgs) -> CliResult {
    let g = family_spec(&a)?.generate()?;
    emit(a.output.as_ref(), &g.to_json_string())?;
    Ok(())
}

fn op(a: OpArgs) -> CliResult {
    if a.a == "-" && a.b == "-" {
        return Err(anyhow::anyhow!("only one operand can be read from stdin").into());
    }
    check_collisions(&[&a.a, &a.b], &[a.output.as_ref()])?;
    let g1 = read_graph(&a.a)?;
    let g2 = read_graph(&a.b)?;
    let g = match a.kind {
        OpKind::Union => union(&g1, &g2),
        OpKind::Intersect => intersection(&g1, &g2),
        OpKind::Join => join(&[g1, g2])?,
        OpKind::Ringsum => ring_sum(&g1, &g2),
        OpKind::Subtract => subtract(&g1, &g2)?,
    };
    emit(a.output.as_ref(), &g.to_json_string())?;
    Ok(())
}

fn run_sparing(a: SparingArgs) -> CliResult {
    check_collisions(&[&a.graph], &[a.output.as_ref()])?;
    let g = read_graph(&a.graph)?;
    let opts = SparingOptions {
        algorithm: match a.algorithm {
            None => AlgorithmChoice::Auto,
            Some(AlgorithmArg::Exhaustive) => AlgorithmChoice::Exhaustive,
            Some(AlgorithmArg::Bb) => AlgorithmChoice::BranchBound,
        },
        with_labeling: a.with_labeling,
        canonical_witness: a.canonical_witness,
        exhaustive_cap: a.exhaustive_cap,
    };
    let result = sparing(&g, &opts)?;
    emit(a.output.as_ref(), &result.to_json_string())?;
    Ok(())
}

fn label(a: LabelArgs) -> CliResult {
    check_collisions(&[&a.graph], &[a.output.as_ref()])?;
    let g = read_graph(&a.graph)?;
    let members = a
        .support
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(VertexId::new)
        .collect::<Result<Vec<_>, _>>()?;
    let f = construct_weak_iasi(&g, &Support::new(members))?;
    emit(a.output.as_ref(), &f.to_json_string())?;
    Ok(())
}

fn run_verify(a: VerifyArgs) -> CliResult {
    if a.graph == "-" && a.labeling == "-" {
        return Err(anyhow::anyhow!("only one input can be read from stdin").into());
    }
    check_collisions(&[&a.graph, &a.labeling], &[a.output.as_ref()])?;
    let g = read_graph(&a.graph)?;
    let f = read_labeling(&a.labeling)?;
    let report = verify(&g, &f)?;
    emit(a.output.as_ref(), &report.to_json_string())?;
    if !report.is_iasi {
        return Err(Failure {
            code: 2,
            error: anyhow::anyhow!("labeling is not an integer additive set-indexer"),
        });
    }
    Ok(())
}

fn export_dot(a: ExportDotArgs) -> CliResult {
    let mut inputs = vec![a.graph.as_str()];
    inputs.extend(a.labeling.as_deref());
    if inputs.iter().filter(|s| **s == "-").count() > 1 {
        return Err(anyhow::anyhow!("only one input can be read from stdin").into());
    }
    check_collisions(&inputs, &[a.output.as_ref()])?;
    let g = read_graph(&a.graph)?;
    let f = a.labeling.as_deref().map(read_labeling).transpose()?;
    emit(a.output.as_ref(), &to_dot(&g, f.as_ref()))?;
    Ok(())
}

fn write_reports(title: &str, rows: &[AuditRow], r: &ReportArgs) -> CliResult {
    let csv = audit::to_csv(rows, r.timings);
    emit(r.csv.as_ref(), &csv)?;
    if let Some(md) = &r.md {
        emit(Some(md), &audit::to_markdown(title, rows))?;
    }
    let mismatches = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Mismatch)
        .count();
    eprintln!("{} rows, {} mismatches", rows.len(), mismatches);
    Ok(())
}

fn run_audit(cmd: AuditCommand) -> CliResult {
    match cmd {
        AuditCommand::Families {
            max_vertices,
            families,
            report,
        } => {
            check_collisions(&[], &[report.csv.as_ref(), report.md.as_ref()])?;
            let ids = if families.is_empty() {
                FormulaId::FAMILIES.to_vec()
            } else {
                let ids = families
                    .iter()
                    .map(|s| s.parse::<FormulaId>())
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(bad) = ids.iter().find(|id| !id.is_family()) {
                    return Err(anyhow::anyhow!("{bad} is not a graph family").into());
                }
                ids
            };
            write_reports(
                "Family audit",
                &audit::audit_families(max_vertices, &ids),
                &report,
            )
        }
        AuditCommand::Identities {
            trials,
            seed,
            counterexamples,
            report,
        } => {
            check_collisions(&[], &[report.csv.as_ref(), report.md.as_ref()])?;
            let mut rows = Vec::new();
            for which in [Identity::Union, Identity::Ringsum, Identity::Complement] {
                let (instances, part) = audit::identity_sweep(which, trials, seed)?;
                if let Some(dir) = &counterexamples {
                    let found = audit::counterexamples(which, &instances, &part);
                    audit::write_counterexamples(dir, &found)
                        .with_context(|| format!("writing counterexamples to {}", dir.display()))?;
                }
                rows.extend(part);
            }
            write_reports("Identity audit", &rows, &report)
        }
        AuditCommand::RingsumCycles { max_cycle, report } => {
            check_collisions(&[], &[report.csv.as_ref(), report.md.as_ref()])?;
            write_reports(
                "Ring sums of cycles",
                &audit::audit_ringsum_cycles(max_cycle),
                &report,
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Op(a) => op(a),
        Command::Sparing(a) => run_sparing(a),
        Command::Label(a) => label(a),
        Command::Verify(a) => run_verify(a),
        Command::Audit(c) => run_audit(c),
        Command::ExportDot(a) => export_dot(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
