use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use corona_spectra::algebra::{charpoly, coronal};
use corona_spectra::corona::{
    arc_corona_charpoly_closed, arc_corona_charpoly_corollary, corona, corona_charpoly_theorem,
    vertex_corona_spectrum_outregular, ArcCorollary, ClosedForm, CoronaKind, CoronaOp, Direction,
};
use corona_spectra::coronal::{coronal_constant_rowsum, coronal_equitable, EquitablePartition, FamilySpec};
use corona_spectra::digraph::{parse_digraph, parse_dot, serialize_digraph, to_dot};
use corona_spectra::verify::{run_suite, SweepConfig, Tally, Verdict};
use corona_spectra::{algebra::scalar, Digraph, Family, MatrixKind};

#[derive(Parser)]
#[command(name = "corona-spectra", version, about = "Exact spectra of digraph corona products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a standard digraph: path, cycle, empty or complete.
    Family {
        name: Family,
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build a corona product.
    Corona {
        #[command(flatten)]
        spec: CoronaSpec,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Characteristic polynomial of a digraph file or of a corona product.
    Charpoly {
        /// Digraph file, `-` for standard input.
        input: Option<String>,
        #[arg(long, default_value = "A")]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value_t = CharpolyMethod::Direct)]
        method: CharpolyMethod,
        /// With `--method closed`, use this corollary instead of the first applicable one.
        #[arg(long, requires = "op")]
        corollary: Option<ArcCorollary>,
        #[command(flatten)]
        spec: OptionalCoronaSpec,
    },
    /// Coronal `1ᵀ(λI - M)⁻¹1` of a digraph matrix.
    Coronal {
        input: Option<String>,
        #[arg(long, default_value = "A")]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value_t = CoronalMethod::Formula)]
        method: CoronalMethod,
        /// Family instead of a file: `rowsum:n,r`, `join:n,r;n,r`, `semireg:n1,n2,r1,r2`,
        /// `fullside:n1,n2,k` or `path:n`.
        #[arg(long, conflicts_with = "input")]
        family: Option<String>,
        /// Equitable partition of the input, e.g. `0,1|2,3`.
        #[arg(long, requires = "input")]
        partition: Option<String>,
    },
    /// Spectrum of the symmetric vertex corona with an out-regular second factor.
    Spectrum {
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
        #[arg(long, default_value = "A")]
        matrix: MatrixKind,
    },
    /// Run verification suites against the brute-force oracles.
    Verify {
        /// Suite name, repeatable; `all` runs every suite.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Enumerate every admissible instance instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Print the full report array.
        #[arg(long)]
        json: bool,
    },
    /// Write a digraph as DOT.
    ExportDot {
        input: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CoronaSpec {
    #[arg(long)]
    op: CoronaOp,
    #[arg(long)]
    dir: Direction,
    #[arg(long)]
    d1: String,
    #[arg(long)]
    d2: String,
}

#[derive(Args)]
struct OptionalCoronaSpec {
    #[arg(long, requires_all = ["dir", "d1", "d2"], conflicts_with = "input")]
    op: Option<CoronaOp>,
    #[arg(long, requires = "op")]
    dir: Option<Direction>,
    #[arg(long, requires = "op")]
    d1: Option<String>,
    #[arg(long, requires = "op")]
    d2: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CharpolyMethod {
    Theorem,
    Direct,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoronalMethod {
    Formula,
    Direct,
}

/// Bad flag combinations clap cannot express; exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

/// Reads the edge-list format, or DOT when the text starts with `digraph`.
fn read_digraph(path: &str) -> anyhow::Result<Digraph> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    let parsed = if text.trim_start().starts_with("digraph") {
        parse_dot(&text)
    } else {
        parse_digraph(&text)
    };
    parsed.with_context(|| format!("parsing {}", if path == "-" { "standard input" } else { path }))
}

fn write_text(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing standard output"),
    }
}

fn print_json(value: &Value) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn show(text: impl std::fmt::Display) {
    if io::stderr().is_terminal() {
        eprintln!("{text}");
    }
}

fn arcless_note(kind: CoronaKind, d1: &Digraph) -> Option<String> {
    (kind.op == CoronaOp::Arc && d1.arc_count() == 0)
        .then(|| "the first factor has no arcs, so the arc corona is the first factor itself".to_string())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Family { name, n, out } => {
            let d = Digraph::family(name, n)?;
            write_text(out.as_ref(), &serialize_digraph(&d))?;
        }
        Command::Corona { spec, out } => {
            let kind = CoronaKind::new(spec.op, spec.dir);
            let (d1, d2) = (read_digraph(&spec.d1)?, read_digraph(&spec.d2)?);
            let built = corona(&d1, &d2, kind)?;
            let mut text = String::new();
            if let Some(note) = arcless_note(kind, &d1) {
                eprintln!("note: {note}");
                text = format!("# note: {note}\n");
            }
            text += &serialize_digraph(&built);
            write_text(out.as_ref(), &text)?;
        }
        Command::Charpoly {
            input,
            matrix,
            method,
            corollary,
            spec,
        } => return charpoly_command(input, matrix, method, corollary, spec),
        Command::Coronal {
            input,
            matrix,
            method,
            family,
            partition,
        } => {
            let family = family.map(|f| FamilySpec::parse(&f)).transpose()?;
            let digraph = match (&input, &family) {
                (Some(path), _) => Some(read_digraph(path)?),
                (None, Some(_)) => None,
                (None, None) => return usage("coronal needs a digraph file or --family"),
            };
            if partition.is_some() && method == CoronalMethod::Direct {
                return usage("--partition only applies to --method formula");
            }
            let chi = match (method, digraph) {
                (CoronalMethod::Direct, Some(d)) => coronal(&d.matrix(matrix))?,
                (CoronalMethod::Direct, None) => coronal(&family.unwrap().instance()?.matrix(matrix))?,
                (CoronalMethod::Formula, None) => family.unwrap().coronal(matrix)?,
                (CoronalMethod::Formula, Some(d)) => match partition {
                    Some(p) => coronal_equitable(&d.matrix(matrix), EquitablePartition::parse_blocks(&p)?)?,
                    None => formula_coronal(&d, matrix)?,
                },
            };
            show(&chi);
            print_json(&serde_json::to_value(&chi)?)?;
        }
        Command::Spectrum { d1, d2, matrix } => {
            let (d1, d2) = (read_digraph(&d1)?, read_digraph(&d2)?);
            let s = vertex_corona_spectrum_outregular(&d1, &d2, matrix)?;
            show(format_args!("inherited: ({})^{}", s.inherited, s.inherited_multiplicity));
            for p in &s.paired {
                show(format_args!("mu = {}: ({})^{}", scalar::to_text(&p.mu), p.quadratic, p.multiplicity));
            }
            if let Some(par) = &s.parametric {
                show(format_args!("mu over the roots of {}", par.mu_poly));
            }
            print_json(&serde_json::to_value(&s)?)?;
        }
        Command::Verify {
            suite,
            seed,
            trials,
            max_n,
            exhaustive,
            json,
        } => {
            let config = SweepConfig {
                seed,
                trials,
                max_n,
                suites: suite,
                exhaustive,
                ..SweepConfig::default()
            };
            if let Err(e) = config.validate() {
                return usage(e.to_string());
            }
            let reports = run_suite(&config)?;
            if json {
                print_json(&serde_json::to_value(&reports)?)?;
            } else {
                let mut names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
                names.dedup();
                for name in names {
                    let t = Tally::of(&reports.iter().filter(|r| r.suite == name).cloned().collect::<Vec<_>>());
                    println!(
                        "{name}: {} match, {} mismatch, {} hypothesis-violated, {} skipped",
                        t.matched, t.mismatched, t.hypothesis_violated, t.skipped
                    );
                }
                for r in reports.iter().filter(|r| r.verdict == Verdict::Mismatch) {
                    println!("mismatch in {}: {}", r.suite, serde_json::to_string(r)?);
                }
            }
            return Ok(Tally::of(&reports).all_match());
        }
        Command::ExportDot { input, out } => {
            let d = read_digraph(&input)?;
            write_text(out.as_ref(), &to_dot(&d))?;
        }
    }
    Ok(true)
}

/// Coronal of a digraph read from a file without a family or partition:
/// only the constant row sum cases have a closed form.
fn formula_coronal(d: &Digraph, kind: MatrixKind) -> anyhow::Result<corona_spectra::RationalFunction> {
    let rowsum = match (kind, d.out_regular()) {
        (MatrixKind::L, _) => 0,
        (MatrixKind::A, Some(r)) => r,
        (MatrixKind::Q, Some(r)) => 2 * r,
        _ => bail!("no closed-form {} coronal for a digraph that is not out-regular; pass --partition or use --method direct", kind.name()),
    };
    Ok(coronal_constant_rowsum(d.n(), &scalar::int(rowsum as i64))?)
}

fn charpoly_command(
    input: Option<String>,
    matrix: MatrixKind,
    method: CharpolyMethod,
    corollary: Option<ArcCorollary>,
    spec: OptionalCoronaSpec,
) -> anyhow::Result<bool> {
    let factors = match (spec.op, spec.dir, spec.d1, spec.d2) {
        (Some(op), Some(dir), Some(d1), Some(d2)) => Some((CoronaKind::new(op, dir), d1, d2)),
        _ => None,
    };
    if corollary.is_some() && method != CharpolyMethod::Closed {
        return usage("--corollary only applies to --method closed");
    }
    let Some((kind, d1, d2)) = factors else {
        let Some(path) = input else {
            return usage("charpoly needs a digraph file or --op/--dir/--d1/--d2");
        };
        if method != CharpolyMethod::Direct {
            return usage("--method theorem and closed need a corona given by --op/--dir/--d1/--d2");
        }
        let f = charpoly(&read_digraph(&path)?.matrix(matrix))?;
        show(&f);
        print_json(&json!({ "matrix": matrix, "charpoly": f }))?;
        return Ok(true);
    };
    if method == CharpolyMethod::Closed && kind.op != CoronaOp::Arc {
        return usage("--method closed applies to arc coronas");
    }
    let (d1, d2) = (read_digraph(&d1)?, read_digraph(&d2)?);
    let mut out = json!({ "matrix": matrix });
    let ok = match method {
        CharpolyMethod::Direct => {
            let f = charpoly(&corona(&d1, &d2, kind)?.matrix(matrix))?;
            show(&f);
            out["charpoly"] = serde_json::to_value(&f)?;
            true
        }
        CharpolyMethod::Theorem => {
            let f = corona_charpoly_theorem(&d1, &d2, kind, matrix)?;
            show(&f);
            out["charpoly"] = serde_json::to_value(&f)?;
            true
        }
        CharpolyMethod::Closed => {
            let closed = match corollary {
                Some(c) if c.direction() != kind.direction || c.kind() != matrix => {
                    return usage(format!(
                        "corollary {} is about the {} arc corona and matrix {}",
                        c.name(),
                        c.direction().short_name(),
                        c.kind().name()
                    ));
                }
                Some(c) => arc_corona_charpoly_corollary(&d1, &d2, c)?,
                None => arc_corona_charpoly_closed(&d1, &d2, kind.direction, matrix)?,
            };
            let found = matches!(closed, ClosedForm::Polynomial { .. });
            match &closed {
                ClosedForm::Polynomial { charpoly, .. } => show(charpoly),
                ClosedForm::NoClosedForm { reason } | ClosedForm::HypothesisFailed { reason, .. } => {
                    eprintln!("no closed form: {reason}")
                }
            }
            if let (Value::Object(out), Value::Object(fields)) = (&mut out, serde_json::to_value(&closed)?) {
                out.extend(fields);
            }
            found
        }
    };
    if let Some(note) = arcless_note(kind, &d1) {
        eprintln!("note: {note}");
        out["note"] = note.into();
    }
    print_json(&out)?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // a closed downstream pipe (`| head`) is not a failure
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
