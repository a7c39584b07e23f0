//! Command-line front end.
//!
//! Exit codes: 0 pass or witness found, 1 no witness or failed check,
//! 2 malformed input or usage, 3 a freshly computed witness failed
//! re-verification.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::Value;

use hopfwit::catalog;
use hopfwit::deform::{deform_to_colinear, PrimitiveExtension};
use hopfwit::entwine::{check_entwined_module, DoiKoppinenDatum, Entwining};
use hopfwit::json::{content_hash, DatumJson, EntwiningJson, ModuleJson, Presentation, WitnessFile};
use hopfwit::witness::{self as w, Direction, Tag, Witness};
use hopfwit::{Field, FieldSpec, Hopf, Matrix, MatrixJson, Report};

#[derive(Parser)]
#[command(
    name = "hopfwit",
    version,
    about = "Exact separability witnesses for Hopf algebras and entwining structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure.
    Check {
        level: Level,
        #[arg(long)]
        input: PathBuf,
        /// Entwined module JSON (for `entwined-module`).
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Solve for a canonical witness.
    Solve {
        kind: Kind,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a witness file against its structures.
    Verify {
        kind: Kind,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Map a witness to the witness of an equivalent criterion.
    Transport {
        #[arg(long)]
        direction: String,
        #[arg(long)]
        witness: PathBuf,
        /// The structure the witness belongs to.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deform a map into a morphism.
    Deform(DeformArgs),
    /// Run the built-in catalog.
    Catalog {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Inputs {
    #[arg(long)]
    input: PathBuf,
    /// Columns spanning the subalgebra `T` (for `relative-casimir`).
    #[arg(long)]
    subalgebra: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct DeformSource {
    /// θ witness; requires `--input` with the entwining.
    #[arg(long)]
    theta: Option<PathBuf>,
    /// Field spec of a separable simple extension.
    #[arg(long)]
    fieldext: Option<PathBuf>,
}

#[derive(Args)]
struct DeformArgs {
    #[command(flatten)]
    source: DeformSource,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    map: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Entwining,
    Datum,
    EntwinedModule,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Integral,
    DualIntegral,
    Idempotent,
    RelativeCasimir,
    Theta,
    Cocasimir,
    TotalIntegral,
    Cointegral,
    QuantumIntegral,
    YdCocasimir,
}

impl Kind {
    fn tag(self) -> Tag {
        match self {
            Kind::Integral => Tag::NormalizedIntegral,
            Kind::DualIntegral => Tag::DualIntegral,
            Kind::Idempotent | Kind::RelativeCasimir => Tag::RelativeCasimir,
            Kind::Theta => Tag::Theta,
            Kind::Cocasimir | Kind::YdCocasimir => Tag::Cocasimir,
            Kind::TotalIntegral => Tag::TotalIntegral,
            Kind::Cointegral => Tag::AugmentedCointegral,
            Kind::QuantumIntegral => Tag::QuantumIntegral,
        }
    }
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn malformed(e: anyhow::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{e:#}"),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("usage error"));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.message.lines().next().unwrap_or("error"));
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Check { level, input, module } => check(level, &input, module.as_deref()),
        Command::Solve { kind, inputs, out } => solve(kind, &inputs, out.as_deref()),
        Command::Verify { kind, inputs, witness } => verify(kind, &inputs, &witness),
        Command::Transport {
            direction,
            witness,
            input,
            out,
        } => transport(&direction, &witness, &input, out.as_deref()),
        Command::Deform(args) => deform(&args),
        Command::Catalog { filter, json } => Ok(run_catalog(filter.as_deref(), json)),
    }
}

fn read_value(path: &Path) -> anyhow::Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> anyhow::Result<T> {
    T::deserialize(v).with_context(|| format!("not a {what}"))
}

fn presentation(v: &Value) -> anyhow::Result<Presentation> {
    Ok(Presentation::from_json(&parse(v, "presentation")?)?)
}

fn datum(v: &Value) -> anyhow::Result<DoiKoppinenDatum> {
    Ok(parse::<DatumJson>(v, "Doi-Koppinen datum")?.build()?)
}

/// Entwining JSON, or a datum whose entwining is taken.
fn entwining(v: &Value) -> anyhow::Result<Entwining> {
    if v.get("H").is_some() {
        Ok(datum(v)?.entwining())
    } else {
        Ok(parse::<EntwiningJson>(v, "entwining")?.build()?)
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n"))
            .with_context(|| format!("writing {}", p.display()))
            .map_err(malformed),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn print_report(r: &Report) -> u8 {
    println!("{}", serde_json::to_string_pretty(r).expect("report serializes"));
    if r.all_pass() {
        0
    } else {
        1
    }
}

fn check(level: Level, input: &Path, module: Option<&Path>) -> Outcome {
    let v = read_value(input).map_err(malformed)?;
    let report = (|| -> anyhow::Result<Report> {
        Ok(match level {
            Level::Algebra => presentation(&v)?.algebra()?.check(),
            Level::Coalgebra => presentation(&v)?.coalgebra()?.check(),
            Level::Bialgebra => presentation(&v)?.hopf()?.check_bialgebra(),
            Level::Hopf => presentation(&v)?.hopf()?.check(),
            Level::Entwining => entwining(&v)?.check(),
            Level::Datum => {
                let d = datum(&v)?;
                let mut r = d.check();
                r.extend(d.entwining().check());
                r
            }
            Level::EntwinedModule => {
                let e = entwining(&v)?;
                let path = module.ok_or_else(|| anyhow!("--module is required"))?;
                let m = parse::<ModuleJson>(&read_value(path)?, "module")?.entwined(&e)?;
                check_entwined_module(&e, &m)
            }
        })
    })()
    .map_err(malformed)?;
    Ok(print_report(&report))
}

type Solver = Box<dyn Fn() -> anyhow::Result<Option<Witness>>>;
type Verifier = Box<dyn Fn(&Witness) -> anyhow::Result<bool>>;

/// The structures a witness kind is posed over, parsed from the inputs.
struct Problem {
    field: Field,
    context: BTreeMap<String, String>,
    solve: Solver,
    verify: Verifier,
}

fn problem(kind: Kind, inputs: &Inputs) -> anyhow::Result<Problem> {
    let v = read_value(&inputs.input)?;
    let mut context = BTreeMap::from([("input".to_string(), content_hash(&v))]);
    let tag = kind.tag();
    let checked = move |x: &Witness, ok: bool| x.tag == tag && x.data.len() == 1 && ok;
    let (field, solve, verify): (Field, Solver, Verifier) = match kind {
        Kind::Integral | Kind::DualIntegral | Kind::QuantumIntegral | Kind::YdCocasimir => {
            let h = presentation(&v)?.hopf()?;
            let field = h.field().clone();
            let h2 = h.clone();
            let solve: Solver = Box::new(move || {
                Ok(match kind {
                    Kind::Integral => w::solve_normalized_integral(&h),
                    Kind::DualIntegral => w::solve_dual_normalized_integral(&h),
                    Kind::QuantumIntegral => w::solve_quantum_integral(&h),
                    _ => w::solve_yd_cocasimir(&h),
                })
            });
            let verify: Verifier = Box::new(move |x: &Witness| {
                let m = x.matrix();
                Ok(checked(
                    x,
                    match kind {
                        Kind::Integral => w::verify_normalized_integral(&h2, m),
                        Kind::DualIntegral => w::verify_dual_normalized_integral(&h2, m),
                        Kind::QuantumIntegral => w::verify_quantum_integral(&h2, m),
                        _ => w::verify_cocasimir(&hopfwit::entwine::yetter_drinfeld(&h2), m),
                    },
                ))
            });
            (field, solve, verify)
        }
        Kind::Idempotent | Kind::RelativeCasimir => {
            let s = presentation(&v)?.algebra()?;
            let t = match (kind, &inputs.subalgebra) {
                (Kind::Idempotent, _) => s.identity(),
                (_, Some(path)) => {
                    let tv = read_value(path)?;
                    context.insert("subalgebra".into(), content_hash(&tv));
                    Matrix::from_json(&s.field, &parse::<MatrixJson>(&tv, "matrix")?)?
                }
                (_, None) => bail!("--subalgebra is required for relative-casimir"),
            };
            w::subalgebra_elements(&s, &t)?;
            let (s2, t2) = (s.clone(), t.clone());
            (
                s.field.clone(),
                Box::new(move || Ok(w::solve_relative_casimir(&s, &t)?)),
                Box::new(move |x: &Witness| Ok(checked(x, w::verify_relative_casimir(&s2, &t2, x.matrix())?))),
            )
        }
        Kind::Theta | Kind::Cocasimir => {
            let e = entwining(&v)?;
            let e2 = e.clone();
            (
                e.field().clone(),
                Box::new(move || {
                    Ok(if kind == Kind::Theta {
                        w::solve_theta(&e)
                    } else {
                        w::solve_cocasimir(&e)
                    })
                }),
                Box::new(move |x: &Witness| {
                    Ok(checked(
                        x,
                        if kind == Kind::Theta {
                            w::verify_theta(&e2, x.matrix())
                        } else {
                            w::verify_cocasimir(&e2, x.matrix())
                        },
                    ))
                }),
            )
        }
        Kind::TotalIntegral | Kind::Cointegral => {
            let d = datum(&v)?;
            let d2 = d.clone();
            (
                d.hopf.field().clone(),
                Box::new(move || {
                    Ok(if kind == Kind::TotalIntegral {
                        w::solve_total_integral(&d.hopf, &d.algebra, &d.coaction)
                    } else {
                        w::solve_augmented_cointegral(&d.hopf, &d.coalgebra, &d.action)
                    })
                }),
                Box::new(move |x: &Witness| {
                    let m = x.matrix();
                    Ok(checked(
                        x,
                        if kind == Kind::TotalIntegral {
                            w::verify_total_integral(&d2.hopf, &d2.algebra, &d2.coaction, m)
                        } else {
                            w::verify_augmented_cointegral(&d2.hopf, &d2.coalgebra, &d2.action, m)
                        },
                    ))
                }),
            )
        }
    };
    Ok(Problem {
        field,
        context,
        solve,
        verify,
    })
}

fn write_witness(x: &Witness, context: BTreeMap<String, String>, out: Option<&Path>) -> Result<(), Failure> {
    let file = WitnessFile::new(x, context);
    emit(&serde_json::to_string_pretty(&file).expect("witness serializes"), out)
}

fn internal(what: &str) -> Failure {
    Failure {
        code: 3,
        message: format!("internal error: {what} failed re-verification"),
    }
}

fn solve(kind: Kind, inputs: &Inputs, out: Option<&Path>) -> Outcome {
    let p = problem(kind, inputs).map_err(malformed)?;
    match (p.solve)().map_err(malformed)? {
        None => {
            println!("NoWitness");
            Ok(1)
        }
        Some(x) => {
            if !(p.verify)(&x).map_err(malformed)? {
                return Err(internal("solver output"));
            }
            write_witness(&x, p.context, out)?;
            Ok(0)
        }
    }
}

fn load_witness(path: &Path, field: &Field, context: &BTreeMap<String, String>) -> anyhow::Result<Witness> {
    let file: WitnessFile = parse(&read_value(path)?, "witness file")?;
    if &file.context != context {
        bail!("witness context does not match the given structures");
    }
    Ok(file.witness(field)?)
}

fn verify(kind: Kind, inputs: &Inputs, witness: &Path) -> Outcome {
    let p = problem(kind, inputs).map_err(malformed)?;
    let x = load_witness(witness, &p.field, &p.context).map_err(malformed)?;
    let ok = (p.verify)(&x).map_err(malformed)?;
    println!("{}", if ok { "verified" } else { "rejected" });
    Ok(if ok { 0 } else { 1 })
}

fn transport(direction: &str, witness: &Path, input: &Path, out: Option<&Path>) -> Outcome {
    let d = Direction::parse(direction).ok_or_else(|| malformed(anyhow!("unknown direction {direction:?}")))?;
    let (source, target) = match d {
        Direction::IntegralToIdempotent => (Kind::Integral, Kind::Idempotent),
        Direction::TotalIntegralToTheta => (Kind::TotalIntegral, Kind::Theta),
        Direction::ThetaToTotalIntegral => (Kind::Theta, Kind::TotalIntegral),
        Direction::CocasimirToCointegral => (Kind::Cocasimir, Kind::Cointegral),
    };
    let inputs = Inputs {
        input: input.to_path_buf(),
        subalgebra: None,
    };
    let (src, tgt) = (|| Ok((problem(source, &inputs)?, problem(target, &inputs)?)))().map_err(malformed)?;
    let x = load_witness(witness, &src.field, &src.context).map_err(malformed)?;
    if !(src.verify)(&x).map_err(malformed)? {
        println!("rejected");
        return Ok(1);
    }
    let v = read_value(input).map_err(malformed)?;
    let l: Hopf = match d {
        Direction::IntegralToIdempotent => presentation(&v).and_then(|p| Ok(p.hopf()?)),
        _ => datum(&v).map(|d| d.hopf),
    }
    .map_err(malformed)?;
    let y = w::transport(&x, d, &l).map_err(|e| malformed(e.into()))?;
    if !(tgt.verify)(&y).map_err(malformed)? {
        return Err(internal("transported witness"));
    }
    write_witness(&y, tgt.context, out)?;
    Ok(0)
}

#[derive(Deserialize)]
struct MapFile {
    #[serde(rename = "M", default)]
    m: Option<ModuleJson>,
    #[serde(rename = "N", default)]
    n: Option<ModuleJson>,
    map: MatrixJson,
}

fn deform(args: &DeformArgs) -> Outcome {
    let result = (|| -> anyhow::Result<Matrix> {
        let map: MapFile = parse(&read_value(&args.map)?, "map file")?;
        if let Some(theta_path) = &args.source.theta {
            let input = args
                .input
                .as_ref()
                .ok_or_else(|| anyhow!("--input is required with --theta"))?;
            let inputs = Inputs {
                input: input.clone(),
                subalgebra: None,
            };
            let p = problem(Kind::Theta, &inputs)?;
            let theta = load_witness(theta_path, &p.field, &p.context)?;
            let e = entwining(&read_value(input)?)?;
            let m = map.m.ok_or_else(|| anyhow!("map file needs \"M\""))?.entwined(&e)?;
            let n = map.n.ok_or_else(|| anyhow!("map file needs \"N\""))?.entwined(&e)?;
            let g = Matrix::from_json(e.field(), &map.map)?;
            Ok(deform_to_colinear(&e, theta.matrix(), &m, &n, &g)?)
        } else {
            let path = args.source.fieldext.as_ref().expect("clap enforces one source");
            let spec: FieldSpec = parse(&read_value(path)?, "field spec")?;
            let ext = Field::from_spec(&spec)?;
            let d = PrimitiveExtension::new(&ext)?;
            let g = Matrix::from_json(&d.base, &map.map)?;
            let n = d.degree();
            if g.rows() % n != 0 || g.cols() % n != 0 {
                bail!("map dimensions are not multiples of the degree {n}");
            }
            Ok(d.deform(&d.free_space(g.cols() / n), &d.free_space(g.rows() / n), &g)?)
        }
    })()
    .map_err(malformed)?;
    emit(
        &serde_json::to_string_pretty(&result.to_json()).expect("matrix serializes"),
        args.out.as_deref(),
    )?;
    Ok(0)
}

fn run_catalog(filter: Option<&str>, json: bool) -> u8 {
    let report = catalog::run(filter);
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        for l in &report.lines {
            println!(
                "{:<4} {:<24} {:<34} {:<10} expected {}",
                if l.pass { "ok" } else { "FAIL" },
                l.entry,
                l.solver,
                format!("{:?}", l.outcome).to_lowercase(),
                format!("{:?}", l.expected).to_lowercase(),
            );
        }
        let failed = report.failures().count();
        println!("{} assertions, {failed} failed", report.lines.len());
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}
