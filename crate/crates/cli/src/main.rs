mod report;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use foliant_core::families::{
    self, catalog, Mult3Params, ParamMap, SSParams, StableParams, UnstableM2Params,
};
use foliant_core::foliation::{parse_vector_field, z_reduce, ProjPoint, VectorField};
use foliant_core::git::{classify, hull_position, weight_support, ClassifyOptions};
use foliant_core::localgeom::{analyze_point, singular_coordinate_points};
use foliant_core::poly::parse_rational;
use foliant_core::Error;

use report::{params_to_strings, CatalogRow, GeneratedReport, Report, WeightsReport};

#[derive(Parser)]
#[command(name = "foliant", version, about = "Singularities and GIT stability of foliations on P^2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity, Milnor number and uniqueness at a singular point.
    Analyze(AnalyzeArgs),
    /// Stability verdict with a checkable certificate.
    Classify(ClassifyArgs),
    /// Torus weights of the z-reduced coordinates.
    Weights(WeightsArgs),
    /// Writes a member of one of the explicit families.
    Generate(GenerateArgs),
    /// Lists the built-in worked examples.
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit plain text.
    #[arg(long)]
    text: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.text {
            Format::Text
        } else {
            Format::Json
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Singular point as `p0,p1,p2`; defaults to the first singular coordinate point.
    #[arg(long)]
    point: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ClassifyArgs {
    file: PathBuf,
    #[arg(long)]
    point: Option<String>,
    /// Number of frames tried by the search.
    #[arg(long, default_value_t = 500)]
    budget: usize,
    #[arg(long, env = "FOLIANT_SEED", default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct WeightsArgs {
    file: PathBuf,
    /// Write an SVG diagram of the lattice with the support highlighted.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Include the `w0 w1 w2 : monomial` dump.
    #[arg(long)]
    dump: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ss,
    StableM2,
    UnstableM2,
    Mult3,
}

#[derive(Args)]
struct GenerateArgs {
    family: Family,
    /// Parameters as `name=value` with rational values.
    #[arg(long, num_args = 1.., value_name = "K=V")]
    param: Vec<String>,
    /// Output file; the field is printed to stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CatalogArgs {
    /// Write each example to `<dir>/<name>.fol`.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

/// Failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Usage(_) | Error::Syntax { .. } | Error::NonRational(_) | Error::MixedDegrees(_) => 2,
            Error::NotSingular(_) => 3,
            Error::FamilyCondition(_) => 5,
            Error::NullFoliation
            | Error::NotIsolated
            | Error::DegenerateResultant(_)
            | Error::UnsupportedDegree(_)
            | Error::SingularFrame
            | Error::OracleTimeout(_) => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    }
}

fn read_field(path: &Path) -> Result<VectorField, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(parse_vector_field(&text)?)
}

fn canonical(x: &VectorField) -> Result<String, Failure> {
    Ok(z_reduce(x)?.to_string())
}

fn resolve_point(x: &VectorField, point: Option<&str>) -> Result<ProjPoint, Failure> {
    match point {
        Some(text) => Ok(ProjPoint::parse(text)?),
        None => singular_coordinate_points(x).into_iter().next().ok_or_else(|| {
            Failure::from(Error::NotSingular(
                "no coordinate point is singular; pass --point".into(),
            ))
        }),
    }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
        Format::Text => print!("{}", text()),
    }
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let x = read_field(&args.file)?;
    let input = canonical(&x)?;
    let p = resolve_point(&x, args.point.as_deref())?;
    let report = Report {
        input,
        singularity: Some(analyze_point(&x, &p)?),
        ..Report::default()
    };
    emit(args.output.format(), &report, || report.to_text());
    Ok(())
}

fn classify_cmd(args: &ClassifyArgs) -> Result<(), Failure> {
    let x = read_field(&args.file)?;
    let input = canonical(&x)?;
    let p = args.point.as_deref().map(ProjPoint::parse).transpose()?;
    let singularity = match &p {
        Some(p) => Some(analyze_point(&x, p)?),
        None => None,
    };
    let opts = ClassifyOptions {
        budget: args.budget,
        seed: args.seed,
    };
    let report = Report {
        input,
        singularity,
        verdict: Some(classify(&x, p.as_ref(), &opts)?),
        ..Report::default()
    };
    emit(args.output.format(), &report, || report.to_text());
    Ok(())
}

fn weights(args: &WeightsArgs) -> Result<(), Failure> {
    let x = read_field(&args.file)?;
    let f = z_reduce(&x)?;
    let support = weight_support(&f);
    if let Some(path) = &args.svg {
        fs::write(path, svg::weight_diagram(x.degree(), &support)).map_err(|e| io_failure(path, e))?;
    }
    let report = Report {
        input: f.to_string(),
        weights: Some(WeightsReport {
            classes: support.len(),
            hull: hull_position(&support),
            dump: args.dump.then(|| support.dump()),
            support,
        }),
        ..Report::default()
    };
    emit(args.output.format(), &report, || report.to_text());
    Ok(())
}

fn parse_params(raw: &[String]) -> Result<ParamMap, Failure> {
    let mut map = ParamMap::new();
    for item in raw {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::from(Error::Usage(format!("parameter `{item}` is not k=v"))))?;
        let value = parse_rational(v).ok_or_else(|| Failure::from(Error::NonRational(v.to_string())))?;
        if map.insert(k.trim().to_string(), value).is_some() {
            return Err(Error::Usage(format!("parameter `{k}` given twice")).into());
        }
    }
    Ok(map)
}

fn generate(args: &GenerateArgs) -> Result<(), Failure> {
    let map = parse_params(&args.param)?;
    let (name, x, params) = match args.family {
        Family::Ss => {
            let p = SSParams::from_map(&map)?;
            ("ss", families::ss_family(&p)?, p.to_map())
        }
        Family::StableM2 => {
            let p = StableParams::from_map(&map)?;
            ("stable-m2", families::stable_family(&p)?, p.to_map())
        }
        Family::UnstableM2 => {
            let p = UnstableM2Params::from_map(&map)?;
            ("unstable-m2", families::unstable_m2_family(&p)?, p.to_map())
        }
        Family::Mult3 => {
            let p = Mult3Params::from_map(&map)?;
            ("mult3", families::mult3_family(&p)?, p.to_map())
        }
    };
    let origin = ProjPoint::basis(0);
    let singularity = analyze_point(&x, &origin).ok();
    let text = format!("{x}\n");
    let file = match &args.out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| io_failure(path, e))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    let report = Report {
        input: canonical(&x)?,
        generated: Some(GeneratedReport {
            family: name.into(),
            params: params_to_strings(&params),
            multiplicity: singularity.as_ref().map(|s| s.multiplicity),
            milnor: singularity.as_ref().map(|s| s.milnor),
            file,
        }),
        ..Report::default()
    };
    if args.out.is_none() && matches!(args.output.format(), Format::Text) {
        print!("{text}");
        return Ok(());
    }
    emit(args.output.format(), &report, || report.to_text());
    Ok(())
}

fn catalog_cmd(args: &CatalogArgs) -> Result<(), Failure> {
    let entries = catalog();
    if let Some(dir) = &args.out_dir {
        fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
        for e in &entries {
            let path = dir.join(format!("{}.fol", e.name));
            fs::write(&path, format!("{}\n", e.field)).map_err(|err| io_failure(&path, err))?;
        }
    }
    let rows: Vec<CatalogRow> = entries
        .iter()
        .map(|e| CatalogRow {
            name: e.name.into(),
            field: e.field.to_string(),
            point: e.point.to_string(),
            multiplicity: e.multiplicity,
            milnor: e.milnor,
            verdict: e.verdict.to_string(),
        })
        .collect();
    emit(args.output.format(), &rows, || {
        rows.iter()
            .map(|r| format!("{}\t{}\tm={}\tmu={}\t{}\n", r.name, r.point, r.multiplicity, r.milnor, r.verdict))
            .collect()
    });
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Weights(a) => weights(a),
        Command::Generate(a) => generate(a),
        Command::Catalog(a) => catalog_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
