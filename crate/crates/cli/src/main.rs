use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wallkit::catalog::{actual_walls, catalog_json, load_fixture, verify};
use wallkit::geometry::{svg_document, wall_curves, View};
use wallkit::plane::{suggest_wall, PlaneChern};
use wallkit::{
    bound_report, enumerate_walls, EnumerationOptions, Rat, TargetClass, TwistParameter,
    WallCatalog, WallError,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "wallkit", version, about = "Numerical walls for (-R, 0, D, 0) on P^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate wall candidates.
    Walls(WallsArgs),
    /// Closed-form bounds for a degree and twist.
    Bounds(BoundsArgs),
    /// Draw the walls as an SVG file.
    Diagram(DiagramArgs),
    /// Compare a fresh enumeration with a fixture.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Cutoff {
    /// alpha0^2 >= 1 (beta = 0 only).
    Killing,
    /// alpha0^2 > (1 - beta)^2.
    Gieseker,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long = "R", default_value_t = 0)]
    rank_deficit: i64,
    #[arg(long = "D")]
    degree: i64,
    /// "0" or "1/k".
    #[arg(long, default_value = "0", value_parser = parse_twist)]
    beta: TwistParameter,
    /// Keep candidates with alpha0^2 at or above this value.
    #[arg(long, value_parser = parse_rat, conflicts_with = "cutoff")]
    min_alpha0_sq: Option<Rat>,
    #[arg(long, value_enum)]
    cutoff: Option<Cutoff>,
    /// Strict upper inequality in the degree bound.
    #[arg(long)]
    strict_n2: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct WallsArgs {
    #[command(flatten)]
    run: RunArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Plane character "r,c,d" whose pushforward to look up among the walls.
    #[arg(long, value_parser = parse_plane)]
    plane_sub: Option<PlaneChern>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long = "D")]
    degree: i64,
    #[arg(long, default_value = "0", value_parser = parse_twist)]
    beta: TwistParameter,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct DiagramArgs {
    #[command(flatten)]
    run: RunArgs,
    #[arg(long)]
    out: PathBuf,
    /// Mark walls flagged actual in this fixture.
    #[arg(long)]
    fixture: Option<PathBuf>,
    #[arg(long, value_parser = parse_rat)]
    alpha_max: Option<Rat>,
    #[arg(long, value_parser = parse_rat)]
    s_max: Option<Rat>,
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 480)]
    height: u32,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    run: RunArgs,
    #[arg(long)]
    fixture: PathBuf,
}

fn parse_twist(s: &str) -> Result<TwistParameter, String> {
    s.parse().map_err(|e: WallError| e.to_string())
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e: wallkit::error::ParseRatError| e.to_string())
}

fn parse_plane(s: &str) -> Result<PlaneChern, String> {
    s.parse().map_err(|e: WallError| e.to_string())
}

fn fail(err: &WallError) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        WallError::BudgetExceeded { .. } => ExitCode::from(EXIT_BUDGET),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn cell_budget() -> Result<Option<u128>, WallError> {
    match std::env::var("WALLKIT_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| WallError::InvalidTarget(format!("WALLKIT_BUDGET={v:?} is not an integer"))),
        Err(_) => Ok(None),
    }
}

fn run_catalog(args: &RunArgs) -> Result<WallCatalog, WallError> {
    let target = TargetClass::new(args.rank_deficit, args.degree)?;
    let mut opts = EnumerationOptions::default().workers(args.jobs);
    if let Some(budget) = cell_budget()? {
        opts.cell_budget = budget;
    }
    opts.strict_n2 = args.strict_n2;
    opts.min_alpha0_sq = args.min_alpha0_sq.clone();
    match args.cutoff {
        None => {}
        Some(Cutoff::Killing) => {
            if args.beta != TwistParameter::Zero {
                return Err(WallError::Unsupported(format!(
                    "--cutoff killing needs beta = 0, got {}",
                    args.beta
                )));
            }
            opts.min_alpha0_sq = Some(Rat::one());
        }
        Some(Cutoff::Gieseker) => {
            let cutoff = wallkit::bounds::lower_cutoff(&args.beta.beta())?;
            eprintln!(
                "note: --cutoff gieseker keeps alpha0^2 > {} and is only valid for Gieseker \
                 semistable sheaves that have O(1) as a subobject along the wall",
                cutoff.alpha0_sq
            );
            opts.min_alpha0_sq = Some(cutoff.alpha0_sq);
            opts.min_exclusive = true;
        }
    }
    enumerate_walls(&target, &args.beta, &opts)
}

fn format_ranks(ranks: &[i64]) -> String {
    match ranks {
        [] => "[]".into(),
        [r] => format!("[{r}]"),
        [first, .., last] if (last - first) as usize + 1 == ranks.len() => {
            format!("[{first}..{last}]")
        }
        _ => {
            let parts: Vec<String> = ranks.iter().map(i64::to_string).collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

fn render_table(cat: &WallCatalog) -> String {
    let header = ["ranks", "c", "d", "e", "alpha0^2"];
    let rows: Vec<[String; 5]> = cat
        .candidates
        .iter()
        .map(|c| {
            [
                format_ranks(&c.ranks),
                c.c.to_string(),
                c.d.to_string(),
                c.e.to_string(),
                c.alpha0_sq.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = format!(
        "# R={} D={} beta={} candidates={} walls={}\n",
        cat.target.rank_deficit,
        cat.target.degree,
        cat.twist,
        cat.len(),
        cat.walls.len()
    );
    out += &line(&header);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        out += &line(&cells);
    }
    out
}

fn render_csv(cat: &WallCatalog) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["ranks", "c", "d", "e", "alpha0_sq"]).expect("in-memory write");
    for c in &cat.candidates {
        let ranks: Vec<String> = c.ranks.iter().map(i64::to_string).collect();
        w.write_record([
            ranks.join(" "),
            c.c.to_string(),
            c.d.to_string(),
            c.e.to_string(),
            c.alpha0_sq.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), WallError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|source| WallError::Io { path: path.clone(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| WallError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn walls(args: &WallsArgs) -> Result<ExitCode, WallError> {
    let cat = run_catalog(&args.run)?;
    let text = match args.format {
        Format::Json => catalog_json(&cat),
        Format::Csv => render_csv(&cat),
        Format::Table => render_table(&cat),
    };
    emit(&text, args.out.as_ref())?;
    if let Some(sub) = &args.plane_sub {
        let s = suggest_wall(&cat, sub);
        match &s.alpha0_sq {
            None => eprintln!("plane {}: pushforward {} has no wall (ch1 <= 0)", s.sub, s.twisted),
            Some(a) => eprintln!(
                "plane {}: pushforward {} gives alpha0^2 = {}; {} in catalog, rank-0 group {}",
                s.sub,
                s.twisted,
                a,
                if s.wall_in_catalog { "wall" } else { "no wall" },
                if s.matching.is_empty() { "absent" } else { "present" }
            ),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bounds(args: &BoundsArgs) -> Result<ExitCode, WallError> {
    if args.degree < 1 {
        return Err(WallError::InvalidTarget(format!("D must be positive, got {}", args.degree)));
    }
    let report = bound_report(args.degree as u64, &args.beta)?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv | Format::Table => {
            let opt = |v: &Option<Rat>| v.as_ref().map_or("-".to_string(), Rat::to_string);
            let mut s = String::new();
            s += &format!("D                          {}\n", report.degree);
            s += &format!("beta                       {}\n", report.beta);
            s += &format!("max_wall_sq                {}\n", opt(&report.max_wall_sq));
            s += &format!("cap_sq                     {}\n", report.cap_sq);
            s += &format!("rank_zero_threshold_sq     {}\n", report.rank_zero_threshold_sq);
            s += &format!("killing_wall_sq            {}\n", opt(&report.killing_wall_sq));
            s += &format!("gieseker_region_threshold  {}\n", report.gieseker_region_threshold);
            s += &format!(
                "lower_cutoff_sq            {}\n",
                opt(&report.lower_cutoff.as_ref().map(|c| c.alpha0_sq.clone()))
            );
            s
        }
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn diagram(args: &DiagramArgs) -> Result<ExitCode, WallError> {
    let cat = run_catalog(&args.run)?;
    let report = bound_report(cat.target.degree as u64, &cat.twist)?;
    let fit = View::fit(&cat);
    let view = View::new(
        args.alpha_max.clone().unwrap_or(fit.alpha_max),
        args.s_max.clone().unwrap_or(fit.s_max),
        args.width,
        args.height,
    )?;
    let mut curves = wall_curves(&cat);
    if let Some(path) = &args.fixture {
        let actual = actual_walls(&load_fixture(path)?);
        for curve in &mut curves {
            curve.actual = Some(actual.contains(&curve.alpha0_sq));
        }
    }
    emit(&svg_document(&cat, &curves, &report, &view), Some(&args.out))?;
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: &VerifyArgs) -> Result<ExitCode, WallError> {
    let fixture = load_fixture(&args.fixture)?;
    let cat = run_catalog(&args.run)?;
    let report = verify(&fixture, &cat);
    print!("{report}");
    Ok(if report.is_match() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_MISMATCH) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Walls(a) => walls(a),
        Command::Bounds(a) => bounds(a),
        Command::Diagram(a) => diagram(a),
        Command::Verify(a) => verify_cmd(a),
    };
    result.unwrap_or_else(|e| fail(&e))
}
