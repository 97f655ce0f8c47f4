use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kbnf::benchgen::{generate_instance, run_experiment, ExperimentConfig, ExperimentOptions};
use kbnf::homology::sparse_vector_string;
use kbnf::io::{read_matrix_file, write_matrix_file};
use kbnf::smith::{format_pass_times, verify_factors};
use kbnf::{
    hnf1, hnf2, homology_group, smith, verify_decomposition, Budget, Error, RunLengthDiagonal,
    SmithOptions, Variant,
};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kbnf",
    version,
    about = "Smith and Hermite normal forms of integer matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form, printed in run-length notation
    Smith(SmithArgs),
    /// Column-style (1) or row-style (2) Hermite reduction
    Hnf(HnfArgs),
    /// Homology ker d' / im d of a pair of boundary matrices
    Homology(HomologyArgs),
    /// Write seeded benchmark matrices with planted Smith forms
    Gen(GenArgs),
    /// Time the variants on seeded benchmark matrices
    Bench(BenchArgs),
    /// Check s = v d u, unimodularity and the divisor chain
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Kb1,
    Kb2,
    Kb3,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Kb1 => Variant::Kb1,
            VariantArg::Kb2 => Variant::Kb2,
            VariantArg::Kb3 => Variant::Kb3,
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Maximum number of elementary operations
    #[arg(long)]
    budget: Option<u64>,
    /// Maximum wall time in seconds
    #[arg(long, value_name = "SECONDS")]
    time_budget: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Option<Budget>, Error> {
        if self.budget.is_none() && self.time_budget.is_none() {
            return Ok(None);
        }
        let max_time = match self.time_budget {
            Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(Error::InvalidInput(format!("invalid time budget {s}"))),
            None => None,
        };
        Ok(Some(Budget {
            max_ops: self.budget,
            max_time,
        }))
    }
}

#[derive(Args)]
struct SmithArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "kb3")]
    variant: VariantArg,
    /// Accumulate u and v and check the decomposition
    #[arg(long)]
    transforms: bool,
    #[arg(long, requires = "transforms")]
    u_out: Option<PathBuf>,
    #[arg(long, requires = "transforms")]
    v_out: Option<PathBuf>,
    #[arg(long)]
    s_out: Option<PathBuf>,
    /// Print the number of HNF passes and their durations
    #[arg(long)]
    stats: bool,
    /// Omit timing lines
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct HnfArgs {
    input: PathBuf,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    style: u8,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HomologyArgs {
    /// Outgoing boundary d' (m x n)
    dprime: PathBuf,
    /// Incoming boundary d (n x p)
    d: PathBuf,
    #[arg(long, value_enum, default_value = "kb3")]
    variant: VariantArg,
    /// Write one cycle per line: its order, then 1-based index:value pairs
    #[arg(long)]
    generators: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// repetitions,rows,cols,rank,diag_max,steps,alpha_max
    #[arg(long)]
    config: String,
    #[arg(long)]
    seed: u64,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// repetitions,rows,cols,rank,diag_max,steps,alpha_max
    #[arg(long)]
    config: String,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "kb1,kb2,kb3")]
    variants: Vec<VariantArg>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write one JSON record per instance and variant
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    #[arg(long)]
    s: PathBuf,
    #[arg(long)]
    u: PathBuf,
    #[arg(long)]
    v: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Smith(a) => cmd_smith(a),
        Command::Hnf(a) => cmd_hnf(a),
        Command::Homology(a) => cmd_homology(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Error::BudgetExhausted(report)) => {
            eprintln!("error: budget exhausted\n{report}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read(path: &Path) -> Result<kbnf::ExactMatrix, Error> {
    read_matrix_file(path).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        Error::Io(io) => Error::InvalidInput(format!("{}: {io}", path.display())),
        other => other,
    })
}

fn cmd_smith(a: SmithArgs) -> Result<u8, Error> {
    let m = read(&a.input)?;
    let dec = smith(
        &m,
        a.variant.into(),
        SmithOptions {
            transforms: a.transforms,
            budget: a.budget.budget()?,
            ..Default::default()
        },
    )?;
    println!("{}", dec.run_length);
    if a.stats {
        println!("passes: {}", dec.stats.hnf_invocations);
        if !a.no_timing {
            println!(
                "times: {} seconds",
                format_pass_times(&dec.stats.pass_durations)
            );
        }
    }
    if let Some(p) = &a.s_out {
        write_matrix_file(&dec.s, p)?;
    }
    if a.transforms {
        let report = verify_decomposition(&m, &dec)?;
        if let (Some(p), Some(u)) = (&a.u_out, &dec.u) {
            write_matrix_file(u, p)?;
        }
        if let (Some(p), Some(v)) = (&a.v_out, &dec.v) {
            write_matrix_file(v, p)?;
        }
        if !report.passed() {
            eprintln!("{report}");
            return Ok(EXIT_VERIFY);
        }
    }
    Ok(0)
}

fn cmd_hnf(a: HnfArgs) -> Result<u8, Error> {
    let m = read(&a.input)?;
    let h = if a.style == 1 {
        hnf1(&m, false)
    } else {
        hnf2(&m, false)
    };
    println!("rank: {}", h.rank);
    println!("diagonal product: {}", h.diagonal_product());
    let diag: Vec<String> = h.matrix.diagonal().iter().map(|d| d.to_string()).collect();
    println!("diagonal: ({})", diag.join(" "));
    match &a.out {
        Some(p) => write_matrix_file(&h.matrix, p)?,
        None => print!("{}", kbnf::io::matrix_to_string(&h.matrix)),
    }
    Ok(0)
}

fn cmd_homology(a: HomologyArgs) -> Result<u8, Error> {
    let dprime = read(&a.dprime)?;
    let d = read(&a.d)?;
    let h = homology_group(&dprime, &d, a.variant.into())?;
    println!("{h}");
    println!("torsion: {}", RunLengthDiagonal::from_diagonal(&h.torsion)?);
    println!("free rank: {}", h.free_rank);
    if let Some(p) = &a.generators {
        let mut f = std::io::BufWriter::new(fs::File::create(p)?);
        for (g, order) in h.generators.iter().zip(&h.orders) {
            writeln!(f, "{order} {}", sparse_vector_string(g))?;
        }
        f.flush()?;
    }
    Ok(0)
}

fn cmd_gen(a: GenArgs) -> Result<u8, Error> {
    let config: ExperimentConfig = a.config.parse()?;
    fs::create_dir_all(&a.out)?;
    let mut manifest = String::new();
    manifest.push_str(&format!("config {config}\nseed {}\n", a.seed));
    for index in 0..config.repetitions {
        let inst = generate_instance(&config, a.seed, index)?;
        let name = format!("instance-{index:03}.txt");
        write_matrix_file(&inst.matrix, a.out.join(&name))?;
        manifest.push_str(&format!(
            "{name} seed={} planted={}\n",
            inst.seed, inst.planted_smith
        ));
    }
    fs::write(a.out.join("manifest.txt"), manifest)?;
    println!(
        "wrote {} matrices to {}",
        config.repetitions,
        a.out.display()
    );
    Ok(0)
}

fn cmd_bench(a: BenchArgs) -> Result<u8, Error> {
    let config: ExperimentConfig = a.config.parse()?;
    let variants: Vec<Variant> = a.variants.iter().map(|&v| v.into()).collect();
    let mut opts = ExperimentOptions {
        variants: variants.clone(),
        jobs: a.jobs.max(1),
        ..Default::default()
    };
    if let Some(b) = a.budget.budget()? {
        opts.budgets = variants.iter().map(|&v| (v, b)).collect();
    }
    let report = run_experiment(&config, a.seed, &opts)?;
    print!("{}", report.to_text(!a.no_timing));
    if let Some(p) = &a.report {
        report.write_jsonl(std::io::BufWriter::new(fs::File::create(p)?))?;
    }
    Ok(if !report.correctness_failures().is_empty() {
        EXIT_VERIFY
    } else if report.any_exhausted() {
        EXIT_BUDGET
    } else {
        0
    })
}

fn cmd_verify(a: VerifyArgs) -> Result<u8, Error> {
    let d = read(&a.input)?;
    let report = verify_factors(&d, &read(&a.s)?, &read(&a.u)?, &read(&a.v)?)?;
    println!("{report}");
    Ok(if report.passed() { 0 } else { EXIT_VERIFY })
}
