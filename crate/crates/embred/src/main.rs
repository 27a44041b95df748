use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use embred::core::{
    describe, evaluate_suite, reduce, variance_report, EmbeddingMatrix, Method, ReductionSpec,
    SuiteReport, DEFAULT_THRESHOLD,
};
use embred::datasets::{self, ManifestEntry};
use embred::embeddings::{self, LoadStats, DEFAULT_PRECISION};
use embred::{fetch, report, Error, Result, DATA_DIR_ENV};

#[derive(Debug, Parser)]
#[command(name = "embred", version, about = "Reduce and evaluate word embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce (or post-process) an embedding file.
    Reduce(ReduceArgs),
    /// Score embeddings on word-similarity benchmarks and print a CSV report.
    Eval(EvalArgs),
    /// Explained-variance fractions of the top principal components.
    ReportVariance(VarianceArgs),
    /// Print benchmark/embedding download URLs and verify local copies.
    FetchDatasets(FetchArgs),
}

#[derive(Debug, Args)]
struct ReductionArgs {
    /// algo, pca, p+pca, pca+p or ppa-only.
    #[arg(long, short = 'm', default_value = "algo")]
    method: String,
    /// Target dimension N [default: input dimension / 2].
    #[arg(long = "dim", short = 'n')]
    target_dim: Option<usize>,
    /// Number of dominant components removed by each post-processing pass.
    #[arg(long, short = 'D', default_value_t = DEFAULT_THRESHOLD)]
    threshold: usize,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[arg(long, short = 'i')]
    input: PathBuf,
    #[arg(long, short = 'o')]
    output: PathBuf,
    #[command(flatten)]
    reduction: ReductionArgs,
    /// Decimal places written per value; 17 or more writes exact values.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
}

#[derive(Debug, Args)]
struct DatasetArgs {
    /// Tab-separated `name<TAB>path` list [default: the 12 canonical benchmarks].
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Directory that relative manifest paths resolve against.
    #[arg(long, env = DATA_DIR_ENV)]
    data_dir: Option<PathBuf>,
    /// Retry lookups with the lowercased word.
    #[arg(long)]
    fold_case: bool,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, short = 'i')]
    input: PathBuf,
    #[command(flatten)]
    datasets: DatasetArgs,
    /// Write the CSV here instead of stdout.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    /// Embeddings to compare against; the summary goes to stderr.
    #[arg(long)]
    baseline: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VarianceArgs {
    #[arg(long, short = 'i')]
    input: PathBuf,
    #[arg(long, default_value_t = 20)]
    top_k: usize,
    /// Comma-separated variants: original and/or any reduction method.
    #[arg(long, default_value = "original", value_delimiter = ',')]
    variants: Vec<String>,
    /// Target dimension N for reducing variants [default: input dimension / 2].
    #[arg(long = "dim", short = 'n')]
    target_dim: Option<usize>,
    #[arg(long, short = 'D', default_value_t = DEFAULT_THRESHOLD)]
    threshold: usize,
    /// Output file (one variant) or directory (several variants).
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FetchArgs {
    /// Directory holding downloaded benchmark files.
    #[arg(long, env = DATA_DIR_ENV)]
    data_dir: Option<PathBuf>,
    /// `sha256sum`-style file to verify the local copies against.
    #[arg(long)]
    checksums: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reduce(args) => cmd_reduce(args),
        Command::Eval(args) => cmd_eval(args),
        Command::ReportVariance(args) => cmd_report_variance(args),
        Command::FetchDatasets(args) => cmd_fetch(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load(path: &Path, expected_dim: Option<usize>) -> Result<EmbeddingMatrix> {
    let (m, LoadStats { duplicates, .. }) = embeddings::load_embeddings(path, expected_dim)?;
    if duplicates > 0 {
        eprintln!(
            "warning: {}: dropped {duplicates} duplicate token(s)",
            path.display()
        );
    }
    Ok(m)
}

fn reduction_spec(args: &ReductionArgs, input_dim: usize) -> Result<ReductionSpec> {
    let method: Method = args.method.parse()?;
    let mut spec = ReductionSpec::with_defaults(method, input_dim);
    spec.threshold = args.threshold;
    if let Some(n) = args.target_dim {
        spec.target_dim = n;
    }
    spec.validate(input_dim)?;
    Ok(spec)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io {
            path: path.to_path_buf(),
            source: e,
        })
}

fn cmd_reduce(args: ReduceArgs) -> Result<()> {
    let input_dim = embeddings::peek_dim(&args.input)?;
    let spec = reduction_spec(&args.reduction, input_dim)?;
    let start = Instant::now();
    let m = load(&args.input, Some(input_dim))?;
    eprintln!("{} [{}]", describe(&spec), spec.method);
    let out = reduce(&m, &spec)?;
    embeddings::save_embeddings(&out, &args.output, args.precision)?;
    eprintln!(
        "{} words: {} -> {} dimensions in {:.2?}",
        out.rows(),
        m.dim(),
        out.dim(),
        start.elapsed()
    );
    Ok(())
}

fn manifest_entries(args: &DatasetArgs) -> Result<Vec<ManifestEntry>> {
    let entries = match &args.manifest {
        Some(path) => datasets::load_manifest(path, args.data_dir.as_deref())?,
        None => {
            let base = args.data_dir.clone().unwrap_or_else(|| PathBuf::from("."));
            datasets::parse_manifest(
                &fetch::canonical_manifest(),
                &base,
                Path::new("<canonical>"),
            )?
        }
    };
    if entries.is_empty() {
        return Err(Error::Usage("no datasets in manifest".into()));
    }
    Ok(entries)
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let suite = datasets::load_all(&manifest_entries(&args.datasets)?)?;
    let fold = args.datasets.fold_case;
    let m = load(&args.input, None)?;
    let result = evaluate_suite(&m, &suite, fold);
    drop(m);

    match &args.output {
        Some(path) => report::write_eval_csv(create(path)?, &result),
        None => report::write_eval_csv(io::stdout().lock(), &result),
    }
    .map_err(|e| Error::Io {
        path: args.output.clone().unwrap_or_else(|| "<stdout>".into()),
        source: e,
    })?;
    for failure in result.failures() {
        eprintln!("error: {}: {}", failure.dataset, failure.error);
    }

    if let Some(path) = &args.baseline {
        let base: SuiteReport = evaluate_suite(&load(path, None)?, &suite, fold);
        match result.compare_to(&base) {
            Some(c) => eprintln!("vs {}: {}", path.display(), report::format_comparison(&c)),
            None => eprintln!("vs {}: no datasets in common", path.display()),
        }
    }

    let first_failure = result.failures().next().map(|f| f.error.clone());
    match first_failure {
        Some(e) => Err(Error::Core(e)),
        None => Ok(()),
    }
}

fn cmd_report_variance(args: VarianceArgs) -> Result<()> {
    let input_dim = embeddings::peek_dim(&args.input)?;
    let mut plans = Vec::new();
    for name in &args.variants {
        let spec = if name == "original" {
            None
        } else {
            let reduction = ReductionArgs {
                method: name.clone(),
                target_dim: args.target_dim,
                threshold: args.threshold,
            };
            Some(reduction_spec(&reduction, input_dim)?)
        };
        plans.push((name.as_str(), spec));
    }
    if plans.is_empty() {
        return Err(Error::Usage("no variants requested".into()));
    }
    if plans.len() > 1 && args.output.is_none() {
        return Err(Error::Usage(
            "several variants need --output pointing at a directory".into(),
        ));
    }

    let m = load(&args.input, Some(input_dim))?;
    for (name, spec) in plans.iter() {
        let fractions = match spec {
            None => variance_report(&m, args.top_k)?,
            Some(spec) => variance_report(&reduce(&m, spec)?, args.top_k)?,
        };
        if let Some((_, top)) = fractions.first() {
            eprintln!("{name}: top-1 fraction {top:.6}");
        }
        let target = match &args.output {
            Some(out) if plans.len() > 1 => {
                std::fs::create_dir_all(out).map_err(|e| Error::Io {
                    path: out.clone(),
                    source: e,
                })?;
                Some(out.join(format!("{name}.csv")))
            }
            other => other.clone(),
        };
        match &target {
            Some(path) => report::write_variance_csv(create(path)?, &fractions),
            None => report::write_variance_csv(io::stdout().lock(), &fractions),
        }
        .map_err(|e| Error::Io {
            path: target.unwrap_or_else(|| "<stdout>".into()),
            source: e,
        })?;
    }
    Ok(())
}

fn cmd_fetch(args: FetchArgs) -> Result<()> {
    let mut out = io::stdout().lock();
    let mut emit = |line: String| {
        writeln!(out, "{line}").map_err(|e| Error::Io {
            path: "<stdout>".into(),
            source: e,
        })
    };
    emit("# word-similarity benchmarks".into())?;
    for b in &fetch::BENCHMARKS {
        emit(format!("{}\t{}\t{}", b.name, b.pairs, fetch::benchmark_url(b)))?;
    }
    emit("# embeddings".into())?;
    for (what, url) in fetch::EMBEDDING_SOURCES {
        emit(format!("{what}\t{url}"))?;
    }

    let Some(dir) = args.data_dir else {
        return Ok(());
    };
    let expected = match &args.checksums {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.clone(),
                source: e,
            })?;
            fetch::parse_checksums(&text, path)?
        }
        None => Vec::new(),
    };
    let mut mismatch = None;
    emit(format!("# local copies in {}", dir.display()))?;
    for b in &fetch::BENCHMARKS {
        let path = dir.join(b.file);
        if !path.exists() {
            emit(format!("{}\tmissing", b.file))?;
            continue;
        }
        let digest = fetch::sha256_file(&path)?;
        let pairs = datasets::load_dataset(&path, b.name).map(|d| d.len());
        let status = match expected.iter().find(|(_, f)| f == b.file) {
            Some((want, _)) if *want == digest => "ok",
            Some((want, _)) => {
                mismatch.get_or_insert(Error::Checksum {
                    path: path.clone(),
                    expected: want.clone(),
                    actual: digest.clone(),
                });
                "MISMATCH"
            }
            None => "unverified",
        };
        let pairs = match pairs {
            Ok(n) if n == b.pairs => format!("{n} pairs"),
            Ok(n) => format!("{n} pairs (expected {})", b.pairs),
            Err(e) => format!("unreadable: {e}"),
        };
        emit(format!("{digest}  {}\t{status}\t{pairs}", b.file))?;
    }
    match mismatch {
        Some(e) => Err(e),
        None => Ok(()),
    }
}
