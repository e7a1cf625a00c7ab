//! `pqcert`: issue, verify, inspect, and benchmark the four certificate
//! shapes. Everything is deterministic given `--seed` and `--clock`.
//!
//! Exit codes: 0 success, 1 verification rejected, 2 usage error,
//! 3 benchmark assertion failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pqcert::bench::{bench_sizes, bench_times, compat_matrix};
use pqcert::files::{certificate_text, read_certificate, write_certificate, CertFormat};
use pqcert::fixtures::{parse_seed, Fixtures, Scheme, DEFAULT_CLOCK};
use pqcert::inspect::render_certificate;
use pqcert::report::ReportFormat;
use pqcert::HarnessError;
use pqcert_core::chameleon::reconstruct_delta;
use pqcert_core::provider::{mock_provider, SignatureProvider};
use pqcert_core::registry::{Role, SizeSpec};
use pqcert_core::x509::{Verdict, VerifierProfile};

#[derive(Parser)]
#[command(
    name = "pqcert",
    about = "Hybrid post-quantum X.509 certificate toolkit",
    version,
    max_term_width = 100
)]
struct Cli {
    /// Master seed, 64 hex characters; all key material derives from it.
    #[arg(long, global = true, value_name = "HEX64")]
    seed: Option<String>,

    /// Evaluation clock in Unix seconds (default 1735689600, 2025-01-01).
    #[arg(long, global = true, value_name = "UNIX-SECONDS")]
    clock: Option<i64>,

    /// Output directory (issue, reconstruct) or report file (bench).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format; csv/markdown for reports, pem/der for certificates.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Verifier capability profile.
    #[arg(long, global = true, value_enum)]
    profile: Option<ProfileArg>,

    /// Certificate shape to issue.
    #[arg(long, global = true, value_enum)]
    scheme: Option<SchemeArg>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the algorithm registry.
    Registry,
    /// Generate a key pair for a registered algorithm.
    Keygen {
        /// Algorithm name, e.g. ML-DSA-44.
        algorithm: String,
    },
    /// Issue certificate files for the selected --scheme.
    Issue,
    /// Verify a certificate file; exits 1 with the reason on rejection.
    Verify { file: PathBuf },
    /// Decode and print a certificate file.
    Inspect { file: PathBuf },
    /// Rebuild the inner certificate from a chameleon outer certificate.
    Reconstruct { file: PathBuf },
    /// Reproduce the comparison tables as machine-checkable reports.
    Bench {
        #[command(subcommand)]
        which: BenchCommand,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Certificate DER lengths per scheme.
    Size,
    /// Median issuance wall time per scheme with injected signing latency.
    Time {
        /// Injected latency per sign call, milliseconds.
        #[arg(long, default_value_t = 50)]
        latency: u64,
        /// Repetitions per scheme (median is reported).
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// Verdict matrix: every scheme under both verifier profiles.
    Matrix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
    Pem,
    Der,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Legacy,
    #[value(name = "pqc-aware")]
    PqcAware,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Pure,
    Composite,
    Catalyst,
    Chameleon,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Pure => Scheme::Pure,
            SchemeArg::Composite => Scheme::Composite,
            SchemeArg::Catalyst => Scheme::Catalyst,
            SchemeArg::Chameleon => Scheme::Chameleon,
        }
    }
}

fn report_format(
    arg: Option<FormatArg>,
    default: ReportFormat,
) -> Result<ReportFormat, HarnessError> {
    match arg {
        None => Ok(default),
        Some(FormatArg::Csv) => Ok(ReportFormat::Csv),
        Some(FormatArg::Markdown) => Ok(ReportFormat::Markdown),
        Some(_) => Err(HarnessError::Usage(
            "this command emits csv or markdown".into(),
        )),
    }
}

fn cert_format(arg: Option<FormatArg>) -> Result<CertFormat, HarnessError> {
    match arg {
        None | Some(FormatArg::Pem) => Ok(CertFormat::Pem),
        Some(FormatArg::Der) => Ok(CertFormat::Der),
        Some(_) => Err(HarnessError::Usage(
            "certificates are written as pem or der".into(),
        )),
    }
}

fn cert_extension(format: CertFormat) -> &'static str {
    match format {
        CertFormat::Pem => "pem",
        CertFormat::Der => "der",
    }
}

fn master_seed(cli: &Cli) -> Result<[u8; 32], HarnessError> {
    match &cli.seed {
        Some(text) => parse_seed(text).map_err(HarnessError::Usage),
        None => Ok([0u8; 32]),
    }
}

fn fixtures_from(cli: &Cli) -> Result<Fixtures, HarnessError> {
    let seed = master_seed(cli)?;
    let clock = cli.clock.unwrap_or(DEFAULT_CLOCK);
    Ok(Fixtures::new(seed, clock)?)
}

fn run(cli: &Cli) -> Result<ExitCode, HarnessError> {
    match &cli.command {
        Command::Registry => {
            let fixtures = fixtures_from(cli)?;
            let format = report_format(cli.format, ReportFormat::Markdown)?;
            print!("{}", registry_table(&fixtures, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Keygen { algorithm } => {
            let fixtures = fixtures_from(cli)?;
            let seed = master_seed(cli)?;
            let entry = fixtures
                .registry
                .lookup(algorithm)
                .ok_or_else(|| HarnessError::Usage(format!("unknown algorithm '{}'", algorithm)))?;
            let provider = mock_provider(&fixtures.registry, &entry.name)
                .map_err(|e| HarnessError::Usage(format!("{}: {}", entry.name, e)))?;
            let keypair = provider.keygen(&seed).map_err(pqcert_core::Error::from)?;
            println!("algorithm: {}", keypair.algorithm);
            match entry.security_level {
                Some(level) => println!("security level: {}", level),
                None => println!("security level: none (classical)"),
            }
            println!(
                "public key ({} bytes): {}",
                keypair.public_key.len(),
                hex::encode(&keypair.public_key)
            );
            println!(
                "private key ({} bytes): {}",
                keypair.private_key.len(),
                hex::encode(&keypair.private_key)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Issue => {
            let fixtures = fixtures_from(cli)?;
            let scheme = cli
                .scheme
                .ok_or_else(|| HarnessError::Usage("issue requires --scheme".into()))?;
            let format = cert_format(cli.format)?;
            let out_dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&out_dir)?;
            issue_files(&fixtures, scheme.into(), format, &out_dir)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file } => {
            let fixtures = fixtures_from(cli)?;
            let profile = match cli.profile.unwrap_or(ProfileArg::PqcAware) {
                ProfileArg::Legacy => VerifierProfile::Legacy,
                ProfileArg::PqcAware => VerifierProfile::PqcAware,
            };
            let cert = read_certificate(file)?;
            let at = cli.clock.unwrap_or(DEFAULT_CLOCK);
            match fixtures.verify(&cert, profile, at) {
                Verdict::Accept => {
                    println!("accept");
                    Ok(ExitCode::SUCCESS)
                }
                Verdict::Reject(reason) => {
                    println!("reject {}", reason.code());
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Inspect { file } => {
            let fixtures = fixtures_from(cli)?;
            let cert = read_certificate(file)?;
            print!("{}", render_certificate(&fixtures.registry, &cert));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reconstruct { file } => {
            let outer = read_certificate(file)?;
            let inner = reconstruct_delta(&outer)?;
            let format = cert_format(cli.format)?;
            match &cli.out {
                Some(dir) => {
                    std::fs::create_dir_all(dir)?;
                    let path = dir.join(format!("inner.{}", cert_extension(format)));
                    write_certificate(&path, &inner, format)?;
                    println!("wrote {}", path.display());
                }
                None => {
                    let bytes = certificate_text(&inner, format)?;
                    use std::io::Write;
                    std::io::stdout().write_all(&bytes)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { which } => {
            let fixtures = fixtures_from(cli)?;
            let format = report_format(cli.format, ReportFormat::Csv)?;
            let text = match which {
                BenchCommand::Size => bench_sizes(&fixtures)?.emit(format),
                BenchCommand::Time { latency, reps } => {
                    bench_times(*latency, *reps, &fixtures)?.emit(format)
                }
                BenchCommand::Matrix => compat_matrix(&fixtures)?.emit(format),
            };
            match &cli.out {
                Some(path) => {
                    if let Some(parent) = path.parent() {
                        if !parent.as_os_str().is_empty() {
                            std::fs::create_dir_all(parent)?;
                        }
                    }
                    std::fs::write(path, &text)?;
                    println!("wrote {}", path.display());
                }
                None => print!("{}", text),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn issue_files(
    fixtures: &Fixtures,
    scheme: Scheme,
    format: CertFormat,
    out_dir: &Path,
) -> Result<(), HarnessError> {
    let ext = cert_extension(format);
    let write = |stem: &str, cert: &pqcert_core::x509::Certificate| -> Result<(), HarnessError> {
        let path = out_dir.join(format!("{}.{}", stem, ext));
        write_certificate(&path, cert, format)?;
        println!("wrote {}", path.display());
        Ok(())
    };
    match scheme {
        Scheme::Pure => write("pure", &fixtures.issue_pure()?),
        Scheme::Composite => write("composite", &fixtures.issue_composite()?),
        Scheme::Catalyst => write("catalyst", &fixtures.issue_catalyst()?),
        Scheme::Chameleon => {
            let (outer, inner) = fixtures.issue_chameleon()?;
            write("outer", &outer)?;
            write("inner", &inner)
        }
    }
}

fn registry_table(fixtures: &Fixtures, format: ReportFormat) -> String {
    let size = |spec: SizeSpec| match spec {
        SizeSpec::Fixed(n) => n.to_string(),
        SizeSpec::Variable { max, .. } if max == usize::MAX => "variable".into(),
        SizeSpec::Variable { min, max } => format!("{}-{}", min, max),
    };
    let header = ["name", "oid", "role", "level", "public key", "signature"];
    let rows: Vec<Vec<String>> = fixtures
        .registry
        .entries()
        .iter()
        .map(|e| {
            vec![
                e.name.clone(),
                e.oid.to_string(),
                e.role.as_str().to_string(),
                e.security_level
                    .map(|l| l.to_string())
                    .unwrap_or_else(|| "none".into()),
                size(e.public_key_len),
                match (e.role, e.signature_len) {
                    (Role::Kem, _) | (_, None) => "none".into(),
                    (_, Some(s)) => size(s),
                },
            ]
        })
        .collect();
    match format {
        ReportFormat::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        ReportFormat::Markdown => {
            let mut out = format!("| {} |\n", header.join(" | "));
            out.push_str(&format!("|{}\n", " --- |".repeat(header.len())));
            for row in rows {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
            out
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            err.exit();
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(HarnessError::BenchAssertion(msg)) => {
            eprintln!("pqcert: benchmark assertion failed: {}", msg);
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("pqcert: {}", err);
            ExitCode::from(2)
        }
    }
}
