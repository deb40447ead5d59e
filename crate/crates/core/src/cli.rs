//! Command-line front end.
//!
//! Exit statuses: 0 controllable or certified, 1 not controllable (or an
//! invalid certificate for `verify`), 2 inconclusive, 3 input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::checker::{
    certificate_search, compose_parallel, kalman_check, pbh_check, verify_certificate,
    CheckOptions, RowPartition, Status, SystemDef, Verdict, DEFAULT_MAX_BASES,
    DEFAULT_MAX_COLUMNS,
};
use crate::error::{Error, Result};
use crate::io::{write_file, CertificateFile, Report, SystemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CONTROLLABLE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "structctl",
    version,
    about = "Exact structural-controllability checks for linear systems over F(z)",
    after_help = "Exit status: 0 controllable/certified, 1 not controllable, 2 inconclusive, 3 input error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run controllability checks on a system file.
    Check(CheckArgs),
    /// Compose system files in parallel (block-diagonal A, stacked B).
    Compose(ComposeArgs),
    /// Verify an exported certificate against a system file.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Pbh,
    Kalman,
    Matroid,
    All,
}

#[derive(clap::Args, Debug)]
pub struct CheckArgs {
    /// System file (JSON).
    pub path: PathBuf,
    /// Which check to run.
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
    /// Row partition for the certificate search, e.g. "1,2;3,4,5" (1-based).
    /// Defaults to the file's partition, else one block per row.
    #[arg(long)]
    pub partition: Option<String>,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Seed for the random-evaluation rank fast path (off by default).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Bases examined per block during certificate search.
    #[arg(long, default_value_t = DEFAULT_MAX_BASES)]
    pub max_bases: usize,
    /// Largest pencil width (n + m) for exact minor enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_COLUMNS)]
    pub max_columns: usize,
    /// Write the certificate (if one is found) to this path.
    #[arg(long)]
    pub emit_certificate: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct ComposeArgs {
    /// Subsystem files, in composition order.
    #[arg(required = true)]
    pub paths: Vec<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Name of the composite system.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// System file (JSON).
    pub system: PathBuf,
    /// Certificate file (JSON).
    pub certificate: PathBuf,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT_ERROR,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, out),
        Command::Compose(a) => cmd_compose(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn load_system(path: &Path) -> Result<(SystemFile, SystemDef)> {
    let file = SystemFile::load(path)?;
    let sys = file.to_system(&path.display().to_string())?;
    Ok((file, sys))
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<output>".into(),
        source: e,
    }
}

/// Exit status for a set of verdicts: any NOT_CONTROLLABLE wins, then any
/// positive verdict, otherwise inconclusive.
pub fn exit_status(verdicts: &[Verdict]) -> i32 {
    if verdicts.iter().any(|v| v.status == Status::NotControllable) {
        EXIT_NOT_CONTROLLABLE
    } else if verdicts.iter().any(|v| v.status.is_positive()) {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    }
}

fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let (file, sys) = load_system(&args.path)?;
    let partition = match &args.partition {
        Some(spec) => Some(RowPartition::parse(spec, sys.n())?),
        None => file.row_partition(sys.n())?,
    };
    if args.max_bases == 0 {
        return Err(Error::InvalidFile("--max-bases must be at least 1".into()));
    }
    let opts = CheckOptions {
        max_columns: args.max_columns,
        max_bases: args.max_bases,
        seed: args.seed,
    };
    let mut verdicts = Vec::new();
    if matches!(args.method, MethodArg::Pbh | MethodArg::All) {
        verdicts.push(pbh_check(&sys, &opts));
    }
    if matches!(args.method, MethodArg::Kalman | MethodArg::All) {
        verdicts.push(kalman_check(&sys, &opts));
    }
    if matches!(args.method, MethodArg::Matroid | MethodArg::All) {
        verdicts.push(certificate_search(&sys, partition.as_ref(), &opts)?);
    }
    let code = exit_status(&verdicts);
    if let Some(path) = &args.emit_certificate {
        if let Some(cert) = verdicts.iter().find_map(Verdict::certificate) {
            write_file(path, &CertificateFile::from_certificate(sys.name(), cert).to_json())?;
        }
    }
    if args.json {
        let report = Report::new(&sys, &verdicts, code);
        out.write_all(report.to_json().as_bytes()).map_err(io_err)?;
    } else {
        write_text_report(&sys, &verdicts, out).map_err(io_err)?;
    }
    Ok(code)
}

fn write_text_report(sys: &SystemDef, verdicts: &[Verdict], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "system: {} (n = {}, m = {})", sys.name(), sys.n(), sys.m())?;
    for v in verdicts {
        writeln!(out, "{v}")?;
        if let Some(cert) = v.certificate() {
            writeln!(out, "  partition: {}", cert.partition)?;
            for (i, (rows, b)) in cert.partition.one_based().iter().zip(&cert.blocks).enumerate() {
                let rows: Vec<String> = rows.iter().map(ToString::to_string).collect();
                let witness = b.witness.as_ref().map(ToString::to_string).unwrap_or_default();
                writeln!(
                    out,
                    "  block {} (rows {}): {{{}}} witness {}",
                    i + 1,
                    rows.join(","),
                    b.labels.join(", "),
                    witness
                )?;
            }
        }
    }
    Ok(())
}

fn cmd_compose(args: &ComposeArgs, out: &mut dyn Write) -> Result<i32> {
    let first = SystemFile::load(&args.paths[0])?;
    let space = first.space()?;
    let mut subs = Vec::with_capacity(args.paths.len());
    for path in &args.paths {
        let file = SystemFile::load(path)?;
        let origin = path.display().to_string();
        if file.parameters != first.parameters {
            return Err(Error::InvalidFile(format!(
                "{origin} declares parameters [{}], {} declares [{}]",
                file.parameters.join(", "),
                args.paths[0].display(),
                first.parameters.join(", ")
            )));
        }
        subs.push(file.to_system_in(&space, &origin)?);
    }
    let composite = compose_parallel(&subs)?;
    let mut file = SystemFile::from_system(&composite);
    if let Some(name) = &args.name {
        file.name = name.clone();
    }
    let json = file.to_json();
    match &args.output {
        Some(path) => write_file(path, &json)?,
        None => out.write_all(json.as_bytes()).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let (_, sys) = load_system(&args.system)?;
    let cert_file = CertificateFile::load(&args.certificate)?;
    let cert = cert_file.to_certificate(&sys, &args.certificate.display().to_string())?;
    let check = verify_certificate(&sys, &cert)?;
    let write = |out: &mut dyn Write| -> std::io::Result<()> {
        writeln!(out, "system: {} (n = {}, m = {})", sys.name(), sys.n(), sys.m())?;
        for (i, (b, w)) in cert.blocks.iter().zip(&check.witnesses).enumerate() {
            let w = w.as_ref().map_or_else(|| "n/a".to_string(), ToString::to_string);
            writeln!(out, "block {}: {{{}}} witness {}", i + 1, b.labels.join(", "), w)?;
        }
        for f in &check.failures {
            writeln!(out, "FAILED {f}")?;
        }
        writeln!(out, "certificate: {}", if check.is_valid() { "VALID" } else { "INVALID" })
    };
    write(out).map_err(io_err)?;
    Ok(if check.is_valid() {
        EXIT_OK
    } else {
        EXIT_NOT_CONTROLLABLE
    })
}
