//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; the binary only forwards the process handles.

use std::ffi::OsString;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use f2net_core::characterize::{
    decide_01_sequence_prefix, decide_02_sequence_prefix, decompose_0m2, decompose_0m3,
    enumerate_0m3, random_0m3, DecomposeError, PrefixVerdict,
};
use f2net_core::net::net_points;
use f2net_core::verify::{
    check_sequence_prefix, is_net_geometric_capped, l2_star_discrepancy, strength_by_rank,
    DEFAULT_GEOMETRIC_MAX_M,
};
use f2net_core::{F2Matrix, GeneratorTuple, MatrixPrefix, NetPoints};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::format::{self, FormatError, PointFormat};
use crate::report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "f2net",
    version,
    about = "Generator matrices of digital nets and sequences in base 2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a structural or random matrix.
    GenMatrix {
        kind: MatrixKind,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the 2^m points of the net generated by GEN...
    Points {
        #[arg(required = true)]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Frac)]
        format: Format,
    },
    /// Check the (t,m,s)-net property.
    CheckNet {
        #[arg(long)]
        t: usize,
        #[arg(required = true)]
        generators: Vec<String>,
        /// Count points in elementary intervals instead of using ranks.
        #[arg(long)]
        geometric: bool,
        /// Largest m accepted by --geometric.
        #[arg(long, default_value_t = DEFAULT_GEOMETRIC_MAX_M)]
        max_m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the (t,s)-sequence property on windows of depth 1..=D.
    CheckSeq {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        depth: usize,
        #[arg(required = true)]
        generators: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Factor a net pair or triple; reads a matrix stream from stdin when
    /// no generators are given.
    Decompose {
        generators: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// List every (0,m,3)-net triple, m <= 3.
    Enumerate {
        #[arg(long)]
        m: usize,
    },
    /// Draw a uniformly random (0,m,3)-net triple.
    Sample {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Squared L2 star discrepancy of a net or of a point file.
    Discrepancy {
        #[arg(required_unless_present = "points", conflicts_with = "points")]
        generators: Vec<String>,
        #[arg(long)]
        points: Option<String>,
        /// Format of the --points file.
        #[arg(long, value_enum, default_value_t = Format::Frac)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixKind {
    Identity,
    Pascal,
    Antidiag,
    RandomLower,
    RandomUpper,
    RandomGl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Frac,
    Dec,
    Bin,
}

impl From<Format> for PointFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Frac => PointFormat::Frac,
            Format::Dec => PointFormat::Dec,
            Format::Bin => PointFormat::Bin,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] f2net_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

/// Reads each input at most once; `-` is stdin.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String, CliError> {
        let io_err = |source| CliError::Io {
            path: path.to_string(),
            source,
        };
        if path == "-" {
            if self.stdin_used {
                return Err(CliError::Usage("stdin (`-`) can only be read once".into()));
            }
            self.stdin_used = true;
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(io_err)?;
            Ok(text)
        } else {
            std::fs::read_to_string(PathBuf::from(path)).map_err(io_err)
        }
    }

    /// Every matrix named by `names`; a file may hold several.
    fn matrices(&mut self, names: &[String]) -> Result<Vec<F2Matrix>, CliError> {
        let mut out = Vec::new();
        for name in names {
            match format::builtin(name)? {
                Some(a) => out.push(a),
                None => {
                    let text = self.read(name)?;
                    let ms = format::parse_matrices(&text)?;
                    if ms.is_empty() {
                        return Err(CliError::Usage(format!("{name}: no matrix found")));
                    }
                    out.extend(ms);
                }
            }
        }
        Ok(out)
    }

    fn tuple(&mut self, names: &[String]) -> Result<GeneratorTuple, CliError> {
        Ok(GeneratorTuple::new(self.matrices(names)?)?)
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    let mut inputs = Inputs {
        stdin,
        stdin_used: false,
    };
    let mut out = BufWriter::new(stdout);
    let result = execute(cli.command, &mut inputs, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => code,
        (Err(e), _) => {
            let _ = writeln!(stderr, "f2net: {e}");
            EXIT_USAGE
        }
        (Ok(_), Err(e)) => {
            let _ = writeln!(stderr, "f2net: {e}");
            EXIT_USAGE
        }
    }
}

type Out<'a> = BufWriter<&'a mut dyn Write>;

fn io(e: io::Error) -> CliError {
    CliError::Io {
        path: "stdout".into(),
        source: e,
    }
}

fn execute(command: Command, inputs: &mut Inputs, out: &mut Out) -> Result<i32, CliError> {
    match command {
        Command::GenMatrix { kind, m, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = match kind {
                MatrixKind::Identity => F2Matrix::identity(m)?,
                MatrixKind::Pascal => F2Matrix::pascal(m)?,
                MatrixKind::Antidiag => F2Matrix::anti_diagonal(m)?,
                MatrixKind::RandomLower => F2Matrix::random_lower(m, &mut rng)?,
                MatrixKind::RandomUpper => F2Matrix::random_upper(m, &mut rng)?,
                MatrixKind::RandomGl => F2Matrix::random_nonsingular(m, &mut rng)?,
            };
            out.write_all(format::write_matrix(&a).as_bytes())
                .map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Points { generators, format } => {
            let pts = net_points(&inputs.tuple(&generators)?)?;
            out.write_all(format::write_points(&pts, format.into()).as_bytes())
                .map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::CheckNet {
            t,
            generators,
            geometric,
            max_m,
            json,
        } => check_net(
            &inputs.tuple(&generators)?,
            t,
            geometric.then_some(max_m),
            json,
            out,
        ),
        Command::CheckSeq {
            t,
            depth,
            generators,
            json,
        } => {
            let gens: Vec<MatrixPrefix> = inputs
                .matrices(&generators)?
                .into_iter()
                .map(MatrixPrefix::new)
                .collect();
            check_seq(&gens, depth, t, json, out)
        }
        Command::Decompose { generators, json } => {
            let ms = if generators.is_empty() {
                inputs.matrices(&["-".to_string()])?
            } else {
                inputs.matrices(&generators)?
            };
            decompose(ms, json, out)
        }
        Command::Enumerate { m } => {
            for [a, b, c] in enumerate_0m3(m)? {
                for x in [&a, &b, &c] {
                    out.write_all(format::write_matrix(x).as_bytes())
                        .map_err(io)?;
                }
                out.write_all(b"\n").map_err(io)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Sample { m, seed } => {
            let triple = random_0m3(m, &mut ChaCha8Rng::seed_from_u64(seed))?;
            out.write_all(format::write_matrices(&triple).as_bytes())
                .map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Discrepancy {
            generators,
            points,
            format,
        } => {
            let pts: NetPoints = match points {
                Some(path) => format::parse_points(&inputs.read(&path)?, format.into())?,
                None => net_points(&inputs.tuple(&generators)?)?,
            };
            let d = l2_star_discrepancy(&pts)?;
            writeln!(out, "points    {}", pts.len()).map_err(io)?;
            writeln!(out, "squared   {:.11e}", d.squared()).map_err(io)?;
            writeln!(out, "exact     {}/{}", d.numerator(), d.denominator()).map_err(io)?;
            Ok(EXIT_PASS)
        }
    }
}

fn composition(c: &Option<Vec<usize>>) -> String {
    match c {
        Some(c) => format!(
            "({})",
            c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        ),
        None => "-".into(),
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

fn exit_code(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn check_net(
    gen: &GeneratorTuple,
    t: usize,
    geometric_cap: Option<usize>,
    json: bool,
    out: &mut Out,
) -> Result<i32, CliError> {
    if t > gen.m() {
        return Err(f2net_core::Error::TOutOfRange { t, m: gen.m() }.into());
    }
    let rank = strength_by_rank(gen);
    let report = match geometric_cap {
        Some(cap) => {
            let v = is_net_geometric_capped(&net_points(gen)?, t, cap)?;
            Report::geometric(&rank, t, &v)
        }
        None => Report::net(&rank, t),
    };
    if json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        let witness = match &report.witness {
            None => "-".into(),
            Some(crate::report::Witness::Composition { composition: c }) => {
                format!("composition {}", composition(&Some(c.clone())))
            }
            Some(crate::report::Witness::Interval { shape, offsets }) => {
                format!(
                    "interval shape {} offsets {:?}",
                    composition(&Some(shape.clone())),
                    offsets
                )
            }
        };
        let method = if geometric_cap.is_some() {
            "counting"
        } else {
            "rank"
        };
        writeln!(out, "method    {method}").map_err(io)?;
        writeln!(out, "m         {}", report.m).map_err(io)?;
        writeln!(out, "s         {}", report.s).map_err(io)?;
        writeln!(out, "t         {t}").map_err(io)?;
        writeln!(out, "strength  {}", report.strength).map_err(io)?;
        writeln!(out, "t-value   {}", rank.t_value).map_err(io)?;
        writeln!(out, "verdict   {}", verdict(report.passed)).map_err(io)?;
        writeln!(out, "witness   {witness}").map_err(io)?;
    }
    Ok(exit_code(report.passed))
}

fn check_seq(
    gens: &[MatrixPrefix],
    depth: usize,
    t: usize,
    json: bool,
    out: &mut Out,
) -> Result<i32, CliError> {
    let report = check_sequence_prefix(gens, depth, t)?;
    let summary = Report::sequence(&report, gens.len());
    if json {
        writeln!(out, "{}", summary.to_json()).map_err(io)?;
        return Ok(exit_code(summary.passed));
    }
    writeln!(out, "depth  strength  t-value  verdict  witness").map_err(io)?;
    for d in &report.depths {
        writeln!(
            out,
            "{:>5}  {:>8}  {:>7}  {:<7}  {}",
            d.depth,
            d.report.strength,
            d.report.t_value,
            verdict(d.passed),
            if d.passed {
                "-".into()
            } else {
                composition(&d.report.witness)
            }
        )
        .map_err(io)?;
    }
    match report.first_failure() {
        None => writeln!(out, "certified up to depth {depth}"),
        Some(f) => writeln!(out, "rejected at depth {}", f.depth),
    }
    .map_err(io)?;
    if t == 0 && gens.len() <= 2 {
        let windows = gens
            .iter()
            .map(|g| g.truncate(depth))
            .collect::<Result<Vec<_>, _>>()?;
        let decision = match windows.as_slice() {
            [b] => decide_01_sequence_prefix(b),
            [b, c] => decide_02_sequence_prefix(b, c)?,
            _ => unreachable!("one or two generators"),
        };
        match decision {
            PrefixVerdict::Certified { depth } => {
                writeln!(out, "factorization: certified up to depth {depth}")
            }
            PrefixVerdict::Rejected { depth, reason } => {
                writeln!(
                    out,
                    "factorization: rejected at depth {depth} ({})",
                    reason.name()
                )
            }
        }
        .map_err(io)?;
    }
    Ok(exit_code(summary.passed))
}

fn decompose(ms: Vec<F2Matrix>, json: bool, out: &mut Out) -> Result<i32, CliError> {
    let rank = strength_by_rank(&GeneratorTuple::new(ms.clone())?);
    let result = match ms.as_slice() {
        [a, b] => decompose_0m2(a, b).map(|d| vec![d.l, d.u, d.right]),
        [a, b, c] => decompose_0m3(a, b, c).map(|d| vec![d.l1, d.l2, d.u, d.right]),
        _ => {
            return Err(CliError::Usage(format!(
                "decompose takes 2 or 3 matrices, got {}",
                ms.len()
            )))
        }
    };
    let (factors, rejection) = match result {
        Ok(f) => (f, None),
        Err(DecomposeError::Rejected(r)) => (Vec::new(), Some(r)),
        Err(DecomposeError::Invalid(e)) => return Err(e.into()),
    };
    if json {
        writeln!(out, "{}", Report::decomposition(&rank, rejection).to_json()).map_err(io)?;
    } else if let Some(r) = rejection {
        match r.minor() {
            Some(k) => writeln!(out, "rejected  {} (minor {k}): {r}", r.name()),
            None => writeln!(out, "rejected  {}: {r}", r.name()),
        }
        .map_err(io)?;
    } else {
        out.write_all(format::write_matrices(&factors).as_bytes())
            .map_err(io)?;
    }
    Ok(exit_code(rejection.is_none()))
}
