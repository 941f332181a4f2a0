mod ranges;

use std::path::PathBuf;
use std::process::ExitCode;

use biroot::analysis::{self, export_csv, export_ppm, PPM_HI_LOG10, PPM_LO_LOG10};
use biroot::biroot::{recursive_eval, BirootSpec};
use biroot::checks::Suite;
use biroot::classical::{newton_symbolic, pade};
use biroot::exact::{format_rational, nth_root_hp, parse_decimal};
use biroot::{construct, CoefficientSource, Error, HpFloat, PrintFormat, Result, TriangleDag};
use clap::{Args, Parser, Subcommand, ValueEnum};

const MIN_PRECISION: u32 = 64;

#[derive(Parser)]
#[command(name = "biroot", version, about = "Rational approximants of nth roots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the approximant for one configuration.
    Build {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Evaluate the approximant and its error at one point.
    Eval {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Feed each value back in as the expansion parameter this many times.
        #[arg(long)]
        recursive: Option<usize>,
        #[arg(long, default_value_t = 256)]
        precision: u32,
    },
    /// Error grid over a range of orders and points, written as CSV.
    Sweep {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        m_range: String,
        #[arg(long, allow_hyphen_values = true)]
        x_range: String,
        #[arg(long)]
        out: PathBuf,
        /// Also write a greyscale P5 image of log10 error.
        #[arg(long)]
        ppm: Option<PathBuf>,
        #[arg(long, default_value_t = 256)]
        precision: u32,
    },
    /// Mean, spread and maximum of the error over an interval.
    Stats {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        x_range: String,
        #[arg(long, default_value_t = 256)]
        precision: u32,
    },
    /// Inspect a linearly constructed triangle.
    Dag(DagArgs),
    /// Padé approximant of the nth root about 1.
    Pade {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Newton's method applied symbolically.
    Newton {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        iters: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Run exact identity suites.
    Check {
        /// fixedpoint, alpha, pade-equiv, lemma1, appendix, diagonal-seq or all
        #[arg(long)]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceKind {
    Binomial,
    Gaussian,
    GaussianConstrained,
    Dag,
}

#[derive(Args)]
struct SourceArgs {
    #[arg(long)]
    n: u32,
    /// Expansion parameter, an integer or p/q.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    c: String,
    #[arg(long, value_enum, default_value = "binomial")]
    source: SourceKind,
    /// Level-0 values, comma separated (dag source).
    #[arg(long)]
    basin: Option<String>,
    /// Weight vector, comma separated (dag source).
    #[arg(long)]
    weights: Option<String>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("view").required(true).args(["level", "diagonal", "dot"]))]
struct DagArgs {
    #[arg(long)]
    basin: String,
    #[arg(long)]
    weights: String,
    #[arg(long)]
    level: Option<usize>,
    #[arg(long)]
    diagonal: Option<usize>,
    #[arg(long, default_value_t = 1)]
    stride: usize,
    /// Write the first `--depth` levels as a DOT digraph.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    depth: usize,
    #[arg(long, default_value = "plain")]
    format: String,
}

impl SourceArgs {
    fn source(&self) -> Result<CoefficientSource> {
        let dag_flags = self.basin.is_some() || self.weights.is_some();
        match self.source {
            SourceKind::Dag => {
                let (Some(basin), Some(weights)) = (&self.basin, &self.weights) else {
                    return Err(Error::Usage(
                        "--source dag needs --basin and --weights".into(),
                    ));
                };
                Ok(CoefficientSource::DagLevel(dag(basin, weights)?))
            }
            _ if dag_flags => Err(Error::Usage(
                "--basin and --weights need --source dag".into(),
            )),
            SourceKind::Binomial => Ok(CoefficientSource::Binomial),
            SourceKind::Gaussian => Ok(CoefficientSource::gaussian()),
            SourceKind::GaussianConstrained => {
                Ok(CoefficientSource::Gaussian { constrained: true })
            }
        }
    }

    fn spec(&self, m: usize) -> Result<BirootSpec> {
        BirootSpec::new(self.n, m, ranges::rat(&self.c)?, self.source()?)
    }
}

fn dag(basin: &str, weights: &str) -> Result<TriangleDag> {
    TriangleDag::new(ranges::int_list(basin)?, ranges::int_list(weights)?)
}

fn format(s: &str) -> Result<PrintFormat> {
    s.parse()
}

fn precision(bits: u32) -> Result<u32> {
    if bits < MIN_PRECISION {
        return Err(Error::Usage(format!(
            "--precision must be at least {MIN_PRECISION} bits, got {bits}"
        )));
    }
    Ok(bits)
}

fn hp_points(spec: &str, bits: u32) -> Result<Vec<HpFloat>> {
    Ok(ranges::x_range(spec)?
        .iter()
        .map(|x| HpFloat::from_rational(x, bits))
        .collect())
}

fn digits(bits: u32) -> u32 {
    (f64::from(bits) * std::f64::consts::LOG10_2).floor() as u32
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Build {
            source,
            m,
            format: f,
        } => {
            let approx = construct(&source.spec(m)?, 256)?;
            Ok(approx.print(format(&f)?))
        }
        Command::Eval {
            source,
            m,
            x,
            recursive,
            precision: bits,
        } => {
            let bits = precision(bits)?;
            let spec = source.spec(m)?;
            let x = HpFloat::from_rational(&parse_decimal(&x)?, bits);
            let truth = nth_root_hp(&x, spec.n, bits)?;
            let d = digits(bits);
            let values = match recursive {
                Some(iterations) => recursive_eval(
                    &spec,
                    &x,
                    iterations,
                    &HpFloat::from_rational(&spec.c, bits),
                )?,
                None => vec![construct(&spec, bits)?.to_hp(bits).eval(&x)?],
            };
            let mut lines: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let err = (v - &truth).abs();
                    let label = if recursive.is_some() {
                        format!("r_{} ", i + 1)
                    } else {
                        String::new()
                    };
                    format!(
                        "{label}value {} error {}",
                        v.to_sci_string(d),
                        err.to_sci_string(17)
                    )
                })
                .collect();
            lines.push(format!("root {}", truth.to_sci_string(d)));
            Ok(lines.join("\n"))
        }
        Command::Sweep {
            source,
            m_range,
            x_range,
            out,
            ppm,
            precision: bits,
        } => {
            let bits = precision(bits)?;
            let ms = ranges::m_range(&m_range)?;
            let xs = hp_points(&x_range, bits)?;
            let c = ranges::rat(&source.c)?;
            let grid = analysis::sweep(source.n, &c, &source.source()?, &ms, &xs, bits)?;
            export_csv(&grid, &out)?;
            if let Some(path) = &ppm {
                export_ppm(&grid, path, PPM_LO_LOG10, PPM_HI_LOG10)?;
            }
            Ok(format!(
                "wrote {} orders x {} points to {}",
                ms.len(),
                xs.len(),
                out.display()
            ))
        }
        Command::Stats {
            source,
            m,
            x_range,
            precision: bits,
        } => {
            let bits = precision(bits)?;
            let spec = source.spec(m)?;
            let xs = ranges::x_range(&x_range)?;
            let (lo, hi) = (&xs[0], &xs[xs.len() - 1]);
            let s = analysis::stats(&spec, lo, hi, xs.len(), bits)?;
            Ok(format!(
                "interval [{}, {}]\nmean {}\nstd {}\nmax {}\ncount {}\npoles {}",
                format_rational(lo),
                format_rational(hi),
                s.mean.to_sci_string(17),
                s.std.to_sci_string(17),
                s.max.to_sci_string(17),
                s.count,
                s.poles
            ))
        }
        Command::Dag(args) => run_dag(args),
        Command::Pade { n, p, q, format: f } => Ok(pade(n, p, q)?.print(format(&f)?)),
        Command::Newton {
            n,
            iters,
            c,
            format: f,
        } => Ok(newton_symbolic(n, iters, &ranges::rat(&c)?)?.print(format(&f)?)),
        Command::Check { suite } => {
            let reports = Suite::parse_list(&suite)?
                .into_iter()
                .map(Suite::run)
                .collect::<Result<Vec<_>>>()?;
            let text: Vec<String> = reports.iter().map(ToString::to_string).collect();
            if reports.iter().all(|r| r.passed()) {
                Ok(text.join("\n"))
            } else {
                Err(Error::Analysis(format!(
                    "check failed\n{}",
                    text.join("\n")
                )))
            }
        }
    }
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>, sep: &str) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn run_dag(args: DagArgs) -> Result<String> {
    let mut dag = dag(&args.basin, &args.weights)?;
    let csv = match args.format.as_str() {
        "plain" => false,
        "csv" => true,
        other => {
            return Err(Error::Usage(format!(
                "unknown dag format {other:?} (expected plain or csv)"
            )))
        }
    };
    if let Some(path) = &args.dot {
        let text = dag.to_dot(args.depth);
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
        return Ok(format!(
            "wrote levels 0..={} to {}",
            args.depth,
            path.display()
        ));
    }
    if let Some(m) = args.level {
        let level = dag.level(m);
        return Ok(if csv {
            // numerator positions, then denominator positions
            format!(
                "{}\n{}",
                join(level.iter().step_by(2), ","),
                join(level.iter().skip(1).step_by(2), ",")
            )
        } else {
            join(level, " ")
        });
    }
    let d = args.diagonal.expect("clap enforces one view");
    let values = dag.diagonal(d, args.stride)?;
    Ok(if csv {
        join(&values, ",")
    } else {
        let sum: biroot::ExactInt = values.iter().sum();
        format!("{}\nsum {sum}", join(&values, " "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("biroot: {e}");
            if e.is_usage() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
