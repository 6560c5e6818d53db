//! `gauss-lintel` command-line driver.
//!
//! Exit codes: 0 success (and realizable, for `check`), 1 user error,
//! 2 valid but not realizable (`check` only). Panics exit with 101.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gauss_lintel::enumeration::{summary_line, DedupMode};
use gauss_lintel::persist::{self, ResultsFile, SummaryRow};
use gauss_lintel::render::{render_svg, SvgOptions};
use gauss_lintel::{
    enumerate, find_discrepancies, full_report, interlacement_graph, to_gauss_word, Criterion,
    EnumerationOptions, Error, FilterSpec, GaussWord, Lintel, SortedLintel,
};

#[derive(Parser)]
#[command(name = "gauss-lintel", version, about = "Gauss diagram enumeration and realizability checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate equivalence classes of a given size passing a filter.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Comma-separated tokens from prime,c2,b3,b,gl,stz,r,ca.
        #[arg(long, default_value = "prime")]
        filter: String,
        /// Results file to write.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append a `size, filter, count` row to this TSV file.
        #[arg(long)]
        tsv: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value = "lyndon-test")]
        dedup: String,
    },
    /// Print the criteria report of a lintel or Gauss word.
    Check {
        input: Option<String>,
        /// Read one lintel or word per line from standard input.
        #[arg(long, conflicts_with = "input")]
        stdin: bool,
    },
    /// Print the canonical (Lyndon) lintel.
    Canon { input: String },
    /// Convert a Gauss word to a lintel or a lintel to a Gauss word.
    Convert { input: String },
    /// List canonical prime lintels on which two criteria disagree.
    Discrepancies {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Draw the chord diagram (SVG) or its interlacement graph (DOT).
    Render {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = SvgOptions::default().radius)]
        radius: f64,
        #[arg(long, default_value_t = SvgOptions::default().font_size)]
        font_size: f64,
        #[arg(long, default_value_t = SvgOptions::default().stroke_width)]
        stroke_width: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Dot,
}

/// Lintels start with `[`; anything else is read as a Gauss word.
fn parse_input(input: &str) -> gauss_lintel::Result<SortedLintel> {
    let trimmed = input.trim();
    if trimmed.starts_with('[') {
        trimmed.parse()
    } else {
        trimmed.parse::<GaussWord>()?.to_lintel()
    }
}

fn write_output(path: Option<&Path>, text: &str) -> gauss_lintel::Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn options(workers: Option<usize>, dedup: DedupMode) -> gauss_lintel::Result<EnumerationOptions> {
    let mut opts = EnumerationOptions::from_env()?;
    opts.workers = workers;
    opts.dedup = dedup;
    Ok(opts)
}

fn append_tsv(path: &Path, row: SummaryRow) -> gauss_lintel::Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = if path.exists() {
        persist::render_summary_tsv(&[row])
            .lines()
            .skip(1)
            .map(|l| format!("{l}\n"))
            .collect()
    } else {
        persist::render_summary_tsv(&[row])
    };
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io_err)?;
    f.write_all(text.as_bytes()).map_err(io_err)
}

fn run(command: Command) -> gauss_lintel::Result<ExitCode> {
    match command {
        Command::Enumerate {
            size,
            filter,
            out,
            tsv,
            workers,
            dedup,
        } => {
            let spec: FilterSpec = filter.parse()?;
            let opts = options(workers, dedup.parse()?)?;
            let e = enumerate(size, &spec, &opts)?;
            let lintels = e.lintels(&spec).unwrap_or_default().to_vec();
            let count = lintels.len() as u64;
            if let Some(path) = out {
                ResultsFile::new(size, spec.label(), lintels, e.report.elapsed).save(path)?;
            }
            if let Some(path) = tsv {
                append_tsv(
                    &path,
                    SummaryRow {
                        size,
                        filter: spec.label(),
                        count,
                    },
                )?;
            }
            println!("{}", summary_line(size, &spec, count));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, stdin } => {
            let inputs: Vec<String> = if stdin {
                io::stdin()
                    .lock()
                    .lines()
                    .map_while(|l| l.ok())
                    .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                    .collect()
            } else {
                match input {
                    Some(i) => vec![i],
                    None => {
                        return Err(Error::Parse {
                            column: 1,
                            message: "expected a lintel, a Gauss word, or --stdin".into(),
                        })
                    }
                }
            };
            let lintels = inputs
                .iter()
                .map(|i| parse_input(i))
                .collect::<gauss_lintel::Result<Vec<_>>>()?;
            let mut all_realizable = true;
            for l in &lintels {
                let report = full_report(l);
                all_realizable &= report.realizable;
                println!("{report}");
            }
            Ok(if all_realizable {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Canon { input } => {
            println!("{}", parse_input(&input)?.canonical());
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { input } => {
            if input.trim().starts_with('[') {
                let l: Lintel = input.trim().parse()?;
                println!("{}", to_gauss_word(&l));
            } else {
                println!("{}", parse_input(&input)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Discrepancies {
            size,
            a,
            b,
            out,
            workers,
        } => {
            let a: Criterion = a.parse()?;
            let b: Criterion = b.parse()?;
            let opts = options(workers, DedupMode::default())?;
            let records = find_discrepancies(size, a, b, &opts)?;
            match out {
                Some(path) => persist::save_discrepancies(path, size, a, b, &records)?,
                None => {
                    for r in &records {
                        println!("{}", r.report);
                    }
                }
            }
            println!("size={size} a={a} b={b} count={}", records.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            input,
            format,
            out,
            radius,
            font_size,
            stroke_width,
        } => {
            let l = parse_input(&input)?;
            let text = match format {
                Format::Svg => render_svg(
                    &l,
                    &SvgOptions {
                        radius,
                        font_size,
                        stroke_width,
                        ..SvgOptions::default()
                    },
                ),
                Format::Dot => interlacement_graph(&l).to_dot(),
            };
            write_output(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
