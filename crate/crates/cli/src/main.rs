use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use tilecount_cli::crosscheck::{cmd_crosscheck, CrosscheckConfig, Status};
use tilecount_cli::render::{cmd_render, Format, RenderRequest};
use tilecount_cli::sequence::{cmd_sequence, SequenceRequest};
use tilecount_cli::{cmd_count, cmd_tileset_info, CliError, CliResult, Problem};
use tilecount_core::oracle::OracleBudget;
use tilecount_core::{Surface, SymmetryGroup};

/// Count tilings of grids, cylinders and tori up to symmetry.
#[derive(Parser)]
#[command(name = "tilecount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of distinct tilings of one shape.
    Count {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also print the fixed-point count of every element.
        #[arg(long)]
        breakdown: bool,
        /// Shift rows instead of columns.
        #[arg(long)]
        transpose: bool,
    },
    /// b-file of counts over a range of shapes.
    Sequence {
        #[arg(long)]
        surface: Surface,
        #[arg(long)]
        group: SymmetryGroup,
        #[arg(long)]
        tiles: String,
        /// Vary n = m.
        #[arg(long)]
        square: bool,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Fixed number of rows.
        #[arg(long)]
        m: Option<usize>,
        /// Table mode: rows n, columns m_min..=m_max.
        #[arg(long, requires = "m_max")]
        m_min: Option<usize>,
        #[arg(long, requires = "m_min")]
        m_max: Option<usize>,
        /// Index of the first line.
        #[arg(long, allow_negative_numbers = true)]
        offset: Option<i64>,
        #[arg(long)]
        transpose: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare closed forms with the brute-force oracle.
    Crosscheck {
        /// Comma-separated surfaces.
        #[arg(long, value_delimiter = ',', default_value = "grid,cylinder,torus")]
        surfaces: Vec<Surface>,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 9)]
        max_cells: usize,
        /// Semicolon-separated groups; every valid group when absent.
        #[arg(long, value_delimiter = ';')]
        groups: Option<Vec<SymmetryGroup>>,
        /// Tile sets to sweep; the single-orbit catalog when absent.
        #[arg(long)]
        tiles: Vec<String>,
        /// Perturb the closed-form side (negative control).
        #[arg(long, hide = true)]
        corrupt: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gallery of orbit representatives.
    Render {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "svg")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbits, stabilizers and fixed-design counts of a tile set.
    TilesetInfo {
        #[arg(long)]
        tiles: String,
        #[arg(long)]
        group: Option<SymmetryGroup>,
    },
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    surface: Surface,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    group: SymmetryGroup,
    #[arg(long)]
    tiles: String,
}

impl ShapeArgs {
    fn problem(self, transpose: bool) -> Problem {
        Problem {
            surface: self.surface,
            n: self.n,
            m: self.m,
            group: self.group,
            tiles: self.tiles,
            transpose,
        }
    }
}

fn emit(text: &str, out: Option<PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn budget() -> CliResult<OracleBudget> {
    Ok(OracleBudget::from_env()?)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Count {
            shape,
            breakdown,
            transpose,
        } => emit(&cmd_count(&shape.problem(transpose), breakdown)?, None),
        Command::Sequence {
            surface,
            group,
            tiles,
            square,
            n_min,
            n_max,
            m,
            m_min,
            m_max,
            offset,
            transpose,
            out,
        } => {
            let req = SequenceRequest {
                surface,
                square,
                group,
                tiles,
                n_min,
                n_max,
                m,
                m_range: m_min.zip(m_max),
                offset,
                transpose,
            };
            emit(&cmd_sequence(&req)?, out)
        }
        Command::Crosscheck {
            surfaces,
            max_dim,
            max_cells,
            groups,
            tiles,
            corrupt,
            out,
        } => {
            let cfg = CrosscheckConfig {
                surfaces,
                max_dim,
                max_cells,
                groups,
                tiles,
                corrupt,
                budget: budget()?,
            };
            let report = cmd_crosscheck(&cfg)?;
            emit(&report.to_string(), out)?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{} cross-check rows failed",
                    report.tally(Status::Fail)
                )))
            }
        }
        Command::Render { shape, format, out } => {
            let req = RenderRequest {
                surface: shape.surface,
                n: shape.n,
                m: shape.m,
                group: shape.group,
                tiles: shape.tiles,
                format: format.parse::<Format>()?,
                budget: budget()?,
            };
            emit(&cmd_render(&req)?, out)
        }
        Command::TilesetInfo { tiles, group } => emit(&cmd_tileset_info(&tiles, group)?, None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tilecount: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
