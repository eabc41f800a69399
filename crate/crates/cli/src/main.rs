//! `nakayama-census`: enumerate indecomposables, resolve modules, compute
//! Hom/Ext, count exceptional pairs, reproduce the sequence tables, and check
//! every applicable closed formula (optionally against the brute-force
//! oracle). All output goes to stdout as UTF-8; exit code 0 on success, 1 on
//! usage or input errors, 2 when `verify` finds a mismatch.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use nakayama_census::homology::{ext_nonzero_degree, hom_dim, projective_resolution};
use nakayama_census::indec::enumerate_indecomposables;
use nakayama_census::sequences::{
    build_table, emit_sequence, SequenceFormat, TableKind,
};
use nakayama_census::{census, AlgebraPreset, Error, IntervalModule, NakayamaAlgebra};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nakayama-census",
    version,
    about = "Indecomposables, Hom/Ext and exceptional-pair counts for bound linear A_n quivers",
    after_help = "The environment variable NAKAYAMA_CENSUS_THREADS caps engine parallelism."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the indecomposable modules as JSON intervals
    Enumerate {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Engine totals plus every applicable closed formula
    Count {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Also run the brute-force matrix oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Projective resolution of one module as [a,b] pairs
    Resolve {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Module endpoints, e.g. 1,1
        #[arg(long, value_parser = parse_interval)]
        module: IntervalModule,
    },
    /// Hom dimension between two modules
    Hom {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Source module endpoints
        #[arg(long, value_parser = parse_interval)]
        module: IntervalModule,
        /// Target module endpoints
        #[arg(long, value_parser = parse_interval)]
        target: IntervalModule,
    },
    /// Ext dimension and its unique nonzero degree, if any
    Ext {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Source module endpoints
        #[arg(long, value_parser = parse_interval)]
        module: IntervalModule,
        /// Target module endpoints
        #[arg(long, value_parser = parse_interval)]
        target: IntervalModule,
    },
    /// Tabulate a quantity over the single-relation family
    Table {
        /// Which quantity: ind-sq | h | e | ep
        #[arg(long, value_enum, ignore_case = true)]
        kind: KindArg,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Emit a named integer sequence
    Sequence {
        /// Sequence name, e.g. ep-rad2 or h-col-2 (see README for the list)
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = SeqFormatArg::Plain)]
        format: SeqFormatArg,
    },
    /// Run the census and exit 2 if any applicable formula mismatches
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Also run the brute-force matrix oracle
        #[arg(long)]
        oracle: bool,
    },
}

/// Exactly one algebra source: a full description, a preset, or explicit
/// vertex/relation flags.
#[derive(Args)]
struct AlgebraArgs {
    /// Full description, e.g. "n=7; rel=1:2,4:3" or "preset=auslander:3"
    #[arg(long, conflicts_with_all = ["preset", "n", "rel"])]
    algebra: Option<String>,
    /// Preset: linear | single:<start>,<length> | rad:<k> | auslander:<m>
    #[arg(long, conflicts_with = "rel")]
    preset: Option<String>,
    /// Vertex count of the quiver
    #[arg(long)]
    n: Option<usize>,
    /// Relations as start:arrows[,start:arrows...]
    #[arg(long)]
    rel: Option<String>,
}

impl AlgebraArgs {
    fn build(&self) -> Result<NakayamaAlgebra, Error> {
        if let Some(text) = &self.algebra {
            return NakayamaAlgebra::parse(text);
        }
        if let Some(preset) = &self.preset {
            let preset = AlgebraPreset::parse(preset, self.n)?;
            let alg = preset.build()?;
            if let Some(n) = self.n {
                if alg.n() != n {
                    return Err(Error::Parse(format!(
                        "--n {} conflicts with the preset (expects n={})",
                        n,
                        alg.n()
                    )));
                }
            }
            return Ok(alg);
        }
        let Some(n) = self.n else {
            return Err(Error::Parse(
                "no algebra given: use --algebra, --preset or --n [--rel]".into(),
            ));
        };
        let text = match &self.rel {
            Some(rel) => format!("n={n}; rel={rel}"),
            None => format!("n={n}"),
        };
        NakayamaAlgebra::parse(&text)
    }
}

fn parse_interval(s: &str) -> Result<IntervalModule, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("'{s}' is not of the form a,b"))?;
    let a = a.trim().parse().map_err(|_| format!("invalid vertex '{a}'"))?;
    let b = b.trim().parse().map_err(|_| format!("invalid vertex '{b}'"))?;
    Ok(IntervalModule::new(a, b))
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    IndSq,
    H,
    E,
    Ep,
}

impl From<KindArg> for TableKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::IndSq => TableKind::IndSq,
            KindArg::H => TableKind::H,
            KindArg::E => TableKind::E,
            KindArg::Ep => TableKind::Ep,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormatArg {
    Plain,
    Bfile,
    Csv,
}

impl From<SeqFormatArg> for SequenceFormat {
    fn from(f: SeqFormatArg) -> Self {
        match f {
            SeqFormatArg::Plain => SequenceFormat::Plain,
            SeqFormatArg::Bfile => SequenceFormat::BFile,
            SeqFormatArg::Csv => SequenceFormat::Csv,
        }
    }
}

/// Shared JSON shape of the `hom` and `ext` answers.
#[derive(Serialize)]
struct DimOut {
    dim: u8,
    degree: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() {
    if let Ok(value) = std::env::var("NAKAYAMA_CENSUS_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Enumerate { algebra } => {
            let alg = algebra.build()?;
            let set = enumerate_indecomposables(&alg);
            println!("{}", serde_json::to_string(set.modules()).expect("serialize"));
        }
        Command::Count { algebra, oracle } => {
            let report = census::verify(&algebra.build()?, oracle);
            println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
        }
        Command::Verify { algebra, oracle } => {
            let report = census::verify(&algebra.build()?, oracle);
            println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
            if !report.all_match() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Resolve { algebra, module } => {
            let alg = algebra.build()?;
            let res = projective_resolution(&alg, module)?;
            let pairs: Vec<[usize; 2]> = res.terms().iter().map(|t| [t.a, t.b]).collect();
            println!("{}", serde_json::to_string(&pairs).expect("serialize"));
        }
        Command::Hom { algebra, module, target } => {
            let alg = algebra.build()?;
            let dim = hom_dim(&alg, module, target)?;
            let out = DimOut { dim, degree: None };
            println!("{}", serde_json::to_string(&out).expect("serialize"));
        }
        Command::Ext { algebra, module, target } => {
            let alg = algebra.build()?;
            let degree = ext_nonzero_degree(&alg, module, target)?;
            let out = DimOut { dim: degree.is_some() as u8, degree };
            println!("{}", serde_json::to_string(&out).expect("serialize"));
        }
        Command::Table { kind, n_max, format } => {
            if n_max < 3 {
                return Err(Error::PreconditionViolated(format!(
                    "table needs --n-max of at least 3, got {n_max}"
                )));
            }
            let grid = build_table(kind.into(), n_max);
            match format {
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string(&grid).expect("serialize"))
                }
                OutputFormat::Csv => print!("{}", grid.to_csv()),
                OutputFormat::Plain => print!("{}", grid.to_plain()),
            }
        }
        Command::Sequence { name, terms, format } => {
            print!("{}", emit_sequence(&name, terms, format.into())?);
        }
    }
    Ok(ExitCode::SUCCESS)
}
