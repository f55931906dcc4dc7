mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use qconv::code::{free_distance, min_distance, CodeSpec};
use qconv::decode::SingleErrorTable;
use qconv::presets::{preset, PairFile, BUNDLED, PRESET_NAMES};
use qconv::sim::{fit_coefficient, ChannelParams, DecoderKind, Pipeline, DEFAULT_FRAME_BLOCKS};
use qconv::verify::{bundled_pairs, run_suite};

use report::{Format, ReportWriter};

#[derive(Parser)]
#[command(
    name = "qconv",
    version,
    about = "Quantum convolutional and tail-biting codes: checks, tables, simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the preset codes.
    Codes,
    /// Run the structural checks and print a pass/fail table.
    Verify(VerifyArgs),
    /// Print the syndrome → error table of a code.
    Table(TableArgs),
    /// Print code distances.
    Distance(DistanceArgs),
    /// Monte-Carlo logical error rates under a depolarizing channel.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Check only these codes (comma separated or repeated).
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Replace the bundled preset of the same name with this pair file.
    #[arg(long = "preset-file")]
    preset_files: Vec<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    code: String,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct DistanceArgs {
    /// Codes to report; all bundled presets when omitted.
    codes: Vec<String>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Preset names (comma separated or repeated).
    #[arg(long, value_delimiter = ',')]
    code: Vec<String>,
    /// Decoder id; each code's default when omitted.
    #[arg(long, value_enum)]
    decoder: Option<DecoderArg>,
    /// Physical error probabilities.
    #[arg(long = "p", value_delimiter = ',')]
    p_values: Vec<f64>,
    #[arg(long)]
    trials: Option<u64>,
    /// Blocks per convolutional frame.
    #[arg(long)]
    frame_blocks: Option<usize>,
    #[arg(long, env = "QCONV_SEED")]
    seed: Option<u64>,
    /// X,Y,Z probabilities given an error.
    #[arg(long, value_delimiter = ',', num_args = 3)]
    weights: Option<Vec<f64>>,
    /// Experiment file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Table,
    Viterbi,
    CosetLookup,
}

impl From<DecoderArg> for DecoderKind {
    fn from(d: DecoderArg) -> DecoderKind {
        match d {
            DecoderArg::Table => DecoderKind::Table,
            DecoderArg::Viterbi => DecoderKind::Viterbi,
            DecoderArg::CosetLookup => DecoderKind::CosetLookup,
        }
    }
}

/// Experiment file; same field names as the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    code: Option<Vec<String>>,
    decoder: Option<DecoderKind>,
    p_values: Option<Vec<f64>>,
    trials: Option<u64>,
    frame_blocks: Option<usize>,
    seed: Option<u64>,
    pauli_weights: Option<[f64; 3]>,
    format: Option<Format>,
}

#[derive(Debug)]
struct ExperimentConfig {
    codes: Vec<String>,
    decoder: Option<DecoderKind>,
    p_values: Vec<f64>,
    trials: u64,
    frame_blocks: usize,
    seed: u64,
    pauli_weights: [f64; 3],
    format: Format,
}

const DEFAULT_TRIALS: u64 = 100_000;
const DEFAULT_SEED: u64 = 1;

/// Failure of a command: bad input (exit 2), a failed check (exit 1), or a
/// reader that stopped listening (exit 0).
enum Failure {
    Usage(String),
    Check,
    Closed,
}

impl From<qconv::Error> for Failure {
    fn from(e: qconv::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Failure {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// `println!` that reports a closed stdout instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(io::stdout().lock(), $($arg)*)?
    };
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Codes => cmd_codes(),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => cmd_table(a),
        Command::Distance(a) => cmd_distance(a),
        Command::Simulate(a) => cmd_simulate(a),
    };
    match result {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_codes() -> CmdResult {
    for name in PRESET_NAMES {
        match preset(name) {
            Ok(pair) => {
                let kind = if pair.is_convolutional() {
                    "convolutional"
                } else {
                    "block"
                };
                out!(
                    "{name:<18} {:<10} GF({}) {kind}",
                    pair.params.to_string(),
                    pair.field().order()
                );
            }
            Err(_) => out!("{name:<18} parameterised by block count"),
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let mut pairs = bundled_pairs();
    for path in &args.preset_files {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let file = PairFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let loaded = file.into_pair_unchecked();
        match pairs.iter_mut().find(|(n, _)| *n == file.name) {
            Some(slot) => slot.1 = loaded,
            None => pairs.push((file.name.clone(), loaded)),
        }
    }
    for name in &args.only {
        if !pairs.iter().any(|(n, _)| n == name) {
            return Err(Failure::Usage(format!("--only: unknown code {name:?}")));
        }
    }
    let results = run_suite(&pairs, &args.only);
    let mut failed = 0;
    for r in &results {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!r.passed);
        out!("{mark}  {:<12} {:<24} {}", r.code, r.check, r.detail);
    }
    out!("{} checks, {failed} failed", results.len());
    if failed > 0 {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn cmd_table(args: TableArgs) -> CmdResult {
    let pair = preset(&args.code)?;
    let sym = |x: qconv::gf::F4| match args.format {
        Format::Human => x.symbol().to_string(),
        _ => x.to_u8().to_string(),
    };
    let join = |v: &[qconv::gf::F4]| v.iter().map(|&x| sym(x)).collect::<Vec<_>>().join(" ");
    let tuple = |v: &[qconv::gf::F4]| v.iter().map(|&x| sym(x)).collect::<Vec<_>>().join(", ");
    match &pair.stabilizer {
        CodeSpec::Conv(stab) => {
            for row in SingleErrorTable::derive(stab)?.rows() {
                out!("{} → ({})", join(&row.pattern), tuple(&row.signature));
            }
        }
        CodeSpec::Block(_) => {
            let table = qconv::code::coset_leader_table(&pair)?;
            for (syndrome, leader) in table.entries() {
                out!("({}) → {}", tuple(&syndrome), join(leader));
            }
        }
    }
    Ok(())
}

fn cmd_distance(args: DistanceArgs) -> CmdResult {
    let names: Vec<String> = if args.codes.is_empty() {
        BUNDLED.iter().map(|(n, _)| n.to_string()).collect()
    } else {
        args.codes
    };
    for name in names {
        let pair = preset(&name)?;
        match &pair.normalizer {
            CodeSpec::Conv(norm) => {
                let d = free_distance(norm, 2 * norm.memory() + 2)?;
                out!("{name:<18} free distance {d}");
            }
            CodeSpec::Block(norm) => match min_distance(norm) {
                Ok(d) => out!(
                    "{name:<18} minimum distance {d} ({}, {})",
                    norm.len(),
                    norm.dim()
                ),
                Err(e) => out!("{name:<18} minimum distance not enumerable: {e}"),
            },
        }
    }
    Ok(())
}

fn resolve(args: SimulateArgs) -> Result<ExperimentConfig, Failure> {
    let file: ConfigFile = match &args.config {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => ConfigFile::default(),
    };
    let codes = if args.code.is_empty() {
        file.code.unwrap_or_default()
    } else {
        args.code
    };
    let p_values = if args.p_values.is_empty() {
        file.p_values.unwrap_or_default()
    } else {
        args.p_values
    };
    let pauli_weights = match args.weights {
        Some(w) => [w[0], w[1], w[2]],
        None => file.pauli_weights.unwrap_or([1.0 / 3.0; 3]),
    };
    let config = ExperimentConfig {
        codes,
        decoder: args.decoder.map(DecoderKind::from).or(file.decoder),
        p_values,
        trials: args.trials.or(file.trials).unwrap_or(DEFAULT_TRIALS),
        frame_blocks: args
            .frame_blocks
            .or(file.frame_blocks)
            .unwrap_or(DEFAULT_FRAME_BLOCKS),
        seed: args.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        pauli_weights,
        format: args.format.or(file.format).unwrap_or(Format::Csv),
    };
    if config.codes.is_empty() {
        return Err(Failure::Usage("code: at least one code is required".into()));
    }
    if config.p_values.is_empty() {
        return Err(Failure::Usage("p: at least one value is required".into()));
    }
    if let Some(p) = config.p_values.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
        return Err(Failure::Usage(format!("p: {p} is not in (0, 1)")));
    }
    if config.trials == 0 {
        return Err(Failure::Usage("trials: must be at least 1".into()));
    }
    Ok(config)
}

fn cmd_simulate(args: SimulateArgs) -> CmdResult {
    let config = resolve(args)?;
    let mut pipelines = Vec::new();
    for name in &config.codes {
        let pair = preset(name)?;
        let kind = config
            .decoder
            .unwrap_or_else(|| DecoderKind::default_for(&pair));
        pipelines.push(Pipeline::new(&pair, kind, config.frame_blocks)?);
    }
    let mut out = ReportWriter::new(config.format);
    for pipe in &pipelines {
        let mut reports = Vec::new();
        for &p in &config.p_values {
            let params = ChannelParams {
                p,
                pauli_weights: config.pauli_weights,
                frame_blocks: config.frame_blocks,
                seed: config.seed,
            };
            params.validate()?;
            let report = pipe.run(&params, config.trials)?;
            out.report(&report)?;
            reports.push(report);
        }
        out.fit(pipe.code_name(), fit_coefficient(&reports).ok())?;
    }
    Ok(())
}
