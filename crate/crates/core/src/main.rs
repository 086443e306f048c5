use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stoplemma::cli::{
    cmd_assess, cmd_freq, cmd_induce, cmd_overlap, cmd_posstats, parse_k, Artifacts, Format, FreqOptions,
    OverlapSource, Overrides, PosOptions, RunConfig,
};
use stoplemma::stats::{RankVariable, DEFAULT_REJECTION_THRESHOLD};
use stoplemma::Error;

#[derive(Parser)]
#[command(name = "stoplemma", version, about = "Stop lemma induction for Hindi corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration
    #[arg(long, short)]
    config: Option<PathBuf>,
    #[arg(long)]
    output_dir: Option<PathBuf>,
    /// Output formats (repeatable)
    #[arg(long = "format", value_enum)]
    formats: Vec<FormatArg>,
    /// Word to lemma lexicon (TSV)
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long)]
    keep_symbols: bool,
    #[arg(long)]
    keep_latin_words: bool,
    #[arg(long)]
    keep_latin_numbers: bool,
    #[arg(long)]
    keep_other_scripts: bool,
    #[arg(long)]
    drop_devanagari_digits: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Lemmas,
    Words,
    Lists,
    Rows,
}

#[derive(Clone, Copy, ValueEnum)]
enum RankArg {
    Rank,
    Frequency,
}

#[derive(Subcommand)]
enum Command {
    /// Word and lemma frequency tables per corpus
    Freq {
        #[command(flatten)]
        common: Common,
        /// Report out-of-lexicon rates on stderr
        #[arg(long)]
        warn_oov: bool,
    },
    /// Induce the stop lemma list
    Induce {
        #[command(flatten)]
        common: Common,
        /// Top entries taken from each stop word list, or "all"
        #[arg(long, value_parser = parse_k)]
        k_a: Option<usize>,
        /// Top lemmas taken from each corpus, or "all"
        #[arg(long, value_parser = parse_k)]
        k_b: Option<usize>,
    },
    /// Overlap of top-k items across sources
    Overlap {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, value_enum, default_value = "lemmas")]
        source: SourceArg,
        /// Ranked rows file for --source rows; the bundled rows when absent
        #[arg(long)]
        rows: Option<PathBuf>,
    },
    /// Correlation of POS groups with rank
    Posstats {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        pos_lexicon: Option<PathBuf>,
        /// Only the top N entries of each ranking
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value = "rank")]
        rank_variable: RankArg,
        #[arg(long, default_value_t = DEFAULT_REJECTION_THRESHOLD)]
        threshold: f64,
    },
    /// Coverage of the stop lemma list by a translated list
    Assess {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        mapping: Option<PathBuf>,
        /// Stop lemma list to assess; the bundled reference list when absent
        #[arg(long)]
        list: Option<PathBuf>,
    },
}

fn config(common: &Common, extra: Overrides) -> Result<RunConfig, Error> {
    let mut cfg = match &common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::empty(&std::env::current_dir().map_err(|e| Error::Config(e.to_string()))?),
    };
    let set = |flag: bool, v: bool| flag.then_some(v);
    let overrides = Overrides {
        output_dir: common.output_dir.clone(),
        formats: (!common.formats.is_empty()).then(|| {
            common
                .formats
                .iter()
                .map(|f| match f {
                    FormatArg::Tsv => Format::Tsv,
                    FormatArg::Json => Format::Json,
                })
                .collect()
        }),
        lexicon: common.lexicon.clone(),
        drop_symbols: set(common.keep_symbols, false),
        drop_latin_words: set(common.keep_latin_words, false),
        drop_latin_numbers: set(common.keep_latin_numbers, false),
        drop_other_scripts: set(common.keep_other_scripts, false),
        drop_devanagari_digits: set(common.drop_devanagari_digits, true),
        ..extra
    };
    cfg.apply(&overrides)?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(), Error> {
    let (cfg, artifacts): (RunConfig, Artifacts) = match cli.command {
        Command::Freq { common, warn_oov } => {
            let cfg = config(&common, Overrides::default())?;
            let art = cmd_freq(&cfg, FreqOptions { warn_oov })?;
            (cfg, art)
        }
        Command::Induce { common, k_a, k_b } => {
            let cfg = config(&common, Overrides { k_a, k_b, ..Overrides::default() })?;
            let art = cmd_induce(&cfg)?;
            (cfg, art)
        }
        Command::Overlap { common, k, source, rows } => {
            let cfg = config(&common, Overrides::default())?;
            let source = match source {
                SourceArg::Lemmas => OverlapSource::Lemmas,
                SourceArg::Words => OverlapSource::Words,
                SourceArg::Lists => OverlapSource::StopLists,
                SourceArg::Rows => OverlapSource::Rows(rows),
            };
            let art = cmd_overlap(&cfg, k, &source)?;
            (cfg, art)
        }
        Command::Posstats { common, pos_lexicon, depth, rank_variable, threshold } => {
            let cfg = config(&common, Overrides { pos_lexicon, ..Overrides::default() })?;
            let rank_variable = match rank_variable {
                RankArg::Rank => RankVariable::Rank,
                RankArg::Frequency => RankVariable::Frequency,
            };
            let art = cmd_posstats(&cfg, PosOptions { depth, rank_variable, threshold })?;
            (cfg, art)
        }
        Command::Assess { common, mapping, list } => {
            let cfg = config(&common, Overrides { mapping, stop_lemma_list: list, ..Overrides::default() })?;
            let art = cmd_assess(&cfg)?;
            (cfg, art)
        }
    };
    artifacts.write_to(&cfg.output_dir)?;
    for note in &artifacts.notes {
        eprintln!("{note}");
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
