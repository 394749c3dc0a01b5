use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use factualis::lexicon::{LineError, LoadError};
use factualis::stats::{render_reports, ReportName, StatsConfig};
use factualis::{
    classify, convert_sheet, generate_grid, grid_columns, load_tsv, parse_clause, parse_signature,
    project, strength_level, validate, write_tsv, Classing, DegreeMapping, Lexicon, MappingMode,
    PfvUnknownPolicy, ProjectionConfig, Reading,
};

/// Inferential signatures, factuality lookup and projection, and lexicon statistics.
#[derive(Debug, Parser)]
#[command(name = "factualis", version)]
struct Cli {
    /// Lexicon TSV file (defaults to the bundled seed lexicon)
    #[arg(long, global = true, env = "FACTUALIS_LEXICON", value_name = "PATH")]
    lexicon: Option<PathBuf>,

    /// Mapping from inference magnitude to certainty degree
    #[arg(long, global = true, value_enum, default_value_t = Mapping::Paper)]
    mapping: Mapping,

    /// Perfective occurrence with unknown subject animacy: take the weaker signature or fail
    #[arg(long, global = true, value_enum, default_value_t = PfvUnknown::Weaker)]
    pfv_unknown: PfvUnknown,

    /// Perfective slot that classes readings annotated for both subject types
    #[arg(long, global = true, value_enum, default_value_t = ClassingArg::Anim)]
    classing: ClassingArg,

    /// Tab-separated output
    #[arg(long, global = true)]
    tsv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mapping {
    Paper,
    Fine,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PfvUnknown {
    Weaker,
    Error,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassingArg {
    Anim,
    Inanim,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Show the readings of a lemma
    Lookup { lemma: String, reading_id: Option<String> },
    /// Factuality grid of a signature such as "1|-1"
    Grid {
        #[arg(allow_hyphen_values = true)]
        signature: String,
    },
    /// Factuality profile of a clause expression
    Project { expression: String },
    /// Lexicon statistics: a report name or "all"
    Stats { report: String },
    /// Check a lexicon TSV file
    Validate { path: PathBuf },
    /// Convert a spreadsheet CSV export to lexicon TSV
    Convert { source: PathBuf, destination: PathBuf },
}

/// Exit status 1: the command ran but the answer is negative.
const NEGATIVE: u8 = 1;
/// Exit status 2: usage, parse or I/O failure.
const FAILURE: u8 = 2;

struct Failure(u8, String);

impl Cli {
    fn mapping(&self) -> DegreeMapping {
        DegreeMapping::for_mode(match self.mapping {
            Mapping::Paper => MappingMode::Paper,
            Mapping::Fine => MappingMode::Fine,
        })
    }

    fn classing(&self) -> Classing {
        match self.classing {
            ClassingArg::Anim => Classing::AnimFirst,
            ClassingArg::Inanim => Classing::InanimFirst,
        }
    }

    fn pfv_unknown(&self) -> PfvUnknownPolicy {
        match self.pfv_unknown {
            PfvUnknown::Weaker => PfvUnknownPolicy::Weaker,
            PfvUnknown::Error => PfvUnknownPolicy::Error,
        }
    }

    fn lexicon(&self) -> Result<Lexicon, Failure> {
        let Some(path) = &self.lexicon else {
            return Ok(Lexicon::seed());
        };
        let (lex, errors) = read_tsv(path).map_err(|e| Failure(FAILURE, e))?;
        if errors.is_empty() {
            Ok(lex)
        } else {
            Err(Failure(FAILURE, row_errors(path, &errors)))
        }
    }
}

fn read_tsv(path: &Path) -> Result<(Lexicon, Vec<LineError>), String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    load_tsv(BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))
}

fn row_errors(path: &Path, errors: &[LineError]) -> String {
    let lines: Vec<String> = errors
        .iter()
        .map(|e| format!("{}: {e}", path.display()))
        .collect();
    lines.join("\n")
}

fn align(rows: &[Vec<String>], tsv: bool) -> String {
    if tsv {
        return rows.iter().map(|r| r.join("\t") + "\n").collect();
    }
    let mut widths = Vec::new();
    for row in rows {
        widths.resize(widths.len().max(row.len()), 0);
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (cell, w) in row.iter().zip(&widths) {
            line.push_str(cell);
            line.push_str(&" ".repeat(w - cell.chars().count() + 2));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

fn slot_rows(r: &Reading) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    let mut add = |role: &str, slots: &factualis::ContextSlots| {
        for (key, slot) in slots.iter() {
            rows.push(vec![
                role.to_string(),
                key.to_string(),
                slot.to_string(),
                slot.signature()
                    .map_or("-".to_string(), |s| classify(s).to_string()),
                strength_level(slot).to_string(),
            ]);
        }
    };
    add("verb", &r.slots);
    if let Some(cog) = &r.cogniser_slots {
        add("cogniser", cog);
    }
    rows
}

fn lookup(cli: &Cli, lemma: &str, reading_id: Option<&str>) -> Result<String, Failure> {
    let lex = cli.lexicon()?;
    let matches: Vec<&Reading> = lex
        .readings_of(lemma)
        .filter(|r| reading_id.is_none_or(|id| r.reading_id == id || r.answers_to(id)))
        .collect();
    if matches.is_empty() {
        return Err(Failure(NEGATIVE, "no entries".into()));
    }
    let mut out = String::new();
    if cli.tsv {
        let mut rows = vec![["lemma", "reading_id", "source", "role", "context", "slot", "class", "level"]
            .map(String::from)
            .to_vec()];
        for r in &matches {
            for slot_row in slot_rows(r) {
                let mut row = vec![r.lemma.clone(), r.reading_id.clone(), r.source.to_string()];
                row.extend(slot_row);
                rows.push(row);
            }
        }
        return Ok(align(&rows, true));
    }
    for (i, r) in matches.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("{}:{} ({})", r.lemma, r.reading_id, r.source));
        if !r.gloss.is_empty() {
            out.push_str(&format!("  {}", r.gloss));
        }
        out.push('\n');
        out.push_str(&format!(
            "  subcat: {}  sip: {}  events: {}\n",
            join(&r.subcat),
            yes_no(r.sip),
            join(&r.event_kinds)
        ));
        out.push_str(&format!("  signatures: {}\n", r.slots));
        if let Some(cog) = &r.cogniser_slots {
            out.push_str(&format!("  cogniser:   {cog}\n"));
        }
        for line in align(&slot_rows(r), false).lines() {
            out.push_str("  ");
            out.push_str(line);
            out.push('\n');
        }
    }
    Ok(out)
}

fn grid(cli: &Cli, text: &str) -> Result<String, Failure> {
    let slot = parse_signature(text.trim()).map_err(|e| Failure(FAILURE, e.to_string()))?;
    let sig = slot.signature().ok_or_else(|| {
        Failure(FAILURE, format!("{slot} has no factuality grid; give a signature"))
    })?;
    let header: Vec<String> = grid_columns()
        .iter()
        .map(|c| format!("{}{}", c.degree, c.polarity.symbol()))
        .collect();
    let values: Vec<String> = generate_grid(sig, &cli.mapping())
        .iter()
        .map(ToString::to_string)
        .collect();
    Ok(align(&[header, values], cli.tsv))
}

fn project_expression(cli: &Cli, text: &str) -> Result<String, Failure> {
    let tree = parse_clause(text).map_err(|e| Failure(FAILURE, format!("parse error: {e}")))?;
    let lex = cli.lexicon()?;
    let config = ProjectionConfig {
        mapping: cli.mapping(),
        pfv_unknown: cli.pfv_unknown(),
    };
    let profiles = project(&lex, &tree, &config).map_err(|e| Failure(FAILURE, e.to_string()))?;
    let rows: Vec<Vec<String>> = profiles
        .iter()
        .flat_map(|p| {
            p.assignments
                .iter()
                .map(|(chain, value)| vec![p.event_label.clone(), chain.to_string(), value.to_string()])
        })
        .collect();
    Ok(align(&rows, cli.tsv))
}

fn stats(cli: &Cli, name: &str) -> Result<String, Failure> {
    let names = if name == "all" {
        ReportName::ALL.to_vec()
    } else {
        vec![name.parse::<ReportName>().map_err(|e| Failure(FAILURE, e))?]
    };
    let lex = cli.lexicon()?;
    let config = StatsConfig {
        classing: cli.classing(),
        ..Default::default()
    };
    let lexicon = cli
        .lexicon
        .as_ref()
        .map_or("seed".to_string(), |p| p.display().to_string());
    let header = format!(
        "# lexicon: {lexicon} ({} readings); classing: {}; mapping: {}\n",
        lex.len(),
        config.classing,
        match cli.mapping {
            Mapping::Paper => MappingMode::Paper,
            Mapping::Fine => MappingMode::Fine,
        }
    );
    Ok(header + &render_reports(&names, &lex, &config, cli.tsv))
}

fn validate_file(path: &Path) -> Result<String, Failure> {
    let (lex, errors) = match read_tsv(path) {
        Ok(loaded) => loaded,
        Err(e) => {
            let status = match File::open(path) {
                Err(_) => FAILURE,
                Ok(_) => NEGATIVE,
            };
            return Err(Failure(status, e));
        }
    };
    let report = validate(&lex);
    let mut out = String::new();
    for e in &errors {
        out.push_str(&format!("error: {e}\n"));
    }
    if !errors.is_empty() {
        out.push_str(&format!("{} rows rejected\n", errors.len()));
    }
    out.push_str(&report.to_string());
    if errors.is_empty() && report.is_ok() {
        Ok(out)
    } else {
        Err(Failure(NEGATIVE, out))
    }
}

fn convert(source: &Path, destination: &Path) -> Result<String, Failure> {
    let io_failure = |path: &Path, e: &dyn std::fmt::Display| {
        Failure(FAILURE, format!("{}: {e}", path.display()))
    };
    let file = File::open(source).map_err(|e| io_failure(source, &e))?;
    let (lex, errors) = convert_sheet(BufReader::new(file)).map_err(|e| match e {
        LoadError::Io(e) => io_failure(source, &e),
        other => Failure(NEGATIVE, format!("{}: {other}", source.display())),
    })?;
    let out = File::create(destination).map_err(|e| io_failure(destination, &e))?;
    let mut out = BufWriter::new(out);
    write_tsv(&lex, &mut out)
        .and_then(|_| out.flush())
        .map_err(|e| io_failure(destination, &e))?;
    let summary = format!("wrote {} readings to {}\n", lex.len(), destination.display());
    if errors.is_empty() {
        Ok(summary)
    } else {
        Err(Failure(
            NEGATIVE,
            format!("{}\n{}", row_errors(source, &errors), summary.trim_end()),
        ))
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Lookup { lemma, reading_id } => lookup(cli, lemma, reading_id.as_deref()),
        Command::Grid { signature } => grid(cli, signature),
        Command::Project { expression } => project_expression(cli, expression),
        Command::Stats { report } => stats(cli, report),
        Command::Validate { path } => validate_file(path),
        Command::Convert {
            source,
            destination,
        } => convert(source, destination),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure(status, message)) => {
            // validation reports go to stdout even when negative
            if matches!(cli.command, Command::Validate { .. }) && status == NEGATIVE {
                let _ = io::stdout().write_all(message.as_bytes());
            } else {
                eprintln!("factualis: {message}");
            }
            ExitCode::from(status)
        }
    }
}
