//! `catalan` — batch command-line surface for Catalan pairs: enumeration,
//! axiom verification, format conversion, poset analysis, counting, the
//! brute-force oracle, and the golden-sequence battery.
//!
//! Exit codes: 0 success/valid, 1 invalid input data, 2 usage error.

mod sequences;

use catalan_pairs::encodings::{
    dyck_tunnels, matching_to_pair, pair_to_dyck, pair_to_matching, pair_to_partition,
    pair_to_perm, pair_to_tree, partition_to_pair, perm_to_pair, tree_to_pair, ArchMatching,
    DyckPath, NcPartition, Permutation, PlaneTree,
};
use catalan_pairs::general::{
    central_binomial, count_avoiders, count_comp_hk, count_unrestricted, schroder_number,
    verify_generalized, PatternSet, Profile, AVOIDER_ENVELOPE, COMP_HK_ENVELOPE,
};
use catalan_pairs::oracle::{oracle_catalan, oracle_generalized, oracle_posets_report};
use catalan_pairs::pairs::{self, CatalanPair, ENUMERATION_ENVELOPE};
use catalan_pairs::posets::{
    r_is_connected, r_is_distributive, r_is_lattice, s_tree_code, sim_classes,
};
use catalan_pairs::relcore::BinaryRelation;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::{BufWriter, Stdout, Write};
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};

/// Counting by enumeration and filtering stays within the enumeration cap.
const COUNT_FORMULA_CAP: usize = 1000;

#[derive(Parser)]
#[command(name = "catalan", version, about = "Catalan pairs toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every pair of size n, one per line, in recursive order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the axioms of each pair in a file; exit 0 iff all hold.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// catalan, factorial, comp-hk:H,K, unrestricted, grand-dyck, schroder
        #[arg(long, default_value = "catalan")]
        profile: String,
    },
    /// Convert between representations, line by line.
    Convert {
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(long)]
        input: PathBuf,
    },
    /// Poset flags and similarity classes of each pair in a file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Count a family at a given size.
    Count {
        /// catalan, connected, lattice, distributive, comp-hk:H,K,
        /// unrestricted, grand-dyck, schroder, avoiders:PATTERNS
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Brute-force ground truth; prints a report as JSON.
    Oracle {
        #[arg(long)]
        n: usize,
        /// catalan, posets, factorial, comp-hk:H,K, unrestricted,
        /// grand-dyck, schroder
        #[arg(long, default_value = "catalan")]
        profile: String,
    },
    /// Golden-sequence battery; exit 0 iff every comparison matches.
    Sequences {
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Matching,
    Dyck,
    Perm,
    Tree,
    Partition,
}

enum CliError {
    /// Bad flags or an exceeded envelope: exit 2.
    Usage(String),
    /// Invalid input data: exit 1.
    Invalid(String),
}

fn stdout_buffer() -> &'static Mutex<BufWriter<Stdout>> {
    static OUT: OnceLock<Mutex<BufWriter<Stdout>>> = OnceLock::new();
    OUT.get_or_init(|| Mutex::new(BufWriter::new(std::io::stdout())))
}

fn handle_write_error(e: std::io::Error) -> ! {
    // A closed pipe downstream ends the process quietly, like any filter.
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    eprintln!("error: cannot write to stdout: {e}");
    std::process::exit(1);
}

fn emit_raw(text: &str) {
    let mut out = stdout_buffer().lock().expect("stdout lock");
    if let Err(e) = out.write_all(text.as_bytes()) {
        handle_write_error(e);
    }
}

fn emit(line: &str) {
    emit_raw(line);
    emit_raw("\n");
}

fn flush_output() {
    let mut out = stdout_buffer().lock().expect("stdout lock");
    if let Err(e) = out.flush() {
        handle_write_error(e);
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = run(cli.command);
    flush_output();
    match outcome {
        Ok(()) => {}
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
        Err(CliError::Invalid(message)) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Enumerate { n, format } => enumerate_cmd(n, format),
        Command::Verify { input, profile } => verify_cmd(&input, &profile),
        Command::Convert { from, to, input } => convert_cmd(from, to, &input),
        Command::Analyze { input } => analyze_cmd(&input),
        Command::Count { family, n } => count_cmd(&family, n),
        Command::Oracle { n, profile } => oracle_cmd(n, &profile),
        Command::Sequences { check } => {
            if !check {
                return Err(CliError::Usage("pass --check to run the battery".into()));
            }
            let report = sequences::run_battery();
            emit_raw(&report.text);
            if report.all_ok {
                Ok(())
            } else {
                Err(CliError::Invalid("sequence comparisons failed".into()))
            }
        }
    }
}

/// One value per line. Blank lines are kept: for the text formats they are
/// the size-0 object; JSON consumers skip them.
fn read_lines(path: &PathBuf, skip_blank: bool) -> Result<Vec<String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(str::to_string)
        .filter(|l| !skip_blank || !l.trim().is_empty())
        .collect())
}

/// Raw relations as found in pair JSON, before any axiom checking.
fn parse_raw_relations(line: &str) -> Result<(BinaryRelation, BinaryRelation), CliError> {
    #[derive(serde::Deserialize)]
    struct Raw {
        n: usize,
        #[serde(rename = "S")]
        s: Vec<[usize; 2]>,
        #[serde(rename = "R")]
        r: Vec<[usize; 2]>,
        #[serde(default)]
        #[allow(dead_code)]
        profile: Option<String>,
    }
    let raw: Raw =
        serde_json::from_str(line).map_err(|e| CliError::Invalid(format!("bad pair JSON: {e}")))?;
    let s_pairs: Vec<(usize, usize)> = raw.s.iter().map(|&[x, y]| (x, y)).collect();
    let r_pairs: Vec<(usize, usize)> = raw.r.iter().map(|&[x, y]| (x, y)).collect();
    let s = BinaryRelation::from_pairs(raw.n, &s_pairs)
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    let r = BinaryRelation::from_pairs(raw.n, &r_pairs)
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    Ok((s, r))
}

fn decode(format: Format, line: &str) -> Result<CatalanPair, CliError> {
    match format {
        Format::Json => {
            let (s, r) = parse_raw_relations(line)?;
            CatalanPair::new(s, r).map_err(|e| match e {
                pairs::PairError::InvalidPair(report) => {
                    CliError::Invalid(serde_json::to_string(&report).expect("report serializes"))
                }
                other => CliError::Invalid(other.to_string()),
            })
        }
        Format::Matching => {
            let m: ArchMatching = line
                .parse()
                .map_err(|e| CliError::Invalid(format!("{e}")))?;
            Ok(matching_to_pair(&m))
        }
        Format::Dyck => {
            let d: DyckPath = line
                .parse()
                .map_err(|e| CliError::Invalid(format!("{e}")))?;
            Ok(dyck_tunnels(&d))
        }
        Format::Perm => {
            let p: Permutation = line
                .parse()
                .map_err(|e| CliError::Invalid(format!("{e}")))?;
            // The inversion relations live on values; relabel to the shared
            // left-endpoint canonical form.
            perm_to_pair(&p)
                .map(|pair| pair.canonicalize())
                .map_err(|e| CliError::Invalid(format!("{e}")))
        }
        Format::Tree => {
            let t: PlaneTree = line
                .parse()
                .map_err(|e| CliError::Invalid(format!("{e}")))?;
            Ok(tree_to_pair(&t))
        }
        Format::Partition => {
            let p: NcPartition = line
                .parse()
                .map_err(|e| CliError::Invalid(format!("{e}")))?;
            Ok(partition_to_pair(&p))
        }
    }
}

fn encode(format: Format, pair: &CatalanPair) -> String {
    match format {
        Format::Json => serde_json::to_string(pair).expect("pair serializes"),
        Format::Matching => pair_to_matching(pair).to_string(),
        Format::Dyck => pair_to_dyck(pair).to_string(),
        Format::Perm => pair_to_perm(pair).to_string(),
        Format::Tree => pair_to_tree(pair).to_string(),
        Format::Partition => pair_to_partition(pair).to_string(),
    }
}

fn enumerate_cmd(n: usize, format: Format) -> Result<(), CliError> {
    if n > ENUMERATION_ENVELOPE {
        return Err(CliError::Usage(format!(
            "enumeration envelope is n <= {ENUMERATION_ENVELOPE}"
        )));
    }
    for pair in pairs::enumerate(n) {
        // Emit the left-endpoint canonical labeling so every format decodes
        // back to exactly this line.
        emit(&encode(format, &pair.canonicalize()));
    }
    Ok(())
}

fn verify_cmd(input: &PathBuf, profile: &str) -> Result<(), CliError> {
    // Reject bad flags before reading any data.
    let parsed: Option<Profile> = if profile == "catalan" {
        None
    } else {
        Some(
            profile
                .parse()
                .map_err(|e| CliError::Usage(format!("bad profile: {e}")))?,
        )
    };
    let lines = read_lines(input, true)?;
    let mut all_valid = true;
    for line in &lines {
        let (s, r) = parse_raw_relations(line)?;
        let valid = match parsed {
            None => {
                let report = pairs::verify(&s, &r).map_err(|e| CliError::Invalid(e.to_string()))?;
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
                report.valid
            }
            Some(generalized) => {
                let report = verify_generalized(&s, &r, generalized)
                    .map_err(|e| CliError::Invalid(e.to_string()))?;
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
                report.valid
            }
        };
        all_valid &= valid;
    }
    if all_valid {
        Ok(())
    } else {
        Err(CliError::Invalid("some pairs failed verification".into()))
    }
}

fn convert_cmd(from: Format, to: Format, input: &PathBuf) -> Result<(), CliError> {
    let lines = read_lines(input, from == Format::Json)?;
    for line in &lines {
        let pair = decode(from, line)?;
        emit(&encode(to, &pair));
    }
    Ok(())
}

fn analyze_cmd(input: &PathBuf) -> Result<(), CliError> {
    let lines = read_lines(input, true)?;
    for line in &lines {
        let pair = decode(Format::Json, line)?;
        let classes = sim_classes(pair.r()).expect("second component is a strict order");
        let row = json!({
            "n": pair.n(),
            "connected": r_is_connected(&pair),
            "lattice": r_is_lattice(&pair),
            "distributive": r_is_distributive(&pair),
            "sTreeCode": s_tree_code(&pair),
            "simClasses": classes.classes(),
        });
        emit(&row.to_string());
    }
    Ok(())
}

fn count_cmd(family: &str, n: usize) -> Result<(), CliError> {
    let by_enumeration = |n: usize, f: &dyn Fn(&CatalanPair) -> bool| -> Result<String, CliError> {
        if n > ENUMERATION_ENVELOPE {
            return Err(CliError::Usage(format!(
                "family is counted by enumeration, envelope n <= {ENUMERATION_ENVELOPE}"
            )));
        }
        Ok(pairs::enumerate(n)
            .iter()
            .filter(|p| f(p))
            .count()
            .to_string())
    };
    let formula_cap = |n: usize| -> Result<(), CliError> {
        if n > COUNT_FORMULA_CAP {
            Err(CliError::Usage(format!(
                "count envelope is n <= {COUNT_FORMULA_CAP}"
            )))
        } else {
            Ok(())
        }
    };
    let text = match family {
        "catalan" => {
            formula_cap(n)?;
            pairs::count(n).to_string()
        }
        "connected" => by_enumeration(n, &r_is_connected)?,
        "lattice" => by_enumeration(n, &r_is_lattice)?,
        "distributive" => by_enumeration(n, &r_is_distributive)?,
        "unrestricted" => {
            formula_cap(n)?;
            count_unrestricted(n).to_string()
        }
        "grand-dyck" => {
            formula_cap(n)?;
            central_binomial(n).to_string()
        }
        "schroder" => {
            formula_cap(n)?;
            schroder_number(n).to_string()
        }
        other => {
            if let Some(args) = other.strip_prefix("avoiders:") {
                let patterns: Vec<Permutation> = args
                    .split(',')
                    .map(|w| {
                        w.trim()
                            .parse()
                            .map_err(|e| CliError::Usage(format!("{e}")))
                    })
                    .collect::<Result<_, _>>()?;
                let set = PatternSet::new(patterns).map_err(|e| CliError::Usage(e.to_string()))?;
                count_avoiders(n, &set)
                    .map_err(|_| {
                        CliError::Usage(format!("avoider envelope is n <= {AVOIDER_ENVELOPE}"))
                    })?
                    .to_string()
            } else if let Some(args) = other.strip_prefix("comp-hk:") {
                let profile: Profile =
                    format!("comp-hk:{args}").parse().map_err(CliError::Usage)?;
                let Profile::CompHK { h, k } = profile else {
                    unreachable!()
                };
                count_comp_hk(n, h, k)
                    .map_err(|_| {
                        CliError::Usage(format!("comp-hk envelope is n <= {COMP_HK_ENVELOPE}"))
                    })?
                    .to_string()
            } else {
                return Err(CliError::Usage(format!("unknown family {other:?}")));
            }
        }
    };
    emit(&text);
    Ok(())
}

fn oracle_cmd(n: usize, profile: &str) -> Result<(), CliError> {
    let report = match profile {
        "catalan" => oracle_catalan(n),
        "posets" => oracle_posets_report(n),
        other => {
            let parsed: Profile = other
                .parse()
                .map_err(|e| CliError::Usage(format!("bad profile: {e}")))?;
            oracle_generalized(n, parsed)
        }
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    Ok(())
}
