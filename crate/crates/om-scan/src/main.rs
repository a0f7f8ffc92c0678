use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use om_core::{find_triple_link, linked_triangle_graph, CircuitSet};
use om_geometry::{chirotope_from_points, geometric_linked, random_general_position, PointConfiguration};
use om_scan::analyze::{analyze_orientation_class, ClassOptions};
use om_scan::checkpoint::Checkpoint;
use om_scan::db;
use om_scan::report::{self, CertificateRecord, EmbedReport, RandomReport, RecordFailure, ValidateReport};
use om_scan::scan::{scan_records, ScanOptions, ScanOutcome, DEFAULT_BLOCK_SIZE};
use om_scan::ScanError;

/// Detects non-split three-component links in straight-edge embeddings of
/// the complete graph on nine vertices, working over oriented-matroid
/// databases or explicit point coordinates.
#[derive(Parser)]
#[command(name = "om-scan", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a database of chirotope records for reorientations without a triple link.
    Scan {
        /// Database file: one 126-character '+'/'-' record per line.
        db: PathBuf,
        /// First class index to scan (0-based, inclusive).
        #[arg(long)]
        from: Option<u64>,
        /// Class index to stop before (exclusive).
        #[arg(long)]
        to: Option<u64>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        /// Classes per work block.
        #[arg(long, default_value_t = DEFAULT_BLOCK_SIZE)]
        block_size: u64,
        /// Write a resumable checkpoint here after every merged block.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint instead of starting over.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Run the circuit-axiom validator on every record (slow).
        #[arg(long)]
        validate_records: bool,
        /// Stop after merging N blocks; testing and debugging aid.
        #[arg(long, hide = true)]
        halt_after_blocks: Option<u64>,
        /// Suppress progress lines on stderr.
        #[arg(long)]
        quiet: bool,
    },
    /// Analyze a single chirotope: all 256 reorientations, certificates included.
    Analyze {
        /// 126-character sign string; "-" or omitted reads one from stdin.
        chirotope: Option<String>,
        /// Skip certificate listings in the output document.
        #[arg(long)]
        no_certificates: bool,
    },
    /// Analyze a points file: chirotope, circuits, linked pairs, certificate.
    Embed {
        /// Points file: three whitespace-separated integers per line,
        /// '#' comments ignored; line position is the vertex label.
        points: PathBuf,
    },
    /// Generate seeded random configurations and verify each triple link.
    Random {
        #[arg(long, default_value_t = 9)]
        n: u8,
        /// First seed; configurations use seed, seed+1, ..
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u32,
        /// Coordinates are drawn from [0, box]^3.
        #[arg(long = "box", default_value_t = 1000)]
        box_bound: i64,
    },
    /// Check every record of a database against the circuit axioms.
    Validate {
        db: PathBuf,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

/// Exit codes: 0 clean, 1 linkage/axiom failures found, 2 usage or data error.
const EXIT_CLEAN: ExitCode = ExitCode::SUCCESS;
const EXIT_FAILURES: ExitCode = ExitCode::FAILURE;

fn run(command: Command) -> Result<ExitCode, ScanError> {
    match command {
        Command::Scan {
            db,
            from,
            to,
            workers,
            block_size,
            checkpoint,
            resume,
            validate_records,
            halt_after_blocks,
            quiet,
        } => {
            let total = db::count_records(&db)?;
            let digest_needed = checkpoint.is_some() || resume;
            let digest = if digest_needed { Some(db::file_digest(&db)?) } else { None };

            let (range_from, range_to, start_class, carried) = if resume {
                let path = checkpoint.as_ref().expect("clap enforces --checkpoint with --resume");
                let stored = Checkpoint::read(path)?;
                stored.matches_database(digest.as_deref().unwrap())?;
                let requested_from = from.unwrap_or(stored.from);
                let requested_to = to.unwrap_or(stored.to);
                if requested_from != stored.from || requested_to != stored.to {
                    return Err(ScanError::RangeMismatch {
                        stored_from: stored.from,
                        stored_to: stored.to,
                        requested_from,
                        requested_to,
                    });
                }
                (stored.from, stored.to, stored.next_class, Some(stored.partial))
            } else {
                (from.unwrap_or(0), to.unwrap_or(total), from.unwrap_or(0), None)
            };

            let (records, _) = db::read_slice(&db, range_from, range_to)?;
            let mut options = ScanOptions::new(range_from, range_to);
            options.workers = workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
            options.block_size = block_size;
            options.checkpoint_path = checkpoint;
            options.database_digest = digest;
            options.start_class = start_class;
            options.carried = carried;
            options.validate_records = validate_records;
            options.halt_after_blocks = halt_after_blocks;
            options.quiet = quiet;

            match scan_records(&records, &options)? {
                ScanOutcome::Completed(report) => {
                    print!("{}", report::emit(&report));
                    if report.is_clean() {
                        Ok(EXIT_CLEAN)
                    } else {
                        Ok(EXIT_FAILURES)
                    }
                }
                ScanOutcome::Halted(checkpoint) => {
                    eprintln!(
                        "halted at class {} of {}..{}; resume with --resume",
                        checkpoint.next_class, checkpoint.from, checkpoint.to
                    );
                    Ok(EXIT_CLEAN)
                }
            }
        }

        Command::Analyze { chirotope, no_certificates } => {
            let text = match chirotope.as_deref() {
                Some("-") | None => {
                    let mut input = String::new();
                    std::io::stdin()
                        .read_to_string(&mut input)
                        .map_err(|e| ScanError::io("<stdin>", e))?;
                    input
                        .lines()
                        .map(str::trim)
                        .find(|l| !l.is_empty())
                        .ok_or_else(|| ScanError::Usage("no chirotope on stdin".into()))?
                        .to_string()
                }
                Some(text) => text.to_string(),
            };
            let chirotope = om_core::Chirotope::parse(&text, db::GROUND_SET, db::RANK)?;
            let options =
                ClassOptions { validate: true, collect_certificates: !no_certificates };
            let summary = analyze_orientation_class(&chirotope, 1, &options)?;
            let report = summary.to_report(&chirotope);
            print!("{}", report::emit(&report));
            if summary.failed_reorientations.is_empty() {
                Ok(EXIT_CLEAN)
            } else {
                Ok(EXIT_FAILURES)
            }
        }

        Command::Embed { points } => {
            let text =
                std::fs::read_to_string(&points).map_err(|e| ScanError::io(&points, e))?;
            let config = PointConfiguration::parse(&text)?;
            let chirotope = chirotope_from_points(&config)?;
            let circuits = CircuitSet::from_chirotope(&chirotope);
            let mut linked_pairs = Vec::new();
            if config.n() >= 6 {
                let graph = linked_triangle_graph(&circuits);
                for (i, t) in graph.triangles().iter().enumerate() {
                    for &j in graph.neighbors(i) {
                        if (j as usize) > i {
                            linked_pairs
                                .push([t.to_string(), graph.triangles()[j as usize].to_string()]);
                        }
                    }
                }
            }
            let certificate = if config.n() == 9 {
                find_triple_link(&circuits)
                    .map(|c| CertificateRecord::new(om_core::LabelSet::EMPTY, &c))
            } else {
                None
            };
            let missing_certificate = config.n() == 9 && certificate.is_none();
            let report = EmbedReport {
                kind: "embed".into(),
                n: config.n(),
                chirotope: chirotope.to_string(),
                circuit_count: circuits.len() as u64,
                circuits: circuits.iter().map(ToString::to_string).collect(),
                linked_pairs,
                certificate,
            };
            print!("{}", report::emit(&report));
            if missing_certificate {
                Ok(EXIT_FAILURES)
            } else {
                Ok(EXIT_CLEAN)
            }
        }

        Command::Random { n, seed, count, box_bound } => {
            let mut verified = 0u32;
            let mut failed_seeds = Vec::new();
            for offset in 0..count as u64 {
                let current = seed + offset;
                if verify_one_seed(n, current, box_bound)? {
                    verified += 1;
                } else {
                    failed_seeds.push(current);
                }
            }
            let report = RandomReport {
                kind: "random-verify".into(),
                n,
                first_seed: seed,
                count,
                box_bound,
                verified,
                failed_seeds,
            };
            print!("{}", report::emit(&report));
            if report.failed_seeds.is_empty() {
                Ok(EXIT_CLEAN)
            } else {
                Ok(EXIT_FAILURES)
            }
        }

        Command::Validate { db: path, from, to } => {
            let total = db::count_records(&path)?;
            let from = from.unwrap_or(0);
            let to = to.unwrap_or(total);
            let (records, _) = db::read_slice(&path, from, to)?;
            let mut failures = Vec::new();
            for record in &records {
                let chirotope = record.parse()?;
                let result = CircuitSet::from_chirotope(&chirotope).validate();
                if !result.passed() {
                    failures.push(RecordFailure {
                        line: record.class + 1,
                        violation: result.to_string(),
                    });
                }
            }
            let report = ValidateReport {
                kind: "validate".into(),
                records_checked: records.len() as u64,
                passed: records.len() as u64 - failures.len() as u64,
                failures,
            };
            print!("{}", report::emit(&report));
            if report.failures.is_empty() {
                Ok(EXIT_CLEAN)
            } else {
                Ok(EXIT_FAILURES)
            }
        }
    }
}

/// One generate-and-verify round: the certificate must exist and re-validate
/// against both the circuit data and exact geometry.
fn verify_one_seed(n: u8, seed: u64, box_bound: i64) -> Result<bool, ScanError> {
    let config = random_general_position(n, seed, box_bound)?;
    let chirotope = chirotope_from_points(&config)?;
    let circuits = CircuitSet::from_chirotope(&chirotope);
    if n != 9 {
        // Without nine points there is no triple-link search; the seed
        // verifies if the derived circuits are a valid acyclic matroid.
        return Ok(circuits.validate().passed() && circuits.is_acyclic());
    }
    let Some(certificate) = find_triple_link(&circuits) else {
        return Ok(false);
    };
    if !certificate.verify(&circuits) {
        return Ok(false);
    }
    let geometric = geometric_linked(
        config.triangle_points(certificate.middle),
        config.triangle_points(certificate.left),
    )? && geometric_linked(
        config.triangle_points(certificate.middle),
        config.triangle_points(certificate.right),
    )?;
    Ok(geometric)
}
