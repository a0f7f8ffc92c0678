//! The database scan: a worker pool over contiguous class blocks with
//! in-order reduction, periodic checkpoints, and resume.
//!
//! Workers claim block indices from an atomic counter and send per-block
//! summaries over a channel; the reducing thread merges blocks strictly in
//! index order. Counts are sums and failures are appended in class order,
//! so the final report is a pure function of the slice and range — worker
//! count and interruption pattern never show through.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use crate::analyze::{analyze_orientation_class, ClassOptions};
use crate::checkpoint::Checkpoint;
use crate::db::Record;
use crate::report::{Failure, ScanReport};
use crate::ScanError;

pub const DEFAULT_BLOCK_SIZE: u64 = 1024;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub from: u64,
    pub to: u64,
    pub workers: usize,
    pub block_size: u64,
    pub checkpoint_path: Option<PathBuf>,
    /// Digest of the database file; required when checkpointing.
    pub database_digest: Option<String>,
    /// Classes already merged by a previous run (resume point).
    pub start_class: u64,
    /// Counts carried over from the checkpoint being resumed.
    pub carried: Option<ScanReport>,
    pub validate_records: bool,
    /// Stop after merging this many blocks; a debugging and test aid that
    /// exercises the interruption path deterministically.
    pub halt_after_blocks: Option<u64>,
    pub quiet: bool,
}

impl ScanOptions {
    pub fn new(from: u64, to: u64) -> ScanOptions {
        ScanOptions {
            from,
            to,
            workers: 1,
            block_size: DEFAULT_BLOCK_SIZE,
            checkpoint_path: None,
            database_digest: None,
            start_class: from,
            carried: None,
            validate_records: false,
            halt_after_blocks: None,
            quiet: true,
        }
    }
}

#[derive(Debug)]
pub enum ScanOutcome {
    Completed(ScanReport),
    /// Halted early at a block boundary; the checkpoint names the resume point.
    Halted(Checkpoint),
}

struct BlockResult {
    index: u64,
    classes: u64,
    tested: u64,
    cyclic_skipped: u64,
    acyclic: u64,
    failures: Vec<Failure>,
}

/// Scans `records` (the slice covering `[options.from, options.to)`).
/// Deterministic: the report depends only on the slice and range.
pub fn scan_records(records: &[Record], options: &ScanOptions) -> Result<ScanOutcome, ScanError> {
    assert_eq!(records.len() as u64, options.to - options.from, "slice must cover the range");
    assert!(options.start_class >= options.from && options.start_class <= options.to);
    let started = Instant::now();

    let mut report = options.carried.clone().unwrap_or_default();
    report.elapsed_ms = None;

    let remaining = options.to - options.start_class;
    let block_size = options.block_size.max(1);
    let total_blocks = remaining.div_ceil(block_size);
    let workers = options.workers.max(1);

    let class_options =
        ClassOptions { validate: options.validate_records, collect_certificates: false };

    let next_block = AtomicU64::new(0);
    let halt = AtomicBool::new(false);
    let (sender, receiver) = mpsc::channel::<Result<BlockResult, ScanError>>();

    let mut outcome: Result<Option<Checkpoint>, ScanError> = Ok(None);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            let sender = sender.clone();
            let next_block = &next_block;
            let halt = &halt;
            let options = &options;
            let class_options = &class_options;
            scope.spawn(move || loop {
                if halt.load(Ordering::Relaxed) {
                    return;
                }
                let block = next_block.fetch_add(1, Ordering::Relaxed);
                if block >= total_blocks {
                    return;
                }
                let first = options.start_class + block * block_size;
                let last = (first + block_size).min(options.to);
                let mut result = BlockResult {
                    index: block,
                    classes: last - first,
                    tested: 0,
                    cyclic_skipped: 0,
                    acyclic: 0,
                    failures: Vec::new(),
                };
                for class in first..last {
                    let record = &records[(class - options.from) as usize];
                    debug_assert_eq!(record.class, class);
                    let summary = record
                        .parse()
                        .and_then(|chirotope| {
                            analyze_orientation_class(&chirotope, class + 1, class_options)
                        });
                    match summary {
                        Ok(summary) => {
                            result.tested += summary.tested as u64;
                            result.cyclic_skipped += summary.cyclic_skipped as u64;
                            result.acyclic += summary.acyclic as u64;
                            result.failures.extend(summary.failed_reorientations.iter().map(
                                |set| Failure { class, reorientation: set.to_string() },
                            ));
                        }
                        Err(error) => {
                            let _ = sender.send(Err(error));
                            return;
                        }
                    }
                }
                if sender.send(Ok(result)).is_err() {
                    return;
                }
            });
        }
        drop(sender);

        let mut pending: BTreeMap<u64, BlockResult> = BTreeMap::new();
        let mut next_to_merge = 0u64;
        let mut merged_classes = 0u64;

        'recv: while next_to_merge < total_blocks {
            let message = match receiver.recv() {
                Ok(message) => message,
                Err(_) => break, // workers gone; remaining blocks already pending or lost to halt
            };
            let block = match message {
                Ok(block) => block,
                Err(error) => {
                    halt.store(true, Ordering::Relaxed);
                    outcome = Err(error);
                    break;
                }
            };
            pending.insert(block.index, block);
            while let Some(block) = pending.remove(&next_to_merge) {
                report.classes_processed += block.classes;
                report.matroids_processed += block.tested;
                report.cyclic_skipped += block.cyclic_skipped;
                report.acyclic_count += block.acyclic;
                report.failures.extend(block.failures);
                merged_classes += block.classes;
                next_to_merge += 1;

                let next_class = options.start_class + merged_classes;
                if let Some(path) = &options.checkpoint_path {
                    let digest = options
                        .database_digest
                        .clone()
                        .expect("checkpointing requires the database digest");
                    let checkpoint =
                        Checkpoint::new(digest, options.from, options.to, next_class, report.clone());
                    if let Err(error) = checkpoint.write(path) {
                        halt.store(true, Ordering::Relaxed);
                        outcome = Err(error);
                        break 'recv;
                    }
                    if !options.quiet {
                        eprintln!(
                            "checkpoint: {next_class}/{} classes merged",
                            options.to
                        );
                    }
                }
                if options.halt_after_blocks == Some(next_to_merge) && next_class < options.to {
                    halt.store(true, Ordering::Relaxed);
                    let digest = options.database_digest.clone().unwrap_or_default();
                    outcome = Ok(Some(Checkpoint::new(
                        digest,
                        options.from,
                        options.to,
                        next_class,
                        report.clone(),
                    )));
                    break 'recv;
                }
            }
        }

        // Drain so worker sends never block a join.
        while receiver.try_recv().is_ok() {}
    });

    match outcome {
        Err(error) => Err(error),
        Ok(Some(checkpoint)) => Ok(ScanOutcome::Halted(checkpoint)),
        Ok(None) => {
            report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
            Ok(ScanOutcome::Completed(report))
        }
    }
}
