//! `scan`: roots of `J(t) - 1` across a knot table.

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use jones_one::bracket::{bundled_table, jones_from_pd, parse_knot_table, KnotEntry, CROSSING_CAP};
use jones_one::roots::{classify, solutions_of_jones_equals_one, ClassifyOptions};
use num_complex::Complex64;

use crate::config::Config;
use crate::csv_out::{root_record, writer, ROOT_HEADER};
use crate::{svg, CliError, ScanArgs};

/// Share of entries allowed to fail before the scan as a whole fails.
pub const FAILURE_LIMIT: f64 = 0.05;

#[derive(Clone, Debug, PartialEq)]
pub struct ScanConfig {
    pub input_path: Option<PathBuf>,
    pub max_crossings: usize,
    pub out_csv: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
    pub workers: usize,
    pub classify: ClassifyOptions,
}

impl ScanConfig {
    pub fn resolve(args: ScanArgs, cfg: &Config) -> Result<Self, CliError> {
        let max_crossings = cfg.resolve(args.max_crossings, "max-crossings", 10)?;
        if max_crossings == 0 || max_crossings > CROSSING_CAP {
            return Err(CliError::Usage(format!(
                "max-crossings must lie in 1..={CROSSING_CAP}, got {max_crossings}"
            )));
        }
        let default_workers = thread::available_parallelism().map_or(1, |n| n.get());
        let workers = cfg.resolve(args.workers, "workers", default_workers)?;
        if workers == 0 {
            return Err(CliError::Usage("workers must be positive".into()));
        }
        Ok(ScanConfig {
            input_path: cfg.resolve_opt(args.input, "input")?,
            max_crossings,
            out_csv: cfg.resolve_opt(args.out_csv, "out-csv")?,
            out_svg: cfg.resolve_opt(args.out_svg, "out-svg")?,
            workers,
            classify: args.classify.resolve(cfg)?,
        })
    }
}

/// Roots found for one knot, ready for output.
struct KnotRows {
    records: Vec<[String; 8]>,
    points: Vec<(Complex64, bool)>,
}

fn process(entry: &KnotEntry, opts: &ClassifyOptions) -> Result<KnotRows, String> {
    let j = jones_from_pd(&entry.pd, false).map_err(|e| e.to_string())?;
    let report = solutions_of_jones_equals_one(&j).map_err(|e| e.to_string())?;
    let f = &j - &jones_one::LaurentPoly::one(j.var());
    let alternating = entry.alternating.unwrap_or(false);
    let mut rows = KnotRows {
        records: Vec::with_capacity(report.roots.len()),
        points: Vec::with_capacity(report.roots.len()),
    };
    for root in &report.roots {
        rows.records
            .push(root_record(&entry.name, root, &classify(root.z, &f, opts)));
        rows.points.push((root.z, alternating));
    }
    Ok(rows)
}

/// Runs `process` over `entries` on `workers` threads; results keep input order.
fn process_all(
    entries: &[KnotEntry],
    opts: &ClassifyOptions,
    workers: usize,
) -> Vec<Result<KnotRows, String>> {
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<KnotRows, String>>> = (0..entries.len()).map(|_| None).collect();
    let chunks: Vec<Vec<(usize, Result<KnotRows, String>)>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers.min(entries.len()).max(1))
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(entry) = entries.get(i) else { break };
                        done.push((i, process(entry, opts)));
                    }
                    done
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    for (i, r) in chunks.into_iter().flatten() {
        slots[i] = Some(r);
    }
    slots
        .into_iter()
        .map(|s| s.expect("every entry processed"))
        .collect()
}

fn load_table(cfg: &ScanConfig) -> Result<Vec<Result<KnotEntry, String>>, CliError> {
    Ok(match &cfg.input_path {
        None => bundled_table().into_iter().map(Ok).collect(),
        Some(path) => {
            let file = File::open(path)
                .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
            parse_knot_table(BufReader::new(file))
                .into_iter()
                .map(|r| r.map_err(|e| e.to_string()))
                .collect()
        }
    })
}

pub fn run(cfg: ScanConfig) -> Result<(), CliError> {
    let table = load_table(&cfg)?;
    let total = table.len();
    let mut failures = 0usize;
    let mut skipped = 0usize;
    let mut entries = Vec::with_capacity(total);
    for item in table {
        match item {
            Ok(e) if e.pd.num_crossings() > cfg.max_crossings => skipped += 1,
            Ok(e) => entries.push(e),
            Err(msg) => {
                failures += 1;
                eprintln!("skipping table entry: {msg}");
            }
        }
    }

    let results = process_all(&entries, &cfg.classify, cfg.workers);
    let mut points = Vec::new();
    let sink: Box<dyn Write> = match &cfg.out_csv {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = writer(sink);
    w.write_record(ROOT_HEADER)?;
    for (entry, result) in entries.iter().zip(results) {
        match result {
            Ok(rows) => {
                for r in &rows.records {
                    w.write_record(r)?;
                }
                points.extend(rows.points);
            }
            Err(msg) => {
                failures += 1;
                eprintln!("skipping {}: {msg}", entry.name);
            }
        }
    }
    w.flush()?;
    if let Some(path) = &cfg.out_svg {
        fs::write(path, svg::render(&points))?;
    }
    if skipped > 0 {
        eprintln!("{skipped} knot(s) above {} crossings left out", cfg.max_crossings);
    }
    let considered = total - skipped;
    if considered > 0 && failures as f64 > FAILURE_LIMIT * considered as f64 {
        return Err(CliError::Failure(format!(
            "{failures} of {considered} entries failed"
        )));
    }
    Ok(())
}
