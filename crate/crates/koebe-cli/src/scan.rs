//! Resumable parallel degree scan with ordered JSONL output.
//!
//! Certificates are computed on a worker pool; a single writer emits
//! lines strictly ordered by degree and flushes after each one, so an
//! interrupted scan leaves a valid JSONL prefix. The summary line goes
//! to stdout.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;

use serde::Serialize;

use koebe::certify_univalence;

use crate::output::{write_json_line, CliError};

#[derive(Serialize)]
struct ScanSummary {
    from: u32,
    to: u32,
    largest_certified_n: Option<u32>,
    certified_rows: usize,
}

/// (degree, certified) pairs already present in a JSONL file.
fn existing_rows(path: &PathBuf) -> Result<Vec<(u32, bool)>, CliError> {
    let mut rows = Vec::new();
    let file = match std::fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(rows),
        Err(e) => return Err(e.into()),
    };
    for line in BufReader::new(file).lines() {
        let line = line?;
        if let Ok(v) = serde_json::from_str::<serde_json::Value>(&line) {
            if let Some(n) = v.get("n").and_then(|n| n.as_u64()) {
                let ok = v.get("verdict").and_then(|s| s.as_str())
                    == Some("CertifiedMonotoneDecreasing");
                rows.push((n as u32, ok));
            }
        }
    }
    Ok(rows)
}

pub fn run_scan(
    output: &Option<PathBuf>,
    from: u32,
    to: u32,
    resume: bool,
    jobs: Option<usize>,
    precision_cap: u32,
) -> Result<ExitCode, CliError> {
    let resumed = match (resume, output) {
        (true, Some(path)) => existing_rows(path)?,
        _ => Vec::new(),
    };
    let skip: HashSet<u32> = resumed.iter().map(|&(n, _)| n).collect();
    let todo: Vec<u32> = (from..=to).filter(|n| !skip.contains(n)).collect();

    let mut writer: Box<dyn Write + Send> = match output {
        Some(path) => {
            let file = OpenOptions::new().create(true).append(true).open(path)?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(std::io::stdout())),
    };

    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = jobs {
            builder = builder.num_threads(j.max(1));
        }
        builder.build().map_err(|e| CliError::Internal(e.to_string()))?
    };

    // workers are fire-and-forget on the pool; the receive loop stays on
    // this thread so a single-core pool cannot starve the writer
    let (tx, rx) = mpsc::channel();
    for &n in &todo {
        let tx = tx.clone();
        pool.spawn(move || {
            let result = certify_univalence(n, precision_cap);
            // a closed channel means the writer already failed
            let _ = tx.send((n, result));
        });
    }
    drop(tx);

    // write strictly in degree order, flushing per line
    let mut written: Vec<(u32, bool)> = Vec::with_capacity(todo.len());
    let mut pending = BTreeMap::new();
    let mut expected: VecDeque<u32> = todo.iter().copied().collect();
    for (n, result) in rx {
        let cert = result.map_err(CliError::internal_from)?;
        pending.insert(n, cert);
        while let Some(&next) = expected.front() {
            match pending.remove(&next) {
                Some(cert) => {
                    write_json_line(&mut *writer, &cert)?;
                    written.push((next, cert.is_certified()));
                    expected.pop_front();
                }
                None => break,
            }
        }
    }
    debug_assert!(pending.is_empty());
    writer.flush()?;
    drop(writer);

    let mut largest = None;
    let mut certified_rows = 0usize;
    for &(n, ok) in resumed.iter().chain(written.iter()) {
        if ok && (from..=to).contains(&n) {
            certified_rows += 1;
            largest = Some(largest.map_or(n, |m: u32| m.max(n)));
        }
    }
    let summary = ScanSummary { from, to, largest_certified_n: largest, certified_rows };
    let mut stdout = std::io::stdout();
    write_json_line(&mut stdout, &summary)?;
    Ok(ExitCode::SUCCESS)
}
