//! JSON-lines record store with resumable sweeps and CSV export.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::search::{compute, BestValue, ExtremalRecord, SearchSpec};

/// Records read from a store, plus one warning per skipped line.
#[derive(Debug, Default)]
pub struct Loaded {
    pub records: Vec<ExtremalRecord>,
    pub warnings: Vec<String>,
}

impl Loaded {
    pub fn keys(&self) -> HashSet<String> {
        self.records.iter().map(|r| r.spec.key()).collect()
    }
}

/// Reads every parseable record. A missing file is an empty store.
pub fn load(path: &Path) -> Result<Loaded> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Loaded::default()),
        Err(e) => return Err(e.into()),
    };
    read_records(BufReader::new(file))
}

pub fn read_records<R: BufRead>(reader: R) -> Result<Loaded> {
    let mut out = Loaded::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ExtremalRecord>(&line) {
            Ok(r) => out.records.push(r),
            Err(e) => {
                let msg = format!("line {}: skipped corrupt record ({e})", i + 1);
                log::warn!("{msg}");
                out.warnings.push(msg);
            }
        }
    }
    Ok(out)
}

pub fn append(path: &Path, record: &ExtremalRecord) -> Result<()> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    let line = serde_json::to_string(record).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(f, "{line}")?;
    Ok(())
}

/// Overwrites `path` with `records`.
pub fn persist(path: &Path, records: &[ExtremalRecord]) -> Result<()> {
    let mut f = File::create(path)?;
    for r in records {
        let line = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(f, "{line}")?;
    }
    Ok(())
}

/// Computes each spec not already present in the store and appends it.
/// Returns every requested record in the order of `specs`.
pub fn run_resumable(path: &Path, specs: &[SearchSpec]) -> Result<Vec<ExtremalRecord>> {
    let loaded = load(path)?;
    let mut out = Vec::with_capacity(specs.len());
    for spec in specs {
        let key = spec.key();
        if let Some(r) = loaded.records.iter().find(|r| r.spec.key() == key) {
            out.push(r.clone());
            continue;
        }
        let rec = compute(spec)?;
        append(path, &rec)?;
        out.push(rec);
    }
    Ok(out)
}

/// One CSV row per record.
pub fn write_csv<W: Write>(records: &[ExtremalRecord], w: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    let io_err = |e: csv::Error| Error::Io(e.to_string());
    wr.write_record(["n", "p", "q", "objective", "constraints", "value", "err", "witnesses", "graphs_scanned", "exhaustive"])
        .map_err(io_err)?;
    for r in records {
        let cs: Vec<String> = r.spec.constraints.iter().map(|c| c.to_string()).collect();
        let (value, err) = match r.best_value {
            None => (String::new(), String::new()),
            Some(BestValue::Edges { value }) => (value.to_string(), "0".to_string()),
            Some(BestValue::Rho { rho, err }) => (format!("{rho:.15}"), format!("{err:e}")),
        };
        wr.write_record([
            r.spec.n.to_string(),
            r.spec.p.to_string(),
            r.spec.q.to_string(),
            r.spec.objective.to_string(),
            cs.join(";"),
            value,
            err,
            r.witnesses.len().to_string(),
            r.graphs_scanned.to_string(),
            r.exhaustive.to_string(),
        ])
        .map_err(io_err)?;
    }
    wr.flush()?;
    Ok(())
}
