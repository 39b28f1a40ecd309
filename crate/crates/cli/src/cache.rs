//! Append-only NDJSON store of ribbon expansions.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use equitab::schur::{ExpansionEngine, HVector, SchurVector};
use equitab::Composition;
use log::warn;
use serde::{Deserialize, Serialize};

/// Bumped whenever expansions could change; records from other versions are
/// ignored.
pub const ENGINE_VERSION: &str = concat!("equitab-", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    S,
    H,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub key: String,
    pub basis: Basis,
    pub terms: serde_json::Value,
    pub engine_version: String,
}

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    seen: HashSet<(Basis, String)>,
    pub h: BTreeMap<Composition, HVector>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache::default()
    }

    /// Reads `path` if it exists, preloading `engine` with its Schur records.
    pub fn open(path: &Path, engine: &ExpansionEngine) -> std::io::Result<Self> {
        let mut cache = Cache {
            path: Some(path.to_path_buf()),
            ..Cache::default()
        };
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e),
        };
        file.lock_shared()?;
        for (lineno, line) in BufReader::new(&file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match cache.load_line(&line, engine) {
                Ok(()) => {}
                Err(reason) => warn!("skipping cache line {}: {reason}", lineno + 1),
            }
        }
        file.unlock()?;
        Ok(cache)
    }

    fn load_line(&mut self, line: &str, engine: &ExpansionEngine) -> Result<(), String> {
        let record: ExpansionRecord = serde_json::from_str(line).map_err(|e| e.to_string())?;
        if record.engine_version != ENGINE_VERSION {
            return Err(format!("engine version {}", record.engine_version));
        }
        let key: Composition = record
            .key
            .parse()
            .map_err(|e: equitab::Error| e.to_string())?;
        if key != key.canonical() {
            return Err(format!("key {key} is not canonical"));
        }
        match record.basis {
            Basis::S => {
                let v: SchurVector =
                    serde_json::from_value(record.terms).map_err(|e| e.to_string())?;
                engine.preload(&key, v);
            }
            Basis::H => {
                let v: HVector = serde_json::from_value(record.terms).map_err(|e| e.to_string())?;
                self.h.insert(key.clone(), v);
            }
        }
        self.seen.insert((record.basis, key.to_string()));
        Ok(())
    }

    pub fn h_expansion(
        &mut self,
        engine: &ExpansionEngine,
        alpha: &Composition,
    ) -> equitab::Result<HVector> {
        let key = alpha.canonical();
        if let Some(v) = self.h.get(&key) {
            return Ok(v.clone());
        }
        let v = engine.h_expand_ribbon(&key)?;
        self.h.insert(key, v.clone());
        Ok(v)
    }

    /// Appends every expansion not already on disk.
    pub fn flush(&mut self, engine: &ExpansionEngine) -> std::io::Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let mut lines = Vec::new();
        let mut push = |basis: Basis,
                        key: &Composition,
                        terms: serde_json::Value,
                        seen: &mut HashSet<(Basis, String)>| {
            if seen.insert((basis, key.to_string())) {
                let record = ExpansionRecord {
                    key: key.to_string(),
                    basis,
                    terms,
                    engine_version: ENGINE_VERSION.to_string(),
                };
                lines.push(serde_json::to_string(&record).expect("records serialize"));
            }
        };
        for (key, v) in engine.memo_snapshot() {
            push(
                Basis::S,
                &key,
                serde_json::to_value(&v).expect("vectors serialize"),
                &mut self.seen,
            );
        }
        for (key, v) in &self.h {
            push(
                Basis::H,
                key,
                serde_json::to_value(v).expect("vectors serialize"),
                &mut self.seen,
            );
        }
        if lines.is_empty() {
            return Ok(());
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        file.lock()?;
        let mut buf = lines.join("\n");
        buf.push('\n');
        file.write_all(buf.as_bytes())?;
        file.flush()?;
        file.unlock()
    }
}
