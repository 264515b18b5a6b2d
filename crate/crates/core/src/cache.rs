//! Persistent coefficient cache: one tab-separated record per line,
//! `kind  λ  μ  ν  engine  value`, appended under an exclusive file lock.
//!
//! The cache only accelerates; every record can be recomputed. Lines that
//! fail to parse are skipped with a warning.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use thiserror::Error;

use crate::coefficients::{CoefficientError, CoefficientQuery, Engine};

pub const CACHE_ENV: &str = "HEIS_CACHE";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("cache integrity: {query} recorded as {existing} ({existing_engine}) but computed as {value} ({engine})")]
    Conflict {
        query: Box<CoefficientQuery>,
        existing: BigUint,
        existing_engine: Engine,
        value: BigUint,
        engine: Engine,
    },
    #[error(transparent)]
    Coefficient(#[from] CoefficientError),
}

/// `$HEIS_CACHE`, else `~/.cache/heis/coefficients.tsv`.
pub fn default_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(p));
    }
    let home = std::env::var_os("HOME")?;
    Some(Path::new(&home).join(".cache").join("heis").join("coefficients.tsv"))
}

fn format_record(query: &CoefficientQuery, engine: Engine, value: &BigUint) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\n",
        query.kind, query.lambda, query.mu, query.nu, engine, value
    )
}

fn parse_record(line: &str) -> Option<(CoefficientQuery, Engine, BigUint)> {
    let fields: Vec<&str> = line.split('\t').collect();
    let [kind, lambda, mu, nu, engine, value] = fields.as_slice() else {
        return None;
    };
    let query = CoefficientQuery::new(
        kind.parse().ok()?,
        lambda.parse().ok()?,
        mu.parse().ok()?,
        nu.parse().ok()?,
    );
    query.validate().ok()?;
    Some((query, engine.parse().ok()?, value.parse().ok()?))
}

pub struct CoefficientCache {
    path: PathBuf,
    records: HashMap<(CoefficientQuery, Engine), BigUint>,
    warnings: Vec<String>,
}

impl CoefficientCache {
    /// Loads `path`; a missing file is an empty cache.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self, CacheError> {
        let path = path.into();
        let mut cache = CoefficientCache {
            path: path.clone(),
            records: HashMap::new(),
            warnings: Vec::new(),
        };
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        let io_err = |source| CacheError::Io {
            path: path.clone(),
            source,
        };
        file.lock_shared().map_err(io_err)?;
        for (idx, line) in BufReader::new(&file).lines().enumerate() {
            let line = line.map_err(io_err)?;
            if line.trim().is_empty() {
                continue;
            }
            match parse_record(&line) {
                Some((query, engine, value)) => {
                    // a conflicting earlier record is reported when queried
                    cache.records.entry((query, engine)).or_insert(value);
                }
                None => cache
                    .warnings
                    .push(format!("{}:{}: skipping malformed record", path.display(), idx + 1)),
            }
        }
        Ok(cache)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Diagnostics about skipped lines.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn take_warnings(&mut self) -> Vec<String> {
        std::mem::take(&mut self.warnings)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, query: &CoefficientQuery, engine: Engine) -> Option<&BigUint> {
        self.records.get(&(query.clone(), engine))
    }

    fn check(&self, query: &CoefficientQuery, engine: Engine, value: &BigUint) -> Result<(), CacheError> {
        for other in [Engine::Primary, Engine::Oracle] {
            if let Some(existing) = self.get(query, other) {
                if existing != value {
                    return Err(CacheError::Conflict {
                        query: Box::new(query.clone()),
                        existing: existing.clone(),
                        existing_engine: other,
                        value: value.clone(),
                        engine,
                    });
                }
            }
        }
        Ok(())
    }

    /// Stores a value, refusing one that contradicts an existing record for
    /// the same query from either engine.
    pub fn record(&mut self, query: &CoefficientQuery, engine: Engine, value: &BigUint) -> Result<(), CacheError> {
        self.check(query, engine, value)?;
        if self.get(query, engine).is_some() {
            return Ok(());
        }
        self.append(&format_record(query, engine, value))?;
        self.records.insert((query.clone(), engine), value.clone());
        Ok(())
    }

    fn append(&self, line: &str) -> Result<(), CacheError> {
        let io_err = |source| CacheError::Io {
            path: self.path.clone(),
            source,
        };
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(io_err)?;
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(io_err)?;
        file.lock().map_err(io_err)?;
        file.write_all(line.as_bytes()).map_err(io_err)?;
        file.unlock().map_err(io_err)
    }

    /// The cached value if present, else computes and records it. The flag
    /// reports a cache hit. A failed write only adds a warning.
    pub fn evaluate(&mut self, query: &CoefficientQuery, engine: Engine) -> Result<(BigUint, bool), CacheError> {
        if let Some(v) = self.get(query, engine) {
            let v = v.clone();
            self.check(query, engine, &v)?;
            return Ok((v, true));
        }
        let value = query.evaluate(engine)?;
        match self.record(query, engine, &value) {
            Err(CacheError::Io { path, source }) => {
                self.warnings
                    .push(format!("{}: record not saved: {source}", path.display()));
            }
            other => other?,
        }
        Ok((value, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::CoefficientKind;
    use crate::partition::Partition;

    fn query(kind: CoefficientKind, l: &str, m: &str, n: &str) -> CoefficientQuery {
        CoefficientQuery::new(kind, l.parse().unwrap(), m.parse().unwrap(), n.parse().unwrap())
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested").join("c.tsv");
        let q = query(CoefficientKind::Heisenberg, "2,1", "1,1", "2");
        let value = {
            let mut cache = CoefficientCache::open(&path).unwrap();
            let (v, hit) = cache.evaluate(&q, Engine::Primary).unwrap();
            assert!(!hit);
            v
        };
        let mut cache = CoefficientCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        let (v, hit) = cache.evaluate(&q, Engine::Primary).unwrap();
        assert!(hit);
        assert_eq!(v, value);
        let (v, hit) = cache.evaluate(&q, Engine::Oracle).unwrap();
        assert!(!hit);
        assert_eq!(v, value);
        let empty = query(CoefficientKind::LittlewoodRichardson, "0", "", "0");
        assert_eq!(empty.lambda, Partition::empty());
        cache.evaluate(&empty, Engine::Oracle).unwrap();
        assert_eq!(CoefficientCache::open(&path).unwrap().len(), 3);
    }

    #[test]
    fn corrupt_lines_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.tsv");
        fs::write(
            &path,
            "lr\t2,1\t1\t1,1\tprimary\t1\ngarbage\nkron\t2\t1\t1\tprimary\t1\nlr\t2,1\t1\t1,1\tprimary\tx\n",
        )
        .unwrap();
        let cache = CoefficientCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.warnings().len(), 3);
    }

    #[test]
    fn conflicting_records_are_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.tsv");
        fs::write(&path, "kron\t3\t2,1\t2,1\toracle\t7\n").unwrap();
        let mut cache = CoefficientCache::open(&path).unwrap();
        let q = query(CoefficientKind::Kronecker, "3", "2,1", "2,1");
        assert!(matches!(
            cache.evaluate(&q, Engine::Primary),
            Err(CacheError::Conflict { .. })
        ));
        let (v, hit) = cache.evaluate(&q, Engine::Oracle).unwrap();
        assert!(hit);
        assert_eq!(v, BigUint::from(7u8));
    }
}
