//! Append-only JSON-lines cache of computed n_λ.
//!
//! Every new result is compared with the cached one for the same key, so the
//! file doubles as a regression record: a mismatch is a cross-check failure.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub n: usize,
    pub d: Option<usize>,
    pub partition: Partition,
    pub n_lambda: String,
    pub dim: String,
    pub method: String,
    pub version: String,
}

impl CacheRecord {
    pub fn key(&self) -> CacheKey {
        (self.n, self.d, self.partition.clone())
    }

    fn describe(&self) -> String {
        match self.d {
            Some(d) => format!("n={} d={} {}", self.n, d, self.partition),
            None => format!("n={} {}", self.n, self.partition),
        }
    }
}

pub type CacheKey = (usize, Option<usize>, Partition);

#[derive(Clone, Debug)]
pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    /// `$XDG_CACHE_HOME/schern/c2.jsonl` or the platform equivalent.
    pub fn default_path() -> Option<PathBuf> {
        dirs::cache_dir().map(|d| d.join("schern").join("c2.jsonl"))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All well-formed records. Torn or foreign lines are skipped.
    pub fn load(&self) -> Result<HashMap<CacheKey, CacheRecord>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(HashMap::new()),
            Err(e) => return Err(e.into()),
        };
        file.lock_shared()?;
        let map = read_records(&file)?;
        file.unlock()?;
        Ok(map)
    }

    /// Compare `records` against the cache and append the new ones, holding
    /// an exclusive lock for the whole read-compare-append.
    pub fn check_and_record(&self, records: &[CacheRecord]) -> Result<()> {
        if records.is_empty() {
            return Ok(());
        }
        if let Some(parent) = self.path.parent() {
            fs::create_dir_all(parent)?;
        }
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(&self.path)?;
        file.lock()?;
        let result = (|| {
            file.seek(SeekFrom::Start(0))?;
            let existing = read_records(&file)?;
            let mut fresh = String::new();
            let mut seen = HashMap::new();
            for r in records {
                let key = r.key();
                match existing.get(&key).or_else(|| seen.get(&key)) {
                    Some(cached) if cached.n_lambda != r.n_lambda || cached.dim != r.dim => {
                        return Err(Error::CacheMismatch {
                            key: r.describe(),
                            cached: format!("n_lambda={} dim={}", cached.n_lambda, cached.dim),
                            computed: format!("n_lambda={} dim={}", r.n_lambda, r.dim),
                        });
                    }
                    Some(_) => {}
                    None => {
                        fresh.push_str(&serde_json::to_string(r)?);
                        fresh.push('\n');
                        seen.insert(key, r.clone());
                    }
                }
            }
            file.write_all(fresh.as_bytes())?;
            file.flush()?;
            Ok(())
        })();
        file.unlock()?;
        result
    }
}

fn read_records(file: &File) -> Result<HashMap<CacheKey, CacheRecord>> {
    let mut map = HashMap::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        if let Ok(r) = serde_json::from_str::<CacheRecord>(&line) {
            map.entry(r.key()).or_insert(r);
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(n_lambda: &str) -> CacheRecord {
        CacheRecord {
            n: 8,
            d: None,
            partition: "2,2,2".parse().unwrap(),
            n_lambda: n_lambda.into(),
            dim: "1176".into(),
            method: "both".into(),
            version: "test".into(),
        }
    }

    #[test]
    fn records_then_verifies() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested/c2.jsonl"));
        assert!(cache.load().unwrap().is_empty());
        cache.check_and_record(&[record("700")]).unwrap();
        cache.check_and_record(&[record("700")]).unwrap();
        let text = fs::read_to_string(cache.path()).unwrap();
        assert_eq!(text.lines().count(), 1);
        let err = cache.check_and_record(&[record("16")]).unwrap_err();
        assert!(err.is_cross_check());
        assert_eq!(cache.load().unwrap().len(), 1);
    }

    #[test]
    fn skips_torn_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c2.jsonl");
        fs::write(&path, "{\"n\":8,\"d\":nu\n").unwrap();
        let cache = Cache::new(&path);
        cache.check_and_record(&[record("700")]).unwrap();
        assert_eq!(cache.load().unwrap().len(), 1);
    }

    #[test]
    fn distinct_group_keys() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("c2.jsonl"));
        let mut with_d = record("700");
        with_d.d = Some(2);
        cache.check_and_record(&[record("700"), with_d]).unwrap();
        assert_eq!(cache.load().unwrap().len(), 2);
    }
}
