//! Append-only results cache in `$SCIX_CACHE_DIR/cache.jsonl`.
//!
//! Each line is a JSON object `{digest, version, op, payload, checksum}`.
//! The digest is the SHA-256 of the operation name, the canonical JSON of
//! its input and the cache version; the checksum is the SHA-256 of the
//! payload's JSON text. Lines that fail to parse or to verify are skipped
//! with a warning, so a damaged file only costs recomputation.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use log::{debug, warn};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const CACHE_VERSION: &str = concat!("scix-", env!("CARGO_PKG_VERSION"), "/1");
pub const CACHE_FILE: &str = "cache.jsonl";
pub const DEFAULT_DIR: &str = ".scix-cache";

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    digest: String,
    version: String,
    op: String,
    payload: Value,
    checksum: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Digest of a request: operation, canonical input and version.
pub fn request_digest<I: Serialize + ?Sized>(op: &str, input: &I, version: &str) -> String {
    let canonical = serde_json::to_string(input).expect("cache inputs serialize");
    sha256_hex(format!("{op}\n{canonical}\n{version}").as_bytes())
}

#[derive(Default)]
struct Inner {
    entries: HashMap<String, (String, Value)>,
    writer: Option<File>,
}

pub struct Cache {
    path: Option<PathBuf>,
    version: String,
    inner: Mutex<Inner>,
    hits: AtomicUsize,
    misses: AtomicUsize,
    discarded: usize,
}

impl Cache {
    /// A cache that stores nothing.
    pub fn disabled() -> Cache {
        Cache {
            path: None,
            version: CACHE_VERSION.into(),
            inner: Mutex::new(Inner::default()),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            discarded: 0,
        }
    }

    /// Opens the cache in `$SCIX_CACHE_DIR`, or `.scix-cache/` when unset.
    pub fn from_env() -> io::Result<Cache> {
        let dir = std::env::var_os("SCIX_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
        Cache::open(&dir)
    }

    pub fn open(dir: &Path) -> io::Result<Cache> {
        Cache::open_with_version(dir, CACHE_VERSION)
    }

    pub fn open_with_version(dir: &Path, version: &str) -> io::Result<Cache> {
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut entries = HashMap::new();
        let mut discarded = 0;
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match parse_record(&line) {
                    Ok(r) => {
                        entries.insert(r.digest, (r.op, r.payload));
                    }
                    Err(why) => {
                        warn!(
                            "{}:{}: discarding cache record ({why})",
                            path.display(),
                            i + 1
                        );
                        discarded += 1;
                    }
                }
            }
        }
        debug!("cache {}: {} records", path.display(), entries.len());
        let writer = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Cache {
            path: Some(path),
            version: version.into(),
            inner: Mutex::new(Inner {
                entries,
                writer: Some(writer),
            }),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            discarded,
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    /// Records skipped while loading.
    pub fn discarded(&self) -> usize {
        self.discarded
    }

    pub fn get<I, T>(&self, op: &str, input: &I) -> Option<T>
    where
        I: Serialize + ?Sized,
        T: DeserializeOwned,
    {
        self.path.as_ref()?;
        let digest = request_digest(op, input, &self.version);
        let value = self
            .inner
            .lock()
            .unwrap()
            .entries
            .get(&digest)
            .map(|(_, v)| v.clone());
        let found = value.and_then(|v| match serde_json::from_value(v) {
            Ok(t) => Some(t),
            Err(e) => {
                warn!("cache record for {op} does not decode ({e}); recomputing");
                None
            }
        });
        let counter = if found.is_some() {
            &self.hits
        } else {
            &self.misses
        };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    /// Stores and immediately appends a record. Write failures are logged
    /// and otherwise ignored.
    pub fn put<I, T>(&self, op: &str, input: &I, value: &T)
    where
        I: Serialize + ?Sized,
        T: Serialize,
    {
        if self.path.is_none() {
            return;
        }
        let payload = serde_json::to_value(value).expect("cache payloads serialize");
        let record = Record {
            digest: request_digest(op, input, &self.version),
            version: self.version.clone(),
            op: op.into(),
            checksum: sha256_hex(payload.to_string().as_bytes()),
            payload,
        };
        let line = serde_json::to_string(&record).expect("record serializes");
        let mut inner = self.inner.lock().unwrap();
        if let Some(w) = inner.writer.as_mut() {
            if let Err(e) = writeln!(w, "{line}").and_then(|_| w.flush()) {
                warn!("cache write failed: {e}");
            }
        }
        inner
            .entries
            .insert(record.digest, (record.op, record.payload));
    }

    pub fn get_or_compute<I, T, E, F>(&self, op: &str, input: &I, compute: F) -> Result<T, E>
    where
        I: Serialize + ?Sized,
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, E>,
    {
        if let Some(t) = self.get(op, input) {
            return Ok(t);
        }
        let t = compute()?;
        self.put(op, input, &t);
        Ok(t)
    }

    /// Rewrites the file with one record per live digest, dropping
    /// duplicates and damaged lines. Returns the number of records kept.
    pub fn compact(&self) -> io::Result<usize> {
        let Some(path) = &self.path else {
            return Ok(0);
        };
        let mut inner = self.inner.lock().unwrap();
        let mut digests: Vec<&String> = inner.entries.keys().collect();
        digests.sort();
        let tmp = path.with_extension("jsonl.tmp");
        {
            let mut out = io::BufWriter::new(File::create(&tmp)?);
            for d in &digests {
                let (op, payload) = inner.entries[*d].clone();
                let record = Record {
                    digest: (*d).clone(),
                    version: self.version.clone(),
                    op,
                    checksum: sha256_hex(payload.to_string().as_bytes()),
                    payload,
                };
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
            out.flush()?;
        }
        let kept = digests.len();
        fs::rename(&tmp, path)?;
        inner.writer = Some(OpenOptions::new().append(true).open(path)?);
        Ok(kept)
    }
}

fn parse_record(line: &str) -> Result<Record, String> {
    let r: Record = serde_json::from_str(line).map_err(|e| e.to_string())?;
    if r.checksum != sha256_hex(r.payload.to_string().as_bytes()) {
        return Err("checksum mismatch".into());
    }
    if r.digest.len() != 64 || !r.digest.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err("malformed digest".into());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_on_every_part() {
        let a = request_digest("op", &[1, 2], "v1");
        assert_eq!(a, request_digest("op", &[1, 2], "v1"));
        assert_ne!(a, request_digest("op2", &[1, 2], "v1"));
        assert_ne!(a, request_digest("op", &[1, 3], "v1"));
        assert_ne!(a, request_digest("op", &[1, 2], "v2"));
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn disabled_cache_never_hits() {
        let c = Cache::disabled();
        c.put("op", &1, &2);
        assert_eq!(c.get::<_, i32>("op", &1), None);
    }
}
