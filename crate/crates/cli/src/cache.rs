//! On-disk cache of graded dimensions. One JSON file per key, named by the
//! SHA-256 of the key; files are written to a temporary file in the same
//! directory and renamed into place.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use chowtaut_core::{RingParams, TautRing, ENGINE_VERSION};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub d: u32,
    pub b: u32,
    pub m: usize,
    pub c: usize,
    pub signs: String,
}

impl CacheKey {
    pub fn new(params: &RingParams, c: usize) -> Self {
        CacheKey { d: params.d, b: params.b, m: params.m, c, signs: params.signs.fingerprint() }
    }

    fn file_name(&self) -> String {
        let text = format!("d={};b={};m={};c={};{}", self.d, self.b, self.m, self.c, self.signs);
        format!("{}.json", hex::encode(Sha256::digest(text.as_bytes())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub value: usize,
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$CHOWTAUT_CACHE_DIR`, else `$XDG_CACHE_HOME/chowtaut`, else
    /// `$HOME/.cache/chowtaut`.
    pub fn from_env() -> Option<Self> {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        var("CHOWTAUT_CACHE_DIR")
            .or_else(|| var("XDG_CACHE_HOME").map(|p| p.join("chowtaut")))
            .or_else(|| var("HOME").map(|p| p.join(".cache").join("chowtaut")))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// The cached value, if present and written by this engine version.
    /// Unreadable or foreign entries count as misses.
    pub fn get(&self, key: &CacheKey) -> Option<usize> {
        let text = std::fs::read_to_string(self.dir.join(key.file_name())).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == *key && entry.provenance == ENGINE_VERSION).then_some(entry.value)
    }

    pub fn put(&self, key: &CacheKey, value: usize) -> anyhow::Result<()> {
        std::fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let entry = CacheEntry { key: key.clone(), value, provenance: ENGINE_VERSION.into() };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.write_all(b"\n")?;
        tmp.persist(self.dir.join(key.file_name()))?;
        Ok(())
    }

    /// Graded dimension in codimension `c`, from the cache when possible.
    /// Failing to write the cache is not an error.
    pub fn graded_dimension(&self, ring: &TautRing, c: usize) -> anyhow::Result<usize> {
        let key = CacheKey::new(ring.params(), c);
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let v = ring.graded_dimension(c)?;
        let _ = self.put(&key, v);
        Ok(v)
    }
}
