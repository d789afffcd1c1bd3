//! Content-addressed on-disk store for decompositions.
//!
//! Each entry lives at `<root>/<h[0..2]>/<h[2..]>.json`, where `h` is the SHA-256
//! of the canonical JSON of its key. Writes go through a temporary file and an
//! atomic rename, so readers see either nothing or a complete entry.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::charengine::FormalChar;
use crate::rootdata::{ProductGroup, Weight};

/// Bumped whenever a change could alter cached values.
pub const ENGINE_VERSION: &str = concat!("supermf-", env!("CARGO_PKG_VERSION"), "/1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub group: ProductGroup,
    pub construction: String,
    pub weights: Vec<(Weight, u64)>,
    pub degree: u32,
}

impl CacheKey {
    pub fn new(group: &ProductGroup, construction: &str, weights: Vec<(Weight, u64)>, degree: u32) -> Self {
        CacheKey { group: group.clone(), construction: construction.to_string(), weights, degree }
    }

    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("cache keys always serialize")
    }

    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_json().as_bytes()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub value: FormalChar,
    pub version: String,
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    root: PathBuf,
    version: String,
}

impl DiskCache {
    pub fn open(root: impl Into<PathBuf>) -> io::Result<Self> {
        Self::with_version(root, ENGINE_VERSION)
    }

    pub fn with_version(root: impl Into<PathBuf>, version: &str) -> io::Result<Self> {
        let root = root.into();
        fs::create_dir_all(&root)?;
        Ok(DiskCache { root, version: version.to_string() })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        let h = key.digest();
        self.root.join(&h[..2]).join(format!("{}.json", &h[2..]))
    }

    /// Looks up a key. Missing, corrupt or stale entries all read as a miss.
    pub fn get(&self, key: &CacheKey) -> Option<FormalChar> {
        let path = self.path_for(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                log::warn!("cache read failed for {}: {e}", path.display());
                return None;
            }
        };
        let entry: CacheEntry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                log::warn!("ignoring corrupt cache entry {}: {e}", path.display());
                return None;
            }
        };
        if entry.version != self.version {
            return None;
        }
        if entry.key != *key {
            log::warn!("cache entry {} holds a different key", path.display());
            return None;
        }
        Some(entry.value)
    }

    /// Stores a value. Failures are logged and otherwise ignored.
    pub fn put(&self, key: &CacheKey, value: &FormalChar) {
        if let Err(e) = self.try_put(key, value) {
            log::warn!("cache write failed: {e}");
        }
    }

    fn try_put(&self, key: &CacheKey, value: &FormalChar) -> io::Result<()> {
        let path = self.path_for(key);
        let dir = path.parent().expect("entry paths have a parent");
        fs::create_dir_all(dir)?;
        let entry = CacheEntry { key: key.clone(), value: value.clone(), version: self.version.clone() };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }
}

pub fn cache_get(cache: &DiskCache, key: &CacheKey) -> Option<FormalChar> {
    cache.get(key)
}

pub fn cache_put(cache: &DiskCache, key: &CacheKey, value: &FormalChar) {
    cache.put(key, value)
}
