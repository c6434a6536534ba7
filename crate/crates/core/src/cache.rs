//! On-disk checkpoints for enumeration levels.
//!
//! Each level is a `planar_code` file of canonical codes plus a JSON
//! manifest recording size, count and SHA-256 digest. Files live in a
//! subdirectory named after the expansion filters, so differently pruned
//! runs never mix. A digest mismatch discards the level for regeneration.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::canon::CodeBytes;
use crate::error::{Error, Result};
use crate::generator::{FilterSet, SizeLevel};
use crate::io::planar_code::{decode_record, HEADER};

/// Environment variable selecting the cache directory.
pub const CACHE_DIR_ENV: &str = "POLY_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".poly-cache";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelManifest {
    pub size: usize,
    pub count: usize,
    pub complete: bool,
    pub filters: String,
    pub digest: String,
}

#[derive(Clone, Debug)]
pub struct LevelCache {
    root: PathBuf,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Writes `bytes` to `path` via a temporary file and rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!(
        "{}.tmp",
        path.extension().and_then(|e| e.to_str()).unwrap_or("")
    ));
    fs::write(&tmp, bytes).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

impl LevelCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        LevelCache { root: root.into() }
    }

    /// Cache rooted at `$POLY_CACHE_DIR`, or `.poly-cache`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        LevelCache::new(dir)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn dir(&self, filters: &FilterSet) -> PathBuf {
        self.root.join(filters.key())
    }

    pub fn level_path(&self, size: usize, filters: &FilterSet) -> PathBuf {
        self.dir(filters).join(format!("level-{size:03}.pc"))
    }

    pub fn manifest_path(&self, size: usize, filters: &FilterSet) -> PathBuf {
        self.dir(filters).join(format!("level-{size:03}.json"))
    }

    pub fn store(&self, level: &SizeLevel, filters: &FilterSet) -> Result<()> {
        let dir = self.dir(filters);
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        let mut bytes = HEADER.to_vec();
        for code in level.codes() {
            bytes.extend_from_slice(code.as_bytes());
        }
        let manifest = LevelManifest {
            size: level.size(),
            count: level.len(),
            complete: level.is_complete(),
            filters: filters.key(),
            digest: sha256_hex(&bytes),
        };
        write_atomic(&self.level_path(level.size(), filters), &bytes)?;
        let json = serde_json::to_vec_pretty(&manifest).expect("manifest serializes");
        write_atomic(&self.manifest_path(level.size(), filters), &json)
    }

    /// Loads a verified level. `Ok(None)` if absent or if the digest does
    /// not match (the caller regenerates); an error if the file passes the
    /// digest but does not decode to the recorded level.
    pub fn load(&self, size: usize, filters: &FilterSet) -> Result<Option<SizeLevel>> {
        let (lp, mp) = (self.level_path(size, filters), self.manifest_path(size, filters));
        let (Ok(bytes), Ok(json)) = (fs::read(&lp), fs::read(&mp)) else {
            return Ok(None);
        };
        let manifest: LevelManifest = match serde_json::from_slice(&json) {
            Ok(m) => m,
            Err(e) => {
                log::warn!("level {size}: unreadable manifest ({e}); regenerating");
                return Ok(None);
            }
        };
        if manifest.digest != sha256_hex(&bytes) {
            log::warn!("level {size}: digest mismatch; regenerating");
            return Ok(None);
        }
        let corrupt = |reason: String| Error::CacheCorrupt { level: size, reason };
        if manifest.size != size || manifest.filters != filters.key() {
            return Err(corrupt("manifest describes a different level".into()));
        }
        if !bytes.starts_with(HEADER) {
            return Err(corrupt("missing planar_code header".into()));
        }
        let mut codes = Vec::with_capacity(manifest.count);
        let mut pos = HEADER.len();
        while pos < bytes.len() {
            let (eg, next) = decode_record(&bytes, pos).map_err(|e| corrupt(e.to_string()))?;
            if eg.size() != size {
                return Err(corrupt(format!("member at byte {pos} has {} edges", eg.size())));
            }
            codes.push(CodeBytes::from_bytes(bytes[pos..next].to_vec()));
            pos = next;
        }
        if codes.len() != manifest.count || !codes.windows(2).all(|w| w[0] < w[1]) {
            return Err(corrupt("member count or order disagrees with manifest".into()));
        }
        Ok(Some(SizeLevel::from_codes(size, codes, manifest.complete)))
    }
}
