//! Content-addressed result cache. Entries are JSON files named by the
//! SHA-256 of their canonical instance key, carrying a version header;
//! corrupt or mismatched entries are silently ignored and recomputed.
//! Writes go through a temp file plus rename, so concurrent writers of the
//! same key always leave a valid file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const CACHE_VERSION: u64 = 1;
pub const CACHE_ENV: &str = "LLTLAB_CACHE";

#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    enabled: bool,
}

impl Cache {
    /// Build from an explicit flag or the `LLTLAB_CACHE` environment
    /// variable; `None` disables caching entirely.
    pub fn from_options(flag: Option<PathBuf>) -> Option<Cache> {
        let dir = flag.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))?;
        Some(Cache::new(dir))
    }

    pub fn new(dir: PathBuf) -> Cache {
        let enabled = match fs::create_dir_all(&dir) {
            Ok(()) => true,
            Err(e) => {
                eprintln!("warning: cache directory {dir:?} unusable ({e}); cache disabled");
                false
            }
        };
        Cache { dir, enabled }
    }

    fn path_for(&self, key: &str) -> PathBuf {
        let hash = hex(&Sha256::digest(key.as_bytes()));
        self.dir.join(&hash[..2]).join(format!("{hash}.json"))
    }

    pub fn load(&self, key: &str) -> Option<String> {
        if !self.enabled {
            return None;
        }
        let path = self.path_for(key);
        let data = fs::read_to_string(path).ok()?;
        let v: Value = serde_json::from_str(&data).ok()?;
        if v.get("version")?.as_u64()? != CACHE_VERSION {
            return None;
        }
        if v.get("key")?.as_str()? != key {
            return None;
        }
        Some(v.get("payload")?.as_str()?.to_string())
    }

    pub fn store(&self, key: &str, payload: &str) {
        if !self.enabled {
            return;
        }
        let path = self.path_for(key);
        if let Err(e) = self.store_inner(&path, key, payload) {
            eprintln!("warning: cache write to {path:?} failed ({e}); cache disabled for this run");
        }
    }

    fn store_inner(&self, path: &Path, key: &str, payload: &str) -> std::io::Result<()> {
        let parent = path.parent().expect("cache entries have a parent dir");
        fs::create_dir_all(parent)?;
        let body = json!({
            "version": CACHE_VERSION,
            "key": key,
            "payload": payload,
        })
        .to_string();
        // write-rename atomicity: concurrent writers race on the rename, and
        // either winner leaves a complete file
        let tmp = parent.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            fastrand_suffix()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(body.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn fastrand_suffix() -> u64 {
    use std::sync::atomic::{AtomicU64, Ordering};
    use std::time::{SystemTime, UNIX_EPOCH};
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    let nanos = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.subsec_nanos() as u64)
        .unwrap_or(0);
    nanos ^ (COUNTER.fetch_add(1, Ordering::Relaxed) << 32)
}
