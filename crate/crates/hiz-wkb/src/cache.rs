//! Best-effort file cache for computed tables, rooted at the directory
//! named by the `HIZ_WKB_CACHE_DIR` environment variable.  A missing
//! variable or an unwritable directory silently disables caching;
//! nothing here affects results, only how fast they reappear.

use std::fs;
use std::path::{Path, PathBuf};

pub const ENV_VAR: &str = "HIZ_WKB_CACHE_DIR";

pub fn dir() -> Option<PathBuf> {
    std::env::var_os(ENV_VAR).map(PathBuf::from)
}

/// Keys are used as file names; anything outside `[A-Za-z0-9._-]` is
/// mapped to `_` so a key can never escape the cache directory.
fn sanitize(key: &str) -> String {
    key.chars()
        .map(|c| if c.is_ascii_alphanumeric() || ".-_".contains(c) { c } else { '_' })
        .collect()
}

pub fn load_from(dir: &Path, key: &str) -> Option<String> {
    fs::read_to_string(dir.join(sanitize(key))).ok()
}

pub fn store_in(dir: &Path, key: &str, contents: &str) -> bool {
    if fs::create_dir_all(dir).is_err() {
        return false;
    }
    fs::write(dir.join(sanitize(key)), contents).is_ok()
}

pub fn load(key: &str) -> Option<String> {
    load_from(&dir()?, key)
}

pub fn store(key: &str, contents: &str) -> bool {
    match dir() {
        Some(d) => store_in(&d, key, contents),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_a_directory() {
        let tmp = tempfile::tempdir().unwrap();
        assert_eq!(load_from(tmp.path(), "jack-w3"), None);
        assert!(store_in(tmp.path(), "jack-w3", "{\"rows\":[]}"));
        assert_eq!(load_from(tmp.path(), "jack-w3").as_deref(), Some("{\"rows\":[]}"));
    }

    #[test]
    fn keys_cannot_leave_the_directory() {
        let tmp = tempfile::tempdir().unwrap();
        assert!(store_in(tmp.path(), "../escape", "x"));
        assert_eq!(load_from(tmp.path(), "../escape").as_deref(), Some("x"));
        assert!(tmp.path().join(".._escape").exists());
        assert!(!tmp.path().parent().unwrap().join("escape").exists());
    }
}
