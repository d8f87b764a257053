//! Append-only verdict cache keyed by canonical-form hash, modulus and command.
//!
//! One record per line: `<hash> <k> <command> <verdict>`. Later records win.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

type Key = (String, u32, String);

pub struct Cache {
    path: PathBuf,
    entries: Mutex<HashMap<Key, String>>,
}

impl Cache {
    pub fn open(path: &Path) -> io::Result<Self> {
        let mut entries = HashMap::new();
        match fs::read_to_string(path) {
            Ok(text) => {
                for line in text.lines() {
                    let f: Vec<&str> = line.split_whitespace().collect();
                    if let [hash, k, cmd, verdict] = f[..] {
                        if let Ok(k) = k.parse() {
                            entries.insert((hash.to_string(), k, cmd.to_string()), verdict.to_string());
                        }
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        Ok(Cache { path: path.to_path_buf(), entries: Mutex::new(entries) })
    }

    pub fn get(&self, hash: &str, k: u32, command: &str) -> Option<String> {
        let key = (hash.to_string(), k, command.to_string());
        self.entries.lock().unwrap().get(&key).cloned()
    }

    pub fn put(&self, hash: &str, k: u32, command: &str, verdict: &str) -> io::Result<()> {
        let mut entries = self.entries.lock().unwrap();
        let key = (hash.to_string(), k, command.to_string());
        if entries.get(&key).map(String::as_str) == Some(verdict) {
            return Ok(());
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(f, "{hash} {k} {command} {verdict}")?;
        entries.insert(key, verdict.to_string());
        Ok(())
    }

    #[cfg(test)]
    fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_survive_reopening() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("verdicts");
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.get("ab", 5, "szk"), None);
        c.put("ab", 5, "szk", "holds").unwrap();
        c.put("ab", 5, "szk", "holds").unwrap();
        c.put("ab", 3, "szk", "fails").unwrap();
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.get("ab", 5, "szk").as_deref(), Some("holds"));
        assert_eq!(c.get("ab", 3, "szk").as_deref(), Some("fails"));
        assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 2);
    }
}
