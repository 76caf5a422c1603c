//! On-disk cache of character tables, one JSON file per `n`.
//!
//! Files are created exclusively: a table is written to a private temporary
//! file and hard-linked to its final name, so the first writer wins and
//! readers never observe a partial file. A file that fails to parse or
//! validate is replaced by a fresh computation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::characters::{CharacterTable, CharacterTableRecord};
use crate::error::{Error, Result};

/// What happened when a table was requested.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CacheOutcome {
    Hit,
    Created,
    Rebuilt,
}

#[derive(Clone, Debug)]
pub struct CharacterTableCache {
    dir: PathBuf,
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Cache(format!("{}: {e}", path.display()))
}

/// Canonical bytes of a table file.
pub fn serialize_table(table: &CharacterTable) -> String {
    let mut text = serde_json::to_string_pretty(&CharacterTableRecord::from(table)).expect("table serializes");
    text.push('\n');
    text
}

pub fn parse_table(text: &str) -> Result<CharacterTable> {
    let record: CharacterTableRecord = serde_json::from_str(text).map_err(|e| Error::Cache(e.to_string()))?;
    CharacterTable::try_from(record)
}

impl CharacterTableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
        Ok(CharacterTableCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("chartab-n{n}.json"))
    }

    pub fn get(&self, n: usize) -> Result<CharacterTable> {
        self.get_with_outcome(n).map(|(t, _)| t)
    }

    pub fn get_with_outcome(&self, n: usize) -> Result<(CharacterTable, CacheOutcome)> {
        let path = self.path_for(n);
        let mut outcome = CacheOutcome::Created;
        if let Ok(text) = fs::read_to_string(&path) {
            match parse_table(&text) {
                Ok(t) if t.n() == n => return Ok((t, CacheOutcome::Hit)),
                _ => {
                    outcome = CacheOutcome::Rebuilt;
                    // another process may have removed it already
                    let _ = fs::remove_file(&path);
                }
            }
        }
        let table = CharacterTable::compute(n);
        self.publish(&path, &serialize_table(&table))?;
        Ok((table, outcome))
    }

    fn publish(&self, path: &Path, text: &str) -> Result<()> {
        let tmp = self.dir.join(format!(
            ".chartab-{}-{}.tmp",
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut file = fs::File::create(&tmp).map_err(|e| io_error(&tmp, e))?;
        file.write_all(text.as_bytes()).and_then(|_| file.sync_all()).map_err(|e| io_error(&tmp, e))?;
        drop(file);
        let linked = fs::hard_link(&tmp, path);
        let _ = fs::remove_file(&tmp);
        match linked {
            Ok(()) => Ok(()),
            // someone else won; their content is the same table
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => Ok(()),
            Err(e) => Err(io_error(path, e)),
        }
    }
}
