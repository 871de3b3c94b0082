//! Read-through store for base 3-kaleidoscopic colorings of `K_m`.
//!
//! Entries live in memory and, optionally, as `K{m}-3.json` documents in a
//! directory. Loaded entries are re-verified; corrupt ones are recomputed and
//! overwritten. Disk writes go through a temporary file and a no-clobber
//! rename, so concurrent writers of one key leave exactly one winner.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::document::ColoringDocument;
use crate::graph::{verify_kaleidoscope, ColoredGraph, SimpleGraph};
use crate::search::{search_kaleidoscope, SearchBudget, SearchError, SearchStatus};

pub const CACHE_DIR_ENV: &str = "KALEIDO_CACHE_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("search for K_{n} with {k} colors ended with {status:?}")]
    NotFound {
        n: usize,
        k: usize,
        status: SearchStatus,
    },
}

#[derive(Debug, Default)]
pub struct BaseCache {
    dir: Option<PathBuf>,
    memory: Mutex<HashMap<(usize, usize), ColoredGraph>>,
}

impl BaseCache {
    pub fn in_memory() -> Self {
        BaseCache::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        BaseCache {
            dir: Some(dir.into()),
            memory: Mutex::default(),
        }
    }

    /// Disk-backed if `KALEIDO_CACHE_DIR` is set, otherwise memory only.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => BaseCache::with_dir(dir),
            _ => BaseCache::in_memory(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn entry_path(&self, n: usize, k: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("K{n}-{k}.json")))
    }

    /// A verified `k`-kaleidoscopic coloring of `K_n`, searched on a miss.
    pub fn get_or_search(
        &self,
        n: usize,
        k: usize,
        budget: &SearchBudget,
    ) -> Result<ColoredGraph, CacheError> {
        let mut memory = self.memory.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(g) = memory.get(&(n, k)) {
            return Ok(g.clone());
        }
        if let Some(g) = self.load(n, k) {
            memory.insert((n, k), g.clone());
            return Ok(g);
        }
        let outcome = search_kaleidoscope(&SimpleGraph::complete(n), k, budget)?;
        let g = match outcome.witness {
            Some(g) => g,
            None => {
                return Err(CacheError::NotFound {
                    n,
                    k,
                    status: outcome.status,
                })
            }
        };
        self.store(n, k, &g);
        memory.insert((n, k), g.clone());
        Ok(g)
    }

    fn load(&self, n: usize, k: usize) -> Option<ColoredGraph> {
        let path = self.entry_path(n, k)?;
        let g = ColoringDocument::load(&path).ok()?.to_graph().ok()?;
        let complete = g.n() == n && g.k() == k && g.edge_count() == n * (n - 1) / 2;
        (complete && verify_kaleidoscope(&g).valid).then_some(g)
    }

    fn store(&self, n: usize, k: usize, g: &ColoredGraph) {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.entry_path(n, k)) else {
            return;
        };
        // The cache is an optimization; write failures are not fatal.
        let _ = (|| -> std::io::Result<()> {
            std::fs::create_dir_all(dir)?;
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(ColoringDocument::from_graph(g).to_json().as_bytes())?;
            if path.exists() {
                // A corrupt entry is replaced; a valid one would have loaded.
                tmp.persist(&path).map_err(|e| e.error)?;
            } else if let Err(e) = tmp.persist_noclobber(&path) {
                if e.error.kind() != std::io::ErrorKind::AlreadyExists {
                    return Err(e.error);
                }
            }
            Ok(())
        })();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn memory_cache_returns_same_witness() {
        let cache = BaseCache::in_memory();
        let a = cache.get_or_search(7, 3, &SearchBudget::default()).unwrap();
        let b = cache.get_or_search(7, 3, &SearchBudget::default()).unwrap();
        assert_eq!(a, b);
        assert!(verify_kaleidoscope(&a).valid);
    }

    #[test]
    fn disk_entries_are_written_and_corruption_recovered() {
        let dir = tempfile::tempdir().unwrap();
        let cache = BaseCache::with_dir(dir.path());
        let g = cache.get_or_search(6, 3, &SearchBudget::default()).unwrap();
        let path = cache.entry_path(6, 3).unwrap();
        assert!(path.exists());

        // A fresh cache reads the file back.
        let again = BaseCache::with_dir(dir.path());
        assert_eq!(
            again.get_or_search(6, 3, &SearchBudget::default()).unwrap(),
            g
        );

        // Recolor one edge so the stored coloring is no longer kaleidoscopic.
        let text = std::fs::read_to_string(&path).unwrap();
        let broken = text.replacen("[1, 2, ", "[1, 2, 9", 1);
        std::fs::write(&path, broken).unwrap();
        let fresh = BaseCache::with_dir(dir.path());
        let recomputed = fresh.get_or_search(6, 3, &SearchBudget::default()).unwrap();
        assert!(verify_kaleidoscope(&recomputed).valid);
        let reloaded = ColoringDocument::load(&path).unwrap().to_graph().unwrap();
        assert_eq!(reloaded, recomputed);
    }
}
