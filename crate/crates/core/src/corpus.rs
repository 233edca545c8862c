//! On-disk corpora of canonical hoops, one file per algebra.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use crate::enumerate::enumerate_hoops;
use crate::format::{parse_algebra_named, write_algebra, ParseError};
use crate::hoop::{FiniteHoop, HoopError, Variety};
use crate::morph::canonical_form;

pub const CORPUS_ENV: &str = "HOOPFORGE_CORPUS";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{path}: tables are not in canonical form")]
    NotCanonical { path: PathBuf },
    #[error("{path}: expected name `{expected}`, found `{found}`")]
    NameMismatch {
        path: PathBuf,
        expected: String,
        found: String,
    },
    #[error(transparent)]
    Hoop(#[from] HoopError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub hoop: Arc<FiniteHoop>,
}

/// Canonical hoops ordered by order, then by tables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    /// Directory the corpus was loaded from, if any.
    pub source: Option<PathBuf>,
}

pub fn entry_name(order: usize, seq: usize) -> String {
    format!("h{order}-{seq:03}")
}

impl Corpus {
    /// Enumerates every hoop of order `1..=max_order`.
    pub fn enumerate(max_order: usize, budget: u64, jobs: usize) -> Result<Self, HoopError> {
        let mut entries = Vec::new();
        for n in 1..=max_order {
            for (seq, h) in enumerate_hoops(n, Variety::Hoop, budget, jobs)?
                .into_iter()
                .enumerate()
            {
                entries.push(CorpusEntry {
                    name: entry_name(n, seq + 1),
                    hoop: Arc::new(h),
                });
            }
        }
        Ok(Corpus {
            entries,
            source: None,
        })
    }

    /// Writes `h<n>-<seq>.hoop` files into `dir`, creating it if needed.
    pub fn save(&self, dir: &Path) -> Result<(), CorpusError> {
        let io_err = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CorpusError::Io { path, source }
        };
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        for e in &self.entries {
            let path = dir.join(format!("{}.hoop", e.name));
            fs::write(&path, write_algebra(&e.name, &e.hoop)).map_err(io_err(&path))?;
        }
        Ok(())
    }

    /// Reads every `*.hoop` file in `dir`. Each file must validate, be in
    /// canonical form and carry its own file stem as name.
    pub fn load(dir: &Path) -> Result<Self, CorpusError> {
        let read_dir = fs::read_dir(dir).map_err(|source| CorpusError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let mut paths = Vec::new();
        for item in read_dir {
            let path = item
                .map_err(|source| CorpusError::Io {
                    path: dir.to_path_buf(),
                    source,
                })?
                .path();
            if path.extension().is_some_and(|e| e == "hoop") {
                paths.push(path);
            }
        }
        paths.sort();
        let mut entries = Vec::with_capacity(paths.len());
        for path in paths {
            let text = fs::read_to_string(&path).map_err(|source| CorpusError::Io {
                path: path.clone(),
                source,
            })?;
            let (name, hoop) = parse_algebra_named(&text).map_err(|source| CorpusError::Parse {
                path: path.clone(),
                source,
            })?;
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            if name != stem {
                return Err(CorpusError::NameMismatch {
                    path,
                    expected: stem,
                    found: name,
                });
            }
            if canonical_form(&hoop)? != hoop {
                return Err(CorpusError::NotCanonical { path });
            }
            entries.push(CorpusEntry {
                name,
                hoop: Arc::new(hoop),
            });
        }
        entries.sort_by(|a, b| {
            (a.hoop.order(), a.hoop.mul_table(), a.hoop.imp_table()).cmp(&(
                b.hoop.order(),
                b.hoop.mul_table(),
                b.hoop.imp_table(),
            ))
        });
        Ok(Corpus {
            entries,
            source: Some(dir.to_path_buf()),
        })
    }

    /// The corpus named by `HOOPFORGE_CORPUS` when set, otherwise a fresh
    /// enumeration. Either way only orders up to `max_order` are kept.
    pub fn from_env_or_enumerate(
        max_order: usize,
        budget: u64,
        jobs: usize,
    ) -> Result<Self, CorpusError> {
        match std::env::var_os(CORPUS_ENV) {
            Some(dir) if !dir.is_empty() => Ok(Corpus::load(Path::new(&dir))?.up_to(max_order)),
            _ => Ok(Corpus::enumerate(max_order, budget, jobs)?),
        }
    }

    pub fn up_to(mut self, max_order: usize) -> Self {
        self.entries.retain(|e| e.hoop.order() <= max_order);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn save_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let c = Corpus::enumerate(3, 1_000_000, 1).unwrap();
        c.save(dir.path()).unwrap();
        let back = Corpus::load(dir.path()).unwrap();
        assert_eq!(back.entries, c.entries);
        let mut names: Vec<String> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
            .collect();
        names.sort();
        assert_eq!(
            names,
            ["h1-001.hoop", "h2-001.hoop", "h3-001.hoop", "h3-002.hoop"]
        );
    }

    #[test]
    fn tampered_file_is_named() {
        let dir = tempfile::tempdir().unwrap();
        Corpus::enumerate(3, 1_000_000, 1)
            .unwrap()
            .save(dir.path())
            .unwrap();
        let path = dir.path().join("h3-002.hoop");
        let text = fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        // first row of `mul`: 0 x 0 -> 2 makes the unit a product
        let mut tampered: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
        let row = lines.iter().position(|l| *l == "mul").unwrap() + 1;
        tampered[row] = "2 0 0".into();
        fs::write(&path, tampered.join("\n")).unwrap();
        let err = Corpus::load(dir.path()).unwrap_err();
        assert!(err.to_string().contains("h3-002.hoop"), "{err}");
    }
}
