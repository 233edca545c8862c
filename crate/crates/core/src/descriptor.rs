//! JSON descriptors for extensions and actions. Algebra paths are resolved
//! relative to the descriptor file.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{validate_action, ActionError, StrongExternalAction};
use crate::extension::{ExtensionError, SplitExtension};
use crate::format::{parse_algebra, ParseError};
use crate::hoop::{Elem, FiniteHoop, Variety};

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Algebra {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{path}: {source}")]
    Extension {
        path: PathBuf,
        #[source]
        source: ExtensionError,
    },
    #[error("{path}: {source}")]
    Action {
        path: PathBuf,
        #[source]
        source: ActionError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDescriptor {
    pub x: String,
    pub a: String,
    pub b: String,
    pub k: Vec<Elem>,
    pub p: Vec<Elem>,
    pub s: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDescriptor {
    pub b: String,
    pub x: String,
    pub f: Vec<Vec<Elem>>,
    pub g: Vec<Vec<Elem>>,
}

fn read(path: &Path) -> Result<String, DescriptorError> {
    fs::read_to_string(path).map_err(|source| DescriptorError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads and validates a hoop file.
pub fn load_algebra(path: &Path) -> Result<Arc<FiniteHoop>, DescriptorError> {
    parse_algebra(&read(path)?)
        .map(Arc::new)
        .map_err(|source| DescriptorError::Algebra {
            path: path.to_path_buf(),
            source,
        })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, DescriptorError> {
    serde_json::from_str(&read(path)?).map_err(|source| DescriptorError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(rel)
}

pub fn load_extension(path: &Path) -> Result<SplitExtension, DescriptorError> {
    let d: ExtensionDescriptor = parse_json(path)?;
    let x = load_algebra(&resolve(path, &d.x))?;
    let a = load_algebra(&resolve(path, &d.a))?;
    let b = load_algebra(&resolve(path, &d.b))?;
    SplitExtension::new(x, a, b, d.k, d.p, d.s).map_err(|source| DescriptorError::Extension {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses an action descriptor and returns its algebras and flattened tables
/// without validating the action.
pub fn load_action_tables(
    path: &Path,
) -> Result<(Arc<FiniteHoop>, Arc<FiniteHoop>, Vec<Elem>, Vec<Elem>), DescriptorError> {
    let d: ActionDescriptor = parse_json(path)?;
    let b = load_algebra(&resolve(path, &d.b))?;
    let x = load_algebra(&resolve(path, &d.x))?;
    Ok((b, x, d.f.concat(), d.g.concat()))
}

pub fn load_action(path: &Path, variety: Variety) -> Result<StrongExternalAction, DescriptorError> {
    let (b, x, f, g) = load_action_tables(path)?;
    validate_action(b, x, f, g, variety).map_err(|source| DescriptorError::Action {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_algebra;
    use crate::hoop::godel_chain;

    #[test]
    fn action_descriptor_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let c2 = godel_chain(2).without_bottom();
        fs::write(dir.path().join("c2.hoop"), write_algebra("C2", &c2)).unwrap();
        let d = ActionDescriptor {
            b: "c2.hoop".into(),
            x: "c2.hoop".into(),
            f: vec![vec![1, 1], vec![0, 1]],
            g: vec![vec![1, 1], vec![0, 1]],
        };
        let path = dir.path().join("act.json");
        fs::write(&path, serde_json::to_string(&d).unwrap()).unwrap();
        let act = load_action(&path, Variety::Basic).unwrap();
        assert_eq!(act.f_table(), &[1, 1, 0, 1]);
        assert!(matches!(
            load_action(&path, Variety::Wajsberg),
            Err(DescriptorError::Action { .. })
        ));
    }
}
