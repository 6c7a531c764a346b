//! Optional on-disk cache of group elements, enabled by `TWC_CACHE_DIR`.
//!
//! A cached group is used only if it validates: every matrix canonical and
//! invertible, the identity present, the expected generators present, and
//! the set closed under composition. Anything else is recomputed.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldTable;
use crate::group::{compose, GroupKind, GroupModel, Projectivity};

pub const CACHE_ENV: &str = "TWC_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct CacheMeta {
    tool: String,
    version: String,
    q: usize,
    kind: GroupKind,
    order: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    meta: CacheMeta,
    group: GroupModel,
}

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

pub fn cache_path(dir: &Path, q: usize, kind: GroupKind) -> PathBuf {
    dir.join(format!("group-q{q}-{}.json", kind.name()))
}

/// Checks that `group` is exactly the group generated by `generators`.
pub fn validate(f: &FieldTable, group: &GroupModel, generators: &[Projectivity]) -> Result<()> {
    let bad = |m: &str| Err(Error::Cache(m.to_string()));
    if group.q != f.order() {
        return bad("field order mismatch");
    }
    let mut set = HashSet::with_capacity(group.order());
    for g in &group.elements {
        match Projectivity::from_matrix(f, &g.0) {
            Ok(c) if c == *g => {}
            Ok(_) => return bad("matrix not in canonical form"),
            Err(_) => return bad("singular matrix"),
        }
        if !set.insert(*g) {
            return bad("duplicate element");
        }
    }
    if group.elements.windows(2).any(|w| w[0] >= w[1]) {
        return bad("elements not sorted");
    }
    if !set.contains(&Projectivity::identity()) {
        return bad("identity missing");
    }
    if generators.iter().any(|g| !set.contains(g)) {
        return bad("generator missing");
    }
    for g in generators {
        for x in &group.elements {
            if !set.contains(&compose(f, g, x)) {
                return bad("not closed under composition");
            }
        }
    }
    Ok(())
}

fn load(f: &FieldTable, path: &Path, kind: GroupKind, generators: &[Projectivity]) -> Result<GroupModel> {
    let text = fs::read_to_string(path).map_err(|e| Error::Cache(e.to_string()))?;
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
    if file.group.kind != kind || file.meta.q != f.order() || file.meta.order != file.group.order() {
        return Err(Error::Cache("metadata mismatch".into()));
    }
    validate(f, &file.group, generators)?;
    Ok(file.group)
}

fn store(path: &Path, group: &GroupModel) -> Result<()> {
    let file = CacheFile {
        meta: CacheMeta {
            tool: "twc".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            q: group.q,
            kind: group.kind,
            order: group.order(),
        },
        group: group.clone(),
    };
    let text = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    }
    fs::write(path, text).map_err(|e| Error::Cache(e.to_string()))
}

/// Loads the group from `dir` when a valid entry exists, otherwise builds
/// it and tries to write it back. Write failures are ignored.
pub fn load_or_build(
    f: &FieldTable,
    dir: Option<&Path>,
    kind: GroupKind,
    generators: &[Projectivity],
    build: impl FnOnce() -> Result<GroupModel>,
) -> Result<GroupModel> {
    let Some(dir) = dir else { return build() };
    let path = cache_path(dir, f.order(), kind);
    if let Ok(g) = load(f, &path, kind, generators) {
        return Ok(g);
    }
    let g = build()?;
    let _ = store(&path, &g);
    Ok(g)
}
