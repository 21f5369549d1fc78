//! Series cache: computed F/G dumps keyed by (function, order).
//!
//! Cache hits must be bit-identical to recomputation, which holds because
//! the JSON dump is canonical; a stale or unreadable entry is recomputed
//! and overwritten.

use std::path::{Path, PathBuf};

use anyhow::Context;
use hurwitz_core::{Series, VarFamily};

pub fn resolve_dir(flag: Option<PathBuf>) -> PathBuf {
    if let Some(dir) = flag {
        return dir;
    }
    if let Some(env) = std::env::var_os("HURWITZ_CACHE") {
        return PathBuf::from(env);
    }
    PathBuf::from(".hurwitz-cache")
}

fn entry_path(dir: &Path, family: VarFamily, order: u32) -> PathBuf {
    let letter = match family {
        VarFamily::X => 'f',
        VarFamily::Y => 'g',
        VarFamily::T => 't',
    };
    dir.join(format!("{letter}_{order}.json"))
}

/// Fetch the series from the cache, or compute and store it.
pub fn get_or_compute(
    dir: &Path,
    family: VarFamily,
    order: u32,
    compute: impl FnOnce() -> Series,
) -> anyhow::Result<Series> {
    let path = entry_path(dir, family, order);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(series) = Series::from_json(&text) {
            if series.family() == family && series.order() == order {
                return Ok(series);
            }
        }
    }
    let series = compute();
    std::fs::create_dir_all(dir)
        .with_context(|| format!("cannot create cache directory {}", dir.display()))?;
    std::fs::write(&path, series.to_json())
        .with_context(|| format!("cannot write cache entry {}", path.display()))?;
    Ok(series)
}
