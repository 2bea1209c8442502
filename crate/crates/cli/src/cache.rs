//! Optional on-disk cache of count rows, one JSON file per family and `n`.

use std::fs;
use std::path::{Path, PathBuf};

use dm_core::{
    closed_count, count_table, involution_descent_table, telephone_number, EnumerationBound,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
pub enum Family {
    /// I(n,k): involutions by descent number, k = 0..n-1
    I,
    /// T(n,k): symmetric matrices, k = 1..n
    T,
    /// W(n,k): zero-diagonal symmetric matrices, k = 1..n
    W,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::I => "I",
            Family::T => "T",
            Family::W => "W",
        }
    }

    pub fn first_k(self) -> usize {
        match self {
            Family::I => 0,
            Family::T | Family::W => 1,
        }
    }

    fn compute(self, n: usize, bound: EnumerationBound) -> dm_core::Result<Vec<u64>> {
        match self {
            Family::I => involution_descent_table(n, bound),
            Family::T => count_table(n, false, bound),
            Family::W => count_table(n, true, bound),
        }
    }

    /// Cheap independent sanity check for a row read back from disk.
    fn plausible(self, n: usize, counts: &[u64]) -> bool {
        if counts.len() != n {
            return false;
        }
        match self {
            Family::I => telephone_number(n).is_ok_and(|t| counts.iter().sum::<u64>() == t),
            Family::T | Family::W => counts
                .iter()
                .enumerate()
                .all(|(idx, &c)| closed_count(n, idx + 1, self == Family::W).is_ok_and(|e| e == c)),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    family: Family,
    n: usize,
    counts: Vec<u64>,
}

/// Where count rows come from: fresh enumeration, or a cache directory.
#[derive(Debug, Clone)]
pub struct CountSource {
    bound: EnumerationBound,
    cache_dir: Option<PathBuf>,
}

impl CountSource {
    pub fn new(bound: EnumerationBound, cache_dir: Option<PathBuf>) -> Self {
        CountSource { bound, cache_dir }
    }

    pub fn bound(&self) -> EnumerationBound {
        self.bound
    }

    pub fn counts(&self, family: Family, n: usize) -> Result<Vec<u64>, CliError> {
        self.bound.check(n)?;
        let Some(dir) = &self.cache_dir else {
            return Ok(family.compute(n, self.bound)?);
        };
        let path = dir.join(format!("{}-{n}.json", family.name()));
        if let Some(counts) = read_entry(&path, family, n) {
            return Ok(counts);
        }
        let counts = family.compute(n, self.bound)?;
        write_entry(dir, &path, family, n, &counts)?;
        Ok(counts)
    }
}

fn read_entry(path: &Path, family: Family, n: usize) -> Option<Vec<u64>> {
    let bytes = fs::read(path).ok()?;
    match serde_json::from_slice::<Entry>(&bytes) {
        Ok(e) if e.family == family && e.n == n && family.plausible(n, &e.counts) => Some(e.counts),
        _ => {
            eprintln!("warning: ignoring invalid cache file {}", path.display());
            None
        }
    }
}

fn write_entry(
    dir: &Path,
    path: &Path,
    family: Family,
    n: usize,
    counts: &[u64],
) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    let entry = Entry {
        family,
        n,
        counts: counts.to_vec(),
    };
    let tmp = path.with_extension("json.tmp");
    fs::write(
        &tmp,
        serde_json::to_vec(&entry).expect("cache entry serializes"),
    )?;
    fs::rename(&tmp, path)?;
    Ok(())
}
