//! Text persistence for [`MemoTable`].
//!
//! One entry per line, `d,r,s,theta=count`, sorted by key. Loading rejects
//! inadmissible keys outright and recomputes a sample of the entries from
//! scratch before trusting the file.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::exact_arith::{parse_count, BigCount};
use crate::recursion::{n_planar, CountKey, MemoTable, RecursionError};

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot access cache {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("malformed cache line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("cache entry {key} is not an admissible key")]
    Inadmissible { key: CountKey },
    #[error("cache entry {key} failed validation: stored {stored}, recomputed {expected}")]
    Validation {
        key: CountKey,
        stored: BigCount,
        expected: BigCount,
    },
    #[error(transparent)]
    Recursion(#[from] RecursionError),
}

/// How much of a loaded cache gets recomputed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Validation {
    pub fraction: f64,
    pub minimum: usize,
}

impl Default for Validation {
    fn default() -> Self {
        Self {
            fraction: 0.01,
            minimum: 10,
        }
    }
}

impl Validation {
    pub fn all() -> Self {
        Self {
            fraction: 1.0,
            minimum: 0,
        }
    }

    fn sample_size(&self, total: usize) -> usize {
        let by_fraction = (self.fraction.clamp(0.0, 1.0) * total as f64).ceil() as usize;
        by_fraction.max(self.minimum).min(total)
    }
}

pub fn write_cache<W: Write>(memo: &MemoTable, mut out: W) -> io::Result<()> {
    for (key, value) in memo.snapshot() {
        writeln!(out, "{key}={value}")?;
    }
    out.flush()
}

pub fn save(memo: &MemoTable, path: &Path) -> Result<(), CacheError> {
    let io_err = |source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = fs::File::create(path).map_err(io_err)?;
    write_cache(memo, io::BufWriter::new(file)).map_err(io_err)
}

fn parse_line(line_no: usize, line: &str) -> Result<(CountKey, BigCount), CacheError> {
    let bad = |reason: &str| CacheError::Parse {
        line: line_no,
        reason: reason.to_string(),
    };
    let (key_text, count_text) = line.split_once('=').ok_or_else(|| bad("missing '='"))?;
    let fields: Vec<u32> = key_text
        .split(',')
        .map(|f| f.parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad("key fields must be nonnegative integers"))?;
    let [d, r, s, theta] = fields[..] else {
        return Err(bad("key must have four fields d,r,s,theta"));
    };
    let value = parse_count(count_text).ok_or_else(|| bad("count is not a decimal integer"))?;
    Ok((CountKey::new(d, r, s, theta), value))
}

pub fn read_cache<R: BufRead>(input: R, validation: Validation) -> Result<MemoTable, CacheError> {
    let memo = MemoTable::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|source| CacheError::Io {
            path: PathBuf::from("<stream>"),
            source,
        })?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let (key, value) = parse_line(idx + 1, line)?;
        if !key.is_admissible() {
            return Err(CacheError::Inadmissible { key });
        }
        memo.insert(key, value)?;
    }
    validate(&memo, validation)?;
    Ok(memo)
}

pub fn load(path: &Path, validation: Validation) -> Result<MemoTable, CacheError> {
    let text = fs::read_to_string(path).map_err(|source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_cache(text.as_bytes(), validation)
}

/// Recomputes an evenly spaced sample of entries against a cold memo.
pub fn validate(memo: &MemoTable, validation: Validation) -> Result<(), CacheError> {
    let entries = memo.snapshot();
    let k = validation.sample_size(entries.len());
    let cold = MemoTable::new();
    for i in 0..k {
        let (key, stored) = &entries[i * entries.len() / k];
        let expected = n_planar(*key, &cold)?;
        if *stored != expected {
            return Err(CacheError::Validation {
                key: *key,
                stored: stored.clone(),
                expected,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn warm(max_d: u32) -> MemoTable {
        let memo = MemoTable::new();
        for d in 1..=max_d {
            for key in CountKey::on_shell(d) {
                n_planar(key, &memo).unwrap();
            }
        }
        memo
    }

    #[test]
    fn round_trip() {
        let memo = warm(5);
        let mut buf = Vec::new();
        write_cache(&memo, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("3,11,0,0=12960\n"));
        let back = read_cache(&buf[..], Validation::default()).unwrap();
        assert_eq!(back.snapshot(), memo.snapshot());
    }

    #[test]
    fn empty_input() {
        let memo = read_cache(&b""[..], Validation::default()).unwrap();
        assert!(memo.is_empty());
    }

    #[test]
    fn tampered_entry_is_named() {
        let text = "3,11,0,0=12961\n";
        let err = read_cache(text.as_bytes(), Validation::default()).unwrap_err();
        match err {
            CacheError::Validation { key, .. } => assert_eq!(key.to_string(), "3,11,0,0"),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn full_validation_catches_any_entry() {
        let memo = warm(4);
        let mut buf = Vec::new();
        write_cache(&memo, &mut buf).unwrap();
        let text = String::from_utf8(buf)
            .unwrap()
            .replace("4,14,0,0=3727920", "4,14,0,0=3727921");
        let err = read_cache(text.as_bytes(), Validation::all()).unwrap_err();
        assert!(err.to_string().contains("4,14,0,0"), "{err}");
    }

    #[test]
    fn rejects_malformed_and_inadmissible() {
        for bad in ["3,11,0=1", "3,11,0,0", "3,11,0,0=1.5", "a,b,c,d=1", "3,11,0,0=1e3"] {
            assert!(
                matches!(read_cache(bad.as_bytes(), Validation::default()), Err(CacheError::Parse { .. })),
                "{bad}"
            );
        }
        assert!(matches!(
            read_cache(&b"3,10,0,0=0\n"[..], Validation::default()),
            Err(CacheError::Inadmissible { .. })
        ));
        assert!(matches!(
            read_cache(&b"2,8,0,0=92\n2,8,0,0=93\n"[..], Validation::default()),
            Err(CacheError::Recursion(RecursionError::MemoConflict { .. }))
        ));
    }

    #[test]
    fn sample_sizes() {
        let v = Validation::default();
        assert_eq!(v.sample_size(0), 0);
        assert_eq!(v.sample_size(5), 5);
        assert_eq!(v.sample_size(500), 10);
        assert_eq!(v.sample_size(2000), 20);
        assert_eq!(Validation::all().sample_size(37), 37);
    }
}
