//! Enumeration bounds.
//!
//! Every routine that walks all of `S_n` (or all linear extensions of a poset
//! with `n` elements) checks `n` against [`max_n`] first. The bound defaults to
//! [`DEFAULT_MAX_N`] and can be overridden with the `PERMACT_MAX_N` environment
//! variable.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_N: usize = 10;

pub const ENV_MAX_N: &str = "PERMACT_MAX_N";

static MAX_N: OnceLock<usize> = OnceLock::new();

/// The active enumeration cap. Read once per process.
pub fn max_n() -> usize {
    *MAX_N.get_or_init(|| {
        std::env::var(ENV_MAX_N)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_N)
    })
}

pub fn check(n: usize) -> Result<()> {
    let bound = max_n();
    if n > bound {
        Err(Error::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}
