//! Global entry-count guard on large dense objects.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ENTRIES: usize = 100_000_000;
pub const ENV_VAR: &str = "GERST_MAX_ENTRIES";

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);
static FROM_ENV: OnceLock<usize> = OnceLock::new();

/// Current limit: an explicit [`set_max_entries`] wins, then the environment
/// variable, then the default.
pub fn max_entries() -> usize {
    let o = OVERRIDE.load(Ordering::Relaxed);
    if o != 0 {
        return o;
    }
    *FROM_ENV.get_or_init(|| {
        std::env::var(ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&n: &usize| n > 0)
            .unwrap_or(DEFAULT_MAX_ENTRIES)
    })
}

/// Pass 0 to drop the override.
pub fn set_max_entries(n: usize) {
    OVERRIDE.store(n, Ordering::Relaxed);
}

pub fn check_entries(what: impl FnOnce() -> String, size: u128) -> Result<usize> {
    let limit = max_entries();
    if size > limit as u128 {
        return Err(Error::ResourceLimit {
            guard: ENV_VAR,
            what: format!("entries of {}", what()),
            size,
            limit,
        });
    }
    Ok(size as usize)
}

/// `base^exp` checked against the guard.
pub fn checked_power(what: impl FnOnce() -> String, base: usize, exp: usize) -> Result<usize> {
    let mut size: u128 = 1;
    for _ in 0..exp {
        size = size.saturating_mul(base as u128);
    }
    check_entries(what, size)
}
