//! Process-wide limits.

use std::sync::OnceLock;

/// Default cap on poset element counts.
pub const DEFAULT_ELEMENT_CAP: usize = 1024;

/// Default element budget for monoid closures.
pub const DEFAULT_CLOSURE_BUDGET: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_ELEMENT_CAP`].
pub const CAP_ENV: &str = "MATCHMONOID_CAP";

static ELEMENT_CAP: OnceLock<usize> = OnceLock::new();

/// The element cap: `MATCHMONOID_CAP` when set to a positive integer, otherwise the default.
pub fn element_cap() -> usize {
    *ELEMENT_CAP.get_or_init(|| {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
            .unwrap_or(DEFAULT_ELEMENT_CAP)
    })
}
