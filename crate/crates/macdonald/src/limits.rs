//! Global size caps. `MACDONALD_LIMIT` overrides the default cap for both
//! exhaustive enumeration and exact dimension computation.

use std::sync::OnceLock;

/// Default cap on `n` for exhaustive partition enumeration.
pub const DEFAULT_SIZE_CAP: usize = 60;

/// Default cap on `|lambda|` for exact dimension computation.
pub const DEFAULT_F_EXACT_CAP: usize = 40;

fn env_override() -> Option<usize> {
    static OVERRIDE: OnceLock<Option<usize>> = OnceLock::new();
    *OVERRIDE.get_or_init(|| {
        std::env::var("MACDONALD_LIMIT")
            .ok()
            .and_then(|s| s.trim().parse().ok())
    })
}

/// Cap applied to `partitions_of` and the CLI enumeration verbs.
pub fn size_cap() -> usize {
    env_override().unwrap_or(DEFAULT_SIZE_CAP)
}

/// Cap applied to `f_exact`.
pub fn f_exact_cap() -> usize {
    env_override().unwrap_or(DEFAULT_F_EXACT_CAP)
}
