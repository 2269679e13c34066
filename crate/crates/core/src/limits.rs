//! Guards on exhaustive work.

/// Environment variable that overrides [`Limits::max_worlds`].
pub const MAX_N_ENV: &str = "POIREV_MAX_N";

/// Default bound on the number of worlds for exhaustive checking.
pub const DEFAULT_MAX_WORLDS: usize = 4;

/// Hard ceiling; beyond this the binding space cannot be indexed.
pub const HARD_MAX_WORLDS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_worlds: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_worlds: DEFAULT_MAX_WORLDS }
    }
}

impl Limits {
    pub fn with_max_worlds(max_worlds: usize) -> Self {
        Limits { max_worlds: max_worlds.min(HARD_MAX_WORLDS) }
    }

    /// Reads `POIREV_MAX_N`, falling back to the default when unset or malformed.
    pub fn from_env() -> Self {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or_else(Limits::default, Limits::with_max_worlds)
    }
}
