//! Sequential and data-parallel execution of independent work items.

use serde::{Deserialize, Serialize};

/// How to run a fan-out. `Parallel` degrades to `Sequential` when the
/// `parallel` feature is disabled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether work actually runs on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Runs `scan` over consecutive chunks of `0..total` and returns the chunk
/// results in order, up to and including the first one for which `stop`
/// holds. Chunks after that may be skipped, so the prefix is deterministic.
pub fn scan_chunks<R, S, P>(total: u64, chunk: u64, exec: Execution, scan: S, stop: P) -> Vec<R>
where
    R: Send,
    S: Fn(std::ops::Range<u64>) -> R + Sync + Send,
    P: Fn(&R) -> bool + Sync + Send,
{
    let chunk = chunk.max(1);
    let count = total.div_ceil(chunk);
    let range = |i: u64| i * chunk..((i + 1) * chunk).min(total);

    #[cfg(feature = "parallel")]
    if exec.is_parallel() && count > 1 {
        use rayon::prelude::*;
        use std::sync::atomic::{AtomicU64, Ordering};
        let first_stop = AtomicU64::new(u64::MAX);
        let results: Vec<Option<R>> = (0..count)
            .into_par_iter()
            .map(|i| {
                if i > first_stop.load(Ordering::Relaxed) {
                    return None;
                }
                let r = scan(range(i));
                if stop(&r) {
                    first_stop.fetch_min(i, Ordering::Relaxed);
                }
                Some(r)
            })
            .collect();
        let mut out = Vec::new();
        for r in results {
            let r = r.expect("chunks before the first stop are always scanned");
            let done = stop(&r);
            out.push(r);
            if done {
                break;
            }
        }
        return out;
    }
    let _ = exec;
    let mut out = Vec::new();
    for i in 0..count {
        let r = scan(range(i));
        let done = stop(&r);
        out.push(r);
        if done {
            break;
        }
    }
    out
}
