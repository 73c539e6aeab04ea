//! Deterministic worker partitioning for exhaustive sweeps.
//!
//! Sweeps may run on several threads; the merged result is always the one the
//! single-threaded scan would produce (the witness at the smallest outer
//! index), so worker count never changes observable output.

use std::sync::atomic::{AtomicUsize, Ordering};

/// Worker count: `ORDALG_WORKERS` if set, else available parallelism capped
/// at 8.
pub fn workers() -> usize {
    if let Ok(v) = std::env::var("ORDALG_WORKERS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism().map(|n| n.get().min(8)).unwrap_or(1)
}

/// Find the smallest index `i < n` for which `f(i)` returns `Some`, scanning
/// in parallel. `f` must be pure.
pub fn find_first<T, F>(n: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync,
{
    let nw = workers();
    if nw <= 1 || n < 256 {
        for i in 0..n {
            if let Some(t) = f(i) {
                return Some((i, t));
            }
        }
        return None;
    }

    let best = AtomicUsize::new(usize::MAX);
    let mut results: Vec<Option<(usize, T)>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..nw)
            .map(|w| {
                let f = &f;
                let best = &best;
                scope.spawn(move || {
                    let mut local: Option<(usize, T)> = None;
                    let mut i = w;
                    while i < n {
                        if i >= best.load(Ordering::Relaxed) {
                            break;
                        }
                        if let Some(t) = f(i) {
                            best.fetch_min(i, Ordering::Relaxed);
                            local = Some((i, t));
                            break;
                        }
                        i += nw;
                    }
                    local
                })
            })
            .collect();
        for h in handles {
            results.push(h.join().expect("sweep worker panicked"));
        }
    });
    results.into_iter().flatten().min_by_key(|(i, _)| *i)
}
