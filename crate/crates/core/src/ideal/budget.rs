use std::cell::Cell;
use std::sync::atomic::{AtomicU64, Ordering};

/// Default ceiling on S-pairs processed by a single Groebner computation.
pub const DEFAULT_PAIR_BUDGET: u64 = 200_000;

static PAIR_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_PAIR_BUDGET);

thread_local! {
    static PAIRS_SEEN: Cell<u64> = const { Cell::new(0) };
    static BASES_COMPUTED: Cell<u64> = const { Cell::new(0) };
    static LOCAL_BUDGET: Cell<Option<u64>> = const { Cell::new(None) };
}

/// Sets the process-wide S-pair ceiling.
pub fn set_pair_budget(limit: u64) {
    PAIR_BUDGET.store(limit, Ordering::Relaxed);
}

/// The ceiling in force on this thread.
pub fn pair_budget() -> u64 {
    LOCAL_BUDGET
        .with(Cell::get)
        .unwrap_or_else(|| PAIR_BUDGET.load(Ordering::Relaxed))
}

/// Runs `f` with a ceiling that applies to the current thread only.
pub fn with_pair_budget<R>(limit: u64, f: impl FnOnce() -> R) -> R {
    let previous = LOCAL_BUDGET.with(|c| c.replace(Some(limit)));
    struct Restore(Option<u64>);
    impl Drop for Restore {
        fn drop(&mut self) {
            LOCAL_BUDGET.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(previous);
    f()
}

/// Counters accumulated on the current thread since the last reset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub pairs: u64,
    pub bases: u64,
}

pub fn stats() -> EngineStats {
    EngineStats {
        pairs: PAIRS_SEEN.with(Cell::get),
        bases: BASES_COMPUTED.with(Cell::get),
    }
}

pub fn reset_stats() {
    PAIRS_SEEN.with(|c| c.set(0));
    BASES_COMPUTED.with(|c| c.set(0));
}

pub(crate) fn record(pairs: u64) {
    PAIRS_SEEN.with(|c| c.set(c.get() + pairs));
    BASES_COMPUTED.with(|c| c.set(c.get() + 1));
}
