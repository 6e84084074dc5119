//! Order-preserving batch execution with an optional parallel scheduler.

/// Scheduling choice for a batch of independent instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BatchMode {
    /// One instance after another on the calling thread.
    Sequential,
    /// Data-parallel across instances when the `parallel` feature is
    /// compiled in; without it, identical to [`BatchMode::Sequential`].
    Parallel,
}

/// Applies `work` to every item and returns the results in item order
/// regardless of completion order. Instances never share mutable state,
/// so each one runs single-threaded under either mode.
pub fn run_batch_with_mode<I, T, F>(items: &[I], mode: BatchMode, work: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync,
{
    match mode {
        #[cfg(feature = "parallel")]
        BatchMode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(&work).collect()
        }
        _ => items.iter().map(work).collect(),
    }
}
