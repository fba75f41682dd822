//! Multi-threaded measure evaluation.

use std::thread;

use hardness_core::calculator::tag;
use hardness_core::{FitPlan, Result};

/// Evaluates the plan's measures on up to `threads` scoped threads.
///
/// Every measure derives its own seed, so the result does not depend on the
/// schedule and equals [`FitPlan::run`]. On failure the error of the first
/// failing measure in canonical order is returned.
pub fn run_parallel(plan: &FitPlan<'_>, threads: usize) -> Result<Vec<f64>> {
    let ids = plan.measures();
    let threads = threads.clamp(1, ids.len().max(1));
    if threads == 1 {
        return plan.run();
    }
    let mut slots: Vec<Option<Result<f64>>> = (0..ids.len()).map(|_| None).collect();
    thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|w| {
                scope.spawn(move || {
                    (w..ids.len())
                        .step_by(threads)
                        .map(|k| (k, plan.evaluate(ids[k]).map_err(|e| tag(ids[k], e))))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for worker in workers {
            for (k, value) in worker.join().expect("measure worker panicked") {
                slots[k] = Some(value);
            }
        }
    });
    slots
        .into_iter()
        .map(|v| v.expect("every slot evaluated"))
        .collect()
}

pub fn available_threads() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}
