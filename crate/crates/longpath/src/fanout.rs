//! Scoped-thread fan-out for the detour pipeline's independent probes.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use longpath_core::detour::{Fanout, FanoutResult, Probe};
use longpath_core::{Certainty, Result};

/// Runs probes on `threads` workers pulling indices from a shared counter.
/// Once a probe hits (or fails), higher indices are skipped, but every
/// lower index still runs, so the reported hit is the lowest one.
#[derive(Debug, Clone, Copy)]
pub struct Threaded {
    pub threads: usize,
}

impl Fanout for Threaded {
    fn first_hit<T, F>(&self, count: usize, probe: F) -> Result<FanoutResult<T>>
    where
        T: Send,
        F: Fn(usize) -> Result<Probe<T>> + Sync,
    {
        let next = AtomicUsize::new(0);
        let stop = AtomicUsize::new(usize::MAX);
        let done: Mutex<Vec<(usize, Result<Probe<T>>)>> = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..self.threads.max(1).min(count.max(1)) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= count || i > stop.load(Ordering::Acquire) {
                        break;
                    }
                    let r = probe(i);
                    if matches!(r, Ok(Probe::Hit(_)) | Err(_)) {
                        stop.fetch_min(i, Ordering::AcqRel);
                    }
                    done.lock().expect("no worker panics while holding the lock").push((i, r));
                });
            }
        });
        let mut done = done.into_inner().expect("workers finished");
        done.sort_unstable_by_key(|(i, _)| *i);
        let mut out = FanoutResult { hit: None, inconclusive: false, certainty: Certainty::Exact };
        for (i, r) in done {
            match r? {
                Probe::Hit(t) => {
                    out.hit = Some((i, t));
                    return Ok(out);
                }
                Probe::Miss(c) => out.certainty = out.certainty.and(c),
                Probe::Inconclusive => out.inconclusive = true,
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use longpath_core::detour::{solve_detour_with, DetourConfig, DetourQuery, Sequential};
    use longpath_core::random::random_digraph;
    use longpath_core::{Error, GraphRef};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lowest_hit_wins() {
        for threads in [1, 2, 4, 8] {
            let f = Threaded { threads };
            let r = f
                .first_hit(100, |i| Ok(if i % 7 == 3 { Probe::Hit(i) } else { Probe::Miss(Certainty::Exact) }))
                .unwrap();
            assert_eq!(r.hit, Some((3, 3)));
            assert!(!r.inconclusive);
        }
    }

    #[test]
    fn misses_and_inconclusive_are_collected() {
        let f = Threaded { threads: 3 };
        let r = f
            .first_hit::<(), _>(10, |i| {
                Ok(match i {
                    4 => Probe::Inconclusive,
                    7 => Probe::Miss(Certainty::Randomized { delta: 0.01 }),
                    _ => Probe::Miss(Certainty::Exact),
                })
            })
            .unwrap();
        assert!(r.hit.is_none());
        assert!(r.inconclusive);
        assert_eq!(r.certainty, Certainty::Randomized { delta: 0.01 });

        let r = f.first_hit(10, |i| Ok(if i < 5 { Probe::Inconclusive } else { Probe::Hit(i) })).unwrap();
        assert_eq!(r.hit, Some((5, 5)));
        assert!(r.inconclusive);
    }

    #[test]
    fn errors_below_the_hit_propagate() {
        let f = Threaded { threads: 4 };
        let r = f.first_hit(20, |i| match i {
            2 => Err(Error::EmptyGraph),
            9 => Ok(Probe::Hit(i)),
            _ => Ok(Probe::Miss(Certainty::Exact)),
        });
        assert_eq!(r.unwrap_err(), Error::EmptyGraph);
        let r = f.first_hit::<usize, _>(0, |_| unreachable!()).unwrap();
        assert!(r.hit.is_none() && !r.inconclusive);
    }

    #[test]
    fn matches_sequential_pipeline() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let cfg = DetourConfig::default();
        for i in 0..150 {
            let g = random_digraph(&mut rng, 4 + i % 6, 0.35);
            for k in 0..4 {
                let q = DetourQuery { graph: GraphRef::Directed(&g), s: 0, t: 1, k };
                let a = solve_detour_with(&q, &cfg, &Sequential);
                let b = solve_detour_with(&q, &cfg, &Threaded { threads: 4 });
                assert_eq!(a, b, "instance {i} k={k}");
            }
        }
    }
}
