//! Brute-force depth-first enumeration of self-avoiding walks in a strip.
//!
//! This is the ground truth for everything else in the crate, so it is
//! deliberately plain: an exact visited grid, one branch per free
//! neighbour, no pruning. The only shortcut is at the last step, where the
//! free neighbours are counted instead of visited.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{Step, StepWord, StripSpec};

pub const DEFAULT_WALK_CAP: u128 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_WALK_CAP`].
pub const WALK_CAP_ENV: &str = "SAW_WALK_CAP";

/// The walk cap from `SAW_WALK_CAP`, falling back to the default.
pub fn walk_cap_from_env() -> u128 {
    std::env::var(WALK_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_WALK_CAP)
}

#[derive(Clone, Debug)]
pub struct EnumConfig {
    /// Worker threads. Counts do not depend on this.
    pub workers: usize,
    /// Length of the prefixes handed out as independent tasks.
    pub split_depth: usize,
    /// Abort once the number of longest walks exceeds this.
    pub cap: Option<u128>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            split_depth: 6,
            cap: None,
        }
    }
}

/// Visited-cell grid sized so that no walk of length `n_max` can leave it.
struct Grid {
    width: usize,
    cells: Vec<bool>,
    origin: usize,
    xlo: i64,
    xhi: i64,
}

impl Grid {
    fn new(strip: &StripSpec, n_max: usize) -> Self {
        let width = strip.width() as usize;
        let rows = 2 * n_max + 3;
        let origin = (n_max + 1) * width + (-strip.xlo()) as usize;
        let mut cells = vec![false; width * rows];
        cells[origin] = true;
        Grid {
            width,
            cells,
            origin,
            xlo: strip.xlo(),
            xhi: strip.xhi(),
        }
    }

    /// Cell reached from `idx` (in column `x`) by `step`, if inside the strip.
    #[inline]
    fn neighbour(&self, idx: usize, x: i64, step: Step) -> Option<(usize, i64)> {
        match step {
            Step::U => Some((idx + self.width, x)),
            Step::D => Some((idx - self.width, x)),
            Step::L => (x > self.xlo).then(|| (idx - 1, x - 1)),
            Step::R => (x < self.xhi).then(|| (idx + 1, x + 1)),
        }
    }
}

struct Counter<'a> {
    grid: Grid,
    counts: Vec<u128>,
    n_max: usize,
    cap: Option<u128>,
    abort: &'a AtomicBool,
}

impl Counter<'_> {
    fn dfs(&mut self, idx: usize, x: i64, depth: usize) {
        self.counts[depth] += 1;
        if depth == self.n_max {
            return;
        }
        if depth + 1 == self.n_max {
            let free = Step::ALL
                .iter()
                .filter_map(|&s| self.grid.neighbour(idx, x, s))
                .filter(|&(j, _)| !self.grid.cells[j])
                .count();
            self.counts[self.n_max] += free as u128;
            if self.cap.is_some_and(|c| self.counts[self.n_max] > c) {
                self.abort.store(true, Ordering::Relaxed);
            }
            return;
        }
        for s in Step::ALL {
            if self.abort.load(Ordering::Relaxed) {
                return;
            }
            if let Some((j, nx)) = self.grid.neighbour(idx, x, s) {
                if !self.grid.cells[j] {
                    self.grid.cells[j] = true;
                    self.dfs(j, nx, depth + 1);
                    self.grid.cells[j] = false;
                }
            }
        }
    }
}

/// A walk prefix handed to a worker: its cells and final column.
struct Task {
    cells: Vec<usize>,
    x: i64,
}

fn collect_prefixes(grid: &mut Grid, k: usize, counts: &mut [u128]) -> Vec<Task> {
    fn go(grid: &mut Grid, path: &mut Vec<usize>, x: i64, k: usize, counts: &mut [u128], out: &mut Vec<Task>) {
        let depth = path.len() - 1;
        if depth == k {
            out.push(Task {
                cells: path[1..].to_vec(),
                x,
            });
            return;
        }
        counts[depth] += 1;
        let idx = *path.last().expect("nonempty path");
        for s in Step::ALL {
            if let Some((j, nx)) = grid.neighbour(idx, x, s) {
                if !grid.cells[j] {
                    grid.cells[j] = true;
                    path.push(j);
                    go(grid, path, nx, k, counts, out);
                    path.pop();
                    grid.cells[j] = false;
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut path = vec![grid.origin];
    go(grid, &mut path, 0, k, counts, &mut out);
    out
}

/// Number of `n`-step walks for `n = 0 ..= n_max`, with explicit settings.
///
/// Tasks are prefixes of length `split_depth`, pulled from a shared queue;
/// per-worker counts are summed at the end, so the result does not depend
/// on the schedule.
pub fn count_saws_with(strip: &StripSpec, n_max: usize, cfg: &EnumConfig) -> Result<Vec<BigInt>> {
    let k = cfg.split_depth.min(n_max);
    let mut grid = Grid::new(strip, n_max);
    let mut totals = vec![0u128; n_max + 1];
    let tasks = collect_prefixes(&mut grid, k, &mut totals);

    let abort = AtomicBool::new(false);
    let next = AtomicUsize::new(0);
    let merged = Mutex::new(totals);
    let workers = cfg.workers.clamp(1, tasks.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut counter = Counter {
                    grid: Grid::new(strip, n_max),
                    counts: vec![0; n_max + 1],
                    n_max,
                    cap: cfg.cap,
                    abort: &abort,
                };
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(task) = tasks.get(i) else { break };
                    if abort.load(Ordering::Relaxed) {
                        break;
                    }
                    for &c in &task.cells {
                        counter.grid.cells[c] = true;
                    }
                    let end = *task.cells.last().unwrap_or(&counter.grid.origin);
                    counter.dfs(end, task.x, k);
                    for &c in &task.cells {
                        counter.grid.cells[c] = false;
                    }
                }
                let mut m = merged.lock().expect("count merge");
                for (t, c) in m.iter_mut().zip(&counter.counts) {
                    *t += c;
                }
            });
        }
    });

    let totals = merged.into_inner().expect("count merge");
    if let Some(cap) = cfg.cap {
        if abort.load(Ordering::Relaxed) || totals[n_max] > cap {
            return Err(Error::TooManyWalks { cap });
        }
    }
    // u128 cannot overflow here: every unit was one visited walk.
    Ok(totals.into_iter().map(BigInt::from).collect())
}

/// `[a_0, ..., a_{n_max}]` for walks from the origin inside `strip`.
pub fn count_saws(strip: &StripSpec, n_max: usize) -> Vec<BigInt> {
    count_saws_with(strip, n_max, &EnumConfig::default()).expect("no cap set")
}

/// Every `n`-step walk in `strip`, refusing if there are more than
/// [`DEFAULT_WALK_CAP`].
pub fn list_saws(strip: &StripSpec, n: usize) -> Result<BTreeSet<StepWord>> {
    list_saws_capped(strip, n, DEFAULT_WALK_CAP)
}

pub fn list_saws_capped(strip: &StripSpec, n: usize, cap: u128) -> Result<BTreeSet<StepWord>> {
    fn go(
        grid: &mut Grid,
        idx: usize,
        x: i64,
        word: &mut Vec<Step>,
        n: usize,
        cap: u128,
        out: &mut BTreeSet<StepWord>,
    ) -> Result<()> {
        if word.len() == n {
            if out.len() as u128 >= cap {
                return Err(Error::TooManyWalks { cap });
            }
            out.insert(StepWord::new(word.clone()));
            return Ok(());
        }
        for s in Step::ALL {
            if let Some((j, nx)) = grid.neighbour(idx, x, s) {
                if !grid.cells[j] {
                    grid.cells[j] = true;
                    word.push(s);
                    let r = go(grid, j, nx, word, n, cap, out);
                    word.pop();
                    grid.cells[j] = false;
                    r?;
                }
            }
        }
        Ok(())
    }
    let mut grid = Grid::new(strip, n);
    let mut out = BTreeSet::new();
    let origin = grid.origin;
    go(&mut grid, origin, 0, &mut Vec::with_capacity(n), n, cap, &mut out)?;
    Ok(out)
}
