//! Exhaustive enumeration of equivalence classes of lintels.
//!
//! All `n!` sorted lintels are walked through the permutation bijection, the
//! permutation space being split into lexicographic rank ranges that are
//! processed independently. Each class is counted once, either by hashing
//! canonical forms (`DedupMode::Set`) or by keeping only lintels that are
//! already their own canonical form (`DedupMode::LyndonTest`).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon;
use crate::criteria::{full_report, CriteriaReport, Criterion, Evaluation};
use crate::error::{Error, Result};
use crate::lintel::SortedLintel;
use crate::permutation::{factorial, SortedLintels};

/// Default size cap; 11 chords is about forty million permutations.
pub const DEFAULT_MAX_SIZE: usize = 11;
/// Sizes above this are refused regardless of configuration.
pub const HARD_MAX_SIZE: usize = 12;
/// Environment variable overriding [`DEFAULT_MAX_SIZE`].
pub const MAX_SIZE_ENV: &str = "GAUSS_LINTEL_MAX_SIZE";

const KEY_LEN: usize = 2 * HARD_MAX_SIZE;
type Key = [u8; KEY_LEN];

/// Which classes to keep: optionally prime, and satisfying all of `criteria`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FilterSpec {
    pub require_prime: bool,
    pub criteria: BTreeSet<Criterion>,
}

impl FilterSpec {
    pub fn new(require_prime: bool, criteria: impl IntoIterator<Item = Criterion>) -> Self {
        FilterSpec {
            require_prime,
            criteria: criteria.into_iter().collect(),
        }
    }

    /// Prime diagrams satisfying one criterion.
    pub fn prime_and(c: Criterion) -> Self {
        Self::new(true, [c])
    }

    /// Tests `eval` in a fixed cheapest-first order.
    pub fn accepts(&self, eval: &mut Evaluation<'_>) -> bool {
        if self.require_prime && !eval.prime() {
            return false;
        }
        Criterion::ALL
            .iter()
            .filter(|c| self.criteria.contains(c))
            .all(|&c| eval.get(c))
    }

    /// `prime+B`, `CA`, or `all` for the empty filter.
    pub fn label(&self) -> String {
        let mut parts: Vec<&str> = Vec::new();
        if self.require_prime {
            parts.push("prime");
        }
        parts.extend(self.criteria.iter().map(|c| c.label()));
        if parts.is_empty() {
            "all".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for FilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Accepts `prime,c2,b3,b,gl,stz,r,ca` (commas or `+`, any case); `all` or
/// an empty string means no filter.
impl FromStr for FilterSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut spec = FilterSpec::default();
        for token in s.split([',', '+']).map(str::trim).filter(|t| !t.is_empty()) {
            if token.eq_ignore_ascii_case("prime") {
                spec.require_prime = true;
            } else if token.eq_ignore_ascii_case("all") {
                continue;
            } else {
                spec.criteria.insert(token.parse()?);
            }
        }
        Ok(spec)
    }
}

/// How equivalence classes are counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DedupMode {
    /// Collect canonical forms in per-worker hash sets, merged at the end.
    Set,
    /// Count a sorted lintel iff it is its own canonical form.
    #[default]
    LyndonTest,
}

impl FromStr for DedupMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "set" => Ok(DedupMode::Set),
            "lyndon-test" | "lyndon" => Ok(DedupMode::LyndonTest),
            other => Err(Error::Parse {
                column: 1,
                message: format!("unknown dedup mode `{other}` (expected set or lyndon-test)"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub dedup: DedupMode,
    pub max_size: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            workers: None,
            dedup: DedupMode::default(),
            max_size: DEFAULT_MAX_SIZE,
        }
    }
}

impl EnumerationOptions {
    /// Defaults, with the size cap taken from `GAUSS_LINTEL_MAX_SIZE` if set.
    pub fn from_env() -> Result<Self> {
        let mut opts = Self::default();
        if let Ok(v) = std::env::var(MAX_SIZE_ENV) {
            opts.max_size = v.trim().parse().map_err(|_| Error::Parse {
                column: 1,
                message: format!("{MAX_SIZE_ENV}={v:?} is not a size"),
            })?;
        }
        if opts.max_size > DEFAULT_MAX_SIZE {
            log::warn!(
                "size cap raised to {}; size 12 walks 479001600 permutations",
                opts.max_size
            );
        }
        Ok(opts)
    }

    fn check_size(&self, n: usize) -> Result<()> {
        let max = self.max_size.min(HARD_MAX_SIZE);
        if n == 0 {
            return Err(Error::InvalidLintel("size must be at least 1".into()));
        }
        if n > max {
            return Err(Error::SizeTooLarge { size: n, max });
        }
        Ok(())
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .expect("thread pool")
                .install(job),
            None => job(),
        }
    }
}

/// Tallies for one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub size: usize,
    /// Number of equivalence classes visited.
    pub total_canonical: u64,
    /// Filter label to number of classes passing it.
    pub counts: BTreeMap<String, u64>,
    pub elapsed: Duration,
}

/// The outcome of one sweep: a report plus, per filter, the passing
/// canonical lintels in L-order.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub report: EnumerationReport,
    pub results: Vec<(FilterSpec, Vec<SortedLintel>)>,
}

impl Enumeration {
    pub fn lintels(&self, spec: &FilterSpec) -> Option<&[SortedLintel]> {
        self.results
            .iter()
            .find(|(s, _)| s == spec)
            .map(|(_, l)| l.as_slice())
    }

    pub fn count(&self, spec: &FilterSpec) -> Option<u64> {
        self.lintels(spec).map(|l| l.len() as u64)
    }

    /// `size=<n> filter=<spec> count=<k>`
    pub fn summary_line(&self, spec: &FilterSpec) -> Option<String> {
        self.count(spec)
            .map(|k| summary_line(self.report.size, spec, k))
    }
}

pub fn summary_line(size: usize, spec: &FilterSpec, count: u64) -> String {
    format!("size={size} filter={} count={count}", spec.label())
}

fn rank_ranges(n: usize, workers: usize) -> Vec<(u64, u64)> {
    let total = factorial(n).expect("size within the hard cap");
    let chunks = (workers as u64 * 32).clamp(1, total);
    let step = total.div_ceil(chunks);
    (0..chunks)
        .map(|i| (i * step, ((i + 1) * step).min(total)))
        .filter(|(s, e)| s < e)
        .collect()
}

/// Calls `visit` once per equivalence class with its canonical partner array,
/// folding per-range accumulators with `merge`.
fn sweep_classes<A, F, M>(n: usize, dedup: DedupMode, init: fn() -> A, visit: F, merge: M) -> (u64, A)
where
    A: Send,
    F: Fn(&mut A, &[u8]) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    let m = 2 * n;
    let ranges = rank_ranges(n, rayon::current_num_threads());
    match dedup {
        DedupMode::LyndonTest => ranges
            .into_par_iter()
            .map(|(start, end)| {
                let mut walk = SortedLintels::range(n, start, end);
                let mut partner = [0u8; KEY_LEN];
                let mut acc = init();
                let mut total = 0u64;
                while walk.next_partner(&mut partner[..m]) {
                    if canon::is_lyndon(&partner[..m]) {
                        total += 1;
                        visit(&mut acc, &partner[..m]);
                    }
                }
                (total, acc)
            })
            .reduce(|| (0, init()), |(t1, a1), (t2, a2)| (t1 + t2, merge(a1, a2))),
        DedupMode::Set => {
            let classes = ranges
                .into_par_iter()
                .map(|(start, end)| {
                    let mut walk = SortedLintels::range(n, start, end);
                    let mut partner = [0u8; KEY_LEN];
                    let mut canonical = [0u8; KEY_LEN];
                    let mut seen: HashSet<Key> = HashSet::new();
                    while walk.next_partner(&mut partner[..m]) {
                        canon::canonical_partner(&partner[..m], &mut canonical[..m]);
                        seen.insert(canonical);
                    }
                    seen
                })
                .reduce(HashSet::new, |mut a, b| {
                    if a.len() < b.len() {
                        return b.into_iter().chain(a).collect();
                    }
                    a.extend(b);
                    a
                });
            let total = classes.len() as u64;
            let keys: Vec<Key> = classes.into_iter().collect();
            let acc = keys
                .par_chunks(256)
                .map(|chunk| {
                    let mut acc = init();
                    for key in chunk {
                        visit(&mut acc, &key[..m]);
                    }
                    acc
                })
                .reduce(init, &merge);
            (total, acc)
        }
    }
}

/// Counts and lists the classes of size `n` passing `spec`.
pub fn enumerate(n: usize, spec: &FilterSpec, opts: &EnumerationOptions) -> Result<Enumeration> {
    enumerate_many(n, std::slice::from_ref(spec), opts)
}

/// One sweep evaluating several filters; criteria are computed at most once
/// per class and shared between filters.
pub fn enumerate_many(
    n: usize,
    specs: &[FilterSpec],
    opts: &EnumerationOptions,
) -> Result<Enumeration> {
    opts.check_size(n)?;
    let started = Instant::now();
    let k = specs.len();
    let (total, mut buckets) = opts.run(|| {
        sweep_classes(
            n,
            opts.dedup,
            Vec::new,
            |acc: &mut Vec<Vec<SortedLintel>>, partner| {
                if acc.is_empty() {
                    acc.resize(k, Vec::new());
                }
                let lintel = SortedLintel::from_partner(partner);
                let mut eval = Evaluation::new(&lintel);
                let hits: Vec<bool> = specs.iter().map(|s| s.accepts(&mut eval)).collect();
                for (bucket, hit) in acc.iter_mut().zip(hits) {
                    if hit {
                        bucket.push(lintel.clone());
                    }
                }
            },
            |mut a, b| {
                if a.is_empty() {
                    return b;
                }
                for (x, y) in a.iter_mut().zip(b) {
                    x.extend(y);
                }
                a
            },
        )
    });
    buckets.resize(k, Vec::new());
    let results: Vec<(FilterSpec, Vec<SortedLintel>)> = specs
        .iter()
        .cloned()
        .zip(buckets)
        .map(|(spec, mut lintels)| {
            lintels.sort_unstable();
            (spec, lintels)
        })
        .collect();
    let counts = results
        .iter()
        .map(|(s, l)| (s.label(), l.len() as u64))
        .collect();
    Ok(Enumeration {
        report: EnumerationReport {
            size: n,
            total_canonical: total,
            counts,
            elapsed: started.elapsed(),
        },
        results,
    })
}

/// A canonical prime lintel on which two criteria disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyRecord {
    pub lintel: SortedLintel,
    pub report: CriteriaReport,
}

/// Canonical prime lintels of size `n` where `a` and `b` disagree, in L-order.
pub fn find_discrepancies(
    n: usize,
    a: Criterion,
    b: Criterion,
    opts: &EnumerationOptions,
) -> Result<Vec<DiscrepancyRecord>> {
    opts.check_size(n)?;
    let (_, mut lintels) = opts.run(|| {
        sweep_classes(
            n,
            opts.dedup,
            Vec::new,
            |acc: &mut Vec<SortedLintel>, partner| {
                let lintel = SortedLintel::from_partner(partner);
                let mut eval = Evaluation::new(&lintel);
                if eval.prime() && eval.get(a) != eval.get(b) {
                    acc.push(lintel);
                }
            },
            |mut x, y| {
                x.extend(y);
                x
            },
        )
    });
    lintels.sort_unstable();
    Ok(lintels
        .into_iter()
        .map(|lintel| DiscrepancyRecord {
            report: full_report(&lintel),
            lintel,
        })
        .collect())
}
