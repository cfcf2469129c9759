//! Exhaustive search for the locating chromatic number of small trees.
//!
//! For each candidate `k`, proper colorings are enumerated in breadth-first
//! vertex order from vertex 0, and each vertex may only take a color at most
//! one above the largest color used so far. That canonical first-use order
//! visits every coloring exactly once up to renaming the colors. Properness
//! is the only test applied to partial colorings; complete colorings that use
//! all `k` colors go to the locating check.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bounds::delta_lower_bound;
use crate::error::{Error, Result};
use crate::locating::Coloring;
use crate::tree::{DistanceTable, PalmSpec, Tree};

pub const DEFAULT_VERTEX_LIMIT: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOptions {
    /// Give up after this many colors.
    pub max_colors: Option<usize>,
    pub vertex_limit: usize,
    /// Worker threads for the search; 1 runs on the calling thread.
    pub threads: usize,
    /// Start the search at the maximum-degree lower bound instead of 3.
    /// Turn this off when the solver is used to check that bound.
    pub use_degree_bound: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            max_colors: None,
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            threads: 1,
            use_degree_bound: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub chi_l: usize,
    /// The lexicographically least canonical locating coloring with `chi_l`
    /// colors, compared in search order.
    pub witness: Coloring,
    /// Partial assignments visited, summed over every `k` tried.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// First `k` the search tries.
pub fn search_lower_bound(tree: &Tree, use_degree_bound: bool) -> usize {
    match tree.len() {
        1 => 1,
        2 => 2,
        _ if use_degree_bound => delta_lower_bound(tree.max_degree()).max(3),
        _ => 3,
    }
}

pub fn exact_chi_l(tree: &Tree, options: &ExactOptions) -> Result<ExactResult> {
    let n = tree.len();
    if n > options.vertex_limit {
        return Err(Error::VertexLimit {
            vertices: n,
            limit: options.vertex_limit,
        });
    }
    let start = Instant::now();
    // every vertex on its own color is always locating
    let ceiling = options.max_colors.unwrap_or(n).min(n);
    let lower = search_lower_bound(tree, options.use_degree_bound);
    let search = Search::new(tree);
    let nodes = AtomicU64::new(0);

    for k in lower..=ceiling {
        let found = if options.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(options.threads)
                .build()
                .map_err(|e| Error::NotApplicable(format!("thread pool: {e}")))?;
            pool.install(|| search.run_parallel(k, options.threads, &nodes))
        } else {
            search.run_from(k, &[], &nodes)
        };
        if let Some(colors) = found {
            return Ok(ExactResult {
                chi_l: k,
                witness: Coloring::new(colors)?,
                nodes_explored: nodes.into_inner(),
                elapsed: start.elapsed(),
            });
        }
    }
    Err(Error::ColorsExhausted {
        max_colors: ceiling,
    })
}

struct Search {
    n: usize,
    order: Vec<usize>,
    /// `conflicts[i]`: earlier positions whose color `order[i]` must avoid,
    /// namely its BFS parent and any sibling leaves. Two leaves on one parent
    /// with the same color always share a color code.
    conflicts: Vec<Vec<usize>>,
    dist: DistanceTable,
}

struct Frame<'a> {
    k: usize,
    /// Colors indexed by position in `order`.
    colors: Vec<u8>,
    nodes: u64,
    checker: Checker<'a>,
}

impl Search {
    fn new(tree: &Tree) -> Self {
        let order = tree.bfs_order(0);
        let mut pos = vec![0; tree.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let is_leaf = |v: usize| tree.len() > 2 && tree.degree(v) == 1;
        let conflicts = order
            .iter()
            .map(|&v| {
                let mut earlier: Vec<usize> = tree
                    .neighbors(v)
                    .iter()
                    .map(|&w| pos[w])
                    .filter(|&p| p < pos[v])
                    .collect();
                if is_leaf(v) {
                    let parent = tree.neighbors(v)[0];
                    earlier.extend(
                        tree.neighbors(parent)
                            .iter()
                            .filter(|&&w| w != v && is_leaf(w) && pos[w] < pos[v])
                            .map(|&w| pos[w]),
                    );
                }
                earlier
            })
            .collect();
        Search {
            n: tree.len(),
            order,
            conflicts,
            dist: tree.all_pairs_distance(),
        }
    }

    /// Searches the subtree below a fixed canonical prefix.
    fn run_from(&self, k: usize, prefix: &[u8], nodes: &AtomicU64) -> Option<Vec<usize>> {
        let mut frame = Frame {
            k,
            colors: vec![0; self.n],
            nodes: 0,
            checker: Checker::new(self, k),
        };
        frame.colors[..prefix.len()].copy_from_slice(prefix);
        let max_used = prefix.iter().copied().max().unwrap_or(0) as usize;
        let found = self.descend(&mut frame, prefix.len(), max_used);
        nodes.fetch_add(frame.nodes, Ordering::Relaxed);
        found.then(|| {
            let mut by_vertex = vec![0; self.n];
            for (i, &v) in self.order.iter().enumerate() {
                by_vertex[v] = frame.colors[i] as usize;
            }
            by_vertex
        })
    }

    fn descend(&self, frame: &mut Frame<'_>, pos: usize, max_used: usize) -> bool {
        frame.nodes += 1;
        if pos == self.n {
            return max_used == frame.k && frame.checker.is_locating(&frame.colors);
        }
        // the remaining vertices must still be able to introduce every unused color
        if frame.k - max_used > self.n - pos {
            return false;
        }
        let top = (max_used + 1).min(frame.k);
        for c in 1..=top as u8 {
            if self.conflicts[pos].iter().any(|&p| frame.colors[p] == c) {
                continue;
            }
            frame.colors[pos] = c;
            if self.descend(frame, pos + 1, max_used.max(c as usize)) {
                return true;
            }
        }
        frame.colors[pos] = 0;
        false
    }

    /// All canonical proper prefixes of length `depth`, in search order.
    fn prefixes(&self, k: usize, depth: usize) -> Vec<Vec<u8>> {
        let mut level: Vec<Vec<u8>> = vec![Vec::new()];
        for pos in 0..depth.min(self.n) {
            let mut next = Vec::new();
            for p in &level {
                let max_used = p.iter().copied().max().unwrap_or(0) as usize;
                for c in 1..=(max_used + 1).min(k) as u8 {
                    if self.conflicts[pos].iter().all(|&q| p[q] != c) {
                        let mut q = p.clone();
                        q.push(c);
                        next.push(q);
                    }
                }
            }
            level = next;
        }
        level
    }

    fn run_parallel(&self, k: usize, threads: usize, nodes: &AtomicU64) -> Option<Vec<usize>> {
        let mut depth = 1;
        let mut prefixes = self.prefixes(k, depth);
        while prefixes.len() < 8 * threads && depth < self.n {
            depth += 1;
            prefixes = self.prefixes(k, depth);
        }
        // find_map_first keeps the earliest prefix in search order, so the
        // witness matches the sequential run.
        prefixes
            .par_iter()
            .find_map_first(|p| self.run_from(k, p, nodes))
    }
}

/// Locating check on complete colorings against a precomputed distance table.
struct Checker<'a> {
    search: &'a Search,
    k: usize,
    codes: Vec<u32>,
}

impl<'a> Checker<'a> {
    fn new(search: &'a Search, k: usize) -> Self {
        Checker {
            search,
            k,
            codes: vec![0; search.n * k],
        }
    }

    /// `colors` is indexed by search position.
    fn is_locating(&mut self, colors: &[u8]) -> bool {
        let (n, k) = (self.search.n, self.k);
        let order = &self.search.order;
        self.codes.fill(u32::MAX);
        for (i, &u) in order.iter().enumerate() {
            let c = colors[i] as usize - 1;
            let row = self.search.dist.row(u);
            for (j, &v) in order.iter().enumerate() {
                let slot = &mut self.codes[j * k + c];
                *slot = (*slot).min(row[v]);
            }
        }
        // vertices of different colors differ at their own color's entry
        for i in 0..n {
            let code_i = &self.codes[i * k..(i + 1) * k];
            for j in i + 1..n {
                if colors[i] == colors[j] && code_i == &self.codes[j * k..(j + 1) * k] {
                    return false;
                }
            }
        }
        true
    }
}

/// Palm families for batch runs of the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PalmFamily {
    /// `S_n(k)`.
    Regular(usize),
    /// `O_n`.
    Olive,
}

impl PalmFamily {
    pub fn spec(self, n: usize) -> Result<PalmSpec> {
        match self {
            PalmFamily::Regular(k) => PalmSpec::regular(n, k),
            PalmFamily::Olive => PalmSpec::olive(n),
        }
    }
}

/// Exact values for every member of `family` with `n` in `range`.
pub fn exact_sweep(
    family: PalmFamily,
    range: std::ops::RangeInclusive<usize>,
    options: &ExactOptions,
) -> Vec<(usize, Result<ExactResult>)> {
    range
        .map(|n| {
            let result = family
                .spec(n)
                .and_then(|spec| exact_chi_l(&spec.build(), options));
            (n, result)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::locating::verify;

    fn chi(tree: &Tree) -> usize {
        exact_chi_l(tree, &ExactOptions::default()).unwrap().chi_l
    }

    #[test]
    fn small_paths() {
        assert_eq!(chi(&Tree::path(1).unwrap()), 1);
        assert_eq!(chi(&Tree::path(2).unwrap()), 2);
        assert_eq!(chi(&Tree::path(3).unwrap()), 3);
        assert_eq!(chi(&Tree::path(4).unwrap()), 3);
        assert_eq!(chi(&Tree::path(9).unwrap()), 3);
    }

    #[test]
    fn claw() {
        let claw = PalmSpec::regular(3, 1).unwrap().build();
        let r = exact_chi_l(&claw, &ExactOptions::default()).unwrap();
        assert_eq!(r.chi_l, 4);
        assert!(verify(&claw, &r.witness).unwrap().is_locating);
    }

    #[test]
    fn regular_three_threshold() {
        assert_eq!(chi(&PalmSpec::regular(4, 3).unwrap().build()), 3);
        assert_eq!(chi(&PalmSpec::regular(5, 3).unwrap().build()), 4);
    }

    #[test]
    fn witness_is_deterministic_and_thread_independent() {
        let t = PalmSpec::new(vec![1, 2, 2, 3]).unwrap().build();
        let a = exact_chi_l(&t, &ExactOptions::default()).unwrap();
        let b = exact_chi_l(&t, &ExactOptions::default()).unwrap();
        let par = exact_chi_l(
            &t,
            &ExactOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.chi_l, par.chi_l);
        assert_eq!(a.witness, par.witness);
    }

    #[test]
    fn degree_bound_does_not_change_the_answer() {
        let t = PalmSpec::regular(5, 1).unwrap().build();
        let plain = exact_chi_l(
            &t,
            &ExactOptions {
                use_degree_bound: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain.chi_l, 6);
        assert_eq!(plain.chi_l, chi(&t));
    }

    #[test]
    fn limits() {
        let big = Tree::path(19).unwrap();
        assert!(matches!(
            exact_chi_l(&big, &ExactOptions::default()),
            Err(Error::VertexLimit {
                vertices: 19,
                limit: 18
            })
        ));
        let claw = PalmSpec::regular(3, 1).unwrap().build();
        let capped = ExactOptions {
            max_colors: Some(3),
            ..Default::default()
        };
        assert!(matches!(
            exact_chi_l(&claw, &capped),
            Err(Error::ColorsExhausted { max_colors: 3 })
        ));
    }

    #[test]
    fn sweep_of_stars() {
        let rows = exact_sweep(PalmFamily::Regular(1), 2..=5, &ExactOptions::default());
        let values: Vec<usize> = rows.into_iter().map(|(_, r)| r.unwrap().chi_l).collect();
        assert_eq!(values, vec![3, 4, 5, 6]);
    }
}
