//! Colorings, color codes and the locating-coloring verifier.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Maximum number of colliding pairs listed in a [`VerifyReport`].
pub const DUPLICATE_PAIR_CAP: usize = 1000;

/// A total map from vertices to colors `1..=k` using every color at least once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Builds a coloring from arbitrary positive labels, compacting them
    /// order-preservingly onto `1..=k`.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::InvalidColoring("no vertices colored".into()));
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color 0; colors are 1-based"
            )));
        }
        let mut used: Vec<usize> = colors.clone();
        used.sort_unstable();
        used.dedup();
        let k = used.len();
        if used[k - 1] == k {
            return Ok(Coloring { colors, k });
        }
        let rank: HashMap<usize, usize> =
            used.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect();
        let colors = colors.iter().map(|c| rank[c]).collect();
        Ok(Coloring { colors, k })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of colors.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Vertices of color `c`, ascending.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.colors[v] == c).collect()
    }

    /// Relabels by `perm`, where `perm[c - 1]` is the new label of color `c`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.k {
            return Err(Error::InvalidColoring(format!(
                "permutation has {} entries for {} colors",
                perm.len(),
                self.k
            )));
        }
        Coloring::new(self.colors.iter().map(|&c| perm[c - 1]).collect())
    }
}

/// Per-vertex color codes: entry `c - 1` of vertex `v` is the distance from
/// `v` to the nearest vertex of color `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorCodeTable {
    k: usize,
    codes: Vec<u32>,
}

impl ColorCodeTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.codes.len() / self.k
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn code(&self, v: usize) -> &[u32] {
        &self.codes[v * self.k..(v + 1) * self.k]
    }

    pub fn distinct_codes(&self) -> usize {
        let mut all: Vec<&[u32]> = (0..self.len()).map(|v| self.code(v)).collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }
}

fn check_sizes(tree: &Tree, coloring: &Coloring) -> Result<()> {
    if tree.len() != coloring.len() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices but the tree has {}",
            coloring.len(),
            tree.len()
        )));
    }
    Ok(())
}

/// Color codes of every vertex, one multi-source BFS per color class.
pub fn color_codes(tree: &Tree, coloring: &Coloring) -> Result<ColorCodeTable> {
    check_sizes(tree, coloring)?;
    let (n, k) = (tree.len(), coloring.k());
    let mut codes = vec![u32::MAX; n * k];
    let mut queue = VecDeque::with_capacity(n);
    for c in 1..=k {
        let slot = c - 1;
        for v in coloring.class(c) {
            codes[v * k + slot] = 0;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            let next = codes[u * k + slot] + 1;
            for &w in tree.neighbors(u) {
                if codes[w * k + slot] == u32::MAX {
                    codes[w * k + slot] = next;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(ColorCodeTable { k, codes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicatePair {
    pub u: usize,
    pub v: usize,
    pub code: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub colors: usize,
    pub is_proper: bool,
    pub is_locating: bool,
    pub improper_edges: Vec<(usize, usize)>,
    /// At most [`DUPLICATE_PAIR_CAP`] entries; see `duplicate_count`.
    pub duplicate_pairs: Vec<DuplicatePair>,
    pub duplicate_count: usize,
}

/// Checks properness and pairwise distinctness of all color codes.
pub fn verify(tree: &Tree, coloring: &Coloring) -> Result<VerifyReport> {
    let table = color_codes(tree, coloring)?;
    let improper_edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| coloring.color(u) == coloring.color(v))
        .collect();

    let mut groups: HashMap<&[u32], Vec<usize>> = HashMap::new();
    for v in 0..tree.len() {
        groups.entry(table.code(v)).or_default().push(v);
    }
    let mut colliding: Vec<&Vec<usize>> = groups.values().filter(|g| g.len() > 1).collect();
    colliding.sort_unstable();

    let mut duplicate_pairs = Vec::new();
    let mut duplicate_count = 0;
    for group in colliding {
        for (a, &u) in group.iter().enumerate() {
            for &v in &group[a + 1..] {
                duplicate_count += 1;
                if duplicate_pairs.len() < DUPLICATE_PAIR_CAP {
                    duplicate_pairs.push(DuplicatePair {
                        u,
                        v,
                        code: table.code(u).to_vec(),
                    });
                }
            }
        }
    }

    let is_proper = improper_edges.is_empty();
    Ok(VerifyReport {
        colors: coloring.k(),
        is_proper,
        is_locating: is_proper && duplicate_count == 0,
        improper_edges,
        duplicate_pairs,
        duplicate_count,
    })
}

/// Number of colors of a verified locating coloring: a certificate that
/// `chi_L(tree) <= k`.
pub fn chi_upper_witness(tree: &Tree, coloring: &Coloring) -> Result<usize> {
    let report = verify(tree, coloring)?;
    if !report.is_locating {
        return Err(Error::NotLocating(describe_failure(&report)));
    }
    Ok(coloring.k())
}

pub(crate) fn describe_failure(report: &VerifyReport) -> String {
    if !report.is_proper {
        let (u, v) = report.improper_edges[0];
        format!(
            "{} improper edge(s), first {u}-{v}",
            report.improper_edges.len()
        )
    } else {
        let p = &report.duplicate_pairs[0];
        format!(
            "{} vertex pair(s) share a color code, first {} and {}",
            report.duplicate_count, p.u, p.v
        )
    }
}
