use std::collections::BTreeMap;

use super::{PalmEmbedding, PalmSpec, Tree};
use crate::error::{Error, Result};

/// A path from a leaf to its nearest branch (vertex of degree at least 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndPath {
    pub leaf: usize,
    pub branch: usize,
    /// Vertices strictly after the branch, ordered outward and ending at the leaf.
    pub vertices: Vec<usize>,
}

impl EndPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A branch with at least two end-paths, together with those end-paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndPalm {
    pub branch: usize,
    /// Sorted by the index of the vertex adjacent to the branch.
    pub paths: Vec<EndPath>,
}

impl EndPalm {
    pub fn leaf_count(&self) -> usize {
        self.paths.len()
    }

    /// The end-palm as a palm with its branch as the hub, arms in the order
    /// of `paths`.
    pub fn embedding(&self) -> PalmEmbedding {
        let spec = PalmSpec::new(self.paths.iter().map(EndPath::len).collect())
            .expect("an end-palm has at least two non-empty end-paths");
        let mut to_tree = vec![self.branch];
        for p in &self.paths {
            to_tree.extend_from_slice(&p.vertices);
        }
        PalmEmbedding { spec, to_tree }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub leaves: Vec<usize>,
    pub branches: Vec<usize>,
    pub end_paths: Vec<EndPath>,
    /// Sorted by branch index.
    pub end_palms: Vec<EndPalm>,
    /// Branches with at least one end-path.
    pub beta: usize,
    /// Branches with at least two end-paths.
    pub b: usize,
    /// Number of leaves.
    pub l: usize,
}

/// Leaves, branches, end-paths and end-palms of a tree with at least two
/// vertices. A path has no branch and therefore no end-paths.
pub fn decompose(tree: &Tree) -> Result<Decomposition> {
    if tree.len() < 2 {
        return Err(Error::InvalidTree(
            "decomposition needs at least two vertices".into(),
        ));
    }
    let leaves = tree.leaves();
    let branches: Vec<usize> = (0..tree.len()).filter(|&v| tree.degree(v) >= 3).collect();

    let mut end_paths = Vec::new();
    if !branches.is_empty() {
        for &leaf in &leaves {
            let mut walk = vec![leaf];
            let mut prev = leaf;
            let mut cur = tree.neighbors(leaf)[0];
            while tree.degree(cur) == 2 {
                walk.push(cur);
                let next = tree.neighbors(cur).iter().copied().find(|&w| w != prev);
                prev = cur;
                cur = next.expect("degree-2 vertex has another neighbor");
            }
            walk.reverse();
            end_paths.push(EndPath {
                leaf,
                branch: cur,
                vertices: walk,
            });
        }
    }

    let mut by_branch: BTreeMap<usize, Vec<EndPath>> = BTreeMap::new();
    for p in &end_paths {
        by_branch.entry(p.branch).or_default().push(p.clone());
    }
    let beta = by_branch.len();
    let end_palms: Vec<EndPalm> = by_branch
        .into_iter()
        .filter(|(_, paths)| paths.len() >= 2)
        .map(|(branch, mut paths)| {
            paths.sort_by_key(|p| p.vertices[0]);
            EndPalm { branch, paths }
        })
        .collect();

    Ok(Decomposition {
        l: leaves.len(),
        b: end_palms.len(),
        beta,
        leaves,
        branches,
        end_paths,
        end_palms,
    })
}
