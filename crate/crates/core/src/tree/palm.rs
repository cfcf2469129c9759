use std::fmt;

use super::Tree;
use crate::error::{Error, Result};

/// Arm lengths `(a_1, ..., a_n)` of the palm `S_n(a_1, ..., a_n)`: a star
/// with `n` edges where edge `i` is subdivided into a path of `a_i` vertices.
///
/// Canonical numbering: the hub is vertex 0 and the `j`-th vertex of arm `i`
/// (both 1-based, `j` counted from the hub) is `a_1 + ... + a_{i-1} + j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PalmSpec {
    arms: Vec<usize>,
}

impl PalmSpec {
    pub fn new(arms: Vec<usize>) -> Result<Self> {
        if arms.len() < 2 {
            return Err(Error::InvalidPalm(format!(
                "a palm needs at least two arms, got {}",
                arms.len()
            )));
        }
        if let Some(i) = arms.iter().position(|&a| a == 0) {
            return Err(Error::InvalidPalm(format!("arm {} has length 0", i + 1)));
        }
        Ok(PalmSpec { arms })
    }

    /// The olive tree `O_n = S_n(1, 2, ..., n)`.
    pub fn olive(n: usize) -> Result<Self> {
        PalmSpec::new((1..=n).collect())
    }

    /// The regular palm `S_n(k)`.
    pub fn regular(n: usize, k: usize) -> Result<Self> {
        PalmSpec::new(vec![k; n])
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    /// Number of arms.
    pub fn n(&self) -> usize {
        self.arms.len()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.arms.iter().sum::<usize>()
    }

    pub fn arm_len(&self, i: usize) -> usize {
        self.arms[i - 1]
    }

    /// Canonical index of the hub-side first vertex of arm `i` minus one.
    pub fn arm_offset(&self, i: usize) -> usize {
        self.arms[..i - 1].iter().sum()
    }

    /// Canonical index of `a_{i,j}`.
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.arm_len(i));
        self.arm_offset(i) + j
    }

    /// `(arm, position)` of a non-hub vertex, both 1-based.
    pub fn locate(&self, v: usize) -> Option<(usize, usize)> {
        if v == 0 {
            return None;
        }
        let mut offset = 0;
        for (idx, &a) in self.arms.iter().enumerate() {
            if v <= offset + a {
                return Some((idx + 1, v - offset));
            }
            offset += a;
        }
        None
    }

    /// Every palm on at most `max_vertices` vertices up to isomorphism, arms
    /// nondecreasing, ordered by vertex count and then arms.
    pub fn all_up_to(max_vertices: usize) -> Vec<PalmSpec> {
        fn partitions(rest: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                if prefix.len() >= 2 {
                    out.push(prefix.clone());
                }
                return;
            }
            for a in min..=rest {
                prefix.push(a);
                partitions(rest - a, a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for vertices in 3..=max_vertices {
            let mut parts = Vec::new();
            partitions(vertices - 1, 1, &mut Vec::new(), &mut parts);
            parts.sort();
            out.extend(parts.into_iter().map(|arms| PalmSpec { arms }));
        }
        out
    }

    pub fn is_star(&self) -> bool {
        self.arms.iter().all(|&a| a == 1)
    }

    /// `Some(k)` when every arm has length `k`.
    pub fn regular_length(&self) -> Option<usize> {
        let first = self.arms[0];
        self.arms.iter().all(|&a| a == first).then_some(first)
    }

    pub fn build(&self) -> Tree {
        let mut edges = Vec::with_capacity(self.vertex_count() - 1);
        let mut offset = 0;
        for &a in &self.arms {
            edges.push((0, offset + 1));
            for j in 1..a {
                edges.push((offset + j, offset + j + 1));
            }
            offset += a;
        }
        Tree::new(self.vertex_count(), edges).expect("palm numbering always yields a tree")
    }

    /// Recognizes a spider and returns its arm lengths together with the map
    /// from canonical palm indices to the tree's own vertex indices.
    ///
    /// The hub is the unique vertex of degree at least three. For a path the
    /// hub is vertex 0 when it is interior, else the lowest-indexed interior
    /// vertex. Arms are listed in ascending order of their hub-side vertex.
    pub fn recognize(tree: &Tree) -> Option<PalmEmbedding> {
        if tree.len() < 3 {
            return None;
        }
        let mut branches = (0..tree.len()).filter(|&v| tree.degree(v) >= 3);
        let hub = match (branches.next(), branches.next()) {
            (Some(h), None) => h,
            (None, _) => (0..tree.len()).find(|&v| tree.degree(v) == 2)?,
            _ => return None,
        };
        let mut arms = Vec::with_capacity(tree.degree(hub));
        let mut to_tree = vec![hub];
        for &first in tree.neighbors(hub) {
            let mut prev = hub;
            let mut cur = first;
            let mut len = 1;
            to_tree.push(cur);
            while tree.degree(cur) == 2 {
                let next = tree.neighbors(cur).iter().copied().find(|&w| w != prev)?;
                prev = cur;
                cur = next;
                len += 1;
                to_tree.push(cur);
            }
            if tree.degree(cur) != 1 {
                return None;
            }
            arms.push(len);
        }
        let spec = PalmSpec::new(arms).ok()?;
        Some(PalmEmbedding { spec, to_tree })
    }
}

impl fmt::Display for PalmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}(", self.n())?;
        for (i, a) in self.arms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// A palm found inside a larger (or differently numbered) tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalmEmbedding {
    pub spec: PalmSpec,
    /// `to_tree[canonical index] = vertex of the host tree`.
    pub to_tree: Vec<usize>,
}

impl PalmEmbedding {
    pub fn hub(&self) -> usize {
        self.to_tree[0]
    }
}

pub fn build_palm(spec: &PalmSpec) -> Tree {
    spec.build()
}

pub fn build_olive(n: usize) -> Result<Tree> {
    Ok(PalmSpec::olive(n)?.build())
}

pub fn build_regular_palm(n: usize, k: usize) -> Result<Tree> {
    Ok(PalmSpec::regular(n, k)?.build())
}
