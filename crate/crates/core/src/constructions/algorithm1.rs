//! Locating coloring of an arbitrary tree assembled from locating colorings
//! of its end-palms.
//!
//! Everything outside the end-palms gets the proper 2-coloring by distance
//! parity from vertex 0. Each end-palm coloring is relabeled so its branch
//! and the branch's first arm neighbor agree with that 2-coloring, and its
//! remaining colors are shifted onto a fresh range. The result uses
//! `2 - 2b + sum(q_i)` colors where `q_i` are the palm colorings' sizes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::locating::{describe_failure, verify, Coloring};
use crate::tree::{decompose, PalmEmbedding, Tree};

/// A coloring of a palm in its canonical numbering, placed in a host tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalmColoring {
    pub embedding: PalmEmbedding,
    pub coloring: Coloring,
}

pub fn algorithm1_color(tree: &Tree, palms: &[PalmColoring]) -> Result<Coloring> {
    if tree.len() < 2 || tree.is_path() {
        return Err(Error::NotApplicable(
            "algorithm 1 needs a tree with at least one branch".into(),
        ));
    }
    let decomposition = decompose(tree)?;
    let by_branch: BTreeMap<usize, &PalmColoring> =
        palms.iter().map(|p| (p.embedding.hub(), p)).collect();
    if by_branch.len() != palms.len() {
        return Err(Error::InvalidColoring(
            "two palm colorings share a branch".into(),
        ));
    }

    let parity = tree.distances_from(0);
    let mut colors: Vec<usize> = parity.iter().map(|d| d % 2 + 1).collect();
    let mut offset = 0;

    for end_palm in &decomposition.end_palms {
        let expected = end_palm.embedding();
        let palm = by_branch.get(&end_palm.branch).ok_or_else(|| {
            Error::InvalidColoring(format!(
                "no coloring supplied for the end-palm at {}",
                end_palm.branch
            ))
        })?;
        if palm.embedding != expected {
            return Err(Error::InvalidColoring(format!(
                "coloring for the end-palm at {} does not match its arms",
                end_palm.branch
            )));
        }
        let local = &palm.coloring;
        let report = verify(&expected.spec.build(), local)?;
        if !report.is_locating {
            return Err(Error::NotLocating(format!(
                "palm coloring at {}: {}",
                end_palm.branch,
                describe_failure(&report)
            )));
        }

        let hub_color = local.color(0);
        let first_color = local.color(1);
        assert_ne!(hub_color, first_color, "locating colorings are proper");
        let x = colors[end_palm.branch];
        let y = 3 - x;

        let q = local.k();
        let mut relabel = vec![0; q + 1];
        relabel[hub_color] = x;
        relabel[first_color] = y;
        let mut next = 3;
        for (c, slot) in relabel.iter_mut().enumerate().skip(1) {
            if c != hub_color && c != first_color {
                *slot = next;
                next += 1;
            }
        }

        for (canonical, &v) in expected.to_tree.iter().enumerate() {
            let c = relabel[local.color(canonical)];
            colors[v] = if c <= 2 { c } else { offset + c };
        }
        offset += q - 2;
    }

    let coloring = Coloring::new(colors)?;
    let report = verify(tree, &coloring)?;
    if !report.is_locating {
        return Err(Error::NotLocating(format!(
            "assembled tree coloring: {}",
            describe_failure(&report)
        )));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{best_palm_coloring, palm_full_coloring};
    use crate::tree::PalmSpec;

    fn palms_with<F: Fn(&PalmSpec) -> Coloring>(tree: &Tree, f: F) -> Vec<PalmColoring> {
        decompose(tree)
            .unwrap()
            .end_palms
            .iter()
            .map(|p| {
                let embedding = p.embedding();
                let coloring = f(&embedding.spec);
                PalmColoring {
                    embedding,
                    coloring,
                }
            })
            .collect()
    }

    #[test]
    fn single_palm_keeps_its_color_count() {
        let spec = PalmSpec::olive(5).unwrap();
        let tree = spec.build();
        let palms = palms_with(&tree, |s| best_palm_coloring(s).unwrap().1);
        let c = algorithm1_color(&tree, &palms).unwrap();
        assert_eq!(c.k(), palms[0].coloring.k());
    }

    #[test]
    fn double_claw() {
        // two claws whose centres 0 and 1 are adjacent
        let tree = Tree::new(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let palms = palms_with(&tree, palm_full_coloring);
        assert!(palms.iter().all(|p| p.coloring.k() == 3));
        let c = algorithm1_color(&tree, &palms).unwrap();
        assert_eq!(c.k(), 2 + 6 - 4);
    }

    #[test]
    fn two_claw_palms_on_a_spine() {
        // branches 0 and 4, each with two leaves, joined by 0-1-2-3-4 and a
        // pendant leaf at 2 making 2 a branch with a single end-path
        let tree = Tree::new(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 5),
                (0, 6),
                (4, 7),
                (4, 8),
                (2, 9),
            ],
        )
        .unwrap();
        let palms = palms_with(&tree, |s| best_palm_coloring(s).unwrap().1);
        let q: usize = palms.iter().map(|p| p.coloring.k()).sum();
        let c = algorithm1_color(&tree, &palms).unwrap();
        assert_eq!(c.k(), 2 + q - 2 * palms.len());
    }

    #[test]
    fn rejects_paths_and_missing_palms() {
        assert!(algorithm1_color(&Tree::path(5).unwrap(), &[]).is_err());
        let tree = PalmSpec::regular(3, 2).unwrap().build();
        assert!(algorithm1_color(&tree, &[]).is_err());
    }

    #[test]
    fn rejects_non_locating_palm_coloring() {
        let spec = PalmSpec::regular(3, 1).unwrap();
        let tree = spec.build();
        let palms = vec![PalmColoring {
            embedding: PalmSpec::recognize(&tree).unwrap(),
            coloring: Coloring::new(vec![1, 2, 2, 3]).unwrap(),
        }];
        assert!(matches!(
            algorithm1_color(&tree, &palms),
            Err(Error::NotLocating(_))
        ));
    }
}
