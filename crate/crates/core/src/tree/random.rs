use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Tree;

/// Uniform random labeled tree on `n` vertices, reproducible from `seed`.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    random_tree_with_rng(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Uniform random labeled tree on `n >= 1` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree_with_rng<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n <= 2 {
        return Tree::path(n).expect("paths are trees");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Tree::new(n, decode_prufer(n, &code)).expect("Prüfer decoding yields a tree")
}

fn decode_prufer(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}
