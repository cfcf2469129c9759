//! Colorings of regular palms `S_n(k)` built from lexicographic tuple lists.

use crate::bounds::{ceil_sqrt, f_threshold_k};
use crate::error::{Error, Result};
use crate::locating::{describe_failure, verify, Coloring};
use crate::tree::{PalmSpec, Tree};

/// Colors a regular palm by writing the `i`-th tuple along arm `i`, hub on `hub`.
fn color_by_tuples(k: usize, hub: usize, tuples: &[Vec<usize>]) -> Result<(Tree, Coloring)> {
    let spec = PalmSpec::regular(tuples.len(), k)?;
    let mut colors = Vec::with_capacity(spec.vertex_count());
    colors.push(hub);
    for t in tuples {
        debug_assert_eq!(t.len(), k);
        colors.extend_from_slice(t);
    }
    Ok((spec.build(), Coloring::new(colors)?))
}

/// Locating `(ceil(sqrt(n)) + 1)`-coloring of `S_n(2)`.
///
/// With `p = ceil(sqrt(n))`, arm `i` gets the `i`-th pair `(x, y)` in
/// lexicographic order with `x` in `1..=p` and `y` in `1..=p + 1`, `y != x`.
pub fn sn2_coloring(n: usize) -> Result<(Tree, Coloring)> {
    if n < 2 {
        return Err(Error::NotApplicable(format!(
            "S_n(2) needs n >= 2, got {n}"
        )));
    }
    let p = ceil_sqrt(n);
    let pairs: Vec<Vec<usize>> = (1..=p)
        .flat_map(|x| {
            (1..=p + 1)
                .filter(move |&y| y != x)
                .map(move |y| vec![x, y])
        })
        .take(n)
        .collect();
    color_by_tuples(2, p + 1, &pairs)
}

/// All color triples available to a locating `k`-coloring of `S_n(3)` with
/// the hub on color `k`, in the order arms receive them: the families
/// `S1, S2, S3, S4`, each lexicographic. There are exactly `f(k)` of them.
pub fn sn3_triples(k: usize) -> Vec<[usize; 3]> {
    let half = k.div_ceil(2);
    let a: Vec<usize> = (1..=half).collect();
    let b: Vec<usize> = (half + 1..k).collect();
    let mut a_hub = a.clone();
    a_hub.push(k);

    let mut out = Vec::new();
    // S1: (a, b, a)
    for &x in &a {
        for &y in &b {
            out.push([x, y, x]);
        }
    }
    // S2: (a, b, c), b != c both in B
    for &x in &a {
        for &y in &b {
            for &z in &b {
                if y != z {
                    out.push([x, y, z]);
                }
            }
        }
    }
    // S3: (a, b, a), b in A + {k}, b != a
    for &x in &a {
        for &y in &a_hub {
            if y != x {
                out.push([x, y, x]);
            }
        }
    }
    // S4: (a, b, c), b in A + {k}, b != a, c in B
    for &x in &a {
        for &y in &a_hub {
            if y == x {
                continue;
            }
            for &z in &b {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// Locating coloring of `S_n(3)` with `p` colors, `p` the least value with
/// `n <= f(p)`.
pub fn sn3_coloring(n: usize) -> Result<(Tree, Coloring)> {
    if n < 2 {
        return Err(Error::NotApplicable(format!(
            "S_n(3) needs n >= 2, got {n}"
        )));
    }
    let k = f_threshold_k(n)?;
    let triples: Vec<Vec<usize>> = sn3_triples(k).into_iter().take(n).map(Vec::from).collect();
    debug_assert_eq!(triples.len(), n);
    color_by_tuples(3, k, &triples)
}

/// `|{a in 1..=p : a = i (mod k)}|` for `i` in `1..=k`.
fn residue_class_size(p: usize, k: usize, i: usize) -> usize {
    if i > p {
        0
    } else {
        (p - i) / k + 1
    }
}

/// Number of arms the product construction covers with `p` non-hub colors.
pub fn product_capacity(p: usize, k: usize) -> u128 {
    (1..=k)
        .map(|i| residue_class_size(p, k, i) as u128)
        .product()
}

/// The product coloring of `S_n(k)`: position `j` of every arm draws from the
/// residue class `{a <= p : a = j (mod k)}`, arms take the tuples of the
/// product of those classes in lexicographic order, and the hub gets `p + 1`.
/// `p` is the least value whose product covers `n` arms.
///
/// Only the full product is known to be locating, so the result is verified
/// here and a failure is reported as [`Error::NotLocating`].
pub fn product_coloring(n: usize, k: usize) -> Result<(Tree, Coloring)> {
    if n < 2 || k < 1 {
        return Err(Error::NotApplicable(format!(
            "product coloring needs n >= 2 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    let mut p = 1;
    while product_capacity(p, k) < n as u128 {
        p += 1;
    }
    let classes: Vec<Vec<usize>> = (1..=k)
        .map(|i| (1..=p).filter(|a| a % k == i % k).collect())
        .collect();

    let mut tuples = Vec::with_capacity(n);
    let mut digits = vec![0usize; k];
    'outer: loop {
        tuples.push(
            digits
                .iter()
                .enumerate()
                .map(|(j, &d)| classes[j][d])
                .collect(),
        );
        if tuples.len() == n {
            break;
        }
        for j in (0..k).rev() {
            digits[j] += 1;
            if digits[j] < classes[j].len() {
                continue 'outer;
            }
            digits[j] = 0;
        }
        unreachable!("capacity covers n");
    }

    let (tree, coloring) = color_by_tuples(k, p + 1, &tuples)?;
    let report = verify(&tree, &coloring)?;
    if !report.is_locating {
        return Err(Error::NotLocating(format!(
            "product coloring of S_{n}({k}) with p = {p}: {}",
            describe_failure(&report)
        )));
    }
    Ok((tree, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::f_eval;

    #[test]
    fn sn2_four_arms() {
        let (t, c) = sn2_coloring(4).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(c.colors(), &[3, 1, 2, 1, 3, 2, 1, 2, 3]);
        assert!(verify(&t, &c).unwrap().is_locating);
    }

    #[test]
    fn sn2_small() {
        let (t, c) = sn2_coloring(2).unwrap();
        assert!(t.is_path());
        assert_eq!(c.k(), 3);
        assert!(verify(&t, &c).unwrap().is_locating);
        let (t, c) = sn2_coloring(9).unwrap();
        assert_eq!(c.k(), 4);
        assert!(verify(&t, &c).unwrap().is_locating);
        assert!(sn2_coloring(1).is_err());
    }

    #[test]
    fn sn3_families_have_f_elements() {
        for k in 3..=12 {
            let triples = sn3_triples(k);
            assert_eq!(triples.len() as u64, f_eval(k).unwrap(), "k = {k}");
            let mut sorted = triples.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), triples.len(), "duplicates for k = {k}");
        }
    }

    #[test]
    fn sn3_three_colors() {
        assert_eq!(
            sn3_triples(3),
            vec![[1, 2, 1], [1, 3, 1], [2, 1, 2], [2, 3, 2]]
        );
        let (t, c) = sn3_coloring(4).unwrap();
        assert_eq!(c.k(), 3);
        assert!(verify(&t, &c).unwrap().is_locating);
        let (_, c) = sn3_coloring(2).unwrap();
        assert_eq!(&c.colors()[1..], &[1, 2, 1, 1, 3, 1]);
    }

    #[test]
    fn sn3_ten_arms_uses_all_triples() {
        let (t, c) = sn3_coloring(10).unwrap();
        assert_eq!(c.k(), 4);
        assert!(verify(&t, &c).unwrap().is_locating);
        assert!(sn3_coloring(1).is_err());
    }

    #[test]
    fn product_degenerates_to_star() {
        let (t, c) = product_coloring(4, 1).unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(c.colors(), &[5, 1, 2, 3, 4]);
    }

    #[test]
    fn product_two_levels() {
        let (t, c) = product_coloring(4, 2).unwrap();
        assert_eq!(c.k(), 5);
        assert_eq!(&c.colors()[1..], &[1, 2, 1, 4, 3, 2, 3, 4]);
        assert!(verify(&t, &c).unwrap().is_locating);
        let (_, c) = product_coloring(9, 2).unwrap();
        assert_eq!(c.k(), 7);
        assert_eq!(product_capacity(6, 2), 9);
        assert_eq!(product_capacity(5, 2), 6);
    }
}
