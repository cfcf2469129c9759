use crate::error::{Error, Result};
use crate::locating::Coloring;
use crate::tree::PalmSpec;

/// The `(n + 1)`-coloring valid for every palm: hub `n + 1`, arm `i` colored
/// `i` at odd positions and `n + 1` at even positions.
pub fn palm_full_coloring(spec: &PalmSpec) -> Coloring {
    let top = spec.n() + 1;
    let mut colors = Vec::with_capacity(spec.vertex_count());
    colors.push(top);
    for (idx, &len) in spec.arms().iter().enumerate() {
        colors.extend((1..=len).map(|j| if j % 2 == 1 { idx + 1 } else { top }));
    }
    Coloring::new(colors).expect("colors are positive")
}

/// An `n`-coloring of a palm that is not a star (`n >= 3`).
///
/// The first longest arm plays the special role: it alternates 2, 3 starting
/// from the hub, which is colored 1. The remaining arms are numbered `2..=n`
/// in their original order; arm `i` takes color `i` at odd positions and 1 at
/// even positions.
pub fn palm_nonstar_coloring(spec: &PalmSpec) -> Result<Coloring> {
    let special = spec
        .arms()
        .iter()
        .enumerate()
        .max_by_key(|&(idx, &len)| (len, std::cmp::Reverse(idx)))
        .map(|(idx, _)| idx)
        .expect("palms have arms");
    if spec.arms()[special] < 2 {
        return Err(Error::NotApplicable(format!(
            "{spec} is a star; its locating chromatic number is n + 1"
        )));
    }
    let mut colors = Vec::with_capacity(spec.vertex_count());
    colors.push(1);
    let mut label = 2;
    for (idx, &len) in spec.arms().iter().enumerate() {
        if idx == special {
            colors.extend((1..=len).map(|j| if j % 2 == 1 { 2 } else { 3 }));
        } else {
            colors.extend((1..=len).map(|j| if j % 2 == 1 { label } else { 1 }));
            label += 1;
        }
    }
    Coloring::new(colors)
}
