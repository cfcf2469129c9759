//! Coloring palms with the olive-optimal number of colors.
//!
//! Arm `i = 4l + r` (`r` in `1..=4`) starts from an alternating sequence over
//! two of the colors `{1, 2, 3}` chosen by `r`. The base-3 digits of `l` then
//! place one vertex of each extra color `t >= 4` at position `2t + l_t - 6`,
//! where `l_t` is the digit of weight `3^(t-4)`; a zero digit places nothing.

use crate::bounds::{ceil_log3_quarter, chi_olive};
use crate::error::{Error, Result};
use crate::locating::Coloring;
use crate::tree::PalmSpec;

/// The two colors an arm alternates between, selected by `r = ((i - 1) mod 4) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltPair {
    pub x: usize,
    pub y: usize,
}

impl AltPair {
    pub fn for_residue(r: usize) -> Self {
        let (x, y) = match r {
            1 => (2, 1),
            2 => (3, 1),
            3 => (2, 3),
            4 => (3, 2),
            _ => panic!("residue must be in 1..=4, got {r}"),
        };
        AltPair { x, y }
    }

    /// Color at 1-based position `j` of the plain alternating sequence.
    pub fn at(self, j: usize) -> usize {
        if j % 2 == 1 {
            self.x
        } else {
            self.y
        }
    }
}

/// Decomposition of an arm index for a `k`-color budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArmSequence {
    pub index: usize,
    pub pair: AltPair,
    /// `digits[t - 4]` is the base-3 digit of weight `3^(t - 4)`.
    pub digits: Vec<usize>,
}

impl ArmSequence {
    pub fn new(index: usize, k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::NotApplicable(format!(
                "color budget must be at least 3, got {k}"
            )));
        }
        let capacity = 4u128 * 3u128.pow((k - 3) as u32);
        if index == 0 || index as u128 > capacity {
            return Err(Error::NotApplicable(format!(
                "arm index {index} outside 1..={capacity} for {k} colors"
            )));
        }
        let l = (index - 1) / 4;
        let r = (index - 1) % 4 + 1;
        let mut digits = Vec::with_capacity(k - 3);
        let mut rest = l;
        for _ in 4..=k {
            digits.push(rest % 3);
            rest /= 3;
        }
        Ok(ArmSequence {
            index,
            pair: AltPair::for_residue(r),
            digits,
        })
    }

    /// `(position, color)` of every overwritten entry, in increasing color order.
    pub fn modified_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(idx, &d)| {
                let t = idx + 4;
                (2 * t + d - 6, t)
            })
    }

    pub fn take(&self, length: usize) -> Vec<usize> {
        let mut seq: Vec<usize> = (1..=length).map(|j| self.pair.at(j)).collect();
        for (pos, t) in self.modified_positions() {
            if pos <= length {
                seq[pos - 1] = t;
            }
        }
        seq
    }
}

/// First `length` entries of the color sequence of arm `i` under a `k`-color
/// budget.
pub fn algorithm2_sequence(i: usize, k: usize, length: usize) -> Result<Vec<usize>> {
    Ok(ArmSequence::new(i, k)?.take(length))
}

/// Colors the palm with the hub on color 1 and arm `i` following
/// [`algorithm2_sequence`], using `3 + ceil(log3(n / 4))` colors. Arms
/// shorter than a modified position are truncated, so the result is a
/// candidate that the caller must verify.
pub fn algorithm2_color(spec: &PalmSpec) -> Result<Coloring> {
    let n = spec.n();
    let k = chi_olive(n)?;
    debug_assert_eq!(k, 3 + ceil_log3_quarter(n));
    let mut colors = Vec::with_capacity(spec.vertex_count());
    colors.push(1);
    for (idx, &len) in spec.arms().iter().enumerate() {
        colors.extend(algorithm2_sequence(idx + 1, k, len)?);
    }
    Coloring::new(colors)
}
