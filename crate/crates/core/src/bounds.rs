//! Closed-form values and bounds for the locating chromatic number.
//!
//! Every logarithm, root and ceiling here is computed in exact integer
//! arithmetic so threshold values such as `n = 4 * 3^t` land on the right side.

use std::fmt::{self, Write as _};

use crate::constructions::best_palm_coloring;
use crate::error::{Error, Result};
use crate::exact::{exact_chi_l, ExactOptions};
use crate::tree::{decompose, PalmSpec, Tree};

fn require_n(n: usize, what: &str) -> Result<()> {
    if n < 2 {
        return Err(Error::NotApplicable(format!(
            "{what} needs n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Smallest `t >= 0` with `4 * 3^t >= n`.
pub fn ceil_log3_quarter(n: usize) -> usize {
    let mut t = 0;
    let mut cap: u128 = 4;
    while cap < n as u128 {
        cap *= 3;
        t += 1;
    }
    t
}

/// `ceil(sqrt(n))`.
pub fn ceil_sqrt(n: usize) -> usize {
    let s = n.isqrt();
    if s * s < n {
        s + 1
    } else {
        s
    }
}

/// Capacity of a locating `p`-coloring of `S_n(3)`:
/// `f(p) = (p - 1) * floor(p^2 / 4) - floor((p^2 - 2p) / 4)`.
pub fn f_eval(p: usize) -> Result<u64> {
    if p < 3 {
        return Err(Error::NotApplicable(format!("f(p) needs p >= 3, got {p}")));
    }
    let p = p as u64;
    Ok((p - 1) * (p * p / 4) - (p * p - 2 * p) / 4)
}

/// Smallest `p >= 3` with `n <= f(p)`.
pub fn f_threshold_k(n: usize) -> Result<usize> {
    require_n(n, "f_threshold_k")?;
    let mut p = 3;
    while f_eval(p)? < n as u64 {
        p += 1;
    }
    Ok(p)
}

/// Locating chromatic number of the olive `O_n`.
pub fn chi_olive(n: usize) -> Result<usize> {
    require_n(n, "chi_olive")?;
    Ok(3 + ceil_log3_quarter(n))
}

/// Locating chromatic number of the star `S_n(1)`.
pub fn chi_sn1(n: usize) -> Result<usize> {
    require_n(n, "chi_sn1")?;
    Ok(n + 1)
}

/// Locating chromatic number of `S_n(2)`.
pub fn chi_sn2(n: usize) -> Result<usize> {
    require_n(n, "chi_sn2")?;
    Ok(ceil_sqrt(n) + 1)
}

/// Locating chromatic number of `S_n(3)`.
pub fn chi_sn3(n: usize) -> Result<usize> {
    f_threshold_k(n)
}

/// Lower bound on the locating chromatic number of a connected graph with
/// maximum degree `delta`: the least `k >= 3` with `4 * 3^(k-3) >= delta`.
///
/// For `delta = 2` the graph is a path on at least three vertices or a
/// cycle, which already forces three colors; `delta <= 1` gives 2.
pub fn delta_lower_bound(delta: usize) -> usize {
    match delta {
        0 => 1,
        1 => 2,
        _ => 3 + ceil_log3_quarter(delta),
    }
}

/// The superseded maximum-degree bound `(k - 1) * 2^(k - 2)`.
pub fn chartrand_bound(k: usize) -> Result<u64> {
    if k < 3 {
        return Err(Error::NotApplicable(format!(
            "chartrand_bound needs k >= 3, got {k}"
        )));
    }
    Ok((k as u64 - 1) << (k - 2))
}

/// `4 * 3^(k - 3)`, the largest maximum degree a graph with locating
/// chromatic number `k >= 3` can have.
pub fn max_degree_for(k: usize) -> u64 {
    assert!(k >= 3);
    4 * 3u64.pow((k - 3) as u32)
}

/// `(lower, upper)` bounds valid for every palm with `spec.n()` arms.
pub fn palm_bounds(spec: &PalmSpec) -> (usize, usize) {
    let n = spec.n();
    (3 + ceil_log3_quarter(n), n + 1)
}

/// Exact value of `chi_L(S_n(k))` when the arms are long enough, otherwise
/// `None`.
pub fn corollary_regular(n: usize, k: usize) -> Option<usize> {
    if n < 3 {
        return None;
    }
    let chi = 3 + ceil_log3_quarter(n);
    (k >= 2 * (chi - 3) + 4).then_some(chi)
}

/// Conjectured asymptotic value `(k - 1) / 2 * (4n)^(1/k)` for regular palms
/// with `k >= 4`. Experimental; never asserted.
pub fn conjecture_value(n: usize, k: usize) -> f64 {
    (k as f64 - 1.0) / 2.0 * (4.0 * n as f64).powf(1.0 / k as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessSource {
    Constructions,
    Exact,
}

impl fmt::Display for WitnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessSource::Constructions => "constructions",
            WitnessSource::Exact => "exact",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalmWitness {
    pub branch: usize,
    pub spec: PalmSpec,
    pub colors: usize,
    /// `"exact"` or the name of the construction that produced the witness.
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub vertices: usize,
    pub delta: usize,
    pub delta_lb: usize,
    pub l: usize,
    pub beta: usize,
    pub b: usize,
    pub bound_l_beta: usize,
    pub bound_l_b: usize,
    pub palm_witnesses: Vec<PalmWitness>,
    /// `2 - 2b + sum of palm witnesses`; absent for paths.
    pub palm_sum: Option<usize>,
    /// `(lower, upper)` when the tree itself is a palm.
    pub palm_bounds: Option<(usize, usize)>,
    /// `(k, (k - 1) * 2^(k - 2))` at `k = max(3, delta_lb)`.
    pub chartrand: (usize, u64),
    /// Whether `palm_sum <= l - beta + 2 <= l - b + 2` holds; absent for paths.
    pub chain_holds: Option<bool>,
}

pub fn bounds_report(tree: &Tree, source: WitnessSource) -> Result<BoundsReport> {
    let d = decompose(tree)?;
    let delta = tree.max_degree();
    let delta_lb = delta_lower_bound(delta);
    let bound_l_beta = d.l + 2 - d.beta;
    let bound_l_b = d.l + 2 - d.b;

    let mut palm_witnesses = Vec::with_capacity(d.end_palms.len());
    for palm in &d.end_palms {
        let spec = palm.embedding().spec;
        let (colors, source) = match source {
            WitnessSource::Constructions => {
                let (method, c) = best_palm_coloring(&spec)?;
                (c.k(), method.to_string())
            }
            WitnessSource::Exact => match exact_chi_l(&spec.build(), &ExactOptions::default()) {
                Ok(r) => (r.chi_l, "exact".to_string()),
                Err(_) => {
                    let (method, c) = best_palm_coloring(&spec)?;
                    (c.k(), method.to_string())
                }
            },
        };
        palm_witnesses.push(PalmWitness {
            branch: palm.branch,
            spec,
            colors,
            source,
        });
    }

    let palm_sum =
        (d.b > 0).then(|| 2 + palm_witnesses.iter().map(|w| w.colors).sum::<usize>() - 2 * d.b);
    let chain_holds = palm_sum.map(|s| s <= bound_l_beta && bound_l_beta <= bound_l_b);
    let palm_bounds = PalmSpec::recognize(tree).map(|e| palm_bounds(&e.spec));
    let ck = delta_lb.max(3);

    Ok(BoundsReport {
        vertices: tree.len(),
        delta,
        delta_lb,
        l: d.l,
        beta: d.beta,
        b: d.b,
        bound_l_beta,
        bound_l_b,
        palm_witnesses,
        palm_sum,
        palm_bounds,
        chartrand: (ck, chartrand_bound(ck)?),
        chain_holds,
    })
}

impl BoundsReport {
    /// Machine-readable `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map_or("absent".to_string(), |v| v.to_string());
        let _ = writeln!(out, "vertices={}", self.vertices);
        let _ = writeln!(out, "delta={}", self.delta);
        let _ = writeln!(out, "delta_lb={}", self.delta_lb);
        let _ = writeln!(out, "l={}", self.l);
        let _ = writeln!(out, "beta={}", self.beta);
        let _ = writeln!(out, "b={}", self.b);
        let _ = writeln!(out, "bound_l_beta={}", self.bound_l_beta);
        let _ = writeln!(out, "bound_l_b={}", self.bound_l_b);
        for (i, w) in self.palm_witnesses.iter().enumerate() {
            let _ = writeln!(
                out,
                "palm.{i}={} branch={} colors={} source={}",
                w.spec, w.branch, w.colors, w.source
            );
        }
        let _ = writeln!(out, "palm_sum={}", opt(self.palm_sum));
        match self.palm_bounds {
            Some((lo, hi)) => {
                let _ = writeln!(out, "palm_lower={lo}");
                let _ = writeln!(out, "palm_upper={hi}");
            }
            None => {
                let _ = writeln!(out, "palm_lower=absent");
                let _ = writeln!(out, "palm_upper=absent");
            }
        }
        let _ = writeln!(
            out,
            "chartrand_bound_superseded={} k={}",
            self.chartrand.1, self.chartrand.0
        );
        let _ = writeln!(
            out,
            "chain_holds={}",
            self.chain_holds
                .map_or("absent".to_string(), |b| b.to_string())
        );
        out
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(f, "{:<28}{}", "vertices", self.vertices)?;
        writeln!(f, "{:<28}{}", "max degree", self.delta)?;
        writeln!(f, "{:<28}{}", "lower bound from degree", self.delta_lb)?;
        writeln!(
            f,
            "{:<28}{} / {} / {}",
            "leaves / beta / b", self.l, self.beta, self.b
        )?;
        for w in &self.palm_witnesses {
            writeln!(
                f,
                "{:<28}{} colors ({}) for {}",
                format!("  end-palm at {}", w.branch),
                w.colors,
                w.source,
                w.spec
            )?;
        }
        writeln!(f, "{:<28}{}", "2 - 2b + sum of palms", opt(self.palm_sum))?;
        writeln!(f, "{:<28}{}", "l - beta + 2", self.bound_l_beta)?;
        writeln!(f, "{:<28}{}", "l - b + 2", self.bound_l_b)?;
        if let Some((lo, hi)) = self.palm_bounds {
            writeln!(f, "{:<28}{lo} ..= {hi}", "palm range")?;
        }
        writeln!(
            f,
            "{:<28}{} at k={} (superseded)",
            "(k-1)*2^(k-2)", self.chartrand.1, self.chartrand.0
        )?;
        let chain = match self.chain_holds {
            Some(true) => "holds",
            Some(false) => "VIOLATED",
            None => "-",
        };
        writeln!(f, "{:<28}{chain}", "inequality chain")
    }
}
