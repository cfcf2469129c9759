//! Constructive locating colorings.

mod algorithm1;
mod algorithm2;
mod palms;
mod regular;

pub use algorithm1::{algorithm1_color, PalmColoring};
pub use algorithm2::{algorithm2_color, algorithm2_sequence, AltPair, ArmSequence};
pub use palms::{palm_full_coloring, palm_nonstar_coloring};
pub use regular::{product_capacity, product_coloring, sn2_coloring, sn3_coloring, sn3_triples};

pub use crate::bounds::f_threshold_k;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::locating::{describe_failure, verify, Coloring};
use crate::tree::{decompose, PalmSpec, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Fewest colors among the applicable constructions.
    Auto,
    Algo2,
    Full,
    NonStar,
    Sn2,
    Sn3,
    Product,
    /// Assemble from end-palm colorings chosen by `Auto`.
    Tree,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Auto,
        Method::Algo2,
        Method::Full,
        Method::NonStar,
        Method::Sn2,
        Method::Sn3,
        Method::Product,
        Method::Tree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Algo2 => "algo2",
            Method::Full => "full",
            Method::NonStar => "nonstar",
            Method::Sn2 => "sn2",
            Method::Sn3 => "sn3",
            Method::Product => "product",
            Method::Tree => "tree",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::NotApplicable(format!("unknown method `{s}`")))
    }
}

/// Runs one palm construction on `spec`, in canonical palm numbering. The
/// result is not verified.
pub fn color_palm(spec: &PalmSpec, method: Method) -> Result<Coloring> {
    let regular = |k: usize, name: &str| -> Result<()> {
        if spec.regular_length() == Some(k) {
            Ok(())
        } else {
            Err(Error::NotApplicable(format!(
                "{name} needs S_n({k}), got {spec}"
            )))
        }
    };
    match method {
        Method::Algo2 => algorithm2_color(spec),
        Method::Full => Ok(palm_full_coloring(spec)),
        Method::NonStar => palm_nonstar_coloring(spec),
        Method::Sn2 => {
            regular(2, "sn2")?;
            Ok(sn2_coloring(spec.n())?.1)
        }
        Method::Sn3 => {
            regular(3, "sn3")?;
            Ok(sn3_coloring(spec.n())?.1)
        }
        Method::Product => {
            let k = spec.regular_length().ok_or_else(|| {
                Error::NotApplicable(format!("product needs a regular palm, got {spec}"))
            })?;
            Ok(product_coloring(spec.n(), k)?.1)
        }
        Method::Auto => Ok(best_palm_coloring(spec)?.1),
        Method::Tree => Err(Error::NotApplicable(
            "the tree method applies to whole trees, not palms".into(),
        )),
    }
}

/// The verified locating coloring with the fewest colors among all palm
/// constructions that apply to `spec`. Ties go to the earlier method in
/// `algo2, sn2, sn3, product, nonstar, full`.
pub fn best_palm_coloring(spec: &PalmSpec) -> Result<(Method, Coloring)> {
    let tree = spec.build();
    let mut best: Option<(Method, Coloring)> = None;
    for method in [
        Method::Algo2,
        Method::Sn2,
        Method::Sn3,
        Method::Product,
        Method::NonStar,
        Method::Full,
    ] {
        let Ok(coloring) = color_palm(spec, method) else {
            continue;
        };
        if best.as_ref().is_some_and(|(_, b)| b.k() <= coloring.k()) {
            continue;
        }
        if verify(&tree, &coloring)?.is_locating {
            best = Some((method, coloring));
        }
    }
    Ok(best.expect("the full coloring always applies and is locating"))
}

fn lift(host: &Tree, embedding: &crate::tree::PalmEmbedding, local: &Coloring) -> Result<Coloring> {
    let mut colors = vec![0; host.len()];
    for (canonical, &v) in embedding.to_tree.iter().enumerate() {
        colors[v] = local.color(canonical);
    }
    Coloring::new(colors)
}

/// Colors an arbitrary tree with `method`.
///
/// Palm methods apply when the tree is a spider (a path counts as a palm with
/// two arms) and run in the canonical numbering of the recognized palm. The
/// result is verified; [`Error::NotLocating`] reports a candidate the
/// verifier rejected.
pub fn color_tree(tree: &Tree, method: Method) -> Result<(Method, Coloring)> {
    if tree.len() <= 2 && matches!(method, Method::Auto | Method::Full) {
        return Ok((method, Coloring::new((1..=tree.len()).collect())?));
    }
    let (used, coloring) = match method {
        Method::Tree => (Method::Tree, color_by_algorithm1(tree)?),
        Method::Auto if PalmSpec::recognize(tree).is_none() => {
            (Method::Tree, color_by_algorithm1(tree)?)
        }
        _ => {
            let embedding = PalmSpec::recognize(tree).ok_or_else(|| {
                Error::NotApplicable(format!("method {method} needs a palm (spider) tree"))
            })?;
            let (used, local) = match method {
                Method::Auto => best_palm_coloring(&embedding.spec)?,
                m => (m, color_palm(&embedding.spec, m)?),
            };
            (used, lift(tree, &embedding, &local)?)
        }
    };
    let report = verify(tree, &coloring)?;
    if !report.is_locating {
        return Err(Error::NotLocating(format!(
            "{used} construction: {}",
            describe_failure(&report)
        )));
    }
    Ok((used, coloring))
}

fn color_by_algorithm1(tree: &Tree) -> Result<Coloring> {
    let palms = decompose(tree)?
        .end_palms
        .iter()
        .map(|p| {
            let embedding = p.embedding();
            let (_, coloring) = best_palm_coloring(&embedding.spec)?;
            Ok(PalmColoring {
                embedding,
                coloring,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    algorithm1_color(tree, &palms)
}
