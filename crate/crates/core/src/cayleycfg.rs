//! The weight-lattice criterion.
//!
//! An irreducible representation with highest weight `λ` of a simple algebra
//! of rank `n` has a *Cayley configuration* when its weights are exactly the
//! orbit `W·λ`, possibly together with `0`, and that orbit has the shape
//! `{±ω_1, …, ±ω_n}` for linearly independent `ω_i`. Concretely the orbit
//! must have `2n` elements, span a space of dimension `n`, and be symmetric
//! about the origin, and no dominant weight other than `λ` and `0` may occur.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::exactlin::{Rat, SpanBasis};
use crate::rootsys::{RootSystem, Weight};
use crate::weightlat::{dominant_weights, WeightLatticeError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("the zero weight gives the trivial representation, which is excluded")]
    TrivialRepresentation,
    #[error(transparent)]
    Weights(#[from] WeightLatticeError),
}

/// Evidence for one configuration check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigReport {
    pub highest: Weight,
    pub orbit_size: u128,
    pub orbit_rank: usize,
    /// Rank of the root system, i.e. `dim 𝔥`.
    pub rank_needed: usize,
    pub symmetric_about_origin: bool,
    /// Dominant weights of the representation other than `highest`. The
    /// weights outside the orbit of `highest` are exactly the Weyl orbits of
    /// these, so the configuration condition is that this list is `⊆ {0}`.
    pub extra_dominant_weights: Vec<Weight>,
    pub verdict: bool,
    /// A weight that violates the first failing condition.
    pub witness: Option<Weight>,
}

impl ConfigReport {
    /// Whether the weights outside the orbit are at most the origin.
    pub fn extras_within_origin(&self) -> bool {
        self.extra_dominant_weights.iter().all(Weight::is_zero)
    }
}

/// Picks a witness among orbit elements when the orbit is larger than
/// `2n`: with `2n + 1` distinct elements, some element is neither `±` an
/// earlier independent pick nor independent of them.
fn oversize_witness(prefix: &[Weight], dim: usize) -> Option<Weight> {
    let mut reps: Vec<&Weight> = Vec::new();
    let mut basis = SpanBasis::<Rat>::new(dim);
    for x in prefix {
        let nx = x.neg();
        if reps.iter().any(|r| *r == x || **r == nx) {
            continue;
        }
        if basis.insert(x.coords()).ok()? {
            reps.push(x);
        } else {
            return Some(x.clone());
        }
    }
    None
}

pub fn is_cayley_configuration(highest: &Weight, rs: &RootSystem) -> Result<ConfigReport, ConfigError> {
    if highest.is_zero() {
        return Err(ConfigError::TrivialRepresentation);
    }
    let dominant = dominant_weights(highest, rs)?;
    let n = rs.rank();
    let orbit_size = rs.orbit_size(highest);
    let orbit_rank = rs.orbit_rank(highest);
    let symmetric = rs.dominant_representative(&highest.neg()) == *highest;
    let extras: Vec<Weight> = dominant.into_iter().skip(1).collect();

    let target = 2 * n as u128;
    let witness = if orbit_size > target {
        let prefix = rs.orbit_prefix(highest, 2 * n + 1);
        oversize_witness(&prefix, rs.ambient_dim()).or_else(|| Some(highest.clone()))
    } else if orbit_size < target || orbit_rank != n || !symmetric {
        Some(highest.clone())
    } else {
        extras.iter().find(|w| !w.is_zero()).cloned()
    };

    Ok(ConfigReport {
        highest: highest.clone(),
        orbit_size,
        orbit_rank,
        rank_needed: n,
        symmetric_about_origin: symmetric,
        verdict: witness.is_none(),
        extra_dominant_weights: extras,
        witness,
    })
}

/// Whether the nonzero weights of `support` can be written as
/// `{±ω_1, …, ±ω_k}` with `ω_i` linearly independent and `k ≤ rank_needed`.
/// The empty family (support `⊆ {0}`) qualifies.
pub fn cartan_cube_closure(support: &BTreeSet<Weight>, rank_needed: usize) -> bool {
    let Some(dim) = support.iter().next().map(Weight::dim) else {
        return true;
    };
    let mut basis = SpanBasis::<Rat>::new(dim);
    let mut reps: BTreeSet<Weight> = BTreeSet::new();
    for w in support.iter().filter(|w| !w.is_zero()) {
        let nw = w.neg();
        if reps.contains(&nw) {
            continue;
        }
        reps.insert(w.clone());
        match basis.insert(w.coords()) {
            Ok(true) => {}
            _ => return false,
        }
    }
    reps.len() <= rank_needed
}
