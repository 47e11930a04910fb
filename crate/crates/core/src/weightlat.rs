//! Weights and weight diagrams of irreducible highest-weight representations.
//!
//! The weight set of the irreducible representation with highest weight `λ`
//! is `Conv(W·λ) ∩ (λ + ℤΦ)`. [`weight_set`] computes it by dominance
//! saturation; [`hull_coset_oracle`] recomputes it from the definition with
//! exact linear programming and is meant for cross-checking.
//! Multiplicities come from Freudenthal's recursion.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::exactlin::{lp_feasible_convex_combination, ExactLinError, Rat};
use crate::rootsys::{RootSystem, RootSystemError, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightLatticeError {
    #[error("{0} is not dominant; use its dominant representative")]
    NotDominant(Weight),
    #[error("{0} is not in the weight lattice")]
    NotIntegral(Weight),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Linear(#[from] ExactLinError),
    #[error("multiplicity of {0} is not a nonnegative integer that fits in u64")]
    BadMultiplicity(Weight),
}

/// Support and multiplicities of an irreducible representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDiagram {
    pub highest: Weight,
    pub mult: BTreeMap<Weight, u64>,
}

impl WeightDiagram {
    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.mult.keys()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    /// `Σ m(λ)`, the dimension of the representation.
    pub fn dimension(&self) -> u64 {
        self.mult.values().sum()
    }

    /// `Σ m(λ)·λ`.
    pub fn weighted_sum(&self) -> Weight {
        let mut acc = Weight::zero(self.highest.dim());
        for (w, &m) in &self.mult {
            acc = acc.add_scaled(&Rat::from_int(m as i64), w);
        }
        acc
    }

    pub fn is_origin_symmetric(&self) -> bool {
        self.mult.keys().all(|w| self.mult.contains_key(&w.neg()))
    }
}

fn validate(highest: &Weight, rs: &RootSystem) -> Result<(), WeightLatticeError> {
    if highest.dim() != rs.ambient_dim() {
        return Err(RootSystemError::WrongDimension { expected: rs.ambient_dim(), found: highest.dim() }.into());
    }
    if !rs.is_dominant(highest) {
        return Err(WeightLatticeError::NotDominant(highest.clone()));
    }
    if !rs.in_weight_lattice(highest) {
        return Err(WeightLatticeError::NotIntegral(highest.clone()));
    }
    Ok(())
}

fn height(rs: &RootSystem, diff: &Weight) -> Rat {
    rs.simple_root_coefficients(diff).into_iter().sum()
}

/// Dominant weights `μ ≼ highest`, ordered by increasing depth below
/// `highest` (so `highest` comes first).
///
/// Starting from `highest`, positive roots are subtracted from every member
/// found so far; results whose dominant representative is still `≼ highest`
/// are kept.
pub fn dominant_weights(highest: &Weight, rs: &RootSystem) -> Result<Vec<Weight>, WeightLatticeError> {
    validate(highest, rs)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(highest.clone());
    queue.push_back(highest.clone());
    while let Some(mu) = queue.pop_front() {
        for alpha in rs.positive_roots() {
            let nu = rs.dominant_representative(&mu.sub(alpha));
            if !seen.contains(&nu) && rs.dominated_by(&nu, highest) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<(Rat, Weight)> =
        seen.into_iter().map(|mu| (height(rs, &highest.sub(&mu)), mu)).collect();
    out.sort();
    Ok(out.into_iter().map(|(_, mu)| mu).collect())
}

/// `Conv(W·highest) ∩ (highest + ℤΦ)`.
pub fn weight_set(highest: &Weight, rs: &RootSystem) -> Result<BTreeSet<Weight>, WeightLatticeError> {
    let mut out = BTreeSet::new();
    for mu in dominant_weights(highest, rs)? {
        out.extend(rs.weyl_orbit(&mu).elements);
    }
    Ok(out)
}

fn coordinate_ranges(highest: &Weight, orbit: &[Vec<Rat>]) -> Option<Vec<(i64, i64)>> {
    let mut ranges = Vec::with_capacity(highest.dim());
    for i in 0..highest.dim() {
        let lo = orbit.iter().map(|p| p[i].clone()).min().expect("orbit is nonempty");
        let hi = orbit.iter().map(|p| p[i].clone()).max().expect("orbit is nonempty");
        let c = &highest.coords()[i];
        let a = (&lo - c).ceil().to_i64().expect("bounding box fits in i64");
        let b = (&hi - c).floor().to_i64().expect("bounding box fits in i64");
        if a > b {
            return None;
        }
        ranges.push((a, b));
    }
    Some(ranges)
}

/// Coset points `highest + z`, `z ∈ ℤ^dim ∩ ℤΦ`, inside the coordinate
/// bounding box of the orbit of `highest`.
fn box_coset_points(highest: &Weight, rs: &RootSystem, orbit: &[Vec<Rat>]) -> Vec<Weight> {
    let mut out = Vec::new();
    let Some(ranges) = coordinate_ranges(highest, orbit) else {
        return out;
    };
    let dim = highest.dim();
    let mut z: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        let offset = Weight::from_ints(&z);
        if rs.in_root_lattice(&offset) {
            out.push(highest.add(&offset));
        }
        let mut i = 0;
        loop {
            if i == dim {
                return out;
            }
            if z[i] < ranges[i].1 {
                z[i] += 1;
                break;
            }
            z[i] = ranges[i].0;
            i += 1;
        }
    }
}

/// The points of [`box_coset_points`] with non-increasing coordinates, which
/// contain every chamber point in all four families.
fn box_coset_points_sorted(highest: &Weight, rs: &RootSystem, orbit: &[Vec<Rat>]) -> Vec<Weight> {
    fn rec(
        i: usize,
        ranges: &[(i64, i64)],
        base: &[Rat],
        prefix: &mut Vec<Rat>,
        highest: &Weight,
        rs: &RootSystem,
        out: &mut Vec<Weight>,
    ) {
        if i == ranges.len() {
            let p = Weight::new(prefix.clone());
            if rs.in_root_lattice(&p.sub(highest)) {
                out.push(p);
            }
            return;
        }
        for z in (ranges[i].0..=ranges[i].1).rev() {
            let x = &base[i] + &Rat::from_int(z);
            if i > 0 && x > prefix[i - 1] {
                continue;
            }
            prefix.push(x);
            rec(i + 1, ranges, base, prefix, highest, rs, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if let Some(ranges) = coordinate_ranges(highest, orbit) {
        let mut prefix = Vec::with_capacity(ranges.len());
        rec(0, &ranges, highest.coords(), &mut prefix, highest, rs, &mut out);
    }
    out
}

/// Brute-force weight set: every coset point in the bounding box of the
/// orbit is tested for hull membership by exact LP.
pub fn hull_coset_oracle_exhaustive(
    highest: &Weight,
    rs: &RootSystem,
) -> Result<BTreeSet<Weight>, WeightLatticeError> {
    validate(highest, rs)?;
    let orbit: Vec<Vec<Rat>> = rs.weyl_orbit(highest).elements.into_iter().map(Weight::into_coords).collect();
    let mut out = BTreeSet::new();
    for p in box_coset_points(highest, rs, &orbit) {
        if lp_feasible_convex_combination(p.coords(), &orbit)? {
            out.insert(p);
        }
    }
    Ok(out)
}

/// Weight set from the definition, using exact LP on the coset points of the
/// bounding box that lie in the closed fundamental chamber, then expanding
/// each hit to its Weyl orbit. Both the hull and the coset are Weyl-stable,
/// so this agrees with [`hull_coset_oracle_exhaustive`].
pub fn hull_coset_oracle(highest: &Weight, rs: &RootSystem) -> Result<BTreeSet<Weight>, WeightLatticeError> {
    validate(highest, rs)?;
    let orbit: Vec<Vec<Rat>> = rs.weyl_orbit(highest).elements.into_iter().map(Weight::into_coords).collect();
    let mut out = BTreeSet::new();
    for p in box_coset_points_sorted(highest, rs, &orbit) {
        if rs.is_dominant(&p) && lp_feasible_convex_combination(p.coords(), &orbit)? {
            out.extend(rs.weyl_orbit(&p).elements);
        }
    }
    Ok(out)
}

/// Multiplicities of all dominant weights via Freudenthal's formula
///
/// `(|λ+ρ|² − |μ+ρ|²)·m(μ) = 2 Σ_{α>0} Σ_{k≥1} ⟨μ+kα, α⟩·m(μ+kα)`.
pub fn dominant_multiplicities(
    highest: &Weight,
    rs: &RootSystem,
) -> Result<BTreeMap<Weight, u64>, WeightLatticeError> {
    let dominant = dominant_weights(highest, rs)?;
    let lr = highest.add(rs.rho()).norm_sqr();
    let two = Rat::from_int(2);
    let mut table: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in dominant {
        if table.is_empty() {
            table.insert(mu, 1);
            continue;
        }
        let mut acc = Rat::ZERO;
        for alpha in rs.positive_roots() {
            let mut nu = mu.add(alpha);
            loop {
                let d = rs.dominant_representative(&nu);
                let Some(&m) = table.get(&d) else {
                    // weights along a root string form an interval
                    break;
                };
                acc += &(Rat::from_int(m as i64) * nu.dot(alpha));
                nu = nu.add(alpha);
            }
        }
        let den = &lr - &mu.add(rs.rho()).norm_sqr();
        if !den.is_positive() {
            return Err(WeightLatticeError::BadMultiplicity(mu));
        }
        let m = (&two * &acc) / den;
        let value = m
            .to_i64()
            .and_then(|v| u64::try_from(v).ok())
            .ok_or_else(|| WeightLatticeError::BadMultiplicity(mu.clone()))?;
        table.insert(mu, value);
    }
    Ok(table)
}

/// `dim V_target` in the irreducible representation of highest weight
/// `highest`; zero when `target` is not a weight.
pub fn freudenthal_multiplicity(
    highest: &Weight,
    target: &Weight,
    rs: &RootSystem,
) -> Result<u64, WeightLatticeError> {
    let table = dominant_multiplicities(highest, rs)?;
    if target.dim() != highest.dim() {
        return Ok(0);
    }
    Ok(table.get(&rs.dominant_representative(target)).copied().unwrap_or(0))
}

pub fn weight_diagram(highest: &Weight, rs: &RootSystem) -> Result<WeightDiagram, WeightLatticeError> {
    let table = dominant_multiplicities(highest, rs)?;
    let mut mult = BTreeMap::new();
    for (mu, m) in table {
        for w in rs.weyl_orbit(&mu).elements {
            mult.insert(w, m);
        }
    }
    Ok(WeightDiagram { highest: highest.clone(), mult })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(f, n).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    fn halves(v: &[i64]) -> Weight {
        Weight::new(v.iter().map(|&c| Rat::new(c, 2)).collect())
    }

    #[test]
    fn sl2_symmetric_cube_weights() {
        let a1 = rs(Family::A, 1);
        let h = a1.weight_from_coeffs(&[3]).unwrap();
        let got = weight_set(&h, &a1).unwrap();
        let want: BTreeSet<_> = [3, 1, -1, -3].iter().map(|&k| halves(&[k, -k])).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn a3_lambda2_weights() {
        let a3 = rs(Family::A, 3);
        let h = a3.weight_from_coeffs(&[0, 1, 0]).unwrap();
        let got = weight_set(&h, &a3).unwrap();
        assert_eq!(got.len(), 6);
        for x in &got {
            let ones = x.coords().iter().filter(|c| **c == Rat::half()).count();
            assert_eq!(ones, 2);
        }
    }

    #[test]
    fn b2_standard_weights() {
        let b2 = rs(Family::B, 2);
        let got = weight_set(&w(&[1, 0]), &b2).unwrap();
        let want: BTreeSet<_> =
            [w(&[1, 0]), w(&[-1, 0]), w(&[0, 1]), w(&[0, -1]), w(&[0, 0])].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn non_dominant_rejected() {
        let b2 = rs(Family::B, 2);
        assert_eq!(
            weight_set(&w(&[-1, 0]), &b2),
            Err(WeightLatticeError::NotDominant(w(&[-1, 0])))
        );
    }

    #[test]
    fn oracle_examples() {
        let a1 = rs(Family::A, 1);
        let h = a1.weight_from_coeffs(&[1]).unwrap();
        assert_eq!(hull_coset_oracle(&h, &a1).unwrap(), [halves(&[1, -1]), halves(&[-1, 1])].into_iter().collect());
        let c3 = rs(Family::C, 3);
        let got = hull_coset_oracle(&w(&[1, 0, 0]), &c3).unwrap();
        assert_eq!(got.len(), 6);
        assert!(!got.contains(&w(&[0, 0, 0])));
        let d4 = rs(Family::D, 4);
        let got = hull_coset_oracle_exhaustive(&halves(&[1, 1, 1, 1]), &d4).unwrap();
        assert_eq!(got.len(), 8);
        assert!(!got.contains(&Weight::zero(4)));
    }

    #[test]
    fn multiplicity_examples() {
        let a1 = rs(Family::A, 1);
        let adj = a1.weight_from_coeffs(&[2]).unwrap();
        assert_eq!(freudenthal_multiplicity(&adj, &w(&[0, 0]), &a1).unwrap(), 1);
        assert_eq!(freudenthal_multiplicity(&adj, &adj, &a1).unwrap(), 1);
        let b2 = rs(Family::B, 2);
        assert_eq!(freudenthal_multiplicity(&w(&[1, 1]), &w(&[0, 0]), &b2).unwrap(), 2);
        assert_eq!(freudenthal_multiplicity(&w(&[1, 1]), &w(&[2, 0]), &b2).unwrap(), 0);
    }

    #[test]
    fn diagram_examples() {
        let b2 = rs(Family::B, 2);
        let d = weight_diagram(&w(&[1, 0]), &b2).unwrap();
        assert_eq!(d.dimension(), 5);
        assert!(d.mult.values().all(|&m| m == 1));
        let a2 = rs(Family::A, 2);
        let adj = a2.weight(alloc::vec![Rat::ONE, Rat::ZERO, -Rat::ONE]).unwrap();
        let d = weight_diagram(&adj, &a2).unwrap();
        assert_eq!(d.multiplicity(&Weight::zero(3)), 2);
        assert_eq!(d.mult.len(), 7);
        assert_eq!(d.dimension(), 8);
        assert!(d.weighted_sum().is_zero());
    }
}
