//! Root systems of the classical types A, B, C, D and their Weyl groups.
//!
//! Weights are exact coordinate vectors in the `L_j` basis, with the `L_j`
//! orthonormal. Type `A_n` lives in the zero-sum hyperplane of ℚⁿ⁺¹: every
//! weight is canonicalized by subtracting its coordinate mean. Types B, C and
//! D use ℚⁿ directly.
//!
//! Simple roots are numbered as usual: `α_j = L_j − L_{j+1}` for `j < n`, and
//! the last one is `L_n` (B), `2L_n` (C) or `L_{n−1} + L_n` (D).

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::exactlin::{Rat, SpanBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    /// Smallest rank at which the family is simple and not isomorphic to an
    /// earlier one.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = RootSystemError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(RootSystemError::UnknownFamily),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("unknown family (expected one of A, B, C, D)")]
    UnknownFamily,
    #[error("{family}{rank} is not supported{}", match .isomorphic {
        Some((f, r)) => alloc::format!("; it is isomorphic to {f}{r}"),
        None => alloc::string::String::new(),
    })]
    Unsupported { family: Family, rank: usize, isomorphic: Option<(Family, usize)> },
    #[error("weight has {found} coordinates, expected {expected}")]
    WrongDimension { expected: usize, found: usize },
    #[error("reflection in the zero vector")]
    ZeroRoot,
    #[error("expected {expected} fundamental-weight coefficients, found {found}")]
    WrongCoefficientCount { expected: usize, found: usize },
}

/// An exact weight in `L_j` coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Vec<Rat>);

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rat::ZERO; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.0[i] = Rat::ONE;
        w
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn dot(&self, o: &Weight) -> Rat {
        debug_assert_eq!(self.dim(), o.dim());
        let mut acc = Rat::ZERO;
        for (a, b) in self.0.iter().zip(&o.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn norm_sqr(&self) -> Rat {
        self.dot(self)
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rat) -> Weight {
        Weight(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// `self + k·o`
    pub fn add_scaled(&self, k: &Rat, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + &(k * b)).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Mirror image of `w` across the hyperplane orthogonal to `root`:
/// `w − (2⟨w,α⟩/⟨α,α⟩)·α`.
pub fn reflect(w: &Weight, root: &Weight) -> Result<Weight, RootSystemError> {
    if w.dim() != root.dim() {
        return Err(RootSystemError::WrongDimension { expected: root.dim(), found: w.dim() });
    }
    let nn = root.norm_sqr();
    if nn.is_zero() {
        return Err(RootSystemError::ZeroRoot);
    }
    let c = (Rat::from_int(2) * w.dot(root)) / nn;
    if c.is_zero() {
        return Ok(w.clone());
    }
    Ok(w.add_scaled(&-c, root))
}

/// A Weyl orbit as an exact, deduplicated set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylOrbit {
    pub seed: Weight,
    pub elements: BTreeSet<Weight>,
}

impl WeylOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.elements.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.elements.iter()
    }
}

/// Root data for one classical system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    fundamental_weights: Vec<Weight>,
    /// `2α/⟨α,α⟩` for each simple root.
    simple_coroots: Vec<Weight>,
    /// Dual basis to the simple roots: `⟨α_j, ω_i^∨⟩ = δ_ij`.
    fundamental_coweights: Vec<Weight>,
    rho: Weight,
}

/// The isomorphic supported system and the matching fundamental-weight
/// coefficients for a low-rank alias.
///
/// Handles `B₁, C₁ → A₁`, `C₂ → B₂` (standard ↔ spin swap) and `D₃ → A₃`
/// (vector ↔ `Λ²`, half-spins ↔ standard and dual).
pub fn redirect_small_rank(family: Family, rank: usize, coeffs: &[i64]) -> Option<(Family, usize, Vec<i64>)> {
    match (family, rank, coeffs) {
        (Family::B, 1, [c]) | (Family::C, 1, [c]) => Some((Family::A, 1, vec![*c])),
        (Family::C, 2, [c1, c2]) => Some((Family::B, 2, vec![*c2, *c1])),
        (Family::D, 3, [c1, c2, c3]) => Some((Family::A, 3, vec![*c3, *c1, *c2])),
        _ => None,
    }
}

fn isomorphic_supported(family: Family, rank: usize) -> Option<(Family, usize)> {
    match (family, rank) {
        (Family::B, 1) | (Family::C, 1) => Some((Family::A, 1)),
        (Family::C, 2) => Some((Family::B, 2)),
        (Family::D, 3) => Some((Family::A, 3)),
        _ => None,
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl RootSystem {
    /// Builds the root data for a supported `(family, rank)`:
    /// `A_n (n ≥ 1)`, `B_n (n ≥ 2)`, `C_n (n ≥ 3)`, `D_n (n ≥ 4)`.
    pub fn build(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        if rank < family.min_rank() {
            return Err(RootSystemError::Unsupported {
                family,
                rank,
                isomorphic: isomorphic_supported(family, rank),
            });
        }
        let n = rank;
        let dim = if family == Family::A { n + 1 } else { n };
        let e = |i: usize| Weight::unit(dim, i);
        let two = Rat::from_int(2);

        let mut simple: Vec<Weight> = (0..n - 1).map(|j| e(j).sub(&e(j + 1))).collect();
        simple.push(match family {
            Family::A => e(n - 1).sub(&e(n)),
            Family::B => e(n - 1),
            Family::C => e(n - 1).scale(&two),
            Family::D => e(n - 2).add(&e(n - 1)),
        });

        let mut positive = Vec::new();
        let pair_limit = if family == Family::A { n + 1 } else { n };
        for j in 0..pair_limit {
            for k in j + 1..pair_limit {
                positive.push(e(j).sub(&e(k)));
                if family != Family::A {
                    positive.push(e(j).add(&e(k)));
                }
            }
        }
        match family {
            Family::B => positive.extend((0..n).map(e)),
            Family::C => positive.extend((0..n).map(|i| e(i).scale(&two))),
            _ => {}
        }

        let partial = |i: usize| (0..=i).fold(Weight::zero(dim), |acc, j| acc.add(&e(j)));
        let half = Rat::half();
        let mut fundamental: Vec<Weight> = Vec::with_capacity(n);
        for i in 0..n {
            let w = match family {
                Family::A => partial(i),
                Family::B if i == n - 1 => partial(n - 1).scale(&half),
                Family::D if i == n - 2 => partial(n - 2).sub(&e(n - 1)).scale(&half),
                Family::D if i == n - 1 => partial(n - 1).scale(&half),
                _ => partial(i),
            };
            fundamental.push(w);
        }

        let mut rs = RootSystem {
            family,
            rank,
            simple_coroots: simple.iter().map(|a| a.scale(&(&two / &a.norm_sqr()))).collect(),
            fundamental_coweights: Vec::new(),
            simple_roots: simple,
            positive_roots: positive,
            fundamental_weights: Vec::new(),
            rho: Weight::zero(dim),
        };
        rs.fundamental_weights = fundamental.into_iter().map(|w| rs.canonical(w)).collect();
        rs.fundamental_coweights = rs
            .fundamental_weights
            .iter()
            .zip(&rs.simple_roots)
            .map(|(w, a)| w.scale(&(&two / &a.norm_sqr())))
            .collect();
        let sum = rs.positive_roots.iter().fold(Weight::zero(dim), |acc, a| acc.add(a));
        rs.rho = sum.scale(&half);
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of `L_j` coordinates: `n + 1` for `A_n`, `n` otherwise.
    pub fn ambient_dim(&self) -> usize {
        if self.family == Family::A {
            self.rank + 1
        } else {
            self.rank
        }
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn simple_coroots(&self) -> &[Weight] {
        &self.simple_coroots
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Lie algebra dimension `|Φ| + n`.
    pub fn algebra_dim(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank;
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => (1u128 << n) * factorial(n),
            Family::D => (1u128 << (n - 1)) * factorial(n),
        }
    }

    fn canonical(&self, w: Weight) -> Weight {
        if self.family != Family::A {
            return w;
        }
        let mean = w.0.iter().cloned().sum::<Rat>() / Rat::from_int(w.dim() as i64);
        if mean.is_zero() {
            return w;
        }
        Weight(w.0.iter().map(|c| c - &mean).collect())
    }

    /// Validates the coordinate count and, for type A, projects to the
    /// zero-sum hyperplane.
    pub fn weight(&self, coords: Vec<Rat>) -> Result<Weight, RootSystemError> {
        if coords.len() != self.ambient_dim() {
            return Err(RootSystemError::WrongDimension {
                expected: self.ambient_dim(),
                found: coords.len(),
            });
        }
        Ok(self.canonical(Weight(coords)))
    }

    /// `Σ c_i ω_i` over the fundamental weights.
    pub fn weight_from_coeffs(&self, coeffs: &[i64]) -> Result<Weight, RootSystemError> {
        if coeffs.len() != self.rank {
            return Err(RootSystemError::WrongCoefficientCount { expected: self.rank, found: coeffs.len() });
        }
        let mut w = Weight::zero(self.ambient_dim());
        for (c, f) in coeffs.iter().zip(&self.fundamental_weights) {
            if *c != 0 {
                w = w.add_scaled(&Rat::from_int(*c), f);
            }
        }
        Ok(w)
    }

    /// Fundamental-weight coefficients `⟨w, α_i^∨⟩`.
    pub fn coeffs_of(&self, w: &Weight) -> Vec<Rat> {
        self.simple_coroots.iter().map(|c| w.dot(c)).collect()
    }

    /// Coefficients of `w` in the simple-root basis (`w` is assumed to lie in
    /// the span of the roots).
    pub fn simple_root_coefficients(&self, w: &Weight) -> Vec<Rat> {
        self.fundamental_coweights.iter().map(|c| w.dot(c)).collect()
    }

    pub fn in_weight_lattice(&self, w: &Weight) -> bool {
        self.coeffs_of(w).iter().all(Rat::is_integer)
    }

    /// Whether `w ∈ ℤΦ`.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        if self.family == Family::A && !w.0.iter().cloned().sum::<Rat>().is_zero() {
            return false;
        }
        self.simple_root_coefficients(w).iter().all(Rat::is_integer)
    }

    /// Dominance order: `mu ≼ lambda` iff `lambda − mu` is a nonnegative
    /// integer combination of simple roots.
    pub fn dominated_by(&self, mu: &Weight, lambda: &Weight) -> bool {
        let diff = lambda.sub(mu);
        self.simple_root_coefficients(&diff)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Closed fundamental chamber, checked coordinate-wise:
    /// A `a_j ≥ a_{j+1}`; B, C `a_j ≥ a_{j+1} ≥ 0`; D `a_1 ≥ … ≥ a_{n−1} ≥ |a_n|`.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        let a = &w.0;
        let desc = a.windows(2).all(|p| p[0] >= p[1]);
        match self.family {
            Family::A => desc,
            Family::B | Family::C => desc && !a[a.len() - 1].is_negative(),
            Family::D => {
                let n = a.len();
                a[..n - 1].windows(2).all(|p| p[0] >= p[1]) && a[n - 2] >= a[n - 1].abs()
            }
        }
    }

    pub fn reflect_simple(&self, w: &Weight, i: usize) -> Weight {
        let c = w.dot(&self.simple_coroots[i]);
        if c.is_zero() {
            return w.clone();
        }
        w.add_scaled(&-c, &self.simple_roots[i])
    }

    /// The dominant element of the Weyl orbit of `w`, reached by reflecting
    /// in simple roots with negative pairing until none remains.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        'outer: loop {
            for i in 0..self.rank {
                if cur.dot(&self.simple_coroots[i]).is_negative() {
                    cur = self.reflect_simple(&cur, i);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Breadth-first closure of `{w}` under the simple reflections.
    pub fn weyl_orbit(&self, w: &Weight) -> WeylOrbit {
        WeylOrbit { seed: w.clone(), elements: self.orbit_prefix(w, usize::MAX).into_iter().collect() }
    }

    /// The first `limit` orbit elements in breadth-first order.
    pub fn orbit_prefix(&self, w: &Weight, limit: usize) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            order.push(cur.clone());
            if order.len() >= limit {
                break;
            }
            for i in 0..self.rank {
                let next = self.reflect_simple(&cur, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        order
    }

    /// Orbit size by counting distinct signed permutations of the
    /// coordinates, without enumerating the orbit.
    pub fn orbit_size(&self, w: &Weight) -> u128 {
        let dom = self.dominant_representative(w);
        let mut counts: Vec<(Rat, u128)> = Vec::new();
        let abs_vals: Vec<Rat> = match self.family {
            Family::A => dom.0.clone(),
            _ => dom.0.iter().map(Rat::abs).collect(),
        };
        for v in abs_vals {
            match counts.iter_mut().find(|(x, _)| *x == v) {
                Some((_, c)) => *c += 1,
                None => counts.push((v, 1)),
            }
        }
        let mut size = factorial(dom.dim());
        for (_, c) in &counts {
            size /= factorial(*c as usize);
        }
        if self.family == Family::A {
            return size;
        }
        let nonzero = dom.0.iter().filter(|c| !c.is_zero()).count();
        size <<= nonzero;
        if self.family == Family::D && nonzero == dom.dim() {
            size /= 2;
        }
        size
    }

    /// Rank of the span of the orbit of `w`, found from a breadth-first
    /// prefix that stops once the full rank is reached.
    pub fn orbit_rank(&self, w: &Weight) -> usize {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let mut basis = SpanBasis::<Rat>::new(self.ambient_dim());
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(cur) = queue.pop_front() {
            basis.insert(cur.coords()).expect("orbit elements share the ambient dimension");
            if basis.rank() == self.rank {
                break;
            }
            for i in 0..self.rank {
                let next = self.reflect_simple(&cur, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        basis.rank()
    }

    /// All nonzero dominant weights with fundamental-weight coefficients in
    /// `[0, bound]`, ordered lexicographically by coefficient vector.
    pub fn enumerate_dominant(&self, bound: u32) -> Vec<(Vec<i64>, Weight)> {
        let n = self.rank;
        let mut out = Vec::new();
        let mut coeffs = vec![0i64; n];
        loop {
            if coeffs.iter().any(|&c| c != 0) {
                let w = self.weight_from_coeffs(&coeffs).expect("coefficient count equals rank");
                out.push((coeffs.clone(), w));
            }
            // odometer with the last coefficient varying fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if coeffs[i] < bound as i64 {
                    coeffs[i] += 1;
                    for c in coeffs.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    fn halves(v: &[i64]) -> Weight {
        Weight::new(v.iter().map(|&c| Rat::new(c, 2)).collect())
    }

    #[test]
    fn b2_positive_roots() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let got: BTreeSet<_> = rs.positive_roots().iter().cloned().collect();
        let want: BTreeSet<_> = [w(&[1, 0]), w(&[0, 1]), w(&[1, -1]), w(&[1, 1])].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn d4_simple_roots() {
        let rs = RootSystem::build(Family::D, 4).unwrap();
        assert_eq!(
            rs.simple_roots(),
            &[w(&[1, -1, 0, 0]), w(&[0, 1, -1, 0]), w(&[0, 0, 1, -1]), w(&[0, 0, 1, 1])]
        );
    }

    #[test]
    fn a1_positive_root_is_zero_sum() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[w(&[1, -1])]);
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for f in Family::ALL {
            for n in f.min_rank()..=6 {
                let rs = RootSystem::build(f, n).unwrap();
                for (i, fw) in rs.fundamental_weights().iter().enumerate() {
                    for (j, c) in rs.simple_coroots().iter().enumerate() {
                        let want = if i == j { Rat::ONE } else { Rat::ZERO };
                        assert_eq!(fw.dot(c), want, "{f}{n} ω{i} α{j}");
                    }
                }
                assert_eq!(rs.positive_roots().len() * 2 + n, rs.algebra_dim());
            }
        }
    }

    #[test]
    fn unsupported_ranks_name_isomorphic_system() {
        let err = RootSystem::build(Family::C, 2).unwrap_err();
        assert_eq!(
            err,
            RootSystemError::Unsupported { family: Family::C, rank: 2, isomorphic: Some((Family::B, 2)) }
        );
        assert!(alloc::format!("{err}").contains("B2"));
        assert!(matches!(
            RootSystem::build(Family::D, 2),
            Err(RootSystemError::Unsupported { isomorphic: None, .. })
        ));
        assert!(RootSystem::build(Family::A, 0).is_err());
    }

    #[test]
    fn reflections() {
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        assert_eq!(reflect(&w(&[1, 0]), &w(&[1, -1])).unwrap(), w(&[0, 1]));
        assert_eq!(reflect(&w(&[1, 0]), &w(&[1, 0])).unwrap(), w(&[-1, 0]));
        assert_eq!(reflect(&halves(&[1, 1, 1, 1]), &w(&[0, 0, 1, 1])).unwrap(), halves(&[1, 1, -1, -1]));
        assert_eq!(reflect(&w(&[1, 0]), &w(&[0, 0])), Err(RootSystemError::ZeroRoot));
        assert_eq!(b2.reflect_simple(&w(&[1, 0]), 0), w(&[0, 1]));
    }

    #[test]
    fn orbit_examples() {
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        assert_eq!(d4.weyl_orbit(&halves(&[1, 1, 1, 1])).len(), 8);
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        let orbit = b2.weyl_orbit(&halves(&[1, 1]));
        let want: BTreeSet<_> =
            [halves(&[1, 1]), halves(&[1, -1]), halves(&[-1, 1]), halves(&[-1, -1])].into_iter().collect();
        assert_eq!(orbit.elements, want);
        let a3 = RootSystem::build(Family::A, 3).unwrap();
        assert_eq!(a3.weyl_orbit(&Weight::zero(4)).len(), 1);
    }

    #[test]
    fn dominant_representatives() {
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        assert_eq!(b2.dominant_representative(&w(&[-1, 0])), w(&[1, 0]));
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        assert_eq!(d4.dominant_representative(&halves(&[-1, 1, 1, 1])), halves(&[1, 1, 1, -1]));
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(a2.dominant_representative(&w(&[0, 1, -1])), w(&[1, 0, -1]));
    }

    #[test]
    fn root_lattice_membership() {
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        assert!(b2.in_root_lattice(&w(&[1, 0])));
        assert!(!b2.in_root_lattice(&halves(&[1, 1])));
        assert!(b2.in_root_lattice(&w(&[0, 0])));
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        assert!(!d4.in_root_lattice(&w(&[1, 0, 0, 0])));
        assert!(d4.in_root_lattice(&w(&[1, 1, 0, 0])));
    }

    #[test]
    fn enumerate_counts() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(a1.enumerate_dominant(3).len(), 3);
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        assert_eq!(b2.enumerate_dominant(2).len(), 8);
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        assert_eq!(d4.enumerate_dominant(1).len(), 15);
    }

    #[test]
    fn small_rank_redirects() {
        assert_eq!(redirect_small_rank(Family::C, 2, &[1, 0]), Some((Family::B, 2, vec![0, 1])));
        assert_eq!(redirect_small_rank(Family::B, 1, &[2]), Some((Family::A, 1, vec![2])));
        assert_eq!(redirect_small_rank(Family::D, 3, &[1, 0, 0]), Some((Family::A, 3, vec![0, 1, 0])));
        assert_eq!(redirect_small_rank(Family::B, 3, &[1, 0, 0]), None);
    }
}
