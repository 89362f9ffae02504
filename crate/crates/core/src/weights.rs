//! Dominant weights of SL_n and the congruence monoid of SL_n/μ_d.
//!
//! A dominant weight is written in the basis of fundamental weights
//! αᵢ = L₁ + ⋯ + Lᵢ. The irreducible with highest weight Σ aᵢαᵢ descends to
//! SL_n/μ_d exactly when Σ i·aᵢ ≡ 0 (mod d), so the dominant weights of the
//! quotient form the monoid M = { a ∈ Z₊^{n−1} : Σ i·aᵢ ≡ 0 mod d }.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, Partition};
use crate::error::{Error, Result};

/// SL_n/μ_d, with d | n. `d = 1` is SL_n itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    n: usize,
    d: usize,
}

impl GroupSpec {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n < 2 || d == 0 || !n.is_multiple_of(d) {
            return Err(Error::InvalidGroup { n, d });
        }
        Ok(GroupSpec { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of fundamental weights, n − 1.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.rank() == self.rank() && w.weighted_sum().is_multiple_of(self.d as u64)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "SL_{}", self.n)
        } else {
            write!(f, "SL_{}/mu_{}", self.n, self.d)
        }
    }
}

/// A dominant weight Σ aᵢαᵢ of SL_n, stored as (a₁, …, a_{n−1}).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    coeffs: Vec<u32>,
}

impl Weight {
    pub fn new(coeffs: Vec<u32>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            coeffs: vec![0; n.saturating_sub(1)],
        }
    }

    /// Build from `(i, aᵢ)` pairs with 1-based fundamental weight indices,
    /// e.g. `[(1, 1), (3, 1)]` for α₁ + α₃.
    pub fn from_terms(n: usize, terms: &[(usize, u32)]) -> Self {
        let mut w = Self::zero(n);
        for &(i, a) in terms {
            w.coeffs[i - 1] += a;
        }
        w
    }

    /// The i-th fundamental weight αᵢ (1-based).
    pub fn fundamental(n: usize, i: usize) -> Self {
        Self::from_terms(n, &[(i, 1)])
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Σ aᵢ.
    pub fn tokens(&self) -> u64 {
        self.coeffs.iter().map(|&a| a as u64).sum()
    }

    /// Σ i·aᵢ, which is also |λ| for the associated partition.
    pub fn weighted_sum(&self) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u64 + 1) * a as u64)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    /// Coordinatewise ≤.
    pub fn le(&self, other: &Weight) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Weight) -> Option<Weight> {
        if !other.le(self) {
            return None;
        }
        Some(Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Highest weight of the dual representation: αᵢ ↦ α_{n−i}.
    pub fn dual(&self) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().rev().copied().collect(),
        }
    }

    /// Every nonzero sub-weight strictly below `self`.
    fn proper_sub_weights(&self) -> impl Iterator<Item = Weight> + '_ {
        let total: usize = self.coeffs.iter().map(|&a| a as usize + 1).product();
        (1..total.saturating_sub(1)).map(move |mut code| {
            let coeffs = self
                .coeffs
                .iter()
                .map(|&a| {
                    let base = a as usize + 1;
                    let c = code % base;
                    code /= base;
                    c as u32
                })
                .collect();
            Weight { coeffs }
        })
    }
}

/// `2a1+a3`, or `0` for the zero weight.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if a > 1 {
                write!(f, "{a}")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// λ_j = Σ_{i≥j} aᵢ.
pub fn partition_of(w: &Weight) -> Partition {
    let mut parts = vec![0usize; w.rank()];
    let mut acc = 0usize;
    for j in (0..w.rank()).rev() {
        acc += w.coeffs[j] as usize;
        parts[j] = acc;
    }
    Partition::new(parts).expect("suffix sums are weakly decreasing")
}

/// Inverse of [`partition_of`]: aᵢ = λᵢ − λᵢ₊₁, after dropping full columns
/// of height n.
pub fn weight_of(lambda: &Partition, n: usize) -> Result<Weight> {
    if n < 2 {
        return Err(Error::RankTooSmall(n, 2));
    }
    if lambda.len() > n {
        return Err(Error::TooManyRows {
            partition: lambda.clone(),
            len: lambda.len(),
            n,
        });
    }
    let reduced = lambda.determinant_reduced(n);
    let coeffs = (0..n - 1)
        .map(|i| (reduced.part(i) - reduced.part(i + 1)) as u32)
        .collect();
    Ok(Weight { coeffs })
}

/// γ_n^λ descends to SL_n/μ_d iff |λ| ≡ 0 (mod d).
pub fn descends(lambda: &Partition, spec: &GroupSpec) -> bool {
    lambda.size().is_multiple_of(spec.d)
}

/// True when `w ∈ M` is a sum of two nonzero elements of M.
pub fn is_reducible(w: &Weight, spec: &GroupSpec) -> bool {
    w.proper_sub_weights().any(|s| spec.contains(&s))
}

/// Number of Hilbert-basis candidates, C(n − 1 + d, d) − 1.
pub fn hilbert_candidate_count(spec: &GroupSpec) -> BigUint {
    binomial((spec.rank() + spec.d) as u64, spec.d as u64) - 1u32
}

/// Minimal generating set of the congruence monoid of `spec`, sorted
/// lexicographically on coefficients.
///
/// An element with more than d tokens is always reducible: among any d of its
/// tokens, two prefix sums agree mod d, so some nonempty proper sub-multiset
/// already lies in M. Candidates are therefore multisets of at most d
/// fundamental weights.
pub fn hilbert_basis(spec: &GroupSpec) -> Vec<Weight> {
    let m = spec.rank();
    let d = spec.d;
    let mut out: Vec<Weight> = (0..m)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let mut idx = vec![first];
            multisets_from(&mut idx, m, d, &mut |multiset| {
                let mut coeffs = vec![0u32; m];
                for &i in multiset {
                    coeffs[i] += 1;
                }
                let w = Weight { coeffs };
                if spec.contains(&w) && !is_reducible(&w, spec) {
                    found.push(w);
                }
            });
            found
        })
        .collect();
    out.sort();
    out
}

/// [`hilbert_basis`], refusing when the candidate count exceeds `ceiling`.
pub fn hilbert_basis_bounded(spec: &GroupSpec, ceiling: u64) -> Result<Vec<Weight>> {
    let count = hilbert_candidate_count(spec);
    if count > BigUint::from(ceiling) {
        return Err(Error::CandidateCeiling {
            what: "Hilbert basis search",
            count,
            ceiling,
        });
    }
    Ok(hilbert_basis(spec))
}

/// Visit every nondecreasing index sequence extending `idx` with length ≤ `max_len`.
fn multisets_from(
    idx: &mut Vec<usize>,
    m: usize,
    max_len: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    visit(idx);
    if idx.len() == max_len {
        return;
    }
    let last = *idx.last().expect("nonempty prefix");
    for next in last..m {
        idx.push(next);
        multisets_from(idx, m, max_len, visit);
        idx.pop();
    }
}

/// All a ∈ M with every aᵢ ≤ `bound`, including zero, in lexicographic order.
pub fn monoid_members_up_to(spec: &GroupSpec, bound: u32, ceiling: u64) -> Result<Vec<Weight>> {
    let base = bound as u64 + 1;
    let count = BigUint::from(base).pow(spec.rank() as u32);
    if count > BigUint::from(ceiling) {
        return Err(Error::CandidateCeiling {
            what: "monoid enumeration",
            count,
            ceiling,
        });
    }
    let total = count.to_u64().expect("bounded by ceiling");
    let m = spec.rank();
    let mut out: Vec<Weight> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut coeffs = vec![0u32; m];
            for c in coeffs.iter_mut().rev() {
                *c = (code % base) as u32;
                code /= base;
            }
            let w = Weight { coeffs };
            spec.contains(&w).then_some(w)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Write `w` as a sum of basis elements, greedily. Returns the indices used,
/// or `None` when `w` is outside the monoid the basis generates.
pub fn decompose(w: &Weight, basis: &[Weight]) -> Option<Vec<usize>> {
    let mut rest = w.clone();
    let mut used = Vec::new();
    while !rest.is_zero() {
        let (i, smaller) = basis.iter().enumerate().find_map(|(i, b)| {
            (!b.is_zero())
                .then(|| rest.checked_sub(b))
                .flatten()
                .map(|r| (i, r))
        })?;
        used.push(i);
        rest = smaller;
    }
    Some(used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_of_examples() {
        assert_eq!(partition_of(&Weight::from_terms(8, &[(1, 2)])), p(&[2]));
        assert_eq!(
            partition_of(&Weight::from_terms(8, &[(1, 1), (3, 1)])),
            p(&[2, 1, 1])
        );
        assert_eq!(partition_of(&Weight::zero(8)), Partition::empty());
    }

    #[test]
    fn weight_of_examples() {
        assert_eq!(
            weight_of(&p(&[2, 1, 1]), 8).unwrap(),
            Weight::from_terms(8, &[(1, 1), (3, 1)])
        );
        assert_eq!(
            weight_of(&p(&[3, 3]), 9).unwrap(),
            Weight::from_terms(9, &[(2, 3)])
        );
        assert_eq!(weight_of(&p(&[1]), 5).unwrap(), Weight::fundamental(5, 1));
        // A full column of height n is the determinant.
        assert_eq!(
            weight_of(&p(&[2, 1, 1]), 3).unwrap(),
            Weight::fundamental(3, 1)
        );
        assert!(matches!(
            weight_of(&p(&[1, 1, 1]), 2),
            Err(Error::TooManyRows { .. })
        ));
    }

    #[test]
    fn descent_examples() {
        let s82 = GroupSpec::new(8, 2).unwrap();
        let s93 = GroupSpec::new(9, 3).unwrap();
        assert!(descends(&p(&[2, 1, 1]), &s82));
        assert!(!descends(&p(&[1]), &s82));
        assert!(descends(&p(&[2, 1]), &s93));
    }

    #[test]
    fn group_spec_validation() {
        assert!(GroupSpec::new(8, 3).is_err());
        assert!(GroupSpec::new(8, 0).is_err());
        assert!(GroupSpec::new(1, 1).is_err());
        assert_eq!(GroupSpec::new(9, 3).unwrap().to_string(), "SL_9/mu_3");
    }

    #[test]
    fn weight_display() {
        assert_eq!(
            Weight::from_terms(8, &[(1, 2), (3, 1)]).to_string(),
            "2a1+a3"
        );
        assert_eq!(Weight::zero(4).to_string(), "0");
    }

    #[test]
    fn basis_of_sl_n_is_fundamental_weights() {
        for n in 2..=7 {
            let spec = GroupSpec::new(n, 1).unwrap();
            let mut want: Vec<_> = (1..n).map(|i| Weight::fundamental(n, i)).collect();
            want.sort();
            assert_eq!(hilbert_basis(&spec), want);
        }
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(hilbert_basis(&GroupSpec::new(8, 2).unwrap()).len(), 13);
        assert_eq!(hilbert_basis(&GroupSpec::new(4, 2).unwrap()).len(), 4);
        assert_eq!(hilbert_basis(&GroupSpec::new(6, 3).unwrap()).len(), 13);
        // The full minimal generating set for SL_9/mu_3.
        assert_eq!(hilbert_basis(&GroupSpec::new(9, 3).unwrap()).len(), 31);
    }

    #[test]
    fn small_monoid_members() {
        let spec = GroupSpec::new(4, 2).unwrap();
        let got = monoid_members_up_to(&spec, 1, 1 << 20).unwrap();
        // Exhaustive over the 2^3 candidates: Σ i·aᵢ even.
        let mut want = vec![
            Weight::zero(4),
            Weight::from_terms(4, &[(2, 1)]),
            Weight::from_terms(4, &[(1, 1), (3, 1)]),
            Weight::from_terms(4, &[(1, 1), (2, 1), (3, 1)]),
        ];
        want.sort();
        assert_eq!(got, want);

        let spec = GroupSpec::new(8, 2).unwrap();
        assert_eq!(
            monoid_members_up_to(&spec, 0, 10).unwrap(),
            vec![Weight::zero(8)]
        );

        let spec = GroupSpec::new(9, 3).unwrap();
        let members = monoid_members_up_to(&spec, 1, 1 << 20).unwrap();
        for w in [
            Weight::fundamental(9, 3),
            Weight::fundamental(9, 6),
            Weight::from_terms(9, &[(1, 1), (2, 1)]),
        ] {
            assert!(members.contains(&w), "{w}");
        }
    }

    #[test]
    fn monoid_enumeration_respects_ceiling() {
        let spec = GroupSpec::new(9, 3).unwrap();
        assert!(matches!(
            monoid_members_up_to(&spec, 3, 1000),
            Err(Error::CandidateCeiling { .. })
        ));
    }

    #[test]
    fn basis_search_respects_ceiling() {
        let spec = GroupSpec::new(49, 7).unwrap();
        assert!(matches!(
            hilbert_basis_bounded(&spec, 1_000_000),
            Err(Error::CandidateCeiling { .. })
        ));
    }

    #[test]
    fn greedy_decomposition() {
        let spec = GroupSpec::new(8, 2).unwrap();
        let basis = hilbert_basis(&spec);
        let w = Weight::from_terms(8, &[(1, 3), (3, 1), (2, 2)]);
        let used = decompose(&w, &basis).unwrap();
        let sum = used
            .iter()
            .fold(Weight::zero(8), |acc, &i| acc.add(&basis[i]));
        assert_eq!(sum, w);
        assert!(decompose(&Weight::fundamental(8, 1), &basis).is_none());
    }
}
