//! Second Chern classes of irreducible SL_n representations.
//!
//! For a partition λ the integer n_λ is defined by c₂(γ_n^λ) = n_λ·c₂(γ_n).
//! Two independent routes compute it:
//!
//! * **Enumeration.** By the splitting principle the Chern roots of γ_n^λ are
//!   the contents μ_T of its semistandard tableaux, read as linear forms
//!   Σᵢ μ_T(i)·xᵢ. The product Π_T (1 + μ_T·x), truncated to degree 2, is
//!   the total Chern class up to degree 2 on the torus of GL_n. Subtracting
//!   k·c₁² (k the coefficient of x₁²) removes the c₁ contribution, and the
//!   coefficient of x₁x₂ left over is n_λ.
//! * **Closed form.** n_λ = dim(γ_n^λ)·(λ, λ+2ρ)/(n² − 1), the Dynkin index
//!   relative to the defining representation.
//!
//! Expanding the truncated product, the enumeration collapses to the sum
//! Σ_T [μ_T(1)² − μ_T(1)·μ_T(2)], which is what the streaming path
//! evaluates. [`c2_truncated_product`] keeps the literal polynomial product
//! as a reference implementation.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{schur_dimension, Partition, SsytStream};
use crate::error::{Error, Result};

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Enumeration,
    ClosedForm,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::ClosedForm => "closed-form",
            Method::Both => "both",
        })
    }
}

/// Which route(s) [`c2`] should take.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    Enumeration,
    ClosedForm,
    Both,
    /// Closed form, cross-checked by enumeration when the dimension is at
    /// most [`ChernConfig::cross_check_ceiling`].
    #[default]
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernConfig {
    /// Largest dimension the enumeration route will accept.
    pub enumeration_ceiling: u64,
    /// Largest dimension for which [`MethodChoice::Auto`] adds the
    /// enumeration cross-check.
    pub cross_check_ceiling: u64,
}

impl Default for ChernConfig {
    fn default() -> Self {
        ChernConfig {
            enumeration_ceiling: 20_000_000,
            cross_check_ceiling: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernResult {
    pub n_lambda: BigUint,
    pub method: Method,
    pub cross_checked: bool,
    pub dim: BigUint,
}

/// A polynomial of degree ≤ 2 in x₁…x_n; higher terms are dropped on every
/// multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedQuadratic {
    n: usize,
    constant: BigInt,
    linear: Vec<BigInt>,
    /// Upper triangle, `quad[i][j - i]` is the coefficient of xᵢxⱼ for i ≤ j.
    quad: Vec<Vec<BigInt>>,
}

impl TruncatedQuadratic {
    pub fn one(n: usize) -> Self {
        TruncatedQuadratic {
            n,
            constant: BigInt::from(1),
            linear: vec![BigInt::zero(); n],
            quad: (0..n).map(|i| vec![BigInt::zero(); n - i]).collect(),
        }
    }

    /// Multiply in place by (1 + Σ ℓᵢxᵢ), discarding degree 3.
    pub fn mul_one_plus_linear(&mut self, ell: &[u32]) {
        assert_eq!(ell.len(), self.n);
        for i in 0..self.n {
            for j in i..self.n {
                let mut add = BigInt::zero();
                if ell[j] != 0 {
                    add += &self.linear[i] * ell[j];
                }
                if i != j && ell[i] != 0 {
                    add += &self.linear[j] * ell[i];
                }
                if !add.is_zero() {
                    self.quad[i][j - i] += add;
                }
            }
        }
        for (l, &e) in self.linear.iter_mut().zip(ell) {
            if e != 0 {
                *l += &self.constant * e;
            }
        }
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn linear(&self, i: usize) -> &BigInt {
        &self.linear[i]
    }

    /// Coefficient of xᵢxⱼ (zero-based).
    pub fn quadratic(&self, i: usize, j: usize) -> &BigInt {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        &self.quad[a][b - a]
    }

    /// Subtract k·(Σ xᵢ)².
    pub fn subtract_c1_squared(&mut self, k: &BigInt) {
        for i in 0..self.n {
            for j in i..self.n {
                let factor = if i == j { 1 } else { 2 };
                self.quad[i][j - i] -= k * factor;
            }
        }
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::RankTooSmall(n, 2));
    }
    Ok(())
}

fn prepare(n: usize, lambda: &Partition) -> Result<Partition> {
    check_rank(n)?;
    if lambda.len() > n {
        return Err(Error::TooManyRows {
            partition: lambda.clone(),
            len: lambda.len(),
            n,
        });
    }
    Ok(lambda.determinant_reduced(n))
}

fn enforce_ceiling(dim: &BigUint, ceiling: u64) -> Result<()> {
    if *dim > BigUint::from(ceiling) {
        return Err(Error::EnumerationCeiling {
            dim: dim.clone(),
            ceiling,
        });
    }
    Ok(())
}

fn to_nonnegative(n: usize, lambda: &Partition, v: BigInt) -> Result<BigUint> {
    match v.sign() {
        Sign::Minus => Err(Error::NonIntegral {
            n,
            partition: lambda.clone(),
            value: v.to_string(),
        }),
        _ => Ok(v.magnitude().clone()),
    }
}

/// n_λ by streaming over all tableaux, in parallel over first rows.
pub fn c2_enumeration(
    n: usize,
    lambda: &Partition,
    enumeration_ceiling: u64,
) -> Result<ChernResult> {
    let reduced = prepare(n, lambda)?;
    let dim = schur_dimension(n, &reduced);
    enforce_ceiling(&dim, enumeration_ceiling)?;
    let (total, count) = SsytStream::split(n, &reduced)
        .into_par_iter()
        .map(|mut s| {
            let (mut acc, mut count) = (0i128, 0u128);
            while s.advance() {
                let c = s.current_counts();
                let (m1, m2) = (c[0] as i128, c[1] as i128);
                acc += m1 * m1 - m1 * m2;
                count += 1;
            }
            (acc, count)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(ChernResult {
        n_lambda: to_nonnegative(n, lambda, BigInt::from(total))?,
        method: Method::Enumeration,
        cross_checked: false,
        dim: BigUint::from(count),
    })
}

/// n_λ by the literal truncated product over tableaux. Sequential and
/// O(n²) per tableau; the streaming [`c2_enumeration`] is the fast path.
pub fn c2_truncated_product(
    n: usize,
    lambda: &Partition,
    enumeration_ceiling: u64,
) -> Result<ChernResult> {
    let reduced = prepare(n, lambda)?;
    let dim = schur_dimension(n, &reduced);
    enforce_ceiling(&dim, enumeration_ceiling)?;
    let mut q = TruncatedQuadratic::one(n);
    let mut stream = SsytStream::new(n, &reduced);
    while stream.advance() {
        q.mul_one_plus_linear(stream.current_counts());
    }
    let k = q.quadratic(0, 0).clone();
    q.subtract_c1_squared(&k);
    Ok(ChernResult {
        n_lambda: to_nonnegative(n, lambda, q.quadratic(0, 1).clone())?,
        method: Method::Enumeration,
        cross_checked: false,
        dim,
    })
}

/// (λ, λ + 2ρ) = Σᵢ λᵢ(λᵢ + n + 1 − 2i) − |λ|²/n.
pub fn casimir(n: usize, lambda: &Partition) -> Result<BigRational> {
    check_rank(n)?;
    if lambda.len() > n {
        return Err(Error::TooManyRows {
            partition: lambda.clone(),
            len: lambda.len(),
            n,
        });
    }
    let n_i = n as i64;
    let quadratic: i64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let l = l as i64;
            l * (l + n_i + 1 - 2 * (i as i64 + 1))
        })
        .sum();
    let size = lambda.size() as i64;
    Ok(BigRational::from_integer(quadratic.into())
        - BigRational::new((size * size).into(), n_i.into()))
}

/// n_λ = dim · (λ, λ+2ρ) / (n² − 1).
pub fn c2_closed_form(n: usize, lambda: &Partition) -> Result<ChernResult> {
    let reduced = prepare(n, lambda)?;
    let dim = schur_dimension(n, &reduced);
    let value = BigRational::from_integer(BigInt::from(dim.clone())) * casimir(n, &reduced)?
        / BigRational::from_integer(BigInt::from(n * n - 1));
    if !value.is_integer() {
        return Err(Error::NonIntegral {
            n,
            partition: lambda.clone(),
            value: value.to_string(),
        });
    }
    Ok(ChernResult {
        n_lambda: to_nonnegative(n, lambda, value.to_integer())?,
        method: Method::ClosedForm,
        cross_checked: false,
        dim,
    })
}

/// Unified entry point.
pub fn c2(
    n: usize,
    lambda: &Partition,
    choice: MethodChoice,
    config: &ChernConfig,
) -> Result<ChernResult> {
    match choice {
        MethodChoice::Enumeration => c2_enumeration(n, lambda, config.enumeration_ceiling),
        MethodChoice::ClosedForm => c2_closed_form(n, lambda),
        MethodChoice::Both => cross_check(n, lambda, config.enumeration_ceiling),
        MethodChoice::Auto => {
            let closed = c2_closed_form(n, lambda)?;
            if closed.dim <= BigUint::from(config.cross_check_ceiling) {
                cross_check(n, lambda, config.enumeration_ceiling)
            } else {
                Ok(closed)
            }
        }
    }
}

fn cross_check(n: usize, lambda: &Partition, ceiling: u64) -> Result<ChernResult> {
    let closed = c2_closed_form(n, lambda)?;
    let enumerated = c2_enumeration(n, lambda, ceiling)?;
    if closed.n_lambda != enumerated.n_lambda || closed.dim != enumerated.dim {
        return Err(Error::CrossCheck {
            n,
            partition: lambda.clone(),
            enumeration: enumerated.n_lambda.into(),
            closed_form: closed.n_lambda.into(),
        });
    }
    Ok(ChernResult {
        method: Method::Both,
        cross_checked: true,
        ..closed
    })
}

/// Highest weight of the dual: (λ₁ − λ_n, λ₁ − λ_{n−1}, …, 0).
pub fn dual_partition(n: usize, lambda: &Partition) -> Result<Partition> {
    if lambda.len() > n {
        return Err(Error::TooManyRows {
            partition: lambda.clone(),
            len: lambda.len(),
            n,
        });
    }
    let top = lambda.first_row();
    let parts = (0..n).rev().map(|i| top - lambda.part(i)).collect();
    Partition::new(parts)
}

/// gcd of a sequence of values, stopping early once it reaches 1.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigUint>) -> BigUint {
    let mut g = BigUint::zero();
    for v in values {
        g = g.gcd(v);
        if g.to_u8() == Some(1) {
            break;
        }
    }
    g
}
