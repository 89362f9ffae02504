//! Generator tables for R[SL_n/μ_d] and the image of the cycle class map.
//!
//! For the groups treated here H²(BG, Z) = 0, so c₂ is additive on direct
//! sums and c₂(V ⊗ W) = dim W·c₂(V) + dim V·c₂(W). The subgroup of
//! H⁴(BSL_n, Z) = Z·c₂ spanned by c₂ of all representations of G is
//! therefore spanned by c₂ of any set of ring generators, and its index is
//! the gcd of the n_λ over the Hilbert basis of the dominant weight monoid.

mod tables;

pub use tables::{printed_table, printed_table_for, PrintedRow, PrintedTable, PRINTED_TABLES};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chern::{
    c2, c2_closed_form, dual_partition, gcd_all, ChernConfig, Method, MethodChoice,
};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::weights::{hilbert_basis_bounded, partition_of, GroupSpec, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepConfig {
    pub chern: ChernConfig,
    pub method: MethodChoice,
    /// Largest Hilbert-basis candidate count to search.
    pub candidate_ceiling: u64,
    /// Largest ℓ accepted by [`explore_conjecture`].
    pub ell_ceiling: u64,
}

impl Default for RepConfig {
    fn default() -> Self {
        RepConfig {
            chern: ChernConfig::default(),
            method: MethodChoice::Auto,
            candidate_ceiling: 250_000_000,
            ell_ceiling: 7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRow {
    pub weight: Weight,
    pub partition: Partition,
    /// `None` when the row's computation failed; see `failure`.
    pub n_lambda: Option<BigUint>,
    pub dim: Option<BigUint>,
    pub method: Option<Method>,
    pub cross_checked: bool,
    /// Value in the published table, when this group has one and lists the row.
    pub printed: Option<u64>,
    /// Computed value differs from `printed`.
    pub flagged: bool,
    pub failure: Option<RowFailure>,
}

/// Why a row has no value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowFailure {
    pub message: String,
    /// The two computation routes disagreed (as opposed to a ceiling or
    /// precondition).
    pub cross_check: bool,
}

impl GeneratorRow {
    fn compute(spec: &GroupSpec, weight: Weight, config: &RepConfig) -> Self {
        let partition = partition_of(&weight);
        let printed = printed_table_for(spec)
            .and_then(|t| t.row_for(&weight))
            .map(|r| r.n_lambda);
        let mut row = GeneratorRow {
            weight,
            partition,
            n_lambda: None,
            dim: None,
            method: None,
            cross_checked: false,
            printed,
            flagged: false,
            failure: None,
        };
        match c2(spec.n(), &row.partition, config.method, &config.chern) {
            Ok(r) => {
                row.flagged = printed.is_some_and(|p| BigUint::from(p) != r.n_lambda);
                row.n_lambda = Some(r.n_lambda);
                row.dim = Some(r.dim);
                row.method = Some(r.method);
                row.cross_checked = r.cross_checked;
            }
            Err(e) => {
                row.failure = Some(RowFailure {
                    message: e.to_string(),
                    cross_check: e.is_cross_check(),
                })
            }
        }
        row
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTable {
    pub spec: GroupSpec,
    /// One row per Hilbert-basis weight, lexicographic on coefficients.
    pub rows: Vec<GeneratorRow>,
    /// gcd of n_λ over the rows that computed successfully.
    pub gcd: BigUint,
}

impl GeneratorTable {
    pub fn failures(&self) -> impl Iterator<Item = &GeneratorRow> {
        self.rows.iter().filter(|r| r.failure.is_some())
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn row(&self, w: &Weight) -> Option<&GeneratorRow> {
        self.rows.iter().find(|r| r.weight == *w)
    }
}

/// n_λ for every Hilbert-basis generator of `spec`, and their gcd.
///
/// A failed row (cross-check disagreement, ceiling) is recorded on the row
/// and excluded from the gcd; the table is still returned.
pub fn generator_table(spec: &GroupSpec, config: &RepConfig) -> Result<GeneratorTable> {
    let basis = hilbert_basis_bounded(spec, config.candidate_ceiling)?;
    let rows: Vec<GeneratorRow> = basis
        .into_par_iter()
        .map(|w| GeneratorRow::compute(spec, w, config))
        .collect();
    let gcd = gcd_all(rows.iter().filter_map(|r| r.n_lambda.as_ref()));
    Ok(GeneratorTable {
        spec: *spec,
        rows,
        gcd,
    })
}

/// The index g with image(CH²(BG) → H⁴(BG, Z)) = Z·g·c₂ inside Z·c₂.
///
/// Generators are processed in chunks and the gcd short-circuits at 1. A
/// failed generator makes the gcd unknowable, so it is returned as an error.
pub fn image_index(spec: &GroupSpec, config: &RepConfig) -> Result<BigUint> {
    let basis = hilbert_basis_bounded(spec, config.candidate_ceiling)?;
    let chunk = (rayon::current_num_threads() * 4).max(1);
    let mut g = BigUint::zero();
    for block in basis.chunks(chunk) {
        let values: Vec<BigUint> = block
            .par_iter()
            .map(|w| {
                c2(spec.n(), &partition_of(w), config.method, &config.chern).map(|r| r.n_lambda)
            })
            .collect::<Result<_>>()?;
        g = gcd_all(std::iter::once(&g).chain(&values));
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// A published table alongside the recomputed values.
#[derive(Clone, Debug)]
pub struct CaseTable {
    pub table: &'static PrintedTable,
    /// Recomputed rows in printed order.
    pub rows: Vec<CaseRow>,
    /// Hilbert-basis generators that the published table omits.
    pub unlisted: Vec<GeneratorRow>,
    /// gcd over the printed rows' recomputed values.
    pub table_gcd: BigUint,
    /// gcd over the full Hilbert basis.
    pub image_index: BigUint,
}

#[derive(Clone, Debug)]
pub struct CaseRow {
    pub row: GeneratorRow,
    /// For a flagged row: the dual weight and its printed value, when the
    /// table lists the dual.
    pub dual_printed: Option<(Weight, u64)>,
}

impl CaseTable {
    pub fn flagged(&self) -> impl Iterator<Item = &CaseRow> {
        self.rows.iter().filter(|r| r.row.flagged)
    }

    pub fn has_failures(&self) -> bool {
        self.rows.iter().any(|r| r.row.failure.is_some())
            || self.unlisted.iter().any(|r| r.failure.is_some())
    }
}

/// Recompute a published table (`sl8-mu2` or `sl9-mu3`).
pub fn case_table(case_id: &str, config: &RepConfig) -> Result<CaseTable> {
    let table = printed_table(case_id).ok_or_else(|| Error::UnknownCase(case_id.to_string()))?;
    let spec = table.spec();
    let full = generator_table(&spec, config)?;
    let rows: Vec<CaseRow> = table
        .rows
        .iter()
        .map(|printed| {
            let w = printed.weight(table.n);
            let row = full
                .row(&w)
                .cloned()
                .unwrap_or_else(|| GeneratorRow::compute(&spec, w.clone(), config));
            let dual_printed = row
                .flagged
                .then(|| table.row_for(&w.dual()).map(|d| (w.dual(), d.n_lambda)))
                .flatten();
            CaseRow { row, dual_printed }
        })
        .collect();
    let unlisted = full
        .rows
        .iter()
        .filter(|r| table.row_for(&r.weight).is_none())
        .cloned()
        .collect();
    let table_gcd = gcd_all(rows.iter().filter_map(|r| r.row.n_lambda.as_ref()));
    Ok(CaseTable {
        table,
        rows,
        unlisted,
        table_gcd,
        image_index: full.gcd,
    })
}

/// Known values for a group: the expected image index and the multiplier k
/// with H⁴(BG, Z) = Z·k·c₂.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseExpectation {
    pub case_id: String,
    pub n: usize,
    pub d: usize,
    pub expected_gcd: u64,
    pub h4_multiplier: u64,
    pub source: String,
}

impl CaseExpectation {
    pub fn spec(&self) -> GroupSpec {
        GroupSpec::new(self.n, self.d).expect("stored cases are valid")
    }
}

/// Every stored case, in a fixed order.
pub fn cases() -> Vec<CaseExpectation> {
    let mut out = vec![
        case(
            "sl4-mu2",
            4,
            2,
            2,
            2,
            "H^4(BSL_4/mu_2) = Z*2c_2; c_2(wedge^2 gamma_4) = 2c_2",
        ),
        case(
            "sl6-mu2",
            6,
            2,
            4,
            4,
            "H^4(BSL_6/mu_2) = Z*4c_2; c_2(wedge^2 gamma_6) = 4c_2",
        ),
        case(
            "sl6-mu3",
            6,
            3,
            3,
            3,
            "H^4(BSL_6/mu_3) = Z*3c_2; c_2(wedge^3 gamma_6) = 6c_2, c_2(gamma_6^(2,1)) = 33c_2",
        ),
        case(
            "sl8-mu2",
            8,
            2,
            2,
            1,
            "image of cl^2 is 2c_2*Z while H^4(BSL_8/mu_2) = Z*c_2",
        ),
        case(
            "sl9-mu3",
            9,
            3,
            3,
            1,
            "image of cl^2 is 3c_2*Z while H^4(BSL_9/mu_3) = Z*c_2",
        ),
    ];
    for n in 2..=7u64 {
        let k = if n % 2 == 0 { 2 * n } else { n };
        out.push(case(
            &format!("pgl{n}"),
            n as usize,
            n as usize,
            k,
            k,
            &format!(
                "H^4(BPGL_{n}) = Z*{k}c_2 ({} for n {}); c_2(Ad) = {}c_2",
                if n % 2 == 0 { "2n" } else { "n" },
                if n % 2 == 0 { "even" } else { "odd" },
                2 * n
            ),
        ));
    }
    out
}

fn case(
    id: &str,
    n: usize,
    d: usize,
    expected_gcd: u64,
    h4_multiplier: u64,
    source: &str,
) -> CaseExpectation {
    CaseExpectation {
        case_id: id.to_string(),
        n,
        d,
        expected_gcd,
        h4_multiplier,
        source: source.to_string(),
    }
}

pub fn case_expectation(case_id: &str) -> Result<CaseExpectation> {
    cases()
        .into_iter()
        .find(|c| c.case_id == case_id)
        .ok_or_else(|| Error::UnknownCase(case_id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Chern classes generate H⁴: index equals the multiplier.
    HodgeHolds,
    /// c₂ of the generator of H⁴ is not algebraic: index exceeds the multiplier.
    Counterexample,
    /// Index below the multiplier, which cannot happen for a correct computation.
    Inconsistent,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::HodgeHolds => "integral Hodge holds in codim 2",
            Verdict::Counterexample => "counterexample",
            Verdict::Inconsistent => "inconsistent",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub case: CaseExpectation,
    pub index: BigUint,
    pub generators: usize,
    pub matches_expected: bool,
    pub verdict: Verdict,
}

pub fn verify_case(case_id: &str, config: &RepConfig) -> Result<VerifyReport> {
    let case = case_expectation(case_id)?;
    let spec = case.spec();
    let generators = hilbert_basis_bounded(&spec, config.candidate_ceiling)?.len();
    let index = image_index(&spec, config)?;
    let multiplier = BigUint::from(case.h4_multiplier);
    let verdict = match index.cmp(&multiplier) {
        std::cmp::Ordering::Equal => Verdict::HodgeHolds,
        std::cmp::Ordering::Greater => Verdict::Counterexample,
        std::cmp::Ordering::Less => Verdict::Inconsistent,
    };
    Ok(VerifyReport {
        matches_expected: index == BigUint::from(case.expected_gcd),
        case,
        index,
        generators,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub ell: u64,
    pub spec: GroupSpec,
    pub generators: usize,
    pub index: BigUint,
    /// index == ℓ.
    pub matches_conjecture: bool,
    pub divisible_by_ell: bool,
    /// Rows whose n_λ was compared with the n_λ of the dual weight.
    pub duality_checked: usize,
    /// Rows where that comparison failed.
    pub duality_failures: Vec<Weight>,
}

fn is_odd_prime(v: u64) -> bool {
    v >= 3
        && v % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|f| f * f <= v)
            .all(|f| !v.is_multiple_of(f))
}

/// Compute the image index of SL_{ℓ²}/μ_ℓ by the closed form, checking
/// every generator against its dual.
///
/// The result is evidence for or against index = ℓ, nothing more.
pub fn explore_conjecture(ell: u64, config: &RepConfig) -> Result<ConjectureReport> {
    if !is_odd_prime(ell) {
        return Err(Error::NotOddPrime(ell));
    }
    if ell > config.ell_ceiling {
        return Err(Error::EllCeiling {
            ell,
            ceiling: config.ell_ceiling,
        });
    }
    let l = ell as usize;
    let spec = GroupSpec::new(l * l, l)?;
    let basis = hilbert_basis_bounded(&spec, config.candidate_ceiling)?;
    let n = spec.n();
    let rows: Vec<(Weight, BigUint, bool)> = basis
        .into_par_iter()
        .map(|w| {
            let lambda = partition_of(&w);
            let value = c2_closed_form(n, &lambda)?.n_lambda;
            let dual = c2_closed_form(n, &dual_partition(n, &lambda)?)?.n_lambda;
            let ok = dual == value;
            Ok((w, value, ok))
        })
        .collect::<Result<_>>()?;
    let index = gcd_all(rows.iter().map(|r| &r.1));
    let ell_big = BigUint::from(ell);
    let report = ConjectureReport {
        ell,
        spec,
        generators: rows.len(),
        matches_conjecture: index == ell_big,
        divisible_by_ell: (&index % &ell_big).is_zero(),
        duality_checked: rows.len(),
        duality_failures: rows.iter().filter(|r| !r.2).map(|r| r.0.clone()).collect(),
        index,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> RepConfig {
        RepConfig::default()
    }

    #[test]
    fn sl8_mu2_table() {
        let spec = GroupSpec::new(8, 2).unwrap();
        let t = generator_table(&spec, &config()).unwrap();
        assert_eq!(t.rows.len(), 13);
        assert_eq!(t.gcd, BigUint::from(2u32));
        assert!(!t.has_failures());
        let flagged: Vec<_> = t
            .rows
            .iter()
            .filter(|r| r.flagged)
            .map(|r| r.partition.clone())
            .collect();
        assert_eq!(flagged, vec![Partition::new(vec![2]).unwrap()]);
    }

    #[test]
    fn sl_n_table_is_fundamental() {
        let spec = GroupSpec::new(5, 1).unwrap();
        let t = generator_table(&spec, &config()).unwrap();
        assert_eq!(t.rows.len(), 4);
        assert_eq!(t.gcd, BigUint::one());
        assert!(t.rows.iter().all(|r| r.printed.is_none() && !r.flagged));
        assert_eq!(image_index(&spec, &config()).unwrap(), BigUint::one());
    }

    #[test]
    fn image_index_small_groups() {
        for (n, d, want) in [(4, 2, 2u32), (6, 2, 4), (6, 3, 3), (2, 2, 4), (3, 3, 3)] {
            let spec = GroupSpec::new(n, d).unwrap();
            assert_eq!(
                image_index(&spec, &config()).unwrap(),
                BigUint::from(want),
                "{spec}"
            );
        }
    }

    #[test]
    fn verify_examples() {
        let r = verify_case("sl8-mu2", &config()).unwrap();
        assert_eq!(r.index, BigUint::from(2u32));
        assert_eq!(r.case.h4_multiplier, 1);
        assert_eq!(r.verdict, Verdict::Counterexample);
        assert!(r.matches_expected);

        let r = verify_case("sl4-mu2", &config()).unwrap();
        assert_eq!(r.index, BigUint::from(2u32));
        assert_eq!(r.verdict, Verdict::HodgeHolds);

        let r = verify_case("sl6-mu3", &config()).unwrap();
        assert_eq!(r.index, BigUint::from(3u32));
        assert_eq!(r.verdict, Verdict::HodgeHolds);

        assert!(matches!(
            verify_case("sl7-mu2", &config()),
            Err(Error::UnknownCase(_))
        ));
    }

    #[test]
    fn pgl_cases_hold() {
        for n in 2..=6 {
            let r = verify_case(&format!("pgl{n}"), &config()).unwrap();
            assert!(r.matches_expected, "pgl{n}: {}", r.index);
            assert_eq!(r.verdict, Verdict::HodgeHolds);
        }
    }

    #[test]
    fn conjecture_preconditions() {
        assert!(matches!(
            explore_conjecture(2, &config()),
            Err(Error::NotOddPrime(2))
        ));
        assert!(matches!(
            explore_conjecture(9, &config()),
            Err(Error::NotOddPrime(9))
        ));
        assert!(matches!(
            explore_conjecture(11, &config()),
            Err(Error::EllCeiling { .. })
        ));
    }

    #[test]
    fn conjecture_for_three() {
        let r = explore_conjecture(3, &config()).unwrap();
        assert_eq!(r.index, BigUint::from(3u32));
        assert!(r.matches_conjecture);
        assert!(r.divisible_by_ell);
        assert_eq!(r.duality_checked, r.generators);
        assert!(r.duality_failures.is_empty());
    }

    #[test]
    fn case_table_flags_only_the_first_row() {
        let t = case_table("sl8-mu2", &config()).unwrap();
        assert_eq!(t.rows.len(), 13);
        assert!(t.unlisted.is_empty());
        let flagged: Vec<_> = t.flagged().collect();
        assert_eq!(flagged.len(), 1);
        let dual = flagged[0].dual_printed.as_ref().unwrap();
        assert_eq!(dual.0, Weight::from_terms(8, &[(7, 2)]));
        assert_eq!(dual.1, 10);
        assert_eq!(flagged[0].row.n_lambda, Some(BigUint::from(10u32)));
    }
}
