//! Published generator tables for SL_8/μ_2 and SL_9/μ_3, shipped as data so
//! that reproduction is a row-by-row diff.

use crate::combinatorics::Partition;
use crate::weights::{GroupSpec, Weight};

#[derive(Clone, Copy, Debug)]
pub struct PrintedRow {
    /// `(i, aᵢ)` pairs, 1-based.
    pub weight: &'static [(usize, u32)],
    pub partition: &'static [usize],
    pub n_lambda: u64,
}

impl PrintedRow {
    pub fn weight(&self, n: usize) -> Weight {
        Weight::from_terms(n, self.weight)
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.partition.to_vec()).expect("printed partitions are valid")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PrintedTable {
    pub case_id: &'static str,
    pub n: usize,
    pub d: usize,
    pub caption: &'static str,
    /// Rows in printed order: left column top to bottom, then right column.
    pub rows: &'static [PrintedRow],
}

impl PrintedTable {
    pub fn spec(&self) -> GroupSpec {
        GroupSpec::new(self.n, self.d).expect("printed tables have valid groups")
    }

    pub fn row_for(&self, w: &Weight) -> Option<&PrintedRow> {
        self.rows.iter().find(|r| r.weight(self.n) == *w)
    }
}

const fn row(
    weight: &'static [(usize, u32)],
    partition: &'static [usize],
    n_lambda: u64,
) -> PrintedRow {
    PrintedRow {
        weight,
        partition,
        n_lambda,
    }
}

pub static SL8_MU2: PrintedTable = PrintedTable {
    case_id: "sl8-mu2",
    n: 8,
    d: 2,
    caption: "second Chern classes of generators of R[SL_8/mu_2]",
    rows: &[
        row(&[(1, 2)], &[2], 16),
        row(&[(2, 1)], &[1, 1], 6),
        row(&[(3, 2)], &[2, 2, 2], 700),
        row(&[(4, 1)], &[1, 1, 1, 1], 20),
        row(&[(5, 2)], &[2, 2, 2, 2, 2], 700),
        row(&[(6, 1)], &[1, 1, 1, 1, 1, 1], 6),
        row(&[(7, 2)], &[2, 2, 2, 2, 2, 2, 2], 10),
        row(&[(1, 1), (3, 1)], &[2, 1, 1], 156),
        row(&[(1, 1), (5, 1)], &[2, 1, 1, 1, 1], 170),
        row(&[(1, 1), (7, 1)], &[2, 1, 1, 1, 1, 1, 1], 16),
        row(&[(3, 1), (5, 1)], &[2, 2, 2, 1, 1], 1344),
        row(&[(3, 1), (7, 1)], &[2, 2, 2, 1, 1, 1, 1], 170),
        row(&[(5, 1), (7, 1)], &[2, 2, 2, 2, 2, 1, 1], 156),
    ],
};

pub static SL9_MU3: PrintedTable = PrintedTable {
    case_id: "sl9-mu3",
    n: 9,
    d: 3,
    caption: "second Chern classes of generators of R[SL_9/mu_3]",
    rows: &[
        row(&[(1, 3)], &[3], 165),
        row(&[(2, 3)], &[3, 3], 3465),
        row(&[(3, 1)], &[1, 1, 1], 21),
        row(&[(4, 3)], &[3, 3, 3, 3], 116424),
        row(&[(5, 3)], &[3, 3, 3, 3, 3], 116424),
        row(&[(6, 1)], &[1, 1, 1, 1, 1, 1], 21),
        row(&[(7, 3)], &[3, 3, 3, 3, 3, 3, 3], 3465),
        row(&[(8, 3)], &[3, 3, 3, 3, 3, 3, 3, 3], 66),
        row(&[(1, 1), (2, 1)], &[2, 1], 78),
        row(&[(1, 1), (5, 1)], &[2, 1, 1, 1, 1], 420),
        row(&[(1, 1), (8, 1)], &[2, 1, 1, 1, 1, 1, 1, 1], 18),
        row(&[(1, 2), (4, 1)], &[3, 1, 1, 1], 2541),
        row(&[(1, 2), (7, 1)], &[3, 1, 1, 1, 1, 1, 1], 693),
        row(&[(2, 1), (4, 1)], &[2, 2, 1, 1], 1701),
        row(&[(2, 1), (7, 1)], &[2, 2, 1, 1, 1, 1, 1], 486),
        row(&[(2, 2), (5, 1)], &[3, 3, 1, 1, 1], 37125),
        row(&[(2, 2), (8, 1)], &[3, 3, 1, 1, 1, 1, 1, 1], 2541),
        row(&[(4, 1), (5, 1)], &[2, 2, 2, 2, 1], 5292),
        row(&[(4, 1), (8, 1)], &[2, 2, 2, 2, 1, 1, 1, 1], 420),
        row(&[(4, 2), (7, 1)], &[3, 3, 3, 3, 1, 1, 1], 117810),
        row(&[(5, 1), (7, 1)], &[2, 2, 2, 2, 2, 1, 1], 1701),
        row(&[(5, 2), (8, 1)], &[3, 3, 3, 3, 3, 1, 1, 1], 29106),
        row(&[(7, 1), (8, 1)], &[2, 2, 2, 2, 2, 2, 2, 1], 78),
    ],
};

pub static PRINTED_TABLES: [&PrintedTable; 2] = [&SL8_MU2, &SL9_MU3];

pub fn printed_table(case_id: &str) -> Option<&'static PrintedTable> {
    PRINTED_TABLES
        .iter()
        .copied()
        .find(|t| t.case_id == case_id)
}

pub fn printed_table_for(spec: &GroupSpec) -> Option<&'static PrintedTable> {
    PRINTED_TABLES
        .iter()
        .copied()
        .find(|t| t.n == spec.n() && t.d == spec.d())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{descends, partition_of};

    #[test]
    fn printed_partitions_match_weights() {
        for table in PRINTED_TABLES {
            for r in table.rows {
                assert_eq!(
                    partition_of(&r.weight(table.n)),
                    r.partition(),
                    "{}",
                    table.case_id
                );
                assert!(descends(&r.partition(), &table.spec()));
            }
        }
    }

    #[test]
    fn row_counts() {
        assert_eq!(SL8_MU2.rows.len(), 13);
        assert_eq!(SL9_MU3.rows.len(), 23);
    }

    #[test]
    fn lookup() {
        assert_eq!(printed_table("sl9-mu3").unwrap().n, 9);
        assert!(printed_table("sl4-mu2").is_none());
        let spec = GroupSpec::new(8, 2).unwrap();
        assert_eq!(printed_table_for(&spec).unwrap().case_id, "sl8-mu2");
    }
}
