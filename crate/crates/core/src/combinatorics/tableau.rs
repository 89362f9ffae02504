//! Streaming enumeration of semistandard Young tableaux.
//!
//! A tableau is never materialised as a whole. The stream keeps one filling
//! of the diagram and advances it to its lexicographic successor (in
//! row-major reading order), so memory stays at O(|λ| + n) however many
//! tableaux there are. Each step yields the *content* of the current
//! tableau, which is all the Chern-class computations need.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::Partition;

/// Multiplicities of the entries 1..=n in one tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauContent {
    counts: Vec<u32>,
}

impl TableauContent {
    /// `counts()[i]` is the multiplicity of the entry `i + 1`.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn into_counts(self) -> Vec<u32> {
        self.counts
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Semistandard tableaux of a fixed shape with entries in 1..=n.
///
/// Rows weakly increase and columns strictly increase. Cells are filled in
/// row-major order; cell `k` ranges over `[lower(k), upper(k)]`, where the
/// lower bound comes from the left and upper neighbours and the upper bound
/// leaves room for the rest of the column. Every value in that range extends
/// to a full tableau, so the successor of a filling is: bump the last cell
/// that is below its upper bound, then reset all later cells to their lower
/// bounds.
#[derive(Clone, Debug)]
pub struct SsytStream {
    n: u32,
    row_len: Vec<usize>,
    /// (row, col, index of the cell above) for every cell.
    cells: Vec<(usize, usize, Option<usize>)>,
    upper: Vec<u32>,
    fill: Vec<u32>,
    counts: Vec<u32>,
    /// Cells before this index are pinned and never advanced.
    start: usize,
    state: State,
}

impl SsytStream {
    pub fn new(n: usize, shape: &Partition) -> Self {
        let mut stream = Self::skeleton(n, shape);
        if shape.len() > n {
            stream.state = State::Done;
        }
        stream
    }

    /// Tableaux whose first row is exactly `first_row`, a weakly increasing
    /// sequence of λ₁ entries. Yields nothing when no tableau has that first
    /// row.
    pub fn with_first_row(n: usize, shape: &Partition, first_row: &[u32]) -> Self {
        let mut stream = Self::skeleton(n, shape);
        let fits = shape.len() <= n
            && first_row.len() == shape.first_row()
            && first_row.windows(2).all(|w| w[0] <= w[1])
            && first_row
                .iter()
                .zip(&stream.upper)
                .all(|(&v, &u)| 1 <= v && v <= u);
        if !fits {
            stream.state = State::Done;
            return stream;
        }
        for (k, &v) in first_row.iter().enumerate() {
            stream.fill[k] = v;
            stream.counts[v as usize - 1] += 1;
        }
        stream.start = first_row.len();
        stream
    }

    /// Split the tableau space into disjoint sub-streams, one per feasible
    /// first row. The sub-streams together yield exactly what
    /// [`SsytStream::new`] yields, in the same order when concatenated.
    pub fn split(n: usize, shape: &Partition) -> Vec<SsytStream> {
        if shape.len() > n {
            return Vec::new();
        }
        if shape.is_empty() {
            return vec![SsytStream::new(n, shape)];
        }
        let first = Partition::new(vec![shape.first_row()]).expect("single row");
        // A first row is feasible iff each entry leaves room for its column.
        let template = Self::skeleton(n, shape);
        let mut rows = Vec::new();
        let mut it = SsytStream::new(n, &first);
        while it.advance() {
            let row = it.fill.clone();
            if row.iter().zip(&template.upper).all(|(&v, &u)| v <= u) {
                rows.push(row);
            }
        }
        rows.iter()
            .map(|row| SsytStream::with_first_row(n, shape, row))
            .collect()
    }

    fn skeleton(n: usize, shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let row_len = shape.parts().to_vec();
        let mut offsets = Vec::with_capacity(row_len.len());
        let mut acc = 0;
        for &r in &row_len {
            offsets.push(acc);
            acc += r;
        }
        let cells: Vec<_> = shape
            .cells()
            .map(|(i, j)| (i, j, (i > 0).then(|| offsets[i - 1] + j)))
            .collect();
        let upper = cells
            .iter()
            .map(|&(i, j, _)| {
                let below = conj.part(j) - 1 - i;
                n.saturating_sub(below) as u32
            })
            .collect();
        let size = cells.len();
        SsytStream {
            n: n as u32,
            row_len,
            cells,
            upper,
            fill: vec![0; size],
            counts: vec![0; n],
            start: 0,
            state: State::Fresh,
        }
    }

    fn lower(&self, k: usize) -> u32 {
        let (_, j, above) = self.cells[k];
        let left = if j > 0 { self.fill[k - 1] } else { 1 };
        let top = above.map_or(1, |a| self.fill[a] + 1);
        left.max(top)
    }

    fn reset_from(&mut self, from: usize) {
        for k in from..self.fill.len() {
            let v = self.lower(k);
            debug_assert!(v <= self.upper[k]);
            self.fill[k] = v;
            self.counts[v as usize - 1] += 1;
        }
    }

    /// Move to the next tableau. Returns false once the stream is exhausted.
    pub fn advance(&mut self) -> bool {
        match self.state {
            State::Done => false,
            State::Fresh => {
                self.reset_from(self.start);
                self.state = State::Running;
                true
            }
            State::Running => {
                let mut k = self.fill.len();
                while k > self.start {
                    k -= 1;
                    self.counts[self.fill[k] as usize - 1] -= 1;
                    if self.fill[k] < self.upper[k] {
                        self.fill[k] += 1;
                        self.counts[self.fill[k] as usize - 1] += 1;
                        self.reset_from(k + 1);
                        return true;
                    }
                }
                self.state = State::Done;
                false
            }
        }
    }

    /// Content of the current tableau; only meaningful after
    /// [`SsytStream::advance`] returned true.
    pub fn current_counts(&self) -> &[u32] {
        &self.counts
    }

    /// The current filling as rows of entries.
    pub fn current_rows(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.row_len.len());
        let mut k = 0;
        for &r in &self.row_len {
            out.push(self.fill[k..k + r].to_vec());
            k += r;
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }
}

impl Iterator for SsytStream {
    type Item = TableauContent;

    fn next(&mut self) -> Option<TableauContent> {
        self.advance().then(|| TableauContent {
            counts: self.counts.clone(),
        })
    }
}

/// Stream the contents of all SSYT of shape `shape` with entries ≤ n.
pub fn ssyt_stream(n: usize, shape: &Partition) -> SsytStream {
    SsytStream::new(n, shape)
}

/// Number of SSYT, counted by walking the stream (in parallel over first rows).
pub fn ssyt_count(n: usize, shape: &Partition) -> BigUint {
    let total: u128 = SsytStream::split(n, shape)
        .into_par_iter()
        .map(|mut s| {
            let mut c = 0u128;
            while s.advance() {
                c += 1;
            }
            c
        })
        .sum();
    BigUint::from(total)
}

/// dim γ_n^λ by the hook-content formula: Π (n + j − i) / Π hook(i, j).
///
/// Zero when λ has more than n rows (the factor n + 0 − n vanishes).
pub fn schur_dimension(n: usize, shape: &Partition) -> BigUint {
    if shape.len() > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    for (i, j) in shape.cells() {
        num *= (n + j - i) as u64;
    }
    let den = shape
        .hooks()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h as u64);
    let (q, r) = (&num / &den, &num % &den);
    assert!(r.is_zero(), "hook-content quotient must be exact");
    q
}
