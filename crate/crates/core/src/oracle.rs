//! Brute-force reference implementations.
//!
//! Everything here counts by direct construction and deliberately avoids
//! the series machinery, so the two sides can check each other. Exhaustive
//! enumeration is practical up to weight about 20; beyond that use the
//! series-based counters.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::Int;

/// A plane partition: rows of positive integers, weakly decreasing along
/// every row and down every column, with weakly decreasing row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    /// Validates and wraps the given rows. The empty array is the unique
    /// plane partition of weight zero.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidPlanePartition("empty row"));
            }
            if row.contains(&0) {
                return Err(Error::InvalidPlanePartition("zero entry"));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPlanePartition("row increases"));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidPlanePartition("row length grows"));
                }
                if row.iter().zip(above).any(|(lo, hi)| lo > hi) {
                    return Err(Error::InvalidPlanePartition("column increases"));
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Sum of all entries.
    pub fn weight(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|&e| u64::from(e))
            .sum()
    }

    /// Sum of the diagonal entries `rows[i][i]` that exist.
    pub fn trace(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.get(i))
            .map(|&e| u64::from(e))
            .sum()
    }
}

/// Renders as a JSON array of arrays, e.g. `[[2,1],[1]]`.
impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Number of ordinary partitions of `n`, by the bounded-part recurrence
/// (count partitions into parts <= m, one part size at a time). No series
/// and no pentagonal-number shortcut, so this is independent of the
/// generating-function path.
pub fn count_partitions(n: usize) -> Int {
    let mut table = vec![Int::ZERO; n + 1];
    table[0] = Int::from(1);
    for part in 1..=n {
        for total in part..=n {
            let prev = table[total - part].clone();
            table[total] += prev;
        }
    }
    table.pop().expect("table is nonempty")
}

/// All plane partitions of weight `n`, deterministically ordered: at every
/// level the candidate rows are generated in descending lexicographic
/// order, so the overall sequence is stable across runs.
pub fn enumerate_plane_partitions(n: usize) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = Vec::new();
    extend(n, None, &mut stack, &mut out);
    out
}

fn extend(
    remaining: usize,
    prev: Option<&[u32]>,
    stack: &mut Vec<Vec<u32>>,
    out: &mut Vec<PlanePartition>,
) {
    if remaining == 0 {
        out.push(PlanePartition {
            rows: stack.clone(),
        });
        return;
    }
    for row in dominated_rows(prev, remaining) {
        let used: usize = row.iter().map(|&e| e as usize).sum();
        let bound = row.clone();
        stack.push(row);
        extend(remaining - used, Some(&bound), stack, out);
        stack.pop();
    }
}

/// Nonempty weakly decreasing rows bounded entrywise and in length by
/// `prev` (unbounded for the first row), with weight at most `max_weight`,
/// in descending lexicographic order.
fn dominated_rows(prev: Option<&[u32]>, max_weight: usize) -> Vec<Vec<u32>> {
    let mut acc = Vec::new();
    let mut cur = Vec::new();
    grow_row(prev, max_weight, &mut cur, &mut acc);
    acc
}

fn grow_row(
    prev: Option<&[u32]>,
    weight_left: usize,
    cur: &mut Vec<u32>,
    acc: &mut Vec<Vec<u32>>,
) {
    let pos = cur.len();
    let len_ok = prev.map_or(true, |p| pos < p.len());
    if len_ok && weight_left > 0 {
        let mut cap = weight_left.min(u32::MAX as usize) as u32;
        if let Some(p) = prev {
            cap = cap.min(p[pos]);
        }
        if pos > 0 {
            cap = cap.min(cur[pos - 1]);
        }
        // Larger continuations first keeps the order descending-lex.
        for v in (1..=cap).rev() {
            cur.push(v);
            grow_row(prev, weight_left - v as usize, cur, acc);
            cur.pop();
        }
    }
    if pos > 0 {
        acc.push(cur.clone());
    }
}

/// Counts plane partitions of weight `n` keyed by trace.
pub fn trace_histogram(n: usize) -> BTreeMap<u64, Int> {
    let mut hist = BTreeMap::new();
    for pp in enumerate_plane_partitions(n) {
        *hist.entry(pp.trace()).or_insert(Int::ZERO) += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn pp(rows: &[&[u32]]) -> PlanePartition {
        PlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partition_counts_start_one_one_two() {
        let expect = [1u32, 1, 2, 3, 5, 7, 11];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(count_partitions(n), Int::from(e), "p({n})");
        }
    }

    #[test]
    fn five_has_seven_partitions() {
        assert_eq!(count_partitions(5), Int::from(7));
    }

    #[test]
    fn weight_and_trace_of_a_small_example() {
        let p = pp(&[&[2, 1], &[1]]);
        assert_eq!(p.weight(), 4);
        assert_eq!(p.trace(), 2);
        assert_eq!(p.to_string(), "[[2,1],[1]]");
    }

    #[test]
    fn trace_skips_missing_diagonal_cells() {
        // Second row too short to reach the diagonal.
        let p = pp(&[&[3, 1], &[1]]);
        assert_eq!(p.trace(), 3);
        let single = pp(&[&[2, 2]]);
        assert_eq!(single.trace(), 2);
    }

    #[test]
    fn empty_partition_is_valid_with_weight_zero() {
        let p = PlanePartition::new(Vec::new()).unwrap();
        assert_eq!(p.weight(), 0);
        assert_eq!(p.trace(), 0);
        assert_eq!(p.to_string(), "[]");
    }

    #[test]
    fn invalid_arrays_are_rejected() {
        assert!(PlanePartition::new(vec![vec![1, 2]]).is_err());
        assert!(PlanePartition::new(vec![vec![1], vec![2]]).is_err());
        assert!(PlanePartition::new(vec![vec![1], vec![1, 1]]).is_err());
        assert!(PlanePartition::new(vec![vec![2, 0]]).is_err());
        assert!(PlanePartition::new(vec![vec![]]).is_err());
    }

    #[test]
    fn enumeration_counts_match_known_values() {
        let expect = [1usize, 1, 3, 6, 13, 24];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(enumerate_plane_partitions(n).len(), e, "pp({n})");
        }
    }

    #[test]
    fn enumeration_yields_valid_distinct_partitions() {
        for n in 0..=7 {
            let all = enumerate_plane_partitions(n);
            let mut seen = HashSet::new();
            for p in &all {
                assert_eq!(p.weight(), n as u64);
                assert!(PlanePartition::new(p.rows().to_vec()).is_ok());
                assert!(seen.insert(p.rows().to_vec()), "duplicate {p}");
            }
        }
    }

    #[test]
    fn enumeration_order_is_descending_lex_on_first_rows() {
        let all = enumerate_plane_partitions(3);
        let rows: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            rows,
            vec![
                "[[3]]",
                "[[2,1]]",
                "[[2],[1]]",
                "[[1,1,1]]",
                "[[1,1],[1]]",
                "[[1],[1],[1]]",
            ]
        );
    }

    #[test]
    fn the_thirteen_weight_four_partitions() {
        let expected: HashSet<Vec<Vec<u32>>> = [
            vec![vec![4]],
            vec![vec![3, 1]],
            vec![vec![2, 2]],
            vec![vec![2, 1, 1]],
            vec![vec![1, 1, 1, 1]],
            vec![vec![3], vec![1]],
            vec![vec![2], vec![2]],
            vec![vec![2, 1], vec![1]],
            vec![vec![1, 1], vec![1, 1]],
            vec![vec![1, 1, 1], vec![1]],
            vec![vec![1, 1], vec![1], vec![1]],
            vec![vec![2], vec![1], vec![1]],
            vec![vec![1], vec![1], vec![1], vec![1]],
        ]
        .into_iter()
        .collect();
        let got: HashSet<Vec<Vec<u32>>> = enumerate_plane_partitions(4)
            .into_iter()
            .map(|p| p.rows().to_vec())
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn weight_four_trace_two_count_is_six() {
        assert_eq!(trace_histogram(4)[&2], Int::from(6));
        assert_eq!(trace_histogram(5)[&2], Int::from(10));
    }

    #[test]
    fn single_row_partitions_embed_ordinary_partitions() {
        for n in 1..=8 {
            let single = enumerate_plane_partitions(n)
                .iter()
                .filter(|p| p.rows().len() == 1)
                .count();
            assert_eq!(Int::from(single as u32), count_partitions(n), "n = {n}");
        }
    }
}
