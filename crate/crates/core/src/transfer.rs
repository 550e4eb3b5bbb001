//! Pieces shared by the path and cylinder transfer systems.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::graphs::BaseGraph;
use crate::setpart::{bell_number, SetPartError, SetPartition};

/// Environment variable that caps the worker threads used to build matrices.
pub const THREADS_ENV: &str = "GRIDTREES_THREADS";

/// Frontier edge subsets are enumerated as bitmasks.
pub const MAX_FRONTIER_EDGES: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("k = {k} exceeds the limit k <= {max_k}: the state space would have B_{m} = {states} partitions")]
    SizeLimit {
        k: usize,
        max_k: usize,
        m: usize,
        states: u128,
    },
    #[error("{count} frontier edges per layer; at most {max} can be enumerated")]
    TooManyFrontierEdges { count: usize, max: usize },
    #[error(transparent)]
    Partition(#[from] SetPartError),
}

pub(crate) fn check_size(k: usize, max_k: usize, m: usize) -> Result<(), TransferError> {
    if k == 0 || k > max_k || m > crate::setpart::MAX_GROUND_SET {
        return Err(TransferError::SizeLimit {
            k,
            max_k,
            m,
            states: bell_number(m),
        });
    }
    Ok(())
}

/// Result of pushing a partition across one layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    To(SetPartition),
    Rejected(Rejection),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    /// The chosen edges close a cycle.
    Cycle,
    /// Some tree lost contact with every frontier and can never be reconnected.
    Stranded,
}

/// Edges added when a new layer of `k` vertices is attached: `k` rungs from
/// the old frontier to the new vertices, then a copy of the base edges among
/// the new vertices. Endpoints are 1-based elements of `[old + k]`, where the
/// new vertices are `old+1 ..= old+k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierStep {
    k: usize,
    old: usize,
    edges: Vec<(usize, usize)>,
}

impl FrontierStep {
    /// `rung_from` is the first old element that carries a rung
    /// (`1` for paths, `k+1` for cylinders); `old` is the old ground set size.
    pub(crate) fn new(
        base: &BaseGraph,
        old: usize,
        rung_from: usize,
    ) -> Result<Self, TransferError> {
        let k = base.k();
        let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (rung_from + i, old + 1 + i)).collect();
        edges.extend(
            base.edges()
                .iter()
                .map(|&(a, b)| (old + 1 + a, old + 1 + b)),
        );
        if edges.len() > MAX_FRONTIER_EDGES {
            return Err(TransferError::TooManyFrontierEdges {
                count: edges.len(),
                max: MAX_FRONTIER_EDGES,
            });
        }
        Ok(FrontierStep { k, old, edges })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Size of the ground set before the step.
    pub fn old(&self) -> usize {
        self.old
    }

    /// Rungs first (`rung(i)` is index `i-1`), then the layer's base edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Index of the rung attached to row `i` (1-based).
    pub fn rung(&self, i: usize) -> usize {
        assert!((1..=self.k).contains(&i));
        i - 1
    }

    /// Index of the `e`-th base edge (0-based, in base order).
    pub fn layer_edge(&self, e: usize) -> usize {
        self.k + e
    }

    pub(crate) fn select(&self, chosen: &[usize]) -> Vec<(usize, usize)> {
        chosen.iter().map(|&i| self.edges[i]).collect()
    }

    pub(crate) fn select_mask(&self, mask: u64, out: &mut Vec<(usize, usize)>) {
        out.clear();
        out.extend(
            self.edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        );
    }
}

/// Square matrix of small non-negative counts, stored by rows. Indices are
/// 1-based in the public accessors to match partition ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    dim: usize,
    rows: Vec<Vec<(u32, u64)>>,
}

impl TransferMatrix {
    /// Assembles a matrix from per-column `(row, count)` lists (0-based).
    pub(crate) fn from_columns(dim: usize, columns: Vec<Vec<(u32, u64)>>) -> Self {
        let mut rows = vec![Vec::new(); dim];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, c) in col {
                rows[i as usize].push((j as u32, c));
            }
        }
        TransferMatrix { dim, rows }
    }

    pub fn from_dense(dense: &[Vec<u64>]) -> Self {
        let dim = dense.len();
        let rows = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), dim, "matrix must be square");
                r.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| (j as u32, c))
                    .collect()
            })
            .collect();
        TransferMatrix { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        let j = (j - 1) as u32;
        self.rows[i - 1]
            .iter()
            .find(|&&(c, _)| c == j)
            .map_or(0, |&(_, v)| v)
    }

    /// Overwrites entry `(i, j)`, 1-based.
    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        let row = &mut self.rows[i - 1];
        let col = (j - 1) as u32;
        row.retain(|&(c, _)| c != col);
        if value != 0 {
            row.push((col, value));
            row.sort_unstable();
        }
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut out = vec![0; self.dim];
                for &(j, c) in r {
                    out[j as usize] = c;
                }
                out
            })
            .collect()
    }

    /// `self * v`.
    pub fn apply(&self, v: &[BigUint]) -> Vec<BigUint> {
        assert_eq!(v.len(), self.dim);
        let row = |r: &Vec<(u32, u64)>| {
            let mut acc = BigUint::zero();
            for &(j, c) in r {
                acc += &v[j as usize] * c;
            }
            acc
        };
        if self.dim >= 256 {
            self.rows.par_iter().map(row).collect()
        } else {
            self.rows.iter().map(row).collect()
        }
    }
}

/// Successive vectors `v, Mv, M^2 v, …`.
pub struct StateIter<'a> {
    matrix: &'a TransferMatrix,
    next: Option<Vec<BigUint>>,
}

impl<'a> StateIter<'a> {
    pub(crate) fn new(matrix: &'a TransferMatrix, start: Vec<BigUint>) -> Self {
        StateIter {
            matrix,
            next: Some(start),
        }
    }
}

impl Iterator for StateIter<'_> {
    type Item = Vec<BigUint>;

    fn next(&mut self) -> Option<Vec<BigUint>> {
        let cur = self.next.take()?;
        self.next = Some(self.matrix.apply(&cur));
        Some(cur)
    }
}

/// Runs `f` on a pool sized by [`THREADS_ENV`] when set, else on the global pool.
pub(crate) fn in_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok());
    match threads.filter(|&t| t > 0) {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

/// Counts step targets by rank over every subset of the frontier edges, for
/// each source rank `1..=dim`.
pub(crate) fn build_columns<F>(dim: usize, frontier: &FrontierStep, step: F) -> Vec<Vec<(u32, u64)>>
where
    F: Fn(usize, &[(usize, usize)]) -> Option<usize> + Sync,
{
    let subsets = 1u64 << frontier.len();
    in_pool(|| {
        (1..=dim)
            .into_par_iter()
            .map(|src| {
                let mut chosen = Vec::with_capacity(frontier.len());
                let mut hits: Vec<u32> = Vec::new();
                for mask in 0..subsets {
                    frontier.select_mask(mask, &mut chosen);
                    if let Some(dst) = step(src, &chosen) {
                        hits.push((dst - 1) as u32);
                    }
                }
                hits.sort_unstable();
                let mut col: Vec<(u32, u64)> = Vec::new();
                for h in hits {
                    match col.last_mut() {
                        Some((r, c)) if *r == h => *c += 1,
                        _ => col.push((h, 1)),
                    }
                }
                col
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip_and_apply() {
        let m = TransferMatrix::from_dense(&[vec![3, 1], vec![2, 1]]);
        assert_eq!(m.get(1, 1), 3);
        assert_eq!(m.get(2, 1), 2);
        assert_eq!(m.to_dense(), vec![vec![3, 1], vec![2, 1]]);
        let v = vec![BigUint::from(1u32), BigUint::from(1u32)];
        assert_eq!(m.apply(&v), vec![BigUint::from(4u32), BigUint::from(3u32)]);
        let mut m2 = m.clone();
        m2.set(1, 2, 0);
        assert_eq!(m2.nonzeros(), 3);
        m2.set(1, 2, 7);
        assert_eq!(m2.get(1, 2), 7);
    }

    #[test]
    fn frontier_layout() {
        let f = FrontierStep::new(&BaseGraph::path(3).unwrap(), 3, 1).unwrap();
        assert_eq!(f.edges(), &[(1, 4), (2, 5), (3, 6), (4, 5), (5, 6)]);
        assert_eq!(f.len(), 2 * 3 - 1);
        let c = FrontierStep::new(&BaseGraph::path(2).unwrap(), 4, 3).unwrap();
        assert_eq!(c.edges(), &[(3, 5), (4, 6), (5, 6)]);
        let big = BaseGraph::complete(8).unwrap();
        assert!(matches!(
            FrontierStep::new(&big, 8, 1),
            Err(TransferError::TooManyFrontierEdges { count: 36, .. })
        ));
    }
}
