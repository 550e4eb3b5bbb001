//! Transfer matrices for `G x C_n`.
//!
//! The wrap edges between the first and last layer are removed, and the
//! remaining grid is tracked through partitions of `[2k]`: elements `1..=k`
//! are the first layer, `k+1..=2k` the current last layer. Each tree of a
//! tracked forest must touch one of the two frontiers. The tree-counting
//! vector `d` then says in how many ways wrap edges close a forest with a
//! given partition into a spanning tree.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::graphs::BaseGraph;
use crate::setpart::{
    enumerate_partitions, merge_under_edges, Merge, PartitionIndex, SetPartError, SetPartition,
};
use crate::transfer::{
    build_columns, check_size, FrontierStep, Rejection, StateIter, Step, TransferError,
    TransferMatrix,
};

/// `k = 4` already needs `B_8 = 4140` states.
pub const MAX_CYLINDER_K: usize = 4;

/// Rung `i` joins old right-frontier element `k+i` to new element `2k+i`.
pub fn cyl_frontier_step(base: &BaseGraph) -> Result<FrontierStep, TransferError> {
    FrontierStep::new(base, 2 * base.k(), base.k() + 1)
}

/// Pushes `p` (a partition of `[2k]`) across one layer. Old right-frontier
/// blocks must connect to the new layer; blocks holding a first-layer
/// element may stay disconnected because wrap edges can still reach them.
pub fn cyl_transfer_step(
    frontier: &FrontierStep,
    p: &SetPartition,
    chosen: &[usize],
) -> Result<Step, TransferError> {
    assert_eq!(
        p.m(),
        2 * frontier.k(),
        "partition must live on both frontiers"
    );
    Ok(cyl_step_edges(frontier.k(), p, &frontier.select(chosen))?)
}

fn cyl_step_edges(
    k: usize,
    p: &SetPartition,
    edges: &[(usize, usize)],
) -> Result<Step, SetPartError> {
    let merged = match merge_under_edges(p, k, edges)? {
        Merge::Cycle => return Ok(Step::Rejected(Rejection::Cycle)),
        Merge::Merged(q) => q,
    };
    let labels = merged.labels();
    let mut anchored = vec![false; merged.len()];
    for &l in labels[..k].iter().chain(&labels[2 * k..]) {
        anchored[l as usize] = true;
    }
    if anchored.iter().any(|&a| !a) {
        return Ok(Step::Rejected(Rejection::Stranded));
    }
    let kept: Vec<u8> = labels[..k]
        .iter()
        .chain(&labels[2 * k..])
        .copied()
        .collect();
    Ok(Step::To(SetPartition::from_assignment(&kept)))
}

/// Number of wrap-edge subsets (`{i, k+i}`) that turn the blocks of `p`
/// into a single tree.
pub fn wrap_completions(p: &SetPartition) -> u64 {
    let k = p.m() / 2;
    let wraps: Vec<(usize, usize)> = (1..=k).map(|i| (i, k + i)).collect();
    let mut count = 0;
    for mask in 0u32..1 << k {
        if (mask.count_ones() as usize) + 1 != p.len() {
            continue;
        }
        let chosen: Vec<_> = wraps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if let Ok(Merge::Merged(q)) = merge_under_edges(p, 0, &chosen) {
            if q.len() == 1 {
                count += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone)]
pub struct CylinderSystem {
    base: BaseGraph,
    index: PartitionIndex,
    frontier: FrontierStep,
    matrix: TransferMatrix,
    v1: Vec<BigUint>,
    d: Vec<u64>,
}

pub fn build_cylinder_system(base: &BaseGraph) -> Result<CylinderSystem, TransferError> {
    build_cylinder_system_with_limit(base, MAX_CYLINDER_K)
}

pub fn build_cylinder_system_with_limit(
    base: &BaseGraph,
    max_k: usize,
) -> Result<CylinderSystem, TransferError> {
    let k = base.k();
    check_size(k, max_k, 2 * k)?;
    let frontier = cyl_frontier_step(base)?;
    let index = enumerate_partitions(2 * k)?;

    let columns = build_columns(index.len(), &frontier, |src, edges| {
        let p = index.get(src).expect("rank in range");
        match cyl_step_edges(k, p, edges).expect("frontier endpoints are in range") {
            Step::To(q) => Some(
                index
                    .rank_of_key(q.key())
                    .expect("every partition is indexed"),
            ),
            Step::Rejected(_) => None,
        }
    });
    let matrix = TransferMatrix::from_columns(index.len(), columns);

    // one layer: both frontiers are the same vertices
    let mut v1 = vec![BigUint::zero(); index.len()];
    let layer: Vec<(usize, usize)> = base.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    let singletons = SetPartition::singletons(k);
    for mask in 0u64..1 << layer.len() {
        let chosen: Vec<_> = layer
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if let Merge::Merged(q) = merge_under_edges(&singletons, 0, &chosen)? {
            let doubled: Vec<u8> = q.labels().iter().chain(q.labels()).copied().collect();
            let rank = index
                .rank(&SetPartition::from_assignment(&doubled))
                .expect("indexed");
            v1[rank - 1] += 1u32;
        }
    }

    let d = index.iter().map(wrap_completions).collect();
    Ok(CylinderSystem {
        base: base.clone(),
        index,
        frontier,
        matrix,
        v1,
        d,
    })
}

impl CylinderSystem {
    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn index(&self) -> &PartitionIndex {
        &self.index
    }

    pub fn frontier(&self) -> &FrontierStep {
        &self.frontier
    }

    pub fn matrix(&self) -> &TransferMatrix {
        &self.matrix
    }

    pub fn matrix_mut(&mut self) -> &mut TransferMatrix {
        &mut self.matrix
    }

    pub fn v1(&self) -> &[BigUint] {
        &self.v1
    }

    /// Tree-counting vector, indexed like the partitions.
    pub fn d(&self) -> &[u64] {
        &self.d
    }

    pub fn states(&self) -> StateIter<'_> {
        StateIter::new(&self.matrix, self.v1.clone())
    }

    /// `M^(n-1) v1`: forests of the unwrapped `G x P_n` by two-frontier partition.
    pub fn forest_counts(&self, n: usize) -> Vec<BigUint> {
        assert!(n >= 1, "n counts layers from 1");
        self.states()
            .nth(n - 1)
            .expect("state iterator is infinite")
    }

    fn close(&self, v: &[BigUint]) -> BigUint {
        v.iter()
            .zip(&self.d)
            .filter(|(_, &d)| d != 0)
            .map(|(x, &d)| x * d)
            .sum()
    }

    /// `T_1 ..= T_terms` with `T_n = (M^(n-1) v1) . d`.
    pub fn tree_sequence(&self, terms: usize) -> Vec<BigUint> {
        self.states().take(terms).map(|v| self.close(&v)).collect()
    }
}

pub fn cyl_tree_sequence(base: &BaseGraph, terms: usize) -> Result<Vec<BigUint>, TransferError> {
    Ok(build_cylinder_system(base)?.tree_sequence(terms))
}
