//! Transfer matrices for `G x P_n`.
//!
//! States are partitions of the last layer `[k]`: entry `r` of the state
//! vector after `n` layers counts the spanning forests of `G x P_n` whose
//! trees each touch the last layer and split it according to partition `r`.
//! The single-block partition has rank 1, so `T_n` is the first entry.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graphs::BaseGraph;
use crate::setpart::{
    enumerate_partitions, merge_under_edges, Merge, PartitionIndex, SetPartition,
};
use crate::transfer::{
    build_columns, check_size, FrontierStep, Rejection, StateIter, Step, TransferError,
    TransferMatrix,
};

/// Largest base accepted by default (`B_7 = 877` states).
pub const MAX_PATH_K: usize = 7;

/// Frontier edges for a path step over a base with `k` vertices: rung `i`
/// joins old element `i` to new element `k+i`.
pub fn frontier_step(base: &BaseGraph) -> Result<FrontierStep, TransferError> {
    FrontierStep::new(base, base.k(), 1)
}

/// Pushes `p` (a partition of the old frontier `[k]`) across one layer using
/// the frontier edges with indices `chosen`.
pub fn transfer_step(
    frontier: &FrontierStep,
    p: &SetPartition,
    chosen: &[usize],
) -> Result<Step, TransferError> {
    assert_eq!(
        p.m(),
        frontier.k(),
        "partition must live on the old frontier"
    );
    Ok(step_edges(frontier.k(), p, &frontier.select(chosen))?)
}

fn step_edges(
    k: usize,
    p: &SetPartition,
    edges: &[(usize, usize)],
) -> Result<Step, crate::setpart::SetPartError> {
    let merged = match merge_under_edges(p, k, edges)? {
        Merge::Cycle => return Ok(Step::Rejected(Rejection::Cycle)),
        Merge::Merged(q) => q,
    };
    // a block made only of old elements never reaches the new frontier
    let labels = merged.labels();
    let mut reaches_new = vec![false; merged.len()];
    for &l in &labels[k..] {
        reaches_new[l as usize] = true;
    }
    if reaches_new.iter().any(|&r| !r) {
        return Ok(Step::Rejected(Rejection::Stranded));
    }
    Ok(Step::To(SetPartition::from_assignment(&labels[k..])))
}

#[derive(Debug, Clone)]
pub struct TransferSystem {
    base: BaseGraph,
    index: PartitionIndex,
    frontier: FrontierStep,
    matrix: TransferMatrix,
    v1: Vec<BigUint>,
    full_rank: usize,
}

pub fn build_transfer_matrix(base: &BaseGraph) -> Result<TransferSystem, TransferError> {
    build_transfer_matrix_with_limit(base, MAX_PATH_K)
}

/// As [`build_transfer_matrix`] with a different ceiling on `k`
/// (never above the partition enumeration ceiling).
pub fn build_transfer_matrix_with_limit(
    base: &BaseGraph,
    max_k: usize,
) -> Result<TransferSystem, TransferError> {
    let k = base.k();
    check_size(k, max_k, k)?;
    let frontier = frontier_step(base)?;
    let index = enumerate_partitions(k)?;

    let columns = build_columns(index.len(), &frontier, |src, edges| {
        let p = index.get(src).expect("rank in range");
        match step_edges(k, p, edges).expect("frontier endpoints are in range") {
            Step::To(q) => Some(
                index
                    .rank_of_key(q.key())
                    .expect("every partition is indexed"),
            ),
            Step::Rejected(_) => None,
        }
    });
    let matrix = TransferMatrix::from_columns(index.len(), columns);

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
            v1[index.rank(&q).expect("indexed") - 1] += 1u32;
        }
    }

    let full_rank = index.rank(&SetPartition::one_block(k)).expect("indexed");
    Ok(TransferSystem {
        base: base.clone(),
        index,
        frontier,
        matrix,
        v1,
        full_rank,
    })
}

impl TransferSystem {
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

    /// Forest counts of the single layer `G x P_1`, by induced partition.
    pub fn v1(&self) -> &[BigUint] {
        &self.v1
    }

    /// Rank of the single-block partition.
    pub fn full_rank(&self) -> usize {
        self.full_rank
    }

    /// `v1, M v1, M^2 v1, …`: the forest-count vectors for `n = 1, 2, 3, …`.
    pub fn states(&self) -> StateIter<'_> {
        StateIter::new(&self.matrix, self.v1.clone())
    }

    /// `M^(n-1) v1`.
    pub fn forest_counts(&self, n: usize) -> Vec<BigUint> {
        assert!(n >= 1, "n counts layers from 1");
        self.states()
            .nth(n - 1)
            .expect("state iterator is infinite")
    }

    /// `T_1 ..= T_terms`.
    pub fn tree_sequence(&self, terms: usize) -> Vec<BigUint> {
        self.states()
            .take(terms)
            .map(|v| v[self.full_rank - 1].clone())
            .collect()
    }
}

pub fn tree_sequence(base: &BaseGraph, terms: usize) -> Result<Vec<BigUint>, TransferError> {
    Ok(build_transfer_matrix(base)?.tree_sequence(terms))
}

pub fn forest_counts(base: &BaseGraph, n: usize) -> Result<Vec<BigUint>, TransferError> {
    Ok(build_transfer_matrix(base)?.forest_counts(n))
}

/// Total number of acyclic edge subsets of `base` (spanning forests).
pub fn forest_total(base: &BaseGraph) -> BigUint {
    let singletons = SetPartition::singletons(base.k());
    let layer: Vec<(usize, usize)> = base.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    let mut total = BigUint::zero();
    for mask in 0u64..1 << layer.len() {
        let chosen: Vec<_> = layer
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if let Ok(Merge::Merged(_)) = merge_under_edges(&singletons, 0, &chosen) {
            total += BigUint::one();
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_product, Topology};
    use crate::kirchhoff::spanning_tree_count;

    fn nums(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn step_examples() {
        let f = frontier_step(&BaseGraph::path(2).unwrap()).unwrap();
        let all = [f.rung(1), f.rung(2), f.layer_edge(0)];
        assert_eq!(
            transfer_step(&f, &part("1/2"), &all).unwrap(),
            Step::To(part("12"))
        );
        assert_eq!(
            transfer_step(&f, &part("1/2"), &[f.rung(1), f.layer_edge(0)]).unwrap(),
            Step::Rejected(Rejection::Stranded)
        );
        assert_eq!(
            transfer_step(&f, &part("12"), &all).unwrap(),
            Step::Rejected(Rejection::Cycle)
        );
        assert_eq!(
            transfer_step(&f, &part("12"), &[f.rung(2)]).unwrap(),
            Step::To(part("1/2"))
        );
    }

    #[test]
    fn a2() {
        let sys = build_transfer_matrix(&BaseGraph::path(2).unwrap()).unwrap();
        assert_eq!(sys.matrix().to_dense(), vec![vec![3, 1], vec![2, 1]]);
        assert_eq!(nums(sys.v1()), [1, 1]);
        assert_eq!(sys.full_rank(), 1);
        assert_eq!(nums(&sys.forest_counts(1)), [1, 1]);
        assert_eq!(nums(&sys.forest_counts(2)), [4, 3]);
    }

    #[test]
    fn a3_first_row() {
        let sys = build_transfer_matrix(&BaseGraph::path(3).unwrap()).unwrap();
        assert_eq!(sys.matrix().to_dense()[0], vec![8, 3, 3, 4, 1]);
    }

    #[test]
    fn complete3_initial_vector() {
        // acyclic subsets of K3: {} -> 1/2/3, each single edge -> its pair,
        // each of the 3 two-edge paths -> 123
        let sys = build_transfer_matrix(&BaseGraph::complete(3).unwrap()).unwrap();
        assert_eq!(nums(sys.v1()), [3, 1, 1, 1, 1]);
        assert_eq!(sys.v1().iter().sum::<BigUint>(), forest_total(sys.base()));
    }

    #[test]
    fn sequences() {
        let g2 = tree_sequence(&BaseGraph::path(2).unwrap(), 5).unwrap();
        assert_eq!(nums(&g2), [1, 4, 15, 56, 209]);
        let g3 = tree_sequence(&BaseGraph::path(3).unwrap(), 5).unwrap();
        assert_eq!(nums(&g3), [1, 15, 192, 2415, 30305]);
        let base = BaseGraph::complete(3).unwrap();
        let prism = build_product(&base, 2, Topology::Path).unwrap();
        let expect = [spanning_tree_count(&base), spanning_tree_count(&prism)];
        assert_eq!(nums(&expect), [3, 75]);
        assert_eq!(tree_sequence(&base, 2).unwrap(), expect);
    }

    #[test]
    fn single_vertex_base() {
        let sys = build_transfer_matrix(&BaseGraph::path(1).unwrap()).unwrap();
        assert_eq!(sys.matrix().to_dense(), vec![vec![1]]);
        assert_eq!(nums(&sys.tree_sequence(4)), [1, 1, 1, 1]);
    }

    #[test]
    fn size_limit() {
        let err = build_transfer_matrix(&BaseGraph::path(8).unwrap()).unwrap_err();
        assert_eq!(
            err,
            TransferError::SizeLimit {
                k: 8,
                max_k: 7,
                m: 8,
                states: 4140
            }
        );
        let small = BaseGraph::path(3).unwrap();
        assert!(matches!(
            build_transfer_matrix_with_limit(&small, 2),
            Err(TransferError::SizeLimit { k: 3, max_k: 2, .. })
        ));
        assert!(build_transfer_matrix_with_limit(&small, 3).is_ok());
    }

    #[test]
    fn structural_invariants() {
        for base in [
            BaseGraph::path(3).unwrap(),
            BaseGraph::cycle(4).unwrap(),
            BaseGraph::complete(4).unwrap(),
        ] {
            let sys = build_transfer_matrix(&base).unwrap();
            let bound = 1u64 << sys.frontier().len();
            let dense = sys.matrix().to_dense();
            for row in &dense {
                assert!(row.iter().all(|&c| c <= bound));
            }
            assert!(dense[sys.full_rank() - 1].iter().all(|&c| c >= 1));
            assert_eq!(sys.v1().iter().sum::<BigUint>(), forest_total(&base));
            assert_eq!(sys.frontier().len(), base.k() + base.edges().len());
        }
    }

    #[test]
    fn relabeling_gives_permutation_similar_matrix() {
        let base = BaseGraph::from_edges(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let perm = [2, 0, 3, 1];
        let moved = base.relabel(&perm);
        let (a, b) = (
            build_transfer_matrix(&base).unwrap(),
            build_transfer_matrix(&moved).unwrap(),
        );
        let image = |p: &SetPartition| {
            let mut assignment = vec![0u8; 4];
            for (e, &l) in p.labels().iter().enumerate() {
                assignment[perm[e]] = l;
            }
            b.index()
                .rank(&SetPartition::from_assignment(&assignment))
                .unwrap()
        };
        for (i, pi) in a.index().iter().enumerate() {
            for (j, pj) in a.index().iter().enumerate() {
                assert_eq!(
                    a.matrix().get(i + 1, j + 1),
                    b.matrix().get(image(pi), image(pj))
                );
            }
        }
        assert_eq!(a.tree_sequence(6), b.tree_sequence(6));
    }
}
