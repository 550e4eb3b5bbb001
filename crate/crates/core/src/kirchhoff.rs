//! Spanning-tree counts from the Matrix-Tree theorem, using exact
//! fraction-free elimination. Parallel edges are distinct edges.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::graphs::Multigraph;

/// Reduced Laplacian: the Laplacian with one vertex's row and column removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMinor {
    pub dim: usize,
    pub entries: Vec<Vec<BigInt>>,
}

/// Full Laplacian with edge multiplicities. Loops are ignored.
pub fn laplacian<G: Multigraph + ?Sized>(g: &G) -> Vec<Vec<BigInt>> {
    let n = g.vertex_count();
    let mut l = vec![vec![0i64; n]; n];
    for &(a, b) in g.edge_list() {
        if a == b {
            continue;
        }
        l[a][a] += 1;
        l[b][b] += 1;
        l[a][b] -= 1;
        l[b][a] -= 1;
    }
    l.into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect()
}

/// Laplacian with row and column `deleted` removed.
pub fn laplacian_minor<G: Multigraph + ?Sized>(g: &G, deleted: usize) -> LaplacianMinor {
    let full = laplacian(g);
    assert!(deleted < full.len(), "vertex {deleted} out of range");
    for row in &full {
        assert!(
            row.iter().sum::<BigInt>().is_zero(),
            "Laplacian row does not sum to zero"
        );
    }
    let entries: Vec<Vec<BigInt>> = full
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != deleted)
        .map(|(_, row)| {
            row.into_iter()
                .enumerate()
                .filter(|&(j, _)| j != deleted)
                .map(|(_, x)| x)
                .collect()
        })
        .collect();
    LaplacianMinor {
        dim: entries.len(),
        entries,
    }
}

pub fn det_fraction_free(m: &LaplacianMinor) -> BigInt {
    determinant(m.entries.clone())
}

/// Bareiss elimination; every division is exact.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Number of spanning trees; 1 for a single vertex, 0 when disconnected.
pub fn spanning_tree_count<G: Multigraph + ?Sized>(g: &G) -> BigUint {
    if g.vertex_count() <= 1 {
        return BigUint::one();
    }
    let det = det_fraction_free(&laplacian_minor(g, g.vertex_count() - 1));
    debug_assert!(!det.is_negative());
    det.to_biguint()
        .expect("Laplacian cofactors are non-negative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_product, BaseGraph, Topology};
    use crate::setpart::UnionFind;

    struct Raw(usize, Vec<(usize, usize)>);
    impl Multigraph for Raw {
        fn vertex_count(&self) -> usize {
            self.0
        }
        fn edge_list(&self) -> &[(usize, usize)] {
            &self.1
        }
    }

    fn brute_force<G: Multigraph + ?Sized>(g: &G) -> u64 {
        let (n, edges) = (g.vertex_count(), g.edge_list());
        (0u32..1 << edges.len())
            .filter(|mask| mask.count_ones() as usize + 1 == n)
            .filter(|mask| {
                let mut uf = UnionFind::new(n);
                edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .all(|(_, &(a, b))| uf.union(a, b))
            })
            .count() as u64
    }

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(big(&[&[5]])), BigInt::from(5));
        assert_eq!(determinant(big(&[&[2, -1], &[-1, 2]])), BigInt::from(3));
        assert_eq!(determinant(big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(big(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(
            determinant(big(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]])),
            BigInt::from(-3)
        );
        assert_eq!(determinant(vec![]), BigInt::one());
    }

    #[test]
    fn grid_2x2_minor() {
        let g = build_product(&BaseGraph::path(2).unwrap(), 2, Topology::Path).unwrap();
        let expected = brute_force(&g);
        assert_eq!(expected, 4);
        assert_eq!(
            det_fraction_free(&laplacian_minor(&g, 3)),
            BigInt::from(expected)
        );
    }

    #[test]
    fn known_counts() {
        let c4 = BaseGraph::cycle(4).unwrap();
        assert_eq!(spanning_tree_count(&c4), BigUint::from(4u32));
        assert_eq!(
            spanning_tree_count(&BaseGraph::complete(4).unwrap()),
            BigUint::from(16u32)
        );
        let g23 = build_product(&BaseGraph::path(2).unwrap(), 3, Topology::Path).unwrap();
        assert_eq!(spanning_tree_count(&g23), BigUint::from(15u32));
        assert_eq!(
            spanning_tree_count(&BaseGraph::path(1).unwrap()),
            BigUint::one()
        );
        assert_eq!(spanning_tree_count(&Raw(3, vec![(0, 1)])), BigUint::zero());
    }

    #[test]
    fn minor_shape() {
        let m = laplacian_minor(&BaseGraph::complete(3).unwrap(), 0);
        assert_eq!(m.entries, big(&[&[2, -1], &[-1, 2]]));
        for i in 0..m.dim {
            for j in 0..m.dim {
                assert_eq!(m.entries[i][j], m.entries[j][i]);
                if i != j {
                    assert!(m.entries[i][j] <= BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn cofactor_choice_is_irrelevant() {
        let graphs = [
            build_product(&BaseGraph::path(2).unwrap(), 4, Topology::Path).unwrap(),
            build_product(&BaseGraph::path(2).unwrap(), 3, Topology::Cycle).unwrap(),
            build_product(&BaseGraph::complete(3).unwrap(), 2, Topology::Cycle).unwrap(),
            build_product(&BaseGraph::path(4).unwrap(), 2, Topology::Path).unwrap(),
        ];
        for g in &graphs {
            let first = det_fraction_free(&laplacian_minor(g, 0));
            for v in 1..g.vertex_count() {
                assert_eq!(det_fraction_free(&laplacian_minor(g, v)), first);
            }
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut graphs: Vec<Box<dyn Multigraph>> = Vec::new();
        for (base, n, t) in [
            (BaseGraph::path(2).unwrap(), 2, Topology::Path),
            (BaseGraph::path(2).unwrap(), 2, Topology::Cycle),
            (BaseGraph::path(2).unwrap(), 3, Topology::Path),
            (BaseGraph::path(3).unwrap(), 2, Topology::Path),
            (BaseGraph::path(2).unwrap(), 3, Topology::Cycle),
            (BaseGraph::complete(3).unwrap(), 2, Topology::Path),
        ] {
            graphs.push(Box::new(build_product(&base, n, t).unwrap()));
        }
        graphs.push(Box::new(BaseGraph::complete(4).unwrap()));
        graphs.push(Box::new(Raw(
            4,
            vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
        )));
        for g in &graphs {
            assert!(g.edge_list().len() <= 10);
            assert_eq!(
                spanning_tree_count(g.as_ref()),
                BigUint::from(brute_force(g.as_ref()))
            );
        }
    }

    #[test]
    fn grid_transpose_symmetry() {
        for k in 1..=4 {
            for n in 1..=4 {
                let a = build_product(&BaseGraph::path(k).unwrap(), n, Topology::Path).unwrap();
                let b = build_product(&BaseGraph::path(n).unwrap(), k, Topology::Path).unwrap();
                assert_eq!(spanning_tree_count(&a), spanning_tree_count(&b));
            }
        }
    }
}
