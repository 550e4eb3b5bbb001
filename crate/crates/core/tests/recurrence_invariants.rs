use gridtrees::cyl_transfer::build_cylinder_system;
use gridtrees::path_transfer::build_transfer_matrix;
use gridtrees::recurrence::{
    annihilates, char_poly, generating_function, minimal_recurrence_from_terms, IntPolynomial,
    RecurrenceError,
};
use gridtrees::setpart::bell_number;
use gridtrees::system::{build_system, ProductSystem, SizeLimits};
use gridtrees::{BaseGraph, BigInt, Topology};

fn dense(sys: &ProductSystem) -> Vec<Vec<BigInt>> {
    sys.matrix()
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}

fn terms(sys: &ProductSystem, n: usize) -> Vec<BigInt> {
    sys.tree_sequence(n).into_iter().map(BigInt::from).collect()
}

fn small_families() -> Vec<(BaseGraph, Topology)> {
    let mut out: Vec<(BaseGraph, Topology)> = (1..=4)
        .map(|k| (BaseGraph::path(k).unwrap(), Topology::Path))
        .collect();
    out.push((BaseGraph::cycle(3).unwrap(), Topology::Path));
    out.push((BaseGraph::cycle(4).unwrap(), Topology::Path));
    out.push((BaseGraph::complete(3).unwrap(), Topology::Path));
    out.push((BaseGraph::complete(4).unwrap(), Topology::Path));
    out.push((BaseGraph::path(1).unwrap(), Topology::Cycle));
    out.push((BaseGraph::path(2).unwrap(), Topology::Cycle));
    out
}

#[test]
fn minimal_polynomial_divides_charpoly() {
    for (base, topology) in small_families() {
        let sys = build_system(&base, topology, SizeLimits::default()).unwrap();
        let p = char_poly(&dense(&sys)).unwrap();
        assert!(p.is_monic());
        assert_eq!(p.degree(), Some(sys.matrix().dim()));
        let dim = sys.matrix().dim();
        let t = terms(&sys, 2 * dim + 4);
        let r = minimal_recurrence_from_terms(&t, dim).unwrap();
        assert!(
            r.polynomial().divides(&p),
            "{} {topology}: {} does not divide {p}",
            base.name(),
            r.polynomial()
        );
    }
}

#[test]
fn cayley_hamilton_on_sequences() {
    for (base, topology) in small_families() {
        let sys = build_system(&base, topology, SizeLimits::default()).unwrap();
        let p = char_poly(&dense(&sys)).unwrap();
        assert!(
            annihilates(&p, &terms(&sys, 2 * sys.matrix().dim())),
            "{} {topology}",
            base.name()
        );
    }
}

#[test]
fn a3_charpoly_contains_g3_recurrence() {
    let sys = build_transfer_matrix(&BaseGraph::path(3).unwrap()).unwrap();
    let m: Vec<Vec<BigInt>> = sys
        .matrix()
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let p = char_poly(&m).unwrap();
    let g3 = IntPolynomial::from_i64(&[1, -15, 32, -15, 1]);
    let (_, rem) = p.div_rem_monic(&g3);
    assert_eq!(p.degree(), Some(5));
    assert!(rem.is_zero(), "{p} mod {g3} = {rem}");
}

#[test]
fn dense_charpoly_is_capped() {
    let sys = build_cylinder_system(&BaseGraph::path(3).unwrap()).unwrap();
    let m: Vec<Vec<BigInt>> = sys
        .matrix()
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    assert_eq!(
        char_poly(&m),
        Err(RecurrenceError::DimensionLimit { dim: 203, max: 200 })
    );
}

#[test]
fn extra_terms_do_not_change_the_answer() {
    for (base, topology, max_order) in [
        (BaseGraph::path(3).unwrap(), Topology::Path, 6),
        (BaseGraph::path(4).unwrap(), Topology::Path, 10),
        (BaseGraph::complete(4).unwrap(), Topology::Path, 6),
        (BaseGraph::path(2).unwrap(), Topology::Cycle, 8),
    ] {
        let sys = build_system(&base, topology, SizeLimits::default()).unwrap();
        let base_len = 2 * max_order + 4;
        let first = minimal_recurrence_from_terms(&terms(&sys, base_len), max_order).unwrap();
        for extra in [1, 7, 30] {
            let again =
                minimal_recurrence_from_terms(&terms(&sys, base_len + extra), max_order).unwrap();
            assert_eq!(first, again);
        }
    }
}

#[test]
fn orders_respect_state_count_and_gfs_expand() {
    for (base, topology) in small_families() {
        let sys = build_system(&base, topology, SizeLimits::default()).unwrap();
        let m = if topology == Topology::Path {
            base.k()
        } else {
            2 * base.k()
        };
        let bound = bell_number(m) as usize;
        let t = terms(&sys, 2 * bound + 4);
        let r = minimal_recurrence_from_terms(&t, bound).unwrap();
        assert!(r.order() <= bound);
        let gf = generating_function(&r);
        assert_eq!(gf.denominator.coeff(0), BigInt::from(1));
        assert_eq!(gf.expand(t.len()), t);
    }
}
