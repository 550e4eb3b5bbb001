//! One handle over the path and cylinder transfer systems.

use num_bigint::BigUint;

use crate::cyl_transfer::{build_cylinder_system_with_limit, CylinderSystem, MAX_CYLINDER_K};
use crate::graphs::{BaseGraph, Topology};
use crate::path_transfer::{build_transfer_matrix_with_limit, TransferSystem, MAX_PATH_K};
use crate::setpart::PartitionIndex;
use crate::transfer::{TransferError, TransferMatrix};

/// Ceilings on the base size `k`, per topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeLimits {
    pub max_path_k: usize,
    pub max_cylinder_k: usize,
}

impl Default for SizeLimits {
    fn default() -> Self {
        SizeLimits {
            max_path_k: MAX_PATH_K,
            max_cylinder_k: MAX_CYLINDER_K,
        }
    }
}

#[derive(Debug, Clone)]
pub enum ProductSystem {
    Path(TransferSystem),
    Cylinder(CylinderSystem),
}

pub fn build_system(
    base: &BaseGraph,
    topology: Topology,
    limits: SizeLimits,
) -> Result<ProductSystem, TransferError> {
    Ok(match topology {
        Topology::Path => {
            ProductSystem::Path(build_transfer_matrix_with_limit(base, limits.max_path_k)?)
        }
        Topology::Cycle => ProductSystem::Cylinder(build_cylinder_system_with_limit(
            base,
            limits.max_cylinder_k,
        )?),
    })
}

impl ProductSystem {
    pub fn topology(&self) -> Topology {
        match self {
            ProductSystem::Path(_) => Topology::Path,
            ProductSystem::Cylinder(_) => Topology::Cycle,
        }
    }

    pub fn base(&self) -> &BaseGraph {
        match self {
            ProductSystem::Path(s) => s.base(),
            ProductSystem::Cylinder(s) => s.base(),
        }
    }

    pub fn index(&self) -> &PartitionIndex {
        match self {
            ProductSystem::Path(s) => s.index(),
            ProductSystem::Cylinder(s) => s.index(),
        }
    }

    pub fn matrix(&self) -> &TransferMatrix {
        match self {
            ProductSystem::Path(s) => s.matrix(),
            ProductSystem::Cylinder(s) => s.matrix(),
        }
    }

    pub fn matrix_mut(&mut self) -> &mut TransferMatrix {
        match self {
            ProductSystem::Path(s) => s.matrix_mut(),
            ProductSystem::Cylinder(s) => s.matrix_mut(),
        }
    }

    pub fn v1(&self) -> &[BigUint] {
        match self {
            ProductSystem::Path(s) => s.v1(),
            ProductSystem::Cylinder(s) => s.v1(),
        }
    }

    /// Tree-counting vector; cylinders only.
    pub fn d(&self) -> Option<&[u64]> {
        match self {
            ProductSystem::Path(_) => None,
            ProductSystem::Cylinder(s) => Some(s.d()),
        }
    }

    pub fn tree_sequence(&self, terms: usize) -> Vec<BigUint> {
        match self {
            ProductSystem::Path(s) => s.tree_sequence(terms),
            ProductSystem::Cylinder(s) => s.tree_sequence(terms),
        }
    }
}
