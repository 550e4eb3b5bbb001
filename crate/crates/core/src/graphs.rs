//! Base graphs and their products with paths and cycles.
//!
//! Vertices are 0-based internally. The public constructors that take edge
//! lists (and the text file format) use 1-based endpoints.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid base graph: {0}")]
    InvalidBase(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Anything with a vertex count and an edge multiset on `0..vertex_count`.
pub trait Multigraph {
    fn vertex_count(&self) -> usize;
    fn edge_list(&self) -> &[(usize, usize)];
}

/// Generator forms accepted by [`make_base`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `k` plus 1-based edges.
    Explicit {
        k: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl BaseSpec {
    /// Number of base vertices.
    pub fn k(&self) -> usize {
        match *self {
            BaseSpec::Path(k)
            | BaseSpec::Cycle(k)
            | BaseSpec::Complete(k)
            | BaseSpec::Explicit { k, .. } => k,
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Path(k) => write!(f, "path:{k}"),
            BaseSpec::Cycle(k) => write!(f, "cycle:{k}"),
            BaseSpec::Complete(k) => write!(f, "complete:{k}"),
            BaseSpec::Explicit { k, edges } => write!(f, "explicit:{k}:{}", edges.len()),
        }
    }
}

impl FromStr for BaseSpec {
    type Err = GraphError;

    /// `path:K`, `cycle:K` or `complete:K`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidBase(format!("unrecognized base {s:?}"));
        let (kind, k) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "path" => Ok(BaseSpec::Path(k)),
            "cycle" => Ok(BaseSpec::Cycle(k)),
            "complete" => Ok(BaseSpec::Complete(k)),
            _ => Err(bad()),
        }
    }
}

/// A loopless multigraph on `k` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseGraph {
    k: usize,
    edges: Vec<(usize, usize)>,
    name: String,
}

pub fn make_base(spec: &BaseSpec) -> Result<BaseGraph, GraphError> {
    let name = spec.to_string();
    let (k, edges) = match *spec {
        BaseSpec::Path(k) => {
            check_k(k)?;
            (k, (1..k).map(|i| (i - 1, i)).collect())
        }
        BaseSpec::Cycle(k) => {
            if k < 3 {
                return Err(GraphError::InvalidBase(format!(
                    "cycle:{k} needs at least 3 vertices"
                )));
            }
            (
                k,
                (0..k)
                    .map(|i| (i, (i + 1) % k))
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect(),
            )
        }
        BaseSpec::Complete(k) => {
            check_k(k)?;
            (
                k,
                (0..k)
                    .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                    .collect(),
            )
        }
        BaseSpec::Explicit { k, ref edges } => return BaseGraph::from_edges(k, edges),
    };
    Ok(BaseGraph { k, edges, name })
}

fn check_k(k: usize) -> Result<(), GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidBase(
            "a base graph needs at least one vertex".into(),
        ));
    }
    Ok(())
}

impl BaseGraph {
    pub fn path(k: usize) -> Result<Self, GraphError> {
        make_base(&BaseSpec::Path(k))
    }

    pub fn cycle(k: usize) -> Result<Self, GraphError> {
        make_base(&BaseSpec::Cycle(k))
    }

    pub fn complete(k: usize) -> Result<Self, GraphError> {
        make_base(&BaseSpec::Complete(k))
    }

    /// Builds a base graph from 1-based endpoints. Parallel edges are kept.
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        check_k(k)?;
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > k || b > k {
                return Err(GraphError::InvalidBase(format!(
                    "edge {a}-{b} has an endpoint outside [1, {k}]"
                )));
            }
            if a == b {
                return Err(GraphError::InvalidBase(format!("self-loop at {a}")));
            }
            out.push(((a.min(b)) - 1, a.max(b) - 1));
        }
        Ok(BaseGraph {
            k,
            edges: out,
            name: format!("explicit:{k}:{}", edges.len()),
        })
    }

    /// Parses the text format: first non-comment line `k`, then one `i j`
    /// pair per line. Lines starting with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut k = None;
        let mut edges = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| GraphError::Parse {
                line: no + 1,
                msg: msg.to_string(),
            };
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| err(&format!("not a positive integer: {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            match (k, nums.as_slice()) {
                (None, [n]) => k = Some(*n),
                (None, _) => return Err(err("expected the vertex count")),
                (Some(_), [a, b]) => edges.push((*a, *b)),
                (Some(_), _) => return Err(err("expected an edge \"i j\"")),
            }
        }
        let k = k.ok_or(GraphError::Parse {
            line: 0,
            msg: "empty graph file".into(),
        })?;
        let mut g = Self::from_edges(k, &edges)?;
        g.name = format!("file:{k}:{}", g.edges.len());
        Ok(g)
    }

    pub fn from_file(path: &Path) -> Result<Self, GraphError> {
        let text = std::fs::read_to_string(path).map_err(|source| GraphError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let mut g = Self::parse(&text)?;
        g.name = format!("file:{}", path.display());
        Ok(g)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// 0-based edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Moves vertex `v` to `perm[v]` (0-based permutation of `0..k`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.k, "permutation length");
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        BaseGraph {
            k: self.k,
            edges,
            name: format!("{}~", self.name),
        }
    }
}

impl Multigraph for BaseGraph {
    fn vertex_count(&self) -> usize {
        self.k
    }

    fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    /// `G x P_n`
    Path,
    /// `G x C_n`
    Cycle,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Path => "path",
            Topology::Cycle => "cycle",
        })
    }
}

/// Explicit product multigraph; vertex `v_{i,j}` (row `i`, layer `j`, both
/// 1-based) has index `(j-1)*k + (i-1)`.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    base: BaseGraph,
    n: usize,
    topology: Topology,
    edges: Vec<(usize, usize)>,
}

/// Builds `base x P_n` or `base x C_n`. In the cycle case the `k` wrap edges
/// are kept as parallel edges when `n = 2` and dropped when `n = 1` (they
/// would be loops).
pub fn build_product(
    base: &BaseGraph,
    n: usize,
    topology: Topology,
) -> Result<ProductGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidBase(
            "product needs n >= 1 layers".into(),
        ));
    }
    let k = base.k;
    let at = |i: usize, j: usize| j * k + i;
    let mut edges = Vec::with_capacity(n * base.edges.len() + k * n);
    for j in 0..n {
        edges.extend(base.edges.iter().map(|&(a, b)| (at(a, j), at(b, j))));
        if j + 1 < n {
            edges.extend((0..k).map(|i| (at(i, j), at(i, j + 1))));
        }
    }
    if topology == Topology::Cycle && n >= 2 {
        edges.extend((0..k).map(|i| (at(i, 0), at(i, n - 1))));
    }
    Ok(ProductGraph {
        base: base.clone(),
        n,
        topology,
        edges,
    })
}

impl ProductGraph {
    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    /// Index of `v_{i,j}` with 1-based row `i` and layer `j`.
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        (j - 1) * self.base.k + (i - 1)
    }
}

impl Multigraph for ProductGraph {
    fn vertex_count(&self) -> usize {
        self.base.k * self.n
    }

    fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(BaseGraph::path(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(
            BaseGraph::complete(3).unwrap().edges(),
            &[(0, 1), (0, 2), (1, 2)]
        );
        assert_eq!(BaseGraph::cycle(4).unwrap().edges().len(), 4);
        assert_eq!(BaseGraph::path(1).unwrap().edges().len(), 0);
        assert_eq!(BaseGraph::complete(5).unwrap().edges().len(), 10);
        assert!(BaseGraph::cycle(2).is_err());
        assert!(BaseGraph::cycle(1).is_err());
        assert!(BaseGraph::path(0).is_err());
        assert!(BaseGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(BaseGraph::from_edges(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn spec_strings() {
        assert_eq!("path:3".parse::<BaseSpec>().unwrap(), BaseSpec::Path(3));
        assert_eq!(
            "complete:4".parse::<BaseSpec>().unwrap(),
            BaseSpec::Complete(4)
        );
        assert!("star:3".parse::<BaseSpec>().is_err());
        assert!("path:x".parse::<BaseSpec>().is_err());
        assert_eq!(BaseSpec::Cycle(3).to_string(), "cycle:3");
    }

    #[test]
    fn grid_2x2_is_four_cycle() {
        let g = build_product(&BaseGraph::path(2).unwrap(), 2, Topology::Path).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let mut deg = [0; 4];
        for &(a, b) in g.edge_list() {
            deg[a] += 1;
            deg[b] += 1;
        }
        assert_eq!(g.edge_list().len(), 4);
        assert_eq!(deg, [2; 4]);
    }

    #[test]
    fn cylinder_n2_keeps_parallel_edges() {
        let g = build_product(&BaseGraph::path(2).unwrap(), 2, Topology::Cycle).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_list().len(), 6);
        let parallel = g
            .edge_list()
            .iter()
            .filter(|&&e| g.edge_list().iter().filter(|&&f| f == e).count() == 2)
            .count();
        assert_eq!(parallel, 4);
    }

    #[test]
    fn cylinder_n1_drops_loops() {
        let g = build_product(&BaseGraph::path(3).unwrap(), 1, Topology::Cycle).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_list().len(), 2);
    }

    #[test]
    fn size_formulas() {
        for base in [
            BaseGraph::path(3).unwrap(),
            BaseGraph::complete(4).unwrap(),
            BaseGraph::cycle(5).unwrap(),
        ] {
            let (k, e) = (base.k(), base.edges().len());
            for n in 1..6 {
                let p = build_product(&base, n, Topology::Path).unwrap();
                assert_eq!(p.vertex_count(), k * n);
                assert_eq!(p.edge_list().len(), n * e + k * (n - 1));
                let c = build_product(&base, n, Topology::Cycle).unwrap();
                let wrap = if n >= 2 { k } else { 0 };
                assert_eq!(c.edge_list().len(), n * e + k * (n - 1) + wrap);
            }
        }
        assert!(build_product(&BaseGraph::path(2).unwrap(), 0, Topology::Path).is_err());
    }

    #[test]
    fn vertex_order_is_column_major() {
        let g = build_product(&BaseGraph::path(3).unwrap(), 4, Topology::Path).unwrap();
        assert_eq!(g.vertex(1, 1), 0);
        assert_eq!(g.vertex(3, 1), 2);
        assert_eq!(g.vertex(1, 2), 3);
        assert_eq!(g.vertex(3, 4), 11);
    }

    #[test]
    fn file_format() {
        let g =
            BaseGraph::parse("# triangle with a doubled edge\n3\n1 2\n2 3\n\n1 3\n1 3\n").unwrap();
        assert_eq!(g.k(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2), (0, 2)]);
        assert!(matches!(
            BaseGraph::parse("3\n1 2 3\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            BaseGraph::parse("3\n1 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(BaseGraph::parse("# nothing\n").is_err());
        assert!(BaseGraph::parse("2\n1 1\n").is_err());
    }
}
