//! Set partitions of `[m] = {1, …, m}`.
//!
//! A [`SetPartition`] is stored as a restricted growth string: `labels[e-1]`
//! is the index of the block holding element `e`, with blocks numbered in
//! order of their minimum element. That form is unique, so structural
//! equality is partition equality.
//!
//! The ordering used throughout the crate (see [`compare_partitions`]) sorts
//! first by block count, then by the block containing the smallest element
//! on which the two partitions disagree, compared lexicographically.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest ground set [`enumerate_partitions`] accepts (`B_10 = 115975`).
pub const MAX_GROUND_SET: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetPartError {
    #[error("ground set of size {m} is outside 1..={max} (B_{m} = {bell} partitions)")]
    SizeLimit { m: usize, max: usize, bell: u128 },
    #[error("partitions of [{left}] and [{right}] cannot be compared")]
    Mismatch { left: usize, right: usize },
    #[error("edge endpoint {endpoint} is outside [1, {size}]")]
    EndpointOutOfRange { endpoint: usize, size: usize },
    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// Bell number `B_m`, computed with the Bell triangle.
pub fn bell_number(m: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 1..m.max(1) {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        row = next;
    }
    if m == 0 {
        1
    } else {
        *row.last().unwrap()
    }
}

/// A partition of `[m]` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    labels: Vec<u8>,
}

impl SetPartition {
    /// Canonicalizes an arbitrary block assignment (`assignment[e-1]` is any
    /// identifier for the block of `e`).
    pub fn from_assignment<T: Copy + Eq>(assignment: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let labels = assignment
            .iter()
            .map(|a| match seen.iter().position(|s| s == a) {
                Some(i) => i as u8,
                None => {
                    seen.push(*a);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        SetPartition { labels }
    }

    /// Builds a partition from explicit 1-based blocks, which must cover
    /// `[m]` exactly once. Block and element order are irrelevant.
    pub fn from_blocks(m: usize, blocks: &[Vec<usize>]) -> Result<Self, SetPartError> {
        if m == 0 || m > u8::MAX as usize {
            return Err(SetPartError::InvalidBlocks(format!("ground set size {m}")));
        }
        let mut owner = vec![usize::MAX; m];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(SetPartError::InvalidBlocks("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > m {
                    return Err(SetPartError::InvalidBlocks(format!(
                        "element {e} not in [{m}]"
                    )));
                }
                if owner[e - 1] != usize::MAX {
                    return Err(SetPartError::InvalidBlocks(format!("element {e} repeated")));
                }
                owner[e - 1] = b;
            }
        }
        if let Some(e) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(SetPartError::InvalidBlocks(format!(
                "element {} missing",
                e + 1
            )));
        }
        Ok(Self::from_assignment(&owner))
    }

    /// The single-block partition of `[m]`.
    pub fn one_block(m: usize) -> Self {
        SetPartition { labels: vec![0; m] }
    }

    /// The partition of `[m]` into singletons.
    pub fn singletons(m: usize) -> Self {
        SetPartition {
            labels: (0..m as u8).collect(),
        }
    }

    /// Size of the ground set.
    pub fn m(&self) -> usize {
        self.labels.len()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.labels
            .iter()
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Restricted growth string, 0-based block index per element.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// 0-based index of the block containing element `e` (1-based).
    pub fn block_of(&self, e: usize) -> usize {
        self.labels[e - 1] as usize
    }

    /// Blocks as sorted 1-based element lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.len()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    /// Packs the labels four bits apiece; injective for `m <= 16`.
    pub fn key(&self) -> u64 {
        pack_labels(&self.labels)
    }

    fn sort_key(&self) -> (usize, Vec<Vec<usize>>) {
        let blocks = self.blocks();
        let per_element = self
            .labels
            .iter()
            .map(|&l| blocks[l as usize].clone())
            .collect();
        (blocks.len(), per_element)
    }
}

pub(crate) fn pack_labels(labels: &[u8]) -> u64 {
    labels
        .iter()
        .rev()
        .fold(0u64, |acc, &l| (acc << 4) | l as u64)
}

/// Compares two partitions of the same ground set.
///
/// `p1 < p2` when `p1` has fewer blocks; with equal block counts, take the
/// smallest element `i` whose blocks differ and compare the two blocks as
/// ascending element sequences (a proper prefix sorts first).
pub fn compare_partitions(p1: &SetPartition, p2: &SetPartition) -> Result<Ordering, SetPartError> {
    if p1.m() != p2.m() {
        return Err(SetPartError::Mismatch {
            left: p1.m(),
            right: p2.m(),
        });
    }
    Ok(canonical_cmp(p1, p2))
}

fn canonical_cmp(p1: &SetPartition, p2: &SetPartition) -> Ordering {
    let (n1, n2) = (p1.len(), p2.len());
    if n1 != n2 {
        return n1.cmp(&n2);
    }
    let (b1, b2) = (p1.blocks(), p2.blocks());
    for e in 1..=p1.m() {
        let x = &b1[p1.block_of(e)];
        let y = &b2[p2.block_of(e)];
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Partitions of different ground sets order by ground-set size first.
impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m()
            .cmp(&other.m())
            .then_with(|| canonical_cmp(self, other))
    }
}

impl fmt::Display for SetPartition {
    /// Shorthand such as `1/23`; elements are comma-separated once any
    /// element reaches 10.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.m() >= 10 { "," } else { "" };
        let text = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect::<Vec<_>>()
            .join("/");
        f.write_str(&text)
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

impl FromStr for SetPartition {
    type Err = SetPartError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SetPartError::Parse(s.to_string());
        let s = s.trim();
        let comma = s.contains(',');
        let mut blocks = Vec::new();
        for part in s.split('/') {
            let block: Vec<usize> = if comma {
                part.split(',')
                    .map(|t| t.trim().parse().map_err(|_| err()))
                    .collect::<Result<_, _>>()?
            } else {
                part.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err))
                    .collect::<Result<_, _>>()?
            };
            blocks.push(block);
        }
        let m = blocks.iter().map(Vec::len).sum();
        SetPartition::from_blocks(m, &blocks).map_err(|_| err())
    }
}

/// All partitions of `[m]` in canonical order, with 1-based rank lookup.
#[derive(Debug, Clone)]
pub struct PartitionIndex {
    m: usize,
    table: Vec<SetPartition>,
    ranks: HashMap<u64, usize>,
}

impl PartitionIndex {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// 1-based rank of `p`, if it partitions the indexed ground set.
    pub fn rank(&self, p: &SetPartition) -> Option<usize> {
        if p.m() != self.m {
            return None;
        }
        self.ranks.get(&p.key()).copied()
    }

    pub(crate) fn rank_of_key(&self, key: u64) -> Option<usize> {
        self.ranks.get(&key).copied()
    }

    /// Partition at 1-based `rank`.
    pub fn get(&self, rank: usize) -> Option<&SetPartition> {
        rank.checked_sub(1).and_then(|i| self.table.get(i))
    }

    pub fn partitions(&self) -> &[SetPartition] {
        &self.table
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SetPartition> {
        self.table.iter()
    }

    /// Text labels in rank order.
    pub fn labels(&self) -> Vec<String> {
        self.table.iter().map(ToString::to_string).collect()
    }
}

/// Enumerates every partition of `[m]`, `1 <= m <= MAX_GROUND_SET`.
pub fn enumerate_partitions(m: usize) -> Result<PartitionIndex, SetPartError> {
    if m == 0 || m > MAX_GROUND_SET {
        return Err(SetPartError::SizeLimit {
            m,
            max: MAX_GROUND_SET,
            bell: bell_number(m),
        });
    }
    let mut raw = Vec::new();
    let mut labels = vec![0u8; m];
    grow(&mut labels, 1, 1, &mut raw);

    let mut keyed: Vec<_> = raw.into_iter().map(|p| (p.sort_key(), p)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let table: Vec<SetPartition> = keyed.into_iter().map(|(_, p)| p).collect();
    let ranks = table
        .iter()
        .enumerate()
        .map(|(i, p)| (p.key(), i + 1))
        .collect();
    Ok(PartitionIndex { m, table, ranks })
}

fn grow(labels: &mut [u8], pos: usize, used: u8, out: &mut Vec<SetPartition>) {
    if pos == labels.len() {
        out.push(SetPartition {
            labels: labels.to_vec(),
        });
        return;
    }
    for l in 0..=used {
        labels[pos] = l;
        grow(labels, pos + 1, used.max(l + 1), out);
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the sets of `a` and `b`; returns `false` if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Outcome of [`merge_under_edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Merge {
    Merged(SetPartition),
    /// Some edge joined two elements that were already connected.
    Cycle,
}

/// Starts from the blocks of `p` plus `extra` fresh singletons
/// `p.m()+1 ..= p.m()+extra`, then adds `edges` (1-based pairs) one by one.
pub fn merge_under_edges(
    p: &SetPartition,
    extra: usize,
    edges: &[(usize, usize)],
) -> Result<Merge, SetPartError> {
    let size = p.m() + extra;
    let blocks = p.len();
    let node = |e: usize| -> Result<usize, SetPartError> {
        match e {
            0 => Err(SetPartError::EndpointOutOfRange { endpoint: e, size }),
            e if e <= p.m() => Ok(p.labels[e - 1] as usize),
            e if e <= size => Ok(blocks + e - p.m() - 1),
            _ => Err(SetPartError::EndpointOutOfRange { endpoint: e, size }),
        }
    };
    let mut uf = UnionFind::new(blocks + extra);
    for &(a, b) in edges {
        let (a, b) = (node(a)?, node(b)?);
        if !uf.union(a, b) {
            return Ok(Merge::Cycle);
        }
    }
    let roots: Vec<usize> = (1..=size)
        .map(|e| node(e).map(|n| uf.find(n)))
        .collect::<Result<_, _>>()?;
    Ok(Merge::Merged(SetPartition::from_assignment(&roots)))
}
