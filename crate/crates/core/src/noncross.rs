//! Noncrossing partitions of order `n`, the refinement lattice, duality, and
//! the Hasse graph.
//!
//! A partition of `{1..n}` (points on a disc boundary, labeled
//! counter-clockwise) is noncrossing when no `i < j < k < l` has `i, k` in one
//! block and `j, l` in a different block. Each noncrossing partition is
//! labeled by the permutation whose cycles are its blocks written in
//! increasing order; under that labeling the Hasse diagram of the refinement
//! order is the interval from `e` to `s` in the transposition Cayley graph.

use std::collections::HashMap;
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::perm::{cayley_distance, Permutation};

/// Error constructing or parsing a set partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("element {value} out of range 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("element {0} appears in more than one block")]
    Repeated(usize),
    #[error("element {0} missing from every block")]
    Missing(usize),
    #[error("blocks may not be empty")]
    EmptyBlock,
    #[error("blocks cross: {i} < {j} < {k} < {l} with {i} ~ {k} and {j} ~ {l}")]
    Crossing {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    #[error("malformed partition text: {0}")]
    Syntax(String),
}

/// Why a permutation fails to label a noncrossing partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("not an interval permutation: cycle {0:?} is not increasing from its minimum")]
    CycleNotIncreasing(Vec<usize>),
    #[error("not an interval permutation: orbits cross at {i} < {j} < {k} < {l}")]
    CrossingOrbits {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
}

/// A noncrossing partition of `{1..n}` in canonical form: each block sorted
/// ascending, blocks sorted by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    /// Validates and canonicalizes the given blocks.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let blocks = canonicalize(n, blocks)?;
        if let Some((i, j, k, l)) = crossing_witness(&blocks) {
            return Err(PartitionError::Crossing { i, j, k, l });
        }
        Ok(NoncrossingPartition { n, blocks })
    }

    /// The partition into `n` singletons (bottom of the lattice, grade 0).
    pub fn discrete(n: usize) -> Self {
        assert!(n >= 1, "order must be at least 1");
        NoncrossingPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// The single-block partition (top of the lattice, grade `n - 1`).
    pub fn full(n: usize) -> Self {
        assert!(n >= 1, "order must be at least 1");
        NoncrossingPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `n` minus the number of blocks; equals the Cayley distance from the
    /// identity to the partition's permutation label.
    pub fn grade(&self) -> usize {
        self.n - self.blocks.len()
    }

    /// The permutation whose cycles are the blocks, each written in
    /// numerically increasing order.
    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.blocks)
            .expect("canonical blocks always form disjoint cycles")
    }

    /// Recovers a partition from its permutation label. Succeeds exactly when
    /// every cycle, rotated to start at its minimum, is increasing and the
    /// orbit partition is noncrossing.
    pub fn from_permutation(sigma: &Permutation) -> Result<Self, IntervalError> {
        let decomposition = sigma.cycles();
        for cycle in decomposition.iter() {
            if !cycle.windows(2).all(|w| w[0] < w[1]) {
                return Err(IntervalError::CycleNotIncreasing(cycle.to_vec()));
            }
        }
        let blocks = decomposition.into_cycles();
        if let Some((i, j, k, l)) = crossing_witness(&blocks) {
            return Err(IntervalError::CrossingOrbits { i, j, k, l });
        }
        Ok(NoncrossingPartition {
            n: sigma.n(),
            blocks,
        })
    }

    /// The dual (Kreweras-type complement): the partition labeled by
    /// `sigma^-1 s`. Always lands back in the lattice.
    pub fn dual(&self) -> Self {
        let sigma = self.to_permutation();
        let s = Permutation::successor(self.n);
        let label = sigma.inverse().compose(&s);
        Self::from_permutation(&label)
            .expect("dual of a noncrossing partition must be noncrossing")
    }

    /// Inverse of `dual`: the partition labeled by `s sigma^-1`. The dual of
    /// the dual is a rotation, not the identity, so this is a separate map.
    pub fn undual(&self) -> Self {
        let rho = self.to_permutation();
        let s = Permutation::successor(self.n);
        let label = s.compose(&rho.inverse());
        Self::from_permutation(&label)
            .expect("undual of a noncrossing partition must be noncrossing")
    }

    /// Refinement order: true iff every block of `self` is contained in some
    /// block of `coarser`.
    ///
    /// Panics if the orders differ.
    pub fn refines(&self, coarser: &Self) -> bool {
        assert_eq!(self.n, coarser.n, "order mismatch in refines");
        let owner = owner_of(coarser);
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&x| owner[x - 1] == owner[block[0] - 1]))
    }

    /// Covering relation: `self` covers `finer` iff `finer` refines `self`
    /// and the grades differ by exactly 1 (one block split in two).
    pub fn covers(&self, finer: &Self) -> bool {
        self.grade() == finer.grade() + 1 && finer.refines(self)
    }

    /// Least upper bound in the lattice: the union of the two equivalence
    /// relations, closed under transitivity and the noncrossing constraint
    /// (whenever `i < j < k < l` with `i ~ k` and `j ~ l`, force `j ~ k`).
    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "order mismatch in join");
        let n = self.n;
        let mut uf = UnionFind::new(n);
        for block in self.blocks.iter().chain(other.blocks.iter()) {
            for w in block.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        // Crossing closure: merge any two classes that cross, until stable.
        // The class count strictly drops on every merge, so this terminates.
        loop {
            let blocks = uf.classes();
            match crossing_witness(&blocks) {
                Some((i, _, _, l)) => {
                    uf.union(i - 1, l - 1);
                }
                None => {
                    return NoncrossingPartition { n, blocks };
                }
            }
        }
    }

    /// Greatest lower bound, computed as the anti-dual of the join of the
    /// duals. Coincides with the common-refinement partition.
    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "order mismatch in meet");
        self.dual().join(&other.dual()).undual()
    }

    /// Parses the block text format, e.g. `"{1,3,4,7}{2}{5,6}{8}"`. Elements
    /// may be separated by commas or whitespace; whitespace between blocks is
    /// ignored.
    pub fn parse(text: &str, n: usize) -> Result<Self, PartitionError> {
        let mut blocks = Vec::new();
        let mut rest = text.trim_start();
        if rest.is_empty() {
            return Err(PartitionError::Syntax("empty input".into()));
        }
        while !rest.is_empty() {
            if !rest.starts_with('{') {
                return Err(PartitionError::Syntax(format!(
                    "expected '{{' at \"{}\"",
                    rest.chars().take(16).collect::<String>()
                )));
            }
            let close = rest
                .find('}')
                .ok_or_else(|| PartitionError::Syntax("unbalanced '{'".into()))?;
            let mut block = Vec::new();
            for token in rest[1..close].split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let v: usize = token
                    .parse()
                    .map_err(|_| PartitionError::Syntax(format!("bad element \"{token}\"")))?;
                block.push(v);
            }
            blocks.push(block);
            rest = rest[close + 1..].trim_start();
        }
        Self::new(n, blocks)
    }
}

/// `"{1,3,4,7}{2}{5,6}{8}"`: blocks in canonical order, elements ascending.
impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (i, v) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Checks the noncrossing condition on raw blocks; errors if the blocks do
/// not partition `{1..n}`.
pub fn is_noncrossing(n: usize, blocks: &[Vec<usize>]) -> Result<bool, PartitionError> {
    let blocks = canonicalize(n, blocks.to_vec())?;
    Ok(crossing_witness(&blocks).is_none())
}

/// Interval membership in the Cayley graph: true iff
/// `d(e, sigma) + d(sigma, s) = n - 1`. Agrees with
/// `NoncrossingPartition::from_permutation` succeeding, for every permutation.
pub fn in_interval(sigma: &Permutation) -> bool {
    let n = sigma.n();
    let s = Permutation::successor(n);
    sigma.reflection_length() + cayley_distance(sigma, &s) == n - 1
}

/// All noncrossing partitions of order `n`, each exactly once, ordered by
/// block count descending (grade ascending) then lexicographically on the
/// canonical form.
pub fn enumerate_nc(n: usize) -> Vec<NoncrossingPartition> {
    assert!(n >= 1, "order must be at least 1");
    assert!(n <= 32, "enumeration order out of supported range");
    let mut all: Vec<NoncrossingPartition> = nc_of_range(1, n)
        .into_iter()
        .map(|mut blocks| {
            blocks.sort_by_key(|b| b[0]);
            NoncrossingPartition { n, blocks }
        })
        .collect();
    all.sort_by(|a, b| a.grade().cmp(&b.grade()).then(a.blocks.cmp(&b.blocks)));
    all
}

/// Noncrossing partitions of the interval `{lo..=hi}` (empty when `lo > hi`),
/// by recursion on the block containing `lo`: the elements between (and
/// after) consecutive members of that block form independent sub-intervals.
fn nc_of_range(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let m = hi - lo; // candidates lo+1..=hi for the block of lo
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let mut first = vec![lo];
        for j in 0..m {
            if mask & (1 << j) != 0 {
                first.push(lo + 1 + j);
            }
        }
        let mut partials: Vec<Vec<Vec<usize>>> = vec![vec![first.clone()]];
        for w in 0..first.len() {
            let gap_lo = first[w] + 1;
            let gap_hi = if w + 1 < first.len() {
                first[w + 1] - 1
            } else {
                hi
            };
            if gap_lo > gap_hi {
                continue;
            }
            let subs = nc_of_range(gap_lo, gap_hi);
            let mut extended = Vec::with_capacity(partials.len() * subs.len());
            for partial in &partials {
                for sub in &subs {
                    let mut combined = partial.clone();
                    combined.extend(sub.iter().cloned());
                    extended.push(combined);
                }
            }
            partials = extended;
        }
        out.append(&mut partials);
    }
    out
}

/// The Hasse diagram of the lattice of order `n`: vertices are all
/// noncrossing partitions, edges the covering relations. Doubles as the
/// interval from `e` to `s` in the Cayley graph under the permutation
/// labeling.
#[derive(Debug, Clone)]
pub struct HasseGraph {
    n: usize,
    vertices: Vec<NoncrossingPartition>,
    /// Pairs `(i, j)` where `vertices[j]` covers `vertices[i]`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<NoncrossingPartition, usize>,
}

/// Builds the Hasse graph over `enumerate_nc(n)` by testing the covering
/// relation between consecutive grades.
pub fn hasse(n: usize) -> HasseGraph {
    let vertices = enumerate_nc(n);
    let index: HashMap<NoncrossingPartition, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    // Vertices come out grade-ascending, so each grade is a contiguous range.
    let mut grade_start = vec![vertices.len(); n + 1];
    for (i, p) in vertices.iter().enumerate() {
        let g = p.grade();
        if grade_start[g] > i {
            grade_start[g] = i;
        }
    }
    grade_start[n] = vertices.len();
    for g in (0..n).rev() {
        if grade_start[g] > grade_start[g + 1] {
            grade_start[g] = grade_start[g + 1];
        }
    }
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for g in 0..n.saturating_sub(1) {
        for i in grade_start[g]..grade_start[g + 1] {
            for j in grade_start[g + 1]..grade_start[g + 2] {
                if vertices[j].covers(&vertices[i]) {
                    edges.push((i, j));
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
    }
    HasseGraph {
        n,
        vertices,
        edges,
        adjacency,
        index,
    }
}

impl HasseGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[NoncrossingPartition] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, p: &NoncrossingPartition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Undirected BFS distance between two vertex indices. The lattice is
    /// connected, so this always resolves.
    pub fn bfs_distance(&self, from: usize, to: usize) -> usize {
        if from == to {
            return 0;
        }
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if w == to {
                        return dist[w];
                    }
                    queue.push_back(w);
                }
            }
        }
        unreachable!("Hasse graph is connected");
    }

    /// BFS distances from one vertex to every vertex.
    pub fn bfs_distances(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != usize::MAX));
        dist
    }

    /// JSON export: vertices as partition strings, edges as index pairs.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "order": self.n,
            "vertices": self.vertices.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
        })
    }
}

/// Sorts blocks, checks they partition `{1..n}`.
fn canonicalize(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>, PartitionError> {
    assert!(n >= 1, "order must be at least 1");
    let mut seen = vec![false; n];
    for block in &mut blocks {
        if block.is_empty() {
            return Err(PartitionError::EmptyBlock);
        }
        block.sort_unstable();
        for &v in block.iter() {
            if v < 1 || v > n {
                return Err(PartitionError::OutOfRange { value: v, n });
            }
            if seen[v - 1] {
                return Err(PartitionError::Repeated(v));
            }
            seen[v - 1] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(PartitionError::Missing(missing + 1));
    }
    blocks.sort_by_key(|b| b[0]);
    Ok(blocks)
}

/// Finds `i < j < k < l` with `i ~ k` and `j ~ l` in different blocks, if any.
///
/// Two blocks cross exactly when two of their consecutive-element arcs
/// interleave, so it suffices to compare arcs pairwise.
fn crossing_witness(blocks: &[Vec<usize>]) -> Option<(usize, usize, usize, usize)> {
    let mut arcs: Vec<(usize, usize, usize)> = Vec::new();
    for (id, block) in blocks.iter().enumerate() {
        for w in block.windows(2) {
            arcs.push((w[0], w[1], id));
        }
    }
    for (a, &(a0, a1, aid)) in arcs.iter().enumerate() {
        for &(b0, b1, bid) in &arcs[a + 1..] {
            if aid == bid {
                continue;
            }
            if a0 < b0 && b0 < a1 && a1 < b1 {
                return Some((a0, b0, a1, b1));
            }
            if b0 < a0 && a0 < b1 && b1 < a1 {
                return Some((b0, a0, b1, a1));
            }
        }
    }
    None
}

fn owner_of(p: &NoncrossingPartition) -> Vec<usize> {
    let mut owner = vec![0; p.n];
    for (id, block) in p.blocks.iter().enumerate() {
        for &v in block {
            owner[v - 1] = id;
        }
    }
    owner
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[rb] = ra;
        }
    }

    /// Classes as sorted blocks of 1-based elements, ordered by minimum.
    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..n {
            let root = self.find(x);
            by_root.entry(root).or_default().push(x + 1);
        }
        let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        blocks
    }
}
