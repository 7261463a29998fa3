//! Independent oracles for the integration suites. Everything here is
//! derived straight from definitions — explicit graph search, brute-force
//! filters, and curve tracing — so agreement with the library is evidence,
//! not circularity.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use meander_lattice::noncross::{enumerate_nc, NoncrossingPartition};
use meander_lattice::perm::{all_permutations, cayley_distance, Permutation};

/// Breadth-first distances from `start` in the graph on S_n whose edges join
/// permutations differing by one transposition. This materializes the graph
/// the library only ever treats as a formula, so keep `n` small.
pub fn graph_distances_from(start: &Permutation) -> HashMap<Permutation, usize> {
    let n = start.n();
    let mut transpositions = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            transpositions.push(Permutation::transposition(n, i, j));
        }
    }
    let mut dist = HashMap::new();
    dist.insert(start.clone(), 0usize);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for t in &transpositions {
            let q = p.compose(t);
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

/// All permutations of order `n` plus an index for matrix lookups.
pub fn indexed_symmetric_group(n: usize) -> (Vec<Permutation>, HashMap<Permutation, usize>) {
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let index = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    (perms, index)
}

/// Pairwise distance matrix over a permutation list.
pub fn distance_matrix(perms: &[Permutation]) -> Vec<Vec<u8>> {
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| u8::try_from(cayley_distance(a, b)).unwrap())
                .collect()
        })
        .collect()
}

/// All set partitions of `{1..n}` via restricted-growth strings; blocks come
/// out sorted by minimum element.
pub fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn grow(element: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if element > n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(element);
            grow(element + 1, n, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![element]);
        grow(element + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    grow(1, n, &mut Vec::new(), &mut out);
    out
}

/// Definition-direct crossing test: some `i < j < k < l` with `i ~ k` and
/// `j ~ l` in two different blocks.
pub fn has_crossing(n: usize, blocks: &[Vec<usize>]) -> bool {
    let mut owner = vec![0usize; n + 1];
    for (b, block) in blocks.iter().enumerate() {
        for &x in block {
            owner[x] = b;
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    if owner[i] == owner[k] && owner[j] == owner[l] && owner[i] != owner[j] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for m in 1..=n {
        for i in 0..m {
            c[m] += c[i] * c[m - 1 - i];
        }
    }
    c[n]
}

/// Geometric component count of the curve system: `2n` points on a line
/// (odd position `2i-1` is `⌐i`, even position `2i` is `i′`), an upper arc
/// from `2i` to `2 upper(i) - 1` and a lower arc from `2i` to
/// `2 lower(i) - 1` for each `i`, components via union-find.
pub fn traced_components(upper: &Permutation, lower: &Permutation) -> usize {
    let n = upper.n();
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for i in 1..=n {
        union(&mut parent, 2 * i - 1, 2 * upper.apply(i) - 2);
        union(&mut parent, 2 * i - 1, 2 * lower.apply(i) - 2);
    }
    let mut roots: Vec<usize> = (0..2 * n).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Meander count by pure curve tracing over all ordered lattice pairs.
pub fn traced_meander_count(n: usize) -> u64 {
    let labels: Vec<Permutation> = enumerate_nc(n)
        .iter()
        .map(|p| p.to_permutation())
        .collect();
    let mut count = 0;
    for upper in &labels {
        for lower in &labels {
            if traced_components(upper, lower) == 1 {
                count += 1;
            }
        }
    }
    count
}

/// Refinement straight from the definition: elements sharing a block of `p`
/// must share a block of `q`.
pub fn refines_oracle(p: &NoncrossingPartition, q: &NoncrossingPartition) -> bool {
    let owner = |partition: &NoncrossingPartition| {
        let mut owner = vec![0usize; partition.n() + 1];
        for (b, block) in partition.blocks().iter().enumerate() {
            for &x in block {
                owner[x] = b;
            }
        }
        owner
    };
    let (po, qo) = (owner(p), owner(q));
    for i in 1..=p.n() {
        for j in i + 1..=p.n() {
            if po[i] == po[j] && qo[i] != qo[j] {
                return false;
            }
        }
    }
    true
}

/// Least upper bound by full scan; existence and uniqueness are asserted
/// because they are part of what the lattice claim says.
pub fn brute_lub(
    all: &[NoncrossingPartition],
    p: &NoncrossingPartition,
    q: &NoncrossingPartition,
) -> NoncrossingPartition {
    let upper: Vec<&NoncrossingPartition> = all
        .iter()
        .filter(|c| refines_oracle(p, c) && refines_oracle(q, c))
        .collect();
    let least: Vec<&&NoncrossingPartition> = upper
        .iter()
        .filter(|c| upper.iter().all(|u| refines_oracle(c, u)))
        .collect();
    assert_eq!(least.len(), 1, "least upper bound must be unique");
    (*least[0]).clone()
}

/// Greatest lower bound by full scan.
pub fn brute_glb(
    all: &[NoncrossingPartition],
    p: &NoncrossingPartition,
    q: &NoncrossingPartition,
) -> NoncrossingPartition {
    let lower: Vec<&NoncrossingPartition> = all
        .iter()
        .filter(|c| refines_oracle(c, p) && refines_oracle(c, q))
        .collect();
    let greatest: Vec<&&NoncrossingPartition> = lower
        .iter()
        .filter(|c| lower.iter().all(|l| refines_oracle(l, c)))
        .collect();
    assert_eq!(greatest.len(), 1, "greatest lower bound must be unique");
    (*greatest[0]).clone()
}

/// Blockwise common refinement: nonempty pairwise intersections.
pub fn common_refinement(p: &NoncrossingPartition, q: &NoncrossingPartition) -> Vec<Vec<usize>> {
    let mut blocks = Vec::new();
    for a in p.blocks() {
        for b in q.blocks() {
            let cut: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
            if !cut.is_empty() {
                blocks.push(cut);
            }
        }
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
}
