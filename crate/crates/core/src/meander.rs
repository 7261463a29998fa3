//! Meander systems, component counting, enumeration, and in-lattice
//! geodesics.
//!
//! A meander system is an ordered pair of lattice permutations: the upper
//! half draws arcs joining `even(i)` to `odd(sigma(i))` above the dividing
//! line, the lower half the same below. Tracing a curve alternates lower and
//! upper arcs, so the closed curves correspond to the cycles of
//! `sigma^-1 tau` and the meanders (single-curve systems) are exactly the
//! maximally separated ordered pairs: `d(sigma, tau) = n - 1`.

use std::fmt;

use thiserror::Error;

use crate::noncross::{enumerate_nc, HasseGraph, IntervalError, NoncrossingPartition};
use crate::perm::{cayley_distance, Permutation};

/// Default refusal threshold for pair enumeration: order 11 already means
/// scanning `C_11^2 > 3.4e9` ordered pairs.
pub const DEFAULT_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeanderError {
    #[error("{role} permutation is not in the lattice: {source}")]
    NotInLattice {
        role: &'static str,
        #[source]
        source: IntervalError,
    },
    #[error("order {order} exceeds the resource cap {cap}")]
    OrderAboveCap { order: usize, cap: usize },
}

/// An ordered pair of lattice permutations; the complete invariant of a
/// system of closed curves crossing the dividing line at `2n` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeanderSystem {
    upper: Permutation,
    lower: Permutation,
}

impl MeanderSystem {
    /// Validates that both halves label noncrossing partitions (otherwise the
    /// arcs of one half-plane could not be drawn disjointly).
    ///
    /// Panics if the orders differ.
    pub fn new(upper: Permutation, lower: Permutation) -> Result<Self, MeanderError> {
        assert_eq!(upper.n(), lower.n(), "order mismatch in meander system");
        NoncrossingPartition::from_permutation(&upper)
            .map_err(|source| MeanderError::NotInLattice {
                role: "upper",
                source,
            })?;
        NoncrossingPartition::from_permutation(&lower)
            .map_err(|source| MeanderError::NotInLattice {
                role: "lower",
                source,
            })?;
        Ok(MeanderSystem { upper, lower })
    }

    pub fn n(&self) -> usize {
        self.upper.n()
    }

    pub fn upper(&self) -> &Permutation {
        &self.upper
    }

    pub fn lower(&self) -> &Permutation {
        &self.lower
    }

    /// Number of closed curves: the cycle count of `upper^-1 lower`, which
    /// equals `n - d(upper, lower)`.
    pub fn components(&self) -> usize {
        self.upper.inverse().compose(&self.lower).cycle_count()
    }

    /// True when the system is a single closed curve, equivalently when
    /// `d(upper, lower) = n - 1`.
    pub fn is_meander(&self) -> bool {
        self.components() == 1
    }

    /// Dualizes both halves at once. This relabels the crossing points by one
    /// step around the compactified line, so it preserves the component count
    /// and the Cayley distance; applying it `2n` times is the identity.
    pub fn simultaneous_dual(&self) -> MeanderSystem {
        let next = MeanderSystem {
            upper: dual_label(&self.upper),
            lower: dual_label(&self.lower),
        };
        debug_assert!(crate::noncross::in_interval(&next.upper));
        debug_assert!(crate::noncross::in_interval(&next.lower));
        next
    }
}

impl fmt::Display for MeanderSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.upper, self.lower)
    }
}

/// The dual on permutation labels: `sigma -> sigma^-1 s`.
fn dual_label(p: &Permutation) -> Permutation {
    let s = Permutation::successor(p.n());
    p.inverse().compose(&s)
}

/// Inverse of `dual_label`: `rho -> s rho^-1`.
fn undual_label(p: &Permutation) -> Permutation {
    let s = Permutation::successor(p.n());
    s.compose(&p.inverse())
}

/// Options for meander pair enumeration.
#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    /// Skip collecting the pair list, only count.
    pub count_only: bool,
    /// Worker threads over the outer partition index; `<= 1` is sequential.
    /// The result is identical for every job count.
    pub jobs: usize,
    /// Refusal threshold for the order.
    pub max_order: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            count_only: true,
            jobs: 1,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// Counted (and optionally listed) meanders of a given order.
#[derive(Debug, Clone)]
pub struct MeanderEnumeration {
    pub order: usize,
    pub count: u64,
    /// Ordered `(upper, lower)` pairs, present unless `count_only` was set.
    pub pairs: Option<Vec<(Permutation, Permutation)>>,
}

/// Scans all ordered pairs of lattice permutations of order `n` and keeps
/// those forming a single closed curve. Pair order is deterministic: outer
/// and inner both follow the `enumerate_nc` order.
pub fn enumerate_meanders(
    n: usize,
    options: &EnumerationOptions,
) -> Result<MeanderEnumeration, MeanderError> {
    if n > options.max_order {
        return Err(MeanderError::OrderAboveCap {
            order: n,
            cap: options.max_order,
        });
    }
    let labels: Vec<Permutation> = enumerate_nc(n)
        .iter()
        .map(|p| p.to_permutation())
        .collect();
    let inverses: Vec<Permutation> = labels.iter().map(Permutation::inverse).collect();

    let scan = |outer: std::ops::Range<usize>| -> (u64, Vec<(usize, usize)>) {
        let mut count = 0u64;
        let mut hits = Vec::new();
        for i in outer {
            let upper_inv = &inverses[i];
            for (j, lower) in labels.iter().enumerate() {
                if product_is_single_cycle(upper_inv, lower) {
                    count += 1;
                    if !options.count_only {
                        hits.push((i, j));
                    }
                }
            }
        }
        (count, hits)
    };

    let jobs = options.jobs.max(1).min(labels.len().max(1));
    let results: Vec<(u64, Vec<(usize, usize)>)> = if jobs <= 1 {
        vec![scan(0..labels.len())]
    } else {
        // Contiguous chunks keyed by outer index keep the merged output
        // independent of scheduling.
        let chunk = labels.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    let lo = w * chunk;
                    let hi = ((w + 1) * chunk).min(labels.len());
                    let scan = &scan;
                    scope.spawn(move || scan(lo..hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let count = results.iter().map(|r| r.0).sum();
    let pairs = if options.count_only {
        None
    } else {
        Some(
            results
                .iter()
                .flat_map(|r| r.1.iter())
                .map(|&(i, j)| (labels[i].clone(), labels[j].clone()))
                .collect(),
        )
    };
    Ok(MeanderEnumeration {
        order: n,
        count,
        pairs,
    })
}

/// Cycle count check for `a b` without materializing the product; orders are
/// capped well below 64 so a bitmask tracks visited points.
fn product_is_single_cycle(a: &Permutation, b: &Permutation) -> bool {
    let n = a.n();
    let mut seen: u64 = 0;
    let mut x = 1usize;
    let mut steps = 0usize;
    while steps < n {
        seen |= 1 << (x - 1);
        x = a.apply(b.apply(x));
        steps += 1;
    }
    // One orbit exactly when the walk from 1 visits everything.
    seen == if n == 64 { u64::MAX } else { (1 << n) - 1 }
}

/// Shortest-path distance between two lattice permutations measured inside
/// the Hasse graph.
pub fn lattice_distance_bfs(
    graph: &HasseGraph,
    from: &Permutation,
    to: &Permutation,
) -> Result<usize, MeanderError> {
    let from_index = lattice_index(graph, from, "from")?;
    let to_index = lattice_index(graph, to, "to")?;
    Ok(graph.bfs_distance(from_index, to_index))
}

fn lattice_index(
    graph: &HasseGraph,
    p: &Permutation,
    role: &'static str,
) -> Result<usize, MeanderError> {
    let partition = NoncrossingPartition::from_permutation(p)
        .map_err(|source| MeanderError::NotInLattice { role, source })?;
    Ok(graph
        .index_of(&partition)
        .expect("every noncrossing partition is a Hasse vertex"))
}

/// A walk in the lattice whose consecutive labels differ by left
/// multiplication by a transposition and whose edge count realizes the
/// Cayley distance of its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicPath {
    vertices: Vec<Permutation>,
}

impl GeodesicPath {
    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> &Permutation {
        self.vertices.first().expect("paths are nonempty")
    }

    pub fn last(&self) -> &Permutation {
        self.vertices.last().expect("paths are nonempty")
    }

    /// Checks the full geodesic contract: every vertex in the lattice, every
    /// step a transposition factor, length exactly the Cayley distance.
    pub fn validate(&self) -> Result<(), String> {
        for v in &self.vertices {
            if let Err(e) = NoncrossingPartition::from_permutation(v) {
                return Err(format!("vertex {v} outside the lattice: {e}"));
            }
        }
        for w in self.vertices.windows(2) {
            let factor = w[1].compose(&w[0].inverse());
            if factor.reflection_length() != 1 {
                return Err(format!(
                    "step {} -> {} is not a transposition factor",
                    w[0], w[1]
                ));
            }
        }
        let want = cayley_distance(self.first(), self.last());
        if self.edge_count() != want {
            return Err(format!(
                "length {} does not realize the distance {want}",
                self.edge_count()
            ));
        }
        Ok(())
    }
}

/// Builds a geodesic from `from` to `to` that stays inside the lattice,
/// following the inductive splitting construction: rotate by simultaneous
/// duals until `to` fixes `n`; if `from` also fixes `n`, recurse on the
/// restriction to order `n - 1`; otherwise split the singleton `{n}` out of
/// `from` by one transposition step and recurse. Finally rotate back.
pub fn lattice_geodesic(
    from: &Permutation,
    to: &Permutation,
) -> Result<GeodesicPath, MeanderError> {
    assert_eq!(from.n(), to.n(), "order mismatch in lattice_geodesic");
    NoncrossingPartition::from_permutation(from).map_err(|source| MeanderError::NotInLattice {
        role: "from",
        source,
    })?;
    NoncrossingPartition::from_permutation(to).map_err(|source| MeanderError::NotInLattice {
        role: "to",
        source,
    })?;
    let path = GeodesicPath {
        vertices: geodesic_vertices(from, to),
    };
    debug_assert_eq!(path.validate(), Ok(()));
    Ok(path)
}

fn geodesic_vertices(from: &Permutation, to: &Permutation) -> Vec<Permutation> {
    if from == to {
        return vec![from.clone()];
    }
    let n = from.n();
    let mut from_rotated = from.clone();
    let mut to_rotated = to.clone();
    let mut rotations = 0usize;
    while to_rotated.apply(n) != n {
        from_rotated = dual_label(&from_rotated);
        to_rotated = dual_label(&to_rotated);
        rotations += 1;
        assert!(
            rotations < 2 * n,
            "some dual rotation must give the target a fixed point at n"
        );
    }
    let rotated_path = if from_rotated.apply(n) == n {
        geodesic_vertices(&restrict(&from_rotated), &restrict(&to_rotated))
            .iter()
            .map(extend)
            .collect()
    } else {
        // Splitting out the singleton {n} costs one step and brings the
        // endpoints one unit closer.
        let i = from_rotated.apply(n);
        let split = Permutation::transposition(n, i, n).compose(&from_rotated);
        let mut vertices = vec![from_rotated.clone()];
        vertices.extend(geodesic_vertices(&split, &to_rotated));
        vertices
    };
    rotated_path
        .into_iter()
        .map(|mut v| {
            for _ in 0..rotations {
                v = undual_label(&v);
            }
            v
        })
        .collect()
}

/// Drops the fixed point `n`.
fn restrict(p: &Permutation) -> Permutation {
    let n = p.n();
    debug_assert_eq!(p.apply(n), n);
    Permutation::from_images(p.images()[..n - 1].to_vec())
        .expect("restriction of a permutation fixing n")
}

/// Re-adds `n` as a fixed point.
fn extend(p: &Permutation) -> Permutation {
    let mut images = p.images().to_vec();
    images.push(p.n() + 1);
    Permutation::from_images(images).expect("extension by a fixed point")
}
