//! The glued combinatorial surface attached to a permutation.
//!
//! For each cycle `(c1 c2 ... ck)` of `sigma` we take a disc whose boundary
//! reads `odd(c1), even(c1), odd(c2), ..., even(ck)` counter-clockwise, with
//! the interior edge labeled `c_i` running from `even(c_i)` to
//! `odd(sigma(c_i))`. For each cycle of the dual `sigma^-1 s` we take a disc
//! traversing those same labeled edges clockwise. Identifying the two copies
//! of each labeled edge glues the discs into a connected oriented surface
//! with `2n` marked boundary vertices and `3n` edges; it is a disc exactly
//! when `sigma` labels a noncrossing partition, and its genus measures the
//! failure of interval membership.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::perm::{cayley_distance, Permutation};

/// A marked point on the dividing line: `Odd(i)` is the left point of the
/// pair labeled `i`, `Even(i)` the right point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MarkedPoint {
    Odd(usize),
    Even(usize),
}

impl fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkedPoint::Odd(i) => write!(f, "⌐{i}"),
            MarkedPoint::Even(i) => write!(f, "{i}′"),
        }
    }
}

/// One step of a face's boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedEdge {
    pub from: MarkedPoint,
    pub to: MarkedPoint,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Segment of the original disc boundary between consecutive marked points.
    Boundary,
    /// Interior arc labeled by a point of `{1..n}`. `forward` is true when the
    /// traversal agrees with the canonical orientation `even(i) -> odd(sigma(i))`
    /// (counter-clockwise in the discs coming from `sigma`).
    Interior { label: usize, forward: bool },
}

/// Which half of the construction a face comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceSide {
    /// A cycle of `sigma`.
    Primal,
    /// A cycle of the dual `sigma^-1 s`.
    Dual,
}

#[derive(Debug, Clone)]
pub struct Face {
    pub side: FaceSide,
    /// The permutation cycle this face was built from.
    pub cycle: Vec<usize>,
    /// Closed boundary walk, counter-clockwise.
    pub edges: Vec<DirectedEdge>,
}

/// The glued face complex: `2n` vertices, `3n` edges (`2n` boundary, `n`
/// interior), one face per cycle of `sigma` and per cycle of its dual.
#[derive(Debug, Clone)]
pub struct CombinatorialSurface {
    n: usize,
    faces: Vec<Face>,
}

/// Builds the surface for an arbitrary permutation (crossing allowed).
pub fn build_surface(sigma: &Permutation) -> CombinatorialSurface {
    let n = sigma.n();
    let s = Permutation::successor(n);
    let dual = sigma.inverse().compose(&s);

    let mut faces = Vec::new();
    for cycle in sigma.cycles().iter() {
        let mut edges = Vec::new();
        for (pos, &c) in cycle.iter().enumerate() {
            let next = cycle[(pos + 1) % cycle.len()];
            debug_assert_eq!(sigma.apply(c), next);
            edges.push(DirectedEdge {
                from: MarkedPoint::Odd(c),
                to: MarkedPoint::Even(c),
                kind: EdgeKind::Boundary,
            });
            edges.push(DirectedEdge {
                from: MarkedPoint::Even(c),
                to: MarkedPoint::Odd(next),
                kind: EdgeKind::Interior {
                    label: c,
                    forward: true,
                },
            });
        }
        faces.push(Face {
            side: FaceSide::Primal,
            cycle: cycle.to_vec(),
            edges,
        });
    }
    for cycle in dual.cycles().iter() {
        let mut edges = Vec::new();
        for (pos, &c) in cycle.iter().enumerate() {
            let next = cycle[(pos + 1) % cycle.len()];
            debug_assert_eq!(dual.apply(c), next);
            let succ = c % n + 1;
            debug_assert_eq!(sigma.apply(next), succ);
            edges.push(DirectedEdge {
                from: MarkedPoint::Even(c),
                to: MarkedPoint::Odd(succ),
                kind: EdgeKind::Boundary,
            });
            edges.push(DirectedEdge {
                from: MarkedPoint::Odd(succ),
                to: MarkedPoint::Even(next),
                kind: EdgeKind::Interior {
                    label: next,
                    forward: false,
                },
            });
        }
        faces.push(Face {
            side: FaceSide::Dual,
            cycle: cycle.to_vec(),
            edges,
        });
    }
    let surface = CombinatorialSurface { n, faces };
    debug_assert!(surface.check_gluing().is_ok());
    surface
}

impl CombinatorialSurface {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Distinct marked points appearing on any face.
    pub fn vertex_count(&self) -> usize {
        let mut points = HashSet::new();
        for face in &self.faces {
            for edge in &face.edges {
                points.insert(edge.from);
                points.insert(edge.to);
            }
        }
        points.len()
    }

    /// Edges after identification: distinct boundary segments plus distinct
    /// interior labels.
    pub fn edge_count(&self) -> usize {
        let mut boundary = HashSet::new();
        let mut interior = HashSet::new();
        for face in &self.faces {
            for edge in &face.edges {
                match edge.kind {
                    EdgeKind::Boundary => {
                        boundary.insert((edge.from, edge.to));
                    }
                    EdgeKind::Interior { label, .. } => {
                        interior.insert(label);
                    }
                }
            }
        }
        boundary.len() + interior.len()
    }

    /// `V - E + F` of the glued complex. Equals `1` exactly when the
    /// permutation labels a noncrossing partition.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Verifies the gluing discipline: every interior label appears in
    /// exactly two faces, once per orientation.
    pub fn check_gluing(&self) -> Result<(), String> {
        let mut seen: HashMap<usize, (u32, u32)> = HashMap::new();
        for face in &self.faces {
            for edge in &face.edges {
                if let EdgeKind::Interior { label, forward } = edge.kind {
                    let entry = seen.entry(label).or_insert((0, 0));
                    if forward {
                        entry.0 += 1;
                    } else {
                        entry.1 += 1;
                    }
                }
            }
        }
        for label in 1..=self.n {
            match seen.get(&label) {
                Some(&(1, 1)) => {}
                other => {
                    return Err(format!(
                        "interior edge {label} has orientation counts {other:?}, expected (1, 1)"
                    ));
                }
            }
        }
        if seen.len() != self.n {
            return Err(format!(
                "expected {} interior labels, found {}",
                self.n,
                seen.len()
            ));
        }
        Ok(())
    }

    /// Traces the boundary circles of the glued surface and returns their
    /// count together with, for a single circle, the cyclic order of marked
    /// points starting from `Odd(1)`.
    pub fn boundary_components(&self) -> BoundaryTrace {
        // Boundary edges survive gluing untouched; each marked point carries
        // exactly one outgoing and one incoming boundary edge.
        let mut next: HashMap<MarkedPoint, MarkedPoint> = HashMap::new();
        for face in &self.faces {
            for edge in &face.edges {
                if edge.kind == EdgeKind::Boundary {
                    let previous = next.insert(edge.from, edge.to);
                    assert!(
                        previous.is_none(),
                        "marked point {} has two outgoing boundary edges",
                        edge.from
                    );
                }
            }
        }
        let mut visited: HashSet<MarkedPoint> = HashSet::new();
        let mut components = 0;
        let mut single_walk = None;
        let mut starts: Vec<MarkedPoint> = next.keys().copied().collect();
        starts.sort();
        for start in starts {
            if visited.contains(&start) {
                continue;
            }
            components += 1;
            let mut walk = Vec::new();
            let mut at = start;
            loop {
                walk.push(at);
                visited.insert(at);
                at = next[&at];
                if at == start {
                    break;
                }
            }
            single_walk = Some(walk);
        }
        BoundaryTrace {
            components,
            marked_order: if components == 1 { single_walk } else { None },
        }
    }

    /// True when the face-adjacency graph (faces sharing an interior label)
    /// is connected.
    pub fn is_connected(&self) -> bool {
        if self.faces.is_empty() {
            return true;
        }
        let mut label_faces: HashMap<usize, Vec<usize>> = HashMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            for edge in &face.edges {
                if let EdgeKind::Interior { label, .. } = edge.kind {
                    label_faces.entry(label).or_default().push(f);
                }
            }
        }
        let mut seen = vec![false; self.faces.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(f) = queue.pop_front() {
            for edge in &self.faces[f].edges {
                if let EdgeKind::Interior { label, .. } = edge.kind {
                    for &g in &label_faces[&label] {
                        if !seen[g] {
                            seen[g] = true;
                            queue.push_back(g);
                        }
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Result of tracing the boundary of the glued surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryTrace {
    pub components: usize,
    /// Cyclic order of the marked points when there is a single circle.
    pub marked_order: Option<Vec<MarkedPoint>>,
}

/// Genus by the distance formula
/// `(d(e, sigma) + d(sigma, s) - d(e, s)) / 2`; always a nonnegative integer,
/// zero exactly on interval members, and equal to `(1 - chi) / 2` for the
/// glued surface.
pub fn genus(sigma: &Permutation) -> usize {
    let n = sigma.n();
    let s = Permutation::successor(n);
    let defect = sigma.reflection_length() + cayley_distance(sigma, &s) - (n - 1);
    debug_assert!(defect.is_multiple_of(2), "interval defect must be even");
    defect / 2
}
