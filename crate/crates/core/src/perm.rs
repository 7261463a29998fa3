//! Permutations of `{1..n}` and the transposition Cayley metric.
//!
//! Points are 1-based throughout. Composition follows the left-action
//! convention: `a.compose(&b)` applies `b` first, so `(12)(23) = (123)`.
//! Distances in the Cayley graph of all transpositions are computed by the
//! orbit-count formula `d(e, a) = n - r` where `r` is the number of cycles
//! of `a` including fixed points; the graph itself is never materialized.

use std::fmt;

use thiserror::Error;

/// Error constructing or parsing a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("element {value} out of range 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("element {0} appears more than once")]
    Repeated(usize),
    #[error("expected {expected} images, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("malformed permutation text: {0}")]
    Syntax(String),
}

/// A bijection of `{1..n}`, stored by its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[i - 1]` is the image of `i`; every value in `1..=n` appears once.
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation `e` of order `n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "order must be at least 1");
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The successor function `s = (1 2 ... n)`: `i -> i + 1`, `n -> 1`.
    pub fn successor(n: usize) -> Self {
        assert!(n >= 1, "order must be at least 1");
        Permutation {
            images: (1..=n).map(|i| i % n + 1).collect(),
        }
    }

    /// The transposition `(a b)` of order `n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a != b, "transposition needs two distinct points");
        assert!((1..=n).contains(&a) && (1..=n).contains(&b));
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// Builds a permutation from its image sequence (`images[i-1]` = image of `i`),
    /// checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::WrongLength {
                expected: 1,
                got: 0,
            });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(PermError::OutOfRange { value: v, n });
            }
            if seen[v - 1] {
                return Err(PermError::Repeated(v));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of order `n` from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        assert!(n >= 1, "order must be at least 1");
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (pos, &v) in cycle.iter().enumerate() {
                if v < 1 || v > n {
                    return Err(PermError::OutOfRange { value: v, n });
                }
                if seen[v - 1] {
                    return Err(PermError::Repeated(v));
                }
                seen[v - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                if next < 1 || next > n {
                    return Err(PermError::OutOfRange { value: next, n });
                }
                images[v - 1] = next;
            }
        }
        Ok(Permutation { images })
    }

    /// The order `n` of the ambient symmetric group.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the point `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Image sequence in one-line notation.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition with the left-action convention: the result maps
    /// `i -> self(other(i))`, i.e. `other` is applied first.
    ///
    /// Panics if the orders differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "order mismatch in compose");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Canonical cycle decomposition, fixed points included.
    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        // Scanning from the smallest unvisited point already puts each cycle
        // minimum first and sorts cycles by minimum.
        CycleDecomposition { n, cycles }
    }

    /// Number of orbits `r`, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                x = self.apply(x);
            }
        }
        count
    }

    /// Distance from the identity in the transposition Cayley graph:
    /// `n` minus the number of orbits.
    pub fn reflection_length(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// Parses cycle notation (`"(1 5)(2 4 3 6)"`, elements separated by
    /// whitespace or commas, omitted points fixed, `"e"` or `"()"` for the
    /// identity) or one-line notation (`n` whitespace-separated images).
    pub fn parse(text: &str, n: usize) -> Result<Self, PermError> {
        assert!(n >= 1, "order must be at least 1");
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(PermError::Syntax("empty input".into()));
        }
        if trimmed == "e" || trimmed == "()" {
            return Ok(Permutation::identity(n));
        }
        if trimmed.starts_with('(') {
            parse_cycle_notation(trimmed, n)
        } else {
            parse_one_line(trimmed, n)
        }
    }
}

/// Distance between two permutations in the Cayley graph of all
/// transpositions: `n - r` where `r` is the orbit count of `a^-1 b`.
///
/// Panics if the orders differ.
pub fn cayley_distance(a: &Permutation, b: &Permutation) -> usize {
    assert_eq!(a.n(), b.n(), "order mismatch in cayley_distance");
    a.inverse().compose(b).reflection_length()
}

/// All permutations of order `n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    assert!(n >= 1, "order must be at least 1");
    let mut next: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            next = Some(succ);
        }
        Some(Permutation { images: current })
    })
}

/// Advances the sequence to its lexicographic successor in place; returns
/// false when the sequence was already the last one.
fn next_lex(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

fn parse_cycle_notation(text: &str, n: usize) -> Result<Permutation, PermError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(PermError::Syntax(format!(
                "expected '(' at \"{}\"",
                truncate_for_error(rest)
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| PermError::Syntax("unbalanced '('".into()))?;
        let inner = &rest[1..close];
        let mut cycle = Vec::new();
        for token in inner.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let v: usize = token
                .parse()
                .map_err(|_| PermError::Syntax(format!("bad element \"{token}\"")))?;
            cycle.push(v);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = &rest[close + 1..];
    }
    Permutation::from_cycles(n, &cycles)
}

fn parse_one_line(text: &str, n: usize) -> Result<Permutation, PermError> {
    let mut images = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        let v: usize = token
            .parse()
            .map_err(|_| PermError::Syntax(format!("bad element \"{token}\"")))?;
        images.push(v);
    }
    if images.len() != n {
        return Err(PermError::WrongLength {
            expected: n,
            got: images.len(),
        });
    }
    Permutation::from_images(images)
}

fn truncate_for_error(s: &str) -> String {
    s.chars().take(16).collect()
}

/// Canonical cycle notation: fixed points omitted, identity printed as `e`,
/// each cycle starting at its minimum, cycles ordered by minimum.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let decomposition = self.cycles();
        let mut wrote = false;
        for cycle in decomposition.iter() {
            if cycle.len() == 1 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// Disjoint cycles covering `{1..n}`, fixed points included, each cycle
/// rotated so its smallest element comes first, cycles sorted by smallest
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Orbit count `r`, satisfying `1 <= r <= n`.
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.cycles.iter().map(|c| c.as_slice())
    }

    /// Cycles of length at least 2.
    pub fn nontrivial(&self) -> impl Iterator<Item = &[usize]> {
        self.iter().filter(|c| c.len() > 1)
    }

    pub fn into_cycles(self) -> Vec<Vec<usize>> {
        self.cycles
    }
}
