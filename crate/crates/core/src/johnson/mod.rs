//! k-subsets, merged Johnson graphs `J(n,k)_I`, equipartitions, and small
//! induced-subgraph census.

pub mod codec;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};

/// Materialized adjacency is kept only below these sizes.
pub const MAX_MATERIALIZED_VERTICES: u64 = 1_000_000;
pub const MAX_MATERIALIZED_EDGES: u64 = 50_000_000;

/// A k-subset of `{0, .., n-1}` stored as a bitmask (`n <= 64`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KSubset {
    n: usize,
    bits: u64,
}

impl KSubset {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n > 64 {
            return Err(Error::OutOfRange(format!("bitmask subsets need n <= 64, got {n}")));
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::OutOfRange(format!("mask {bits:#x} has points outside 0..{n}")));
        }
        Ok(KSubset { n, bits })
    }

    /// From 0-based points; duplicates are rejected.
    pub fn from_points(n: usize, points: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in points {
            if p as usize >= n || p >= 64 || bits >> p & 1 == 1 {
                return Err(Error::OutOfRange(format!("bad point list {points:?} for n = {n}")));
            }
            bits |= 1 << p;
        }
        Self::new(n, bits)
    }

    /// From 1-based points, as written in the paper-facing surface.
    pub fn from_one_based(n: usize, points: &[u32]) -> Result<Self> {
        if points.contains(&0) {
            return Err(Error::OutOfRange("1-based points must be positive".into()));
        }
        let zero: Vec<u32> = points.iter().map(|p| p - 1).collect();
        Self::from_points(n, &zero)
    }

    pub(crate) fn from_mask_unchecked(n: usize, bits: u64) -> Self {
        KSubset { n, bits }
    }

    pub fn from_rank(n: usize, k: usize, rank: u64) -> Result<Self> {
        Ok(KSubset { n, bits: codec::unrank_checked(n, k, rank)? })
    }

    /// All k-subsets of an n-set in co-lex order.
    pub fn all(n: usize, k: usize) -> impl Iterator<Item = KSubset> {
        codec::masks(n, k).map(move |bits| KSubset { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn rank(&self) -> u64 {
        codec::rank_mask(self.bits)
    }

    /// 0-based points in increasing order.
    pub fn points(&self) -> Vec<u32> {
        (0..64).filter(|i| self.bits >> i & 1 == 1).collect()
    }

    pub fn contains(&self, x: u32) -> bool {
        x < 64 && self.bits >> x & 1 == 1
    }

    pub fn intersection_size(&self, other: &KSubset) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn complement(&self) -> KSubset {
        KSubset { n: self.n, bits: full_mask(self.n) & !self.bits }
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points().iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KSubset[{}]{}", self.n, self)
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The index set I of a merged Johnson graph, a nonempty subset of `{1..k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MergeSet {
    k: usize,
    set: BTreeSet<usize>,
}

impl MergeSet {
    pub fn new(k: usize, indices: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::OutOfRange("I must be nonempty".into()));
        }
        if let Some(&i) = set.iter().find(|&&i| i == 0 || i > k) {
            return Err(Error::OutOfRange(format!("index {i} outside 1..={k}")));
        }
        Ok(MergeSet { k, set })
    }

    /// `I = {1..k}`.
    pub fn full(k: usize) -> Self {
        MergeSet { k, set: (1..=k).collect() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn indices(&self) -> Vec<usize> {
        self.set.iter().copied().collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.set.len() == self.k
    }

    pub fn is(&self, indices: &[usize]) -> bool {
        self.set == indices.iter().copied().collect()
    }

    /// `I' = I \ {k}`.
    pub fn i_prime(&self) -> BTreeSet<usize> {
        self.set.iter().copied().filter(|&i| i != self.k).collect()
    }

    /// `I'' = k - I'`.
    pub fn i_double_prime(&self) -> BTreeSet<usize> {
        self.i_prime().iter().map(|&i| self.k - i).collect()
    }

    /// `{1..k} \ I`, or `None` when I is full.
    pub fn complement(&self) -> Option<MergeSet> {
        let rest: Vec<usize> = (1..=self.k).filter(|i| !self.set.contains(i)).collect();
        MergeSet::new(self.k, &rest).ok()
    }

    /// `k + 1 - I`.
    pub fn reflected(&self) -> BTreeSet<usize> {
        self.set.iter().map(|&i| self.k + 1 - i).collect()
    }

    /// `e = C(n,k)/2` when `n = 2k`.
    pub fn e(&self, n: usize) -> Option<u64> {
        (n == 2 * self.k).then(|| codec::binomial(n as u64, self.k as u64) / 2)
    }

    /// Bit `i` set iff `i ∈ I`.
    pub fn bitset(&self) -> u64 {
        self.set.iter().fold(0, |acc, &i| acc | 1 << i)
    }
}

impl fmt::Display for MergeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.set.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Whether distinct k-subsets are adjacent in `J(n,k)_I`.
pub fn adjacent(n: usize, k: usize, merge: &MergeSet, a: &KSubset, b: &KSubset) -> Result<bool> {
    if a.n() != n || b.n() != n {
        return Err(Error::DegreeMismatch(a.n().max(b.n()), n));
    }
    if a.k() != k || b.k() != k || merge.k() != k {
        return Err(Error::OutOfRange(format!("expected {k}-subsets and I ⊆ 1..={k}")));
    }
    if a == b {
        return Err(Error::OutOfRange("a vertex is not adjacent to itself".into()));
    }
    Ok(merge.contains(k - a.intersection_size(b)))
}

/// Summary of a materialized graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub vertices: u64,
    pub edges: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Common degree when the graph is regular.
    pub degree: Option<usize>,
    pub connected: bool,
    pub components: usize,
}

/// The merged Johnson graph `J(n,k)_I` on co-lex ranks.
#[derive(Clone, Debug)]
pub struct MergedJohnsonGraph {
    n: usize,
    k: usize,
    merge: MergeSet,
    adjacency: Option<Vec<Vec<u32>>>,
}

impl MergedJohnsonGraph {
    /// Builds the graph, materializing neighbour lists when small enough.
    pub fn build(n: usize, k: usize, merge: &MergeSet) -> Result<Self> {
        let mut g = Self::oracle(n, k, merge)?;
        if n <= 64 && g.vertex_count() <= MAX_MATERIALIZED_VERTICES {
            let edges = g.vertex_count() as u128 * g.expected_degree() as u128 / 2;
            if edges <= MAX_MATERIALIZED_EDGES as u128 {
                let adj = (0..g.vertex_count()).map(|v| g.enumerate_neighbours(v)).collect();
                g.adjacency = Some(adj);
            }
        }
        Ok(g)
    }

    /// Adjacency oracle only; nothing is materialized.
    pub fn oracle(n: usize, k: usize, merge: &MergeSet) -> Result<Self> {
        if k < 2 || 2 * k > n {
            return Err(Error::OutOfRange(format!("need 2 <= k <= n/2, got n = {n}, k = {k}")));
        }
        if merge.k() != k {
            return Err(Error::OutOfRange(format!("I is a subset of 1..={}, not 1..={k}", merge.k())));
        }
        Ok(MergedJohnsonGraph { n, k, merge: merge.clone(), adjacency: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn merge_set(&self) -> &MergeSet {
        &self.merge
    }

    pub fn vertex_count(&self) -> u64 {
        codec::binomial(self.n as u64, self.k as u64)
    }

    pub fn is_materialized(&self) -> bool {
        self.adjacency.is_some()
    }

    /// `Σ_{i∈I} C(k,i)·C(n−k,i)`.
    pub fn expected_degree(&self) -> u64 {
        let (n, k) = (self.n as u64, self.k as u64);
        self.merge
            .indices()
            .iter()
            .map(|&i| codec::binomial(k, i as u64) * codec::binomial(n - k, i as u64))
            .sum()
    }

    /// Adjacency of two vertex ranks; a vertex is not adjacent to itself.
    pub fn adjacent_ranks(&self, u: u64, v: u64) -> bool {
        if u == v {
            return false;
        }
        let common = if self.n <= 64 {
            (codec::unrank_mask(u, self.k) & codec::unrank_mask(v, self.k)).count_ones() as usize
        } else {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            codec::unrank_sorted(u, self.k, &mut a);
            codec::unrank_sorted(v, self.k, &mut b);
            a.iter().filter(|x| b.binary_search(x).is_ok()).count()
        };
        self.merge.contains(self.k - common)
    }

    /// Sorted neighbour ranks of `v`.
    pub fn neighbours(&self, v: u64) -> Vec<u32> {
        match &self.adjacency {
            Some(adj) => adj[v as usize].clone(),
            None => self.enumerate_neighbours(v),
        }
    }

    /// Neighbours by swapping `i` points of the vertex for `i` outside points.
    fn enumerate_neighbours(&self, v: u64) -> Vec<u32> {
        assert!(self.n <= 64, "neighbour enumeration needs n <= 64");
        let mask = codec::unrank_mask(v, self.k);
        let inside: Vec<u32> = (0..64).filter(|i| mask >> i & 1 == 1).collect();
        let outside: Vec<u32> = (0..self.n as u32).filter(|i| mask >> i & 1 == 0).collect();
        let mut out = Vec::with_capacity(self.expected_degree() as usize);
        for i in self.merge.indices() {
            let removals: Vec<u64> = codec::masks(self.k, i).map(|s| spread(s, &inside)).collect();
            for add in codec::masks(outside.len(), i) {
                let add = spread(add, &outside);
                for &rem in &removals {
                    out.push(codec::rank_mask((mask & !rem) | add) as u32);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All edges `(u, v)` with `u < v`, in order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in self.neighbours(u) {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    pub fn adjacency(&self) -> Option<&[Vec<u32>]> {
        self.adjacency.as_deref()
    }

    fn require_materialized(&self) -> Result<&[Vec<u32>]> {
        self.adjacency.as_deref().ok_or_else(|| {
            Error::Unsupported(format!("J({},{}) is too large to materialize", self.n, self.k))
        })
    }

    /// Degree, edge and component statistics by breadth-first search.
    pub fn stats(&self) -> Result<GraphStats> {
        let adj = self.require_materialized()?;
        let (components, _) = components(adj);
        let degrees = adj.iter().map(Vec::len);
        let min_degree = degrees.clone().min().unwrap_or(0);
        let max_degree = degrees.clone().max().unwrap_or(0);
        let edges = degrees.map(|d| d as u64).sum::<u64>() / 2;
        Ok(GraphStats {
            vertices: adj.len() as u64,
            edges,
            min_degree,
            max_degree,
            degree: (min_degree == max_degree).then_some(min_degree),
            connected: components == 1,
            components,
        })
    }

    /// Plain graph view for generic algorithms.
    pub fn to_simple(&self) -> Result<SimpleGraph> {
        Ok(SimpleGraph { adj: self.require_materialized()?.to_vec() })
    }

    /// Text edge list, one `u v` line per edge, 1-based ranks.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// DIMACS: `p edge V E` followed by `e u v` lines.
    pub fn to_dimacs(&self) -> String {
        let edges = self.edges();
        let mut s = format!("p edge {} {}\n", self.vertex_count(), edges.len());
        for (u, v) in edges {
            s.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        s
    }

    /// `{n, k, I, vertices, edges}` with 1-based points and ranks.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<Vec<u32>> = (0..self.vertex_count())
            .map(|r| {
                let mut buf = Vec::new();
                codec::unrank_sorted(r, self.k, &mut buf);
                buf.iter().map(|x| x + 1).collect()
            })
            .collect();
        let edges: Vec<[u32; 2]> = self.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
        json!({
            "n": self.n,
            "k": self.k,
            "I": self.merge.indices(),
            "vertices": vertices,
            "edges": edges,
        })
    }
}

/// Places the bits of `sub` (over `positions.len()` slots) onto `positions`.
fn spread(mut sub: u64, positions: &[u32]) -> u64 {
    let mut out = 0;
    while sub != 0 {
        out |= 1u64 << positions[sub.trailing_zeros() as usize];
        sub &= sub - 1;
    }
    out
}

/// Component count and a component id per vertex.
fn components(adj: &[Vec<u32>]) -> (usize, Vec<usize>) {
    let mut comp = vec![usize::MAX; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if comp[y as usize] == usize::MAX {
                    comp[y as usize] = count;
                    queue.push_back(y as usize);
                }
            }
        }
        count += 1;
    }
    (count, comp)
}

/// BFS distance between two k-subsets in `J(n,k)`, checked against
/// `k − |K ∩ K'|`. A disagreement is reported as an internal error.
pub fn johnson_distance_check(n: usize, k: usize, a: &KSubset, b: &KSubset) -> Result<usize> {
    if 2 * k > n || a.n() != n || b.n() != n || a.k() != k || b.k() != k {
        return Err(Error::OutOfRange(format!("need two {k}-subsets of {n} points with k <= n/2")));
    }
    let formula = k - a.intersection_size(b);
    let mut dist = std::collections::HashMap::from([(a.bits(), 0usize)]);
    let mut queue = VecDeque::from([a.bits()]);
    let outside_all = full_mask(n);
    let found = loop {
        let Some(x) = queue.pop_front() else { break None };
        let d = dist[&x];
        if x == b.bits() {
            break Some(d);
        }
        let mut ins = x;
        while ins != 0 {
            let i = ins & ins.wrapping_neg();
            ins &= ins - 1;
            let mut outs = outside_all & !x;
            while outs != 0 {
                let o = outs & outs.wrapping_neg();
                outs &= outs - 1;
                let y = (x & !i) | o;
                if !dist.contains_key(&y) {
                    dist.insert(y, d + 1);
                    queue.push_back(y);
                }
            }
        }
    };
    match found {
        Some(d) if d == formula => Ok(d),
        other => Err(Error::Internal(format!("BFS distance {other:?} but k − |K∩K'| = {formula}"))),
    }
}

/// An unordered pair of complementary halves of `{0, .., m-1}`, keyed by
/// the half containing point 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Equipartition {
    m: usize,
    key: u64,
}

impl Equipartition {
    /// From either half.
    pub fn from_half(m: usize, half: &KSubset) -> Result<Self> {
        if m % 2 != 0 || m > 64 || m == 0 || half.n() != m || half.k() != m / 2 {
            return Err(Error::OutOfRange(format!("{half} is not half of {m} points")));
        }
        let key = if half.contains(0) { half.bits() } else { half.complement().bits() };
        Ok(Equipartition { m, key })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The half containing point 0.
    pub fn key(&self) -> KSubset {
        KSubset::from_mask_unchecked(self.m, self.key)
    }

    pub fn other(&self) -> KSubset {
        self.key().complement()
    }

    /// The half containing `x`.
    pub fn part_containing(&self, x: u32) -> KSubset {
        if self.key >> x & 1 == 1 {
            self.key()
        } else {
            self.other()
        }
    }

    /// Index among all equipartitions of `m` points, matching
    /// [`crate::permgroup::ActionDomain::Equipartitions`].
    pub fn index(&self) -> u64 {
        crate::permgroup::equipartition_label(self.m, self.key)
    }

    pub fn from_index(m: usize, index: u64) -> Result<Self> {
        if m % 2 != 0 || m == 0 || m > 64 || index >= codec::binomial(m as u64 - 1, m as u64 / 2 - 1) {
            return Err(Error::OutOfRange(format!("no equipartition {index} of {m} points")));
        }
        Ok(Equipartition { m, key: crate::permgroup::equipartition_mask(m, index) })
    }

    pub fn count(m: usize) -> u64 {
        codec::binomial(m as u64, m as u64 / 2) / 2
    }
}

impl fmt::Display for Equipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.key(), self.other())
    }
}

impl fmt::Debug for Equipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Equipartition{self}")
    }
}

/// `K ↦ {K ∪ {n}, N ∖ K}` for odd `n` and `|K| = (n−1)/2`; the new point is `n`
/// (0-based), i.e. `n+1` in 1-based terms.
pub fn equipartition_bijection(n: usize, subset: &KSubset) -> Result<Equipartition> {
    if n % 2 == 0 || n >= 64 || subset.n() != n || subset.k() != (n - 1) / 2 {
        return Err(Error::OutOfRange(format!("need odd n < 64 and a {}-subset", (n.max(1) - 1) / 2)));
    }
    let half = KSubset::from_mask_unchecked(n + 1, subset.bits() | 1 << n);
    Equipartition::from_half(n + 1, &half)
}

/// Inverse of [`equipartition_bijection`]: the part containing the new point,
/// with that point removed.
pub fn equipartition_inverse(n: usize, phi: &Equipartition) -> Result<KSubset> {
    if n % 2 == 0 || phi.m() != n + 1 {
        return Err(Error::OutOfRange(format!("equipartition of {} points does not come from n = {n}", phi.m())));
    }
    let part = phi.part_containing(n as u32);
    Ok(KSubset::from_mask_unchecked(n, part.bits() & !(1 << n)))
}

/// An undirected simple graph as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
}

impl SimpleGraph {
    pub fn from_edges(order: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u == v || u as usize >= order || v as usize >= order {
                return Err(Error::OutOfRange(format!("bad edge ({u},{v})")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(SimpleGraph { adj })
    }

    /// Disjoint union of `copies` complete graphs on `size` vertices.
    pub fn disjoint_cliques(copies: usize, size: usize) -> Self {
        let mut edges = Vec::new();
        for c in 0..copies {
            let base = (c * size) as u32;
            for i in 0..size as u32 {
                for j in i + 1..size as u32 {
                    edges.push((base + i, base + j));
                }
            }
        }
        Self::from_edges(copies * size, &edges).unwrap()
    }

    pub fn cycle(order: usize) -> Self {
        let edges: Vec<(u32, u32)> = (0..order as u32).map(|i| (i, (i + 1) % order as u32)).collect();
        Self::from_edges(order, &edges).unwrap()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn component_count(&self) -> usize {
        components(&self.adj).0
    }
}

/// Isomorphism invariant of a graph on at most four vertices, given as an
/// upper-triangular edge bitmask over the pairs `(i,j)`, `i < j`, in
/// lexicographic order.
fn small_fingerprint(m: usize, edge_bits: u32) -> (u32, Vec<u32>, u32) {
    let has = |i: usize, j: usize| edge_bits >> pair_index(m, i.min(j), i.max(j)) & 1 == 1;
    let mut degrees: Vec<u32> = (0..m).map(|i| (0..m).filter(|&j| j != i && has(i, j)).count() as u32).collect();
    degrees.sort_unstable();
    let mut triangles = 0;
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if has(a, b) && has(b, c) && has(a, c) {
                    triangles += 1;
                }
            }
        }
    }
    (edge_bits.count_ones(), degrees, triangles)
}

fn pair_index(m: usize, i: usize, j: usize) -> usize {
    // pairs (0,1),(0,2),..,(0,m-1),(1,2),..
    i * (2 * m - i - 1) / 2 + (j - i - 1)
}

/// Confirms that [`small_fingerprint`] separates all isomorphism classes of
/// graphs on `m <= 4` vertices, by comparing with canonical forms under all
/// vertex relabellings. Returns the number of classes.
pub fn small_graph_classes(m: usize) -> Result<usize> {
    if m > 4 {
        return Err(Error::Unsupported("fingerprints are only complete up to 4 vertices".into()));
    }
    let pairs = m * m.saturating_sub(1) / 2;
    let perms = all_permutations(m);
    let canonical = |bits: u32| -> u32 {
        perms
            .iter()
            .map(|p| {
                let mut out = 0u32;
                for i in 0..m {
                    for j in i + 1..m {
                        if bits >> pair_index(m, i, j) & 1 == 1 {
                            let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                            out |= 1 << pair_index(m, a, b);
                        }
                    }
                }
                out
            })
            .min()
            .unwrap()
    };
    let mut classes = HashSet::new();
    let mut prints = HashSet::new();
    for bits in 0..1u32 << pairs {
        if classes.insert(canonical(bits)) && !prints.insert(small_fingerprint(m, bits)) {
            return Err(Error::Internal(format!("fingerprint collision on {m} vertices")));
        }
    }
    Ok(classes.len())
}

fn all_permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes among induced `m`-vertex subgraphs, for
/// `m ∈ {3, 4}` and graphs of order at most 64.
pub fn induced_subgraph_classes(graph: &SimpleGraph, m: usize) -> Result<usize> {
    if !(3..=4).contains(&m) {
        return Err(Error::Unsupported(format!("induced subgraph census for m = {m}")));
    }
    if graph.order() > 64 {
        return Err(Error::Unsupported(format!("graph of order {} exceeds 64", graph.order())));
    }
    let mut prints = HashSet::new();
    for mask in codec::masks(graph.order(), m) {
        let vs: Vec<u32> = (0..64).filter(|i| mask >> i & 1 == 1).collect();
        let mut bits = 0u32;
        for i in 0..m {
            for j in i + 1..m {
                if graph.has_edge(vs[i], vs[j]) {
                    bits |= 1 << pair_index(m, i, j);
                }
            }
        }
        prints.insert(small_fingerprint(m, bits));
    }
    Ok(prints.len())
}
