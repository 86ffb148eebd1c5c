//! Brute-force oracles. Each one checks a claim by direct computation on
//! vertex sets and group elements, independent of the decision tables.

mod suite;

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::johnson::{codec, MergedJohnsonGraph};
use crate::permgroup::{ActionDomain, Permutation, PermutationGroup};

pub use suite::{run_suite, Suite};

pub const MAX_BRUTEFORCE_VERTICES: u64 = 10;
pub const MAX_AMBIENT_ORDER: u128 = 10_000;
const MAX_SUBGROUP_GENERATORS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Confirmed,
    Refuted,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub claim: String,
    pub outcome: Outcome,
    pub evidence: Value,
    pub elapsed_ms: u64,
}

impl OracleReport {
    fn new(claim: impl Into<String>, ok: bool, evidence: Value, start: Instant) -> Self {
        OracleReport {
            claim: claim.into(),
            outcome: if ok { Outcome::Confirmed } else { Outcome::Refuted },
            evidence,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// A claim whose oracle itself failed to run.
    pub fn error(claim: impl Into<String>, err: &Error) -> Self {
        OracleReport { claim: claim.into(), outcome: Outcome::Refuted, evidence: json!({ "error": err.to_string() }), elapsed_ms: 0 }
    }

    pub fn is_confirmed(&self) -> bool {
        self.outcome == Outcome::Confirmed
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Calls `f` on each neighbour rank of `v`, for any `n`.
fn for_each_neighbour(graph: &MergedJohnsonGraph, v: u64, scratch: &mut Scratch, mut f: impl FnMut(u64)) {
    if graph.n() <= 64 {
        graph.neighbours(v).into_iter().for_each(|u| f(u64::from(u)));
    } else {
        for_each_swap_neighbour(graph, v, scratch, f);
    }
}

/// Neighbours by swapping `i` points in for `i` points out, on sorted point lists.
fn for_each_swap_neighbour(graph: &MergedJohnsonGraph, v: u64, scratch: &mut Scratch, mut f: impl FnMut(u64)) {
    let (n, k) = (graph.n(), graph.k());
    let Scratch { inside, outside, points, kept } = scratch;
    inside.clear();
    codec::unrank_sorted(v, k, inside);
    outside.clear();
    outside.extend((0..n as u32).filter(|x| inside.binary_search(x).is_err()));
    for i in graph.merge_set().indices() {
        for_each_combination(k, i, |rem| {
            kept.clear();
            kept.extend(inside.iter().enumerate().filter(|(j, _)| !rem.contains(j)).map(|(_, &x)| x));
            for_each_combination(outside.len(), i, |add| {
                // Merge the two sorted lists.
                points.clear();
                let (mut a, mut b) = (0, 0);
                while a < kept.len() || b < add.len() {
                    if b == add.len() || (a < kept.len() && kept[a] < outside[add[b]]) {
                        points.push(kept[a]);
                        a += 1;
                    } else {
                        points.push(outside[add[b]]);
                        b += 1;
                    }
                }
                f(codec::rank_sorted(points));
            });
        });
    }
}

#[derive(Default)]
struct Scratch {
    inside: Vec<u32>,
    kept: Vec<u32>,
    outside: Vec<u32>,
    points: Vec<u32>,
}

/// Calls `f` on every increasing `r`-tuple of indices below `len`.
fn for_each_combination(len: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > len {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        let Some(pos) = (0..r).rev().find(|&j| idx[j] < len - r + j) else { return };
        idx[pos] += 1;
        for j in pos + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// First edge whose image is a non-edge, or `None` when `p` is an
/// automorphism. `p` is a bijection, so edges mapping to edges suffices.
pub fn automorphism_counterexample(p: &Permutation, graph: &MergedJohnsonGraph) -> Result<Option<(u64, u64)>> {
    if p.degree() as u64 != graph.vertex_count() {
        return Err(Error::DegreeMismatch(p.degree(), graph.vertex_count() as usize));
    }
    let k = graph.k();
    // Above 64 points, adjacency is read off a table of sorted point lists.
    let table: Vec<u32> = if graph.n() > 64 {
        let mut buf = Vec::with_capacity(k);
        let mut t = Vec::with_capacity(graph.vertex_count() as usize * k);
        for v in 0..graph.vertex_count() {
            buf.clear();
            codec::unrank_sorted(v, k, &mut buf);
            t.extend_from_slice(&buf);
        }
        t
    } else {
        Vec::new()
    };
    let adjacent = |a: u64, b: u64| -> bool {
        if table.is_empty() {
            return graph.adjacent_ranks(a, b);
        }
        let (x, y) = (&table[a as usize * k..][..k], &table[b as usize * k..][..k]);
        a != b && graph.merge_set().contains(k - x.iter().filter(|e| y.binary_search(e).is_ok()).count())
    };
    let mut scratch = Scratch::default();
    for u in 0..graph.vertex_count() {
        let pu = p.apply(u as u32) as u64;
        let image_nbrs = graph.adjacency().map(|adj| &adj[pu as usize]);
        let mut bad = None;
        for_each_neighbour(graph, u, &mut scratch, |v| {
            if bad.is_some() || v < u {
                return;
            }
            let pv = p.apply(v as u32);
            let ok = match image_nbrs {
                Some(list) => list.binary_search(&pv).is_ok(),
                None => adjacent(pu, pv as u64),
            };
            if !ok {
                bad = Some((u, v));
            }
        });
        if bad.is_some() {
            return Ok(bad);
        }
    }
    Ok(None)
}

pub fn is_automorphism(p: &Permutation, graph: &MergedJohnsonGraph) -> Result<bool> {
    Ok(automorphism_counterexample(p, graph)?.is_none())
}

/// Confirms that `group` acts by automorphisms and is `r_expected`-regular
/// on the vertices.
pub fn regular_action_check(
    claim: &str,
    group: &PermutationGroup,
    graph: &MergedJohnsonGraph,
    r_expected: u128,
) -> OracleReport {
    let start = Instant::now();
    let vertices = graph.vertex_count();
    if group.degree() as u64 != vertices {
        return OracleReport::error(claim, &Error::DegreeMismatch(group.degree(), vertices as usize));
    }
    for (i, g) in group.generators().iter().enumerate() {
        match automorphism_counterexample(g, graph) {
            Ok(None) => {}
            Ok(Some((u, v))) => {
                let evidence = json!({ "generator": i, "edge": [u + 1, v + 1],
                    "image": [g.apply(u as u32) + 1, g.apply(v as u32) + 1] });
                return OracleReport::new(claim, false, evidence, start);
            }
            Err(e) => return OracleReport::error(claim, &e),
        }
    }
    match group.regularity_degree(&ActionDomain::Points { n: vertices as usize }) {
        Ok(r) => {
            let evidence = json!({ "vertices": vertices, "group_order": group.order().to_string(),
                "r": r.map(|r| r.to_string()), "r_expected": r_expected.to_string() });
            OracleReport::new(claim, r == Some(r_expected), evidence, start)
        }
        Err(e) => OracleReport::error(claim, &e),
    }
}

/// Exact `|Aut Γ|` of a graph with at most ten vertices by backtracking over
/// vertex images, pruned by degree and common-neighbour counts.
pub fn bruteforce_automorphism_group(graph: &MergedJohnsonGraph) -> Result<u128> {
    let v = graph.vertex_count();
    if v > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::SizeBound(format!("{v} vertices; brute force stops at {MAX_BRUTEFORCE_VERTICES}")));
    }
    let adj: Vec<Vec<bool>> =
        (0..v).map(|a| (0..v).map(|b| graph.adjacent_ranks(a, b)).collect()).collect();
    Ok(count_automorphisms(&adj))
}

/// Counts adjacency-preserving bijections of a graph given by its matrix.
pub fn count_automorphisms(adj: &[Vec<bool>]) -> u128 {
    let n = adj.len();
    let degree: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    let common = |a: usize, b: usize| (0..n).filter(|&c| adj[a][c] && adj[b][c]).count();
    let common_table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| common(a, b)).collect()).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        i: usize,
        adj: &[Vec<bool>],
        degree: &[usize],
        common: &[Vec<usize>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> u128 {
        let n = adj.len();
        if i == n {
            return 1;
        }
        let mut total = 0;
        for x in 0..n {
            if used[x] || degree[x] != degree[i] {
                continue;
            }
            let consistent = (0..i).all(|j| adj[i][j] == adj[x][image[j]] && common[i][j] == common[x][image[j]]);
            if !consistent {
                continue;
            }
            image[i] = x;
            used[x] = true;
            total += extend(i + 1, adj, degree, common, image, used);
            used[x] = false;
        }
        total
    }
    extend(0, adj, &degree, &common_table, &mut image, &mut used)
}

/// Fixed-point-free on vertices, or the identity.
fn is_semiregular_element(g: &Permutation) -> bool {
    g.is_identity() || g.fixed_points() == 0
}

/// Closure of `gens` as a set of elements, or `None` beyond `cap` elements.
fn closure(gens: &[Permutation], cap: usize) -> Option<Vec<Permutation>> {
    let degree = gens.first()?.degree();
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(y.clone());
                out.push(y);
            }
        }
    }
    Some(out)
}

fn element_key(elements: &[Permutation]) -> Vec<Vec<u32>> {
    let mut key: Vec<Vec<u32>> = elements.iter().map(|g| g.images().to_vec()).collect();
    key.sort_unstable();
    key
}

/// Searches the subgroups of `ambient` generated by at most three elements
/// for one of order `|V|` acting regularly on the vertices. Confirmed when
/// none exists.
///
/// A regular subgroup consists of the identity and fixed-point-free
/// elements, so only those are tried as generators, and partial subgroups
/// with a fixed-point element or more than `|V|` elements are pruned.
pub fn regular_subgroup_nonexistence(claim: &str, ambient: &PermutationGroup, graph: &MergedJohnsonGraph) -> OracleReport {
    let start = Instant::now();
    let v = graph.vertex_count();
    let order = ambient.order();
    if ambient.degree() as u64 != v {
        return OracleReport::error(claim, &Error::DegreeMismatch(ambient.degree(), v as usize));
    }
    if order > MAX_AMBIENT_ORDER {
        return OracleReport::error(claim, &Error::SizeBound(format!("ambient order {order}")));
    }
    if order % v as u128 != 0 {
        let evidence = json!({ "ambient_order": order.to_string(), "vertices": v, "note": "|V| does not divide |G|" });
        return OracleReport::new(claim, true, evidence, start);
    }
    let candidates: Vec<Permutation> = ambient
        .elements()
        .into_iter()
        .filter(|g| !g.is_identity() && is_semiregular_element(g) && v % g.order() == 0)
        .collect();
    let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut frontier: Vec<(Vec<Permutation>, Vec<Permutation>)> = vec![(Vec::new(), vec![Permutation::identity(v as usize)])];
    let mut explored = 0usize;
    for _ in 0..MAX_SUBGROUP_GENERATORS {
        let mut next = Vec::new();
        for (gens, elements) in &frontier {
            let members: HashSet<&Permutation> = elements.iter().collect();
            for c in &candidates {
                if members.contains(c) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(c.clone());
                let Some(sub) = closure(&g2, v as usize) else { continue };
                if v as usize % sub.len() != 0 || !sub.iter().all(is_semiregular_element) {
                    continue;
                }
                if !seen.insert(element_key(&sub)) {
                    continue;
                }
                explored += 1;
                if sub.len() as u64 == v {
                    let evidence = json!({ "regular_subgroup_generators":
                        g2.iter().map(|g| g.to_one_based()).collect::<Vec<_>>(), "explored": explored });
                    return OracleReport::new(claim, false, evidence, start);
                }
                next.push((g2, sub));
            }
        }
        frontier = next;
    }
    let evidence = json!({ "ambient_order": order.to_string(), "vertices": v,
        "semiregular_candidates": candidates.len(), "semiregular_subgroups_explored": explored });
    OracleReport::new(claim, true, evidence, start)
}

/// Confirms that `h` (degree `n = 2k`) has exactly two orbits on k-subsets,
/// both `r`-regular for one `r <= r_max`.
pub fn lemma_two_orbit_check(claim: &str, h: &PermutationGroup, tag: &str, r_max: u128) -> OracleReport {
    let start = Instant::now();
    let n = h.degree();
    if n % 2 != 0 {
        return OracleReport::error(claim, &Error::OutOfRange(format!("odd degree {n}")));
    }
    let domain = ActionDomain::KSubsets { n, k: n / 2 };
    let orbits = match h.orbits(&domain) {
        Ok(o) => o,
        Err(e) => return OracleReport::error(claim, &e),
    };
    let rs: BTreeSet<u128> = orbits.iter().map(|o| h.order() / o.len() as u128).collect();
    let sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    let ok = orbits.len() == 2 && rs.len() == 1 && rs.iter().all(|&r| r <= r_max);
    let r = if rs.len() == 1 { rs.first().map(|r| r.to_string()) } else { None };
    let evidence = json!({ "n": n, "structure": tag, "orbit_sizes": sizes, "r": r });
    OracleReport::new(claim, ok, evidence, start)
}

/// All subgroups of `S_4` by closure of pairs of elements, and those with
/// two regular orbits on 2-subsets. Every subgroup of `S_4` is generated by
/// two elements.
pub fn lemma_regorbits_exhaustive_n4() -> OracleReport {
    let claim = "only C_3 has two regular orbits on 2-subsets of 4 points";
    let start = Instant::now();
    let elements = PermutationGroup::symmetric(4).elements();
    let mut subgroups: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut groups = Vec::new();
    for a in &elements {
        for b in &elements {
            let sub = closure(&[a.clone(), b.clone()], 24).expect("subgroup of S_4");
            if subgroups.insert(element_key(&sub)) {
                groups.push(sub);
            }
        }
    }
    let domain = ActionDomain::KSubsets { n: 4, k: 2 };
    let qualifying: Vec<&Vec<Permutation>> = groups
        .iter()
        .filter(|sub| {
            let Ok(g) = PermutationGroup::new(4, (*sub).clone()) else { return false };
            g.orbits(&domain).map(|o| o.len() == 2 && o.iter().all(|x| x.len() == sub.len())).unwrap_or(false)
        })
        .collect();
    let cyclic_three = qualifying.iter().all(|s| s.len() == 3 && s.iter().all(|g| g.pow(3).is_identity()));
    let ok = groups.len() == 30 && qualifying.len() == 4 && cyclic_three;
    let evidence = json!({ "subgroups": groups.len(), "qualifying": qualifying.len(),
        "qualifying_orders": qualifying.iter().map(|s| s.len()).collect::<Vec<_>>() });
    OracleReport::new(claim, ok, evidence, start)
}

/// Orbit counts on m-subsets for `m <= n/2` must never decrease.
pub fn livingstone_wagner_check(claim: &str, g: &PermutationGroup) -> OracleReport {
    let start = Instant::now();
    let m_max = (g.degree() / 2).min(4);
    match g.orbit_counts_on_msubsets(m_max) {
        Ok(counts) => {
            let ok = counts.windows(2).all(|w| w[0] <= w[1]);
            OracleReport::new(claim, ok, json!({ "orbit_counts": counts }), start)
        }
        Err(e) => OracleReport::error(claim, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::johnson::MergeSet;
    use crate::nearfield::{affine_group, AffineKind, NearField};

    fn graph(n: usize, k: usize, i: &[usize]) -> MergedJohnsonGraph {
        MergedJohnsonGraph::build(n, k, &MergeSet::new(k, i).unwrap()).unwrap()
    }

    #[test]
    fn automorphism_examples() {
        let petersen = graph(5, 2, &[2]);
        assert!(is_automorphism(&Permutation::identity(10), &petersen).unwrap());
        let swap = Permutation::from_cycles(10, &[&[0, 1]]).unwrap();
        let bad = automorphism_counterexample(&swap, &petersen).unwrap().unwrap();
        assert!(petersen.adjacent_ranks(bad.0, bad.1));
        let j = graph(6, 3, &[1, 3]);
        let full = crate::johnson::full_mask(6);
        let flip: Vec<u32> = (0..20).map(|r| codec::rank_mask(full & !codec::unrank_mask(r, 3)) as u32).collect();
        assert!(is_automorphism(&Permutation::from_images(flip).unwrap(), &j).unwrap());
        assert!(is_automorphism(&Permutation::identity(9), &petersen).is_err());
    }

    #[test]
    fn swap_neighbours_match_materialized_lists() {
        let g = graph(9, 3, &[1, 3]);
        let mut scratch = Scratch::default();
        for v in 0..g.vertex_count() {
            let a: Vec<u64> = g.neighbours(v).into_iter().map(u64::from).collect();
            let mut b = Vec::new();
            for_each_swap_neighbour(&g, v, &mut scratch, |u| b.push(u));
            b.sort_unstable();
            assert_eq!(a, b);
        }
        let mut count = 0;
        for_each_combination(5, 2, |_| count += 1);
        assert_eq!(count, 10);
    }

    #[test]
    fn regular_actions() {
        let ahl7 = affine_group(&NearField::field_of_order(7).unwrap(), AffineKind::Ahl).unwrap();
        let r = regular_action_check("AHL_1(7)", &ahl7.induced_subset_action(2).unwrap(), &graph(7, 2, &[1]), 1);
        assert!(r.is_confirmed(), "{:?}", r);
        let agl5 = affine_group(&NearField::field_of_order(5).unwrap(), AffineKind::Agl).unwrap();
        let petersen = graph(5, 2, &[2]);
        let r = regular_action_check("AGL_1(5)", &agl5.induced_subset_action(2).unwrap(), &petersen, 1);
        assert!(!r.is_confirmed());
        assert_eq!(r.evidence["r"], "2");
    }

    #[test]
    fn bruteforce_orders() {
        assert_eq!(bruteforce_automorphism_group(&graph(4, 2, &[1])).unwrap(), 48);
        assert_eq!(bruteforce_automorphism_group(&graph(4, 2, &[2])).unwrap(), 48);
        assert_eq!(bruteforce_automorphism_group(&graph(5, 2, &[2])).unwrap(), 120);
        assert_eq!(bruteforce_automorphism_group(&graph(5, 2, &[1])).unwrap(), 120);
        assert_eq!(bruteforce_automorphism_group(&graph(4, 2, &[1, 2])).unwrap(), 720);
        assert!(bruteforce_automorphism_group(&graph(6, 2, &[1])).is_err());
        let c5 = (0..5).map(|a| (0..5).map(|b| (a + 5 - b) % 5 == 1 || (b + 5 - a) % 5 == 1).collect()).collect::<Vec<_>>();
        assert_eq!(count_automorphisms(&c5), 10);
    }

    #[test]
    fn regular_subgroup_searches() {
        let petersen = graph(5, 2, &[2]);
        let s5 = PermutationGroup::symmetric(5).induced_subset_action(2).unwrap();
        assert!(regular_subgroup_nonexistence("Petersen", &s5, &petersen).is_confirmed());
        let s4 = PermutationGroup::symmetric(4).induced_subset_action(2).unwrap();
        assert!(regular_subgroup_nonexistence("S_4", &s4, &graph(4, 2, &[1])).is_confirmed());
        let agl9 = affine_group(&NearField::field_of_order(9).unwrap(), AffineKind::Agl).unwrap();
        let r = regular_subgroup_nonexistence("AGL_1(9)", &agl9.induced_subset_action(2).unwrap(), &graph(9, 2, &[1]));
        assert!(r.is_confirmed(), "{:?}", r);
        // AGL_1(7) contains AHL_1(7), which is regular on 2-subsets.
        let agl7 = affine_group(&NearField::field_of_order(7).unwrap(), AffineKind::Agl).unwrap();
        let r = regular_subgroup_nonexistence("AGL_1(7)", &agl7.induced_subset_action(2).unwrap(), &graph(7, 2, &[1]));
        assert!(!r.is_confirmed());
        assert!(r.evidence["regular_subgroup_generators"].is_array());
    }

    #[test]
    fn lemma_checks() {
        assert!(lemma_regorbits_exhaustive_n4().is_confirmed());
        let c3 = PermutationGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap()]).unwrap();
        let r = lemma_two_orbit_check("C_3", &c3, "C3", 4);
        assert!(r.is_confirmed());
        assert_eq!(r.evidence["r"], "1");
        let s3 = PermutationGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap(), Permutation::from_cycles(4, &[&[0, 1]]).unwrap()],
        )
        .unwrap();
        assert_eq!(lemma_two_orbit_check("S_3", &s3, "S3", 4).evidence["r"], "2");
        let s4 = PermutationGroup::symmetric(4);
        assert!(!lemma_two_orbit_check("S_4", &s4, "S4", 4).is_confirmed());
        assert!(livingstone_wagner_check("S_6", &PermutationGroup::symmetric(6)).is_confirmed());
    }
}
