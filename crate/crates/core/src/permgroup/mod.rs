//! Permutation groups: stabilizer chains, orbits on derived domains, induced
//! actions on k-subsets, and regularity and homogeneity measurements.

mod action;
mod chain;
mod perm;

use std::collections::{BTreeMap, HashSet};

pub use action::{equipartition_label, equipartition_mask, map_mask, ActionDomain};
pub use chain::StabChain;
pub use perm::Permutation;

use crate::error::{Error, Result};
use crate::johnson::{codec, KSubset};

/// Above this many (element, label) pairs, regularity is confirmed through
/// orbit–stabilizer instead of by counting fixers at every label.
const FIXER_SWEEP_LIMIT: u128 = 50_000_000;

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

/// An orbit together with transversal elements: `x·transversal[y] = y`.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<u64>,
    pub transversal: BTreeMap<u64, Permutation>,
}

impl PermutationGroup {
    /// Builds the stabilizer chain for `⟨gens⟩`.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::build(degree, gens, None)
    }

    /// Like [`PermutationGroup::new`], but `bound` must be an upper bound on
    /// the group order; the chain is complete as soon as it reaches it.
    pub fn with_order_bound(degree: usize, gens: Vec<Permutation>, bound: u128) -> Result<Self> {
        Self::build(degree, gens, Some(bound))
    }

    fn build(degree: usize, gens: Vec<Permutation>, bound: Option<u128>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
        let chain = StabChain::build(degree, &gens, bound);
        if let Some(b) = bound {
            if chain.order() > b {
                return Err(Error::Internal(format!("order {} exceeds stated bound {b}", chain.order())));
            }
        }
        Ok(PermutationGroup { degree, generators: gens, chain })
    }

    /// Group generated by a nonempty list of equal-degree permutations.
    pub fn generated_by(gens: Vec<Permutation>) -> Result<Self> {
        let degree = gens
            .first()
            .ok_or_else(|| Error::OutOfRange("empty generator list".into()))?
            .degree();
        Self::new(degree, gens)
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
            let cycle: Vec<u32> = (0..n as u32).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
        }
        Self::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n as u32)
            .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]).unwrap())
            .collect();
        Self::new(n, gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    /// Every element, listed from the stabilizer chain.
    pub fn elements(&self) -> Vec<Permutation> {
        self.chain.elements()
    }

    /// Elements by breadth-first closure under right multiplication by the
    /// generators; `None` once more than `limit` elements appear. Independent
    /// of the stabilizer chain.
    pub fn closure_elements(&self, limit: usize) -> Option<Vec<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for g in &self.generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    queue.push(y);
                }
            }
        }
        Some(queue)
    }

    fn check_domain(&self, domain: &ActionDomain) -> Result<()> {
        domain.check(&Permutation::identity(self.degree))
    }

    /// Orbit of `x` on `domain` with a transversal.
    pub fn orbit(&self, x: u64, domain: &ActionDomain) -> Result<Orbit> {
        self.check_domain(domain)?;
        if x >= domain.size() {
            return Err(Error::OutsideDomain(x));
        }
        let mut transversal = BTreeMap::new();
        transversal.insert(x, Permutation::identity(self.degree));
        let mut points = vec![x];
        let mut head = 0;
        while head < points.len() {
            let y = points[head];
            head += 1;
            for g in &self.generators {
                let z = domain.act(g, y);
                if !transversal.contains_key(&z) {
                    let t = transversal[&y].then(g);
                    transversal.insert(z, t);
                    points.push(z);
                }
            }
        }
        Ok(Orbit { points, transversal })
    }

    /// Orbit of `x` without transversal elements.
    pub fn orbit_labels(&self, x: u64, domain: &ActionDomain) -> Result<Vec<u64>> {
        self.check_domain(domain)?;
        let size = domain.size();
        if x >= size {
            return Err(Error::OutsideDomain(x));
        }
        let mut seen = vec![false; size as usize];
        seen[x as usize] = true;
        let mut points = vec![x];
        let mut head = 0;
        while head < points.len() {
            let y = points[head];
            head += 1;
            for g in &self.generators {
                let z = domain.act(g, y);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    points.push(z);
                }
            }
        }
        Ok(points)
    }

    /// All orbits on `domain`, each sorted, listed by smallest label.
    pub fn orbits(&self, domain: &ActionDomain) -> Result<Vec<Vec<u64>>> {
        self.check_domain(domain)?;
        let size = domain.size() as usize;
        let mut owner = vec![usize::MAX; size];
        let mut out: Vec<Vec<u64>> = Vec::new();
        for start in 0..size {
            if owner[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            owner[start] = id;
            let mut orbit = vec![start as u64];
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                head += 1;
                for g in &self.generators {
                    let z = domain.act(g, y) as usize;
                    if owner[z] == usize::MAX {
                        owner[z] = id;
                        orbit.push(z as u64);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        Ok(out)
    }

    /// The generators acting on `domain`, as permutations of its labels.
    pub fn action_generators(&self, domain: &ActionDomain) -> Result<Vec<Permutation>> {
        self.check_domain(domain)?;
        let size = domain.size();
        if size > u32::MAX as u64 {
            return Err(Error::SizeBound(format!("domain of size {size}")));
        }
        Ok(self
            .generators
            .iter()
            .map(|g| {
                let images = (0..size).map(|x| domain.act(g, x) as u32).collect();
                Permutation::from_images_unchecked(images)
            })
            .collect())
    }

    /// The group induced on the `C(n,k)` k-subsets, vertices in co-lex order.
    /// Its order is `|G| / |kernel|`; the chain is built against the bound `|G|`.
    pub fn induced_subset_action(&self, k: usize) -> Result<PermutationGroup> {
        if k == 0 || k > self.degree {
            return Err(Error::OutOfRange(format!("k = {k} must lie in 1..={}", self.degree)));
        }
        let domain = ActionDomain::KSubsets { n: self.degree, k };
        let gens = self.action_generators(&domain)?;
        PermutationGroup::with_order_bound(domain.size() as usize, gens, self.order())
    }

    /// `r` such that the group is transitive on `domain` with every label
    /// stabilizer of order `r`; `None` when intransitive.
    ///
    /// Stabilizer orders are counted label by label when the sweep is small
    /// enough; otherwise they follow from transitivity by orbit–stabilizer.
    pub fn regularity_degree(&self, domain: &ActionDomain) -> Result<Option<u128>> {
        let size = domain.size();
        if size == 0 {
            return Err(Error::OutOfRange("empty domain".into()));
        }
        if (self.orbit_labels(0, domain)?.len() as u64) < size {
            return Ok(None);
        }
        let order = self.order();
        if order % size as u128 != 0 {
            return Err(Error::Internal(format!("transitive group of order {order} on {size} labels")));
        }
        let r = order / size as u128;
        if order * size as u128 <= FIXER_SWEEP_LIMIT {
            let mut fixers = vec![0u128; size as usize];
            for g in self.elements() {
                for x in 0..size {
                    if domain.act(&g, x) == x {
                        fixers[x as usize] += 1;
                    }
                }
            }
            if let Some(x) = fixers.iter().position(|&f| f != r) {
                return Err(Error::Internal(format!(
                    "label {x} has stabilizer of order {} but |G|/|domain| = {r}",
                    fixers[x]
                )));
            }
        }
        Ok(Some(r))
    }

    /// Stabilizer order of a single label, by orbit–stabilizer.
    pub fn stabilizer_order(&self, x: u64, domain: &ActionDomain) -> Result<u128> {
        let orbit = self.orbit_labels(x, domain)?.len() as u128;
        Ok(self.order() / orbit)
    }

    /// Number of orbits on m-subsets for `m = 1..=m_max`.
    ///
    /// The counts are non-decreasing for `m <= n/2`; a decrease is reported as
    /// an internal error because it can only come from a bug.
    pub fn orbit_counts_on_msubsets(&self, m_max: usize) -> Result<Vec<usize>> {
        if 2 * m_max > self.degree {
            return Err(Error::OutOfRange(format!("m_max = {m_max} exceeds n/2 for n = {}", self.degree)));
        }
        let mut counts = Vec::with_capacity(m_max);
        for m in 1..=m_max {
            let domain = ActionDomain::KSubsets { n: self.degree, k: m };
            counts.push(self.count_orbits(&domain)?);
        }
        if let Some(w) = counts.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::Internal(format!(
                "orbit counts {counts:?} decrease at m = {}",
                w + 2
            )));
        }
        Ok(counts)
    }

    /// Orbit count on `domain` via union–find over generator images.
    pub fn count_orbits(&self, domain: &ActionDomain) -> Result<usize> {
        self.check_domain(domain)?;
        let size = domain.size() as usize;
        let mut parent: Vec<u32> = (0..size as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut roots = size;
        for x in 0..size as u64 {
            for g in &self.generators {
                let y = domain.act(g, x);
                let (a, b) = (find(&mut parent, x as u32), find(&mut parent, y as u32));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                    roots -= 1;
                }
            }
        }
        Ok(roots)
    }

    /// Whether the group is transitive on the k-subsets.
    pub fn is_k_homogeneous(&self, k: usize) -> Result<bool> {
        Ok(self.count_orbits(&ActionDomain::KSubsets { n: self.degree, k })? == 1)
    }
}

/// Image of a k-subset under a point permutation.
pub fn act_on_subset(p: &Permutation, subset: &KSubset) -> Result<KSubset> {
    if p.degree() != subset.n() {
        return Err(Error::DegreeMismatch(p.degree(), subset.n()));
    }
    Ok(KSubset::from_mask_unchecked(subset.n(), map_mask(p, subset.bits())))
}

/// Sharply 2-transitive check by sweeping every element: the map
/// `g ↦ (0·g, 1·g)` must be a bijection onto ordered pairs of distinct points.
pub fn is_sharply_two_transitive_exhaustive(g: &PermutationGroup) -> bool {
    let n = g.degree() as u128;
    if n < 2 || g.order() != n * (n - 1) {
        return false;
    }
    let mut seen = HashSet::new();
    for e in g.elements() {
        if !seen.insert((e.apply(0), e.apply(1))) {
            return false;
        }
    }
    seen.len() as u128 == n * (n - 1)
}

/// Number of k-subsets of an n-set.
pub fn subset_count(n: usize, k: usize) -> u64 {
    codec::binomial(n as u64, k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn symmetric_four_from_transposition_and_cycle() {
        let g = PermutationGroup::new(4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.closure_elements(100).unwrap().len(), 24);
        assert_eq!(g.elements().into_iter().collect::<HashSet<_>>().len(), 24);
    }

    #[test]
    fn affine_five_order_twenty() {
        let t = Permutation::from_images((0..5).map(|x| (x + 1) % 5).collect()).unwrap();
        let m = Permutation::from_images((0..5).map(|x| (2 * x) % 5).collect()).unwrap();
        let g = PermutationGroup::new(5, vec![t, m]).unwrap();
        assert_eq!(g.order(), 20);
    }

    #[test]
    fn membership() {
        let a4 = PermutationGroup::alternating(4);
        assert_eq!(a4.order(), 12);
        assert!(a4.contains(&cyc(4, &[&[0, 1], &[2, 3]])));
        assert!(!a4.contains(&cyc(4, &[&[0, 1]])));
        assert!(!a4.contains(&Permutation::identity(5)));
    }

    #[test]
    fn orbit_of_three_cycle() {
        let g = PermutationGroup::new(4, vec![cyc(4, &[&[0, 1, 2]])]).unwrap();
        let o = g.orbit(0, &ActionDomain::Points { n: 4 }).unwrap();
        let mut pts = o.points.clone();
        pts.sort();
        assert_eq!(pts, vec![0, 1, 2]);
        assert!(o.transversal[&0].is_identity());
        for (&y, t) in &o.transversal {
            assert_eq!(t.apply(0) as u64, y);
        }
        assert_eq!(g.orbit(4, &ActionDomain::Points { n: 4 }).unwrap_err(), Error::OutsideDomain(4));
        assert_eq!(g.regularity_degree(&ActionDomain::Points { n: 4 }).unwrap(), None);
    }

    #[test]
    fn a4_on_pairs_single_orbit() {
        let a4 = PermutationGroup::alternating(4);
        let o = a4.orbit(0, &ActionDomain::KSubsets { n: 4, k: 2 }).unwrap();
        assert_eq!(o.points.len(), 6);
    }

    #[test]
    fn s4_induced_on_pairs() {
        let s4 = PermutationGroup::symmetric(4);
        let ind = s4.induced_subset_action(2).unwrap();
        assert_eq!(ind.degree(), 6);
        assert_eq!(ind.order(), 24);
        assert_eq!(ind.count_orbits(&ActionDomain::Points { n: 6 }).unwrap(), 1);
    }

    #[test]
    fn degenerate_subset_action_has_full_kernel() {
        let s2 = PermutationGroup::new(2, vec![cyc(2, &[&[0, 1]])]).unwrap();
        let ind = s2.induced_subset_action(2).unwrap();
        assert_eq!(ind.degree(), 1);
        assert_eq!(ind.order(), 1);
        assert!(s2.induced_subset_action(3).is_err());
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(PermutationGroup::symmetric(5).orbit_counts_on_msubsets(2).unwrap(), vec![1, 1]);
        let c5 = PermutationGroup::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(c5.orbit_counts_on_msubsets(2).unwrap(), vec![1, 2]);
        assert!(c5.orbit_counts_on_msubsets(3).is_err());
    }

    #[test]
    fn act_on_subset_examples() {
        let c = cyc(3, &[&[0, 1, 2]]);
        let k = KSubset::from_points(3, &[0, 1]).unwrap();
        assert_eq!(act_on_subset(&c, &k).unwrap().points(), vec![1, 2]);
        assert_eq!(act_on_subset(&Permutation::identity(3), &k).unwrap(), k);
    }

    #[test]
    fn intersections_preserved_by_s4() {
        let elems = PermutationGroup::symmetric(4).elements();
        let subs: Vec<KSubset> = KSubset::all(4, 2).collect();
        for p in &elems {
            for a in &subs {
                for b in &subs {
                    let (ia, ib) = (act_on_subset(p, a).unwrap(), act_on_subset(p, b).unwrap());
                    assert_eq!(ia.intersection_size(&ib), a.intersection_size(b));
                }
            }
        }
    }

    #[test]
    fn composition_reproduces_s3_table() {
        // brute force: evaluate products pointwise and compare with compose
        let elems = PermutationGroup::symmetric(3).elements();
        assert_eq!(elems.len(), 6);
        for p in &elems {
            for q in &elems {
                let pq = p.compose(q).unwrap();
                for x in 0..3 {
                    assert_eq!(pq.apply(x), q.apply(p.apply(x)));
                }
                assert!(elems.contains(&pq));
            }
        }
    }

    #[test]
    fn equipartition_domain_size() {
        assert_eq!(ActionDomain::Equipartitions { n: 10 }.size(), 126);
        assert_eq!(ActionDomain::Equipartitions { n: 6 }.size(), 10);
        let s6 = PermutationGroup::symmetric(6);
        assert_eq!(s6.count_orbits(&ActionDomain::Equipartitions { n: 6 }).unwrap(), 1);
    }
}
