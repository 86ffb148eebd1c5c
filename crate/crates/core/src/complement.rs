//! The four complement classes of `M = F_2^Φ` in `M ⋊ PSL_2(8)`, where Φ is
//! the set of 126 equipartitions of ten points and `PSL_2(8)` acts on the
//! projective line over GF(8) plus one fixed point.
//!
//! Points `0..8` are the GF(8) elements by encoding, point 8 is ∞ and point 9
//! the fixed point. Conventions are right actions throughout:
//! `(m₁,s₁)(m₂,s₂) = (m₁^{s₂} + m₂, s₁s₂)` with `m^s(φ) = m(φ·s⁻¹)`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::finitefield::FiniteField;
use crate::johnson::{codec, full_mask};
use crate::permgroup::{equipartition_label, equipartition_mask, map_mask, ActionDomain, Permutation, PermutationGroup};

pub const POINTS: usize = 10;
pub const EQUIPARTITIONS: usize = 126;
pub const VERTICES: usize = 252;
pub const PSL28_ORDER: u128 = 504;
const INFINITY: u32 = 8;
const FIXED_POINT: u32 = 9;

/// A function `Φ → F_2`, bit `φ` for the equipartition with label `φ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MVector(pub u128);

impl MVector {
    pub fn get(self, phi: u64) -> bool {
        self.0 >> phi & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn all_ones() -> Self {
        MVector((1u128 << EQUIPARTITIONS) - 1)
    }

    fn add(self, other: MVector) -> MVector {
        MVector(self.0 ^ other.0)
    }

    /// `m^s`, given the action of `s` on labels.
    fn twist(self, action: &[u8]) -> MVector {
        let mut out = 0u128;
        let mut bits = self.0;
        while bits != 0 {
            let phi = bits.trailing_zeros() as usize;
            out |= 1u128 << action[phi];
            bits &= bits - 1;
        }
        MVector(out)
    }
}

/// `PSL_2(8)` on `P¹(F_8)` plus a fixed tenth point.
#[derive(Clone, Debug)]
pub struct PointedPsl28 {
    pub group: PermutationGroup,
    pub field: FiniteField,
    /// Name of each point, 0-based.
    pub labels: Vec<String>,
}

pub fn build_pointed_psl28() -> Result<PointedPsl28> {
    let field = FiniteField::of_order(8)?;
    let mobius = |f: &dyn Fn(u32) -> u32| -> Result<Permutation> {
        let images: Vec<u32> = (0..POINTS as u32).map(|x| if x == FIXED_POINT { x } else { f(x) }).collect();
        Permutation::from_images(images)
    };
    let el = |x: u32| field.element(x as u64).expect("GF(8) element");
    let one = field.one();
    let shift = mobius(&|x| if x == INFINITY { x } else { field.add(el(x), one).value() })?;
    let scale = mobius(&|x| if x == INFINITY { x } else { field.mul(el(x), field.omega()).value() })?;
    let invert = mobius(&|x| match x {
        0 => INFINITY,
        INFINITY => 0,
        _ => field.inv(el(x)).expect("nonzero").value(),
    })?;
    let group = PermutationGroup::with_order_bound(POINTS, vec![shift, scale, invert], PSL28_ORDER)?;
    if group.order() != PSL28_ORDER {
        return Err(Error::Internal(format!("PSL_2(8) built with order {}", group.order())));
    }
    let mut labels: Vec<String> = (0..8).map(|x| field.format(el(x))).collect();
    labels.push("∞".into());
    labels.push("p".into());
    Ok(PointedPsl28 { group, field, labels })
}

impl PointedPsl28 {
    /// The action on the nine points other than the fixed one.
    pub fn projective_line_action(&self) -> Result<PermutationGroup> {
        let gens = self
            .group
            .generators()
            .iter()
            .map(|g| Permutation::from_images(g.images()[..9].to_vec()))
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::with_order_bound(9, gens, PSL28_ORDER)
    }

    /// `a ↦ a²` on `P¹(F_8)`, fixing ∞ and the tenth point.
    pub fn frobenius(&self) -> Result<Permutation> {
        let images = (0..POINTS as u32)
            .map(|x| {
                if x >= INFINITY {
                    x
                } else {
                    let a = self.field.element(x as u64).expect("GF(8) element");
                    self.field.mul(a, a).value()
                }
            })
            .collect();
        Permutation::from_images(images)
    }
}

/// Base equipartition, its Klein stabilizer and a transversal, plus the
/// homomorphism `δ: V → F_2` selected by `delta`.
#[derive(Clone, Debug)]
pub struct CocycleData {
    pub psl: PointedPsl28,
    pub phi0: u64,
    /// Identity first, then the three involutions in lexicographic order of images.
    pub v: Vec<Permutation>,
    /// `φ₀·transversal[φ] = φ`.
    pub transversal: Vec<Permutation>,
    /// Bit 0 is `δ(v[1])`, bit 1 is `δ(v[2])`.
    pub delta: u8,
    elements: Vec<Permutation>,
    index: HashMap<Vec<u32>, usize>,
    /// `action[s][φ]`: label of `φ·s`.
    action: Vec<Vec<u8>>,
}

pub fn equipartition_setup(psl: &PointedPsl28) -> Result<CocycleData> {
    let domain = ActionDomain::Equipartitions { n: POINTS };
    let phi0 = 0u64;
    let orbit = psl.group.orbit(phi0, &domain)?;
    if orbit.points.len() != EQUIPARTITIONS {
        return Err(Error::Internal(format!("{} equipartitions in the orbit of φ₀", orbit.points.len())));
    }
    let transversal: Vec<Permutation> = (0..EQUIPARTITIONS as u64).map(|phi| orbit.transversal[&phi].clone()).collect();
    let elements = psl.group.elements();
    let index = elements.iter().enumerate().map(|(i, g)| (g.images().to_vec(), i)).collect();
    let action: Vec<Vec<u8>> = elements
        .iter()
        .map(|g| (0..EQUIPARTITIONS as u64).map(|phi| domain.act(g, phi) as u8).collect())
        .collect();
    let mut v: Vec<Permutation> = elements.iter().filter(|g| domain.act(g, phi0) == phi0).cloned().collect();
    v.sort_by(|a, b| (!a.is_identity(), a.images()).cmp(&(!b.is_identity(), b.images())));
    let klein = v.len() == 4
        && v[0].is_identity()
        && v[1..].iter().all(|x| x.order() == 2)
        && v.iter().all(|a| v.iter().all(|b| a.then(b) == b.then(a)));
    if !klein {
        return Err(Error::Internal("stabilizer of φ₀ is not a Klein four-group".into()));
    }
    Ok(CocycleData { psl: psl.clone(), phi0, v, transversal, delta: 0, elements, index, action })
}

impl CocycleData {
    pub fn with_delta(&self, delta: u8) -> Result<CocycleData> {
        if delta > 3 {
            return Err(Error::OutOfRange(format!("δ label {delta} outside 0..=3")));
        }
        Ok(CocycleData { delta, ..self.clone() })
    }

    /// `δ(v)` for `v ∈ V`.
    pub fn delta_of(&self, v: &Permutation) -> Result<bool> {
        let pos = self.v.iter().position(|x| x == v).ok_or_else(|| Error::Internal("element outside V".into()))?;
        let (a, b) = (self.delta & 1 == 1, self.delta & 2 == 2);
        Ok(match pos {
            0 => false,
            1 => a,
            2 => b,
            _ => a ^ b,
        })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    fn index_of(&self, s: &Permutation) -> Result<usize> {
        self.index
            .get(s.images())
            .copied()
            .ok_or_else(|| Error::Internal("element outside PSL_2(8)".into()))
    }
}

/// `γ(s)`, with `γ(s)(φ·s) = δ(t_φ s t_{φ·s}⁻¹)`.
pub fn induced_cocycle(data: &CocycleData, s: &Permutation) -> Result<MVector> {
    let si = data.index_of(s)?;
    let mut out = 0u128;
    for phi in 0..EQUIPARTITIONS {
        let image = data.action[si][phi] as usize;
        let v = data.transversal[phi].then(s).then(&data.transversal[image].inverse());
        if data.delta_of(&v)? {
            out |= 1u128 << image;
        }
    }
    Ok(MVector(out))
}

/// An element of `E = M ⋊ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    pub m: MVector,
    pub s: Permutation,
}

impl ExtElement {
    pub fn mul(&self, other: &ExtElement, data: &CocycleData) -> Result<ExtElement> {
        let action = &data.action[data.index_of(&other.s)?];
        Ok(ExtElement { m: self.m.twist(action).add(other.m), s: self.s.then(&other.s) })
    }

    /// Image of a 5-subset (co-lex rank): apply `s`, then complement iff `m` is
    /// set at the resulting equipartition.
    pub fn act_on_vertex(&self, rank: u64) -> u64 {
        let image = map_mask(&self.s, codec::unrank_mask(rank, 5));
        let flip = self.m.get(equipartition_label(POINTS, image));
        codec::rank_mask(if flip { full_mask(POINTS) & !image } else { image })
    }
}

/// The complement `{(γ(s), s)}` with its action on the 252 five-subsets.
#[derive(Clone, Debug)]
pub struct ComplementGroup {
    pub delta: u8,
    pub elements: Vec<ExtElement>,
    /// Vertex permutation of each element, in the same order.
    pub vertex_permutations: Vec<Permutation>,
    pub vertex_group: PermutationGroup,
}

pub fn complement_group(data: &CocycleData) -> Result<ComplementGroup> {
    let elements: Vec<ExtElement> = data
        .elements
        .iter()
        .map(|s| Ok(ExtElement { m: induced_cocycle(data, s)?, s: s.clone() }))
        .collect::<Result<_>>()?;
    // Closure: the product of any two elements is the element over s₁s₂.
    for a in &elements {
        for b in &elements {
            let c = a.mul(b, data)?;
            if elements[data.index_of(&c.s)?].m != c.m {
                return Err(Error::Internal("complement is not closed under multiplication".into()));
            }
        }
    }
    if elements.iter().any(|e| e.s.is_identity() && !e.m.is_zero()) {
        return Err(Error::Internal("complement meets M nontrivially".into()));
    }
    let vertex_permutations = elements
        .iter()
        .map(|e| Permutation::from_images((0..VERTICES as u64).map(|r| e.act_on_vertex(r) as u32).collect()))
        .collect::<Result<Vec<_>>>()?;
    let gens = data
        .psl
        .group
        .generators()
        .iter()
        .map(|g| Ok(vertex_permutations[data.index_of(g)?].clone()))
        .collect::<Result<Vec<_>>>()?;
    let vertex_group = PermutationGroup::with_order_bound(VERTICES, gens, PSL28_ORDER)?;
    if vertex_group.order() != PSL28_ORDER {
        return Err(Error::Internal(format!("vertex action has order {}", vertex_group.order())));
    }
    Ok(ComplementGroup { delta: data.delta, elements, vertex_permutations, vertex_group })
}

impl ComplementGroup {
    pub fn orbit_sizes(&self) -> Result<Vec<usize>> {
        let mut sizes: Vec<usize> =
            self.vertex_group.orbits(&ActionDomain::Points { n: VERTICES })?.iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        Ok(sizes)
    }

    pub fn to_json(&self) -> Result<Value> {
        let perms: Vec<Vec<u32>> = self.vertex_permutations.iter().map(|p| p.to_one_based()).collect();
        Ok(json!({
            "delta_label": self.delta,
            "orbit_sizes": self.orbit_sizes()?,
            "degree": VERTICES,
            "permutations": perms,
        }))
    }
}

/// The complement for class label `delta`, as a group on the 252 vertices.
pub fn witness(delta: u8) -> Result<PermutationGroup> {
    let data = equipartition_setup(&build_pointed_psl28()?)?.with_delta(delta)?;
    Ok(complement_group(&data)?.vertex_group)
}

/// Class label of the complement obtained by conjugating the `data.delta`
/// complement with the Frobenius map σ: `δ′(v) = γ(σvσ⁻¹)(φ₀·σ⁻¹)`.
pub fn frobenius_class_action(data: &CocycleData) -> Result<u8> {
    let sigma = data.psl.frobenius()?;
    let sigma_inv = sigma.inverse();
    for g in data.psl.group.generators() {
        if !data.psl.group.contains(&g.conjugate_by(&sigma)) {
            return Err(Error::Internal("Frobenius map does not normalize PSL_2(8)".into()));
        }
    }
    let domain = ActionDomain::Equipartitions { n: POINTS };
    let base = domain.act(&sigma_inv, data.phi0);
    let mut label = 0u8;
    for (bit, v) in data.v[1..3].iter().enumerate() {
        let conj = v.conjugate_by(&sigma_inv);
        if induced_cocycle(data, &conj)?.get(base) {
            label |= 1 << bit;
        }
    }
    Ok(label)
}

/// Checks associativity of `E` on `samples` random triples.
pub fn check_associativity(data: &CocycleData, samples: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng| ExtElement {
        m: MVector(rng.gen::<u128>() & MVector::all_ones().0),
        s: data.elements[rng.gen_range(0..data.elements.len())].clone(),
    };
    for _ in 0..samples {
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let left = a.mul(&b, data)?.mul(&c, data)?;
        let right = a.mul(&b.mul(&c, data)?, data)?;
        if left != right {
            return Err(Error::Internal("E multiplication is not associative".into()));
        }
    }
    Ok(())
}

/// The equipartition `{V ∪ {p}, rest}` for the translation subgroup
/// `V = {0, t, t², t⁴}` of GF(8); its stabilizer in `S` should have order 4.
pub fn translation_klein_check(psl: &PointedPsl28) -> Result<bool> {
    let f = &psl.field;
    let t = f.t();
    let quad = [f.zero(), t, f.pow(t, 2), f.pow(t, 4)];
    let half = quad.iter().fold(1u64 << FIXED_POINT, |acc, x| acc | 1u64 << x.value());
    let label = equipartition_label(POINTS, half);
    let domain = ActionDomain::Equipartitions { n: POINTS };
    let stab: Vec<Permutation> = psl.group.elements().into_iter().filter(|g| domain.act(g, label) == label).collect();
    Ok(stab.len() == 4 && stab.iter().all(|g| g.pow(2).is_identity()) && equipartition_mask(POINTS, label) & half != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::johnson::{MergeSet, MergedJohnsonGraph};

    fn setup() -> CocycleData {
        equipartition_setup(&build_pointed_psl28().unwrap()).unwrap()
    }

    #[test]
    fn pointed_psl28_properties() {
        let s = build_pointed_psl28().unwrap();
        assert_eq!(s.group.order(), 504);
        assert!(s.group.generators().iter().all(|g| g.apply(9) == 9));
        let line = s.projective_line_action().unwrap();
        assert!(line.is_k_homogeneous(4).unwrap());
        let mut sizes: Vec<usize> =
            s.group.orbits(&ActionDomain::KSubsets { n: 10, k: 5 }).unwrap().iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![126, 126]);
        assert_eq!(s.group.stabilizer_order(0, &ActionDomain::KSubsets { n: 10, k: 5 }).unwrap(), 4);
        assert_eq!(s.labels[2], "t");
        assert!(translation_klein_check(&s).unwrap());
    }

    #[test]
    fn setup_invariants() {
        let d = setup();
        assert_eq!(d.transversal.len(), 126);
        assert!(d.transversal[0].is_identity());
        let domain = ActionDomain::Equipartitions { n: 10 };
        for (phi, t) in d.transversal.iter().enumerate() {
            assert_eq!(domain.act(t, d.phi0), phi as u64);
        }
        assert_eq!(d.v.len(), 4);
    }

    #[test]
    fn cocycle_values() {
        let d = setup();
        for s in d.elements() {
            assert!(induced_cocycle(&d, s).unwrap().is_zero());
        }
        for delta in 1..4 {
            let dd = d.with_delta(delta).unwrap();
            let id = Permutation::identity(10);
            assert!(induced_cocycle(&dd, &id).unwrap().is_zero());
            for v in &dd.v[1..] {
                assert_eq!(induced_cocycle(&dd, v).unwrap().get(dd.phi0), dd.delta_of(v).unwrap());
            }
        }
    }

    #[test]
    fn cocycle_identity_on_random_pairs() {
        let d = setup().with_delta(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let a = &d.elements()[rng.gen_range(0..504)];
            let b = &d.elements()[rng.gen_range(0..504)];
            let lhs = induced_cocycle(&d, &a.then(b)).unwrap();
            let action = &d.action[d.index_of(b).unwrap()];
            let rhs = induced_cocycle(&d, a).unwrap().twist(action).add(induced_cocycle(&d, b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn four_classes_and_their_orbits() {
        let d = setup();
        check_associativity(&d.with_delta(1).unwrap(), 10_000, 0x5eed).unwrap();
        let mut total_orbits = 0;
        for delta in 0..4 {
            let g = complement_group(&d.with_delta(delta).unwrap()).unwrap();
            assert_eq!(g.elements.len(), 504);
            let sizes = g.orbit_sizes().unwrap();
            total_orbits += sizes.len();
            if delta == 0 {
                assert_eq!(sizes, vec![126, 126]);
            } else {
                assert_eq!(sizes, vec![252]);
                assert_eq!(g.vertex_group.regularity_degree(&ActionDomain::Points { n: 252 }).unwrap(), Some(2));
            }
            let ones = ExtElement { m: MVector::all_ones(), s: Permutation::identity(10) };
            let flip = Permutation::from_images((0..252).map(|r| ones.act_on_vertex(r) as u32).collect()).unwrap();
            for p in &g.vertex_permutations {
                assert_eq!(flip.then(p), p.then(&flip));
            }
        }
        assert_eq!(total_orbits, 5);
    }

    #[test]
    fn nonstandard_complements_are_automorphisms() {
        let d = setup();
        let g = complement_group(&d.with_delta(2).unwrap()).unwrap();
        for idx in [&[1, 4][..], &[2, 3], &[1, 4, 5], &[2, 3, 5]] {
            let graph = MergedJohnsonGraph::build(10, 5, &MergeSet::new(5, idx).unwrap()).unwrap();
            for p in &g.vertex_permutations {
                for a in 0..252u64 {
                    for &b in graph.neighbours(a).iter() {
                        assert!(graph.adjacent_ranks(p.apply(a as u32) as u64, p.apply(b) as u64));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_permutes_nonzero_labels_in_a_three_cycle() {
        let d = setup();
        let image: Vec<u8> = (0..4).map(|x| frobenius_class_action(&d.with_delta(x).unwrap()).unwrap()).collect();
        assert_eq!(image[0], 0);
        let mut nonzero = image[1..].to_vec();
        nonzero.sort_unstable();
        assert_eq!(nonzero, vec![1, 2, 3]);
        for x in 1..4u8 {
            assert_ne!(image[x as usize], x);
            let mut y = x;
            for _ in 0..3 {
                y = image[y as usize];
            }
            assert_eq!(y, x);
        }
    }
}
