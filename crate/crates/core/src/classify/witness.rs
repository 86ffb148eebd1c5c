//! Concrete vertex-transitive groups behind the affirmative verdicts.

use serde::Serialize;

use super::{binomial_big, natural_str};
use crate::complement;
use crate::error::{Error, Result};
use crate::finitefield::prime_power;
use crate::johnson::{codec, MergeSet};
use crate::nearfield::{affine_group, exceptional_group, is_dickson_pair, AffineKind, ExceptionalSpec, NearField};
use crate::permgroup::{equipartition_mask, ActionDomain, Permutation, PermutationGroup};
use crate::Natural;

/// Witness groups are only built on at most this many vertices.
pub const MAX_WITNESS_VERTICES: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum NearFieldSpec {
    Field { q: u64 },
    Dickson { q: u64, d: u32 },
    Exceptional { p: u64, variant: u8 },
}

/// Every near-field of order `n`: the field, the Dickson near-fields and the
/// exceptional ones.
pub fn near_fields_of_order(n: u64) -> Result<Vec<NearFieldSpec>> {
    let (p, e) = prime_power(n).ok_or(Error::NotPrimePower(n))?;
    let mut out = vec![NearFieldSpec::Field { q: n }];
    for a in 1..e {
        if e % a == 0 && is_dickson_pair(p.pow(a), e / a)? {
            out.push(NearFieldSpec::Dickson { q: p.pow(a), d: e / a });
        }
    }
    for s in ExceptionalSpec::all() {
        if s.p * s.p == n {
            out.push(NearFieldSpec::Exceptional { p: s.p, variant: s.variant });
        }
    }
    Ok(out)
}

/// Recipe for a group acting regularly or 2-regularly on the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "recipe", rename_all = "snake_case")]
pub enum WitnessSpec {
    /// A one-dimensional affine group over `GF(q)`, induced on k-subsets.
    AffineLine { q: u64, kind: AffineKind },
    /// `AGL_1(F)` of a near-field, induced on 2-subsets.
    NearFieldAffine { near_field: NearFieldSpec },
    /// `AGL_1(5)` on the projective line fixing ∞, times complementation.
    AglFiveTimesS2,
    /// A nonstandard complement of `M` in `M ⋊ PSL_2(8)`, by its class label.
    Psl28Complement { delta: u8 },
    /// Cyclic group acting on itself; with `matching`, antipodes are complements.
    Cyclic {
        #[serde(serialize_with = "natural_str")]
        order: Natural,
        matching: bool,
    },
    /// Dihedral group on the cosets of a reflection; with `blocks`, the
    /// antipodal pairs are complementary subsets.
    Dihedral {
        #[serde(serialize_with = "natural_str")]
        order: Natural,
        blocks: bool,
    },
}

impl WitnessSpec {
    pub fn describe(&self) -> String {
        match self {
            WitnessSpec::AffineLine { q, kind } => {
                let name = match kind {
                    AffineKind::Agl => "AGL",
                    AffineKind::Ahl => "AHL",
                    AffineKind::AGammaL => "AΓL",
                };
                format!("{name}_1({q})")
            }
            WitnessSpec::NearFieldAffine { near_field } => match near_field {
                NearFieldSpec::Field { q } => format!("AGL_1(GF({q}))"),
                NearFieldSpec::Dickson { q, d } => format!("AGL_1(Dickson({q},{d}))"),
                NearFieldSpec::Exceptional { p, variant } => format!("AGL_1(exceptional({p},{variant}))"),
            },
            WitnessSpec::AglFiveTimesS2 => "AGL_1(5)×S_2".into(),
            WitnessSpec::Psl28Complement { delta } => format!("PSL_2(8) complement δ={delta}"),
            WitnessSpec::Cyclic { order, .. } => format!("C_{order}"),
            WitnessSpec::Dihedral { order, .. } => format!("D_{order}"),
        }
    }
}

/// Vertex (co-lex rank) placed at each position `0..C(n,k)` of the cyclic
/// and dihedral witnesses. When `n = 2k`, position `i + C(n,k)/2` holds the
/// complement of position `i`.
pub fn vertex_positions(n: usize, k: usize) -> Result<Vec<u64>> {
    let v = codec::binomial(n as u64, k as u64);
    if 2 * k != n {
        return Ok((0..v).collect());
    }
    if n > 64 {
        return Err(Error::SizeBound(format!("n = {n} exceeds 64")));
    }
    let e = v / 2;
    let full = crate::johnson::full_mask(n);
    let halves: Vec<u64> = (0..e).map(|i| equipartition_mask(n, i)).collect();
    Ok(halves
        .iter()
        .map(|&h| codec::rank_mask(h))
        .chain(halves.iter().map(|&h| codec::rank_mask(full & !h)))
        .collect())
}

fn position_map(positions: &[u64], step: impl Fn(u64) -> u64) -> Result<Permutation> {
    let mut images = vec![0u32; positions.len()];
    for (i, &rank) in positions.iter().enumerate() {
        images[rank as usize] = positions[step(i as u64) as usize] as u32;
    }
    Permutation::from_images(images)
}

/// Builds the witness as a permutation group on the `C(n,k)` vertices,
/// labelled by co-lex rank.
pub fn witness_group(spec: &WitnessSpec, n: usize, k: usize, merge: &MergeSet) -> Result<PermutationGroup> {
    super::check_params(n, k, merge)?;
    let vertices = binomial_big(n as u64, k as u64);
    if vertices > Natural::from(MAX_WITNESS_VERTICES) {
        return Err(Error::SizeBound(format!("{vertices} vertices")));
    }
    let v = codec::binomial(n as u64, k as u64);
    match spec {
        WitnessSpec::AffineLine { q, kind } => {
            check_degree(*q, n)?;
            affine_group(&NearField::field_of_order(*q)?, *kind)?.induced_subset_action(k)
        }
        WitnessSpec::NearFieldAffine { near_field } => {
            let points = match near_field {
                NearFieldSpec::Field { q } => affine_group(&NearField::field_of_order(*q)?, AffineKind::Agl)?,
                NearFieldSpec::Dickson { q, d } => affine_group(&NearField::dickson(*q, *d)?, AffineKind::Agl)?,
                NearFieldSpec::Exceptional { p, variant } => {
                    exceptional_group(&ExceptionalSpec::find(*p, *variant)?)?.group
                }
            };
            check_degree(points.degree() as u64, n)?;
            points.induced_subset_action(k)
        }
        WitnessSpec::AglFiveTimesS2 => {
            if (n, k) != (6, 3) {
                return Err(Error::NoWitness);
            }
            // Points 0..4 are GF(5), point 5 is ∞.
            let shift = Permutation::from_images(vec![1, 2, 3, 4, 0, 5])?;
            let scale = Permutation::from_images(vec![0, 2, 4, 1, 3, 5])?;
            let domain = ActionDomain::KSubsets { n: 6, k: 3 };
            let mut gens = PermutationGroup::new(6, vec![shift, scale])?.action_generators(&domain)?;
            let full = crate::johnson::full_mask(6);
            let flip = (0..v).map(|r| codec::rank_mask(full & !codec::unrank_mask(r, 3)) as u32).collect();
            gens.push(Permutation::from_images(flip)?);
            PermutationGroup::with_order_bound(v as usize, gens, 40)
        }
        WitnessSpec::Psl28Complement { delta } => {
            if (n, k) != (10, 5) {
                return Err(Error::NoWitness);
            }
            complement::witness(*delta)
        }
        WitnessSpec::Cyclic { matching, .. } => {
            let positions = vertex_positions(n, k)?;
            if *matching && 2 * k != n {
                return Err(Error::NoWitness);
            }
            let rotation = position_map(&positions, |i| (i + 1) % v)?;
            PermutationGroup::with_order_bound(v as usize, vec![rotation], v as u128)
        }
        WitnessSpec::Dihedral { blocks, .. } => {
            let positions = vertex_positions(n, k)?;
            if *blocks && 2 * k != n {
                return Err(Error::NoWitness);
            }
            let rotation = position_map(&positions, |i| (i + 1) % v)?;
            let reflection = position_map(&positions, |i| (v - i) % v)?;
            PermutationGroup::with_order_bound(v as usize, vec![rotation, reflection], 2 * v as u128)
        }
    }
}

fn check_degree(points: u64, n: usize) -> Result<()> {
    if points != n as u64 {
        return Err(Error::DegreeMismatch(points as usize, n));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_cayley, classify_two_regular};

    fn ms(k: usize, i: &[usize]) -> MergeSet {
        MergeSet::new(k, i).unwrap()
    }

    fn is_automorphism_group(g: &PermutationGroup, n: usize, k: usize, merge: &MergeSet) -> bool {
        let graph = crate::johnson::MergedJohnsonGraph::build(n, k, merge).unwrap();
        let v = graph.vertex_count();
        g.generators().iter().all(|p| {
            (0..v).all(|a| {
                graph
                    .neighbours(a)
                    .iter()
                    .all(|&b| graph.adjacent_ranks(p.apply(a as u32) as u64, p.apply(b) as u64))
            })
        })
    }

    #[test]
    fn near_fields_of_small_orders() {
        assert_eq!(near_fields_of_order(8).unwrap(), vec![NearFieldSpec::Field { q: 8 }]);
        assert_eq!(near_fields_of_order(9).unwrap().len(), 2);
        assert_eq!(near_fields_of_order(25).unwrap().len(), 3);
        assert_eq!(near_fields_of_order(121).unwrap().len(), 4);
    }

    #[test]
    fn agl_1_8_is_regular_on_56_vertices() {
        let merge = ms(3, &[1]);
        let verdict = classify_cayley(8, 3, &merge).unwrap();
        let g = witness_group(verdict.witness().unwrap(), 8, 3, &merge).unwrap();
        assert_eq!(g.regularity_degree(&ActionDomain::Points { n: 56 }).unwrap(), Some(1));
        assert!(is_automorphism_group(&g, 8, 3, &merge));
    }

    #[test]
    fn cyclic_witness_on_complete_graph() {
        let merge = MergeSet::full(2);
        let verdict = classify_cayley(5, 2, &merge).unwrap();
        let g = witness_group(verdict.witness().unwrap(), 5, 2, &merge).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.regularity_degree(&ActionDomain::Points { n: 10 }).unwrap(), Some(1));
    }

    #[test]
    fn cyclic_witness_preserves_the_matching() {
        for merge in [ms(3, &[3]), ms(3, &[1, 2])] {
            let verdict = classify_cayley(6, 3, &merge).unwrap();
            let g = witness_group(verdict.witness().unwrap(), 6, 3, &merge).unwrap();
            assert_eq!(g.regularity_degree(&ActionDomain::Points { n: 20 }).unwrap(), Some(1));
            assert!(is_automorphism_group(&g, 6, 3, &merge));
        }
    }

    #[test]
    fn dihedral_witness_at_6_3() {
        let merge = ms(3, &[3]);
        let verdict = classify_two_regular(6, 3, &merge).unwrap();
        let clause = verdict.clauses.iter().find(|c| c.clause == 4).unwrap();
        let g = witness_group(&clause.witnesses[0], 6, 3, &merge).unwrap();
        assert_eq!(g.order(), 40);
        assert_eq!(g.regularity_degree(&ActionDomain::Points { n: 20 }).unwrap(), Some(2));
        assert!(is_automorphism_group(&g, 6, 3, &merge));
    }

    #[test]
    fn agl_5_times_s2_is_two_regular_for_every_i() {
        for merge in [ms(3, &[1]), ms(3, &[2]), ms(3, &[3]), ms(3, &[1, 3]), ms(3, &[2, 3])] {
            let g = witness_group(&WitnessSpec::AglFiveTimesS2, 6, 3, &merge).unwrap();
            assert_eq!(g.order(), 40);
            assert_eq!(g.regularity_degree(&ActionDomain::Points { n: 20 }).unwrap(), Some(2));
            assert!(is_automorphism_group(&g, 6, 3, &merge));
        }
    }

    #[test]
    fn every_near_field_witness_of_order_9_is_two_regular() {
        let merge = ms(2, &[1]);
        let verdict = classify_two_regular(9, 2, &merge).unwrap();
        for w in &verdict.clauses[0].witnesses {
            let g = witness_group(w, 9, 2, &merge).unwrap();
            assert_eq!(g.regularity_degree(&ActionDomain::Points { n: 36 }).unwrap(), Some(2), "{}", w.describe());
            assert!(is_automorphism_group(&g, 9, 2, &merge));
        }
    }
}
