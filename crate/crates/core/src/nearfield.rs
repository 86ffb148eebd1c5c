//! Dickson near-fields, the affine groups `AGL₁`, `AHL₁`, `AΓL₁` on them,
//! and the seven exceptional sharply 2-transitive groups of degree `p²`.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::finitefield::{is_prime, prime_power, FieldElement, FiniteField};
use crate::permgroup::{Permutation, PermutationGroup};

/// Largest order accepted by [`NearField::dickson`].
pub const MAX_NEARFIELD_ORDER: u64 = 1 << 16;
/// Orders up to this are checked against every triple at build time.
pub const EXHAUSTIVE_AXIOM_ORDER: u64 = 729;
const SAMPLED_TRIPLES: usize = 100_000;
const AXIOM_SEED: u64 = 0x6e66;

/// Condition (c): every `r | d` that is prime or equal to 4 divides `q − 1`.
pub fn is_dickson_pair(q: u64, d: u32) -> Result<bool> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if d == 0 {
        return Err(Error::OutOfRange("d must be positive".into()));
    }
    let d = d as u64;
    Ok((2..=d)
        .filter(|&r| d % r == 0 && (r == 4 || is_prime(r)))
        .all(|r| (q - 1) % r == 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DicksonPair {
    pub q: u64,
    pub d: u32,
    pub n: u64,
}

/// A Dickson near-field: the additive group of `GF(q^d)` with
/// `g∘h = g^(q^j)·h` where `h ∈ Aω^m(j)` and `A` is the group of d-th powers.
#[derive(Clone, Debug)]
pub struct NearField {
    field: FiniteField,
    pair: DicksonPair,
    m: Vec<u64>,
    /// `residue_to_coset[r] = i` with `m(i) ≡ r (mod d)`.
    residue_to_coset: Vec<u32>,
    /// `q^j mod (n − 1)` for `j < d`.
    q_powers: Vec<u64>,
}

impl NearField {
    /// Builds the near-field for a Dickson pair and checks its axioms:
    /// exhaustively up to order 729, on 10⁵ seeded random triples above.
    pub fn dickson(q: u64, d: u32) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if !is_dickson_pair(q, d)? {
            return Err(Error::NotDickson { q, d });
        }
        let n = (q as u128).checked_pow(d).filter(|&n| n <= MAX_NEARFIELD_ORDER as u128).ok_or_else(|| {
            Error::SizeBound(format!("{q}^{d} exceeds {MAX_NEARFIELD_ORDER}"))
        })? as u64;
        let field = FiniteField::new(p, f * d)?;
        let dd = d as u64;
        if (n - 1) % dd != 0 {
            return Err(Error::Internal(format!("d = {d} does not divide n − 1 = {}", n - 1)));
        }
        let mut m = Vec::with_capacity(d as usize);
        let mut acc = 0u64;
        let mut qi = 1u64;
        for _ in 0..d {
            m.push(acc);
            acc = (acc + qi) % dd;
            qi = qi * (q % dd) % dd;
        }
        let mut residue_to_coset = vec![u32::MAX; d as usize];
        for (i, &r) in m.iter().enumerate() {
            if residue_to_coset[r as usize] != u32::MAX {
                return Err(Error::Internal(format!("m(i) repeats residue {r} mod {d}")));
            }
            residue_to_coset[r as usize] = i as u32;
        }
        // m(i+j) = q^j m(i) + m(j) mod d, indices mod d
        for i in 0..dd {
            for j in 0..dd {
                let qj = pow_mod_small(q, j, dd);
                let lhs = m[((i + j) % dd) as usize];
                let rhs = (qj * m[i as usize] + m[j as usize]) % dd;
                if lhs != rhs {
                    return Err(Error::Internal(format!("closure identity fails at i={i}, j={j}")));
                }
            }
        }
        let q_powers = (0..dd).map(|j| pow_mod_small(q, j, n - 1)).collect();
        let nf = NearField { field, pair: DicksonPair { q, d, n }, m, residue_to_coset, q_powers };
        nf.check_axioms()?;
        Ok(nf)
    }

    /// `GF(n)` viewed as a near-field (`d = 1`).
    pub fn field_of_order(n: u64) -> Result<Self> {
        Self::dickson(n, 1)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn pair(&self) -> DicksonPair {
        self.pair
    }

    pub fn order(&self) -> u64 {
        self.pair.n
    }

    pub fn is_field(&self) -> bool {
        self.pair.d == 1
    }

    /// `m(i) mod d` for `i = 0..d`.
    pub fn m(&self) -> &[u64] {
        &self.m
    }

    pub fn zero(&self) -> FieldElement {
        self.field.zero()
    }

    pub fn one(&self) -> FieldElement {
        self.field.one()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        self.field.elements()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.field.add(a, b)
    }

    /// The `i` with `h ∈ Aω^m(i)`.
    pub fn coset_of(&self, h: FieldElement) -> Result<u32> {
        let l = self.field.discrete_log(h)?;
        Ok(self.residue_to_coset[(l % self.pair.d as u64) as usize])
    }

    /// `g∘h = g^(q^j)·h` with `j` = coset of `h`; zero absorbs.
    pub fn mul(&self, g: FieldElement, h: FieldElement) -> FieldElement {
        if g.is_zero() || h.is_zero() {
            return self.zero();
        }
        let j = self.coset_of(h).expect("nonzero") as usize;
        let lg = self.field.discrete_log(g).expect("nonzero");
        let twisted = self.field.exp(lg * self.q_powers[j] % (self.order() - 1));
        self.field.mul(twisted, h)
    }

    /// Multiplicative inverse under `∘`.
    pub fn inv(&self, g: FieldElement) -> Result<FieldElement> {
        if g.is_zero() {
            return Err(Error::ZeroLog);
        }
        // g∘h = 1 means h = (g^(q^j))⁻¹ with j the coset of h; try each j
        for &qj in &self.q_powers {
            let lg = self.field.discrete_log(g)?;
            let h = self.field.inv(self.field.exp(lg * qj % (self.order() - 1)))?;
            if self.mul(g, h) == self.one() {
                return Ok(h);
            }
        }
        Err(Error::Internal("element without inverse".into()))
    }

    /// Elements commuting with everything under `∘`.
    pub fn center(&self) -> Vec<FieldElement> {
        let all: Vec<FieldElement> = self.elements().collect();
        all.iter()
            .copied()
            .filter(|&a| all.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    fn check_triple(&self, a: FieldElement, b: FieldElement, c: FieldElement) -> Result<()> {
        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            return Err(Error::Internal(format!("∘ not associative at {a:?}, {b:?}, {c:?}")));
        }
        if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
            return Err(Error::Internal(format!("right distributivity fails at {a:?}, {b:?}, {c:?}")));
        }
        Ok(())
    }

    /// Identity, inverses, associativity and right distributivity.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        let one = self.one();
        for g in self.field.nonzero() {
            if self.mul(g, one) != g || self.mul(one, g) != g {
                return Err(Error::Internal(format!("1 is not neutral for {g:?}")));
            }
        }
        if n <= EXHAUSTIVE_AXIOM_ORDER {
            let table = self.table();
            let idx = |a: u32, b: u32| table[a as usize * n as usize + b as usize];
            for a in 1..n as u32 {
                let mut seen = vec![false; n as usize];
                for b in 0..n as u32 {
                    seen[idx(a, b) as usize] = true;
                }
                if seen.iter().any(|s| !s) {
                    return Err(Error::Internal(format!("row {a} of ∘ is not a bijection")));
                }
            }
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    let ab = idx(a, b);
                    let a_plus_b = self.add(FieldElement::from_raw(a), FieldElement::from_raw(b)).value();
                    for c in 0..n as u32 {
                        if idx(ab, c) != idx(a, idx(b, c)) {
                            return Err(Error::Internal(format!("∘ not associative at {a}, {b}, {c}")));
                        }
                        let lhs = idx(a_plus_b, c);
                        let rhs = self.add(FieldElement::from_raw(idx(a, c)), FieldElement::from_raw(idx(b, c)));
                        if lhs != rhs.value() {
                            return Err(Error::Internal(format!("right distributivity fails at {a}, {b}, {c}")));
                        }
                    }
                }
            }
        } else {
            for g in self.field.nonzero() {
                let h = self.inv(g)?;
                if self.mul(h, g) != one {
                    return Err(Error::Internal(format!("left and right inverses of {g:?} differ")));
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(AXIOM_SEED);
            for _ in 0..SAMPLED_TRIPLES {
                let mut pick = || FieldElement::from_raw(rng.gen_range(0..n) as u32);
                let (a, b, c) = (pick(), pick(), pick());
                self.check_triple(a, b, c)?;
            }
        }
        Ok(())
    }

    /// Every triple checked, regardless of size.
    pub fn check_axioms_exhaustive(&self) -> Result<()> {
        let all: Vec<FieldElement> = self.elements().collect();
        for &a in &all {
            for &b in &all {
                for &c in &all {
                    self.check_triple(a, b, c)?;
                }
            }
        }
        Ok(())
    }

    /// Row-major `n × n` table of `a∘b` by encoding.
    pub fn table(&self) -> Vec<u32> {
        let n = self.order() as u32;
        let mut out = Vec::with_capacity((n * n) as usize);
        for a in 0..n {
            for b in 0..n {
                out.push(self.mul(FieldElement::from_raw(a), FieldElement::from_raw(b)).value());
            }
        }
        out
    }

    /// `{q, d, modulus}`, plus the multiplication table when `n <= 81`.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.order() as usize;
        let mut v = json!({
            "q": self.pair.q,
            "d": self.pair.d,
            "n": self.pair.n,
            "modulus": self.field.modulus(),
        });
        if n <= 81 {
            let t = self.table();
            let rows: Vec<&[u32]> = t.chunks(n).collect();
            v["multiplication"] = json!(rows);
        }
        v
    }

    /// Smallest-first greedy generators of the subgroup of `(F*, ∘)` formed by
    /// the elements accepted by `keep`.
    fn multiplicative_generators(&self, keep: impl Fn(FieldElement) -> bool) -> Vec<FieldElement> {
        let target = self.field.nonzero().filter(|&g| keep(g)).count();
        let mut gens: Vec<FieldElement> = Vec::new();
        let mut closure: HashSet<FieldElement> = HashSet::from([self.one()]);
        for g in self.field.nonzero() {
            if closure.len() == target {
                break;
            }
            if !keep(g) || closure.contains(&g) {
                continue;
            }
            gens.push(g);
            let mut queue: Vec<FieldElement> = closure.iter().copied().collect();
            while let Some(x) = queue.pop() {
                for &s in &gens {
                    let y = self.mul(x, s);
                    if closure.insert(y) {
                        queue.push(y);
                    }
                }
            }
        }
        gens
    }
}

fn pow_mod_small(b: u64, e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    for _ in 0..e {
        acc = (acc as u128 * b as u128 % m as u128) as u64;
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AffineKind {
    Agl,
    Ahl,
    AGammaL,
}

/// `AGL₁(F)`, `AHL₁(F)` or `AΓL₁(F)` on the `n` elements of `F`, points
/// labelled by element encoding. Maps are `t ↦ t^γ∘a + b`.
pub fn affine_group(f: &NearField, kind: AffineKind) -> Result<PermutationGroup> {
    let n = f.order();
    if kind == AffineKind::Ahl && n % 4 != 3 {
        return Err(Error::OutOfRange(format!("AHL₁ needs n ≡ 3 mod 4, got n = {n}")));
    }
    if kind == AffineKind::AGammaL && !f.is_field() {
        return Err(Error::Unsupported("AΓL₁ is only built over fields".into()));
    }
    let field = f.field();
    let p = field.characteristic() as u32;
    let mut gens = Vec::new();
    let mut place = 1u32;
    for _ in 0..field.degree() {
        let b = FieldElement::from_raw(place);
        gens.push(point_map(n, |t| f.add(t, b)));
        place *= p;
    }
    let mults = match kind {
        AffineKind::Ahl => f.multiplicative_generators(|g| field.is_square(g)),
        _ => f.multiplicative_generators(|_| true),
    };
    for a in mults {
        gens.push(point_map(n, |t| f.mul(t, a)));
    }
    let mut expected = n as u128 * (n as u128 - 1);
    match kind {
        AffineKind::Ahl => expected /= 2,
        AffineKind::AGammaL => {
            expected *= field.degree() as u128;
            if field.degree() > 1 {
                gens.push(point_map(n, |t| field.pow(t, p as u64)));
            }
        }
        AffineKind::Agl => {}
    }
    let group = PermutationGroup::new(n as usize, gens)?;
    if group.order() != expected {
        return Err(Error::Internal(format!("{kind:?} over order {n} has order {}, expected {expected}", group.order())));
    }
    Ok(group)
}

fn point_map(n: u64, f: impl Fn(FieldElement) -> FieldElement) -> Permutation {
    let images: Vec<u32> = (0..n as u32).map(|v| f(FieldElement::from_raw(v)).value()).collect();
    Permutation::from_images(images).expect("affine map is a bijection")
}

/// Structure of the stabilizer of zero in an exceptional group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum G0Structure {
    #[serde(rename = "2T")]
    BinaryTetrahedral,
    #[serde(rename = "2O")]
    BinaryOctahedral,
    #[serde(rename = "2I")]
    BinaryIcosahedral,
    #[serde(rename = "2TxC5")]
    TetrahedralTimesC5,
    #[serde(rename = "2OxC11")]
    OctahedralTimesC11,
    #[serde(rename = "2IxC7")]
    IcosahedralTimesC7,
    #[serde(rename = "2IxC29")]
    IcosahedralTimesC29,
}

impl G0Structure {
    /// Order of the binary polyhedral factor and of the scalar factor.
    fn factors(self) -> (u64, u64) {
        use G0Structure::*;
        match self {
            BinaryTetrahedral => (24, 1),
            BinaryOctahedral => (48, 1),
            BinaryIcosahedral => (120, 1),
            TetrahedralTimesC5 => (24, 5),
            OctahedralTimesC11 => (48, 11),
            IcosahedralTimesC7 => (120, 7),
            IcosahedralTimesC29 => (120, 29),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExceptionalSpec {
    pub p: u64,
    /// 1 or 2; only `p = 11` has two variants.
    pub variant: u8,
    pub g0_order: u64,
    pub g0_structure: G0Structure,
}

impl ExceptionalSpec {
    /// The seven exceptional cases, in increasing `p`.
    pub fn all() -> Vec<ExceptionalSpec> {
        use G0Structure::*;
        [
            (5, 1, BinaryTetrahedral),
            (7, 1, BinaryOctahedral),
            (11, 1, BinaryIcosahedral),
            (11, 2, TetrahedralTimesC5),
            (23, 1, OctahedralTimesC11),
            (29, 1, IcosahedralTimesC7),
            (59, 1, IcosahedralTimesC29),
        ]
        .into_iter()
        .map(|(p, variant, g0_structure)| ExceptionalSpec { p, variant, g0_order: p * p - 1, g0_structure })
        .collect()
    }

    pub fn find(p: u64, variant: u8) -> Result<ExceptionalSpec> {
        Self::all()
            .into_iter()
            .find(|s| s.p == p && s.variant == variant)
            .ok_or_else(|| Error::OutOfRange(format!("no exceptional near-field for p = {p}, variant {variant}")))
    }
}

/// 2×2 matrix over GF(p), row-major, acting on row vectors.
type Mat = [u64; 4];

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    [
        (a[0] * b[0] + a[1] * b[2]) % p,
        (a[0] * b[1] + a[1] * b[3]) % p,
        (a[2] * b[0] + a[3] * b[2]) % p,
        (a[2] * b[1] + a[3] * b[3]) % p,
    ]
}

fn mat_order(a: &Mat, p: u64, cap: u64) -> Option<u64> {
    let id = [1, 0, 0, 1];
    let mut x = *a;
    for k in 1..=cap {
        if x == id {
            return Some(k);
        }
        x = mat_mul(&x, a, p);
    }
    None
}

/// Closure of `gens` under multiplication, or `None` beyond `cap` elements.
fn mat_closure(gens: &[Mat], p: u64, cap: usize) -> Option<Vec<Mat>> {
    let id = [1, 0, 0, 1];
    let mut seen: HashSet<Mat> = HashSet::from([id]);
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for g in gens {
            let y = mat_mul(&x, g, p);
            if seen.insert(y) {
                if seen.len() > cap {
                    return None;
                }
                out.push(y);
            }
        }
    }
    Some(out)
}

/// Element-order multiset `{order: count}` expected of a binary polyhedral group.
fn binary_profile(order: u64) -> HashMap<u64, usize> {
    match order {
        24 => HashMap::from([(1, 1), (2, 1), (4, 6), (3, 8), (6, 8)]),
        48 => HashMap::from([(1, 1), (2, 1), (4, 18), (3, 8), (6, 8), (8, 12)]),
        120 => HashMap::from([(1, 1), (2, 1), (4, 30), (3, 20), (6, 20), (5, 24), (10, 24)]),
        _ => HashMap::new(),
    }
}

/// An exceptional sharply 2-transitive group with its matrix complement.
#[derive(Clone, Debug)]
pub struct ExceptionalGroup {
    pub spec: ExceptionalSpec,
    /// Generators of `G₀` as row-major 2×2 matrices over GF(p).
    pub g0_generators: Vec<[u64; 4]>,
    pub g0_order: u64,
    /// Degree `p²`; the vector `(x, y)` is point `x + p·y`.
    pub group: PermutationGroup,
}

/// Searches `SL₂(p)` for a binary polyhedral subgroup containing
/// `x = [[0,−1],[1,0]]`, extends it by scalars where required, and checks that
/// the result is regular on nonzero vectors.
pub fn exceptional_group(spec: &ExceptionalSpec) -> Result<ExceptionalGroup> {
    let p = spec.p;
    let (binary, scalar) = spec.g0_structure.factors();
    if binary * scalar != p * p - 1 || spec.g0_order != p * p - 1 {
        return Err(Error::OutOfRange(format!("inconsistent exceptional spec {spec:?}")));
    }
    let x: Mat = [0, p - 1, 1, 0];
    let profile = binary_profile(binary);
    let mut found = None;
    'search: for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % p) % p != 1 {
                        continue;
                    }
                    let y = [a, b, c, d];
                    if mat_order(&y, p, 6) != Some(6) {
                        continue;
                    }
                    let Some(elems) = mat_closure(&[x, y], p, binary as usize) else { continue };
                    if elems.len() as u64 != binary {
                        continue;
                    }
                    let mut counts: HashMap<u64, usize> = HashMap::new();
                    for m in &elems {
                        *counts.entry(mat_order(m, p, binary).unwrap()).or_default() += 1;
                    }
                    if counts == profile {
                        found = Some(y);
                        break 'search;
                    }
                }
            }
        }
    }
    let y = found.ok_or_else(|| Error::Internal(format!("no binary polyhedral group of order {binary} in SL₂({p})")))?;
    let mut g0_generators = vec![x, y];
    if scalar > 1 {
        let root = (2..p)
            .find(|&g| crate::finitefield::prime_factors(p - 1).iter().all(|r| pow_mod_small(g, (p - 1) / r, p) != 1))
            .ok_or_else(|| Error::Internal(format!("no primitive root mod {p}")))?;
        let lambda = pow_mod_small(root, (p - 1) / scalar, p);
        g0_generators.push([lambda, 0, 0, lambda]);
    }
    let g0 = mat_closure(&g0_generators, p, (p * p) as usize)
        .ok_or_else(|| Error::Internal("G₀ closure ran away".into()))?;
    if g0.len() as u64 != p * p - 1 {
        return Err(Error::Internal(format!("|G₀| = {}, expected {}", g0.len(), p * p - 1)));
    }
    let orbit: HashSet<(u64, u64)> = g0.iter().map(|m| (m[0], m[1])).collect();
    if orbit.len() as u64 != p * p - 1 {
        return Err(Error::Internal("G₀ is not regular on nonzero vectors".into()));
    }
    let commutes = |a: &Mat, b: &Mat| mat_mul(a, b, p) == mat_mul(b, a, p);
    if g0_generators.iter().all(|a| g0_generators.iter().all(|b| commutes(a, b))) {
        return Err(Error::Internal("G₀ is abelian".into()));
    }

    let n = (p * p) as usize;
    let vec_map = |f: &dyn Fn(u64, u64) -> (u64, u64)| {
        let images = (0..n as u64)
            .map(|v| {
                let (x1, y1) = f(v % p, v / p);
                (x1 + p * y1) as u32
            })
            .collect();
        Permutation::from_images(images)
    };
    let mut gens = vec![vec_map(&|a, b| ((a + 1) % p, b))?, vec_map(&|a, b| (a, (b + 1) % p))?];
    for m in &g0_generators {
        gens.push(vec_map(&|a, b| ((a * m[0] + b * m[2]) % p, (a * m[1] + b * m[3]) % p))?);
    }
    let expected = (p * p * (p * p - 1)) as u128;
    let group = PermutationGroup::with_order_bound(n, gens, expected)?;
    if group.order() != expected {
        return Err(Error::Internal(format!("order {} but expected {expected}", group.order())));
    }
    Ok(ExceptionalGroup { spec: *spec, g0_generators, g0_order: g0.len() as u64, group })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{is_sharply_two_transitive_exhaustive, ActionDomain};

    #[test]
    fn dickson_condition() {
        assert!(is_dickson_pair(3, 2).unwrap());
        assert!(!is_dickson_pair(3, 3).unwrap());
        assert!(is_dickson_pair(8, 1).unwrap());
        assert!(is_dickson_pair(5, 4).unwrap());
        assert!(!is_dickson_pair(3, 4).unwrap());
        assert_eq!(is_dickson_pair(6, 2), Err(Error::NotPrimePower(6)));
        assert_eq!(NearField::dickson(3, 3).unwrap_err(), Error::NotDickson { q: 3, d: 3 });
    }

    #[test]
    fn order_nine_is_twisted() {
        let f = NearField::dickson(3, 2).unwrap();
        assert_eq!(f.m(), &[0, 1]);
        let field = f.field();
        let w = field.omega();
        assert_eq!(f.mul(w, w), field.exp(4));
        assert_eq!(field.mul(w, w), field.exp(2));
        assert_eq!(f.mul(w, f.one()), w);
        f.check_axioms_exhaustive().unwrap();
        let left_fails = f.elements().any(|a| {
            f.elements().any(|b| {
                f.elements().any(|c| f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
            })
        });
        assert!(left_fails);
    }

    #[test]
    fn untwisted_is_the_field() {
        let f = NearField::field_of_order(8).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.field().mul(a, b));
            }
        }
    }

    #[test]
    fn order_343_center() {
        let f = NearField::dickson(7, 3).unwrap();
        let center = f.center();
        assert_eq!(center.len(), 7);
        let sub: HashSet<FieldElement> =
            f.elements().filter(|&a| f.field().pow(a, 7) == a).collect();
        assert_eq!(center.into_iter().collect::<HashSet<_>>(), sub);
    }

    #[test]
    fn affine_orders() {
        let f7 = NearField::field_of_order(7).unwrap();
        let ahl = affine_group(&f7, AffineKind::Ahl).unwrap();
        assert_eq!(ahl.order(), 21);
        assert_eq!(ahl.regularity_degree(&ActionDomain::KSubsets { n: 7, k: 2 }).unwrap(), Some(1));
        let f8 = NearField::field_of_order(8).unwrap();
        let agl = affine_group(&f8, AffineKind::Agl).unwrap();
        assert_eq!(agl.order(), 56);
        assert_eq!(agl.regularity_degree(&ActionDomain::KSubsets { n: 8, k: 3 }).unwrap(), Some(1));
        assert!(affine_group(&f8, AffineKind::Ahl).is_err());
        let nf9 = NearField::dickson(3, 2).unwrap();
        assert!(affine_group(&nf9, AffineKind::AGammaL).is_err());
        assert!(is_sharply_two_transitive_exhaustive(&affine_group(&nf9, AffineKind::Agl).unwrap()));
    }

    #[test]
    fn exceptional_p5() {
        let g = exceptional_group(&ExceptionalSpec::find(5, 1).unwrap()).unwrap();
        assert_eq!(g.g0_order, 24);
        assert_eq!(g.group.order(), 600);
        assert!(is_sharply_two_transitive_exhaustive(&g.group));
    }

    #[test]
    fn exceptional_p11_variant2_uses_scalars() {
        let g = exceptional_group(&ExceptionalSpec::find(11, 2).unwrap()).unwrap();
        assert_eq!(g.g0_order, 120);
        let s = g.g0_generators.last().unwrap();
        assert_eq!((s[1], s[2]), (0, 0));
        assert_eq!(s[0], s[3]);
        assert_eq!(mat_order(s, 11, 11), Some(5));
    }

    #[test]
    fn json_table_for_small_orders() {
        let v = NearField::dickson(3, 2).unwrap().to_json();
        assert_eq!(v["multiplication"].as_array().unwrap().len(), 9);
        assert!(NearField::dickson(7, 3).unwrap().to_json().get("multiplication").is_none());
    }
}
