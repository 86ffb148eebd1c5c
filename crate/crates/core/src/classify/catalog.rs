//! Multiply homogeneous permutation groups other than `A_n` and `S_n`.
//!
//! Infinite families are expanded for degrees up to [`CATALOG_MAX_DEGREE`];
//! beyond that only the family descriptors and the sporadic groups remain.
//! Records whose members are not pinned down individually are marked as a
//! [`RecordKind::Family`] and carry a lower bound on the order instead.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finitefield::{prime_power, FieldElement, FiniteField};
use crate::nearfield::{affine_group, AffineKind, NearField};
use crate::permgroup::{Permutation, PermutationGroup};

pub const CATALOG_MAX_DEGREE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    /// A single group; `order` is exact.
    Group,
    /// A range of groups; `order` bounds every member from below.
    Family,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Recipe {
    /// `PSL_d(q)` extended by `δ^a φ^b` for each listed `(a, b)`, where `δ` is
    /// `diag(ω, 1, …, 1)` and `φ` the Frobenius map.
    Projective { d: usize, q: u64, extra: Vec<(u32, u32)> },
    AffineLine { q: u64, kind: AffineKind },
    AffinePrime { p: u64, d: usize },
    Mathieu(u8),
}

/// One entry of the catalog.
#[derive(Clone, Debug, Serialize)]
pub struct HomogRecord {
    pub name: String,
    pub degree: usize,
    pub order: u128,
    pub kind: RecordKind,
    /// Largest `k` with the group transitive on k-subsets.
    pub homogeneity: usize,
    /// Largest `k` with the group transitive on ordered k-tuples.
    pub transitivity: usize,
    pub constructible: bool,
    #[serde(skip)]
    recipe: Option<Recipe>,
}

impl HomogRecord {
    fn group(name: impl Into<String>, degree: usize, order: u128, homogeneity: usize, transitivity: usize) -> Self {
        HomogRecord {
            name: name.into(),
            degree,
            order,
            kind: RecordKind::Group,
            homogeneity,
            transitivity,
            constructible: false,
            recipe: None,
        }
    }

    fn family(name: impl Into<String>, degree: usize, order_lower: u128, homogeneity: usize, transitivity: usize) -> Self {
        HomogRecord { kind: RecordKind::Family, ..Self::group(name, degree, order_lower, homogeneity, transitivity) }
    }

    fn with(mut self, recipe: Recipe) -> Self {
        self.constructible = true;
        self.recipe = Some(recipe);
        self
    }

    pub fn is_k_transitive(&self, k: usize) -> bool {
        self.transitivity >= k
    }

    /// Builds the group on points `0..degree` and checks its order.
    pub fn build(&self) -> Result<PermutationGroup> {
        let recipe = self
            .recipe
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{} has no construction", self.name)))?;
        let g = match recipe {
            Recipe::Projective { d, q, extra } => projective_group(*d, *q, extra, self.order)?,
            Recipe::AffineLine { q, kind } => affine_group(&NearField::field_of_order(*q)?, *kind)?,
            Recipe::AffinePrime { p, d } => affine_prime_group(*p, *d)?,
            Recipe::Mathieu(m) => mathieu(*m)?,
        };
        if g.order() != self.order || g.degree() != self.degree {
            return Err(Error::Internal(format!(
                "{} built with order {} on {} points, expected {} on {}",
                self.name,
                g.order(),
                g.degree(),
                self.order,
                self.degree
            )));
        }
        Ok(g)
    }
}

/// Infinite family, described by its degree formula.
#[derive(Clone, Debug, Serialize)]
pub struct HomogFamily {
    pub name: &'static str,
    pub degrees: &'static str,
    pub homogeneity: usize,
}

/// Every catalog record (expanded families and sporadic groups) that is
/// k-homogeneous.
pub fn homogeneous_catalog(k: usize) -> Vec<HomogRecord> {
    records().iter().filter(|r| r.homogeneity >= k).cloned().collect()
}

/// Infinite families with members that are k-homogeneous.
pub fn homogeneous_families(k: usize) -> Vec<HomogFamily> {
    let all = [
        HomogFamily { name: "2-homogeneous subgroups of AΓL_d(q)", degrees: "q^d", homogeneity: 2 },
        HomogFamily { name: "AGL_d(2)", degrees: "2^d, d >= 3", homogeneity: 3 },
        HomogFamily { name: "PSL_d(q) <= G <= PΓL_d(q)", degrees: "(q^d-1)/(q-1), d >= 2", homogeneity: 2 },
        HomogFamily { name: "PSL_2(q) <= G <= PΓL_2(q)", degrees: "q+1", homogeneity: 3 },
        HomogFamily { name: "PSU_3(q) <= G <= PΓU_3(q)", degrees: "q^3+1", homogeneity: 2 },
        HomogFamily { name: "Sp_2d(2)", degrees: "2^(d-1)(2^d±1), d >= 3", homogeneity: 2 },
        HomogFamily { name: "Sz(q) <= G <= Aut Sz(q)", degrees: "q^2+1, q = 2^e, e odd >= 3", homogeneity: 2 },
        HomogFamily { name: "Re(q) <= G <= Aut Re(q)", degrees: "q^3+1, q = 3^e, e odd >= 3", homogeneity: 2 },
    ];
    all.into_iter().filter(|f| f.homogeneity >= k).collect()
}

/// Catalog records of one degree that are k-homogeneous.
pub fn candidates(n: usize, k: usize) -> Vec<HomogRecord> {
    records().iter().filter(|r| r.degree == n && r.homogeneity >= k).cloned().collect()
}

/// Whether some k-homogeneous group of degree `n` other than `A_n`, `S_n`
/// can exist, judged from the degree sets of the families and sporadic groups.
pub fn homogeneous_degree(k: usize, n: usize) -> bool {
    let n64 = n as u64;
    match k {
        0 | 1 => true,
        2 => {
            prime_power(n64).is_some()
                || is_projective_degree(n64)
                || is_unitary_or_ree_degree(n64)
                || is_symplectic_degree(n64)
                || is_suzuki_degree(n64)
                || [11, 12, 15, 22, 23, 24, 28, 176, 276].contains(&n)
        }
        3 => {
            (n64 >= 8 && n64.is_power_of_two())
                || (n >= 6 && prime_power(n64 - 1).is_some())
                || [11, 12, 22, 23, 24].contains(&n)
        }
        4 => [9, 11, 12, 23, 24, 33].contains(&n),
        5 => [12, 24].contains(&n),
        _ => false,
    }
}

fn is_projective_degree(n: u64) -> bool {
    (2..n).any(|q| {
        if prime_power(q).is_none() {
            return false;
        }
        let mut v = 1 + q;
        while v < n {
            v = v * q + 1;
        }
        v == n
    })
}

fn is_unitary_or_ree_degree(n: u64) -> bool {
    (2..).take_while(|q| q * q * q < n).any(|q| q * q * q + 1 == n && prime_power(q).is_some())
}

fn is_symplectic_degree(n: u64) -> bool {
    (3..32).any(|d| {
        let a = 1u64 << (d - 1);
        let b = 1u64 << d;
        a * (b + 1) == n || a * (b - 1) == n
    })
}

fn is_suzuki_degree(n: u64) -> bool {
    (3..32).step_by(2).any(|e| {
        let q = 1u64 << e;
        q.checked_mul(q).map(|s| s + 1) == Some(n)
    })
}

fn records() -> &'static [HomogRecord] {
    static RECORDS: OnceLock<Vec<HomogRecord>> = OnceLock::new();
    RECORDS.get_or_init(build_records)
}

fn build_records() -> Vec<HomogRecord> {
    let mut out = Vec::new();
    for n in 5..=CATALOG_MAX_DEGREE as u64 {
        if let Some((p, e)) = prime_power(n) {
            affine_records(n, p, e, &mut out);
        }
    }
    for q in 5..CATALOG_MAX_DEGREE as u64 {
        if prime_power(q).is_some() {
            projective_line_records(q, &mut out);
        }
    }
    for q in 2..CATALOG_MAX_DEGREE as u64 {
        if prime_power(q).is_none() {
            continue;
        }
        let mut d = 3;
        while projective_degree(d, q) <= CATALOG_MAX_DEGREE as u64 {
            projective_space_records(d, q, &mut out);
            d += 1;
        }
    }
    let m = |name: &str, degree, order, h, t, id| HomogRecord::group(name, degree, order, h, t).with(Recipe::Mathieu(id));
    out.push(m("M11", 11, 7920, 4, 4, 11));
    out.push(m("M12", 12, 95040, 5, 5, 12));
    out.push(m("M22", 22, 443520, 3, 3, 22));
    out.push(m("M23", 23, 10200960, 4, 4, 23));
    out.push(m("M24", 24, 244823040, 5, 5, 24));
    out.push(HomogRecord::group("PSL_2(11) on cosets of A_5", 11, 660, 2, 2));
    out.push(HomogRecord::group("M11 on cosets of PSL_2(11)", 12, 7920, 3, 3));
    out.push(HomogRecord::group("A_7 on cosets of AGL_3(2)", 15, 2520, 2, 2));
    out.push(HomogRecord::group("Aut M22", 22, 887040, 3, 3));
    out.push(HomogRecord::group("PSU_3(3)", 28, 6048, 2, 2));
    out.push(HomogRecord::group("PΓU_3(3)", 28, 12096, 2, 2));
    out.push(HomogRecord::group("Sp_6(2)", 28, 1451520, 2, 2));
    out.push(HomogRecord::group("Sp_6(2)", 36, 1451520, 2, 2));
    out.push(HomogRecord::group("PΣL_2(8) on Sylow 3-subgroups", 28, 1512, 2, 2));
    out.push(HomogRecord::group("HS", 176, 44352000, 2, 2));
    out.push(HomogRecord::group("Co3", 276, 495766656000, 2, 2));
    out
}

fn affine_records(n: u64, p: u64, e: u32, out: &mut Vec<HomogRecord>) {
    let deg = n as usize;
    let nn = n as u128;
    let line = |kind| Recipe::AffineLine { q: n, kind };
    let h3 = if n == 8 { 3 } else { 2 };
    out.push(HomogRecord::group(format!("AGL_1({n})"), deg, nn * (nn - 1), h3, 2).with(line(AffineKind::Agl)));
    if n % 4 == 3 {
        out.push(HomogRecord::group(format!("AHL_1({n})"), deg, nn * (nn - 1) / 2, 2, 1).with(line(AffineKind::Ahl)));
    }
    if e > 1 {
        let h = if n == 8 || n == 32 { 3 } else { 2 };
        let order = nn * (nn - 1) * e as u128;
        out.push(HomogRecord::group(format!("AΓL_1({n})"), deg, order, h, 2).with(line(AffineKind::AGammaL)));
        let h = if p == 2 && e >= 3 { 3 } else { 2 };
        let order = nn * gl_order(e as usize, p);
        out.push(
            HomogRecord::group(format!("AGL_{e}({p})"), deg, order, h, h)
                .with(Recipe::AffinePrime { p, d: e as usize }),
        );
    }
    if n == 16 {
        out.push(HomogRecord::group("2^4:A_7", 16, 40320, 3, 3));
    }
    out.push(HomogRecord::family(
        format!("2-homogeneous subgroups of AΓL_d(q), q^d = {n}"),
        deg,
        nn * (nn - 1) / 2,
        2,
        1,
    ));
}

/// Every group between `PSL_2(q)` and `PΓL_2(q)`, one record each.
fn projective_line_records(q: u64, out: &mut Vec<HomogRecord>) {
    let (p, f) = prime_power(q).expect("prime power");
    let f = f as u32;
    let g: u32 = if p == 2 { 1 } else { 2 };
    let psl = psl_order(2, q);
    let mut seen: Vec<BTreeSet<(u32, u32)>> = Vec::new();
    let quotient: Vec<(u32, u32)> = (0..g).flat_map(|a| (0..f).map(move |b| (a, b))).collect();
    let mut choices: Vec<Vec<(u32, u32)>> = vec![vec![]];
    for &x in &quotient {
        choices.push(vec![x]);
        for &y in &quotient {
            choices.push(vec![x, y]);
        }
    }
    for gens in choices {
        let sub = quotient_subgroup(&gens, g, f);
        if seen.contains(&sub) {
            continue;
        }
        seen.push(sub.clone());
        let outside_sigma = sub.iter().any(|&(a, _)| a == 1);
        let whole = sub.len() as u32 == g * f;
        let trans = if p == 2 || outside_sigma { 3 } else { 2 };
        let mut homog = if p == 2 || q % 4 == 3 || outside_sigma { 3 } else { 2 };
        if q == 8 || (q == 32 && whole) {
            homog = 4;
        }
        let name = projective_line_name(q, g, f, &sub);
        let order = psl * sub.len() as u128;
        let recipe = Recipe::Projective { d: 2, q, extra: gens.into_iter().filter(|&x| x != (0, 0)).collect() };
        out.push(HomogRecord::group(name, q as usize + 1, order, homog, trans).with(recipe));
    }
}

fn quotient_subgroup(gens: &[(u32, u32)], g: u32, f: u32) -> BTreeSet<(u32, u32)> {
    let mut set = BTreeSet::from([(0, 0)]);
    let mut frontier = vec![(0, 0)];
    while let Some((a, b)) = frontier.pop() {
        for &(x, y) in gens {
            let z = ((a + x) % g, (b + y) % f);
            if set.insert(z) {
                frontier.push(z);
            }
        }
    }
    set
}

fn projective_line_name(q: u64, g: u32, f: u32, sub: &BTreeSet<(u32, u32)>) -> String {
    let size = sub.len() as u32;
    if size == 1 {
        return format!("PSL_2({q})");
    }
    if size == g * f {
        return if f == 1 { format!("PGL_2({q})") } else { format!("PΓL_2({q})") };
    }
    if sub.iter().all(|&(_, b)| b == 0) {
        return format!("PGL_2({q})");
    }
    if sub.iter().all(|&(a, _)| a == 0) {
        return if size == f { format!("PΣL_2({q})") } else { format!("PSL_2({q}).{size}") };
    }
    if size == 2 && sub.contains(&(1, f / 2)) {
        return format!("M({q})");
    }
    let gens: Vec<String> = sub
        .iter()
        .filter(|&&x| x != (0, 0))
        .map(|&(a, b)| format!("δ^{a}φ^{b}"))
        .collect();
    format!("PSL_2({q}).<{}>", gens.join(","))
}

fn projective_space_records(d: usize, q: u64, out: &mut Vec<HomogRecord>) {
    let (_, f) = prime_power(q).expect("prime power");
    let gcd = gcd(d as u64, q - 1) as u32;
    let deg = projective_degree(d, q) as usize;
    let psl = psl_order(d, q);
    let rec = |name: String, order, extra| HomogRecord::group(name, deg, order, 2, 2).with(Recipe::Projective { d, q, extra });
    out.push(rec(format!("PSL_{d}({q})"), psl, vec![]));
    if gcd > 1 {
        out.push(rec(format!("PGL_{d}({q})"), psl * gcd as u128, vec![(1, 0)]));
    }
    if f > 1 {
        out.push(rec(format!("PΓL_{d}({q})"), psl * (gcd * f) as u128, vec![(1, 0), (0, 1)]));
    }
    let index = gcd * f;
    if index > 1 && !crate::finitefield::is_prime(index as u64) {
        out.push(HomogRecord::family(format!("PSL_{d}({q}) <= G <= PΓL_{d}({q})"), deg, psl, 2, 2));
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn projective_degree(d: usize, q: u64) -> u64 {
    (0..d as u32).map(|i| q.pow(i)).sum()
}

fn gl_order(d: usize, q: u64) -> u128 {
    let qd = (q as u128).pow(d as u32);
    (0..d as u32).map(|i| qd - (q as u128).pow(i)).product()
}

/// `|PSL_d(q)| = |GL_d(q)| / ((q-1) gcd(d, q-1))`.
pub fn psl_order(d: usize, q: u64) -> u128 {
    gl_order(d, q) / (q as u128 - 1) / gcd(d as u64, q - 1) as u128
}

struct VectorSpace {
    field: FiniteField,
    d: usize,
    q: u64,
}

impl VectorSpace {
    fn encode(&self, v: &[FieldElement]) -> usize {
        v.iter().rev().fold(0u64, |acc, x| acc * self.q + x.value() as u64) as usize
    }

    fn decode(&self, mut code: usize) -> Vec<FieldElement> {
        (0..self.d)
            .map(|_| {
                let x = self.field.element((code as u64) % self.q).expect("in range");
                code /= self.q as usize;
                x
            })
            .collect()
    }

    /// Scales so the first nonzero coordinate is 1.
    fn normalize(&self, v: &mut [FieldElement]) {
        if let Some(c) = v.iter().find(|x| !x.is_zero()).copied() {
            let inv = self.field.inv(c).expect("nonzero");
            for x in v.iter_mut() {
                *x = self.field.mul(*x, inv);
            }
        }
    }
}

/// `PSL_d(q)` on the points of `PG(d-1, q)`, extended by `δ^a φ^b` elements.
fn projective_group(d: usize, q: u64, extra: &[(u32, u32)], bound: u128) -> Result<PermutationGroup> {
    let field = FiniteField::of_order(q)?;
    let (p, f) = (field.characteristic(), field.degree());
    let space = VectorSpace { field, d, q };
    let size = (q as usize).pow(d as u32);
    let mut points = Vec::new();
    let mut lookup = vec![u32::MAX; size];
    for code in 1..size {
        let mut v = space.decode(code);
        let raw = v.clone();
        space.normalize(&mut v);
        if v == raw {
            lookup[code] = points.len() as u32;
            points.push(v);
        }
    }
    let perm = |map: &dyn Fn(&mut Vec<FieldElement>)| -> Permutation {
        let images = points
            .iter()
            .map(|v| {
                let mut w = v.clone();
                map(&mut w);
                space.normalize(&mut w);
                lookup[space.encode(&w)]
            })
            .collect();
        Permutation::from_images(images).expect("projective map is a bijection")
    };
    let fl = &space.field;
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            for l in 0..f {
                let a = fl.element(p.pow(l))?;
                gens.push(perm(&|w: &mut Vec<FieldElement>| {
                    let add = fl.mul(w[i], a);
                    w[j] = fl.add(w[j], add);
                }));
            }
        }
    }
    let omega = fl.omega();
    let delta = perm(&|w: &mut Vec<FieldElement>| w[0] = fl.mul(w[0], omega));
    let phi = perm(&|w: &mut Vec<FieldElement>| {
        for x in w.iter_mut() {
            *x = fl.pow(*x, p);
        }
    });
    for &(a, b) in extra {
        gens.push(delta.pow(a as u64).then(&phi.pow(b as u64)));
    }
    PermutationGroup::with_order_bound(points.len(), gens, bound)
}

/// `AGL_d(p)` on `F_p^d`, points labelled by `Σ v_i p^i`.
fn affine_prime_group(p: u64, d: usize) -> Result<PermutationGroup> {
    let size = (p as usize).pow(d as u32);
    let decode = |mut c: usize| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let x = c as u64 % p;
                c /= p as usize;
                x
            })
            .collect()
    };
    let encode = |v: &[u64]| -> u32 { v.iter().rev().fold(0u64, |acc, x| acc * p + x) as u32 };
    let perm = |map: &dyn Fn(&mut Vec<u64>)| -> Permutation {
        let images = (0..size)
            .map(|c| {
                let mut v = decode(c);
                map(&mut v);
                encode(&v)
            })
            .collect();
        Permutation::from_images(images).expect("affine map is a bijection")
    };
    let mut gens = vec![perm(&|v: &mut Vec<u64>| v[0] = (v[0] + 1) % p)];
    for i in 0..d {
        for j in 0..d {
            if i != j {
                gens.push(perm(&|v: &mut Vec<u64>| v[j] = (v[j] + v[i]) % p));
            }
        }
    }
    if p > 2 {
        let field = FiniteField::new(p, 1)?;
        let w = field.omega().value() as u64;
        gens.push(perm(&|v: &mut Vec<u64>| v[0] = v[0] * w % p));
    }
    let order = size as u128 * gl_order(d, p);
    PermutationGroup::with_order_bound(size, gens, order)
}

fn cycles_perm(n: usize, cycles: &[&[u32]]) -> Permutation {
    let zero: Vec<Vec<u32>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    let refs: Vec<&[u32]> = zero.iter().map(|c| c.as_slice()).collect();
    Permutation::from_cycles(n, &refs).expect("valid cycles")
}

fn long_cycle(n: usize, len: u32) -> Permutation {
    let c: Vec<u32> = (1..=len).collect();
    cycles_perm(n, &[&c])
}

/// Mathieu groups from classical generators, written 1-based.
fn mathieu(m: u8) -> Result<PermutationGroup> {
    match m {
        11 | 12 => {
            let n = m as usize;
            let mut gens = vec![long_cycle(n, 11), cycles_perm(n, &[&[3, 7, 11, 8], &[4, 10, 5, 6]])];
            if m == 12 {
                gens.push(cycles_perm(n, &[&[1, 12], &[2, 11], &[3, 6], &[4, 8], &[5, 9], &[7, 10]]));
            }
            let order = if m == 11 { 7920 } else { 95040 };
            PermutationGroup::with_order_bound(n, gens, order)
        }
        23 | 24 => {
            let n = m as usize;
            let mut gens = vec![
                long_cycle(n, 23),
                cycles_perm(
                    n,
                    &[&[3, 17, 10, 7, 9], &[4, 13, 14, 19, 5], &[8, 18, 11, 12, 23], &[15, 20, 22, 21, 16]],
                ),
            ];
            if m == 24 {
                gens.push(cycles_perm(
                    n,
                    &[
                        &[1, 24],
                        &[2, 23],
                        &[3, 12],
                        &[4, 16],
                        &[5, 18],
                        &[6, 10],
                        &[7, 20],
                        &[8, 14],
                        &[9, 21],
                        &[11, 17],
                        &[13, 22],
                        &[15, 19],
                    ],
                ));
            }
            let order = if m == 23 { 10200960 } else { 244823040 };
            PermutationGroup::with_order_bound(n, gens, order)
        }
        22 => {
            // Point stabilizer in M23, restricted to the other 22 points.
            let m23 = mathieu(23)?;
            if m23.chain().base().first() != Some(&0) {
                return Err(Error::Internal("M23 chain does not start at point 0".into()));
            }
            let gens = m23
                .chain()
                .strong_generators(1)
                .iter()
                .map(|g| Permutation::from_images(g.images()[1..].iter().map(|x| x - 1).collect()))
                .collect::<Result<Vec<_>>>()?;
            PermutationGroup::with_order_bound(22, gens, 443520)
        }
        _ => Err(Error::Unsupported(format!("M{m}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(k: usize) -> BTreeSet<String> {
        homogeneous_catalog(k).into_iter().map(|r| r.name).collect()
    }

    #[test]
    fn top_levels_of_the_catalog() {
        assert!(homogeneous_catalog(6).is_empty());
        let five: Vec<(String, usize, u128)> =
            homogeneous_catalog(5).into_iter().map(|r| (r.name, r.degree, r.order)).collect();
        assert_eq!(five, vec![("M12".into(), 12, 95040), ("M24".into(), 24, 244823040)]);
        let four = names(4);
        let expected: BTreeSet<String> =
            ["M11", "M12", "M23", "M24", "PSL_2(8)", "PΓL_2(8)", "PΓL_2(32)"].iter().map(|s| s.to_string()).collect();
        assert_eq!(four, expected);
        let psl28 = homogeneous_catalog(4).into_iter().find(|r| r.name == "PSL_2(8)").unwrap();
        assert_eq!((psl28.degree, psl28.order), (9, 504));
    }

    #[test]
    fn degree_sets_match_the_catalog() {
        for k in 2..=6 {
            let from_records: BTreeSet<usize> = homogeneous_catalog(k)
                .iter()
                .map(|r| r.degree)
                .filter(|&d| d <= CATALOG_MAX_DEGREE)
                .collect();
            let from_formula: BTreeSet<usize> = (5..=CATALOG_MAX_DEGREE).filter(|&n| homogeneous_degree(k, n)).collect();
            assert_eq!(from_records, from_formula, "k = {k}");
        }
        let d4: Vec<usize> = (1..200).filter(|&n| homogeneous_degree(4, n)).collect();
        assert_eq!(d4, vec![9, 11, 12, 23, 24, 33]);
        assert!(homogeneous_degree(2, 14) && !homogeneous_degree(2, 34) && homogeneous_degree(2, 28) && homogeneous_degree(2, 65));
    }

    #[test]
    fn every_constructible_record_builds_with_its_order() {
        for r in records().iter().filter(|r| r.constructible && r.degree <= 33) {
            let g = r.build().unwrap_or_else(|e| panic!("{}: {e}", r.name));
            assert_eq!(g.order(), r.order, "{}", r.name);
        }
    }

    #[test]
    fn mathieu_homogeneity() {
        for (name, k) in [("M11", 4), ("M12", 5), ("M22", 3)] {
            let r = records().iter().find(|r| r.name == name).unwrap();
            let g = r.build().unwrap();
            assert!(g.is_k_homogeneous(k).unwrap(), "{name}");
            assert!(!g.is_k_homogeneous(k + 1).unwrap() || 2 * (k + 1) > r.degree, "{name}");
        }
    }

    #[test]
    fn projective_line_homogeneity_flags_hold() {
        for r in records().iter().filter(|r| r.constructible && r.name.contains("_2(") && r.degree <= 28) {
            let g = r.build().unwrap();
            for k in 2..=4.min(r.degree / 2) {
                assert_eq!(g.is_k_homogeneous(k).unwrap(), r.homogeneity >= k, "{} k={k}", r.name);
            }
        }
    }

    #[test]
    fn pgammal_2_32_is_four_homogeneous() {
        let r = records().iter().find(|r| r.name == "PΓL_2(32)").unwrap();
        let g = r.build().unwrap();
        assert!(g.is_k_homogeneous(4).unwrap());
        let psl = records().iter().find(|r| r.name == "PSL_2(32)").unwrap().build().unwrap();
        assert!(!psl.is_k_homogeneous(4).unwrap());
    }

    #[test]
    fn intermediate_groups_of_psl2_9() {
        let found = names(2);
        for n in ["PSL_2(9)", "PGL_2(9)", "PΣL_2(9)", "M(9)", "PΓL_2(9)"] {
            assert!(found.contains(n), "{n}");
        }
    }
}
