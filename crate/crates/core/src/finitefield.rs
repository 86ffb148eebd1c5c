//! Arithmetic in `GF(p^e)`.
//!
//! An element is stored as the integer `Σ c_i p^i` built from its coefficient
//! vector `(c_0, .., c_{e-1})` over the modulus, constant term first. For
//! `p^e <= 2^20` multiplication and discrete logarithms go through log/exp
//! tables; larger fields multiply polynomials and use baby-step giant-step.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};

const TABLE_LIMIT: u64 = 1 << 20;
const SIZE_LIMIT: u64 = 1 << 32;

/// An element of some [`FiniteField`], encoded as `Σ c_i p^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    /// Wraps an encoding known to be below the field order.
    pub(crate) fn from_raw(v: u32) -> Self {
        FieldElement(v)
    }

    /// The packed encoding; also the element's point label in affine actions.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The field `GF(p^e)` with a fixed modulus and primitive element.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    e: u32,
    order: u64,
    modulus: Vec<u32>,
    omega: FieldElement,
    tables: Option<Tables>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, e)` with `n = p^e`, or `None`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let (mut m, mut e) = (n, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Polynomial helpers over GF(p); coefficient vectors, constant first, trimmed.
mod poly {
    use super::inv_mod_p;

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod_p(m[dm], p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            for i in 0..=dm {
                r[dr - dm + i] = (r[dr - dm + i] + p - c * m[i] % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `x^(p^i) mod m` for i = 1..=n, by repeated p-th powering.
    pub fn frobenius_chain(m: &[u64], p: u64, n: u32) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = rem(&[0, 1], m, p);
        for _ in 0..n {
            let mut acc = vec![1u64];
            let mut base = cur.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_mod(&acc, &base, m, p);
                }
                base = mul_mod(&base, &base, m, p);
                e >>= 1;
            }
            cur = acc;
            out.push(cur.clone());
        }
        out
    }
}

/// Rabin's test: a monic `f` of degree `e` is irreducible iff
/// `x^(p^e) ≡ x (mod f)` and `gcd(x^(p^(e/r)) − x, f) = 1` for each prime `r | e`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    if e == 1 {
        return true;
    }
    let chain = poly::frobenius_chain(f, p, e);
    let x = poly::rem(&[0, 1], f, p);
    if chain[e as usize - 1] != x {
        return false;
    }
    prime_factors(e as u64).into_iter().all(|r| {
        let h = poly::sub(&chain[(e as u64 / r) as usize - 1], &x, p);
        poly::gcd(f, &h, p).len() == 1
    })
}

/// Trial division by every monic polynomial of degree `1..=e/2`.
pub fn is_irreducible_by_trial_division(f: &[u32], p: u32) -> bool {
    let f: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let p = p as u64;
    let e = f.len() as u32 - 1;
    for deg in 1..=e / 2 {
        for low in 0..p.pow(deg) {
            let mut g: Vec<u64> = (0..deg).map(|i| low / p.pow(i) % p).collect();
            g.push(1);
            if poly::rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds `GF(p^e)` with the monic irreducible modulus of smallest encoding
    /// and `ω` the primitive element of smallest encoding. For `GF(8)` this
    /// gives `t³ + t + 1` and `ω = t`.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::OutOfRange("extension degree must be positive".into()));
        }
        let order = (p as u128).checked_pow(e).filter(|&q| q <= SIZE_LIMIT as u128).ok_or_else(|| {
            Error::SizeBound(format!("{p}^{e} exceeds 2^32"))
        })? as u64;
        let modulus = (0..order)
            .map(|low| {
                let mut f: Vec<u64> = (0..e).map(|i| low / p.pow(i) % p).collect();
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .ok_or_else(|| Error::Internal(format!("no irreducible of degree {e} over GF({p})")))?;
        let mut field = FiniteField {
            p: p as u32,
            e,
            order,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
            omega: FieldElement(0),
            tables: None,
        };
        let factors = prime_factors(order - 1);
        let omega = (1..order)
            .map(|v| FieldElement(v as u32))
            .find(|&g| factors.iter().all(|r| !field.is_one(field.pow_slow(g, (order - 1) / r))))
            .ok_or_else(|| Error::Internal("no primitive element".into()))?;
        field.omega = omega;
        if order <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity(order as usize - 1);
            let mut log = vec![0u32; order as usize];
            let mut x = field.one();
            for i in 0..order - 1 {
                exp.push(x.0);
                log[x.0 as usize] = i as u32;
                x = field.mul_slow(x, omega);
            }
            if !field.is_one(x) {
                return Err(Error::Internal("ω does not have order p^e − 1".into()));
            }
            field.tables = Some(Tables { exp, log });
        }
        Ok(field)
    }

    /// `GF(q)` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Monic modulus coefficients, constant term first, length `e + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn omega(&self) -> FieldElement {
        self.omega
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The class of `t` (the polynomial variable); equals `p` as a constant
    /// when `e = 1`.
    pub fn t(&self) -> FieldElement {
        if self.e == 1 {
            FieldElement(0)
        } else {
            FieldElement(self.p)
        }
    }

    fn is_one(&self, a: FieldElement) -> bool {
        a.0 == 1
    }

    /// The element with packed encoding `v`.
    pub fn element(&self, v: u64) -> Result<FieldElement> {
        if v >= self.order {
            return Err(Error::OutOfRange(format!("{v} is not an element of GF({})", self.order)));
        }
        Ok(FieldElement(v as u32))
    }

    /// The constant `c mod p`.
    pub fn constant(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::OutOfRange(format!("{coeffs:?} is not a coefficient vector of length {}", self.e)));
        }
        Ok(FieldElement(coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64) as u32))
    }

    /// Coefficients, constant term first, length `e`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0 as u64;
        (0..self.e)
            .map(|_| {
                let c = v % self.p as u64;
                v /= self.p as u64;
                c as u32
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(|v| FieldElement(v as u32))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.order).map(|v| FieldElement(v as u32))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.e == 1 {
            return FieldElement(((a.0 as u64 + b.0 as u64) % self.p as u64) as u32);
        }
        let p = self.p as u64;
        let (mut x, mut y, mut out, mut place) = (a.0 as u64, b.0 as u64, 0u64, 1u64);
        for _ in 0..self.e {
            out += (x % p + y % p) % p * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p as u64;
        let (mut x, mut out, mut place) = (a.0 as u64, 0u64, 1u64);
        for _ in 0..self.e {
            out += (p - x % p) % p * place;
            x /= p;
            place *= p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        match &self.tables {
            Some(t) => {
                let s = t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64;
                FieldElement(t.exp[(s % (self.order - 1)) as usize])
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let x: Vec<u64> = self.coeffs(a).iter().map(|&c| c as u64).collect();
        let y: Vec<u64> = self.coeffs(b).iter().map(|&c| c as u64).collect();
        let r = poly::mul_mod(&poly::trim(x), &poly::trim(y), &m, self.p as u64);
        let v = r.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c);
        FieldElement(v as u32)
    }

    fn pow_slow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^k` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return a;
        }
        if let Some(t) = &self.tables {
            let s = t.log[a.0 as usize] as u128 * (k % (self.order - 1)) as u128 % (self.order - 1) as u128;
            return FieldElement(t.exp[s as usize]);
        }
        let mut acc = self.one();
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroLog);
        }
        Ok(self.pow(a, self.order - 2))
    }

    /// `ω^k`.
    pub fn exp(&self, k: u64) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.exp[(k % (self.order - 1)) as usize]),
            None => self.pow(self.omega, k),
        }
    }

    /// The `k in [0, p^e − 2]` with `ω^k = a`.
    pub fn discrete_log(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroLog);
        }
        if let Some(t) = &self.tables {
            return Ok(t.log[a.0 as usize] as u64);
        }
        // baby-step giant-step
        let n = self.order - 1;
        let m = (n as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(m as usize);
        let mut x = self.one();
        for j in 0..m {
            baby.entry(x.0).or_insert(j);
            x = self.mul(x, self.omega);
        }
        let giant = self.inv(self.pow(self.omega, m))?;
        let mut y = a;
        for i in 0..=m {
            if let Some(&j) = baby.get(&y.0) {
                return Ok((i * m + j) % n);
            }
            y = self.mul(y, giant);
        }
        Err(Error::Internal("discrete logarithm not found".into()))
    }

    /// `a^(q^i)` for a subfield size `q = p^f` with `f | e`.
    pub fn frobenius_power(&self, a: FieldElement, i: u64, q: u64) -> Result<FieldElement> {
        let f = match prime_power(q) {
            Some((p, f)) if p == self.p as u64 && self.e % f == 0 => f,
            _ => return Err(Error::BadSubfield(q)),
        };
        // a^(q^i) depends only on i mod e/f
        let i = i % (self.e / f) as u64;
        if a.0 == 0 {
            return Ok(a);
        }
        Ok(self.pow(a, pow_mod(q, i, self.order - 1)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Result<u64> {
        let n = self.order - 1;
        let l = self.discrete_log(a)?;
        Ok(n / gcd(n, l))
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        a.0 == 0 || self.p == 2 || self.discrete_log(a).map(|l| l % 2 == 0).unwrap_or(false)
    }

    /// Renders `a` as a polynomial in `t`, e.g. `t^2+1`.
    pub fn format(&self, a: FieldElement) -> String {
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// `{p, e, modulus, omega}` with coefficient lists, constant term first.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "e": self.e,
            "modulus": self.modulus,
            "omega": self.coeffs(self.omega),
        })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
