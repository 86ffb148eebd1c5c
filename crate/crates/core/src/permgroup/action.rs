use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::johnson::codec;

/// The set a point permutation acts on. Labels are `0..size()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionDomain {
    /// The points themselves.
    Points { n: usize },
    /// k-subsets, labelled by co-lex rank.
    KSubsets { n: usize, k: usize },
    /// Unordered pairs of complementary halves of an even `n`-set, labelled by
    /// the co-lex rank of the half containing point 0 (with 0 removed).
    Equipartitions { n: usize },
    /// The group acts on `0..labels.len()` directly; labels only name the points.
    Explicit { labels: Vec<String> },
}

impl ActionDomain {
    pub fn size(&self) -> u64 {
        match self {
            ActionDomain::Points { n } => *n as u64,
            ActionDomain::KSubsets { n, k } => codec::binomial(*n as u64, *k as u64),
            ActionDomain::Equipartitions { n } => {
                if *n == 0 {
                    0
                } else {
                    codec::binomial(*n as u64 - 1, *n as u64 / 2 - 1)
                }
            }
            ActionDomain::Explicit { labels } => labels.len() as u64,
        }
    }

    /// Number of points the acting permutations must have.
    pub fn point_degree(&self) -> usize {
        match self {
            ActionDomain::Points { n }
            | ActionDomain::KSubsets { n, .. }
            | ActionDomain::Equipartitions { n } => *n,
            ActionDomain::Explicit { labels } => labels.len(),
        }
    }

    pub(crate) fn check(&self, p: &Permutation) -> Result<()> {
        if let ActionDomain::Equipartitions { n } = self {
            if n % 2 != 0 {
                return Err(Error::OutOfRange(format!("equipartitions need an even ground set, got {n}")));
            }
        }
        if let ActionDomain::KSubsets { n, k } = self {
            if k > n {
                return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
            }
        }
        if p.degree() != self.point_degree() {
            return Err(Error::DegreeMismatch(p.degree(), self.point_degree()));
        }
        Ok(())
    }

    /// Image of `label` under `p`. Assumes [`ActionDomain::check`] passed.
    pub fn act(&self, p: &Permutation, label: u64) -> u64 {
        match self {
            ActionDomain::Points { .. } | ActionDomain::Explicit { .. } => p.apply(label as u32) as u64,
            ActionDomain::KSubsets { n, k } => {
                if *n <= 64 {
                    let m = codec::unrank_mask(label, *k);
                    codec::rank_mask(map_mask(p, m))
                } else {
                    let mut buf = Vec::with_capacity(*k);
                    codec::unrank_sorted(label, *k, &mut buf);
                    for x in buf.iter_mut() {
                        *x = p.apply(*x);
                    }
                    buf.sort_unstable();
                    codec::rank_sorted(&buf)
                }
            }
            ActionDomain::Equipartitions { n } => {
                let half = equipartition_mask(*n, label);
                let image = map_mask(p, half);
                equipartition_label(*n, image)
            }
        }
    }

    /// Human-readable, 1-based rendering of a label.
    pub fn render(&self, label: u64) -> String {
        match self {
            ActionDomain::Points { .. } => (label + 1).to_string(),
            ActionDomain::KSubsets { n, k } => {
                let mut buf = Vec::new();
                if *n <= 64 {
                    let m = codec::unrank_mask(label, *k);
                    buf = (0..64).filter(|i| m >> i & 1 == 1).collect();
                } else {
                    codec::unrank_sorted(label, *k, &mut buf);
                }
                let parts: Vec<String> = buf.iter().map(|x| (x + 1).to_string()).collect();
                format!("{{{}}}", parts.join(","))
            }
            ActionDomain::Equipartitions { n } => {
                let half = equipartition_mask(*n, label);
                let full = if *n == 64 { u64::MAX } else { (1u64 << n) - 1 };
                format!("{}|{}", render_mask(half), render_mask(full & !half))
            }
            ActionDomain::Explicit { labels } => labels[label as usize].clone(),
        }
    }
}

fn render_mask(m: u64) -> String {
    let parts: Vec<String> = (0..64).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Image of a bitmask subset under a point permutation.
#[inline]
pub fn map_mask(p: &Permutation, mut bits: u64) -> u64 {
    let mut out = 0u64;
    while bits != 0 {
        let i = bits.trailing_zeros();
        out |= 1u64 << p.apply(i);
        bits &= bits - 1;
    }
    out
}

/// The half (containing point 0) of the equipartition with this label.
pub fn equipartition_mask(n: usize, label: u64) -> u64 {
    let rest = codec::unrank_mask(label, n / 2 - 1);
    (rest << 1) | 1
}

/// Label of the equipartition having `half` as one of its parts.
pub fn equipartition_label(n: usize, half: u64) -> u64 {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let key = if half & 1 == 1 { half } else { full & !half };
    codec::rank_mask(key >> 1)
}
