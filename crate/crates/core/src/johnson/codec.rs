//! Co-lexicographic ranking of k-subsets.
//!
//! The rank of a sorted subset `c_0 < c_1 < ... < c_{k-1}` is `Σ C(c_i, i+1)`.
//! Rank 0 is `{0, .., k-1}` and ranks increase in co-lex order.

use crate::error::{Error, Result};

/// Binomial coefficient, panicking on overflow of `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        assert!(acc <= u64::MAX as u128, "binomial C({n},{k}) overflows u64");
    }
    acc as u64
}

/// Rank of a strictly increasing list of points.
pub fn rank_sorted(points: &[u32]) -> u64 {
    points
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c as u64, i as u64 + 1))
        .sum()
}

/// Inverse of [`rank_sorted`].
pub fn unrank_sorted(mut rank: u64, k: usize, out: &mut Vec<u32>) {
    out.clear();
    out.resize(k, 0);
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank; c >= i - 1
        let mut c = (i - 1) as u64;
        while binomial(c + 1, i as u64) <= rank {
            c += 1;
        }
        rank -= binomial(c, i as u64);
        out[i - 1] = c as u32;
    }
}

/// Rank of a k-subset given as a bitmask.
pub fn rank_mask(mut bits: u64) -> u64 {
    let mut r = 0;
    let mut i = 1;
    while bits != 0 {
        let c = bits.trailing_zeros() as u64;
        r += binomial(c, i);
        i += 1;
        bits &= bits - 1;
    }
    r
}

/// Inverse of [`rank_mask`].
pub fn unrank_mask(mut rank: u64, k: usize) -> u64 {
    let mut bits = 0u64;
    for i in (1..=k as u64).rev() {
        let mut c = i - 1;
        while binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        bits |= 1 << c;
    }
    bits
}

/// Checked variant of [`unrank_mask`] for an `n`-point ground set.
pub fn unrank_checked(n: usize, k: usize, rank: u64) -> Result<u64> {
    if n > 64 || k > n {
        return Err(Error::OutOfRange(format!("subset codec needs k <= n <= 64, got n={n}, k={k}")));
    }
    let total = binomial(n as u64, k as u64);
    if rank >= total {
        return Err(Error::OutOfRange(format!("rank {rank} >= C({n},{k}) = {total}")));
    }
    Ok(unrank_mask(rank, k))
}

/// Next k-subset mask in co-lex order (Gosper's hack), or `None` past the last
/// subset of an `n`-set.
pub fn next_mask(bits: u64, n: usize) -> Option<u64> {
    if bits == 0 {
        return None;
    }
    let c = bits & bits.wrapping_neg();
    let r = bits.wrapping_add(c);
    if r == 0 {
        return None;
    }
    let next = (((r ^ bits) >> 2) / c) | r;
    if n < 64 && next >> n != 0 {
        None
    } else {
        Some(next)
    }
}

/// All k-subset masks of an `n`-set in rank order.
pub fn masks(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let first = if k == 0 {
        0
    } else if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    };
    let mut cur = if k <= n { Some(first) } else { None };
    let mut done_empty = false;
    std::iter::from_fn(move || {
        if k == 0 {
            if done_empty {
                return None;
            }
            done_empty = true;
            return Some(0);
        }
        let out = cur?;
        cur = next_mask(out, n);
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_zero_is_initial_segment() {
        assert_eq!(unrank_mask(0, 2), 0b11);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(343, 2), 58_653);
    }

    #[test]
    fn round_trip_ten_five() {
        let all: Vec<u64> = masks(10, 5).collect();
        assert_eq!(all.len(), 252);
        for (r, &m) in all.iter().enumerate() {
            assert_eq!(rank_mask(m), r as u64);
            assert_eq!(unrank_mask(r as u64, 5), m);
        }
    }

    #[test]
    fn sorted_and_mask_agree() {
        let mut buf = Vec::new();
        for r in 0..binomial(12, 4) {
            unrank_sorted(r, 4, &mut buf);
            let m = buf.iter().fold(0u64, |a, &c| a | 1 << c);
            assert_eq!(m, unrank_mask(r, 4));
            assert_eq!(rank_sorted(&buf), r);
        }
    }

    #[test]
    fn out_of_range_rank() {
        assert!(unrank_checked(5, 2, 10).is_err());
        assert!(unrank_checked(65, 2, 0).is_err());
    }

    #[test]
    fn empty_and_full() {
        assert_eq!(masks(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks(4, 4).collect::<Vec<_>>(), vec![0b1111]);
        assert_eq!(masks(3, 4).count(), 0);
    }
}
