//! Exhaustive enumerators for both sides of the identity `s(n) = t(n)`.
//!
//! Every enumerator returns its members in a fixed order, so repeated runs and
//! concurrent callers always see the same sequence. Plain partitions come out
//! in lexicographically descending order; two-color partitions in
//! [`TwoColorPartition::listing_cmp`] order.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::QueryError;
use crate::partition::{Partition, TwoColorPartition};

/// Visits every partition of `total` with parts at most `max_part` and at most
/// `max_len` parts, lexicographically descending.
pub fn for_each_partition<F>(total: u64, max_part: u64, max_len: usize, mut visit: F)
where
    F: FnMut(&[u64]),
{
    fn rec<F: FnMut(&[u64])>(rest: u64, cap: u64, slots: usize, buf: &mut Vec<u64>, visit: &mut F) {
        if rest == 0 {
            visit(buf);
            return;
        }
        if slots == 0 || cap.saturating_mul(slots as u64) < rest {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            buf.push(part);
            rec(rest - part, part, slots - 1, buf, visit);
            buf.pop();
        }
    }
    rec(total, max_part, max_len, &mut Vec::new(), &mut visit);
}

/// Partitions of `total` with parts at most `max_part` and at most `max_len` parts.
pub fn partitions_bounded(total: u64, max_part: u64, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(total, max_part, max_len, |parts| {
        out.push(Partition::from_vec_unchecked(parts.to_vec()))
    });
    out
}

/// All partitions of `total`.
pub fn partitions(total: u64) -> Vec<Partition> {
    partitions_bounded(total, total, total as usize)
}

/// Number of partitions of `total`, counted by walking the enumeration.
pub fn count_partitions(total: u64) -> BigUint {
    let mut count = BigUint::default();
    for_each_partition(total, total, total as usize, |_| count += 1u32);
    count
}

/// Visits every partition whose parts in positions 1, 3, 5, ... sum to `n`,
/// lexicographically descending.
///
/// Parts are chosen in (odd, even) pairs. The odd-position part is bounded by
/// the remaining weight and the previous part; the even-position part that
/// follows it lies between 1 and the odd part, or is absent when the
/// partition ends there. Only odd positions consume weight, so the recursion
/// depth is at most `n` pairs.
pub fn for_each_schmidt<F>(n: u64, mut visit: F)
where
    F: FnMut(&[u64]),
{
    fn rec<F: FnMut(&[u64])>(rest: u64, cap: u64, buf: &mut Vec<u64>, visit: &mut F) {
        for odd in (1..=cap.min(rest)).rev() {
            let after = rest - odd;
            buf.push(odd);
            for even in (1..=odd).rev() {
                buf.push(even);
                if after == 0 {
                    visit(buf);
                } else {
                    rec(after, even, buf, visit);
                }
                buf.pop();
            }
            if after == 0 {
                visit(buf);
            }
            buf.pop();
        }
    }
    if n == 0 {
        visit(&[]);
        return;
    }
    rec(n, n, &mut Vec::new(), &mut visit);
}

/// The set S(n): partitions with alternating sum `n`.
pub fn enumerate_schmidt(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_schmidt(n, |parts| {
        out.push(Partition::from_vec_unchecked(parts.to_vec()))
    });
    out
}

/// s(n) = |S(n)|.
pub fn count_schmidt(n: u64) -> BigUint {
    let mut count = BigUint::default();
    for_each_schmidt(n, |_| count += 1u32);
    count
}

/// The set T(n): pairs (red, green) of partitions of total weight `n`.
pub fn enumerate_two_color(n: u64) -> Vec<TwoColorPartition> {
    let by_weight: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    for w in 0..=n {
        for red in &by_weight[w as usize] {
            for green in &by_weight[(n - w) as usize] {
                out.push(TwoColorPartition::new(red.clone(), green.clone()));
            }
        }
    }
    out.sort_by(TwoColorPartition::listing_cmp);
    out
}

/// t(n) = |T(n)|, the size of the (red weight, green weight) product enumeration.
pub fn count_two_color(n: u64) -> BigUint {
    let counts: Vec<BigUint> = (0..=n).map(count_partitions).collect();
    (0..=n as usize)
        .map(|w| &counts[w] * &counts[n as usize - w])
        .sum()
}

/// The statistics (n, r, l, p, q) of the four-variable refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RefinedQuery {
    pub n: u64,
    pub r: usize,
    pub l: usize,
    pub p: u64,
    pub q: u64,
}

impl RefinedQuery {
    pub fn new(n: u64, r: usize, l: usize, p: u64, q: u64) -> Result<Self, QueryError> {
        if r == 0 || l == 0 || p == 0 || q == 0 {
            return Err(QueryError { r, l, p, q });
        }
        Ok(RefinedQuery { n, r, l, p, q })
    }

    /// Whether a two-color partition has exactly these statistics.
    pub fn matches(&self, lambda: &TwoColorPartition) -> bool {
        lambda.weight() == self.n
            && lambda.r() == self.r
            && lambda.l() == self.l
            && lambda.red.largest() <= self.p
            && lambda.green.largest() <= self.q
    }

    /// Length 2·max{r,l} of the fixed-length vectors on the other side.
    pub fn vector_len(&self) -> usize {
        2 * self.r.max(self.l)
    }
}

/// A fixed-length weakly decreasing vector of nonnegative entries; trailing
/// zeros are significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundedVector(Vec<u64>);

impl BoundedVector {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn alternating_sum(&self) -> u64 {
        self.0.iter().step_by(2).sum()
    }
}

/// Visits every partition with exactly `len` parts, all at most `max_part`.
fn for_each_exact_len<F: FnMut(&[u64])>(total: u64, len: usize, max_part: u64, mut visit: F) {
    if len == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    // Subtract one from each part: partitions of total - len with at most len
    // parts bounded by max_part - 1.
    let Some(reduced) = total.checked_sub(len as u64) else {
        return;
    };
    for_each_partition(reduced, max_part - 1, len, |parts| {
        let mut full = vec![1u64; len];
        for (slot, &extra) in full.iter_mut().zip(parts) {
            *slot += extra;
        }
        visit(&full);
    });
}

/// Two-color partitions of weight n with exactly r red parts no larger than p
/// and exactly l green parts no larger than q.
pub fn enumerate_two_color_refined(rq: &RefinedQuery) -> Vec<TwoColorPartition> {
    let mut out = Vec::new();
    for w in 0..=rq.n {
        let mut reds = Vec::new();
        for_each_exact_len(w, rq.r, rq.p, |parts| {
            reds.push(Partition::from_vec_unchecked(parts.to_vec()))
        });
        if reds.is_empty() {
            continue;
        }
        let mut greens = Vec::new();
        for_each_exact_len(rq.n - w, rq.l, rq.q, |parts| {
            greens.push(Partition::from_vec_unchecked(parts.to_vec()))
        });
        for red in &reds {
            for green in &greens {
                out.push(TwoColorPartition::new(red.clone(), green.clone()));
            }
        }
    }
    out.sort_by(TwoColorPartition::listing_cmp);
    out
}

/// Vectors (a_1, ..., a_{2max{r,l}}) with p+q ≥ a_1 ≥ ... ≥ a_{2max{r,l}} ≥ 0
/// and a_1 + a_3 + ... = n, read literally as fixed-length vectors.
pub fn enumerate_schmidt_refined_literal(rq: &RefinedQuery) -> Vec<BoundedVector> {
    fn rec(
        pos: usize,
        len: usize,
        rest: u64,
        cap: u64,
        buf: &mut Vec<u64>,
        out: &mut Vec<BoundedVector>,
    ) {
        if pos == len {
            if rest == 0 {
                out.push(BoundedVector(buf.clone()));
            }
            return;
        }
        let odd_slots_left = ((len - pos) as u64).div_ceil(2);
        if cap.saturating_mul(odd_slots_left) < rest {
            return;
        }
        let is_odd = pos.is_multiple_of(2);
        let hi = if is_odd { cap.min(rest) } else { cap };
        for a in (0..=hi).rev() {
            buf.push(a);
            rec(
                pos + 1,
                len,
                if is_odd { rest - a } else { rest },
                a,
                buf,
                out,
            );
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        rq.vector_len(),
        rq.n,
        rq.p + rq.q,
        &mut Vec::new(),
        &mut out,
    );
    out
}
