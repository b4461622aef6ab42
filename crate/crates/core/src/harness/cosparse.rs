//! Graphs whose complement has few edges.

use crate::error::{Error, Result};
use crate::graph::{complete, pair_at, Graph, MAX_VERTICES};

pub(crate) fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c·(n−i) is divisible by i+1 after the multiplication
        c = c.checked_mul(n - i)? / (i + 1);
    }
    Some(c)
}

/// Every graph on `n` labelled vertices whose complement has at most
/// `k_max` edges.
///
/// The complement edge sets are listed by size, and within one size as
/// combinations of pair slots in lexicographic order; slot `i` is the `i`-th
/// pair `u < v` in row-major order. Ranks index this list, so any contiguous
/// range can be visited independently.
#[derive(Clone, Debug)]
pub struct CosparseEnumerator {
    n: usize,
    k_max: usize,
    slots: usize,
    /// `offsets[j]` is the rank of the first set of size `j`.
    offsets: Vec<u64>,
    total: u64,
}

pub fn enumerate_cosparse(n: usize, k_max: usize) -> Result<CosparseEnumerator> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity { n, cap: MAX_VERTICES });
    }
    let slots = n * n.saturating_sub(1) / 2;
    if k_max > slots {
        return Err(Error::param(format!("k_max = {k_max} exceeds the {slots} vertex pairs")));
    }
    let mut offsets = Vec::with_capacity(k_max + 2);
    let mut total: u64 = 0;
    for j in 0..=k_max {
        offsets.push(total);
        let c = binomial(slots as u128, j as u128)
            .and_then(|c| u64::try_from(c).ok())
            .and_then(|c| total.checked_add(c))
            .ok_or_else(|| Error::param(format!("enumeration of n={n}, k={k_max} overflows 64-bit ranks")))?;
        total = c;
    }
    offsets.push(total);
    Ok(CosparseEnumerator {
        n,
        k_max,
        slots,
        offsets,
        total,
    })
}

impl CosparseEnumerator {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `Σ_{j ≤ k_max} C(C(n,2), j)`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Slot indices of the complement edge set at `rank`.
    pub fn unrank_slots(&self, rank: u64) -> Option<Vec<usize>> {
        if rank >= self.total {
            return None;
        }
        let j = self.offsets.partition_point(|&o| o <= rank) - 1;
        let mut r = (rank - self.offsets[j]) as u128;
        let mut out = Vec::with_capacity(j);
        let mut x = 0usize;
        for i in 0..j {
            loop {
                let cnt = binomial((self.slots - x - 1) as u128, (j - i - 1) as u128).expect("fits: bounded by total");
                if r < cnt {
                    out.push(x);
                    x += 1;
                    break;
                }
                r -= cnt;
                x += 1;
            }
        }
        Some(out)
    }

    pub fn graph_of(&self, slots: &[usize]) -> Graph {
        let mut g = complete(self.n).expect("order checked");
        for &s in slots {
            let (u, v) = pair_at(self.n, s);
            g.toggle_edge_unchecked(u, v);
        }
        g
    }

    pub fn unrank(&self, rank: u64) -> Option<Graph> {
        self.unrank_slots(rank).map(|s| self.graph_of(&s))
    }

    /// Graphs with ranks in `start..end`.
    pub fn range(&self, start: u64, end: u64) -> CosparseIter<'_> {
        let end = end.min(self.total);
        let comb = if start < end { self.unrank_slots(start) } else { None };
        CosparseIter {
            e: self,
            comb: comb.unwrap_or_default(),
            next: start,
            end,
            started: false,
        }
    }

    pub fn iter(&self) -> CosparseIter<'_> {
        self.range(0, self.total)
    }
}

impl<'a> IntoIterator for &'a CosparseEnumerator {
    type Item = Graph;
    type IntoIter = CosparseIter<'a>;
    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

pub struct CosparseIter<'a> {
    e: &'a CosparseEnumerator,
    comb: Vec<usize>,
    next: u64,
    end: u64,
    started: bool,
}

impl CosparseIter<'_> {
    /// Like `next`, also yielding the rank and the complement slots.
    pub fn next_with_slots(&mut self) -> Option<(u64, &[usize])> {
        if self.next >= self.end {
            return None;
        }
        if self.started {
            self.advance();
        }
        self.started = true;
        let rank = self.next;
        self.next += 1;
        Some((rank, &self.comb))
    }

    fn advance(&mut self) {
        let j = self.comb.len();
        let m = self.e.slots;
        match (0..j).rev().find(|&i| self.comb[i] < m - j + i) {
            Some(i) => {
                self.comb[i] += 1;
                for k in i + 1..j {
                    self.comb[k] = self.comb[k - 1] + 1;
                }
            }
            None => self.comb = (0..j + 1).collect(),
        }
    }
}

impl Iterator for CosparseIter<'_> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let e = self.e;
        self.next_with_slots().map(|(_, s)| e.graph_of(s))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}
