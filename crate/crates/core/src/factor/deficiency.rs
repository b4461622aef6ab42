//! Deficiency `η(S,T)` and the criterion decider.

use super::{DeficiencyCertificate, FactorResult, FactorSpec, GeneralFactorSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use rayon::prelude::*;

pub const DEFAULT_LOVASZ_CAP: usize = 14;

/// Below this order the scan stays on the calling thread.
const PARALLEL_FROM: usize = 11;

fn disjoint(s: VertexSet, t: VertexSet, n: usize) -> Result<()> {
    if !s.is_disjoint(t) {
        return Err(Error::Precondition("S and T must be disjoint".into()));
    }
    if !s.union(t).difference(VertexSet::full(n)).is_empty() {
        return Err(Error::Precondition("S and T must be vertex sets of the graph".into()));
    }
    Ok(())
}

/// Components `C` of `G − S − T`, each with `e(V(C), T)`.
fn components_with_t_edges(g: &Graph, s: VertexSet, t: VertexSet) -> Vec<(VertexSet, usize)> {
    let rest = g.vertices().difference(s).difference(t);
    g.components_within(rest)
        .into_iter()
        .map(|c| (c, g.e_between_unchecked(c, t)))
        .collect()
}

/// Components `C` of `G − S − T` with `a|V(C)| + e(V(C),T)` odd.
pub fn q_count(g: &Graph, s: VertexSet, t: VertexSet, a: usize) -> Result<usize> {
    disjoint(s, t, g.order())?;
    Ok(components_with_t_edges(g, s, t)
        .into_iter()
        .filter(|(c, e)| (a * c.len() + e) % 2 == 1)
        .count())
}

/// `b|S| − a|T| + Σ_{x∈T} d_{G−S}(x) − q(S,T)`.
pub fn eta_parity(g: &Graph, s: VertexSet, t: VertexSet, spec: FactorSpec) -> Result<i64> {
    let q = q_count(g, s, t, spec.a)? as i64;
    let deg: i64 = t.iter().map(|x| g.degree_in_deleted(s, x) as i64).sum();
    Ok(spec.b as i64 * s.len() as i64 - spec.a as i64 * t.len() as i64 + deg - q)
}

/// `f(S) − g(T) + Σ_{x∈T} d_{G−S}(x) − q`, where `q` is the parity count
/// (flag set) or the count restricted to components on which `g = f`.
pub fn eta_general(g: &Graph, s: VertexSet, t: VertexSet, spec: &GeneralFactorSpec) -> Result<i64> {
    if spec.order() != g.order() {
        return Err(Error::param("bounds must have one entry per vertex"));
    }
    disjoint(s, t, g.order())?;
    let (lo, hi) = (spec.g(), spec.f());
    let q = components_with_t_edges(g, s, t)
        .into_iter()
        .filter(|(c, e)| {
            if spec.parity() {
                (c.iter().map(|v| lo[v]).sum::<i64>() + *e as i64) % 2 != 0
            } else {
                c.iter().all(|v| lo[v] == hi[v])
                    && (c.iter().map(|v| hi[v]).sum::<i64>() + *e as i64) % 2 != 0
            }
        })
        .count() as i64;
    let f_s: i64 = s.iter().map(|v| hi[v]).sum();
    let g_t: i64 = t.iter().map(|v| lo[v]).sum();
    let deg: i64 = t.iter().map(|x| g.degree_in_deleted(s, x) as i64).sum();
    Ok(f_s - g_t + deg - q)
}

struct Scanner<'a> {
    rows: &'a [VertexSet],
    full: u128,
    a: i64,
    b: i64,
}

impl Scanner<'_> {
    fn flood(&self, root: usize, within: u128) -> u128 {
        let mut comp = 1u128 << root;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                next |= self.rows[f.trailing_zeros() as usize].0;
                f &= f - 1;
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    fn q(&self, rest: u128, t: u128) -> i64 {
        let mut q = 0;
        let mut r = rest;
        while r != 0 {
            let comp = self.flood(r.trailing_zeros() as usize, r);
            r &= !comp;
            let mut parity = self.a * comp.count_ones() as i64;
            let mut c = comp;
            while c != 0 {
                parity += (self.rows[c.trailing_zeros() as usize].0 & t).count_ones() as i64;
                c &= c - 1;
            }
            q += parity & 1;
        }
        q
    }

    /// Least `T` (as a mask) making `η(S,T) ≤ −1` for this `S`.
    fn scan(&self, s: u128) -> Option<DeficiencyCertificate> {
        let rest = self.full & !s;
        let mut gain = [0i64; 128];
        let mut r = rest;
        while r != 0 {
            let x = r.trailing_zeros() as usize;
            gain[x] = (self.rows[x].0 & rest).count_ones() as i64 - self.a;
            r &= r - 1;
        }
        let bs = self.b * s.count_ones() as i64;
        let mut t = 0u128;
        loop {
            let mut base = bs;
            let mut tt = t;
            while tt != 0 {
                base += gain[tt.trailing_zeros() as usize];
                tt &= tt - 1;
            }
            let remaining = rest & !t;
            // q never exceeds the number of leftover vertices
            if base - (remaining.count_ones() as i64) < 0 {
                let q = self.q(remaining, t);
                if base - q <= -1 {
                    return Some(DeficiencyCertificate {
                        s: VertexSet(s),
                        t: VertexSet(t),
                        eta: base - q,
                        q,
                    });
                }
            }
            if t == rest {
                return None;
            }
            t = (t | !rest).wrapping_add(1) & rest;
        }
    }
}

/// Decides by the deficiency criterion over all `3ⁿ` disjoint pairs.
///
/// Pairs are visited with `S` ascending as a bit mask, then `T` ascending
/// among subsets of `V − S`; the first pair with `η ≤ −1` is returned, so
/// certificates are reproducible. When `na` is odd the empty pair already
/// has `η = −q(∅,∅) ≤ −1` and is returned without a scan. A `yes` answer
/// carries no edge set.
pub fn decide_lovasz(g: &Graph, spec: FactorSpec, cap: usize) -> Result<FactorResult> {
    if cap > DEFAULT_LOVASZ_CAP {
        log::warn!("deficiency scan cap raised to {cap}; cost grows as 3^n");
    }
    let n = g.order();
    if n > cap {
        return Err(Error::Capacity { n, cap });
    }
    let empty = VertexSet::EMPTY;
    if spec.parity_obstructed(n) {
        let q = q_count(g, empty, empty, spec.a)? as i64;
        return Ok(FactorResult::no(Some(DeficiencyCertificate {
            s: empty,
            t: empty,
            eta: -q,
            q,
        })));
    }
    let scanner = Scanner {
        rows: g.rows(),
        full: g.vertices().0,
        a: spec.a as i64,
        b: spec.b as i64,
    };
    let masks = 0..1u128 << n;
    let found = if n >= PARALLEL_FROM {
        (0..1u64 << n)
            .into_par_iter()
            .find_map_first(|s| scanner.scan(s as u128))
    } else {
        masks.into_iter().find_map(|s| scanner.scan(s))
    };
    Ok(match found {
        Some(cert) => FactorResult::no(Some(cert)),
        None => FactorResult::yes(None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::FactorDecision;
    use crate::graph::{complete, cycle, h_extremal, random_graph, RandomModel};
    use rand::{Rng, SeedableRng};
    use rand_xoshiro::SplitMix64;

    fn spec(a: usize, b: usize) -> FactorSpec {
        FactorSpec::new(a, b).unwrap()
    }

    #[test]
    fn q_examples() {
        for (n, a) in [(8, 1), (10, 3), (6, 2), (10, 4)] {
            let h = h_extremal(n, a).unwrap();
            let t = VertexSet::singleton(a - 1);
            assert_eq!(q_count(&h, VertexSet::EMPTY, t, a).unwrap(), 1);
        }
        let e = VertexSet::EMPTY;
        assert_eq!(q_count(&cycle(5).unwrap(), e, e, 1).unwrap(), 1);
        assert_eq!(q_count(&complete(4).unwrap(), e, e, 1).unwrap(), 0);
        let overlap = VertexSet::singleton(0);
        assert!(q_count(&complete(4).unwrap(), overlap, overlap, 1).is_err());
    }

    #[test]
    fn eta_examples() {
        for (n, a, b) in [(8, 1, 1), (8, 1, 3), (6, 2, 2), (9, 2, 4), (10, 3, 3)] {
            let h = h_extremal(n, a).unwrap();
            let t = VertexSet::singleton(a - 1);
            assert_eq!(eta_parity(&h, VertexSet::EMPTY, t, spec(a, b)).unwrap(), -2);
        }
        let k4 = complete(4).unwrap();
        assert_eq!(eta_parity(&k4, VertexSet::EMPTY, k4.vertices(), spec(1, 1)).unwrap(), 8);
        let c7 = cycle(7).unwrap();
        let e = VertexSet::EMPTY;
        assert_eq!(eta_parity(&c7, e, e, spec(1, 1)).unwrap(), -1);
    }

    #[test]
    fn general_matches_parity_on_uniform_bounds() {
        let mut rng = SplitMix64::seed_from_u64(7);
        let specs = [spec(1, 1), spec(1, 3), spec(2, 2), spec(2, 4), spec(3, 3)];
        for i in 0..200u64 {
            let n = rng.random_range(1..=12);
            let g = random_graph(n, RandomModel::Probability(0.5), i).unwrap();
            let mut s = VertexSet::EMPTY;
            let mut t = VertexSet::EMPTY;
            for v in 0..n {
                match rng.random_range(0..3) {
                    0 => s.insert(v),
                    1 => t.insert(v),
                    _ => {}
                }
            }
            let sp = specs[i as usize % specs.len()];
            let gen = GeneralFactorSpec::uniform(n, sp);
            assert_eq!(eta_general(&g, s, t, &gen).unwrap(), eta_parity(&g, s, t, sp).unwrap());
        }
    }

    #[test]
    fn general_non_parity_count() {
        let g = crate::graph::path(5).unwrap();
        let e = VertexSet::EMPTY;
        // g < f everywhere: no component counts
        let loose = GeneralFactorSpec::new(vec![0; 5], vec![1; 5], false).unwrap();
        assert_eq!(eta_general(&g, e, e, &loose).unwrap(), 0);
        let k2 = complete(2).unwrap();
        let tight = GeneralFactorSpec::new(vec![1; 2], vec![1; 2], false).unwrap();
        assert_eq!(eta_general(&k2, e, e, &tight).unwrap(), 0);
        let k3 = complete(3).unwrap();
        let tight = GeneralFactorSpec::new(vec![1; 3], vec![1; 3], false).unwrap();
        assert_eq!(eta_general(&k3, e, e, &tight).unwrap(), -1);
    }

    /// Existence of a `(g,f)`-factor or `(g,f)`-parity factor by brute force.
    fn has_general_factor(g: &Graph, sp: &GeneralFactorSpec) -> bool {
        let edges = g.edges();
        (0..1u32 << edges.len()).any(|mask| {
            let mut d = vec![0i64; g.order()];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d[u] += 1;
                    d[v] += 1;
                }
            }
            (0..g.order()).all(|v| {
                sp.g()[v] <= d[v] && d[v] <= sp.f()[v] && (!sp.parity() || (d[v] - sp.f()[v]) % 2 == 0)
            })
        })
    }

    fn criterion_holds(g: &Graph, sp: &GeneralFactorSpec) -> bool {
        let n = g.order();
        let full = g.vertices().0;
        (0..1u128 << n).all(|s| {
            let rest = full & !s;
            let mut t = 0u128;
            loop {
                if eta_general(g, VertexSet(s), VertexSet(t), sp).unwrap() < 0 {
                    return false;
                }
                if t == rest {
                    return true;
                }
                t = (t | !rest).wrapping_add(1) & rest;
            }
        })
    }

    #[test]
    fn general_criteria_match_brute_force() {
        let mut rng = SplitMix64::seed_from_u64(11);
        for i in 0..300u64 {
            let n = rng.random_range(1..=6);
            let g = random_graph(n, RandomModel::Probability(0.55), 1000 + i).unwrap();
            let parity = i % 2 == 0;
            let mut lo = Vec::new();
            let mut hi = Vec::new();
            for _ in 0..n {
                let l = rng.random_range(0..3i64);
                let width = if parity { 2 * rng.random_range(0..2i64) } else { rng.random_range(0..3i64) };
                lo.push(l);
                hi.push(l + width);
            }
            let sp = GeneralFactorSpec::new(lo, hi, parity).unwrap();
            assert_eq!(has_general_factor(&g, &sp), criterion_holds(&g, &sp), "case {i}");
        }
    }

    #[test]
    fn lovasz_examples() {
        let c5 = decide_lovasz(&cycle(5).unwrap(), spec(1, 1), 14).unwrap();
        assert_eq!(c5.decision, FactorDecision::No);
        let cert = c5.certificate.unwrap();
        assert!(cert.s.is_empty() && cert.t.is_empty());
        assert_eq!(cert.eta, -1);
        let h = h_extremal(8, 1).unwrap();
        let r = decide_lovasz(&h, spec(1, 3), 14).unwrap();
        assert_eq!(r.decision, FactorDecision::No);
        assert!(r.certificate.unwrap().verify(&h, spec(1, 3)));
        assert!(decide_lovasz(&complete(4).unwrap(), spec(1, 1), 14).unwrap().is_yes());
        assert!(decide_lovasz(&complete(15).unwrap(), spec(1, 1), 14).unwrap_err().is_capacity());
    }

    #[test]
    fn lovasz_parallel_path_is_deterministic() {
        let g = h_extremal(12, 3).unwrap();
        let r = decide_lovasz(&g, spec(3, 3), 14).unwrap();
        let cert = r.certificate.unwrap();
        assert!(cert.verify(&g, spec(3, 3)));
        assert_eq!(decide_lovasz(&g, spec(3, 3), 14).unwrap().certificate.unwrap(), cert);
    }
}
