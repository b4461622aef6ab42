use super::{h_extremal, Graph, VertexSet};

/// Decides whether `g ≅ H_{n,a}` with `n = |V(g)|`.
///
/// Every vertex of degree `a-1` is tried as the image of the isolated `K_1`;
/// the vertices of degree `n-1` are mapped onto the `K_{a-1}` and the rest
/// onto `K_{n-a}`, after which the adjacency is compared with the canonical
/// construction vertex by vertex.
pub fn recognize_h_extremal(g: &Graph, a: usize) -> bool {
    let n = g.order();
    if a < 1 || n < a + 1 {
        return false;
    }
    let degrees = g.degrees();
    let mut profile = [0usize; 3];
    for &d in &degrees {
        if d == a - 1 {
            profile[0] += 1;
        }
        if d == n - 1 {
            profile[1] += 1;
        }
        if d == n - 2 {
            profile[2] += 1;
        }
    }
    // cheap rejection on edge count before any assignment
    if g.edge_count() != n * (n - 1) / 2 - (n - a) || profile[0] == 0 {
        return false;
    }
    let canon = match h_extremal(n, a) {
        Ok(h) => h,
        Err(_) => return false,
    };
    let universal: Vec<usize> = (0..n).filter(|&v| degrees[v] == n - 1).collect();
    for pivot in (0..n).filter(|&v| degrees[v] == a - 1) {
        let clique: Vec<usize> = universal.iter().copied().filter(|&v| v != pivot).collect();
        if clique.len() != a - 1 {
            continue;
        }
        let mut perm = vec![usize::MAX; n];
        for (i, &v) in clique.iter().enumerate() {
            perm[v] = i;
        }
        perm[pivot] = a - 1;
        let mut next = a;
        for v in 0..n {
            if perm[v] == usize::MAX {
                perm[v] = next;
                next += 1;
            }
        }
        let ok = (0..n).all(|v| {
            let mapped: VertexSet = g.neighbors(v).iter().map(|u| perm[u]).collect();
            mapped == canon.neighbors(perm[v])
        });
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union, random_graph, RandomModel};

    #[test]
    fn known_cases() {
        assert!(recognize_h_extremal(&h_extremal(9, 3).unwrap(), 3));
        assert!(!recognize_h_extremal(&complete(9).unwrap(), 3));
        let g = disjoint_union(&complete(1).unwrap(), &complete(7).unwrap()).unwrap();
        assert!(recognize_h_extremal(&g, 1));
        assert!(!recognize_h_extremal(&g, 2));
        assert!(!recognize_h_extremal(&g, 0));
    }

    #[test]
    fn round_trip_all_parameters() {
        for n in 2..=40 {
            for a in 1..n {
                let g = h_extremal(n, a).unwrap();
                assert!(recognize_h_extremal(&g, a), "n={n} a={a}");
                for other in 1..n {
                    if other != a {
                        assert!(!recognize_h_extremal(&g, other), "n={n} a={a} other={other}");
                    }
                }
            }
        }
    }

    #[test]
    fn invariant_under_relabelling() {
        let g = h_extremal(10, 4).unwrap();
        let perm = [3, 7, 0, 9, 1, 5, 2, 8, 6, 4];
        assert!(recognize_h_extremal(&g.permuted(&perm).unwrap(), 4));
    }

    #[test]
    fn same_edge_count_but_not_h() {
        // K_8 minus a path of length 2 centred elsewhere shares e(G) with H_{8,6}
        let mut g = complete(8).unwrap();
        g.toggle_edge_unchecked(0, 1);
        g.toggle_edge_unchecked(2, 3);
        assert!(!recognize_h_extremal(&g, 6));
        for seed in 0..50 {
            let r = random_graph(8, RandomModel::Edges(26), seed).unwrap();
            let expect = r.complement().edges().len() == 2
                && r.complement().max_degree() == 2;
            assert_eq!(recognize_h_extremal(&r, 6), expect);
        }
    }
}
