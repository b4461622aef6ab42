//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm with explicit base tracking).

use crate::graph::{EdgeSet, Graph};
use std::collections::VecDeque;

/// Adjacency-list graph without the bit-set vertex cap.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuxGraph {
    adj: Vec<Vec<usize>>,
}

impl AuxGraph {
    pub fn new(n: usize) -> Self {
        AuxGraph { adj: vec![Vec::new(); n] }
    }

    /// Appends a new isolated node and returns its index.
    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }
}

impl From<&Graph> for AuxGraph {
    fn from(g: &Graph) -> Self {
        AuxGraph {
            adj: (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a AuxGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a AuxGraph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.g.order() {
            if self.mate[v] == NONE {
                if let Some(&u) = self.g.neighbors(v).iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Endpoint of an augmenting path from `root`, if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.adj[v].len() {
                let to = self.g.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    /// Grows the matching; with `stop_on_exposed` gives up as soon as some
    /// vertex is certain to stay exposed.
    fn run(&mut self, stop_on_exposed: bool) -> bool {
        self.greedy();
        for v in 0..self.g.order() {
            if self.mate[v] == NONE {
                match self.find_path(v) {
                    Some(end) => self.augment(end),
                    // no augmenting path from v now means none later either
                    None if stop_on_exposed => return false,
                    None => {}
                }
            }
        }
        true
    }
}

/// Mate of every node in a maximum matching (`None` when exposed).
pub fn maximum_matching(g: &AuxGraph) -> Vec<Option<usize>> {
    let mut b = Blossom::new(g);
    b.run(false);
    b.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

/// A perfect matching as a mate array, or `None` if there is none.
pub(crate) fn perfect_matching(g: &AuxGraph) -> Option<Vec<usize>> {
    if g.order() % 2 == 1 {
        return None;
    }
    let mut b = Blossom::new(g);
    b.run(true).then_some(b.mate)
}

/// A maximum matching of `g`.
pub fn max_matching(g: &Graph) -> EdgeSet {
    let mate = maximum_matching(&AuxGraph::from(g));
    EdgeSet::from_edges(
        mate.iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u))),
    )
}
