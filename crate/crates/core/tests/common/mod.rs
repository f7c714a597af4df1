//! Shared oracles for integration tests.
#![allow(dead_code)]

use cosys::graphs::Graph;
use cosys::ElementSet;

/// Every labelled cubic graph on `n` vertices, each exactly once: the least
/// vertex with spare degree always picks its remaining partners together.
pub fn labelled_cubic(n: usize, visit: &mut dyn FnMut(&[u64])) {
    fn rec(adj: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        let n = adj.len();
        let Some(v) = (0..n).find(|&v| adj[v].count_ones() < 3) else {
            visit(adj);
            return;
        };
        let need = 3 - adj[v].count_ones() as usize;
        let cands: Vec<usize> = (v + 1..n).filter(|&w| adj[w].count_ones() < 3 && adj[v] >> w & 1 == 0).collect();
        let mut pick = Vec::new();
        choose(&cands, need, 0, &mut pick, &mut |p| {
            for &w in p {
                adj[v] |= 1 << w;
                adj[w] |= 1 << v;
            }
            rec(adj, visit);
            for &w in p {
                adj[v] &= !(1 << w);
                adj[w] &= !(1 << v);
            }
        });
    }
    rec(&mut vec![0; n], visit);
}

fn choose(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..items.len() {
        cur.push(items[i]);
        choose(items, k, i + 1, cur, f);
        cur.pop();
    }
}

pub fn connected(adj: &[u64]) -> bool {
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen.count_ones() as usize == adj.len()
}

pub fn graph_from_adj(adj: &[u64]) -> Graph {
    let mut edges = Vec::new();
    for (u, &row) in adj.iter().enumerate() {
        for w in ElementSet(row).iter().filter(|&w| w > u) {
            edges.push((u, w));
        }
    }
    Graph::from_edges(adj.len(), edges).unwrap()
}
