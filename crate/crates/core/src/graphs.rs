//! Simple graphs, structural predicates, graphic and cographic matroids, and
//! the census of connected cubic graphs.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gf2::Gf2Matrix;
use crate::matroid::{BinaryMatroid, ElementSet, MatroidError};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0:?} is a self-loop or repeats an earlier edge")]
    NotSimple(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge label {0:?}")]
    DuplicateLabel(String),
    #[error("graph is acyclic")]
    Acyclic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} is outside the supported range")]
    OutOfRange(usize),
    #[error("graph has more than {MAX_VERTICES} vertices or edges")]
    TooLarge,
    #[error("graph file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A simple undirected graph on vertices `0..n` with labelled edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, labels: Vec<String>) -> Result<Self, GraphError> {
        if n > MAX_VERTICES || edges.len() > MAX_VERTICES {
            return Err(GraphError::TooLarge);
        }
        assert_eq!(edges.len(), labels.len(), "one label per edge");
        let mut adj = vec![0u64; n];
        let mut seen = std::collections::HashSet::new();
        for (&(u, v), label) in edges.iter().zip(&labels) {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v || adj[u] >> v & 1 == 1 {
                return Err(GraphError::NotSimple(label.clone()));
            }
            if !crate::matroid::valid_label(label) || !seen.insert(label.as_str()) {
                return Err(GraphError::DuplicateLabel(label.clone()));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, edges, labels, adj })
    }

    /// Edges labelled `e1, e2, ...` in the given order.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let labels = (1..=edges.len()).map(|i| format!("e{i}")).collect();
        Self::new(n, edges, labels)
    }

    /// `K_n` with edge `{u, v}` labelled by the 1-based vertex pair, e.g. `12`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
                labels.push(if n <= 9 { format!("{}{}", u + 1, v + 1) } else { format!("{}-{}", u + 1, v + 1) });
            }
        }
        Graph::new(n, edges, labels).expect("complete graph is simple")
    }

    /// `K_{a,b}` with sides `x1..xa`, `y1..yb`; edge labels like `x1y2`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
                labels.push(format!("x{}y{}", i + 1, j + 1));
            }
        }
        Graph::new(a + b, edges, labels).expect("complete bipartite graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect())
            .expect("cycle is simple for n >= 3")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)).collect()).expect("path is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn edge_set_labels(&self, x: ElementSet) -> Vec<&str> {
        x.iter().map(|i| self.labels[i].as_str()).collect()
    }

    /// Connectivity after removing the edges in `removed`.
    fn connected_without(&self, removed: u64) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = self.adj.clone();
        for i in ElementSet(removed).iter() {
            let (u, v) = self.edges[i];
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == self.n
    }

    pub fn is_connected(&self) -> bool {
        self.connected_without(0)
    }

    /// Connected, and still connected after removing any one or two edges.
    pub fn is_three_edge_connected(&self) -> bool {
        let m = self.edges.len();
        if !self.is_connected() {
            return false;
        }
        for i in 0..m {
            if !self.connected_without(1 << i) {
                return false;
            }
            for j in i + 1..m {
                if !self.connected_without(1 << i | 1 << j) {
                    return false;
                }
            }
        }
        true
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Result<usize, GraphError> {
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in ElementSet(self.adj[u]).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Err(GraphError::Acyclic)
        } else {
            Ok(best)
        }
    }

    /// The cycle matroid from the vertex-edge incidence matrix; no
    /// connectivity requirement.
    fn incidence_matroid(&self) -> Result<BinaryMatroid, GraphError> {
        let m = self.edges.len();
        let mut rows = vec![0u64; self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            rows[u] |= 1 << i;
            rows[v] |= 1 << i;
        }
        let rep = Gf2Matrix::from_rows(rows, m).map_err(MatroidError::from)?;
        Ok(BinaryMatroid::new(rep, self.labels.clone())?)
    }

    pub fn graphic_matroid(&self) -> Result<BinaryMatroid, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        self.incidence_matroid()
    }

    pub fn cographic_matroid(&self) -> Result<BinaryMatroid, GraphError> {
        Ok(self.graphic_matroid()?.dual())
    }

    /// Edge sets of all cycles, as circuits of the cycle matroid, sorted by
    /// size and then lexicographically.
    pub fn cycles(&self) -> Vec<ElementSet> {
        self.incidence_matroid()
            .expect("simple graph with at most 64 edges")
            .circuits()
    }

    /// Exact planarity test by searching for a subdivision of `K_5` or `K_{3,3}`.
    pub fn is_planar(&self) -> bool {
        let (n, m) = (self.n, self.edges.len());
        if n <= 4 {
            return true;
        }
        if m > 3 * n - 6 {
            return false;
        }
        !(self.has_k33_subdivision() || self.has_k5_subdivision())
    }

    pub fn has_k5_subdivision(&self) -> bool {
        let branch: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) >= 4).collect();
        let mut found = false;
        for_each_combination(&branch, 5, &mut |pick| {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .map(|(i, j)| (pick[i], pick[j]))
                .collect();
            found = self.link_disjoint_paths(&pairs, pick);
            found
        });
        found
    }

    pub fn has_k33_subdivision(&self) -> bool {
        let branch: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) >= 3).collect();
        let mut found = false;
        for_each_combination(&branch, 6, &mut |pick| {
            // pick[0] always sits on the first side.
            for_each_combination(&pick[1..], 2, &mut |rest| {
                let side_a = [pick[0], rest[0], rest[1]];
                let side_b: Vec<usize> = pick.iter().copied().filter(|v| !side_a.contains(v)).collect();
                let pairs: Vec<(usize, usize)> = side_a
                    .iter()
                    .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                    .collect();
                found = self.link_disjoint_paths(&pairs, pick);
                found
            });
            found
        });
        found
    }

    /// Finds internally vertex-disjoint paths joining every pair, with no
    /// path passing through a branch vertex.
    fn link_disjoint_paths(&self, pairs: &[(usize, usize)], branch: &[usize]) -> bool {
        let used = branch.iter().fold(0u64, |acc, &v| acc | 1 << v);
        // Branch vertices need enough incident edges to begin with.
        let mut need = vec![0usize; self.n];
        for &(s, t) in pairs {
            need[s] += 1;
            need[t] += 1;
        }
        if branch.iter().any(|&v| self.degree(v) < need[v]) {
            return false;
        }
        let mut used_edges = vec![0u64; self.n];
        self.link_from(pairs, 0, used, &mut used_edges)
    }

    fn link_from(&self, pairs: &[(usize, usize)], k: usize, used: u64, used_edges: &mut [u64]) -> bool {
        if k == pairs.len() {
            return true;
        }
        if !self.pairs_reachable(&pairs[k..], used, used_edges) {
            return false;
        }
        let (s, t) = pairs[k];
        let mut path = vec![s];
        self.extend_path(pairs, k, t, used, used_edges, &mut path)
    }

    fn extend_path(
        &self,
        pairs: &[(usize, usize)],
        k: usize,
        t: usize,
        used: u64,
        used_edges: &mut [u64],
        path: &mut Vec<usize>,
    ) -> bool {
        let u = *path.last().expect("path starts at s");
        let open = self.adj[u] & !used_edges[u];
        if open >> t & 1 == 1 {
            used_edges[u] |= 1 << t;
            used_edges[t] |= 1 << u;
            let mut on_path = used;
            for &w in path.iter() {
                on_path |= 1 << w;
            }
            if self.link_from(pairs, k + 1, on_path, used_edges) {
                return true;
            }
            used_edges[u] &= !(1 << t);
            used_edges[t] &= !(1 << u);
        }
        let mut cands = open & !used;
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if path.contains(&w) {
                continue;
            }
            used_edges[u] |= 1 << w;
            used_edges[w] |= 1 << u;
            path.push(w);
            if self.extend_path(pairs, k, t, used | 1 << w, used_edges, path) {
                return true;
            }
            path.pop();
            used_edges[u] &= !(1 << w);
            used_edges[w] &= !(1 << u);
        }
        false
    }

    /// Necessary condition: every remaining pair is joined through free vertices.
    fn pairs_reachable(&self, pairs: &[(usize, usize)], used: u64, used_edges: &[u64]) -> bool {
        pairs.iter().all(|&(s, t)| {
            let mut seen = 1u64 << s;
            let mut frontier = 1u64 << s;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let nb = self.adj[v] & !used_edges[v];
                if nb >> t & 1 == 1 {
                    return true;
                }
                let fresh = nb & !used & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            false
        })
    }

    /// Canonical adjacency encoding: equal exactly for isomorphic graphs.
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_labeling(self).0
    }

    /// The isomorphic copy whose vertex `i` is the `i`-th vertex of the
    /// canonical ordering, with edges sorted and relabelled `e1, e2, ...`.
    pub fn canonical_relabel(&self) -> Graph {
        let (_, order) = canonical_labeling(self);
        let mut pos = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        edges.sort_unstable();
        Graph::from_edges(self.n, edges).expect("relabelling preserves simplicity")
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.len() == other.edges.len() && self.canonical_form() == other.canonical_form()
    }

    /// Order of the automorphism group, by exhaustive refined search.
    pub fn automorphism_count(&self) -> u64 {
        let colours = refine(self, vec![0; self.n]);
        let mut map = vec![usize::MAX; self.n];
        let mut count = 0;
        count_automorphisms(self, &colours, 0, &mut map, 0, &mut count);
        count
    }

    /// Number of cycles of each length, keyed by length.
    pub fn cycle_spectrum(&self) -> BTreeMap<usize, usize> {
        let mut spec = BTreeMap::new();
        for c in self.cycles() {
            *spec.entry(c.len()).or_insert(0) += 1;
        }
        spec
    }

    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let perr = |line: usize, msg: &str| GraphError::Parse { line, msg: msg.to_string() };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, first) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
        let n: usize = first
            .strip_prefix("vertices")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| perr(ln, "expected `vertices <n>`"))?;
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for (ln, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["edge", label, u, v] => {
                    let u = u.parse().map_err(|_| perr(ln, "bad vertex"))?;
                    let v = v.parse().map_err(|_| perr(ln, "bad vertex"))?;
                    edges.push((u, v));
                    labels.push(label.to_string());
                }
                _ => return Err(perr(ln, "expected `edge <label> <u> <v>`")),
            }
        }
        Graph::new(n, edges, labels)
    }

    /// Parses consecutive `vertices`/`edge` blocks.
    pub fn parse_many(text: &str) -> Result<Vec<Graph>, GraphError> {
        let mut blocks: Vec<String> = Vec::new();
        for line in text.lines() {
            if line.trim_start().starts_with("vertices") {
                blocks.push(String::new());
            }
            match blocks.last_mut() {
                Some(b) => {
                    b.push_str(line);
                    b.push('\n');
                }
                None if line.trim().is_empty() || line.trim_start().starts_with('#') => {}
                None => return Err(GraphError::Parse { line: 1, msg: "expected `vertices <n>`".into() }),
            }
        }
        blocks.iter().map(|b| Graph::parse(b)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\n", self.n);
        for ((u, v), l) in self.edges.iter().zip(&self.labels) {
            s.push_str(&format!("edge {l} {u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Adjacency rows under the canonical vertex ordering; compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertices: usize,
    pub rows: Vec<u64>,
}

/// Colour refinement to the coarsest equitable partition finer than `colours`.
/// Colours are renumbered canonically (by sorted signature), so the result
/// only depends on the graph up to isomorphism and the input colouring.
fn refine(g: &Graph, mut colours: Vec<usize>) -> Vec<usize> {
    let n = g.n;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = ElementSet(g.adj[v]).iter().map(|w| colours[w]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect();
        let before = colours.iter().collect::<std::collections::HashSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colours = next;
    }
}

fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let colours = refine(g, vec![0; g.n]);
    let mut best: Option<(CanonicalForm, Vec<usize>)> = None;
    search_canonical(g, colours, &mut best);
    best.unwrap_or((CanonicalForm { vertices: 0, rows: Vec::new() }, Vec::new()))
}

fn search_canonical(g: &Graph, colours: Vec<usize>, best: &mut Option<(CanonicalForm, Vec<usize>)>) {
    let n = g.n;
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colours.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    // Smallest non-singleton cell, lowest colour first.
    let target = cells.values().filter(|c| c.len() > 1).min_by_key(|c| c.len());
    let Some(cell) = target else {
        let mut order = vec![0; n];
        for v in 0..n {
            order[colours[v]] = v;
        }
        let form = encode(g, &order);
        if best.as_ref().is_none_or(|(b, _)| form < *b) {
            *best = Some((form, order));
        }
        return;
    };
    let cell = cell.clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // Swapping twins is an automorphism fixing everything else.
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut c = colours.clone();
        // Individualise v: shift everyone at or above its colour, then split.
        let cv = c[v];
        for x in c.iter_mut() {
            if *x > cv {
                *x += 1;
            }
        }
        for &w in &cell {
            if w != v {
                c[w] = cv + 1;
            }
        }
        search_canonical(g, refine(g, c), best);
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = !(1u64 << u | 1u64 << v);
    g.adj[u] & strip == g.adj[v] & strip
}

fn encode(g: &Graph, order: &[usize]) -> CanonicalForm {
    let n = g.n;
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let rows = order
        .iter()
        .map(|&v| ElementSet(g.adj[v]).iter().fold(0u64, |acc, w| acc | 1 << (n - 1 - pos[w])))
        .collect();
    CanonicalForm { vertices: n, rows }
}

fn count_automorphisms(g: &Graph, colours: &[usize], v: usize, map: &mut [usize], used: u64, count: &mut u64) {
    if v == g.n {
        *count += 1;
        return;
    }
    for w in 0..g.n {
        if used >> w & 1 == 1 || colours[w] != colours[v] || g.degree(w) != g.degree(v) {
            continue;
        }
        // Adjacency to already-mapped vertices must be preserved.
        let ok = (0..v).all(|u| (g.adj[v] >> u & 1) == (g.adj[w] >> map[u] & 1));
        if ok {
            map[v] = w;
            count_automorphisms(g, colours, v + 1, map, used | 1 << w, count);
        }
    }
}

/// One representative per isomorphism class of connected cubic simple graphs
/// on `n` vertices, in canonical labelling, sorted by canonical form.
pub fn generate_cubic_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(4..=12).contains(&n) || n % 2 == 1 {
        return Err(GraphError::OutOfRange(n));
    }
    let mut gen = CubicGenerator { n, adj: vec![0; n], found: BTreeMap::new() };
    gen.process(0, 1);
    Ok(gen.found.into_values().collect())
}

/// Backtracking over adjacency choices in breadth-first labelling: when a
/// vertex is processed its not-yet-seen neighbours take the next free labels.
/// Every connected graph admits such a labelling, and the constraint removes
/// most relabelled duplicates before canonical deduplication.
struct CubicGenerator {
    n: usize,
    adj: Vec<u64>,
    found: BTreeMap<CanonicalForm, Graph>,
}

impl CubicGenerator {
    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn process(&mut self, v: usize, discovered: usize) {
        if v == self.n {
            let mut edges = Vec::with_capacity(3 * self.n / 2);
            for u in 0..self.n {
                for w in ElementSet(self.adj[u] & !low_bits(u + 1)).iter() {
                    edges.push((u, w));
                }
            }
            let g = Graph::from_edges(self.n, edges).expect("generated graph is simple");
            let canon = g.canonical_relabel();
            let form = canon.canonical_form();
            self.found.entry(form).or_insert(canon);
            return;
        }
        if v >= discovered {
            return; // would be disconnected
        }
        let need = 3 - self.degree(v);
        let old: Vec<usize> = (v + 1..discovered)
            .filter(|&w| self.degree(w) < 3 && self.adj[v] >> w & 1 == 0)
            .collect();
        for take_old in (0..=need.min(old.len())).rev() {
            let take_new = need - take_old;
            if discovered + take_new > self.n {
                continue;
            }
            let mut choices = Vec::new();
            for_each_combination(&old, take_old, &mut |pick| {
                choices.push(pick.to_vec());
                false
            });
            for pick in choices {
                let new: Vec<usize> = (discovered..discovered + take_new).collect();
                for &w in pick.iter().chain(&new) {
                    self.adj[v] |= 1 << w;
                    self.adj[w] |= 1 << v;
                }
                self.process(v + 1, discovered + take_new);
                for &w in pick.iter().chain(&new) {
                    self.adj[v] &= !(1 << w);
                    self.adj[w] &= !(1 << v);
                }
            }
        }
    }
}

fn low_bits(k: usize) -> u64 {
    crate::gf2::low_mask(k)
}

/// Connected cubic graphs on `n` vertices that are 3-edge-connected and
/// non-planar, in canonical-form order. `n` must be 8 or 10.
pub fn census_msr_cographic(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n != 8 && n != 10 {
        return Err(GraphError::OutOfRange(n));
    }
    Ok(generate_cubic_connected(n)?
        .into_iter()
        .filter(|g| g.is_three_edge_connected() && !g.is_planar())
        .collect())
}
