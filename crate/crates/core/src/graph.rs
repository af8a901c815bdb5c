//! Finite undirected multigraphs with exact connectivity, edge-connectivity,
//! subdivision, and the named constructions used throughout the crate.
//!
//! Vertices are dense ids `0..n`. Edges are an ordered list of unordered
//! pairs; the position in the list is the stable edge id. Parallel edges are
//! allowed, loops are not.

use crate::dsu::UnionFind;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Selector for the graph families used by the constructions and censuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraphSpec {
    /// Path on `k >= 1` vertices.
    Path(usize),
    /// Cycle on `k >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `k >= 1` vertices.
    Complete(usize),
    /// Moebius graph M_p for `p >= 2`: the cycle C_2p plus the p long chords.
    Mobius(usize),
    Wagner,
    Cube,
}

impl Multigraph {
    /// Builds a multigraph from explicit vertex pairs; edge ids follow input order.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        Ok(Multigraph {
            n,
            edges: pairs.to_vec(),
        })
    }

    pub fn named(spec: NamedGraphSpec) -> Result<Self> {
        let invalid = |kind: &'static str, reason: String| Err(Error::InvalidParameter { kind, reason });
        match spec {
            NamedGraphSpec::Path(k) => {
                if k < 1 {
                    return invalid("path", "need k >= 1 vertices".into());
                }
                let pairs: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Multigraph::new(k, &pairs)
            }
            NamedGraphSpec::Cycle(k) => {
                if k < 3 {
                    return invalid("cycle", "need k >= 3 vertices".into());
                }
                let pairs: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                Multigraph::new(k, &pairs)
            }
            NamedGraphSpec::Complete(k) => {
                if k < 1 {
                    return invalid("complete", "need k >= 1 vertices".into());
                }
                let mut pairs = Vec::new();
                for u in 0..k {
                    for v in u + 1..k {
                        pairs.push((u, v));
                    }
                }
                Multigraph::new(k, &pairs)
            }
            NamedGraphSpec::Mobius(p) => {
                if p < 2 {
                    return invalid("mobius", "need p >= 2".into());
                }
                let k = 2 * p;
                let mut pairs: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                pairs.extend((0..p).map(|i| (i, i + p)));
                Multigraph::new(k, &pairs)
            }
            NamedGraphSpec::Wagner => Multigraph::new(8, &WAGNER_EDGES),
            NamedGraphSpec::Cube => Multigraph::new(8, &CUBE_EDGES),
        }
    }

    pub fn wagner() -> Self {
        Multigraph::named(NamedGraphSpec::Wagner).expect("fixed construction")
    }

    pub fn cube() -> Self {
        Multigraph::named(NamedGraphSpec::Cube).expect("fixed construction")
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

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_cubic(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    /// Edge ids incident to each vertex, in edge-id order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(id);
            inc[v].push(id);
        }
        inc
    }

    /// Component id per vertex after deleting the given edge ids.
    pub fn component_ids_without(&self, removed: &[usize]) -> Vec<usize> {
        let mut gone = vec![false; self.edges.len()];
        for &e in removed {
            gone[e] = true;
        }
        let mut uf = UnionFind::new(self.n);
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if !gone[id] {
                uf.union(u, v);
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut out = vec![0usize; self.n];
        for v in 0..self.n {
            let root = uf.find(v);
            if label[root] == usize::MAX {
                label[root] = next;
                next += 1;
            }
            out[v] = label[root];
        }
        out
    }

    /// Vertex sets of the components after deleting the given edge ids.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let ids = self.component_ids_without(removed);
        let count = ids.iter().copied().max().map_or(0, |c| c + 1);
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in ids.iter().enumerate() {
            comps[c].push(v);
        }
        comps
    }

    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut gone = vec![false; self.edges.len()];
        for &e in removed {
            gone[e] = true;
        }
        let mut uf = UnionFind::new(self.n);
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if !gone[id] {
                uf.union(u, v);
            }
        }
        uf.components() == 1
    }

    /// The empty graph on 0 vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// True when the graph is simple: no parallel edges (loops are excluded
    /// at construction).
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    /// 2-connectivity in the usual sense: at least 3 vertices, connected, and
    /// no cut vertex. Runs the lowpoint scan; parallel edges are handled by
    /// tracking the entering edge id, so a doubled edge never yields a cut
    /// vertex by accident.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let inc = self.incidence();
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        // iterative DFS from vertex 0; frame: (vertex, entering edge, incidence cursor)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        low[0] = 0;
        let mut timer = 1usize;
        let mut root_children = 0usize;
        while let Some(&mut (v, enter, ref mut cursor)) = stack.last_mut() {
            if *cursor < inc[v].len() {
                let eid = inc[v][*cursor];
                *cursor += 1;
                if eid == enter {
                    continue;
                }
                let (a, b) = self.edges[eid];
                let w = if a == v { b } else { a };
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, eid, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (parent, _, _)) = stack.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                    if parent != 0 && low[v] >= disc[parent] {
                        return false;
                    }
                }
            }
        }
        root_children <= 1
    }

    /// Subdivides the given edge `k` times: `k` new degree-2 vertices are
    /// appended, the edge keeps its id for the first segment, and the
    /// remaining `k` segments are appended after the existing edges.
    pub fn subdivide(&self, edge: usize, k: usize) -> Result<Self> {
        if edge >= self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                edge,
                m: self.edges.len(),
            });
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let (u, v) = self.edges[edge];
        let mut edges = self.edges.clone();
        edges[edge] = (u, self.n);
        for i in 0..k - 1 {
            edges.push((self.n + i, self.n + i + 1));
        }
        edges.push((self.n + k - 1, v));
        Ok(Multigraph {
            n: self.n + k,
            edges,
        })
    }

    /// Subdivides every edge at once: edge `i` becomes a path of
    /// `lengths[i] >= 1` edges. The result lists the segments of edge 0
    /// first, then edge 1, and so on, so the chain over base edge `i` starts
    /// at result edge id `lengths[0] + .. + lengths[i-1]`.
    pub fn subdivide_each(&self, lengths: &[usize]) -> Result<Self> {
        if lengths.len() != self.edges.len() {
            return Err(Error::BadSubdivision(format!(
                "need {} lengths, got {}",
                self.edges.len(),
                lengths.len()
            )));
        }
        if let Some(pos) = lengths.iter().position(|&l| l == 0) {
            return Err(Error::BadSubdivision(format!(
                "length for edge {pos} must be positive"
            )));
        }
        let mut n = self.n;
        let mut edges = Vec::with_capacity(lengths.iter().sum());
        for (&(u, v), &len) in self.edges.iter().zip(lengths) {
            let mut prev = u;
            for _ in 0..len - 1 {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, v));
        }
        Ok(Multigraph { n, edges })
    }

    /// Exact edge connectivity. Exhaustive subset search up to 20 edges,
    /// unit-capacity max-flow above that.
    pub fn edge_connectivity(&self) -> Result<usize> {
        if self.n < 2 || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let m = self.edges.len();
        if m <= 20 {
            for k in 0..=m {
                let mut found = false;
                for_each_combination(m, k, &mut |subset| {
                    if !found && !self.is_connected_without(subset) {
                        found = true;
                    }
                });
                if found {
                    return Ok(k);
                }
            }
            unreachable!("removing all edges of a graph with n >= 2 disconnects it");
        }
        let mut best = usize::MAX;
        for t in 1..self.n {
            best = best.min(self.max_flow_unit(0, t));
        }
        Ok(best)
    }

    /// Unit-capacity max flow between two vertices (Edmonds-Karp); each
    /// undirected edge contributes one unit in either direction.
    fn max_flow_unit(&self, s: usize, t: usize) -> usize {
        // arcs 2e and 2e+1 are the two directions of edge e
        let mut cap = vec![1i32; 2 * self.edges.len()];
        let inc = self.incidence();
        let mut flow = 0usize;
        loop {
            let mut from_arc = vec![usize::MAX; self.n];
            let mut seen = vec![false; self.n];
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for &eid in &inc[v] {
                    let (a, b) = self.edges[eid];
                    let (arc, w) = if a == v { (2 * eid, b) } else { (2 * eid + 1, a) };
                    if cap[arc] > 0 && !seen[w] {
                        seen[w] = true;
                        from_arc[w] = arc;
                        queue.push_back(w);
                    }
                }
            }
            if !seen[t] {
                return flow;
            }
            let mut v = t;
            while v != s {
                let arc = from_arc[v];
                cap[arc] -= 1;
                cap[arc ^ 1] += 1;
                let eid = arc / 2;
                let (a, b) = self.edges[eid];
                v = if arc % 2 == 0 { a } else { b };
            }
            flow += 1;
        }
    }

    /// Plain-text edge list: first line `n m`, then one `u v` line per edge
    /// in id order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "vertex count")?;
        let m: usize = parse_field(it.next(), "edge count")?;
        let mut pairs = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), "edge endpoint")?;
            let v: usize = parse_field(it.next(), "edge endpoint")?;
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(Error::Parse(format!(
                "header says {m} edges but {} listed",
                pairs.len()
            )));
        }
        Multigraph::new(n, &pairs)
    }
}

fn parse_field(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what}")))
}

/// Wagner graph on vertices 0..8 (figure labels 1..8 minus one). Edge ids
/// 0..12 are the frozen labels e1..e12: chords 15, 37, 26, 48 first, then
/// the rim in the order 12, 67, 34, 81, 56, 45, 78, 23.
pub const WAGNER_EDGES: [(usize, usize); 12] = [
    (0, 4),
    (2, 6),
    (1, 5),
    (3, 7),
    (0, 1),
    (5, 6),
    (2, 3),
    (7, 0),
    (4, 5),
    (3, 4),
    (6, 7),
    (1, 2),
];

/// Cube graph on vertices 0..8: rim 12, 23, .., 81 then chords 16, 25, 38, 47
/// (figure labels).
pub const CUBE_EDGES: [(usize, usize); 12] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 0),
    (0, 5),
    (1, 4),
    (2, 7),
    (3, 6),
];

/// Calls `f` on every k-subset of `0..m`, in lexicographic order.
pub fn for_each_combination(m: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
