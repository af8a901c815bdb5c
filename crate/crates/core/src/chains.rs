//! Chain structure of 2-connected graphs with more edges than vertices:
//! detection, removal, distillation, and the fairness predicates.
//!
//! A chain is a maximal path whose internal vertices have degree 2 and whose
//! two distinct endpoints have degree greater than 2. Collapsing every chain
//! to a single edge yields the distillation, a multigraph on the branch
//! vertices.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Walk from one endpoint to the other; interior entries have degree 2
    /// in the source graph.
    pub vertex_path: Vec<usize>,
    /// Source edge ids along the walk, one per step.
    pub edge_ids: Vec<usize>,
}

impl Chain {
    pub fn length(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (
            *self.vertex_path.first().expect("nonempty path"),
            *self.vertex_path.last().expect("nonempty path"),
        )
    }

    pub fn internal_vertices(&self) -> &[usize] {
        &self.vertex_path[1..self.vertex_path.len() - 1]
    }
}

/// A graph together with its chain list and distillation.
///
/// Chains are ordered by their smallest contained source edge id, and
/// distillation edge `i` corresponds to `chains[i]`; that index identity is
/// the edge map between the two.
#[derive(Clone, Debug)]
pub struct ChainDecomposition {
    source: Multigraph,
    chains: Vec<Chain>,
    distillation: Multigraph,
    /// source vertex id of each distillation vertex
    branch_vertices: Vec<usize>,
}

impl ChainDecomposition {
    pub fn source(&self) -> &Multigraph {
        &self.source
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn distillation(&self) -> &Multigraph {
        &self.distillation
    }

    /// Source vertex ids of the distillation vertices, ascending.
    pub fn branch_vertices(&self) -> &[usize] {
        &self.branch_vertices
    }

    /// Chain lengths in chain order (= distillation edge order).
    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Chain::length).collect()
    }
}

/// Splits a simple 2-connected graph with m > n into its chains.
pub fn chain_decomposition(g: &Multigraph) -> Result<ChainDecomposition> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m <= n {
        return Err(Error::NoExcessEdges { n, m });
    }
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let deg = g.degrees();
    let inc = g.incidence();

    let mut assigned = vec![false; m];
    let mut chains = Vec::new();
    for start in 0..n {
        if deg[start] <= 2 {
            continue;
        }
        for &first in &inc[start] {
            if assigned[first] {
                continue;
            }
            // walk through degree-2 vertices to the far branch vertex
            let mut path = vec![start];
            let mut edge_ids = Vec::new();
            let mut prev_edge = first;
            let (a, b) = g.endpoints(first);
            let mut cur = if a == start { b } else { a };
            edge_ids.push(first);
            assigned[first] = true;
            while deg[cur] == 2 {
                path.push(cur);
                let next = inc[cur]
                    .iter()
                    .copied()
                    .find(|&e| e != prev_edge)
                    .expect("degree-2 vertex has a second edge");
                let (x, y) = g.endpoints(next);
                cur = if x == cur { y } else { x };
                edge_ids.push(next);
                assigned[next] = true;
                prev_edge = next;
            }
            path.push(cur);
            // orient deterministically: smaller endpoint first
            if path[0] > *path.last().unwrap() {
                path.reverse();
                edge_ids.reverse();
            }
            chains.push(Chain {
                vertex_path: path,
                edge_ids,
            });
        }
    }
    debug_assert!(assigned.iter().all(|&a| a), "every edge lies on a chain");
    chains.sort_by_key(|c| *c.edge_ids.iter().min().expect("nonempty chain"));

    let branch_vertices: Vec<usize> = (0..n).filter(|&v| deg[v] > 2).collect();
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in branch_vertices.iter().enumerate() {
        rank[v] = i;
    }
    let dist_pairs: Vec<(usize, usize)> = chains
        .iter()
        .map(|c| {
            let (u, v) = c.endpoints();
            (rank[u], rank[v])
        })
        .collect();
    let distillation = Multigraph::new(branch_vertices.len(), &dist_pairs)?;
    Ok(ChainDecomposition {
        source: g.clone(),
        chains,
        distillation,
        branch_vertices,
    })
}

/// Removes the chosen chains: their edges and internal vertices go away, the
/// endpoints stay. Kept vertices are renumbered in ascending source order;
/// the returned map gives the source id of each new vertex.
pub fn remove_chains(
    d: &ChainDecomposition,
    subset: &[usize],
) -> Result<(Multigraph, Vec<usize>)> {
    let count = d.chains.len();
    let mut drop_chain = vec![false; count];
    for &i in subset {
        if i >= count {
            return Err(Error::ChainOutOfRange { index: i, count });
        }
        drop_chain[i] = true;
    }
    let n = d.source.vertex_count();
    let mut keep_vertex = vec![true; n];
    let mut drop_edge = vec![false; d.source.edge_count()];
    for (i, chain) in d.chains.iter().enumerate() {
        if !drop_chain[i] {
            continue;
        }
        for &v in chain.internal_vertices() {
            keep_vertex[v] = false;
        }
        for &e in &chain.edge_ids {
            drop_edge[e] = true;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| keep_vertex[v]).collect();
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        rank[v] = i;
    }
    let pairs: Vec<(usize, usize)> = d
        .source
        .edges()
        .iter()
        .enumerate()
        .filter(|(id, _)| !drop_edge[*id])
        .map(|(_, &(u, v))| (rank[u], rank[v]))
        .collect();
    Ok((Multigraph::new(kept.len(), &pairs)?, kept))
}

/// Chain lengths pairwise within 1 of each other.
pub fn is_fair(d: &ChainDecomposition) -> bool {
    let lengths = d.lengths();
    let max = lengths.iter().max().copied().unwrap_or(0);
    let min = lengths.iter().min().copied().unwrap_or(0);
    max - min <= 1
}

/// Fair, and the per-branch-vertex sums of incident chain lengths are also
/// pairwise within 1.
pub fn is_vertex_fair(d: &ChainDecomposition) -> bool {
    if !is_fair(d) {
        return false;
    }
    let sums = branch_length_sums(d);
    let max = sums.iter().max().copied().unwrap_or(0);
    let min = sums.iter().min().copied().unwrap_or(0);
    max - min <= 1
}

/// Sum of incident chain lengths per distillation vertex.
pub fn branch_length_sums(d: &ChainDecomposition) -> Vec<usize> {
    let mut sums = vec![0usize; d.distillation.vertex_count()];
    for (i, &(u, v)) in d.distillation.edges().iter().enumerate() {
        let len = d.chains[i].length();
        sums[u] += len;
        sums[v] += len;
    }
    sums
}

/// Serializable summary of a decomposition.
#[derive(Serialize)]
pub struct DecompositionReport {
    pub source_vertices: usize,
    pub source_edges: usize,
    pub distillation_vertices: usize,
    pub distillation_edges: Vec<(usize, usize)>,
    /// chain length per distillation edge, in edge order
    pub chain_lengths: Vec<usize>,
    pub branch_vertices: Vec<usize>,
    pub fair: bool,
    pub vertex_fair: bool,
}

impl DecompositionReport {
    pub fn new(d: &ChainDecomposition) -> Self {
        DecompositionReport {
            source_vertices: d.source.vertex_count(),
            source_edges: d.source.edge_count(),
            distillation_vertices: d.distillation.vertex_count(),
            distillation_edges: d.distillation.edges().to_vec(),
            chain_lengths: d.lengths(),
            branch_vertices: d.branch_vertices.clone(),
            fair: is_fair(d),
            vertex_fair: is_vertex_fair(d),
        }
    }
}
