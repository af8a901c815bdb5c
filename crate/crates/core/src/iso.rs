//! Exact isomorphism testing for small multigraphs.
//!
//! Iterated degree refinement narrows the candidate classes, then a
//! backtracking search tries the remaining assignments. Intended for graphs
//! of at most a few dozen vertices; everything here is deterministic.

use crate::graph::Multigraph;

/// Adjacency with parallel-edge multiplicities plus stable refinement colors.
struct Refined {
    adj: Vec<Vec<u16>>,
    colors: Vec<u32>,
}

fn adjacency_matrix(g: &Multigraph) -> Vec<Vec<u16>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![0u16; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] += 1;
        adj[v][u] += 1;
    }
    adj
}

/// Refines vertex colors until stable. Color ids are per-graph, but the
/// signature history (returned separately) is canonical, so two graphs can
/// be compared by their sorted signature multisets.
fn refine(g: &Multigraph) -> (Refined, Vec<Vec<u64>>) {
    let n = g.vertex_count();
    let adj = adjacency_matrix(g);
    // signature[v] grows one canonical word per round
    let mut sigs: Vec<Vec<u64>> = (0..n).map(|v| vec![g.degree(v) as u64]).collect();
    let mut colors = assign_ids(&sigs);
    loop {
        for v in 0..n {
            let mut hist: Vec<(u32, u16)> = (0..n)
                .filter(|&w| adj[v][w] > 0)
                .map(|w| (colors[w], adj[v][w]))
                .collect();
            hist.sort_unstable();
            // fold the neighbor histogram into one canonical word
            let mut word = 1u64;
            for (c, mult) in hist {
                word = word
                    .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                    .wrapping_add((u64::from(c) << 16) | u64::from(mult));
            }
            sigs[v].push(word);
        }
        let next = assign_ids(&sigs);
        if next == colors {
            break;
        }
        colors = next;
    }
    (Refined { adj, colors }, sigs)
}

fn assign_ids(sigs: &[Vec<u64>]) -> Vec<u32> {
    let mut sorted: Vec<&Vec<u64>> = sigs.iter().collect();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(&s).expect("present") as u32)
        .collect()
}

/// Exact isomorphism decision.
pub fn are_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.vertex_count() == 0 {
        return true;
    }
    let (rg, sig_g) = refine(g);
    let (rh, sig_h) = refine(h);
    let mut a: Vec<&Vec<u64>> = sig_g.iter().collect();
    let mut b: Vec<&Vec<u64>> = sig_h.iter().collect();
    a.sort();
    b.sort();
    if a != b {
        return false;
    }
    // signatures agree, so color c in g corresponds to color c in h only
    // after translating through the signature order; reuse ids over the
    // union so both sides share one palette
    let (cg, ch) = shared_palette(&sig_g, &sig_h);
    !search(&rg.adj, &rh.adj, &cg, &ch, false).is_empty()
}

/// All automorphisms of `g`, as vertex maps.
pub fn automorphisms(g: &Multigraph) -> Vec<Vec<usize>> {
    if g.vertex_count() == 0 {
        return vec![Vec::new()];
    }
    let (r, _) = refine(g);
    search(&r.adj, &r.adj, &r.colors, &r.colors, true)
}

fn shared_palette(sig_g: &[Vec<u64>], sig_h: &[Vec<u64>]) -> (Vec<u32>, Vec<u32>) {
    let mut all: Vec<&Vec<u64>> = sig_g.iter().chain(sig_h.iter()).collect();
    all.sort();
    all.dedup();
    let id = |s: &Vec<u64>| all.binary_search(&s).expect("present") as u32;
    (
        sig_g.iter().map(id).collect(),
        sig_h.iter().map(id).collect(),
    )
}

/// Backtracking over color-respecting assignments; returns one mapping, or
/// all of them when `find_all` is set.
fn search(
    a: &[Vec<u16>],
    b: &[Vec<u16>],
    ca: &[u32],
    cb: &[u32],
    find_all: bool,
) -> Vec<Vec<usize>> {
    let n = a.len();
    // histogram check
    let mut ha: Vec<u32> = ca.to_vec();
    let mut hb: Vec<u32> = cb.to_vec();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Vec::new();
    }
    // assign vertices from the rarest color class outward
    let mut order: Vec<usize> = (0..n).collect();
    let class_size = |c: u32| ca.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (class_size(ca[v]), ca[v], v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    backtrack(
        a, b, ca, cb, &order, 0, &mut mapping, &mut used, find_all, &mut found,
    );
    found
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &[Vec<u16>],
    b: &[Vec<u16>],
    ca: &[u32],
    cb: &[u32],
    order: &[usize],
    depth: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    find_all: bool,
    found: &mut Vec<Vec<usize>>,
) -> bool {
    if depth == order.len() {
        found.push(mapping.clone());
        return !find_all;
    }
    let v = order[depth];
    for w in 0..b.len() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a[v][u] == b[w][mapping[u]]);
        if !consistent {
            continue;
        }
        mapping[v] = w;
        used[w] = true;
        let stop = backtrack(a, b, ca, cb, order, depth + 1, mapping, used, find_all, found);
        mapping[v] = usize::MAX;
        used[w] = false;
        if stop {
            return true;
        }
    }
    false
}
