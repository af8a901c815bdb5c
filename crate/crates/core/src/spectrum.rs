//! Ground-truth cut counting: brute-force edge-cut spectra, matrix-tree
//! spanning-tree counts, cut classification over a distillation, induced-cut
//! counts, and exact reliability evaluation.

use crate::chains::ChainDecomposition;
use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::graph::{for_each_combination, Multigraph};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;

/// Subset enumeration budget: 2^30 connectivity tests.
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 30;

/// Exact edge-cut spectrum (mu_0 .. mu_m): mu_k is the number of k-subsets
/// of edges whose deletion disconnects the graph, minimal or not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutSpectrum {
    pub m: usize,
    #[serde(serialize_with = "serialize_counts")]
    pub mu: Vec<u128>,
}

fn serialize_counts<S: Serializer>(mu: &[u128], s: S) -> std::result::Result<S::Ok, S::Error> {
    // decimal strings so exact values survive 53-bit JSON consumers
    s.collect_seq(mu.iter().map(u128::to_string))
}

impl CutSpectrum {
    pub fn corank_index(&self, n: usize) -> usize {
        self.m + 1 - n
    }

    pub fn csv_row(&self) -> String {
        self.mu
            .iter()
            .map(u128::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Enumerates all 2^m edge subsets and counts the disconnecting ones by size.
pub fn cut_spectrum_bruteforce(g: &Multigraph) -> Result<CutSpectrum> {
    let m = g.edge_count();
    let n = g.vertex_count();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::TooManyEdges {
            m,
            max: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n <= 1 {
        return Ok(CutSpectrum {
            m,
            mu: vec![0; m + 1],
        });
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u as u32, v as u32))
        .collect();
    let total: u64 = 1 << m;
    // fan out over disjoint mask ranges; each worker owns a counts vector
    let chunk: u64 = 1 << 16;
    let ranges: Vec<(u64, u64)> = (0..total.div_ceil(chunk))
        .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
        .collect();
    let counts = ranges
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut local = vec![0u64; m + 1];
            let mut parent = [0u32; 32];
            for mask in lo..hi {
                // mask bit e set = edge e removed
                let mut comps = n as u32;
                for (i, p) in parent.iter_mut().enumerate().take(n) {
                    *p = i as u32;
                }
                for (e, &(u, v)) in edges.iter().enumerate() {
                    if mask >> e & 1 == 0 {
                        let mut ru = u;
                        while parent[ru as usize] != ru {
                            parent[ru as usize] = parent[parent[ru as usize] as usize];
                            ru = parent[ru as usize];
                        }
                        let mut rv = v;
                        while parent[rv as usize] != rv {
                            parent[rv as usize] = parent[parent[rv as usize] as usize];
                            rv = parent[rv as usize];
                        }
                        if ru != rv {
                            parent[ru as usize] = rv;
                            comps -= 1;
                            if comps == 1 {
                                break;
                            }
                        }
                    }
                }
                if comps > 1 {
                    local[mask.count_ones() as usize] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; m + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(CutSpectrum {
        m,
        mu: counts.into_iter().map(u128::from).collect(),
    })
}

/// Number of spanning trees via the matrix-tree determinant, evaluated with
/// fraction-free (Bareiss) integer elimination. Returns 0 for disconnected
/// input and 1 for graphs on at most one vertex.
pub fn spanning_tree_count(g: &Multigraph) -> BigUint {
    let n = g.vertex_count();
    if n <= 1 {
        return BigUint::one();
    }
    if !g.is_connected() {
        return BigUint::zero();
    }
    // reduced Laplacian: delete the last row and column
    let sz = n - 1;
    let mut a = vec![vec![BigInt::zero(); sz]; sz];
    for &(u, v) in g.edges() {
        if u < sz {
            a[u][u] += 1;
        }
        if v < sz {
            a[v][v] += 1;
        }
        if u < sz && v < sz {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..sz {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..sz).find(|&r| !a[r][k].is_zero()) else {
                return BigUint::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..sz {
            for j in k + 1..sz {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Bareiss
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = &a[sz - 1][sz - 1] * sign;
    det.abs().to_biguint().expect("nonnegative determinant")
}

/// Evaluates the reliability polynomial 1 - sum mu_k rho^k (1-rho)^(m-k)
/// exactly over rationals.
pub fn reliability_eval(spec: &CutSpectrum, rho: &BigRational) -> Result<BigRational> {
    if rho < &BigRational::zero() || rho > &BigRational::one() {
        return Err(Error::RhoOutOfRange);
    }
    let keep = BigRational::one() - rho;
    // rho^k * keep^(m-k), built incrementally
    let mut fail_pow = vec![BigRational::one()];
    for k in 1..=spec.m {
        fail_pow.push(&fail_pow[k - 1] * rho);
    }
    let mut keep_pow = vec![BigRational::one()];
    for k in 1..=spec.m {
        keep_pow.push(&keep_pow[k - 1] * &keep);
    }
    let mut sum = BigRational::zero();
    for (k, &mu) in spec.mu.iter().enumerate() {
        if mu != 0 {
            sum += BigRational::from(BigInt::from(mu)) * &fail_pow[k] * &keep_pow[spec.m - k];
        }
    }
    Ok(BigRational::one() - sum)
}

/// Parses a plain decimal like `0.001` or `1/1000` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = |_| Error::Parse(format!("not a rational: {text}"));
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(bad)?;
        let d: BigInt = den.trim().parse().map_err(bad)?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let whole = if whole.is_empty() { "0" } else { whole };
        let w: BigInt = whole.parse().map_err(bad)?;
        if frac.is_empty() {
            return Ok(BigRational::from(w));
        }
        let f: BigInt = frac.parse().map_err(bad)?;
        if f.is_negative() {
            return Err(Error::Parse(format!("not a rational: {text}")));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigRational::new(f, scale);
        return Ok(if w.is_negative() || whole.starts_with('-') {
            BigRational::from(w) - frac_part
        } else {
            BigRational::from(w) + frac_part
        });
    }
    Ok(BigRational::from(text.parse::<BigInt>().map_err(bad)?))
}

/// How a cut of a distillation separates vertex sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CutType {
    /// some separated set is a single vertex
    #[serde(rename = "V")]
    VertexSeparating,
    /// not vertex-separating, but some separated set is an adjacent pair
    #[serde(rename = "E")]
    EdgeSeparating,
    /// neither; includes cuts that separate no set at all
    #[serde(rename = "N")]
    Nontrivial,
}

/// Shapes of separated sets worth tagging on nontrivial cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ShapeTag {
    P3,
    C4,
}

#[derive(Clone, Debug, Serialize)]
pub struct CutClassification {
    pub cut_type: CutType,
    /// every separated set: a union of components of D - F with no F-edge
    /// inside, not empty and not everything
    pub separated_sets: Vec<Vec<usize>>,
    /// shapes induced by separated sets (nontrivial cuts only)
    pub tags: Vec<ShapeTag>,
}

/// Classifies an edge cut of a distillation by the sets it separates.
pub fn classify_cut(d: &Multigraph, cut: &[usize]) -> Result<CutClassification> {
    let m = d.edge_count();
    for &e in cut {
        if e >= m {
            return Err(Error::EdgeOutOfRange { edge: e, m });
        }
    }
    let comp_of = d.component_ids_without(cut);
    let comp_count = comp_of.iter().copied().max().map_or(0, |c| c + 1);
    if comp_count < 2 {
        return Err(Error::NotACut);
    }
    // a cut edge is inside a union of components iff both endpoint
    // components are chosen
    let cut_edge_comps: Vec<(usize, usize)> = cut
        .iter()
        .map(|&e| {
            let (u, v) = d.endpoints(e);
            (comp_of[u], comp_of[v])
        })
        .collect();
    let mut separated_sets = Vec::new();
    let mut tags = Vec::new();
    let mut has_singleton = false;
    let mut has_adjacent_pair = false;
    let full: u32 = if comp_count >= 32 {
        return Err(Error::Parse("too many components to classify".into()));
    } else {
        (1u32 << comp_count) - 1
    };
    for choice in 1..full {
        let inside = cut_edge_comps
            .iter()
            .any(|&(a, b)| choice >> a & 1 == 1 && choice >> b & 1 == 1);
        if inside {
            continue;
        }
        let set: Vec<usize> = (0..d.vertex_count())
            .filter(|&v| choice >> comp_of[v] & 1 == 1)
            .collect();
        match set.len() {
            1 => has_singleton = true,
            2 => {
                let adjacent = d
                    .edges()
                    .iter()
                    .any(|&(u, v)| (u, v) == (set[0], set[1]) || (v, u) == (set[0], set[1]));
                if adjacent {
                    has_adjacent_pair = true;
                }
            }
            3 => {
                if induces_path3(d, &set) {
                    tags.push(ShapeTag::P3);
                }
            }
            4 => {
                if induces_cycle4(d, &set) {
                    tags.push(ShapeTag::C4);
                }
            }
            _ => {}
        }
        separated_sets.push(set);
    }
    separated_sets.sort();
    tags.sort();
    tags.dedup();
    let cut_type = if has_singleton {
        CutType::VertexSeparating
    } else if has_adjacent_pair {
        CutType::EdgeSeparating
    } else {
        CutType::Nontrivial
    };
    if cut_type != CutType::Nontrivial {
        tags.clear();
    }
    Ok(CutClassification {
        cut_type,
        separated_sets,
        tags,
    })
}

fn induced_edges(d: &Multigraph, set: &[usize]) -> Vec<(usize, usize)> {
    d.edges()
        .iter()
        .filter(|(u, v)| set.contains(u) && set.contains(v))
        .copied()
        .collect()
}

fn induces_path3(d: &Multigraph, set: &[usize]) -> bool {
    let inside = induced_edges(d, set);
    if inside.len() != 2 {
        return false;
    }
    let (a, b) = (norm(inside[0]), norm(inside[1]));
    // two distinct non-parallel edges on 3 vertices always share one endpoint
    a != b
}

fn induces_cycle4(d: &Multigraph, set: &[usize]) -> bool {
    let inside = induced_edges(d, set);
    if inside.len() != 4 {
        return false;
    }
    let mut normed: Vec<_> = inside.iter().map(|&e| norm(e)).collect();
    normed.sort_unstable();
    normed.dedup();
    if normed.len() != 4 {
        return false; // parallel pair
    }
    let mut deg = std::collections::HashMap::new();
    for &(u, v) in &inside {
        *deg.entry(u).or_insert(0usize) += 1;
        *deg.entry(v).or_insert(0usize) += 1;
    }
    if set.iter().any(|v| deg.get(v).copied().unwrap_or(0) != 2) {
        return false;
    }
    // degrees all 2 and 4 distinct edges: connected means one 4-cycle
    let mut uf = UnionFind::new(set.len());
    let index = |v: usize| set.iter().position(|&x| x == v).expect("member");
    for &(u, v) in &inside {
        uf.union(index(u), index(v));
    }
    uf.components() == 1
}

fn norm((u, v): (usize, usize)) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Filter over classified cuts of the distillation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutFilter {
    /// every disconnecting chain subset (the induced count mu_k^I)
    Any,
    VertexSeparating,
    EdgeSeparating,
    Nontrivial,
    P3Separating,
    C4Separating,
}

impl CutFilter {
    fn matches(self, c: &CutClassification) -> bool {
        match self {
            CutFilter::Any => true,
            CutFilter::VertexSeparating => c.cut_type == CutType::VertexSeparating,
            CutFilter::EdgeSeparating => c.cut_type == CutType::EdgeSeparating,
            CutFilter::Nontrivial => c.cut_type == CutType::Nontrivial,
            CutFilter::P3Separating => {
                c.cut_type == CutType::Nontrivial && c.tags.contains(&ShapeTag::P3)
            }
            CutFilter::C4Separating => {
                c.cut_type == CutType::Nontrivial && c.tags.contains(&ShapeTag::C4)
            }
        }
    }
}

/// Sums, over k-subsets of distillation edges whose removal disconnects the
/// distillation and whose classification matches the filter, the product of
/// the chain lengths. With `CutFilter::Any` this is the induced count
/// mu_k^I; the typed filters give mu_k^V, mu_k^E, mu_k^N and the P3/C4
/// splits.
pub fn induced_cut_count(d: &ChainDecomposition, k: usize, filter: CutFilter) -> u128 {
    let dist = d.distillation();
    let lengths = d.lengths();
    let mut total: u128 = 0;
    for_each_combination(dist.edge_count(), k, &mut |subset| {
        if dist.is_connected_without(subset) {
            return;
        }
        if filter != CutFilter::Any {
            let class = classify_cut(dist, subset).expect("disconnecting subset is a cut");
            if !filter.matches(&class) {
                return;
            }
        }
        let product = subset
            .iter()
            .map(|&e| lengths[e] as u128)
            .try_fold(1u128, u128::checked_mul)
            .expect("induced count overflow");
        total = total.checked_add(product).expect("induced count overflow");
    });
    total
}

/// Lexicographic order on spectra of equal length.
pub fn lexicographic_compare(a: &CutSpectrum, b: &CutSpectrum) -> Result<Ordering> {
    if a.m != b.m {
        return Err(Error::SpectrumLengthMismatch {
            left: a.m,
            right: b.m,
        });
    }
    Ok(a.mu.cmp(&b.mu))
}
