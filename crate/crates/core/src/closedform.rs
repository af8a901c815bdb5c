//! Closed-form cut counts: binomials, elementary symmetric sums, the
//! chain-calculus spectrum formula, per-type 4-cut counts for subdivisions
//! of the Wagner and cube graphs, the vertex-cut profile function, and the
//! five-term decomposition of the difference mu_5(G_n) - mu_5(H_n).

use crate::chains::ChainDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, NamedGraphSpec, CUBE_EDGES, WAGNER_EDGES};
use crate::spectrum::{induced_cut_count, CutFilter};
use serde::Serialize;
use std::collections::BTreeSet;

/// C(m, k) as an exact 128-bit integer; 0 when k > m.
pub fn binomial(m: u64, k: u64) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut result: u128 = 1;
    for i in 0..k {
        // multiply first, divide by (i+1): product of i+1 consecutive
        // integers is divisible by (i+1)!
        result = result
            .checked_mul((m - i) as u128)
            .expect("binomial overflow");
        result /= (i + 1) as u128;
    }
    result
}

/// Elementary symmetric sum of degree k over the lengths, by one DP pass.
pub fn elementary_symmetric(lengths: &[usize], k: usize) -> u128 {
    if k > lengths.len() {
        return 0;
    }
    let mut e = vec![0u128; k + 1];
    e[0] = 1;
    for &x in lengths {
        let x = x as u128;
        for j in (1..=k).rev() {
            let add = e[j - 1].checked_mul(x).expect("symmetric sum overflow");
            e[j] = e[j].checked_add(add).expect("symmetric sum overflow");
        }
    }
    e[k]
}

/// Number of k-edge-cuts of the source graph through the chain calculus:
/// C(m,k) minus the all-chain-subset term plus the induced-cut correction.
pub fn mu_k_closed(d: &ChainDecomposition, k: usize) -> Result<u128> {
    let m = d.source().edge_count();
    if k > m {
        return Err(Error::EdgeOutOfRange { edge: k, m });
    }
    let lengths = d.lengths();
    let all = binomial(m as u64, k as u64);
    let phi = elementary_symmetric(&lengths, k);
    let induced = induced_cut_count(d, k, CutFilter::Any);
    Ok(all - phi + induced)
}

/// Base selector for the corank-5 subdivision formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CubicBase {
    Wagner,
    Cube,
}

impl CubicBase {
    pub fn graph(self) -> Multigraph {
        match self {
            CubicBase::Wagner => Multigraph::wagner(),
            CubicBase::Cube => Multigraph::cube(),
        }
    }

    pub fn edges(self) -> &'static [(usize, usize); 12] {
        match self {
            CubicBase::Wagner => &WAGNER_EDGES,
            CubicBase::Cube => &CUBE_EDGES,
        }
    }

    /// The three 4-edge classes whose overlap with X drives the nontrivial
    /// 4-cut count. For the cube all three are cuts; for the Wagner graph
    /// only the first two are (the third class, the chords, leaves the rim
    /// intact), so the count formula sums over 2 classes there.
    pub fn quad_classes(self) -> [[usize; 4]; 3] {
        let pairs: [[(usize, usize); 4]; 3] = match self {
            CubicBase::Cube => [
                [(1, 2), (3, 4), (5, 6), (7, 0)],
                [(0, 1), (2, 7), (3, 6), (4, 5)],
                [(0, 5), (1, 4), (2, 3), (6, 7)],
            ],
            CubicBase::Wagner => [
                [(0, 1), (2, 3), (4, 5), (6, 7)],
                [(1, 2), (3, 4), (5, 6), (7, 0)],
                [(0, 4), (1, 5), (2, 6), (3, 7)],
            ],
        };
        pairs.map(|class| class.map(|(u, v)| self.edge_id(u, v)))
    }

    pub fn cut_class_count(self) -> usize {
        match self {
            CubicBase::Cube => 3,
            CubicBase::Wagner => 2,
        }
    }

    fn edge_id(self, u: usize, v: usize) -> usize {
        self.edges()
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v))
            .expect("edge of the base graph")
    }
}

/// Incidence profile of an edge subset X of a cubic base graph.
///
/// `p[i]` counts vertices incident to exactly i edges of X; `q[j]` counts
/// edges whose incident edges (sharing exactly one endpoint, the edge itself
/// excluded) include exactly j members of X; `z[k]` is the overlap of X with
/// the k-th quad class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileCounts {
    pub p: [usize; 4],
    pub q: [usize; 5],
    pub z: [usize; 3],
}

pub fn profile_counts(base: CubicBase, x: &BTreeSet<usize>) -> Result<ProfileCounts> {
    for &e in x {
        if e >= 12 {
            return Err(Error::EdgeOutOfRange { edge: e, m: 12 });
        }
    }
    let g = base.graph();
    let inc = g.incidence();
    let mut p = [0usize; 4];
    for v in 0..8 {
        let hits = inc[v].iter().filter(|e| x.contains(e)).count();
        p[hits] += 1;
    }
    let mut q = [0usize; 5];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let hits = inc[u]
            .iter()
            .chain(inc[v].iter())
            .filter(|&&e| e != id && x.contains(&e))
            .count();
        q[hits] += 1;
    }
    let classes = base.quad_classes();
    let z = [0, 1, 2].map(|k| classes[k].iter().filter(|e| x.contains(e)).count());
    Ok(ProfileCounts { p, q, z })
}

fn pow(base: u128, exp: usize) -> u128 {
    base.checked_pow(exp as u32).expect("power overflow")
}

/// Splits n + 4 = 12 s + r with r in 0..12; needs n >= 8 so that s >= 1.
pub fn split_sr(n: usize) -> Result<(usize, usize)> {
    if n < 8 {
        return Err(Error::NBelowMinimum { n, min: 8 });
    }
    Ok(((n + 4) / 12, (n + 4) % 12))
}

/// Per-type induced 4-cut counts (vertex-, edge-, nontrivial-separating) of
/// the subdivision of `base` that stretches the edges of X to length s+1 and
/// the rest to length s, where n + 4 = 12 s + r and |X| = r.
pub fn mu4_parts_closed(
    base: CubicBase,
    x: &BTreeSet<usize>,
    n: usize,
) -> Result<(u128, u128, u128)> {
    let (s, r) = split_sr(n)?;
    if x.len() != r {
        return Err(Error::BadSubdivision(format!(
            "|X| = {} but n = {n} needs r = {r}",
            x.len()
        )));
    }
    let profile = profile_counts(base, x)?;
    let s = s as u128;
    let m = (n + 4) as u128;
    let mut mu_v = 0u128;
    for (i, &count) in profile.p.iter().enumerate() {
        mu_v += count as u128 * pow(s + 1, i) * pow(s, 3 - i) * (m - 3 * s - i as u128);
    }
    let mut mu_e = 0u128;
    for (j, &count) in profile.q.iter().enumerate() {
        mu_e += count as u128 * pow(s + 1, j) * pow(s, 4 - j);
    }
    let mut mu_n = 0u128;
    for k in 0..base.cut_class_count() {
        let z = profile.z[k];
        mu_n += pow(s + 1, z) * pow(s, 4 - z);
    }
    Ok((mu_v, mu_e, mu_n))
}

/// q_j(s) = (s+1)^j s^(3-j): the vertex-cut weight of a branch vertex with j
/// long chains.
pub fn q_of(s: u64, j: usize) -> u128 {
    assert!(j <= 3, "j ranges over 0..=3");
    pow(s as u128 + 1, j) * pow(s as u128, 3 - j)
}

/// g_s(x) = sum of q_{x_v}(s) over the branch vertices.
pub fn g_s_value(s: u64, xs: &[u8]) -> u128 {
    xs.iter().map(|&x| q_of(s, x as usize)).sum()
}

/// The edge set X_r of the extremal subdivision: empty for r = 0, the
/// special alternating set for r = 8, otherwise the first r edges e1..er.
pub fn gn_edge_set(n: usize) -> Result<BTreeSet<usize>> {
    let (_, r) = split_sr(n)?;
    Ok(match r {
        0 => BTreeSet::new(),
        8 => BTreeSet::from([0, 1, 2, 3, 5, 7, 9, 11]),
        _ => (0..r).collect(),
    })
}

/// Chain lengths of G_n over the Wagner edge order e1..e12.
pub fn gn_lengths(n: usize) -> Result<[usize; 12]> {
    let (s, _) = split_sr(n)?;
    let x = gn_edge_set(n)?;
    let mut lengths = [s; 12];
    for &e in &x {
        lengths[e] = s + 1;
    }
    Ok(lengths)
}

/// Chain lengths of the competitor H_n: G_n with the first chord stretched
/// and the first rim edge shortened. Undefined when the rim chain already
/// has length 1, which happens at n < 13 and at n = 16.
pub fn hn_lengths(n: usize) -> Result<[usize; 12]> {
    if n < 13 {
        return Err(Error::NBelowMinimum { n, min: 13 });
    }
    let mut lengths = gn_lengths(n)?;
    if lengths[4] <= 1 {
        return Err(Error::HnUndefined { n });
    }
    lengths[0] += 1;
    lengths[4] -= 1;
    Ok(lengths)
}

/// A base graph plus per-edge chain lengths; realizes the subdivision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionSpec {
    pub base: SubdivisionBase,
    pub lengths: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubdivisionBase {
    Wagner,
    Cube,
    Mobius(usize),
}

impl SubdivisionSpec {
    pub fn base_graph(&self) -> Result<Multigraph> {
        match self.base {
            SubdivisionBase::Wagner => Ok(Multigraph::wagner()),
            SubdivisionBase::Cube => Ok(Multigraph::cube()),
            SubdivisionBase::Mobius(p) => Multigraph::named(NamedGraphSpec::Mobius(p)),
        }
    }

    pub fn realize(&self) -> Result<Multigraph> {
        self.base_graph()?.subdivide_each(&self.lengths)
    }
}

/// The five exact difference terms behind mu_5(G_n) - mu_5(H_n):
/// the symmetric-sum shift and the vertex, edge, P3, and C4 induced-count
/// differences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mu5DiffTerms {
    pub a1: i128,
    pub a2: i128,
    pub a3: i128,
    pub a4: i128,
    pub a5: i128,
}

impl Mu5DiffTerms {
    pub fn total(&self) -> i128 {
        self.a1 + self.a2 + self.a3 + self.a4 + self.a5
    }
}

/// Caps the scan range so the degree-5 products below stay far from i128
/// overflow.
const MU5_N_LIMIT: usize = 100_000_000;

/// Evaluates the five difference terms at n, on the G_n length tuple.
///
/// The formulas also evaluate at n = 16, where H_n itself has no
/// realization; callers that need the graph difference must skip that n.
pub fn mu5_diff_terms(n: usize) -> Result<Mu5DiffTerms> {
    if n < 13 {
        return Err(Error::NBelowMinimum { n, min: 13 });
    }
    if n > MU5_N_LIMIT {
        return Err(Error::InvalidParameter {
            kind: "mu5 scan",
            reason: format!("n = {n} beyond supported limit {MU5_N_LIMIT}"),
        });
    }
    Ok(mu5_diff_terms_for(n, &gn_lengths(n)?))
}

pub fn mu5_diff_total(n: usize) -> Result<i128> {
    Ok(mu5_diff_terms(n)?.total())
}

/// The raw five-term evaluation on an arbitrary length tuple. Indexing
/// follows the 1-based edge labels e1..e12.
pub fn mu5_diff_terms_for(n: usize, lengths: &[usize; 12]) -> Mu5DiffTerms {
    let l = |i: usize| lengths[i - 1] as i128;
    let n128 = n as i128;
    let c = l(1) + 1 - l(5);

    // sum over 3-subsets of the other ten lengths
    let rest: Vec<usize> = (1..=12)
        .filter(|&i| i != 1 && i != 5)
        .map(|i| lengths[i - 1])
        .collect();
    let a1 = (l(5) - l(1) - 1) * elementary_symmetric(&rest, 3) as i128;

    let pair_sum = |excluded: &[usize]| -> i128 {
        let mut sum = 0;
        for i in 1..=12 {
            if excluded.contains(&i) {
                continue;
            }
            for j in i + 1..=12 {
                if excluded.contains(&j) {
                    continue;
                }
                sum += l(i) * l(j);
            }
        }
        sum
    };
    let lin_sum = |excluded: &[usize]| -> i128 {
        (1..=12)
            .filter(|i| !excluded.contains(i))
            .map(|i| l(i))
            .sum()
    };

    let mut a2 = l(3) * l(6) * l(9) * l(10) + l(4) * l(7) * l(9) * l(10)
        - l(2) * l(3) * l(7) * l(12)
        - l(3) * l(6) * l(9) * l(12);
    a2 += c * (l(2) * l(7) * l(12)
        + l(4) * l(7) * l(10)
        + l(3) * l(6) * l(9)
        + l(2) * l(6) * l(11)
        + l(4) * l(8) * l(11));
    a2 -= c * (l(8) * l(9) * l(10) + l(3) * l(8) * l(12) + l(4) * l(8) * l(11));
    a2 += l(3) * l(12) * (pair_sum(&[1, 3, 5, 12]) + c * lin_sum(&[1, 3, 5, 12]));
    a2 += l(9) * l(10) * (c * lin_sum(&[1, 5, 9, 10]) - pair_sum(&[1, 5, 9, 10]));
    a2 += l(8) * c * pair_sum(&[1, 5, 8]);

    let a3 = l(8) * l(9) * l(10) * (n128 + 4 - l(1) - l(5) - l(8) - l(9) - l(10))
        + l(6) * l(9) * l(12) * (n128 + 5 - l(3) - 2 * l(5) - l(6) - l(9) - l(12))
        + l(2) * l(3) * l(7) * (n128 + 5 - l(2) - l(3) - 2 * l(5) - l(7) - l(12))
        - l(3) * l(8) * l(12) * (n128 + 4 - l(1) - l(3) - l(5) - l(8) - l(12))
        - l(3) * l(6) * l(10) * (n128 + 3 - 2 * l(1) - l(3) - l(6) - l(9) - l(10))
        - l(4) * l(7) * l(9) * (n128 + 3 - 2 * l(1) - l(4) - l(7) - l(9) - l(10))
        + l(4) * l(11) * c * (n128 + 4 - l(1) - l(4) - l(5) - l(8) - l(11));

    let mut a4 = c * (l(2) * l(4) * l(6) + l(6) * l(10) * l(12) + l(7) * l(10) * l(11));
    a4 += l(2) * l(3) * l(4) * l(10)
        + l(3) * l(6) * l(7) * l(11)
        + l(2) * l(6) * l(7) * l(9)
        + l(4) * l(7) * l(8) * l(9)
        + l(3) * l(6) * l(8) * l(10)
        + l(2) * l(9) * l(11) * l(12)
        + l(4) * l(9) * l(10) * l(11);
    a4 -= l(2) * l(3) * l(7) * l(8)
        + l(2) * l(4) * l(9) * l(12)
        + l(3) * l(4) * l(6) * l(7)
        + l(2) * l(3) * l(10) * l(11)
        + l(3) * l(4) * l(11) * l(12)
        + l(6) * l(8) * l(9) * l(12)
        + l(7) * l(8) * l(9) * l(11);

    let a5 = l(7) * l(9) * l(11) * (n128 + 5 - 2 * l(5) - l(7) - l(9) - l(11));

    Mu5DiffTerms { a1, a2, a3, a4, a5 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::chain_decomposition;
    use crate::graph::for_each_combination;
    use crate::spectrum::cut_spectrum_bruteforce;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(12, 5), 792);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        // independent product route for a larger case
        let mut expected: u128 = 1;
        for i in 0..5u128 {
            expected *= 204 - i;
        }
        expected /= 120;
        assert_eq!(binomial(204, 5), expected);
        assert_eq!(binomial(30, 15), 155_117_520);
    }

    #[test]
    fn symmetric_sum_examples() {
        assert_eq!(elementary_symmetric(&[1; 12], 5), 792);
        assert_eq!(elementary_symmetric(&[2, 3], 2), 6);
        assert_eq!(elementary_symmetric(&[2, 3], 0), 1);
        assert_eq!(elementary_symmetric(&[2, 3], 3), 0);
    }

    #[test]
    fn symmetric_sum_matches_naive_subsets() {
        let lengths = [2usize, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1];
        for k in 0..=12 {
            let mut naive: u128 = 0;
            for_each_combination(12, k, &mut |subset| {
                naive += subset.iter().map(|&i| lengths[i] as u128).product::<u128>();
            });
            assert_eq!(elementary_symmetric(&lengths, k), naive, "k = {k}");
        }
    }

    #[test]
    fn fair_tuples_maximize_symmetric_sums() {
        // over all positive t-tuples with fixed sum, the maximum of the
        // degree-k sum is attained exactly at spread-at-most-1 tuples,
        // and grows strictly with the number of parts
        fn compositions(t: usize, m: usize) -> Vec<Vec<usize>> {
            if t == 1 {
                return vec![vec![m]];
            }
            let mut out = Vec::new();
            for first in 1..=m - t + 1 {
                for mut rest in compositions(t - 1, m - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for t in 2..=6usize {
            for m in t..=14usize {
                let all = compositions(t, m);
                for k in 2..=t {
                    let max = all
                        .iter()
                        .map(|c| elementary_symmetric(c, k))
                        .max()
                        .unwrap();
                    for c in &all {
                        let fair = c.iter().max().unwrap() - c.iter().min().unwrap() <= 1;
                        let value = elementary_symmetric(c, k);
                        assert_eq!(value == max, fair, "t={t} m={m} k={k} tuple {c:?}");
                    }
                }
            }
        }
        // strict growth in t for 2 <= k < t
        for t in 2..=5usize {
            for m in (t + 1)..=14usize {
                for k in 2..t {
                    let max_t = compositions(t, m)
                        .iter()
                        .map(|c| elementary_symmetric(c, k))
                        .max()
                        .unwrap();
                    let max_t1 = compositions(t + 1, m)
                        .iter()
                        .map(|c| elementary_symmetric(c, k))
                        .max()
                        .unwrap();
                    assert!(max_t < max_t1, "t={t} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn closed_spectrum_on_wagner() {
        let d = chain_decomposition(&Multigraph::wagner()).unwrap();
        assert_eq!(mu_k_closed(&d, 3).unwrap(), 8);
        assert_eq!(mu_k_closed(&d, 4).unwrap(), 86);
        let brute = cut_spectrum_bruteforce(&Multigraph::wagner()).unwrap();
        for k in 0..=12 {
            assert_eq!(mu_k_closed(&d, k).unwrap(), brute.mu[k], "k = {k}");
        }
        assert!(mu_k_closed(&d, 13).is_err());
    }

    #[test]
    fn closed_spectrum_matches_brute_force_on_g13() {
        let g13 = Multigraph::wagner()
            .subdivide_each(&gn_lengths(13).unwrap())
            .unwrap();
        let d = chain_decomposition(&g13).unwrap();
        let brute = cut_spectrum_bruteforce(&g13).unwrap();
        for k in 0..=17 {
            assert_eq!(mu_k_closed(&d, k).unwrap(), brute.mu[k], "k = {k}");
        }
    }

    #[test]
    fn profile_examples() {
        let empty = profile_counts(CubicBase::Wagner, &BTreeSet::new()).unwrap();
        assert_eq!(empty.p, [8, 0, 0, 0]);
        assert_eq!(empty.q, [12, 0, 0, 0, 0]);
        assert_eq!(empty.z, [0, 0, 0]);

        let x5: BTreeSet<usize> = (0..5).collect();
        let profile = profile_counts(CubicBase::Wagner, &x5).unwrap();
        assert_eq!(profile.p, [0, 6, 2, 0]);
        assert_eq!(profile.p.iter().sum::<usize>(), 8);
        assert_eq!(profile.q, [2, 2, 6, 2, 0]);
        assert_eq!(profile.q.iter().sum::<usize>(), 12);
        assert_eq!(profile.z, [1, 0, 4]);

        let all: BTreeSet<usize> = (0..12).collect();
        let saturated = profile_counts(CubicBase::Cube, &all).unwrap();
        assert_eq!(saturated.p, [0, 0, 0, 8]);
        assert_eq!(saturated.q, [0, 0, 0, 0, 12]);
        assert_eq!(saturated.z, [4, 4, 4]);

        assert!(profile_counts(CubicBase::Wagner, &BTreeSet::from([12])).is_err());
    }

    #[test]
    fn quad_classes_cut_behaviour() {
        // all three classes disconnect the cube; the chord class of the
        // Wagner graph does not
        let q = Multigraph::cube();
        for class in CubicBase::Cube.quad_classes() {
            assert!(!q.is_connected_without(&class));
        }
        let w = Multigraph::wagner();
        let classes = CubicBase::Wagner.quad_classes();
        assert!(!w.is_connected_without(&classes[0]));
        assert!(!w.is_connected_without(&classes[1]));
        assert!(w.is_connected_without(&classes[2]));
    }

    #[test]
    fn mu4_parts_base_cases() {
        let none = BTreeSet::new();
        assert_eq!(
            mu4_parts_closed(CubicBase::Wagner, &none, 8).unwrap(),
            (72, 12, 2)
        );
        assert_eq!(
            mu4_parts_closed(CubicBase::Cube, &none, 8).unwrap(),
            (72, 12, 3)
        );
        let x5: BTreeSet<usize> = (0..5).collect();
        assert_eq!(
            mu4_parts_closed(CubicBase::Wagner, &x5, 13).unwrap(),
            (252, 46, 3)
        );
        assert!(mu4_parts_closed(CubicBase::Wagner, &x5, 14).is_err());
    }

    #[test]
    fn mu4_parts_match_typed_enumeration() {
        // every vertex-fair X over both bases at s = 1
        for base in [CubicBase::Wagner, CubicBase::Cube] {
            let bg = base.graph();
            for r in 0..12usize {
                let n = 8 + r;
                for_each_combination(12, r, &mut |subset| {
                    let x: BTreeSet<usize> = subset.iter().copied().collect();
                    let mut lengths = [1usize; 12];
                    for &e in &x {
                        lengths[e] = 2;
                    }
                    let g = bg.subdivide_each(&lengths).unwrap();
                    let d = chain_decomposition(&g).unwrap();
                    if !crate::chains::is_vertex_fair(&d) {
                        return;
                    }
                    let (v, e, nn) = mu4_parts_closed(base, &x, n).unwrap();
                    assert_eq!(v, induced_cut_count(&d, 4, CutFilter::VertexSeparating));
                    assert_eq!(e, induced_cut_count(&d, 4, CutFilter::EdgeSeparating));
                    assert_eq!(nn, induced_cut_count(&d, 4, CutFilter::Nontrivial));
                });
            }
        }
    }

    #[test]
    fn q_weights_and_g() {
        assert_eq!([q_of(1, 0), q_of(1, 1), q_of(1, 2), q_of(1, 3)], [1, 2, 4, 8]);
        for s in 1..=4u64 {
            for j in 0..3 {
                assert!(q_of(s, j) < q_of(s, j + 1), "strictly increasing in j");
            }
        }
        assert_eq!(g_s_value(1, &[1, 1, 1, 1]), 8);
    }

    #[test]
    fn g_minimum_is_attained_at_fair_tuples() {
        // 2p = 4 vertices, r = 2: tuples over {0..3}^4 summing to 4
        let s = 1;
        let mut best = u128::MAX;
        let mut tuples = Vec::new();
        for a in 0..=3u8 {
            for b in 0..=3u8 {
                for c in 0..=3u8 {
                    for d in 0..=3u8 {
                        if a + b + c + d == 4 {
                            let t = [a, b, c, d];
                            let v = g_s_value(s, &t);
                            best = best.min(v);
                            tuples.push((t, v));
                        }
                    }
                }
            }
        }
        assert_eq!(best, 8);
        for (t, v) in tuples {
            let fair = t.iter().max().unwrap() - t.iter().min().unwrap() <= 1;
            assert_eq!(v == best, fair, "tuple {t:?}");
        }
    }

    #[test]
    fn extremal_length_tuples() {
        assert_eq!(gn_lengths(8).unwrap(), [1; 12]);
        assert_eq!(gn_lengths(20).unwrap(), [2; 12]);
        assert_eq!(
            gn_lengths(13).unwrap(),
            [2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1]
        );
        assert_eq!(
            gn_lengths(16).unwrap(),
            [2, 2, 2, 2, 1, 2, 1, 2, 1, 2, 1, 2]
        );
        assert_eq!(
            hn_lengths(13).unwrap(),
            [3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]
        );
        assert_eq!(
            hn_lengths(20).unwrap(),
            [3, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2]
        );
        assert!(gn_lengths(7).is_err());
        assert!(hn_lengths(12).is_err());
        // the r = 8, s = 1 case leaves no room to shorten the rim chain
        assert_eq!(hn_lengths(16).unwrap_err(), Error::HnUndefined { n: 16 });
        assert!(hn_lengths(28).is_ok());
    }

    #[test]
    fn mu5_terms_at_13() {
        let terms = mu5_diff_terms(13).unwrap();
        assert_eq!(
            (terms.a1, terms.a2, terms.a3, terms.a4, terms.a5),
            (-253, 131, 23, 4, 11)
        );
        assert_eq!(terms.total(), -84);
        assert!(mu5_diff_terms(12).is_err());
    }

    #[test]
    fn first_term_vanishes_when_shift_is_neutral() {
        // lengths with l5 = l1 + 1 make the symmetric-sum difference zero
        let lengths = [1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1];
        let terms = mu5_diff_terms_for(13, &lengths);
        assert_eq!(terms.a1, 0);
    }

    #[test]
    fn c4_growth_term_example() {
        // n = 13: l7 = l9 = l11 = 1, l5 = 2 gives 1 * (18 - 4 - 3)
        let terms = mu5_diff_terms(13).unwrap();
        assert_eq!(terms.a5, 11);
    }

    #[test]
    fn subdivision_spec_realizes() {
        let spec = SubdivisionSpec {
            base: SubdivisionBase::Wagner,
            lengths: gn_lengths(13).unwrap().to_vec(),
        };
        let g = spec.realize().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (13, 17));
        let bad = SubdivisionSpec {
            base: SubdivisionBase::Wagner,
            lengths: vec![0; 12],
        };
        assert!(bad.realize().is_err());
        let mob = SubdivisionSpec {
            base: SubdivisionBase::Mobius(3),
            lengths: vec![2; 9],
        };
        let g = mob.realize().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (15, 18));
    }
}
