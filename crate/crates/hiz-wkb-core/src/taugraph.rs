//! Multigraphs labelling tau-monomials and their orbit sums.
//!
//! A tau-monomial is a product of factors `tau_{ij} = (x_i - x_j)(lambda_i -
//! lambda_j)` and is encoded, up to relabelling the spectrum slots, by a
//! multigraph on the participating slots.  This module enumerates the graphs
//! through order four, evaluates their orbit sums as polynomials, counts
//! their embeddings into two-block degenerate spectra, and carries the
//! catalogue of characteristic differentials used to read single
//! coefficients out of a series.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;


use crate::field::{rat, Rat};
use crate::polyring::{DiffSpec, MPoly, MPolyQ, Vars};
use crate::upoly::UPoly;

/// An edge `{a, b}` with multiplicity, one-based vertices, `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TauEdge {
    pub a: u8,
    pub b: u8,
    pub mult: u8,
}

/// A multigraph on vertices `1..=v` with no isolated vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TauGraph {
    pub v: u8,
    pub edges: Vec<TauEdge>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum TauGraphError {
    /// The differential catalogue stops at order four.
    NoCataloguedDifferential { order: u32 },
    UnknownName { name: String },
}

impl core::fmt::Display for TauGraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TauGraphError::NoCataloguedDifferential { order } => {
                write!(f, "no catalogued differential at order {}", order)
            }
            TauGraphError::UnknownName { name } => write!(f, "unknown graph name {}", name),
        }
    }
}

impl TauGraph {
    /// Builds from an edge list with explicit multiplicities, relabelling
    /// into canonical form.
    pub fn from_edges(edges: &[(u8, u8, u8)]) -> Self {
        let mut map: BTreeMap<(u8, u8), u8> = BTreeMap::new();
        for &(a, b, m) in edges {
            assert!(a != b && m > 0);
            let key = (a.min(b), a.max(b));
            *map.entry(key).or_insert(0) += m;
        }
        let mut vertices: Vec<u8> = map
            .keys()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<u8>>()
            .into_iter()
            .collect();
        vertices.sort_unstable();
        let relabel: BTreeMap<u8, u8> = vertices
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i as u8 + 1))
            .collect();
        let edges: Vec<TauEdge> = map
            .into_iter()
            .map(|((a, b), mult)| {
                let (x, y) = (relabel[&a], relabel[&b]);
                TauEdge {
                    a: x.min(y),
                    b: x.max(y),
                    mult,
                }
            })
            .collect();
        let g = TauGraph {
            v: vertices.len() as u8,
            edges,
        };
        g.canonical()
    }

    /// Total edge multiplicity, the order of the tau-monomial.
    pub fn order(&self) -> u32 {
        self.edges.iter().map(|e| e.mult as u32).sum()
    }

    /// Number of vertices.
    pub fn vertices(&self) -> u8 {
        self.v
    }

    /// True when some edge has multiplicity at least `m`.
    pub fn has_multiplicity_at_least(&self, m: u8) -> bool {
        self.edges.iter().any(|e| e.mult >= m)
    }

    fn relabelled(&self, perm: &[usize]) -> Vec<TauEdge> {
        let mut edges: Vec<TauEdge> = self
            .edges
            .iter()
            .map(|e| {
                let a = perm[(e.a - 1) as usize] as u8 + 1;
                let b = perm[(e.b - 1) as usize] as u8 + 1;
                TauEdge {
                    a: a.min(b),
                    b: a.max(b),
                    mult: e.mult,
                }
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// The lexicographically least relabelling.
    pub fn canonical(&self) -> Self {
        let mut best: Option<Vec<TauEdge>> = None;
        for perm in crate::jet::permutations(self.v as usize) {
            let cand = self.relabelled(&perm);
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        TauGraph {
            v: self.v,
            edges: best.unwrap_or_default(),
        }
    }

    /// Order of the automorphism group.
    pub fn aut_order(&self) -> u64 {
        let canon = self.canonical();
        crate::jet::permutations(self.v as usize)
            .iter()
            .filter(|perm| canon.relabelled(perm) == canon.edges)
            .count() as u64
    }

    /// Sum of the distinct tau-monomials with this pattern on a
    /// `k`-dimensional spectrum.  Zero when the graph does not embed.
    pub fn orbit_sum(&self, k: usize) -> MPolyQ {
        let vars = Vars::new(k);
        let mut out = MPoly::zero(vars.nvars());
        let v = self.v as usize;
        if v > k {
            return out;
        }
        let mut seen: BTreeSet<Vec<TauEdge>> = BTreeSet::new();
        let mut assignment: Vec<usize> = Vec::with_capacity(v);
        let mut used = vec![false; k];
        embed(
            self,
            k,
            &mut assignment,
            &mut used,
            &mut seen,
        );
        for key in seen {
            let mut term = MPoly::one(vars.nvars());
            for e in key {
                let t = vars.tau(e.a as usize, e.b as usize);
                for _ in 0..e.mult {
                    term = term * t.clone();
                }
            }
            out = out + term;
        }
        out
    }

    /// Embedding count polynomial into a two-block degenerate spectrum.
    ///
    /// Every edge of the graph must straddle the two blocks, so the count
    /// runs over proper 2-colorings.  For [`Degenerate::Disjoint`] both
    /// blocks have `q` slots and the count is a polynomial in `q` alone;
    /// the raw value of the orbit sum on that spectrum is `(-1)^order`
    /// times the count.  For [`Degenerate::Overlap`] the blocks have `q`
    /// and `k - q` slots and the raw value equals the count.  Graphs with
    /// an odd cycle admit no proper coloring and count zero.
    pub fn eval_q_degenerate(&self, pattern: Degenerate) -> UPoly<Rat> {
        let v = self.v as usize;
        let aut = rat(self.aut_order() as i64);
        let qpoly = |n: u32| -> UPoly<Rat> {
            // falling factorial (q)_n as a polynomial in q
            let roots: Vec<Rat> = (0..n as i64).map(rat).collect();
            UPoly::from_roots(&roots)
        };
        let mut total = UPoly::zero();
        'coloring: for mask in 0u32..(1 << v) {
            for e in &self.edges {
                let ca = mask >> (e.a - 1) & 1;
                let cb = mask >> (e.b - 1) & 1;
                if ca == cb {
                    continue 'coloring;
                }
            }
            let na = mask.count_ones();
            let nb = v as u32 - na;
            let piece = match pattern {
                Degenerate::Disjoint => qpoly(na) * qpoly(nb),
                Degenerate::Overlap { k } => shifted_falling(k, nb) * qpoly(na),
            };
            total = total + piece;
        }
        total.scale(&(rat(1) / aut))
    }
}

/// Two-block degenerate spectrum patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degenerate {
    /// `x` supported on the first `q` slots, `lambda` on the next `q`.
    Disjoint,
    /// `x` and `lambda` both supported on the same `q` of `k` slots.
    Overlap { k: u32 },
}

/// `(k - q)(k - q - 1) ... (k - q - n + 1)` as a polynomial in `q`.
fn shifted_falling(k: u32, n: u32) -> UPoly<Rat> {
    let mut acc = UPoly::one();
    for m in 0..n as i64 {
        // factor (k - m) - q
        let lin = UPoly::from_coeffs(vec![rat(k as i64 - m), rat(-1)]);
        acc = acc * lin;
    }
    acc
}

fn embed(
    g: &TauGraph,
    k: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    seen: &mut BTreeSet<Vec<TauEdge>>,
) {
    let v = g.v as usize;
    if assignment.len() == v {
        let mut key: Vec<TauEdge> = g
            .edges
            .iter()
            .map(|e| {
                let a = assignment[(e.a - 1) as usize] as u8 + 1;
                let b = assignment[(e.b - 1) as usize] as u8 + 1;
                TauEdge {
                    a: a.min(b),
                    b: a.max(b),
                    mult: e.mult,
                }
            })
            .collect();
        key.sort_unstable();
        seen.insert(key);
        return;
    }
    for slot in 0..k {
        if used[slot] {
            continue;
        }
        used[slot] = true;
        assignment.push(slot);
        embed(g, k, assignment, used, seen);
        assignment.pop();
        used[slot] = false;
    }
}

/// The named catalogue through order four: name, edge list, characteristic
/// differential (x indices, lambda indices) and its value on the graph's
/// own orbit sum.
#[allow(clippy::type_complexity)]
fn catalogue() -> Vec<(&'static str, Vec<(u8, u8, u8)>, (&'static [u8], &'static [u8]), i64)> {
    vec![
        ("I", vec![(1, 2, 1)], (&[2], &[1]), -1),
        ("\u{39b}", vec![(1, 2, 1), (1, 3, 1)], (&[2, 3], &[1, 1]), 2),
        ("II", vec![(1, 2, 2)], (&[2, 2], &[1, 1]), 4),
        ("I,I", vec![(1, 2, 1), (3, 4, 1)], (&[3, 4], &[1, 2]), 2),
        ("III", vec![(1, 2, 3)], (&[2, 2, 2], &[1, 1, 1]), -36),
        (
            "\u{2220}\u{332}",
            vec![(1, 2, 2), (1, 3, 1)],
            (&[2, 2, 3], &[1, 1, 1]),
            -12,
        ),
        (
            "\u{25b3}",
            vec![(1, 2, 1), (1, 3, 1), (2, 3, 1)],
            (&[3, 3, 2], &[1, 1, 2]),
            -4,
        ),
        (
            "Y",
            vec![(1, 2, 1), (1, 3, 1), (1, 4, 1)],
            (&[2, 3, 4], &[1, 1, 1]),
            -6,
        ),
        (
            "N",
            vec![(1, 2, 1), (1, 3, 1), (3, 4, 1)],
            (&[2, 2, 4], &[1, 1, 3]),
            -4,
        ),
        (
            "II,I",
            vec![(1, 2, 2), (3, 4, 1)],
            (&[2, 2, 4], &[1, 1, 3]),
            -4,
        ),
        (
            "\u{39b},I",
            vec![(1, 2, 1), (1, 3, 1), (4, 5, 1)],
            (&[3, 4, 5], &[1, 1, 2]),
            -6,
        ),
        (
            "I,I,I",
            vec![(1, 2, 1), (3, 4, 1), (5, 6, 1)],
            (&[4, 5, 6], &[1, 2, 3]),
            -6,
        ),
        (
            "X",
            vec![(1, 2, 1), (1, 3, 1), (1, 4, 1), (1, 5, 1)],
            (&[2, 3, 4, 5], &[1, 1, 1, 1]),
            24,
        ),
        (
            "\u{2220}\u{2220}",
            vec![(1, 2, 1), (1, 3, 1), (3, 4, 1), (3, 5, 1)],
            (&[3, 3, 4, 5], &[1, 1, 1, 2]),
            12,
        ),
        (
            "\u{22b5}",
            vec![(1, 2, 1), (1, 3, 1), (2, 3, 1), (3, 4, 1)],
            (&[2, 2, 3, 4], &[1, 1, 1, 2]),
            -24,
        ),
        (
            "\u{25a1}",
            vec![(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 1)],
            (&[2, 2, 4, 4], &[1, 1, 3, 3]),
            16,
        ),
        (
            "M",
            vec![(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1)],
            (&[2, 3, 4, 5], &[1, 1, 2, 2]),
            -24,
        ),
        (
            "N,I",
            vec![(1, 2, 1), (1, 3, 1), (3, 4, 1), (5, 6, 1)],
            (&[1, 4, 5, 6], &[1, 1, 2, 3]),
            -48,
        ),
        (
            "Y,I",
            vec![(1, 2, 1), (1, 3, 1), (1, 4, 1), (5, 6, 1)],
            (&[3, 4, 5, 6], &[1, 1, 1, 2]),
            24,
        ),
        (
            "\u{25b3},I",
            vec![(1, 2, 1), (1, 3, 1), (2, 3, 1), (4, 5, 1)],
            (&[2, 2, 3, 5], &[1, 1, 2, 4]),
            -8,
        ),
        (
            "\u{39b},\u{39b}",
            vec![(1, 2, 1), (1, 3, 1), (4, 5, 1), (4, 6, 1)],
            (&[3, 4, 5, 6], &[1, 1, 2, 2]),
            24,
        ),
        (
            "\u{39b},I,I",
            vec![(1, 2, 1), (1, 3, 1), (4, 5, 1), (6, 7, 1)],
            (&[4, 5, 6, 7], &[1, 1, 2, 3]),
            24,
        ),
        (
            "I,I,I,I",
            vec![(1, 2, 1), (3, 4, 1), (5, 6, 1), (7, 8, 1)],
            (&[5, 6, 7, 8], &[1, 2, 3, 4]),
            24,
        ),
        (
            "\u{2210}\u{332}",
            vec![(1, 2, 2), (1, 3, 1), (2, 4, 1)],
            (&[2, 2, 2, 4], &[1, 1, 1, 3]),
            36,
        ),
        (
            "\u{2291}",
            vec![(1, 2, 2), (1, 3, 1), (3, 4, 1)],
            (&[2, 2, 4, 4], &[1, 1, 1, 3]),
            48,
        ),
        (
            "\u{25b3}\u{332}",
            vec![(1, 2, 2), (1, 3, 1), (2, 3, 1)],
            (&[2, 2, 2, 3], &[1, 1, 1, 3]),
            36,
        ),
        (
            "\u{226a}",
            vec![(1, 2, 2), (1, 3, 2)],
            (&[2, 2, 3, 3], &[1, 1, 1, 1]),
            96,
        ),
        (
            "\u{22a8}",
            vec![(1, 2, 2), (1, 3, 1), (1, 4, 1)],
            (&[2, 2, 3, 4], &[1, 1, 1, 1]),
            48,
        ),
        (
            "\u{2220}\u{332},I",
            vec![(1, 2, 2), (1, 3, 1), (4, 5, 1)],
            (&[3, 3, 4, 5], &[1, 1, 1, 2]),
            24,
        ),
        (
            "\u{39b},II",
            vec![(1, 2, 1), (1, 3, 1), (4, 5, 2)],
            (&[2, 3, 4, 5], &[1, 1, 2, 2]),
            -24,
        ),
        (
            "II,I,I",
            vec![(1, 2, 2), (3, 4, 1), (5, 6, 1)],
            (&[1, 4, 5, 6], &[1, 1, 2, 3]),
            -24,
        ),
        (
            "II,II",
            vec![(1, 2, 2), (3, 4, 2)],
            (&[2, 2, 4, 4], &[1, 1, 3, 3]),
            32,
        ),
        (
            "\u{2220}\u{332}\u{332}",
            vec![(1, 2, 3), (1, 3, 1)],
            (&[2, 2, 2, 3], &[1, 1, 1, 1]),
            144,
        ),
        (
            "III,I",
            vec![(1, 2, 3), (3, 4, 1)],
            (&[2, 2, 2, 4], &[1, 1, 1, 3]),
            36,
        ),
        (
            "IIII",
            vec![(1, 2, 4)],
            (&[2, 2, 2, 2], &[1, 1, 1, 1]),
            576,
        ),
    ]
}

/// All catalogued graphs of the given order, in catalogue order.
pub fn enumerate_tau_graphs(order: u32) -> Vec<TauGraph> {
    catalogue()
        .iter()
        .filter_map(|(_, edges, _, _)| {
            let g = TauGraph::from_edges(edges);
            (g.order() == order).then_some(g)
        })
        .collect()
}

/// Names of the catalogued graphs of the given order, aligned with
/// [`enumerate_tau_graphs`].
pub fn graph_names(order: u32) -> Vec<&'static str> {
    catalogue()
        .iter()
        .filter_map(|(name, edges, _, _)| {
            let g = TauGraph::from_edges(edges);
            (g.order() == order).then_some(*name)
        })
        .collect()
}

/// The display name of a graph, when catalogued.
pub fn graph_name(g: &TauGraph) -> Option<&'static str> {
    let canon = g.canonical();
    catalogue()
        .iter()
        .find(|(_, edges, _, _)| TauGraph::from_edges(edges) == canon)
        .map(|(name, _, _, _)| *name)
}

/// Looks a graph up by its display name.
pub fn graph_by_name(name: &str) -> Result<TauGraph, TauGraphError> {
    catalogue()
        .iter()
        .find(|(n, _, _, _)| *n == name)
        .map(|(_, edges, _, _)| TauGraph::from_edges(edges))
        .ok_or_else(|| TauGraphError::UnknownName {
            name: String::from(name),
        })
}

/// The characteristic differential of a catalogued graph and its value on
/// the graph's own orbit sum.
pub fn characteristic_diff(g: &TauGraph) -> Result<(DiffSpec, Rat), TauGraphError> {
    let canon = g.canonical();
    for (_, edges, (upper, lower), value) in catalogue() {
        if TauGraph::from_edges(&edges) == canon {
            return Ok((DiffSpec::new(upper, lower), rat(value)));
        }
    }
    Err(TauGraphError::NoCataloguedDifferential { order: g.order() })
}

/// Brute-force enumeration of all isomorphism classes at the given order,
/// independent of the catalogue.  Used to validate completeness.
pub fn generate_all_graphs(order: u32) -> Vec<TauGraph> {
    let max_v = (2 * order) as u8;
    let pairs: Vec<(u8, u8)> = (1..=max_v)
        .flat_map(|a| ((a + 1)..=max_v).map(move |b| (a, b)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut choice: Vec<usize> = Vec::new();
    gen_rec(order, 0, &pairs, &mut choice, &mut seen);
    seen.into_iter().collect()
}

fn gen_rec(
    remaining: u32,
    start: usize,
    pairs: &[(u8, u8)],
    choice: &mut Vec<usize>,
    seen: &mut BTreeSet<TauGraph>,
) {
    if remaining == 0 {
        let edges: Vec<(u8, u8, u8)> = choice
            .iter()
            .map(|&i| (pairs[i].0, pairs[i].1, 1))
            .collect();
        seen.insert(TauGraph::from_edges(&edges));
        return;
    }
    for i in start..pairs.len() {
        choice.push(i);
        gen_rec(remaining - 1, i, pairs, choice, seen);
        choice.pop();
    }
}

/// A coefficient `m` or `m (k + s)` in a catalogued linear identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KCoeff {
    pub mult: i64,
    pub kshift: Option<i64>,
}

impl KCoeff {
    pub const fn of(mult: i64) -> Self {
        KCoeff { mult, kshift: None }
    }

    pub const fn times_k(mult: i64, shift: i64) -> Self {
        KCoeff {
            mult,
            kshift: Some(shift),
        }
    }

    pub fn eval(&self, k: i64) -> Rat {
        match self.kshift {
            None => rat(self.mult),
            Some(s) => rat(self.mult) * rat(k + s),
        }
    }
}

/// The catalogued linear identities among orbit sums: one cubic and four
/// quartic relations, each a list of (coefficient, graph name) pairs that
/// sums to the zero polynomial at every k.
#[allow(clippy::type_complexity)]
pub fn identity_catalogue() -> Vec<(&'static str, Vec<(KCoeff, &'static str)>)> {
    vec![
        (
            "cubic",
            vec![
                (KCoeff::of(1), "II,I"),
                (KCoeff::of(-1), "N"),
                (KCoeff::times_k(1, -3), "\u{25b3}"),
            ],
        ),
        (
            "quartic-1",
            vec![
                (KCoeff::of(2), "II,I,I"),
                (KCoeff::of(-1), "N,I"),
                (KCoeff::times_k(1, -5), "\u{25b3},I"),
            ],
        ),
        (
            "quartic-2",
            vec![
                (KCoeff::of(1), "III,I"),
                (KCoeff::of(2), "II,II"),
                (KCoeff::of(-1), "\u{22b5}"),
                (KCoeff::times_k(1, -3), "\u{25b3}\u{332}"),
                (KCoeff::of(-4), "\u{25a1}"),
                (KCoeff::of(-1), "\u{2210}\u{332}"),
            ],
        ),
        (
            "quartic-3",
            vec![
                (KCoeff::of(2), "\u{39b},II"),
                (KCoeff::of(-2), "M"),
                (KCoeff::of(4), "\u{25b3},I"),
                (KCoeff::times_k(2, -4), "\u{25a1}"),
                (KCoeff::times_k(-1, -4), "II,II"),
            ],
        ),
        (
            "quartic-4",
            vec![
                (KCoeff::of(1), "\u{2220}\u{332},I"),
                (KCoeff::of(-2), "\u{2220}\u{2220}"),
                (KCoeff::of(-2), "\u{25b3},I"),
                (KCoeff::times_k(1, -4), "\u{22b5}"),
                (KCoeff::times_k(-2, -4), "\u{25a1}"),
                (KCoeff::times_k(1, -4), "II,II"),
            ],
        ),
    ]
}

/// Expands a catalogued identity at one k, returning the combination of
/// orbit sums (which should be the zero polynomial).
pub fn expand_identity(terms: &[(KCoeff, &'static str)], k: usize) -> MPolyQ {
    let mut total = MPoly::zero(2 * k);
    for (c, name) in terms {
        let g = graph_by_name(name).expect("catalogued name");
        total = total + g.orbit_sum(k).scale(&c.eval(k as i64));
    }
    total
}

/// Basis of linear relations among the orbit sums at one order: vectors
/// `c` with `sum_g c_g orbit_sum(g) = 0`, coordinates in catalogue order.
pub fn identity_basis(order: u32, k: usize) -> Vec<Vec<Rat>> {
    let graphs = enumerate_tau_graphs(order);
    let sums: Vec<MPolyQ> = graphs.iter().map(|g| g.orbit_sum(k)).collect();
    let mut monomials: BTreeSet<crate::polyring::Mono> = BTreeSet::new();
    for s in &sums {
        monomials.extend(s.terms.keys().cloned());
    }
    let rows: Vec<Vec<Rat>> = monomials
        .iter()
        .map(|m| sums.iter().map(|s| s.coeff(m)).collect())
        .collect();
    crate::linalg::nullspace(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::frac;
    use crate::polyring::apply_diff;
    use num_traits::Zero;

    #[test]
    fn catalogue_counts() {
        assert_eq!(enumerate_tau_graphs(1).len(), 1);
        assert_eq!(enumerate_tau_graphs(2).len(), 3);
        assert_eq!(enumerate_tau_graphs(3).len(), 8);
        assert_eq!(enumerate_tau_graphs(4).len(), 23);
    }

    #[test]
    fn catalogue_is_complete_and_duplicate_free() {
        for order in 1..=4 {
            let named = enumerate_tau_graphs(order);
            let mut canon: Vec<TauGraph> = named.iter().map(|g| g.canonical()).collect();
            canon.sort();
            let before = canon.len();
            canon.dedup();
            assert_eq!(canon.len(), before, "duplicate at order {order}");
            let generated = generate_all_graphs(order);
            assert_eq!(generated.len(), named.len(), "missing class at order {order}");
        }
    }

    #[test]
    fn orbit_sum_counts_distinct_monomials() {
        // single edge at k = 4: sum of all six tau factors
        let g = graph_by_name("I").unwrap();
        let v = Vars::new(4);
        let mut direct = MPoly::zero(v.nvars());
        for i in 1..=4 {
            for j in (i + 1)..=4 {
                direct = direct + v.tau(i, j);
            }
        }
        assert_eq!(g.orbit_sum(4), direct);
        // pair graph [I,I] at k = 4: three distinct products
        let gg = graph_by_name("I,I").unwrap();
        let v = Vars::new(4);
        let direct = v.tau(1, 2) * v.tau(3, 4)
            + v.tau(1, 3) * v.tau(2, 4)
            + v.tau(1, 4) * v.tau(2, 3);
        assert_eq!(gg.orbit_sum(4), direct);
        // too few slots: zero
        assert!(gg.orbit_sum(3).is_zero());
    }

    #[test]
    fn aut_orders() {
        assert_eq!(graph_by_name("I").unwrap().aut_order(), 2);
        assert_eq!(graph_by_name("\u{25b3}").unwrap().aut_order(), 6);
        assert_eq!(graph_by_name("I,I").unwrap().aut_order(), 8);
        assert_eq!(graph_by_name("Y").unwrap().aut_order(), 6);
        assert_eq!(graph_by_name("I,I,I").unwrap().aut_order(), 48);
    }

    #[test]
    fn degenerate_disjoint_counts() {
        let q = |g: &str| {
            graph_by_name(g)
                .unwrap()
                .eval_q_degenerate(Degenerate::Disjoint)
        };
        // [I]: q^2
        assert_eq!(q("I"), UPoly::from_coeffs(vec![rat(0), rat(0), rat(1)]));
        // [II]: q^2
        assert_eq!(q("II"), UPoly::from_coeffs(vec![rat(0), rat(0), rat(1)]));
        // [triangle]: odd cycle, zero
        assert!(q("\u{25b3}").is_zero());
        // [Y]: q^2 (q-1)(q-2) / 3
        let y = q("Y");
        let expect = UPoly::from_roots(&[rat(0), rat(0), rat(1), rat(2)]).scale(&frac(1, 3));
        assert_eq!(y, expect);
        // [I,I,I]: q^2 (q-1)^2 (q-2)^2 / 6
        let m = q("I,I,I");
        let expect =
            UPoly::from_roots(&[rat(0), rat(0), rat(1), rat(1), rat(2), rat(2)]).scale(&frac(1, 6));
        assert_eq!(m, expect);
    }

    #[test]
    fn degenerate_overlap_symmetry() {
        // the overlap count is invariant under q -> k - q
        let k = 7u32;
        for name in ["I", "\u{39b}", "N", "M"] {
            let g = graph_by_name(name).unwrap();
            let p = g.eval_q_degenerate(Degenerate::Overlap { k });
            for q in 0..=k as i64 {
                assert_eq!(p.eval(&rat(q)), p.eval(&rat(k as i64 - q)), "{name} at {q}");
            }
        }
    }

    #[test]
    fn overlap_matches_direct_evaluation() {
        // evaluate orbit sums on the actual two-block spectrum
        let k = 5usize;
        for name in ["I", "\u{39b}", "II", "\u{25b3}", "N"] {
            let g = graph_by_name(name).unwrap();
            let p = g.eval_q_degenerate(Degenerate::Overlap { k: k as u32 });
            for q in 0..=k {
                let mut point = vec![rat(0); 2 * k];
                for i in 0..q {
                    point[i] = rat(1);
                    point[k + i] = rat(1);
                }
                let direct = g.orbit_sum(k).eval(&point);
                assert_eq!(direct, p.eval(&rat(q as i64)), "{name} at q={q}");
            }
        }
    }

    #[test]
    fn disjoint_matches_direct_evaluation() {
        let k = 6usize;
        for name in ["I", "\u{39b}", "Y", "II,I", "N"] {
            let g = graph_by_name(name).unwrap();
            let count = g.eval_q_degenerate(Degenerate::Disjoint);
            let sign = if g.order() % 2 == 0 { rat(1) } else { rat(-1) };
            for q in 0..=3usize {
                let mut point = vec![rat(0); 2 * k];
                for i in 0..q {
                    point[i] = rat(1);
                    point[k + q + i] = rat(1);
                }
                let direct = g.orbit_sum(k).eval(&point);
                assert_eq!(
                    direct,
                    sign.clone() * count.eval(&rat(q as i64)),
                    "{name} at q={q}"
                );
            }
        }
    }

    #[test]
    fn characteristic_diff_on_own_graph() {
        for order in 1..=4u32 {
            let graphs = enumerate_tau_graphs(order);
            let names = graph_names(order);
            for (g, name) in graphs.iter().zip(&names) {
                let (spec, value) = characteristic_diff(g).unwrap();
                let k = spec.max_index().max(g.vertices()) as usize;
                let vars = Vars::new(k);
                let got = apply_diff(vars, &g.orbit_sum(k), &spec);
                assert_eq!(got, value, "constant mismatch for {name}");
            }
        }
    }

    #[test]
    fn no_catalogued_differential_above_order_four() {
        let g = TauGraph::from_edges(&[(1, 2, 5)]);
        let err = characteristic_diff(&g).unwrap_err();
        assert!(matches!(
            err,
            TauGraphError::NoCataloguedDifferential { order: 5 }
        ));
    }

    #[test]
    fn catalogued_identities_expand_to_zero() {
        for (label, terms) in identity_catalogue() {
            for k in 4..=6 {
                assert!(
                    expand_identity(&terms, k).is_zero(),
                    "{label} fails at k={k}"
                );
            }
        }
    }

    #[test]
    fn identity_space_order_four_dimension() {
        // at k = 6 the nullspace splits into two trivial directions from
        // the dropped graphs (v > 6) and four genuine quartic relations
        let names = graph_names(4);
        let basis = identity_basis(4, 6);
        let dropped: Vec<bool> = names
            .iter()
            .map(|n| graph_by_name(n).unwrap().vertices() > 6)
            .collect();
        let genuine: Vec<&Vec<Rat>> = basis
            .iter()
            .filter(|v| {
                v.iter()
                    .zip(&dropped)
                    .any(|(c, d)| !d && !c.is_zero())
            })
            .collect();
        assert_eq!(genuine.len(), 4);
        // the catalogued quartics lie in the computed span
        let mut rows: Vec<Vec<Rat>> = genuine.iter().map(|v| (*v).clone()).collect();
        assert_eq!(crate::linalg::rank(&rows), 4);
        for (_, terms) in identity_catalogue().iter().skip(1) {
            let mut vec = vec![rat(0); names.len()];
            for (c, name) in terms {
                let idx = names.iter().position(|n| n == name).unwrap();
                vec[idx] = c.eval(6);
            }
            rows.push(vec);
        }
        assert_eq!(crate::linalg::rank(&rows), 4);
    }

    #[test]
    fn identity_space_order_three() {
        // at k >= 6 the cubic coset has exactly one relation
        let basis = identity_basis(3, 6);
        assert_eq!(basis.len(), 1);
        let graphs = enumerate_tau_graphs(3);
        let v = basis[0].clone();
        let mut total = MPoly::zero(12);
        for (g, c) in graphs.iter().zip(&v) {
            total = total + g.orbit_sum(6).scale(c);
        }
        assert!(total.is_zero());
    }
}
