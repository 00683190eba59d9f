//! 3-coloring with precolored rings, criticality and subsumption.
//!
//! The solver is plain backtracking with forward checking; the next vertex
//! is the uncolored one with fewest remaining colors (lowest index on ties),
//! and colors are tried in increasing order, so every answer is reproducible.

use alloc::vec;
use alloc::vec::Vec;

use crate::map::{EmbeddedGraph, Ring};

pub const ALL: u8 = 0b111;

/// A partial assignment of colors 0..3, indexed by vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Precoloring(pub Vec<Option<u8>>);

impl Precoloring {
    pub fn get(&self, v: usize) -> Option<u8> {
        self.0[v]
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ColoringError {
    #[error("precoloring is not proper on the rings (edge {0}-{1})")]
    Improper(u32, u32),
    #[error("precoloring must color exactly the ring vertices (vertex {0})")]
    WrongDomain(u32),
    #[error("color {0} out of range")]
    BadColor(u8),
    #[error("graph has {0} vertices, more than the limit of {1}")]
    TooLarge(usize, usize),
    #[error("the two graphs have different rings")]
    RingMismatch,
    #[error("expected two rings of length at most four")]
    RingArity,
    #[error("coloring is not defined on the whole cycle")]
    Undefined,
}

/// The constraint structure of a graph with rings, detached from the embedding.
#[derive(Clone, Debug)]
pub struct Problem {
    pub n: usize,
    /// `(neighbour, edge)` pairs.
    pub adj: Vec<Vec<(usize, usize)>>,
    pub edges: Vec<[usize; 2]>,
    pub ring_vertex: Vec<bool>,
    pub weak: Vec<bool>,
    /// Edges of ⋃R (facial ring cycles).
    pub ring_edge: Vec<bool>,
    /// Ring vertices in ring order; precolorings are enumerated in this order.
    pub ring_order: Vec<usize>,
}

impl Problem {
    pub fn new(n: usize, edges: Vec<[usize; 2]>, ring_order: Vec<usize>, weak: Vec<bool>, ring_edge: Vec<bool>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e[0]].push((e[1], i));
            adj[e[1]].push((e[0], i));
        }
        let mut ring_vertex = vec![false; n];
        for &v in &ring_order {
            ring_vertex[v] = true;
        }
        Problem { n, adj, edges, ring_vertex, weak, ring_edge, ring_order }
    }

    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        let n = g.n_vertices();
        let edges = (0..g.n_edges()).map(|e| g.endpoints(e)).collect();
        let mut weak = vec![false; n];
        let mut order = Vec::new();
        for r in g.rings() {
            if let Ring::Vertex { v, weak: true, .. } = r {
                weak[*v] = true;
            }
            order.extend(r.vertices());
        }
        Problem::new(n, edges, order, weak, g.ring_edges())
    }

    /// Whether H = ⋃R is all of G.
    pub fn is_just_rings(&self) -> bool {
        self.ring_vertex.iter().all(|&r| r) && self.ring_edge.iter().all(|&r| r)
    }

    fn domains(&self, phi: &Precoloring) -> Vec<u8> {
        (0..self.n)
            .map(|v| match phi.get(v) {
                Some(c) if self.weak[v] => ALL & !(1 << c),
                Some(c) => 1 << c,
                None => ALL,
            })
            .collect()
    }

    /// Extends `phi`, ignoring edge `skip`.
    pub fn extend(&self, phi: &Precoloring, skip: Option<usize>) -> Option<Vec<u8>> {
        solve(&self.adj, self.domains(phi), skip)
    }

    pub fn check_precoloring(&self, phi: &Precoloring) -> Result<(), ColoringError> {
        for v in 0..self.n {
            match phi.get(v) {
                Some(c) if c > 2 => return Err(ColoringError::BadColor(c)),
                Some(_) if !self.ring_vertex[v] => return Err(ColoringError::WrongDomain(v as u32)),
                None if self.ring_vertex[v] => return Err(ColoringError::WrongDomain(v as u32)),
                _ => {}
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if self.ring_edge[i] && phi.get(e[0]) == phi.get(e[1]) {
                return Err(ColoringError::Improper(e[0] as u32, e[1] as u32));
            }
        }
        Ok(())
    }

    /// Every proper coloring of ⋃R.  With `quotient`, only one per orbit of
    /// color permutations: the first ring vertex gets 0 and the first vertex
    /// with another color gets 1.
    pub fn precolorings(&self, quotient: bool) -> Vec<Precoloring> {
        let order = &self.ring_order;
        let mut out = Vec::new();
        let mut cur = vec![None; self.n];
        let ring_nb: Vec<Vec<usize>> = (0..self.n)
            .map(|v| self.adj[v].iter().filter(|(_, e)| self.ring_edge[*e]).map(|(w, _)| *w).collect())
            .collect();
        fn rec(
            i: usize,
            max_used: i8,
            order: &[usize],
            ring_nb: &[Vec<usize>],
            quotient: bool,
            cur: &mut Vec<Option<u8>>,
            out: &mut Vec<Precoloring>,
        ) {
            if i == order.len() {
                out.push(Precoloring(cur.clone()));
                return;
            }
            let v = order[i];
            let top = if quotient { (max_used + 1).min(2) as u8 } else { 2 };
            for c in 0..=top {
                if ring_nb[v].iter().any(|&w| cur[w] == Some(c)) {
                    continue;
                }
                cur[v] = Some(c);
                rec(i + 1, max_used.max(c as i8), order, ring_nb, quotient, cur, out);
                cur[v] = None;
            }
        }
        rec(0, -1, order, &ring_nb, quotient, &mut cur, &mut out);
        out
    }
}

/// Backtracking search over color domains (bitmasks); `skip` names an edge to ignore.
pub fn solve(adj: &[Vec<(usize, usize)>], mut dom: Vec<u8>, skip: Option<usize>) -> Option<Vec<u8>> {
    let n = dom.len();
    let mut fixed = vec![false; n];
    let mut trail: Vec<(usize, u8)> = Vec::new();
    fn assign(
        v: usize,
        c: u8,
        adj: &[Vec<(usize, usize)>],
        dom: &mut [u8],
        fixed: &mut [bool],
        trail: &mut Vec<(usize, u8)>,
        skip: Option<usize>,
    ) -> bool {
        fixed[v] = true;
        trail.push((v, dom[v]));
        dom[v] = 1 << c;
        for &(w, e) in &adj[v] {
            if Some(e) == skip {
                continue;
            }
            if dom[w] & (1 << c) != 0 {
                if fixed[w] {
                    return false;
                }
                trail.push((w, dom[w]));
                dom[w] &= !(1 << c);
                if dom[w] == 0 {
                    return false;
                }
            }
        }
        true
    }
    fn rec(
        adj: &[Vec<(usize, usize)>],
        dom: &mut [u8],
        fixed: &mut [bool],
        trail: &mut Vec<(usize, u8)>,
        skip: Option<usize>,
    ) -> bool {
        let mut best = usize::MAX;
        let mut best_size = 4;
        for v in 0..dom.len() {
            if !fixed[v] {
                let s = dom[v].count_ones();
                if s < best_size {
                    best = v;
                    best_size = s;
                }
            }
        }
        if best == usize::MAX {
            return true;
        }
        for c in 0..3u8 {
            if dom[best] & (1 << c) == 0 {
                continue;
            }
            let mark = trail.len();
            if assign(best, c, adj, dom, fixed, trail, skip) && rec(adj, dom, fixed, trail, skip) {
                return true;
            }
            while trail.len() > mark {
                let (w, d) = trail.pop().expect("trail");
                dom[w] = d;
            }
            fixed[best] = false;
        }
        false
    }
    if dom.iter().any(|&d| d == 0) {
        return None;
    }
    // Conflicting neighbours that are both forced cannot be repaired.
    for v in 0..n {
        if dom[v].count_ones() == 1 {
            for &(w, e) in &adj[v] {
                if Some(e) != skip && dom[w] == dom[v] {
                    return None;
                }
            }
        }
    }
    if rec(adj, &mut dom, &mut fixed, &mut trail, skip) {
        Some(dom.iter().map(|d| d.trailing_zeros() as u8).collect())
    } else {
        None
    }
}

/// A proper coloring extending `phi` under weak-ring semantics, if any.
pub fn extends(g: &EmbeddedGraph, phi: &Precoloring) -> Result<Option<Vec<u8>>, ColoringError> {
    let p = Problem::from_graph(g);
    p.check_precoloring(phi)?;
    Ok(p.extend(phi, None))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalReport {
    pub critical: bool,
    /// For each non-ring edge, a precoloring extending to G − e but not to G.
    pub witnesses: Vec<(usize, Option<Precoloring>)>,
}

/// R-criticality by single-edge deletions.  Deleting edges suffices: any
/// proper subgraph containing the rings lies in some G − e, unless it only
/// drops an isolated non-ring vertex, and extension is monotone under
/// taking subgraphs.
pub fn ring_critical(p: &Problem) -> CriticalReport {
    if p.is_just_rings() {
        return CriticalReport { critical: false, witnesses: Vec::new() };
    }
    let isolated = (0..p.n).any(|v| !p.ring_vertex[v] && p.adj[v].is_empty());
    let failing: Vec<Precoloring> = p.precolorings(true).into_iter().filter(|phi| p.extend(phi, None).is_none()).collect();
    let mut witnesses = Vec::new();
    let mut critical = !isolated;
    for e in 0..p.edges.len() {
        if p.ring_edge[e] {
            continue;
        }
        let w = failing.iter().find(|phi| p.extend(phi, Some(e)).is_some()).cloned();
        if w.is_none() {
            critical = false;
        }
        witnesses.push((e, w));
    }
    CriticalReport { critical, witnesses }
}

/// Like [`ring_critical`] but stops at the first edge without a witness.
pub fn is_ring_critical_fast(p: &Problem) -> bool {
    if p.is_just_rings() || (0..p.n).any(|v| !p.ring_vertex[v] && p.adj[v].is_empty()) {
        return false;
    }
    let failing: Vec<Precoloring> = p.precolorings(true).into_iter().filter(|phi| p.extend(phi, None).is_none()).collect();
    if failing.is_empty() {
        return false;
    }
    (0..p.edges.len())
        .filter(|&e| !p.ring_edge[e])
        .all(|e| failing.iter().any(|phi| p.extend(phi, Some(e)).is_some()))
}

pub fn is_ring_critical(g: &EmbeddedGraph) -> CriticalReport {
    ring_critical(&Problem::from_graph(g))
}

pub fn is_phi_critical(g: &EmbeddedGraph, phi: &Precoloring) -> Result<bool, ColoringError> {
    let p = Problem::from_graph(g);
    p.check_precoloring(phi)?;
    if p.is_just_rings() || p.extend(phi, None).is_some() {
        return Ok(false);
    }
    if (0..p.n).any(|v| !p.ring_vertex[v] && p.adj[v].is_empty()) {
        return Ok(false);
    }
    Ok((0..p.edges.len()).filter(|&e| !p.ring_edge[e]).all(|e| p.extend(phi, Some(e)).is_some()))
}

/// Ring vertex ids in ring order, with kinds, for comparing ring lists.
fn ring_signature(g: &EmbeddedGraph) -> Vec<(bool, bool, Vec<u32>)> {
    g.rings()
        .iter()
        .map(|r| (r.is_facial(), r.is_weak(), r.vertices().iter().map(|&v| g.vertex_id(v)).collect()))
        .collect()
}

/// Every precoloring of the common rings that extends in `h` extends in `g`.
pub fn subsumes(h: &EmbeddedGraph, g: &EmbeddedGraph) -> Result<bool, ColoringError> {
    if ring_signature(h) != ring_signature(g) {
        return Err(ColoringError::RingMismatch);
    }
    let (ph, pg) = (Problem::from_graph(h), Problem::from_graph(g));
    let to_g = |phi: &Precoloring| {
        let mut out = vec![None; g.n_vertices()];
        for v in 0..h.n_vertices() {
            if let Some(c) = phi.get(v) {
                let w = g.vertex_index(h.vertex_id(v)).expect("shared ring vertex");
                out[w] = Some(c);
            }
        }
        Precoloring(out)
    };
    Ok(ph
        .precolorings(false)
        .iter()
        .all(|phi| ph.extend(phi, None).is_none() || pg.extend(&to_g(phi), None).is_some()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FourCycleType {
    Empty,
    X1X3,
    X2X4,
}

/// The type of a coloring on the labelled 4-cycle x1x2x3x4.
pub fn four_cycle_type(colors: [Option<u8>; 4]) -> Result<FourCycleType, ColoringError> {
    let c: Vec<u8> = colors.iter().map(|c| c.ok_or(ColoringError::Undefined)).collect::<Result<_, _>>()?;
    Ok(match (c[0] != c[2], c[1] != c[3]) {
        (false, false) => FourCycleType::Empty,
        (true, false) => FourCycleType::X1X3,
        (false, true) => FourCycleType::X2X4,
        // Impossible for a proper coloring with three colors.
        (true, true) => return Err(ColoringError::Improper(0, 0)),
    })
}

pub const CHROMATIC_LIMIT: usize = 64;

/// Whether G is k-colorable (k = 3 or 4), ignoring rings.
pub fn chromatic_bound(g: &EmbeddedGraph, k: u8) -> Result<bool, ColoringError> {
    let edges: Vec<[usize; 2]> = (0..g.n_edges()).map(|e| g.endpoints(e)).collect();
    k_colorable(g.n_vertices(), &edges, k)
}

pub fn k_colorable(n: usize, edges: &[[usize; 2]], k: u8) -> Result<bool, ColoringError> {
    if n > CHROMATIC_LIMIT {
        return Err(ColoringError::TooLarge(n, CHROMATIC_LIMIT));
    }
    match k {
        3 => {
            let p = Problem::new(n, edges.to_vec(), Vec::new(), vec![false; n], vec![false; edges.len()]);
            let mut dom = vec![ALL; n];
            // Fix the first vertex to break color symmetry.
            if n > 0 {
                dom[0] = 1;
            }
            Ok(solve(&p.adj, dom, None).is_some())
        }
        4 => Ok(four_colorable(n, edges)),
        _ => Err(ColoringError::BadColor(k)),
    }
}

fn four_colorable(n: usize, edges: &[[usize; 2]]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e[0]].push(e[1]);
        adj[e[1]].push(e[0]);
    }
    let mut col = vec![u8::MAX; n];
    fn rec(v: usize, adj: &[Vec<usize>], col: &mut [u8]) -> bool {
        if v == col.len() {
            return true;
        }
        for c in 0..4 {
            if adj[v].iter().all(|&w| col[w] != c) {
                col[v] = c;
                if rec(v + 1, adj, col) {
                    return true;
                }
            }
        }
        col[v] = u8::MAX;
        false
    }
    rec(0, &adj, &mut col)
}

/// Witness for the first claim: ψ on C1, vertices v1, v2 of C2 and colors c1 ≠ c2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimWitness {
    pub psi: Vec<u8>,
    pub v: [usize; 2],
    pub c: [u8; 2],
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasicClaims {
    /// Which ring plays C1 (0 or 1).
    pub first: usize,
    pub basicsim: Option<SimWitness>,
    /// For every (v1, v2, c1, c2) on C1, the witness (v, c) on C2, or None.
    pub twoone: Vec<([usize; 2], [u8; 2], Option<(usize, u8)>)>,
}

impl BasicClaims {
    pub fn holds(&self) -> bool {
        self.basicsim.is_some() && self.twoone.iter().all(|t| t.2.is_some())
    }
}

fn cycle_colorings(len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let total = 3usize.pow(len as u32);
    for code in 0..total {
        let mut c = Vec::with_capacity(len);
        let mut x = code;
        for _ in 0..len {
            c.push((x % 3) as u8);
            x /= 3;
        }
        if (0..len).all(|i| c[i] != c[(i + 1) % len]) {
            out.push(c);
        }
    }
    out
}

/// Checks both claims about a two-ring graph, for both choices of C1.
/// Positions in the returned witnesses index the ring's vertex list.
pub fn basic_claim_checks(g: &EmbeddedGraph) -> Result<[BasicClaims; 2], ColoringError> {
    let rings: Vec<Vec<usize>> = match g.rings() {
        [Ring::Facial(a), Ring::Facial(b)] if a.len() <= 4 && b.len() <= 4 => vec![a.clone(), b.clone()],
        _ => return Err(ColoringError::RingArity),
    };
    let p = Problem::from_graph(g);
    let cols: Vec<Vec<Vec<u8>>> = rings.iter().map(|r| cycle_colorings(r.len())).collect();
    // ext[i][j]: coloring i of ring 0 with coloring j of ring 1 extends.
    let mut ext = vec![vec![false; cols[1].len()]; cols[0].len()];
    for (i, a) in cols[0].iter().enumerate() {
        for (j, b) in cols[1].iter().enumerate() {
            let mut phi = vec![None; p.n];
            for (k, &v) in rings[0].iter().enumerate() {
                phi[v] = Some(a[k]);
            }
            for (k, &v) in rings[1].iter().enumerate() {
                phi[v] = Some(b[k]);
            }
            ext[i][j] = p.extend(&Precoloring(phi), None).is_some();
        }
    }
    let claims = |first: usize| -> BasicClaims {
        let second = 1 - first;
        let e = |x: usize, y: usize| if first == 0 { ext[x][y] } else { ext[y][x] };
        let (c1s, c2s) = (&cols[first], &cols[second]);
        let (l1, l2) = (rings[first].len(), rings[second].len());
        let mut basicsim = None;
        'sim: for (i, psi) in c1s.iter().enumerate() {
            for v1 in 0..l2 {
                for v2 in 0..l2 {
                    if v1 == v2 {
                        continue;
                    }
                    for c1 in 0..3u8 {
                        for c2 in 0..3u8 {
                            if c1 == c2 {
                                continue;
                            }
                            let ok = c2s
                                .iter()
                                .enumerate()
                                .filter(|(_, b)| b[v1] != c1 && b[v2] != c2)
                                .all(|(j, _)| e(i, j));
                            if ok {
                                basicsim = Some(SimWitness { psi: psi.clone(), v: [v1, v2], c: [c1, c2] });
                                break 'sim;
                            }
                        }
                    }
                }
            }
        }
        let mut twoone = Vec::new();
        for v1 in 0..l1 {
            for v2 in 0..l1 {
                if v1 == v2 {
                    continue;
                }
                for c1 in 0..3u8 {
                    for c2 in 0..3u8 {
                        if c1 == c2 {
                            continue;
                        }
                        let mut wit = None;
                        'w: for v in 0..l2 {
                            for c in 0..3u8 {
                                let ok = c2s.iter().enumerate().filter(|(_, b)| b[v] != c).all(|(j, _)| {
                                    c1s.iter().enumerate().any(|(i, a)| a[v1] != c1 && a[v2] != c2 && e(i, j))
                                });
                                if ok {
                                    wit = Some((v, c));
                                    break 'w;
                                }
                            }
                        }
                        twoone.push(([v1, v2], [c1, c2], wit));
                    }
                }
            }
        }
        BasicClaims { first, basicsim, twoone }
    };
    Ok([claims(0), claims(1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::from_neighbor_rotations;

    fn cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()
    }

    #[test]
    fn c5_ring_extends_to_itself() {
        let g = from_neighbor_rotations(&cycle(5), vec![Ring::Facial((0..5).collect())]).unwrap();
        let phi = Precoloring(vec![Some(0), Some(1), Some(0), Some(1), Some(2)]);
        assert_eq!(extends(&g, &phi).unwrap(), Some(vec![0, 1, 0, 1, 2]));
        assert!(!is_ring_critical(&g).critical);
    }

    #[test]
    fn improper_precoloring_rejected() {
        let g = from_neighbor_rotations(&cycle(5), vec![Ring::Facial((0..5).collect())]).unwrap();
        let phi = Precoloring(vec![Some(0), Some(0), Some(1), Some(0), Some(1)]);
        assert!(matches!(extends(&g, &phi), Err(ColoringError::Improper(..))));
    }

    #[test]
    fn weak_vertex_avoids_its_color() {
        let g = from_neighbor_rotations(&[vec![1], vec![0]], vec![Ring::Vertex { v: 0, weak: true, at: None }]).unwrap();
        let phi = Precoloring(vec![Some(0), None]);
        let col = extends(&g, &phi).unwrap().unwrap();
        assert_ne!(col[0], 0);
        assert_ne!(col[0], col[1]);
    }

    #[test]
    fn four_cycle_types() {
        assert_eq!(four_cycle_type([Some(0), Some(1), Some(0), Some(1)]).unwrap(), FourCycleType::Empty);
        assert_eq!(four_cycle_type([Some(0), Some(1), Some(2), Some(1)]).unwrap(), FourCycleType::X1X3);
        assert_eq!(four_cycle_type([Some(0), Some(1), Some(0), Some(2)]).unwrap(), FourCycleType::X2X4);
        assert!(four_cycle_type([Some(0), None, Some(0), Some(2)]).is_err());
    }

    #[test]
    fn quotient_counts() {
        let g = from_neighbor_rotations(&cycle(6), vec![Ring::Facial((0..6).collect())]).unwrap();
        let p = Problem::from_graph(&g);
        assert_eq!(p.precolorings(false).len(), 66);
        assert_eq!(p.precolorings(true).len(), 11);
    }
}
