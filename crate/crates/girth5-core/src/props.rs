//! The structural properties I0–I9 and well-behavedness.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::cycles::{blocks, cycles_up_to, distances};
use crate::map::{EmbeddedGraph, Ring};
use crate::regions::{edge_mask, regions, Regions};
use crate::weight::is_omnipresent;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct PropertyReport {
    pub i: [bool; 10],
    pub well_behaved: bool,
}

pub fn check_properties(g: &EmbeddedGraph) -> PropertyReport {
    PropertyReport {
        i: [i0(g), i1(g), i2(g), i3(g), i4(g), i5(g), i6(g), i7(g), i8(g), i9(g)],
        well_behaved: well_behaved(g),
    }
}

fn ring_vertices(g: &EmbeddedGraph) -> Vec<bool> {
    g.ring_of_vertex().iter().map(|r| r.is_some()).collect()
}

/// Internal vertices of degree three.
fn internal_cubic(g: &EmbeddedGraph) -> Vec<bool> {
    let ring = ring_vertices(g);
    (0..g.n_vertices()).map(|v| !ring[v] && g.degree(v) == 3).collect()
}

pub fn i0(g: &EmbeddedGraph) -> bool {
    let ring = ring_vertices(g);
    (0..g.n_vertices()).all(|v| ring[v] || g.degree(v) >= 3)
}

/// No even cycle of internal degree-3 vertices: every block of the induced
/// subgraph is an edge or an odd cycle (any other block has an even cycle).
pub fn i1(g: &EmbeddedGraph) -> bool {
    let keep = internal_cubic(g);
    let adj = g.adjacency();
    blocks(&adj, &keep).iter().all(|b| {
        let vs: BTreeSet<usize> = b.iter().flat_map(|e| [e[0], e[1]]).collect();
        b.len() == 1 || (b.len() == vs.len() && b.len() % 2 == 1)
    })
}

pub fn i2(g: &EmbeddedGraph) -> bool {
    let keep = internal_cubic(g);
    let adj = g.adjacency();
    let sub: Vec<Vec<usize>> =
        (0..g.n_vertices()).map(|v| if keep[v] { adj[v].iter().copied().filter(|&w| keep[w]).collect() } else { Vec::new() }).collect();
    for c in cycles_up_to(&sub, g.n_vertices()) {
        let on: BTreeSet<usize> = c.iter().copied().collect();
        let near: BTreeSet<usize> = c.iter().flat_map(|&v| adj[v].iter().copied()).filter(|w| !on.contains(w)).collect();
        for &u in &near {
            if adj[u].iter().any(|w| *w != u && near.contains(w)) {
                return false;
            }
        }
    }
    true
}

pub fn i3(g: &EmbeddedGraph) -> bool {
    g.faces().iter().filter(|f| !f.is_ring_face()).all(|f| f.closed_2cell && f.length >= 5)
}

/// Paths of length at most two with both ends on rings lie in ⋃R.
pub fn i4(g: &EmbeddedGraph) -> bool {
    let ring = ring_vertices(g);
    let ring_edge = g.ring_edges();
    for e in 0..g.n_edges() {
        let [a, b] = g.endpoints(e);
        if ring[a] && ring[b] && !ring_edge[e] {
            return false;
        }
    }
    for x in 0..g.n_vertices() {
        let rs: Vec<_> = g.rotation(x).iter().filter(|d| ring[g.head(**d)]).collect();
        if rs.len() >= 2 && rs.iter().any(|d| !ring_edge[d.edge()]) {
            return false;
        }
    }
    true
}

pub fn i5(g: &EmbeddedGraph) -> bool {
    (0..g.n_edges()).all(|e| {
        let [a, b] = g.endpoints(e);
        !(g.degree(a) == 2 && g.degree(b) == 2)
    })
}

/// Whether some two vertices separate a ring-free part from the rest.
pub fn has_internal_2cut(g: &EmbeddedGraph) -> bool {
    let n = g.n_vertices();
    let ring = ring_vertices(g);
    let adj = g.adjacency();
    for x in 0..n {
        for y in x + 1..n {
            let mut comp = vec![usize::MAX; n];
            let mut sizes = Vec::new();
            let mut ringy = Vec::new();
            for s in 0..n {
                if s == x || s == y || comp[s] != usize::MAX {
                    continue;
                }
                let id = sizes.len();
                let (mut size, mut has_ring) = (0, false);
                let mut stack = vec![s];
                comp[s] = id;
                while let Some(v) = stack.pop() {
                    size += 1;
                    has_ring |= ring[v];
                    for &w in &adj[v] {
                        if w != x && w != y && comp[w] == usize::MAX {
                            comp[w] = id;
                            stack.push(w);
                        }
                    }
                }
                sizes.push(size);
                ringy.push(has_ring);
            }
            let total: usize = sizes.iter().sum();
            if (0..sizes.len()).any(|i| !ringy[i] && total > sizes[i]) {
                return true;
            }
        }
    }
    false
}

pub fn i6(g: &EmbeddedGraph) -> bool {
    let disk = g.euler_genus().0 == 0 && g.rings().len() == 1;
    let omni = (0..g.faces().len()).any(|f| is_omnipresent(g, f));
    !(disk || omni) || !has_internal_2cut(g)
}

pub fn i7(g: &EmbeddedGraph) -> bool {
    let adj = g.adjacency();
    let rings = g.rings();
    for i in 0..rings.len() {
        let d = distances(&adj, &rings[i].vertices());
        for r in &rings[i + 1..] {
            if r.vertices().iter().any(|&v| d[v] < 4) {
                return false;
            }
        }
    }
    true
}

/// Every cycle that does not separate the surface has length at least seven.
pub fn i8(g: &EmbeddedGraph) -> bool {
    let adj = g.adjacency();
    cycles_up_to(&adj, 6).iter().all(|c| {
        let edges = cycle_edge_list(g, c);
        crate::regions::classify_edges(g, &edges).separates()
    })
}

pub(crate) fn cycle_edge_list(g: &EmbeddedGraph, c: &[usize]) -> Vec<usize> {
    (0..c.len()).map(|i| g.edge_between(c[i], c[(i + 1) % c.len()]).expect("cycle edge")).collect()
}

fn regions_of_cycle(g: &EmbeddedGraph, c: &[usize]) -> Regions {
    regions(g, &edge_mask(g, &cycle_edge_list(g, c)), &[])
}

/// Cycles of length at most 9 bounding a ring-free open disk bound a face,
/// a 5-face plus a face across one chord, or three 5-faces around a degree-3
/// vertex.  A chord splits C into faces of lengths 5 and |C|−3.
pub fn i9(g: &EmbeddedGraph) -> bool {
    let adj = g.adjacency();
    for c in cycles_up_to(&adj, 9) {
        let regs = regions_of_cycle(g, &c);
        for r in regs.regions.iter().filter(|r| r.is_clean_disk()) {
            let mut lens: Vec<usize> = r.faces.iter().map(|&f| g.faces()[f].length).collect();
            lens.sort();
            let ok = match lens.len() {
                1 => true,
                2 => {
                    let mut want = vec![5, c.len().saturating_sub(3)];
                    want.sort();
                    lens == want && r.edges.len() == 1
                }
                3 => {
                    c.len() == 9 && lens == [5, 5, 5] && r.vertices.len() == 1 && g.degree(r.vertices[0]) == 3
                }
                _ => false,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Paths of length 1..=4 with both ends on rings, internally disjoint from
/// them and using no ring edge.
pub fn ring_paths(g: &EmbeddedGraph) -> Vec<Vec<usize>> {
    let ring = ring_vertices(g);
    let ring_edge = g.ring_edges();
    let mut out = Vec::new();
    fn rec(
        g: &EmbeddedGraph,
        ring: &[bool],
        ring_edge: &[bool],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *path.last().expect("path");
        for &d in g.rotation(v) {
            let w = g.head(d);
            if ring_edge[d.edge()] || path.contains(&w) {
                continue;
            }
            path.push(w);
            if ring[w] {
                if path[0] < w {
                    out.push(path.clone());
                }
            } else if path.len() < 5 {
                rec(g, ring, ring_edge, path, out);
            }
            path.pop();
        }
    }
    for u in 0..g.n_vertices() {
        if ring[u] {
            let mut path = vec![u];
            rec(g, &ring, &ring_edge, &mut path, &mut out);
        }
    }
    out
}

pub fn is_allowable(g: &EmbeddedGraph, p: &[usize]) -> bool {
    let len = p.len() - 1;
    let (u, v) = (p[0], p[len]);
    let ring_of = g.ring_of_vertex();
    let (Some(ru), Some(rv)) = (ring_of[u], ring_of[v]) else { return false };
    if ru != rv || len < 3 {
        return false;
    }
    let Ring::Facial(r) = &g.rings()[ru] else { return false };
    let k = r.len();
    let (iu, iv) = (r.iter().position(|&x| x == u).unwrap(), r.iter().position(|&x| x == v).unwrap());
    // Both subpaths of R from u to v.
    let q1: Vec<usize> = (0..=(iv + k - iu) % k).map(|t| r[(iu + t) % k]).collect();
    let q2: Vec<usize> = (0..=(iu + k - iv) % k).map(|t| r[(iu + k - t) % k]).collect();
    for q in [q1, q2] {
        // Cycle p (u..v) followed by q reversed (v..u), without repeating ends.
        let mut cyc: Vec<usize> = p.to_vec();
        cyc.extend(q.iter().rev().skip(1).take(q.len() - 2));
        if cyc.len() > 8 {
            continue;
        }
        let regs = regions_of_cycle(g, &cyc);
        for reg in regs.regions.iter().filter(|r| r.is_clean_disk()) {
            let ok = match len {
                3 => cyc.len() == 5 && reg.faces.len() == 1,
                4 => {
                    reg.vertices.is_empty()
                        && match reg.edges.as_slice() {
                            [] => true,
                            [e] => {
                                let [a, b] = g.endpoints(*e);
                                q.len() == 5 && {
                                    let (pm, qm) = (p[2], q[2]);
                                    (a == pm && b == qm) || (a == qm && b == pm)
                                }
                            }
                            _ => false,
                        }
                }
                _ => true,
            };
            if ok {
                return true;
            }
        }
    }
    false
}

pub fn well_behaved(g: &EmbeddedGraph) -> bool {
    ring_paths(g).iter().all(|p| is_allowable(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::from_neighbor_rotations;

    /// Ring C9 with a centre joined to ring vertices 0, 3, 6.
    fn nine_with_centre() -> EmbeddedGraph {
        let mut adj: Vec<Vec<usize>> = (0..9).map(|i| vec![(i + 1) % 9, (i + 8) % 9]).collect();
        adj.push(vec![0, 3, 6]);
        for r in [0usize, 3, 6] {
            adj[r] = vec![(r + 1) % 9, 9, (r + 8) % 9];
        }
        from_neighbor_rotations(&adj, vec![Ring::Facial((0..9).collect())]).unwrap()
    }

    #[test]
    fn centre_of_nine_ring() {
        let g = nine_with_centre();
        assert!(g.faces().iter().filter(|f| !f.is_ring_face()).all(|f| f.length == 5));
        let rep = check_properties(&g);
        assert!(rep.i[0] && rep.i[3] && rep.i[9]);
    }

    #[test]
    fn adjacent_degree_two_vertices_break_i5() {
        let adj: Vec<Vec<usize>> = (0..5).map(|i| vec![(i + 1) % 5, (i + 4) % 5]).collect();
        let g = from_neighbor_rotations(&adj, vec![]).unwrap();
        assert!(!i5(&g));
    }
}
