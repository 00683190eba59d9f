//! Edge sets carried by short cycles near a ring: non-contractible cycles,
//! cycles surrounding a ring that cross a given one, and cycles bound to a
//! 6- or 7-ring.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cycles::cycles_up_to;
use crate::map::EmbeddedGraph;
use crate::props::cycle_edge_list;
use crate::regions::{classify_edges, edge_mask, regions, Topology};

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ShortCycleError {
    #[error("ring index {0} out of range")]
    NoSuchRing(usize),
    #[error("K0 is not a cycle of the graph")]
    NotACycle,
    #[error("K0 does not surround the ring")]
    NotSurrounding,
    #[error("ring has length {0}, expected {1}")]
    RingLength(usize, usize),
}

fn edges_on(cycles: &[Vec<usize>], g: &EmbeddedGraph) -> Vec<usize> {
    let set: BTreeSet<usize> = cycles.iter().flat_map(|c| cycle_edge_list(g, c)).collect();
    set.into_iter().collect()
}

/// Non-contractible cycles of length at most `k`.
pub fn noncontractible_cycles(g: &EmbeddedGraph, k: usize) -> Vec<Vec<usize>> {
    cycles_up_to(&g.adjacency(), k)
        .into_iter()
        .filter(|c| !classify_edges(g, &cycle_edge_list(g, c)).is_contractible())
        .collect()
}

/// Edges lying on non-contractible cycles of length at most `k`.
pub fn noncontractible_edges(g: &EmbeddedGraph, k: usize) -> Vec<usize> {
    edges_on(&noncontractible_cycles(g, k), g)
}

/// For a cycle surrounding ring `r`: the faces and interior edges of the
/// disk it bounds once the cuff of `r` is capped.
fn ring_side(g: &EmbeddedGraph, r: usize, c: &[usize]) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    let edges = cycle_edge_list(g, c);
    let cl = classify_edges(g, &edges);
    match cl.topology {
        Topology::Surrounds(ref rs) if rs.contains(&r) => {}
        _ => return None,
    }
    let regs = regions(g, &edge_mask(g, &edges), &[]);
    let reg = regs.regions.iter().find(|x| x.genus == 0 && x.walks.len() == 1 && x.cuffs == [r])?;
    Some((reg.faces.iter().copied().collect(), reg.edges.iter().copied().collect()))
}

/// Edges drawn outside the closed disk of `k0` that lie on (≤7)-cycles
/// surrounding ring `r` and incomparable with `k0`.
pub fn concentric_edges(g: &EmbeddedGraph, r: usize, k0: &[usize]) -> Result<Vec<usize>, ShortCycleError> {
    if r >= g.rings().len() {
        return Err(ShortCycleError::NoSuchRing(r));
    }
    if crate::regions::cycle_edges(g, k0).is_err() {
        return Err(ShortCycleError::NotACycle);
    }
    let (d0, inside0) = ring_side(g, r, k0).ok_or(ShortCycleError::NotSurrounding)?;
    let on0: BTreeSet<usize> = cycle_edge_list(g, k0).into_iter().collect();
    let mut out = BTreeSet::new();
    for c in cycles_up_to(&g.adjacency(), 7) {
        let Some((d, _)) = ring_side(g, r, &c) else { continue };
        if d.is_subset(&d0) || d0.is_subset(&d) {
            continue;
        }
        for e in cycle_edge_list(g, &c) {
            if !on0.contains(&e) && !inside0.contains(&e) {
                out.insert(e);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Edges on non-contractible (≤7)-cycles sharing a vertex with ring `r`.
pub fn near_ring_edges(g: &EmbeddedGraph, r: usize) -> Result<Vec<usize>, ShortCycleError> {
    let ring: BTreeSet<usize> = g.rings().get(r).ok_or(ShortCycleError::NoSuchRing(r))?.vertices().into_iter().collect();
    let cs: Vec<_> = noncontractible_cycles(g, 7).into_iter().filter(|c| c.iter().any(|v| ring.contains(v))).collect();
    Ok(edges_on(&cs, g))
}

/// Whether cycle `c` is bound to the 6-cycle `r`: it shares at least three
/// vertices with it, or edges cr, c'r' join distinct vertices of C−R to
/// distinct non-adjacent vertices of R−C.
pub fn is_bound_to(g: &EmbeddedGraph, r: &[usize], c: &[usize]) -> bool {
    let rs: BTreeSet<usize> = r.iter().copied().collect();
    let cs: BTreeSet<usize> = c.iter().copied().collect();
    if rs.intersection(&cs).count() >= 3 {
        return true;
    }
    let mut links = Vec::new();
    for &x in cs.difference(&rs) {
        for y in g.neighbors(x) {
            if rs.contains(&y) && !cs.contains(&y) {
                links.push((x, y));
            }
        }
    }
    links.iter().enumerate().any(|(i, &(c1, r1))| {
        links[i + 1..].iter().any(|&(c2, r2)| c1 != c2 && r1 != r2 && g.edge_between(r1, r2).is_none())
    })
}

fn ring_cycle(g: &EmbeddedGraph, r: usize, len: usize) -> Result<Vec<usize>, ShortCycleError> {
    let ring = g.rings().get(r).ok_or(ShortCycleError::NoSuchRing(r))?;
    if ring.size() != len {
        return Err(ShortCycleError::RingLength(ring.size(), len));
    }
    Ok(ring.vertices())
}

/// Edges on non-contractible (≤6)-cycles bound to the 6-ring `r`.
pub fn bound6_edges(g: &EmbeddedGraph, r: usize) -> Result<Vec<usize>, ShortCycleError> {
    let rv = ring_cycle(g, r, 6)?;
    let cs: Vec<_> = noncontractible_cycles(g, 6).into_iter().filter(|c| is_bound_to(g, &rv, c)).collect();
    Ok(edges_on(&cs, g))
}

/// Edges on non-contractible 7-cycles sharing at least four vertices with
/// the 7-ring `r`.
pub fn near7_edges(g: &EmbeddedGraph, r: usize) -> Result<Vec<usize>, ShortCycleError> {
    let rv: BTreeSet<usize> = ring_cycle(g, r, 7)?.into_iter().collect();
    let cs: Vec<_> = noncontractible_cycles(g, 7)
        .into_iter()
        .filter(|c| c.len() == 7 && c.iter().filter(|v| rv.contains(v)).count() >= 4)
        .collect();
    Ok(edges_on(&cs, g))
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ShortCycleReport {
    pub noncontractible: Vec<usize>,
    pub concentric: Option<Vec<usize>>,
    /// Present when the ring has length 4.
    pub near_ring: Option<Vec<usize>>,
    /// Present when the ring has length 6.
    pub bound6: Option<Vec<usize>>,
    /// Present when the ring has length 7.
    pub near7: Option<Vec<usize>>,
}

/// All the edge sets above for ring `r`; the ring-length specific ones only
/// where they apply.
pub fn short_cycle_queries(
    g: &EmbeddedGraph,
    r: usize,
    k: usize,
    k0: Option<&[usize]>,
) -> Result<ShortCycleReport, ShortCycleError> {
    let size = g.rings().get(r).ok_or(ShortCycleError::NoSuchRing(r))?.size();
    Ok(ShortCycleReport {
        noncontractible: noncontractible_edges(g, k),
        concentric: k0.map(|k0| concentric_edges(g, r, k0)).transpose()?,
        near_ring: (size == 4).then(|| near_ring_edges(g, r)).transpose()?,
        bound6: (size == 6).then(|| bound6_edges(g, r)).transpose()?,
        near7: (size == 7).then(|| near7_edges(g, r)).transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_chain, pentagonal_tube, six_ring_with_triangle, ChainEmbedding};

    #[test]
    fn broken_chain_four_cycles() {
        let c = make_chain(2, ChainEmbedding::BrokenCylinder).unwrap();
        let g = &c.graph;
        let fours = noncontractible_cycles(g, 4);
        let all = cycles_up_to(&g.adjacency(), 4);
        assert_eq!(fours.len(), all.len());
        // Oracle: union of the cycles' edges by endpoint pairs.
        let mut pairs = BTreeSet::new();
        for c in &all {
            for i in 0..4 {
                let (a, b) = (c[i], c[(i + 1) % 4]);
                pairs.insert((a.min(b), a.max(b)));
            }
        }
        assert_eq!(noncontractible_edges(g, 4).len(), pairs.len());
    }

    #[test]
    fn triangle_bound_to_six_ring() {
        let g = six_ring_with_triangle();
        assert!(is_bound_to(&g, &[0, 1, 2, 3, 4, 5], &[6, 7, 8]));
        let b = bound6_edges(&g, 0).unwrap();
        assert!(b.contains(&g.edge_between(6, 7).unwrap()));
    }

    #[test]
    fn single_surrounding_cycle_has_nothing_incomparable() {
        let (m, short) = pentagonal_tube(5, 1);
        let g = m.to_embedded().unwrap();
        assert_eq!(concentric_edges(&g, 0, &short[0]).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn k0_must_surround() {
        let (m, _) = pentagonal_tube(5, 1);
        let g = m.to_embedded().unwrap();
        let f = g.faces().iter().find(|f| !f.is_ring_face()).unwrap();
        let c: Vec<usize> = f.walks[0].states.iter().map(|s| g.tail(s.dart)).collect();
        assert_eq!(concentric_edges(&g, 0, &c), Err(ShortCycleError::NotSurrounding));
    }
}
