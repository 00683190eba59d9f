//! Graphs drawn inside the regions of a subgraph: cutting along a cycle, the
//! interior of a contractible cycle, and expansions of face sets.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::map::{Dart, EmbeddedGraph, EmbeddingError, Ring};
use crate::regions::{self, corner_before, cycle_edges, disk_side, edge_mask, CycleError, JWalk, Regions};

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ExpansionError {
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("C is facial")]
    Facial,
    #[error("cycle is not contractible")]
    NotContractible,
    #[error("out of supported scope: {0}")]
    OutOfScope(&'static str),
    #[error("J and S do not satisfy the expansion hypothesis: {0}")]
    BadCover(&'static str),
    #[error("region graph is not a valid embedding: {0}")]
    Embedding(#[from] EmbeddingError),
}

/// A graph drawn in one region, with the original vertex and edge of
/// every vertex and edge.
#[derive(Clone, Debug)]
pub struct RegionGraph {
    pub graph: EmbeddedGraph,
    pub orig_vertex: Vec<usize>,
    pub orig_edge: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum RingMode {
    /// Boundary walks become facial rings; lone J-vertices stay vertex rings.
    Natural,
    /// Boundary copies not already on a cuff become non-weak vertex rings.
    Cut,
}

struct Copy {
    orig: usize,
    frame: i8,
    /// Rotation in G terms, in the copy's frame: first and last entries are
    /// the walk darts (absent for a lone vertex).
    darts: Vec<Dart>,
    walk: Option<(usize, usize)>,
}

fn build_region_graph(
    g: &EmbeddedGraph,
    regs: &Regions,
    r: usize,
    mode: RingMode,
) -> Result<RegionGraph, ExpansionError> {
    let reg = &regs.regions[r];
    if reg.faces.iter().any(|&f| g.faces()[f].walks.len() > 1) {
        return Err(ExpansionError::OutOfScope("region contains a face with several boundary walks"));
    }
    let mut copies: Vec<Copy> = Vec::new();
    for &v in &reg.vertices {
        copies.push(Copy { orig: v, frame: 1, darts: g.rotation(v).to_vec(), walk: None });
    }
    // Walk edges: (walk, position) -> new edge between copy i and copy i+1.
    let mut walk_copy_start = Vec::new();
    for (wi, w) in reg.walks.iter().enumerate() {
        walk_copy_start.push(copies.len());
        match w {
            JWalk::Vertex(v) => {
                copies.push(Copy { orig: *v, frame: 1, darts: g.rotation(*v).to_vec(), walk: None });
            }
            JWalk::Closed(states) => {
                if states.len() < 3 {
                    return Err(ExpansionError::OutOfScope("boundary walk shorter than three"));
                }
                let l = states.len();
                for i in 0..l {
                    let s = states[i];
                    let a = states[(i + l - 1) % l].dart.flip();
                    let v = g.tail(s.dart);
                    let mut darts = vec![a];
                    let mut x = a;
                    loop {
                        x = if s.orient > 0 { g.succ(v, x) } else { g.pred(v, x) };
                        darts.push(x);
                        if x == s.dart {
                            break;
                        }
                    }
                    copies.push(Copy { orig: v, frame: s.orient, darts, walk: Some((wi, i)) });
                }
            }
        }
    }
    // Owner of every non-walk G-dart, and of every G-corner.
    let mut owner: BTreeMap<Dart, usize> = BTreeMap::new();
    let mut corner_owner: BTreeMap<Dart, (usize, usize)> = BTreeMap::new();
    for (ci, c) in copies.iter().enumerate() {
        let (lo, hi) = if c.walk.is_some() { (1, c.darts.len() - 1) } else { (0, c.darts.len()) };
        for &d in &c.darts[lo..hi] {
            owner.insert(d, ci);
        }
        let k = c.darts.len();
        let pairs = if c.walk.is_some() { k - 1 } else { k };
        for j in 0..pairs {
            let (p, q) = (c.darts[j], c.darts[(j + 1) % k]);
            corner_owner.insert(if c.frame > 0 { p } else { q }, (ci, j));
        }
    }
    // New edges: walk copies first, then interior edges.
    let mut ends: Vec<[usize; 2]> = Vec::new();
    let mut orig_edge = Vec::new();
    let mut sign = Vec::new();
    let mut walk_edge: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (wi, w) in reg.walks.iter().enumerate() {
        if let JWalk::Closed(states) = w {
            let l = states.len();
            let base = walk_copy_start[wi];
            for i in 0..l {
                walk_edge.insert((wi, i), ends.len());
                ends.push([base + i, base + (i + 1) % l]);
                orig_edge.push(states[i].dart.edge());
                sign.push(1);
            }
        }
    }
    let mut new_edge = vec![usize::MAX; g.n_edges()];
    for &e in &reg.edges {
        let d0 = Dart::new(e, 0);
        let (c0, c1) = (owner[&d0], owner[&d0.flip()]);
        new_edge[e] = ends.len();
        ends.push([c0, c1]);
        orig_edge.push(e);
        sign.push(g.sign(e) * copies[c0].frame * copies[c1].frame);
    }
    let new_dart = |ci: usize, pos: usize| -> Dart {
        let c = &copies[ci];
        if let Some((wi, i)) = c.walk {
            let l = reg.walks[wi].len();
            if pos == 0 {
                return Dart::new(walk_edge[&(wi, (i + l - 1) % l)], 1);
            }
            if pos == c.darts.len() - 1 {
                return Dart::new(walk_edge[&(wi, i)], 0);
            }
        }
        let d = c.darts[pos];
        Dart::new(new_edge[d.edge()], d.end())
    };
    let rot: Vec<Vec<Dart>> = (0..copies.len())
        .map(|ci| (0..copies[ci].darts.len()).map(|p| new_dart(ci, p)).collect())
        .collect();
    // A G corner, as (copy, the new dart it follows).
    let corner_dart = |z: Dart| -> Option<(usize, Dart)> {
        let &(ci, j) = corner_owner.get(&z)?;
        Some((ci, new_dart(ci, j)))
    };
    let mut rings: Vec<Ring> = Vec::new();
    let mut on_cuff = vec![false; copies.len()];
    for &ri in &reg.cuffs {
        match &g.rings()[ri] {
            Ring::Facial(_) => {
                if mode == RingMode::Natural {
                    return Err(ExpansionError::BadCover("a face of S contains a facial ring"));
                }
                let f = g.faces().iter().position(|f| f.ring == Some(ri)).expect("ring face");
                let mut cyc = Vec::new();
                for s in &g.faces()[f].walks[0].states {
                    let (ci, _) = corner_dart(corner_before(g, *s)).expect("ring corner in region");
                    cyc.push(ci);
                }
                for &ci in &cyc {
                    on_cuff[ci] = true;
                }
                rings.push(Ring::Facial(cyc));
            }
            Ring::Vertex { v, weak, at } => {
                if g.degree(*v) == 0 {
                    let ci = copies.iter().position(|c| c.orig == *v).expect("lone vertex copied");
                    on_cuff[ci] = true;
                    rings.push(Ring::Vertex { v: ci, weak: *weak, at: None });
                    continue;
                }
                let z = at.unwrap_or(g.rotation(*v)[0]);
                let (ci, d) = corner_dart(z).expect("cuff corner in region");
                if mode == RingMode::Natural && copies[ci].walk.is_some() {
                    // The copy lies on a facial natural ring.
                    continue;
                }
                on_cuff[ci] = true;
                rings.push(Ring::Vertex { v: ci, weak: *weak, at: Some(d) });
            }
        }
    }
    match mode {
        RingMode::Natural => {
            let mut natural = Vec::new();
            for (wi, w) in reg.walks.iter().enumerate() {
                match w {
                    JWalk::Closed(states) => {
                        let base = walk_copy_start[wi];
                        natural.push(Ring::Facial((0..states.len()).map(|i| base + i).collect()));
                    }
                    JWalk::Vertex(v) => {
                        let weak = g.rings().iter().find_map(|r| match r {
                            Ring::Vertex { v: rv, weak, .. } if rv == v => Some(*weak),
                            _ => None,
                        });
                        let weak = weak.ok_or(ExpansionError::BadCover("isolated vertex of J is not a vertex ring"))?;
                        let ci = walk_copy_start[wi];
                        rings.retain(|r| !matches!(r, Ring::Vertex { v, .. } if *v == ci));
                        let at = g.rings().iter().find_map(|r| match r {
                            Ring::Vertex { v: rv, at, .. } if rv == v => *at,
                            _ => None,
                        });
                        let at = at.or_else(|| g.rotation(*v).first().copied()).and_then(|z| corner_dart(z).map(|x| x.1));
                        natural.push(Ring::Vertex { v: ci, weak, at });
                    }
                }
            }
            natural.extend(rings);
            rings = natural;
        }
        RingMode::Cut => {
            for (ci, c) in copies.iter().enumerate() {
                if c.walk.is_some() && !on_cuff[ci] {
                    let last = c.darts.len() - 1;
                    rings.push(Ring::Vertex { v: ci, weak: false, at: Some(new_dart(ci, last)) });
                }
            }
        }
    }
    // Ids: the first copy of a vertex or edge keeps its id.
    let mut next_v = g.vertex_ids().iter().copied().max().map_or(0, |m| m + 1);
    let mut used_v = vec![false; g.n_vertices()];
    let vid: Vec<u32> = copies
        .iter()
        .map(|c| {
            if used_v[c.orig] {
                next_v += 1;
                next_v - 1
            } else {
                used_v[c.orig] = true;
                g.vertex_id(c.orig)
            }
        })
        .collect();
    let mut next_e = g.edge_ids().iter().copied().max().map_or(0, |m| m + 1);
    let mut used_e = vec![false; g.n_edges()];
    let eid: Vec<u32> = orig_edge
        .iter()
        .map(|&e| {
            if used_e[e] {
                next_e += 1;
                next_e - 1
            } else {
                used_e[e] = true;
                g.edge_id(e)
            }
        })
        .collect();
    let orig_vertex = copies.iter().map(|c| c.orig).collect();
    let graph = EmbeddedGraph::assemble(vid, eid, ends, sign, rot, rings, Vec::new())?;
    Ok(RegionGraph { graph, orig_vertex, orig_edge })
}

/// Cuts the surface along a simple cycle.  Boundary copies that are not on
/// a cuff of their piece become non-weak vertex rings.
pub fn cut_along_cycle(g: &EmbeddedGraph, c: &[usize]) -> Result<Vec<RegionGraph>, ExpansionError> {
    let edges = cycle_edges(g, c)?;
    let regs = regions::regions(g, &edge_mask(g, &edges), &[]);
    (0..regs.regions.len()).map(|r| build_region_graph(g, &regs, r, RingMode::Cut)).collect()
}

/// The graph drawn in the closed disk bounded by a contractible cycle, with
/// the cycle as its only ring.
pub fn disk_interior(g: &EmbeddedGraph, c: &[usize]) -> Result<RegionGraph, ExpansionError> {
    let edges = cycle_edges(g, c)?;
    let regs = regions::regions(g, &edge_mask(g, &edges), &[]);
    let r = disk_side(&regs).ok_or(ExpansionError::NotContractible)?;
    if regs.regions[r].faces.len() == 1 {
        return Err(ExpansionError::Facial);
    }
    build_region_graph(g, &regs, r, RingMode::Natural)
}

/// The regions of J, for choosing S.
pub fn j_regions(g: &EmbeddedGraph, j_edges: &[usize], j_vertices: &[usize]) -> Regions {
    regions::regions(g, &edge_mask(g, j_edges), j_vertices)
}

/// The expansion of the regions `s` of J, each with its natural rings.
/// Only open 2-cell regions and cylinder regions are supported.
pub fn face_expansion(
    g: &EmbeddedGraph,
    j_edges: &[usize],
    j_vertices: &[usize],
    s: &[usize],
) -> Result<Vec<RegionGraph>, ExpansionError> {
    let regs = j_regions(g, j_edges, j_vertices);
    // J must be the union of the boundaries of the chosen regions.
    let mut covered = vec![false; g.n_edges()];
    let mut covered_v = vec![false; g.n_vertices()];
    for &r in s {
        let reg = regs.regions.get(r).ok_or(ExpansionError::BadCover("unknown region"))?;
        for w in &reg.walks {
            match w {
                JWalk::Closed(states) => {
                    for st in states {
                        covered[st.dart.edge()] = true;
                        covered_v[g.tail(st.dart)] = true;
                    }
                }
                JWalk::Vertex(v) => covered_v[*v] = true,
            }
        }
        for &ri in &reg.cuffs {
            let in_j = match &g.rings()[ri] {
                Ring::Vertex { v, .. } => regs.jvertex[*v],
                Ring::Facial(_) => false,
            };
            if !in_j {
                return Err(ExpansionError::BadCover("a cuff inside S is not a vertex ring of J"));
            }
        }
        let open_disk = reg.genus == 0 && reg.walks.len() == 1;
        let cylinder = reg.genus == 0 && reg.walks.len() == 2;
        if !open_disk && !cylinder {
            return Err(ExpansionError::OutOfScope("region is neither open 2-cell nor a cylinder"));
        }
    }
    if j_edges.iter().any(|&e| !covered[e]) || (0..g.n_vertices()).any(|v| regs.jvertex[v] && !covered_v[v]) {
        return Err(ExpansionError::BadCover("J is not the union of the boundaries of S"));
    }
    s.iter().map(|&r| build_region_graph(g, &regs, r, RingMode::Natural)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::from_neighbor_rotations;

    fn k4() -> EmbeddedGraph {
        from_neighbor_rotations(&[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]], vec![]).unwrap()
    }

    #[test]
    fn cut_k4_along_triangle() {
        let g = k4();
        let pieces = cut_along_cycle(&g, &[0, 1, 2]).unwrap();
        assert_eq!(pieces.len(), 2);
        let nv: usize = pieces.iter().map(|p| p.graph.n_vertices()).sum();
        assert_eq!(nv, 4 + 3);
        for p in &pieces {
            assert_eq!(p.graph.euler_genus().0, 0);
        }
    }

    #[test]
    fn k4_triangle_is_facial() {
        let g = k4();
        assert_eq!(disk_interior(&g, &[0, 1, 2]).unwrap_err(), ExpansionError::Facial);
    }
}
