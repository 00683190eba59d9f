//! Regions of the patched surface cut out by a subgraph J, and the
//! classification of cycles that builds on them.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::map::{Dart, EmbeddedGraph, Ring, State};
use crate::unionfind::UnionFind;

/// A boundary walk of a region: a closed walk of J, or a J-vertex with no
/// J-edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum JWalk {
    Closed(Vec<State>),
    Vertex(usize),
}

impl JWalk {
    pub fn len(&self) -> usize {
        match self {
            JWalk::Closed(s) => s.len(),
            JWalk::Vertex(_) => 0,
        }
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug)]
pub struct RegionInfo {
    /// Faces of G inside the region.
    pub faces: Vec<usize>,
    /// Vertices of G not in J that lie inside.
    pub vertices: Vec<usize>,
    /// Edges of G not in J that lie inside.
    pub edges: Vec<usize>,
    pub walks: Vec<JWalk>,
    pub chi: i64,
    /// Euler genus of the region after capping its boundary walks.
    pub genus: i64,
    /// Rings whose cuff lies in the region (facial ring faces and vertex-ring cuffs).
    pub cuffs: Vec<usize>,
}

impl RegionInfo {
    /// An open disk free of cuffs.
    pub fn is_clean_disk(&self) -> bool {
        self.genus == 0 && self.walks.len() == 1 && self.cuffs.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Regions {
    pub region_of_face: Vec<usize>,
    pub regions: Vec<RegionInfo>,
    pub jedge: Vec<bool>,
    pub jvertex: Vec<bool>,
}

/// Next J-dart after `d` around its tail in direction `o`.
fn j_next(g: &EmbeddedGraph, jedge: &[bool], d: Dart, o: i8) -> Dart {
    let v = g.tail(d);
    let mut x = d;
    loop {
        x = if o > 0 { g.succ(v, x) } else { g.pred(v, x) };
        if jedge[x.edge()] {
            return x;
        }
    }
}

/// One step of a boundary walk of J, traced with the rotation J inherits from G.
pub fn j_step(g: &EmbeddedGraph, jedge: &[bool], s: State) -> State {
    let o = s.orient * g.sign(s.dart.edge());
    let a = s.dart.flip();
    State { dart: j_next(g, jedge, a, o), orient: o }
}

/// The face corner at the tail of `s.dart` that a boundary walk occupies
/// just before leaving through `s`, named by the dart it follows clockwise.
pub fn corner_before(g: &EmbeddedGraph, s: State) -> Dart {
    if s.orient > 0 {
        g.pred(g.tail(s.dart), s.dart)
    } else {
        s.dart
    }
}

/// Computes the regions of Σ̂ − J.  `extra_vertices` adds J-vertices that
/// carry no J-edges.
pub fn regions(g: &EmbeddedGraph, jedge: &[bool], extra_vertices: &[usize]) -> Regions {
    let nf = g.faces().len();
    let mut jvertex = vec![false; g.n_vertices()];
    for e in 0..g.n_edges() {
        if jedge[e] {
            let [a, b] = g.endpoints(e);
            jvertex[a] = true;
            jvertex[b] = true;
        }
    }
    for &v in extra_vertices {
        jvertex[v] = true;
    }
    let side = |e: usize, o: i8| g.face_of(State { dart: Dart::new(e, 0), orient: o });
    let mut uf = UnionFind::new(nf);
    for e in 0..g.n_edges() {
        if !jedge[e] {
            uf.union(side(e, 1), side(e, -1));
        }
    }
    let mut label = vec![usize::MAX; nf];
    let mut regions: Vec<RegionInfo> = Vec::new();
    for f in 0..nf {
        let r = uf.find(f);
        if label[r] == usize::MAX {
            label[r] = regions.len();
            regions.push(RegionInfo {
                faces: Vec::new(),
                vertices: Vec::new(),
                edges: Vec::new(),
                walks: Vec::new(),
                chi: 0,
                genus: 0,
                cuffs: Vec::new(),
            });
        }
        label[f] = label[r];
        regions[label[f]].faces.push(f);
    }
    let region_of_face: Vec<usize> = (0..nf).map(|f| label[uf.find(f)]).collect();
    let isolated_face = |v: usize| {
        g.faces()
            .iter()
            .position(|f| f.walks.iter().any(|w| w.vertex == Some(v)))
            .expect("isolated vertex has a face")
    };
    let region_at_vertex = |v: usize| -> usize {
        if g.degree(v) == 0 {
            region_of_face[isolated_face(v)]
        } else {
            region_of_face[g.corner_face(g.rotation(v)[0])]
        }
    };
    for v in 0..g.n_vertices() {
        if !jvertex[v] {
            regions[region_at_vertex(v)].vertices.push(v);
        }
    }
    for e in 0..g.n_edges() {
        if !jedge[e] {
            regions[region_of_face[side(e, 1)]].edges.push(e);
        }
    }
    // Boundary walks.
    let mut seen = vec![false; g.n_edges() * 4];
    for e in 0..g.n_edges() {
        if !jedge[e] {
            continue;
        }
        for end in 0..2u8 {
            for o in [1i8, -1] {
                let s0 = State { dart: Dart::new(e, end), orient: o };
                if seen[s0.index()] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut s = s0;
                loop {
                    seen[s.index()] = true;
                    walk.push(s);
                    s = j_step(g, jedge, s);
                    if s == s0 {
                        break;
                    }
                }
                for st in &walk {
                    seen[g.reverse(*st).index()] = true;
                }
                let r = region_of_face[g.face_of(s0)];
                regions[r].walks.push(JWalk::Closed(walk));
            }
        }
    }
    for v in 0..g.n_vertices() {
        if jvertex[v] && (0..g.degree(v)).all(|i| !jedge[g.rotation(v)[i].edge()]) {
            regions[region_at_vertex(v)].walks.push(JWalk::Vertex(v));
        }
    }
    for (ri, ring) in g.rings().iter().enumerate() {
        match ring {
            Ring::Facial(_) => {
                let f = g.faces().iter().position(|f| f.ring == Some(ri)).expect("ring face");
                regions[region_of_face[f]].cuffs.push(ri);
            }
            Ring::Vertex { .. } => {
                let f = g.faces().iter().position(|f| f.cuffs.contains(&ri)).expect("cuff face");
                regions[region_of_face[f]].cuffs.push(ri);
            }
        }
    }
    for r in regions.iter_mut() {
        let fchi: i64 = r.faces.iter().map(|&f| 2 - g.faces()[f].walks.len() as i64).sum();
        r.chi = r.vertices.len() as i64 - r.edges.len() as i64 + fchi;
        r.genus = 2 - r.walks.len() as i64 - r.chi;
    }
    Regions { region_of_face, regions, jedge: jedge.to_vec(), jvertex }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum CycleError {
    #[error("input is not a cycle")]
    NotACycle,
    #[error("cycle repeats vertex {0}")]
    RepeatedVertex(u32),
}

/// Edge indices of a cycle given as a vertex sequence.
pub fn cycle_edges(g: &EmbeddedGraph, c: &[usize]) -> Result<Vec<usize>, CycleError> {
    if c.len() < 3 {
        return Err(CycleError::NotACycle);
    }
    let mut seen = BTreeSet::new();
    for &v in c {
        if v >= g.n_vertices() {
            return Err(CycleError::NotACycle);
        }
        if !seen.insert(v) {
            return Err(CycleError::RepeatedVertex(g.vertex_id(v)));
        }
    }
    (0..c.len())
        .map(|i| g.edge_between(c[i], c[(i + 1) % c.len()]).ok_or(CycleError::NotACycle))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Topology {
    Contractible,
    /// Not contractible, but contractible once any one of these rings is capped.
    Surrounds(Vec<usize>),
    SeparatingNoncontractible,
    Nonseparating,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleClass {
    pub one_sided: bool,
    pub topology: Topology,
}

impl CycleClass {
    pub fn is_contractible(&self) -> bool {
        self.topology == Topology::Contractible
    }
    pub fn separates(&self) -> bool {
        matches!(
            self.topology,
            Topology::Contractible | Topology::Surrounds(_) | Topology::SeparatingNoncontractible
        )
    }
}

pub fn edge_mask(g: &EmbeddedGraph, edges: &[usize]) -> Vec<bool> {
    let mut m = vec![false; g.n_edges()];
    for &e in edges {
        m[e] = true;
    }
    m
}

/// Classifies a simple cycle by cutting the surface along it.
pub fn cycle_class(g: &EmbeddedGraph, c: &[usize]) -> Result<CycleClass, CycleError> {
    let edges = cycle_edges(g, c)?;
    Ok(classify_edges(g, &edges))
}

/// [`cycle_class`] for a cycle already known to be simple, given by its edges.
pub fn classify_edges(g: &EmbeddedGraph, edges: &[usize]) -> CycleClass {
    let one_sided = edges.iter().map(|&e| g.sign(e) as i32).product::<i32>() < 0;
    let regs = regions(g, &edge_mask(g, edges), &[]);
    classify_regions(&regs, one_sided)
}

pub(crate) fn classify_regions(regs: &Regions, one_sided: bool) -> CycleClass {
    let rs = &regs.regions;
    let topology = if one_sided || rs.len() == 1 {
        Topology::Nonseparating
    } else if rs.iter().any(|r| r.is_clean_disk()) {
        Topology::Contractible
    } else {
        let mut around: Vec<usize> = rs
            .iter()
            .filter(|r| r.genus == 0 && r.walks.len() == 1 && r.cuffs.len() == 1)
            .map(|r| r.cuffs[0])
            .collect();
        around.sort();
        if around.is_empty() {
            Topology::SeparatingNoncontractible
        } else {
            Topology::Surrounds(around)
        }
    };
    CycleClass { one_sided, topology }
}

/// The clean disk bounded by a cycle: the region index with fewest faces
/// among the cuff-free disk sides, if any.
pub fn disk_side(regs: &Regions) -> Option<usize> {
    regs.regions
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_clean_disk())
        .min_by_key(|(i, r)| (r.faces.len(), *i))
        .map(|(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::from_neighbor_rotations;

    fn k4() -> EmbeddedGraph {
        from_neighbor_rotations(&[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]], vec![]).unwrap()
    }

    #[test]
    fn k4_triangles_are_contractible() {
        let g = k4();
        let cl = cycle_class(&g, &[0, 1, 2]).unwrap();
        assert!(!cl.one_sided);
        assert_eq!(cl.topology, Topology::Contractible);
        let regs = regions(&g, &edge_mask(&g, &cycle_edges(&g, &[0, 1, 2]).unwrap()), &[]);
        assert_eq!(regs.regions.len(), 2);
        assert!(regs.regions.iter().all(|r| r.chi == 1 && r.genus == 0));
    }

    #[test]
    fn bad_cycles_rejected() {
        let g = k4();
        assert_eq!(cycle_class(&g, &[0, 1]), Err(CycleError::NotACycle));
        assert_eq!(cycle_class(&g, &[0, 1, 0, 2]), Err(CycleError::RepeatedVertex(0)));
    }
}
