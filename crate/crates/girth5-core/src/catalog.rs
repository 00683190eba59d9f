//! Named graph families: (e1,e2)-chains and their embeddings, exceptional
//! disk graphs E0–E5, Mycielski graphs of odd cycles, and a fixed set of
//! cylinder instances for the short-cycle bounds.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::map::{from_neighbor_rotations, from_signed_rotations, EmbeddedGraph, EmbeddingError, Ring};
use crate::plane::{PDart, PlaneMap};

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("ring length {0} is too short for {1:?}")]
    TooShort(usize, ExceptionalClass),
    #[error("attachment offsets do not give the required face lengths")]
    BadAttachment,
    #[error("not a disk instance: {0}")]
    NotDisk(&'static str),
    #[error("broken chains need at least two steps (got {0})")]
    ChainTooShort(usize),
    #[error("odd cycle of length at least 5 required (got {0})")]
    BadCycle(usize),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

// ---------------------------------------------------------------- chains

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainEmbedding {
    /// The plane embedding.
    Abstract,
    /// Crosscaps on e1 and e2: a Klein bottle embedding.
    CanonicalKlein,
    /// e1 and e2 removed; the two 4-faces they leave are the rings.
    BrokenCylinder,
}

#[derive(Clone, Debug)]
pub struct Chain {
    pub graph: EmbeddedGraph,
    pub steps: usize,
    pub e1: [usize; 2],
    pub e2: [usize; 2],
    /// The separating 4-cycles u1 y1 u2' y2 added by each step.
    pub levels: Vec<[usize; 4]>,
    /// Pair on the first ring (ends of e1) and the matching pair on the last
    /// ring: in a 3-coloring, if the first differs so does the second.
    pub first_pair: [usize; 2],
    pub last_pair: [usize; 2],
}

fn chain_rotations(k: usize) -> (Vec<Vec<usize>>, [usize; 2], [usize; 2], Vec<[usize; 4]>) {
    let mut rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
    let e1 = [0, 1];
    let mut e2 = [2, 3];
    let mut levels = Vec::new();
    for _ in 0..k {
        let [u1, u2] = e2;
        let n = rot.len();
        let (y1, y2, u2p) = (n, n + 1, n + 2);
        let i = rot[u1].iter().position(|&x| x == u2).unwrap();
        rot[u1].splice(i..=i, [y1, y2]);
        let j = rot[u2].iter().position(|&x| x == u1).unwrap();
        rot[u2][j] = u2p;
        rot.push(vec![u1, u2p, y2]);
        rot.push(vec![u1, y1, u2p]);
        rot.push(vec![y2, y1, u2]);
        levels.push([u1, y1, u2p, y2]);
        e2 = [y1, y2];
    }
    (rot, e1, e2, levels)
}

/// The (e1,e2)-chain with `k` steps (4 + 3k vertices).
pub fn make_chain(k: usize, embedding: ChainEmbedding) -> Result<Chain, CatalogError> {
    let (rot, e1, e2, levels) = chain_rotations(k);
    let (first_pair, last_pair) = match levels.last() {
        Some(l) => (e1, [l[0], l[2]]),
        None => (e1, e2),
    };
    let graph = match embedding {
        ChainEmbedding::Abstract => from_neighbor_rotations(&rot, Vec::new())?,
        ChainEmbedding::CanonicalKlein => {
            from_signed_rotations(&rot, &[(e1[0], e1[1]), (e2[0], e2[1])], Vec::new())?
        }
        ChainEmbedding::BrokenCylinder => {
            if k < 2 {
                return Err(CatalogError::ChainTooShort(k));
            }
            let mut m = PlaneMap { rot, rings: Vec::new() };
            m.remove_edge(e1[0], e1[1]);
            m.remove_edge(e2[0], e2[1]);
            let faces = m.faces();
            for e in [e1, e2] {
                let f = faces
                    .iter()
                    .find(|f| f.len() == 4 && f.iter().any(|d| d.0 == e[0]) && f.iter().any(|d| d.0 == e[1]))
                    .expect("4-face left by a removed edge");
                m.rings.push(f.iter().map(|d| d.0).collect());
            }
            m.to_embedded()?
        }
    };
    Ok(Chain { graph, steps: k, e1, e2, levels, first_pair, last_pair })
}

/// Whether `g` is a broken chain (rings up to relabelling and reflection),
/// with its step count.
pub fn is_broken_chain(g: &EmbeddedGraph) -> Option<usize> {
    let n = g.n_vertices();
    if n < 10 || (n - 4) % 3 != 0 || g.rings().len() != 2 {
        return None;
    }
    let k = (n - 4) / 3;
    let chain = make_chain(k, ChainEmbedding::BrokenCylinder).ok()?;
    (crate::canon::canonical_form(g) == crate::canon::canonical_form(&chain.graph)).then_some(k)
}

// ---------------------------------------------------------- exceptional

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ExceptionalClass {
    E0,
    E1,
    E2,
    E3,
    E4,
    E5,
    None,
}

impl ExceptionalClass {
    pub const ALL: [ExceptionalClass; 6] = [
        ExceptionalClass::E0,
        ExceptionalClass::E1,
        ExceptionalClass::E2,
        ExceptionalClass::E3,
        ExceptionalClass::E4,
        ExceptionalClass::E5,
    ];

    pub fn is_exceptional(self) -> bool {
        self != ExceptionalClass::None
    }

    pub fn is_very_exceptional(self) -> bool {
        matches!(self, ExceptionalClass::E1 | ExceptionalClass::E2 | ExceptionalClass::E3)
    }

    pub fn min_length(self) -> usize {
        match self {
            ExceptionalClass::E0 | ExceptionalClass::None => 5,
            ExceptionalClass::E1 => 8,
            ExceptionalClass::E2 => 9,
            ExceptionalClass::E3 => 11,
            ExceptionalClass::E4 | ExceptionalClass::E5 => 10,
        }
    }

    pub fn default_offsets(self) -> &'static [usize] {
        match self {
            ExceptionalClass::E0 | ExceptionalClass::None => &[],
            ExceptionalClass::E1 => &[4],
            ExceptionalClass::E2 => &[3, 6],
            ExceptionalClass::E3 => &[3, 7],
            ExceptionalClass::E4 => &[3, 5, 8],
            ExceptionalClass::E5 => &[2, 4, 6, 8],
        }
    }

    /// Internal face lengths required for ring length `l` (E1 has none).
    fn face_lengths(self, l: usize) -> Option<Vec<usize>> {
        let mut v = match self {
            ExceptionalClass::E0 => vec![l],
            ExceptionalClass::E2 => vec![5, 5, l - 4],
            ExceptionalClass::E3 => vec![5, 6, l - 5],
            ExceptionalClass::E4 => vec![5, 5, 5, l - 5],
            ExceptionalClass::E5 => vec![5, 5, 5, 5, 5, l - 5],
            ExceptionalClass::E1 | ExceptionalClass::None => return None,
        };
        v.sort();
        Some(v)
    }
}

/// A non-ring face holding a corner at `x` and one at `y`; the longest
/// such face wins.
fn corners(m: &PlaneMap, x: usize, y: usize) -> Option<(PDart, PDart)> {
    let faces = m.faces();
    let ring = m.ring_faces(&faces);
    let mut best: Option<(usize, PDart, PDart)> = None;
    for (fi, f) in faces.iter().enumerate() {
        if ring.contains(&fi) {
            continue;
        }
        let a = f.iter().copied().find(|d| d.0 == x);
        let b = f.iter().copied().find(|d| d.0 == y);
        if let (Some(a), Some(b)) = (a, b) {
            if best.map_or(true, |(l, _, _)| f.len() > l) {
                best = Some((f.len(), a, b));
            }
        }
    }
    best.map(|(_, a, b)| (a, b))
}

fn path(m: &mut PlaneMap, x: usize, y: usize, len: usize) -> Result<Vec<usize>, CatalogError> {
    let (a, b) = corners(m, x, y).ok_or(CatalogError::BadAttachment)?;
    Ok(m.add_path(a, b, len))
}

/// An exceptional disk graph with ring 0..l-1.  `offsets` default to
/// [`ExceptionalClass::default_offsets`]:
/// E1 `[a]` chord r0 r_a; E2/E3 `[a,b]` a vertex on r0, r_a, r_b;
/// E4 `[a,b,c]` adjacent v, w with v on r0, r_a and w on r_b, r_c;
/// E5 `[a1..a4]` a facial 5-cycle v0..v4 with v_i on r_{a_i} (a0 = 0).
pub fn make_exceptional(
    class: ExceptionalClass,
    l: usize,
    offsets: Option<&[usize]>,
) -> Result<EmbeddedGraph, CatalogError> {
    if class == ExceptionalClass::None {
        return Err(CatalogError::BadAttachment);
    }
    if l < class.min_length() {
        return Err(CatalogError::TooShort(l, class));
    }
    let off = offsets.unwrap_or(class.default_offsets());
    if off.len() != class.default_offsets().len() || off.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CatalogError::BadAttachment);
    }
    if off.iter().any(|&a| a == 0 || a >= l) {
        return Err(CatalogError::BadAttachment);
    }
    let mut m = PlaneMap::disk(l);
    match class {
        ExceptionalClass::E0 | ExceptionalClass::None => {}
        ExceptionalClass::E1 => {
            if off[0] < 2 || off[0] > l - 2 {
                return Err(CatalogError::BadAttachment);
            }
            path(&mut m, 0, off[0], 1)?;
        }
        ExceptionalClass::E2 | ExceptionalClass::E3 => {
            let v = path(&mut m, 0, off[0], 2)?[0];
            path(&mut m, v, off[1], 1)?;
        }
        ExceptionalClass::E4 => {
            let v = path(&mut m, 0, off[0], 2)?[0];
            let w = path(&mut m, v, off[2], 2)?[0];
            path(&mut m, w, off[1], 1)?;
        }
        ExceptionalClass::E5 => {
            let vs = path(&mut m, 0, off[0], 3)?;
            let (v0, mut last) = (vs[0], vs[1]);
            for &a in &off[1..] {
                last = path(&mut m, last, a, 2)?[0];
            }
            path(&mut m, last, v0, 1)?;
        }
    }
    let g = m.to_embedded()?;
    if classify_exceptional(&g)? != class {
        return Err(CatalogError::BadAttachment);
    }
    Ok(g)
}

/// Which of E0–E5 a disk graph with one facial ring satisfies.
pub fn classify_exceptional(g: &EmbeddedGraph) -> Result<ExceptionalClass, CatalogError> {
    let r = match g.rings() {
        [Ring::Facial(r)] => r,
        _ => return Err(CatalogError::NotDisk("exactly one facial ring required")),
    };
    if g.euler_genus().0 != 0 || g.n_components() != 1 {
        return Err(CatalogError::NotDisk("graph is not connected in the sphere"));
    }
    let l = r.len();
    if l < 5 {
        return Err(CatalogError::NotDisk("ring shorter than five"));
    }
    let ring_of = g.ring_of_vertex();
    let ring_edge = g.ring_edges();
    let internal: Vec<usize> = (0..g.n_vertices()).filter(|&v| ring_of[v].is_none()).collect();
    let extra_edges = ring_edge.iter().filter(|&&x| !x).count();
    let mut lens: Vec<usize> = g.faces().iter().filter(|f| !f.is_ring_face()).map(|f| f.length).collect();
    lens.sort();
    let all_cubic = internal.iter().all(|&v| g.degree(v) == 3);
    let faces_match = |c: ExceptionalClass| l >= c.min_length() && c.face_lengths(l).as_ref() == Some(&lens);
    if internal.is_empty() && extra_edges == 0 {
        return Ok(ExceptionalClass::E0);
    }
    if internal.is_empty() && extra_edges == 1 && l >= 8 {
        return Ok(ExceptionalClass::E1);
    }
    if internal.len() == 1 && all_cubic {
        for c in [ExceptionalClass::E2, ExceptionalClass::E3] {
            if faces_match(c) {
                return Ok(c);
            }
        }
    }
    if internal.len() == 2 && all_cubic && g.edge_between(internal[0], internal[1]).is_some() {
        if faces_match(ExceptionalClass::E4) {
            return Ok(ExceptionalClass::E4);
        }
    }
    if internal.len() == 5 && all_cubic && faces_match(ExceptionalClass::E5) {
        let set: BTreeSet<usize> = internal.iter().copied().collect();
        let facial = g.faces().iter().any(|f| {
            f.walks.len() == 1
                && f.length == 5
                && f.walks[0].states.iter().all(|s| set.contains(&g.tail(s.dart)))
        });
        if facial {
            return Ok(ExceptionalClass::E5);
        }
    }
    Ok(ExceptionalClass::None)
}

// ------------------------------------------------------------ mycielski

/// The Mycielski graph of the cycle C_l, with its neighbour lists taken as
/// the rotation system (the surface is whatever that produces).
pub fn make_mycielski(l: usize) -> Result<EmbeddedGraph, CatalogError> {
    if l < 5 || l % 2 == 0 {
        return Err(CatalogError::BadCycle(l));
    }
    // 0..l cycle, l..2l shadows, 2l apex.
    let mut adj = vec![Vec::new(); 2 * l + 1];
    let mut add = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for i in 0..l {
        let (p, q) = (i, (i + 1) % l);
        add(p, q);
        add(l + i, q);
        add(l + q, p);
        add(l + i, 2 * l);
    }
    Ok(from_neighbor_rotations(&adj, Vec::new())?)
}

// ---------------------------------------------------- cylinder instances

/// Concentric cycles of sizes m, 2m, m, 2m, ..., m (with `belts` cycles of
/// size 2m), joined so every internal face is a 5-face.  The outermost and
/// innermost m-cycles are the rings.  Returns the map and the m-cycles.
pub fn pentagonal_tube(m: usize, belts: usize) -> (PlaneMap, Vec<Vec<usize>>) {
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut n = 0;
    for j in 0..2 * belts + 1 {
        let size = if j % 2 == 0 { m } else { 2 * m };
        layers.push((n..n + size).collect());
        n += size;
    }
    let mut outward: Vec<Option<usize>> = vec![None; n];
    let mut inward: Vec<Option<usize>> = vec![None; n];
    for j in 0..layers.len() - 1 {
        let (a, b) = (&layers[j], &layers[j + 1]);
        if j % 2 == 0 {
            // m-cycle outside, 2m-cycle inside: a_i -- b_{2i}.
            for i in 0..m {
                inward[a[i]] = Some(b[2 * i]);
                outward[b[2 * i]] = Some(a[i]);
            }
        } else {
            // 2m-cycle outside, m-cycle inside: a_{2i+1} -- b_i.
            for i in 0..m {
                inward[a[2 * i + 1]] = Some(b[i]);
                outward[b[i]] = Some(a[2 * i + 1]);
            }
        }
    }
    let mut rot = vec![Vec::new(); n];
    for layer in &layers {
        let k = layer.len();
        for i in 0..k {
            let v = layer[i];
            rot[v].push(layer[(i + 1) % k]);
            rot[v].extend(outward[v]);
            rot[v].push(layer[(i + k - 1) % k]);
            rot[v].extend(inward[v]);
        }
    }
    let mut map = PlaneMap { rot, rings: Vec::new() };
    let short: Vec<Vec<usize>> = layers.iter().step_by(2).cloned().collect();
    for r in [&short[0], short.last().unwrap()] {
        map.rings.push(facial_order(&map, r));
    }
    (map, short)
}

/// The face walk whose vertex set is exactly `verts`, as a vertex sequence.
fn facial_order(m: &PlaneMap, verts: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = verts.iter().copied().collect();
    m.faces()
        .into_iter()
        .find(|f| f.len() == verts.len() && f.iter().all(|d| set.contains(&d.0)))
        .expect("cycle bounds a face")
        .iter()
        .map(|d| d.0)
        .collect()
}

/// A 6-ring with a triangle ring inside, each triangle vertex joined to
/// every second ring vertex; all faces between them are 5-faces.
pub fn six_ring_with_triangle() -> EmbeddedGraph {
    // ring 0..6 ccw, triangle 6,7,8 ccw; t_i -- r_{2i}.
    let mut rot = vec![Vec::new(); 9];
    for i in 0..6 {
        rot[i].push((i + 1) % 6);
        rot[i].push((i + 5) % 6);
        if i % 2 == 0 {
            rot[i].push(6 + i / 2);
        }
    }
    for t in 0..3 {
        rot[6 + t] = vec![6 + (t + 1) % 3, 2 * t, 6 + (t + 2) % 3];
    }
    let mut map = PlaneMap { rot, rings: Vec::new() };
    map.rings.push(facial_order(&map, &[0, 1, 2, 3, 4, 5]));
    map.rings.push(facial_order(&map, &[6, 7, 8]));
    map.to_embedded().expect("valid instance")
}

#[derive(Clone, Debug)]
pub struct CylinderInstance {
    pub name: String,
    pub graph: EmbeddedGraph,
    /// Index of the ring the queries are about.
    pub ring: usize,
    /// A cycle surrounding that ring, as a vertex sequence.
    pub k0: Vec<usize>,
}

/// Twenty-five cylinder instances: broken chains (either ring), pentagonal
/// tubes with rings of length 4 to 7, and the 6-ring with a triangle.
pub fn cylinder_instances() -> Vec<CylinderInstance> {
    let mut out = Vec::new();
    for k in 2..=7 {
        let c = make_chain(k, ChainEmbedding::BrokenCylinder).expect("k >= 2");
        let mid = c.levels[(k - 1) / 2];
        for ring in 0..2 {
            out.push(CylinderInstance {
                name: format!("broken-chain-{k}-ring{}", ring + 1),
                graph: c.graph.clone(),
                ring,
                k0: mid.to_vec(),
            });
        }
    }
    for m in 4..=7 {
        for belts in 1..=3 {
            let (map, short) = pentagonal_tube(m, belts);
            let k0 = if belts >= 2 { short[1].clone() } else { map.rings[0].clone() };
            out.push(CylinderInstance {
                name: format!("tube-{m}-{belts}"),
                graph: map.to_embedded().expect("valid tube"),
                ring: 0,
                k0,
            });
        }
    }
    let g = six_ring_with_triangle();
    out.push(CylinderInstance { name: String::from("six-ring-triangle"), graph: g, ring: 0, k0: vec![6, 7, 8] });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_faces() {
        for k in 0..=4 {
            let c = make_chain(k, ChainEmbedding::Abstract).unwrap();
            let g = &c.graph;
            assert_eq!(g.n_vertices(), 4 + 3 * k);
            assert_eq!(g.euler_genus(), (0, true));
            let tri = g.faces().iter().filter(|f| f.length == 3).count();
            assert_eq!(tri, 4);
            assert!(g.faces().iter().all(|f| f.length == 3 || f.length == 5));
        }
    }

    #[test]
    fn klein_chain_genus() {
        for k in 0..=3 {
            let c = make_chain(k, ChainEmbedding::CanonicalKlein).unwrap();
            assert_eq!(c.graph.euler_genus(), (2, false));
        }
    }

    #[test]
    fn broken_chain_rings() {
        assert_eq!(make_chain(1, ChainEmbedding::BrokenCylinder).unwrap_err(), CatalogError::ChainTooShort(1));
        let c = make_chain(2, ChainEmbedding::BrokenCylinder).unwrap();
        assert_eq!(c.graph.euler_genus(), (0, true));
        assert_eq!(c.graph.rings().len(), 2);
        assert!(c.graph.rings().iter().all(|r| r.size() == 4));
    }

    #[test]
    fn exceptional_round_trip() {
        for class in ExceptionalClass::ALL {
            for l in class.min_length()..=14 {
                let g = make_exceptional(class, l, None).unwrap();
                assert_eq!(classify_exceptional(&g).unwrap(), class, "{class:?} {l}");
            }
        }
        assert!(matches!(make_exceptional(ExceptionalClass::E3, 10, None), Err(CatalogError::TooShort(10, _))));
        assert_eq!(make_exceptional(ExceptionalClass::E2, 10, Some(&[3, 5])).unwrap_err(), CatalogError::BadAttachment);
    }

    #[test]
    fn e5_has_a_pentagon_of_cubic_vertices() {
        let g = make_exceptional(ExceptionalClass::E5, 10, None).unwrap();
        assert_eq!(g.n_vertices(), 15);
        let mut lens: Vec<usize> = g.faces().iter().filter(|f| !f.is_ring_face()).map(|f| f.length).collect();
        lens.sort();
        assert_eq!(lens, vec![5; 6]);
    }

    #[test]
    fn mycielski_sizes() {
        assert_eq!(make_mycielski(5).unwrap().n_vertices(), 11);
        assert_eq!(make_mycielski(7).unwrap().n_vertices(), 15);
        assert_eq!(make_mycielski(6).unwrap_err(), CatalogError::BadCycle(6));
    }

    #[test]
    fn tubes_have_pentagonal_faces() {
        for m in 4..=7 {
            for belts in 1..=3 {
                let g = pentagonal_tube(m, belts).0.to_embedded().unwrap();
                assert_eq!(g.euler_genus(), (0, true));
                assert!(g.faces().iter().filter(|f| !f.is_ring_face()).all(|f| f.length == 5), "{m} {belts}");
            }
        }
        let g = six_ring_with_triangle();
        assert!(g.faces().iter().filter(|f| !f.is_ring_face()).all(|f| f.length == 5));
    }

    #[test]
    fn twenty_five_instances() {
        assert_eq!(cylinder_instances().len(), 25);
    }
}
