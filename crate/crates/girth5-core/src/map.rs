//! Combinatorial maps with edge signs and rings.
//!
//! A graph is stored as a signed rotation system.  Every edge owns two darts;
//! dart `(e, 0)` leaves the first endpoint and `(e, 1)` the second.  Faces are
//! traced on the patched surface, so ring faces are ordinary faces here.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::unionfind::UnionFind;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart(u32);

impl Dart {
    pub fn new(edge: usize, end: u8) -> Dart {
        Dart((edge as u32) << 1 | (end as u32 & 1))
    }
    pub fn edge(self) -> usize {
        (self.0 >> 1) as usize
    }
    pub fn end(self) -> u8 {
        (self.0 & 1) as u8
    }
    pub fn flip(self) -> Dart {
        Dart(self.0 ^ 1)
    }
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A position in a face traversal: leave the tail of `dart` with local
/// orientation `orient` (+1 follows the stored rotation, -1 reverses it).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct State {
    pub dart: Dart,
    pub orient: i8,
}

impl State {
    pub fn index(self) -> usize {
        self.dart.index() * 2 + usize::from(self.orient < 0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Ring {
    /// Boundary cycle of a cuff, as a vertex sequence.
    Facial(Vec<usize>),
    /// A single vertex touching a cuff.  The cuff sits in the corner
    /// clockwise after `at` (defaults to the first dart of the rotation).
    Vertex { v: usize, weak: bool, at: Option<Dart> },
}

impl Ring {
    /// |R|: edges of a facial ring; 1 for a vertex ring, 0 if weak.
    pub fn size(&self) -> usize {
        match self {
            Ring::Facial(c) => c.len(),
            Ring::Vertex { weak, .. } => usize::from(!*weak),
        }
    }
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Ring::Facial(c) => c.clone(),
            Ring::Vertex { v, .. } => vec![*v],
        }
    }
    pub fn is_facial(&self) -> bool {
        matches!(self, Ring::Facial(_))
    }
    pub fn is_weak(&self) -> bool {
        matches!(self, Ring::Vertex { weak: true, .. })
    }
}

/// A ring in terms of external ids, as written in a graph document.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingSpec {
    Facial(Vec<u32>),
    Vertex { v: u32, weak: bool, at: Option<(u32, u8)> },
}

/// A corner reference used to glue faces of different components.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CornerRef {
    /// The corner clockwise after the dart `(edge id, end)`.
    Dart(u32, u8),
    /// An isolated vertex.
    Vertex(u32),
}

/// Everything needed to build an [`EmbeddedGraph`], keyed by external ids.
#[derive(Clone, Default, Debug)]
pub struct GraphSpec {
    pub vertices: Vec<u32>,
    /// `(edge id, first endpoint, second endpoint, sign)`
    pub edges: Vec<(u32, u32, u32, i8)>,
    /// Clockwise darts `(edge id, end)` around each vertex.
    pub rotations: Vec<(u32, Vec<(u32, u8)>)>,
    pub rings: Vec<RingSpec>,
    pub joins: Vec<(CornerRef, CornerRef)>,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum EmbeddingError {
    #[error("duplicate vertex {0}")]
    DuplicateVertex(u32),
    #[error("duplicate edge {0}")]
    DuplicateEdge(u32),
    #[error("edge {0} uses unknown vertex {1}")]
    UnknownVertex(u32, u32),
    #[error("edge {0} is a loop")]
    Loop(u32),
    #[error("edges {0} and {1} are parallel")]
    ParallelEdge(u32, u32),
    #[error("unknown edge {0}")]
    UnknownEdge(u32),
    #[error("rotation at vertex {0} is invalid: {1}")]
    BadRotation(u32, &'static str),
    #[error("edge sign must be +1 or -1 (edge {0})")]
    BadSign(u32),
    #[error("ring {0} is not a cycle")]
    RingNotCycle(usize),
    #[error("ring is not facial (ring {0})")]
    RingNotFacial(usize),
    #[error("rings {0} and {1} overlap")]
    RingsOverlap(usize, usize),
    #[error("ring {0} names a cuff corner that does not belong to its vertex")]
    BadCuffCorner(usize),
    #[error("join {0} is invalid: {1}")]
    BadJoin(usize, &'static str),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Walk {
    /// Traversal states; empty for the walk formed by an isolated vertex.
    pub states: Vec<State>,
    /// The isolated vertex, when `states` is empty.
    pub vertex: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceRecord {
    pub walks: Vec<Walk>,
    /// Sum of walk lengths; an isolated vertex ring contributes |R|.
    pub length: usize,
    pub open_2cell: bool,
    pub closed_2cell: bool,
    /// Index of the ring whose cuff this face is, if any.
    pub ring: Option<usize>,
    /// Vertex rings whose cuff lies in this face.
    pub cuffs: Vec<usize>,
}

impl FaceRecord {
    pub fn is_ring_face(&self) -> bool {
        self.ring.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct EmbeddedGraph {
    vid: Vec<u32>,
    eid: Vec<u32>,
    ends: Vec<[usize; 2]>,
    sign: Vec<i8>,
    rot: Vec<Vec<Dart>>,
    pos: Vec<usize>,
    rings: Vec<Ring>,
    joins: Vec<(CornerRef, CornerRef)>,
    faces: Vec<FaceRecord>,
    /// Face of each traversal state (indexed by `State::index`).
    state_face: Vec<usize>,
    /// Component of each vertex.
    comp: Vec<usize>,
    n_comp: usize,
    /// Face-count per component before joins, used for the Euler genus.
    comp_faces: Vec<usize>,
}

impl PartialEq for EmbeddedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vid == other.vid
            && self.eid == other.eid
            && self.ends == other.ends
            && self.sign == other.sign
            && self.rot == other.rot
            && self.rings == other.rings
            && self.joins == other.joins
    }
}

impl EmbeddedGraph {
    /// Validates a specification and traces its faces.
    pub fn build(spec: &GraphSpec) -> Result<EmbeddedGraph, EmbeddingError> {
        let mut vindex = BTreeMap::new();
        for (i, &v) in spec.vertices.iter().enumerate() {
            if vindex.insert(v, i).is_some() {
                return Err(EmbeddingError::DuplicateVertex(v));
            }
        }
        let mut eindex = BTreeMap::new();
        let mut ends = Vec::with_capacity(spec.edges.len());
        let mut sign = Vec::with_capacity(spec.edges.len());
        let mut pairs = BTreeMap::new();
        for (i, &(e, a, b, s)) in spec.edges.iter().enumerate() {
            if eindex.insert(e, i).is_some() {
                return Err(EmbeddingError::DuplicateEdge(e));
            }
            let ia = *vindex.get(&a).ok_or(EmbeddingError::UnknownVertex(e, a))?;
            let ib = *vindex.get(&b).ok_or(EmbeddingError::UnknownVertex(e, b))?;
            if ia == ib {
                return Err(EmbeddingError::Loop(e));
            }
            if s != 1 && s != -1 {
                return Err(EmbeddingError::BadSign(e));
            }
            let key = (ia.min(ib), ia.max(ib));
            if let Some(&other) = pairs.get(&key) {
                return Err(EmbeddingError::ParallelEdge(other, e));
            }
            pairs.insert(key, e);
            ends.push([ia, ib]);
            sign.push(s);
        }
        let n = spec.vertices.len();
        let mut rot: Vec<Option<Vec<Dart>>> = vec![None; n];
        for (v, darts) in &spec.rotations {
            let iv = *vindex
                .get(v)
                .ok_or(EmbeddingError::BadRotation(*v, "unknown vertex"))?;
            if rot[iv].is_some() {
                return Err(EmbeddingError::BadRotation(*v, "rotation given twice"));
            }
            let mut list = Vec::with_capacity(darts.len());
            for &(e, end) in darts {
                let ie = *eindex.get(&e).ok_or(EmbeddingError::UnknownEdge(e))?;
                if end > 1 {
                    return Err(EmbeddingError::BadRotation(*v, "dart end must be 0 or 1"));
                }
                if ends[ie][end as usize] != iv {
                    return Err(EmbeddingError::BadRotation(*v, "dart does not leave this vertex"));
                }
                list.push(Dart::new(ie, end));
            }
            rot[iv] = Some(list);
        }
        let mut degree = vec![0usize; n];
        for e in &ends {
            degree[e[0]] += 1;
            degree[e[1]] += 1;
        }
        let mut rot_final = Vec::with_capacity(n);
        for (i, r) in rot.into_iter().enumerate() {
            let r = r.unwrap_or_default();
            if r.len() != degree[i] {
                return Err(EmbeddingError::BadRotation(
                    spec.vertices[i],
                    "rotation must list every incident dart once",
                ));
            }
            let mut seen = r.clone();
            seen.sort();
            seen.dedup();
            if seen.len() != r.len() {
                return Err(EmbeddingError::BadRotation(spec.vertices[i], "repeated dart"));
            }
            rot_final.push(r);
        }
        let mut rings = Vec::with_capacity(spec.rings.len());
        for (ri, r) in spec.rings.iter().enumerate() {
            rings.push(match r {
                RingSpec::Facial(cycle) => {
                    let mut c = Vec::with_capacity(cycle.len());
                    for v in cycle {
                        c.push(*vindex.get(v).ok_or(EmbeddingError::RingNotCycle(ri))?);
                    }
                    Ring::Facial(c)
                }
                RingSpec::Vertex { v, weak, at } => {
                    let iv = *vindex.get(v).ok_or(EmbeddingError::RingNotCycle(ri))?;
                    let at = match at {
                        None => None,
                        Some((e, end)) => {
                            let ie = *eindex.get(e).ok_or(EmbeddingError::BadCuffCorner(ri))?;
                            if *end > 1 || ends[ie][*end as usize] != iv {
                                return Err(EmbeddingError::BadCuffCorner(ri));
                            }
                            Some(Dart::new(ie, *end))
                        }
                    };
                    Ring::Vertex { v: iv, weak: *weak, at }
                }
            });
        }
        Self::assemble(
            spec.vertices.clone(),
            spec.edges.iter().map(|e| e.0).collect(),
            ends,
            sign,
            rot_final,
            rings,
            spec.joins.clone(),
        )
    }

    /// Builds a graph from internal indices; used by constructors that already
    /// know the structure is simple.
    pub(crate) fn assemble(
        vid: Vec<u32>,
        eid: Vec<u32>,
        ends: Vec<[usize; 2]>,
        sign: Vec<i8>,
        rot: Vec<Vec<Dart>>,
        rings: Vec<Ring>,
        joins: Vec<(CornerRef, CornerRef)>,
    ) -> Result<EmbeddedGraph, EmbeddingError> {
        let n = vid.len();
        let mut pos = vec![0usize; ends.len() * 2];
        for r in &rot {
            for (i, d) in r.iter().enumerate() {
                pos[d.index()] = i;
            }
        }
        let mut g = EmbeddedGraph {
            vid,
            eid,
            ends,
            sign,
            rot,
            pos,
            rings,
            joins,
            faces: Vec::new(),
            state_face: Vec::new(),
            comp: vec![0; n],
            n_comp: 0,
            comp_faces: Vec::new(),
        };
        g.compute_components();
        g.check_rings()?;
        g.trace()?;
        Ok(g)
    }

    fn compute_components(&mut self) {
        let n = self.vid.len();
        let mut uf = UnionFind::new(n);
        for e in &self.ends {
            uf.union(e[0], e[1]);
        }
        let mut label = BTreeMap::new();
        for v in 0..n {
            let r = uf.find(v);
            let next = label.len();
            self.comp[v] = *label.entry(r).or_insert(next);
        }
        self.n_comp = label.len();
    }

    fn check_rings(&self) -> Result<(), EmbeddingError> {
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        for (ri, r) in self.rings.iter().enumerate() {
            if let Ring::Facial(c) = r {
                if c.len() < 3 {
                    return Err(EmbeddingError::RingNotCycle(ri));
                }
                let mut s = c.clone();
                s.sort();
                s.dedup();
                if s.len() != c.len() {
                    return Err(EmbeddingError::RingNotCycle(ri));
                }
                for i in 0..c.len() {
                    if self.edge_between(c[i], c[(i + 1) % c.len()]).is_none() {
                        return Err(EmbeddingError::RingNotCycle(ri));
                    }
                }
            }
            for v in r.vertices() {
                if let Some(&other) = owner.get(&v) {
                    if other != ri {
                        return Err(EmbeddingError::RingsOverlap(other, ri));
                    }
                }
                owner.insert(v, ri);
            }
        }
        Ok(())
    }

    fn trace(&mut self) -> Result<(), EmbeddingError> {
        let ns = self.ends.len() * 4;
        let mut orbit = vec![usize::MAX; ns];
        let mut orbits: Vec<Vec<State>> = Vec::new();
        for d in 0..self.ends.len() * 2 {
            for o in [1i8, -1] {
                let s0 = State { dart: Dart(d as u32), orient: o };
                if orbit[s0.index()] != usize::MAX {
                    continue;
                }
                let id = orbits.len();
                let mut walk = Vec::new();
                let mut s = s0;
                loop {
                    orbit[s.index()] = id;
                    walk.push(s);
                    s = self.step(s);
                    if s == s0 {
                        break;
                    }
                }
                orbits.push(walk);
            }
        }
        // Pair each orbit with its reverse; the pair is one face.
        let mut face_of_orbit = vec![usize::MAX; orbits.len()];
        let mut faces_walks: Vec<Walk> = Vec::new();
        let mut face_comp: Vec<usize> = Vec::new();
        for (id, walk) in orbits.iter().enumerate() {
            if face_of_orbit[id] != usize::MAX {
                continue;
            }
            let rev = orbit[self.reverse(walk[0]).index()];
            debug_assert_ne!(rev, id, "face traversal is its own reverse");
            let f = faces_walks.len();
            face_of_orbit[id] = f;
            face_of_orbit[rev] = f;
            faces_walks.push(Walk { states: walk.clone(), vertex: None });
            face_comp.push(self.comp[self.tail(walk[0].dart)]);
        }
        for v in 0..self.vid.len() {
            if self.rot[v].is_empty() {
                faces_walks.push(Walk { states: Vec::new(), vertex: Some(v) });
                face_comp.push(self.comp[v]);
            }
        }
        let mut comp_faces = vec![0usize; self.n_comp];
        for &c in &face_comp {
            comp_faces[c] += 1;
        }
        let mut state_face = vec![0usize; ns];
        for (s, &o) in orbit.iter().enumerate() {
            state_face[s] = face_of_orbit[o];
        }
        let nf = faces_walks.len();
        let isolated_face = |v: usize| -> Option<usize> {
            faces_walks.iter().position(|w| w.vertex == Some(v))
        };
        // Glue faces named by join lines.
        let mut uf = UnionFind::new(nf);
        let vindex: BTreeMap<u32, usize> = self.vid.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let eindex: BTreeMap<u32, usize> = self.eid.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut join_faces = Vec::new();
        let mut comp_uf = UnionFind::new(self.n_comp);
        for (ji, (a, b)) in self.joins.iter().enumerate() {
            let mut fs = [0usize; 2];
            for (k, c) in [a, b].into_iter().enumerate() {
                fs[k] = match *c {
                    CornerRef::Dart(e, end) => {
                        let ie = *eindex.get(&e).ok_or(EmbeddingError::BadJoin(ji, "unknown edge"))?;
                        if end > 1 {
                            return Err(EmbeddingError::BadJoin(ji, "dart end must be 0 or 1"));
                        }
                        let d = Dart::new(ie, end);
                        let v = self.tail(d);
                        state_face[State { dart: self.succ(v, d), orient: 1 }.index()]
                    }
                    CornerRef::Vertex(v) => {
                        let iv = *vindex.get(&v).ok_or(EmbeddingError::BadJoin(ji, "unknown vertex"))?;
                        isolated_face(iv).ok_or(EmbeddingError::BadJoin(ji, "vertex is not isolated"))?
                    }
                };
            }
            let (ca, cb) = (face_comp[fs[0]], face_comp[fs[1]]);
            if ca == cb {
                return Err(EmbeddingError::BadJoin(ji, "both corners lie in the same component"));
            }
            if !comp_uf.union(ca, cb) {
                return Err(EmbeddingError::BadJoin(ji, "joins would add a handle"));
            }
            join_faces.push(fs);
            uf.union(fs[0], fs[1]);
        }
        let mut root_to_face = BTreeMap::new();
        let mut merged: Vec<Vec<usize>> = Vec::new();
        for f in 0..nf {
            let r = uf.find(f);
            let next = merged.len();
            let id = *root_to_face.entry(r).or_insert(next);
            if id == merged.len() {
                merged.push(Vec::new());
            }
            merged[id].push(f);
        }
        let mut remap = vec![0usize; nf];
        for (id, group) in merged.iter().enumerate() {
            for &f in group {
                remap[f] = id;
            }
        }
        for sf in state_face.iter_mut() {
            *sf = remap[*sf];
        }
        let mut faces: Vec<FaceRecord> = merged
            .iter()
            .map(|group| {
                let walks: Vec<Walk> = group.iter().map(|&f| faces_walks[f].clone()).collect();
                FaceRecord { walks, length: 0, open_2cell: false, closed_2cell: false, ring: None, cuffs: Vec::new() }
            })
            .collect();
        // Rings.
        for (ri, r) in self.rings.iter().enumerate() {
            match r {
                Ring::Facial(c) => {
                    let f = self
                        .find_cycle_face(c, &faces)
                        .ok_or(EmbeddingError::RingNotFacial(ri))?;
                    if faces[f].ring.is_some() || faces[f].walks.len() != 1 {
                        return Err(EmbeddingError::RingNotFacial(ri));
                    }
                    faces[f].ring = Some(ri);
                }
                Ring::Vertex { v, at, .. } => {
                    let f = if self.rot[*v].is_empty() {
                        remap[isolated_face(*v).expect("isolated vertex has a walk")]
                    } else {
                        let d = at.unwrap_or(self.rot[*v][0]);
                        state_face[State { dart: self.succ(*v, d), orient: 1 }.index()]
                    };
                    faces[f].cuffs.push(ri);
                }
            }
        }
        for (ji, fs) in join_faces.iter().enumerate() {
            if faces[remap[fs[0]]].ring.is_some() {
                return Err(EmbeddingError::BadJoin(ji, "a ring face cannot be joined"));
            }
        }
        for f in faces.iter_mut() {
            let mut len = 0;
            for w in &f.walks {
                len += w.states.len();
                if let Some(v) = w.vertex {
                    for r in &self.rings {
                        if let Ring::Vertex { v: rv, .. } = r {
                            if *rv == v {
                                len += r.size();
                            }
                        }
                    }
                }
            }
            f.length = len;
            f.open_2cell = f.walks.len() == 1;
            f.closed_2cell = f.open_2cell && {
                let w = &f.walks[0];
                let mut vs: Vec<usize> = w.states.iter().map(|s| self.tail(s.dart)).collect();
                let k = vs.len();
                vs.sort();
                vs.dedup();
                k >= 3 && vs.len() == k
            };
        }
        self.faces = faces;
        self.state_face = state_face;
        self.comp_faces = comp_faces;
        Ok(())
    }

    fn find_cycle_face(&self, c: &[usize], faces: &[FaceRecord]) -> Option<usize> {
        let k = c.len();
        for (fi, f) in faces.iter().enumerate() {
            for w in &f.walks {
                if w.states.len() != k {
                    continue;
                }
                let seq: Vec<usize> = w.states.iter().map(|s| self.tail(s.dart)).collect();
                if cyclic_equal_either_direction(&seq, c) {
                    return Some(fi);
                }
            }
        }
        None
    }

    /// One step of face traversal.
    pub fn step(&self, s: State) -> State {
        let e = s.dart.edge();
        let o = s.orient * self.sign[e];
        let a = s.dart.flip();
        let w = self.tail(a);
        let next = if o > 0 { self.succ(w, a) } else { self.pred(w, a) };
        State { dart: next, orient: o }
    }

    /// The state traversing the same face side in the opposite direction.
    pub fn reverse(&self, s: State) -> State {
        let e = s.dart.edge();
        State { dart: s.dart.flip(), orient: -s.orient * self.sign[e] }
    }

    // ---- accessors ----

    pub fn n_vertices(&self) -> usize {
        self.vid.len()
    }
    pub fn n_edges(&self) -> usize {
        self.ends.len()
    }
    pub fn vertex_id(&self, v: usize) -> u32 {
        self.vid[v]
    }
    pub fn edge_id(&self, e: usize) -> u32 {
        self.eid[e]
    }
    pub fn vertex_index(&self, id: u32) -> Option<usize> {
        self.vid.iter().position(|&v| v == id)
    }
    pub fn edge_index(&self, id: u32) -> Option<usize> {
        self.eid.iter().position(|&e| e == id)
    }
    pub fn vertex_ids(&self) -> &[u32] {
        &self.vid
    }
    pub fn edge_ids(&self) -> &[u32] {
        &self.eid
    }
    pub fn endpoints(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }
    pub fn sign(&self, e: usize) -> i8 {
        self.sign[e]
    }
    pub fn tail(&self, d: Dart) -> usize {
        self.ends[d.edge()][d.end() as usize]
    }
    pub fn head(&self, d: Dart) -> usize {
        self.ends[d.edge()][1 - d.end() as usize]
    }
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rot[v]
    }
    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }
    pub fn succ(&self, v: usize, d: Dart) -> Dart {
        let r = &self.rot[v];
        r[(self.pos[d.index()] + 1) % r.len()]
    }
    pub fn pred(&self, v: usize, d: Dart) -> Dart {
        let r = &self.rot[v];
        r[(self.pos[d.index()] + r.len() - 1) % r.len()]
    }
    pub fn position(&self, d: Dart) -> usize {
        self.pos[d.index()]
    }
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rot[v].iter().map(move |&d| self.head(d))
    }
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.rot[u].iter().find(|&&d| self.head(d) == v).map(|d| d.edge())
    }
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n_vertices()).map(|v| self.neighbors(v).collect()).collect()
    }
    pub fn rings(&self) -> &[Ring] {
        &self.rings
    }
    pub fn joins(&self) -> &[(CornerRef, CornerRef)] {
        &self.joins
    }
    pub fn faces(&self) -> &[FaceRecord] {
        &self.faces
    }
    pub fn face_of(&self, s: State) -> usize {
        self.state_face[s.index()]
    }
    /// Face containing the corner clockwise after dart `d` at its tail.
    pub fn corner_face(&self, d: Dart) -> usize {
        let v = self.tail(d);
        self.face_of(State { dart: self.succ(v, d), orient: 1 })
    }
    pub fn component_of(&self, v: usize) -> usize {
        self.comp[v]
    }
    pub fn n_components(&self) -> usize {
        self.n_comp
    }

    /// Ring index of each vertex, if it is a ring vertex.
    pub fn ring_of_vertex(&self) -> Vec<Option<usize>> {
        let mut r = vec![None; self.n_vertices()];
        for (ri, ring) in self.rings.iter().enumerate() {
            for v in ring.vertices() {
                r[v] = Some(ri);
            }
        }
        r
    }

    /// Edges lying on facial rings.
    pub fn ring_edges(&self) -> Vec<bool> {
        let mut on = vec![false; self.n_edges()];
        for r in &self.rings {
            if let Ring::Facial(c) = r {
                for i in 0..c.len() {
                    let e = self.edge_between(c[i], c[(i + 1) % c.len()]).expect("validated ring");
                    on[e] = true;
                }
            }
        }
        on
    }

    /// Faces of one component before joins, with their count of vertices and edges.
    fn component_counts(&self) -> Vec<(usize, usize, usize)> {
        let mut counts = vec![(0usize, 0usize, 0usize); self.n_comp];
        for v in 0..self.n_vertices() {
            counts[self.comp[v]].0 += 1;
        }
        for e in &self.ends {
            counts[self.comp[e[0]]].1 += 1;
        }
        for (c, f) in self.comp_faces.iter().enumerate() {
            counts[c].2 = *f;
        }
        counts
    }

    /// Euler genus of the patched surface, summed over components, and
    /// whether every cycle has an even number of negative edges.
    pub fn euler_genus(&self) -> (usize, bool) {
        let mut g = 0i64;
        for (v, e, f) in self.component_counts() {
            g += 2 - (v as i64 - e as i64 + f as i64);
        }
        (g as usize, self.is_orientable())
    }

    /// Euler genus of the component containing vertex `v`.
    pub fn component_genus(&self, v: usize) -> usize {
        let (nv, ne, nf) = self.component_counts()[self.comp[v]];
        (2 - (nv as i64 - ne as i64 + nf as i64)) as usize
    }

    pub fn is_orientable(&self) -> bool {
        let n = self.n_vertices();
        let mut frame = vec![0i8; n];
        for s in 0..n {
            if frame[s] != 0 {
                continue;
            }
            frame[s] = 1;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &d in &self.rot[v] {
                    let w = self.head(d);
                    let want = frame[v] * self.sign[d.edge()];
                    if frame[w] == 0 {
                        frame[w] = want;
                        stack.push(w);
                    } else if frame[w] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Sum of |R| over all rings.
    pub fn ring_length_total(&self) -> usize {
        self.rings.iter().map(|r| r.size()).sum()
    }

    /// A copy with different rings; fails if the new rings are invalid.
    pub fn with_rings(&self, rings: Vec<Ring>) -> Result<EmbeddedGraph, EmbeddingError> {
        Self::assemble(
            self.vid.clone(),
            self.eid.clone(),
            self.ends.clone(),
            self.sign.clone(),
            self.rot.clone(),
            rings,
            self.joins.clone(),
        )
    }

    /// The graph with edge `e` removed; rings and joins are kept when still valid.
    pub fn without_edge(&self, e: usize) -> Result<EmbeddedGraph, EmbeddingError> {
        let keep: Vec<usize> = (0..self.n_edges()).filter(|&x| x != e).collect();
        self.edge_subgraph(&keep)
    }

    /// Subgraph on all vertices using only the listed edges (in the given order).
    pub fn edge_subgraph(&self, keep: &[usize]) -> Result<EmbeddedGraph, EmbeddingError> {
        let mut new_index = vec![usize::MAX; self.n_edges()];
        for (i, &e) in keep.iter().enumerate() {
            new_index[e] = i;
        }
        let remap = |d: Dart| Dart::new(new_index[d.edge()], d.end());
        let rot: Vec<Vec<Dart>> = self
            .rot
            .iter()
            .map(|r| r.iter().filter(|d| new_index[d.edge()] != usize::MAX).map(|&d| remap(d)).collect())
            .collect();
        let rings = self
            .rings
            .iter()
            .map(|r| match r {
                Ring::Vertex { v, weak, at } => {
                    // Keep the cuff in the same corner: walk back to a surviving dart.
                    let at = at.or_else(|| self.rot[*v].first().copied());
                    let at = at.and_then(|d| {
                        let mut x = d;
                        for _ in 0..self.rot[*v].len() {
                            if new_index[x.edge()] != usize::MAX {
                                return Some(remap(x));
                            }
                            x = self.pred(*v, x);
                        }
                        None
                    });
                    Ring::Vertex { v: *v, weak: *weak, at }
                }
                other => other.clone(),
            })
            .collect();
        Self::assemble(
            self.vid.clone(),
            keep.iter().map(|&e| self.eid[e]).collect(),
            keep.iter().map(|&e| self.ends[e]).collect(),
            keep.iter().map(|&e| self.sign[e]).collect(),
            rot,
            rings,
            Vec::new(),
        )
    }

    /// Component `c` alone, with the rings it contains and no joins.
    pub fn component_subgraph(&self, c: usize) -> EmbeddedGraph {
        let verts: Vec<usize> = (0..self.n_vertices()).filter(|&v| self.comp[v] == c).collect();
        self.vertex_subgraph(&verts).expect("a component keeps a valid embedding")
    }

    /// The subgraph induced by a vertex set closed under adjacency (a union
    /// of components), keeping rotations, rings inside it and no joins.
    pub fn vertex_subgraph(&self, verts: &[usize]) -> Result<EmbeddedGraph, EmbeddingError> {
        let mut new_v = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in verts.iter().enumerate() {
            new_v[v] = i;
        }
        let edges: Vec<usize> = (0..self.n_edges()).filter(|&e| new_v[self.ends[e][0]] != usize::MAX).collect();
        let mut new_e = vec![usize::MAX; self.n_edges()];
        for (i, &e) in edges.iter().enumerate() {
            new_e[e] = i;
        }
        let remap = |d: Dart| Dart::new(new_e[d.edge()], d.end());
        let rings = self
            .rings
            .iter()
            .filter(|r| r.vertices().iter().all(|&v| new_v[v] != usize::MAX))
            .map(|r| match r {
                Ring::Facial(cy) => Ring::Facial(cy.iter().map(|&v| new_v[v]).collect()),
                Ring::Vertex { v, weak, at } => Ring::Vertex { v: new_v[*v], weak: *weak, at: at.map(remap) },
            })
            .collect();
        Self::assemble(
            verts.iter().map(|&v| self.vid[v]).collect(),
            edges.iter().map(|&e| self.eid[e]).collect(),
            edges.iter().map(|&e| [new_v[self.ends[e][0]], new_v[self.ends[e][1]]]).collect(),
            edges.iter().map(|&e| self.sign[e]).collect(),
            verts.iter().map(|&v| self.rot[v].iter().map(|&d| remap(d)).collect()).collect(),
            rings,
            Vec::new(),
        )
    }

    /// The specification this graph was built from (external ids).
    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vid.clone(),
            edges: (0..self.n_edges())
                .map(|e| (self.eid[e], self.vid[self.ends[e][0]], self.vid[self.ends[e][1]], self.sign[e]))
                .collect(),
            rotations: (0..self.n_vertices())
                .filter(|&v| !self.rot[v].is_empty())
                .map(|v| (self.vid[v], self.rot[v].iter().map(|d| (self.eid[d.edge()], d.end())).collect()))
                .collect(),
            rings: self
                .rings
                .iter()
                .map(|r| match r {
                    Ring::Facial(c) => RingSpec::Facial(c.iter().map(|&v| self.vid[v]).collect()),
                    Ring::Vertex { v, weak, at } => RingSpec::Vertex {
                        v: self.vid[*v],
                        weak: *weak,
                        at: at.map(|d| (self.eid[d.edge()], d.end())),
                    },
                })
                .collect(),
            joins: self.joins.clone(),
        }
    }
}

impl fmt::Display for EmbeddedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph with {} vertices, {} edges, {} rings", self.n_vertices(), self.n_edges(), self.rings.len())
    }
}

pub(crate) fn cyclic_equal_either_direction(a: &[usize], b: &[usize]) -> bool {
    let k = a.len();
    if k != b.len() {
        return false;
    }
    if k == 0 {
        return true;
    }
    for start in 0..k {
        if (0..k).all(|i| a[(start + i) % k] == b[i]) {
            return true;
        }
        if (0..k).all(|i| a[(start + k - i) % k] == b[i]) {
            return true;
        }
    }
    false
}

/// Builds an orientable embedding from clockwise neighbour lists, numbering
/// vertices `0..n` and edges in order of first appearance.
pub fn from_neighbor_rotations(adj: &[Vec<usize>], rings: Vec<Ring>) -> Result<EmbeddedGraph, EmbeddingError> {
    from_signed_rotations(adj, &[], rings)
}

/// [`from_neighbor_rotations`] with sign −1 on the listed edges.
pub fn from_signed_rotations(
    adj: &[Vec<usize>],
    negative: &[(usize, usize)],
    rings: Vec<Ring>,
) -> Result<EmbeddedGraph, EmbeddingError> {
    let n = adj.len();
    let mut ends = Vec::new();
    let mut edge_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            let key = (u.min(v), u.max(v));
            if !edge_of.contains_key(&key) {
                edge_of.insert(key, ends.len());
                ends.push([key.0, key.1]);
            }
        }
    }
    let rot: Vec<Vec<Dart>> = adj
        .iter()
        .enumerate()
        .map(|(u, list)| {
            list.iter()
                .map(|&v| {
                    let e = edge_of[&(u.min(v), u.max(v))];
                    Dart::new(e, u8::from(ends[e][0] != u))
                })
                .collect()
        })
        .collect();
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            if v == u || v >= n || !adj[v].contains(&u) {
                return Err(EmbeddingError::BadRotation(u as u32, "neighbour lists are not symmetric"));
            }
        }
    }
    let m = ends.len();
    let mut sign = vec![1; m];
    for &(u, v) in negative {
        let e = *edge_of.get(&(u.min(v), u.max(v))).ok_or(EmbeddingError::BadRotation(u as u32, "signed edge missing"))?;
        sign[e] = -1;
    }
    EmbeddedGraph::assemble(
        (0..n as u32).collect(),
        (0..m as u32).collect(),
        ends,
        sign,
        rot,
        rings,
        Vec::new(),
    )
}
