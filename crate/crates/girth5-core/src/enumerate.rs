//! Exhaustive search for small ring-critical plane and cylinder graphs.
//!
//! States are plane maps grown from the rings by adding ears (paths whose
//! ends are distinct vertices on one face).  Every critical graph the search
//! targets has an ear decomposition starting from its rings, so growing
//! ears level by level (by edge count) with canonical deduplication reaches
//! all of them.  Prunes:
//! - girth: an ear of length L between vertices at distance d closes a
//!   cycle of length L + d;
//! - short cycles (cylinder): every (≤4)-cycle must be non-contractible;
//! - slack: with D internal degree-2 vertices, S = 5V − 3E − c and M spare
//!   vertices, each ear of length L lowers D by at most 3 − L
//!   = (2/3)(5 − 2L) + (1/3)(L − 1), and a finished graph has D = 0, S ≥ 0,
//!   so 3D ≤ 2S + M is necessary.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{plane_canonical_form, CanonicalForm};
use crate::coloring::{is_ring_critical_fast, Problem};
use crate::cycles::{cycles_up_to, distances};
use crate::map::EmbeddedGraph;
use crate::plane::{PDart, PlaneMap};
use crate::props::{i1, i2};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchTopology {
    /// One facial ring bounding a disk.
    Disk,
    /// Two facial rings, one on each cuff of the cylinder.
    Cylinder,
    /// One facial ring; the other cuff of the cylinder is a hole.
    CylinderOneRing,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchSpec {
    pub topology: SearchTopology,
    pub ring_lengths: Vec<usize>,
    /// No cycle shorter than this, contractible or not.
    pub girth_floor: usize,
    pub max_internal_vertices: usize,
    /// Every (≤4)-cycle must be non-contractible.
    pub no_contractible_short_cycles: bool,
    /// No edge joins two vertices of one ring other than ring edges.
    pub induced_ring: bool,
    /// Give up after expanding this many states.
    pub max_states: usize,
}

pub const DEFAULT_MAX_STATES: usize = 20_000_000;

impl SearchSpec {
    pub fn disk(l: usize, max_internal: usize) -> SearchSpec {
        SearchSpec {
            topology: SearchTopology::Disk,
            ring_lengths: vec![l],
            girth_floor: 5,
            max_internal_vertices: max_internal,
            no_contractible_short_cycles: true,
            induced_ring: true,
            max_states: DEFAULT_MAX_STATES,
        }
    }

    pub fn cylinder(l1: usize, l2: usize, max_internal: usize) -> SearchSpec {
        SearchSpec {
            topology: SearchTopology::Cylinder,
            ring_lengths: vec![l1, l2],
            girth_floor: 3,
            max_internal_vertices: max_internal,
            no_contractible_short_cycles: true,
            induced_ring: false,
            max_states: DEFAULT_MAX_STATES,
        }
    }

    pub fn one_ring_cylinder(l: usize, max_internal: usize) -> SearchSpec {
        SearchSpec { topology: SearchTopology::CylinderOneRing, ring_lengths: vec![l], ..SearchSpec::cylinder(l, l, max_internal) }
    }

    pub fn validate(&self) -> Result<(), EnumerateError> {
        let rings = match self.topology {
            SearchTopology::Disk | SearchTopology::CylinderOneRing => 1,
            SearchTopology::Cylinder => 2,
        };
        if self.ring_lengths.len() != rings || self.ring_lengths.iter().any(|&l| l < 3) {
            return Err(EnumerateError::BadSpec("ring count or length"));
        }
        if self.topology == SearchTopology::Disk && !self.no_contractible_short_cycles && self.girth_floor < 5 {
            return Err(EnumerateError::BadSpec("disk searches need girth at least 5"));
        }
        if self.max_states == 0 {
            return Err(EnumerateError::BadSpec("state budget must be positive"));
        }
        Ok(())
    }

    fn ring_total(&self) -> usize {
        self.ring_lengths.iter().sum()
    }

    /// Constant c with 5V − 3E ≥ c for every finished graph, when all
    /// non-ring faces other than a hole have length at least five.
    fn slack_constant(&self) -> Option<i64> {
        let five = self.no_contractible_short_cycles || self.girth_floor >= 5;
        five.then(|| {
            let r = self.ring_total() as i64;
            match self.topology {
                SearchTopology::Disk => r + 5,
                SearchTopology::Cylinder => r,
                SearchTopology::CylinderOneRing => r + 3,
            }
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum EnumerateError {
    #[error("invalid search: {0}")]
    BadSpec(&'static str),
    #[error("state budget exceeded after {0} states")]
    BudgetExceeded(usize),
}

/// A critical graph found by the search.
#[derive(Clone, Debug)]
pub struct Found {
    pub key: CanonicalForm,
    pub map: PlaneMap,
    pub graph: EmbeddedGraph,
}

/// What one state contributes: its children and, if it passes every
/// filter, itself.
pub struct Expanded {
    pub children: Vec<(CanonicalForm, PlaneMap)>,
    pub found: Option<Found>,
}

/// Applies the expansion to a batch of states; results must come back in
/// input order.
pub trait BatchMap {
    fn map(&self, items: &[PlaneMap], f: &(dyn Fn(&PlaneMap) -> Expanded + Sync)) -> Vec<Expanded>;
}

pub struct Sequential;

impl BatchMap for Sequential {
    fn map(&self, items: &[PlaneMap], f: &(dyn Fn(&PlaneMap) -> Expanded + Sync)) -> Vec<Expanded> {
        items.iter().map(f).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub found: Vec<Found>,
    pub states: usize,
}

pub struct Search {
    spec: SearchSpec,
}

impl Search {
    pub fn new(spec: SearchSpec) -> Result<Search, EnumerateError> {
        spec.validate()?;
        Ok(Search { spec })
    }

    pub fn spec(&self) -> &SearchSpec {
        &self.spec
    }

    pub fn initial(&self) -> PlaneMap {
        PlaneMap::rings_only(&self.spec.ring_lengths)
    }

    fn n_internal(&self, m: &PlaneMap) -> usize {
        m.n() - self.spec.ring_total()
    }

    fn ring_of(&self, v: usize) -> Option<usize> {
        let mut base = 0;
        for (i, &l) in self.spec.ring_lengths.iter().enumerate() {
            if v < base + l {
                return Some(i);
            }
            base += l;
        }
        None
    }

    /// Whether every short cycle is non-contractible.  For two rings this
    /// means separating the ring faces; for one ring, the non-ring sides
    /// must share a face where the hole can go.
    fn short_cycles_ok(&self, m: &PlaneMap) -> bool {
        let cycles = cycles_up_to(m.adjacency(), 4);
        if cycles.is_empty() {
            return true;
        }
        let faces = m.faces();
        let rf = m.ring_faces(&faces);
        match self.spec.topology {
            SearchTopology::Disk => false,
            SearchTopology::Cylinder => cycles.iter().all(|c| {
                let side = m.sides(&faces, c);
                side[rf[0]] != side[rf[1]]
            }),
            SearchTopology::CylinderOneRing => {
                let mut hole: Vec<bool> = (0..faces.len()).map(|f| f != rf[0]).collect();
                for c in &cycles {
                    let side = m.sides(&faces, c);
                    for f in 0..faces.len() {
                        hole[f] &= side[f] != side[rf[0]];
                    }
                }
                hole.iter().any(|&h| h)
            }
        }
    }

    fn slack_ok(&self, m: &PlaneMap) -> bool {
        let Some(c) = self.spec.slack_constant() else { return true };
        let rt = self.spec.ring_total();
        let d = (rt..m.n()).filter(|&v| m.rot[v].len() == 2).count() as i64;
        let s = 5 * m.n() as i64 - 3 * m.n_edges() as i64 - c;
        let spare = (self.spec.max_internal_vertices - self.n_internal(m)) as i64;
        3 * d <= 2 * s + spare
    }

    /// Corner pairs (on one face) an ear may join.
    fn corner_pairs(&self, m: &PlaneMap) -> Vec<(PDart, PDart)> {
        let faces = m.faces();
        let rf = m.ring_faces(&faces);
        let mut out = Vec::new();
        if self.spec.topology == SearchTopology::Cylinder && !connected(m) {
            // Only the rings so far: the first ear joins them across the annulus.
            let outer: Vec<&Vec<PDart>> =
                (0..faces.len()).filter(|f| !rf.contains(f)).map(|f| &faces[f]).collect();
            let (a, b): (Vec<&Vec<PDart>>, Vec<&Vec<PDart>>) = outer.into_iter().partition(|f| self.ring_of(f[0].0) == Some(0));
            for fa in &a {
                for fb in &b {
                    for &x in fa.iter() {
                        for &y in fb.iter() {
                            out.push((x, y));
                        }
                    }
                }
            }
            return out;
        }
        for (fi, f) in faces.iter().enumerate() {
            if rf.contains(&fi) {
                continue;
            }
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    if f[i].0 != f[j].0 {
                        out.push((f[i], f[j]));
                    }
                }
            }
        }
        out
    }

    pub fn children(&self, m: &PlaneMap) -> Vec<PlaneMap> {
        let spare = self.spec.max_internal_vertices - self.n_internal(m);
        let mut dist_cache: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut out = Vec::new();
        for (a, b) in self.corner_pairs(m) {
            let d = dist_cache.entry(a.0).or_insert_with(|| distances(m.adjacency(), &[a.0]))[b.0];
            for len in 1..=spare + 1 {
                if len == 1 && m.has_edge(a.0, b.0) {
                    continue;
                }
                if d != usize::MAX && len + d < self.spec.girth_floor {
                    continue;
                }
                if len == 1 && self.spec.induced_ring {
                    if let (Some(x), Some(y)) = (self.ring_of(a.0), self.ring_of(b.0)) {
                        if x == y {
                            continue;
                        }
                    }
                }
                let mut child = m.clone();
                child.add_path(a, b, len);
                if !self.slack_ok(&child) {
                    continue;
                }
                let short = d != usize::MAX && len + d <= 4;
                if short && self.spec.no_contractible_short_cycles && !self.short_cycles_ok(&child) {
                    continue;
                }
                out.push(child);
            }
        }
        out
    }

    /// Final filters: no internal vertex of degree two, connected, (I1),
    /// (I2), then exact criticality.
    pub fn accept(&self, m: &PlaneMap) -> Option<EmbeddedGraph> {
        let rt = self.spec.ring_total();
        if (rt..m.n()).any(|v| m.rot[v].len() < 3) || !connected(m) {
            return None;
        }
        let g = m.to_embedded().ok()?;
        if !i1(&g) || !i2(&g) {
            return None;
        }
        is_ring_critical_fast(&Problem::from_graph(&g)).then_some(g)
    }

    pub fn expand(&self, m: &PlaneMap) -> Expanded {
        let children = self.children(m).into_iter().map(|c| (plane_canonical_form(&c), c)).collect();
        let found = self.accept(m).map(|graph| Found { key: plane_canonical_form(m), map: m.clone(), graph });
        Expanded { children, found }
    }

    pub fn run(&self, mapper: &dyn BatchMap) -> Result<SearchOutcome, EnumerateError> {
        let mut pending: BTreeMap<usize, BTreeMap<CanonicalForm, PlaneMap>> = BTreeMap::new();
        let init = self.initial();
        pending.entry(init.n_edges()).or_default().insert(plane_canonical_form(&init), init);
        let mut states = 0;
        let mut found = Vec::new();
        while let Some((_, level)) = pending.pop_first() {
            states += level.len();
            if states > self.spec.max_states {
                return Err(EnumerateError::BudgetExceeded(states));
            }
            let items: Vec<PlaneMap> = level.into_values().collect();
            let f = |m: &PlaneMap| self.expand(m);
            for ex in mapper.map(&items, &f) {
                found.extend(ex.found);
                for (k, c) in ex.children {
                    pending.entry(c.n_edges()).or_default().entry(k).or_insert(c);
                }
            }
        }
        found.sort_by(|a, b| a.key.cmp(&b.key));
        found.dedup_by(|a, b| a.key == b.key);
        Ok(SearchOutcome { found, states })
    }
}

fn connected(m: &PlaneMap) -> bool {
    m.n() == 0 || distances(m.adjacency(), &[0]).iter().all(|&d| d != usize::MAX)
}

/// All ring-critical graphs within the spec, sorted by canonical key.
pub fn enumerate_critical(spec: &SearchSpec) -> Result<Vec<EmbeddedGraph>, EnumerateError> {
    Ok(Search::new(spec.clone())?.run(&Sequential)?.found.into_iter().map(|f| f.graph).collect())
}

// ------------------------------------------------------------ basic graphs

fn has_triangle(m: &PlaneMap) -> bool {
    !cycles_up_to(m.adjacency(), 3).is_empty()
}

fn two_connected(m: &PlaneMap) -> bool {
    crate::cycles::is_two_connected(m.adjacency())
}

fn ring_distance(m: &PlaneMap) -> usize {
    let d = distances(m.adjacency(), &m.rings[0]);
    m.rings[1].iter().map(|&v| d[v]).min().unwrap_or(usize::MAX)
}

/// Two-ring critical graphs with rings of length at most four, no
/// contractible (≤4)-cycle and at most two non-ring vertices that contain a
/// triangle, are not 2-connected, or have rings at distance one.  Without
/// `allow_triangles` only 4-rings and triangle-free graphs are searched.
pub fn enumerate_basic_with(allow_triangles: bool, mapper: &dyn BatchMap) -> Result<Vec<Found>, EnumerateError> {
    let pairs: &[(usize, usize)] = if allow_triangles { &[(3, 3), (3, 4), (4, 4)] } else { &[(4, 4)] };
    let mut out = Vec::new();
    for &(a, b) in pairs {
        let mut spec = SearchSpec::cylinder(a, b, 2);
        spec.girth_floor = if allow_triangles { 3 } else { 4 };
        for f in Search::new(spec)?.run(mapper)?.found {
            if has_triangle(&f.map) || !two_connected(&f.map) || ring_distance(&f.map) == 1 {
                out.push(f);
            }
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

pub fn enumerate_basic(allow_triangles: bool) -> Result<Vec<EmbeddedGraph>, EnumerateError> {
    Ok(enumerate_basic_with(allow_triangles, &Sequential)?.into_iter().map(|f| f.graph).collect())
}

/// The 2-connected triangle-free graphs of a basic list that are not
/// proper subgraphs (with the same rings) of another one in it.
pub fn maximal_basic(list: &[Found]) -> Vec<Found> {
    let core: Vec<&Found> = list.iter().filter(|f| two_connected(&f.map) && !has_triangle(&f.map)).collect();
    let keys: BTreeSet<&CanonicalForm> = core.iter().map(|f| &f.key).collect();
    let mut below: BTreeSet<CanonicalForm> = BTreeSet::new();
    for f in &core {
        let m = &f.map;
        let ring_vertex = m.is_ring_vertex();
        let ring_edges: BTreeSet<(usize, usize)> = m
            .rings
            .iter()
            .flat_map(|r| (0..r.len()).map(move |i| (r[i].min(r[(i + 1) % r.len()]), r[i].max(r[(i + 1) % r.len()]))))
            .collect();
        let free: Vec<(usize, usize)> = (0..m.n())
            .flat_map(|u| m.rot[u].iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
            .filter(|e| !ring_edges.contains(e))
            .collect();
        for mask in 1u32..(1 << free.len()) {
            let mut sub = m.clone();
            for (i, &(u, w)) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    sub.remove_edge(u, w);
                }
            }
            let keep: Vec<bool> = (0..sub.n()).map(|v| ring_vertex[v] || !sub.rot[v].is_empty()).collect();
            let k = plane_canonical_form(&sub.compact(&keep));
            if keys.contains(&k) {
                below.insert(k);
            }
        }
    }
    core.into_iter().filter(|f| !below.contains(&f.key)).cloned().collect()
}

// ------------------------------------------------------ shape recognisers

/// Which of the three shapes of critical graphs between two triangles a
/// graph has: 1 an edge between the rings, 2 two edges between them, 3 two
/// adjacent degree-3 vertices each with a neighbour on both rings.
pub fn two_triangle_shape(g: &EmbeddedGraph) -> Option<u8> {
    let ring_of = g.ring_of_vertex();
    let ring_edge = g.ring_edges();
    let internal: Vec<usize> = (0..g.n_vertices()).filter(|&v| ring_of[v].is_none()).collect();
    let extra: Vec<usize> = (0..g.n_edges()).filter(|&e| !ring_edge[e]).collect();
    let between = extra
        .iter()
        .filter(|&&e| {
            let [a, b] = g.endpoints(e);
            matches!((ring_of[a], ring_of[b]), (Some(x), Some(y)) if x != y)
        })
        .count();
    match (internal.len(), extra.len()) {
        (0, 1) if between == 1 => Some(1),
        (0, 2) if between == 2 => Some(2),
        (2, 5) => {
            let (x, y) = (internal[0], internal[1]);
            let sees = |v: usize| {
                let rs: BTreeSet<usize> = g.neighbors(v).filter_map(|w| ring_of[w]).collect();
                g.degree(v) == 3 && rs.len() == 2
            };
            (g.edge_between(x, y).is_some() && sees(x) && sees(y)).then_some(3)
        }
        _ => None,
    }
}

/// For a disk graph: whether removing the ring leaves a tree with at most
/// |R| − 8 vertices.
pub fn is_small_tree_case(g: &EmbeddedGraph) -> bool {
    let ring_of = g.ring_of_vertex();
    let l = g.rings().first().map_or(0, |r| r.size());
    let internal: Vec<usize> = (0..g.n_vertices()).filter(|&v| ring_of[v].is_none()).collect();
    let edges = (0..g.n_edges())
        .filter(|&e| {
            let [a, b] = g.endpoints(e);
            ring_of[a].is_none() && ring_of[b].is_none()
        })
        .count();
    if internal.is_empty() || internal.len() + 8 > l || edges + 1 != internal.len() {
        return false;
    }
    let index: BTreeMap<usize, usize> = internal.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> =
        internal.iter().map(|&v| g.neighbors(v).filter_map(|w| index.get(&w).copied()).collect()).collect();
    distances(&adj, &[0]).iter().all(|&d| d != usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_disks_have_no_critical_graphs() {
        for l in 5..=8 {
            assert!(enumerate_critical(&SearchSpec::disk(l, 3)).unwrap().is_empty(), "{l}");
        }
    }

    #[test]
    fn nine_ring_gives_the_centre_vertex() {
        let out = enumerate_critical(&SearchSpec::disk(9, 3)).unwrap();
        assert_eq!(out.len(), 1);
        assert!(is_small_tree_case(&out[0]));
    }

    #[test]
    fn two_triangles() {
        let out = enumerate_critical(&SearchSpec::cylinder(3, 3, 2)).unwrap();
        assert!(!out.is_empty());
        let shapes: BTreeSet<u8> = out.iter().map(|g| two_triangle_shape(g).expect("known shape")).collect();
        assert_eq!(shapes, [1, 2, 3].into_iter().collect());
    }

    #[test]
    fn budget_is_enforced() {
        let mut spec = SearchSpec::disk(9, 3);
        spec.max_states = 3;
        assert!(matches!(enumerate_critical(&spec), Err(EnumerateError::BudgetExceeded(_))));
    }
}
