//! Canonical forms of embedded graphs up to relabelling, switching, mirror
//! image and renumbering of rings.
//!
//! Each component is encoded by breadth-first search from a dart and a
//! local orientation; every vertex lists its neighbours in its assigned
//! orientation starting from the dart it was reached by, together with the
//! relative twist of each edge.  The smallest code over all starting flags
//! (ring darts only, when the component has a facial ring) is the key.

use alloc::vec;
use alloc::vec::Vec;

use crate::map::{EmbeddedGraph, Ring};
use crate::plane::PlaneMap;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(pub Vec<u32>);

impl CanonicalForm {
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_be_bytes()).collect()
    }
}

enum RingView {
    Facial(Vec<usize>),
    /// Vertex ring with the rotation index of the dart its cuff corner follows.
    Vertex { v: usize, weak: bool, at: usize },
}

/// Rotation entries are (neighbour, index of the reverse dart there, twisted).
struct MapView {
    rot: Vec<Vec<(usize, usize, bool)>>,
    rings: Vec<RingView>,
}

impl MapView {
    fn of_graph(g: &EmbeddedGraph) -> MapView {
        let rot = (0..g.n_vertices())
            .map(|v| {
                g.rotation(v)
                    .iter()
                    .map(|&d| (g.head(d), g.position(d.flip()), g.sign(d.edge()) < 0))
                    .collect()
            })
            .collect();
        let rings = g
            .rings()
            .iter()
            .map(|r| match r {
                Ring::Facial(c) => RingView::Facial(c.clone()),
                Ring::Vertex { v, weak, at } => {
                    RingView::Vertex { v: *v, weak: *weak, at: at.map_or(0, |d| g.position(d)) }
                }
            })
            .collect();
        MapView { rot, rings }
    }

    fn of_plane(m: &PlaneMap) -> MapView {
        let rot = m
            .rot
            .iter()
            .enumerate()
            .map(|(v, r)| {
                r.iter().map(|&w| (w, m.rot[w].iter().position(|&x| x == v).expect("symmetric"), false)).collect()
            })
            .collect();
        MapView { rot, rings: m.rings.iter().map(|r| RingView::Facial(r.clone())).collect() }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rot.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &(w, _, _) in &self.rot[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            out.push(comp);
        }
        out
    }

    /// Code of the component reached from (v, dart index, orientation).
    /// Gives up (None) as soon as the code is known to exceed `bound`.
    fn code_from(
        &self,
        v0: usize,
        i0: usize,
        o0: i8,
        rings: &[usize],
        buf: &mut Scratch,
        bound: Option<&[u32]>,
    ) -> Option<Vec<u32>> {
        let n = self.rot.len();
        buf.label.clear();
        buf.label.resize(n, u32::MAX);
        buf.ori.resize(n, 0);
        buf.entry.resize(n, 0);
        let mut order = vec![v0];
        buf.label[v0] = 0;
        buf.ori[v0] = o0;
        buf.entry[v0] = i0;
        let mut code = Vec::new();
        // Still equal to the bound so far?
        let mut tied = bound.is_some();
        let mut push = |code: &mut Vec<u32>, x: u32| -> bool {
            if tied {
                let b = bound.unwrap_or_default();
                match b.get(code.len()).map(|y| x.cmp(y)) {
                    Some(core::cmp::Ordering::Greater) => return false,
                    Some(core::cmp::Ordering::Less) | None => tied = false,
                    Some(core::cmp::Ordering::Equal) => {}
                }
            }
            code.push(x);
            true
        };
        let mut qi = 0;
        while qi < order.len() {
            let v = order[qi];
            qi += 1;
            let r = &self.rot[v];
            let d = r.len();
            if !push(&mut code, d as u32) {
                return None;
            }
            let o = buf.ori[v];
            for t in 0..d {
                let i = if o > 0 { (buf.entry[v] + t) % d } else { (buf.entry[v] + d - t) % d };
                let (w, back, neg) = r[i];
                let want = if neg { -o } else { o };
                if buf.label[w] == u32::MAX {
                    buf.label[w] = order.len() as u32;
                    buf.ori[w] = want;
                    buf.entry[w] = back;
                    order.push(w);
                }
                if !push(&mut code, buf.label[w]) || !push(&mut code, u32::from(buf.ori[w] != want)) {
                    return None;
                }
            }
        }
        let mut ring_codes: Vec<Vec<u32>> = rings.iter().map(|&ri| self.ring_code(ri, buf)).collect();
        ring_codes.sort();
        code.push(u32::MAX);
        for rc in ring_codes {
            code.extend(rc);
        }
        Some(code)
    }

    fn ring_code(&self, ri: usize, buf: &Scratch) -> Vec<u32> {
        match &self.rings[ri] {
            RingView::Facial(c) => {
                let seq: Vec<u32> = c.iter().map(|&v| buf.label[v]).collect();
                let k = seq.len();
                let mut best: Option<Vec<u32>> = None;
                for s in 0..k {
                    for dir in [1, k - 1] {
                        let cand: Vec<u32> = (0..k).map(|t| seq[(s + dir * t) % k]).collect();
                        if best.as_ref().map_or(true, |b| cand < *b) {
                            best = Some(cand);
                        }
                    }
                }
                let mut out = vec![1, k as u32];
                out.extend(best.unwrap_or_default());
                out
            }
            RingView::Vertex { v, weak, at } => {
                let d = self.rot[*v].len();
                let corner = if d == 0 {
                    0
                } else {
                    let e = buf.entry[*v];
                    let first = if buf.ori[*v] > 0 { *at } else { (*at + 1) % d };
                    let idx = if buf.ori[*v] > 0 { (first + d - e) % d } else { (e + d - first) % d };
                    idx as u32
                };
                vec![2, buf.label[*v], u32::from(*weak), corner]
            }
        }
    }

    fn canonical(&self) -> CanonicalForm {
        let mut ring_of = vec![Vec::new(); self.rot.len()];
        for (ri, r) in self.rings.iter().enumerate() {
            let v = match r {
                RingView::Facial(c) => c[0],
                RingView::Vertex { v, .. } => *v,
            };
            ring_of[v].push(ri);
        }
        let mut buf = Scratch::default();
        let mut comp_codes = Vec::new();
        for comp in self.components() {
            let rings: Vec<usize> = comp.iter().flat_map(|&v| ring_of[v].iter().copied()).collect();
            let mut on_ring = vec![false; self.rot.len()];
            let facial: Vec<&Vec<usize>> = rings
                .iter()
                .filter_map(|&ri| match &self.rings[ri] {
                    RingView::Facial(c) => Some(c),
                    _ => None,
                })
                .collect();
            // Starting flags: darts along facial rings, else at vertex rings, else all.
            let mut starts = Vec::new();
            if !facial.is_empty() {
                for c in facial {
                    let k = c.len();
                    for t in 0..k {
                        on_ring[c[t]] = true;
                        for nb in [c[(t + 1) % k], c[(t + k - 1) % k]] {
                            if let Some(i) = self.rot[c[t]].iter().position(|x| x.0 == nb) {
                                starts.push((c[t], i));
                            }
                        }
                    }
                }
            } else {
                let vr: Vec<usize> = rings
                    .iter()
                    .filter_map(|&ri| match &self.rings[ri] {
                        RingView::Vertex { v, .. } => Some(*v),
                        _ => None,
                    })
                    .collect();
                let pool = if vr.is_empty() { comp.clone() } else { vr };
                for v in pool {
                    starts.extend((0..self.rot[v].len()).map(|i| (v, i)));
                }
            }
            let mut best: Option<Vec<u32>> = None;
            if starts.is_empty() {
                best = self.code_from(comp[0], 0, 1, &rings, &mut buf, None);
            }
            for (v, i) in starts {
                for o in [1, -1] {
                    if let Some(c) = self.code_from(v, i, o, &rings, &mut buf, best.as_deref()) {
                        if best.as_ref().map_or(true, |b| c < *b) {
                            best = Some(c);
                        }
                    }
                }
            }
            comp_codes.push(best.expect("component code"));
        }
        comp_codes.sort();
        let mut out = vec![comp_codes.len() as u32];
        for c in comp_codes {
            out.push(c.len() as u32);
            out.extend(c);
        }
        CanonicalForm(out)
    }
}

#[derive(Default)]
struct Scratch {
    label: Vec<u32>,
    ori: Vec<i8>,
    entry: Vec<usize>,
}

/// Key equal for two graphs exactly when they are isomorphic as embedded
/// graphs with rings (rings as an unordered set, each up to rotation and
/// reflection; mirror images identified).  Joins are not encoded.
pub fn canonical_form(g: &EmbeddedGraph) -> CanonicalForm {
    MapView::of_graph(g).canonical()
}

/// [`canonical_form`] of a plane map, computed without tracing its faces.
pub fn plane_canonical_form(m: &PlaneMap) -> CanonicalForm {
    MapView::of_plane(m).canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_chain, make_exceptional, ChainEmbedding, ExceptionalClass};
    use crate::map::from_neighbor_rotations;

    /// Renames vertices by `perm` and rotates ring sequences.
    fn relabel(g: &EmbeddedGraph, perm: &[usize], reflect: bool) -> EmbeddedGraph {
        let n = g.n_vertices();
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            let mut nb: Vec<usize> = g.neighbors(v).map(|w| perm[w]).collect();
            if reflect {
                nb.reverse();
            }
            adj[perm[v]] = nb;
        }
        let rings = g
            .rings()
            .iter()
            .rev()
            .map(|r| match r {
                Ring::Facial(c) => {
                    let mut c: Vec<usize> = c.iter().map(|&v| perm[v]).collect();
                    if reflect {
                        c.reverse();
                    }
                    c.rotate_left(1);
                    Ring::Facial(c)
                }
                other => other.clone(),
            })
            .collect();
        from_neighbor_rotations(&adj, rings).unwrap()
    }

    #[test]
    fn relabelled_graphs_agree() {
        let g = make_chain(3, ChainEmbedding::BrokenCylinder).unwrap().graph;
        let n = g.n_vertices();
        let perm: Vec<usize> = (0..n).map(|v| (v * 5 + 3) % n).collect();
        assert_ne!(n % 5, 0);
        for reflect in [false, true] {
            assert_eq!(canonical_form(&g), canonical_form(&relabel(&g, &perm, reflect)));
        }
    }

    #[test]
    fn distinct_graphs_differ() {
        let a = make_chain(2, ChainEmbedding::Abstract).unwrap().graph;
        let b = make_chain(3, ChainEmbedding::Abstract).unwrap().graph;
        assert_ne!(canonical_form(&a), canonical_form(&b));
        let e2 = make_exceptional(ExceptionalClass::E2, 11, None).unwrap();
        let e3 = make_exceptional(ExceptionalClass::E3, 11, None).unwrap();
        assert_ne!(canonical_form(&e2), canonical_form(&e3));
    }

    #[test]
    fn plane_and_embedded_forms_agree() {
        let mut m = PlaneMap::disk(9);
        let f = m.faces();
        let inner = 1 - m.ring_faces(&f)[0];
        let a = f[inner].iter().copied().find(|d| d.0 == 0).unwrap();
        let b = f[inner].iter().copied().find(|d| d.0 == 4).unwrap();
        m.add_path(a, b, 1);
        assert_eq!(plane_canonical_form(&m), canonical_form(&m.to_embedded().unwrap()));
    }

    #[test]
    fn switching_does_not_change_the_key() {
        let c = make_chain(1, ChainEmbedding::CanonicalKlein).unwrap();
        let g = &c.graph;
        // Switch at vertex 0: reverse its rotation and flip the signs of its edges.
        let n = g.n_vertices();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).collect();
                if v == 0 {
                    nb.reverse();
                }
                nb
            })
            .collect();
        let mut neg = Vec::new();
        for e in 0..g.n_edges() {
            let [a, b] = g.endpoints(e);
            if (g.sign(e) < 0) != (a == 0 || b == 0) {
                neg.push((a, b));
            }
        }
        let h = crate::map::from_signed_rotations(&adj, &neg, Vec::new()).unwrap();
        assert_eq!(canonical_form(g), canonical_form(&h));
    }
}
