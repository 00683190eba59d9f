//! A generate-everything-then-filter oracle for small critical graphs,
//! written without the enumerator: all edge sets on the ring plus up to k
//! extra vertices, brute-force 3-coloring, brute-force plane embeddings.

use std::collections::BTreeSet;

use girth5_core::canon::{plane_canonical_form, CanonicalForm};
use girth5_core::plane::PlaneMap;

pub struct Frame {
    /// Ring lengths; ring i occupies consecutive vertex numbers.
    pub rings: Vec<usize>,
    pub internal: usize,
    /// No cycle shorter than this (checked as edges are added).
    pub girth: usize,
    pub chords: bool,
    /// Every (≤4)-cycle must separate the two ring faces (cylinder only).
    pub no_contractible_short: bool,
}

impl Frame {
    fn n(&self) -> usize {
        self.rings.iter().sum::<usize>() + self.internal
    }

    fn ring_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut base = 0;
        for &l in &self.rings {
            for i in 0..l {
                out.push((base + i, base + (i + 1) % l));
            }
            base += l;
        }
        out
    }

    fn ring_of(&self, v: usize) -> Option<usize> {
        let mut base = 0;
        for (i, &l) in self.rings.iter().enumerate() {
            if v < base + l {
                return Some(i);
            }
            base += l;
        }
        None
    }

    fn ring_base(&self, r: usize) -> usize {
        self.rings[..r].iter().sum()
    }

    fn candidates(&self, ring: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if ring.contains(&(u, v)) || ring.contains(&(v, u)) {
                    continue;
                }
                let same_ring = matches!((self.ring_of(u), self.ring_of(v)), (Some(a), Some(b)) if a == b);
                if same_ring && !self.chords {
                    continue;
                }
                out.push((u, v));
            }
        }
        out
    }
}

fn dist(adj: &[Vec<usize>], a: usize, b: usize) -> usize {
    let mut d = vec![usize::MAX; adj.len()];
    let mut q = std::collections::VecDeque::from([a]);
    d[a] = 0;
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if d[w] == usize::MAX {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    d[b]
}

/// Colorings of the ring vertices (indices 0..r) proper on the ring
/// cycles; chords and edges between rings are not part of the rings.
fn ring_colorings(r: usize, edges: &[(usize, usize)]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(r as u32) {
        let c: Vec<u8> = (0..r).map(|i| (code / 3usize.pow(i as u32) % 3) as u8).collect();
        if edges.iter().all(|&(a, b)| a >= r || b >= r || c[a] != c[b]) {
            out.push(c);
        }
    }
    out
}

fn extends(n: usize, r: usize, edges: &[(usize, usize)], ring: &[u8], skip: Option<usize>) -> bool {
    let k = n - r;
    'outer: for code in 0..3usize.pow(k as u32) {
        let col = |v: usize| if v < r { ring[v] } else { (code / 3usize.pow((v - r) as u32) % 3) as u8 };
        for (i, &(a, b)) in edges.iter().enumerate() {
            if Some(i) != skip && col(a) == col(b) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// Brute-force ring-criticality; the first `cycle_edges` edges are the
/// ring cycles.
fn critical(n: usize, r: usize, edges: &[(usize, usize)], cycle_edges: usize) -> bool {
    let extra: Vec<usize> = (cycle_edges..edges.len()).collect();
    if extra.is_empty() {
        return false;
    }
    let failing: Vec<Vec<u8>> =
        ring_colorings(r, &edges[..cycle_edges]).into_iter().filter(|c| !extends(n, r, edges, c, None)).collect();
    extra.iter().all(|&e| failing.iter().any(|c| extends(n, r, edges, c, Some(e))))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn faces(rot: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut f = Vec::new();
            let mut d = (u, v);
            while seen.insert(d) {
                f.push(d);
                let r = &rot[d.1];
                let j = r.iter().position(|&x| x == d.0).unwrap();
                d = (d.1, r[(j + 1) % r.len()]);
            }
            out.push(f);
        }
    }
    out
}

fn short_cycles(adj: &[Vec<usize>], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn walk(adj: &[Vec<usize>], path: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        let (s, u) = (path[0], *path.last().unwrap());
        for &w in &adj[u] {
            if w == s && path.len() >= 3 && path[1] < u {
                out.push(path.clone());
            } else if w > s && !path.contains(&w) && path.len() < max {
                path.push(w);
                walk(adj, path, max, out);
                path.pop();
            }
        }
    }
    for s in 0..adj.len() {
        walk(adj, &mut vec![s], max, &mut out);
    }
    out
}

/// Whether the two ring faces lie on the same side of the cycle.
fn contractible(fs: &[Vec<(usize, usize)>], ring_faces: [usize; 2], cyc: &[usize]) -> bool {
    let on = |a: usize, b: usize| (0..cyc.len()).any(|i| {
        let (x, y) = (cyc[i], cyc[(i + 1) % cyc.len()]);
        (x, y) == (a, b) || (x, y) == (b, a)
    });
    let face_of = |d: (usize, usize)| fs.iter().position(|f| f.contains(&d)).unwrap();
    let mut side = vec![usize::MAX; fs.len()];
    let mut stack = vec![ring_faces[0]];
    side[ring_faces[0]] = 0;
    while let Some(f) = stack.pop() {
        for &(a, b) in &fs[f] {
            if on(a, b) {
                continue;
            }
            let g = face_of((b, a));
            if side[g] == usize::MAX {
                side[g] = 0;
                stack.push(g);
            }
        }
    }
    side[ring_faces[1]] == 0
}

/// Canonical keys of every plane embedding (rings facial and oriented as
/// in `PlaneMap::rings_only`) of the graph that passes the frame's cycle
/// condition.
fn embeddings(frame: &Frame, adj: &[Vec<usize>], edges: usize) -> Vec<CanonicalForm> {
    let n = adj.len();
    // per-vertex rotation choices
    let mut choices: Vec<Vec<Vec<usize>>> = Vec::new();
    for v in 0..n {
        match frame.ring_of(v) {
            Some(r) => {
                let (base, l) = (frame.ring_base(r), frame.rings[r]);
                let (next, prev) = (base + (v - base + 1) % l, base + (v - base + l - 1) % l);
                let rest: Vec<usize> = adj[v].iter().copied().filter(|&w| w != next && w != prev).collect();
                choices.push(
                    permutations(&rest)
                        .into_iter()
                        .map(|p| {
                            let mut r = vec![next];
                            r.extend(p);
                            r.push(prev);
                            r
                        })
                        .collect(),
                );
            }
            None => {
                let (first, rest) = adj[v].split_first().expect("no isolated vertices here");
                choices.push(
                    permutations(rest)
                        .into_iter()
                        .map(|p| {
                            let mut r = vec![*first];
                            r.extend(p);
                            r
                        })
                        .collect(),
                );
            }
        }
    }
    let cycles = if frame.no_contractible_short { short_cycles(adj, 4) } else { Vec::new() };
    let mut keys = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let rot: Vec<Vec<usize>> = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
        let fs = faces(&rot);
        if n + fs.len() == edges + 2 {
            let ring_faces: Vec<usize> = (0..frame.rings.len())
                .map(|r| {
                    let b = frame.ring_base(r);
                    fs.iter().position(|f| f.contains(&(b, b + 1))).unwrap()
                })
                .collect();
            let ok = frame.rings.len() < 2
                || cycles.iter().all(|c| !contractible(&fs, [ring_faces[0], ring_faces[1]], c));
            if ok {
                let rings = (0..frame.rings.len())
                    .map(|r| (frame.ring_base(r)..frame.ring_base(r) + frame.rings[r]).collect())
                    .collect();
                keys.push(plane_canonical_form(&PlaneMap { rot, rings }));
            }
        }
        // next combination
        let mut v = 0;
        while v < n {
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
        if v == n {
            return keys;
        }
    }
}

fn connected(adj: &[Vec<usize>]) -> bool {
    (0..adj.len()).all(|v| dist(adj, 0, v) != usize::MAX)
}

/// Canonical keys of all critical graphs in the frame, plus the number
/// of edge sets examined.
pub fn critical_keys(frame: &Frame) -> (BTreeSet<CanonicalForm>, usize) {
    let n = frame.n();
    let ring = frame.ring_edges();
    let cand = frame.candidates(&ring);
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &ring {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut chosen = Vec::new();
    let mut keys = BTreeSet::new();
    let mut leaves = 0;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        frame: &Frame,
        cand: &[(usize, usize)],
        ring: &[(usize, usize)],
        adj: &mut Vec<Vec<usize>>,
        chosen: &mut Vec<(usize, usize)>,
        keys: &mut BTreeSet<CanonicalForm>,
        leaves: &mut usize,
    ) {
        let n = adj.len();
        let r = n - frame.internal;
        if i == cand.len() {
            *leaves += 1;
            // every vertex of a critical graph off the rings has degree >= 3
            if (r..n).any(|v| adj[v].len() < 3) {
                return;
            }
            let mut edges = ring.to_vec();
            edges.extend(chosen.iter().copied());
            if !critical(n, r, &edges, ring.len()) {
                return;
            }
            // the search grows connected graphs only
            if !connected(adj) {
                return;
            }
            keys.extend(embeddings(frame, adj, edges.len()));
            return;
        }
        rec(i + 1, frame, cand, ring, adj, chosen, keys, leaves);
        let (a, b) = cand[i];
        if dist(adj, a, b).saturating_add(1) >= frame.girth {
            adj[a].push(b);
            adj[b].push(a);
            chosen.push((a, b));
            rec(i + 1, frame, cand, ring, adj, chosen, keys, leaves);
            chosen.pop();
            adj[a].pop();
            adj[b].pop();
        }
    }
    rec(0, frame, &cand, &ring, &mut adj, &mut chosen, &mut keys, &mut leaves);
    (keys, leaves)
}

/// Keys for all graphs with at most `max_internal` extra vertices.
pub fn critical_keys_up_to(rings: &[usize], max_internal: usize, girth: usize, chords: bool, short: bool) -> BTreeSet<CanonicalForm> {
    let mut all = BTreeSet::new();
    for k in 0..=max_internal {
        let f = Frame { rings: rings.to_vec(), internal: k, girth, chords, no_contractible_short: short };
        all.extend(critical_keys(&f).0);
    }
    all
}
