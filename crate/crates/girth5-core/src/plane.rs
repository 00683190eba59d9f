//! Orientable plane maps given by neighbour rotations, grown by inserting
//! paths inside faces.  Used to build disk and cylinder graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::map::{from_neighbor_rotations, EmbeddedGraph, EmbeddingError, Ring};

/// A dart as (tail, head).
pub type PDart = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneMap {
    /// Clockwise neighbour order of every vertex.
    pub rot: Vec<Vec<usize>>,
    /// Facial rings; each is traced by the face of the dart (r[0], r[1]).
    pub rings: Vec<Vec<usize>>,
}

impl PlaneMap {
    /// A single cycle of length `l`, which is a ring.
    pub fn disk(l: usize) -> PlaneMap {
        PlaneMap::rings_only(&[l])
    }

    /// Disjoint ring cycles on consecutive vertex numbers.
    pub fn rings_only(lens: &[usize]) -> PlaneMap {
        let mut rot = Vec::new();
        let mut rings = Vec::new();
        for &l in lens {
            let base = rot.len();
            for i in 0..l {
                rot.push(vec![base + (i + 1) % l, base + (i + l - 1) % l]);
            }
            rings.push((base..base + l).collect());
        }
        PlaneMap { rot, rings }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn n_edges(&self) -> usize {
        self.rot.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    /// The dart following (u, v) around its face.
    pub fn next(&self, (u, v): PDart) -> PDart {
        let r = &self.rot[v];
        let j = r.iter().position(|&x| x == u).expect("dart");
        (v, r[(j + 1) % r.len()])
    }

    /// Face orbits, each as its sequence of darts.
    pub fn faces(&self) -> Vec<Vec<PDart>> {
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut out = Vec::new();
        for v in 0..self.n() {
            for i in 0..self.rot[v].len() {
                if seen[v][i] {
                    continue;
                }
                let start = (v, self.rot[v][i]);
                let mut walk = Vec::new();
                let mut d = start;
                loop {
                    let k = self.rot[d.0].iter().position(|&x| x == d.1).expect("dart");
                    seen[d.0][k] = true;
                    walk.push(d);
                    d = self.next(d);
                    if d == start {
                        break;
                    }
                }
                out.push(walk);
            }
        }
        out
    }

    /// Index of the face containing a dart.
    pub fn face_of(faces: &[Vec<PDart>], d: PDart) -> usize {
        faces.iter().position(|f| f.contains(&d)).expect("dart on a face")
    }

    /// Faces bounded by rings.
    pub fn ring_faces(&self, faces: &[Vec<PDart>]) -> Vec<usize> {
        self.rings.iter().map(|r| PlaneMap::face_of(faces, (r[0], r[1]))).collect()
    }

    /// Inserts a path of `len` edges from the corner just before dart `a`
    /// to the corner just before dart `b`.  Both corners must lie on the same
    /// face (or on two walks of one face).  Returns the new vertices.
    pub fn add_path(&mut self, a: PDart, b: PDart, len: usize) -> Vec<usize> {
        assert!(len >= 1 && a.0 != b.0);
        let base = self.n();
        let inner: Vec<usize> = (base..base + len - 1).collect();
        let mut seq = vec![a.0];
        seq.extend(&inner);
        seq.push(b.0);
        for k in 1..seq.len() - 1 {
            self.rot.push(vec![seq[k - 1], seq[k + 1]]);
        }
        let ia = self.rot[a.0].iter().position(|&x| x == a.1).expect("dart a");
        self.rot[a.0].insert(ia, seq[1]);
        let ib = self.rot[b.0].iter().position(|&x| x == b.1).expect("dart b");
        self.rot[b.0].insert(ib, seq[seq.len() - 2]);
        inner
    }

    /// Removes the edge uv.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rot[u].retain(|&x| x != v);
        self.rot[v].retain(|&x| x != u);
    }

    pub fn is_ring_vertex(&self) -> Vec<bool> {
        let mut m = vec![false; self.n()];
        for r in &self.rings {
            for &v in r {
                m[v] = true;
            }
        }
        m
    }

    /// Keeps the vertices marked in `keep`, renumbered in order.  Rings must
    /// survive intact.
    pub fn compact(&self, keep: &[bool]) -> PlaneMap {
        let mut new = vec![usize::MAX; self.n()];
        let mut k = 0;
        for v in 0..self.n() {
            if keep[v] {
                new[v] = k;
                k += 1;
            }
        }
        let rot = (0..self.n())
            .filter(|&v| keep[v])
            .map(|v| self.rot[v].iter().filter(|&&w| keep[w]).map(|&w| new[w]).collect())
            .collect();
        let rings = self.rings.iter().map(|r| r.iter().map(|&v| new[v]).collect()).collect();
        PlaneMap { rot, rings }
    }

    /// Adjacency lists (the rotations, as plain neighbour lists).
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn to_embedded(&self) -> Result<EmbeddedGraph, EmbeddingError> {
        from_neighbor_rotations(&self.rot, self.rings.iter().map(|r| Ring::Facial(r.clone())).collect())
    }

    /// Labels every face with the side of the cycle (given by its vertex
    /// sequence) it lies on.  Faces are merged across edges not on the cycle.
    pub fn sides(&self, faces: &[Vec<PDart>], cycle: &[usize]) -> Vec<usize> {
        let k = cycle.len();
        let on = |u: usize, v: usize| {
            (0..k).any(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                (a == u && b == v) || (a == v && b == u)
            })
        };
        let mut face_of_dart: Vec<Vec<usize>> = self.rot.iter().map(|r| vec![0; r.len()]).collect();
        for (fi, f) in faces.iter().enumerate() {
            for &(u, v) in f {
                let j = self.rot[u].iter().position(|&x| x == v).unwrap();
                face_of_dart[u][j] = fi;
            }
        }
        let mut uf = crate::unionfind::UnionFind::new(faces.len());
        for u in 0..self.n() {
            for (j, &v) in self.rot[u].iter().enumerate() {
                if !on(u, v) {
                    let jv = self.rot[v].iter().position(|&x| x == u).unwrap();
                    uf.union(face_of_dart[u][j], face_of_dart[v][jv]);
                }
            }
        }
        (0..faces.len()).map(|f| uf.find(f)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chord_splits_disk() {
        let mut m = PlaneMap::disk(8);
        let faces = m.faces();
        assert_eq!(faces.len(), 2);
        let inner = 1 - m.ring_faces(&faces)[0];
        let f = &faces[inner];
        let a = f.iter().copied().find(|d| d.0 == 0).unwrap();
        let b = f.iter().copied().find(|d| d.0 == 4).unwrap();
        m.add_path(a, b, 1);
        let mut lens: Vec<usize> = m.faces().iter().map(|f| f.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![5, 5, 8]);
        let g = m.to_embedded().unwrap();
        assert_eq!(g.euler_genus(), (0, true));
    }
}
