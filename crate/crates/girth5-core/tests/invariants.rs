//! Property tests on random plane maps with one ring.

use girth5_core::canon::{canonical_form, plane_canonical_form};
use girth5_core::coloring::{extends, Precoloring};
use girth5_core::plane::PlaneMap;
use girth5_core::weight::{face_weight, graph_weight, int, s_value};
use girth5_core::Rational;
use proptest::prelude::*;

/// A ring of length `l` with paths inserted inside it, driven by `ops`.
fn grow(l: usize, ops: &[(usize, usize, usize, usize)]) -> PlaneMap {
    let mut m = PlaneMap::disk(l);
    for &(fi, ai, bi, len) in ops {
        let faces = m.faces();
        let ring = m.ring_faces(&faces)[0];
        let inner: Vec<&Vec<(usize, usize)>> = faces.iter().enumerate().filter(|&(i, _)| i != ring).map(|(_, f)| f).collect();
        let f = inner[fi % inner.len()];
        let (a, b) = (f[ai % f.len()], f[bi % f.len()]);
        if a.0 == b.0 || (len == 1 && m.has_edge(a.0, b.0)) {
            continue;
        }
        m.add_path(a, b, len);
    }
    m
}

fn maps() -> impl Strategy<Value = PlaneMap> {
    (4usize..9, prop::collection::vec((0usize..50, 0usize..50, 0usize..50, 1usize..4), 0..4))
        .prop_map(|(l, ops)| grow(l, &ops))
        .prop_filter("small enough to brute-force", |m| m.n() <= 13)
}

fn relabel(m: &PlaneMap, perm: &[usize], mirror: bool) -> PlaneMap {
    let mut rot = vec![Vec::new(); m.n()];
    for v in 0..m.n() {
        let mut r: Vec<usize> = m.rot[v].iter().map(|&w| perm[w]).collect();
        if mirror {
            r.reverse();
        }
        rot[perm[v]] = r;
    }
    let rings = m
        .rings
        .iter()
        .map(|c| {
            let mut c: Vec<usize> = c.iter().map(|&v| perm[v]).collect();
            if mirror {
                c.reverse();
            }
            c
        })
        .collect();
    PlaneMap { rot, rings }
}

fn brute_extends(adj: &[Vec<usize>], phi: &[Option<u8>]) -> bool {
    let free: Vec<usize> = (0..adj.len()).filter(|&v| phi[v].is_none()).collect();
    (0..3usize.pow(free.len() as u32)).any(|code| {
        let mut col: Vec<u8> = phi.iter().map(|c| c.unwrap_or(0)).collect();
        for (i, &v) in free.iter().enumerate() {
            col[v] = (code / 3usize.pow(i as u32) % 3) as u8;
        }
        (0..adj.len()).all(|u| adj[u].iter().all(|&w| col[u] != col[w]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn plane_maps_are_spheres(m in maps()) {
        let g = m.to_embedded().unwrap();
        prop_assert_eq!(g.euler_genus(), (0, true));
        prop_assert_eq!(m.n() + m.faces().len(), m.n_edges() + 2);
    }

    #[test]
    fn canonical_form_ignores_labels_and_mirroring(m in maps(), seed in any::<u64>(), mirror in any::<bool>()) {
        let n = m.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = relabel(&m, &perm, mirror);
        prop_assert_eq!(plane_canonical_form(&m), plane_canonical_form(&h));
        prop_assert_eq!(plane_canonical_form(&m), canonical_form(&m.to_embedded().unwrap()));
    }

    #[test]
    fn extension_agrees_with_brute_force(m in maps(), steps in prop::collection::vec(1u8..3, 8)) {
        let g = m.to_embedded().unwrap();
        let ring = &m.rings[0];
        let k = ring.len();
        // a proper ring coloring: each step changes the color, the last
        // vertex avoids both of its neighbours
        let mut ring_col = vec![0u8; k];
        for i in 1..k - 1 {
            ring_col[i] = (ring_col[i - 1] + steps[i]) % 3;
        }
        ring_col[k - 1] = (0..3).find(|&c| c != ring_col[k - 2] && c != ring_col[0]).unwrap();
        let mut phi = vec![None; m.n()];
        for (i, &v) in ring.iter().enumerate() {
            phi[v] = Some(ring_col[i]);
        }
        let adj = m.adjacency();
        let got = extends(&g, &Precoloring(phi.clone())).unwrap();
        prop_assert_eq!(got.is_some(), brute_extends(adj, &phi));
        if let Some(col) = got {
            for (v, c) in phi.iter().enumerate() {
                if let Some(c) = c {
                    prop_assert_eq!(col[v], *c);
                }
            }
            for u in 0..adj.len() {
                prop_assert!(adj[u].iter().all(|&w| col[u] != col[w]));
            }
        }
    }

    #[test]
    fn weight_is_the_sum_over_faces(m in maps()) {
        let g = m.to_embedded().unwrap();
        let sum: Rational = g.faces().iter().filter(|f| !f.is_ring_face()).map(face_weight).sum();
        prop_assert_eq!(graph_weight(&g), sum);
    }

    #[test]
    fn s_is_increasing(l in 5usize..400) {
        prop_assert!(s_value(l).unwrap() < s_value(l + 1).unwrap());
        if l >= 9 {
            prop_assert_eq!(s_value(l).unwrap(), int(l as i64 - 8));
        }
    }
}
