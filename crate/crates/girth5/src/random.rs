//! Random triangle-free plane graphs, grown by inserting paths in faces.

use girth5_core::map::EmbeddedGraph;
use girth5_core::plane::PlaneMap;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dist_at_most(m: &PlaneMap, a: usize, b: usize, k: usize) -> bool {
    let d = girth5_core::cycles::distances(m.adjacency(), &[a]);
    d[b] <= k
}

/// A connected triangle-free plane graph on `n` vertices (n ≥ 5): a
/// 5-cycle grown by random paths of length 1–3 inside random faces, then
/// densified with random chords that close no triangle.
pub fn random_triangle_free_plane(n: usize, seed: u64) -> EmbeddedGraph {
    assert!(n >= 5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = PlaneMap::disk(5);
    m.rings.clear();
    let mut chords = 0;
    let mut attempts = 0;
    while m.n() < n || (chords < n && attempts < 20 * n) {
        attempts += 1;
        let faces = m.faces();
        let f = faces.choose(&mut rng).expect("a face");
        let a = *f.choose(&mut rng).unwrap();
        let b = *f.choose(&mut rng).unwrap();
        if a.0 == b.0 {
            continue;
        }
        let room = n - m.n();
        let len = if room == 0 { 1 } else { rng.gen_range(1..=3.min(room + 1)) };
        let ok = match len {
            1 => !dist_at_most(&m, a.0, b.0, 2),
            2 => !m.has_edge(a.0, b.0),
            _ => true,
        };
        if ok {
            m.add_path(a, b, len);
            if len == 1 {
                chords += 1;
            }
        }
    }
    m.to_embedded().expect("plane map")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_determinism() {
        let g = random_triangle_free_plane(20, 7);
        assert_eq!(g.n_vertices(), 20);
        assert_eq!(g.euler_genus(), (0, true));
        assert_eq!(girth5_core::cycles::girth(&g.adjacency()).map(|x| x >= 4), Some(true));
        let h = random_triangle_free_plane(20, 7);
        assert_eq!(crate::doc::emit_graph(&g), crate::doc::emit_graph(&h));
    }
}
