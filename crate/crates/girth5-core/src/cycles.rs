//! Plain graph utilities: short cycles, distances, connectivity.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// All simple cycles of length 3..=max_len, each once, as vertex sequences
/// starting at their smallest vertex with the smaller neighbour second.
pub fn cycles_up_to(adj: &[Vec<usize>], max_len: usize) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on = vec![false; n];
    fn rec(
        adj: &[Vec<usize>],
        s: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *path.last().expect("nonempty path");
        for &w in &adj[v] {
            if w == s && path.len() >= 3 && path[1] < v {
                out.push(path.clone());
            }
            if w > s && !on[w] && path.len() < max_len {
                on[w] = true;
                path.push(w);
                rec(adj, s, max_len, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    for s in 0..n {
        path.clear();
        path.push(s);
        on[s] = true;
        rec(adj, s, max_len, &mut path, &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Length of a shortest cycle, if any.
pub fn girth(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// BFS distances from a set of sources.
pub fn distances(adj: &[Vec<usize>], sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut q = VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        q.push_back(s);
    }
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Whether the graph is connected and stays connected after removing any one vertex.
pub fn is_two_connected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n < 3 {
        return n == 2 && adj[0].contains(&1);
    }
    let connected_without = |skip: usize| {
        let start = if skip == 0 { 1 } else { 0 };
        let mut seen = vec![false; n];
        seen[skip] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n - 1
    };
    (0..n).all(connected_without) && {
        let d = distances(adj, &[0]);
        d.iter().all(|&x| x != usize::MAX)
    }
}

/// Biconnected components, as edge lists, of the graph induced by `keep`.
pub fn blocks(adj: &[Vec<usize>], keep: &[bool]) -> Vec<Vec<[usize; 2]>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut stack: Vec<[usize; 2]> = Vec::new();
    let mut out = Vec::new();
    fn dfs(
        v: usize,
        parent: usize,
        adj: &[Vec<usize>],
        keep: &[bool],
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<[usize; 2]>,
        out: &mut Vec<Vec<[usize; 2]>>,
    ) {
        disc[v] = *time;
        low[v] = *time;
        *time += 1;
        for &w in &adj[v] {
            if !keep[w] || w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                stack.push([v, w]);
                dfs(w, v, adj, keep, disc, low, time, stack, out);
                low[v] = low[v].min(low[w]);
                if low[w] >= disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = stack.pop() {
                        block.push(e);
                        if e == [v, w] {
                            break;
                        }
                    }
                    out.push(block);
                }
            } else if disc[w] < disc[v] {
                stack.push([v, w]);
                low[v] = low[v].min(disc[w]);
            }
        }
    }
    for v in 0..n {
        if keep[v] && disc[v] == usize::MAX {
            dfs(v, usize::MAX, adj, keep, &mut disc, &mut low, &mut time, &mut stack, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); 10];
        let mut add = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for i in 0..5 {
            add(i, (i + 1) % 5);
            add(i, i + 5);
            add(5 + i, 5 + (i + 2) % 5);
        }
        adj
    }

    #[test]
    fn petersen_cycles() {
        let adj = petersen();
        assert_eq!(girth(&adj), Some(5));
        assert_eq!(cycles_up_to(&adj, 5).len(), 12);
        assert_eq!(cycles_up_to(&adj, 6).len(), 12 + 10);
        assert!(is_two_connected(&adj));
    }

    #[test]
    fn blocks_of_two_triangles_sharing_a_vertex() {
        let adj = vec![vec![1, 2], vec![0, 2], vec![0, 1, 3, 4], vec![2, 4], vec![2, 3]];
        assert_eq!(blocks(&adj, &[true; 5]).len(), 2);
        assert!(!is_two_connected(&adj));
    }
}
