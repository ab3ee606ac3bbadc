//! Maximum bipartite matching (Hopcroft-Karp).
//!
//! Left vertices are `0..adj.len()`, right vertices `0..n_right`. Neighbour
//! lists are explored in the order given, so the result is deterministic for
//! a fixed input.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub(crate) struct Matching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

#[cfg(test)]
impl Matching {
    pub fn size(&self) -> usize {
        self.left.iter().filter(|m| m.is_some()).count()
    }
}

const INF: usize = usize::MAX;

pub(crate) fn maximum_matching(n_right: usize, adj: &[Vec<usize>]) -> Matching {
    let n_left = adj.len();
    let mut left = vec![None; n_left];
    let mut right: Vec<Option<usize>> = vec![None; n_right];
    let mut dist = vec![INF; n_left];

    loop {
        // BFS from every free left vertex, layering by alternating path length.
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if left[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match right[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }

        let mut next_edge = vec![0usize; n_left];
        for u in 0..n_left {
            if left[u].is_none() {
                augment(u, adj, &mut left, &mut right, &mut dist, &mut next_edge);
            }
        }
    }

    Matching { left, right }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    left: &mut [Option<usize>],
    right: &mut [Option<usize>],
    dist: &mut [usize],
    next_edge: &mut [usize],
) -> bool {
    while next_edge[u] < adj[u].len() {
        let v = adj[u][next_edge[u]];
        next_edge[u] += 1;
        let ok = match right[v] {
            None => true,
            Some(w) => {
                dist[w] == dist[u].wrapping_add(1)
                    && augment(w, adj, left, right, dist, next_edge)
            }
        };
        if ok {
            left[u] = Some(v);
            right[v] = Some(u);
            return true;
        }
    }
    dist[u] = INF;
    false
}

/// Left vertices reachable from the free vertex `start` by alternating paths.
///
/// When `matching` is maximum and `start` is unmatched, the returned set has
/// exactly one more member than its neighbourhood.
pub(crate) fn alternating_reach(start: usize, adj: &[Vec<usize>], matching: &Matching) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = Vec::new();
    while let Some(u) = queue.pop_front() {
        reached.push(u);
        for &v in &adj[u] {
            if let Some(w) = matching.right[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    reached.sort_unstable();
    reached
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_on_cycle() {
        let adj = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        let m = maximum_matching(3, &adj);
        assert_eq!(m.size(), 3);
        for (u, v) in m.left.iter().enumerate() {
            let v = v.unwrap();
            assert!(adj[u].contains(&v));
            assert_eq!(m.right[v], Some(u));
        }
    }

    #[test]
    fn deficient_family_has_tight_witness() {
        let adj = vec![vec![0], vec![0], vec![1]];
        let m = maximum_matching(2, &adj);
        assert_eq!(m.size(), 2);
        let free = m.left.iter().position(Option::is_none).unwrap();
        let reach = alternating_reach(free, &adj, &m);
        assert_eq!(reach, vec![0, 1]);
    }

    #[test]
    fn empty_graph() {
        let m = maximum_matching(0, &[]);
        assert_eq!(m.size(), 0);
    }
}
