use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::poset::Poset;

/// Two-element alternating cycles between incomparable pairs.
///
/// Vertex `(x, y)` stands for "some extension places `x` below `y`".
/// `(x, y)` and `(z, w)` conflict iff `y <= z` and `w <= x`: placing both in
/// one extension would give `x < y <= z < w <= x`.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    pub vertices: Vec<(usize, usize)>,
    adj: Vec<BitSet>,
}

impl ConflictGraph {
    pub fn new(p: &Poset) -> Self {
        let vertices = p.incomparable_pairs();
        let n = vertices.len();
        let mut adj: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in 0..n {
            for j in i + 1..n {
                if conflict(p, vertices[i], vertices[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Self { vertices, adj }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn vertex_index(&self, pair: (usize, usize)) -> Option<usize> {
        self.vertices.binary_search(&pair).ok()
    }

    /// Greedy saturation-degree coloring with at most `k` colors.
    ///
    /// `fixed` lists `(vertex, color)` pre-assignments. Ties go to the higher
    /// degree, then to the lower vertex index. Returns `None` as soon as some
    /// vertex sees all `k` colors among its neighbors.
    pub fn dsatur(&self, k: usize, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
        const NONE: usize = usize::MAX;
        let n = self.len();
        let mut color = vec![NONE; n];
        let mut seen: Vec<BitSet> = (0..n).map(|_| BitSet::new(k)).collect();
        let assign = |v: usize, c: usize, color: &mut Vec<usize>, seen: &mut Vec<BitSet>| {
            color[v] = c;
            for u in self.adj[v].iter() {
                seen[u].insert(c);
            }
        };
        for &(v, c) in fixed {
            if c >= k || seen[v].contains(c) {
                return None;
            }
            assign(v, c, &mut color, &mut seen);
        }
        for _ in fixed.len()..n {
            let v = (0..n)
                .filter(|&v| color[v] == NONE)
                .max_by(|&a, &b| {
                    (seen[a].len(), self.degree(a))
                        .cmp(&(seen[b].len(), self.degree(b)))
                        .then(b.cmp(&a))
                })?;
            let c = seen[v].complement().first()?;
            assign(v, c, &mut color, &mut seen);
        }
        Some(color)
    }
}

#[inline]
pub(crate) fn conflict(p: &Poset, (x, y): (usize, usize), (z, w): (usize, usize)) -> bool {
    p.leq(y, z) && p.leq(w, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::make_standard_example;

    #[test]
    fn reversed_pairs_conflict() {
        let p = Poset::antichain(2);
        let g = ConflictGraph::new(&p);
        assert_eq!(g.len(), 2);
        assert!(g.adjacent(0, 1));
        assert!(g.dsatur(1, &[]).is_none());
        assert_eq!(g.dsatur(2, &[]), Some(vec![0, 1]));
    }

    #[test]
    fn standard_example_critical_pairs_form_a_clique() {
        let s4 = make_standard_example(4).unwrap();
        let g = ConflictGraph::new(&s4);
        let frame: Vec<usize> = (0..4).map(|i| g.vertex_index((4 + i, i)).unwrap()).collect();
        for &u in &frame {
            for &v in &frame {
                assert_eq!(g.adjacent(u, v), u != v);
            }
        }
    }
}
