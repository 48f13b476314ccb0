//! Degree-class decomposition: vertex classes `V_i` of each degree `i` and
//! the edge counts `m_ij` between them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    order: usize,
    min_degree: usize,
    max_degree: usize,
    /// `class_sizes[k]` is `n_{min_degree + k}`.
    class_sizes: Vec<usize>,
    /// Keyed by `(i, j)` with `i <= j`; only non-zero counts are stored.
    cross_counts: BTreeMap<(usize, usize), usize>,
}

impl DegreeProfile {
    /// Fails on graphs with no vertices or with an isolated vertex.
    pub fn of(g: &Graph) -> Result<Self> {
        Self::from_degrees(g, &g.degrees())
    }

    pub(crate) fn from_degrees(g: &Graph, degrees: &[usize]) -> Result<Self> {
        if let Some(v) = degrees.iter().position(|&k| k == 0) {
            return Err(Error::IsolatedVertex(v));
        }
        let min_degree = *degrees.iter().min().ok_or(Error::EmptyGraph)?;
        let max_degree = *degrees.iter().max().ok_or(Error::EmptyGraph)?;

        let mut class_sizes = vec![0; max_degree - min_degree + 1];
        for &k in degrees {
            class_sizes[k - min_degree] += 1;
        }
        let mut cross_counts = BTreeMap::new();
        for &(u, v) in g.edges() {
            let (a, b) = (degrees[u], degrees[v]);
            *cross_counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        Ok(DegreeProfile {
            order: g.order(),
            min_degree,
            max_degree,
            class_sizes,
            cross_counts,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree == self.max_degree
    }

    /// `n_i`; zero outside `[min_degree, max_degree]`.
    pub fn class_size(&self, i: usize) -> usize {
        if i < self.min_degree || i > self.max_degree {
            0
        } else {
            self.class_sizes[i - self.min_degree]
        }
    }

    /// `(i, n_i)` for every `i` in `[min_degree, max_degree]`, including empty classes.
    pub fn class_sizes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.class_sizes
            .iter()
            .enumerate()
            .map(|(k, &s)| (self.min_degree + k, s))
    }

    /// `m_ij`, symmetric in its arguments.
    pub fn cross_count(&self, i: usize, j: usize) -> usize {
        self.cross_counts
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or(0)
    }

    /// Non-zero `((i, j), m_ij)` with `i <= j`, in lexicographic order.
    pub fn cross_counts(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.cross_counts
    }

    /// Checks `sum n_i = n` and the per-class handshake
    /// `i * n_i = 2 m_ii + sum_{j != i} m_ij`, in integers.
    pub fn satisfies_handshake(&self) -> bool {
        let total: usize = self.class_sizes.iter().sum();
        if total != self.order {
            return false;
        }
        self.class_sizes().all(|(i, n_i)| {
            let incident: usize = (self.min_degree..=self.max_degree)
                .map(|j| {
                    let m = self.cross_count(i, j);
                    if i == j {
                        2 * m
                    } else {
                        m
                    }
                })
                .sum();
            i * n_i == incident
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_on_four() {
        let p = DegreeProfile::of(&Graph::star(4)).unwrap();
        assert_eq!((p.min_degree(), p.max_degree()), (1, 3));
        assert_eq!(p.class_size(1), 3);
        assert_eq!(p.class_size(2), 0);
        assert_eq!(p.class_size(3), 1);
        assert_eq!(p.cross_count(1, 3), 3);
        assert_eq!(p.cross_count(3, 1), 3);
        assert_eq!(p.cross_counts().len(), 1);
        assert!(p.satisfies_handshake());
    }

    #[test]
    fn five_cycle() {
        let p = DegreeProfile::of(&Graph::cycle(5).unwrap()).unwrap();
        assert!(p.is_regular());
        assert_eq!(p.class_size(2), 5);
        assert_eq!(p.cross_count(2, 2), 5);
        assert!(p.satisfies_handshake());
    }

    #[test]
    fn complete_bipartite_two_three() {
        let p = DegreeProfile::of(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!((p.min_degree(), p.max_degree()), (2, 3));
        assert_eq!(p.class_size(2), 3);
        assert_eq!(p.class_size(3), 2);
        assert_eq!(p.cross_count(2, 3), 6);
        assert!(p.satisfies_handshake());
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(DegreeProfile::of(&g), Err(Error::IsolatedVertex(2)));
        assert_eq!(DegreeProfile::of(&Graph::empty(0)), Err(Error::EmptyGraph));
    }
}
