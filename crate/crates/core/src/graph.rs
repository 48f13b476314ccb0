//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices are `0..n`; edges are stored once,
/// as `(u, v)` with `u < v`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, labels outside
    /// `0..n` and repeated edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge(format!(
                    "{u} {v}: label out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidEdge(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidEdge(format!(
                    "duplicate edge {} {}",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        normalized.sort_unstable();
        Ok(Self::from_sorted_unchecked(n, normalized))
    }

    /// `edges` must already be normalized (`u < v`), sorted and duplicate free.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unchecked(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_unchecked(n, edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        let edges = (1..n).map(|v| (0, v)).collect();
        Self::from_sorted_unchecked(n, edges)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unchecked(a + b, edges)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).max()
    }

    /// True iff every vertex is reachable from vertex 0. Graphs with at most
    /// one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// `K_{1,n-1}` for some `n >= 2`, under any labeling.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.size() == self.n - 1
            && self.adjacency.iter().any(|a| a.len() == self.n - 1)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::Precondition(
                    "relabeling is not a permutation".into(),
                ));
            }
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Ok(Self::from_sorted_unchecked(self.n, edges))
    }

    /// Places `other` after `self`, shifting its labels by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted_unchecked(self.n + other.n, edges)
    }

    pub fn complement(&self) -> Self {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Self::from_sorted_unchecked(self.n, edges)
    }

    /// Canonical relabeling: among all labelings that list vertices by
    /// non-increasing degree, the one with the lexicographically smallest
    /// sorted edge list. Two graphs are isomorphic iff their canonical forms
    /// are equal. Cost grows with the factorials of the degree-class sizes,
    /// so this is meant for small witnesses only.
    pub fn canonical_form(&self) -> Graph {
        let degrees = self.degrees();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match groups.last_mut() {
                Some(group) if degrees[group[0]] == degrees[v] => group.push(v),
                _ => groups.push(vec![v]),
            }
        }
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut perm = vec![0; self.n];
        self.search_canonical(&groups, 0, 0, &mut perm, &mut best);
        Self::from_sorted_unchecked(self.n, best.unwrap_or_default())
    }

    fn search_canonical(
        &self,
        groups: &[Vec<usize>],
        group: usize,
        next_label: usize,
        perm: &mut [usize],
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        let Some(members) = groups.get(group) else {
            let mut edges: Vec<_> = self
                .edges
                .iter()
                .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                *best = Some(edges);
            }
            return;
        };
        let mut members = members.clone();
        let k = members.len();
        // Heap's algorithm over the labels of this degree class.
        let mut c = vec![0; k];
        let assign =
            |members: &[usize], perm: &mut [usize], best: &mut Option<Vec<(usize, usize)>>| {
                for (offset, &v) in members.iter().enumerate() {
                    perm[v] = next_label + offset;
                }
                self.search_canonical(groups, group + 1, next_label + k, perm, best);
            };
        assign(&members, perm, best);
        let mut i = 0;
        while i < k {
            if c[i] < i {
                if i % 2 == 0 {
                    members.swap(0, i);
                } else {
                    members.swap(c[i], i);
                }
                assign(&members, perm, best);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }

    /// Returns a `(a, b)`-biregular witness if one exists: a two-colouring in
    /// which every vertex on one side has degree `a`, every vertex on the
    /// other has degree `b`, and `a <= b`.
    ///
    /// When `a < b` the colouring is forced by degree. When the graph is
    /// regular each component is two-coloured separately; the side holding
    /// the component's lowest label goes to the low part.
    pub fn biregular_certificate(&self) -> Option<BiregularCertificate> {
        let degrees = self.degrees();
        let low = *degrees.iter().min()?;
        let high = *degrees.iter().max()?;

        if low < high {
            if degrees.iter().any(|&k| k != low && k != high) {
                return None;
            }
            if self.edges.iter().any(|&(u, v)| degrees[u] == degrees[v]) {
                return None;
            }
            let (low_part, high_part) = (0..self.n).partition(|&v| degrees[v] == low);
            return Some(BiregularCertificate {
                low_degree: low,
                high_degree: high,
                low_part,
                high_part,
            });
        }

        let colouring = self.two_colouring()?;
        let (low_part, high_part) = (0..self.n).partition(|&v| !colouring[v]);
        Some(BiregularCertificate {
            low_degree: low,
            high_degree: high,
            low_part,
            high_part,
        })
    }

    /// Per-component BFS two-colouring; the lowest label of each component
    /// gets colour `false`.
    fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("queued vertices are coloured");
                for &w in &self.adjacency[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }
}

/// Witness that a graph is `(low_degree, high_degree)`-biregular.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BiregularCertificate {
    pub low_degree: usize,
    pub high_degree: usize,
    pub low_part: Vec<usize>,
    pub high_part: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidEdge(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::InvalidEdge(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::InvalidEdge(_))
        ));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(2).is_connected());
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert!(!two_k2.is_connected());
        assert!(Graph::cycle(5).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn star_certificate() {
        let cert = Graph::star(4).biregular_certificate().unwrap();
        assert_eq!((cert.low_degree, cert.high_degree), (1, 3));
        assert_eq!(cert.low_part, vec![1, 2, 3]);
        assert_eq!(cert.high_part, vec![0]);
    }

    #[test]
    fn complete_bipartite_certificate() {
        let cert = Graph::complete_bipartite(2, 3)
            .biregular_certificate()
            .unwrap();
        assert_eq!((cert.low_degree, cert.high_degree), (2, 3));
        assert_eq!(cert.low_part.len(), 3);
        assert_eq!(cert.high_part.len(), 2);
    }

    #[test]
    fn odd_cycle_is_not_biregular() {
        assert!(Graph::cycle(5).unwrap().biregular_certificate().is_none());
    }

    #[test]
    fn even_cycle_is_two_two_biregular() {
        let cert = Graph::cycle(6).unwrap().biregular_certificate().unwrap();
        assert_eq!((cert.low_degree, cert.high_degree), (2, 2));
        assert_eq!(cert.low_part, vec![0, 2, 4]);
    }

    #[test]
    fn disconnected_biregular_needs_common_degrees() {
        // K_{1,2} + K_{1,3}: degrees 1, 2, 3 cannot split into two uniform parts.
        let g = Graph::star(3).disjoint_union(&Graph::star(4));
        assert!(g.biregular_certificate().is_none());
        // Two copies of K_{1,3} share (1, 3).
        let g = Graph::star(4).disjoint_union(&Graph::star(4));
        let cert = g.biregular_certificate().unwrap();
        assert_eq!(cert.high_part, vec![0, 4]);
    }

    #[test]
    fn unequal_degrees_inside_one_part_rejected() {
        // P_4: degrees 1,2,2,1, the middle edge joins two degree-2 vertices.
        assert!(Graph::path(4).biregular_certificate().is_none());
    }

    #[test]
    fn stars_detected_under_relabeling() {
        assert!(Graph::complete(2).is_star());
        assert!(Graph::path(3).is_star());
        assert!(!Graph::path(4).is_star());
        let g = Graph::star(5).relabel(&[3, 0, 1, 2, 4]).unwrap();
        assert!(g.is_star());
        assert_eq!(g.degree(3), 4);
    }

    #[test]
    fn canonical_form_identifies_isomorphic_graphs() {
        let a = Graph::path(5);
        let b = a.relabel(&[4, 2, 0, 1, 3]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), Graph::star(5).canonical_form());
        assert_eq!(Graph::star(4).canonical_form(), Graph::star(4));
    }

    #[test]
    fn complement_of_path() {
        let c = Graph::path(3).complement();
        assert_eq!(c.edges(), &[(0, 2)]);
    }
}
