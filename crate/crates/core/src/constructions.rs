//! Extremal graphs for the min/max-degree bounds.
//!
//! * Round-robin `(d, D)`-biregular graphs attain the lower bound.
//! * The chained block graphs `F(d, D)` (odd `d < D`) attain the upper bound.
//!
//! Family membership for the upper bound is decided by the cross-edge
//! structure: every edge between different degree classes joins consecutive
//! classes, and each consecutive pair of classes is joined by exactly one edge.

use num_integer::gcd;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::profile::DegreeProfile;

/// Smallest `scale` for which [`build_biregular`] yields a simple graph.
pub fn minimal_biregular_scale(d: usize, big_d: usize) -> usize {
    gcd(d, big_d)
}

/// Round-robin `(d, D)`-biregular graph.
///
/// With `g = gcd(d, D)`, the left part has `p = scale*d/g` vertices of degree
/// `D` (labels `0..p`) and the right part `q = scale*D/g` vertices of degree
/// `d` (labels `p..p+q`). Slot `t` in `0..D*p` joins left `t / D` to right
/// `t % q`; the slots of one left vertex are `D` consecutive residues, so the
/// graph is simple exactly when `q >= D`.
pub fn build_biregular(d: usize, big_d: usize, scale: usize) -> Result<Graph> {
    if d == 0 || d >= big_d {
        return Err(Error::Precondition(format!(
            "biregular construction needs 1 <= d < D, got d = {d}, D = {big_d}"
        )));
    }
    if scale == 0 {
        return Err(Error::Precondition("scale must be positive".into()));
    }
    let g = gcd(d, big_d);
    let (p, q) = (scale * d / g, scale * big_d / g);
    if q < big_d {
        return Err(Error::Precondition(format!(
            "scale {scale} gives only {q} degree-{d} vertices but degree-{big_d} vertices need {big_d} \
             distinct neighbours; minimal feasible scale is {g}"
        )));
    }
    let mut edges: Vec<_> = (0..big_d * p).map(|t| (t / big_d, p + t % q)).collect();
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(p + q, edges))
}

/// Complement of `P_3 + ((i-1)/2) K_2` on `i + 2` vertices, for odd `i >= 3`.
///
/// The path is `1 - 0 - 2`, so vertex 0 is the single vertex of degree
/// `i - 1`; every other vertex has degree `i`.
pub fn build_end_block(i: usize) -> Result<Graph> {
    if i < 3 || i.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "end block needs an odd degree >= 3, got {i} (degree 1 uses a single vertex)"
        )));
    }
    let mut sparse = vec![(0, 1), (0, 2)];
    sparse.extend((0..(i - 1) / 2).map(|k| (3 + 2 * k, 4 + 2 * k)));
    let base = Graph::from_edges(i + 2, sparse)?;
    Ok(base.complement())
}

/// `K_{i+1}` minus the edge `0 1`; vertices 0 and 1 have degree `i - 1`.
pub fn build_mid_block(i: usize) -> Result<Graph> {
    if i < 2 {
        return Err(Error::Precondition(format!(
            "middle block needs degree >= 2, got {i}"
        )));
    }
    let edges = Graph::complete(i + 1)
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != (0, 1))
        .collect();
    Ok(Graph::from_sorted_unchecked(i + 1, edges))
}

/// The chained block graph `F(d, D)` for odd `d < D`.
///
/// Blocks are laid out in order of degree: a single vertex (`d = 1`) or an
/// end block for `d`, middle blocks for `d+1 .. D-1`, an end block for `D`.
/// Each block's degree-deficient vertices are linked to the neighbouring
/// blocks so that every vertex of block `j` ends with degree `j`.
pub fn build_family_graph(d: usize, big_d: usize) -> Result<Graph> {
    if d == 0 || d >= big_d || d.is_multiple_of(2) || big_d.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "family construction needs odd 1 <= d < D, got d = {d}, D = {big_d}"
        )));
    }
    // (block, first deficient vertex, second deficient vertex)
    let mut blocks: Vec<(Graph, usize, usize)> = Vec::new();
    blocks.push(if d == 1 {
        (Graph::empty(1), 0, 0)
    } else {
        (build_end_block(d)?, 0, 0)
    });
    for i in d + 1..big_d {
        blocks.push((build_mid_block(i)?, 0, 1));
    }
    blocks.push((build_end_block(big_d)?, 0, 0));

    let mut graph = Graph::empty(0);
    let mut links = Vec::new();
    let mut previous_tail: Option<usize> = None;
    for (block, head, tail) in blocks {
        let offset = graph.order();
        if let Some(prev) = previous_tail {
            links.push((prev, offset + head));
        }
        previous_tail = Some(offset + tail);
        graph = graph.disjoint_union(&block);
    }
    let mut edges = graph.edges().to_vec();
    edges.extend(links);
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(graph.order(), edges))
}

/// An edge joining degree classes `degree` and `degree + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassLink {
    pub degree: usize,
    pub lower_vertex: usize,
    pub upper_vertex: usize,
}

/// Witness of upper-bound family membership: the `D - d` cross-class edges,
/// one per consecutive pair of degree classes, and nothing else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilyFCertificate {
    pub class_path: Vec<ClassLink>,
    pub cross_edge_total: usize,
}

/// Decides family membership. Errors on isolated vertices and on regular
/// graphs, for which the family is not defined.
pub fn family_f_certificate(g: &Graph) -> Result<Option<FamilyFCertificate>> {
    let degrees = g.degrees();
    let profile = DegreeProfile::from_degrees(g, &degrees)?;
    if profile.is_regular() {
        return Err(Error::Precondition(
            "family membership needs minimum degree < maximum degree".into(),
        ));
    }
    Ok(family_f_with_degrees(g, &degrees, &profile))
}

pub(crate) fn family_f_with_degrees(
    g: &Graph,
    degrees: &[usize],
    profile: &DegreeProfile,
) -> Option<FamilyFCertificate> {
    let (d, big_d) = (profile.min_degree(), profile.max_degree());
    let mut slots: Vec<Option<ClassLink>> = vec![None; big_d - d];
    for &(u, v) in g.edges() {
        let (du, dv) = (degrees[u], degrees[v]);
        if du == dv {
            continue;
        }
        let (lower_vertex, upper_vertex) = if du < dv { (u, v) } else { (v, u) };
        let degree = du.min(dv);
        if du.abs_diff(dv) != 1 {
            return None;
        }
        let slot = &mut slots[degree - d];
        if slot.is_some() {
            return None;
        }
        *slot = Some(ClassLink {
            degree,
            lower_vertex,
            upper_vertex,
        });
    }
    let class_path: Vec<ClassLink> = slots.into_iter().collect::<Option<_>>()?;
    Some(FamilyFCertificate {
        cross_edge_total: class_path.len(),
        class_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randic::randic_direct;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn biregular_examples() {
        assert_eq!(build_biregular(1, 3, 1).unwrap(), Graph::star(4));
        let k23 = build_biregular(2, 3, 1).unwrap();
        assert_eq!(k23, Graph::complete_bipartite(2, 3));
        let r = randic_direct(&k23).unwrap().value;
        assert!((r - 6f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn biregular_scale_check() {
        let err = build_biregular(2, 4, 1).unwrap_err();
        assert!(err.to_string().contains("minimal feasible scale is 2"));
        let g = build_biregular(2, 4, 2).unwrap();
        assert_eq!(g, Graph::complete_bipartite(2, 4));
        assert!(build_biregular(3, 3, 1).is_err());
        assert!(build_biregular(0, 3, 1).is_err());
        assert!(build_biregular(1, 3, 0).is_err());
    }

    #[test]
    fn biregular_is_simple_and_biregular_for_larger_scales() {
        for (d, big_d, scale) in [(2, 6, 2), (2, 6, 5), (3, 4, 3), (4, 6, 4)] {
            let g = build_biregular(d, big_d, scale).unwrap();
            let cert = g.biregular_certificate().unwrap();
            assert_eq!((cert.low_degree, cert.high_degree), (d, big_d));
        }
    }

    #[test]
    fn end_blocks() {
        assert_eq!(
            sorted_degrees(&build_end_block(3).unwrap()),
            vec![3, 3, 3, 3, 2]
        );
        assert_eq!(
            sorted_degrees(&build_end_block(5).unwrap()),
            vec![5, 5, 5, 5, 5, 5, 4]
        );
        assert_eq!(build_end_block(3).unwrap().degree(0), 2);
        assert!(build_end_block(2).is_err());
        assert!(build_end_block(1).is_err());
    }

    #[test]
    fn mid_blocks() {
        assert_eq!(build_mid_block(2).unwrap().edges(), &[(0, 2), (1, 2)]);
        assert_eq!(
            sorted_degrees(&build_mid_block(3).unwrap()),
            vec![3, 3, 2, 2]
        );
        assert_eq!(
            sorted_degrees(&build_mid_block(4).unwrap()),
            vec![4, 4, 4, 3, 3]
        );
        assert!(build_mid_block(1).is_err());
    }

    #[test]
    fn family_graph_one_three() {
        let g = build_family_graph(1, 3).unwrap();
        assert_eq!(g.order(), 9);
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 2, 2, 2, 3, 3, 3, 3, 3]);
        assert!(g.is_connected());
        let cert = family_f_certificate(&g).unwrap().unwrap();
        assert_eq!(cert.cross_edge_total, 2);
        assert_eq!(cert.class_path[0].degree, 1);
        assert_eq!(cert.class_path[1].degree, 2);
    }

    #[test]
    fn family_graph_sizes_and_parity() {
        assert_eq!(build_family_graph(3, 5).unwrap().order(), 17);
        assert!(build_family_graph(1, 2).is_err());
        assert!(build_family_graph(2, 4).is_err());
        assert!(build_family_graph(5, 3).is_err());
    }

    #[test]
    fn membership_rejections() {
        assert_eq!(family_f_certificate(&Graph::star(4)).unwrap(), None);
        assert_eq!(family_f_certificate(&Graph::path(4)).unwrap(), None);
        assert!(family_f_certificate(&Graph::cycle(5).unwrap()).is_err());
    }

    #[test]
    fn small_non_members() {
        // P_3 has two 1-2 edges.
        assert_eq!(family_f_certificate(&Graph::path(3)).unwrap(), None);
        // Triangle with a pendant vertex: the 1-3 edge skips a class.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(family_f_certificate(&g).unwrap(), None);
    }
}
