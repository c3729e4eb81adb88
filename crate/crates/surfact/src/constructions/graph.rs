//! Embedded graphs with exact vertices: chords (shortest geodesics between
//! non-antipodal points) and arcs of torus circles between consecutive
//! vertices. Edges compare geometrically, by kind and endpoint pair.

use std::collections::BTreeSet;

use super::isometry::{S3Isometry, S3Point};
use crate::{Error, Int, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    /// Shortest geodesic between two non-antipodal vertices.
    Chord(usize, usize),
    /// Arc of a fixed torus circle between cyclically consecutive vertices.
    TorusArc(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicGraph {
    pub vertices: Vec<S3Point>,
    pub edges: Vec<Edge>,
}

/// Geometric identity of an edge: kind plus the unordered endpoint pair.
type EdgeKey = (bool, S3Point, S3Point);

fn edge_key(is_chord: bool, a: S3Point, b: S3Point) -> EdgeKey {
    if a <= b {
        (is_chord, a, b)
    } else {
        (is_chord, b, a)
    }
}

impl GeodesicGraph {
    pub fn new(vertices: Vec<S3Point>, edges: Vec<Edge>) -> Result<Self> {
        let g = GeodesicGraph { vertices, edges };
        let mut seen = BTreeSet::new();
        for e in &g.edges {
            let (i, j, chord) = match *e {
                Edge::Chord(i, j) => (i, j, true),
                Edge::TorusArc(i, j) => (i, j, false),
            };
            if i >= g.vertices.len() || j >= g.vertices.len() {
                return Err(Error::InvalidInput("edge endpoint out of range".into()));
            }
            if chord {
                if g.vertices[i] == g.vertices[j] {
                    return Err(Error::InvalidInput("chord endpoints coincide".into()));
                }
                if g.vertices[j] == g.vertices[i].antipode() {
                    return Err(Error::InvalidInput(
                        "chord endpoints are antipodal: no unique shortest geodesic".into(),
                    ));
                }
            }
            if !seen.insert(edge_key(chord, g.vertices[i], g.vertices[j])) {
                return Err(Error::InvalidInput("duplicate edge".into()));
            }
        }
        Ok(g)
    }

    pub fn vertex_set(&self) -> BTreeSet<S3Point> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeKey> {
        self.edges
            .iter()
            .map(|e| match *e {
                Edge::Chord(i, j) => edge_key(true, self.vertices[i], self.vertices[j]),
                Edge::TorusArc(i, j) => edge_key(false, self.vertices[i], self.vertices[j]),
            })
            .collect()
    }

    fn image_sets(&self, a: &S3Isometry) -> (BTreeSet<S3Point>, BTreeSet<EdgeKey>) {
        let vs = self.vertices.iter().map(|p| a.apply(p)).collect();
        let es = self
            .edges
            .iter()
            .map(|e| match *e {
                Edge::Chord(i, j) => {
                    edge_key(true, a.apply(&self.vertices[i]), a.apply(&self.vertices[j]))
                }
                Edge::TorusArc(i, j) => {
                    edge_key(false, a.apply(&self.vertices[i]), a.apply(&self.vertices[j]))
                }
            })
            .collect();
        (vs, es)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                let (i, j) = match *e {
                    Edge::Chord(i, j) | Edge::TorusArc(i, j) => (i, j),
                };
                for (x, y) in [(i, j), (j, i)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Genus of the boundary of a regular neighbourhood of a connected graph:
/// `E − V + 1`.
pub fn graph_genus(g: &GeodesicGraph) -> Result<Int> {
    if !g.is_connected() {
        return Err(Error::InvalidInput("graph must be connected".into()));
    }
    Ok(g.edges.len() as Int - g.vertices.len() as Int + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphImage {
    PreservesEach,
    Swaps,
    Neither,
}

/// How an isometry moves the dual pair `(Γ, Γ′)`: onto themselves, onto
/// each other, or neither.
pub fn graph_image(a: &S3Isometry, gamma: &GeodesicGraph, dual: &GeodesicGraph) -> GraphImage {
    let (v1, e1) = gamma.image_sets(a);
    let (v2, e2) = dual.image_sets(a);
    if v1 == gamma.vertex_set() && e1 == gamma.edge_set() && v2 == dual.vertex_set() && e2 == dual.edge_set()
    {
        GraphImage::PreservesEach
    } else if v1 == dual.vertex_set()
        && e1 == dual.edge_set()
        && v2 == gamma.vertex_set()
        && e2 == gamma.edge_set()
    {
        GraphImage::Swaps
    } else {
        GraphImage::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::turn::RationalTurn;

    #[test]
    fn antipodal_chord_rejected() {
        let p = S3Point::on_first_circle(RationalTurn::zero());
        let q = p.antipode();
        assert!(GeodesicGraph::new(vec![p, q], vec![Edge::Chord(0, 1)]).is_err());
        let r = S3Point::on_second_circle(RationalTurn::zero());
        assert!(GeodesicGraph::new(vec![p, r], vec![Edge::Chord(0, 1)]).is_ok());
    }

    #[test]
    fn genus_of_triangle() {
        // a 3-cycle: E − V + 1 = 1
        let p = S3Point::on_first_circle(RationalTurn::zero());
        let q = S3Point::on_second_circle(RationalTurn::zero());
        let r = S3Point::on_second_circle(RationalTurn::new(1, 2));
        let g = GeodesicGraph::new(
            vec![p, q, r],
            vec![Edge::Chord(0, 1), Edge::Chord(0, 2), Edge::TorusArc(1, 2)],
        )
        .unwrap();
        assert_eq!(graph_genus(&g).unwrap(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn disconnected_graph_has_no_genus() {
        let p = S3Point::on_first_circle(RationalTurn::zero());
        let q = S3Point::on_second_circle(RationalTurn::zero());
        let g = GeodesicGraph::new(vec![p, q], vec![]).unwrap();
        assert!(graph_genus(&g).is_err());
    }
}
