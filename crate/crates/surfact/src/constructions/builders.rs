//! The model graph pairs in `S³` (cage, wheel, fork) with their named
//! generator isometries, group closure, and action-type classification.

use std::collections::HashSet;

use super::graph::{graph_image, Edge, GeodesicGraph, GraphImage};
use super::isometry::{S3Isometry, S3Point};
use super::turn::RationalTurn;
use crate::quantities::ExtType;
use crate::{check_genus, Error, Int, Rat, Result};

pub const GROUP_CLOSURE_CAP: usize = 10_000;

/// A dual graph pair with the isometries acting on it. Single-graph
/// constructions set `dual = graph`.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: GeodesicGraph,
    pub dual: GeodesicGraph,
    pub generators: Vec<(&'static str, S3Isometry)>,
}

impl Construction {
    pub fn generator(&self, name: &str) -> S3Isometry {
        self.generators
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, a)| *a)
            .expect("generator name from the same builder")
    }
}

/// `τ_g: (z1, z2) ↦ (iz1, e^{πi/(g+1)} z2)`.
pub fn tau(g: Int) -> S3Isometry {
    S3Isometry::rotation(RationalTurn::new(1, 4), RationalTurn::new(1, 2 * g + 2))
}

/// `ρ: (z1, z2) ↦ (−z1, z2)`.
pub fn rho() -> S3Isometry {
    S3Isometry::rotation(RationalTurn::new(1, 2), RationalTurn::zero())
}

/// `σ: (z1, z2) ↦ (z̄1, z2)`.
pub fn sigma() -> S3Isometry {
    S3Isometry {
        turn1: RationalTurn::zero(),
        conj1: true,
        turn2: RationalTurn::zero(),
        conj2: false,
    }
}

/// `φ_g: (z1, z2) ↦ (e^{πi/(g−1)} z1, i·e^{πi/(2g−2)} z2)`.
pub fn phi(g: Int) -> S3Isometry {
    S3Isometry::rotation(
        RationalTurn::new(1, 2 * g - 2),
        RationalTurn::new(1, 4) + RationalTurn::new(1, 4 * g - 4),
    )
}

fn cage_a(m: Int) -> S3Point {
    S3Point::on_first_circle(RationalTurn::new(m, 4))
}

fn cage_b(g: Int, n: Int) -> S3Point {
    S3Point::on_second_circle(RationalTurn::new(n, 2 * g + 2))
}

/// Cage (any `g > 1`): `Γ` holds `a_0, a_2` and the even `b`-vertices,
/// `Γ′` the odd ones; every `a` is joined to every `b` of its parity.
/// Each graph has `g+3` vertices and `2g+2` edges.
pub fn build_cage(g: Int) -> Result<Construction> {
    check_genus(g)?;
    let build_side = |parity: Int| -> Result<GeodesicGraph> {
        let mut vertices = vec![cage_a(parity), cage_a(parity + 2)];
        for k in 0..=g {
            vertices.push(cage_b(g, 2 * k + parity));
        }
        let mut edges = Vec::new();
        for ai in 0..2 {
            for bi in 0..=(g as usize) {
                edges.push(Edge::Chord(ai, 2 + bi));
            }
        }
        GeodesicGraph::new(vertices, edges)
    };
    Ok(Construction {
        graph: build_side(0)?,
        dual: build_side(1)?,
        generators: vec![("tau", tau(g)), ("rho", rho()), ("sigma", sigma())],
    })
}

/// Odd-genus cage variant: the odd-side cage graph of genus `g−1` with the
/// vertex `a_0` and the chords `a_0a_1`, `a_0a_3` added. A single graph of
/// genus `g`, preserved by `τ²_{g−1}ρσ` of order `2g`.
pub fn build_cage_odd(g: Int) -> Result<Construction> {
    check_genus(g)?;
    if g % 2 == 0 {
        return Err(Error::InvalidGenus(g));
    }
    let base = g - 1;
    let mut vertices = vec![cage_a(1), cage_a(3)];
    for k in 0..=base {
        vertices.push(cage_b(base, 2 * k + 1));
    }
    let mut edges = Vec::new();
    for ai in 0..2 {
        for bi in 0..=(base as usize) {
            edges.push(Edge::Chord(ai, 2 + bi));
        }
    }
    let a0 = vertices.len();
    vertices.push(cage_a(0));
    edges.push(Edge::Chord(a0, 0));
    edges.push(Edge::Chord(a0, 1));
    let graph = GeodesicGraph::new(vertices, edges)?;
    let t2rs = tau(base).compose(&tau(base)).compose(&rho()).compose(&sigma());
    Ok(Construction { dual: graph.clone(), graph, generators: vec![("tau2-rho-sigma", t2rs)] })
}

/// Wheel (odd `g > 1`): `2g−2` vertices on each of the two torus circles
/// of the `(2,4)`-torus link, consecutive ones joined by arcs and
/// diametrically indexed ones by chords; `3g−3` edges per graph.
pub fn build_wheel(g: Int) -> Result<Construction> {
    check_genus(g)?;
    if g % 2 == 0 {
        return Err(Error::InvalidGenus(g));
    }
    let half = Rat::new(1, 2);
    let count = 2 * g - 2;
    let a_vertex = |m: Int| {
        S3Point::new(half, RationalTurn::new(m, g - 1), RationalTurn::new(m, 2 * g - 2))
    };
    let b_vertex = |n: Int| {
        S3Point::new(
            half,
            RationalTurn::new(2 * n + 1, 2 * g - 2),
            RationalTurn::new(1, 4) + RationalTurn::new(2 * n + 1, 4 * g - 4),
        )
    };
    let build_side = |vertex: &dyn Fn(Int) -> S3Point| -> Result<GeodesicGraph> {
        let vertices: Vec<S3Point> = (0..count).map(vertex).collect();
        let mut edges = Vec::new();
        for i in 0..count {
            edges.push(Edge::TorusArc(i as usize, ((i + 1) % count) as usize));
        }
        for i in 0..g - 1 {
            edges.push(Edge::Chord(i as usize, (i + g - 1) as usize));
        }
        GeodesicGraph::new(vertices, edges)
    };
    Ok(Construction {
        graph: build_side(&a_vertex)?,
        dual: build_side(&b_vertex)?,
        generators: vec![("phi", phi(g))],
    })
}

/// Fork (even `g > 1`): `a_0 = (i, 0)` joined to the even `b`-vertices on
/// the second circle, `a_1 = (−i, 0)` to the odd ones; preserved by
/// `τ²_{g+1}` and `ρσ`.
pub fn build_fork(g: Int) -> Result<Construction> {
    check_genus(g)?;
    if g % 2 != 0 {
        return Err(Error::InvalidGenus(g));
    }
    let b_vertex = |n: Int| S3Point::on_second_circle(RationalTurn::new(n, g + 2));
    let build_side = |a_turn: RationalTurn, parity: Int| -> Result<GeodesicGraph> {
        let mut vertices = vec![S3Point::on_first_circle(a_turn)];
        let mut edges = Vec::new();
        for k in 0..=g / 2 {
            vertices.push(b_vertex(2 * k + parity));
            edges.push(Edge::Chord(0, (k + 1) as usize));
        }
        GeodesicGraph::new(vertices, edges)
    };
    let tau2 = tau(g + 1).compose(&tau(g + 1));
    let rhosigma = rho().compose(&sigma());
    Ok(Construction {
        graph: build_side(RationalTurn::new(1, 4), 0)?,
        dual: build_side(RationalTurn::new(3, 4), 1)?,
        generators: vec![("tau2", tau2), ("rho-sigma", rhosigma)],
    })
}

/// Closure of the generators under composition, with the abelianness of
/// the generated group.
pub fn generate_group(gens: &[S3Isometry], cap: usize) -> Result<(HashSet<S3Isometry>, bool)> {
    let mut seen = HashSet::new();
    seen.insert(S3Isometry::identity());
    let mut frontier = vec![S3Isometry::identity()];
    while let Some(e) = frontier.pop() {
        for gen in gens {
            let f = gen.compose(&e);
            if seen.insert(f) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                frontier.push(f);
            }
        }
    }
    let abelian = gens
        .iter()
        .all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)));
    Ok((seen, abelian))
}

/// Classifies the extendable action of `⟨gens⟩` on the surface bounding a
/// neighbourhood of the graph pair. For each element the `S³` orientation
/// behavior is read off the isometry and the surface orientation behavior
/// is reversal-of-`S³` XOR side-swap (exactly two of the three reversal
/// conditions hold whenever any does).
pub fn classify_action(
    gens: &[S3Isometry],
    gamma: &GeodesicGraph,
    dual: &GeodesicGraph,
) -> Result<ExtType> {
    let (group, _) = generate_group(gens, GROUP_CLOSURE_CAP)?;
    let mut has_surface_rev_only = false;
    let mut has_s3_rev_only = false;
    let mut has_both_rev = false;
    for e in &group {
        let swap = match graph_image(e, gamma, dual) {
            GraphImage::PreservesEach => false,
            GraphImage::Swaps => true,
            GraphImage::Neither => return Err(Error::NotInvariant),
        };
        let s3_rev = e.orientation_sign() < 0;
        let surface_rev = s3_rev ^ swap;
        match (surface_rev, s3_rev) {
            (true, false) => has_surface_rev_only = true,
            (false, true) => has_s3_rev_only = true,
            (true, true) => has_both_rev = true,
            (false, false) => {}
        }
    }
    Ok(match (has_surface_rev_only, has_s3_rev_only) {
        (true, true) => ExtType::Mix,
        (true, false) => ExtType::MP,
        (false, true) => ExtType::PM,
        (false, false) => {
            if has_both_rev {
                ExtType::MM
            } else {
                ExtType::PP
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::graph::graph_genus;

    #[test]
    fn cage_counts_and_types() {
        for g in [2, 3, 4, 5] {
            let c = build_cage(g).unwrap();
            for gr in [&c.graph, &c.dual] {
                assert_eq!(gr.vertices.len() as Int, g + 3);
                assert_eq!(gr.edges.len() as Int, 2 * g + 2);
                assert_eq!(graph_genus(gr).unwrap(), g);
            }
        }
        let c = build_cage(2).unwrap();
        assert_eq!(classify_action(&[c.generator("tau")], &c.graph, &c.dual).unwrap(), ExtType::MP);
        let ts = c.generator("tau").compose(&c.generator("sigma"));
        assert_eq!(classify_action(&[ts], &c.graph, &c.dual).unwrap(), ExtType::PM);
        assert_eq!(
            classify_action(&[ts, c.generator("rho")], &c.graph, &c.dual).unwrap(),
            ExtType::PM
        );
    }

    #[test]
    fn cage_group_orders() {
        for g in [2, 3, 5, 6] {
            let c = build_cage(g).unwrap();
            let (t, r, s) = (c.generator("tau"), c.generator("rho"), c.generator("sigma"));
            let (grp, ab) = generate_group(&[t.compose(&s), r], GROUP_CLOSURE_CAP).unwrap();
            assert_eq!(grp.len() as Int, 4 * g + 4);
            assert!(ab);
            let (grp, ab) = generate_group(&[t.compose(&t), r, s], GROUP_CLOSURE_CAP).unwrap();
            assert_eq!(grp.len() as Int, 4 * g + 4);
            assert!(ab);
        }
    }

    #[test]
    fn cage_odd_variant() {
        for g in [3, 5, 7] {
            let c = build_cage_odd(g).unwrap();
            assert_eq!(c.graph.vertices.len() as Int, g + 3);
            assert_eq!(c.graph.edges.len() as Int, 2 * g + 2);
            assert_eq!(graph_genus(&c.graph).unwrap(), g);
            let gen = c.generator("tau2-rho-sigma");
            assert_eq!(gen.order(), 2 * g);
            assert_eq!(classify_action(&[gen], &c.graph, &c.dual).unwrap(), ExtType::MM);
        }
        assert!(build_cage_odd(4).is_err());
    }

    #[test]
    fn wheel_counts_and_type() {
        for g in [3, 5, 7] {
            let c = build_wheel(g).unwrap();
            for gr in [&c.graph, &c.dual] {
                assert_eq!(gr.vertices.len() as Int, 2 * g - 2);
                assert_eq!(gr.edges.len() as Int, 3 * g - 3);
                assert_eq!(graph_genus(gr).unwrap(), g);
            }
            let p = c.generator("phi");
            assert_eq!(p.order(), 4 * g - 4);
            assert_eq!(graph_image(&p, &c.graph, &c.dual), GraphImage::Swaps);
            assert_eq!(classify_action(&[p], &c.graph, &c.dual).unwrap(), ExtType::MP);
        }
        assert!(build_wheel(4).is_err());
    }

    #[test]
    fn fork_counts_and_type() {
        for g in [2, 4, 6] {
            let c = build_fork(g).unwrap();
            for gr in [&c.graph, &c.dual] {
                assert_eq!(gr.vertices.len() as Int, g / 2 + 2);
                assert_eq!(gr.edges.len() as Int, g / 2 + 1);
            }
            let t2 = c.generator("tau2");
            let rs = c.generator("rho-sigma");
            let (grp, ab) = generate_group(&[t2, rs], GROUP_CLOSURE_CAP).unwrap();
            assert_eq!(grp.len() as Int, 2 * g + 4);
            assert!(ab);
            assert_eq!(classify_action(&[t2, rs], &c.graph, &c.dual).unwrap(), ExtType::Mix);
        }
        assert!(build_fork(3).is_err());
    }
}
