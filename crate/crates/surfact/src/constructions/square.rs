//! The flat-torus construction: the unit grid graph in the `z = 0` slice
//! of `E³/⟨(2,0,0),(0,2,0),(0,0,1)⟩`, preserved by a group of 32 affine
//! involutions.

use std::collections::HashSet;

use crate::{Error, Int, Result};

/// An affine map `x ↦ ε·x + t` of the 3-torus with `ε ∈ {±1}³` and the
/// translation taken modulo the `(2, 2, 1)` lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusAffineMap {
    /// `true` means the coordinate is negated.
    pub signs: [bool; 3],
    /// residues modulo `(2, 2, 1)`; the third is always 0.
    pub trans: [Int; 3],
}

const MODULI: [Int; 3] = [2, 2, 1];

impl TorusAffineMap {
    pub fn new(signs: [bool; 3], trans: [Int; 3]) -> Self {
        let mut t = trans;
        for i in 0..3 {
            t[i] = t[i].rem_euclid(MODULI[i]);
        }
        TorusAffineMap { signs, trans: t }
    }

    pub fn identity() -> Self {
        Self::new([false; 3], [0; 3])
    }

    pub fn translation(t: [Int; 3]) -> Self {
        Self::new([false; 3], t)
    }

    /// `r_x: (x,y,z) ↦ (x,−y,−z)`.
    pub fn r_x() -> Self {
        Self::new([false, true, true], [0; 3])
    }

    /// `r_y: (x,y,z) ↦ (−x,y,−z)`.
    pub fn r_y() -> Self {
        Self::new([true, false, true], [0; 3])
    }

    /// `R_z: (x,y,z) ↦ (x,y,−z)`.
    pub fn big_r_z() -> Self {
        Self::new([false, false, true], [0; 3])
    }

    /// `self ∘ other`: `(ε,t)∘(ε′,t′) = (ε·ε′, ε·t′ + t)`.
    pub fn compose(&self, other: &TorusAffineMap) -> TorusAffineMap {
        let mut signs = [false; 3];
        let mut trans = [0; 3];
        for i in 0..3 {
            signs[i] = self.signs[i] ^ other.signs[i];
            let moved = if self.signs[i] { -other.trans[i] } else { other.trans[i] };
            trans[i] = moved + self.trans[i];
        }
        TorusAffineMap::new(signs, trans)
    }

    pub fn apply(&self, p: [Int; 3]) -> [Int; 3] {
        let mut q = [0; 3];
        for i in 0..3 {
            let v = if self.signs[i] { -p[i] } else { p[i] };
            q[i] = (v + self.trans[i]).rem_euclid(MODULI[i]);
        }
        q
    }
}

/// A grid edge in the quotient torus: the unit segment from `base` in the
/// `+axis` direction (`axis` 0 = x, 1 = y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridEdge {
    pub base: [Int; 2],
    pub axis: usize,
}

#[derive(Debug, Clone)]
pub struct SquareConstruction {
    pub vertices: Vec<[Int; 2]>,
    pub edges: Vec<GridEdge>,
    pub group: Vec<TorusAffineMap>,
    pub abelian: bool,
}

/// Builds the quotient grid graph (4 vertices, 8 edges, genus 5) and the
/// closure of `{translations, r_x, r_y, R_z}` modulo the lattice.
pub fn build_square() -> Result<SquareConstruction> {
    let vertices: Vec<[Int; 2]> = vec![[0, 0], [1, 0], [0, 1], [1, 1]];
    let mut edges = Vec::new();
    for &v in &vertices {
        for axis in 0..2 {
            edges.push(GridEdge { base: v, axis });
        }
    }

    let gens = [
        TorusAffineMap::translation([1, 0, 0]),
        TorusAffineMap::translation([0, 1, 0]),
        TorusAffineMap::translation([0, 0, 1]),
        TorusAffineMap::r_x(),
        TorusAffineMap::r_y(),
        TorusAffineMap::big_r_z(),
    ];
    let mut seen: HashSet<TorusAffineMap> = HashSet::new();
    seen.insert(TorusAffineMap::identity());
    let mut frontier = vec![TorusAffineMap::identity()];
    while let Some(e) = frontier.pop() {
        for gen in &gens {
            let f = gen.compose(&e);
            if seen.insert(f) {
                if seen.len() > 64 {
                    return Err(Error::GroupTooLarge(64));
                }
                frontier.push(f);
            }
        }
    }
    let abelian = gens
        .iter()
        .all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)));
    let mut group: Vec<TorusAffineMap> = seen.into_iter().collect();
    group.sort_by_key(|m| (m.signs, m.trans));
    Ok(SquareConstruction { vertices, edges, group, abelian })
}

/// Image of a grid edge: the segment from `ε·base + t` in direction
/// `±axis`; a reversed direction shifts the base back by one unit.
pub fn map_edge(m: &TorusAffineMap, e: &GridEdge) -> GridEdge {
    let p = m.apply([e.base[0], e.base[1], 0]);
    let mut base = [p[0], p[1]];
    if m.signs[e.axis] {
        base[e.axis] = (base[e.axis] - 1).rem_euclid(2);
    }
    GridEdge { base, axis: e.axis }
}
