//! Graphs of finite groups (Euler characteristic, class A–D recognition)
//! and orientable 2-orbifold signature arithmetic, including the
//! Riemann–Hurwitz enumerations used by the oracles.

use num_traits::Zero;

use crate::grouphom::SourcePresentation;
use crate::numtheory::divisors;
use crate::{Error, Int, Rat, Result};

/// A finite graph with finite group *orders* on vertices and edges.
/// Loops and multi-edges are allowed; each edge order must divide both
/// endpoint orders (so a cyclic edge group injects into both vertex groups).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfGroups {
    vertices: Vec<Int>,
    /// (endpoint index, endpoint index, edge group order)
    edges: Vec<(usize, usize, Int)>,
}

impl GraphOfGroups {
    pub fn new(vertex_orders: Vec<Int>, edges: Vec<(usize, usize, Int)>) -> Result<Self> {
        if vertex_orders.is_empty() {
            return Err(Error::InvalidInput("graph needs at least one vertex".into()));
        }
        if vertex_orders.iter().any(|&o| o < 1) {
            return Err(Error::InvalidInput("vertex orders must be positive".into()));
        }
        for &(a, b, o) in &edges {
            if a >= vertex_orders.len() || b >= vertex_orders.len() {
                return Err(Error::InvalidInput("edge endpoint out of range".into()));
            }
            if o < 1 {
                return Err(Error::InvalidInput("edge orders must be positive".into()));
            }
            if vertex_orders[a] % o != 0 || vertex_orders[b] % o != 0 {
                return Err(Error::InvalidInput(format!(
                    "edge order {o} does not divide both endpoint orders"
                )));
            }
        }
        let g = GraphOfGroups { vertices: vertex_orders, edges };
        if !g.is_connected() {
            return Err(Error::InvalidInput("graph must be connected".into()));
        }
        Ok(g)
    }

    pub fn vertex_orders(&self) -> &[Int] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, Int)] {
        &self.edges
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b, _) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `Σ_v 1/|G_v| − Σ_e 1/|G_e|`, exact.
    pub fn euler_char(&self) -> Rat {
        let vs: Rat = self.vertices.iter().map(|&o| Rat::new(1, o)).sum();
        let es: Rat = self.edges.iter().map(|&(_, _, o)| Rat::new(1, o)).sum();
        vs - es
    }
}

/// The four shapes a quotient graph of groups can take for large cyclic
/// actions on a handlebody.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbClass {
    /// Path on three nontrivial cyclic vertices with trivial edges,
    /// spherical triple: `1/l + 1/m + 1/n > 1`.
    A { l: Int, m: Int, n: Int },
    /// Trivial edge between nontrivial cyclic vertices, `0 < 1/m + 1/n < 1`.
    B { m: Int, n: Int },
    /// Single vertex of order `n > 1` with a trivial loop.
    C { n: Int },
    /// Vertex of order `m` carrying an order-`m` loop, joined by a trivial
    /// edge to a vertex of order `n`.
    D { m: Int, n: Int },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Class(OrbClass),
    Other,
}

impl OrbClass {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidInput(msg.into()));
        match *self {
            OrbClass::A { l, m, n } => {
                if l < 2 || m < 2 || n < 2 {
                    return bad("class A parameters must exceed 1");
                }
                if Rat::new(1, l) + Rat::new(1, m) + Rat::new(1, n) <= Rat::new(1, 1) {
                    return bad("class A triple must be spherical: 1/l+1/m+1/n > 1");
                }
            }
            OrbClass::B { m, n } => {
                if m < 2 || n < 2 {
                    return bad("class B parameters must exceed 1");
                }
                let s = Rat::new(1, m) + Rat::new(1, n);
                if s <= Rat::zero() || s >= Rat::new(1, 1) {
                    return bad("class B requires 0 < 1/m + 1/n < 1");
                }
            }
            OrbClass::C { n } => {
                if n < 2 {
                    return bad("class C parameter must exceed 1");
                }
            }
            OrbClass::D { m, n } => {
                if m < 2 || n < 2 {
                    return bad("class D parameters must exceed 1");
                }
            }
        }
        Ok(())
    }

    /// χ of the class: A → 1/l+1/m+1/n−2, B → 1/m+1/n−1, C, D → 1/n−1.
    pub fn euler_char(&self) -> Rat {
        let one = Rat::new(1, 1);
        match *self {
            OrbClass::A { l, m, n } => Rat::new(1, l) + Rat::new(1, m) + Rat::new(1, n) - one - one,
            OrbClass::B { m, n } => Rat::new(1, m) + Rat::new(1, n) - one,
            OrbClass::C { n } => Rat::new(1, n) - one,
            OrbClass::D { n, .. } => Rat::new(1, n) - one,
        }
    }

    /// π₁ of the class: A → Z_l∗Z_m∗Z_n, B → Z_m∗Z_n, C → Z_n∗Z,
    /// D → Z_n∗(Z_m⊕Z).
    pub fn fundamental_group(&self) -> SourcePresentation {
        match *self {
            OrbClass::A { l, m, n } => SourcePresentation::FreeProduct {
                cyclic_orders: vec![l, m, n],
                free_rank: 0,
                mixed_factor: None,
            },
            OrbClass::B { m, n } => SourcePresentation::FreeProduct {
                cyclic_orders: vec![m, n],
                free_rank: 0,
                mixed_factor: None,
            },
            OrbClass::C { n } => SourcePresentation::FreeProduct {
                cyclic_orders: vec![n],
                free_rank: 1,
                mixed_factor: None,
            },
            OrbClass::D { m, n } => SourcePresentation::FreeProduct {
                cyclic_orders: vec![n],
                free_rank: 0,
                mixed_factor: Some(m),
            },
        }
    }

    /// The graph of groups realizing the class diagram.
    pub fn representative(&self) -> GraphOfGroups {
        let g = match *self {
            OrbClass::A { l, m, n } => {
                GraphOfGroups::new(vec![l, m, n], vec![(0, 1, 1), (1, 2, 1)])
            }
            OrbClass::B { m, n } => GraphOfGroups::new(vec![m, n], vec![(0, 1, 1)]),
            OrbClass::C { n } => GraphOfGroups::new(vec![n], vec![(0, 0, 1)]),
            OrbClass::D { m, n } => GraphOfGroups::new(vec![m, n], vec![(0, 0, m), (0, 1, 1)]),
        };
        g.expect("class representatives are valid graphs")
    }
}

/// Recognizes classes A–D after the two χ-preserving reduction moves:
/// splice out trivial vertices joined by trivial edges, and contract a
/// non-loop edge whose order equals both endpoint orders.
pub fn classify(g: &GraphOfGroups) -> Result<Classification> {
    // Validity (incl. connectivity) is established at construction; re-check
    // cheaply in case the value was built by a future constructor.
    if !g.is_connected() {
        return Err(Error::InvalidInput("graph must be connected".into()));
    }
    let mut vertices = g.vertices.clone();
    let mut edges = g.edges.clone();

    loop {
        let degree = |edges: &[(usize, usize, Int)], v: usize| -> usize {
            edges
                .iter()
                .map(|&(a, b, _)| (a == v) as usize + (b == v) as usize)
                .sum()
        };

        // contract a full-order non-loop edge: Z_m *_{Z_m} Z_m = Z_m
        if let Some(i) = edges
            .iter()
            .position(|&(a, b, o)| a != b && o == vertices[a] && o == vertices[b])
        {
            let (a, b, _) = edges.remove(i);
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            vertices.remove(drop);
            for e in edges.iter_mut() {
                for end in [&mut e.0, &mut e.1] {
                    if *end == drop {
                        *end = keep;
                    } else if *end > drop {
                        *end -= 1;
                    }
                }
            }
            continue;
        }

        // splice out a trivial vertex: its incident edges are all trivial
        // (divisibility), so a pendant one vanishes and a degree-2 one is
        // replaced by a single trivial edge
        if vertices.len() > 1 {
            if let Some(v) = (0..vertices.len())
                .find(|&v| vertices[v] == 1 && degree(&edges, v) <= 2 && !edges.iter().any(|&(a, b, _)| a == v && b == v))
            {
                let incident: Vec<usize> = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b, _))| a == v || b == v)
                    .map(|(i, _)| i)
                    .collect();
                let others: Vec<usize> = incident
                    .iter()
                    .map(|&i| {
                        let (a, b, _) = edges[i];
                        if a == v { b } else { a }
                    })
                    .collect();
                for &i in incident.iter().rev() {
                    edges.remove(i);
                }
                if others.len() == 2 {
                    edges.push((others[0], others[1], 1));
                }
                vertices.remove(v);
                for e in edges.iter_mut() {
                    for end in [&mut e.0, &mut e.1] {
                        if *end > v {
                            *end -= 1;
                        }
                    }
                }
                continue;
            }
        }
        break;
    }

    let cls = match (vertices.len(), edges.len()) {
        (1, 1) => {
            let (a, b, o) = edges[0];
            let n = vertices[0];
            if a == b && o == 1 && n > 1 {
                Some(OrbClass::C { n })
            } else {
                None
            }
        }
        (2, 1) => {
            let (a, b, o) = edges[0];
            let (m, n) = (vertices[0].min(vertices[1]), vertices[0].max(vertices[1]));
            if a != b && o == 1 && m > 1 {
                Some(OrbClass::B { m, n })
            } else {
                None
            }
        }
        (2, 2) => {
            // D: order-m loop at the m-vertex plus a trivial connecting edge
            let loop_e = edges.iter().find(|&&(a, b, _)| a == b);
            let link_e = edges.iter().find(|&&(a, b, _)| a != b);
            match (loop_e, link_e) {
                (Some(&(lv, _, lo)), Some(&(_, _, 1))) if lo == vertices[lv] && lo > 1 => {
                    let other = 1 - lv;
                    if vertices[other] > 1 {
                        Some(OrbClass::D { m: vertices[lv], n: vertices[other] })
                    } else {
                        None
                    }
                }
                _ => None,
            }
        }
        (3, 2) => {
            // A: path with trivial edges on three nontrivial vertices
            let ok = edges.iter().all(|&(a, b, o)| a != b && o == 1);
            let deg: Vec<usize> = (0..3)
                .map(|v| edges.iter().map(|&(a, b, _)| (a == v) as usize + (b == v) as usize).sum())
                .collect();
            if ok && deg.iter().filter(|&&d| d == 1).count() == 2 && deg.contains(&2) {
                let mut p = vertices.clone();
                p.sort();
                Some(OrbClass::A { l: p[0], m: p[1], n: p[2] })
            } else {
                None
            }
        }
        _ => None,
    };
    match cls {
        Some(c) if c.validate().is_ok() => Ok(Classification::Class(c)),
        _ => Ok(Classification::Other),
    }
}

/// Orientable 2-orbifold signature: quotient genus plus cone indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbSignature {
    pub quotient_genus: Int,
    /// sorted ascending, every index ≥ 2
    pub cone_indices: Vec<Int>,
}

impl OrbSignature {
    pub fn new(quotient_genus: Int, mut cone_indices: Vec<Int>) -> Result<Self> {
        if quotient_genus < 0 {
            return Err(Error::InvalidInput("quotient genus must be ≥ 0".into()));
        }
        if cone_indices.iter().any(|&n| n < 2) {
            return Err(Error::InvalidInput("cone indices must be ≥ 2".into()));
        }
        cone_indices.sort();
        Ok(OrbSignature { quotient_genus, cone_indices })
    }

    /// `2 − 2g′ − Σ (1 − 1/n_i)`, exact.
    pub fn euler_char(&self) -> Rat {
        let cones: Rat = self
            .cone_indices
            .iter()
            .map(|&n| Rat::new(1, 1) - Rat::new(1, n))
            .sum();
        Rat::new(2 - 2 * self.quotient_genus, 1) - cones
    }
}

/// Solves `2 − 2g = order · χ_orb(s)` for the covered genus; `None` when
/// some cone index does not divide `order` (no point stabilizer of that
/// size) or the solution is not a nonnegative integer.
pub fn rh_covered_genus(order: Int, s: &OrbSignature) -> Option<Int> {
    if order < 1 || s.cone_indices.iter().any(|&n| order % n != 0) {
        return None;
    }
    let rhs = Rat::new(order, 1) * s.euler_char();
    let two_g = Rat::new(2, 1) - rhs;
    if !two_g.is_integer() {
        return None;
    }
    let t = two_g.to_integer();
    if t % 2 == 0 && t >= 0 {
        Some(t / 2)
    } else {
        None
    }
}

/// All `(g′, k, n)` with `k` even cone points of equal index `n`, `n ≥
/// min_order`, on a genus-`g′` quotient, covered by `Σ_g` with deck group
/// `Z_n`: solutions of `2 − 2g = n(2 − 2g′ − k(1 − 1/n))`.
pub fn enumerate_equal_cone_solutions(g: Int, min_order: Int) -> Result<Vec<(Int, Int, Int)>> {
    if g <= 1 || g % 2 != 0 {
        return Err(Error::InvalidInput(format!("genus must be even and > 1 (got {g})")));
    }
    if min_order < 2 {
        return Err(Error::InvalidInput("min_order must be ≥ 2".into()));
    }
    let mut out = Vec::new();
    for gp in (0..=g).rev() {
        let mut k = 0;
        while k <= 2 * g + 2 {
            // n(2 − 2g′ − k) + k = 2 − 2g  ⇔  n = (2g − 2 + k)/(2g′ + k − 2)
            let den = 2 * gp + k - 2;
            let num = 2 * g - 2 + k;
            if den > 0 && num % den == 0 {
                let n = num / den;
                if n >= min_order && n * (2 - 2 * gp - k) + k == 2 - 2 * g {
                    out.push((gp, k, n));
                }
            }
            k += 2;
        }
    }
    Ok(out)
}

/// All orientable signatures with cone indices dividing `order` that are
/// quotients of `Σ_g` by a group of that order via Riemann–Hurwitz.
/// Complete: each cone contributes at least 1/2 to `−χ_orb`, so the cone
/// count is at most `(4g−4)/order + 4`.
pub fn enumerate_signatures(
    g: Int,
    order: Int,
    orientable_quotient_genus_max: Int,
) -> Result<Vec<OrbSignature>> {
    crate::check_genus(g)?;
    if order < 2 {
        return Err(Error::InvalidInput("order must be ≥ 2".into()));
    }
    let k_max = (4 * g - 4) / order + 4;
    let idx: Vec<Int> = divisors(order).into_iter().filter(|&d| d >= 2).collect();
    let target_total = Rat::new(2 - 2 * g, order); // = χ_orb required
    let mut out = Vec::new();
    for gp in 0..=g.min(orientable_quotient_genus_max) {
        // Σ (1 − 1/n_i) must equal this exactly
        let need = Rat::new(2 - 2 * gp, 1) - target_total;
        let mut stack: Vec<Int> = Vec::new();
        dfs(&idx, 0, k_max, need, &mut stack, gp, &mut out);
    }
    out.sort();
    Ok(out)
}

fn dfs(
    idx: &[Int],
    from: usize,
    slots: Int,
    need: Rat,
    stack: &mut Vec<Int>,
    gp: Int,
    out: &mut Vec<OrbSignature>,
) {
    if need.is_zero() {
        out.push(OrbSignature { quotient_genus: gp, cone_indices: stack.clone() });
        // an extra cone always adds ≥ 1/2, so no extension also works
    }
    if need <= Rat::zero() || slots == 0 {
        return;
    }
    // each remaining cone contributes < 1, and at least 1/2
    if need > Rat::new(slots, 1) {
        return;
    }
    for (i, &n) in idx.iter().enumerate().skip(from) {
        let c = Rat::new(1, 1) - Rat::new(1, n);
        if c > need {
            continue;
        }
        stack.push(n);
        dfs(idx, i, slots - 1, need - c, stack, gp, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g: Int, cones: &[Int]) -> OrbSignature {
        OrbSignature::new(g, cones.to_vec()).unwrap()
    }

    #[test]
    fn graph_euler_char_examples() {
        let point = GraphOfGroups::new(vec![1], vec![]).unwrap();
        assert_eq!(point.euler_char(), Rat::new(1, 1));

        let b = GraphOfGroups::new(vec![3, 9], vec![(0, 1, 1)]).unwrap();
        assert_eq!(b.euler_char(), Rat::new(-5, 9));

        let c = GraphOfGroups::new(vec![3], vec![(0, 0, 1)]).unwrap();
        assert_eq!(c.euler_char(), Rat::new(-2, 3));
    }

    #[test]
    fn graph_validation() {
        assert!(GraphOfGroups::new(vec![], vec![]).is_err());
        // edge order must divide endpoints
        assert!(GraphOfGroups::new(vec![2, 3], vec![(0, 1, 2)]).is_err());
        // disconnected
        assert!(GraphOfGroups::new(vec![2, 3], vec![]).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = GraphOfGroups::new(vec![3], vec![(0, 0, 1)]).unwrap();
        assert_eq!(classify(&c).unwrap(), Classification::Class(OrbClass::C { n: 3 }));

        let a = GraphOfGroups::new(vec![2, 3, 3], vec![(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(
            classify(&a).unwrap(),
            Classification::Class(OrbClass::A { l: 2, m: 3, n: 3 })
        );

        let b = GraphOfGroups::new(vec![5, 3], vec![(0, 1, 1)]).unwrap();
        assert_eq!(classify(&b).unwrap(), Classification::Class(OrbClass::B { m: 3, n: 5 }));

        // reductions: pendant trivial vertex and a full-order edge
        let red = GraphOfGroups::new(
            vec![3, 3, 1],
            vec![(0, 1, 3), (0, 0, 1), (0, 2, 1)],
        )
        .unwrap();
        assert_eq!(classify(&red).unwrap(), Classification::Class(OrbClass::C { n: 3 }));

        // Euclidean pair (2,2) is not class B
        let flat = GraphOfGroups::new(vec![2, 2], vec![(0, 1, 1)]).unwrap();
        assert_eq!(classify(&flat).unwrap(), Classification::Other);
    }

    #[test]
    fn classify_roundtrip_and_euler_char() {
        let mut classes = Vec::new();
        for l in 2..=12 {
            for m in 2..=12 {
                for n in 2..=12 {
                    let c = OrbClass::A { l, m, n };
                    if c.validate().is_ok() {
                        let mut p = [l, m, n];
                        p.sort();
                        if p == [l, m, n] {
                            classes.push(c);
                        }
                    }
                }
            }
        }
        for m in 2..=12 {
            for n in m..=12 {
                let c = OrbClass::B { m, n };
                if c.validate().is_ok() {
                    classes.push(c);
                }
            }
        }
        for n in 2..=12 {
            classes.push(OrbClass::C { n });
        }
        for m in 2..=12 {
            for n in 2..=12 {
                classes.push(OrbClass::D { m, n });
            }
        }
        assert!(classes.len() > 100);
        for c in classes {
            let rep = c.representative();
            assert_eq!(rep.euler_char(), c.euler_char(), "{c:?}");
            assert_eq!(classify(&rep).unwrap(), Classification::Class(c), "{c:?}");
        }
    }

    #[test]
    fn class_table_values() {
        assert_eq!(OrbClass::A { l: 2, m: 3, n: 3 }.euler_char(), Rat::new(-5, 6));
        assert_eq!(OrbClass::A { l: 2, m: 2, n: 6 }.euler_char(), Rat::new(-5, 6));
        assert_eq!(OrbClass::B { m: 3, n: 9 }.euler_char(), Rat::new(-5, 9));
        assert_eq!(OrbClass::D { m: 5, n: 3 }.euler_char(), Rat::new(-2, 3));
        assert_eq!(OrbClass::C { n: 3 }.euler_char(), Rat::new(-2, 3));
    }

    #[test]
    fn signature_euler_char() {
        assert_eq!(sig(2, &[]).euler_char(), Rat::new(-2, 1));
        assert_eq!(sig(0, &[2, 2, 3, 3]).euler_char(), Rat::new(-1, 3));
        for n in 2..20 {
            assert_eq!(
                sig(1, &[n, n]).euler_char(),
                Rat::new(-2, 1) * (Rat::new(1, 1) - Rat::new(1, n))
            );
        }
    }

    #[test]
    fn rh_examples() {
        assert_eq!(rh_covered_genus(6, &sig(0, &[2, 2, 3, 3])), Some(2));
        for n in 2..30 {
            assert_eq!(rh_covered_genus(n, &sig(0, &[n, n])), Some(0));
        }
        // cone index not dividing the order
        assert_eq!(rh_covered_genus(4, &sig(0, &[3, 3, 3])), None);
        // non-integral genus
        assert_eq!(rh_covered_genus(3, &sig(0, &[3, 3, 3, 3])), Some(2));
    }

    #[test]
    fn rh_monotone_in_order() {
        let s = sig(0, &[2, 3, 7]);
        let mut last = None;
        for t in 1..=40 {
            let order = 84 * t;
            let g = rh_covered_genus(order, &s).unwrap();
            if let Some(prev) = last {
                assert!(g >= prev);
            }
            last = Some(g);
        }
    }

    #[test]
    fn equal_cone_solutions() {
        assert_eq!(
            enumerate_equal_cone_solutions(4, 3).unwrap(),
            vec![(2, 0, 3), (1, 2, 4), (0, 4, 5), (0, 6, 3)]
        );
        assert_eq!(
            enumerate_equal_cone_solutions(6, 4).unwrap(),
            vec![(2, 0, 5), (1, 2, 6), (0, 4, 7), (0, 6, 4)]
        );
        assert_eq!(enumerate_equal_cone_solutions(4, 6).unwrap(), Vec::new());
        assert!(enumerate_equal_cone_solutions(3, 2).is_err());
    }

    #[test]
    fn enumerate_signatures_examples() {
        let sigs = enumerate_signatures(2, 10, 0).unwrap();
        assert!(sigs.contains(&sig(0, &[2, 5, 10])));
        for s in &sigs {
            assert_eq!(Rat::new(10, 1) * s.euler_char(), Rat::new(-2, 1));
        }

        let sigs = enumerate_signatures(2, 12, 0).unwrap();
        assert!(sigs.contains(&sig(0, &[2, 4, 12])));
        for s in &sigs {
            assert_eq!(Rat::new(12, 1) * s.euler_char(), Rat::new(-2, 1));
        }

        assert_eq!(enumerate_signatures(3, 100, 3).unwrap(), Vec::new());
    }

    #[test]
    fn enumerate_signatures_exact() {
        for g in 2..=5 {
            for order in 2..=(4 * g + 4) {
                for s in enumerate_signatures(g, order, g).unwrap() {
                    assert_eq!(rh_covered_genus(order, &s), Some(g));
                }
            }
        }
    }
}
