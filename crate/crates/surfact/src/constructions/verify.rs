//! Named pass/fail checks for every claim the model constructions make:
//! element orders, group orders and abelianness, orientation signs,
//! graph invariance and side-swapping, the two-of-three reversal parity,
//! and the resulting action types.

use serde::Serialize;

use super::builders::{
    build_cage, build_cage_odd, build_fork, build_wheel, classify_action, generate_group,
    Construction, GROUP_CLOSURE_CAP,
};
use super::graph::{graph_genus, graph_image, GeodesicGraph, GraphImage};
use super::isometry::S3Isometry;
use super::square::{build_square, map_edge};
use crate::quantities::ExtType;
use crate::{Error, Int, Result};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub example: String,
    pub genus: Option<Int>,
    pub checks: Vec<Check>,
}

impl CheckReport {
    fn new(example: &str, genus: Option<Int>) -> Self {
        CheckReport { example: example.into(), genus, checks: Vec::new() }
    }

    fn check(&mut self, name: &str, pass: bool) {
        self.checks.push(Check { name: name.into(), pass });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check_counts(r: &mut CheckReport, c: &Construction, vertices: Int, edges: Int, genus: Int) {
    let single = std::ptr::eq(&c.graph, &c.dual) || c.graph == c.dual;
    let sides: &[&GeodesicGraph] = if single { &[&c.graph] } else { &[&c.graph, &c.dual] };
    for (i, gr) in sides.iter().enumerate() {
        let tag = if single { String::new() } else { format!(" (side {i})") };
        r.check(&format!("graph{tag} has {vertices} vertices"), gr.vertices.len() as Int == vertices);
        r.check(&format!("graph{tag} has {edges} edges"), gr.edges.len() as Int == edges);
        r.check(
            &format!("graph{tag} neighbourhood boundary has genus {genus}"),
            graph_genus(gr) == Ok(genus),
        );
    }
}

/// Every element of the closure keeps the graph pair invariant, and among
/// the three reversal conditions (surface orientation, ambient
/// orientation, side swap) an even number holds for every element.
fn check_invariance_and_parity(
    r: &mut CheckReport,
    gens: &[S3Isometry],
    c: &Construction,
) -> Result<()> {
    let (group, _) = generate_group(gens, GROUP_CLOSURE_CAP)?;
    let mut invariant = true;
    let mut parity = true;
    for e in &group {
        let swap = match graph_image(e, &c.graph, &c.dual) {
            GraphImage::PreservesEach => false,
            GraphImage::Swaps => true,
            GraphImage::Neither => {
                invariant = false;
                continue;
            }
        };
        let s3_rev = e.orientation_sign() < 0;
        let surface_rev = s3_rev ^ swap;
        let trues = [surface_rev, s3_rev, swap].iter().filter(|&&b| b).count();
        parity &= trues % 2 == 0;
    }
    r.check("every element keeps the graph pair invariant", invariant);
    r.check("reversal conditions never hold an odd number of times", parity);
    Ok(())
}

fn check_type(
    r: &mut CheckReport,
    name: &str,
    gens: &[S3Isometry],
    c: &Construction,
    expected: ExtType,
) {
    let got = classify_action(gens, &c.graph, &c.dual);
    r.check(
        &format!("{name} has type {}", expected.label()),
        got == Ok(expected),
    );
}

/// Cage (Example of four `a`-vertices against `2g+2` `b`-vertices).
pub fn verify_cage(g: Int) -> Result<CheckReport> {
    let c = build_cage(g)?;
    let mut r = CheckReport::new("cage", Some(g));
    check_counts(&mut r, &c, g + 3, 2 * g + 2, g);

    let tau = c.generator("tau");
    let rho = c.generator("rho");
    let sigma = c.generator("sigma");
    let tau_sigma = tau.compose(&sigma);
    let tau2 = tau.compose(&tau);

    if g % 2 == 0 {
        r.check("tau has order 4g+4", tau.order() == 4 * g + 4);
        let t2rs = tau2.compose(&rho).compose(&sigma);
        r.check("tau^2 rho sigma has order 2g+2", t2rs.order() == 2 * g + 2);
        check_type(&mut r, "<tau>", &[tau], &c, ExtType::MP);
        check_type(&mut r, "<tau^2 rho sigma>", &[t2rs], &c, ExtType::MM);
    }
    r.check("tau sigma has order 2g+2", tau_sigma.order() == 2 * g + 2);

    for (name, gens) in [
        ("<tau sigma, rho>", vec![tau_sigma, rho]),
        ("<tau, rho>", vec![tau, rho]),
        ("<tau^2, rho, sigma>", vec![tau2, rho, sigma]),
    ] {
        let (grp, abelian) = generate_group(&gens, GROUP_CLOSURE_CAP)?;
        r.check(&format!("{name} has order 4g+4"), grp.len() as Int == 4 * g + 4);
        r.check(&format!("{name} is abelian"), abelian);
    }

    r.check("tau preserves the orientation of S^3", tau.orientation_sign() == 1);
    r.check("rho preserves the orientation of S^3", rho.orientation_sign() == 1);
    r.check("sigma reverses the orientation of S^3", sigma.orientation_sign() == -1);

    r.check(
        "only tau changes the two sides",
        graph_image(&tau, &c.graph, &c.dual) == GraphImage::Swaps
            && graph_image(&rho, &c.graph, &c.dual) == GraphImage::PreservesEach
            && graph_image(&sigma, &c.graph, &c.dual) == GraphImage::PreservesEach,
    );

    check_type(&mut r, "<tau sigma>", &[tau_sigma], &c, ExtType::PM);
    check_type(&mut r, "<tau sigma, rho>", &[tau_sigma, rho], &c, ExtType::PM);
    check_type(&mut r, "<tau, rho>", &[tau, rho], &c, ExtType::MP);
    check_type(&mut r, "<tau^2, rho, sigma>", &[tau2, rho, sigma], &c, ExtType::MM);

    check_invariance_and_parity(&mut r, &[tau, rho, sigma], &c)?;
    Ok(r)
}

/// Odd-genus cage variant (two extra chords, a single graph).
pub fn verify_cage_odd(g: Int) -> Result<CheckReport> {
    let c = build_cage_odd(g)?;
    let mut r = CheckReport::new("cage-odd", Some(g));
    check_counts(&mut r, &c, g + 3, 2 * g + 2, g);
    let gen = c.generator("tau2-rho-sigma");
    r.check("tau^2 rho sigma has order 2g", gen.order() == 2 * g);
    r.check(
        "generator reverses the orientation of S^3",
        gen.orientation_sign() == -1,
    );
    check_type(&mut r, "<tau^2 rho sigma>", &[gen], &c, ExtType::MM);
    check_invariance_and_parity(&mut r, &[gen], &c)?;
    Ok(r)
}

/// Wheel (vertices on the `(2,4)`-torus link).
pub fn verify_wheel(g: Int) -> Result<CheckReport> {
    let c = build_wheel(g)?;
    let mut r = CheckReport::new("wheel", Some(g));
    check_counts(&mut r, &c, 2 * g - 2, 3 * g - 3, g);
    let phi = c.generator("phi");
    r.check("phi has order 4g-4", phi.order() == 4 * g - 4);
    r.check("phi preserves the orientation of S^3", phi.orientation_sign() == 1);
    r.check(
        "phi changes the two sides",
        graph_image(&phi, &c.graph, &c.dual) == GraphImage::Swaps,
    );
    check_type(&mut r, "<phi>", &[phi], &c, ExtType::MP);
    check_invariance_and_parity(&mut r, &[phi], &c)?;
    Ok(r)
}

/// Fork (two star graphs separated by a sphere).
pub fn verify_fork(g: Int) -> Result<CheckReport> {
    let c = build_fork(g)?;
    let mut r = CheckReport::new("fork", Some(g));
    check_counts(&mut r, &c, g / 2 + 2, g / 2 + 1, 0);
    let tau2 = c.generator("tau2");
    let rhosigma = c.generator("rho-sigma");
    r.check(
        "tau^2 and rho sigma commute",
        tau2.compose(&rhosigma) == rhosigma.compose(&tau2),
    );
    let (grp, abelian) = generate_group(&[tau2, rhosigma], GROUP_CLOSURE_CAP)?;
    r.check("<tau^2, rho sigma> has order 2g+4", grp.len() as Int == 2 * g + 4);
    r.check("<tau^2, rho sigma> is abelian", abelian);
    r.check("tau^2 preserves the orientation of S^3", tau2.orientation_sign() == 1);
    r.check("rho sigma reverses the orientation of S^3", rhosigma.orientation_sign() == -1);
    r.check(
        "only tau^2 changes the two sides",
        graph_image(&tau2, &c.graph, &c.dual) == GraphImage::Swaps
            && graph_image(&rhosigma, &c.graph, &c.dual) == GraphImage::PreservesEach,
    );
    check_type(&mut r, "<tau^2, rho sigma>", &[tau2, rhosigma], &c, ExtType::Mix);
    check_invariance_and_parity(&mut r, &[tau2, rhosigma], &c)?;
    Ok(r)
}

/// Flat-torus square construction.
pub fn verify_square() -> Result<CheckReport> {
    let s = build_square()?;
    let mut r = CheckReport::new("square", None);
    r.check("graph has 4 vertices", s.vertices.len() == 4);
    r.check("graph has 8 edges", s.edges.len() == 8);
    r.check(
        "graph neighbourhood boundary has genus 5",
        s.edges.len() - s.vertices.len() + 1 == 5,
    );
    r.check("group has order 32", s.group.len() == 32);
    r.check("group is abelian", s.abelian);
    r.check(
        "every non-identity element has order 2",
        s.group.iter().all(|m| m.compose(m) == super::square::TorusAffineMap::identity()),
    );
    let vset: std::collections::BTreeSet<[Int; 2]> = s.vertices.iter().copied().collect();
    let eset: std::collections::BTreeSet<_> = s.edges.iter().copied().collect();
    let invariant = s.group.iter().all(|m| {
        let vimg: std::collections::BTreeSet<[Int; 2]> = s
            .vertices
            .iter()
            .map(|&[x, y]| {
                let p = m.apply([x, y, 0]);
                [p[0], p[1]]
            })
            .collect();
        let eimg: std::collections::BTreeSet<_> = s.edges.iter().map(|e| map_edge(m, e)).collect();
        vimg == vset && eimg == eset
    });
    r.check("every element preserves the graph", invariant);
    Ok(r)
}

/// CLI entry: dispatch by example name; `genus` is required for all but
/// `square` and must have the right parity.
pub fn verify_example(name: &str, genus: Option<Int>) -> Result<CheckReport> {
    let need_genus = || {
        genus.ok_or_else(|| Error::InvalidInput(format!("example '{name}' needs --genus")))
    };
    match name {
        "cage" => verify_cage(need_genus()?),
        "cage-odd" => verify_cage_odd(need_genus()?),
        "wheel" => verify_wheel(need_genus()?),
        "fork" => verify_fork(need_genus()?),
        "square" => verify_square(),
        _ => Err(Error::InvalidInput(format!(
            "unknown example '{name}' (expected cage, cage-odd, wheel, fork, square)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_pass_small() {
        for g in 2..=8 {
            let r = verify_cage(g).unwrap();
            assert!(r.pass(), "cage g={g}: {:?}", r.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
            if g % 2 == 1 {
                assert!(verify_cage_odd(g).unwrap().pass(), "cage-odd g={g}");
                assert!(verify_wheel(g).unwrap().pass(), "wheel g={g}");
            } else {
                assert!(verify_fork(g).unwrap().pass(), "fork g={g}");
            }
        }
        assert!(verify_square().unwrap().pass());
    }

    #[test]
    fn parity_mismatch_is_an_error() {
        assert!(matches!(verify_wheel(4), Err(Error::InvalidGenus(4))));
        assert!(matches!(verify_fork(5), Err(Error::InvalidGenus(5))));
        assert!(matches!(verify_example("wheel", None), Err(Error::InvalidInput(_))));
        assert!(matches!(verify_example("nonsense", Some(2)), Err(Error::InvalidInput(_))));
    }
}
