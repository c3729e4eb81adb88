//! Finitely injective surjections (FIS) onto finite abelian groups:
//! the closed form for cyclic targets, an exhaustive small-group search,
//! and the handlebody realization and pairing criteria built on them.

use std::collections::BTreeMap;

use crate::numtheory::{lcm_list, FiniteAbelianGroup, GroupElement};
use crate::orbifolds::{OrbClass, OrbSignature};
use crate::{Error, Int, Result};

/// Largest target group the exhaustive search accepts.
pub const BRUTE_FORCE_ORDER_BOUND: Int = 256;
/// Largest number of torsion generators the exhaustive search accepts.
pub const TORSION_GENERATOR_BOUND: usize = 12;

/// Abelianization-level presentation of the source group of an FIS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourcePresentation {
    /// `Z_{m_1} ∗ … ∗ Z_{m_l} ∗ F_r`, optionally with one extra factor
    /// `Z_m ⊕ Z` (the `mixed_factor`).
    FreeProduct {
        cyclic_orders: Vec<Int>,
        free_rank: usize,
        mixed_factor: Option<Int>,
    },
    /// Orbifold fundamental group of an orientable 2-orbifold: handle
    /// generators are free, cone generators x_j have the cone orders and
    /// satisfy the long relation (images sum to zero after abelianization).
    OrbifoldGroup { signature: OrbSignature },
}

impl SourcePresentation {
    /// Required exact orders of the torsion generators, in witness order.
    pub fn torsion_orders(&self) -> Vec<Int> {
        match self {
            SourcePresentation::FreeProduct { cyclic_orders, mixed_factor, .. } => {
                let mut t = cyclic_orders.clone();
                if let Some(m) = mixed_factor {
                    t.push(*m);
                }
                t
            }
            SourcePresentation::OrbifoldGroup { signature } => signature.cone_indices.clone(),
        }
    }

    /// Number of unconstrained (free or handle) generators.
    pub fn free_generator_count(&self) -> usize {
        match self {
            SourcePresentation::FreeProduct { free_rank, mixed_factor, .. } => {
                free_rank + usize::from(mixed_factor.is_some())
            }
            SourcePresentation::OrbifoldGroup { signature } => {
                2 * signature.quotient_genus as usize
            }
        }
    }

    /// Whether the torsion images are constrained to sum to the identity.
    pub fn has_zero_sum_relation(&self) -> bool {
        matches!(self, SourcePresentation::OrbifoldGroup { .. })
    }

    pub fn validate(&self) -> Result<()> {
        if let SourcePresentation::FreeProduct { cyclic_orders, mixed_factor, .. } = self {
            if cyclic_orders.iter().any(|&m| m < 2) {
                return Err(Error::InvalidInput("cyclic factor orders must be ≥ 2".into()));
            }
            if matches!(mixed_factor, Some(m) if *m < 2) {
                return Err(Error::InvalidInput("mixed factor order must be ≥ 2".into()));
            }
        }
        Ok(())
    }
}

/// Images of the torsion generators followed by the free/handle generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub images: Vec<GroupElement>,
}

/// Whether an FIS from a free-product source onto `Z_n` exists:
/// with no free part and no mixed factor it requires `n = [m_1,…,m_l]`;
/// otherwise the free part can fill in a generator and the condition is
/// `[m_1,…,m_l] | n` (with the mixed factor's torsion included).
pub fn fis_to_cyclic_exists(src: &SourcePresentation, n: Int) -> Result<bool> {
    src.validate()?;
    if n < 1 {
        return Err(Error::InvalidInput(format!("target order {n} must be positive")));
    }
    let (cyclic_orders, free_rank, mixed_factor) = match src {
        SourcePresentation::FreeProduct { cyclic_orders, free_rank, mixed_factor } => {
            (cyclic_orders, *free_rank, *mixed_factor)
        }
        SourcePresentation::OrbifoldGroup { .. } => {
            return Err(Error::InvalidInput(
                "fis_to_cyclic_exists expects a free-product source".into(),
            ))
        }
    };
    let mut orders = cyclic_orders.clone();
    if let Some(m) = mixed_factor {
        orders.push(m);
    }
    let l = if orders.is_empty() { 1 } else { lcm_list(&orders)? };
    Ok(if free_rank == 0 && mixed_factor.is_none() {
        n == l
    } else {
        n % l == 0
    })
}

/// Exhaustive FIS search onto a small abelian target. Returns the
/// lexicographically first witness, or `None`. Torsion images are required
/// to have exactly the source orders; for orbifold sources the last cone
/// image is forced by the zero-sum relation.
pub fn fis_exists_bruteforce(
    src: &SourcePresentation,
    target: &FiniteAbelianGroup,
) -> Result<Option<HomWitness>> {
    src.validate()?;
    if target.order() > BRUTE_FORCE_ORDER_BOUND {
        return Err(Error::SearchTooLarge(format!(
            "target order {} exceeds {BRUTE_FORCE_ORDER_BOUND}",
            target.order()
        )));
    }
    let torsion = src.torsion_orders();
    if torsion.len() > TORSION_GENERATOR_BOUND {
        return Err(Error::SearchTooLarge(format!(
            "{} torsion generators exceed {TORSION_GENERATOR_BOUND}",
            torsion.len()
        )));
    }
    let free_count = src.free_generator_count();

    let candidates: Vec<Vec<GroupElement>> =
        torsion.iter().map(|&m| target.elements_of_order(m)).collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }

    // When there are at least rank(A) free generators, mapping them to the
    // standard basis already makes the images generate, and the relation
    // never constrains them; fixing that choice loses no solutions.
    let fixed_free: Option<Vec<GroupElement>> = if free_count >= target.rank() {
        let mut v = Vec::with_capacity(free_count);
        for i in 0..free_count {
            let mut e = target.identity();
            if i < target.rank() {
                e.coords[i] = 1;
            }
            v.push(e);
        }
        Some(v)
    } else {
        None
    };

    let zero_sum = src.has_zero_sum_relation();
    let mut images: Vec<GroupElement> = Vec::with_capacity(torsion.len());
    let found = search_torsion(
        target,
        &torsion,
        &candidates,
        zero_sum,
        free_count,
        fixed_free.as_deref(),
        &mut images,
        &target.identity(),
    );
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn search_torsion(
    target: &FiniteAbelianGroup,
    torsion: &[Int],
    candidates: &[Vec<GroupElement>],
    zero_sum: bool,
    free_count: usize,
    fixed_free: Option<&[GroupElement]>,
    images: &mut Vec<GroupElement>,
    running_sum: &GroupElement,
) -> Option<HomWitness> {
    let i = images.len();
    if zero_sum && !torsion.is_empty() && i == torsion.len() - 1 {
        // the last cone image is −(sum of the others)
        let last = target.neg(running_sum);
        if target.element_order(&last).expect("own element") != torsion[i] {
            return None;
        }
        images.push(last);
        let out = finish_with_free(target, torsion, free_count, fixed_free, images);
        images.pop();
        return out;
    }
    if i == torsion.len() {
        if zero_sum && *running_sum != target.identity() {
            return None;
        }
        return finish_with_free(target, torsion, free_count, fixed_free, images);
    }
    for c in &candidates[i] {
        let sum = target.add(running_sum, c);
        images.push(c.clone());
        let out =
            search_torsion(target, torsion, candidates, zero_sum, free_count, fixed_free, images, &sum);
        images.pop();
        if out.is_some() {
            return out;
        }
    }
    None
}

fn finish_with_free(
    target: &FiniteAbelianGroup,
    _torsion: &[Int],
    free_count: usize,
    fixed_free: Option<&[GroupElement]>,
    torsion_images: &[GroupElement],
) -> Option<HomWitness> {
    if let Some(free) = fixed_free {
        let mut all = torsion_images.to_vec();
        all.extend_from_slice(free);
        debug_assert!(target.generates(&all));
        return Some(HomWitness { images: all });
    }
    // fewer free generators than rank(A): try every assignment
    let elements = target.elements();
    let mut free_images: Vec<GroupElement> = Vec::with_capacity(free_count);
    fn rec(
        target: &FiniteAbelianGroup,
        elements: &[GroupElement],
        free_count: usize,
        torsion_images: &[GroupElement],
        free_images: &mut Vec<GroupElement>,
    ) -> Option<HomWitness> {
        if free_images.len() == free_count {
            let mut all = torsion_images.to_vec();
            all.extend_from_slice(free_images);
            if target.generates(&all) {
                return Some(HomWitness { images: all });
            }
            return None;
        }
        for e in elements {
            free_images.push(e.clone());
            let out = rec(target, elements, free_count, torsion_images, free_images);
            free_images.pop();
            if out.is_some() {
                return out;
            }
        }
        None
    }
    rec(target, &elements, free_count, torsion_images, &mut free_images)
}

/// Re-checks everything a witness promises: image count, exact torsion
/// orders, the zero-sum relation where it applies, and surjectivity.
pub fn validate_witness(
    src: &SourcePresentation,
    target: &FiniteAbelianGroup,
    w: &HomWitness,
) -> Result<()> {
    let torsion = src.torsion_orders();
    let expected = torsion.len() + src.free_generator_count();
    if w.images.len() != expected {
        return Err(Error::InvalidInput(format!(
            "witness has {} images, expected {expected}",
            w.images.len()
        )));
    }
    for (img, &m) in w.images.iter().zip(&torsion) {
        if target.element_order(img)? != m {
            return Err(Error::InvalidInput(format!("torsion image order is not {m}")));
        }
    }
    if src.has_zero_sum_relation() {
        let mut sum = target.identity();
        for img in &w.images[..torsion.len()] {
            sum = target.add(&sum, img);
        }
        if sum != target.identity() {
            return Err(Error::InvalidInput("cone images do not sum to the identity".into()));
        }
    }
    if !target.generates(&w.images) {
        return Err(Error::InvalidInput("images do not generate the target".into()));
    }
    Ok(())
}

/// Genus of the handlebody on which `A` acts with quotient graph of class
/// `c`: `g = 1 − χ(c)·|A|`, provided an FIS from π₁ of the class onto `A`
/// exists and the genus is an integer exceeding 1.
pub fn realize_handlebody(c: &OrbClass, target: &FiniteAbelianGroup) -> Result<Option<Int>> {
    c.validate()?;
    let g_rat = crate::Rat::new(1, 1) - c.euler_char() * crate::Rat::new(target.order(), 1);
    if !g_rat.is_integer() {
        return Ok(None);
    }
    let g = g_rat.to_integer();
    if g <= 1 {
        return Ok(None);
    }
    let src = c.fundamental_group();
    let exists = if target.is_cyclic() {
        fis_to_cyclic_exists(&src, target.order())?
    } else {
        fis_exists_bruteforce(&src, target)?.is_some()
    };
    Ok(exists.then_some(g))
}

/// Whether the image multiset can be partitioned into pairs `(v, −v)`
/// (a self-inverse element pairs with an equal copy).
pub fn pairing_criterion(
    grp: &FiniteAbelianGroup,
    images: &[GroupElement],
    orders: &[Int],
) -> Result<bool> {
    if images.len() != orders.len() {
        return Err(Error::InvalidInput(format!(
            "{} images but {} orders",
            images.len(),
            orders.len()
        )));
    }
    let mut counts: BTreeMap<&GroupElement, Int> = BTreeMap::new();
    for (img, &m) in images.iter().zip(orders) {
        if grp.element_order(img)? != m {
            return Err(Error::InvalidInput(format!("image order is not the stated {m}")));
        }
        *counts.entry(img).or_insert(0) += 1;
    }
    if images.len() % 2 != 0 {
        return Ok(false);
    }
    for (&v, &c) in &counts {
        let w = grp.neg(v);
        if w == *v {
            if c % 2 != 0 {
                return Ok(false);
            }
        } else if counts.get(&w).copied().unwrap_or(0) != c {
            return Ok(false);
        }
    }
    Ok(true)
}
