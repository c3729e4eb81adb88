//! Exact integer arithmetic, divisor and partition enumeration, and finite
//! abelian groups in invariant-factor form.

use std::collections::{BTreeMap, HashSet};

use num_integer::Integer;

use crate::{Error, Int, Result};

pub fn gcd(a: Int, b: Int) -> Int {
    a.gcd(&b)
}

pub fn lcm(a: Int, b: Int) -> Int {
    a.lcm(&b)
}

/// Lowest common multiple of a nonempty list of positive integers.
pub fn lcm_list(ms: &[Int]) -> Result<Int> {
    if ms.is_empty() {
        return Err(Error::InvalidInput("lcm of an empty list".into()));
    }
    if let Some(&m) = ms.iter().find(|&&m| m < 1) {
        return Err(Error::InvalidInput(format!("lcm entry {m} is not positive")));
    }
    Ok(ms.iter().fold(1, |acc, &m| acc.lcm(&m)))
}

/// All divisors of `n ≥ 1`, ascending.
pub fn divisors(n: Int) -> Vec<Int> {
    assert!(n >= 1, "divisors of non-positive {n}");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorisation by trial division, `(prime, exponent)` pairs ascending.
pub fn factorize(mut n: Int) -> Vec<(Int, u32)> {
    assert!(n >= 1, "factorize of non-positive {n}");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Integer partitions of `n`, each sorted descending.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = max.min(n);
        while part >= 1 {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A finite abelian group in canonical invariant-factor form
/// `Z_{d_1} ⊕ … ⊕ Z_{d_r}` with `d_1 | d_2 | … | d_r`, each `d_i ≥ 2`.
/// The trivial group is the empty factor list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<Int>,
}

/// Element of a [`FiniteAbelianGroup`]: one residue per invariant factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub coords: Vec<Int>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: Int) -> Self {
        assert!(n >= 1, "cyclic group of non-positive order {n}");
        if n == 1 {
            Self::trivial()
        } else {
            FiniteAbelianGroup { factors: vec![n] }
        }
    }

    /// Canonicalise an arbitrary multiset of cyclic factors into invariant
    /// factors by regrouping prime powers.
    pub fn from_cyclic_factors(cyclic: &[Int]) -> Self {
        assert!(cyclic.iter().all(|&c| c >= 1));
        // prime -> exponents, one per cyclic factor, sorted descending
        let mut by_prime: BTreeMap<Int, Vec<u32>> = BTreeMap::new();
        for &c in cyclic {
            for (p, e) in factorize(c) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        for exps in by_prime.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut d: Int = 1;
            for (p, exps) in &by_prime {
                if let Some(&e) = exps.get(i) {
                    d *= p.pow(e);
                }
            }
            factors.push(d);
        }
        factors.reverse(); // ascending, d_i | d_{i+1}
        FiniteAbelianGroup { factors }
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.factors
    }

    pub fn order(&self) -> Int {
        self.factors.iter().product()
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Largest element order (the last invariant factor).
    pub fn exponent(&self) -> Int {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.factors.len()] }
    }

    pub fn validate(&self, x: &GroupElement) -> Result<()> {
        if x.coords.len() != self.factors.len() {
            return Err(Error::InvalidInput(format!(
                "element has {} coordinates, group has rank {}",
                x.coords.len(),
                self.factors.len()
            )));
        }
        for (c, d) in x.coords.iter().zip(&self.factors) {
            if *c < 0 || c >= d {
                return Err(Error::InvalidInput(format!("coordinate {c} out of range [0,{d})")));
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.factors)
            .map(|((x, y), d)| (x + y) % d)
            .collect();
        GroupElement { coords }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&self.factors)
            .map(|(x, d)| (d - x) % d)
            .collect();
        GroupElement { coords }
    }

    /// Least `t ≥ 1` with `t·x = 0`, computed as
    /// `lcm_i d_i / gcd(d_i, x_i)`.
    pub fn element_order(&self, x: &GroupElement) -> Result<Int> {
        self.validate(x)?;
        let mut t = 1;
        for (c, d) in x.coords.iter().zip(&self.factors) {
            t = lcm(t, d / gcd(*d, *c));
        }
        Ok(t)
    }

    /// All elements; only sensible for small groups.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![self.identity()];
        for (i, &d) in self.factors.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for c in 0..d {
                    let mut coords = e.coords.clone();
                    coords[i] = c;
                    next.push(GroupElement { coords });
                }
            }
            out = next;
        }
        out
    }

    /// All elements of exact order `t`, in lexicographic coordinate order.
    pub fn elements_of_order(&self, t: Int) -> Vec<GroupElement> {
        self.elements()
            .into_iter()
            .filter(|e| self.element_order(e).expect("own element") == t)
            .collect()
    }

    /// Whether the given elements generate the whole group, by iterative
    /// closure of the generated subgroup.
    pub fn generates(&self, gens: &[GroupElement]) -> bool {
        self.generated_subgroup(gens).len() as Int == self.order()
    }

    pub fn generated_subgroup(&self, gens: &[GroupElement]) -> HashSet<GroupElement> {
        let mut seen = HashSet::new();
        seen.insert(self.identity());
        let mut frontier = vec![self.identity()];
        while let Some(e) = frontier.pop() {
            for gen in gens {
                let f = self.add(&e, gen);
                if seen.insert(f.clone()) {
                    frontier.push(f);
                }
            }
        }
        seen
    }
}

/// One representative per isomorphism class of abelian groups of order `n`,
/// in canonical invariant-factor form, sorted by factor list.
pub fn abelian_groups_of_order(n: Int) -> Vec<FiniteAbelianGroup> {
    assert!(n >= 1, "group order must be positive, got {n}");
    if n == 1 {
        return vec![FiniteAbelianGroup::trivial()];
    }
    let primes = factorize(n);
    // For each prime p^a, a partition of a; regroup each combination.
    let mut combos: Vec<Vec<(Int, Vec<u32>)>> = vec![Vec::new()];
    for (p, a) in primes {
        let parts = partitions(a);
        let mut next = Vec::with_capacity(combos.len() * parts.len());
        for combo in &combos {
            for part in &parts {
                let mut c = combo.clone();
                c.push((p, part.clone()));
                next.push(c);
            }
        }
        combos = next;
    }
    let mut out: Vec<FiniteAbelianGroup> = combos
        .into_iter()
        .map(|combo| {
            let rank = combo.iter().map(|(_, part)| part.len()).max().unwrap_or(0);
            let mut factors = Vec::with_capacity(rank);
            for i in 0..rank {
                let mut d: Int = 1;
                for (p, part) in &combo {
                    if let Some(&e) = part.get(i) {
                        d *= p.pow(e);
                    }
                }
                factors.push(d);
            }
            factors.reverse();
            FiniteAbelianGroup { factors }
        })
        .collect();
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    out
}
