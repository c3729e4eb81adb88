//! Closed forms and integer optimisation for every maximum-order quantity:
//! the orientation-preserving classics, the orientation-reversing variants,
//! the five extendable types, and the handlebody maxima with witnesses.

use serde::{Deserialize, Serialize};

use crate::numtheory::{divisors, gcd};
use crate::{check_genus, Error, Int, Result};

/// The five orientation types of an extendable action, recording whether the
/// group preserves the orientations of the surface and of the 3-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtType {
    /// (+,+): preserves both orientations.
    PP,
    /// (+,−): preserves the surface orientation, some element reverses S³.
    PM,
    /// (−,+): preserves S³, some element reverses the surface.
    MP,
    /// (−,−): every element preserves both orientations or reverses both.
    MM,
    /// (Mix): both a (surface +, S³ −) and a (surface −, S³ +) element exist.
    Mix,
}

impl ExtType {
    pub const ALL: [ExtType; 5] = [ExtType::PP, ExtType::PM, ExtType::MP, ExtType::MM, ExtType::Mix];

    pub fn label(self) -> &'static str {
        match self {
            ExtType::PP => "(+,+)",
            ExtType::PM => "(+,-)",
            ExtType::MP => "(-,+)",
            ExtType::MM => "(-,-)",
            ExtType::Mix => "(Mix)",
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            ExtType::PP => "pp",
            ExtType::PM => "pm",
            ExtType::MP => "mp",
            ExtType::MM => "mm",
            ExtType::Mix => "mix",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Cyclic,
    Abelian,
}

/// Every maximum-order quantity the crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// C_g: orientation-preserving cyclic on Σ_g.
    C,
    /// A_g: orientation-preserving abelian on Σ_g.
    A,
    /// CH_g: orientation-preserving cyclic on V_g.
    Ch,
    /// AH_g: orientation-preserving abelian on V_g.
    Ah,
    /// CE_g: extendable cyclic preserving both orientations.
    Ce,
    /// AE_g: extendable abelian preserving both orientations.
    Ae,
    /// C_g⁻: cyclic on Σ_g with an orientation-reversing element.
    CMinusSurface,
    /// Maximum cyclic on Σ_g, orientation-reversing allowed.
    CyclicSurfaceFull,
    /// CH_g⁻: cyclic on V_g with an orientation-reversing element.
    ChMinus,
    /// AH_g⁻: abelian on V_g with an orientation-reversing element.
    AhMinus,
    /// A_g⁻: abelian on Σ_g with an orientation-reversing element.
    AMinusSurface,
    /// Maximum cyclic on V_g, orientation-reversing allowed.
    CyclicHandlebodyFull,
    /// Maximum abelian on V_g, orientation-reversing allowed.
    AbelianHandlebodyFull,
    /// CE_g(T): extendable cyclic of a given type.
    CeType(ExtType),
    /// AE_g(T): extendable abelian of a given type.
    AeType(ExtType),
}

impl Quantity {
    pub fn all() -> Vec<Quantity> {
        let mut v = vec![
            Quantity::C,
            Quantity::A,
            Quantity::Ch,
            Quantity::Ah,
            Quantity::Ce,
            Quantity::Ae,
            Quantity::CMinusSurface,
            Quantity::CyclicSurfaceFull,
            Quantity::ChMinus,
            Quantity::AhMinus,
            Quantity::AMinusSurface,
            Quantity::CyclicHandlebodyFull,
            Quantity::AbelianHandlebodyFull,
        ];
        v.extend(ExtType::ALL.iter().map(|&t| Quantity::CeType(t)));
        v.extend(ExtType::ALL.iter().map(|&t| Quantity::AeType(t)));
        v
    }

    /// Stable machine-readable name used in JSON/CSV output and CLI flags.
    pub fn key(self) -> String {
        match self {
            Quantity::C => "c".into(),
            Quantity::A => "a".into(),
            Quantity::Ch => "ch".into(),
            Quantity::Ah => "ah".into(),
            Quantity::Ce => "ce".into(),
            Quantity::Ae => "ae".into(),
            Quantity::CMinusSurface => "c-minus".into(),
            Quantity::CyclicSurfaceFull => "cyclic-full".into(),
            Quantity::ChMinus => "ch-minus".into(),
            Quantity::AhMinus => "ah-minus".into(),
            Quantity::AMinusSurface => "a-minus".into(),
            Quantity::CyclicHandlebodyFull => "full-cyclic-handlebody".into(),
            Quantity::AbelianHandlebodyFull => "full-abelian-handlebody".into(),
            Quantity::CeType(t) => format!("ce-{}", t.key()),
            Quantity::AeType(t) => format!("ae-{}", t.key()),
        }
    }

    /// Human-readable label for table output.
    pub fn label(self) -> String {
        match self {
            Quantity::C => "C".into(),
            Quantity::A => "A".into(),
            Quantity::Ch => "CH".into(),
            Quantity::Ah => "AH".into(),
            Quantity::Ce => "CE".into(),
            Quantity::Ae => "AE".into(),
            Quantity::CMinusSurface => "C^-".into(),
            Quantity::CyclicSurfaceFull => "C_full".into(),
            Quantity::ChMinus => "CH^-".into(),
            Quantity::AhMinus => "AH^-".into(),
            Quantity::AMinusSurface => "A^-".into(),
            Quantity::CyclicHandlebodyFull => "CH_full".into(),
            Quantity::AbelianHandlebodyFull => "AH_full".into(),
            Quantity::CeType(t) => format!("CE{}", t.label()),
            Quantity::AeType(t) => format!("AE{}", t.label()),
        }
    }

    pub fn parse(name: &str) -> Option<Quantity> {
        let name = name.to_ascii_lowercase();
        Quantity::all().into_iter().find(|q| q.key() == name)
    }
}

/// Optimal pair certifying a handlebody maximum of `CH_g⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChMinusWitness {
    /// Odd `m`, `n` with `g = [m,n] − (m+n)/(m,n) + 1`; the action has order `2[m,n]`.
    EvenPair { m: Int, n: Int },
    /// Odd `k`, `n` with `g = kn − k + 1`; the action has order `2kn`.
    OddPair { k: Int, n: Int },
}

impl ChMinusWitness {
    /// The genus equation the pair certifies, re-evaluated from scratch.
    pub fn genus(&self) -> Int {
        match *self {
            ChMinusWitness::EvenPair { m, n } => {
                let d = gcd(m, n);
                (m / d) * n - (m + n) / d + 1
            }
            ChMinusWitness::OddPair { k, n } => k * n - k + 1,
        }
    }

    pub fn order(&self) -> Int {
        match *self {
            ChMinusWitness::EvenPair { m, n } => 2 * (m / gcd(m, n)) * n,
            ChMinusWitness::OddPair { k, n } => 2 * k * n,
        }
    }

    pub fn display(&self) -> String {
        match *self {
            ChMinusWitness::EvenPair { m, n } => format!("({m},{n})"),
            ChMinusWitness::OddPair { k, n } => format!("(k={k},n={n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxOrderResult {
    pub quantity: Quantity,
    pub genus: Int,
    /// `None` when the quantity does not exist at this genus (Table "---" entries).
    pub value: Option<Int>,
    pub witnesses: Vec<ChMinusWitness>,
}

/// Maximum orders in the orientation-preserving case plus the
/// orientation-reversing surface rows, as closed forms.
pub fn classical_order(q: Quantity, g: Int) -> Result<Int> {
    check_genus(g)?;
    let even = g % 2 == 0;
    match q {
        Quantity::C => Ok(4 * g + 2),
        Quantity::A => Ok(4 * g + 4),
        Quantity::Ch => Ok(if even { 2 * g + 2 } else { 2 * g }),
        Quantity::Ah => Ok(if g == 5 { 16 } else { 2 * g + 2 }),
        Quantity::Ce => Ok(if even { 2 * g + 2 } else { 2 * g - 2 }),
        Quantity::Ae => Ok(2 * g + 2),
        Quantity::CMinusSurface => Ok(if even { 4 * g + 4 } else { 4 * g - 4 }),
        Quantity::CyclicSurfaceFull => Ok(if even { 4 * g + 4 } else { 4 * g + 2 }),
        _ => Err(Error::InvalidInput(format!(
            "{} is not one of the closed-form classical quantities",
            q.key()
        ))),
    }
}

/// Maximum order of a type-`t` extendable action; `None` when no such
/// action exists.
pub fn extendable_type_max(kind: Kind, t: ExtType, g: Int) -> Result<Option<Int>> {
    check_genus(g)?;
    let even = g % 2 == 0;
    let v = match (kind, t) {
        (Kind::Cyclic, ExtType::PP) => Some(classical_order(Quantity::Ce, g)?),
        (Kind::Cyclic, ExtType::PM) => Some(2 * g + 2),
        (Kind::Cyclic, ExtType::MP) => Some(if even { 4 * g + 4 } else { 4 * g - 4 }),
        (Kind::Cyclic, ExtType::MM) => Some(if even { 2 * g + 2 } else { 2 * g }),
        (Kind::Cyclic, ExtType::Mix) => None,
        (Kind::Abelian, ExtType::PP) => Some(classical_order(Quantity::Ae, g)?),
        (Kind::Abelian, ExtType::PM) => Some(4 * g + 4),
        (Kind::Abelian, ExtType::MP) => Some(4 * g + 4),
        (Kind::Abelian, ExtType::MM) => Some(4 * g + 4),
        (Kind::Abelian, ExtType::Mix) => {
            if even {
                Some(2 * g + 4)
            } else {
                None
            }
        }
    };
    Ok(v)
}

/// Maximum order of an extendable cyclic/abelian action over all five types.
pub fn extendable_max(kind: Kind, g: Int) -> Result<Int> {
    check_genus(g)?;
    Ok(match kind {
        Kind::Cyclic => {
            if g % 2 == 0 {
                4 * g + 4
            } else {
                4 * g - 4
            }
        }
        Kind::Abelian => 4 * g + 4,
    })
}

/// `CH_g⁻` with all optimal witness pairs.
///
/// Even `g`: maximise `2[m,n]` over odd `m`, `n` with
/// `g = [m,n] − (m+n)/(m,n) + 1`, enumerated through `m = d·m'`, `n = d·n'`
/// with `gcd(m',n') = 1`, where the constraint becomes
/// `d·m'n' = g − 1 + m' + n'`.
/// Odd `g`: maximise `2kn` over odd `k`, `n` with `g = kn − k + 1`, so `k`
/// runs over the odd divisors of `g − 1`.
pub fn ch_minus(g: Int) -> Result<(Int, Vec<ChMinusWitness>)> {
    check_genus(g)?;
    let mut best: Int = 0;
    let mut witnesses: Vec<ChMinusWitness> = Vec::new();
    if g % 2 == 0 {
        let mut mp = 1;
        while mp <= g + 1 {
            // d ≥ 1 forces (m'−1)(n'−1) ≤ g
            let np_max = if mp == 1 { g + 1 } else { g / (mp - 1) + 1 };
            let mut np = mp;
            while np <= np_max {
                if gcd(mp, np) == 1 {
                    let t = g - 1 + mp + np;
                    if t % (mp * np) == 0 {
                        let d = t / (mp * np);
                        if d % 2 == 1 {
                            let value = 2 * d * mp * np;
                            let (m, n) = (d * mp, d * np);
                            if value > best {
                                best = value;
                                witnesses.clear();
                            }
                            if value == best {
                                witnesses.push(ChMinusWitness::EvenPair { m, n });
                                if m != n {
                                    witnesses.push(ChMinusWitness::EvenPair { m: n, n: m });
                                }
                            }
                        }
                    }
                }
                np += 2;
            }
            mp += 2;
        }
    } else {
        for k in divisors(g - 1) {
            if k % 2 == 1 {
                let n = (g - 1) / k + 1;
                if n % 2 == 1 {
                    let value = 2 * k * n;
                    if value > best {
                        best = value;
                        witnesses.clear();
                    }
                    if value == best {
                        witnesses.push(ChMinusWitness::OddPair { k, n });
                    }
                }
            }
        }
    }
    if best == 0 {
        // (g+1, g+1) for even g and (1, g) for odd g are always feasible
        return Err(Error::Infeasible(g));
    }
    witnesses.sort();
    witnesses.dedup();
    Ok((best, witnesses))
}

/// `AH_g⁻ = 4g+4` except `AH_5⁻ = 32`.
pub fn ah_minus(g: Int) -> Result<Int> {
    check_genus(g)?;
    Ok(if g == 5 { 32 } else { 4 * g + 4 })
}

/// `A_g⁻`, tabulated; coincides with `AH_g⁻`.
pub fn a_minus_surface(g: Int) -> Result<Int> {
    check_genus(g)?;
    Ok(if g == 5 { 32 } else { 4 * g + 4 })
}

/// Maximum order of a cyclic/abelian action on `V_g`, orientation-reversing
/// elements allowed.
pub fn full_handlebody_max(kind: Kind, g: Int) -> Result<Int> {
    check_genus(g)?;
    match kind {
        Kind::Cyclic => ch_minus(g).map(|(v, _)| v),
        Kind::Abelian => Ok(if g == 5 { 32 } else { 4 * g + 4 }),
    }
}

/// Evaluates each of the known identities between quantities at `g`.
pub fn consistency_check(g: Int) -> Result<Vec<(&'static str, bool)>> {
    check_genus(g)?;
    let ce = |t| extendable_type_max(Kind::Cyclic, t, g).map(|v| v.expect("cyclic non-Mix exists"));
    let ae = |t| extendable_type_max(Kind::Abelian, t, g).map(|v| v.expect("abelian non-Mix exists"));
    let two_ae = 2 * classical_order(Quantity::Ae, g)?;
    let checks = vec![
        ("AH^- = 2*AH", ah_minus(g)? == 2 * classical_order(Quantity::Ah, g)?),
        ("A^- = AH^-", a_minus_surface(g)? == ah_minus(g)?),
        ("CE(-,+) = C^-", ce(ExtType::MP)? == classical_order(Quantity::CMinusSurface, g)?),
        ("CE(+,-) = 2g+2", ce(ExtType::PM)? == 2 * g + 2),
        (
            "CE(-,-) = 2g+1+(-1)^g",
            ce(ExtType::MM)? == 2 * g + 1 + if g % 2 == 0 { 1 } else { -1 },
        ),
        ("AE(+,-) = 2*AE", ae(ExtType::PM)? == two_ae),
        ("AE(-,+) = 2*AE", ae(ExtType::MP)? == two_ae),
        ("AE(-,-) = 2*AE", ae(ExtType::MM)? == two_ae),
    ];
    Ok(checks)
}

/// Computes any quantity at genus `g`, with witnesses where they exist.
pub fn evaluate(q: Quantity, g: Int) -> Result<MaxOrderResult> {
    check_genus(g)?;
    let (value, witnesses) = match q {
        Quantity::C
        | Quantity::A
        | Quantity::Ch
        | Quantity::Ah
        | Quantity::Ce
        | Quantity::Ae
        | Quantity::CMinusSurface
        | Quantity::CyclicSurfaceFull => (Some(classical_order(q, g)?), Vec::new()),
        Quantity::ChMinus | Quantity::CyclicHandlebodyFull => {
            let (v, w) = ch_minus(g)?;
            (Some(v), w)
        }
        Quantity::AhMinus => (Some(ah_minus(g)?), Vec::new()),
        Quantity::AMinusSurface => (Some(a_minus_surface(g)?), Vec::new()),
        Quantity::AbelianHandlebodyFull => (Some(full_handlebody_max(Kind::Abelian, g)?), Vec::new()),
        Quantity::CeType(t) => (extendable_type_max(Kind::Cyclic, t, g)?, Vec::new()),
        Quantity::AeType(t) => (extendable_type_max(Kind::Abelian, t, g)?, Vec::new()),
    };
    Ok(MaxOrderResult { quantity: q, genus: g, value, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_table() {
        assert_eq!(classical_order(Quantity::C, 2).unwrap(), 10);
        assert_eq!(classical_order(Quantity::Ah, 5).unwrap(), 16);
        assert_eq!(classical_order(Quantity::Ce, 3).unwrap(), 4);
        assert_eq!(classical_order(Quantity::Ch, 4).unwrap(), 10);
        assert_eq!(classical_order(Quantity::Ch, 7).unwrap(), 14);
        assert_eq!(classical_order(Quantity::CMinusSurface, 3).unwrap(), 8);
        assert_eq!(classical_order(Quantity::CyclicSurfaceFull, 3).unwrap(), 14);
        assert!(matches!(classical_order(Quantity::C, 1), Err(Error::InvalidGenus(1))));
    }

    #[test]
    fn type_table() {
        assert_eq!(extendable_type_max(Kind::Cyclic, ExtType::MP, 2).unwrap(), Some(12));
        assert_eq!(extendable_type_max(Kind::Cyclic, ExtType::Mix, 4).unwrap(), None);
        assert_eq!(extendable_type_max(Kind::Abelian, ExtType::Mix, 4).unwrap(), Some(12));
        assert_eq!(extendable_type_max(Kind::Abelian, ExtType::Mix, 5).unwrap(), None);
        assert_eq!(extendable_type_max(Kind::Cyclic, ExtType::MM, 3).unwrap(), Some(6));
    }

    #[test]
    fn extendable_max_examples() {
        assert_eq!(extendable_max(Kind::Cyclic, 2).unwrap(), 12);
        assert_eq!(extendable_max(Kind::Cyclic, 3).unwrap(), 8);
        assert_eq!(extendable_max(Kind::Abelian, 7).unwrap(), 32);
    }

    #[test]
    fn extendable_max_is_max_over_types() {
        for g in 2..=500 {
            for kind in [Kind::Cyclic, Kind::Abelian] {
                let best = ExtType::ALL
                    .iter()
                    .filter_map(|&t| extendable_type_max(kind, t, g).unwrap())
                    .max()
                    .unwrap();
                assert_eq!(best, extendable_max(kind, g).unwrap(), "g = {g}");
            }
        }
    }

    #[test]
    fn ch_minus_examples() {
        let (v, w) = ch_minus(2).unwrap();
        assert_eq!(v, 6);
        assert_eq!(w, vec![ChMinusWitness::EvenPair { m: 3, n: 3 }]);

        let (v, w) = ch_minus(6).unwrap();
        assert_eq!(v, 18);
        assert_eq!(
            w,
            vec![
                ChMinusWitness::EvenPair { m: 3, n: 9 },
                ChMinusWitness::EvenPair { m: 9, n: 3 },
            ]
        );

        let (v, w) = ch_minus(7).unwrap();
        assert_eq!(v, 18);
        assert_eq!(w, vec![ChMinusWitness::OddPair { k: 3, n: 3 }]);

        let (v, w) = ch_minus(9).unwrap();
        assert_eq!(v, 18);
        assert_eq!(w, vec![ChMinusWitness::OddPair { k: 1, n: 9 }]);

        let (v, w) = ch_minus(4).unwrap();
        assert_eq!(v, 10);
        assert_eq!(w, vec![ChMinusWitness::EvenPair { m: 5, n: 5 }]);
    }

    #[test]
    fn ch_minus_witnesses_satisfy_their_equations() {
        for g in 2..=300 {
            let (v, w) = ch_minus(g).unwrap();
            assert!(!w.is_empty());
            for wit in &w {
                assert_eq!(wit.genus(), g);
                assert_eq!(wit.order(), v);
                match *wit {
                    ChMinusWitness::EvenPair { m, n } => {
                        assert_eq!(g % 2, 0);
                        assert_eq!(m % 2, 1);
                        assert_eq!(n % 2, 1);
                    }
                    ChMinusWitness::OddPair { k, n } => {
                        assert_eq!(g % 2, 1);
                        assert_eq!(k % 2, 1);
                        assert_eq!(n % 2, 1);
                    }
                }
            }
            // lower bounds from the always-feasible pairs
            if g % 2 == 0 {
                assert!(v >= 2 * g + 2);
            } else {
                assert!(v >= 2 * g);
            }
        }
    }

    #[test]
    fn ah_minus_examples() {
        assert_eq!(ah_minus(5).unwrap(), 32);
        assert_eq!(ah_minus(2).unwrap(), 12);
        for g in 2..=100 {
            assert_eq!(ah_minus(g).unwrap(), 2 * classical_order(Quantity::Ah, g).unwrap());
        }
    }

    #[test]
    fn full_handlebody_examples() {
        assert_eq!(full_handlebody_max(Kind::Cyclic, 7).unwrap(), 18);
        assert_eq!(full_handlebody_max(Kind::Abelian, 5).unwrap(), 32);
        assert_eq!(full_handlebody_max(Kind::Cyclic, 2).unwrap(), 6);
        for g in 2..=200 {
            assert!(
                full_handlebody_max(Kind::Cyclic, g).unwrap()
                    >= classical_order(Quantity::Ch, g).unwrap()
            );
        }
    }

    #[test]
    fn consistency_small_genera() {
        for g in [2, 3, 5] {
            let checks = consistency_check(g).unwrap();
            assert!(checks.iter().all(|&(_, ok)| ok), "g = {g}: {checks:?}");
        }
    }

    #[test]
    fn quantity_keys_roundtrip() {
        for q in Quantity::all() {
            assert_eq!(Quantity::parse(&q.key()), Some(q));
        }
        assert_eq!(Quantity::parse("AH"), Some(Quantity::Ah));
        assert_eq!(Quantity::parse("nonsense"), None);
    }
}
