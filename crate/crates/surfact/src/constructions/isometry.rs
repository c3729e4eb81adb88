//! Points of `S³ ⊂ C²` with rational-turn coordinates, and the
//! coordinatewise isometries `z_i ↦ e^{2πiu_i}·(z_i or z̄_i)`.

use num_traits::{One, Zero};

use super::turn::RationalTurn;
use crate::numtheory::lcm;
use crate::{Int, Rat};

/// A point `(z_1, z_2)` with `|z_1|² = r1_sq`, `|z_2|² = 1 − r1_sq` and
/// rational-turn arguments; the argument of a zero coordinate is
/// normalized to 0 so equality is exact point equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S3Point {
    pub r1_sq: Rat,
    pub theta1: RationalTurn,
    pub theta2: RationalTurn,
}

impl S3Point {
    pub fn new(r1_sq: Rat, theta1: RationalTurn, theta2: RationalTurn) -> Self {
        assert!(r1_sq >= Rat::zero() && r1_sq <= Rat::one(), "|z1|² must lie in [0,1]");
        let theta1 = if r1_sq.is_zero() { RationalTurn::zero() } else { theta1 };
        let theta2 = if r1_sq == Rat::one() { RationalTurn::zero() } else { theta2 };
        S3Point { r1_sq, theta1, theta2 }
    }

    /// On the first coordinate circle `(e^{2πiθ}, 0)`.
    pub fn on_first_circle(theta1: RationalTurn) -> Self {
        Self::new(Rat::one(), theta1, RationalTurn::zero())
    }

    /// On the second coordinate circle `(0, e^{2πiθ})`.
    pub fn on_second_circle(theta2: RationalTurn) -> Self {
        Self::new(Rat::zero(), RationalTurn::zero(), theta2)
    }

    /// The antipode `−p` (both coordinates negated).
    pub fn antipode(&self) -> Self {
        let half = RationalTurn::new(1, 2);
        Self::new(self.r1_sq, self.theta1 + half, self.theta2 + half)
    }
}

/// `z_1 ↦ e^{2πi·turn1}·(z̄_1 if conj1 else z_1)`, same for the second
/// coordinate. Every isometry appearing in the model constructions has
/// this coordinatewise form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct S3Isometry {
    pub turn1: RationalTurn,
    pub conj1: bool,
    pub turn2: RationalTurn,
    pub conj2: bool,
}

impl S3Isometry {
    pub fn identity() -> Self {
        S3Isometry {
            turn1: RationalTurn::zero(),
            conj1: false,
            turn2: RationalTurn::zero(),
            conj2: false,
        }
    }

    pub fn rotation(turn1: RationalTurn, turn2: RationalTurn) -> Self {
        S3Isometry { turn1, conj1: false, turn2, conj2: false }
    }

    /// `self ∘ other` (apply `other` first). Per coordinate:
    /// turn `u + (c ? −u′ : u′)`, conjugation flag `c ⊕ c′`.
    pub fn compose(&self, other: &S3Isometry) -> S3Isometry {
        let coord = |u: RationalTurn, c: bool, up: RationalTurn, cp: bool| {
            (if c { u - up } else { u + up }, c ^ cp)
        };
        let (turn1, conj1) = coord(self.turn1, self.conj1, other.turn1, other.conj1);
        let (turn2, conj2) = coord(self.turn2, self.conj2, other.turn2, other.conj2);
        S3Isometry { turn1, conj1, turn2, conj2 }
    }

    pub fn apply(&self, p: &S3Point) -> S3Point {
        let t1 = self.turn1 + if self.conj1 { -p.theta1 } else { p.theta1 };
        let t2 = self.turn2 + if self.conj2 { -p.theta2 } else { p.theta2 };
        S3Point::new(p.r1_sq, t1, t2)
    }

    /// Exact order: for a pure rotation the lcm of the two turn orders;
    /// otherwise the square is a pure rotation and the order doubles
    /// (odd powers keep a conjugation flag, so they are never trivial).
    pub fn order(&self) -> Int {
        if !self.conj1 && !self.conj2 {
            lcm(self.turn1.order(), self.turn2.order())
        } else {
            2 * self.compose(self).order()
        }
    }

    /// `+1` if orientation-preserving on `S³`; each coordinate
    /// conjugation is a reflection of one real plane.
    pub fn orientation_sign(&self) -> Int {
        if self.conj1 ^ self.conj2 {
            -1
        } else {
            1
        }
    }
}
