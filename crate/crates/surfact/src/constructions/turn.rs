//! Angles as exact fractions of a full revolution, reduced modulo 1.

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::{Int, Rat};

/// The angle `2π·p/q`, stored as `p/q ∈ [0,1)` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalTurn(Rat);

impl RationalTurn {
    pub fn new(num: Int, den: Int) -> Self {
        assert!(den != 0, "turn denominator must be nonzero");
        RationalTurn(Rat::new(num, den)).normalize()
    }

    pub fn zero() -> Self {
        RationalTurn(Rat::zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        RationalTurn(r).normalize()
    }

    fn normalize(self) -> Self {
        let one = Rat::new(1, 1);
        let mut r = self.0;
        // Ratio::floor handles negatives; subtracting it lands in [0,1)
        r -= r.floor();
        debug_assert!(r >= Rat::zero() && r < one);
        RationalTurn(r)
    }

    pub fn as_rat(self) -> Rat {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// Least `t ≥ 1` with `t`-fold repetition equal to a full turn:
    /// the reduced denominator.
    pub fn order(self) -> Int {
        *self.0.denom()
    }
}

impl Add for RationalTurn {
    type Output = RationalTurn;
    fn add(self, rhs: RationalTurn) -> RationalTurn {
        RationalTurn(self.0 + rhs.0).normalize()
    }
}

impl Sub for RationalTurn {
    type Output = RationalTurn;
    fn sub(self, rhs: RationalTurn) -> RationalTurn {
        RationalTurn(self.0 - rhs.0).normalize()
    }
}

impl Neg for RationalTurn {
    type Output = RationalTurn;
    fn neg(self) -> RationalTurn {
        RationalTurn(-self.0).normalize()
    }
}
