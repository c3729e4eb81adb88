//! Exact computation of the maximum orders of cyclic and abelian group
//! actions on the closed orientable surface `Σ_g` and the handlebody `V_g`,
//! including the variants that are extendable over the 3-sphere.
//!
//! The closed forms live in [`quantities`]; [`oracle`] re-derives the small
//! cases by brute force from orbifold signatures and finitely injective
//! surjections; [`constructions`] checks the explicit isometric model
//! actions (cage, wheel, fork, square) in exact rational-turn arithmetic.

pub mod constructions;
pub mod grouphom;
pub mod numtheory;
pub mod oracle;
pub mod orbifolds;
pub mod quantities;

/// All orders and genera in this crate fit comfortably in 64 bits
/// (inputs stay below ~10^7, orders below ~10^13).
pub type Int = i64;

/// Exact rational scalar used for Euler characteristics and turns.
pub type Rat = num_rational::Ratio<Int>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("genus must exceed 1 (got {0})")]
    InvalidGenus(Int),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no feasible witness pair for genus {0}")]
    Infeasible(Int),
    #[error("search space too large: {0}")]
    SearchTooLarge(String),
    #[error("group closure exceeded the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("a generator does not keep the graph pair invariant")]
    NotInvariant,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_genus(g: Int) -> Result<()> {
    if g > 1 {
        Ok(())
    } else {
        Err(Error::InvalidGenus(g))
    }
}
