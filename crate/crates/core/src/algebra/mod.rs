//! Free graded-commutative algebras over Q with differentials.

mod cdga;
mod elimination;
mod generator;
pub mod json;
mod monomial;
mod morphism;
mod poly;

pub use cdga::{Cdga, CheckReport};
pub use elimination::{eliminate_pair, eliminate_pairs};
pub use generator::Generator;
pub use monomial::Monomial;
pub use morphism::Morphism;
pub use poly::Polynomial;
