//! Exact character theory for small finite groups.
//!
//! Groups are fully enumerated permutation groups. Character tables are
//! computed with Dixon's modular method and lifted to exact cyclotomic
//! integers, so every statistic built on top of them (average character
//! degrees restricted by field of values and degree divisibility) is an
//! exact rational number.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: permutations, enumerated groups, conjugacy classes and
//!   normal-structure queries.
//! * [`constructions`]: named groups, semidirect products and the audit
//!   catalog, plus the textual group-spec grammar.
//! * [`chartab`]: class multiplication coefficients, the modular table and
//!   the exact lift.
//! * [`fieldvals`]: field-of-values membership and the `A^k(G)` subgroup.
//! * [`stats`]: average-degree statistics and closed-form bounds.
//! * [`audit`]: theorem audits over a catalog, producing JSON-lines rows.

pub mod arith;
pub mod audit;
pub mod chartab;
pub mod constructions;
pub mod cyclotomic;
mod error;
pub mod fieldvals;
pub mod gf;
pub mod group;
pub mod modular;
pub mod rational;
pub mod stats;

pub use chartab::{character_table, CharacterTable};
pub use constructions::{build, GroupSpec};
pub use cyclotomic::CyclotomicValue;
pub use error::{Error, Result};
pub use fieldvals::FieldSpec;
pub use group::{ClassData, FiniteGroup, Perm, SubgroupHandle};
pub use rational::Rational;
pub use stats::AcdQuery;
