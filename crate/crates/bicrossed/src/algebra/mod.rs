//! Exact foundations: finite groups, finite abelian groups and characters,
//! integer Smith normal form, roots of unity and cyclotomic integers.

pub mod abelian;
pub mod cyclotomic;
pub mod group;
pub mod modp;
pub mod root;
pub mod snf;

pub use abelian::{AbelianError, AbelianGroup, Character};
pub use cyclotomic::{cyclotomic_polynomial, CycInt};
pub use group::{Group, GroupError, GroupJson};
pub use root::{Root, ScalarError};
pub use snf::{smith_normal_form, solve_mod, Smith};
