//! Braided bicrossed products of matched pairs of finite groups, with exact
//! verification over cyclotomic integers.

pub mod algebra;
pub mod matched_pair;
pub mod report;
pub mod cocycles;
pub mod hopf;
pub mod braiding;
pub mod bicrossed;
pub mod cohomology;
pub mod realization;
pub mod examples;
