#![allow(clippy::needless_range_loop)]

pub mod linalg;
pub mod diagram;
pub mod invariants;
pub mod ops;
pub mod catalog;
pub mod format;
pub mod cli;
