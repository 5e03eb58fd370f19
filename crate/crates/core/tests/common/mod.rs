//! Test oracles that share no code with the library's own algorithms.
#![allow(dead_code)]

pub mod oracle_diagrams;
pub mod oracle_series;
