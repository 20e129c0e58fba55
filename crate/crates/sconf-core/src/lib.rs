//! Exact-arithmetic toolkit for twisting supercharges of superconformal algebras.

pub mod exactlinalg;
pub mod par;
pub mod superlie;
pub mod sample;
pub mod twist;
pub mod centralizer;
pub mod realform;
pub mod report;
