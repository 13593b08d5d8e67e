//! Exact certification of strong uniqueness polynomials over `Q(i)`.

pub mod arith;
pub mod par;
pub mod parser;
pub mod poly;
pub mod critical;
pub mod certify;
pub mod family;
pub mod lemmas;
pub mod report;
