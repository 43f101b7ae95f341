//! Gröbner bases for the defining ideal of multi-Rees algebras over the
//! integers and over `Z/NZ`.

pub mod cli;
pub mod coeff;
pub mod division;
pub mod groebner;
pub mod order;
pub mod poly;
pub mod rees;
pub mod verify;
