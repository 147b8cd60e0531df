pub mod arith;
pub mod cli;
pub mod counting;
pub mod exactnum;
pub mod gauss;
pub mod hecke;
pub mod qform;
pub mod subsum;
pub mod verify;
pub mod weil;
