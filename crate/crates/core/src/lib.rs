pub mod cli;
pub mod digraph;
pub mod exact;
pub mod posbasis;
pub mod pss;
