pub mod algebra;
pub mod cli;
pub mod heisenberg;
pub mod quasi_hopf;
pub mod scalar;
pub mod twisted;
