pub mod calculus;
pub mod craig;
pub mod cutelim;
pub mod generate;
pub mod interpolation;
pub mod prover;
pub mod selftest;
pub mod sequent;
pub mod simplify;
pub mod syntax;
pub mod translate;
pub mod verify;
