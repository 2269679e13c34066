pub mod exec;
pub mod harness;
pub mod limits;
pub mod logic;
pub mod operators;
pub mod orders;
pub mod postulates;
pub mod text;
