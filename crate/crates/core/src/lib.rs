pub mod algebra;
pub mod curve;
pub mod places;
pub mod redcount;
pub mod oracle;
pub mod holesize;
pub mod matrix;
pub mod cli;
