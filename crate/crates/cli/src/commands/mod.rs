pub mod coeffs;
pub mod decompose;
pub mod verify;
