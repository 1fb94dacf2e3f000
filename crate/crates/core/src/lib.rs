pub mod affine;
pub mod config;
pub mod conic;
pub mod error;
pub mod kernel;
pub mod report;
pub mod theorems;
pub mod triangle;
