//! Text, JSON and SVG output, exact input parsing, and the command line.

pub mod cli;
pub mod json;
pub mod parse;
pub mod svg;
pub mod text;
