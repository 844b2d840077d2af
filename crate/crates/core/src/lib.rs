pub mod chain;
pub mod cli;
pub mod derived;
pub mod diagram;
pub mod fixtures;
pub mod exactlin;
pub mod fpmod;
pub mod homotopy;
pub mod json;
pub mod report;
pub mod resolve;
pub mod simplicial;
