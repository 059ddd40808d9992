pub mod bigseries;
pub mod census;
pub mod cli;
pub mod counting;
pub mod cycleindex;
pub mod diagram;
pub mod error;
pub mod golden;

pub use error::{Error, Result};
