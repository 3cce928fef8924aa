//! Text formats, JSON reports and the command-line driver for
//! [`f2net_core`].

pub mod cli;
pub mod format;
pub mod report;
