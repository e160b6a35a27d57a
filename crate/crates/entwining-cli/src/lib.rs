//! Command-line front end for the entwining toolkit: JSON workspaces in, reports out.

pub mod cli;
pub mod commands;
pub mod shipped;
pub mod workspace;
