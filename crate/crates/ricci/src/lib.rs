//! Input/output, reports and batch drivers around `ricci-core`.

pub mod cli;
pub mod data;
pub mod formats;
pub mod graph6;
pub mod manifest;
pub mod parallel;
pub mod report;
