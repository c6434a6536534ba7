//! Graph codecs and report files.

pub mod graph6;
pub mod planar_code;
pub mod report;
