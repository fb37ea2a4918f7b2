pub mod error;
pub mod polyring;

pub use error::{Error, Result};
pub mod powerseries;
pub mod foliation;
pub mod limits;
pub mod cycles;
pub mod ramification;
pub mod oracle;
pub mod cli;
