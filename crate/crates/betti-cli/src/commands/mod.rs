//! One module per subcommand, sharing the output context.

pub mod asymptotic;
pub mod bound;
pub mod chi;
pub mod compare;
pub mod generic;
pub mod mixedvol;
pub mod verify;

use std::path::Path;

use crate::cli::Format;
use crate::config::Config;

/// Output and resolution context shared by every subcommand.
pub struct Ctx<'a> {
    pub format: Format,
    pub out: Option<&'a Path>,
    pub allow_large: bool,
    pub cfg: &'a Config,
}
