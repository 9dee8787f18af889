use std::path::PathBuf;

use thiserror::Error;

/// Anything the CLI can fail with, carrying the process exit code.
///
/// Domain problems (bad geometry, hiker outside the curve, ...) exit with 1,
/// environment problems (missing files, malformed JSON) with 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] lodestone::Error),
    #[error("scene not found: {}", .0.display())]
    SceneNotFound(PathBuf),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("scene parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("scene has no hiker")]
    MissingHiker,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) | CliError::MissingHiker => 1,
            CliError::SceneNotFound(_) | CliError::Io(_) | CliError::Parse(_) => 2,
        }
    }
}
