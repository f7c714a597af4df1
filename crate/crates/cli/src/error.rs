use std::fmt;

use cosys::catalog::CatalogError;
use cosys::cosystole::CosystoleError;
use cosys::graphs::GraphError;
use cosys::matroid::MatroidError;

/// A failure mapped onto the stable exit-code contract.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub const INPUT: i32 = 2;
pub const UNDEFINED: i32 = 3;
pub const BAD_WEIGHTS: i32 = 4;

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: INPUT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<CosystoleError> for CliError {
    fn from(e: CosystoleError) -> Self {
        let code = match e {
            CosystoleError::NoCocircuits | CosystoleError::NoAdmissibleTriple => UNDEFINED,
            CosystoleError::ZeroTotalWeight
            | CosystoleError::NegativeWeight { .. }
            | CosystoleError::GroundSetMismatch { .. }
            | CosystoleError::NotNormalized(_) => BAD_WEIGHTS,
            CosystoleError::Matroid(MatroidError::NoCocircuits) => UNDEFINED,
            _ => INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<MatroidError> for CliError {
    fn from(e: MatroidError) -> Self {
        let code = if matches!(e, MatroidError::NoCocircuits) { UNDEFINED } else { INPUT };
        CliError { code, message: e.to_string() }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}
