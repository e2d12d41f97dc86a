use braidforge_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Input that does not match a schema or fails validation.
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("writing {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::EnumerationLimit { .. }) => 3,
            CliError::Core(Error::ClassificationBug(_) | Error::NumericalFail(_)) => 1,
            CliError::Io { .. } => 1,
            _ => 2,
        }
    }

    /// The variant name of a library error, for diagnostics.
    pub fn kind(&self) -> String {
        match self {
            CliError::Schema(_) => "SchemaError".into(),
            CliError::Io { .. } => "IoError".into(),
            CliError::Core(e) => {
                let s = format!("{e:?}");
                s.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string()
            }
        }
    }
}
