use std::fmt;

use raysphere::GeomError;
use serde::Serialize;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Io(String),
    Geom(GeomError),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Io(_) => "io",
            CliError::Geom(e) => e.kind(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Geom(GeomError::ZeroVector) => 3,
            CliError::Geom(GeomError::Convergence { .. }) => 5,
            CliError::Geom(_) => 4,
        }
    }

    pub fn payload(&self) -> String {
        #[derive(Serialize)]
        struct Payload<'a> {
            kind: &'a str,
            message: String,
        }
        serde_json::to_string(&Payload {
            kind: self.kind(),
            message: self.to_string(),
        })
        .expect("error payload serializes")
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Io(m) => f.write_str(m),
            CliError::Geom(e) => write!(f, "{e}"),
        }
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        CliError::Geom(e)
    }
}
