use std::fmt;

/// A command failure with its process exit code: 1 usage, 2 input, 3 cap or limit.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Input(String),
    Limit(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Limit(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Limit(m) => f.write_str(m),
        }
    }
}

impl From<hypercenter::Error> for Failure {
    fn from(e: hypercenter::Error) -> Self {
        use hypercenter::Error as E;
        let msg = e.to_string();
        match e {
            E::OutOfRange { .. } => Failure::Usage(msg),
            E::Parse { .. }
            | E::EmptyGraph
            | E::Disconnected { .. }
            | E::VertexOutOfRange { .. }
            | E::DuplicateMember(_)
            | E::InvalidHalfInt(_)
            | E::Io(_) => Failure::Input(msg),
            E::TooLarge { .. }
            | E::GeodesicOverflow { .. }
            | E::LimitExceeded(_)
            | E::RoundCap { .. }
            | E::Precondition(_) => Failure::Limit(msg),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}
