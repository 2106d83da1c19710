use serde_json::{json, Value};
use skewpbw::freemod::ModuleError;
use skewpbw::graded::GradedError;
use skewpbw::groebner::GroebnerError;
use skewpbw::parse::ParseError;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { message: String, line: Option<usize>, column: Option<usize> },
    Inconsistent(String),
    Internal(String),
}

impl CliError {
    pub fn from_parse(input: &str, e: ParseError) -> Self {
        CliError::Parse {
            message: format!("in `{input}`: {}", e.kind),
            line: Some(e.line),
            column: Some(e.column),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse { .. } => 2,
            CliError::Inconsistent(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "parse",
            CliError::Inconsistent(_) => "inconsistent",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Inconsistent(m) | CliError::Internal(m) => m.clone(),
            CliError::Parse { message, line: Some(l), column: Some(c) } => format!("{l}:{c}: {message}"),
            CliError::Parse { message, .. } => message.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({ "kind": self.kind(), "message": self.message() });
        if let CliError::Parse { line: Some(l), column: Some(c), .. } = self {
            err["line"] = json!(l);
            err["column"] = json!(c);
        }
        json!({ "status": "error", "exit_code": self.exit_code(), "error": err })
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::InconsistentPresentation => CliError::Inconsistent(e.to_string()),
            GroebnerError::Internal(m) => CliError::Internal(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<GradedError> for CliError {
    fn from(e: GradedError) -> Self {
        match e {
            GradedError::Groebner(g) => g.into(),
            GradedError::Internal(m) => CliError::Internal(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::Groebner(g) => g.into(),
            ModuleError::Internal(m) => CliError::Internal(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}
