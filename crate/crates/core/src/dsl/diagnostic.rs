use std::fmt;

use crate::error::QsetError;

use super::ast::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagnosticCode {
    IllFormedIdentity,
    CountExceedsUniverse,
    UnknownSpecies,
    UnknownLabel,
    NoIndistinguishableElement,
    BetaExceedsQc,
    Overflow,
    ParseError,
    TypeError,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::IllFormedIdentity => "IllFormedIdentity",
            DiagnosticCode::CountExceedsUniverse => "CountExceedsUniverse",
            DiagnosticCode::UnknownSpecies => "UnknownSpecies",
            DiagnosticCode::UnknownLabel => "UnknownLabel",
            DiagnosticCode::NoIndistinguishableElement => "NoIndistinguishableElement",
            DiagnosticCode::BetaExceedsQc => "BetaExceedsQc",
            DiagnosticCode::Overflow => "Overflow",
            DiagnosticCode::ParseError => "ParseError",
            DiagnosticCode::TypeError => "TypeError",
        }
    }
}

impl fmt::Display for DiagnosticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A coded, located error surfaced to the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
    pub span: Span,
}

impl Diagnostic {
    pub fn new(code: DiagnosticCode, message: impl Into<String>, span: Span) -> Self {
        Diagnostic {
            code,
            message: message.into(),
            span,
        }
    }

    pub fn parse(message: impl Into<String>, span: Span) -> Self {
        Self::new(DiagnosticCode::ParseError, message, span)
    }

    pub fn type_error(message: impl Into<String>, span: Span) -> Self {
        Self::new(DiagnosticCode::TypeError, message, span)
    }

    pub fn from_error(err: &QsetError, span: Span) -> Self {
        let code = match err {
            QsetError::IllFormedIdentity { .. } => DiagnosticCode::IllFormedIdentity,
            QsetError::CountExceedsUniverse { .. } => DiagnosticCode::CountExceedsUniverse,
            QsetError::UnknownSpecies(_) => DiagnosticCode::UnknownSpecies,
            QsetError::UnknownLabel(_) => DiagnosticCode::UnknownLabel,
            QsetError::NoIndistinguishableElement(_) => DiagnosticCode::NoIndistinguishableElement,
            QsetError::BetaExceedsQc { .. } => DiagnosticCode::BetaExceedsQc,
            // The strategy space of the harness outgrows what can be enumerated.
            QsetError::Overflow { .. } | QsetError::HarnessBound { .. } => DiagnosticCode::Overflow,
        };
        Self::new(code, err.to_string(), span)
    }
}

/// `<line>:<column>: error[<Code>]: <message>`
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: error[{}]: {}", self.span, self.code, self.message)
    }
}

impl std::error::Error for Diagnostic {}
