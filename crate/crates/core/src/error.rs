use thiserror::Error;

/// Errors surfaced by algebra construction, presentations, models and the
/// group catalog. Dimension mismatches found by the verifiers are not
/// errors; they are reported in the verdict of the corresponding report.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("generator degree must be positive: {0}")]
    NonPositiveDegree(String),
    #[error("duplicate generator name: {0}")]
    DuplicateGenerator(String),
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("mismatched algebras")]
    MismatchedAlgebras,
    #[error("expected a homogeneous element{}", fmt_ctx(.0))]
    NonHomogeneous(String),
    #[error("element of degree {found} where degree {expected} was required")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("inconsistent presentation: relation with a nonzero degree-0 component")]
    InconsistentPresentation,
    #[error("sign maps do not form a group containing the identity")]
    NotAGroup,
    #[error("action does not descend to the quotient")]
    ActionDoesNotDescend,
    #[error("substitution target for {0} must involve even generators only")]
    OddSubstitution(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("non-block pair: {0}")]
    NonBlockPair(String),
    #[error("not expressible in classifying generators: {0}")]
    NotExpressible(String),
    #[error("no Euler-class generator in factor {0}")]
    NoEulerClass(usize),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn fmt_ctx(ctx: &str) -> String {
    if ctx.is_empty() {
        String::new()
    } else {
        format!(" ({ctx})")
    }
}
