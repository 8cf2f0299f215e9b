use thiserror::Error;

use crate::presentation::Letter;

/// Input that does not follow the presentation conventions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("the input contains no relators")]
    Empty,
    #[error("line {line}: unrecognized token `{token}`")]
    BadToken { line: usize, token: String },
    #[error("line {line}: 0 is not a letter")]
    ZeroLetter { line: usize },
    #[error("relator {index} has length {len}, relators must have length at least 3")]
    ShortRelator { index: usize, len: usize },
    #[error("generator {missing} does not occur, generators must cover 1..={n}")]
    GeneratorGap { missing: u32, n: u32 },
    #[error("{0} generators given, at least 3 are required")]
    TooFewGenerators(u32),
    #[error("three generators with two relators of length 3 present a torus or a Klein bottle")]
    RankTwo,
    #[error("relator {second} repeats relator {first}")]
    DuplicateRelator { first: usize, second: usize },
    #[error("invalid JSON presentation: {0}")]
    Json(String),
}

/// Reasons a presentation fails the geometricity tests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotGeometric {
    #[error("generator {generator} occurs {count} times in the relators")]
    Occurrence { generator: Letter, count: usize },
    #[error("letter {letter} has {count} relator shifts starting with it")]
    ShiftCount { letter: Letter, count: usize },
    #[error("no cell can be glued at {letter} without cancellation")]
    Stuck { letter: Letter },
    #[error("the cyclic walk revisits {letter} after {found} letters")]
    Repeated { letter: Letter, found: usize },
    #[error("the cyclic walk closed after {found} of {expected} letters")]
    ClosedEarly { found: usize, expected: usize },
    #[error("the cyclic walk does not close on its seed cell")]
    Closure,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("The presentation is not geometric: {0}")]
    NotGeometric(#[from] NotGeometric),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("minimal bigon for ({left}, {right}) not found within {cap} gluing steps")]
    IterationCapExceeded { left: Letter, right: Letter, cap: usize },
    #[error("cannot order the endpoint images of interval {interval} within {depth} symbols")]
    TieUnresolved { interval: usize, depth: usize },
    #[error("image interval {next} lies in neither lap of interval {interval}")]
    AddressUndecidable { interval: usize, next: usize },
    #[error(transparent)]
    InexactDivision(#[from] crate::polyalg::InexactDivision),
    #[error("the kneading determinant has no root in (0, 1)")]
    NoRootInUnitInterval,
    #[error("inconsistent face closure: {0}")]
    InconsistentClosure(String),
    #[error("path leaves the built region after {step} letters")]
    OutOfBuiltRegion { step: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
