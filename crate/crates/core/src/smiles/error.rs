use thiserror::Error;

/// Everything that can make a SMILES string invalid, from stray characters
/// to graph-level violations. `check_validity` surfaces these as reasons.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmilesError {
    #[error("empty input")]
    EmptyInput,
    #[error("unknown character at position {position}")]
    UnknownCharacter { position: usize },
    #[error("unterminated bracket atom opened at position {position}")]
    UnterminatedBracket { position: usize },
    #[error("invalid bracket atom at position {position}")]
    InvalidBracketAtom { position: usize },
    #[error("invalid ring closure at position {position}")]
    InvalidRingClosure { position: usize },
    #[error("unclosed branch")]
    UnclosedBranch,
    #[error("unmatched ')' at position {position}")]
    UnmatchedBranchClose { position: usize },
    #[error("branch opened before any atom at position {position}")]
    BranchBeforeAtom { position: usize },
    #[error("bond symbol at position {position} is not followed by an atom")]
    DanglingBond { position: usize },
    #[error("ring closure {index} opened but never closed")]
    UnmatchedRingClosure { index: u16 },
    #[error("ring closure {index} specifies conflicting bond orders")]
    ConflictingRingBond { index: u16 },
    #[error("duplicate bond between atoms {a} and {b}")]
    DuplicateRingBond { a: usize, b: usize },
    #[error("ring closure bonds atom {atom} to itself")]
    SelfBond { atom: usize },
    #[error("valence violation on atom {atom}")]
    ValenceViolation { atom: usize },
    #[error("aromatic atom {atom} is not in a ring")]
    AromaticAtomOutsideRing { atom: usize },
}
