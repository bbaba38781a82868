use thiserror::Error;

use crate::dynkin::DiagramType;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,

    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),

    #[error("invalid diagram type {family}:{rank} ({reason})")]
    InvalidDiagram {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse diagram type `{0}`; expected A:<n>, D:<n> or E:6|7|8")]
    ParseDiagram(String),

    #[error("group closure for {0} exceeded {1} elements; generator set is wrong")]
    ClosureOverflow(DiagramType, usize),

    #[error("group for {ty} has {found} elements, expected {expected}")]
    WrongOrder {
        ty: DiagramType,
        found: usize,
        expected: usize,
    },

    #[error("character table construction failed: {0}")]
    CharacterTable(String),

    #[error("tensor multiplicity {value} for irreps ({row}, {col}) is not an integer")]
    NonIntegral { row: usize, col: usize, value: f64 },

    #[error("no isomorphism between the McKay graph and the affine diagram of {0}")]
    NoIsomorphism(DiagramType),

    #[error("no special triple found for {0}")]
    NoSpecialTriple(DiagramType),

    #[error("dual labeling for {0} is not a bijection onto the non-trivial classes")]
    LabelingNotBijective(DiagramType),

    #[error("no Mumford representatives exist for {0} under the chosen ordering")]
    NoMumfordRepresentatives(DiagramType),

    #[error(
        "determinant identity fails for {ty} at (j, k) = ({j}, {k}) with deviation {deviation:e}"
    )]
    DeterminantMismatch {
        ty: DiagramType,
        j: usize,
        k: usize,
        deviation: f64,
    },

    #[error("abelianization exponent {exponent} differs from connection index {index} for {ty}")]
    AbelianizationMismatch {
        ty: DiagramType,
        exponent: u64,
        index: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
