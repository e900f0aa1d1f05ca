use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("malformed shape: {0}")]
    Malformed(String),
    #[error("zero part at position {0} followed by a positive part")]
    ZeroPart(usize),
    #[error("parts {parts:?} are not weakly decreasing at position {index}")]
    NotDecreasing { index: usize, parts: Vec<usize> },
    #[error("inner partition {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division: nonzero remainder")]
    NotDivisible,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Errors from the determinantal constructors and the formula dispatcher.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("formula `{formula}` does not apply: {reason}")]
    Inapplicable { formula: String, reason: String },
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("empty cell at row {row}, column {col} has no filled cell below it")]
    NoFilledCellBelow { row: usize, col: usize },
    #[error("invalid filling: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("illegal path: {0}")]
    IllegalPath(String),
    #[error("enumeration cap of {cap} path systems exceeded")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}
