use thiserror::Error;

/// Errors raised by the solver and its supporting modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FreError {
    #[error("invalid operator parameters: {0}")]
    Params(String),

    #[error("{field} is out of domain: {detail}")]
    Domain { field: String, detail: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("phi(a, x) = b has no solution for a = {a}, b = {b}")]
    NoSolution { a: f64, b: f64 },

    #[error("row {row} is infeasible")]
    InfeasibleRow { row: usize },

    #[error("column {column} is not active in row {row}")]
    InactiveColumn { row: usize, column: usize },

    #[error("the system has no feasible candidate")]
    Infeasible,

    #[error("enumeration budget exceeded: |E| = {required} exceeds limit {limit}")]
    Budget { required: u128, limit: u128 },

    #[error("oracle budget exceeded: {required} evaluations exceed limit {limit}")]
    OracleBudget { required: u128, limit: u128 },

    #[error("assembled optimum violates the constraints (max residual {max_residual:e})")]
    Numerical { max_residual: f64 },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, FreError>;
