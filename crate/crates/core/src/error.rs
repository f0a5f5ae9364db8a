use core::fmt;

use alloc::string::String;

use crate::binom::Natural;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Elements not strictly increasing or outside `[1, n]`.
    MalformedSet(String),
    /// An operation that needs a non-empty set got the empty set.
    EmptySet,
    /// Set has the wrong cardinality for the requested uniformity.
    WrongSize { expected: usize, found: usize },
    RankOutOfRange { rank: Natural, total: Natural },
    /// Instance violates `t >= 2`, `k_1 >= ... >= k_t >= 1` or `n >= k_1 + k_2`.
    InvalidInstance(String),
    /// `a + b > n`: every `a`-set meets every `b`-set.
    Regime { a: usize, b: usize, n: usize },
    /// Second ID strictly precedes the first.
    Order,
    /// Index outside `[1, t]`.
    IndexOutOfRange { i: usize, t: usize },
    /// Search would visit more states than allowed.
    BudgetExceeded { required: Natural, budget: u64 },
    /// `t = 2` and `n = k_1 + k_2`: the structural lemmas do not apply.
    Degenerate,
    /// Step width outside `[1, k]` or tail not a run of that width.
    InvalidStep(String),
    /// A family size outside `[1, C(n, k)]`.
    SizeOutOfRange { index: usize },
    /// The micro oracle's size guard was exceeded.
    TooLarge(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedSet(s) => write!(f, "malformed set: {s}"),
            Error::EmptySet => f.write_str("set must be non-empty"),
            Error::WrongSize { expected, found } => {
                write!(f, "expected a {expected}-set, found {found} elements")
            }
            Error::RankOutOfRange { rank, total } => {
                write!(f, "rank {rank} outside [1, {total}]")
            }
            Error::InvalidInstance(s) => write!(f, "invalid instance: {s}"),
            Error::Regime { a, b, n } => {
                write!(f, "a + b <= n required, got {a} + {b} > {n}")
            }
            Error::Order => f.write_str("second ID strictly precedes the first in lex order"),
            Error::IndexOutOfRange { i, t } => write!(f, "index {i} outside [1, {t}]"),
            Error::BudgetExceeded { required, budget } => {
                write!(f, "search needs {required} states, budget is {budget}")
            }
            Error::Degenerate => f.write_str(
                "lemma hypothesis violated: requires n > k_1 + k_2 or t > 2",
            ),
            Error::InvalidStep(s) => write!(f, "invalid c-step: {s}"),
            Error::SizeOutOfRange { index } => {
                write!(f, "size of family {index} outside [1, C(n, k)]")
            }
            Error::TooLarge(s) => write!(f, "instance too large: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
