use std::fmt;

use thiserror::Error;

/// Group axioms in the order the verifier scans them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Identity,
    LatinRows,
    LatinColumns,
    Inverses,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::LatinRows => "latin rows",
            Axiom::LatinColumns => "latin columns",
            Axiom::Inverses => "inverses",
            Axiom::Associativity => "associativity",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Radix-1 expansions only exist for zero.
    #[error("unrepresentable: {x} has no finite radix-1 expansion")]
    Unrepresentable { x: u64 },

    #[error("{what} {value} out of range (maximum {max})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        max: u64,
    },

    #[error("digit {digit} at position {position} exceeds radix {radix}")]
    DigitOutOfBounds {
        position: usize,
        digit: u64,
        radix: u64,
    },

    #[error("expected {expected} digits, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{p} is not a field characteristic")]
    NotPrime { p: u64 },

    #[error("gcd({r}, {q}) must be 1")]
    GcdConstraint { r: i64, q: u64 },

    #[error("{code} is not a permutation code for p = {p}")]
    NotAPermutation { p: u32, code: u64 },

    #[error("group axiom `{axiom}` fails at witness {}", format_witness(witness))]
    AxiomFailure { axiom: Axiom, witness: Vec<usize> },

    #[error("partition identity requires latin square")]
    NotLatinSquare,

    #[error("order {order} exceeds cap {cap}")]
    OrderTooLarge { order: u64, cap: u64 },

    #[error("cannot parse group spec `{0}`")]
    ParseSpec(String),

    #[error("row has {got} cells, automaton width is {expected}")]
    WidthMismatch { expected: usize, got: usize },
}

pub(crate) fn format_witness(witness: &[usize]) -> String {
    let parts: Vec<String> = witness.iter().map(|w| w.to_string()).collect();
    format!("({})", parts.join(","))
}

pub type Result<T> = std::result::Result<T, Error>;
