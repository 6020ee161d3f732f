//! Finite groups from digit-function composition laws.
//!
//! The `k`-th base-`p` digit of `x` is `d_p(k,x) = ⌊x/pᵏ⌋ − p·⌊x/pᵏ⁺¹⌋`.
//! Single closed-form expressions in this function induce group structure on
//! the plain integers `0..p−1`: addition mod p gives cyclic groups, digit-wise
//! mixed-radix addition gives every finite abelian group, sign- and twist-
//! decorated variants give the dihedral, dicyclic and metacyclic families,
//! and a factoradic unranking recursion enumerates the symmetric and
//! alternating groups. The same digit function doubles as a cellular
//! automaton update rule and as the kernel of an exact latin-square partition
//! identity.
//!
//! Modules:
//! - [`digits`]: the digit function, radix expansions, mixed-radix and
//!   factoradic codecs, radix economy. Exact integer arithmetic throughout.
//! - [`abelian`]: cyclic, direct-sum, and multiplicative-mod-p laws.
//! - [`nonabelian`]: dihedral, dicyclic, and validated metacyclic laws plus
//!   quaternion unit labels.
//! - [`perms`]: permutation words/codes/ranks, composition, inversion,
//!   signature, alternating enumeration.
//! - [`group`]: Cayley-table materialization, axiom verification, analysis,
//!   isomorphism search.
//! - [`ca`]: digit-indexed cellular automata with periodic boundaries.
//! - [`partition`]: exact conserved-quantity partition through latin squares.
//!
//! All operations are pure functions over immutable values and are safe to
//! call concurrently.

pub mod abelian;
pub mod ca;
pub mod digits;
pub mod error;
pub mod group;
pub mod nonabelian;
pub mod partition;
pub mod perms;

pub use error::{Axiom, Error, Result};
