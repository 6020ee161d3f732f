//! Conserved-quantity partition: split a nonnegative integer into λ exact
//! rational parts through a λ×λ latin square, so the parts always sum back to
//! the input. Conservation relies only on the latin row property — each row
//! sums to λ(λ−1)/2, cancelling the 2/(λ(λ−1)) prefactor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::digits::expand;
use crate::error::{Error, Result};
use crate::group::CayleyTable;

/// Input bound keeps η^k·digit·g products comfortably exact.
pub const MAX_INPUT: u64 = 1 << 48;

/// True iff every row and every column contains each symbol exactly once.
pub fn is_latin(table: &CayleyTable) -> bool {
    let n = table.order();
    let mut seen = vec![false; n];
    for m in 0..n {
        seen.fill(false);
        for k in 0..n {
            let v = table.entry(m, k) as usize;
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    for k in 0..n {
        seen.fill(false);
        for m in 0..n {
            let v = table.entry(m, k) as usize;
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    true
}

/// Part `n` is `2/(λ(λ−1)) · Σ_k η^k·d_η(k,x)·g(k mod λ, n)` over the digits
/// of `x`; the λ parts sum to `x` exactly.
pub fn partition_parts(eta: u64, table: &CayleyTable, x: u64) -> Result<Vec<BigRational>> {
    if eta < 2 {
        return Err(Error::OutOfRange {
            what: "partition radix",
            value: eta,
            max: u64::MAX,
        });
    }
    if x >= MAX_INPUT {
        return Err(Error::OutOfRange {
            what: "partition input",
            value: x,
            max: MAX_INPUT - 1,
        });
    }
    let lambda = table.order();
    if lambda < 2 {
        return Err(Error::OutOfRange {
            what: "partition table order",
            value: lambda as u64,
            max: u64::MAX,
        });
    }
    if !is_latin(table) {
        return Err(Error::NotLatinSquare);
    }

    let digits = expand(eta, x)?;
    let prefactor = BigRational::new(
        BigInt::from(2),
        BigInt::from(lambda as u64 * (lambda as u64 - 1)),
    );
    let mut parts = Vec::with_capacity(lambda);
    for n in 0..lambda {
        let mut sum = BigInt::zero();
        let mut weight = BigInt::from(1u64);
        for (k, &d) in digits.digits.iter().enumerate() {
            let g = table.entry(k % lambda, n) as u64;
            sum += &weight * BigInt::from(d * g);
            weight *= BigInt::from(eta);
        }
        parts.push(&prefactor * BigRational::from_integer(sum));
    }
    debug_assert_eq!(
        parts.iter().sum::<BigRational>(),
        BigRational::from_integer(BigInt::from(x))
    );
    Ok(parts)
}
