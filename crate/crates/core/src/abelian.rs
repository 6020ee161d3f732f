//! Abelian composition laws: cyclic groups, direct sums of cyclic groups in a
//! mixed-radix carrier, and the multiplicative structure mod p.

use crate::digits::digit0_wide;
use crate::error::{Error, Result};

/// Cyclic law `d_p(0, m+n)`. A homomorphism from ordinary addition, so any
/// nonnegative `m`, `n` are accepted; restricted to `[0, p)` it is the C_p
/// Cayley entry.
pub fn cyclic_law(p: u64, m: u64, n: u64) -> u64 {
    assert!(p >= 2, "cyclic law needs p ≥ 2");
    digit0_wide(p, m as u128 + n as u128)
}

/// A direct sum `C_{p_0} ⊕ … ⊕ C_{p_{N−1}}` carried on `[0, Π p_h)` in the
/// mixed-radix system of its factors. Radix-1 factors are digit placeholders
/// with the single value 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumSpec {
    radices: Vec<u64>,
    order: u64,
}

impl DirectSumSpec {
    pub fn new(radices: Vec<u64>) -> Result<Self> {
        let mut order: u64 = 1;
        for (position, &p) in radices.iter().enumerate() {
            if p == 0 {
                return Err(Error::DigitOutOfBounds {
                    position,
                    digit: 0,
                    radix: 0,
                });
            }
            order = order.checked_mul(p).ok_or(Error::OutOfRange {
                what: "direct sum order",
                value: u64::MAX,
                max: u64::MAX,
            })?;
        }
        Ok(DirectSumSpec { radices, order })
    }

    pub fn radices(&self) -> &[u64] {
        &self.radices
    }

    pub fn order(&self) -> u64 {
        self.order
    }
}

/// Digit-wise modular addition of `m` and `n` in the spec's mixed-radix
/// system. For `m, n ≥ order` the plane tiles with the Cayley table as motif.
pub fn direct_sum_law(spec: &DirectSumSpec, m: u64, n: u64) -> u64 {
    let mut total: u64 = 0;
    let mut weight: u64 = 1;
    for &p in &spec.radices {
        let dm = (m / weight) % p;
        let dn = (n / weight) % p;
        total += ((dm + dn) % p) * weight;
        weight *= p;
    }
    total
}

/// Multiplicative law `d_p(0, m·n)`. Total; a 0 result signals that the
/// product left `{1..p−1}`, which happens exactly when p is composite.
pub fn mult_mod_law(p: u64, m: u64, n: u64) -> u64 {
    assert!(p >= 2, "multiplicative law needs p ≥ 2");
    digit0_wide(p, m as u128 * n as u128)
}

/// Deterministic trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiplicative inverse of `m` mod prime `p`, via the Bézout identity
/// `mx + py = 1` so that `d_p(0, m·x) = 1`.
pub fn mult_inverse(p: u64, m: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    if m == 0 || m >= p {
        return Err(Error::OutOfRange {
            what: "group element",
            value: m,
            max: p - 1,
        });
    }
    let (g, x, _) = extended_gcd(m as i128, p as i128);
    debug_assert_eq!(g, 1);
    Ok(x.rem_euclid(p as i128) as u64)
}

/// Modular power with nonnegative representative, `base^exp mod modulus`.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1);
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut result: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
