//! The digit function and its codecs: uniform radix expansions, digit sums,
//! mixed-radix and factoradic digit extraction, and the radix-economy cost.
//!
//! Everything here is exact integer arithmetic. Powers are grown by repeated
//! multiplication so floors near exact powers are never off by one.

use crate::error::{Error, Result};

/// The `k`-th base-`p` digit of `x`: `⌊x/pᵏ⌋ − p·⌊x/pᵏ⁺¹⌋`.
///
/// Radix 1 always yields 0. Total on all of `u64`.
pub fn digit(p: u64, k: u32, x: u64) -> u64 {
    assert!(p >= 1, "radix must be at least 1");
    if p == 1 {
        return 0;
    }
    match p.checked_pow(k) {
        // ⌊x/pᵏ⌋ mod p equals the defining difference of floors
        Some(pk) if pk <= x => (x / pk) % p,
        // pᵏ > x, so ⌊x/pᵏ⌋ = 0
        _ => 0,
    }
}

/// Zeroth digit with a wide accumulator, for laws that add or multiply
/// arbitrary u64 inputs before reducing.
pub(crate) fn digit0_wide(p: u64, x: u128) -> u64 {
    assert!(p >= 1);
    if p == 1 {
        0
    } else {
        (x % p as u128) as u64
    }
}

/// Largest `k` with `base^k ≤ x`, by repeated multiplication.
pub fn integer_log(base: u64, x: u64) -> u32 {
    assert!(base >= 2, "integer log needs base ≥ 2");
    assert!(x >= 1, "integer log needs x ≥ 1");
    let mut k = 0;
    let mut power = base;
    while power <= x {
        k += 1;
        match power.checked_mul(base) {
            Some(next) => power = next,
            None => break, // next power exceeds u64, hence exceeds x
        }
    }
    k
}

/// `n!` while it fits in u64 (n ≤ 20).
pub fn factorial(n: u32) -> Option<u64> {
    let mut f: u64 = 1;
    for i in 2..=n as u64 {
        f = f.checked_mul(i)?;
    }
    Some(f)
}

/// A number together with its ordered digit list, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digits {
    pub radix: u64,
    pub digits: Vec<u64>,
}

impl Digits {
    /// Reconstruct `Σ radixᵏ·digits[k]`.
    pub fn value(&self) -> u64 {
        let mut total: u64 = 0;
        let mut weight: u64 = 1;
        for (i, &d) in self.digits.iter().enumerate() {
            total += d * weight;
            if i + 1 < self.digits.len() {
                weight *= self.radix;
            }
        }
        total
    }
}

/// Expand `x` in radix `p`. Zero expands to a single `[0]` digit; radix 1
/// only represents zero.
pub fn expand(p: u64, x: u64) -> Result<Digits> {
    assert!(p >= 1, "radix must be at least 1");
    if p == 1 {
        return if x == 0 {
            Ok(Digits {
                radix: 1,
                digits: vec![0],
            })
        } else {
            Err(Error::Unrepresentable { x })
        };
    }
    let mut digits = Vec::new();
    let mut rest = x;
    loop {
        digits.push(rest % p);
        rest /= p;
        if rest == 0 {
            break;
        }
    }
    Ok(Digits { radix: p, digits })
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(p: u64, n: u64) -> u64 {
    assert!(p >= 2, "digit sum needs radix ≥ 2");
    let mut sum = 0;
    let mut rest = n;
    while rest > 0 {
        sum += rest % p;
        rest /= p;
    }
    sum
}

/// A mixed-radix numeral system: digit `h` runs over `[0, radices[h])` and
/// carries weight `Π_{m<h} radices[m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedRadix {
    radices: Vec<u64>,
    capacity: u64,
}

impl MixedRadix {
    pub fn new(radices: Vec<u64>) -> Result<Self> {
        let mut capacity: u64 = 1;
        for (position, &p) in radices.iter().enumerate() {
            if p == 0 {
                return Err(Error::DigitOutOfBounds {
                    position,
                    digit: 0,
                    radix: 0,
                });
            }
            capacity = capacity.checked_mul(p).ok_or(Error::OutOfRange {
                what: "mixed-radix capacity",
                value: u64::MAX,
                max: u64::MAX,
            })?;
        }
        Ok(MixedRadix { radices, capacity })
    }

    pub fn radices(&self) -> &[u64] {
        &self.radices
    }

    /// `Π radices[h]`, the number of representable values.
    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    /// Digit `h` of `n`: the zeroth base-`radices[h]` digit of `⌊n / Π_{m<h} radices[m]⌋`.
    pub fn to_digits(&self, n: u64) -> Result<Vec<u64>> {
        if n >= self.capacity {
            return Err(Error::OutOfRange {
                what: "mixed-radix value",
                value: n,
                max: self.capacity - 1,
            });
        }
        let mut digits = Vec::with_capacity(self.radices.len());
        let mut weight: u64 = 1;
        for &p in &self.radices {
            digits.push(digit(p, 0, n / weight));
            weight *= p;
        }
        Ok(digits)
    }

    /// `Σ digits[h]·Π_{m<h} radices[m]`, inverse of [`MixedRadix::to_digits`].
    pub fn from_digits(&self, digits: &[u64]) -> Result<u64> {
        if digits.len() != self.radices.len() {
            return Err(Error::LengthMismatch {
                expected: self.radices.len(),
                got: digits.len(),
            });
        }
        let mut total: u64 = 0;
        let mut weight: u64 = 1;
        for (position, (&d, &p)) in digits.iter().zip(&self.radices).enumerate() {
            if d >= p {
                return Err(Error::DigitOutOfBounds {
                    position,
                    digit: d,
                    radix: p,
                });
            }
            total += d * weight;
            weight *= p;
        }
        Ok(total)
    }
}

/// Stage-`h` factoradic digit of `n`: the zeroth base-`(h+1)` digit of `⌊n/h!⌋`.
/// Stage 0 is always 0.
pub fn factoradic_digit(h: u32, n: u64) -> u64 {
    match factorial(h) {
        Some(f) => digit(h as u64 + 1, 0, n / f),
        // h! beyond u64 means ⌊n/h!⌋ = 0 for every representable n
        None => 0,
    }
}

/// Radix economy `η·⌊1 + log_η w⌋` of writing `w` in radix `η`.
pub fn radix_economy(eta: u64, w: u64) -> u64 {
    assert!(eta >= 2, "radix economy needs η ≥ 2");
    assert!(w >= 1, "radix economy needs w ≥ 1");
    eta * (1 + integer_log(eta, w) as u64)
}
