//! Permutations of `p` symbols carried as radix-`p` digit words.
//!
//! A permutation has three interchangeable forms: the word (images of
//! 0..p−1), the integer code `Σ pᵏ·word[k]`, and the rank `m ∈ [0, p!)` in
//! the stage-wise cyclic-shift enumeration. The rank recursion appends the
//! new symbol on the right of the previous stage's word and rotates the
//! whole word left by the stage digit of `m` in the factorial number system.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::digits::{digit, factorial};
use crate::error::{Error, Result};

/// Degree guard: codes use pᵖ weights, kept well inside u64.
pub const MAX_DEGREE: u32 = 12;

fn check_degree(p: u32) -> Result<()> {
    if !(1..=MAX_DEGREE).contains(&p) {
        return Err(Error::OutOfRange {
            what: "permutation degree",
            value: p as u64,
            max: MAX_DEGREE as u64,
        });
    }
    Ok(())
}

/// A permutation stored by its images: `word[k]` is where `k` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermWord {
    word: Vec<u32>,
}

impl PermWord {
    /// Validates that `word` is a bijection on `[0, len)`.
    pub fn from_word(word: Vec<u32>) -> Result<Self> {
        let p = word.len() as u32;
        check_degree(p)?;
        let mut seen = vec![false; word.len()];
        for &v in &word {
            if v >= p || seen[v as usize] {
                return Err(Error::NotAPermutation {
                    p,
                    code: encode(p, &word),
                });
            }
            seen[v as usize] = true;
        }
        Ok(PermWord { word })
    }

    /// Reads the `p` base-`p` digits of `code` as a word.
    pub fn from_code(p: u32, code: u64) -> Result<Self> {
        check_degree(p)?;
        let (lo, hi) = code_bounds(p);
        if code < lo || code > hi {
            return Err(Error::NotAPermutation { p, code });
        }
        let word: Vec<u32> = (0..p).map(|k| digit(p as u64, k, code) as u32).collect();
        Self::from_word(word).map_err(|_| Error::NotAPermutation { p, code })
    }

    pub fn degree(&self) -> u32 {
        self.word.len() as u32
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn image(&self, k: u32) -> u32 {
        self.word[k as usize]
    }

    /// Integer code `Σ pᵏ·word[k]`.
    pub fn code(&self) -> u64 {
        encode(self.degree(), &self.word)
    }

    /// Concatenated digits for p ≤ 10, comma-separated above.
    pub fn word_string(&self) -> String {
        if self.degree() <= 10 {
            self.word.iter().map(|v| v.to_string()).collect()
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            parts.join(",")
        }
    }
}

fn encode(p: u32, word: &[u32]) -> u64 {
    let mut code: u64 = 0;
    let mut weight: u64 = 1;
    for (i, &v) in word.iter().enumerate() {
        code += v as u64 * weight;
        if i + 1 < word.len() {
            weight *= p as u64;
        }
    }
    code
}

/// Identity code `π_p(0) = Σ pᵏ·k`.
pub fn identity_code(p: u32) -> u64 {
    let mut code = 0;
    let mut weight: u64 = 1;
    for k in 0..p as u64 {
        code += k * weight;
        if k + 1 < p as u64 {
            weight *= p as u64;
        }
    }
    code
}

/// Code range `(π_p(p!−1), π_p(0))`: every permutation code lies between
/// `(pᵖ−p)/(p−1)² − 1` and `pᵖ − (pᵖ−p)/(p−1)²`.
pub fn code_bounds(p: u32) -> (u64, u64) {
    if p == 1 {
        return (0, 0);
    }
    let pb = p as u128;
    let pp = pb.pow(p);
    let t = (pp - pb) / ((pb - 1) * (pb - 1));
    ((t - 1) as u64, (pp - t) as u64)
}

/// The `m`-th permutation of `p` symbols: stage `k` appends symbol `k−1` and
/// rotates left by the stage-`k` factoradic digit of `m`.
pub fn unrank(p: u32, m: u64) -> Result<PermWord> {
    check_degree(p)?;
    let total = factorial(p).expect("p ≤ 12");
    if m >= total {
        return Err(Error::OutOfRange {
            what: "permutation rank",
            value: m,
            max: total - 1,
        });
    }
    let mut word: Vec<u32> = vec![0];
    let mut fact: u64 = 1;
    for k in 2..=p {
        fact *= (k - 1) as u64;
        let shift = ((m / fact) % k as u64) as usize;
        word.push(k - 1);
        let len = word.len();
        word = (0..len).map(|i| word[(i + shift) % len]).collect();
    }
    Ok(PermWord { word })
}

/// Rank of a word: peels stages off by locating the top symbol, undoing its
/// rotation, and accumulating factorial weights. Inverse of [`unrank`].
pub fn rank(perm: &PermWord) -> u64 {
    let p = perm.degree();
    let mut word = perm.word.clone();
    let mut m: u64 = 0;
    for k in (2..=p).rev() {
        let len = k as usize;
        let pos = word.iter().position(|&v| v == k - 1).expect("valid word");
        let shift = (len - 1 - pos) % len;
        m += shift as u64 * factorial(k - 1).expect("k ≤ 12");
        // rotate right by `shift`, then drop the top symbol from the end
        let mut prev: Vec<u32> = (0..len).map(|i| word[(i + len - shift) % len]).collect();
        prev.pop();
        word = prev;
    }
    m
}

/// `outer ∘ inner` (inner applied first): `word[k] = outer[inner[k]]`.
pub fn compose(outer: &PermWord, inner: &PermWord) -> Result<PermWord> {
    if outer.degree() != inner.degree() {
        return Err(Error::LengthMismatch {
            expected: outer.degree() as usize,
            got: inner.degree() as usize,
        });
    }
    let word = inner.word.iter().map(|&k| outer.word[k as usize]).collect();
    Ok(PermWord { word })
}

/// Composition on integer codes, `Σ pᵏ·d_p(d_p(k, inner), outer)`.
pub fn compose_codes(p: u32, outer: u64, inner: u64) -> Result<u64> {
    let o = PermWord::from_code(p, outer)?;
    let i = PermWord::from_code(p, inner)?;
    let mut code: u64 = 0;
    let mut weight: u64 = 1;
    for k in 0..p {
        let inner_digit = digit(p as u64, k, i.code());
        code += digit(p as u64, inner_digit as u32, o.code()) * weight;
        if k + 1 < p {
            weight *= p as u64;
        }
    }
    debug_assert_eq!(code, compose(&o, &i)?.code());
    Ok(code)
}

/// Inverse permutation: `word[v] = k` wherever `word[k] = v`.
pub fn invert(perm: &PermWord) -> PermWord {
    let mut word = vec![0u32; perm.word.len()];
    for (k, &v) in perm.word.iter().enumerate() {
        word[v as usize] = k as u32;
    }
    PermWord { word }
}

/// Inversion on integer codes, `Σ pᵏ Σ_n n·d_p(d_p(n, code), pᵏ)`: the inner
/// digit of a pure power acts as a Kronecker delta selecting the preimage.
pub fn invert_code(p: u32, code: u64) -> Result<u64> {
    let perm = PermWord::from_code(p, code)?;
    let mut out: u64 = 0;
    let mut weight: u64 = 1;
    for k in 0..p {
        let pk = (p as u64).pow(k);
        let coefficient: u64 = (0..p)
            .map(|n| n as u64 * digit(p as u64, digit(p as u64, n, code) as u32, pk))
            .sum();
        out += coefficient * weight;
        if k + 1 < p {
            weight *= p as u64;
        }
    }
    debug_assert_eq!(out, invert(&perm).code());
    Ok(out)
}

/// Signature as the exact rational double product
/// `Π_{j>k} (j−k)/(word[j]−word[k])`; +1 for even permutations, −1 for odd.
pub fn signature(perm: &PermWord) -> i32 {
    let w = &perm.word;
    let mut sig = BigRational::one();
    for j in 1..w.len() {
        for k in 0..j {
            let num = BigInt::from(j as i64 - k as i64);
            let den = BigInt::from(w[j] as i64 - w[k] as i64);
            sig *= BigRational::new(num, den);
        }
    }
    debug_assert!(sig.abs().is_one());
    if sig.is_positive() {
        1
    } else {
        -1
    }
}

/// Signature of an integer code.
pub fn signature_code(p: u32, code: u64) -> Result<i32> {
    Ok(signature(&PermWord::from_code(p, code)?))
}

/// Row-`m` shifted digit table `d_p(d_p(0, m+n), π_p(m))`: the C_p entry
/// `(m+n) mod p` read through the word of the `m`-th permutation.
pub fn shift_law(p: u32, m: u64, n: u64) -> Result<u64> {
    check_degree(p)?;
    for (what, v) in [("row", m), ("column", n)] {
        if v >= p as u64 {
            return Err(Error::OutOfRange {
                what,
                value: v,
                max: p as u64 - 1,
            });
        }
    }
    let perm = unrank(p, m)?;
    Ok(perm.image(((m + n) % p as u64) as u32) as u64)
}

/// Enumeration guard for alternating groups.
pub const MAX_ALTERNATING_DEGREE: u32 = 8;

/// Ranks of all even permutations of `p` symbols, ascending. Exactly `p!/2`
/// of the `p!` ranks qualify.
pub fn alternating_indices(p: u32) -> Result<Vec<u64>> {
    if !(2..=MAX_ALTERNATING_DEGREE).contains(&p) {
        return Err(Error::OutOfRange {
            what: "alternating degree",
            value: p as u64,
            max: MAX_ALTERNATING_DEGREE as u64,
        });
    }
    let total = factorial(p).expect("p ≤ 8");
    let ranks: Vec<u64> = (0..total)
        .filter(|&m| signature(&unrank(p, m).expect("rank in range")) == 1)
        .collect();
    debug_assert_eq!(ranks.len() as u64, total / 2);
    Ok(ranks)
}
