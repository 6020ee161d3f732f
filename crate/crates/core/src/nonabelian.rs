//! Nonabelian composition laws: dihedral, dicyclic, and general metacyclic
//! groups, plus the quaternion unit labeling for the order-8 dicyclic table.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{gcd, mod_pow};
use crate::error::{Axiom, Error, Result};

/// Dihedral law on `[0, 2q)`: rotation digit mod `q`, reflection bit mod 2,
/// with the sign of `n` flipped when `m` carries the reflection bit.
///
/// Negative intermediates are shifted to a nonnegative representative before
/// the outer digit; digit-shift invariance makes the result exact.
pub fn dihedral_law(q: u64, m: u64, n: u64) -> u64 {
    assert!(q >= 1, "dihedral law needs q ≥ 1");
    let bm = (m / q) % 2;
    let bn = (n / q) % 2;
    let signed = if bm == 0 {
        m as i128 + n as i128
    } else {
        m as i128 - n as i128
    };
    let low = signed.rem_euclid(q as i128) as u64;
    low + q * ((bm + bn) % 2)
}

/// Dicyclic law on `[0, 4q)`: the dihedral shape over modulus `2q` with the
/// extra twist `+q` when both top bits are set.
pub fn dicyclic_law(q: u64, m: u64, n: u64) -> u64 {
    assert!(q >= 1, "dicyclic law needs q ≥ 1");
    let tq = 2 * q;
    let bm = (m / tq) % 2;
    let bn = (n / tq) % 2;
    let signed = if bm == 0 {
        m as i128 + n as i128 + (q * bm * bn) as i128
    } else {
        m as i128 - n as i128 + (q * bm * bn) as i128
    };
    let low = signed.rem_euclid(tq as i128) as u64;
    low + tq * ((bm + bn) % 2)
}

/// Quaternion unit for an index in the order-8 dicyclic table.
pub fn quaternion_label(n: u64) -> Result<&'static str> {
    const UNITS: [&str; 8] = ["1", "i", "-1", "-i", "j", "ij", "-j", "-ij"];
    UNITS.get(n as usize).copied().ok_or(Error::OutOfRange {
        what: "quaternion index",
        value: n,
        max: 7,
    })
}

/// Order cap shared with table materialization.
pub(crate) const VALIDATION_CAP: u64 = 10_080;
const FULL_ASSOC_LIMIT: u64 = 512;
const ASSOC_SAMPLES: usize = 1_000_000;

/// A metacyclic parameter tuple `(q, a, c, r)` of order `q·a·c`, validated on
/// construction: `gcd(r, q) = 1` and all group axioms hold for the induced
/// table. The gcd condition alone is not sufficient, so the axioms are
/// checked outright and failing tuples are rejected with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetacyclicSpec {
    q: u64,
    a: u64,
    c: u64,
    r: i64,
    order: u64,
}

impl MetacyclicSpec {
    pub fn new(q: u64, a: u64, c: u64, r: i64) -> Result<Self> {
        if q == 0 || a == 0 || c == 0 {
            return Err(Error::OutOfRange {
                what: "metacyclic parameter",
                value: 0,
                max: u64::MAX,
            });
        }
        let order = q
            .checked_mul(a)
            .and_then(|qa| qa.checked_mul(c))
            .filter(|&p| p <= VALIDATION_CAP)
            .ok_or(Error::OrderTooLarge {
                order: u64::MAX,
                cap: VALIDATION_CAP,
            })?;
        let r_mod_q = r.rem_euclid(q as i64) as u64;
        if gcd(r_mod_q, q) != 1 {
            return Err(Error::GcdConstraint { r, q });
        }
        let spec = MetacyclicSpec { q, a, c, r, order };
        spec.validate()?;
        Ok(spec)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Raw law: low digit mod `aq` of `m + n·r^e + q·twist`, top digit mod `c`,
    /// where `e` and the twist digits come from `⌊m/(qa)⌋` and `⌊n/(qa)⌋`.
    fn entry(&self, m: u64, n: u64) -> u64 {
        let aq = self.a * self.q;
        let tm = m / aq;
        let tn = n / aq;
        let exponent = tm % self.c;
        let r_rep = self.r.rem_euclid(aq as i64) as u64;
        let r_pow = mod_pow(r_rep, exponent, aq);
        let twist = (tm % self.a) as u128 * (tn % self.a) as u128 * self.q as u128;
        let low = ((m % aq) as u128 + (n % aq) as u128 * r_pow as u128 + twist) % aq as u128;
        low as u64 + aq * ((tm % self.c + tn % self.c) % self.c)
    }

    fn validate(&self) -> Result<()> {
        let p = self.order;
        if p <= FULL_ASSOC_LIMIT {
            // small enough to materialize, which keeps the triple loop cheap
            let entries: Vec<u32> = (0..p)
                .flat_map(|m| (0..p).map(move |n| self.entry(m, n) as u32))
                .collect();
            self.check_axioms(p, &|m, n| entries[(m * p + n) as usize] as u64, true)
        } else {
            self.check_axioms(p, &|m, n| self.entry(m, n), false)
        }
    }

    fn check_axioms(&self, p: u64, at: &dyn Fn(u64, u64) -> u64, full_assoc: bool) -> Result<()> {
        // latin rows and columns
        let mut seen = vec![false; p as usize];
        for m in 0..p {
            seen.fill(false);
            for n in 0..p {
                let v = at(m, n) as usize;
                if seen[v] {
                    return Err(Error::AxiomFailure {
                        axiom: Axiom::LatinRows,
                        witness: vec![m as usize, n as usize],
                    });
                }
                seen[v] = true;
            }
        }
        for n in 0..p {
            seen.fill(false);
            for m in 0..p {
                let v = at(m, n) as usize;
                if seen[v] {
                    return Err(Error::AxiomFailure {
                        axiom: Axiom::LatinColumns,
                        witness: vec![m as usize, n as usize],
                    });
                }
                seen[v] = true;
            }
        }

        // two-sided identity
        let identity = (0..p).find(|&e| (0..p).all(|x| at(e, x) == x && at(x, e) == x));
        let Some(e) = identity else {
            return Err(Error::AxiomFailure {
                axiom: Axiom::Identity,
                witness: vec![],
            });
        };

        // associativity runs before the inverse scan: a tuple that breaks
        // the cocycle condition is named by its witness triple;
        // full triple loop at desk scale, seeded sampling above
        if full_assoc {
            for x in 0..p {
                for y in 0..p {
                    for z in 0..p {
                        if at(at(x, y), z) != at(x, at(y, z)) {
                            return Err(Error::AxiomFailure {
                                axiom: Axiom::Associativity,
                                witness: vec![x as usize, y as usize, z as usize],
                            });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..ASSOC_SAMPLES {
                let x = rng.gen_range(0..p);
                let y = rng.gen_range(0..p);
                let z = rng.gen_range(0..p);
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Err(Error::AxiomFailure {
                        axiom: Axiom::Associativity,
                        witness: vec![x as usize, y as usize, z as usize],
                    });
                }
            }
        }

        // two-sided inverses
        for x in 0..p {
            let ok = (0..p).any(|y| at(x, y) == e && at(y, x) == e);
            if !ok {
                return Err(Error::AxiomFailure {
                    axiom: Axiom::Inverses,
                    witness: vec![x as usize],
                });
            }
        }
        Ok(())
    }
}

/// Metacyclic law for a validated spec. Reduces to the dihedral law at
/// `(r=−1, c=2, a=1)`, to the dicyclic law at `(r=−1, c=2, a=2)`, and to the
/// cyclic law at `a = c = 1`.
pub fn metacyclic_law(spec: &MetacyclicSpec, m: u64, n: u64) -> u64 {
    spec.entry(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{cyclic_law, direct_sum_law, DirectSumSpec};

    #[test]
    fn dihedral_spot_values() {
        assert_eq!(dihedral_law(3, 1, 3), 4);
        assert_eq!(dihedral_law(3, 3, 1), 5);
        assert_eq!(dihedral_law(4, 4, 1), 7);
    }

    #[test]
    fn dihedral_q1_is_c2() {
        for m in 0..2 {
            for n in 0..2 {
                assert_eq!(dihedral_law(1, m, n), cyclic_law(2, m, n));
            }
        }
    }

    #[test]
    fn dihedral_q2_is_klein() {
        let spec = DirectSumSpec::new(vec![2, 2]).unwrap();
        let iso = [0u64, 1, 2, 3]; // identity relabeling happens to work
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(
                    dihedral_law(2, m, n),
                    direct_sum_law(&spec, iso[m as usize], iso[n as usize])
                );
            }
        }
    }

    #[test]
    fn dicyclic_spot_values() {
        assert_eq!(dicyclic_law(2, 4, 4), 2);
        assert_eq!(dicyclic_law(2, 1, 1), 2);
        assert_eq!(dicyclic_law(3, 6, 6), 3);
    }

    #[test]
    fn hamilton_identities() {
        let law = |m, n| dicyclic_law(2, m, n);
        // i² = j² = k² = ijk = −1 with k = ij
        assert_eq!(law(1, 1), 2);
        assert_eq!(law(4, 4), 2);
        let k = law(1, 4);
        assert_eq!(k, 5);
        assert_eq!(law(k, k), 2);
        assert_eq!(law(law(1, 4), k), 2);
    }

    #[test]
    fn complex_units_form_a_subgroup() {
        for m in 0..4 {
            for n in 0..4 {
                assert!(dicyclic_law(2, m, n) < 4);
            }
        }
    }

    #[test]
    fn noncommutative_witnesses_exist() {
        for q in 3..=16u64 {
            let p = 2 * q;
            let witness = (0..p)
                .flat_map(|m| (0..p).map(move |n| (m, n)))
                .find(|&(m, n)| dihedral_law(q, m, n) != dihedral_law(q, n, m));
            assert!(witness.is_some(), "dihedral q={q} should be nonabelian");
        }
        for q in 2..=16u64 {
            let p = 4 * q;
            let witness = (0..p)
                .flat_map(|m| (0..p).map(move |n| (m, n)))
                .find(|&(m, n)| dicyclic_law(q, m, n) != dicyclic_law(q, n, m));
            assert!(witness.is_some(), "dicyclic q={q} should be nonabelian");
        }
    }

    #[test]
    fn tiling_is_periodic_in_the_group_order() {
        for q in 1..=5u64 {
            let p = 2 * q;
            for m in 0..p {
                for n in 0..p {
                    let v = dihedral_law(q, m, n);
                    assert_eq!(dihedral_law(q, m + p, n), v);
                    assert_eq!(dihedral_law(q, m, n + p), v);
                    assert_eq!(dihedral_law(q, m + 3 * p, n + 2 * p), v);
                }
            }
            let p = 4 * q;
            for m in 0..p {
                for n in 0..p {
                    let v = dicyclic_law(q, m, n);
                    assert_eq!(dicyclic_law(q, m + p, n), v);
                    assert_eq!(dicyclic_law(q, m, n + p), v);
                }
            }
        }
    }

    #[test]
    fn metacyclic_m16_entries() {
        let spec = MetacyclicSpec::new(8, 1, 2, 5).unwrap();
        assert_eq!(metacyclic_law(&spec, 8, 1), 13);
        assert_eq!(metacyclic_law(&spec, 8, 8), 0);
    }

    #[test]
    fn metacyclic_reduces_to_cyclic() {
        for q in 2..=9u64 {
            let spec = MetacyclicSpec::new(q, 1, 1, 1).unwrap();
            for m in 0..q {
                for n in 0..q {
                    assert_eq!(metacyclic_law(&spec, m, n), cyclic_law(q, m, n));
                }
            }
        }
    }

    #[test]
    fn metacyclic_reduces_to_dihedral_and_dicyclic() {
        for q in 1..=6u64 {
            let spec = MetacyclicSpec::new(q, 1, 2, -1).unwrap();
            for m in 0..2 * q {
                for n in 0..2 * q {
                    assert_eq!(metacyclic_law(&spec, m, n), dihedral_law(q, m, n));
                }
            }
            let spec = MetacyclicSpec::new(q, 2, 2, -1).unwrap();
            for m in 0..4 * q {
                for n in 0..4 * q {
                    assert_eq!(metacyclic_law(&spec, m, n), dicyclic_law(q, m, n));
                }
            }
        }
    }

    #[test]
    fn metacyclic_rejects_gcd_violation() {
        assert_eq!(
            MetacyclicSpec::new(8, 1, 2, 2),
            Err(Error::GcdConstraint { r: 2, q: 8 })
        );
    }

    #[test]
    fn metacyclic_rejects_nonassociative_tuple() {
        // (q=17, a=2, c=5, r=3) has gcd(3,17)=1 but 3^5 ≢ 1 (mod 34), so the
        // law cannot be associative; the validator must name a witness triple.
        match MetacyclicSpec::new(17, 2, 5, 3) {
            Err(Error::AxiomFailure {
                axiom: Axiom::Associativity,
                witness,
            }) => assert_eq!(witness.len(), 3),
            other => panic!("expected associativity rejection, got {other:?}"),
        }
    }

    #[test]
    fn metacyclic_order_170_specific_counterexample() {
        let raw = MetacyclicSpec {
            q: 17,
            a: 2,
            c: 5,
            r: 3,
            order: 170,
        };
        let left = raw.entry(raw.entry(136, 34), 1);
        let right = raw.entry(136, raw.entry(34, 1));
        assert_ne!(left, right);
    }

    #[test]
    fn quaternion_labels() {
        let expected = ["1", "i", "-1", "-i", "j", "ij", "-j", "-ij"];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(quaternion_label(n as u64).unwrap(), *want);
        }
        assert!(quaternion_label(8).is_err());
    }
}
