//! Deterministic cellular automata: the new cell value is the digit of the
//! rule number indexed by the neighborhood sum `Σ η^{k+r}·row[j+k]`, with the
//! left neighbor in the least-significant position and periodic wrap.

use crate::digits::digit;
use crate::error::{Error, Result};

/// Rule integers stay below 2^63.
pub const RULE_CAP: u64 = 1 << 63;

/// Radix, neighborhood extents, rule number, and lattice width. The boundary
/// is periodic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaConfig {
    eta: u64,
    left: u32,
    right: u32,
    rule: u64,
    width: usize,
}

impl CaConfig {
    pub fn new(eta: u64, left: u32, right: u32, rule: u64, width: usize) -> Result<Self> {
        if eta < 2 {
            return Err(Error::OutOfRange {
                what: "automaton radix",
                value: eta,
                max: u64::MAX,
            });
        }
        let window = left as u64 + right as u64 + 1;
        let neighborhoods = (window <= 64)
            .then(|| eta.checked_pow(window as u32))
            .flatten()
            .ok_or(Error::OutOfRange {
                what: "neighborhood window",
                value: window,
                max: 64,
            })?;
        // rule space η^(η^window) must stay within the cap; η ≥ 2 means more
        // than 63 neighborhoods always overflows it
        let max_rule = (neighborhoods <= 63)
            .then(|| checked_pow_u64(eta, neighborhoods))
            .flatten()
            .filter(|&space| space <= RULE_CAP)
            .ok_or(Error::OutOfRange {
                what: "rule space",
                value: neighborhoods,
                max: 63,
            })?;
        if rule >= max_rule {
            return Err(Error::OutOfRange {
                what: "rule",
                value: rule,
                max: max_rule - 1,
            });
        }
        if width < window as usize {
            return Err(Error::OutOfRange {
                what: "width",
                value: width as u64,
                max: u64::MAX,
            });
        }
        Ok(CaConfig {
            eta,
            left,
            right,
            rule,
            width,
        })
    }

    pub fn eta(&self) -> u64 {
        self.eta
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rule(&self) -> u64 {
        self.rule
    }

    fn check_row(&self, row: &[u64]) -> Result<()> {
        if row.len() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                got: row.len(),
            });
        }
        for (position, &cell) in row.iter().enumerate() {
            if cell >= self.eta {
                return Err(Error::DigitOutOfBounds {
                    position,
                    digit: cell,
                    radix: self.eta,
                });
            }
        }
        Ok(())
    }
}

fn checked_pow_u64(base: u64, exp: u64) -> Option<u64> {
    let mut result: u64 = 1;
    for _ in 0..exp {
        result = result.checked_mul(base)?;
    }
    Some(result)
}

/// One synchronous update of the whole row.
pub fn ca_step(cfg: &CaConfig, row: &[u64]) -> Result<Vec<u64>> {
    cfg.check_row(row)?;
    let width = cfg.width as i64;
    let mut next = Vec::with_capacity(cfg.width);
    for j in 0..width {
        let mut index: u64 = 0;
        let mut weight: u64 = 1;
        for k in -(cfg.right as i64)..=(cfg.left as i64) {
            let site = (j + k).rem_euclid(width) as usize;
            index += weight * row[site];
            weight *= cfg.eta;
        }
        next.push(digit(cfg.eta, index as u32, cfg.rule));
    }
    Ok(next)
}

/// Space-time diagram: `rows[0]` is the initial condition, followed by
/// `steps` updates.
pub fn ca_evolve(cfg: &CaConfig, init: &[u64], steps: usize) -> Result<Vec<Vec<u64>>> {
    cfg.check_row(init)?;
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(init.to_vec());
    for _ in 0..steps {
        let next = ca_step(cfg, rows.last().expect("nonempty"))?;
        rows.push(next);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_one(width: usize) -> Vec<u64> {
        let mut row = vec![0; width];
        row[width / 2] = 1;
        row
    }

    /// Truth-table oracle for binary radius-1 rules with the left neighbor in
    /// the least-significant position.
    fn oracle_step(rule: u64, row: &[u64]) -> Vec<u64> {
        let table: Vec<u64> = (0..8).map(|i| (rule >> i) & 1).collect();
        let w = row.len();
        (0..w)
            .map(|j| {
                let left = row[(j + w - 1) % w];
                let center = row[j];
                let right = row[(j + 1) % w];
                table[(left + 2 * center + 4 * right) as usize]
            })
            .collect()
    }

    #[test]
    fn zero_row_stays_zero_under_rule_110() {
        let cfg = CaConfig::new(2, 1, 1, 110, 16).unwrap();
        let row = vec![0; 16];
        assert_eq!(ca_step(&cfg, &row).unwrap(), row);
    }

    #[test]
    fn rule_zero_blanks_everything() {
        let cfg = CaConfig::new(2, 1, 1, 0, 9).unwrap();
        let rows = ca_evolve(&cfg, &single_one(9), 3).unwrap();
        assert_eq!(rows[0], single_one(9));
        for row in &rows[1..] {
            assert!(row.iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn max_rule_saturates_in_one_step() {
        let cfg = CaConfig::new(2, 1, 1, 255, 9).unwrap();
        let rows = ca_evolve(&cfg, &single_one(9), 2).unwrap();
        assert!(rows[1].iter().all(|&c| c == 1));
        let cfg3 = CaConfig::new(3, 1, 0, 3u64.pow(9) - 1, 5).unwrap();
        let rows3 = ca_evolve(&cfg3, &[0, 1, 2, 0, 0], 1).unwrap();
        assert!(rows3[1].iter().all(|&c| c == 2));
    }

    #[test]
    fn rule_110_matches_truth_table_oracle() {
        let cfg = CaConfig::new(2, 1, 1, 110, 31).unwrap();
        let mut row = single_one(31);
        for _ in 0..16 {
            let fast = ca_step(&cfg, &row).unwrap();
            let slow = oracle_step(110, &row);
            assert_eq!(fast, slow);
            row = fast;
        }
    }

    #[test]
    fn rule_number_roundtrip_reproduces_any_local_function() {
        // encode an arbitrary ternary local rule and check both routes agree
        let eta = 3u64;
        let local = |idx: u64| (idx * idx + 1) % eta;
        let window = 3u32;
        let count = eta.pow(window);
        let rule: u64 = (0..count).map(|idx| eta.pow(idx as u32) * local(idx)).sum();
        let cfg = CaConfig::new(eta, 1, 1, rule, 12).unwrap();
        let row: Vec<u64> = (0..12).map(|i| (i * 7 + 2) % eta).collect();
        let stepped = ca_step(&cfg, &row).unwrap();
        for j in 0..12 {
            let left = row[(j + 11) % 12];
            let center = row[j];
            let right = row[(j + 1) % 12];
            assert_eq!(stepped[j], local(left + 3 * center + 9 * right));
        }
    }

    #[test]
    fn output_stays_in_radix_range() {
        // η = 4 with a 2-cell window: 16 neighborhoods, rule space 4^16
        let cfg = CaConfig::new(4, 1, 0, 987_654_321, 10).unwrap();
        let row: Vec<u64> = (0..10).map(|i| i % 4).collect();
        for cell in ca_step(&cfg, &row).unwrap() {
            assert!(cell < 4);
        }
    }

    #[test]
    fn evolve_keeps_the_initial_row_first() {
        let cfg = CaConfig::new(2, 1, 1, 110, 9).unwrap();
        let rows = ca_evolve(&cfg, &single_one(9), 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0], single_one(9));
        assert_eq!(rows[1], ca_step(&cfg, &single_one(9)).unwrap());
    }

    #[test]
    fn config_guards() {
        assert!(CaConfig::new(1, 1, 1, 0, 8).is_err());
        assert!(CaConfig::new(2, 1, 1, 256, 8).is_err());
        assert!(CaConfig::new(2, 1, 1, 10, 2).is_err());
        // η = 2 with a 6-cell window needs 2^64 rules: over the cap
        assert!(CaConfig::new(2, 3, 2, 0, 16).is_err());
        assert!(CaConfig::new(2, 2, 2, 0, 16).is_ok());
        let cfg = CaConfig::new(2, 1, 1, 110, 8).unwrap();
        assert!(ca_step(&cfg, &[0; 7]).is_err());
        assert!(ca_step(&cfg, &[0, 0, 0, 0, 0, 0, 0, 2]).is_err());
    }
}
