//! Closure of a seed factorization under rotation, transpose-reversal and the
//! block rearrangements, deduplicated by canonical key.

use std::collections::HashSet;

use crate::{Error, Result};

use super::{block_family_of, canonical_key, rotations, transpose_reversal, Factorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitLimits {
    /// Maximum number of expansion rounds.
    pub depth: usize,
    /// Maximum number of distinct members.
    pub set_size: usize,
}

impl Default for OrbitLimits {
    fn default() -> Self {
        OrbitLimits {
            depth: 4,
            set_size: 10_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    /// Distinct members in discovery order; the seed comes first.
    pub members: Vec<Factorization>,
    /// True when a fixpoint was reached within the limits. Otherwise the
    /// count is only a lower bound on the closure size.
    pub complete: bool,
    /// Expansion rounds performed.
    pub rounds: usize,
}

impl OrbitReport {
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// Every factorization reachable from `fac` in one step.
fn neighbours(fac: &Factorization) -> Result<Vec<Factorization>> {
    let mut out = rotations(fac)?;
    out.push(transpose_reversal(fac)?);
    if fac.len() == 2 && fac.size().is_multiple_of(2) {
        match block_family_of(fac) {
            Ok(family) => out.extend(family.items),
            Err(Error::Hypothesis(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Breadth-first closure of `seed`. Discovery order, and therefore the
/// member list, depends only on the seed and the limits.
pub fn orbit(seed: &Factorization, limits: OrbitLimits) -> Result<OrbitReport> {
    seed.ensure_verified()?;
    let mut seen = HashSet::new();
    let mut members = Vec::new();
    seen.insert(canonical_key(seed));
    let mut seed = seed.clone();
    seed.verified = true;
    members.push(seed);

    let mut frontier = 0..members.len();
    let mut rounds = 0;
    while !frontier.is_empty() {
        if rounds == limits.depth {
            return Ok(OrbitReport {
                members,
                complete: false,
                rounds,
            });
        }
        rounds += 1;
        let start = members.len();
        for i in frontier {
            for next in neighbours(&members[i])? {
                if seen.insert(canonical_key(&next)) {
                    if members.len() == limits.set_size {
                        return Ok(OrbitReport {
                            members,
                            complete: false,
                            rounds,
                        });
                    }
                    members.push(next);
                }
            }
        }
        frontier = start..members.len();
    }
    Ok(OrbitReport {
        members,
        complete: true,
        rounds,
    })
}
