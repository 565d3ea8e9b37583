use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// mu(1..=limit) from a linear sieve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusTable {
    limit: usize,
    // index 0 unused
    values: Vec<i8>,
}

impl MobiusTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// mu(n) for 1 <= n <= limit.
    pub fn get(&self, n: usize) -> Option<i8> {
        if n == 0 || n > self.limit {
            None
        } else {
            Some(self.values[n])
        }
    }

    /// Values mu(1), ..., mu(limit).
    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }

    pub(crate) fn require(&self, needed: usize) -> Result<()> {
        if needed > self.limit {
            return Err(Error::TableTooSmall {
                limit: self.limit,
                needed,
            });
        }
        Ok(())
    }
}

pub fn mobius_sieve(limit: usize) -> Result<MobiusTable> {
    if limit == 0 {
        return Err(Error::Domain {
            function: "mobius_sieve",
            detail: "limit must be at least 1".into(),
        });
    }
    let mut mu = vec![0i8; limit + 1];
    let mut composite = vec![false; limit + 1];
    let mut primes: Vec<usize> = Vec::new();
    mu[1] = 1;
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > limit {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                mu[m] = 0;
                break;
            }
            mu[m] = -mu[i];
        }
    }
    Ok(MobiusTable { limit, values: mu })
}
