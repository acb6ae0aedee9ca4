use std::collections::BTreeMap;

use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/lj_minima.txt");

/// Lowest known energy per cluster size.
///
/// Text format: one `N energy` pair per line; `#` starts a comment.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceMinima {
    energies: BTreeMap<usize, f64>,
}

impl ReferenceMinima {
    /// The table shipped with the crate (N = 2..42, 55, 65, 75).
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled reference table is well formed")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut energies = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Domain(format!("reference minima line {}: {raw:?}", lineno + 1));
            let mut it = line.split_whitespace();
            let n: usize = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let e: f64 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            if it.next().is_some() || !e.is_finite() {
                return Err(bad());
            }
            if energies.insert(n, e).is_some() {
                return Err(Error::Domain(format!("reference minima: duplicate entry for N = {n}")));
            }
        }
        Ok(ReferenceMinima { energies })
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.energies.get(&n).copied()
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.energies.keys().copied()
    }

    /// Whether energies fall strictly as N grows.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.energies
            .values()
            .zip(self.energies.values().skip(1))
            .all(|(a, b)| b < a)
    }
}
