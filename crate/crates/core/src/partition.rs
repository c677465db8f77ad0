//! Integer partitions and their Young diagrams.
//!
//! Cells are addressed 1-based as `(row, col)`; `(r, c)` lies in the diagram
//! of `λ` iff `r ≥ 1`, `1 ≤ c ≤ λ_r`. Everything here works directly on the
//! diagram and never goes through beta-sets, so the rim-hook routines double
//! as an independent reference for the abacus code in [`crate::betaset`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// A partition stored as its positive parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from nonnegative parts, dropping trailing zeros.
    ///
    /// A zero followed by a positive part is rejected like any other increase.
    pub fn from_parts(raw: &[u64]) -> Result<Self> {
        let end = raw.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        let parts = &raw[..end];
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(CoreError::NonMonotone {
                index: i,
                value: parts[i],
                next: parts[i + 1],
            });
        }
        Ok(Self {
            parts: parts.to_vec(),
        })
    }

    /// Wraps parts already known to be positive and weakly decreasing.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// `λ_r` for 1-based `r`, zero past the last part.
    pub fn part(&self, r: usize) -> u64 {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && (c as u64) <= self.part(r)
    }

    /// All cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as usize).map(move |c| (i + 1, c)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p as usize >= c).count() as u64)
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook length `1 + (λ_r − r) + (λ'_c − c)` of the cell `(r, c)`.
    pub fn hook_length(&self, r: usize, c: usize) -> Result<u64> {
        if !self.contains_cell(r, c) {
            return Err(CoreError::OutOfDiagram { row: r, col: c });
        }
        let arm = self.part(r) - c as u64;
        let leg = self.parts[r..].iter().take_while(|&&p| p as usize >= c).count() as u64;
        Ok(1 + arm + leg)
    }

    /// Multiset of all hook lengths, sorted ascending.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut hooks: Vec<u64> = self
            .cells()
            .map(|(r, c)| 1 + (self.part(r) - c as u64) + (conj.part(c) - r as u64))
            .collect();
        hooks.sort_unstable();
        hooks
    }

    /// Removes the rim hook `{(i,j) ∈ [λ] : i ≥ r, j ≥ c, (i+1,j+1) ∉ [λ]}`.
    pub fn remove_rim_hook(&self, r: usize, c: usize) -> Result<Partition> {
        if !self.contains_cell(r, c) {
            return Err(CoreError::OutOfDiagram { row: r, col: c });
        }
        let c = c as u64;
        let mut parts = self.parts.clone();
        for i in r..=self.parts.len() {
            let here = self.part(i);
            // first removed column in row i
            let from = c.max(self.part(i + 1));
            if from <= here {
                parts[i - 1] = from - 1;
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition::from_sorted_unchecked(parts))
    }

    /// Row-major first cell whose hook length is exactly `len`.
    pub fn find_hook(&self, len: u64) -> Option<(usize, usize)> {
        let conj = self.conjugate();
        self.cells()
            .find(|&(r, c)| 1 + (self.part(r) - c as u64) + (conj.part(c) - r as u64) == len)
    }

    /// The `t`-core obtained by stripping rim `t`-hooks off the diagram.
    pub fn t_core_by_diagram(&self, t: u64) -> Result<Partition> {
        if t == 0 {
            return Err(CoreError::ZeroModulus);
        }
        if t == 1 {
            return Ok(Partition::empty());
        }
        let mut current = self.clone();
        while let Some((r, c)) = current.find_hook(t) {
            current = current.remove_rim_hook(r, c)?;
        }
        Ok(current)
    }

    /// True iff no hook length is divisible by any of `moduli`.
    pub fn avoids_hook_multiples(&self, moduli: &[u64]) -> bool {
        self.hook_lengths()
            .iter()
            .all(|h| moduli.iter().all(|&m| m == 0 || h % m != 0))
    }

    /// Parts joined by `+`, the empty partition as the empty string.
    pub fn to_csv_cell(&self) -> String {
        self.parts.iter().map(u64::to_string).collect::<Vec<_>>().join("+")
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = CoreError;

    fn try_from(raw: Vec<u64>) -> Result<Self> {
        Partition::from_parts(&raw)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
