use alloc::collections::BTreeMap;

use crate::{Color, Error, FiberRenaming, Result, Vertex};

/// Degeneracy budget `f_i(v)` for colors `1..=s`, every value at most `cap`.
///
/// Stored sparsely; entries never set read as 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    s: usize,
    cap: u32,
    values: BTreeMap<(Vertex, Color), u32>,
}

impl Budget {
    pub fn new(s: usize, cap: u32) -> Self {
        Budget { s, cap, values: BTreeMap::new() }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn set(&mut self, v: Vertex, color: Color, value: u32) -> Result<()> {
        if color == 0 || color > self.s {
            return Err(Error::ColorOutOfRange { color, s: self.s });
        }
        if value > self.cap {
            return Err(Error::BudgetAboveCap { vertex: v, color, value, cap: self.cap });
        }
        if value == 0 {
            self.values.remove(&(v, color));
        } else {
            self.values.insert((v, color), value);
        }
        Ok(())
    }

    pub fn get(&self, v: Vertex, color: Color) -> u32 {
        self.values.get(&(v, color)).copied().unwrap_or(0)
    }

    /// `|f(v)|`, the sum over all colors.
    pub fn total(&self, v: Vertex) -> u32 {
        self.values.range((v, 0)..(v + 1, 0)).map(|(_, &x)| x).sum()
    }

    /// `|f(v)|` counting only colors of `list`; budget on colors outside the
    /// list of `v` can never be used.
    pub fn usable_total<'a>(&self, v: Vertex, list: impl IntoIterator<Item = &'a Color>) -> u32 {
        list.into_iter().map(|&c| self.get(v, c)).sum()
    }

    /// Nonzero entries of vertex `v` as `(color, value)`, ascending by color.
    pub fn entries(&self, v: Vertex) -> impl Iterator<Item = (Color, u32)> + '_ {
        self.values.range((v, 0)..(v + 1, 0)).map(|(&(_, c), &x)| (c, x))
    }

    /// All nonzero entries as `(vertex, color, value)`.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Color, u32)> + '_ {
        self.values.iter().map(|(&(v, c), &x)| (v, c, x))
    }

    /// Pointwise `self <= other` on every entry.
    pub fn le(&self, other: &Budget) -> bool {
        self.iter().all(|(v, c, x)| x <= other.get(v, c))
    }

    /// Copy with the color labels of each renamed fiber permuted.
    pub fn renamed(&self, renaming: &FiberRenaming) -> Budget {
        let mut out = Budget::new(self.s, self.cap);
        for (v, c, x) in self.iter() {
            out.values.insert((v, renaming.forward(v, c)), x);
        }
        out
    }

    /// Same values restricted to vertices accepted by `keep`.
    pub fn restricted(&self, mut keep: impl FnMut(Vertex) -> bool) -> Budget {
        let mut out = Budget::new(self.s, self.cap);
        out.values = self.values.iter().filter(|(&(v, _), _)| keep(v)).map(|(&k, &x)| (k, x)).collect();
        out
    }
}
