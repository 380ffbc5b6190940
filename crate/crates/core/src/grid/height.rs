use super::{Asm, Parity};
use crate::error::{Error, Result};

/// Corner-sum height function of an ASM: an `(n + 1) x (n + 1)` integer
/// matrix, row 0 at the top, with adjacent entries differing by exactly 1 and
/// boundary `h(0, j) = j`, `h(i, 0) = i`, `h(n, j) = n - j`, `h(i, n) = n - i`.
///
/// Entry `(row, col)` lies on the face `S(col, n - row)` of `L_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeightFunction {
    n: usize,
    entries: Vec<i32>,
}

impl HeightFunction {
    pub fn new(n: usize, entries: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let w = n + 1;
        if entries.len() != w * w {
            return Err(Error::InvalidHeight(format!(
                "expected {} entries, got {}",
                w * w,
                entries.len()
            )));
        }
        let at = |r: usize, c: usize| entries[r * w + c];
        for k in 0..=n {
            let want = [(0, k, k), (k, 0, k), (n, k, n - k), (k, n, n - k)];
            for (r, c, v) in want {
                if at(r, c) != v as i32 {
                    return Err(Error::InvalidHeight(format!(
                        "boundary entry ({r},{c}) is {}, expected {v}",
                        at(r, c)
                    )));
                }
            }
        }
        for r in 0..=n {
            for c in 0..=n {
                if c < n && (at(r, c) - at(r, c + 1)).abs() != 1 {
                    return Err(Error::InvalidHeight(format!(
                        "entries ({r},{c}) and ({r},{}) differ by more than 1",
                        c + 1
                    )));
                }
                if r < n && (at(r, c) - at(r + 1, c)).abs() != 1 {
                    return Err(Error::InvalidHeight(format!(
                        "entries ({r},{c}) and ({},{c}) differ by more than 1",
                        r + 1
                    )));
                }
            }
        }
        Ok(HeightFunction { n, entries })
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self> {
        let w = rows.len();
        if w < 2 || rows.iter().any(|r| r.len() != w) {
            return Err(Error::InvalidHeight(
                "height matrix must be square and at least 2x2".into(),
            ));
        }
        HeightFunction::new(w - 1, rows.concat())
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i32>) -> Self {
        debug_assert!(HeightFunction::new(n, entries.clone()).is_ok());
        HeightFunction { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i32 {
        self.entries[row * (self.n + 1) + col]
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [i32] {
        &mut self.entries
    }

    /// The face `S(i, j)` carrying entry `(row, col)`.
    pub fn square_of(&self, row: usize, col: usize) -> (usize, usize) {
        (col, self.n - row)
    }

    /// Parity of the face carrying entry `(row, col)`.
    pub fn entry_parity(&self, row: usize, col: usize) -> Parity {
        Parity::of(col + self.n - row)
    }

    /// Inverts the corner sums: `a(i, j)` is the mixed difference of
    /// `sigma = (i + j - h) / 2`.
    pub fn to_asm(&self) -> Asm {
        let n = self.n;
        let w = n + 1;
        let sigma = |r: usize, c: usize| (r as i32 + c as i32 - self.entries[r * w + c]) / 2;
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let v = sigma(i, j) - sigma(i - 1, j) - sigma(i, j - 1) + sigma(i - 1, j - 1);
                entries.push(v as i8);
            }
        }
        Asm::from_entries_unchecked(n, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_round_trips() {
        let h = HeightFunction::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(h.to_asm(), Asm::identity(1));
        let h = HeightFunction::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]).unwrap();
        assert_eq!(h.to_asm(), Asm::identity(2));
    }

    #[test]
    fn rejects_invalid() {
        assert!(HeightFunction::from_rows(&[vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 0]]).is_ok());
        // bad boundary
        assert!(HeightFunction::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 2]]).is_err());
        // interior jump of 2 cannot happen with fixed parity, but a wrong parity entry is caught
        assert!(HeightFunction::from_rows(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]]).is_err());
        assert!(HeightFunction::from_rows(&[vec![0]]).is_err());
    }
}
