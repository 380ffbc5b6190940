use super::{Bits, EdgeColoring, Grid, HeightFunction, IceOrientation};
use crate::error::{Error, Result};
use std::fmt;

/// An alternating sign matrix, validated on construction.
///
/// Entries are stored row-major with row 0 at the top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn new(n: usize, entries: Vec<i8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidAsm(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(v) = entries.iter().find(|v| !(-1..=1).contains(*v)) {
            return Err(Error::InvalidAsm(format!(
                "entry {v} is not in {{-1, 0, 1}}"
            )));
        }
        let check = |line: &mut dyn Iterator<Item = i8>, what: &str, k: usize| -> Result<()> {
            let mut partial = 0i32;
            for v in line {
                partial += v as i32;
                if !(0..=1).contains(&partial) {
                    return Err(Error::InvalidAsm(format!(
                        "{what} {k} does not alternate in sign"
                    )));
                }
            }
            if partial != 1 {
                return Err(Error::InvalidAsm(format!("{what} {k} sums to {partial}")));
            }
            Ok(())
        };
        for r in 0..n {
            check(&mut entries[r * n..(r + 1) * n].iter().copied(), "row", r)?;
        }
        for c in 0..n {
            check(&mut (0..n).map(|r| entries[r * n + c]), "column", c)?;
        }
        Ok(Asm { n, entries })
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidAsm(format!(
                "row {r} has {} entries, expected {n}",
                rows[r].len()
            )));
        }
        Asm::new(n, rows.concat())
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Self {
        debug_assert!(Asm::new(n, entries.clone()).is_ok());
        Asm { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Asm { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`, row 0 at the top.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.n).map(<[i8]>::to_vec).collect()
    }

    /// The square-ice orientation with domain-wall boundary whose `+1`
    /// vertices are vertical-out/horizontal-in and `-1` vertices the reverse.
    ///
    /// A horizontal edge points right exactly when the entries to its left in
    /// that row sum to 0; a vertical edge points up exactly when the entries
    /// below it in that column sum to 1.
    pub fn to_ice(&self) -> IceOrientation {
        let n = self.n;
        let g = Grid::new(n);
        let mut bits = Bits::zeros(g.num_edges());
        for y in 1..=n {
            let row = n - y;
            let mut partial = 0i32;
            for x in 0..=n {
                if x > 0 {
                    partial += self.get(row, x - 1) as i32;
                }
                bits.set(g.h(x, y), partial == 0);
            }
        }
        for x in 1..=n {
            let mut partial = 0i32;
            for y in 0..=n {
                if y > 0 {
                    partial += self.get(n - y, x - 1) as i32;
                }
                bits.set(g.v(x, y), partial == 1);
            }
        }
        IceOrientation::from_bits_unchecked(n, bits)
    }

    pub fn to_coloring(&self) -> EdgeColoring {
        self.to_ice().to_coloring()
    }

    /// Corner-sum height function `h(i, j) = i + j - 2 * sigma(i, j)`, where
    /// `sigma(i, j)` sums the entries in the top `i` rows and left `j` columns.
    pub fn to_height(&self) -> HeightFunction {
        let n = self.n;
        let w = n + 1;
        let mut sigma = vec![0i32; w * w];
        for i in 1..=n {
            for j in 1..=n {
                sigma[i * w + j] =
                    self.get(i - 1, j - 1) as i32 + sigma[(i - 1) * w + j] + sigma[i * w + j - 1]
                        - sigma[(i - 1) * w + j - 1];
            }
        }
        let entries = (0..w * w)
            .map(|k| (k / w + k % w) as i32 - 2 * sigma[k])
            .collect();
        HeightFunction::from_entries_unchecked(n, entries)
    }

    /// Rotation of the matrix by a half turn.
    pub fn rotated_half_turn(&self) -> Asm {
        let mut entries = self.entries.clone();
        entries.reverse();
        Asm { n: self.n, entries }
    }

    pub fn transposed(&self) -> Asm {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        Asm { n, entries }
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
