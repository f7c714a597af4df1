//! Dense matrices over the two-element field.
//!
//! Each row is packed into a `u64` with column `c` stored at bit `c`, which
//! caps both dimensions at 64.

use std::fmt;

use thiserror::Error;

pub const MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("matrix dimensions {rows}x{cols} exceed the {MAX_DIM}x{MAX_DIM} limit")]
    TooLarge { rows: usize, cols: usize },
    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("row {row} has bits set beyond column {cols}")]
    StrayBits { row: usize, cols: usize },
    #[error("malformed bit row {0:?}")]
    Parse(String),
    #[error("column {col} out of range for {cols} columns")]
    ColumnOutOfRange { col: usize, cols: usize },
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    ncols: usize,
    rows: Vec<u64>,
}

/// Output of [`Gf2Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Reduced rows, nonzero rows first, same shape as the input.
    pub matrix: Gf2Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl Gf2Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Result<Self, Gf2Error> {
        Self::from_rows(vec![0; nrows], ncols)
    }

    pub fn identity(n: usize) -> Result<Self, Gf2Error> {
        Self::from_rows((0..n).map(|i| 1u64 << i).collect(), n)
    }

    pub fn from_rows(rows: Vec<u64>, ncols: usize) -> Result<Self, Gf2Error> {
        if rows.len() > MAX_DIM || ncols > MAX_DIM {
            return Err(Gf2Error::TooLarge { rows: rows.len(), cols: ncols });
        }
        let mask = low_mask(ncols);
        if let Some(row) = rows.iter().position(|r| r & !mask != 0) {
            return Err(Gf2Error::StrayBits { row, cols: ncols });
        }
        Ok(Gf2Matrix { ncols, rows })
    }

    /// Parses rows written as `0`/`1` strings, column 0 first.
    pub fn from_bit_strings<S: AsRef<str>>(lines: &[S], ncols: usize) -> Result<Self, Gf2Error> {
        let rows = lines
            .iter()
            .map(|l| parse_bit_row(l.as_ref(), ncols))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows, ncols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row] >> col & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        if value {
            self.rows[row] |= 1 << col;
        } else {
            self.rows[row] &= !(1 << col);
        }
    }

    /// Column `col` as a bit vector over the rows.
    pub fn column(&self, col: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | ((r >> col & 1) << i))
    }

    pub fn bit_strings(&self) -> Vec<String> {
        self.rows.iter().map(|&r| render_bit_row(r, self.ncols)).collect()
    }

    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivot_cols = Vec::new();
        let mut next = 0;
        for col in 0..self.ncols {
            let bit = 1u64 << col;
            let Some(p) = (next..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(next, p);
            let pivot = rows[next];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != next && *r & bit != 0 {
                    *r ^= pivot;
                }
            }
            pivot_cols.push(col);
            next += 1;
        }
        Rref {
            matrix: Gf2Matrix { ncols: self.ncols, rows },
            rank: pivot_cols.len(),
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.rows)
    }

    /// The nonzero rows of the reduced row echelon form.
    pub fn row_basis(&self) -> Vec<u64> {
        let r = self.rref();
        r.matrix.rows[..r.rank].to_vec()
    }

    /// All `2^rank - 1` nonzero vectors of the row space, in Gray-code order
    /// over the combination index of a row basis.
    pub fn row_space_vectors(&self) -> Vec<u64> {
        let basis = self.row_basis();
        let count = 1usize << basis.len();
        let mut out = Vec::with_capacity(count - 1);
        let mut v = 0u64;
        for k in 1..count {
            v ^= basis[k.trailing_zeros() as usize];
            out.push(v);
        }
        out
    }

    /// Permutes and row-reduces a full-row-rank matrix to `[I | D]`.
    ///
    /// Column `j` of the result is column `col_perm[j]` of `self`.
    ///
    /// Rows keep their order: row `i` pivots on its first nonzero column after
    /// eliminating earlier pivots, so an input that is already `[I | D]` comes
    /// back unchanged with the identity permutation.
    pub fn standard_form(&self) -> Result<(Gf2Matrix, Vec<usize>), Gf2Error> {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::with_capacity(rows.len());
        for i in 0..rows.len() {
            if rows[i] == 0 {
                return Err(Gf2Error::RankDeficient { rank: self.rank(), rows: self.nrows() });
            }
            let c = rows[i].trailing_zeros() as usize;
            let pivot = rows[i];
            for (j, r) in rows.iter_mut().enumerate() {
                if j != i && *r >> c & 1 == 1 {
                    *r ^= pivot;
                }
            }
            pivots.push(c);
        }
        let mut perm = pivots.clone();
        perm.extend((0..self.ncols).filter(|c| !pivots.contains(c)));
        let reduced = Gf2Matrix { ncols: self.ncols, rows };
        Ok((reduced.permute_columns(&perm), perm))
    }

    /// New matrix whose column `j` is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Gf2Matrix {
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                perm.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &c)| acc | ((r >> c & 1) << j))
            })
            .collect();
        Gf2Matrix { ncols: perm.len(), rows }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Gf2Matrix {
        self.permute_columns(cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Gf2Matrix {
        Gf2Matrix { ncols: self.ncols, rows: rows.iter().map(|&i| self.rows[i]).collect() }
    }

    pub fn remove_column(&self, col: usize) -> Gf2Matrix {
        let keep: Vec<usize> = (0..self.ncols).filter(|&c| c != col).collect();
        self.select_columns(&keep)
    }

    /// A full-row-rank matrix whose row space is the orthogonal complement of
    /// the row space of `self`, on the same column labelling.
    pub fn dual_representation(&self) -> Result<Gf2Matrix, Gf2Error> {
        let (std, perm) = self.standard_form()?;
        let r = std.nrows();
        let n = self.ncols;
        // In permuted coordinates the complement of [I | D] is [D^T | I].
        let mut rows = Vec::with_capacity(n - r);
        for j in r..n {
            let mut permuted = 1u64 << j;
            for (i, &row) in std.rows.iter().enumerate() {
                if row >> j & 1 == 1 {
                    permuted |= 1 << i;
                }
            }
            let original = (0..n).fold(0u64, |acc, k| acc | ((permuted >> k & 1) << perm[k]));
            rows.push(original);
        }
        Gf2Matrix::from_rows(rows, n)
    }

    /// True iff every row of `self` is orthogonal to every row of `other`.
    pub fn is_orthogonal_to(&self, other: &Gf2Matrix) -> bool {
        self.rows
            .iter()
            .all(|a| other.rows.iter().all(|b| (a & b).count_ones() % 2 == 0))
    }

    pub fn same_row_space(&self, other: &Gf2Matrix) -> bool {
        self.ncols == other.ncols && self.row_basis() == other.row_basis()
    }
}

pub fn rank_of_rows(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::with_capacity(rows.len());
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Rank of the columns in `mask` of the given rows.
pub fn masked_rank(rows: &[u64], mask: u64) -> usize {
    // Column rank equals row rank of the restricted matrix.
    let restricted: Vec<u64> = rows.iter().map(|r| r & mask).collect();
    rank_of_rows(&restricted)
}

pub fn parse_bit_row(s: &str, ncols: usize) -> Result<u64, Gf2Error> {
    let s = s.trim();
    if s.len() != ncols || ncols > MAX_DIM {
        return Err(Gf2Error::Parse(s.to_string()));
    }
    s.bytes().enumerate().try_fold(0u64, |acc, (i, b)| match b {
        b'0' => Ok(acc),
        b'1' => Ok(acc | 1 << i),
        _ => Err(Gf2Error::Parse(s.to_string())),
    })
}

pub fn render_bit_row(row: u64, ncols: usize) -> String {
    (0..ncols).map(|c| if row >> c & 1 == 1 { '1' } else { '0' }).collect()
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.nrows(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {}", render_bit_row(*r, self.ncols))?;
        }
        Ok(())
    }
}
