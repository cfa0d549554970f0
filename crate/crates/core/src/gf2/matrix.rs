use std::fmt;

use super::BitVec;
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(2). Each row is a packed [`BitVec`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// Reduced row echelon form together with its pivot structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Elimination state used by `solve`: the nonzero rows of the RREF, their
/// pivot columns, and for each one the combination of original rows that
/// produced it.
struct Basis {
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    combos: Vec<BitVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length must equal column count");
        }
        Self { cols, rows }
    }

    /// Parses rows written as `0`/`1` strings, e.g. `["110", "011"]`.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.parse::<BitVec>())
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, BitVec::len);
        if let Some(bad) = parsed.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                context: "matrix rows",
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows: parsed })
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_bools(&self.rows.iter().map(|r| r.get(j)).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones_iter() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Number of ones on the main diagonal.
    pub fn diagonal_weight(&self) -> usize {
        (0..self.nrows().min(self.cols))
            .filter(|&i| self.get(i, i))
            .count()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.combine_rows(r))
            .collect();
        Ok(Matrix::from_rows(other.cols, rows))
    }

    /// `xᵀ·M`: XOR of the rows selected by `x`. Panics on length mismatch.
    pub fn combine_rows(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.nrows(), "selector length must equal row count");
        let mut acc = BitVec::zeros(self.cols);
        for i in x.ones_iter() {
            acc ^= &self.rows[i];
        }
        acc
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "stacked matrix columns",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Matrix::from_rows(self.cols, rows))
    }

    /// Column `i` of the result is column `perm[i]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix {
        Matrix::from_rows(perm.len(), self.rows.iter().map(|r| r.gather(perm)).collect())
    }

    /// Simultaneous row and column relabelling: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Matrix {
        Matrix::from_rows(
            perm.len(),
            perm.iter().map(|&p| self.rows[p].gather(perm)).collect(),
        )
    }

    fn eliminate(&self, track: bool) -> Basis {
        let n = self.nrows();
        let mut rows = self.rows.clone();
        let mut combos: Vec<BitVec> = if track {
            (0..n).map(|i| BitVec::unit(n, i)).collect()
        } else {
            Vec::new()
        };
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == n {
                break;
            }
            let Some(p) = (r..n).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            if track {
                combos.swap(r, p);
            }
            let (pivot_row, pivot_combo) = (rows[r].clone(), combos.get(r).cloned());
            for i in 0..n {
                if i != r && rows[i].get(c) {
                    rows[i] ^= &pivot_row;
                    if let Some(pc) = &pivot_combo {
                        combos[i] ^= pc;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        combos.truncate(r);
        Basis {
            rows,
            pivots,
            combos,
        }
    }

    /// Reduced row echelon form. Pivots are chosen column by column from the
    /// left, taking the topmost remaining row with a one in that column.
    pub fn rref(&self) -> Rref {
        let basis = self.eliminate(false);
        let rank = basis.rows.len();
        let mut rows = basis.rows;
        rows.resize(self.nrows(), BitVec::zeros(self.cols));
        Rref {
            matrix: Matrix::from_rows(self.cols, rows),
            rank,
            pivots: basis.pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.eliminate(false).rows.len()
    }

    /// Finds `x` with `xᵀ·M = b`, i.e. a set of rows whose XOR is `b`.
    ///
    /// Only rows that become pivot rows during elimination may appear in the
    /// answer; every other (free) coefficient is zero.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>> {
        if b.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "right-hand side",
                expected: self.cols,
                found: b.len(),
            });
        }
        let basis = self.eliminate(true);
        let mut residual = b.clone();
        let mut x = BitVec::zeros(self.nrows());
        for ((row, &pivot), combo) in basis.rows.iter().zip(&basis.pivots).zip(&basis.combos) {
            if residual.get(pivot) {
                residual ^= row;
                x ^= combo;
            }
        }
        Ok(residual.is_zero().then_some(x))
    }

    /// Determinant over GF(2).
    pub fn det_mod2(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.cols,
            });
        }
        Ok(self.rank() == self.nrows())
    }

    pub fn row_space_contains(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "row space membership",
                expected: self.cols,
                found: v.len(),
            });
        }
        let basis = self.eliminate(false);
        let mut residual = v.clone();
        for (row, &pivot) in basis.rows.iter().zip(&basis.pivots) {
            if residual.get(pivot) {
                residual ^= row;
            }
        }
        Ok(residual.is_zero())
    }

    pub fn row_spaces_equal(&self, other: &Matrix) -> Result<bool> {
        let stacked = self.stack(other)?;
        let r = stacked.rank();
        Ok(self.rank() == r && other.rank() == r)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.nrows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> Matrix {
        Matrix::parse_rows(rows).unwrap()
    }

    fn bv(s: &str) -> BitVec {
        s.parse().unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3);
        let r = id.rref();
        assert_eq!((r.matrix, r.rank, r.pivots), (id, 3, vec![0, 1, 2]));

        let z = Matrix::zeros(2, 2);
        let r = z.rref();
        assert_eq!((r.matrix, r.rank, r.pivots), (z, 0, vec![]));

        let r = m(&["11", "11"]).rref();
        assert_eq!(r.matrix, m(&["11", "00"]));
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
    }

    #[test]
    fn rref_of_rectangular_matrix() {
        let r = m(&["0110", "0011", "0101"]).rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![1, 2]);
        assert_eq!(r.matrix, m(&["0101", "0011", "0000"]));
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(4);
        assert_eq!(id.solve(&bv("1010")).unwrap(), Some(bv("1010")));
        assert_eq!(Matrix::zeros(2, 2).solve(&bv("10")).unwrap(), None);
        // Row space of [[1,1],[1,1]] is {00, 11}; free coefficient of row 1 is zero.
        assert_eq!(m(&["11", "11"]).solve(&bv("11")).unwrap(), Some(bv("10")));
    }

    #[test]
    fn solve_rejects_wrong_length() {
        let err = Matrix::identity(3).solve(&bv("10")).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn det_examples() {
        assert!(Matrix::identity(5).det_mod2().unwrap());
        assert!(!m(&["11", "11"]).det_mod2().unwrap());
        assert!(matches!(
            Matrix::zeros(2, 3).det_mod2(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    /// Determinant mod 2 by summing all permutation products (permanent and
    /// determinant agree mod 2).
    fn permutation_expansion(a: &Matrix) -> bool {
        fn rec(a: &Matrix, row: usize, used: &mut Vec<bool>) -> u32 {
            let n = a.nrows();
            if row == n {
                return 1;
            }
            let mut total = 0;
            for c in 0..n {
                if !used[c] && a.get(row, c) {
                    used[c] = true;
                    total += rec(a, row + 1, used);
                    used[c] = false;
                }
            }
            total
        }
        rec(a, 0, &mut vec![false; a.nrows()]) % 2 == 1
    }

    #[test]
    fn det_of_looped_2x2_grid_matches_expansion() {
        // Row-major 2x2 grid with loops: 0-1, 0-2, 1-3, 2-3.
        let a = m(&["1110", "1101", "1011", "0111"]);
        assert!(permutation_expansion(&a));
        assert!(a.det_mod2().unwrap());
    }

    #[test]
    fn row_space_membership() {
        let a = m(&["11", "11"]);
        assert!(a.row_space_contains(&bv("00")).unwrap());
        assert!(!a.row_space_contains(&bv("01")).unwrap());
        assert!(Matrix::identity(3).row_space_contains(&bv("111")).unwrap());
        assert!(a.row_space_contains(&bv("011")).is_err());
    }

    #[test]
    fn row_space_equality() {
        let id = Matrix::identity(2);
        assert!(id.row_spaces_equal(&m(&["11", "01"])).unwrap());
        assert!(!id.row_spaces_equal(&m(&["11", "11"])).unwrap());
        let a = m(&["101", "110", "011"]);
        assert!(a.row_spaces_equal(&a.rref().matrix).unwrap());
        assert!(id.row_spaces_equal(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn transpose_and_product() {
        let a = m(&["110", "011"]);
        assert_eq!(a.transpose(), m(&["10", "11", "01"]));
        let ata = a.transpose().mul(&a).unwrap();
        assert!(ata.is_symmetric());
        assert_eq!(ata, m(&["110", "101", "011"]));
    }
}
