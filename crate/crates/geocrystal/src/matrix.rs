//! Matrices over a semifield, whirls, the product `M(x)`, minors and the
//! dagger/`H` machinery.
//!
//! Indices in this module are 0-based. The formulas in the docs use the usual
//! 1-based mathematical convention; `E_{i,j}` with 1-based `(i, j)` lives at
//! `(i - 1, j - 1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Rational, Semifield};
use crate::error::{Error, Result};

/// Dense `rows x cols` matrix over `S`.
///
/// Entries are `Option<S>`: `None` is the additive zero. The tropical
/// semifield has no absorbing element for `min`, so structural zeros need an
/// explicit marker; for rationals, a stored zero is normalized to `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct SfMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<Option<S>>,
}

impl<S: Semifield> SfMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SfMatrix { rows, cols, entries: vec![None; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = Self::zeros(n, n);
        for i in 0..n {
            a.set(i, i, Some(S::one()));
        }
        a
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Option<S>) -> Self {
        let mut a = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                a.set(i, j, f(i, j));
            }
        }
        a
    }

    /// Builds from fully populated rows (no structural zeros except rational 0).
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| Some(rows[i][j].clone())))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&S> {
        self.entries[i * self.cols + j].as_ref()
    }

    pub fn set(&mut self, i: usize, j: usize, v: Option<S>) {
        self.entries[i * self.cols + j] = v.filter(|x| !x.is_zero());
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).cloned())
    }

    /// Semifield matrix product; `None` entries are skipped.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc: Option<S> = None;
                for k in 0..self.cols {
                    if let (Some(a), Some(b)) = (self.get(i, k), rhs.get(k, j)) {
                        let t = a.mul(b);
                        acc = Some(match acc {
                            None => t,
                            Some(s) => s.add(&t),
                        });
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn map<T: Semifield>(&self, f: impl Fn(&S) -> T) -> SfMatrix<T> {
        SfMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).map(&f))
    }
}

impl SfMatrix<Rational> {
    /// Entry with `None` read as zero.
    pub fn at(&self, i: usize, j: usize) -> Rational {
        self.get(i, j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.at(i, j)).collect()).collect()
    }

    pub fn add_matrix(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| Some(self.at(i, j) + rhs.at(i, j)))
    }

    /// Minor `Δ_{I,J}` with 0-based sorted index sets; `Δ_∅ = 1`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rational> {
        if rows.len() != cols.len() {
            return Err(Error::Dimension("minor index sets differ in size".into()));
        }
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(Error::Dimension("minor index out of range".into()));
        }
        let sub: Vec<Vec<Rational>> = rows.iter().map(|&i| cols.iter().map(|&j| self.at(i, j)).collect()).collect();
        Ok(determinant(&sub))
    }

    /// Flag minor `Δ_I = Δ_{I,[1,|I|]}`.
    pub fn flag_minor(&self, rows: &[usize]) -> Result<Rational> {
        let cols: Vec<usize> = (0..rows.len()).collect();
        self.minor(rows, &cols)
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        Ok(determinant(&self.to_dense()))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| Rational::from(i64::from(i == j))).collect()).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv();
            for k in 0..n {
                a[col][k] = &a[col][k] * &p;
                inv[col][k] = &inv[col][k] * &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in 0..n {
                        a[r][k] = &a[r][k] - &(&f * &a[col][k]);
                        inv[r][k] = &inv[r][k] - &(&f * &inv[col][k]);
                    }
                }
            }
        }
        Ok(Self::from_fn(n, n, |i, j| Some(inv[i][j].clone())))
    }
}

impl<S: Semifield> fmt::Debug for SfMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                match self.get(i, j) {
                    Some(v) => write!(f, "{v}")?,
                    None => write!(f, "0")?,
                }
            }
        }
        write!(f, "]")
    }
}

/// JSON form `{"rows", "cols", "entries"}`; structural zeros are `"0"` for
/// rationals and `null` in tropical mode.
#[derive(Serialize, Deserialize)]
struct MatrixJson<S> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Option<S>>>,
}

impl<S: Semifield + Serialize> Serialize for SfMatrix<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let entries = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).cloned().or_else(S::additive_zero)).collect())
            .collect();
        MatrixJson { rows: self.rows, cols: self.cols, entries }.serialize(s)
    }
}

impl<'de, S: Semifield + Deserialize<'de>> Deserialize<'de> for SfMatrix<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::<S>::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(serde::de::Error::custom("entries do not match rows/cols"));
        }
        Ok(SfMatrix::from_fn(raw.rows, raw.cols, |i, j| raw.entries[i][j].clone()))
    }
}

// ---------------------------------------------------------------------------
// Grids

/// An `m x n` grid `x = (x_i^j)` of nonzero semifield values.
///
/// Row `a` (0-based) is `x_{a+1}`; column `b` is `x^{b+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grid<S> {
    m: usize,
    n: usize,
    data: Vec<S>,
}

impl<S: Semifield> Grid<S> {
    pub fn new(rows: Vec<Vec<S>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::Dimension("grid must be at least 1x1".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged grid rows".into()));
        }
        Ok(Grid { m, n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(m * n);
        for a in 0..m {
            for b in 0..n {
                data.push(f(a, b));
            }
        }
        Grid { m, n, data }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> &S {
        &self.data[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: S) {
        self.data[a * self.n + b] = v;
    }

    pub fn row(&self, a: usize) -> &[S] {
        &self.data[a * self.n..(a + 1) * self.n]
    }

    pub fn set_row(&mut self, a: usize, v: &[S]) {
        self.data[a * self.n..(a + 1) * self.n].clone_from_slice(v);
    }

    pub fn col(&self, b: usize) -> Vec<S> {
        (0..self.m).map(|a| self.get(a, b).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<S>> {
        (0..self.m).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Grid::from_fn(self.n, self.m, |a, b| self.get(b, a).clone())
    }

    pub fn map<T: Semifield>(&self, f: impl Fn(&S) -> T) -> Grid<T> {
        Grid { m: self.m, n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    /// Entrywise inverse.
    pub fn inverted(&self) -> Self {
        self.map(|v| v.inv())
    }

    /// Loop variable `x_i^{(r)} = x_i^{r - i + 1}`, superscript mod `n` (1-based `i`, any `r`).
    pub fn loop_var(&self, i: usize, r: i64) -> &S {
        let b = (r - i as i64).rem_euclid(self.n as i64) as usize;
        self.get(i - 1, b)
    }
}

impl<S: Semifield> fmt::Debug for Grid<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.m).map(|a| self.row(a))).finish()
    }
}

impl<S: Semifield + Serialize> Serialize for Grid<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let entries = self.rows_vec().into_iter().map(|r| r.into_iter().map(Some).collect()).collect();
        MatrixJson { rows: self.m, cols: self.n, entries }.serialize(s)
    }
}

impl<'de, S: Semifield + Deserialize<'de>> Deserialize<'de> for Grid<S> {
    /// Accepts either a bare array of rows or the `{"rows","cols","entries"}` object.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw<S> {
            Bare(Vec<Vec<S>>),
            Obj(MatrixJson<S>),
        }
        let rows = match Raw::<S>::deserialize(d)? {
            Raw::Bare(rows) => rows,
            Raw::Obj(o) => {
                let mut rows = Vec::with_capacity(o.rows);
                for r in o.entries {
                    let mut row = Vec::with_capacity(r.len());
                    for v in r {
                        row.push(v.ok_or_else(|| serde::de::Error::custom("grid entries must be present"))?);
                    }
                    rows.push(row);
                }
                if rows.len() != o.rows || rows.iter().any(|r| r.len() != o.cols) {
                    return Err(serde::de::Error::custom("entries do not match rows/cols"));
                }
                rows
            }
        };
        Grid::new(rows).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Whirls and M(x)

/// `W(x)`: `x` on the diagonal, ones directly beneath it.
///
/// ```
/// use geocrystal::{whirl, Rational};
/// let r = |v| Rational::from(v);
/// let m = whirl(&[r(1), r(2)]).mul(&whirl(&[r(3), r(4)])).unwrap();
/// assert_eq!(m.to_dense(), vec![vec![r(3), r(0)], vec![r(5), r(8)]]);
/// ```
pub fn whirl<S: Semifield>(x: &[S]) -> SfMatrix<S> {
    let n = x.len();
    SfMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Some(x[i].clone())
        } else if i == j + 1 {
            Some(S::one())
        } else {
            None
        }
    })
}

/// `W^i(z_i, ..., z_n)` for 1-based `i`: identity in the first `i - 1` slots,
/// diagonal `z_k` for `k >= i`, ones at `E_{k+1,k}` for `i <= k <= n - 1`.
pub fn wi_matrix<S: Semifield>(n: usize, i: usize, z: &[S]) -> Result<SfMatrix<S>> {
    if i == 0 || i > n || z.len() != n + 1 - i {
        return Err(Error::Dimension(format!("W^{i} needs {} values for n = {n}", n + 1 - i.min(n + 1))));
    }
    let s = i - 1;
    Ok(SfMatrix::from_fn(n, n, |r, c| {
        if r == c {
            Some(if r < s { S::one() } else { z[r - s].clone() })
        } else if r == c + 1 && c >= s {
            Some(S::one())
        } else {
            None
        }
    }))
}

/// `M(x) = W(x_1) ... W(x_m)`, an `n x n` matrix.
///
/// Computed from the closed form `M_{ij} = E^{(i)}_{m+j-i}`, which is
/// subtraction-free and works over either semifield.
///
/// ```
/// use geocrystal::{m_of, Grid, Rational};
/// let r = |v| Rational::from(v);
/// let x = Grid::new(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap();
/// assert_eq!(m_of(&x).to_dense(), vec![vec![r(3), r(0)], vec![r(5), r(8)]]);
/// ```
pub fn m_of<S: Semifield>(x: &Grid<S>) -> SfMatrix<S> {
    let n = x.n();
    periodic_window(x, 1..=n as i64, 1..=n as i64)
}

/// `M(x)` as the literal product of whirls, used as an independent check.
pub fn m_of_product<S: Semifield>(x: &Grid<S>) -> SfMatrix<S> {
    (0..x.m()).fold(SfMatrix::identity(x.n()), |acc, a| acc.mul(&whirl(x.row(a))).expect("square factors"))
}

/// Prefix products `M_k = W(x_1) ... W(x_k)` for `k = 1..=m`.
pub fn prefix_products<S: Semifield>(x: &Grid<S>) -> Vec<SfMatrix<S>> {
    let mut out = Vec::with_capacity(x.m());
    let mut acc = SfMatrix::identity(x.n());
    for a in 0..x.m() {
        acc = acc.mul(&whirl(x.row(a))).expect("square factors");
        out.push(acc.clone());
    }
    out
}

/// Loop elementary symmetric value `E_k^{(r)}(x) = Σ_{i_1<...<i_k} x_{i_1}^{(r)} x_{i_2}^{(r+1)} ...`,
/// `None` when it is the zero function (`k < 0` or `k > m`).
pub fn loop_e_value<S: Semifield>(x: &Grid<S>, k: i64, r: i64) -> Option<S> {
    let m = x.m() as i64;
    if k < 0 || k > m {
        return None;
    }
    if k == 0 {
        return Some(S::one());
    }
    let k = k as usize;
    // dp[t] = sum over chosen i_1 < ... < i_t among rows seen so far.
    let mut dp: Vec<Option<S>> = vec![None; k + 1];
    dp[0] = Some(S::one());
    for i in 1..=x.m() {
        for t in (1..=k).rev() {
            if let Some(prev) = &dp[t - 1] {
                let term = prev.mul(x.loop_var(i, r + t as i64 - 1));
                dp[t] = Some(match dp[t].take() {
                    None => term,
                    Some(s) => s.add(&term),
                });
            }
        }
    }
    dp[k].take()
}

/// Window of the `n`-periodic matrix `M̃ = W̃(x_1) ... W̃(x_m)` with entries
/// `M̃_{ij} = E^{(i)}_{m+j-i}`; 1-based inclusive index ranges, any integers.
pub fn periodic_window<S: Semifield>(
    x: &Grid<S>,
    rows: std::ops::RangeInclusive<i64>,
    cols: std::ops::RangeInclusive<i64>,
) -> SfMatrix<S> {
    let (r0, c0) = (*rows.start(), *cols.start());
    let nr = (rows.end() - r0 + 1).max(0) as usize;
    let nc = (cols.end() - c0 + 1).max(0) as usize;
    let m = x.m() as i64;
    SfMatrix::from_fn(nr, nc, |a, b| {
        let i = r0 + a as i64;
        let j = c0 + b as i64;
        loop_e_value(x, m + j - i, i)
    })
}

/// `H(a) = Σ_{i<=j} a^i ... a^j E_{ij}`, upper triangular.
pub fn h_matrix<S: Semifield>(a: &[S]) -> SfMatrix<S> {
    let n = a.len();
    SfMatrix::from_fn(n, n, |i, j| (i <= j).then(|| S::product(&a[i..=j])))
}

/// `A† = (A^{-1})^t` with row and column `i` scaled by `(-1)^{i-1}`.
pub fn dagger(a: &SfMatrix<Rational>) -> Result<SfMatrix<Rational>> {
    let inv = a.inverse()?.transpose();
    Ok(SfMatrix::from_fn(a.rows(), a.cols(), |i, j| {
        let v = inv.at(i, j);
        Some(if (i + j) % 2 == 1 { -v } else { v })
    }))
}

// ---------------------------------------------------------------------------
// Determinants

/// Exact determinant; Laplace expansion up to 4x4, elimination above.
pub fn determinant(a: &[Vec<Rational>]) -> Rational {
    if a.len() <= 4 {
        det_laplace(a)
    } else {
        det_gauss(a)
    }
}

/// Cofactor expansion along the first row.
pub fn det_laplace(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    match n {
        0 => Rational::from(1),
        1 => a[0][0].clone(),
        2 => &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]),
        _ => {
            let mut acc = Rational::zero();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Rational>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &a[0][j] * &det_laplace(&sub);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Gaussian elimination with exact fractions.
pub fn det_gauss(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut a: Vec<Vec<Rational>> = a.to_vec();
    let mut det = Rational::from(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det = &det * &a[col][col];
        let p = a[col][col].inv();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &p;
            let (top, rest) = a.split_at_mut(r);
            for (v, u) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *v = &*v - &(&f * u);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TropInt;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn grid(rows: &[&[i64]]) -> Grid<Rational> {
        Grid::new(rows.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn whirl_shape() {
        let w = whirl(&[r(2), r(3), r(5)]);
        assert_eq!(w.to_dense(), vec![vec![r(2), r(0), r(0)], vec![r(1), r(3), r(0)], vec![r(0), r(1), r(5)]]);
        assert_eq!(whirl(&[r(7)]).to_dense(), vec![vec![r(7)]]);
    }

    #[test]
    fn m_of_matches_product() {
        let x = grid(&[&[1, 2], &[3, 4]]);
        assert_eq!(m_of(&x).to_dense(), vec![vec![r(3), r(0)], vec![r(5), r(8)]]);
        let x = grid(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(m_of(&x), m_of_product(&x));
        let x1 = grid(&[&[2, 7, 3]]);
        assert_eq!(m_of(&x1), whirl(x1.row(0)));
    }

    #[test]
    fn m_of_tropical_matches_product() {
        let x = Grid::new(vec![
            vec![TropInt::from(1), TropInt::from(4), TropInt::from(0)],
            vec![TropInt::from(2), TropInt::from(1), TropInt::from(3)],
        ])
        .unwrap();
        assert_eq!(m_of(&x), m_of_product(&x));
    }

    #[test]
    fn minors() {
        let a = m_of(&grid(&[&[1, 2], &[3, 4]]));
        assert_eq!(a.minor(&[], &[]).unwrap(), r(1));
        assert_eq!(a.minor(&[0, 1], &[0, 1]).unwrap(), r(24));
        let b = m_of(&grid(&[&[1, 2, 3], &[4, 5, 6]]));
        let sub = vec![vec![b.at(1, 0), b.at(1, 1)], vec![b.at(2, 0), b.at(2, 1)]];
        assert_eq!(b.minor(&[1, 2], &[0, 1]).unwrap(), det_gauss(&sub));
    }

    #[test]
    fn laplace_and_gauss_agree() {
        let a: Vec<Vec<Rational>> = (0..5)
            .map(|i| (0..5).map(|j| Rational::new(((i * 7 + j * 3) % 11) as i64 - 4, (j + 1) as i64)).collect())
            .collect();
        assert_eq!(det_laplace(&a), det_gauss(&a));
    }

    #[test]
    fn wi_examples() {
        let w = wi_matrix(2, 2, &[r(5)]).unwrap();
        assert_eq!(w.to_dense(), vec![vec![r(1), r(0)], vec![r(0), r(5)]]);
        let w1 = wi_matrix(3, 1, &[r(2), r(3), r(4)]).unwrap();
        assert_eq!(w1, whirl(&[r(2), r(3), r(4)]));
        assert!(wi_matrix(3, 2, &[r(1)]).is_err());
    }

    #[test]
    fn dagger_examples() {
        let d = SfMatrix::from_rows(vec![vec![r(2), r(0)], vec![r(0), r(3)]]).unwrap();
        assert_eq!(
            dagger(&d).unwrap().to_dense(),
            vec![vec![Rational::new(1, 2), r(0)], vec![r(0), Rational::new(1, 3)]]
        );
        let xs = [r(2), r(3), r(5)];
        let inv: Vec<Rational> = xs.iter().map(|v| v.inv()).collect();
        assert_eq!(dagger(&whirl(&xs)).unwrap(), h_matrix(&inv));
        let h = h_matrix(&[r(2), r(3)]);
        assert_eq!(h.to_dense(), vec![vec![r(2), r(6)], vec![r(0), r(3)]]);
        let sing = SfMatrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)]]).unwrap();
        assert_eq!(dagger(&sing), Err(Error::SingularMatrix));
    }

    #[test]
    fn window_periodicity() {
        let x = grid(&[&[2, 3], &[5, 7], &[11, 13]]);
        let w = periodic_window(&x, 1..=6, 1..=6);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(w.get(i, j), w.get(i + 2, j + 2));
            }
        }
        assert_eq!(periodic_window(&x, 1..=2, 1..=2), m_of(&x));
    }
}
