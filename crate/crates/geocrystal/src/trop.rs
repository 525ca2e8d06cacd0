//! The combinatorial side: classical RSK, tableaux and integer GT patterns,
//! tropical gRSK and crystal operators, and the tropical central charge.
//!
//! Tropical versions are obtained by running the generic subtraction-free code
//! over [`TropInt`]; the tableau and tensor-product routines here are written
//! independently and serve as oracles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Semifield, TropInt};
use crate::crystal::{e_axis, Axis};
use crate::error::{Error, Result};
use crate::grsk::{glue, grsk_local, split, PqPair};
use crate::gt::{gt_decoration, GtPattern};
use crate::matrix::Grid;

/// Nonnegative integer matrix as a tropical grid.
pub fn int_grid(rows: &[Vec<i64>]) -> Result<Grid<TropInt>> {
    Grid::new(rows.iter().map(|r| r.iter().map(|&v| TropInt::from(v)).collect()).collect())
}

fn nonneg(a: &Grid<TropInt>) -> Result<Vec<Vec<u64>>> {
    a.rows_vec()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| v.to_i64().filter(|&k| k >= 0).map(|k| k as u64).ok_or_else(|| Error::Negative(v.to_string())))
                .collect()
        })
        .collect()
}

/// Semistandard tableau; rows weakly increase, columns strictly increase.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::NotSemistandard("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotSemistandard(format!("row {} decreases", i + 1)));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() {
                    return Err(Error::NotSemistandard("shape is not a partition".into()));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::NotSemistandard(format!("column weakly increases at row {}", i + 1)));
                }
            }
        }
        Ok(Tableau { rows })
    }

    /// Reads rows separated by `/`, e.g. `111122/222` (single-digit entries).
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad tableau entry {c:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Tableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of entries `<= j` in row `i` (1-based; zero past the last row).
    pub fn count_le(&self, i: usize, j: usize) -> usize {
        self.rows.get(i - 1).map_or(0, |r| r.iter().filter(|&&v| v <= j).count())
    }

    /// Row insertion with bumping.
    pub fn insert(&mut self, v: usize) {
        let mut v = v;
        for row in self.rows.iter_mut() {
            match row.iter().position(|&w| w > v) {
                Some(k) => v = std::mem::replace(&mut row[k], v),
                None => {
                    row.push(v);
                    return;
                }
            }
        }
        self.rows.push(vec![v]);
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() > 9;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
                parts.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

/// Classical RSK: row `i` of `a` contributes the word `1^{a_{i1}} 2^{a_{i2}} ...`,
/// inserted into `P` and recorded by `i` in `Q`.
pub fn schensted_rsk(a: &Grid<TropInt>) -> Result<(Tableau, Tableau)> {
    let a = nonneg(a)?;
    let mut p = Tableau::default();
    let mut q = Tableau::default();
    for (i, row) in a.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            for _ in 0..k {
                p.insert(j + 1);
                let len = p.shape();
                // The new box is the unique row where P outgrew Q.
                let r = len.iter().zip(q.shape().into_iter().chain(std::iter::repeat(0))).position(|(a, b)| *a != b);
                let r = r.expect("insertion adds one box");
                if r == q.rows.len() {
                    q.rows.push(Vec::new());
                }
                q.rows[r].push(i + 1);
            }
        }
    }
    Ok((p, q))
}

/// `z_{i,j}` = number of entries `<= j` in row `i`, for the pattern in `GT_n^{<= rows}`.
pub fn tableau_gt(t: &Tableau, rows: usize, n: usize) -> Result<GtPattern<TropInt>> {
    if t.max_entry() > n {
        return Err(Error::NotSemistandard(format!("entry {} exceeds {n}", t.max_entry())));
    }
    if t.rows.len() > rows.min(n) {
        return Err(Error::NotSemistandard(format!("{} rows do not fit in GT_{n}^<={rows}", t.rows.len())));
    }
    Ok(GtPattern::from_fn(rows, n, |i, j| TropInt::from(t.count_le(i, j) as i64)))
}

/// Interlacing `z_{i,j+1} >= z_{i,j} >= z_{i+1,j+1}` with nonnegative entries.
pub fn is_int_gt(z: &GtPattern<TropInt>) -> bool {
    let v = |i, j| z.get(i, j).0.clone();
    z.indices().into_iter().all(|(i, j)| {
        let x = v(i, j);
        x >= 0.into() && (j == z.n() || x <= v(i, j + 1)) && (!z.contains(i + 1, j + 1) || x >= v(i + 1, j + 1))
    })
}

/// Inverse of [`tableau_gt`].
pub fn gt_tableau(z: &GtPattern<TropInt>) -> Result<Tableau> {
    if !is_int_gt(z) {
        return Err(Error::NotSemistandard("pattern does not interlace".into()));
    }
    let mut rows = Vec::new();
    for i in 1..=z.p() {
        let mut row = Vec::new();
        let mut prev = 0i64;
        for j in i..=z.n() {
            let cur = z.get(i, j).to_i64().expect("small pattern");
            row.extend(std::iter::repeat_n(j, (cur - prev) as usize));
            prev = cur;
        }
        rows.push(row);
    }
    Tableau::new(rows)
}

/// `(P, Q)` of classical RSK as GT patterns, `P ∈ GT_n^{<=m}`, `Q ∈ GT_m^{<=n}`.
pub fn rsk_patterns(a: &Grid<TropInt>) -> Result<PqPair<TropInt>> {
    let (p, q) = schensted_rsk(a)?;
    Ok(PqPair { p: tableau_gt(&p, a.m(), a.n())?, q: tableau_gt(&q, a.n(), a.m())? })
}

/// Tropical gRSK: [`grsk_local`] over min-plus integers.
///
/// ```
/// use geocrystal::trop::{int_grid, trop_grsk};
/// let a = int_grid(&[vec![1, 4], vec![2, 1], vec![1, 0]]).unwrap();
/// assert_eq!(trop_grsk(&a), int_grid(&[vec![2, 5], vec![3, 6], vec![4, 6]]).unwrap());
/// ```
pub fn trop_grsk(a: &Grid<TropInt>) -> Grid<TropInt> {
    grsk_local(a)
}

/// Classical RSK glued into one matrix; the oracle for [`trop_grsk`].
pub fn rsk_glued(a: &Grid<TropInt>) -> Result<Grid<TropInt>> {
    glue(&rsk_patterns(a)?)
}

/// Crystal operator direction: `ẽ` (raise) or `f̃` (lower).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Raise,
    Lower,
}

impl Direction {
    pub fn c(self) -> TropInt {
        TropInt::from(match self {
            Direction::Raise => 1,
            Direction::Lower => -1,
        })
    }
}

/// Tropicalized `e^c` at `c = ±1`; `None` when the result leaves the
/// nonnegative cone (the operator is undefined there).
pub fn trop_crystal_e(a: &Grid<TropInt>, i: usize, dir: Direction, axis: Axis) -> Result<Option<Grid<TropInt>>> {
    nonneg(a)?;
    let out = e_axis(a, i, &dir.c(), axis)?;
    let inside = out.iter().all(|v| !v.is_negative());
    Ok(inside.then_some(out))
}

/// `(ε, φ)` of a column viewed as a one-row crystal.
fn col_data(col: &[u64], i: usize) -> (u64, u64) {
    (col[i], col[i - 1])
}

/// `(ε, φ)` of `c_1 ⊗ ... ⊗ c_k`.
fn tensor_data(cols: &[Vec<u64>], i: usize) -> (u64, u64) {
    let mut acc = col_data(&cols[0], i);
    for c in &cols[1..] {
        let (e2, p2) = col_data(c, i);
        let (e1, p1) = acc;
        let t = e1.min(p2);
        acc = (e1 + e2 - t, p1 + p2 - t);
    }
    acc
}

fn act_col(col: &mut [u64], i: usize, dir: Direction) -> bool {
    let (from, to) = match dir {
        Direction::Raise => (i, i - 1),
        Direction::Lower => (i - 1, i),
    };
    if col[from] == 0 {
        return false;
    }
    col[from] -= 1;
    col[to] += 1;
    true
}

fn act_tensor(cols: &mut [Vec<u64>], i: usize, dir: Direction) -> bool {
    let k = cols.len();
    if k == 1 {
        return act_col(&mut cols[0], i, dir);
    }
    let (eps, _) = tensor_data(&cols[..k - 1], i);
    let (_, phi_last) = col_data(&cols[k - 1], i);
    let left = match dir {
        Direction::Raise => eps > phi_last,
        Direction::Lower => eps >= phi_last,
    };
    if left {
        act_tensor(&mut cols[..k - 1], i, dir)
    } else {
        act_col(&mut cols[k - 1], i, dir)
    }
}

/// Tensor-product crystal operator on the columns of `a` (row axis) or the rows
/// of `a` (column axis); `None` when undefined.
pub fn comb_crystal_oracle(a: &Grid<TropInt>, i: usize, dir: Direction, axis: Axis) -> Result<Option<Grid<TropInt>>> {
    let rows = nonneg(a)?;
    let (m, n) = (a.m(), a.n());
    let mut cols: Vec<Vec<u64>> = match axis {
        Axis::Row => (0..n).map(|b| (0..m).map(|r| rows[r][b]).collect()).collect(),
        Axis::Col => rows.clone(),
    };
    let height = cols[0].len();
    if i == 0 || i >= height {
        return Err(Error::Dimension(format!("crystal index {i} outside [1, {}]", height.saturating_sub(1))));
    }
    if !act_tensor(&mut cols, i, dir) {
        return Ok(None);
    }
    let at = |r: usize, b: usize| match axis {
        Axis::Row => cols[b][r],
        Axis::Col => cols[r][b],
    };
    Ok(Some(Grid::from_fn(m, n, |r, b| TropInt::from(at(r, b) as i64))))
}

/// Tropical `Δ = F(Q) + δ_{m,n} z_{n,n}` (min-plus); `None` for the empty sum.
pub fn trop_central_charge(a: &Grid<TropInt>) -> Result<Option<TropInt>> {
    nonneg(a)?;
    let pq = split(&trop_grsk(a));
    Ok(charge_of_q(&pq.q, a.m(), a.n()))
}

fn charge_of_q(q: &GtPattern<TropInt>, m: usize, n: usize) -> Option<TropInt> {
    let mut terms: Vec<TropInt> = gt_decoration(q).into_iter().collect();
    if m == n {
        terms.push(q.get(n, n).clone());
    }
    TropInt::sum(&terms)
}

/// Charge distribution over one shape: `power -> multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCoeffs {
    pub shape: Vec<i64>,
    pub coeffs: BTreeMap<i64, u64>,
}

/// Enumerates every integer `Q ∈ GT_m^{<=n}` with content `mu` (length `m`) and
/// collects the tropical charges by shape. An empty charge counts as power 0.
pub fn q_analogue(m: usize, n: usize, mu: &[i64]) -> Result<Vec<ShapeCoeffs>> {
    if mu.len() != m || m == 0 || n == 0 {
        return Err(Error::Dimension(format!("content must have length m = {m}")));
    }
    if let Some(v) = mu.iter().find(|&&v| v < 0) {
        return Err(Error::Negative(v.to_string()));
    }
    // Q ∈ GT_m^{<=n}: stored with "m" = n, "n" = m; column j has min(j, n) entries.
    let p = m.min(n);
    let mut table: BTreeMap<Vec<i64>, BTreeMap<i64, u64>> = BTreeMap::new();
    let mut cols: Vec<Vec<i64>> = Vec::new();
    let mut partial = 0;
    enumerate_columns(m, p, mu, &mut partial, &mut cols, &mut |cols| {
        let q = GtPattern::from_fn(n, m, |i, j| TropInt::from(cols[j - 1][i - 1]));
        let charge = charge_of_q(&q, m, n).map_or(0, |c| c.to_i64().expect("small charge"));
        let shape: Vec<i64> = cols[m - 1].clone();
        *table.entry(shape).or_default().entry(charge).or_default() += 1;
    });
    Ok(table.into_iter().rev().map(|(shape, coeffs)| ShapeCoeffs { shape, coeffs }).collect())
}

fn enumerate_columns(
    m: usize,
    p: usize,
    mu: &[i64],
    partial: &mut i64,
    cols: &mut Vec<Vec<i64>>,
    emit: &mut dyn FnMut(&[Vec<i64>]),
) {
    let j = cols.len() + 1;
    if j > m {
        emit(cols);
        return;
    }
    let len = j.min(p);
    let target = *partial + mu[j - 1];
    let mut col = vec![0; len];
    let prev = cols.last().cloned();
    fill_column(prev.as_ref(), len, 0, target, &mut col, &mut |c| {
        cols.push(c.to_vec());
        let saved = *partial;
        *partial = target;
        enumerate_columns(m, p, mu, partial, cols, emit);
        *partial = saved;
        cols.pop();
    });
}

fn fill_column(
    prev: Option<&Vec<i64>>,
    len: usize,
    i: usize,
    remaining: i64,
    col: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]),
) {
    if i == len {
        if remaining == 0 {
            emit(col);
        }
        return;
    }
    // z_{i,j} <= z_{i,j-1} would break `z_{i,j} >= z_{i,j-1}`; interlacing bounds:
    // z_{i,j-1} <= z_{i,j} <= z_{i-1,j-1}.
    let lo = prev.and_then(|p| p.get(i)).copied().unwrap_or(0);
    let hi = match (i, prev) {
        (0, _) => remaining,
        (_, Some(p)) => p[i - 1].min(remaining),
        (_, None) => remaining,
    };
    for v in lo..=hi {
        col[i] = v;
        fill_column(prev, len, i + 1, remaining - v, col, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type ShapeRow = (Vec<i64>, Vec<(i64, u64)>);

    fn t(v: i64) -> TropInt {
        TropInt::from(v)
    }

    #[test]
    fn rsk_figure() {
        let a = int_grid(&[vec![1, 4], vec![2, 1], vec![1, 0]]).unwrap();
        let (p, q) = schensted_rsk(&a).unwrap();
        assert_eq!(p.to_string(), "111122/222");
        assert_eq!(q.to_string(), "111112/223");
        let pq = rsk_patterns(&a).unwrap();
        assert_eq!((pq.p.get(1, 1), pq.p.get(1, 2), pq.p.get(2, 2)), (&t(4), &t(6), &t(3)));
        assert_eq!(glue(&pq).unwrap(), int_grid(&[vec![2, 5], vec![3, 6], vec![4, 6]]).unwrap());
        assert_eq!(trop_grsk(&a), rsk_glued(&a).unwrap());
    }

    #[test]
    fn tableau_pattern_roundtrip() {
        let tab = Tableau::parse("11122244/23334/344").unwrap();
        let z = tableau_gt(&tab, 4, 4).unwrap();
        let rows = [vec![3], vec![6, 1], vec![6, 4, 1], vec![8, 5, 3, 0]];
        for (j, row) in rows.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                assert_eq!(z.get(i + 1, j + 1), &t(v));
            }
        }
        assert!(is_int_gt(&z));
        assert_eq!(gt_tableau(&z).unwrap(), tab);
        let empty = tableau_gt(&Tableau::default(), 2, 3).unwrap();
        assert!(empty.indices().into_iter().all(|(i, j)| empty.get(i, j) == &t(0)));
        assert!(Tableau::parse("21").is_err());
        assert!(Tableau::parse("11/1").is_err());
    }

    #[test]
    fn trivial_rsk() {
        let z = int_grid(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(schensted_rsk(&z).unwrap(), (Tableau::default(), Tableau::default()));
        assert_eq!(trop_grsk(&z), z);
        let row = int_grid(&[vec![2, 0, 1]]).unwrap();
        let (p, q) = schensted_rsk(&row).unwrap();
        assert_eq!((p.to_string(), q.to_string()), ("113".into(), "111".into()));
    }

    #[test]
    fn crystal_oracles_agree_on_example() {
        let a = int_grid(&[vec![0, 2], vec![3, 1], vec![0, 0]]).unwrap();
        let e = trop_crystal_e(&a, 1, Direction::Raise, Axis::Row).unwrap().unwrap();
        assert_eq!(e, int_grid(&[vec![1, 2], vec![2, 1], vec![0, 0]]).unwrap());
        assert_eq!(comb_crystal_oracle(&a, 1, Direction::Raise, Axis::Row).unwrap(), Some(e.clone()));
        assert_eq!(trop_crystal_e(&e, 1, Direction::Lower, Axis::Row).unwrap(), Some(a.clone()));
        // row 3 is empty: ε̃_2 = 0
        assert_eq!(trop_crystal_e(&a, 2, Direction::Raise, Axis::Row).unwrap(), None);
        assert_eq!(comb_crystal_oracle(&a, 2, Direction::Raise, Axis::Row).unwrap(), None);
    }

    #[test]
    fn one_row() {
        let a = int_grid(&[vec![2, 1, 0]]).unwrap();
        let e = comb_crystal_oracle(&a, 1, Direction::Raise, Axis::Col).unwrap();
        assert_eq!(e, Some(int_grid(&[vec![3, 0, 0]]).unwrap()));
        assert_eq!(trop_crystal_e(&a, 1, Direction::Raise, Axis::Col).unwrap(), e);
        assert_eq!(comb_crystal_oracle(&a, 2, Direction::Raise, Axis::Col).unwrap(), None);
        assert_eq!(trop_crystal_e(&a, 2, Direction::Raise, Axis::Col).unwrap(), None);
    }

    #[test]
    fn two_by_two_charge() {
        for mu1 in 0..6 {
            for mu2 in 0..=mu1 {
                let table = q_analogue(2, 2, &[mu1, mu2]).unwrap();
                let mut seen = 0;
                for sc in &table {
                    // Q has shape (mu1 + mu2 - k, k)
                    let k = sc.shape[1];
                    assert_eq!(sc.coeffs, BTreeMap::from([(k.min(mu2 - k), 1)]), "mu = ({mu1},{mu2})");
                    seen += 1;
                }
                assert_eq!(seen, mu2 + 1);
            }
        }
    }

    #[test]
    fn three_by_two_table() {
        let table = q_analogue(3, 2, &[4, 3, 2]).unwrap();
        let got: Vec<ShapeRow> = table.into_iter().map(|s| (s.shape, s.coeffs.into_iter().collect())).collect();
        assert_eq!(
            got,
            vec![
                (vec![9, 0], vec![(0, 1)]),
                (vec![8, 1], vec![(0, 2)]),
                (vec![7, 2], vec![(0, 2), (1, 1)]),
                (vec![6, 3], vec![(0, 2), (1, 1)]),
                (vec![5, 4], vec![(0, 2)]),
            ]
        );
    }

    #[test]
    fn charge_of_zero_matrix() {
        let z = int_grid(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(trop_central_charge(&z).unwrap(), Some(t(0)));
    }
}
