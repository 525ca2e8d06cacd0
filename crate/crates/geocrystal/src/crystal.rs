//! The basic geometric crystal on `m x n` grids: `σ^j`, structure maps, the
//! row and column operators, the decoration, the Weyl action and the
//! geometric R-matrix.
//!
//! Crystal indices (`i` for rows, `j` for columns) are 1-based, matching the
//! simple roots they name.

use crate::arith::{Rational, Semifield};
use crate::error::{Error, Result};
use crate::matrix::{m_of, Grid, SfMatrix};

/// Which of the two commuting crystal structures to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// `GL_m` structure: operators act on adjacent rows.
    Row,
    /// `GL_n` structure: operators act on adjacent columns.
    Col,
}

/// Weight and string data `(γ, ε_i, φ_i)` at one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalData<S> {
    pub gamma: Vec<S>,
    pub eps: S,
    pub phi: S,
}

/// `σ^j(x, y; c) = Σ_{r=1}^n c^{[r<=j]} y^1...y^{r-1} x^{r+1}...x^n`.
///
/// ```
/// use geocrystal::{crystal::sigma, Rational};
/// let r = |v| Rational::from(v);
/// let (x, y) = ([r(1), r(2)], [r(3), r(4)]);
/// let s: Vec<_> = (0..=2).map(|j| sigma(&x, &y, &r(2), j)).collect();
/// assert_eq!(s, vec![r(5), r(7), r(10)]);
/// ```
pub fn sigma<S: Semifield>(x: &[S], y: &[S], c: &S, j: usize) -> S {
    let n = x.len();
    assert_eq!(n, y.len(), "sigma needs rows of equal length");
    // suffix[r] = x_{r+1} ... x_n (0-based r), prefix = y_1 ... y_{r-1}
    let mut suffix = vec![S::one(); n + 1];
    for r in (0..n).rev() {
        suffix[r] = suffix[r + 1].mul(&x[r]);
    }
    let mut prefix = S::one();
    let mut acc: Option<S> = None;
    for r in 0..n {
        let mut term = prefix.mul(&suffix[r + 1]);
        if r < j {
            term = term.mul(c);
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
        prefix = prefix.mul(&y[r]);
    }
    acc.expect("rows are nonempty")
}

fn check_index(i: usize, len: usize, what: &str) -> Result<()> {
    if i == 0 || i >= len {
        return Err(Error::Dimension(format!("{what} index {i} outside 1..{}", len.saturating_sub(1))));
    }
    Ok(())
}

fn oriented<S: Semifield>(x: &Grid<S>, axis: Axis) -> Grid<S> {
    match axis {
        Axis::Row => x.clone(),
        Axis::Col => x.transpose(),
    }
}

/// Closed-form structure maps: `γ` is the vector of row (column) products,
/// `ε_i = π_{i+1}/σ(x_i, x_{i+1})`, `φ_i = π_i/σ(x_i, x_{i+1})`.
///
/// ```
/// use geocrystal::{crystal::{structure_maps, Axis}, Grid, Rational};
/// let r = |v| Rational::from(v);
/// let x = Grid::new(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap();
/// let d = structure_maps(&x, 1, Axis::Row).unwrap();
/// assert_eq!(d.gamma, vec![r(2), r(12)]);
/// assert_eq!((d.eps, d.phi), (Rational::new(12, 5), Rational::new(2, 5)));
/// ```
pub fn structure_maps<S: Semifield>(x: &Grid<S>, i: usize, axis: Axis) -> Result<CrystalData<S>> {
    let x = oriented(x, axis);
    check_index(i, x.m(), "crystal")?;
    let gamma: Vec<S> = (0..x.m()).map(|a| S::product(x.row(a))).collect();
    let s = sigma(x.row(i - 1), x.row(i), &S::one(), 0);
    Ok(CrystalData { eps: gamma[i].div(&s), phi: gamma[i - 1].div(&s), gamma })
}

/// The unipotent-crystal matrix attached to the chosen axis: `M(x^t)` (size `m`)
/// for rows, `M(x)` (size `n`) for columns.
pub fn axis_matrix<S: Semifield>(x: &Grid<S>, axis: Axis) -> SfMatrix<S> {
    m_of(&oriented(x, axis).transpose())
}

/// Structure maps read off the matrix `M` of [`axis_matrix`]:
/// `γ = diag M`, `ε_i = M_{i+1,i+1}/M_{i+1,i}`, `φ_i = M_{i,i}/M_{i+1,i}`.
pub fn structure_maps_matrix<S: Semifield>(x: &Grid<S>, i: usize, axis: Axis) -> Result<CrystalData<S>> {
    let m = axis_matrix(x, axis);
    check_index(i, m.rows(), "crystal")?;
    maps_from_matrix(&m, i)
}

pub(crate) fn maps_from_matrix<S: Semifield>(m: &SfMatrix<S>, i: usize) -> Result<CrystalData<S>> {
    let entry = |r: usize, c: usize| {
        m.get(r, c).cloned().ok_or_else(|| Error::VanishingMinor(format!("entry ({}, {})", r + 1, c + 1)))
    };
    let gamma = (0..m.rows()).map(|k| entry(k, k)).collect::<Result<Vec<_>>>()?;
    let sub = entry(i, i - 1)?;
    Ok(CrystalData { eps: entry(i, i)?.div(&sub), phi: entry(i - 1, i - 1)?.div(&sub), gamma })
}

/// `e_i^c` on rows `i, i+1`: entry `j` of row `i` is multiplied by
/// `σ^j/σ^{j-1}` and entry `j` of row `i+1` by `σ^{j-1}/σ^j`.
///
/// ```
/// use geocrystal::{crystal::e_row, Grid, Rational};
/// let r = |v| Rational::from(v);
/// let q = |a, b| Rational::new(a, b);
/// let x = Grid::new(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap();
/// let y = e_row(&x, 1, &r(2)).unwrap();
/// assert_eq!(y.rows_vec(), vec![vec![q(7, 5), q(20, 7)], vec![q(15, 7), q(14, 5)]]);
/// ```
pub fn e_row<S: Semifield>(x: &Grid<S>, i: usize, c: &S) -> Result<Grid<S>> {
    check_index(i, x.m(), "row crystal")?;
    let (top, bottom) = (x.row(i - 1), x.row(i));
    let n = x.n();
    let sig: Vec<S> = (0..=n).map(|j| sigma(top, bottom, c, j)).collect();
    let new_top: Vec<S> = (0..n).map(|j| top[j].mul(&sig[j + 1]).div(&sig[j])).collect();
    let new_bottom: Vec<S> = (0..n).map(|j| bottom[j].mul(&sig[j]).div(&sig[j + 1])).collect();
    let mut out = x.clone();
    out.set_row(i - 1, &new_top);
    out.set_row(i, &new_bottom);
    Ok(out)
}

/// `ē_j^c`, the column operator: `e_row` conjugated by transposition.
pub fn e_col<S: Semifield>(x: &Grid<S>, j: usize, c: &S) -> Result<Grid<S>> {
    Ok(e_row(&x.transpose(), j, c)?.transpose())
}

pub fn e_axis<S: Semifield>(x: &Grid<S>, i: usize, c: &S, axis: Axis) -> Result<Grid<S>> {
    match axis {
        Axis::Row => e_row(x, i, c),
        Axis::Col => e_col(x, i, c),
    }
}

/// Decoration `F(x) = Σ x_i^j`.
pub fn decoration_matrix<S: Semifield>(x: &Grid<S>) -> S {
    S::sum(x.iter()).expect("grid is nonempty")
}

/// Weyl group generator `s_i(x) = e_i^{ε_i(x)/φ_i(x)}(x)`.
pub fn weyl_s<S: Semifield>(x: &Grid<S>, i: usize, axis: Axis) -> Result<Grid<S>> {
    let d = structure_maps(x, i, axis)?;
    e_axis(x, i, &d.eps.div(&d.phi), axis)
}

/// `κ_r(x, y) = Σ_{k=0}^{n-1} y_r...y_{r+k-1} x_{r+k+1}...x_{r+n-1}`, 1-based `r`,
/// subscripts mod `n`.
pub fn kappa<S: Semifield>(x: &[S], y: &[S], r: usize) -> S {
    let n = x.len();
    let at = |v: &[S], k: usize| v[(k - 1) % n].clone();
    let mut acc: Option<S> = None;
    for k in 0..n {
        let mut term = S::one();
        for t in r..r + k {
            term = term.mul(&at(y, t));
        }
        for t in r + k + 1..r + n {
            term = term.mul(&at(x, t));
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("rows are nonempty")
}

/// Geometric R-matrix `R(x, y) = (y', x')` with `y'_j = y_j κ_{j+1}/κ_j`,
/// `x'_j = x_j κ_j/κ_{j+1}`.
///
/// ```
/// use geocrystal::{crystal::geometric_r, Rational};
/// let r = |v| Rational::from(v);
/// let q = |a, b| Rational::new(a, b);
/// let (y2, x2) = geometric_r(&[r(1), r(2)], &[r(3), r(5)]);
/// assert_eq!(y2, vec![q(18, 5), q(25, 6)]);
/// assert_eq!(x2, vec![q(5, 6), q(12, 5)]);
/// ```
pub fn geometric_r<S: Semifield>(x: &[S], y: &[S]) -> (Vec<S>, Vec<S>) {
    let n = x.len();
    assert_eq!(n, y.len(), "R-matrix needs rows of equal length");
    let k: Vec<S> = (1..=n).map(|r| kappa(x, y, r)).collect();
    let next = |j: usize| &k[(j + 1) % n];
    let y2 = (0..n).map(|j| y[j].mul(next(j)).div(&k[j])).collect();
    let x2 = (0..n).map(|j| x[j].mul(&k[j]).div(next(j))).collect();
    (y2, x2)
}

/// `R_i`: rows `i, i+1` replaced by `R(x_i, x_{i+1})`.
pub fn r_i<S: Semifield>(x: &Grid<S>, i: usize) -> Result<Grid<S>> {
    check_index(i, x.m(), "R-matrix")?;
    let (y2, x2) = geometric_r(x.row(i - 1), x.row(i));
    let mut out = x.clone();
    out.set_row(i - 1, &y2);
    out.set_row(i, &x2);
    Ok(out)
}

/// `x_i(a) = I + a E_{i,i+1}` (1-based `i`), size `n`.
pub fn unipotent(n: usize, i: usize, a: &Rational) -> SfMatrix<Rational> {
    let mut u = SfMatrix::identity(n);
    u.set(i - 1, i, Some(a.clone()));
    u
}
