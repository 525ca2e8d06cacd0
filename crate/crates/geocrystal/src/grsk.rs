//! Geometric RSK: the minor-ratio (insertion) formulation, the local-move
//! formulation, its inverse, and the glue/split data model.
//!
//! `P ∈ GT_n^{<=m}` is glued into the bottom-left of an `m x n` grid and the
//! transpose of `Q ∈ GT_m^{<=n}` into the top-right; the two share the
//! diagonal ending at `(m, n)`, which carries the common shape.

use serde::{Deserialize, Serialize};

use crate::arith::{gmax, Rational, Semifield};
use crate::crystal::decoration_matrix;
use crate::error::{Error, Result};
use crate::gt::{gt_decoration, psi_param, GtPattern};
use crate::matrix::{h_matrix, m_of, prefix_products, Grid, SfMatrix};

/// A pair `(P, Q)` with `P ∈ GT_n^{<=m}` and `Q ∈ GT_m^{<=n}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Semifield + Serialize", deserialize = "S: Semifield + Deserialize<'de>"))]
pub struct PqPair<S> {
    #[serde(rename = "P")]
    pub p: GtPattern<S>,
    #[serde(rename = "Q")]
    pub q: GtPattern<S>,
}

impl<S: Semifield> std::fmt::Debug for PqPair<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PqPair").field("P", &self.p).field("Q", &self.q).finish()
    }
}

impl<S: Semifield> PqPair<S> {
    /// Grid dimensions `(m, n)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.p.m(), self.p.n())
    }

    pub fn shape(&self) -> Vec<S> {
        self.p.shape()
    }
}

fn rows(a: usize, b: usize) -> Vec<usize> {
    (a..=b).map(|k| k - 1).collect()
}

fn minor_ratio(mat: &SfMatrix<Rational>, num: Vec<usize>, den: Vec<usize>) -> Result<Rational> {
    let d = mat.flag_minor(&den)?;
    if d.is_zero() {
        return Err(Error::VanishingMinor(format!("flag minor on rows {den:?}")));
    }
    Ok(mat.flag_minor(&num)? / d)
}

/// gRSK by flag-minor ratios.
///
/// `P = Ψ(M(x))`; the `i'`-th diagonal of `Q` is the shape of `Ψ(W(x_1)...W(x_{i'}))`:
/// `z'_{j',i'} = Δ_{[j',n]}(M_{i'})/Δ_{[j'+1,n]}(M_{i'})`.
///
/// ```
/// use geocrystal::{grsk::grsk_insert, Grid, Rational};
/// let r = |v| Rational::from(v);
/// let x = Grid::new(vec![vec![r(1), r(2)], vec![r(3), r(4)], vec![r(5), r(6)]]).unwrap();
/// let pq = grsk_insert(&x).unwrap();
/// assert_eq!(pq.p.get(1, 2), &Rational::new(240, 11));
/// assert_eq!(pq.q.get(1, 2), &Rational::new(24, 5));
/// ```
pub fn grsk_insert(x: &Grid<Rational>) -> Result<PqPair<Rational>> {
    let (m, n) = (x.m(), x.n());
    let p = psi_param(&m_of(x), m)?;
    let prefixes = prefix_products(x);
    let mut q = GtPattern::from_fn(n, m, |_, _| Rational::from(1));
    for (jp, ip) in q.indices() {
        let mk = &prefixes[ip - 1];
        q.set(jp, ip, minor_ratio(mk, rows(jp, n), rows(jp + 1, n))?);
    }
    Ok(PqPair { p, q })
}

/// The same pair from the column formulas
/// `z_{i,j} = Δ_{[i,m]}(M(x^1..x^j))/Δ_{[i+1,m]}(...)`,
/// `z'_{j',i'} = Δ_{[j',i']}(M(x^1..x^n))/Δ_{[j'+1,i']}(...)`.
pub fn grsk_insert_transposed(x: &Grid<Rational>) -> Result<PqPair<Rational>> {
    let (m, n) = (x.m(), x.n());
    let xt = x.transpose();
    let prefixes = prefix_products(&xt);
    let mut p = GtPattern::from_fn(m, n, |_, _| Rational::from(1));
    for (i, j) in p.indices() {
        p.set(i, j, minor_ratio(&prefixes[j - 1], rows(i, m), rows(i + 1, m))?);
    }
    let full = &prefixes[n - 1];
    let mut q = GtPattern::from_fn(n, m, |_, _| Rational::from(1));
    for (jp, ip) in q.indices() {
        q.set(jp, ip, minor_ratio(full, rows(jp, ip), rows(jp + 1, ip))?);
    }
    Ok(PqPair { p, q })
}

/// Glues `(P, Q)` into one grid: `y_{m-i+1}^{j-i+1} = z_{i,j}` and
/// `y_{i'-j'+1}^{n-j'+1} = z'_{j',i'}`.
pub fn glue<S: Semifield>(pq: &PqPair<S>) -> Result<Grid<S>> {
    let (m, n) = pq.dims();
    if pq.q.m() != n || pq.q.n() != m {
        return Err(Error::Dimension("Q must lie in GT_m^{<=n}".into()));
    }
    if pq.p.shape() != pq.q.shape() {
        return Err(Error::Dimension("P and Q have different shapes".into()));
    }
    let mut cells: Vec<Option<S>> = vec![None; m * n];
    for (i, j) in pq.p.indices() {
        cells[(m - i) * n + (j - i)] = Some(pq.p.get(i, j).clone());
    }
    for (jp, ip) in pq.q.indices() {
        cells[(ip - jp) * n + (n - jp)] = Some(pq.q.get(jp, ip).clone());
    }
    let mut data = Vec::with_capacity(m * n);
    for c in cells {
        data.push(c.expect("P and Q tile the grid"));
    }
    Ok(Grid::from_fn(m, n, |a, b| data[a * n + b].clone()))
}

/// Inverse of [`glue`].
pub fn split<S: Semifield>(y: &Grid<S>) -> PqPair<S> {
    let (m, n) = (y.m(), y.n());
    let p = GtPattern::from_fn(m, n, |i, j| y.get(m - i, j - i).clone());
    let q = GtPattern::from_fn(n, m, |jp, ip| y.get(ip - jp, n - jp).clone());
    PqPair { p, q }
}

// ---------------------------------------------------------------------------
// Local moves

/// Which local move to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Eta,
    Toggle,
}

/// Linear extension of the coordinatewise order used to schedule moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    RowMajor,
    ColMajor,
}

impl Schedule {
    fn positions(self, m: usize, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(m * n);
        match self {
            Schedule::RowMajor => {
                for a in 1..=m {
                    for b in 1..=n {
                        out.push((a, b));
                    }
                }
            }
            Schedule::ColMajor => {
                for b in 1..=n {
                    for a in 1..=m {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }
}

fn x<S: Semifield>(g: &Grid<S>, a: usize, b: usize) -> &S {
    g.get(a - 1, b - 1)
}

/// `gMax_a^b(x)`: combines the west and north neighbours of `(a, b)`.
pub fn gmax_at<S: Semifield>(g: &Grid<S>, a: usize, b: usize) -> S {
    match (a > 1, b > 1) {
        (true, true) => gmax(&[x(g, a, b - 1).clone(), x(g, a - 1, b).clone()]).expect("nonzero entries"),
        (false, true) => x(g, 1, b - 1).clone(),
        (true, false) => x(g, a - 1, 1).clone(),
        (false, false) => S::one(),
    }
}

/// `gMin_a^b(x)`: combines the south and east neighbours of `(a, b)`.
pub fn gmin_at<S: Semifield>(g: &Grid<S>, a: usize, b: usize) -> S {
    let (m, n) = (g.m(), g.n());
    match (a < m, b < n) {
        (true, true) => x(g, a + 1, b).add(x(g, a, b + 1)),
        (false, true) => x(g, m, b + 1).clone(),
        (true, false) => x(g, a + 1, n).clone(),
        (false, false) => S::one(),
    }
}

/// `η_a^b: x_a^b ↦ x_a^b gMax_a^b` and `T_a^b: x_a^b ↦ gMax_a^b gMin_a^b / x_a^b` (1-based).
pub fn local_move<S: Semifield>(g: &Grid<S>, kind: Move, a: usize, b: usize) -> Result<Grid<S>> {
    let (m, n) = (g.m(), g.n());
    if a == 0 || b == 0 || a > m || b > n {
        return Err(Error::Dimension(format!("position ({a},{b}) outside {m}x{n}")));
    }
    if kind == Move::Toggle && (a, b) == (m, n) {
        return Err(Error::ForbiddenToggle { a, b });
    }
    let mut out = g.clone();
    apply_move(&mut out, kind, a, b);
    Ok(out)
}

fn apply_move<S: Semifield>(g: &mut Grid<S>, kind: Move, a: usize, b: usize) {
    let v = match kind {
        Move::Eta => x(g, a, b).mul(&gmax_at(g, a, b)),
        Move::Toggle => gmax_at(g, a, b).mul(&gmin_at(g, a, b)).div(x(g, a, b)),
    };
    g.set(a - 1, b - 1, v);
}

/// Positions of `τ_a^b` in application order: `T_{a-1}^{b-1}` first, then
/// moving northwest along the diagonal.
fn tau_chain(a: usize, b: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..a.min(b)).map(move |k| (a - k, b - k))
}

/// `ρ = τ ∘ η` along the chosen schedule.
pub fn grsk_local_with<S: Semifield>(g: &Grid<S>, schedule: Schedule) -> Grid<S> {
    let mut out = g.clone();
    let order = schedule.positions(g.m(), g.n());
    for &(a, b) in &order {
        apply_move(&mut out, Move::Eta, a, b);
    }
    for &(a, b) in &order {
        for (i, j) in tau_chain(a, b) {
            apply_move(&mut out, Move::Toggle, i, j);
        }
    }
    out
}

/// gRSK via local moves, returning the glued grid.
///
/// ```
/// use geocrystal::{grsk::grsk_local, Grid, Rational};
/// let r = |v| Rational::from(v);
/// let x = Grid::new(vec![vec![r(1), r(2)], vec![r(3), r(4)], vec![r(5), r(6)]]).unwrap();
/// let y = grsk_local(&x);
/// assert_eq!(y.row(0), &[r(5), r(2)]);
/// assert_eq!(y.row(2), &[r(15), Rational::new(240, 11)]);
/// ```
pub fn grsk_local<S: Semifield>(g: &Grid<S>) -> Grid<S> {
    grsk_local_with(g, Schedule::RowMajor)
}

/// `ρ` composed literally as `ρ_m^n ∘ ... ∘ ρ_1^1` with `ρ_a^b = τ_a^b ∘ η_a^b`.
pub fn grsk_local_interleaved<S: Semifield>(g: &Grid<S>) -> Grid<S> {
    let mut out = g.clone();
    for (a, b) in Schedule::RowMajor.positions(g.m(), g.n()) {
        apply_move(&mut out, Move::Eta, a, b);
        for (i, j) in tau_chain(a, b) {
            apply_move(&mut out, Move::Toggle, i, j);
        }
    }
    out
}

/// Inverse of [`grsk_local`]: undo every toggle, then every `η`, in reverse order.
pub fn grsk_inverse<S: Semifield>(y: &Grid<S>) -> Grid<S> {
    let mut out = y.clone();
    let order = Schedule::RowMajor.positions(y.m(), y.n());
    for &(a, b) in order.iter().rev() {
        let chain: Vec<_> = tau_chain(a, b).collect();
        for &(i, j) in chain.iter().rev() {
            apply_move(&mut out, Move::Toggle, i, j);
        }
    }
    for &(a, b) in order.iter().rev() {
        let v = x(&out, a, b).div(&gmax_at(&out, a, b));
        out.set(a - 1, b - 1, v);
    }
    out
}

/// `ρ' = inv ∘ ρ ∘ inv` with `inv` the entrywise inverse: the max-plus flavoured
/// variant of gRSK.
pub fn grsk_inverted<S: Semifield>(g: &Grid<S>) -> Grid<S> {
    grsk_local(&g.inverted()).inverted()
}

// ---------------------------------------------------------------------------
// Decoration and central charge

/// `F` on GT patterns with the empty sum read as zero.
pub fn gt_decoration_or_zero(z: &GtPattern<Rational>) -> Rational {
    gt_decoration(z).unwrap_or_else(Rational::zero)
}

/// The extra term `δ_{m,n} z_{n,n}`; zero unless the grid is square.
pub fn corner_term(pq: &PqPair<Rational>) -> Rational {
    let (m, n) = pq.dims();
    if m == n {
        pq.p.get(n, n).clone()
    } else {
        Rational::zero()
    }
}

/// `Δ(x) = F(x) - F(P)`.
pub fn central_charge(x: &Grid<Rational>) -> Result<Rational> {
    let pq = grsk_insert(x)?;
    Ok(decoration_matrix(x) - gt_decoration_or_zero(&pq.p))
}

/// `F(Q) + δ_{m,n} z_{n,n}`, the positive formula for the central charge.
pub fn central_charge_q(x: &Grid<Rational>) -> Result<Rational> {
    let pq = grsk_insert(x)?;
    Ok(gt_decoration_or_zero(&pq.q) + corner_term(&pq))
}

// ---------------------------------------------------------------------------
// The dagger bridge

/// Both sides of the `H`/`M` minor identity at `(i, j)`:
/// `Δ_{[1,i-1],[j-i+2,j]}(H)/Δ_{[1,i],[j-i+1,j]}(H)` with `H = Π H(x_k^{-1})`, and
/// `Δ_{[i,j],[1,j-i+1]}(M)/Δ_{[i+1,j],[1,j-i]}(M)` with `M = Π W(x_k)`.
pub fn h_m_identity_sides(x: &Grid<Rational>, i: usize, j: usize) -> Result<(Rational, Rational)> {
    let n = x.n();
    if i == 0 || i > x.m() || j < i || j > n {
        return Err(Error::Dimension(format!("(i, j) = ({i}, {j}) out of range")));
    }
    let h = (0..x.m()).try_fold(SfMatrix::identity(n), |acc, a| {
        let inv: Vec<Rational> = x.row(a).iter().map(|v| v.inv()).collect();
        acc.mul(&h_matrix(&inv))
    })?;
    let cols = |a: usize, b: usize| rows(a, b);
    let h_num = h.minor(&rows(1, i - 1), &cols(j + 2 - i, j))?;
    let h_den = h.minor(&rows(1, i), &cols(j + 1 - i, j))?;
    let mm = m_of(x);
    let m_num = mm.minor(&rows(i, j), &cols(1, j - i + 1))?;
    let m_den = mm.minor(&rows(i + 1, j), &cols(1, j - i))?;
    if h_den.is_zero() || m_den.is_zero() {
        return Err(Error::VanishingMinor(format!("({i}, {j})")));
    }
    Ok((h_num / h_den, m_num / m_den))
}

/// `y_{i,j} = Δ_{[1,i],[j-i+1,j]}(H)/Δ_{[1,i-1],[j-i+2,j]}(H)` with `H = Π H(x_k)`.
pub fn h_minor_p_entry(x: &Grid<Rational>, i: usize, j: usize) -> Result<Rational> {
    let n = x.n();
    let h = (0..x.m()).try_fold(SfMatrix::identity(n), |acc, a| acc.mul(&h_matrix(x.row(a))))?;
    let num = h.minor(&rows(1, i), &rows(j + 1 - i, j))?;
    let den = h.minor(&rows(1, i - 1), &rows(j + 2 - i, j))?;
    if den.is_zero() {
        return Err(Error::VanishingMinor(format!("H minor at ({i}, {j})")));
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TropInt;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn grid(rows: &[&[i64]]) -> Grid<Rational> {
        Grid::new(rows.iter().map(|row| row.iter().map(|&v| Rational::from(v)).collect()).collect()).unwrap()
    }

    fn example() -> Grid<Rational> {
        grid(&[&[1, 2], &[3, 4], &[5, 6]])
    }

    #[test]
    fn insertion_example() {
        let pq = grsk_insert(&example()).unwrap();
        assert_eq!(pq.p.get(1, 1), &q(15, 1));
        assert_eq!(pq.p.get(1, 2), &q(240, 11));
        assert_eq!(pq.p.get(2, 2), &q(33, 1));
        let expect_q =
            [((1, 1), q(2, 1)), ((1, 2), q(24, 5)), ((1, 3), q(240, 11)), ((2, 2), q(5, 1)), ((2, 3), q(33, 1))];
        for ((jp, ip), v) in expect_q {
            assert_eq!(pq.q.get(jp, ip), &v);
        }
        let glued = glue(&pq).unwrap();
        assert_eq!(
            glued.rows_vec(),
            vec![vec![q(5, 1), q(2, 1)], vec![q(33, 1), q(24, 5)], vec![q(15, 1), q(240, 11)]]
        );
        assert_eq!(split(&glued), pq);
    }

    #[test]
    fn local_matches_insertion_and_inverts() {
        let x = example();
        let y = grsk_local(&x);
        assert_eq!(y, glue(&grsk_insert(&x).unwrap()).unwrap());
        assert_eq!(grsk_inverse(&y), x);
        assert_eq!(grsk_local_interleaved(&x), y);
        assert_eq!(grsk_local_with(&x, Schedule::ColMajor), y);
    }

    #[test]
    fn moves() {
        let x = example();
        assert_eq!(local_move(&x, Move::Eta, 1, 1).unwrap(), x);
        assert_eq!(local_move(&x, Move::Eta, 2, 1).unwrap().get(1, 0), &q(3, 1));
        let t = local_move(&x, Move::Toggle, 2, 1).unwrap();
        assert_eq!(local_move(&t, Move::Toggle, 2, 1).unwrap(), x);
        assert_eq!(local_move(&x, Move::Toggle, 3, 2), Err(Error::ForbiddenToggle { a: 3, b: 2 }));
    }

    #[test]
    fn one_by_one() {
        let x = grid(&[&[7]]);
        let pq = grsk_insert(&x).unwrap();
        assert_eq!(pq.p.get(1, 1), &q(7, 1));
        assert_eq!(pq.q.get(1, 1), &q(7, 1));
        assert_eq!(grsk_local(&x), x);
        assert_eq!(central_charge(&x).unwrap(), q(7, 1));
        assert_eq!(central_charge_q(&x).unwrap(), q(7, 1));
        assert_eq!(grsk_inverted(&x), x);
    }

    #[test]
    fn decoration_split() {
        let x = example();
        assert_eq!(central_charge(&x).unwrap(), q(210, 11));
        assert_eq!(central_charge_q(&x).unwrap(), q(210, 11));
    }

    #[test]
    fn transposed_formulas() {
        let x = grid(&[&[1, 2, 7], &[3, 4, 2]]);
        let pq = grsk_insert(&x).unwrap();
        assert_eq!(grsk_insert_transposed(&x).unwrap(), pq);
        let t = grsk_insert(&x.transpose()).unwrap();
        assert_eq!((t.q, t.p), (pq.p, pq.q));
    }

    #[test]
    fn tropical_figure() {
        let t = |v| TropInt::from(v);
        let a = Grid::new(vec![vec![t(1), t(4)], vec![t(2), t(1)], vec![t(1), t(0)]]).unwrap();
        let y = grsk_local(&a);
        assert_eq!(y.rows_vec(), vec![vec![t(2), t(5)], vec![t(3), t(6)], vec![t(4), t(6)]]);
        assert_eq!(grsk_inverse(&y), a);
    }

    #[test]
    fn dagger_bridge() {
        let x = grid(&[&[2, 3, 5], &[7, 1, 4], &[3, 3, 2]]);
        for i in 1..=3 {
            for j in i..=3 {
                let (h, m) = h_m_identity_sides(&x, i, j).unwrap();
                assert_eq!(h, m);
            }
        }
        let inv_p = split(&grsk_inverted(&x)).p;
        for (i, j) in inv_p.indices() {
            assert_eq!(inv_p.get(i, j), &h_minor_p_entry(&x, i, j).unwrap());
        }
    }
}
