//! Gelfand-Tsetlin patterns as a geometric crystal.
//!
//! A pattern `z ∈ GT_n^{<=m}` has entries `z_{i,j}` for `1 <= i <= min(m, n)`,
//! `i <= j <= n`; row `j` of the pattern (in the usual triangular picture) is
//! `(z_{1,j}, ..., z_{min(m,j),j})`. The matrix route `Φ`/`Ψ` is normative;
//! the closed formulas for `m >= n` are kept as an independent cross-check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gmax, Rational, Semifield};
use crate::crystal::{maps_from_matrix, unipotent, CrystalData};
use crate::error::{Error, Result};
use crate::matrix::{wi_matrix, SfMatrix};

/// Trapezoidal array `(z_{i,j})`, `1 <= i <= min(m, n)`, `i <= j <= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GtPattern<S> {
    m: usize,
    n: usize,
    entries: Vec<S>,
}

impl<S: Semifield> GtPattern<S> {
    /// Builds a pattern from a 1-based `(i, j)` generator.
    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let p = m.min(n);
        let mut entries = Vec::new();
        for i in 1..=p {
            for j in i..=n {
                entries.push(f(i, j));
            }
        }
        GtPattern { m, n, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `min(m, n)`: the number of pattern rows that are nonempty.
    pub fn p(&self) -> usize {
        self.m.min(self.n)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.p() && j >= i && j <= self.n
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        assert!(self.contains(i, j), "z_({i},{j}) is not an entry of a GT_{}^<={} pattern", self.n, self.m);
        // rows 1..i-1 hold n, n-1, ..., n-i+2 entries
        (i - 1) * (self.n + 1) - (i - 1) * i / 2 + (j - i)
    }

    /// `z_{i,j}` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[self.offset(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        let k = self.offset(i, j);
        self.entries[k] = v;
    }

    /// All index pairs in row-major order.
    pub fn indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.entries.len());
        for i in 1..=self.p() {
            for j in i..=self.n {
                out.push((i, j));
            }
        }
        out
    }

    /// `sh(z) = (z_{1,n}, ..., z_{p,n})`.
    pub fn shape(&self) -> Vec<S> {
        (1..=self.p()).map(|i| self.get(i, self.n).clone()).collect()
    }

    pub fn map<T: Semifield>(&self, f: impl Fn(&S) -> T) -> GtPattern<T> {
        GtPattern { m: self.m, n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// `ω · z`: multiplies every entry `z_{i,j}` by `ω_i`.
    pub fn scale_rows(&self, omega: &[S]) -> Self {
        let mut out = self.clone();
        for (i, j) in self.indices() {
            out.set(i, j, self.get(i, j).mul(&omega[i - 1]));
        }
        out
    }
}

impl<S: Semifield> fmt::Debug for GtPattern<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GT_{}^<={}", self.n, self.m)?;
        f.debug_map().entries(self.indices().into_iter().map(|(i, j)| (format!("{i},{j}"), self.get(i, j)))).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct PatternJson<S> {
    m: usize,
    n: usize,
    entries: BTreeMap<String, S>,
}

impl<S: Semifield + Serialize> Serialize for GtPattern<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let entries = self.indices().into_iter().map(|(i, j)| (format!("{i},{j}"), self.get(i, j).clone())).collect();
        PatternJson { m: self.m, n: self.n, entries }.serialize(s)
    }
}

impl<'de, S: Semifield + Deserialize<'de>> Deserialize<'de> for GtPattern<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let mut raw = PatternJson::<S>::deserialize(d)?;
        if raw.m == 0 || raw.n == 0 {
            return Err(D::Error::custom("pattern needs m, n >= 1"));
        }
        let p = raw.m.min(raw.n);
        let expected = p * raw.n - p * (p - 1) / 2;
        if raw.entries.len() != expected {
            return Err(D::Error::custom(format!("expected {expected} entries, got {}", raw.entries.len())));
        }
        let mut missing = None;
        let pat = GtPattern::from_fn(raw.m, raw.n, |i, j| {
            raw.entries.remove(&format!("{i},{j}")).unwrap_or_else(|| {
                missing.get_or_insert((i, j));
                S::one()
            })
        });
        match missing {
            Some((i, j)) => Err(D::Error::custom(format!("missing entry \"{i},{j}\""))),
            None => Ok(pat),
        }
    }
}

// ---------------------------------------------------------------------------
// Parametrization

/// `Φ(z) = W^p(z_{pp}, z_{p,p+1}/z_{pp}, ...) ... W^1(z_{11}, z_{12}/z_{11}, ..., z_{1n}/z_{1,n-1})`.
pub fn phi_param<S: Semifield>(z: &GtPattern<S>) -> SfMatrix<S> {
    let n = z.n();
    let mut acc = SfMatrix::identity(n);
    for i in (1..=z.p()).rev() {
        let args: Vec<S> =
            (i..=n).map(|j| if j == i { z.get(i, i).clone() } else { z.get(i, j).div(z.get(i, j - 1)) }).collect();
        let w = wi_matrix(n, i, &args).expect("argument count matches");
        acc = acc.mul(&w).expect("square factors");
    }
    acc
}

fn interval(a: usize, b: usize) -> Vec<usize> {
    (a..=b).map(|k| k - 1).collect()
}

/// `Ψ(A)`: `z_{i,j} = Δ_{[i,j]}(A)/Δ_{[i+1,j]}(A)` with flag minors on initial columns.
pub fn psi_param(a: &SfMatrix<Rational>, m: usize) -> Result<GtPattern<Rational>> {
    let n = a.rows();
    if a.cols() != n || n == 0 || m == 0 {
        return Err(Error::Dimension("Ψ needs a nonempty square matrix".into()));
    }
    let mut cache: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    let mut flag = |i: usize, j: usize| -> Result<Rational> {
        if i > j {
            return Ok(Rational::from(1));
        }
        if let Some(v) = cache.get(&(i, j)) {
            return Ok(v.clone());
        }
        let v = a.flag_minor(&interval(i, j))?;
        cache.insert((i, j), v.clone());
        Ok(v)
    };
    let mut out = GtPattern::from_fn(m, n, |_, _| Rational::from(1));
    for (i, j) in out.indices() {
        let den = flag(i + 1, j)?;
        if den.is_zero() {
            return Err(Error::VanishingMinor(format!("Δ_[{},{}]", i + 1, j)));
        }
        let num = flag(i, j)?;
        if num.is_zero() {
            return Err(Error::VanishingMinor(format!("Δ_[{i},{j}]")));
        }
        out.set(i, j, num / den);
    }
    Ok(out)
}

/// Planar network vertex `(x, y)`.
type Vertex = (usize, usize);

/// Sum over vertex-disjoint path families in the network `Γ_n^{<=m}` from the
/// sources `I` (1-based, increasing) to the sinks `1..=|I|`.
///
/// Subtraction-free, so it works in either semifield; equals the flag minor
/// `Δ_I(Φ(z))` over the rationals. `None` means there is no family (zero).
pub fn lgv_flag_minor<S: Semifield>(z: &GtPattern<S>, sources: &[usize]) -> Option<S> {
    let n = z.n();
    let p = z.p();
    if sources.is_empty() {
        return Some(S::one());
    }
    if sources.iter().any(|&s| s == 0 || s > n) || sources.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    let source = |s: usize| -> Vertex {
        if s <= p {
            (0, s)
        } else {
            (s - p, p)
        }
    };
    let ratio = |y: usize, col: usize| -> S {
        // z_{y,col} / z_{y,col-1}, with z_{y,y-1} = 1
        if col == y {
            z.get(y, y).clone()
        } else {
            z.get(y, col).div(z.get(y, col - 1))
        }
    };

    // Paths only move down, so a path from height y uses exactly y steps.
    fn paths<S: Semifield>(
        v: Vertex,
        sink: usize,
        used: &mut Vec<Vertex>,
        weight: S,
        ratio: &dyn Fn(usize, usize) -> S,
        n: usize,
        out: &mut Vec<(Vec<Vertex>, S)>,
    ) {
        let (x, y) = v;
        if y == 0 {
            if x == sink {
                out.push((used.clone(), weight));
            }
            return;
        }
        let mut step = |next: Vertex, w: S, used: &mut Vec<Vertex>| {
            if next == (0, 0) || next.0 + next.1 > n || used.contains(&next) {
                return;
            }
            used.push(next);
            paths(next, sink, used, w, ratio, n, out);
            used.pop();
        };
        if x >= 1 && x <= sink {
            step((x, y - 1), weight.clone(), used);
        }
        if x < sink {
            let w = weight.mul(&ratio(y, x + y));
            step((x + 1, y - 1), w, used);
        }
    }

    fn families<S: Semifield>(
        k: usize,
        starts: &[Vertex],
        blocked: &[Vertex],
        acc: S,
        ratio: &dyn Fn(usize, usize) -> S,
        n: usize,
        total: &mut Option<S>,
    ) {
        if k == starts.len() {
            *total = Some(match total.take() {
                None => acc,
                Some(t) => t.add(&acc),
            });
            return;
        }
        let start = starts[k];
        if blocked.contains(&start) {
            return;
        }
        let mut found = Vec::new();
        let mut used = blocked.to_vec();
        used.push(start);
        paths(start, k + 1, &mut used, S::one(), ratio, n, &mut found);
        for (path, w) in found {
            families(k + 1, starts, &path, acc.mul(&w), ratio, n, total);
        }
    }

    let starts: Vec<Vertex> = sources.iter().map(|&s| source(s)).collect();
    let mut total = None;
    families(0, &starts, &[], S::one(), &ratio, n, &mut total);
    total
}

// ---------------------------------------------------------------------------
// Crystal structure

fn check_j<S: Semifield>(z: &GtPattern<S>, j: usize) -> Result<()> {
    if j == 0 || j >= z.n() {
        return Err(Error::Dimension(format!("GT crystal index {j} outside 1..{}", z.n().saturating_sub(1))));
    }
    Ok(())
}

/// `(γ̄, ε̄_j, φ̄_j)` from `M = Φ(z)`: `γ̄ = diag M`, `ε̄_j = M_{j+1,j+1}/M_{j+1,j}`,
/// `φ̄_j = M_{jj}/M_{j+1,j}`.
pub fn gt_maps<S: Semifield>(z: &GtPattern<S>, j: usize) -> Result<CrystalData<S>> {
    check_j(z, j)?;
    maps_from_matrix(&phi_param(z), j)
}

/// Diamond ratio `φ_{i,j} = z_{i-1,j} z_{i,j} / (z_{i-1,j-1} z_{i,j+1})`.
pub fn diamond<S: Semifield>(z: &GtPattern<S>, i: usize, j: usize) -> S {
    z.get(i - 1, j).mul(z.get(i, j)).div(&z.get(i - 1, j - 1).mul(z.get(i, j + 1)))
}

fn require_full<S: Semifield>(z: &GtPattern<S>) -> Result<()> {
    if z.m() < z.n() {
        return Err(Error::Dimension("closed GT formulas are implemented for m >= n only".into()));
    }
    Ok(())
}

/// Closed formulas for `(γ̄, ε̄_j, φ̄_j)` when `m >= n`.
pub fn gt_maps_explicit<S: Semifield>(z: &GtPattern<S>, j: usize) -> Result<CrystalData<S>> {
    check_j(z, j)?;
    require_full(z)?;
    let n = z.n();
    let gamma = (1..=n)
        .map(|k| {
            let top = S::product((1..=k).map(|i| z.get(i, k)).collect::<Vec<_>>());
            if k == 1 {
                top
            } else {
                top.div(&S::product((1..k).map(|i| z.get(i, k - 1)).collect::<Vec<_>>()))
            }
        })
        .collect();
    let d: Vec<S> = (2..=j).map(|i| diamond(z, i, j)).collect();
    // prefix[k] = Π_{i=2}^{k} φ_{i,j}, k = 1..=j
    let prefix: Vec<S> = (1..=j).map(|k| S::product(&d[..k - 1])).collect();
    let eps_terms: Vec<S> = prefix.iter().map(|v| v.inv()).collect();
    let phi_terms: Vec<S> = (1..=j).map(|k| S::product(&d[k - 1..])).collect();
    let eps = z.get(1, j + 1).div(z.get(1, j)).mul(&gmax(&eps_terms)?);
    let phi = z.get(j, j).div(z.get(j + 1, j + 1)).mul(&gmax(&phi_terms)?);
    Ok(CrystalData { gamma, eps, phi })
}

/// `ē_j^c(z) = Ψ(x_j((c-1)φ̄_j) Φ(z) x_j((c^{-1}-1)ε̄_j))`.
///
/// ```
/// use geocrystal::{gt::{gt_e, gt_maps, GtPattern}, Rational};
/// let z = GtPattern::from_fn(2, 2, |i, j| Rational::from((i + 2 * j) as i64));
/// let c = Rational::new(3, 2);
/// let (before, after) = (gt_maps(&z, 1).unwrap(), gt_maps(&gt_e(&z, 1, &c).unwrap(), 1).unwrap());
/// assert_eq!(after.phi, before.phi * c);
/// ```
pub fn gt_e(z: &GtPattern<Rational>, j: usize, c: &Rational) -> Result<GtPattern<Rational>> {
    let data = gt_maps(z, j)?;
    let one = Rational::from(1);
    let n = z.n();
    let mat = unipotent(n, j, &((c - &one) * data.phi)).mul(&phi_param(z))?.mul(&unipotent(
        n,
        j,
        &((c.try_inv()? - one) * data.eps),
    ))?;
    psi_param(&mat, z.m())
}

/// Closed form of `ē_j^c` when `m >= n`: only row `j` changes, with
/// `z'_{i,j} = z_{i,j} C_{i,j}/C_{i+1,j}`, `C_{i,j} = Σ_{k=1}^j c^{[k>=i]} Π_{l=2}^k φ_{l,j}`.
pub fn gt_e_explicit<S: Semifield>(z: &GtPattern<S>, j: usize, c: &S) -> Result<GtPattern<S>> {
    check_j(z, j)?;
    require_full(z)?;
    let d: Vec<S> = (2..=j).map(|i| diamond(z, i, j)).collect();
    let prefix: Vec<S> = (1..=j).map(|k| S::product(&d[..k - 1])).collect();
    let big_c = |i: usize| -> S {
        let terms: Vec<S> =
            prefix.iter().enumerate().map(|(idx, v)| if idx + 1 >= i { v.mul(c) } else { v.clone() }).collect();
        S::sum(&terms).expect("j >= 1")
    };
    let cs: Vec<S> = (1..=j + 1).map(big_c).collect();
    let mut out = z.clone();
    for i in 1..=j {
        out.set(i, j, z.get(i, j).mul(&cs[i - 1]).div(&cs[i]));
    }
    Ok(out)
}

/// Decoration
/// `F(z) = Σ z_{i,j+1}/z_{i,j} + Σ z_{i,j}/z_{i+1,j+1} + [m<n] z_{m,m}`;
/// `None` when every index range is empty.
///
/// ```
/// use geocrystal::{grsk::grsk_insert, gt::gt_decoration, Grid, Rational};
/// let r = |v| Rational::from(v);
/// let x = Grid::new(vec![vec![r(1), r(2)], vec![r(3), r(4)], vec![r(5), r(6)]]).unwrap();
/// let pq = grsk_insert(&x).unwrap();
/// assert_eq!(gt_decoration(&pq.p), Some(Rational::new(21, 11)));
/// assert_eq!(gt_decoration(&pq.q), Some(Rational::new(210, 11)));
/// ```
pub fn gt_decoration<S: Semifield>(z: &GtPattern<S>) -> Option<S> {
    let (m, n) = (z.m(), z.n());
    let mut terms = Vec::new();
    for i in 1..=z.p() {
        for j in i..n {
            terms.push(z.get(i, j + 1).div(z.get(i, j)));
        }
    }
    for i in 1..m.min(n) {
        for j in i..n {
            terms.push(z.get(i, j).div(z.get(i + 1, j + 1)));
        }
    }
    if m < n {
        terms.push(z.get(m, m).clone());
    }
    S::sum(&terms)
}

/// Decoration written in minors of `M = Φ(z)`; agrees with [`gt_decoration`].
pub fn gt_decoration_minor(z: &GtPattern<Rational>) -> Result<Rational> {
    let (m, n) = (z.m(), z.n());
    let mat = phi_param(z);
    let minor = |rows: Vec<usize>, cols: Vec<usize>| -> Result<Rational> {
        let r: Vec<usize> = rows.into_iter().map(|k| k - 1).collect();
        let c: Vec<usize> = cols.into_iter().map(|k| k - 1).collect();
        mat.minor(&r, &c)
    };
    let range = |a: usize, b: usize| -> Vec<usize> { (a..=b).collect() };
    let ratio = |num: Rational, den: Rational, what: String| -> Result<Rational> {
        if den.is_zero() {
            Err(Error::VanishingMinor(what))
        } else {
            Ok(num / den)
        }
    };
    let mut total = Rational::zero();
    for k in 1..=(m.min(n) - 1) {
        let mut a = vec![k];
        a.extend(range(k + 2, n));
        let mut cols_b = range(1, n - k - 1);
        cols_b.push(n - k + 1);
        let num = minor(a, range(1, n - k))? + minor(range(k + 1, n), cols_b)?;
        let den = minor(range(k + 1, n), range(1, n - k))?;
        total = total + ratio(num, den, format!("Δ_[{},{}]", k + 1, n))?;
    }
    if m < n {
        let mut a = vec![m];
        a.extend(range(m + 2, n));
        let num = minor(a, range(1, n - m))?;
        let den = minor(range(m + 1, n), range(1, n - m))?;
        total = total + ratio(num, den, format!("Δ_[{},{}]", m + 1, n))?;
        for j in 1..=(n - m) {
            let mut cols = range(1, j - 1);
            cols.push(j + 1);
            let num = minor(range(m + 1, m + j), cols)?;
            let den = minor(range(m + 1, m + j), range(1, j))?;
            total = total + ratio(num, den, format!("Δ_[{},{}]", m + 1, m + j))?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TropInt;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn pattern(m: usize, n: usize, vals: &[(usize, usize, Rational)]) -> GtPattern<Rational> {
        GtPattern::from_fn(m, n, |i, j| vals.iter().find(|v| v.0 == i && v.1 == j).unwrap().2.clone())
    }

    fn sample(m: usize, n: usize) -> GtPattern<Rational> {
        GtPattern::from_fn(m, n, |i, j| q((3 * i + 5 * j) as i64 % 7 + 1, (i + 2 * j) as i64 % 5 + 1))
    }

    #[test]
    fn indexing() {
        let z = sample(2, 4);
        assert_eq!(z.indices().len(), 4 + 3);
        assert_eq!(z.shape().len(), 2);
        let z = sample(5, 3);
        assert_eq!(z.indices(), vec![(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]);
    }

    #[test]
    fn decoration_values() {
        let p = pattern(3, 2, &[(1, 1, q(15, 1)), (1, 2, q(240, 11)), (2, 2, q(33, 1))]);
        assert_eq!(gt_decoration(&p), Some(q(21, 11)));
        let qq =
            pattern(2, 3, &[(1, 1, q(2, 1)), (1, 2, q(24, 5)), (1, 3, q(240, 11)), (2, 2, q(5, 1)), (2, 3, q(33, 1))]);
        assert_eq!(gt_decoration(&qq), Some(q(210, 11)));
        assert_eq!(gt_decoration_minor(&qq).unwrap(), q(210, 11));
        assert_eq!(gt_decoration_minor(&p).unwrap(), q(21, 11));
    }

    #[test]
    fn psi_inverts_phi() {
        for (m, n) in [(1, 1), (2, 3), (3, 3), (4, 2), (2, 4)] {
            let z = sample(m, n);
            assert_eq!(psi_param(&phi_param(&z), m).unwrap(), z);
        }
    }

    #[test]
    fn contiguous_lgv() {
        let z = sample(4, 4);
        for i in 1..=4 {
            for j in i..=4 {
                let src: Vec<usize> = (i..=j).collect();
                let expected = (i..=j).fold(q(1, 1), |acc, k| acc * z.get(k, j));
                assert_eq!(lgv_flag_minor(&z, &src), Some(expected));
            }
        }
        assert_eq!(lgv_flag_minor(&z, &[3]), Some(z.get(3, 3).clone()));
    }

    #[test]
    fn lgv_matches_determinant_on_every_source_set() {
        for (m, n) in [(1, 3), (2, 4), (3, 3), (5, 4), (2, 5)] {
            let z = sample(m, n);
            let mat = phi_param(&z);
            for mask in 1u32..(1 << n) {
                let src: Vec<usize> = (1..=n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
                let rows: Vec<usize> = src.iter().map(|k| k - 1).collect();
                let det = mat.flag_minor(&rows).unwrap();
                let paths = lgv_flag_minor(&z, &src).unwrap_or_else(Rational::zero);
                assert_eq!(paths, det, "m={m} n={n} I={src:?}");
            }
        }
    }

    #[test]
    fn explicit_matches_matrix_route() {
        let z = sample(4, 4);
        let c = q(5, 3);
        for j in 1..4 {
            assert_eq!(gt_maps(&z, j).unwrap(), gt_maps_explicit(&z, j).unwrap());
            assert_eq!(gt_e(&z, j, &c).unwrap(), gt_e_explicit(&z, j, &c).unwrap());
        }
        assert!(gt_e_explicit(&sample(2, 4), 1, &c).is_err());
    }

    #[test]
    fn tropical_phi_is_available() {
        let z = GtPattern::from_fn(3, 3, |i, j| TropInt::from((4 - i + j) as i64));
        let d = gt_maps(&z, 1).unwrap();
        assert_eq!(d, gt_maps_explicit(&z, 1).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let z = sample(2, 3);
        let s = serde_json::to_string(&z).unwrap();
        assert!(s.contains("\"1,1\""));
        let back: GtPattern<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<GtPattern<Rational>>(r#"{"m":1,"n":2,"entries":{"1,1":"1"}}"#).is_err());
    }
}
