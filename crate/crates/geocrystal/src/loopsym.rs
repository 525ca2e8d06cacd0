//! Loop symmetric functions as exact polynomials in the variables `x_a^b`
//! (`a ∈ [m]`, `b ∈ [n]`).
//!
//! Colors are loop superscripts: `x_a^{(r)} = x_a^{b}` with `b ≡ r - a + 1 (mod n)`.
//! Monomials are exponent vectors in row-major `(a, b)` order and are compared
//! lexicographically, so `x_1^1 > x_1^2 > ... > x_1^n > x_2^1 > ...`; the
//! leading term of a polynomial is its largest monomial.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Rational, Semifield};
use crate::error::{Error, Result};
use crate::matrix::Grid;

/// Sparse polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LoopPoly {
    m: usize,
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// One term in the JSON form `{"coeff": "p/q", "exps": {"a,b": e}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coeff: Rational,
    pub exps: BTreeMap<String, u32>,
}

impl LoopPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        LoopPoly { m, n, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, n: usize, c: Rational) -> Self {
        let mut p = Self::zero(m, n);
        p.add_term(vec![0; m * n], c);
        p
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::constant(m, n, Rational::from(1))
    }

    /// The monomial `c · x^exps`.
    pub fn monomial(m: usize, n: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), m * n, "exponent vector has wrong length");
        let mut p = Self::zero(m, n);
        p.add_term(exps, c);
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest monomial and its coefficient.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!((self.m, self.n), (other.m, other.n), "polynomials from different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = Self::zero(self.m, self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.m, self.n), |acc, _| acc.mul(self))
    }

    /// Total degree of the leading term (the polynomials built here are homogeneous).
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(e, _)| e.iter().sum())
    }

    /// Evaluates at a point; `x` must be `m x n`.
    pub fn eval(&self, x: &Grid<Rational>) -> Result<Rational> {
        if (x.m(), x.n()) != (self.m, self.n) {
            return Err(Error::Dimension(format!(
                "polynomial in {}x{} variables evaluated at a {}x{} grid",
                self.m,
                self.n,
                x.m(),
                x.n()
            )));
        }
        let vals: Vec<&Rational> = x.iter().collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in vals.iter().zip(e) {
                if k > 0 {
                    t = t * v.pow(k as i64);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    pub fn to_terms(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| PolyTerm {
                coeff: c.clone(),
                exps: e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| (format!("{},{}", v / self.n + 1, v % self.n + 1), k))
                    .collect(),
            })
            .collect()
    }

    pub fn from_terms(m: usize, n: usize, terms: &[PolyTerm]) -> Result<Self> {
        let mut p = Self::zero(m, n);
        for t in terms {
            let mut e = vec![0u32; m * n];
            for (key, &k) in &t.exps {
                let (a, b) = parse_var(key)?;
                if a == 0 || b == 0 || a > m || b > n {
                    return Err(Error::Parse(format!("variable \"{key}\" outside {m}x{n}")));
                }
                e[(a - 1) * n + (b - 1)] += k;
            }
            p.add_term(e, t.coeff.clone());
        }
        Ok(p)
    }
}

fn parse_var(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad variable key \"{key}\", expected \"a,b\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

impl Serialize for LoopPoly {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        self.to_terms().serialize(s)
    }
}

impl fmt::Display for LoopPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let constant = e.iter().all(|&k| k == 0);
            let neg = !c.is_positive();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if constant || abs != Rational::from(1) {
                write!(f, "{abs}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}^{}", v / self.n + 1, v % self.n + 1)?;
                if k > 1 {
                    write!(f, "**{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LoopPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A partition, weakly decreasing with no trailing zeros required.
pub type Partition = Vec<usize>;

pub fn conjugate(lambda: &[usize]) -> Partition {
    let len = lambda.first().copied().unwrap_or(0);
    (1..=len).map(|k| lambda.iter().filter(|&&l| l >= k).count()).collect()
}

fn is_partition(lambda: &[usize]) -> bool {
    lambda.windows(2).all(|w| w[0] >= w[1])
}

fn check_skew(lambda: &[usize], mu: &[usize]) -> Result<()> {
    if !is_partition(lambda) || !is_partition(mu) {
        return Err(Error::Dimension(format!("{lambda:?} / {mu:?}: not partitions")));
    }
    if mu.len() > lambda.len() || mu.iter().zip(lambda).any(|(a, b)| a > b) {
        return Err(Error::Dimension(format!("{mu:?} is not contained in {lambda:?}")));
    }
    Ok(())
}

/// The polynomial ring in the `m x n` loop variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopRing {
    pub m: usize,
    pub n: usize,
}

impl LoopRing {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Dimension("loop ring needs m, n >= 1".into()));
        }
        Ok(LoopRing { m, n })
    }

    pub fn zero(&self) -> LoopPoly {
        LoopPoly::zero(self.m, self.n)
    }

    pub fn one(&self) -> LoopPoly {
        LoopPoly::one(self.m, self.n)
    }

    /// Position of `x_a^{(r)}` in the exponent vector (1-based `a`, any color `r`).
    pub fn loop_index(&self, a: usize, r: i64) -> usize {
        let b = (r - a as i64).rem_euclid(self.n as i64) as usize;
        (a - 1) * self.n + b
    }

    /// The variable `x_a^b` (grid coordinates, 1-based).
    pub fn var(&self, a: usize, b: usize) -> LoopPoly {
        let mut e = vec![0; self.m * self.n];
        e[(a - 1) * self.n + (b - 1)] = 1;
        LoopPoly::monomial(self.m, self.n, e, Rational::from(1))
    }

    /// `E_k^{(r)} = Σ_{i_1<...<i_k} x_{i_1}^{(r)} x_{i_2}^{(r+1)} ... x_{i_k}^{(r+k-1)}`.
    ///
    /// ```
    /// use geocrystal::loopsym::LoopRing;
    /// let ring = LoopRing::new(2, 3).unwrap();
    /// // m = 2: E_1^{(2)} = x_1^2 + x_2^1
    /// assert_eq!(ring.loop_e(1, 2), ring.var(1, 2).add(&ring.var(2, 1)));
    /// assert!(ring.loop_e(3, 1).is_zero());
    /// ```
    pub fn loop_e(&self, k: i64, r: i64) -> LoopPoly {
        if k < 0 || k > self.m as i64 {
            return self.zero();
        }
        let mut out = self.zero();
        let mut chosen = Vec::with_capacity(k as usize);
        self.e_rec(k as usize, r, 1, &mut chosen, &mut out);
        out
    }

    fn e_rec(&self, k: usize, r: i64, start: usize, chosen: &mut Vec<usize>, out: &mut LoopPoly) {
        if chosen.len() == k {
            let mut e = vec![0; self.m * self.n];
            for (t, &i) in chosen.iter().enumerate() {
                e[self.loop_index(i, r + t as i64)] += 1;
            }
            out.add_term(e, Rational::from(1));
            return;
        }
        for i in start..=self.m {
            chosen.push(i);
            self.e_rec(k, r, i + 1, chosen, out);
            chosen.pop();
        }
    }

    /// `H_k^{(r)} = Σ_{i_1<=...<=i_k} x_{i_1}^{(r)} x_{i_2}^{(r-1)} ... x_{i_k}^{(r-k+1)}`.
    pub fn loop_h(&self, k: i64, r: i64) -> LoopPoly {
        if k < 0 {
            return self.zero();
        }
        self.schur_tableaux(&[k as usize], &[], r).expect("a single row is a partition")
    }

    /// Loop skew Schur function as a sum over semistandard tableaux with entries `<= m`;
    /// the cell `(i, j)` has color `i - j + r`.
    ///
    /// ```
    /// use geocrystal::loopsym::LoopRing;
    /// let ring = LoopRing::new(3, 4).unwrap();
    /// assert_eq!(ring.schur_tableaux(&[1, 1], &[], 2).unwrap(), ring.loop_e(2, 2));
    /// ```
    pub fn schur_tableaux(&self, lambda: &[usize], mu: &[usize], r: i64) -> Result<LoopPoly> {
        check_skew(lambda, mu)?;
        let cells: Vec<(usize, usize)> = lambda
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| {
                let start = mu.get(i).copied().unwrap_or(0);
                (start..l).map(move |j| (i, j))
            })
            .collect();
        let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut out = self.zero();
        self.tableau_rec(&cells, 0, r, &mut filling, &mut out);
        Ok(out)
    }

    fn tableau_rec(
        &self,
        cells: &[(usize, usize)],
        idx: usize,
        r: i64,
        filling: &mut BTreeMap<(usize, usize), usize>,
        out: &mut LoopPoly,
    ) {
        if idx == cells.len() {
            let mut e = vec![0; self.m * self.n];
            for (&(i, j), &t) in filling.iter() {
                e[self.loop_index(t, i as i64 - j as i64 + r)] += 1;
            }
            out.add_term(e, Rational::from(1));
            return;
        }
        let (i, j) = cells[idx];
        let mut lo = 1;
        if j > 0 {
            if let Some(&left) = filling.get(&(i, j - 1)) {
                lo = lo.max(left);
            }
        }
        if i > 0 {
            if let Some(&up) = filling.get(&(i - 1, j)) {
                lo = lo.max(up + 1);
            }
        }
        for t in lo..=self.m {
            filling.insert((i, j), t);
            self.tableau_rec(cells, idx + 1, r, filling, out);
        }
        filling.remove(&(i, j));
    }

    /// Jacobi-Trudi: `det(E_{λ'_i - μ'_j + j - i}^{(r + μ'_j - j + 1)})` of size `ℓ = λ_1`.
    ///
    /// ```
    /// use geocrystal::loopsym::LoopRing;
    /// let ring = LoopRing::new(2, 4).unwrap();
    /// let jt = ring.schur_jt(&[4, 2], &[], 1).unwrap();
    /// assert_eq!(jt, ring.schur_tableaux(&[4, 2], &[], 1).unwrap());
    /// assert_eq!(jt.len(), 3);
    /// ```
    pub fn schur_jt(&self, lambda: &[usize], mu: &[usize], r: i64) -> Result<LoopPoly> {
        check_skew(lambda, mu)?;
        let lc = conjugate(lambda);
        let mut mc = conjugate(mu);
        let l = lc.len();
        mc.resize(l, 0);
        let mat: Vec<Vec<LoopPoly>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let k = lc[i] as i64 - mc[j] as i64 + j as i64 - i as i64;
                        self.loop_e(k, r + mc[j] as i64 - j as i64)
                    })
                    .collect()
            })
            .collect();
        Ok(poly_det(self, &mat))
    }

    /// Entries of `M(x)` as polynomials: `M_{ij} = E^{(i)}_{m+j-i}`.
    pub fn m_matrix(&self) -> Vec<Vec<LoopPoly>> {
        let (m, n) = (self.m as i64, self.n);
        (1..=n as i64).map(|i| (1..=n as i64).map(|j| self.loop_e(m + j - i, i)).collect()).collect()
    }

    /// `S_k = Δ_{[k,n],[1,n-k+1]}(M(x))` for `1 <= k <= min(m, n)`.
    pub fn shape_invariant(&self, k: usize) -> Result<LoopPoly> {
        if k == 0 || k > self.m.min(self.n) {
            return Err(Error::Dimension(format!("shape invariant index {k} outside [1, {}]", self.m.min(self.n))));
        }
        let mm = self.m_matrix();
        let sub: Vec<Vec<LoopPoly>> = (k - 1..self.n).map(|i| mm[i][..self.n - k + 1].to_vec()).collect();
        Ok(poly_det(self, &sub))
    }

    /// `□(i, j)`: the loop Schur function of an `(m-i+1) x (j-i+1)` rectangle with
    /// northwest color `j`; `1` for an empty rectangle.
    pub fn box_poly(&self, i: usize, j: usize) -> Result<LoopPoly> {
        if i == 0 || j == 0 || j > self.n || i > self.m + 1 {
            return Err(Error::Dimension(format!("box ({i}, {j}) out of range")));
        }
        if i > j || i > self.m {
            return Ok(self.one());
        }
        let rect = vec![j - i + 1; self.m - i + 1];
        self.schur_jt(&rect, &[], j as i64)
    }

    /// `E_p = Π_j Π_k E^{(j)}_{λ_k^{(j)}}` with `λ^{(j)}` conjugate to column `j` of `p`.
    ///
    /// ```
    /// use geocrystal::loopsym::{ExponentMatrix, LoopRing};
    /// let ring = LoopRing::new(3, 2).unwrap();
    /// let p = ExponentMatrix::new(vec![vec![3, 2], vec![1, 2], vec![0, 1]]).unwrap();
    /// let e = ring.e_p(&p).unwrap();
    /// assert_eq!(e.to_string(), "E2^(1)E1^(1)**2E3^(2)E2^(2)");
    /// let (lead, coeff) = ring.expand(&e).leading_term().map(|(k, c)| (k.clone(), c.clone())).unwrap();
    /// assert_eq!((lead.as_slice(), coeff.to_string().as_str()), (p.exps(), "1"));
    /// ```
    pub fn e_p(&self, p: &ExponentMatrix) -> Result<EMonomial> {
        self.check_dims(p)?;
        if !p.is_dominant() {
            return Err(Error::NotDominant);
        }
        let mut factors = Vec::new();
        for b in 0..self.n {
            let col: Vec<usize> = (0..self.m).map(|a| p.get(a, b) as usize).collect();
            for k in conjugate(&col) {
                factors.push(EFactor { k, r: b + 1 });
            }
        }
        Ok(EMonomial(factors))
    }

    pub fn expand(&self, e: &EMonomial) -> LoopPoly {
        e.0.iter().fold(self.one(), |acc, f| acc.mul(&self.loop_e(f.k as i64, f.r as i64)))
    }

    fn check_dims(&self, p: &ExponentMatrix) -> Result<()> {
        if (p.m, p.n) != (self.m, self.n) {
            return Err(Error::Dimension(format!("exponent matrix {}x{} in a {}x{} ring", p.m, p.n, self.m, self.n)));
        }
        Ok(())
    }

    /// Writes `f` as a combination of `E_p`'s by repeatedly cancelling the largest
    /// dominant monomial, or returns what is left once no dominant monomial remains.
    pub fn lsym_reduce(&self, f: &LoopPoly) -> Reduction {
        let mut cur = f.clone();
        let mut steps = Vec::new();
        loop {
            if cur.is_zero() {
                return Reduction::Representation(steps);
            }
            let top = cur.terms().rev().find(|(e, _)| ExponentMatrix::from_exps(self.m, self.n, e).is_dominant());
            let Some((e, c)) = top else {
                return Reduction::Remainder { steps, remainder: cur };
            };
            let p = ExponentMatrix::from_exps(self.m, self.n, e);
            let c = c.clone();
            let ep = self.e_p(&p).expect("dominant by construction");
            cur = cur.sub(&self.expand(&ep).scale(&c));
            steps.push(ReductionStep { coeff: c, p, e: ep });
        }
    }
}

/// Laplace expansion along the first row.
pub fn poly_det(ring: &LoopRing, a: &[Vec<LoopPoly>]) -> LoopPoly {
    let k = a.len();
    if k == 0 {
        return ring.one();
    }
    if k == 1 {
        return a[0][0].clone();
    }
    let mut acc = ring.zero();
    for c in 0..k {
        if a[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LoopPoly>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = a[0][c].mul(&poly_det(ring, &minor));
        acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `m x n` matrix of exponents; entry `(a, b)` is the exponent of `x_a^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct ExponentMatrix {
    m: usize,
    n: usize,
    entries: Vec<u32>,
}

impl ExponentMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("exponent matrix must be nonempty and rectangular".into()));
        }
        Ok(ExponentMatrix { m, n, entries: rows.concat() })
    }

    pub fn from_exps(m: usize, n: usize, e: &[u32]) -> Self {
        assert_eq!(e.len(), m * n);
        ExponentMatrix { m, n, entries: e.to_vec() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based entry.
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.entries[a * self.n + b]
    }

    pub fn exps(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    /// Every column weakly decreases from top to bottom.
    pub fn is_dominant(&self) -> bool {
        (0..self.n).all(|b| (1..self.m).all(|a| self.get(a - 1, b) >= self.get(a, b)))
    }

    pub fn monomial(&self) -> LoopPoly {
        LoopPoly::monomial(self.m, self.n, self.entries.clone(), Rational::from(1))
    }
}

impl TryFrom<Vec<Vec<u32>>> for ExponentMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        ExponentMatrix::new(rows)
    }
}

impl From<ExponentMatrix> for Vec<Vec<u32>> {
    fn from(p: ExponentMatrix) -> Self {
        p.rows()
    }
}

/// The factor `E_k^{(r)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EFactor {
    pub k: usize,
    pub r: usize,
}

/// A product of `E_k^{(r)}` factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct EMonomial(pub Vec<EFactor>);

impl EMonomial {
    /// Factors grouped as `((k, r), multiplicity)` in first-appearance order.
    pub fn grouped(&self) -> Vec<(EFactor, usize)> {
        let mut out: Vec<(EFactor, usize)> = Vec::new();
        for f in &self.0 {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some((_, c)) => *c += 1,
                None => out.push((*f, 1)),
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|f| f.k).sum()
    }
}

impl fmt::Display for EMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (g, c) in self.grouped() {
            write!(f, "E{}^({})", g.k, g.r)?;
            if c > 1 {
                write!(f, "**{c}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub coeff: Rational,
    pub p: ExponentMatrix,
    pub e: EMonomial,
}

/// Result of [`LoopRing::lsym_reduce`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reduction {
    /// `f = Σ coeff · E_p` exactly.
    Representation(Vec<ReductionStep>),
    /// No dominant monomial is left in `remainder`.
    Remainder { steps: Vec<ReductionStep>, remainder: LoopPoly },
}

impl Reduction {
    pub fn steps(&self) -> &[ReductionStep] {
        match self {
            Reduction::Representation(s) => s,
            Reduction::Remainder { steps, .. } => steps,
        }
    }

    pub fn is_representation(&self) -> bool {
        matches!(self, Reduction::Representation(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{kappa, r_i};
    use crate::grsk::grsk_insert;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    /// Monomial from loop-colored factors `(i, r, exponent)`.
    fn lmono(ring: &LoopRing, factors: &[(usize, i64, u32)]) -> LoopPoly {
        let mut e = vec![0; ring.m * ring.n];
        for &(i, col, k) in factors {
            e[ring.loop_index(i, col)] += k;
        }
        LoopPoly::monomial(ring.m, ring.n, e, r(1))
    }

    fn grid(rows: &[&[i64]]) -> Grid<Rational> {
        Grid::new(rows.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn two_row_elementary() {
        let ring = LoopRing::new(2, 4).unwrap();
        let a = |i: usize| ring.var(1, (i + 3) % 4 + 1);
        let b = |i: usize| ring.var(2, (i + 3) % 4 + 1);
        for i in 1..=4 {
            assert_eq!(ring.loop_e(1, i as i64), a(i).add(&b(i + 3)));
            assert_eq!(ring.loop_e(2, i as i64), a(i).mul(&b(i)));
        }
        assert!(ring.loop_e(3, 1).is_zero());
        assert_eq!(ring.loop_e(0, 1), ring.one());
        assert_eq!(ring.loop_h(0, 3), ring.one());
    }

    #[test]
    fn h_two_rows_n5() {
        let ring = LoopRing::new(2, 5).unwrap();
        let a = |i: usize| ring.var(1, i);
        let b = |i: usize| ring.var(2, i);
        let prod = |v: Vec<LoopPoly>| v.into_iter().fold(ring.one(), |acc, p| acc.mul(&p));
        let expect = [
            prod(vec![a(2), a(1), a(5), a(4)]),
            prod(vec![a(2), a(1), a(5), b(3)]),
            prod(vec![a(2), a(1), b(4), b(3)]),
            prod(vec![a(2), b(5), b(4), b(3)]),
            prod(vec![b(1), b(5), b(4), b(3)]),
        ]
        .iter()
        .fold(ring.zero(), |acc, p| acc.add(p));
        assert_eq!(ring.loop_h(4, 2), expect);
    }

    #[test]
    fn h_matches_kappa() {
        let ring = LoopRing::new(2, 3).unwrap();
        let x = grid(&[&[2, 7, 3], &[5, 1, 4]]);
        for rr in 1..=3 {
            let h = ring.loop_h(2, rr as i64 - 1).eval(&x).unwrap();
            assert_eq!(h, kappa(x.row(0), x.row(1), rr));
        }
    }

    #[test]
    fn schur_example() {
        let ring = LoopRing::new(2, 4).unwrap();
        let expect = [
            lmono(&ring, &[(1, 1, 1), (1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 1, 1), (2, 2, 1)]),
            lmono(&ring, &[(1, 1, 1), (1, 3, 1), (1, 4, 1), (2, 1, 1), (2, 2, 2)]),
            lmono(&ring, &[(1, 1, 1), (1, 4, 1), (2, 1, 1), (2, 2, 2), (2, 3, 1)]),
        ]
        .iter()
        .fold(ring.zero(), |acc, p| acc.add(p));
        let tab = ring.schur_tableaux(&[4, 2], &[], 1).unwrap();
        assert_eq!(tab, expect);
        let e = |k, c| ring.loop_e(k, c);
        let z = ring.zero();
        let o = ring.one();
        let mat = vec![
            vec![e(2, 1), z.clone(), z.clone(), z.clone()],
            vec![e(1, 1), e(2, 4), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), e(1, 3), e(2, 2)],
            vec![z.clone(), z, o, e(1, 2)],
        ];
        assert_eq!(poly_det(&ring, &mat), expect);
        assert_eq!(ring.schur_jt(&[4, 2], &[], 1).unwrap(), expect);
    }

    #[test]
    fn jt_small_skew() {
        let ring = LoopRing::new(3, 3).unwrap();
        for (l, m) in [(vec![3, 2, 1], vec![1]), (vec![2, 2], vec![1, 1]), (vec![3, 1], vec![2]), (vec![], vec![])] {
            for rr in 1..=3 {
                assert_eq!(ring.schur_tableaux(&l, &m, rr).unwrap(), ring.schur_jt(&l, &m, rr).unwrap());
            }
        }
    }

    #[test]
    fn shape_invariants() {
        let ring = LoopRing::new(3, 2).unwrap();
        let x = |a, b| ring.var(a, b);
        let expect = x(1, 2).mul(&x(2, 2)).add(&x(1, 2).mul(&x(3, 1))).add(&x(2, 1).mul(&x(3, 1)));
        assert_eq!(ring.shape_invariant(2).unwrap(), expect);
        let all = (1..=3).flat_map(|a| (1..=2).map(move |b| (a, b))).fold(ring.one(), |acc, (a, b)| acc.mul(&x(a, b)));
        assert_eq!(ring.shape_invariant(1).unwrap(), all);
        for k in 1..=2 {
            assert_eq!(ring.shape_invariant(k).unwrap(), ring.box_poly(k, 2).unwrap());
        }
    }

    #[test]
    fn m_matrix_evaluates_to_m_of() {
        let ring = LoopRing::new(3, 3).unwrap();
        let x = grid(&[&[1, 2, 3], &[4, 5, 6], &[2, 1, 7]]);
        let mm = crate::matrix::m_of(&x);
        for (i, row) in ring.m_matrix().iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                assert_eq!(p.eval(&x).unwrap(), mm.at(i, j));
            }
        }
    }

    #[test]
    fn p_from_boxes() {
        let ring = LoopRing::new(3, 2).unwrap();
        let x = grid(&[&[1, 2], &[3, 4], &[5, 6]]);
        let pq = grsk_insert(&x).unwrap();
        for (i, j) in pq.p.indices() {
            let num = ring.box_poly(i, j).unwrap().eval(&x).unwrap();
            let den = ring.box_poly(i + 1, j).unwrap().eval(&x).unwrap();
            assert_eq!(pq.p.get(i, j), &(num / den), "z_{i},{j}");
        }
    }

    #[test]
    fn schur_is_r_invariant() {
        let ring = LoopRing::new(3, 3).unwrap();
        let x = grid(&[&[1, 2, 3], &[4, 5, 6], &[2, 1, 7]]);
        let f = ring.schur_jt(&[2, 1], &[], 2).unwrap();
        for i in 1..=2 {
            assert_eq!(f.eval(&x).unwrap(), f.eval(&r_i(&x, i).unwrap()).unwrap());
        }
    }

    #[test]
    fn e_p_example() {
        let ring = LoopRing::new(3, 2).unwrap();
        let p = ExponentMatrix::new(vec![vec![3, 2], vec![1, 2], vec![0, 1]]).unwrap();
        assert!(p.is_dominant());
        let e = ring.e_p(&p).unwrap();
        assert_eq!(e.to_string(), "E2^(1)E1^(1)**2E3^(2)E2^(2)");
        let expanded = ring.expand(&e);
        assert_eq!(expanded.leading_term(), Some((&p.exps().to_vec(), &r(1))));
        let zero = ExponentMatrix::new(vec![vec![0, 0]; 3]).unwrap();
        assert_eq!(ring.e_p(&zero).unwrap(), EMonomial::default());
        let bad = ExponentMatrix::new(vec![vec![0, 0], vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(ring.e_p(&bad), Err(Error::NotDominant));
    }

    #[test]
    fn reduce_examples() {
        let ring = LoopRing::new(2, 3).unwrap();
        let f = ring.loop_e(2, 1).mul(&ring.loop_e(1, 2));
        let red = ring.lsym_reduce(&f);
        let Reduction::Representation(steps) = &red else { panic!("{red:?}") };
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].coeff, r(1));
        assert_eq!(steps[0].e.to_string(), "E2^(1)E1^(2)");

        let x11 = ring.var(1, 1);
        match ring.lsym_reduce(&x11) {
            Reduction::Remainder { steps, remainder } => {
                assert_eq!(steps.len(), 1);
                assert_eq!(remainder, ring.var(2, 3).scale(&r(-1)));
            }
            other => panic!("{other:?}"),
        }

        let kappa2 = ring.loop_h(2, 1);
        let red = ring.lsym_reduce(&kappa2);
        assert!(red.is_representation());
        let back = red.steps().iter().fold(ring.zero(), |acc, s| acc.add(&ring.expand(&s.e).scale(&s.coeff)));
        assert_eq!(back, kappa2);
    }

    #[test]
    fn json_terms() {
        let ring = LoopRing::new(2, 3).unwrap();
        let f = ring.loop_e(1, 2).scale(&Rational::new(3, 2));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"[{"coeff":"3/2","exps":{"1,2":1}},{"coeff":"3/2","exps":{"2,1":1}}]"#);
        let terms: Vec<PolyTerm> = serde_json::from_str(&s).unwrap();
        assert_eq!(LoopPoly::from_terms(2, 3, &terms).unwrap(), f);
        assert_eq!(f.to_string(), "3/2*x1^2 + 3/2*x2^1");
    }
}
