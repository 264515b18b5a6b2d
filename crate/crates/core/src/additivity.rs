//! Contingency matrices with prescribed margins, K- and H-additivity, and
//! the stable triples they certify.
//!
//! A [`KMatrix`] is a plain `p × q` table. An [`HMatrix`] is a
//! `(p+1) × (q+1)` table whose top-left entry is zero; its margins are the
//! full sums of rows `2..=p+1` and columns `2..=q+1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::partition::{dominates, Composition, Dominance, Partition, RationalVector};
use crate::ratfeas::{SolveError, StrictSystem};

#[derive(Debug, Error)]
pub enum AdditivityError {
    #[error("line {line}: `{token}` is not a nonnegative integer")]
    BadEntry { line: usize, token: String },
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("matrix has no entries")]
    Empty,
    #[error("top-left entry must be 0, found {0}")]
    NonzeroCorner(usize),
    #[error("certificate has {x} row and {y} column potentials for a {rows}×{cols} matrix")]
    CertificateShape {
        x: usize,
        y: usize,
        rows: usize,
        cols: usize,
    },
    #[error("vectors of lengths {0} and {1} cannot be compared")]
    LengthMismatch(usize, usize),
    #[error("refusing to enumerate: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Solver(#[from] SolveError),
}

fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>, AdditivityError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| AdditivityError::BadEntry {
                    line: idx + 1,
                    token: t.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn check_rectangular(rows: &[Vec<usize>]) -> Result<usize, AdditivityError> {
    let width = rows.first().map_or(0, Vec::len);
    for (row, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(AdditivityError::Ragged {
                row: row + 1,
                len: r.len(),
                expected: width,
            });
        }
    }
    Ok(width)
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    for r in rows {
        let line: Vec<String> = r.iter().map(usize::to_string).collect();
        writeln!(f, "{}", line.join(" "))?;
    }
    Ok(())
}

fn pi_of_entries<'a>(rows: impl IntoIterator<Item = &'a Vec<usize>>) -> Partition {
    Partition::from_unsorted(rows.into_iter().flatten().copied().filter(|&x| x > 0).collect())
}

/// A nonnegative integer matrix; a member of `𝓜(β, γ)` for its own margins.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KMatrix {
    rows: Vec<Vec<usize>>,
    cols: usize,
}

impl KMatrix {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, AdditivityError> {
        let cols = check_rectangular(&rows)?;
        Ok(KMatrix { rows, cols })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    pub fn row_sums(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.iter().sum()).collect())
    }

    pub fn col_sums(&self) -> Composition {
        Composition::new((0..self.cols).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect())
    }

    pub fn pi(&self) -> Partition {
        pi_of_entries(&self.rows)
    }

    pub fn total(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    pub fn scaled(&self, n: usize) -> KMatrix {
        KMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(|x| x * n).collect()).collect(),
            cols: self.cols,
        }
    }
}

impl FromStr for KMatrix {
    type Err = AdditivityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = parse_rows(s)?;
        if rows.is_empty() {
            return Err(AdditivityError::Empty);
        }
        KMatrix::new(rows)
    }
}

impl fmt::Display for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// A `(p+1) × (q+1)` nonnegative integer matrix with a zero top-left entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HMatrix {
    rows: Vec<Vec<usize>>,
}

impl HMatrix {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, AdditivityError> {
        let width = check_rectangular(&rows)?;
        if rows.is_empty() || width == 0 {
            return Err(AdditivityError::Empty);
        }
        if rows[0][0] != 0 {
            return Err(AdditivityError::NonzeroCorner(rows[0][0]));
        }
        Ok(HMatrix { rows })
    }

    /// The all-zero matrix with `p` margin rows and `q` margin columns.
    pub fn zero(p: usize, q: usize) -> Self {
        HMatrix {
            rows: vec![vec![0; q + 1]; p + 1],
        }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `(p, q)`: the matrix is `(p+1) × (q+1)`.
    pub fn margin_shape(&self) -> (usize, usize) {
        (self.rows.len() - 1, self.rows[0].len() - 1)
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    /// Full sums of rows `2..=p+1`.
    pub fn row_margins(&self) -> Composition {
        Composition::new(self.rows[1..].iter().map(|r| r.iter().sum()).collect())
    }

    /// Full sums of columns `2..=q+1`.
    pub fn col_margins(&self) -> Composition {
        let q = self.rows[0].len();
        Composition::new((1..q).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect())
    }

    pub fn pi(&self) -> Partition {
        pi_of_entries(&self.rows)
    }

    pub fn total(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    pub fn scaled(&self, n: usize) -> HMatrix {
        HMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(|x| x * n).collect()).collect(),
        }
    }
}

impl FromStr for HMatrix {
    type Err = AdditivityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HMatrix::new(parse_rows(s)?)
    }
}

impl fmt::Display for HMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// Depth-first walk over tables with row sums `rows` and column sums
/// `cols`, exactly or as upper bounds. Backtracking state lives on an
/// explicit stack so the walk can pause between tables.
#[derive(Clone, Debug)]
struct TableWalk {
    rows: Vec<usize>,
    cols: Vec<usize>,
    exact: bool,
    entries: Vec<usize>,
    row_left: Vec<usize>,
    col_left: Vec<usize>,
    /// Upper bound of the value at each assigned cell.
    his: Vec<usize>,
    started: bool,
    done: bool,
}

impl TableWalk {
    fn new(rows: &[usize], cols: &[usize], exact: bool) -> Self {
        let infeasible = exact && rows.iter().sum::<usize>() != cols.iter().sum::<usize>();
        TableWalk {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            exact,
            entries: vec![0; rows.len() * cols.len()],
            row_left: rows.to_vec(),
            col_left: cols.to_vec(),
            his: Vec::new(),
            started: false,
            done: infeasible,
        }
    }

    fn cell_range(&self, cell: usize) -> (usize, usize) {
        let q = self.cols.len();
        let (i, j) = (cell / q, cell % q);
        let hi = self.row_left[i].min(self.col_left[j]);
        if !self.exact {
            return (0, hi);
        }
        let later_cols: usize = self.col_left[j + 1..].iter().sum();
        let later_rows: usize = self.row_left[i + 1..].iter().sum();
        let lo = self.row_left[i]
            .saturating_sub(later_cols)
            .max(self.col_left[j].saturating_sub(later_rows));
        (lo, hi)
    }

    fn set(&mut self, cell: usize, value: usize) {
        let q = self.cols.len();
        let (i, j) = (cell / q, cell % q);
        let old = self.entries[cell];
        self.row_left[i] = self.row_left[i] + old - value;
        self.col_left[j] = self.col_left[j] + old - value;
        self.entries[cell] = value;
    }

    /// Moves to the next assignment of the deepest cell that can still grow.
    fn backtrack(&mut self) {
        while let Some(hi) = self.his.pop() {
            let cell = self.his.len();
            if self.entries[cell] < hi {
                self.set(cell, self.entries[cell] + 1);
                self.his.push(hi);
                return;
            }
            self.set(cell, 0);
        }
        self.done = true;
    }

    /// `(entries, row leftovers, column leftovers)` of the next table.
    fn next_table(&mut self) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        if self.entries.is_empty() {
            // no cells: one table, provided exact margins vanish
            if self.started || self.done {
                return None;
            }
            self.started = true;
            let zero = self.rows.iter().chain(&self.cols).all(|&x| x == 0);
            return (!self.exact || zero).then(|| (Vec::new(), self.rows.clone(), self.cols.clone()));
        }
        if self.started && !self.done {
            self.backtrack();
        }
        self.started = true;
        loop {
            if self.done {
                return None;
            }
            if self.his.len() == self.entries.len() {
                let complete = !self.exact || self.row_left.iter().chain(&self.col_left).all(|&x| x == 0);
                if complete {
                    return Some((self.entries.clone(), self.row_left.clone(), self.col_left.clone()));
                }
                self.backtrack();
                continue;
            }
            let cell = self.his.len();
            let (lo, hi) = self.cell_range(cell);
            if lo > hi {
                self.backtrack();
                continue;
            }
            self.set(cell, lo);
            self.his.push(hi);
        }
    }
}

/// Lazy stream of `𝓜(β, γ)`.
#[derive(Clone, Debug)]
pub struct KMatrices {
    walk: TableWalk,
}

impl Iterator for KMatrices {
    type Item = KMatrix;

    fn next(&mut self) -> Option<KMatrix> {
        let (entries, _, _) = self.walk.next_table()?;
        let q = self.walk.cols.len();
        let rows = if q == 0 {
            vec![Vec::new(); self.walk.rows.len()]
        } else {
            entries.chunks(q).map(<[usize]>::to_vec).collect()
        };
        Some(KMatrix { rows, cols: q })
    }
}

/// Lazy stream of `ℋ(β, γ)`.
#[derive(Clone, Debug)]
pub struct HMatrices {
    walk: TableWalk,
}

impl Iterator for HMatrices {
    type Item = HMatrix;

    fn next(&mut self) -> Option<HMatrix> {
        let (entries, first_col, first_row) = self.walk.next_table()?;
        let (p, q) = (self.walk.rows.len(), self.walk.cols.len());
        let mut rows = vec![vec![0; q + 1]; p + 1];
        rows[0][1..].copy_from_slice(&first_row);
        for i in 0..p {
            rows[i + 1][0] = first_col[i];
            rows[i + 1][1..].copy_from_slice(&entries[i * q..(i + 1) * q]);
        }
        Some(HMatrix { rows })
    }
}

/// All nonnegative integer matrices with row sums `β` and column sums `γ`.
pub fn enumerate_k_matrices(beta: &Composition, gamma: &Composition) -> KMatrices {
    KMatrices {
        walk: TableWalk::new(beta.parts(), gamma.parts(), true),
    }
}

/// The members of `𝓜(β, γ)` with π-sequence `α`.
pub fn enumerate_k_class<'a>(
    beta: &Composition,
    gamma: &Composition,
    alpha: &'a Partition,
) -> impl Iterator<Item = KMatrix> + 'a {
    enumerate_k_matrices(beta, gamma).filter(move |a| a.pi() == *alpha)
}

/// All `HMatrix` with row margins `β` and column margins `γ`. The inner
/// block ranges over tables with row sums at most `β` and column sums at
/// most `γ`; the remainders fill the first column and first row.
pub fn enumerate_h_matrices(beta: &Composition, gamma: &Composition) -> HMatrices {
    HMatrices {
        walk: TableWalk::new(beta.parts(), gamma.parts(), false),
    }
}

/// The members of `ℋ(β, γ)` with π-sequence `α`.
pub fn enumerate_h_class<'a>(
    beta: &Composition,
    gamma: &Composition,
    alpha: &'a Partition,
) -> impl Iterator<Item = HMatrix> + 'a {
    enumerate_h_matrices(beta, gamma).filter(move |a| a.pi() == *alpha)
}

/// Class sizes `|ℋ(β, γ)_α|` for every `α` that occurs.
pub fn h_class_sizes(beta: &Composition, gamma: &Composition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for a in enumerate_h_matrices(beta, gamma) {
        *out.entry(a.pi()).or_insert(0) += 1;
    }
    out
}

/// Row potentials `x` and column potentials `y`, stored 1-based in the
/// sense that `x[0]` is `x_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdditivityCertificate {
    #[serde(serialize_with = "serialize_rationals")]
    pub x: Vec<BigRational>,
    #[serde(serialize_with = "serialize_rationals")]
    pub y: Vec<BigRational>,
}

fn serialize_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

impl AdditivityCertificate {
    pub fn from_integers(x: &[i64], y: &[i64]) -> Self {
        let conv = |v: &[i64]| v.iter().map(|&a| BigRational::from_integer(a.into())).collect();
        AdditivityCertificate { x: conv(x), y: conv(y) }
    }

    fn potential(&self, i: usize, j: usize) -> BigRational {
        &self.x[i] + &self.y[j]
    }
}

/// The positions that take part in the additivity condition.
fn positions(rows: &[Vec<usize>], skip_corner: bool) -> Vec<(usize, usize)> {
    let width = rows.first().map_or(0, Vec::len);
    (0..rows.len())
        .flat_map(|i| (0..width).map(move |j| (i, j)))
        .filter(|&pos| !(skip_corner && pos == (0, 0)))
        .collect()
}

/// `x_i + y_j − x_k − y_l >= 1` whenever `a_{ij}` and `a_{kl}` lie in
/// consecutive value classes; the remaining pairs follow by transitivity.
/// Variables are `x_2..x_p, y_2..y_q`, with `x_1 = y_1 = 0`.
fn additivity_system(rows: &[Vec<usize>], skip_corner: bool) -> StrictSystem {
    let (p, q) = (rows.len(), rows.first().map_or(0, Vec::len));
    let nx = p.saturating_sub(1);
    let mut classes: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, j) in positions(rows, skip_corner) {
        classes.entry(rows[i][j]).or_default().push((i, j));
    }
    let mut sys = StrictSystem::new(nx + q.saturating_sub(1));
    let mut seen = std::collections::HashSet::new();
    let classes: Vec<&Vec<(usize, usize)>> = classes.values().collect();
    for pair in classes.windows(2) {
        let (lower, upper) = (pair[0], pair[1]);
        for &(i, j) in upper {
            for &(k, l) in lower {
                let mut row = vec![0i64; sys.num_vars];
                if i > 0 {
                    row[i - 1] += 1;
                }
                if k > 0 {
                    row[k - 1] -= 1;
                }
                if j > 0 {
                    row[nx + j - 1] += 1;
                }
                if l > 0 {
                    row[nx + l - 1] -= 1;
                }
                if seen.insert(row.clone()) {
                    sys.push(row);
                }
            }
        }
    }
    sys
}

fn certificate_from_solution(z: &[BigRational], p: usize, q: usize) -> AdditivityCertificate {
    let mut x = vec![BigRational::zero()];
    x.extend_from_slice(&z[..p - 1]);
    let mut y = vec![BigRational::zero()];
    y.extend_from_slice(&z[p - 1..]);
    debug_assert_eq!(y.len(), q);
    AdditivityCertificate { x, y }
}

fn solve_additivity(rows: &[Vec<usize>], skip_corner: bool) -> Result<Option<AdditivityCertificate>, AdditivityError> {
    let (p, q) = (rows.len(), rows.first().map_or(0, Vec::len));
    if p == 0 || q == 0 {
        return Ok(Some(AdditivityCertificate {
            x: vec![BigRational::zero(); p],
            y: vec![BigRational::zero(); q],
        }));
    }
    let sys = additivity_system(rows, skip_corner);
    Ok(sys.solve()?.map(|z| certificate_from_solution(&z, p, q)))
}

/// Potentials with `a_{ij} > a_{kl} ⇒ x_i + y_j > x_k + y_l`, or `None`.
pub fn is_k_additive(a: &KMatrix) -> Result<Option<AdditivityCertificate>, AdditivityError> {
    solve_additivity(&a.rows, false)
}

/// Potentials with `x_1 = y_1 = 0` and the additivity implication over all
/// positions except the corner, or `None`.
pub fn is_h_additive(a: &HMatrix) -> Result<Option<AdditivityCertificate>, AdditivityError> {
    solve_additivity(&a.rows, true)
}

fn check_pairs(rows: &[Vec<usize>], cert: &AdditivityCertificate, skip_corner: bool) -> Result<bool, AdditivityError> {
    let (p, q) = (rows.len(), rows.first().map_or(0, Vec::len));
    if cert.x.len() != p || cert.y.len() != q {
        return Err(AdditivityError::CertificateShape {
            x: cert.x.len(),
            y: cert.y.len(),
            rows: p,
            cols: q,
        });
    }
    let pos = positions(rows, skip_corner);
    for &(i, j) in &pos {
        for &(k, l) in &pos {
            if rows[i][j] > rows[k][l] && cert.potential(i, j) <= cert.potential(k, l) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks a K-additivity certificate pair by pair.
pub fn check_k_certificate(a: &KMatrix, cert: &AdditivityCertificate) -> Result<bool, AdditivityError> {
    check_pairs(&a.rows, cert, false)
}

/// Checks an H-additivity certificate pair by pair, including the pins
/// `x_1 = y_1 = 0`.
pub fn check_certificate(a: &HMatrix, cert: &AdditivityCertificate) -> Result<bool, AdditivityError> {
    let ok = check_pairs(&a.rows, cert, true)?;
    Ok(ok && cert.x[0].is_zero() && cert.y[0].is_zero())
}

/// The `(p+q) × (pq+p+q)` 0/1 matrix whose solutions `M x = (β, γ)` are the
/// images [`flatten`] of matrices with margins `(β, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintMatrix {
    pub p: usize,
    pub q: usize,
    pub rows: Vec<Vec<i64>>,
}

pub fn build_constraint_matrix(p: usize, q: usize) -> ConstraintMatrix {
    let width = p * q + p + q;
    let mut rows = vec![vec![0i64; width]; p + q];
    // 1-based column indices, as in the defining formula
    for i in 1..=p {
        for j in i * (q + 1)..=q + i * (q + 1) {
            rows[i - 1][j - 1] = 1;
        }
    }
    for s in 1..=q {
        for k in 0..=p {
            rows[p + s - 1][s + k * (q + 1) - 1] = 1;
        }
    }
    ConstraintMatrix { p, q, rows }
}

impl ConstraintMatrix {
    pub fn rank(&self) -> usize {
        crate::ratfeas::rank(&self.rows)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `z M` for `z = (x_2, …, x_{p+1}, y_2, …, y_{q+1})`.
    pub fn left_apply(&self, z: &[i64]) -> Vec<i64> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().zip(z).map(|(r, w)| r[c] * w).sum())
            .collect()
    }
}

impl fmt::Display for ConstraintMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(i64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Entries of `A` in the order `a_{1,2}, …, a_{1,q+1}, a_{2,1}, …,
/// a_{p+1,q+1}`, skipping the corner.
pub fn flatten_entries(a: &HMatrix) -> Vec<i64> {
    a.rows.iter().flatten().skip(1).map(|&x| x as i64).collect()
}

pub fn flatten(a: &HMatrix) -> RationalVector {
    RationalVector::from_integers(flatten_entries(a))
}

/// Inverse of [`flatten_entries`]; `None` if the length is not
/// `pq + p + q` or an entry is negative.
pub fn unflatten(p: usize, q: usize, v: &[i64]) -> Option<HMatrix> {
    if v.len() != p * q + p + q || v.iter().any(|&x| x < 0) {
        return None;
    }
    let mut flat = vec![0usize];
    flat.extend(v.iter().map(|&x| x as usize));
    Some(HMatrix {
        rows: flat.chunks(q + 1).map(<[usize]>::to_vec).collect(),
    })
}

/// `x ∈ P(a)`, the permutohedron of `a`, via the dominance test `x ⪯ a`.
pub fn permutohedron_contains(a: &RationalVector, x: &RationalVector) -> Result<bool, AdditivityError> {
    if a.len() != x.len() {
        return Err(AdditivityError::LengthMismatch(a.len(), x.len()));
    }
    Ok(dominates(x, a).is_dominated())
}

/// Limits on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_entry_sum: usize,
    pub max_rows: usize,
    pub max_cols: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_entry_sum: 24,
            max_rows: 5,
            max_cols: 5,
        }
    }
}

impl EnumerationBudget {
    /// Admits enumeration of matrices of the given shape whose entries sum
    /// to at most `entry_sum`.
    pub fn admit(&self, shape: (usize, usize), entry_sum: usize) -> Result<(), AdditivityError> {
        if shape.0 > self.max_rows || shape.1 > self.max_cols {
            return Err(AdditivityError::BudgetExceeded(format!(
                "{}×{} matrices exceed the {}×{} limit",
                shape.0, shape.1, self.max_rows, self.max_cols
            )));
        }
        if entry_sum > self.max_entry_sum {
            return Err(AdditivityError::BudgetExceeded(format!(
                "entry sum up to {entry_sum} exceeds the limit {}",
                self.max_entry_sum
            )));
        }
        Ok(())
    }

    pub fn admit_h(&self, beta: &Composition, gamma: &Composition) -> Result<(), AdditivityError> {
        self.admit((beta.len() + 1, gamma.len() + 1), beta.size() + gamma.size())
    }

    pub fn admit_k(&self, beta: &Composition, gamma: &Composition) -> Result<(), AdditivityError> {
        self.admit((beta.len(), gamma.len()), beta.size().max(gamma.size()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimality {
    Minimal,
    /// Another matrix with the same margins whose π-sequence is dominated
    /// by, or equal to, that of the input.
    Dominated(HMatrix),
}

/// Searches the integer members of `ℋ(β, γ)` for a matrix `B != A` with
/// `π(B) ⪯ π(A)`.
pub fn integer_minimality_check(a: &HMatrix, budget: &EnumerationBudget) -> Result<Minimality, AdditivityError> {
    let (beta, gamma) = (a.row_margins(), a.col_margins());
    budget.admit_h(&beta, &gamma)?;
    let target = RationalVector::from_integers(a.pi().parts().iter().map(|&x| x as i64));
    for b in enumerate_h_matrices(&beta, &gamma) {
        if b == *a {
            continue;
        }
        let pb = RationalVector::from_integers(b.pi().parts().iter().map(|&x| x as i64));
        if matches!(
            dominates(&pb, &target),
            Dominance::StrictlyDominated | Dominance::EqualPi
        ) {
            return Ok(Minimality::Dominated(b));
        }
    }
    Ok(Minimality::Minimal)
}

/// `(π(A), β, γ)` read off an additive matrix. The margins keep the order
/// of the matrix's rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedTriple {
    pub alpha: Partition,
    pub beta: Composition,
    pub gamma: Composition,
    pub certificate: AdditivityCertificate,
}

impl GeneratedTriple {
    /// The triple with both margins sorted. Permuting rows or columns
    /// (other than the first) together with their potentials keeps the
    /// matrix additive, so the sorted triple is certified as well.
    pub fn partitions(&self) -> (Partition, Partition, Partition) {
        (self.alpha.clone(), self.beta.pi(), self.gamma.pi())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleGeneration {
    Certified(GeneratedTriple),
    /// The strict system with this many inequalities has no solution.
    Rejected {
        constraints: usize,
    },
}

impl TripleGeneration {
    pub fn certified(&self) -> Option<&GeneratedTriple> {
        match self {
            TripleGeneration::Certified(t) => Some(t),
            TripleGeneration::Rejected { .. } => None,
        }
    }
}

/// An H-stable triple `(π(A), β, γ)` from an H-additive matrix.
pub fn generate_stable_triple(a: &HMatrix) -> Result<TripleGeneration, AdditivityError> {
    Ok(match is_h_additive(a)? {
        Some(certificate) => TripleGeneration::Certified(GeneratedTriple {
            alpha: a.pi(),
            beta: a.row_margins(),
            gamma: a.col_margins(),
            certificate,
        }),
        None => TripleGeneration::Rejected {
            constraints: additivity_system(&a.rows, true).rows.len(),
        },
    })
}

/// A K-stable triple `(π(A), β, γ)` from a K-additive matrix.
pub fn k_additive_stable_triple(a: &KMatrix) -> Result<TripleGeneration, AdditivityError> {
    Ok(match is_k_additive(a)? {
        Some(certificate) => TripleGeneration::Certified(GeneratedTriple {
            alpha: a.pi(),
            beta: a.row_sums(),
            gamma: a.col_sums(),
            certificate,
        }),
        None => TripleGeneration::Rejected {
            constraints: additivity_system(&a.rows, false).rows.len(),
        },
    })
}
