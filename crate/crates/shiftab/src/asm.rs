//! Alternating sign matrices attached to shifted tableaux.
//!
//! A gl tableau with `n` rows gives an `n x mu_1` matrix, a symplectic one a
//! `2n x mu_1` matrix with rows ordered `1~, 1, 2~, 2, ...` (the U-turn
//! case). Column partial sums are taken from the top, row partial sums from
//! the right. Zeros are classified into compass points by the pair
//! (sum strictly to the right, sum strictly above):
//! `(0,0)` NW, `(0,1)` SW, `(1,0)` NE, `(1,1)` SE.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::core_types::{
    delta, lambda_from_mu, rect_complement_conjugate, Entry, Mode, Partition, Shape, StrictPartition,
};
use crate::error::{Error, Result};
use crate::polynomial::LaurentPoly;
use crate::tableau::{validate, Family, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AsmMatrix {
    pub rows: Vec<Vec<i8>>,
    pub mu: StrictPartition,
    pub uturn: bool,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidMatrix(msg.into())
}

impl AsmMatrix {
    pub fn new(rows: Vec<Vec<i8>>, mu: StrictPartition, uturn: bool) -> Result<AsmMatrix> {
        let a = AsmMatrix { rows, mu, uturn };
        a.check()?;
        Ok(a)
    }

    /// Build from rows alone, reading `mu` off the unit column sums.
    pub fn infer(rows: Vec<Vec<i8>>, uturn: bool) -> Result<AsmMatrix> {
        let m = rows.first().map_or(0, Vec::len);
        let mut mu: Vec<usize> = (1..=m)
            .filter(|&q| rows.iter().map(|r| r.get(q - 1).copied().unwrap_or(0) as i32).sum::<i32>() == 1)
            .collect();
        mu.reverse();
        AsmMatrix::new(rows, StrictPartition::new(mu)?, uturn)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Number of tableau rows: `rows` in the gl case, `rows / 2` with a U-turn.
    pub fn rank(&self) -> usize {
        if self.uturn {
            self.rows.len() / 2
        } else {
            self.rows.len()
        }
    }

    /// Entry at 1-indexed `(i, q)`.
    pub fn get(&self, i: usize, q: usize) -> i8 {
        self.rows[i - 1][q - 1]
    }

    /// `sum_{p > q} a_{ip}`.
    pub fn right_sum(&self, i: usize, q: usize) -> i32 {
        self.rows[i - 1][q..].iter().map(|&v| v as i32).sum()
    }

    /// `sum_{r <= i} a_{rq}`.
    pub fn top_sum(&self, i: usize, q: usize) -> i32 {
        self.rows[..i].iter().map(|r| r[q - 1] as i32).sum()
    }

    /// Check entries, partial sums, row (or row-pair) sums and column sums.
    pub fn check(&self) -> Result<()> {
        let m = self.num_cols();
        let n = self.mu.len();
        let want_rows = if self.uturn { 2 * n } else { n };
        if self.rows.len() != want_rows {
            return Err(bad(format!("{} rows, expected {want_rows} for mu = {}", self.rows.len(), self.mu)));
        }
        if self.rows.iter().any(|r| r.len() != m) {
            return Err(bad("rows have different lengths"));
        }
        if self.mu.part(1) > m {
            return Err(bad(format!("mu = {} does not fit in {m} columns", self.mu)));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(q) = row.iter().position(|v| !(-1..=1).contains(v)) {
                return Err(bad(format!("entry {} at ({}, {}) is not -1, 0 or 1", row[q], i + 1, q + 1)));
            }
            let mut s = 0;
            for q in (0..m).rev() {
                s += row[q] as i32;
                if !(0..=1).contains(&s) {
                    return Err(bad(format!("row {} partial sum from column {} is {s}", i + 1, q + 1)));
                }
            }
            if !self.uturn && s != 1 {
                return Err(bad(format!("row {} sums to {s}", i + 1)));
            }
        }
        if self.uturn {
            for p in 0..n {
                let s: i32 = self.rows[2 * p..2 * p + 2].iter().flatten().map(|&v| v as i32).sum();
                if s != 1 {
                    return Err(bad(format!("rows {} and {} sum to {s}", 2 * p + 1, 2 * p + 2)));
                }
            }
        }
        for q in 1..=m {
            let mut s = 0;
            for i in 1..=self.rows.len() {
                s += self.get(i, q) as i32;
                if !(0..=1).contains(&s) {
                    return Err(bad(format!("column {q} partial sum down to row {i} is {s}")));
                }
            }
            let want = self.mu.contains(q) as i32;
            if s != want {
                return Err(bad(format!("column {q} sums to {s}, expected {want}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for AsmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Matrix row holding `e`: the letter in the gl case, `2k-1` for `k~` and `2k` for `k` with a U-turn.
fn row_of(e: Entry, uturn: bool) -> usize {
    let k = e.letter as usize;
    match (uturn, e.barred) {
        (false, _) => k,
        (true, true) => 2 * k - 1,
        (true, false) => 2 * k,
    }
}

fn entry_of_row(i: usize, uturn: bool) -> Entry {
    if uturn {
        let k = i.div_ceil(2) as u8;
        if i % 2 == 1 {
            Entry::bar(k)
        } else {
            Entry::plain(k)
        }
    } else {
        Entry::plain(i as u8)
    }
}

/// The matrix whose `(i, j)` entry is the letter of row `i` found on diagonal `j` (`c - r + 1 = j`), primes kept.
pub fn letter_matrix(t: &Tableau, mode: Mode) -> Vec<Vec<Option<Entry>>> {
    let uturn = mode == Mode::Sp;
    let n = t.rows.len();
    let m = t.shape.rows.first().copied().unwrap_or(0);
    let mut out = vec![vec![None; m]; if uturn { 2 * n } else { n }];
    for ((r, c), e) in t.cells() {
        out[row_of(e, uturn) - 1][c - r] = Some(e);
    }
    out
}

/// The alternating sign matrix of an unprimed shifted tableau with `n = rows` letters.
pub fn st_to_asm(st: &Tableau, mode: Mode) -> Result<AsmMatrix> {
    let n = st.rows.len();
    validate(st, Family::ST, mode, n)?;
    let mu = StrictPartition::new(st.shape.rows.clone())?;
    let rows = letter_matrix(st, mode)
        .into_iter()
        .map(|row| {
            let m = row.len();
            (0..m)
                .map(|q| match (row[q].is_some(), q + 1 < m && row[q + 1].is_some()) {
                    (true, false) => 1,
                    (false, true) => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let a = AsmMatrix { rows, mu, uturn: mode == Mode::Sp };
    a.check().map_err(|e| Error::Internal(format!("matrix of a valid tableau fails its axioms: {e}")))?;
    Ok(a)
}

/// Inverse of [`st_to_asm`]: `(i, q)` is occupied iff the row sum from `q` rightwards is 1.
pub fn asm_to_st(a: &AsmMatrix) -> Result<Tableau> {
    a.check()?;
    let shape = Shape::shifted(&a.mu);
    let mut diagonals: Vec<Vec<Entry>> = vec![Vec::new(); a.num_cols()];
    for i in 1..=a.num_rows() {
        for q in 1..=a.num_cols() {
            if a.right_sum(i, q - 1) == 1 {
                diagonals[q - 1].push(entry_of_row(i, a.uturn));
            }
        }
    }
    let mut rows: Vec<Vec<Entry>> = shape.rows.iter().map(|&len| Vec::with_capacity(len)).collect();
    for (j, letters) in diagonals.iter().enumerate() {
        let cells: Vec<usize> = (1..=shape.num_rows()).filter(|&r| shape.contains(r, r + j)).collect();
        if cells.len() != letters.len() {
            return Err(bad(format!("diagonal {} has {} cells but {} letters", j + 1, cells.len(), letters.len())));
        }
        for (&r, &e) in cells.iter().zip(letters) {
            rows[r - 1].push(e);
        }
    }
    // diagonals were filled in order, so each row is already left to right
    let t = Tableau::new(shape, rows)?;
    let mode = if a.uturn { Mode::Sp } else { Mode::Gl };
    validate(&t, Family::ST, mode, a.rank())?;
    Ok(t)
}

/// Vertex type of the six-vertex model at one matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Compass {
    /// `+1`.
    We,
    /// `-1`.
    Ns,
    Ne,
    Se,
    Nw,
    Sw,
}

impl Compass {
    /// Arrow on the edge to the left of the vertex.
    pub fn left(self) -> char {
        match self {
            Compass::We => 'E',
            Compass::Ns => 'W',
            Compass::Ne | Compass::Se => 'E',
            Compass::Nw | Compass::Sw => 'W',
        }
    }

    pub fn right(self) -> char {
        match self {
            Compass::We => 'W',
            Compass::Ns => 'E',
            other => other.left(),
        }
    }

    pub fn top(self) -> char {
        match self {
            Compass::We => 'N',
            Compass::Ns => 'S',
            Compass::Ne | Compass::Nw => 'N',
            Compass::Se | Compass::Sw => 'S',
        }
    }

    pub fn bottom(self) -> char {
        match self {
            Compass::We => 'S',
            Compass::Ns => 'N',
            other => other.top(),
        }
    }
}

impl fmt::Display for Compass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Compass::We => "WE",
            Compass::Ns => "NS",
            Compass::Ne => "NE",
            Compass::Se => "SE",
            Compass::Nw => "NW",
            Compass::Sw => "SW",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompassMatrix {
    pub rows: Vec<Vec<Compass>>,
    pub uturn: bool,
}

impl fmt::Display for CompassMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Compass::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn compass(a: &AsmMatrix) -> CompassMatrix {
    let rows = (1..=a.num_rows())
        .map(|i| {
            (1..=a.num_cols())
                .map(|q| match a.get(i, q) {
                    1 => Compass::We,
                    -1 => Compass::Ns,
                    _ => match (a.right_sum(i, q), a.top_sum(i - 1, q)) {
                        (0, 0) => Compass::Nw,
                        (0, _) => Compass::Sw,
                        (_, 0) => Compass::Ne,
                        _ => Compass::Se,
                    },
                })
                .collect()
        })
        .collect();
    CompassMatrix { rows, uturn: a.uturn }
}

/// Number of each vertex type in one row of a compass matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCounts {
    pub we: u32,
    pub ns: u32,
    pub ne: u32,
    pub se: u32,
    pub nw: u32,
    pub sw: u32,
}

pub fn row_counts(cm: &CompassMatrix) -> Vec<RowCounts> {
    cm.rows
        .iter()
        .map(|row| {
            let mut c = RowCounts::default();
            for v in row {
                *match v {
                    Compass::We => &mut c.we,
                    Compass::Ns => &mut c.ns,
                    Compass::Ne => &mut c.ne,
                    Compass::Se => &mut c.se,
                    Compass::Nw => &mut c.nw,
                    Compass::Sw => &mut c.sw,
                } += 1;
            }
            c
        })
        .collect()
}

/// `prod_k x_k^{NE_k} y_k^{SE_k} (x_k + y_k)^{NS_k}`; with a U-turn the barred
/// rows contribute `t^2 x_k^-1`, `t^2 y_k^-1` and their sum instead.
pub fn asm_weight(a: &AsmMatrix, mode: Mode) -> Result<LaurentPoly> {
    if a.uturn != (mode == Mode::Sp) {
        return Err(Error::InvalidArgument(format!(
            "{mode:?} weight needs a {}matrix",
            if mode == Mode::Sp { "U-turn " } else { "non-U-turn " }
        )));
    }
    let mut w = LaurentPoly::one();
    for (i, c) in row_counts(&compass(a)).iter().enumerate() {
        let e = entry_of_row(i + 1, a.uturn);
        let k = e.letter as usize;
        let (x, y) = if e.barred {
            (LaurentPoly::t2_xbar(k), LaurentPoly::t2_ybar(k))
        } else {
            (LaurentPoly::x(k), LaurentPoly::y(k))
        };
        let xy = &x + &y;
        w = &w * &(&(&x.pow(c.ne) * &y.pow(c.se)) * &xy.pow(c.ns));
    }
    Ok(w)
}

/// Arrow directions on the edges of the ice grid.
///
/// `horizontal[i][q]` is the edge right of column `q` in row `i + 1`
/// (`q = 0` is the left boundary); `vertical[i][q]` is the edge below row
/// `i` in column `q + 1` (`i = 0` is the top boundary).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IceEdges {
    pub horizontal: Vec<Vec<char>>,
    pub vertical: Vec<Vec<char>>,
}

/// Edges from the partial sums of `a`.
pub fn ice_edges(a: &AsmMatrix) -> IceEdges {
    let (rows, m) = (a.num_rows(), a.num_cols());
    let horizontal =
        (1..=rows).map(|i| (0..=m).map(|q| if a.right_sum(i, q) == 1 { 'E' } else { 'W' }).collect()).collect();
    let vertical =
        (0..=rows).map(|i| (1..=m).map(|q| if a.top_sum(i, q) == 0 { 'N' } else { 'S' }).collect()).collect();
    IceEdges { horizontal, vertical }
}

/// Edges from the vertex types alone.
pub fn ice_edges_from_compass(cm: &CompassMatrix) -> IceEdges {
    let horizontal = cm
        .rows
        .iter()
        .map(|row| {
            std::iter::once(row.first().map_or('W', |v| v.left())).chain(row.iter().map(|v| v.right())).collect()
        })
        .collect();
    let mut vertical: Vec<Vec<char>> =
        vec![cm.rows.first().map_or(Vec::new(), |r| r.iter().map(|v| v.top()).collect())];
    vertical.extend(cm.rows.iter().map(|row| row.iter().map(|v| v.bottom()).collect()));
    IceEdges { horizontal, vertical }
}

fn arrow(c: char) -> char {
    match c {
        'E' => '→',
        'W' => '←',
        'N' => '↑',
        _ => '↓',
    }
}

/// Square ice as text: `+` vertices, arrows on edges, and with a U-turn a
/// bracket on the left joining rows `2i-1` and `2i`.
pub fn render_ice(cm: &CompassMatrix) -> String {
    let edges = ice_edges_from_compass(cm);
    let margin = if cm.uturn { "  " } else { "" };
    let mut out = String::new();
    let vline = |out: &mut String, i: usize, lead: &str| {
        out.push_str(lead);
        out.push_str("  ");
        let cells: Vec<String> = edges.vertical[i].iter().map(|&c| arrow(c).to_string()).collect();
        out.push_str(cells.join("   ").trim_end());
        out.push('\n');
    };
    vline(&mut out, 0, margin);
    for (i, h) in edges.horizontal.iter().enumerate() {
        let lead = match (cm.uturn, i % 2) {
            (false, _) => "",
            (true, 0) => "╭─",
            (true, _) => "╰─",
        };
        out.push_str(lead);
        for (q, &c) in h.iter().enumerate() {
            out.push(arrow(c));
            if q + 1 < h.len() {
                out.push_str(" + ");
            }
        }
        out.push('\n');
        let between = if cm.uturn && i % 2 == 0 { "│ " } else { margin };
        vline(&mut out, i + 1, between);
    }
    out
}

/// Visit every matrix with the given column targets, `rows` rows and the
/// row constraint of the gl or U-turn case, in lexicographic order.
fn for_each_matrix(
    mu: &StrictPartition,
    m: usize,
    uturn: bool,
    prefix: Vec<Vec<i8>>,
    f: &mut impl FnMut(&[Vec<i8>]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = mu.len();
    let total = if uturn { 2 * n } else { n };
    let mut state = vec![0i8; m];
    for row in &prefix {
        for (s, v) in state.iter_mut().zip(row) {
            *s += v;
        }
    }
    let mut rows = prefix;
    let target: Vec<i8> = (1..=m).map(|q| mu.contains(q) as i8).collect();
    walk(&mut rows, &mut state, &target, total, uturn, f)
}

fn walk(
    rows: &mut Vec<Vec<i8>>,
    state: &mut Vec<i8>,
    target: &[i8],
    total: usize,
    uturn: bool,
    f: &mut impl FnMut(&[Vec<i8>]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let i = rows.len();
    if i == total {
        return if state == target { f(rows) } else { ControlFlow::Continue(()) };
    }
    // a column can move by at most one per remaining row
    let left = (total - i) as i8;
    if state.iter().zip(target).any(|(s, t)| (s - t).abs() > left) {
        return ControlFlow::Continue(());
    }
    let sums: &[i32] = match (uturn, i % 2) {
        (false, _) => &[1],
        (true, 0) => &[0, 1],
        (true, _) => {
            if rows[i - 1].iter().map(|&v| v as i32).sum::<i32>() == 1 {
                &[0]
            } else {
                &[1]
            }
        }
    };
    for &sum in sums {
        for row in rows_for(state, sum) {
            for (s, v) in state.iter_mut().zip(&row) {
                *s += v;
            }
            rows.push(row);
            let flow = walk(rows, state, target, total, uturn, f);
            let row = rows.pop().expect("pushed above");
            for (s, v) in state.iter_mut().zip(&row) {
                *s -= v;
            }
            flow?;
        }
    }
    ControlFlow::Continue(())
}

/// Rows with right partial sums in {0,1} and total `sum` keeping every column partial sum in {0,1}.
fn rows_for(state: &[i8], sum: i32) -> Vec<Vec<i8>> {
    fn go(state: &[i8], q: usize, right: i32, row: &mut Vec<i8>, sum: i32, out: &mut Vec<Vec<i8>>) {
        if q == 0 {
            if right == sum {
                let mut r = row.clone();
                r.reverse();
                out.push(r);
            }
            return;
        }
        for v in [-1i8, 0, 1] {
            let (r, s) = (right + v as i32, state[q - 1] + v);
            if (0..=1).contains(&r) && (0..=1).contains(&s) {
                row.push(v);
                go(state, q - 1, r, row, sum, out);
                row.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(state, state.len(), 0, &mut Vec::new(), sum, &mut out);
    out.sort();
    out
}

/// All matrices with column sums at `mu` and `m` columns (`A^mu(n)`, or its U-turn analogue).
pub fn enumerate_asm(mu: &StrictPartition, m: usize, uturn: bool, ceiling: u64) -> Result<Vec<AsmMatrix>> {
    if mu.part(1) > m {
        return Err(Error::InvalidArgument(format!("mu = {mu} does not fit in {m} columns")));
    }
    let mut out = Vec::new();
    let mut exceeded = false;
    let _ = for_each_matrix(mu, m, uturn, Vec::new(), &mut |rows| {
        if out.len() as u64 >= ceiling {
            exceeded = true;
            return ControlFlow::Break(());
        }
        out.push(AsmMatrix { rows: rows.to_vec(), mu: mu.clone(), uturn });
        ControlFlow::Continue(())
    });
    if exceeded {
        return Err(Error::CeilingExceeded(ceiling));
    }
    Ok(out)
}

/// `prod_{j=0}^{n-1} (3j+1)! / (n+j)!`.
pub fn count_asm_formula(n: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    num / den
}

/// Number of `n x n` alternating sign matrices by exhaustive search, split over first rows.
pub fn count_asm_enumerated(n: usize) -> u64 {
    let mu = delta(n);
    let firsts = rows_for(&vec![0; n], 1);
    firsts
        .into_par_iter()
        .map(|first| {
            let mut c = 0u64;
            let _ = for_each_matrix(&mu, n, false, vec![first], &mut |_| {
                c += 1;
                ControlFlow::Continue(())
            });
            c
        })
        .sum()
}

/// Both counts of `n x n` alternating sign matrices.
pub fn count_asm(n: usize) -> (BigUint, u64) {
    (count_asm_formula(n), count_asm_enumerated(n))
}

/// A square matrix cut after row `n`, the bottom block read upwards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitAsm {
    pub top: AsmMatrix,
    pub bottom: AsmMatrix,
    pub lambda: Partition,
    pub kappa: Partition,
}

pub fn split_asm(c: &AsmMatrix, n: usize) -> Result<SplitAsm> {
    let m = c.num_rows();
    if c.uturn || c.num_cols() != m || c.mu != delta(m) {
        return Err(Error::InvalidArgument("split needs a square alternating sign matrix".into()));
    }
    c.check()?;
    if n == 0 || n >= m {
        return Err(Error::InvalidArgument(format!("cut after row {n} of {m}")));
    }
    let top = AsmMatrix::infer(c.rows[..n].to_vec(), false)?;
    let bottom = AsmMatrix::infer(c.rows[n..].iter().rev().cloned().collect(), false)?;
    let lambda = lambda_from_mu(&top.mu, n)?;
    let kappa = lambda_from_mu(&bottom.mu, m - n)?;
    if kappa != rect_complement_conjugate(&lambda, n, m)? {
        return Err(Error::Internal(format!("kappa = {kappa} is not the complement conjugate of lambda = {lambda}")));
    }
    Ok(SplitAsm { top, bottom, lambda, kappa })
}

/// Full `m`-row gl weight of `c`, summed over the square matrices whose top `n` rows have column sums at `mu`.
pub fn split_weight_sum(mu: &StrictPartition, m: usize, ceiling: u64) -> Result<LaurentPoly> {
    let mut sum = LaurentPoly::zero();
    for c in enumerate_asm(&delta(m), m, false, ceiling)? {
        let top_mu: Vec<usize> = (1..=m).rev().filter(|&q| c.top_sum(mu.len(), q) == 1).collect();
        if top_mu == mu.parts() {
            sum += &asm_weight(&c, Mode::Gl)?;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_types::{mu_from_lambda, ShapeKind};
    use crate::goldens::{self, IceDoc};
    use crate::polynomial::{product_xy, IndexRange};
    use crate::tableau::{enumerate, DEFAULT_CEILING};
    use std::collections::HashSet;

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn assert_ice(edges: &IceEdges, doc: &IceDoc) {
        let cmp = |ours: &Vec<Vec<char>>, theirs: &Vec<Vec<String>>| {
            assert_eq!(ours.len(), theirs.len());
            for (a, b) in ours.iter().zip(theirs) {
                assert_eq!(a.len(), b.len());
                for (x, y) in a.iter().zip(b) {
                    if y != "?" {
                        assert_eq!(x.to_string(), *y);
                    }
                }
            }
        };
        cmp(&edges.horizontal, &doc.horizontal);
        cmp(&edges.vertical, &doc.vertical);
    }

    #[test]
    fn gl_worked_example() {
        let g = goldens::asm_gl().unwrap();
        let st = goldens::shifted(&g.st).unwrap();
        let letters: Vec<Vec<u8>> = letter_matrix(&st, Mode::Gl)
            .iter()
            .map(|r| r.iter().map(|e| e.map_or(0, |e| e.letter)).collect())
            .collect();
        assert_eq!(letters, g.letters);
        let a = st_to_asm(&st, Mode::Gl).unwrap();
        assert_eq!(a.rows, g.asm);
        assert_eq!(a.mu.parts(), &g.mu[..]);
        let cm = compass(&a);
        assert_eq!(cm.rows, g.compass);
        assert_ice(&ice_edges(&a), &g.ice);
        assert_eq!(ice_edges_from_compass(&cm), ice_edges(&a));
        assert_eq!(asm_to_st(&a).unwrap(), st);
        let pst = goldens::shifted(&g.pst).unwrap();
        let primed: Vec<Vec<String>> = letter_matrix(&pst, Mode::Gl)
            .iter()
            .map(|r| r.iter().map(|e| e.map_or(String::new(), |e| e.to_string())).collect())
            .collect();
        assert_eq!(primed, g.pst_letters);
    }

    #[test]
    fn sp_worked_example() {
        let g = goldens::asm_sp().unwrap();
        let st = goldens::shifted(&g.st).unwrap();
        let a = st_to_asm(&st, Mode::Sp).unwrap();
        assert!(a.uturn);
        assert_eq!(a.rows, g.asm);
        let cm = compass(&a);
        assert_eq!(cm.rows, g.compass);
        assert_ice(&ice_edges(&a), &g.ice);
        assert_eq!(asm_to_st(&a).unwrap(), st);
        let text = render_ice(&cm);
        assert_eq!(text.matches('╭').count(), 5);
        assert_eq!(text.matches('╰').count(), 5);
    }

    #[test]
    fn split_worked_example() {
        let g = goldens::asm_split().unwrap();
        let c = AsmMatrix::new(g.c.clone(), delta(g.m), false).unwrap();
        let s = split_asm(&c, g.n).unwrap();
        assert_eq!(s.top.rows, g.top);
        assert_eq!(s.bottom.rows, g.bottom);
        assert_eq!(s.top.mu.parts(), &g.mu[..]);
        assert_eq!(s.bottom.mu.parts(), &g.nu[..]);
        assert_eq!(s.lambda.parts(), &g.lambda[..]);
        assert_eq!(s.kappa.parts(), &g.kappa[..]);
        assert_eq!(compass(&c).rows, g.compass);
        let f = &g.weight_factors;
        let mut want = LaurentPoly::one();
        for &(k, e) in &f.x {
            want = &want * &LaurentPoly::x(k).pow(e);
        }
        for &(k, e) in &f.y {
            want = &want * &LaurentPoly::y(k).pow(e);
        }
        for &(k, e) in &f.x_plus_y {
            want = &want * &(&LaurentPoly::x(k) + &LaurentPoly::y(k)).pow(e);
        }
        assert_eq!(asm_weight(&c, Mode::Gl).unwrap(), want);
    }

    #[test]
    fn two_by_two() {
        let id = AsmMatrix::new(vec![vec![1, 0], vec![0, 1]], delta(2), false).unwrap();
        let anti = AsmMatrix::new(vec![vec![0, 1], vec![1, 0]], delta(2), false).unwrap();
        assert_eq!(compass(&id).rows, vec![vec![Compass::We, Compass::Nw], vec![Compass::Se, Compass::We]]);
        assert_eq!(asm_weight(&id, Mode::Gl).unwrap(), LaurentPoly::y(2));
        assert_eq!(asm_weight(&anti, Mode::Gl).unwrap(), LaurentPoly::x(1));
        assert!(asm_weight(&id, Mode::Sp).is_err());
        let one = st_to_asm(&Tableau::parse(ShapeKind::Shifted, &["1"]).unwrap(), Mode::Gl).unwrap();
        assert_eq!(one.rows, vec![vec![1]]);
    }

    #[test]
    fn axioms_reject() {
        assert!(AsmMatrix::new(vec![vec![1, 0], vec![1, 0]], delta(2), false).is_err());
        assert!(AsmMatrix::new(vec![vec![0, 1], vec![1, -1]], delta(2), false).is_err());
        assert!(AsmMatrix::new(vec![vec![1], vec![1]], delta(1), true).is_err());
        assert!(AsmMatrix::new(vec![vec![2]], delta(1), false).is_err());
    }

    #[test]
    fn single_vertex_ice() {
        let a = AsmMatrix::new(vec![vec![1]], delta(1), false).unwrap();
        assert_eq!(render_ice(&compass(&a)), "  ↑\n→ + ←\n  ↓\n");
    }

    #[test]
    fn counts_agree() {
        let want = [1u64, 2, 7, 42, 429];
        for (n, &w) in (1..=5).zip(&want) {
            let (formula, enumerated) = count_asm(n);
            assert_eq!(formula, BigUint::from(w));
            assert_eq!(enumerated, w);
        }
    }

    fn check_bijection(n: usize, max_weight: usize, mode: Mode) {
        for lambda in Partition::all_up_to(n, max_weight) {
            let mu = mu_from_lambda(&lambda, n).unwrap();
            let sts = enumerate(&Shape::shifted(&mu), Family::ST, mode, n, DEFAULT_CEILING).unwrap();
            let asms = enumerate_asm(&mu, mu.part(1), mode == Mode::Sp, DEFAULT_CEILING).unwrap();
            assert_eq!(sts.len(), asms.len(), "lambda = {lambda}");
            let mut seen = HashSet::new();
            for st in &sts {
                let a = st_to_asm(st, mode).unwrap();
                assert_eq!(&asm_to_st(&a).unwrap(), st);
                assert!(seen.insert(a));
            }
            for a in &asms {
                assert!(seen.contains(a));
            }
        }
    }

    #[test]
    fn gl_bijection_small() {
        for n in 1..=3 {
            check_bijection(n, 3, Mode::Gl);
        }
    }

    #[test]
    fn sp_bijection_small() {
        for n in 1..=2 {
            check_bijection(n, 2, Mode::Sp);
        }
    }

    #[test]
    fn square_sum_is_strict_product() {
        for n in 1..=4 {
            let sum: LaurentPoly = enumerate_asm(&delta(n), n, false, DEFAULT_CEILING)
                .unwrap()
                .iter()
                .map(|a| asm_weight(a, Mode::Gl).unwrap())
                .sum();
            assert_eq!(sum, product_xy(n, IndexRange::Strict, Mode::Gl), "n = {n}");
        }
    }

    #[test]
    fn uturn_enumeration_small() {
        // n = 1: [1;0] and [0;1]
        assert_eq!(enumerate_asm(&sp(&[1]), 1, true, 10).unwrap().len(), 2);
        assert!(enumerate_asm(&sp(&[3]), 2, false, 10).is_err());
        assert!(matches!(enumerate_asm(&delta(4), 4, false, 5), Err(Error::CeilingExceeded(5))));
    }
}
