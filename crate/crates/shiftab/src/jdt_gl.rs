//! The gl jeu de taquin bijection from primed shifted tableaux of shape
//! `lambda + delta` to pairs (staircase tableau, ordinary tableau).
//!
//! Each primed letter `k'` is slid north-west into column `k`, letters
//! taken in increasing order and occurrences from top to bottom. The
//! inverse slides them back south-east in the opposite order.

use serde::{Deserialize, Serialize};

use crate::core_types::{delta, Entry, Mode, Shape, ShapeKind};
use crate::error::{Error, Result};
use crate::tableau::{validate, Family, Tableau};

/// One elementary step of a bijection, recorded when tracing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Step {
    /// `entry` moved from `from` to `to`, trading places with the occupant of `to`.
    Slide { entry: Entry, from: (usize, usize), to: (usize, usize) },
    /// The horizontal pair `k~' k'` at `(row, col)`, `(row, col+1)` became `i i~` with `i = row`.
    Annihilate { row: usize, col: usize, letter: u8 },
    /// The vertical pair `i~ i` at `(row-1, col)`, `(row, col)` became `k' k~'`, with `i = row`.
    Create { row: usize, col: usize, letter: u8 },
    /// Inverse of [`Step::Annihilate`].
    UndoAnnihilate { row: usize, col: usize, letter: u8 },
    /// Inverse of [`Step::Create`].
    UndoCreate { row: usize, col: usize, letter: u8 },
}

/// Optional move log threaded through the passes.
pub type Trace<'a> = Option<&'a mut Vec<Step>>;

pub(crate) fn slide(t: &mut Tableau, from: (usize, usize), to: (usize, usize), trace: &mut Trace) {
    let entry = t.get(from.0, from.1).expect("cell in shape");
    t.swap(from, to);
    if let Some(log) = trace.as_deref_mut() {
        log.push(Step::Slide { entry, from, to });
    }
}

/// `(pd, t)` placed side by side: row `r` of `pd` in columns `r..=n`, row `r` of `t` after it.
pub fn juxtapose(pd: &Tableau, t: &Tableau, n: usize) -> Result<Tableau> {
    if pd.shape != Shape::shifted(&delta(n)) {
        return Err(Error::ShapeMismatch(format!("staircase part has rows {:?}, expected size {n}", pd.shape.rows)));
    }
    if t.shape.is_shifted() || t.shape.num_rows() > n {
        return Err(Error::ShapeMismatch(format!("ordinary part has rows {:?}, at most {n} allowed", t.shape.rows)));
    }
    let rows = (0..n)
        .map(|i| {
            let mut row = pd.rows[i].clone();
            row.extend(t.rows.get(i).into_iter().flatten().copied());
            row
        })
        .collect();
    Tableau::from_rows(ShapeKind::Shifted, rows)
}

/// Cut a shifted tableau with `n` rows into its staircase part and the ordinary remainder.
pub fn split(t: &Tableau, n: usize) -> Result<(Tableau, Tableau)> {
    if !t.shape.is_shifted() || t.shape.num_rows() != n {
        return Err(Error::ShapeMismatch(format!("expected a shifted shape with {n} rows, got {:?}", t.shape.rows)));
    }
    let mut pd = Vec::with_capacity(n);
    let mut rest = Vec::new();
    for (i, row) in t.rows.iter().enumerate() {
        let len = n - i;
        pd.push(row[..len].to_vec());
        if row.len() > len {
            rest.push(row[len..].to_vec());
        }
    }
    let pd = Tableau::new(Shape::shifted(&delta(n)), pd)?;
    let rest = if rest.is_empty() {
        Tableau::empty(ShapeKind::Ordinary)
    } else {
        Tableau::from_rows(ShapeKind::Ordinary, rest)?
    };
    Ok((pd, rest))
}

/// Rows of the cells in column `col` holding `e`, top to bottom.
pub(crate) fn rows_in_column(t: &Tableau, col: usize, e: Entry) -> Vec<usize> {
    (1..=t.shape.num_rows()).filter(|&r| t.get(r, col) == Some(e)).collect()
}

/// Positions of `e` in row-major order.
pub(crate) fn positions(t: &Tableau, e: Entry) -> Vec<(usize, usize)> {
    t.cells().filter(|&(_, x)| x == e).map(|(rc, _)| rc).collect()
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

/// Whether the entry above `(r, c)` is unprimed with letter at least `r`,
/// so that it may drop into row `r` without breaking the row condition.
pub(crate) fn may_drop_into(t: &Tableau, r: usize, c: usize) -> bool {
    r > 1 && t.get(r - 1, c).is_some_and(|b| !b.primed && b.letter as usize >= r)
}

/// Slide the primed entry at `pos` north-west until it settles in column `k`.
///
/// Returns its final position.
pub(crate) fn slide_north_west(
    t: &mut Tableau,
    pos: (usize, usize),
    k: usize,
    trace: &mut Trace,
) -> Result<(usize, usize)> {
    let mut pos = pos;
    while let Some(next) = step_north_west(t, pos, k, trace)? {
        pos = next;
    }
    Ok(pos)
}

/// One move of the primed entry at `(r, c)`: north or west, or `None` once settled.
/// The neighbours `d` (west) and `b` (north) are unprimed whenever a choice has to be made.
pub(crate) fn step_north_west(
    t: &mut Tableau,
    (r, c): (usize, usize),
    k: usize,
    trace: &mut Trace,
) -> Result<Option<(usize, usize)>> {
    let moving = t.get(r, c).expect("cell in shape");
    if c == k {
        if may_drop_into(t, r, c) {
            slide(t, (r, c), (r - 1, c), trace);
            return Ok(Some((r - 1, c)));
        }
        return Ok(None);
    }
    if c < k {
        return Err(internal(format!("{moving} at ({r},{c}) is west of column {k}")));
    }
    let d = t.get(r, c - 1).ok_or_else(|| internal(format!("no cell west of ({r},{c})")))?;
    if d.primed {
        return Err(internal(format!("{moving} at ({r},{c}) blocked by {d} on its left")));
    }
    let north = if r == 1 {
        false
    } else {
        let b = t.get(r - 1, c).ok_or_else(|| internal(format!("no cell north of ({r},{c})")))?;
        if b.primed {
            return Err(internal(format!("{moving} at ({r},{c}) blocked by {b} above")));
        }
        d <= b
    };
    let to = if north { (r - 1, c) } else { (r, c - 1) };
    slide(t, (r, c), to, trace);
    Ok(Some(to))
}

/// Whether `x` is an unprimed entry below `moving` in the order used by the reverse slides.
fn smaller_unprimed(x: Option<Entry>, moving: Entry) -> Option<Entry> {
    x.filter(|e| !e.primed && *e < moving)
}

/// Slide the primed entry at `pos` south-east past every smaller unprimed entry.
pub(crate) fn slide_south_east(t: &mut Tableau, pos: (usize, usize), trace: &mut Trace) -> (usize, usize) {
    let (mut r, mut c) = pos;
    let moving = t.get(r, c).expect("cell in shape");
    loop {
        let e = smaller_unprimed(t.get(r, c + 1), moving);
        let g = smaller_unprimed(t.get(r + 1, c), moving);
        match (e, g) {
            (None, None) => return (r, c),
            (Some(e), Some(g)) if e < g => {
                slide(t, (r, c), (r, c + 1), trace);
                c += 1;
            }
            (Some(_), None) => {
                slide(t, (r, c), (r, c + 1), trace);
                c += 1;
            }
            _ => {
                slide(t, (r, c), (r + 1, c), trace);
                r += 1;
            }
        }
    }
}

/// Move every `k'` into column `k`, then order the unprimed entries left in that column.
pub fn theta_pass(t: &mut Tableau, k: usize, mut trace: Trace) -> Result<()> {
    let kp = Entry::prime(k as u8);
    let start = positions(t, kp);
    if start.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(internal(format!("two copies of {kp} in one row")));
    }
    for pos in start {
        slide_north_west(t, pos, k, &mut trace)?;
    }
    let rows: Vec<usize> =
        (1..=k.min(t.shape.num_rows())).filter(|&r| t.get(r, k).is_some_and(|e| !e.primed)).collect();
    let mut letters: Vec<Entry> = rows.iter().map(|&r| t.get(r, k).unwrap()).collect();
    letters.sort();
    for (&r, &e) in rows.iter().zip(&letters) {
        if e.letter as usize != r {
            return Err(internal(format!("column {k} holds {e} in row {r}")));
        }
        t.set(r, k, e);
    }
    Ok(())
}

/// Result of the forward bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaResult {
    pub pd: Tableau,
    pub t: Tableau,
    pub trace: Option<Vec<Step>>,
}

/// Staircase family matching the diagonal: `QD` if any diagonal entry is primed.
pub fn staircase_family(t: &Tableau) -> Family {
    if t.diagonal().iter().any(|e| e.primed) {
        Family::QD
    } else {
        Family::PD
    }
}

/// The forward map on a PST or QST of shape `lambda + delta` with `n` rows.
pub fn theta(pst: &Tableau, n: usize, trace: bool) -> Result<ThetaResult> {
    validate(pst, Family::QST, Mode::Gl, n)?;
    if pst.shape.num_rows() != n {
        return Err(Error::ShapeMismatch(format!("shape {:?} does not have {n} rows", pst.shape.rows)));
    }
    let mut t = pst.clone();
    let mut log = Vec::new();
    for k in 1..=n {
        theta_pass(&mut t, k, trace.then_some(&mut log))?;
    }
    let (pd, rest) = split(&t, n)?;
    Ok(ThetaResult { pd, t: rest, trace: trace.then_some(log) })
}

/// Reverse the moves of `theta_pass` for letter `k`.
pub fn theta_inv_pass(t: &mut Tableau, k: usize, mut trace: Trace) {
    let kp = Entry::prime(k as u8);
    for r in rows_in_column(t, k, kp).into_iter().rev() {
        slide_south_east(t, (r, k), &mut trace);
    }
}

/// The inverse map: rebuild the primed shifted tableau from `(pd, t)`.
pub fn theta_inv(pd: &Tableau, t: &Tableau, n: usize) -> Result<Tableau> {
    validate(pd, Family::QD, Mode::Gl, n)?;
    validate(t, Family::T, Mode::Gl, n)?;
    let mut tab = juxtapose(pd, t, n)?;
    for k in (1..=n).rev() {
        theta_inv_pass(&mut tab, k, None);
    }
    validate(&tab, Family::QST, Mode::Gl, n)
        .map_err(|e| internal(format!("inverse produced an invalid tableau: {e}")))?;
    Ok(tab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_types::{mu_from_lambda, Partition};
    use crate::tableau::{enumerate, DEFAULT_CEILING};
    use crate::tableaux_gl::weight;
    use std::collections::HashSet;

    fn sh(rows: &[&str]) -> Tableau {
        Tableau::parse(ShapeKind::Shifted, rows).unwrap()
    }

    fn worked() -> Tableau {
        sh(&["1 1 1 2' 2 2 3 3 5", "2 2 3' 3 4' 5' 5 6'", "3 3 4' 4 5' 6", "4 5' 5 5", "5 6' 6", "6"])
    }

    #[test]
    fn worked_example_passes() {
        let mut t = worked();
        theta_pass(&mut t, 1, None).unwrap();
        assert_eq!(t, worked());
        theta_pass(&mut t, 2, None).unwrap();
        assert_eq!(t.rows[0], sh(&["1 2' 1 1 2 2 3 3 5"]).rows[0]);
        theta_pass(&mut t, 3, None).unwrap();
        theta_pass(&mut t, 4, None).unwrap();
        let after4 = sh(&["1 2' 1 4' 1 2 3 3 5", "2 3' 2 2 3 5' 5 6'", "3 4' 3 4 5' 6", "4 5' 5 5", "5 6' 6", "6"]);
        assert_eq!(t, after4);
    }

    #[test]
    fn worked_example_result_and_round_trip() {
        let res = theta(&worked(), 6, true).unwrap();
        assert_eq!(res.pd, sh(&["1 2' 1 4' 5' 6'", "2 3' 2 5' 2", "3 4' 3 3", "4 5' 6'", "5 5", "6"]));
        assert_eq!(res.t, Tableau::parse(ShapeKind::Ordinary, &["1 2 3", "3 5 5", "4 6", "5", "6"]).unwrap());
        assert!(!res.trace.unwrap().is_empty());
        assert_eq!(theta_inv(&res.pd, &res.t, 6).unwrap(), worked());
    }

    #[test]
    fn juxtapose_and_split_are_inverse() {
        let (pd, t) = split(&worked(), 6).unwrap();
        assert_eq!(juxtapose(&pd, &t, 6).unwrap(), worked());
        let (pd, t) = split(&sh(&["1 2'", "2"]), 2).unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(pd.rows.len(), 2);
    }

    /// Paths of successive copies of `k'` stay strictly south of each other column by column.
    #[test]
    fn paths_nest() {
        let mut t = worked();
        for k in 1..=6 {
            let mut log = Vec::new();
            theta_pass(&mut t, k, Some(&mut log)).unwrap();
            let mut paths: Vec<Vec<(usize, usize)>> = Vec::new();
            for s in log {
                if let Step::Slide { from, to, .. } = s {
                    match paths.last_mut() {
                        Some(p) if *p.last().unwrap() == from => p.push(to),
                        _ => paths.push(vec![from, to]),
                    }
                }
            }
            for w in paths.windows(2) {
                for &(r1, c1) in &w[1] {
                    for &(r0, c0) in &w[0] {
                        if c0 == c1 {
                            assert!(r1 > r0, "letter {k}: ({r1},{c1}) not south of ({r0},{c0})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exhaustive_bijection_small() {
        for n in 1..=2 {
            for lambda in Partition::all_up_to(n, 3) {
                let mu = mu_from_lambda(&lambda, n).unwrap();
                let shape = Shape::shifted(&mu);
                let qsts = enumerate(&shape, Family::QST, Mode::Gl, n, DEFAULT_CEILING).unwrap();
                let qds = enumerate(&Shape::shifted(&delta(n)), Family::QD, Mode::Gl, n, DEFAULT_CEILING).unwrap();
                let ts = enumerate(&Shape::ordinary(&lambda), Family::T, Mode::Gl, n, DEFAULT_CEILING).unwrap();
                assert_eq!(qsts.len(), qds.len() * ts.len());
                let mut seen = HashSet::new();
                for q in &qsts {
                    let r = theta(q, n, false).unwrap();
                    validate(&r.pd, Family::QD, Mode::Gl, n).unwrap();
                    validate(&r.t, Family::T, Mode::Gl, n).unwrap();
                    assert_eq!(r.pd.diagonal(), q.diagonal());
                    assert_eq!(weight(q, n), &weight(&r.pd, n) + &weight(&r.t, n));
                    assert_eq!(&theta_inv(&r.pd, &r.t, n).unwrap(), q);
                    assert!(seen.insert((r.pd, r.t)));
                }
            }
        }
    }
}
