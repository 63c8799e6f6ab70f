//! The sp bijection from primed shifted tableaux over the barred alphabet
//! to pairs (staircase tableau, ordinary tableau), preserving both the
//! weight and the number of barred entries.
//!
//! For each letter `k` in increasing order the map slides every `k~'`
//! into column `k`, then every `k'` (a `k'` meeting a settled `k~'` on
//! its left may instead turn the pair into `i i~` in row `i`), and finally
//! replaces each vertical pair `i~ i` left in column `k` by `k' k~'`.

use crate::core_types::{Entry, Mode};
use crate::error::{Error, Result};
use crate::jdt_gl::{
    juxtapose, may_drop_into, positions, rows_in_column, slide, slide_north_west, slide_south_east, split,
    step_north_west, Step, Trace,
};
use crate::tableau::{validate, Family, Tableau};

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

/// Slide every `k~'` north-west into column `k`.
pub fn phi_bar_pass(t: &mut Tableau, k: usize, mut trace: Trace) -> Result<()> {
    for pos in positions(t, Entry::bar_prime(k as u8)) {
        slide_north_west(t, pos, k, &mut trace)?;
    }
    Ok(())
}

/// Slide every `k'` north-west, annihilating it against a blocking `k~'` where it cannot move north.
pub fn psi_pass(t: &mut Tableau, k: usize, mut trace: Trace) -> Result<()> {
    let kp = Entry::prime(k as u8);
    let kbp = Entry::bar_prime(k as u8);
    let start = positions(t, kp);
    if start.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(internal(format!("two copies of {kp} in one row")));
    }
    for mut pos in start {
        loop {
            let (r, c) = pos;
            if c == k || t.get(r, c - 1) != Some(kbp) {
                match step_north_west(t, pos, k, &mut trace)? {
                    Some(next) => pos = next,
                    None => break,
                }
                continue;
            }
            if c != k + 1 {
                return Err(internal(format!("{kbp} found outside column {k}")));
            }
            if may_drop_into(t, r, c) {
                slide(t, (r, c), (r - 1, c), &mut trace);
                pos = (r - 1, c);
                continue;
            }
            t.set(r, c - 1, Entry::plain(r as u8));
            t.set(r, c, Entry::bar(r as u8));
            if let Some(log) = trace.as_deref_mut() {
                log.push(Step::Annihilate { row: r, col: c - 1, letter: k as u8 });
            }
            break;
        }
    }
    Ok(())
}

/// Lowest vertical pair `i~` over `i` among the unprimed entries of column `k`,
/// returned as the rows of `i~` and `i`.
fn lowest_pair(t: &Tableau, k: usize) -> Option<(usize, usize, u8)> {
    let cells: Vec<(usize, Entry)> = (1..=k.min(t.shape.num_rows()))
        .filter_map(|r| t.get(r, k).map(|e| (r, e)))
        .filter(|(_, e)| !e.primed)
        .collect();
    cells.iter().rev().filter(|(_, e)| !e.barred).find_map(|&(ri, ei)| {
        cells.iter().find(|&&(_, e)| e == Entry::bar(ei.letter)).map(|&(rb, _)| (rb, ri, ei.letter))
    })
}

/// Replace vertical pairs `i~ i` in column `k`, lowest first, by `k' k~'` and float both north.
pub fn chi_pass(t: &mut Tableau, k: usize, mut trace: Trace) -> Result<()> {
    while let Some((rb, ri, i)) = lowest_pair(t, k) {
        if rb + 1 != ri || i as usize != ri {
            return Err(internal(format!("pair {i}~ {i} in column {k} sits in rows {rb}, {ri}")));
        }
        t.set(rb, k, Entry::prime(k as u8));
        t.set(ri, k, Entry::bar_prime(k as u8));
        if let Some(log) = trace.as_deref_mut() {
            log.push(Step::Create { row: ri, col: k, letter: k as u8 });
        }
        for start in [rb, ri] {
            let mut r = start;
            while may_drop_into(t, r, k) {
                slide(t, (r, k), (r - 1, k), &mut trace);
                r -= 1;
            }
        }
    }
    for r in 1..=k.min(t.shape.num_rows()) {
        let e = t.get(r, k).unwrap();
        if !e.primed && e.letter as usize != r {
            return Err(internal(format!("column {k} holds {e} in row {r}")));
        }
    }
    Ok(())
}

/// Result of the forward sp bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiResult {
    pub qd: Tableau,
    pub t: Tableau,
    pub trace: Option<Vec<Step>>,
}

/// The forward map on a QST over the barred alphabet of shape `lambda + delta` with `n` rows.
pub fn phi(qst: &Tableau, n: usize, trace: bool) -> Result<PhiResult> {
    validate(qst, Family::QST, Mode::Sp, n)?;
    if qst.shape.num_rows() != n {
        return Err(Error::ShapeMismatch(format!("shape {:?} does not have {n} rows", qst.shape.rows)));
    }
    let mut t = qst.clone();
    let mut log = Vec::new();
    for k in 1..=n {
        phi_bar_pass(&mut t, k, trace.then_some(&mut log))?;
        psi_pass(&mut t, k, trace.then_some(&mut log))?;
        chi_pass(&mut t, k, trace.then_some(&mut log))?;
    }
    let (qd, rest) = split(&t, n)?;
    Ok(PhiResult { qd, t: rest, trace: trace.then_some(log) })
}

/// Undo `chi_pass`: lower each `k'` of column `k`, top first, and turn
/// `k'` over `k~'` back into `i~ i` where the east neighbours allow it.
/// A `k'` resting on another `k'` may be freed once the lower one moves,
/// so sweeps repeat until one leaves the column unchanged.
pub fn chi_inv_pass(t: &mut Tableau, k: usize, mut trace: Trace) {
    while chi_inv_sweep(t, k, &mut trace) {}
}

fn chi_inv_sweep(t: &mut Tableau, k: usize, trace: &mut Trace) -> bool {
    let kp = Entry::prime(k as u8);
    let kbp = Entry::bar_prime(k as u8);
    let mut changed = false;
    for r0 in rows_in_column(t, k, kp) {
        let mut r = r0;
        loop {
            let below = t.get(r + 1, k);
            let b = t.get(r, k + 1);
            match below {
                Some(a) if !a.primed && a < kp && b.is_none_or(|b| a <= b) => {
                    slide(t, (r, k), (r + 1, k), trace);
                    r += 1;
                    changed = true;
                }
                Some(a) if a == kbp => {
                    let i = r + 1;
                    let ibar = Entry::bar(i as u8);
                    let d = t.get(i, k + 1);
                    let ok = match (b, d) {
                        (None, _) => true,
                        (Some(b), None) => ibar <= b,
                        // A primed letter may repeat down a column, so `b = d` is allowed when primed.
                        (Some(b), Some(d)) => ibar <= b && (b < d || (b == d && b.primed)),
                    };
                    if ok {
                        t.set(r, k, ibar);
                        t.set(i, k, Entry::plain(i as u8));
                        if let Some(log) = trace.as_deref_mut() {
                            log.push(Step::UndoCreate { row: i, col: k, letter: k as u8 });
                        }
                        changed = true;
                    }
                    break;
                }
                _ => break,
            }
        }
    }
    changed
}

/// Undo `psi_pass`: southernmost first, turn each pair `i i~` straddling
/// columns `k, k+1` back into `k~' k'` and slide every `k'` south-east.
pub fn psi_inv_pass(t: &mut Tableau, k: usize, mut trace: Trace) {
    let kp = Entry::prime(k as u8);
    let rows = t.shape.num_rows();
    let mut work: Vec<(usize, bool)> = Vec::new();
    for r in 1..=k.min(rows) {
        let here = t.get(r, k);
        if here == Some(kp) {
            work.push((r, false));
        } else if here == Some(Entry::plain(r as u8)) && t.get(r, k + 1) == Some(Entry::bar(r as u8)) {
            let ibar = Entry::bar(r as u8);
            if t.get(r - 1, k + 1).is_none_or(|b| b < ibar) {
                work.push((r, true));
            }
        }
    }
    for (r, pair) in work.into_iter().rev() {
        let start = if pair {
            t.set(r, k, Entry::bar_prime(k as u8));
            t.set(r, k + 1, kp);
            if let Some(log) = trace.as_deref_mut() {
                log.push(Step::UndoAnnihilate { row: r, col: k, letter: k as u8 });
            }
            (r, k + 1)
        } else {
            (r, k)
        };
        slide_south_east(t, start, &mut trace);
    }
}

/// Undo `phi_bar_pass`: slide every `k~'` of column `k` south-east, bottom first.
pub fn phi_bar_inv_pass(t: &mut Tableau, k: usize, mut trace: Trace) {
    for r in rows_in_column(t, k, Entry::bar_prime(k as u8)).into_iter().rev() {
        slide_south_east(t, (r, k), &mut trace);
    }
}

/// The inverse map: rebuild the QST from `(qd, t)`.
pub fn phi_inv(qd: &Tableau, t: &Tableau, n: usize) -> Result<Tableau> {
    validate(qd, Family::QD, Mode::Sp, n)?;
    validate(t, Family::T, Mode::Sp, n)?;
    let mut tab = juxtapose(qd, t, n)?;
    for k in (1..=n).rev() {
        chi_inv_pass(&mut tab, k, None);
        psi_inv_pass(&mut tab, k, None);
        phi_bar_inv_pass(&mut tab, k, None);
    }
    validate(&tab, Family::QST, Mode::Sp, n)
        .map_err(|e| internal(format!("inverse produced an invalid tableau: {e}")))?;
    Ok(tab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_types::{delta, mu_from_lambda, Partition, Shape, ShapeKind};
    use crate::tableau::{enumerate, DEFAULT_CEILING};
    use crate::tableaux_sp::weight_sp;
    use std::collections::HashSet;

    fn sh(rows: &[&str]) -> Tableau {
        Tableau::parse(ShapeKind::Shifted, rows).unwrap()
    }

    fn worked() -> Tableau {
        sh(&["1~ 1' 2~' 2' 3~' 3 4~ 4~ 5", "2~' 2~ 3~ 3~ 4' 4 4", "3~ 3 4~ 5' 5 5", "4 4", "5'"])
    }

    #[test]
    fn worked_example_steps() {
        let mut t = worked();
        phi_bar_pass(&mut t, 1, None).unwrap();
        psi_pass(&mut t, 1, None).unwrap();
        assert_eq!(t.rows[0], sh(&["1' 1~ 2~' 2' 3~' 3 4~ 4~ 5"]).rows[0]);
        chi_pass(&mut t, 1, None).unwrap();
        phi_bar_pass(&mut t, 2, None).unwrap();
        assert_eq!(t.rows[0], sh(&["1' 2~' 1~ 2' 3~' 3 4~ 4~ 5"]).rows[0]);
        psi_pass(&mut t, 2, None).unwrap();
        assert_eq!(t.rows[0], sh(&["1' 1 1~ 1~ 3~' 3 4~ 4~ 5"]).rows[0]);
        chi_pass(&mut t, 2, None).unwrap();
        for pass in [phi_bar_pass, psi_pass, chi_pass] {
            pass(&mut t, 3, None).unwrap();
        }
        phi_bar_pass(&mut t, 4, None).unwrap();
        psi_pass(&mut t, 4, None).unwrap();
        assert_eq!(t, sh(&["1' 1 3~' 4' 1~ 1~ 4~ 4~ 5", "2~' 2~ 3~ 3~ 3 4 4", "3~ 3 4~ 5' 5 5", "4 4", "5'"]));
        chi_pass(&mut t, 4, None).unwrap();
        assert_eq!(t, sh(&["1' 1 3~' 4' 1~ 1~ 4~ 4~ 5", "2~' 2~ 4' 3~ 3 4 4", "3~ 4~' 4~ 5' 5 5", "4 4", "5'"]));
    }

    #[test]
    fn worked_example_result_and_round_trip() {
        let res = phi(&worked(), 5, false).unwrap();
        assert_eq!(res.qd, sh(&["1' 1 3~' 4' 1~", "2~' 2~ 4' 5'", "3~ 4~' 3~", "4 4", "5'"]));
        assert_eq!(res.t, Tableau::parse(ShapeKind::Ordinary, &["1~ 4~ 4~ 5", "3 4 4", "4~ 5 5"]).unwrap());
        assert_eq!(phi_inv(&res.qd, &res.t, 5).unwrap(), worked());
    }

    #[test]
    fn exhaustive_bijection_small() {
        for n in 1..=2 {
            for lambda in Partition::all_up_to(n, 2) {
                let mu = mu_from_lambda(&lambda, n).unwrap();
                let qsts = enumerate(&Shape::shifted(&mu), Family::QST, Mode::Sp, n, DEFAULT_CEILING).unwrap();
                let qds = enumerate(&Shape::shifted(&delta(n)), Family::QD, Mode::Sp, n, DEFAULT_CEILING).unwrap();
                let ts = enumerate(&Shape::ordinary(&lambda), Family::T, Mode::Sp, n, DEFAULT_CEILING).unwrap();
                assert_eq!(qsts.len(), qds.len() * ts.len(), "n={n} lambda={lambda}");
                let mut seen = HashSet::new();
                for q in &qsts {
                    let r = phi(q, n, false).unwrap_or_else(|e| panic!("{e}\n{q}"));
                    validate(&r.qd, Family::QD, Mode::Sp, n).unwrap();
                    validate(&r.t, Family::T, Mode::Sp, n).unwrap();
                    let w = weight_sp(q, n);
                    let (a, b) = (weight_sp(&r.qd, n), weight_sp(&r.t, n));
                    assert_eq!(w.bar, a.bar + b.bar);
                    assert!(seen.insert((r.qd.clone(), r.t.clone())), "not injective at\n{q}");
                    let back = phi_inv(&r.qd, &r.t, n).unwrap_or_else(|e| panic!("{e}\n{q}"));
                    assert_eq!(&back, q, "round trip\n{q}\n{}\n{}", r.qd, r.t);
                }
            }
        }
    }

    fn round_trip(q: &Tableau, n: usize) {
        let r = phi(q, n, false).unwrap();
        assert_eq!(phi_inv(&r.qd, &r.t, n).unwrap(), *q, "\n{q}\n{}", r.qd);
    }

    #[test]
    fn undo_create_beside_equal_primed_letters() {
        // Column 3 holds 3~' twice, level with the created pair.
        round_trip(&sh(&["1~' 2~ 3~'", "2 3~'", "3~'"]), 3);
    }

    #[test]
    fn undo_create_under_a_stacked_prime() {
        // Two pairs are created in column 4; the first 4' only drops once the second pair is undone.
        round_trip(&sh(&["1~' 1~ 1~ 3~", "2~' 2~ 3", "3~' 4~", "4"]), 4);
    }
}
