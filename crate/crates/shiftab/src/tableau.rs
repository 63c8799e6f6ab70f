//! Fillings of ordinary and shifted shapes, the family rules shared by the
//! gl and sp alphabets, and a backtracking enumerator.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::core_types::{delta, Entry, Mode, Shape, ShapeKind};
use crate::error::{Error, Result};

/// Default cap on the number of tableaux a single enumeration may produce.
pub const DEFAULT_CEILING: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Semistandard tableaux of ordinary shape.
    T,
    /// Unprimed semistandard shifted tableaux.
    ST,
    /// Primed shifted tableaux without primes on the main diagonal.
    PST,
    /// Primed shifted tableaux with primes allowed on the main diagonal.
    QST,
    /// Staircase tableaux with letter `k` only in row `k`, `k'` only in column `k`, no diagonal primes.
    PD,
    /// As [`Family::PD`] with diagonal primes allowed.
    QD,
}

impl Family {
    pub fn is_shifted(self) -> bool {
        self != Family::T
    }

    pub fn allows_primes(self) -> bool {
        !matches!(self, Family::T | Family::ST)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "T" => Ok(Family::T),
            "ST" => Ok(Family::ST),
            "PST" => Ok(Family::PST),
            "QST" => Ok(Family::QST),
            "PD" => Ok(Family::PD),
            "QD" => Ok(Family::QD),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A filling of a shape. Rows and columns are 1-indexed in every accessor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub shape: Shape,
    pub rows: Vec<Vec<Entry>>,
}

impl Tableau {
    pub fn new(shape: Shape, rows: Vec<Vec<Entry>>) -> Result<Tableau> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.rows {
            return Err(Error::ShapeMismatch(format!("row lengths {lens:?} do not match shape {:?}", shape.rows)));
        }
        Ok(Tableau { shape, rows })
    }

    /// Build from row lengths read off `rows` themselves.
    pub fn from_rows(kind: ShapeKind, rows: Vec<Vec<Entry>>) -> Result<Tableau> {
        let shape = Shape { kind, rows: rows.iter().map(Vec::len).collect() };
        if shape.rows.windows(2).any(|w| match kind {
            ShapeKind::Ordinary => w[0] < w[1],
            ShapeKind::Shifted => w[0] <= w[1],
        }) || shape.rows.contains(&0)
        {
            return Err(Error::ShapeMismatch(format!("row lengths {:?} do not form a shape", shape.rows)));
        }
        Ok(Tableau { shape, rows })
    }

    /// Parse rows of whitespace-separated entries, e.g. `["1 1 2'", "2"]`.
    pub fn parse(kind: ShapeKind, rows: &[&str]) -> Result<Tableau> {
        let rows = rows
            .iter()
            .map(|r| r.split_whitespace().map(str::parse).collect::<Result<Vec<Entry>>>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(kind, rows)
    }

    pub fn empty(kind: ShapeKind) -> Tableau {
        Tableau { shape: Shape { kind, rows: vec![] }, rows: vec![] }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Entry> {
        if r == 0 || r > self.rows.len() {
            return None;
        }
        let start = self.shape.row_start(r);
        if c < start {
            return None;
        }
        self.rows[r - 1].get(c - start).copied()
    }

    pub fn set(&mut self, r: usize, c: usize, e: Entry) {
        let start = self.shape.row_start(r);
        self.rows[r - 1][c - start] = e;
    }

    pub fn swap(&mut self, a: (usize, usize), b: (usize, usize)) {
        let ea = self.get(a.0, a.1).expect("cell in shape");
        let eb = self.get(b.0, b.1).expect("cell in shape");
        self.set(a.0, a.1, eb);
        self.set(b.0, b.1, ea);
    }

    /// All `((row, col), entry)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), Entry)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let start = self.shape.row_start(i + 1);
            row.iter().enumerate().map(move |(j, &e)| ((i + 1, start + j), e))
        })
    }

    pub fn diagonal(&self) -> Vec<Entry> {
        (1..=self.rows.len()).filter_map(|r| self.get(r, r)).collect()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Copy with every prime removed.
    pub fn strip_primes(&self) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|e| e.unprimed()).collect()).collect(),
        }
    }

    /// Box diagram in plain text, one line per row, shifted rows indented.
    pub fn render(&self) -> String {
        let width = self.cells().map(|(_, e)| e.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let indent = self.shape.row_start(i + 1) - 1;
            out.push_str(&" ".repeat(indent * (width + 1)));
            let cells: Vec<String> = row.iter().map(|e| format!("{:>width$}", e.to_string())).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// JSON form of a tableau together with its family and alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    pub shape: Vec<usize>,
    pub shifted: bool,
    pub family: Family,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    pub n: usize,
    pub rows: Vec<Vec<Entry>>,
}

fn default_mode() -> Mode {
    Mode::Gl
}

impl TableauDoc {
    pub fn new(t: &Tableau, family: Family, mode: Mode, n: usize) -> TableauDoc {
        TableauDoc { shape: t.shape.rows.clone(), shifted: t.shape.is_shifted(), family, mode, n, rows: t.rows.clone() }
    }

    pub fn tableau(&self) -> Result<Tableau> {
        let kind = if self.shifted { ShapeKind::Shifted } else { ShapeKind::Ordinary };
        Tableau::new(Shape { kind, rows: self.shape.clone() }, self.rows.clone())
    }
}

/// Why a tableau fails its family rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub row: usize,
    pub col: usize,
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Error {
        Error::RuleViolation { rule: v.rule, row: v.row, col: v.col }
    }
}

/// Check every rule that involves cell `(r, c)` holding `e` and cells
/// earlier in row-major order. Cells later in that order are never read,
/// so this serves both whole-tableau validation and incremental filling.
pub fn check_cell(
    t: &Tableau,
    r: usize,
    c: usize,
    e: Entry,
    family: Family,
    mode: Mode,
    n: usize,
) -> std::result::Result<(), &'static str> {
    if e.letter == 0 || e.letter as usize > n || (mode == Mode::Gl && e.barred) {
        return Err("ALPHABET");
    }
    if e.primed && !family.allows_primes() {
        return Err("ALPHABET");
    }
    let left = if c > 1 { t.get(r, c - 1) } else { None };
    let above = if r > 1 { t.get(r - 1, c) } else { None };
    let sp = mode == Mode::Sp;
    match family {
        Family::T => {
            if left.is_some_and(|l| l > e) {
                return Err("T1");
            }
            if above.is_some_and(|a| a >= e) {
                return Err("T2");
            }
            if sp && (e.letter as usize) < r {
                return Err("T3bar");
            }
        }
        Family::ST | Family::PST | Family::QST => {
            if left.is_some_and(|l| l > e) {
                return Err("ST1");
            }
            if above.is_some_and(|a| a > e) {
                return Err("ST2");
            }
            if family == Family::ST && r > 1 && t.get(r - 1, c - 1).is_some_and(|d| d >= e) {
                return Err("ST3");
            }
            if family != Family::ST {
                if !e.primed && above == Some(e) {
                    return Err("PST3");
                }
                if e.primed && left == Some(e) {
                    return Err("PST4");
                }
            }
            if r == c {
                match (family, sp) {
                    (Family::PST, false) if e.primed => return Err("PST5"),
                    (Family::ST, true) if e.letter as usize != r => return Err("ST4bar"),
                    (Family::PST, true) if e.letter as usize != r || e.primed => return Err("PST5bar"),
                    (Family::QST, true) if e.letter as usize != r => return Err("QST5bar"),
                    _ => {}
                }
            }
        }
        Family::PD | Family::QD => {
            if !e.primed && e.letter as usize != r {
                return Err("PD1");
            }
            if e.primed && e.letter as usize != c {
                return Err("PD2");
            }
            if family == Family::PD && r == c && e.primed {
                return Err("PD3");
            }
        }
    }
    Ok(())
}

/// Check `t` against all rules of `family` over letters `1..=n`.
pub fn validate(t: &Tableau, family: Family, mode: Mode, n: usize) -> Result<()> {
    check_shape(&t.shape, family, n)?;
    for ((r, c), e) in t.cells() {
        check_cell(t, r, c, e, family, mode, n).map_err(|rule| Violation { rule, row: r, col: c })?;
    }
    Ok(())
}

fn check_shape(shape: &Shape, family: Family, n: usize) -> Result<()> {
    if family.is_shifted() != shape.is_shifted() {
        return Err(Error::ShapeMismatch(format!(
            "family {family} needs a {} shape",
            if family.is_shifted() { "shifted" } else { "ordinary" }
        )));
    }
    if matches!(family, Family::PD | Family::QD) && shape.rows != delta(n).parts() {
        return Err(Error::ShapeMismatch(format!("family {family} needs the staircase of size {n}")));
    }
    Ok(())
}

/// Visit every tableau of the family on `shape`, in row-major
/// lexicographic order of entry codes. Returns the number visited.
pub fn for_each(
    shape: &Shape,
    family: Family,
    mode: Mode,
    n: usize,
    mut f: impl FnMut(&Tableau) -> ControlFlow<()>,
) -> Result<u64> {
    check_shape(shape, family, n)?;
    let alphabet = Entry::alphabet(n, mode, family.allows_primes());
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut t = Tableau { shape: shape.clone(), rows: vec![Vec::new(); shape.num_rows()] };
    let mut count = 0;
    let _ = fill(&mut t, &cells, 0, &alphabet, family, mode, n, &mut count, &mut f);
    Ok(count)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    t: &mut Tableau,
    cells: &[(usize, usize)],
    idx: usize,
    alphabet: &[Entry],
    family: Family,
    mode: Mode,
    n: usize,
    count: &mut u64,
    f: &mut impl FnMut(&Tableau) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if idx == cells.len() {
        *count += 1;
        return f(t);
    }
    let (r, c) = cells[idx];
    for &e in alphabet {
        if check_cell(t, r, c, e, family, mode, n).is_err() {
            continue;
        }
        t.rows[r - 1].push(e);
        let flow = fill(t, cells, idx + 1, alphabet, family, mode, n, count, f);
        t.rows[r - 1].pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Collect every tableau of the family on `shape`, failing if there are more than `ceiling`.
pub fn enumerate(shape: &Shape, family: Family, mode: Mode, n: usize, ceiling: u64) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    let mut exceeded = false;
    for_each(shape, family, mode, n, |t| {
        if out.len() as u64 >= ceiling {
            exceeded = true;
            return ControlFlow::Break(());
        }
        out.push(t.clone());
        ControlFlow::Continue(())
    })?;
    if exceeded {
        return Err(Error::CeilingExceeded(ceiling));
    }
    Ok(out)
}

/// Number of tableaux of the family on `shape`, failing past `ceiling`.
pub fn count(shape: &Shape, family: Family, mode: Mode, n: usize, ceiling: u64) -> Result<u64> {
    let mut seen = 0u64;
    for_each(shape, family, mode, n, |_| {
        seen += 1;
        if seen > ceiling {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if seen > ceiling {
        return Err(Error::CeilingExceeded(ceiling));
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_types::{Partition, StrictPartition};

    fn shifted(parts: &[usize]) -> Shape {
        Shape::shifted(&StrictPartition::new(parts.to_vec()).unwrap())
    }

    fn ordinary(parts: &[usize]) -> Shape {
        Shape::ordinary(&Partition::new(parts.to_vec()).unwrap())
    }

    /// Brute force over every filling, independent of the incremental checker's pruning.
    fn brute_force(shape: &Shape, family: Family, mode: Mode, n: usize) -> usize {
        let alphabet = Entry::alphabet(n, mode, true);
        let cells = shape.num_cells();
        let mut total = 0;
        let mut idx = vec![0usize; cells];
        loop {
            let mut it = idx.iter();
            let rows =
                shape.rows.iter().map(|&len| (0..len).map(|_| alphabet[*it.next().unwrap()]).collect()).collect();
            let t = Tableau::new(shape.clone(), rows).unwrap();
            if validate(&t, family, mode, n).is_ok() {
                total += 1;
            }
            let mut k = 0;
            while k < cells && idx[k] + 1 == alphabet.len() {
                idx[k] = 0;
                k += 1;
            }
            if k == cells {
                break;
            }
            idx[k] += 1;
        }
        total
    }

    #[test]
    fn small_enumerations() {
        let ts = enumerate(&ordinary(&[1]), Family::T, Mode::Gl, 2, DEFAULT_CEILING).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(enumerate(&shifted(&[2, 1]), Family::QD, Mode::Gl, 2, DEFAULT_CEILING).unwrap().len(), 8);
        assert_eq!(enumerate(&shifted(&[2, 1]), Family::PD, Mode::Gl, 2, DEFAULT_CEILING).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (shape, n) in [(shifted(&[3, 1]), 2), (shifted(&[2, 1]), 2), (shifted(&[3]), 2), (shifted(&[3, 2]), 2)] {
            for family in [Family::ST, Family::PST, Family::QST] {
                for mode in [Mode::Gl, Mode::Sp] {
                    let fast = count(&shape, family, mode, n, DEFAULT_CEILING).unwrap() as usize;
                    assert_eq!(fast, brute_force(&shape, family, mode, n), "{family:?} {mode:?} {:?}", shape.rows);
                }
            }
        }
        for shape in [ordinary(&[2, 1]), ordinary(&[1, 1]), ordinary(&[3])] {
            for mode in [Mode::Gl, Mode::Sp] {
                let fast = count(&shape, Family::T, mode, 2, DEFAULT_CEILING).unwrap() as usize;
                assert_eq!(fast, brute_force(&shape, Family::T, mode, 2));
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let ts = enumerate(&shifted(&[3, 1]), Family::QST, Mode::Gl, 2, DEFAULT_CEILING).unwrap();
        let keys: Vec<Vec<u32>> = ts.iter().map(|t| t.cells().map(|(_, e)| e.code()).collect()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn ceiling_guard() {
        let err = enumerate(&shifted(&[3, 1]), Family::QST, Mode::Gl, 2, 3).unwrap_err();
        assert_eq!(err, Error::CeilingExceeded(3));
    }

    #[test]
    fn validation_reports_rule() {
        let t = Tableau::parse(ShapeKind::Shifted, &["1 1", "1"]).unwrap();
        let err = validate(&t, Family::ST, Mode::Gl, 1).unwrap_err();
        assert_eq!(err, Error::RuleViolation { rule: "ST3", row: 2, col: 2 });
        let one = Tableau::parse(ShapeKind::Shifted, &["1"]).unwrap();
        assert!(validate(&one, Family::ST, Mode::Gl, 1).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let t = Tableau::parse(ShapeKind::Shifted, &["1 2~' 2", "2~"]).unwrap();
        let doc = TableauDoc::new(&t, Family::QST, Mode::Sp, 2);
        let s = serde_json::to_string(&doc).unwrap();
        assert!(s.contains("\"2~'\""));
        let back: TableauDoc = serde_json::from_str(&s).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.tableau().unwrap(), t);
    }

    #[test]
    fn empty_shape_has_one_tableau() {
        for family in [Family::ST, Family::PST, Family::QST] {
            assert_eq!(count(&shifted(&[]), family, Mode::Gl, 2, DEFAULT_CEILING).unwrap(), 1);
        }
        assert_eq!(count(&ordinary(&[]), Family::T, Mode::Sp, 2, DEFAULT_CEILING).unwrap(), 1);
    }
}
