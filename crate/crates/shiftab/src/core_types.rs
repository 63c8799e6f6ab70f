//! Partitions, shapes and the primed/barred entry alphabet.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so `(4,3,3,0,0)` and
/// `(4,3,3)` are the same partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-indexed, with zero padding past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width).map(|k| self.parts.iter().filter(|&&p| p >= k).count()).collect();
        Partition { parts }
    }

    /// All partitions with at most `max_len` parts and weight at most `max_weight`,
    /// ordered by weight and then reverse-lexicographically.
    pub fn all_up_to(max_len: usize, max_weight: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for w in 0..=max_weight {
            let mut cur = Vec::new();
            partitions_of(w, w, max_len, &mut cur, &mut out);
        }
        out
    }

    /// All partitions fitting inside a `rows` by `cols` rectangle.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        Partition::all_up_to(rows, rows * cols).into_iter().filter(|p| p.part(1) <= cols).collect()
    }
}

fn partitions_of(remaining: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        cur.push(p);
        partitions_of(remaining - p, p, max_len, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn contains(&self, q: usize) -> bool {
        self.parts.contains(&q)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StrictPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        StrictPartition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The staircase `(n, n-1, ..., 1)`.
pub fn delta(n: usize) -> StrictPartition {
    StrictPartition { parts: (1..=n).rev().collect() }
}

/// `mu_i = lambda_i + n - i + 1` for `i = 1..n`.
pub fn mu_from_lambda(lambda: &Partition, n: usize) -> Result<StrictPartition> {
    if lambda.len() > n {
        return Err(Error::InvalidPartition(format!("{lambda} has more than {n} parts")));
    }
    let parts = (1..=n).map(|i| lambda.part(i) + n - i + 1).collect();
    StrictPartition::new(parts)
}

/// Inverse of [`mu_from_lambda`] for strict partitions with exactly `n` parts.
pub fn lambda_from_mu(mu: &StrictPartition, n: usize) -> Result<Partition> {
    if mu.len() != n {
        return Err(Error::InvalidPartition(format!("{mu} does not have {n} parts")));
    }
    Partition::new((1..=n).map(|i| mu.part(i) - (n - i + 1)).collect())
}

/// Conjugate of the complement of `lambda` in the `n` by `m - n` rectangle.
pub fn rect_complement_conjugate(lambda: &Partition, n: usize, m: usize) -> Result<Partition> {
    if m <= n {
        return Err(Error::InvalidPartition(format!("need m > n, got m={m}, n={n}")));
    }
    let w = m - n;
    if lambda.len() > n || lambda.part(1) > w {
        return Err(Error::InvalidPartition(format!("{lambda} does not fit in a {n}x{w} rectangle")));
    }
    let complement = Partition::new((1..=n).map(|i| w - lambda.part(n + 1 - i)).collect())?;
    Ok(complement.conjugate())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Ordinary,
    Shifted,
}

/// Row lengths together with the placement of each row.
///
/// Rows and columns are 1-indexed. Row `i` of an ordinary shape occupies
/// columns `1..=len_i`; row `i` of a shifted shape occupies `i..=i+len_i-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub kind: ShapeKind,
    pub rows: Vec<usize>,
}

impl Shape {
    pub fn ordinary(lambda: &Partition) -> Shape {
        Shape { kind: ShapeKind::Ordinary, rows: lambda.parts().to_vec() }
    }

    pub fn shifted(mu: &StrictPartition) -> Shape {
        Shape { kind: ShapeKind::Shifted, rows: mu.parts().to_vec() }
    }

    pub fn is_shifted(&self) -> bool {
        self.kind == ShapeKind::Shifted
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().sum()
    }

    /// First column of row `r`.
    pub fn row_start(&self, r: usize) -> usize {
        match self.kind {
            ShapeKind::Ordinary => 1,
            ShapeKind::Shifted => r,
        }
    }

    /// Last column of row `r` (one less than `row_start` for an empty row).
    pub fn row_end(&self, r: usize) -> usize {
        self.row_start(r) + self.rows[r - 1] - 1
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.rows.len() && c >= self.row_start(r) && c <= self.row_end(r)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.rows.len()).flat_map(move |r| (self.row_start(r)..=self.row_end(r)).map(move |c| (r, c)))
    }
}

/// Which alphabet a tableau is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Letters `1' < 1 < 2' < 2 < ...`.
    Gl,
    /// Letters `1~' < 1~ < 1' < 1 < 2~' < ...`.
    Sp,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Mode::Gl),
            "sp" => Ok(Mode::Sp),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// A tableau entry: a letter with optional bar and prime.
///
/// Entries are ordered by [`Entry::code`], which realises both the gl and
/// the sp total orders (the gl order is the restriction to unbarred letters).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub letter: u8,
    pub barred: bool,
    pub primed: bool,
}

impl Entry {
    pub const fn new(letter: u8, barred: bool, primed: bool) -> Entry {
        Entry { letter, barred, primed }
    }

    pub const fn plain(letter: u8) -> Entry {
        Entry::new(letter, false, false)
    }

    pub const fn prime(letter: u8) -> Entry {
        Entry::new(letter, false, true)
    }

    pub const fn bar(letter: u8) -> Entry {
        Entry::new(letter, true, false)
    }

    pub const fn bar_prime(letter: u8) -> Entry {
        Entry::new(letter, true, true)
    }

    /// Ordinal `4(k-1) + s` with `s = 0, 1, 2, 3` for `k~', k~, k', k`.
    pub fn code(self) -> u32 {
        4 * (self.letter as u32 - 1) + if self.barred { 0 } else { 2 } + if self.primed { 0 } else { 1 }
    }

    pub fn from_code(code: u32) -> Entry {
        let s = code % 4;
        Entry::new((code / 4 + 1) as u8, s < 2, s.is_multiple_of(2))
    }

    pub fn unprimed(self) -> Entry {
        Entry { primed: false, ..self }
    }

    /// Every entry over letters `1..=n` in increasing order, optionally
    /// restricted to unbarred or unprimed entries.
    pub fn alphabet(n: usize, mode: Mode, primes: bool) -> Vec<Entry> {
        (0..4 * n as u32)
            .map(Entry::from_code)
            .filter(|e| (mode == Mode::Sp || !e.barred) && (primes || !e.primed))
            .collect()
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter)?;
        if self.barred {
            write!(f, "~")?;
        }
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl FromStr for Entry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (t, primed) = match t.strip_suffix('\'') {
            Some(rest) => (rest, true),
            None => (t, false),
        };
        let (t, barred) = match t.strip_suffix('~') {
            Some(rest) => (rest, true),
            None => (t, false),
        };
        let letter: u8 = t.parse().map_err(|_| Error::Parse(format!("bad entry {s:?}")))?;
        if letter == 0 {
            return Err(Error::Parse(format!("bad entry {s:?}")));
        }
        Ok(Entry::new(letter, barred, primed))
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn mu_from_lambda_examples() {
        assert_eq!(mu_from_lambda(&p(&[3, 3, 2, 1, 1]), 6).unwrap().parts(), &[9, 8, 6, 4, 3, 1]);
        assert_eq!(mu_from_lambda(&p(&[]), 3).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(mu_from_lambda(&p(&[4, 3, 3]), 5).unwrap().parts(), &[9, 7, 6, 2, 1]);
        assert!(mu_from_lambda(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[4, 3, 3, 0, 0]), p(&[4, 3, 3]));
        assert_eq!(p(&[4, 3, 3, 0, 0]).len(), 3);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for lam in Partition::all_up_to(12, 12) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn partition_counts() {
        // p(0..=8) = 1,1,2,3,5,7,11,15,22
        let all = Partition::all_up_to(8, 8);
        let counts: Vec<usize> = (0..=8).map(|w| all.iter().filter(|l| l.weight() == w).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::in_box(2, 2).len(), 6);
    }

    #[test]
    fn rect_complement_conjugate_examples() {
        assert_eq!(rect_complement_conjugate(&p(&[2, 1]), 2, 6).unwrap(), p(&[2, 2, 1]));
        assert_eq!(rect_complement_conjugate(&p(&[]), 2, 4).unwrap(), p(&[2, 2]));
        assert_eq!(rect_complement_conjugate(&p(&[2, 2]), 2, 4).unwrap(), p(&[]));
        assert!(rect_complement_conjugate(&p(&[3]), 2, 4).is_err());
    }

    #[test]
    fn lambda_round_trip_and_disjoint_union() {
        for m in 2..=7 {
            for n in 1..m {
                for lam in Partition::in_box(n, m - n) {
                    let mu = mu_from_lambda(&lam, n).unwrap();
                    assert_eq!(lambda_from_mu(&mu, n).unwrap(), lam);
                    let kappa = rect_complement_conjugate(&lam, n, m).unwrap();
                    let nu = mu_from_lambda(&kappa, m - n).unwrap();
                    let mut all: Vec<usize> = mu.parts().iter().chain(nu.parts()).copied().collect();
                    all.sort();
                    assert_eq!(all, (1..=m).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn entry_orders() {
        let gl: Vec<String> = Entry::alphabet(2, Mode::Gl, true).iter().map(|e| e.to_string()).collect();
        assert_eq!(gl, ["1'", "1", "2'", "2"]);
        let sp: Vec<String> = Entry::alphabet(2, Mode::Sp, true).iter().map(|e| e.to_string()).collect();
        assert_eq!(sp, ["1~'", "1~", "1'", "1", "2~'", "2~", "2'", "2"]);
        for e in Entry::alphabet(3, Mode::Sp, true) {
            assert_eq!(e.to_string().parse::<Entry>().unwrap(), e);
            assert_eq!(Entry::from_code(e.code()), e);
        }
        assert!("0".parse::<Entry>().is_err());
        assert!("x".parse::<Entry>().is_err());
    }

    #[test]
    fn shifted_shape_cells() {
        let s = Shape::shifted(&StrictPartition::new(vec![3, 1]).unwrap());
        let cells: Vec<_> = s.cells().collect();
        assert_eq!(cells, vec![(1, 1), (1, 2), (1, 3), (2, 2)]);
        assert!(!s.contains(2, 1));
        assert!(s.contains(2, 2));
    }
}
