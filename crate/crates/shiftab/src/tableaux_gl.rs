//! Statistics and weights of gl tableaux.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::core_types::{Entry, Mode, Shape};
use crate::error::Result;
use crate::polynomial::{LaurentPoly, Monomial, Var};
use crate::tableau::{enumerate, validate, Family, Tableau};

/// Counts of unprimed (`u`) and primed (`v`) occurrences of each letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlWeight {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
}

impl std::ops::Add for &GlWeight {
    type Output = GlWeight;
    fn add(self, o: &GlWeight) -> GlWeight {
        GlWeight {
            u: self.u.iter().zip(&o.u).map(|(a, b)| a + b).collect(),
            v: self.v.iter().zip(&o.v).map(|(a, b)| a + b).collect(),
        }
    }
}

pub fn weight(t: &Tableau, n: usize) -> GlWeight {
    let mut w = GlWeight { u: vec![0; n], v: vec![0; n] };
    for (_, e) in t.cells() {
        let k = e.letter as usize - 1;
        if e.primed {
            w.v[k] += 1;
        } else {
            w.u[k] += 1;
        }
    }
    w
}

/// `prod_k x_k^{u_k} y_k^{v_k}`.
pub fn weight_monomial(t: &Tableau) -> Monomial {
    let mut m = Monomial::one();
    for (_, e) in t.cells() {
        let v = if e.primed { Var::Y(e.letter as u16) } else { Var::X(e.letter as u16) };
        m = m.mul(&Monomial::var(v));
    }
    m
}

/// Per-letter geometry of the cells holding one unprimed value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StripData {
    pub rows: usize,
    pub cols: usize,
    pub components: usize,
}

/// Rows, columns and edge-connected components of each value, primes ignored.
pub fn strips(t: &Tableau) -> BTreeMap<Entry, StripData> {
    let mut cells: BTreeMap<Entry, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for (rc, e) in t.cells() {
        cells.entry(e.unprimed()).or_default().insert(rc);
    }
    cells
        .into_iter()
        .map(|(e, set)| {
            let rows = set.iter().map(|&(r, _)| r).collect::<BTreeSet<_>>().len();
            let cols = set.iter().map(|&(_, c)| c).collect::<BTreeSet<_>>().len();
            let mut seen = BTreeSet::new();
            let mut components = 0;
            for &start in &set {
                if !seen.insert(start) {
                    continue;
                }
                components += 1;
                let mut stack = vec![start];
                while let Some((r, c)) = stack.pop() {
                    let nbrs = [(r + 1, c), (r, c + 1), (r.wrapping_sub(1), c), (r, c.wrapping_sub(1))];
                    for nb in nbrs {
                        if set.contains(&nb) && seen.insert(nb) {
                            stack.push(nb);
                        }
                    }
                }
            }
            (e, StripData { rows, cols, components })
        })
        .collect()
}

/// Statistics of an unprimed shifted tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlStats {
    pub wgt: Vec<i64>,
    pub str: usize,
    pub hgt: usize,
}

/// `wgt`, the total number of strip components `str`, and
/// `hgt = sum_k (rows containing k - components of k)`.
pub fn stats_gl(st: &Tableau, n: usize) -> Result<GlStats> {
    validate(st, Family::ST, Mode::Gl, n)?;
    let data = strips(st);
    Ok(GlStats {
        wgt: weight(st, n).u,
        str: data.values().map(|d| d.components).sum(),
        hgt: data.values().map(|d| d.rows - d.components).sum(),
    })
}

/// `sum_T (x/y)^{wgt(T)}` over a family on `shape`.
pub fn weight_sum(shape: &Shape, family: Family, n: usize, ceiling: u64) -> Result<LaurentPoly> {
    let mut sum = LaurentPoly::zero();
    for t in enumerate(shape, family, Mode::Gl, n, ceiling)? {
        sum.add_term(weight_monomial(&t), 1.into());
    }
    Ok(sum)
}
