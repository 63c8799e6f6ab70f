//! Statistics and weights of tableaux over the barred alphabet.

use serde::{Deserialize, Serialize};

use crate::core_types::{Mode, Shape};
use crate::error::Result;
use crate::polynomial::{LaurentPoly, Monomial, Var};
use crate::tableau::{enumerate, validate, Family, Tableau};
use crate::tableaux_gl::strips;

/// Signed letter counts `u_k = #k - #k~`, `v_k = #k' - #k~'` and the number of barred entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpWeight {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub bar: usize,
}

pub fn weight_sp(t: &Tableau, n: usize) -> SpWeight {
    let mut w = SpWeight { u: vec![0; n], v: vec![0; n], bar: 0 };
    for (_, e) in t.cells() {
        let k = e.letter as usize - 1;
        let s = if e.barred { -1 } else { 1 };
        if e.primed {
            w.v[k] += s;
        } else {
            w.u[k] += s;
        }
        w.bar += e.barred as usize;
    }
    w
}

/// `prod_k x_k^{u_k} y_k^{v_k}`, times `t^{2 bar}` when `deform` is set.
pub fn weight_monomial_sp(t: &Tableau, deform: bool) -> Monomial {
    let mut m = Monomial::one();
    let mut bar = 0;
    for (_, e) in t.cells() {
        let v = if e.primed { Var::Y(e.letter as u16) } else { Var::X(e.letter as u16) };
        m = m.mul(&Monomial::power(v, if e.barred { -1 } else { 1 }));
        bar += e.barred as i32;
    }
    if deform {
        m = m.mul(&Monomial::power(Var::T, 2 * bar));
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpStats {
    pub wgt: Vec<i64>,
    pub bar: usize,
    pub str: usize,
    pub var: usize,
}

/// `wgt`, `bar`, `str` and `var = sum_k (row_k - con_k + col_k~ - con_k~)`.
pub fn stats_sp(st: &Tableau, n: usize) -> Result<SpStats> {
    validate(st, Family::ST, Mode::Sp, n)?;
    let data = strips(st);
    let var = data.iter().map(|(e, d)| if e.barred { d.cols - d.components } else { d.rows - d.components }).sum();
    let w = weight_sp(st, n);
    Ok(SpStats { wgt: w.u, bar: w.bar, str: data.values().map(|d| d.components).sum(), var })
}

/// `sum_T t^{2 bar(T)} (x/y)^{wgt(T)}` (without the `t` factor unless `deform`).
pub fn weight_sum_sp(shape: &Shape, family: Family, n: usize, deform: bool, ceiling: u64) -> Result<LaurentPoly> {
    let mut sum = LaurentPoly::zero();
    for t in enumerate(shape, family, Mode::Sp, n, ceiling)? {
        sum.add_term(weight_monomial_sp(&t, deform), 1.into());
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_types::{delta, ShapeKind};
    use crate::polynomial::{prod_x_plus_t2_xbar, product_xy, IndexRange};
    use crate::tableau::DEFAULT_CEILING;

    #[test]
    fn single_cell_stats() {
        let one = Tableau::parse(ShapeKind::Shifted, &["1"]).unwrap();
        assert_eq!(stats_sp(&one, 1).unwrap(), SpStats { wgt: vec![1], bar: 0, str: 1, var: 0 });
        let bar = Tableau::parse(ShapeKind::Shifted, &["1~"]).unwrap();
        assert_eq!(stats_sp(&bar, 1).unwrap(), SpStats { wgt: vec![-1], bar: 1, str: 1, var: 0 });
    }

    #[test]
    fn t3bar_reading() {
        let t = Tableau::parse(ShapeKind::Ordinary, &["2"]).unwrap();
        assert!(validate(&t, Family::T, Mode::Sp, 2).is_ok());
        let low = Tableau::parse(ShapeKind::Ordinary, &["1", "1~"]).unwrap();
        assert!(validate(&low, Family::T, Mode::Sp, 2).is_err());
    }

    #[test]
    fn diagonal_sums_are_products() {
        for n in 1..=3 {
            let shape = Shape::shifted(&delta(n));
            let qd = weight_sum_sp(&shape, Family::QD, n, true, DEFAULT_CEILING).unwrap();
            assert_eq!(qd, product_xy(n, IndexRange::Weak, Mode::Sp));
            let pd = weight_sum_sp(&shape, Family::PD, n, true, DEFAULT_CEILING).unwrap();
            assert_eq!(pd, &prod_x_plus_t2_xbar(n) * &product_xy(n, IndexRange::Strict, Mode::Sp));
        }
    }
}
