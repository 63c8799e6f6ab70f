//! Worked examples transcribed as JSON and compiled into the library, so the
//! test suites and the CLI can replay them without touching the filesystem.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::asm::Compass;
use crate::core_types::{Entry, ShapeKind};
use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::tableaux_gl::{GlStats, GlWeight};
use crate::tableaux_sp::{SpStats, SpWeight};

pub type Rows = Vec<Vec<Entry>>;

pub fn shifted(rows: &Rows) -> Result<Tableau> {
    Tableau::from_rows(ShapeKind::Shifted, rows.clone())
}

pub fn ordinary(rows: &Rows) -> Result<Tableau> {
    if rows.is_empty() {
        return Ok(Tableau::empty(ShapeKind::Ordinary));
    }
    Tableau::from_rows(ShapeKind::Ordinary, rows.clone())
}

#[derive(Clone, Debug, Deserialize)]
pub struct GlBijection {
    pub label: String,
    pub n: usize,
    pub mu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub input: Rows,
    /// Tableau after the pass for each letter, keyed by the letter.
    pub after_pass: BTreeMap<String, Rows>,
    pub pd: Rows,
    pub t: Rows,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SpStep {
    pub after: String,
    pub rows: Rows,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SpBijection {
    pub label: String,
    pub n: usize,
    pub mu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub input: Rows,
    pub steps: Vec<SpStep>,
    pub qd: Rows,
    pub t: Rows,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GlStatistics {
    pub label: String,
    pub n: usize,
    pub st: Rows,
    pub st_stats: GlStats,
    pub pst: Rows,
    pub pst_weight: GlWeight,
    pub pd: Rows,
    pub pd_weight: GlWeight,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SpStatistics {
    pub label: String,
    pub n: usize,
    /// An ordinary symplectic tableau.
    pub t: Rows,
    pub st: Rows,
    pub st_stats: SpStats,
    pub qst: Rows,
    pub qst_bar: usize,
    pub qd: Rows,
    pub qd_bar: usize,
    pub qd_weight: SpWeight,
}

/// Arrow directions on every edge; `?` marks an edge the source figure leaves undetermined.
#[derive(Clone, Debug, Deserialize)]
pub struct IceDoc {
    pub horizontal: Vec<Vec<String>>,
    pub vertical: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct AsmGl {
    pub label: String,
    pub n: usize,
    pub mu: Vec<usize>,
    pub st: Rows,
    pub st_weight: Vec<i64>,
    pub letters: Vec<Vec<u8>>,
    pub asm: Vec<Vec<i8>>,
    pub compass: Vec<Vec<Compass>>,
    pub ice: IceDoc,
    pub pst: Rows,
    /// `""` where the letter matrix is empty.
    pub pst_letters: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct AsmSp {
    pub label: String,
    pub n: usize,
    pub mu: Vec<usize>,
    pub st: Rows,
    pub asm: Vec<Vec<i8>>,
    pub compass: Vec<Vec<Compass>>,
    pub ice: IceDoc,
}

/// Rows of `(index, exponent)` pairs for each factor type.
#[derive(Clone, Debug, Deserialize)]
pub struct WeightFactors {
    pub x: Vec<(usize, u32)>,
    pub y: Vec<(usize, u32)>,
    pub x_plus_y: Vec<(usize, u32)>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct AsmSplit {
    pub label: String,
    pub m: usize,
    pub n: usize,
    pub c: Vec<Vec<i8>>,
    pub top: Vec<Vec<i8>>,
    pub bottom: Vec<Vec<i8>>,
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub kappa: Vec<usize>,
    pub compass: Vec<Vec<Compass>>,
    pub weight_factors: WeightFactors,
}

fn load<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("golden {name}: {e}")))
}

pub fn gl_bijection() -> Result<GlBijection> {
    load("gl_bijection", include_str!("../goldens/gl_bijection.json"))
}

pub fn sp_bijection() -> Result<SpBijection> {
    load("sp_bijection", include_str!("../goldens/sp_bijection.json"))
}

pub fn gl_statistics() -> Result<GlStatistics> {
    load("gl_statistics", include_str!("../goldens/gl_statistics.json"))
}

pub fn sp_statistics() -> Result<SpStatistics> {
    load("sp_statistics", include_str!("../goldens/sp_statistics.json"))
}

pub fn asm_gl() -> Result<AsmGl> {
    load("asm_gl", include_str!("../goldens/asm_gl.json"))
}

pub fn asm_sp() -> Result<AsmSp> {
    load("asm_sp", include_str!("../goldens/asm_sp.json"))
}

pub fn asm_split() -> Result<AsmSplit> {
    load("asm_split", include_str!("../goldens/asm_split.json"))
}
