//! Exhaustive checks at small rank: worked examples, bijectivity of the jeu
//! de taquin maps, refinement counts, generating sets, matrix counts and the
//! identity matrix. Checks run in parallel; results keep their listed order.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asm::{compass, count_asm, ice_edges, split_asm, st_to_asm, AsmMatrix};
use crate::core_types::{delta, mu_from_lambda, Mode, Partition, Shape};
use crate::error::{Error, Result};
use crate::goldens;
use crate::identities::{verify_with, IdentityId, Params};
use crate::jdt_gl::{theta, theta_inv, theta_pass};
use crate::jdt_sp::{chi_pass, phi, phi_bar_pass, phi_inv, psi_pass};
use crate::polynomial::{prod_x, prod_x_plus_t2_xbar, product_xy, IndexRange, LaurentPoly};
use crate::tableau::{enumerate, validate, Family, Tableau, DEFAULT_CEILING};
use crate::tableaux_gl::{stats_gl, weight, weight_sum};
use crate::tableaux_sp::{stats_sp, weight_monomial_sp, weight_sp, weight_sum_sp};

/// Outcome of one exhaustive bijection check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionCheck {
    /// Size of the domain.
    pub domain: usize,
    /// `|staircase family| * |ordinary tableaux|`.
    pub codomain: usize,
    pub distinct_images: usize,
    pub images_valid: bool,
    pub weight_preserved: bool,
    pub round_trip: bool,
}

impl BijectionCheck {
    pub fn ok(&self) -> bool {
        self.domain == self.codomain
            && self.distinct_images == self.domain
            && self.images_valid
            && self.weight_preserved
            && self.round_trip
    }
}

impl fmt::Display for BijectionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "domain {} codomain {} distinct {} valid {} weight {} round trip {}",
            self.domain, self.codomain, self.distinct_images, self.images_valid, self.weight_preserved, self.round_trip
        )
    }
}

/// Per-tableau verdict: `(image, valid, weight kept, round trip)`.
type Verdict = (Option<(Tableau, Tableau)>, bool, bool, bool);

fn collect(domain: Vec<Tableau>, codomain: usize, f: impl Fn(&Tableau) -> Verdict + Sync + Send) -> BijectionCheck {
    let verdicts: Vec<Verdict> = domain.par_iter().map(f).collect();
    let mut seen = HashSet::new();
    let mut out = BijectionCheck {
        domain: domain.len(),
        codomain,
        images_valid: true,
        weight_preserved: true,
        round_trip: true,
        ..Default::default()
    };
    for (img, valid, w, rt) in verdicts {
        out.images_valid &= valid;
        out.weight_preserved &= w;
        out.round_trip &= rt;
        if let Some(img) = img {
            seen.insert(img);
        }
    }
    out.distinct_images = seen.len();
    out
}

/// The gl map on all of `PST^mu(n)` (`family = PST`, images in PD) or `QST^mu(n)` (images in QD).
pub fn theta_check(n: usize, lambda: &Partition, family: Family, ceiling: u64) -> Result<BijectionCheck> {
    let stair = match family {
        Family::PST => Family::PD,
        Family::QST => Family::QD,
        _ => return Err(Error::InvalidArgument(format!("no gl bijection on {family}"))),
    };
    let mu = mu_from_lambda(lambda, n)?;
    let domain = enumerate(&Shape::shifted(&mu), family, Mode::Gl, n, ceiling)?;
    let pds = enumerate(&Shape::shifted(&delta(n)), stair, Mode::Gl, n, ceiling)?.len();
    let ts = enumerate(&Shape::ordinary(lambda), Family::T, Mode::Gl, n, ceiling)?.len();
    Ok(collect(domain, pds * ts, |p| match theta(p, n, false) {
        Ok(r) => {
            let valid = validate(&r.pd, stair, Mode::Gl, n).is_ok() && validate(&r.t, Family::T, Mode::Gl, n).is_ok();
            let w = weight(p, n) == &weight(&r.pd, n) + &weight(&r.t, n);
            let rt = theta_inv(&r.pd, &r.t, n).is_ok_and(|back| &back == p);
            (Some((r.pd, r.t)), valid, w, rt)
        }
        Err(_) => (None, false, false, false),
    }))
}

/// The sp map on all of `QST^mu(n, n~)`; weight means the full `t^{2 bar} (x/y)^wgt` monomial.
pub fn phi_check(n: usize, lambda: &Partition, ceiling: u64) -> Result<BijectionCheck> {
    let mu = mu_from_lambda(lambda, n)?;
    let domain = enumerate(&Shape::shifted(&mu), Family::QST, Mode::Sp, n, ceiling)?;
    let qds = enumerate(&Shape::shifted(&delta(n)), Family::QD, Mode::Sp, n, ceiling)?.len();
    let ts = enumerate(&Shape::ordinary(lambda), Family::T, Mode::Sp, n, ceiling)?.len();
    Ok(collect(domain, qds * ts, |q| match phi(q, n, false) {
        Ok(r) => {
            let valid =
                validate(&r.qd, Family::QD, Mode::Sp, n).is_ok() && validate(&r.t, Family::T, Mode::Sp, n).is_ok();
            let (a, b) = (weight_sp(&r.qd, n), weight_sp(&r.t, n));
            let w = weight_monomial_sp(q, true) == weight_monomial_sp(&r.qd, true).mul(&weight_monomial_sp(&r.t, true))
                && weight_sp(q, n).bar == a.bar + b.bar;
            let rt = phi_inv(&r.qd, &r.t, n).is_ok_and(|back| &back == q);
            (Some((r.qd, r.t)), valid, w, rt)
        }
        Err(_) => (None, false, false, false),
    }))
}

/// Whether every ST of shape `lambda + delta` is refined by exactly
/// `2^(str-n)` PSTs and `2^str` QSTs (counted by stripping primes).
pub fn refinement_check(n: usize, lambda: &Partition, ceiling: u64) -> Result<bool> {
    let shape = Shape::shifted(&mu_from_lambda(lambda, n)?);
    let mut ok = true;
    for (family, extra) in [(Family::PST, n), (Family::QST, 0)] {
        let mut counts: HashMap<Tableau, u64> = HashMap::new();
        for p in enumerate(&shape, family, Mode::Gl, n, ceiling)? {
            *counts.entry(p.strip_primes()).or_default() += 1;
        }
        let sts = enumerate(&shape, Family::ST, Mode::Gl, n, ceiling)?;
        ok &= counts.len() == sts.len();
        for st in &sts {
            let s = stats_gl(st, n)?;
            ok &= counts.get(st).copied() == Some(1u64 << (s.str - extra));
        }
    }
    Ok(ok)
}

/// Generating sums of the staircase families against their products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StaircaseSum {
    /// gl, no diagonal primes: `prod x_i prod_{i<j} (x_i + y_j)`.
    Pd,
    /// gl, diagonal primes: `prod_{i<=j} (x_i + y_j)`.
    Qd,
    /// sp, no diagonal primes.
    PdBar,
    /// sp, diagonal primes.
    QdBar,
}

impl fmt::Display for StaircaseSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StaircaseSum::Pd => "PD",
            StaircaseSum::Qd => "QD",
            StaircaseSum::PdBar => "PD_BAR",
            StaircaseSum::QdBar => "QD_BAR",
        })
    }
}

pub fn staircase_sum_check(which: StaircaseSum, n: usize, ceiling: u64) -> Result<bool> {
    let shape = Shape::shifted(&delta(n));
    let (sum, product): (LaurentPoly, LaurentPoly) = match which {
        StaircaseSum::Pd => {
            (weight_sum(&shape, Family::PD, n, ceiling)?, &prod_x(n) * &product_xy(n, IndexRange::Strict, Mode::Gl))
        }
        StaircaseSum::Qd => (weight_sum(&shape, Family::QD, n, ceiling)?, product_xy(n, IndexRange::Weak, Mode::Gl)),
        StaircaseSum::PdBar => (
            weight_sum_sp(&shape, Family::PD, n, true, ceiling)?,
            &prod_x_plus_t2_xbar(n) * &product_xy(n, IndexRange::Strict, Mode::Sp),
        ),
        StaircaseSum::QdBar => {
            (weight_sum_sp(&shape, Family::QD, n, true, ceiling)?, product_xy(n, IndexRange::Weak, Mode::Sp))
        }
    };
    Ok(sum == product)
}

/// One named comparison against a worked example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleCheck {
    pub name: String,
    pub passed: bool,
}

fn ex(name: &str, passed: bool) -> ExampleCheck {
    ExampleCheck { name: name.to_string(), passed }
}

/// Replay the four bijection and matrix worked examples.
pub fn worked_examples() -> Result<Vec<ExampleCheck>> {
    let mut out = Vec::new();

    let g = goldens::gl_bijection()?;
    let input = goldens::shifted(&g.input)?;
    let mut t = input.clone();
    let mut passes_ok = true;
    for k in 1..=g.n {
        theta_pass(&mut t, k, None)?;
        if let Some(rows) = g.after_pass.get(&k.to_string()) {
            passes_ok &= t == goldens::shifted(rows)?;
        }
    }
    out.push(ex("gl bijection: tableau after each pass", passes_ok));
    let r = theta(&input, g.n, false)?;
    out.push(ex("gl bijection: staircase part", r.pd == goldens::shifted(&g.pd)?));
    out.push(ex("gl bijection: ordinary part", r.t == goldens::ordinary(&g.t)?));
    out.push(ex("gl bijection: inverse", theta_inv(&r.pd, &r.t, g.n)? == input));

    let g = goldens::sp_bijection()?;
    let input = goldens::shifted(&g.input)?;
    let mut t = input.clone();
    let mut steps = g.steps.iter().peekable();
    let mut steps_ok = true;
    for k in 1..=g.n {
        for (name, pass) in [
            ("phi_bar", phi_bar_pass as fn(&mut Tableau, usize, crate::jdt_gl::Trace) -> Result<()>),
            ("psi", psi_pass),
            ("chi", chi_pass),
        ] {
            pass(&mut t, k, None)?;
            if let Some(step) = steps.next_if(|s| s.after == format!("{name} {k}")) {
                steps_ok &= t == goldens::shifted(&step.rows)?;
            }
        }
    }
    out.push(ex("sp bijection: intermediate tableaux", steps_ok && steps.next().is_none()));
    let r = phi(&input, g.n, false)?;
    out.push(ex("sp bijection: staircase part", r.qd == goldens::shifted(&g.qd)?));
    out.push(ex("sp bijection: ordinary part", r.t == goldens::ordinary(&g.t)?));
    out.push(ex("sp bijection: inverse", phi_inv(&r.qd, &r.t, g.n)? == input));

    let g = goldens::asm_gl()?;
    let st = goldens::shifted(&g.st)?;
    let a = st_to_asm(&st, Mode::Gl)?;
    out.push(ex("gl matrix of the tableau", a.rows == g.asm));
    out.push(ex("gl compass points", compass(&a).rows == g.compass));
    out.push(ex("gl square ice", ice_matches(&a, &g.ice)));

    let g = goldens::asm_sp()?;
    let st = goldens::shifted(&g.st)?;
    let a = st_to_asm(&st, Mode::Sp)?;
    out.push(ex("U-turn matrix of the tableau", a.rows == g.asm));
    out.push(ex("U-turn compass points", compass(&a).rows == g.compass));
    out.push(ex("U-turn square ice", ice_matches(&a, &g.ice)));

    let g = goldens::asm_split()?;
    let s = split_asm(&AsmMatrix::new(g.c.clone(), delta(g.m), false)?, g.n)?;
    out.push(ex(
        "square matrix split",
        s.top.rows == g.top
            && s.bottom.rows == g.bottom
            && s.top.mu.parts() == g.mu
            && s.bottom.mu.parts() == g.nu
            && s.lambda.parts() == g.lambda
            && s.kappa.parts() == g.kappa,
    ));
    Ok(out)
}

/// Edge arrows against a transcribed figure; `?` entries are skipped.
pub fn ice_matches(a: &AsmMatrix, doc: &goldens::IceDoc) -> bool {
    let e = ice_edges(a);
    let same = |ours: &Vec<Vec<char>>, theirs: &Vec<Vec<String>>| {
        ours.len() == theirs.len()
            && ours
                .iter()
                .zip(theirs)
                .all(|(a, b)| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| y == "?" || x.to_string() == *y))
    };
    same(&e.horizontal, &doc.horizontal) && same(&e.vertical, &doc.vertical)
}

/// Statistics of the displayed tableaux.
pub fn worked_statistics() -> Result<Vec<ExampleCheck>> {
    let mut out = Vec::new();
    let g = goldens::gl_statistics()?;
    let st = goldens::shifted(&g.st)?;
    out.push(ex("gl (wgt, str, hgt)", stats_gl(&st, g.n)? == g.st_stats));
    out.push(ex("gl PST weight", weight(&goldens::shifted(&g.pst)?, g.n) == g.pst_weight));
    out.push(ex("gl PD weight", weight(&goldens::shifted(&g.pd)?, g.n) == g.pd_weight));
    let g = goldens::sp_statistics()?;
    let st = goldens::shifted(&g.st)?;
    out.push(ex("sp (wgt, bar, str, var)", stats_sp(&st, g.n)? == g.st_stats));
    out.push(ex("sp bar(QST)", weight_sp(&goldens::shifted(&g.qst)?, g.n).bar == g.qst_bar));
    let qd = weight_sp(&goldens::shifted(&g.qd)?, g.n);
    out.push(ex("sp bar(QD)", qd.bar == g.qd_bar));
    out.push(ex("sp QD weight", qd == g.qd_weight));
    out.push(ex("sp ordinary tableau is valid", validate(&goldens::ordinary(&g.t)?, Family::T, Mode::Sp, g.n).is_ok()));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth {
    /// Identities at `n <= 2` plus the worked examples.
    Smoke,
    /// Everything at the sizes of the acceptance matrix.
    Full,
}

impl FromStr for Depth {
    type Err = Error;
    fn from_str(s: &str) -> Result<Depth> {
        match s {
            "smoke" => Ok(Depth::Smoke),
            "full" => Ok(Depth::Full),
            _ => Err(Error::Parse(format!("unknown depth {s:?}"))),
        }
    }
}

fn lambdas(n: usize, max_weight: usize) -> Vec<Partition> {
    Partition::all_up_to(n, max_weight)
}

/// `(id, max n, max |lambda|)`; the split identity is listed separately.
const MATRIX: &[(IdentityId, usize, usize)] = &[
    (IdentityId::Prop11P, 3, 3),
    (IdentityId::Prop11Q, 3, 3),
    (IdentityId::Prop12, 2, 2),
    (IdentityId::CorPst, 3, 3),
    (IdentityId::CorQst, 3, 3),
    (IdentityId::QdeltaSp, 2, 0),
    (IdentityId::Tokuyama, 3, 3),
    (IdentityId::SpTokuyama, 2, 2),
    (IdentityId::MacdonaldDelta, 3, 0),
    (IdentityId::MacdonaldShift, 3, 3),
    (IdentityId::S1nDelta, 4, 0),
    (IdentityId::Chapman, 4, 0),
    (IdentityId::ChapmanAsm, 4, 0),
    (IdentityId::RrLambdaDet, 4, 0),
    (IdentityId::WeylGl, 4, 0),
    (IdentityId::WeylSp, 3, 0),
    (IdentityId::Cor51, 3, 3),
    (IdentityId::Cor53Sp, 2, 2),
];

/// Largest matrix size for the split identity.
pub const SPLIT_MAX_M: usize = 4;

/// Every `(id, params)` pair of the identity matrix, in listed order.
pub fn identity_matrix(depth: Depth) -> Vec<(IdentityId, Params)> {
    let cap = match depth {
        Depth::Smoke => 2,
        Depth::Full => usize::MAX,
    };
    let mut out = Vec::new();
    for &(id, max_n, max_w) in MATRIX {
        for n in 1..=max_n.min(cap) {
            for lambda in lambdas(n, max_w) {
                out.push((id, Params::new(n, lambda)));
            }
        }
    }
    for m in 2..=SPLIT_MAX_M.min(cap.saturating_add(1)) {
        for n in 1..m {
            for lambda in Partition::in_box(n, m - n) {
                out.push((IdentityId::Cor5new, Params { n, lambda, m: Some(m) }));
            }
        }
    }
    out
}

/// One line of the suite summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub params: String,
    pub passed: bool,
    pub detail: String,
}

enum Job {
    Identity(IdentityId, Params),
    Theta(usize, Partition, Family),
    Phi(usize, Partition),
    Refinement(usize, Partition),
    Staircase(StaircaseSum, usize),
    Count(usize),
}

fn jobs(depth: Depth) -> Vec<Job> {
    let mut out: Vec<Job> = identity_matrix(depth).into_iter().map(|(id, p)| Job::Identity(id, p)).collect();
    if depth == Depth::Smoke {
        return out;
    }
    for n in 1..=3 {
        for lambda in lambdas(n, 4) {
            out.push(Job::Theta(n, lambda.clone(), Family::PST));
            out.push(Job::Theta(n, lambda, Family::QST));
        }
    }
    for (n, lambda) in phi_cases() {
        out.push(Job::Phi(n, lambda));
    }
    for n in 1..=3 {
        for lambda in lambdas(n, 3) {
            out.push(Job::Refinement(n, lambda));
        }
    }
    for (which, max_n) in
        [(StaircaseSum::Pd, 4), (StaircaseSum::Qd, 4), (StaircaseSum::PdBar, 3), (StaircaseSum::QdBar, 3)]
    {
        for n in 1..=max_n {
            out.push(Job::Staircase(which, n));
        }
    }
    for n in 1..=5 {
        out.push(Job::Count(n));
    }
    out
}

/// `n <= 2` with `|lambda| <= 3`, and `n = 3` with `lambda` empty or `(1)`.
pub fn phi_cases() -> Vec<(usize, Partition)> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for lambda in lambdas(n, 3) {
            out.push((n, lambda));
        }
    }
    for lambda in lambdas(3, 1) {
        out.push((3, lambda));
    }
    out
}

fn run_job(job: &Job, ceiling: u64) -> CheckResult {
    let (check, params, outcome): (String, String, Result<(bool, String)>) = match job {
        Job::Identity(id, p) => (
            id.to_string(),
            p.to_string(),
            verify_with(*id, p, ceiling).map(|r| {
                let mut detail = match &r.discrepancy {
                    None => format!("{} terms", r.lhs.num_terms()),
                    Some(d) => format!("first difference at {}: {} vs {}", d.monomial, d.lhs, d.rhs),
                };
                if let Some(note) = &r.note {
                    detail = format!("{detail}; {note}");
                }
                (r.equal, detail)
            }),
        ),
        Job::Theta(n, l, fam) => (
            format!("THETA_{fam}"),
            format!("n={n} lambda={l}"),
            theta_check(*n, l, *fam, ceiling).map(|c| (c.ok(), c.to_string())),
        ),
        Job::Phi(n, l) => {
            ("PHI_QST".into(), format!("n={n} lambda={l}"), phi_check(*n, l, ceiling).map(|c| (c.ok(), c.to_string())))
        }
        Job::Refinement(n, l) => (
            "REFINEMENT".into(),
            format!("n={n} lambda={l}"),
            refinement_check(*n, l, ceiling).map(|ok| (ok, String::new())),
        ),
        Job::Staircase(w, n) => (
            format!("STAIRCASE_{w}"),
            format!("n={n}"),
            staircase_sum_check(*w, *n, ceiling).map(|ok| (ok, String::new())),
        ),
        Job::Count(n) => ("ASM_COUNT".into(), format!("n={n}"), {
            let (formula, enumerated) = count_asm(*n);
            Ok((formula == enumerated.into(), format!("formula {formula}, enumeration {enumerated}")))
        }),
    };
    match outcome {
        Ok((passed, detail)) => CheckResult { check, params, passed, detail },
        Err(e) => CheckResult { check, params, passed: false, detail: format!("error: {e}") },
    }
}

/// Run every check of `depth`; results are in job order whatever the completion order.
pub fn run_suite(depth: Depth, ceiling: u64) -> Result<Vec<CheckResult>> {
    let mut out: Vec<CheckResult> = worked_examples()?
        .into_iter()
        .chain(worked_statistics()?)
        .map(|e| CheckResult { check: "EXAMPLE".into(), params: e.name, passed: e.passed, detail: String::new() })
        .collect();
    let jobs = jobs(depth);
    out.extend(jobs.par_iter().map(|j| run_job(j, ceiling)).collect::<Vec<_>>());
    Ok(out)
}

pub fn run_suite_default(depth: Depth) -> Result<Vec<CheckResult>> {
    run_suite(depth, DEFAULT_CEILING)
}

/// Fixed-width table, one line per check, then a totals line.
pub fn render_summary(results: &[CheckResult]) -> String {
    let w1 = results.iter().map(|r| r.check.len()).max().unwrap_or(0);
    let w2 = results.iter().map(|r| r.params.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let line =
            format!("{:<4}  {:<w1$}  {:<w2$}  {}", if r.passed { "PASS" } else { "FAIL" }, r.check, r.params, r.detail);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.push_str(&format!("{passed} of {} checks passed\n", results.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_and_statistics_pass() {
        for e in worked_examples().unwrap().into_iter().chain(worked_statistics().unwrap()) {
            assert!(e.passed, "{}", e.name);
        }
    }

    #[test]
    fn small_bijections() {
        let l = Partition::new(vec![1]).unwrap();
        assert!(theta_check(2, &l, Family::PST, DEFAULT_CEILING).unwrap().ok());
        assert!(theta_check(2, &l, Family::QST, DEFAULT_CEILING).unwrap().ok());
        assert!(phi_check(1, &l, DEFAULT_CEILING).unwrap().ok());
        assert!(refinement_check(2, &l, DEFAULT_CEILING).unwrap());
        assert!(theta_check(2, &l, Family::T, DEFAULT_CEILING).is_err());
    }

    #[test]
    fn staircase_sums() {
        for w in [StaircaseSum::Pd, StaircaseSum::Qd, StaircaseSum::PdBar, StaircaseSum::QdBar] {
            assert!(staircase_sum_check(w, 2, DEFAULT_CEILING).unwrap(), "{w}");
        }
    }

    #[test]
    fn matrix_order_is_fixed() {
        let a = identity_matrix(Depth::Smoke);
        assert_eq!(a, identity_matrix(Depth::Smoke));
        assert!(a.iter().all(|(_, p)| p.n <= 2));
        let full = identity_matrix(Depth::Full);
        assert!(full.len() > a.len());
        let split = full.iter().filter(|(id, _)| *id == IdentityId::Cor5new).count();
        assert_eq!(split, 22);
        assert!(full.iter().any(|(_, p)| p.m == Some(SPLIT_MAX_M)));
    }
}
