//! The subcommands. Each one writes JSON objects, one per line, through an
//! [`Output`].

use serde::Serialize;

use idinf::circle::{gap_bound, min_gap_profile};
use idinf::finverse::f_embed;
use idinf::quotient::{sigma_eq, sigma_max};
use idinf::semidirect::{from_semidirect, to_semidirect};
use idinf::solvers::{green, solve_left, solve_right, upset, SolutionSet};
use idinf::{FInverseElem, PartialIsometry, SemidirectElem};

use crate::error::CliError;
use crate::expr::{parse_expr, parse_isometry, parse_set};

/// Collects rendered JSON lines.
#[derive(Debug, Default)]
pub struct Output {
    pub pretty: bool,
    pub lines: Vec<String>,
}

impl Output {
    pub fn new(pretty: bool) -> Self {
        Output { pretty, lines: Vec::new() }
    }

    pub fn emit<T: Serialize>(&mut self, value: &T) {
        let line = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        };
        self.lines.push(line.expect("output types serialize infallibly"));
    }
}

/// Parses and evaluates an expression argument.
pub fn element(text: &str) -> Result<PartialIsometry, CliError> {
    Ok(parse_expr(text)?.eval()?)
}

#[derive(Serialize)]
struct Single {
    result: String,
}

#[derive(Serialize)]
struct Leq {
    leq: bool,
}

#[derive(Serialize)]
struct SigmaEq {
    sigma_eq: bool,
}

#[derive(Serialize)]
struct Upset {
    count: usize,
    upset: Vec<String>,
}

#[derive(Serialize)]
struct Solutions {
    count: usize,
    solutions: Vec<String>,
    unit_member: Option<String>,
}

impl From<SolutionSet> for Solutions {
    fn from(s: SolutionSet) -> Self {
        Solutions {
            count: s.len(),
            solutions: s.solutions.iter().map(ToString::to_string).collect(),
            unit_member: s.unit_member.map(|u| u.to_string()),
        }
    }
}

#[derive(Serialize)]
struct GreenOut {
    #[serde(rename = "L")]
    l: bool,
    #[serde(rename = "R")]
    r: bool,
    #[serde(rename = "H")]
    h: bool,
    #[serde(rename = "D")]
    d: bool,
}

#[derive(Serialize)]
struct SemidirectOut {
    gamma: String,
    ran_excl: String,
}

#[derive(Serialize)]
struct FInverseOut {
    idem_excl: String,
    t: String,
}

impl From<&FInverseElem> for FInverseOut {
    fn from(x: &FInverseElem) -> Self {
        FInverseOut { idem_excl: x.idem_excl.to_string(), t: x.t.to_string() }
    }
}

pub fn eval(out: &mut Output, expr: &str) -> Result<(), CliError> {
    out.emit(&Single { result: element(expr)?.to_string() });
    Ok(())
}

pub fn leq(out: &mut Output, a: &str, b: &str) -> Result<(), CliError> {
    out.emit(&Leq { leq: element(a)?.leq(&element(b)?) });
    Ok(())
}

pub fn upset_cmd(out: &mut Output, a: &str) -> Result<(), CliError> {
    let up = upset(&element(a)?)?;
    out.emit(&Upset { count: up.len(), upset: up.iter().map(ToString::to_string).collect() });
    Ok(())
}

pub fn solve_right_cmd(out: &mut Output, a: &str, b: &str) -> Result<(), CliError> {
    out.emit(&Solutions::from(solve_right(&element(a)?, &element(b)?)?));
    Ok(())
}

pub fn solve_left_cmd(out: &mut Output, a: &str, b: &str) -> Result<(), CliError> {
    out.emit(&Solutions::from(solve_left(&element(a)?, &element(b)?)?));
    Ok(())
}

pub fn sigma_max_cmd(out: &mut Output, a: &str) -> Result<(), CliError> {
    out.emit(&Single { result: sigma_max(&element(a)?).to_string() });
    Ok(())
}

pub fn sigma_eq_cmd(out: &mut Output, a: &str, b: &str) -> Result<(), CliError> {
    out.emit(&SigmaEq { sigma_eq: sigma_eq(&element(a)?, &element(b)?) });
    Ok(())
}

pub fn green_cmd(out: &mut Output, a: &str, b: &str) -> Result<(), CliError> {
    let g = green(&element(a)?, &element(b)?)?;
    out.emit(&GreenOut { l: g.l, r: g.r, h: g.h, d: g.d });
    Ok(())
}

pub fn to_semidirect_cmd(out: &mut Output, a: &str) -> Result<(), CliError> {
    let s = to_semidirect(&element(a)?)?;
    out.emit(&SemidirectOut { gamma: s.gamma.to_string(), ran_excl: s.ran_excl.to_string() });
    Ok(())
}

pub fn from_semidirect_cmd(out: &mut Output, gamma: &str, set: &str) -> Result<(), CliError> {
    let s = SemidirectElem::new(parse_isometry(gamma)?, parse_set(set)?);
    out.emit(&Single { result: from_semidirect(&s)?.to_string() });
    Ok(())
}

pub fn mc_embed_cmd(out: &mut Output, a: &str) -> Result<(), CliError> {
    out.emit(&FInverseOut::from(&f_embed(&element(a)?)));
    Ok(())
}

pub fn mc_mul_cmd(out: &mut Output, f: &str, u: &str, g: &str, v: &str) -> Result<(), CliError> {
    let x = FInverseElem::new(parse_set(f)?, parse_isometry(u)?);
    let y = FInverseElem::new(parse_set(g)?, parse_isometry(v)?);
    out.emit(&FInverseOut::from(&x.mul(&y)?));
    Ok(())
}

#[derive(Serialize)]
struct GapRow {
    n: u64,
    min_gap: f64,
    bound: f64,
    ok: bool,
}

#[derive(Serialize)]
struct GapSummary {
    max_n: u64,
    tol: f64,
    min_gap: f64,
    all_within_bound: bool,
    injective: bool,
}

/// Rows `(n, min_gap, 2π/(2n+1))` for `n = every, 2*every, ...` up to
/// `max_n`, then a summary. `injective` reports whether every pair of points
/// stays more than `tol` apart.
pub fn circle_demo(out: &mut Output, max_n: u64, tol: f64, every: u64) -> Result<(), CliError> {
    if max_n == 0 || every == 0 {
        return Err(CliError::Usage("--max-n and --every must be positive".into()));
    }
    let profile = min_gap_profile(max_n);
    let mut all_ok = true;
    for (i, &gap) in profile.iter().enumerate() {
        let n = i as u64 + 1;
        let ok = gap <= gap_bound(n);
        all_ok &= ok;
        if n.is_multiple_of(every) || n == max_n {
            out.emit(&GapRow { n, min_gap: gap, bound: gap_bound(n), ok });
        }
    }
    let last = *profile.last().expect("max_n is positive");
    out.emit(&GapSummary { max_n, tol, min_gap: last, all_within_bound: all_ok, injective: last > tol });
    Ok(())
}
