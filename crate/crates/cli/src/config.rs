use std::path::{Path, PathBuf};

use eulerlab::asymptotics::EvalPoint;
use eulerlab::characters::DirichletCharacter;
use eulerlab::zeros::ZeroBank;

use crate::args::PointArgs;
use crate::CliError;

pub const ZEROS_ENV: &str = "EULERLAB_ZEROS";

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn number(s: &str) -> Result<f64, CliError> {
    s.trim().parse::<f64>().map_err(|_| bad(format!("not a number: {s:?}")))
}

/// `--x`: a single value, or `A:B:k` for `k` geometrically spaced points per
/// decade from `A` up to `B` (both included when `B/A` is a whole number of steps).
#[derive(Debug, Clone, PartialEq)]
pub enum XSpec {
    Point(f64),
    Grid(Vec<f64>),
}

impl XSpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [x] => {
                let x = number(x)?;
                if !(x.is_finite() && x >= 2.0) {
                    return Err(bad(format!("x must be ≥ 2, got {x}")));
                }
                Ok(XSpec::Point(x))
            }
            [a, b, k] => {
                let (a, b) = (number(a)?, number(b)?);
                let k: u32 = k.trim().parse().map_err(|_| bad(format!("points per decade must be a positive integer, got {k:?}")))?;
                Ok(XSpec::Grid(grid(a, b, k)?))
            }
            _ => Err(bad(format!("--x must be X or A:B:k, got {s:?}"))),
        }
    }

    pub fn points(&self) -> Vec<f64> {
        match self {
            XSpec::Point(x) => vec![*x],
            XSpec::Grid(g) => g.clone(),
        }
    }
}

pub fn grid(a: f64, b: f64, k: u32) -> Result<Vec<f64>, CliError> {
    if !(a.is_finite() && b.is_finite() && a >= 2.0 && b >= a) {
        return Err(bad(format!("grid needs 2 ≤ A ≤ B, got A = {a}, B = {b}")));
    }
    if k == 0 {
        return Err(bad("points per decade must be ≥ 1"));
    }
    let steps = ((b / a).log10() * k as f64 + 1e-9).floor() as u32;
    Ok((0..=steps).map(|i| a * 10f64.powf(i as f64 / k as f64)).collect())
}

pub fn point(p: &PointArgs) -> Result<EvalPoint, CliError> {
    let (re, im) = match p.s.split_once(',') {
        Some((re, im)) => (number(re)?, number(im)?),
        None => (number(&p.s)?, 0.0),
    };
    if p.on_line && re != 0.5 {
        return Err(bad(format!("--on-line needs re = 0.5, got {re}")));
    }
    if !p.on_line && re == 0.5 {
        return Err(bad("re = 0.5 requires --on-line"));
    }
    Ok(EvalPoint::from_parts(re, im, p.on_line)?)
}

pub fn character(label: &str) -> Result<DirichletCharacter, CliError> {
    Ok(label.parse()?)
}

/// `EULERLAB_ZEROS` if set, else `--zeros`.
pub fn zeros_dir(flag: Option<&Path>) -> Option<PathBuf> {
    std::env::var_os(ZEROS_ENV).map(PathBuf::from).or_else(|| flag.map(Path::to_path_buf))
}

pub fn load_bank(dir: &Path) -> Result<ZeroBank, CliError> {
    if !dir.is_dir() {
        return Err(CliError::MissingFixture(format!("zero directory {} not found", dir.display())));
    }
    Ok(ZeroBank::load_dir(dir)?)
}
