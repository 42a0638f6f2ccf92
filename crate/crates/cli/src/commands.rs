use std::path::PathBuf;

use eulerlab::arith::{bv_sum_from, chebyshev_ap_from, liouville_sum, mertens, sieve};
use eulerlab::asymptotics::{
    drh_sweep, partial_product_from, sqrt2_log_residual, sweep, CaseOneSigns, ChainBound, EvalPoint, RhsFlavor,
    RhsModel, RhsOptions, SweepRow,
};
use eulerlab::characters::{characters_mod, gauss_and_epsilon};
use eulerlab::verify::{run_criterion, Status, VerifyContext, CRITERIA};
use eulerlab::zeros::{zero_reciprocal_sum, ZeroBank};

use crate::args::{Cli, Command, Format};
use crate::config::{self, XSpec};
use crate::table::{Cell, Sink, Table};
use crate::CliError;

const SWEEP_HEADER: &[&str] = &["x", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "resid_abs", "e_ratio", "li_diag"];

pub fn run(cli: Cli) -> Result<(), CliError> {
    let sink = Sink {
        format: cli.common.format,
        out: cli.common.out.as_deref(),
    };
    let zeros_dir = config::zeros_dir(cli.common.zeros.as_deref());
    let bank = || zeros_dir.as_deref().map(config::load_bank).transpose();
    match cli.command {
        Command::Characters { q } => characters(&sink, q),
        Command::Sieve { q, x } => prime_summary(&sink, q, &XSpec::parse(&x)?),
        Command::Product { chi, s, x } => product(&sink, &chi, config::point(&s)?, &XSpec::parse(&x)?),
        Command::Aim {
            chi,
            s,
            x,
            wide_chain,
            alternate_signs,
        } => {
            let chi = config::character(&chi)?;
            let opts = options(wide_chain, alternate_signs);
            rhs(&sink, RhsFlavor::Aim, &chi, config::point(&s)?, &XSpec::parse(&x)?, bank()?.as_ref(), opts)
        }
        Command::Ramanujan {
            s,
            x,
            wide_chain,
            alternate_signs,
        } => {
            let trivial = config::character("1.0")?;
            let opts = options(wide_chain, alternate_signs);
            rhs(&sink, RhsFlavor::Ramanujan, &trivial, config::point(&s)?, &XSpec::parse(&x)?, bank()?.as_ref(), opts)
        }
        Command::Drh { chi, t, x } => drh(&sink, &chi, t, &XSpec::parse(&x)?, bank()?.as_ref()),
        Command::Bv { q, x } => bv(&sink, q, &XSpec::parse(&x)?),
        Command::Appendix { x, t } => appendix(&sink, &XSpec::parse(&x)?, bank()?.as_ref(), t),
        Command::Verify { only } => verify(&sink, zeros_dir.unwrap_or_else(|| PathBuf::from("data/zeros")), &only),
    }
}

fn options(wide_chain: bool, alternate_signs: bool) -> RhsOptions {
    RhsOptions {
        chain_bound: if wide_chain { ChainBound::TwoPlus } else { ChainBound::OnePlus },
        case_one_signs: if alternate_signs { CaseOneSigns::Alternate } else { CaseOneSigns::Continuous },
        force_case: None,
    }
}

fn top(xs: &[f64]) -> u64 {
    xs.iter().fold(0.0f64, |a, &b| a.max(b)).floor() as u64
}

fn characters(sink: &Sink, q: u64) -> Result<(), CliError> {
    let mut t = Table::new(&[
        "label", "conductor", "order", "parity", "primitive", "gauss_re", "gauss_im", "epsilon_re", "epsilon_im",
    ]);
    for chi in characters_mod(q)? {
        let (g, e) = if chi.is_primitive() {
            let r = gauss_and_epsilon(&chi);
            (
                [Cell::from(r.gauss.re), Cell::from(r.gauss.im)],
                [Cell::from(r.epsilon.re), Cell::from(r.epsilon.im)],
            )
        } else {
            ([Cell::Empty, Cell::Empty], [Cell::Empty, Cell::Empty])
        };
        let [g0, g1] = g;
        let [e0, e1] = e;
        t.push(vec![
            chi.label().to_string().into(),
            chi.conductor().into(),
            chi.order().into(),
            (chi.parity() as u64).into(),
            chi.is_primitive().into(),
            g0,
            g1,
            e0,
            e1,
        ]);
    }
    sink.table(&t)
}

fn prime_summary(sink: &Sink, q: u64, xs: &XSpec) -> Result<(), CliError> {
    let pts = xs.points();
    let primes = sieve(top(&pts))?;
    let summaries = pts.iter().map(|&x| chebyshev_ap_from(&primes, x, q)).collect::<Result<Vec<_>, _>>()?;
    let mut t = Table::new(&["x", "a", "pi", "theta", "psi", "remainder"]);
    for s in &summaries {
        for c in &s.classes {
            t.push(vec![s.x.into(), c.a.into(), c.pi.into(), c.theta.into(), c.psi.into(), c.remainder.into()]);
        }
    }
    sink.table_or(&t, &summaries)
}

fn product(sink: &Sink, chi: &str, point: EvalPoint, xs: &XSpec) -> Result<(), CliError> {
    let chi = config::character(chi)?;
    let pts = xs.points();
    let primes = sieve(top(&pts))?;
    let mut t = Table::new(&["x", "primes", "value_re", "value_im", "log_re", "log_im"]);
    for &x in &pts {
        let p = partial_product_from(&primes, point.s(), &chi, x)?;
        t.push(vec![x.into(), p.primes.into(), p.value.re.into(), p.value.im.into(), p.log.re.into(), p.log.im.into()]);
    }
    sink.table(&t)
}

fn sweep_table(rows: &[SweepRow]) -> Table {
    let mut t = Table::new(SWEEP_HEADER);
    for r in rows {
        t.push(vec![
            r.x.into(),
            r.lhs_log.re.into(),
            r.lhs_log.im.into(),
            r.rhs_log.re.into(),
            r.rhs_log.im.into(),
            r.residual.norm().into(),
            r.e_ratio.into(),
            r.li_sum_diag.into(),
        ]);
    }
    t
}

fn rhs(
    sink: &Sink,
    flavor: RhsFlavor,
    chi: &eulerlab::characters::DirichletCharacter,
    point: EvalPoint,
    xs: &XSpec,
    bank: Option<&ZeroBank>,
    opts: RhsOptions,
) -> Result<(), CliError> {
    let pts = xs.points();
    match (xs, flavor) {
        (XSpec::Point(x), _) => {
            let primes = sieve(top(&pts))?;
            let b = RhsModel::new(flavor, point, chi, opts)?.breakdown(&primes, *x, bank)?;
            let lhs = partial_product_from(&primes, point.s(), chi, *x)?.log;
            let mut t = Table::new(&["term", "re", "im"]);
            t.push(vec!["lhs_log".to_string().into(), lhs.re.into(), lhs.im.into()]);
            t.push(vec!["li_theta".to_string().into(), b.li_theta_term.re.into(), b.li_theta_term.im.into()]);
            for c in &b.li_chain {
                t.push(vec![format!("li_chain_k{}", c.k).into(), c.value.re.into(), c.value.im.into()]);
            }
            for p in &b.power_terms {
                t.push(vec![p.name.clone().into(), p.value.re.into(), p.value.im.into()]);
            }
            t.push(vec!["sqrt2".to_string().into(), b.sqrt2_term.re.into(), b.sqrt2_term.im.into()]);
            if let Some(v) = b.zero_term.value() {
                t.push(vec!["zero_sum".to_string().into(), v.re.into(), v.im.into()]);
            }
            if let Some(v) = b.log_l.value() {
                t.push(vec!["log_l".to_string().into(), v.re.into(), v.im.into()]);
            }
            t.push(vec!["total_rhs_log".to_string().into(), b.total_rhs_log.re.into(), b.total_rhs_log.im.into()]);
            sink.table_or(&t, &b)
        }
        (XSpec::Grid(grid), RhsFlavor::Aim) => {
            let report = sweep(point, chi, grid, bank, opts)?;
            sink.table_or(&sweep_table(&report.rows), &report)
        }
        (XSpec::Grid(grid), RhsFlavor::Ramanujan) => {
            let primes = sieve(top(grid))?;
            let model = RhsModel::new(flavor, point, chi, opts)?;
            let rows = grid
                .iter()
                .map(|&x| {
                    let lhs = partial_product_from(&primes, point.s(), chi, x)?.log;
                    let b = model.breakdown(&primes, x, bank)?;
                    let summary = chebyshev_ap_from(&primes, x, 1)?;
                    Ok(SweepRow {
                        x,
                        lhs_log: lhs,
                        rhs_log: b.total_rhs_log,
                        residual: lhs - b.total_rhs_log,
                        e_ratio: summary.max_abs_remainder() / (x.sqrt() * x.ln()),
                        li_sum_diag: b.li_theta_term.norm(),
                    })
                })
                .collect::<Result<Vec<_>, eulerlab::Error>>()?;
            let report = eulerlab::asymptotics::SweepReport {
                point,
                character: chi.label().to_string(),
                case_tag: model.case(),
                zeros_included: bank.is_some(),
                rows,
            };
            sink.table_or(&sweep_table(&report.rows), &report)
        }
    }
}

fn drh(sink: &Sink, chi: &str, t: f64, xs: &XSpec, bank: Option<&ZeroBank>) -> Result<(), CliError> {
    let chi = config::character(chi)?;
    let rows = drh_sweep(&chi, t, &xs.points(), bank)?;
    let mut table = Table::new(&[
        "x",
        "order",
        "lhs_re",
        "lhs_im",
        "limit_re",
        "limit_im",
        "ratio_re",
        "ratio_im",
        "ratio_abs",
        "ratio_without_sqrt2_abs",
        "corrected_re",
        "corrected_im",
        "sqrt2_applied",
    ]);
    for r in &rows {
        table.push(vec![
            r.x.into(),
            r.order.into(),
            r.lhs.re.into(),
            r.lhs.im.into(),
            r.limit.re.into(),
            r.limit.im.into(),
            r.ratio.re.into(),
            r.ratio.im.into(),
            r.ratio.norm().into(),
            r.ratio_without_sqrt2.norm().into(),
            r.corrected_ratio.re.into(),
            r.corrected_ratio.im.into(),
            r.sqrt2_applied.into(),
        ]);
    }
    sink.table_or(&table, &rows)
}

fn bv(sink: &Sink, big_q: u64, xs: &XSpec) -> Result<(), CliError> {
    let pts = xs.points();
    let primes = sieve(top(&pts))?;
    let mut t = Table::new(&["x", "big_q", "bv_sum"]);
    for &x in &pts {
        t.push(vec![x.into(), big_q.into(), bv_sum_from(&primes, x, big_q)?.into()]);
    }
    sink.table(&t)
}

fn appendix(sink: &Sink, xs: &XSpec, bank: Option<&ZeroBank>, height: Option<f64>) -> Result<(), CliError> {
    let zeta = match bank {
        Some(b) => Some(b.get("zeta").ok_or_else(|| CliError::MissingFixture("no zeta.zeros in the zero directory".into()))?),
        None if height.is_some() => return Err(CliError::MissingFixture("--t needs a zero directory".into())),
        None => None,
    };
    let mut t = Table::new(&["x", "mertens", "liouville", "sqrt2_log_residual", "zero_height", "zero_reciprocal_sum"]);
    for x in xs.points() {
        let (h, z) = match zeta {
            Some(list) => {
                let h = height.unwrap_or(list.complete_to());
                (Cell::from(h), Cell::from(zero_reciprocal_sum(list, h)?))
            }
            None => (Cell::Empty, Cell::Empty),
        };
        t.push(vec![x.into(), mertens(x)?.into(), liouville_sum(x)?.into(), sqrt2_log_residual(x)?.into(), h, z]);
    }
    sink.table(&t)
}

fn verify(sink: &Sink, zeros_dir: PathBuf, only: &[u8]) -> Result<(), CliError> {
    let ids: Vec<u8> = if only.is_empty() { (1..=CRITERIA).collect() } else { only.to_vec() };
    if let Some(bad) = ids.iter().find(|&&id| id == 0 || id > CRITERIA) {
        return Err(CliError::Config(format!("no criterion {bad}")));
    }
    let ctx = VerifyContext { zeros_dir };
    let mut results = Vec::new();
    for &id in &ids {
        let r = run_criterion(id, &ctx);
        if sink.format == Format::Csv && sink.out.is_none() {
            println!("{}", r.line());
        }
        results.push(r);
    }
    match sink.format {
        Format::Json => {
            let mut b = serde_json::to_vec_pretty(&results).map_err(|e| CliError::Config(format!("json: {e}")))?;
            b.push(b'\n');
            sink.write(&b)?;
        }
        Format::Csv if sink.out.is_some() => {
            let text: String = results.iter().map(|r| r.line() + "\n").collect();
            sink.write(text.as_bytes())?;
        }
        Format::Csv => {}
    }
    let failed: Vec<u8> = results.iter().filter(|r| r.status == Status::Fail).map(|r| r.id).collect();
    let missing: Vec<u8> = results.iter().filter(|r| r.status == Status::MissingFixture).map(|r| r.id).collect();
    if !failed.is_empty() {
        return Err(CliError::Acceptance(format!("criteria {failed:?} failed")));
    }
    if !missing.is_empty() {
        return Err(CliError::MissingFixture(format!("criteria {missing:?} lack zero fixtures in {}", ctx.zeros_dir.display())));
    }
    Ok(())
}
