//! One function per command. Each returns the report files it wrote.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::Context;
use ghk_core::arith::{format_rat, rat_int, Rat};
use ghk_core::fitlab::{self, Family, FamilyModule, FitReport};
use ghk_core::frobmod::{self, GhkTable, Presentation};
use ghk_core::groebner::Budget;
use ghk_core::hnform::{self, HnData, HnQuotient};
use ghk_core::idealops::RingSpec;
use serde::Serialize;
use serde_json::{json, Value};

use crate::problem::{ClosedForm, Command, HnPair, ModuleSection, Problem};

#[derive(Debug)]
pub enum Failure {
    /// Bad input or a violated hypothesis (exit 2).
    Invalid(String),
    /// A resource budget ran out (exit 3).
    Budget(String),
    Io(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

fn core_err(at: &str) -> impl Fn(ghk_core::Error) -> Failure + '_ {
    move |e| match e {
        ghk_core::Error::BudgetExceeded(msg) => Failure::Budget(msg),
        other if at.is_empty() => Failure::Invalid(other.to_string()),
        other => Failure::Invalid(format!("{at}: {other}")),
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

pub struct Settings {
    pub command: Command,
    pub out: PathBuf,
    pub budget: Budget,
}

/// Files written and the text echoed on stdout; `status` carries a deferred failure.
pub struct Outcome {
    pub files: Vec<PathBuf>,
    pub summary: String,
    pub status: Result<(), Failure>,
}

struct Writer<'a> {
    dir: &'a Path,
    problem: &'a Problem,
    command: Command,
    files: Vec<PathBuf>,
}

impl Writer<'_> {
    fn text(&mut self, name: &str, body: &str) -> anyhow::Result<()> {
        fs::create_dir_all(self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let path = self.dir.join(name);
        fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
        self.files.push(path);
        Ok(())
    }

    /// JSON report with sorted keys and the resolved problem embedded.
    fn report(&mut self, name: &str, result: impl Serialize) -> anyhow::Result<()> {
        let value = json!({
            "command": self.command.name(),
            "problem": self.problem,
            "result": result,
        });
        // serde_json maps are ordered by key, so this is stable across runs
        let sorted: Value = serde_json::to_value(&value)?;
        let mut body = serde_json::to_string_pretty(&sorted)?;
        body.push('\n');
        self.text(name, &body)
    }

    fn finish_ok(self, summary: String) -> Outcome {
        self.finish(summary, Ok(()))
    }

    fn finish(self, summary: String, status: Result<(), Failure>) -> Outcome {
        Outcome {
            files: self.files,
            summary,
            status,
        }
    }
}

pub fn run(problem: &Problem, settings: &Settings) -> Result<Outcome, Failure> {
    let w = Writer {
        dir: &settings.out,
        problem,
        command: settings.command,
        files: Vec::new(),
    };
    match settings.command {
        Command::CheckRing => check_ring(problem, w),
        Command::Ghk => ghk(problem, settings, w),
        Command::Hk => hk(problem, w),
        Command::ClosedForm => closed_form_cmd(problem, w),
        Command::Gamma => gamma(problem, settings, w),
        Command::Sweep => sweep(problem, settings, w),
    }
}

fn ring_spec(problem: &Problem) -> Result<Arc<RingSpec>, Failure> {
    let ring = problem.ring.as_ref().ok_or_else(|| invalid("ring: section missing"))?;
    let p = ring.prime.ok_or_else(|| invalid("ring.prime: required for this command"))?;
    ring_mod(problem, p)
}

fn ring_mod(problem: &Problem, p: u64) -> Result<Arc<RingSpec>, Failure> {
    let ring = problem.ring.as_ref().ok_or_else(|| invalid("ring: section missing"))?;
    let base = RingSpec::polynomial_ring(p, &ring.variables).map_err(core_err("ring"))?;
    let mut rels = Vec::new();
    for (k, r) in ring.relations.iter().enumerate() {
        rels.push(base.parse(r).map_err(core_err(&format!("ring.relations[{k}]")))?);
    }
    Ok(Arc::new(RingSpec::from_polys(base.ring(), rels).map_err(core_err("ring.relations"))?))
}

fn presentation(problem: &Problem, ring: &Arc<RingSpec>) -> Result<Presentation, Failure> {
    match problem.module.as_ref().ok_or_else(|| invalid("module: section missing"))? {
        ModuleSection::Quotient(gens) => {
            let mut polys = Vec::new();
            for (k, g) in gens.iter().enumerate() {
                polys.push(ring.parse(g).map_err(core_err(&format!("module.quotient[{k}]")))?);
            }
            let ideal = ring.ideal(polys).map_err(core_err("module.quotient"))?;
            frobmod::presentation_of_quotient(ring, &ideal).map_err(core_err("module.quotient"))
        }
        ModuleSection::Presentation(p) => {
            for (j, row) in p.rows.iter().enumerate() {
                for (i, s) in row.iter().enumerate() {
                    ring.parse(s).map_err(core_err(&format!("module.presentation.rows[{j}][{i}]")))?;
                }
            }
            Presentation::from_rows(ring, p.row_twists.clone(), p.col_twists.clone(), &p.rows)
                .map_err(core_err("module.presentation"))
        }
    }
}

fn e_max(problem: &Problem) -> Result<u32, Failure> {
    match problem.task.e_max {
        Some(0) => Err(invalid("task.e_max: must be at least 1")),
        Some(e) => Ok(e),
        None => Ok(2),
    }
}

fn check_ring(problem: &Problem, mut w: Writer) -> Result<Outcome, Failure> {
    let ring = ring_spec(problem)?;
    let info = ring.info().map_err(core_err("ring"))?;
    let smooth = ring.smoothness().map_err(core_err("ring"))?;
    let result = json!({
        "ring": ring.to_string(),
        "dimension": info.dimension,
        "deg_y": info.degree.to_string(),
        "smooth": smooth.smooth,
        "singular_locus_dimension": smooth.singular_locus_dimension,
        "hypersurface": smooth.hypersurface,
        "warning": smooth.warning,
        "valid": info.dimension == 2 && smooth.smooth,
    });
    w.report("check-ring.json", &result)?;
    let mut summary = format!(
        "{ring}: dimension {}, degY {}, {}",
        info.dimension,
        info.degree,
        if smooth.smooth { "smooth" } else { "not smooth" }
    );
    if let Some(msg) = &smooth.warning {
        summary.push_str(&format!("\nwarning: {msg}"));
    }
    Ok(w.finish_ok(summary))
}

fn budget_status(table: &GhkTable) -> Result<(), Failure> {
    match table.absent.first() {
        None => Ok(()),
        Some(row) => Err(Failure::Budget(format!("row e={} skipped: {}", row.e, row.reason))),
    }
}

fn plot_csv(table: &GhkTable, e: &Rat) -> String {
    let mut out = String::from("e,q,length,e_q2,gamma\n");
    for r in &table.rows {
        let q2 = rat_int(r.q as i64) * rat_int(r.q as i64);
        let eq2 = e * &q2;
        let gamma = rat_int(r.length as i64) - &eq2;
        out.push_str(&format!("{},{},{},{},{}\n", r.e, r.q, r.length, format_rat(&eq2), format_rat(&gamma)));
    }
    out
}

/// Exact multiplicity for remainder analysis and where it came from.
fn exact_e(problem: &Problem) -> Result<Option<(Rat, &'static str)>, Failure> {
    if let Some(e) = &problem.task.e_exact {
        return Ok(Some((e.0.clone(), "task.e_exact")));
    }
    if let Some(cf) = &problem.closed_form {
        let (_, value) = closed_form(cf, problem)?;
        return Ok(Some((value.value, "closed_form")));
    }
    Ok(None)
}

#[derive(Serialize)]
struct GhkResult<'a> {
    table: &'a GhkTable,
    estimate: Option<fitlab::Estimate>,
    e_source: Option<&'static str>,
    fit: Option<FitReport>,
}

fn ghk(problem: &Problem, settings: &Settings, mut w: Writer) -> Result<Outcome, Failure> {
    let ring = ring_spec(problem)?;
    let pres = presentation(problem, &ring)?;
    let table = frobmod::ghk_table_with(&pres, 1..=e_max(problem)?, &settings.budget).map_err(core_err(""))?;
    let estimate = fitlab::estimate_multiplicity(&table).ok();
    let exact = exact_e(problem)?;
    let (e, source) = match (&exact, &estimate) {
        (Some((e, s)), _) => (Some(e.clone()), Some(*s)),
        (None, Some(est)) => (Some(est.estimate.clone()), Some("estimate")),
        (None, None) => (None, None),
    };
    let fit = e.as_ref().map(|e| fitlab::gamma_analysis(&table, e));
    w.text("ghk.csv", &table.to_csv())?;
    if let Some(e) = &e {
        w.text("plot.csv", &plot_csv(&table, e))?;
    }
    let summary = match &estimate {
        Some(est) => format!("{}estimate {} (error bound {})", table.to_csv(), format_rat(&est.estimate), format_rat(&est.error_bound)),
        None => table.to_csv().trim_end().to_string(),
    };
    w.report(
        "ghk.json",
        GhkResult {
            table: &table,
            estimate,
            e_source: source,
            fit,
        },
    )?;
    let status = budget_status(&table);
    Ok(w.finish(summary, status))
}

fn hk(problem: &Problem, mut w: Writer) -> Result<Outcome, Failure> {
    let ring = ring_spec(problem)?;
    let gens = match problem.module.as_ref() {
        Some(ModuleSection::Quotient(gens)) => gens,
        _ => return Err(invalid("module.quotient: the hk command needs a quotient by an ideal")),
    };
    let ideal = ring.ideal_from_strs(gens).map_err(core_err("module.quotient"))?;
    let mut values = Vec::new();
    for e in 1..=e_max(problem)? {
        values.push((e, frobmod::hk_value(&ideal, e).map_err(core_err("module.quotient"))?));
    }
    let mut table = GhkTable::from_lengths(ring.characteristic(), &values);
    table.ring = ring.to_string();
    table.module = format!("R/({})", gens.join(", "));
    w.text("hk.csv", &table.to_csv())?;
    w.report("hk.json", json!({ "table": &table }))?;
    Ok(w.finish_ok(table.to_csv().trim_end().to_string()))
}

fn hn(pairs: &[HnPair], deg_y: u64, at: &str) -> Result<HnData, Failure> {
    let qs = pairs
        .iter()
        .map(|HnPair(rank, slope)| HnQuotient {
            rank: *rank,
            slope: slope.0.clone(),
        })
        .collect();
    HnData::new(qs, deg_y).map_err(core_err(at))
}

fn closed_form(cf: &ClosedForm, problem: &Problem) -> Result<(&'static str, hnform::FormulaValue), Failure> {
    let deg_y = match cf.deg_y() {
        Some(d) => d,
        None => {
            let ring = ring_spec(problem).map_err(|_| invalid("closed_form.deg_y: required when no ring is given"))?;
            let info = ring.info().map_err(core_err("ring"))?;
            u64::try_from(info.degree).map_err(|_| invalid("ring: degree is not positive"))?
        }
    };
    let at = "closed_form";
    let exact = |r: Result<Rat, ghk_core::Error>| -> Result<hnform::FormulaValue, Failure> {
        let value = r.map_err(core_err(at))?;
        let valid = value >= rat_int(0);
        Ok(hnform::FormulaValue { value, valid })
    };
    Ok(match cf {
        ClosedForm::General { syzygy, twists, quotient, .. } => (
            "general",
            hnform::e_ghk_closed_form(
                &hn(syzygy, deg_y, "closed_form.general.syzygy")?,
                twists,
                &hn(quotient, deg_y, "closed_form.general.quotient")?,
                deg_y,
            )
            .map_err(core_err(at))?,
        ),
        ClosedForm::Quotient { syzygy, degrees, d, .. } => (
            "quotient",
            hnform::e_ghk_quotient(&hn(syzygy, deg_y, "closed_form.quotient.syzygy")?, degrees, *d, deg_y)
                .map_err(core_err(at))?,
        ),
        ClosedForm::Hk { syzygy, degrees, .. } => (
            "hk",
            hnform::e_hk_closed_form(&hn(syzygy, deg_y, "closed_form.hk.syzygy")?, degrees, deg_y)
                .map_err(core_err(at))?,
        ),
        ClosedForm::TwoGenerated { a, b, d, .. } => (
            "two_generated",
            exact(hnform::e_ghk_two_generated(*a, *b, *d, deg_y))?,
        ),
        ClosedForm::Point { .. } => ("point", exact(hnform::e_ghk_point(deg_y))?),
    })
}

fn closed_form_cmd(problem: &Problem, mut w: Writer) -> Result<Outcome, Failure> {
    let cf = problem
        .closed_form
        .as_ref()
        .ok_or_else(|| invalid("closed_form: section missing"))?;
    let (formula, value) = closed_form(cf, problem)?;
    w.report("closed-form.json", json!({ "formula": formula, "result": &value }))?;
    let summary = format_rat(&value.value);
    let status = if value.valid {
        Ok(())
    } else {
        Err(invalid(format!(
            "closed_form.{formula}: input HN data inconsistent with hypotheses (value {summary})"
        )))
    };
    Ok(w.finish(summary, status))
}

fn gamma(problem: &Problem, settings: &Settings, mut w: Writer) -> Result<Outcome, Failure> {
    let (e, _) = exact_e(problem)?.ok_or_else(|| invalid("task.e_exact: required for the gamma command"))?;
    let table = match &problem.task.table {
        Some(rows) => {
            let p = problem
                .ring
                .as_ref()
                .and_then(|r| r.prime)
                .ok_or_else(|| invalid("ring.prime: required to interpret task.table"))?;
            let mut es: Vec<u32> = rows.iter().map(|r| r.0).collect();
            es.sort_unstable();
            if es.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid("task.table: repeated exponent"));
            }
            GhkTable::from_lengths(p, rows)
        }
        None => {
            let ring = ring_spec(problem)?;
            let pres = presentation(problem, &ring)?;
            frobmod::ghk_table_with(&pres, 1..=e_max(problem)?, &settings.budget).map_err(core_err(""))?
        }
    };
    let fit = fitlab::gamma_analysis(&table, &e);
    w.text("gamma.csv", &plot_csv(&table, &e))?;
    w.report("gamma.json", json!({ "table": &table, "fit": &fit }))?;
    let summary = format!(
        "{}max |gamma| {}",
        plot_csv(&table, &e),
        format_rat(&fit.max_abs_gamma)
    );
    let status = budget_status(&table);
    Ok(w.finish(summary, status))
}

fn sweep(problem: &Problem, settings: &Settings, mut w: Writer) -> Result<Outcome, Failure> {
    let ring = problem.ring.as_ref().ok_or_else(|| invalid("ring: section missing"))?;
    let primes = problem
        .task
        .primes
        .clone()
        .or_else(|| ring.primes.clone())
        .ok_or_else(|| invalid("ring.primes: required for the sweep command"))?;
    let module = match problem.module.as_ref().ok_or_else(|| invalid("module: section missing"))? {
        ModuleSection::Quotient(g) => FamilyModule::Quotient(g.clone()),
        ModuleSection::Presentation(p) => FamilyModule::Presentation {
            row_twists: p.row_twists.clone(),
            col_twists: p.col_twists.clone(),
            rows: p.rows.clone(),
        },
    };
    let family = Family {
        variables: ring.variables.clone(),
        relations: ring.relations.clone(),
        module,
        bad_primes: problem.task.bad_primes.clone(),
    };
    let rep = fitlab::prime_sweep(&family, &primes, e_max(problem)?, &settings.budget).map_err(core_err(""))?;
    let mut csv = String::from("p,validated,estimate,error_bound\n");
    for r in &rep.rows {
        let show = |x: &Option<Rat>| x.as_ref().map(format_rat).unwrap_or_default();
        csv.push_str(&format!("{},{},{},{}\n", r.p, r.validated, show(&r.estimate), show(&r.error_bound)));
    }
    w.text("sweep.csv", &csv)?;
    w.report("sweep.json", &rep)?;
    let spread = rep.top_half_spread.as_ref().map(format_rat).unwrap_or_else(|| "n/a".into());
    let summary = format!("{csv}top-half spread {spread}");
    let status = rep
        .rows
        .iter()
        .filter_map(|r| r.table.as_ref())
        .map(budget_status)
        .find(|s| s.is_err())
        .unwrap_or(Ok(()));
    Ok(w.finish(summary, status))
}
