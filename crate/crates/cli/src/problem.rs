//! Problem file schema.

use clap::ValueEnum;
use ghk_core::arith::{serde_rat, Rat};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckRing,
    Ghk,
    Hk,
    ClosedForm,
    Gamma,
    Sweep,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckRing => "check-ring",
            Command::Ghk => "ghk",
            Command::Hk => "hk",
            Command::ClosedForm => "closed-form",
            Command::Gamma => "gamma",
            Command::Sweep => "sweep",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedForm>,
    #[serde(default)]
    pub task: Task,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
    pub variables: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSection {
    /// `R/I` for the ideal generated by these polynomials.
    Quotient(Vec<String>),
    Presentation(PresentationSection),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSection {
    /// Row-major matrix entries.
    pub rows: Vec<Vec<String>>,
    pub row_twists: Vec<i64>,
    pub col_twists: Vec<i64>,
}

/// A rational written as `"num/den"` or `"n"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatStr(#[serde(with = "serde_rat")] pub Rat);

/// `[rank, "slope"]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnPair(pub u32, pub RatStr);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ClosedForm {
    General {
        syzygy: Vec<HnPair>,
        twists: Vec<i64>,
        quotient: Vec<HnPair>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deg_y: Option<u64>,
    },
    Quotient {
        syzygy: Vec<HnPair>,
        degrees: Vec<i64>,
        d: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deg_y: Option<u64>,
    },
    Hk {
        syzygy: Vec<HnPair>,
        degrees: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deg_y: Option<u64>,
    },
    TwoGenerated {
        a: i64,
        b: i64,
        d: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deg_y: Option<u64>,
    },
    Point {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deg_y: Option<u64>,
    },
}

impl ClosedForm {
    pub fn deg_y(&self) -> Option<u64> {
        match self {
            ClosedForm::General { deg_y, .. }
            | ClosedForm::Quotient { deg_y, .. }
            | ClosedForm::Hk { deg_y, .. }
            | ClosedForm::TwoGenerated { deg_y, .. }
            | ClosedForm::Point { deg_y } => *deg_y,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budgets {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gb_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bad_primes: Vec<u64>,
    /// Exact multiplicity used for the remainder analysis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_exact: Option<RatStr>,
    /// Previously computed `[e, length]` rows, used by `gamma` instead of recomputing.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<(u32, u64)>>,
    #[serde(default)]
    pub budgets: Budgets,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

/// Parses a problem file, reporting the JSON path of the first schema violation.
pub fn parse(text: &str) -> Result<Problem, String> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            inner.to_string()
        } else {
            format!("{path}: {inner}")
        }
    })
}
