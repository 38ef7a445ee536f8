//! Rectangular grids of exact values and their text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, ExactRational};
use crate::sequences::SeqFamily;

/// A family as named on the command line, before its parameter is bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Euler,
    CompEuler,
    Bernoulli,
    PolyBernoulli,
    PolyEuler,
    PolyEuler2,
    HyperEuler,
    HyperEuler2,
}

/// The extra parameter a family needs besides `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    None,
    K,
    Level,
}

impl FamilyName {
    pub const ALL: [FamilyName; 8] = [
        FamilyName::Euler,
        FamilyName::CompEuler,
        FamilyName::Bernoulli,
        FamilyName::PolyBernoulli,
        FamilyName::PolyEuler,
        FamilyName::PolyEuler2,
        FamilyName::HyperEuler,
        FamilyName::HyperEuler2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Euler => "euler",
            FamilyName::CompEuler => "comp-euler",
            FamilyName::Bernoulli => "bernoulli",
            FamilyName::PolyBernoulli => "poly-bernoulli",
            FamilyName::PolyEuler => "poly-euler",
            FamilyName::PolyEuler2 => "poly-euler2",
            FamilyName::HyperEuler => "hyper-euler",
            FamilyName::HyperEuler2 => "hyper-euler2",
        }
    }

    pub fn param(self) -> ParamKind {
        match self {
            FamilyName::PolyBernoulli | FamilyName::PolyEuler | FamilyName::PolyEuler2 => ParamKind::K,
            FamilyName::HyperEuler | FamilyName::HyperEuler2 => ParamKind::Level,
            _ => ParamKind::None,
        }
    }

    /// Binds the parameter. `param` is ignored for families without one.
    pub fn bind(self, param: i64) -> Result<SeqFamily> {
        let level = || {
            u32::try_from(param).map_err(|_| Error::InvalidArgument(format!("N must be nonnegative, got {param}")))
        };
        let family = match self {
            FamilyName::Euler => SeqFamily::Euler,
            FamilyName::CompEuler => SeqFamily::CompEuler,
            FamilyName::Bernoulli => SeqFamily::BernoulliMinus,
            FamilyName::PolyBernoulli => SeqFamily::PolyBernoulli { k: param },
            FamilyName::PolyEuler => SeqFamily::PolyEuler { k: param },
            FamilyName::PolyEuler2 => SeqFamily::PolyEuler2 { k: param },
            FamilyName::HyperEuler => SeqFamily::HyperEuler { level: level()? },
            FamilyName::HyperEuler2 => SeqFamily::HyperEuler2 { level: level()? },
        };
        family.check_params()?;
        Ok(family)
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub caption: String,
    /// Header of the label column, e.g. `n` or `n \ k`.
    pub corner: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub cells: Vec<Vec<ExactRational>>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    caption: &'a str,
    row_labels: &'a [String],
    col_labels: &'a [String],
    cells: Vec<Vec<String>>,
}

impl Table {
    pub fn new(
        caption: impl Into<String>,
        corner: impl Into<String>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        cells: Vec<Vec<ExactRational>>,
    ) -> Result<Self> {
        if cells.len() != row_labels.len() || cells.iter().any(|r| r.len() != col_labels.len()) {
            return Err(Error::InvalidArgument("table grid is not rectangular".into()));
        }
        Ok(Table {
            caption: caption.into(),
            corner: corner.into(),
            row_labels,
            col_labels,
            cells,
        })
    }

    /// Rows are `n`, columns the family parameter (one `value` column if none).
    pub fn for_family(name: FamilyName, params: &[i64], ns: &[usize]) -> Result<Self> {
        let (corner, col_labels, families): (String, Vec<String>, Vec<SeqFamily>) = match name.param() {
            ParamKind::None => ("n".into(), vec!["value".into()], vec![name.bind(0)?]),
            kind => {
                if params.is_empty() {
                    return Err(Error::InvalidArgument(format!("family `{}` needs a parameter", name.as_str())));
                }
                let symbol = if kind == ParamKind::K { "k" } else { "N" };
                let families = params.iter().map(|&p| name.bind(p)).collect::<Result<_>>()?;
                (format!("n \\ {symbol}"), params.iter().map(i64::to_string).collect(), families)
            }
        };
        let cells = ns
            .iter()
            .map(|&n| families.iter().map(|f| f.value(n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let caption = match name.param() {
            ParamKind::None => name.as_str().to_string(),
            ParamKind::K => format!("{} by n and k", name.as_str()),
            ParamKind::Level => format!("{} by n and N", name.as_str()),
        };
        Table::new(caption, corner, ns.iter().map(usize::to_string).collect(), col_labels, cells)
    }

    fn rendered(&self) -> Vec<Vec<String>> {
        self.cells.iter().map(|r| r.iter().map(rational::render).collect()).collect()
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "| {} | {} |", self.corner, self.col_labels.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(self.col_labels.len() + 1));
        for (label, row) in self.row_labels.iter().zip(self.rendered()) {
            let _ = writeln!(out, "| {} | {} |", label, row.join(" | "));
        }
        out
    }

    /// Cells never contain commas, so nothing is quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let corner = self.corner.split_whitespace().next().unwrap_or("n");
        let _ = writeln!(out, "{},{}", corner, self.col_labels.join(","));
        for (label, row) in self.row_labels.iter().zip(self.rendered()) {
            let _ = writeln!(out, "{},{}", label, row.join(","));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableJson {
            caption: &self.caption,
            row_labels: &self.row_labels,
            col_labels: &self.col_labels,
            cells: self.rendered(),
        })
        .expect("table serializes")
    }
}
