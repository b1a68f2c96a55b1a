//! Known-results data records: external constants the bound engine must not
//! present as computed.
//!
//! Line format (whitespace-separated, `#` comments):
//!
//! ```text
//! quantity  space  params  value  kind  source
//! ```
//!
//! * `quantity` - TC | TCS | EMB_DIM | LEVEL | B_SNM | IMM
//! * `space` - a concrete descriptor (`rp:7`, `sphere:2`, ...) or a family
//!   token: `sphere` (with `parity=odd|even`), `rp-family`, `lens-family`,
//!   `cp-family` (the one-parameter family n = 2^ρ + 1 used by table 2)
//! * `params` - `-` or comma-separated conditions: `parity=odd`, `rho=1`,
//!   `rho>=2`, `m=4`, `e>=3`
//! * `value` - an integer, or a linear expression in n: `4n-4`, `2n+1`, `4n`
//! * `kind` - exact | lower | upper
//! * `source` - citation tag, reported verbatim as provenance
//!
//! The compiled-in defaults cover the classical sphere values and the
//! externally tabulated immersion rows; users can extend or replace them
//! with `--data <file>` (or the `SYMTC_DATA` environment variable).

use crate::bounds::facts::{FactKind, Quantity};
use crate::error::Error;
use std::str::FromStr;

/// Compiled-in defaults.
pub const DEFAULT_KNOWN_RESULTS: &str = "\
# Classical sphere motion-planning values.
TC   sphere      parity=odd   2     exact classical-sphere-planning
TC   sphere      parity=even  3     exact classical-sphere-planning
# External rows of the torsion comparison table (family n = 2^rho + 1).
TC   rp-family   rho=1        4n-4  exact external-immersion-tables
TC   rp-family   rho>=2       4n-3  exact external-immersion-tables
IMM  rp-family   -            4n-4  exact external-immersion-tables
IMM  lens-family m=4          4n-3  exact external-immersion-tables
IMM  lens-family e>=3         4n-2  exact external-immersion-tables
IMM  cp-family   -            4n-3  exact external-immersion-tables
";

/// A linear expression a·n + b in the family parameter n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinExpr {
    pub a: i64,
    pub b: i64,
}

impl LinExpr {
    pub fn eval(&self, n: i64) -> i64 {
        self.a * n + self.b
    }
}

impl FromStr for LinExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid value expression `{s}`"));
        match s.find('n') {
            None => Ok(LinExpr {
                a: 0,
                b: s.parse().map_err(|_| bad())?,
            }),
            Some(pos) => {
                let coeff = &s[..pos];
                let a = if coeff.is_empty() {
                    1
                } else {
                    coeff.parse().map_err(|_| bad())?
                };
                let rest = &s[pos + 1..];
                let b = if rest.is_empty() {
                    0
                } else {
                    rest.parse().map_err(|_| bad())?
                };
                Ok(LinExpr { a, b })
            }
        }
    }
}

/// One parsed record.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownRecord {
    pub quantity: Quantity,
    pub space: String,
    pub params: Vec<String>,
    pub value: LinExpr,
    pub kind: FactKind,
    pub source: String,
}

impl KnownRecord {
    pub fn has_param(&self, p: &str) -> bool {
        self.params.iter().any(|q| q == p)
    }
}

/// A queryable set of known-result records.
#[derive(Debug, Clone, Default)]
pub struct KnownResults {
    pub records: Vec<KnownRecord>,
}

impl KnownResults {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut records = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(Error::Parse(format!(
                    "line {}: expected 6 fields, got {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            records.push(KnownRecord {
                quantity: Quantity::parse(fields[0])?,
                space: fields[1].to_string(),
                params: if fields[2] == "-" {
                    Vec::new()
                } else {
                    fields[2].split(',').map(str::to_string).collect()
                },
                value: fields[3].parse()?,
                kind: FactKind::parse(fields[4])?,
                source: fields[5].to_string(),
            });
        }
        Ok(KnownResults { records })
    }

    pub fn defaults() -> Self {
        Self::parse(DEFAULT_KNOWN_RESULTS).expect("compiled-in data parses")
    }

    pub fn load(path: &std::path::Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Classical TC of S^r, by parity.
    pub fn sphere_tc(&self, r: u64) -> Option<(i64, &str)> {
        let parity = if r.is_multiple_of(2) {
            "parity=even"
        } else {
            "parity=odd"
        };
        self.records
            .iter()
            .find(|rec| {
                rec.quantity == Quantity::Tc && rec.space == "sphere" && rec.has_param(parity)
            })
            .map(|rec| (rec.value.eval(0), rec.source.as_str()))
    }

    /// Family record for a quantity/space pair, evaluated at n. A record
    /// matches when every one of its conditions appears in `satisfied`.
    pub fn family_value(
        &self,
        quantity: Quantity,
        space: &str,
        satisfied: &[&str],
        n: i64,
    ) -> Option<(i64, &str)> {
        self.records
            .iter()
            .filter(|rec| rec.quantity == quantity && rec.space == space)
            .find(|rec| rec.params.iter().all(|p| satisfied.contains(&p.as_str())))
            .map(|rec| (rec.value.eval(n), rec.source.as_str()))
    }

    /// User-supplied exact embedding dimension for P^r, if any.
    pub fn emb_dim(&self, r: u64) -> Option<(i64, &str)> {
        let space = format!("rp:{r}");
        self.records
            .iter()
            .find(|rec| {
                rec.quantity == Quantity::EmbDim
                    && rec.space == space
                    && rec.kind == FactKind::Exact
            })
            .map(|rec| (rec.value.eval(0), rec.source.as_str()))
    }
}
