//! Certificate records: the JSON form of [`Certificate`] and its verifier.
//!
//! One record is a single JSON object with a fixed key order:
//!
//! ```text
//! {"rule":110,"class_rep":62,"status":"non_regular","witness":{"period":1,"cells":"1"},"bounds":{"radius":1,"period":3},"schema":1}
//! {"rule":2,"class_rep":2,"status":"regular","sigma":"eca:16","generalized":true,"bounds":{"radius":1,"period":3},"schema":1}
//! ```
//!
//! `rule` is an elementary rule number or any rule literal (`eca:<n>` or
//! `table:...`). `sigma` is a rule literal. Files hold one record per line;
//! a JSON array of records is accepted too.

use serde::{Deserialize, Serialize};

use crate::config::PeriodicConfig;
use crate::elementary::{
    check_generalized_inverse, check_weak_inverse, equivalence_class, is_nonregularity_witness, nonregularity_witness,
    search_weak_inverse, Bounds, Certificate,
};
use crate::error::{Error, Result};
use crate::rule::RuleTable;

pub const SCHEMA_VERSION: u32 = 1;

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RuleRef {
    Elementary(u8),
    Literal(String),
}

impl RuleRef {
    pub fn of(rule: &RuleTable) -> Self {
        let lit = rule.to_string();
        match lit.strip_prefix("eca:").and_then(|n| n.parse().ok()) {
            Some(n) => RuleRef::Elementary(n),
            None => RuleRef::Literal(lit),
        }
    }

    pub fn table(&self) -> Result<RuleTable> {
        match self {
            RuleRef::Elementary(n) => RuleTable::from_wolfram(*n as u32),
            RuleRef::Literal(s) => s.parse(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusTag {
    Regular,
    NonRegular,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    pub period: usize,
    pub cells: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsRecord {
    pub radius: usize,
    pub period: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateRecord {
    pub rule: RuleRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_rep: Option<u8>,
    pub status: StatusTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generalized: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsRecord>,
    #[serde(default = "schema_version")]
    pub schema: u32,
}

impl CertificateRecord {
    pub fn new(rule: &RuleTable, class_rep: Option<u8>, cert: &Certificate, bounds: Option<Bounds>) -> Self {
        let mut rec = Self {
            rule: RuleRef::of(rule),
            class_rep,
            status: StatusTag::Undecided,
            sigma: None,
            generalized: None,
            witness: None,
            bounds: bounds.map(|b| BoundsRecord { radius: b.max_radius, period: b.max_period }),
            schema: SCHEMA_VERSION,
        };
        match cert {
            Certificate::Regular { sigma, generalized } => {
                rec.status = StatusTag::Regular;
                rec.sigma = Some(sigma.to_string());
                rec.generalized = Some(*generalized);
            }
            Certificate::NonRegular { witness } => {
                rec.status = StatusTag::NonRegular;
                rec.witness = Some(WitnessRecord { period: witness.period(), cells: witness.to_string() });
            }
            Certificate::Undecided { searched_radius, searched_period } => {
                if rec.bounds.is_none() {
                    rec.bounds = Some(BoundsRecord { radius: *searched_radius, period: *searched_period });
                }
            }
        }
        rec
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn rule_table(&self) -> Result<RuleTable> {
        self.rule.table()
    }

    /// Re-checks every claim in the record. Undecided records are re-run at
    /// their recorded bounds and must still come out undecided.
    pub fn verify(&self) -> Result<(), String> {
        if self.schema != SCHEMA_VERSION {
            return Err(format!("unsupported schema version {}", self.schema));
        }
        let tau = self.rule_table().map_err(|e| format!("rule: {e}"))?;
        if let Some(rep) = self.class_rep {
            let n = tau.wolfram_number().ok_or("class_rep given for a non-elementary rule")?;
            let actual = equivalence_class(n).representative;
            if actual != rep {
                return Err(format!("class_rep is {rep}, but rule {n} belongs to the class of {actual}"));
            }
        }
        let e = |err: Error| err.to_string();
        match self.status {
            StatusTag::Regular => {
                let sigma: RuleTable =
                    self.sigma.as_deref().ok_or("regular record without sigma")?.parse().map_err(e)?;
                if !check_weak_inverse(&tau, &sigma).map_err(e)? {
                    return Err(format!("{sigma} is not a weak inverse of {tau}"));
                }
                if let Some(claimed) = self.generalized {
                    let actual = check_generalized_inverse(&tau, &sigma).map_err(e)?;
                    if claimed != actual {
                        return Err(format!("generalized is {claimed}, but the identities give {actual}"));
                    }
                }
                Ok(())
            }
            StatusTag::NonRegular => {
                let w = self.witness.as_ref().ok_or("non_regular record without witness")?;
                let x = PeriodicConfig::parse(tau.alphabet_size(), &w.cells).map_err(e)?;
                if x.period() != w.period {
                    return Err(format!("witness period {} does not match {} cells", w.period, x.period()));
                }
                if x.least_period() != w.period {
                    return Err(format!("witness {x} is not stored with its least period"));
                }
                if !is_nonregularity_witness(&tau, &x).map_err(e)? {
                    return Err(format!("{x} does not witness non-regularity of {tau}"));
                }
                Ok(())
            }
            StatusTag::Undecided => {
                let b = self.bounds.ok_or("undecided record without bounds")?;
                if b.radius > 0 {
                    if let Certificate::Regular { sigma, .. } = search_weak_inverse(&tau, b.radius).map_err(e)? {
                        return Err(format!("undecided, but {sigma} is a weak inverse"));
                    }
                }
                if b.period > 0 {
                    if let Certificate::NonRegular { witness } = nonregularity_witness(&tau, b.period).map_err(e)? {
                        return Err(format!("undecided, but {witness} witnesses non-regularity"));
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parses a certificate file: JSON lines, or one JSON array.
pub fn parse_records(text: &str) -> Result<Vec<CertificateRecord>> {
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(text).map_err(|err| Error::Parse(err.to_string()));
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|err| Error::Parse(format!("line {}: {err}", i + 1))))
        .collect()
}

/// Outcome of verifying every record of a file.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub results: Vec<(CertificateRecord, Result<(), String>)>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        !self.results.is_empty() && self.results.iter().all(|(_, r)| r.is_ok())
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|(_, r)| r.is_err()).count()
    }
}

pub fn verify_text(text: &str) -> Result<VerifyReport> {
    let records = parse_records(text)?;
    let results = records
        .into_iter()
        .map(|rec| {
            let res = rec.verify();
            (rec, res)
        })
        .collect();
    Ok(VerifyReport { results })
}
