//! Hypothesis checkers for uniqueness and strong-uniqueness criteria.
//!
//! Every checker returns a [`Certificate`]: a verdict, the first violated
//! hypothesis (if any) and the exact quantities used to decide it.

mod fujimoto;
mod supm;
mod urs;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::GR;
use crate::poly::Poly;

pub use fujimoto::{check_fujimoto_a, check_fujimoto_b, check_fujimoto_c, check_fujimoto_d};
pub use supm::{
    check_cor_2_1, check_thm_2_1, check_thm_2_2, check_thm_2_3_family, lambda_thm23,
    recognize_thm_2_3, PairMode,
};
pub use urs::{
    check_urs, check_urs_deficiency, check_urs_for_structure, check_urs_thresholds,
    check_urs_thm_2_4, check_urs_thm_2_5, TruncationLevel, UrsError, UrsParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    FujimotoA,
    FujimotoB,
    FujimotoC,
    FujimotoD,
    #[serde(rename = "Thm2_1")]
    Thm21,
    #[serde(rename = "Thm2_2")]
    Thm22,
    #[serde(rename = "Cor2_1")]
    Cor21,
    #[serde(rename = "Thm2_3_family")]
    Thm23Family,
    #[serde(rename = "URS_F")]
    UrsF,
    #[serde(rename = "URS_G")]
    UrsG,
    #[serde(rename = "URS_2_4")]
    Urs24,
    #[serde(rename = "URS_2_5")]
    Urs25,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::FujimotoA,
        TheoremId::FujimotoB,
        TheoremId::FujimotoC,
        TheoremId::FujimotoD,
        TheoremId::Thm21,
        TheoremId::Thm22,
        TheoremId::Cor21,
        TheoremId::Thm23Family,
        TheoremId::UrsF,
        TheoremId::UrsG,
        TheoremId::Urs24,
        TheoremId::Urs25,
    ];

    /// Stable identifier used in JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::FujimotoA => "FujimotoA",
            TheoremId::FujimotoB => "FujimotoB",
            TheoremId::FujimotoC => "FujimotoC",
            TheoremId::FujimotoD => "FujimotoD",
            TheoremId::Thm21 => "Thm2_1",
            TheoremId::Thm22 => "Thm2_2",
            TheoremId::Cor21 => "Cor2_1",
            TheoremId::Thm23Family => "Thm2_3_family",
            TheoremId::UrsF => "URS_F",
            TheoremId::UrsG => "URS_G",
            TheoremId::Urs24 => "URS_2_4",
            TheoremId::Urs25 => "URS_2_5",
        }
    }

    /// Short name accepted on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            TheoremId::FujimotoA => "a",
            TheoremId::FujimotoB => "b",
            TheoremId::FujimotoC => "c",
            TheoremId::FujimotoD => "d",
            TheoremId::Thm21 => "thm2_1",
            TheoremId::Thm22 => "thm2_2",
            TheoremId::Cor21 => "cor2_1",
            TheoremId::Thm23Family => "thm2_3",
            TheoremId::UrsF => "urs_f",
            TheoremId::UrsG => "urs_g",
            TheoremId::Urs24 => "urs2_4",
            TheoremId::Urs25 => "urs2_5",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.cli_name() == lower || t.as_str().to_ascii_lowercase() == lower)
            .ok_or_else(|| format!("unknown theorem '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Certified,
    HypothesisFailed,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    Upm,
    Supm,
    Ursm(TruncationLevel),
    Urse(TruncationLevel),
    None,
}

impl Conclusion {
    /// SUPM > UPM > anything else.
    pub fn rank(self) -> u8 {
        match self {
            Conclusion::Supm => 2,
            Conclusion::Upm => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Upm => f.write_str("UPM"),
            Conclusion::Supm => f.write_str("SUPM"),
            Conclusion::Ursm(l) => write!(f, "URSM_{l}"),
            Conclusion::Urse(l) => write!(f, "URSE_{l}"),
            Conclusion::None => f.write_str("none"),
        }
    }
}

impl FromStr for Conclusion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "UPM" => Ok(Conclusion::Upm),
            "SUPM" => Ok(Conclusion::Supm),
            "none" => Ok(Conclusion::None),
            _ => {
                if let Some(l) = s.strip_prefix("URSM_") {
                    Ok(Conclusion::Ursm(l.parse()?))
                } else if let Some(l) = s.strip_prefix("URSE_") {
                    Ok(Conclusion::Urse(l.parse()?))
                } else {
                    Err(format!("unknown conclusion '{s}'"))
                }
            }
        }
    }
}

impl Serialize for Conclusion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Conclusion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem_id: TheoremId,
    pub verdict: Verdict,
    pub failed_hypothesis: Option<String>,
    pub witnesses: BTreeMap<String, Value>,
    pub conclusion: Conclusion,
    pub reason: Option<String>,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn witness(&self, key: &str) -> Option<&Value> {
        self.witnesses.get(key)
    }

    pub fn witness_int(&self, key: &str) -> Option<i64> {
        self.witness(key)?.as_i64()
    }

    /// Exact value of a witness stored as rendered `Q(i)` text.
    pub fn witness_gr(&self, key: &str) -> Option<GR> {
        self.witness(key)?.as_str()?.parse().ok()
    }

    pub fn witness_bool(&self, key: &str) -> Option<bool> {
        self.witness(key)?.as_bool()
    }
}

/// Accumulates witnesses and hypothesis outcomes in the order they are checked.
pub(crate) struct CertBuilder {
    theorem_id: TheoremId,
    witnesses: BTreeMap<String, Value>,
    failures: Vec<String>,
    inconclusive: Option<String>,
}

impl CertBuilder {
    pub(crate) fn new(theorem_id: TheoremId) -> Self {
        CertBuilder {
            theorem_id,
            witnesses: BTreeMap::new(),
            failures: Vec::new(),
            inconclusive: None,
        }
    }

    pub(crate) fn witness(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.witnesses.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn gr(&mut self, key: &str, value: &GR) -> &mut Self {
        self.witness(key, value.to_string())
    }

    pub(crate) fn poly(&mut self, key: &str, value: &Poly) -> &mut Self {
        self.witness(key, value.render_in('w'))
    }

    /// Records `name` as violated when `holds` is false; returns `holds`.
    pub(crate) fn require(&mut self, name: &str, holds: bool) -> bool {
        if !holds {
            self.failures.push(name.to_string());
        }
        holds
    }

    pub(crate) fn inconclusive(&mut self, reason: impl Into<String>) {
        self.inconclusive.get_or_insert(reason.into());
    }

    pub(crate) fn finish(mut self, conclusion: Conclusion) -> Certificate {
        if let Some(reason) = self.inconclusive {
            return Certificate {
                theorem_id: self.theorem_id,
                verdict: Verdict::Inconclusive,
                failed_hypothesis: None,
                witnesses: self.witnesses,
                conclusion: Conclusion::None,
                reason: Some(reason),
            };
        }
        if self.failures.is_empty() {
            return Certificate {
                theorem_id: self.theorem_id,
                verdict: Verdict::Certified,
                failed_hypothesis: None,
                witnesses: self.witnesses,
                conclusion,
                reason: None,
            };
        }
        let first = self.failures[0].clone();
        if self.failures.len() > 1 {
            let all: Vec<Value> = self.failures.iter().cloned().map(Value::from).collect();
            self.witnesses
                .insert("failed_hypotheses".to_string(), Value::Array(all));
        }
        Certificate {
            theorem_id: self.theorem_id,
            verdict: Verdict::HypothesisFailed,
            reason: Some(format!("hypothesis '{first}' does not hold")),
            failed_hypothesis: Some(first),
            witnesses: self.witnesses,
            conclusion: Conclusion::None,
        }
    }
}

pub(crate) fn int_list(values: &[usize]) -> Value {
    Value::Array(values.iter().map(|&v| Value::from(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conclusion_text_round_trips() {
        for c in [
            Conclusion::Upm,
            Conclusion::Supm,
            Conclusion::None,
            Conclusion::Ursm(TruncationLevel::Finite(2)),
            Conclusion::Urse(TruncationLevel::Infinite),
        ] {
            assert_eq!(c.to_string().parse::<Conclusion>().unwrap(), c);
        }
        assert_eq!(Conclusion::Ursm(TruncationLevel::Infinite).to_string(), "URSM_inf");
    }

    #[test]
    fn theorem_names_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.cli_name().parse::<TheoremId>().unwrap(), t);
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), Value::from(t.as_str()));
        }
    }

    #[test]
    fn builder_reports_first_failure_and_lists_all() {
        let mut b = CertBuilder::new(TheoremId::FujimotoB);
        b.require("one", true);
        b.require("two", false);
        b.require("three", false);
        let cert = b.finish(Conclusion::Supm);
        assert_eq!(cert.verdict, Verdict::HypothesisFailed);
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("two"));
        assert_eq!(cert.conclusion, Conclusion::None);
        assert_eq!(cert.witnesses["failed_hypotheses"], serde_json::json!(["two", "three"]));
    }
}
