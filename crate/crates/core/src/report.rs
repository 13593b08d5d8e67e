//! Command drivers shared by the CLI: each produces a [`Report`] that is
//! rendered either as text or as `supm-cert/v1` JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::arith::{BigRational, GR};
use crate::certify::{
    check_cor_2_1, check_fujimoto_a, check_fujimoto_b, check_fujimoto_c, check_fujimoto_d,
    check_thm_2_1, check_thm_2_2, check_thm_2_3_family, check_urs_deficiency,
    check_urs_thresholds, recognize_thm_2_3, CertBuilder, Certificate, Conclusion, PairMode,
    TheoremId, TruncationLevel, UrsError, UrsParams,
};
use crate::critical::{analyze, fiber_counts, CriticalStructure, CriticalValue, Locus};
use crate::family::{list_families, FamilyError, FamilyInfo, FamilySpec};
use crate::lemmas::{verify_lemma, LemmaError, LemmaId, LemmaReport};
use crate::par;
use crate::parser::{parse_poly_in, ParseError};
use crate::poly::Poly;

pub const SCHEMA: &str = "supm-cert/v1";

/// Exit status when an SUPM certificate was issued.
pub const EXIT_SUPM: i32 = 0;
/// Exit status when only UPM was certified.
pub const EXIT_UPM: i32 = 1;
pub const EXIT_NONE: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 3;

/// Certifiers run by `check`, in report order.
pub const CHAIN: [TheoremId; 7] = [
    TheoremId::FujimotoA,
    TheoremId::FujimotoB,
    TheoremId::FujimotoC,
    TheoremId::FujimotoD,
    TheoremId::Thm21,
    TheoremId::Thm22,
    TheoremId::Cor21,
];

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Lemma(#[from] LemmaError),
    #[error(transparent)]
    Urs(#[from] UrsError),
    #[error("{0}")]
    Usage(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT_ERROR
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSummary {
    pub point: String,
    pub count: usize,
    pub derivative_multiplicity: usize,
    pub value_order: usize,
    pub critical_value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSummary {
    pub value: String,
    pub count: usize,
    pub distinct_preimages: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub degree: usize,
    pub k: usize,
    pub multiplicities: Vec<usize>,
    pub critical_points: Vec<PointSummary>,
    pub critical_value_poly: String,
    pub weighted_value_poly: String,
    pub fiber_counts: Vec<FiberSummary>,
    pub simple_zeros: bool,
    pub critically_injective: bool,
}

fn value_text(v: &CriticalValue) -> String {
    match v {
        CriticalValue::Explicit { value } => value.to_string(),
        CriticalValue::Algebraic { value_poly } => format!("root of {}", value_poly.render_in('w')),
    }
}

impl StructureSummary {
    pub fn from_structure(cs: &CriticalStructure, var: char) -> Self {
        let mut multiplicities = cs.multiplicities();
        multiplicities.sort_unstable_by(|a, b| b.cmp(a));
        StructureSummary {
            degree: cs.degree,
            k: cs.k,
            multiplicities,
            critical_points: cs
                .points
                .iter()
                .map(|p| PointSummary {
                    point: match &p.locus {
                        Locus::Explicit { point } => point.to_string(),
                        Locus::Algebraic { factor } => format!("root of {}", factor.render_in(var)),
                    },
                    count: p.count,
                    derivative_multiplicity: p.derivative_multiplicity,
                    value_order: p.value_order,
                    critical_value: value_text(&p.critical_value),
                })
                .collect(),
            critical_value_poly: cs.critical_value_poly.render_in('w'),
            weighted_value_poly: cs.weighted_value_poly.render_in('w'),
            fiber_counts: fiber_counts(cs)
                .iter()
                .map(|f| FiberSummary {
                    value: value_text(&f.value),
                    count: f.count,
                    distinct_preimages: f.distinct_preimages,
                })
                .collect(),
            simple_zeros: cs.simple_zeros,
            critically_injective: cs.critically_injective,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEcho {
    pub id: String,
    pub name: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Overall {
    /// Strongest conclusion certified: SUPM > UPM > none (URS conclusions for `urs`).
    pub conclusion: Conclusion,
    pub theorem_id: Option<TheoremId>,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub input_echo: Option<String>,
    pub family: Option<FamilyEcho>,
    pub structure_summary: Option<StructureSummary>,
    pub certificates: Vec<Certificate>,
    pub lemma: Option<LemmaReport>,
    pub families: Option<Vec<FamilyInfo>>,
    pub overall: Overall,
    pub notes: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    fn empty(command: &str) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            input_echo: None,
            family: None,
            structure_summary: None,
            certificates: Vec::new(),
            lemma: None,
            families: None,
            overall: Overall {
                conclusion: Conclusion::None,
                theorem_id: None,
                summary: String::new(),
            },
            notes: Vec::new(),
            exit_code: EXIT_NONE,
        }
    }

    pub fn certificate(&self, id: TheoremId) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.theorem_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    /// Restrict to these theorems; `None` runs the full chain (plus the
    /// `z^n + a z^(n-1) + b z^(n-2)` family check when the shape matches).
    pub theorems: Option<Vec<TheoremId>>,
    pub any_pair: bool,
    pub variable: Option<char>,
}

impl CheckOptions {
    fn var(&self) -> char {
        self.variable.unwrap_or('z')
    }
}

/// Parses `text` and runs [`run_check`].
pub fn cmd_check(text: &str, options: &CheckOptions) -> Result<Report, CommandError> {
    let p = parse_poly_in(text, options.var())?;
    run_check(&p, options)
}

pub fn run_check(p: &Poly, options: &CheckOptions) -> Result<Report, CommandError> {
    let mut report = Report::empty("check");
    report.input_echo = Some(p.render_in(options.var()));
    if let Some(ts) = &options.theorems {
        if let Some(t) = ts.iter().find(|t| is_urs(**t)) {
            return Err(CommandError::Usage(format!(
                "{t} is a unique-range-set threshold; use the urs command"
            )));
        }
    }
    let degree = p.degree_or_zero();
    if degree < 2 {
        report.notes.push(format!(
            "degree {degree}: no critical structure. A polynomial a z + b (a != 0) is a uniqueness \
             polynomial but never a strong one: for g non-constant and c != 0, 1 the function \
             f = c g - (b/a)(1 - c) satisfies P(f) = c P(g) with f != g."
        ));
        report.overall.summary = "nothing certified (degree < 2)".into();
        report.exit_code = EXIT_NONE;
        return Ok(report);
    }
    let cs = analyze(p).expect("degree >= 2");
    report.structure_summary = Some(StructureSummary::from_structure(&cs, options.var()));

    let wanted = |t: TheoremId| options.theorems.as_ref().is_none_or(|ts| ts.contains(&t));
    let chain: Vec<TheoremId> = CHAIN.into_iter().filter(|t| wanted(*t)).collect();
    let mode = if options.any_pair {
        PairMode::AnyPair
    } else {
        PairMode::Maximal
    };
    report.certificates = par::map(&chain, |&t| run_certifier(t, &cs, mode));

    let shape = recognize_thm_2_3(p);
    let requested_thm23 = options
        .theorems
        .as_ref()
        .is_some_and(|ts| ts.contains(&TheoremId::Thm23Family));
    if requested_thm23 || (options.theorems.is_none() && shape.is_some()) {
        report.certificates.push(match shape {
            Some((n, a, b)) => check_thm_2_3_family(n, &a, &b),
            None => {
                let mut b = CertBuilder::new(TheoremId::Thm23Family);
                b.witness("n", degree);
                b.require("shape z^n + a z^(n-1) + b z^(n-2)", false);
                b.finish(Conclusion::Supm)
            }
        });
    }
    if !cs.critically_injective {
        report.notes.push(
            "not critically injective: two distinct critical points share a critical value, \
             so none of the strong-uniqueness criteria apply"
                .into(),
        );
    }
    if options.any_pair {
        report.notes.push(
            "--any-pair: the pair-sum criterion scans every pair of critical points, \
             which goes beyond the literal statement (maximal pair only)"
                .into(),
        );
    }
    finish_overall(&mut report);
    Ok(report)
}

fn is_urs(t: TheoremId) -> bool {
    matches!(
        t,
        TheoremId::UrsF | TheoremId::UrsG | TheoremId::Urs24 | TheoremId::Urs25
    )
}

fn run_certifier(t: TheoremId, cs: &CriticalStructure, mode: PairMode) -> Certificate {
    match t {
        TheoremId::FujimotoA => check_fujimoto_a(cs),
        TheoremId::FujimotoB => check_fujimoto_b(cs),
        TheoremId::FujimotoC => check_fujimoto_c(cs),
        TheoremId::FujimotoD => check_fujimoto_d(cs),
        TheoremId::Thm21 => check_thm_2_1(cs, mode),
        TheoremId::Thm22 => check_thm_2_2(cs, None),
        TheoremId::Cor21 => check_cor_2_1(cs),
        other => unreachable!("{other} is not part of the check chain"),
    }
}

fn finish_overall(report: &mut Report) {
    let best = report
        .certificates
        .iter()
        .filter(|c| c.is_certified())
        .max_by_key(|c| (c.conclusion.rank(), std::cmp::Reverse(chain_position(c.theorem_id))));
    match best {
        Some(c) if c.conclusion.rank() > 0 => {
            report.overall = Overall {
                conclusion: c.conclusion,
                theorem_id: Some(c.theorem_id),
                summary: format!("{} certified by {}", c.conclusion, c.theorem_id),
            };
            report.exit_code = if c.conclusion == Conclusion::Supm {
                EXIT_SUPM
            } else {
                EXIT_UPM
            };
        }
        _ => {
            report.overall = Overall {
                conclusion: Conclusion::None,
                theorem_id: None,
                summary: "nothing certified".into(),
            };
            report.exit_code = EXIT_NONE;
        }
    }
}

fn chain_position(t: TheoremId) -> usize {
    TheoremId::ALL.iter().position(|x| *x == t).expect("listed")
}

/// Builds a family member and certifies it like `check`.
pub fn run_family(spec: &FamilySpec, options: &CheckOptions) -> Result<Report, CommandError> {
    let p = spec.construct()?;
    let mut report = run_check(&p, options)?;
    report.command = "family".into();
    report.family = Some(FamilyEcho {
        id: spec.family.cli_name().into(),
        name: spec.family.display_name().into(),
        params: spec
            .params
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect(),
    });
    Ok(report)
}

pub fn cmd_family(
    family: &str,
    params: &[(String, String)],
    options: &CheckOptions,
) -> Result<Report, CommandError> {
    run_family(&FamilySpec::from_text(family, params)?, options)
}

pub fn run_lemma(lemma: LemmaId, n: usize, a: Option<&GR>) -> Result<Report, CommandError> {
    let outcome = verify_lemma(lemma, n, a)?;
    let mut report = Report::empty("lemma");
    report.overall.summary = format!(
        "lemma {} {} at n = {n}{}",
        lemma,
        if outcome.holds { "holds" } else { "fails" },
        outcome
            .a
            .as_ref()
            .map(|a| format!(", A = {a}"))
            .unwrap_or_default()
    );
    report.exit_code = if outcome.holds { EXIT_SUPM } else { EXIT_NONE };
    report.lemma = Some(outcome);
    Ok(report)
}

pub fn cmd_lemma(lemma: &str, n: usize, a: Option<&str>) -> Result<Report, CommandError> {
    let lemma: LemmaId = lemma.parse()?;
    let a = a.map(crate::parser::parse_constant).transpose()?;
    run_lemma(lemma, n, a.as_ref())
}

/// Threshold tables for degree `n` with `k` critical points; the deficiency
/// table is added when `theta` is given.
pub fn run_urs(
    n: usize,
    k: usize,
    l: TruncationLevel,
    theta: Option<BigRational>,
    entire: bool,
) -> Result<Report, CommandError> {
    if n == 0 || k == 0 {
        return Err(CommandError::Usage("urs needs n >= 1 and k >= 1".into()));
    }
    let mut report = Report::empty("urs");
    let params = UrsParams::new(l, theta.clone().unwrap_or_default())?;
    report.certificates.push(check_urs_thresholds(n, k, &params, entire));
    if theta.is_some() {
        report.certificates.push(check_urs_deficiency(n, k, &params, entire));
    }
    report.notes.push(
        "the thresholds presuppose the zero set of a critically injective SUPM with simple zeros \
         and k >= 3, or k = 2 with no simple critical point"
            .into(),
    );
    match report.certificates.iter().find(|c| c.is_certified()) {
        Some(c) => {
            report.overall = Overall {
                conclusion: c.conclusion,
                theorem_id: Some(c.theorem_id),
                summary: format!("{} by {}", c.conclusion, c.theorem_id),
            };
            report.exit_code = EXIT_SUPM;
        }
        None => {
            report.overall.summary = "no unique-range-set conclusion".into();
            report.exit_code = EXIT_NONE;
        }
    }
    Ok(report)
}

pub fn cmd_urs(
    n: usize,
    k: usize,
    l: &str,
    theta: Option<&str>,
    entire: bool,
) -> Result<Report, CommandError> {
    let l: TruncationLevel = l.parse().map_err(CommandError::Usage)?;
    let theta = theta
        .map(|t| {
            let v = crate::parser::parse_constant(t)?;
            if !v.is_real() {
                return Err(CommandError::Usage(format!("theta must be real, got {v}")));
            }
            Ok(v.re().clone())
        })
        .transpose()?;
    run_urs(n, k, l, theta, entire)
}

pub fn run_list_families() -> Report {
    let mut report = Report::empty("list-families");
    report.families = Some(list_families());
    report.overall.summary = "family catalog".into();
    report.exit_code = EXIT_SUPM;
    report
}

fn witness_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    if let Some(f) = &r.family {
        let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        let _ = writeln!(out, "family: {} ({}) with {}", f.name, f.id, params.join(", "));
    }
    if let Some(input) = &r.input_echo {
        let _ = writeln!(out, "polynomial: {input}");
    }
    if let Some(s) = &r.structure_summary {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            out,
            "degree {}, k = {}, q = {:?}, simple zeros: {}, critically injective: {}",
            s.degree,
            s.k,
            s.multiplicities,
            yes(s.simple_zeros),
            yes(s.critically_injective)
        );
        let _ = writeln!(out, "critical points:");
        for p in &s.critical_points {
            let count = if p.count > 1 {
                format!(" ({} points)", p.count)
            } else {
                String::new()
            };
            let _ = writeln!(
                out,
                "  {}{count}: q = {}, order {}, value {}",
                p.point, p.derivative_multiplicity, p.value_order, p.critical_value
            );
        }
        let _ = writeln!(out, "critical value polynomial: {}", s.critical_value_poly);
        let _ = writeln!(out, "fiber counts:");
        for f in &s.fiber_counts {
            let count = if f.count > 1 {
                format!(" ({} values)", f.count)
            } else {
                String::new()
            };
            let _ = writeln!(out, "  {}{count}: {} distinct preimages", f.value, f.distinct_preimages);
        }
    }
    if !r.certificates.is_empty() {
        let _ = writeln!(out, "certificates:");
    }
    for c in &r.certificates {
        let status = match (&c.failed_hypothesis, &c.reason) {
            (Some(h), _) => format!("failed: {h}"),
            (None, Some(reason)) => reason.clone(),
            (None, None) => c.conclusion.to_string(),
        };
        let _ = writeln!(out, "  {:<14} {:<17} {}", c.theorem_id.as_str(), format!("{:?}", c.verdict), status);
        let ws: Vec<String> = c
            .witnesses
            .iter()
            .map(|(k, v)| format!("{k} = {}", witness_text(v)))
            .collect();
        let _ = writeln!(out, "      {}", ws.join("; "));
    }
    if let Some(l) = &r.lemma {
        let _ = writeln!(out, "lemma {}: {}", l.lemma, l.statement);
        for (k, v) in &l.witnesses {
            let _ = writeln!(out, "  {k} = {}", witness_text(v));
        }
    }
    if let Some(fs) = &r.families {
        for f in fs {
            let _ = writeln!(out, "{:<11} {:<14} {}", f.id, f.name, f.formula);
            let _ = writeln!(out, "{:<26} params: {}; {}", "", f.parameters.join(", "), f.constraints);
        }
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    let _ = writeln!(out, "overall: {}", r.overall.summary);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_chain_on_degree_six() {
        let r = cmd_check("10z^6 - 24z^5 + 15z^4 - 2", &CheckOptions::default()).unwrap();
        assert_eq!(r.exit_code, EXIT_SUPM);
        assert_eq!(r.overall.theorem_id, Some(TheoremId::Thm21));
        let ids: Vec<_> = r.certificates.iter().map(|c| c.theorem_id).collect();
        assert_eq!(ids, CHAIN.to_vec());
        assert_eq!(r.certificate(TheoremId::FujimotoD).unwrap().failed_hypothesis.as_deref(), Some("clause (1) or (2)"));
    }

    #[test]
    fn thm23_shape_path() {
        let opts = CheckOptions {
            theorems: Some(vec![TheoremId::Thm23Family]),
            ..Default::default()
        };
        let r = cmd_check("z^6+4z^5+25/6z^4", &opts).unwrap();
        assert_eq!(r.certificates.len(), 1);
        assert_eq!(r.exit_code, EXIT_SUPM);
    }

    #[test]
    fn non_injective_and_degree_one() {
        let r = cmd_check("z^4-2z^2+1", &CheckOptions::default()).unwrap();
        assert_eq!(r.exit_code, EXIT_NONE);
        assert!(r.notes.iter().any(|n| n.contains("not critically injective")));
        let r = cmd_check("z", &CheckOptions::default()).unwrap();
        assert_eq!(r.exit_code, EXIT_NONE);
        assert!(r.structure_summary.is_none());
        assert!(r.notes[0].contains("degree 1"));
    }

    #[test]
    fn upm_only_exit_code() {
        // P' = z^2 (z-1)^2: P(0) = -P(1) once shifted by 1/60, so P is not critically injective
        let dp = crate::parser::parse_poly("z^2 (z-1)^2").unwrap();
        let p = &dp.integral() + &Poly::constant(GR::ratio(1, 60));
        let r = run_check(&p, &CheckOptions::default()).unwrap();
        assert_eq!(r.overall.conclusion, Conclusion::None);
        // critical values sum to zero: every SUPM criterion fails, A still gives UPM
        let dp = crate::parser::parse_poly("z^2 (z-1)^3").unwrap();
        let p = &dp.integral() + &Poly::constant(GR::ratio(1, 120));
        let r = run_check(&p, &CheckOptions::default()).unwrap();
        assert_eq!(r.exit_code, EXIT_UPM, "{}", r.to_text());
    }

    #[test]
    fn json_round_trip() {
        let r = cmd_family("pb", &[("n".into(), "3".into()), ("m".into(), "2".into()), ("c".into(), "1".into())], &CheckOptions::default()).unwrap();
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let deterministic = cmd_family("pb", &[("n".into(), "3".into()), ("m".into(), "2".into()), ("c".into(), "1".into())], &CheckOptions::default()).unwrap();
        assert_eq!(deterministic.to_json(), r.to_json());
    }

    #[test]
    fn lemma_and_urs_commands() {
        assert_eq!(cmd_lemma("l3_1", 6, Some("2")).unwrap().exit_code, EXIT_SUPM);
        assert!(cmd_lemma("l3_3", 6, Some("1")).is_err());
        assert_eq!(cmd_urs(12, 2, "3", None, false).unwrap().exit_code, EXIT_SUPM);
        assert_eq!(cmd_urs(10, 2, "3", None, false).unwrap().exit_code, EXIT_NONE);
        let r = cmd_urs(10, 2, "3", Some("1/2"), false).unwrap();
        assert!(r.certificate(TheoremId::UrsG).unwrap().is_certified());
    }
}
