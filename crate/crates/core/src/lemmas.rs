//! Exact checks of the auxiliary polynomial
//! `psi(t) = lambda (t^(n-1) - A)^2 - 4 (t^(n-2) - A)(t^n - A)`,
//! `lambda = 4 (1 - 1/(n-1)^2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::arith::GR;
use crate::certify::lambda_thm23;
use crate::poly::{squarefree_decompose, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LemmaId {
    #[serde(rename = "l3_1")]
    SimpleRoots,
    #[serde(rename = "l3_2")]
    StructureAtOne,
    #[serde(rename = "l3_3")]
    CoprimeToPower,
}

impl LemmaId {
    pub const ALL: [LemmaId; 3] = [LemmaId::SimpleRoots, LemmaId::StructureAtOne, LemmaId::CoprimeToPower];

    pub fn cli_name(self) -> &'static str {
        match self {
            LemmaId::SimpleRoots => "l3_1",
            LemmaId::StructureAtOne => "l3_2",
            LemmaId::CoprimeToPower => "l3_3",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            LemmaId::SimpleRoots => "psi has no multiple roots (A not in {0, 1})",
            LemmaId::StructureAtOne => {
                "at A = 1, psi = c (t-1)^4 g(t) with g square-free, g(1) != 0, deg g = 2n-6"
            }
            LemmaId::CoprimeToPower => "psi and t^n - A have no common root (A not in {0, 1})",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for LemmaId {
    type Err = LemmaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.cli_name() == s.to_ascii_lowercase())
            .ok_or_else(|| LemmaError::UnknownLemma(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("unknown lemma '{0}' (expected l3_1, l3_2 or l3_3)")]
    UnknownLemma(String),
    #[error("precondition violated: n = {n}, need n >= {min}")]
    DegreeTooSmall { n: usize, min: usize },
    #[error("precondition violated: A = {0}, need A not in {{0, 1}}")]
    ExcludedA(Box<GR>),
    #[error("lemma {0} needs a value for A")]
    MissingA(LemmaId),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Option<GR>,
    pub holds: bool,
    pub statement: String,
    pub witnesses: BTreeMap<String, Value>,
}

pub fn psi_poly(n: usize, a: &GR) -> Result<Poly, LemmaError> {
    if n < 3 {
        return Err(LemmaError::DegreeTooSmall { n, min: 3 });
    }
    let lambda = lambda_thm23(n).expect("n >= 3");
    let shifted = |power: usize| &Poly::monomial(GR::one(), power) - &Poly::constant(a.clone());
    let square = shifted(n - 1).pow(2).scale(&lambda);
    let product = (&shifted(n - 2) * &shifted(n)).scale(&GR::from_int(4));
    Ok(&square - &product)
}

fn check_a(a: &GR) -> Result<(), LemmaError> {
    if a.is_zero() || a.is_one() {
        return Err(LemmaError::ExcludedA(Box::new(a.clone())));
    }
    Ok(())
}

fn report(lemma: LemmaId, n: usize, a: Option<&GR>, holds: bool, witnesses: BTreeMap<String, Value>) -> LemmaReport {
    LemmaReport {
        lemma,
        n,
        a: a.cloned(),
        holds,
        statement: lemma.statement().to_string(),
        witnesses,
    }
}

fn text(p: &Poly) -> Value {
    Value::from(p.render_in('t'))
}

/// `gcd(psi, psi')` is constant.
pub fn verify_lemma_3_1(n: usize, a: &GR) -> Result<LemmaReport, LemmaError> {
    check_a(a)?;
    verify_lemma_3_1_unchecked(n, a)
}

/// As [`verify_lemma_3_1`] without the restriction on `A`.
pub fn verify_lemma_3_1_unchecked(n: usize, a: &GR) -> Result<LemmaReport, LemmaError> {
    let psi = psi_poly(n, a)?;
    let g = psi.gcd(&psi.derivative()).expect("psi nonzero");
    let lambda = lambda_thm23(n).expect("n >= 3");
    let at_one = psi.eval(&GR::one());
    let one_minus_a = &GR::one() - a;
    let naive = &one_minus_a * &one_minus_a;
    let mut w = BTreeMap::new();
    w.insert("gcd".into(), text(&g));
    w.insert("psi_degree".into(), Value::from(psi.degree_or_zero()));
    w.insert("lambda_thm23".into(), Value::from(lambda.to_string()));
    w.insert("psi_at_1".into(), Value::from(at_one.to_string()));
    w.insert(
        "psi_at_1_closed_form".into(),
        Value::from("(lambda_thm23 - 4)(1 - A)^2"),
    );
    w.insert("psi_at_1_equals_(1-A)^2".into(), Value::from(at_one == naive));
    Ok(report(LemmaId::SimpleRoots, n, Some(a), g.is_constant(), w))
}

/// At `A = 1`: square-free decomposition `[(g, 1), (t - 1, 4)]` with
/// `g(1) != 0` and `deg g = 2n - 6`.
pub fn verify_lemma_3_2_structure(n: usize) -> Result<LemmaReport, LemmaError> {
    if n < 5 {
        return Err(LemmaError::DegreeTooSmall { n, min: 5 });
    }
    let one = GR::one();
    let psi = psi_poly(n, &one)?;
    let decomposition = squarefree_decompose(&psi).expect("psi nonzero");
    let parts: Vec<Value> = decomposition
        .parts
        .iter()
        .map(|p| serde_json::json!({ "factor": p.factor.render_in('t'), "multiplicity": p.multiplicity }))
        .collect();
    let mut w = BTreeMap::new();
    w.insert("decomposition".into(), Value::Array(parts));
    w.insert("unit".into(), Value::from(decomposition.unit.to_string()));
    let holds = match decomposition.parts.as_slice() {
        [g, quartic] => {
            w.insert("g".into(), text(&g.factor));
            w.insert("deg_g".into(), Value::from(g.factor.degree_or_zero()));
            w.insert("g_at_1".into(), Value::from(g.factor.eval(&one).to_string()));
            g.multiplicity == 1
                && quartic.multiplicity == 4
                && quartic.factor == Poly::linear_root(&one)
                && !g.factor.eval(&one).is_zero()
                && g.factor.degree_or_zero() == 2 * n - 6
        }
        _ => false,
    };
    Ok(report(LemmaId::StructureAtOne, n, Some(&one), holds, w))
}

/// `gcd(psi, t^n - A) = 1`.
pub fn verify_lemma_3_3(n: usize, a: &GR) -> Result<LemmaReport, LemmaError> {
    check_a(a)?;
    verify_lemma_3_3_unchecked(n, a)
}

/// As [`verify_lemma_3_3`] without the restriction on `A`.
pub fn verify_lemma_3_3_unchecked(n: usize, a: &GR) -> Result<LemmaReport, LemmaError> {
    let psi = psi_poly(n, a)?;
    let power = &Poly::monomial(GR::one(), n) - &Poly::constant(a.clone());
    let g = psi.gcd(&power).expect("nonzero");
    let mut w = BTreeMap::new();
    w.insert("gcd".into(), text(&g));
    Ok(report(LemmaId::CoprimeToPower, n, Some(a), g == Poly::one(), w))
}

/// Dispatches on the lemma id; `a` is required for l3_1 and l3_3.
pub fn verify_lemma(lemma: LemmaId, n: usize, a: Option<&GR>) -> Result<LemmaReport, LemmaError> {
    match lemma {
        LemmaId::SimpleRoots => verify_lemma_3_1(n, a.ok_or(LemmaError::MissingA(lemma))?),
        LemmaId::StructureAtOne => verify_lemma_3_2_structure(n),
        LemmaId::CoprimeToPower => verify_lemma_3_3(n, a.ok_or(LemmaError::MissingA(lemma))?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_shape() {
        let psi = psi_poly(6, &GR::from_int(2)).unwrap();
        assert_eq!(psi.degree(), Some(10));
        assert_eq!(psi.leading(), Some(&GR::ratio(-4, 25)));
        assert_eq!(psi.eval(&GR::one()), GR::ratio(-4, 25));
        let degenerate = psi_poly(6, &GR::zero()).unwrap();
        assert_eq!(degenerate, Poly::monomial(GR::ratio(-4, 25), 10));
        assert!(psi_poly(2, &GR::from_int(2)).is_err());
    }

    #[test]
    fn simple_roots_examples() {
        let r = verify_lemma_3_1(6, &GR::from_int(2)).unwrap();
        assert!(r.holds);
        assert_eq!(r.witnesses["psi_at_1_equals_(1-A)^2"], Value::from(false));
        assert!(verify_lemma_3_1(7, &GR::i()).unwrap().holds);
        assert!(!verify_lemma_3_1_unchecked(6, &GR::one()).unwrap().holds);
        assert_eq!(verify_lemma_3_1(6, &GR::one()), Err(LemmaError::ExcludedA(Box::new(GR::one()))));
    }

    #[test]
    fn structure_at_one() {
        for (n, deg) in [(5, 4), (6, 6), (8, 10)] {
            let r = verify_lemma_3_2_structure(n).unwrap();
            assert!(r.holds, "n = {n}: {:?}", r.witnesses);
            assert_eq!(r.witnesses["deg_g"], Value::from(deg));
        }
    }

    #[test]
    fn coprime_to_power() {
        assert!(verify_lemma_3_3(6, &GR::from_int(2)).unwrap().holds);
        assert!(verify_lemma_3_3(4, &GR::from_int(-1)).unwrap().holds);
        let at_one = verify_lemma_3_3_unchecked(6, &GR::one()).unwrap();
        assert!(!at_one.holds);
        let g: Poly = crate::parser::parse_poly_in(at_one.witnesses["gcd"].as_str().unwrap(), 't').unwrap();
        assert!(g.eval(&GR::one()).is_zero());
    }
}
