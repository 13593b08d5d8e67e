//! Threshold tables for unique range sets built from SUPM zero sets.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{CertBuilder, Certificate, Conclusion, TheoremId};
use crate::arith::{BigRational, GR};
use crate::critical::CriticalStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruncationLevel {
    Finite(u32),
    Infinite,
}

impl TruncationLevel {
    /// The three regimes of the threshold tables: `l >= 3` (or infinite), `l = 2`, `l = 1`.
    fn regime(self) -> u32 {
        match self {
            TruncationLevel::Finite(l) if l < 3 => l,
            _ => 3,
        }
    }
}

impl fmt::Display for TruncationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncationLevel::Finite(l) => write!(f, "{l}"),
            TruncationLevel::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for TruncationLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(TruncationLevel::Infinite),
            other => match other.parse::<u32>() {
                Ok(0) => Err("truncation level must be at least 1".into()),
                Ok(l) => Ok(TruncationLevel::Finite(l)),
                Err(_) => Err(format!("invalid truncation level '{s}'")),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UrsError {
    #[error("truncation level must be at least 1")]
    InvalidLevel,
    #[error("theta_min = {0} is outside [0, 1]")]
    ThetaOutOfRange(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UrsParams {
    pub l: TruncationLevel,
    /// Lower bound on the pole deficiencies of both functions.
    pub theta_min: BigRational,
}

impl UrsParams {
    pub fn new(l: TruncationLevel, theta_min: BigRational) -> Result<Self, UrsError> {
        if l == TruncationLevel::Finite(0) {
            return Err(UrsError::InvalidLevel);
        }
        if theta_min.is_negative() || theta_min > BigRational::one() {
            return Err(UrsError::ThetaOutOfRange(theta_min));
        }
        Ok(UrsParams { l, theta_min })
    }

    pub fn level(l: TruncationLevel) -> Self {
        UrsParams {
            l,
            theta_min: BigRational::zero(),
        }
    }
}

fn conclusion(l: TruncationLevel, entire: bool) -> Conclusion {
    if entire {
        Conclusion::Urse(l)
    } else {
        Conclusion::Ursm(l)
    }
}

/// `(meromorphic, entire)` offsets `c` in `n > 2k + c`.
fn degree_offsets(l: TruncationLevel) -> (i64, i64) {
    match l.regime() {
        1 => (10, 4),
        2 => (7, 2),
        _ => (6, 2),
    }
}

/// Lower bound that `theta_min` must exceed.
fn deficiency_bound(n: i64, k: i64, l: TruncationLevel) -> BigRational {
    let r = |num: i64, den: i64| BigRational::new(num.into(), den.into());
    match l.regime() {
        1 => r(10 + 2 * k - n, 6),
        2 => r(14 + 4 * k - 2 * n, 9),
        _ => r(6 + 2 * k - n, 4),
    }
}

fn common_witnesses(b: &mut CertBuilder, n: usize, k: usize, l: TruncationLevel, entire: bool) {
    b.witness("n", n)
        .witness("k", k)
        .witness("l", l.to_string())
        .witness("entire", entire);
}

fn needs_k(b: &mut CertBuilder, k: usize) -> bool {
    if k < 2 {
        b.inconclusive(format!(
            "k = {k}: the threshold theorems need at least two critical points"
        ));
        return false;
    }
    true
}

/// Degree thresholds for URSM_l (URSE_l) from the zero set of a SUPM (SUPE)
/// of degree `n` with `k` critical points. The IM-sharing thresholds are
/// recorded as witnesses.
pub fn check_urs_thresholds(n: usize, k: usize, params: &UrsParams, entire: bool) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::UrsF);
    common_witnesses(&mut b, n, k, params.l, entire);
    if !needs_k(&mut b, k) {
        return b.finish(Conclusion::None);
    }
    let (mero, ent) = degree_offsets(params.l);
    let offset = if entire { ent } else { mero };
    let threshold = 2 * k as i64 + offset;
    let (im_mero, im_ent) = (2 * k + 12, 2 * k + 5);
    b.witness("threshold_meromorphic", 2 * k as i64 + mero)
        .witness("threshold_entire", 2 * k as i64 + ent)
        .witness("threshold", threshold)
        .witness("im_threshold_meromorphic", im_mero)
        .witness("im_threshold_entire", im_ent)
        .witness("ursm_im", n > im_mero)
        .witness("urse_im", n > im_ent);
    b.require(&format!("n > 2k + {offset}"), n as i64 > threshold);
    b.finish(conclusion(params.l, entire))
}

/// Deficiency variant: URSM_l (URSE_l) once `theta_min` exceeds a bound
/// depending on `n`, `k` and `l`.
pub fn check_urs_deficiency(n: usize, k: usize, params: &UrsParams, entire: bool) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::UrsG);
    common_witnesses(&mut b, n, k, params.l, entire);
    if !needs_k(&mut b, k) {
        return b.finish(Conclusion::None);
    }
    let bound = deficiency_bound(n as i64, k as i64, params.l);
    b.gr("theta_min", &GR::from_rational(params.theta_min.clone()))
        .gr("theta_bound", &GR::from_rational(bound.clone()));
    b.require("theta_min > bound", params.theta_min > bound);
    b.finish(conclusion(params.l, entire))
}

/// Both threshold families.
pub fn check_urs(n: usize, k: usize, params: &UrsParams, entire: bool) -> Vec<Certificate> {
    vec![
        check_urs_thresholds(n, k, params, entire),
        check_urs_deficiency(n, k, params, entire),
    ]
}

/// Checks the standing hypotheses on an analyzed polynomial (simple zeros,
/// critical injectivity, `k >= 3` or `k = 2` with no simple critical point,
/// certified SUPM) before applying the threshold tables.
pub fn check_urs_for_structure(
    cs: &CriticalStructure,
    supm_certified: bool,
    params: &UrsParams,
    entire: bool,
) -> Vec<Certificate> {
    let shape_ok = cs.k >= 3 || (cs.k == 2 && !cs.has_simple_critical_point());
    let failures: Vec<&str> = [
        (cs.simple_zeros, "simple_zeros"),
        (cs.critically_injective, "critically_injective"),
        (shape_ok, "k >= 3, or k = 2 with no simple zero of P'"),
        (supm_certified, "SUPM certified"),
    ]
    .into_iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, name)| name)
    .collect();
    let mut certs = check_urs(cs.degree, cs.k, params, entire);
    if let Some(first) = failures.first() {
        for cert in &mut certs {
            cert.verdict = super::Verdict::Inconclusive;
            cert.conclusion = Conclusion::None;
            cert.failed_hypothesis = None;
            cert.reason = Some(format!("standing hypothesis not met: {first}"));
            cert.witnesses.insert(
                "unmet_standing_hypotheses".into(),
                serde_json::Value::from(failures.clone()),
            );
        }
    }
    certs
}

fn two_parameter_profile(b: &mut CertBuilder, m: usize, n: usize) -> bool {
    b.witness("m", m)
        .witness("n", n)
        .witness("m_plus_n", m + n)
        .witness("degree", m + n + 1)
        .witness("k", 2);
    let a = b.require("m + n >= 5", m + n >= 5);
    let c = b.require("max(m, n) >= 3", m.max(n) >= 3);
    let d = b.require("min(m, n) >= 2", m.min(n) >= 2);
    a && c && d
}

/// Degree thresholds specialised to the two-point family of degree `m + n + 1`.
pub fn check_urs_thm_2_4(m: usize, n: usize, l: TruncationLevel, entire: bool) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::Urs24);
    b.witness("l", l.to_string()).witness("entire", entire);
    two_parameter_profile(&mut b, m, n);
    let (mero, ent) = degree_offsets(l);
    // degree > 4 + c  <=>  m + n > 3 + c
    let bound = 3 + if entire { ent } else { mero };
    b.witness("m_plus_n_bound", bound);
    b.require(&format!("m + n > {bound}"), (m + n) as i64 > bound);
    b.finish(conclusion(l, entire))
}

/// Deficiency thresholds specialised to the two-point family of degree `m + n + 1`.
pub fn check_urs_thm_2_5(m: usize, n: usize, params: &UrsParams, entire: bool) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::Urs25);
    b.witness("l", params.l.to_string()).witness("entire", entire);
    two_parameter_profile(&mut b, m, n);
    let bound = deficiency_bound((m + n + 1) as i64, 2, params.l);
    b.gr("theta_min", &GR::from_rational(params.theta_min.clone()))
        .gr("theta_bound", &GR::from_rational(bound.clone()));
    b.require("theta_min > bound", params.theta_min > bound);
    b.finish(conclusion(params.l, entire))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::certify::Verdict;

    fn level(l: u32) -> TruncationLevel {
        TruncationLevel::Finite(l)
    }

    #[test]
    fn degree_threshold_examples() {
        let p3 = UrsParams::level(level(3));
        assert!(check_urs_thresholds(12, 2, &p3, false).is_certified());
        assert!(!check_urs_thresholds(10, 2, &p3, false).is_certified());
        assert!(check_urs_thresholds(10, 2, &p3, true).is_certified());
        let cert = check_urs_thresholds(14, 2, &UrsParams::level(level(1)), false);
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("n > 2k + 10"));
        assert_eq!(
            check_urs_thresholds(20, 1, &p3, false).verdict,
            Verdict::Inconclusive
        );
    }

    #[test]
    fn deficiency_examples() {
        let half = UrsParams::new(level(3), rational(1, 2)).unwrap();
        let cert = check_urs_deficiency(10, 2, &half, false);
        assert!(cert.is_certified());
        assert_eq!(cert.witness_gr("theta_bound"), Some(GR::zero()));
        // n = 2k + 6 with theta_min = 0: bound 0 is not exceeded
        let zero = UrsParams::level(TruncationLevel::Infinite);
        assert!(!check_urs_deficiency(10, 2, &zero, false).is_certified());
    }

    #[test]
    fn two_parameter_table() {
        let cases = [(level(3), false, 9), (level(2), false, 10), (level(1), false, 13)];
        for (l, entire, bound) in cases {
            for s in 5..20usize {
                let cert = check_urs_thm_2_4(s - 2, 2, l, entire);
                assert_eq!(cert.is_certified(), s > bound, "l={l} m+n={s}");
            }
        }
        let cert = check_urs_thm_2_4(1, 4, level(3), false);
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("min(m, n) >= 2"));
    }

    #[test]
    fn params_validation() {
        assert!(UrsParams::new(level(0), rational(0, 1)).is_err());
        assert!(UrsParams::new(level(1), rational(3, 2)).is_err());
        assert_eq!("inf".parse::<TruncationLevel>(), Ok(TruncationLevel::Infinite));
        assert_eq!("2".parse::<TruncationLevel>(), Ok(level(2)));
        assert!("0".parse::<TruncationLevel>().is_err());
    }
}
