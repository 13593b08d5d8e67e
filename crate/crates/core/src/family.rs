//! Named polynomial families with exact parameter validation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{BigRational, GR};
use crate::certify::lambda_thm23;
use crate::parser::parse_constant;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyId {
    /// `z^n + a z^(n-r) + b`
    Py,
    /// Three-term family with critical points 0 and 1 of multiplicities `n-3`, 2.
    Pfr,
    /// `Σ C(m,i) (-1)^i z^(N-i) / (N-i) + c`, `N = n+m+1`.
    Pb,
    /// `Q(z) + c` with `Q' = (z-b)^m (z-a)^n`.
    GeneralizedP,
    /// `Σ C(m,i) (-1)^i b^i z^(N-i) / (N-i) + c`.
    ShiftedPb,
    /// `z^n - (n/m) z^m + b`
    PowerGap,
    /// `z^n + a z^(n-1) + b z^(n-2)`
    Thm23,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::Py,
        FamilyId::Pfr,
        FamilyId::Pb,
        FamilyId::GeneralizedP,
        FamilyId::ShiftedPb,
        FamilyId::PowerGap,
        FamilyId::Thm23,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyId::Py => "py",
            FamilyId::Pfr => "pfr",
            FamilyId::Pb => "pb",
            FamilyId::GeneralizedP => "gen",
            FamilyId::ShiftedPb => "pb-shifted",
            FamilyId::PowerGap => "powergap",
            FamilyId::Thm23 => "thm23",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            FamilyId::Py => "P_Y",
            FamilyId::Pfr => "P_FR",
            FamilyId::Pb => "P_B",
            FamilyId::GeneralizedP => "Generalized_P",
            FamilyId::ShiftedPb => "Shifted_PB",
            FamilyId::PowerGap => "PowerGap",
            FamilyId::Thm23 => "Thm2_3",
        }
    }

    /// Parameter names; the integer ones come first.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            FamilyId::Py => &["n", "r", "a", "b"],
            FamilyId::Pfr => &["n", "c"],
            FamilyId::Pb => &["n", "m", "c"],
            FamilyId::GeneralizedP => &["n", "m", "a", "b", "c"],
            FamilyId::ShiftedPb => &["n", "m", "b", "c"],
            FamilyId::PowerGap => &["n", "m", "b"],
            FamilyId::Thm23 => &["n", "a", "b"],
        }
    }

    fn is_integer_parameter(self, name: &str) -> bool {
        matches!(name, "n" | "m" | "r")
    }

    pub fn formula(self) -> &'static str {
        match self {
            FamilyId::Py => "z^n + a z^(n-r) + b",
            FamilyId::Pfr => {
                "(n-1)(n-2)/2 z^n - n(n-2) z^(n-1) + n(n-1)/2 z^(n-2) - c"
            }
            FamilyId::Pb => "sum_{i=0..m} C(m,i) (-1)^i z^(n+m+1-i) / (n+m+1-i) + c",
            FamilyId::GeneralizedP => {
                "sum_{i,j} C(m,i) C(n,j) (-1)^(i+j) a^j b^i z^(n+m+1-i-j) / (n+m+1-i-j) + c"
            }
            FamilyId::ShiftedPb => {
                "sum_{i=0..m} C(m,i) (-1)^i b^i z^(n+m+1-i) / (n+m+1-i) + c"
            }
            FamilyId::PowerGap => "z^n - (n/m) z^m + b",
            FamilyId::Thm23 => "z^n + a z^(n-1) + b z^(n-2)",
        }
    }

    pub fn constraints(self) -> &'static str {
        match self {
            FamilyId::Py => "gcd(n, r) = 1, 2 <= r < n, n >= 6, ab != 0",
            FamilyId::Pfr => "n >= 5, c not in {0, 1, 1/2}",
            FamilyId::Pb => "n, m >= 1, c not in {0, -lambda_PB, -lambda_PB/2}",
            FamilyId::GeneralizedP => {
                "n, m >= 1, b != 0, a != b, c not in {0, -Q(a), -Q(b), -(Q(a)+Q(b))/2}"
            }
            FamilyId::ShiftedPb => {
                "n, m >= 1, bc != 0, c not in {-b^(n+m+1) lambda_PB, -b^(n+m+1) lambda_PB/2}"
            }
            FamilyId::PowerGap => {
                "gcd(n, m) = 1, n - m >= 2, n >= 5, m >= 1, b not in {0, (n-m)/(2m)} and not u(n-m)/m for u in {1, -1, i, -i} with u^(n-m) = 1"
            }
            FamilyId::Thm23 => "n >= 6, ab != 0, a^2 = lambda_thm23 b with lambda_thm23 = 4(1 - 1/(n-1)^2)",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        FamilyId::ALL
            .into_iter()
            .find(|f| f.cli_name() == lower || f.display_name().to_ascii_lowercase() == lower)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family '{0}' (try list-families)")]
    UnknownFamily(String),
    #[error("family {family} has no parameter '{name}' (parameters: {expected})")]
    UnknownParameter {
        family: FamilyId,
        name: String,
        expected: String,
    },
    #[error("family {family} needs parameter '{name}'")]
    MissingParameter { family: FamilyId, name: String },
    #[error("parameter '{name}' must be a non-negative integer, got {value}")]
    NotAnInteger { name: String, value: String },
    #[error("parameter '{name}': {message}")]
    BadValue { name: String, message: String },
    #[error("family {family}: constraint violated: {constraint}{}", excluded_suffix(.excluded))]
    Constraint {
        family: FamilyId,
        constraint: String,
        excluded: Vec<GR>,
    },
}

fn excluded_suffix(excluded: &[GR]) -> String {
    if excluded.is_empty() {
        String::new()
    } else {
        let items: Vec<String> = excluded.iter().map(|v| v.to_string()).collect();
        format!(" (excluded set: {{{}}})", items.join(", "))
    }
}

/// A family with concrete parameter values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: FamilyId,
    pub params: BTreeMap<String, GR>,
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_{i=0..m} C(m,i) (-1)^i / (n+m+1-i)`.
pub fn lambda_pb(n: usize, m: usize) -> GR {
    let big_n = n + m + 1;
    let sum = (0..=m).fold(BigRational::from_integer(0.into()), |acc, i| {
        let sign: BigInt = if i % 2 == 0 { 1.into() } else { (-1).into() };
        acc + BigRational::new(sign * binomial(m, i), BigInt::from(big_n - i))
    });
    GR::from_rational(sum)
}

/// `Σ_{i,j} C(m,i) C(n,j) (-1)^(i+j) a^j b^i z^(N-i-j) / (N-i-j)`, the
/// antiderivative of `(z-b)^m (z-a)^n` vanishing at 0.
pub fn generalized_q(n: usize, m: usize, a: &GR, b: &GR) -> Poly {
    let big_n = n + m + 1;
    let mut coeffs = vec![GR::zero(); big_n + 1];
    for i in 0..=m {
        for j in 0..=n {
            let power = big_n - i - j;
            let sign: i64 = if (i + j) % 2 == 0 { 1 } else { -1 };
            let c = BigRational::new(sign * binomial(m, i) * binomial(n, j), BigInt::from(power));
            let term = &(&a.pow(j as u32) * &b.pow(i as u32)) * &GR::from_rational(c);
            coeffs[power] = &coeffs[power] + &term;
        }
    }
    Poly::new(coeffs)
}

impl FamilySpec {
    pub fn new(family: FamilyId, params: impl IntoIterator<Item = (&'static str, GR)>) -> Self {
        FamilySpec {
            family,
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        }
    }

    pub fn py(n: i64, r: i64, a: GR, b: GR) -> Self {
        Self::new(FamilyId::Py, [("n", GR::from_int(n)), ("r", GR::from_int(r)), ("a", a), ("b", b)])
    }

    pub fn pfr(n: i64, c: GR) -> Self {
        Self::new(FamilyId::Pfr, [("n", GR::from_int(n)), ("c", c)])
    }

    pub fn pb(n: i64, m: i64, c: GR) -> Self {
        Self::new(FamilyId::Pb, [("n", GR::from_int(n)), ("m", GR::from_int(m)), ("c", c)])
    }

    pub fn generalized(n: i64, m: i64, a: GR, b: GR, c: GR) -> Self {
        Self::new(
            FamilyId::GeneralizedP,
            [("n", GR::from_int(n)), ("m", GR::from_int(m)), ("a", a), ("b", b), ("c", c)],
        )
    }

    pub fn shifted_pb(n: i64, m: i64, b: GR, c: GR) -> Self {
        Self::new(
            FamilyId::ShiftedPb,
            [("n", GR::from_int(n)), ("m", GR::from_int(m)), ("b", b), ("c", c)],
        )
    }

    pub fn power_gap(n: i64, m: i64, b: GR) -> Self {
        Self::new(FamilyId::PowerGap, [("n", GR::from_int(n)), ("m", GR::from_int(m)), ("b", b)])
    }

    pub fn thm23(n: i64, a: GR, b: GR) -> Self {
        Self::new(FamilyId::Thm23, [("n", GR::from_int(n)), ("a", a), ("b", b)])
    }

    /// Builds a spec from textual `name=value` pairs; values use the
    /// polynomial grammar's constant syntax (`3/4`, `1+i`, ...).
    pub fn from_text(family: &str, params: &[(String, String)]) -> Result<Self, FamilyError> {
        let family: FamilyId = family.parse()?;
        let mut map = BTreeMap::new();
        for (name, text) in params {
            if !family.parameters().contains(&name.as_str()) {
                return Err(FamilyError::UnknownParameter {
                    family,
                    name: name.clone(),
                    expected: family.parameters().join(", "),
                });
            }
            let value = parse_constant(text).map_err(|e| FamilyError::BadValue {
                name: name.clone(),
                message: e.to_string(),
            })?;
            map.insert(name.clone(), value);
        }
        Ok(FamilySpec {
            family,
            params: map,
        })
    }

    fn value(&self, name: &str) -> Result<GR, FamilyError> {
        self.params
            .get(name)
            .cloned()
            .ok_or_else(|| FamilyError::MissingParameter {
                family: self.family,
                name: name.to_string(),
            })
    }

    fn int(&self, name: &str) -> Result<usize, FamilyError> {
        debug_assert!(self.family.is_integer_parameter(name));
        let v = self.value(name)?;
        let not_int = || FamilyError::NotAnInteger {
            name: name.to_string(),
            value: v.to_string(),
        };
        if !v.is_real() || !v.re().is_integer() {
            return Err(not_int());
        }
        v.re().to_integer().to_usize().ok_or_else(not_int)
    }

    fn violated(&self, constraint: impl Into<String>, excluded: Vec<GR>) -> FamilyError {
        FamilyError::Constraint {
            family: self.family,
            constraint: constraint.into(),
            excluded,
        }
    }

    fn check(&self, holds: bool, constraint: &str) -> Result<(), FamilyError> {
        if holds {
            Ok(())
        } else {
            Err(self.violated(constraint, Vec::new()))
        }
    }

    fn check_excluded(&self, name: &str, value: &GR, excluded: Vec<GR>) -> Result<(), FamilyError> {
        if excluded.contains(value) {
            let items: Vec<String> = excluded.iter().map(|v| v.to_string()).collect();
            return Err(self.violated(
                format!("{name} = {value} is excluded, need {name} not in {{{}}}", items.join(", ")),
                excluded,
            ));
        }
        Ok(())
    }

    /// Values the family's free constant must avoid, as `(parameter, set)`.
    pub fn excluded_set(&self) -> Result<(String, Vec<GR>), FamilyError> {
        let half = GR::ratio(1, 2);
        Ok(match self.family {
            FamilyId::Py => ("b".into(), vec![GR::zero()]),
            FamilyId::Pfr => ("c".into(), vec![GR::zero(), GR::one(), half]),
            FamilyId::Pb => {
                let l = lambda_pb(self.int("n")?, self.int("m")?);
                ("c".into(), vec![GR::zero(), -l.clone(), -(&l * &half)])
            }
            FamilyId::GeneralizedP => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                let (a, b) = (self.value("a")?, self.value("b")?);
                let q = generalized_q(n, m, &a, &b);
                let (qa, qb) = (q.eval(&a), q.eval(&b));
                let mid = -(&(&qa + &qb) * &half);
                ("c".into(), dedup(vec![GR::zero(), -qa, -qb, mid]))
            }
            FamilyId::ShiftedPb => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                let b = self.value("b")?;
                let shift = &b.pow((n + m + 1) as u32) * &lambda_pb(n, m);
                ("c".into(), dedup(vec![GR::zero(), -shift.clone(), -(&shift * &half)]))
            }
            FamilyId::PowerGap => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                let gap = GR::ratio((n - m.min(n)) as i64, m.max(1) as i64);
                let mut set = vec![GR::zero(), &gap * &half];
                for unit in [GR::one(), -GR::one(), GR::i(), -GR::i()] {
                    if unit.pow((n - m.min(n)) as u32).is_one() {
                        set.push(&unit.pow(m as u32) * &gap);
                    }
                }
                ("b".into(), dedup(set))
            }
            FamilyId::Thm23 => ("b".into(), vec![GR::zero()]),
        })
    }

    /// Validates every constraint and builds the polynomial.
    pub fn construct(&self) -> Result<Poly, FamilyError> {
        self.check_structure()?;
        let (name, excluded) = self.excluded_set()?;
        let value = self.value(&name)?;
        self.check_excluded(&name, &value, excluded)?;
        match self.family {
            FamilyId::Py => self.check(!self.value("a")?.is_zero(), "ab != 0")?,
            FamilyId::GeneralizedP => {
                let (a, b) = (self.value("a")?, self.value("b")?);
                self.check(!b.is_zero(), "b != 0")?;
                self.check(a != b, "a != b")?;
            }
            FamilyId::ShiftedPb => self.check(!self.value("b")?.is_zero(), "bc != 0")?,
            FamilyId::Thm23 => {
                let n = self.int("n")?;
                let (a, b) = (self.value("a")?, self.value("b")?);
                self.check(!a.is_zero(), "ab != 0")?;
                let lambda = lambda_thm23(n).expect("n >= 6");
                self.check(&a * &a == &lambda * &b, "a^2 = lambda_thm23 * b")?;
            }
            _ => {}
        }
        self.build_unchecked()
    }

    /// Degree bounds, gcd conditions and parameter presence; no excluded sets.
    fn check_structure(&self) -> Result<(), FamilyError> {
        for name in self.family.parameters() {
            if self.family.is_integer_parameter(name) {
                self.int(name)?;
            } else {
                self.value(name)?;
            }
        }
        match self.family {
            FamilyId::Py => {
                let (n, r) = (self.int("n")?, self.int("r")?);
                self.check(n >= 6, "n >= 6")?;
                self.check((2..n).contains(&r), "2 <= r < n")?;
                self.check(n.gcd(&r) == 1, "gcd(n, r) = 1")
            }
            FamilyId::Pfr => self.check(self.int("n")? >= 5, "n >= 5"),
            FamilyId::Pb | FamilyId::GeneralizedP | FamilyId::ShiftedPb => {
                self.check(self.int("n")? >= 1 && self.int("m")? >= 1, "n >= 1 and m >= 1")
            }
            FamilyId::PowerGap => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                self.check(m >= 1, "m >= 1")?;
                self.check(n >= 5, "n >= 5")?;
                self.check(n >= m + 2, "n - m >= 2")?;
                self.check(n.gcd(&m) == 1, "gcd(n, m) = 1")
            }
            FamilyId::Thm23 => self.check(self.int("n")? >= 6, "n >= 6"),
        }
    }

    /// The polynomial for these parameters, skipping every validity check
    /// except that the parameters exist and have the right type.
    pub fn build_unchecked(&self) -> Result<Poly, FamilyError> {
        Ok(match self.family {
            FamilyId::Py => {
                let (n, r) = (self.int("n")?, self.int("r")?);
                let mut p = &Poly::monomial(GR::one(), n) + &Poly::constant(self.value("b")?);
                if r <= n {
                    p = &p + &Poly::monomial(self.value("a")?, n - r);
                }
                p
            }
            FamilyId::Pfr => {
                let n = self.int("n")? as i64;
                if n < 2 {
                    return Err(self.violated("n >= 2", Vec::new()));
                }
                let n = n as usize;
                let ni = n as i64;
                let c = self.value("c")?;
                &(&(&Poly::monomial(GR::ratio((ni - 1) * (ni - 2), 2), n)
                    + &Poly::monomial(GR::from_int(-ni * (ni - 2)), n - 1))
                    + &Poly::monomial(GR::ratio(ni * (ni - 1), 2), n - 2))
                    - &Poly::constant(c)
            }
            FamilyId::Pb => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                &generalized_q(n, m, &GR::zero(), &GR::one()) + &Poly::constant(self.value("c")?)
            }
            FamilyId::GeneralizedP => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                let q = generalized_q(n, m, &self.value("a")?, &self.value("b")?);
                &q + &Poly::constant(self.value("c")?)
            }
            FamilyId::ShiftedPb => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                &generalized_q(n, m, &GR::zero(), &self.value("b")?)
                    + &Poly::constant(self.value("c")?)
            }
            FamilyId::PowerGap => {
                let (n, m) = (self.int("n")?, self.int("m")?);
                if m == 0 {
                    return Err(self.violated("m >= 1", Vec::new()));
                }
                &(&Poly::monomial(GR::one(), n)
                    + &Poly::monomial(-GR::ratio(n as i64, m as i64), m))
                    + &Poly::constant(self.value("b")?)
            }
            FamilyId::Thm23 => {
                let n = self.int("n")?;
                if n < 2 {
                    return Err(self.violated("n >= 2", Vec::new()));
                }
                &(&Poly::monomial(GR::one(), n) + &Poly::monomial(self.value("a")?, n - 1))
                    + &Poly::monomial(self.value("b")?, n - 2)
            }
        })
    }
}

fn dedup(mut v: Vec<GR>) -> Vec<GR> {
    let mut out = Vec::new();
    for x in v.drain(..) {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn construct_family(spec: &FamilySpec) -> Result<Poly, FamilyError> {
    spec.construct()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub id: String,
    pub name: String,
    pub parameters: Vec<String>,
    pub formula: String,
    pub constraints: String,
}

pub fn list_families() -> Vec<FamilyInfo> {
    FamilyId::ALL
        .into_iter()
        .map(|f| FamilyInfo {
            id: f.cli_name().to_string(),
            name: f.display_name().to_string(),
            parameters: f.parameters().iter().map(|p| p.to_string()).collect(),
            formula: f.formula().to_string(),
            constraints: f.constraints().to_string(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_pb(3, 2), GR::ratio(1, 60));
        assert_eq!(lambda_pb(3, 3), GR::ratio(-1, 140));
    }

    #[test]
    fn frank_reinders_coefficients() {
        let p = FamilySpec::pfr(6, GR::from_int(2)).construct().unwrap();
        assert_eq!(p, parse_poly("10z^6 - 24z^5 + 15z^4 - 2").unwrap());
        for c in [GR::zero(), GR::one(), GR::ratio(1, 2)] {
            let err = FamilySpec::pfr(6, c).construct().unwrap_err();
            assert!(err.to_string().contains("{0, 1, 1/2}"), "{err}");
        }
        assert!(FamilySpec::pfr(5, GR::from_int(2)).construct().is_ok());
        assert!(FamilySpec::pfr(4, GR::from_int(2)).construct().is_err());
    }

    #[test]
    fn degree_six_pb() {
        let p = FamilySpec::pb(3, 2, GR::one()).construct().unwrap();
        assert_eq!(p, parse_poly("1/6 z^6 - 2/5 z^5 + 1/4 z^4 + 1").unwrap());
        assert!(FamilySpec::pb(3, 2, GR::ratio(-1, 60)).construct().is_err());
        assert!(FamilySpec::pb(3, 2, GR::ratio(-1, 120)).construct().is_err());
        assert!(FamilySpec::pb(2, 2, GR::one()).construct().is_ok());
    }

    #[test]
    fn generalized_reduces_to_pb() {
        for (n, m) in [(3, 2), (2, 3), (4, 4), (1, 5)] {
            let g = FamilySpec::generalized(n, m, GR::zero(), GR::one(), GR::from_int(3));
            let b = FamilySpec::pb(n, m, GR::from_int(3));
            assert_eq!(g.construct().unwrap(), b.construct().unwrap());
        }
    }

    #[test]
    fn generalized_derivative_profile() {
        let (a, b) = (GR::complex(1, 2, 1, 1), GR::from_int(-2));
        let q = generalized_q(3, 2, &a, &b);
        let expected = Poly::from_roots([(&b, 2), (&a, 3)]);
        assert_eq!(q.derivative(), expected);
        assert!(q.eval(&GR::zero()).is_zero());
    }

    #[test]
    fn power_gap_excluded_set() {
        let spec = FamilySpec::power_gap(7, 5, GR::one());
        let (name, set) = spec.excluded_set().unwrap();
        assert_eq!(name, "b");
        assert_eq!(set, vec![GR::zero(), GR::ratio(1, 5), GR::ratio(2, 5), GR::ratio(-2, 5)]);
        assert_eq!(spec.construct().unwrap(), parse_poly("z^7 - 7/5 z^5 + 1").unwrap());
        for b in set {
            assert!(FamilySpec::power_gap(7, 5, b).construct().is_err());
        }
        assert!(FamilySpec::power_gap(8, 6, GR::one()).construct().is_err());
    }

    #[test]
    fn shifted_pb_at_unit_shift_is_pb() {
        let s = FamilySpec::shifted_pb(3, 2, GR::one(), GR::one()).construct().unwrap();
        assert_eq!(s, FamilySpec::pb(3, 2, GR::one()).construct().unwrap());
        assert!(FamilySpec::shifted_pb(3, 2, GR::zero(), GR::one()).construct().is_err());
    }

    #[test]
    fn text_parameters() {
        let params = vec![("n".to_string(), "6".to_string()), ("c".to_string(), "2".to_string())];
        let spec = FamilySpec::from_text("pfr", &params).unwrap();
        assert_eq!(spec, FamilySpec::pfr(6, GR::from_int(2)));
        let bad = vec![("n".to_string(), "5/2".to_string()), ("c".to_string(), "2".to_string())];
        assert!(matches!(
            FamilySpec::from_text("pfr", &bad).unwrap().construct(),
            Err(FamilyError::NotAnInteger { .. })
        ));
        assert!(matches!(FamilySpec::from_text("nope", &[]), Err(FamilyError::UnknownFamily(_))));
        let missing = FamilySpec::from_text("pb", &params).unwrap().construct();
        assert!(matches!(missing, Err(FamilyError::MissingParameter { .. })));
    }

    #[test]
    fn thm23_family() {
        let ok = FamilySpec::thm23(6, GR::from_int(4), GR::ratio(25, 6)).construct().unwrap();
        assert_eq!(ok, parse_poly("z^6 + 4z^5 + 25/6 z^4").unwrap());
        assert!(FamilySpec::thm23(6, GR::from_int(4), GR::one()).construct().is_err());
    }

    #[test]
    fn yi_family_constraints() {
        assert!(FamilySpec::py(7, 3, GR::one(), GR::one()).construct().is_ok());
        assert!(FamilySpec::py(6, 3, GR::one(), GR::one()).construct().is_err());
        assert!(FamilySpec::py(7, 3, GR::zero(), GR::one()).construct().is_err());
    }
}
