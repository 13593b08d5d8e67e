//! Critical points, critical values and fiber sizes of a polynomial.

use serde::Serialize;
use thiserror::Error;

use crate::arith::GR;
use crate::poly::roots::rational_roots;
use crate::poly::{
    bivariate_resultant_in_w, pair_sum_poly, squarefree_decompose, Poly, PolyError,
    SquareFreeDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("degree {degree} polynomial has no critical structure (degree must be at least 2)")]
    DegreeTooLow { degree: usize },
    #[error("need at least two critical points, found {k}")]
    TooFewCriticalPoints { k: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Where a critical point sits: an exact element of `Q(i)`, or all roots of a
/// monic factor of `P'` with no root in `Q(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Locus {
    Explicit { point: GR },
    Algebraic { factor: Poly },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CriticalValue {
    Explicit { value: GR },
    /// The values at the roots of the locus factor are the roots of `value_poly`.
    Algebraic { value_poly: Poly },
}

impl CriticalValue {
    pub fn explicit(&self) -> Option<&GR> {
        match self {
            CriticalValue::Explicit { value } => Some(value),
            CriticalValue::Algebraic { .. } => None,
        }
    }
}

/// One explicit critical point, or a conjugate group of `count` symbolic ones
/// sharing a multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalPoint {
    pub locus: Locus,
    /// Number of distinct critical points represented (1 when explicit).
    pub count: usize,
    pub derivative_multiplicity: usize,
    /// Order of the point as a root of `P - P(point)`.
    pub value_order: usize,
    pub critical_value: CriticalValue,
}

impl CriticalPoint {
    pub fn explicit_point(&self) -> Option<&GR> {
        match &self.locus {
            Locus::Explicit { point } => Some(point),
            Locus::Algebraic { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalStructure {
    pub polynomial: Poly,
    pub degree: usize,
    pub points: Vec<CriticalPoint>,
    /// Number of distinct critical points.
    pub k: usize,
    /// Monic `Res_z(S, w - P)`, `S` the square-free part of `P'`.
    pub critical_value_poly: Poly,
    /// Monic `Res_z(P', w - P)`.
    pub weighted_value_poly: Poly,
    pub critically_injective: bool,
    pub simple_zeros: bool,
    #[serde(skip)]
    pub derivative_decomposition: SquareFreeDecomposition,
    #[serde(skip)]
    pub weighted_value_decomposition: SquareFreeDecomposition,
}

impl CriticalStructure {
    /// Derivative multiplicities `q_i`, one per distinct critical point.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.points
            .iter()
            .flat_map(|p| std::iter::repeat_n(p.derivative_multiplicity, p.count))
            .collect()
    }

    pub fn explicit_points(&self) -> impl Iterator<Item = &CriticalPoint> {
        self.points.iter().filter(|p| p.explicit_point().is_some())
    }

    pub fn all_explicit(&self) -> bool {
        self.points.iter().all(|p| p.explicit_point().is_some())
    }

    /// Points with derivative multiplicity `q`.
    pub fn points_with_multiplicity(&self, q: usize) -> impl Iterator<Item = &CriticalPoint> {
        self.points
            .iter()
            .filter(move |p| p.derivative_multiplicity == q)
    }

    pub fn is_critical_value(&self, v: &GR) -> bool {
        self.critical_value_poly.eval(v).is_zero()
    }

    /// Number of distinct roots of `P - v`; `n` for non-critical `v`.
    pub fn fiber_count_of(&self, v: &GR) -> usize {
        self.degree - self.weighted_value_decomposition.multiplicity_of(v)
    }

    /// Whether `P'` has a simple zero.
    pub fn has_simple_critical_point(&self) -> bool {
        self.points.iter().any(|p| p.derivative_multiplicity == 1)
    }
}

pub fn analyze(p: &Poly) -> Result<CriticalStructure, AnalysisError> {
    let degree = p.degree_or_zero();
    if degree < 2 {
        return Err(AnalysisError::DegreeTooLow { degree });
    }
    let dp = p.derivative();
    let derivative_decomposition = squarefree_decompose(&dp)?;
    let mut points = Vec::new();
    for part in &derivative_decomposition.parts {
        let q = part.multiplicity;
        let extraction = rational_roots(&part.factor);
        for root in extraction.roots {
            let value = p.eval(&root);
            points.push(CriticalPoint {
                locus: Locus::Explicit { point: root },
                count: 1,
                derivative_multiplicity: q,
                value_order: q + 1,
                critical_value: CriticalValue::Explicit { value },
            });
        }
        if let Some(count) = extraction.residual.degree().filter(|&d| d > 0) {
            let value_poly = bivariate_resultant_in_w(&extraction.residual, p)?;
            points.push(CriticalPoint {
                locus: Locus::Algebraic {
                    factor: extraction.residual,
                },
                count,
                derivative_multiplicity: q,
                value_order: q + 1,
                critical_value: CriticalValue::Algebraic { value_poly },
            });
        }
    }
    let radical = derivative_decomposition.squarefree_part();
    let k = radical.degree_or_zero();
    let critical_value_poly = bivariate_resultant_in_w(&radical, p)?;
    let weighted_value_poly = bivariate_resultant_in_w(&dp, p)?;
    let weighted_value_decomposition = squarefree_decompose(&weighted_value_poly)?;
    let critically_injective = critical_value_poly.is_squarefree();
    let simple_zeros = p.gcd(&dp)?.is_constant();
    Ok(CriticalStructure {
        polynomial: p.clone(),
        degree,
        points,
        k,
        critical_value_poly,
        weighted_value_poly,
        critically_injective,
        simple_zeros,
        derivative_decomposition,
        weighted_value_decomposition,
    })
}

/// A critical value, or a group of `count` conjugate critical values, together
/// with the number of distinct roots of `P - value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberCount {
    pub value: CriticalValue,
    pub count: usize,
    pub distinct_preimages: usize,
}

/// One entry per distinct critical value (conjugate groups collapsed), read off
/// the square-free decomposition of the weighted value polynomial.
pub fn fiber_counts(cs: &CriticalStructure) -> Vec<FiberCount> {
    let mut explicit: Vec<GR> = cs
        .points
        .iter()
        .filter_map(|p| p.critical_value.explicit().cloned())
        .collect();
    explicit.sort_by(|a, b| a.canonical_cmp(b));
    explicit.dedup();

    let mut out = Vec::new();
    for part in &cs.weighted_value_decomposition.parts {
        let distinct_preimages = cs.degree - part.multiplicity;
        let mut residual = part.factor.clone();
        for v in explicit.iter().filter(|v| part.factor.eval(v).is_zero()) {
            residual = residual
                .exact_div(&Poly::linear_root(v))
                .expect("root divides");
            out.push(FiberCount {
                value: CriticalValue::Explicit { value: v.clone() },
                count: 1,
                distinct_preimages,
            });
        }
        if let Some(count) = residual.degree().filter(|&d| d > 0) {
            out.push(FiberCount {
                value: CriticalValue::Algebraic {
                    value_poly: residual,
                },
                count,
                distinct_preimages,
            });
        }
    }
    out
}

/// Monic polynomial whose roots are `P(d_l) + P(d_m)` over pairs `l < m` of
/// distinct critical points.
pub fn pairwise_value_sum_poly(cs: &CriticalStructure) -> Result<Poly, AnalysisError> {
    if cs.k < 2 {
        return Err(AnalysisError::TooFewCriticalPoints { k: cs.k });
    }
    Ok(pair_sum_poly(&cs.critical_value_poly)?)
}

/// `Σ P(d_i)` over distinct critical points.
pub fn sum_of_critical_values(cs: &CriticalStructure) -> GR {
    match cs.k {
        0 => GR::zero(),
        k => -cs.critical_value_poly.coeff(k - 1),
    }
}
