use serde_json::Value;

use super::{check_fujimoto_a, int_list, CertBuilder, Certificate, Conclusion, TheoremId};
use crate::arith::GR;
use crate::critical::{fiber_counts, CriticalPoint, CriticalStructure, CriticalValue, FiberCount};
use crate::poly::{pair_sum_poly, sum_poly, Poly};

/// Which critical-point pairs the pair-sum criterion may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairMode {
    /// The pair(s) of maximal derivative multiplicity, as stated.
    #[default]
    Maximal,
    /// Every pair of distinct critical points (extension).
    AnyPair,
}

fn base_witnesses(b: &mut CertBuilder, cs: &CriticalStructure) {
    let mut q = cs.multiplicities();
    q.sort_unstable_by(|a, b| b.cmp(a));
    b.witness("n", cs.degree)
        .witness("k", cs.k)
        .witness("q", int_list(&q))
        .witness("simple_zeros", cs.simple_zeros)
        .witness("critically_injective", cs.critically_injective);
}

fn standing_hypotheses(b: &mut CertBuilder, cs: &CriticalStructure) -> bool {
    b.require("simple_zeros", cs.simple_zeros);
    b.require("critically_injective", cs.critically_injective);
    b.require("k >= 2", cs.k >= 2)
}

/// The SUPM criteria below assume a uniqueness polynomial; it is established
/// here through the uniqueness criterion for critically injective polynomials.
fn require_upm(b: &mut CertBuilder, cs: &CriticalStructure) {
    let upm = check_fujimoto_a(cs);
    b.witness("upm_route", TheoremId::FujimotoA.as_str())
        .witness("upm_verdict", serde_json::to_value(upm.verdict).expect("enum"));
    b.require("uniqueness polynomial", upm.is_certified());
}

fn value_text(v: &CriticalValue) -> String {
    match v {
        CriticalValue::Explicit { value } => value.to_string(),
        CriticalValue::Algebraic { value_poly } => format!("root of {}", value_poly.render_in('w')),
    }
}

/// Critical points sharing one derivative multiplicity.
struct Group<'a> {
    q: usize,
    members: Vec<&'a CriticalPoint>,
    count: usize,
}

impl Group<'_> {
    /// Monic polynomial whose roots are the critical values of the group.
    fn value_poly(&self) -> Poly {
        self.members.iter().fold(Poly::one(), |acc, p| match &p.critical_value {
            CriticalValue::Explicit { value } => &acc * &Poly::linear_root(value),
            CriticalValue::Algebraic { value_poly } => &acc * value_poly,
        })
    }

    fn explicit(&self) -> Vec<(GR, GR)> {
        self.members
            .iter()
            .filter_map(|p| {
                Some((p.explicit_point()?.clone(), p.critical_value.explicit()?.clone()))
            })
            .collect()
    }

    fn all_explicit(&self) -> bool {
        self.members.iter().all(|p| p.explicit_point().is_some())
    }
}

fn groups(cs: &CriticalStructure) -> Vec<Group<'_>> {
    let mut qs: Vec<usize> = cs.points.iter().map(|p| p.derivative_multiplicity).collect();
    qs.sort_unstable_by(|a, b| b.cmp(a));
    qs.dedup();
    qs.into_iter()
        .map(|q| {
            let members: Vec<_> = cs.points_with_multiplicity(q).collect();
            let count = members.iter().map(|p| p.count).sum();
            Group { q, members, count }
        })
        .collect()
}

fn is_pure_power_of_w(p: &Poly) -> bool {
    p.coeffs().iter().rev().skip(1).all(|c| c.is_zero())
}

/// Outcome of the value-sum test on one pair of groups.
struct SumCheck {
    nonzero: bool,
    /// `(alpha, beta, P(alpha) + P(beta))` for an explicit pair.
    pair: Option<(GR, GR, GR)>,
    /// Polynomial whose roots are all candidate sums, when symbolic points are involved.
    sums_poly: Option<Poly>,
}

fn check_sums(g1: &Group, g2: &Group, same: bool) -> SumCheck {
    let e1 = g1.explicit();
    let e2 = g2.explicit();
    let mut first = None;
    for (i, (a, va)) in e1.iter().enumerate() {
        let start = if same { i + 1 } else { 0 };
        for (b, vb) in e2.iter().skip(start) {
            let sum = va + vb;
            let nonzero = !sum.is_zero();
            if nonzero || first.is_none() {
                first = Some((a.clone(), b.clone(), sum));
            }
            if nonzero {
                return SumCheck { nonzero, pair: first, sums_poly: None };
            }
        }
    }
    if g1.all_explicit() && g2.all_explicit() {
        return SumCheck { nonzero: false, pair: first, sums_poly: None };
    }
    let sums = if same {
        pair_sum_poly(&g1.value_poly())
    } else {
        sum_poly(&g1.value_poly(), &g2.value_poly())
    }
    .expect("nonzero value polynomials");
    SumCheck {
        nonzero: !is_pure_power_of_w(&sums),
        pair: first,
        sums_poly: Some(sums),
    }
}

/// SUPM when the two critical points `alpha`, `beta` of largest multiplicity,
/// of orders `p` and `t` as value points, satisfy `max(t, p) + t + p >= 5 + n`
/// and `P(alpha) + P(beta) != 0`, for a critically injective uniqueness
/// polynomial with simple zeros.
pub fn check_thm_2_1(cs: &CriticalStructure, mode: PairMode) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::Thm21);
    base_witnesses(&mut b, cs);
    b.witness(
        "pair_mode",
        match mode {
            PairMode::Maximal => "maximal",
            PairMode::AnyPair => "any_pair (extension: scans every pair, beyond the stated theorem)",
        },
    );
    if !standing_hypotheses(&mut b, cs) {
        require_upm(&mut b, cs);
        return b.finish(Conclusion::Supm);
    }
    let gs = groups(cs);
    let candidates: Vec<(usize, usize)> = match mode {
        PairMode::Maximal if gs[0].count >= 2 => vec![(0, 0)],
        PairMode::Maximal => vec![(0, 1)],
        PairMode::AnyPair => (0..gs.len())
            .flat_map(|i| (i..gs.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j || gs[i].count >= 2)
            .collect(),
    };
    let n = cs.degree;
    let evaluations: Vec<_> = candidates
        .iter()
        .map(|&(i, j)| {
            let p = gs[i].q + 1;
            let t = gs[j].q + 1;
            let lhs = p.max(t) + t + p;
            let sums = check_sums(&gs[i], &gs[j], i == j);
            (p, t, lhs, lhs >= n + 5, sums)
        })
        .collect();
    let chosen = evaluations
        .iter()
        .position(|e| e.3 && e.4.nonzero)
        .or_else(|| evaluations.iter().position(|e| e.3))
        .unwrap_or(0);
    let (p, t, lhs, inequality, sums) = &evaluations[chosen];
    b.witness("p", *p)
        .witness("t", *t)
        .witness("inequality_lhs", *lhs)
        .witness("inequality_rhs", n + 5)
        .witness("candidate_pairs", candidates.len());
    if let Some((alpha, beta, sum)) = &sums.pair {
        b.gr("alpha", alpha).gr("beta", beta).gr("sum", sum);
    }
    if let Some(poly) = &sums.sums_poly {
        b.poly("pair_sum_poly", poly);
    }
    b.require("inequality", *inequality);
    b.require("P(alpha) + P(beta) != 0", sums.nonzero);
    require_upm(&mut b, cs);
    b.finish(Conclusion::Supm)
}

/// One distinct critical value of a fiber class.
#[derive(Clone)]
struct ValueSlot<'a> {
    class: usize,
    entry: &'a FiberCount,
}

fn fiber_candidates(fibers: &[FiberCount]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..fibers.len() {
        for j in i..fibers.len() {
            if i != j || fibers[i].count >= 2 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Fiber counts of every critical value other than one member of each of the
/// classes `skip`.
fn other_fibers(fibers: &[FiberCount], skip: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (idx, f) in fibers.iter().enumerate() {
        let removed = skip.iter().filter(|&&s| s == idx).count();
        out.extend(std::iter::repeat_n(f.distinct_preimages, f.count.saturating_sub(removed)));
    }
    out.sort_unstable();
    out
}

fn explicit_class(fibers: &[FiberCount], v: &GR) -> Option<usize> {
    fibers.iter().position(|f| f.value.explicit() == Some(v))
}

/// SUPM when critical values `P(gamma)`, `P(delta)` with fiber sizes `p`, `q`
/// satisfy `|p - q| >= 3` and every other value `d` has at least
/// `min(p, q) + 3` preimages. `selector` restricts the search to one pair of
/// explicit values; otherwise every pair is tried.
pub fn check_thm_2_2(cs: &CriticalStructure, selector: Option<(&GR, &GR)>) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::Thm22);
    base_witnesses(&mut b, cs);
    if !standing_hypotheses(&mut b, cs) {
        require_upm(&mut b, cs);
        return b.finish(Conclusion::Supm);
    }
    let fibers = fiber_counts(cs);
    b.witness(
        "fiber_counts",
        Value::Array(
            fibers
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "value": value_text(&f.value),
                        "count": f.count,
                        "distinct_preimages": f.distinct_preimages,
                    })
                })
                .collect(),
        ),
    );
    let candidates = match selector {
        Some((g, d)) => {
            let pair = explicit_class(&fibers, g).zip(explicit_class(&fibers, d));
            let ok = b.require(
                "selected values are distinct critical values",
                pair.is_some_and(|(i, j)| i != j),
            );
            if !ok {
                require_upm(&mut b, cs);
                return b.finish(Conclusion::Supm);
            }
            vec![pair.expect("checked")]
        }
        None => fiber_candidates(&fibers),
    };
    let n = cs.degree;
    let evaluations: Vec<_> = candidates
        .iter()
        .map(|&(i, j)| {
            let (fi, fj) = (fibers[i].distinct_preimages, fibers[j].distinct_preimages);
            let (gamma, delta) = if fi >= fj { (i, j) } else { (j, i) };
            let p = fi.max(fj);
            let q = fi.min(fj);
            let others = other_fibers(&fibers, &[i, j]);
            let diff = p - q >= 3;
            let n_ok = n >= q + 3;
            let others_ok = others.iter().all(|&f| f >= q + 3);
            (gamma, delta, p, q, others, diff, n_ok, others_ok)
        })
        .collect();
    let chosen = evaluations
        .iter()
        .position(|e| e.5 && e.6 && e.7)
        .or_else(|| evaluations.iter().position(|e| e.5))
        .unwrap_or(0);
    let (gamma, delta, p, q, others, diff, n_ok, others_ok) = &evaluations[chosen];
    b.witness("gamma_value", value_text(&fibers[*gamma].value))
        .witness("delta_value", value_text(&fibers[*delta].value))
        .witness("p", *p)
        .witness("q", *q)
        .witness("min_fiber_plus_3", q + 3)
        .witness("other_fibers", int_list(others))
        .witness("candidate_pairs", candidates.len());
    b.require("|p - q| >= 3", *diff);
    b.require("n >= min(p, q) + 3", *n_ok);
    b.require("other fibers >= min(p, q) + 3", *others_ok);
    require_upm(&mut b, cs);
    b.finish(Conclusion::Supm)
}

/// SUPM when some critical value is 1 (with fiber size `q`), another critical
/// value `P(gamma)` has `P(gamma)^2 ∉ {0, 1}`, `n >= q + 3`, and all remaining
/// critical values have at least `q + 3` preimages.
pub fn check_cor_2_1(cs: &CriticalStructure) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::Cor21);
    base_witnesses(&mut b, cs);
    if !standing_hypotheses(&mut b, cs) {
        require_upm(&mut b, cs);
        return b.finish(Conclusion::Supm);
    }
    let fibers = fiber_counts(cs);
    let one = GR::one();
    let Some(delta) = explicit_class(&fibers, &one) else {
        b.require("P(delta) = 1", false);
        require_upm(&mut b, cs);
        return b.finish(Conclusion::Supm);
    };
    let q = fibers[delta].distinct_preimages;
    b.witness("q", q).witness("q_plus_3", q + 3);
    let excluded = Poly::from_roots([(&GR::zero(), 1), (&GR::one(), 1), (&-GR::one(), 1)]);
    let gammas: Vec<ValueSlot> = fibers
        .iter()
        .enumerate()
        .filter(|&(idx, f)| {
            let members_left = if idx == delta { f.count - 1 } else { f.count };
            members_left > 0
                && match &f.value {
                    CriticalValue::Explicit { value } => {
                        let sq = value * value;
                        !sq.is_zero() && !sq.is_one()
                    }
                    CriticalValue::Algebraic { value_poly } => !value_poly.divides(&excluded),
                }
        })
        .map(|(class, entry)| ValueSlot { class, entry })
        .collect();
    if !b.require("P(gamma)^2 not in {0, 1}", !gammas.is_empty()) {
        b.require("n >= q + 3", cs.degree >= q + 3);
        require_upm(&mut b, cs);
        return b.finish(Conclusion::Supm);
    }
    let evaluations: Vec<_> = gammas
        .iter()
        .map(|g| {
            let others = other_fibers(&fibers, &[delta, g.class]);
            let ok = others.iter().all(|&f| f >= q + 3);
            (g, others, ok)
        })
        .collect();
    let chosen = evaluations.iter().position(|e| e.2).unwrap_or(0);
    let (gamma, others, others_ok) = &evaluations[chosen];
    b.witness("gamma_value", value_text(&gamma.entry.value))
        .witness("gamma_fiber", gamma.entry.distinct_preimages)
        .witness("other_fibers", int_list(others));
    if let Some(v) = gamma.entry.value.explicit() {
        b.gr("gamma_value_squared", &(v * v));
    }
    b.require("n >= q + 3", cs.degree >= q + 3);
    b.require("other fibers >= q + 3", *others_ok);
    require_upm(&mut b, cs);
    b.finish(Conclusion::Supm)
}

/// `4 (1 - 1/(n-1)^2)`; `None` for `n < 2`.
pub fn lambda_thm23(n: usize) -> Option<GR> {
    if n < 2 {
        return None;
    }
    let m = (n - 1) as i64;
    Some(GR::ratio(4 * (m * m - 1), m * m))
}

/// SUPM (with a multiple zero at the origin) for `z^n + a z^(n-1) + b z^(n-2)`
/// when `n >= 6`, `ab != 0` and `a^2 = lambda b`.
pub fn check_thm_2_3_family(n: usize, a: &GR, b_coeff: &GR) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::Thm23Family);
    b.witness("n", n).gr("a", a).gr("b", b_coeff);
    let lambda = lambda_thm23(n);
    let a_squared = a * a;
    b.gr("a_squared", &a_squared);
    if let Some(lambda) = &lambda {
        b.gr("lambda_thm23", lambda).gr("lambda_times_b", &(lambda * b_coeff));
    }
    b.require("n >= 6", n >= 6);
    b.require("ab != 0", !a.is_zero() && !b_coeff.is_zero());
    b.require(
        "a^2 = lambda*b",
        lambda.is_some_and(|l| a_squared == &l * b_coeff),
    );
    b.finish(Conclusion::Supm)
}

/// Reads `(n, a, b)` off a polynomial proportional to `z^n + a z^(n-1) + b z^(n-2)`.
pub fn recognize_thm_2_3(p: &Poly) -> Option<(usize, GR, GR)> {
    let n = p.degree()?;
    if n < 2 {
        return None;
    }
    let monic = p.monic();
    if monic.coeffs()[..n - 2].iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some((n, monic.coeff(n - 1), monic.coeff(n - 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::Verdict;
    use crate::critical::analyze;
    use crate::parser::parse_poly;

    fn cs_of(text: &str) -> CriticalStructure {
        analyze(&parse_poly(text).unwrap()).unwrap()
    }

    fn integrated(roots: &[(i64, usize)], c: GR) -> CriticalStructure {
        let rs: Vec<(GR, usize)> = roots.iter().map(|&(r, e)| (GR::from_int(r), e)).collect();
        let dp = Poly::from_roots(rs.iter().map(|(r, e)| (r, *e)));
        analyze(&(&dp.integral() + &Poly::constant(c))).unwrap()
    }

    #[test]
    fn thm_2_1_degree_six_examples() {
        // 10 z^6 - 24 z^5 + 15 z^4 - 2
        let cert = check_thm_2_1(&cs_of("10z^6 - 24z^5 + 15z^4 - 2"), PairMode::Maximal);
        assert_eq!(cert.verdict, Verdict::Certified, "{cert:?}");
        assert_eq!(cert.witness_int("p"), Some(4));
        assert_eq!(cert.witness_int("t"), Some(3));
        assert_eq!(cert.witness_gr("sum"), Some(GR::from_int(-3)));

        // z^3 (z - 1)^2 integrated, plus 1
        let cert = check_thm_2_1(&integrated(&[(0, 3), (1, 2)], GR::one()), PairMode::Maximal);
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.witness_gr("sum"), Some(GR::from_int(2) + GR::ratio(1, 60)));
    }

    #[test]
    fn thm_2_1_tied_maximum_fails_inequality() {
        // 6 z^5 - 15 z^4 + 10 z^3 - 2: P' = 30 z^2 (z - 1)^2
        let cert = check_thm_2_1(&cs_of("6z^5 - 15z^4 + 10z^3 - 2"), PairMode::Maximal);
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("inequality"));
        assert_eq!((cert.witness_int("t"), cert.witness_int("p")), (Some(3), Some(3)));
        assert_eq!(cert.witness_gr("sum"), Some(GR::from_int(-3)));
    }

    #[test]
    fn thm_2_1_symbolic_pair_sums() {
        // P' = (z - 1)^3 (z^2 - 2)^3: the maximal group is symbolic plus explicit
        let dp = parse_poly("(z-1)^3 (z^2-2)^3").unwrap();
        let p = &dp.integral() + &Poly::constant(GR::from_int(5));
        let cs = analyze(&p).unwrap();
        assert_eq!(cs.k, 3);
        let cert = check_thm_2_1(&cs, PairMode::Maximal);
        // orders 4, 4: 4 + 4 + 4 = 12 >= 15 fails
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("inequality"));
        assert!(cert.witness("pair_sum_poly").is_some());
        let any = check_thm_2_1(&cs, PairMode::AnyPair);
        assert_eq!(any.witness_int("candidate_pairs"), Some(1));
    }

    #[test]
    fn thm_2_2_examples() {
        // P' = z^2 (z - 1)^6, degree 9: fibers 7 and 3
        let cert = check_thm_2_2(&integrated(&[(0, 2), (1, 6)], GR::one()), None);
        assert_eq!(cert.verdict, Verdict::Certified, "{cert:?}");
        assert_eq!((cert.witness_int("p"), cert.witness_int("q")), (Some(7), Some(3)));
        // z^3 (z-1)^2 integrated: fibers 3 and 4
        let cert = check_thm_2_2(&integrated(&[(0, 3), (1, 2)], GR::one()), None);
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("|p - q| >= 3"));
        let cert = check_thm_2_2(&integrated(&[(0, 2), (1, 2)], GR::from_int(3)), None);
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("|p - q| >= 3"));
        assert_eq!(cert.witness_int("p"), cert.witness_int("q"));
    }

    #[test]
    fn cor_2_1_examples() {
        // P' = z^3 (z - 1)^2, P(0) = 1
        let cert = check_cor_2_1(&integrated(&[(0, 3), (1, 2)], GR::one()));
        assert_eq!(cert.verdict, Verdict::Certified, "{cert:?}");
        assert_eq!(cert.witness_int("q"), Some(3));
        // P' = z^2 (z - 1)^3, P(0) = 1: q = 4, needs 7 <= 6
        let cert = check_cor_2_1(&integrated(&[(0, 2), (1, 3)], GR::one()));
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("n >= q + 3"));
        let cert = check_cor_2_1(&integrated(&[(0, 3), (1, 2)], GR::from_int(2)));
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("P(delta) = 1"));
    }

    #[test]
    fn thm_2_3_examples() {
        let cert = check_thm_2_3_family(6, &GR::from_int(4), &GR::ratio(25, 6));
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.witness_gr("lambda_thm23"), Some(GR::ratio(96, 25)));
        let cert = check_thm_2_3_family(6, &GR::from_int(4), &GR::one());
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("a^2 = lambda*b"));
        let lambda5 = lambda_thm23(5).unwrap();
        let cert = check_thm_2_3_family(5, &GR::from_int(2), &(&GR::from_int(4) / &lambda5));
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("n >= 6"));
    }

    #[test]
    fn thm_2_3_recognizer() {
        let p = parse_poly("3z^6 + 12z^5 + 25/2 z^4").unwrap();
        assert_eq!(recognize_thm_2_3(&p), Some((6, GR::from_int(4), GR::ratio(25, 6))));
        assert_eq!(recognize_thm_2_3(&parse_poly("z^6 + z^3").unwrap()), None);
    }
}
