use serde_json::Value;

use super::{int_list, CertBuilder, Certificate, Conclusion, TheoremId};
use crate::arith::GR;
use crate::critical::{pairwise_value_sum_poly, sum_of_critical_values, CriticalStructure};
use crate::poly::{resultant, Poly};

fn sorted_multiplicities(cs: &CriticalStructure) -> Vec<usize> {
    let mut q = cs.multiplicities();
    q.sort_unstable_by(|a, b| b.cmp(a));
    q
}

fn base_witnesses(b: &mut CertBuilder, cs: &CriticalStructure) {
    b.witness("n", cs.degree)
        .witness("k", cs.k)
        .witness("q", int_list(&sorted_multiplicities(cs)))
        .witness("critically_injective", cs.critically_injective);
}

/// Uniqueness criterion for critically injective polynomials:
/// UPM iff `Σ_{l<m} q_l q_m > Σ q_l`. A failure refutes UPM.
pub fn check_fujimoto_a(cs: &CriticalStructure) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::FujimotoA);
    base_witnesses(&mut b, cs);
    if !cs.critically_injective {
        b.inconclusive("not critically injective");
        return b.finish(Conclusion::None);
    }
    let q = cs.multiplicities();
    let total: usize = q.iter().sum();
    let squares: usize = q.iter().map(|x| x * x).sum();
    let pair_products = (total * total - squares) / 2;
    b.witness("pair_product_sum", pair_products)
        .witness("multiplicity_sum", total);
    let holds = b.require("sum q_l q_m > sum q_l", pair_products > total);
    b.witness("refutes_upm", !holds);
    b.finish(Conclusion::Upm)
}

/// SUPM when `k >= 4` and the critical values do not sum to zero.
pub fn check_fujimoto_b(cs: &CriticalStructure) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::FujimotoB);
    base_witnesses(&mut b, cs);
    let sum = sum_of_critical_values(cs);
    b.gr("value_sum", &sum);
    b.require("critically_injective", cs.critically_injective);
    b.require("k >= 4", cs.k >= 4);
    b.require("sum of critical values != 0", !sum.is_zero());
    b.finish(Conclusion::Supm)
}

/// SUPM for `k = 3` when some `q_i >= 2`, no two critical values are
/// opposite, and no value squared equals the product of the other two.
pub fn check_fujimoto_c(cs: &CriticalStructure) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::FujimotoC);
    base_witnesses(&mut b, cs);
    b.require("critically_injective", cs.critically_injective);
    if !b.require("k = 3", cs.k == 3) {
        return b.finish(Conclusion::Supm);
    }
    let q = sorted_multiplicities(cs);
    b.require("max q >= 2", q[0] >= 2);

    let r = &cs.critical_value_poly;
    b.poly("critical_value_poly", r);
    let pair_sums = pairwise_value_sum_poly(cs).expect("k = 3");
    let at_zero = pair_sums.eval(&GR::zero());
    b.poly("pair_sum_poly", &pair_sums).gr("pair_sum_poly_at_0", &at_zero);
    b.require("ratio != -1", !at_zero.is_zero());
    // Ratio +1 would need two equal values, excluded by injectivity.
    b.witness("ratio_plus_one_excluded_by_injectivity", cs.critically_injective);

    // For roots r_l, r_m, r_n of the monic cubic: r_m^2 - r_l r_n = e1 r_m - e2.
    let e1 = -r.coeff(2);
    let e2 = r.coeff(1);
    let linear = Poly::new(vec![-e2, e1]);
    let product = if linear.is_zero() {
        GR::zero()
    } else {
        resultant(r, &linear).expect("nonzero")
    };
    b.gr("permutation_product", &product);
    b.require("permutation condition", !product.is_zero());
    b.finish(Conclusion::Supm)
}

/// SUPM for `k = 2` (sorted `q1 <= q2`) under
/// (1) `q1 >= 3` and `P(d1) + P(d2) != 0`, or (2) `q1 >= 2` and `q2 >= q1 + 3`.
pub fn check_fujimoto_d(cs: &CriticalStructure) -> Certificate {
    let mut b = CertBuilder::new(TheoremId::FujimotoD);
    base_witnesses(&mut b, cs);
    b.require("critically_injective", cs.critically_injective);
    if !b.require("k = 2", cs.k == 2) {
        return b.finish(Conclusion::Supm);
    }
    let mut q = cs.multiplicities();
    q.sort_unstable();
    let (q1, q2) = (q[0], q[1]);
    let sum = sum_of_critical_values(cs);
    let clause_1 = q1 >= 3 && !sum.is_zero();
    let clause_2 = q1 >= 2 && q2 >= q1 + 3;
    b.witness("q1", q1)
        .witness("q2", q2)
        .gr("value_sum", &sum)
        .witness("clause_1", clause_1)
        .witness("clause_2", clause_2);
    let satisfied: Vec<Value> = [(clause_1, "1"), (clause_2, "2")]
        .into_iter()
        .filter(|(ok, _)| *ok)
        .map(|(_, name)| Value::from(name))
        .collect();
    b.witness("satisfied_clauses", Value::Array(satisfied));
    b.require("clause (1) or (2)", clause_1 || clause_2);
    b.finish(Conclusion::Supm)
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

    /// Antiderivative of `Π (z - r)^e` plus `c`.
    fn integrated(roots: &[(i64, usize)], c: GR) -> CriticalStructure {
        let rs: Vec<(GR, usize)> = roots.iter().map(|&(r, e)| (GR::from_int(r), e)).collect();
        let dp = Poly::from_roots(rs.iter().map(|(r, e)| (r, *e)));
        analyze(&(&dp.integral() + &Poly::constant(c))).unwrap()
    }

    /// A k = 3 structure (q = {2, 1, 1}) whose critical values are replaced by `values`.
    fn with_values(values: &[i64]) -> CriticalStructure {
        let mut cs = integrated(&[(0, 2), (1, 1), (2, 1)], GR::from_int(1));
        let vs: Vec<GR> = values.iter().map(|&v| GR::from_int(v)).collect();
        cs.critical_value_poly = Poly::from_roots(vs.iter().map(|v| (v, 1)));
        cs.critically_injective = cs.critical_value_poly.is_squarefree();
        cs
    }

    #[test]
    fn theorem_a_examples() {
        // q = {3, 2}
        let cert = check_fujimoto_a(&integrated(&[(0, 3), (1, 2)], GR::one()));
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.conclusion, Conclusion::Upm);
        assert_eq!(cert.witness_int("pair_product_sum"), Some(6));
        // k = 1: (z - 2)^4 - 3
        let cert = check_fujimoto_a(&cs_of("(z-2)^4 - 3"));
        assert_eq!(cert.verdict, Verdict::HypothesisFailed);
        assert_eq!(cert.witness_bool("refutes_upm"), Some(true));
        // q = {2, 2}
        let cert = check_fujimoto_a(&integrated(&[(0, 2), (1, 2)], GR::from_int(3)));
        assert_eq!(cert.verdict, Verdict::HypothesisFailed);
        // not injective
        let cert = check_fujimoto_a(&cs_of("z^4 - 2z^2"));
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert_eq!(cert.reason.as_deref(), Some("not critically injective"));
    }

    #[test]
    fn theorem_b_on_yi_polynomial() {
        // z^7 + z^4 + 1: P' = z^3 (7 z^3 + 4), so k = 4
        let cs = cs_of("z^7 + z^4 + 1");
        assert_eq!(cs.k, 4);
        let cert = check_fujimoto_b(&cs);
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.witness_gr("value_sum"), Some(GR::from_int(4)));
        let cert = check_fujimoto_b(&integrated(&[(0, 2), (1, 1), (2, 1)], GR::one()));
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("k >= 4"));
    }

    #[test]
    fn theorem_c_examples() {
        let geometric = check_fujimoto_c(&with_values(&[1, 2, 4]));
        assert_eq!(geometric.failed_hypothesis.as_deref(), Some("permutation condition"));
        let good = check_fujimoto_c(&with_values(&[1, 2, 5]));
        assert_eq!(good.verdict, Verdict::Certified);
        let opposite = check_fujimoto_c(&with_values(&[1, -1, 3]));
        assert_eq!(opposite.failed_hypothesis.as_deref(), Some("ratio != -1"));
        let k2 = check_fujimoto_c(&integrated(&[(0, 3), (1, 2)], GR::one()));
        assert_eq!(k2.failed_hypothesis.as_deref(), Some("k = 3"));
    }

    #[test]
    fn theorem_d_examples() {
        // q = {2, 3}: neither clause
        let cert = check_fujimoto_d(&integrated(&[(0, 3), (1, 2)], GR::one()));
        assert_eq!(cert.failed_hypothesis.as_deref(), Some("clause (1) or (2)"));
        // q = {3, 3} with values c and c - 1/140
        let cs = integrated(&[(0, 3), (1, 3)], GR::one());
        let cert = check_fujimoto_d(&cs);
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.witness_gr("value_sum"), Some(GR::from_int(2) - GR::ratio(1, 140)));
        // q = {2, 5}
        let cert = check_fujimoto_d(&integrated(&[(0, 2), (1, 5)], GR::one()));
        assert_eq!(cert.verdict, Verdict::Certified);
        assert_eq!(cert.witness_bool("clause_2"), Some(true));
    }
}
