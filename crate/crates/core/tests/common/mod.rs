#![allow(dead_code)]

use proptest::prelude::*;
use supm::arith::GR;
use supm::poly::Poly;

pub fn small_rational() -> impl Strategy<Value = GR> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| GR::ratio(n, d))
}

pub fn gaussian() -> impl Strategy<Value = GR> {
    (-9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4).prop_map(|(a, b, c, d)| GR::complex(a, b, c, d))
}

pub fn nonzero_gaussian() -> impl Strategy<Value = GR> {
    gaussian().prop_filter("nonzero", |g| !g.is_zero())
}

pub fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(gaussian(), 0..=max_degree + 1).prop_map(Poly::new)
}

pub fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

/// Small Gaussian rational used as a root: coordinates in [-3, 3] with denominators up to 3.
pub fn root() -> impl Strategy<Value = GR> {
    (-6i64..=6, 1i64..=3, -3i64..=3, 1i64..=2).prop_map(|(a, b, c, d)| GR::complex(a, b, c, d))
}

/// Distinct roots with multiplicities, total multiplicity at most `max_total`.
pub fn root_profile(max_roots: usize, max_total: usize) -> impl Strategy<Value = Vec<(GR, usize)>> {
    prop::collection::vec((root(), 1usize..=4), 1..=max_roots).prop_map(move |raw| {
        let mut out: Vec<(GR, usize)> = Vec::new();
        let mut total = 0;
        for (r, e) in raw {
            if out.iter().any(|(s, _)| *s == r) || total + e > max_total {
                continue;
            }
            total += e;
            out.push((r, e));
        }
        out
    })
}

pub fn product(profile: &[(GR, usize)]) -> Poly {
    Poly::from_roots(profile.iter().map(|(r, e)| (r, *e)))
}

/// `c * integral(prod (z - r)^e) + shift`.
pub fn antiderivative(profile: &[(GR, usize)], c: &GR, shift: &GR) -> Poly {
    &product(profile).integral().scale(c) + &Poly::constant(shift.clone())
}
