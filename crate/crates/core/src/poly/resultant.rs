//! Resultants and the elimination polynomials built from them.
//!
//! Sign convention: `Res(f, g) = lc(f)^deg(g) · Π g(α)` over the roots `α` of
//! `f` counted with multiplicity. Everything downstream only asks whether a
//! resultant vanishes or which roots an eliminant has, so the convention never
//! leaks into a verdict.

use super::{Poly, PolyError};
use crate::arith::GR;
use crate::par;

pub fn resultant(f: &Poly, g: &Poly) -> Result<GR, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(resultant_nonzero(f.clone(), g.clone()))
}

fn resultant_nonzero(mut f: Poly, mut g: Poly) -> GR {
    // Invariant: result = scale · Res(f, g).
    let mut scale = GR::one();
    loop {
        let m = f.degree().expect("nonzero");
        let n = g.degree().expect("nonzero");
        let lc_f = f.leading().expect("nonzero").clone();
        if m == 0 {
            return &scale * &lc_f.pow(n as u32);
        }
        if n == 0 {
            return &scale * &g.coeffs[0].pow(m as u32);
        }
        // g(α) = r(α) at every root of f, so Res(f, g) = lc(f)^(n - deg r) · Res(f, r).
        let r = g.rem(&f).expect("f nonzero");
        let Some(dr) = r.degree() else {
            return GR::zero();
        };
        scale = &scale * &lc_f.pow((n - dr) as u32);
        // Res(f, r) = (-1)^(m·deg r) · Res(r, f).
        if (m * dr) % 2 == 1 {
            scale = -scale;
        }
        g = f;
        f = r;
    }
}

/// Newton interpolation through `(xs[j], ys[j])`; nodes must be distinct.
pub fn interpolate(xs: &[GR], ys: &[GR]) -> Poly {
    assert_eq!(xs.len(), ys.len(), "one value per node");
    let n = xs.len();
    let mut diffs = ys.to_vec();
    for level in 1..n {
        for j in (level..n).rev() {
            let num = &diffs[j] - &diffs[j - 1];
            let den = &xs[j] - &xs[j - level];
            diffs[j] = &num / &den;
        }
    }
    let mut poly = Poly::zero();
    for j in (0..n).rev() {
        poly = &(&poly * &Poly::linear_root(&xs[j])) + &Poly::constant(diffs[j].clone());
    }
    poly
}

/// Recovers a polynomial of degree at most `degree` from its values at
/// `w = 0, 1, …, degree`, evaluating in parallel.
fn interpolate_from_evaluations<F>(degree: usize, eval: F) -> Poly
where
    F: Fn(&GR) -> GR + Sync + Send,
{
    let nodes: Vec<GR> = (0..=degree as i64).map(GR::from_int).collect();
    let values = par::map(&nodes, |w| eval(w));
    interpolate(&nodes, &values)
}

/// `R(w) = Res_z(f(z), w - p(z))`, normalized to be monic.
///
/// The roots of `R` are the values `p(α)` over the roots `α` of `f`, with
/// multiplicity, so `deg R = deg f`. Computed as the characteristic
/// polynomial of multiplication by `p` on `Q(i)[z]/(f)`.
pub fn bivariate_resultant_in_w(f: &Poly, p: &Poly) -> Result<Poly, PolyError> {
    let deg_f = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if p.is_constant() {
        return Err(PolyError::ConstantPolynomial);
    }
    if deg_f == 0 {
        return Ok(Poly::one());
    }
    let f = f.monic();
    let reduced = p.rem(&f)?;
    Ok(charpoly(multiplication_matrix(&f, &reduced)))
}

/// Same eliminant as [`bivariate_resultant_in_w`], by evaluating the scalar
/// resultant at `deg f + 1` points and interpolating.
pub fn bivariate_resultant_by_interpolation(f: &Poly, p: &Poly) -> Result<Poly, PolyError> {
    let deg_f = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if p.is_constant() {
        return Err(PolyError::ConstantPolynomial);
    }
    if deg_f == 0 {
        return Ok(Poly::one());
    }
    // Only p mod f matters at the roots of f.
    let reduced = p.rem(f)?;
    let r = interpolate_from_evaluations(deg_f, |w| {
        let shifted = &Poly::constant(w.clone()) - &reduced;
        if shifted.is_zero() {
            GR::zero()
        } else {
            resultant_nonzero(f.clone(), shifted)
        }
    });
    debug_assert_eq!(r.degree(), Some(deg_f));
    Ok(r.monic())
}

/// Matrix of `x -> r·x mod f` in the basis `1, z, ..., z^(m-1)`; `f` monic of degree `m`.
fn multiplication_matrix(f: &Poly, r: &Poly) -> Vec<Vec<GR>> {
    let m = f.degree().expect("nonzero");
    let mut columns = Vec::with_capacity(m);
    let mut v: Vec<GR> = (0..m).map(|j| r.coeff(j)).collect();
    for _ in 0..m {
        columns.push(v.clone());
        // v <- z·v mod f
        let top = v.pop().expect("m >= 1");
        v.insert(0, GR::zero());
        if !top.is_zero() {
            for (j, c) in v.iter_mut().enumerate() {
                *c -= &(&top * &f.coeff(j));
            }
        }
    }
    (0..m).map(|i| columns.iter().map(|col| col[i].clone()).collect()).collect()
}

/// `det(x·I - M)` via similarity reduction to upper Hessenberg form.
fn charpoly(mut h: Vec<Vec<GR>>) -> Poly {
    let n = h.len();
    for k in 0..n.saturating_sub(2) {
        let Some(pivot) = (k + 1..n).find(|&i| !h[i][k].is_zero()) else {
            continue;
        };
        if pivot != k + 1 {
            h.swap(pivot, k + 1);
            for row in h.iter_mut() {
                row.swap(pivot, k + 1);
            }
        }
        let inv = h[k + 1][k].inv().expect("pivot nonzero");
        for j in k + 2..n {
            if h[j][k].is_zero() {
                continue;
            }
            let u = &h[j][k] * &inv;
            let (upper, lower) = h.split_at_mut(j);
            for (target, source) in lower[0][k..].iter_mut().zip(&upper[k + 1][k..]) {
                *target -= &(&u * source);
            }
            for row in h.iter_mut() {
                let delta = &u * &row[j];
                row[k + 1] += &delta;
            }
        }
    }
    let x = Poly::x();
    let mut ps: Vec<Poly> = vec![Poly::one()];
    for m in 1..=n {
        let mut next = &(&x - &Poly::constant(h[m - 1][m - 1].clone())) * &ps[m - 1];
        let mut t = GR::one();
        for i in (1..m).rev() {
            t = &t * &h[i][i - 1];
            if t.is_zero() {
                break;
            }
            let term = &h[i - 1][m - 1] * &t;
            next = &next - &ps[i - 1].scale(&term);
        }
        ps.push(next);
    }
    ps.pop().expect("n + 1 entries")
}

/// Monic polynomial whose roots are `α + β` over all roots `α` of `a` and `β`
/// of `b`: `Res_u(a(u), b(w - u))`, of degree `deg a · deg b`.
pub fn sum_poly(a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
    let da = a.degree().ok_or(PolyError::ZeroPolynomial)?;
    let db = b.degree().ok_or(PolyError::ZeroPolynomial)?;
    let degree = da * db;
    if degree == 0 {
        return Ok(Poly::one());
    }
    let s = interpolate_from_evaluations(degree, |w| {
        let reflected = b.compose(&Poly::new(vec![w.clone(), -GR::one()]));
        resultant_nonzero(a.clone(), reflected)
    });
    Ok(s.monic())
}

/// Monic polynomial whose roots are `r_l + r_m` over unordered pairs `l < m`
/// of roots of `r` (counted with multiplicity); degree `k(k-1)/2`.
///
/// The full root-sum polynomial `Res_u(r(u), r(w - u))` has every off-diagonal
/// sum twice and the diagonal sums `2·r_l` once; dividing out
/// `Π (w - 2 r_l) = 2^k r(w/2)` leaves a perfect square.
pub fn pair_sum_poly(r: &Poly) -> Result<Poly, PolyError> {
    let k = r.degree().ok_or(PolyError::ZeroPolynomial)?;
    if k < 2 {
        return Ok(Poly::one());
    }
    let r = r.monic();
    let all_sums = sum_poly(&r, &r)?;
    let diagonal = r.scale_argument(&GR::ratio(1, 2)).monic();
    let off_diagonal = all_sums
        .exact_div(&diagonal)
        .ok_or(PolyError::NotASquare)?;
    let pairs = off_diagonal.sqrt()?.monic();
    debug_assert_eq!(pairs.degree(), Some(k * (k - 1) / 2));
    Ok(pairs)
}
