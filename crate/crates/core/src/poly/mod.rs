//! Dense univariate polynomials over `Q(i)`.

mod resultant;
pub mod roots;
mod squarefree;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::arith::GR;

pub use resultant::{
    bivariate_resultant_by_interpolation, bivariate_resultant_in_w, interpolate, pair_sum_poly,
    resultant, sum_poly,
};
pub use squarefree::{squarefree_decompose, SquareFreeDecomposition, SquareFreePart};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is not a perfect square")]
    NotASquare,
}

/// Coefficients in ascending powers, with no trailing zeros. The zero
/// polynomial has an empty coefficient vector and [`Poly::degree`] `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GR>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GR>) -> Self {
        while coeffs.last().is_some_and(GR::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GR::one())
    }

    pub fn constant(c: GR) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn x() -> Self {
        Self::monomial(GR::one(), 1)
    }

    pub fn monomial(c: GR, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GR::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    /// `z - r`.
    pub fn linear_root(r: &GR) -> Self {
        Poly {
            coeffs: vec![-r, GR::one()],
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GR::from_int(c)).collect())
    }

    /// Product of `(z - r)^e` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a GR, usize)>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, (r, e)| &acc * &Self::linear_root(r).pow(e))
    }

    pub fn coeffs(&self) -> &[GR] {
        &self.coeffs
    }

    /// Coefficient of `z^power`, zero past the degree.
    pub fn coeff(&self, power: usize) -> GR {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(GR::is_one)
    }

    pub fn leading(&self) -> Option<&GR> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &GR) -> GR {
        self.coeffs
            .iter()
            .rev()
            .fold(GR::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(power, c)| c * &GR::from_int(power as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(GR::zero());
        for (power, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&crate::arith::rational(1, power as i64 + 1)));
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &GR) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides through by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut exp: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(z))` by Horner's scheme.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    /// `self(u·z + v)`.
    pub fn affine_substitute(&self, u: &GR, v: &GR) -> Poly {
        self.compose(&Poly::new(vec![v.clone(), u.clone()]))
    }

    /// `self(c·z)`: coefficient of `z^j` multiplied by `c^j`.
    pub fn scale_argument(&self, c: &GR) -> Poly {
        let mut factor = GR::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for coeff in &self.coeffs {
            coeffs.push(coeff * &factor);
            factor = &factor * c;
        }
        Poly::new(coeffs)
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(GR::conj).collect())
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![GR::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[shift + j] -= &(&c * dc);
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        self.divrem(divisor).map(|(_, r)| r)
    }

    /// Quotient when `divisor` is known to divide `self`; `None` otherwise.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.divrem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Exact square root of a polynomial whose leading coefficient is a square in `Q(i)`.
    pub fn sqrt(&self) -> Result<Poly, PolyError> {
        let Some(deg) = self.degree() else {
            return Ok(Poly::zero());
        };
        if deg % 2 == 1 {
            return Err(PolyError::NotASquare);
        }
        let half = deg / 2;
        let lead = self.coeffs[deg].sqrt().ok_or(PolyError::NotASquare)?;
        let two_lead_inv = (&lead + &lead).inv().expect("nonzero");
        // Root coefficients from the top: t[half - j] solves the coefficient of z^(deg - j).
        let mut root = vec![GR::zero(); half + 1];
        root[half] = lead;
        for j in 1..=half {
            let target = deg - j;
            let mut acc = self.coeffs[target].clone();
            for a in (half - j + 1)..=half {
                let b = target - a;
                if b > half - j && b <= half {
                    acc -= &(&root[a] * &root[b]);
                }
            }
            root[half - j] = &acc * &two_lead_inv;
        }
        let root = Poly::new(root);
        if &(&root * &root) == self {
            Ok(root)
        } else {
            Err(PolyError::NotASquare)
        }
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self
                .gcd(&self.derivative())
                .is_ok_and(|g| g.is_constant()),
        }
    }

    /// Multiplicity of `r` as a root; `None` for the zero polynomial.
    pub fn root_multiplicity(&self, r: &GR) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = Poly::linear_root(r);
        let mut count = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(&lin) {
            count += 1;
            cur = q;
        }
        Some(count)
    }

    /// Canonical text in the variable `z`.
    pub fn render(&self) -> String {
        crate::parser::render_poly(self)
    }

    pub fn render_in(&self, var: char) -> String {
        crate::parser::render_poly_in(self, var)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GR::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'de> serde::Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::parser::parse_poly(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn ring_examples() {
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert!((p(&[0, 0, 0, 1]) - p(&[0, 0, 0, 1])).is_zero());
        let i = GR::i();
        let prod = Poly::linear_root(&-&i) * Poly::linear_root(&i);
        assert_eq!(prod, p(&[1, 0, 1]));
    }

    #[test]
    fn divrem_rejects_zero_divisor() {
        assert_eq!(p(&[1, 1]).divrem(&Poly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn divrem_degree_contract() {
        let f = p(&[3, -2, 0, 5, 7]);
        let g = Poly::new(vec![GR::ratio(1, 2), GR::complex(0, 1, 3, 1)]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(&(&q * &g) + &r, f);
        assert!(r.degree().is_none_or(|d| d < 1));
    }

    #[test]
    fn derivative_examples() {
        // z^n + a z^(n-1) + b z^(n-2) with n = 6, a = 4, b = 25/6.
        let f = Poly::new(vec![
            GR::zero(),
            GR::zero(),
            GR::zero(),
            GR::zero(),
            GR::ratio(25, 6),
            GR::from_int(4),
            GR::one(),
        ]);
        let expected = Poly::new(vec![
            GR::zero(),
            GR::zero(),
            GR::zero(),
            GR::ratio(50, 3),
            GR::from_int(20),
            GR::from_int(6),
        ]);
        assert_eq!(f.derivative(), expected);
        assert!(Poly::constant(GR::from_int(9)).derivative().is_zero());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 0, 1])).unwrap(), Poly::one());
        // (z-1)^2 (z+2) = z^3 - 3z + 2; derivative 3z^2 - 3.
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()).unwrap(), p(&[-1, 1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(PolyError::GcdOfZeros));
        assert_eq!(Poly::zero().gcd(&p(&[2, 4])).unwrap(), p(&[ 2, 4]).monic());
    }

    #[test]
    fn square_root() {
        let t = Poly::new(vec![GR::complex(1, 2, -1, 1), GR::from_int(3), GR::ratio(2, 3)]);
        assert_eq!((&t * &t).sqrt().unwrap().monic(), t.monic());
        assert_eq!(p(&[1, 0, 2]).sqrt(), Err(PolyError::NotASquare));
    }

    #[test]
    fn composition_and_affine_substitution() {
        let f = p(&[0, -3, 0, 1]);
        let g = f.affine_substitute(&GR::from_int(2), &GR::one());
        for x in -3..4 {
            let x = GR::from_int(x);
            let inner = &(&GR::from_int(2) * &x) + &GR::one();
            assert_eq!(g.eval(&x), f.eval(&inner));
        }
        assert_eq!(f.scale_argument(&GR::from_int(2)), f.compose(&p(&[0, 2])));
    }

    #[test]
    fn root_multiplicity_counts() {
        let f = Poly::from_roots([(&GR::one(), 3), (&GR::i(), 1)]);
        assert_eq!(f.root_multiplicity(&GR::one()), Some(3));
        assert_eq!(f.root_multiplicity(&GR::i()), Some(1));
        assert_eq!(f.root_multiplicity(&GR::zero()), Some(0));
    }
}
