//! Roots in `Q(i)` of polynomials over `Q(i)`.
//!
//! Linear and quadratic factors are solved in closed form (exact square roots
//! in `Q(i)`). Higher degrees use the rational root test over the Gaussian
//! integers: after clearing denominators, a root `p/q` in lowest terms has
//! `p | a_0` and `q | a_d` in `Z[i]`. Divisors come from factoring the norms;
//! if a norm resists factoring the extraction is reported as incomplete and
//! the leftover factor simply stays symbolic.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Poly;
use crate::arith::{BigRational, GR};

/// Upper bound on candidate roots tried for one polynomial.
const MAX_CANDIDATES: usize = 250_000;
const TRIAL_DIVISION_LIMIT: u64 = 20_000;
const RHO_ITERATIONS: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootExtraction {
    /// Distinct roots found in `Q(i)`, in canonical order.
    pub roots: Vec<GR>,
    /// Monic cofactor left after dividing out `(z - r)` once per found root.
    pub residual: Poly,
    /// `true` when the search was exhaustive, i.e. `residual` has no root in `Q(i)`.
    pub complete: bool,
}

/// Finds the roots of a square-free polynomial that lie in `Q(i)`.
pub fn rational_roots(f: &Poly) -> RootExtraction {
    let mut residual = f.monic();
    let mut roots = Vec::new();
    let mut complete = true;

    while residual.degree().is_some_and(|d| d >= 1) && residual.coeff(0).is_zero() {
        roots.push(GR::zero());
        residual = residual.exact_div(&Poly::x()).expect("z divides");
    }

    loop {
        match residual.degree() {
            None | Some(0) => break,
            Some(1) => {
                roots.push(-residual.coeff(0));
                residual = Poly::one();
                break;
            }
            Some(2) => {
                let b = residual.coeff(1);
                let c = residual.coeff(0);
                let disc = &(&b * &b) - &(&GR::from_int(4) * &c);
                if let Some(s) = disc.sqrt() {
                    let half = GR::ratio(1, 2);
                    for r in [&(&(-&b) + &s) * &half, &(&(-&b) - &s) * &half] {
                        if let Some(q) = residual.exact_div(&Poly::linear_root(&r)) {
                            residual = q;
                            roots.push(r);
                        }
                    }
                }
                break;
            }
            Some(_) => match find_root(&residual) {
                None => {
                    complete = false;
                    break;
                }
                Some(Some(r)) => {
                    residual = residual
                        .exact_div(&Poly::linear_root(&r))
                        .expect("root divides");
                    roots.push(r);
                }
                Some(None) => break,
            },
        }
    }

    roots.sort_by(GR::canonical_cmp);
    roots.dedup();
    RootExtraction {
        roots,
        residual: residual.monic(),
        complete,
    }
}

/// Searches every `u·p/q` with `p | a_0`, `q | a_d` (up to associates) and `u` a unit.
/// `None` when the divisor sets are too large to enumerate.
fn find_root(f: &Poly) -> Option<Option<GR>> {
    let coeffs = integral_coefficients(f);
    let a0 = coeffs.first()?.clone();
    let ad = coeffs.last()?.clone();
    let numerators = gaussian_divisors(&a0)?;
    let denominators = gaussian_divisors(&ad)?;
    if numerators.len().saturating_mul(denominators.len()).saturating_mul(4) > MAX_CANDIDATES {
        return None;
    }
    let units = [
        GaussInt::from_parts(1, 0),
        GaussInt::from_parts(0, 1),
        GaussInt::from_parts(-1, 0),
        GaussInt::from_parts(0, -1),
    ];
    let images: Vec<ModImage> = FILTER_PRIMES
        .iter()
        .map(|&(p, s)| ModImage::new(&coeffs, &numerators, &denominators, p, s))
        .collect();
    let mut tried = HashSet::new();
    for (qi, q) in denominators.iter().enumerate() {
        for (pi, p) in numerators.iter().enumerate() {
            for (ui, u) in units.iter().enumerate() {
                if !images.iter().all(|m| m.may_vanish(qi, pi, ui)) {
                    continue;
                }
                let r = &u.mul(p).to_gr() * &q.to_gr().inv().expect("nonzero divisor");
                if tried.insert(r.clone()) && f.eval(&r).is_zero() {
                    return Some(Some(r));
                }
            }
        }
    }
    Some(None)
}

/// Primes `P ≡ 1 (mod 4)` with a square root of `-1`, mapping `Z[i]` onto `Z/P`.
const FILTER_PRIMES: [(u64, u64); 3] = [
    (2_147_483_629, 629_208_553),
    (2_147_483_549, 895_500_278),
    (2_147_483_497, 415_680_079),
];

/// Images of the coefficients and candidate divisors under `Z[i] -> Z/P`.
struct ModImage {
    p: u64,
    coeffs: Vec<u64>,
    numerators: Vec<u64>,
    /// `q^(-1)` mod P, or 0 when `q` vanishes there.
    inverses: Vec<u64>,
    units: [u64; 4],
}

impl ModImage {
    fn new(coeffs: &[GaussInt], num: &[GaussInt], den: &[GaussInt], p: u64, s: u64) -> Self {
        let image = |g: &GaussInt| {
            let m = BigInt::from(p);
            let re = g.re.mod_floor(&m).to_u64().expect("reduced");
            let im = g.im.mod_floor(&m).to_u64().expect("reduced");
            (re + mul_mod(im, s, p)) % p
        };
        ModImage {
            p,
            coeffs: coeffs.iter().map(image).collect(),
            numerators: num.iter().map(image).collect(),
            inverses: den.iter().map(|g| pow_mod(image(g), p - 2, p)).collect(),
            units: [1, s, p - 1, p - s],
        }
    }

    /// `false` only if `F(u·p/q) ≢ 0` modulo the prime, which rules the candidate out.
    fn may_vanish(&self, qi: usize, pi: usize, ui: usize) -> bool {
        let q_inv = self.inverses[qi];
        if q_inv == 0 {
            return true;
        }
        let x = mul_mod(mul_mod(self.units[ui], self.numerators[pi], self.p), q_inv, self.p);
        let acc = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p);
        acc == 0
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Scales `f` by the lcm of all denominators, giving coefficients in `Z[i]`.
fn integral_coefficients(f: &Poly) -> Vec<GaussInt> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let scale = BigRational::from_integer(lcm);
    f.coeffs()
        .iter()
        .map(|c| {
            let s = c.scale(&scale);
            GaussInt {
                re: s.re().to_integer(),
                im: s.im().to_integer(),
            }
        })
        .collect()
}

/// Gaussian integer `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussInt {
            re: BigInt::from(re),
            im: BigInt::from(im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn to_gr(&self) -> GR {
        GR::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }

    /// Nearest-integer quotient, so the remainder has smaller norm than `d`.
    fn div_round(&self, d: &GaussInt) -> GaussInt {
        let n = d.norm();
        let num_re = &self.re * &d.re + &self.im * &d.im;
        let num_im = &self.im * &d.re - &self.re * &d.im;
        GaussInt {
            re: round_div(&num_re, &n),
            im: round_div(&num_im, &n),
        }
    }

    pub fn exact_div(&self, d: &GaussInt) -> Option<GaussInt> {
        let q = self.div_round(d);
        if q.mul(d) == *self {
            Some(q)
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &GaussInt) -> GaussInt {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.sub(&a.div_round(&b).mul(&b));
            a = b;
            b = r;
        }
        a
    }
}

fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (num * &two + den).div_floor(&(den * &two))
}

/// Divisors of `g` up to multiplication by units, including `1` and `g`'s class.
pub fn gaussian_divisors(g: &GaussInt) -> Option<Vec<GaussInt>> {
    if g.is_zero() {
        return None;
    }
    let factors = gaussian_factorization(g)?;
    let mut divisors = vec![GaussInt::from_parts(1, 0)];
    for (prime, exp) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (exp as usize + 1));
        for d in &divisors {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..exp {
                cur = cur.mul(&prime);
                next.push(cur.clone());
            }
        }
        divisors = next;
        if divisors.len() > MAX_CANDIDATES {
            return None;
        }
    }
    Some(divisors)
}

/// Gaussian primes dividing `g` with exponents, up to units.
pub fn gaussian_factorization(g: &GaussInt) -> Option<Vec<(GaussInt, u32)>> {
    let norm = g.norm().to_biguint()?;
    let mut out = Vec::new();
    for (p, e) in factor_integer(&norm)? {
        let p_int = BigInt::from_biguint(Sign::Plus, p.clone());
        if p == BigUint::from(2u32) {
            out.push((GaussInt::from_parts(1, 1), e));
        } else if (&p % 4u32) == BigUint::from(3u32) {
            out.push((GaussInt { re: p_int, im: BigInt::zero() }, e / 2));
        } else {
            let pi = split_prime(&p)?;
            let conj = GaussInt { re: pi.re.clone(), im: -&pi.im };
            let mut rest = g.clone();
            let mut k = 0;
            while let Some(q) = rest.exact_div(&pi) {
                rest = q;
                k += 1;
            }
            if k > 0 {
                out.push((pi, k));
            }
            if e > k {
                out.push((conj, e - k));
            }
        }
    }
    Some(out)
}

/// Gaussian prime of norm `p` for a rational prime `p ≡ 1 (mod 4)`.
fn split_prime(p: &BigUint) -> Option<GaussInt> {
    let one = BigUint::one();
    let p_minus_1 = p - &one;
    let half = &p_minus_1 >> 1;
    let quarter = &p_minus_1 >> 2;
    let mut c = BigUint::from(2u32);
    while &c < p {
        if c.modpow(&half, p) == p_minus_1 {
            let t = c.modpow(&quarter, p);
            let pi = GaussInt {
                re: BigInt::from_biguint(Sign::Plus, p.clone()),
                im: BigInt::zero(),
            }
            .gcd(&GaussInt {
                re: BigInt::from_biguint(Sign::Plus, t),
                im: BigInt::one(),
            });
            return (pi.norm() == BigInt::from_biguint(Sign::Plus, p.clone())).then_some(pi);
        }
        c += 1u32;
    }
    None
}

/// Prime factorization of a positive integer; `None` if a composite cofactor
/// survives trial division and bounded Pollard-Brent.
pub fn factor_integer(n: &BigUint) -> Option<Vec<(BigUint, u32)>> {
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return None;
    }
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        while (&rest % &dd).is_zero() {
            primes.push(dd.clone());
            rest /= &dd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigUint::one() {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                primes.push(m);
                continue;
            }
            let f = pollard_brent(&m)?;
            stack.push(&m / &f);
            stack.push(f);
        }
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Some(out)
}

fn is_probable_prime(n: &BigUint) -> bool {
    let small = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    if let Some(v) = n.to_u64() {
        if v < 2 {
            return false;
        }
    }
    for &p in &small {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &small {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> Option<BigUint> {
    if (n % 2u32).is_zero() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    for c in 1u32..6 {
        let c = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1usize;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut iterations = 0usize;
        while g == one && iterations < RHO_ITERATIONS {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..(r - k).min(64) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += 64;
            }
            iterations += r;
            r *= 2;
        }
        if g == *n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != one && g != *n {
            return Some(g);
        }
    }
    None
}
