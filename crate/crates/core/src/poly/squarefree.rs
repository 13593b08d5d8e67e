use serde::Serialize;

use super::{Poly, PolyError};
use crate::arith::GR;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareFreePart {
    pub factor: Poly,
    pub multiplicity: usize,
}

/// `unit · Π factor^multiplicity`, factors monic, square-free and pairwise
/// coprime, multiplicities strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareFreeDecomposition {
    pub parts: Vec<SquareFreePart>,
    pub unit: GR,
}

impl SquareFreeDecomposition {
    pub fn reconstruct(&self) -> Poly {
        self.parts
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, part| {
                &acc * &part.factor.pow(part.multiplicity)
            })
    }

    /// Number of distinct roots, `Σ deg factor`.
    pub fn distinct_root_count(&self) -> usize {
        self.parts.iter().map(|p| p.factor.degree_or_zero()).sum()
    }

    /// Product of the factors (the monic radical).
    pub fn squarefree_part(&self) -> Poly {
        self.parts
            .iter()
            .fold(Poly::one(), |acc, part| &acc * &part.factor)
    }

    pub fn part_with_multiplicity(&self, m: usize) -> Option<&Poly> {
        self.parts
            .iter()
            .find(|p| p.multiplicity == m)
            .map(|p| &p.factor)
    }

    /// Multiplicity of `r` as a root of the decomposed polynomial.
    pub fn multiplicity_of(&self, r: &GR) -> usize {
        self.parts
            .iter()
            .find(|p| p.factor.eval(r).is_zero())
            .map_or(0, |p| p.multiplicity)
    }
}

/// Yun's square-free decomposition.
pub fn squarefree_decompose(f: &Poly) -> Result<SquareFreeDecomposition, PolyError> {
    let unit = f.leading().cloned().ok_or(PolyError::ZeroPolynomial)?;
    let mut parts = Vec::new();
    if f.is_constant() {
        return Ok(SquareFreeDecomposition { parts, unit });
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df)?;
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let mut c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut multiplicity = 1;
    while !b.is_constant() {
        let a = b.gcd(&d)?;
        b = b.exact_div(&a).expect("gcd divides b");
        c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &b.derivative();
        if !a.is_constant() {
            parts.push(SquareFreePart {
                factor: a,
                multiplicity,
            });
        }
        multiplicity += 1;
    }
    Ok(SquareFreeDecomposition { parts, unit })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn repeated_root_example() {
        // (z-1)^2 (z+2)
        let d = squarefree_decompose(&p(&[2, -3, 0, 1])).unwrap();
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts[0].factor, p(&[2, 1]));
        assert_eq!(d.parts[0].multiplicity, 1);
        assert_eq!(d.parts[1].factor, p(&[-1, 1]));
        assert_eq!(d.parts[1].multiplicity, 2);
        assert_eq!(d.distinct_root_count(), 2);
    }

    #[test]
    fn squarefree_input() {
        let d = squarefree_decompose(&p(&[1, 0, 1])).unwrap();
        assert_eq!(d.parts, vec![SquareFreePart { factor: p(&[1, 0, 1]), multiplicity: 1 }]);
    }

    #[test]
    fn mixed_multiplicity_profile() {
        // z^3 (z-1)^2
        let f = Poly::from_roots([(&GR::zero(), 3), (&GR::one(), 2)]);
        let d = squarefree_decompose(&f).unwrap();
        let got: Vec<_> = d.parts.iter().map(|p| (p.factor.clone(), p.multiplicity)).collect();
        assert_eq!(got, vec![(p(&[-1, 1]), 2), (p(&[0, 1]), 3)]);
    }

    #[test]
    fn unit_and_reconstruction() {
        let f = Poly::from_roots([(&GR::i(), 2), (&GR::ratio(1, 3), 1)]).scale(&GR::complex(2, 1, 1, 1));
        let d = squarefree_decompose(&f).unwrap();
        assert_eq!(d.unit, GR::complex(2, 1, 1, 1));
        assert_eq!(d.reconstruct(), f);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(squarefree_decompose(&Poly::zero()), Err(PolyError::ZeroPolynomial));
    }
}
