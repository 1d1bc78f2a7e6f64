use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use hypoly_combinatorics::Rational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::monomial::Monomial;

/// A polynomial in `n` commuting variables with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Poly::monomial(n, vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Rational::one())
    }

    /// The variable with 1-based index `i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Poly::monomial(n, e, Rational::one())
    }

    pub fn monomial(n: usize, exponents: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exponents.len(), n);
        let mut p = Poly::zero(n);
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rational)>>(n: usize, terms: I) -> Self {
        let mut p = Poly::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        self.terms.iter().map(|(e, c)| (Monomial::new(e.clone()), c))
    }

    pub fn raw_terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Common total degree of every term, `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly::one(self.n), |acc, _| &acc * self)
    }

    /// Substitutes `vars[i]` for the `(i+1)`-th variable.
    pub fn substitute(&self, vars: &[Poly]) -> Poly {
        assert_eq!(vars.len(), self.n);
        let target_n = vars.first().map_or(0, Poly::n);
        let mut out = Poly::zero(target_n);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target_n, c.clone());
            for (v, &k) in vars.iter().zip(e) {
                if k > 0 {
                    term = &term * &v.pow(k);
                }
            }
            out = &out + &term;
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n);
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { n: self.n, terms: acc }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "·x{}", i + 1)?,
                    _ => write!(f, "·x{}^{p}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    coeff: String,
    exponents: &'a [u32],
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.terms.iter().map(|(e, c)| TermOut { coeff: c.to_string(), exponents: e }),
        )
    }
}
