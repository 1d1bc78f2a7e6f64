use std::collections::{BTreeMap, HashMap};

use hypoly_combinatorics::{ensure_generic, is_short, IndexSet, Rational, Scalar};
use hypoly_intersection::{Integrator, Monomial, Poly};
use num_traits::One;
use serde::Serialize;

use crate::error::{CohomologyError, Result};
use crate::linalg::Echelon;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFamily {
    pub name: String,
    pub relations: Vec<Poly>,
}

/// Generators in degree 1 (cohomological degree 2) modulo homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedRingPresentation {
    pub num_generators: usize,
    pub generator_names: Vec<String>,
    pub families: Vec<RelationFamily>,
    pub top_degree: usize,
}

impl GradedRingPresentation {
    pub fn relations(&self) -> impl Iterator<Item = &Poly> {
        self.families.iter().flat_map(|f| f.relations.iter())
    }

    pub fn num_relations(&self) -> usize {
        self.families.iter().map(|f| f.relations.len()).sum()
    }

    pub fn family(&self, name: &str) -> Option<&RelationFamily> {
        self.families.iter().find(|f| f.name == name)
    }
}

/// `dims[d]` is the dimension of the degree-`d` piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn is_palindromic(&self) -> bool {
        self.dims.iter().eq(self.dims.iter().rev())
    }

    pub fn top(&self) -> usize {
        self.dims.last().copied().unwrap_or(0)
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn family(name: &str, relations: Vec<Poly>) -> RelationFamily {
    RelationFamily { name: name.to_string(), relations }
}

/// `ℚ[c₁, …, c_n] / (⟨c_i² − c_j²⟩ + ⟨monomials of degree n−2⟩)`.
pub fn ring_x(n: usize) -> Result<GradedRingPresentation> {
    if n < 4 {
        return Err(CohomologyError::TooSmall(n));
    }
    let c = |i| Poly::var(n, i);
    let mut squares = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            squares.push(&c(i).pow(2) - &c(j).pow(2));
        }
    }
    let monomials = Monomial::all_of_degree(n, n as u32 - 2)
        .into_iter()
        .map(|m| Poly::monomial(n, m.exponents, Rational::one()))
        .collect();
    Ok(GradedRingPresentation {
        num_generators: n,
        generator_names: names("c", n),
        families: vec![family("difference_of_squares", squares), family("degree_n_minus_2", monomials)],
        top_degree: n - 3,
    })
}

/// Relations on `b₁, …, b_n` for `U_S`, with `b_p` the pivot `p = min S`.
pub fn ring_us<T: Scalar>(alpha: &[T], s: IndexSet) -> Result<GradedRingPresentation> {
    ensure_generic(alpha)?;
    let n = alpha.len();
    if n < 4 {
        return Err(CohomologyError::TooSmall(n));
    }
    if s.n() != n || s.len() < 2 || !is_short(alpha, s) {
        return Err(CohomologyError::SetNotShort { set: s });
    }
    let p = s.min_index().expect("|S| ≥ 2");
    let b = |i| Poly::var(n, i);
    let sc = s.complement();

    let identify = s.members().filter(|&i| i != p).map(|i| &b(p) - &b(i)).collect();
    let quadratic = sc.members().map(|j| &b(j) * &(&b(p) - &b(j))).collect();
    let mut products = Vec::new();
    let mut flags = Vec::new();
    for r in sc.subsets() {
        if !is_short(alpha, r.union(&s)) {
            products.push(r.members().fold(Poly::one(n), |acc, j| &acc * &b(j)));
        }
        if !r.is_empty() && !is_short(alpha, r) {
            let head = b(p).pow(s.len() as u32 - 2);
            flags.push(r.members().fold(head, |acc, j| &acc * &(&b(j) - &b(p))));
        }
    }
    Ok(GradedRingPresentation {
        num_generators: n,
        generator_names: names("b", n),
        families: vec![
            family("identify_s", identify),
            family("quadratic", quadratic),
            family("long_products", products),
            family("long_flags", flags),
        ],
        top_degree: n - 3,
    })
}

/// Graded dimensions for degrees `0..=top_degree` by exact rank computation.
pub fn graded_dims(pres: &GradedRingPresentation) -> GradedDims {
    let n = pres.num_generators;
    let mut dims = Vec::with_capacity(pres.top_degree + 1);
    for d in 0..=pres.top_degree as u32 {
        let basis = Monomial::all_of_degree(n, d);
        let index: HashMap<&[u32], usize> =
            basis.iter().enumerate().map(|(k, m)| (m.exponents.as_slice(), k)).collect();
        let mut ech = Echelon::default();
        for g in pres.relations() {
            let Some(e) = g.homogeneous_degree() else { continue };
            if e > d {
                continue;
            }
            for mu in Monomial::all_of_degree(n, d - e) {
                let row: BTreeMap<usize, Rational> = g
                    .raw_terms()
                    .iter()
                    .map(|(ex, c)| {
                        let prod: Vec<u32> = ex.iter().zip(&mu.exponents).map(|(a, b)| a + b).collect();
                        (index[prod.as_slice()], c.clone())
                    })
                    .collect();
                ech.insert(row);
                if ech.rank() == basis.len() {
                    break;
                }
            }
        }
        dims.push(basis.len() - ech.rank());
    }
    GradedDims { dims }
}

/// `b_i ↦ −(c_p + c_i)/2` on `U_S` with `p = min S`.
pub fn b_to_c(n: usize, s: IndexSet) -> Vec<Poly> {
    let p = s.min_index().expect("nonempty S");
    let minus_half = -(Rational::one() / Rational::from_integer(2.into()));
    (1..=n).map(|i| (&Poly::var(n, p) + &Poly::var(n, i)).scale(&minus_half)).collect()
}

/// First relation-times-monomial product whose integral over `U_S` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    pub family: String,
    pub relation: Poly,
    pub multiplier: Monomial,
    pub integral: String,
}

pub fn ideal_consistency_witness<T: Scalar + One>(
    alpha: &[T],
    s: IndexSet,
) -> Result<Option<IdealWitness>> {
    let pres = ring_us(alpha, s)?;
    let n = alpha.len();
    let top = pres.top_degree as u32;
    let subst = b_to_c(n, s);
    let mut integrator = Integrator::new(alpha, s)?;
    let mut mult_cache: HashMap<u32, Vec<(Monomial, Poly)>> = HashMap::new();
    for fam in &pres.families {
        for g in &fam.relations {
            let Some(e) = g.homogeneous_degree() else { continue };
            if e > top {
                continue;
            }
            let gc = g.substitute(&subst);
            let mults = mult_cache.entry(top - e).or_insert_with(|| {
                Monomial::all_of_degree(n, top - e)
                    .into_iter()
                    .map(|m| {
                        let poly = Poly::monomial(n, m.exponents.clone(), Rational::one()).substitute(&subst);
                        (m, poly)
                    })
                    .collect()
            });
            for (mu, mu_c) in mults.iter() {
                let v = integrator.poly(&(&gc * mu_c))?;
                if v != Rational::from_integer(0.into()) {
                    return Ok(Some(IdealWitness {
                        family: fam.name.clone(),
                        relation: g.clone(),
                        multiplier: mu.clone(),
                        integral: v.to_string(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether every ideal generator times every complementary monomial integrates to zero.
pub fn verify_ideal_consistency<T: Scalar + One>(alpha: &[T], s: IndexSet) -> Result<bool> {
    Ok(ideal_consistency_witness(alpha, s)?.is_none())
}
