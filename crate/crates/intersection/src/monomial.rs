use serde::Serialize;

/// `c₁^{k₁} ⋯ c_n^{k_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Exponent of `c_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    /// `c_{i₁} c_{i₂} ⋯` from 1-based indices, repeats allowed.
    pub fn product(n: usize, factors: &[usize]) -> Self {
        let mut exponents = vec![0; n];
        for &i in factors {
            exponents[i - 1] += 1;
        }
        Monomial { exponents }
    }

    /// All monomials in `n` variables of total degree `d`, lexicographically descending.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(Monomial::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                rec(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Monomial::new(Vec::new()));
            }
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }
}
