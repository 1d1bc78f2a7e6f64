use hypoly_phb_moduli::ParabolicWeights;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{IsomError, Result};
use crate::scalar::{magnitude, to_exact, Cx, Field};

/// A point of `T*ℂ^{2n}`: rows `p_i = (a_i, b_i)` and columns `q_i = (c_i, d_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperpolygonPoint<T: Field> {
    p: Vec<[Cx<T>; 2]>,
    q: Vec<[Cx<T>; 2]>,
}

impl<T: Field> HyperpolygonPoint<T> {
    pub fn new(p: Vec<[Cx<T>; 2]>, q: Vec<[Cx<T>; 2]>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(IsomError::LengthMismatch {
                expected: q.len(),
                found: p.len(),
            });
        }
        Ok(Self { p, q })
    }

    /// Point with all `p_i = 0`.
    pub fn from_q(q: Vec<[Cx<T>; 2]>) -> Self {
        let p = vec![[Cx::zero(), Cx::zero()]; q.len()];
        Self { p, q }
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    pub fn p(&self) -> &[[Cx<T>; 2]] {
        &self.p
    }

    pub fn q(&self) -> &[[Cx<T>; 2]] {
        &self.q
    }

    pub fn p_norm(&self, i: usize) -> f64 {
        pair_norm(&self.p[i])
    }

    pub fn q_norm(&self, i: usize) -> f64 {
        pair_norm(&self.q[i])
    }

    /// Rescales each `q_i` so its first nonzero coordinate is 1, and `p_i` inversely.
    pub fn normalize_gauge(&self) -> Result<Self> {
        let mut p = Vec::with_capacity(self.n());
        let mut q = Vec::with_capacity(self.n());
        for i in 0..self.n() {
            let [c, d] = &self.q[i];
            let lambda = if !c.is_zero() {
                c.clone()
            } else if !d.is_zero() {
                d.clone()
            } else {
                return Err(IsomError::ZeroQ { index: i + 1 });
            };
            q.push(normalize_spinor(&self.q[i]).expect("nonzero"));
            let [a, b] = &self.p[i];
            p.push([a.clone() * lambda.clone(), b.clone() * lambda]);
        }
        Ok(Self { p, q })
    }

    pub fn map<U: Field>(&self, f: impl Fn(&Cx<T>) -> Cx<U>) -> HyperpolygonPoint<U> {
        let conv = |v: &[[Cx<T>; 2]]| v.iter().map(|[x, y]| [f(x), f(y)]).collect();
        HyperpolygonPoint {
            p: conv(&self.p),
            q: conv(&self.q),
        }
    }
}

impl HyperpolygonPoint<f64> {
    /// Exact rational copy of a double-precision point.
    pub fn to_exact(&self) -> HyperpolygonPoint<hypoly_combinatorics::Rational> {
        self.map(to_exact)
    }

    /// Action of `diag(e^{iθ}, e^{-iθ})`: `q ↦ g q`, `p ↦ p g⁻¹`.
    pub fn gauge_rotate(&self, theta: f64) -> Self {
        let g = Cx::from_polar(1.0, theta);
        let gi = g.conj();
        HyperpolygonPoint {
            p: self.p.iter().map(|[a, b]| [a * gi, b * g]).collect(),
            q: self.q.iter().map(|[c, d]| [c * g, d * gi]).collect(),
        }
    }
}

fn pair_norm<T: Field>(v: &[Cx<T>; 2]) -> f64 {
    (magnitude(&v[0]).powi(2) + magnitude(&v[1]).powi(2)).sqrt()
}

/// Spinor rescaled so its first nonzero coordinate is 1; `None` for the zero vector.
pub fn normalize_spinor<T: Field>(v: &[Cx<T>; 2]) -> Option<[Cx<T>; 2]> {
    let [c, d] = v;
    if !c.is_zero() {
        Some([Cx::new(T::one(), T::zero()), d.clone() / c.clone()])
    } else if !d.is_zero() {
        Some([Cx::zero(), Cx::new(T::one(), T::zero())])
    } else {
        None
    }
}

/// `|u × v| / (|u||v|)` for spinors, i.e. the sine-like distance between the lines.
pub fn line_distance<T: Field>(u: &[Cx<T>; 2], v: &[Cx<T>; 2]) -> f64 {
    let cross = u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone();
    if cross.is_zero() {
        return 0.0;
    }
    magnitude(&cross) / (pair_norm(u) * pair_norm(v))
}

/// A traceless 2×2 complex matrix stored as rows.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueMatrix<T: Field> {
    pub m: [[Cx<T>; 2]; 2],
}

impl<T: Field> ResidueMatrix<T> {
    pub fn zero() -> Self {
        Self {
            m: [[Cx::zero(), Cx::zero()], [Cx::zero(), Cx::zero()]],
        }
    }

    /// `(q p)_0` for a row `p = (a, b)` and column `q = (c, d)`.
    pub fn from_pair(p: &[Cx<T>; 2], q: &[Cx<T>; 2]) -> Self {
        let [a, b] = p.clone();
        let [c, d] = q.clone();
        let two = Cx::new(T::two(), T::zero());
        let h = (a.clone() * c.clone() - b.clone() * d.clone()) / two;
        Self {
            m: [[h.clone(), b * c], [a * d, -h]],
        }
    }

    pub fn trace(&self) -> Cx<T> {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn det(&self) -> Cx<T> {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn apply(&self, v: &[Cx<T>; 2]) -> [Cx<T>; 2] {
        let row = |r: &[Cx<T>; 2]| r[0].clone() * v[0].clone() + r[1].clone() * v[1].clone();
        [row(&self.m[0]), row(&self.m[1])]
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.m.clone();
        for (r, row) in m.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = x.clone() + other.m[r][c].clone();
            }
        }
        Self { m }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_zero())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().map(magnitude).fold(0.0, f64::max)
    }
}

impl ResidueMatrix<f64> {
    /// `g N g⁻¹` for `g = diag(e^{iθ}, e^{-iθ})`.
    pub fn gauge_conjugate(&self, theta: f64) -> Self {
        let g2 = Cx::from_polar(1.0, 2.0 * theta);
        let [[a, b], [c, d]] = self.m;
        Self {
            m: [[a, b * g2], [c * g2.conj(), d]],
        }
    }
}

/// Flags and residues at the marked points together with parabolic weights.
#[derive(Debug, Clone, PartialEq)]
pub struct PhbPoint<T: Field> {
    pub flags: Vec<[Cx<T>; 2]>,
    pub residues: Vec<ResidueMatrix<T>>,
    pub weights: ParabolicWeights,
}

impl<T: Field> PhbPoint<T> {
    pub fn new(
        flags: Vec<[Cx<T>; 2]>,
        residues: Vec<ResidueMatrix<T>>,
        weights: ParabolicWeights,
    ) -> Result<Self> {
        for len in [residues.len(), weights.n()] {
            if len != flags.len() {
                return Err(IsomError::LengthMismatch {
                    expected: flags.len(),
                    found: len,
                });
            }
        }
        let mut normalized = Vec::with_capacity(flags.len());
        for (i, f) in flags.iter().enumerate() {
            normalized.push(normalize_spinor(f).ok_or(IsomError::ZeroQ { index: i + 1 })?);
        }
        Ok(Self {
            flags: normalized,
            residues,
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.flags.len()
    }

    pub fn higgs_vanishes(&self, tol: f64) -> bool {
        self.residues.iter().all(|r| r.max_abs() <= tol)
    }

    /// Worst violation of trace-freeness, nilpotency, flag preservation and the residue theorem.
    pub fn residue_invariants(&self) -> ResidueInvariants {
        let mut out = ResidueInvariants::default();
        let mut total = ResidueMatrix::zero();
        for (r, f) in self.residues.iter().zip(&self.flags) {
            out.trace = out.trace.max(magnitude(&r.trace()));
            out.det = out.det.max(magnitude(&r.det()));
            let image = r.apply(f);
            out.flag = out.flag.max(magnitude(&image[0]).max(magnitude(&image[1])));
            total = total.add(r);
        }
        out.sum = total.max_abs();
        out
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct ResidueInvariants {
    pub trace: f64,
    pub det: f64,
    pub sum: f64,
    pub flag: f64,
}

impl ResidueInvariants {
    pub fn max(&self) -> f64 {
        self.trace.max(self.det).max(self.sum).max(self.flag)
    }
}
