//! Factorial, shifted and double Schur polynomials as ratios of
//! determinants, and the `Ψ_μ` / `Ψ′_μ` row determinants.
//!
//! All ratios are computed by evaluating the numerator determinant and
//! dividing exactly by the linear factors of the Vandermonde denominator.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{complete_values, elementary_values, int, Family, MultiPoly, PolyMatrix, Rational, Variable};
use crate::semigroups::Partition;

/// Parameter sequence `a_1, a_2, …` for generalized powers
/// `(z|a)^k = Π_{m=1}^{k} (z − a_m)`.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamSequence {
    /// Finitely many explicit values.
    Explicit(Vec<MultiPoly>),
    /// `a_j = offset + j·step`.
    Arithmetic { offset: MultiPoly, step: MultiPoly },
}

impl ParamSequence {
    /// `a_j = j − 1`.
    pub fn factorial() -> Self {
        ParamSequence::Arithmetic { offset: MultiPoly::from_int(-1), step: MultiPoly::one() }
    }

    /// `a_j = 0`.
    pub fn zero() -> Self {
        ParamSequence::Arithmetic { offset: MultiPoly::zero(), step: MultiPoly::zero() }
    }

    /// `a_j = (j + t)·u`.
    pub fn shifted_u(t: i64) -> Self {
        let u = MultiPoly::var(Variable::U);
        ParamSequence::Arithmetic { offset: u.scale(&int(t)), step: u }
    }

    /// `a_j` for `j ≥ 1`.
    pub fn get(&self, j: usize) -> Result<MultiPoly> {
        match self {
            ParamSequence::Explicit(v) => {
                v.get(j.wrapping_sub(1)).cloned().ok_or(Error::ParamOutOfRange { index: j, len: v.len() })
            }
            ParamSequence::Arithmetic { offset, step } => Ok(offset + step.scale(&int(j as i64))),
        }
    }
}

/// `z(z−1)⋯(z−i+1)`.
pub fn falling_factorial(z: &MultiPoly, i: u32) -> MultiPoly {
    (0..i as i64).map(|k| z - MultiPoly::from_int(k)).product()
}

/// `Π_{m=1}^{k} (z − a_m)`.
pub fn generalized_power(z: &MultiPoly, k: u32, a: &ParamSequence) -> Result<MultiPoly> {
    let mut acc = MultiPoly::one();
    for m in 1..=k as usize {
        acc = &acc * &(z - a.get(m)?);
    }
    Ok(acc)
}

/// `t_μ(z_1, …, z_n)`.
pub fn factorial_schur(mu: &Partition, z: &[MultiPoly]) -> Result<MultiPoly> {
    double_schur(mu, z, &ParamSequence::factorial())
}

/// `s*_μ(z_1, …, z_n) = t_μ(z_1 + n − 1, …, z_n)`; zero when `ℓ(μ) > n`.
pub fn shifted_schur(mu: &Partition, z: &[MultiPoly]) -> Result<MultiPoly> {
    let n = z.len();
    if mu.len() > n {
        return Ok(MultiPoly::zero());
    }
    let shifted: Vec<MultiPoly> =
        z.iter().enumerate().map(|(k, zi)| zi + MultiPoly::from_int((n - 1 - k) as i64)).collect();
    factorial_schur(mu, &shifted)
}

/// `det[(x_i|a)^{μ_j+n−j}] / det[(x_i|a)^{n−j}]`.
pub fn double_schur(mu: &Partition, x: &[MultiPoly], a: &ParamSequence) -> Result<MultiPoly> {
    let n = x.len();
    if n < mu.len() {
        return Err(Error::InsufficientVariables { length: mu.len(), available: n });
    }
    let degenerate = (0..n).any(|i| (i + 1..n).any(|j| x[i] == x[j]));
    if degenerate {
        let symbolic = x.iter().any(|p| p.variables().iter().any(|v| v.family() == Family::Z));
        if symbolic {
            return Err(Error::DegenerateArguments(
                "repeated arguments that already involve z variables".into(),
            ));
        }
        let generic: Vec<MultiPoly> = (1..=n as u32).map(|i| MultiPoly::var(Variable::z(i))).collect();
        let value = double_schur(mu, &generic, a)?;
        return Ok(value.substitute_with(|v| {
            (v.family() == Family::Z && (1..=n as u32).contains(&v.index())).then(|| x[v.index() as usize - 1].clone())
        }));
    }
    // cache (x_i|a)^k incrementally per argument
    let top = mu.part(1) as usize + n;
    let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for xi in x {
        let mut row = Vec::with_capacity(top);
        let mut acc = MultiPoly::one();
        row.push(acc.clone());
        for m in 1..top {
            acc = &acc * &(xi - a.get(m)?);
            row.push(acc.clone());
        }
        powers.push(row);
    }
    let num = PolyMatrix::from_fn(n, n, |i, j| {
        let k = mu.part(j + 1) as usize + n - 1 - j;
        powers[i][k].clone()
    })
    .det()?;
    let mut q = num;
    for i in 0..n {
        for j in i + 1..n {
            q = q.div_exact(&(&x[i] - &x[j]))?;
        }
    }
    Ok(q)
}

/// Splits `p` into components homogeneous for `weight`; entry `i` has
/// degree `i` and the entries sum to `p`.
pub fn homogeneous_components<F: Fn(&Variable) -> i64>(p: &MultiPoly, weight: F) -> Vec<MultiPoly> {
    p.components_by(weight)
}

/// `e_k(x_1, …, x_n)` as a polynomial.
pub fn elementary_symmetric(k: u32, vars: &[MultiPoly]) -> MultiPoly {
    symmetric_table(k, vars, false).pop().expect("nonempty table")
}

/// `h_k(x_1, …, x_n)` as a polynomial.
pub fn complete_symmetric(k: u32, vars: &[MultiPoly]) -> MultiPoly {
    symmetric_table(k, vars, true).pop().expect("nonempty table")
}

/// `[f_0, …, f_k]` with `f = e` or `f = h` of `vars`.
pub fn symmetric_table(k: u32, vars: &[MultiPoly], complete: bool) -> Vec<MultiPoly> {
    let k = k as usize;
    let mut t = vec![MultiPoly::zero(); k + 1];
    t[0] = MultiPoly::one();
    for v in vars {
        if complete {
            for j in 1..=k {
                let add = &t[j - 1] * v;
                t[j] += add;
            }
        } else {
            for j in (1..=k).rev() {
                let add = &t[j - 1] * v;
                t[j] += add;
            }
        }
    }
    t
}

/// Coefficient of `t^b` in the Chern polynomial of the virtual sum of line
/// bundles with weights `p, …, q`: `e_b(p..q)` when `q ≥ p − 1`, otherwise
/// the inverse `(−1)^b h_b(q+1..p−1)`.
pub fn interval_chern(b: u32, p: i64, q: i64) -> Rational {
    if q >= p - 1 {
        elementary_values(b as usize, &range(p, q))
    } else {
        sign(b) * complete_values(b as usize, &range(q + 1, p - 1))
    }
}

/// Coefficient of `t^b` in the Segre series dual to [`interval_chern`]:
/// `h_b(p..q)` when `q ≥ p − 1`, otherwise `(−1)^b e_b(q+1..p−1)`.
pub fn interval_segre(b: u32, p: i64, q: i64) -> Rational {
    if q >= p - 1 {
        complete_values(b as usize, &range(p, q))
    } else {
        sign(b) * elementary_values(b as usize, &range(q + 1, p - 1))
    }
}

fn range(p: i64, q: i64) -> Vec<Rational> {
    (p..=q).map(int).collect()
}

fn sign(b: u32) -> Rational {
    if b % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Which of the two row determinants to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiVariant {
    /// Rows from `μ`, complete symmetric functions of the roots.
    Psi,
    /// Rows from `μ′`, elementary symmetric functions of the roots.
    PsiPrime,
}

/// The symmetric functions `e_a` and `h_a` of the Hodge roots `x_1, …, x_g`
/// in whichever presentation the caller needs.
#[derive(Clone, Debug)]
pub struct RootAlphabet {
    e: Vec<MultiPoly>,
    h: Vec<MultiPoly>,
}

impl RootAlphabet {
    /// `e_a`, `h_a` as polynomials in `x_1, …, x_g`, for `a ≤ max_degree`.
    pub fn roots(g: u32, max_degree: u32) -> Self {
        let xs: Vec<MultiPoly> = (1..=g).map(|i| MultiPoly::var(Variable::x(i))).collect();
        RootAlphabet { e: symmetric_table(max_degree, &xs, false), h: symmetric_table(max_degree, &xs, true) }
    }

    /// From explicit tables; entry `a` of each list is `e_a` resp. `h_a`.
    pub fn from_tables(e: Vec<MultiPoly>, h: Vec<MultiPoly>) -> Self {
        RootAlphabet { e, h }
    }

    pub fn e(&self, a: usize) -> MultiPoly {
        self.e.get(a).cloned().expect("alphabet table too short")
    }

    pub fn h(&self, a: usize) -> MultiPoly {
        self.h.get(a).cloned().expect("alphabet table too short")
    }

    pub fn max_degree(&self) -> usize {
        self.e.len().min(self.h.len()).saturating_sub(1)
    }
}

/// `Ψ_μ` or `Ψ′_μ` at genus `g` with the standard parameters `a_m = (m−1)u`.
pub fn psi_matrix(mu: &Partition, g: u32, variant: PsiVariant) -> PolyMatrix {
    let alphabet = RootAlphabet::roots(g, mu.weight() + mu.len().max(mu.conjugate().len()) as u32);
    psi_matrix_with(mu, g, variant, -1, &alphabet)
}

/// Row determinant for the parameters `a_m = (m + t)u` (with `u = −ψ`) and
/// roots given by `alphabet`. `t = −1` gives [`psi_matrix`].
pub fn psi_matrix_with(mu: &Partition, g: u32, variant: PsiVariant, t: i64, alphabet: &RootAlphabet) -> PolyMatrix {
    let g = g as i64;
    let psi = MultiPoly::var(Variable::PSI);
    let rows = match variant {
        PsiVariant::Psi => mu.clone(),
        PsiVariant::PsiPrime => mu.conjugate(),
    };
    let l = rows.len();
    PolyMatrix::from_fn(l, l, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let part = rows.part(i0 + 1) as i64;
        let k = part + j - i;
        if k < 0 {
            return MultiPoly::zero();
        }
        let mut entry = MultiPoly::zero();
        for a in 0..=k {
            let b = (k - a) as u32;
            let (root, coeff) = match variant {
                PsiVariant::Psi => {
                    let c = part - i + g;
                    (alphabet.h(a as usize), interval_chern(b, t + 1, t + c))
                }
                PsiVariant::PsiPrime => (alphabet.e(a as usize), interval_segre(b, t + 1, g + i - part + t)),
            };
            if coeff.is_zero() || root.is_zero() {
                continue;
            }
            entry += (&root * &psi.pow_u(b)).scale(&coeff);
        }
        entry
    })
}
