//! Pullbacks of equivariant Schubert classes and power sums along the
//! Krichever map, the λ-basis, Mumford's relation and the smooth-curve
//! (Bernoulli) form of the power-sum pullback.
//!
//! Classes are first produced in the Chern roots `x_1, …, x_g` of the dual
//! Hodge bundle together with `ψ`, then rewritten through
//! `e_a(x) ↦ (−1)^a λ_a`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, int, Family, Monomial, MultiPoly, Rational, RowEchelon, Variable};
use crate::schur::{elementary_symmetric, psi_matrix_with, shifted_schur, PsiVariant, RootAlphabet};
use crate::semigroups::Partition;

/// Whether classes live on the Cohen–Macaulay space or are reduced modulo
/// Mumford's relation for smooth curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Cm,
    Smooth,
}

/// Normalisation of the power-sum class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChernConvention {
    /// `Σ x_i^s`.
    #[default]
    PowerSum,
    /// The power-sum class divided by `s!`.
    ChernCharacter,
}

/// What a [`PullbackClass`] is the pullback of.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PullbackSource {
    Schubert(Partition),
    PowerSum(u32),
}

/// A pulled-back class in both presentations.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PullbackClass {
    pub genus: u32,
    pub source: PullbackSource,
    pub mode: Mode,
    pub value_x: MultiPoly,
    pub value_lambda: MultiPoly,
}

fn x(i: u32) -> MultiPoly {
    MultiPoly::var(Variable::x(i))
}

fn lambda(i: u32) -> MultiPoly {
    MultiPoly::var(Variable::lambda(i))
}

fn psi() -> MultiPoly {
    MultiPoly::var(Variable::PSI)
}

fn u() -> MultiPoly {
    MultiPoly::var(Variable::U)
}

pub(crate) fn check_genus(g: u32) -> Result<()> {
    if g == 0 {
        return Err(Error::InvalidGenus("pullbacks need g >= 1".into()));
    }
    Ok(())
}

/// `u^{|μ|} s*_μ(z_1, …, z_n)` with `z_i = x_i/u + (i − g + c)` for `i ≤ g`
/// and `z_i = 0` for `g < i ≤ n`, followed by `u ↦ −ψ`.
///
/// `n = max(g, ℓ(μ)) + extra`. `c = 0` gives `k*Ω_μ`; `c = −1` the
/// Weierstrass-cycle convention.
pub fn schubert_class_x(mu: &Partition, g: u32, c: i64, extra: usize) -> Result<MultiPoly> {
    check_genus(g)?;
    let n = (g as usize).max(mu.len()) + extra;
    let mut args: Vec<MultiPoly> = (1..=g).map(|i| MultiPoly::var(Variable::z(i))).collect();
    args.resize(n, MultiPoly::zero());
    let p = shifted_schur(mu, &args)?;
    let comps = p.components_by(|v| if v.family() == Family::Z { 1 } else { 0 });
    let images: BTreeMap<Variable, MultiPoly> = (1..=g)
        .map(|i| (Variable::z(i), x(i) + u().scale(&int(i as i64 - g as i64 + c))))
        .collect();
    let top = mu.weight() as usize;
    let mut out = MultiPoly::zero();
    for (k, comp) in comps.iter().enumerate() {
        if comp.is_zero() {
            continue;
        }
        assert!(k <= top, "shifted Schur polynomial exceeds degree |μ|");
        out += comp.substitute(&images) * u().pow_u((top - k) as u32);
    }
    Ok(out.substitute(&BTreeMap::from([(Variable::U, -psi())])))
}

/// `k*Ω_μ` through the shifted Schur route, in both presentations.
pub fn kstar_schubert(mu: &Partition, g: u32) -> Result<PullbackClass> {
    let value_x = schubert_class_x(mu, g, 0, 0)?;
    let value_lambda = to_lambda_basis(&value_x, g)?;
    Ok(PullbackClass { genus: g, source: PullbackSource::Schubert(mu.clone()), mode: Mode::Cm, value_x, value_lambda })
}

/// `k*Ω_μ` evaluated with `extra` additional pinned arguments.
pub fn kstar_schubert_padded(mu: &Partition, g: u32, extra: usize) -> Result<MultiPoly> {
    schubert_class_x(mu, g, 0, extra)
}

/// `e_a`, `h_a` of the dual Hodge roots expressed in λ-classes:
/// `e_a ↦ (−1)^a λ_a` and `h_a ↦` the degree-`a` part of `1/c(𝔼)`.
pub fn lambda_alphabet(g: u32, max_degree: u32) -> RootAlphabet {
    let n = max_degree as usize;
    let e: Vec<MultiPoly> = (0..=n)
        .map(|a| match a {
            0 => MultiPoly::one(),
            a if a as u32 <= g => lambda(a as u32).scale(&sign(a as u32)),
            _ => MultiPoly::zero(),
        })
        .collect();
    let mut h = vec![MultiPoly::one()];
    for a in 1..=n {
        let mut acc = MultiPoly::zero();
        for k in 1..=a.min(g as usize) {
            acc -= &lambda(k as u32) * &h[a - k];
        }
        h.push(acc);
    }
    RootAlphabet::from_tables(e, h)
}

fn sign(a: u32) -> Rational {
    if a % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// λ-form of the Schubert pullback with parameters `a_m = (m + t)u`, via the
/// `Ψ` row determinant over the λ-presentation of the roots.
pub fn schubert_class_lambda(mu: &Partition, g: u32, t: i64) -> Result<MultiPoly> {
    check_genus(g)?;
    if mu.len() > g as usize {
        return Ok(MultiPoly::zero());
    }
    let alphabet = lambda_alphabet(g, mu.weight() + mu.len() as u32);
    psi_matrix_with(mu, g, PsiVariant::Psi, t, &alphabet).det()
}

/// `λ_a ↦ (−1)^a e_a(x_1, …, x_g)`; inverse of [`to_lambda_basis`] on
/// its image.
pub fn from_lambda_basis(p: &MultiPoly, g: u32) -> MultiPoly {
    let xs: Vec<MultiPoly> = (1..=g).map(x).collect();
    p.substitute_with(|v| {
        (v.family() == Family::Lambda).then(|| {
            if v.index() <= g {
                elementary_symmetric(v.index(), &xs).scale(&sign(v.index()))
            } else {
                MultiPoly::zero()
            }
        })
    })
}

/// `k*Ω_μ` through the λ-form row determinant; `value_x` is recovered by
/// expanding `λ_a ↦ (−1)^a e_a(x)`.
pub fn kstar_schubert_det(mu: &Partition, g: u32) -> Result<PullbackClass> {
    let value_lambda = schubert_class_lambda(mu, g, -1)?;
    let value_x = from_lambda_basis(&value_lambda, g);
    Ok(PullbackClass { genus: g, source: PullbackSource::Schubert(mu.clone()), mode: Mode::Cm, value_x, value_lambda })
}

/// Rewrites a polynomial symmetric in `x_1, …, x_g` through
/// `e_a(x) ↦ (−1)^a λ_a`; other variables are coefficients.
pub fn to_lambda_basis(p: &MultiPoly, g: u32) -> Result<MultiPoly> {
    if let Some(v) = p.variables().into_iter().find(|v| v.family() == Family::X && (v.index() == 0 || v.index() > g)) {
        return Err(Error::NonSymmetric { genus: g, reason: format!("variable {v} is outside x1..x{g}") });
    }
    for i in 1..g {
        let swapped = p.substitute(&BTreeMap::from([(Variable::x(i), x(i + 1)), (Variable::x(i + 1), x(i))]));
        if swapped != *p {
            return Err(Error::NonSymmetric { genus: g, reason: format!("not invariant under x{i} <-> x{}", i + 1) });
        }
    }
    let xs: Vec<MultiPoly> = (1..=g).map(x).collect();
    let e: Vec<MultiPoly> = (0..=g).map(|k| elementary_symmetric(k, &xs)).collect();
    let mut e_pow: HashMap<(usize, u32), MultiPoly> = HashMap::new();
    let mut rest = p.clone();
    let mut out = MultiPoly::zero();
    let x_exponents = |m: &Monomial| -> Vec<u32> { (1..=g).map(|i| m.exponent(Variable::x(i))).collect() };
    while !rest.is_zero() {
        let alpha = rest.terms().map(|(m, _)| x_exponents(m)).max().expect("nonzero");
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonSymmetric { genus: g, reason: format!("leading exponent {alpha:?} is not a partition") });
        }
        let coeff = MultiPoly::from_terms(
            rest.terms()
                .filter(|(m, _)| x_exponents(m) == alpha)
                .map(|(m, c)| (m.split(|v| v.family() != Family::X).0, c.clone())),
        );
        let mut in_x = coeff.clone();
        let mut in_lambda = coeff;
        for k in 1..=g as usize {
            let d = alpha[k - 1] - alpha.get(k).copied().unwrap_or(0);
            if d == 0 {
                continue;
            }
            let ek = e_pow.entry((k, d)).or_insert_with(|| e[k].pow_u(d));
            in_x = &in_x * &*ek;
            in_lambda = &in_lambda * &lambda(k as u32).scale(&sign(k as u32)).pow_u(d);
        }
        rest -= in_x;
        out += in_lambda;
    }
    Ok(out)
}

/// `k*p_s = Σ_{i≤g} x_i^s − Σ_{i≤g} (i − g)^s ψ^s`.
pub fn kstar_power_sum(s: u32, g: u32, convention: ChernConvention) -> Result<PullbackClass> {
    check_genus(g)?;
    if s == 0 {
        return Err(Error::NonPolynomial("power sums start at s = 1".into()));
    }
    let shift_sum = |n: u32| -> Rational { (1..=n).map(|i| int(i as i64 - g as i64).pow(s as i32)).sum() };
    // full form with n = g + 3 roots, the extra ones pinned at (g − i)u
    let raw = |n: u32| -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for i in 1..=n {
            let xi = if i <= g { x(i) } else { u().scale(&int(g as i64 - i as i64)) };
            acc += xi.pow_u(s);
        }
        acc - u().pow_u(s).scale(&(sign(s) * shift_sum(n)))
    };
    let to_psi = BTreeMap::from([(Variable::U, -psi())]);
    let value_x = raw(g).substitute(&to_psi);
    assert_eq!(value_x, raw(g + 3).substitute(&to_psi), "pinned roots must cancel");
    let correction = psi().pow_u(s).scale(&shift_sum(g));
    let value_lambda = power_sum_lambda(s, g) - correction;
    let scale = match convention {
        ChernConvention::PowerSum => Rational::one(),
        ChernConvention::ChernCharacter => factorial(s).recip(),
    };
    Ok(PullbackClass {
        genus: g,
        source: PullbackSource::PowerSum(s),
        mode: Mode::Cm,
        value_x: value_x.scale(&scale),
        value_lambda: value_lambda.scale(&scale),
    })
}

/// `p_s(x_1, …, x_g)` in λ-classes by Newton's identities.
pub fn power_sum_lambda(s: u32, g: u32) -> MultiPoly {
    let e = |k: u32| if k <= g { lambda(k).scale(&sign(k)) } else { MultiPoly::zero() };
    let mut p: Vec<MultiPoly> = vec![MultiPoly::from_int(g as i64)];
    for n in 1..=s {
        let mut acc = e(n).scale(&(sign(n - 1) * int(n as i64)));
        for k in 1..n {
            acc += (&e(k) * &p[(n - k) as usize]).scale(&sign(k - 1));
        }
        p.push(acc);
    }
    p.pop().expect("s >= 1")
}

/// Mumford's relation `c(𝔼)c(𝔼^∨) = 1` at genus `g`.
#[derive(Clone, Debug)]
pub struct MumfordIdeal {
    genus: u32,
    generators: Vec<MultiPoly>,
}

impl MumfordIdeal {
    pub fn new(g: u32) -> Self {
        let c: MultiPoly = (0..=g).map(|i| if i == 0 { MultiPoly::one() } else { lambda(i) }).sum();
        let c_dual: MultiPoly =
            (0..=g).map(|i| if i == 0 { MultiPoly::one() } else { lambda(i).scale(&sign(i)) }).sum();
        let product = &c * &c_dual - MultiPoly::one();
        let generators = (1..=g as i64).map(|k| product.homogeneous_component(2 * k)).collect();
        MumfordIdeal { genus: g, generators }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Generators of degree `2, 4, …, 2g`.
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// Full product `c(𝔼)c(𝔼^∨) − 1`, including its odd-degree components.
    pub fn defining_product(&self) -> MultiPoly {
        let g = self.genus;
        let c: MultiPoly = (0..=g).map(|i| if i == 0 { MultiPoly::one() } else { lambda(i) }).sum();
        let c_dual: MultiPoly =
            (0..=g).map(|i| if i == 0 { MultiPoly::one() } else { lambda(i).scale(&sign(i)) }).sum();
        &c * &c_dual - MultiPoly::one()
    }
}

/// Monomials in `λ_1, …, λ_g` of weighted degree `d`, largest first.
pub fn lambda_monomials(g: u32, d: u32) -> Vec<Monomial> {
    fn rec(max_part: u32, d: u32, cur: &mut Vec<(Variable, u32)>, out: &mut Vec<Monomial>) {
        if d == 0 {
            out.push(Monomial::from_factors(cur.iter().copied()));
            return;
        }
        for k in (1..=max_part.min(d)).rev() {
            for e in 1..=d / k {
                cur.push((Variable::lambda(k), e));
                rec(k - 1, d - k * e, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

struct DegreeTable {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: RowEchelon,
}

/// Normal forms modulo the Mumford ideal, one echelon table per degree,
/// built on first use and shared across threads.
pub struct MumfordReducer {
    ideal: MumfordIdeal,
    tables: Mutex<HashMap<u32, Arc<DegreeTable>>>,
}

impl MumfordReducer {
    pub fn new(g: u32) -> Self {
        MumfordReducer { ideal: MumfordIdeal::new(g), tables: Mutex::new(HashMap::new()) }
    }

    fn table(&self, d: u32) -> Arc<DegreeTable> {
        if let Some(t) = self.tables.lock().expect("table lock").get(&d) {
            return t.clone();
        }
        let g = self.ideal.genus;
        let basis = lambda_monomials(g, d);
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut echelon = RowEchelon::new(basis.len());
        for (k, gen) in self.ideal.generators.iter().enumerate() {
            let w = 2 * (k as u32 + 1);
            if w > d {
                break;
            }
            for m in lambda_monomials(g, d - w) {
                let row = gen.mul_term(&m, &Rational::one());
                let mut v = vec![Rational::zero(); basis.len()];
                for (mono, c) in row.terms() {
                    v[index[mono]] = c.clone();
                }
                echelon.insert(v);
                if echelon.is_full() {
                    break;
                }
            }
        }
        let t = Arc::new(DegreeTable { basis, index, echelon });
        self.tables.lock().expect("table lock").insert(d, t.clone());
        t
    }

    /// Normal form of `p`. Variables other than `λ_1, …, λ_g` act as
    /// coefficients; `λ_i` with `i > g` is zero.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        let g = self.ideal.genus;
        let p = p.substitute_with(|v| (v.family() == Family::Lambda && v.index() > g).then(MultiPoly::zero));
        let mut groups: BTreeMap<(Monomial, u32), MultiPoly> = BTreeMap::new();
        for (m, c) in p.terms() {
            let (lam, other) = m.split(|v| v.family() == Family::Lambda);
            let d = lam.degree() as u32;
            groups.entry((other, d)).or_default().add_term(lam, c.clone());
        }
        let mut out = MultiPoly::zero();
        for ((other, d), q) in groups {
            let table = self.table(d);
            let mut v = vec![Rational::zero(); table.basis.len()];
            for (m, c) in q.terms() {
                v[table.index[m]] = c.clone();
            }
            for (i, c) in table.echelon.reduce(v).into_iter().enumerate() {
                if !c.is_zero() {
                    out.add_term(table.basis[i].mul(&other), c);
                }
            }
        }
        out
    }
}

/// Normal form of `p` modulo Mumford's relation at genus `g`.
pub fn mumford_reduce(p: &MultiPoly, g: u32) -> MultiPoly {
    MumfordReducer::new(g).reduce(p)
}

/// `B_n` from `Σ_{j=0}^{n} C(n+1, j) B_j = 0`, `B_0 = 1`.
pub fn bernoulli(n: u32) -> Rational {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n as i64 {
        let s: Rational = (0..m).map(|j| binomial(m + 1, j) * &b[j as usize]).sum();
        b.push(-s / int(m + 1));
    }
    b.pop().expect("B_0 present")
}

/// Sign used for the even case of the smooth power-sum class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EvenSign {
    /// `−Σ (i − g)^{2r} ψ^{2r}`.
    #[default]
    Derived,
    /// `+Σ (i − g)^{2r} ψ^{2r}`.
    Printed,
}

/// `k*p_s` on smooth curves: `B_{2r} κ_{2r−1}/(2r) − Σ (i − g)^{2r−1} ψ^{2r−1}`
/// for `s = 2r − 1`, and `∓Σ (i − g)^{2r} ψ^{2r}` for `s = 2r`.
pub fn smooth_power_sum(s: u32, g: u32, even_sign: EvenSign) -> Result<MultiPoly> {
    smooth_power_sum_impl(s, g, even_sign, false)
}

/// The same class with the κ index `2r` in the odd case and the `+` sign in
/// the even case.
pub fn smooth_power_sum_printed(s: u32, g: u32) -> Result<MultiPoly> {
    smooth_power_sum_impl(s, g, EvenSign::Printed, true)
}

fn smooth_power_sum_impl(s: u32, g: u32, even_sign: EvenSign, printed_kappa: bool) -> Result<MultiPoly> {
    check_genus(g)?;
    if s == 0 {
        return Err(Error::NonPolynomial("power sums start at s = 1".into()));
    }
    let shift: Rational = (1..=g).map(|i| int(i as i64 - g as i64).pow(s as i32)).sum();
    let tail = psi().pow_u(s).scale(&shift);
    if s % 2 == 0 {
        return Ok(match even_sign {
            EvenSign::Derived => -tail,
            EvenSign::Printed => tail,
        });
    }
    let r = (s + 1) / 2;
    let kappa_index = if printed_kappa { 2 * r } else { 2 * r - 1 };
    let coeff = bernoulli(2 * r) / int(2 * r as i64);
    Ok(MultiPoly::var(Variable::kappa(kappa_index)).scale(&coeff) - tail)
}

/// `Π_{m=i}^{j} (1 − (m+1)u)`, or 1 when `i > j`.
pub fn chern_interval(i: i64, j: i64) -> MultiPoly {
    (i..=j).map(|m| MultiPoly::one() - u().scale(&int(m + 1))).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn parse(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kstar_examples() {
        let c = kstar_schubert(&Partition::empty(), 3).unwrap();
        assert_eq!(c.value_x, MultiPoly::one());
        let c = kstar_schubert(&p(&[1]), 2).unwrap();
        assert_eq!(c.value_x, parse("x1 + x2 + psi"));
        assert_eq!(c.value_lambda, parse("-lambda1 + psi"));
        let c = kstar_schubert(&p(&[2]), 1).unwrap();
        assert_eq!(c.value_x, parse("x1^2 + x1*psi"));
        assert_eq!(c.value_lambda, parse("lambda1^2 - lambda1*psi"));
    }

    #[test]
    fn lambda_route_matches() {
        for (mu, g) in [(p(&[1]), 2), (p(&[2]), 1), (p(&[2, 1]), 2), (p(&[3, 1]), 3)] {
            let a = kstar_schubert(&mu, g).unwrap();
            let b = kstar_schubert_det(&mu, g).unwrap();
            assert_eq!(a.value_lambda, b.value_lambda, "{mu} g={g}");
            assert_eq!(a.value_x, b.value_x, "{mu} g={g}");
        }
    }

    #[test]
    fn power_sum_examples() {
        let c = kstar_power_sum(1, 1, ChernConvention::PowerSum).unwrap();
        assert_eq!((c.value_x.clone(), c.value_lambda.clone()), (parse("x1"), parse("-lambda1")));
        let c = kstar_power_sum(1, 2, ChernConvention::PowerSum).unwrap();
        assert_eq!(c.value_x, parse("x1 + x2 + psi"));
        assert_eq!(c.value_lambda, parse("-lambda1 + psi"));
        let c = kstar_power_sum(2, 1, ChernConvention::PowerSum).unwrap();
        assert_eq!((c.value_x.clone(), c.value_lambda.clone()), (parse("x1^2"), parse("lambda1^2")));
        let c = kstar_power_sum(2, 3, ChernConvention::ChernCharacter).unwrap();
        let plain = kstar_power_sum(2, 3, ChernConvention::PowerSum).unwrap();
        assert_eq!(c.value_x.scale(&int(2)), plain.value_x);
    }

    #[test]
    fn lambda_basis_examples() {
        assert_eq!(to_lambda_basis(&parse("x1 + x2 + x3"), 3).unwrap(), parse("-lambda1"));
        let h2 = parse("x1^2 + x1*x2 + x2^2");
        assert_eq!(to_lambda_basis(&h2, 2).unwrap(), parse("lambda1^2 - lambda2"));
        assert_eq!(to_lambda_basis(&parse("7"), 2).unwrap(), parse("7"));
        assert!(matches!(to_lambda_basis(&parse("x1"), 2), Err(Error::NonSymmetric { .. })));
        assert!(matches!(to_lambda_basis(&parse("x3"), 2), Err(Error::NonSymmetric { .. })));
    }

    #[test]
    fn mumford_examples() {
        let ideal = MumfordIdeal::new(3);
        assert_eq!(ideal.generators()[0], parse("2*lambda2 - lambda1^2"));
        assert!(mumford_reduce(&parse("lambda1^2 - 2*lambda2"), 2).is_zero());
        assert_eq!(mumford_reduce(&parse("psi^3"), 3), parse("psi^3"));
        // λ_2 := 0 below genus 2
        assert_eq!(MumfordIdeal::new(1).generators()[0], parse("-lambda1^2"));
        let product = ideal.defining_product();
        for d in [1, 3, 5] {
            assert!(product.homogeneous_component(d).is_zero());
        }
    }

    #[test]
    fn mumford_normal_form_is_idempotent() {
        let r = MumfordReducer::new(3);
        let q = parse("lambda1^4*psi + lambda3*lambda1 - 5*lambda2^2 + kappa1*lambda1^2");
        let once = r.reduce(&q);
        assert_eq!(r.reduce(&once), once);
        assert!(r.reduce(&(q - &once)).is_zero());
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn smooth_examples() {
        assert_eq!(smooth_power_sum(1, 2, EvenSign::Derived).unwrap(), parse("kappa1/12 + psi"));
        assert!(smooth_power_sum(2, 1, EvenSign::Derived).unwrap().is_zero());
        assert_eq!(smooth_power_sum(2, 3, EvenSign::Derived).unwrap(), parse("-5*psi^2"));
        assert_eq!(smooth_power_sum(2, 3, EvenSign::Printed).unwrap(), parse("5*psi^2"));
        assert_eq!(smooth_power_sum_printed(1, 2).unwrap(), parse("kappa2/12 + psi"));
    }

    #[test]
    fn chern_interval_examples() {
        assert_eq!(chern_interval(0, 0), parse("1 - u"));
        assert_eq!(chern_interval(0, 1), parse("(1 - u)*(1 - 2*u)"));
        assert_eq!(chern_interval(3, 2), MultiPoly::one());
    }
}
