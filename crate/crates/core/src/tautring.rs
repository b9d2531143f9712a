//! Degree-truncated linear algebra on `A = ℚ[λ_1, …, λ_g, ψ]`: the relation
//! ideal coming from empty Schubert intersections, localization at the
//! monomial curves, and the Hilbert-function sandwich between them.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exactalg::{elementary_values, int, Family, Monomial, MultiPoly, Rational, RowEchelon, Variable};
use crate::pullback::{lambda_monomials, schubert_class_lambda};
use crate::semigroups::{enumerate_semigroups_capped, weierstrass_sequence, NumericalSemigroup, Partition};

/// The graded algebra `ℚ[λ_1, …, λ_g, ψ]` truncated at degree `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedAlgebraSpec {
    pub genus: u32,
    pub cutoff: u32,
}

impl GradedAlgebraSpec {
    pub fn new(genus: u32, cutoff: u32) -> Self {
        GradedAlgebraSpec { genus, cutoff }
    }

    /// Monomials `λ^a ψ^b` of weighted degree `d`, largest first.
    pub fn monomials(&self, d: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..=d)
            .flat_map(|b| {
                let psi = Monomial::from_factors([(Variable::PSI, b)]);
                lambda_monomials(self.genus, d - b).into_iter().map(move |m| m.mul(&psi))
            })
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    pub fn dim(&self, d: u32) -> usize {
        self.monomials(d).len()
    }
}

/// Partitions violating the realizability bound at `d = g − 1`: `|μ| ≤ D`,
/// `ℓ(μ) ≤ g` and `μ_i ≥ g − i + 2` for some `i`.
pub fn violating_partitions(g: u32, cutoff: u32) -> Vec<Partition> {
    Partition::all_up_to_weight(cutoff)
        .into_iter()
        .filter(|mu| mu.len() <= g as usize)
        .filter(|mu| (1..=mu.len()).any(|i| mu.part(i) as i64 >= g as i64 - i as i64 + 2))
        .collect()
}

/// Relation generators `(μ, k*Ω_μ)` in the λ-basis.
pub fn relation_generators(g: u32, cutoff: u32) -> Result<Vec<(Partition, MultiPoly)>> {
    violating_partitions(g, cutoff)
        .into_par_iter()
        .map(|mu| schubert_class_lambda(&mu, g, -1).map(|p| (mu, p)))
        .collect()
}

/// `λ_i ↦ e_i(s_1 + 1, …, s_g + 1) ψ^i`, `ψ ↦ ψ`, with `S` the Weierstrass
/// sequence of `h`.
pub fn ev_homomorphism(p: &MultiPoly, h: &NumericalSemigroup) -> MultiPoly {
    let weights = ev_weights(h);
    let psi = MultiPoly::var(Variable::PSI);
    p.substitute_with(|v| {
        (v.family() == Family::Lambda).then(|| {
            let c = weights.get(v.index() as usize).cloned().unwrap_or_else(Rational::zero);
            psi.pow_u(v.index()).scale(&c)
        })
    })
}

/// `[1, e_1(s+1), …, e_g(s+1)]` for the Weierstrass sequence of `h`.
fn ev_weights(h: &NumericalSemigroup) -> Vec<Rational> {
    let g = h.genus() as usize;
    let shifted: Vec<Rational> = weierstrass_sequence(h).prefix(g).into_iter().map(|s| int(s + 1)).collect();
    (0..=g).map(|i| elementary_values(i, &shifted)).collect()
}

fn coefficient_vector(p: &MultiPoly, index: &HashMap<Monomial, usize>, len: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// `dim A_d − rank{m·G}` for `d = 0, …, D`.
pub fn hilbert_quotient_upper(g: u32, cutoff: u32) -> Result<Vec<usize>> {
    let gens = relation_generators(g, cutoff)?;
    Ok(upper_from_generators(g, cutoff, &gens))
}

fn upper_from_generators(g: u32, cutoff: u32, gens: &[(Partition, MultiPoly)]) -> Vec<usize> {
    let spec = GradedAlgebraSpec::new(g, cutoff);
    (0..=cutoff)
        .into_par_iter()
        .map(|d| {
            let basis = spec.monomials(d);
            let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut ech = RowEchelon::new(basis.len());
            'fill: for (mu, gen) in gens {
                let w = mu.weight();
                if w > d {
                    continue;
                }
                for m in spec.monomials(d - w) {
                    ech.insert(coefficient_vector(&gen.mul_term(&m, &Rational::one()), &index, basis.len()));
                    if ech.is_full() {
                        break 'fill;
                    }
                }
            }
            basis.len() - ech.rank()
        })
        .collect()
}

/// Rank of the evaluation matrix (semigroups × degree-`d` monomials) for
/// `d = 0, …, D`.
pub fn hilbert_quotient_lower(g: u32, cutoff: u32) -> Result<Vec<usize>> {
    let semigroups = enumerate_semigroups_capped(g, u32::MAX)?;
    Ok(lower_from_semigroups(g, cutoff, &semigroups))
}

fn lower_from_semigroups(g: u32, cutoff: u32, semigroups: &[NumericalSemigroup]) -> Vec<usize> {
    let spec = GradedAlgebraSpec::new(g, cutoff);
    let weights: Vec<Vec<Rational>> = semigroups.iter().map(ev_weights).collect();
    (0..=cutoff)
        .into_par_iter()
        .map(|d| {
            let basis = spec.monomials(d);
            let mut ech = RowEchelon::new(basis.len());
            for w in &weights {
                let row: Vec<Rational> = basis
                    .iter()
                    .map(|m| {
                        m.factors()
                            .iter()
                            .filter(|(v, _)| v.family() == Family::Lambda)
                            .fold(Rational::one(), |acc, (v, e)| acc * w[v.index() as usize].pow(*e as i32))
                    })
                    .collect();
                ech.insert(row);
            }
            ech.rank()
        })
        .collect()
}

/// One degree of a [`HilbertReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub degree: u32,
    pub lower: usize,
    pub upper: usize,
    pub ambient: usize,
    pub generators: usize,
}

/// Lower and upper bounds for the Hilbert function of the tautological ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub genus: u32,
    pub cutoff: u32,
    pub semigroups: usize,
    pub rows: Vec<HilbertRow>,
}

impl HilbertReport {
    pub fn lower(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.lower).collect()
    }

    pub fn upper(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.upper).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("degree,lower,upper\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{}\n", r.degree, r.lower, r.upper));
        }
        s
    }
}

/// Both bounds side by side. Panics if a lower bound exceeds the upper
/// bound, which would contradict `I ⊆ ker ev`.
pub fn sandwich_report(g: u32, cutoff: u32) -> Result<HilbertReport> {
    let spec = GradedAlgebraSpec::new(g, cutoff);
    let semigroups = enumerate_semigroups_capped(g, u32::MAX)?;
    let (lower, upper, gens) = if g == 0 {
        (vec![1; cutoff as usize + 1], vec![1; cutoff as usize + 1], Vec::new())
    } else {
        let gens = relation_generators(g, cutoff)?;
        (lower_from_semigroups(g, cutoff, &semigroups), upper_from_generators(g, cutoff, &gens), gens)
    };
    let rows = (0..=cutoff)
        .map(|d| {
            let (lo, up) = (lower[d as usize], upper[d as usize]);
            assert!(lo <= up, "sandwich violated at genus {g}, degree {d}: lower {lo} > upper {up}");
            HilbertRow {
                degree: d,
                lower: lo,
                upper: up,
                ambient: spec.dim(d),
                generators: gens.iter().filter(|(mu, _)| mu.weight() == d).count(),
            }
        })
        .collect();
    Ok(HilbertReport { genus: g, cutoff, semigroups: semigroups.len(), rows })
}
