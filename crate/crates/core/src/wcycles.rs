//! Weierstrass cycle classes on the pointed moduli, virtual classes driven
//! by arbitrary partitions, and pushforward to the unpointed moduli.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{int, Family, Monomial, MultiPoly, Variable};
use crate::pullback::{check_genus, schubert_class_lambda, schubert_class_x, to_lambda_basis};
use crate::semigroups::{
    hprime_partition, is_realizable, semigroup_from_sequence, sequence_from_hprime, weierstrass_sequence,
    IndexSequence, NumericalSemigroup, Partition,
};

/// Normalisation note attached to every emitted class.
pub const NORMALIZATION: &str = "up-to-constant";

/// Argument shift of the cycle-class formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ShiftConvention {
    /// `u^{|μ|} t_μ(x_1/u − 1, …, x_g/u − 1)`.
    #[default]
    Shifted,
    /// `u^{|μ|} t_μ(x_1/u, …, x_g/u)`, which coincides with `k*Ω_μ`.
    Unshifted,
}

impl ShiftConvention {
    /// `t` in the parameter sequence `a_m = (m + t)u`.
    fn param_shift(self) -> i64 {
        match self {
            ShiftConvention::Shifted => 0,
            ShiftConvention::Unshifted => -1,
        }
    }

    /// `c` in `z_i = x_i/u + (i − g + c)`.
    fn arg_shift(self) -> i64 {
        -1 - self.param_shift()
    }
}

/// A cycle class with its pointed and unpointed forms.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleClass {
    pub genus: u32,
    pub semigroup: Option<NumericalSemigroup>,
    pub partition: Partition,
    pub class_pointed: MultiPoly,
    pub class_unpointed: MultiPoly,
    pub is_virtual: bool,
}

impl CycleClass {
    pub fn codim(&self) -> u32 {
        self.partition.weight()
    }
}

impl Serialize for CycleClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            gaps: Option<&'a [u32]>,
            partition: &'a Partition,
            codim: u32,
            class_pointed: &'a MultiPoly,
            class_unpointed: &'a MultiPoly,
            #[serde(rename = "virtual")]
            is_virtual: bool,
            normalization: &'static str,
        }
        Record {
            gaps: self.semigroup.as_ref().map(|h| h.gaps()),
            partition: &self.partition,
            codim: self.codim(),
            class_pointed: &self.class_pointed,
            class_unpointed: &self.class_unpointed,
            is_virtual: self.is_virtual,
            normalization: NORMALIZATION,
        }
        .serialize(serializer)
    }
}

/// `[W_H]` in λ-classes and `ψ`.
pub fn weierstrass_class(h: &NumericalSemigroup) -> Result<CycleClass> {
    weierstrass_class_with(h, ShiftConvention::Shifted)
}

pub fn weierstrass_class_with(h: &NumericalSemigroup, convention: ShiftConvention) -> Result<CycleClass> {
    let g = h.genus();
    check_genus(g)?;
    let s = weierstrass_sequence(h);
    let mu = hprime_partition(&s, g)?;
    let mut class = class_for_partition(&mu, g, convention)?;
    class.semigroup = Some(h.clone());
    class.is_virtual = !is_realizable(&s, g);
    Ok(class)
}

/// The same formula driven by an arbitrary partition with `ℓ(μ) ≤ g`;
/// flagged virtual when the attached sequence violates the realizability
/// bounds.
pub fn virtual_class(mu: &Partition, g: u32) -> Result<CycleClass> {
    virtual_class_with(mu, g, ShiftConvention::Shifted)
}

pub fn virtual_class_with(mu: &Partition, g: u32, convention: ShiftConvention) -> Result<CycleClass> {
    check_genus(g)?;
    let s = sequence_from_hprime(mu, g)?;
    let mut class = class_for_partition(mu, g, convention)?;
    class.is_virtual = !is_realizable(&s, g);
    Ok(class)
}

fn class_for_partition(mu: &Partition, g: u32, convention: ShiftConvention) -> Result<CycleClass> {
    if mu.len() > g as usize {
        return Err(Error::LengthExceedsGenus { partition: mu.to_string(), length: mu.len(), genus: g });
    }
    let class_pointed = schubert_class_lambda(mu, g, convention.param_shift())?;
    let class_unpointed = push_to_unpointed(&class_pointed, g, false);
    Ok(CycleClass {
        genus: g,
        semigroup: None,
        partition: mu.clone(),
        class_pointed,
        class_unpointed,
        is_virtual: false,
    })
}

/// Pointed class through the ratio-of-alternants route, for cross-checks.
pub fn cycle_class_by_alternants(mu: &Partition, g: u32, convention: ShiftConvention) -> Result<MultiPoly> {
    let x_form = schubert_class_x(mu, g, convention.arg_shift(), 0)?;
    to_lambda_basis(&x_form, g)
}

/// `c(λ)ψ^m ↦ c(λ)κ_{m−1}` with `κ_{−1} = 0`; optionally `κ_0 ↦ 2g − 2`.
pub fn push_to_unpointed(p: &MultiPoly, g: u32, substitute_kappa0: bool) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let k = m.exponent(Variable::PSI);
        if k == 0 {
            continue;
        }
        let (_, rest) = m.split(|v| *v == Variable::PSI);
        let pushed = rest.mul(&Monomial::var(Variable::kappa(k - 1)));
        out.add_term(pushed, c.clone());
    }
    if substitute_kappa0 {
        out = out.substitute_with(|v| {
            (v.family() == Family::Kappa && v.index() == 0).then(|| MultiPoly::constant(int(2 * g as i64 - 2)))
        });
    }
    out
}

/// Open-cell criterion (`closed = false`: the attached set is a numerical
/// semigroup of genus `g`) or closure criterion (`closed = true`: the
/// realizability bounds).
pub fn intersection_nonempty(s: &IndexSequence, g: u32, closed: bool) -> bool {
    if closed {
        is_realizable(s, g)
    } else {
        matches!(semigroup_from_sequence(s), Ok(h) if h.genus() == g)
    }
}
