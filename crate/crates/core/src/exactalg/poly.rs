use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::variable::Variable;
use super::Rational;
use crate::error::{Error, Result};

/// A power product of variables, stored sparsely and sorted by variable.
///
/// Ordering is graded by weighted degree, then lexicographic with the
/// canonically smallest variable (`λ_1`) most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
    degree: i64,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { factors: vec![(v, 1)], degree: v.weight() }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables are merged, zero exponents dropped.
    pub fn from_factors<I: IntoIterator<Item = (Variable, u32)>>(factors: I) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in factors {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        let degree = map.iter().map(|(v, &e)| v.weight() * e as i64).sum();
        Monomial { factors: map.into_iter().collect(), degree }
    }

    /// Weighted degree `Σ exponent · weight`.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        match self.factors.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out, degree: self.degree + other.degree }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 < v {
                return None;
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                let f = other.factors[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial { factors: out, degree: self.degree - other.degree })
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|&(v, e)| (v, e * n)).collect(),
            degree: self.degree * n as i64,
        }
    }

    /// Splits into the part whose variables satisfy `keep` and the rest.
    pub fn split<F: Fn(&Variable) -> bool>(&self, keep: F) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.factors.iter().partition(|(v, _)| keep(v));
        (Monomial::from_factors(a), Monomial::from_factors(b))
    }

    /// Weighted degree under a custom grading.
    pub fn degree_by<F: Fn(&Variable) -> i64>(&self, weight: F) -> i64 {
        self.factors.iter().map(|(v, e)| weight(v) * *e as i64).sum()
    }

    pub fn latex(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(v, e)| if *e == 1 { v.latex() } else { format!("{}^{{{}}}", v.latex(), e) })
            .collect();
        parts.join(" ")
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::monomial(c, Monomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        MultiPoly::constant(super::int(n))
    }

    pub fn var(v: Variable) -> Self {
        MultiPoly::monomial(Rational::one(), Monomial::var(v))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Maximum weighted degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|(v, _)| *v)).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        // multiplication by a monomial preserves the order, so no re-sorting is needed
        MultiPoly { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect() }
    }

    fn mul_impl(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                }
            }
        }
        MultiPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Integer power; negative exponents are rejected.
    pub fn pow(&self, e: i64) -> Result<MultiPoly> {
        if e < 0 {
            return Err(Error::NonPolynomial(format!("power with negative exponent {e}")));
        }
        Ok(self.pow_u(e as u32))
    }

    pub fn pow_u(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Ring homomorphism sending each variable in `map` to its image; other
    /// variables are fixed.
    pub fn substitute(&self, map: &BTreeMap<Variable, MultiPoly>) -> MultiPoly {
        self.substitute_with(|v| map.get(v).cloned())
    }

    /// As [`substitute`](Self::substitute) with the images given by a closure
    /// (`None` keeps the variable).
    pub fn substitute_with<F: Fn(&Variable) -> Option<MultiPoly>>(&self, image: F) -> MultiPoly {
        let mut powers: HashMap<(Variable, u32), MultiPoly> = HashMap::new();
        let mut images: HashMap<Variable, Option<MultiPoly>> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut prod = MultiPoly::constant(c.clone());
            for &(v, e) in m.factors() {
                let img = images.entry(v).or_insert_with(|| image(&v));
                match img {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow_u(e));
                        prod = &prod * &*pw;
                    }
                }
                if prod.is_zero() {
                    break;
                }
            }
            if prod.is_zero() {
                continue;
            }
            let kept = Monomial::from_factors(kept);
            out += prod.mul_term(&kept, &Rational::one());
        }
        out
    }

    /// Keeps only the terms for which `keep` holds.
    pub fn filter_terms<F: Fn(&Monomial, &Rational) -> bool>(&self, keep: F) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().filter(|(m, c)| keep(m, c)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Component of weighted degree `d`.
    pub fn homogeneous_component(&self, d: i64) -> MultiPoly {
        self.filter_terms(|m, _| m.degree() == d)
    }

    /// Division by a single divisor in the canonical monomial order:
    /// returns `(q, r)` with `self = q·divisor + r` and no term of `r`
    /// divisible by the leading monomial of `divisor`.
    pub fn div_rem(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| Error::NonPolynomial("division by zero polynomial".into()))?;
        let mut p = self.clone();
        let mut q = MultiPoly::zero();
        let mut r = MultiPoly::zero();
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            match m.div(&lm) {
                Some(t) => {
                    let coef = &c / &lc;
                    p -= divisor.mul_term(&t, &coef);
                    q.add_term(t, coef);
                }
                None => {
                    p.terms.remove(&m);
                    r.add_term(m, c);
                }
            }
        }
        Ok((q, r))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        if let Some(c) = divisor.as_constant() {
            if c.is_zero() {
                return Err(Error::NonPolynomial("division by zero polynomial".into()));
            }
            return Ok(self.scale(&c.recip()));
        }
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({divisor}) leaves remainder {r}")))
        }
    }

    /// Homogeneous components under a custom non-negative grading; entry `i`
    /// has degree `i`, and the components sum back to `self`.
    pub fn components_by<F: Fn(&Variable) -> i64>(&self, weight: F) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.degree_by(&weight);
            assert!(d >= 0, "grading must be non-negative");
            let d = d as usize;
            if out.len() <= d {
                out.resize(d + 1, MultiPoly::zero());
            }
            out[d].add_term(m.clone(), c.clone());
        }
        if out.is_empty() {
            out.push(MultiPoly::zero());
        }
        out
    }

    /// Canonical JSON form: terms in descending canonical order, each
    /// `{"coeff": "p/q", "exps": {"x1": 2, ...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serialisation cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MultiPoly> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coef = if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            if m.is_one() {
                s.push_str(&coef);
            } else if a.is_one() {
                s.push_str(&m.latex());
            } else {
                s.push_str(&coef);
                s.push(' ');
                s.push_str(&m.latex());
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    coeff: String,
    exps: BTreeMap<String, u32>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord {
                coeff: c.to_string(),
                exps: m.factors().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = MultiPoly::zero();
        for r in records {
            let c: Rational = r.coeff.parse().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", r.coeff)))?;
            let mut factors = Vec::with_capacity(r.exps.len());
            for (name, e) in r.exps {
                let v: Variable = name.parse().map_err(D::Error::custom)?;
                factors.push((v, e));
            }
            p.add_term(Monomial::from_factors(factors), c);
        }
        Ok(p)
    }
}

impl From<Variable> for MultiPoly {
    fn from(v: Variable) -> Self {
        MultiPoly::var(v)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::from_int(n)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl SubAssign<MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: MultiPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -(self.clone())
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                $body(self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &MultiPoly, b: &MultiPoly| {
    let mut out = a.clone();
    out += b;
    out
});
binop!(Sub, sub, |a: &MultiPoly, b: &MultiPoly| {
    let mut out = a.clone();
    out -= b;
    out
});
binop!(Mul, mul, |a: &MultiPoly, b: &MultiPoly| a.mul_impl(b));

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::one(), |acc, p| &acc * &p)
    }
}
