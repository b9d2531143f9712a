use std::collections::HashMap;

use proptest::prelude::*;
use wtaut::exactalg::rank_over_q;
use wtaut::semigroups::enumerate_semigroups;
use wtaut::tautring::{
    ev_homomorphism, hilbert_quotient_lower, hilbert_quotient_upper, relation_generators, sandwich_report,
    GradedAlgebraSpec,
};
use wtaut::{Monomial, Rational};

/// Number of `(a_1, …, a_g, b)` with `Σ i·a_i + b = d`.
fn weighted_compositions(g: u32, d: u32) -> usize {
    let d = d as usize;
    let mut count = vec![0usize; d + 1];
    count[0] = 1;
    for w in std::iter::once(1).chain(1..=g as usize) {
        for n in w..=d {
            count[n] += count[n - w];
        }
    }
    count[d]
}

#[test]
fn ambient_dimensions() {
    for g in 0..=6 {
        let spec = GradedAlgebraSpec::new(g, 12);
        for d in 0..=12 {
            assert_eq!(spec.dim(d), weighted_compositions(g, d), "g={g}, d={d}");
        }
    }
}

#[test]
fn relations_are_in_the_kernel_of_ev() {
    for g in 1..=3 {
        let semigroups = enumerate_semigroups(g).unwrap();
        for (mu, rel) in relation_generators(g, 7).unwrap() {
            assert!(rel.is_homogeneous() && rel.degree() == Some(mu.weight() as i64));
            for h in &semigroups {
                assert!(ev_homomorphism(&rel, h).is_zero(), "mu={mu}, gaps {:?}", h.gaps());
            }
        }
    }
}

#[test]
fn monotone_stabilization() {
    for g in 1..=4 {
        let short = sandwich_report(g, 5).unwrap();
        let long = sandwich_report(g, 8).unwrap();
        assert_eq!(short.rows[..], long.rows[..6], "g={g}");
    }
}

#[test]
fn sandwich_holds() {
    for g in 0..=5 {
        let r = sandwich_report(g, 8).unwrap();
        for row in &r.rows {
            assert!(row.lower <= row.upper && row.upper <= row.ambient, "g={g}, {row:?}");
        }
    }
}

#[test]
fn genus_one_tables() {
    assert_eq!(hilbert_quotient_upper(1, 4).unwrap(), vec![1, 2, 2, 2, 2]);
    assert_eq!(hilbert_quotient_lower(1, 4).unwrap(), vec![1; 5]);
    assert!(relation_generators(2, 2).unwrap().is_empty());
}

fn upper_rank(g: u32, d: u32, gen_order: &[usize], col_order: &[usize]) -> usize {
    let spec = GradedAlgebraSpec::new(g, d);
    let gens = relation_generators(g, d).unwrap();
    let basis = spec.monomials(d);
    let index: HashMap<Monomial, usize> =
        basis.iter().cloned().enumerate().map(|(i, m)| (m, col_order[i % col_order.len()] % basis.len())).collect();
    let mut rows = Vec::new();
    for &k in gen_order {
        let Some((mu, gen)) = gens.get(k) else { continue };
        if mu.weight() > d {
            continue;
        }
        for m in spec.monomials(d - mu.weight()) {
            let mut row = vec![Rational::from_integer(0.into()); basis.len()];
            for (mono, c) in gen.mul_term(&m, &Rational::from_integer(1.into())).terms() {
                row[index[mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    rank_over_q(&rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn upper_rank_is_order_independent(
        g in 1u32..=2,
        d in 3u32..=6,
        gen_order in Just((0..16).collect::<Vec<usize>>()).prop_shuffle(),
        col_seed in any::<u64>(),
    ) {
        let spec = GradedAlgebraSpec::new(g, d);
        let n = spec.dim(d);
        let mut cols: Vec<usize> = (0..n).collect();
        // deterministic Fisher–Yates from the seed
        let mut state = col_seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            cols.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let expected = n - hilbert_quotient_upper(g, d).unwrap()[d as usize];
        prop_assert_eq!(upper_rank(g, d, &gen_order, &cols), expected);
    }
}
