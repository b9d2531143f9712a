use wtaut::exactalg::{int, rat};
use wtaut::pullback::{
    bernoulli, chern_interval, from_lambda_basis, kstar_power_sum, kstar_schubert, kstar_schubert_det, mumford_reduce,
    power_sum_lambda, schubert_class_lambda, smooth_power_sum, smooth_power_sum_printed, to_lambda_basis,
    ChernConvention, EvenSign,
};
use wtaut::schur::{complete_symmetric, elementary_symmetric};
use wtaut::{Family, MultiPoly, Partition, Variable};

fn xs(g: u32) -> Vec<MultiPoly> {
    (1..=g).map(|i| MultiPoly::var(Variable::x(i))).collect()
}

fn parse(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

fn psi_free(p: &MultiPoly) -> MultiPoly {
    p.filter_terms(|m, _| m.exponent(Variable::PSI) == 0)
}

#[test]
fn schubert_classes_are_homogeneous() {
    for g in 1..=4 {
        for mu in Partition::all_up_to_weight(5) {
            let c = kstar_schubert(&mu, g).unwrap();
            for p in [&c.value_x, &c.value_lambda] {
                assert!(p.is_zero() || (p.is_homogeneous() && p.degree() == Some(mu.weight() as i64)), "mu={mu}, g={g}");
            }
        }
    }
}

#[test]
fn zero_class_beyond_genus() {
    for g in 1..=4u32 {
        for mu in Partition::all_up_to_weight(6).into_iter().filter(|m| m.len() > g as usize) {
            assert!(kstar_schubert(&mu, g).unwrap().value_x.is_zero(), "mu={mu}, g={g}");
            assert!(schubert_class_lambda(&mu, g, -1).unwrap().is_zero());
        }
    }
}

#[test]
fn lambda_route_matches_alternant_route() {
    for g in 1..=4 {
        for mu in Partition::all_up_to_weight(5) {
            let alt = kstar_schubert(&mu, g).unwrap();
            assert_eq!(schubert_class_lambda(&mu, g, -1).unwrap(), alt.value_lambda, "mu={mu}, g={g}");
            assert_eq!(kstar_schubert_det(&mu, g).unwrap().value_x, alt.value_x, "mu={mu}, g={g}");
        }
    }
}

#[test]
fn lambda_basis_round_trip() {
    for g in 1..=4 {
        for mu in Partition::all_up_to_weight(4) {
            let c = kstar_schubert(&mu, g).unwrap();
            assert_eq!(from_lambda_basis(&c.value_lambda, g), c.value_x);
        }
    }
    assert!(to_lambda_basis(&parse("x1^2"), 2).is_err());
    assert!(to_lambda_basis(&parse("x3"), 2).is_err());
}

#[test]
fn newton_consistency() {
    for g in 1..=4 {
        let x = xs(g);
        let e = |k: u32| if k <= g { elementary_symmetric(k, &x) } else { MultiPoly::zero() };
        let mut p = vec![MultiPoly::from_int(g as i64)];
        for s in 1..=6u32 {
            let mut newton = e(s).scale(&int(if s % 2 == 1 { s as i64 } else { -(s as i64) }));
            for k in 1..s {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                newton += (&e(k) * &p[(s - k) as usize]).scale(&int(sign));
            }
            let c = kstar_power_sum(s, g, ChernConvention::PowerSum).unwrap();
            assert_eq!(psi_free(&c.value_x), newton, "s={s}, g={g}");
            assert_eq!(psi_free(&c.value_lambda), power_sum_lambda(s, g));
            assert_eq!(to_lambda_basis(&newton, g).unwrap(), power_sum_lambda(s, g));
            assert!(c.value_x.is_homogeneous() && c.value_x.degree() == Some(s as i64));
            p.push(newton);
        }
    }
}

#[test]
fn chern_character_convention_divides_by_factorial() {
    let a = kstar_power_sum(3, 2, ChernConvention::PowerSum).unwrap();
    let b = kstar_power_sum(3, 2, ChernConvention::ChernCharacter).unwrap();
    assert_eq!(b.value_x.scale(&int(6)), a.value_x);
    assert_eq!(b.value_lambda.scale(&int(6)), a.value_lambda);
}

#[test]
fn even_power_sums_vanish_on_smooth_curves() {
    for g in 1..=4 {
        for r in 1..=2 {
            let p = to_lambda_basis(&xs(g).iter().map(|x| x.pow_u(2 * r)).sum(), g).unwrap();
            assert!(mumford_reduce(&p, g).is_zero(), "r={r}, g={g}");
        }
    }
}

#[test]
fn mumford_reduction_matches_smooth_even_case() {
    for g in 1..=4 {
        for s in [2, 4] {
            let c = kstar_power_sum(s, g, ChernConvention::PowerSum).unwrap();
            assert_eq!(mumford_reduce(&c.value_lambda, g), smooth_power_sum(s, g, EvenSign::Derived).unwrap());
        }
    }
}

#[test]
fn smooth_odd_case() {
    assert_eq!(smooth_power_sum(1, 2, EvenSign::Derived).unwrap(), parse("kappa1/12 + psi"));
    assert_eq!(smooth_power_sum(2, 1, EvenSign::Derived).unwrap(), MultiPoly::zero());
    assert_eq!(smooth_power_sum(2, 3, EvenSign::Derived).unwrap(), parse("-5*psi^2"));
    assert_eq!(smooth_power_sum(2, 3, EvenSign::Printed).unwrap(), parse("5*psi^2"));
    assert_eq!(smooth_power_sum_printed(1, 2).unwrap(), parse("kappa2/12 + psi"));
    for s in (1..=7).step_by(2) {
        let p = smooth_power_sum(s, 3, EvenSign::Derived).unwrap();
        assert!(p.is_homogeneous() && p.degree() == Some(s as i64));
        assert!(p.variables().iter().all(|v| v.family() != Family::Kappa || v.index() == s));
    }
}

#[test]
fn mumford_normal_forms() {
    let p = parse("lambda1^4 + lambda1*lambda2*psi - 2*lambda2^2");
    let r = mumford_reduce(&p, 2);
    assert!(r.is_homogeneous() && r.degree() == Some(4));
    assert!(r.variables().iter().all(|v| matches!(v.family(), Family::Lambda | Family::Psi)));
    assert_eq!(mumford_reduce(&r, 2), r);
    // c(E)c(E^∨) = 1 in degree 2: 2λ_2 − λ_1² ≡ 0
    assert!(mumford_reduce(&parse("2*lambda2 - lambda1^2"), 2).is_zero());
    assert!(mumford_reduce(&parse("lambda1^2"), 1).is_zero());
}

#[test]
fn complete_symmetric_in_lambda_basis() {
    for g in 1..=4u32 {
        for a in 1..=g {
            let h = to_lambda_basis(&complete_symmetric(a, &xs(g)), g).unwrap();
            let sign = if a % 2 == 0 { 1 } else { -1 };
            let target = MultiPoly::var(Variable::lambda(a)).scale(&int(sign));
            assert!(mumford_reduce(&(h - target), g).is_zero());
        }
    }
}

#[test]
fn bernoulli_numbers() {
    let expected = [rat(1, 1), rat(-1, 2), rat(1, 6), rat(0, 1), rat(-1, 30), rat(0, 1), rat(1, 42), rat(0, 1), rat(-1, 30)];
    for (n, b) in expected.iter().enumerate() {
        assert_eq!(&bernoulli(n as u32), b, "B_{n}");
    }
    assert_eq!(bernoulli(12), rat(-691, 2730));
}

#[test]
fn chern_interval_products() {
    assert_eq!(chern_interval(0, 1), parse("(1 - u)*(1 - 2*u)"));
    assert_eq!(chern_interval(3, 2), MultiPoly::one());
}

#[test]
fn genus_one_schubert_pullbacks() {
    let g1 = |parts: Vec<u32>| kstar_schubert(&Partition::new(parts).unwrap(), 1).unwrap().value_lambda;
    assert_eq!(g1(vec![2]), parse("lambda1^2 - lambda1*psi"));
    // x(x − u)(x − 2u) at x = −λ1, u = −ψ
    assert_eq!(g1(vec![3]), parse("-lambda1*(lambda1 - psi)*(lambda1 - 2*psi)"));
    let ideal = parse("lambda1^2 - lambda1*psi");
    assert_eq!(g1(vec![3]), ideal * parse("2*psi - lambda1"));
}
