//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
//! any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wtaut::exactalg::int;
use wtaut::pullback::{kstar_schubert, kstar_schubert_padded, mumford_reduce, to_lambda_basis};
use wtaut::schur::{complete_symmetric, psi_matrix, shifted_schur, PsiVariant};
use wtaut::semigroups::{enumerate_semigroups, NumericalSemigroup, Partition};
use wtaut::tautring::{
    ev_homomorphism, hilbert_quotient_lower, hilbert_quotient_upper, relation_generators, sandwich_report,
};
use wtaut::wcycles::{push_to_unpointed, virtual_class, weierstrass_class};
use wtaut::{MultiPoly, Variable};

const LIMIT_ENUMERATION: Duration = Duration::from_secs(10);
const LIMIT_DETERMINANTS: Duration = Duration::from_secs(60);
const LIMIT_PIPELINE: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))
}

fn parse(s: &str) -> MultiPoly {
    s.parse().expect("valid polynomial literal")
}

fn small_partitions() -> Vec<Partition> {
    Partition::all_up_to_weight(5)
}

/// Gap sets of genus `g` by exhaustive search over subsets of `{1, …, 2g−1}`.
fn brute_force_gap_sets(g: u32) -> BTreeSet<Vec<u32>> {
    if g == 0 {
        return BTreeSet::from([vec![]]);
    }
    let top = 2 * g - 1;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << top) {
        if mask.count_ones() != g {
            continue;
        }
        let gap = |n: u32| n >= 1 && n <= top && mask & (1 << (n - 1)) != 0;
        let closed = (1..=2 * top).all(|a| gap(a) || (1..=2 * top).all(|b| gap(b) || !gap(a + b)));
        if closed {
            out.insert((1..=top).filter(|&n| gap(n)).collect());
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> = (0..=8).map(|g| enumerate_semigroups(g).map(|v| v.len())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(counts == [1, 1, 2, 4, 7, 12, 23, 39, 67], || format!("counts {counts:?}"))?;
    for g in 0..=6 {
        let tree: BTreeSet<Vec<u32>> =
            enumerate_semigroups(g).unwrap().into_iter().map(|h| h.gaps().to_vec()).collect();
        ensure(tree == brute_force_gap_sets(g), || format!("tree and brute force differ at g={g}"))?;
    }
    within(start, LIMIT_ENUMERATION)?;
    Ok(format!("counts {counts:?}, brute force agrees for g <= 6, {:?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for g in 1..=4 {
        for mu in small_partitions() {
            let k = kstar_schubert(&mu, g).map_err(|e| e.to_string())?.value_x;
            let a = psi_matrix(&mu, g, PsiVariant::Psi).det().map_err(|e| e.to_string())?;
            let b = psi_matrix(&mu, g, PsiVariant::PsiPrime).det().map_err(|e| e.to_string())?;
            ensure(a == k && b == k, || format!("mismatch at mu={mu}, g={g}: Psi={a}, Psi'={b}, k*={k}"))?;
            checked += 1;
        }
    }
    within(start, LIMIT_DETERMINANTS)?;
    Ok(format!("{checked} cases, {:?}", start.elapsed()))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for g in 1..=4 {
        for mu in small_partitions() {
            let base = kstar_schubert_padded(&mu, g, 0).map_err(|e| e.to_string())?;
            for extra in 1..=3 {
                let padded = kstar_schubert_padded(&mu, g, extra).map_err(|e| e.to_string())?;
                ensure(padded == base, || format!("mu={mu}, g={g} changes with {extra} extra arguments"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} paddings"))
}

fn criterion_4() -> Outcome {
    let ideal = parse("lambda1^2 - lambda1*psi");
    let gens = relation_generators(1, 6).map_err(|e| e.to_string())?;
    ensure(!gens.is_empty(), || "no generators".into())?;
    for (mu, g) in &gens {
        let (_, r) = g.div_rem(&ideal).map_err(|e| e.to_string())?;
        ensure(r.is_zero(), || format!("{mu}: remainder {r}"))?;
    }
    let upper = hilbert_quotient_upper(1, 6).map_err(|e| e.to_string())?;
    let lower = hilbert_quotient_lower(1, 6).map_err(|e| e.to_string())?;
    ensure(upper == [1, 2, 2, 2, 2, 2, 2], || format!("upper {upper:?}"))?;
    ensure(lower == [1; 7], || format!("lower {lower:?}"))?;
    Ok(format!("{} generators in (lambda1^2 - lambda1*psi), upper {upper:?}, lower {lower:?}", gens.len()))
}

fn criterion_5() -> Outcome {
    let h = NumericalSemigroup::from_gaps(vec![1, 3]).map_err(|e| e.to_string())?;
    let c = weierstrass_class(&h).map_err(|e| e.to_string())?;
    ensure(c.class_pointed == parse("3*psi - lambda1"), || format!("g=2 class {}", c.class_pointed))?;
    let lambda1 = MultiPoly::var(Variable::lambda(1));
    let psi = MultiPoly::var(Variable::PSI);
    for g in 2..=5u32 {
        // classical Weierstrass divisor: −λ + g(g+1)/2 ψ
        let oracle = psi.scale(&int((g * (g + 1) / 2) as i64)) - &lambda1;
        let mu = Partition::new(vec![1]).unwrap();
        let v = virtual_class(&mu, g).map_err(|e| e.to_string())?;
        ensure(v.class_pointed == oracle, || format!("g={g}: {} vs {oracle}", v.class_pointed))?;
    }
    Ok("3*psi - lambda1 at g=2; -lambda1 + g(g+1)/2*psi for g=2..5".into())
}

fn criterion_6() -> Outcome {
    let g = 2;
    let c = weierstrass_class(&NumericalSemigroup::hyperelliptic(g)).map_err(|e| e.to_string())?;
    let pushed = push_to_unpointed(&c.class_pointed, g, true);
    let classical = MultiPoly::from_int(2 * g as i64 + 2);
    ensure(pushed == classical, || format!("pushforward {pushed}"))?;
    Ok(format!("pushforward = {pushed}"))
}

fn criterion_7() -> Outcome {
    let mut annihilated = 0;
    for g in 1..=4 {
        let semigroups = enumerate_semigroups(g).map_err(|e| e.to_string())?;
        for (mu, rel) in relation_generators(g, 8).map_err(|e| e.to_string())? {
            for h in &semigroups {
                let v = ev_homomorphism(&rel, h);
                ensure(v.is_zero(), || format!("ev at {h} of generator {mu} is {v}"))?;
                annihilated += 1;
            }
        }
    }
    let parts = small_partitions();
    let n = 5;
    let mut pairs = 0;
    for nu in &parts {
        let args: Vec<MultiPoly> = (1..=n).map(|i| MultiPoly::from_int(nu.part(i) as i64)).collect();
        for mu in &parts {
            let contained = mu.len() <= nu.len() && (1..=mu.len()).all(|i| mu.part(i) <= nu.part(i));
            let value = shifted_schur(mu, &args).map_err(|e| e.to_string())?;
            ensure(value.is_zero() != contained, || format!("s*_{mu}({nu}) = {value}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{annihilated} evaluations vanish; vanishing pattern exact on {pairs} pairs"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    for g in 0..=6 {
        let r = sandwich_report(g, 10).map_err(|e| e.to_string())?;
        ensure(r.rows.iter().all(|row| row.lower <= row.upper), || format!("g={g}"))?;
    }
    let semigroups = enumerate_semigroups(6).map_err(|e| e.to_string())?;
    ensure(semigroups.len() == 23, || format!("{} semigroups at g=6", semigroups.len()))?;
    for h in &semigroups {
        let c = weierstrass_class(h).map_err(|e| e.to_string())?;
        ensure(c.class_pointed.is_homogeneous() || c.class_pointed.is_zero(), || format!("{h} not homogeneous"))?;
    }
    let report = sandwich_report(6, 10).map_err(|e| e.to_string())?;
    within(start, LIMIT_PIPELINE)?;
    Ok(format!(
        "lower {:?} <= upper {:?} at g=6; pipeline {:?}",
        report.lower(),
        report.upper(),
        start.elapsed()
    ))
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for g in 1..=4u32 {
        let xs: Vec<MultiPoly> = (1..=g).map(|i| MultiPoly::var(Variable::x(i))).collect();
        for a in 1..=g {
            let h = to_lambda_basis(&complete_symmetric(a, &xs), g).map_err(|e| e.to_string())?;
            let sign = if a % 2 == 0 { 1 } else { -1 };
            let target = MultiPoly::var(Variable::lambda(a)).scale(&int(sign));
            let r = mumford_reduce(&(h - target), g);
            ensure(r.is_zero(), || format!("a={a}, g={g}: residue {r}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} cases reduce to 0"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("semigroup enumeration", criterion_1),
        ("determinant equivalence", criterion_2),
        ("pinned-tail stability", criterion_3),
        ("genus-1 relations", criterion_4),
        ("Weierstrass divisor", criterion_5),
        ("pushforward count", criterion_6),
        ("localization", criterion_7),
        ("sandwich soundness", criterion_8),
        ("Mumford consistency", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
