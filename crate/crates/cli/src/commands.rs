//! One function per subcommand, each producing the result for one genus.

use rayon::prelude::*;
use serde_json::{json, Value};
use wtaut::pullback::{
    from_lambda_basis, kstar_power_sum, kstar_schubert, kstar_schubert_det, mumford_reduce, schubert_class_lambda,
    smooth_power_sum, ChernConvention, EvenSign, Mode, PullbackClass, PullbackSource,
};
use wtaut::schur::{factorial_schur, shifted_schur};
use wtaut::semigroups::{enumerate_semigroups_capped, SemigroupRecord};
use wtaut::tautring::{relation_generators, sandwich_report};
use wtaut::wcycles::{push_to_unpointed, virtual_class_with, weierstrass_class_with, CycleClass, ShiftConvention};
use wtaut::{MultiPoly, NumericalSemigroup, Partition};

use crate::config::{Method, ModeArg, RunConfig, SchurKind};
use crate::output::{csv_table, latex_table, list, math, Rendered};
use crate::CliError;

pub const WARN_KAPPA_INDEX: &str = "kappa index: odd power sums use kappa_{2r-1}, the index forced by weighted degree; \
     a kappa_{2r} term would not be homogeneous";
pub const WARN_EVEN_DERIVED: &str =
    "even power sums carry the derived sign -sum (i-g)^{2r} psi^{2r}; --paper-sign selects the + form";
pub const WARN_EVEN_PRINTED: &str =
    "even power sums use the + sign from --paper-sign, which disagrees with the derived sign";
pub const WARN_UNSHIFTED: &str = "unshifted form u^{|mu|} t_mu(x/u) requested; it does not reproduce the \
     Weierstrass divisor class -lambda1 + g(g+1)/2 psi, which the default shifted form does";
pub const WARN_LOWER_PSI: &str =
    "lower bounds are ranks on Q[lambda, psi]/I_ev with psi kept, since ev fixes psi";
pub const WARN_CHERN_CHARACTER: &str = "--chern-character divides the power-sum class by s!";

fn poly_json(p: &MultiPoly) -> Value {
    p.to_json()
}

fn mode_of(cfg: &RunConfig) -> Mode {
    match cfg.mode {
        ModeArg::Cm => Mode::Cm,
        ModeArg::Smooth => Mode::Smooth,
    }
}

fn convention(cfg: &RunConfig) -> ShiftConvention {
    if cfg.unshifted {
        ShiftConvention::Unshifted
    } else {
        ShiftConvention::Shifted
    }
}

pub fn semigroups(cfg: &RunConfig, g: u32) -> Result<Rendered, CliError> {
    let records: Vec<SemigroupRecord> =
        enumerate_semigroups_capped(g, cfg.max_genus)?.iter().map(SemigroupRecord::new).collect();
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.genus.to_string(),
                list(&r.gaps),
                list(&r.sequence_head),
                list(r.partition_gr_gm1.parts()),
                list(r.partition_hprime.parts()),
            ]
        })
        .collect();
    let tex_rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                format!("\\{{{}\\}}", r.gaps.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
                format!("({})", r.sequence_head.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
                r.partition_gr_gm1.to_string(),
                r.partition_hprime.to_string(),
            ]
        })
        .collect();
    Ok(Rendered {
        genus: Some(g),
        payload: json!({ "genus": g, "count": records.len(), "semigroups": records }),
        csv: csv_table(&["genus", "gaps", "sequence_head", "partition_gr_gm1", "partition_hprime"], &rows),
        latex: latex_table(&["gaps", "$S$", "$\\mu$ ($Gr_{g-1}$)", "$\\mu$ ($\\mathcal{H}'$)"], &tex_rows),
        warnings: Vec::new(),
    })
}

/// Which cycle classes to emit.
#[derive(Clone, Debug)]
pub enum Selector {
    Gaps(NumericalSemigroup),
    Partition(Partition),
    AllSemigroups,
}

pub fn class(cfg: &RunConfig, g: u32, selector: &Selector) -> Result<Rendered, CliError> {
    let conv = convention(cfg);
    let mut classes: Vec<CycleClass> = match selector {
        Selector::Gaps(h) => {
            if h.genus() != g {
                return Err(CliError::data(format!("gaps {:?} have genus {}, not {g}", h.gaps(), h.genus())));
            }
            vec![weierstrass_class_with(h, conv)?]
        }
        Selector::Partition(mu) => vec![virtual_class_with(mu, g, conv)?],
        Selector::AllSemigroups => enumerate_semigroups_capped(g, cfg.max_genus)?
            .par_iter()
            .map(|h| weierstrass_class_with(h, conv))
            .collect::<Result<_, _>>()?,
    };
    if cfg.kappa0_substitute {
        for c in &mut classes {
            c.class_unpointed = push_to_unpointed(&c.class_pointed, g, true);
        }
    }
    let smooth = cfg.mode == ModeArg::Smooth;
    let records: Vec<Value> = classes
        .iter()
        .map(|c| {
            let mut v = serde_json::to_value(c).expect("cycle classes serialize");
            if smooth {
                v["class_pointed_smooth"] = poly_json(&mumford_reduce(&c.class_pointed, g));
            }
            v
        })
        .collect();
    let gaps_cell = |c: &CycleClass| c.semigroup.as_ref().map(|h| list(h.gaps())).unwrap_or_default();
    let rows: Vec<Vec<String>> = classes
        .iter()
        .map(|c| {
            vec![
                gaps_cell(c),
                list(c.partition.parts()),
                c.codim().to_string(),
                c.is_virtual.to_string(),
                c.class_pointed.to_string(),
                c.class_unpointed.to_string(),
            ]
        })
        .collect();
    let tex_rows: Vec<Vec<String>> = classes
        .iter()
        .map(|c| {
            vec![
                gaps_cell(c),
                c.partition.to_string(),
                c.codim().to_string(),
                math(&c.class_pointed),
                math(&c.class_unpointed),
            ]
        })
        .collect();
    let mut warnings = Vec::new();
    if cfg.unshifted {
        warnings.push(WARN_UNSHIFTED.to_string());
    }
    Ok(Rendered {
        genus: Some(g),
        payload: json!({ "genus": g, "classes": records }),
        csv: csv_table(&["gaps", "partition", "codim", "virtual", "class_pointed", "class_unpointed"], &rows),
        latex: latex_table(&["gaps", "$\\mu$", "codim", "$[W]$", "$\\pi_*[W]$"], &tex_rows),
        warnings,
    })
}

pub fn pullback(cfg: &RunConfig, g: u32, mu: &Partition, method: Method) -> Result<Rendered, CliError> {
    let mut c = match method {
        Method::Auto => {
            let value_lambda = schubert_class_lambda(mu, g, -1)?;
            PullbackClass {
                genus: g,
                source: PullbackSource::Schubert(mu.clone()),
                mode: Mode::Cm,
                value_x: from_lambda_basis(&value_lambda, g),
                value_lambda,
            }
        }
        Method::Shifted => kstar_schubert(mu, g)?,
        Method::Determinant => kstar_schubert_det(mu, g)?,
    };
    c.mode = mode_of(cfg);
    let mut payload = serde_json::to_value(&c).expect("pullback classes serialize");
    payload["method"] = json!(method);
    let mut shown = c.value_lambda.clone();
    if cfg.mode == ModeArg::Smooth {
        shown = mumford_reduce(&c.value_lambda, g);
        payload["value_smooth"] = poly_json(&shown);
    }
    Ok(Rendered {
        genus: Some(g),
        payload,
        csv: csv_table(
            &["partition", "value_x", "value_lambda"],
            &[vec![list(mu.parts()), c.value_x.to_string(), shown.to_string()]],
        ),
        latex: latex_table(&["$\\mu$", "$k^*\\Omega_\\mu$"], &[vec![mu.to_string(), math(&shown)]]),
        warnings: Vec::new(),
    })
}

pub fn psum(cfg: &RunConfig, g: u32, degrees: &[u32], chern_character: bool) -> Result<Rendered, CliError> {
    let mut records = Vec::new();
    let mut rows = Vec::new();
    let mut tex_rows = Vec::new();
    let mut warnings = Vec::new();
    for &s in degrees {
        let value = match cfg.mode {
            ModeArg::Cm => {
                let conv = if chern_character { ChernConvention::ChernCharacter } else { ChernConvention::PowerSum };
                let c = kstar_power_sum(s, g, conv)?;
                records.push(serde_json::to_value(&c).expect("pullback classes serialize"));
                c.value_lambda
            }
            ModeArg::Smooth => {
                let sign = if cfg.paper_sign { EvenSign::Printed } else { EvenSign::Derived };
                let p = smooth_power_sum(s, g, sign)?;
                records.push(json!({ "genus": g, "degree": s, "mode": "smooth", "value": poly_json(&p) }));
                p
            }
        };
        rows.push(vec![s.to_string(), value.to_string()]);
        tex_rows.push(vec![s.to_string(), math(&value)]);
    }
    if cfg.mode == ModeArg::Smooth {
        if degrees.iter().any(|s| s % 2 == 1) {
            warnings.push(WARN_KAPPA_INDEX.to_string());
        }
        if degrees.iter().any(|s| s % 2 == 0) {
            warnings.push(if cfg.paper_sign { WARN_EVEN_PRINTED } else { WARN_EVEN_DERIVED }.to_string());
        }
    }
    if chern_character && cfg.mode == ModeArg::Cm {
        warnings.push(WARN_CHERN_CHARACTER.to_string());
    }
    Ok(Rendered {
        genus: Some(g),
        payload: json!({ "genus": g, "power_sums": records }),
        csv: csv_table(&["degree", "value"], &rows),
        latex: latex_table(&["$s$", "$k^*p_s$"], &tex_rows),
        warnings,
    })
}

pub fn relations(g: u32, cutoff: u32) -> Result<Rendered, CliError> {
    let gens = relation_generators(g, cutoff)?;
    let records: Vec<Value> = gens
        .iter()
        .map(|(mu, p)| json!({ "partition": mu, "weight": mu.weight(), "generator": poly_json(p) }))
        .collect();
    let rows: Vec<Vec<String>> =
        gens.iter().map(|(mu, p)| vec![list(mu.parts()), mu.weight().to_string(), p.to_string()]).collect();
    let tex_rows: Vec<Vec<String>> =
        gens.iter().map(|(mu, p)| vec![mu.to_string(), mu.weight().to_string(), math(p)]).collect();
    Ok(Rendered {
        genus: Some(g),
        payload: json!({ "genus": g, "max_weight": cutoff, "generators": records }),
        csv: csv_table(&["partition", "weight", "generator"], &rows),
        latex: latex_table(&["$\\mu$", "$|\\mu|$", "$k^*\\Omega_\\mu$"], &tex_rows),
        warnings: Vec::new(),
    })
}

pub fn hilbert(g: u32, cutoff: u32) -> Result<Rendered, CliError> {
    let report = sandwich_report(g, cutoff)?;
    let tex_rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| vec![r.degree.to_string(), r.lower.to_string(), r.upper.to_string(), r.ambient.to_string()])
        .collect();
    Ok(Rendered {
        genus: Some(g),
        payload: serde_json::to_value(&report).expect("reports serialize"),
        csv: report.to_csv(),
        latex: latex_table(&["$d$", "lower", "upper", "$\\dim A_d$"], &tex_rows),
        warnings: vec![WARN_LOWER_PSI.to_string()],
    })
}

pub fn schur_eval(mu: &Partition, args: &[MultiPoly], kind: SchurKind) -> Result<Rendered, CliError> {
    let value = match kind {
        SchurKind::Shifted => shifted_schur(mu, args)?,
        SchurKind::Factorial => factorial_schur(mu, args)?,
    };
    let shown: Vec<String> = args.iter().map(MultiPoly::to_string).collect();
    Ok(Rendered {
        genus: None,
        payload: json!({ "partition": mu, "kind": kind, "args": shown, "value": poly_json(&value) }),
        csv: csv_table(&["partition", "kind", "value"], &[vec![list(mu.parts()), format!("{kind:?}").to_lowercase(), value.to_string()]]),
        latex: latex_table(&["$\\mu$", "value"], &[vec![mu.to_string(), math(&value)]]),
        warnings: Vec::new(),
    })
}
