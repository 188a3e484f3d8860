use kisin_core::connectivity::{build_graph_with, chain_gl3, pi0_report, Pi0};
use kisin_core::group::Cochar;
use kisin_core::multicopy::{decompose_mu, recursion_check, unique_zero_stratum_with, MultiDatum};
use kisin_core::normal_form::alcove_reduce;
use kisin_core::oracle::{kisin_points, Field};
use kisin_core::strata::{enumerate_strata_with, EnumOptions, SingletonReason, DEFAULT_MAX_CANDIDATES};
use kisin_core::{golden, Error};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::InstanceConfig;
use crate::error::{CliError, CliResult};
use crate::report::{blocks, perms, roots, ChainView, DatumView, GraphView, StratumView};

/// Enumeration options, honouring `KISIN_MAX_ENUM`.
pub fn enum_options() -> CliResult<EnumOptions> {
    let max_candidates = match std::env::var("KISIN_MAX_ENUM") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Config(format!("KISIN_MAX_ENUM={s:?} is not a count")))?,
        Err(_) => DEFAULT_MAX_CANDIDATES,
    };
    Ok(EnumOptions { max_candidates, ..EnumOptions::default() })
}

fn to_value<T: Serialize>(v: T) -> CliResult<Value> {
    Ok(serde_json::to_value(v)?)
}

pub fn normal_form(cfg: &InstanceConfig) -> CliResult<Value> {
    let raw = cfg.raw_datum()?;
    let reduced = if raw.alcove_ok() { None } else { Some(alcove_reduce(&raw)?) };
    // The final datum follows the same rules as every other command.
    let datum = cfg.datum()?;
    to_value(json!({
        "input": DatumView::from(&raw),
        "reduction": reduced.as_ref().map(|(z, _)| json!({ "chi": blocks(&z.chi), "y": perms(&z.y) })),
        "datum": DatumView::from(&datum),
    }))
}

pub fn strata(cfg: &InstanceConfig) -> CliResult<Value> {
    let datum = cfg.datum()?;
    let mu = cfg.mu()?;
    let strata = enumerate_strata_with(&datum, &mu, enum_options()?)?;
    let profile = strata.first().map(|s| s.lam.sum_profile());
    if strata.iter().any(|s| Some(s.lam.sum_profile()) != profile) {
        return Err(Error::TheoremViolation("strata with different sum profiles".into()).into());
    }
    to_value(json!({
        "datum": DatumView::from(&datum),
        "mu": blocks(&mu),
        "count": strata.len(),
        "sum_profile": profile,
        "strata": strata.iter().map(StratumView::from).collect::<Vec<_>>(),
    }))
}

/// The graph as JSON, plus its DOT rendering.
pub fn graph(cfg: &InstanceConfig) -> CliResult<(Value, String)> {
    let datum = cfg.datum()?;
    let mu = cfg.mu()?;
    let g = build_graph_with(&datum, &mu, enum_options()?)?;
    let pi0 = pi0_report(&g)?;
    let value = to_value(json!({
        "datum": DatumView::from(&datum),
        "mu": blocks(&mu),
        "graph": GraphView::new(&g, pi0),
    }))?;
    Ok((value, g.to_dot()))
}

pub fn multicopy(cfg: &InstanceConfig) -> CliResult<Value> {
    let base = cfg.datum()?;
    let mu = cfg.mu()?;
    let d = cfg.d.ok_or_else(|| CliError::Config("missing d".into()))?;
    let (chi, twisted, mu_omega) = kisin_core::strata::theorem_a_twist(&base, &mu)?;
    let lifted_mu = decompose_mu(&mu_omega, d)?;
    let multi = MultiDatum::new(twisted, d)?;
    let zero = unique_zero_stratum_with(&multi, &lifted_mu, enum_options()?)?;
    let zero_view = match &zero {
        None => Value::Null,
        Some(s) => {
            let check = recursion_check(&multi, &lifted_mu, &s.lam)?;
            if !check.passed() {
                return Err(Error::TheoremViolation(format!("recursion check failed: {check:?}")).into());
            }
            json!({
                "lambda": blocks(&s.lam),
                "first_copy": blocks(&multi.project_first(&s.lam)?),
                "natural": blocks(&s.nat),
                "recursion": {
                    "passed": true,
                    "claim2_block": check.claim2_witness.map(|k| k + 1),
                },
            })
        }
    };
    to_value(json!({
        "base": DatumView::from(&base),
        "mu": blocks(&mu),
        "central_twist": blocks(&chi),
        "mu_omega": blocks(&mu_omega),
        "d": d,
        "lifted": DatumView::from(multi.lifted()),
        "lifted_mu": blocks(&lifted_mu),
        "zero_stratum": zero_view,
    }))
}

pub fn chain(cfg: &InstanceConfig) -> CliResult<Value> {
    let datum = cfg.datum()?;
    let mu = cfg.mu()?;
    let lam_of = |v: &Option<Vec<Vec<i64>>>| -> CliResult<Option<Cochar>> {
        Ok(match v {
            Some(b) => Some(Cochar::from_blocks(b.clone())?),
            None => None,
        })
    };
    let pairs: Vec<(Cochar, Cochar)> = match (lam_of(&cfg.from)?, lam_of(&cfg.to)?) {
        (Some(a), Some(b)) => vec![(a, b)],
        (a, b) => {
            // Without both endpoints, connect the first point of S to every point.
            let s: Vec<Cochar> = enumerate_strata_with(&datum, &mu, enum_options()?)?.into_iter().map(|s| s.lam).collect();
            let start = a.or_else(|| s.first().cloned());
            match start {
                None => Vec::new(),
                Some(a) => match b {
                    Some(b) => vec![(a, b)],
                    None => s.into_iter().map(|t| (a.clone(), t)).collect(),
                },
            }
        }
    };
    let chains = pairs
        .iter()
        .map(|(a, b)| chain_gl3(&datum, &mu, a, b).map(|c| ChainView::from(&c)))
        .collect::<Result<Vec<_>, _>>()?;
    to_value(json!({ "datum": DatumView::from(&datum), "mu": blocks(&mu), "chains": chains }))
}

pub fn oracle_count(cfg: &InstanceConfig) -> CliResult<Value> {
    let datum = cfg.datum()?;
    let mu = cfg.mu()?;
    let r = cfg.field_deg.unwrap_or(1);
    let bound = cfg.box_bound.ok_or_else(|| CliError::Config("missing box".into()))?;
    let field = Field::new(datum.shape().p(), r)?;
    let points = kisin_points(&datum, &mu, &field, bound)?;
    let strata = enumerate_strata_with(&datum, &mu, enum_options()?)?;
    let mut labels = Vec::new();
    for s in &strata {
        let count = points.iter().filter(|pt| pt.label == s.lam).count();
        if s.singleton.is_proven() && count != 1 {
            return Err(Error::TheoremViolation(format!("singleton stratum {} has {count} points", s.lam)).into());
        }
        labels.push(json!({ "lambda": blocks(&s.lam), "count": count, "singleton": s.singleton.is_proven() }));
    }
    if let Some(pt) = points.iter().find(|pt| !strata.iter().any(|s| s.lam == pt.label)) {
        return Err(Error::TheoremViolation(format!("oracle point labelled {} outside S", pt.label)).into());
    }
    let views: Vec<Value> = points
        .iter()
        .map(|pt| {
            let matrix: Vec<Vec<String>> =
                pt.g.rows().iter().map(|row| row.iter().map(|e| e.to_string()).collect()).collect();
            json!({ "lambda": blocks(&pt.label), "cartan": pt.cartan, "matrix": matrix })
        })
        .collect();
    to_value(json!({
        "field": { "p": field.p(), "degree": field.degree(), "order": field.order() },
        "box": bound,
        "mu": blocks(&mu),
        "count": points.len(),
        "labels": labels,
        "points": views,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    A,
    B,
}

/// Recomputes a counterexample and compares it with the stored answer.
/// Returns the report and whether everything matched.
pub fn verify(which: Which, p: i64) -> CliResult<(InstanceConfig, Value, bool)> {
    let (datum, mu, expected) = match which {
        Which::A => {
            let (d, mu) = golden::counterexample_a(p)?;
            (d, mu, golden::expected_a())
        }
        Which::B => {
            let (d, mu) = golden::counterexample_b(p)?;
            (d, mu, golden::expected_b())
        }
    };
    let cfg = InstanceConfig {
        p: Some(p),
        n: Some(datum.shape().n()),
        f: Some(datum.shape().blocks()),
        b: Some(crate::config::BSpec::Explicit { tau: blocks(datum.tau()), w: perms(datum.w()) }),
        mu: Some(blocks(&mu)),
        ..InstanceConfig::default()
    };
    let g = build_graph_with(&datum, &mu, enum_options()?)?;
    let pi0 = pi0_report(&g)?;
    let found: Vec<Cochar> = g.vertices.iter().map(|s| s.lam.clone()).collect();
    let all_proven = g.vertices.iter().all(|s| s.singleton.is_proven());
    let reasons_ok = match which {
        Which::A => true,
        Which::B => g.vertices.iter().zip(&expected).all(|(s, e)| {
            let want = if *e == expected[0] { SingletonReason::DClaim } else { SingletonReason::DominantMinuscule };
            matches!(&s.singleton, kisin_core::strata::Singleton::Proven { reasons } if reasons.contains(&want))
        }),
    };
    let matched = found == expected && all_proven && reasons_ok && pi0 == Pi0::Exact(expected.len());
    let value = to_value(json!({
        "counterexample": match which { Which::A => "a", Which::B => "b" },
        "datum": DatumView::from(&datum),
        "mu": blocks(&mu),
        "expected": expected.iter().map(blocks).collect::<Vec<_>>(),
        "strata": g.vertices.iter().map(StratumView::from).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| roots(std::slice::from_ref(&e.root))).collect::<Vec<_>>(),
        "pi0": pi0,
        "match": matched,
    }))?;
    Ok((cfg, value, matched))
}
