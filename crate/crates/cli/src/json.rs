//! JSON views of library values. Field names are part of the CLI contract.

use serde_json::{json, Value};
use subsysforge::catalog::search::{SearchMode, SearchReport, SearchStatus};
use subsysforge::catalog::CatalogReport;
use subsysforge::params::{BoundTuple, Rational, Step};
use subsysforge::propagation::RuleApplication;
use subsysforge::ParamTuple;

fn rational(x: Rational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn provenance(steps: &[Step]) -> Value {
    steps.iter().map(|s| json!({ "rule": s.rule.name(), "from": s.from })).collect()
}

pub fn tuple(t: &ParamTuple) -> Value {
    json!({
        "text": t.to_string(),
        "q": t.q,
        "n": t.n,
        "k": rational(t.k),
        "r": rational(t.r),
        "d": t.d.to_string(),
        "pure_to": t.pure_to().to_string(),
        "pure": t.is_pure(),
        "linear": t.linear,
        "provenance": provenance(&t.provenance),
    })
}

pub fn bound_tuple(t: &BoundTuple) -> Value {
    json!({
        "text": t.to_string(),
        "q": t.q,
        "n": t.n,
        "k_at_least": rational(t.k_at_least),
        "r_at_least": rational(t.r_at_least),
        "d": t.d.to_string(),
        "provenance": provenance(&t.provenance),
    })
}

pub fn application(a: &RuleApplication) -> Value {
    json!({
        "rule": a.rule.name(),
        "constructive": a.constructive,
        "inputs": a.inputs.iter().map(tuple).collect::<Vec<_>>(),
        "predicted": tuple(&a.predicted),
        "actual": a.actual.as_ref().map(tuple),
        "verified": a.verified(),
        "implied": a.implied.iter().map(tuple).collect::<Vec<_>>(),
        "notes": a.notes,
    })
}

pub fn catalog(r: &CatalogReport) -> Value {
    json!({
        "entry": r.entry.name(),
        "pass": r.passed(),
        "params": tuple(r.code.params()),
        "checks": r.checks.iter().map(|c| json!({
            "quantity": c.quantity,
            "expected": c.expected,
            "actual": c.actual,
            "pass": c.pass,
        })).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

pub fn search(r: &SearchReport) -> Value {
    let (mode, seed) = match r.mode {
        SearchMode::Exhaustive => ("exhaustive", None),
        SearchMode::Random { seed } => ("random", Some(seed)),
    };
    let status = match r.status {
        SearchStatus::Found => "found",
        SearchStatus::BudgetExhausted => "budget-exhausted",
        SearchStatus::SpaceExhausted => "space-exhausted",
    };
    json!({
        "target": tuple(&r.target),
        "mode": mode,
        "seed": seed,
        "status": status,
        "examined": r.examined,
        "profile_matches": r.profile_matches,
        "distance_unknown": r.distance_unknown,
        "exhaustive": r.is_exhaustive(),
        "found": r.found.iter().map(|c| tuple(c.params())).collect::<Vec<_>>(),
    })
}
