//! Closure of a tuple set under the single-input parameter rules.
//!
//! Each level applies every rule to every tuple held so far and merges the
//! results per `(q, n, k, r)`. The merge keeps the tuple with the best
//! distance bound, then the best purity, then the shortest provenance, so
//! the outcome does not depend on evaluation order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;

use super::calculus::{extend_param, fq_shrink_r_param, generic_trades, shorten_param, shrink_k_param, stabilize_param};
use crate::params::{ParamTuple, Rational};

type Key = (u32, u32, Rational, Rational);

fn successors(t: &ParamTuple) -> Vec<ParamTuple> {
    let mut out = generic_trades(t);
    out.extend(shrink_k_param(t).ok());
    out.extend(extend_param(t).ok());
    out.extend(shorten_param(t).ok());
    out.extend(fq_shrink_r_param(t).ok());
    if !t.is_stabilizer() {
        out.extend(stabilize_param(t).ok());
    }
    out
}

fn provenance_text(t: &ParamTuple) -> String {
    t.provenance.iter().map(|s| format!("{}<{}>", s.rule, s.from.join(","))).collect::<Vec<_>>().join(";")
}

fn better(a: &ParamTuple, b: &ParamTuple) -> bool {
    if a.preferred_over(b) {
        return true;
    }
    if b.preferred_over(a) {
        return false;
    }
    match a.provenance.len().cmp(&b.provenance.len()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => provenance_text(a) < provenance_text(b),
    }
}

fn merge(set: &mut BTreeMap<Key, ParamTuple>, t: ParamTuple) {
    match set.get(&t.key()) {
        Some(held) if !better(&t, held) => {}
        _ => {
            set.insert(t.key(), t);
        }
    }
}

/// Applies the parameter rules `depth` times. Dominated tuples are dropped
/// and the result is sorted by `(q, n, k, r)`; depth 0 returns the seeds.
pub fn rule_closure(seeds: &[ParamTuple], depth: usize) -> Vec<ParamTuple> {
    if depth == 0 {
        return seeds.to_vec();
    }
    let mut set = BTreeMap::new();
    for s in seeds {
        merge(&mut set, s.clone());
    }
    for _ in 0..depth {
        let held: Vec<ParamTuple> = set.values().cloned().collect();
        let new: Vec<Vec<ParamTuple>> = held.par_iter().map(successors).collect();
        for t in new.into_iter().flatten() {
            merge(&mut set, t);
        }
    }
    set.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_one_from_the_eight_qubit_seed() {
        let seed: ParamTuple = "[[8,3,0,3]]_2".parse().unwrap();
        let out: Vec<String> = rule_closure(std::slice::from_ref(&seed), 1).iter().map(|t| t.describe()).collect();
        assert_eq!(
            out,
            [
                "[[7,4,0,>=2]]_2 pure",
                "[[8,1,2,>=3]]_2 pure_to=>=3",
                "[[8,2,1,>=3]]_2 pure_to=>=3",
                "[[8,3,0,3]]_2 pure",
                "[[9,3,0,>=3]]_2 pure_to=1",
            ]
        );
        assert_eq!(rule_closure(std::slice::from_ref(&seed), 0), vec![seed]);
    }

    #[test]
    fn closure_is_idempotent() {
        let seed: ParamTuple = "[[8,2,1,3]]_2".parse().unwrap();
        let once = rule_closure(std::slice::from_ref(&seed), 1);
        assert_eq!(rule_closure(&once, 1), rule_closure(&[seed], 2));
    }
}
