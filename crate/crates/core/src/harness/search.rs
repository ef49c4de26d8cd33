use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{corpus_generate, CorpusSpec};
use crate::classify::{classify_all, ClassId};
use crate::error::Result;
use crate::expr::print_module;
use crate::lattice::{Bounds, SubLattice};

/// A submodule in the antecedent class but outside the consequent class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchWitness {
    pub module: String,
    pub invariant_factors: Vec<u64>,
    pub submodule: Vec<Vec<u64>>,
    pub order: u64,
    pub is_full: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub antecedent: String,
    pub consequent: String,
    pub max_order: u64,
    pub modules_searched: usize,
    pub submodules_searched: usize,
    pub witnesses: Vec<SearchWitness>,
    /// An empty witness list only means none exist up to the bound.
    pub summary: String,
}

pub fn search_counterexample(
    antecedent: &str,
    consequent: &str,
    spec: &CorpusSpec,
) -> Result<SearchReport> {
    search_with(
        ClassId::parse(antecedent)?,
        ClassId::parse(consequent)?,
        spec,
        &Bounds::default(),
    )
}

pub fn search_with(
    antecedent: ClassId,
    consequent: ClassId,
    spec: &CorpusSpec,
    bounds: &Bounds,
) -> Result<SearchReport> {
    let corpus = corpus_generate(spec)?;
    let per_module: Vec<(usize, Vec<SearchWitness>)> = corpus
        .par_iter()
        .map(|m| {
            let lattice = SubLattice::enumerate_with(m, bounds)?;
            let report = classify_all(&lattice)?;
            let witnesses = report
                .rows
                .iter()
                .filter(|(_, flags)| antecedent.get(flags) && !consequent.get(flags))
                .map(|(n, _)| SearchWitness {
                    module: print_module(m),
                    invariant_factors: m.factors().to_vec(),
                    submodule: n.gens(),
                    order: n.order(),
                    is_full: n.is_full(),
                })
                .collect();
            Ok((lattice.len(), witnesses))
        })
        .collect::<Result<_>>()?;
    let submodules_searched = per_module.iter().map(|(n, _)| n).sum();
    let witnesses: Vec<SearchWitness> = per_module.into_iter().flat_map(|(_, w)| w).collect();
    let summary = if witnesses.is_empty() {
        format!("none up to order {}", spec.max_order)
    } else {
        format!(
            "{} witnesses up to order {}",
            witnesses.len(),
            spec.max_order
        )
    };
    Ok(SearchReport {
        antecedent: antecedent.name().to_string(),
        consequent: consequent.name().to_string(),
        max_order: spec.max_order,
        modules_searched: corpus.len(),
        submodules_searched,
        witnesses,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strongly_secondary_does_not_imply_two_absorbing_second() {
        let r = search_counterexample(
            "strongly-2-abs-secondary",
            "2-abs-second",
            &CorpusSpec::up_to(8),
        )
        .unwrap();
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.invariant_factors == [8] && w.is_full));
    }

    #[test]
    fn identity_implication_has_no_witnesses() {
        let r = search_counterexample("second", "second", &CorpusSpec::up_to(16)).unwrap();
        assert!(r.witnesses.is_empty());
        assert_eq!(r.summary, "none up to order 16");
    }

    #[test]
    fn unknown_class_is_rejected() {
        assert!(search_counterexample("second", "third", &CorpusSpec::up_to(4)).is_err());
    }
}
