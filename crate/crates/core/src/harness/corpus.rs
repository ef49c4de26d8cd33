use crate::error::{Error, Result};
use crate::ideal::factorize;
use crate::module::FinModule;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum CorpusFilter {
    #[default]
    All,
    CyclicOnly,
    PGroupsOnly,
    /// Explicit factor tuples; order is kept, isomorphic duplicates dropped.
    Explicit(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub max_order: u64,
    pub filter: CorpusFilter,
}

impl CorpusSpec {
    pub fn up_to(max_order: u64) -> Self {
        CorpusSpec {
            max_order,
            filter: CorpusFilter::All,
        }
    }
}

fn partitions(n: u32, largest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(largest)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

/// Every abelian group of order `n`, as invariant-factor lists in
/// lexicographic order.
fn groups_of_order(n: u64) -> Vec<Vec<u64>> {
    let mut acc: Vec<Vec<u64>> = vec![Vec::new()];
    for &(p, e) in factorize(n).expect("n >= 1").pairs() {
        let mut parts = Vec::new();
        partitions(e, e, &mut Vec::new(), &mut parts);
        acc = acc
            .iter()
            .flat_map(|prev| {
                parts.iter().map(move |part| {
                    let mut next = prev.clone();
                    next.extend(part.iter().map(|&k| p.pow(k)));
                    next
                })
            })
            .collect();
    }
    let mut out: Vec<Vec<u64>> = acc
        .into_iter()
        .map(|f| {
            FinModule::new(None, &f)
                .expect("valid factors")
                .factors()
                .to_vec()
        })
        .collect();
    out.sort();
    out
}

/// Isomorphism classes of abelian groups of order at most `max_order`,
/// sorted by order and then invariant factors.
pub fn corpus_generate(spec: &CorpusSpec) -> Result<Vec<FinModule>> {
    if spec.max_order == 0 {
        return Err(Error::InvalidCorpus("max_order must be at least 1".into()));
    }
    if let CorpusFilter::Explicit(list) = &spec.filter {
        let mut out: Vec<FinModule> = Vec::new();
        for factors in list {
            let m = FinModule::new(None, factors)?;
            if m.order() <= spec.max_order && !out.contains(&m) {
                out.push(m);
            }
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    for n in 1..=spec.max_order {
        if spec.filter == CorpusFilter::PGroupsOnly && factorize(n)?.distinct() > 1 {
            continue;
        }
        for factors in groups_of_order(n) {
            if spec.filter == CorpusFilter::CyclicOnly && factors.len() > 1 {
                continue;
            }
            out.push(FinModule::new(None, &factors)?);
        }
    }
    Ok(out)
}
