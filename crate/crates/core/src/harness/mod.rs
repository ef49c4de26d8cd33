//! Instance-level verification of the structure theorems, module corpora
//! and counterexample search.

mod corpus;
mod product;
mod search;
mod theorems;

pub use corpus::{corpus_generate, CorpusFilter, CorpusSpec};
pub use product::{coprime_splits, product_decompose, ProductDecomposition};
pub use search::{search_counterexample, search_with, SearchReport, SearchWitness};
pub use theorems::{
    check_all, check_theorem, check_theorem_with, HarnessConfig, PartCount, TheoremId,
    TheoremReport, Witness, DEFAULT_HOM_SAMPLES, DEFAULT_HOM_SEED,
};
