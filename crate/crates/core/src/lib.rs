//! Exact decision procedures for submodule classes of finite modules over
//! Z/nZ: second, secondary, 2-absorbing and strongly 2-absorbing second and
//! secondary submodules, together with the structures they depend on.

pub mod classify;
pub mod error;
pub mod expr;
pub mod harness;
mod hnf;
pub mod ideal;
pub mod lattice;
pub mod module;
pub mod report;

pub use classify::{classify_all, ClassFlags, ClassId, ClassificationReport, Classifier};
pub use error::{Error, Result};
pub use expr::{parse_generators, parse_module_expr, print_module, ModuleExpr};
pub use harness::{
    check_all, check_theorem, corpus_generate, CorpusFilter, CorpusSpec, TheoremId, TheoremReport,
};
pub use ideal::{divisors, factorize, Factorization, Ideal, Quantifier, RingSpec};
pub use lattice::{second_radical, Bounds, SubLattice};
pub use module::{Element, FinModule, ModuleHom, Submodule};
