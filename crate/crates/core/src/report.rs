//! Serializable reports and the DOT rendering of a lattice.
//!
//! Every report carries `schema_version` and lists submodules by canonical
//! generator rows in lattice order, so output is byte-stable.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{ClassFlags, ClassificationReport};
use crate::expr::print_module;
use crate::harness::{PartCount, SearchReport, TheoremReport};
use crate::lattice::SubLattice;
use crate::module::{FinModule, Submodule};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleInfo {
    pub expr: String,
    pub ring: u64,
    pub invariant_factors: Vec<u64>,
    pub order: u64,
}

impl ModuleInfo {
    pub fn new(m: &FinModule) -> Self {
        ModuleInfo {
            expr: print_module(m),
            ring: m.modulus(),
            invariant_factors: m.factors().to_vec(),
            order: m.order(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmoduleInfo {
    pub gens: Vec<Vec<u64>>,
    pub order: u64,
}

impl SubmoduleInfo {
    pub fn new(n: &Submodule) -> Self {
        SubmoduleInfo {
            gens: n.gens(),
            order: n.order(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleFlags {
    pub comultiplication: bool,
    pub cocyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub gens: Vec<Vec<u64>>,
    pub order: u64,
    #[serde(flatten)]
    pub flags: ClassFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationJson {
    pub schema_version: &'static str,
    pub module: ModuleInfo,
    pub module_flags: ModuleFlags,
    pub rows: Vec<ClassificationRow>,
}

impl ClassificationJson {
    pub fn new(report: &ClassificationReport) -> Self {
        ClassificationJson {
            schema_version: SCHEMA_VERSION,
            module: ModuleInfo::new(&report.module),
            module_flags: ModuleFlags {
                comultiplication: report.comultiplication,
                cocyclic: report.cocyclic,
            },
            rows: report
                .rows
                .iter()
                .map(|(n, flags)| ClassificationRow {
                    gens: n.gens(),
                    order: n.order(),
                    flags: *flags,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeNode {
    pub index: usize,
    pub gens: Vec<Vec<u64>>,
    pub order: u64,
    pub completely_irreducible: bool,
    pub prime: bool,
    pub second: bool,
    pub minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeJson {
    pub schema_version: &'static str,
    pub module: ModuleInfo,
    pub nodes: Vec<LatticeNode>,
    /// `[lower, upper]` index pairs of the cover relation.
    pub covers: Vec<[usize; 2]>,
}

impl LatticeJson {
    pub fn new(lattice: &SubLattice) -> Self {
        LatticeJson {
            schema_version: SCHEMA_VERSION,
            module: ModuleInfo::new(lattice.module()),
            nodes: lattice
                .nodes()
                .iter()
                .enumerate()
                .map(|(index, n)| {
                    let f = lattice.flags(index);
                    LatticeNode {
                        index,
                        gens: n.gens(),
                        order: n.order(),
                        completely_irreducible: f.completely_irreducible,
                        prime: f.prime,
                        second: f.second,
                        minimal: f.minimal,
                    }
                })
                .collect(),
            covers: lattice.covers().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondRadicalJson {
    pub schema_version: &'static str,
    pub module: ModuleInfo,
    pub submodule: SubmoduleInfo,
    pub second_radical: SubmoduleInfo,
}

impl SecondRadicalJson {
    pub fn new(n: &Submodule, sec: &Submodule) -> Self {
        SecondRadicalJson {
            schema_version: SCHEMA_VERSION,
            module: ModuleInfo::new(n.parent()),
            submodule: SubmoduleInfo::new(n),
            second_radical: SubmoduleInfo::new(sec),
        }
    }
}

/// Totals for one theorem across every checked module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub theorem_id: String,
    pub instances_checked: usize,
    pub vacuous_instances: usize,
    pub violations: usize,
    pub parts: Vec<PartCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    pub schema_version: &'static str,
    pub modules_checked: usize,
    pub total_instances: usize,
    pub total_vacuous: usize,
    pub total_violations: usize,
    pub summary: Vec<TheoremSummary>,
    pub reports: Vec<TheoremReport>,
}

impl CheckJson {
    pub fn new(modules_checked: usize, reports: Vec<TheoremReport>) -> Self {
        let mut summary: Vec<TheoremSummary> = Vec::new();
        for r in &reports {
            let pos = match summary.iter().position(|s| s.theorem_id == r.theorem_id) {
                Some(pos) => pos,
                None => {
                    summary.push(TheoremSummary {
                        theorem_id: r.theorem_id.clone(),
                        instances_checked: 0,
                        vacuous_instances: 0,
                        violations: 0,
                        parts: Vec::new(),
                    });
                    summary.len() - 1
                }
            };
            let s = &mut summary[pos];
            s.instances_checked += r.instances_checked;
            s.vacuous_instances += r.vacuous_instances;
            s.violations += r.violations.len();
            for p in &r.parts {
                match s.parts.iter_mut().find(|q| q.part == p.part) {
                    Some(q) => {
                        q.instances += p.instances;
                        q.vacuous += p.vacuous;
                    }
                    None => s.parts.push(p.clone()),
                }
            }
        }
        CheckJson {
            schema_version: SCHEMA_VERSION,
            modules_checked,
            total_instances: reports.iter().map(|r| r.instances_checked).sum(),
            total_vacuous: reports.iter().map(|r| r.vacuous_instances).sum(),
            total_violations: reports.iter().map(|r| r.violations.len()).sum(),
            summary,
            reports,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchJson {
    pub schema_version: &'static str,
    #[serde(flatten)]
    pub report: SearchReport,
}

impl SearchJson {
    pub fn new(report: SearchReport) -> Self {
        SearchJson {
            schema_version: SCHEMA_VERSION,
            report,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusJson {
    pub schema_version: &'static str,
    pub max_order: u64,
    pub modules: Vec<ModuleInfo>,
}

impl CorpusJson {
    pub fn new(max_order: u64, modules: &[FinModule]) -> Self {
        CorpusJson {
            schema_version: SCHEMA_VERSION,
            max_order,
            modules: modules.iter().map(ModuleInfo::new).collect(),
        }
    }
}

fn gens_label(n: &Submodule) -> String {
    let rows: Vec<String> = n
        .gens()
        .iter()
        .map(|g| {
            format!(
                "({})",
                g.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("<{}>", rows.join(", "))
}

/// Hasse diagram: one node per submodule, one edge per cover.
pub fn to_dot(report: &ClassificationReport, lattice: &SubLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph lattice {{");
    let _ = writeln!(out, "  label=\"{}\";", print_module(lattice.module()));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for (i, (n, flags)) in report.rows.iter().enumerate() {
        let value = serde_json::to_value(flags).expect("flags serialize");
        let attrs: Vec<String> = value
            .as_object()
            .expect("flags are a struct")
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(
            out,
            "  n{i} [label=\"{}\\norder {}\", {}];",
            gens_label(n),
            n.order(),
            attrs.join(", ")
        );
    }
    for &(lo, hi) in lattice.covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}
