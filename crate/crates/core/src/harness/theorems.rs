use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::product::{coprime_splits, product_decompose, ProductDecomposition};
use crate::classify::{
    is_second, is_secondary, is_strongly_two_absorbing_secondary_formula, ClassFlags, Classifier,
};
use crate::error::{Error, Result};
use crate::expr::print_module;
use crate::ideal::{divisors, factorize};
use crate::lattice::{second_radical, Bounds, SubLattice};
use crate::module::{Element, FinModule, ModuleHom, Submodule};

/// Random injective homs sampled per source isomorphism class.
pub const DEFAULT_HOM_SAMPLES: usize = 100;
/// Seed of the hom sampler; mixed with the source and target factors.
pub const DEFAULT_HOM_SEED: u64 = 0x5ec0_2ab5_0000_0001;

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub bounds: Bounds,
    pub hom_samples: usize,
    pub seed: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            bounds: Bounds::default(),
            hom_samples: DEFAULT_HOM_SAMPLES,
            seed: DEFAULT_HOM_SEED,
        }
    }
}

#[allow(non_camel_case_types)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    L1_3,
    L1_4,
    T1_5,
    L9_2,
    T9_4,
    T9_5,
    L9_6,
    P1_5,
    T9_7,
    T9_8,
    L9_9,
    T9_10,
    C9_11,
    P9_12,
    L9_13,
    T9_14,
    T9_15,
    T9_16,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::L1_3,
        TheoremId::L1_4,
        TheoremId::T1_5,
        TheoremId::L9_2,
        TheoremId::T9_4,
        TheoremId::T9_5,
        TheoremId::L9_6,
        TheoremId::P1_5,
        TheoremId::T9_7,
        TheoremId::T9_8,
        TheoremId::L9_9,
        TheoremId::T9_10,
        TheoremId::C9_11,
        TheoremId::P9_12,
        TheoremId::L9_13,
        TheoremId::T9_14,
        TheoremId::T9_15,
        TheoremId::T9_16,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::L1_3 => "l1.3",
            TheoremId::L1_4 => "l1.4",
            TheoremId::T1_5 => "t1.5",
            TheoremId::L9_2 => "l9.2",
            TheoremId::T9_4 => "t9.4",
            TheoremId::T9_5 => "t9.5",
            TheoremId::L9_6 => "l9.6",
            TheoremId::P1_5 => "p1.5",
            TheoremId::T9_7 => "t9.7",
            TheoremId::T9_8 => "t9.8",
            TheoremId::L9_9 => "l9.9",
            TheoremId::T9_10 => "t9.10",
            TheoremId::C9_11 => "c9.11",
            TheoremId::P9_12 => "p9.12",
            TheoremId::L9_13 => "l9.13",
            TheoremId::T9_14 => "t9.14",
            TheoremId::T9_15 => "t9.15",
            TheoremId::T9_16 => "t9.16",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// One failed instance. Submodules are given by canonical generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub part: String,
    pub submodules: Vec<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ring_elements: Vec<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<Vec<u64>>>,
    pub detail: String,
}

impl Witness {
    fn new(detail: impl Into<String>) -> Self {
        Witness {
            part: String::new(),
            submodules: Vec::new(),
            ring_elements: Vec::new(),
            ideals: Vec::new(),
            target: None,
            detail: detail.into(),
        }
    }

    fn sub(mut self, n: &Submodule) -> Self {
        self.submodules.push(n.gens());
        self
    }

    fn elems(mut self, a: &[u64]) -> Self {
        self.ring_elements.extend_from_slice(a);
        self
    }

    fn ideals(mut self, g: &[u64]) -> Self {
        self.ideals.extend_from_slice(g);
        self
    }

    fn target(mut self, t: &Submodule) -> Self {
        self.target = Some(t.gens());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartCount {
    pub part: String,
    pub instances: usize,
    pub vacuous: usize,
}

/// Outcome of one theorem on one module. An instance is vacuous when its
/// hypotheses fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub module: String,
    pub instances_checked: usize,
    pub vacuous_instances: usize,
    pub parts: Vec<PartCount>,
    pub violations: Vec<Witness>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Recorder {
    parts: Vec<PartCount>,
    violations: Vec<Witness>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            parts: Vec::new(),
            violations: Vec::new(),
        }
    }

    fn part(&mut self, name: &str) -> usize {
        self.parts.push(PartCount {
            part: name.to_string(),
            instances: 0,
            vacuous: 0,
        });
        self.parts.len() - 1
    }

    /// Count one instance; returns whether its hypotheses hold.
    fn instance(&mut self, part: usize, hypothesis: bool) -> bool {
        self.parts[part].instances += 1;
        if !hypothesis {
            self.parts[part].vacuous += 1;
        }
        hypothesis
    }

    fn violate(&mut self, part: usize, mut w: Witness) {
        w.part = self.parts[part].part.clone();
        self.violations.push(w);
    }

    fn finish(self, id: TheoremId, m: &FinModule) -> TheoremReport {
        TheoremReport {
            theorem_id: id.name().to_string(),
            module: print_module(m),
            instances_checked: self.parts.iter().map(|p| p.instances).sum(),
            vacuous_instances: self.parts.iter().map(|p| p.vacuous).sum(),
            parts: self.parts,
            violations: self.violations,
        }
    }
}

/// Lattice data of a hom source, shared by every hom from that class.
struct SourceData {
    lattice: SubLattice,
    sec: Vec<usize>,
    s2as: Vec<bool>,
}

impl SourceData {
    fn new(module: &FinModule, bounds: &Bounds) -> Result<Self> {
        let lattice = SubLattice::enumerate_with(module, bounds)?;
        let (sec, s2as) = {
            let c = Classifier::new(&lattice);
            let sec = (0..lattice.len())
                .map(|i| lattice.second_radical(i))
                .collect();
            let s2as = (0..lattice.len())
                .into_par_iter()
                .map(|i| c.is_strongly_two_absorbing_secondary_by_ideals(i))
                .collect();
            (sec, s2as)
        };
        Ok(SourceData { lattice, sec, s2as })
    }
}

struct HomFamily {
    sources: BTreeMap<Vec<u64>, SourceData>,
    inclusions: Vec<ModuleHom>,
    sampled: Vec<ModuleHom>,
    target_s2as: Vec<bool>,
}

struct Session<'a> {
    lattice: &'a SubLattice,
    c: Classifier<'a>,
    flags: Vec<ClassFlags>,
    sec_def: Vec<usize>,
    modulus: u64,
    ideal_gens: Vec<u64>,
    comult: bool,
    cfg: &'a HarnessConfig,
    homs: OnceLock<HomFamily>,
}

fn mix(seed: u64, words: &[u64]) -> u64 {
    words.iter().fold(seed ^ 0xcbf2_9ce4_8422_2325, |h, &w| {
        (h ^ w).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn random_element(t: &Submodule, rng: &mut ChaCha8Rng) -> Element {
    let m = t.parent();
    let mut acc = m.zero_element();
    for g in t.gen_elements() {
        let c = rng.gen_range(0..m.exponent());
        acc = m.add(&acc, &m.scale_element(c, &g));
    }
    acc
}

fn sample_injective(
    source: &FinModule,
    target: &FinModule,
    count: usize,
    seed: u64,
) -> Result<Vec<ModuleHom>> {
    let words: Vec<u64> = source
        .factors()
        .iter()
        .chain([&0])
        .chain(target.factors())
        .copied()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, &words));
    let torsion: Vec<Submodule> = source
        .factors()
        .iter()
        .map(|&d| target.zero().colon_scalar(d))
        .collect();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 {
        attempts += 1;
        let rows = torsion
            .iter()
            .map(|t| random_element(t, &mut rng).coords().to_vec())
            .collect();
        let hom = ModuleHom::new(source.clone(), target.clone(), rows)?;
        if hom.is_injective() {
            out.push(hom);
        }
    }
    Ok(out)
}

impl<'a> Session<'a> {
    fn new(lattice: &'a SubLattice, cfg: &'a HarnessConfig) -> Self {
        let c = Classifier::new(lattice);
        let flags = (0..lattice.len())
            .into_par_iter()
            .map(|i| c.flags(i))
            .collect();
        let sec_def = (0..lattice.len())
            .into_par_iter()
            .map(|i| lattice.second_radical(i))
            .collect();
        let modulus = lattice.module().modulus();
        Session {
            lattice,
            c,
            flags,
            sec_def,
            modulus,
            ideal_gens: divisors(modulus),
            comult: lattice.module().is_cyclic(),
            cfg,
            homs: OnceLock::new(),
        }
    }

    fn module(&self) -> &FinModule {
        self.lattice.module()
    }

    fn node(&self, i: usize) -> &Submodule {
        self.lattice.node(i)
    }

    fn nonzero(&self) -> std::ops::Range<usize> {
        1..self.lattice.len()
    }

    fn img(&self, i: usize, a: u64) -> usize {
        self.c.scaled(i, a)
    }

    fn le(&self, i: usize, j: usize) -> bool {
        self.lattice.le(i, j)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.module().ring().mul(a, b)
    }

    fn sec(&self, i: usize) -> usize {
        self.c.second_radical_of(i)
    }

    fn s2as(&self, i: usize) -> bool {
        self.flags[i].strongly_two_abs_secondary
    }

    fn residues(&self) -> std::ops::Range<u64> {
        0..self.modulus
    }

    fn hom_family(&self) -> Result<&HomFamily> {
        if let Some(f) = self.homs.get() {
            return Ok(f);
        }
        let mut sources = BTreeMap::new();
        let mut inclusions = Vec::new();
        for i in self.nonzero() {
            let (abstract_k, inclusion) = self.node(i).to_module();
            if !sources.contains_key(abstract_k.factors()) {
                sources.insert(
                    abstract_k.factors().to_vec(),
                    SourceData::new(&abstract_k, &self.cfg.bounds)?,
                );
            }
            inclusions.push(inclusion);
        }
        let mut sampled = Vec::new();
        for data in sources.values() {
            sampled.extend(sample_injective(
                data.lattice.module(),
                self.module(),
                self.cfg.hom_samples,
                self.cfg.seed,
            )?);
        }
        let target_s2as = (0..self.lattice.len())
            .into_par_iter()
            .map(|i| self.c.is_strongly_two_absorbing_secondary_by_ideals(i))
            .collect();
        let family = HomFamily {
            sources,
            inclusions,
            sampled,
            target_s2as,
        };
        Ok(self.homs.get_or_init(|| family))
    }

    fn splits(&self) -> Result<Vec<ProductDecomposition>> {
        coprime_splits(self.modulus)
            .into_iter()
            .map(|(n1, n2)| product_decompose(self.module(), n1, n2))
            .collect()
    }

    fn run(&self, id: TheoremId) -> Result<TheoremReport> {
        let mut rec = Recorder::new();
        match id {
            TheoremId::L1_3 => self.l1_3(&mut rec),
            TheoremId::L1_4 => self.l1_4(&mut rec),
            TheoremId::T1_5 => self.t1_5(&mut rec),
            TheoremId::L9_2 => self.l9_2(&mut rec),
            TheoremId::T9_4 => self.t9_4(&mut rec),
            TheoremId::T9_5 => self.t9_5(&mut rec),
            TheoremId::L9_6 => self.l9_6(&mut rec)?,
            TheoremId::P1_5 => self.p1_5(&mut rec),
            TheoremId::T9_7 => self.t9_7(&mut rec)?,
            TheoremId::T9_8 => self.t9_8(&mut rec),
            TheoremId::L9_9 => self.l9_9(&mut rec)?,
            TheoremId::T9_10 => self.t9_10(&mut rec)?,
            TheoremId::C9_11 => self.c9_11(&mut rec)?,
            TheoremId::P9_12 => self.p9_12(&mut rec)?,
            TheoremId::L9_13 => self.l9_13(&mut rec)?,
            TheoremId::T9_14 => self.t9_14(&mut rec)?,
            TheoremId::T9_15 => self.t9_15(&mut rec),
            TheoremId::T9_16 => self.t9_16(&mut rec)?,
        }
        Ok(rec.finish(id, self.module()))
    }

    /// `I·a·N ⊆ L ⇒ a·sec(N) ⊆ L or I·sec(N) ⊆ L or Ia ⊆ Ann(N)`.
    fn l1_3(&self, rec: &mut Recorder) {
        let p = rec.part("l1.3");
        let ci = self.c.completely_irreducibles();
        for i in self.nonzero() {
            if !rec.instance(p, self.flags[i].two_abs_secondary) {
                continue;
            }
            let s = self.sec(i);
            for &g in &self.ideal_gens {
                for a in self.residues() {
                    let gan = self.img(i, self.mul(g, a));
                    if gan == 0 {
                        continue;
                    }
                    for &l in ci {
                        if self.le(gan, l)
                            && !self.le(self.img(s, a), l)
                            && !self.le(self.img(s, g), l)
                        {
                            rec.violate(
                                p,
                                Witness::new("IaN ⊆ L but neither a·sec(N) nor I·sec(N) lies in L")
                                    .sub(self.node(i))
                                    .elems(&[a])
                                    .ideals(&[g])
                                    .target(self.node(l)),
                            );
                        }
                    }
                }
            }
        }
    }

    /// `IJN ⊆ L ⇒ I·sec(N) ⊆ L or J·sec(N) ⊆ L or IJ ⊆ Ann(N)`.
    fn l1_4(&self, rec: &mut Recorder) {
        let p = rec.part("l1.4");
        let ci = self.c.completely_irreducibles();
        for i in self.nonzero() {
            if !rec.instance(p, self.flags[i].two_abs_secondary) {
                continue;
            }
            let s = self.sec(i);
            for &g in &self.ideal_gens {
                for &h in &self.ideal_gens {
                    let ghn = self.img(i, self.mul(g, h));
                    if ghn == 0 {
                        continue;
                    }
                    for &l in ci {
                        if self.le(ghn, l)
                            && !self.le(self.img(s, g), l)
                            && !self.le(self.img(s, h), l)
                        {
                            rec.violate(
                                p,
                                Witness::new("IJN ⊆ L but neither I·sec(N) nor J·sec(N) lies in L")
                                    .sub(self.node(i))
                                    .ideals(&[g, h])
                                    .target(self.node(l)),
                            );
                        }
                    }
                }
            }
        }
    }

    fn t1_5(&self, rec: &mut Recorder) {
        let p = rec.part("t1.5");
        for i in self.nonzero() {
            rec.instance(p, true);
            let a = self.c.is_strongly_two_absorbing_secondary_by_ci_pairs(i);
            let b = self.c.is_strongly_two_absorbing_secondary_by_ideals(i);
            let c = self.s2as(i);
            let tabled = self.c.is_strongly_two_absorbing_secondary_tabled(i);
            if !(a == b && b == c && c == tabled) {
                rec.violate(
                    p,
                    Witness::new(format!(
                        "modes disagree: (a) {a}, (b) {b}, (c) {c}, tabled {tabled}"
                    ))
                    .sub(self.node(i)),
                );
            }
        }
    }

    fn implication(
        &self,
        rec: &mut Recorder,
        part: &str,
        hyp: impl Fn(usize) -> bool,
        concl: impl Fn(usize) -> bool,
        what: &str,
    ) {
        let p = rec.part(part);
        for i in self.nonzero() {
            if rec.instance(p, hyp(i)) && !concl(i) {
                rec.violate(p, Witness::new(what).sub(self.node(i)));
            }
        }
    }

    fn l9_2(&self, rec: &mut Recorder) {
        self.implication(
            rec,
            "l9.2",
            |i| self.flags[i].strongly_two_abs_second,
            |i| self.s2as(i),
            "strongly 2-absorbing second but not strongly 2-absorbing secondary",
        );
    }

    fn ann_two_absorbing_primary(&self, i: usize) -> bool {
        self.node(i)
            .annihilator()
            .is_two_absorbing_primary()
            .expect("annihilator of a non-zero submodule is proper")
    }

    fn t9_4(&self, rec: &mut Recorder) {
        self.implication(
            rec,
            "t9.4",
            |i| self.comult && self.s2as(i),
            |i| self.ann_two_absorbing_primary(i),
            "strongly 2-absorbing secondary but Ann(N) is not 2-absorbing primary",
        );
    }

    fn t9_5(&self, rec: &mut Recorder) {
        self.implication(
            rec,
            "t9.5",
            |i| self.comult && self.ann_two_absorbing_primary(i),
            |i| self.s2as(i),
            "Ann(N) is 2-absorbing primary but N is not strongly 2-absorbing secondary",
        );
    }

    fn l9_6(&self, rec: &mut Recorder) -> Result<()> {
        let p = rec.part("l9.6");
        let full = self.lattice.full_index();
        for i in 0..full {
            if !rec.instance(p, self.flags[i].two_abs_primary_submodule) {
                continue;
            }
            let r = self.c.m_radical_of(i);
            if r == full {
                rec.violate(p, Witness::new("M-rad(N) = M").sub(self.node(i)));
            } else if !self.c.is_two_absorbing_submodule(r)? {
                rec.violate(
                    p,
                    Witness::new("M-rad(N) is not a 2-absorbing submodule")
                        .sub(self.node(i))
                        .target(self.node(r)),
                );
            }
        }
        Ok(())
    }

    fn p1_5(&self, rec: &mut Recorder) {
        let pa = rec.part("p1.5(a)");
        let pb = rec.part("p1.5(b)");
        for i in self.nonzero() {
            let f = &self.flags[i];
            let sf = &self.flags[self.sec(i)];
            if rec.instance(pa, f.two_abs_secondary || f.strongly_two_abs_secondary) {
                if f.two_abs_secondary && !sf.two_abs_second {
                    rec.violate(
                        pa,
                        Witness::new("sec(N) is not 2-absorbing second").sub(self.node(i)),
                    );
                }
                if f.strongly_two_abs_secondary && !sf.strongly_two_abs_second {
                    rec.violate(
                        pa,
                        Witness::new("sec(N) is not strongly 2-absorbing second").sub(self.node(i)),
                    );
                }
            }
            if rec.instance(pb, f.second_radical_submodule)
                && (f.two_abs_second != f.two_abs_secondary
                    || f.strongly_two_abs_second != f.strongly_two_abs_secondary)
            {
                rec.violate(
                    pb,
                    Witness::new("second and secondary absorbing classes differ on a second radical submodule")
                        .sub(self.node(i)),
                );
            }
        }
    }

    fn t9_7(&self, rec: &mut Recorder) -> Result<()> {
        let pa = rec.part("t9.7(a)");
        let pb = rec.part("t9.7(b)");
        let max_power = factorize(self.modulus)?.total_multiplicity() + 1;
        for i in self.nonzero() {
            let sec_second = self.flags[self.sec(i)].second;
            if rec.instance(pa, sec_second) && !self.s2as(i) {
                rec.violate(
                    pa,
                    Witness::new("sec(N) is second but N is not strongly 2-absorbing secondary")
                        .sub(self.node(i)),
                );
            }
            if !rec.instance(pb, self.comult && sec_second) {
                continue;
            }
            for t in 1..=max_power {
                let cp = self.node(i).coproduct_power(t)?;
                if !self.s2as(self.lattice.lookup(&cp)) {
                    rec.violate(
                        pb,
                        Witness::new(format!("C(N^{t}) is not strongly 2-absorbing secondary"))
                            .sub(self.node(i))
                            .target(&cp),
                    );
                }
            }
        }
        Ok(())
    }

    fn t9_8(&self, rec: &mut Recorder) {
        let pa = rec.part("t9.8(a)");
        let pb = rec.part("t9.8(b)");
        let pc = rec.part("t9.8(c)");
        let pd = rec.part("t9.8(d)");
        let nz: Vec<usize> = self.nonzero().collect();
        let two_abs = |i: usize| self.flags[i].two_abs_secondary;
        for (x, &i) in nz.iter().enumerate() {
            for &j in &nz[x..] {
                let sum = self.lattice.join(i, j);
                let same_sec = self.sec(i) == self.sec(j);
                if rec.instance(pa, self.comult && same_sec && self.s2as(i) && self.s2as(j))
                    && !self.s2as(sum)
                {
                    rec.violate(
                        pa,
                        Witness::new("sum is not strongly 2-absorbing secondary")
                            .sub(self.node(i))
                            .sub(self.node(j)),
                    );
                }
                if rec.instance(pb, self.comult && same_sec && two_abs(i) && two_abs(j))
                    && !two_abs(sum)
                {
                    rec.violate(
                        pb,
                        Witness::new("sum is not 2-absorbing secondary")
                            .sub(self.node(i))
                            .sub(self.node(j)),
                    );
                }
                let secondary = |k: usize| self.flags[k].secondary;
                if rec.instance(pc, self.comult && secondary(i) && secondary(j)) && !self.s2as(sum)
                {
                    rec.violate(
                        pc,
                        Witness::new("sum of secondaries is not strongly 2-absorbing secondary")
                            .sub(self.node(i))
                            .sub(self.node(j)),
                    );
                }
            }
        }
        // whole families sharing a second radical
        let mut families: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for &i in &nz {
            let entry = families.entry(self.sec(i)).or_default();
            if self.s2as(i) {
                entry.0.push(i);
            }
            if two_abs(i) {
                entry.1.push(i);
            }
        }
        for (strong, weak) in families.values() {
            let total = |v: &[usize]| v.iter().fold(0, |acc, &k| self.lattice.join(acc, k));
            if !strong.is_empty() && rec.instance(pa, self.comult) && !self.s2as(total(strong)) {
                rec.violate(
                    pa,
                    Witness::new("family sum is not strongly 2-absorbing secondary")
                        .target(self.node(total(strong))),
                );
            }
            if !weak.is_empty() && rec.instance(pb, self.comult) && !two_abs(total(weak)) {
                rec.violate(
                    pb,
                    Witness::new("family sum is not 2-absorbing secondary")
                        .target(self.node(total(weak))),
                );
            }
        }
        let minimal = self.lattice.minimal_submodules();
        for &i in &nz {
            let s = self.sec(i);
            let two_minimal = minimal.iter().enumerate().any(|(x, &k1)| {
                minimal[x + 1..]
                    .iter()
                    .any(|&k2| self.lattice.join(k1, k2) == s)
            });
            if rec.instance(pd, self.comult && two_minimal) && !self.s2as(i) {
                rec.violate(
                    pd,
                    Witness::new("sec(N) = K1 + K2 but N is not strongly 2-absorbing secondary")
                        .sub(self.node(i)),
                );
            }
        }
    }

    fn all_homs<'f>(&self, family: &'f HomFamily) -> impl Iterator<Item = &'f ModuleHom> {
        family.inclusions.iter().chain(&family.sampled)
    }

    fn l9_9(&self, rec: &mut Recorder) -> Result<()> {
        let pa = rec.part("l9.9(a)");
        let pb = rec.part("l9.9(b)");
        let family = self.hom_family()?;
        for h in self.all_homs(family) {
            let src = &family.sources[h.source().factors()];
            for x in 0..src.lattice.len() {
                rec.instance(pa, true);
                let fx = self.lattice.lookup(&h.image(src.lattice.node(x))?);
                let f_sec = h.image(src.lattice.node(src.sec[x]))?;
                if self.node(self.sec_def[fx]) != &f_sec {
                    rec.violate(
                        pa,
                        Witness::new("sec(f(N)) ≠ f(sec(N))")
                            .sub(src.lattice.node(x))
                            .target(&f_sec),
                    );
                }
            }
            let image = self.lattice.lookup(&h.image_of_source());
            for y in self.lattice.subsets(image) {
                rec.instance(pb, true);
                let pre = src.lattice.lookup(&h.preimage(self.node(y))?);
                let pre_sec = h.preimage(self.node(self.sec_def[y]))?;
                if src.lattice.node(src.sec[pre]) != &pre_sec {
                    rec.violate(
                        pb,
                        Witness::new("sec(f⁻¹(N')) ≠ f⁻¹(sec(N'))")
                            .sub(self.node(y))
                            .target(&pre_sec),
                    );
                }
            }
        }
        Ok(())
    }

    fn t9_10(&self, rec: &mut Recorder) -> Result<()> {
        let pa = rec.part("t9.10(a)");
        let pb = rec.part("t9.10(b)");
        let family = self.hom_family()?;
        for h in self.all_homs(family) {
            let src = &family.sources[h.source().factors()];
            for x in 1..src.lattice.len() {
                if rec.instance(pa, src.s2as[x]) {
                    let fx = h.image(src.lattice.node(x))?;
                    if !family.target_s2as[self.lattice.lookup(&fx)] {
                        rec.violate(
                            pa,
                            Witness::new("f(N) is not strongly 2-absorbing secondary")
                                .sub(src.lattice.node(x))
                                .target(&fx),
                        );
                    }
                }
            }
            let image = self.lattice.lookup(&h.image_of_source());
            for y in self.lattice.subsets(image).filter(|&y| y != 0) {
                if rec.instance(pb, family.target_s2as[y]) {
                    let pre = h.preimage(self.node(y))?;
                    if !src.s2as[src.lattice.lookup(&pre)] {
                        rec.violate(
                            pb,
                            Witness::new("f⁻¹(N') is not strongly 2-absorbing secondary")
                                .sub(self.node(y))
                                .target(&pre),
                        );
                    }
                }
            }
        }
        Ok(())
    }

    fn c9_11(&self, rec: &mut Recorder) -> Result<()> {
        let p = rec.part("c9.11");
        let family = self.hom_family()?;
        for h in &family.inclusions {
            let src = &family.sources[h.source().factors()];
            for x in 1..src.lattice.len() {
                rec.instance(p, true);
                let fx = h.image(src.lattice.node(x))?;
                if src.s2as[x] != family.target_s2as[self.lattice.lookup(&fx)] {
                    rec.violate(
                        p,
                        Witness::new("strongly 2-absorbing secondary in K and in M disagree")
                            .sub(&fx)
                            .target(&h.image_of_source()),
                    );
                }
            }
        }
        Ok(())
    }

    fn p9_12(&self, rec: &mut Recorder) -> Result<()> {
        let p = rec.part("p9.12");
        let minimal = self.lattice.minimal_submodules();
        let cocyclic = self.c.is_cocyclic();
        let quotient = if cocyclic {
            Some(self.module().quotient(self.node(minimal[0]))?)
        } else {
            None
        };
        for i in self.nonzero() {
            let hypothesis = match &quotient {
                None => false,
                Some((_, proj)) => {
                    let k = minimal[0];
                    self.residues().all(|r| self.img(i, r) != k)
                        && is_strongly_two_absorbing_secondary_formula(&proj.image(self.node(i))?)
                }
            };
            if rec.instance(p, hypothesis) && !self.s2as(i) {
                rec.violate(
                    p,
                    Witness::new("N/K strongly 2-absorbing secondary but N is not")
                        .sub(self.node(i)),
                );
            }
        }
        Ok(())
    }

    /// Records every non-zero submodule as a vacuous instance of each part.
    fn all_vacuous(&self, rec: &mut Recorder, parts: &[usize]) {
        for _ in self.nonzero() {
            for &p in parts {
                rec.instance(p, false);
            }
        }
    }

    fn l9_13(&self, rec: &mut Recorder) -> Result<()> {
        let pa = rec.part("l9.13(a)");
        let pb = rec.part("l9.13(b)");
        let splits = self.splits()?;
        if splits.is_empty() {
            self.all_vacuous(rec, &[pa, pb]);
        }
        for d in &splits {
            for i in self.nonzero() {
                let (p1, p2) = d.split(self.node(i))?;
                rec.instance(pa, true);
                let one_sided =
                    (p2.is_zero() && is_second(&p1)) || (p1.is_zero() && is_second(&p2));
                if one_sided != self.flags[i].second {
                    rec.violate(
                        pa,
                        Witness::new(format!(
                            "second in M: {}, one-sided second: {one_sided}",
                            self.flags[i].second
                        ))
                        .sub(self.node(i))
                        .ideals(&[d.n1, d.n2]),
                    );
                }
                rec.instance(pb, true);
                let joined = d.join(&second_radical(&p1), &second_radical(&p2))?;
                if &joined != self.node(self.sec_def[i]) {
                    rec.violate(
                        pb,
                        Witness::new("sec(N) ≠ sec(N1) × sec(N2)")
                            .sub(self.node(i))
                            .ideals(&[d.n1, d.n2])
                            .target(&joined),
                    );
                }
            }
        }
        Ok(())
    }

    fn t9_14(&self, rec: &mut Recorder) -> Result<()> {
        let pa = rec.part("t9.14(a)");
        let pb = rec.part("t9.14(b)");
        let pc = rec.part("t9.14(c)");
        let splits = self.splits()?;
        if splits.is_empty() {
            self.all_vacuous(rec, &[pa, pb, pc]);
        }
        for d in &splits {
            let comult = d.m1.is_cyclic() && d.m2.is_cyclic();
            for i in self.nonzero() {
                let (p1, p2) = d.split(self.node(i))?;
                let one_sided = match (p1.is_zero(), p2.is_zero()) {
                    (false, true) => Some((pa, &p1)),
                    (true, false) => Some((pb, &p2)),
                    _ => None,
                };
                if let Some((part, k)) = one_sided {
                    if rec.instance(part, comult)
                        && is_strongly_two_absorbing_secondary_formula(k) != self.s2as(i)
                    {
                        rec.violate(
                            part,
                            Witness::new(
                                "K and its embedding disagree on strong 2-absorbing secondariness",
                            )
                            .sub(self.node(i))
                            .ideals(&[d.n1, d.n2]),
                        );
                    }
                } else if rec.instance(pc, comult && is_secondary(&p1) && is_secondary(&p2))
                    && !self.s2as(i)
                {
                    rec.violate(
                        pc,
                        Witness::new(
                            "K1 × K2 with secondary factors is not strongly 2-absorbing secondary",
                        )
                        .sub(self.node(i))
                        .ideals(&[d.n1, d.n2]),
                    );
                }
            }
        }
        Ok(())
    }

    fn t9_15(&self, rec: &mut Recorder) {
        let p = rec.part("t9.15");
        for i in self.nonzero() {
            if !rec.instance(p, self.comult) {
                continue;
            }
            let primary = self
                .node(i)
                .annihilator()
                .is_primary()
                .expect("proper annihilator");
            if primary != self.flags[i].secondary {
                rec.violate(
                    p,
                    Witness::new(format!(
                        "secondary: {}, Ann(N) primary: {primary}",
                        self.flags[i].secondary
                    ))
                    .sub(self.node(i)),
                );
            }
        }
    }

    fn t9_16(&self, rec: &mut Recorder) -> Result<()> {
        let p = rec.part("t9.16");
        let splits = self.splits()?;
        if splits.is_empty() {
            self.all_vacuous(rec, &[p]);
        }
        for d in &splits {
            for i in self.nonzero() {
                if !rec.instance(p, self.comult) {
                    continue;
                }
                let (p1, p2) = d.split(self.node(i))?;
                let s2as = is_strongly_two_absorbing_secondary_formula;
                let split_side = (p1.is_zero() && s2as(&p2))
                    || (p2.is_zero() && s2as(&p1))
                    || (is_secondary(&p1) && is_secondary(&p2));
                if split_side != self.s2as(i) {
                    rec.violate(
                        p,
                        Witness::new(format!(
                            "strongly 2-absorbing secondary: {}, component condition: {split_side}",
                            self.s2as(i)
                        ))
                        .sub(self.node(i))
                        .ideals(&[d.n1, d.n2]),
                    );
                }
            }
        }
        Ok(())
    }
}

pub fn check_theorem(id: &str, m: &FinModule) -> Result<TheoremReport> {
    check_theorem_with(TheoremId::parse(id)?, m, &HarnessConfig::default())
}

pub fn check_theorem_with(
    id: TheoremId,
    m: &FinModule,
    cfg: &HarnessConfig,
) -> Result<TheoremReport> {
    let lattice = SubLattice::enumerate_with(m, &cfg.bounds)?;
    Session::new(&lattice, cfg).run(id)
}

/// Every theorem on one module, sharing a single lattice.
pub fn check_all(m: &FinModule, cfg: &HarnessConfig) -> Result<Vec<TheoremReport>> {
    let lattice = SubLattice::enumerate_with(m, &cfg.bounds)?;
    let session = Session::new(&lattice, cfg);
    TheoremId::ALL
        .into_iter()
        .map(|id| session.run(id))
        .collect()
}
