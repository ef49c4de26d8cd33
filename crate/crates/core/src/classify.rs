//! Decision procedures for the submodule classes.
//!
//! Ring quantifiers ("for all a ∈ R") range over the residues `0..n` of the
//! acting ring Z/nZ. Predicates that quantify over submodules work on a
//! [`Classifier`], which caches, for every lattice node `N` and every
//! residue `a`, the node index of `aN`. Lattice-free predicates take a
//! [`Submodule`] directly and use matrix arithmetic only.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{divisors, factorize};
use crate::lattice::{second_radical, SubLattice};
use crate::module::{FinModule, Submodule};

/// `aN = N` or `aN = 0` for every `a`.
pub fn is_second(n: &Submodule) -> bool {
    !n.is_zero()
        && (0..n.parent().modulus()).all(|a| {
            let img = n.scale(a);
            img.is_zero() || img == *n
        })
}

/// Non-zero and killed by a single prime.
pub fn is_second_fast(n: &Submodule) -> bool {
    !n.is_zero()
        && factorize(n.exponent())
            .map(|f| f.total_multiplicity() == 1)
            .unwrap_or(false)
}

fn nilpotency_bound(modulus: u64) -> u32 {
    factorize(modulus)
        .map(|f| f.total_multiplicity())
        .unwrap_or(0)
        .max(1)
}

/// `aN = N` or `a^t N = 0` for some `t` below the nilpotency bound.
pub fn is_secondary(n: &Submodule) -> bool {
    if n.is_zero() {
        return false;
    }
    let ring = n.parent().ring();
    let bound = nilpotency_bound(ring.modulus());
    (0..ring.modulus()).all(|a| {
        if n.scale(a) == *n {
            return true;
        }
        let mut power = a;
        for _ in 0..bound {
            if n.scale(power).is_zero() {
                return true;
            }
            power = ring.mul(power, a);
        }
        false
    })
}

/// Strongly 2-absorbing secondary, lattice-free form: for all `a, b`,
/// `a·sec(N) ⊆ abN` or `b·sec(N) ⊆ abN` or `abN = 0`.
pub fn is_strongly_two_absorbing_secondary_formula(n: &Submodule) -> bool {
    if n.is_zero() {
        return false;
    }
    let ring = n.parent().ring();
    let modulus = ring.modulus();
    let assoc = Associates::new(modulus);
    let sec = second_radical(n);
    let n_img: Vec<Submodule> = assoc.divisors.iter().map(|&g| n.scale(g)).collect();
    let sec_img: Vec<Submodule> = assoc.divisors.iter().map(|&g| sec.scale(g)).collect();
    let d = assoc.divisors.len();
    let included: Vec<bool> = (0..d * d)
        .map(|xy| sec_img[xy / d].is_subset(&n_img[xy % d]))
        .collect();
    (0..modulus).all(|a| {
        let ca = assoc.class(a);
        (a..modulus).all(|b| {
            let cab = assoc.class(ring.mul(a, b));
            n_img[cab].is_zero() || included[ca * d + cab] || included[assoc.class(b) * d + cab]
        })
    })
}

/// Residues of `Z/nZ` grouped by `gcd(a, n)`. Units act bijectively on
/// every submodule, so `aN = gcd(a, n)·N` and scalar images need only be
/// computed once per divisor.
struct Associates {
    divisors: Vec<u64>,
    class: Vec<usize>,
}

impl Associates {
    fn new(n: u64) -> Self {
        let divisors = divisors(n);
        let class = (0..n)
            .map(|a| {
                let g = num_integer::gcd(a, n);
                divisors.binary_search(&g).expect("gcd divides n")
            })
            .collect();
        Associates { divisors, class }
    }

    fn class(&self, a: u64) -> usize {
        self.class[a as usize]
    }
}

/// `N = Σ_p N_p`, the non-zero primary components in increasing `p`.
pub fn secondary_representation(n: &Submodule) -> Result<Vec<Submodule>> {
    if n.is_zero() {
        return Err(Error::ZeroSubmodule);
    }
    let modulus = n.parent().modulus();
    let parts = factorize(modulus)?
        .pairs()
        .iter()
        .map(|&(p, e)| n.scale(modulus / p.pow(e)))
        .filter(|part| !part.is_zero())
        .collect();
    Ok(parts)
}

/// `abm ∈ N ⇒ am ∈ N or bm ∈ N or abM ⊆ N`, quantified over elements.
pub fn is_two_absorbing_submodule_elementwise(n: &Submodule) -> Result<bool> {
    absorbing_elementwise(n, n)
}

/// `abm ∈ N ⇒ am ∈ R or bm ∈ R or abM ⊆ N` with `R = M-rad(N)` supplied.
pub fn is_two_absorbing_primary_submodule_elementwise(
    n: &Submodule,
    m_radical: &Submodule,
) -> Result<bool> {
    absorbing_elementwise(n, m_radical)
}

fn absorbing_elementwise(n: &Submodule, target: &Submodule) -> Result<bool> {
    if !n.is_proper() {
        return Err(Error::ImproperSubmodule);
    }
    let m = n.parent();
    let ring = m.ring();
    let elements = m.elements()?;
    for a in 0..ring.modulus() {
        for b in 0..ring.modulus() {
            let ab = ring.mul(a, b);
            if elements.iter().all(|x| n.contains(&m.scale_element(ab, x))) {
                continue;
            }
            for x in &elements {
                if n.contains(&m.scale_element(ab, x))
                    && !target.contains(&m.scale_element(a, x))
                    && !target.contains(&m.scale_element(b, x))
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Comultiplication holds exactly for cyclic finite modules.
pub fn is_comultiplication_fast(m: &FinModule) -> bool {
    m.is_cyclic()
}

/// A unique minimal submodule: a non-zero cyclic module of prime-power order.
pub fn is_cocyclic_fast(m: &FinModule) -> bool {
    m.is_cyclic()
        && !m.is_zero()
        && factorize(m.order())
            .map(|f| f.distinct() == 1)
            .unwrap_or(false)
}

/// Lattice-backed classifier with per-node scalar-image tables.
pub struct Classifier<'a> {
    lattice: &'a SubLattice,
    modulus: usize,
    assoc: Associates,
    image: Vec<u32>,
    sec: Vec<usize>,
    m_rad: Vec<usize>,
    ci: Vec<usize>,
    ci_meets: Vec<usize>,
}

impl<'a> Classifier<'a> {
    pub fn new(lattice: &'a SubLattice) -> Self {
        let modulus = lattice.module().modulus() as usize;
        let assoc = Associates::new(modulus as u64);
        let image: Vec<u32> = (0..lattice.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let node = lattice.node(i);
                let per_divisor: Vec<u32> = assoc
                    .divisors
                    .iter()
                    .map(|&g| lattice.lookup(&node.scale(g)) as u32)
                    .collect();
                let assoc = &assoc;
                (0..modulus).map(move |a| per_divisor[assoc.class(a as u64)])
            })
            .collect();
        let sec: Vec<usize> = (0..lattice.len())
            .into_par_iter()
            .map(|i| lattice.lookup(&second_radical(lattice.node(i))))
            .collect();
        let m_rad: Vec<usize> = (0..lattice.len())
            .into_par_iter()
            .map(|i| lattice.m_radical(i))
            .collect();
        let ci = lattice.completely_irreducibles();
        let mut ci_meets: Vec<usize> = ci
            .par_iter()
            .enumerate()
            .flat_map_iter(|(x, &l1)| ci[x..].iter().map(move |&l2| lattice.meet(l1, l2)))
            .collect();
        ci_meets.sort_unstable();
        ci_meets.dedup();
        Classifier {
            lattice,
            modulus,
            assoc,
            image,
            sec,
            m_rad,
            ci,
            ci_meets,
        }
    }

    pub fn lattice(&self) -> &'a SubLattice {
        self.lattice
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        (a * b) % self.modulus
    }

    /// Node index of `a·nodes[i]`.
    pub fn scaled(&self, i: usize, a: u64) -> usize {
        self.image[i * self.modulus + (a as usize % self.modulus)] as usize
    }

    fn img(&self, i: usize, a: usize) -> usize {
        self.image[i * self.modulus + a] as usize
    }

    pub fn second_radical_of(&self, i: usize) -> usize {
        self.sec[i]
    }

    pub fn m_radical_of(&self, i: usize) -> usize {
        self.m_rad[i]
    }

    pub fn completely_irreducibles(&self) -> &[usize] {
        &self.ci
    }

    /// Distinct intersections `L₁ ∩ L₂` of completely irreducible nodes.
    pub fn ci_pair_meets(&self) -> &[usize] {
        &self.ci_meets
    }

    fn le(&self, i: usize, j: usize) -> bool {
        self.lattice.le(i, j)
    }

    fn zero(&self) -> usize {
        self.lattice.zero_index()
    }

    fn is_nonzero(&self, i: usize) -> bool {
        i != self.zero()
    }

    pub fn is_second(&self, i: usize) -> bool {
        self.is_nonzero(i)
            && (0..self.modulus).all(|a| matches!(self.img(i, a), x if x == i || x == self.zero()))
    }

    pub fn is_secondary(&self, i: usize) -> bool {
        if !self.is_nonzero(i) {
            return false;
        }
        let bound = nilpotency_bound(self.modulus as u64);
        (0..self.modulus).all(|a| {
            if self.img(i, a) == i {
                return true;
            }
            let mut power = a;
            for _ in 0..bound {
                if self.img(i, power) == self.zero() {
                    return true;
                }
                power = self.mul(power, a);
            }
            false
        })
    }

    pub fn is_second_radical_submodule(&self, i: usize) -> bool {
        self.is_nonzero(i) && self.sec[i] == i
    }

    /// Shared shape of the absorbing conditions: for all `a, b` with
    /// `abN ≠ 0` and every target `T ⊇ abN` drawn from `targets`, one of
    /// `a·X ⊆ T`, `b·X ⊆ T` holds, where `X` is `nodes[i]` or its second
    /// radical.
    fn absorbing<I>(&self, i: usize, x: usize, targets: impl Fn(usize) -> I) -> bool
    where
        I: Iterator<Item = usize>,
    {
        if !self.is_nonzero(i) {
            return false;
        }
        for a in 0..self.modulus {
            let ax = self.img(x, a);
            for b in 0..self.modulus {
                let abn = self.img(i, self.mul(a, b));
                if abn == self.zero() {
                    continue;
                }
                let bx = self.img(x, b);
                for t in targets(abn) {
                    if !self.le(ax, t) && !self.le(bx, t) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn ci_above(&self, base: usize) -> impl Iterator<Item = usize> + '_ {
        self.ci.iter().copied().filter(move |&l| self.le(base, l))
    }

    /// Quantifies over `a, b` and completely irreducible `L`.
    pub fn is_two_absorbing_second(&self, i: usize) -> bool {
        self.absorbing(i, i, |abn| self.ci_above(abn))
    }

    /// Quantifies over `a, b` and every submodule `K`.
    pub fn is_strongly_two_absorbing_second(&self, i: usize) -> bool {
        self.absorbing(i, i, |abn| self.lattice.supersets(abn))
    }

    /// Only `K = abN` needs checking.
    pub fn is_strongly_two_absorbing_second_fast(&self, i: usize) -> bool {
        self.absorbing(i, i, std::iter::once)
    }

    pub fn is_two_absorbing_secondary(&self, i: usize) -> bool {
        self.absorbing(i, self.sec[i], |abn| self.ci_above(abn))
    }

    /// Mode of record: the lattice-free formula.
    pub fn is_strongly_two_absorbing_secondary(&self, i: usize) -> bool {
        is_strongly_two_absorbing_secondary_formula(self.lattice.node(i))
    }

    /// Table form of the same formula (`K = abN`).
    pub fn is_strongly_two_absorbing_secondary_tabled(&self, i: usize) -> bool {
        self.absorbing(i, self.sec[i], std::iter::once)
    }

    /// Ideal pairs `I, J` and every submodule `K`: `IJN ⊆ K ⇒ I·sec(N) ⊆ K
    /// or J·sec(N) ⊆ K or IJ ⊆ Ann(N)`.
    pub fn is_strongly_two_absorbing_secondary_by_ideals(&self, i: usize) -> bool {
        if !self.is_nonzero(i) {
            return false;
        }
        let gens: Vec<usize> = divisors(self.modulus as u64)
            .into_iter()
            .map(|g| g as usize % self.modulus)
            .collect();
        let s = self.sec[i];
        gens.iter().all(|&g| {
            gens.iter().all(|&h| {
                let ijn = self.img(i, self.mul(g, h));
                if ijn == self.zero() {
                    return true;
                }
                let (is, js) = (self.img(s, g), self.img(s, h));
                self.lattice
                    .supersets(ijn)
                    .all(|k| self.le(is, k) || self.le(js, k))
            })
        })
    }

    /// `a, b` and pairs of completely irreducible `L₁, L₂`, target `L₁ ∩ L₂`.
    pub fn is_strongly_two_absorbing_secondary_by_ci_pairs(&self, i: usize) -> bool {
        self.absorbing(i, self.sec[i], |abn| {
            self.ci_meets
                .iter()
                .copied()
                .filter(move |&t| self.le(abn, t))
        })
    }

    /// `(N : ab) ⊆ (T : a)` or `(N : ab) ⊆ (T : b)` unless `abM ⊆ N`; a group
    /// is never a union of two proper subgroups, so this matches the
    /// element-wise condition.
    fn absorbing_submodule(&self, i: usize, target: usize) -> Result<bool> {
        let node = self.lattice.node(i);
        if !node.is_proper() {
            return Err(Error::ImproperSubmodule);
        }
        let colon_table = |s: &Submodule| -> Vec<usize> {
            let per_divisor: Vec<usize> = self
                .assoc
                .divisors
                .iter()
                .map(|&g| self.lattice.lookup(&s.colon_scalar(g)))
                .collect();
            (0..self.modulus)
                .map(|a| per_divisor[self.assoc.class(a as u64)])
                .collect()
        };
        let colon_n = colon_table(node);
        let colon_t = if target == i {
            colon_n.clone()
        } else {
            colon_table(self.lattice.node(target))
        };
        let full = self.lattice.full_index();
        for a in 0..self.modulus {
            for b in 0..self.modulus {
                let ab = self.mul(a, b);
                if self.le(self.img(full, ab), i) {
                    continue;
                }
                let c = colon_n[ab];
                if !self.le(c, colon_t[a]) && !self.le(c, colon_t[b]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_two_absorbing_submodule(&self, i: usize) -> Result<bool> {
        self.absorbing_submodule(i, i)
    }

    pub fn is_two_absorbing_primary_submodule(&self, i: usize) -> Result<bool> {
        self.absorbing_submodule(i, self.m_rad[i])
    }

    pub fn is_prime(&self, i: usize) -> Result<bool> {
        if !self.lattice.node(i).is_proper() {
            return Err(Error::ImproperSubmodule);
        }
        Ok(self.lattice.flags(i).prime)
    }

    pub fn is_completely_irreducible(&self, i: usize) -> bool {
        self.lattice.flags(i).completely_irreducible
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.lattice.flags(i).minimal
    }

    /// Every submodule `N` equals `(0 :_M Ann(N))`.
    pub fn is_comultiplication(&self) -> bool {
        let zero = self.lattice.module().zero();
        self.lattice
            .nodes()
            .iter()
            .all(|n| zero.colon(&n.annihilator()).expect("same ring") == *n)
    }

    /// Exactly one minimal submodule.
    pub fn is_cocyclic(&self) -> bool {
        self.lattice.minimal_submodules().len() == 1
    }

    pub fn flags(&self, i: usize) -> ClassFlags {
        let proper = self.lattice.node(i).is_proper();
        ClassFlags {
            second: self.is_second(i),
            secondary: self.is_secondary(i),
            second_radical_submodule: self.is_second_radical_submodule(i),
            two_abs_second: self.is_two_absorbing_second(i),
            strongly_two_abs_second: self.is_strongly_two_absorbing_second(i),
            two_abs_secondary: self.is_two_absorbing_secondary(i),
            strongly_two_abs_secondary: self.is_strongly_two_absorbing_secondary(i),
            two_abs_submodule: proper && self.is_two_absorbing_submodule(i).expect("proper"),
            two_abs_primary_submodule: proper
                && self.is_two_absorbing_primary_submodule(i).expect("proper"),
            prime: proper && self.lattice.flags(i).prime,
            completely_irreducible: self.is_completely_irreducible(i),
            minimal: self.is_minimal(i),
        }
    }
}

/// Class membership of one submodule. Classes that need a non-zero
/// submodule are false on zero; classes that need a proper submodule are
/// false on the whole module.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub second: bool,
    pub secondary: bool,
    pub second_radical_submodule: bool,
    pub two_abs_second: bool,
    pub strongly_two_abs_second: bool,
    pub two_abs_secondary: bool,
    pub strongly_two_abs_secondary: bool,
    pub two_abs_submodule: bool,
    pub two_abs_primary_submodule: bool,
    pub prime: bool,
    pub completely_irreducible: bool,
    pub minimal: bool,
}

impl ClassFlags {
    /// Implications that must hold for every submodule.
    pub fn closure_violations(&self) -> Vec<&'static str> {
        let rules: [(&'static str, bool, bool); 10] = [
            ("second => secondary", self.second, self.secondary),
            ("second => 2-abs-second", self.second, self.two_abs_second),
            (
                "second => second-radical",
                self.second,
                self.second_radical_submodule,
            ),
            ("minimal => second", self.minimal, self.second),
            (
                "strongly-2-abs-second => 2-abs-second",
                self.strongly_two_abs_second,
                self.two_abs_second,
            ),
            (
                "strongly-2-abs-second => strongly-2-abs-secondary",
                self.strongly_two_abs_second,
                self.strongly_two_abs_secondary,
            ),
            (
                "secondary => strongly-2-abs-secondary",
                self.secondary,
                self.strongly_two_abs_secondary,
            ),
            (
                "strongly-2-abs-secondary => 2-abs-secondary",
                self.strongly_two_abs_secondary,
                self.two_abs_secondary,
            ),
            (
                "prime => 2-abs-submodule",
                self.prime,
                self.two_abs_submodule,
            ),
            (
                "2-abs-submodule => 2-abs-primary-submodule",
                self.two_abs_submodule,
                self.two_abs_primary_submodule,
            ),
        ];
        rules
            .into_iter()
            .filter(|&(_, lhs, rhs)| lhs && !rhs)
            .map(|(name, _, _)| name)
            .collect()
    }
}

/// Stable identifiers of the classes, as used by the counterexample search.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassId {
    Second,
    Secondary,
    SecondRadical,
    TwoAbsSecond,
    StronglyTwoAbsSecond,
    TwoAbsSecondary,
    StronglyTwoAbsSecondary,
    TwoAbsSubmodule,
    TwoAbsPrimarySubmodule,
    Prime,
    CompletelyIrreducible,
    Minimal,
}

impl ClassId {
    pub const ALL: [ClassId; 12] = [
        ClassId::Second,
        ClassId::Secondary,
        ClassId::SecondRadical,
        ClassId::TwoAbsSecond,
        ClassId::StronglyTwoAbsSecond,
        ClassId::TwoAbsSecondary,
        ClassId::StronglyTwoAbsSecondary,
        ClassId::TwoAbsSubmodule,
        ClassId::TwoAbsPrimarySubmodule,
        ClassId::Prime,
        ClassId::CompletelyIrreducible,
        ClassId::Minimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Second => "second",
            ClassId::Secondary => "secondary",
            ClassId::SecondRadical => "second-radical",
            ClassId::TwoAbsSecond => "2-abs-second",
            ClassId::StronglyTwoAbsSecond => "strongly-2-abs-second",
            ClassId::TwoAbsSecondary => "2-abs-secondary",
            ClassId::StronglyTwoAbsSecondary => "strongly-2-abs-secondary",
            ClassId::TwoAbsSubmodule => "2-abs-submodule",
            ClassId::TwoAbsPrimarySubmodule => "2-abs-primary-submodule",
            ClassId::Prime => "prime",
            ClassId::CompletelyIrreducible => "completely-irreducible",
            ClassId::Minimal => "minimal",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }

    pub fn get(self, flags: &ClassFlags) -> bool {
        match self {
            ClassId::Second => flags.second,
            ClassId::Secondary => flags.secondary,
            ClassId::SecondRadical => flags.second_radical_submodule,
            ClassId::TwoAbsSecond => flags.two_abs_second,
            ClassId::StronglyTwoAbsSecond => flags.strongly_two_abs_second,
            ClassId::TwoAbsSecondary => flags.two_abs_secondary,
            ClassId::StronglyTwoAbsSecondary => flags.strongly_two_abs_secondary,
            ClassId::TwoAbsSubmodule => flags.two_abs_submodule,
            ClassId::TwoAbsPrimarySubmodule => flags.two_abs_primary_submodule,
            ClassId::Prime => flags.prime,
            ClassId::CompletelyIrreducible => flags.completely_irreducible,
            ClassId::Minimal => flags.minimal,
        }
    }
}

/// One row per submodule, in lattice order.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub module: FinModule,
    pub rows: Vec<(Submodule, ClassFlags)>,
    pub comultiplication: bool,
    pub cocyclic: bool,
}

/// Classify every submodule of the lattice. Rows may be computed in
/// parallel; their order is the lattice order.
pub fn classify_all(lattice: &SubLattice) -> Result<ClassificationReport> {
    let classifier = Classifier::new(lattice);
    let rows: Vec<(Submodule, ClassFlags)> = (0..lattice.len())
        .into_par_iter()
        .map(|i| (lattice.node(i).clone(), classifier.flags(i)))
        .collect();
    for (n, flags) in &rows {
        if let Some(rule) = flags.closure_violations().first() {
            return Err(Error::InvariantViolation(format!("{rule} fails for {n:?}")));
        }
    }
    Ok(ClassificationReport {
        module: lattice.module().clone(),
        rows,
        comultiplication: classifier.is_comultiplication(),
        cocyclic: classifier.is_cocyclic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &[u64]) -> FinModule {
        FinModule::new(None, f).unwrap()
    }

    fn span(md: &FinModule, gens: &[&[u64]]) -> Submodule {
        let els: Vec<_> = gens.iter().map(|g| md.element(g).unwrap()).collect();
        md.span(&els).unwrap()
    }

    #[test]
    fn second_examples() {
        let z6 = m(&[6]);
        assert!(is_second(&span(&z6, &[&[2]])));
        let z8 = m(&[8]);
        assert!(!is_second(&span(&z8, &[&[2]])));
        assert!(!is_second(&z8.zero()));
    }

    #[test]
    fn secondary_examples() {
        assert!(is_secondary(&m(&[8]).full()));
        assert!(!is_secondary(&m(&[6]).full()));
        let l = SubLattice::enumerate(&m(&[2, 6])).unwrap();
        let c = Classifier::new(&l);
        for i in 0..l.len() {
            if c.is_second(i) {
                assert!(c.is_secondary(i));
            }
            assert_eq!(c.is_secondary(i), is_secondary(l.node(i)));
            assert_eq!(c.is_second(i), is_second(l.node(i)));
            assert_eq!(is_second(l.node(i)), is_second_fast(l.node(i)));
        }
    }

    #[test]
    fn two_absorbing_second_examples() {
        let z8 = m(&[8]);
        let l = SubLattice::enumerate(&z8).unwrap();
        let c = Classifier::new(&l);
        assert!(!c.is_two_absorbing_second(l.full_index()));
        for i in 0..l.len() {
            if c.is_second(i) {
                assert!(c.is_two_absorbing_second(i));
            }
        }
    }

    #[test]
    fn strongly_two_absorbing_second_examples() {
        let md = m(&[6, 10]);
        let l = SubLattice::enumerate(&md).unwrap();
        let c = Classifier::new(&l);
        assert!(!c.is_strongly_two_absorbing_second(l.full_index()));
        let z12 = m(&[12]);
        let l12 = SubLattice::enumerate(&z12).unwrap();
        let c12 = Classifier::new(&l12);
        // a = b = 2: 2M ⊄ 4M and 4M ≠ 0
        assert!(!c12.is_strongly_two_absorbing_second(l12.full_index()));
        assert!(!c12.is_strongly_two_absorbing_second_fast(l12.full_index()));
        let z5 = m(&[5]);
        let l5 = SubLattice::enumerate(&z5).unwrap();
        assert!(Classifier::new(&l5).is_strongly_two_absorbing_second(l5.full_index()));
    }

    #[test]
    fn strongly_two_absorbing_secondary_examples() {
        assert!(is_strongly_two_absorbing_secondary_formula(&m(&[6]).full()));
        assert!(is_strongly_two_absorbing_secondary_formula(
            &m(&[10]).full()
        ));
        assert!(!is_strongly_two_absorbing_secondary_formula(
            &m(&[6, 10]).full()
        ));
        let z8 = m(&[8]);
        assert!(is_strongly_two_absorbing_secondary_formula(&span(
            &z8,
            &[&[2]]
        )));
        assert!(!is_strongly_two_absorbing_secondary_formula(&z8.zero()));
    }

    #[test]
    fn two_absorbing_secondary_examples() {
        let z12 = m(&[12]);
        let l = SubLattice::enumerate(&z12).unwrap();
        let c = Classifier::new(&l);
        assert!(c.is_two_absorbing_secondary(l.full_index()));
        assert!(!c.is_two_absorbing_secondary(0));
    }

    #[test]
    fn two_absorbing_submodule_examples() {
        let z12 = m(&[12]);
        let l = SubLattice::enumerate(&z12).unwrap();
        let c = Classifier::new(&l);
        let six = l.index_of(&span(&z12, &[&[6]])).unwrap();
        assert!(c.is_two_absorbing_submodule(six).unwrap());
        assert!(is_two_absorbing_submodule_elementwise(l.node(six)).unwrap());
        assert_eq!(
            c.is_two_absorbing_submodule(l.full_index()),
            Err(Error::ImproperSubmodule)
        );
        let four = l.index_of(&span(&z12, &[&[4]])).unwrap();
        let rad = l.node(c.m_radical_of(four));
        assert_eq!(
            c.is_two_absorbing_primary_submodule(four).unwrap(),
            is_two_absorbing_primary_submodule_elementwise(l.node(four), rad).unwrap()
        );
    }

    #[test]
    fn absorbing_submodule_modes_agree() {
        for f in [&[12u64][..], &[2, 4], &[2, 2, 2], &[2, 6], &[3, 9], &[8]] {
            let l = SubLattice::enumerate(&m(f)).unwrap();
            let c = Classifier::new(&l);
            for i in 0..l.len() - 1 {
                let node = l.node(i);
                assert_eq!(
                    c.is_two_absorbing_submodule(i).unwrap(),
                    is_two_absorbing_submodule_elementwise(node).unwrap(),
                    "{f:?} {node:?}"
                );
                let rad = l.node(c.m_radical_of(i));
                assert_eq!(
                    c.is_two_absorbing_primary_submodule(i).unwrap(),
                    is_two_absorbing_primary_submodule_elementwise(node, rad).unwrap(),
                    "{f:?} {node:?}"
                );
                if c.is_prime(i).unwrap() {
                    assert!(c.is_two_absorbing_submodule(i).unwrap());
                }
            }
        }
    }

    #[test]
    fn comultiplication_and_cocyclic_examples() {
        for (f, comult, cocyclic) in [
            (&[8u64][..], true, true),
            (&[2, 2], false, false),
            (&[6], true, false),
            (&[], true, false),
        ] {
            let md = m(f);
            let l = SubLattice::enumerate(&md).unwrap();
            let c = Classifier::new(&l);
            assert_eq!(c.is_comultiplication(), comult, "{f:?}");
            assert_eq!(is_comultiplication_fast(&md), comult);
            assert_eq!(c.is_cocyclic(), cocyclic, "{f:?}");
            assert_eq!(is_cocyclic_fast(&md), cocyclic);
        }
    }

    #[test]
    fn secondary_representation_examples() {
        let z6 = m(&[6]);
        let parts = secondary_representation(&z6.full()).unwrap();
        assert_eq!(parts, vec![span(&z6, &[&[3]]), span(&z6, &[&[2]])]);
        let z8 = m(&[8]);
        assert_eq!(
            secondary_representation(&z8.full()).unwrap(),
            vec![z8.full()]
        );
        let z12 = m(&[12]);
        let n = span(&z12, &[&[6]]);
        assert_eq!(secondary_representation(&n).unwrap(), vec![n.clone()]);
        assert_eq!(
            secondary_representation(&z12.zero()),
            Err(Error::ZeroSubmodule)
        );
    }

    #[test]
    fn second_radical_submodule_examples() {
        let z6 = m(&[6]);
        let l = SubLattice::enumerate(&z6).unwrap();
        let c = Classifier::new(&l);
        assert!(c.is_second_radical_submodule(l.full_index()));
        assert!(!c.is_second_radical_submodule(0));
        let z8 = m(&[8]);
        let l8 = SubLattice::enumerate(&z8).unwrap();
        let c8 = Classifier::new(&l8);
        let two = l8.index_of(&span(&z8, &[&[2]])).unwrap();
        assert!(!c8.is_second_radical_submodule(two));
    }

    #[test]
    fn classify_all_examples() {
        let z12 = m(&[12]);
        let l = SubLattice::enumerate(&z12).unwrap();
        let report = classify_all(&l).unwrap();
        assert_eq!(report.rows.len(), 6);
        assert!(report.rows.last().unwrap().1.strongly_two_abs_secondary);

        let md = m(&[6, 10]);
        let l = SubLattice::enumerate(&md).unwrap();
        let report = classify_all(&l).unwrap();
        let top = report.rows.last().unwrap().1;
        assert!(!top.strongly_two_abs_secondary);
        assert!(!top.strongly_two_abs_second);

        let zero = m(&[]);
        let l = SubLattice::enumerate(&zero).unwrap();
        let report = classify_all(&l).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.rows[0].1, ClassFlags::default());
    }

    #[test]
    fn strongly_two_absorbing_modes_agree() {
        for f in [
            &[12u64][..],
            &[2, 4],
            &[2, 2, 2],
            &[6, 10],
            &[8],
            &[4, 4],
            &[3, 9],
        ] {
            let l = SubLattice::enumerate(&m(f)).unwrap();
            let c = Classifier::new(&l);
            for i in 0..l.len() {
                let formula = c.is_strongly_two_absorbing_secondary(i);
                assert_eq!(formula, c.is_strongly_two_absorbing_secondary_tabled(i));
                assert_eq!(
                    formula,
                    c.is_strongly_two_absorbing_secondary_by_ideals(i),
                    "{f:?} {i}"
                );
                assert_eq!(
                    formula,
                    c.is_strongly_two_absorbing_secondary_by_ci_pairs(i),
                    "{f:?} {i}"
                );
                assert_eq!(
                    c.is_strongly_two_absorbing_second(i),
                    c.is_strongly_two_absorbing_second_fast(i)
                );
            }
        }
    }

    #[test]
    fn class_ids_round_trip() {
        for id in ClassId::ALL {
            assert_eq!(ClassId::parse(id.name()).unwrap(), id);
        }
        assert!(ClassId::parse("tertiary").is_err());
    }
}
