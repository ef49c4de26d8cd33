//! Finite modules over Z/nZ and their submodules.
//!
//! A module is stored by its invariant factors `d_1 | d_2 | … | d_k`; a
//! submodule by the Hermite normal form of its preimage lattice in `Z^k`,
//! which makes equality a plain comparison of canonical matrices. Every
//! operation here works on matrices only. Element sets are materialized
//! only on request and only below a size bound.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::hnf::{smith, Hnf};
use crate::ideal::{factorize, Ideal, RingSpec};

/// Largest module whose element set may be materialized by default.
pub const DEFAULT_ELEMENT_BOUND: u64 = 20_000;

#[derive(Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct ModuleData {
    ring: RingSpec,
    factors: Vec<u64>,
    order: u64,
}

/// A finite module `Z/d_1 ⊕ … ⊕ Z/d_k` over `Z/nZ`. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinModule(Arc<ModuleData>);

impl fmt::Debug for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinModule({:?} over Z/{})",
            self.0.factors,
            self.0.ring.modulus()
        )
    }
}

/// Regroup arbitrary cyclic factors into an invariant-factor chain.
pub fn invariant_factors(factors: &[u64]) -> Result<Vec<u64>> {
    let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for &f in factors {
        if f < 2 {
            return Err(Error::InvalidFactor(f));
        }
        for &(p, e) in factorize(f)?.pairs() {
            match by_prime.iter_mut().find(|(q, _)| *q == p) {
                Some((_, exps)) => exps.push(e),
                None => by_prime.push((p, vec![e])),
            }
        }
    }
    let rank = by_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut out = vec![1u64; rank];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, e) in exps.into_iter().enumerate() {
            out[rank - 1 - slot] *= p.pow(e);
        }
    }
    Ok(out)
}

impl FinModule {
    /// Build a module from arbitrary cyclic factors. Without a ring modulus
    /// the module is taken over `Z/eZ` for its exponent `e`.
    pub fn new(ring_modulus: Option<u64>, factors: &[u64]) -> Result<Self> {
        let factors = invariant_factors(factors)?;
        let exponent = factors.last().copied().unwrap_or(1);
        let ring = match ring_modulus {
            None => RingSpec::modular(exponent)?,
            Some(n) => {
                let ring = RingSpec::modular(n)?;
                if n % exponent != 0 {
                    return Err(Error::ExponentMismatch {
                        exponent,
                        modulus: n,
                    });
                }
                ring
            }
        };
        Ok(Self::from_invariants(ring, factors))
    }

    pub(crate) fn from_invariants(ring: RingSpec, factors: Vec<u64>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[1] % w[0] == 0));
        debug_assert!(factors.iter().all(|&d| d >= 2));
        let order = factors.iter().product();
        FinModule(Arc::new(ModuleData {
            ring,
            factors,
            order,
        }))
    }

    /// Same group, different acting ring.
    pub fn with_ring(&self, n: u64) -> Result<Self> {
        Self::new(Some(n), &self.0.factors)
    }

    pub fn zero_module(ring: RingSpec) -> Self {
        Self::from_invariants(ring, Vec::new())
    }

    pub fn ring(&self) -> RingSpec {
        self.0.ring
    }

    /// The ring modulus `n`.
    pub fn modulus(&self) -> u64 {
        self.0.ring.modulus()
    }

    pub fn factors(&self) -> &[u64] {
        &self.0.factors
    }

    pub fn rank(&self) -> usize {
        self.0.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn exponent(&self) -> u64 {
        self.0.factors.last().copied().unwrap_or(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    fn lattice_diag(&self) -> Hnf {
        Hnf::diagonal(&self.0.factors)
    }

    /// Element from canonical coordinates.
    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        if coords.len() != self.rank() || coords.iter().zip(self.factors()).any(|(&c, &d)| c >= d) {
            return Err(Error::ForeignElement(coords.to_vec()));
        }
        Ok(Element(coords.to_vec()))
    }

    /// Element from arbitrary integer coordinates, reduced.
    pub fn element_reduced(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::ForeignElement(
                coords.iter().map(|&c| c as u64).collect(),
            ));
        }
        Ok(Element(
            coords
                .iter()
                .zip(self.factors())
                .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
                .collect(),
        ))
    }

    pub fn zero_element(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        Element(
            x.0.iter()
                .zip(&y.0)
                .zip(self.factors())
                .map(|((&a, &b), &d)| (a + b) % d)
                .collect(),
        )
    }

    pub fn scale_element(&self, a: u64, x: &Element) -> Element {
        Element(
            x.0.iter()
                .zip(self.factors())
                .map(|(&c, &d)| ((a as u128 * c as u128) % d as u128) as u64)
                .collect(),
        )
    }

    /// Mixed-radix position of an element in [`FinModule::elements`].
    pub fn element_index(&self, x: &Element) -> usize {
        x.0.iter()
            .zip(self.factors())
            .fold(0usize, |acc, (&c, &d)| acc * d as usize + c as usize)
    }

    /// All elements in mixed-radix order, if the module is small enough.
    pub fn elements(&self) -> Result<Vec<Element>> {
        self.elements_up_to(DEFAULT_ELEMENT_BOUND)
    }

    pub fn elements_up_to(&self, bound: u64) -> Result<Vec<Element>> {
        if self.order() > bound {
            return Err(Error::BoundExceeded {
                what: "element",
                limit: bound as usize,
                reached: self.order() as usize,
            });
        }
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = vec![0u64; self.rank()];
        for _ in 0..self.order() {
            out.push(Element(cur.clone()));
            for i in (0..cur.len()).rev() {
                cur[i] += 1;
                if cur[i] < self.factors()[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
        Ok(out)
    }

    pub fn zero(&self) -> Submodule {
        Submodule::from_hnf(self.clone(), self.lattice_diag())
    }

    pub fn full(&self) -> Submodule {
        Submodule::from_hnf(self.clone(), Hnf::scalar(self.rank(), 1))
    }

    /// Smallest submodule containing `gens`.
    pub fn span(&self, gens: &[Element]) -> Result<Submodule> {
        let mut h = self.lattice_diag();
        for g in gens {
            if g.0.len() != self.rank() || g.0.iter().zip(self.factors()).any(|(&c, &d)| c >= d) {
                return Err(Error::ForeignElement(g.0.clone()));
            }
            h.insert(&g.0.iter().map(|&c| c as i64).collect::<Vec<_>>());
        }
        Ok(Submodule::from_hnf(self.clone(), h))
    }

    /// `M/K` together with the projection `M → M/K`.
    pub fn quotient(&self, k: &Submodule) -> Result<(FinModule, ModuleHom)> {
        if k.parent() != self {
            return Err(Error::ParentMismatch);
        }
        let rank = self.rank();
        let a: Vec<i128> = k.hnf.as_slice().iter().map(|&x| x as i128).collect();
        let s = smith(a, rank);
        let kept: Vec<usize> = (0..rank).filter(|&j| s.diag[j] > 1).collect();
        let factors: Vec<u64> = kept.iter().map(|&j| s.diag[j] as u64).collect();
        let q = FinModule::from_invariants(self.ring(), factors);
        let matrix: Vec<Vec<u64>> = (0..rank)
            .map(|i| {
                kept.iter()
                    .map(|&j| s.v[i * rank + j].rem_euclid(s.diag[j]) as u64)
                    .collect()
            })
            .collect();
        let proj = ModuleHom::new(self.clone(), q.clone(), matrix)?;
        Ok((q, proj))
    }

    pub fn identity(&self) -> ModuleHom {
        let matrix = (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| u64::from(i == j)).collect())
            .collect();
        ModuleHom::new(self.clone(), self.clone(), matrix).expect("identity is well defined")
    }

    /// Order of an element.
    pub fn element_order(&self, x: &Element) -> u64 {
        x.0.iter()
            .zip(self.factors())
            .fold(1u64, |acc, (&c, &d)| acc.lcm(&(d / c.gcd(&d))))
    }
}

/// An element of a [`FinModule`] in canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<u64>);

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&c| c as i64).collect()
    }
}

/// A submodule in canonical form. Equality is equality of submodules.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    parent: FinModule,
    hnf: Hnf,
    order: u64,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule(order {}, gens {:?})", self.order, self.gens())
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Order first, then canonical form; parents break remaining ties.
impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.hnf.cmp(&other.hnf))
            .then_with(|| self.parent.cmp(&other.parent))
    }
}

impl Submodule {
    fn from_hnf(parent: FinModule, hnf: Hnf) -> Self {
        let order = parent.order() / hnf.index();
        Submodule { parent, hnf, order }
    }

    pub fn parent(&self) -> &FinModule {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1
    }

    pub fn is_full(&self) -> bool {
        self.order == self.parent.order()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_full()
    }

    /// Canonical matrix, row-major.
    pub fn canonical_form(&self) -> &[i64] {
        self.hnf.as_slice()
    }

    /// Canonical generators: the normal-form rows reduced into the module,
    /// zero rows dropped.
    pub fn gens(&self) -> Vec<Vec<u64>> {
        (0..self.hnf.dim())
            .map(|i| {
                self.hnf
                    .row(i)
                    .iter()
                    .zip(self.parent.factors())
                    .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
                    .collect::<Vec<_>>()
            })
            .filter(|row| row.iter().any(|&c| c != 0))
            .collect()
    }

    pub fn gen_elements(&self) -> Vec<Element> {
        self.gens().into_iter().map(Element).collect()
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.0.len() == self.parent.rank() && self.hnf.contains(&x.as_i64())
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.parent == other.parent
            && other.order.is_multiple_of(self.order)
            && (0..self.hnf.dim()).all(|i| other.hnf.contains(self.hnf.row(i)))
    }

    fn check_parent(&self, other: &Submodule) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_parent(other)?;
        Ok(Submodule::from_hnf(
            self.parent.clone(),
            self.hnf.sum(&other.hnf),
        ))
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_parent(other)?;
        let e = self.parent.exponent();
        Ok(Submodule::from_hnf(
            self.parent.clone(),
            self.hnf.intersect(&other.hnf, e),
        ))
    }

    /// `aN`.
    pub fn scale(&self, a: u64) -> Submodule {
        let a = (a % self.parent.modulus()) as i128;
        let mut h = self.parent.lattice_diag();
        let k = self.hnf.dim();
        let mut v = vec![0i64; k];
        for i in 0..k {
            for (j, slot) in v.iter_mut().enumerate() {
                let d = self.parent.factors()[j] as i128;
                *slot = (a * self.hnf.row(i)[j] as i128).rem_euclid(d) as i64;
            }
            h.insert(&v);
        }
        Submodule::from_hnf(self.parent.clone(), h)
    }

    /// `(N :_M c) = {m : cm ∈ N}`.
    pub fn colon_scalar(&self, c: u64) -> Submodule {
        let k = self.parent.rank();
        let c = (c % self.parent.modulus()) as i64;
        let mut f = vec![0i64; k * k];
        for i in 0..k {
            f[i * k + i] = c;
        }
        let e = self.parent.exponent();
        Submodule::from_hnf(self.parent.clone(), Hnf::preimage(k, &f, &self.hnf, e, e))
    }

    /// `(N :_M I) = {m : Im ⊆ N}`.
    pub fn colon(&self, ideal: &Ideal) -> Result<Submodule> {
        if ideal.ring() != self.parent.ring() {
            return Err(Error::RingMismatch {
                left: self.parent.modulus(),
                right: ideal.ring().modulus(),
            });
        }
        Ok(self.colon_scalar(ideal.generator()))
    }

    /// Exponent of the submodule (1 for zero).
    pub fn exponent(&self) -> u64 {
        self.gen_elements()
            .iter()
            .fold(1u64, |acc, x| acc.lcm(&self.parent.element_order(x)))
    }

    /// `Ann_R(N)`, generated by the exponent of `N`.
    pub fn annihilator(&self) -> Ideal {
        Ideal::new(self.parent.ring(), self.exponent()).expect("exponent divides the ring modulus")
    }

    /// `C(NK) = (0 :_M Ann(N)·Ann(K))`.
    pub fn coproduct(&self, other: &Submodule) -> Result<Submodule> {
        self.check_parent(other)?;
        let ideal = self.annihilator().product(&other.annihilator())?;
        self.parent.zero().colon(&ideal)
    }

    /// `C(N^t) = (0 :_M Ann(N)^t)`.
    pub fn coproduct_power(&self, t: u32) -> Result<Submodule> {
        if t == 0 {
            return Err(Error::ZeroPower);
        }
        self.parent.zero().colon(&self.annihilator().power(t))
    }

    /// Elements of the submodule, in mixed-radix order of the parent.
    pub fn elements(&self) -> Result<Vec<Element>> {
        self.elements_up_to(DEFAULT_ELEMENT_BOUND)
    }

    pub fn elements_up_to(&self, bound: u64) -> Result<Vec<Element>> {
        if self.order > bound {
            return Err(Error::BoundExceeded {
                what: "element",
                limit: bound as usize,
                reached: self.order as usize,
            });
        }
        // Σ c_i H_i with 0 <= c_i < d_i / h_ii is a transversal.
        let k = self.hnf.dim();
        let d = self.parent.factors();
        let ranges: Vec<u64> = (0..k).map(|i| d[i] / self.hnf.pivot(i) as u64).collect();
        let mut out = Vec::with_capacity(self.order as usize);
        let mut c = vec![0u64; k];
        for _ in 0..self.order {
            let mut x = vec![0i64; k];
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    for (j, slot) in x.iter_mut().enumerate() {
                        *slot += ci as i64 * self.hnf.row(i)[j];
                    }
                }
            }
            out.push(self.parent.element_reduced(&x).expect("same rank"));
            for i in (0..k).rev() {
                c[i] += 1;
                if c[i] < ranges[i] {
                    break;
                }
                c[i] = 0;
            }
        }
        out.sort();
        Ok(out)
    }

    /// The submodule as an abstract module, with its inclusion map.
    pub fn to_module(&self) -> (FinModule, ModuleHom) {
        let k = self.parent.rank();
        let d = self.parent.factors();
        let rel = self.hnf.relations(d);
        let s = smith(rel, k);
        let kept: Vec<usize> = (0..k).filter(|&j| s.diag[j] > 1).collect();
        let factors: Vec<u64> = kept.iter().map(|&j| s.diag[j] as u64).collect();
        let module = FinModule::from_invariants(self.parent.ring(), factors);
        let matrix = kept
            .iter()
            .map(|&j| {
                (0..k)
                    .map(|col| {
                        let v: i128 = (0..k)
                            .map(|l| s.v_inv[j * k + l] * self.hnf.row(l)[col] as i128)
                            .sum();
                        v.rem_euclid(d[col] as i128) as u64
                    })
                    .collect()
            })
            .collect();
        let inclusion = ModuleHom::new(module.clone(), self.parent.clone(), matrix)
            .expect("inclusion is well defined");
        debug_assert!(inclusion.is_injective());
        (module, inclusion)
    }
}

/// A module homomorphism given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    source: FinModule,
    target: FinModule,
    matrix: Vec<Vec<u64>>,
    injective: bool,
}

impl ModuleHom {
    /// Validate that `d_i · matrix[i] = 0` in the target.
    pub fn new(source: FinModule, target: FinModule, matrix: Vec<Vec<u64>>) -> Result<Self> {
        if matrix.len() != source.rank() {
            return Err(Error::IllDefinedHom(format!(
                "{} rows for {} source generators",
                matrix.len(),
                source.rank()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            let image = target.element(row).map_err(|_| {
                Error::IllDefinedHom(format!("row {i} is not an element of the target"))
            })?;
            let killed = target.scale_element(source.factors()[i], &image);
            if killed != target.zero_element() {
                return Err(Error::IllDefinedHom(format!(
                    "{} times image of generator {i} is {:?}, not zero",
                    source.factors()[i],
                    killed.coords()
                )));
            }
        }
        let mut hom = ModuleHom {
            source,
            target,
            matrix,
            injective: false,
        };
        hom.injective = hom.kernel().is_zero();
        Ok(hom)
    }

    pub fn source(&self) -> &FinModule {
        &self.source
    }

    pub fn target(&self) -> &FinModule {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut acc = self.target.zero_element();
        for (c, row) in x.coords().iter().zip(&self.matrix) {
            let img = self.target.scale_element(*c, &Element(row.clone()));
            acc = self.target.add(&acc, &img);
        }
        acc
    }

    fn flat_matrix(&self) -> Vec<i64> {
        self.matrix
            .iter()
            .flat_map(|row| row.iter().map(|&c| c as i64))
            .collect()
    }

    pub fn image(&self, n: &Submodule) -> Result<Submodule> {
        if n.parent() != &self.source {
            return Err(Error::ParentMismatch);
        }
        let gens: Vec<Element> = n.gen_elements().iter().map(|x| self.apply(x)).collect();
        self.target.span(&gens)
    }

    pub fn preimage(&self, n: &Submodule) -> Result<Submodule> {
        if n.parent() != &self.target {
            return Err(Error::ParentMismatch);
        }
        let k = self.source.rank();
        let te = self.target.exponent();
        let scale = self.source.exponent().lcm(&te);
        let h = Hnf::preimage(k, &self.flat_matrix(), &n.hnf, te, scale);
        Ok(Submodule::from_hnf(self.source.clone(), h))
    }

    pub fn kernel(&self) -> Submodule {
        self.preimage(&self.target.zero()).expect("target zero")
    }

    pub fn image_of_source(&self) -> Submodule {
        self.image(&self.source.full()).expect("source full")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ring: Option<u64>, f: &[u64]) -> FinModule {
        FinModule::new(ring, f).unwrap()
    }

    fn el(m: &FinModule, c: &[u64]) -> Element {
        m.element(c).unwrap()
    }

    fn cyc(n: u64, gen: u64) -> Submodule {
        let z = m(None, &[n]);
        z.span(&[el(&z, &[gen])]).unwrap()
    }

    /// Closure of a generating set under addition.
    fn closure(m: &FinModule, gens: &[Element]) -> Vec<Element> {
        let mut set = vec![m.zero_element()];
        let mut i = 0;
        while i < set.len() {
            for g in gens {
                let y = m.add(&set[i], g);
                if !set.contains(&y) {
                    set.push(y);
                }
            }
            i += 1;
        }
        set.sort();
        set
    }

    #[test]
    fn make_module_examples() {
        let a = m(None, &[2, 3]);
        assert_eq!(a.factors(), &[6]);
        assert_eq!(a.modulus(), 6);
        let b = m(None, &[2, 2]);
        assert_eq!(b.factors(), &[2, 2]);
        assert_eq!(b.modulus(), 2);
        let c = m(None, &[4, 6]);
        assert_eq!(c.factors(), &[2, 12]);
        assert_eq!(c.modulus(), 12);
        assert_eq!(FinModule::new(None, &[1]), Err(Error::InvalidFactor(1)));
        assert_eq!(
            FinModule::new(Some(10), &[4]),
            Err(Error::ExponentMismatch {
                exponent: 4,
                modulus: 10
            })
        );
        let zero = m(None, &[]);
        assert_eq!(zero.order(), 1);
        assert_eq!(zero.modulus(), 1);
    }

    #[test]
    fn span_examples() {
        let z6 = m(None, &[6]);
        let s = z6.span(&[el(&z6, &[2])]).unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(
            s.elements().unwrap(),
            vec![el(&z6, &[0]), el(&z6, &[2]), el(&z6, &[4])]
        );
        assert!(z6.span(&[]).unwrap().is_zero());
        let big = m(Some(12), &[2, 12]);
        let g = el(&big, &[1, 3]);
        let s = big.span(std::slice::from_ref(&g)).unwrap();
        assert_eq!(s.order(), closure(&big, &[g]).len() as u64);
        assert_eq!(s.order(), 4);
        assert!(z6.span(&[Element(vec![7])]).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let z6 = m(None, &[6]);
        assert_eq!(z6.full().annihilator().generator(), 6);
        assert_eq!(cyc(6, 2).annihilator().generator(), 3);
        assert_eq!(z6.zero().annihilator().generator(), 1);
    }

    #[test]
    fn scalar_image_examples() {
        let z6 = m(None, &[6]);
        assert_eq!(z6.full().scale(2), cyc(6, 2));
        assert!(z6.full().scale(0).is_zero());
        let mm = m(None, &[6, 10]);
        // Invariant factors (2, 30): Z6 ⊕ Z10 ≅ Z2 ⊕ Z30.
        assert_eq!(mm.factors(), &[2, 30]);
        let img = mm.full().scale(10);
        // 10·(Z6 ⊕ Z10) = 4·Z6 ⊕ 0 ≅ Z3.
        assert_eq!(img.order(), 3);
        let expected: Vec<Element> = mm
            .elements()
            .unwrap()
            .iter()
            .map(|x| mm.scale_element(10, x))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(img.elements().unwrap(), expected);
    }

    #[test]
    fn colon_examples() {
        let z12 = m(None, &[12]);
        let two = Ideal::new(z12.ring(), 2).unwrap();
        assert_eq!(z12.zero().colon(&two).unwrap(), cyc(12, 6));
        let n = cyc(12, 4);
        assert_eq!(n.colon(&Ideal::whole(z12.ring())).unwrap(), n);
        let big = m(Some(12), &[2, 12]);
        let four = Ideal::new(big.ring(), 4).unwrap();
        let killed = big.zero().colon(&four).unwrap();
        let scan = big
            .elements()
            .unwrap()
            .into_iter()
            .filter(|x| big.scale_element(4, x) == big.zero_element())
            .count();
        assert_eq!(killed.order(), scan as u64);
        assert_eq!(killed.order(), 8);
        let other = Ideal::new(RingSpec::modular(6).unwrap(), 2).unwrap();
        assert!(z12.zero().colon(&other).is_err());
    }

    #[test]
    fn sum_intersect_examples() {
        let z6 = m(None, &[6]);
        assert_eq!(cyc(6, 2).sum(&cyc(6, 3)).unwrap(), z6.full());
        let n = cyc(12, 4);
        assert_eq!(n.intersect(&n).unwrap(), n);
        assert_eq!(cyc(12, 3).intersect(&cyc(12, 2)).unwrap(), cyc(12, 6));
        assert_eq!(cyc(12, 3).sum(&cyc(6, 3)), Err(Error::ParentMismatch));
    }

    #[test]
    fn coproduct_examples() {
        let z12 = m(None, &[12]);
        let n = cyc(12, 6);
        assert_eq!(n.coproduct(&n).unwrap(), cyc(12, 3));
        assert_eq!(n.coproduct(&z12.full()).unwrap(), z12.full());
        assert_eq!(n.coproduct_power(1).unwrap(), n);
        assert_eq!(n.coproduct_power(0), Err(Error::ZeroPower));
        let v = m(None, &[2, 2]);
        let line = v.span(&[el(&v, &[1, 0])]).unwrap();
        let closed = line.coproduct_power(1).unwrap();
        assert!(line.is_subset(&closed));
        assert_eq!(closed, v.full());
    }

    #[test]
    fn quotient_examples() {
        let z12 = m(None, &[12]);
        let (q, proj) = z12.quotient(&cyc(12, 6)).unwrap();
        assert_eq!(q.factors(), &[6]);
        assert_eq!(proj.kernel(), cyc(12, 6));
        let (q, proj) = z12.quotient(&z12.zero()).unwrap();
        assert_eq!(q.factors(), z12.factors());
        assert!(proj.is_injective());
        let (q, _) = z12.quotient(&z12.full()).unwrap();
        assert!(q.is_zero());
        assert!(z12.quotient(&cyc(6, 2)).is_err());
    }

    #[test]
    fn hom_examples() {
        let z6 = m(None, &[6]);
        let sub = cyc(6, 2);
        let (abs, inc) = sub.to_module();
        assert_eq!(abs.factors(), &[3]);
        assert_eq!(inc.image(&abs.full()).unwrap(), sub);
        let double = ModuleHom::new(z6.clone(), z6.clone(), vec![vec![2]]).unwrap();
        assert_eq!(double.preimage(&z6.zero()).unwrap(), cyc(6, 3));
        assert!(!double.is_injective());
        let z2 = m(None, &[2]);
        let z3 = m(None, &[3]);
        assert!(matches!(
            ModuleHom::new(z2, z3, vec![vec![1]]),
            Err(Error::IllDefinedHom(_))
        ));
    }

    #[test]
    fn quotient_correspondence_round_trip() {
        let big = m(None, &[2, 4]);
        let subs = all_subgroups(&big);
        for k in &subs {
            let (q, proj) = big.quotient(k).unwrap();
            let above: Vec<&Submodule> = subs.iter().filter(|s| k.is_subset(s)).collect();
            let qsubs = all_subgroups(&q);
            assert_eq!(above.len(), qsubs.len());
            for s in above {
                let img = proj.image(s).unwrap();
                assert_eq!(&proj.preimage(&img).unwrap(), s);
                assert_eq!(img.order() * k.order(), s.order());
            }
        }
    }

    fn all_subgroups(m: &FinModule) -> Vec<Submodule> {
        let els = m.elements().unwrap();
        let mut out = std::collections::BTreeSet::new();
        for a in &els {
            for b in &els {
                out.insert(m.span(&[a.clone(), b.clone()]).unwrap());
            }
        }
        out.into_iter().collect()
    }
}
