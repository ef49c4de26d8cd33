//! The complete submodule lattice of a finite module.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::classify::is_second;
use crate::error::{Error, Result};
use crate::ideal::factorize;
use crate::module::{FinModule, Submodule, DEFAULT_ELEMENT_BOUND};

/// Size limits for enumeration.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_elements: u64,
    pub max_lattice: usize,
}

pub const DEFAULT_LATTICE_BOUND: usize = 100_000;

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_elements: DEFAULT_ELEMENT_BOUND,
            max_lattice: DEFAULT_LATTICE_BOUND,
        }
    }
}

/// Per-node flags computed during enumeration.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeFlags {
    pub completely_irreducible: bool,
    pub prime: bool,
    pub second: bool,
    pub minimal: bool,
}

/// Every submodule of a module, ordered by (order, canonical form).
///
/// Index 0 is always the zero submodule and the last index the whole
/// module.
pub struct SubLattice {
    module: FinModule,
    nodes: Vec<Submodule>,
    index: HashMap<Submodule, usize>,
    members: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    flags: Vec<NodeFlags>,
}

impl SubLattice {
    pub fn enumerate(module: &FinModule) -> Result<Self> {
        Self::enumerate_with(module, &Bounds::default())
    }

    /// Seeds with all cyclic submodules, then closes under joins with
    /// cyclic submodules until nothing new appears.
    pub fn enumerate_with(module: &FinModule, bounds: &Bounds) -> Result<Self> {
        let elements = module.elements_up_to(bounds.max_elements)?;
        let spans: Vec<Submodule> = elements
            .par_iter()
            .map(|x| module.span(std::slice::from_ref(x)).expect("own element"))
            .collect();
        let mut index: HashMap<Submodule, usize> = HashMap::new();
        let mut nodes: Vec<Submodule> = Vec::new();
        let mut cyclic: Vec<Submodule> = Vec::new();
        for s in spans {
            if !index.contains_key(&s) {
                index.insert(s.clone(), nodes.len());
                nodes.push(s.clone());
                cyclic.push(s);
            }
        }
        let too_big = |reached: usize| Error::BoundExceeded {
            what: "lattice",
            limit: bounds.max_lattice,
            reached,
        };
        if nodes.len() > bounds.max_lattice {
            return Err(too_big(nodes.len()));
        }
        let mut frontier: Vec<Submodule> = cyclic.clone();
        while !frontier.is_empty() {
            let mut found: Vec<Submodule> = frontier
                .par_iter()
                .flat_map_iter(|h| {
                    cyclic
                        .iter()
                        .filter(move |c| !c.is_subset(h))
                        .map(move |c| h.sum(c).expect("same parent"))
                })
                .collect();
            found.sort();
            found.dedup();
            frontier.clear();
            for s in found {
                if !index.contains_key(&s) {
                    index.insert(s.clone(), nodes.len());
                    nodes.push(s.clone());
                    frontier.push(s);
                    if nodes.len() > bounds.max_lattice {
                        return Err(too_big(nodes.len()));
                    }
                }
            }
        }
        nodes.sort();
        let index: HashMap<Submodule, usize> = nodes
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        Ok(Self::assemble(module.clone(), nodes, index))
    }

    fn assemble(
        module: FinModule,
        nodes: Vec<Submodule>,
        index: HashMap<Submodule, usize>,
    ) -> Self {
        let size = module.order() as usize;
        let members: Vec<FixedBitSet> = nodes
            .par_iter()
            .map(|s| {
                let mut bits = FixedBitSet::with_capacity(size);
                for x in s.elements_up_to(u64::MAX).expect("bounded by parent") {
                    bits.insert(module.element_index(&x));
                }
                bits
            })
            .collect();
        let count = nodes.len();
        let up: Vec<FixedBitSet> = (0..count)
            .into_par_iter()
            .map(|i| {
                let mut bits = FixedBitSet::with_capacity(count);
                for j in i..count {
                    if nodes[j].order().is_multiple_of(nodes[i].order())
                        && members[i].is_subset(&members[j])
                    {
                        bits.insert(j);
                    }
                }
                bits
            })
            .collect();
        let mut covers = Vec::new();
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                let ratio = nodes[j].order() / nodes[i].order();
                if ratio > 1 && is_prime_number(ratio) {
                    covers.push((i, j));
                }
            }
        }
        let mut lattice = SubLattice {
            module,
            nodes,
            index,
            members,
            up,
            covers,
            flags: Vec::new(),
        };
        lattice.flags = (0..count)
            .into_par_iter()
            .map(|i| lattice.compute_flags(i))
            .collect();
        lattice
    }

    fn compute_flags(&self, i: usize) -> NodeFlags {
        let node = &self.nodes[i];
        let proper = node.is_proper();
        let completely_irreducible = proper && {
            let mut meet = FixedBitSet::with_capacity(self.module.order() as usize);
            meet.insert_range(..);
            for j in self.up[i].ones().filter(|&j| j != i) {
                meet.intersect_with(&self.members[j]);
            }
            meet != self.members[i]
        };
        NodeFlags {
            completely_irreducible,
            prime: proper && is_prime_submodule(node).expect("proper"),
            second: is_second(node),
            minimal: is_prime_number(node.order()),
        }
    }

    pub fn module(&self) -> &FinModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Submodule] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Submodule {
        &self.nodes[i]
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub(crate) fn lookup(&self, s: &Submodule) -> usize {
        self.index_of(s).expect("every submodule is a lattice node")
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn full_index(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn flags(&self, i: usize) -> NodeFlags {
        self.flags[i]
    }

    /// `nodes[i] ⊆ nodes[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Indices of the nodes containing `nodes[i]`, including `i`.
    pub fn supersets(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[i].ones()
    }

    pub fn subsets(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..=j).filter(move |&i| self.up[i].contains(j))
    }

    /// Hasse diagram edges `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.lookup(
            &self.nodes[i]
                .intersect(&self.nodes[j])
                .expect("same parent"),
        )
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.lookup(&self.nodes[i].sum(&self.nodes[j]).expect("same parent"))
    }

    pub fn completely_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.flags[i].completely_irreducible)
            .collect()
    }

    pub fn prime_submodules(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.flags[i].prime).collect()
    }

    pub fn second_submodules(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.flags[i].second).collect()
    }

    pub fn minimal_submodules(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.flags[i].minimal).collect()
    }

    /// Intersection of all prime submodules containing `nodes[i]`, or the
    /// whole module when there are none.
    pub fn m_radical(&self, i: usize) -> usize {
        let mut acc = self.module.full();
        for j in self.supersets(i).filter(|&j| self.flags[j].prime) {
            acc = acc.intersect(&self.nodes[j]).expect("same parent");
        }
        self.lookup(&acc)
    }

    /// Sum of the second submodules contained in `nodes[i]`.
    pub fn second_radical(&self, i: usize) -> usize {
        let mut acc = self.module.zero();
        for j in self.subsets(i).filter(|&j| self.flags[j].second) {
            acc = acc.sum(&self.nodes[j]).expect("same parent");
        }
        self.lookup(&acc)
    }
}

pub(crate) fn is_prime_number(n: u64) -> bool {
    n >= 2
        && factorize(n)
            .map(|f| f.total_multiplicity() == 1)
            .unwrap_or(false)
}

/// `sec(N)` as the socle: the sum over primes `p` of the `p`-torsion of `N`.
pub fn second_radical(n: &Submodule) -> Submodule {
    let m = n.parent();
    let primes: Vec<u64> = factorize(m.modulus())
        .expect("modulus >= 1")
        .primes()
        .collect();
    primes.into_iter().fold(m.zero(), |acc, p| {
        let torsion = n.intersect(&m.zero().colon_scalar(p)).expect("same parent");
        acc.sum(&torsion).expect("same parent")
    })
}

/// `rm ∈ P ⇒ m ∈ P or rM ⊆ P`, decided per scalar: for each `r`, either
/// `rM ⊆ P` or `(P : r) = P`.
pub fn is_prime_submodule(p: &Submodule) -> Result<bool> {
    if !p.is_proper() {
        return Err(Error::ImproperSubmodule);
    }
    let m = p.parent();
    Ok((0..m.modulus()).all(|r| m.full().scale(r).is_subset(p) || p.colon_scalar(r).is_subset(p)))
}

/// The same predicate, quantified over elements.
pub fn is_prime_submodule_elementwise(p: &Submodule) -> Result<bool> {
    if !p.is_proper() {
        return Err(Error::ImproperSubmodule);
    }
    let m = p.parent();
    let elements = m.elements()?;
    Ok((0..m.modulus()).all(|r| {
        let r_in_colon = elements.iter().all(|x| p.contains(&m.scale_element(r, x)));
        r_in_colon
            || elements
                .iter()
                .all(|x| !p.contains(&m.scale_element(r, x)) || p.contains(x))
    }))
}
