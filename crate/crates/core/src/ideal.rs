//! Ideals of Z and Z/nZ.
//!
//! Every ideal of these rings is principal, so an ideal is stored as its
//! nonnegative canonical generator. In Z/nZ the generator is a divisor of
//! `n`; the zero ideal is generated by `n` itself.
//!
//! Each predicate comes in two flavours: a fast path read off the prime
//! factorization of the generator, and a brute-force decision that
//! quantifies over ring elements of Z/nZ and never factors anything.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The acting ring: symbolic Z (`modulus == 0`) or Z/nZ.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RingSpec {
    modulus: u64,
}

impl RingSpec {
    pub const INTEGERS: RingSpec = RingSpec { modulus: 0 };

    /// Z/nZ for `n >= 1`.
    pub fn modular(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InfiniteRing);
        }
        Ok(RingSpec { modulus: n })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_finite(&self) -> bool {
        self.modulus != 0
    }

    /// Canonical representative of `a` (identity on Z).
    pub fn reduce(&self, a: u64) -> u64 {
        if self.modulus == 0 {
            a
        } else {
            a % self.modulus
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.modulus == 0 {
            a * b
        } else {
            ((a as u128 * b as u128) % self.modulus as u128) as u64
        }
    }

    /// All ideals of a finite ring, ordered by generator.
    pub fn ideals(&self) -> Result<Vec<Ideal>> {
        if !self.is_finite() {
            return Err(Error::InfiniteRing);
        }
        Ok(divisors(self.modulus)
            .into_iter()
            .map(|generator| Ideal {
                generator,
                ring: *self,
            })
            .collect())
    }
}

/// Prime factorization with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    /// Number of distinct primes.
    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    /// Number of primes counted with multiplicity.
    pub fn total_multiplicity(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.0.iter().map(|&(p, _)| p).product()
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Exact factorization by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::FactorZero);
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(Factorization(out))
}

/// Positive divisors of `n >= 1` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Product of the distinct primes dividing `n >= 1`.
pub fn squarefree_kernel(n: u64) -> u64 {
    factorize(n).map(|f| f.radical()).unwrap_or(0)
}

/// How a brute-force decision ranges over ring elements.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Quantifier {
    /// Every residue `0..n`.
    AllElements,
    /// One representative per associate class: the divisors of `n`.
    /// Membership in any ideal of Z/nZ is invariant under multiplication
    /// by units, so this is still exhaustive.
    AssociateClasses,
}

/// A principal ideal `(generator)` of a [`RingSpec`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ideal {
    generator: u64,
    ring: RingSpec,
}

impl Ideal {
    /// The ideal with the given canonical generator.
    pub fn new(ring: RingSpec, generator: u64) -> Result<Self> {
        if ring.is_finite() && (generator == 0 || !ring.modulus.is_multiple_of(generator)) {
            return Err(Error::InvalidIdeal {
                generator,
                modulus: ring.modulus,
            });
        }
        Ok(Ideal { generator, ring })
    }

    /// The ideal generated by an arbitrary ring element.
    pub fn principal(ring: RingSpec, a: u64) -> Self {
        let generator = if ring.is_finite() {
            a.gcd(&ring.modulus)
        } else {
            a
        };
        // gcd(0, n) = n, the zero ideal.
        Ideal { generator, ring }
    }

    pub fn whole(ring: RingSpec) -> Self {
        Ideal { generator: 1, ring }
    }

    pub fn zero(ring: RingSpec) -> Self {
        Ideal {
            generator: ring.modulus,
            ring,
        }
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_proper(&self) -> bool {
        self.generator != 1
    }

    pub fn is_zero(&self) -> bool {
        self.generator == self.ring.modulus
    }

    pub fn contains(&self, a: u64) -> bool {
        let a = self.ring.reduce(a);
        if self.generator == 0 {
            a == 0
        } else {
            a.is_multiple_of(self.generator)
        }
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        self.contains(other.generator)
    }

    pub fn radical(&self) -> Ideal {
        let generator = if self.generator == 0 {
            0
        } else {
            squarefree_kernel(self.generator)
        };
        Ideal {
            generator,
            ring: self.ring,
        }
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.modulus,
                right: other.ring.modulus,
            });
        }
        Ok(())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let raw = self.generator as u128 * other.generator as u128;
        let generator = if self.ring.is_finite() {
            (raw % self.ring.modulus as u128) as u64
        } else {
            u64::try_from(raw).map_err(|_| Error::InvalidIdeal {
                generator: u64::MAX,
                modulus: 0,
            })?
        };
        Ok(Ideal::principal(self.ring, generator))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let generator = if self.generator == 0 || other.generator == 0 {
            0
        } else {
            self.generator.lcm(&other.generator)
        };
        Ok(Ideal {
            generator,
            ring: self.ring,
        })
    }

    pub fn power(&self, t: u32) -> Ideal {
        (1..t).fold(*self, |acc, _| acc.product(self).expect("same ring"))
    }

    fn proper_factorization(&self) -> Result<Option<Factorization>> {
        if !self.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        if self.generator == 0 {
            return Ok(None);
        }
        factorize(self.generator).map(Some)
    }

    /// True iff the quotient ring is an integral domain.
    pub fn is_prime(&self) -> Result<bool> {
        Ok(self
            .proper_factorization()?
            .is_none_or(|f| f.total_multiplicity() == 1))
    }

    pub fn is_primary(&self) -> Result<bool> {
        Ok(self
            .proper_factorization()?
            .is_none_or(|f| f.distinct() == 1))
    }

    /// `p`, `p^2` or `pq` (or zero in Z).
    pub fn is_two_absorbing(&self) -> Result<bool> {
        Ok(self
            .proper_factorization()?
            .is_none_or(|f| f.total_multiplicity() <= 2))
    }

    /// `p^a q^b` with at most two distinct primes (or zero in Z).
    pub fn is_two_absorbing_primary(&self) -> Result<bool> {
        Ok(self
            .proper_factorization()?
            .is_none_or(|f| f.distinct() <= 2))
    }

    pub fn is_prime_brute(&self, q: Quantifier) -> Result<bool> {
        let table = BruteTable::new(self, q)?;
        Ok(table.pairs(|a, b| !table.in_ideal(a * b) || table.in_ideal(a) || table.in_ideal(b)))
    }

    pub fn is_primary_brute(&self, q: Quantifier) -> Result<bool> {
        let table = BruteTable::new(self, q)?;
        Ok(table.pairs(|a, b| !table.in_ideal(a * b) || table.in_ideal(a) || table.in_radical(b)))
    }

    pub fn is_two_absorbing_brute(&self, q: Quantifier) -> Result<bool> {
        let table = BruteTable::new(self, q)?;
        Ok(table.triples(|a, b, c| {
            !table.in_ideal(a * b * c)
                || table.in_ideal(a * b)
                || table.in_ideal(a * c)
                || table.in_ideal(b * c)
        }))
    }

    pub fn is_two_absorbing_primary_brute(&self, q: Quantifier) -> Result<bool> {
        let table = BruteTable::new(self, q)?;
        Ok(table.triples(|a, b, c| {
            !table.in_ideal(a * b * c)
                || table.in_ideal(a * b)
                || table.in_radical(a * c)
                || table.in_radical(b * c)
        }))
    }

    /// `{a : a^t ∈ I for some t}` found by scanning powers.
    pub fn radical_brute(&self) -> Result<Ideal> {
        if !self.ring.is_finite() {
            return Err(Error::InfiniteRing);
        }
        let n = self.ring.modulus;
        let generator = (0..n)
            .filter(|&a| nilpotent_mod(self, a))
            .fold(n, |g, a| g.gcd(&a));
        Ok(Ideal {
            generator,
            ring: self.ring,
        })
    }
}

fn nilpotent_mod(ideal: &Ideal, a: u64) -> bool {
    let n = ideal.ring.modulus;
    let bound = 64 - n.leading_zeros();
    let mut x = a % n;
    for _ in 0..bound.max(1) {
        if ideal.contains(x) {
            return true;
        }
        x = ideal.ring.mul(x, a);
    }
    ideal.contains(x)
}

/// Membership tables of `I` and `√I` indexed by residue, plus the list of
/// elements a brute-force quantifier ranges over.
struct BruteTable {
    n: u64,
    domain: Vec<u64>,
    ideal: Vec<bool>,
    radical: Vec<bool>,
}

impl BruteTable {
    fn new(ideal: &Ideal, q: Quantifier) -> Result<Self> {
        if !ideal.ring.is_finite() {
            return Err(Error::InfiniteRing);
        }
        if !ideal.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let n = ideal.ring.modulus;
        let domain = match q {
            Quantifier::AllElements => (0..n).collect(),
            Quantifier::AssociateClasses => divisors(n),
        };
        Ok(BruteTable {
            n,
            domain,
            ideal: (0..n).map(|a| ideal.contains(a)).collect(),
            radical: (0..n).map(|a| nilpotent_mod(ideal, a)).collect(),
        })
    }

    fn in_ideal(&self, a: u64) -> bool {
        self.ideal[(a % self.n) as usize]
    }

    fn in_radical(&self, a: u64) -> bool {
        self.radical[(a % self.n) as usize]
    }

    fn pairs(&self, ok: impl Fn(u64, u64) -> bool) -> bool {
        let n = self.n;
        self.domain
            .iter()
            .all(|&a| self.domain.iter().all(|&b| ok(a % n, b % n)))
    }

    /// Arguments are pre-reduced so products of three fit in a u64 for
    /// every modulus up to 2^21.
    fn triples(&self, ok: impl Fn(u64, u64, u64) -> bool) -> bool {
        let n = self.n;
        self.domain.iter().all(|&a| {
            self.domain
                .iter()
                .all(|&b| self.domain.iter().all(|&c| ok(a % n, b % n, c % n)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::INTEGERS
    }

    fn zn(n: u64) -> RingSpec {
        RingSpec::modular(n).unwrap()
    }

    fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
        let top = n;
        let mut out: Vec<(u64, u32)> = Vec::new();
        for p in 2..=top {
            while n.is_multiple_of(p) {
                match out.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => out.push((p, 1)),
                }
                n /= p;
            }
        }
        out
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(factorize(6).unwrap().pairs(), &[(2, 1), (3, 1)]);
        assert_eq!(
            factorize(360).unwrap().pairs(),
            trial_division(360).as_slice()
        );
        assert_eq!(factorize(360).unwrap().pairs(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(0), Err(Error::FactorZero));
        for n in 1..2000 {
            assert_eq!(factorize(n).unwrap().pairs(), trial_division(n).as_slice());
            assert_eq!(factorize(n).unwrap().value(), n);
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(Ideal::new(z(), 12).unwrap().radical().generator(), 6);
        assert_eq!(Ideal::whole(z()).radical().generator(), 1);
        assert_eq!(Ideal::whole(zn(12)).radical().generator(), 1);
        let zero = Ideal::zero(zn(12));
        assert_eq!(zero.radical().generator(), 6);
        assert_eq!(zero.radical_brute().unwrap().generator(), 6);
        assert_eq!(Ideal::new(z(), 0).unwrap().radical().generator(), 0);
    }

    #[test]
    fn prime_and_primary_examples() {
        assert!(Ideal::new(z(), 3).unwrap().is_prime().unwrap());
        assert!(Ideal::new(z(), 0).unwrap().is_prime().unwrap());
        let six = Ideal::new(zn(12), 6).unwrap();
        assert!(!six.is_prime().unwrap());
        assert!(!six.is_prime_brute(Quantifier::AllElements).unwrap());

        assert!(Ideal::new(z(), 8).unwrap().is_primary().unwrap());
        assert!(!Ideal::new(z(), 6).unwrap().is_primary().unwrap());
        let four = Ideal::new(zn(12), 4).unwrap();
        assert!(four.is_primary_brute(Quantifier::AllElements).unwrap());
        assert!(four.is_primary().unwrap());
    }

    #[test]
    fn two_absorbing_examples() {
        assert!(Ideal::new(z(), 6).unwrap().is_two_absorbing().unwrap());
        // In Z/6Z the zero ideal plays the role of (6) in Z.
        assert!(Ideal::zero(zn(6))
            .is_two_absorbing_brute(Quantifier::AllElements)
            .unwrap());
        assert!(!Ideal::new(z(), 12).unwrap().is_two_absorbing().unwrap());
        assert!(!Ideal::zero(zn(12))
            .is_two_absorbing_brute(Quantifier::AllElements)
            .unwrap());
        assert_eq!(
            Ideal::whole(z()).is_two_absorbing(),
            Err(Error::ImproperIdeal)
        );
        assert_eq!(
            Ideal::whole(zn(5)).is_two_absorbing_brute(Quantifier::AllElements),
            Err(Error::ImproperIdeal)
        );
    }

    #[test]
    fn two_absorbing_primary_examples() {
        assert!(Ideal::new(z(), 12)
            .unwrap()
            .is_two_absorbing_primary()
            .unwrap());
        assert!(Ideal::zero(zn(12))
            .is_two_absorbing_primary_brute(Quantifier::AllElements)
            .unwrap());
        assert!(!Ideal::new(z(), 30)
            .unwrap()
            .is_two_absorbing_primary()
            .unwrap());
        assert!(!Ideal::zero(zn(30))
            .is_two_absorbing_primary_brute(Quantifier::AllElements)
            .unwrap());
        for (p, k) in [(2u64, 5u32), (3, 3), (7, 2), (13, 1)] {
            let ideal = Ideal::new(z(), p.pow(k)).unwrap();
            assert!(ideal.is_two_absorbing_primary().unwrap());
        }
        assert_eq!(
            Ideal::zero(z()).is_prime_brute(Quantifier::AllElements),
            Err(Error::InfiniteRing)
        );
    }

    #[test]
    fn product_examples() {
        let i = Ideal::new(z(), 2).unwrap();
        let j = Ideal::new(z(), 3).unwrap();
        assert_eq!(i.product(&j).unwrap().generator(), 6);
        let two = Ideal::new(zn(12), 2).unwrap();
        assert_eq!(two.product(&two).unwrap().generator(), 4);
        let four = Ideal::new(zn(12), 4).unwrap();
        let six = Ideal::new(zn(12), 6).unwrap();
        let prod = four.product(&six).unwrap();
        assert_eq!(prod.generator(), 12);
        assert!(prod.is_zero());
        assert_eq!(
            two.product(&i),
            Err(Error::RingMismatch { left: 12, right: 0 })
        );
    }

    #[test]
    fn invalid_generators_rejected() {
        assert!(Ideal::new(zn(12), 5).is_err());
        assert!(Ideal::new(zn(12), 0).is_err());
        assert_eq!(Ideal::principal(zn(12), 0).generator(), 12);
        assert_eq!(Ideal::principal(zn(12), 8).generator(), 4);
    }

    #[test]
    fn full_and_associate_quantifiers_agree() {
        for n in 2..=40u64 {
            for ideal in zn(n).ideals().unwrap().into_iter().filter(Ideal::is_proper) {
                let full = Quantifier::AllElements;
                let assoc = Quantifier::AssociateClasses;
                assert_eq!(ideal.is_prime_brute(full), ideal.is_prime_brute(assoc));
                assert_eq!(ideal.is_primary_brute(full), ideal.is_primary_brute(assoc));
                assert_eq!(
                    ideal.is_two_absorbing_brute(full),
                    ideal.is_two_absorbing_brute(assoc)
                );
                assert_eq!(
                    ideal.is_two_absorbing_primary_brute(full),
                    ideal.is_two_absorbing_primary_brute(assoc)
                );
            }
        }
    }

    #[test]
    fn implication_chain() {
        for n in 2..=360u64 {
            for ideal in zn(n).ideals().unwrap().into_iter().filter(Ideal::is_proper) {
                let prime = ideal.is_prime().unwrap();
                let primary = ideal.is_primary().unwrap();
                let two_abs = ideal.is_two_absorbing().unwrap();
                let two_abs_primary = ideal.is_two_absorbing_primary().unwrap();
                assert!(!prime || primary);
                assert!(!primary || two_abs_primary);
                assert!(!prime || two_abs);
                assert!(!two_abs || two_abs_primary);
            }
        }
    }

    #[test]
    fn radical_properties() {
        for n in 1..=200u64 {
            let ring = zn(n);
            let ideals = ring.ideals().unwrap();
            for i in &ideals {
                assert_eq!(i.radical().radical(), i.radical());
                assert_eq!(i.radical(), i.radical_brute().unwrap());
                for j in &ideals {
                    let prod = i.product(j).unwrap().radical();
                    let meet = i.intersection(j).unwrap().radical();
                    assert_eq!(prod, meet, "n={n} i={i:?} j={j:?}");
                }
            }
        }
    }
}
