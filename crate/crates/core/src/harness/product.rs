use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ideal::factorize;
use crate::module::{FinModule, ModuleHom, Submodule};

/// `M = M₁ × M₂` for a ring split `Z/nZ ≅ Z/n₁Z × Z/n₂Z`.
///
/// `M_i = (0 :_M n_i)` as a submodule of `M`, and as an abstract module
/// over `Z/n_iZ` together with its embedding into `M`.
#[derive(Clone, Debug)]
pub struct ProductDecomposition {
    pub n1: u64,
    pub n2: u64,
    pub part1: Submodule,
    pub part2: Submodule,
    pub m1: FinModule,
    pub m2: FinModule,
    pub embed1: ModuleHom,
    pub embed2: ModuleHom,
}

fn component(m: &FinModule, ni: u64) -> Result<(Submodule, FinModule, ModuleHom)> {
    let part = m.zero().colon_scalar(ni);
    let (abstract_part, inclusion) = part.to_module();
    let over_ni = abstract_part.with_ring(ni)?;
    let embed = ModuleHom::new(over_ni.clone(), m.clone(), inclusion.matrix().to_vec())?;
    Ok((part, over_ni, embed))
}

pub fn product_decompose(m: &FinModule, n1: u64, n2: u64) -> Result<ProductDecomposition> {
    let modulus = m.modulus();
    if n1 < 2 || n2 < 2 || n1.checked_mul(n2) != Some(modulus) || n1.gcd(&n2) != 1 {
        return Err(Error::InvalidSplit { modulus, n1, n2 });
    }
    let (part1, m1, embed1) = component(m, n1)?;
    let (part2, m2, embed2) = component(m, n2)?;
    Ok(ProductDecomposition {
        n1,
        n2,
        part1,
        part2,
        m1,
        m2,
        embed1,
        embed2,
    })
}

impl ProductDecomposition {
    /// `N ↦ (N ∩ M₁, N ∩ M₂)`, as submodules of the abstract factors.
    pub fn split(&self, n: &Submodule) -> Result<(Submodule, Submodule)> {
        let p1 = self.embed1.preimage(&n.intersect(&self.part1)?)?;
        let p2 = self.embed2.preimage(&n.intersect(&self.part2)?)?;
        Ok((p1, p2))
    }

    pub fn join(&self, n1: &Submodule, n2: &Submodule) -> Result<Submodule> {
        self.embed1.image(n1)?.sum(&self.embed2.image(n2)?)
    }
}

/// Unordered coprime splits `n = n₁·n₂` with `1 < n₁ < n₂`.
pub fn coprime_splits(n: u64) -> Vec<(u64, u64)> {
    if n < 2 {
        return Vec::new();
    }
    let powers: Vec<u64> = factorize(n)
        .expect("n >= 1")
        .pairs()
        .iter()
        .map(|&(p, e)| p.pow(e))
        .collect();
    let mut out: Vec<(u64, u64)> = (1..(1u32 << powers.len()) - 1)
        .map(|mask| {
            let n1: u64 = powers
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, q)| q)
                .product();
            (n1, n / n1)
        })
        .filter(|&(n1, n2)| n1 < n2)
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SubLattice;

    #[test]
    fn decompose_examples() {
        let z6 = FinModule::new(None, &[6]).unwrap();
        let d = product_decompose(&z6, 2, 3).unwrap();
        assert_eq!(d.m1.factors(), &[2]);
        assert_eq!(d.m1.modulus(), 2);
        assert_eq!(d.m2.factors(), &[3]);
        let n = z6.span(&[z6.element(&[2]).unwrap()]).unwrap();
        let (p1, p2) = d.split(&n).unwrap();
        assert!(p1.is_zero());
        assert!(p2.is_full());
        let z4 = FinModule::new(None, &[4]).unwrap();
        assert_eq!(
            product_decompose(&z4, 2, 2).unwrap_err(),
            Error::InvalidSplit {
                modulus: 4,
                n1: 2,
                n2: 2
            }
        );
        assert!(product_decompose(&z6, 1, 6).is_err());
    }

    #[test]
    fn splits_are_coprime_and_complete() {
        assert_eq!(coprime_splits(12), vec![(3, 4)]);
        assert_eq!(coprime_splits(30), vec![(2, 15), (3, 10), (5, 6)]);
        assert!(coprime_splits(8).is_empty());
        assert!(coprime_splits(1).is_empty());
    }

    #[test]
    fn split_round_trips_on_every_submodule() {
        for f in [&[6u64][..], &[2, 6], &[2, 30], &[3, 12], &[60]] {
            let m = FinModule::new(None, f).unwrap();
            let lm = SubLattice::enumerate(&m).unwrap();
            for (n1, n2) in coprime_splits(m.modulus()) {
                let d = product_decompose(&m, n1, n2).unwrap();
                let l1 = SubLattice::enumerate(&d.m1).unwrap();
                let l2 = SubLattice::enumerate(&d.m2).unwrap();
                assert_eq!(lm.len(), l1.len() * l2.len(), "{f:?} {n1}x{n2}");
                for n in lm.nodes() {
                    let (p1, p2) = d.split(n).unwrap();
                    assert_eq!(&d.join(&p1, &p2).unwrap(), n);
                }
                for a in l1.nodes() {
                    for b in l2.nodes() {
                        let joined = d.join(a, b).unwrap();
                        assert_eq!(d.split(&joined).unwrap(), (a.clone(), b.clone()));
                    }
                }
            }
        }
    }
}
