//! Atom equivalence classes by iterative neighborhood refinement.

use super::molecule::Molecule;

/// Permutation-invariant atom ranks.
///
/// Seeds each atom with `(element, charge, degree, aromatic)` and refines by
/// replacing every key with `(own rank, sorted neighbor ranks)` until the
/// number of classes stops growing. Atoms in the same structural environment
/// share a rank; ties between distinct environments break by the ordering of
/// those key tuples.
pub fn canonical_ranks(mol: &Molecule) -> Vec<u32> {
    let n = mol.atoms.len();
    if n == 0 {
        return Vec::new();
    }
    let seed_keys: Vec<(u8, i8, usize, bool)> = mol
        .atoms
        .iter()
        .map(|a| (a.element, a.formal_charge, mol.degree(a.index), a.aromatic))
        .collect();
    let mut ranks = assign_ranks(&seed_keys);
    let mut classes = count_classes(&ranks);
    for _ in 0..n {
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|i| {
                let mut nb: Vec<u32> = mol.neighbors(i).iter().map(|&(j, _)| ranks[j]).collect();
                nb.sort_unstable();
                (ranks[i], nb)
            })
            .collect();
        let next = assign_ranks(&keys);
        let next_classes = count_classes(&next);
        if next_classes == classes {
            break;
        }
        ranks = next;
        classes = next_classes;
    }
    ranks
}

fn assign_ranks<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

fn count_classes(ranks: &[u32]) -> usize {
    let mut seen: Vec<u32> = ranks.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::{parse, tokenize};

    fn ranks_of(s: &str) -> Vec<u32> {
        canonical_ranks(&parse(&tokenize(s).unwrap()).unwrap())
    }

    #[test]
    fn symmetric_pair_shares_a_class() {
        let r = ranks_of("CC");
        assert_eq!(r[0], r[1]);
    }

    #[test]
    fn ethanol_separates_into_three_classes() {
        let r = ranks_of("CCO");
        assert_eq!(count_classes(&r), 3);
    }

    #[test]
    fn benzene_is_one_class() {
        let r = ranks_of("c1ccccc1");
        assert_eq!(count_classes(&r), 1);
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn isobutane_two_classes() {
        let r = ranks_of("CC(C)C");
        assert_eq!(count_classes(&r), 2);
    }

    #[test]
    fn refinement_distinguishes_by_environment() {
        // pentane: two terminal C, two next-to-terminal C, one middle C
        let r = ranks_of("CCCCC");
        assert_eq!(count_classes(&r), 3);
        assert_eq!(r[0], r[4]);
        assert_eq!(r[1], r[3]);
        assert_ne!(r[0], r[2]);
    }
}
