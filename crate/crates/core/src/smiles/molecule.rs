//! The attributed molecular graph produced by the parser.

use super::element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BondOrder {
    Single,
    Double,
    Triple,
    Aromatic,
}

impl BondOrder {
    /// Bond order in half units: single 2, double 4, triple 6, aromatic 3.
    /// Valence sums use these so the "aromatic counts 1.5, floor the total"
    /// convention stays in integer arithmetic.
    pub fn half_units(self) -> u32 {
        match self {
            BondOrder::Single => 2,
            BondOrder::Double => 4,
            BondOrder::Triple => 6,
            BondOrder::Aromatic => 3,
        }
    }

    /// Stable numeric code used by fingerprint hashing.
    pub fn code(self) -> u64 {
        match self {
            BondOrder::Single => 1,
            BondOrder::Double => 2,
            BondOrder::Triple => 3,
            BondOrder::Aromatic => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    /// Atomic number.
    pub element: u8,
    pub aromatic: bool,
    pub formal_charge: i8,
    /// Hydrogen count written in a bracket atom; `None` for organic-subset
    /// atoms, whose hydrogens are implicit.
    pub explicit_h: Option<u8>,
    pub isotope: Option<u16>,
    /// Position in `Molecule::atoms`.
    pub index: usize,
}

impl Atom {
    pub fn symbol(&self) -> &'static str {
        element::symbol(self.element)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub order: BondOrder,
}

impl Bond {
    pub fn other(&self, atom: usize) -> usize {
        if atom == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// Parsed molecule: atoms, bonds and derived per-atom attributes.
#[derive(Debug, Clone)]
pub struct Molecule {
    pub atoms: Vec<Atom>,
    pub bonds: Vec<Bond>,
    /// The SMILES string this molecule was parsed from.
    pub source: String,
    adjacency: Vec<Vec<(usize, usize)>>,
    in_ring: Vec<bool>,
    implicit_h: Vec<u8>,
}

impl Molecule {
    /// Assemble a molecule from parts and compute derived attributes.
    /// Only valence-legal graphs should reach this point; the parser checks
    /// before constructing.
    pub(crate) fn assemble(atoms: Vec<Atom>, bonds: Vec<Bond>, source: String) -> Molecule {
        let n = atoms.len();
        let mut adjacency = vec![Vec::new(); n];
        for (bi, bond) in bonds.iter().enumerate() {
            adjacency[bond.a].push((bond.b, bi));
            adjacency[bond.b].push((bond.a, bi));
        }
        let in_ring = ring_membership(n, &adjacency);
        let implicit_h = atoms
            .iter()
            .map(|atom| {
                if atom.explicit_h.is_some() {
                    0
                } else {
                    let sum: u32 = adjacency[atom.index]
                        .iter()
                        .map(|&(_, bi)| bonds[bi].order.half_units())
                        .sum();
                    implicit_hydrogens(atom.element, sum / 2)
                }
            })
            .collect();
        Molecule {
            atoms,
            bonds,
            source,
            adjacency,
            in_ring,
            implicit_h,
        }
    }

    /// Neighbors of an atom as `(neighbor index, bond index)` pairs, in
    /// source order.
    pub fn neighbors(&self, atom: usize) -> &[(usize, usize)] {
        &self.adjacency[atom]
    }

    pub fn degree(&self, atom: usize) -> usize {
        self.adjacency[atom].len()
    }

    /// Whether the atom lies on any cycle.
    pub fn in_ring(&self, atom: usize) -> bool {
        self.in_ring[atom]
    }

    /// Hydrogen count: the bracket-specified count if present, otherwise the
    /// implicit count from the valence convention.
    pub fn hydrogen_count(&self, atom: usize) -> u8 {
        self.atoms[atom].explicit_h.unwrap_or(self.implicit_h[atom])
    }

    pub fn ring_bond_count(&self) -> usize {
        self.bonds.len() + connected_components(self.atoms.len(), &self.adjacency) - self.atoms.len()
    }
}

/// Ring membership via iterative leaf stripping: atoms remaining in the
/// 2-core are exactly the atoms on cycles.
fn ring_membership(n: usize, adjacency: &[Vec<(usize, usize)>]) -> Vec<bool> {
    let mut degree: Vec<usize> = adjacency.iter().map(|a| a.len()).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&i| degree[i] <= 1).collect();
    while let Some(i) = queue.pop() {
        if !alive[i] {
            continue;
        }
        alive[i] = false;
        for &(j, _) in &adjacency[i] {
            if alive[j] {
                degree[j] -= 1;
                if degree[j] <= 1 {
                    queue.push(j);
                }
            }
        }
    }
    alive
}

fn connected_components(n: usize, adjacency: &[Vec<(usize, usize)>]) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(i) = stack.pop() {
            for &(j, _) in &adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    count
}

/// Implicit hydrogens for an organic-subset atom: the smallest allowed
/// valence at or above the floored bond-order sum, minus that sum. Elements
/// without a valence entry get zero.
fn implicit_hydrogens(atomic_number: u8, floored_sum: u32) -> u8 {
    match element::allowed_valences(atomic_number) {
        Some(valences) => valences
            .iter()
            .copied()
            .find(|&v| u32::from(v) >= floored_sum)
            .map(|v| (u32::from(v) - floored_sum) as u8)
            .unwrap_or(0),
        None => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain_atom(element: u8, index: usize) -> Atom {
        Atom {
            element,
            aromatic: false,
            formal_charge: 0,
            explicit_h: None,
            isotope: None,
            index,
        }
    }

    #[test]
    fn ring_membership_cycle_with_tail() {
        // triangle 0-1-2 with a tail 2-3
        let atoms: Vec<Atom> = (0..4).map(|i| plain_atom(6, i)).collect();
        let bonds = vec![
            Bond { a: 0, b: 1, order: BondOrder::Single },
            Bond { a: 1, b: 2, order: BondOrder::Single },
            Bond { a: 0, b: 2, order: BondOrder::Single },
            Bond { a: 2, b: 3, order: BondOrder::Single },
        ];
        let m = Molecule::assemble(atoms, bonds, "C1CC1C".into());
        assert!(m.in_ring(0) && m.in_ring(1) && m.in_ring(2));
        assert!(!m.in_ring(3));
        assert_eq!(m.ring_bond_count(), 1);
    }

    #[test]
    fn implicit_hydrogen_convention() {
        assert_eq!(implicit_hydrogens(6, 4), 0); // saturated carbon
        assert_eq!(implicit_hydrogens(6, 1), 3); // CH3-
        assert_eq!(implicit_hydrogens(7, 4), 1); // N with floored sum 4 -> valence 5
        assert_eq!(implicit_hydrogens(16, 3), 1); // S with floored sum 3 -> valence 4
        assert_eq!(implicit_hydrogens(8, 2), 0);
        assert_eq!(implicit_hydrogens(2, 0), 0); // He: no table entry
    }
}
