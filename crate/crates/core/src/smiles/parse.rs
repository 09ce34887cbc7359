//! Token stream to molecular graph.

use std::collections::{BTreeMap, HashSet};

use super::element;
use super::error::SmilesError;
use super::molecule::{Atom, Bond, BondOrder, Molecule};
use super::token::{Token, TokenKind};

/// Attributes of one parsed atom token.
struct AtomAttrs {
    element: u8,
    aromatic: bool,
    formal_charge: i8,
    explicit_h: Option<u8>,
    isotope: Option<u16>,
}

/// Build the molecular graph from a token stream. Stereo markers (`/`, `\`,
/// `@`, `@@`) are accepted and discarded; aromaticity is taken from lowercase
/// notation as written.
pub fn parse(tokens: &[Token]) -> Result<Molecule, SmilesError> {
    if tokens.is_empty() {
        return Err(SmilesError::EmptyInput);
    }
    let mut atoms: Vec<Atom> = Vec::new();
    let mut bonds: Vec<Bond> = Vec::new();
    let mut bond_pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut prev: Option<usize> = None;
    let mut branch_stack: Vec<usize> = Vec::new();
    let mut pending_bond: Option<(BondOrder, usize)> = None;
    // ring index -> (atom, explicit order, token position)
    let mut open_rings: BTreeMap<u16, (usize, Option<BondOrder>, usize)> = BTreeMap::new();
    let mut saw_dot = false;

    let mut add_bond = |bonds: &mut Vec<Bond>,
                        pairs: &mut HashSet<(usize, usize)>,
                        a: usize,
                        b: usize,
                        order: BondOrder|
     -> Result<(), SmilesError> {
        if a == b {
            return Err(SmilesError::SelfBond { atom: a });
        }
        let key = (a.min(b), a.max(b));
        if !pairs.insert(key) {
            return Err(SmilesError::DuplicateRingBond { a: key.0, b: key.1 });
        }
        bonds.push(Bond { a, b, order });
        Ok(())
    };

    for token in tokens {
        match token.kind {
            TokenKind::AtomOrganic | TokenKind::AtomBracket => {
                let attrs = if token.kind == TokenKind::AtomOrganic {
                    organic_atom(&token.text)
                } else {
                    bracket_atom(&token.text, token.position)?
                };
                let index = atoms.len();
                atoms.push(Atom {
                    element: attrs.element,
                    aromatic: attrs.aromatic,
                    formal_charge: attrs.formal_charge,
                    explicit_h: attrs.explicit_h,
                    isotope: attrs.isotope,
                    index,
                });
                if let Some((order, _)) = pending_bond.take() {
                    match prev {
                        Some(p) => add_bond(&mut bonds, &mut bond_pairs, p, index, order)?,
                        None => {
                            return Err(SmilesError::DanglingBond { position: token.position })
                        }
                    }
                } else if let Some(p) = prev {
                    let order = default_order(&atoms[p], &atoms[index]);
                    add_bond(&mut bonds, &mut bond_pairs, p, index, order)?;
                }
                prev = Some(index);
            }
            TokenKind::Bond => {
                if pending_bond.is_some() {
                    return Err(SmilesError::DanglingBond { position: token.position });
                }
                pending_bond = Some((bond_order(&token.text), token.position));
            }
            TokenKind::BranchOpen => {
                if let Some((_, pos)) = pending_bond {
                    return Err(SmilesError::DanglingBond { position: pos });
                }
                match prev {
                    Some(p) => branch_stack.push(p),
                    None => {
                        return Err(SmilesError::BranchBeforeAtom { position: token.position })
                    }
                }
            }
            TokenKind::BranchClose => {
                if let Some((_, pos)) = pending_bond {
                    return Err(SmilesError::DanglingBond { position: pos });
                }
                match branch_stack.pop() {
                    Some(p) => prev = Some(p),
                    None => {
                        return Err(SmilesError::UnmatchedBranchClose {
                            position: token.position,
                        })
                    }
                }
            }
            TokenKind::RingClosure => {
                let index = token.ring_index().expect("ring token carries an index");
                let here = match prev {
                    Some(p) => p,
                    None => {
                        return Err(SmilesError::InvalidRingClosure {
                            position: token.position,
                        })
                    }
                };
                let explicit = pending_bond.take().map(|(o, _)| o);
                match open_rings.remove(&index) {
                    Some((other, opener_order, _)) => {
                        if other == here {
                            return Err(SmilesError::SelfBond { atom: here });
                        }
                        let order = match (opener_order, explicit) {
                            (Some(a), Some(b)) if a != b => {
                                return Err(SmilesError::ConflictingRingBond { index })
                            }
                            (Some(a), _) => a,
                            (None, Some(b)) => b,
                            (None, None) => default_order(&atoms[other], &atoms[here]),
                        };
                        add_bond(&mut bonds, &mut bond_pairs, other, here, order)?;
                    }
                    None => {
                        open_rings.insert(index, (here, explicit, token.position));
                    }
                }
            }
            TokenKind::Dot => {
                if let Some((_, pos)) = pending_bond {
                    return Err(SmilesError::DanglingBond { position: pos });
                }
                prev = None;
                saw_dot = true;
            }
        }
    }

    if let Some((_, pos)) = pending_bond {
        return Err(SmilesError::DanglingBond { position: pos });
    }
    if !branch_stack.is_empty() {
        return Err(SmilesError::UnclosedBranch);
    }
    if let Some((&index, _)) = open_rings.iter().next() {
        return Err(SmilesError::UnmatchedRingClosure { index });
    }
    if atoms.is_empty() {
        return Err(SmilesError::EmptyInput);
    }

    let source: String = tokens.iter().map(|t| t.text.as_str()).collect();
    let mol = Molecule::assemble(atoms, bonds, source);
    validate_graph(&mol)?;
    debug_assert!(saw_dot || is_connected(&mol));
    Ok(mol)
}

fn default_order(a: &Atom, b: &Atom) -> BondOrder {
    if a.aromatic && b.aromatic {
        BondOrder::Aromatic
    } else {
        BondOrder::Single
    }
}

fn bond_order(text: &str) -> BondOrder {
    match text {
        "=" => BondOrder::Double,
        "#" => BondOrder::Triple,
        ":" => BondOrder::Aromatic,
        // "-", and the stereo markers "/" and "\", are single bonds
        _ => BondOrder::Single,
    }
}

fn organic_atom(text: &str) -> AtomAttrs {
    let aromatic = text.chars().next().unwrap().is_ascii_lowercase();
    let element = if aromatic {
        element::aromatic_symbol(text).expect("tokenizer only emits known aromatic symbols")
    } else {
        element::atomic_number(text).expect("tokenizer only emits known symbols")
    };
    AtomAttrs {
        element,
        aromatic,
        formal_charge: 0,
        explicit_h: None,
        isotope: None,
    }
}

/// Parse the interior of `[...]`: isotope? symbol chirality? hcount? charge? class?
fn bracket_atom(text: &str, position: usize) -> Result<AtomAttrs, SmilesError> {
    let err = || SmilesError::InvalidBracketAtom { position };
    let inner: Vec<char> = text[1..text.len() - 1].chars().collect();
    let mut i = 0usize;

    let mut isotope: Option<u16> = None;
    let start = i;
    while i < inner.len() && inner[i].is_ascii_digit() && i - start < 3 {
        i += 1;
    }
    if i > start {
        let v: u16 = inner[start..i].iter().collect::<String>().parse().map_err(|_| err())?;
        if v == 0 {
            return Err(err());
        }
        isotope = Some(v);
    }

    let (element, aromatic) = parse_bracket_symbol(&inner, &mut i).ok_or_else(err)?;

    // chirality markers parsed and discarded
    while i < inner.len() && inner[i] == '@' {
        i += 1;
    }

    let mut explicit_h: u8 = 0;
    if i < inner.len() && inner[i] == 'H' {
        i += 1;
        let start = i;
        while i < inner.len() && inner[i].is_ascii_digit() {
            i += 1;
        }
        explicit_h = if i > start {
            inner[start..i].iter().collect::<String>().parse().map_err(|_| err())?
        } else {
            1
        };
    }

    let mut formal_charge: i16 = 0;
    if i < inner.len() && (inner[i] == '+' || inner[i] == '-') {
        let sign: i16 = if inner[i] == '+' { 1 } else { -1 };
        let mark = inner[i];
        i += 1;
        let start = i;
        while i < inner.len() && inner[i].is_ascii_digit() {
            i += 1;
        }
        if i > start {
            let mag: i16 = inner[start..i].iter().collect::<String>().parse().map_err(|_| err())?;
            if mag > 15 {
                return Err(err());
            }
            formal_charge = sign * mag;
        } else {
            formal_charge = sign;
            // legacy doubled signs: ++ / --
            while i < inner.len() && inner[i] == mark {
                formal_charge += sign;
                i += 1;
            }
        }
    }

    // atom class parsed and discarded
    if i < inner.len() && inner[i] == ':' {
        i += 1;
        let start = i;
        while i < inner.len() && inner[i].is_ascii_digit() {
            i += 1;
        }
        if i == start {
            return Err(err());
        }
    }

    if i != inner.len() {
        return Err(err());
    }
    Ok(AtomAttrs {
        element,
        aromatic,
        formal_charge: i8::try_from(formal_charge).map_err(|_| err())?,
        explicit_h: Some(explicit_h),
        isotope,
    })
}

fn parse_bracket_symbol(inner: &[char], i: &mut usize) -> Option<(u8, bool)> {
    let rest = &inner[*i..];
    let first = *rest.first()?;
    if first.is_ascii_lowercase() {
        // aromatic symbol, two characters preferred (se, as)
        if rest.len() >= 2 {
            let two: String = rest[..2].iter().collect();
            if let Some(z) = element::aromatic_symbol(&two) {
                *i += 2;
                return Some((z, true));
            }
        }
        let one: String = rest[..1].iter().collect();
        element::aromatic_symbol(&one).map(|z| {
            *i += 1;
            (z, true)
        })
    } else if first.is_ascii_uppercase() {
        if rest.len() >= 2 && rest[1].is_ascii_lowercase() {
            let two: String = rest[..2].iter().collect();
            if let Some(z) = element::atomic_number(&two) {
                *i += 2;
                return Some((z, false));
            }
        }
        let one: String = rest[..1].iter().collect();
        element::atomic_number(&one).map(|z| {
            *i += 1;
            (z, false)
        })
    } else {
        None
    }
}

/// Post-parse graph checks: valence and aromatic ring membership.
fn validate_graph(mol: &Molecule) -> Result<(), SmilesError> {
    for atom in &mol.atoms {
        if atom.aromatic && !mol.in_ring(atom.index) {
            return Err(SmilesError::AromaticAtomOutsideRing { atom: atom.index });
        }
        if let Some(valences) = element::allowed_valences(atom.element) {
            let max = u32::from(*valences.last().unwrap());
            let halves: u32 = mol
                .neighbors(atom.index)
                .iter()
                .map(|&(_, bi)| mol.bonds[bi].order.half_units())
                .sum();
            let floored = halves / 2;
            match atom.explicit_h {
                Some(h) => {
                    // charged bracket atoms skip valence checks
                    if atom.formal_charge == 0 && floored + u32::from(h) > max {
                        return Err(SmilesError::ValenceViolation { atom: atom.index });
                    }
                }
                None => {
                    if floored > max {
                        return Err(SmilesError::ValenceViolation { atom: atom.index });
                    }
                }
            }
        }
    }
    Ok(())
}

fn is_connected(mol: &Molecule) -> bool {
    let n = mol.atoms.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for &(j, _) in mol.neighbors(i) {
            if !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smiles::tokenize;

    fn parse_str(s: &str) -> Result<Molecule, SmilesError> {
        parse(&tokenize(s)?)
    }

    #[test]
    fn ethanol_chain() {
        let m = parse_str("CCO").unwrap();
        assert_eq!(m.atoms.len(), 3);
        assert_eq!(m.bonds.len(), 2);
        assert!(m.bonds.iter().all(|b| b.order == BondOrder::Single));
        assert_eq!(m.atoms[2].element, 8);
        assert_eq!(m.hydrogen_count(0), 3);
        assert_eq!(m.hydrogen_count(1), 2);
        assert_eq!(m.hydrogen_count(2), 1);
    }

    #[test]
    fn benzene() {
        let m = parse_str("c1ccccc1").unwrap();
        assert_eq!(m.atoms.len(), 6);
        assert_eq!(m.bonds.len(), 6);
        assert!(m.atoms.iter().all(|a| a.aromatic && a.element == 6));
        assert!(m.bonds.iter().all(|b| b.order == BondOrder::Aromatic));
        assert!((0..6).all(|i| m.in_ring(i)));
        assert!((0..6).all(|i| m.hydrogen_count(i) == 1));
    }

    #[test]
    fn unclosed_ring() {
        assert_eq!(
            parse_str("C1CC"),
            Err(SmilesError::UnmatchedRingClosure { index: 1 })
        );
    }

    #[test]
    fn unclosed_branch() {
        assert_eq!(parse_str("C("), Err(SmilesError::UnclosedBranch));
        assert_eq!(
            parse_str("C)C"),
            Err(SmilesError::UnmatchedBranchClose { position: 1 })
        );
    }

    #[test]
    fn valence_violation_on_oxygen() {
        // bond-order sum on O is 4, above its allowed valence of 2
        assert_eq!(
            parse_str("C=O=C"),
            Err(SmilesError::ValenceViolation { atom: 1 })
        );
    }

    #[test]
    fn charged_bracket_atom_skips_valence() {
        assert!(parse_str("[O-]C").is_ok());
        assert!(parse_str("C[N+](C)(C)C").is_ok());
        // uncharged bracket atoms are still checked
        assert_eq!(
            parse_str("[CH5]"),
            Err(SmilesError::ValenceViolation { atom: 0 })
        );
    }

    #[test]
    fn bracket_attributes() {
        let m = parse_str("[13CH3+]").unwrap();
        let a = &m.atoms[0];
        assert_eq!(a.isotope, Some(13));
        assert_eq!(a.element, 6);
        assert_eq!(a.explicit_h, Some(3));
        assert_eq!(a.formal_charge, 1);
        let m = parse_str("[O--]").unwrap();
        assert_eq!(m.atoms[0].formal_charge, -2);
        let m = parse_str("[Fe+3]").unwrap();
        assert_eq!(m.atoms[0].element, 26);
        assert_eq!(m.atoms[0].formal_charge, 3);
    }

    #[test]
    fn chirality_and_class_discarded() {
        let m = parse_str("[C@@H](C)(N)O").unwrap();
        assert_eq!(m.atoms[0].explicit_h, Some(1));
        assert!(parse_str("[CH3:2]C").is_ok());
    }

    #[test]
    fn aromatic_atom_needs_ring() {
        assert_eq!(
            parse_str("cc"),
            Err(SmilesError::AromaticAtomOutsideRing { atom: 0 })
        );
        assert!(parse_str("c1ccccc1C").is_ok());
    }

    #[test]
    fn branches() {
        let m = parse_str("CC(C)C").unwrap();
        let mut degs: Vec<usize> = (0..4).map(|i| m.degree(i)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3]);
    }

    #[test]
    fn explicit_ring_bond_orders() {
        let m = parse_str("C=1CCCCC=1").unwrap();
        assert!(m.bonds.iter().any(|b| b.order == BondOrder::Double));
        assert_eq!(
            parse_str("C=1CCCCC-1"),
            Err(SmilesError::ConflictingRingBond { index: 1 })
        );
    }

    #[test]
    fn self_and_duplicate_ring_bonds() {
        assert_eq!(parse_str("C11"), Err(SmilesError::SelfBond { atom: 0 }));
        assert_eq!(
            parse_str("C12CC12"),
            Err(SmilesError::DuplicateRingBond { a: 0, b: 2 })
        );
    }

    #[test]
    fn dot_disconnects() {
        let m = parse_str("C.C").unwrap();
        assert_eq!(m.atoms.len(), 2);
        assert!(m.bonds.is_empty());
        // ring closures may still join the components
        let m = parse_str("C1.C1").unwrap();
        assert_eq!(m.bonds.len(), 1);
    }

    #[test]
    fn dangling_bonds() {
        assert!(matches!(parse_str("C="), Err(SmilesError::DanglingBond { .. })));
        assert!(matches!(parse_str("=C"), Err(SmilesError::DanglingBond { .. })));
        assert!(matches!(parse_str("C=(C)"), Err(SmilesError::DanglingBond { .. })));
        assert!(matches!(parse_str("C(=)C"), Err(SmilesError::DanglingBond { .. })));
    }

    #[test]
    fn naphthalene_junction_valence_ok() {
        // ring-junction aromatic carbons carry three aromatic bonds; the
        // floored sum (4) stays within carbon's valence
        assert!(parse_str("c1ccc2ccccc2c1").is_ok());
    }

    #[test]
    fn pyrrole_and_pyridine() {
        let m = parse_str("c1cc[nH]c1").unwrap();
        let n = m.atoms.iter().find(|a| a.element == 7).unwrap();
        assert_eq!(n.explicit_h, Some(1));
        let m = parse_str("c1ccncc1").unwrap();
        let n = m.atoms.iter().find(|a| a.element == 7).unwrap();
        assert_eq!(m.hydrogen_count(n.index), 0);
    }
}
