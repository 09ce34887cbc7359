//! Molecule to SMILES string.

use std::collections::BinaryHeap;

use super::canon::canonical_ranks;
use super::element;
use super::molecule::{Atom, BondOrder, Molecule};

/// Serialize a molecule. The output re-parses to an isomorphic graph;
/// traversal order follows `canonical_ranks` so the result is deterministic
/// for a given molecule.
pub fn write_smiles(mol: &Molecule) -> String {
    write_smiles_ordered(mol).0
}

/// Like [`write_smiles`], also returning the original atom index for each
/// emitted atom, in emission order. Re-parsing the string assigns atom `k`
/// of the new molecule to `order[k]` of the input, which makes isomorphism
/// checks exact.
pub fn write_smiles_ordered(mol: &Molecule) -> (String, Vec<usize>) {
    let n = mol.atoms.len();
    if n == 0 {
        return (String::new(), Vec::new());
    }
    let ranks = canonical_ranks(mol);

    // spanning forest in (rank, index) order
    let mut visited = vec![false; n];
    let mut preorder = vec![usize::MAX; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent_bond: Vec<Option<usize>> = vec![None; n];
    let mut back_edges: Vec<(usize, usize, usize)> = Vec::new(); // (opener, closer, bond idx)
    let mut roots: Vec<usize> = Vec::new();

    let mut atom_order: Vec<usize> = (0..n).collect();
    atom_order.sort_unstable_by_key(|&i| (ranks[i], i));

    for &start in &atom_order {
        if visited[start] {
            continue;
        }
        roots.push(start);
        let mut stack = vec![start];
        visited[start] = true;
        while let Some(i) = stack.pop() {
            preorder[i] = order.len();
            order.push(i);
            let mut nbrs: Vec<(usize, usize)> = mol.neighbors(i).to_vec();
            nbrs.sort_unstable_by_key(|&(j, _)| (ranks[j], j));
            let mut kids = Vec::new();
            for (j, bi) in nbrs {
                if Some(bi) == parent_bond[i] {
                    continue;
                }
                if visited[j] {
                    // ring bond; recorded once, from the later-emitted side
                    if preorder[j] != usize::MAX {
                        back_edges.push((j, i, bi));
                    }
                } else {
                    visited[j] = true;
                    parent_bond[j] = Some(bi);
                    kids.push(j);
                }
            }
            // push in reverse so the lowest-ranked child is emitted first
            for &k in kids.iter().rev() {
                stack.push(k);
            }
            children[i] = kids;
        }
    }

    // ring digits: allocate at the opener, free at the closer
    let mut opens_at: Vec<Vec<usize>> = vec![Vec::new(); n]; // back-edge ids
    let mut closes_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, &(o, c, _)) in back_edges.iter().enumerate() {
        opens_at[o].push(ei);
        closes_at[c].push(ei);
    }
    for i in 0..n {
        opens_at[i].sort_unstable_by_key(|&ei| preorder[back_edges[ei].1]);
        closes_at[i].sort_unstable_by_key(|&ei| preorder[back_edges[ei].0]);
    }
    let mut digit_of: Vec<u16> = vec![0; back_edges.len()];
    let mut pool: BinaryHeap<std::cmp::Reverse<u16>> =
        (1..100).map(std::cmp::Reverse).collect();
    for &i in &order {
        for &ei in &closes_at[i] {
            pool.push(std::cmp::Reverse(digit_of[ei]));
        }
        for &ei in &opens_at[i] {
            let std::cmp::Reverse(d) = pool.pop().expect("more than 99 concurrently open rings");
            digit_of[ei] = d;
        }
    }

    // emission
    enum Op {
        Atom(usize, Option<usize>), // atom, bond from parent
        Text(&'static str),
    }
    let mut out = String::new();
    let mut stack: Vec<Op> = Vec::new();
    for (ri, &root) in roots.iter().enumerate() {
        if ri > 0 {
            out.push('.');
        }
        stack.push(Op::Atom(root, None));
        while let Some(op) = stack.pop() {
            match op {
                Op::Text(s) => out.push_str(s),
                Op::Atom(i, via) => {
                    if let Some(bi) = via {
                        let b = &mol.bonds[bi];
                        out.push_str(bond_token(
                            b.order,
                            &mol.atoms[b.a],
                            &mol.atoms[b.b],
                        ));
                    }
                    out.push_str(&atom_token(&mol.atoms[i]));
                    for &ei in &closes_at[i] {
                        push_digit(&mut out, digit_of[ei]);
                    }
                    for &ei in &opens_at[i] {
                        let (_, _, bi) = back_edges[ei];
                        let b = &mol.bonds[bi];
                        out.push_str(bond_token(b.order, &mol.atoms[b.a], &mol.atoms[b.b]));
                        push_digit(&mut out, digit_of[ei]);
                    }
                    let kids = &children[i];
                    for (ki, &k) in kids.iter().enumerate().rev() {
                        let last = ki + 1 == kids.len();
                        if last {
                            stack.push(Op::Atom(k, parent_bond[k]));
                        } else {
                            stack.push(Op::Text(")"));
                            stack.push(Op::Atom(k, parent_bond[k]));
                            stack.push(Op::Text("("));
                        }
                    }
                }
            }
        }
    }
    (out, order)
}

fn push_digit(out: &mut String, d: u16) {
    if d < 10 {
        out.push_str(&d.to_string());
    } else {
        out.push('%');
        out.push_str(&format!("{d:02}"));
    }
}

/// Bond text between two atoms: empty for the default order (single, or
/// aromatic when both atoms are aromatic), explicit otherwise. A single bond
/// between two aromatic atoms needs an explicit `-` so re-parsing does not
/// turn it aromatic.
fn bond_token(order: BondOrder, a: &Atom, b: &Atom) -> &'static str {
    let both_aromatic = a.aromatic && b.aromatic;
    match order {
        BondOrder::Single => {
            if both_aromatic {
                "-"
            } else {
                ""
            }
        }
        BondOrder::Double => "=",
        BondOrder::Triple => "#",
        BondOrder::Aromatic => {
            if both_aromatic {
                ""
            } else {
                ":"
            }
        }
    }
}

fn atom_token(atom: &Atom) -> String {
    let organic = element::in_organic_subset(atom.element);
    let aromatic_ok = !atom.aromatic
        || matches!(atom.element, 5 | 6 | 7 | 8 | 15 | 16);
    let plain = organic
        && aromatic_ok
        && atom.formal_charge == 0
        && atom.isotope.is_none()
        && atom.explicit_h.is_none();
    let mut sym = atom.symbol().to_string();
    if atom.aromatic {
        sym = sym.to_ascii_lowercase();
    }
    if plain {
        return sym;
    }
    let mut out = String::from("[");
    if let Some(iso) = atom.isotope {
        out.push_str(&iso.to_string());
    }
    out.push_str(&sym);
    let h = atom.explicit_h.unwrap_or(0);
    if h == 1 {
        out.push('H');
    } else if h > 1 {
        out.push('H');
        out.push_str(&h.to_string());
    }
    match atom.formal_charge {
        0 => {}
        1 => out.push('+'),
        -1 => out.push('-'),
        c if c > 0 => out.push_str(&format!("+{c}")),
        c => out.push_str(&format!("-{}", -c)),
    }
    out.push(']');
    out
}
