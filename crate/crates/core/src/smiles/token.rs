//! SMILES tokenizer.

use super::error::SmilesError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    AtomOrganic,
    AtomBracket,
    Bond,
    BranchOpen,
    BranchClose,
    RingClosure,
    Dot,
}

/// One lexical unit of a SMILES string. Concatenating the `text` of all
/// tokens in order reproduces the input exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// 0-based character offset of the token's first character.
    pub position: usize,
}

impl Token {
    /// Ring-closure index: a single digit 1-9 or a two-digit `%nn`.
    pub fn ring_index(&self) -> Option<u16> {
        if self.kind != TokenKind::RingClosure {
            return None;
        }
        if let Some(rest) = self.text.strip_prefix('%') {
            rest.parse::<u16>().ok()
        } else {
            self.text.parse::<u16>().ok()
        }
    }
}

const BOND_CHARS: [char; 6] = ['-', '=', '#', ':', '/', '\\'];

/// Split a SMILES string into tokens. Two-character element symbols (Cl, Br)
/// are single atom tokens; a bracket atom is one token from `[` to `]`.
pub fn tokenize(smiles: &str) -> Result<Vec<Token>, SmilesError> {
    if smiles.is_empty() {
        return Err(SmilesError::EmptyInput);
    }
    let chars: Vec<char> = smiles.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            '[' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j] != ']' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(SmilesError::UnterminatedBracket { position: start });
                }
                tokens.push(Token {
                    kind: TokenKind::AtomBracket,
                    text: chars[i..=j].iter().collect(),
                    position: start,
                });
                i = j + 1;
            }
            ']' => return Err(SmilesError::UnknownCharacter { position: start }),
            'B' | 'C' | 'N' | 'O' | 'P' | 'S' | 'F' | 'I' => {
                // longest match: Br and Cl are two-character symbols
                let two = match (c, chars.get(i + 1)) {
                    ('B', Some('r')) => true,
                    ('C', Some('l')) => true,
                    _ => false,
                };
                let end = if two { i + 2 } else { i + 1 };
                tokens.push(Token {
                    kind: TokenKind::AtomOrganic,
                    text: chars[i..end].iter().collect(),
                    position: start,
                });
                i = end;
            }
            'b' | 'c' | 'n' | 'o' | 'p' | 's' => {
                tokens.push(Token {
                    kind: TokenKind::AtomOrganic,
                    text: c.to_string(),
                    position: start,
                });
                i += 1;
            }
            '(' => {
                tokens.push(Token {
                    kind: TokenKind::BranchOpen,
                    text: "(".into(),
                    position: start,
                });
                i += 1;
            }
            ')' => {
                tokens.push(Token {
                    kind: TokenKind::BranchClose,
                    text: ")".into(),
                    position: start,
                });
                i += 1;
            }
            '.' => {
                tokens.push(Token {
                    kind: TokenKind::Dot,
                    text: ".".into(),
                    position: start,
                });
                i += 1;
            }
            '1'..='9' => {
                tokens.push(Token {
                    kind: TokenKind::RingClosure,
                    text: c.to_string(),
                    position: start,
                });
                i += 1;
            }
            '%' => {
                let d1 = chars.get(i + 1).copied();
                let d2 = chars.get(i + 2).copied();
                match (d1, d2) {
                    (Some(a), Some(b)) if a.is_ascii_digit() && b.is_ascii_digit() => {
                        tokens.push(Token {
                            kind: TokenKind::RingClosure,
                            text: chars[i..i + 3].iter().collect(),
                            position: start,
                        });
                        i += 3;
                    }
                    _ => return Err(SmilesError::InvalidRingClosure { position: start }),
                }
            }
            _ if BOND_CHARS.contains(&c) => {
                tokens.push(Token {
                    kind: TokenKind::Bond,
                    text: c.to_string(),
                    position: start,
                });
                i += 1;
            }
            _ => return Err(SmilesError::UnknownCharacter { position: start }),
        }
    }
    Ok(tokens)
}
