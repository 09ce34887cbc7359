//! Symbol vocabulary and one-hot sequence encoding.

use thiserror::Error;

use crate::real::Real;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("vocabulary has no symbols")]
    EmptyVocabulary,
    #[error("vocabulary is missing its {0} entry")]
    MissingSpecial(&'static str),
}

pub const UNKNOWN_SYMBOL: &str = "UNKNOWN";
pub const END_SYMBOL: &str = "END";

/// Default maximum encoded sequence length (symbols + end marker).
pub const DEFAULT_MAX_LEN: usize = 350;

/// Ordered symbol table. Two entries are special: `UNKNOWN` absorbs any
/// source text no other symbol matches, `END` marks the end of the sequence.
/// Neither is matched against source text.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    symbols: Vec<String>,
    unknown: u32,
    end: u32,
    max_symbol_chars: usize,
}

impl Vocabulary {
    pub fn new(symbols: Vec<String>) -> Result<Vocabulary, EncodeError> {
        if symbols.is_empty() {
            return Err(EncodeError::EmptyVocabulary);
        }
        let unknown = symbols
            .iter()
            .position(|s| s == UNKNOWN_SYMBOL)
            .ok_or(EncodeError::MissingSpecial(UNKNOWN_SYMBOL))? as u32;
        let end = symbols
            .iter()
            .position(|s| s == END_SYMBOL)
            .ok_or(EncodeError::MissingSpecial(END_SYMBOL))? as u32;
        let max_symbol_chars = symbols
            .iter()
            .enumerate()
            .filter(|&(i, _)| i as u32 != unknown && i as u32 != end)
            .map(|(_, s)| s.chars().count())
            .max()
            .unwrap_or(0);
        Ok(Vocabulary {
            symbols,
            unknown,
            end,
            max_symbol_chars,
        })
    }

    /// The documented default: organic and aromatic element symbols, the
    /// structural punctuation of SMILES, ring digits, and the two specials.
    pub fn default_vocab() -> Vocabulary {
        let symbols = [
            "C", "c", "N", "n", "O", "o", "S", "s", "P", "F", "Cl", "Br", "I", "B", "(", ")",
            "[", "]", "=", "#", "/", "\\", "@", "+", "-", ".", "1", "2", "3", "4", "5", "6",
            "7", "8", "9", "%", "H", UNKNOWN_SYMBOL, END_SYMBOL,
        ];
        Vocabulary::new(symbols.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn unknown_index(&self) -> u32 {
        self.unknown
    }

    pub fn end_index(&self) -> u32 {
        self.end
    }

    pub fn index_of(&self, symbol: &str) -> Option<u32> {
        self.symbols.iter().position(|s| s == symbol).map(|i| i as u32)
    }

    /// Longest-match segmentation of `text` into vocabulary ids. Characters
    /// that start no known symbol map to `UNKNOWN` and consume one char.
    pub fn segment(&self, text: &str) -> Vec<u32> {
        let chars: Vec<char> = text.chars().collect();
        let mut ids = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let mut matched = None;
            let top = self.max_symbol_chars.min(chars.len() - i);
            for len in (1..=top).rev() {
                let cand: String = chars[i..i + len].iter().collect();
                if let Some(id) = self.match_text(&cand) {
                    matched = Some((id, len));
                    break;
                }
            }
            match matched {
                Some((id, len)) => {
                    ids.push(id);
                    i += len;
                }
                None => {
                    ids.push(self.unknown);
                    i += 1;
                }
            }
        }
        ids
    }

    fn match_text(&self, cand: &str) -> Option<u32> {
        self.symbols
            .iter()
            .enumerate()
            .find(|&(i, s)| s == cand && i as u32 != self.unknown && i as u32 != self.end)
            .map(|(i, _)| i as u32)
    }
}

/// One-hot encoded symbol sequence: `max_len` rows of `vocab_size` columns
/// with exactly one nonzero entry per row through the end marker, all-zero
/// padding rows after it. Stored compactly as the symbol id per real row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenMatrix {
    ids: Vec<u32>,
    max_len: usize,
    vocab_size: u32,
}

impl TokenMatrix {
    pub fn rows(&self) -> usize {
        self.max_len
    }

    pub fn cols(&self) -> usize {
        self.vocab_size as usize
    }

    /// Rows carrying a symbol, including the end marker.
    pub fn real_len(&self) -> usize {
        self.ids.len()
    }

    pub fn symbol_ids(&self) -> &[u32] {
        &self.ids
    }

    /// Materialize the dense `max_len x vocab_size` indicator matrix.
    pub fn dense<R: Real>(&self) -> Vec<R> {
        let cols = self.vocab_size as usize;
        let mut m = vec![R::zero(); self.max_len * cols];
        for (row, &id) in self.ids.iter().enumerate() {
            m[row * cols + id as usize] = R::one();
        }
        m
    }
}

/// Encode a SMILES string against a vocabulary: longest-match symbols, an
/// end-marker row after the last symbol, truncation to `max_len - 1` symbols.
pub fn one_hot_encode(
    smiles: &str,
    vocab: &Vocabulary,
    max_len: usize,
) -> Result<TokenMatrix, EncodeError> {
    assert!(max_len >= 1, "max_len must be at least 1");
    if vocab.is_empty() {
        return Err(EncodeError::EmptyVocabulary);
    }
    let mut ids = vocab.segment(smiles);
    ids.truncate(max_len - 1);
    ids.push(vocab.end_index());
    Ok(TokenMatrix {
        ids,
        max_len,
        vocab_size: vocab.len() as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_encoding_with_padding() {
        let v = Vocabulary::default_vocab();
        let m = one_hot_encode("CC", &v, 4).unwrap();
        let c = v.index_of("C").unwrap();
        assert_eq!(m.symbol_ids(), &[c, c, v.end_index()]);
        assert_eq!(m.rows(), 4);
        let d = m.dense::<f64>();
        // three one-hot rows, one zero padding row
        for row in 0..3 {
            let s: f64 = d[row * m.cols()..(row + 1) * m.cols()].iter().sum();
            assert_eq!(s, 1.0);
        }
        let s: f64 = d[3 * m.cols()..].iter().sum();
        assert_eq!(s, 0.0);
    }

    #[test]
    fn unknown_symbol_column() {
        let v = Vocabulary::default_vocab();
        let m = one_hot_encode("CZ", &v, 8).unwrap();
        assert_eq!(m.symbol_ids()[1], v.unknown_index());
    }

    #[test]
    fn truncation() {
        let v = Vocabulary::default_vocab();
        let m = one_hot_encode("CCCCC", &v, 3).unwrap();
        let c = v.index_of("C").unwrap();
        assert_eq!(m.symbol_ids(), &[c, c, v.end_index()]);
    }

    #[test]
    fn longest_match_two_char_symbols() {
        let v = Vocabulary::default_vocab();
        let m = one_hot_encode("CClBr", &v, 10).unwrap();
        assert_eq!(
            m.symbol_ids(),
            &[
                v.index_of("C").unwrap(),
                v.index_of("Cl").unwrap(),
                v.index_of("Br").unwrap(),
                v.end_index()
            ]
        );
    }

    #[test]
    fn bracket_symbol_when_present_in_vocab() {
        let mut syms: Vec<String> = ["C", "[nH]", "[", "]", "n", "H"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        syms.push(UNKNOWN_SYMBOL.into());
        syms.push(END_SYMBOL.into());
        let v = Vocabulary::new(syms).unwrap();
        let m = one_hot_encode("C[nH]C", &v, 10).unwrap();
        assert_eq!(
            m.symbol_ids(),
            &[
                v.index_of("C").unwrap(),
                v.index_of("[nH]").unwrap(),
                v.index_of("C").unwrap(),
                v.end_index()
            ]
        );
    }

    #[test]
    fn specials_are_required() {
        assert!(matches!(
            Vocabulary::new(vec!["C".into()]),
            Err(EncodeError::MissingSpecial(UNKNOWN_SYMBOL))
        ));
        assert!(matches!(
            Vocabulary::new(Vec::new()),
            Err(EncodeError::EmptyVocabulary)
        ));
    }
}
