//! Words, convolution and deconvolution.

use std::fmt;

use super::alphabet::{Alphabet, Letter, SymbolId, TupleAlphabet, PAD};
use crate::error::{Error, Result};

/// A word over some base alphabet, stored as symbol indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<SymbolId>,
}

impl Word {
    pub fn new(symbols: Vec<SymbolId>) -> Self {
        Word { symbols }
    }

    pub fn empty() -> Self {
        Word { symbols: Vec::new() }
    }

    /// The unary word `a^n` (symbol 0 repeated `n` times).
    pub fn unary(n: usize) -> Self {
        Word { symbols: vec![0; n] }
    }

    /// Parses a word from whitespace-free token text against an alphabet.
    ///
    /// Tokens are matched greedily longest-first, so multi-character symbols
    /// are supported as long as the text is unambiguous under that rule.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let mut symbols = Vec::new();
        let mut rest = text;
        let mut by_len: Vec<&String> = alphabet.symbols().iter().collect();
        by_len.sort_by_key(|s| std::cmp::Reverse(s.len()));
        'outer: while !rest.is_empty() {
            for sym in &by_len {
                if let Some(r) = rest.strip_prefix(sym.as_str()) {
                    symbols.push(alphabet.id_of(sym).unwrap());
                    rest = r;
                    continue 'outer;
                }
            }
            return Err(Error::UnknownSymbol(rest.to_string()));
        }
        Ok(Word { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[SymbolId] {
        &self.symbols
    }

    pub fn push(&mut self, id: SymbolId) {
        self.symbols.push(id);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word { symbols }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }

    /// Renders against an alphabet; the empty word prints as `ε`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            "ε".to_string()
        } else {
            self.symbols.iter().map(|&id| alphabet.symbol(id)).collect()
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.symbols)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word.format(self.alphabet))
    }
}

/// A word over a tuple alphabet satisfying the padding invariant: once a
/// track shows the pad it shows the pad in every later letter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PaddedWord {
    alphabet: TupleAlphabet,
    letters: Vec<Letter>,
}

impl PaddedWord {
    /// Wraps a letter sequence, checking the padding invariant.
    pub fn new(alphabet: TupleAlphabet, letters: Vec<Letter>) -> Result<Self> {
        let mut dead: u32 = 0;
        for &letter in &letters {
            let mask = alphabet.pad_mask(letter);
            if mask & dead != dead {
                let track = (dead & !mask).trailing_zeros() as usize;
                return Err(Error::InvalidPadding { track });
            }
            dead = mask;
        }
        Ok(PaddedWord { alphabet, letters })
    }

    pub fn alphabet(&self) -> &TupleAlphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Splits the convolution back into its component words.
    ///
    /// This is total on well-formed padded words: `conv(w.deconv()) == w`.
    pub fn deconv(&self) -> Vec<Word> {
        let arity = self.alphabet.arity();
        let mut words = vec![Word::empty(); arity];
        for &letter in &self.letters {
            for (track, entry) in self.alphabet.decode(letter).into_iter().enumerate() {
                if let Some(id) = entry {
                    words[track].push(id);
                }
            }
        }
        words
    }

    pub fn format(&self) -> String {
        if self.letters.is_empty() {
            return "ε".to_string();
        }
        self.letters
            .iter()
            .map(|&l| self.alphabet.format_letter(l))
            .collect()
    }
}

impl fmt::Debug for PaddedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PaddedWord({})", self.format())
    }
}

/// Convolution of a word tuple into a single padded word.
///
/// The output has length `max |w_i|`; track `i` reads `w_i` and then pads
/// with `$`. All words must be over `alphabet`.
pub fn conv(alphabet: &Alphabet, words: &[Word]) -> Result<PaddedWord> {
    if words.is_empty() {
        return Err(Error::Arity("conv needs at least one word".into()));
    }
    for w in words {
        for &id in w.symbols() {
            if id as usize >= alphabet.len() {
                return Err(Error::AlphabetMismatch(format!(
                    "symbol #{id} is not in the {}-symbol alphabet",
                    alphabet.len()
                )));
            }
        }
    }
    let tuple = TupleAlphabet::new(alphabet.clone(), words.len())?;
    let max_len = words.iter().map(Word::len).max().unwrap_or(0);
    let mut letters = Vec::with_capacity(max_len);
    for pos in 0..max_len {
        let tracks: Vec<_> = words.iter().map(|w| w.symbols().get(pos).copied()).collect();
        letters.push(tuple.encode(&tracks)?);
    }
    Ok(PaddedWord { alphabet: tuple, letters })
}

/// Convolution helper when the words are given as token text.
pub fn conv_strs(alphabet: &Alphabet, words: &[&str]) -> Result<PaddedWord> {
    let words: Vec<Word> = words
        .iter()
        .map(|w| Word::parse(alphabet, w))
        .collect::<Result<_>>()?;
    conv(alphabet, &words)
}

/// Pretty name for the pad used in renderings.
pub fn pad_token() -> &'static str {
    PAD
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn conv_of_ab_and_b() {
        let w = conv_strs(&ab(), &["ab", "b"]).unwrap();
        assert_eq!(w.format(), "(a,b)(b,$)");
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn conv_pads_empty_word() {
        let w = conv_strs(&ab(), &["", "aa"]).unwrap();
        assert_eq!(w.format(), "($,a)($,a)");
    }

    #[test]
    fn conv_single_word_is_identity() {
        let w = conv_strs(&ab(), &["a"]).unwrap();
        assert_eq!(w.format(), "a");
        assert_eq!(w.deconv(), vec![Word::parse(&ab(), "a").unwrap()]);
    }

    #[test]
    fn deconv_inverts_conv() {
        let w = conv_strs(&ab(), &["ab", "b"]).unwrap();
        let parts = w.deconv();
        assert_eq!(parts[0].format(&ab()), "ab");
        assert_eq!(parts[1].format(&ab()), "b");
    }

    #[test]
    fn deconv_of_empty_padded_word() {
        let tuple = TupleAlphabet::new(ab(), 2).unwrap();
        let w = PaddedWord::new(tuple, vec![]).unwrap();
        let parts = w.deconv();
        assert!(parts[0].is_empty() && parts[1].is_empty());
    }

    #[test]
    fn non_suffix_padding_is_rejected() {
        let tuple = TupleAlphabet::new(ab(), 2).unwrap();
        let pad_a = tuple.encode(&[None, Some(0)]).unwrap();
        let a_a = tuple.encode(&[Some(0), Some(0)]).unwrap();
        let err = PaddedWord::new(tuple, vec![pad_a, a_a]).unwrap_err();
        assert!(matches!(err, Error::InvalidPadding { track: 0 }));
    }

    #[test]
    fn mixed_alphabet_is_rejected() {
        let big = Alphabet::new(["a", "b", "c"]).unwrap();
        let w = Word::parse(&big, "c").unwrap();
        assert!(conv(&ab(), &[w]).is_err());
    }
}
