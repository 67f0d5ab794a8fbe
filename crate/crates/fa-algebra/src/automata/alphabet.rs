//! Base alphabets and padded tuple alphabets.
//!
//! A base [`Alphabet`] is an ordered set of printable symbol tokens. The
//! reserved pad token `"$"` never belongs to an alphabet; it marks exhausted
//! tracks inside convolutions. A [`TupleAlphabet`] of arity `r` has one
//! letter for every `r`-tuple over `base ∪ {$}` except the all-pad tuple,
//! which no convolution ever contains.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The reserved padding token.
pub const PAD: &str = "$";

/// Index of a symbol within its [`Alphabet`].
pub type SymbolId = u16;

/// One track entry of a tuple letter: a base symbol or the pad.
pub type TrackSymbol = Option<SymbolId>;

/// Encoded tuple letter; see [`TupleAlphabet::encode`].
pub type Letter = u32;

#[derive(Debug, PartialEq, Eq, Hash)]
struct AlphabetInner {
    symbols: Vec<String>,
}

/// An ordered finite set of symbol tokens.
///
/// Symbol order is significant: it fixes lexicographic tie-breaking for
/// witness words and the enumeration order of letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    inner: Arc<AlphabetInner>,
}

impl Alphabet {
    /// Builds an alphabet from symbol tokens, in the given order.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(symbols: I) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidAlphabet(format!("symbol {i} is empty")));
            }
            if s == PAD {
                return Err(Error::InvalidAlphabet(
                    "the pad token \"$\" may not be an alphabet symbol".into(),
                ));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {s:?}")));
            }
        }
        if symbols.len() > SymbolId::MAX as usize {
            return Err(Error::InvalidAlphabet("too many symbols".into()));
        }
        Ok(Alphabet {
            inner: Arc::new(AlphabetInner { symbols }),
        })
    }

    /// Convenience constructor for the one-letter alphabet `{a}`.
    pub fn unary() -> Self {
        Alphabet::new(["a"]).expect("unary alphabet is valid")
    }

    pub fn len(&self) -> usize {
        self.inner.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.inner.symbols
    }

    pub fn symbol(&self, id: SymbolId) -> &str {
        &self.inner.symbols[id as usize]
    }

    /// Looks a token up by name.
    pub fn id_of(&self, token: &str) -> Result<SymbolId> {
        self.inner
            .symbols
            .iter()
            .position(|s| s == token)
            .map(|i| i as SymbolId)
            .ok_or_else(|| Error::UnknownSymbol(token.to_string()))
    }

    pub fn contains(&self, token: &str) -> bool {
        self.inner.symbols.iter().any(|s| s == token)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{:?}", self.inner.symbols)
    }
}

/// Alphabet of `r`-tuples over a base alphabet extended with the pad.
///
/// Letters are encoded as mixed-radix integers with `base.len() + 1` digits
/// per track (the extra digit is the pad), track 0 being the most significant
/// digit. The all-pad tuple is excluded, so valid letters range over
/// `0..letter_count()` minus the all-pad code, which is the largest one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TupleAlphabet {
    base: Alphabet,
    arity: usize,
}

impl TupleAlphabet {
    pub fn new(base: Alphabet, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Arity("tuple alphabet arity must be ≥ 1".into()));
        }
        let radix = base.len() as u64 + 1;
        if radix.checked_pow(arity as u32).map_or(true, |n| n > u32::MAX as u64) {
            return Err(Error::Arity(format!(
                "letter space {}^{arity} does not fit an encoded letter",
                radix
            )));
        }
        Ok(TupleAlphabet { base, arity })
    }

    pub fn base(&self) -> &Alphabet {
        &self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    fn radix(&self) -> u32 {
        self.base.len() as u32 + 1
    }

    /// Pad digit value within one track.
    fn pad_digit(&self) -> u32 {
        self.base.len() as u32
    }

    /// Total number of letter codes including the excluded all-pad code.
    pub fn letter_space(&self) -> u32 {
        self.radix().pow(self.arity as u32)
    }

    /// Code of the excluded all-pad tuple (the largest code).
    pub fn all_pad_code(&self) -> u32 {
        self.letter_space() - 1
    }

    /// Number of valid letters.
    pub fn letter_count(&self) -> u32 {
        self.letter_space() - 1
    }

    /// Iterates all valid letters in encoding order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.letter_space()).filter(move |&l| l != self.all_pad_code())
    }

    /// Encodes a tuple of track symbols. Errors on the all-pad tuple.
    pub fn encode(&self, tracks: &[TrackSymbol]) -> Result<Letter> {
        if tracks.len() != self.arity {
            return Err(Error::Arity(format!(
                "tuple has {} tracks, alphabet arity is {}",
                tracks.len(),
                self.arity
            )));
        }
        let mut code: u32 = 0;
        for &t in tracks {
            let digit = match t {
                Some(id) => {
                    if id as usize >= self.base.len() {
                        return Err(Error::UnknownSymbol(format!("#{id}")));
                    }
                    id as u32
                }
                None => self.pad_digit(),
            };
            code = code * self.radix() + digit;
        }
        if code == self.all_pad_code() {
            return Err(Error::InvalidPadding { track: 0 });
        }
        Ok(code)
    }

    /// Decodes a letter into its track symbols.
    pub fn decode(&self, letter: Letter) -> Vec<TrackSymbol> {
        let mut tracks = vec![None; self.arity];
        let mut code = letter;
        for i in (0..self.arity).rev() {
            let digit = code % self.radix();
            code /= self.radix();
            tracks[i] = if digit == self.pad_digit() {
                None
            } else {
                Some(digit as SymbolId)
            };
        }
        tracks
    }

    /// The symbol on one track of a letter without decoding the rest.
    pub fn track_of(&self, letter: Letter, track: usize) -> TrackSymbol {
        debug_assert!(track < self.arity);
        let shift = self.radix().pow((self.arity - 1 - track) as u32);
        let digit = (letter / shift) % self.radix();
        if digit == self.pad_digit() {
            None
        } else {
            Some(digit as SymbolId)
        }
    }

    /// Bitmask of padded tracks, bit `i` set when track `i` reads the pad.
    pub fn pad_mask(&self, letter: Letter) -> u32 {
        let mut mask = 0;
        for (i, t) in self.decode(letter).into_iter().enumerate() {
            if t.is_none() {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Human-readable rendering such as `(a,$)`.
    pub fn format_letter(&self, letter: Letter) -> String {
        let parts: Vec<&str> = self
            .decode(letter)
            .into_iter()
            .map(|t| match t {
                Some(id) => self.base.symbol(id),
                None => PAD,
            })
            .collect();
        if self.arity == 1 {
            parts[0].to_string()
        } else {
            format!("({})", parts.join(","))
        }
    }
}

impl fmt::Debug for TupleAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TupleAlphabet({:?}, arity {})", self.base, self.arity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_pad_and_duplicates() {
        assert!(Alphabet::new(["a", "$"]).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new([""]).is_err());
    }

    #[test]
    fn letter_roundtrip() {
        let base = Alphabet::new(["a", "b"]).unwrap();
        let tup = TupleAlphabet::new(base, 2).unwrap();
        assert_eq!(tup.letter_count(), 8); // 3^2 - 1
        for letter in tup.letters() {
            let tracks = tup.decode(letter);
            assert_eq!(tup.encode(&tracks).unwrap(), letter);
            for (i, &t) in tracks.iter().enumerate() {
                assert_eq!(tup.track_of(letter, i), t);
            }
        }
    }

    #[test]
    fn all_pad_is_excluded() {
        let base = Alphabet::new(["a"]).unwrap();
        let tup = TupleAlphabet::new(base, 2).unwrap();
        assert!(tup.encode(&[None, None]).is_err());
        assert!(tup.letters().all(|l| l != tup.all_pad_code()));
    }
}
