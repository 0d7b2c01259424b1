//! Alphabets, associative and non-associative words, the two word orders and
//! Lyndon–Shirshov word machinery.
//!
//! Letters are alphabet positions; a smaller position is a smaller letter.
//! The lexicographic order used throughout makes a word *smaller* than each of
//! its proper prefixes, so a Lyndon–Shirshov word is one that is strictly
//! greater than all of its proper cyclic rotations.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A letter, stored as its position in the [`Alphabet`].
pub type Letter = u8;

/// Largest supported alphabet.
pub const MAX_LETTERS: usize = Letter::MAX as usize + 1;

/// A finite, totally ordered alphabet. Earlier names are smaller letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_LETTERS {
            return Err(Error::AlphabetTooLarge(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyLetterName);
            }
            if index.insert(name.clone(), i as Letter).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        Ok(Alphabet { names, index })
    }

    /// `x1 < x2 < … < xn`.
    pub fn numbered(n: usize) -> Self {
        Alphabet::new((1..=n).map(|i| format!("x{i}"))).expect("numbered alphabet is valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len()).map(|i| i as Letter)
    }

    /// Parses a word given as whitespace separated letter names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let letters = text
            .split_whitespace()
            .map(|name| self.letter(name).ok_or_else(|| Error::UnknownLetter(name.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from(letters))
    }

    pub fn check_word(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&l| l as usize >= self.len()) {
            Some(&l) => Err(Error::LetterOutOfRange(l)),
            None => Ok(()),
        }
    }

    /// [`compare`] with both words validated against this alphabet.
    pub fn compare(&self, order: Order, u: &[Letter], v: &[Letter]) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(compare(order, u, v))
    }

    /// Word without separators, e.g. `x3x1x2`.
    pub fn format_word(&self, w: &[Letter]) -> String {
        w.iter().map(|&l| self.name(l)).collect()
    }
}

/// The two orders on associative words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// Lexicographic, with every word smaller than its proper prefixes.
    Lex,
    /// Length first, then [`Order::Lex`].
    DegLex,
}

/// Lexicographic comparison in which a proper prefix is the *greater* word.
pub fn lex_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    v.len().cmp(&u.len())
}

pub fn deglex_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| lex_cmp(u, v))
}

pub fn compare(order: Order, u: &[Letter], v: &[Letter]) -> Ordering {
    match order {
        Order::Lex => lex_cmp(u, v),
        Order::DegLex => deglex_cmp(u, v),
    }
}

/// An associative word.
///
/// The `Ord` impl is deg-lex: it is the monomial order of the whole crate and
/// the key order of every polynomial. Use [`lex_cmp`] for the plain
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }
}

impl std::ops::Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(&self.0, &other.0)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(")?;
        for l in &self.0 {
            write!(f, "x{}", l + 1)?;
        }
        write!(f, ")")
    }
}

/// Associative Lyndon–Shirshov test: every rotation `wv` of `u = vw` is
/// smaller than `u`. Equivalently, `u` is greater than each proper suffix.
pub fn is_alsw(u: &[Letter]) -> bool {
    !u.is_empty() && (1..u.len()).all(|i| lex_cmp(&u[i..], u) == Ordering::Less)
}

/// Fallible variant of [`is_alsw`] that rejects the empty word.
pub fn check_alsw(u: &[Letter]) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_alsw(u))
}

/// Factorization `u = c1 c2 … cm` into Lyndon–Shirshov words with
/// `c1 ≤ c2 ≤ … ≤ cm`. Returns the factor lengths.
pub fn alsw_factorization(u: &[Letter]) -> Vec<usize> {
    let n = u.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && u[k] >= u[j] {
            if u[k] > u[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(period);
            i += period;
        }
    }
    out
}

/// Position where `u` splits into its canonical halves: the start of the
/// longest proper suffix of `u` that is itself Lyndon–Shirshov.
pub fn standard_split(u: &[Letter]) -> Option<usize> {
    (1..u.len()).find(|&i| is_alsw(&u[i..]))
}

/// All Lyndon–Shirshov words of length `1..=max_len` over the first
/// `alphabet_size` letters, sorted deg-lex ascending.
pub fn enumerate_alsw(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if alphabet_size == 0 || max_len == 0 {
        return out;
    }
    let top = (alphabet_size - 1) as Letter;
    // Classic generation of Lyndon words over the reversed alphabet; a
    // reversed letter `r` stands for the letter `top - r`.
    let mut w: Vec<Letter> = vec![0];
    loop {
        out.push(Word(w.iter().map(|&r| top - r).collect()));
        let m = w.len();
        while w.len() < max_len {
            let r = w[w.len() - m];
            w.push(r);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(r) => *r += 1,
            None => break,
        }
    }
    out.sort();
    out
}

/// Non-associative word: a binary bracketing tree over letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum NWord {
    Leaf(Letter),
    Pair(Box<NWord>, Box<NWord>),
}

impl NWord {
    pub fn pair(left: NWord, right: NWord) -> NWord {
        NWord::Pair(Box::new(left), Box::new(right))
    }

    /// Left-normed bracket `((…((a1,a2),a3)…),ak)`.
    pub fn left_normed<I: IntoIterator<Item = NWord>>(items: I) -> Option<NWord> {
        items.into_iter().reduce(NWord::pair)
    }

    /// The underlying associative word.
    pub fn word(&self) -> Word {
        let mut v = Vec::with_capacity(self.len());
        self.push_letters(&mut v);
        Word(v)
    }

    fn push_letters(&self, out: &mut Vec<Letter>) {
        match self {
            NWord::Leaf(l) => out.push(*l),
            NWord::Pair(a, b) => {
                a.push_letters(out);
                b.push_letters(out);
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            NWord::Leaf(_) => 1,
            NWord::Pair(a, b) => a.len() + b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_letter(&self) -> Letter {
        match self {
            NWord::Leaf(l) => *l,
            NWord::Pair(a, b) => a.max_letter().max(b.max_letter()),
        }
    }

    /// Renders the tree in parenthesis notation, e.g. `(x3,(x2,x1))`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayNWord<'a> {
        DisplayNWord { word: self, alphabet }
    }
}

pub struct DisplayNWord<'a> {
    word: &'a NWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayNWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.word {
            NWord::Leaf(l) => f.write_str(self.alphabet.name(*l)),
            NWord::Pair(a, b) => write!(
                f,
                "({},{})",
                a.display(self.alphabet),
                b.display(self.alphabet)
            ),
        }
    }
}

/// The unique Lyndon–Shirshov bracketing of a Lyndon–Shirshov word.
pub fn bracket_canonical(u: &[Letter]) -> Result<NWord> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_alsw(u) {
        return Err(Error::NotLyndon(Word::from(u)));
    }
    Ok(bracket_unchecked(u))
}

pub(crate) fn bracket_unchecked(u: &[Letter]) -> NWord {
    match standard_split(u) {
        None => NWord::Leaf(u[0]),
        Some(i) => NWord::pair(bracket_unchecked(&u[..i]), bracket_unchecked(&u[i..])),
    }
}

/// Non-associative Lyndon–Shirshov test.
pub fn is_nlsw(t: &NWord) -> bool {
    is_alsw(&t.word()) && nlsw_shape(t)
}

// Conditions (ii) and (iii), recursively; (i) is checked once at the root of
// each recursive call through `is_nlsw` on the halves.
fn nlsw_shape(t: &NWord) -> bool {
    match t {
        NWord::Leaf(_) => true,
        NWord::Pair(a, b) => {
            let (wa, wb) = (a.word(), b.word());
            if lex_cmp(&wa, &wb) != Ordering::Greater {
                return false;
            }
            if let NWord::Pair(_, a2) = a.as_ref() {
                if lex_cmp(&wb, &a2.word()) == Ordering::Less {
                    return false;
                }
            }
            is_nlsw(a) && is_nlsw(b)
        }
    }
}
