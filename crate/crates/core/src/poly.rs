//! Lie polynomials in the Lyndon–Shirshov basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{bracket_unchecked, is_alsw, Alphabet, NWord, Word};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite linear combination of non-associative Lyndon–Shirshov words.
///
/// Basis words are keyed by their underlying associative word (the bracketing
/// is determined by it), and keys are ordered deg-lex, so the last entry is
/// the leading monomial. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LiePolynomial {
    terms: BTreeMap<Word, Coeff>,
}

impl LiePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `[u]`.
    pub fn basis(u: Word) -> Result<Self> {
        if !is_alsw(&u) {
            return Err(Error::NotLyndon(u));
        }
        Ok(Self::basis_unchecked(u))
    }

    pub(crate) fn basis_unchecked(u: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(u, Coeff::one());
        LiePolynomial { terms }
    }

    pub fn letter(l: crate::words::Letter) -> Self {
        Self::basis_unchecked(Word::letter(l))
    }

    /// Builds a polynomial from (Lyndon–Shirshov word, coefficient) pairs,
    /// collecting like terms.
    pub fn from_terms<I: IntoIterator<Item = (Word, Coeff)>>(terms: I) -> Result<Self> {
        let mut p = Self::zero();
        for (w, c) in terms {
            if !is_alsw(&w) {
                return Err(Error::NotLyndon(w));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending deg-lex order of their words.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Terms as canonical bracketings, descending deg-lex.
    pub fn nword_terms(&self) -> Vec<(NWord, Coeff)> {
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| (bracket_unchecked(w), c.clone()))
            .collect()
    }

    pub fn coeff(&self, u: &[crate::words::Letter]) -> Option<&Coeff> {
        self.terms.get(&Word::from(u))
    }

    pub(crate) fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &LiePolynomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> LiePolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        LiePolynomial {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Greatest word in deg-lex with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// The leading monomial as a bracketed word.
    pub fn leading_monomial(&self) -> Result<(NWord, Coeff)> {
        self.leading()
            .map(|(w, c)| (bracket_unchecked(w), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|w| w.len())
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.len())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub(crate) fn range_below(&self, w: &Word) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> {
        self.terms.range(..w.clone())
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayPoly<'a> {
        DisplayPoly { poly: self, alphabet }
    }
}

impl fmt::Debug for LiePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().rev().map(|(w, c)| (w, c.to_string()))).finish()
    }
}

impl Neg for LiePolynomial {
    type Output = LiePolynomial;

    fn neg(mut self) -> LiePolynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Add<&LiePolynomial> for LiePolynomial {
    type Output = LiePolynomial;

    fn add(mut self, rhs: &LiePolynomial) -> LiePolynomial {
        self.add_scaled(rhs, &Coeff::one());
        self
    }
}

impl Sub<&LiePolynomial> for LiePolynomial {
    type Output = LiePolynomial;

    fn sub(mut self, rhs: &LiePolynomial) -> LiePolynomial {
        self.add_scaled(rhs, &-Coeff::one());
        self
    }
}

/// Surface syntax, e.g. `2*(x2,x1) - 1/3*x1`; terms descending deg-lex.
pub struct DisplayPoly<'a> {
    poly: &'a LiePolynomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.poly.terms.iter().rev().enumerate() {
            let t = bracket_unchecked(w);
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}", t.display(self.alphabet))?;
        }
        Ok(())
    }
}
