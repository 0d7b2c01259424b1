//! Bracket expansion into the Lyndon–Shirshov basis, special bracketings,
//! d-decompositions and the derivation `∂_d`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::poly::LiePolynomial;
use crate::words::{
    alsw_factorization, bracket_unchecked, is_alsw, is_nlsw, lex_cmp, standard_split, Letter,
    NWord, Word,
};

/// Order in which the Jacobi rewrite is applied to a pair `((u1,u2),v)` that
/// is not already a basis word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExpandStrategy {
    /// `((u1,v),u2) + (u1,(u2,v))`, memoized per pair of basis words.
    #[default]
    LeftFirst,
    /// `(u1,(u2,v)) - (u2,(u1,v))`, no memo.
    RightFirst,
}

thread_local! {
    static BRACKETS: RefCell<HashMap<(Word, Word), Rc<LiePolynomial>>> = RefCell::new(HashMap::new());
}

/// Drops the per-thread table of expanded basis brackets.
pub fn clear_bracket_cache() {
    BRACKETS.with(|m| m.borrow_mut().clear());
}

/// Representation of an arbitrary bracketing in the Lyndon–Shirshov basis.
pub fn expand(t: &NWord) -> LiePolynomial {
    expand_with(t, ExpandStrategy::LeftFirst)
}

pub fn expand_with(t: &NWord, strategy: ExpandStrategy) -> LiePolynomial {
    match t {
        NWord::Leaf(l) => LiePolynomial::letter(*l),
        NWord::Pair(a, b) => {
            let (pa, pb) = match strategy {
                ExpandStrategy::LeftFirst => {
                    let pa = expand_with(a, strategy);
                    (pa, expand_with(b, strategy))
                }
                ExpandStrategy::RightFirst => {
                    let pb = expand_with(b, strategy);
                    (expand_with(a, strategy), pb)
                }
            };
            bracket_with(&pa, &pb, strategy)
        }
    }
}

/// Lie bracket of two polynomials.
pub fn bracket(p: &LiePolynomial, q: &LiePolynomial) -> LiePolynomial {
    bracket_with(p, q, ExpandStrategy::LeftFirst)
}

fn bracket_with(p: &LiePolynomial, q: &LiePolynomial, strategy: ExpandStrategy) -> LiePolynomial {
    let mut out = LiePolynomial::zero();
    match strategy {
        ExpandStrategy::LeftFirst => {
            for (u, a) in p.terms() {
                for (v, b) in q.terms() {
                    let r = bracket_basis(u, v);
                    out.add_scaled(&r, &(a * b));
                }
            }
        }
        ExpandStrategy::RightFirst => {
            for (v, b) in q.terms().rev() {
                for (u, a) in p.terms().rev() {
                    let r = bracket_basis_right(u, v);
                    out.add_scaled(&r, &(a * b));
                }
            }
        }
    }
    out
}

/// `([u],[v])` for Lyndon–Shirshov words `u`, `v`.
pub fn bracket_basis(u: &Word, v: &Word) -> Rc<LiePolynomial> {
    let key = (u.clone(), v.clone());
    if let Some(hit) = BRACKETS.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let r = Rc::new(compute_bracket(u, v));
    BRACKETS.with(|m| m.borrow_mut().insert(key, r.clone()));
    r
}

fn compute_bracket(u: &Word, v: &Word) -> LiePolynomial {
    match lex_cmp(u, v) {
        Ordering::Equal => LiePolynomial::zero(),
        Ordering::Less => -(*bracket_basis(v, u)).clone(),
        Ordering::Greater => match jacobi_split(u, v) {
            None => LiePolynomial::basis_unchecked(u.concat(v)),
            Some(i) => {
                let (u1, u2) = (Word::from(&u[..i]), Word::from(&u[i..]));
                let left = bracket(&bracket_basis(&u1, v), &LiePolynomial::basis_unchecked(u2.clone()));
                let right = bracket(&LiePolynomial::basis_unchecked(u1), &bracket_basis(&u2, v));
                left + &right
            }
        },
    }
}

fn bracket_basis_right(u: &Word, v: &Word) -> LiePolynomial {
    match lex_cmp(u, v) {
        Ordering::Equal => LiePolynomial::zero(),
        Ordering::Less => -bracket_basis_right(v, u),
        Ordering::Greater => match jacobi_split(u, v) {
            None => LiePolynomial::basis_unchecked(u.concat(v)),
            Some(i) => {
                let (u1, u2) = (Word::from(&u[..i]), Word::from(&u[i..]));
                let s = ExpandStrategy::RightFirst;
                let a = bracket_with(
                    &LiePolynomial::basis_unchecked(u1.clone()),
                    &bracket_basis_right(&u2, v),
                    s,
                );
                let b = bracket_with(
                    &LiePolynomial::basis_unchecked(u2),
                    &bracket_basis_right(&u1, v),
                    s,
                );
                a - &b
            }
        },
    }
}

// For u > v, `None` when ([u],[v]) is already a basis word, otherwise the
// split point of u's canonical halves.
fn jacobi_split(u: &[Letter], v: &[Letter]) -> Option<usize> {
    let i = standard_split(u)?;
    match lex_cmp(&u[i..], v) {
        Ordering::Greater => Some(i),
        _ => None,
    }
}

/// The special bracketing `[w]_d` for the occurrence `w[start..start+len]`
/// of a Lyndon–Shirshov word `d` inside the Lyndon–Shirshov word `w`.
///
/// The minimal subtree of `[w]` covering the occurrence has word `d c`; it is
/// replaced by `((…(([d],[c1]),[c2])…),[cm])` where `c = c1 … cm` is the
/// nondecreasing Lyndon–Shirshov factorization. The result is usually not a
/// basis word.
pub fn special_bracket(w: &[Letter], start: usize, len: usize) -> Result<NWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let end = start + len;
    if len == 0 || end > w.len() {
        return Err(Error::OccurrenceOutOfBounds { start, end, len: w.len() });
    }
    if !is_alsw(w) {
        return Err(Error::NotLyndon(Word::from(w)));
    }
    if !is_alsw(&w[start..end]) {
        return Err(Error::NotLyndon(Word::from(&w[start..end])));
    }
    rebracket(w, 0, start, end)
}

// `w` is the word of the canonical subtree spanning absolute positions
// `offset..offset + w.len()`.
fn rebracket(w: &[Letter], offset: usize, start: usize, end: usize) -> Result<NWord> {
    if let Some(i) = standard_split(w) {
        let mid = offset + i;
        if end <= mid {
            let left = rebracket(&w[..i], offset, start, end)?;
            return Ok(NWord::pair(left, bracket_unchecked(&w[i..])));
        }
        if start >= mid {
            let right = rebracket(&w[i..], mid, start, end)?;
            return Ok(NWord::pair(bracket_unchecked(&w[..i]), right));
        }
    }
    if start != offset {
        return Err(Error::CoverNotPrefixed);
    }
    let dlen = end - start;
    let (d, c) = w.split_at(dlen);
    let mut tree = bracket_unchecked(d);
    let mut pos = 0;
    for flen in alsw_factorization(c) {
        tree = NWord::pair(tree, bracket_unchecked(&c[pos..pos + flen]));
        pos += flen;
    }
    Ok(tree)
}

/// Bracketing shape with `*` for each d-indecomposable factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Pattern {
    Star,
    Pair(Box<Pattern>, Box<Pattern>),
}

impl Pattern {
    pub fn pair(a: Pattern, b: Pattern) -> Pattern {
        Pattern::Pair(Box::new(a), Box::new(b))
    }

    pub fn stars(&self) -> usize {
        match self {
            Pattern::Star => 1,
            Pattern::Pair(a, b) => a.stars() + b.stars(),
        }
    }

    /// Replaces the stars, left to right, by `factors`.
    pub fn substitute(&self, factors: &[NWord]) -> Option<NWord> {
        if factors.len() != self.stars() {
            return None;
        }
        let mut it = factors.iter().cloned();
        Some(self.fill(&mut it))
    }

    fn fill(&self, it: &mut impl Iterator<Item = NWord>) -> NWord {
        match self {
            Pattern::Star => it.next().expect("star count checked"),
            Pattern::Pair(a, b) => {
                let left = a.fill(it);
                NWord::pair(left, b.fill(it))
            }
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Star => f.write_str("*"),
            Pattern::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// A basis word written as a bracketing of d-indecomposable factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DDecomposition {
    pub factors: Vec<NWord>,
    pub pattern: Pattern,
}

impl DDecomposition {
    pub fn reassemble(&self) -> NWord {
        self.pattern.substitute(&self.factors).expect("pattern matches factors")
    }
}

/// Splits `t = ([v],[w])` recursively while `w > d`.
pub fn d_decompose(t: &NWord, d: &[Letter]) -> Result<DDecomposition> {
    check_derivation_args(t, d)?;
    let mut factors = Vec::new();
    let pattern = decompose_into(t, d, &mut factors);
    Ok(DDecomposition { factors, pattern })
}

fn decompose_into(t: &NWord, d: &[Letter], factors: &mut Vec<NWord>) -> Pattern {
    if let NWord::Pair(v, w) = t {
        if lex_cmp(&w.word(), d) == Ordering::Greater {
            let left = decompose_into(v, d, factors);
            let right = decompose_into(w, d, factors);
            return Pattern::pair(left, right);
        }
    }
    factors.push(t.clone());
    Pattern::Star
}

fn check_derivation_args(t: &NWord, d: &[Letter]) -> Result<()> {
    if d.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_alsw(d) {
        return Err(Error::NotLyndon(Word::from(d)));
    }
    if !is_nlsw(t) {
        return Err(Error::NotNlsw);
    }
    let word = t.word();
    if lex_cmp(&word, d) != Ordering::Greater {
        return Err(Error::NotAbove { word, d: Word::from(d) });
    }
    Ok(())
}

/// `∂_d[u] = Σ_i ([u_1],…,([u_i],[d]),…,[u_k])_p`, each summand expanded.
///
/// When the greatest letters of the factors are distinct and differ from the
/// greatest letter of `d`, each summand is already a basis word. Outside that
/// case the same formula is applied and summands go through [`expand`].
pub fn derive(t: &NWord, d: &[Letter]) -> Result<LiePolynomial> {
    let dec = d_decompose(t, d)?;
    let dt = bracket_unchecked(d);
    let mut out = LiePolynomial::zero();
    let mut factors = dec.factors.clone();
    for i in 0..factors.len() {
        let original = factors[i].clone();
        factors[i] = NWord::pair(original.clone(), dt.clone());
        let summand = dec.pattern.substitute(&factors).expect("same star count");
        out = out + &expand(&summand);
        factors[i] = original;
    }
    Ok(out)
}
