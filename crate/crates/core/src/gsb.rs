//! The relation set `S(G)`, reduction to normal form, compositions and the
//! Gröbner–Shirshov check, and basis enumeration for `L(G)` and `L(G, n)`.
//!
//! Every element of `S(G)` is a single basis word `([ũ], b)` where `b` is a
//! letter not in `ũ` that commutes with every letter of `ũ`. Since the
//! relators are monomials, a relator is identified with its associative word.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::rc::Rc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::CommutationGraph;
use crate::lie::{expand, special_bracket};
use crate::poly::LiePolynomial;
use crate::words::{
    bracket_unchecked, enumerate_alsw, is_alsw, lex_cmp, Letter, NWord, Word,
};

/// Default cap on the number of terms a polynomial may reach while reducing.
pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub tree: NWord,
    pub word: Word,
}

impl Relator {
    /// `([ũ], b)` split into its halves.
    pub fn parts(&self) -> (&NWord, Letter) {
        match &self.tree {
            NWord::Pair(u, b) => match b.as_ref() {
                NWord::Leaf(b) => (u, *b),
                NWord::Pair(..) => unreachable!("relators end in a letter"),
            },
            NWord::Leaf(_) => unreachable!("relators have length at least two"),
        }
    }
}

/// `S(G)` up to a fixed word length, indexed by leading word.
#[derive(Clone, Debug)]
pub struct RelationSet {
    graph: CommutationGraph,
    max_degree: usize,
    relators: Vec<Relator>,
    index: HashMap<Word, usize>,
    longest: usize,
}

impl RelationSet {
    pub fn graph(&self) -> &CommutationGraph {
        &self.graph
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// All relators, ascending deg-lex.
    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn of_degree(&self, d: usize) -> impl Iterator<Item = &Relator> {
        self.relators.iter().filter(move |r| r.word.len() == d)
    }

    pub fn lookup(&self, w: &[Letter]) -> Option<&Relator> {
        self.index.get(&Word::from(w)).map(|&i| &self.relators[i])
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        self.index.contains_key(&Word::from(w))
    }

    pub fn len(&self) -> usize {
        self.relators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    /// Keeps only the relators for which `keep` returns true. The result is
    /// in general no longer closed under compositions.
    pub fn retain(&mut self, keep: impl FnMut(&Relator) -> bool) {
        self.relators.retain(keep);
        self.index = self.relators.iter().enumerate().map(|(i, r)| (r.word.clone(), i)).collect();
        self.longest = self.relators.iter().map(|r| r.word.len()).max().unwrap_or(0);
    }
}

/// Generates every element of `S(G)` of word length `2..=max_degree`.
pub fn generate_s(g: &CommutationGraph, max_degree: usize) -> Result<RelationSet> {
    if max_degree < 2 {
        return Err(Error::DegreeBound { min: 2, got: max_degree });
    }
    let mut relators = Vec::new();
    for u in enumerate_alsw(g.len(), max_degree - 1) {
        let ut = bracket_unchecked(&u);
        for b in g.alphabet().letters() {
            if u.contains(&b) || !g.adjacent_to_all(b, &u) {
                continue;
            }
            if !closes_basis_word(&ut, b) {
                continue;
            }
            let word = u.concat(&[b]);
            check_relator_shape(&word)?;
            relators.push(Relator { tree: NWord::pair(ut.clone(), NWord::Leaf(b)), word });
        }
    }
    relators.sort_by(|a, b| a.word.cmp(&b.word));
    let index = relators.iter().enumerate().map(|(i, r)| (r.word.clone(), i)).collect();
    let longest = relators.iter().map(|r| r.word.len()).max().unwrap_or(0);
    Ok(RelationSet { graph: g.clone(), max_degree, relators, index, longest })
}

// ([u], b) is a basis word iff ub is Lyndon-Shirshov, u > b and, for
// [u] = ([u1],[u2]), b >= u2.
fn closes_basis_word(u: &NWord, b: Letter) -> bool {
    let word = u.word();
    if lex_cmp(&word, &[b]) != Ordering::Greater {
        return false;
    }
    if let NWord::Pair(_, u2) = u {
        if lex_cmp(&[b], &u2.word()) == Ordering::Less {
            return false;
        }
    }
    is_alsw(&word.concat(&[b]))
}

// The greatest letter occurs once and the last letter is the second greatest.
fn check_relator_shape(w: &[Letter]) -> Result<()> {
    let top = w[0];
    let last = w[w.len() - 1];
    let ok = w.iter().filter(|&&l| l == top).count() == 1
        && w[1..w.len() - 1].iter().all(|&l| l < last)
        && last < top;
    if ok {
        Ok(())
    } else {
        Err(Error::MalformedRelator(Word::from(w)))
    }
}

/// Which relator occurrence a reduction step rewrites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Leftmost start, then shortest relator word.
    #[default]
    LeftmostShortest,
    /// Rightmost start, then longest relator word.
    RightmostLongest,
}

/// A relator occurrence `u[start..start + len]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub start: usize,
    pub len: usize,
}

impl RelationSet {
    /// First relator occurrence in `u` under the given tie-break.
    pub fn find_occurrence(&self, u: &[Letter], tie: TieBreak) -> Option<Occurrence> {
        let n = u.len();
        let longest = self.longest.min(n);
        if longest < 2 {
            return None;
        }
        let hit = |start: usize, len: usize| self.contains(&u[start..start + len]);
        match tie {
            TieBreak::LeftmostShortest => (0..n - 1).find_map(|start| {
                (2..=longest.min(n - start))
                    .find(|&len| hit(start, len))
                    .map(|len| Occurrence { start, len })
            }),
            TieBreak::RightmostLongest => (0..n - 1).rev().find_map(|start| {
                (2..=longest.min(n - start))
                    .rev()
                    .find(|&len| hit(start, len))
                    .map(|len| Occurrence { start, len })
            }),
        }
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeTooLarge { degree, max: self.max_degree });
        }
        Ok(())
    }
}

/// True iff no relator word is a factor of `u`.
pub fn is_s_reduced(u: &[Letter], s: &RelationSet) -> Result<bool> {
    if !is_alsw(u) {
        return Err(Error::NotLyndon(Word::from(u)));
    }
    s.check_degree(u.len())?;
    Ok(s.find_occurrence(u, TieBreak::LeftmostShortest).is_none())
}

thread_local! {
    static REDUCERS: RefCell<HashMap<(Word, Occurrence), Rc<LiePolynomial>>> = RefCell::new(HashMap::new());
}

/// `expand([u]_s̄)` for a relator occurrence in `u`; memoized per thread.
/// Depends only on the word and the occurrence, not on the graph.
pub fn reducer(u: &Word, occ: Occurrence) -> Result<Rc<LiePolynomial>> {
    let key = (u.clone(), occ);
    if let Some(hit) = REDUCERS.with(|m| m.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let r = Rc::new(expand(&special_bracket(u, occ.start, occ.len)?));
    REDUCERS.with(|m| m.borrow_mut().insert(key, r.clone()));
    Ok(r)
}

#[derive(Clone, Copy, Debug)]
pub struct ReduceOptions {
    pub tie: TieBreak,
    pub max_terms: usize,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { tie: TieBreak::default(), max_terms: DEFAULT_MAX_TERMS }
    }
}

/// Normal form of `p` modulo the ideal generated by `S(G)`: a combination of
/// S-reduced basis words only.
pub fn normal_form(p: &LiePolynomial, s: &RelationSet) -> Result<LiePolynomial> {
    normal_form_with(p, s, ReduceOptions::default())
}

pub fn normal_form_with(
    p: &LiePolynomial,
    s: &RelationSet,
    opts: ReduceOptions,
) -> Result<LiePolynomial> {
    if let Some(d) = p.max_degree() {
        s.check_degree(d)?;
    }
    if p.len() > opts.max_terms {
        return Err(Error::TooManyTerms(opts.max_terms));
    }
    let mut p = p.clone();
    // Everything at or above `cursor` is S-reduced; reductions only add
    // smaller words.
    let mut cursor: Option<Word> = None;
    loop {
        let next = {
            let mut below: Box<dyn Iterator<Item = (&Word, _)>> = match &cursor {
                Some(c) => Box::new(p.range_below(c).rev()),
                None => Box::new(p.terms().rev()),
            };
            below.find_map(|(u, c)| {
                s.find_occurrence(u, opts.tie).map(|occ| (u.clone(), c.clone(), occ))
            })
        };
        let Some((u, c, occ)) = next else { break };
        let r = reducer(&u, occ)?;
        let lead = r.coeff(&u).cloned().unwrap_or_else(Zero::zero);
        debug_assert!(r.leading().map(|(w, _)| w) == Some(&u));
        if lead.is_zero() {
            return Err(Error::MalformedRelator(u));
        }
        p.add_scaled(&r, &-(c / lead));
        if p.len() > opts.max_terms {
            return Err(Error::TooManyTerms(opts.max_terms));
        }
        cursor = Some(u);
    }
    Ok(p)
}

/// Decides `p = q` in `L(G)`.
pub fn equal_in_pc(p: &LiePolynomial, q: &LiePolynomial, s: &RelationSet) -> Result<bool> {
    let diff = p.clone() - q;
    Ok(normal_form(&diff, s)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    /// `w = f̄ a = b ḡ` with the two leading words overlapping.
    Intersection,
    /// `w = f̄ = a ḡ b`.
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    /// Index of `f` in [`RelationSet::relators`].
    pub f: usize,
    pub g: usize,
    pub w: Word,
    /// Start of `ḡ` inside `w`.
    pub g_start: usize,
    pub polynomial: LiePolynomial,
}

/// All compositions of intersection and inclusion whose word has length at
/// most `max_len`, sorted by overlap word (deg-lex), then kind and indices.
pub fn find_compositions(s: &RelationSet, max_len: usize) -> Result<Vec<Composition>> {
    let rel = s.relators();
    let mut out = Vec::new();
    for (fi, f) in rel.iter().enumerate() {
        let lf = f.word.len();
        for (gi, g) in rel.iter().enumerate() {
            let lg = g.word.len();
            for k in 1..lf.min(lg) {
                if lf + lg - k > max_len || f.word[lf - k..] != g.word[..k] {
                    continue;
                }
                let w = f.word.concat(&g.word[k..]);
                if !is_alsw(&w) {
                    return Err(Error::OverlapNotLyndon(w));
                }
                let left = expand(&special_bracket(&w, 0, lf)?);
                let right = expand(&special_bracket(&w, lf - k, lg)?);
                out.push(Composition {
                    kind: CompositionKind::Intersection,
                    f: fi,
                    g: gi,
                    g_start: lf - k,
                    polynomial: left - &right,
                    w,
                });
            }
        }
        if lf > max_len {
            continue;
        }
        // Inclusions: some other relator word inside f̄.
        let whole = expand(&f.tree);
        for start in 0..lf {
            for len in 2..=(lf - start) {
                if len == lf {
                    continue;
                }
                let Some(&gi) = s.index.get(&Word::from(&f.word[start..start + len])) else {
                    continue;
                };
                let inner = expand(&special_bracket(&f.word, start, len)?);
                out.push(Composition {
                    kind: CompositionKind::Inclusion,
                    f: fi,
                    g: gi,
                    w: f.word.clone(),
                    g_start: start,
                    polynomial: whole.clone() - &inner,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        a.w.cmp(&b.w)
            .then(a.kind.cmp(&b.kind))
            .then(a.f.cmp(&b.f))
            .then(a.g.cmp(&b.g))
            .then(a.g_start.cmp(&b.g_start))
    });
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CheckedComposition {
    pub composition: Composition,
    pub residue: LiePolynomial,
}

/// Outcome of reducing every composition of `S(G)` up to a degree bound.
#[derive(Clone, Debug)]
pub struct CompositionReport {
    pub max_degree: usize,
    pub relators: usize,
    pub pairs_examined: usize,
    pub compositions: Vec<CheckedComposition>,
    pub pass: bool,
}

impl CompositionReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckedComposition> {
        self.compositions.iter().filter(|c| !c.residue.is_zero())
    }

    pub fn count(&self, kind: CompositionKind) -> usize {
        self.compositions.iter().filter(|c| c.composition.kind == kind).count()
    }
}

/// Generates `S(G)` to `max_degree`, forms every composition whose word fits
/// in that degree and reduces it. Passes iff every residue is zero.
pub fn check_gsb(g: &CommutationGraph, max_degree: usize) -> Result<CompositionReport> {
    let s = generate_s(g, max_degree)?;
    check_relations(&s)
}

pub fn check_relations(s: &RelationSet) -> Result<CompositionReport> {
    let comps = find_compositions(s, s.max_degree())?;
    let mut checked = Vec::with_capacity(comps.len());
    for c in comps {
        let residue = normal_form(&c.polynomial, s)?;
        checked.push(CheckedComposition { composition: c, residue });
    }
    let pass = checked.iter().all(|c| c.residue.is_zero());
    Ok(CompositionReport {
        max_degree: s.max_degree(),
        relators: s.len(),
        pairs_examined: s.len() * s.len(),
        compositions: checked,
        pass,
    })
}

/// S-reduced Lyndon–Shirshov words per degree; entry `d - 1` holds degree
/// `d`, ascending deg-lex.
pub fn enumerate_basis(g: &CommutationGraph, max_degree: usize) -> Result<Vec<Vec<NWord>>> {
    if max_degree < 1 {
        return Err(Error::DegreeBound { min: 1, got: max_degree });
    }
    let s = generate_s(g, max_degree.max(2))?;
    Ok(basis_from_relations(&s, max_degree))
}

pub(crate) fn basis_from_relations(s: &RelationSet, max_degree: usize) -> Vec<Vec<NWord>> {
    let mut out = vec![Vec::new(); max_degree];
    for u in enumerate_alsw(s.graph().len(), max_degree) {
        if s.find_occurrence(&u, TieBreak::LeftmostShortest).is_none() {
            out[u.len() - 1].push(bracket_unchecked(&u));
        }
    }
    out
}

/// Basis of the nilpotent quotient `L(G, n)`: S-reduced words of length at
/// most `n - 1`.
pub fn nilpotent_basis(g: &CommutationGraph, n: usize) -> Result<Vec<Vec<NWord>>> {
    if n < 2 {
        return Err(Error::DegreeBound { min: 2, got: n });
    }
    enumerate_basis(g, n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff;

    fn l(i: u8) -> NWord {
        NWord::Leaf(i - 1)
    }

    fn p(a: NWord, b: NWord) -> NWord {
        NWord::pair(a, b)
    }

    fn w(s: &[u8]) -> Word {
        Word::new(s.iter().map(|&x| x - 1).collect())
    }

    fn trees(s: &RelationSet) -> Vec<NWord> {
        s.relators().iter().map(|r| r.tree.clone()).collect()
    }

    #[test]
    fn relators_of_the_path() {
        let g = CommutationGraph::path(3);
        let s2 = generate_s(&g, 2).unwrap();
        assert_eq!(trees(&s2), vec![p(l(2), l(1)), p(l(3), l(2))]);
        let s3 = generate_s(&g, 3).unwrap();
        let deg3: Vec<_> = s3.of_degree(3).map(|r| r.tree.clone()).collect();
        assert_eq!(deg3, vec![p(p(l(3), l(1)), l(2))]);
        assert!(generate_s(&CommutationGraph::edgeless(3), 6).unwrap().is_empty());
        assert!(generate_s(&g, 1).is_err());
    }

    #[test]
    fn s_reduced_examples() {
        let s = generate_s(&CommutationGraph::path(3), 3).unwrap();
        assert!(is_s_reduced(&w(&[3, 1]), &s).unwrap());
        assert!(!is_s_reduced(&w(&[3, 2, 1]), &s).unwrap());
        assert!(!is_s_reduced(&w(&[3, 1, 2]), &s).unwrap());
        assert!(matches!(
            is_s_reduced(&w(&[3, 1, 1, 1]), &s),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn normal_form_examples() {
        let s = generate_s(&CommutationGraph::path(3), 3).unwrap();
        let e = expand(&p(l(3), p(l(2), l(1))));
        assert_eq!(e, LiePolynomial::basis(w(&[3, 2, 1])).unwrap());
        assert!(normal_form(&e, &s).unwrap().is_zero());
        let x31 = LiePolynomial::basis(w(&[3, 1])).unwrap();
        assert_eq!(normal_form(&x31, &s).unwrap(), x31);

        let k2 = generate_s(&CommutationGraph::complete(2), 2).unwrap();
        assert!(normal_form(&expand(&p(l(2), l(1))), &k2).unwrap().is_zero());
    }

    #[test]
    fn normal_form_checks_degree() {
        let s = generate_s(&CommutationGraph::path(3), 2).unwrap();
        let e = LiePolynomial::basis(w(&[3, 1, 1])).unwrap();
        assert!(matches!(normal_form(&e, &s), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn term_guard() {
        let s = generate_s(&CommutationGraph::path(3), 4).unwrap();
        let e = expand(&p(p(p(l(3), l(2)), l(1)), l(1)));
        let opts = ReduceOptions { max_terms: 0, ..Default::default() };
        assert!(matches!(normal_form_with(&e, &s, opts), Err(Error::TooManyTerms(0))));
    }

    #[test]
    fn composition_example_on_the_path() {
        let s = generate_s(&CommutationGraph::path(3), 4).unwrap();
        let comps = find_compositions(&s, 4).unwrap();
        let target = comps
            .iter()
            .find(|c| c.kind == CompositionKind::Intersection && c.w == w(&[3, 1, 2, 1]))
            .expect("overlap of x3x1x2 and x2x1");
        assert_eq!(s.relators()[target.f].word, w(&[3, 1, 2]));
        assert_eq!(s.relators()[target.g].word, w(&[2, 1]));
        assert_eq!(
            target.polynomial,
            LiePolynomial::from_terms([(w(&[3, 1, 1, 2]), coeff(1))]).unwrap()
        );
    }

    #[test]
    fn no_self_overlap_in_k2() {
        let s = generate_s(&CommutationGraph::complete(2), 6).unwrap();
        assert_eq!(s.len(), 1);
        assert!(find_compositions(&s, 6).unwrap().is_empty());
    }

    #[test]
    fn gsb_small_graphs() {
        for g in [CommutationGraph::path(3), CommutationGraph::complete(3)] {
            let report = check_gsb(&g, 6).unwrap();
            assert!(report.pass, "{:?}", report.failures().next());
        }
    }

    #[test]
    fn dropping_a_relator_leaves_a_nontrivial_composition() {
        let mut s = generate_s(&CommutationGraph::complete(3), 4).unwrap();
        s.retain(|r| !r.word.windows(2).any(|f| f == [2, 0]));
        let report = check_relations(&s).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn basis_examples() {
        let b = enumerate_basis(&CommutationGraph::path(3), 3).unwrap();
        assert_eq!(b[0], vec![l(1), l(2), l(3)]);
        assert_eq!(b[1], vec![p(l(3), l(1))]);
        assert_eq!(b[2], vec![p(p(l(3), l(1)), l(1)), p(l(3), p(l(3), l(1)))]);

        let k = enumerate_basis(&CommutationGraph::complete(4), 5).unwrap();
        assert_eq!(k.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 0, 0, 0, 0]);

        let free = enumerate_basis(&CommutationGraph::edgeless(2), 5).unwrap();
        assert_eq!(free.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 1, 2, 3, 6]);
    }

    #[test]
    fn nilpotent_examples() {
        let b = nilpotent_basis(&CommutationGraph::path(3), 3).unwrap();
        assert_eq!(b, vec![vec![l(1), l(2), l(3)], vec![p(l(3), l(1))]]);
        let b = nilpotent_basis(&CommutationGraph::path(4), 2).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].len(), 4);
        let b = nilpotent_basis(&CommutationGraph::edgeless(2), 4).unwrap();
        assert_eq!(b.iter().map(Vec::len).sum::<usize>(), 5);
        assert!(nilpotent_basis(&CommutationGraph::path(3), 1).is_err());
    }

    #[test]
    fn equality_examples() {
        let s = generate_s(&CommutationGraph::path(3), 3).unwrap();
        let e = expand(&p(l(3), p(l(2), l(1))));
        assert!(equal_in_pc(&e, &LiePolynomial::zero(), &s).unwrap());
        let x31 = LiePolynomial::basis(w(&[3, 1])).unwrap();
        assert!(equal_in_pc(&x31, &x31, &s).unwrap());
        assert!(!equal_in_pc(&x31, &LiePolynomial::zero(), &s).unwrap());
    }
}
