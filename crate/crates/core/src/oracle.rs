//! Brute-force cross-checks that do not use the relation set.
//!
//! * [`dims_by_linear_algebra`] builds the ideal `I(G)` degree by degree as a
//!   subspace of the free Lie algebra and computes quotient dimensions by
//!   exact elimination.
//! * [`dims_by_clique_series`] inverts the clique polynomial identity
//!   `∏_d (1 - t^d)^{dim L_d} = Σ_k (-1)^k c_k t^k`, a known fact about
//!   partially commutative algebras that is independent of this crate's
//!   rewriting engine.
//! * [`necklace_count`] is the Witt formula for free Lie algebras.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::CommutationGraph;
use crate::lie::bracket;
use crate::poly::{Coeff, LiePolynomial};
use crate::words::{bracket_unchecked, enumerate_alsw, NWord, Word};

/// Default refusal threshold on `rows * columns` of a degree component.
pub const DEFAULT_MAX_CELLS: usize = 200_000_000;

/// Row-echelon basis of a subspace, one row per pivot word, each row monic
/// at its leading word.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<Word, LiePolynomial>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &LiePolynomial> {
        self.rows.values()
    }

    /// Reduces `p` by leading terms until its leading word is not a pivot.
    pub fn reduce(&self, mut p: LiePolynomial) -> LiePolynomial {
        while let Some((lead, c)) = p.leading() {
            let Some(row) = self.rows.get(lead) else { break };
            let c = -c.clone();
            p.add_scaled(row, &c);
        }
        p
    }

    /// Adds `p` to the span; returns true if the rank grew.
    pub fn insert(&mut self, p: LiePolynomial) -> bool {
        let r = self.reduce(p);
        let Some((lead, c)) = r.leading() else { return false };
        let lead = lead.clone();
        let inv = Coeff::one() / c;
        self.rows.insert(lead, r.scale(&inv));
        true
    }

    pub fn contains(&self, p: &LiePolynomial) -> bool {
        self.reduce(p.clone()).is_zero()
    }
}

/// The homogeneous component `I(G)_d` inside the degree-`d` part of the free
/// Lie algebra.
#[derive(Clone, Debug)]
pub struct DegreeComponent {
    pub degree: usize,
    /// All Lyndon–Shirshov words of this degree, ascending deg-lex.
    pub basis: Vec<Word>,
    pub ideal: Echelon,
}

impl DegreeComponent {
    pub fn basis_nwords(&self) -> Vec<NWord> {
        self.basis.iter().map(|w| bracket_unchecked(w)).collect()
    }

    /// Coordinate vector of a homogeneous polynomial in [`Self::basis`].
    pub fn coordinates(&self, p: &LiePolynomial) -> Vec<Coeff> {
        self.basis
            .iter()
            .map(|w| p.coeff(w).cloned().unwrap_or_else(Coeff::zero))
            .collect()
    }

    /// Dense matrix of the echelon rows.
    pub fn matrix(&self) -> Vec<Vec<Coeff>> {
        self.ideal.rows().map(|r| self.coordinates(r)).collect()
    }

    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.ideal.rank()
    }
}

/// `I(G)` as a list of degree components `1..=max_degree`.
#[derive(Clone, Debug)]
pub struct IdealOracle {
    components: Vec<DegreeComponent>,
}

#[derive(Clone, Copy, Debug)]
pub enum Growth {
    /// `I_{d+1}` spanned by `(r, x)`.
    Right,
    /// Additionally `(x, r)`; the span is the same.
    BothSides,
}

impl IdealOracle {
    pub fn new(g: &CommutationGraph, max_degree: usize) -> Result<Self> {
        Self::build(g, max_degree, Growth::Right, DEFAULT_MAX_CELLS)
    }

    pub fn build(
        g: &CommutationGraph,
        max_degree: usize,
        growth: Growth,
        max_cells: usize,
    ) -> Result<Self> {
        if max_degree < 1 {
            return Err(Error::DegreeBound { min: 1, got: max_degree });
        }
        let n = g.len();
        let mut by_degree: Vec<Vec<Word>> = vec![Vec::new(); max_degree];
        for w in enumerate_alsw(n, max_degree) {
            by_degree[w.len() - 1].push(w);
        }
        let letters: Vec<LiePolynomial> = g.alphabet().letters().map(LiePolynomial::letter).collect();
        let mut components: Vec<DegreeComponent> = Vec::with_capacity(max_degree);
        for (i, basis) in by_degree.into_iter().enumerate() {
            let degree = i + 1;
            let mut ideal = Echelon::default();
            let spanning: Vec<LiePolynomial> = match degree {
                1 => Vec::new(),
                2 => g
                    .edges()
                    .map(|(a, b)| bracket(&letters[a as usize], &letters[b as usize]))
                    .collect(),
                _ => {
                    let prev = &components[i - 1].ideal;
                    let rows = prev.rank() * n * if matches!(growth, Growth::BothSides) { 2 } else { 1 };
                    if rows.saturating_mul(basis.len()) > max_cells {
                        return Err(Error::MatrixTooLarge { rows, cols: basis.len() });
                    }
                    let mut out = Vec::with_capacity(rows);
                    for r in prev.rows() {
                        for x in &letters {
                            out.push(bracket(r, x));
                            if let Growth::BothSides = growth {
                                out.push(bracket(x, r));
                            }
                        }
                    }
                    out
                }
            };
            for p in spanning {
                ideal.insert(p);
            }
            components.push(DegreeComponent { degree, basis, ideal });
        }
        Ok(IdealOracle { components })
    }

    pub fn max_degree(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, degree: usize) -> Option<&DegreeComponent> {
        degree.checked_sub(1).and_then(|i| self.components.get(i))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(DegreeComponent::quotient_dim).collect()
    }

    /// Whether a homogeneous polynomial lies in `I(G)`.
    pub fn contains(&self, p: &LiePolynomial) -> Result<bool> {
        let Some(d) = p.max_degree() else { return Ok(true) };
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let c = self
            .component(d)
            .ok_or(Error::DegreeTooLarge { degree: d, max: self.max_degree() })?;
        Ok(c.ideal.contains(p))
    }
}

/// `dim L(G)_d` for `d = 1..=max_degree` by exact linear algebra.
pub fn dims_by_linear_algebra(g: &CommutationGraph, max_degree: usize) -> Result<Vec<usize>> {
    Ok(IdealOracle::new(g, max_degree)?.dims())
}

/// Whether a homogeneous `p` lies in the ideal generated by the edges of `g`.
pub fn ideal_membership(p: &LiePolynomial, g: &CommutationGraph) -> Result<bool> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let Some(d) = p.max_degree() else { return Ok(true) };
    IdealOracle::new(g, d)?.contains(p)
}

/// Dimensions from the clique polynomial, by matching
/// `∏_{d≤n} (1 - t^d)^{l_d}` against `Σ_k (-1)^k c_k t^k` term by term.
pub fn dims_by_clique_series(g: &CommutationGraph, max_degree: usize) -> Result<Vec<i64>> {
    let counts = g.clique_counts(max_degree);
    let target: Vec<i128> = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i128 } else { -(c as i128) })
        .collect();
    let mut product = vec![0i128; max_degree + 1];
    product[0] = 1;
    let mut dims = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let l = product[n] - target[n];
        if l < 0 {
            return Err(Error::InvalidSeries(n));
        }
        let factor = binomial_series(l, n, max_degree).ok_or(Error::InvalidSeries(n))?;
        product = multiply_truncated(&product, &factor).ok_or(Error::InvalidSeries(n))?;
        dims.push(i64::try_from(l).map_err(|_| Error::InvalidSeries(n))?);
    }
    Ok(dims)
}

// (1 - t^step)^exp truncated after t^max.
fn binomial_series(exp: i128, step: usize, max: usize) -> Option<Vec<i128>> {
    let mut out = vec![0i128; max + 1];
    let mut binom: i128 = 1;
    let mut j: i128 = 0;
    let mut pos = 0;
    while pos <= max {
        out[pos] = if j % 2 == 0 { binom } else { -binom };
        if binom == 0 {
            break;
        }
        binom = binom.checked_mul(exp - j)? / (j + 1);
        j += 1;
        pos += step;
    }
    Some(out)
}

fn multiply_truncated(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let n = a.len();
    let mut out = vec![0i128; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

/// Witt's formula: the number of Lyndon words of length `d` over `q` letters.
pub fn necklace_count(q: u64, d: u32) -> u64 {
    if d == 0 {
        return 0;
    }
    let mut total: i128 = 0;
    for e in 1..=d {
        if d.is_multiple_of(e) {
            total += mobius(e) as i128 * (q as i128).pow(d / e);
        }
    }
    (total / d as i128) as u64
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}
