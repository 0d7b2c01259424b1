//! Independent brute-force helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_traits::Zero;
use pclie::words::{Letter, NWord, Word};
use pclie::{Coeff, CommutationGraph, LiePolynomial};
use rand::Rng;

/// Lyndon-Shirshov test straight from the definition: every rotation is
/// lexicographically smaller, where a proper prefix counts as greater.
pub fn alsw_by_rotations(u: &[Letter]) -> bool {
    if u.is_empty() {
        return false;
    }
    (1..u.len()).all(|i| {
        let rot: Vec<Letter> = u[i..].iter().chain(&u[..i]).copied().collect();
        naive_lex_less(&rot, u)
    })
}

/// Inductive definition: the empty word is the greatest word.
pub fn naive_lex_less(u: &[Letter], v: &[Letter]) -> bool {
    match (u.split_first(), v.split_first()) {
        (None, _) => false,
        (Some(_), None) => true,
        (Some((a, ur)), Some((b, vr))) => a < b || (a == b && naive_lex_less(ur, vr)),
    }
}

pub fn all_words(k: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k as Letter).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every binary bracketing of a fixed letter sequence.
pub fn all_bracketings(u: &[Letter]) -> Vec<NWord> {
    if u.len() == 1 {
        return vec![NWord::Leaf(u[0])];
    }
    let mut out = Vec::new();
    for i in 1..u.len() {
        for a in all_bracketings(&u[..i]) {
            for b in all_bracketings(&u[i..]) {
                out.push(NWord::pair(a.clone(), b));
            }
        }
    }
    out
}

/// All non-associative words with exactly `len` leaves over `k` letters.
pub fn all_nwords(k: usize, len: usize) -> Vec<NWord> {
    all_words(k, len).iter().flat_map(|w| all_bracketings(w)).collect()
}

pub fn random_nword<R: Rng>(rng: &mut R, k: usize, len: usize) -> NWord {
    if len == 1 {
        return NWord::Leaf(rng.gen_range(0..k) as Letter);
    }
    let split = rng.gen_range(1..len);
    NWord::pair(random_nword(rng, k, split), random_nword(rng, k, len - split))
}

/// Associative polynomial with integer-valued rational coefficients.
pub type Assoc = HashMap<Vec<Letter>, Coeff>;

fn assoc_add(acc: &mut Assoc, w: Vec<Letter>, c: Coeff) {
    let e = acc.entry(w).or_insert_with(Coeff::zero);
    *e += c;
}

fn assoc_clean(mut a: Assoc) -> Assoc {
    a.retain(|_, c| !c.is_zero());
    a
}

/// Image in the free associative algebra, `(a,b) = ab - ba`.
pub fn embed(t: &NWord) -> Assoc {
    match t {
        NWord::Leaf(l) => {
            let mut m = Assoc::new();
            m.insert(vec![*l], Coeff::from_integer(1.into()));
            m
        }
        NWord::Pair(a, b) => {
            let (ea, eb) = (embed(a), embed(b));
            let mut out = Assoc::new();
            for (u, x) in &ea {
                for (v, y) in &eb {
                    let xy = x * y;
                    let mut uv = u.clone();
                    uv.extend(v);
                    assoc_add(&mut out, uv, xy.clone());
                    let mut vu = v.clone();
                    vu.extend(u);
                    assoc_add(&mut out, vu, -xy);
                }
            }
            assoc_clean(out)
        }
    }
}

pub fn embed_poly(p: &LiePolynomial) -> Assoc {
    let mut out = Assoc::new();
    for (t, c) in p.nword_terms() {
        for (w, x) in embed(&t) {
            assoc_add(&mut out, w, x * &c);
        }
    }
    assoc_clean(out)
}

/// The 64 labeled graphs on `x1 < x2 < x3 < x4`.
pub fn four_vertex_graphs() -> Vec<CommutationGraph> {
    (0..64).map(|m| CommutationGraph::from_edge_mask(4, m)).collect()
}

/// 20 fixed labeled graphs on 5 vertices, chosen by a seeded generator.
pub fn five_vertex_sample() -> Vec<CommutationGraph> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut masks = Vec::new();
    while masks.len() < 20 {
        let m: u64 = rng.gen_range(0..1024);
        if !masks.contains(&m) {
            masks.push(m);
        }
    }
    masks.into_iter().map(|m| CommutationGraph::from_edge_mask(5, m)).collect()
}

pub fn word(s: &[u8]) -> Word {
    Word::new(s.iter().map(|&x| x - 1).collect())
}
