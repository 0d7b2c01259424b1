mod common;

use std::cmp::Ordering;

use common::{all_bracketings, all_words, alsw_by_rotations, naive_lex_less};
use pclie::oracle::necklace_count;
use pclie::words::{
    alsw_factorization, bracket_canonical, compare, enumerate_alsw, is_alsw, is_nlsw, Order,
};
use proptest::prelude::*;

#[test]
fn alsw_matches_rotation_definition() {
    for k in [2, 3] {
        for len in 1..=9 {
            for w in all_words(k, len) {
                assert_eq!(is_alsw(&w), alsw_by_rotations(&w), "{w:?}");
            }
        }
    }
}

#[test]
fn alsw_iff_aperiodic_and_rotation_maximal() {
    for len in 1..=8 {
        for w in all_words(3, len) {
            let aperiodic = (1..len).all(|p| len % p != 0 || w[p..] != w[..len - p]);
            let maximal = (1..len).all(|i| {
                let rot: Vec<_> = w[i..].iter().chain(&w[..i]).copied().collect();
                rot <= w
            });
            assert_eq!(is_alsw(&w), aperiodic && maximal, "{w:?}");
        }
    }
}

#[test]
fn concatenation_of_decreasing_pair_is_lyndon() {
    for (k, max) in [(2usize, 10usize), (3, 8)] {
        let words = enumerate_alsw(k, max - 1);
        for u in &words {
            for v in &words {
                if u.len() + v.len() <= max && compare(Order::Lex, u, v) == Ordering::Greater {
                    assert!(is_alsw(&u.concat(v)), "{u:?}{v:?}");
                }
            }
        }
    }
}

#[test]
fn canonical_bracketing_is_the_unique_nlsw() {
    for k in [2, 3] {
        for u in enumerate_alsw(k, 7) {
            let good: Vec<_> = all_bracketings(&u).into_iter().filter(is_nlsw).collect();
            assert_eq!(good, vec![bracket_canonical(&u).unwrap()], "{u:?}");
        }
    }
}

#[test]
fn enumeration_counts_are_necklace_numbers() {
    for k in 1..=4usize {
        let words = enumerate_alsw(k, 8);
        for d in 1..=8u32 {
            let got = words.iter().filter(|w| w.len() == d as usize).count() as u64;
            assert_eq!(got, necklace_count(k as u64, d), "k={k} d={d}");
        }
        assert!(words.windows(2).all(|p| p[0] < p[1]), "strictly deg-lex ascending");
        assert!(words.iter().all(|w| is_alsw(w)));
    }
}

#[test]
fn factorization_is_unique_nondecreasing_lyndon() {
    for len in 1..=7 {
        for w in all_words(3, len) {
            let lens = alsw_factorization(&w);
            assert_eq!(lens.iter().sum::<usize>(), len);
            let mut pos = 0;
            let mut prev: Option<&[u8]> = None;
            for l in lens {
                let f = &w[pos..pos + l];
                assert!(is_alsw(f));
                if let Some(p) = prev {
                    assert_ne!(compare(Order::Lex, p, f), Ordering::Greater, "{w:?}");
                }
                prev = Some(f);
                pos += l;
            }
        }
    }
}

#[test]
fn deglex_has_finitely_many_predecessors() {
    for n in 1..=4 {
        for w in all_words(2, n) {
            let below = |max: usize| -> usize {
                (1..=max)
                    .flat_map(|m| all_words(2, m))
                    .filter(|v| compare(Order::DegLex, v, &w) == Ordering::Less)
                    .count()
            };
            let exact = below(n);
            assert_eq!(below(n + 3), exact);
            let expected: usize = (1..n).map(|m| 1 << m).sum::<usize>()
                + all_words(2, n).iter().filter(|v| naive_lex_less(v, &w)).count();
            assert_eq!(exact, expected);
        }
    }
}

fn word_strategy() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 0..7)
}

proptest! {
    #[test]
    fn lex_matches_inductive_definition(u in word_strategy(), v in word_strategy()) {
        prop_assert_eq!(compare(Order::Lex, &u, &v) == Ordering::Less, naive_lex_less(&u, &v));
    }

    #[test]
    fn orders_are_strict_total(u in word_strategy(), v in word_strategy(), w in word_strategy()) {
        for order in [Order::Lex, Order::DegLex] {
            let uv = compare(order, &u, &v);
            prop_assert_eq!(uv.reverse(), compare(order, &v, &u));
            prop_assert_eq!(uv == Ordering::Equal, u == v);
            if uv == Ordering::Less && compare(order, &v, &w) == Ordering::Less {
                prop_assert_eq!(compare(order, &u, &w), Ordering::Less);
            }
        }
    }
}
