//! JSON encodings of words and polynomials.
//!
//! A letter is its name as a string and a bracket is a two-element array, so
//! `(x3,(x2,x1))` becomes `["x3",["x2","x1"]]`. An associative word is an
//! array of letter names.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::LiePolynomial;
use crate::words::{Alphabet, NWord};

pub fn nword_to_json(t: &NWord, alphabet: &Alphabet) -> Value {
    match t {
        NWord::Leaf(l) => Value::String(alphabet.name(*l).to_string()),
        NWord::Pair(a, b) => Value::Array(vec![nword_to_json(a, alphabet), nword_to_json(b, alphabet)]),
    }
}

pub fn nword_from_json(v: &Value, alphabet: &Alphabet) -> Result<NWord> {
    match v {
        Value::String(name) => alphabet
            .letter(name)
            .map(NWord::Leaf)
            .ok_or_else(|| Error::UnknownLetter(name.clone())),
        Value::Array(items) if items.len() == 2 => Ok(NWord::pair(
            nword_from_json(&items[0], alphabet)?,
            nword_from_json(&items[1], alphabet)?,
        )),
        _ => Err(Error::WordFormat("expected a letter name or a 2-element array".into())),
    }
}

/// Decodes an encoded non-associative word from raw bytes.
pub fn parse_nword_json(text: &[u8], alphabet: &Alphabet) -> Result<NWord> {
    let v: Value = serde_json::from_slice(text).map_err(|e| Error::WordFormat(e.to_string()))?;
    nword_from_json(&v, alphabet)
}

pub fn word_to_json(w: &[crate::words::Letter], alphabet: &Alphabet) -> Value {
    Value::Array(w.iter().map(|&l| Value::String(alphabet.name(l).to_string())).collect())
}

/// `[{"coeff": "2/3", "word": [...]}, …]`, descending deg-lex.
pub fn polynomial_to_json(p: &LiePolynomial, alphabet: &Alphabet) -> Value {
    Value::Array(
        p.nword_terms()
            .into_iter()
            .map(|(t, c)| json!({ "coeff": c.to_string(), "word": nword_to_json(&t, alphabet) }))
            .collect(),
    )
}
