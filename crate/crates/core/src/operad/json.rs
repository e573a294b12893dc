//! Binary quadratic presentations as JSON, and structure-constant dumps.
//!
//! ```json
//! { "name": "Lie",
//!   "generators": [ { "label": "b", "degree": 0, "swap": { "b": -1 } } ],
//!   "relations": [ { "name": "jacobi",
//!                    "terms": [ [1, ["b", ["b", 1, 2], 3]],
//!                               [1, ["b", ["b", 2, 3], 1]],
//!                               [1, ["b", ["b", 3, 1], 2]] ] } ] }
//! ```
//!
//! Trees are nested lists, a leaf being its 1-based input. `swap` is the
//! image of the generator under the transposition of its two inputs.
//! Coefficients are integers or strings such as `"-1/2"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::exact::scalar::{fmt_q, parse_q};
use crate::exact::{Echelon, Lin, Perm, Q};
use crate::tree::{eval_tree, from_json, FreeOperad, Gen, Tree};

use super::presented::{binary_gens, PresentError, PresentedOperad, QuadraticData};
use super::{transpositions, Operad};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("generator `{0}`: {1}")]
    Generator(String, String),
    #[error("relation `{0}`: {1}")]
    Relation(String, String),
    #[error("{0}")]
    Presentation(#[from] PresentError),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct GeneratorSpec {
    pub label: String,
    #[serde(default)]
    pub degree: i64,
    pub swap: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct RelationSpec {
    pub name: String,
    pub terms: Vec<(Value, Value)>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct PresentationSpec {
    pub name: String,
    pub generators: Vec<GeneratorSpec>,
    pub relations: Vec<RelationSpec>,
}

fn coefficient(v: &Value) -> Option<Q> {
    match v {
        Value::Number(n) => n.as_i64().map(crate::exact::scalar::q),
        Value::String(s) => parse_q(s),
        _ => None,
    }
}

pub fn parse(text: &str) -> Result<PresentationSpec, LoadError> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse { line: e.line(), column: e.column(), msg: e.to_string() })
}

/// Checks the presentation and computes the operad up to `cap`. Every error
/// past parsing names the generator or relation at fault.
pub fn load(spec: &PresentationSpec, cap: usize) -> Result<PresentedOperad, LoadError> {
    let labels: Vec<(&str, i64)> = spec.generators.iter().map(|g| (g.label.as_str(), g.degree)).collect();
    let index = |l: &str| spec.generators.iter().position(|g| g.label == l);
    let mut swap = vec![];
    for g in &spec.generators {
        let mut v = Lin::zero();
        for (l, c) in &g.swap {
            let k = index(l).ok_or_else(|| LoadError::Generator(g.label.clone(), format!("unknown generator `{}` in swap", l)))?;
            let c = coefficient(c).ok_or_else(|| LoadError::Generator(g.label.clone(), format!("bad coefficient {}", c)))?;
            if spec.generators[k].degree != g.degree {
                return Err(LoadError::Generator(g.label.clone(), "swap changes the degree".into()));
            }
            v.add_term(k, c);
        }
        swap.push(v);
    }
    // the transposition squares to the identity
    for (k, g) in spec.generators.iter().enumerate() {
        let mut twice = Lin::zero();
        for (j, c) in &swap[k] {
            twice.add_scaled(&swap[*j], c);
        }
        if twice != Lin::basis(k) {
            return Err(LoadError::Generator(g.label.clone(), "swap is not an involution".into()));
        }
    }
    let gens = binary_gens(&spec.name, &labels, swap);
    let free = FreeOperad::new(gens.clone(), 2);
    let mut relations = vec![];
    for r in &spec.relations {
        let bad = |m: String| LoadError::Relation(r.name.clone(), m);
        let mut v: Lin<Tree<Gen>> = Lin::zero();
        for (c, t) in &r.terms {
            let c = coefficient(c).ok_or_else(|| bad(format!("bad coefficient {}", c)))?;
            let t: Tree<Gen> = from_json(t, &|l: &str| gens.find(l)).ok_or_else(|| bad(format!("malformed tree or unknown generator in {}", t)))?;
            if t.arity() != 3 || t.weight() != 2 {
                return Err(bad("not a weight-2 tree of arity 3".into()));
            }
            let mut leaves = t.leaves();
            leaves.sort();
            if leaves != vec![0, 1, 2] {
                return Err(bad("leaves must be 1, 2, 3".into()));
            }
            let images: Vec<Lin<Tree<Gen>>> = t.labels().iter().map(|g| Lin::basis(free.corolla(*g))).collect();
            v.add_scaled(&eval_tree(&free, &t, &images), &c);
        }
        if v.is_zero() {
            return Err(bad("relation is zero".into()));
        }
        relations.push(v);
    }
    let mut span = Echelon::new();
    for v in &relations {
        span.insert(v);
    }
    for (r, v) in spec.relations.iter().zip(&relations) {
        for s in transpositions(3) {
            if !span.contains(&v.map(|t| free.act(t, &s))) {
                return Err(LoadError::Relation(r.name.clone(), "the relations are not stable under the symmetric group at this relation".into()));
            }
        }
    }
    Ok(PresentedOperad::new(&spec.name, QuadraticData { gens, relations }, cap)?)
}

fn lin_json<O: Operad + ?Sized>(basis: &[O::E], v: &Lin<O::E>) -> Value {
    let pos = |e: &O::E| basis.iter().position(|b| b == e).expect("result in the basis");
    Value::Array(v.iter().map(|(e, c)| serde_json::json!([pos(e), fmt_q(c)])).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct OperadDump {
    pub name: String,
    pub arity_cap: usize,
    pub dims: Vec<usize>,
    pub degrees: BTreeMap<usize, Vec<i64>>,
    /// `basis[n]`, as nested lists when the elements are trees
    pub basis: BTreeMap<usize, Vec<String>>,
    /// for each adjacent transposition `(i i+1)` of arity `n`, the image of
    /// every basis element as `[index, coefficient]` pairs
    pub actions: BTreeMap<usize, Vec<Value>>,
    /// `[n, a, i, m, b, result]` for `e_a ∘_{i+1} e_b`, with `e_a` of arity
    /// `n` and `e_b` of arity `m`; only nonzero results are listed
    pub compositions: Vec<Value>,
}

/// Dimensions, action matrices and composition tables up to `cap`.
pub fn dump<O: Operad + ?Sized>(op: &O, cap: usize, show: impl Fn(&O::E) -> String) -> OperadDump {
    let bases: Vec<Vec<O::E>> = (0..=cap).map(|n| if n == 0 { vec![] } else { op.basis(n) }).collect();
    let mut d = OperadDump {
        name: op.name(),
        arity_cap: cap,
        dims: (1..=cap).map(|n| bases[n].len()).collect(),
        degrees: BTreeMap::new(),
        basis: BTreeMap::new(),
        actions: BTreeMap::new(),
        compositions: vec![],
    };
    for n in 1..=cap {
        d.degrees.insert(n, bases[n].iter().map(|e| op.degree(e)).collect());
        d.basis.insert(n, bases[n].iter().map(&show).collect());
        if op.symmetric() && n >= 2 {
            let acts = (0..n - 1)
                .map(|i| {
                    let s = Perm::transposition(n, i, i + 1);
                    Value::Array(bases[n].iter().map(|e| lin_json::<O>(&bases[n], &op.act(e, &s))).collect())
                })
                .collect();
            d.actions.insert(n, acts);
        }
    }
    for n in 1..=cap {
        for m in 1..=cap + 1 - n {
            for (a, x) in bases[n].iter().enumerate() {
                for i in 0..n {
                    for (b, y) in bases[m].iter().enumerate() {
                        let r = op.compose(x, i, y);
                        if !r.is_zero() {
                            d.compositions.push(serde_json::json!([n, a, i, m, b, lin_json::<O>(&bases[n + m - 1], &r)]));
                        }
                    }
                }
            }
        }
    }
    d
}

/// A stock presentation in the file format.
pub fn stock_spec(name: &str) -> Option<PresentationSpec> {
    let text = match name {
        "Com" => r#"{"name":"Com","generators":[{"label":"m","swap":{"m":1}}],
            "relations":[{"name":"assoc12","terms":[[1,["m",["m",1,2],3]],[-1,["m",["m",2,3],1]]]},
                         {"name":"assoc23","terms":[[1,["m",["m",2,3],1]],[-1,["m",["m",3,1],2]]]}]}"#,
        "Lie" => r#"{"name":"Lie","generators":[{"label":"b","swap":{"b":-1}}],
            "relations":[{"name":"jacobi","terms":[[1,["b",["b",1,2],3]],[1,["b",["b",2,3],1]],[1,["b",["b",3,1],2]]]}]}"#,
        _ => return None,
    };
    Some(parse(text).expect("stock presentation"))
}
