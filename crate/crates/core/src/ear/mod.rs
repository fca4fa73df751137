//! Ear-pendant decompositions, odd ear decompositions and almost-bipartite
//! matching covered (ABMC) graphs.
//!
//! A decomposition is a construction script: a base graph followed by steps
//! that each append fresh vertices. Base vertices are labelled first; every
//! step appends its new vertices in path order.

mod abmc;
mod peel;
mod recognize;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{append_path, odd_homeomorph_k4};
use crate::graph::{Graph, GraphBuilder};

pub use abmc::{
    check_abmc_lemma, is_abmc, random_abmc, random_abmc_decomposition, rearrange_to_odd_ear,
    AbmcLemmaReport, AbmcRecipe,
};
pub use recognize::{find_ear_pendant_decomposition, DEFAULT_RECOGNIZER_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    EarPendant,
    OddEar,
    Abmc,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::EarPendant => "ear_pendant",
            Kind::OddEar => "odd_ear",
            Kind::Abmc => "abmc",
        }
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ear_pendant" | "ear-pendant" => Ok(Kind::EarPendant),
            "odd_ear" | "odd-ear" => Ok(Kind::OddEar),
            "abmc" => Ok(Kind::Abmc),
            _ => Err(format!("unknown decomposition kind `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    /// Vertices `0..len` in cycle order.
    OddCycle(usize),
    /// See [`odd_homeomorph_k4`] for the labelling.
    OddHomeomorphK4([usize; 6]),
    /// The edge `0–1`.
    K2,
}

impl Base {
    fn order(&self) -> usize {
        match self {
            Base::OddCycle(len) => *len,
            Base::OddHomeomorphK4(ls) => 4 + ls.iter().map(|l| l - 1).sum::<usize>(),
            Base::K2 => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Step {
    /// A path of `len` edges from `u` to `v` through `len - 1` new vertices.
    /// With `u == v` the ear is closed: a cycle through one old vertex.
    Ear { u: usize, v: usize, len: usize },
    /// A new odd cycle of `cycle_len` vertices, the first of which is joined
    /// to the existing vertex `end` by a path of `path_len` edges.
    Pendant { cycle_len: usize, path_len: usize, end: usize },
    /// The closing even ear of an ABMC decomposition.
    EvenEar { u: usize, v: usize, len: usize },
}

impl Step {
    /// Number of vertices the step appends.
    pub fn new_vertices(&self) -> usize {
        match *self {
            Step::Ear { len, .. } | Step::EvenEar { len, .. } => len - 1,
            Step::Pendant { cycle_len, path_len, .. } => cycle_len + path_len - 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EarDecomposition {
    pub kind: Kind,
    pub base: Base,
    pub steps: Vec<Step>,
}

/// A decomposition found inside a given graph: building it and relabelling
/// build vertex `i` to `vertex_map[i]` reproduces that graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognized {
    pub decomposition: EarDecomposition,
    pub vertex_map: Vec<usize>,
}

impl Recognized {
    pub fn rebuild(&self) -> Result<Graph> {
        Ok(build(&self.decomposition)?.relabel(&self.vertex_map))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "decomposition", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Recognition {
    Found(Recognized),
    Absent,
    /// The graph exceeds the recognizer's size limit.
    Undecided,
}

impl Recognition {
    pub fn found(&self) -> Option<&Recognized> {
        match self {
            Recognition::Found(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_flag(&self) -> Option<bool> {
        match self {
            Recognition::Found(_) => Some(true),
            Recognition::Absent => Some(false),
            Recognition::Undecided => None,
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidDecomposition(msg.into())
}

fn check_endpoint(v: usize, order: usize, step: usize) -> Result<()> {
    if v >= order {
        return Err(invalid(format!(
            "step {step}: endpoint {v} does not exist yet ({order} vertices so far)"
        )));
    }
    Ok(())
}

fn add_ear(b: &mut GraphBuilder, u: usize, v: usize, len: usize, step: usize) -> Result<()> {
    let n = b.order();
    check_endpoint(u, n, step)?;
    check_endpoint(v, n, step)?;
    if u == v && len < 3 {
        return Err(invalid(format!("step {step}: a closed ear needs length at least 3")));
    }
    if len == 1 && b.has_edge(u, v) {
        return Err(invalid(format!("step {step}: edge {u}-{v} already present")));
    }
    append_path(b, u, v, len)
}

/// Builds the graph a decomposition describes, checking the rules of its
/// kind along the way.
pub fn build(dec: &EarDecomposition) -> Result<Graph> {
    let mut b = match (&dec.kind, &dec.base) {
        (Kind::EarPendant | Kind::OddEar, Base::OddCycle(len)) => {
            if *len < 3 || len % 2 == 0 {
                return Err(invalid(format!("base cycle length {len} is not odd ≥ 3")));
            }
            crate::generators::cycle(*len)?.to_builder()
        }
        (Kind::EarPendant, Base::OddHomeomorphK4(ls)) => odd_homeomorph_k4(*ls)
            .map_err(|e| invalid(e.to_string()))?
            .to_builder(),
        (Kind::OddEar | Kind::Abmc, Base::K2) => Graph::from_edges(2, &[(0, 1)])?.to_builder(),
        (kind, base) => {
            return Err(invalid(format!("base {base:?} not allowed for kind {}", kind.as_str())))
        }
    };
    for (i, step) in dec.steps.iter().enumerate() {
        let i = i + 1;
        let last = i == dec.steps.len();
        match *step {
            Step::Ear { u, v, len } => {
                if len % 2 == 0 {
                    return Err(invalid(format!("step {i}: ear length {len} is not odd")));
                }
                add_ear(&mut b, u, v, len, i)?;
            }
            Step::Pendant { cycle_len, path_len, end } => {
                if dec.kind != Kind::EarPendant {
                    return Err(invalid(format!("step {i}: pendants only occur in ear-pendant decompositions")));
                }
                if cycle_len < 3 || cycle_len % 2 == 0 {
                    return Err(invalid(format!("step {i}: pendant cycle length {cycle_len} is not odd ≥ 3")));
                }
                if path_len == 0 {
                    return Err(invalid(format!("step {i}: pendant path must have positive length")));
                }
                let n = b.order();
                if (n..n + cycle_len).contains(&end) {
                    return Err(invalid(format!("step {i}: pendant end {end} lies on its own cycle")));
                }
                check_endpoint(end, n, i)?;
                for k in 0..cycle_len {
                    b.add_vertex();
                    if k > 0 {
                        b.add_edge(n + k - 1, n + k)?;
                    }
                }
                b.add_edge(n + cycle_len - 1, n)?;
                append_path(&mut b, n, end, path_len)?;
            }
            Step::EvenEar { u, v, len } => {
                if dec.kind != Kind::Abmc || !last {
                    return Err(invalid(format!("step {i}: an even ear may only close an ABMC decomposition")));
                }
                if len < 2 || len % 2 == 1 {
                    return Err(invalid(format!("step {i}: even ear length {len} is not even ≥ 2")));
                }
                if !((u, v) == (0, 1) || (u, v) == (1, 0)) {
                    return Err(invalid(format!("step {i}: the even ear must join the base vertices 0 and 1")));
                }
                if !b.clone().build().is_bipartite() {
                    return Err(invalid(format!("step {i}: graph before the even ear is not bipartite")));
                }
                add_ear(&mut b, u, v, len, i)?;
            }
        }
    }
    if dec.kind == Kind::Abmc && !matches!(dec.steps.last(), Some(Step::EvenEar { .. })) {
        return Err(invalid("an ABMC decomposition must end with an even ear"));
    }
    let g = b.build();
    debug_assert_eq!(
        g.order(),
        dec.base.order() + dec.steps.iter().map(Step::new_vertices).sum::<usize>()
    );
    Ok(g)
}

impl fmt::Display for EarDecomposition {
    /// The line-oriented script form, parsed back by [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind {}", self.kind.as_str())?;
        match &self.base {
            Base::OddCycle(len) => writeln!(f, "base cycle {len}")?,
            Base::OddHomeomorphK4(ls) => {
                let ls: Vec<String> = ls.iter().map(ToString::to_string).collect();
                writeln!(f, "base k4 {}", ls.join(" "))?
            }
            Base::K2 => writeln!(f, "base k2")?,
        }
        for step in &self.steps {
            match step {
                Step::Ear { u, v, len } => writeln!(f, "ear {u} {v} {len}")?,
                Step::Pendant { cycle_len, path_len, end } => {
                    writeln!(f, "pendant {cycle_len} {path_len} {end}")?
                }
                Step::EvenEar { u, v, len } => writeln!(f, "evenear {u} {v} {len}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for EarDecomposition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut base = None;
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| Error::Script { line, message };
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            let nums = |from: usize, count: usize| -> Result<Vec<usize>> {
                if words.len() != from + count {
                    return Err(err(format!("`{}` expects {count} numbers", words[..from].join(" "))));
                }
                words[from..]
                    .iter()
                    .map(|w| w.parse().map_err(|_| err(format!("`{w}` is not a non-negative integer"))))
                    .collect()
            };
            match words[0] {
                "kind" => {
                    if kind.is_some() || base.is_some() {
                        return Err(err("`kind` must come first and only once".into()));
                    }
                    if words.len() != 2 {
                        return Err(err("`kind` expects one word".into()));
                    }
                    kind = Some(words[1].parse().map_err(err)?);
                }
                "base" => {
                    if base.is_some() {
                        return Err(err("second `base` line".into()));
                    }
                    base = Some(match words.get(1) {
                        Some(&"cycle") => Base::OddCycle(nums(2, 1)?[0]),
                        Some(&"k4") => Base::OddHomeomorphK4(nums(2, 6)?.try_into().unwrap()),
                        Some(&"k2") => {
                            nums(2, 0)?;
                            Base::K2
                        }
                        _ => return Err(err("base must be `cycle`, `k4` or `k2`".into())),
                    });
                }
                word @ ("ear" | "pendant" | "evenear") => {
                    if base.is_none() {
                        return Err(err("step before `base`".into()));
                    }
                    let a = nums(1, 3)?;
                    steps.push(match word {
                        "ear" => Step::Ear { u: a[0], v: a[1], len: a[2] },
                        "pendant" => Step::Pendant { cycle_len: a[0], path_len: a[1], end: a[2] },
                        _ => Step::EvenEar { u: a[0], v: a[1], len: a[2] },
                    });
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let kind = kind.ok_or(Error::Script { line: 0, message: "missing `kind` line".into() })?;
        let base = base.ok_or(Error::Script { line: 0, message: "missing `base` line".into() })?;
        Ok(EarDecomposition { kind, base, steps })
    }
}
