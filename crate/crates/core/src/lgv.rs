//! Non-intersecting lattice paths in the graph `Γ^(k,m)`, enumerated
//! directly as an independent oracle for the tableau and Pfaffian routes.
//!
//! Heights are stored doubled (`y2 = 2y`) so the half-integer source
//! vertices on the line `x = 0` stay integral. With `top = 2k + m`:
//!
//! * `U = {(x, y) : x >= 1, 0 <= y <= top}`, `I = {(0, y) : y ∈ ½ℕ, y <= top}`.
//! * Vertical steps `(x, y-1) -> (x, y)` for `x >= 1`, unlabelled.
//! * Horizontal steps into height `j >= 1`, from `U` or from `(0, j)`,
//!   labelled with the unprimed letter of height `j`.
//! * Diagonal steps `(x-1, j-1) -> (x, j)` with `x - 1 >= 1`, and
//!   `(0, j - ½) -> (1, j)`, labelled with the primed letter of height `j`.
//!
//! Height `j <= 2k` carries index `⌈j/2⌉`, barred when `j` is even; height
//! `j > 2k` carries index `j - k`. The four sources `(0, 2i - 3/2) ..= (0, 2i)`
//! feeding the diagonal cell with index `i <= k` count as one vertex for the
//! non-intersection test.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, Monomial};
use crate::shapes::{shifted_cells, StrictPartition};
use crate::tableaux::{Letter, PrimedTableau, VariableSpec};

/// Vertex `(x, y2)` with doubled height.
pub type Vertex = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    /// Visited vertices, source first.
    pub vertices: Vec<Vertex>,
    /// Label of each step; `None` for vertical steps.
    pub letters: Vec<Option<Letter>>,
}

impl Path {
    pub fn labels(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().flatten().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub paths: Vec<Path>,
}

fn fmt_height(y2: usize) -> String {
    if y2.is_multiple_of(2) {
        format!("{}", y2 / 2)
    } else {
        format!("{}.5", y2 / 2)
    }
}

impl fmt::Display for PathFamily {
    /// One line per path: its vertex coordinates.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, &(x, y2)) in p.vertices.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "({},{})", x, fmt_height(y2))?;
            }
        }
        Ok(())
    }
}

/// The implicit graph for one spec and a bound on `x`.
#[derive(Clone, Copy, Debug)]
pub struct LgvGraph {
    pub spec: VariableSpec,
    pub xmax: usize,
}

impl LgvGraph {
    pub fn new(spec: VariableSpec, xmax: usize) -> Self {
        LgvGraph { spec, xmax }
    }

    /// `2 * (2k + m)`.
    pub fn top2(&self) -> usize {
        2 * (2 * self.spec.k + self.spec.m)
    }

    /// Letter on a step into integer height `j`.
    pub fn letter_at(&self, j: usize, primed: bool) -> Letter {
        let k = self.spec.k;
        if j <= 2 * k {
            Letter::new(j.div_ceil(2), j.is_multiple_of(2), primed)
        } else {
            Letter::new(j - k, false, primed)
        }
    }

    /// Integer height whose steps carry `l`.
    pub fn height_of(&self, l: Letter) -> usize {
        if l.index <= self.spec.k {
            2 * l.index - if l.barred { 0 } else { 1 }
        } else {
            l.index + self.spec.k
        }
    }

    /// Outgoing steps of `v` within `x <= xmax`.
    pub fn successors(&self, v: Vertex) -> Vec<(Vertex, Option<Letter>)> {
        let (x, y2) = v;
        let top2 = self.top2();
        let mut out = Vec::with_capacity(3);
        if x == 0 {
            if self.xmax >= 1 && y2 >= 1 && y2 <= top2 {
                if y2 % 2 == 0 {
                    out.push(((1, y2), Some(self.letter_at(y2 / 2, false))));
                } else {
                    out.push(((1, y2 + 1), Some(self.letter_at(y2.div_ceil(2), true))));
                }
            }
            return out;
        }
        if y2 + 2 <= top2 {
            out.push(((x, y2 + 2), None));
        }
        if x < self.xmax {
            if y2 >= 2 {
                out.push(((x + 1, y2), Some(self.letter_at(y2 / 2, false))));
            }
            if y2 + 2 <= top2 {
                out.push(((x + 1, y2 + 2), Some(self.letter_at(y2 / 2 + 1, true))));
            }
        }
        out
    }

    /// Collision class of a vertex; the sources of one symplectic diagonal
    /// index share a class.
    fn class(&self, v: Vertex) -> Vertex {
        let (x, y2) = v;
        if x == 0 && y2 >= 1 && y2 <= 4 * self.spec.k {
            (0, 4 * y2.div_ceil(4))
        } else {
            v
        }
    }

    /// Sources on `x = 0` that have an outgoing step.
    pub fn initial_vertices(&self) -> Vec<Vertex> {
        (1..=self.top2()).map(|y2| (0, y2)).collect()
    }
}

struct Search<'a> {
    g: LgvGraph,
    lambda: &'a StrictPartition,
    mu: &'a StrictPartition,
    occupied: std::collections::HashSet<Vertex>,
    current: Vec<Path>,
    out: &'a mut dyn FnMut(&PathFamily),
}

impl Search<'_> {
    fn family(&mut self, i: usize) {
        if i == self.lambda.len() {
            let f = PathFamily {
                paths: self.current.clone(),
            };
            (self.out)(&f);
            return;
        }
        let sources = if i < self.mu.len() {
            vec![(self.mu.parts()[i], 0)]
        } else {
            self.g.initial_vertices()
        };
        let sink = (self.lambda.parts()[i], self.g.top2());
        for s in sources {
            let c = self.g.class(s);
            if self.occupied.contains(&c) {
                continue;
            }
            self.occupied.insert(c);
            let mut path = Path {
                vertices: vec![s],
                letters: Vec::new(),
            };
            self.walk(i, sink, &mut path);
            self.occupied.remove(&c);
        }
    }

    fn walk(&mut self, i: usize, sink: Vertex, path: &mut Path) {
        let v = *path.vertices.last().unwrap();
        if v == sink {
            self.current.push(path.clone());
            self.family(i + 1);
            self.current.pop();
            return;
        }
        for (w, l) in self.g.successors(v) {
            if w.0 > sink.0 {
                continue;
            }
            let c = self.g.class(w);
            if self.occupied.contains(&c) {
                continue;
            }
            self.occupied.insert(c);
            path.vertices.push(w);
            path.letters.push(l);
            self.walk(i, sink, path);
            path.vertices.pop();
            path.letters.pop();
            self.occupied.remove(&c);
        }
    }
}

fn check_length(lambda: &StrictPartition, spec: VariableSpec) -> Result<()> {
    if lambda.len() > spec.n() {
        return Err(Error::TooManyParts {
            length: lambda.len(),
            vars: spec.n(),
        });
    }
    Ok(())
}

/// Calls `visit` on every non-intersecting family with `P_i` ending at
/// `(λ_i, top)`, starting at `(μ_i, 0)` for `i <= ℓ(μ)` and on `x = 0`
/// otherwise. Nothing is visited when `μ ⊄ λ`.
pub fn for_each_path_family(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    spec: VariableSpec,
    visit: &mut dyn FnMut(&PathFamily),
) -> Result<()> {
    check_length(lambda, spec)?;
    for_each_path_family_unchecked(lambda, mu, spec, visit);
    Ok(())
}

/// [`for_each_path_family`] without the `ℓ(λ) <= n` check.
pub fn for_each_path_family_unchecked(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    spec: VariableSpec,
    visit: &mut dyn FnMut(&PathFamily),
) {
    if !lambda.contains(mu) {
        return;
    }
    let mut s = Search {
        g: LgvGraph::new(spec, lambda.part(1)),
        lambda,
        mu,
        occupied: Default::default(),
        current: Vec::new(),
        out: visit,
    };
    s.family(0);
}

pub fn enum_path_families(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    spec: VariableSpec,
) -> Result<Vec<PathFamily>> {
    let mut out = Vec::new();
    for_each_path_family(lambda, mu, spec, &mut |f| out.push(f.clone()))?;
    Ok(out)
}

/// Product of the letters' contributions; vertical steps contribute 1.
pub fn family_weight(f: &PathFamily, spec: VariableSpec) -> Monomial {
    let mut e = vec![0; spec.n()];
    for p in &f.paths {
        for l in p.labels() {
            e[l.index - 1] += l.sign();
        }
    }
    Monomial::new(e)
}

pub fn lgv_weight_sum(lambda: &StrictPartition, mu: &StrictPartition, spec: VariableSpec) -> Result<LaurentPoly> {
    let mut counts = std::collections::HashMap::new();
    for_each_path_family(lambda, mu, spec, &mut |f| {
        *counts.entry(family_weight(f, spec)).or_insert(0u64) += 1;
    })?;
    Ok(LaurentPoly::from_counts(spec.n(), counts))
}

/// Row `i` of the tableau lists the labels along `P_i`.
pub fn family_to_tableau(f: &PathFamily, lambda: &StrictPartition, mu: &StrictPartition) -> Result<PrimedTableau> {
    let rows: Vec<Vec<Letter>> = f.paths.iter().map(|p| p.labels().collect()).collect();
    PrimedTableau::from_rows(lambda, mu, &rows)
}

/// Inverse of [`family_to_tableau`]: climbs vertically to each label's
/// height, takes the labelled step, then climbs to the top.
pub fn tableau_to_family(t: &PrimedTableau, spec: VariableSpec) -> Result<PathFamily> {
    let lambda = t.shape().outer();
    let mu = t.shape().inner();
    let g = LgvGraph::new(spec, lambda.part(1));
    let top2 = g.top2();
    let bad = |msg: &str| Error::Precondition(format!("tableau has no path: {msg}"));
    let mut paths = Vec::new();
    for (i, row) in t.rows().iter().enumerate() {
        let mut vertices = Vec::new();
        let mut letters = Vec::new();
        let mut rest = row.as_slice();
        let mut at = if i < mu.len() {
            (mu.parts()[i], 0)
        } else {
            let first = *rest.first().ok_or_else(|| bad("empty free row"))?;
            let j = g.height_of(first);
            rest = &rest[1..];
            let src = if first.primed { (0, 2 * j - 1) } else { (0, 2 * j) };
            vertices.push(src);
            letters.push(Some(first));
            (1, 2 * j)
        };
        vertices.push(at);
        for &l in rest {
            let j = g.height_of(l);
            let base = if l.primed { 2 * j - 2 } else { 2 * j };
            if at.1 > base {
                return Err(bad("letters out of order"));
            }
            while at.1 < base {
                at = (at.0, at.1 + 2);
                vertices.push(at);
                letters.push(None);
            }
            at = (at.0 + 1, 2 * j);
            vertices.push(at);
            letters.push(Some(l));
        }
        if at.1 > top2 {
            return Err(bad("above the top"));
        }
        while at.1 < top2 {
            at = (at.0, at.1 + 2);
            vertices.push(at);
            letters.push(None);
        }
        paths.push(Path { vertices, letters });
    }
    Ok(PathFamily { paths })
}

/// Checks endpoints, step validity and non-intersection.
pub fn is_valid_family(f: &PathFamily, lambda: &StrictPartition, mu: &StrictPartition, spec: VariableSpec) -> bool {
    if f.paths.len() != lambda.len() || shifted_cells(lambda, mu).is_err() {
        return false;
    }
    let g = LgvGraph::new(spec, lambda.part(1));
    let mut seen = std::collections::HashSet::new();
    for (i, p) in f.paths.iter().enumerate() {
        let Some(&s) = p.vertices.first() else {
            return false;
        };
        let start_ok = if i < mu.len() { s == (mu.parts()[i], 0) } else { s.0 == 0 };
        if !start_ok || p.vertices.last() != Some(&(lambda.parts()[i], g.top2())) {
            return false;
        }
        if p.letters.len() + 1 != p.vertices.len() {
            return false;
        }
        for (w, l) in p.vertices.windows(2).zip(&p.letters) {
            if !g.successors(w[0]).contains(&(w[1], *l)) {
                return false;
            }
        }
        for &v in &p.vertices {
            if !seen.insert(g.class(v)) {
                return false;
            }
        }
    }
    true
}
