//! Letters, alphabets and backtracking enumerators for primed shifted
//! tableaux (Q side) and symplectic tableaux (Schur side).
//!
//! Q-side order: `1' < 1 < 1b' < 1b < ... < kb < (k+1)' < k+1 < ... < n' < n`.
//! Schur-side order drops the primes: `1 < 1b < ... < k < kb < k+1 < ... < n`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::Monomial;
use crate::shapes::{shifted_cells, Partition, SkewShiftedShape, StrictPartition};

/// `k` symplectic pairs followed by `m` ordinary variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableSpec {
    pub k: usize,
    pub m: usize,
}

impl VariableSpec {
    pub fn new(k: usize, m: usize) -> Self {
        VariableSpec { k, m }
    }

    pub fn n(&self) -> usize {
        self.k + self.m
    }

    /// Every spec with `k + m <= max_vars`.
    pub fn all_up_to(max_vars: usize) -> Vec<VariableSpec> {
        let mut out = Vec::new();
        for n in 0..=max_vars {
            for k in 0..=n {
                out.push(VariableSpec::new(k, n - k));
            }
        }
        out
    }

    pub fn primed_alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in 1..=self.n() {
            out.push(Letter::new(i, false, true));
            out.push(Letter::new(i, false, false));
            if i <= self.k {
                out.push(Letter::new(i, true, true));
                out.push(Letter::new(i, true, false));
            }
        }
        out
    }

    pub fn unprimed_alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in 1..=self.n() {
            out.push(Letter::new(i, false, false));
            if i <= self.k {
                out.push(Letter::new(i, true, false));
            }
        }
        out
    }
}

impl fmt::Display for VariableSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub barred: bool,
    pub primed: bool,
}

impl Letter {
    pub fn new(index: usize, barred: bool, primed: bool) -> Self {
        Letter {
            index,
            barred,
            primed,
        }
    }

    pub fn plain(index: usize) -> Self {
        Letter::new(index, false, false)
    }

    fn key(&self) -> usize {
        self.index * 4 + if self.barred { 2 } else { 0 } + if self.primed { 0 } else { 1 }
    }

    pub fn unprimed(&self) -> Letter {
        Letter::new(self.index, self.barred, false)
    }

    /// Exponent this letter contributes to its variable.
    pub fn sign(&self) -> i32 {
        if self.barred {
            -1
        } else {
            1
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)?;
        if self.barred {
            f.write_str("b")?;
        }
        if self.primed {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad letter {s:?}"));
        let (rest, primed) = match s.strip_suffix('\'') {
            Some(r) => (r, true),
            None => (s, false),
        };
        let (rest, barred) = match rest.strip_suffix('b') {
            Some(r) => (r, true),
            None => (rest, false),
        };
        let index: usize = rest.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Letter::new(index, barred, primed))
    }
}

fn weight_of<'a>(letters: impl Iterator<Item = &'a Letter>, n: usize) -> Monomial {
    let mut e = vec![0i32; n];
    for l in letters {
        e[l.index - 1] += l.sign();
    }
    Monomial::new(e)
}

fn write_rows(f: &mut fmt::Formatter<'_>, cells: &[(usize, usize)], entries: &[Letter]) -> fmt::Result {
    let mut row = 0;
    for (idx, (&(i, _), l)) in cells.iter().zip(entries).enumerate() {
        if idx > 0 {
            f.write_str(if i != row { "\n" } else { " " })?;
        }
        row = i;
        write!(f, "{l}")?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rules {
    Primed { k: usize },
    Symplectic,
    Semistandard,
}

/// Row-major backtracking over fillings; every rule is checked against the
/// left and upper neighbours (plus the previous diagonal cell on the Q side).
struct Filler {
    len: usize,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    diag_prev: Vec<Option<usize>>,
    min_letter: Vec<usize>,
    alphabet: Vec<Letter>,
    rules: Rules,
    choice: Vec<usize>,
    started: bool,
    done: bool,
}

impl Filler {
    fn new(cells: &[(usize, usize)], alphabet: Vec<Letter>, rules: Rules) -> Self {
        let pos: std::collections::HashMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        let left = cells.iter().map(|&(i, j)| pos.get(&(i, j.wrapping_sub(1))).copied()).collect();
        let up = cells.iter().map(|&(i, j)| pos.get(&(i.wrapping_sub(1), j)).copied()).collect();
        let diag_prev = cells
            .iter()
            .map(|&(i, j)| {
                if i == j {
                    pos.get(&(i.wrapping_sub(1), j.wrapping_sub(1))).copied()
                } else {
                    None
                }
            })
            .collect();
        let min_letter = cells
            .iter()
            .map(|&(i, _)| match rules {
                Rules::Primed { .. } | Rules::Semistandard => 0,
                Rules::Symplectic => alphabet
                    .iter()
                    .position(|l| l.index >= i)
                    .unwrap_or(alphabet.len()),
            })
            .collect();
        Filler {
            len: cells.len(),
            left,
            up,
            diag_prev,
            min_letter,
            alphabet,
            rules,
            choice: Vec::with_capacity(cells.len()),
            started: false,
            done: false,
        }
    }

    fn empty(rules: Rules) -> Self {
        let mut f = Filler::new(&[], Vec::new(), rules);
        f.done = true;
        f
    }

    fn fits(&self, pos: usize, a: usize) -> bool {
        if a < self.min_letter[pos] {
            return false;
        }
        let cand = self.alphabet[a];
        match self.rules {
            Rules::Primed { k } => {
                if let Some(lp) = self.left[pos] {
                    let l = self.choice[lp];
                    if l > a || (l == a && cand.primed) {
                        return false;
                    }
                }
                if let Some(up) = self.up[pos] {
                    let u = self.choice[up];
                    if u > a || (u == a && !cand.primed) {
                        return false;
                    }
                }
                if let Some(dp) = self.diag_prev[pos] {
                    let d = self.alphabet[self.choice[dp]];
                    if cand.index <= k && d.index == cand.index {
                        return false;
                    }
                }
            }
            Rules::Symplectic | Rules::Semistandard => {
                if let Some(lp) = self.left[pos] {
                    if self.choice[lp] > a {
                        return false;
                    }
                }
                if let Some(up) = self.up[pos] {
                    if self.choice[up] >= a {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let mut start = if self.started {
            match self.choice.pop() {
                Some(c) => c + 1,
                None => {
                    self.done = true;
                    return false;
                }
            }
        } else {
            self.started = true;
            0
        };
        loop {
            let pos = self.choice.len();
            if pos == self.len {
                return true;
            }
            match (start..self.alphabet.len()).find(|&a| self.fits(pos, a)) {
                Some(a) => {
                    self.choice.push(a);
                    start = 0;
                }
                None => match self.choice.pop() {
                    Some(c) => start = c + 1,
                    None => {
                        self.done = true;
                        return false;
                    }
                },
            }
        }
    }

    /// Replays a complete filling through the same checks the search uses.
    fn accepts(&mut self, letters: &[Letter]) -> bool {
        if letters.len() != self.len {
            return false;
        }
        self.choice.clear();
        for (pos, l) in letters.iter().enumerate() {
            match self.alphabet.iter().position(|a| a == l) {
                Some(a) if self.fits(pos, a) => self.choice.push(a),
                _ => return false,
            }
        }
        true
    }

    fn current(&self) -> Vec<Letter> {
        self.choice.iter().map(|&a| self.alphabet[a]).collect()
    }
}

/// A filling of a skew shifted shape; `entries` follows `shape.cells()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimedTableau {
    shape: Arc<SkewShiftedShape>,
    entries: Vec<Letter>,
}

impl PrimedTableau {
    /// Builds from explicit rows (row `i` of the skew shape, left to right)
    /// without checking the tableau rules.
    pub fn from_rows(lambda: &StrictPartition, mu: &StrictPartition, rows: &[Vec<Letter>]) -> Result<Self> {
        let shape = shifted_cells(lambda, mu)?;
        let mut entries = Vec::new();
        for i in 1..=lambda.len() {
            let want = shape.row_range(i).len();
            let row = rows.get(i - 1).map(|r| r.as_slice()).unwrap_or(&[]);
            if row.len() != want {
                return Err(Error::Precondition(format!(
                    "row {i} needs {want} letters, got {}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        if rows.len() > lambda.len() {
            return Err(Error::Precondition("too many rows".into()));
        }
        Ok(PrimedTableau {
            shape: Arc::new(shape),
            entries,
        })
    }

    pub fn shape(&self) -> &SkewShiftedShape {
        &self.shape
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Option<Letter> {
        let p = self.shape.cells().iter().position(|&c| c == (i, j))?;
        Some(self.entries[p])
    }

    pub fn rows(&self) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new(); self.shape.outer().len()];
        for (&(i, _), &l) in self.shape.cells().iter().zip(&self.entries) {
            out[i - 1].push(l);
        }
        out
    }

    /// Direct check of the tableau rules, independent of the enumerator.
    pub fn is_valid(&self, spec: VariableSpec) -> bool {
        let n = spec.n();
        let cells = self.shape.cells();
        for (p, &(i, j)) in cells.iter().enumerate() {
            let a = self.entries[p];
            if a.index == 0 || a.index > n || (a.barred && a.index > spec.k) {
                return false;
            }
            if let Some(b) = self.get(i, j + 1) {
                if b < a || (b == a && a.primed) {
                    return false;
                }
            }
            if let Some(b) = self.get(i + 1, j) {
                if b < a || (b == a && !a.primed) {
                    return false;
                }
            }
        }
        for idx in 1..=spec.k {
            let on_diag = cells
                .iter()
                .zip(&self.entries)
                .filter(|(&(i, j), l)| i == j && l.index == idx)
                .count();
            if on_diag > 1 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for PrimedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.shape.cells(), &self.entries)
    }
}

pub struct QtIter {
    shape: Arc<SkewShiftedShape>,
    filler: Filler,
}

impl Iterator for QtIter {
    type Item = PrimedTableau;
    fn next(&mut self) -> Option<PrimedTableau> {
        if self.filler.advance() {
            Some(PrimedTableau {
                shape: self.shape.clone(),
                entries: self.filler.current(),
            })
        } else {
            None
        }
    }
}

impl QtIter {
    /// Advances and hands out the raw entries without building a tableau.
    pub fn next_entries(&mut self) -> Option<Vec<Letter>> {
        if self.filler.advance() {
            Some(self.filler.current())
        } else {
            None
        }
    }
}

/// Primed shifted tableaux of shape `λ/μ` for `spec`; empty when `μ ⊄ λ`.
pub fn enum_qt(spec: VariableSpec, lambda: &StrictPartition, mu: &StrictPartition) -> Result<QtIter> {
    if lambda.len() > spec.n() {
        return Err(Error::TooManyParts {
            length: lambda.len(),
            vars: spec.n(),
        });
    }
    Ok(enum_qt_unchecked(spec, lambda, mu))
}

/// Same as [`enum_qt`] but without the length check; long shapes simply
/// produce no tableaux or whatever the rules allow.
pub fn enum_qt_unchecked(spec: VariableSpec, lambda: &StrictPartition, mu: &StrictPartition) -> QtIter {
    let rules = Rules::Primed { k: spec.k };
    match shifted_cells(lambda, mu) {
        Ok(shape) => {
            let filler = Filler::new(shape.cells(), spec.primed_alphabet(), rules);
            QtIter {
                shape: Arc::new(shape),
                filler,
            }
        }
        Err(_) => QtIter {
            shape: Arc::new(shifted_cells(&StrictPartition::empty(), &StrictPartition::empty()).unwrap()),
            filler: Filler::empty(rules),
        },
    }
}

/// Whether the enumerator for `spec` would produce `t`.
pub fn qt_accepts(spec: VariableSpec, t: &PrimedTableau) -> bool {
    let mut f = Filler::new(t.shape.cells(), spec.primed_alphabet(), Rules::Primed { k: spec.k });
    f.accepts(&t.entries)
}

pub fn qt_weight(t: &PrimedTableau, spec: VariableSpec) -> Monomial {
    weight_of(t.entries.iter(), spec.n())
}

pub fn letters_weight(letters: &[Letter], spec: VariableSpec) -> Monomial {
    weight_of(letters.iter(), spec.n())
}

/// Filling of an ordinary skew diagram `outer/inner` by unprimed letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTableau {
    cells: Arc<Vec<(usize, usize)>>,
    entries: Vec<Letter>,
}

impl SpTableau {
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }
}

impl fmt::Display for SpTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.cells, &self.entries)
    }
}

pub struct SptIter {
    cells: Arc<Vec<(usize, usize)>>,
    filler: Filler,
}

impl Iterator for SptIter {
    type Item = SpTableau;
    fn next(&mut self) -> Option<SpTableau> {
        if self.filler.advance() {
            Some(SpTableau {
                cells: self.cells.clone(),
                entries: self.filler.current(),
            })
        } else {
            None
        }
    }
}

fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    (1..=outer.len())
        .flat_map(|i| (inner.part(i) + 1..=outer.part(i)).map(move |j| (i, j)))
        .collect()
}

/// Symplectic tableaux of the ordinary skew shape `outer/inner`.
pub fn enum_spt(spec: VariableSpec, outer: &Partition, inner: &Partition) -> Result<SptIter> {
    if outer.len() > spec.n() {
        return Err(Error::TooManyParts {
            length: outer.len(),
            vars: spec.n(),
        });
    }
    Ok(enum_spt_unchecked(spec, outer, inner))
}

pub fn enum_spt_unchecked(spec: VariableSpec, outer: &Partition, inner: &Partition) -> SptIter {
    if !outer.contains(inner) {
        return SptIter {
            cells: Arc::new(Vec::new()),
            filler: Filler::empty(Rules::Symplectic),
        };
    }
    let cells = skew_cells(outer, inner);
    let filler = Filler::new(&cells, spec.unprimed_alphabet(), Rules::Symplectic);
    SptIter {
        cells: Arc::new(cells),
        filler,
    }
}

/// Semistandard tableaux of `outer/inner` in the letters `1..=n`, with no
/// row-dependent lower bound.
pub fn enum_ssyt(n: usize, outer: &Partition, inner: &Partition) -> SptIter {
    if !outer.contains(inner) {
        return SptIter {
            cells: Arc::new(Vec::new()),
            filler: Filler::empty(Rules::Semistandard),
        };
    }
    let cells = skew_cells(outer, inner);
    let filler = Filler::new(&cells, VariableSpec::new(0, n).unprimed_alphabet(), Rules::Semistandard);
    SptIter {
        cells: Arc::new(cells),
        filler,
    }
}

pub fn spt_weight(t: &SpTableau, spec: VariableSpec) -> Monomial {
    weight_of(t.entries.iter(), spec.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::enum_strict_between;
    use std::collections::{BTreeSet, HashSet};

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn letters(s: &str) -> Vec<Letter> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    fn figure_tableau() -> PrimedTableau {
        let rows: Vec<_> = ["3b'", "2 3b", "1' 3 3 5", "1b' 4'", "4"]
            .iter()
            .map(|r| letters(r))
            .collect();
        PrimedTableau::from_rows(&sp("7,6,5,2,1"), &sp("6,4,1"), &rows).unwrap()
    }

    #[test]
    fn letter_order_and_format() {
        let spec = VariableSpec::new(1, 1);
        let a = spec.primed_alphabet();
        let shown: Vec<_> = a.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["1'", "1", "1b'", "1b", "2'", "2"]);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        let u: Vec<_> = VariableSpec::new(2, 1).unprimed_alphabet().iter().map(|l| l.to_string()).collect();
        assert_eq!(u, ["1", "1b", "2", "2b", "3"]);
        for l in &a {
            assert_eq!(&l.to_string().parse::<Letter>().unwrap(), l);
        }
    }

    #[test]
    fn one_cell_symplectic() {
        let all: Vec<_> = enum_qt(VariableSpec::new(1, 0), &sp("1"), &sp("")).unwrap().collect();
        let shown: Vec<_> = all.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["1'", "1", "1b'", "1b"]);
        let t = &all[2];
        assert_eq!(qt_weight(t, VariableSpec::new(1, 0)), Monomial::new(vec![-1]));
    }

    #[test]
    fn figure_tableau_is_member() {
        let spec = VariableSpec::new(3, 2);
        let fig = figure_tableau();
        assert!(fig.is_valid(spec));
        assert_eq!(qt_weight(&fig, spec), Monomial::new(vec![0, 1, 0, 2, 1]));
        assert!(qt_accepts(spec, &fig));
        let mut bad = fig.rows();
        bad[2][2] = "3'".parse().unwrap();
        let bad = PrimedTableau::from_rows(&sp("7,6,5,2,1"), &sp("6,4,1"), &bad).unwrap();
        assert!(!qt_accepts(spec, &bad));
        assert!(!bad.is_valid(spec));
        assert_eq!(fig.to_string(), "3b'\n2 3b\n1' 3 3 5\n1b' 4'\n4");
    }

    #[test]
    fn empty_tableau_weight() {
        let spec = VariableSpec::new(1, 1);
        let all: Vec<_> = enum_qt(spec, &sp("2,1"), &sp("2,1")).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(qt_weight(&all[0], spec).is_one());
    }

    #[test]
    fn too_long_shape() {
        let spec = VariableSpec::new(0, 1);
        assert!(matches!(
            enum_qt(spec, &sp("2,1"), &sp("")),
            Err(Error::TooManyParts { .. })
        ));
        assert_eq!(enum_qt_unchecked(spec, &sp("2,1"), &sp("")).count(), 0);
        assert_eq!(enum_qt(spec, &sp("1"), &sp("2")).unwrap().count(), 0);
    }

    #[test]
    fn enumerator_agrees_with_checker() {
        for spec in VariableSpec::all_up_to(3) {
            for lam in StrictPartition::all_bounded(4, spec.n().min(3)) {
                for mu in enum_strict_between(&StrictPartition::empty(), &lam) {
                    let got: Vec<_> = enum_qt(spec, &lam, &mu).unwrap().collect();
                    assert!(got.iter().all(|t| t.is_valid(spec) && qt_accepts(spec, t)));
                    let set: HashSet<_> = got.iter().map(|t| t.entries().to_vec()).collect();
                    assert_eq!(set.len(), got.len());
                    // Brute force over all fillings for small shapes.
                    let cells = shifted_cells(&lam, &mu).unwrap().cells().len();
                    let alpha = spec.primed_alphabet();
                    if cells <= 4 && alpha.len().pow(cells as u32) <= 50_000 {
                        let mut count = 0;
                        let total = alpha.len().pow(cells as u32);
                        for code in 0..total {
                            let mut c = code;
                            let mut row_letters = Vec::new();
                            for _ in 0..cells {
                                row_letters.push(alpha[c % alpha.len()]);
                                c /= alpha.len();
                            }
                            let rows = split_rows(&lam, &mu, &row_letters);
                            let t = PrimedTableau::from_rows(&lam, &mu, &rows).unwrap();
                            if t.is_valid(spec) {
                                count += 1;
                            }
                        }
                        assert_eq!(count, got.len(), "{spec} {lam}/{mu}");
                    }
                }
            }
        }
    }

    fn split_rows(lam: &StrictPartition, mu: &StrictPartition, flat: &[Letter]) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        let mut at = 0;
        for i in 1..=lam.len() {
            let w = lam.part(i) - mu.part(i);
            out.push(flat[at..at + w].to_vec());
            at += w;
        }
        out
    }

    #[test]
    fn splitting_counts() {
        for spec in VariableSpec::all_up_to(4) {
            let (k, m) = (spec.k, spec.m);
            for lam in StrictPartition::all_up_to(6) {
                if lam.len() > spec.n() {
                    continue;
                }
                for mu in enum_strict_between(&StrictPartition::empty(), &lam) {
                    let whole = enum_qt(spec, &lam, &mu).unwrap().count();
                    let split: usize = enum_strict_between(&mu, &lam)
                        .iter()
                        .map(|nu| {
                            enum_qt_unchecked(VariableSpec::new(k, 0), nu, &mu).count()
                                * enum_qt_unchecked(VariableSpec::new(0, m), &lam, nu).count()
                        })
                        .sum();
                    assert_eq!(whole, split, "{spec} {lam}/{mu}");
                }
            }
        }
    }

    #[test]
    fn symplectic_cells_form_a_shifted_shape() {
        let spec = VariableSpec::new(2, 1);
        let lam = sp("4,2,1");
        let mu = sp("1");
        let nus: BTreeSet<_> = enum_strict_between(&mu, &lam).into_iter().collect();
        for t in enum_qt(spec, &lam, &mu).unwrap() {
            let mut rows = vec![0usize; lam.len()];
            for (&(i, _), l) in t.shape().cells().iter().zip(t.entries()) {
                if l.index <= spec.k {
                    rows[i - 1] += 1;
                }
            }
            let parts: Vec<_> = rows.iter().enumerate().map(|(i, r)| r + mu.part(i + 1)).collect();
            let nu = StrictPartition::new(parts).unwrap();
            assert!(nus.contains(&nu));
        }
    }

    #[test]
    fn spt_examples() {
        let s = VariableSpec::new(0, 2);
        let w: Vec<_> = enum_spt(s, &p("1"), &p("")).unwrap().map(|t| spt_weight(&t, s)).collect();
        assert_eq!(w, [Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1])]);

        let s = VariableSpec::new(2, 0);
        let all: Vec<_> = enum_spt(s, &p("1,1"), &p("")).unwrap().collect();
        let shown: Vec<_> = all.iter().map(|t| t.to_string().replace('\n', ",")).collect();
        assert_eq!(shown, ["1,2", "1,2b", "1b,2", "1b,2b", "2,2b"]);
        let ws: Vec<_> = all.iter().map(|t| spt_weight(t, s)).collect();
        assert_eq!(ws[0], Monomial::new(vec![1, 1]));
        assert_eq!(ws[4], Monomial::new(vec![0, 0]));
        assert_eq!(ws[3], Monomial::new(vec![-1, -1]));

        assert!(matches!(
            enum_spt(VariableSpec::new(1, 0), &p("1,1"), &p("")),
            Err(Error::TooManyParts { length: 2, vars: 1 })
        ));
        assert_eq!(enum_spt_unchecked(VariableSpec::new(1, 0), &p("1,1"), &p("")).count(), 0);
    }

    #[test]
    fn spt_splitting_counts() {
        for spec in VariableSpec::all_up_to(4) {
            for lam in Partition::all_up_to(5) {
                if lam.len() > spec.n() {
                    continue;
                }
                let whole = enum_spt(spec, &lam, &Partition::empty()).unwrap().count();
                let split: usize = lam
                    .subpartitions()
                    .iter()
                    .map(|mu| {
                        let c = enum_spt_unchecked(VariableSpec::new(spec.k, 0), mu, &Partition::empty()).count();
                        let a = enum_ssyt(spec.m, &lam, mu).count();
                        c * a
                    })
                    .sum();
                assert_eq!(whole, split, "{spec} {lam}");
            }
        }
    }
}
