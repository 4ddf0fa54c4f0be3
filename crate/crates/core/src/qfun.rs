//! Q-side evaluators: one-row series, two-row recursions, skew Pfaffian
//! formulas of types A and C, and the intermediate family computed by
//! definition, tableau sum, branching and Pfaffian.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{pfaffian, RingMatrix};
use crate::ring::{series_from_linear_factors, LaurentPoly};
use crate::shapes::{enum_strict_between, pad_for_pfaffian, StrictPartition};
use crate::symfun::Alphabet;
use crate::tableaux::{enum_qt, enum_qt_unchecked, letters_weight, QtIter, VariableSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    C,
}

/// Coefficients of `∏(1+uz)/(1-uz)` over an alphabet, extended on demand.
#[derive(Clone, Debug)]
struct QTable {
    alphabet: Alphabet,
    values: Vec<LaurentPoly>,
}

impl QTable {
    fn new(alphabet: Alphabet) -> Self {
        QTable {
            alphabet,
            values: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.alphabet.n()
    }

    fn ensure(&mut self, degree: usize) {
        if self.values.len() > degree {
            return;
        }
        let target = degree.max(2 * self.values.len()).max(8);
        let m = self.alphabet.monomials();
        self.values = series_from_linear_factors(self.n(), m, m, target)
            .expect("alphabet monomials share the ring")
            .into_coeffs();
    }

    fn get(&mut self, r: i64) -> LaurentPoly {
        if r < 0 {
            return LaurentPoly::zero(self.n());
        }
        self.ensure(r as usize);
        self.values[r as usize].clone()
    }

    fn is_trivial(&self) -> bool {
        self.alphabet.monomials().is_empty()
    }

    /// `Q_(r,s)` from the two-row recursion of the given type, with
    /// `Q_(r,0) = q_r`, `Q_(s,r) = -Q_(r,s)` and `Q_(r,r) = 0`.
    fn two_row(&mut self, family: Family, r: usize, s: usize) -> LaurentPoly {
        if r == s {
            return LaurentPoly::zero(self.n());
        }
        if r < s {
            return -self.two_row(family, s, r);
        }
        let (r, s) = (r as i64, s as i64);
        if s == 0 {
            return self.get(r);
        }
        let mut acc = &self.get(r) * &self.get(s);
        for t in 1..=s {
            let mut inner = self.get(r + t);
            if family == Family::C {
                for i in 1..t {
                    inner.add_assign_ref(&self.get(r + t - 2 * i).scale(2));
                }
                inner.add_assign_ref(&self.get(r - t));
            }
            let term = (&inner * &self.get(s - t)).scale(2);
            if t % 2 == 0 {
                acc.add_assign_ref(&term);
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    fn jp(&mut self, family: Family, lambda: &StrictPartition, mu: &StrictPartition) -> LaurentPoly {
        if !lambda.contains(mu) {
            return LaurentPoly::zero(self.n());
        }
        if self.is_trivial() {
            return if lambda == mu {
                LaurentPoly::one(self.n())
            } else {
                LaurentPoly::zero(self.n())
            };
        }
        let (l, m) = pad_for_pfaffian(lambda, mu);
        let mut two = HashMap::new();
        for &a in &l {
            for &b in &l {
                two.entry((a, b)).or_insert_with(|| self.two_row(family, a, b));
            }
        }
        self.ensure(lambda.part(1));
        let values = &self.values;
        let one = |r: i64| {
            if r < 0 {
                LaurentPoly::zero(values[0].n())
            } else {
                values[r as usize].clone()
            }
        };
        let mat = block_matrix(self.n(), &l, &m, |a, b| two[&(a, b)].clone(), one);
        pfaffian(&mat).expect("block matrix is skew-symmetric")
    }
}

/// `[[M, N], [-Nᵀ, O]]` with `M_ij = two(λ_i, λ_j)` and
/// `N_ij = one(λ_i - μ_{m+1-j})`.
fn block_matrix(
    n: usize,
    l: &[usize],
    m: &[usize],
    two: impl Fn(usize, usize) -> LaurentPoly,
    one: impl Fn(i64) -> LaurentPoly,
) -> RingMatrix {
    let (ll, mm) = (l.len(), m.len());
    let size = ll + mm;
    let mut mat = RingMatrix::zeros(n, size, size);
    for i in 0..ll {
        for j in i + 1..ll {
            let v = two(l[i], l[j]);
            mat.set(j, i, -&v);
            mat.set(i, j, v);
        }
        for j in 0..mm {
            let v = one(l[i] as i64 - m[mm - 1 - j] as i64);
            mat.set(ll + j, i, -&v);
            mat.set(i, ll + j, v);
        }
    }
    mat
}

/// Shared memo tables for one variable spec.
pub struct QContext {
    spec: VariableSpec,
    full: QTable,
    c_part: QTable,
    a_part: QTable,
    c_skew: HashMap<(StrictPartition, StrictPartition), LaurentPoly>,
    a_skew: HashMap<(StrictPartition, StrictPartition), LaurentPoly>,
    two_row: HashMap<(usize, usize), LaurentPoly>,
    single: HashMap<(Family, StrictPartition, StrictPartition), LaurentPoly>,
}

impl QContext {
    pub fn new(spec: VariableSpec) -> Self {
        let n = spec.n();
        QContext {
            spec,
            full: QTable::new(Alphabet::intermediate(spec)),
            c_part: QTable::new(Alphabet::symplectic(0, spec.k, n)),
            a_part: QTable::new(Alphabet::plain(spec.k, spec.m, n)),
            c_skew: HashMap::new(),
            a_skew: HashMap::new(),
            two_row: HashMap::new(),
            single: HashMap::new(),
        }
    }

    pub fn spec(&self) -> VariableSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    fn check_length(&self, lambda: &StrictPartition) -> Result<()> {
        if lambda.len() > self.n() {
            return Err(Error::TooManyParts {
                length: lambda.len(),
                vars: self.n(),
            });
        }
        Ok(())
    }

    /// Coefficient of `z^l` in the one-row generating series.
    pub fn q_row(&mut self, l: i64) -> LaurentPoly {
        self.full.get(l)
    }

    fn c_factor(&mut self, nu: &StrictPartition, mu: &StrictPartition) -> LaurentPoly {
        let key = (nu.clone(), mu.clone());
        if let Some(v) = self.c_skew.get(&key) {
            return v.clone();
        }
        let v = self.c_part.jp(Family::C, nu, mu);
        self.c_skew.insert(key, v.clone());
        v
    }

    fn a_factor(&mut self, lambda: &StrictPartition, nu: &StrictPartition) -> LaurentPoly {
        let key = (lambda.clone(), nu.clone());
        if let Some(v) = self.a_skew.get(&key) {
            return v.clone();
        }
        let v = self.a_part.jp(Family::A, lambda, nu);
        self.a_skew.insert(key, v.clone());
        v
    }

    /// Sum over strict `μ ⊆ ν ⊆ λ` of the type-C skew function of `ν/μ` in
    /// `x_1..x_k` times the type-A skew function of `λ/ν` in `x_{k+1}..x_n`.
    pub fn qi_def(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> Result<LaurentPoly> {
        self.check_length(lambda)?;
        Ok(self.qi_def_unchecked(lambda, mu))
    }

    /// [`QContext::qi_def`] without the length precondition.
    pub fn qi_def_unchecked(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(self.n());
        for nu in enum_strict_between(mu, lambda) {
            let c = self.c_factor(&nu, mu);
            if c.is_zero() {
                continue;
            }
            let a = self.a_factor(lambda, &nu);
            if a.is_zero() {
                continue;
            }
            acc.add_assign_ref(&(&c * &a));
        }
        acc
    }

    pub fn qi_tableau(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> Result<LaurentPoly> {
        let it = enum_qt(self.spec, lambda, mu)?;
        Ok(self.sum_weights(it))
    }

    /// Tableau sum without the length precondition.
    pub fn qi_tableau_unchecked(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> LaurentPoly {
        let it = enum_qt_unchecked(self.spec, lambda, mu);
        self.sum_weights(it)
    }

    fn sum_weights(&self, mut it: QtIter) -> LaurentPoly {
        let spec = self.spec;
        let mut counts: HashMap<_, u64> = HashMap::new();
        while let Some(entries) = it.next_entries() {
            *counts.entry(letters_weight(&entries, spec)).or_default() += 1;
        }
        LaurentPoly::from_counts(self.n(), counts)
    }

    /// Intermediate two-row value with the usual boundary conventions.
    fn qi_two_row(&mut self, r: usize, s: usize) -> Result<LaurentPoly> {
        if r == s {
            return Ok(LaurentPoly::zero(self.n()));
        }
        if r < s {
            return Ok(-self.qi_two_row(s, r)?);
        }
        if s == 0 {
            return Ok(self.q_row(r as i64));
        }
        if let Some(v) = self.two_row.get(&(r, s)) {
            return Ok(v.clone());
        }
        let lam = StrictPartition::new(vec![r, s])?;
        let v = self.qi_def_unchecked(&lam, &StrictPartition::empty());
        self.two_row.insert((r, s), v.clone());
        Ok(v)
    }

    /// The Pfaffian block matrix with intermediate two-row and one-row
    /// entries. Needs `ℓ(λ) >= 2`.
    pub fn qi_jp_matrix(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> Result<RingMatrix> {
        if lambda.len() < 2 {
            return Err(Error::Precondition(format!(
                "Pfaffian route needs at least two rows, got {lambda}"
            )));
        }
        let (l, m) = pad_for_pfaffian(lambda, mu);
        let mut two = HashMap::new();
        for &a in &l {
            for &b in &l {
                if let std::collections::hash_map::Entry::Vacant(e) = two.entry((a, b)) {
                    e.insert(self.qi_two_row(a, b)?);
                }
            }
        }
        self.full.ensure(lambda.part(1));
        let values = &self.full.values;
        let n = self.spec.n();
        let one = |r: i64| {
            if r < 0 {
                LaurentPoly::zero(n)
            } else {
                values[r as usize].clone()
            }
        };
        Ok(block_matrix(n, &l, &m, |a, b| two[&(a, b)].clone(), one))
    }

    pub fn qi_jp(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> Result<LaurentPoly> {
        let mat = self.qi_jp_matrix(lambda, mu)?;
        pfaffian(&mat)
    }

    /// Pfaffian route where it applies; one-row shapes go to the series
    /// coefficient directly.
    pub fn qi_pfaffian(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> Result<LaurentPoly> {
        if lambda.len() >= 2 {
            return self.qi_jp(lambda, mu);
        }
        if !lambda.contains(mu) {
            return Ok(LaurentPoly::zero(self.n()));
        }
        Ok(self.q_row(lambda.part(1) as i64 - mu.part(1) as i64))
    }

    fn single(&mut self, family: Family, lambda: &StrictPartition, mu: &StrictPartition) -> LaurentPoly {
        let key = (family, lambda.clone(), mu.clone());
        if let Some(v) = self.single.get(&key) {
            return v.clone();
        }
        let v = q_single_var(family, lambda, mu);
        self.single.insert(key, v.clone());
        v
    }

    /// Sum over chains `μ = μ⁰ ⊆ μ¹ ⊆ ... ⊆ μⁿ = λ` of products of
    /// single-variable skew factors, type C for `x_1..x_k` and type A after.
    pub fn qi_branch(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> Result<LaurentPoly> {
        self.check_length(lambda)?;
        Ok(self.qi_branch_unchecked(lambda, mu))
    }

    /// [`QContext::qi_branch`] without the `ℓ(λ) <= n` check.
    pub fn qi_branch_unchecked(&mut self, lambda: &StrictPartition, mu: &StrictPartition) -> LaurentPoly {
        let n = self.n();
        if !lambda.contains(mu) {
            return LaurentPoly::zero(n);
        }
        let mut layer: BTreeMap<StrictPartition, LaurentPoly> = BTreeMap::new();
        layer.insert(mu.clone(), LaurentPoly::one(n));
        for var in 0..n {
            let family = if var < self.spec.k { Family::C } else { Family::A };
            let mut next: BTreeMap<StrictPartition, LaurentPoly> = BTreeMap::new();
            for (nu, acc) in &layer {
                for rho in enum_strict_between(nu, lambda) {
                    if rho.len() > nu.len() + 1 {
                        continue;
                    }
                    let f = self.single(family, &rho, nu);
                    if f.is_zero() {
                        continue;
                    }
                    let f = f.rename_vars(&[var], n);
                    next.entry(rho)
                        .or_insert_with(|| LaurentPoly::zero(n))
                        .add_assign_ref(&(acc * &f));
                }
            }
            layer = next;
        }
        layer.remove(lambda).unwrap_or_else(|| LaurentPoly::zero(n))
    }
}

/// Coefficient of `z^l` in
/// `∏_{i<=k} (1+x_i z)(1+x_i^{-1} z)/((1-x_i z)(1-x_i^{-1} z)) · ∏_{j>k} (1+x_j z)/(1-x_j z)`.
pub fn q_row(l: i64, spec: VariableSpec) -> LaurentPoly {
    QContext::new(spec).q_row(l)
}

/// Type-A two-row value on `n` variables.
pub fn qa_two_row(r: usize, s: usize, n: usize) -> LaurentPoly {
    QTable::new(Alphabet::plain(0, n, n)).two_row(Family::A, r, s)
}

/// Type-C two-row value on `k` symplectic pairs.
pub fn qc_two_row(r: usize, s: usize, k: usize) -> LaurentPoly {
    QTable::new(Alphabet::symplectic(0, k, k)).two_row(Family::C, r, s)
}

/// Skew Pfaffian formula of the given type. Type A needs `spec.k == 0`,
/// type C needs `spec.m == 0`.
pub fn q_skew_jp(family: Family, lambda: &StrictPartition, mu: &StrictPartition, spec: VariableSpec) -> Result<LaurentPoly> {
    let n = spec.n();
    let alphabet = match family {
        Family::A if spec.k == 0 => Alphabet::plain(0, n, n),
        Family::C if spec.m == 0 => Alphabet::symplectic(0, n, n),
        _ => {
            return Err(Error::Precondition(format!(
                "type {family:?} does not accept the mixed spec {spec}"
            )))
        }
    };
    Ok(QTable::new(alphabet).jp(family, lambda, mu))
}

pub fn qi_def(lambda: &StrictPartition, mu: &StrictPartition, spec: VariableSpec) -> Result<LaurentPoly> {
    QContext::new(spec).qi_def(lambda, mu)
}

pub fn qi_tableau(lambda: &StrictPartition, mu: &StrictPartition, spec: VariableSpec) -> Result<LaurentPoly> {
    QContext::new(spec).qi_tableau(lambda, mu)
}

pub fn qi_jp(lambda: &StrictPartition, mu: &StrictPartition, spec: VariableSpec) -> Result<LaurentPoly> {
    QContext::new(spec).qi_jp(lambda, mu)
}

pub fn qi_branch(lambda: &StrictPartition, mu: &StrictPartition, spec: VariableSpec) -> Result<LaurentPoly> {
    QContext::new(spec).qi_branch(lambda, mu)
}

/// One-variable skew function: zero if `ℓ(λ) - ℓ(μ) > 1` or `μ ⊄ λ`,
/// otherwise `det[Q_(λ_i - μ_j)(x)]` with `μ` padded by zeros.
pub fn q_single_var(family: Family, lambda: &StrictPartition, mu: &StrictPartition) -> LaurentPoly {
    if !lambda.contains(mu) || lambda.len() > mu.len() + 1 {
        return LaurentPoly::zero(1);
    }
    let alphabet = match family {
        Family::A => Alphabet::plain(0, 1, 1),
        Family::C => Alphabet::symplectic(0, 1, 1),
    };
    let mut table = QTable::new(alphabet);
    let l = lambda.len();
    let mut entries = Vec::with_capacity(l * l);
    for i in 1..=l {
        for j in 1..=l {
            entries.push(table.get(lambda.part(i) as i64 - mu.part(j) as i64));
        }
    }
    let mat = RingMatrix::new(1, l, l, entries).expect("square");
    crate::linalg::determinant(&mat).expect("square")
}
