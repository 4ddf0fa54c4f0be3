//! Schur-side evaluators: complete and elementary symmetric polynomials,
//! skew Schur, symplectic Schur and intermediate symplectic Schur.

use crate::error::{Error, Result};
use crate::linalg::{determinant, RingMatrix};
use crate::ring::{series_from_linear_factors, LaurentPoly, Monomial};
use crate::shapes::Partition;
use crate::tableaux::{enum_spt, enum_ssyt, spt_weight, VariableSpec};

/// The multiset of variable images an evaluator is specialized at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    n: usize,
    monomials: Vec<Monomial>,
}

impl Alphabet {
    pub fn new(n: usize, monomials: Vec<Monomial>) -> Result<Self> {
        if let Some(m) = monomials.iter().find(|m| m.n() != n) {
            return Err(Error::VariableCountMismatch {
                left: n,
                right: m.n(),
            });
        }
        Ok(Alphabet { n, monomials })
    }

    /// `x_i, x_i^{-1}` for `i` in `first..first+count` (0-based), in an
    /// `n`-variable ring.
    pub fn symplectic(first: usize, count: usize, n: usize) -> Self {
        let monomials = (first..first + count)
            .flat_map(|i| [Monomial::var(i, 1, n), Monomial::var(i, -1, n)])
            .collect();
        Alphabet { n, monomials }
    }

    /// `x_i` for `i` in `first..first+count` (0-based).
    pub fn plain(first: usize, count: usize, n: usize) -> Self {
        let monomials = (first..first + count).map(|i| Monomial::var(i, 1, n)).collect();
        Alphabet { n, monomials }
    }

    /// `x_1^{±1}, ..., x_k^{±1}, x_{k+1}, ..., x_n`.
    pub fn intermediate(spec: VariableSpec) -> Self {
        let n = spec.n();
        let mut a = Alphabet::symplectic(0, spec.k, n);
        a.monomials.extend(Alphabet::plain(spec.k, spec.m, n).monomials);
        a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// `[h_0, ..., h_degree]`.
    pub fn complete_table(&self, degree: usize) -> Vec<LaurentPoly> {
        series_from_linear_factors(self.n, &[], &self.monomials, degree)
            .expect("alphabet monomials share the ring")
            .into_coeffs()
    }

    /// `[e_0, ..., e_degree]`.
    pub fn elementary_table(&self, degree: usize) -> Vec<LaurentPoly> {
        series_from_linear_factors(self.n, &self.monomials, &[], degree)
            .expect("alphabet monomials share the ring")
            .into_coeffs()
    }
}

fn lookup(table: &[LaurentPoly], r: i64, n: usize) -> LaurentPoly {
    if r < 0 {
        LaurentPoly::zero(n)
    } else {
        table[r as usize].clone()
    }
}

pub fn complete_h(r: i64, a: &Alphabet) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(a.n);
    }
    a.complete_table(r as usize).pop().unwrap()
}

pub fn elementary_e(r: i64, a: &Alphabet) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(a.n);
    }
    a.elementary_table(r as usize).pop().unwrap()
}

fn jacobi_trudi(lambda: &[usize], mu: &[usize], table: &[LaurentPoly], n: usize) -> LaurentPoly {
    let size = lambda.len().max(mu.len());
    let part = |p: &[usize], i: usize| p.get(i).copied().unwrap_or(0) as i64;
    let m = RingMatrix::from_fn(n, size, size, |i, j| {
        lookup(table, part(lambda, i) - part(mu, j) - i as i64 + j as i64, n)
    })
    .expect("entries share the ring");
    determinant(&m).expect("square")
}

/// `det[h_{λ_i - μ_j - i + j}]`; zero when `μ ⊄ λ`.
pub fn schur_skew(lambda: &Partition, mu: &Partition, a: &Alphabet) -> LaurentPoly {
    if !lambda.contains(mu) {
        return LaurentPoly::zero(a.n);
    }
    let table = a.complete_table(lambda.weight());
    jacobi_trudi(lambda.parts(), mu.parts(), &table, a.n)
}

/// `det[e_{λ'_i - μ'_j - i + j}]`.
pub fn schur_skew_e(lambda: &Partition, mu: &Partition, a: &Alphabet) -> LaurentPoly {
    if !lambda.contains(mu) {
        return LaurentPoly::zero(a.n);
    }
    let table = a.elementary_table(lambda.weight());
    jacobi_trudi(lambda.transpose().parts(), mu.transpose().parts(), &table, a.n)
}

/// Semistandard tableau sum for `λ/μ` in the variables
/// `x_{first+1}, ..., x_{first+count}` of an `n`-variable ring.
pub fn schur_skew_tableau(lambda: &Partition, mu: &Partition, first: usize, count: usize, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n);
    for t in enum_ssyt(count, lambda, mu) {
        let mut e = vec![0; n];
        for l in t.entries() {
            e[first + l.index - 1] += 1;
        }
        acc.add_assign_ref(&LaurentPoly::term(1, Monomial::new(e)));
    }
    acc
}

/// Symplectic Schur determinant on an arbitrary alphabet, with the first
/// column already halved: entries `h_{λ_i-i+1}` there and
/// `h_{λ_i-i+j} + h_{λ_i-i-j+2}` elsewhere.
pub fn symp_schur_on(lambda: &Partition, a: &Alphabet) -> LaurentPoly {
    let l = lambda.len();
    let table = a.complete_table(lambda.part(1) + l);
    let n = a.n;
    let m = RingMatrix::from_fn(n, l, l, |i, j| {
        let base = lambda.part(i + 1) as i64 - i as i64;
        if j == 0 {
            lookup(&table, base, n)
        } else {
            &lookup(&table, base + j as i64, n) + &lookup(&table, base - j as i64, n)
        }
    })
    .expect("entries share the ring");
    determinant(&m).expect("square")
}

/// `s^C_λ(x_1^{±1}, ..., x_k^{±1})` in a `k`-variable ring.
pub fn symp_schur(lambda: &Partition, k: usize) -> Result<LaurentPoly> {
    if lambda.len() > k {
        return Err(Error::TooManyParts {
            length: lambda.len(),
            vars: k,
        });
    }
    Ok(symp_schur_on(lambda, &Alphabet::symplectic(0, k, k)))
}

/// King tableau sum for `s^C_λ` on `k` pairs.
pub fn symp_schur_tableau(lambda: &Partition, k: usize) -> Result<LaurentPoly> {
    inter_schur(lambda, VariableSpec::new(k, 0), InterSchurMethod::Tableau)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterSchurMethod {
    Definition,
    Tableau,
}

/// The intermediate symplectic Schur polynomial for `spec`.
///
/// `Definition` sums `s^C_μ(x_1..x_k) · s_{λ/μ}(x_{k+1}..x_n)` over all
/// partitions `μ ⊆ λ`, taking `s^C_μ = 0` when `ℓ(μ) > k`. `Tableau` sums
/// weights of symplectic tableaux.
pub fn inter_schur(lambda: &Partition, spec: VariableSpec, method: InterSchurMethod) -> Result<LaurentPoly> {
    let n = spec.n();
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            length: lambda.len(),
            vars: n,
        });
    }
    match method {
        InterSchurMethod::Definition => {
            let c = Alphabet::symplectic(0, spec.k, n);
            let a = Alphabet::plain(spec.k, spec.m, n);
            let mut acc = LaurentPoly::zero(n);
            for mu in lambda.subpartitions() {
                if mu.len() > spec.k {
                    continue;
                }
                let left = symp_schur_on(&mu, &c);
                if left.is_zero() {
                    continue;
                }
                let right = schur_skew(lambda, &mu, &a);
                acc.add_assign_ref(&(&left * &right));
            }
            Ok(acc)
        }
        InterSchurMethod::Tableau => {
            let mut acc = LaurentPoly::zero(n);
            for t in enum_spt(spec, lambda, &Partition::empty())? {
                acc.add_assign_ref(&LaurentPoly::term(1, spt_weight(&t, spec)));
            }
            Ok(acc)
        }
    }
}

/// Compares the intermediate polynomial with the symplectic Schur
/// determinant on the combined alphabet. Needs `ℓ(λ) <= k + 1`.
pub fn check_union_identity(lambda: &Partition, spec: VariableSpec) -> Result<bool> {
    if lambda.len() > spec.k + 1 {
        return Err(Error::Precondition(format!(
            "length {} exceeds k + 1 = {}",
            lambda.len(),
            spec.k + 1
        )));
    }
    let lhs = inter_schur(lambda, spec, InterSchurMethod::Definition)?;
    let rhs = symp_schur_on(lambda, &Alphabet::intermediate(spec));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn parse(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn complete_examples() {
        let a = Alphabet::symplectic(0, 1, 1);
        assert!(complete_h(-1, &a).is_zero());
        assert!(complete_h(0, &a).is_one());
        assert_eq!(complete_h(1, &a), parse("x1 + x1^-1", 1));
        let b = Alphabet::plain(0, 2, 2);
        assert_eq!(complete_h(2, &b), parse("x1^2 + x1*x2 + x2^2", 2));
        assert_eq!(elementary_e(2, &b), parse("x1*x2", 2));
        assert!(elementary_e(3, &b).is_zero());
    }

    #[test]
    fn skew_schur_examples() {
        let a = Alphabet::plain(0, 2, 2);
        assert_eq!(schur_skew(&p("1"), &p(""), &a), parse("x1 + x2", 2));
        assert_eq!(schur_skew(&p("2,1"), &p(""), &a), parse("x1^2*x2 + x1*x2^2", 2));
        assert!(schur_skew(&p("1"), &p("2"), &a).is_zero());
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(symp_schur(&p("1"), 1).unwrap(), parse("x1 + x1^-1", 1));
        let want = &(&parse("x1 + x1^-1", 2) * &parse("x2 + x2^-1", 2)) + &LaurentPoly::one(2);
        assert_eq!(symp_schur(&p("1,1"), 2).unwrap(), want);
        assert_eq!(symp_schur_tableau(&p("1,1"), 2).unwrap(), want);
        assert!(symp_schur(&p(""), 3).unwrap().is_one());
        assert!(symp_schur(&p("1,1"), 1).is_err());
    }

    #[test]
    fn intermediate_examples() {
        let s = VariableSpec::new(1, 1);
        for method in [InterSchurMethod::Definition, InterSchurMethod::Tableau] {
            assert_eq!(inter_schur(&p("1"), s, method).unwrap(), parse("x1 + x1^-1 + x2", 2));
        }
        assert!(check_union_identity(&p("1"), s).unwrap());
        assert!(check_union_identity(&p("2"), VariableSpec::new(1, 2)).unwrap());
        assert!(check_union_identity(&p(""), VariableSpec::new(0, 2)).unwrap());
        assert!(check_union_identity(&p("1,1,1"), s).is_err());
        assert!(inter_schur(&p("1,1,1"), s, InterSchurMethod::Tableau).is_err());
    }

    #[test]
    fn degenerations() {
        for lam in Partition::all_up_to(4) {
            for n in lam.len().max(1)..=3 {
                let a = Alphabet::plain(0, n, n);
                let want = schur_skew(&lam, &Partition::empty(), &a);
                let got = inter_schur(&lam, VariableSpec::new(0, n), InterSchurMethod::Definition).unwrap();
                assert_eq!(got, want);
                assert_eq!(schur_skew_tableau(&lam, &Partition::empty(), 0, n, n), want);
                let c = symp_schur(&lam, n).unwrap();
                let got = inter_schur(&lam, VariableSpec::new(n, 0), InterSchurMethod::Tableau).unwrap();
                assert_eq!(got, c, "{lam} {n}");
            }
        }
    }

    #[test]
    fn h_and_e_forms_agree() {
        let a = Alphabet::plain(0, 3, 3);
        let c = Alphabet::symplectic(0, 1, 2);
        for lam in Partition::all_up_to(6) {
            for mu in lam.subpartitions() {
                assert_eq!(schur_skew(&lam, &mu, &a), schur_skew_e(&lam, &mu, &a));
                assert_eq!(schur_skew(&lam, &mu, &c), schur_skew_e(&lam, &mu, &c));
            }
        }
    }

    #[test]
    fn skew_schur_matches_tableaux() {
        for lam in Partition::all_up_to(5) {
            for mu in lam.subpartitions() {
                let a = Alphabet::plain(1, 2, 3);
                assert_eq!(schur_skew(&lam, &mu, &a), schur_skew_tableau(&lam, &mu, 1, 2, 3));
            }
        }
    }

    #[test]
    fn symplectic_is_weyl_invariant() {
        for lam in Partition::all_up_to(4) {
            if lam.len() > 2 {
                continue;
            }
            let s = symp_schur(&lam, 2).unwrap();
            assert_eq!(s.invert_var(0), s);
            assert_eq!(s.invert_var(1), s);
            assert_eq!(s.swap_vars(0, 1), s);
        }
    }
}
