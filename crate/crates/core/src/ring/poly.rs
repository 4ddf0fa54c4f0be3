use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial `x1^e1 * ... * xn^en`.
///
/// Monomials are ordered lexicographically on their exponent vectors, where
/// a single exponent sorts positive powers first (highest first), then
/// negative powers (`-1` before `-2`), then zero. This is the order in which
/// terms are printed, e.g. `x1^2 + x1 + x1^-1 + x2 + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<i32>);

fn exponent_key(e: i32) -> (u8, i64) {
    match e.cmp(&0) {
        Ordering::Greater => (0, -(e as i64)),
        Ordering::Less => (1, -(e as i64)),
        Ordering::Equal => (2, 0),
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match exponent_key(*a).cmp(&exponent_key(*b)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_{var+1}^exp` (zero-based `var`).
    pub fn var(var: usize, exp: i32, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[var] = exp;
        Monomial(exps)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Product of two monomials (exponent addition).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }
}

impl From<Vec<i32>> for Monomial {
    fn from(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }
}

/// Sparse Laurent polynomial in `n` variables with big-integer coefficients.
///
/// No stored coefficient is zero, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// `a op b`, failing when the variable counts differ.
pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: ArithOp) -> Result<LaurentPoly> {
    a.check_same(b)?;
    Ok(match op {
        ArithOp::Add => a.add_unchecked(b, false),
        ArithOp::Sub => a.add_unchecked(b, true),
        ArithOp::Mul => a.mul_unchecked(b),
    })
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(BigInt::one(), n)
    }

    pub fn constant(c: impl Into<BigInt>, n: usize) -> Self {
        Self::term(c, Monomial::one(n))
    }

    /// `x_{var+1}` (zero-based `var`).
    pub fn var(var: usize, n: usize) -> Self {
        Self::term(1, Monomial::var(var, 1, n))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { n, terms }
    }

    /// Builds a polynomial from possibly repeated monomials, summing coefficients.
    pub fn from_terms<I, C>(n: usize, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero(n);
        for (m, c) in it {
            if m.n() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: m.n(),
                });
            }
            p.add_term(m, c.into());
        }
        Ok(p)
    }

    /// Sums a multiset of monomials given as occurrence counts.
    pub fn from_counts(n: usize, counts: HashMap<Monomial, u64>) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in counts {
            debug_assert_eq!(m.n(), n);
            if c != 0 {
                terms.insert(m, BigInt::from(c));
            }
        }
        LaurentPoly { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in canonical (printing) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients, i.e. the value at `x1 = ... = xn = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn check_same(&self, other: &LaurentPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_unchecked(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_unchecked(&self, other: &LaurentPoly) -> LaurentPoly {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { n: self.n, terms }
    }

    /// `self += other`; panics on variable-count mismatch.
    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> LaurentPoly {
        let c = c.into();
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * &c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        assert_eq!(self.n, m.n(), "variable count mismatch");
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// A unit of the Laurent ring is `±monomial`; returns its inverse.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(LaurentPoly::term(c.clone(), m.inv()))
        } else {
            None
        }
    }

    /// Ring homomorphism sending `x_{i+1}` to `images[i]`.
    ///
    /// A variable that occurs with a negative exponent must be sent to a unit.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.n {
            return Err(Error::ImageCountMismatch {
                expected: self.n,
                got: images.len(),
            });
        }
        let target_n = images.first().map_or(0, |p| p.n);
        for img in images {
            if img.n != target_n {
                return Err(Error::VariableCountMismatch {
                    left: target_n,
                    right: img.n,
                });
            }
        }
        let mut inverses: Vec<Option<LaurentPoly>> = vec![None; self.n];
        for (var, img) in images.iter().enumerate() {
            let needs_inverse = self.terms.keys().any(|m| m.0[var] < 0);
            if needs_inverse {
                inverses[var] = Some(
                    img.unit_inverse()
                        .ok_or(Error::NonUnitSubstitution { var: var + 1 })?,
                );
            }
        }
        let mut powers: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero(target_n);
        for (m, c) in &self.terms {
            let mut t = LaurentPoly::constant(c.clone(), target_n);
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers.entry((var, e)).or_insert_with(|| {
                    if e > 0 {
                        images[var].pow(e as u32)
                    } else {
                        inverses[var]
                            .as_ref()
                            .expect("inverse checked above")
                            .pow(e.unsigned_abs())
                    }
                });
                t = &t * p;
                if t.is_zero() {
                    break;
                }
            }
            out.add_assign_ref(&t);
        }
        Ok(out)
    }

    /// Re-embeds into `target_n` variables, sending `x_{i+1}` to `x_{map[i]+1}`.
    pub fn rename_vars(&self, map: &[usize], target_n: usize) -> LaurentPoly {
        assert_eq!(map.len(), self.n);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; target_n];
                for (i, &e) in m.0.iter().enumerate() {
                    exps[map[i]] += e;
                }
                (Monomial(exps), c.clone())
            })
            .collect::<Vec<_>>();
        let mut out = LaurentPoly::zero(target_n);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Image under `x_{var+1} -> x_{var+1}^{-1}`.
    pub fn invert_var(&self, var: usize) -> LaurentPoly {
        let images: Vec<_> = (0..self.n)
            .map(|i| {
                let e = if i == var { -1 } else { 1 };
                LaurentPoly::term(1, Monomial::var(i, e, self.n))
            })
            .collect();
        self.substitute(&images).expect("monomial images are units")
    }

    /// Image under the transposition `x_{a+1} <-> x_{b+1}`.
    pub fn swap_vars(&self, a: usize, b: usize) -> LaurentPoly {
        let images: Vec<_> = (0..self.n)
            .map(|i| {
                let j = if i == a {
                    b
                } else if i == b {
                    a
                } else {
                    i
                };
                LaurentPoly::var(j, self.n)
            })
            .collect();
        self.substitute(&images).expect("variables are units")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[n={}]({})", self.n, self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        poly_arith(self, rhs, ArithOp::Add).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        poly_arith(self, rhs, ArithOp::Sub).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        poly_arith(self, rhs, ArithOp::Mul).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, e: i32, n: usize) -> LaurentPoly {
        LaurentPoly::term(1, Monomial::var(i, e, n))
    }

    #[test]
    fn difference_of_squares() {
        let a = &x(0, 1, 1) + &x(0, -1, 1);
        let b = &x(0, 1, 1) - &x(0, -1, 1);
        let expected = &x(0, 2, 1) - &x(0, -2, 1);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn additive_identity() {
        let p = &x(0, 3, 2) + &x(1, -1, 2).scale(-5);
        assert_eq!(&p + &LaurentPoly::zero(2), p);
    }

    #[test]
    fn hand_multiplication() {
        let a = LaurentPoly::term(2, Monomial::new(vec![1, 1]));
        let b = LaurentPoly::term(2, Monomial::new(vec![1, -1]));
        assert_eq!(&a * &b, LaurentPoly::term(4, Monomial::new(vec![2, 0])));
    }

    #[test]
    fn mismatch_is_an_error() {
        let err = poly_arith(&LaurentPoly::one(1), &LaurentPoly::one(2), ArithOp::Add);
        assert_eq!(
            err,
            Err(Error::VariableCountMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &x(0, 1, 1) - &x(0, 1, 1);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero(1));
    }

    #[test]
    fn substitute_inverse_pair() {
        let p = LaurentPoly::term(1, Monomial::new(vec![1, 1]));
        let images = [x(0, 1, 1), x(0, -1, 1)];
        assert_eq!(p.substitute(&images).unwrap(), LaurentPoly::one(1));
    }

    #[test]
    fn substitute_truncation() {
        let p = &LaurentPoly::var(0, 2) + &LaurentPoly::var(1, 2);
        let images = [LaurentPoly::var(0, 1), LaurentPoly::zero(1)];
        assert_eq!(p.substitute(&images).unwrap(), LaurentPoly::var(0, 1));
    }

    #[test]
    fn substitute_zero_into_negative_power_fails() {
        let p = x(0, -1, 1);
        let r = p.substitute(&[LaurentPoly::zero(1)]);
        assert_eq!(r, Err(Error::NonUnitSubstitution { var: 1 }));
        let q = &LaurentPoly::var(0, 2) + &LaurentPoly::var(1, 2);
        let r = x(0, -2, 1).substitute(&[q]);
        assert_eq!(r, Err(Error::NonUnitSubstitution { var: 1 }));
    }

    #[test]
    fn identity_substitution() {
        let p = &(&x(0, 2, 2) + &x(1, -3, 2)).scale(7) - &LaurentPoly::one(2);
        let images = [LaurentPoly::var(0, 2), LaurentPoly::var(1, 2)];
        assert_eq!(p.substitute(&images).unwrap(), p);
    }

    #[test]
    fn monomial_order() {
        let mut ms = [
            Monomial::new(vec![0, 1]),
            Monomial::new(vec![-1, 0]),
            Monomial::new(vec![0, 0]),
            Monomial::new(vec![2, 0]),
            Monomial::new(vec![1, 0]),
            Monomial::new(vec![-2, 0]),
        ];
        ms.sort();
        let exps: Vec<_> = ms.iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(
            exps,
            vec![
                vec![2, 0],
                vec![1, 0],
                vec![-1, 0],
                vec![-2, 0],
                vec![0, 1],
                vec![0, 0]
            ]
        );
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let p = LaurentPoly::constant(i64::MAX, 1);
        let sq = &p * &p;
        let expected = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(&Monomial::one(1)), expected);
    }
}
