//! Cross-verification suites over bounded ranges of shapes and specs.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::lgv::{enum_path_families, family_to_tableau, family_weight, lgv_weight_sum};
use crate::linalg::{determinant, pfaffian, RingMatrix};
use crate::qfun::{q_skew_jp, Family, QContext};
use crate::ring::{series_from_linear_factors, LaurentPoly, Monomial};
use crate::shapes::{enum_strict_between, Partition, StrictPartition};
use crate::symfun::{
    check_union_identity, inter_schur, schur_skew, schur_skew_e, symp_schur, Alphabet, InterSchurMethod,
};
use crate::tableaux::{enum_qt, enum_qt_unchecked, enum_spt, enum_spt_unchecked, enum_ssyt, qt_weight, VariableSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ring,
    Tableaux,
    Schur,
    Qfun,
    Lgv,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ring" => Suite::Ring,
            "tableaux" => Suite::Tableaux,
            "schur" => Suite::Schur,
            "qfun" => Suite::Qfun,
            "lgv" => Suite::Lgv,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Upper bounds on `|λ|` and on `k + m`.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_weight: usize,
    pub max_vars: usize,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}/{} ({} cases)", self.suite, self.name, self.cases)?;
        for fail in self.failures.iter().take(5) {
            write!(f, "\n    {fail}")?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n    ... {} more", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

struct Check {
    result: CheckResult,
}

impl Check {
    fn new(suite: &'static str, name: &'static str) -> Self {
        Check {
            result: CheckResult {
                suite,
                name,
                cases: 0,
                failures: Vec::new(),
            },
        }
    }

    fn case(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.failures.push(label());
        }
    }

    fn done(self) -> CheckResult {
        self.result
    }
}

/// Invariance under `x_i -> x_i^{-1}` for `i <= k` and under transpositions
/// of `x_{k+1}, ..., x_n`.
pub fn weyl_invariant(p: &LaurentPoly, spec: VariableSpec) -> bool {
    (0..spec.k).all(|i| &p.invert_var(i) == p)
        && (spec.k..spec.n()).all(|a| (a + 1..spec.n()).all(|b| &p.swap_vars(a, b) == p))
}

/// Strict `λ ⊇ μ` pairs with `|λ| <= max_weight` and `ℓ(λ) <= n`.
pub fn strict_pairs(max_weight: usize, n: usize) -> Vec<(StrictPartition, StrictPartition)> {
    let mut out = Vec::new();
    for lam in StrictPartition::all_up_to(max_weight) {
        if lam.len() > n {
            continue;
        }
        for mu in enum_strict_between(&StrictPartition::empty(), &lam) {
            out.push((lam.clone(), mu));
        }
    }
    out
}

fn specs(budget: Budget) -> Vec<VariableSpec> {
    VariableSpec::all_up_to(budget.max_vars)
}

fn random_poly(rng: &mut StdRng, n: usize) -> LaurentPoly {
    let terms = rng.gen_range(0..5);
    let ts: Vec<_> = (0..terms)
        .map(|_| {
            let e = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            (Monomial::new(e), rng.gen_range(-9i64..=9))
        })
        .collect();
    LaurentPoly::from_terms(n, ts).expect("exponent vectors have length n")
}

pub fn ring_checks(budget: Budget) -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let n = budget.max_vars.max(1);
    let mut axioms = Check::new("ring", "axioms");
    let mut text = Check::new("ring", "text-json-round-trip");
    for _ in 0..200 {
        let a = random_poly(&mut rng, n);
        let b = random_poly(&mut rng, n);
        let c = random_poly(&mut rng, n);
        axioms.case(&a * &b == &b * &a && &a + &b == &b + &a, || format!("commutativity: {a} | {b}"));
        axioms.case(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity: {a} | {b} | {c}"));
        axioms.case(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distributivity: {a} | {b} | {c}"));
        let s = a.to_string();
        let back = LaurentPoly::parse(&s, n).map(|p| p.to_string());
        text.case(back.as_deref() == Ok(s.as_str()), || format!("text: {s}"));
        let j = a.to_json();
        let back = LaurentPoly::from_json(&j).map(|p| p.to_json());
        text.case(back.as_deref() == Ok(j.as_str()), || format!("json: {j}"));
    }
    let mut series = Check::new("ring", "series-clears-denominators");
    for spec in specs(budget) {
        let alpha = Alphabet::intermediate(spec);
        let d = budget.max_weight.max(1);
        let mut s = series_from_linear_factors(spec.n(), alpha.monomials(), alpha.monomials(), d)
            .expect("alphabet shares the ring");
        for v in alpha.monomials() {
            s.mul_one_minus(v);
        }
        let want = series_from_linear_factors(spec.n(), alpha.monomials(), &[], d).expect("same ring");
        series.case(s == want, || format!("spec {spec}"));
    }
    vec![axioms.done(), text.done(), series.done()]
}

pub fn tableaux_checks(budget: Budget) -> Vec<CheckResult> {
    let mut dup = Check::new("tableaux", "duplicate-free");
    let mut split = Check::new("tableaux", "qt-splitting-counts");
    let mut spt_split = Check::new("tableaux", "spt-splitting-counts");
    for spec in specs(budget) {
        for (lam, mu) in strict_pairs(budget.max_weight, spec.n()) {
            let all: Vec<_> = enum_qt(spec, &lam, &mu).expect("length checked").map(|t| t.entries().to_vec()).collect();
            let set: std::collections::HashSet<_> = all.iter().collect();
            dup.case(set.len() == all.len(), || format!("{spec} {lam}/{mu}"));
            let parts: usize = enum_strict_between(&mu, &lam)
                .iter()
                .map(|nu| {
                    enum_qt_unchecked(VariableSpec::new(spec.k, 0), nu, &mu).count()
                        * enum_qt_unchecked(VariableSpec::new(0, spec.m), &lam, nu).count()
                })
                .sum();
            split.case(parts == all.len(), || format!("{spec} {lam}/{mu}: {} vs {parts}", all.len()));
        }
        for lam in Partition::all_up_to(budget.max_weight) {
            if lam.len() > spec.n() {
                continue;
            }
            let whole = enum_spt(spec, &lam, &Partition::empty()).expect("length checked").count();
            let parts: usize = lam
                .subpartitions()
                .iter()
                .map(|mu| {
                    enum_spt_unchecked(VariableSpec::new(spec.k, 0), mu, &Partition::empty()).count()
                        * enum_ssyt(spec.m, &lam, mu).count()
                })
                .sum();
            spt_split.case(whole == parts, || format!("{spec} {lam}: {whole} vs {parts}"));
        }
    }
    vec![dup.done(), split.done(), spt_split.done()]
}

pub fn schur_checks(budget: Budget) -> Vec<CheckResult> {
    let mut routes = Check::new("schur", "definition-equals-tableau");
    let mut union = Check::new("schur", "union-identity");
    let mut sym = Check::new("schur", "weyl-invariance");
    for spec in specs(budget) {
        for lam in Partition::all_up_to(budget.max_weight) {
            if lam.len() > spec.n() {
                continue;
            }
            let d = inter_schur(&lam, spec, InterSchurMethod::Definition).expect("length checked");
            let t = inter_schur(&lam, spec, InterSchurMethod::Tableau).expect("length checked");
            routes.case(d == t, || format!("{spec} {lam}"));
            sym.case(weyl_invariant(&d, spec), || format!("{spec} {lam}"));
            if lam.len() <= spec.k + 1 {
                let ok = check_union_identity(&lam, spec).unwrap_or(false);
                union.case(ok, || format!("{spec} {lam}"));
            }
        }
    }
    let mut jt = Check::new("schur", "h-form-equals-e-form");
    let a = Alphabet::plain(0, budget.max_vars, budget.max_vars);
    for lam in Partition::all_up_to(budget.max_weight + 1) {
        for mu in lam.subpartitions() {
            jt.case(schur_skew(&lam, &mu, &a) == schur_skew_e(&lam, &mu, &a), || format!("{lam}/{mu}"));
        }
    }
    let mut symp = Check::new("schur", "symplectic-weyl-invariance");
    for k in 1..=budget.max_vars {
        for lam in Partition::all_up_to(budget.max_weight) {
            if lam.len() > k {
                continue;
            }
            let s = symp_schur(&lam, k).expect("length checked");
            let ok = weyl_invariant(&s, VariableSpec::new(k, 0)) && (1..k).all(|b| s.swap_vars(0, b) == s);
            symp.case(ok, || format!("{lam} k={k}"));
        }
    }
    vec![routes.done(), union.done(), jt.done(), symp.done(), sym.done()]
}

pub fn qfun_checks(budget: Budget) -> Vec<CheckResult> {
    let mut four = Check::new("qfun", "four-route-agreement");
    let mut degen = Check::new("qfun", "degenerations");
    let mut series = Check::new("qfun", "generating-series");
    let mut sym = Check::new("qfun", "weyl-invariance");
    let mut pf2 = Check::new("qfun", "pfaffian-square");
    for spec in specs(budget) {
        let mut ctx = QContext::new(spec);
        let n = spec.n();
        for (lam, mu) in strict_pairs(budget.max_weight, n) {
            let d = ctx.qi_def(&lam, &mu).expect("length checked");
            let t = ctx.qi_tableau(&lam, &mu).expect("length checked");
            let b = ctx.qi_branch(&lam, &mu).expect("length checked");
            let mut ok = d == t && t == b;
            if lam.len() >= 2 {
                let mat = ctx.qi_jp_matrix(&lam, &mu).expect("two rows");
                let p = pfaffian(&mat).expect("skew-symmetric");
                ok &= p == t;
                pf2.case(&p * &p == determinant(&mat).expect("square"), || format!("{spec} {lam}/{mu}"));
            }
            four.case(ok, || format!("{spec} {lam}/{mu}"));
            sym.case(weyl_invariant(&t, spec), || format!("{spec} {lam}/{mu}"));
            if spec.k == 0 {
                let a = q_skew_jp(Family::A, &lam, &mu, spec).expect("type A spec");
                degen.case(a == d, || format!("A {spec} {lam}/{mu}"));
            }
            if spec.m == 0 {
                let c = q_skew_jp(Family::C, &lam, &mu, spec).expect("type C spec");
                degen.case(c == d, || format!("C {spec} {lam}/{mu}"));
            }
        }
        let dmax = budget.max_weight;
        let alpha = Alphabet::intermediate(spec);
        let prod = series_from_linear_factors(n, alpha.monomials(), alpha.monomials(), dmax).expect("same ring");
        let ok = (0..=dmax).all(|l| {
            let row = if l == 0 {
                StrictPartition::empty()
            } else {
                StrictPartition::new(vec![l]).expect("one part")
            };
            ctx.qi_tableau_unchecked(&row, &StrictPartition::empty()) == prod.coeff(l)
        });
        series.case(ok, || format!("{spec}"));
    }
    let mut engine = Check::new("qfun", "random-pfaffian-square");
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let size = 2 * rng.gen_range(1..=3);
        let m = random_skew(&mut rng, size, 2);
        let p = pfaffian(&m).expect("skew-symmetric");
        engine.case(&p * &p == determinant(&m).expect("square"), || format!("size {size}"));
    }
    vec![four.done(), degen.done(), series.done(), sym.done(), pf2.done(), engine.done()]
}

/// Random skew-symmetric matrix with sparse Laurent entries.
pub fn random_skew(rng: &mut StdRng, size: usize, n: usize) -> RingMatrix {
    let mut m = RingMatrix::zeros(n, size, size);
    for i in 0..size {
        for j in i + 1..size {
            let v = random_poly(rng, n);
            m.set(j, i, -&v);
            m.set(i, j, v);
        }
    }
    m
}

pub fn lgv_checks(budget: Budget) -> Vec<CheckResult> {
    let mut sums = Check::new("lgv", "weight-sum-equals-tableau-sum");
    let mut bij = Check::new("lgv", "path-tableau-bijection");
    for spec in specs(budget) {
        let mut ctx = QContext::new(spec);
        for (lam, mu) in strict_pairs(budget.max_weight, spec.n()) {
            let t = ctx.qi_tableau(&lam, &mu).expect("length checked");
            let l = lgv_weight_sum(&lam, &mu, spec).expect("length checked");
            sums.case(l == t, || format!("{spec} {lam}/{mu}"));
            let fams = enum_path_families(&lam, &mu, spec).expect("length checked");
            let mut from_paths: Vec<_> = fams
                .iter()
                .filter_map(|f| family_to_tableau(f, &lam, &mu).ok().map(|t| (t.entries().to_vec(), family_weight(f, spec))))
                .collect();
            let mut from_tabs: Vec<_> = enum_qt(spec, &lam, &mu)
                .expect("length checked")
                .map(|t| (t.entries().to_vec(), qt_weight(&t, spec)))
                .collect();
            from_paths.sort_by(|a, b| a.0.cmp(&b.0));
            from_tabs.sort_by(|a, b| a.0.cmp(&b.0));
            bij.case(from_paths.len() == fams.len() && from_paths == from_tabs, || format!("{spec} {lam}/{mu}"));
        }
    }
    vec![sums.done(), bij.done()]
}

pub fn run_suite(suite: Suite, budget: Budget) -> Vec<CheckResult> {
    match suite {
        Suite::Ring => ring_checks(budget),
        Suite::Tableaux => tableaux_checks(budget),
        Suite::Schur => schur_checks(budget),
        Suite::Qfun => qfun_checks(budget),
        Suite::Lgv => lgv_checks(budget),
        Suite::All => [Suite::Ring, Suite::Tableaux, Suite::Schur, Suite::Qfun, Suite::Lgv]
            .into_iter()
            .flat_map(|s| run_suite(s, budget))
            .collect(),
    }
}
