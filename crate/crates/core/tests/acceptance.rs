//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use qsym_core::lgv::{family_to_tableau, family_weight, for_each_path_family_unchecked};
use qsym_core::linalg::{determinant, pfaffian};
use qsym_core::qfun::{qa_two_row, q_skew_jp, Family, QContext};
use qsym_core::ring::{series_from_linear_factors, LaurentPoly};
use qsym_core::shapes::{enum_strict_between, Partition, StrictPartition};
use qsym_core::symfun::{
    check_union_identity, inter_schur, schur_skew, schur_skew_e, symp_schur, Alphabet, InterSchurMethod,
};
use qsym_core::tableaux::{enum_qt_unchecked, enum_spt, qt_weight, VariableSpec};
use qsym_core::verify::{random_skew, weyl_invariant};
use qsym_core::Error;

struct Outcome {
    failures: Vec<String>,
    cases: usize,
    elapsed: Duration,
    budget: Option<Duration>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.budget.is_none_or(|b| self.elapsed <= b)
    }
}

struct Tally {
    failures: Vec<String>,
    cases: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            failures: Vec::new(),
            cases: 0,
        }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(label());
        }
    }
}

fn run(budget: Option<Duration>, f: impl FnOnce(&mut Tally)) -> Outcome {
    let start = Instant::now();
    let mut t = Tally::new();
    f(&mut t);
    Outcome {
        failures: t.failures,
        cases: t.cases,
        elapsed: start.elapsed(),
        budget,
    }
}

/// Strict `λ ⊇ μ` with `λ_1 <= 4` and `ℓ(λ) <= 3`.
fn range() -> Vec<(StrictPartition, StrictPartition)> {
    let mut out = Vec::new();
    for lam in StrictPartition::all_bounded(4, 3) {
        for mu in enum_strict_between(&StrictPartition::empty(), &lam) {
            out.push((lam.clone(), mu));
        }
    }
    out
}

fn specs(max: usize) -> Vec<VariableSpec> {
    VariableSpec::all_up_to(max)
}

type Outputs = Vec<(VariableSpec, String, LaurentPoly)>;

fn four_routes(outputs: &mut Outputs) -> Outcome {
    run(Some(Duration::from_secs(60)), |t| {
        for spec in specs(3) {
            let mut ctx = QContext::new(spec);
            for (lam, mu) in range() {
                let d = ctx.qi_def_unchecked(&lam, &mu);
                let tab = ctx.qi_tableau_unchecked(&lam, &mu);
                let b = ctx.qi_branch_unchecked(&lam, &mu);
                let mut ok = d == tab && tab == b;
                if lam.len() >= 2 {
                    let jp = ctx.qi_jp(&lam, &mu).expect("two rows");
                    ok &= jp == d;
                    outputs.push((spec, format!("jp {lam}/{mu}"), jp));
                }
                t.check(ok, || format!("spec {spec} {lam}/{mu}"));
                outputs.push((spec, format!("def {lam}/{mu}"), d));
                outputs.push((spec, format!("tableau {lam}/{mu}"), tab));
                outputs.push((spec, format!("branch {lam}/{mu}"), b));
            }
        }
    })
}

fn lgv(outputs: &mut Outputs) -> Outcome {
    run(Some(Duration::from_secs(120)), |t| {
        for spec in specs(3) {
            let mut ctx = QContext::new(spec);
            for (lam, mu) in range() {
                let mut fams = 0usize;
                let mut from_paths = Vec::new();
                let mut counts = std::collections::HashMap::new();
                for_each_path_family_unchecked(&lam, &mu, spec, &mut |f| {
                    fams += 1;
                    let w = family_weight(f, spec);
                    *counts.entry(w.clone()).or_insert(0u64) += 1;
                    if let Ok(tab) = family_to_tableau(f, &lam, &mu) {
                        from_paths.push((tab.entries().to_vec(), w));
                    }
                });
                let sum = LaurentPoly::from_counts(spec.n(), counts);
                let tab_sum = ctx.qi_tableau_unchecked(&lam, &mu);
                t.check(sum == tab_sum, || format!("weight sum, spec {spec} {lam}/{mu}"));
                let mut from_tabs: Vec<_> = enum_qt_unchecked(spec, &lam, &mu)
                    .map(|tab| (tab.entries().to_vec(), qt_weight(&tab, spec)))
                    .collect();
                from_paths.sort_by(|a, b| a.0.cmp(&b.0));
                from_tabs.sort_by(|a, b| a.0.cmp(&b.0));
                t.check(fams == from_tabs.len(), || format!("cardinality, spec {spec} {lam}/{mu}"));
                let mut wp: Vec<_> = from_paths.iter().map(|x| x.1.clone()).collect();
                let mut wt: Vec<_> = from_tabs.iter().map(|x| x.1.clone()).collect();
                wp.sort_by_key(|m| m.exps().to_vec());
                wt.sort_by_key(|m| m.exps().to_vec());
                t.check(wp == wt, || format!("weight multiset, spec {spec} {lam}/{mu}"));
                t.check(from_paths == from_tabs, || format!("correspondence, spec {spec} {lam}/{mu}"));
                outputs.push((spec, format!("lgv {lam}/{mu}"), sum));
            }
        }
    })
}

fn degenerations(outputs: &mut Outputs) -> Outcome {
    run(None, |t| {
        for n in 1..=3 {
            for (family, spec) in [(Family::A, VariableSpec::new(0, n)), (Family::C, VariableSpec::new(n, 0))] {
                let mut ctx = QContext::new(spec);
                for (lam, mu) in range() {
                    let q = ctx.qi_def_unchecked(&lam, &mu);
                    let jp = q_skew_jp(family, &lam, &mu, spec).expect("matching spec");
                    t.check(q == jp, || format!("{family:?} n={n} {lam}/{mu}"));
                    outputs.push((spec, format!("{family:?} jp {lam}/{mu}"), jp));
                }
            }
        }
        let want = LaurentPoly::parse("4*x1^2*x2 + 4*x1*x2^2", 2).unwrap();
        let rec = qa_two_row(2, 1, 2);
        t.check(rec == want, || format!("recursion gave {rec}"));
        let lam = StrictPartition::new(vec![2, 1]).unwrap();
        let spec = VariableSpec::new(0, 2);
        let tab = QContext::new(spec).qi_tableau(&lam, &StrictPartition::empty()).unwrap();
        t.check(tab == want, || format!("tableaux gave {tab}"));
        outputs.push((spec, "A recursion (2,1)".into(), rec));
        outputs.push((spec, "A tableau (2,1)".into(), tab));
    })
}

fn generating_series() -> Outcome {
    run(None, |t| {
        const D: usize = 6;
        for spec in specs(3) {
            let alpha = Alphabet::intermediate(spec);
            let prod = series_from_linear_factors(spec.n(), alpha.monomials(), alpha.monomials(), D).unwrap();
            let mut ctx = QContext::new(spec);
            for l in 0..=D {
                let row = StrictPartition::new(vec![l]).unwrap();
                let tab = ctx.qi_tableau_unchecked(&row, &StrictPartition::empty());
                let def = ctx.qi_def_unchecked(&row, &StrictPartition::empty());
                t.check(tab == prod.coeff(l) && def == tab, || format!("spec {spec} l={l}"));
            }
        }
    })
}

fn symmetry(outputs: &Outputs) -> Outcome {
    run(None, |t| {
        for (spec, label, p) in outputs {
            t.check(weyl_invariant(p, *spec), || format!("spec {spec} {label}"));
        }
    })
}

fn schur_side(outputs: &mut Outputs) -> Outcome {
    run(None, |t| {
        for spec in specs(4) {
            for lam in Partition::all_up_to(5) {
                if lam.len() > spec.n() {
                    continue;
                }
                let d = inter_schur(&lam, spec, InterSchurMethod::Definition).unwrap();
                let tab = inter_schur(&lam, spec, InterSchurMethod::Tableau).unwrap();
                t.check(d == tab, || format!("inter-schur spec {spec} {lam}"));
                if lam.len() <= spec.k + 1 {
                    let ok = check_union_identity(&lam, spec).unwrap_or(false);
                    t.check(ok, || format!("union identity spec {spec} {lam}"));
                }
                outputs.push((spec, format!("inter-schur def {lam}"), d));
                outputs.push((spec, format!("inter-schur tableau {lam}"), tab));
            }
        }
        let a = Alphabet::plain(0, 4, 4);
        for lam in Partition::all_up_to(6) {
            for mu in lam.subpartitions() {
                t.check(schur_skew(&lam, &mu, &a) == schur_skew_e(&lam, &mu, &a), || format!("h/e {lam}/{mu}"));
            }
        }
        let one_one = Partition::new(vec![1, 1]).unwrap();
        let king = LaurentPoly::parse("x1*x2 + x1*x2^-1 + x1^-1*x2 + x1^-1*x2^-1 + 1", 2).unwrap();
        let spec = VariableSpec::new(2, 0);
        let count = enum_spt(spec, &one_one, &Partition::empty()).unwrap().count();
        let s = symp_schur(&one_one, 2).unwrap();
        t.check(count == 5 && s == king, || format!("symp (1,1): {count} tableaux, {s}"));
    })
}

fn pfaffian_engine() -> Outcome {
    run(None, |t| {
        let mut rng = StdRng::seed_from_u64(20260401);
        for case in 0..200 {
            let size = rng.gen_range(2..=6);
            let m = random_skew(&mut rng, size, 3);
            let det = determinant(&m).unwrap();
            match pfaffian(&m) {
                Ok(p) => t.check(size % 2 == 0 && &p * &p == det, || format!("case {case} size {size}")),
                Err(Error::OddSize(_)) => {
                    t.check(size % 2 == 1 && det.is_zero(), || format!("case {case} odd size {size}"))
                }
                Err(e) => t.check(false, || format!("case {case}: {e}")),
            }
        }
    })
}

fn vanishing() -> Outcome {
    run(None, |t| {
        let mut rng = StdRng::seed_from_u64(8);
        let shapes = StrictPartition::all_up_to(7);
        let all_specs: Vec<_> = specs(3).into_iter().filter(|s| s.n() >= 1).collect();
        let mut sampled = 0;
        while sampled < 50 {
            let spec = *all_specs.choose(&mut rng).unwrap();
            let lam = shapes.choose(&mut rng).unwrap();
            let mu = shapes.choose(&mut rng).unwrap();
            if lam.contains(mu) || lam.len() > spec.n() {
                continue;
            }
            sampled += 1;
            let mut ctx = QContext::new(spec);
            let tab = ctx.qi_tableau(lam, mu).unwrap();
            let def = ctx.qi_def(lam, mu).unwrap();
            t.check(tab.is_zero() && def.is_zero(), || format!("spec {spec} {lam}/{mu}"));
        }
    })
}

fn main() {
    let mut outputs = Outputs::new();
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "four-route agreement", four_routes(&mut outputs)),
        (2, "lattice-path oracle", lgv(&mut outputs)),
        (3, "degenerations", degenerations(&mut outputs)),
        (4, "generating series", generating_series()),
        (6, "schur side", schur_side(&mut outputs)),
        (7, "pfaffian engine", pfaffian_engine()),
        (8, "vanishing", vanishing()),
    ];
    results.push((5, "symmetry", symmetry(&outputs)));
    results.sort_by_key(|r| r.0);

    let mut all_ok = true;
    for (id, name, o) in &results {
        let tag = if o.passed() { "PASS" } else { "FAIL" };
        all_ok &= o.passed();
        let limit = o.budget.map(|b| format!(", limit {}s", b.as_secs())).unwrap_or_default();
        println!(
            "{tag} criterion {id} ({name}): {} checks, {} failures, {:.2}s{limit}",
            o.cases,
            o.failures.len(),
            o.elapsed.as_secs_f64()
        );
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
