//! Request-level dispatch shared by the command-line and browser front ends.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lgv::lgv_weight_sum;
use crate::qfun::{q_skew_jp, Family, QContext};
use crate::ring::LaurentPoly;
use crate::shapes::{Partition, StrictPartition};
use crate::symfun::{inter_schur, schur_skew, schur_skew_tableau, symp_schur, symp_schur_tableau, Alphabet, InterSchurMethod};
use crate::tableaux::VariableSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Schur,
    SympSchur,
    InterSchur,
    QA,
    QC,
    QI,
}

impl FamilyKind {
    pub fn methods(self) -> &'static [Method] {
        use Method::*;
        match self {
            FamilyKind::Schur | FamilyKind::SympSchur | FamilyKind::InterSchur => &[Definition, Tableau],
            FamilyKind::QA | FamilyKind::QC | FamilyKind::QI => &[Definition, Tableau, Pfaffian, Branch, Lgv],
        }
    }

    pub fn default_method(self) -> Method {
        match self {
            FamilyKind::QI => Method::All,
            _ => Method::Definition,
        }
    }

    fn is_q(self) -> bool {
        matches!(self, FamilyKind::QA | FamilyKind::QC | FamilyKind::QI)
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "schur" => FamilyKind::Schur,
            "symp-schur" => FamilyKind::SympSchur,
            "inter-schur" => FamilyKind::InterSchur,
            "qA" => FamilyKind::QA,
            "qC" => FamilyKind::QC,
            "qI" => FamilyKind::QI,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Schur => "schur",
            FamilyKind::SympSchur => "symp-schur",
            FamilyKind::InterSchur => "inter-schur",
            FamilyKind::QA => "qA",
            FamilyKind::QC => "qC",
            FamilyKind::QI => "qI",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Definition,
    Tableau,
    Pfaffian,
    Branch,
    Lgv,
    All,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "definition" => Method::Definition,
            "tableau" => Method::Tableau,
            "pfaffian" => Method::Pfaffian,
            "branch" => Method::Branch,
            "lgv" => Method::Lgv,
            "all" => Method::All,
            _ => return Err(Error::Parse(format!("unknown method {s:?}"))),
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Definition => "definition",
            Method::Tableau => "tableau",
            Method::Pfaffian => "pfaffian",
            Method::Branch => "branch",
            Method::Lgv => "lgv",
            Method::All => "all",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ComputeRequest {
    pub family: FamilyKind,
    pub lambda: String,
    pub mu: String,
    pub k: usize,
    pub m: usize,
    /// `None` picks [`FamilyKind::default_method`].
    pub method: Option<Method>,
    /// Abort when a result has more terms than this.
    pub max_terms: Option<usize>,
}

impl ComputeRequest {
    pub fn new(family: FamilyKind, lambda: &str, k: usize, m: usize) -> Self {
        ComputeRequest {
            family,
            lambda: lambda.to_string(),
            mu: String::new(),
            k,
            m,
            method: None,
            max_terms: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComputeReport {
    pub routes: Vec<(Method, LaurentPoly)>,
}

impl ComputeReport {
    /// The common value, if every route produced the same polynomial.
    pub fn agreed(&self) -> Option<&LaurentPoly> {
        let first = &self.routes.first()?.1;
        self.routes.iter().all(|(_, p)| p == first).then_some(first)
    }
}

enum Shapes {
    Plain(Partition, Partition),
    Strict(StrictPartition, StrictPartition),
}

fn parse_shapes(req: &ComputeRequest) -> Result<Shapes> {
    if req.family.is_q() {
        Ok(Shapes::Strict(req.lambda.parse()?, req.mu.parse()?))
    } else {
        Ok(Shapes::Plain(req.lambda.parse()?, req.mu.parse()?))
    }
}

fn check_request(req: &ComputeRequest, shapes: &Shapes) -> Result<()> {
    match req.family {
        FamilyKind::Schur | FamilyKind::QA if req.k != 0 => {
            return Err(Error::Precondition(format!("{} needs k = 0", req.family)));
        }
        FamilyKind::SympSchur | FamilyKind::QC if req.m != 0 => {
            return Err(Error::Precondition(format!("{} needs m = 0", req.family)));
        }
        _ => {}
    }
    if let Shapes::Plain(_, mu) = shapes {
        if !mu.is_empty() && req.family != FamilyKind::Schur {
            return Err(Error::Precondition(format!("{} takes no inner shape", req.family)));
        }
    }
    if let Shapes::Strict(lambda, _) = shapes {
        let n = req.k + req.m;
        if lambda.len() > n {
            return Err(Error::TooManyParts {
                length: lambda.len(),
                vars: n,
            });
        }
    }
    Ok(())
}

fn route(req: &ComputeRequest, shapes: &Shapes, method: Method, ctx: &mut QContext) -> Result<LaurentPoly> {
    let spec = VariableSpec::new(req.k, req.m);
    let n = spec.n();
    match (shapes, req.family) {
        (Shapes::Plain(lam, mu), FamilyKind::Schur) => Ok(match method {
            Method::Definition => schur_skew(lam, mu, &Alphabet::plain(0, n, n)),
            _ => schur_skew_tableau(lam, mu, 0, n, n),
        }),
        (Shapes::Plain(lam, _), FamilyKind::SympSchur) => match method {
            Method::Definition => symp_schur(lam, req.k),
            _ => symp_schur_tableau(lam, req.k),
        },
        (Shapes::Plain(lam, _), _) => {
            let how = match method {
                Method::Definition => InterSchurMethod::Definition,
                _ => InterSchurMethod::Tableau,
            };
            inter_schur(lam, spec, how)
        }
        (Shapes::Strict(lam, mu), family) => match method {
            Method::Definition => ctx.qi_def(lam, mu),
            Method::Tableau => ctx.qi_tableau(lam, mu),
            Method::Branch => ctx.qi_branch(lam, mu),
            Method::Lgv => lgv_weight_sum(lam, mu, spec),
            _ => match family {
                FamilyKind::QA => q_skew_jp(Family::A, lam, mu, spec),
                FamilyKind::QC => q_skew_jp(Family::C, lam, mu, spec),
                _ => ctx.qi_pfaffian(lam, mu),
            },
        },
    }
}

/// Runs the requested route, or every route for [`Method::All`].
pub fn compute(req: &ComputeRequest) -> Result<ComputeReport> {
    let shapes = parse_shapes(req)?;
    check_request(req, &shapes)?;
    let method = req.method.unwrap_or(req.family.default_method());
    let methods: Vec<Method> = if method == Method::All {
        req.family.methods().to_vec()
    } else if req.family.methods().contains(&method) {
        vec![method]
    } else {
        return Err(Error::Precondition(format!("method {method} is not available for {}", req.family)));
    };
    let mut ctx = QContext::new(VariableSpec::new(req.k, req.m));
    let mut routes = Vec::new();
    for m in methods {
        let p = route(req, &shapes, m, &mut ctx)?;
        if let Some(limit) = req.max_terms {
            if p.len() > limit {
                return Err(Error::Precondition(format!(
                    "{m} result has {} terms, above the limit of {limit}",
                    p.len()
                )));
            }
        }
        routes.push((m, p));
    }
    Ok(ComputeReport { routes })
}
