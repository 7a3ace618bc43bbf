use std::fmt::Write as _;

use serde::Serialize;

use super::{CliError, Command, Format, RunConfig};
use crate::arith::{tau, Field, MultiPoly, Var};
use crate::cohomology::{component_dd, matrix_of_f, prime_witnesses, torsion_witness};
use crate::error::Error;
use crate::factor::{accumulate_distinct, is_separable_index, FactorReport};
use crate::frobenius::{component_t, is_power_of, theorem2_growth};
use crate::matrices::{build_a, build_b, det, DetMethod, MembershipCertificate, COFACTOR_MAX};

pub const TOOL: &str = "locoh";

/// Self-describing run report. Field order is fixed, so identical configs
/// serialize to identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub field: String,
    pub seed: Option<u64>,
    pub warnings: Vec<String>,
    pub all_pass: bool,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Body {
    Lemma1(Lemma1Body),
    Factors(FactorsBody),
    Cohomology(CohomologyBody),
    Frobenius(FrobeniusBody),
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma1Body {
    pub max_i: u32,
    pub determinants: Vec<DetCheck>,
    pub recurrence: Vec<RecurrenceCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetCheck {
    pub i: u32,
    pub det: String,
    pub tau: String,
    /// Present for sizes the cofactor oracle accepts.
    pub cofactor_agrees: Option<bool>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecurrenceCheck {
    pub i: u32,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorEntry {
    pub factor: String,
    pub multiplicity: u32,
    pub degree: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRow {
    pub i: u32,
    pub tau: String,
    pub unit: String,
    pub factors: Vec<FactorEntry>,
    pub new_factors: usize,
    pub cumulative: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorsBody {
    pub index_set: Vec<u32>,
    pub rows: Vec<FactorRow>,
    pub distinct_factors: Vec<String>,
    pub pairwise_coprime: bool,
    pub strictly_increasing: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionRecord {
    pub annihilator: String,
    /// `adj(B_(d-1)) e_1`.
    pub solution: Vec<String>,
    /// 1-based index where the Cramer division for `e_1` fails.
    pub nonmembership_index: usize,
    pub fiber_dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub generator: String,
    pub avoids_s: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyRow {
    pub d: u32,
    pub tau: String,
    pub matrix_of_f_matches_a: bool,
    pub component_matches_b: bool,
    pub torsion: TorsionRecord,
    pub prime_witnesses: Vec<WitnessRecord>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyBody {
    pub d_min: u32,
    pub d_max: u32,
    pub rows: Vec<CohomologyRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusRow {
    pub n: u32,
    pub d: u32,
    pub case: String,
    pub matrix: Vec<Vec<String>>,
    pub det: String,
    pub tau: String,
    /// Shape of the degree-`n` piece's relation matrix.
    pub at_n_shape: [usize; 2],
    pub collapse_pass: bool,
    pub factors: Vec<FactorEntry>,
    pub new_witnesses: usize,
    pub cumulative: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusBody {
    pub n_set: Vec<u32>,
    pub rows: Vec<FrobeniusRow>,
    pub distinct_witnesses: Vec<String>,
    pub strictly_increasing: bool,
}

/// A failed certificate becomes `false`; anything else propagates.
fn verdict(r: crate::Result<bool>) -> Result<bool, CliError> {
    match r {
        Ok(b) => Ok(b),
        Err(Error::CertificateFailed(_)) => Ok(false),
        Err(e) => Err(e.into()),
    }
}

fn factor_entries(report: &FactorReport<MultiPoly>) -> Vec<FactorEntry> {
    report
        .factors()
        .iter()
        .map(|(f, k)| FactorEntry {
            factor: f.to_string(),
            multiplicity: *k,
            degree: f.degree().unwrap_or(0),
        })
        .collect()
}

pub fn build_report(config: &RunConfig) -> Result<Report, CliError> {
    let field = config.field;
    let mut warnings = Vec::new();
    let (body, all_pass) = match &config.command {
        Command::VerifyLemma1 { max_i } => lemma1(*max_i, field)?,
        Command::Factors { set } => {
            let p = field.characteristic();
            if p != 0 && !set.iter().any(|&i| is_separable_index(i, p)) {
                warnings.push(format!(
                    "no index in the set has the form {p}^m-2; growth of distinct factors is not guaranteed"
                ));
            }
            factors(set, field, config.seed)?
        }
        Command::Cohomology { d_min, d_max } => cohomology(*d_min, *d_max, field, config.seed)?,
        Command::Frobenius { n_set } => {
            let p = field.characteristic();
            if p != 0 && !n_set.iter().any(|&n| is_power_of(n, p)) {
                warnings.push(format!("no n in the set is a power of {p}"));
            }
            frobenius(n_set, field, config.seed)?
        }
    };
    Ok(Report {
        tool: TOOL,
        version: env!("CARGO_PKG_VERSION"),
        command: config.command.name(),
        field: field.label(),
        seed: config.seed,
        warnings,
        all_pass,
        body,
    })
}

fn lemma1(max_i: u32, field: Field) -> Result<(Body, bool), CliError> {
    let mut dets = Vec::new();
    let mut determinants = Vec::new();
    for i in 1..=max_i {
        let b = build_b(i, field)?;
        let d = det(&b, DetMethod::Bareiss)?;
        let t = tau(i, field)?;
        let cofactor_agrees = if i as usize <= COFACTOR_MAX {
            Some(det(&b, DetMethod::Cofactor)? == d)
        } else {
            None
        };
        determinants.push(DetCheck {
            i,
            det: d.to_string(),
            tau: t.to_string(),
            cofactor_agrees,
            pass: d == t && cofactor_agrees != Some(false),
        });
        dets.push(d);
    }
    let s_plus_t = &MultiPoly::var(field, Var::S) + &MultiPoly::var(field, Var::T);
    let st = &MultiPoly::var(field, Var::S) * &MultiPoly::var(field, Var::T);
    let recurrence: Vec<RecurrenceCheck> = (3..=max_i)
        .map(|i| {
            let k = i as usize - 1;
            let rhs = &(&-&s_plus_t * &dets[k - 1]) - &(&st * &dets[k - 2]);
            RecurrenceCheck { i, pass: dets[k] == rhs }
        })
        .collect();
    let all_pass = determinants.iter().all(|c| c.pass) && recurrence.iter().all(|c| c.pass);
    Ok((
        Body::Lemma1(Lemma1Body {
            max_i,
            determinants,
            recurrence,
        }),
        all_pass,
    ))
}

fn factors(set: &[u32], field: Field, seed: Option<u64>) -> Result<(Body, bool), CliError> {
    let growth = accumulate_distinct(set, field, seed)?;
    let rows = growth
        .per_index
        .iter()
        .enumerate()
        .map(|(k, r)| FactorRow {
            i: growth.index_set[k],
            tau: r.input().to_string(),
            unit: r.unit().to_string(),
            factors: factor_entries(r),
            new_factors: growth.new_factors[k],
            cumulative: growth.cumulative_distinct[k],
        })
        .collect();
    let pairwise_coprime = growth.distinct_pairwise_coprime()?;
    Ok((
        Body::Factors(FactorsBody {
            index_set: growth.index_set.clone(),
            rows,
            distinct_factors: growth.distinct_factors().iter().map(ToString::to_string).collect(),
            pairwise_coprime,
            strictly_increasing: growth.strictly_increasing(),
        }),
        pairwise_coprime,
    ))
}

fn cohomology(d_min: u32, d_max: u32, field: Field, seed: Option<u64>) -> Result<(Body, bool), CliError> {
    let mut rows = Vec::new();
    for d in d_min..=d_max {
        let matrix_of_f_matches_a = verdict(matrix_of_f(d, field).and_then(|m| Ok(m == build_a(d - 1, field)?)))?;
        let component_matches_b =
            verdict(component_dd(d, field).and_then(|p| Ok(p.relations() == &build_b(d - 1, field)?)))?;
        let w = torsion_witness(d, field)?;
        let nonmembership_index = match w.nonmembership {
            MembershipCertificate::NoSolution { index } => index + 1,
            MembershipCertificate::Solution(_) => {
                return Err(CliError::CheckFailed(format!("e_1 is in the image of B_{}", d - 1)))
            }
        };
        let witnesses = prime_witnesses(d, field, seed)?;
        let pass = matrix_of_f_matches_a && component_matches_b && w.annihilator == tau(d - 1, field)?;
        rows.push(CohomologyRow {
            d,
            tau: w.annihilator.to_string(),
            matrix_of_f_matches_a,
            component_matches_b,
            torsion: TorsionRecord {
                annihilator: w.annihilator.to_string(),
                solution: w.solution.iter().map(ToString::to_string).collect(),
                nonmembership_index,
                fiber_dimension: w.fiber_dimension,
            },
            prime_witnesses: witnesses
                .iter()
                .map(|p| WitnessRecord {
                    generator: p.generator.to_string(),
                    avoids_s: p.avoids_s,
                })
                .collect(),
            pass,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok((Body::Cohomology(CohomologyBody { d_min, d_max, rows }), all_pass))
}

fn frobenius(n_set: &[u32], field: Field, seed: Option<u64>) -> Result<(Body, bool), CliError> {
    let g = theorem2_growth(n_set, field, seed)?;
    let mut rows = Vec::new();
    for (k, comp) in g.components.iter().enumerate() {
        let n = comp.n;
        let m = comp.presentation.relations();
        let t = tau(n - 2, field)?;
        let at_n = component_t(n, n, field)?;
        let at_n_m = at_n.presentation.relations();
        let collapse_pass = m == &build_b(n - 2, field)? && g.determinants[k] == t;
        rows.push(FrobeniusRow {
            n,
            d: comp.d,
            case: comp.case.to_string(),
            matrix: m.to_strings(),
            det: g.determinants[k].to_string(),
            tau: t.to_string(),
            at_n_shape: [at_n_m.rows(), at_n_m.cols()],
            collapse_pass,
            factors: factor_entries(&g.growth.per_index[k]),
            new_witnesses: g.growth.new_factors[k],
            cumulative: g.growth.cumulative_distinct[k],
        });
    }
    let all_pass = rows.iter().all(|r| r.collapse_pass);
    Ok((
        Body::Frobenius(FrobeniusBody {
            n_set: g.n_values.clone(),
            rows,
            distinct_witnesses: g.growth.distinct_factors().iter().map(ToString::to_string).collect(),
            strictly_increasing: g.growth.strictly_increasing(),
        }),
        all_pass,
    ))
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn factor_text(entries: &[FactorEntry]) -> String {
    entries
        .iter()
        .map(|e| match e.multiplicity {
            1 => format!("({})", e.factor),
            k => format!("({})^{k}", e.factor),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Lemma1(b) => {
                out.push_str("i,pass\n");
                for c in &b.determinants {
                    let _ = writeln!(out, "{},{}", c.i, c.pass);
                }
            }
            Body::Factors(b) => {
                out.push_str("i,new_factors,cumulative\n");
                for r in &b.rows {
                    let _ = writeln!(out, "{},{},{}", r.i, r.new_factors, r.cumulative);
                }
            }
            Body::Cohomology(b) => {
                out.push_str("d,prime_witnesses,pass\n");
                for r in &b.rows {
                    let _ = writeln!(out, "{},{},{}", r.d, r.prime_witnesses.len(), r.pass);
                }
            }
            Body::Frobenius(b) => {
                out.push_str("n,new_witnesses,cumulative\n");
                for r in &b.rows {
                    let _ = writeln!(out, "{},{},{}", r.n, r.new_witnesses, r.cumulative);
                }
            }
        }
        out
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let seed = self.seed.map_or_else(|| "none".to_string(), |s| s.to_string());
        let _ = writeln!(
            out,
            "{} {} {} over {} (seed {seed})",
            self.tool, self.version, self.command, self.field
        );
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        match &self.body {
            Body::Lemma1(b) => {
                for c in &b.determinants {
                    let _ = writeln!(out, "det B_{} = {}   τ_{} = {}   {}", c.i, c.det, c.i, c.tau, mark(c.pass));
                }
                for c in &b.recurrence {
                    let _ = writeln!(
                        out,
                        "det B_{i} = (-t-s) det B_{} - st det B_{}   {}",
                        c.i - 1,
                        c.i - 2,
                        mark(c.pass),
                        i = c.i
                    );
                }
            }
            Body::Factors(b) => {
                for r in &b.rows {
                    let _ = writeln!(
                        out,
                        "τ_{} = {} {}   new {}   cumulative {}",
                        r.i,
                        r.unit,
                        factor_text(&r.factors),
                        r.new_factors,
                        r.cumulative
                    );
                }
                let _ = writeln!(out, "distinct factors pairwise coprime: {}", mark(b.pairwise_coprime));
            }
            Body::Cohomology(b) => {
                for r in &b.rows {
                    let witnesses: Vec<&str> = r.prime_witnesses.iter().map(|w| w.generator.as_str()).collect();
                    let _ = writeln!(
                        out,
                        "d = {}: matrix of f = A_{}: {}   bidegree ({},{}) block = B_{}: {}   τ_{} = {} kills e_1, e_1 not in image (index {})   primes ({})   {}",
                        r.d,
                        r.d - 1,
                        mark(r.matrix_of_f_matches_a),
                        r.d,
                        r.d,
                        r.d - 1,
                        mark(r.component_matches_b),
                        r.d - 1,
                        r.tau,
                        r.torsion.nonmembership_index,
                        witnesses.join(", "),
                        mark(r.pass)
                    );
                }
            }
            Body::Frobenius(b) => {
                for r in &b.rows {
                    let _ = writeln!(
                        out,
                        "n = {}: M_{} collapses to B_{}, det = τ_{} = {}   {}   {}   new {}   cumulative {}",
                        r.n,
                        r.d,
                        r.n - 2,
                        r.n - 2,
                        r.det,
                        factor_text(&r.factors),
                        mark(r.collapse_pass),
                        r.new_witnesses,
                        r.cumulative
                    );
                }
            }
        }
        let _ = writeln!(out, "all checks: {}", mark(self.all_pass));
        out
    }
}
