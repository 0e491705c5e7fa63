//! JSON document types for presentations, models and reports, and the
//! plain-text renderers used by the command-line interface.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, FreeCGA, GeneratorDecl, Monomial, Ratio};
use crate::catalog::GroupData;
use crate::error::EngineError;
use crate::grassmann::VerificationReport;
use crate::model::{CohomologyReport, SullivanModel};
use crate::presentation::{HilbertTable, QuotientPresentation};

/// One generator: name and positive degree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeneratorDoc {
    pub name: String,
    pub degree: u32,
}

/// One term of an element: a rational coefficient and an exponent map.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermDoc {
    pub coeff: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub exponents: BTreeMap<String, u32>,
}

/// A presented graded ring: generators and relation elements.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PresentationDoc {
    pub label: String,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default)]
    pub relations: Vec<Vec<TermDoc>>,
}

/// A pure Sullivan model: generators and the differential of each odd
/// generator with a nonzero image.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModelDoc {
    pub label: String,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default)]
    pub differential: BTreeMap<String, Vec<TermDoc>>,
}

/// A labeled dimension table with its checksum.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableDoc {
    pub label: String,
    pub dims: Vec<usize>,
    pub total: usize,
}

/// Cohomology dimensions with optional representative cocycles per degree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CohomologyDoc {
    pub label: String,
    pub dims: Vec<usize>,
    pub total: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<String>>>,
}

/// One rendered table comparison.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComparisonDoc {
    pub name: String,
    pub pass: bool,
    pub left: TableDoc,
    pub right: TableDoc,
}

/// A rendered verification report.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDoc {
    pub label: String,
    pub cutoff: u32,
    pub pass: bool,
    pub comparisons: Vec<ComparisonDoc>,
}

/// Catalog data for one group: classifying generators, primitive degrees,
/// and the odd fiber generators with their transgression targets.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CatalogDoc {
    pub group: String,
    pub generators: Vec<GeneratorDoc>,
    pub primitive_degrees: Vec<u32>,
    pub fibers: Vec<FiberDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FiberDoc {
    pub name: String,
    pub degree: u32,
    pub target: String,
}

/// Formats a rational as `numerator/denominator`, always with the slash.
pub fn format_ratio(c: &Ratio) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parses `n`, `n/d`, with optional sign and surrounding whitespace.
pub fn parse_ratio(s: &str) -> Result<Ratio, EngineError> {
    let bad = || EngineError::InvalidInput(format!("bad rational {s:?}"));
    let mut parts = s.trim().splitn(2, '/');
    let numer = parts
        .next()
        .and_then(|t| BigInt::from_str(t.trim()).ok())
        .ok_or_else(bad)?;
    let denom = match parts.next() {
        None => BigInt::from(1),
        Some(t) => BigInt::from_str(t.trim()).map_err(|_| bad())?,
    };
    if denom == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Ratio::new(numer, denom))
}

fn element_to_terms(e: &Element) -> Vec<TermDoc> {
    let algebra = e.algebra();
    e.terms()
        .map(|(m, c)| {
            let mut exponents = BTreeMap::new();
            for (i, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    exponents.insert(algebra.generators()[i].name.clone(), x);
                }
            }
            TermDoc {
                coeff: format_ratio(c),
                exponents,
            }
        })
        .collect()
}

fn terms_to_element(
    algebra: &Arc<FreeCGA>,
    terms: &[TermDoc],
) -> Result<Element, EngineError> {
    let mut pairs = Vec::with_capacity(terms.len());
    for term in terms {
        let c = parse_ratio(&term.coeff)?;
        let mut exps = vec![0u32; algebra.len()];
        for (name, &x) in &term.exponents {
            let i = algebra
                .index_of(name)
                .ok_or_else(|| EngineError::UnknownGenerator(name.clone()))?;
            if algebra.is_odd(i) && x > 1 {
                return Err(EngineError::InvalidInput(format!(
                    "odd generator {name} cannot carry exponent {x}"
                )));
            }
            exps[i] = x;
        }
        pairs.push((Monomial::from_exponents(exps), c));
    }
    Ok(Element::from_terms(algebra.clone(), pairs))
}

fn decls_of(generators: &[GeneratorDoc]) -> Vec<GeneratorDecl> {
    generators
        .iter()
        .map(|g| GeneratorDecl::new(g.name.clone(), g.degree))
        .collect()
}

pub fn presentation_to_doc(p: &QuotientPresentation) -> PresentationDoc {
    PresentationDoc {
        label: p.label.clone(),
        generators: p
            .algebra()
            .generators()
            .iter()
            .map(|g| GeneratorDoc {
                name: g.name.clone(),
                degree: g.degree,
            })
            .collect(),
        relations: p.relations().iter().map(element_to_terms).collect(),
    }
}

pub fn doc_to_presentation(doc: &PresentationDoc) -> Result<QuotientPresentation, EngineError> {
    let algebra = FreeCGA::new(decls_of(&doc.generators))?;
    let relations = doc
        .relations
        .iter()
        .map(|terms| terms_to_element(&algebra, terms))
        .collect::<Result<Vec<_>, _>>()?;
    QuotientPresentation::new(doc.label.clone(), algebra, relations)
}

pub fn model_to_doc(m: &SullivanModel) -> ModelDoc {
    let algebra = m.algebra();
    let mut differential = BTreeMap::new();
    for (i, g) in algebra.generators().iter().enumerate() {
        if !algebra.is_odd(i) {
            continue;
        }
        let image = m.d_of_generator(i);
        if !image.is_zero() {
            differential.insert(g.name.clone(), element_to_terms(&image));
        }
    }
    ModelDoc {
        label: m.label.clone(),
        generators: algebra
            .generators()
            .iter()
            .map(|g| GeneratorDoc {
                name: g.name.clone(),
                degree: g.degree,
            })
            .collect(),
        differential,
    }
}

pub fn doc_to_model(doc: &ModelDoc) -> Result<SullivanModel, EngineError> {
    let algebra = FreeCGA::new(decls_of(&doc.generators))?;
    let differentials = doc
        .differential
        .iter()
        .map(|(name, terms)| Ok((name.clone(), terms_to_element(&algebra, terms)?)))
        .collect::<Result<Vec<_>, EngineError>>()?;
    SullivanModel::new(doc.label.clone(), algebra, differentials)
}

pub fn table_doc(label: impl Into<String>, table: &HilbertTable) -> TableDoc {
    TableDoc {
        label: label.into(),
        dims: table.dims.clone(),
        total: table.total(),
    }
}

pub fn cohomology_to_doc(report: &CohomologyReport) -> CohomologyDoc {
    CohomologyDoc {
        label: report.label.clone(),
        dims: report.table.dims.clone(),
        total: report.table.total(),
        representatives: report.representatives.as_ref().map(|by_degree| {
            by_degree
                .iter()
                .map(|reps| reps.iter().map(|e| e.to_string()).collect())
                .collect()
        }),
    }
}

pub fn report_to_doc(report: &VerificationReport) -> ReportDoc {
    ReportDoc {
        label: report.label.clone(),
        cutoff: report.cutoff,
        pass: report.pass(),
        comparisons: report
            .comparisons
            .iter()
            .map(|c| ComparisonDoc {
                name: c.name.clone(),
                pass: c.pass(),
                left: table_doc(c.left_label.clone(), &c.left),
                right: table_doc(c.right_label.clone(), &c.right),
            })
            .collect(),
    }
}

pub fn catalog_to_doc(data: &GroupData) -> CatalogDoc {
    CatalogDoc {
        group: data.descriptor().to_string(),
        generators: data
            .ring()
            .generators()
            .iter()
            .map(|g| GeneratorDoc {
                name: g.name.clone(),
                degree: g.degree,
            })
            .collect(),
        primitive_degrees: data.primitive_degrees(),
        fibers: data
            .fibers()
            .iter()
            .map(|f| FiberDoc {
                name: f.name.clone(),
                degree: f.degree,
                target: data.ring().generators()[f.target].name.clone(),
            })
            .collect(),
    }
}

/// Serializes any document as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialization");
    s.push('\n');
    s
}

fn join_dims(dims: &[usize]) -> String {
    dims.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Text form of a dimension table: label, dims line, checksum line.
pub fn render_table_text(doc: &TableDoc) -> String {
    format!(
        "# {}\ndims 0..{}: {}\ntotal {}\n",
        doc.label,
        doc.dims.len().saturating_sub(1),
        join_dims(&doc.dims),
        doc.total
    )
}

/// Text form of a cohomology report, with representatives when present.
pub fn render_cohomology_text(doc: &CohomologyDoc) -> String {
    let mut out = format!(
        "# {}\ndims 0..{}: {}\ntotal {}\n",
        doc.label,
        doc.dims.len().saturating_sub(1),
        join_dims(&doc.dims),
        doc.total
    );
    if let Some(reps) = &doc.representatives {
        for (degree, classes) in reps.iter().enumerate() {
            if classes.is_empty() {
                continue;
            }
            out.push_str(&format!("degree {degree}:\n"));
            for class in classes {
                out.push_str(&format!("  {class}\n"));
            }
        }
    }
    out
}

/// Two dimension rows padded so that corresponding entries line up.
fn aligned_rows(left: &[usize], right: &[usize]) -> (String, String) {
    let len = left.len().max(right.len());
    let mut a = String::new();
    let mut b = String::new();
    for i in 0..len {
        let ls = left.get(i).map(|d| d.to_string()).unwrap_or_default();
        let rs = right.get(i).map(|d| d.to_string()).unwrap_or_default();
        let w = ls.len().max(rs.len());
        if i > 0 {
            a.push(' ');
            b.push(' ');
        }
        a.push_str(&format!("{ls:>w$}"));
        b.push_str(&format!("{rs:>w$}"));
    }
    (a, b)
}

/// Text form of a verification report: one block per comparison with the
/// two tables aligned degree by degree.
pub fn render_report_text(doc: &ReportDoc) -> String {
    let verdict = if doc.pass { "PASS" } else { "FAIL" };
    let mut out = format!("[{verdict}] {} (cutoff {})\n", doc.label, doc.cutoff);
    for c in &doc.comparisons {
        let mark = if c.pass { "ok" } else { "MISMATCH" };
        out.push_str(&format!("  {}: {mark}\n", c.name));
        let width = c.left.label.len().max(c.right.label.len());
        let (lrow, rrow) = aligned_rows(&c.left.dims, &c.right.dims);
        out.push_str(&format!(
            "    {:<width$}  {}  (total {})\n",
            c.left.label, lrow, c.left.total
        ));
        out.push_str(&format!(
            "    {:<width$}  {}  (total {})\n",
            c.right.label, rrow, c.right.total
        ));
    }
    out
}

/// Text form of catalog data.
pub fn render_catalog_text(doc: &CatalogDoc) -> String {
    let mut out = format!("# {}\n", doc.group);
    out.push_str("classifying generators:\n");
    for g in &doc.generators {
        out.push_str(&format!("  {}  degree {}\n", g.name, g.degree));
    }
    out.push_str(&format!(
        "primitive degrees: {}\n",
        doc.primitive_degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    out.push_str("fiber generators:\n");
    for f in &doc.fibers {
        out.push_str(&format!(
            "  {}  degree {}  maps to {}\n",
            f.name, f.degree, f.target
        ));
    }
    out
}
