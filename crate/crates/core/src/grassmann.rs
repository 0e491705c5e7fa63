//! Real Grassmannians as two-sided homotopy quotients: presented
//! equivariant and ordinary cohomology rings, Sullivan models, and the
//! verifiers comparing the two degreewise.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Element, FreeCGA, GeneratorDecl};
use crate::catalog::{
    classifying_data, homogeneous_model, two_sided_model, two_sided_pushout, GroupDescriptor,
};
use crate::error::EngineError;
use crate::model::SullivanModel;
use crate::presentation::{
    invariant_hilbert_function, HilbertTable, QuotientPresentation, SignAction,
};
use crate::series::Series;

/// Whether planes carry an orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Oriented,
    Unoriented,
}

/// Which cohomology is asked for: ordinary, or equivariant with the
/// isotropy group acting on one side or both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivariance {
    Ordinary,
    LeftIsotropy,
    TwoSided,
}

/// A Grassmannian of `2n+a`-planes in a real vector space of dimension
/// `2n+a+2k+b`, with a choice of variant and equivariance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannCase {
    n: u32,
    k: u32,
    a: u32,
    b: u32,
    variant: Variant,
    equivariance: Equivariance,
}

impl GrassmannCase {
    pub fn new(
        n: u32,
        k: u32,
        a: u32,
        b: u32,
        variant: Variant,
        equivariance: Equivariance,
    ) -> Result<Self, EngineError> {
        if n == 0 || k == 0 {
            return Err(EngineError::DegenerateParameters(
                "both plane parameters must be positive".to_string(),
            ));
        }
        if a > 1 || b > 1 {
            return Err(EngineError::DegenerateParameters(
                "parity parameters must be 0 or 1".to_string(),
            ));
        }
        Ok(GrassmannCase {
            n,
            k,
            a,
            b,
            variant,
            equivariance,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn equivariance(&self) -> Equivariance {
        self.equivariance
    }

    /// Dimension of the planes: 2n + a.
    pub fn plane_dim(&self) -> u32 {
        2 * self.n + self.a
    }

    /// Dimension of the orthogonal complement: 2k + b.
    pub fn complement_dim(&self) -> u32 {
        2 * self.k + self.b
    }

    pub fn ambient_dim(&self) -> u32 {
        self.plane_dim() + self.complement_dim()
    }

    /// Dimension of the Grassmannian itself.
    pub fn manifold_dim(&self) -> u32 {
        self.plane_dim() * self.complement_dim()
    }

    /// Degree cutoff used by default: a little past the manifold
    /// dimension, capped to keep the largest cases tractable.
    pub fn default_cutoff(&self) -> u32 {
        (self.manifold_dim() + 4).min(24)
    }

    /// The ambient rotation group.
    pub fn group(&self) -> GroupDescriptor {
        GroupDescriptor::SpecialOrthogonal(self.ambient_dim())
    }

    /// The connected isotropy group of a coordinate plane.
    pub fn isotropy(&self) -> GroupDescriptor {
        GroupDescriptor::Product(vec![
            GroupDescriptor::SpecialOrthogonal(self.plane_dim()),
            GroupDescriptor::SpecialOrthogonal(self.complement_dim()),
        ])
    }

    pub fn with_variant(&self, variant: Variant) -> Self {
        GrassmannCase { variant, ..self.clone() }
    }

    pub fn with_equivariance(&self, equivariance: Equivariance) -> Self {
        GrassmannCase { equivariance, ..self.clone() }
    }
}

impl fmt::Display for GrassmannCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let variant = match self.variant {
            Variant::Oriented => "oriented",
            Variant::Unoriented => "unoriented",
        };
        let equivariance = match self.equivariance {
            Equivariance::Ordinary => "ordinary",
            Equivariance::LeftIsotropy => "left-isotropy",
            Equivariance::TwoSided => "two-sided",
        };
        write!(
            f,
            "n={},k={},a={},b={},{variant},{equivariance}",
            self.n, self.k, self.a, self.b
        )
    }
}

impl FromStr for GrassmannCase {
    type Err = EngineError;

    /// Parses strings such as `n=1,k=2,a=0,b=1,unoriented,two-sided`.
    /// The variant defaults to oriented, the equivariance to two-sided.
    fn from_str(s: &str) -> Result<Self, EngineError> {
        let mut n = None;
        let mut k = None;
        let mut a = None;
        let mut b = None;
        let mut variant = Variant::Oriented;
        let mut equivariance = Equivariance::TwoSided;
        for token in s.split(',') {
            let token = token.trim();
            if let Some((key, value)) = token.split_once('=') {
                let parsed: u32 = value.trim().parse().map_err(|_| {
                    EngineError::InvalidInput(format!("bad value in {token:?}"))
                })?;
                match key.trim() {
                    "n" => n = Some(parsed),
                    "k" => k = Some(parsed),
                    "a" => a = Some(parsed),
                    "b" => b = Some(parsed),
                    other => {
                        return Err(EngineError::InvalidInput(format!(
                            "unknown parameter {other:?}"
                        )))
                    }
                }
            } else {
                match token {
                    "oriented" => variant = Variant::Oriented,
                    "unoriented" => variant = Variant::Unoriented,
                    "ordinary" => equivariance = Equivariance::Ordinary,
                    "left-isotropy" => equivariance = Equivariance::LeftIsotropy,
                    "two-sided" => equivariance = Equivariance::TwoSided,
                    other => {
                        return Err(EngineError::InvalidInput(format!(
                            "unknown token {other:?}"
                        )))
                    }
                }
            }
        }
        let missing = |what: &str| EngineError::InvalidInput(format!("missing parameter {what}"));
        GrassmannCase::new(
            n.ok_or_else(|| missing("n"))?,
            k.ok_or_else(|| missing("k"))?,
            a.ok_or_else(|| missing("a"))?,
            b.ok_or_else(|| missing("b"))?,
            variant,
            equivariance,
        )
    }
}

/// One classifying side of a presentation: full or truncated Pontryagin
/// generators, and an Euler generator when the block size is even.
struct SideNames {
    pontryagin: Vec<(String, u32)>,
    euler: Option<(String, u32)>,
}

impl SideNames {
    /// Oriented side for a block of size 2n+a, primes marking the side.
    fn oriented(n: u32, a: u32, primes: usize) -> Self {
        let mark: String = "'".repeat(primes);
        if a == 0 {
            SideNames {
                pontryagin: (1..n).map(|j| (format!("p{mark}{j}"), 4 * j)).collect(),
                euler: Some((format!("e{mark}"), 2 * n)),
            }
        } else {
            SideNames {
                pontryagin: (1..=n).map(|j| (format!("p{mark}{j}"), 4 * j)).collect(),
                euler: None,
            }
        }
    }

    /// Unoriented side: the full Pontryagin list and no Euler generator.
    fn unoriented(stem: &str, n: u32, primes: usize) -> Self {
        let mark: String = "'".repeat(primes);
        SideNames {
            pontryagin: (1..=n).map(|j| (format!("{stem}{mark}{j}"), 4 * j)).collect(),
            euler: None,
        }
    }

    fn renamed(&self, rename: impl Fn(&str) -> String) -> Self {
        SideNames {
            pontryagin: self
                .pontryagin
                .iter()
                .map(|(s, d)| (rename(s), *d))
                .collect(),
            euler: self.euler.as_ref().map(|(s, d)| (rename(s), *d)),
        }
    }

    fn decls(&self) -> Vec<GeneratorDecl> {
        let mut out: Vec<GeneratorDecl> = self
            .pontryagin
            .iter()
            .map(|(s, d)| GeneratorDecl::new(s.clone(), *d))
            .collect();
        if let Some((s, d)) = &self.euler {
            out.push(GeneratorDecl::new(s.clone(), *d));
        }
        out
    }

    /// Total characteristic class: 1 plus the Pontryagin generators, with
    /// the squared Euler generator standing in for the top class.
    fn total_class(&self, algebra: &Arc<FreeCGA>) -> Result<Element, EngineError> {
        let mut total = Element::one(algebra.clone());
        for (name, _) in &self.pontryagin {
            total = total.add(&Element::generator_named(algebra, name)?)?;
        }
        if let Some((name, _)) = &self.euler {
            let e = Element::generator_named(algebra, name)?;
            total = total.add(&e.mul(&e)?)?;
        }
        Ok(total)
    }
}

fn rename_right(name: &str) -> String {
    crate::catalog::right_copy_name(name)
}

/// Positive-degree homogeneous components of `a - b`, in ascending degree.
fn difference_components(a: &Element, b: &Element) -> Result<Vec<Element>, EngineError> {
    Ok(a.sub(b)?.homogeneous_components().into_values().collect())
}

/// Presented cohomology ring for a case, following the shape dictated by
/// the parities: products of total classes agree across the two copies,
/// Euler classes pair up when both block sizes are even, and an exterior
/// generator appears when both are odd.
pub fn presented_ring(case: &GrassmannCase) -> Result<QuotientPresentation, EngineError> {
    match (case.variant, case.equivariance) {
        (Variant::Oriented, Equivariance::Ordinary) => oriented_ordinary(case),
        (Variant::Oriented, _) => oriented_equivariant(case),
        (Variant::Unoriented, Equivariance::Ordinary) => {
            if case.a == 1 && case.b == 1 {
                // with both blocks odd the orientation cover is rationally
                // invisible and the oriented presentation applies verbatim
                oriented_ordinary(case)
            } else {
                unoriented_ordinary(case)
            }
        }
        (Variant::Unoriented, _) => {
            if case.a == 1 && case.b == 1 {
                oriented_equivariant(case)
            } else {
                unoriented_equivariant(case)
            }
        }
    }
}

fn exterior_top(case: &GrassmannCase) -> GeneratorDecl {
    let degree = case.ambient_dim() - 1;
    GeneratorDecl::new(format!("eta{degree}"), degree)
}

fn oriented_equivariant(case: &GrassmannCase) -> Result<QuotientPresentation, EngineError> {
    let first = SideNames::oriented(case.n, case.a, 0);
    let second = SideNames::oriented(case.k, case.b, 1);
    let first_r = first.renamed(rename_right);
    let second_r = second.renamed(rename_right);
    let mut decls = first.decls();
    decls.extend(second.decls());
    decls.extend(first_r.decls());
    decls.extend(second_r.decls());
    if case.a == 1 && case.b == 1 {
        decls.push(exterior_top(case));
    }
    let algebra = FreeCGA::new(decls)?;
    let left_total = first.total_class(&algebra)?.mul(&second.total_class(&algebra)?)?;
    let right_total = first_r
        .total_class(&algebra)?
        .mul(&second_r.total_class(&algebra)?)?;
    let mut relations = difference_components(&left_total, &right_total)?;
    if case.a == 0 && case.b == 0 {
        let pair = |s: &SideNames| -> Result<Element, EngineError> {
            let e1 = Element::generator_named(&algebra, &s.euler.as_ref().unwrap().0)?;
            Ok(e1)
        };
        let left_pair = pair(&first)?.mul(&pair(&second)?)?;
        let right_pair = pair(&first_r)?.mul(&pair(&second_r)?)?;
        relations.push(left_pair.sub(&right_pair)?);
    }
    QuotientPresentation::new(
        format!("equivariant cohomology presentation for {case}"),
        algebra,
        relations,
    )
}

fn oriented_ordinary(case: &GrassmannCase) -> Result<QuotientPresentation, EngineError> {
    let first = SideNames::oriented(case.n, case.a, 0);
    let second = SideNames::oriented(case.k, case.b, 1);
    let mut decls = first.decls();
    decls.extend(second.decls());
    if case.a == 1 && case.b == 1 {
        decls.push(exterior_top(case));
    }
    let algebra = FreeCGA::new(decls)?;
    let total = first.total_class(&algebra)?.mul(&second.total_class(&algebra)?)?;
    let mut relations = difference_components(&total, &Element::one(algebra.clone()))?;
    if case.a == 0 && case.b == 0 {
        // the two Euler classes multiply to the Euler class of a trivial
        // bundle, which vanishes
        let e1 = Element::generator_named(&algebra, &first.euler.as_ref().unwrap().0)?;
        let e2 = Element::generator_named(&algebra, &second.euler.as_ref().unwrap().0)?;
        relations.push(e1.mul(&e2)?);
    }
    QuotientPresentation::new(
        format!("cohomology presentation for {case}"),
        algebra,
        relations,
    )
}

/// Name of the paired product of the two Euler classes surviving in the
/// unoriented even-even case, for the left and right copies.
fn paired_euler_names() -> (&'static str, &'static str) {
    ("ee'", "epseps'")
}

fn unoriented_equivariant(case: &GrassmannCase) -> Result<QuotientPresentation, EngineError> {
    let first = SideNames::unoriented("p", case.n, 0);
    let second = SideNames::unoriented("p", case.k, 1);
    let first_r = SideNames::unoriented("pi", case.n, 0);
    let second_r = SideNames::unoriented("pi", case.k, 1);
    let both_even = case.a == 0 && case.b == 0;
    let mut decls = first.decls();
    decls.extend(second.decls());
    let (left_w, right_w) = paired_euler_names();
    let w_degree = 2 * (case.n + case.k);
    if both_even {
        decls.push(GeneratorDecl::new(left_w, w_degree));
    }
    decls.extend(first_r.decls());
    decls.extend(second_r.decls());
    if both_even {
        decls.push(GeneratorDecl::new(right_w, w_degree));
    }
    let algebra = FreeCGA::new(decls)?;
    let left_total = first.total_class(&algebra)?.mul(&second.total_class(&algebra)?)?;
    let right_total = first_r
        .total_class(&algebra)?
        .mul(&second_r.total_class(&algebra)?)?;
    let mut relations = difference_components(&left_total, &right_total)?;
    if both_even {
        let w = Element::generator_named(&algebra, left_w)?;
        let omega = Element::generator_named(&algebra, right_w)?;
        relations.push(w.sub(&omega)?);
        // each paired Euler class squares to the product of the two top
        // Pontryagin classes of its copy
        let top = |s: &SideNames, t: &SideNames| -> Result<Element, EngineError> {
            let a = Element::generator_named(&algebra, &s.pontryagin.last().unwrap().0)?;
            let b = Element::generator_named(&algebra, &t.pontryagin.last().unwrap().0)?;
            a.mul(&b)
        };
        relations.push(w.mul(&w)?.sub(&top(&first, &second)?)?);
        relations.push(omega.mul(&omega)?.sub(&top(&first_r, &second_r)?)?);
    }
    QuotientPresentation::new(
        format!("equivariant cohomology presentation for {case}"),
        algebra,
        relations,
    )
}

fn unoriented_ordinary(case: &GrassmannCase) -> Result<QuotientPresentation, EngineError> {
    let first = SideNames::unoriented("p", case.n, 0);
    let second = SideNames::unoriented("p", case.k, 1);
    let mut decls = first.decls();
    decls.extend(second.decls());
    let algebra = FreeCGA::new(decls)?;
    let total = first.total_class(&algebra)?.mul(&second.total_class(&algebra)?)?;
    let relations = difference_components(&total, &Element::one(algebra.clone()))?;
    QuotientPresentation::new(
        format!("cohomology presentation for {case}"),
        algebra,
        relations,
    )
}

/// Sullivan model for a case: the two-sided model for either equivariant
/// flavor, the homogeneous-space model for ordinary cohomology. The
/// variant does not change the model; unoriented cohomology is extracted
/// from the oriented one by sign invariants.
pub fn build_model(case: &GrassmannCase) -> Result<SullivanModel, EngineError> {
    match case.equivariance {
        Equivariance::Ordinary => homogeneous_model(&case.group(), &case.isotropy()),
        Equivariance::LeftIsotropy | Equivariance::TwoSided => {
            two_sided_model(&case.group(), &case.isotropy())
        }
    }
}

/// One degreewise comparison of two tables.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub name: String,
    pub left_label: String,
    pub right_label: String,
    pub left: HilbertTable,
    pub right: HilbertTable,
}

impl Comparison {
    pub fn new(
        name: impl Into<String>,
        left_label: impl Into<String>,
        left: HilbertTable,
        right_label: impl Into<String>,
        right: HilbertTable,
    ) -> Self {
        Comparison {
            name: name.into(),
            left_label: left_label.into(),
            right_label: right_label.into(),
            left,
            right,
        }
    }

    pub fn pass(&self) -> bool {
        self.left.dims == self.right.dims
    }
}

/// Outcome of a verification: a list of table comparisons under a label.
/// Mismatches are reported here, not raised as errors.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub label: String,
    pub cutoff: u32,
    pub comparisons: Vec<Comparison>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.comparisons.iter().all(|c| c.pass())
    }
}

/// Sign action on the oriented equivariant ring induced by reversing the
/// plane orientations: each flip negates the Euler generators of one copy.
fn orientation_flips(
    case: &GrassmannCase,
    algebra: &FreeCGA,
) -> Result<SignAction, EngineError> {
    let mut euler_names: Vec<String> = Vec::new();
    if case.a == 0 {
        euler_names.push("e".to_string());
    }
    if case.b == 0 {
        euler_names.push("e'".to_string());
    }
    let mut involutions = Vec::new();
    if !euler_names.is_empty() {
        let left: Vec<&str> = euler_names.iter().map(|s| s.as_str()).collect();
        involutions.push(SignAction::negation_of(algebra, &left)?);
        let right_names: Vec<String> = euler_names.iter().map(|s| rename_right(s)).collect();
        let right: Vec<&str> = right_names.iter().map(|s| s.as_str()).collect();
        involutions.push(SignAction::negation_of(algebra, &right)?);
    }
    SignAction::generated(algebra.len(), &involutions)
}

/// Flip action on the oriented ordinary ring: one joint negation of all
/// Euler generators present.
fn single_orientation_flip(
    case: &GrassmannCase,
    algebra: &FreeCGA,
) -> Result<SignAction, EngineError> {
    let mut euler_names: Vec<&str> = Vec::new();
    if case.a == 0 {
        euler_names.push("e");
    }
    if case.b == 0 {
        euler_names.push("e'");
    }
    let mut involutions = Vec::new();
    if !euler_names.is_empty() {
        involutions.push(SignAction::negation_of(algebra, &euler_names)?);
    }
    SignAction::generated(algebra.len(), &involutions)
}

/// Checks the equivariant presentation of a case against the two-sided
/// model. For the unoriented variant the reference table is the ring of
/// orientation-flip invariants of the oriented presentation, which is
/// itself checked against the model first.
pub fn verify_case(
    case: &GrassmannCase,
    cutoff: u32,
) -> Result<VerificationReport, EngineError> {
    if case.equivariance == Equivariance::Ordinary {
        return Err(EngineError::InvalidInput(
            "ordinary cohomology is checked by the ordinary-cohomology verifier".to_string(),
        ));
    }
    let oriented = case.with_variant(Variant::Oriented);
    let model = build_model(&oriented)?;
    let model_table = model.cohomology(cutoff, false)?.table;
    let oriented_ring = presented_ring(&oriented)?;
    let oriented_table = oriented_ring.hilbert_function(cutoff)?;
    let mut comparisons = vec![Comparison::new(
        "two-sided model versus oriented presentation",
        "model cohomology",
        model_table,
        "presented ring",
        oriented_table,
    )];
    if case.variant == Variant::Unoriented {
        let action = orientation_flips(case, oriented_ring.algebra())?;
        let invariants = invariant_hilbert_function(&oriented_ring, &action, cutoff)?;
        let unoriented_table = presented_ring(case)?.hilbert_function(cutoff)?;
        comparisons.push(Comparison::new(
            "orientation-flip invariants versus unoriented presentation",
            "flip invariants of the oriented ring",
            invariants,
            "presented ring",
            unoriented_table,
        ));
    }
    Ok(VerificationReport {
        label: format!("equivariant presentation check for {case}"),
        cutoff,
        comparisons,
    })
}

/// Checks the ordinary-cohomology presentation of a case against the
/// homogeneous-space model, with a Poincare duality check for oriented
/// cases whose top degree is visible below the cutoff.
pub fn verify_corollary(
    case: &GrassmannCase,
    cutoff: u32,
) -> Result<VerificationReport, EngineError> {
    let ordinary = case.with_equivariance(Equivariance::Ordinary);
    let oriented = ordinary.with_variant(Variant::Oriented);
    let model = build_model(&oriented)?;
    let model_table = model.cohomology(cutoff, false)?.table;
    let oriented_ring = presented_ring(&oriented)?;
    let oriented_table = oriented_ring.hilbert_function(cutoff)?;
    let mut comparisons = vec![Comparison::new(
        "homogeneous model versus presentation",
        "model cohomology",
        model_table.clone(),
        "presented ring",
        oriented_table.clone(),
    )];
    match ordinary.variant {
        Variant::Oriented => {
            let top = ordinary.manifold_dim();
            if cutoff >= top {
                let seen = &oriented_table.dims[..=top as usize];
                let reversed: Vec<usize> = seen.iter().rev().copied().collect();
                comparisons.push(Comparison::new(
                    "Poincare duality through the top degree",
                    "dimensions",
                    HilbertTable::new(seen.to_vec()),
                    "reversed dimensions",
                    HilbertTable::new(reversed),
                ));
            }
        }
        Variant::Unoriented => {
            let action = single_orientation_flip(&ordinary, oriented_ring.algebra())?;
            let invariants = invariant_hilbert_function(&oriented_ring, &action, cutoff)?;
            let unoriented_table = presented_ring(&ordinary)?.hilbert_function(cutoff)?;
            comparisons.push(Comparison::new(
                "orientation-flip invariants versus unoriented presentation",
                "flip invariants of the oriented ring",
                invariants,
                "presented ring",
                unoriented_table,
            ));
        }
    }
    Ok(VerificationReport {
        label: format!("ordinary cohomology check for {ordinary}"),
        cutoff,
        comparisons,
    })
}

/// Checks that gluing two copies of the classifying ring of the isotropy
/// group over the ambient group reproduces the two-sided cohomology. When
/// both block sizes are odd the model carries an extra exterior class
/// that the ring-level gluing cannot see; its series factor is divided
/// out before comparing.
pub fn verify_pushout_equivalence(
    case: &GrassmannCase,
    cutoff: u32,
) -> Result<VerificationReport, EngineError> {
    let two_sided = case
        .with_variant(Variant::Oriented)
        .with_equivariance(Equivariance::TwoSided);
    let model = build_model(&two_sided)?;
    let model_table = model.cohomology(cutoff, false)?.table;
    let (model_label, model_side) = if case.a == 1 && case.b == 1 {
        let degree = (case.ambient_dim() - 1) as usize;
        let series = Series::from_dims(&model_table.dims, cutoff).div_one_plus(degree);
        (
            "model cohomology with the exterior class divided out",
            HilbertTable::new(series.dims()),
        )
    } else {
        ("model cohomology", model_table)
    };
    let glued = two_sided_pushout(&two_sided.group(), &two_sided.isotropy())?;
    let glued_table = glued.hilbert_function(cutoff)?;
    Ok(VerificationReport {
        label: format!("pushout comparison for {two_sided}"),
        cutoff,
        comparisons: vec![Comparison::new(
            "two-sided model versus glued classifying rings",
            model_label,
            model_side,
            "pushout ring",
            glued_table,
        )],
    })
}

/// Checks the product decomposition of the two-sided cohomology: as a
/// graded vector space it is the free algebra on the isotropy classifying
/// generators tensored with the ordinary cohomology of the quotient.
pub fn verify_formality_factorization(
    case: &GrassmannCase,
    cutoff: u32,
) -> Result<VerificationReport, EngineError> {
    let oriented = case.with_variant(Variant::Oriented);
    let two_sided = oriented.with_equivariance(Equivariance::TwoSided);
    let model_table = build_model(&two_sided)?.cohomology(cutoff, false)?.table;
    let base_ring = classifying_data(&case.isotropy())?.ring().clone();
    let base_series = Series::free_cga(&base_ring, cutoff);
    let quotient = oriented.with_equivariance(Equivariance::Ordinary);
    let quotient_table = build_model(&quotient)?.cohomology(cutoff, false)?.table;
    let product = base_series.mul(&Series::from_dims(&quotient_table.dims, cutoff));
    Ok(VerificationReport {
        label: format!("factorization check for {two_sided}"),
        cutoff,
        comparisons: vec![Comparison::new(
            "two-sided model versus base times quotient cohomology",
            "model cohomology",
            model_table,
            "free base series times quotient table",
            HilbertTable::new(product.dims()),
        )],
    })
}

/// Runs the verifier matching the equivariance of the case: the
/// equivariant check for two-sided cases, the factorization check for
/// left-isotropy cases, and the ordinary-cohomology check otherwise.
pub fn dispatch_verification(
    case: &GrassmannCase,
    cutoff: u32,
) -> Result<VerificationReport, EngineError> {
    match case.equivariance {
        Equivariance::TwoSided => verify_case(case, cutoff),
        Equivariance::Ordinary => verify_corollary(case, cutoff),
        Equivariance::LeftIsotropy => verify_formality_factorization(case, cutoff),
    }
}

/// The parameter grid covered by the batch verifier.
pub fn small_parameters() -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for k in 1..=2 {
            for a in 0..=1 {
                for b in 0..=1 {
                    out.push((n, k, a, b));
                }
            }
        }
    }
    out
}

/// Runs every check on every small parameter combination; the cutoff
/// defaults per case when none is given.
pub fn verify_all_small(cutoff: Option<u32>) -> Result<Vec<VerificationReport>, EngineError> {
    let mut reports = Vec::new();
    for (n, k, a, b) in small_parameters() {
        let base = GrassmannCase::new(n, k, a, b, Variant::Oriented, Equivariance::TwoSided)?;
        let limit = cutoff.unwrap_or_else(|| base.default_cutoff());
        reports.push(verify_case(&base, limit)?);
        reports.push(verify_case(&base.with_variant(Variant::Unoriented), limit)?);
        reports.push(verify_corollary(&base, limit)?);
        reports.push(verify_corollary(
            &base.with_variant(Variant::Unoriented),
            limit,
        )?);
        reports.push(verify_pushout_equivalence(&base, limit)?);
        reports.push(verify_formality_factorization(&base, limit)?);
    }
    Ok(reports)
}
