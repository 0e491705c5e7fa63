//! Catalog of classical compact Lie groups: rational classifying rings,
//! fiber generators, torus restrictions and block-inclusion restrictions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::{Element, FreeCGA, GeneratorDecl, Monomial, Ratio};
use crate::error::EngineError;
use crate::linalg::{DegreeSlice, TrackedEchelon};
use crate::model::SullivanModel;
use crate::presentation::{pushout, QuotientPresentation};

/// A supported compact Lie group, or a finite product of them. The catalog
/// is a closed world: unrecognised family names fail to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    SpecialOrthogonal(u32),
    Spin(u32),
    Unitary(u32),
    SpecialUnitary(u32),
    Symplectic(u32),
    Torus(u32),
    Product(Vec<GroupDescriptor>),
}

use GroupDescriptor::*;

impl GroupDescriptor {
    /// Checks family sizes and forbids nested products.
    pub fn validate(&self) -> Result<(), EngineError> {
        let bad = |what: &str| Err(EngineError::InvalidInput(what.to_string()));
        match self {
            SpecialOrthogonal(n) | Spin(n) if *n < 2 => bad("orthogonal size must be at least 2"),
            SpecialUnitary(n) if *n < 2 => bad("special unitary size must be at least 2"),
            Unitary(n) | Symplectic(n) | Torus(n) if *n < 1 => bad("size must be positive"),
            Product(fs) => {
                if fs.is_empty() {
                    return bad("empty product");
                }
                for f in fs {
                    if matches!(f, Product(_)) {
                        return bad("nested products are not supported");
                    }
                    f.validate()?;
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Rank of a maximal torus.
    pub fn rank(&self) -> u32 {
        match self {
            SpecialOrthogonal(n) | Spin(n) => n / 2,
            Unitary(n) | Symplectic(n) | Torus(n) => *n,
            SpecialUnitary(n) => n - 1,
            Product(fs) => fs.iter().map(|f| f.rank()).sum(),
        }
    }

    /// The factors of a product, or the group itself as a single factor.
    pub fn factors(&self) -> &[GroupDescriptor] {
        match self {
            Product(fs) => fs,
            _ => std::slice::from_ref(self),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialOrthogonal(n) => write!(f, "SO({n})"),
            Spin(n) => write!(f, "Spin({n})"),
            Unitary(n) => write!(f, "U({n})"),
            SpecialUnitary(n) => write!(f, "SU({n})"),
            Symplectic(n) => write!(f, "Sp({n})"),
            Torus(n) => write!(f, "T({n})"),
            Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, EngineError> {
        fn factor(s: &str) -> Result<GroupDescriptor, EngineError> {
            let s = s.trim();
            let open = s
                .find('(')
                .ok_or_else(|| EngineError::InvalidInput(format!("missing size in {s:?}")))?;
            let inner = s[open..]
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| EngineError::InvalidInput(format!("malformed group {s:?}")))?;
            let n: u32 = inner
                .trim()
                .parse()
                .map_err(|_| EngineError::InvalidInput(format!("bad size in {s:?}")))?;
            match &s[..open] {
                "SO" => Ok(SpecialOrthogonal(n)),
                "Spin" => Ok(Spin(n)),
                "U" => Ok(Unitary(n)),
                "SU" => Ok(SpecialUnitary(n)),
                "Sp" => Ok(Symplectic(n)),
                "T" => Ok(Torus(n)),
                other => Err(EngineError::UnsupportedFamily(other.to_string())),
            }
        }
        let parts: Vec<&str> = s.split('x').collect();
        let desc = if parts.len() == 1 {
            factor(parts[0])?
        } else {
            Product(parts.into_iter().map(factor).collect::<Result<_, _>>()?)
        };
        desc.validate()?;
        Ok(desc)
    }
}

/// One odd generator of the acyclic bundle model of a group: its name, its
/// degree, and the index of the classifying-ring generator it maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberGen {
    pub name: String,
    pub degree: u32,
    pub target: usize,
}

/// Classifying ring and fiber generators of a catalog group.
#[derive(Clone, Debug)]
pub struct GroupData {
    descriptor: GroupDescriptor,
    ring: Arc<FreeCGA>,
    fibers: Vec<FiberGen>,
}

impl GroupData {
    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn ring(&self) -> &Arc<FreeCGA> {
        &self.ring
    }

    pub fn fibers(&self) -> &[FiberGen] {
        &self.fibers
    }

    /// Degrees of the odd fiber generators, sorted ascending.
    pub fn primitive_degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.fibers.iter().map(|f| f.degree).collect();
        ds.sort_unstable();
        ds
    }
}

/// Appends `primes` copies of a prime mark and an optional index to a stem.
fn primed(stem: &str, primes: usize, index: Option<u32>) -> String {
    let mut s = String::from(stem);
    for _ in 0..primes {
        s.push('\'');
    }
    if let Some(i) = index {
        s.push_str(&i.to_string());
    }
    s
}

/// Classifying generators and fiber generators of one product factor,
/// with target indices shifted by the number of earlier generators.
fn factor_data(
    factor: &GroupDescriptor,
    primes: usize,
    start: usize,
) -> Result<(Vec<GeneratorDecl>, Vec<FiberGen>), EngineError> {
    let mut gens = Vec::new();
    let mut fibers = Vec::new();
    let mut push = |name: String, degree: u32| {
        let fiber_name = if degree == 2 && name.starts_with('t') {
            primed("zt", primes, Some(name[1 + primes..].parse().unwrap()))
        } else if name.trim_matches('\'').ends_with('e') {
            primed("eta", primes, Some(degree - 1))
        } else {
            primed("z", primes, Some(degree - 1))
        };
        fibers.push(FiberGen {
            name: fiber_name,
            degree: degree - 1,
            target: start + gens.len(),
        });
        gens.push(GeneratorDecl::new(name, degree));
    };
    match factor {
        SpecialOrthogonal(n) | Spin(n) => {
            let r = n / 2;
            let top = if n % 2 == 0 { r - 1 } else { r };
            for j in 1..=top {
                push(primed("p", primes, Some(j)), 4 * j);
            }
            if n % 2 == 0 {
                push(primed("e", primes, None), *n);
            }
        }
        Unitary(n) => {
            for j in 1..=*n {
                push(primed("c", primes, Some(j)), 2 * j);
            }
        }
        SpecialUnitary(n) => {
            for j in 2..=*n {
                push(primed("c", primes, Some(j)), 2 * j);
            }
        }
        Symplectic(n) => {
            for j in 1..=*n {
                push(primed("q", primes, Some(j)), 4 * j);
            }
        }
        Torus(n) => {
            for i in 1..=*n {
                push(primed("t", primes, Some(i)), 2);
            }
        }
        Product(_) => {
            return Err(EngineError::InvalidInput(
                "nested products are not supported".to_string(),
            ))
        }
    }
    Ok((gens, fibers))
}

/// Classifying ring and fiber generators for a descriptor. Product factors
/// get one prime mark per position past the first.
pub fn classifying_data(desc: &GroupDescriptor) -> Result<GroupData, EngineError> {
    desc.validate()?;
    let mut gens = Vec::new();
    let mut fibers = Vec::new();
    for (i, f) in desc.factors().iter().enumerate() {
        let (g, z) = factor_data(f, i, gens.len())?;
        gens.extend(g);
        fibers.extend(z);
    }
    Ok(GroupData {
        descriptor: desc.clone(),
        ring: FreeCGA::new(gens)?,
        fibers,
    })
}

/// An algebra map between free graded-commutative algebras, recorded by
/// generator images and applied by substitution.
#[derive(Clone, Debug)]
pub struct RestrictionMap {
    source: Arc<FreeCGA>,
    target: Arc<FreeCGA>,
    images: Vec<Element>,
}

impl RestrictionMap {
    /// Checks one image per generator, over the target, of matching degree.
    pub fn new(
        source: Arc<FreeCGA>,
        target: Arc<FreeCGA>,
        images: Vec<Element>,
    ) -> Result<Self, EngineError> {
        if images.len() != source.len() {
            return Err(EngineError::InvalidInput(
                "one image per source generator is required".to_string(),
            ));
        }
        for (i, img) in images.iter().enumerate() {
            if *img.algebra() != target {
                return Err(EngineError::MismatchedAlgebras);
            }
            match img.degree() {
                None if img.is_zero() => {}
                None => {
                    return Err(EngineError::NonHomogeneous(
                        source.generators()[i].name.clone(),
                    ))
                }
                Some(d) if d != source.degree(i) => {
                    return Err(EngineError::DegreeMismatch {
                        expected: source.degree(i),
                        found: d,
                    })
                }
                _ => {}
            }
        }
        Ok(RestrictionMap {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &Arc<FreeCGA> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FreeCGA> {
        &self.target
    }

    pub fn image_of(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn apply(&self, e: &Element) -> Result<Element, EngineError> {
        if *e.algebra() != self.source {
            return Err(EngineError::MismatchedAlgebras);
        }
        e.substitute(self.target.clone(), &self.images)
    }
}

/// Maximal torus as a catalog descriptor. Special unitary groups are
/// rejected: their torus sits inside the full unitary torus by a relation,
/// not a coordinate block, and nothing here needs them.
fn maximal_torus(desc: &GroupDescriptor) -> Result<GroupDescriptor, EngineError> {
    let torus_of = |f: &GroupDescriptor| -> Result<GroupDescriptor, EngineError> {
        match f {
            SpecialOrthogonal(_) | Spin(_) | Unitary(_) | Symplectic(_) | Torus(_) => {
                Ok(Torus(f.rank()))
            }
            SpecialUnitary(_) => Err(EngineError::UnsupportedFamily(
                "special unitary torus restriction".to_string(),
            )),
            Product(_) => unreachable!("factors are never products"),
        }
    };
    match desc {
        Product(fs) => Ok(Product(fs.iter().map(torus_of).collect::<Result<_, _>>()?)),
        _ => torus_of(desc),
    }
}

/// Sum over all `j`-subsets of `vars` of the product of the chosen
/// variables, each raised to `power`.
fn subset_sum(ring: &Arc<FreeCGA>, vars: &[usize], j: usize, power: u32) -> Element {
    fn rec(vars: &[usize], left: usize, power: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        if vars.len() < left {
            return;
        }
        // take the first variable, or skip it
        exps[vars[0]] = power;
        rec(&vars[1..], left - 1, power, exps, out);
        exps[vars[0]] = 0;
        rec(&vars[1..], left, power, exps, out);
    }
    let mut monos = Vec::new();
    let mut exps = vec![0u32; ring.len()];
    rec(vars, j, power, &mut exps, &mut monos);
    Element::from_terms(ring.clone(), monos.into_iter().map(|m| (m, Ratio::one())))
}

/// Restriction of the classifying ring to the maximal torus: elementary
/// symmetric polynomials in the squared torus variables for orthogonal and
/// symplectic families, in the variables themselves for unitary groups,
/// and the top product of the variables for an even orthogonal Euler class.
pub fn torus_restriction(desc: &GroupDescriptor) -> Result<RestrictionMap, EngineError> {
    let data = classifying_data(desc)?;
    let torus = classifying_data(&maximal_torus(desc)?)?;
    let tring = torus.ring();
    let mut images = Vec::with_capacity(data.ring().len());
    let mut var_start = 0usize;
    for f in desc.factors() {
        let r = f.rank() as usize;
        let vars: Vec<usize> = (var_start..var_start + r).collect();
        match f {
            SpecialOrthogonal(n) | Spin(n) => {
                let top = if n % 2 == 0 { r - 1 } else { r };
                for j in 1..=top {
                    images.push(subset_sum(tring, &vars, j, 2));
                }
                if n % 2 == 0 {
                    images.push(subset_sum(tring, &vars, r, 1));
                }
            }
            Unitary(n) => {
                for j in 1..=*n as usize {
                    images.push(subset_sum(tring, &vars, j, 1));
                }
            }
            Symplectic(n) => {
                for j in 1..=*n as usize {
                    images.push(subset_sum(tring, &vars, j, 2));
                }
            }
            Torus(_) => {
                for &v in &vars {
                    images.push(Element::generator(tring.clone(), v));
                }
            }
            SpecialUnitary(_) | Product(_) => unreachable!("excluded by maximal_torus"),
        }
        var_start += r;
    }
    RestrictionMap::new(data.ring().clone(), tring.clone(), images)
}

/// Writes an element of the torus ring of `k` in terms of the classifying
/// generators of `k`, by an exact linear solve in each degree.
pub fn express_in_invariants(
    k: &GroupDescriptor,
    value: &Element,
) -> Result<Element, EngineError> {
    let data = classifying_data(k)?;
    let tau = torus_restriction(k)?;
    if *value.algebra() != *tau.target() {
        return Err(EngineError::MismatchedAlgebras);
    }
    let mut out = Element::zero(data.ring().clone());
    for (deg, comp) in value.homogeneous_components() {
        let basis = data.ring().monomial_basis(deg);
        let slice = DegreeSlice::new(tau.target().clone(), deg);
        let mut ech = TrackedEchelon::new();
        for m in basis.iter() {
            let img = tau.apply(&Element::from_monomial(
                data.ring().clone(),
                m.clone(),
                Ratio::one(),
            ))?;
            ech.insert(slice.vector_of(&img)?);
        }
        let sol = ech
            .express(&slice.vector_of(&comp)?)
            .ok_or_else(|| EngineError::NotExpressible(format!("{comp}")))?;
        for (i, c) in sol.entries() {
            out = out.add(&Element::from_monomial(
                data.ring().clone(),
                basis[*i].clone(),
                c.clone(),
            ))?;
        }
    }
    Ok(out)
}

/// Block families that can absorb smaller blocks of the same kind.
#[derive(Clone, Copy, PartialEq, Eq)]
enum BlockFamily {
    Orthogonal,
    Unitary,
    Symplectic,
}

fn block_family(desc: &GroupDescriptor) -> Option<(BlockFamily, u32)> {
    match desc {
        SpecialOrthogonal(n) | Spin(n) => Some((BlockFamily::Orthogonal, *n)),
        Unitary(n) => Some((BlockFamily::Unitary, *n)),
        Symplectic(n) => Some((BlockFamily::Symplectic, *n)),
        _ => None,
    }
}

/// The coordinate projection between maximal tori induced by a block
/// inclusion: the first `rank(k)` torus variables of `g` map to the torus
/// variables of `k` in order, the remaining ones to zero.
fn torus_partition(
    g: &GroupDescriptor,
    k: &GroupDescriptor,
) -> Result<RestrictionMap, EngineError> {
    let gt = classifying_data(&maximal_torus(g)?)?;
    let kt = classifying_data(&maximal_torus(k)?)?;
    let rk = kt.ring().len();
    let images = (0..gt.ring().len())
        .map(|i| {
            if i < rk {
                Element::generator(kt.ring().clone(), i)
            } else {
                Element::zero(kt.ring().clone())
            }
        })
        .collect();
    RestrictionMap::new(gt.ring().clone(), kt.ring().clone(), images)
}

/// Restriction along a block inclusion of `k` into `g`: same family, block
/// sizes fitting inside `g`. Computed through the maximal tori and an exact
/// solve back into the classifying generators of `k`.
pub fn block_restriction(
    g: &GroupDescriptor,
    k: &GroupDescriptor,
) -> Result<RestrictionMap, EngineError> {
    g.validate()?;
    k.validate()?;
    let (family, size) = block_family(g)
        .ok_or_else(|| EngineError::NonBlockPair(format!("{g} is not a block family")))?;
    let mut used = 0u32;
    for f in k.factors() {
        match block_family(f) {
            Some((fam, m)) if fam == family => used += m,
            _ => {
                return Err(EngineError::NonBlockPair(format!(
                    "{f} is not a block of {g}"
                )))
            }
        }
    }
    if used > size {
        return Err(EngineError::NonBlockPair(format!(
            "blocks of total size {used} exceed {g}"
        )));
    }
    let gdata = classifying_data(g)?;
    let kdata = classifying_data(k)?;
    let tau_g = torus_restriction(g)?;
    let part = torus_partition(g, k)?;
    let mut images = Vec::with_capacity(gdata.ring().len());
    for i in 0..gdata.ring().len() {
        let over_torus = part.apply(tau_g.image_of(i))?;
        images.push(express_in_invariants(k, &over_torus)?);
    }
    RestrictionMap::new(gdata.ring().clone(), kdata.ring().clone(), images)
}

/// Sign vector on the classifying generators negating the Euler class of
/// the chosen factor, as induced by conjugation with a reflection.
pub fn determinant_involution(
    desc: &GroupDescriptor,
    factor: usize,
) -> Result<Vec<i8>, EngineError> {
    let data = classifying_data(desc)?;
    let factors = desc.factors();
    if factor >= factors.len() {
        return Err(EngineError::InvalidInput(format!(
            "no factor {factor} in {desc}"
        )));
    }
    let has_euler = matches!(&factors[factor], SpecialOrthogonal(n) | Spin(n) if n % 2 == 0);
    if !has_euler {
        return Err(EngineError::NoEulerClass(factor));
    }
    let mut start = 0usize;
    for f in factors.iter().take(factor) {
        start += factor_data(f, 0, 0)?.0.len();
    }
    let len = factor_data(&factors[factor], 0, 0)?.0.len();
    // the Euler generator is declared last within its factor
    let euler = start + len - 1;
    debug_assert!(data.ring().generators()[euler].name.starts_with('e'));
    let mut signs = vec![1i8; data.ring().len()];
    signs[euler] = -1;
    Ok(signs)
}

/// Renames a classifying generator for the right-hand copy of a base:
/// p to pi, e to eps, q to kappa, c to gamma, t to s, primes kept.
pub(crate) fn right_copy_name(name: &str) -> String {
    for (stem, renamed) in [("p", "pi"), ("e", "eps"), ("q", "kappa"), ("c", "gamma"), ("t", "s")] {
        if let Some(rest) = name.strip_prefix(stem) {
            return format!("{renamed}{rest}");
        }
    }
    format!("{name}_r")
}

/// Acyclic bundle model of a group: classifying generators together with
/// odd fiber generators mapping onto them.
pub fn acyclic_bundle_model(desc: &GroupDescriptor) -> Result<SullivanModel, EngineError> {
    let data = classifying_data(desc)?;
    let mut gens = data.ring().generators().to_vec();
    let base_len = gens.len();
    for f in data.fibers() {
        gens.push(GeneratorDecl::new(f.name.clone(), f.degree));
    }
    let full = FreeCGA::new(gens)?;
    let mut diffs = Vec::new();
    for f in data.fibers() {
        // base generators keep their indices in the extended algebra
        debug_assert!(f.target < base_len);
        diffs.push((f.name.clone(), Element::generator(full.clone(), f.target)));
    }
    SullivanModel::new(format!("acyclic bundle model for {desc}"), full, diffs)
}

/// Model of the homogeneous space `g`/`k`: base the classifying ring of
/// `k`, fibers of `g` mapped to minus the restriction of their targets.
pub fn homogeneous_model(
    g: &GroupDescriptor,
    k: &GroupDescriptor,
) -> Result<SullivanModel, EngineError> {
    let rho = block_restriction(g, k)?;
    let gdata = classifying_data(g)?;
    let mut gens = rho.target().generators().to_vec();
    for f in gdata.fibers() {
        gens.push(GeneratorDecl::new(f.name.clone(), f.degree));
    }
    let full = FreeCGA::new(gens)?;
    let mut diffs = Vec::new();
    for f in gdata.fibers() {
        let image = rho.image_of(f.target).embedded(&full, 0);
        diffs.push((f.name.clone(), image.neg()));
    }
    SullivanModel::new(format!("homogeneous model: {g}/{k}"), full, diffs)
}

/// Model of the two-sided quotient `k`\`g`/`k`: two renamed copies of the
/// classifying ring of `k`, fibers of `g` mapped to the difference of the
/// right and left restrictions of their targets.
pub fn two_sided_model(
    g: &GroupDescriptor,
    k: &GroupDescriptor,
) -> Result<SullivanModel, EngineError> {
    let rho = block_restriction(g, k)?;
    let gdata = classifying_data(g)?;
    let left = rho.target();
    let nk = left.len();
    let mut gens = left.generators().to_vec();
    for gdecl in left.generators() {
        gens.push(GeneratorDecl::new(
            right_copy_name(&gdecl.name),
            gdecl.degree,
        ));
    }
    for f in gdata.fibers() {
        gens.push(GeneratorDecl::new(f.name.clone(), f.degree));
    }
    let full = FreeCGA::new(gens)?;
    let mut diffs = Vec::new();
    for f in gdata.fibers() {
        let image = rho.image_of(f.target);
        let d = image.embedded(&full, nk).sub(&image.embedded(&full, 0))?;
        diffs.push((f.name.clone(), d));
    }
    SullivanModel::new(format!("two-sided model: {k}\\{g}/{k}"), full, diffs)
}

/// Commutative-ring counterpart of the two-sided model: two renamed
/// copies of the classifying ring of `k`, glued by identifying the two
/// restrictions of every classifying generator of `g`.
pub fn two_sided_pushout(
    g: &GroupDescriptor,
    k: &GroupDescriptor,
) -> Result<QuotientPresentation, EngineError> {
    let rho = block_restriction(g, k)?;
    let left_ring = rho.target().clone();
    let right_ring = FreeCGA::new(
        left_ring
            .generators()
            .iter()
            .map(|d| GeneratorDecl::new(right_copy_name(&d.name), d.degree))
            .collect(),
    )?;
    let left = QuotientPresentation::free(format!("classifying ring of {k}"), left_ring);
    let right = QuotientPresentation::free(
        format!("right copy of the classifying ring of {k}"),
        right_ring.clone(),
    );
    let pairs: Vec<(Element, Element)> = (0..rho.source().len())
        .map(|i| {
            let img = rho.image_of(i);
            (img.clone(), img.embedded(&right_ring, 0))
        })
        .collect();
    pushout(
        &left,
        &right,
        &pairs,
        format!("pushout of classifying rings of {k} over {g}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio_int;

    fn d(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["SO(4)", "Spin(7)", "U(2)", "SU(3)", "Sp(2)", "T(3)", "SO(2)xSO(3)", "Sp(1)xSp(1)"] {
            assert_eq!(d(s).to_string(), s);
        }
        assert!(matches!(
            "G2(1)".parse::<GroupDescriptor>(),
            Err(EngineError::UnsupportedFamily(_))
        ));
        assert!(matches!(
            "E8(8)".parse::<GroupDescriptor>(),
            Err(EngineError::UnsupportedFamily(_))
        ));
        assert!("SO(1)".parse::<GroupDescriptor>().is_err());
        assert!("SO(4)x".parse::<GroupDescriptor>().is_err());
    }

    #[test]
    fn classifying_rings_match_known_generator_degrees() {
        let expect = |s: &str, pairs: &[(&str, u32)]| {
            let data = classifying_data(&d(s)).unwrap();
            let got: Vec<(String, u32)> = data
                .ring()
                .generators()
                .iter()
                .map(|g| (g.name.clone(), g.degree))
                .collect();
            let want: Vec<(String, u32)> =
                pairs.iter().map(|(n, k)| (n.to_string(), *k)).collect();
            assert_eq!(got, want, "ring of {s}");
        };
        expect("SO(4)", &[("p1", 4), ("e", 4)]);
        expect("SO(2)", &[("e", 2)]);
        expect("SO(7)", &[("p1", 4), ("p2", 8), ("p3", 12)]);
        expect("U(3)", &[("c1", 2), ("c2", 4), ("c3", 6)]);
        expect("SU(3)", &[("c2", 4), ("c3", 6)]);
        expect("Sp(2)", &[("q1", 4), ("q2", 8)]);
        expect("T(2)", &[("t1", 2), ("t2", 2)]);
        expect("SO(2)xSO(3)", &[("e", 2), ("p'1", 4)]);
        expect("SO(4)xSO(4)", &[("p1", 4), ("e", 4), ("p'1", 4), ("e'", 4)]);
    }

    #[test]
    fn primitive_degrees_are_sorted_with_multiplicity() {
        let prim = |s: &str| classifying_data(&d(s)).unwrap().primitive_degrees();
        assert_eq!(prim("SO(4)"), vec![3, 3]);
        assert_eq!(prim("SO(7)"), vec![3, 7, 11]);
        assert_eq!(prim("SO(8)"), vec![3, 7, 7, 11]);
        assert_eq!(prim("U(1)"), vec![1]);
        assert_eq!(prim("T(2)"), vec![1, 1]);
        assert_eq!(prim("SO(2)xSO(3)"), vec![1, 3]);
    }

    #[test]
    fn torus_restriction_uses_squared_variables() {
        let tau = torus_restriction(&d("SO(5)")).unwrap();
        let t1 = Element::generator_named(tau.target(), "t1").unwrap();
        let t2 = Element::generator_named(tau.target(), "t2").unwrap();
        let sq = |t: &Element| t.mul(t).unwrap();
        assert_eq!(*tau.image_of(0), sq(&t1).add(&sq(&t2)).unwrap());
        assert_eq!(*tau.image_of(1), sq(&t1).mul(&sq(&t2)).unwrap());

        let tau4 = torus_restriction(&d("SO(4)")).unwrap();
        let u1 = Element::generator_named(tau4.target(), "t1").unwrap();
        let u2 = Element::generator_named(tau4.target(), "t2").unwrap();
        // p1 then e, with e the product of the torus variables
        assert_eq!(*tau4.image_of(1), u1.mul(&u2).unwrap());

        let tau_u = torus_restriction(&d("U(2)")).unwrap();
        let v1 = Element::generator_named(tau_u.target(), "t1").unwrap();
        let v2 = Element::generator_named(tau_u.target(), "t2").unwrap();
        assert_eq!(*tau_u.image_of(0), v1.add(&v2).unwrap());
    }

    #[test]
    fn block_restriction_splits_a_total_class() {
        // SO(2)xSO(3) inside SO(5): ring generators e and p'1
        let rho = block_restriction(&d("SO(5)"), &d("SO(2)xSO(3)")).unwrap();
        let e = Element::generator_named(rho.target(), "e").unwrap();
        let p1 = Element::generator_named(rho.target(), "p'1").unwrap();
        let e2 = e.mul(&e).unwrap();
        assert_eq!(*rho.image_of(0), e2.add(&p1).unwrap());
        assert_eq!(*rho.image_of(1), e2.mul(&p1).unwrap());
    }

    #[test]
    fn euler_class_restricts_to_zero_on_odd_blocks() {
        let rho = block_restriction(&d("SO(6)"), &d("SO(3)xSO(3)")).unwrap();
        let p1 = Element::generator_named(rho.target(), "p1").unwrap();
        let q1 = Element::generator_named(rho.target(), "p'1").unwrap();
        assert_eq!(*rho.image_of(0), p1.add(&q1).unwrap());
        assert_eq!(*rho.image_of(1), p1.mul(&q1).unwrap());
        // the Euler generator of SO(6) dies: its top torus product hits
        // the zeroed third variable
        assert!(rho.image_of(2).is_zero());
    }

    #[test]
    fn restrictions_commute_with_torus_restrictions() {
        let pairs = [
            ("SO(5)", "SO(2)xSO(3)"),
            ("SO(6)", "SO(3)xSO(3)"),
            ("SO(3)", "SO(2)"),
            ("Sp(2)", "Sp(1)xSp(1)"),
            ("U(3)", "U(1)xU(2)"),
            ("SO(8)", "SO(4)xSO(4)"),
        ];
        for (gs, ks) in pairs {
            let g = d(gs);
            let k = d(ks);
            let rho = block_restriction(&g, &k).unwrap();
            let tau_g = torus_restriction(&g).unwrap();
            let tau_k = torus_restriction(&k).unwrap();
            let part = torus_partition(&g, &k).unwrap();
            for i in 0..rho.source().len() {
                let via_k = tau_k.apply(rho.image_of(i)).unwrap();
                let via_g = part.apply(tau_g.image_of(i)).unwrap();
                assert_eq!(via_k, via_g, "generator {i} of {gs} into {ks}");
            }
        }
    }

    #[test]
    fn unsupported_pairs_are_rejected() {
        assert!(matches!(
            torus_restriction(&d("SU(2)")),
            Err(EngineError::UnsupportedFamily(_))
        ));
        assert!(matches!(
            block_restriction(&d("U(2)"), &d("SO(2)")),
            Err(EngineError::NonBlockPair(_))
        ));
        assert!(matches!(
            block_restriction(&d("SO(4)"), &d("SO(3)xSO(3)")),
            Err(EngineError::NonBlockPair(_))
        ));
        assert!(matches!(
            block_restriction(&d("T(2)"), &d("T(1)")),
            Err(EngineError::NonBlockPair(_))
        ));
    }

    #[test]
    fn determinant_involution_negates_one_euler_class() {
        assert_eq!(determinant_involution(&d("SO(4)"), 0).unwrap(), vec![1, -1]);
        assert_eq!(
            determinant_involution(&d("SO(2)xSO(2)"), 0).unwrap(),
            vec![-1, 1]
        );
        assert_eq!(
            determinant_involution(&d("SO(2)xSO(2)"), 1).unwrap(),
            vec![1, -1]
        );
        assert_eq!(
            determinant_involution(&d("SO(2)xSO(4)"), 1).unwrap(),
            vec![1, 1, -1]
        );
        assert!(matches!(
            determinant_involution(&d("SO(5)"), 0),
            Err(EngineError::NoEulerClass(0))
        ));
        assert!(matches!(
            determinant_involution(&d("SO(2)xSO(3)"), 1),
            Err(EngineError::NoEulerClass(1))
        ));
    }

    #[test]
    fn acyclic_bundle_models_have_trivial_cohomology() {
        for s in ["SO(4)", "SO(5)", "U(2)", "Sp(1)", "T(2)", "SO(2)xSO(3)"] {
            let model = acyclic_bundle_model(&d(s)).unwrap();
            let report = model.cohomology(10, false).unwrap();
            let mut expected = vec![0usize; 11];
            expected[0] = 1;
            assert_eq!(report.table.dims, &expected[..], "model for {s}");
        }
    }

    #[test]
    fn sphere_models_from_the_catalog() {
        let g = d("SO(3)");
        let k = d("SO(2)");
        let homog = homogeneous_model(&g, &k).unwrap();
        assert_eq!(
            homog.cohomology(6, false).unwrap().table.dims,
            &[1, 0, 1, 0, 0, 0, 0]
        );

        let two = two_sided_model(&g, &k).unwrap();
        // base is e with its right copy eps; d(z3) = eps^2 - e^2
        let alg = two.algebra();
        let e = Element::generator_named(alg, "e").unwrap();
        let eps = Element::generator_named(alg, "eps").unwrap();
        let z3 = alg.index_of("z3").unwrap();
        let expected = eps.mul(&eps).unwrap().sub(&e.mul(&e).unwrap()).unwrap();
        assert_eq!(two.d_of_generator(z3), expected);
        assert_eq!(
            two.cohomology(8, false).unwrap().table.dims,
            &[1, 0, 2, 0, 2, 0, 2, 0, 2]
        );

        // the ring-level counterpart glues the two copies over p1 = e^2
        let glued = two_sided_pushout(&g, &k).unwrap();
        assert_eq!(
            glued.hilbert_function(8).unwrap().dims,
            &[1, 0, 2, 0, 2, 0, 2, 0, 2]
        );
    }

    #[test]
    fn right_copy_names_keep_primes() {
        assert_eq!(right_copy_name("p1"), "pi1");
        assert_eq!(right_copy_name("p'1"), "pi'1");
        assert_eq!(right_copy_name("e"), "eps");
        assert_eq!(right_copy_name("e'"), "eps'");
        assert_eq!(right_copy_name("q2"), "kappa2");
        assert_eq!(right_copy_name("c1"), "gamma1");
        assert_eq!(right_copy_name("t1"), "s1");
    }

    #[test]
    fn expressing_outside_the_invariants_fails() {
        let k = d("SO(5)");
        let tau = torus_restriction(&k).unwrap();
        let t1 = Element::generator_named(tau.target(), "t1").unwrap();
        // t1^2 alone is not symmetric in t1, t2
        let bad = t1.mul(&t1).unwrap();
        assert!(matches!(
            express_in_invariants(&k, &bad),
            Err(EngineError::NotExpressible(_))
        ));
        let sq = bad.scale(&ratio_int(3));
        let good = express_in_invariants(&k, &sq.sub(&sq).unwrap()).unwrap();
        assert!(good.is_zero());
    }
}
