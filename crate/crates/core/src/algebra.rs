//! Free graded-commutative algebras over Q with named generators.
//!
//! Generators of odd degree square to zero and anticommute; generators of
//! even degree are polynomial. A monomial is stored as an exponent vector
//! in declaration order, which is its normal form; the Koszul sign picked
//! up while normalizing a product is folded into the coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::EngineError;

/// Exact rational scalar used throughout the crate.
pub type Ratio = BigRational;

/// Convenience constructor for an integer scalar.
pub fn ratio_int(n: i64) -> Ratio {
    Ratio::from_integer(n.into())
}

/// A named generator with a positive integer degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: String,
    pub degree: u32,
}

impl GeneratorDecl {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        GeneratorDecl {
            name: name.into(),
            degree,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Free graded-commutative algebra on an ordered list of generators.
///
/// The declaration order fixes the normal form of monomials, the canonical
/// basis order of every degree slice, and therefore every table and report
/// derived from them. Instances are immutable; share them through `Arc`.
pub struct FreeCGA {
    generators: Vec<GeneratorDecl>,
    index: BTreeMap<String, usize>,
    basis_cache: RwLock<BTreeMap<u32, Arc<[Monomial]>>>,
}

impl PartialEq for FreeCGA {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for FreeCGA {}

impl fmt::Debug for FreeCGA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FreeCGA")
            .field("generators", &self.generators)
            .finish()
    }
}

impl FreeCGA {
    /// Builds the algebra, rejecting zero degrees and duplicate names.
    pub fn new(generators: Vec<GeneratorDecl>) -> Result<Arc<Self>, EngineError> {
        let mut index = BTreeMap::new();
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(EngineError::NonPositiveDegree(g.name.clone()));
            }
            if g.name.is_empty() {
                return Err(EngineError::InvalidInput("empty generator name".into()));
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(EngineError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(FreeCGA {
            generators,
            index,
            basis_cache: RwLock::new(BTreeMap::new()),
        }))
    }

    pub fn generators(&self) -> &[GeneratorDecl] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.generators[i].degree
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.generators[i].is_odd()
    }

    /// True when every generator has even degree.
    pub fn is_evenly_graded(&self) -> bool {
        self.generators.iter().all(|g| !g.is_odd())
    }

    /// All normal-form monomials of exactly the given degree, in canonical
    /// (lexicographic exponent-vector) order. Results are cached per degree.
    pub fn monomial_basis(&self, degree: u32) -> Arc<[Monomial]> {
        if let Some(hit) = self.basis_cache.read().unwrap().get(&degree) {
            return hit.clone();
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.generators.len()];
        self.enumerate(0, degree, &mut exps, &mut out);
        let basis: Arc<[Monomial]> = out.into();
        self.basis_cache
            .write()
            .unwrap()
            .entry(degree)
            .or_insert_with(|| basis.clone())
            .clone()
    }

    fn enumerate(&self, i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.generators.len() {
            if remaining == 0 {
                out.push(Monomial { exps: exps.clone() });
            }
            return;
        }
        let d = self.generators[i].degree;
        let cap = if self.generators[i].is_odd() {
            1.min(remaining / d)
        } else {
            remaining / d
        };
        for e in 0..=cap {
            exps[i] = e;
            self.enumerate(i + 1, remaining - e * d, exps, out);
        }
        exps[i] = 0;
    }
}

/// Normal-form monomial: exponent vector in generator declaration order.
/// Odd generators carry exponent 0 or 1. Ordering is lexicographic on the
/// exponent vector, which is the canonical basis order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n_generators: usize) -> Self {
        Monomial {
            exps: vec![0; n_generators],
        }
    }

    pub fn generator(n_generators: usize, i: usize) -> Self {
        let mut exps = vec![0; n_generators];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, algebra: &FreeCGA) -> u32 {
        self.exps
            .iter()
            .zip(algebra.generators())
            .map(|(&e, g)| e * g.degree)
            .sum()
    }

    /// Product with the Koszul sign of normalization; `None` when an odd
    /// generator would be squared. The sign counts the transpositions of
    /// odd factors needed to interleave `other` into `self`.
    pub fn mul(&self, other: &Self, algebra: &FreeCGA) -> Option<(Self, i8)> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let n = self.exps.len();
        // suffix[j] = number of odd generators with index >= j present in self
        let mut suffix = vec![0u32; n + 1];
        for i in (0..n).rev() {
            let here = if algebra.is_odd(i) && self.exps[i] > 0 { 1 } else { 0 };
            suffix[i] = suffix[i + 1] + here;
        }
        let mut exps = self.exps.clone();
        let mut swaps = 0u32;
        for j in 0..n {
            if other.exps[j] == 0 {
                continue;
            }
            if algebra.is_odd(j) {
                if self.exps[j] > 0 {
                    return None;
                }
                swaps += suffix[j + 1];
            }
            exps[j] += other.exps[j];
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((Monomial { exps }, sign))
    }

    /// The monomial with one power of generator `i` removed.
    pub fn without_one_power(&self, i: usize) -> Self {
        debug_assert!(self.exps[i] > 0);
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Monomial { exps }
    }

    pub fn display<'a>(&'a self, algebra: &'a FreeCGA) -> MonomialDisplay<'a> {
        MonomialDisplay {
            monomial: self,
            algebra,
        }
    }
}

pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    algebra: &'a FreeCGA,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.algebra.generators()[i].name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse rational linear combination of normal-form monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    algebra: Arc<FreeCGA>,
    terms: BTreeMap<Monomial, Ratio>,
}

impl Element {
    pub fn zero(algebra: Arc<FreeCGA>) -> Self {
        Element {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: Arc<FreeCGA>) -> Self {
        Element::scalar(algebra, Ratio::one())
    }

    pub fn scalar(algebra: Arc<FreeCGA>, c: Ratio) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(algebra.len()), c);
        }
        Element { algebra, terms }
    }

    pub fn generator(algebra: Arc<FreeCGA>, i: usize) -> Self {
        let mono = Monomial::generator(algebra.len(), i);
        Element::from_monomial(algebra, mono, Ratio::one())
    }

    pub fn generator_named(algebra: &Arc<FreeCGA>, name: &str) -> Result<Self, EngineError> {
        let i = algebra
            .index_of(name)
            .ok_or_else(|| EngineError::UnknownGenerator(name.to_string()))?;
        Ok(Element::generator(algebra.clone(), i))
    }

    pub fn from_monomial(algebra: Arc<FreeCGA>, mono: Monomial, c: Ratio) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Element { algebra, terms }
    }

    pub fn from_terms<I>(algebra: Arc<FreeCGA>, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Ratio)>,
    {
        let mut out = Element::zero(algebra);
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }

    pub fn algebra(&self) -> &Arc<FreeCGA> {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Ratio)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: Monomial, c: Ratio) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    pub fn add(&self, other: &Self) -> Result<Self, EngineError> {
        if !self.same_algebra(other) {
            return Err(EngineError::MismatchedAlgebras);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, EngineError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Element {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Ratio) -> Self {
        if c.is_zero() {
            return Element::zero(self.algebra.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k * c))
            .collect();
        Element {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    /// Product with Koszul signs; errors when the algebras differ.
    pub fn mul(&self, other: &Self) -> Result<Self, EngineError> {
        if !self.same_algebra(other) {
            return Err(EngineError::MismatchedAlgebras);
        }
        let mut out = Element::zero(self.algebra.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, sign)) = ma.mul(mb, &self.algebra) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Element::one(self.algebra.clone());
        for _ in 0..e {
            out = out.mul(self).expect("same algebra");
        }
        out
    }

    /// True when all terms share one degree; the zero element qualifies.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree(&self.algebra));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree(&self.algebra));
        let d0 = degs.next()?;
        if degs.all(|d| d == d0) {
            Some(d0)
        } else {
            None
        }
    }

    /// Splits into homogeneous parts indexed by their exact degree.
    /// The zero element yields an empty map.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Element> {
        let mut out: BTreeMap<u32, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.degree(&self.algebra);
            out.entry(d)
                .or_insert_with(|| Element::zero(self.algebra.clone()))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Re-indexes into a larger algebra whose generators `shift..shift+n`
    /// are the generators of this one, in order. Relative order of odd
    /// factors is preserved, so no signs arise.
    pub fn embedded(&self, target: &Arc<FreeCGA>, shift: usize) -> Element {
        debug_assert!(shift + self.algebra.len() <= target.len());
        debug_assert!(self
            .algebra
            .generators()
            .iter()
            .enumerate()
            .all(|(i, g)| g.degree == target.degree(shift + i)));
        Element::from_terms(
            target.clone(),
            self.terms.iter().map(|(m, c)| {
                let mut exps = vec![0u32; target.len()];
                for (i, &x) in m.exponents().iter().enumerate() {
                    exps[i + shift] = x;
                }
                (Monomial::from_exponents(exps), c.clone())
            }),
        )
    }

    /// Substitutes each generator by the corresponding image element.
    /// Only evenly graded sources are supported, so no signs arise.
    pub fn substitute(
        &self,
        target: Arc<FreeCGA>,
        images: &[Element],
    ) -> Result<Element, EngineError> {
        assert_eq!(images.len(), self.algebra.len(), "one image per generator");
        let mut out = Element::zero(target.clone());
        for (m, c) in &self.terms {
            let mut acc = Element::scalar(target.clone(), c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if self.algebra.is_odd(i) {
                    return Err(EngineError::OddSubstitution(
                        self.algebra.generators()[i].name.clone(),
                    ));
                }
                acc = acc.mul(&images[i].pow(e))?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.algebra))?;
            } else {
                write!(f, "{}*{}", abs, m.display(&self.algebra))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Arc<FreeCGA> {
        FreeCGA::new(vec![
            GeneratorDecl::new("z3", 3),
            GeneratorDecl::new("z7", 7),
            GeneratorDecl::new("x", 2),
        ])
        .unwrap()
    }

    #[test]
    fn rejects_zero_degree_and_duplicates() {
        assert!(FreeCGA::new(vec![GeneratorDecl::new("a", 0)]).is_err());
        assert!(FreeCGA::new(vec![
            GeneratorDecl::new("a", 2),
            GeneratorDecl::new("a", 4),
        ])
        .is_err());
    }

    #[test]
    fn odd_generators_anticommute() {
        let a = sample();
        let z3 = Element::generator_named(&a, "z3").unwrap();
        let z7 = Element::generator_named(&a, "z7").unwrap();
        let lhs = z7.mul(&z3).unwrap();
        let rhs = z3.mul(&z7).unwrap().neg();
        assert_eq!(lhs, rhs, "z7*z3 = -z3*z7");
        assert!(z3.mul(&z3).unwrap().is_zero(), "odd squares vanish");
    }

    #[test]
    fn even_generators_commute_with_everything() {
        let a = sample();
        let x = Element::generator_named(&a, "x").unwrap();
        let z3 = Element::generator_named(&a, "z3").unwrap();
        assert_eq!(x.mul(&z3).unwrap(), z3.mul(&x).unwrap());
    }

    #[test]
    fn monomial_basis_counts_and_order() {
        // Q[x2] (x) Lambda[z3, z7]: degree 10 monomials are
        // x^5, z3*z7, and nothing else.
        let a = sample();
        let b = a.monomial_basis(10);
        assert_eq!(b.len(), 2);
        // lexicographic on exponent vectors (z3, z7, x)
        assert_eq!(b[0].exponents(), &[0, 0, 5]);
        assert_eq!(b[1].exponents(), &[1, 1, 0]);
        assert_eq!(a.monomial_basis(1).len(), 0);
        assert_eq!(a.monomial_basis(0).len(), 1);
    }

    #[test]
    fn zero_element_has_empty_component_set() {
        let a = sample();
        let z = Element::zero(a);
        assert!(z.homogeneous_components().is_empty());
        assert!(z.is_homogeneous());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn components_partition_and_resum() {
        let a = sample();
        let x = Element::generator_named(&a, "x").unwrap();
        let z3 = Element::generator_named(&a, "z3").unwrap();
        let e = x.pow(3).add(&z3.mul(&x).unwrap()).unwrap();
        let comps = e.homogeneous_components();
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![5, 6]);
        let mut sum = Element::zero(a);
        for c in comps.values() {
            sum = sum.add(c).unwrap();
        }
        assert_eq!(sum, e);
    }

    #[test]
    fn mismatched_algebras_error() {
        let a = sample();
        let b = FreeCGA::new(vec![GeneratorDecl::new("y", 2)]).unwrap();
        let ea = Element::generator_named(&a, "x").unwrap();
        let eb = Element::generator_named(&b, "y").unwrap();
        assert!(matches!(
            ea.mul(&eb),
            Err(EngineError::MismatchedAlgebras)
        ));
    }

    #[test]
    fn display_is_canonical() {
        let a = sample();
        let x = Element::generator_named(&a, "x").unwrap();
        let z3 = Element::generator_named(&a, "z3").unwrap();
        let e = x.pow(2).scale(&ratio_int(-3)).add(&z3).unwrap();
        // canonical order is lexicographic on exponent vectors: x^2 before z3
        assert_eq!(e.to_string(), "-3*x^2 + z3");
    }
}
