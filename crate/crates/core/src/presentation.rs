//! Finitely presented graded-commutative quotient rings and the exact
//! degreewise data attached to them: Hilbert tables, invariant Hilbert
//! tables under finite sign actions, and pushouts along generator pairs.
//!
//! Inhomogeneous relations are allowed; a relation cuts out the ideal
//! generated by its homogeneous components, so a relation like x - y with
//! |x| != |y| kills both components. A nonzero degree-0 component would
//! collapse the ring and is rejected instead.

use std::collections::BTreeMap;
use std::sync::Arc;


use crate::algebra::{Element, FreeCGA, Monomial, Ratio};
use crate::error::EngineError;
use crate::linalg::{DegreeSlice, Echelon, SparseVec, TrackedEchelon};

/// Dimensions of a graded vector space by degree, 0 through a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub dims: Vec<usize>,
}

impl HilbertTable {
    pub fn new(dims: Vec<usize>) -> Self {
        HilbertTable { dims }
    }

    pub fn max_degree(&self) -> u32 {
        (self.dims.len() - 1) as u32
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Checks dims[d] == dims[top - d] for all visible degrees d <= top.
    pub fn is_palindromic(&self, top: u32) -> bool {
        let top = top as usize;
        if top >= self.dims.len() {
            return false;
        }
        (0..=top).all(|d| self.dims[d] == self.dims[top - d])
    }
}

/// A free graded-commutative algebra together with relation elements.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub label: String,
    algebra: Arc<FreeCGA>,
    relations: Vec<Element>,
}

impl QuotientPresentation {
    pub fn new(
        label: impl Into<String>,
        algebra: Arc<FreeCGA>,
        relations: Vec<Element>,
    ) -> Result<Self, EngineError> {
        for r in &relations {
            if !Arc::ptr_eq(r.algebra(), &algebra) && *r.algebra() != algebra {
                return Err(EngineError::MismatchedAlgebras);
            }
        }
        Ok(QuotientPresentation {
            label: label.into(),
            algebra,
            relations,
        })
    }

    pub fn free(label: impl Into<String>, algebra: Arc<FreeCGA>) -> Self {
        QuotientPresentation {
            label: label.into(),
            algebra,
            relations: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<FreeCGA> {
        &self.algebra
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    /// Homogeneous components of all relations, sorted by degree.
    /// A nonzero degree-0 component makes the presentation inconsistent.
    pub fn relation_components(&self) -> Result<Vec<Element>, EngineError> {
        let mut out = Vec::new();
        for r in &self.relations {
            for (d, c) in r.homogeneous_components() {
                if d == 0 {
                    return Err(EngineError::InconsistentPresentation);
                }
                out.push(c);
            }
        }
        out.sort_by_key(|c| c.degree().expect("components are homogeneous"));
        Ok(out)
    }

    /// Spanning set of the degree-d slice of the relation ideal:
    /// every monomial multiple of every relation component landing in d.
    fn ideal_slice_vectors(
        &self,
        components: &[Element],
        slice: &DegreeSlice,
    ) -> Result<Vec<SparseVec>, EngineError> {
        let d = slice.degree();
        let mut out = Vec::new();
        for c in components {
            let e = c.degree().expect("components are homogeneous");
            if e > d {
                continue;
            }
            for m in self.algebra.monomial_basis(d - e).iter() {
                let factor =
                    Element::from_monomial(self.algebra.clone(), m.clone(), Ratio::from_integer(1.into()));
                let product = factor.mul(c)?;
                if product.is_zero() {
                    continue;
                }
                out.push(slice.vector_of(&product)?);
            }
        }
        Ok(out)
    }

    /// Exact dimensions of the quotient, degree by degree up to the cutoff.
    pub fn hilbert_function(&self, max_degree: u32) -> Result<HilbertTable, EngineError> {
        let components = self.relation_components()?;
        let mut dims = Vec::with_capacity(max_degree as usize + 1);
        for d in 0..=max_degree {
            let slice = DegreeSlice::new(self.algebra.clone(), d);
            let mut ech = Echelon::new();
            for v in self.ideal_slice_vectors(&components, &slice)? {
                ech.insert(v);
            }
            dims.push(slice.dim() - ech.rank());
        }
        Ok(HilbertTable::new(dims))
    }
}

/// A finite group of diagonal sign changes on the generators, acting
/// multiplicatively on monomials. Elements are +/-1 vectors indexed by
/// generator; the identity must be present and the set closed under
/// pointwise products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAction {
    signs: Vec<Vec<i8>>,
}

impl SignAction {
    pub fn trivial(n_generators: usize) -> Self {
        SignAction {
            signs: vec![vec![1; n_generators]],
        }
    }

    /// Closes a list of involutions (or any sign vectors) into a group.
    pub fn generated(n_generators: usize, involutions: &[Vec<i8>]) -> Result<Self, EngineError> {
        for v in involutions {
            if v.len() != n_generators || v.iter().any(|&s| s != 1 && s != -1) {
                return Err(EngineError::NotAGroup);
            }
        }
        let mut set: Vec<Vec<i8>> = vec![vec![1; n_generators]];
        let mut frontier: Vec<Vec<i8>> = set.clone();
        while let Some(g) = frontier.pop() {
            for h in involutions {
                let prod: Vec<i8> = g.iter().zip(h).map(|(a, b)| a * b).collect();
                if !set.contains(&prod) {
                    set.push(prod.clone());
                    frontier.push(prod);
                }
            }
        }
        set.sort();
        Ok(SignAction { signs: set })
    }

    /// Validates an explicit element list as a group of sign vectors.
    pub fn from_elements(elements: Vec<Vec<i8>>) -> Result<Self, EngineError> {
        if elements.is_empty() {
            return Err(EngineError::NotAGroup);
        }
        let n = elements[0].len();
        for v in &elements {
            if v.len() != n || v.iter().any(|&s| s != 1 && s != -1) {
                return Err(EngineError::NotAGroup);
            }
        }
        if !elements.iter().any(|v| v.iter().all(|&s| s == 1)) {
            return Err(EngineError::NotAGroup);
        }
        for a in &elements {
            for b in &elements {
                let prod: Vec<i8> = a.iter().zip(b).map(|(x, y)| x * y).collect();
                if !elements.contains(&prod) {
                    return Err(EngineError::NotAGroup);
                }
            }
        }
        let mut signs = elements;
        signs.sort();
        signs.dedup();
        Ok(SignAction { signs })
    }

    /// Sign vector negating exactly the named generators.
    pub fn negation_of(algebra: &FreeCGA, names: &[&str]) -> Result<Vec<i8>, EngineError> {
        let mut v = vec![1i8; algebra.len()];
        for name in names {
            let i = algebra
                .index_of(name)
                .ok_or_else(|| EngineError::UnknownGenerator(name.to_string()))?;
            v[i] = -1;
        }
        Ok(v)
    }

    pub fn order(&self) -> usize {
        self.signs.len()
    }

    pub fn elements(&self) -> &[Vec<i8>] {
        &self.signs
    }

    fn monomial_sign(signs: &[i8], m: &Monomial) -> i8 {
        let mut s = 1i8;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e % 2 == 1 && signs[i] == -1 {
                s = -s;
            }
        }
        s
    }

    /// Applies one group element to an element of the algebra.
    pub fn apply(&self, which: usize, e: &Element) -> Element {
        let signs = &self.signs[which];
        Element::from_terms(
            e.algebra().clone(),
            e.terms().map(|(m, c)| {
                let c = if Self::monomial_sign(signs, m) < 0 {
                    -c.clone()
                } else {
                    c.clone()
                };
                (m.clone(), c)
            }),
        )
    }
}

/// The group-averaged projector onto invariants of one quotient slice,
/// expressed on the canonical quotient basis (the non-pivot monomials of
/// the ideal slice).
pub struct InvariantProjector {
    quotient_basis: Vec<Monomial>,
    columns: Vec<SparseVec>,
}

impl InvariantProjector {
    pub fn quotient_dim(&self) -> usize {
        self.quotient_basis.len()
    }

    pub fn quotient_basis(&self) -> &[Monomial] {
        &self.quotient_basis
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for c in &self.columns {
            ech.insert(c.clone());
        }
        ech.rank()
    }

    /// Projector property: averaging an action over its group squares to
    /// itself.
    pub fn is_idempotent(&self) -> bool {
        let n = self.columns.len();
        for j in 0..n {
            // (P*P) column j = P applied to column j
            let mut out = SparseVec::zero();
            for (i, c) in self.columns[j].entries() {
                out.add_scaled(&self.columns[*i], c);
            }
            if out != self.columns[j] {
                return false;
            }
        }
        true
    }
}

/// Builds the averaging projector of a sign action on one quotient slice.
///
/// Preconditions checked here: the sign vectors form a group, and every
/// relation component is carried into the ideal by every group element.
pub fn invariant_projector(
    presentation: &QuotientPresentation,
    action: &SignAction,
    degree: u32,
) -> Result<InvariantProjector, EngineError> {
    let algebra = presentation.algebra();
    SignAction::from_elements(action.elements().to_vec())?;
    let components = presentation.relation_components()?;

    // the action must map the ideal into itself, checked per component degree
    let mut degrees: Vec<u32> = components
        .iter()
        .map(|c| c.degree().expect("homogeneous"))
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    for &e in &degrees {
        let slice = DegreeSlice::new(algebra.clone(), e);
        let mut ech = Echelon::new();
        for v in presentation.ideal_slice_vectors(&components, &slice)? {
            ech.insert(v);
        }
        for c in components.iter().filter(|c| c.degree() == Some(e)) {
            for which in 0..action.order() {
                let moved = action.apply(which, c);
                if !ech.contains(&slice.vector_of(&moved)?) {
                    return Err(EngineError::ActionDoesNotDescend);
                }
            }
        }
    }

    let slice = DegreeSlice::new(algebra.clone(), degree);
    let mut ideal = TrackedEchelon::new();
    for v in presentation.ideal_slice_vectors(&components, &slice)? {
        ideal.insert(v);
    }
    let pivot_cols = ideal.pivot_columns();
    let quotient_cols: Vec<usize> = (0..slice.dim())
        .filter(|i| pivot_cols.binary_search(i).is_err())
        .collect();
    let quotient_basis: Vec<Monomial> = quotient_cols
        .iter()
        .map(|&i| slice.basis()[i].clone())
        .collect();
    let col_index: BTreeMap<usize, usize> = quotient_cols
        .iter()
        .enumerate()
        .map(|(q, &i)| (i, q))
        .collect();

    let order = Ratio::from_integer((action.order() as i64).into());
    let mut columns = Vec::with_capacity(quotient_basis.len());
    for m in &quotient_basis {
        let mut avg = SparseVec::zero();
        for which in 0..action.order() {
            let moved = action.apply(
                which,
                &Element::from_monomial(algebra.clone(), m.clone(), Ratio::from_integer(1.into())),
            );
            let reduced = ideal.normal_form(&slice.vector_of(&moved)?);
            let projected = SparseVec::from_pairs(reduced.entries().iter().map(|(i, c)| {
                (
                    *col_index.get(i).expect("normal form lives off the pivots"),
                    c.clone(),
                )
            }));
            avg.add_scaled(&projected, &Ratio::from_integer(1.into()));
        }
        avg.scale(&order.recip());
        columns.push(avg);
    }
    Ok(InvariantProjector {
        quotient_basis,
        columns,
    })
}

/// Dimensions of the invariant subspace of each quotient slice, computed
/// by averaging the action over the group.
pub fn invariant_hilbert_function(
    presentation: &QuotientPresentation,
    action: &SignAction,
    max_degree: u32,
) -> Result<HilbertTable, EngineError> {
    let mut dims = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree {
        let p = invariant_projector(presentation, action, d)?;
        dims.push(p.rank());
    }
    Ok(HilbertTable::new(dims))
}

/// Glues two presentations along pairs of homogeneous elements of equal
/// degree: the result lives on the disjoint union of the generators and
/// identifies each left element with its right partner.
pub fn pushout(
    left: &QuotientPresentation,
    right: &QuotientPresentation,
    pairs: &[(Element, Element)],
    label: impl Into<String>,
) -> Result<QuotientPresentation, EngineError> {
    let la = left.algebra();
    let ra = right.algebra();
    let mut gens = la.generators().to_vec();
    for g in ra.generators() {
        if la.index_of(&g.name).is_some() {
            return Err(EngineError::DuplicateGenerator(g.name.clone()));
        }
        gens.push(g.clone());
    }
    let union = FreeCGA::new(gens)?;
    let offset = la.len();

    let mut relations = Vec::new();
    for r in left.relations() {
        relations.push(r.embedded(&union, 0));
    }
    for r in right.relations() {
        relations.push(r.embedded(&union, offset));
    }
    for (a, b) in pairs {
        if *a.algebra() != *la || *b.algebra() != *ra {
            return Err(EngineError::MismatchedAlgebras);
        }
        if !a.is_homogeneous() || !b.is_homogeneous() {
            return Err(EngineError::NonHomogeneous("pushout pair".into()));
        }
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) if da != db => {
                return Err(EngineError::DegreeMismatch {
                    expected: da,
                    found: db,
                });
            }
            _ => {}
        }
        relations.push(a.embedded(&union, 0).sub(&b.embedded(&union, offset))?);
    }
    QuotientPresentation::new(label, union, relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio_int, GeneratorDecl};

    fn gen(name: &str, deg: u32) -> GeneratorDecl {
        GeneratorDecl::new(name, deg)
    }

    #[test]
    fn free_polynomial_table() {
        let a = FreeCGA::new(vec![gen("p1", 4)]).unwrap();
        let p = QuotientPresentation::free("Q[p1]", a);
        let t = p.hilbert_function(8).unwrap();
        assert_eq!(t.dims, vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn exterior_generator_table() {
        let a = FreeCGA::new(vec![gen("z3", 3)]).unwrap();
        let p = QuotientPresentation::free("L[z3]", a);
        let t = p.hilbert_function(3).unwrap();
        assert_eq!(t.dims, vec![1, 0, 0, 1]);
    }

    #[test]
    fn two_sphere_product_table() {
        // Q[e, e']/(ee', e^2 + e'^2), both generators in degree 2
        let a = FreeCGA::new(vec![gen("e", 2), gen("e'", 2)]).unwrap();
        let e = Element::generator_named(&a, "e").unwrap();
        let f = Element::generator_named(&a, "e'").unwrap();
        let rels = vec![
            e.mul(&f).unwrap(),
            e.pow(2).add(&f.pow(2)).unwrap(),
        ];
        let p = QuotientPresentation::new("S2xS2", a, rels).unwrap();
        let t = p.hilbert_function(6).unwrap();
        assert_eq!(t.dims, vec![1, 0, 2, 0, 1, 0, 0]);
    }

    #[test]
    fn inhomogeneous_relation_splits_into_components() {
        let a = FreeCGA::new(vec![gen("x", 2), gen("y", 4)]).unwrap();
        let x = Element::generator_named(&a, "x").unwrap();
        let y = Element::generator_named(&a, "y").unwrap();
        let p = QuotientPresentation::new("split", a, vec![x.add(&y).unwrap()]).unwrap();
        let t = p.hilbert_function(4).unwrap();
        assert_eq!(t.dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn degree_zero_component_is_inconsistent() {
        let a = FreeCGA::new(vec![gen("x", 2)]).unwrap();
        let x = Element::generator_named(&a, "x").unwrap();
        let r = x.add(&Element::scalar(x.algebra().clone(), ratio_int(1))).unwrap();
        let p = QuotientPresentation::new("bad", a, vec![r]).unwrap();
        assert!(matches!(
            p.hilbert_function(4),
            Err(EngineError::InconsistentPresentation)
        ));
    }

    #[test]
    fn truncated_polynomial_invariants() {
        // Q[e]/(e^4) with e -> -e leaves 1 and e^2
        let a = FreeCGA::new(vec![gen("e", 2)]).unwrap();
        let e = Element::generator_named(&a, "e").unwrap();
        let p = QuotientPresentation::new("trunc", a.clone(), vec![e.pow(4)]).unwrap();
        let flip = SignAction::negation_of(&a, &["e"]).unwrap();
        let action = SignAction::generated(a.len(), &[flip]).unwrap();
        let t = invariant_hilbert_function(&p, &action, 6).unwrap();
        assert_eq!(t.dims, vec![1, 0, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn joint_flip_invariants_match_presented_subring() {
        // invariants of Q[e, e'] under (e, e') -> (-e, -e') are generated
        // by e^2, ee', e'^2 with one relation (ee')^2 = e^2 * e'^2
        let free = FreeCGA::new(vec![gen("e", 2), gen("e'", 2)]).unwrap();
        let p = QuotientPresentation::free("Q[e,e']", free.clone());
        let flip = SignAction::negation_of(&free, &["e", "e'"]).unwrap();
        let action = SignAction::generated(free.len(), &[flip]).unwrap();
        let inv = invariant_hilbert_function(&p, &action, 12).unwrap();

        let sub = FreeCGA::new(vec![gen("a", 4), gen("b", 4), gen("c", 4)]).unwrap();
        let a = Element::generator_named(&sub, "a").unwrap();
        let b = Element::generator_named(&sub, "b").unwrap();
        let c = Element::generator_named(&sub, "c").unwrap();
        let rel = b.pow(2).sub(&a.mul(&c).unwrap()).unwrap();
        let q = QuotientPresentation::new("subring", sub, vec![rel]).unwrap();
        let presented = q.hilbert_function(12).unwrap();
        assert_eq!(inv, presented);
    }

    #[test]
    fn action_must_preserve_the_ideal() {
        let a = FreeCGA::new(vec![gen("e", 2), gen("f", 2)]).unwrap();
        let e = Element::generator_named(&a, "e").unwrap();
        let f = Element::generator_named(&a, "f").unwrap();
        let p = QuotientPresentation::new("line", a.clone(), vec![e.add(&f).unwrap()]).unwrap();
        let flip = SignAction::negation_of(&a, &["e"]).unwrap();
        let action = SignAction::generated(a.len(), &[flip]).unwrap();
        assert!(matches!(
            invariant_hilbert_function(&p, &action, 2),
            Err(EngineError::ActionDoesNotDescend)
        ));
    }

    #[test]
    fn sign_sets_must_be_groups() {
        // missing identity
        assert!(matches!(
            SignAction::from_elements(vec![vec![-1, 1]]),
            Err(EngineError::NotAGroup)
        ));
        // not closed: {id, a, b} without ab
        assert!(matches!(
            SignAction::from_elements(vec![vec![1, 1], vec![-1, 1], vec![1, -1]]),
            Err(EngineError::NotAGroup)
        ));
    }

    #[test]
    fn pushout_identifies_paired_generators() {
        let la = FreeCGA::new(vec![gen("x", 4)]).unwrap();
        let ra = FreeCGA::new(vec![gen("y", 4)]).unwrap();
        let left = QuotientPresentation::free("Q[x]", la.clone());
        let right = QuotientPresentation::free("Q[y]", ra.clone());
        let x = Element::generator_named(&la, "x").unwrap();
        let y = Element::generator_named(&ra, "y").unwrap();
        let p = pushout(&left, &right, &[(x, y)], "glued").unwrap();
        let t = p.hilbert_function(8).unwrap();
        assert_eq!(t.dims, vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn pushout_of_euler_rings_over_so4() {
        // two copies of Q[e, e'] glued over the degree-4 and degree-8
        // classes e^2 + e'^2, e^2 e'^2 and the product ee'
        let la = FreeCGA::new(vec![gen("e", 2), gen("e'", 2)]).unwrap();
        let ra = FreeCGA::new(vec![gen("f", 2), gen("f'", 2)]).unwrap();
        let e = Element::generator_named(&la, "e").unwrap();
        let e2 = Element::generator_named(&la, "e'").unwrap();
        let f = Element::generator_named(&ra, "f").unwrap();
        let f2 = Element::generator_named(&ra, "f'").unwrap();
        let pairs = vec![
            (
                e.pow(2).add(&e2.pow(2)).unwrap(),
                f.pow(2).add(&f2.pow(2)).unwrap(),
            ),
            (
                e.pow(2).mul(&e2.pow(2)).unwrap(),
                f.pow(2).mul(&f2.pow(2)).unwrap(),
            ),
            (e.mul(&e2).unwrap(), f.mul(&f2).unwrap()),
        ];
        let left = QuotientPresentation::free("L", la);
        let right = QuotientPresentation::free("R", ra);
        let p = pushout(&left, &right, &pairs, "torus glue").unwrap();
        let t = p.hilbert_function(6).unwrap();
        assert_eq!(t.dims, vec![1, 0, 4, 0, 8, 0, 12]);
    }

    #[test]
    fn pushout_rejects_degree_mismatch_and_collisions() {
        let la = FreeCGA::new(vec![gen("x", 4)]).unwrap();
        let ra = FreeCGA::new(vec![gen("y", 6)]).unwrap();
        let x = Element::generator_named(&la, "x").unwrap();
        let y = Element::generator_named(&ra, "y").unwrap();
        let left = QuotientPresentation::free("L", la.clone());
        let right = QuotientPresentation::free("R", ra);
        assert!(matches!(
            pushout(&left, &right, &[(x.clone(), y)], "bad"),
            Err(EngineError::DegreeMismatch { .. })
        ));
        let ra2 = FreeCGA::new(vec![gen("x", 4)]).unwrap();
        let right2 = QuotientPresentation::free("R", ra2);
        assert!(matches!(
            pushout(&left, &right2, &[], "bad"),
            Err(EngineError::DuplicateGenerator(_))
        ));
    }
}
