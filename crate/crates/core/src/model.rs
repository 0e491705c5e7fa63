//! Pure Sullivan models: a polynomial base in even degrees, an exterior
//! fiber in odd degrees, and a differential that kills the base and sends
//! each odd generator to a homogeneous element of the even subalgebra one
//! degree up. The differential extends as a derivation with the Koszul
//! sign rule d(ab) = (da)b + (-1)^|a| a(db).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Element, FreeCGA, Monomial, Ratio};
use crate::error::EngineError;
use crate::linalg::{DegreeSlice, Echelon, TrackedEchelon};
use crate::presentation::HilbertTable;

/// A free graded-commutative algebra with a pure differential.
#[derive(Clone, Debug)]
pub struct SullivanModel {
    pub label: String,
    algebra: Arc<FreeCGA>,
    /// Differential by odd-generator index; absent entries mean zero.
    diff: BTreeMap<usize, Element>,
}

/// Exact cohomology dimensions, with optional representative cocycles.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub label: String,
    pub table: HilbertTable,
    /// Per degree, cocycles completing a basis of the boundary space;
    /// chosen greedily in canonical kernel order, so deterministic.
    pub representatives: Option<Vec<Vec<Element>>>,
}

impl SullivanModel {
    /// Builds and validates a model from (odd generator name, image) pairs.
    pub fn new(
        label: impl Into<String>,
        algebra: Arc<FreeCGA>,
        differentials: Vec<(String, Element)>,
    ) -> Result<Self, EngineError> {
        let mut diff = BTreeMap::new();
        for (name, target) in differentials {
            let i = algebra
                .index_of(&name)
                .ok_or_else(|| EngineError::UnknownGenerator(name.clone()))?;
            if !algebra.is_odd(i) {
                return Err(EngineError::InvalidModel(format!(
                    "differential assigned to even generator {name}"
                )));
            }
            if !Arc::ptr_eq(target.algebra(), &algebra) && *target.algebra() != algebra {
                return Err(EngineError::MismatchedAlgebras);
            }
            if diff.insert(i, target).is_some() {
                return Err(EngineError::InvalidModel(format!(
                    "differential assigned twice to {name}"
                )));
            }
        }
        let model = SullivanModel {
            label: label.into(),
            algebra,
            diff,
        };
        model.validate()?;
        Ok(model)
    }

    /// Purity and degree checks: every image is a homogeneous element of
    /// the even subalgebra, one degree above its generator.
    fn validate(&self) -> Result<(), EngineError> {
        for (&i, target) in &self.diff {
            let name = &self.algebra.generators()[i].name;
            if target.is_zero() {
                continue;
            }
            for (m, _) in target.terms() {
                for (j, &e) in m.exponents().iter().enumerate() {
                    if e > 0 && self.algebra.is_odd(j) {
                        return Err(EngineError::InvalidModel(format!(
                            "d({name}) must lie in the even subalgebra"
                        )));
                    }
                }
            }
            let expected = self.algebra.degree(i) + 1;
            match target.degree() {
                Some(d) if d == expected => {}
                _ => {
                    return Err(EngineError::InvalidModel(format!(
                        "d({name}) must be homogeneous of degree {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<FreeCGA> {
        &self.algebra
    }

    /// Differential of one generator; zero for even generators and for odd
    /// generators without an assigned image.
    pub fn d_of_generator(&self, i: usize) -> Element {
        self.diff
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.algebra.clone()))
    }

    fn d_of_monomial(&self, m: &Monomial, c: &Ratio) -> Element {
        let mut out = Element::zero(self.algebra.clone());
        let mut odd_before = 0u32;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !self.algebra.is_odd(i) {
                continue;
            }
            if let Some(target) = self.diff.get(&i) {
                // Koszul sign: odd factors passed before reaching z_i
                let sign = if odd_before % 2 == 0 { 1 } else { -1 };
                let rest = Element::from_monomial(
                    self.algebra.clone(),
                    m.without_one_power(i),
                    if sign < 0 { -c.clone() } else { c.clone() },
                );
                out = out
                    .add(&rest.mul(target).expect("same algebra"))
                    .expect("same algebra");
            }
            odd_before += 1;
        }
        out
    }

    /// The derivation applied to an arbitrary element.
    pub fn apply_d(&self, e: &Element) -> Result<Element, EngineError> {
        if !Arc::ptr_eq(e.algebra(), &self.algebra) && *e.algebra() != self.algebra {
            return Err(EngineError::MismatchedAlgebras);
        }
        let mut out = Element::zero(self.algebra.clone());
        for (m, c) in e.terms() {
            out = out.add(&self.d_of_monomial(m, c)).expect("same algebra");
        }
        Ok(out)
    }

    /// Exact cohomology dimensions for degrees 0..=max_degree. The slice
    /// one past the cutoff is consulted so the top-degree rank is closed.
    pub fn cohomology(
        &self,
        max_degree: u32,
        representatives: bool,
    ) -> Result<CohomologyReport, EngineError> {
        let mut ranks = vec![0usize; max_degree as usize + 1];
        let mut dims = vec![0usize; max_degree as usize + 1];
        let mut reps: Vec<Vec<Element>> = Vec::new();
        let mut prev_images: Vec<Element> = Vec::new();
        for d in 0..=max_degree {
            let slice = DegreeSlice::new(self.algebra.clone(), d);
            let target = DegreeSlice::new(self.algebra.clone(), d + 1);
            let images: Vec<Element> = slice
                .basis()
                .iter()
                .map(|m| {
                    self.d_of_monomial(m, &Ratio::from_integer(1.into()))
                })
                .collect();

            if representatives {
                let mut boundary = Echelon::new();
                for b in &prev_images {
                    if !b.is_zero() {
                        boundary.insert(slice.vector_of(b)?);
                    }
                }
                let mut tracked = TrackedEchelon::new();
                let mut kernel_vectors = Vec::new();
                for img in &images {
                    let v = target.vector_of(img)?;
                    if let Some(combo) = tracked.insert(v) {
                        kernel_vectors.push(combo);
                    }
                }
                ranks[d as usize] = tracked.rank();
                let mut completion = Vec::new();
                for v in kernel_vectors {
                    if boundary.insert(v.clone()) {
                        completion.push(slice.element_of(&v));
                    }
                }
                reps.push(completion);
            } else {
                let mut ech = Echelon::new();
                for img in &images {
                    if !img.is_zero() {
                        ech.insert(target.vector_of(img)?);
                    }
                }
                ranks[d as usize] = ech.rank();
            }

            let nullity = slice.dim() - ranks[d as usize];
            let boundary_rank = if d == 0 { 0 } else { ranks[d as usize - 1] };
            dims[d as usize] = nullity - boundary_rank;
            prev_images = images;
        }
        Ok(CohomologyReport {
            label: self.label.clone(),
            table: HilbertTable::new(dims),
            representatives: if representatives { Some(reps) } else { None },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorDecl;

    fn gen(name: &str, deg: u32) -> GeneratorDecl {
        GeneratorDecl::new(name, deg)
    }

    #[test]
    fn two_sphere_cartan_algebra() {
        // (Q[t] (x) Lambda[z3], dz3 = t^2) computes H(S^2)
        let a = FreeCGA::new(vec![gen("t", 2), gen("z3", 3)]).unwrap();
        let t = Element::generator_named(&a, "t").unwrap();
        let m = SullivanModel::new("S2", a, vec![("z3".into(), t.pow(2))]).unwrap();
        let rep = m.cohomology(6, false).unwrap();
        assert_eq!(rep.table.dims, vec![1, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn rank_one_biquotient_model() {
        // (Q[t, s] (x) Lambda[z3], dz3 = s^2 - t^2)
        let a = FreeCGA::new(vec![gen("t", 2), gen("s", 2), gen("z3", 3)]).unwrap();
        let t = Element::generator_named(&a, "t").unwrap();
        let s = Element::generator_named(&a, "s").unwrap();
        let dz = s.pow(2).sub(&t.pow(2)).unwrap();
        let m = SullivanModel::new("S2 isotropy", a, vec![("z3".into(), dz)]).unwrap();
        let rep = m.cohomology(8, false).unwrap();
        assert_eq!(rep.table.dims, vec![1, 0, 2, 0, 2, 0, 2, 0, 2]);
    }

    #[test]
    fn koszul_model_is_acyclic() {
        let a = FreeCGA::new(vec![
            gen("p1", 4),
            gen("e", 4),
            gen("z3", 3),
            gen("eta3", 3),
        ])
        .unwrap();
        let p1 = Element::generator_named(&a, "p1").unwrap();
        let e = Element::generator_named(&a, "e").unwrap();
        let m = SullivanModel::new(
            "EG",
            a,
            vec![("z3".into(), p1), ("eta3".into(), e)],
        )
        .unwrap();
        let rep = m.cohomology(12, false).unwrap();
        let mut expected = vec![0usize; 13];
        expected[0] = 1;
        assert_eq!(rep.table.dims, expected);
    }

    #[test]
    fn derivation_signs_follow_the_leibniz_rule() {
        let a = FreeCGA::new(vec![
            gen("z3", 3),
            gen("z7", 7),
            gen("x", 4),
            gen("y", 8),
        ])
        .unwrap();
        let x = Element::generator_named(&a, "x").unwrap();
        let y = Element::generator_named(&a, "y").unwrap();
        let z3 = Element::generator_named(&a, "z3").unwrap();
        let z7 = Element::generator_named(&a, "z7").unwrap();
        let m = SullivanModel::new(
            "signs",
            a,
            vec![("z3".into(), x.clone()), ("z7".into(), y.clone())],
        )
        .unwrap();
        // d(z3 z7) = x z7 - z3 y
        let prod = z3.mul(&z7).unwrap();
        let want = x
            .mul(&z7)
            .unwrap()
            .sub(&z3.mul(&y).unwrap())
            .unwrap();
        assert_eq!(m.apply_d(&prod).unwrap(), want);
        // d twice is zero
        assert!(m.apply_d(&m.apply_d(&prod).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn representatives_complete_the_boundary_space() {
        let a = FreeCGA::new(vec![gen("t", 2), gen("s", 2), gen("z3", 3)]).unwrap();
        let t = Element::generator_named(&a, "t").unwrap();
        let s = Element::generator_named(&a, "s").unwrap();
        let dz = s.pow(2).sub(&t.pow(2)).unwrap();
        let m = SullivanModel::new("reps", a, vec![("z3".into(), dz)]).unwrap();
        let rep = m.cohomology(4, true).unwrap();
        let reps = rep.representatives.as_ref().unwrap();
        assert_eq!(reps[0].len(), 1);
        assert_eq!(reps[2].len(), 2);
        assert_eq!(reps[4].len(), 2);
        // canonical order puts s = (0,1,0) before t = (1,0,0)
        assert_eq!(reps[2][0].to_string(), "s");
        assert_eq!(reps[2][1].to_string(), "t");
    }

    #[test]
    fn validation_rejects_impure_and_misgraded_differentials() {
        let a = FreeCGA::new(vec![gen("t", 2), gen("z3", 3), gen("z5", 5)]).unwrap();
        let t = Element::generator_named(&a, "t").unwrap();
        let z3 = Element::generator_named(&a, "z3").unwrap();
        // wrong degree
        assert!(SullivanModel::new("bad", a.clone(), vec![("z3".into(), t.pow(3))]).is_err());
        // image not in the even subalgebra
        let impure = z3.mul(&t).unwrap();
        assert!(SullivanModel::new("bad", a.clone(), vec![("z5".into(), impure)]).is_err());
        // assigned to an even generator
        assert!(SullivanModel::new("bad", a.clone(), vec![("t".into(), t.pow(1))]).is_err());
        // unknown generator
        assert!(matches!(
            SullivanModel::new("bad", a, vec![("zz".into(), t.pow(2))]),
            Err(EngineError::UnknownGenerator(_))
        ));
    }
}
