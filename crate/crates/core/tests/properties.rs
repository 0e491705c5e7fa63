//! Randomized structural properties of the algebra, the presentations,
//! and the models, checked with proptest over exact rationals.

use std::sync::Arc;

use proptest::prelude::*;

use equicoh::{
    invariant_projector, presented_ring, pushout, ratio_int, two_sided_model, Element, FreeCGA,
    GeneratorDecl, GrassmannCase, GroupDescriptor, Monomial, QuotientPresentation, Series,
    SignAction, Variant,
};

/// Fixed mixed-parity algebra used for the arithmetic properties.
fn mixed_algebra() -> Arc<FreeCGA> {
    FreeCGA::new(vec![
        GeneratorDecl::new("x", 2),
        GeneratorDecl::new("u", 3),
        GeneratorDecl::new("y", 4),
        GeneratorDecl::new("v", 5),
    ])
    .unwrap()
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    (0u32..=3, 0u32..=1, 0u32..=3, 0u32..=1)
        .prop_map(|(a, b, c, d)| Monomial::from_exponents(vec![a, b, c, d]))
}

fn element_strategy() -> impl Strategy<Value = Element> {
    proptest::collection::vec((monomial_strategy(), -9i64..=9), 0..4).prop_map(|terms| {
        Element::from_terms(
            mixed_algebra(),
            terms.into_iter().map(|(m, c)| (m, ratio_int(c))),
        )
    })
}

proptest! {
    #[test]
    fn monomial_products_commute_with_the_koszul_sign(
        m1 in monomial_strategy(),
        m2 in monomial_strategy(),
        c1 in 1i64..=9,
        c2 in 1i64..=9,
    ) {
        let algebra = mixed_algebra();
        let a = Element::from_terms(algebra.clone(), [(m1.clone(), ratio_int(c1))]);
        let b = Element::from_terms(algebra.clone(), [(m2.clone(), ratio_int(c2))]);
        let forward = a.mul(&b).unwrap();
        let backward = b.mul(&a).unwrap();
        let sign_flips = m1.degree(&algebra) * m2.degree(&algebra) % 2 == 1;
        if sign_flips {
            prop_assert_eq!(forward, backward.neg());
        } else {
            prop_assert_eq!(forward, backward);
        }
    }

    #[test]
    fn multiplication_is_associative(
        a in element_strategy(),
        b in element_strategy(),
        c in element_strategy(),
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes_over_addition(
        a in element_strategy(),
        b in element_strategy(),
        c in element_strategy(),
    ) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn homogeneous_components_resum_to_the_element(e in element_strategy()) {
        let mut sum = Element::zero(e.algebra().clone());
        for (degree, component) in e.homogeneous_components() {
            prop_assert!(component.is_homogeneous());
            prop_assert_eq!(component.degree(), Some(degree));
            sum = sum.add(&component).unwrap();
        }
        prop_assert_eq!(sum, e);
    }

    #[test]
    fn monomial_basis_counts_match_the_free_series(
        degrees in proptest::collection::vec(1u32..=6, 1..=4),
    ) {
        let decls = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| GeneratorDecl::new(format!("g{i}"), d))
            .collect();
        let algebra = FreeCGA::new(decls).unwrap();
        let series = Series::free_cga(&algebra, 10);
        for d in 0..=10u32 {
            prop_assert_eq!(
                algebra.monomial_basis(d).len() as i64,
                series.coeffs()[d as usize]
            );
        }
    }

    #[test]
    fn truncated_polynomial_tables_match_the_series_oracle(
        half_degrees in proptest::collection::vec(1u32..=3, 1..=2),
        powers in proptest::collection::vec(2u32..=3, 2),
    ) {
        // powers of distinct variables always form a regular sequence
        let decls: Vec<_> = half_degrees
            .iter()
            .enumerate()
            .map(|(i, &h)| GeneratorDecl::new(format!("g{i}"), 2 * h))
            .collect();
        let gen_degrees: Vec<u32> = decls.iter().map(|g| g.degree).collect();
        let algebra = FreeCGA::new(decls).unwrap();
        let relations: Vec<Element> = (0..algebra.len())
            .map(|i| Element::generator(algebra.clone(), i).pow(powers[i % powers.len()]))
            .collect();
        let rel_degrees: Vec<u32> = relations.iter().map(|r| r.degree().unwrap()).collect();
        let table = QuotientPresentation::new("fixture", algebra, relations)
            .unwrap()
            .hilbert_function(14)
            .unwrap();
        let oracle = Series::complete_intersection(&gen_degrees, &rel_degrees, 14);
        prop_assert_eq!(table.dims, oracle.dims());
    }

    #[test]
    fn orientation_projectors_are_idempotent(
        use_left in any::<bool>(),
        use_right in any::<bool>(),
        degree in 0u32..=8,
    ) {
        let case: GrassmannCase = "n=1,k=1,a=0,b=0".parse().unwrap();
        let ring = presented_ring(&case).unwrap();
        let mut involutions = Vec::new();
        if use_left {
            involutions.push(SignAction::negation_of(ring.algebra(), &["e", "e'"]).unwrap());
        }
        if use_right {
            involutions.push(SignAction::negation_of(ring.algebra(), &["eps", "eps'"]).unwrap());
        }
        let action = SignAction::generated(ring.algebra().len(), &involutions).unwrap();
        let projector = invariant_projector(&ring, &action, degree).unwrap();
        prop_assert!(projector.is_idempotent());
    }

    #[test]
    fn pushouts_are_symmetric_in_their_arguments(
        j in 2u32..=4,
        k in 2u32..=4,
    ) {
        let left = {
            let algebra = FreeCGA::new(vec![GeneratorDecl::new("x", 4)]).unwrap();
            let x = Element::generator(algebra.clone(), 0);
            QuotientPresentation::new("left", algebra, vec![x.pow(j)]).unwrap()
        };
        let right = {
            let algebra = FreeCGA::new(vec![GeneratorDecl::new("y", 4)]).unwrap();
            let y = Element::generator(algebra.clone(), 0);
            QuotientPresentation::new("right", algebra, vec![y.pow(k)]).unwrap()
        };
        let pair_lr = vec![(
            Element::generator(left.algebra().clone(), 0),
            Element::generator(right.algebra().clone(), 0),
        )];
        let pair_rl = vec![(
            Element::generator(right.algebra().clone(), 0),
            Element::generator(left.algebra().clone(), 0),
        )];
        let forward = pushout(&left, &right, &pair_lr, "forward").unwrap();
        let backward = pushout(&right, &left, &pair_rl, "backward").unwrap();
        let ft = forward.hilbert_function(20).unwrap();
        let bt = backward.hilbert_function(20).unwrap();
        prop_assert_eq!(&ft.dims, &bt.dims);
        // identifying the generators leaves a single truncated polynomial ring
        let oracle = Series::complete_intersection(&[4], &[4 * j.min(k)], 20);
        prop_assert_eq!(ft.dims, oracle.dims());
    }

    #[test]
    fn differentials_square_to_zero(pick in 0usize..4) {
        let pairs = [
            (GroupDescriptor::SpecialOrthogonal(5),
             GroupDescriptor::Product(vec![
                 GroupDescriptor::SpecialOrthogonal(2),
                 GroupDescriptor::SpecialOrthogonal(3),
             ])),
            (GroupDescriptor::SpecialOrthogonal(4),
             GroupDescriptor::Product(vec![
                 GroupDescriptor::SpecialOrthogonal(2),
                 GroupDescriptor::SpecialOrthogonal(2),
             ])),
            (GroupDescriptor::Symplectic(2),
             GroupDescriptor::Product(vec![
                 GroupDescriptor::Symplectic(1),
                 GroupDescriptor::Symplectic(1),
             ])),
            (GroupDescriptor::Unitary(3),
             GroupDescriptor::Product(vec![
                 GroupDescriptor::Unitary(1),
                 GroupDescriptor::Unitary(2),
             ])),
        ];
        let (g, k) = &pairs[pick];
        let model = two_sided_model(g, k).unwrap();
        for i in 0..model.algebra().len() {
            let image = model.d_of_generator(i);
            prop_assert!(model.apply_d(&image).unwrap().is_zero());
        }
    }
}

#[test]
fn ordinary_tables_satisfy_poincare_duality() {
    // every closed oriented case has a palindromic rational Betti table
    for n in 1..=2u32 {
        for k in 1..=2u32 {
            for a in 0..=1u32 {
                for b in 0..=1u32 {
                    let case = GrassmannCase::new(
                        n,
                        k,
                        a,
                        b,
                        Variant::Oriented,
                        equicoh::Equivariance::Ordinary,
                    )
                    .unwrap();
                    let dim = case.manifold_dim();
                    let table = presented_ring(&case)
                        .unwrap()
                        .hilbert_function(dim)
                        .unwrap();
                    assert!(
                        table.is_palindromic(dim),
                        "table for {case} is not palindromic: {:?}",
                        table.dims
                    );
                }
            }
        }
    }
}
