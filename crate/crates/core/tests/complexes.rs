use polyprod::{Face, Field, SimplicialComplex};
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=6).prop_flat_map(|m| {
        prop::collection::vec(0u64..1 << m, 0..6).prop_map(move |gens| {
            SimplicialComplex::from_faces(m, Face::full(m), gens.into_iter().map(Face::from_bits))
        })
    })
}

proptest! {
    #[test]
    fn closed_under_subsets(k in complex()) {
        for f in k.faces() {
            for g in f.subsets() {
                prop_assert!(k.contains(g));
            }
        }
    }

    #[test]
    fn trivial_link_and_full_subcomplex(k in complex()) {
        prop_assert_eq!(k.link(Face::EMPTY).unwrap(), k.clone());
        prop_assert_eq!(k.full_subcomplex(k.vertex_set()).unwrap(), k);
    }

    #[test]
    fn link_matches_definition(k in complex()) {
        for sigma in k.faces() {
            let lk = k.link(sigma).unwrap();
            for tau in k.vertex_set().subsets() {
                let expected = tau.is_disjoint(sigma) && k.contains(tau.union(sigma));
                prop_assert_eq!(lk.contains(tau), expected);
            }
        }
    }

    #[test]
    fn filtration_is_monotone(k in complex()) {
        let n = (1usize << k.m()) - 1;
        let mut prev = k.filtration(0).unwrap();
        prop_assert_eq!(prev.num_faces(), 1);
        for t in 1..=n {
            let next = k.filtration(t).unwrap();
            prop_assert!(prev.faces().all(|f| next.contains(f)));
            prop_assert!(next.faces().all(|f| f.subsets().all(|g| next.contains(g))));
            prev = next;
        }
        prop_assert_eq!(prev, k.clone());
        prop_assert!(k.filtration(n + 1).is_err());
    }

    #[test]
    fn length_lex_order_is_total(k in complex()) {
        let order = k.length_lex_order();
        let faces = order.as_slice();
        prop_assert_eq!(faces.len(), k.num_faces());
        prop_assert_eq!(faces[0], Face::EMPTY);
        prop_assert!(faces.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cones_are_acyclic(k in complex().prop_filter("room for a cone vertex", |k| k.m() < 6)) {
        for field in [Field::Rational, Field::Prime(2)] {
            prop_assert!(k.cone().unwrap().reduced_betti(field).unwrap().is_zero());
        }
    }

    #[test]
    fn euler_characteristic_from_faces(k in complex()) {
        let faces: i64 = k.faces().filter(|f| !f.is_empty()).map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum();
        prop_assert_eq!(k.reduced_betti(Field::Rational).unwrap().euler_characteristic(), faces - 1);
    }
}
