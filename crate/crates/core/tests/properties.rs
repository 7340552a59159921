use jeth::hilbert::{self, HilbertSeries};
use jeth::jetcomplex::{compare_facets, enumerate_facets, shelling_order, FacetOrdering};
use jeth::{BigInt, JetShape, Limits, Poly};
use proptest::prelude::*;

fn small_shape() -> impl Strategy<Value = JetShape> {
    (3i64..=4, 0i64..=1).prop_map(|(m, extra)| JetShape::new(m, m + extra).unwrap())
}

fn formula_shape() -> impl Strategy<Value = JetShape> {
    (3i64..=12, 0i64..=6).prop_map(|(m, extra)| JetShape::new(m, m + extra).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facets_are_pure_and_distinct(shape in small_shape()) {
        let facets = enumerate_facets(&shape, Limits::DEFAULT_MAX_FACETS).unwrap();
        let vertex_sets: std::collections::HashSet<_> = facets.iter().map(|f| f.vertices()).collect();
        prop_assert_eq!(vertex_sets.len(), facets.len());
        for f in &facets {
            prop_assert_eq!(f.vertex_count() as u64, shape.dimension());
        }
    }

    #[test]
    fn order_triples(shape in small_shape(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let facets = shelling_order(&shape, Limits::DEFAULT_MAX_FACETS).unwrap();
        let (p, q, r) = (a.get(&facets), b.get(&facets), c.get(&facets));
        if compare_facets(p, q) == FacetOrdering::Less && compare_facets(q, r) == FacetOrdering::Less {
            prop_assert_eq!(compare_facets(p, r), FacetOrdering::Less);
        }
        // A linear extension never places a smaller facet later.
        let (ip, iq) = (a.index(facets.len()), b.index(facets.len()));
        if compare_facets(p, q) == FacetOrdering::Less {
            prop_assert!(ip < iq);
        }
    }

    #[test]
    fn closed_routes_agree(shape in formula_shape()) {
        let h = hilbert::h_closed(&shape);
        prop_assert_eq!(&hilbert::h_paths(&shape).unwrap(), &h);
        prop_assert_eq!(&hilbert::h_lemma_sums(&shape).unwrap(), &h);
        prop_assert_eq!(h.degree() as i64, 2 * (shape.m() - 1));
        prop_assert!(h.coeffs().iter().all(|c| *c >= BigInt::from(0)));
    }

    #[test]
    fn jet_series_is_square_of_classical(shape in formula_shape()) {
        let jet = hilbert::jet_hilbert_series(&shape);
        let classical = hilbert::classical_series(2, shape.m(), shape.n()).unwrap();
        prop_assert!(jet.eq_as_rational(&classical.square()));
        prop_assert_eq!(jet.pole_order(), 2 * classical.pole_order());
    }

    #[test]
    fn rational_equality_ignores_common_factors(c in prop::collection::vec(-5i64..=5, 1..6), d in 0u64..6, extra in 0u64..4) {
        let num = Poly::from_i64s(&c);
        let a = HilbertSeries::new(num.clone(), d);
        let b = HilbertSeries::new(&num * &Poly::one_minus_z_pow(extra), d + extra);
        prop_assert!(a.eq_as_rational(&b));
        prop_assert!(b.eq_as_rational(&a));
    }
}
