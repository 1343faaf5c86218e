use braidinv::algebra::{BigRational, HalfLaurent, RationalMatrix, SparseEchelon};
use braidinv::braid::{apply_markov, closure_components, permutation, BraidWord, MarkovMove};
use braidinv::rmatrix::{builtin_jones, normalized_trace_invariant, represent, rescale, trace_invariant, trace_invariant_rescaled};
use braidinv::skein::{evaluate, SkeinSystem};
use braidinv::vassiliev::{expand_invariant, v2, ChordDiagram};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec((-8i64..=8, -5i64..=5), 0..5).prop_map(|t| HalfLaurent::from_int_terms(&t))
}

fn signed_letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    let k = n as i64 - 1;
    prop::collection::vec((1..=k, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..=max_len)
}

/// Ordinary braid words on 2..=max_n strands.
fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| signed_letters(n, max_len).prop_map(move |l| BraidWord::from_signed(n, &l).unwrap()))
}

/// Words with at least one letter.
fn nonempty_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(max_n, max_len).prop_filter("nonempty", |w| !w.is_empty())
}

fn knot_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(max_n, max_len).prop_filter("knot closure", |w| closure_components(w) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_text_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<HalfLaurent>().unwrap(), a);
    }

    #[test]
    fn expansion_is_a_ring_homomorphism(a in poly(), b in poly(), n in 0usize..=8) {
        prop_assert_eq!((&a * &b).expand(n), &a.expand(n) * &b.expand(n));
        prop_assert_eq!((&a + &b).expand(n), &a.expand(n) + &b.expand(n));
    }

    #[test]
    fn eval_one_is_constant_term_of_expansion(a in poly()) {
        prop_assert_eq!(a.eval_one(), a.expand(0).coeff(0));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn nullity_survives_row_operations(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6),
        c in -4i64..=4,
    ) {
        let m = RationalMatrix::from_i64_rows(&rows);
        let mut shifted = rows.clone();
        if shifted.len() > 1 {
            let first = shifted[0].clone();
            for (x, y) in shifted[1].iter_mut().zip(first) {
                *x += c * y;
            }
        }
        prop_assert_eq!(m.nullity(), RationalMatrix::from_i64_rows(&shifted).nullity());
        let mut sparse = SparseEchelon::new(5);
        for r in &rows {
            sparse.insert(r.iter().enumerate().map(|(k, &v)| (k, BigRational::from_integer(v.into()))));
        }
        prop_assert_eq!(sparse.nullity(), m.nullity());
    }

    #[test]
    fn braid_text_round_trip(w in word(5, 10)) {
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn free_reduction_keeps_closure_data(w in word(4, 10)) {
        let r = w.free_reduce();
        prop_assert_eq!(permutation(&r), permutation(&w));
        prop_assert_eq!(closure_components(&r), closure_components(&w));
        prop_assert_eq!(evaluate(&r, &SkeinSystem::jones()).unwrap(), evaluate(&w, &SkeinSystem::jones()).unwrap());
    }

    #[test]
    fn switching_twice_is_identity(w in nonempty_word(4, 8), p in any::<prop::sample::Index>()) {
        let pos = p.index(w.len());
        prop_assert_eq!(w.switch(pos).unwrap().switch(pos).unwrap(), w);
    }

    #[test]
    fn skein_relation_at_random_positions(w in nonempty_word(4, 7), p in any::<prop::sample::Index>(), n in -2i64..=2) {
        let pos = p.index(w.len());
        let plus = w.set_sign(pos, true).unwrap();
        let minus = w.set_sign(pos, false).unwrap();
        let zero = w.smooth(pos).unwrap();
        for sys in [SkeinSystem::alexander(), SkeinSystem::jones(), SkeinSystem::homfly(n)] {
            let f = |x: &BraidWord| evaluate(x, &sys).unwrap();
            prop_assert!(sys.relation_holds(&f(&plus), &f(&minus), &f(&zero)));
        }
    }

    #[test]
    fn homfly_specializations(w in word(4, 7)) {
        prop_assert_eq!(evaluate(&w, &SkeinSystem::homfly(1)).unwrap(), evaluate(&w, &SkeinSystem::jones()).unwrap());
        prop_assert_eq!(evaluate(&w, &SkeinSystem::homfly(0)).unwrap(), evaluate(&w, &SkeinSystem::alexander()).unwrap());
    }

    #[test]
    fn mirror_covariance(w in word(4, 7)) {
        for sys in [SkeinSystem::jones(), SkeinSystem::homfly(2)] {
            prop_assert_eq!(evaluate(&w.mirror(), &sys).unwrap(), evaluate(&w, &sys).unwrap().involute());
        }
    }

    #[test]
    fn alexander_symmetry(w in word(4, 8)) {
        let a = evaluate(&w, &SkeinSystem::alexander()).unwrap();
        let sign = if closure_components(&w) % 2 == 1 { 1 } else { -1 };
        prop_assert_eq!(a.involute(), a.scale(&BigRational::from_integer(sign.into())));
    }

    #[test]
    fn markov_moves_preserve_invariants(w in word(4, 7), index in 1usize..=3, inverse in any::<bool>(), positive in any::<bool>()) {
        let e = builtin_jones().unwrap();
        let jones = evaluate(&w, &SkeinSystem::jones()).unwrap();
        let index = 1 + (index - 1) % (w.strands() - 1);
        let c = apply_markov(&w, MarkovMove::Conjugate { index, inverse }).unwrap();
        let s = apply_markov(&w, MarkovMove::Stabilize { positive }).unwrap();
        for x in [&c, &s] {
            prop_assert_eq!(&evaluate(x, &SkeinSystem::jones()).unwrap(), &jones);
            prop_assert_eq!(&normalized_trace_invariant(x, &e).unwrap(), &jones);
        }
        prop_assert_eq!(apply_markov(&s, MarkovMove::Destabilize).unwrap(), w);
    }

    #[test]
    fn braid_relations_hold_in_the_representation(i in 1usize..=2, tail in signed_letters(3, 3)) {
        let e = builtin_jones().unwrap();
        let j = 3 - i;
        let mut a = vec![i as i64, j as i64, i as i64];
        let mut b = vec![j as i64, i as i64, j as i64];
        a.extend(&tail);
        b.extend(&tail);
        prop_assert_eq!(
            represent(&BraidWord::from_signed(3, &a).unwrap(), &e).unwrap(),
            represent(&BraidWord::from_signed(3, &b).unwrap(), &e).unwrap()
        );
    }

    #[test]
    fn rescaling_is_undone(w in word(3, 6), k in -3i64..=3, c in 1i64..=3) {
        let e = builtin_jones().unwrap();
        let gamma = HalfLaurent::from_int_terms(&[(k, c)]);
        let scaled = rescale(&e, &gamma).unwrap();
        prop_assert_eq!(trace_invariant_rescaled(&w, &scaled, &gamma).unwrap(), trace_invariant(&w, &e).unwrap());
    }

    #[test]
    fn knot_expansion_starts_with_one_zero(w in knot_word(3, 7)) {
        let s = expand_invariant(&w, &builtin_jones().unwrap(), 2).unwrap();
        prop_assert_eq!(s.coeff(0), BigRational::from_integer(1.into()));
        prop_assert_eq!(s.coeff(1), BigRational::from_integer(0.into()));
        let c = BigRational::from_integer((-3 * v2(&w).unwrap()).into());
        prop_assert_eq!(s.coeff(2), c);
    }

    #[test]
    fn v2_is_a_knot_invariant(w in knot_word(3, 7), index in 1usize..=2, positive in any::<bool>()) {
        let v = v2(&w).unwrap();
        let index = 1 + (index - 1) % (w.strands() - 1);
        let c = apply_markov(&w, MarkovMove::Conjugate { index, inverse: !positive }).unwrap();
        let s = apply_markov(&w, MarkovMove::Stabilize { positive }).unwrap();
        prop_assert_eq!(v2(&c).unwrap(), v);
        prop_assert_eq!(v2(&s).unwrap(), v);
    }

    #[test]
    fn chord_canonical_form_ignores_rotation(order in 1usize..=5, seed in prop::collection::vec(any::<prop::sample::Index>(), 5), r in 0usize..10) {
        // a matching built by pairing off remaining points
        let mut free: Vec<usize> = (0..2 * order).collect();
        let mut pairs = Vec::new();
        for s in seed.iter().take(order) {
            let a = free.remove(0);
            let b = free.remove(s.index(free.len()));
            pairs.push((a, b));
        }
        let d = ChordDiagram::from_pairs(order, &pairs).unwrap();
        let len = 2 * order;
        let rotated: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| ((a + r) % len, (b + r) % len)).collect();
        prop_assert_eq!(&ChordDiagram::from_pairs(order, &rotated).unwrap(), &d);
        prop_assert_eq!(d.to_string().parse::<ChordDiagram>().unwrap(), d);
    }
}
