use proptest::prelude::*;

use facepair::group::{h1, simplify, tietze_eliminate, Letter, Presentation, Word};

fn word(gens: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, any::<bool>()), 0..max)
        .prop_map(|v| Word::new(v.into_iter().map(|(g, inv)| Letter::new(format!("g{g}"), inv)).collect()))
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..5).prop_flat_map(|k| {
        prop::collection::vec(word(k, 8), 0..5)
            .prop_map(move |rels| Presentation::new((0..k).map(|i| format!("g{i}")).collect(), rels).unwrap())
    })
}

proptest! {
    #[test]
    fn normal_form_ignores_rotation_and_inversion(w in word(3, 16), k in 0usize..16) {
        let nf = w.cyclic_normal_form();
        let r = w.cyclic_reduce();
        let rotated = if r.is_empty() { r.clone() } else { r.rotate(k % r.len()) };
        prop_assert_eq!(rotated.cyclic_normal_form(), nf.clone());
        prop_assert_eq!(w.inverse().cyclic_normal_form(), nf.clone());
        prop_assert!(nf.is_cyclically_reduced());
    }

    #[test]
    fn exponent_sums_survive_reduction(w in word(3, 20)) {
        for g in ["g0", "g1", "g2"] {
            prop_assert_eq!(w.free_reduce().exponent_sum(g), w.exponent_sum(g));
        }
    }

    #[test]
    fn tietze_moves_keep_homology(p in presentation()) {
        let before = h1(&p);
        prop_assert_eq!(h1(&simplify(&p)), before.clone());
        for g in p.generators.clone() {
            if let Ok(q) = tietze_eliminate(&p, &g) {
                prop_assert_eq!(h1(&q), before.clone());
            }
        }
    }
}
