//! Randomized invariants.

mod common;

use common::{dominant_integral, group, weight};
use hwmod::character::{character_support, kostant_table, verma_character, wcf_character};
use hwmod::hwmodule::{
    antidominant, formulas_agree, j_lambda, weights_hull_intersection, weights_levi_shift, Offset,
};
use hwmod::oracle::{verma_multiplicity, Oracle};
use hwmod::polyhedron::{h_to_v, hull_of, module_h_rep, v_to_h, VPolyhedron};
use hwmod::rational::{fmt_vector, int, Rational};
use hwmod::{HWModule, IndexSet, ModuleClass, RootSystem, Weight};
use proptest::prelude::*;

fn rank2() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("A2"), Just("B2"), Just("G2"), Just("A1xA1")]
}

fn typed_weight() -> impl Strategy<Value = (&'static str, Weight)> {
    rank2().prop_flat_map(|t| (Just(t), weight(2)))
}

/// A descriptor for `lambda`: Verma, Simple, or `M(lambda, J')` for a
/// subset `J'` of `J_lambda` picked by `bits`.
fn descriptor(rs: &RootSystem, lambda: &Weight, choice: u8, bits: u64) -> HWModule {
    let class = match choice % 3 {
        0 => ModuleClass::Verma,
        1 => ModuleClass::Simple,
        _ => ModuleClass::ParabolicVerma(IndexSet::from_bits(bits).intersection(j_lambda(lambda))),
    };
    HWModule::new(rs, lambda.clone(), class).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn weight_text_round_trips(w in weight(3)) {
        prop_assert_eq!(Weight::parse(&fmt_vector(w.coords())).unwrap(), w);
    }

    #[test]
    fn root_coordinates_invert((t, w) in typed_weight()) {
        let rs = RootSystem::from_type(t).unwrap();
        prop_assert_eq!(rs.from_root_coords(&rs.root_coords(&w).unwrap()), w);
    }

    #[test]
    fn weyl_group_preserves_the_form((t, u) in typed_weight(), v in weight(2)) {
        let g = group(t);
        let rs = g.root_system();
        let before = rs.bilinear(&u, &v).unwrap();
        for w in g.full().unwrap().iter() {
            prop_assert_eq!(rs.bilinear(&w.act(&u), &w.act(&v)).unwrap(), before.clone());
        }
    }

    #[test]
    fn dot_action_is_an_action((t, lam) in typed_weight()) {
        let g = group(t);
        let full = g.full().unwrap();
        for u in full.iter() {
            for w in full.iter() {
                let lhs = g.dot_action(&u.compose(w), &lam);
                prop_assert_eq!(lhs, g.dot_action(u, &g.dot_action(w, &lam)));
            }
        }
    }

    #[test]
    fn orbit_stabilizer((t, lam) in typed_weight()) {
        let g = group(t);
        let full = g.full().unwrap();
        let stab = full.iter().filter(|w| w.act(&lam) == lam).count();
        prop_assert_eq!(g.orbit(g.root_system().index_set(), &lam).unwrap().len() * stab, full.len());
    }

    #[test]
    fn three_formulas_agree((t, lam) in typed_weight(), choice in 0u8..3, bits in 0u64..4) {
        let g = group(t);
        let m = descriptor(g.root_system(), &lam, choice, bits);
        let r = formulas_agree(&g, &m, 5).unwrap();
        prop_assert!(r.all_agree(), "{}", r.disagreements().join("; "));
    }

    #[test]
    fn containment_chain((t, lam) in typed_weight(), bits in 0u64..4) {
        let g = group(t);
        let rs = g.root_system();
        let jl = j_lambda(&lam);
        let jp = IndexSet::from_bits(bits).intersection(jl);
        let depth = 5;
        let simple = weights_levi_shift(rs, &HWModule::simple(rs, lam.clone()).unwrap(), depth).unwrap().support();
        let pv = weights_levi_shift(rs, &HWModule::parabolic(rs, lam.clone(), jp).unwrap(), depth).unwrap().support();
        let verma = weights_levi_shift(rs, &HWModule::verma(rs, lam.clone()).unwrap(), depth).unwrap().support();
        prop_assert!(simple.is_subset(&pv));
        prop_assert!(pv.is_subset(&verma));
    }

    #[test]
    fn hull_contains_formula_b_and_its_vertices((t, lam) in typed_weight(), choice in 0u8..3, bits in 0u64..4) {
        let g = group(t);
        let rs = g.root_system();
        let m = descriptor(rs, &lam, choice, bits);
        let h = module_h_rep(&g, &m).unwrap();
        for w in weights_levi_shift(rs, &m, 5).unwrap().weights(rs) {
            prop_assert!(h.contains(&rs.root_coords(&w).unwrap()));
        }
        for v in hull_of(&g, &m).unwrap().vertices() {
            prop_assert!(h.contains(v));
        }
    }

    #[test]
    fn hull_representations_round_trip((t, lam) in typed_weight(), choice in 0u8..3, bits in 0u64..4) {
        let g = group(t);
        let m = descriptor(g.root_system(), &lam, choice, bits);
        let p = hull_of(&g, &m).unwrap();
        let h = v_to_h(&p).unwrap();
        let back = h_to_v(&h).unwrap();
        prop_assert_eq!(&back, &p.canonical().unwrap());
        prop_assert_eq!(v_to_h(&back).unwrap(), h);
    }

    #[test]
    fn oracle_bounded_by_kostant((t, lam) in typed_weight()) {
        let g = group(t);
        let rs = g.root_system();
        let oracle = Oracle::with_cap(rs, &lam, 4).unwrap();
        let anti = antidominant(rs, &lam).unwrap();
        for (k, c) in kostant_table(rs, 4) {
            let m = oracle.simple_multiplicity(&k.0).unwrap();
            prop_assert_eq!(c, verma_multiplicity(rs, &k.0) as i64);
            prop_assert!(m as i64 <= c);
            if anti {
                prop_assert_eq!(m as i64, c);
            }
        }
    }

    #[test]
    fn gram_matrices_are_symmetric((t, lam) in typed_weight(), a in 0i64..3, b in 0i64..3) {
        let rs = RootSystem::from_type(t).unwrap();
        let gram = Oracle::with_cap(&rs, &lam, 4).unwrap().gram_matrix(&[a, b]).unwrap();
        prop_assert!(gram.is_symmetric());
    }

    #[test]
    fn oracle_support_is_levi_stable((t, lam) in typed_weight()) {
        let g = group(t);
        let rs = g.root_system();
        let depth = 5;
        let support = Oracle::with_cap(rs, &lam, depth).unwrap().weight_support(depth).unwrap();
        let a = rs.cartan();
        for k in support.offsets() {
            for i in j_lambda(&lam).iter() {
                // s_i (lambda - k) = lambda - k - mu(h_i) alpha_i.
                let mu_i = lam.coord(i) - int((0..rs.rank()).map(|j| a[i][j] * k.0[j]).sum());
                let mut image = k.clone();
                image.0[i] += mu_i.to_integer().try_into().unwrap_or(i64::MAX / 2);
                if image.0[i] >= 0 && image.height() <= i64::from(depth) {
                    prop_assert!(support.contains(&image), "{:?} -> {:?}", k.0, image.0);
                }
            }
        }
    }

    #[test]
    fn wcf_agrees_with_oracle_and_formula_b((t, lam) in typed_weight()) {
        let g = group(t);
        let rs = g.root_system();
        prop_assume!(g.wcf_condition_holds(&lam).unwrap());
        let depth = 5;
        let ch = wcf_character(&g, &lam, depth).unwrap();
        prop_assert!(ch.is_nonnegative());
        prop_assert_eq!(ch.coeff(&Offset::zero(2)), 1);
        let b = weights_levi_shift(rs, &HWModule::simple(rs, lam.clone()).unwrap(), depth).unwrap();
        prop_assert!(character_support(&ch).same_support(&b));
        let oracle = Oracle::with_cap(rs, &lam, depth).unwrap();
        for k in hwmod::hwmodule::offsets_up_to(2, rs.index_set(), depth) {
            prop_assert_eq!(oracle.simple_multiplicity(&k.0).unwrap() as i64, ch.coeff(&k));
        }
        if antidominant(rs, &lam).unwrap() {
            prop_assert_eq!(ch, verma_character(rs, &lam, depth).unwrap());
        }
    }

    #[test]
    fn finite_dimensional_total_is_the_dimension(t in rank2(), lam in dominant_integral(2, 2)) {
        let g = group(t);
        let rs = g.root_system();
        let ch = wcf_character(&g, &lam, 40).unwrap();
        prop_assert_eq!(int(ch.total()), hwmod::character::weyl_dimension(rs, &lam).unwrap());
        let a = weights_hull_intersection(&g, &HWModule::simple(rs, lam.clone()).unwrap(), 40).unwrap();
        prop_assert!(character_support(&ch).same_support(&a));
    }

    #[test]
    fn point_clouds_round_trip(
        pts in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..7),
        rays in proptest::collection::vec(proptest::collection::vec(-2i64..=0, 3), 0..3),
    ) {
        let to_q = |v: &Vec<i64>| -> Vec<Rational> { v.iter().map(|&x| int(x)).collect() };
        let rays: Vec<Vec<Rational>> = rays.iter().filter(|r| r.iter().any(|&x| x != 0)).map(to_q).collect();
        let p = VPolyhedron::new(3, pts.iter().map(to_q).collect(), rays);
        let h = v_to_h(&p).unwrap();
        for v in p.vertices() {
            prop_assert!(h.contains(v));
        }
        let back = h_to_v(&h).unwrap();
        prop_assert_eq!(&back, &p.canonical().unwrap());
        prop_assert_eq!(v_to_h(&back).unwrap(), h);
    }
}
