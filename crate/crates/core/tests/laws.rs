mod common;

use common::*;
use lpfix::check::{run_checks, CheckCaps, CheckStatus};
use lpfix::interp::{knowledge_leq, InterpretationJson};
use lpfix::levelmap::{check_condition, extract_level_mapping_from_trace, Condition};
use lpfix::operators::{
    cw_op, gfp_definite, greatest_self_founded, lfp_definite, phi, reduct, tp, tp_plus,
};
use lpfix::semantics::{
    fitting_model, fitting_trace, maxstable_models, maxwf_model, maxwf_trace, stable_models,
    supported_models, well_founded_model, well_founded_trace,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn true_bodies_are_self_founded(seed in any::<u64>()) {
        let g = sized_program(seed, 6, 10, 0.5, false);
        let mut r = rng(seed);
        let i = random_partial(&mut r, g.len());
        let t = tp(&g, &i);
        prop_assert!(t.difference(i.neg()).is_subset(&greatest_self_founded(&g, &i)));
        if t.is_disjoint(i.neg()) {
            prop_assert!(knowledge_leq(&phi(&g, &i).unwrap(), &cw_op(&g, &i).unwrap()));
        }
    }

    #[test]
    fn reduct_fixpoints_are_extreme(seed in any::<u64>()) {
        let g = sized_program(seed, 5, 8, 0.5, false);
        let mut r = rng(seed);
        let m = random_set(&mut r, g.len());
        let red = reduct(&g, &m);
        let (lfp, gfp) = (lfp_definite(&red), gfp_definite(&red));
        let p = red.program();
        prop_assert!(lfp.is_subset(&gfp));
        prop_assert_eq!(tp_plus(p, &lfp), lfp.clone());
        prop_assert_eq!(tp_plus(p, &gfp), gfp.clone());
        for x in subsets(g.len()).filter(|x| &tp_plus(p, x) == x) {
            prop_assert!(lfp.is_subset(&x) && x.is_subset(&gfp));
        }
    }

    #[test]
    fn fitting_is_the_least_informative(seed in any::<u64>()) {
        let g = sized_program(seed, 8, 12, 0.5, false);
        let fit = fitting_model(&g).unwrap();
        prop_assert!(knowledge_leq(&fit, &well_founded_model(&g).unwrap()));
        prop_assert!(knowledge_leq(&fit, &maxwf_model(&g).unwrap()));
    }

    #[test]
    fn stable_family_is_supported(seed in any::<u64>()) {
        let g = sized_program(seed, 6, 10, 0.5, false);
        let supported = supported_models(&g, 20).unwrap();
        let wf = well_founded_model(&g).unwrap();
        let mw = maxwf_model(&g).unwrap();
        for m in stable_models(&g, 20).unwrap() {
            prop_assert!(supported.contains(&m));
            prop_assert!(wf.pos().is_subset(&m) && wf.neg().is_disjoint(&m));
        }
        for m in maxstable_models(&g, 20).unwrap() {
            prop_assert!(supported.contains(&m));
            prop_assert!(mw.pos().is_subset(&m) && mw.neg().is_disjoint(&m));
        }
    }

    #[test]
    fn trace_levels_witness_the_conditions(seed in any::<u64>()) {
        let g = sized_program(seed, 6, 10, 0.5, false);
        let n = g.len();
        for (trace, c) in [
            (fitting_trace(&g).unwrap(), Condition::F),
            (well_founded_trace(&g).unwrap(), Condition::Wf),
            (maxwf_trace(&g).unwrap(), Condition::Cw),
        ] {
            let l = extract_level_mapping_from_trace(&trace, n);
            prop_assert!(check_condition(&g, trace.fixpoint(), &l, c).unwrap(), "{}", c);
        }
    }

    #[test]
    fn checks_pass_on_random_programs(seed in any::<u64>(), stratified in any::<bool>()) {
        let g = sized_program(seed, 5, 8, 0.5, stratified);
        let report = run_checks(&g, &CheckCaps::default());
        for c in &report.checks {
            prop_assert!(c.status != CheckStatus::Fail, "{:?}", c);
        }
    }

    #[test]
    fn interpretation_json_round_trips(seed in any::<u64>()) {
        let g = sized_program(seed, 8, 12, 0.5, false);
        let i = random_partial(&mut rng(seed), g.len());
        let text = serde_json::to_string(&InterpretationJson::new(&g, &i)).unwrap();
        let back: InterpretationJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_interpretation(&g).unwrap(), i);
    }
}
