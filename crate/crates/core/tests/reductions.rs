//! Round trips through the caterpillar reductions on toy instances.

use bwlab::graph::{bandwidth_of_layout, directed_bandwidth_of_order, validate_caterpillar, DirectedStretch};
use bwlab::sat2wpe::{build_wpe_instance, pad_assignment, pad_for_strong_np, Variant};
use bwlab::formula::{parse_formula, Assignment};
use bwlab::wpe::{check_uniform_emulation, solve_wpe_brute, EmulationMap, End, Pins, WpeInstance};
use bwlab::wpe2bw::{
    build_caterpillar, build_layout_witness, extract_emulation, normalize_factor, BuildError, CaterpillarConstants, WitnessError,
};
use bwlab::wpe2dbw::{build_dag, build_order_witness};
use bwlab::SearchLimits;

/// All weight vectors of length `n` with entries in `1..=c` summing to `total`.
fn compositions(n: usize, c: u64, total: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for w in 1..=c.min(total) {
        for mut rest in compositions(n - 1, c, total - w) {
            rest.insert(0, w);
            out.push(rest);
        }
    }
    out
}

/// Yes-instances with the given pins, `N <= 5`, `M <= 3`, `c <= 4`.
fn toy_yes_instances(pins: Pins) -> Vec<(WpeInstance, EmulationMap)> {
    let mut out = Vec::new();
    for m in 1..=3 {
        for c in 1..=4 {
            for n in 1..=5 {
                for w in compositions(n, c, c * m) {
                    let inst = WpeInstance::new(&w, m, c, pins).unwrap();
                    if let Some(f) = solve_wpe_brute(&inst, SearchLimits::default()).unwrap() {
                        out.push((inst, f));
                    }
                }
            }
        }
    }
    out
}

/// Every `step`th element, always keeping the first and the last.
fn sample<T: Clone>(v: &[T], step: usize) -> Vec<T> {
    let mut out: Vec<T> = v.iter().step_by(step).cloned().collect();
    if v.len() % step != 1 {
        out.extend(v.last().cloned());
    }
    out
}

#[test]
fn caterpillar_round_trips() {
    let all = toy_yes_instances(Pins { first: Some(End::M), last: None });
    assert!(all.len() > 20);
    for (inst, f) in sample(&all, all.len() / 12) {
        let norm = normalize_factor(&inst).unwrap();
        let con = build_caterpillar(&norm).unwrap();
        assert_eq!(con.alpha_recount, con.constants.alpha);
        let layout = build_layout_witness(&con, &f).unwrap_or_else(|e| panic!("{inst:?} {f:?}: {e}"));
        assert!(bandwidth_of_layout(&con.graph, &layout).unwrap() <= con.constants.k);
        let got = extract_emulation(&con, &layout).unwrap();
        assert!(got.report.is_valid(), "{inst:?}: {:?}", got.report);
        assert_eq!(got.map, f);
    }
}

#[test]
fn dag_round_trips() {
    let all = toy_yes_instances(Pins { first: Some(End::M), last: Some(End::M) });
    assert!(all.len() > 5);
    for (inst, f) in sample(&all, (all.len() / 6).max(1)) {
        let con = build_dag(&normalize_factor(&inst).unwrap()).unwrap();
        let under = con.digraph.underlying().unwrap();
        assert!(validate_caterpillar(&under).unwrap().max_hair_len() <= 1);
        let order = build_order_witness(&con, &f).unwrap_or_else(|e| panic!("{inst:?} {f:?}: {e}"));
        match directed_bandwidth_of_order(&con.digraph, &order).unwrap() {
            DirectedStretch::Feasible(s) => assert!(s <= con.constants.k),
            other => panic!("{inst:?}: {other:?}"),
        }
    }
}

#[test]
fn witness_is_deterministic() {
    let inst = normalize_factor(&WpeInstance::new(&[2, 1, 2, 1], 3, 2, Pins { first: Some(End::M), last: None }).unwrap()).unwrap();
    let f = EmulationMap::from_positions(&[3, 2, 1, 2]);
    let a = build_layout_witness(&build_caterpillar(&inst).unwrap(), &f).unwrap();
    let b = build_layout_witness(&build_caterpillar(&inst).unwrap(), &f).unwrap();
    assert_eq!(a, b);
}

#[test]
fn non_emulations_are_refused_by_the_witness() {
    let inst = normalize_factor(&WpeInstance::new(&[2, 1, 2, 1], 3, 2, Pins { first: Some(End::M), last: None }).unwrap()).unwrap();
    let con = build_caterpillar(&inst).unwrap();
    let err = build_layout_witness(&con, &EmulationMap::from_positions(&[3, 1, 1, 2])).unwrap_err();
    assert!(matches!(err, WitnessError::NotEmulation(_)), "{err}");
    assert!(build_layout_witness(&con, &EmulationMap::from_positions(&[3, 2])).is_err());
}

#[test]
fn reduced_formulas_are_too_large_to_build_but_have_stats() {
    let f = parse_formula("(and (or x1 x2))").unwrap();
    let con = build_wpe_instance(&f, 1, Variant::FirstM).unwrap();
    let cs = CaterpillarConstants::new(&con.instance).unwrap();
    assert_eq!(cs.b, 12 * cs.c + 6);
    assert!(cs.alpha <= cs.non_turning());
    assert!(matches!(build_caterpillar(&con.instance), Err(BuildError::TooLarge { .. })));
}

#[test]
fn padding_keeps_witnesses_valid() {
    let f = parse_formula("(and (or x1 (not x2)) (or x2 x3))").unwrap();
    let (padded, k) = pad_for_strong_np(&f).unwrap();
    assert_eq!((padded.num_vars(), k), (6, 3));
    let con = build_wpe_instance(&padded, k, Variant::Free).unwrap();
    for a in [Assignment::from_vars([1, 3]), Assignment::from_vars([1, 2])] {
        let big = pad_assignment(&a, k);
        assert_eq!(big.len(), 3);
        let map = bwlab::sat2wpe::build_emulation_witness(&con, &big).unwrap();
        assert!(check_uniform_emulation(&con.instance, &map).unwrap().is_valid());
    }
    // the emulation factor stays polynomial in k, so weights do not blow up
    assert!(con.instance.max_weight() <= con.c());
}
